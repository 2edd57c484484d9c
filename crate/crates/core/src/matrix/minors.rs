use super::Matrix;
use crate::ring::Elem;
use std::collections::HashMap;

/// Division-free determinant: Laplace expansion along rows, memoized on the
/// set of used columns.
pub(super) fn det(m: &Matrix) -> Elem {
    let n = m.n();
    assert!(n <= 20, "determinant size {n} too large");
    let ring = m.ring();
    // dp[mask] = sum over bijections rows 1..|mask| -> mask, signed.
    let mut dp: HashMap<u32, Elem> = HashMap::new();
    dp.insert(0, ring.one());
    for row in 1..=n {
        let mut next: HashMap<u32, Elem> = HashMap::new();
        for (mask, val) in &dp {
            if val.is_zero() {
                continue;
            }
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let a = m.get(row, col + 1);
                if a.is_zero() {
                    continue;
                }
                // Sign of placing column `col` after the columns already used:
                // one inversion per used column greater than `col`.
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = val * a;
                if inversions % 2 == 1 {
                    term = -term;
                }
                let slot = next.entry(mask | (1 << col)).or_insert_with(|| ring.zero());
                *slot = &*slot + &term;
            }
        }
        dp = next;
    }
    dp.remove(&((1u32 << n) - 1)).unwrap_or_else(|| ring.zero())
}

/// Sum over perfect matchings with Pf(ψ_n) = 1, memoized on the remaining set.
pub(super) fn pfaffian(m: &Matrix) -> Elem {
    let mut memo: HashMap<u32, Elem> = HashMap::new();
    let full = (1u32 << m.n()) - 1;
    pf_rec(m, full, &mut memo)
}

fn pf_rec(m: &Matrix, mask: u32, memo: &mut HashMap<u32, Elem>) -> Elem {
    let ring = m.ring();
    if mask == 0 {
        return ring.one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let i = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << i);
    let mut acc = ring.zero();
    let mut pos = 0;
    for j in i + 1..m.n() {
        if rest & (1 << j) == 0 {
            continue;
        }
        let a = m.get(i + 1, j + 1);
        if !a.is_zero() {
            let sub = pf_rec(m, rest & !(1 << j), memo);
            let term = a * &sub;
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
        }
        pos += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}
