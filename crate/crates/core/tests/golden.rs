//! Golden values checked against brute-force oracles that share no code with
//! the orbit engine: union-find over rows and rank counts over F_3.

use serde_json::Value;
use transvect_core::orbits::{
    check_orbit_equality, enumerate_unimodular, generators_for, orbit_partition, relative_symplectic_closure,
    subgroup_closure, GroupFamily, GroupSpec, DEFAULT_BUDGET, DEFAULT_CAP,
};
use transvect_core::{Ideal, Ring};

fn golden(key: &str) -> u64 {
    let v: Value = serde_json::from_str(include_str!("../data/golden.json")).unwrap();
    v["values"][key].as_u64().unwrap_or_else(|| panic!("no golden value {key}"))
}

type Mat = Vec<Vec<i64>>;

fn sigma(i: usize) -> usize {
    if i % 2 == 0 {
        i - 1
    } else {
        i + 1
    }
}

/// se_ij(z) built entrywise from its definition (1-based indices).
fn se(size: usize, i: usize, j: usize, z: i64, m: i64) -> Mat {
    let mut a: Mat = (0..size).map(|r| (0..size).map(|c| i64::from(r == c)).collect()).collect();
    if i == sigma(j) {
        a[i - 1][j - 1] = z.rem_euclid(m);
    } else {
        let s = if (i + j) % 2 == 0 { 1 } else { -1 };
        a[i - 1][j - 1] = z.rem_euclid(m);
        a[sigma(j) - 1][sigma(i) - 1] = (-s * z).rem_euclid(m);
    }
    a
}

fn el(size: usize, i: usize, j: usize, z: i64, m: i64) -> Mat {
    let mut a: Mat = (0..size).map(|r| (0..size).map(|c| i64::from(r == c)).collect()).collect();
    a[i - 1][j - 1] = z.rem_euclid(m);
    a
}

fn row_times(v: &[i64], a: &Mat, m: i64) -> Vec<i64> {
    (0..v.len()).map(|c| (0..v.len()).map(|r| v[r] * a[r][c]).sum::<i64>().rem_euclid(m)).collect()
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let nx = p[y];
        p[y] = r;
        y = nx;
    }
    r
}

/// Number of components of the rows in `universe` under the generators.
fn union_find_orbits(universe: &[Vec<i64>], gens: &[Mat], m: i64) -> usize {
    let index: std::collections::HashMap<&[i64], usize> =
        universe.iter().enumerate().map(|(k, v)| (v.as_slice(), k)).collect();
    let mut p: Vec<usize> = (0..universe.len()).collect();
    for (k, v) in universe.iter().enumerate() {
        for g in gens {
            let w = row_times(v, g, m);
            let t = *index.get(w.as_slice()).expect("generators preserve the universe");
            let (a, b) = (find(&mut p, k), find(&mut p, t));
            p[a] = b;
        }
    }
    (0..universe.len()).filter(|&k| find(&mut p, k) == k).count()
}

/// All rows of (Z/m)^n whose entries generate the unit ideal, by gcd.
fn unimodular(m: i64, n: usize) -> Vec<Vec<i64>> {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    let total = (m as usize).pow(n as u32);
    (0..total)
        .map(|mut k| {
            let mut v = vec![0; n];
            for e in v.iter_mut().rev() {
                *e = (k % m as usize) as i64;
                k /= m as usize;
            }
            v
        })
        .filter(|v| v.iter().fold(m, |g, &x| gcd(g, x)) == 1)
        .collect()
}

fn rank_mod3(rows: Vec<Vec<i64>>) -> usize {
    let mut rows: Vec<Vec<i64>> = rows.into_iter().map(|r| r.into_iter().map(|x| x.rem_euclid(3)).collect()).collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c]; // 1 and 2 are self-inverse mod 3
        for x in rows[rank].iter_mut() {
            *x = (*x * inv) % 3;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] - f * rows[rank][k]).rem_euclid(3);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn psi(size: usize) -> Mat {
    let mut j: Mat = vec![vec![0; size]; size];
    for k in (0..size).step_by(2) {
        j[k][k + 1] = 1;
        j[k + 1][k] = -1;
    }
    j
}

#[test]
fn symplectic_group_order_over_gf3() {
    let q: u64 = 3;
    assert_eq!(q.pow(4) * (q * q - 1) * (q.pow(4) - 1), golden("closure/sp4-gf3"));
    let r = Ring::parse("gf:3").unwrap();
    let gens: Vec<_> = generators_for(&GroupSpec::new(GroupFamily::SymplecticEsp, 4, &r, None).unwrap(), true)
        .unwrap()
        .into_iter()
        .map(|g| g.matrix)
        .collect();
    assert_eq!(subgroup_closure(4, 3, &gens, None, DEFAULT_CAP).unwrap().size() as u64, golden("closure/sp4-gf3"));
}

#[test]
fn relative_closure_is_the_congruence_kernel() {
    // I + 3X is symplectic mod 9 iff X^t ψ + ψ X ≡ 0 mod 3, a linear condition on X
    let j = psi(4);
    let mut equations = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            let mut eq = vec![0i64; 16];
            for k in 0..4 {
                eq[k * 4 + a] += j[k][b];
                eq[k * 4 + b] += j[a][k];
            }
            equations.push(eq);
        }
    }
    let kernel = 3u64.pow(16 - rank_mod3(equations) as u32);
    assert_eq!(kernel, golden("closure/rel-zmod9-4-3"));
    let r = Ring::parse("zmod:9").unwrap();
    let i = Ideal::parse(&r, "3").unwrap();
    assert_eq!(relative_symplectic_closure(&r, 4, &i, DEFAULT_CAP).unwrap().size() as u64, kernel);
}

#[test]
fn square_zero_generated_group_is_elementary_abelian() {
    // (I + 3A)(I + 3B) = I + 3(A + B) mod 9, so the group is the F_3-span of the A_ij
    let mut vecs = Vec::new();
    for i in 1..=4 {
        for j in 1..=4 {
            if i != j {
                let a = se(4, i, j, 1, 9);
                vecs.push((0..16).map(|k| a[k / 4][k % 4] - i64::from(k / 4 == k % 4)).collect());
            }
        }
    }
    assert_eq!(3u64.pow(rank_mod3(vecs) as u32), golden("closure/gen-zmod9-4-3"));
}

#[test]
fn first_rowcol_orbit_counts() {
    let uni = unimodular(9, 4);
    assert_eq!(uni.len(), 6480);
    let mut lin = Vec::new();
    let mut sp = Vec::new();
    for j in 2..=4 {
        lin.push(el(4, 1, j, 1, 9));
        lin.push(el(4, j, 1, 3, 9));
        sp.push(se(4, 1, j, 1, 9));
        sp.push(se(4, j, 1, 3, 9));
    }
    let r = Ring::parse("zmod:9").unwrap();
    let i = Ideal::parse(&r, "3").unwrap();
    let engine = |fam| {
        let u = enumerate_unimodular(&r, 4, None, DEFAULT_BUDGET).unwrap();
        let g = generators_for(&GroupSpec::new(fam, 4, &r, Some(&i)).unwrap(), true).unwrap();
        orbit_partition(&u, &g, 9).unwrap().orbit_count() as u64
    };
    assert_eq!(union_find_orbits(&uni, &lin, 9) as u64, golden("orbits/e1-zmod9-4-3"));
    assert_eq!(union_find_orbits(&uni, &sp, 9) as u64, golden("orbits/esp1-zmod9-4-3"));
    assert_eq!(engine(GroupFamily::FirstRowcolE), golden("orbits/e1-zmod9-4-3"));
    assert_eq!(engine(GroupFamily::FirstRowcolEsp), golden("orbits/esp1-zmod9-4-3"));
}

#[test]
fn orbit_equality_counts() {
    for (ring, size, ideal, key) in [
        ("zmod:3", 4, None, "zmod3-4-full"),
        ("zmod:9", 4, Some("3"), "zmod9-4-3"),
        ("zmod:15", 4, Some("5"), "zmod15-4-5"),
        ("zmod:3", 6, None, "zmod3-6-full"),
    ] {
        let r = Ring::parse(ring).unwrap();
        let i = ideal.map(|s| Ideal::parse(&r, s).unwrap());
        let rep = check_orbit_equality(&r, size, i.as_ref(), DEFAULT_BUDGET).unwrap();
        assert!(rep.equal, "{key}");
        assert_eq!(rep.linear_orbit_count as u64, golden(&format!("orbit-equality/{key}")));
    }
}
