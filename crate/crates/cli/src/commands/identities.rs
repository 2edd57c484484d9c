use crate::report::{Outcome, RunReport};
use crate::{DecomposeCheck, FormChoice};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::BTreeMap;
use transvect_core::identities::dilation::{case_table, CaseEntry, DilationContext};
use transvect_core::identities::relations::{
    has_correction, verify_relation_suite, RelationForm, RelationReport, SuiteMode, RELATION_IDS,
};
use transvect_core::identities::splice::splice_telescoping;
use transvect_core::identities::square_ideal::conjugate_square_ideal;
use transvect_core::ring::sample_element;
use transvect_core::words::{
    bass_symplectic_transvection, decompose_mu, decompose_rho, extended_form, mu_matrix, rho_matrix, Atom, Word,
};
use transvect_core::{standard_form, Elem, Error, Ideal, Matrix, Result, Ring};

fn failing_tuples(reps: &[&RelationReport]) -> Vec<Vec<usize>> {
    reps.iter().filter(|r| !r.holds).map(|r| r.indices.clone()).collect()
}

pub(super) fn verify_relations(
    report: &mut RunReport,
    ring: &str,
    ns: &[usize],
    samples: usize,
    form: FormChoice,
    seed: u64,
) -> Result<()> {
    let ring = Ring::parse(ring)?;
    let mode = if samples == 0 { SuiteMode::Symbolic } else { SuiteMode::Sampled { count: samples, seed } };
    let forms: &[RelationForm] = match form {
        FormChoice::Printed => &[RelationForm::Printed],
        FormChoice::Corrected => &[RelationForm::Corrected],
        FormChoice::Both => &[RelationForm::Corrected, RelationForm::Printed],
    };
    for &n in ns {
        for &f in forms {
            let reps = verify_relation_suite(n, &ring, mode, f)?;
            for id in RELATION_IDS {
                let mine: Vec<&RelationReport> = reps.iter().filter(|r| r.id == id).collect();
                let failures = failing_tuples(&mine);
                // with both forms, a printed failure that the corrected form repairs is an erratum
                let erratum = form == FormChoice::Both && f == RelationForm::Printed && has_correction(id);
                let ok = failures.is_empty() || erratum;
                let tag = match f {
                    RelationForm::Printed => "printed",
                    RelationForm::Corrected => "corrected",
                };
                let mut detail = json!({ "tuples": mine.len(), "failures": failures.len() });
                if !failures.is_empty() {
                    detail["failing-tuples"] = json!(failures);
                    detail["erratum"] = json!(erratum);
                }
                report.push(Outcome::new(format!("n{n}/relation-{id}/{tag}"), ok, detail));
            }
        }
    }
    Ok(())
}

fn frozen_cases() -> Result<Vec<CaseEntry>> {
    let raw = crate::fixtures::dilation_cases().map_err(Error::Precondition)?;
    serde_json::from_str(&raw).map_err(|e| Error::Parse(format!("dilation case table: {e}")))
}

pub(super) fn dilate_table(report: &mut RunReport, ns: &[usize], max_exponent: u32) -> Result<()> {
    let frozen = frozen_cases()?;
    for &n in ns {
        let entries = case_table(n, max_exponent)?;
        let mut by_kind: BTreeMap<String, (usize, u32)> = BTreeMap::new();
        for e in &entries {
            let k = by_kind.entry(e.kind.clone()).or_default();
            k.0 += 1;
            k.1 = k.1.max(e.exponent);
        }
        let old: Vec<&CaseEntry> = frozen.iter().filter(|e| e.size == 2 * n).collect();
        let matches = if old.is_empty() { None } else { Some(old.len() == entries.len() && old.iter().zip(&entries).all(|(a, b)| *a == b)) };
        let kinds: BTreeMap<String, serde_json::Value> =
            by_kind.into_iter().map(|(k, (c, e))| (k, json!({ "count": c, "max-exponent": e }))).collect();
        report.push(Outcome::new(
            format!("size{}", 2 * n),
            matches.unwrap_or(true),
            json!({ "entries": entries.len(), "all-valid": true, "kinds": kinds, "matches-frozen": matches }),
        ));
    }
    Ok(())
}

pub(super) fn dilate_word(
    report: &mut RunReport,
    ns: &[usize],
    word: &str,
    target: &str,
    base: &str,
    vars: &[String],
    max_exponent: u32,
) -> Result<()> {
    let n = *ns.first().ok_or_else(|| Error::Parse("--n is empty".into()))?;
    let t: Vec<usize> = target
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad target {target:?}"))))
        .collect::<Result<_>>()?;
    if t.len() != 2 {
        return Err(Error::Parse(format!("bad target {target:?}")));
    }
    let cx = DilationContext::standard(n, vars)?;
    let eps = Word::parse_inline(&cx.ring, cx.size(), word)?;
    let base = cx.ring.parse_elem(base)?;
    let res = cx.dilate_word(&eps, t[0], t[1], &base, max_exponent)?;
    report.push(Outcome::new(
        "rewrite",
        res.valid(),
        json!({
            "ring": cx.ring.to_string(),
            "exponent": res.exponent,
            "certificate": res.certificate,
            "first-rowcol": res.first_rowcol,
            "y-divisible": res.y_divisible,
            "ideal-membership": res.ideal_membership,
            "length": res.rhs.len(),
            "rhs": res.rhs.to_inline(),
        }),
    ));
    Ok(())
}

fn symbolic_vectors(n: usize) -> Result<(Ring, Vec<Elem>, Elem)> {
    let mut names: Vec<String> = (1..=2 * n).map(|k| format!("q{k}")).collect();
    names.push("t".into());
    let r = Ring::poly_owned(&Ring::dyadic(), names)?;
    let q = (0..2 * n).map(|k| r.var_at(k)).collect();
    let t = r.var_at(2 * n);
    Ok((r, q, t))
}

/// Whether the ρ/μ words evaluate to the matrices, and the matrices are symplectic.
fn words_hold(q: &[Elem], t: &Elem, symplectic: bool) -> Result<bool> {
    let ring = t.ring();
    let psi = standard_form(ring, q.len() / 2);
    let rho = rho_matrix(q, t, &psi)?;
    let mu = mu_matrix(q, t, &psi)?;
    let mut ok = decompose_rho(q, t)?.eval()? == rho && decompose_mu(q, t)?.eval()? == mu;
    if symplectic {
        let big = extended_form(&psi)?;
        ok &= rho.is_symplectic(&big)? && mu.is_symplectic(&big)?;
    }
    Ok(ok)
}

/// Bass transvections for u = (0,1,0) and u = (−1,0,0), v = (0,0,q), against ρ and μ.
fn bass_holds(q: &[Elem], t: &Elem) -> Result<(bool, bool)> {
    let ring = t.ring();
    let psi = standard_form(ring, q.len() / 2);
    let big = extended_form(&psi)?;
    let z = ring.zero();
    let mut v = vec![z.clone(), z.clone()];
    v.extend(q.iter().cloned());
    let mut u = vec![z.clone(); q.len() + 2];
    u[1] = ring.one();
    let rho = bass_symplectic_transvection(&u, &v, t, &big)? == rho_matrix(q, t, &psi)?;
    let mut u = vec![z; q.len() + 2];
    u[0] = -ring.one();
    let mu = bass_symplectic_transvection(&u, &v, t, &big)? == mu_matrix(q, t, &psi)?;
    Ok((rho, mu))
}

pub(super) fn decompose(
    report: &mut RunReport,
    check: DecomposeCheck,
    rings: &[String],
    ns: &[usize],
    samples: usize,
    symbolic: bool,
    seed: u64,
) -> Result<()> {
    for &n in ns {
        if n == 0 {
            return Err(Error::Size("n must be positive".into()));
        }
        if symbolic {
            let (r, q, t) = symbolic_vectors(n)?;
            let (ok, detail) = match check {
                DecomposeCheck::Words => {
                    let ok = words_hold(&q, &t, true)?;
                    (ok, json!({ "ring": r.to_string(), "holds": ok }))
                }
                DecomposeCheck::Bass => {
                    let (a, b) = bass_holds(&q, &t)?;
                    (a && b, json!({ "ring": r.to_string(), "rho": a, "mu": b }))
                }
            };
            report.push(Outcome::new(format!("symbolic/n{n}"), ok, detail));
        }
        for name in rings {
            let ring = Ring::parse(name)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut rho_fail, mut mu_fail) = (0usize, 0usize);
            for _ in 0..samples {
                let q: Vec<Elem> = (0..2 * n).map(|_| sample_element(&ring, None, &mut rng)).collect::<Result<_>>()?;
                let t = sample_element(&ring, None, &mut rng)?;
                match check {
                    DecomposeCheck::Words => rho_fail += usize::from(!words_hold(&q, &t, false)?),
                    DecomposeCheck::Bass => {
                        let (a, b) = bass_holds(&q, &t)?;
                        rho_fail += usize::from(!a);
                        mu_fail += usize::from(!b);
                    }
                }
            }
            let detail = match check {
                DecomposeCheck::Words => json!({ "samples": samples, "failures": rho_fail }),
                DecomposeCheck::Bass => json!({ "samples": samples, "rho-failures": rho_fail, "mu-failures": mu_fail }),
            };
            report.push(Outcome::new(format!("{ring}/n{n}"), rho_fail + mu_fail == 0, detail));
        }
    }
    Ok(())
}

/// Conjugation factorizations for se_ij(ab) by se_kl(z) over Z[1/2][z, a, b].
pub(crate) fn square_ideal_symbolic(report: &mut RunReport, n: usize) -> Result<()> {
    let ring = Ring::poly(&Ring::dyadic(), &["z", "a", "b"])?;
    let ideal = Ideal::vars(&ring, &["a", "b"])?;
    let (z, a, b) = (ring.var("z")?, ring.var("a")?, ring.var("b")?);
    let pairs: Vec<(usize, usize)> =
        (1..=2 * n).flat_map(|i| (1..=2 * n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let (mut checked, mut invalid, mut printed_fails) = (0usize, Vec::new(), 0usize);
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let res = conjugate_square_ideal(n, (i, j), (k, l), &z, &[(a.clone(), b.clone())], &ideal)?;
            checked += 1;
            if !res.valid() {
                invalid.push([i, j, k, l]);
            }
            if res.display_holds == Some(false) {
                printed_fails += 1;
            }
        }
    }
    report.push(Outcome::new(
        "symbolic-certificates",
        invalid.is_empty(),
        json!({
            "ring": ring.to_string(),
            "checked": checked,
            "invalid": invalid,
            "printed-display-failures": printed_fails,
        }),
    ));
    Ok(())
}

/// α(X) ∈ Sp_4(R[X]) with α(0) = 1: a product of generators with arguments in X·R[X].
fn random_family(ring: &Ring, m: i64, rng: &mut ChaCha8Rng) -> Result<Matrix> {
    let x = ring.var("X")?;
    let mut w = Word::new(ring, 4);
    for _ in 0..4 {
        let i = rng.gen_range(1..=4);
        let mut j = rng.gen_range(1..=4);
        while j == i {
            j = rng.gen_range(1..=4);
        }
        let arg = &x * &ring.from_i64(rng.gen_range(1..m)) + &x * &x * &ring.from_i64(rng.gen_range(0..m));
        w.push(Atom::sp(i, j, arg));
    }
    w.eval()
}

/// (c_i, b_i) with Σ c_i b_i = 1.
fn unit_partition(ring: &Ring, m: i64, k: usize, rng: &mut ChaCha8Rng) -> Vec<(Elem, Elem)> {
    let mut pairs: Vec<(Elem, Elem)> = (1..k)
        .map(|_| (ring.from_i64(rng.gen_range(0..m)), ring.from_i64(rng.gen_range(0..m))))
        .collect();
    let rest = pairs.iter().fold(ring.one(), |acc, (c, b)| acc - c * b);
    let b = loop {
        let b = ring.from_i64(rng.gen_range(1..m));
        if b.is_unit() {
            break b;
        }
    };
    let c = rest * b.inverse().expect("unit");
    pairs.push((c, b));
    pairs
}

pub(super) fn splice_demo(report: &mut RunReport, rings: &[String], ks: &[usize], seeds: u64) -> Result<()> {
    for name in rings {
        let base = Ring::parse(name)?;
        if base.is_polynomial() || !base.is_finite() {
            return Err(Error::InvalidRing(format!("{base}: splice demo needs Z/m or GF(p)")));
        }
        let m = base.modulus().expect("finite") as i64;
        let ring = Ring::poly(&base, &["X"])?;
        for &k in ks {
            if k == 0 {
                return Err(Error::Size("k must be positive".into()));
            }
            let mut failures = 0usize;
            for seed in 0..seeds {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let alpha = random_family(&ring, m, &mut rng)?;
                let pairs = unit_partition(&ring, m, k, &mut rng);
                if !splice_telescoping(&alpha, "X", &pairs)?.product_holds {
                    failures += 1;
                }
            }
            report.push(Outcome::new(format!("{base}/k{k}"), failures == 0, json!({ "seeds": seeds, "failures": failures })));
        }
    }
    Ok(())
}
