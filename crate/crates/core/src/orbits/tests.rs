use super::*;

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

#[test]
fn unimodular_counts() {
    assert_eq!(enumerate_unimodular(&ring("gf:3"), 2, None, DEFAULT_BUDGET).unwrap().len(), 8);
    let r = ring("zmod:9");
    assert_eq!(enumerate_unimodular(&r, 4, None, DEFAULT_BUDGET).unwrap().len(), 9usize.pow(4) - 3usize.pow(4));
    let i = Ideal::parse(&r, "3").unwrap();
    assert_eq!(enumerate_unimodular(&r, 4, Some(&i), DEFAULT_BUDGET).unwrap().len(), 81);
    assert!(enumerate_unimodular(&r, 8, None, 1000).is_err());
}

#[test]
fn generator_counts() {
    let r = ring("gf:3");
    let full = GroupSpec::new(GroupFamily::LinearE, 2, &r, None).unwrap();
    assert_eq!(generators_for(&full, true).unwrap().len(), 2);
    assert_eq!(generators_for(&full, false).unwrap().len(), 4);
    let sp = GroupSpec::new(GroupFamily::SymplecticEsp, 4, &r, None).unwrap();
    assert_eq!(generators_for(&sp, true).unwrap().len(), 12);
    let r9 = ring("zmod:9");
    let i = Ideal::parse(&r9, "3").unwrap();
    let rel = GroupSpec::new(GroupFamily::SymplecticEspRelative, 4, &r9, Some(&i)).unwrap();
    assert_eq!(generators_for(&rel, true).unwrap().len(), 12 * 9);
    assert!(GroupSpec::new(GroupFamily::SymplecticEsp, 3, &r, None).is_err());
}

#[test]
fn reduced_generators_give_the_same_orbits() {
    let r = ring("gf:3");
    let uni = enumerate_unimodular(&r, 2, None, DEFAULT_BUDGET).unwrap();
    let spec = GroupSpec::new(GroupFamily::LinearE, 2, &r, None).unwrap();
    let a = orbit_partition(&uni, &generators_for(&spec, true).unwrap(), 3).unwrap();
    let b = orbit_partition(&uni, &generators_for(&spec, false).unwrap(), 3).unwrap();
    assert_eq!(a.labels, b.labels);
    assert_eq!(a.orbit_count(), 1);
}

#[test]
fn no_generators_gives_singletons() {
    let r = ring("gf:3");
    let uni = enumerate_unimodular(&r, 2, None, DEFAULT_BUDGET).unwrap();
    let p = orbit_partition(&uni, &[], 3).unwrap();
    assert_eq!(p.orbit_count(), uni.len());
}

#[test]
fn symplectic_transitive_over_gf3() {
    let r = ring("gf:3");
    let uni = enumerate_unimodular(&r, 4, None, DEFAULT_BUDGET).unwrap();
    let spec = GroupSpec::new(GroupFamily::SymplecticEsp, 4, &r, None).unwrap();
    let p = orbit_partition(&uni, &generators_for(&spec, true).unwrap(), 3).unwrap();
    assert_eq!(p.orbit_count(), 1);
    assert!(p.closure_checked);
}

#[test]
fn orbit_equality_small() {
    let r = ring("zmod:3");
    assert!(check_orbit_equality(&r, 4, None, DEFAULT_BUDGET).unwrap().equal);
    let r9 = ring("zmod:9");
    let zero = Ideal::zero(&r9);
    let rep = check_orbit_equality(&r9, 4, Some(&zero), DEFAULT_BUDGET).unwrap();
    assert!(rep.equal);
    assert_eq!(rep.linear_orbit_count, rep.universe_size);
}

#[test]
fn transitivity_over_small_field() {
    let rep = check_dim0_transitivity(&ring("gf:5"), 2, None, DEFAULT_BUDGET).unwrap();
    assert_eq!(rep.orbit_count, 1);
    assert!(rep.orbits_match_classes);
}

#[test]
fn closure_of_identity_is_trivial() {
    let c = subgroup_closure(4, 3, &[IntMatrix::identity(4, 3)], None, 10).unwrap();
    assert_eq!(c.size(), 1);
}

#[test]
fn closure_respects_cap() {
    let r = ring("gf:3");
    let gens: Vec<IntMatrix> = generators_for(&GroupSpec::new(GroupFamily::SymplecticEsp, 4, &r, None).unwrap(), true)
        .unwrap()
        .into_iter()
        .map(|g| g.matrix)
        .collect();
    assert!(matches!(subgroup_closure(4, 3, &gens, None, 100), Err(Error::Budget(_))));
}

/// |Sp_4(F_q)| = q^4 (q^2 - 1)(q^4 - 1).
fn sp4_order(q: usize) -> usize {
    q.pow(4) * (q * q - 1) * (q.pow(4) - 1)
}

#[test]
fn symplectic_closure_over_gf3_is_full() {
    let r = ring("gf:3");
    let gens: Vec<IntMatrix> = generators_for(&GroupSpec::new(GroupFamily::SymplecticEsp, 4, &r, None).unwrap(), true)
        .unwrap()
        .into_iter()
        .map(|g| g.matrix)
        .collect();
    let c = subgroup_closure(4, 3, &gens, None, DEFAULT_CAP).unwrap();
    assert_eq!(c.size(), sp4_order(3));
    assert_eq!(c.size(), 51840);
}

#[test]
fn kernel_and_square_ideal_over_z9() {
    let r = ring("zmod:9");
    let i = Ideal::parse(&r, "3").unwrap();
    let k = kernel_membership_test(&r, 4, &i, 200, 7, DEFAULT_CAP).unwrap();
    assert!(k.all_members && k.tested == 200);
    let s = square_ideal_inclusion_test(&r, 4, &i, 50, 7, DEFAULT_CAP).unwrap();
    assert!(s.ok && s.square_is_zero);
    println!("closure {} {}", k.closure_size, s.closure_size);
}

/// |SL_n(F_q)| = q^{n(n-1)/2} ∏_{k=2}^{n} (q^k − 1).
fn sl_order(n: u32, q: usize) -> usize {
    q.pow(n * (n - 1) / 2) * (2..=n).map(|k| q.pow(k) - 1).product::<usize>()
}

#[test]
fn elementary_closure_is_sl_over_fields() {
    for (n, p) in [(2usize, 3u32), (2, 5), (3, 3)] {
        let r = ring(&format!("gf:{p}"));
        let gens: Vec<IntMatrix> = generators_for(&GroupSpec::new(GroupFamily::LinearE, n, &r, None).unwrap(), true)
            .unwrap()
            .into_iter()
            .map(|g| g.matrix)
            .collect();
        let c = subgroup_closure(n, p, &gens, None, DEFAULT_CAP).unwrap();
        assert_eq!(c.size(), sl_order(n as u32, p as usize), "n = {n}, p = {p}");
    }
}
