use super::{golden_check, parse_ideal, Case};
use crate::report::{Outcome, RunReport};
use serde_json::json;
use transvect_core::orbits::{
    check_dim0_transitivity, check_orbit_equality, enumerate_unimodular, generators_for, kernel_membership_test,
    orbit_partition, square_ideal_inclusion_test, GroupFamily, GroupSpec,
};
use transvect_core::{Error, Ideal, Result, Ring};

fn key_part(ring: &Ring, size: usize, ideal: Option<&Ideal>) -> String {
    let i = ideal.map_or("full".to_string(), |i| i.descriptor().trim_start_matches("ideal:").to_string());
    format!("{}-{size}-{i}", ring.to_string().replace(':', ""))
}

#[allow(clippy::too_many_arguments)]
pub(super) fn orbits(
    report: &mut RunReport,
    ring: &str,
    size: usize,
    group: &str,
    ideal: Option<&str>,
    full_generators: bool,
    labels: bool,
    budget: u64,
) -> Result<()> {
    let ring = Ring::parse(ring)?;
    let ideal = parse_ideal(&ring, ideal)?;
    let family = GroupFamily::parse(group)?;
    let spec = GroupSpec::new(family, size, &ring, ideal.as_ref())?;
    let universe = if family.is_relative() {
        enumerate_unimodular(&ring, size, Some(&spec.ideal), budget)?
    } else {
        enumerate_unimodular(&ring, size, None, budget)?
    };
    let gens = generators_for(&spec, !full_generators)?;
    let m = ring.modulus().ok_or_else(|| Error::Precondition(format!("{ring} is not finite")))? as u32;
    let part = orbit_partition(&universe, &gens, m)?;
    let mut detail = json!({
        "group": family,
        "universe-size": universe.len(),
        "orbit-count": part.orbit_count(),
        "orbit-sizes": part.orbit_sizes,
        "generator-count": part.generator_count,
        "bfs": { "multiplications": part.stats.multiplications, "levels": part.stats.levels },
    });
    if labels {
        detail["labels"] = json!(part.labels);
    }
    report.push(Outcome::new("partition", part.closure_checked, detail));
    let key = format!("orbits/{}-{}", group, key_part(&ring, size, ideal.as_ref()));
    golden_check(report, &key, part.orbit_count() as u64);
    Ok(())
}

pub(super) fn orbit_equality(report: &mut RunReport, cases: &[Case], budget: u64) -> Result<()> {
    for c in cases {
        let rep = check_orbit_equality(&c.ring, c.size, c.ideal.as_ref(), budget)?;
        let count = rep.linear_orbit_count as u64;
        report.push(Outcome::new(c.label(), rep.equal, serde_json::to_value(&rep).expect("report serializes")));
        golden_check(report, &format!("orbit-equality/{}", key_part(&c.ring, c.size, c.ideal.as_ref())), count);
    }
    Ok(())
}

pub(super) fn transitivity(report: &mut RunReport, cases: &[Case], budget: u64) -> Result<()> {
    for c in cases {
        let rep = check_dim0_transitivity(&c.ring, c.size, c.ideal.as_ref(), budget)?;
        let ok = rep.orbits_match_classes && rep.e1_class_orbits == 1;
        report.push(Outcome::new(c.label(), ok, serde_json::to_value(&rep).expect("report serializes")));
    }
    Ok(())
}

fn ring_and_ideal(ring: &str, ideal: &str) -> Result<(Ring, Ideal)> {
    let ring = Ring::parse(ring)?;
    let ideal = parse_ideal(&ring, Some(ideal))?.unwrap_or_else(|| Ideal::full(&ring));
    Ok((ring, ideal))
}

pub(super) fn kernel_test(
    report: &mut RunReport,
    ring: &str,
    size: usize,
    ideal: &str,
    samples: usize,
    seed: u64,
    cap: usize,
) -> Result<()> {
    let (ring, ideal) = ring_and_ideal(ring, ideal)?;
    let rep = kernel_membership_test(&ring, size, &ideal, samples, seed, cap)?;
    let ok = rep.all_members && rep.tested == samples;
    let closure = rep.closure_size as u64;
    report.push(Outcome::new("membership", ok, serde_json::to_value(&rep).expect("report serializes")));
    golden_check(report, &format!("closure/rel-{}", key_part(&ring, size, Some(&ideal))), closure);
    Ok(())
}

pub(super) fn square_ideal_test(
    report: &mut RunReport,
    ring: &str,
    size: usize,
    ideal: &str,
    samples: usize,
    seed: u64,
    cap: usize,
) -> Result<()> {
    let (ring, ideal) = ring_and_ideal(ring, ideal)?;
    let rep = square_ideal_inclusion_test(&ring, size, &ideal, samples, seed, cap)?;
    let ok = rep.ok;
    let closure = rep.closure_size as u64;
    report.push(Outcome::new("membership", ok, serde_json::to_value(&rep).expect("report serializes")));
    golden_check(report, &format!("closure/gen-{}", key_part(&ring, size, Some(&ideal))), closure);
    super::identities::square_ideal_symbolic(report, size / 2)
}
