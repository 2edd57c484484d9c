use super::{enumerate_unimodular, generators_for, Generator, GroupFamily, GroupSpec};
use crate::error::{Error, Result};
use crate::ring::{Ideal, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BfsStats {
    pub multiplications: u64,
    pub levels: usize,
    pub max_frontier: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitPartition {
    pub universe: Vec<Vec<u32>>,
    /// Orbit id per universe row; ids follow the least row of each orbit.
    pub labels: Vec<u32>,
    pub orbit_sizes: Vec<usize>,
    pub generator_count: usize,
    pub stats: BfsStats,
    /// Random (row, generator) pairs all stayed inside their orbit.
    pub closure_checked: bool,
}

impl OrbitPartition {
    pub fn orbit_count(&self) -> usize {
        self.orbit_sizes.len()
    }
}

fn pack(v: &[u32], m: u64) -> u64 {
    v.iter().fold(0u64, |acc, &x| acc * m + x as u64)
}

/// Orbits of the right action v ↦ v·g on a universe of rows over Z/m.
pub fn orbit_partition(universe: &[Vec<u32>], gens: &[Generator], m: u32) -> Result<OrbitPartition> {
    let mut universe = universe.to_vec();
    universe.sort();
    let n = universe.first().map_or(0, |v| v.len());
    for g in gens {
        if g.matrix.n != n || g.matrix.m != m {
            return Err(Error::Size("generator does not match the universe".into()));
        }
    }
    let mm = m as u64;
    let table_size = mm.checked_pow(n as u32).ok_or_else(|| Error::Budget("row space too large".into()))?;
    let mut index = vec![u32::MAX; table_size as usize];
    for (k, v) in universe.iter().enumerate() {
        index[pack(v, mm) as usize] = k as u32;
    }
    let mut labels = vec![u32::MAX; universe.len()];
    let mut orbit_sizes = Vec::new();
    let mut stats = BfsStats::default();
    for start in 0..universe.len() {
        if labels[start] != u32::MAX {
            continue;
        }
        let cur = orbit_sizes.len() as u32;
        labels[start] = cur;
        let mut size = 1usize;
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            stats.levels += 1;
            stats.max_frontier = stats.max_frontier.max(frontier.len());
            stats.multiplications += (frontier.len() * gens.len() * 2) as u64;
            let next: Vec<u64> = frontier
                .par_iter()
                .flat_map_iter(|&r| {
                    let row = &universe[r];
                    gens.iter()
                        .flat_map(move |g| [g.matrix.apply_row(row), g.inverse.apply_row(row)])
                        .map(move |w| pack(&w, mm))
                })
                .collect();
            let mut new_frontier = Vec::new();
            for key in next {
                let pos = index[key as usize];
                if pos == u32::MAX {
                    return Err(Error::Construction("a generator moves a row out of the universe".into()));
                }
                let pos = pos as usize;
                if labels[pos] == u32::MAX {
                    labels[pos] = cur;
                    size += 1;
                    new_frontier.push(pos);
                }
            }
            frontier = new_frontier;
        }
        orbit_sizes.push(size);
    }
    let closure_checked = spot_check(&universe, &labels, gens, &index, mm);
    Ok(OrbitPartition {
        universe,
        labels,
        orbit_sizes,
        generator_count: gens.len(),
        stats,
        closure_checked,
    })
}

fn spot_check(universe: &[Vec<u32>], labels: &[u32], gens: &[Generator], index: &[u32], m: u64) -> bool {
    if universe.is_empty() || gens.is_empty() {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    (0..1000).all(|_| {
        let r = rng.gen_range(0..universe.len());
        let g = &gens[rng.gen_range(0..gens.len())];
        let w = g.matrix.apply_row(&universe[r]);
        let pos = index[pack(&w, m) as usize];
        pos != u32::MAX && labels[pos as usize] == labels[r]
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct OrbitEqualityReport {
    pub ring: String,
    pub size: usize,
    pub ideal: String,
    pub universe_size: usize,
    pub linear_orbit_count: usize,
    pub symplectic_orbit_count: usize,
    pub linear_orbit_sizes: Vec<usize>,
    pub symplectic_orbit_sizes: Vec<usize>,
    pub equal: bool,
}

/// Compare the orbits of E_{2n}(R, I) and ESp_{2n}(R, I) on Um_{2n}(R, I).
pub fn check_orbit_equality(ring: &Ring, size: usize, ideal: Option<&Ideal>, budget: u64) -> Result<OrbitEqualityReport> {
    if size < 4 || size % 2 == 1 {
        return Err(Error::Size(format!("size {size} must be even and at least 4")));
    }
    let full = Ideal::full(ring);
    let ideal = ideal.unwrap_or(&full);
    let (lin, sp) = if ideal.is_full() {
        (GroupFamily::LinearE, GroupFamily::SymplecticEsp)
    } else {
        (GroupFamily::LinearERelative, GroupFamily::SymplecticEspRelative)
    };
    let universe = enumerate_unimodular(ring, size, Some(ideal), budget)?;
    let m = ring.modulus().unwrap() as u32;
    let pl = orbit_partition(&universe, &generators_for(&GroupSpec::new(lin, size, ring, Some(ideal))?, true)?, m)?;
    let ps = orbit_partition(&universe, &generators_for(&GroupSpec::new(sp, size, ring, Some(ideal))?, true)?, m)?;
    if !pl.closure_checked || !ps.closure_checked {
        return Err(Error::Construction("orbit closure spot check failed".into()));
    }
    Ok(OrbitEqualityReport {
        ring: ring.to_string(),
        size,
        ideal: ideal.descriptor(),
        universe_size: universe.len(),
        linear_orbit_count: pl.orbit_count(),
        symplectic_orbit_count: ps.orbit_count(),
        equal: pl.labels == ps.labels,
        linear_orbit_sizes: pl.orbit_sizes,
        symplectic_orbit_sizes: ps.orbit_sizes,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct TransitivityReport {
    pub ring: String,
    pub n: usize,
    pub ideal: String,
    pub universe_size: usize,
    pub orbit_count: usize,
    pub class_count: usize,
    /// Orbits coincide with the classes of rows congruent mod I.
    pub orbits_match_classes: bool,
    /// Number of orbits among rows ≡ e₁ mod I.
    pub e1_class_orbits: usize,
}

/// E_n(R, I) acts transitively on each class of Um_n(R) modulo I.
pub fn check_dim0_transitivity(ring: &Ring, n: usize, ideal: Option<&Ideal>, budget: u64) -> Result<TransitivityReport> {
    if n < 2 {
        return Err(Error::Size(format!("n = {n}")));
    }
    let full = Ideal::full(ring);
    let ideal = ideal.unwrap_or(&full);
    let family = if ideal.is_full() { GroupFamily::LinearE } else { GroupFamily::LinearERelative };
    let universe = enumerate_unimodular(ring, n, None, budget)?;
    let m = ring.modulus().unwrap() as u32;
    let g = ideal.modular_generator().unwrap() as u32;
    let part = orbit_partition(&universe, &generators_for(&GroupSpec::new(family, n, ring, Some(ideal))?, true)?, m)?;
    let class_of = |v: &[u32]| v.iter().map(|x| x % g).collect::<Vec<u32>>();
    let mut by_class: BTreeMap<Vec<u32>, BTreeSet<u32>> = BTreeMap::new();
    let mut by_label: BTreeMap<u32, BTreeSet<Vec<u32>>> = BTreeMap::new();
    for (v, &l) in part.universe.iter().zip(&part.labels) {
        by_class.entry(class_of(v)).or_default().insert(l);
        by_label.entry(l).or_default().insert(class_of(v));
    }
    let mut e1 = vec![0u32; n];
    e1[0] = 1 % g;
    let e1_class_orbits = by_class.get(&e1).map_or(0, |s| s.len());
    Ok(TransitivityReport {
        ring: ring.to_string(),
        n,
        ideal: ideal.descriptor(),
        universe_size: part.universe.len(),
        orbit_count: part.orbit_count(),
        class_count: by_class.len(),
        orbits_match_classes: by_class.values().all(|s| s.len() == 1) && by_label.values().all(|s| s.len() == 1),
        e1_class_orbits,
    })
}
