use super::{Base, Dyadic, Elem, Mono, Poly, Ring, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use rand::Rng;

/// Bounds for sampling from infinite rings.
#[derive(Clone, Debug)]
pub struct SampleBounds {
    pub max_degree: u32,
    pub max_terms: usize,
    /// Dyadic numerators are drawn from [-coeff_bound, coeff_bound].
    pub coeff_bound: i64,
    pub max_two_exponent: u32,
}

impl Default for SampleBounds {
    fn default() -> Self {
        SampleBounds { max_degree: 2, max_terms: 3, coeff_bound: 5, max_two_exponent: 1 }
    }
}

fn sample_scalar<R: Rng + ?Sized>(base: Base, b: Option<&SampleBounds>, rng: &mut R) -> Result<Scalar> {
    match base {
        Base::Mod(m) => Ok(Scalar::Res(rng.gen_range(0..m))),
        Base::Dyadic => {
            let b = b.ok_or_else(|| Error::Precondition("dyadic sampling needs bounds".into()))?;
            let n = rng.gen_range(-b.coeff_bound..=b.coeff_bound);
            let e = rng.gen_range(0..=b.max_two_exponent);
            Ok(Scalar::Dy(Dyadic::new(BigInt::from(n), e)))
        }
    }
}

/// Deterministic given the RNG state; uniform over finite rings.
pub fn sample_element<R: Rng + ?Sized>(
    ring: &Ring,
    bounds: Option<&SampleBounds>,
    rng: &mut R,
) -> Result<Elem> {
    let base = ring.base();
    if !ring.is_polynomial() {
        return Ok(ring.wrap_scalar(sample_scalar(base, bounds, rng)?));
    }
    let b = bounds
        .ok_or_else(|| Error::Precondition(format!("sampling from {ring} needs bounds")))?;
    let n = ring.nvars();
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(0..=b.max_terms) {
        let deg = rng.gen_range(0..=b.max_degree);
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = sample_scalar(base, Some(b), rng)?;
        let mut t = Poly::zero();
        if !base.is_zero(&c) {
            t.terms.insert(Mono(e), c);
        }
        p = p.add(base, &t);
    }
    Ok(ring.from_poly(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reproducible() {
        let r = Ring::zmod(5).unwrap();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20)
                .map(|_| sample_element(&r, None, &mut rng).unwrap().residue().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
        assert!(draw(3).iter().all(|&v| v < 5));
    }

    #[test]
    fn degree_zero_bound_gives_constants() {
        let r = Ring::parse("poly:dyadic:a").unwrap();
        let b = SampleBounds { max_degree: 0, ..Default::default() };
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            assert!(sample_element(&r, Some(&b), &mut rng).unwrap().as_poly().unwrap().is_constant());
        }
    }

    #[test]
    fn unbounded_infinite_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(sample_element(&Ring::dyadic(), None, &mut rng).is_err());
    }
}
