use crate::report::{Outcome, RunReport};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use transvect_core::normal_forms::{
    form_from_word, random_elementary_word, reduce_alternating_local, reduce_alternating_semilocal, LocalRingWitness,
};
use transvect_core::ring::radical;
use transvect_core::{Error, Ideal, Matrix, Result, Ring};

/// Reduce φ and check every returned ε reproduces its form.
fn round_trip(phi: &Matrix, ideal: Option<&Ideal>) -> Result<bool> {
    let ring = phi.ring();
    match LocalRingWitness::new(ring) {
        Ok(local) => {
            let eps = reduce_alternating_local(phi, &local, ideal)?;
            Ok(form_from_word(&eps)? == *phi && (ideal.is_none() || eps.class_holds()))
        }
        Err(_) => {
            let mut ok = true;
            for rep in reduce_alternating_semilocal(phi, ideal)? {
                ok &= form_from_word(&rep.epsilon)? == rep.phi && (ideal.is_none() || rep.epsilon.class_holds());
            }
            Ok(ok)
        }
    }
}

pub(super) fn reduce_form(
    report: &mut RunReport,
    rings: &[String],
    ns: &[usize],
    samples: usize,
    relative: bool,
    length: usize,
    seed: u64,
) -> Result<()> {
    for name in rings {
        let ring = Ring::parse(name)?;
        let m = ring.modulus().ok_or_else(|| Error::InvalidRing(format!("{ring} is not finite")))?;
        // the Jacobson radical; zero for fields
        let rad = radical(m);
        let maximal = (rad != m).then(|| Ideal::principal(&ring.from_i64(rad as i64))).transpose()?;
        for &n in ns {
            if n < 1 {
                return Err(Error::Size("n must be positive".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut failures = 0usize;
            for _ in 0..samples {
                let eps = random_elementary_word(&ring, 2 * n - 1, length, None, &mut rng)?;
                failures += usize::from(!round_trip(&form_from_word(&eps)?, None)?);
            }
            report.push(Outcome::new(
                format!("{ring}/n{n}/absolute"),
                failures == 0,
                json!({ "samples": samples, "failures": failures }),
            ));
            if !relative {
                continue;
            }
            match &maximal {
                None => report.push(Outcome::new(
                    format!("{ring}/n{n}/relative"),
                    true,
                    json!({ "samples": 0, "skipped": "maximal ideal is zero" }),
                )),
                Some(i) => {
                    let mut failures = 0usize;
                    for _ in 0..samples {
                        let eps = random_elementary_word(&ring, 2 * n - 1, length, Some(i), &mut rng)?;
                        failures += usize::from(!round_trip(&form_from_word(&eps)?, Some(i))?);
                    }
                    report.push(Outcome::new(
                        format!("{ring}/n{n}/relative"),
                        failures == 0,
                        json!({ "ideal": i.descriptor(), "samples": samples, "failures": failures }),
                    ));
                }
            }
        }
    }
    Ok(())
}
