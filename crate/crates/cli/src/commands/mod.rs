mod forms;
mod identities;
mod orbits;

use crate::report::{Outcome, RunReport};
use crate::{CaseArgs, Cli, Command};
use serde_json::json;
use transvect_core::{Error, Ideal, Result, Ring};

pub(crate) fn dispatch(cli: &Cli, report: &mut RunReport) -> Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::VerifyRelations { ring, n, samples, form } => {
            identities::verify_relations(report, ring, n, *samples, *form, g.seed)
        }
        Command::Dilate { n, max_exponent, word, target, base, vars } => match word {
            Some(w) => identities::dilate_word(report, n, w, target, base, vars, *max_exponent),
            None => identities::dilate_table(report, n, *max_exponent),
        },
        Command::Decompose { check, ring, n, samples, symbolic } => {
            identities::decompose(report, *check, ring, n, *samples, *symbolic, g.seed)
        }
        Command::ReduceForm { ring, n, samples, relative, length } => {
            forms::reduce_form(report, ring, n, *samples, *relative, *length, g.seed)
        }
        Command::Orbits { ring, size, group, ideal, full_generators, labels } => {
            orbits::orbits(report, ring, *size, group, ideal.as_deref(), *full_generators, *labels, g.budget)
        }
        Command::OrbitEquality { cases } => orbits::orbit_equality(report, &parse_cases(cases)?, g.budget),
        Command::Transitivity { cases } => orbits::transitivity(report, &parse_cases(cases)?, g.budget),
        Command::KernelTest { ring, size, ideal, samples } => {
            orbits::kernel_test(report, ring, *size, ideal, *samples, g.seed, g.cap)
        }
        Command::SquareIdealTest { ring, size, ideal, samples } => {
            orbits::square_ideal_test(report, ring, *size, ideal, *samples, g.seed, g.cap)
        }
        Command::SpliceDemo { ring, k, seeds } => identities::splice_demo(report, ring, k, *seeds),
    }
}

/// `None`, "full" and "R" mean the whole ring.
pub(crate) fn parse_ideal(ring: &Ring, s: Option<&str>) -> Result<Option<Ideal>> {
    match s {
        None | Some("full") | Some("R") => Ok(None),
        Some("zero") | Some("0") => Ok(Some(Ideal::zero(ring))),
        Some(t) => Ideal::parse(ring, t).map(Some),
    }
}

pub(crate) struct Case {
    pub ring: Ring,
    pub size: usize,
    pub ideal: Option<Ideal>,
}

impl Case {
    pub fn label(&self) -> String {
        let ideal = self.ideal.as_ref().map_or("ideal:full".to_string(), |i| i.descriptor());
        format!("{}/{}/{}", self.ring, self.size, ideal)
    }
}

fn parse_cases(args: &CaseArgs) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for c in &args.cases {
        let parts: Vec<&str> = c.split(',').map(str::trim).collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(Error::Parse(format!("case {c:?} is not ring,size[,ideal]")));
        }
        let ring = Ring::parse(parts[0])?;
        let size = parts[1].parse().map_err(|_| Error::Parse(format!("bad size in case {c:?}")))?;
        let ideal = parse_ideal(&ring, parts.get(2).copied())?;
        out.push(Case { ring, size, ideal });
    }
    match (&args.ring, args.size) {
        (Some(r), Some(size)) => {
            let ring = Ring::parse(r)?;
            let ideal = parse_ideal(&ring, args.ideal.as_deref())?;
            out.push(Case { ring, size, ideal });
        }
        (None, None) if args.ideal.is_none() => {}
        _ => return Err(Error::Parse("--ring and --size go together".into())),
    }
    if out.is_empty() {
        return Err(Error::Parse("no case given".into()));
    }
    Ok(out)
}

/// Compare a computed value with its golden entry, if one exists.
pub(crate) fn golden_check(report: &mut RunReport, key: &str, value: u64) {
    if let Some(expected) = crate::fixtures::lookup(key) {
        let ok = expected.as_u64() == Some(value);
        report.push(Outcome::new(format!("golden/{key}"), ok, json!({ "expected": expected, "found": value })));
    }
}
