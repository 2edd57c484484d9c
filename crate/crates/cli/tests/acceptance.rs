//! Acceptance suite: one line per criterion, each backed by one CLI invocation.

use std::process::ExitCode;
use std::time::{Duration, Instant};
use transvect_cli::{run_report, RunReport};

struct Criterion {
    id: u32,
    title: &'static str,
    argv: &'static [&'static str],
    limit: Duration,
    extra: fn(&RunReport) -> Result<(), String>,
}

fn none(_: &RunReport) -> Result<(), String> {
    Ok(())
}

fn detail_u64(r: &RunReport, name: &str, field: &str) -> Option<u64> {
    r.results.iter().find(|o| o.name == name)?.detail.get(field)?.as_u64()
}

fn relations_complete(r: &RunReport) -> Result<(), String> {
    let corrected = r.results.iter().filter(|o| o.name.ends_with("/corrected")).count();
    let printed = r.results.iter().filter(|o| o.name.ends_with("/printed")).count();
    if corrected != 26 || printed != 26 {
        return Err(format!("expected 26 + 26 relation outcomes, got {corrected} + {printed}"));
    }
    Ok(())
}

fn kernel_counts(r: &RunReport) -> Result<(), String> {
    match (detail_u64(r, "membership", "tested"), detail_u64(r, "membership", "members")) {
        (Some(1000), Some(1000)) => Ok(()),
        other => Err(format!("tested/members = {other:?}")),
    }
}

fn square_counts(r: &RunReport) -> Result<(), String> {
    match (detail_u64(r, "membership", "members"), detail_u64(r, "symbolic-certificates", "checked")) {
        (Some(200), Some(c)) if c > 0 => Ok(()),
        other => Err(format!("members/certificates = {other:?}")),
    }
}

fn dilation_frozen(r: &RunReport) -> Result<(), String> {
    for o in &r.results {
        if o.detail.get("matches-frozen") != Some(&serde_json::Value::Bool(true)) {
            return Err(format!("{} differs from the frozen table", o.name));
        }
    }
    Ok(())
}

const ORBIT_EQUALITY: &[&str] = &[
    "transvect", "orbit-equality", "--case", "zmod:3,4", "--case", "zmod:9,4,3", "--case", "zmod:15,4,5",
    "--case", "zmod:3,6",
];
const TRANSITIVITY: &[&str] = &["transvect", "transitivity", "--case", "zmod:9,4,3", "--case", "zmod:15,4,3", "--case", "zmod:9,4"];
const KERNEL: &[&str] = &[
    "transvect", "kernel-test", "--ring", "zmod:9", "--size", "4", "--ideal", "3", "--samples", "1000", "--seed", "7",
];

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "relation suite, symbolic over Z[1/2][a,b], n = 2, 3",
            argv: &["transvect", "verify-relations", "--ring", "dyadic", "--n", "2,3", "--form", "both"],
            limit: s(60),
            extra: relations_complete,
        },
        Criterion {
            id: 2,
            title: "rho/mu decompositions, symbolic and 1000 samples over Z/9, Z/15",
            argv: &[
                "transvect", "decompose", "--check", "words", "--ring", "zmod:9,zmod:15", "--n", "1,2", "--samples",
                "1000", "--symbolic", "--seed", "2",
            ],
            limit: s(30),
            extra: none,
        },
        Criterion {
            id: 3,
            title: "Bass transvections match rho and mu, 200 samples over GF(5)",
            argv: &[
                "transvect", "decompose", "--check", "bass", "--ring", "gf:5", "--n", "1,2", "--samples", "200",
                "--seed", "3",
            ],
            limit: s(30),
            extra: none,
        },
        Criterion {
            id: 4,
            title: "form reduction round trip, absolute and relative",
            argv: &[
                "transvect", "reduce-form", "--ring", "gf:3,gf:5,zmod:9,zmod:27", "--n", "2,3", "--samples", "100",
                "--relative", "--seed", "4",
            ],
            limit: s(120),
            extra: none,
        },
        Criterion { id: 5, title: "linear and symplectic orbits coincide", argv: ORBIT_EQUALITY, limit: s(180), extra: none },
        Criterion { id: 6, title: "dimension-0 transitivity", argv: TRANSITIVITY, limit: s(60), extra: none },
        Criterion { id: 7, title: "kernel membership, 1000 samples", argv: KERNEL, limit: s(120), extra: kernel_counts },
        Criterion {
            id: 8,
            title: "square-ideal inclusion, 200 samples, symbolic certificates",
            argv: &["transvect", "square-ideal-test", "--ring", "zmod:9", "--size", "4", "--ideal", "3", "--samples", "200", "--seed", "8"],
            limit: s(60),
            extra: square_counts,
        },
        Criterion {
            id: 9,
            title: "dilation case table, sizes 4 and 6",
            argv: &["transvect", "dilate", "--n", "2,3"],
            limit: s(120),
            extra: dilation_frozen,
        },
        Criterion {
            id: 10,
            title: "telescoping splice, k = 1, 2, 3 over Z/5[X] and Z/9[X], 50 seeds",
            argv: &["transvect", "splice-demo", "--ring", "zmod:5,zmod:9", "--k", "1,2,3", "--seeds", "50"],
            limit: s(30),
            extra: none,
        },
    ]
}

fn run(c: &Criterion) -> Result<Duration, String> {
    let t0 = Instant::now();
    let report = run_report(c.argv.iter().copied()).map_err(|e| e.message)?;
    let took = t0.elapsed();
    if !report.ok {
        let bad: Vec<&str> = report.results.iter().filter(|o| !o.ok).map(|o| o.name.as_str()).collect();
        return Err(format!("failing outcomes {bad:?}"));
    }
    (c.extra)(&report)?;
    if took > c.limit {
        return Err(format!("took {:.1}s, limit {}s", took.as_secs_f64(), c.limit.as_secs()));
    }
    Ok(took)
}

/// Criteria 5 to 7 under one and four worker threads.
fn determinism() -> Result<Duration, String> {
    let t0 = Instant::now();
    for argv in [ORBIT_EQUALITY, TRANSITIVITY, KERNEL] {
        let mut outputs = Vec::new();
        for threads in ["1", "4"] {
            let mut args: Vec<&str> = argv.to_vec();
            args.extend(["--threads", threads]);
            let r = run_report(args).map_err(|e| e.message)?;
            outputs.push(r.canonical_json());
        }
        if outputs[0] != outputs[1] {
            return Err(format!("{} differs between thread counts", argv[1]));
        }
    }
    Ok(t0.elapsed())
}

fn line(id: u32, title: &str, res: &Result<Duration, String>) -> bool {
    match res {
        Ok(d) => println!("criterion {id:>2}: PASS  {title} ({:.2}s)", d.as_secs_f64()),
        Err(e) => println!("criterion {id:>2}: FAIL  {title}: {e}"),
    }
    res.is_ok()
}

fn main() -> ExitCode {
    let mut all = true;
    for c in criteria() {
        all &= line(c.id, c.title, &run(&c));
    }
    all &= line(11, "reports identical across thread counts", &determinism());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
