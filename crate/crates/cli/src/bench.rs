use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{bail, Result};
use common_prefix::analysis::{count_connected_subtrees, format_rational, ratio_experiment};
use common_prefix::exact::{solve_exact_with, ExactLimits};
use common_prefix::gen::{random_binary_tree, random_bipartite, seeded, LabelParams};
use common_prefix::layered::solve_approx;
use common_prefix::tight_family;

pub const SUITES: &[&str] = &["approx-sweep", "exact-sweep", "ratio-sweep"];

/// Trees with more connected subtrees than this skip the exact column.
const BENCH_EXACT_LIMIT: usize = 200_000;

pub fn run(suite: &str, seed: u64, times: bool) -> Result<String> {
    match suite {
        "approx-sweep" => tree_sweep(&[64, 256, 1024], seed, times),
        "exact-sweep" => tree_sweep(&[8, 12, 16, 24], seed, times),
        "ratio-sweep" => ratio_sweep(seed),
        other => bail!("unknown bench suite {other:?}; expected one of {}", SUITES.join(", ")),
    }
}

fn ms(t: Instant) -> String {
    format!("{:.3}", t.elapsed().as_secs_f64() * 1e3)
}

fn tree_sweep(sizes: &[usize], seed: u64, times: bool) -> Result<String> {
    let labels = LabelParams::new(6, 1, 3)?;
    let mut out = String::from("n\tL\tclass\tlayer\trealized\texact\tguarantee");
    if times {
        out.push_str("\texact_ms\tapprox_ms");
    }
    out.push('\n');
    for &n in sizes {
        let inst = random_binary_tree(&mut seeded(seed ^ n as u64), n, labels)?;
        let subtrees = count_connected_subtrees(&inst, 0)?.total;
        let t0 = Instant::now();
        let exact = if subtrees <= BENCH_EXACT_LIMIT.into() {
            Some(
                solve_exact_with(
                    &inst,
                    ExactLimits {
                        max_components: BENCH_EXACT_LIMIT,
                    },
                )?
                .value,
            )
        } else {
            None
        };
        let exact_ms = ms(t0);
        for l in 2..=4 {
            let t1 = Instant::now();
            let r = solve_approx(&inst, 0, l)?;
            let approx_ms = ms(t1);
            let (exact_col, check) = match exact {
                Some(e) => {
                    let ok = r.guarantee_holds(e) && r.layer_value <= r.realized_value && r.realized_value <= e;
                    (e.to_string(), if ok { "ok" } else { "FAIL" })
                }
                None => ("-".to_string(), "n/a"),
            };
            write!(
                out,
                "{n}\t{l}\t{}\t{}\t{}\t{exact_col}\t{check}",
                r.best_class, r.layer_value, r.realized_value
            )?;
            if times {
                write!(out, "\t{exact_ms}\t{approx_ms}")?;
            }
            out.push('\n');
        }
    }
    Ok(out)
}

fn ratio_sweep(seed: u64) -> Result<String> {
    let mut out = String::from("instance\tnu\tnv\tebcs\tnn\tratio\tharmonic\tsandwich\n");
    let mut rows = Vec::new();
    for n in [4, 8, 12] {
        rows.push((format!("tight-{n}"), tight_family(n)));
    }
    let mut rng = seeded(seed);
    for i in 0..4 {
        rows.push((format!("random-{i}"), random_bipartite(&mut rng, 6, 6, 0.5)?));
    }
    for (name, g) in rows {
        let rep = ratio_experiment(&g)?;
        let ratio = rep.ratio.as_ref().map_or("undefined".to_string(), format_rational);
        writeln!(
            out,
            "{name}\t{}\t{}\t{}\t{}\t{ratio}\t{}\t{}",
            g.n_u(),
            g.n_v(),
            rep.ebcs,
            rep.nn,
            format_rational(&rep.h_bound),
            if rep.sandwich_ok { "ok" } else { "FAIL" }
        )?;
    }
    Ok(out)
}
