use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use common_prefix::analysis::{count_subtrees, format_rational, ratio_experiment};
use common_prefix::exact::{oracle_solve_with_limit, solve_exact_with, ExactLimits, DEFAULT_ORACLE_LIMIT};
use common_prefix::gen::{random_binary_tree, random_bipartite, random_star, seeded, LabelParams};
use common_prefix::instance::{parse_cp_raw, parse_solution, serialize_solution};
use common_prefix::layered::solve_approx_with;
use common_prefix::{
    choose_block_height, evaluate, nn_to_star, parse_cp, parse_nn, serialize_cp, serialize_nn, star_to_nn,
    tight_family, CpInstance,
};

use crate::{AnalyzeWhat, Command, GenArgs, GenKind, ReduceDirection, SolveArgs};

/// Bound values wider than this are reported by their exponent only.
const MAX_PRINTED_BOUND_BITS: u64 = 4096;

fn read_input(file: Option<&Path>) -> Result<String> {
    match file {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn read_cp(file: Option<&PathBuf>) -> Result<CpInstance> {
    Ok(parse_cp(&read_input(file.map(PathBuf::as_path))?)?)
}

pub fn run(command: Command) -> Result<String> {
    match command {
        Command::Gen(args) => gen(&args),
        Command::Solve(args) => solve(&args),
        Command::Reduce { direction } => reduce(&direction),
        Command::Analyze { what } => analyze(&what),
        Command::Bench(args) => crate::bench::run(&args.suite, args.seed, args.times),
        Command::Validate { file } => {
            let raw = parse_cp_raw(&read_input(file.as_deref())?)?;
            match raw.validate() {
                Ok(()) => Ok("ok\n".into()),
                Err(d) => Err(anyhow!(common_prefix::Error::Invalid(d))),
            }
        }
        Command::Evaluate { instance, solution } => {
            let inst = parse_cp(&read_input(Some(&instance))?)?;
            let (declared, assignment) = parse_solution(&read_input(Some(&solution))?, &inst)?;
            let report = evaluate(&inst, &assignment)?;
            let mut out = String::new();
            for ((u, v), b) in &report.per_edge {
                writeln!(out, "edge {u} {v} {b}")?;
            }
            writeln!(out, "total={}", report.total)?;
            writeln!(out, "declared={declared}")?;
            writeln!(out, "matches={}", declared == report.total)?;
            Ok(out)
        }
    }
}

fn gen(args: &GenArgs) -> Result<String> {
    let mut rng = seeded(args.seed);
    let labels = || LabelParams::new(args.universe, args.min_labels, args.max_labels);
    Ok(match args.kind {
        GenKind::BinaryTree => serialize_cp(&random_binary_tree(&mut rng, args.n, labels()?)?),
        GenKind::Star => serialize_cp(&random_star(&mut rng, args.n, labels()?)?),
        GenKind::Bipartite => serialize_nn(&random_bipartite(&mut rng, args.nu, args.nv, args.p)?),
        GenKind::TightFamily => {
            if args.n == 0 {
                bail!("tight-family needs n >= 1");
            }
            serialize_nn(&tight_family(args.n))
        }
    })
}

fn solve(args: &SolveArgs) -> Result<String> {
    let inst = read_cp(args.file.as_ref())?;
    let limits = ExactLimits {
        max_components: args.max_components.unwrap_or(ExactLimits::default().max_components),
    };
    if args.oracle {
        let value = oracle_solve_with_limit(&inst, args.oracle_limit.unwrap_or(DEFAULT_ORACLE_LIMIT))?;
        return Ok(format!("value {value}\n"));
    }
    if args.exact {
        let r = solve_exact_with(&inst, limits)?;
        return Ok(serialize_solution(&inst, r.value, &r.assignment));
    }
    let l = match (args.l, args.epsilon) {
        (Some(l), _) => l,
        (None, eps) => choose_block_height(inst.n().max(2), eps)?,
    };
    let r = solve_approx_with(&inst, args.root, l, limits)?;
    let mut out = serialize_solution(&inst, r.realized_value, &r.assignment);
    writeln!(out, "# layer_value {}", r.layer_value)?;
    writeln!(out, "# L {}", r.l)?;
    writeln!(out, "# class {}", r.best_class)?;
    Ok(out)
}

fn reduce(direction: &ReduceDirection) -> Result<String> {
    match direction {
        ReduceDirection::StarToNn { center, file } => {
            let inst = read_cp(file.as_ref())?;
            Ok(serialize_nn(&star_to_nn(&inst, *center)?))
        }
        ReduceDirection::NnToStar { file } => {
            let g = parse_nn(&read_input(file.as_deref())?)?;
            Ok(serialize_cp(&nn_to_star(&g)))
        }
    }
}

fn analyze(what: &AnalyzeWhat) -> Result<String> {
    let mut out = String::new();
    match what {
        AnalyzeWhat::Subtrees { root, file } => {
            let inst = read_cp(file.as_ref())?;
            let rep = count_subtrees(&inst, *root)?;
            writeln!(out, "n={}", inst.n())?;
            writeln!(out, "height={}", rep.height)?;
            writeln!(out, "total={}", rep.total)?;
            writeln!(out, "bound_log2={}", rep.bound_log2)?;
            if let Some(b) = rep.bound(MAX_PRINTED_BOUND_BITS) {
                writeln!(out, "bound={b}")?;
            }
            writeln!(out, "within_bound={}", rep.within_bound())?;
        }
        AnalyzeWhat::Ratio { file } => {
            let g = parse_nn(&read_input(file.as_deref())?)?;
            let rep = ratio_experiment(&g)?;
            writeln!(out, "nu={}", g.n_u())?;
            writeln!(out, "nv={}", g.n_v())?;
            writeln!(out, "ebcs={}", rep.ebcs)?;
            writeln!(out, "nn={}", rep.nn)?;
            match &rep.ratio {
                Some(r) => writeln!(out, "ratio={}", format_rational(r))?,
                None => writeln!(out, "ratio=undefined")?,
            }
            writeln!(out, "harmonic={}", format_rational(&rep.h_bound))?;
            writeln!(out, "sandwich_ok={}", rep.sandwich_ok)?;
        }
    }
    Ok(out)
}
