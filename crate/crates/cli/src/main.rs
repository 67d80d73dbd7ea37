//! Batch frontend over the library: evaluate expressions, run property
//! suites, export matrices, spectra tables and germ tables.
//!
//! Exit codes: 0 pass, 1 property failure, 2 usage error, 3 resource limit.

mod expr;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lcmisg::error::Error;
use lcmisg::instances::Instance;
use lcmisg::isg;
use lcmisg::monoid::{LcmMonoid, Side};
use lcmisg::operator::{build_delta, represent_triple, SparseOp};
use lcmisg::shift::{cocycle_h, BiPoint, Germ, Ray};
use lcmisg::spectra;
use lcmisg::suites::{format_text, run_suites, SuiteParams};

#[derive(Parser)]
#[command(name = "lcmisg", version, about = "exact computation over LCM monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Common {
    /// Instance: free:<k>, grid:<k>, odometer, automaton:<path>
    #[arg(long, default_value = "free:2")]
    monoid: String,
    /// Slot-length bound for enumerations
    #[arg(long, default_value_t = 2)]
    depth: usize,
    /// Group-exponent window for self-similar instances
    #[arg(long, default_value_t = 8)]
    group_bound: u32,
    /// Length bound for the operator-model basis
    #[arg(long, default_value_t = 3)]
    delta_depth: usize,
    /// PRNG seed for randomized properties
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to its normal form
    Eval {
        #[command(flatten)]
        common: Common,
        /// e.g. "v(0) * adj(v(01)) * e(1;0)"
        expr: String,
    },
    /// Run property suites and report pass/fail per property
    Check {
        #[command(flatten)]
        common: Common,
        /// Suite names (comma separated), or "all"
        #[arg(long, default_value = "all", value_delimiter = ',')]
        suite: Vec<String>,
    },
    /// Export the matrix of an expression on the truncated basis
    Matrix {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Filter and ultrafilter tables of the depth-bounded semilattices
    Spectra {
        #[command(flatten)]
        common: Common,
    },
    /// Germ table of the shift groupoid (free monoids only)
    Groupoid {
        #[command(flatten)]
        common: Common,
        /// Cocycle window: germs with |h| <= window
        #[arg(long, default_value_t = 3)]
        window: i64,
        /// Point complexity bounds
        #[arg(long, default_value_t = 2)]
        max_pre: usize,
        #[arg(long, default_value_t = 2)]
        max_period: usize,
    },
}

fn emit(common: &Common, text: String) -> anyhow::Result<()> {
    match &common.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(text.as_bytes())?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::ResourceLimit { .. }) => 3,
        Some(Error::Parse { .. }) | Some(Error::BadAutomaton(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Monomorphize a command body over the runtime-selected instance.
macro_rules! with_instance {
    ($common:expr, |$m:ident| $body:block) => {{
        let instance = Instance::parse(&$common.monoid, $common.group_bound)?;
        match &instance {
            Instance::Free($m) => $body,
            Instance::Grid($m) => $body,
            Instance::Odometer($m) => $body,
            Instance::Automaton($m) => $body,
        }
    }};
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Eval { common, expr } => with_instance!(&common, |m| {
            let v = expr::eval_expr(m, &expr)?;
            emit(&common, v.fmt(m))?;
            Ok(ExitCode::SUCCESS)
        }),
        Command::Check { common, suite } => {
            let instance = Instance::parse(&common.monoid, common.group_bound)?;
            let params = SuiteParams {
                depth: common.depth,
                group_bound: common.group_bound,
                delta_depth: common.delta_depth,
                seed: common.seed,
            };
            let reports = run_suites(&instance, &suite, &params);
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&reports)?,
                _ => reports.iter().map(format_text).collect::<Vec<_>>().join("\n"),
            };
            emit(&common, text)?;
            let worst = reports.iter().map(|r| match r.status {
                lcmisg::suites::Status::Fail => 1u8,
                lcmisg::suites::Status::ResourceLimit => 3,
                _ => 0,
            });
            let code = worst.max().unwrap_or(0);
            Ok(ExitCode::from(code))
        }
        Command::Matrix { common, expr } => with_instance!(&common, |m| {
            let v = expr::eval_expr(m, &expr)?;
            let t = build_delta(m, common.delta_depth)?;
            let mat = match &v {
                expr::Value::Triple(s) => represent_triple(m, s, &t)?,
                expr::Value::Set(s) => lcmisg::operator::e_matrix(m, s, &t)?,
            };
            let text = match common.format {
                Format::Csv => dense_csv(&mat),
                _ => matrix_json(m, &t, &mat)?,
            };
            emit(&common, text)?;
            Ok(ExitCode::SUCCESS)
        }),
        Command::Spectra { common } => with_instance!(&common, |m| {
            let text = spectra_json(m, common.depth)?;
            emit(&common, text)?;
            Ok(ExitCode::SUCCESS)
        }),
        Command::Groupoid {
            common,
            window,
            max_pre,
            max_period,
        } => {
            let instance = Instance::parse(&common.monoid, common.group_bound)?;
            let m = match instance {
                Instance::Free(m) => m,
                _ => anyhow::bail!("groupoid export needs a free monoid instance"),
            };
            let text = groupoid_json(&m, common.depth, window, max_pre, max_period)?;
            emit(&common, text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn dense_csv(mat: &SparseOp) -> String {
    let mut out = String::new();
    for row in 0..mat.dim {
        let cells: Vec<String> = (0..mat.dim).map(|col| mat.get(row, col).to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn matrix_json<M: LcmMonoid>(
    m: &M,
    t: &lcmisg::operator::DeltaTruncation<M::Elem>,
    mat: &SparseOp,
) -> anyhow::Result<String> {
    let triplets: Vec<_> = mat.triplets().map(|(r, c, v)| json!([r, c, v])).collect();
    let basis: Vec<String> = t
        .pairs
        .iter()
        .map(|p| format!("({},{})", m.fmt_elem(&p.a), m.fmt_elem(&p.x)))
        .collect();
    Ok(serde_json::to_string_pretty(&json!({
        "dim": mat.dim,
        "triplets": triplets,
        "basis": basis,
    }))?)
}

fn spectra_json<M: LcmMonoid>(m: &M, depth: usize) -> anyhow::Result<String> {
    let left = spectra::ideal_lattice(m, Side::Left, depth)?;
    let right = spectra::ideal_lattice(m, Side::Right, depth)?;
    let prod = spectra::product_semilattice(&left.lattice, &right.lattice);
    let (pf, pu) = spectra::enumerate_filters(&prod.lattice);
    let describe = |lat: &spectra::IdealLattice<M::Elem>| {
        let (f, u) = spectra::enumerate_filters(&lat.lattice);
        json!({
            "elements": lat.lattice.labels,
            "filters": f.len(),
            "ultrafilters": u.len(),
            "filter_table": f.iter().map(|x| {
                x.members(&lat.lattice).iter().map(|&i| lat.lattice.labels[i].clone()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    };
    let (rf, ru) = spectra::enumerate_filters(&right.lattice);
    Ok(serde_json::to_string_pretty(&json!({
        "depth": depth,
        "filters": rf.len(),
        "ultrafilters": ru.len(),
        "left_ideals": describe(&left),
        "right_ideals": describe(&right),
        "product": {
            "filters": pf.len(),
            "ultrafilters": pu.len(),
        },
    }))?)
}

fn groupoid_json(
    m: &lcmisg::instances::FreeMonoid,
    depth: usize,
    window: i64,
    max_pre: usize,
    max_period: usize,
) -> anyhow::Result<String> {
    let rays = Ray::enumerate(m.alphabet(), max_pre, max_period);
    let mut points = Vec::new();
    for l in &rays {
        for r in &rays {
            points.push(BiPoint {
                left: l.clone(),
                right: r.clone(),
            });
        }
    }
    let triples = isg::enumerate_triples(m, depth)?;
    // germ classes keyed by the complete invariant (h, point)
    let mut classes: Vec<(i64, usize, String)> = Vec::new();
    for s in &triples {
        let h = cocycle_h(s)?;
        if h.abs() > window {
            continue;
        }
        for (pi, pt) in points.iter().enumerate() {
            if Germ::new(s.clone(), pt.clone())?.is_some()
                && !classes.iter().any(|(ch, cp, _)| *ch == h && *cp == pi)
            {
                classes.push((h, pi, isg::fmt_triple(m, s)));
            }
        }
    }
    classes.sort();
    let germs: Vec<_> = classes
        .iter()
        .map(|(h, pi, rep)| {
            json!({
                "h": h,
                "point": points[*pi].fmt(),
                "representative": rep,
            })
        })
        .collect();
    Ok(serde_json::to_string_pretty(&json!({
        "depth": depth,
        "window": window,
        "points": points.len(),
        "germ_classes": germs.len(),
        "germs": germs,
    }))?)
}
