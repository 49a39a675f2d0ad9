//! Command-line front end. Exit codes: 0 success, 1 failed check,
//! 2 usage, parse or domain error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde::Serialize;

use crate::constructor::{construct_maximal, ConstructionInput};
use crate::corpus::{run_checks, CorpusConfig};
use crate::families::FamilySpec;
use crate::homology::{
    check_small_phidim_remark, gldim, is_self_injective, phi_dim, phi_dim_with_report,
    phi_upper_bound, phidim_one_verdict, BulletOutcome, GlobalDimension, TruncatedAlgebra,
};
use crate::quiver::Quiver;
use crate::Error;

pub const MAX_VERTICES: usize = 64;
pub const MAX_K: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "phidim",
    version,
    about = "φ-dimension of truncated path algebras kQ/J^k"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// φ-dimension, global dimension and rank data for one algebra.
    Compute {
        /// Quiver file, or `-` for standard input.
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Structural verdicts for one algebra.
    Classify {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Radical-square-zero algebra with φ-dimension n.
    Construct {
        #[arg(long)]
        n: usize,
        /// Comma-separated positive rationals; all ones by default.
        #[arg(long)]
        v: Option<String>,
        /// Comma-separated positive rationals; all 1/n by default.
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        strict_positive: bool,
    },
    /// Print a named family member: cycle n[,k], gamma n,m[,k],
    /// afamily n,k,l or s5 n,m,i0.
    Family {
        #[arg(long, value_parser = ["cycle", "gamma", "afamily", "s5"])]
        name: String,
        #[arg(long)]
        params: String,
    },
    /// Run every cross-check on a seeded random corpus.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
}

/// Output of `compute --json`; field order is part of the format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComputeReport {
    pub phidim: usize,
    pub gldim: GlobalDimension,
    pub selfinjective: bool,
    pub basis_size: usize,
    pub rank_sequence: Vec<usize>,
    pub bound_fk: usize,
    pub k: usize,
    pub vertices: usize,
}

impl ComputeReport {
    pub fn new(a: &TruncatedAlgebra) -> Self {
        let (phidim, report) = phi_dim_with_report(a);
        ComputeReport {
            phidim,
            gldim: gldim(a),
            selfinjective: is_self_injective(a),
            basis_size: a.stable_basis().len(),
            rank_sequence: report.rank_sequence,
            bound_fk: phi_upper_bound(a),
            k: a.k(),
            vertices: a.vertex_count(),
        }
    }
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Compute { quiver, k, json } => {
            let a = load_algebra(&quiver, k)?;
            let report = ComputeReport::new(&a);
            if json {
                let text = serde_json::to_string(&report).expect("report serializes");
                writeln!(out, "{text}")?;
            } else {
                write_compute_table(out, &report)?;
            }
        }
        Command::Classify { quiver, k } => {
            let a = load_algebra(&quiver, k)?;
            write_classification(out, &a)?;
        }
        Command::Construct {
            n,
            v,
            w,
            strict_positive,
        } => {
            let defaults = ConstructionInput::uniform(n);
            let mut input = ConstructionInput::new(
                parse_rationals(v.as_deref(), defaults.v_n)?,
                parse_rationals(w.as_deref(), defaults.w_n)?,
            );
            input.strict_positive = strict_positive;
            if input.v_n.len() != n {
                return Err(Failure::Usage(format!(
                    "--v has {} entries, expected {n}",
                    input.v_n.len()
                )));
            }
            let report = construct_maximal(&input)?;
            write!(out, "{}", report.quiver)?;
            writeln!(out, "# lambda: {}", report.lambda)?;
            writeln!(out, "# scale: {}", report.scale_m)?;
            writeln!(out, "# conjugator: {}", report.conjugator)?;
            writeln!(out, "# achieved_phidim: {}", report.achieved_phidim)?;
        }
        Command::Family { name, params } => {
            let params = parse_counts(&params)?;
            let spec = FamilySpec::from_name(&name, &params)?;
            let a = spec.build()?;
            let phi = phi_dim(&a);
            let expected = spec.expected_phidim()?;
            writeln!(out, "# family: {spec}")?;
            write!(out, "{}", a.quiver())?;
            writeln!(out, "# k: {}", a.k())?;
            writeln!(out, "# phidim: {phi}")?;
            if phi != expected {
                writeln!(out, "# expected phidim {expected}: MISMATCH")?;
                return Err(Failure::Check);
            }
        }
        Command::Check {
            seed,
            samples,
            max_vertices,
            max_k,
        } => {
            if !(1..=MAX_VERTICES).contains(&max_vertices) {
                return Err(Failure::Usage(format!(
                    "--max-vertices must be in 1..={MAX_VERTICES}"
                )));
            }
            if !(2..=MAX_K).contains(&max_k) {
                return Err(Failure::Usage(format!("--max-k must be in 2..={MAX_K}")));
            }
            let config = CorpusConfig {
                seed,
                samples,
                max_vertices,
                max_k,
            };
            let reports = run_checks(&config);
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
            writeln!(
                out,
                "seed {seed}: {} cases, {} passed, {} failed",
                reports.len(),
                reports.len() - failed.len(),
                failed.len()
            )?;
            for r in &failed {
                writeln!(
                    out,
                    "case {} (k = {}, phidim = {}):",
                    r.index, r.k, r.phidim
                )?;
                for f in &r.failures {
                    writeln!(out, "  {f}")?;
                }
                for line in r.quiver.lines() {
                    writeln!(out, "  | {line}")?;
                }
            }
            if !failed.is_empty() {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn load_algebra(path: &Path, k: usize) -> Result<TruncatedAlgebra, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    let q = Quiver::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if q.vertex_count() > MAX_VERTICES {
        return Err(Failure::Usage(format!(
            "quiver has {} vertices, the limit is {MAX_VERTICES}",
            q.vertex_count()
        )));
    }
    if k > MAX_K {
        return Err(Failure::Usage(format!("k = {k} exceeds the limit {MAX_K}")));
    }
    Ok(TruncatedAlgebra::new(q, k)?)
}

fn parse_rationals(
    csv: Option<&str>,
    default: Vec<BigRational>,
) -> Result<Vec<BigRational>, Failure> {
    let Some(csv) = csv else {
        return Ok(default);
    };
    csv.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigRational>()
                .map_err(|_| Failure::Usage(format!("not a rational number: {t:?}")))
        })
        .collect()
}

fn parse_counts(csv: &str) -> Result<Vec<usize>, Failure> {
    csv.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("not a count: {t:?}")))
        })
        .collect()
}

fn write_compute_table(out: &mut dyn Write, r: &ComputeReport) -> io::Result<()> {
    let ranks: Vec<String> = r.rank_sequence.iter().map(ToString::to_string).collect();
    writeln!(out, "phidim          {}", r.phidim)?;
    writeln!(out, "gldim           {}", r.gldim)?;
    writeln!(out, "selfinjective   {}", r.selfinjective)?;
    writeln!(out, "basis_size      {}", r.basis_size)?;
    writeln!(out, "rank_sequence   {}", ranks.join(" "))?;
    writeln!(out, "bound_fk        {}", r.bound_fk)?;
    writeln!(out, "k               {}", r.k)?;
    writeln!(out, "vertices        {}", r.vertices)
}

fn names(q: &Quiver, set: &std::collections::BTreeSet<usize>) -> String {
    if set.is_empty() {
        "none".into()
    } else {
        set.iter().map(|&v| q.name(v)).collect::<Vec<_>>().join(" ")
    }
}

fn bullet(outcome: &BulletOutcome) -> String {
    match outcome.holds {
        None => "not applicable".into(),
        Some(true) => "holds".into(),
        Some(false) => "VIOLATED".into(),
    }
}

fn write_classification(out: &mut dyn Write, a: &TruncatedAlgebra) -> io::Result<()> {
    let q = a.quiver();
    let c = q.classify_vertices();
    let verdict = phidim_one_verdict(a);
    let remark = check_small_phidim_remark(a);
    writeln!(out, "vertices: {}  k: {}", a.vertex_count(), a.k())?;
    writeln!(out, "cycle: {}", q.is_cycle())?;
    writeln!(out, "sources: {}", names(q, &c.sources))?;
    writeln!(out, "sinks: {}", names(q, &c.sinks))?;
    writeln!(out, "self-injective: {}", is_self_injective(a))?;
    writeln!(out, "phidim-one: {} ({})", verdict.holds, verdict.reason)?;
    writeln!(out, "phidim: {}", remark.phidim)?;
    match remark.phidim_radical_square_zero {
        Some(d) => writeln!(out, "phidim at J^2: {d}")?,
        None => writeln!(out, "phidim at J^2: not used (quiver has sources or sinks)")?,
    }
    writeln!(
        out,
        "no sources/sinks, value 1 at J^2 => phidim 1: {}",
        bullet(&remark.rsz_one)
    )?;
    writeln!(
        out,
        "k >= n, no sources/sinks, value 2 at J^2 => phidim 2: {}",
        bullet(&remark.rsz_two)
    )?;
    writeln!(
        out,
        "k >= n-1 >= 2 => phidim <= 3: {}",
        bullet(&remark.large_k)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["phidim"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn construct_defaults() {
        let (code, out, _) = run_str(&["construct", "--n", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("# achieved_phidim: 2"));
        let q = Quiver::parse(&out).unwrap();
        assert_eq!(q.arrow_count(), 4);
    }

    #[test]
    fn construct_rejects_zero_weight() {
        let (code, _, err) = run_str(&["construct", "--n", "2", "--w", "1,0"]);
        assert_eq!(code, 2);
        assert!(err.contains("positive"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["compute"]).0, 2);
        assert_eq!(
            run_str(&["family", "--name", "bogus", "--params", "1"]).0,
            2
        );
        assert_eq!(
            run_str(&["family", "--name", "gamma", "--params", "x"]).0,
            2
        );
        assert_eq!(run_str(&["check", "--max-k", "1"]).0, 2);
    }

    #[test]
    fn family_output_reparses() {
        let (code, out, _) = run_str(&["family", "--name", "gamma", "--params", "4,3"]);
        assert_eq!(code, 0);
        assert!(out.contains("# phidim: 2"));
        assert_eq!(
            Quiver::parse(&out).unwrap(),
            crate::families::gamma_quiver(4, 3).unwrap()
        );
    }
}
