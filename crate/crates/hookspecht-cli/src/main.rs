//! `hookspecht`: graded dimensions, factor labels and decomposition matrices
//! for hook Specht modules at level two.

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hookspecht::decomp::{build_matrix, row_factors};
use hookspecht::grdim::{graded_factors, grdim_s_closed, grdim_s_oracle, grdim_subset, Side, SubsetConstraint};
use hookspecht::hook_theory::case_of;
use hookspecht::signatures::{cogood_node, good_node, is_regular, reduced, signature};
use hookspecht::sweep::sweep;
use hookspecht::tableaux::{degree, hook_tableaux, residue_sequence};
use hookspecht::{Exec, LaurentPoly, Multipartition, Quantum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "hookspecht", version, about = "Graded hook Specht modules of level-two cyclotomic KLR algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded dimension of S_((n-m),(1^m)), closed form against enumeration.
    Grdim(GrdimArgs),
    /// Hook rows of the graded decomposition matrix.
    Matrix(MatrixArgs),
    /// Composition factors of one hook row, or signatures of a bipartition.
    Labels(LabelsArgs),
    /// Standard tableaux of a hook row with residues and degrees.
    Tableaux(TableauxArgs),
    /// Check every closed form against brute force over a range of cells.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Charge {
    /// Quantum characteristic, at least 3.
    #[arg(long, value_parser = parse_e)]
    e: usize,
    /// Multicharge, two comma-separated residues.
    #[arg(long, value_delimiter = ',', num_args = 1, required = true, allow_hyphen_values = true)]
    kappa: Vec<i64>,
}

impl Charge {
    fn quantum(&self) -> Result<Quantum, String> {
        if self.kappa.len() != 2 {
            return Err(format!("--kappa needs two residues, got {}", self.kappa.len()));
        }
        Quantum::level2(self.e, self.kappa[0], self.kappa[1]).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Tex,
}

#[derive(Args)]
struct GrdimArgs {
    #[command(flatten)]
    charge: Charge,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Restrict to tableaux by where 1 and n sit, e.g. `1-in-arm+n-at-foot`.
    #[arg(long, value_parser = parse_constraint)]
    constraint: Option<SubsetConstraint>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct MatrixArgs {
    #[command(flatten)]
    charge: Charge,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Evaluate entries at v = 1.
    #[arg(long)]
    ungraded: bool,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LabelsArgs {
    #[command(flatten)]
    charge: Charge,
    #[arg(long, required_unless_present = "lambda")]
    n: Option<usize>,
    #[arg(long, required_unless_present = "lambda")]
    m: Option<usize>,
    /// Inspect signatures of this bipartition instead, e.g. `((7,4,4),(4))`.
    #[arg(long, conflicts_with_all = ["n", "m"])]
    lambda: Option<Multipartition>,
    /// Only this residue when inspecting `--lambda`.
    #[arg(long, requires = "lambda")]
    i: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TableauxArgs {
    #[command(flatten)]
    charge: Charge,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated list of quantum characteristics.
    #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
    e: Vec<usize>,
    #[arg(long)]
    max_n: usize,
    /// Use one worker.
    #[arg(long)]
    sequential: bool,
}

fn parse_e(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(e) if e >= 3 => Ok(e),
        Ok(e) => Err(format!("e must be at least 3, got {e}")),
        Err(_) => Err(format!("{s:?} is not a nonnegative integer")),
    }
}

fn check_row(n: usize, m: usize) -> Result<(), Failure> {
    if m > n {
        return Err(Failure::Usage(format!("m={m} exceeds n={n}")));
    }
    Ok(())
}

fn parse_constraint(s: &str) -> Result<SubsetConstraint, String> {
    let mut c = SubsetConstraint::ALL;
    if s == "all" {
        return Ok(c);
    }
    for part in s.split('+') {
        match part {
            "1-in-arm" => c.entry_one = Some(Side::Arm),
            "1-in-leg" => c.entry_one = Some(Side::Leg),
            "n-at-hand" => c.entry_n = Some(Side::Arm),
            "n-at-foot" => c.entry_n = Some(Side::Leg),
            _ => {
                return Err(format!("unknown constraint {part:?}; use 1-in-arm, 1-in-leg, n-at-hand, n-at-foot or all"))
            }
        }
    }
    Ok(c)
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<hookspecht::Error> for Failure {
    fn from(e: hookspecht::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stdout().is_terminal()
}

/// `word` in green or red when writing to a terminal.
fn verdict(word: &str, good: bool) -> String {
    if color_enabled() {
        format!("\x1b[{}m{word}\x1b[0m", if good { 32 } else { 31 })
    } else {
        word.to_string()
    }
}

fn cmd_grdim(a: GrdimArgs) -> Result<String, Failure> {
    let q = a.charge.quantum()?;
    check_row(a.n, a.m)?;
    let shape = Multipartition::hook(a.n, a.m);
    let (poly, equal) = match a.constraint {
        None | Some(SubsetConstraint::ALL) => {
            let closed = grdim_s_closed(a.n, a.m, &q)?;
            let equal = closed == grdim_s_oracle(a.n, a.m, &q)?;
            (closed, Some(equal))
        }
        Some(c) => (grdim_subset(a.n, a.m, &q, c)?, None),
    };
    let constraint = a.constraint.unwrap_or(SubsetConstraint::ALL);
    Ok(match a.format {
        Format::Json => {
            let mut v = json!({
                "schema": 1,
                "shape": shape.to_string(),
                "constraint": constraint.to_string(),
                "poly": poly.to_string(),
                "terms": poly.to_json(),
            });
            if let Some(eq) = equal {
                v["closed_equals_oracle"] = json!(eq);
            }
            format!("{v}\n")
        }
        Format::Tex => format!("{}\n", poly.to_tex()),
        Format::Text | Format::Csv => match equal {
            Some(eq) => format!("{poly}  {}\n", verdict(if eq { "EQUAL" } else { "DIFFER" }, eq)),
            None => format!("{poly}\n"),
        },
    })
}

fn cmd_matrix(a: MatrixArgs) -> Result<String, Failure> {
    let q = a.charge.quantum()?;
    let mat = build_matrix(a.n, &q)?;
    let graded = !a.ungraded;
    let body = match a.format {
        Format::Text => mat.to_text(graded),
        Format::Json => mat.to_canonical_json(graded) + "\n",
        Format::Csv => mat.to_csv(graded),
        Format::Tex => mat.to_tex(graded),
    };
    match a.out {
        Some(path) => {
            std::fs::write(&path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(body),
    }
}

fn cmd_labels(a: LabelsArgs) -> Result<String, Failure> {
    let q = a.charge.quantum()?;
    if let Some(lam) = a.lambda {
        return inspect_signatures(&lam, &q, a.i, a.format);
    }
    let (n, m) = (a.n.expect("required by clap"), a.m.expect("required by clap"));
    check_row(n, m)?;
    let rows = row_factors(n, m, &q)?;
    let dims = graded_factors(n, m, &q)?;
    Ok(match a.format {
        Format::Json => {
            let factors: Vec<_> = rows
                .iter()
                .zip(&dims)
                .map(|((label, x), d)| {
                    json!({
                        "name": label.to_string(),
                        "label": label.bipartition.to_string(),
                        "exponent": x,
                        "grdim": d.dim.to_string(),
                        "subset": d.constraint.to_string(),
                    })
                })
                .collect();
            let shape = Multipartition::hook(n, m).to_string();
            let v = json!({"schema": 1, "case": case_of(n, &q).to_string(), "shape": shape, "factors": factors});
            format!("{v}\n")
        }
        _ => {
            let mut s = format!("S{} case {}\n", Multipartition::hook(n, m), case_of(n, &q));
            for ((label, x), d) in rows.iter().zip(&dims) {
                s += &format!("{label}  {}  grdim D = {}  [{}]\n", LaurentPoly::monomial(*x, 1), d.dim, d.constraint);
            }
            s
        }
    })
}

fn inspect_signatures(
    lam: &Multipartition,
    q: &Quantum,
    only: Option<usize>,
    format: Format,
) -> Result<String, Failure> {
    if lam.level() != 2 {
        return Err(Failure::Usage(format!("{lam} is not a bipartition")));
    }
    let residues: Vec<usize> = match only {
        Some(i) if i >= q.e() => return Err(Failure::Usage(format!("residue {i} is not below e={}", q.e()))),
        Some(i) => vec![i],
        None => (0..q.e()).collect(),
    };
    let opt = |a: Option<hookspecht::Node>| a.map_or("-".to_string(), |a| a.to_string());
    let regular = is_regular(lam, q);
    Ok(match format {
        Format::Json => {
            let rows: Vec<_> = residues
                .iter()
                .map(|&i| {
                    json!({
                        "i": i,
                        "signature": signature(lam, q, i).to_string(),
                        "reduced": reduced(lam, q, i).to_string(),
                        "good": good_node(lam, q, i).map(|a| a.to_string()),
                        "cogood": cogood_node(lam, q, i).map(|a| a.to_string()),
                    })
                })
                .collect();
            format!("{}\n", json!({"schema": 1, "lambda": lam.to_string(), "regular": regular, "residues": rows}))
        }
        _ => {
            let mut s = format!("{lam} regular={regular}\n");
            for i in residues {
                s += &format!(
                    "i={i}  signature {}  reduced {}  good {}  cogood {}\n",
                    signature(lam, q, i),
                    reduced(lam, q, i),
                    opt(good_node(lam, q, i)),
                    opt(cogood_node(lam, q, i)),
                );
            }
            s
        }
    })
}

fn cmd_tableaux(a: TableauxArgs) -> Result<String, Failure> {
    let q = a.charge.quantum()?;
    check_row(a.n, a.m)?;
    let mut s = String::new();
    for t in hook_tableaux(a.n, a.m) {
        let res: Vec<String> = residue_sequence(&t, &q).iter().map(ToString::to_string).collect();
        s += &format!("{t}  res ({})  deg {}\n", res.join(","), degree(&t, &q));
    }
    Ok(s)
}

fn cmd_verify(a: VerifyArgs) -> Result<String, Failure> {
    let exec = if a.sequential { Exec::Sequential } else { Exec::Parallel };
    let report = sweep(&a.e, a.max_n, exec)?;
    let mut out = std::io::stdout().lock();
    for f in &report.failures {
        let _ = writeln!(out, "{f}");
    }
    if report.passed() {
        let _ = writeln!(out, "{}: {} checks", verdict("PASS", true), report.total_checks());
        Ok(String::new())
    } else {
        let _ =
            writeln!(out, "{}: {} of {} checks", verdict("FAIL", false), report.failures.len(), report.total_checks());
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Grdim(a) => cmd_grdim(a),
        Command::Matrix(a) => cmd_matrix(a),
        Command::Labels(a) => cmd_labels(a),
        Command::Tableaux(a) => cmd_tableaux(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
