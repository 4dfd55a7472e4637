//! Cell-by-cell comparison of every closed form against brute force.
//!
//! A cell is a triple `(e, l, n)` with `kappa = (0, l)`; each cell runs its
//! hook rows `m = 0..=n` through the checks below. Cells are independent, so
//! they are evaluated through [`Exec`] and reported in a fixed order either way.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::decomp::verify_row;
use crate::exec::Exec;
use crate::grdim::{
    binom, boundary_terms, gamma_image_models, graded_factors, grdim_s_closed, grdim_s_oracle, leading_terms_d,
    maxmin_a,
};
use crate::hook_theory::{case_of, CaseTag, Provenance};
use crate::laurent::LaurentPoly;
use crate::partition::{Multipartition, Quantum};
use crate::signatures::is_regular;
use crate::tableaux::{a_statistic, degree, hook_degree_closed, hook_tableaux};
use crate::{Error, Result};

/// The individual checks, in the order they are run on each row.
pub const CHECKS: [&str; 11] = [
    "grdim-closed",
    "degree-closed",
    "row-decomposition",
    "dimension-at-one",
    "factor-symmetry",
    "boundary-terms",
    "leading-terms",
    "labels-regular-distinct",
    "maxmin-a",
    "gamma-models",
    "cross-row-dims",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub e: usize,
    pub l: usize,
    pub n: usize,
}

impl Cell {
    pub fn quantum(&self) -> Quantum {
        Quantum::level2(self.e, 0, self.l as i64).expect("e >= 3 by construction")
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={} kappa=(0,{}) n={}", self.e, self.l, self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub cell: Cell,
    pub m: usize,
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={} [{}] {}", self.cell, self.m, self.check, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub cells: usize,
    /// Checks run, per check name.
    pub counts: BTreeMap<&'static str, usize>,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn total_checks(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(&mut self, other: SweepReport) {
        self.cells += other.cells;
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.failures.extend(other.failures);
    }
}

/// All cells with `e` in `es`, `0 <= l < e` and `0 <= n <= max_n`.
pub fn cells(es: &[usize], max_n: usize) -> Result<Vec<Cell>> {
    let mut out = Vec::new();
    for &e in es {
        if e < 3 {
            return Err(Error::InvalidInput(format!("e must be at least 3, got {e}")));
        }
        for l in 0..e {
            for n in 0..=max_n {
                out.push(Cell { e, l, n });
            }
        }
    }
    Ok(out)
}

pub fn sweep(es: &[usize], max_n: usize, exec: Exec) -> Result<SweepReport> {
    let cells = cells(es, max_n)?;
    let mut report = SweepReport::default();
    for r in exec.map(&cells, check_cell) {
        report.merge(r);
    }
    Ok(report)
}

struct Recorder {
    cell: Cell,
    m: usize,
    report: SweepReport,
}

impl Recorder {
    fn check(&mut self, name: &'static str, outcome: std::result::Result<(), String>) {
        *self.report.counts.entry(name).or_default() += 1;
        if let Err(detail) = outcome {
            self.report.failures.push(Failure { cell: self.cell, m: self.m, check: name, detail });
        }
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(what: &str, got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn errs<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Runs every check on one cell.
pub fn check_cell(cell: &Cell) -> SweepReport {
    let q = cell.quantum();
    let n = cell.n;
    let mut rec = Recorder { cell: *cell, m: 0, report: SweepReport { cells: 1, ..Default::default() } };
    let mut dims: HashMap<Multipartition, (usize, LaurentPoly)> = HashMap::new();
    for m in 0..=n {
        rec.m = m;
        let oracle = grdim_s_oracle(n, m, &q);

        rec.check(
            "grdim-closed",
            (|| {
                let closed = errs(grdim_s_closed(n, m, &q))?;
                expect_eq("closed form", closed, errs(oracle.clone())?)
            })(),
        );

        rec.check(
            "degree-closed",
            (|| {
                for t in hook_tableaux(n, m) {
                    let leg = t.leg().expect("hook tableau");
                    expect_eq(&format!("degree of {t}"), hook_degree_closed(&leg, &q), degree(&t, &q))?;
                }
                Ok(())
            })(),
        );

        rec.check(
            "row-decomposition",
            (|| {
                let r = errs(verify_row(n, m, &q))?;
                if r.ok {
                    Ok(())
                } else {
                    Err(r.detail.unwrap_or_default())
                }
            })(),
        );

        rec.check(
            "dimension-at-one",
            (|| expect_eq("grdim S at v=1", errs(oracle.clone())?.eval_at_one(), binom(n as i64, m as i64)))(),
        );

        let factors = graded_factors(n, m, &q);

        rec.check(
            "factor-symmetry",
            (|| {
                for f in errs(factors.clone())? {
                    if !f.dim.is_symmetric() || !f.dim.has_nonnegative_coeffs() {
                        return Err(format!("{} has dim {}", f.label, f.dim));
                    }
                }
                Ok(())
            })(),
        );

        if m >= 1 {
            rec.check(
                "boundary-terms",
                (|| {
                    let p = errs(oracle.clone())?;
                    let terms = errs(boundary_terms(n, m, &q))?;
                    let (top, bottom) = (p.max_exp().unwrap_or(0), p.min_exp().unwrap_or(0));
                    expect_eq("top exponent", terms[0].1, top)?;
                    expect_eq("bottom exponent", terms[3].1, bottom)?;
                    for (c, k) in terms {
                        expect_eq(&format!("coefficient of v^{k}"), p.coeff(k), c)?;
                    }
                    Ok(())
                })(),
            );

            rec.check(
                "maxmin-a",
                (|| {
                    let stats = hook_tableaux(n, m).map(|t| a_statistic(&t, &q)).collect::<Result<Vec<_>>>();
                    let stats = errs(stats)?;
                    let got = (*stats.iter().max().unwrap(), *stats.iter().min().unwrap());
                    let want = maxmin_a(n, m, &q);
                    expect_eq("(max a, min a)", format!("{got:?}"), format!("{want:?}"))
                })(),
            );
        }

        rec.check(
            "leading-terms",
            (|| {
                for f in errs(factors.clone())? {
                    let Provenance::Mu(idx) = f.label.provenance else { continue };
                    let Ok(pred) = leading_terms_d(n, idx, &q) else { continue };
                    expect_eq(&format!("top exponent of {}", f.label), f.dim.max_exp().unwrap_or(i64::MIN), pred[0].1)?;
                    for (c, k) in pred {
                        expect_eq(&format!("coefficient of v^{k} in {}", f.label), f.dim.coeff(k), c)?;
                    }
                }
                Ok(())
            })(),
        );

        rec.check(
            "labels-regular-distinct",
            (|| {
                let fs = errs(factors.clone())?;
                for (i, f) in fs.iter().enumerate() {
                    if !is_regular(&f.label.bipartition, &q) {
                        return Err(format!("{} is not regular", f.label));
                    }
                    if fs[..i].iter().any(|g| g.label.bipartition == f.label.bipartition) {
                        return Err(format!("{} repeats in the row", f.label));
                    }
                }
                Ok(())
            })(),
        );

        if case_of(n, &q) == CaseTag::II && m >= 1 && m < n {
            rec.check(
                "gamma-models",
                (|| {
                    let (foot, hand) = errs(gamma_image_models(n, m, &q))?;
                    expect_eq("foot model vs hand model", foot, hand)
                })(),
            );
        }

        rec.check(
            "cross-row-dims",
            (|| {
                for f in errs(factors.clone())? {
                    match dims.get(&f.label.bipartition) {
                        Some((m0, d)) if *d != f.dim => {
                            return Err(format!("{} has dim {} here but {d} in row {m0}", f.label, f.dim));
                        }
                        Some(_) => {}
                        None => {
                            dims.insert(f.label.bipartition.clone(), (m, f.dim.clone()));
                        }
                    }
                }
                Ok(())
            })(),
        );
    }
    rec.report
}
