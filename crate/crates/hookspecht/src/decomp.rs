//! Hook rows of the graded decomposition matrix.
//!
//! Rows are the hook bipartitions `((n-m),(1^m))` for `m = 0..=n`; columns are
//! the distinct factor labels in order of first appearance down the rows.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::grdim::{graded_factors, grdim_s_oracle};
use crate::hook_theory::{case_of, row_labels, CaseTag, FactorLabel};
use crate::laurent::{bigint_json, LaurentPoly};
use crate::partition::{Multipartition, Quantum};
use crate::{Error, Result};

/// Exponents `x` with `[S_{((n-m),(1^m))} : D]_v = v^x`, aligned with
/// [`row_labels`].
pub fn row_exponents(n: usize, m: usize, q: &Quantum) -> Result<Vec<i64>> {
    q.require_level2()?;
    if m > n {
        return Err(Error::InvalidIndex { index: m, reason: format!("row index exceeds n={n}") });
    }
    let (e, l, n_, m_) = (q.e() as i64, q.l() as i64, n as i64, m as i64);
    let fl = |a: i64| a.div_euclid(e);
    if m == 0 {
        return Ok(vec![0]);
    }
    if m == n {
        return Ok(vec![if l == e - 1 { 2 * fl(n_) } else { fl(n_) + fl(n_ - l - 1) + 1 }]);
    }
    Ok(match case_of(n, q) {
        CaseTag::I => vec![fl(m_) + fl(m_ + e - l - 2)],
        CaseTag::II => {
            let base = fl(m_) + fl(m_ + e - 2 - l);
            vec![base + 1, base]
        }
        CaseTag::III => {
            let base = fl(m_) + fl(m_ + e - 1);
            vec![base, base - 1]
        }
        CaseTag::IV => {
            let base = fl(m_) + fl(m_ + e - 1);
            if m == 1 || m == n - 1 {
                vec![base + 1, base, base - 1]
            } else {
                vec![base + 1, base, base, base - 1]
            }
        }
    })
}

/// Composition factors of row `m` with their graded multiplicity exponents.
pub fn row_factors(n: usize, m: usize, q: &Quantum) -> Result<Vec<(FactorLabel, i64)>> {
    Ok(row_labels(n, m, q)?.into_iter().zip(row_exponents(n, m, q)?).collect())
}

/// The hook rows of the graded decomposition matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionSubmatrix {
    pub e: usize,
    pub kappa: [usize; 2],
    pub n: usize,
    pub case: CaseTag,
    pub rows: Vec<Multipartition>,
    pub columns: Vec<Multipartition>,
    /// `entries[m][j]`; zero where the column is not a factor of the row.
    pub entries: Vec<Vec<LaurentPoly>>,
}

pub fn build_matrix(n: usize, q: &Quantum) -> Result<DecompositionSubmatrix> {
    q.require_level2()?;
    let mut columns: Vec<Multipartition> = Vec::new();
    let mut sparse = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = Vec::new();
        for (label, x) in row_factors(n, m, q)? {
            let j = match columns.iter().position(|c| *c == label.bipartition) {
                Some(j) => j,
                None => {
                    columns.push(label.bipartition);
                    columns.len() - 1
                }
            };
            row.push((j, x));
        }
        sparse.push(row);
    }
    let entries = sparse
        .into_iter()
        .map(|row| {
            let mut dense = vec![LaurentPoly::zero(); columns.len()];
            for (j, x) in row {
                dense[j] += LaurentPoly::monomial(x, 1);
            }
            dense
        })
        .collect();
    Ok(DecompositionSubmatrix {
        e: q.e(),
        kappa: [q.kappa()[0], q.kappa()[1]],
        n,
        case: case_of(n, q),
        rows: (0..=n).map(|m| Multipartition::hook(n, m)).collect(),
        columns,
        entries,
    })
}

impl DecompositionSubmatrix {
    /// Entries at `v = 1`.
    pub fn ungraded(&self) -> Vec<Vec<BigInt>> {
        self.entries.iter().map(|r| r.iter().map(LaurentPoly::eval_at_one).collect()).collect()
    }

    pub fn to_json(&self, graded: bool) -> Value {
        let entries: Vec<Value> = if graded {
            self.entries.iter().map(|r| Value::Array(r.iter().map(LaurentPoly::to_json).collect())).collect()
        } else {
            self.ungraded().iter().map(|r| Value::Array(r.iter().map(bigint_json).collect())).collect()
        };
        json!({
            "schema": 1,
            "e": self.e,
            "kappa": self.kappa,
            "n": self.n,
            "case": self.case.to_string(),
            "graded": graded,
            "column_order": "first-appearance",
            "rows": self.rows.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "columns": self.columns.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "entries": entries,
        })
    }

    /// Compact JSON with sorted keys.
    pub fn to_canonical_json(&self, graded: bool) -> String {
        self.to_json(graded).to_string()
    }

    fn cell(&self, m: usize, j: usize, graded: bool) -> String {
        if graded {
            self.entries[m][j].to_string()
        } else {
            self.entries[m][j].eval_at_one().to_string()
        }
    }

    pub fn to_csv(&self, graded: bool) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = std::iter::once("row".to_string()).chain(self.columns.iter().map(ToString::to_string));
        w.write_record(header).expect("in-memory write");
        for (m, lam) in self.rows.iter().enumerate() {
            let rec = std::iter::once(lam.to_string()).chain((0..self.columns.len()).map(|j| self.cell(m, j, graded)));
            w.write_record(rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    pub fn to_tex(&self, graded: bool) -> String {
        let k = self.columns.len();
        let mut s = String::new();
        let cols = "c".repeat(k);
        writeln!(s, "\\begin{{blockarray}}{{c{cols}}}").unwrap();
        let head: Vec<String> = self.columns.iter().map(|c| format!("D_{{{}}}", c.to_tex())).collect();
        writeln!(s, " & {} \\\\", head.join(" & ")).unwrap();
        writeln!(s, "\\begin{{block}}{{c({cols})}}").unwrap();
        for (m, lam) in self.rows.iter().enumerate() {
            let cells: Vec<String> = (0..k)
                .map(|j| match (&self.entries[m][j], graded) {
                    (p, _) if p.is_zero() => String::new(),
                    (p, true) => p.to_tex(),
                    (p, false) => p.eval_at_one().to_string(),
                })
                .collect();
            writeln!(s, "S_{{{}}} & {} \\\\", lam.to_tex(), cells.join(" & ")).unwrap();
        }
        writeln!(s, "\\end{{block}}").unwrap();
        writeln!(s, "\\end{{blockarray}}").unwrap();
        s
    }

    /// Aligned plain-text grid; zero entries print as `.`.
    pub fn to_text(&self, graded: bool) -> String {
        let k = self.columns.len();
        let mut grid: Vec<Vec<String>> =
            vec![std::iter::once(String::new()).chain((1..=k).map(|j| format!("D{j}"))).collect()];
        for (m, lam) in self.rows.iter().enumerate() {
            let cells = (0..k).map(|j| if self.entries[m][j].is_zero() { ".".into() } else { self.cell(m, j, graded) });
            grid.push(std::iter::once(format!("S{lam}")).chain(cells).collect());
        }
        let widths: Vec<usize> =
            (0..=k).map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
        let mut s = format!(
            "e={} kappa=({},{}) n={} case {}; columns in order of first appearance\n",
            self.e, self.kappa[0], self.kappa[1], self.n, self.case
        );
        for row in &grid {
            let line: Vec<String> =
                row.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            writeln!(s, "{}", line.join("  ").trim_end()).unwrap();
        }
        for (j, c) in self.columns.iter().enumerate() {
            writeln!(s, "D{} = {c}", j + 1).unwrap();
        }
        s
    }
}

/// Outcome of checking one row: `grdim S = sum_D v^x grdim D`, and each
/// realizing subset centered at the row exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReport {
    pub n: usize,
    pub m: usize,
    pub ok: bool,
    /// Highest exponent at which the two sides differ.
    pub first_mismatch: Option<i64>,
    pub detail: Option<String>,
}

pub fn verify_row(n: usize, m: usize, q: &Quantum) -> Result<RowReport> {
    let lhs = grdim_s_oracle(n, m, q)?;
    let factors = graded_factors(n, m, q)?;
    let exps = row_exponents(n, m, q)?;
    let rhs: LaurentPoly = factors.iter().zip(&exps).map(|(f, &x)| f.dim.shift(x)).sum();
    let mut detail = None;
    for (f, &x) in factors.iter().zip(&exps) {
        if f.shift_in_row != x {
            detail = Some(format!("{} centers at {} but the row exponent is {x}", f.label, f.shift_in_row));
            break;
        }
    }
    let first_mismatch = (&lhs - &rhs).max_exp();
    if first_mismatch.is_some() && detail.is_none() {
        detail = Some(format!("grdim S = {lhs} but the factors give {rhs}"));
    }
    Ok(RowReport { n, m, ok: first_mismatch.is_none() && detail.is_none(), first_mismatch, detail })
}
