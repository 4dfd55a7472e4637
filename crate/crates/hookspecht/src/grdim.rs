//! Graded dimensions of hook Specht modules and of their composition factors.
//!
//! `grdim S_{((n-m),(1^m))}` is available both by enumeration
//! ([`grdim_s_oracle`]) and in closed form ([`grdim_s_closed`]). Each
//! composition factor is realized by a subset of the row's tableaux cut out by
//! where the entries `1` and `n` sit ([`SubsetConstraint`]); centering the
//! subset polynomial yields the factor's graded dimension and its shift in the
//! row.

use std::fmt;

use num_bigint::BigInt;

use crate::hook_theory::{abc_counts, case_of, row_labels, CaseTag, FactorLabel};
use crate::laurent::LaurentPoly;
use crate::partition::{Multipartition, Quantum};
use crate::tableaux::{degree, enumerate_standard, hook_tableaux};
use crate::{Error, Result};

/// `C(a, b)`, zero outside `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        BigInt::default()
    } else {
        num_integer::binomial(BigInt::from(a), BigInt::from(b))
    }
}

fn fl(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn check_row(n: usize, m: usize, q: &Quantum) -> Result<()> {
    q.require_level2()?;
    if m > n {
        return Err(Error::InvalidIndex { index: m, reason: format!("row index exceeds n={n}") });
    }
    Ok(())
}

/// `sum_t v^deg(t)` over all standard `((n-m),(1^m))`-tableaux.
pub fn grdim_s_oracle(n: usize, m: usize, q: &Quantum) -> Result<LaurentPoly> {
    check_row(n, m, q)?;
    let mut p = LaurentPoly::zero();
    for t in enumerate_standard(&Multipartition::hook(n, m)) {
        p.add_term(degree(&t, q), 1);
    }
    Ok(p)
}

/// The degree offset `floor(m/e) + floor((m+e-l-2)/e) + floor((l+1)/e)`.
pub fn degree_offset(m: usize, q: &Quantum) -> i64 {
    let (e, l, m) = (q.e() as i64, q.l() as i64, m as i64);
    fl(m, e) + fl(m + e - l - 2, e) + fl(l + 1, e)
}

/// Which of the three `m`-regimes a hook row falls in: `m <= n/e`,
/// `n/e < m < n - n/e`, or `m >= n - n/e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Low,
    Middle,
    High,
}

pub fn regime(n: usize, m: usize, q: &Quantum) -> Regime {
    let e = q.e();
    if e * m <= n {
        Regime::Low
    } else if e * m < e * n - n {
        Regime::Middle
    } else {
        Regime::High
    }
}

/// Extremes of the leg statistic `a_t` over a row, `1 <= m <= n`.
pub fn maxmin_a(n: usize, m: usize, q: &Quantum) -> (i64, i64) {
    let (a, b, _) = abc_counts(n, q);
    let (a, b, n_, m_) = (a as i64, b as i64, n as i64, m as i64);
    match regime(n, m, q) {
        Regime::Low => (m_, -m_),
        Regime::Middle => (a, -b),
        Regime::High => (n_ - m_ + a - b, m_ - n_ + a - b),
    }
}

/// Closed form for `grdim S_{((n-m),(1^m))}`: the coefficient of
/// `v^(max - i + offset)` counts leg sets with `max - i + j` entries `== l+1`,
/// `j` entries `== l+2` and the rest neither.
pub fn grdim_s_closed(n: usize, m: usize, q: &Quantum) -> Result<LaurentPoly> {
    check_row(n, m, q)?;
    if m == 0 {
        return Ok(LaurentPoly::one());
    }
    let (a, b, c) = abc_counts(n, q);
    let (a, b, c, m_) = (a as i64, b as i64, c as i64, m as i64);
    let (max, min) = maxmin_a(n, m, q);
    let x = degree_offset(m, q);
    let mut p = LaurentPoly::zero();
    for i in 0..=max - min {
        let coeff: BigInt = (0..=b).map(|j| binom(a, max - i + j) * binom(b, j) * binom(c, m_ - max + i - 2 * j)).sum();
        p.add_term(max - i + x, coeff);
    }
    Ok(p)
}

/// First, second, second-to-last and last terms `(coeff, exp)` of
/// `grdim S_{((n-m),(1^m))}`, `1 <= m <= n`.
pub fn boundary_terms(n: usize, m: usize, q: &Quantum) -> Result<[(BigInt, i64); 4]> {
    check_row(n, m, q)?;
    if m == 0 {
        return Err(Error::InvalidIndex { index: 0, reason: "boundary terms need m >= 1".into() });
    }
    let (a, b, c) = abc_counts(n, q);
    let (a, b, c, n, m_) = (a as i64, b as i64, c as i64, n as i64, m as i64);
    let x = degree_offset(m, q);
    let bc = |k: i64| BigInt::from(k);
    Ok(match regime(n as usize, m, q) {
        Regime::Low => [
            (binom(a, m_), m_ + x),
            (bc(c) * binom(a, m_ - 1), m_ - 1 + x),
            (bc(c) * binom(b, m_ - 1), 1 - m_ + x),
            (binom(b, m_), -m_ + x),
        ],
        Regime::Middle => [
            (binom(c, m_ - a), a + x),
            (bc(a) * binom(c, m_ - a + 1) + bc(b) * binom(c, m_ - a - 1), a - 1 + x),
            (bc(b) * binom(c, m_ - b + 1) + bc(a) * binom(c, m_ - b - 1), 1 - b + x),
            (binom(c, m_ - b), -b + x),
        ],
        Regime::High => {
            let top = n - m_ + a - b;
            [
                (binom(b, n - m_), top + x),
                (bc(c) * binom(b, n - m_ - 1), top - 1 + x),
                (bc(c) * binom(a, n - m_ - 1), m_ - n + a - b + 1 + x),
                (binom(a, n - m_), m_ - n + a - b + x),
            ]
        }
    })
}

/// Part of a hook diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Arm,
    Leg,
}

/// Restricts a row's tableaux by where `1` and `n` sit. `n` in the arm means
/// it is the hand node; `n` in the leg means it is the foot node.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SubsetConstraint {
    pub entry_one: Option<Side>,
    pub entry_n: Option<Side>,
}

impl SubsetConstraint {
    pub const ALL: Self = Self { entry_one: None, entry_n: None };

    pub fn new(entry_one: Option<Side>, entry_n: Option<Side>) -> Self {
        Self { entry_one, entry_n }
    }

    pub fn validate(&self, n: usize, m: usize) -> Result<()> {
        let fits = |s: Option<Side>| match s {
            None => true,
            Some(Side::Arm) => n > m,
            Some(Side::Leg) => m > 0,
        };
        let clash = n == 1 && self.entry_one.is_some() && self.entry_n.is_some() && self.entry_one != self.entry_n;
        if fits(self.entry_one) && fits(self.entry_n) && !clash {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("constraint {self} is inconsistent with ((n-m),(1^m)), n={n}, m={m}")))
        }
    }

    fn admits(&self, n: usize, leg: &[usize]) -> bool {
        let side = |k: usize| if leg.contains(&k) { Side::Leg } else { Side::Arm };
        self.entry_one.is_none_or(|s| side(1) == s) && self.entry_n.is_none_or(|s| side(n) == s)
    }
}

impl fmt::Display for SubsetConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.entry_one {
            Some(Side::Arm) => parts.push("1-in-arm"),
            Some(Side::Leg) => parts.push("1-in-leg"),
            None => {}
        }
        match self.entry_n {
            Some(Side::Arm) => parts.push("n-at-hand"),
            Some(Side::Leg) => parts.push("n-at-foot"),
            None => {}
        }
        if parts.is_empty() {
            f.write_str("all")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

/// `sum v^deg(t)` over the row's tableaux admitted by `c`.
pub fn grdim_subset(n: usize, m: usize, q: &Quantum, c: SubsetConstraint) -> Result<LaurentPoly> {
    check_row(n, m, q)?;
    c.validate(n, m)?;
    let mut p = LaurentPoly::zero();
    for t in hook_tableaux(n, m) {
        let leg = t.leg().expect("hook tableau");
        if c.admits(n, &leg) {
            p.add_term(degree(&t, q), 1);
        }
    }
    Ok(p)
}

/// The subsets realizing each factor of [`row_labels`], in the same order.
pub fn realizing_subsets(n: usize, m: usize, q: &Quantum) -> Result<Vec<SubsetConstraint>> {
    check_row(n, m, q)?;
    use Side::{Arm, Leg};
    let s = SubsetConstraint::new;
    if m == 0 || m == n {
        return Ok(vec![SubsetConstraint::ALL]);
    }
    Ok(match case_of(n, q) {
        CaseTag::I => vec![SubsetConstraint::ALL],
        CaseTag::II => vec![s(None, Some(Leg)), s(None, Some(Arm))],
        CaseTag::III => vec![s(Some(Arm), None), s(Some(Leg), None)],
        CaseTag::IV => {
            let all =
                [s(Some(Arm), Some(Leg)), s(Some(Leg), Some(Leg)), s(Some(Arm), Some(Arm)), s(Some(Leg), Some(Arm))];
            let pick: &[usize] = if m == 1 {
                &[0, 2, 3]
            } else if m == n - 1 {
                &[0, 1, 3]
            } else {
                &[0, 1, 2, 3]
            };
            pick.iter().map(|&i| all[i]).collect()
        }
    })
}

/// A composition factor with its centered graded dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFactor {
    pub label: FactorLabel,
    /// Symmetric graded dimension of the simple module.
    pub dim: LaurentPoly,
    /// `x` with the realizing subquotient isomorphic to `D<x>`.
    pub shift_in_row: i64,
    pub constraint: SubsetConstraint,
}

/// The composition factors of `S_{((n-m),(1^m))}` with graded dimensions.
pub fn graded_factors(n: usize, m: usize, q: &Quantum) -> Result<Vec<GradedFactor>> {
    let labels = row_labels(n, m, q)?;
    let subsets = realizing_subsets(n, m, q)?;
    labels
        .into_iter()
        .zip(subsets)
        .map(|(label, constraint)| {
            let (shift_in_row, dim) = grdim_subset(n, m, q, constraint)?.center()?;
            if !dim.is_symmetric() {
                return Err(Error::NonCenterable(format!("{dim} is not symmetric")));
            }
            Ok(GradedFactor { label, dim, shift_in_row, constraint })
        })
        .collect()
}

/// Centered dims of the two tableau models of the image of the Case II map
/// into row `m`: `n` at the foot of row `m + 1`, and `n` at the hand of row `m`.
pub fn gamma_image_models(n: usize, m: usize, q: &Quantum) -> Result<(LaurentPoly, LaurentPoly)> {
    if m + 1 > n || m == 0 {
        return Err(Error::InvalidIndex { index: m, reason: format!("needs 1 <= m < n={n}") });
    }
    let foot = grdim_subset(n, m + 1, q, SubsetConstraint::new(None, Some(Side::Leg)))?.center()?.1;
    let hand = grdim_subset(n, m, q, SubsetConstraint::new(None, Some(Side::Arm)))?.center()?.1;
    Ok((foot, hand))
}

/// Leading term(s) `(coeff, exp)` of `grdim D_{mu_{n,idx}}` in closed form:
/// one term in Cases I-III, two in Case IV.
///
/// Ranges: `1 <= idx < n` in Cases I and II; `idx = 2m, 2m+1` with
/// `1 <= m < n` in Case III and `2 <= m < n` in Case IV.
pub fn leading_terms_d(n: usize, idx: usize, q: &Quantum) -> Result<Vec<(BigInt, i64)>> {
    q.require_level2()?;
    let case = case_of(n, q);
    let (m, second) = match case {
        CaseTag::I | CaseTag::II => (idx, false),
        CaseTag::III | CaseTag::IV => (idx / 2, idx % 2 == 1),
    };
    let lowest = if case == CaseTag::IV { 2 } else { 1 };
    if m < lowest || m >= n {
        return Err(Error::InvalidIndex {
            index: idx,
            reason: format!("no closed leading term in Case {case}, n={n}"),
        });
    }
    let (e, l, n_, m_) = (q.e() as i64, q.l() as i64, n as i64, m as i64);
    let reg = regime(n, m, q);
    let one = |c: BigInt, k: i64| vec![(c, k)];
    Ok(match case {
        CaseTag::I => {
            let a = fl(n_ - l - 1, e) + 1;
            match reg {
                Regime::Low => one(binom(a, m_), m_),
                Regime::Middle => one(binom(n_ - 2 * a, m_ - a), a),
                Regime::High => one(binom(a, n_ - m_), n_ - m_),
            }
        }
        CaseTag::II => {
            let f = fl(n_ - l - 1, e);
            match reg {
                Regime::Low => one(binom(f, m_), m_),
                Regime::Middle => one(binom(n_ - 2 * f - 1, m_ - f), f),
                Regime::High => one(binom(f, n_ - m_ - 1), n_ - m_ - 1),
            }
        }
        CaseTag::III => {
            let f = n_ / e;
            let k = m_ - second as i64;
            match reg {
                Regime::Low => one(binom(f, k), k),
                Regime::Middle => one(binom(n_ - 2 * f - 1, k - f), f),
                Regime::High => one(binom(f, n_ - k - 1), n_ - k - 1),
            }
        }
        CaseTag::IV => {
            let (nn, k, g) = (n_ / e, (n_ - e) / e, (e - 2) * n_ / e);
            let s = second as i64;
            let gk = BigInt::from(g);
            let kk = BigInt::from(k);
            if e * m_ <= n_ {
                let t = m_ - 1 - s;
                vec![(binom(k, t), t), (gk * binom(k, t - 1), t - 1)]
            } else if e * m_ <= n_ * (e - 1) {
                let t = m_ - s - nn;
                vec![(binom(g, t), k), (kk * (binom(g, t + 1) + binom(g, t - 1)), k - 1)]
            } else {
                let t = n_ - m_ - 1 + s;
                vec![(binom(k, t), t), (gk * binom(k, t - 1), t - 1)]
            }
        }
    })
}
