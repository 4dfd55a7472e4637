//! Case classification and composition-factor labels for hook rows.
//!
//! Writing `l = kappa_2 - kappa_1 mod e`, a pair `(n, kappa)` falls in one of
//! four cases:
//!
//! | case | condition |
//! |------|-----------|
//! | I    | `l != e-1`, `n != l+1 mod e` |
//! | II   | `l != e-1`, `n == l+1 mod e` |
//! | III  | `l == e-1`, `n != 0 mod e` |
//! | IV   | `l == e-1`, `n == 0 mod e` |
//!
//! The labels `mu_{n,idx}` are piecewise; boundaries of the form
//! `m < n - n/e` are compared exactly as `e*m < e*n - n`, and the first
//! matching piece wins.

use std::fmt;

use crate::partition::{removable_nodes, remove_all, Multipartition, Node, Partition, Quantum};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::I => "I",
            CaseTag::II => "II",
            CaseTag::III => "III",
            CaseTag::IV => "IV",
        })
    }
}

pub fn case_of(n: usize, q: &Quantum) -> CaseTag {
    let (e, l) = (q.e(), q.l());
    match (l == e - 1, n % e == (l + 1) % e, n.is_multiple_of(e)) {
        (false, false, _) => CaseTag::I,
        (false, true, _) => CaseTag::II,
        (true, _, false) => CaseTag::III,
        (true, _, true) => CaseTag::IV,
    }
}

/// `{a}`: the `e-1` parts `floor((a+e-2-j)/(e-1))`, `j = 0..e-2`, zeros dropped.
pub fn braces_seq(a: usize, e: usize) -> Partition {
    let parts = (0..e - 1).map(|j| (a + e - 2 - j) / (e - 1)).filter(|&x| x > 0).collect();
    Partition::new(parts).expect("braces are weakly decreasing")
}

/// Label of the simple module `S_{(∅,(1^n))}`: `(∅,(1^n))` if `n < l`, else
/// `(({n-l}),(1^l))`.
pub fn sign_label(n: usize, q: &Quantum) -> Multipartition {
    let l = q.l();
    if n < l {
        Multipartition::hook(n, n)
    } else {
        Multipartition::new(vec![braces_seq(n - l, q.e()), Partition::column(l)])
    }
}

/// `(a_n, b_n, c_n)`: how many of `1..=n` are `l+1`, `l+2`, or neither, mod `e`.
pub fn abc_counts(n: usize, q: &Quantum) -> (usize, usize, usize) {
    let (e, l) = (q.e(), q.l());
    let a = (1..=n).filter(|i| i % e == (l + 1) % e).count();
    let b = (1..=n).filter(|i| i % e == (l + 2) % e).count();
    (a, b, n - a - b)
}

/// The same counts in closed form, by case.
pub fn abc_closed(n: usize, q: &Quantum) -> (usize, usize, usize) {
    let (e, l, n_) = (q.e() as i64, q.l() as i64, n as i64);
    let f = (n_ - l - 1).div_euclid(e);
    let (a, b) = match case_of(n, q) {
        CaseTag::I => (f + 1, f + 1),
        CaseTag::II => (f + 1, f),
        CaseTag::III => (n_ / e, n_ / e + 1),
        CaseTag::IV => (n_ / e, n_ / e),
    };
    (a as usize, b as usize, (n_ - a - b) as usize)
}

/// How a composition factor of a hook row is named.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `D_{((n),∅)}`
    Trivial,
    /// `D_{(∅,(1^n))^R}`
    Sign,
    /// `D_{mu_{n,idx}}`
    Mu(usize),
}

/// A composition-factor label together with the name it was produced under.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorLabel {
    pub n: usize,
    pub bipartition: Multipartition,
    pub provenance: Provenance,
}

impl fmt::Display for FactorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.provenance {
            Provenance::Trivial => write!(f, "trivial={}", self.bipartition),
            Provenance::Sign => write!(f, "sign={}", self.bipartition),
            Provenance::Mu(i) => write!(f, "mu_{{{},{}}}={}", self.n, i, self.bipartition),
        }
    }
}

fn assemble(first: Vec<usize>, second: Partition, n: usize, idx: usize) -> Result<Multipartition> {
    let first = Partition::new(first.into_iter().filter(|&x| x > 0).collect()).map_err(|_| Error::InvalidIndex {
        index: idx,
        reason: format!("first component not a partition for n={n}"),
    })?;
    Ok(Multipartition::new(vec![first, second]))
}

fn cat(head: &[usize], braces: Partition, tail: &[usize]) -> Vec<usize> {
    head.iter().copied().chain(braces.parts().iter().copied()).chain(tail.iter().copied()).collect()
}

/// The bipartition `mu_{n,idx}`.
///
/// Valid indices: `0 <= idx < n` in Cases I and II; `2 <= idx <= 2n-1` in
/// Case III; `4 <= idx <= 2n-1` in Case IV.
pub fn mu_label(n: usize, idx: usize, q: &Quantum) -> Result<Multipartition> {
    q.require_level2()?;
    let (e, l) = (q.e(), q.l());
    let case = case_of(n, q);
    let (lo, hi) = match case {
        CaseTag::I | CaseTag::II => (0, n as i64 - 1),
        CaseTag::III => (2, 2 * n as i64 - 1),
        CaseTag::IV => (4, 2 * n as i64 - 1),
    };
    if (idx as i64) < lo || idx as i64 > hi {
        return Err(Error::InvalidIndex { index: idx, reason: format!("Case {case} with n={n} needs {lo}..={hi}") });
    }
    let br = |a: usize| braces_seq(a, e);
    let col = Partition::column;
    // the second component (2,1^{e-2})
    let tall = || Partition::new(std::iter::once(2).chain(std::iter::repeat_n(1, e - 2)).collect()).unwrap();
    let ge_tail = |m: usize| e * m >= e * n - n;
    let out = match case {
        CaseTag::I => {
            let m = idx;
            if m < l + 1 {
                (vec![n - m], col(m))
            } else if !ge_tail(m) {
                (cat(&[n - m], br(m - l - 1), &[]), col(l + 1))
            } else {
                (cat(&[], br(m - l), &[n - m - 1]), col(l + 1))
            }
        }
        CaseTag::II => {
            let m = idx;
            if m < l + 1 {
                (vec![n - m], col(m))
            } else if m == n - 1 {
                return Ok(sign_label(n, q));
            } else if !ge_tail(m) {
                (cat(&[n - m], br(m - l - 1), &[]), col(l + 1))
            } else {
                (cat(&[], br(m - l + 1), &[n - m - 2]), col(l + 1))
            }
        }
        CaseTag::III => {
            let (m, odd) = (idx / 2, idx % 2 == 1);
            match (odd, ge_tail(m)) {
                (false, false) => (cat(&[n - m], br(m), &[]), Partition::empty()),
                (false, true) => (cat(&[], br(m + 1), &[n - 1 - m]), Partition::empty()),
                (true, _) if m < e => (vec![n - m], col(m)),
                (true, false) => (cat(&[n - m], br(m - e), &[]), tall()),
                (true, true) => (cat(&[], br(m - e + 1), &[n - 1 - m]), tall()),
            }
        }
        CaseTag::IV => {
            let (m, odd) = (idx / 2, idx % 2 == 1);
            let head = e * m <= e * n - n;
            match (odd, head) {
                (false, true) => (cat(&[n - m + 1], br(m - 1), &[]), Partition::empty()),
                (false, false) => (cat(&[], br(m + 1), &[n - m - 1]), Partition::empty()),
                (true, _) if m <= e => (vec![n - m + 1], col(m - 1)),
                (true, true) => (cat(&[n - m + 1], br(m - e - 1), &[]), tall()),
                (true, false) => (cat(&[], br(m - e + 1), &[n - m - 1]), tall()),
            }
        }
    };
    assemble(out.0, out.1, n, idx)
}

/// Labels of the composition factors of `S_{((n-m),(1^m))}`, in the order
/// used for its row of the decomposition matrix.
pub fn row_labels(n: usize, m: usize, q: &Quantum) -> Result<Vec<FactorLabel>> {
    q.require_level2()?;
    if m > n {
        return Err(Error::InvalidIndex { index: m, reason: format!("row index exceeds n={n}") });
    }
    let trivial = || FactorLabel { n, bipartition: Multipartition::hook(n, 0), provenance: Provenance::Trivial };
    let sign = || FactorLabel { n, bipartition: sign_label(n, q), provenance: Provenance::Sign };
    let mu = |idx: usize| -> Result<FactorLabel> {
        Ok(FactorLabel { n, bipartition: mu_label(n, idx, q)?, provenance: Provenance::Mu(idx) })
    };
    if m == 0 {
        return Ok(vec![trivial()]);
    }
    if m == n {
        return Ok(vec![sign()]);
    }
    match case_of(n, q) {
        CaseTag::I => Ok(vec![mu(m)?]),
        CaseTag::II => Ok(vec![mu(m - 1)?, mu(m)?]),
        CaseTag::III => Ok(vec![mu(2 * m)?, mu(2 * m + 1)?]),
        CaseTag::IV if m == 1 => Ok(vec![trivial(), mu(4)?, mu(5)?]),
        CaseTag::IV if m == n - 1 => Ok(vec![mu(2 * m)?, mu(2 * m + 1)?, sign()]),
        CaseTag::IV => Ok(vec![mu(2 * m)?, mu(2 * m + 1)?, mu(2 * m + 2)?, mu(2 * m + 3)?]),
    }
}

/// A restriction chain for the hook `((n-m),(1^m))` that strips it to
/// `(∅,∅)`: at each step take the residue of the foot node (or of the hand
/// node once the leg is empty) and remove every removable node of that
/// residue.
pub fn restriction_chain(n: usize, m: usize, q: &Quantum) -> Vec<(usize, usize)> {
    let mut lam = Multipartition::hook(n, m);
    let mut chain = Vec::new();
    while !lam.is_empty() {
        let (arm, leg) = (lam.component(1).size(), lam.component(2).len());
        let node = if leg > 0 { Node::new(leg, 1, 2) } else { Node::new(1, arm, 1) };
        let i = crate::partition::res(&node, q);
        chain.push((i, removable_nodes(&lam, q, Some(i)).len()));
        lam = remove_all(&lam, q, i);
    }
    chain
}
