//! Partitions, multipartitions, nodes, multicharges and residues.
//!
//! Nodes are 1-indexed triples `(row, col, component)`. Residues are taken in
//! `0..e`; the multicharge is reduced mod `e` when a [`Quantum`] is built.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Quantum characteristic `e` together with a multicharge `kappa`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quantum {
    e: usize,
    kappa: Vec<usize>,
}

impl Quantum {
    pub fn new(e: usize, kappa: &[i64]) -> Result<Self> {
        if e < 3 {
            return Err(Error::InvalidInput(format!("e must be at least 3, got {e}")));
        }
        if kappa.is_empty() {
            return Err(Error::InvalidInput("multicharge must be nonempty".into()));
        }
        let kappa = kappa.iter().map(|&k| k.rem_euclid(e as i64) as usize).collect();
        Ok(Self { e, kappa })
    }

    /// Level-two data with multicharge `(k1, k2)`.
    pub fn level2(e: usize, k1: i64, k2: i64) -> Result<Self> {
        Self::new(e, &[k1, k2])
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn kappa(&self) -> &[usize] {
        &self.kappa
    }

    pub fn level(&self) -> usize {
        self.kappa.len()
    }

    /// `(kappa_2 - kappa_1) mod e`. Only meaningful at level two.
    pub fn l(&self) -> usize {
        debug_assert_eq!(self.level(), 2);
        self.modulo(self.kappa[1] as i64 - self.kappa[0] as i64)
    }

    /// Reduce an integer into `0..e`.
    pub fn modulo(&self, x: i64) -> usize {
        x.rem_euclid(self.e as i64) as usize
    }

    pub(crate) fn require_level2(&self) -> Result<()> {
        if self.level() == 2 {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("level 2 required, got level {}", self.level())))
        }
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The single-row partition `(k)`, or the empty partition when `k = 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Self(vec![k])
        }
    }

    /// The single-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Self(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, empty: &str, pow: (&str, &str)) -> fmt::Result {
        if self.is_empty() {
            return f.write_str(empty);
        }
        f.write_str("(")?;
        let mut first = true;
        for (part, run) in runs(&self.0) {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{part}")?;
            } else {
                write!(f, "{part}{}{run}{}", pow.0, pow.1)?;
            }
        }
        f.write_str(")")
    }
}

fn runs(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &p in parts {
        match out.last_mut() {
            Some((q, c)) if *q == p => *c += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

impl fmt::Display for Partition {
    /// `(4,1^2)`; the empty partition prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "∅", ("^", ""))
    }
}

/// A node `(row, col, component)`, all 1-indexed.
///
/// The derived order compares component, then row, then column, which is the
/// reading order used for signatures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Self { comp, row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// `a` lies strictly above `b`: an earlier component, or the same component
/// and a smaller row.
pub fn strictly_above(a: &Node, b: &Node) -> bool {
    a.comp < b.comp || (a.comp == b.comp && a.row < b.row)
}

/// An ordered tuple of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(comps: Vec<Partition>) -> Self {
        Self(comps)
    }

    /// Builds from raw part lists, validating each component.
    pub fn from_parts(comps: &[&[usize]]) -> Result<Self> {
        comps.iter().map(|p| Partition::new(p.to_vec())).collect::<Result<Vec<_>>>().map(Self)
    }

    pub fn empty(level: usize) -> Self {
        Self(vec![Partition::empty(); level])
    }

    /// The hook bipartition `((n-m),(1^m))`.
    pub fn hook(n: usize, m: usize) -> Self {
        assert!(m <= n, "hook ((n-m),(1^m)) needs m <= n");
        Self(vec![Partition::row(n - m), Partition::column(m)])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// Component `k`, 1-indexed.
    pub fn component(&self, k: usize) -> &Partition {
        &self.0[k - 1]
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.comp >= 1
            && node.comp <= self.level()
            && node.row >= 1
            && self.component(node.comp).parts().get(node.row - 1).is_some_and(|&p| node.col >= 1 && node.col <= p)
    }

    /// `self` with `node` added. The node must be addable.
    pub fn with_node(&self, node: &Node) -> Self {
        let mut out = self.clone();
        let parts = &mut out.0[node.comp - 1].0;
        if node.row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        debug_assert_eq!(parts[node.row - 1], node.col);
        out
    }

    /// `self` with `node` removed. The node must be removable.
    pub fn without_node(&self, node: &Node) -> Self {
        let mut out = self.clone();
        let parts = &mut out.0[node.comp - 1].0;
        debug_assert_eq!(parts[node.row - 1], node.col);
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        out
    }

    /// TeX rendering, e.g. `((4,1^{2}),\varnothing)`.
    pub fn to_tex(&self) -> String {
        struct Tex<'a>(&'a Partition);
        impl fmt::Display for Tex<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(f, "\\varnothing", ("^{", "}"))
            }
        }
        let inner: Vec<String> = self.0.iter().map(|p| Tex(p).to_string()).collect();
        format!("({})", inner.join(","))
    }
}

impl fmt::Display for Multipartition {
    /// `((7,4^2),(4))`, `(∅,(1^3))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) form as well as plain lists:
    /// `((7,4,4),(4))`, `((7,4^2),(4))`, `(∅,(1^3))`, `((),(1,1,1))`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse multipartition {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let mut comps = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let (item, tail) = if let Some(r) = rest.strip_prefix('∅') {
                ("", r)
            } else {
                let r = rest.strip_prefix('(').ok_or_else(bad)?;
                let close = r.find(')').ok_or_else(bad)?;
                (&r[..close], &r[close + 1..])
            };
            let mut parts = Vec::new();
            for tok in item.split(',').filter(|x| !x.is_empty()) {
                let (base, pow) = tok.split_once('^').unwrap_or((tok, "1"));
                let base: usize = base.parse().map_err(|_| bad())?;
                let pow: usize = pow.parse().map_err(|_| bad())?;
                parts.extend(std::iter::repeat_n(base, pow));
            }
            comps.push(Partition::new(parts)?);
            rest = match tail.strip_prefix(',') {
                Some(r) if !r.is_empty() => r,
                Some(_) => return Err(bad()),
                None if tail.is_empty() => tail,
                None => return Err(bad()),
            };
        }
        if comps.is_empty() {
            return Err(bad());
        }
        Ok(Self(comps))
    }
}

/// Residue `(kappa_k + col - row) mod e` of a node.
pub fn residue_of(node: &Node, q: &Quantum) -> Result<usize> {
    if node.comp == 0 || node.comp > q.level() || node.row == 0 || node.col == 0 {
        return Err(Error::InvalidInput(format!("node {node} invalid for level {}", q.level())));
    }
    Ok(res(node, q))
}

pub(crate) fn res(node: &Node, q: &Quantum) -> usize {
    q.modulo(q.kappa[node.comp - 1] as i64 + node.col as i64 - node.row as i64)
}

/// Addable nodes of `lam`, optionally of residue `i`, in reading order.
pub fn addable_nodes(lam: &Multipartition, q: &Quantum, i: Option<usize>) -> Vec<Node> {
    let mut out = addable_positions(lam);
    out.retain(|a| i.is_none_or(|i| res(a, q) == i));
    out
}

pub(crate) fn addable_positions(lam: &Multipartition) -> Vec<Node> {
    let mut out = Vec::new();
    for (k, p) in lam.components().iter().enumerate() {
        let parts = p.parts();
        for r in 0..=parts.len() {
            let cur = parts.get(r).copied().unwrap_or(0);
            if r == 0 || parts[r - 1] > cur {
                out.push(Node::new(r + 1, cur + 1, k + 1));
            }
        }
    }
    out
}

/// Removable nodes of `lam`, optionally of residue `i`, in reading order.
pub fn removable_nodes(lam: &Multipartition, q: &Quantum, i: Option<usize>) -> Vec<Node> {
    let mut out = removable_positions(lam);
    out.retain(|a| i.is_none_or(|i| res(a, q) == i));
    out
}

pub(crate) fn removable_positions(lam: &Multipartition) -> Vec<Node> {
    let mut out = Vec::new();
    for (k, p) in lam.components().iter().enumerate() {
        let parts = p.parts();
        for r in 0..parts.len() {
            let next = parts.get(r + 1).copied().unwrap_or(0);
            if parts[r] > next {
                out.push(Node::new(r + 1, parts[r], k + 1));
            }
        }
    }
    out
}

/// `lam` with every removable `i`-node removed.
pub fn remove_all(lam: &Multipartition, q: &Quantum, i: usize) -> Multipartition {
    removable_nodes(lam, q, Some(i)).iter().fold(lam.clone(), |acc, a| acc.without_node(a))
}

/// `lam` with every addable `i`-node added.
pub fn add_all(lam: &Multipartition, q: &Quantum, i: usize) -> Multipartition {
    addable_nodes(lam, q, Some(i)).iter().fold(lam.clone(), |acc, a| acc.with_node(a))
}
