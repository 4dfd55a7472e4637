//! Standard tableaux, their enumeration, and the degree statistic.
//!
//! A hook tableau of shape `((n-m),(1^m))` is determined by its set of leg
//! entries, so hook shapes are enumerated as `m`-subsets of `1..=n` in
//! lexicographic order. Other shapes go through a generic backtracking filler.

use std::fmt;

use itertools::Itertools;

use crate::partition::{addable_positions, res, Multipartition, Node, Partition, Quantum};
use crate::{Error, Result};

/// A standard filling of a multipartition diagram by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Multipartition,
    /// `pos[k - 1]` is the node holding `k`.
    pos: Vec<Node>,
}

impl StandardTableau {
    /// Builds a tableau from the node of each entry in order, checking that
    /// every prefix is a diagram (which is equivalent to standardness).
    pub fn from_positions(level: usize, pos: Vec<Node>) -> Result<Self> {
        let mut shape = Multipartition::empty(level);
        for a in &pos {
            if a.comp == 0 || a.comp > level || !addable_positions(&shape).contains(a) {
                return Err(Error::InvalidInput(format!("entry at {a} breaks standardness")));
            }
            shape = shape.with_node(a);
        }
        Ok(Self { shape, pos })
    }

    /// Builds from entries listed row by row in each component.
    pub fn from_rows(rows: &[Vec<Vec<usize>>]) -> Result<Self> {
        let n: usize = rows.iter().flatten().map(Vec::len).sum();
        let mut pos = vec![None; n];
        for (k, comp) in rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    let slot = x.checked_sub(1).and_then(|i| pos.get_mut(i));
                    match slot {
                        Some(s @ None) => *s = Some(Node::new(r + 1, c + 1, k + 1)),
                        _ => return Err(Error::InvalidInput(format!("entry {x} repeated or out of range"))),
                    }
                }
            }
        }
        let t = Self::from_positions(rows.len(), pos.into_iter().map(Option::unwrap).collect())?;
        let shape_rows: Vec<Vec<usize>> = rows.iter().map(|c| c.iter().map(Vec::len).collect()).collect();
        let actual: Vec<Vec<usize>> = t.shape.components().iter().map(|p| p.parts().to_vec()).collect();
        if shape_rows != actual {
            return Err(Error::InvalidInput("rows do not form a diagram".into()));
        }
        Ok(t)
    }

    /// The hook tableau of shape `((n-m),(1^m))` whose leg holds `leg`.
    pub fn from_leg(n: usize, leg: &[usize]) -> Result<Self> {
        if leg.windows(2).any(|w| w[0] >= w[1]) || leg.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::InvalidInput(format!("{leg:?} is not an increasing subset of 1..={n}")));
        }
        let mut pos = Vec::with_capacity(n);
        let (mut arm, mut down) = (0, 0);
        let mut it = leg.iter().peekable();
        for k in 1..=n {
            if it.peek() == Some(&&k) {
                it.next();
                down += 1;
                pos.push(Node::new(down, 1, 2));
            } else {
                arm += 1;
                pos.push(Node::new(1, arm, 1));
            }
        }
        Ok(Self { shape: Multipartition::hook(n, leg.len()), pos })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// Node holding entry `k`.
    pub fn node_of(&self, k: usize) -> Node {
        self.pos[k - 1]
    }

    pub fn entry(&self, node: &Node) -> Option<usize> {
        self.pos.iter().position(|a| a == node).map(|i| i + 1)
    }

    /// Leg entries in increasing order, for hook shapes.
    pub fn leg(&self) -> Option<Vec<usize>> {
        hook_dims(&self.shape)?;
        Some((1..=self.n()).filter(|&k| self.node_of(k).comp == 2).collect())
    }

    /// Restriction to the entries `1..=k`.
    pub fn prefix(&self, k: usize) -> Self {
        Self::from_positions(self.shape.level(), self.pos[..k].to_vec()).expect("prefix of a standard tableau")
    }
}

impl fmt::Display for StandardTableau {
    /// Components separated by `|`, rows by `/`: `(3 4 | 1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .shape
            .components()
            .iter()
            .enumerate()
            .map(|(k, p)| {
                if p.is_empty() {
                    return "∅".to_string();
                }
                (1..=p.len())
                    .map(|r| {
                        (1..=p.parts()[r - 1])
                            .map(|c| self.entry(&Node::new(r, c, k + 1)).unwrap().to_string())
                            .join(" ")
                    })
                    .join("/")
            })
            .collect();
        write!(f, "({})", comps.join(" | "))
    }
}

/// `(n, m)` when `shape` is the hook `((n-m),(1^m))`.
pub fn hook_dims(shape: &Multipartition) -> Option<(usize, usize)> {
    if shape.level() != 2 {
        return None;
    }
    let (arm, leg) = (shape.component(1), shape.component(2));
    (arm.len() <= 1 && leg.parts().iter().all(|&p| p == 1)).then(|| (shape.size(), leg.len()))
}

/// Every standard tableau of `shape`, each exactly once, in a fixed order.
pub fn enumerate_standard(shape: &Multipartition) -> Vec<StandardTableau> {
    if let Some((n, m)) = hook_dims(shape) {
        return hook_tableaux(n, m).collect();
    }
    let mut out = Vec::new();
    let mut pos = Vec::with_capacity(shape.size());
    fill(shape, &Multipartition::empty(shape.level()), &mut pos, &mut out);
    out
}

fn fill(target: &Multipartition, cur: &Multipartition, pos: &mut Vec<Node>, out: &mut Vec<StandardTableau>) {
    if pos.len() == target.size() {
        out.push(StandardTableau { shape: target.clone(), pos: pos.clone() });
        return;
    }
    for a in addable_positions(cur).into_iter().filter(|a| target.contains(a)) {
        pos.push(a);
        fill(target, &cur.with_node(&a), pos, out);
        pos.pop();
    }
}

/// Hook tableaux of shape `((n-m),(1^m))`, leg sets in lexicographic order.
pub fn hook_tableaux(n: usize, m: usize) -> impl Iterator<Item = StandardTableau> {
    (1..=n).combinations(m).map(move |leg| StandardTableau::from_leg(n, &leg).expect("combinations are increasing"))
}

/// Entries placed down consecutive columns, last component first.
pub fn column_initial(shape: &Multipartition) -> StandardTableau {
    let mut pos = Vec::with_capacity(shape.size());
    for k in (1..=shape.level()).rev() {
        let p: &Partition = shape.component(k);
        let width = p.parts().first().copied().unwrap_or(0);
        for c in 1..=width {
            for r in (1..=p.len()).take_while(|&r| p.parts()[r - 1] >= c) {
                pos.push(Node::new(r, c, k));
            }
        }
    }
    StandardTableau::from_positions(shape.level(), pos).expect("column reading is standard")
}

pub fn residue_sequence(t: &StandardTableau, q: &Quantum) -> Vec<usize> {
    t.pos.iter().map(|a| res(a, q)).collect()
}

/// `d^A(lam)`: addable minus removable `res(A)`-nodes strictly above `A`.
pub fn node_degree(lam: &Multipartition, a: &Node, q: &Quantum) -> Result<i64> {
    if !addable_positions(lam).contains(a) {
        return Err(Error::InvalidInput(format!("{a} is not addable for {lam}")));
    }
    Ok(node_degree_unchecked(lam, a, q))
}

fn node_degree_unchecked(lam: &Multipartition, a: &Node, q: &Quantum) -> i64 {
    let i = res(a, q);
    let above = |b: &Node| crate::partition::strictly_above(b, a) && res(b, q) == i;
    let add = crate::partition::addable_positions(lam).iter().filter(|b| above(b)).count();
    let rem = crate::partition::removable_positions(lam).iter().filter(|b| above(b)).count();
    add as i64 - rem as i64
}

/// Degree of `t`, peeling off the largest entry at each step.
pub fn degree(t: &StandardTableau, q: &Quantum) -> i64 {
    let mut lam = t.shape.clone();
    let mut d = 0;
    for a in t.pos.iter().rev() {
        lam = lam.without_node(a);
        d += node_degree_unchecked(&lam, a, q);
    }
    d
}

/// Leg entries congruent to `l+1` minus leg entries congruent to `l+2` mod `e`.
pub fn a_statistic(t: &StandardTableau, q: &Quantum) -> Result<i64> {
    q.require_level2()?;
    let leg = t.leg().ok_or_else(|| Error::InvalidInput(format!("{} is not a hook shape", t.shape)))?;
    Ok(a_of_leg(&leg, q))
}

fn a_of_leg(leg: &[usize], q: &Quantum) -> i64 {
    let l = q.l() as i64;
    let plus = leg.iter().filter(|&&x| q.modulo(x as i64) == q.modulo(l + 1)).count();
    let minus = leg.iter().filter(|&&x| q.modulo(x as i64) == q.modulo(l + 2)).count();
    plus as i64 - minus as i64
}

/// Closed-form degree of the hook tableau with leg set `leg`.
pub fn hook_degree_closed(leg: &[usize], q: &Quantum) -> i64 {
    let (e, l, m) = (q.e() as i64, q.l() as i64, leg.len() as i64);
    (m + e - l - 2).div_euclid(e) + (l + 1).div_euclid(e) + m.div_euclid(e) + a_of_leg(leg, q)
}
