//! `i`-signatures, normal and conormal nodes, the operators `up`/`down`,
//! Kleshchev regularity, and label finding by restriction chains.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use crate::partition::{addable_nodes, removable_nodes, remove_all, Multipartition, Node, Quantum};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Addable (`+`) and removable (`-`) `i`-nodes in reading order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub residue: usize,
    pub entries: Vec<(Sign, Node)>,
}

/// What survives after cancelling adjacent `+-` pairs: always `-...-+...+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSignature {
    pub residue: usize,
    pub survivors: Vec<(Sign, Node)>,
}

fn pattern<T>(entries: &[(Sign, T)]) -> String {
    entries.iter().map(|(s, _)| s.as_char()).collect()
}

impl Signature {
    pub fn reduce(&self) -> ReducedSignature {
        ReducedSignature { residue: self.residue, survivors: reduce_signs(&self.entries) }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pattern(&self.entries))
    }
}

impl ReducedSignature {
    /// Normal nodes, top to bottom.
    pub fn normal(&self) -> Vec<Node> {
        self.of_sign(Sign::Minus)
    }

    /// Conormal nodes, top to bottom.
    pub fn conormal(&self) -> Vec<Node> {
        self.of_sign(Sign::Plus)
    }

    fn of_sign(&self, s: Sign) -> Vec<Node> {
        self.survivors.iter().filter(|(t, _)| *t == s).map(|(_, a)| *a).collect()
    }
}

impl fmt::Display for ReducedSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pattern(&self.survivors))
    }
}

/// Stack cancellation of adjacent `+-` pairs.
pub fn reduce_signs<T: Clone>(entries: &[(Sign, T)]) -> Vec<(Sign, T)> {
    let mut stack: Vec<(Sign, T)> = Vec::with_capacity(entries.len());
    for x in entries {
        if x.0 == Sign::Minus && stack.last().is_some_and(|t| t.0 == Sign::Plus) {
            stack.pop();
        } else {
            stack.push(x.clone());
        }
    }
    stack
}

pub fn signature(lam: &Multipartition, q: &Quantum, i: usize) -> Signature {
    let mut entries: Vec<(Sign, Node)> = addable_nodes(lam, q, Some(i))
        .into_iter()
        .map(|a| (Sign::Plus, a))
        .chain(removable_nodes(lam, q, Some(i)).into_iter().map(|a| (Sign::Minus, a)))
        .collect();
    entries.sort_by_key(|(_, a)| (a.comp, a.row));
    Signature { residue: i, entries }
}

pub fn reduced(lam: &Multipartition, q: &Quantum, i: usize) -> ReducedSignature {
    signature(lam, q, i).reduce()
}

pub fn normal_count(lam: &Multipartition, q: &Quantum, i: usize) -> usize {
    reduced(lam, q, i).normal().len()
}

pub fn conormal_count(lam: &Multipartition, q: &Quantum, i: usize) -> usize {
    reduced(lam, q, i).conormal().len()
}

/// The lowest normal `i`-node.
pub fn good_node(lam: &Multipartition, q: &Quantum, i: usize) -> Option<Node> {
    reduced(lam, q, i).normal().last().copied()
}

/// The highest conormal `i`-node.
pub fn cogood_node(lam: &Multipartition, q: &Quantum, i: usize) -> Option<Node> {
    reduced(lam, q, i).conormal().first().copied()
}

/// Adds the `r` highest conormal `i`-nodes.
pub fn up(lam: &Multipartition, q: &Quantum, i: usize, r: usize) -> Result<Multipartition> {
    let co = reduced(lam, q, i).conormal();
    if r > co.len() {
        return Err(Error::Capacity { r, available: co.len() });
    }
    Ok(co[..r].iter().fold(lam.clone(), |acc, a| acc.with_node(a)))
}

/// Removes the `r` lowest normal `i`-nodes.
pub fn down(lam: &Multipartition, q: &Quantum, i: usize, r: usize) -> Result<Multipartition> {
    let nor = reduced(lam, q, i).normal();
    if r > nor.len() {
        return Err(Error::Capacity { r, available: nor.len() });
    }
    Ok(nor[nor.len() - r..].iter().fold(lam.clone(), |acc, a| acc.without_node(a)))
}

type RegularKey = (usize, Vec<usize>, Multipartition);

thread_local! {
    static REGULAR: RefCell<HashMap<RegularKey, bool>> = RefCell::new(HashMap::new());
}

/// Kleshchev regularity: `lam` is empty, or removing some good node leaves a
/// regular multipartition. Memoized per thread.
pub fn is_regular(lam: &Multipartition, q: &Quantum) -> bool {
    if lam.is_empty() {
        return true;
    }
    let key = (q.e(), q.kappa().to_vec(), lam.clone());
    if let Some(hit) = REGULAR.with(|m| m.borrow().get(&key).copied()) {
        return hit;
    }
    let ans = (0..q.e()).any(|i| good_node(lam, q, i).is_some_and(|a| is_regular(&lam.without_node(&a), q)));
    REGULAR.with(|m| m.borrow_mut().insert(key, ans));
    ans
}

/// `(∅,∅)` raised by cogood nodes of residues `kappa_2, kappa_2 - 1, ...`,
/// `n` steps in all.
pub fn sgn_label(n: usize, q: &Quantum) -> Result<Multipartition> {
    q.require_level2()?;
    let mut lam = Multipartition::empty(2);
    for k in 0..n {
        let i = q.modulo(q.kappa()[1] as i64 - k as i64);
        let a = cogood_node(&lam, q, i)
            .ok_or_else(|| Error::Internal(format!("no cogood {i}-node on {lam} at step {}", k + 1)))?;
        lam = lam.with_node(&a);
    }
    Ok(lam)
}

/// Follows `chain` down from `lam`, removing all `i`-nodes at each step (the
/// step's power must equal the number of removable `i`-nodes), then raises
/// the regular endpoint back up through the chain in reverse.
pub fn label_by_chain(lam: &Multipartition, q: &Quantum, chain: &[(usize, usize)]) -> Result<Multipartition> {
    let mut cur = lam.clone();
    for &(i, r) in chain {
        let rem = removable_nodes(&cur, q, Some(i)).len();
        if rem != r {
            return Err(Error::ChainInvalid(format!("{cur} has {rem} removable {i}-nodes, step asks for {r}")));
        }
        cur = remove_all(&cur, q, i);
    }
    if !is_regular(&cur, q) {
        return Err(Error::ChainInvalid(format!("endpoint {cur} is not regular")));
    }
    for &(i, r) in chain.iter().rev() {
        cur = up(&cur, q, i, r).map_err(|e| Error::ChainInvalid(format!("cannot raise {cur}: {e}")))?;
    }
    Ok(cur)
}
