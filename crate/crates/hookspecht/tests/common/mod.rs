//! Brute-force oracles shared by the integration tests and the acceptance run.
//! Every check returns the list of violations it found; empty means it held.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use hookspecht::decomp::build_matrix;
use hookspecht::grdim::{graded_factors, grdim_s_closed, grdim_s_oracle, grdim_subset, Side, SubsetConstraint};
use hookspecht::hook_theory::{case_of, mu_label, restriction_chain, sign_label, CaseTag};
use hookspecht::partition::addable_nodes;
use hookspecht::signatures::{
    cogood_node, conormal_count, down, good_node, is_regular, label_by_chain, normal_count, reduce_signs, sgn_label,
    up, Sign,
};
use hookspecht::{LaurentPoly, Multipartition, Partition, Quantum};

pub fn q(e: usize, k1: i64, k2: i64) -> Quantum {
    Quantum::level2(e, k1, k2).unwrap()
}

pub fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

/// Partitions of `n`, parts in decreasing order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn bipartitions(n: usize) -> Vec<Multipartition> {
    (0..=n)
        .flat_map(|k| {
            let rest = partitions(n - k);
            partitions(k)
                .into_iter()
                .flat_map(move |a| rest.clone().into_iter().map(move |b| Multipartition::new(vec![a.clone(), b])))
        })
        .collect()
}

pub fn bipartitions_up_to(max: usize) -> Vec<Multipartition> {
    (0..=max).flat_map(bipartitions).collect()
}

/// Regular bipartitions of size at most `max`, generated from `(∅,∅)` by
/// adding cogood nodes.
pub fn regular_by_bfs(qq: &Quantum, max: usize) -> HashSet<Multipartition> {
    let mut seen = HashSet::from([Multipartition::empty(2)]);
    let mut queue = VecDeque::from([Multipartition::empty(2)]);
    while let Some(lam) = queue.pop_front() {
        if lam.size() == max {
            continue;
        }
        for i in 0..qq.e() {
            if let Some(a) = cogood_node(&lam, qq, i) {
                let mu = lam.with_node(&a);
                if seen.insert(mu.clone()) {
                    queue.push_back(mu);
                }
            }
        }
    }
    seen
}

/// Every quantum with `e` in `es` and `kappa = (0, l)`.
pub fn charges(es: &[usize]) -> Vec<Quantum> {
    es.iter().flat_map(|&e| (0..e).map(move |l| q(e, 0, l as i64))).collect()
}

fn check(out: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        out.push(msg());
    }
}

/// The graded dimensions worked out by hand for small hooks.
pub fn worked_examples() -> Vec<String> {
    use Side::{Arm, Leg};
    let mut bad = Vec::new();
    let c = SubsetConstraint::new;
    let mut eq = |what: &str, got: LaurentPoly, want: &str| {
        check(&mut bad, got == p(want), || format!("{what}: got {got}, expected {want}"));
    };
    eq("grdim S((1),(1^4)), kappa (0,0)", grdim_s_closed(5, 4, &q(3, 0, 0)).unwrap(), "2v^3+v^2+2v");
    eq("oracle S((1),(1^4)), kappa (0,0)", grdim_s_oracle(5, 4, &q(3, 0, 0)).unwrap(), "2v^3+v^2+2v");
    eq("grdim S((2),(1^2)), kappa (0,1)", grdim_s_closed(4, 2, &q(3, 0, 1)).unwrap(), "2v+2+2v^-1");
    eq("oracle S((2),(1^2)), kappa (0,1)", grdim_s_oracle(4, 2, &q(3, 0, 1)).unwrap(), "2v+2+2v^-1");
    let subset = |n, m, k2, con| grdim_subset(n, m, &q(3, 0, k2), con).unwrap();
    let centered = |n, m, k2, con| grdim_subset(n, m, &q(3, 0, k2), con).unwrap().center().unwrap().1;
    eq("n at foot of ((5),(1^2)), kappa (0,0)", subset(7, 2, 0, c(None, Some(Leg))), "2v^3+2v^2+2v");
    eq("1 in arm of ((3),(1^2)), kappa (0,2)", subset(5, 2, 2, c(Some(Arm), None)), "2v^2+2v+2");
    eq("1 in leg of ((3),(1^2)), kappa (0,2)", subset(5, 2, 2, c(Some(Leg), None)), "v+2+v^-1");
    eq("1 in arm, 6 at foot of ((3),(1^3))", subset(6, 3, 2, c(Some(Arm), Some(Leg))), "2v^4+2v^3+2v^2");
    eq("1 in leg, 6 at foot of ((3),(1^3))", subset(6, 3, 2, c(Some(Leg), Some(Leg))), "v^3+2v^2+v");
    eq("centered, n at foot, n=7", centered(7, 2, 0, c(None, Some(Leg))), "2v+2+2v^-1");
    eq("centered, 1 in arm, n=5", centered(5, 2, 2, c(Some(Arm), None)), "2v+2+2v^-1");
    eq("centered, 1 in leg, n=5", centered(5, 2, 2, c(Some(Leg), None)), "v+2+v^-1");
    eq("centered, 1 in arm, 6 at foot", centered(6, 3, 2, c(Some(Arm), Some(Leg))), "2v+2+2v^-1");
    eq("centered, 1 in leg, 6 at foot", centered(6, 3, 2, c(Some(Leg), Some(Leg))), "v+2+v^-1");
    bad
}

/// The four example matrices against the files in `tests/golden`.
pub fn matrix_goldens() -> Vec<String> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut bad = Vec::new();
    for (k2, n) in [(0, 6), (0, 7), (2, 7), (2, 6)] {
        let mat = build_matrix(n, &q(3, 0, k2)).unwrap();
        for graded in [true, false] {
            let name = format!("e3_k0{k2}_n{n}_{}.json", if graded { "graded" } else { "ungraded" });
            let want = std::fs::read_to_string(dir.join(&name)).unwrap_or_default();
            let got = mat.to_canonical_json(graded);
            check(&mut bad, got == want, || format!("{name} differs: got {got}"));
        }
    }
    bad
}

/// `lam down^r up^r = lam` and `lam up^s down^s = lam` for `r, s <= max_r`,
/// and `A` is cogood in `lam` exactly when it is good in `lam + A`.
pub fn operator_identities(es: &[usize], max_size: usize, max_r: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let lams = bipartitions_up_to(max_size);
    for qq in charges(es) {
        for lam in &lams {
            for i in 0..qq.e() {
                for r in 0..=max_r.min(normal_count(lam, &qq, i)) {
                    let back = up(&down(lam, &qq, i, r).unwrap(), &qq, i, r).unwrap();
                    check(&mut bad, back == *lam, || format!("{qq:?} {lam} down^{r} up^{r} at i={i} gives {back}"));
                }
                for s in 0..=max_r.min(conormal_count(lam, &qq, i)) {
                    let back = down(&up(lam, &qq, i, s).unwrap(), &qq, i, s).unwrap();
                    check(&mut bad, back == *lam, || format!("{qq:?} {lam} up^{s} down^{s} at i={i} gives {back}"));
                }
                let cogood = cogood_node(lam, &qq, i);
                for a in addable_nodes(lam, &qq, Some(i)) {
                    let is_good = good_node(&lam.with_node(&a), &qq, i) == Some(a);
                    check(&mut bad, (cogood == Some(a)) == is_good, || {
                        format!("{qq:?} {lam} node {a}: cogood={} but good in lam+A={is_good}", cogood == Some(a))
                    });
                }
            }
        }
    }
    bad
}

fn raise(lam: &Multipartition, qq: &Quantum, i: i64) -> Option<Multipartition> {
    up(lam, qq, qq.modulo(i), 1).ok()
}

/// The two lemmas saying how `mu_{n,idx}` moves to `mu_{n+1,*}` under a
/// single cogood addition.
pub fn label_lemmas(es: &[usize], max_n: usize) -> Vec<String> {
    let mut bad = Vec::new();
    for qq in charges(es) {
        let (e, l, k2) = (qq.e(), qq.l(), qq.kappa()[1] as i64);
        for n in 1..max_n {
            let mut expect = |from: usize, res: i64, to: usize| {
                let got = raise(&mu_label(n, from, &qq).unwrap(), &qq, res);
                let want = mu_label(n + 1, to, &qq).unwrap();
                check(&mut bad, got.as_ref() == Some(&want), || {
                    format!("{qq:?} n={n}: mu_{{n,{from}}} up at residue {res} gives {got:?}, expected {want}")
                });
            };
            if l != e - 1 {
                for m in 0..n {
                    let to = if n % e == l { m } else { m + 1 };
                    expect(m, k2 - m as i64, to);
                }
            } else if n % e != 0 {
                for m in 1..n {
                    expect(2 * m, k2 - m as i64, 2 * m + 2);
                    expect(2 * m + 1, k2 - m as i64, 2 * m + 3);
                }
            } else {
                for m in 2..n {
                    expect(2 * m, k2 + 1 - m as i64, 2 * m);
                    expect(2 * m + 1, k2 + 1 - m as i64, 2 * m + 1);
                }
            }
        }
    }
    bad
}

/// Building `(∅,∅)` up by cogood nodes of residues `kappa_2, kappa_2-1, ...`
/// reaches the label of the sign module.
pub fn sign_labels(es: &[usize], max_n: usize) -> Vec<String> {
    let mut bad = Vec::new();
    for qq in charges(es) {
        for n in 0..=max_n {
            let got = sgn_label(n, &qq).unwrap();
            let want = sign_label(n, &qq);
            check(&mut bad, got == want, || format!("{qq:?} n={n}: built {got}, closed form {want}"));
        }
    }
    bad
}

/// Recursive regularity against breadth-first generation from `(∅,∅)`.
pub fn regularity_equivalence(es: &[usize], max_size: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let lams = bipartitions_up_to(max_size);
    for qq in charges(es) {
        let generated = regular_by_bfs(&qq, max_size);
        for lam in &lams {
            let (rec, gen) = (is_regular(lam, &qq), generated.contains(lam));
            check(&mut bad, rec == gen, || format!("{qq:?} {lam}: recursive {rec}, generated {gen}"));
        }
    }
    bad
}

/// The worked restriction chain, and in Case I the labels found by
/// restriction agree with `mu_{n,m}`.
pub fn label_chains(es: &[usize], max_n: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let qq = q(3, 0, 2);
    let chain = [(2, 1), (1, 1), (0, 2), (2, 1), (1, 2), (2, 1), (0, 1)];
    let lam: Multipartition = "((6),(1^3))".parse().unwrap();
    let got = label_by_chain(&lam, &qq, &chain).map(|m| m.to_string());
    check(&mut bad, got.as_deref() == Ok("((6,2,1),∅)"), || format!("worked chain gave {got:?}"));
    for qq in charges(es) {
        for n in 1..=max_n {
            if case_of(n, &qq) != CaseTag::I {
                continue;
            }
            for m in 0..n {
                let chain = restriction_chain(n, m, &qq);
                let got = label_by_chain(&Multipartition::hook(n, m), &qq, &chain);
                let want = mu_label(n, m, &qq).unwrap();
                check(&mut bad, got.as_ref() == Ok(&want), || {
                    format!("{qq:?} n={n} m={m}: chain gave {got:?}, mu is {want}")
                });
            }
        }
    }
    bad
}

/// All normal forms reachable by cancelling adjacent `+-` pairs in any order.
pub fn all_reductions(word: &str, memo: &mut HashMap<String, BTreeSet<String>>) -> BTreeSet<String> {
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let mut out = BTreeSet::new();
    for (k, _) in word.match_indices("+-") {
        let shorter = format!("{}{}", &word[..k], &word[k + 2..]);
        out.extend(all_reductions(&shorter, memo));
    }
    if out.is_empty() {
        out.insert(word.to_string());
    }
    memo.insert(word.to_string(), out.clone());
    out
}

pub fn stack_reduce(word: &str) -> String {
    let signs: Vec<(Sign, ())> = word.chars().map(|c| (if c == '+' { Sign::Plus } else { Sign::Minus }, ())).collect();
    reduce_signs(&signs).iter().map(|(s, _)| if *s == Sign::Plus { '+' } else { '-' }).collect()
}

/// Every deletion order reaches the stack reduction, for all words up to
/// `max_len` signs.
pub fn reduction_confluence(max_len: u32) -> Vec<String> {
    let mut bad = Vec::new();
    let mut memo = HashMap::new();
    for len in 0..=max_len {
        for bits in 0..1u32 << len {
            let word: String = (0..len).map(|k| if bits >> k & 1 == 1 { '+' } else { '-' }).collect();
            let forms = all_reductions(&word, &mut memo);
            let stack = stack_reduce(&word);
            check(&mut bad, forms.len() == 1 && forms.contains(&stack), || {
                format!("{word}: deletion orders reach {forms:?}, stack gives {stack}")
            });
        }
    }
    bad
}

/// Centering never fails on the realizing subsets, and every centered factor
/// dimension is bar-invariant.
pub fn factor_symmetry(es: &[usize], max_n: usize) -> Vec<String> {
    let mut bad = Vec::new();
    for qq in charges(es) {
        for n in 0..=max_n {
            for m in 0..=n {
                match graded_factors(n, m, &qq) {
                    Err(err) => bad.push(format!("{qq:?} n={n} m={m}: {err}")),
                    Ok(fs) => {
                        for f in fs {
                            check(&mut bad, f.dim.is_symmetric(), || {
                                format!("{qq:?} n={n} m={m}: {} = {}", f.label, f.dim)
                            });
                        }
                    }
                }
            }
        }
    }
    bad
}
