mod common;

use common::stack_reduce;
use hookspecht::grdim::{grdim_s_closed, grdim_s_oracle};
use hookspecht::partition::{add_all, addable_nodes, removable_nodes, remove_all};
use hookspecht::signatures::{conormal_count, down, normal_count, up};
use hookspecht::tableaux::{degree, hook_degree_closed, StandardTableau};
use hookspecht::{LaurentPoly, Multipartition, Partition, Quantum};
use proptest::prelude::*;

fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn bipartition() -> impl Strategy<Value = Multipartition> {
    (partition(6, 8), partition(6, 8)).prop_map(|(a, b)| Multipartition::new(vec![a, b]))
}

fn quantum() -> impl Strategy<Value = Quantum> {
    (3usize..=6)
        .prop_flat_map(|e| (Just(e), 0..e as i64, 0..e as i64))
        .prop_map(|(e, a, b)| Quantum::level2(e, a, b).unwrap())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-8i64..=8, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
}

/// Cancels `+-` pairs in the order given by `picks`, each taken modulo the
/// number of pairs currently available.
fn reduce_in_order(word: &str, picks: &[usize]) -> String {
    let mut w = word.to_string();
    let mut picks = picks.iter().cycle();
    loop {
        let spots: Vec<usize> = w.match_indices("+-").map(|(k, _)| k).collect();
        if spots.is_empty() {
            return w;
        }
        let k = spots[picks.next().copied().unwrap_or(0) % spots.len()];
        w.replace_range(k..k + 2, "");
    }
}

proptest! {
    #[test]
    fn any_cancellation_order_gives_the_stack_reduction(
        word in "[+-]{0,40}",
        picks in prop::collection::vec(0usize..100, 1..20),
    ) {
        prop_assert_eq!(reduce_in_order(&word, &picks), stack_reduce(&word));
    }

    #[test]
    fn down_then_up_and_up_then_down(lam in bipartition(), q in quantum(), i in 0usize..6, r in 0usize..4) {
        let i = i % q.e();
        if r <= normal_count(&lam, &q, i) {
            prop_assert_eq!(up(&down(&lam, &q, i, r).unwrap(), &q, i, r).unwrap(), lam.clone());
        } else {
            prop_assert!(down(&lam, &q, i, r).is_err());
        }
        if r <= conormal_count(&lam, &q, i) {
            prop_assert_eq!(down(&up(&lam, &q, i, r).unwrap(), &q, i, r).unwrap(), lam);
        } else {
            prop_assert!(up(&lam, &q, i, r).is_err());
        }
    }

    #[test]
    fn adding_every_addable_node(lam in bipartition(), q in quantum(), i in 0usize..6) {
        let i = i % q.e();
        let add = addable_nodes(&lam, &q, Some(i)).len();
        let rem = removable_nodes(&lam, &q, Some(i)).len();
        let full = add_all(&lam, &q, i);
        prop_assert_eq!(full.size(), lam.size() + add);
        prop_assert_eq!(removable_nodes(&full, &q, Some(i)).len(), add + rem);
        prop_assert!(addable_nodes(&full, &q, Some(i)).is_empty());
        let bare = remove_all(&lam, &q, i);
        prop_assert_eq!(bare.size(), lam.size() - rem);
        prop_assert!(removable_nodes(&bare, &q, Some(i)).is_empty());
    }

    #[test]
    fn centering_ignores_shifts(p in laurent(), k in -10i64..=10) {
        match p.center() {
            Ok((x, c)) => {
                prop_assert_eq!(p.shift(k).center().unwrap(), (x + k, c.clone()));
                prop_assert_eq!(c.shift(x), p);
            }
            Err(_) => prop_assert!(p.shift(k).center().is_err()),
        }
    }

    #[test]
    fn laurent_text_roundtrip(p in laurent()) {
        prop_assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    }

    #[test]
    fn laurent_addition(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
    }

    #[test]
    fn hook_degree_formula_on_large_hooks(
        q in quantum(),
        n in 1usize..40,
        bits in prop::collection::vec(any::<bool>(), 40),
    ) {
        let leg: Vec<usize> = (1..=n).filter(|&k| bits[k - 1]).collect();
        let t = StandardTableau::from_leg(n, &leg).unwrap();
        prop_assert_eq!(hook_degree_closed(&leg, &q), degree(&t, &q));
    }
}

proptest! {
    // each case enumerates C(n, m) tableaux with n up to 15
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_grdim_beyond_the_sweep(q in quantum(), n in 13usize..=15, m in 0usize..=15) {
        let m = m.min(n);
        prop_assert_eq!(grdim_s_closed(n, m, &q).unwrap(), grdim_s_oracle(n, m, &q).unwrap());
    }
}
