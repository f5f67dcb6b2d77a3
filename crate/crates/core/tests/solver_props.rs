use prdf_core::graph::{enumerate_free_trees, make_path, random_tree, Forest, Graph, Tree};
use prdf_core::oracle::brute_force;
use prdf_core::solver::{optimal_assignment, prdf_number, prdf_number_forced, w_set, WSet, Weight};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random(n: usize, seed: u64) -> Tree {
    random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

#[test]
fn dp_matches_oracle_on_all_small_trees() {
    for n in 1..=10 {
        for t in enumerate_free_trees(n).unwrap() {
            assert_eq!(prdf_number(&t), brute_force(t.graph(), false).unwrap().weight, "{:?}", t.edges());
        }
    }
}

#[test]
fn w_set_matches_enumerated_optima() {
    for n in 1..=10 {
        for t in enumerate_free_trees(n).unwrap() {
            let optima = brute_force(t.graph(), true).unwrap().optima.unwrap();
            let expected: WSet = (0..n).filter(|&v| optima.iter().all(|f| f.value(v) == 0)).collect();
            assert_eq!(w_set(&t), expected, "{:?}", t.edges());
        }
    }
}

#[test]
fn dp_matches_oracle_on_forests() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let t = random_tree(12, &mut rng).unwrap();
        let f = t.remove_vertex(rng.gen_range(0..12)).unwrap();
        assert_eq!(prdf_number(&f), brute_force(f.graph(), false).unwrap().weight);
    }
    let isolated = Forest::new(Graph::empty(4)).unwrap();
    assert_eq!(prdf_number(&isolated), 4);
}

use rand::Rng;

#[test]
fn path_closed_form() {
    for n in 1..=16 {
        let expected = (2 * n as u64).div_ceil(3);
        assert_eq!(brute_force(make_path(n).unwrap().graph(), false).unwrap().weight, expected);
    }
    for n in 1..=3000 {
        assert_eq!(prdf_number(&make_path(n).unwrap()), (2 * n as u64).div_ceil(3), "P{n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn witness_is_valid_and_optimal(n in 1usize..80, seed: u64) {
        let t = random(n, seed);
        let f = optimal_assignment(&t);
        prop_assert!(f.is_perfect_roman(t.graph()));
        prop_assert_eq!(f.weight(), prdf_number(&t));
    }

    #[test]
    fn forest_witness_is_valid(n in 2usize..60, seed: u64, pick: usize) {
        let f = random(n, seed).remove_vertex(pick % n).unwrap();
        let a = optimal_assignment(&f);
        prop_assert!(a.is_perfect_roman(f.graph()));
        prop_assert_eq!(a.weight(), prdf_number(&f));
    }

    #[test]
    fn forced_states_recombine(n in 1usize..50, seed: u64, pick: usize) {
        let t = random(n, seed);
        let v = pick % n;
        let best = [[0u8], [1], [2]]
            .iter()
            .map(|allowed| prdf_number_forced(&t, v, allowed).unwrap())
            .min()
            .unwrap();
        prop_assert_eq!(best, Weight::Finite(prdf_number(&t)));
        prop_assert_eq!(prdf_number_forced(&t, v, &[0, 1, 2]).unwrap(), best);
    }

    #[test]
    fn bounds(n in 1usize..200, seed: u64) {
        let gamma = prdf_number(&random(n, seed));
        prop_assert!(gamma >= 1);
        prop_assert!(gamma <= n as u64);
    }

    #[test]
    fn labels_do_not_matter(n in 1usize..60, seed: u64) {
        let t = random(n, seed);
        let perm: Vec<usize> = (0..n).rev().collect();
        let u = t.relabel(&perm).unwrap();
        prop_assert_eq!(prdf_number(&t), prdf_number(&u));
        let mapped: WSet = w_set(&t).vertices().iter().map(|&v| perm[v]).collect();
        prop_assert_eq!(mapped, w_set(&u));
    }
}
