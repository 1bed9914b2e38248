//! Invariants of the counting engines, checked against the brute-force
//! oracles on exhaustive ranges and random inputs.

use fgc::canonical::{graph_key, weakly_isomorphic};
use fgc::centralizer::{
    count_bij_centralizer, count_centralizer, enumerate_centralizer, hom_matrix,
    induced_component_map, report,
};
use fgc::decompose::components;
use fgc::extremal::{max_centralizer_fixed_cycles, max_centralizer_formula, Catalog, Scope};
use fgc::oracle::{brute_centralizer, brute_centralizer_count, brute_tree_aut};
use fgc::{Count, Endofunction};
use proptest::prelude::*;

fn endofunction(min_n: usize, max_n: usize) -> impl Strategy<Value = Endofunction> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n).prop_map(|v| Endofunction::new(v).unwrap())
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Endofunction, Endofunction)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(0..n, n),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(|(f, p)| (Endofunction::new(f).unwrap(), Endofunction::new(p).unwrap()))
    })
}

#[test]
fn bijective_count_matches_brute_force_for_all_n_up_to_5() {
    for n in 0..=5 {
        for f in Endofunction::all(n) {
            let bij: u64 = count_bij_centralizer(&f);
            assert_eq!(bij, brute_centralizer_count(&f, true).unwrap(), "{f}");
        }
    }
}

#[test]
fn tree_automorphisms_match_brute_force() {
    for n in 1..=6 {
        for f in Endofunction::all(n) {
            for p in components(&f) {
                for t in p.trees() {
                    let fast: u64 = fgc::canonical::aut_count(t);
                    assert_eq!(fast, brute_tree_aut(t).unwrap(), "{f}");
                }
            }
        }
    }
}

#[test]
fn closed_form_maximum_matches_search() {
    // every cycle multiset with sum + t <= 7
    fn multisets(max_sum: usize, min_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !acc.is_empty() {
            out.push(acc.clone());
        }
        for part in min_part..=max_sum {
            acc.push(part);
            multisets(max_sum - part, part, acc, out);
            acc.pop();
        }
    }
    let mut all = Vec::new();
    multisets(7, 1, &mut Vec::new(), &mut all);
    for cycles in all {
        let sum: usize = cycles.iter().sum();
        for n in sum..=7 {
            let found = max_centralizer_fixed_cycles(n, &cycles).unwrap();
            let formula: Count = max_centralizer_formula(&cycles, n - sum).unwrap();
            assert_eq!(found.value, formula, "cycles {cycles:?} n {n}");
        }
    }
}

#[test]
fn catalog_counts_every_class_once() {
    // numbers of functional graphs on n unlabeled vertices
    let expected = [1, 1, 3, 7, 19, 47, 130];
    for (n, &classes) in expected.iter().enumerate() {
        assert_eq!(
            Catalog::build(n, Scope::All).entries.len(),
            classes,
            "n = {n}"
        );
    }
    // numbers of partitions of n
    for (n, classes) in [1, 1, 2, 3, 5, 7, 11, 15].into_iter().enumerate() {
        assert_eq!(
            Catalog::build(n, Scope::Permutations).entries.len(),
            classes
        );
    }
}

#[test]
fn product_of_distinct_parts_exceeds_their_sum() {
    // for 1 < n_1 < ... < n_k with at least two parts
    fn check(min: usize, budget: usize, parts: &mut Vec<usize>) {
        if parts.len() >= 2 {
            let product: usize = parts.iter().product();
            let sum: usize = parts.iter().sum();
            assert!(product > sum, "{parts:?}");
        }
        for next in min..=budget {
            parts.push(next);
            check(next + 1, budget - next, parts);
            parts.pop();
        }
    }
    check(2, 12, &mut Vec::new());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counts_are_conjugation_invariant((f, p) in with_permutation(9)) {
        let g = f.conjugate_by(&p).unwrap();
        prop_assert!(weakly_isomorphic(&f, &g));
        prop_assert_eq!(graph_key(&f), graph_key(&g));
        prop_assert_eq!(count_centralizer::<Count>(&f), count_centralizer::<Count>(&g));
        prop_assert_eq!(count_bij_centralizer::<Count>(&f), count_bij_centralizer::<Count>(&g));
    }

    #[test]
    fn bijective_part_is_at_most_the_total(f in endofunction(1, 12)) {
        prop_assert!(count_bij_centralizer::<Count>(&f) <= count_centralizer::<Count>(&f));
    }

    #[test]
    fn report_matches_counts(f in endofunction(0, 10)) {
        let r = report::<Count>(&f);
        prop_assert_eq!(&r.total, &count_centralizer::<Count>(&f));
        prop_assert_eq!(&r.bijective_total, &count_bij_centralizer::<Count>(&f));
        let comps = components(&f);
        for (i, row) in hom_matrix::<u64>(&f).iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if !comps[i].cycle_len().is_multiple_of(comps[j].cycle_len()) {
                    prop_assert_eq!(x, 0);
                }
            }
        }
    }

    #[test]
    fn streams_are_the_brute_force_lists(f in endofunction(1, 6)) {
        let all: Vec<_> = enumerate_centralizer(&f, false).collect();
        prop_assert_eq!(&all, &brute_centralizer(&f, false).unwrap());
        let bij: Vec<_> = enumerate_centralizer(&f, true).collect();
        let filtered: Vec<_> = all.iter().filter(|g| g.is_bijective()).cloned().collect();
        prop_assert_eq!(bij, filtered);
    }

    #[test]
    fn induced_map_respects_cycle_lengths(f in endofunction(1, 6), pick in any::<prop::sample::Index>()) {
        let all = brute_centralizer(&f, false).unwrap();
        let g = &all[pick.index(all.len())];
        let comps = components(&f);
        for (i, j) in induced_component_map(&f, g).unwrap().into_iter().enumerate() {
            prop_assert_eq!(comps[i].cycle_len() % comps[j].cycle_len(), 0);
        }
    }
}
