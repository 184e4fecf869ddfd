//! Randomized structural properties over the whole pipeline.

use std::sync::Arc;

use diffract::{
    io, CosetDecomposition, Fibration, FiniteGroup, Subgroup, Transversal, TransversalStrategy,
};
use proptest::prelude::*;

const GROUP_POOL: [&str; 8] = [
    "cyclic:5",
    "cyclic:8",
    "cyclic:12",
    "klein4",
    "symmetric:3",
    "symmetric:4",
    "dihedral:4",
    "quaternion",
];

fn pool_group(idx: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::builtin(GROUP_POOL[idx % GROUP_POOL.len()]).unwrap())
}

fn subgroup_from(group: Arc<FiniteGroup>, raw_gens: &[usize]) -> Arc<Subgroup> {
    let order = group.order();
    let gens: Vec<usize> = raw_gens.iter().map(|&x| x % order).collect();
    Arc::new(Subgroup::generate(group, &gens).unwrap())
}

fn shuffled(degree: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..degree).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn permutation_closures_are_groups_satisfying_lagrange(
        (degree, gens) in (1usize..=4).prop_flat_map(|d| {
            (Just(d), prop::collection::vec(shuffled(d), 1..=2))
        })
    ) {
        let g = FiniteGroup::from_permutations(degree, &gens).unwrap();
        let mut factorial = 1usize;
        for k in 2..=degree { factorial *= k; }
        prop_assert_eq!(factorial % g.order(), 0);
        for x in 0..g.order() {
            prop_assert_eq!(g.order() % g.element_order(x), 0);
        }
    }

    #[test]
    fn coset_decompositions_validate(
        pool in 0usize..8,
        raw_gens in prop::collection::vec(0usize..24, 0..=2),
    ) {
        let g = pool_group(pool);
        let h = subgroup_from(g, &raw_gens);
        let d = CosetDecomposition::left_cosets(h);
        d.validate().unwrap();
        // Coset ids ascend with their minimal members, and H is coset 0.
        let minima: Vec<usize> = d.cosets().iter().map(|c| c[0]).collect();
        let mut sorted = minima.clone();
        sorted.sort_unstable();
        prop_assert_eq!(&minima, &sorted);
        prop_assert_eq!(minima[0], 0);
    }

    #[test]
    fn random_strategies_always_land_on_transversals(
        pool in 0usize..8,
        raw_gens in prop::collection::vec(0usize..24, 0..=2),
        seed in any::<u64>(),
    ) {
        let g = pool_group(pool);
        let h = subgroup_from(g, &raw_gens);
        let d = Arc::new(CosetDecomposition::left_cosets(h));
        let t = Transversal::choose(d, &TransversalStrategy::Random(seed), false).unwrap();
        prop_assert!(t.is_transversal());
        prop_assert!(t.check_representative_calculus().is_pass());
        // One representative from each coset, in coset order.
        for (c, &rep) in t.reps().iter().enumerate() {
            prop_assert_eq!(t.decomposition().coset_of(rep), c);
        }
    }

    #[test]
    fn factoring_round_trips_every_element(
        pool in 0usize..8,
        raw_gens in prop::collection::vec(0usize..24, 0..=2),
        seed in any::<u64>(),
    ) {
        let g = pool_group(pool);
        let h = subgroup_from(g.clone(), &raw_gens);
        let d = Arc::new(CosetDecomposition::left_cosets(h));
        let t = Arc::new(Transversal::choose(d, &TransversalStrategy::Random(seed), false).unwrap());
        let f = Fibration::tabulate(t).unwrap();
        for x in 0..g.order() {
            let s = f.nabla(x).unwrap();
            prop_assert_eq!(f.nabla_inv(s).unwrap(), x);
            prop_assert_eq!(g.mul(s.t, s.h), x);
        }
        for idx in 0..f.t_size() * f.h_size() {
            let s = f.spectrum_at(idx);
            prop_assert_eq!(f.spectrum_index(&s).unwrap(), idx);
            prop_assert_eq!(f.nabla(f.nabla_inv(s).unwrap()).unwrap(), s);
        }
    }

    #[test]
    fn gtab_text_round_trips(pool in 0usize..8) {
        let g = pool_group(pool);
        let text = io::render_gtab(&g);
        let back = io::parse_gtab(&text).unwrap();
        prop_assert_eq!(back.order(), g.order());
        for a in 0..g.order() {
            prop_assert_eq!(back.table_row(a), g.table_row(a));
        }
        prop_assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn rewrite_traces_reassemble_products(
        pool in 0usize..8,
        raw_gens in prop::collection::vec(0usize..24, 0..=2),
        seed in any::<u64>(),
        picks in prop::collection::vec((0usize..24, 0usize..24), 8),
    ) {
        let g = pool_group(pool);
        let h = subgroup_from(g.clone(), &raw_gens);
        let d = Arc::new(CosetDecomposition::left_cosets(h.clone()));
        let t = Arc::new(Transversal::choose(d, &TransversalStrategy::Random(seed), false).unwrap());
        let f = Fibration::tabulate(t).unwrap();
        for (a, b) in picks {
            let g1 = a % g.order();
            let g2 = b % g.order();
            let trace = diffract::rewrite_product(&f, g1, g2).unwrap();
            prop_assert_eq!(trace.result, g.mul(g1, g2));
            prop_assert_eq!(
                g.mul(g.mul(trace.rep_part, trace.fib_part), trace.h_tail),
                trace.result
            );
            prop_assert!(h.contains(trace.fib_part));
            prop_assert!(h.contains(trace.h_tail));
        }
    }
}
