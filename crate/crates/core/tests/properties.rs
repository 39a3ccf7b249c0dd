use gelfand::criteria::corpus::{corpus_thetas, outer_thetas};
use gelfand::criteria::{analyze, GroupData, Theorem};
use gelfand::field::{Matrix, PrimeField, RankAccumulator};
use gelfand::group::{
    automorphism_from_spec, catalog_group, conjugacy_classes, group_from_cayley,
    group_from_permutations, CatalogEntry, FiniteGroup, Subgroup,
};
use proptest::prelude::*;

const SPECS: &[&str] = &[
    "cyclic(6)",
    "dihedral(5)",
    "symmetric(4)",
    "alternating(4)",
    "quaternion8",
    "direct_product(cyclic(2),symmetric(3))",
    "direct_product(cyclic(3),cyclic(3))",
    "direct_product(symmetric(3),symmetric(3))",
];

fn entry(i: usize) -> CatalogEntry {
    catalog_group(&SPECS[i].parse().unwrap()).unwrap()
}

fn cayley(g: &FiniteGroup) -> Vec<Vec<usize>> {
    g.elements()
        .map(|a| g.elements().map(|b| g.mul(a, b)).collect())
        .collect()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabelled_tables_have_the_same_invariants(i in 0..SPECS.len(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = entry(i).group;
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[g.mul(a, b)];
            }
        }
        let h = group_from_cayley(&table).unwrap();
        prop_assert_eq!(h.order(), n);
        prop_assert_eq!(h.exponent(), g.exponent());
        let (dg, dh) = (
            GroupData::new("g", g).unwrap(),
            GroupData::new("h", h).unwrap(),
        );
        prop_assert_eq!(sorted(dg.classes.sizes()), sorted(dh.classes.sizes()));
        prop_assert_eq!(dg.table.degrees(), dh.table.degrees());
        prop_assert!(dh.table.validate().is_empty());
    }

    #[test]
    fn random_subgroups_satisfy_every_identity(
        i in 0..SPECS.len(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
        t in any::<prop::sample::Index>(),
    ) {
        let e = entry(i);
        let data = GroupData::new(SPECS[i], e.group.clone()).unwrap();
        let g = &data.group;
        let gens: Vec<usize> = picks.iter().map(|p| p.index(g.order())).collect();
        let h = Subgroup::from_generators(g, &gens).unwrap();
        let thetas = corpus_thetas(&data);
        let (tl, theta) = &thetas[t.index(thetas.len())];
        let r = analyze(&data, &h, "random", theta, tl).unwrap();
        prop_assert!(r.ok(), "{:?}", r.failures());
        prop_assert_eq!(r.corollary.lhs, 2 * r.proposition.lhs);
        prop_assert_eq!(r.gelfand, r.profiles.iter().all(|p| p.dim_h <= 1));
    }

    #[test]
    fn outer_involutions_only_break_the_literal_gk3(
        i in 0..SPECS.len(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
    ) {
        let e = entry(i);
        let data = GroupData::new(SPECS[i], e.group.clone()).unwrap();
        let g = &data.group;
        let named: Vec<_> = e
            .thetas
            .iter()
            .map(|(n, s)| (n.clone(), automorphism_from_spec(g, s).unwrap()))
            .collect();
        let gens: Vec<usize> = picks.iter().map(|p| p.index(g.order())).collect();
        let h = Subgroup::from_generators(g, &gens).unwrap();
        for (tl, theta) in outer_thetas(&data, &named) {
            let r = analyze(&data, &h, "random", &theta, &tl).unwrap();
            prop_assert!(r.checks.iter().all(|c| c.ok), "{:?}", r.failures());
            if r.subgroup.theta_stable {
                prop_assert!(r.ok());
            }
            let gk3 = r.theorem(Theorem::GK3);
            // cond1 implies cond2 always; only the converse can fail
            prop_assert!(!gk3.cond1 || gk3.cond2);
        }
    }

    #[test]
    fn permutation_closure_is_consistent(
        gens in prop::collection::vec(Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(), 1..3),
    ) {
        let g = group_from_permutations(5, &gens, 5040).unwrap();
        prop_assert_eq!(120 % g.order(), 0);
        let again = group_from_cayley(&cayley(&g)).unwrap();
        prop_assert_eq!(again.order(), g.order());
        let classes = conjugacy_classes(&g);
        prop_assert_eq!(classes.sizes().iter().sum::<usize>(), g.order());
        let data = GroupData::new("perm", g).unwrap();
        let sq: usize = data.table.degrees().iter().map(|d| d * d).sum();
        prop_assert_eq!(sq, data.group.order());
    }

    #[test]
    fn sparse_rank_matches_dense_elimination(
        rows in prop::collection::vec(prop::collection::vec(-3i64..4, 6), 0..8),
    ) {
        let f = PrimeField::new(101);
        let mut acc = RankAccumulator::new(f, 6);
        for r in &rows {
            let sparse: Vec<(usize, i64)> =
                r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, x)).collect();
            acc.push_sparse(&sparse);
        }
        let dense: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect();
        let mut m = Matrix::from_rows(dense, 6);
        let pivots = m.rref(&f);
        prop_assert_eq!(acc.rank(), pivots.len());
    }
}
