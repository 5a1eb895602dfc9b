//! Cross-module properties checked on random and exhaustive inputs.

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use commensura_core::abelian::sample::random_isogeny;
use commensura_core::abelian::{aut_order, hom_certify, ia_abelian, FgAbGroup, ElementIndexer};
use commensura_core::finring::{catalog, jacobson_radical, radical_ideal_catalog, FiniteRing};
use commensura_core::linalg::{Integer, Rational};
use commensura_core::oracle::aut_order_by_tuples;
use commensura_core::perm::{abelian_aut_generators, group_order};

/// `Z^rank ⊕ Z/d1 ⊕ …` with torsion order at most `10^4`.
fn group() -> impl Strategy<Value = FgAbGroup> {
    (0usize..=3, prop::collection::vec(2u64..=30, 0..=4)).prop_map(|(rank, mut orders)| {
        while orders.iter().product::<u64>() > 10_000 {
            orders.pop();
        }
        FgAbGroup::from_cyclic_orders(rank, &orders)
    })
}

fn finite_group() -> impl Strategy<Value = FgAbGroup> {
    prop::collection::vec(2u64..=12, 0..=3).prop_map(|orders| FgAbGroup::from_cyclic_orders(0, &orders))
}

fn with_rank(g: &FgAbGroup, rank: usize) -> FgAbGroup {
    FgAbGroup::new(rank, g.torsion().to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn isogeny_index_is_multiplicative(a in group(), b in group(), c in group(), seed in any::<u64>()) {
        let (b, c) = (with_rank(&b, a.rank()), with_rank(&c, a.rank()));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_isogeny(&mut rng, &a, &b);
        let h = random_isogeny(&mut rng, &b, &c);
        let hf = h.after(&f).unwrap();
        let (i_f, i_h) = (hom_certify(&f).unwrap().index, hom_certify(&h).unwrap().index);
        prop_assert_eq!(hom_certify(&hf).unwrap().index, i_h * i_f);
    }

    #[test]
    fn ia_abelian_cocycle_and_reciprocity(l in group(), m in group(), n in group()) {
        let (m, n) = (with_rank(&m, l.rank()), with_rank(&n, l.rank()));
        let lm = ia_abelian(&l, &m).unwrap();
        prop_assert_eq!(&lm * ia_abelian(&m, &n).unwrap(), ia_abelian(&l, &n).unwrap());
        prop_assert!((lm * ia_abelian(&m, &l).unwrap()).is_one());
    }

    #[test]
    fn ia_abelian_is_ratio_of_automorphism_counts(l in finite_group(), m in finite_group()) {
        let expected = Rational::new(aut_order(&m).unwrap(), aut_order(&l).unwrap());
        prop_assert_eq!(ia_abelian(&l, &m).unwrap(), expected);
    }
}

/// Invariant-factor lists of every abelian group of order `n`.
fn groups_of_order(n: u64) -> Vec<Vec<u64>> {
    fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![]];
        }
        (1..=k.min(max))
            .rev()
            .flat_map(|first| {
                partitions(k - first, first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    let mut primary: Vec<Vec<u64>> = vec![vec![]];
    let (mut rest, mut p) = (n, 2u64);
    while rest > 1 {
        let mut k = 0;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        if k > 0 {
            primary = primary
                .iter()
                .flat_map(|orders| {
                    partitions(k, k).into_iter().map(move |part| {
                        let mut o = orders.clone();
                        o.extend(part.iter().map(|&e| p.pow(e)));
                        o
                    })
                })
                .collect();
        }
        p += 1;
    }
    primary
}

/// Every group goes through Schreier–Sims on its action on elements; the
/// generating-tuple count is added when there are at most six invariant
/// factors, beyond which its subgroup-lattice state space (e.g. about 4·10^5
/// subspaces of F_2^8) makes it take minutes.
#[test]
fn aut_order_matches_enumeration_up_to_256() {
    let mut checked = 0;
    for n in 1..=256u64 {
        for orders in groups_of_order(n) {
            let g = FgAbGroup::from_cyclic_orders(0, &orders);
            let formula = aut_order(&g).unwrap();
            if orders.len() <= 6 {
                assert_eq!(aut_order_by_tuples(&g, 1 << 20).unwrap(), formula, "{orders:?}");
            }
            let idx = ElementIndexer::new(&g, 1 << 12).unwrap();
            assert_eq!(group_order(g.order().unwrap().try_into().unwrap(), &abelian_aut_generators(&idx)), formula, "{orders:?}");
            checked += 1;
        }
    }
    // Number of abelian groups of order ≤ 256, summed over n.
    assert!(checked > 400, "{checked}");
}

fn radical_checks(name: &str, ring: &FiniteRing) {
    let cap = 1 << 16;
    let j = jacobson_radical(ring, cap).unwrap();
    let idx = ring.indexer(cap).unwrap();
    let members: std::collections::HashSet<usize> = j.iter().map(|x| idx.index_of(x)).collect();
    let elements: Vec<Vec<Integer>> = (0..idx.size()).map(|i| idx.element_int(i)).collect();
    for x in &j {
        for r in &elements {
            assert!(members.contains(&idx.index_of(&ring.mul(r, x))), "{name}: r·J ⊄ J");
            assert!(members.contains(&idx.index_of(&ring.mul(x, r))), "{name}: J·r ⊄ J");
        }
    }
    let (quotient, _) = ring.quotient(&j, cap).unwrap();
    let jq = jacobson_radical(&quotient, cap).unwrap();
    assert_eq!(jq.len(), 1, "{name}: J(E/J) ≠ 0");
    assert!(jq[0].iter().all(Zero::is_zero), "{name}");
}

#[test]
fn radical_is_an_ideal_with_semisimple_quotient() {
    for entry in catalog().unwrap() {
        radical_checks(&entry.name, entry.hom.src());
        radical_checks(&entry.name, entry.hom.dst());
    }
    for entry in radical_ideal_catalog().unwrap() {
        radical_checks(&entry.name, &entry.ring);
    }
}
