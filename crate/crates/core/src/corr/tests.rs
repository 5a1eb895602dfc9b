use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::abelian::sample::{random_commensurability, random_group};
use crate::abelian::{AbHom, FgAbGroup};
use crate::linalg::{int, lattice_index, rat, IntMatrix};

type AbCorr = Correspondence<FgAbGroup, AbHom>;

fn mult(g: &FgAbGroup, k: i64) -> AbHom {
    AbHom::scalar(g, &int(k))
}

fn hom(src: &FgAbGroup, dst: &FgAbGroup, rows: &[Vec<i64>]) -> AbHom {
    AbHom::new(src.clone(), dst.clone(), IntMatrix::from_rows(rows)).unwrap()
}

fn comm(c: AbCorr) -> Commensurability<FgAbGroup, AbHom> {
    Commensurability::new(&AbelianContext, c).unwrap()
}

#[test]
fn from_isogeny_examples() {
    let ctx = AbelianContext;
    let z = FgAbGroup::free(1);
    let z4 = FgAbGroup::cyclic(4);
    assert_eq!(Commensurability::from_isogeny(&ctx, &mult(&z, 1)).unwrap().index(), rat(1, 1));
    assert_eq!(Commensurability::from_isogeny(&ctx, &mult(&z, 3)).unwrap().index(), rat(3, 1));
    assert_eq!(Commensurability::from_isogeny(&ctx, &mult(&z4, 2)).unwrap().index(), rat(1, 1));
    assert!(matches!(
        Commensurability::from_isogeny(&ctx, &mult(&z, 0)),
        Err(CorrError::NotIsogeny(_))
    ));
}

#[test]
fn compose_examples() {
    let ctx = AbelianContext;
    let z = FgAbGroup::free(1);
    let c = AbCorr::new(z.clone(), mult(&z, 1), mult(&z, 2));
    let d = AbCorr::new(z.clone(), mult(&z, 1), mult(&z, 3));
    let dc = compose(&ctx, &c, &d).unwrap();
    // {(x, y) : 2x = y} ≅ Z via x.
    assert_eq!(dc.apex, z);
    let dc = comm(dc);
    assert_eq!(dc.index(), rat(6, 1));
    assert_eq!(dc.left_cert.index, rat(1, 1));

    let id = AbCorr::identity(&ctx, &z);
    let ii = comm(compose(&ctx, &id, &id).unwrap());
    assert_eq!(ii.base.apex, z);
    assert_eq!(ii.index(), rat(1, 1));
}

#[test]
fn compose_rejects_mismatched_objects() {
    let ctx = AbelianContext;
    let z = FgAbGroup::free(1);
    let z2 = FgAbGroup::cyclic(2);
    let c = AbCorr::identity(&ctx, &z);
    let d = AbCorr::identity(&ctx, &z2);
    assert!(matches!(compose(&ctx, &c, &d), Err(CorrError::ObjectMismatch(_))));
}

#[test]
fn inverse_examples() {
    let ctx = AbelianContext;
    let z = FgAbGroup::free(1);
    let c = comm(AbCorr::new(z.clone(), mult(&z, 1), mult(&z, 2)));
    let inv = c.inverse();
    assert_eq!(inv.base.left, mult(&z, 2));
    assert_eq!(inv.base.right, mult(&z, 1));
    assert_eq!(inv.index(), rat(1, 2));
    let back = inv.inverse();
    assert_eq!(back.base.left, c.base.left);
    assert_eq!(back.base.right, c.base.right);
    let cc = compose_commensurabilities(&ctx, &c, &inv).unwrap();
    assert_eq!(cc.index(), rat(1, 1));
}

#[test]
fn index_examples() {
    let z = FgAbGroup::free(1);
    let z4 = FgAbGroup::cyclic(4);
    assert_eq!(comm(AbCorr::new(z.clone(), mult(&z, 2), mult(&z, 3))).index(), rat(3, 2));
    assert_eq!(comm(AbCorr::identity(&AbelianContext, &z4)).index(), rat(1, 1));
    assert_eq!(comm(AbCorr::new(z4.clone(), mult(&z4, 2), mult(&z4, 1))).index(), rat(1, 1));
}

#[test]
fn equivalence_examples() {
    let ctx = AbelianContext;
    let z = FgAbGroup::free(1);
    let c = AbCorr::new(z.clone(), mult(&z, 1), mult(&z, 2));
    let refl = EquivalenceWitness { apex: z.clone(), p: mult(&z, 1), q: mult(&z, 1) };
    assert!(verify_equivalence(&ctx, &c, &c, &refl).unwrap());

    // d has apex 2Z (identified with Z via its generator 2): the left leg is
    // the inclusion and the right leg is doubling restricted to 2Z.
    let d = AbCorr::new(z.clone(), mult(&z, 2), mult(&z, 4));
    let w = EquivalenceWitness { apex: z.clone(), p: mult(&z, 2), q: mult(&z, 1) };
    assert!(verify_equivalence(&ctx, &c, &d, &w).unwrap());
    assert_eq!(comm(c.clone()).index(), comm(d.clone()).index());

    let bad = EquivalenceWitness { apex: z.clone(), p: mult(&z, 0), q: mult(&z, 0) };
    assert!(!verify_equivalence(&ctx, &c, &c, &bad).unwrap());

    let z2 = FgAbGroup::cyclic(2);
    let other = AbCorr::identity(&ctx, &z2);
    assert!(matches!(
        verify_equivalence(&ctx, &c, &other, &refl),
        Err(CorrError::EndpointMismatch(_))
    ));
}

#[test]
fn fibre_product_examples() {
    let ctx = AbelianContext;
    let z = FgAbGroup::free(1);
    let z2 = FgAbGroup::cyclic(2);
    let red = hom(&z, &z2, &[vec![1]]);
    let fp = ctx.fibre_product(&red, &red).unwrap();
    assert_eq!(fp.apex, FgAbGroup::free(2));
    // Image of W in Z ⊕ Z is {(a, b) : a ≡ b mod 2}, of index 2.
    let emb = fp.p0.matrix().vstack(fp.p1.matrix());
    assert_eq!(lattice_index(&IntMatrix::identity(2), &emb).unwrap(), rat(2, 1));

    let x = FgAbGroup::cyclic(3).direct_sum(&z);
    let to_z = hom(&x, &z, &[vec![0, 5]]);
    let fp = ctx.fibre_product(&to_z, &mult(&z, 1)).unwrap();
    assert_eq!(fp.apex, x);
    assert!(fp.p0.certify().unwrap().index.is_one());
    assert!(fp.p0.certify().unwrap().ker_order.is_one());

    let z4 = FgAbGroup::cyclic(4);
    let red4 = hom(&z4, &z2, &[vec![1]]);
    let fp = ctx.fibre_product(&red4, &mult(&z2, 1)).unwrap();
    assert_eq!(fp.apex.order(), Some(int(4)));
}

#[test]
fn inverse_composite_is_equivalent_to_identity() {
    let ctx = AbelianContext;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let l = random_group(&mut rng, 1, 36);
        let m = random_group(&mut rng, 1, 36);
        let c = random_commensurability(&mut rng, &l, &m, 36);
        let (composite, witness) = inverse_composite_witness(&ctx, &c.base).unwrap();
        let id = AbCorr::identity(&ctx, &l);
        assert!(verify_equivalence(&ctx, &composite, &id, &witness).unwrap());
        assert!(comm(composite).index().is_one());
    }
}

#[test]
fn fibre_product_kernel_orders() {
    // For c = (X, f, g) and d = (Y, h, j) the projections of X ×_M Y satisfy
    // #ker p0 = #ker h and #ker p1 = #ker g.
    let ctx = AbelianContext;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let l = random_group(&mut rng, 0, 48);
        let m = random_group(&mut rng, 0, 48);
        let n = random_group(&mut rng, 0, 48);
        let c = random_commensurability(&mut rng, &l, &m, 48);
        let d = random_commensurability(&mut rng, &m, &n, 48);
        let fp = ctx.fibre_product(&c.base.right, &d.base.left).unwrap();
        assert_eq!(fp.p0.certify().unwrap().ker_order, d.left_cert.ker_order);
        assert_eq!(fp.p1.certify().unwrap().ker_order, c.right_cert.ker_order);
    }
}

#[test]
fn index_is_multiplicative_on_random_pairs() {
    let ctx = AbelianContext;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let rank = rand::Rng::gen_range(&mut rng, 0..=2);
        let l = random_group(&mut rng, rank, 60);
        let m = random_group(&mut rng, rank, 60);
        let n = random_group(&mut rng, rank, 60);
        let c = random_commensurability(&mut rng, &l, &m, 60);
        let d = random_commensurability(&mut rng, &m, &n, 60);
        let dc = compose_commensurabilities(&ctx, &c, &d).unwrap();
        assert_eq!(dc.index(), c.index() * d.index());
        assert_eq!(c.inverse().index(), c.index().recip());
    }
}
