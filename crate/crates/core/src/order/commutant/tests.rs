use proptest::prelude::*;

use super::*;
use crate::linalg::{int, rat};
use crate::order::{FiniteGroup, ZOrder};

fn ut2() -> (ZOrder, OrderLattice) {
    let r = ZOrder::upper_triangular_order(2);
    let l = OrderLattice::regular(&r);
    (r, l)
}

/// Right multiplication by `a·e11 + b·e12 + c·e22` on the regular lattice.
fn ut2_right(r: &ZOrder, a: i64, b: i64, c: i64) -> RatMatrix {
    r.right_mult_matrix(&[int(a), int(b), int(c)]).to_rational()
}

fn c2_lattices() -> (OrderLattice, OrderLattice, OrderLattice, OrderLattice) {
    let r = ZOrder::group_ring(&FiniteGroup::cyclic(2));
    let reg = OrderLattice::regular(&r);
    let triv = OrderLattice::character(&r, &[1, 1]).unwrap();
    let sign = OrderLattice::character(&r, &[1, -1]).unwrap();
    let sum = triv.direct_sum(&sign).unwrap();
    (reg, triv, sign, sum)
}

#[test]
fn end_lattice_ranks() {
    let z = OrderLattice::regular(&ZOrder::integers());
    assert_eq!(end_lattice(&z).ambient_dim, 1);
    let (reg, ..) = c2_lattices();
    let e = end_lattice(&reg);
    assert_eq!(e.ambient_dim, 2);
    // E_L is the right multiplications by Z[C2].
    let r = reg.order().clone();
    for g in 0..2 {
        let rho = r.right_mult_matrix(&r.basis(g)).to_rational();
        assert!(reg.intertwines(&reg, &rho));
    }
    let (_, l) = ut2();
    assert_eq!(end_lattice(&l).ambient_dim, 3);
}

#[test]
fn end_lattice_is_saturated() {
    let (r, l) = ut2();
    let s3 = ZOrder::group_ring(&FiniteGroup::symmetric(3).0);
    for lat in [l, OrderLattice::regular(&s3), OrderLattice::regular(&r)] {
        let e = end_lattice(&lat);
        for b in &e.qbasis {
            assert!(lat.intertwines(&lat, &b.to_rational()));
        }
        let cols: Vec<_> = e.qbasis.iter().map(IntMatrix::flatten).collect();
        let stacked = IntMatrix::from_columns(lat.zrank() * lat.zrank(), &cols);
        let s = snf(&stacked);
        assert_eq!(s.rank(), e.ambient_dim);
        assert!(s.d.iter().all(One::is_one));
    }
}

#[test]
fn ie_self_trivial_cases() {
    let (_, l) = ut2();
    let id = RatMatrix::identity(3);
    assert_eq!(ie_self(&l, &id).unwrap(), rat(1, 1));
    for m in [2, -3, 7] {
        assert_eq!(ie_self(&l, &id.scale(&rat(m, 1))).unwrap(), rat(1, 1));
    }
}

#[test]
fn ie_self_upper_triangular() {
    let (r, l) = ut2();
    for c in [2, 3, 4, 5, 10] {
        assert_eq!(ie_self(&l, &ut2_right(&r, 1, 0, c)).unwrap(), rat(c, 1));
    }
    for a in [1, -1, 2, -2, 3, 5] {
        for c in [1, -1, 2, -2, 3, 5] {
            let want = rat(c, a).abs();
            assert_eq!(ie_self(&l, &ut2_right(&r, a, 0, c)).unwrap(), want, "a={a} c={c}");
        }
    }
}

#[test]
fn ie_self_errors() {
    let (r, l) = ut2();
    // Left multiplication by e12 does not commute with the action.
    let left = r.left_mult_matrix(&[int(1), int(1), int(1)]).to_rational();
    assert_eq!(ie_self(&l, &left), Err(OrderError::NotInCommutant));
    assert_eq!(ie_self(&l, &ut2_right(&r, 1, 0, 0)), Err(OrderError::Singular));
}

#[test]
fn commensurability_examples() {
    let (reg, triv, sign, sum) = c2_lattices();
    assert!(commensurable(&reg, &reg).unwrap());
    assert!(commensurable(&reg, &sum).unwrap());
    assert!(!commensurable(&triv, &sign).unwrap());
    let (_, l) = ut2();
    assert_eq!(commensurable(&l, &l), Err(OrderError::OrderNotSemisimple));
}

#[test]
fn ie_pair_c2() {
    let (reg, triv, _, sum) = c2_lattices();
    assert_eq!(ie_pair(&reg, &reg).unwrap(), rat(1, 1));
    assert_eq!(ie_pair(&reg, &sum).unwrap(), rat(2, 1));
    assert_eq!(ie_pair_with(&reg, &sum, 1).unwrap(), rat(2, 1));
    assert_eq!(ie_pair(&sum, &reg).unwrap(), rat(1, 2));
    assert_eq!(ie_pair(&reg, &triv), Err(OrderError::NotCommensurable));
    let phis = phi_candidates(&reg, &sum, 2).unwrap();
    assert_eq!(phis.len(), 2);
    assert!(!proportional(&phis[0], &phis[1]));
}

#[test]
fn covolume_route_agrees() {
    let (reg, _, _, sum) = c2_lattices();
    for phi in phi_candidates(&reg, &sum, 4).unwrap() {
        let phi = phi.to_rational();
        assert_eq!(ie_of_isomorphism(&reg, &sum, &phi).unwrap(), ie_by_covolume(&reg, &phi).unwrap());
    }
    let (r, l) = ut2();
    let alpha = ut2_right(&r, 2, 1, 3);
    assert_eq!(ie_self(&l, &alpha).unwrap(), ie_of_isomorphism(&l, &l, &alpha).unwrap());
    assert_eq!(ie_self(&l, &alpha).unwrap(), ie_by_covolume(&l, &alpha).unwrap());
}

proptest! {
    #[test]
    fn centrality(a in -4i64..=4, b in -4i64..=4, c in -4i64..=4, z in prop::sample::select(vec![-3i64, -2, -1, 2, 3, 5])) {
        prop_assume!(a != 0 && c != 0);
        let (r, l) = ut2();
        let alpha = ut2_right(&r, a, b, c);
        let scaled = alpha.scale(&rat(z, 1));
        prop_assert_eq!(ie_self(&l, &scaled).unwrap(), ie_self(&l, &alpha).unwrap());
        prop_assert_eq!(ie_self(&l, &alpha).unwrap(), rat(c, a).abs());
    }
}
