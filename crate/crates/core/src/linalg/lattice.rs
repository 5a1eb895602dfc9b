//! Lattices in `Z^n` given by the columns of an integer matrix.

use num_traits::{One, Signed};

use super::normal_form::hnf;
use super::{IntMatrix, LinalgError, Rational};

/// Canonical basis of the lattice spanned by the columns of `a`: the nonzero
/// rows of the row Hermite form of `aᵀ`, returned as columns.
pub fn column_basis(a: &IntMatrix) -> IntMatrix {
    let r = hnf(&a.transpose());
    let idx: Vec<usize> = (0..r.rank).collect();
    r.h.select_rows(&idx).transpose()
}

/// Saturated basis (as columns) of the integer kernel `{x : a x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let n = a.cols();
    let r = hnf(&a.transpose());
    let idx: Vec<usize> = (r.rank..n).collect();
    let raw = r.u.select_rows(&idx);
    if raw.rows() == 0 {
        return IntMatrix::zeros(n, 0);
    }
    // Hermite-reduce the kernel rows so the basis is canonical and small.
    let red = hnf(&raw);
    let keep: Vec<usize> = (0..red.rank).collect();
    red.h.select_rows(&keep).transpose()
}

/// Index `(sup : sub)` of the lattice spanned by `sub` inside the one spanned
/// by `sup`. Both lattices must have the same rank.
pub fn lattice_index(sup: &IntMatrix, sub: &IntMatrix) -> Result<Rational, LinalgError> {
    if sup.rows() != sub.rows() {
        return Err(LinalgError::Shape(format!(
            "ambient dimensions differ ({} vs {})",
            sup.rows(),
            sub.rows()
        )));
    }
    let b1 = column_basis(sup);
    let b2 = column_basis(sub);
    if b1.cols() != b2.cols() {
        return Err(LinalgError::RankMismatch(b1.cols(), b2.cols()));
    }
    if b1.cols() == 0 {
        return Ok(Rational::one());
    }
    let x = b1
        .to_rational()
        .solve(&b2.to_rational())
        .ok_or(LinalgError::NotASublattice)?;
    let x = x.to_integer().ok_or(LinalgError::NotASublattice)?;
    Ok(Rational::from_integer(x.det().abs()))
}

/// Basis of the intersection of the lattices spanned by `a` and `b`.
pub fn lattice_intersect(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    assert_eq!(a.rows(), b.rows(), "lattices live in different ambient spaces");
    let k = kernel_basis(&a.hstack(&-b));
    let top: Vec<usize> = (0..a.cols()).collect();
    let s = k.select_rows(&top);
    column_basis(&(a * &s))
}

/// Saturation `(Q·Λ) ∩ Z^n` of the lattice spanned by the columns of `a`.
pub fn saturate(a: &IntMatrix) -> IntMatrix {
    // The saturation is the kernel of any integer matrix whose kernel over Q
    // is the span of `a`: take the kernel of the left annihilator.
    let ann = kernel_basis(&a.transpose()).transpose();
    if ann.rows() == 0 {
        return IntMatrix::identity(a.rows());
    }
    let sat = kernel_basis(&ann);
    if sat.cols() == 0 {
        return IntMatrix::zeros(a.rows(), 0);
    }
    sat
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, snf, Integer};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn idx(sup: &IntMatrix, sub: &IntMatrix) -> Rational {
        lattice_index(sup, sub).unwrap()
    }

    /// Counts cosets of `sub` in `Z^2` by reducing representatives of
    /// `Z^2 / 2Z^2` that fall into the same class.
    fn coset_count_mod2(sub_member: impl Fn(i64, i64) -> bool) -> usize {
        let reps = [(0, 0), (0, 1), (1, 0), (1, 1)];
        let mut classes: Vec<(i64, i64)> = Vec::new();
        for &(a, b) in &reps {
            if !classes.iter().any(|&(c, d)| sub_member(a - c, b - d)) {
                classes.push((a, b));
            }
        }
        classes.len()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&IntMatrix::identity(2)).cols(), 0);
        let k = kernel_basis(&IntMatrix::from_rows(&[vec![1, 1]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0).iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![int(1), int(1)]);
        let a = IntMatrix::from_rows(&[vec![2, 4]]);
        let k = kernel_basis(&a);
        assert!((&a * &k).is_zero());
        assert_eq!(k.cols(), 1);
        // Saturated: the single invariant factor is 1.
        assert_eq!(snf(&k).d, vec![int(1)]);
        assert_eq!(idx(&k, &IntMatrix::from_rows(&[vec![2], vec![-1]])), Rational::one());
    }

    #[test]
    fn index_examples() {
        let z2 = IntMatrix::identity(2);
        assert_eq!(idx(&z2, &IntMatrix::scalar(2, &int(2))), Rational::from_integer(int(4)));
        // {(u,v): u ≡ v mod 2} has basis (1,1), (0,2).
        let even = IntMatrix::from_rows(&[vec![1, 0], vec![1, 2]]);
        let cosets = coset_count_mod2(|a, b| (a - b) % 2 == 0);
        assert_eq!(cosets, 2);
        assert_eq!(idx(&z2, &even), Rational::from_integer(Integer::from(cosets)));
        let z3 = IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 0], vec![2, 0, 1]]);
        assert_eq!(idx(&IntMatrix::identity(3), &z3), Rational::one());
    }

    #[test]
    fn index_errors() {
        let z2 = IntMatrix::identity(2);
        let half = IntMatrix::scalar(2, &int(2));
        assert_eq!(lattice_index(&half, &z2), Err(LinalgError::NotASublattice));
        let line = IntMatrix::from_rows(&[vec![1], vec![0]]);
        assert_eq!(lattice_index(&z2, &line), Err(LinalgError::RankMismatch(2, 1)));
    }

    #[test]
    fn intersection_examples() {
        let z2 = IntMatrix::identity(2);
        assert_eq!(lattice_intersect(&z2, &z2), z2);
        let two = IntMatrix::scalar(2, &int(2));
        let three = IntMatrix::scalar(2, &int(3));
        assert_eq!(lattice_intersect(&two, &three), IntMatrix::scalar(2, &int(6)));
        let a = IntMatrix::from_rows(&[vec![1, 0], vec![0, 2]]);
        let b = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]);
        let c = lattice_intersect(&a, &b);
        assert_eq!(c, IntMatrix::scalar(2, &int(2)));
        // (2,0) and (0,2) lie in both; index bookkeeping 2·2 = 4.
        assert_eq!(idx(&z2, &c), Rational::from_integer(int(4)));
        assert_eq!(idx(&a, &c), Rational::from_integer(int(2)));
    }

    #[test]
    fn empty_lattices() {
        let e = IntMatrix::zeros(3, 0);
        assert_eq!(lattice_index(&e, &e).unwrap(), Rational::one());
        assert_eq!(column_basis(&IntMatrix::zeros(3, 2)).cols(), 0);
    }

    #[test]
    fn saturation_of_scaled_line() {
        let l = IntMatrix::from_rows(&[vec![2], vec![4]]);
        let s = saturate(&l);
        assert_eq!(idx(&s, &l), Rational::from_integer(int(2)));
        assert_eq!(snf(&s).d, vec![int(1)]);
    }

    fn nonsingular(n: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(-6i64..=6, n * n)
            .prop_map(move |v| IntMatrix::from_i64(n, n, &v))
            .prop_filter("nonsingular", |m| !m.det().is_zero())
    }

    proptest! {
        #[test]
        fn index_is_multiplicative(
            (a, b) in (1usize..=4).prop_flat_map(|n| (nonsingular(n), nonsingular(n)))
        ) {
            let n = a.rows();
            let l2 = a.clone();
            let l3 = &a * &b;
            let l1 = IntMatrix::identity(n);
            prop_assert_eq!(
                idx(&l1, &l3),
                idx(&l1, &l2) * idx(&l2, &l3)
            );
            prop_assert_eq!(idx(&l1, &l2), Rational::from_integer(a.det().abs()));
        }

        #[test]
        fn kernel_is_saturated(v in proptest::collection::vec(-20i64..=20, 2 * 5)) {
            let a = IntMatrix::from_i64(2, 5, &v);
            let k = kernel_basis(&a);
            prop_assert!((&a * &k).is_zero());
            prop_assert_eq!(k.cols(), 5 - a.to_rational().rank());
            prop_assert!(snf(&k).d.iter().all(One::is_one));
        }
    }
}
