use num_traits::{One, Zero};

use super::{OrderError, ZOrder};
use crate::linalg::{kernel_basis, IntMatrix, Integer, RatMatrix};

/// A module over a [`ZOrder`] that is free of finite rank over `Z`, given by
/// one integer matrix per basis element of the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderLattice {
    order: ZOrder,
    zrank: usize,
    action: Vec<IntMatrix>,
}

impl OrderLattice {
    pub fn new(order: ZOrder, zrank: usize, action: Vec<IntMatrix>) -> Result<Self, OrderError> {
        check_action(&order, zrank, &action, |a, b| a == b)?;
        Ok(Self { order, zrank, action })
    }

    /// The order acting on itself by left multiplication.
    pub fn regular(order: &ZOrder) -> Self {
        let action = (0..order.zrank())
            .map(|i| order.left_mult_matrix(&order.basis(i)))
            .collect();
        Self::new(order.clone(), order.zrank(), action).expect("regular action")
    }

    /// `Z[G]`-lattice on which basis element `g` of a group ring acts by one
    /// matrix per group element.
    pub fn from_group_matrices(order: &ZOrder, mats: Vec<IntMatrix>) -> Result<Self, OrderError> {
        let zrank = mats.first().map_or(0, IntMatrix::rows);
        Self::new(order.clone(), zrank, mats)
    }

    /// Permutation lattice `Z^d` where group element `g` permutes the basis
    /// by `perms[g]`.
    pub fn permutation(order: &ZOrder, perms: &[Vec<usize>]) -> Result<Self, OrderError> {
        let mats = perms
            .iter()
            .map(|p| {
                let mut m = IntMatrix::zeros(p.len(), p.len());
                for (j, &i) in p.iter().enumerate() {
                    m.set(i, j, Integer::one());
                }
                m
            })
            .collect();
        Self::from_group_matrices(order, mats)
    }

    /// Rank-one lattice on which group element `g` acts by `signs[g] = ±1`.
    pub fn character(order: &ZOrder, signs: &[i64]) -> Result<Self, OrderError> {
        let mats = signs.iter().map(|&s| IntMatrix::from_i64(1, 1, &[s])).collect();
        Self::from_group_matrices(order, mats)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, OrderError> {
        if self.order != other.order {
            return Err(OrderError::DifferentOrders);
        }
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Self::new(self.order.clone(), self.zrank + other.zrank, action)
    }

    /// The sublattice spanned by the columns of `basis` (full column rank),
    /// with the induced action in that basis.
    pub fn sublattice(&self, basis: &IntMatrix) -> Result<Self, OrderError> {
        if basis.rows() != self.zrank || basis.to_rational().rank() != basis.cols() {
            return Err(OrderError::Singular);
        }
        let p = basis.to_rational();
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            let image = &a.to_rational() * &p;
            let coords = p.solve(&image).and_then(|x| x.to_integer());
            action.push(coords.ok_or(OrderError::NotSubmodule)?);
        }
        Self::new(self.order.clone(), basis.cols(), action)
    }

    pub fn order(&self) -> &ZOrder {
        &self.order
    }

    pub fn zrank(&self) -> usize {
        self.zrank
    }

    pub fn action(&self) -> &[IntMatrix] {
        &self.action
    }

    /// Whether the rational matrix `x: Q⊗self → Q⊗other` is `A`-linear.
    pub fn intertwines(&self, other: &Self, x: &RatMatrix) -> bool {
        x.rows() == other.zrank
            && x.cols() == self.zrank
            && self
                .action
                .iter()
                .zip(&other.action)
                .all(|(a, b)| &(x * &a.to_rational()) == &(&b.to_rational() * x))
    }

    /// Saturated `Z`-basis of `Hom_R(self, other)`, which is also a `Q`-basis
    /// of `Hom_A(Q⊗self, Q⊗other)`. Matrices are `other.zrank × self.zrank`.
    pub fn hom_basis(&self, other: &Self) -> Result<Vec<IntMatrix>, OrderError> {
        if self.order != other.order {
            return Err(OrderError::DifferentOrders);
        }
        let (p, q) = (self.zrank, other.zrank);
        let unknowns = q * p;
        if unknowns == 0 {
            return Ok(Vec::new());
        }
        // X A_i − B_i X = 0 with X stored row-major: X[a][c] at a*p + c.
        let mut rows: Vec<Vec<Integer>> = Vec::new();
        for (a_mat, b_mat) in self.action.iter().zip(&other.action) {
            for a in 0..q {
                for b in 0..p {
                    let mut row = vec![Integer::zero(); unknowns];
                    for c in 0..p {
                        row[a * p + c] += a_mat.get(c, b);
                    }
                    for c in 0..q {
                        row[c * p + b] -= b_mat.get(a, c);
                    }
                    rows.push(row);
                }
            }
        }
        let sys = IntMatrix::from_columns(unknowns, &rows).transpose();
        let ker = kernel_basis(&sys);
        Ok(ker
            .columns()
            .into_iter()
            .map(|v| IntMatrix::new(q, p, v).expect("kernel vector has q·p entries"))
            .collect())
    }
}

/// Validates that `action` defines a ring homomorphism from `order`, with
/// `eq` deciding equality of matrices (exact or modulo relations).
pub(crate) fn check_action(
    order: &ZOrder,
    zrank: usize,
    action: &[IntMatrix],
    eq: impl Fn(&IntMatrix, &IntMatrix) -> bool,
) -> Result<(), OrderError> {
    let n = order.zrank();
    if action.len() != n {
        return Err(OrderError::InvalidModule(format!(
            "expected {n} action matrices, got {}",
            action.len()
        )));
    }
    if action.iter().any(|a| a.rows() != zrank || a.cols() != zrank) {
        return Err(OrderError::InvalidModule(format!("action matrices must be {zrank}×{zrank}")));
    }
    let combo = |coeffs: &mut dyn Iterator<Item = (usize, Integer)>| {
        let mut acc = IntMatrix::zeros(zrank, zrank);
        for (k, c) in coeffs {
            if !c.is_zero() {
                acc = &acc + &action[k].scale(&c);
            }
        }
        acc
    };
    for i in 0..n {
        for j in 0..n {
            let lhs = &action[i] * &action[j];
            let rhs = combo(&mut (0..n).map(|k| (k, order.constant(i, j, k).clone())));
            if !eq(&lhs, &rhs) {
                return Err(OrderError::InvalidModule(format!(
                    "action does not respect the product of basis elements {i} and {j}"
                )));
            }
        }
    }
    let one = combo(&mut order.unity().iter().cloned().enumerate());
    if !eq(&one, &IntMatrix::identity(zrank)) {
        return Err(OrderError::InvalidModule("unity does not act as the identity".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::FiniteGroup;

    #[test]
    fn c2_lattices() {
        let r = ZOrder::group_ring(&FiniteGroup::cyclic(2));
        let reg = OrderLattice::regular(&r);
        assert_eq!(reg.zrank(), 2);
        let triv = OrderLattice::character(&r, &[1, 1]).unwrap();
        let sign = OrderLattice::character(&r, &[1, -1]).unwrap();
        assert!(OrderLattice::character(&r, &[-1, 1]).is_err());
        assert_eq!(triv.hom_basis(&sign).unwrap().len(), 0);
        assert_eq!(reg.hom_basis(&reg).unwrap().len(), 2);
        let sum = triv.direct_sum(&sign).unwrap();
        assert_eq!(reg.hom_basis(&sum).unwrap().len(), 2);
    }

    #[test]
    fn sublattice_needs_stability() {
        let r = ZOrder::group_ring(&FiniteGroup::cyclic(2));
        let reg = OrderLattice::regular(&r);
        // span(1 + σ, 1 − σ) is stable; span(1, 2σ) is not.
        assert!(reg.sublattice(&IntMatrix::from_rows(&[vec![1, 1], vec![1, -1]])).is_ok());
        assert!(matches!(
            reg.sublattice(&IntMatrix::from_rows(&[vec![1, 0], vec![0, 2]])),
            Err(OrderError::NotSubmodule)
        ));
    }
}
