use num_traits::{One, Zero};

use super::{FiniteGroup, OrderError};
use crate::linalg::{IntMatrix, Integer};

/// A ring that is free of finite rank over `Z`, given by structure constants
/// on a basis `e_0, …, e_{n-1}`: `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZOrder {
    zrank: usize,
    structure: Vec<Integer>,
    unity: Vec<Integer>,
}

impl ZOrder {
    pub fn new(zrank: usize, structure: Vec<Integer>, unity: Vec<Integer>) -> Result<Self, OrderError> {
        if zrank == 0 {
            return Err(OrderError::InvalidOrder("the zero ring is not an order".into()));
        }
        if structure.len() != zrank * zrank * zrank || unity.len() != zrank {
            return Err(OrderError::InvalidOrder(format!(
                "expected {} structure constants and a unity of length {zrank}",
                zrank * zrank * zrank
            )));
        }
        let order = Self {
            zrank,
            structure,
            unity,
        };
        let n = zrank;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let e = |t: usize| order.basis(t);
                    let lhs = order.mul(&order.mul(&e(i), &e(j)), &e(k));
                    let rhs = order.mul(&e(i), &order.mul(&e(j), &e(k)));
                    if lhs != rhs {
                        return Err(OrderError::InvalidOrder(format!(
                            "associativity fails on basis triple ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        for j in 0..n {
            let e = order.basis(j);
            if order.mul(&order.unity, &e) != e || order.mul(&e, &order.unity) != e {
                return Err(OrderError::InvalidOrder("unity is not a two-sided identity".into()));
            }
        }
        Ok(order)
    }

    /// `Z` itself.
    pub fn integers() -> Self {
        Self::new(1, vec![Integer::one()], vec![Integer::one()]).expect("Z is an order")
    }

    /// `Z[G]` on the basis of group elements.
    pub fn group_ring(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut structure = vec![Integer::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                structure[(a * n + b) * n + g.mul(a, b)] = Integer::one();
            }
        }
        let mut unity = vec![Integer::zero(); n];
        unity[g.identity()] = Integer::one();
        Self::new(n, structure, unity).expect("group rings are orders")
    }

    /// Upper-triangular `n × n` integer matrices on the matrix units `e_ij`
    /// (`i ≤ j`), listed in lexicographic order.
    pub fn upper_triangular_order(n: usize) -> Self {
        let units = Self::upper_triangular_units(n);
        let r = units.len();
        let pos = |i: usize, j: usize| units.iter().position(|&u| u == (i, j)).unwrap();
        let mut structure = vec![Integer::zero(); r * r * r];
        for (a, &(i, j)) in units.iter().enumerate() {
            for (b, &(k, l)) in units.iter().enumerate() {
                if j == k {
                    structure[(a * r + b) * r + pos(i, l)] = Integer::one();
                }
            }
        }
        let mut unity = vec![Integer::zero(); r];
        for i in 0..n {
            unity[pos(i, i)] = Integer::one();
        }
        Self::new(r, structure, unity).expect("triangular matrices form an order")
    }

    /// Positions `(i, j)` of the basis of [`ZOrder::upper_triangular_order`].
    pub fn upper_triangular_units(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
    }

    pub fn zrank(&self) -> usize {
        self.zrank
    }

    pub fn structure(&self) -> &[Integer] {
        &self.structure
    }

    pub fn unity(&self) -> &[Integer] {
        &self.unity
    }

    /// `c[i][j][k]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Integer {
        &self.structure[(i * self.zrank + j) * self.zrank + k]
    }

    pub fn basis(&self, i: usize) -> Vec<Integer> {
        let mut e = vec![Integer::zero(); self.zrank];
        e[i] = Integer::one();
        e
    }

    pub fn mul(&self, x: &[Integer], y: &[Integer]) -> Vec<Integer> {
        let n = self.zrank;
        let mut out = vec![Integer::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y` in the basis.
    pub fn left_mult_matrix(&self, x: &[Integer]) -> IntMatrix {
        let n = self.zrank;
        let mut m = IntMatrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul(x, &self.basis(j));
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Matrix of `y ↦ y·x` in the basis.
    pub fn right_mult_matrix(&self, x: &[Integer]) -> IntMatrix {
        let n = self.zrank;
        let mut m = IntMatrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul(&self.basis(j), x);
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Trace form `T_ij = tr(y ↦ e_i e_j y)` of the regular representation.
    pub fn trace_form(&self) -> IntMatrix {
        let n = self.zrank;
        let mut t = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let l = self.left_mult_matrix(&self.mul(&self.basis(i), &self.basis(j)));
                let tr = (0..n).fold(Integer::zero(), |acc, k| acc + l.get(k, k));
                t.set(i, j, tr);
            }
        }
        t
    }

    /// Whether `Q ⊗ R` is semisimple. In characteristic zero the radical is
    /// the kernel of the trace form, so a nonzero discriminant certifies
    /// semisimplicity and a zero one refutes it.
    pub fn is_semisimple(&self) -> bool {
        !self.trace_form().det().is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn group_ring_examples() {
        let z = ZOrder::group_ring(&FiniteGroup::trivial());
        assert_eq!(z, ZOrder::integers());
        let c2 = ZOrder::group_ring(&FiniteGroup::cyclic(2));
        assert_eq!(c2.zrank(), 2);
        assert_eq!(c2.mul(&c2.basis(1), &c2.basis(1)), c2.basis(0));
        // Constructing Z[S3] validates associativity on all 216 basis triples.
        let (s3, _) = FiniteGroup::symmetric(3);
        let r = ZOrder::group_ring(&s3);
        assert_eq!(r.zrank(), 6);
        let commutative = (0..6).all(|a| (0..6).all(|b| r.mul(&r.basis(a), &r.basis(b)) == r.mul(&r.basis(b), &r.basis(a))));
        assert!(!commutative);
    }

    #[test]
    fn upper_triangular_examples() {
        assert_eq!(ZOrder::upper_triangular_order(1), ZOrder::integers());
        let r = ZOrder::upper_triangular_order(2);
        assert_eq!(r.zrank(), 3);
        let (e11, e12, e22) = (r.basis(0), r.basis(1), r.basis(2));
        assert_eq!(r.mul(&e11, &e12), e12);
        assert_eq!(r.mul(&e12, &e22), e12);
        assert_eq!(r.mul(&e12, &e12), vec![int(0); 3]);
        assert_eq!(r.unity(), &[int(1), int(0), int(1)]);
    }

    #[test]
    fn semisimplicity_certificate() {
        assert!(ZOrder::integers().is_semisimple());
        assert!(ZOrder::group_ring(&FiniteGroup::symmetric(3).0).is_semisimple());
        assert!(!ZOrder::upper_triangular_order(2).is_semisimple());
    }

    #[test]
    fn rejects_non_associative_constants() {
        // e0 e0 = e1, everything else zero apart from the unity: breaks the
        // identity law.
        let mut s = vec![int(0); 8];
        s[1] = int(1);
        assert!(ZOrder::new(2, s, vec![int(1), int(0)]).is_err());
    }
}
