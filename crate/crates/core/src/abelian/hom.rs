//! Homomorphisms between finitely generated abelian groups.

use num_integer::Integer as _;
use num_traits::{One, Zero};
use thiserror::Error;

use super::present::{Presented, Subgroup};
use super::{AbelianError, FgAbGroup};
use crate::linalg::{IntMatrix, Integer, Rational};

/// Kernel order, cokernel order and index `#coker / #ker` of an isogeny.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsogenyCertificate {
    pub ker_order: Integer,
    pub coker_order: Integer,
    pub index: Rational,
}

impl IsogenyCertificate {
    pub fn new(ker_order: Integer, coker_order: Integer) -> Self {
        let index = Rational::new(coker_order.clone(), ker_order.clone());
        Self {
            ker_order,
            coker_order,
            index,
        }
    }

    pub fn identity() -> Self {
        Self::new(Integer::one(), Integer::one())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not an isogeny (infinite kernel: {infinite_kernel}, infinite cokernel: {infinite_cokernel})")]
pub struct NotIsogeny {
    pub infinite_kernel: bool,
    pub infinite_cokernel: bool,
}

/// A homomorphism given by the images of the standard generators of `src`,
/// written in the coordinates of `dst`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbHom {
    src: FgAbGroup,
    dst: FgAbGroup,
    mat: IntMatrix,
}

impl AbHom {
    pub fn new(src: FgAbGroup, dst: FgAbGroup, mat: IntMatrix) -> Result<Self, AbelianError> {
        if mat.rows() != dst.ngens() || mat.cols() != src.ngens() {
            return Err(AbelianError::Shape(format!(
                "expected {}x{} matrix, got {}x{}",
                dst.ngens(),
                src.ngens(),
                mat.rows(),
                mat.cols()
            )));
        }
        let dst_torsion = dst.torsion();
        for (j, d) in src.torsion().iter().enumerate() {
            for i in 0..dst.ngens() {
                let image = d * mat.get(i, j);
                let ok = match dst_torsion.get(i) {
                    Some(e) => image.is_multiple_of(e),
                    None => image.is_zero(),
                };
                if !ok {
                    return Err(AbelianError::NotWellDefined(format!(
                        "generator {j} has order {d} but its image does not"
                    )));
                }
            }
        }
        let mut reduced = mat;
        for (i, e) in dst_torsion.iter().enumerate() {
            for j in 0..reduced.cols() {
                let x = reduced.get(i, j).mod_floor(e);
                reduced.set(i, j, x);
            }
        }
        Ok(Self {
            src,
            dst,
            mat: reduced,
        })
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        Self::scalar(g, &Integer::one())
    }

    pub fn zero(src: &FgAbGroup, dst: &FgAbGroup) -> Self {
        Self {
            src: src.clone(),
            dst: dst.clone(),
            mat: IntMatrix::zeros(dst.ngens(), src.ngens()),
        }
    }

    /// Multiplication by `k` on `g`.
    pub fn scalar(g: &FgAbGroup, k: &Integer) -> Self {
        Self::new(g.clone(), g.clone(), IntMatrix::scalar(g.ngens(), k))
            .expect("scalar maps are always well defined")
    }

    pub fn src(&self) -> &FgAbGroup {
        &self.src
    }

    pub fn dst(&self) -> &FgAbGroup {
        &self.dst
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.mat
    }

    pub fn apply(&self, x: &[Integer]) -> Vec<Integer> {
        self.dst.reduce(&self.mat.mul_vec(x))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &AbHom) -> Result<AbHom, AbelianError> {
        if first.dst != self.src {
            return Err(AbelianError::Shape(format!(
                "cannot compose: {} is not {}",
                first.dst, self.src
            )));
        }
        AbHom::new(first.src.clone(), self.dst.clone(), &self.mat * &first.mat)
    }

    /// Kernel as a subgroup of the source, together with its inclusion.
    pub fn kernel(&self) -> (FgAbGroup, AbHom) {
        let k = Subgroup::kernel(
            &self.mat,
            &self.src.relation_columns(),
            &self.dst.relation_columns(),
        );
        let g = k.group().clone();
        let incl = AbHom::new(g.clone(), self.src.clone(), k.embedding.clone())
            .expect("kernel inclusion is well defined");
        (g, incl)
    }

    /// Cokernel `dst / image` with the projection onto it.
    pub fn cokernel(&self) -> (FgAbGroup, AbHom) {
        let rel = self.dst.relation_columns().hstack(&self.mat);
        let p = Presented::from_relation_columns(self.dst.ngens(), &rel);
        let proj = AbHom::new(self.dst.clone(), p.group.clone(), p.to_canonical.clone())
            .expect("projection onto a quotient is well defined");
        (p.group, proj)
    }

    /// Kernel and cokernel orders, when both are finite.
    pub fn certify(&self) -> Result<IsogenyCertificate, NotIsogeny> {
        let (k, _) = self.kernel();
        let (c, _) = self.cokernel();
        if !k.is_finite() || !c.is_finite() {
            return Err(NotIsogeny {
                infinite_kernel: !k.is_finite(),
                infinite_cokernel: !c.is_finite(),
            });
        }
        Ok(IsogenyCertificate::new(k.torsion_order(), c.torsion_order()))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_trivial()
    }
}

/// Certificate for `h`, or the reason it is not an isogeny.
pub fn hom_certify(h: &AbHom) -> Result<IsogenyCertificate, NotIsogeny> {
    h.certify()
}
