//! Lattice homomorphisms as a correspondence context, and seeded sampling of
//! self-commensurabilities.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{end_lattice, ie_of_isomorphism, OrderError, OrderLattice};
use crate::abelian::{AbHom, FgAbGroup, IsogenyCertificate, NotIsogeny};
use crate::corr::{Commensurability, Context, CorrError, Correspondence, FibreProduct};
use crate::linalg::{kernel_basis, IntMatrix, Integer, Rational};

/// An `R`-linear map of lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    src: OrderLattice,
    dst: OrderLattice,
    mat: IntMatrix,
}

impl LatticeMap {
    pub fn new(src: OrderLattice, dst: OrderLattice, mat: IntMatrix) -> Result<Self, OrderError> {
        if src.order() != dst.order() {
            return Err(OrderError::DifferentOrders);
        }
        if !src.intertwines(&dst, &mat.to_rational()) {
            return Err(OrderError::NotInCommutant);
        }
        Ok(Self { src, dst, mat })
    }

    pub fn identity(l: &OrderLattice) -> Self {
        Self {
            src: l.clone(),
            dst: l.clone(),
            mat: IntMatrix::identity(l.zrank()),
        }
    }

    pub fn src(&self) -> &OrderLattice {
        &self.src
    }

    pub fn dst(&self) -> &OrderLattice {
        &self.dst
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.mat
    }

    fn as_abelian(&self) -> AbHom {
        AbHom::new(
            FgAbGroup::free(self.src.zrank()),
            FgAbGroup::free(self.dst.zrank()),
            self.mat.clone(),
        )
        .expect("maps between free groups are always defined")
    }
}

/// Lattices over one order with `R`-linear maps.
#[derive(Debug, Clone, Copy, Default)]
pub struct LatticeContext;

fn ctx_err(e: OrderError) -> CorrError {
    CorrError::Context(e.to_string())
}

impl LatticeContext {
    /// Basis (columns of a `(x + y) × k` matrix) of `{(u, v) : f u = h v}`.
    fn fibre_basis(f: &LatticeMap, h: &LatticeMap) -> Result<IntMatrix, CorrError> {
        if f.dst != h.dst {
            return Err(CorrError::ObjectMismatch("fibre product over different lattices".into()));
        }
        Ok(kernel_basis(&f.mat.hstack(&-&h.mat)))
    }

    fn fibre_apex(f: &LatticeMap, h: &LatticeMap, basis: &IntMatrix) -> Result<OrderLattice, CorrError> {
        let action = f
            .src
            .action()
            .iter()
            .zip(h.src.action())
            .map(|(a, b)| a.block_diag(b))
            .collect();
        let ambient = OrderLattice::new(f.src.order().clone(), f.src.zrank() + h.src.zrank(), action)
            .map_err(ctx_err)?;
        ambient.sublattice(basis).map_err(ctx_err)
    }
}

impl Context for LatticeContext {
    type Object = OrderLattice;
    type Map = LatticeMap;

    fn source(&self, f: &LatticeMap) -> OrderLattice {
        f.src.clone()
    }

    fn target(&self, f: &LatticeMap) -> OrderLattice {
        f.dst.clone()
    }

    fn identity(&self, x: &OrderLattice) -> LatticeMap {
        LatticeMap::identity(x)
    }

    fn compose(&self, g: &LatticeMap, f: &LatticeMap) -> Result<LatticeMap, CorrError> {
        if f.dst != g.src {
            return Err(CorrError::ObjectMismatch("composing maps that do not meet".into()));
        }
        Ok(LatticeMap {
            src: f.src.clone(),
            dst: g.dst.clone(),
            mat: &g.mat * &f.mat,
        })
    }

    fn maps_equal(&self, a: &LatticeMap, b: &LatticeMap) -> bool {
        a == b
    }

    fn certify(&self, f: &LatticeMap) -> Result<IsogenyCertificate, NotIsogeny> {
        f.as_abelian().certify()
    }

    fn fibre_product(
        &self,
        f: &LatticeMap,
        h: &LatticeMap,
    ) -> Result<FibreProduct<OrderLattice, LatticeMap>, CorrError> {
        let basis = Self::fibre_basis(f, h)?;
        let apex = Self::fibre_apex(f, h, &basis)?;
        let x = f.src.zrank();
        let top: Vec<usize> = (0..x).collect();
        let bottom: Vec<usize> = (x..basis.rows()).collect();
        let p0 = LatticeMap::new(apex.clone(), f.src.clone(), basis.select_rows(&top)).map_err(ctx_err)?;
        let p1 = LatticeMap::new(apex.clone(), h.src.clone(), basis.select_rows(&bottom)).map_err(ctx_err)?;
        Ok(FibreProduct { apex, p0, p1 })
    }

    fn fibre_lift(
        &self,
        f: &LatticeMap,
        h: &LatticeMap,
        a: &LatticeMap,
        b: &LatticeMap,
    ) -> Result<LatticeMap, CorrError> {
        if a.src != b.src || a.dst != f.src || b.dst != h.src {
            return Err(CorrError::ObjectMismatch("lift components do not fit".into()));
        }
        let basis = Self::fibre_basis(f, h)?;
        let apex = Self::fibre_apex(f, h, &basis)?;
        let stacked = a.mat.vstack(&b.mat).to_rational();
        let coords = basis
            .to_rational()
            .solve(&stacked)
            .and_then(|c| c.to_integer())
            .ok_or_else(|| CorrError::Context("components do not agree over the base".into()))?;
        LatticeMap::new(a.src.clone(), apex, coords).map_err(ctx_err)
    }
}

/// `i(e(c))` for a commensurability `c = (W, f, g)` of lattices, through the
/// induced isomorphism `g_Q ∘ f_Q⁻¹`.
pub fn ie_commensurability(c: &Commensurability<OrderLattice, LatticeMap>) -> Result<Rational, OrderError> {
    let f = c.base.left.matrix().to_rational();
    let g = c.base.right.matrix().to_rational();
    let f_inv = f.inverse().ok_or(OrderError::Singular)?;
    ie_of_isomorphism(c.base.left.dst(), c.base.right.dst(), &(&g * &f_inv))
}

/// A sampled `α ∈ E_L` and the commensurability `(L, id, α)`.
#[derive(Debug, Clone)]
pub struct SampledCommensurability {
    pub alpha: IntMatrix,
    pub commensurability: Commensurability<OrderLattice, LatticeMap>,
}

const MAX_ATTEMPTS: usize = 1000;

/// Draws `α = Σ t_i B_i` over a `Z`-basis of `E_L` with `t_i ∈ [-2, 2]`,
/// retrying until `α` is invertible over `Q`. Since `α ∈ E_L` we have
/// `L ∩ α⁻¹L = L`, so the correspondence is `(L, id, α)`.
pub fn sample_self_commensurability(l: &OrderLattice, seed: u64) -> Result<SampledCommensurability, OrderError> {
    let e = end_lattice(l);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let t: Vec<Integer> = (0..e.ambient_dim).map(|_| Integer::from(rng.gen_range(-2i64..=2))).collect();
        let alpha = e.element(&t);
        if alpha.det().is_zero() {
            continue;
        }
        let map = LatticeMap::new(l.clone(), l.clone(), alpha.clone())?;
        let base = Correspondence::new(l.clone(), LatticeMap::identity(l), map);
        let commensurability = Commensurability::new(&LatticeContext, base)
            .map_err(|e| OrderError::InvalidModule(e.to_string()))?;
        return Ok(SampledCommensurability {
            alpha,
            commensurability,
        });
    }
    Err(OrderError::SamplingFailed(MAX_ATTEMPTS))
}
