//! Endomorphism lattices inside the rational commutant and the
//! endomorphism-level index.
//!
//! For a lattice `L` with `V = Q ⊗ L` and a full sublattice `U ⊂ V`, write
//! `E_U = {φ ∈ End_A V : φU ⊆ U}`. All `E_U` live in the same rational space
//! `End_A V`, which is given fixed coordinates through a `Z`-basis of
//! `E_L = End_R L`; in these coordinates `E_L` is the standard lattice and
//! every index below is a ratio of covolumes of full-rank lattices.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{OrderError, OrderLattice};
use crate::linalg::{lattice_index, lattice_intersect, snf, IntMatrix, Integer, RatMatrix, Rational};

/// `E_L` together with a basis of the rational commutant `End_A V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantLattice {
    pub ambient_dim: usize,
    /// Integer matrices forming a `Q`-basis of `End_A V`.
    pub qbasis: Vec<IntMatrix>,
    /// Columns: a `Z`-basis of `E_L` in `qbasis` coordinates.
    pub coords: IntMatrix,
}

impl CommutantLattice {
    /// The endomorphism `Σ t_i qbasis_i`.
    pub fn element(&self, t: &[Integer]) -> IntMatrix {
        let n = self.qbasis.first().map_or(0, IntMatrix::rows);
        t.iter()
            .zip(&self.qbasis)
            .fold(IntMatrix::zeros(n, n), |acc, (c, b)| &acc + &b.scale(c))
    }
}

/// `E_L = End_R L`. The `qbasis` is a saturated basis of the integral
/// solutions of the commuting equations, so `E_L` is the standard lattice in
/// these coordinates.
pub fn end_lattice(l: &OrderLattice) -> CommutantLattice {
    let qbasis = l.hom_basis(l).expect("a lattice shares its own order");
    let d = qbasis.len();
    CommutantLattice {
        ambient_dim: d,
        qbasis,
        coords: IntMatrix::identity(d),
    }
}

/// `E_U` in the coordinates of `e.qbasis`, for `U` the span of the columns of
/// the invertible rational matrix `p`.
///
/// `φ = Σ t_i B_i` preserves `U` iff `p⁻¹ φ p` is integral. With the columns
/// `vec(p⁻¹ B_i p)` scaled to an integer matrix `N` by a common denominator
/// `D`, the condition is `N t ∈ D·Z^{n²}`; a Smith form `u N v = diag(s)`
/// turns it into `s_i t'_i ∈ D Z` with `t = v t'`.
pub fn stabilizer_lattice(e: &CommutantLattice, p: &RatMatrix) -> Result<RatMatrix, OrderError> {
    let p_inv = p.inverse().ok_or(OrderError::Singular)?;
    let d = e.ambient_dim;
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(d);
    for b in &e.qbasis {
        let conj = &(&p_inv * &b.to_rational()) * p;
        cols.push(conj.entries().to_vec());
    }
    let n2 = p.rows() * p.rows();
    let mut data = Vec::with_capacity(n2 * d);
    for r in 0..n2 {
        for c in &cols {
            data.push(c[r].clone());
        }
    }
    let n = RatMatrix::new(n2, d, data)?;
    let denom = n.common_denominator();
    let s = snf(&n.scaled_to_int(&denom));
    debug_assert_eq!(s.rank(), d, "conjugation is injective on the commutant");
    let mut scaled = s.v.to_rational();
    for (j, sj) in s.d.iter().enumerate() {
        let factor = Rational::new(denom.clone(), sj.clone());
        for i in 0..d {
            let x = scaled.get(i, j) * &factor;
            scaled.set(i, j, x);
        }
    }
    Ok(scaled)
}

/// `(sup : sub)` for full-rank rational lattices, clearing denominators with
/// one common scale.
pub fn rational_index(sup: &RatMatrix, sub: &RatMatrix) -> Result<Rational, OrderError> {
    let scale = sup.common_denominator().lcm(&sub.common_denominator());
    Ok(lattice_index(&sup.scaled_to_int(&scale), &sub.scaled_to_int(&scale))?)
}

pub fn rational_intersect(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let scale = a.common_denominator().lcm(&b.common_denominator());
    let c = lattice_intersect(&a.scaled_to_int(&scale), &b.scaled_to_int(&scale));
    c.to_rational().scale(&Rational::new(Integer::one(), scale))
}

/// `(E_U : E_U ∩ E_L) / (E_L : E_L ∩ E_U)`.
fn index_ratio(e_l: &RatMatrix, e_u: &RatMatrix) -> Result<Rational, OrderError> {
    let meet = rational_intersect(e_l, e_u);
    Ok(rational_index(e_u, &meet)? / rational_index(e_l, &meet)?)
}

fn check_square_invertible(l: &OrderLattice, alpha: &RatMatrix) -> Result<(), OrderError> {
    if alpha.rows() != l.zrank() || alpha.cols() != l.zrank() {
        return Err(OrderError::InvalidModule(format!(
            "expected a {0}×{0} matrix",
            l.zrank()
        )));
    }
    if !l.intertwines(l, alpha) {
        return Err(OrderError::NotInCommutant);
    }
    if alpha.det().is_zero() {
        return Err(OrderError::Singular);
    }
    Ok(())
}

/// `i(e(c))` for the self-commensurability `c = (L ∩ α⁻¹L, incl, α)`:
/// `(E_L : E_{αL} ∩ E_L) / (E_L : E_L ∩ E_{α⁻¹L})`.
pub fn ie_self(l: &OrderLattice, alpha: &RatMatrix) -> Result<Rational, OrderError> {
    check_square_invertible(l, alpha)?;
    let e = end_lattice(l);
    let e_l = e.coords.to_rational();
    let e_alpha = stabilizer_lattice(&e, alpha)?;
    let e_alpha_inv = stabilizer_lattice(&e, &alpha.inverse().ok_or(OrderError::Singular)?)?;
    let num = rational_index(&e_l, &rational_intersect(&e_alpha, &e_l))?;
    let den = rational_index(&e_l, &rational_intersect(&e_l, &e_alpha_inv))?;
    Ok(num / den)
}

/// `i(e(c))` for any commensurability `c: L ⇌ M` inducing the `A`-isomorphism
/// `φ: Q⊗L → Q⊗M`: with `M' = φ⁻¹M`, this is
/// `(E_{M'} : E_L ∩ E_{M'}) / (E_L : E_L ∩ E_{M'})`.
pub fn ie_of_isomorphism(l: &OrderLattice, m: &OrderLattice, phi: &RatMatrix) -> Result<Rational, OrderError> {
    if l.order() != m.order() {
        return Err(OrderError::DifferentOrders);
    }
    if !l.intertwines(m, phi) {
        return Err(OrderError::NotInCommutant);
    }
    let phi_inv = phi.inverse().ok_or(OrderError::Singular)?;
    let e = end_lattice(l);
    let e_m = stabilizer_lattice(&e, &phi_inv)?;
    index_ratio(&e.coords.to_rational(), &e_m)
}

/// Isomorphism test for `Q⊗L` and `Q⊗M`, valid when `A` is semisimple: with
/// `V ≅ ⊕ S_i^{a_i}`, `W ≅ ⊕ S_i^{b_i}` and `d_i = dim End S_i`, the
/// quantity `dim End V + dim End W − 2 dim Hom(V, W) = Σ d_i (a_i − b_i)²`
/// vanishes exactly when the multiplicities agree.
pub fn commensurable(l: &OrderLattice, m: &OrderLattice) -> Result<bool, OrderError> {
    if l.order() != m.order() {
        return Err(OrderError::DifferentOrders);
    }
    if !l.order().is_semisimple() {
        return Err(OrderError::OrderNotSemisimple);
    }
    if l.zrank() != m.zrank() {
        return Ok(false);
    }
    let hom = l.hom_basis(m)?.len();
    let end_l = l.hom_basis(l)?.len();
    let end_m = m.hom_basis(m)?.len();
    Ok(hom == end_l && hom == end_m)
}

/// Largest coefficient height searched for isomorphisms.
const MAX_HEIGHT: i64 = 3;

/// The first `count` invertible `A`-linear maps `Q⊗L → Q⊗M` of the form
/// `Σ c_i H_i` over the integral `Hom` basis, in order of increasing height
/// `max |c_i|` and lexicographically within a height, skipping maps
/// proportional to one already chosen.
pub fn phi_candidates(l: &OrderLattice, m: &OrderLattice, count: usize) -> Result<Vec<IntMatrix>, OrderError> {
    let basis = l.hom_basis(m)?;
    let mut out: Vec<IntMatrix> = Vec::new();
    if l.zrank() != m.zrank() || basis.is_empty() || count == 0 {
        return Ok(out);
    }
    let k = basis.len();
    for h in 1..=MAX_HEIGHT {
        let width = (2 * h + 1) as usize;
        for idx in 0..width.pow(k as u32) {
            // Digits of idx in base 2h+1, most significant first.
            let mut rest = idx;
            let mut coeffs = vec![0i64; k];
            for c in coeffs.iter_mut().rev() {
                *c = (rest % width) as i64 - h;
                rest /= width;
            }
            if coeffs.iter().all(|c| c.abs() < h) {
                continue;
            }
            let phi = coeffs
                .iter()
                .zip(&basis)
                .fold(IntMatrix::zeros(m.zrank(), l.zrank()), |acc, (&c, b)| {
                    &acc + &b.scale(&Integer::from(c))
                });
            if !phi.det().is_zero() && !out.iter().any(|prev| proportional(prev, &phi)) {
                out.push(phi);
                if out.len() == count {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

fn proportional(a: &IntMatrix, b: &IntMatrix) -> bool {
    let stacked = IntMatrix::from_columns(a.entries().len(), &[a.flatten(), b.flatten()]);
    stacked.to_rational().rank() < 2
}

/// `ie(L, M)` computed with the `choice`-th deterministic isomorphism.
pub fn ie_pair_with(l: &OrderLattice, m: &OrderLattice, choice: usize) -> Result<Rational, OrderError> {
    if !commensurable(l, m)? {
        return Err(OrderError::NotCommensurable);
    }
    let phis = phi_candidates(l, m, choice + 1)?;
    let phi = phis.get(choice).ok_or(OrderError::SearchExhausted)?;
    ie_of_isomorphism(l, m, &phi.to_rational())
}

/// `ie(L, M)` for commensurable lattices over a semisimple order.
pub fn ie_pair(l: &OrderLattice, m: &OrderLattice) -> Result<Rational, OrderError> {
    ie_pair_with(l, m, 0)
}

/// Covolume cross-check: the index ratio in [`ie_of_isomorphism`] collapses
/// to `covol(E_L) / covol(E_{M'})`, i.e. `|det E_{M'}|⁻¹` in the fixed
/// coordinates.
pub fn ie_by_covolume(l: &OrderLattice, phi: &RatMatrix) -> Result<Rational, OrderError> {
    let e = end_lattice(l);
    let e_m = stabilizer_lattice(&e, &phi.inverse().ok_or(OrderError::Singular)?)?;
    Ok(e_m.det().abs().recip())
}

#[cfg(test)]
mod tests;
