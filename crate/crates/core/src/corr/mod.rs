//! Correspondences, commensurabilities and their calculus.
//!
//! A correspondence `X ⇌ Y` is a roof `X ←f– W –g→ Y`. When both legs are
//! isogenies it is a commensurability with index `i(g) / i(f)`. Composition
//! goes through fibre products, which every concrete category supplies by
//! implementing [`Context`].

mod abelian;

pub use abelian::AbelianContext;

use std::fmt::Debug;

use thiserror::Error;

use crate::abelian::{IsogenyCertificate, NotIsogeny};
use crate::linalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrError {
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error(transparent)]
    NotIsogeny(#[from] NotIsogeny),
    #[error("{0}")]
    Context(String),
}

/// Apex and projections of a fibre product `X ×_M Y`.
#[derive(Debug, Clone)]
pub struct FibreProduct<O, M> {
    pub apex: O,
    pub p0: M,
    pub p1: M,
}

/// A category in which correspondences can be composed.
pub trait Context {
    type Object: Clone + PartialEq + Debug;
    type Map: Clone + Debug;

    fn source(&self, f: &Self::Map) -> Self::Object;
    fn target(&self, f: &Self::Map) -> Self::Object;
    fn identity(&self, x: &Self::Object) -> Self::Map;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Map, f: &Self::Map) -> Result<Self::Map, CorrError>;
    fn maps_equal(&self, a: &Self::Map, b: &Self::Map) -> bool;
    fn certify(&self, f: &Self::Map) -> Result<IsogenyCertificate, NotIsogeny>;
    /// Fibre product of `f: X → M` and `h: Y → M`.
    fn fibre_product(
        &self,
        f: &Self::Map,
        h: &Self::Map,
    ) -> Result<FibreProduct<Self::Object, Self::Map>, CorrError>;
    /// The map `T → X ×_M Y` with components `a: T → X` and `b: T → Y`.
    fn fibre_lift(
        &self,
        f: &Self::Map,
        h: &Self::Map,
        a: &Self::Map,
        b: &Self::Map,
    ) -> Result<Self::Map, CorrError>;
}

#[derive(Debug, Clone)]
pub struct Correspondence<O, M> {
    pub apex: O,
    pub left: M,
    pub right: M,
}

/// A witness `X ←p– W –q→ Y` between the apexes of two correspondences.
#[derive(Debug, Clone)]
pub struct EquivalenceWitness<O, M> {
    pub apex: O,
    pub p: M,
    pub q: M,
}

/// A correspondence whose legs are certified isogenies.
#[derive(Debug, Clone)]
pub struct Commensurability<O, M> {
    pub base: Correspondence<O, M>,
    pub left_cert: IsogenyCertificate,
    pub right_cert: IsogenyCertificate,
}

impl<O: Clone, M: Clone> Correspondence<O, M> {
    pub fn new(apex: O, left: M, right: M) -> Self {
        Self { apex, left, right }
    }

    /// `(W, g, f)` for `(W, f, g)`.
    pub fn inverse(&self) -> Self {
        Self {
            apex: self.apex.clone(),
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    pub fn identity<C: Context<Object = O, Map = M>>(ctx: &C, x: &O) -> Self {
        Self::new(x.clone(), ctx.identity(x), ctx.identity(x))
    }

    /// Domain and codomain objects `(X, Y)`.
    pub fn endpoints<C: Context<Object = O, Map = M>>(&self, ctx: &C) -> (O, O) {
        (ctx.target(&self.left), ctx.target(&self.right))
    }
}

impl<O: Clone, M: Clone> Commensurability<O, M> {
    pub fn new<C: Context<Object = O, Map = M>>(
        ctx: &C,
        base: Correspondence<O, M>,
    ) -> Result<Self, CorrError> {
        let left_cert = ctx.certify(&base.left)?;
        let right_cert = ctx.certify(&base.right)?;
        Ok(Self {
            base,
            left_cert,
            right_cert,
        })
    }

    /// `c_f = (L, id, f)`.
    pub fn from_isogeny<C: Context<Object = O, Map = M>>(ctx: &C, f: &M) -> Result<Self, CorrError> {
        let l = ctx.source(f);
        Self::new(ctx, Correspondence::new(l.clone(), ctx.identity(&l), f.clone()))
    }

    /// `i(g) / i(f)`.
    pub fn index(&self) -> Rational {
        &self.right_cert.index / &self.left_cert.index
    }

    pub fn inverse(&self) -> Self {
        Self {
            base: self.base.inverse(),
            left_cert: self.right_cert.clone(),
            right_cert: self.left_cert.clone(),
        }
    }
}

/// `d ∘ c` for `c: L ⇌ M` and `d: M ⇌ N`: the roof over `X ×_M Y`.
pub fn compose<C: Context>(
    ctx: &C,
    c: &Correspondence<C::Object, C::Map>,
    d: &Correspondence<C::Object, C::Map>,
) -> Result<Correspondence<C::Object, C::Map>, CorrError> {
    let m1 = ctx.target(&c.right);
    let m2 = ctx.target(&d.left);
    if m1 != m2 {
        return Err(CorrError::ObjectMismatch(format!("{m1:?} vs {m2:?}")));
    }
    let fp = ctx.fibre_product(&c.right, &d.left)?;
    Ok(Correspondence {
        left: ctx.compose(&c.left, &fp.p0)?,
        right: ctx.compose(&d.right, &fp.p1)?,
        apex: fp.apex,
    })
}

/// Composition of commensurabilities; the result is again one.
pub fn compose_commensurabilities<C: Context>(
    ctx: &C,
    c: &Commensurability<C::Object, C::Map>,
    d: &Commensurability<C::Object, C::Map>,
) -> Result<Commensurability<C::Object, C::Map>, CorrError> {
    Commensurability::new(ctx, compose(ctx, &c.base, &d.base)?)
}

/// Checks `f p = h q` and `g p = j q` for `c = (X, f, g)`, `d = (Y, h, j)` and
/// a witness `(W, p, q)` whose legs are isogenies.
pub fn verify_equivalence<C: Context>(
    ctx: &C,
    c: &Correspondence<C::Object, C::Map>,
    d: &Correspondence<C::Object, C::Map>,
    w: &EquivalenceWitness<C::Object, C::Map>,
) -> Result<bool, CorrError> {
    let (cl, cr) = c.endpoints(ctx);
    let (dl, dr) = d.endpoints(ctx);
    if cl != dl || cr != dr {
        return Err(CorrError::EndpointMismatch(format!(
            "{cl:?} ⇌ {cr:?} vs {dl:?} ⇌ {dr:?}"
        )));
    }
    if ctx.source(&w.p) != w.apex
        || ctx.source(&w.q) != w.apex
        || ctx.target(&w.p) != c.apex
        || ctx.target(&w.q) != d.apex
    {
        return Ok(false);
    }
    if ctx.certify(&w.p).is_err() || ctx.certify(&w.q).is_err() {
        return Ok(false);
    }
    let left_ok = ctx.maps_equal(&ctx.compose(&c.left, &w.p)?, &ctx.compose(&d.left, &w.q)?);
    let right_ok = ctx.maps_equal(&ctx.compose(&c.right, &w.p)?, &ctx.compose(&d.right, &w.q)?);
    Ok(left_ok && right_ok)
}

/// For `c = (X, f, g): L ⇌ M`, returns `c⁻¹ ∘ c` and the witness
/// `(X, diagonal, f)` exhibiting its equivalence with `(L, id, id)`.
#[allow(clippy::type_complexity)]
pub fn inverse_composite_witness<C: Context>(
    ctx: &C,
    c: &Correspondence<C::Object, C::Map>,
) -> Result<
    (
        Correspondence<C::Object, C::Map>,
        EquivalenceWitness<C::Object, C::Map>,
    ),
    CorrError,
> {
    let composite = compose(ctx, c, &c.inverse())?;
    let id_x = ctx.identity(&c.apex);
    let diagonal = ctx.fibre_lift(&c.right, &c.right, &id_x, &id_x)?;
    let witness = EquivalenceWitness {
        apex: c.apex.clone(),
        p: diagonal,
        q: c.left.clone(),
    };
    Ok((composite, witness))
}

#[cfg(test)]
mod tests;
