//! Exact indices of isogenies and commensurabilities.
//!
//! * [`linalg`]: arbitrary-precision matrices, Smith and Hermite normal forms.
//! * [`abelian`]: finitely generated abelian groups, homomorphisms and their
//!   isogeny index `#coker / #ker`.
//! * [`corr`]: correspondences `(W, f, g)`, fibre-product composition,
//!   inverses and commensurability indices.
//! * [`order`]: lattices and finite modules over `Z`-orders, endomorphism
//!   lattices, `ie` and `ia`.
//! * [`finring`]: finite rings, unit groups, Jacobson radicals.
//! * [`perm`]: permutation groups (Schreier–Sims) for stabilizer orders.
//! * [`oracle`]: brute-force enumerations kept independent of the fast paths.

pub mod abelian;
pub mod corr;
pub mod finring;
pub mod linalg;
pub mod oracle;
pub mod order;
pub mod perm;
