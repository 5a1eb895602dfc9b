//! Modules over `Z`-orders: group rings `Z[G]` and orders given by structure
//! constants.
//!
//! Lattices carry integer action matrices; their rationalisations share the
//! same matrices. Finite modules carry action matrices modulo the invariant
//! factors of their underlying group.

mod commutant;
mod finite;
mod group;
mod lattice;
mod sample;
mod stabilizer;
mod zorder;

pub use commutant::{
    commensurable, end_lattice, ie_by_covolume, ie_of_isomorphism, ie_pair, ie_pair_with, ie_self,
    phi_candidates, rational_index, rational_intersect, stabilizer_lattice, CommutantLattice,
};
pub use finite::{
    aut_count, aut_enumerate, ia_finite, lemma_p_check, torsion_submodule, FiniteModule, MixedModule,
    DEFAULT_AUT_CAP,
};
pub use group::FiniteGroup;
pub use lattice::OrderLattice;
pub use sample::{
    ie_commensurability, sample_self_commensurability, LatticeContext, LatticeMap, SampledCommensurability,
};
pub use stabilizer::{stabilizer_data, StabilizerDecomposition};
pub use zorder::ZOrder;

use thiserror::Error;

use crate::abelian::AbelianError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("modules are over different orders")]
    DifferentOrders,
    #[error("map does not commute with the action")]
    NotInCommutant,
    #[error("map is singular")]
    Singular,
    #[error("span is not a submodule")]
    NotSubmodule,
    #[error("modules are not commensurable")]
    NotCommensurable,
    #[error("the rational algebra is not semisimple")]
    OrderNotSemisimple,
    #[error("no suitable isomorphism found within the search bound")]
    SearchExhausted,
    #[error("{what} needs {needed} candidates, above the cap {cap}")]
    CapExceeded { what: String, needed: String, cap: usize },
    #[error("sampling failed after {0} attempts")]
    SamplingFailed(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}
