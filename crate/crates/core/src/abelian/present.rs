//! Presentations `Z^g / R` brought into invariant-factor form, and subgroups
//! described by lattices.

use num_traits::One;

use super::FgAbGroup;
use crate::linalg::{column_basis, kernel_basis, snf, IntMatrix, Integer};

/// A presented group `Z^g / span(R)` together with the coordinate change to
/// its canonical form.
#[derive(Debug, Clone)]
pub struct Presented {
    pub group: FgAbGroup,
    /// `ngens × g`: sends a presentation vector to canonical coordinates
    /// (not yet reduced).
    pub to_canonical: IntMatrix,
    /// `g × ngens`: column `j` is a presentation vector for canonical
    /// generator `j`.
    pub from_canonical: IntMatrix,
}

impl Presented {
    /// `gens` generators subject to the relations given as the columns of
    /// `rel` (a `gens × m` matrix).
    pub fn from_relation_columns(gens: usize, rel: &IntMatrix) -> Self {
        assert_eq!(rel.rows(), gens, "relation columns have the wrong length");
        let s = snf(rel);
        let r = s.rank();
        let mut keep = Vec::new();
        let mut torsion = Vec::new();
        for (i, d) in s.d.iter().enumerate() {
            if !d.is_one() {
                keep.push(i);
                torsion.push(d.clone());
            }
        }
        keep.extend(r..gens);
        let group = FgAbGroup::new(gens - r, torsion).expect("snf produces a divisibility chain");
        let u_inv = s
            .u
            .to_rational()
            .inverse()
            .and_then(|m| m.to_integer())
            .expect("snf transform is unimodular");
        Self {
            group,
            to_canonical: s.u.select_rows(&keep),
            from_canonical: u_inv.select_columns(&keep),
        }
    }

    /// Canonical (reduced) coordinates of a presentation vector.
    pub fn canonical(&self, v: &[Integer]) -> Vec<Integer> {
        self.group.reduce(&self.to_canonical.mul_vec(v))
    }
}

/// A subgroup `K/R` of a presented group `Z^g/R`, where `K ⊇ R` is a lattice
/// in `Z^g`.
#[derive(Debug, Clone)]
pub struct Subgroup {
    /// `g × s` basis of the lattice `K`.
    pub lattice: IntMatrix,
    /// The subgroup in canonical form, presented on the basis of `K`.
    pub presented: Presented,
    /// `g × ngens`: presentation vectors (in the ambient `Z^g`) of the
    /// canonical generators of the subgroup.
    pub embedding: IntMatrix,
}

impl Subgroup {
    /// The subgroup spanned by a lattice `k` (columns, must contain the
    /// ambient relations `rel`).
    pub fn from_lattice(k: &IntMatrix, rel: &IntMatrix) -> Self {
        let basis = column_basis(&k.hstack(rel));
        let s = basis.cols();
        let coords = if rel.cols() == 0 {
            IntMatrix::zeros(s, 0)
        } else {
            basis
                .to_rational()
                .solve(&rel.to_rational())
                .and_then(|x| x.to_integer())
                .expect("relations lie in the subgroup lattice")
        };
        let presented = Presented::from_relation_columns(s, &coords);
        let embedding = &basis * &presented.from_canonical;
        Self {
            lattice: basis,
            presented,
            embedding,
        }
    }

    /// Kernel of the map `Z^g/src_rel → Z^h/dst_rel` given by `mat`.
    pub fn kernel(mat: &IntMatrix, src_rel: &IntMatrix, dst_rel: &IntMatrix) -> Self {
        let g = mat.cols();
        let k = kernel_basis(&mat.hstack(&-dst_rel));
        let top: Vec<usize> = (0..g).collect();
        Self::from_lattice(&k.select_rows(&top), src_rel)
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.presented.group
    }

    /// Canonical coordinates of an ambient vector lying in `K`; `None` when
    /// it does not.
    pub fn coordinates(&self, v: &[Integer]) -> Option<Vec<Integer>> {
        if self.lattice.cols() == 0 {
            return v.iter().all(num_traits::Zero::is_zero).then(Vec::new);
        }
        let col = IntMatrix::from_columns(v.len(), &[v.to_vec()]).to_rational();
        let x = self.lattice.to_rational().solve(&col)?.to_integer()?;
        Some(self.presented.canonical(&x.column(0)))
    }
}
