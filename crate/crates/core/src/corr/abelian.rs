use super::{Context, CorrError, FibreProduct};
use crate::abelian::{AbHom, FgAbGroup, IsogenyCertificate, NotIsogeny, Subgroup};
use crate::linalg::IntMatrix;

/// Finitely generated abelian groups and their homomorphisms.
#[derive(Debug, Clone, Copy, Default)]
pub struct AbelianContext;

impl AbelianContext {
    /// The subgroup `{(x, y) : f x = h y}` of `X ⊕ Y`, on the concatenated
    /// generators of `X` and `Y`.
    fn fibre_subgroup(f: &AbHom, h: &AbHom) -> Result<Subgroup, CorrError> {
        if f.dst() != h.dst() {
            return Err(CorrError::ObjectMismatch(format!(
                "fibre product over {} and {}",
                f.dst(),
                h.dst()
            )));
        }
        let mat = f.matrix().hstack(&-h.matrix());
        let rel = f.src().relation_columns().block_diag(&h.src().relation_columns());
        Ok(Subgroup::kernel(&mat, &rel, &f.dst().relation_columns()))
    }
}

impl Context for AbelianContext {
    type Object = FgAbGroup;
    type Map = AbHom;

    fn source(&self, f: &AbHom) -> FgAbGroup {
        f.src().clone()
    }

    fn target(&self, f: &AbHom) -> FgAbGroup {
        f.dst().clone()
    }

    fn identity(&self, x: &FgAbGroup) -> AbHom {
        AbHom::identity(x)
    }

    fn compose(&self, g: &AbHom, f: &AbHom) -> Result<AbHom, CorrError> {
        g.after(f).map_err(|e| CorrError::ObjectMismatch(e.to_string()))
    }

    fn maps_equal(&self, a: &AbHom, b: &AbHom) -> bool {
        a == b
    }

    fn certify(&self, f: &AbHom) -> Result<IsogenyCertificate, NotIsogeny> {
        f.certify()
    }

    fn fibre_product(
        &self,
        f: &AbHom,
        h: &AbHom,
    ) -> Result<FibreProduct<FgAbGroup, AbHom>, CorrError> {
        let sub = Self::fibre_subgroup(f, h)?;
        let gx = f.src().ngens();
        let gy = h.src().ngens();
        let top: Vec<usize> = (0..gx).collect();
        let bottom: Vec<usize> = (gx..gx + gy).collect();
        let apex = sub.group().clone();
        let p0 = AbHom::new(apex.clone(), f.src().clone(), sub.embedding.select_rows(&top))
            .map_err(|e| CorrError::Context(e.to_string()))?;
        let p1 = AbHom::new(apex.clone(), h.src().clone(), sub.embedding.select_rows(&bottom))
            .map_err(|e| CorrError::Context(e.to_string()))?;
        Ok(FibreProduct { apex, p0, p1 })
    }

    fn fibre_lift(
        &self,
        f: &AbHom,
        h: &AbHom,
        a: &AbHom,
        b: &AbHom,
    ) -> Result<AbHom, CorrError> {
        if a.src() != b.src() || a.dst() != f.src() || b.dst() != h.src() {
            return Err(CorrError::ObjectMismatch("lift components do not fit".into()));
        }
        let sub = Self::fibre_subgroup(f, h)?;
        let t = a.src();
        let mut cols = Vec::with_capacity(t.ngens());
        for j in 0..t.ngens() {
            let mut z = a.matrix().column(j);
            z.extend(b.matrix().column(j));
            let coords = sub.coordinates(&z).ok_or_else(|| {
                CorrError::Context("components do not agree over the base".into())
            })?;
            cols.push(coords);
        }
        let apex = sub.group().clone();
        let mat = IntMatrix::from_columns(apex.ngens(), &cols);
        AbHom::new(t.clone(), apex, mat).map_err(|e| CorrError::Context(e.to_string()))
    }
}
