//! Finite rings given by structure constants on the generators of their
//! additive group, ring homomorphisms between them, and unit-group
//! machinery.

mod catalog;
mod units;

pub use catalog::{catalog, radical_ideal_catalog, CatalogEntry, IdealEntry};
pub use units::{
    centre, check_unit_isogeny, jacobson_radical, lemma_j_check, unit_group, unit_quotient_exponent,
    RingTables, UnitIsogenyReport, DEFAULT_RING_CAP,
};

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::abelian::{AbHom, AbelianError, ElementIndexer, FgAbGroup, Presented, Subgroup};
use crate::linalg::{IntMatrix, Integer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteRingError {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{what} needs {needed}, above the cap {cap}")]
    CapExceeded { what: String, needed: String, cap: usize },
    #[error("not a ring homomorphism: {0}")]
    NotHom(String),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
}

/// A finite ring: a finite abelian group with a bilinear, associative
/// product given on generators, `g_i g_j = Σ_k c[i][j][k] g_k`, and a unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    add: FgAbGroup,
    mult: Vec<Integer>,
    unity: Vec<Integer>,
}

impl FiniteRing {
    pub fn new(add: FgAbGroup, mult: Vec<Integer>, unity: Vec<Integer>) -> Result<Self, FiniteRingError> {
        let bad = |m: String| Err(FiniteRingError::InvalidRing(m));
        if !add.is_finite() {
            return bad(format!("additive group {add} is infinite"));
        }
        let n = add.ngens();
        if mult.len() != n * n * n || unity.len() != n {
            return bad(format!("expected {} structure constants and a unity of length {n}", n * n * n));
        }
        let mut ring = Self { add, mult, unity };
        ring.mult = ring.reduced_constants();
        ring.unity = ring.add.reduce(&ring.unity);
        let d = ring.add.torsion().to_vec();
        for i in 0..n {
            for j in 0..n {
                // g_i g_j must be killed by the orders of both factors.
                let prod = ring.gen_product(i, j);
                let g = d[i].gcd(&d[j]);
                let killed: Vec<Integer> = prod.iter().map(|x| x * &g).collect();
                if !ring.add.is_zero_element(&killed) {
                    return bad(format!("product of generators {i} and {j} is not well defined"));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ei, ej, ek) = (ring.basis(i), ring.basis(j), ring.basis(k));
                    if ring.mul(&ring.mul(&ei, &ej), &ek) != ring.mul(&ei, &ring.mul(&ej, &ek)) {
                        return bad(format!("associativity fails on generators ({i}, {j}, {k})"));
                    }
                }
            }
        }
        for i in 0..n {
            let e = ring.basis(i);
            if ring.mul(&ring.unity, &e) != e || ring.mul(&e, &ring.unity) != e {
                return bad("unity is not a two-sided identity".into());
            }
        }
        Ok(ring)
    }

    /// A ring on generators of the given cyclic orders (any order ≥ 1, not
    /// necessarily an invariant-factor chain), brought into canonical form.
    pub fn from_presentation(orders: &[u64], mult: &[Integer], unity: &[Integer]) -> Result<Self, FiniteRingError> {
        let n = orders.len();
        if mult.len() != n * n * n || unity.len() != n {
            return Err(FiniteRingError::InvalidRing("structure constants have the wrong length".into()));
        }
        let rel = IntMatrix::diagonal(n, n, &orders.iter().map(|&d| Integer::from(d)).collect::<Vec<_>>());
        let sub = Subgroup::from_lattice(&IntMatrix::identity(n), &rel);
        let emb = &sub.embedding;
        let m = sub.group().ngens();
        let product = |x: &[Integer], y: &[Integer]| -> Vec<Integer> {
            let mut out = vec![Integer::zero(); n];
            for i in 0..n {
                for j in 0..n {
                    let xy = &x[i] * &y[j];
                    if xy.is_zero() {
                        continue;
                    }
                    for (k, o) in out.iter_mut().enumerate() {
                        *o += &xy * &mult[(i * n + j) * n + k];
                    }
                }
            }
            out
        };
        let mut canon = vec![Integer::zero(); m * m * m];
        for a in 0..m {
            for b in 0..m {
                let p = product(&emb.column(a), &emb.column(b));
                let c = sub.coordinates(&p).expect("the whole group");
                for (k, v) in c.into_iter().enumerate() {
                    canon[(a * m + b) * m + k] = v;
                }
            }
        }
        let u = sub.coordinates(unity).expect("the whole group");
        Self::new(sub.group().clone(), canon, u)
    }

    /// `Z/n`.
    pub fn zmod(n: u64) -> Result<Self, FiniteRingError> {
        if n < 2 {
            return Err(FiniteRingError::InvalidRing("the zero ring is excluded".into()));
        }
        Self::from_presentation(&[n], &[Integer::one()], &[Integer::one()])
    }

    /// `self × other` with the componentwise product.
    pub fn product(&self, other: &Self) -> Result<Self, FiniteRingError> {
        let (n, m) = (self.ngens(), other.ngens());
        let t = n + m;
        let mut orders: Vec<u64> = moduli(&self.add);
        orders.extend(moduli(&other.add));
        let mut mult = vec![Integer::zero(); t * t * t];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult[(i * t + j) * t + k] = self.constant(i, j, k).clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    mult[((n + i) * t + n + j) * t + n + k] = other.constant(i, j, k).clone();
                }
            }
        }
        let mut unity = self.unity.clone();
        unity.extend(other.unity.iter().cloned());
        Self::from_presentation(&orders, &mult, &unity)
    }

    /// `M_n(Z/m)` on the matrix units.
    pub fn matrix_ring_zmod(m: u64, n: usize) -> Result<Self, FiniteRingError> {
        Self::matrix_ring_over(&Self::zmod(m)?, n)
    }

    /// `M_n(F_q)` for prime powers `q ≤ 9` and `n ≤ 3`.
    pub fn matrix_ring(q: u64, n: usize) -> Result<Self, FiniteRingError> {
        if q > 9 || n > 3 || n == 0 {
            return Err(FiniteRingError::CapExceeded {
                what: format!("M_{n}(F_{q})"),
                needed: format!("q = {q}, n = {n}"),
                cap: 9,
            });
        }
        Self::matrix_ring_over(&Self::finite_field(q)?, n)
    }

    /// `F_q` for `q ≤ 9` as `F_p[x]/(f)` with a fixed irreducible `f`.
    pub fn finite_field(q: u64) -> Result<Self, FiniteRingError> {
        // Low-to-high coefficients of a monic irreducible of degree r.
        let (p, modulus): (u64, &[u64]) = match q {
            2 | 3 | 5 | 7 => (q, &[0, 1]),
            4 => (2, &[1, 1, 1]),
            8 => (2, &[1, 1, 0, 1]),
            9 => (3, &[1, 0, 1]),
            _ => return Err(FiniteRingError::NotPrimePower(q)),
        };
        let r = modulus.len() - 1;
        if r == 1 {
            return Self::zmod(p);
        }
        // x^s for s < 2r − 1 reduced modulo f.
        let mut powers: Vec<Vec<u64>> = Vec::new();
        for s in 0..(2 * r - 1) {
            let mut v = vec![0u64; r];
            if s < r {
                v[s] = 1;
            } else {
                // x^s = x · x^{s−1}.
                let prev = &powers[s - 1];
                let top = prev[r - 1];
                for i in (1..r).rev() {
                    v[i] = prev[i - 1];
                }
                v[0] = 0;
                for i in 0..r {
                    v[i] = (v[i] + p * p - top * modulus[i] % p) % p;
                }
            }
            powers.push(v);
        }
        let mut mult = vec![Integer::zero(); r * r * r];
        for i in 0..r {
            for j in 0..r {
                for (k, &c) in powers[i + j].iter().enumerate() {
                    mult[(i * r + j) * r + k] = Integer::from(c);
                }
            }
        }
        let mut unity = vec![Integer::zero(); r];
        unity[0] = Integer::one();
        Self::from_presentation(&vec![p; r], &mult, &unity)
    }

    /// `M_n(base)` with generators `E_ij ⊗ b` for the generators `b` of
    /// `base`, ordered by `(i, j, b)`.
    pub fn matrix_ring_over(base: &Self, n: usize) -> Result<Self, FiniteRingError> {
        let r = base.ngens();
        let t = n * n * r;
        let idx = |i: usize, j: usize, b: usize| (i * n + j) * r + b;
        let mut mult = vec![Integer::zero(); t * t * t];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for a in 0..r {
                        for b in 0..r {
                            for c in 0..r {
                                mult[(idx(i, j, a) * t + idx(j, l, b)) * t + idx(i, l, c)] =
                                    base.constant(a, b, c).clone();
                            }
                        }
                    }
                }
            }
        }
        let mut orders = Vec::with_capacity(t);
        let bm = moduli(&base.add);
        for _ in 0..n * n {
            orders.extend(bm.iter().copied());
        }
        let mut unity = vec![Integer::zero(); t];
        for i in 0..n {
            for b in 0..r {
                unity[idx(i, i, b)] = base.unity[b].clone();
            }
        }
        Self::from_presentation(&orders, &mult, &unity)
    }

    pub fn add_group(&self) -> &FgAbGroup {
        &self.add
    }

    pub fn mult(&self) -> &[Integer] {
        &self.mult
    }

    pub fn unity(&self) -> &[Integer] {
        &self.unity
    }

    pub fn ngens(&self) -> usize {
        self.add.ngens()
    }

    pub fn size(&self) -> Integer {
        self.add.torsion_order()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Integer {
        let n = self.ngens();
        &self.mult[(i * n + j) * n + k]
    }

    pub fn basis(&self, i: usize) -> Vec<Integer> {
        let mut e = vec![Integer::zero(); self.ngens()];
        e[i] = Integer::one();
        self.add.reduce(&e)
    }

    fn gen_product(&self, i: usize, j: usize) -> Vec<Integer> {
        (0..self.ngens()).map(|k| self.constant(i, j, k).clone()).collect()
    }

    fn reduced_constants(&self) -> Vec<Integer> {
        let n = self.ngens();
        let mut out = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                out.extend(self.add.reduce(&self.gen_product(i, j)));
            }
        }
        out
    }

    /// Product of two elements in generator coordinates.
    pub fn mul(&self, x: &[Integer], y: &[Integer]) -> Vec<Integer> {
        let n = self.ngens();
        let mut out = vec![Integer::zero(); n];
        for i in (0..n).filter(|&i| !x[i].is_zero()) {
            for j in (0..n).filter(|&j| !y[j].is_zero()) {
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        self.add.reduce(&out)
    }

    pub fn indexer(&self, cap: usize) -> Result<ElementIndexer, FiniteRingError> {
        ElementIndexer::new(&self.add, cap).map_err(|_| FiniteRingError::CapExceeded {
            what: "ring enumeration".into(),
            needed: format!("{} elements", self.size()),
            cap,
        })
    }

    /// The subring generated by `gens` (and the unity), with its inclusion.
    pub fn subring(&self, gens: &[Vec<Integer>], cap: usize) -> Result<(Self, FiniteRingHom), FiniteRingError> {
        let t = RingTables::new(self, cap)?;
        let mut members: Vec<usize> = gens.iter().map(|g| t.idx.index_of(g)).collect();
        members.push(t.one);
        let closed = t.subring_closure(&members);
        let cols: Vec<Vec<Integer>> = closed.iter().map(|&x| t.idx.element_int(x)).collect();
        self.carve(&cols, |sub_ring, emb| FiniteRingHom::new(sub_ring, self.clone(), emb))
    }

    /// Builds the ring on the additive subgroup spanned by `cols` (assumed
    /// closed under the product and containing 1) and hands it, with the
    /// inclusion matrix, to `finish`.
    fn carve<T>(
        &self,
        cols: &[Vec<Integer>],
        finish: impl FnOnce(Self, IntMatrix) -> Result<T, FiniteRingError>,
    ) -> Result<(Self, T), FiniteRingError> {
        let n = self.ngens();
        let rel = self.add.relation_columns();
        let k = IntMatrix::from_columns(n, cols).hstack(&rel);
        let sub = Subgroup::from_lattice(&k, &rel);
        let m = sub.group().ngens();
        let gens = sub.embedding.columns();
        let mut mult = vec![Integer::zero(); m * m * m];
        for a in 0..m {
            for b in 0..m {
                let c = sub
                    .coordinates(&self.mul(&gens[a], &gens[b]))
                    .ok_or_else(|| FiniteRingError::InvalidRing("span is not closed under products".into()))?;
                for (k, v) in c.into_iter().enumerate() {
                    mult[(a * m + b) * m + k] = v;
                }
            }
        }
        let unity = sub
            .coordinates(&self.unity)
            .ok_or_else(|| FiniteRingError::InvalidRing("span does not contain 1".into()))?;
        let ring = Self::new(sub.group().clone(), mult, unity)?;
        let out = finish(ring.clone(), sub.embedding.clone())?;
        Ok((ring, out))
    }

    /// `E / I` for the two-sided ideal generated by `gens`, with the
    /// projection.
    pub fn quotient(&self, gens: &[Vec<Integer>], cap: usize) -> Result<(Self, FiniteRingHom), FiniteRingError> {
        let t = RingTables::new(self, cap)?;
        let members: Vec<usize> = gens.iter().map(|g| t.idx.index_of(g)).collect();
        let ideal = t.ideal_closure(&members);
        let n = self.ngens();
        let mut rel_cols: Vec<Vec<Integer>> = ideal.iter().map(|&x| t.idx.element_int(x)).collect();
        rel_cols.extend(self.add.relation_columns().columns());
        let rel = IntMatrix::from_columns(n, &rel_cols);
        let pres = Presented::from_relation_columns(n, &rel);
        let m = pres.group.ngens();
        let gens_up = pres.from_canonical.columns();
        let mut mult = vec![Integer::zero(); m * m * m];
        for a in 0..m {
            for b in 0..m {
                let c = pres.canonical(&self.mul(&gens_up[a], &gens_up[b]));
                for (k, v) in c.into_iter().enumerate() {
                    mult[(a * m + b) * m + k] = v;
                }
            }
        }
        let unity = pres.canonical(&self.unity);
        let q = Self::new(pres.group.clone(), mult, unity)?;
        let proj = FiniteRingHom::new(self.clone(), q.clone(), pres.to_canonical.clone())?;
        Ok((q, proj))
    }
}

pub(crate) fn moduli(g: &FgAbGroup) -> Vec<u64> {
    g.torsion().iter().map(|d| d.to_u64().expect("small ring")).collect()
}

/// A unital ring homomorphism given by its additive matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRingHom {
    src: FiniteRing,
    dst: FiniteRing,
    map: AbHom,
}

impl FiniteRingHom {
    pub fn new(src: FiniteRing, dst: FiniteRing, mat: IntMatrix) -> Result<Self, FiniteRingError> {
        let map = AbHom::new(src.add.clone(), dst.add.clone(), mat)
            .map_err(|e| FiniteRingError::NotHom(e.to_string()))?;
        let n = src.ngens();
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (src.basis(i), src.basis(j));
                let lhs = map.apply(&src.mul(&ei, &ej));
                let rhs = dst.mul(&map.apply(&ei), &map.apply(&ej));
                if dst.add.reduce(&lhs) != rhs {
                    return Err(FiniteRingError::NotHom(format!("product of generators {i}, {j}")));
                }
            }
        }
        if dst.add.reduce(&map.apply(&src.unity)) != dst.unity {
            return Err(FiniteRingError::NotHom("unity is not preserved".into()));
        }
        Ok(Self { src, dst, map })
    }

    pub fn src(&self) -> &FiniteRing {
        &self.src
    }

    pub fn dst(&self) -> &FiniteRing {
        &self.dst
    }

    pub fn additive(&self) -> &AbHom {
        &self.map
    }

    pub fn apply(&self, x: &[Integer]) -> Vec<Integer> {
        self.dst.add.reduce(&self.map.apply(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn fields_and_matrix_rings() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FiniteRing::finite_field(q).unwrap();
            assert_eq!(f.size(), int(q as i64));
        }
        assert!(matches!(FiniteRing::finite_field(6), Err(FiniteRingError::NotPrimePower(6))));
        assert_eq!(FiniteRing::matrix_ring(2, 1).unwrap(), FiniteRing::zmod(2).unwrap());
        assert_eq!(FiniteRing::matrix_ring(2, 2).unwrap().size(), int(16));
        assert_eq!(FiniteRing::matrix_ring(3, 2).unwrap().size(), int(81));
        assert!(FiniteRing::matrix_ring(2, 4).is_err());
    }

    #[test]
    fn products_canonicalise() {
        let r = FiniteRing::zmod(2).unwrap().product(&FiniteRing::zmod(3).unwrap()).unwrap();
        assert_eq!(r.add_group(), &FgAbGroup::cyclic(6));
        assert_eq!(r.unity(), &[int(1)]);
    }

    #[test]
    fn rejects_bad_constants() {
        // On Z/2 ⊕ Z/2 with g0 g0 = g1 and unity g0 the identity law fails.
        let add = FgAbGroup::from_cyclic_orders(0, &[2, 2]);
        let mut mult = vec![int(0); 8];
        mult[1] = int(1);
        assert!(FiniteRing::new(add, mult, vec![int(1), int(0)]).is_err());
    }

    #[test]
    fn quotients_and_subrings() {
        let z8 = FiniteRing::zmod(8).unwrap();
        let (q, proj) = z8.quotient(&[vec![int(4)]], DEFAULT_RING_CAP).unwrap();
        assert_eq!(q, FiniteRing::zmod(4).unwrap());
        assert_eq!(proj.apply(&[int(5)]), vec![int(1)]);
        let m = FiniteRing::matrix_ring_zmod(4, 2).unwrap();
        assert_eq!(m.size(), int(256));
        // Scalars inside M_2(Z/4).
        let (s, _) = m.subring(&[], DEFAULT_RING_CAP).unwrap();
        assert_eq!(s, FiniteRing::zmod(4).unwrap());
        let bad = IntMatrix::from_rows(&[vec![2]]);
        assert!(FiniteRingHom::new(FiniteRing::zmod(4).unwrap(), FiniteRing::zmod(4).unwrap(), bad).is_err());
    }
}
