//! A fixed catalogue of small finite rings and ring homomorphisms, used to
//! exercise the unit-map checks.

use super::{FiniteRing, FiniteRingError, FiniteRingHom, DEFAULT_RING_CAP};
use crate::linalg::{IntMatrix, Integer};

/// A named ring homomorphism.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub hom: FiniteRingHom,
}

/// A named ring with generators of a two-sided ideal inside its radical.
#[derive(Debug, Clone)]
pub struct IdealEntry {
    pub name: String,
    pub ring: FiniteRing,
    pub ideal_gens: Vec<Vec<Integer>>,
}

fn v(xs: &[i64]) -> Vec<Integer> {
    xs.iter().map(|&x| Integer::from(x)).collect()
}

fn zmod(n: u64) -> FiniteRing {
    FiniteRing::zmod(n).expect("n ≥ 2")
}

fn entry(name: &str, src: FiniteRing, dst: FiniteRing, rows: &[Vec<i64>]) -> Result<CatalogEntry, FiniteRingError> {
    let mat = if rows.is_empty() {
        IntMatrix::zeros(dst.ngens(), src.ngens())
    } else {
        IntMatrix::from_rows(rows)
    };
    Ok(CatalogEntry {
        name: name.into(),
        hom: FiniteRingHom::new(src, dst, mat)?,
    })
}

/// The matrix of `x ↦ x · 1_F` sending the generator of `Z/n` to the unity.
fn unity_column(dst: &FiniteRing) -> Vec<Vec<i64>> {
    dst.unity()
        .iter()
        .map(|c| vec![i64::try_from(c).expect("small")])
        .collect()
}

/// The diagonal of `M_2` as a subring, the upper triangular subring, and the
/// inclusions into `M_2(base)`.
fn triangular_inclusions(base_n: u64) -> Result<Vec<CatalogEntry>, FiniteRingError> {
    let m = FiniteRing::matrix_ring_zmod(base_n, 2)?;
    // Generators of M_2(Z/n) are E11, E12, E21, E22.
    let e = |i: usize| {
        let mut x = vec![Integer::from(0); 4];
        x[i] = Integer::from(1);
        x
    };
    let mut out = Vec::new();
    for (name, gens) in [
        (format!("UT_2(Z/{base_n}) ⊆ M_2(Z/{base_n})"), vec![e(0), e(1), e(3)]),
        (format!("diagonal (Z/{base_n})² ⊆ M_2(Z/{base_n})"), vec![e(0), e(3)]),
    ] {
        let (_, inc) = m.subring(&gens, DEFAULT_RING_CAP)?;
        out.push(CatalogEntry { name, hom: inc });
    }
    Ok(out)
}

/// Twenty-seven homomorphisms between small finite rings: reductions,
/// products and projections, scalar and subring inclusions, reduction of
/// matrix rings and the Frobenius of `F_4`.
pub fn catalog() -> Result<Vec<CatalogEntry>, FiniteRingError> {
    let mut out = Vec::new();
    for (a, b) in [(8, 2), (8, 4), (4, 2), (9, 3), (27, 9), (25, 5), (16, 4), (49, 7)] {
        out.push(entry(&format!("Z/{a} → Z/{b}"), zmod(a), zmod(b), &[vec![1]])?);
    }
    out.push(entry("id Z/2", zmod(2), zmod(2), &[vec![1]])?);
    out.push(entry("id Z/12", zmod(12), zmod(12), &[vec![1]])?);

    let z2z3 = zmod(2).product(&zmod(3))?;
    out.push(entry("Z/6 → Z/2 × Z/3", zmod(6), z2z3.clone(), &unity_column(&z2z3))?);
    let z2z2 = zmod(2).product(&zmod(2))?;
    out.push(entry("Z/2 → Z/2 × Z/2 diagonal", zmod(2), z2z2.clone(), &unity_column(&z2z2))?);
    let z3z3 = zmod(3).product(&zmod(3))?;
    out.push(entry("Z/3 → Z/3 × Z/3 diagonal", zmod(3), z3z3.clone(), &unity_column(&z3z3))?);

    // Projections: the coordinate of an element in each factor.
    let z4z2 = zmod(4).product(&zmod(2))?;
    for (name, target) in [("Z/4 × Z/2 → Z/4", zmod(4)), ("Z/4 × Z/2 → Z/2", zmod(2))] {
        out.push(projection(name, &z4z2, target)?);
    }
    for (name, target) in [("Z/2 × Z/3 → Z/2", zmod(2)), ("Z/2 × Z/3 → Z/3", zmod(3))] {
        out.push(projection(name, &z2z3, target)?);
    }

    for (name, base, n) in [("F_2 → M_2(F_2)", 2u64, 2usize), ("Z/4 → M_2(Z/4)", 4, 2), ("F_3 → M_2(F_3)", 3, 2)] {
        let m = FiniteRing::matrix_ring_zmod(base, n)?;
        out.push(entry(name, zmod(base), m.clone(), &unity_column(&m))?);
    }
    out.extend(triangular_inclusions(4)?);
    out.extend(triangular_inclusions(2)?);

    let m4 = FiniteRing::matrix_ring_zmod(4, 2)?;
    let m2 = FiniteRing::matrix_ring_zmod(2, 2)?;
    out.push(entry("M_2(Z/4) → M_2(Z/2)", m4.clone(), m2, &identity_rows(4))?);

    let (_, ut_inc) = m4.subring(
        &[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 0, 1])],
        DEFAULT_RING_CAP,
    )?;
    out.push(corner("UT_2(Z/4) → Z/4, (1,1) entry", &ut_inc)?);

    let f4 = FiniteRing::finite_field(4)?;
    out.push(frobenius(&f4)?);
    Ok(out)
}

fn identity_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// The idempotent `e ≠ 0, 1` of a two-factor product whose additive order
/// is `order`, i.e. the unity of one factor.
fn factor_idempotent(r: &FiniteRing, order: u64) -> Result<Vec<Integer>, FiniteRingError> {
    let idx = r.indexer(DEFAULT_RING_CAP)?;
    (0..idx.size())
        .filter(|&i| i != idx.index_of(r.unity()) && idx.order_of(i) == order)
        .map(|i| idx.element_int(i))
        .find(|e| r.mul(e, e) == *e)
        .ok_or_else(|| FiniteRingError::InvalidRing(format!("no idempotent of order {order}")))
}

/// The projection of a product onto the factor whose unity has additive
/// order `target`'s size.
fn projection(name: &str, src: &FiniteRing, target: FiniteRing) -> Result<CatalogEntry, FiniteRingError> {
    let order = u64::try_from(&target.size()).expect("small");
    let e = factor_idempotent(src, order)?;
    find_hom(name, src, target, |h| h.apply(&e) == h.dst().unity())
}

/// `UT_2(Z/4) → Z/4` on the `(1,1)` entry, given the inclusion into `M_2(Z/4)`.
fn corner(name: &str, inc: &FiniteRingHom) -> Result<CatalogEntry, FiniteRingError> {
    let e11 = preimage(inc, &v(&[1, 0, 0, 0]))
        .ok_or_else(|| FiniteRingError::InvalidRing("E11 is not upper triangular".into()))?;
    find_hom(name, inc.src(), zmod(4), |h| h.apply(&e11) == h.dst().unity())
}

fn preimage(inc: &FiniteRingHom, y: &[Integer]) -> Option<Vec<Integer>> {
    let idx = inc.src().indexer(DEFAULT_RING_CAP).ok()?;
    let y = inc.dst().add_group().reduce(y);
    (0..idx.size()).map(|i| idx.element_int(i)).find(|x| inc.apply(x) == y)
}

fn frobenius(f4: &FiniteRing) -> Result<CatalogEntry, FiniteRingError> {
    let idx = f4.indexer(DEFAULT_RING_CAP)?;
    let x = (0..idx.size())
        .map(|i| idx.element_int(i))
        .find(|x| f4.mul(x, x) != *x)
        .expect("F_4 has elements outside F_2");
    let x2 = f4.mul(&x, &x);
    find_hom("Frobenius of F_4", f4, f4.clone(), |h| h.apply(&x) == x2)
}

/// The first ring homomorphism `src → dst` (in the order of candidate
/// additive matrices) that satisfies `accept`.
fn find_hom(
    name: &str,
    src: &FiniteRing,
    dst: FiniteRing,
    accept: impl Fn(&FiniteRingHom) -> bool,
) -> Result<CatalogEntry, FiniteRingError> {
    let (n, m) = (src.ngens(), dst.ngens());
    let idx = dst.indexer(DEFAULT_RING_CAP)?;
    let choices = idx.size();
    let total = choices.checked_pow(n as u32).filter(|&t| t <= DEFAULT_RING_CAP).ok_or_else(|| {
        FiniteRingError::CapExceeded {
            what: "homomorphism search".into(),
            needed: format!("{choices}^{n} candidates"),
            cap: DEFAULT_RING_CAP,
        }
    })?;
    for code in 0..total {
        let mut c = code;
        let cols: Vec<Vec<Integer>> = (0..n)
            .map(|_| {
                let col = idx.element_int(c % choices);
                c /= choices;
                col
            })
            .collect();
        let mat = IntMatrix::from_columns(m, &cols);
        if let Ok(hom) = FiniteRingHom::new(src.clone(), dst.clone(), mat) {
            if accept(&hom) {
                return Ok(CatalogEntry { name: name.into(), hom });
            }
        }
    }
    Err(FiniteRingError::NotHom(format!("no homomorphism found for {name}")))
}

/// Ideals contained in the Jacobson radical of their ring.
pub fn radical_ideal_catalog() -> Result<Vec<IdealEntry>, FiniteRingError> {
    let m4 = FiniteRing::matrix_ring_zmod(4, 2)?;
    let (ut2, _) = FiniteRing::matrix_ring_zmod(2, 2)?.subring(
        &[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 0, 1])],
        DEFAULT_RING_CAP,
    )?;
    // The strictly upper triangular part: the element of UT_2(F_2) mapping to E12.
    let strict = ut2_strict(&ut2)?;
    let z4z2 = zmod(4).product(&zmod(2))?;
    let two_in_z4 = element_with_components(&z4z2, 4, 2, 0)?;
    Ok(vec![
        IdealEntry { name: "(2) ⊆ Z/8".into(), ring: zmod(8), ideal_gens: vec![v(&[2])] },
        IdealEntry { name: "(4) ⊆ Z/8".into(), ring: zmod(8), ideal_gens: vec![v(&[4])] },
        IdealEntry { name: "(3) ⊆ Z/9".into(), ring: zmod(9), ideal_gens: vec![v(&[3])] },
        IdealEntry { name: "(0) ⊆ F_4".into(), ring: FiniteRing::finite_field(4)?, ideal_gens: vec![] },
        IdealEntry { name: "2·M_2(Z/4)".into(), ring: m4, ideal_gens: vec![v(&[2, 0, 0, 0])] },
        IdealEntry { name: "strict upper part of UT_2(F_2)".into(), ring: ut2, ideal_gens: vec![strict] },
        IdealEntry { name: "(2, 0) ⊆ Z/4 × Z/2".into(), ring: z4z2, ideal_gens: vec![two_in_z4] },
    ])
}

/// A nonzero square-zero element of `UT_2(F_2)`: the unique nonzero `x` with
/// `x² = 0`.
fn ut2_strict(ut2: &FiniteRing) -> Result<Vec<Integer>, FiniteRingError> {
    let idx = ut2.indexer(DEFAULT_RING_CAP)?;
    let zero = vec![Integer::from(0); ut2.ngens()];
    (1..idx.size())
        .map(|i| idx.element_int(i))
        .find(|x| ut2.mul(x, x) == zero)
        .ok_or_else(|| FiniteRingError::InvalidRing("no square-zero element".into()))
}

/// `x·e + y·(1 − e)` in `Z/a × Z/b`, where `e` is the unity of the first
/// factor (of additive order `a`).
fn element_with_components(r: &FiniteRing, a: u64, x: i64, y: i64) -> Result<Vec<Integer>, FiniteRingError> {
    let e = factor_idempotent(r, a)?;
    let f: Vec<Integer> = r.unity().iter().zip(&e).map(|(u, e)| u - e).collect();
    let combo: Vec<Integer> = e.iter().zip(&f).map(|(e, f)| e * x + f * y).collect();
    Ok(r.add_group().reduce(&combo))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_is_large_enough() {
        let c = catalog().unwrap();
        assert!(c.len() >= 20, "{}", c.len());
        let names: std::collections::HashSet<_> = c.iter().map(|e| e.name.clone()).collect();
        assert_eq!(names.len(), c.len());
        assert_eq!(radical_ideal_catalog().unwrap().len(), 7);
    }
}
