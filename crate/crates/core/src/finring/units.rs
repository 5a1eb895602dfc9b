//! Unit groups, the Jacobson radical, centres and unit-quotient exponents of
//! finite rings, all by exhaustive enumeration.

use std::collections::HashSet;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive};

use super::{moduli, FiniteRing, FiniteRingError, FiniteRingHom};
use crate::abelian::{ElementIndexer, Subgroup};
use crate::linalg::{IntMatrix, Integer, Rational};

/// Default bound on the number of ring elements enumerated.
pub const DEFAULT_RING_CAP: usize = 65536;

/// Rings up to this size get a full multiplication table.
const TABLE_LIMIT: usize = 1024;

/// Element-level arithmetic for a finite ring.
pub struct RingTables {
    pub idx: ElementIndexer,
    pub one: usize,
    ngens: usize,
    consts: Vec<u64>,
    table: Option<Vec<u32>>,
}

impl RingTables {
    pub fn new(ring: &FiniteRing, cap: usize) -> Result<Self, FiniteRingError> {
        let idx = ring.indexer(cap)?;
        let d = moduli(ring.add_group());
        let n = ring.ngens();
        let consts = (0..n * n * n)
            .map(|t| {
                let k = t % n;
                ring.mult()[t].mod_floor(&Integer::from(d[k])).to_u64().unwrap()
            })
            .collect();
        let one = idx.index_of(ring.unity());
        let mut t = Self {
            idx,
            one,
            ngens: n,
            consts,
            table: None,
        };
        let size = t.idx.size();
        if size <= TABLE_LIMIT {
            let mut table = vec![0u32; size * size];
            for x in 0..size {
                for y in 0..size {
                    table[x * size + y] = t.mul_direct(x, y) as u32;
                }
            }
            t.table = Some(table);
        }
        Ok(t)
    }

    pub fn size(&self) -> usize {
        self.idx.size()
    }

    fn mul_direct(&self, x: usize, y: usize) -> usize {
        let n = self.ngens;
        let (a, b) = (self.idx.element(x), self.idx.element(y));
        let d = self.idx.moduli();
        let mut out = vec![0u64; n];
        for i in (0..n).filter(|&i| a[i] != 0) {
            for j in (0..n).filter(|&j| b[j] != 0) {
                let ab = a[i] * b[j];
                for k in 0..n {
                    let c = self.consts[(i * n + j) * n + k];
                    if c != 0 {
                        out[k] = (out[k] + ab % d[k] * c) % d[k];
                    }
                }
            }
        }
        self.idx.index(&out)
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        match &self.table {
            Some(t) => t[x * self.size() + y] as usize,
            None => self.mul_direct(x, y),
        }
    }

    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.idx.add(x, self.idx.neg(y))
    }

    /// Additive generators `g_0, …`.
    fn generators(&self) -> Vec<usize> {
        (0..self.ngens)
            .map(|i| {
                let mut e = vec![0u64; self.ngens];
                e[i] = 1;
                self.idx.index(&e)
            })
            .collect()
    }

    /// A generating set of the additive span of everything reachable from
    /// `seeds` by the products `extra(g)` of current generators.
    fn saturate(&self, seeds: &[usize], extra: impl Fn(&[usize]) -> Vec<usize>) -> Vec<usize> {
        let mut gens = seeds.to_vec();
        let mut span = self.idx.span(&gens);
        loop {
            let mut added = false;
            for p in extra(&gens) {
                if !span[p] {
                    gens.push(p);
                    span = self.idx.span(&gens);
                    added = true;
                }
            }
            if !added {
                return gens;
            }
        }
    }

    /// Additive generators of the subring generated by `seeds`.
    pub fn subring_closure(&self, seeds: &[usize]) -> Vec<usize> {
        self.saturate(seeds, |gens| {
            gens.iter().flat_map(|&a| gens.iter().map(move |&b| (a, b))).map(|(a, b)| self.mul(a, b)).collect()
        })
    }

    /// Additive generators of the two-sided ideal generated by `seeds`.
    pub fn ideal_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let ring_gens = self.generators();
        self.saturate(seeds, |gens| {
            let mut out = Vec::new();
            for &g in gens {
                for &r in &ring_gens {
                    out.push(self.mul(r, g));
                    out.push(self.mul(g, r));
                }
            }
            out
        })
    }

    /// Pairs `(u, u⁻¹)` of two-sided units, in element order.
    pub fn units(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        (0..n)
            .filter_map(|x| {
                (0..n)
                    .find(|&y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
                    .map(|y| (x, y))
            })
            .collect()
    }

    pub fn is_unit_set(&self) -> Vec<bool> {
        let mut set = vec![false; self.size()];
        for (u, _) in self.units() {
            set[u] = true;
        }
        set
    }
}

/// All two-sided units.
pub fn unit_group(e: &FiniteRing, cap: usize) -> Result<Vec<Vec<Integer>>, FiniteRingError> {
    let t = RingTables::new(e, cap)?;
    Ok(t.units().into_iter().map(|(u, _)| t.idx.element_int(u)).collect())
}

/// Facts about the unit map `E^× → F^×` induced by a ring homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIsogenyReport {
    /// `#coker / #ker` of the additive map.
    pub ring_index: Rational,
    pub ring_surjective: bool,
    pub src_units: Integer,
    pub dst_units: Integer,
    pub unit_kernel: Integer,
    pub unit_image_index: Integer,
    /// Units land in units, and `#ker · #image = #E^×`.
    pub unit_map_is_isogeny: bool,
    /// A surjective ring map gives a surjective unit map.
    pub surjectivity_preserved: bool,
}

impl UnitIsogenyReport {
    pub fn passes(&self) -> bool {
        self.unit_map_is_isogeny && self.surjectivity_preserved
    }

    /// `i(E^× → F^×) = (F^× : image) / #ker`.
    pub fn unit_index(&self) -> Rational {
        Rational::new(self.unit_image_index.clone(), self.unit_kernel.clone())
    }
}

pub fn check_unit_isogeny(h: &FiniteRingHom, cap: usize) -> Result<UnitIsogenyReport, FiniteRingError> {
    let cert = h
        .additive()
        .certify()
        .expect("homomorphisms of finite groups are isogenies");
    let ring_surjective = h.additive().is_surjective();
    let (ts, td) = (RingTables::new(h.src(), cap)?, RingTables::new(h.dst(), cap)?);
    let src_units = ts.units();
    let dst_is_unit = td.is_unit_set();
    let dst_count = dst_is_unit.iter().filter(|&&b| b).count();
    let mut lands_in_units = true;
    let mut kernel = 0usize;
    let mut image = HashSet::new();
    for &(u, _) in &src_units {
        let v = td.idx.index_of(&h.apply(&ts.idx.element_int(u)));
        lands_in_units &= dst_is_unit[v];
        if v == td.one {
            kernel += 1;
        }
        image.insert(v);
    }
    let consistent = kernel * image.len() == src_units.len();
    Ok(UnitIsogenyReport {
        ring_index: cert.index,
        ring_surjective,
        src_units: Integer::from(src_units.len()),
        dst_units: Integer::from(dst_count),
        unit_kernel: Integer::from(kernel),
        unit_image_index: Integer::from(dst_count / image.len().max(1)),
        unit_map_is_isogeny: lands_in_units && consistent && dst_count % image.len().max(1) == 0,
        surjectivity_preserved: !ring_surjective || image.len() == dst_count,
    })
}

/// Elements `y` with `1 − xyz` a unit for all `x`, `z`.
pub fn jacobson_radical(e: &FiniteRing, cap: usize) -> Result<Vec<Vec<Integer>>, FiniteRingError> {
    let t = RingTables::new(e, cap)?;
    Ok(radical_elements(&t).into_iter().map(|y| t.idx.element_int(y)).collect())
}

fn radical_elements(t: &RingTables) -> Vec<usize> {
    let n = t.size();
    let unit = t.is_unit_set();
    // z = 1 first: a cheap necessary condition that discards most elements.
    let survivors: Vec<usize> = (0..n)
        .filter(|&y| (0..n).all(|x| unit[t.sub(t.one, t.mul(x, y))]))
        .collect();
    survivors
        .into_iter()
        .filter(|&y| {
            (0..n).all(|x| {
                let xy = t.mul(x, y);
                (0..n).all(|z| unit[t.sub(t.one, t.mul(xy, z))])
            })
        })
        .collect()
}

/// Elements of the centre, from the kernel of `z ↦ (z g_i − g_i z)_i`.
pub fn centre(e: &FiniteRing, cap: usize) -> Result<Vec<Vec<Integer>>, FiniteRingError> {
    let n = e.ngens();
    let mut rows: Vec<Vec<Integer>> = Vec::new();
    let mut rel = IntMatrix::zeros(0, 0);
    for i in 0..n {
        let gi = e.basis(i);
        let block: Vec<Vec<Integer>> = (0..n)
            .map(|j| {
                let gj = e.basis(j);
                let (a, b) = (e.mul(&gj, &gi), e.mul(&gi, &gj));
                a.iter().zip(&b).map(|(x, y)| x - y).collect()
            })
            .collect();
        // Block rows: coordinates of [g_j, g_i] for each j (as columns).
        let m = IntMatrix::from_columns(n, &block);
        rows.extend((0..n).map(|r| m.row(r).to_vec()));
        rel = rel.block_diag(&e.add_group().relation_columns());
    }
    let mat = IntMatrix::from_columns(n, &rows).transpose();
    let sub = Subgroup::kernel(&mat, &e.add_group().relation_columns(), &rel);
    let t = RingTables::new(e, cap)?;
    let gens: Vec<usize> = sub.embedding.columns().iter().map(|c| t.idx.index_of(c)).collect();
    let span = t.idx.span(&gens);
    Ok((0..t.size()).filter(|&x| span[x]).map(|x| t.idx.element_int(x)).collect())
}

/// Exponent of `B^× / (Z(B)^× · [B^×, B^×])`.
pub fn unit_quotient_exponent(b: &FiniteRing, cap: usize) -> Result<Integer, FiniteRingError> {
    let t = RingTables::new(b, cap)?;
    let units = t.units();
    let centre_set: HashSet<usize> = centre(b, cap)?.iter().map(|c| t.idx.index_of(c)).collect();
    let mut gens: Vec<usize> = units.iter().map(|&(u, _)| u).filter(|u| centre_set.contains(u)).collect();
    for &(u, ui) in &units {
        for &(v, vi) in &units {
            gens.push(t.mul(t.mul(u, v), t.mul(ui, vi)));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    // The subgroup generated by `gens`: closure under right multiplication.
    let mut in_n = vec![false; t.size()];
    in_n[t.one] = true;
    let mut queue = vec![t.one];
    while let Some(x) = queue.pop() {
        for &g in &gens {
            let y = t.mul(x, g);
            if !in_n[y] {
                in_n[y] = true;
                queue.push(y);
            }
        }
    }
    let mut exponent = Integer::one();
    for &(u, _) in &units {
        let mut k = 1u64;
        let mut p = u;
        while !in_n[p] {
            p = t.mul(p, u);
            k += 1;
        }
        exponent = exponent.lcm(&Integer::from(k));
    }
    Ok(exponent)
}

/// For an ideal `I` generated by `ideal_gens`: checks `I ⊆ J(E)` and that
/// `E^× → (E/I)^×` is surjective.
pub fn lemma_j_check(e: &FiniteRing, ideal_gens: &[Vec<Integer>], cap: usize) -> Result<bool, FiniteRingError> {
    let t = RingTables::new(e, cap)?;
    let seeds: Vec<usize> = ideal_gens.iter().map(|g| t.idx.index_of(g)).collect();
    let ideal = t.idx.span(&t.ideal_closure(&seeds));
    let radical: HashSet<usize> = radical_elements(&t).into_iter().collect();
    if (0..t.size()).any(|x| ideal[x] && !radical.contains(&x)) {
        return Ok(false);
    }
    let (_, proj) = e.quotient(ideal_gens, cap)?;
    let report = check_unit_isogeny(&proj, cap)?;
    Ok(report.ring_surjective && report.unit_image_index.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn flat(v: Vec<Vec<Integer>>) -> Vec<Integer> {
        v.into_iter().map(|mut x| x.remove(0)).collect()
    }

    #[test]
    fn unit_examples() {
        let z8 = FiniteRing::zmod(8).unwrap();
        let mut u = flat(unit_group(&z8, DEFAULT_RING_CAP).unwrap());
        u.sort();
        assert_eq!(u, vec![int(1), int(3), int(5), int(7)]);
        assert_eq!(unit_group(&FiniteRing::zmod(2).unwrap(), 16).unwrap().len(), 1);
        assert_eq!(unit_group(&FiniteRing::matrix_ring(2, 2).unwrap(), 1 << 10).unwrap().len(), 6);
        assert_eq!(unit_group(&FiniteRing::matrix_ring(3, 2).unwrap(), 1 << 10).unwrap().len(), 48);
        assert_eq!(unit_group(&FiniteRing::matrix_ring(2, 3).unwrap(), 1 << 10).unwrap().len(), 168);
        assert!(matches!(unit_group(&z8, 4), Err(FiniteRingError::CapExceeded { .. })));
    }

    #[test]
    fn radical_examples() {
        let mut j = flat(jacobson_radical(&FiniteRing::zmod(4).unwrap(), 64).unwrap());
        j.sort();
        assert_eq!(j, vec![int(0), int(2)]);
        assert_eq!(jacobson_radical(&FiniteRing::matrix_ring(2, 2).unwrap(), 64).unwrap().len(), 1);
        let f2f2 = FiniteRing::zmod(2).unwrap().product(&FiniteRing::zmod(2).unwrap()).unwrap();
        assert_eq!(jacobson_radical(&f2f2, 64).unwrap().len(), 1);
    }

    #[test]
    fn unit_maps() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let z2 = FiniteRing::zmod(2).unwrap();
        let q = FiniteRingHom::new(z4, z2.clone(), IntMatrix::from_rows(&[vec![1]])).unwrap();
        let r = check_unit_isogeny(&q, 64).unwrap();
        assert!(r.ring_surjective && r.passes());
        assert_eq!(r.unit_kernel, int(2));
        let id = FiniteRingHom::new(z2.clone(), z2, IntMatrix::identity(1)).unwrap();
        assert!(check_unit_isogeny(&id, 64).unwrap().passes());
    }

    #[test]
    fn centres() {
        assert_eq!(centre(&FiniteRing::matrix_ring(3, 2).unwrap(), 1 << 10).unwrap().len(), 3);
        assert_eq!(centre(&FiniteRing::zmod(6).unwrap(), 64).unwrap().len(), 6);
    }

    #[test]
    fn unit_quotient_examples() {
        assert_eq!(unit_quotient_exponent(&FiniteRing::matrix_ring(5, 1).unwrap(), 64).unwrap(), int(1));
        assert_eq!(unit_quotient_exponent(&FiniteRing::matrix_ring(2, 2).unwrap(), 64).unwrap(), int(2));
        assert_eq!(unit_quotient_exponent(&FiniteRing::matrix_ring(3, 2).unwrap(), 128).unwrap(), int(2));
    }
}
