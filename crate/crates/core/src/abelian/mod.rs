//! Finitely generated abelian groups in invariant-factor form, their
//! homomorphisms, isogeny indices and automorphism counts.
//!
//! A group `Z/d1 ⊕ … ⊕ Z/dk ⊕ Z^n` is stored by its invariant factors
//! `d1 | … | dk` (each at least 2) and its free rank `n`. Coordinates always
//! list the torsion generators first, then the free ones.

mod finite;
mod hom;
mod present;
pub mod sample;

pub use finite::{ElementIndexer, FiniteGroupError};
pub use hom::{hom_certify, AbHom, IsogenyCertificate, NotIsogeny};
pub use present::{Presented, Subgroup};

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::linalg::{IntMatrix, Integer, LinalgError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("invalid invariant factors: {0}")]
    InvalidInvariants(String),
    #[error("malformed homomorphism: {0}")]
    Shape(String),
    #[error("matrix does not define a homomorphism: {0}")]
    NotWellDefined(String),
    #[error("group is not finite (free rank {0})")]
    NotFinite(usize),
    #[error("free ranks differ ({left} vs {right}); no commensurability exists")]
    RankMismatch { left: usize, right: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    rank: usize,
    torsion: Vec<Integer>,
}

impl FgAbGroup {
    pub fn new(rank: usize, torsion: Vec<Integer>) -> Result<Self, AbelianError> {
        for d in &torsion {
            if d < &Integer::from(2) {
                return Err(AbelianError::InvalidInvariants(format!(
                    "invariant factor {d} is smaller than 2"
                )));
            }
        }
        for w in torsion.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(AbelianError::InvalidInvariants(format!(
                    "{} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { rank, torsion })
    }

    pub fn trivial() -> Self {
        Self { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        Self { rank, torsion: Vec::new() }
    }

    /// `Z/n`, with `n = 0` meaning `Z` and `n = 1` the trivial group.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => Self { rank: 0, torsion: vec![Integer::from(n)] },
        }
    }

    /// The group `Z^rank ⊕ Z/m1 ⊕ …` for arbitrary cyclic orders `mi`,
    /// brought into invariant-factor form.
    pub fn from_cyclic_orders(rank: usize, orders: &[u64]) -> Self {
        let mut diag: Vec<Integer> = orders.iter().map(|&m| Integer::from(m)).collect();
        diag.extend(std::iter::repeat_n(Integer::zero(), rank));
        let g = diag.len();
        let rel = IntMatrix::diagonal(g, g, &diag);
        from_presentation(&rel)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[Integer] {
        &self.torsion
    }

    /// Number of standard generators (torsion then free).
    pub fn ngens(&self) -> usize {
        self.torsion.len() + self.rank
    }

    /// Order of each standard generator, `0` for free generators.
    pub fn moduli(&self) -> Vec<Integer> {
        let mut m = self.torsion.clone();
        m.extend(std::iter::repeat_n(Integer::zero(), self.rank));
        m
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> Integer {
        self.torsion.iter().product()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<Integer> {
        self.is_finite().then(|| self.torsion_order())
    }

    /// Columns `d_i e_i` generating the relation lattice of the standard
    /// presentation.
    pub fn relation_columns(&self) -> IntMatrix {
        let g = self.ngens();
        let cols: Vec<Vec<Integer>> = self
            .torsion
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut c = vec![Integer::zero(); g];
                c[i] = d.clone();
                c
            })
            .collect();
        IntMatrix::from_columns(g, &cols)
    }

    /// Reduces a coordinate vector into canonical form (torsion coordinates in
    /// `[0, d)`).
    pub fn reduce(&self, v: &[Integer]) -> Vec<Integer> {
        assert_eq!(v.len(), self.ngens(), "coordinate vector has wrong length");
        v.iter()
            .enumerate()
            .map(|(i, x)| match self.torsion.get(i) {
                Some(d) => x.mod_floor(d),
                None => x.clone(),
            })
            .collect()
    }

    pub fn is_zero_element(&self, v: &[Integer]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders: Vec<u64> = Vec::new();
        let mut big = false;
        for d in self.torsion.iter().chain(&other.torsion) {
            match d.to_u64() {
                Some(x) => orders.push(x),
                None => big = true,
            }
        }
        if !big {
            return Self::from_cyclic_orders(self.rank + other.rank, &orders);
        }
        let diag: Vec<Integer> = self
            .torsion
            .iter()
            .chain(&other.torsion)
            .cloned()
            .chain(std::iter::repeat_n(Integer::zero(), self.rank + other.rank))
            .collect();
        let g = diag.len();
        from_presentation(&IntMatrix::diagonal(g, g, &diag))
    }
}

impl std::fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            n => parts.push(format!("Z^{n}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Cokernel of a relation matrix whose ROWS are relations on `rel.cols()`
/// generators, in invariant-factor form.
pub fn from_presentation(rel: &IntMatrix) -> FgAbGroup {
    Presented::from_relation_columns(rel.cols(), &rel.transpose()).group
}

/// Free rank and torsion part.
pub fn torsion_split(g: &FgAbGroup) -> (usize, FgAbGroup) {
    (
        g.rank,
        FgAbGroup {
            rank: 0,
            torsion: g.torsion.clone(),
        },
    )
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(n: &Integer) -> Vec<(Integer, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut p = Integer::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == Integer::from(2) { 1 } else { 2 };
    }
    if n > Integer::one() {
        out.push((n, 1));
    }
    out
}

/// Order of the automorphism group of a finite abelian group.
///
/// Uses the product over primes of the automorphism counts of the primary
/// components. For a `p`-group of type `p^e1 ⊕ … ⊕ p^er` with
/// `e1 ≤ … ≤ er`, writing `d_k = max{l : e_l = e_k}` and
/// `c_k = min{l : e_l = e_k}`, the count is
/// `∏ (p^{d_k} − p^{k−1}) · ∏ (p^{e_j})^{r−d_j} · ∏ (p^{e_i−1})^{r−c_i+1}`.
pub fn aut_order(t: &FgAbGroup) -> Result<Integer, AbelianError> {
    if !t.is_finite() {
        return Err(AbelianError::NotFinite(t.rank));
    }
    let mut by_prime: std::collections::BTreeMap<Integer, Vec<u32>> = Default::default();
    for d in &t.torsion {
        for (p, e) in factorize(d) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    let mut total = Integer::one();
    for (p, mut exps) in by_prime {
        exps.sort_unstable();
        total *= p_group_aut_order(&p, &exps);
    }
    Ok(total)
}

fn p_group_aut_order(p: &Integer, exps: &[u32]) -> Integer {
    let r = exps.len();
    let pow = |e: usize| -> Integer { num_traits::pow(p.clone(), e) };
    let mut out = Integer::one();
    for k in 0..r {
        // 1-based positions of the first and last exponent equal to exps[k].
        let d = exps.iter().rposition(|&x| x == exps[k]).unwrap() + 1;
        let c = exps.iter().position(|&x| x == exps[k]).unwrap() + 1;
        let e = exps[k] as usize;
        out *= pow(d) - pow(k);
        out *= pow(e * (r - d));
        out *= pow((e - 1) * (r - c + 1));
    }
    out
}

/// `ia(L, M)` for finitely generated abelian groups of equal free rank `n`:
/// `((#M0)^n · #Aut M0) / ((#L0)^n · #Aut L0)` with `L0`, `M0` the torsion
/// subgroups.
pub fn ia_abelian(l: &FgAbGroup, m: &FgAbGroup) -> Result<Rational, AbelianError> {
    if l.rank != m.rank {
        return Err(AbelianError::RankMismatch { left: l.rank, right: m.rank });
    }
    let n = l.rank;
    let (_, l0) = torsion_split(l);
    let (_, m0) = torsion_split(m);
    let num = num_traits::pow(m0.torsion_order(), n) * aut_order(&m0)?;
    let den = num_traits::pow(l0.torsion_order(), n) * aut_order(&l0)?;
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn grp(rank: usize, torsion: &[i64]) -> FgAbGroup {
        FgAbGroup::new(rank, torsion.iter().map(|&d| int(d)).collect()).unwrap()
    }

    #[test]
    fn presentation_examples() {
        assert_eq!(from_presentation(&IntMatrix::zeros(0, 2)), grp(2, &[]));
        let g = from_presentation(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]]));
        assert_eq!(g, grp(1, &[2]));
        let g = from_presentation(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(g, grp(0, &[2, 4]));
    }

    #[test]
    fn constructor_rejects_bad_chains() {
        assert!(FgAbGroup::new(0, vec![int(2), int(3)]).is_err());
        assert!(FgAbGroup::new(0, vec![int(1)]).is_err());
        assert_eq!(FgAbGroup::from_cyclic_orders(0, &[2, 3]), grp(0, &[6]));
        assert_eq!(FgAbGroup::from_cyclic_orders(1, &[4, 2, 1]), grp(1, &[2, 4]));
    }

    #[test]
    fn torsion_split_examples() {
        assert_eq!(torsion_split(&grp(3, &[])), (3, FgAbGroup::trivial()));
        assert_eq!(torsion_split(&grp(0, &[6])), (0, grp(0, &[6])));
        assert_eq!(torsion_split(&grp(1, &[2, 4])), (1, grp(0, &[2, 4])));
    }

    #[test]
    fn aut_order_examples() {
        assert_eq!(aut_order(&grp(0, &[5])).unwrap(), int(4));
        assert_eq!(aut_order(&grp(0, &[2, 2])).unwrap(), int(6));
        assert_eq!(aut_order(&grp(0, &[2, 4])).unwrap(), int(8));
        assert_eq!(aut_order(&FgAbGroup::trivial()).unwrap(), int(1));
        // GL_3(F_2) and Z/6 ≅ Z/2 ⊕ Z/3.
        assert_eq!(aut_order(&grp(0, &[2, 2, 2])).unwrap(), int(168));
        assert_eq!(aut_order(&grp(0, &[6])).unwrap(), int(2));
        assert_eq!(aut_order(&grp(1, &[])), Err(AbelianError::NotFinite(1)));
    }

    #[test]
    fn ia_examples() {
        let z = grp(1, &[]);
        assert_eq!(ia_abelian(&z, &z).unwrap(), rat(1, 1));
        assert_eq!(ia_abelian(&z, &grp(1, &[2])).unwrap(), rat(2, 1));
        // (3^2 · 2) / (2^2 · 1)
        assert_eq!(ia_abelian(&grp(2, &[2]), &grp(2, &[3])).unwrap(), rat(9, 2));
        assert_eq!(
            ia_abelian(&z, &grp(2, &[])),
            Err(AbelianError::RankMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(&int(360)), vec![(int(2), 3), (int(3), 2), (int(5), 1)]);
        assert_eq!(factorize(&int(97)), vec![(int(97), 1)]);
        assert!(factorize(&int(1)).is_empty());
    }
}
