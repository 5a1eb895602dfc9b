//! Element enumeration for small finite abelian groups.

use num_integer::Integer as _;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::FgAbGroup;
use crate::linalg::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteGroupError {
    #[error("group is infinite")]
    NotFinite,
    #[error("group has {size} elements, above the enumeration cap {cap}")]
    TooLarge { size: String, cap: usize },
}

/// Bijection between the elements of a finite group in invariant-factor
/// coordinates and `0..size` (mixed radix, first coordinate fastest).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementIndexer {
    moduli: Vec<u64>,
    size: usize,
}

impl ElementIndexer {
    pub fn new(g: &FgAbGroup, cap: usize) -> Result<Self, FiniteGroupError> {
        if !g.is_finite() {
            return Err(FiniteGroupError::NotFinite);
        }
        let order = g.torsion_order();
        let size = order
            .to_usize()
            .filter(|&s| s <= cap)
            .ok_or_else(|| FiniteGroupError::TooLarge {
                size: order.to_string(),
                cap,
            })?;
        let moduli = g.torsion().iter().map(|d| d.to_u64().unwrap()).collect();
        Ok(Self { moduli, size })
    }

    pub fn from_moduli(moduli: Vec<u64>) -> Self {
        let size = moduli.iter().product::<u64>() as usize;
        Self { moduli, size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn index(&self, v: &[u64]) -> usize {
        let mut idx = 0usize;
        for (x, m) in v.iter().zip(&self.moduli).rev() {
            idx = idx * (*m as usize) + (*x % *m) as usize;
        }
        idx
    }

    pub fn index_of(&self, v: &[Integer]) -> usize {
        let mut idx = 0usize;
        for (x, m) in v.iter().zip(&self.moduli).rev() {
            let r = x.mod_floor(&Integer::from(*m)).to_usize().unwrap();
            idx = idx * (*m as usize) + r;
        }
        idx
    }

    pub fn element(&self, mut idx: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let x = (idx % m as usize) as u64;
                idx /= m as usize;
                x
            })
            .collect()
    }

    pub fn element_int(&self, idx: usize) -> Vec<Integer> {
        self.element(idx).into_iter().map(Integer::from).collect()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        self.index(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let x = self.element(a);
        let s: Vec<u64> = x.iter().zip(&self.moduli).map(|(p, m)| (m - p) % m).collect();
        self.index(&s)
    }

    pub fn scale(&self, k: u64, a: usize) -> usize {
        let x = self.element(a);
        let s: Vec<u64> = x.iter().zip(&self.moduli).map(|(p, m)| (p * (k % m)) % m).collect();
        self.index(&s)
    }

    /// Additive order of an element.
    pub fn order_of(&self, a: usize) -> u64 {
        self.element(a)
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| m / x.gcd(&m))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Closure of a set of elements under addition: the subgroup they span,
    /// as a membership bitmap.
    pub fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.size];
        member[0] = true;
        let mut list = vec![0usize];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in gens {
                let y = self.add(x, g);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
        }
        member
    }
}
