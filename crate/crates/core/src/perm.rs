//! Permutation groups on small point sets: group orders by the
//! Schreier–Sims algorithm, and generators for the automorphism group of a
//! finite abelian group acting on its elements.

use num_traits::One;

use crate::abelian::ElementIndexer;
use crate::linalg::Integer;

/// A permutation of `0..n`, stored as the image of each point.
pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// `a ∘ b` (apply `b` first).
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn invert(a: &[usize]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (x, &y) in a.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

fn is_identity(a: &[usize]) -> bool {
    a.iter().enumerate().all(|(i, &x)| i == x)
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
    /// Number of (orbit point, generator) pairs already checked, per point.
    checked: Vec<usize>,
}

/// Stabiliser chain built incrementally; every Schreier generator of every
/// level is sifted through the levels below it.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = Self {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            assert_eq!(g.len(), degree, "generator of the wrong degree");
            let residue = chain.sift(0, g.clone());
            if !is_identity(&residue) {
                chain.add_generator(0, residue);
            }
        }
        chain
    }

    /// Strips `g` through the levels from `start`; the identity means `g`
    /// lies in the group stored from that level on.
    fn sift(&self, start: usize, mut g: Perm) -> Perm {
        for level in &self.levels[start.min(self.levels.len())..] {
            let b = g[level.base];
            match &level.transversal[b] {
                Some(u) => g = compose(&invert(u), &g),
                None => return g,
            }
        }
        g
    }

    fn add_generator(&mut self, i: usize, g: Perm) {
        if i == self.levels.len() {
            let base = (0..self.degree).find(|&p| g[p] != p).expect("non-identity generator");
            let mut transversal = vec![None; self.degree];
            transversal[base] = Some(identity(self.degree));
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal,
                orbit: vec![base],
                checked: vec![0],
            });
        }
        self.levels[i].gens.push(g);
        self.extend_orbit(i);
        loop {
            let Some((pos, s)) = self.next_unchecked(i) else {
                break;
            };
            let level = &self.levels[i];
            let b = level.orbit[pos];
            let gen = &level.gens[s];
            let u_b = level.transversal[b].as_ref().unwrap();
            let u_sb = level.transversal[gen[b]].as_ref().unwrap();
            let schreier = compose(&invert(u_sb), &compose(gen, u_b));
            let residue = self.sift(i + 1, schreier);
            if !is_identity(&residue) {
                self.add_generator(i + 1, residue);
            }
        }
    }

    /// Next (orbit position, generator) pair whose Schreier generator has not
    /// been sifted yet; marks it as checked.
    fn next_unchecked(&mut self, i: usize) -> Option<(usize, usize)> {
        let level = &mut self.levels[i];
        let ngens = level.gens.len();
        for (pos, done) in level.checked.iter_mut().enumerate() {
            if *done < ngens {
                let s = *done;
                *done += 1;
                return Some((pos, s));
            }
        }
        None
    }

    fn extend_orbit(&mut self, i: usize) {
        let level = &mut self.levels[i];
        let mut head = 0;
        while head < level.orbit.len() {
            let b = level.orbit[head];
            head += 1;
            for s in 0..level.gens.len() {
                let c = level.gens[s][b];
                if level.transversal[c].is_none() {
                    let u = compose(&level.gens[s], level.transversal[b].as_ref().unwrap());
                    level.transversal[c] = Some(u);
                    level.orbit.push(c);
                    level.checked.push(0);
                }
            }
        }
    }

    pub fn order(&self) -> Integer {
        self.levels
            .iter()
            .fold(Integer::one(), |acc, l| acc * Integer::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &[usize]) -> bool {
        is_identity(&self.sift(0, g.to_vec()))
    }
}

/// Order of the group generated by `gens` acting on `0..degree`.
pub fn group_order(degree: usize, gens: &[Perm]) -> Integer {
    StabChain::new(degree, gens).order()
}

/// Generators of `Aut(G)` for the finite abelian group with invariant
/// factors `moduli`, as permutations of the element indices of `idx`.
///
/// `G` is split into cyclic `p`-power factors `y_a` of order `p^{e_a}`;
/// the generators are unit scalings of one factor, swaps of factors of the
/// same type, and transvections `y_a ↦ y_a + p^{max(0, e_b − e_a)} y_b`
/// between factors of the same prime.
pub fn abelian_aut_generators(idx: &ElementIndexer) -> Vec<Perm> {
    let moduli = idx.moduli().to_vec();
    // Primary factors: (prime, exponent, invariant factor position).
    let mut factors: Vec<(u64, u32, usize)> = Vec::new();
    for (pos, &d) in moduli.iter().enumerate() {
        for (p, e) in factor_u64(d) {
            factors.push((p, e, pos));
        }
    }
    let orders: Vec<u64> = factors.iter().map(|&(p, e, _)| p.pow(e)).collect();
    // Element of G for the primary coordinates c: Σ c_a (d_pos / p^e) g_pos.
    let to_g = |c: &[u64]| -> usize {
        let mut v = vec![0u64; moduli.len()];
        for (a, &(_, _, pos)) in factors.iter().enumerate() {
            let step = moduli[pos] / orders[a];
            v[pos] = (v[pos] + c[a] * step) % moduli[pos];
        }
        idx.index(&v)
    };
    // Primary coordinates of every element, by CRT through `to_g`.
    let primary = ElementIndexer::from_moduli(orders.clone());
    let mut coords_of = vec![Vec::new(); idx.size()];
    for k in 0..primary.size() {
        let c = primary.element(k);
        let x = to_g(&c);
        coords_of[x] = c;
    }
    let lift = |map: &dyn Fn(&[u64]) -> Vec<u64>| -> Perm {
        (0..idx.size()).map(|x| to_g(&map(&coords_of[x]))).collect()
    };
    let mut gens = Vec::new();
    for a in 0..factors.len() {
        let q = orders[a];
        for u in 2..q {
            if gcd(u, q) == 1 {
                gens.push(lift(&|c: &[u64]| {
                    let mut c = c.to_vec();
                    c[a] = c[a] * u % q;
                    c
                }));
            }
        }
        for b in 0..factors.len() {
            let ((p, ea, _), (pb, eb, _)) = (factors[a], factors[b]);
            if a == b || p != pb {
                continue;
            }
            // y_a ↦ y_a + c y_b, i.e. coordinate b gains c times coordinate a.
            let c_ab = p.pow(eb.saturating_sub(ea));
            let qb = orders[b];
            gens.push(lift(&|c: &[u64]| {
                let mut c = c.to_vec();
                c[b] = (c[b] + c_ab * c[a]) % qb;
                c
            }));
            if ea == eb && a < b {
                gens.push(lift(&|c: &[u64]| {
                    let mut c = c.to_vec();
                    c.swap(a, b);
                    c
                }));
            }
        }
    }
    gens
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
