//! Seeded random groups, homomorphisms and commensurabilities for property
//! checks.

use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use super::{AbHom, FgAbGroup};
use crate::corr::{AbelianContext, Commensurability, Correspondence};
use crate::linalg::{IntMatrix, Integer};

/// Random group `Z^rank ⊕ T` with `#T ≤ max_torsion`.
pub fn random_group<R: Rng>(rng: &mut R, rank: usize, max_torsion: u64) -> FgAbGroup {
    let mut orders = Vec::new();
    let mut total = 1u64;
    let factors = rng.gen_range(0..=3);
    for _ in 0..factors {
        let m = rng.gen_range(2..=9u64);
        if total * m <= max_torsion {
            total *= m;
            orders.push(m);
        }
    }
    FgAbGroup::from_cyclic_orders(rank, &orders)
}

/// Uniformly chosen admissible image of each generator (free coordinates
/// drawn from `[-bound, bound]`).
pub fn random_hom<R: Rng>(rng: &mut R, src: &FgAbGroup, dst: &FgAbGroup, bound: i64) -> AbHom {
    let src_mod = src.moduli();
    let dst_mod = dst.moduli();
    let mut mat = IntMatrix::zeros(dst.ngens(), src.ngens());
    for (j, d) in src_mod.iter().enumerate() {
        for (i, e) in dst_mod.iter().enumerate() {
            let x = if e.is_zero() {
                if d.is_zero() {
                    Integer::from(rng.gen_range(-bound..=bound))
                } else {
                    Integer::zero()
                }
            } else {
                // Images of a generator of order d must be killed by d.
                let step = if d.is_zero() { Integer::from(1) } else { e / d.gcd(e) };
                let choices = (e / &step).to_u64().unwrap();
                step * Integer::from(rng.gen_range(0..choices))
            };
            mat.set(i, j, x);
        }
    }
    AbHom::new(src.clone(), dst.clone(), mat).expect("sampled images respect orders")
}

/// Random isogeny `src → dst`; both must have the same free rank.
pub fn random_isogeny<R: Rng>(rng: &mut R, src: &FgAbGroup, dst: &FgAbGroup) -> AbHom {
    assert_eq!(src.rank(), dst.rank(), "isogenies preserve free rank");
    loop {
        let h = random_hom(rng, src, dst, 3);
        if h.certify().is_ok() {
            return h;
        }
    }
}

/// Random commensurability `l ⇌ m` through a random apex of the same rank.
pub fn random_commensurability<R: Rng>(
    rng: &mut R,
    l: &FgAbGroup,
    m: &FgAbGroup,
    max_torsion: u64,
) -> Commensurability<FgAbGroup, AbHom> {
    let w = random_group(rng, l.rank(), max_torsion);
    let f = random_isogeny(rng, &w, l);
    let g = random_isogeny(rng, &w, m);
    Commensurability::new(&AbelianContext, Correspondence::new(w, f, g))
        .expect("legs are isogenies by construction")
}
