//! The stabiliser `H = {σ ∈ Aut M : σL = L}` of a submodule and the
//! restriction `ρ: H → Aut L`.

use std::collections::{HashMap, HashSet};

use num_traits::Zero;

use super::finite::{apply_images, aut_enumerate};
use super::{FiniteModule, OrderError};
use crate::abelian::ElementIndexer;
use crate::linalg::{IntMatrix, Integer, Rational};
use crate::perm::{abelian_aut_generators, compose, group_order, invert, Perm};

/// `(Aut M : H)`, `#ker ρ` and `(Aut L : ρH)` for a submodule `L ⊆ M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerDecomposition {
    pub aut_m_order: Integer,
    pub h_index: Integer,
    pub ker_rho_order: Integer,
    pub rho_image_index: Integer,
}

impl StabilizerDecomposition {
    /// `(Aut M : H) · #ker ρ / (Aut L : ρH)`.
    pub fn value(&self) -> Rational {
        Rational::new(&self.h_index * &self.ker_rho_order, self.rho_image_index.clone())
    }
}

/// Stabiliser data for the submodule of `m` generated by `l_gens`.
///
/// Automorphisms are enumerated when `m` has at most `cap` endomorphism
/// candidates. Beyond that, modules on which the order acts by scalars are
/// handled as permutation groups on their elements: `H` is the stabiliser of
/// the point `L` in the orbit of subgroups, generated by Schreier generators,
/// and all orders come from stabiliser chains.
pub fn stabilizer_data(
    m: &FiniteModule,
    l_gens: &[Vec<Integer>],
    cap: usize,
) -> Result<StabilizerDecomposition, OrderError> {
    let (l, emb) = m.submodule(l_gens)?;
    match aut_enumerate(m, cap) {
        Ok(auts) => by_enumeration(m, &l, &emb, &auts, cap),
        Err(OrderError::CapExceeded { .. }) if m.acts_by_scalars() => by_permutations(m, &l, &emb),
        Err(e) => Err(e),
    }
}

fn by_enumeration(
    m: &FiniteModule,
    l: &FiniteModule,
    emb: &IntMatrix,
    auts: &[IntMatrix],
    cap: usize,
) -> Result<StabilizerDecomposition, OrderError> {
    let idx = ElementIndexer::from_moduli(super::finite::moduli_u64(m.grp()));
    let l_elems: Vec<usize> = emb.columns().iter().map(|c| idx.index_of(c)).collect();
    let in_l = idx.span(&l_elems);
    let aut_l = Integer::from(aut_enumerate(l, cap)?.len());
    let mut h = 0usize;
    let mut kernel = 0usize;
    let mut restrictions: HashSet<Vec<usize>> = HashSet::new();
    for sigma in auts {
        let img: Vec<usize> = sigma.columns().iter().map(|c| idx.index_of(c)).collect();
        let on_l: Vec<usize> = l_elems.iter().map(|&x| apply_images(&idx, &img, x)).collect();
        // σ is injective and L finite, so σL ⊆ L forces σL = L.
        if on_l.iter().all(|&y| in_l[y]) {
            h += 1;
            if on_l == l_elems {
                kernel += 1;
            }
            restrictions.insert(on_l);
        }
    }
    let aut_m = Integer::from(auts.len());
    let rho_h = Integer::from(restrictions.len());
    Ok(StabilizerDecomposition {
        h_index: &aut_m / Integer::from(h),
        aut_m_order: aut_m,
        ker_rho_order: Integer::from(kernel),
        rho_image_index: aut_l / rho_h,
    })
}

fn by_permutations(
    m: &FiniteModule,
    l: &FiniteModule,
    emb: &IntMatrix,
) -> Result<StabilizerDecomposition, OrderError> {
    let (idx, _) = m.tables()?;
    let n = idx.size();
    let gens = abelian_aut_generators(&idx);
    let l_gen_elems: Vec<usize> = emb.columns().iter().map(|c| idx.index_of(c)).collect();
    let start = idx.span(&l_gen_elems);

    // Orbit of L with a transversal element mapping L to each orbit point.
    let mut pos: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut orbit: Vec<Vec<bool>> = vec![start.clone()];
    let mut transversal: Vec<Perm> = vec![(0..n).collect()];
    pos.insert(start.clone(), 0);
    let image = |s: &Perm, set: &[bool]| -> Vec<bool> {
        let mut out = vec![false; n];
        for (x, &inside) in set.iter().enumerate() {
            if inside {
                out[s[x]] = true;
            }
        }
        out
    };
    let mut head = 0;
    while head < orbit.len() {
        let set = orbit[head].clone();
        let t = transversal[head].clone();
        head += 1;
        for s in &gens {
            let next = image(s, &set);
            if !pos.contains_key(&next) {
                pos.insert(next.clone(), orbit.len());
                orbit.push(next);
                transversal.push(compose(s, &t));
            }
        }
    }

    // Schreier generators of H, restricted to L for ρH.
    let l_points: Vec<usize> = (0..n).filter(|&x| start[x]).collect();
    let mut relabel = vec![usize::MAX; n];
    for (i, &x) in l_points.iter().enumerate() {
        relabel[x] = i;
    }
    let mut h_gens: HashSet<Perm> = HashSet::new();
    for (o, set) in orbit.iter().enumerate() {
        for s in &gens {
            let target = pos[&image(s, set)];
            let h = compose(&invert(&transversal[target]), &compose(s, &transversal[o]));
            h_gens.insert(h);
        }
    }
    let mut h_gens: Vec<Perm> = h_gens.into_iter().collect();
    h_gens.sort();
    let rho_gens: Vec<Perm> = h_gens
        .iter()
        .map(|h| l_points.iter().map(|&x| relabel[h[x]]).collect())
        .collect();

    let aut_m = group_order(n, &gens);
    let rho_h = group_order(l_points.len(), &rho_gens);
    let (l_idx, _) = l.tables()?;
    let aut_l = group_order(l_idx.size(), &abelian_aut_generators(&l_idx));
    let h_index = Integer::from(orbit.len());
    let h_order = &aut_m / &h_index;
    debug_assert!((&aut_m % &h_index).is_zero());
    Ok(StabilizerDecomposition {
        aut_m_order: aut_m,
        h_index,
        ker_rho_order: h_order / &rho_h,
        rho_image_index: aut_l / rho_h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FgAbGroup;
    use crate::linalg::{int, rat};
    use crate::order::{ia_finite, FiniteGroup, DEFAULT_AUT_CAP};

    fn cyc(orders: &[u64]) -> FiniteModule {
        FiniteModule::trivial_action(&FgAbGroup::from_cyclic_orders(0, orders)).unwrap()
    }

    #[test]
    fn whole_module() {
        let m = cyc(&[2, 4]);
        let d = stabilizer_data(&m, &[vec![int(1), int(0)], vec![int(0), int(1)]], DEFAULT_AUT_CAP).unwrap();
        assert_eq!((d.h_index.clone(), d.ker_rho_order.clone(), d.rho_image_index.clone()), (int(1), int(1), int(1)));
        assert_eq!(d.value(), rat(1, 1));
    }

    #[test]
    fn z2_in_z4() {
        let d = stabilizer_data(&cyc(&[4]), &[vec![int(2)]], DEFAULT_AUT_CAP).unwrap();
        assert_eq!(d.h_index, int(1));
        assert_eq!(d.ker_rho_order, int(2));
        assert_eq!(d.rho_image_index, int(1));
        assert_eq!(d.value(), rat(2, 1));
    }

    #[test]
    fn routes_agree() {
        let m = cyc(&[2, 2, 4]);
        for gens in [
            vec![vec![int(1), int(0), int(0)]],
            vec![vec![int(0), int(0), int(2)]],
            vec![vec![int(1), int(1), int(2)], vec![int(0), int(1), int(0)]],
            vec![],
        ] {
            let enumerated = stabilizer_data(&m, &gens, 1 << 12).unwrap();
            let (l, emb) = m.submodule(&gens).unwrap();
            let perm = by_permutations(&m, &l, &emb).unwrap();
            assert_eq!(enumerated, perm);
            assert_eq!(perm.value(), ia_finite(&l, &m, 1 << 12).unwrap());
        }
    }

    #[test]
    fn c2_swap_module() {
        let grp = FgAbGroup::from_cyclic_orders(0, &[3, 3]);
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let m = FiniteModule::over_group(&FiniteGroup::cyclic(2), &grp, vec![IntMatrix::identity(2), swap])
            .unwrap();
        for gens in [vec![vec![int(1), int(1)]], vec![vec![int(1), int(2)]], vec![]] {
            let d = stabilizer_data(&m, &gens, DEFAULT_AUT_CAP).unwrap();
            let (l, _) = m.submodule(&gens).unwrap();
            assert_eq!(d.value(), ia_finite(&l, &m, DEFAULT_AUT_CAP).unwrap());
        }
        assert!(matches!(
            stabilizer_data(&m, &[vec![int(1), int(0)]], DEFAULT_AUT_CAP),
            Err(OrderError::NotSubmodule)
        ));
    }
}
