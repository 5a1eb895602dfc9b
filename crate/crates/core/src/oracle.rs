//! Brute-force reference computations for finite objects: homomorphism and
//! automorphism enumeration, subgroup lattices, and indices of
//! correspondences recomputed from raw element counts.
//!
//! Nothing here calls the fast paths it is meant to check. Elements are
//! encoded by a private mixed-radix [`Universe`], homomorphisms are found by
//! trying every image tuple, and indices come from counting kernels and
//! images element by element.

use std::collections::{HashMap, HashSet};

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::abelian::{AbHom, FgAbGroup};
use crate::corr::Commensurability;
use crate::linalg::{IntMatrix, Integer, Rational};
use crate::order::FiniteModule;

/// Default bound on enumerated objects (candidate tuples, automorphisms).
pub const DEFAULT_ORACLE_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} needs {needed}, above the cap {cap}")]
    CapExceeded { what: String, needed: String, cap: usize },
    #[error("object is not finite")]
    NotFinite,
    #[error("inconsistent input: {0}")]
    Mismatch(String),
}

/// How an oracle value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Kernels and images counted element by element.
    ElementCount,
    /// Triples `(λ, ν, μ)` of automorphisms enumerated.
    TripleEnumeration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub computed: Rational,
    pub method: Method,
    /// Number of elements (or automorphisms) of all objects enumerated.
    pub element_count: Integer,
}

/// Elements of `Z/d_0 ⊕ … ⊕ Z/d_{k−1}`, numbered in mixed radix with the
/// first coordinate varying fastest.
#[derive(Debug, Clone)]
pub struct Universe {
    moduli: Vec<u64>,
    size: usize,
    /// Full addition table for small universes.
    sums: Option<Vec<u32>>,
}

/// Universes up to this size get an addition table.
const TABLE_LIMIT: usize = 1024;

impl Universe {
    pub fn new(moduli: &[u64], cap: usize) -> Result<Self, OracleError> {
        let mut size = 1usize;
        for &d in moduli {
            size = size
                .checked_mul(d as usize)
                .filter(|&s| s <= cap)
                .ok_or_else(|| OracleError::CapExceeded {
                    what: "element enumeration".into(),
                    needed: format!("{moduli:?}"),
                    cap,
                })?;
        }
        let mut uni = Self {
            moduli: moduli.to_vec(),
            size,
            sums: None,
        };
        if size <= TABLE_LIMIT {
            let mut sums = vec![0u32; size * size];
            for x in 0..size {
                for y in 0..size {
                    sums[x * size + y] = uni.add_direct(x, y) as u32;
                }
            }
            uni.sums = Some(sums);
        }
        Ok(uni)
    }

    fn of_group(g: &FgAbGroup, cap: usize) -> Result<Self, OracleError> {
        if g.rank() > 0 {
            return Err(OracleError::NotFinite);
        }
        let moduli: Vec<u64> = g
            .torsion()
            .iter()
            .map(|d| d.to_u64().ok_or(OracleError::NotFinite))
            .collect::<Result<_, _>>()?;
        Self::new(&moduli, cap)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn decode(&self, mut x: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&d| {
                let c = x as u64 % d;
                x /= d as usize;
                c
            })
            .collect()
    }

    pub fn encode(&self, c: &[u64]) -> usize {
        self.moduli
            .iter()
            .zip(c)
            .rev()
            .fold(0usize, |acc, (&d, &x)| acc * d as usize + (x % d) as usize)
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        match &self.sums {
            Some(t) => t[x * self.size + y] as usize,
            None => self.add_direct(x, y),
        }
    }

    fn add_direct(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.decode(x), self.decode(y));
        let s: Vec<u64> = a.iter().zip(&b).zip(&self.moduli).map(|((p, q), d)| (p + q) % d).collect();
        self.encode(&s)
    }

    /// Bitset of the subgroup generated by `gens`.
    pub fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.size];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.add(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
        }
        inside
    }
}

/// `Σ_j m_{kj} x_j` reduced into `dst`.
fn apply(mat: &[Vec<i64>], src: &Universe, dst: &Universe, x: usize) -> usize {
    let c = src.decode(x);
    let out: Vec<u64> = dst
        .moduli
        .iter()
        .enumerate()
        .map(|(k, &d)| {
            let d = d as i128;
            let s: i128 = c.iter().enumerate().map(|(j, &v)| mat[k][j] as i128 * v as i128).sum();
            s.rem_euclid(d) as u64
        })
        .collect();
    dst.encode(&out)
}

fn small_matrix(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_i64().expect("small matrix entry")).collect())
        .collect()
}

/// A finite module in oracle form: its universe and, per basis element of
/// the order, the action as a map on element indices.
struct OracleModule {
    uni: Universe,
    acts: Vec<Vec<usize>>,
}

impl OracleModule {
    fn new(m: &FiniteModule, cap: usize) -> Result<Self, OracleError> {
        let uni = Universe::of_group(m.grp(), cap)?;
        let acts = m
            .action()
            .iter()
            .map(|a| {
                let a = small_matrix(a);
                (0..uni.size()).map(|x| apply(&a, &uni, &uni, x)).collect()
            })
            .collect();
        Ok(Self { uni, acts })
    }

    /// Unit vector of generator `i`.
    fn gen(&self, i: usize) -> usize {
        let mut c = vec![0u64; self.uni.moduli.len()];
        c[i] = 1;
        self.uni.encode(&c)
    }
}

/// A homomorphism stored as the image of every element.
type ElementMap = Vec<usize>;

/// Extends generator images additively to every element; `None` if the
/// images do not respect the orders of the generators.
fn extend(src: &Universe, dst: &Universe, images: &[usize]) -> Option<ElementMap> {
    for (i, &y) in images.iter().enumerate() {
        let mut acc = 0;
        for _ in 0..src.moduli[i] {
            acc = dst.add(acc, y);
        }
        if acc != 0 {
            return None;
        }
    }
    let mut map = vec![0usize; src.size];
    for x in 1..src.size {
        // Peel off one copy of the first nonzero generator.
        let c = src.decode(x);
        let i = c.iter().position(|&v| v != 0).expect("nonzero element");
        let mut prev = c.clone();
        prev[i] -= 1;
        map[x] = dst.add(map[src.encode(&prev)], images[i]);
    }
    Some(map)
}

fn commutes(a: &OracleModule, b: &OracleModule, map: &[usize]) -> bool {
    a.acts
        .iter()
        .zip(&b.acts)
        .all(|(ta, tb)| (0..a.uni.size).all(|x| map[ta[x]] == tb[map[x]]))
}

fn too_many(what: &str, needed: String, cap: usize) -> OracleError {
    OracleError::CapExceeded {
        what: what.into(),
        needed,
        cap,
    }
}

/// Every module homomorphism `a → b`, as element maps.
fn homs(a: &OracleModule, b: &OracleModule, cap: usize) -> Result<Vec<ElementMap>, OracleError> {
    let k = a.uni.moduli.len();
    let n = b.uni.size;
    let total = (n as u128).pow(k as u32);
    if total > cap as u128 {
        return Err(too_many("homomorphism enumeration", format!("{n}^{k} image tuples"), cap));
    }
    let mut out = Vec::new();
    for code in 0..total as usize {
        let mut c = code;
        let images: Vec<usize> = (0..k)
            .map(|_| {
                let y = c % n;
                c /= n;
                y
            })
            .collect();
        if let Some(map) = extend(&a.uni, &b.uni, &images) {
            if commutes(a, b, &map) {
                out.push(map);
            }
        }
    }
    Ok(out)
}

fn to_matrix(a: &OracleModule, b: &OracleModule, map: &[usize]) -> IntMatrix {
    let cols: Vec<Vec<Integer>> = (0..a.uni.moduli.len())
        .map(|i| b.uni.decode(map[a.gen(i)]).into_iter().map(Integer::from).collect())
        .collect();
    IntMatrix::from_columns(b.uni.moduli.len(), &cols)
}

/// Every module homomorphism `a → b`, as matrices on the canonical
/// generators, in enumeration order.
pub fn enumerate_homs(a: &FiniteModule, b: &FiniteModule, cap: usize) -> Result<Vec<IntMatrix>, OracleError> {
    if a.order() != b.order() {
        return Err(OracleError::Mismatch("modules over different orders".into()));
    }
    let (oa, ob) = (OracleModule::new(a, cap)?, OracleModule::new(b, cap)?);
    Ok(homs(&oa, &ob, cap)?.iter().map(|m| to_matrix(&oa, &ob, m)).collect())
}

/// Automorphisms by backtracking over generator images: the first `j`
/// images of an automorphism must span a subgroup of the same size as the
/// first `j` generators.
fn automorphisms(a: &OracleModule, cap: usize) -> Result<Vec<ElementMap>, OracleError> {
    let uni = &a.uni;
    let k = uni.moduli.len();
    let gens: Vec<usize> = (0..k).map(|i| a.gen(i)).collect();
    let target: Vec<usize> = (0..=k)
        .map(|j| uni.span(&gens[..j]).iter().filter(|&&b| b).count())
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(k);
    let mut nodes = 0usize;
    fn go(
        a: &OracleModule,
        target: &[usize],
        images: &mut Vec<usize>,
        out: &mut Vec<ElementMap>,
        nodes: &mut usize,
        cap: usize,
    ) -> Result<(), OracleError> {
        let uni = &a.uni;
        let j = images.len();
        if j == uni.moduli.len() {
            if let Some(map) = extend(uni, uni, images) {
                if commutes(a, a, &map) {
                    out.push(map);
                    if out.len() > cap {
                        return Err(too_many("automorphism enumeration", format!("more than {cap} automorphisms"), cap));
                    }
                }
            }
            return Ok(());
        }
        for y in 0..uni.size {
            *nodes += 1;
            if *nodes > cap.saturating_mul(64) {
                return Err(too_many("automorphism search", "too many search nodes".into(), cap));
            }
            images.push(y);
            if uni.span(images).iter().filter(|&&b| b).count() == target[j + 1] {
                go(a, target, images, out, nodes, cap)?;
            }
            images.pop();
        }
        Ok(())
    }
    go(a, &target, &mut images, &mut out, &mut nodes, cap)?;
    Ok(out)
}

/// `#Aut m` by enumerating automorphisms.
pub fn aut_order(m: &FiniteModule, cap: usize) -> Result<Integer, OracleError> {
    Ok(Integer::from(automorphisms(&OracleModule::new(m, cap)?, cap)?.len()))
}

/// `#Aut G` for a finite abelian group by counting generating tuples
/// `(y_i)` with `d_i y_i = 0` that span `G`, one coordinate at a time with
/// the spanned subgroup as the state. No automorphism is ever listed.
pub fn aut_order_by_tuples(g: &FgAbGroup, cap: usize) -> Result<Integer, OracleError> {
    let uni = Universe::of_group(g, cap)?;
    let mut states: HashMap<Vec<bool>, Integer> = HashMap::new();
    states.insert(uni.span(&[]), Integer::from(1));
    for &d in &uni.moduli {
        let killed: Vec<usize> = (0..uni.size)
            .filter(|&y| {
                let mut acc = 0;
                for _ in 0..d {
                    acc = uni.add(acc, y);
                }
                acc == 0
            })
            .collect();
        let mut next: HashMap<Vec<bool>, Integer> = HashMap::new();
        for (set, count) in &states {
            let members: Vec<usize> = (0..uni.size).filter(|&x| set[x]).collect();
            let mut cache: HashMap<usize, Vec<bool>> = HashMap::new();
            for &y in &killed {
                // span(S ∪ {y}) depends on y only through its coset y + S.
                let rep = members.iter().map(|&s| uni.add(s, y)).min().expect("0 ∈ S");
                let grown = cache.entry(rep).or_insert_with(|| {
                    let mut gens = members.clone();
                    gens.push(y);
                    uni.span(&gens)
                });
                *next.entry(grown.clone()).or_insert_with(Integer::zero) += count;
            }
        }
        states = next;
    }
    let full = vec![true; uni.size];
    Ok(states.remove(&full).unwrap_or_else(Integer::zero))
}

/// Every subgroup of `Z/d_0 ⊕ …`, as sorted element lists, found by
/// adjoining one element at a time.
pub fn all_subgroups(moduli: &[u64], cap: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    let uni = Universe::new(moduli, cap)?;
    let start = uni.span(&[]);
    let mut seen: HashSet<Vec<bool>> = HashSet::from([start.clone()]);
    let mut queue = vec![start];
    let mut head = 0;
    while head < queue.len() {
        let set = queue[head].clone();
        head += 1;
        let members: Vec<usize> = (0..uni.size).filter(|&x| set[x]).collect();
        for y in (0..uni.size).filter(|&y| !set[y]) {
            let mut gens = members.clone();
            gens.push(y);
            let grown = uni.span(&gens);
            if seen.insert(grown.clone()) {
                queue.push(grown);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = queue
        .into_iter()
        .map(|s| (0..uni.size).filter(|&x| s[x]).collect())
        .collect();
    out.sort_by_key(|s| (s.len(), s.clone()));
    Ok(out)
}

/// `(#ker, #image)` of the map on finite groups given by `mat`.
fn kernel_image(mat: &IntMatrix, src: &Universe, dst: &Universe) -> (usize, usize) {
    let m = small_matrix(mat);
    let mut image = vec![false; dst.size];
    let mut ker = 0;
    for x in 0..src.size {
        let y = apply(&m, src, dst, x);
        if y == 0 {
            ker += 1;
        }
        image[y] = true;
    }
    (ker, image.iter().filter(|&&b| b).count())
}

/// `i(g) / i(f)` for a commensurability of finite abelian groups, with
/// `i(h) = (#dst / #image) / #ker` counted on elements.
pub fn correspondence_index_bruteforce(
    c: &Commensurability<FgAbGroup, AbHom>,
    cap: usize,
) -> Result<OracleReport, OracleError> {
    let (f, g) = (&c.base.left, &c.base.right);
    if f.src() != g.src() {
        return Err(OracleError::Mismatch("legs start at different objects".into()));
    }
    let w = Universe::of_group(f.src(), cap)?;
    let l = Universe::of_group(f.dst(), cap)?;
    let m = Universe::of_group(g.dst(), cap)?;
    let index = |mat: &IntMatrix, dst: &Universe| {
        let (ker, image) = kernel_image(mat, &w, dst);
        Rational::new(Integer::from(dst.size / image), Integer::from(ker))
    };
    Ok(OracleReport {
        computed: index(g.matrix(), &m) / index(f.matrix(), &l),
        method: Method::ElementCount,
        element_count: Integer::from(w.size * 2 + l.size + m.size),
    })
}

/// A correspondence `L ← W → M` of finite modules over one order.
#[derive(Debug, Clone)]
pub struct ModuleCorrespondence {
    pub apex: FiniteModule,
    pub left: FiniteModule,
    pub right: FiniteModule,
    pub f: IntMatrix,
    pub g: IntMatrix,
}

impl ModuleCorrespondence {
    /// `(L, id, ι)` for a submodule `L ⊆ M` with inclusion matrix `emb`.
    pub fn inclusion(l: &FiniteModule, m: &FiniteModule, emb: &IntMatrix) -> Self {
        Self {
            apex: l.clone(),
            left: l.clone(),
            right: m.clone(),
            f: IntMatrix::identity(l.grp().ngens()),
            g: emb.clone(),
        }
    }
}

/// `i(a(c))` for the correspondence `Aut L ← Aut c → Aut M`, where
/// `Aut c = {(λ, ν, μ) : λf = fν, μg = gν}`.
///
/// The triples are enumerated one `ν ∈ Aut W` at a time: the admissible `λ`
/// and `μ` are looked up by the maps `λ ∘ f` and `μ ∘ g` on elements of `W`.
pub fn aut_correspondence_index(c: &ModuleCorrespondence, cap: usize) -> Result<OracleReport, OracleError> {
    let w = OracleModule::new(&c.apex, cap)?;
    let l = OracleModule::new(&c.left, cap)?;
    let m = OracleModule::new(&c.right, cap)?;
    let (f, g) = (small_matrix(&c.f), small_matrix(&c.g));
    let f_map: Vec<usize> = (0..w.uni.size).map(|x| apply(&f, &w.uni, &l.uni, x)).collect();
    let g_map: Vec<usize> = (0..w.uni.size).map(|x| apply(&g, &w.uni, &m.uni, x)).collect();
    if !commutes(&w, &l, &f_map) || !commutes(&w, &m, &g_map) {
        return Err(OracleError::Mismatch("legs are not module maps".into()));
    }
    let (aut_w, aut_l, aut_m) = (automorphisms(&w, cap)?, automorphisms(&l, cap)?, automorphisms(&m, cap)?);
    let after = |outer: &[usize], inner: &[usize]| -> Vec<usize> { inner.iter().map(|&x| outer[x]).collect() };
    let group_by = |auts: &[ElementMap], leg: &[usize]| -> HashMap<Vec<usize>, usize> {
        let mut h = HashMap::new();
        for a in auts {
            *h.entry(after(a, leg)).or_insert(0) += 1;
        }
        h
    };
    let lambda_by_key = group_by(&aut_l, &f_map);
    let mu_by_key = group_by(&aut_m, &g_map);
    let identity_w: Vec<usize> = (0..w.uni.size).collect();

    let mut triples = 0usize;
    let (mut ker_l, mut ker_m) = (0usize, 0usize);
    let (mut keys_l, mut keys_m) = (HashSet::new(), HashSet::new());
    for nu in &aut_w {
        let key_l = after(&f_map, nu);
        let key_m = after(&g_map, nu);
        let n_l = lambda_by_key.get(&key_l).copied().unwrap_or(0);
        let n_m = mu_by_key.get(&key_m).copied().unwrap_or(0);
        if n_l == 0 || n_m == 0 {
            continue;
        }
        triples += n_l * n_m;
        // λ = 1 is admissible exactly when f ν = f; likewise for μ.
        if key_l == after(&f_map, &identity_w) {
            ker_l += n_m;
        }
        if key_m == after(&g_map, &identity_w) {
            ker_m += n_l;
        }
        keys_l.insert(key_l);
        keys_m.insert(key_m);
    }
    let image_l: usize = keys_l.iter().map(|k| lambda_by_key[k]).sum();
    let image_m: usize = keys_m.iter().map(|k| mu_by_key[k]).sum();
    debug_assert_eq!(triples, image_l * ker_l);
    let index = |total: usize, image: usize, ker: usize| Rational::new(Integer::from(total / image), Integer::from(ker));
    Ok(OracleReport {
        computed: index(aut_m.len(), image_m, ker_m) / index(aut_l.len(), image_l, ker_l),
        method: Method::TripleEnumeration,
        element_count: Integer::from(aut_w.len() + aut_l.len() + aut_m.len()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::order::FiniteGroup;

    fn cyc(orders: &[u64]) -> FiniteModule {
        FiniteModule::trivial_action(&FgAbGroup::from_cyclic_orders(0, orders)).unwrap()
    }

    #[test]
    fn hom_counts() {
        assert_eq!(enumerate_homs(&cyc(&[2]), &cyc(&[3]), 64).unwrap().len(), 1);
        assert_eq!(enumerate_homs(&cyc(&[2]), &cyc(&[4]), 64).unwrap().len(), 2);
        // #Hom(Z/4 ⊕ Z/2, Z/4) = gcd(4,4)·gcd(2,4).
        assert_eq!(enumerate_homs(&cyc(&[2, 4]), &cyc(&[4]), 64).unwrap().len(), 8);
        assert!(matches!(
            enumerate_homs(&cyc(&[2, 2, 2]), &cyc(&[64]), 100),
            Err(OracleError::CapExceeded { .. })
        ));
    }

    #[test]
    fn automorphism_counts_agree() {
        for orders in [vec![2u64], vec![8], vec![2, 2], vec![2, 4], vec![3, 3], vec![2, 2, 2], vec![2, 6]] {
            let g = FgAbGroup::from_cyclic_orders(0, &orders);
            let by_list = aut_order(&cyc(&orders), 1 << 16).unwrap();
            assert_eq!(by_list, aut_order_by_tuples(&g, 1 << 16).unwrap(), "{orders:?}");
        }
        assert_eq!(aut_order(&cyc(&[2, 2, 2]), 1 << 16).unwrap(), Integer::from(168));
        assert_eq!(aut_order_by_tuples(&FgAbGroup::from_cyclic_orders(0, &[2; 6]), 1 << 16).unwrap(), Integer::from(20_158_709_760u64));
    }

    #[test]
    fn swap_module_automorphisms() {
        let grp = FgAbGroup::from_cyclic_orders(0, &[3, 3]);
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let m = FiniteModule::over_group(&FiniteGroup::cyclic(2), &grp, vec![IntMatrix::identity(2), swap]).unwrap();
        // Invertible matrices [[a, b], [b, a]] over F_3: a² ≠ b².
        assert_eq!(aut_order(&m, 1 << 12).unwrap(), Integer::from(4));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&[4], 64).unwrap().len(), 3);
        assert_eq!(all_subgroups(&[2, 2], 64).unwrap().len(), 5);
        assert_eq!(all_subgroups(&[2, 2, 2], 64).unwrap().len(), 16);
        assert_eq!(all_subgroups(&[2, 4], 64).unwrap().len(), 8);
    }

    #[test]
    fn element_count_indices() {
        let z4 = FgAbGroup::cyclic(4);
        let two = AbHom::scalar(&z4, &Integer::from(2));
        let c = Commensurability {
            base: crate::corr::Correspondence::new(z4.clone(), two.clone(), AbHom::identity(&z4)),
            left_cert: two.certify().unwrap(),
            right_cert: AbHom::identity(&z4).certify().unwrap(),
        };
        let r = correspondence_index_bruteforce(&c, 64).unwrap();
        assert_eq!(r.computed, rat(1, 1));
        assert_eq!(r.method, Method::ElementCount);
    }

    #[test]
    fn inclusion_indices() {
        let m = cyc(&[4]);
        let (l, emb) = m.submodule(&[vec![Integer::from(2)]]).unwrap();
        let r = aut_correspondence_index(&ModuleCorrespondence::inclusion(&l, &m, &emb), 1 << 12).unwrap();
        assert_eq!(r.computed, rat(2, 1));
        let same = ModuleCorrespondence::inclusion(&m, &m, &IntMatrix::identity(1));
        assert_eq!(aut_correspondence_index(&same, 1 << 12).unwrap().computed, rat(1, 1));
    }
}
