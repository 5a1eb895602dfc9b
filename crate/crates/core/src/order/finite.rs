//! Finite modules, mixed lattice-plus-torsion modules, and automorphism
//! counting.

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lattice::check_action;
use super::{FiniteGroup, OrderError, OrderLattice, ZOrder};
use crate::abelian::{aut_order, from_presentation, AbHom, ElementIndexer, FgAbGroup, Subgroup};
use crate::linalg::{IntMatrix, Integer, Rational};

/// Default bound on the number of endomorphism candidates examined when
/// enumerating automorphisms.
pub const DEFAULT_AUT_CAP: usize = 4096;

/// A finite module: a finite abelian group with action matrices defined
/// modulo its invariant factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    order: ZOrder,
    grp: FgAbGroup,
    action: Vec<IntMatrix>,
}

impl FiniteModule {
    pub fn new(order: ZOrder, grp: FgAbGroup, action: Vec<IntMatrix>) -> Result<Self, OrderError> {
        if !grp.is_finite() {
            return Err(OrderError::InvalidModule(format!("{grp} is not finite")));
        }
        let mut reduced = Vec::with_capacity(action.len());
        for a in action {
            let h = AbHom::new(grp.clone(), grp.clone(), a)
                .map_err(|e| OrderError::InvalidModule(e.to_string()))?;
            reduced.push(h.matrix().clone());
        }
        let eq = |a: &IntMatrix, b: &IntMatrix| {
            (0..grp.ngens()).all(|j| {
                let diff: Vec<Integer> = a.column(j).iter().zip(b.column(j)).map(|(x, y)| x - y).collect();
                grp.is_zero_element(&diff)
            })
        };
        check_action(&order, grp.ngens(), &reduced, eq)?;
        Ok(Self {
            order,
            grp,
            action: reduced,
        })
    }

    /// `grp` as a `Z`-module.
    pub fn trivial_action(grp: &FgAbGroup) -> Result<Self, OrderError> {
        Self::new(ZOrder::integers(), grp.clone(), vec![IntMatrix::identity(grp.ngens())])
    }

    /// `Z[G]`-module where group element `g` acts by `mats[g]`.
    pub fn over_group(g: &FiniteGroup, grp: &FgAbGroup, mats: Vec<IntMatrix>) -> Result<Self, OrderError> {
        Self::new(ZOrder::group_ring(g), grp.clone(), mats)
    }

    pub fn zero(order: &ZOrder) -> Self {
        let action = vec![IntMatrix::zeros(0, 0); order.zrank()];
        Self::new(order.clone(), FgAbGroup::trivial(), action).expect("zero module")
    }

    pub fn order(&self) -> &ZOrder {
        &self.order
    }

    pub fn grp(&self) -> &FgAbGroup {
        &self.grp
    }

    pub fn action(&self) -> &[IntMatrix] {
        &self.action
    }

    pub fn size(&self) -> Integer {
        self.grp.torsion_order()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, OrderError> {
        if self.order != other.order {
            return Err(OrderError::DifferentOrders);
        }
        // The concatenated generators need not be in invariant-factor form,
        // so rebuild the sum through its presentation.
        let rel = self.grp.relation_columns().block_diag(&other.grp.relation_columns());
        let gens = rel.rows();
        let sub = Subgroup::from_lattice(&IntMatrix::identity(gens), &rel);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| transport(&sub, &a.block_diag(b)))
            .collect();
        Self::new(self.order.clone(), sub.group().clone(), action)
    }

    /// The submodule generated (as a subgroup) by `gens`, which must be
    /// stable under the action. Returns the submodule in its own canonical
    /// coordinates and the `ngens(self) × ngens(sub)` inclusion matrix.
    pub fn submodule(&self, gens: &[Vec<Integer>]) -> Result<(Self, IntMatrix), OrderError> {
        let n = self.grp.ngens();
        if gens.iter().any(|g| g.len() != n) {
            return Err(OrderError::InvalidModule("generator of the wrong length".into()));
        }
        let rel = self.grp.relation_columns();
        let k = IntMatrix::from_columns(n, gens).hstack(&rel);
        let sub = Subgroup::from_lattice(&k, &rel);
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            let mut cols = Vec::with_capacity(sub.group().ngens());
            for e in sub.embedding.columns() {
                cols.push(sub.coordinates(&a.mul_vec(&e)).ok_or(OrderError::NotSubmodule)?);
            }
            action.push(IntMatrix::from_columns(sub.group().ngens(), &cols));
        }
        let module = Self::new(self.order.clone(), sub.group().clone(), action)?;
        Ok((module, sub.embedding.clone()))
    }

    /// Whether every basis element of the order acts as an integer scalar,
    /// in which case module automorphisms are exactly group automorphisms.
    pub fn acts_by_scalars(&self) -> bool {
        let n = self.grp.ngens();
        self.action.iter().all(|a| {
            let k = if n == 0 { Integer::zero() } else { a.get(0, 0).clone() };
            (0..n).all(|j| {
                let mut diff = a.column(j);
                diff[j] -= &k;
                self.grp.is_zero_element(&diff)
            })
        })
    }

    /// Element indexer with `A_i x` precomputed for every element `x`.
    pub(crate) fn tables(&self) -> Result<(ElementIndexer, Vec<Vec<usize>>), OrderError> {
        let idx = ElementIndexer::new(&self.grp, usize::MAX >> 1).map_err(|e| OrderError::CapExceeded {
            what: "element table".into(),
            needed: e.to_string(),
            cap: usize::MAX >> 1,
        })?;
        let acts = self
            .action
            .iter()
            .map(|a| (0..idx.size()).map(|x| idx.index_of(&a.mul_vec(&idx.element_int(x)))).collect())
            .collect();
        Ok((idx, acts))
    }
}

/// Re-expresses a matrix on presentation generators in the canonical
/// coordinates of `sub` (which spans the whole presented group).
fn transport(sub: &Subgroup, a: &IntMatrix) -> IntMatrix {
    let cols: Vec<Vec<Integer>> = sub
        .embedding
        .columns()
        .iter()
        .map(|e| sub.coordinates(&a.mul_vec(e)).expect("the presented group is stable"))
        .collect();
    IntMatrix::from_columns(sub.group().ngens(), &cols)
}

/// Direct sums of a lattice and a finite module with block-diagonal action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MixedModule {
    Lattice(OrderLattice),
    Finite(FiniteModule),
    Sum(OrderLattice, FiniteModule),
}

impl MixedModule {
    pub fn sum(lattice: OrderLattice, finite: FiniteModule) -> Result<Self, OrderError> {
        if lattice.order() != finite.order() {
            return Err(OrderError::DifferentOrders);
        }
        Ok(Self::Sum(lattice, finite))
    }

    /// A finitely generated abelian group as a `Z`-module.
    pub fn from_abelian(g: &FgAbGroup) -> Self {
        let z = ZOrder::integers();
        let lattice = OrderLattice::new(z.clone(), g.rank(), vec![IntMatrix::identity(g.rank())])
            .expect("trivial action");
        let torsion = FgAbGroup::new(0, g.torsion().to_vec()).expect("torsion part of a valid group");
        let finite = FiniteModule::trivial_action(&torsion).expect("trivial action");
        match (g.rank(), g.is_finite()) {
            (0, _) => Self::Finite(finite),
            (_, _) if torsion.is_trivial() => Self::Lattice(lattice),
            _ => Self::Sum(lattice, finite),
        }
    }

    pub fn order(&self) -> &ZOrder {
        match self {
            Self::Lattice(l) | Self::Sum(l, _) => l.order(),
            Self::Finite(f) => f.order(),
        }
    }
}

/// The `Z`-torsion submodule with its inherited action.
pub fn torsion_submodule(m: &MixedModule) -> FiniteModule {
    match m {
        MixedModule::Lattice(l) => FiniteModule::zero(l.order()),
        MixedModule::Finite(f) | MixedModule::Sum(_, f) => f.clone(),
    }
}

/// All module automorphisms of `m`, as matrices in its canonical
/// coordinates. Candidates are the tuples of generator images killed by the
/// generator orders; more than `cap` of them is an error.
pub fn aut_enumerate(m: &FiniteModule, cap: usize) -> Result<Vec<IntMatrix>, OrderError> {
    let cands = candidate_images(m, cap)?;
    let (idx, acts) = m.tables()?;
    let k = cands.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    loop {
        let img: Vec<usize> = choice.iter().zip(&cands).map(|(&c, list)| list[c]).collect();
        if commutes(&idx, &acts, &img) && idx.span(&img).iter().all(|&b| b) {
            let cols: Vec<Vec<Integer>> = img.iter().map(|&x| idx.element_int(x)).collect();
            out.push(IntMatrix::from_columns(k, &cols));
        }
        if !advance(&mut choice, &cands) {
            break;
        }
    }
    Ok(out)
}

/// For each generator, the elements its image may take.
fn candidate_images(m: &FiniteModule, cap: usize) -> Result<Vec<Vec<usize>>, OrderError> {
    let idx = ElementIndexer::from_moduli(moduli_u64(m.grp()));
    let cands: Vec<Vec<usize>> = idx
        .moduli()
        .iter()
        .map(|&d| (0..idx.size()).filter(|&x| idx.scale(d, x) == 0).collect())
        .collect();
    let mut total = Integer::one();
    for c in &cands {
        total *= Integer::from(c.len());
    }
    if total > Integer::from(cap) {
        return Err(OrderError::CapExceeded {
            what: "automorphism enumeration".into(),
            needed: total.to_string(),
            cap,
        });
    }
    Ok(cands)
}

pub(crate) fn moduli_u64(g: &FgAbGroup) -> Vec<u64> {
    g.torsion().iter().map(|d| d.to_u64().expect("small finite group")).collect()
}

/// Applies the endomorphism with generator images `img` to element `x`.
pub(crate) fn apply_images(idx: &ElementIndexer, img: &[usize], x: usize) -> usize {
    let coords = idx.element(x);
    let mut acc = 0usize;
    for (c, &g) in coords.iter().zip(img) {
        acc = idx.add(acc, idx.scale(*c, g));
    }
    acc
}

fn commutes(idx: &ElementIndexer, acts: &[Vec<usize>], img: &[usize]) -> bool {
    let gens: Vec<usize> = (0..img.len())
        .map(|j| {
            let mut e = vec![0u64; img.len()];
            e[j] = 1;
            idx.index(&e)
        })
        .collect();
    acts.iter().all(|act| {
        gens.iter()
            .zip(img)
            .all(|(&g, &im)| apply_images(idx, img, act[g]) == act[im])
    })
}

fn advance(choice: &mut [usize], cands: &[Vec<usize>]) -> bool {
    for (c, list) in choice.iter_mut().zip(cands) {
        *c += 1;
        if *c < list.len() {
            return true;
        }
        *c = 0;
    }
    false
}

/// `#Aut m`: the closed formula when the order acts by scalars (module and
/// group automorphisms then coincide), enumeration otherwise.
pub fn aut_count(m: &FiniteModule, cap: usize) -> Result<Integer, OrderError> {
    if m.acts_by_scalars() {
        Ok(aut_order(m.grp())?)
    } else {
        Ok(Integer::from(aut_enumerate(m, cap)?.len()))
    }
}

/// `ia(L, M) = #Aut M / #Aut L` for finite modules.
pub fn ia_finite(l: &FiniteModule, m: &FiniteModule, cap: usize) -> Result<Rational, OrderError> {
    if l.order() != m.order() {
        return Err(OrderError::DifferentOrders);
    }
    Ok(Rational::new(aut_count(m, cap)?, aut_count(l, cap)?))
}

/// Whether `#(L/mL) = |m|^rank`; false for `m = 0`, where the quotient is
/// infinite for nonzero lattices.
pub fn lemma_p_check(l: &OrderLattice, m: &Integer) -> bool {
    if m.is_zero() {
        return l.zrank() == 0;
    }
    let quotient = from_presentation(&IntMatrix::scalar(l.zrank(), m));
    quotient.order() == Some(num_traits::pow(m.abs(), l.zrank()))
}
