//! Seeded property checks with machine-readable reports.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use commensura_core::abelian::sample::{random_commensurability, random_group};
use commensura_core::corr::{compose_commensurabilities, AbelianContext};
use commensura_core::finring::{catalog, check_unit_isogeny, unit_quotient_exponent, FiniteRing};
use commensura_core::linalg::Integer;
use commensura_core::oracle::correspondence_index_bruteforce;
use commensura_core::order::{ie_commensurability, sample_self_commensurability, FiniteGroup, OrderLattice, ZOrder};

use crate::error::CliError;
use crate::wire;

/// Outcome of a check: the JSON body, its text rendering, and whether
/// every case passed.
pub struct CheckReport {
    pub result: Value,
    pub text: String,
    pub passed: bool,
}

fn finish(name: &str, cases: usize, failures: Vec<Value>, extra: Value, text_extra: &str) -> CheckReport {
    let failed = failures.len();
    let passed = failed == 0;
    let mut result = json!({
        "check": name,
        "cases": cases,
        "passed": cases - failed,
        "failures": failures,
    });
    if let (Value::Object(r), Value::Object(e)) = (&mut result, extra) {
        r.extend(e);
    }
    let status = if passed { "pass" } else { "FAIL" };
    let text = format!("{name}: {}/{cases} pass [{status}]{text_extra}", cases - failed);
    CheckReport { result, text, passed }
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum GroupName {
    C2,
    C3,
    S3,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
pub enum LatticeKind {
    Regular,
    Permutation,
}

fn lattice_for(group: GroupName, kind: LatticeKind) -> Result<OrderLattice, CliError> {
    let (g, perms) = match group {
        GroupName::C2 => (FiniteGroup::cyclic(2), rotations(2)),
        GroupName::C3 => (FiniteGroup::cyclic(3), rotations(3)),
        GroupName::S3 => FiniteGroup::symmetric(3),
    };
    let order = ZOrder::group_ring(&g);
    Ok(match kind {
        LatticeKind::Regular => OrderLattice::regular(&order),
        LatticeKind::Permutation => OrderLattice::permutation(&order, &perms)?,
    })
}

fn rotations(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|k| (0..n).map(|i| (i + k) % n).collect()).collect()
}

/// `i(e(c)) = 1` for sampled self-commensurabilities `(L, id, α)`; trial
/// `t` uses sampling seed `seed + t`.
pub fn welldef(group: GroupName, kind: LatticeKind, trials: usize, seed: u64) -> Result<CheckReport, CliError> {
    let l = lattice_for(group, kind)?;
    let mut failures = Vec::new();
    for t in 0..trials {
        let s = seed.wrapping_add(t as u64);
        let sample = sample_self_commensurability(&l, s)?;
        let v = ie_commensurability(&sample.commensurability)?;
        if !v.is_one() {
            failures.push(json!({ "trial": t, "seed": s, "value": wire::rational(&v), "alpha": wire::matrix(&sample.alpha) }));
        }
    }
    let extra = json!({ "group": format!("{group:?}"), "lattice": format!("{kind:?}").to_lowercase() });
    Ok(finish("welldef", trials, failures, extra, ""))
}

/// Every catalogued ring homomorphism induces an isogeny of unit groups
/// that keeps surjectivity.
pub fn theorem_o(cap: usize) -> Result<CheckReport, CliError> {
    let entries = catalog()?;
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for e in &entries {
        let r = check_unit_isogeny(&e.hom, cap)?;
        let row = json!({
            "name": e.name,
            "ring_index": wire::rational(&r.ring_index),
            "ring_surjective": r.ring_surjective,
            "unit_kernel": wire::integer(&r.unit_kernel),
            "unit_index": wire::rational(&r.unit_index()),
            "surjectivity_preserved": r.surjectivity_preserved,
        });
        if !r.passes() {
            failures.push(row.clone());
        }
        rows.push(row);
    }
    Ok(finish("theorem-o", entries.len(), failures, json!({ "homomorphisms": rows }), ""))
}

/// The unit-quotient exponent of `M_n(F_q)` divides `n`.
pub fn theorem_w(n: usize, q: u64, cap: usize) -> Result<CheckReport, CliError> {
    let ring = FiniteRing::matrix_ring(q, n)?;
    let e = unit_quotient_exponent(&ring, cap)?;
    let divides = (Integer::from(n) % &e).is_zero();
    let failures = if divides { vec![] } else { vec![json!({ "n": n, "q": q, "exponent": wire::integer(&e) })] };
    let extra = json!({ "n": n, "q": q, "exponent": wire::integer(&e), "divides": divides });
    Ok(finish("theorem-w", 1, failures, extra, &format!("; exponent {e} for M_{n}(F_{q})")))
}

/// `i(d∘c) = i(d) i(c)` and `i(c⁻¹) = 1/i(c)` on random commensurability
/// pairs of finite abelian groups, with every index recounted on elements.
pub fn multiplicativity(trials: usize, seed: u64, cap: usize) -> Result<CheckReport, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for t in 0..trials {
        let [l, m, n] = [0; 3].map(|_| random_group(&mut rng, 0, 64));
        let c = random_commensurability(&mut rng, &l, &m, 64);
        let d = random_commensurability(&mut rng, &m, &n, 64);
        let dc = compose_commensurabilities(&AbelianContext, &c, &d)?;
        let mut problems = Vec::new();
        if dc.index() != c.index() * d.index() {
            problems.push("i(d∘c) ≠ i(d)·i(c)");
        }
        if c.inverse().index() != c.index().recip() {
            problems.push("i(c⁻¹) ≠ 1/i(c)");
        }
        for x in [&c, &d, &dc] {
            if correspondence_index_bruteforce(x, cap)?.computed != x.index() {
                problems.push("element-count index disagrees");
            }
        }
        if !problems.is_empty() {
            failures.push(json!({
                "trial": t,
                "problems": problems,
                "c": wire::correspondence(&c.base),
                "d": wire::correspondence(&d.base),
            }));
        }
    }
    Ok(finish("multiplicativity", trials, failures, json!({}), ""))
}
