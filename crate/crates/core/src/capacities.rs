//! Symplectic capacities c_k(X_Ω) of convex toric domains.
//!
//! Two independent routes compute the same number:
//!
//! * [`capacity_lattice`] minimizes the support function ‖v‖*_Ω over
//!   compositions v of k;
//! * [`capacity_polar`] finds the least T for which the polar slice Ω°_T
//!   holds a point with I(z) ≥ k.
//!
//! [`capacity_closed_form`] covers ellipsoids, balls and polydisks.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;
use crate::toric_geometry::{
    polar_slice, GeometryError, ScaledVertices, Shape, ToricDomain, DEFAULT_ENUM_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CapacityError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("{count} lattice vectors to enumerate exceeds the budget of {budget}")]
    KTooLargeForEnumeration { count: u128, budget: u64 },
    #[error("no closed form for {0} domains")]
    NotApplicable(&'static str),
    #[error("dimension mismatch: source has d={source_dim}, target has d={target_dim}")]
    DimensionMismatch { source_dim: usize, target_dim: usize },
    #[error(transparent)]
    Geometry(GeometryError),
}

impl From<GeometryError> for CapacityError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::EnumerationBudgetExceeded { budget } => {
                CapacityError::KTooLargeForEnumeration {
                    count: u128::from(budget) + 1,
                    budget,
                }
            }
            other => CapacityError::Geometry(other),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CapacityConfig {
    /// Maximum number of lattice vectors a single computation may visit.
    pub enum_budget: u64,
}

impl Default for CapacityConfig {
    fn default() -> Self {
        CapacityConfig {
            enum_budget: DEFAULT_ENUM_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Lattice,
    Polar,
    ClosedForm,
}

/// c_k together with a composition v of k (canonical coordinates) with
/// ‖v‖*_Ω = c_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCapacity {
    pub value: Rational,
    pub witness: Vec<u64>,
}

/// c_k together with a point z ∈ Ω°_{c_k} with I(z) ≥ k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarCapacity {
    pub value: Rational,
    pub witness_z: Vec<Rational>,
}

impl PolarCapacity {
    /// The lattice corner −z.
    pub fn corner(&self) -> Vec<u64> {
        self.witness_z
            .iter()
            .map(|x| (-x).floor().try_into().expect("corner coordinates are small"))
            .collect()
    }
}

/// C(n, r), saturating.
pub(crate) fn binomial(n: u64, r: u64) -> u128 {
    let r = r.min(n.saturating_sub(r));
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul(u128::from(n - i)) / u128::from(i + 1);
    }
    acc
}

fn check_budget(count: u128, config: &CapacityConfig) -> Result<(), CapacityError> {
    if count > u128::from(config.enum_budget) {
        return Err(CapacityError::KTooLargeForEnumeration {
            count,
            budget: config.enum_budget,
        });
    }
    Ok(())
}

/// Calls `f` on every composition of `k` into `parts` nonnegative parts, in
/// lexicographically decreasing order.
fn for_each_composition(k: u64, parts: usize, mut f: impl FnMut(&[u64])) {
    fn rec(rest: u64, i: usize, v: &mut [u64], f: &mut impl FnMut(&[u64])) {
        if i + 1 == v.len() {
            v[i] = rest;
            f(v);
            return;
        }
        for x in (0..=rest).rev() {
            v[i] = x;
            rec(rest - x, i + 1, v, f);
        }
    }
    let mut v = vec![0; parts];
    rec(k, 0, &mut v, &mut f);
}

/// c_k(X_Ω) = min{‖v‖*_Ω : v ∈ ℕ^d, Σ v_i = k}.
///
/// Ties are broken toward the lexicographically greatest minimizer.
pub fn capacity_lattice(
    domain: &ToricDomain,
    k: u64,
    config: &CapacityConfig,
) -> Result<LatticeCapacity, CapacityError> {
    if k == 0 {
        return Err(CapacityError::ZeroK);
    }
    let d = domain.dimension();
    check_budget(binomial(k + d as u64 - 1, d as u64 - 1), config)?;
    if let Some(sc) = domain.scaled().filter(|sc| sc.covers(k)) {
        let mut best: Option<(i128, Vec<u64>)> = None;
        for_each_composition(k, d, |v| {
            let s = sc.support(v).expect("entries are covered");
            if best.as_ref().is_none_or(|(b, _)| s < *b) {
                best = Some((s, v.to_vec()));
            }
        });
        let (s, witness) = best.expect("at least one composition");
        return Ok(LatticeCapacity {
            value: sc.unscale(s),
            witness,
        });
    }
    let mut best: Option<LatticeCapacity> = None;
    for_each_composition(k, d, |v| {
        let s = domain.support_lattice(v);
        if best.as_ref().is_none_or(|b| s < b.value) {
            best = Some(LatticeCapacity {
                value: s,
                witness: v.to_vec(),
            });
        }
    });
    Ok(best.expect("at least one composition"))
}

/// c_k(X_Ω) = inf{T ≥ 0 : ∃ z ∈ Ω°_T, I(z) ≥ k}.
///
/// The infimum is attained at the support value of a lattice corner with
/// Σ v_i ≥ k, and lowering coordinates never raises the support, so the
/// values ‖v‖* with Σ v_i = k form a complete candidate set. The predicate
/// is monotone in T, so a galloping search from the smallest candidate
/// finds the least one that passes.
pub fn capacity_polar(
    domain: &ToricDomain,
    k: u64,
    config: &CapacityConfig,
) -> Result<PolarCapacity, CapacityError> {
    if k == 0 {
        return Err(CapacityError::ZeroK);
    }
    let d = domain.dimension();
    check_budget(binomial(k + d as u64 - 1, d as u64 - 1), config)?;
    let candidates = match domain.scaled().filter(|sc| sc.covers(k)) {
        Some(sc) => {
            let mut c = Vec::new();
            for_each_composition(k, d, |v| c.push(sc.support(v).expect("entries are covered")));
            c.sort_unstable();
            c.dedup();
            Candidates::Scaled(sc, c)
        }
        None => {
            let mut c = Vec::new();
            for_each_composition(k, d, |v| c.push(domain.support_lattice(v)));
            c.sort();
            c.dedup();
            Candidates::Exact(c)
        }
    };

    let reaches = |t: &Rational| -> Result<Option<Vec<Rational>>, CapacityError> {
        let m = polar_slice(domain, t.clone())?.max_lattice_functional_budgeted(config.enum_budget)?;
        Ok((m.value >= k).then(|| m.witness_z()))
    };

    // Gallop to bracket the first passing index, then bisect.
    let mut lo = 0usize;
    let mut step = 1usize;
    let mut hi = loop {
        let probe = (lo + step - 1).min(candidates.len() - 1);
        if reaches(&candidates.get(probe))?.is_some() {
            break probe;
        }
        if probe == candidates.len() - 1 {
            unreachable!("the largest candidate always reaches k");
        }
        lo = probe + 1;
        step *= 2;
    };
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if reaches(&candidates.get(mid))?.is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let value = candidates.get(hi);
    let witness_z = reaches(&value)?.expect("passing candidate");
    Ok(PolarCapacity { value, witness_z })
}

/// Sorted distinct support values, kept scaled when possible and converted
/// only when probed.
enum Candidates<'a> {
    Scaled(&'a ScaledVertices, Vec<i128>),
    Exact(Vec<Rational>),
}

impl Candidates<'_> {
    fn len(&self) -> usize {
        match self {
            Candidates::Scaled(_, c) => c.len(),
            Candidates::Exact(c) => c.len(),
        }
    }

    fn get(&self, i: usize) -> Rational {
        match self {
            Candidates::Scaled(sc, c) => sc.unscale(c[i]),
            Candidates::Exact(c) => c[i].clone(),
        }
    }
}

/// The k-th smallest element of the multiset {m·a_i : m ≥ 1}, which is
/// min{T : Σ ⌊T/a_i⌋ ≥ k}.
fn kth_action(a: &[Rational], k: u64) -> Rational {
    let mut all: Vec<Rational> = a
        .iter()
        .flat_map(|ai| (1..=k).map(move |m| ai * Rational::from(m)))
        .collect();
    all.sort();
    all.swap_remove(k as usize - 1)
}

/// Closed forms: E(a) gives the k-th smallest m·a_i; D(a) gives k·a_1;
/// B_a gives ⌈k/d⌉·a.
pub fn capacity_closed_form(domain: &ToricDomain, k: u64) -> Result<Rational, CapacityError> {
    if k == 0 {
        return Err(CapacityError::ZeroK);
    }
    match domain.shape() {
        Shape::Ellipsoid { .. } => Ok(kth_action(domain.extents(), k)),
        Shape::Ball { a, dimension } => Ok(a * Rational::from(k.div_ceil(*dimension as u64))),
        Shape::Polydisk { .. } => Ok(&domain.extents()[0] * Rational::from(k)),
        Shape::Polytope { .. } => Err(CapacityError::NotApplicable("polytope")),
    }
}

/// Lexicographically greatest composition of k with v_i ≤ caps_i.
fn greedy_composition(caps: &[u64], k: u64) -> Vec<u64> {
    let mut rest = k;
    caps.iter()
        .map(|&c| {
            let x = c.min(rest);
            rest -= x;
            x
        })
        .collect()
}

fn closed_form_witness(domain: &ToricDomain, k: u64, c: &Rational) -> Vec<u64> {
    match domain.shape() {
        Shape::Polydisk { .. } => {
            let mut v = vec![0; domain.dimension()];
            v[0] = k;
            v
        }
        _ => {
            let caps: Vec<u64> = domain
                .extents()
                .iter()
                .map(|a| (c / a).floor().try_into().unwrap_or(u64::MAX))
                .collect();
            greedy_composition(&caps, k)
        }
    }
}

/// Trims a lattice vector down to coordinate sum k, last coordinates first.
fn trim_to_sum(mut v: Vec<u64>, k: u64) -> Vec<u64> {
    let mut excess = v.iter().sum::<u64>().saturating_sub(k);
    for x in v.iter_mut().rev() {
        let cut = (*x).min(excess);
        *x -= cut;
        excess -= cut;
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapacityEntry {
    pub k: u64,
    pub c_k: Rational,
    pub witness_vector: Vec<u64>,
    pub witness_t: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapacityReport {
    pub domain: ToricDomain,
    pub k_max: u64,
    pub method: Method,
    pub entries: Vec<CapacityEntry>,
}

impl CapacityReport {
    pub fn values(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| e.c_k.clone()).collect()
    }
}

/// One capacity with a witness composition of k.
pub fn capacity(
    domain: &ToricDomain,
    k: u64,
    method: Method,
    config: &CapacityConfig,
) -> Result<CapacityEntry, CapacityError> {
    let (c_k, witness_vector) = match method {
        Method::Lattice => {
            let r = capacity_lattice(domain, k, config)?;
            (r.value, r.witness)
        }
        Method::Polar => {
            let r = capacity_polar(domain, k, config)?;
            let corner = trim_to_sum(r.corner(), k);
            (r.value, corner)
        }
        Method::ClosedForm => {
            let c = capacity_closed_form(domain, k)?;
            let w = closed_form_witness(domain, k, &c);
            (c, w)
        }
    };
    Ok(CapacityEntry {
        k,
        witness_t: c_k.clone(),
        c_k,
        witness_vector,
    })
}

pub fn capacity_sequence(
    domain: &ToricDomain,
    k_max: u64,
    method: Method,
    config: &CapacityConfig,
) -> Result<CapacityReport, CapacityError> {
    if k_max == 0 {
        return Err(CapacityError::ZeroK);
    }
    let entries = (1..=k_max)
        .map(|k| capacity(domain, k, method, config))
        .collect::<Result<Vec<_>, _>>()?;
    assert!(
        entries.windows(2).all(|w| w[0].c_k <= w[1].c_k),
        "capacity sequence must be nondecreasing"
    );
    Ok(CapacityReport {
        domain: domain.clone(),
        k_max,
        method,
        entries,
    })
}

/// Closed form when the shape has one, lattice enumeration otherwise.
pub fn fastest_method(domain: &ToricDomain) -> Method {
    match domain.shape() {
        Shape::Polytope { .. } => Method::Lattice,
        _ => Method::ClosedForm,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    Symplectic,
    Contact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Obstructed {
        first_k: u64,
        source_value: Rational,
        target_value: Rational,
    },
    NoObstructionFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub source: ToricDomain,
    pub target: ToricDomain,
    pub k_max: u64,
    pub kind: ObstructionKind,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

pub const NOT_SUFFICIENT_NOTE: &str =
    "no obstruction found up to k_max; capacities are necessary conditions only, so this does not prove an embedding exists";

/// First k ≤ k_max with source value > target value, given both sequences.
pub(crate) fn first_violation(source: &[Rational], target: &[Rational]) -> Verdict {
    source
        .iter()
        .zip(target)
        .enumerate()
        .find(|(_, (s, t))| s > t)
        .map_or(Verdict::NoObstructionFound, |(i, (s, t))| Verdict::Obstructed {
            first_k: i as u64 + 1,
            source_value: s.clone(),
            target_value: t.clone(),
        })
}

/// Scans c_k for k = 1..=k_max: an embedding X_source ↪ X_target forces
/// c_k(source) ≤ c_k(target) for every k.
pub fn obstruct_embedding(
    source: &ToricDomain,
    target: &ToricDomain,
    k_max: u64,
    config: &CapacityConfig,
) -> Result<ObstructionReport, CapacityError> {
    if source.dimension() != target.dimension() {
        return Err(CapacityError::DimensionMismatch {
            source_dim: source.dimension(),
            target_dim: target.dimension(),
        });
    }
    let s = capacity_sequence(source, k_max, fastest_method(source), config)?.values();
    let t = capacity_sequence(target, k_max, fastest_method(target), config)?.values();
    let verdict = first_violation(&s, &t);
    let notes = match verdict {
        Verdict::NoObstructionFound => vec![NOT_SUFFICIENT_NOTE.to_string()],
        Verdict::Obstructed { .. } => vec![],
    };
    Ok(ObstructionReport {
        source: source.clone(),
        target: target.clone(),
        k_max,
        kind: ObstructionKind::Symplectic,
        verdict,
        notes,
    })
}
