//! Contact capacities [c]_k of prequantized toric domains X_Ω × S¹ and the
//! classical ball squeezing criteria.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::capacities::{
    capacity_sequence, fastest_method, first_violation, CapacityConfig, CapacityError, ObstructionKind,
    ObstructionReport, Verdict, NOT_SUFFICIENT_NOTE,
};
use crate::rational::Rational;
use crate::toric_geometry::{GeometryError, ToricDomain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContactError {
    #[error("smallest prime factor needs an integer ≥ 2, got {0}")]
    InvalidInput(u64),
    #[error("domain is not big: ‖Ω°_1‖_∞ = {polar_inf_norm} is not < 1")]
    NotBig { polar_inf_norm: Rational },
    #[error("override row has {found} values but k_max is {expected}")]
    OverrideLengthMismatch { expected: u64, found: usize },
    #[error("squeezing criteria need 0 < r2 ≤ R2, got r2={r2}, R2={big_r2}")]
    InvalidOrder { r2: Rational, big_r2: Rational },
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Least prime dividing `n`, by trial division.
pub fn smallest_prime_factor(n: u64) -> Result<u64, ContactError> {
    if n < 2 {
        return Err(ContactError::InvalidInput(n));
    }
    if n.is_multiple_of(2) {
        return Ok(2);
    }
    let mut p = 3u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            return Ok(p);
        }
        p += 2;
    }
    Ok(n)
}

/// X_Ω × S¹ is big iff ‖Ω°_1‖_∞ < 1 (strict).
pub fn is_big(domain: &ToricDomain) -> Result<bool, ContactError> {
    Ok(domain.polar_inf_norm()? < 1)
}

fn require_big(domain: &ToricDomain) -> Result<Rational, ContactError> {
    let norm = domain.polar_inf_norm()?;
    if norm >= 1 {
        return Err(ContactError::NotBig {
            polar_inf_norm: norm,
        });
    }
    Ok(norm)
}

/// ℓ/p_ℓ < 1/‖Ω°_1‖_∞, i.e. (ℓ/p_ℓ)·norm < 1.
fn admissible_odd(ell: u64, norm: &Rational) -> bool {
    let p = smallest_prime_factor(ell).expect("ell ≥ 3");
    Rational::from(ell / p) * norm < Rational::one()
}

/// Least odd ℓ ≥ max(c, 3) with ℓ/p_ℓ < 1/norm. Odd primes always qualify
/// when norm < 1, so the scan terminates.
pub fn contact_from_capacity(c: &Rational, norm: &Rational) -> u64 {
    let start = c.ceil().try_into().unwrap_or(u64::MAX).max(3);
    let mut ell = if start % 2 == 0 { start + 1 } else { start };
    while !admissible_odd(ell, norm) {
        ell += 2;
    }
    ell
}

/// [c]_k(X_Ω × S¹) = min{ℓ odd : ℓ/p_ℓ < 1/‖Ω°_1‖_∞, ℓ ≥ c_k(X_Ω)}.
///
/// `c_k_override` replaces the internally computed c_k.
pub fn contact_capacity(
    domain: &ToricDomain,
    k: u64,
    c_k_override: Option<Rational>,
    config: &CapacityConfig,
) -> Result<u64, ContactError> {
    let norm = require_big(domain)?;
    let c = match c_k_override {
        Some(c) => c,
        None => crate::capacities::capacity(domain, k, fastest_method(domain), config)?.c_k,
    };
    Ok(contact_from_capacity(&c, &norm))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CapacitySource {
    Computed,
    Override,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactEntry {
    pub k: u64,
    pub c_k: Rational,
    pub c_k_source: CapacitySource,
    pub contact_c_k: u64,
    pub spf: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactCapacityReport {
    pub domain: ToricDomain,
    pub polar_inf_norm: Rational,
    pub big: bool,
    pub entries: Vec<ContactEntry>,
}

impl ContactCapacityReport {
    pub fn contact_values(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.contact_c_k).collect()
    }
}

pub fn contact_sequence(
    domain: &ToricDomain,
    k_max: u64,
    c_row_override: Option<&[Rational]>,
    config: &CapacityConfig,
) -> Result<ContactCapacityReport, ContactError> {
    let norm = require_big(domain)?;
    let (row, source) = match c_row_override {
        Some(row) => {
            if row.len() as u64 != k_max {
                return Err(ContactError::OverrideLengthMismatch {
                    expected: k_max,
                    found: row.len(),
                });
            }
            (row.to_vec(), CapacitySource::Override)
        }
        None => (
            capacity_sequence(domain, k_max, fastest_method(domain), config)?.values(),
            CapacitySource::Computed,
        ),
    };
    let entries = row
        .into_iter()
        .zip(1..)
        .map(|(c_k, k)| {
            let ell = contact_from_capacity(&c_k, &norm);
            ContactEntry {
                k,
                c_k,
                c_k_source: source,
                contact_c_k: ell,
                spf: smallest_prime_factor(ell).expect("ell ≥ 3"),
            }
        })
        .collect();
    Ok(ContactCapacityReport {
        domain: domain.clone(),
        polar_inf_norm: norm,
        big: true,
        entries,
    })
}

/// Compares [c]_k of two big domains for k = 1..=k_max.
pub fn obstruct_contact_embedding(
    source: &ToricDomain,
    target: &ToricDomain,
    k_max: u64,
    config: &CapacityConfig,
) -> Result<ObstructionReport, ContactError> {
    if source.dimension() != target.dimension() {
        return Err(CapacityError::DimensionMismatch {
            source_dim: source.dimension(),
            target_dim: target.dimension(),
        }
        .into());
    }
    let to_rationals = |r: ContactCapacityReport| -> Vec<Rational> {
        r.contact_values().into_iter().map(Rational::from).collect()
    };
    let s = to_rationals(contact_sequence(source, k_max, None, config)?);
    let t = to_rationals(contact_sequence(target, k_max, None, config)?);
    let verdict = first_violation(&s, &t);
    let notes = match verdict {
        Verdict::NoObstructionFound => vec![NOT_SUFFICIENT_NOTE.to_string()],
        Verdict::Obstructed { .. } => vec![],
    };
    Ok(ObstructionReport {
        source: source.clone(),
        target: target.clone(),
        k_max,
        kind: ObstructionKind::Contact,
        verdict,
        notes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Squeezing {
    /// Some integer m lies in [r2, R2].
    NonSqueezable,
    /// Both balls are small (R2 < 1), d ≥ 2.
    Squeezable,
    /// 1 ≤ r2 < R2.
    ChiuNonSqueezable,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqueezingVerdict {
    pub r2: Rational,
    #[serde(rename = "R2")]
    pub big_r2: Rational,
    pub dimension: usize,
    pub verdict: Squeezing,
    /// Every criterion that applies, not just the reported one.
    pub criteria: Vec<Squeezing>,
    pub integer_in_range: Option<i64>,
    pub notes: Vec<String>,
}

/// Can B_{R2} × S¹ be squeezed into B_{r2} × S¹? Inputs are the action
/// values πr² ≤ πR².
///
/// The Chiu/Fraser criterion is reported first when it applies; the
/// integer criterion and the small-ball squeezing result follow.
pub fn ekp_squeezing_verdict(
    r2: Rational,
    big_r2: Rational,
    dimension: usize,
) -> Result<SqueezingVerdict, ContactError> {
    if !r2.is_positive() || big_r2 < r2 {
        return Err(ContactError::InvalidOrder { r2, big_r2 });
    }
    let mut criteria = Vec::new();
    let mut notes = Vec::new();
    if r2 >= 1 && r2 < big_r2 {
        criteria.push(Squeezing::ChiuNonSqueezable);
    }
    let m = r2.ceil_i64();
    let integer_in_range = (Rational::from_integer(m) <= big_r2).then_some(m);
    if integer_in_range.is_some() {
        criteria.push(Squeezing::NonSqueezable);
    }
    if big_r2 < 1 {
        if dimension >= 2 {
            criteria.push(Squeezing::Squeezable);
        } else {
            notes.push("the small-ball squeezing result needs d ≥ 2".to_string());
        }
    }
    let verdict = criteria.first().copied().unwrap_or(Squeezing::Unknown);
    Ok(SqueezingVerdict {
        r2,
        big_r2,
        dimension,
        verdict,
        criteria,
        integer_in_range,
        notes,
    })
}
