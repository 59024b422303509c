//! Vertices over a common denominator L, so that support values on lattice
//! directions become integer dot products.

use num::{BigInt, Integer, One, ToPrimitive};

use crate::rational::Rational;

/// Lattice directions with entries below this bound cannot overflow an
/// `i128` dot product against `i64` rows.
const ENTRY_BOUND: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ScaledVertices {
    denom: BigInt,
    rows: Vec<Vec<i64>>,
}

impl ScaledVertices {
    /// `None` when some scaled coordinate does not fit in an `i64`.
    pub(crate) fn new(vertices: &[Vec<Rational>]) -> Option<Self> {
        let denom = vertices
            .iter()
            .flatten()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let rows = vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| (x.numer() * (&denom / x.denom())).to_i64())
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ScaledVertices { denom, rows })
    }

    pub(crate) fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// L·‖v‖*, or `None` if some entry of v is too large for the fast path.
    pub(crate) fn support(&self, v: &[u64]) -> Option<i128> {
        if v.iter().any(|&x| x >= ENTRY_BOUND) {
            return None;
        }
        self.rows
            .iter()
            .map(|w| w.iter().zip(v).map(|(&a, &b)| a as i128 * b as i128).sum())
            .max()
    }

    pub(crate) fn unscale(&self, s: i128) -> Rational {
        Rational::from(num::BigRational::new(BigInt::from(s), self.denom.clone()))
    }

    /// ⌊L·t⌋ if it fits; integer partial sums ≤ L·t iff ≤ ⌊L·t⌋.
    pub(crate) fn scaled_floor(&self, t: &Rational) -> Option<i128> {
        let lt = t * &Rational::from_bigint(self.denom.clone());
        lt.floor().to_i128()
    }

    /// Whether every direction with entries ≤ `max_entry` takes the fast path.
    pub(crate) fn covers(&self, max_entry: u64) -> bool {
        max_entry < ENTRY_BOUND
    }
}
