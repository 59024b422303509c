//! Exact facet enumeration for small full-dimensional point sets.
//!
//! Every facet of a full-dimensional polytope in ℝ^d passes through d
//! affinely independent input points, so scanning d-subsets and keeping the
//! hyperplanes that leave all points on one side yields the complete
//! H-representation. Cost is C(n, d) · n, fine for the vertex counts a
//! moment polytope is given with.

use itertools::Itertools;

use super::linalg::{null_vector, rank};
use crate::rational::{dot, Rational};

/// Closed halfspace `normal · x ≤ offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Halfspace {
    pub fn contains(&self, x: &[Rational]) -> bool {
        dot(&self.normal, x) <= self.offset
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        dot(&self.normal, x) == self.offset
    }

    // Scale so that the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.normal.iter().find(|c| !c.is_zero()).map(Rational::abs) {
            let inv = lead.recip();
            for c in self.normal.iter_mut() {
                *c = &*c * &inv;
            }
            self.offset = &self.offset * &inv;
        }
        self
    }
}

/// Dimension of the affine hull of `points`.
pub fn affine_dimension(points: &[Vec<Rational>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        0
    } else {
        rank(&diffs)
    }
}

/// Facet halfspaces of conv(points). Returns `None` when the hull is not
/// full-dimensional.
pub fn facets(points: &[Vec<Rational>]) -> Option<Vec<Halfspace>> {
    let d = points.first()?.len();
    if affine_dimension(points) < d {
        return None;
    }
    let mut out: Vec<Halfspace> = Vec::new();
    for subset in (0..points.len()).combinations(d) {
        // Solve normal · p_j − offset = 0 for the chosen points.
        let rows: Vec<Vec<Rational>> = subset
            .iter()
            .map(|&j| {
                let mut row = points[j].clone();
                row.push(-Rational::one());
                row
            })
            .collect();
        let Some(sol) = null_vector(&rows) else {
            continue;
        };
        let (normal, offset) = (sol[..d].to_vec(), sol[d].clone());
        if normal.iter().all(Rational::is_zero) {
            continue;
        }
        let mut above = false;
        let mut below = false;
        for p in points {
            let s = dot(&normal, p) - &offset;
            if s.is_positive() {
                above = true;
            } else if s.is_negative() {
                below = true;
            }
            if above && below {
                break;
            }
        }
        let hs = match (above, below) {
            (true, true) => continue,
            (true, false) => Halfspace {
                normal: normal.iter().map(|c| -c).collect(),
                offset: -offset,
            },
            _ => Halfspace { normal, offset },
        }
        .normalized();
        if !out.contains(&hs) {
            out.push(hs);
        }
    }
    Some(out)
}

/// A point of a full-dimensional polytope is a vertex iff the normals of the
/// facets through it span ℝ^d.
pub fn is_vertex(point: &[Rational], facets: &[Halfspace]) -> bool {
    let tight: Vec<Vec<Rational>> = facets
        .iter()
        .filter(|h| h.is_tight(point))
        .map(|h| h.normal.clone())
        .collect();
    !tight.is_empty() && rank(&tight) == point.len()
}
