//! Lattice-corner combinatorics of compact γ-saturated sets C ⊂ (−∞, 0]^d.
//!
//! J_C = {v ∈ ℤ^d_{≥0} : C ∩ C_v ≠ ∅} with C_v = Π(−v_i−1, −v_i]. For a
//! γ-saturated C this is the set of lattice v with −v ∈ C, and
//! ∂J_C = {v ∈ J_C : v + e_i ∉ J_C for all i}.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::StructureError;
use crate::rational::Rational;
use crate::toric_geometry::PolarSlice;

/// A compact γ-saturated O star-shaped set, queried through its lattice
/// corners and its depth max_{z∈C} (−z_i).
pub trait SaturatedRegion {
    fn dimension(&self) -> usize;
    /// max over C of −z_i, per coordinate.
    fn depth(&self) -> Vec<Rational>;
    /// −v ∈ C.
    fn contains_corner(&self, v: &[u64]) -> bool;
}

/// Closed axis-aligned box Π[lo_i, hi_i].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisBox {
    pub lo: Vec<Rational>,
    pub hi: Vec<Rational>,
}

impl AxisBox {
    pub fn new(lo: Vec<Rational>, hi: Vec<Rational>) -> Self {
        AxisBox { lo, hi }
    }

    /// Π[−depth_i, 0].
    pub fn anchored(depth: Vec<Rational>) -> Self {
        let hi = vec![Rational::zero(); depth.len()];
        AxisBox {
            lo: depth.into_iter().map(|x| -x).collect(),
            hi,
        }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(xi, (l, h))| l <= xi && xi <= h)
    }

    fn corners(&self) -> Vec<Vec<Rational>> {
        let d = self.lo.len();
        (0..1u32 << d)
            .map(|mask| {
                (0..d)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            self.hi[i].clone()
                        } else {
                            self.lo[i].clone()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Parameter interval {t ∈ [0,1] : t·p ∈ self}, if nonempty.
    fn ray_interval(&self, p: &[Rational]) -> Option<(Rational, Rational)> {
        let mut lo_t = Rational::zero();
        let mut hi_t = Rational::one();
        for (i, pi) in p.iter().enumerate() {
            let (l, h) = (&self.lo[i], &self.hi[i]);
            if pi.is_zero() {
                if l.is_positive() || h.is_negative() {
                    return None;
                }
                continue;
            }
            let (a, b) = (l / pi, h / pi);
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            lo_t = lo_t.max(a);
            hi_t = hi_t.min(b);
        }
        (lo_t <= hi_t).then_some((lo_t, hi_t))
    }
}

/// A union of anchored boxes Π[−b_i, 0], which is exactly the shape of a
/// γ-saturated finite box union.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturatedBoxUnion {
    depths: Vec<Vec<Rational>>,
}

impl SaturatedBoxUnion {
    /// Validates a raw box union. With `saturate` the set is replaced by its
    /// γ-saturation (C + [0,∞)^d) ∩ (−∞,0]^d; otherwise it must already be
    /// saturated.
    pub fn from_boxes(boxes: &[AxisBox], saturate: bool) -> Result<Self, StructureError> {
        let d = boxes.first().ok_or(StructureError::EmptySet)?.lo.len();
        if d == 0 {
            return Err(StructureError::EmptySet);
        }
        for b in boxes {
            if b.lo.len() != d || b.hi.len() != d {
                return Err(StructureError::DimensionMismatch {
                    expected: d,
                    found: b.lo.len().max(b.hi.len()),
                });
            }
            if b.lo.iter().zip(&b.hi).any(|(l, h)| l > h) {
                return Err(StructureError::InvalidBox(b.clone()));
            }
            if b.hi.iter().any(Rational::is_positive) {
                return Err(StructureError::OutsideOrthant(b.clone()));
            }
        }
        let anchored: Vec<AxisBox> = boxes
            .iter()
            .map(|b| AxisBox::anchored(b.lo.iter().map(|x| -x).collect()))
            .collect();
        if !saturate {
            if let Some(a) = anchored.iter().find(|a| !box_covered(a, boxes)) {
                return Err(StructureError::NotSaturated { missing: a.clone() });
            }
        }
        for b in boxes {
            for p in b.corners() {
                if !segment_covered(&p, boxes) {
                    return Err(StructureError::NotStarShaped { corner: p });
                }
            }
        }
        Ok(SaturatedBoxUnion {
            depths: anchored
                .into_iter()
                .map(|a| a.lo.into_iter().map(|x| -x).collect())
                .collect(),
        })
    }

    /// Union of Π[−b_i, 0] for the given nonnegative depth vectors.
    pub fn from_depths(depths: Vec<Vec<Rational>>) -> Result<Self, StructureError> {
        let boxes: Vec<AxisBox> = depths.into_iter().map(AxisBox::anchored).collect();
        Self::from_boxes(&boxes, false)
    }

    pub fn boxes(&self) -> Vec<AxisBox> {
        self.depths.iter().cloned().map(AxisBox::anchored).collect()
    }

    pub fn contains(&self, z: &[Rational]) -> bool {
        self.boxes().iter().any(|b| b.contains(z))
    }
}

impl SaturatedRegion for SaturatedBoxUnion {
    fn dimension(&self) -> usize {
        self.depths[0].len()
    }

    fn depth(&self) -> Vec<Rational> {
        (0..self.dimension())
            .map(|i| self.depths.iter().map(|b| b[i].clone()).max().expect("nonempty"))
            .collect()
    }

    fn contains_corner(&self, v: &[u64]) -> bool {
        self.depths
            .iter()
            .any(|b| b.iter().zip(v).all(|(bi, &vi)| Rational::from(vi) <= *bi))
    }
}

impl SaturatedRegion for PolarSlice<'_> {
    fn dimension(&self) -> usize {
        self.domain().dimension()
    }

    fn depth(&self) -> Vec<Rational> {
        self.box_bound().to_vec()
    }

    fn contains_corner(&self, v: &[u64]) -> bool {
        PolarSlice::contains_corner(self, v)
    }
}

/// Does the segment from O to p stay inside the union?
fn segment_covered(p: &[Rational], boxes: &[AxisBox]) -> bool {
    let mut intervals: Vec<(Rational, Rational)> =
        boxes.iter().filter_map(|b| b.ray_interval(p)).collect();
    intervals.sort();
    let mut reach = Rational::zero();
    let mut started = false;
    for (a, b) in intervals {
        if a > reach || (!started && !a.is_zero()) {
            return false;
        }
        started = true;
        reach = reach.max(b);
    }
    started && reach >= Rational::one()
}

/// Exact test A ⊆ ∪ boxes by checking one point in every cell of the
/// arrangement cut out by the boxes' coordinates inside A.
fn box_covered(a: &AxisBox, boxes: &[AxisBox]) -> bool {
    let d = a.lo.len();
    let axes: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            let mut cuts: BTreeSet<Rational> = BTreeSet::new();
            cuts.insert(a.lo[i].clone());
            cuts.insert(a.hi[i].clone());
            for b in boxes {
                for x in [&b.lo[i], &b.hi[i]] {
                    if &a.lo[i] < x && x < &a.hi[i] {
                        cuts.insert(x.clone());
                    }
                }
            }
            let cuts: Vec<Rational> = cuts.into_iter().collect();
            let mut reps = cuts.clone();
            for w in cuts.windows(2) {
                reps.push((&w[0] + &w[1]) / Rational::from_integer(2));
            }
            reps
        })
        .collect();
    let mut idx = vec![0usize; d];
    loop {
        let p: Vec<Rational> = (0..d).map(|i| axes[i][idx[i]].clone()).collect();
        if !boxes.iter().any(|b| b.contains(&p)) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == d {
                return true;
            }
            idx[i] += 1;
            if idx[i] < axes[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerData {
    pub depth: Vec<Rational>,
    /// J_C in lexicographic order.
    pub j: Vec<Vec<u64>>,
    pub boundary_j: Vec<Vec<u64>>,
    pub i_c: u64,
}

impl CornerData {
    pub fn is_in_j(&self, v: &[u64]) -> bool {
        self.j.binary_search_by(|w| w.as_slice().cmp(v)).is_ok()
    }

    /// {Σ v_i : v ∈ ∂J_C}, sorted.
    pub fn corner_sums(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.boundary_j.iter().map(|v| v.iter().sum()).collect();
        out.sort_unstable();
        out
    }
}

/// Enumerates J_C inside the box [0, ⌊depth⌋] and extracts ∂J_C and
/// I_C = max over ∂J_C of Σ v_i.
pub fn corner_analysis<R: SaturatedRegion + ?Sized>(
    region: &R,
    budget: u64,
) -> Result<CornerData, StructureError> {
    let depth = region.depth();
    let caps: Vec<u64> = depth
        .iter()
        .map(|x| x.floor().try_into().unwrap_or(u64::MAX))
        .collect();
    let total: u128 = caps
        .iter()
        .fold(1u128, |acc, &c| acc.saturating_mul(u128::from(c) + 1));
    if total > u128::from(budget) {
        return Err(StructureError::EnumerationBudgetExceeded { budget });
    }
    let mut j = Vec::new();
    let mut v = vec![0u64; caps.len()];
    loop {
        if region.contains_corner(&v) {
            j.push(v.clone());
        }
        // odometer, last coordinate fastest, giving lexicographic order
        let mut i = caps.len();
        loop {
            if i == 0 {
                return Ok(finish(depth, j));
            }
            i -= 1;
            if v[i] < caps[i] {
                v[i] += 1;
                break;
            }
            v[i] = 0;
        }
    }
}

fn finish(depth: Vec<Rational>, j: Vec<Vec<u64>>) -> CornerData {
    let set: BTreeSet<&Vec<u64>> = j.iter().collect();
    let boundary_j: Vec<Vec<u64>> = j
        .iter()
        .filter(|v| {
            (0..v.len()).all(|i| {
                let mut w = (*v).clone();
                w[i] += 1;
                !set.contains(&w)
            })
        })
        .cloned()
        .collect();
    let i_c = boundary_j
        .iter()
        .map(|v| v.iter().sum::<u64>())
        .max()
        .unwrap_or(0);
    CornerData {
        depth,
        j,
        boundary_j,
        i_c,
    }
}

/// Checks that ∂J_C = {v} holds exactly when Z̄_v ⊆ C ⊆ Z_{v+1}, with
/// Z̄_v = Π[−v_i, 0] and Z_{v+1} = Π(−v_i−1, 0].
///
/// For saturated C, Z̄_v ⊆ C iff v ∈ J_C, and C ⊆ Z_{v+1} iff
/// depth_i < v_i + 1; together they force v = ⌊depth⌋.
pub fn corner_lemma_check(data: &CornerData) -> bool {
    let candidate: Vec<u64> = data
        .depth
        .iter()
        .map(|x| x.floor().try_into().unwrap_or(u64::MAX))
        .collect();
    let sandwiched = data.is_in_j(&candidate)
        && data
            .depth
            .iter()
            .zip(&candidate)
            .all(|(dep, &c)| *dep < Rational::from(c + 1));
    match data.boundary_j.as_slice() {
        [v] => sandwiched && *v == candidate,
        _ => !sandwiched,
    }
}
