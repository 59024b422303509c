use super::{GeometryError, ToricDomain};
use crate::rational::Rational;

/// Default cap on lattice points visited by the enumerators.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

/// Ω°_T = {z ≤ 0 : ⟨−z, w⟩ ≤ T for every canonical vertex w of Ω}.
#[derive(Debug, Clone)]
pub struct PolarSlice<'a> {
    t: Rational,
    domain: &'a ToricDomain,
    box_bound: Vec<Rational>,
}

/// Largest value of I over lattice corners of a slice, with the lattice
/// vector v such that z = −v attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMax {
    pub value: u64,
    pub corner: Vec<u64>,
}

impl LatticeMax {
    pub fn witness_z(&self) -> Vec<Rational> {
        self.corner.iter().map(|&c| -Rational::from(c)).collect()
    }
}

pub fn polar_slice(domain: &ToricDomain, t: Rational) -> Result<PolarSlice<'_>, GeometryError> {
    if t.is_negative() {
        return Err(GeometryError::NegativeT(t));
    }
    let box_bound = domain.extents().iter().map(|e| &t / e).collect();
    Ok(PolarSlice {
        t,
        domain,
        box_bound,
    })
}

impl<'a> PolarSlice<'a> {
    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn domain(&self) -> &'a ToricDomain {
        self.domain
    }

    /// Componentwise maximum of −z over the slice.
    pub fn box_bound(&self) -> &[Rational] {
        &self.box_bound
    }

    /// Each canonical vertex w gives the inequality ⟨−z, w⟩ ≤ T.
    pub fn halfspace_vertices(&self) -> &[Vec<Rational>] {
        self.domain.canonical_vertices()
    }

    pub fn contains(&self, z: &[Rational]) -> bool {
        if z.len() != self.domain.dimension() || z.iter().any(Rational::is_positive) {
            return false;
        }
        let neg: Vec<Rational> = z.iter().map(|x| -x).collect();
        self.domain
            .canonical_vertices()
            .iter()
            .all(|w| crate::rational::dot(&neg, w) <= self.t)
    }

    pub fn contains_corner(&self, v: &[u64]) -> bool {
        self.domain.support_lattice(v) <= self.t
    }

    /// I(Ω°_T) with the default enumeration budget.
    pub fn max_lattice_functional(&self) -> Result<LatticeMax, GeometryError> {
        self.max_lattice_functional_budgeted(DEFAULT_ENUM_BUDGET)
    }

    /// I(Ω°_T) = max Σ v_i over v ∈ ℕ^d with −v in the slice.
    ///
    /// The slice is downward closed toward 0, so I(z) ≥ m holds somewhere on
    /// it iff some lattice corner −v with Σ v_i ≥ m lies in it. Ties go to the
    /// lexicographically greatest corner.
    pub fn max_lattice_functional_budgeted(&self, budget: u64) -> Result<LatticeMax, GeometryError> {
        let caps: Vec<u64> = self
            .box_bound
            .iter()
            .map(|b| b.floor().try_into().unwrap_or(u64::MAX))
            .collect();
        let found = match self.domain.scaled().zip(self.scaled_t()) {
            Some((sc, t)) => {
                let rows: Vec<Vec<i128>> = sc
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(|&x| i128::from(x)).collect())
                    .collect();
                CornerSearch::run(&rows, &t, &caps, budget)?
            }
            None => CornerSearch::run(self.domain.canonical_vertices(), &self.t, &caps, budget)?,
        };
        let (value, corner) = found.expect("the origin is always a corner");
        Ok(LatticeMax { value, corner })
    }

    /// ⌊L·T⌋ for the domain's common denominator L, with headroom so that
    /// saturating partial sums never compare as equal to it.
    fn scaled_t(&self) -> Option<i128> {
        let sc = self.domain.scaled()?;
        sc.scaled_floor(&self.t).filter(|&t| t < i128::MAX / 2)
    }

    /// Every lattice v ≥ 0 with −v in the slice, in lexicographic order.
    pub fn lattice_corners(&self, budget: u64) -> Result<Vec<Vec<u64>>, GeometryError> {
        let caps: Vec<u64> = self
            .box_bound
            .iter()
            .map(|b| b.floor().try_into().unwrap_or(u64::MAX))
            .collect();
        let mut out = Vec::new();
        let mut v = vec![0u64; caps.len()];
        let mut visited = 0u64;
        collect_corners(self, &caps, 0, &mut v, &mut out, &mut visited, budget)?;
        Ok(out)
    }
}

fn collect_corners(
    slice: &PolarSlice<'_>,
    caps: &[u64],
    i: usize,
    v: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    visited: &mut u64,
    budget: u64,
) -> Result<(), GeometryError> {
    if i == caps.len() {
        out.push(v.clone());
        return Ok(());
    }
    for x in 0..=caps[i] {
        *visited += 1;
        if *visited > budget {
            return Err(GeometryError::EnumerationBudgetExceeded { budget });
        }
        v[i] = x;
        // Coordinates past i are zero, so this is the partial support.
        if !slice.contains_corner(v) {
            break;
        }
        collect_corners(slice, caps, i + 1, v, out, visited, budget)?;
    }
    v[i] = 0;
    Ok(())
}

fn suffix_sums(caps: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; caps.len() + 1];
    for i in (0..caps.len()).rev() {
        out[i] = out[i + 1].saturating_add(caps[i]);
    }
    out
}

/// Exact scalars for the corner search: partial support sums only grow, so
/// saturating integer arithmetic still compares correctly against T.
trait Exact: Clone + Ord {
    fn zero() -> Self;
    fn add_mul(&self, w: &Self, x: u64) -> Self;
}

impl Exact for i128 {
    fn zero() -> Self {
        0
    }

    fn add_mul(&self, w: &Self, x: u64) -> Self {
        self.saturating_add(w.saturating_mul(i128::from(x)))
    }
}

impl Exact for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn add_mul(&self, w: &Self, x: u64) -> Self {
        self + &(w * &Rational::from(x))
    }
}

struct CornerSearch<'s, N> {
    vertices: &'s [Vec<N>],
    t: &'s N,
    caps: &'s [u64],
    suffix_caps: Vec<u64>,
    current: Vec<u64>,
    // ⟨current, w⟩ for every vertex w, over the coordinates fixed so far
    partial: Vec<N>,
    best: Option<(u64, Vec<u64>)>,
    visited: u64,
    budget: u64,
}

impl<'s, N: Exact> CornerSearch<'s, N> {
    fn run(
        vertices: &'s [Vec<N>],
        t: &'s N,
        caps: &'s [u64],
        budget: u64,
    ) -> Result<Option<(u64, Vec<u64>)>, GeometryError> {
        let mut search = CornerSearch {
            vertices,
            t,
            caps,
            suffix_caps: suffix_sums(caps),
            current: vec![0; caps.len()],
            partial: vec![N::zero(); vertices.len()],
            best: None,
            visited: 0,
            budget,
        };
        search.descend(0, 0)?;
        Ok(search.best)
    }

    fn descend(&mut self, i: usize, sum: u64) -> Result<(), GeometryError> {
        if i == self.caps.len() {
            if self.best.as_ref().is_none_or(|(b, _)| sum > *b) {
                self.best = Some((sum, self.current.clone()));
            }
            return Ok(());
        }
        if let Some((b, _)) = &self.best {
            if sum.saturating_add(self.suffix_caps[i]) <= *b {
                return Ok(());
            }
        }
        let saved = self.partial.clone();
        for x in (0..=self.caps[i]).rev() {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(GeometryError::EnumerationBudgetExceeded {
                    budget: self.budget,
                });
            }
            let fits = self
                .vertices
                .iter()
                .zip(&saved)
                .all(|(w, p)| p.add_mul(&w[i], x) <= *self.t);
            if !fits {
                continue;
            }
            for (k, w) in self.vertices.iter().enumerate() {
                self.partial[k] = saved[k].add_mul(&w[i], x);
            }
            self.current[i] = x;
            self.descend(i + 1, sum + x)?;
            self.current[i] = 0;
        }
        self.partial = saved;
        Ok(())
    }
}

/// I(z) = Σ ⌊−z_i⌋.
pub fn lattice_functional(z: &[Rational]) -> i64 {
    z.iter().map(|x| (-x).floor_i64()).sum()
}
