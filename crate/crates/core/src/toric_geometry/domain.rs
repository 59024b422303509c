use serde::{Deserialize, Serialize};

use super::hull::{self, Halfspace};
use super::scaled::ScaledVertices;
use super::GeometryError;
use crate::rational::{dot_lattice, Rational};

/// How a moment body was described.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Shape {
    Ellipsoid { a: Vec<Rational> },
    Polydisk { a: Vec<Rational> },
    Ball { a: Rational, dimension: usize },
    Polytope { vertices: Vec<Vec<Rational>> },
}

impl Shape {
    pub fn kind(&self) -> &'static str {
        match self {
            Shape::Ellipsoid { .. } => "ellipsoid",
            Shape::Polydisk { .. } => "polydisk",
            Shape::Ball { .. } => "ball",
            Shape::Polytope { .. } => "polytope",
        }
    }
}

/// A validated convex toric domain X_Ω, stored through its closed moment
/// body Ω ⊂ ℝ^d_{≥0}.
///
/// Ellipsoid and polydisk parameters are sorted ascending on construction;
/// `permutation[i]` is the input index of canonical coordinate `i`, and all
/// vectors handed to or returned by domain methods use canonical order.
/// Polytopes keep their input coordinate order. Serializes as its input
/// `Shape` and revalidates on deserialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Shape", into = "Shape")]
pub struct ToricDomain {
    shape: Shape,
    canonical_vertices: Vec<Vec<Rational>>,
    halfspaces: Vec<Halfspace>,
    extents: Vec<Rational>,
    permutation: Vec<usize>,
    scaled: Option<ScaledVertices>,
}

fn sorted_with_permutation(a: Vec<Rational>) -> (Vec<Rational>, Vec<usize>) {
    let mut idx: Vec<usize> = (0..a.len()).collect();
    idx.sort_by(|&i, &j| a[i].cmp(&a[j]).then(i.cmp(&j)));
    (idx.iter().map(|&i| a[i].clone()).collect(), idx)
}

fn check_parameters(a: &[Rational]) -> Result<(), GeometryError> {
    if a.is_empty() {
        return Err(GeometryError::ZeroDimension);
    }
    match a.iter().position(|x| !x.is_positive()) {
        Some(index) => Err(GeometryError::NonPositiveParameter {
            index,
            value: a[index].clone(),
        }),
        None => Ok(()),
    }
}

fn simplex_vertices(a: &[Rational]) -> Vec<Vec<Rational>> {
    let d = a.len();
    let mut out = vec![vec![Rational::zero(); d]];
    for (i, ai) in a.iter().enumerate() {
        let mut v = vec![Rational::zero(); d];
        v[i] = ai.clone();
        out.push(v);
    }
    out
}

fn simplex_halfspaces(a: &[Rational]) -> Vec<Halfspace> {
    let d = a.len();
    let mut out = orthant_halfspaces(d);
    out.push(Halfspace {
        normal: a.iter().map(Rational::recip).collect(),
        offset: Rational::one(),
    });
    out
}

fn orthant_halfspaces(d: usize) -> Vec<Halfspace> {
    (0..d)
        .map(|i| {
            let mut normal = vec![Rational::zero(); d];
            normal[i] = -Rational::one();
            Halfspace {
                normal,
                offset: Rational::zero(),
            }
        })
        .collect()
}

fn box_vertices(a: &[Rational]) -> Vec<Vec<Rational>> {
    let d = a.len();
    (0..1u64 << d)
        .map(|mask| {
            (0..d)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        a[i].clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn box_halfspaces(a: &[Rational]) -> Vec<Halfspace> {
    let d = a.len();
    let mut out = orthant_halfspaces(d);
    for (i, ai) in a.iter().enumerate() {
        let mut normal = vec![Rational::zero(); d];
        normal[i] = Rational::one();
        out.push(Halfspace {
            normal,
            offset: ai.clone(),
        });
    }
    out
}

fn coordinate_extents(vertices: &[Vec<Rational>], d: usize) -> Vec<Rational> {
    (0..d)
        .map(|i| {
            vertices
                .iter()
                .map(|v| v[i].clone())
                .max()
                .unwrap_or_else(Rational::zero)
        })
        .collect()
}

impl TryFrom<Shape> for ToricDomain {
    type Error = GeometryError;

    fn try_from(shape: Shape) -> Result<Self, Self::Error> {
        ToricDomain::from_shape(shape)
    }
}

impl From<ToricDomain> for Shape {
    fn from(d: ToricDomain) -> Shape {
        d.shape
    }
}

impl ToricDomain {
    fn assemble(
        shape: Shape,
        canonical_vertices: Vec<Vec<Rational>>,
        halfspaces: Vec<Halfspace>,
        extents: Vec<Rational>,
        permutation: Vec<usize>,
    ) -> Self {
        ToricDomain {
            scaled: ScaledVertices::new(&canonical_vertices),
            shape,
            canonical_vertices,
            halfspaces,
            extents,
            permutation,
        }
    }

    pub fn ellipsoid(a: Vec<Rational>) -> Result<Self, GeometryError> {
        check_parameters(&a)?;
        let input = a.clone();
        let (a, permutation) = sorted_with_permutation(a);
        Ok(Self::assemble(
            Shape::Ellipsoid { a: input },
            simplex_vertices(&a),
            simplex_halfspaces(&a),
            a,
            permutation,
        ))
    }

    pub fn polydisk(a: Vec<Rational>) -> Result<Self, GeometryError> {
        check_parameters(&a)?;
        let input = a.clone();
        let (a, permutation) = sorted_with_permutation(a);
        Ok(Self::assemble(
            Shape::Polydisk { a: input },
            box_vertices(&a),
            box_halfspaces(&a),
            a,
            permutation,
        ))
    }

    /// The ball B_a, i.e. the ellipsoid with all parameters equal to `a`.
    pub fn ball(a: Rational, dimension: usize) -> Result<Self, GeometryError> {
        if dimension == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        let params = vec![a.clone(); dimension];
        check_parameters(&params)?;
        Ok(Self::assemble(
            Shape::Ball { a, dimension },
            simplex_vertices(&params),
            simplex_halfspaces(&params),
            params,
            (0..dimension).collect(),
        ))
    }

    /// Validates a vertex list as the moment body of a convex toric domain:
    /// nonnegative, full-dimensional, in convex position (up to duplicates)
    /// and closed under zeroing any coordinate.
    pub fn polytope(vertices: Vec<Vec<Rational>>) -> Result<Self, GeometryError> {
        let d = vertices.first().ok_or(GeometryError::EmptyDomain)?.len();
        if d == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != d) {
            return Err(GeometryError::DimensionMismatch {
                expected: d,
                found: v.len(),
            });
        }
        if let Some(v) = vertices.iter().find(|v| v.iter().any(Rational::is_negative)) {
            return Err(GeometryError::NegativeVertexCoordinate { vertex: v.clone() });
        }
        let mut unique: Vec<Vec<Rational>> = Vec::with_capacity(vertices.len());
        for v in vertices {
            if !unique.contains(&v) {
                unique.push(v);
            }
        }
        let halfspaces = hull::facets(&unique).ok_or(GeometryError::EmptyDomain)?;
        if let Some(v) = unique.iter().find(|v| !hull::is_vertex(v, &halfspaces)) {
            return Err(GeometryError::NotConvex { point: v.clone() });
        }
        for v in &unique {
            for i in 0..d {
                if v[i].is_zero() {
                    continue;
                }
                let mut projected = v.clone();
                projected[i] = Rational::zero();
                if !halfspaces.iter().all(|h| h.contains(&projected)) {
                    return Err(GeometryError::NotDownwardClosed {
                        vertex: v.clone(),
                        projected,
                    });
                }
            }
        }
        let extents = coordinate_extents(&unique, d);
        Ok(Self::assemble(
            Shape::Polytope {
                vertices: unique.clone(),
            },
            unique,
            halfspaces,
            extents,
            (0..d).collect(),
        ))
    }

    pub fn from_shape(shape: Shape) -> Result<Self, GeometryError> {
        match shape {
            Shape::Ellipsoid { a } => Self::ellipsoid(a),
            Shape::Polydisk { a } => Self::polydisk(a),
            Shape::Ball { a, dimension } => Self::ball(a, dimension),
            Shape::Polytope { vertices } => Self::polytope(vertices),
        }
    }

    pub fn dimension(&self) -> usize {
        self.extents.len()
    }

    /// The shape as it was given, before sorting.
    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn canonical_vertices(&self) -> &[Vec<Rational>] {
        &self.canonical_vertices
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Largest i-th coordinate over Ω.
    pub fn extents(&self) -> &[Rational] {
        &self.extents
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Sorted ellipsoid parameters (balls included).
    pub fn ellipsoid_parameters(&self) -> Option<&[Rational]> {
        match self.shape {
            Shape::Ellipsoid { .. } | Shape::Ball { .. } => Some(&self.extents),
            _ => None,
        }
    }

    /// The E(7/2, 4) domain the example table is written for.
    pub fn is_table_example(&self) -> bool {
        self.ellipsoid_parameters()
            .is_some_and(|a| a.len() == 2 && a[0] == Rational::new(7, 2) && a[1] == 4)
    }

    /// Closed membership `x ∈ Ω` for action coordinates.
    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dimension() && self.halfspaces.iter().all(|h| h.contains(x))
    }

    /// ‖v‖*_Ω = max over Ω of ⟨v, w⟩, attained at a canonical vertex.
    pub fn support_norm(&self, v: &[Rational]) -> Result<Rational, GeometryError> {
        self.check_dimension(v.len())?;
        if v.iter().any(Rational::is_negative) {
            return Err(GeometryError::NegativeDirection);
        }
        Ok(self
            .canonical_vertices
            .iter()
            .map(|w| crate::rational::dot(v, w))
            .max()
            .unwrap_or_else(Rational::zero))
    }

    /// Support function on lattice directions.
    pub fn support_lattice(&self, v: &[u64]) -> Rational {
        debug_assert_eq!(v.len(), self.dimension());
        if let Some(sc) = &self.scaled {
            if let Some(s) = sc.support(v) {
                return sc.unscale(s);
            }
        }
        self.canonical_vertices
            .iter()
            .map(|w| dot_lattice(w, v))
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub(crate) fn scaled(&self) -> Option<&ScaledVertices> {
        self.scaled.as_ref()
    }

    /// max over z ∈ Ω°_1 of ‖z‖_∞, which is attained on a coordinate axis
    /// and equals max_i 1 / extent_i.
    pub fn polar_inf_norm(&self) -> Result<Rational, GeometryError> {
        if let Some(i) = self.extents.iter().position(Rational::is_zero) {
            return Err(GeometryError::DegenerateExtent { coordinate: i });
        }
        Ok(self
            .extents
            .iter()
            .map(Rational::recip)
            .max()
            .expect("nonempty extents"))
    }

    /// Ω ↦ sΩ, which is X_Ω ↦ r·X_Ω with s = r².
    pub fn scale(&self, s: &Rational) -> Result<Self, GeometryError> {
        if !s.is_positive() {
            return Err(GeometryError::NonPositiveScale(s.clone()));
        }
        let mul = |a: &[Rational]| a.iter().map(|x| x * s).collect::<Vec<_>>();
        let shape = match &self.shape {
            Shape::Ellipsoid { a } => Shape::Ellipsoid { a: mul(a) },
            Shape::Polydisk { a } => Shape::Polydisk { a: mul(a) },
            Shape::Ball { a, dimension } => Shape::Ball {
                a: a * s,
                dimension: *dimension,
            },
            Shape::Polytope { vertices } => Shape::Polytope {
                vertices: vertices.iter().map(|v| mul(v)).collect(),
            },
        };
        Self::from_shape(shape)
    }

    pub(crate) fn check_dimension(&self, found: usize) -> Result<(), GeometryError> {
        if found != self.dimension() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dimension(),
                found,
            });
        }
        Ok(())
    }
}

/// μ(u) = (π|u_1|², …, π|u_d|²), taken directly in action coordinates so the
/// map is the identity on validated input.
pub fn moment_map(actions: &[Rational]) -> Result<Vec<Rational>, GeometryError> {
    if let Some(index) = actions.iter().position(Rational::is_negative) {
        return Err(GeometryError::NegativeActionValue { index });
    }
    Ok(actions.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn v(raw: &[&str]) -> Vec<Rational> {
        raw.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn ellipsoid_vertices_are_the_simplex() {
        let e = ToricDomain::ellipsoid(v(&["7/2", "4"])).unwrap();
        assert_eq!(
            e.canonical_vertices(),
            &[v(&["0", "0"]), v(&["7/2", "0"]), v(&["0", "4"])]
        );
    }

    #[test]
    fn parameters_are_sorted_and_permutation_recorded() {
        let e = ToricDomain::ellipsoid(v(&["4", "7/2", "5"])).unwrap();
        assert_eq!(e.extents(), v(&["7/2", "4", "5"]).as_slice());
        assert_eq!(e.permutation(), &[1, 0, 2]);
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        assert!(matches!(
            ToricDomain::ellipsoid(v(&["1", "0"])),
            Err(GeometryError::NonPositiveParameter { index: 1, .. })
        ));
        assert!(matches!(
            ToricDomain::polydisk(v(&["-1"])),
            Err(GeometryError::NonPositiveParameter { .. })
        ));
        assert!(matches!(
            ToricDomain::ball(q("1"), 0),
            Err(GeometryError::ZeroDimension)
        ));
    }

    #[test]
    fn accepts_downward_closed_quadrilateral() {
        let p = ToricDomain::polytope(vec![
            v(&["0", "0"]),
            v(&["2", "0"]),
            v(&["0", "1"]),
            v(&["1", "1"]),
        ])
        .unwrap();
        assert_eq!(p.extents(), v(&["2", "1"]).as_slice());
        assert!(p.contains(&v(&["3/2", "1/2"])));
        assert!(!p.contains(&v(&["2", "1"])));
    }

    #[test]
    fn rejects_triangle_missing_its_projection() {
        let err = ToricDomain::polytope(vec![v(&["0", "0"]), v(&["2", "0"]), v(&["2", "2"])])
            .unwrap_err();
        match err {
            GeometryError::NotDownwardClosed { vertex, projected } => {
                assert_eq!(vertex, v(&["2", "2"]));
                assert_eq!(projected, v(&["0", "2"]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn polytope_error_paths() {
        assert!(matches!(
            ToricDomain::polytope(vec![]),
            Err(GeometryError::EmptyDomain)
        ));
        assert!(matches!(
            ToricDomain::polytope(vec![v(&["0", "0"]), v(&["1", "0"])]),
            Err(GeometryError::EmptyDomain)
        ));
        assert!(matches!(
            ToricDomain::polytope(vec![v(&["0", "0"]), v(&["-1", "0"]), v(&["0", "1"])]),
            Err(GeometryError::NegativeVertexCoordinate { .. })
        ));
        assert!(matches!(
            ToricDomain::polytope(vec![
                v(&["0", "0"]),
                v(&["2", "0"]),
                v(&["0", "2"]),
                v(&["1/2", "1/2"]),
            ]),
            Err(GeometryError::NotConvex { .. })
        ));
        // duplicates are fine
        let p = ToricDomain::polytope(vec![
            v(&["0", "0"]),
            v(&["1", "0"]),
            v(&["1", "0"]),
            v(&["0", "1"]),
        ])
        .unwrap();
        assert_eq!(p.canonical_vertices().len(), 3);
    }

    #[test]
    fn moment_map_membership() {
        let e = ToricDomain::ellipsoid(v(&["7/2", "4"])).unwrap();
        assert!(e.contains(&moment_map(&v(&["1", "2"])).unwrap()));
        assert!(e.contains(&moment_map(&v(&["0", "0"])).unwrap()));
        assert!(!e.contains(&moment_map(&v(&["4", "0"])).unwrap()));
        assert!(matches!(
            moment_map(&v(&["1", "-1"])),
            Err(GeometryError::NegativeActionValue { index: 1 })
        ));
    }

    #[test]
    fn support_norm_examples() {
        let e = ToricDomain::ellipsoid(v(&["7/2", "4"])).unwrap();
        assert_eq!(e.support_norm(&v(&["2", "2"])).unwrap(), q("8"));
        assert_eq!(e.support_norm(&v(&["0", "0"])).unwrap(), q("0"));
        let p = ToricDomain::polydisk(v(&["7/2", "4"])).unwrap();
        assert_eq!(p.support_norm(&v(&["1", "1"])).unwrap(), q("15/2"));
        assert!(matches!(
            p.support_norm(&v(&["1", "-1"])),
            Err(GeometryError::NegativeDirection)
        ));
    }

    #[test]
    fn polar_inf_norm_examples() {
        let e = ToricDomain::ellipsoid(v(&["7/2", "4"])).unwrap();
        assert_eq!(e.polar_inf_norm().unwrap(), q("2/7"));
        for d in 1..5 {
            assert_eq!(ToricDomain::ball(q("1"), d).unwrap().polar_inf_norm().unwrap(), q("1"));
        }
        let p = ToricDomain::polydisk(v(&["2", "3"])).unwrap();
        assert_eq!(p.polar_inf_norm().unwrap(), q("1/2"));
    }

    #[test]
    fn scaling() {
        let e = ToricDomain::ellipsoid(v(&["7/2", "4"])).unwrap();
        let s = e.scale(&q("2")).unwrap();
        assert_eq!(s, ToricDomain::ellipsoid(v(&["7", "8"])).unwrap());
        assert_eq!(e.scale(&q("1")).unwrap(), e);
        let p = ToricDomain::polytope(vec![
            v(&["0", "0"]),
            v(&["2", "0"]),
            v(&["0", "1"]),
            v(&["1", "1"]),
        ])
        .unwrap();
        let half = p.scale(&q("1/2")).unwrap();
        assert_eq!(
            half.canonical_vertices(),
            &[v(&["0", "0"]), v(&["1", "0"]), v(&["0", "1/2"]), v(&["1/2", "1/2"])]
        );
        assert_eq!(
            half,
            ToricDomain::polytope(half.canonical_vertices().to_vec()).unwrap()
        );
        assert!(matches!(
            e.scale(&q("0")),
            Err(GeometryError::NonPositiveScale(_))
        ));
    }
}
