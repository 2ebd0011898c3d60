//! Simple convex polytopes given by half-spaces, and polytopes with holes.
//!
//! A [`SimplePolytope`] is built from inequalities `normal · x ≥ offset` with
//! integer normals and rational offsets. Vertices are found by solving every
//! `n`-subset of facet equations exactly; the result is rejected unless it is
//! bounded, full-dimensional, simple and free of redundant inequalities.

mod holes;
mod placement;

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactlin::{gcd_all, is_feasible, rational_rank, solve_rational, Constraint, RatVector};

pub use holes::PolytopeWithHoles;
pub use placement::{place_holes, place_holes_with, ScalePolicy};

/// Global facet index across all components (outer first, then holes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetId(pub usize);

/// Global vertex index across all components, numbered like facets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl fmt::Display for FacetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0 + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0 + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("half-space {0} has a zero normal")]
    ZeroNormal(usize),
    #[error("the inequalities define an empty region")]
    Empty,
    #[error("the inequalities define an unbounded region")]
    Unbounded,
    #[error("the region is not full-dimensional")]
    NotFullDimensional,
    #[error("point {point} lies on {count} facets; the polytope is not simple")]
    NotSimple { point: RatVector, count: usize },
    #[error("half-space {0} supports no vertex (redundant facet)")]
    RedundantFacet(usize),
    #[error("invalid vertex cycle: {0}")]
    VertexCycle(String),
    #[error("hole {hole} is not contained in the interior of the outer polytope")]
    Containment { hole: usize },
    #[error("holes {first} and {second} intersect")]
    Disjointness { first: usize, second: usize },
    #[error("placement failed: {0}")]
    Placement(String),
}

/// The closed half-space `normal · x ≥ offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub label: String,
    pub normal: Vec<BigInt>,
    pub offset: BigRational,
}

impl Halfspace {
    pub fn new(normal: Vec<BigInt>, offset: BigRational) -> Self {
        Self {
            label: String::new(),
            normal,
            offset,
        }
    }

    pub fn from_i64(normal: &[i64], offset: i64) -> Self {
        Self::new(
            normal.iter().map(|&x| x.into()).collect(),
            BigRational::from_integer(offset.into()),
        )
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `normal · x - offset`; zero on the facet hyperplane, positive inside.
    pub fn slack(&self, x: &RatVector) -> BigRational {
        x.dot_int(&self.normal) - &self.offset
    }

    fn constraint(&self, strict: bool) -> Constraint {
        Constraint::from_int(&self.normal, self.offset.clone(), strict)
    }

    /// The complementary closed half-space `normal · x ≤ offset`.
    fn complement(&self) -> Constraint {
        Constraint::from_int(
            &self.normal.iter().map(|x| -x).collect::<Vec<_>>(),
            -self.offset.clone(),
            false,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub point: RatVector,
    /// Local ids of the `n` facets through the vertex, ascending.
    pub facets: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub ends: (usize, usize),
    /// Local ids of the `n - 1` facets containing the edge, ascending.
    pub facets: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePolytope {
    dim: usize,
    facets: Vec<Halfspace>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl SimplePolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Closed-body membership.
    pub fn contains(&self, x: &RatVector) -> bool {
        self.facets.iter().all(|h| !h.slack(x).is_negative())
    }

    /// Open-interior membership.
    pub fn interior_contains(&self, x: &RatVector) -> bool {
        self.facets.iter().all(|h| h.slack(x).is_positive())
    }

    pub fn vertex_centroid(&self) -> RatVector {
        let n = BigRational::from_integer(self.vertices.len().into());
        let sum = self
            .vertices
            .iter()
            .fold(RatVector::zeros(self.dim), |acc, v| acc.add(&v.point));
        sum.scale(&(BigRational::one() / n))
    }

    /// Componentwise bounding box of the vertices.
    pub fn bounding_box(&self) -> (RatVector, RatVector) {
        let lo = (0..self.dim)
            .map(|i| self.vertices.iter().map(|v| v.point[i].clone()).min().expect("vertices"))
            .collect();
        let hi = (0..self.dim)
            .map(|i| self.vertices.iter().map(|v| v.point[i].clone()).max().expect("vertices"))
            .collect();
        (RatVector::new(lo), RatVector::new(hi))
    }

    /// The edge through vertex `v` that lies on every facet of `v` except `f`.
    pub fn edge_leaving(&self, v: usize, f: usize) -> Option<&Edge> {
        let key: Vec<usize> = self.vertices[v].facets.iter().copied().filter(|&g| g != f).collect();
        self.edges
            .iter()
            .find(|e| e.facets == key && (e.ends.0 == v || e.ends.1 == v))
    }

    /// Image under `x ↦ scale · x + shift` (scale > 0). Labels and facet
    /// normals are unchanged; offsets become `scale · b + n · shift`.
    pub fn transformed(&self, scale: &BigRational, shift: &RatVector) -> Result<Self, PolytopeError> {
        if !scale.is_positive() {
            return Err(PolytopeError::Placement("scale must be positive".into()));
        }
        let facets = self
            .facets
            .iter()
            .map(|h| Halfspace {
                label: h.label.clone(),
                normal: h.normal.clone(),
                offset: &h.offset * scale + shift.dot_int(&h.normal),
            })
            .collect();
        build_polytope(self.dim, facets)
    }

    /// Counter-clockwise boundary walk of a polygon.
    ///
    /// Returns `(vertex, facet)` pairs where `facet` carries the edge from
    /// `vertex` to the next vertex in the cycle. The walk starts at the
    /// counter-clockwise start of `first_facet`.
    pub fn ccw_cycle_from(&self, first_facet: usize) -> Vec<(usize, usize)> {
        assert_eq!(self.dim, 2, "boundary cycles are defined for polygons");
        let start_edge = self
            .edges
            .iter()
            .find(|e| e.facets == [first_facet])
            .expect("every facet of a polygon carries an edge");
        let (a, b) = start_edge.ends;
        let start = if self.ccw_along(a, b, first_facet) { a } else { b };
        let mut out = Vec::with_capacity(self.vertices.len());
        let (mut v, mut f) = (start, first_facet);
        loop {
            out.push((v, f));
            let e = self.edge_leaving(v, other_facet(&self.vertices[v], f)).expect("edge");
            let w = if e.ends.0 == v { e.ends.1 } else { e.ends.0 };
            f = other_facet(&self.vertices[w], f);
            v = w;
            if v == start {
                break;
            }
        }
        out
    }

    /// Counter-clockwise boundary walk of a polygon starting at vertex `v`.
    pub fn ccw_cycle_at(&self, v: usize) -> Vec<(usize, usize)> {
        self.vertices[v]
            .facets
            .iter()
            .map(|&f| self.ccw_cycle_from(f))
            .find(|c| c[0].0 == v)
            .expect("one facet at each polygon vertex starts there")
    }

    /// True when walking from `a` to `b` along facet `f` keeps the interior
    /// on the left.
    fn ccw_along(&self, a: usize, b: usize, f: usize) -> bool {
        let d = self.vertices[b].point.sub(&self.vertices[a].point);
        let n = &self.facets[f].normal;
        let cross = &d[0] * BigRational::from_integer(n[1].clone())
            - &d[1] * BigRational::from_integer(n[0].clone());
        cross.is_positive()
    }
}

fn other_facet(v: &Vertex, f: usize) -> usize {
    *v.facets.iter().find(|&&g| g != f).expect("polygon vertices lie on two facets")
}

/// Builds a simple polytope from half-spaces `normal · x ≥ offset`.
pub fn build_polytope(dim: usize, halfspaces: Vec<Halfspace>) -> Result<SimplePolytope, PolytopeError> {
    if dim < 2 {
        return Err(PolytopeError::Dimension(format!("dimension must be at least 2, got {dim}")));
    }
    for (i, h) in halfspaces.iter().enumerate() {
        if h.normal.len() != dim {
            return Err(PolytopeError::Dimension(format!(
                "half-space {i} has a normal of length {}, expected {dim}",
                h.normal.len()
            )));
        }
        if h.normal.iter().all(Zero::is_zero) {
            return Err(PolytopeError::ZeroNormal(i));
        }
    }
    let rows: Vec<Vec<BigRational>> = halfspaces
        .iter()
        .map(|h| h.normal.iter().cloned().map(BigRational::from_integer).collect())
        .collect();

    let mut vertices: Vec<Vertex> = Vec::new();
    for subset in (0..halfspaces.len()).combinations(dim) {
        let a: Vec<Vec<BigRational>> = subset.iter().map(|&i| rows[i].clone()).collect();
        let b: Vec<BigRational> = subset.iter().map(|&i| halfspaces[i].offset.clone()).collect();
        let Some(x) = solve_rational(&a, &b) else { continue };
        let x = RatVector::new(x);
        let mut tight = Vec::new();
        let mut feasible = true;
        for (j, h) in halfspaces.iter().enumerate() {
            let s = h.slack(&x);
            if s.is_negative() {
                feasible = false;
                break;
            }
            if s.is_zero() {
                tight.push(j);
            }
        }
        if !feasible {
            continue;
        }
        if tight.len() > dim {
            return Err(PolytopeError::NotSimple {
                point: x,
                count: tight.len(),
            });
        }
        vertices.push(Vertex {
            point: x,
            facets: subset,
        });
    }

    if vertices.is_empty() {
        let sys: Vec<Constraint> = halfspaces.iter().map(|h| h.constraint(false)).collect();
        return Err(if is_feasible(&sys) {
            PolytopeError::Unbounded
        } else {
            PolytopeError::Empty
        });
    }
    if let Some(f) = (0..halfspaces.len()).find(|f| !vertices.iter().any(|v| v.facets.contains(f))) {
        return Err(PolytopeError::RedundantFacet(f));
    }

    let mut ridges: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (vi, v) in vertices.iter().enumerate() {
        for key in v.facets.iter().copied().combinations(dim - 1) {
            ridges.entry(key).or_default().push(vi);
        }
    }
    if ridges.values().any(|vs| vs.len() == 1) {
        return Err(PolytopeError::Unbounded);
    }
    let edges: Vec<Edge> = ridges
        .into_iter()
        .filter(|(_, vs)| vs.len() == 2)
        .map(|(facets, vs)| Edge {
            ends: (vs[0], vs[1]),
            facets,
        })
        .collect();

    let base = &vertices[0].point;
    let diffs: Vec<Vec<BigInt>> = vertices[1..]
        .iter()
        .map(|v| integer_direction(&v.point.sub(base)))
        .collect();
    if rational_rank(&diffs) < dim {
        return Err(PolytopeError::NotFullDimensional);
    }

    Ok(SimplePolytope {
        dim,
        facets: halfspaces,
        vertices,
        edges,
    })
}

/// Builds a polygon from its vertices listed counter-clockwise.
///
/// Facet `i` is the edge from `points[i]` to `points[i + 1]`; its inward
/// normal is the primitive integer vector along the left-hand perpendicular.
pub fn polygon_from_vertices(points: &[RatVector]) -> Result<SimplePolytope, PolytopeError> {
    let k = points.len();
    if k < 3 {
        return Err(PolytopeError::VertexCycle(format!("need at least 3 vertices, got {k}")));
    }
    if let Some(p) = points.iter().find(|p| p.dim() != 2) {
        return Err(PolytopeError::VertexCycle(format!("vertex {p} is not 2-dimensional")));
    }
    let twice_area: BigRational = (0..k)
        .map(|i| {
            let (p, q) = (&points[i], &points[(i + 1) % k]);
            &p[0] * &q[1] - &p[1] * &q[0]
        })
        .sum();
    if !twice_area.is_positive() {
        return Err(PolytopeError::VertexCycle(
            "vertices must be listed counter-clockwise".into(),
        ));
    }
    let mut halfspaces = Vec::with_capacity(k);
    for i in 0..k {
        let (p, q) = (&points[i], &points[(i + 1) % k]);
        let d = q.sub(p);
        if d.is_zero() {
            return Err(PolytopeError::VertexCycle(format!("repeated vertex {p}")));
        }
        let perp = RatVector::new(vec![-d[1].clone(), d[0].clone()]);
        let normal = integer_direction(&perp);
        let offset = p.dot_int(&normal);
        halfspaces.push(Halfspace::new(normal, offset));
    }
    let poly = build_polytope(2, halfspaces)?;
    if poly.vertices.len() != k || !points.iter().all(|p| poly.vertices.iter().any(|v| &v.point == p)) {
        return Err(PolytopeError::VertexCycle("the cycle is not strictly convex".into()));
    }
    Ok(poly)
}

/// Primitive integer vector positively proportional to a nonzero rational one.
pub fn integer_direction(v: &RatVector) -> Vec<BigInt> {
    let lcm = v
        .coords()
        .iter()
        .fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let ints: Vec<BigInt> = v
        .coords()
        .iter()
        .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = gcd_all(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    pub(crate) fn pt(c: &[i64]) -> RatVector {
        RatVector::from_i64(c)
    }

    pub(crate) fn unit_square() -> SimplePolytope {
        build_polytope(
            2,
            vec![
                Halfspace::from_i64(&[1, 0], 0),
                Halfspace::from_i64(&[0, 1], 0),
                Halfspace::from_i64(&[-1, 0], -1),
                Halfspace::from_i64(&[0, -1], -1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn square_has_four_vertices_and_edges() {
        let sq = unit_square();
        assert_eq!(sq.vertices().len(), 4);
        assert_eq!(sq.edges().len(), 4);
    }

    #[test]
    fn triangle_vertices() {
        let t = build_polytope(
            2,
            vec![
                Halfspace::from_i64(&[0, 1], 0),
                Halfspace::from_i64(&[1, 0], 0),
                Halfspace::from_i64(&[-1, -1], -1),
            ],
        )
        .unwrap();
        let mut pts: Vec<RatVector> = t.vertices().iter().map(|v| v.point.clone()).collect();
        pts.sort();
        assert_eq!(pts, vec![pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0])]);
    }

    #[test]
    fn redundant_inequality_is_rejected() {
        let mut hs = unit_square().facets().to_vec();
        hs.push(Halfspace::from_i64(&[1, 1], -1));
        assert_eq!(build_polytope(2, hs), Err(PolytopeError::RedundantFacet(4)));
    }

    #[test]
    fn unbounded_and_empty() {
        let quadrant = vec![Halfspace::from_i64(&[1, 0], 0), Halfspace::from_i64(&[0, 1], 0)];
        assert_eq!(build_polytope(2, quadrant), Err(PolytopeError::Unbounded));
        let strip = vec![Halfspace::from_i64(&[1, 0], 0), Halfspace::from_i64(&[-1, 0], -1)];
        assert_eq!(build_polytope(2, strip), Err(PolytopeError::Unbounded));
        let empty = vec![
            Halfspace::from_i64(&[1, 0], 1),
            Halfspace::from_i64(&[-1, 0], 0),
            Halfspace::from_i64(&[0, 1], 0),
        ];
        assert_eq!(build_polytope(2, empty), Err(PolytopeError::Empty));
    }

    #[test]
    fn non_simple_pyramid() {
        // square pyramid: apex lies on four facets
        let hs = vec![
            Halfspace::from_i64(&[0, 0, 1], 0),
            Halfspace::from_i64(&[1, 0, -1], -1),
            Halfspace::from_i64(&[-1, 0, -1], -1),
            Halfspace::from_i64(&[0, 1, -1], -1),
            Halfspace::from_i64(&[0, -1, -1], -1),
        ];
        assert!(matches!(build_polytope(3, hs), Err(PolytopeError::NotSimple { count: 4, .. })));
    }

    #[test]
    fn cube_combinatorics() {
        let mut hs = Vec::new();
        for i in 0..3 {
            let mut e = [0i64; 3];
            e[i] = 1;
            hs.push(Halfspace::from_i64(&e, 0));
            e[i] = -1;
            hs.push(Halfspace::from_i64(&e, -1));
        }
        let cube = build_polytope(3, hs).unwrap();
        assert_eq!(cube.vertices().len(), 8);
        assert_eq!(cube.edges().len(), 12);
    }

    #[test]
    fn polygon_from_ccw_vertices() {
        let pts = [pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2])];
        let t = polygon_from_vertices(&pts).unwrap();
        assert_eq!(t.facets()[0].normal, vec![BigInt::from(0), BigInt::from(1)]);
        assert_eq!(t.facets()[1].normal, vec![BigInt::from(-1), BigInt::from(-1)]);
        assert_eq!(t.facets()[1].offset, q(-2, 1));
        let cw: Vec<RatVector> = pts.iter().rev().cloned().collect();
        assert!(matches!(polygon_from_vertices(&cw), Err(PolytopeError::VertexCycle(_))));
        let reflex = [pt(&[0, 0]), pt(&[4, 0]), pt(&[1, 1]), pt(&[0, 4])];
        assert!(polygon_from_vertices(&reflex).is_err());
    }

    #[test]
    fn ccw_cycle_of_square() {
        let sq = unit_square();
        let cycle = sq.ccw_cycle_from(0);
        // facet 0 is x >= 0, traversed downward from (0,1) to (0,0)
        assert_eq!(sq.vertices()[cycle[0].0].point, pt(&[0, 1]));
        let facets: Vec<usize> = cycle.iter().map(|&(_, f)| f).collect();
        assert_eq!(facets, vec![0, 1, 2, 3]);
    }

    #[test]
    fn primitive_directions() {
        let v = RatVector::new(vec![q(1, 2), q(-3, 4)]);
        assert_eq!(integer_direction(&v), vec![BigInt::from(2), BigInt::from(-3)]);
    }
}
