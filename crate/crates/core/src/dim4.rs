//! Invariants of 4-dimensional torus manifolds (`n = 2`).
//!
//! Over a polygon with `s` polygonal holes and `m` vertices in total, the
//! manifold has free homology of ranks `(1, s, m + 2s - 2, s, 1)`. Its middle
//! intersection form is assembled from characteristic spheres over facets
//! (adjacent facets meet once with the sign of their shared vertex) and, when
//! there is one hole, two further spheres over the arc joining the closest
//! outer and hole vertices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::charpair::{frame_unchecked, is_positive_omniorientation, CharError, CharacteristicPair, VertexFrame};
use crate::exactlin::{det_exact, signature, unimodular_inverse, IntMatrix};
use crate::genus::{chi_y, GenusError};
use crate::polytope::{FacetId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Dim4Error {
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Genus(#[from] GenusError),
    #[error("4-manifold invariants need a 2-dimensional polytope, got dimension {0}")]
    Dimension(usize),
    #[error("{0}")]
    Scope(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Betti numbers and CW cell counts in degrees 0 through 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: [usize; 5],
    /// All homology is free.
    pub torsion: [usize; 5],
    pub cell_counts: [usize; 5],
    pub m: usize,
    pub s: usize,
}

impl HomologyProfile {
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.betti)
    }
}

fn alternating_sum(v: &[usize; 5]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// A degree-2 homology generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// The characteristic sphere over a facet.
    Facet(FacetId),
    /// The sphere over the arc from the outer to the hole vertex, collapsing
    /// the circle subgroup in the given direction at both ends.
    Arc([i64; 2]),
}

impl Generator {
    pub fn label(&self, pair: &CharacteristicPair) -> String {
        match self {
            Generator::Facet(f) => pair.body().facet_label(*f),
            Generator::Arc([a, b]) => format!("arc({a},{b})"),
        }
    }
}

/// Intersection form on a basis of `H_2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionData {
    pub generators: Vec<Generator>,
    pub matrix: IntMatrix,
    /// Pairing of the degree-1 and degree-3 generators when there is one hole.
    pub one_three_pairing: Option<i32>,
}

impl IntersectionData {
    pub fn signature(&self) -> i64 {
        signature(&self.matrix).expect("intersection forms are symmetric")
    }

    pub fn determinant(&self) -> BigInt {
        det_exact(&self.matrix).expect("intersection forms are square")
    }

    /// Entry `x_i · x_j` as an `i64`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[(i, j)].to_i64().expect("intersection numbers are small")
    }
}

fn require_planar(pair: &CharacteristicPair) -> Result<(), Dim4Error> {
    if pair.dim() != 2 {
        return Err(Dim4Error::Dimension(pair.dim()));
    }
    Ok(())
}

fn require_validated(pair: &CharacteristicPair) -> Result<(), Dim4Error> {
    if !pair.is_validated() {
        return Err(CharError::NotValidated.into());
    }
    Ok(())
}

/// Cell counts of the CW structure built from the outer polygon's 1-skeleton
/// minus one edge, an arc and a circle's worth of cells per hole, one 3-cell
/// per hole and a single top cell. The alternating sum is always `m`.
pub fn cw_cell_counts(pair: &CharacteristicPair) -> Result<[usize; 5], Dim4Error> {
    require_planar(pair)?;
    let body = pair.body();
    let l0 = body.outer().facet_count();
    let s = body.hole_count();
    let holes: usize = body.holes().iter().map(|h| h.facet_count()).sum();
    Ok([l0 - 1 + holes, l0 - 2 + holes + s, l0 - 2 + holes + 2 * s, s, 1])
}

/// Free homology of ranks `(1, s, m + 2s - 2, s, 1)`.
pub fn homology_groups(pair: &CharacteristicPair) -> Result<HomologyProfile, Dim4Error> {
    require_planar(pair)?;
    require_validated(pair)?;
    let body = pair.body();
    let m = body.vertex_count();
    let s = body.hole_count();
    Ok(HomologyProfile {
        betti: [1, s, m + 2 * s - 2, s, 1],
        torsion: [0; 5],
        cell_counts: cw_cell_counts(pair)?,
        m,
        s,
    })
}

/// Facet pairing of one polygonal component in counter-clockwise order.
struct PolygonPairing {
    /// Facets in cycle order.
    facets: Vec<FacetId>,
    /// Full `l × l` pairing in cycle order.
    matrix: Vec<Vec<BigInt>>,
}

impl PolygonPairing {
    /// Cycle starting at the given vertex of component `k`.
    fn new(pair: &CharacteristicPair, k: usize, start: usize) -> Result<Self, Dim4Error> {
        let body = pair.body();
        let comp = &body.components()[k];
        let cycle = comp.ccw_cycle_at(start);
        let l = cycle.len();
        let facets: Vec<FacetId> = cycle.iter().map(|&(_, f)| body.global_facet(k, f)).collect();
        let mut g = vec![vec![BigInt::zero(); l]; l];
        // vertex i of the cycle joins facets i-1 and i
        for (i, &(v, _)) in cycle.iter().enumerate() {
            let sign = frame_unchecked(pair, body.global_vertex(k, v)).sign;
            let prev = (i + l - 1) % l;
            g[prev][i] = BigInt::from(sign);
            g[i][prev] = BigInt::from(sign);
        }
        for j in 0..l {
            let mut rhs = [BigInt::zero(), BigInt::zero()];
            for i in (0..l).filter(|&i| i != j) {
                for (t, r) in rhs.iter_mut().enumerate() {
                    *r -= &pair.lambda(facets[i])[t] * &g[i][j];
                }
            }
            let lj = pair.lambda(facets[j]);
            let t = if lj[0].is_zero() { 1 } else { 0 };
            let q = &rhs[t] / &lj[t];
            if &q * &lj[0] != rhs[0] || &q * &lj[1] != rhs[1] {
                return Err(Dim4Error::Internal(format!(
                    "no integral self-intersection for {}",
                    facets[j]
                )));
            }
            g[j][j] = q;
        }
        Ok(Self { facets, matrix: g })
    }

    fn restricted(&self) -> Vec<Vec<BigInt>> {
        let r = self.facets.len() - 2;
        self.matrix[..r].iter().map(|row| row[..r].to_vec()).collect()
    }
}

/// Intersection form of a quasitoric 4-manifold (`s = 0`).
///
/// The boundary cycle starts at the counter-clockwise start of the
/// lowest-numbered facet; the classes of the last two facets of the cycle are
/// dropped to leave a basis of `H_2`.
pub fn quasitoric_intersection_form(pair: &CharacteristicPair) -> Result<IntersectionData, Dim4Error> {
    require_planar(pair)?;
    require_validated(pair)?;
    let body = pair.body();
    if body.hole_count() != 0 {
        return Err(Dim4Error::Scope(format!(
            "quasitoric intersection form needs a polygon without holes, got {} holes",
            body.hole_count()
        )));
    }
    let start = body.outer().ccw_cycle_from(0)[0].0;
    let pp = PolygonPairing::new(pair, 0, start)?;
    let restricted = pp.restricted();
    Ok(IntersectionData {
        generators: pp.facets[..restricted.len()].iter().map(|&f| Generator::Facet(f)).collect(),
        matrix: IntMatrix::from_rows(restricted).expect("square"),
        one_three_pairing: None,
    })
}

/// Outer vertex `v₁` and hole vertex `u₁` at minimum distance, ties broken by
/// lowest ids.
pub fn closest_vertex_pair(pair: &CharacteristicPair) -> (VertexId, VertexId) {
    let body = pair.body();
    let mut best: Option<(num_rational::BigRational, VertexId, VertexId)> = None;
    for v in body.vertex_ids().filter(|&v| body.locate_vertex(v).0 == 0) {
        for u in body.vertex_ids().filter(|&u| body.locate_vertex(u).0 == 1) {
            let d = body.vertex_point(u).sub(body.vertex_point(v));
            let d2 = d.dot(&d);
            if best.as_ref().is_none_or(|(b, _, _)| d2 < *b) {
                best = Some((d2, v, u));
            }
        }
    }
    let (_, v, u) = best.expect("one-hole bodies have outer and hole vertices");
    (v, u)
}

/// Coordinates of `c` in the frame basis: `(μ_{f_1}(c), μ_{f_2}(c))`.
fn frame_coords(frame: &VertexFrame, c: [i64; 2]) -> [BigInt; 2] {
    let inv = unimodular_inverse(&frame.lambda_v).expect("validated frames are unimodular");
    let c = [BigInt::from(c[0]), BigInt::from(c[1])];
    let x = inv.mul_vec(&c).expect("2x2");
    [x[0].clone(), x[1].clone()]
}

const ARC_DIRECTIONS: [[i64; 2]; 2] = [[0, 1], [1, 0]];

/// Intersection form of a torus manifold over a polygon with one hole.
///
/// Generators: the kept outer facet spheres, the two arc spheres for the
/// circle directions `(0,1)` and `(1,0)`, then every hole facet sphere. Facet
/// blocks come from the outer and hole polygons separately (with no cross
/// terms); an arc sphere meets the facet spheres at `v₁` and `u₁` with the
/// frame coordinates of its direction, negated on the hole side, and its
/// self-pairings localize at the two ends.
pub fn one_hole_intersection_matrix(pair: &CharacteristicPair) -> Result<IntersectionData, Dim4Error> {
    require_planar(pair)?;
    require_validated(pair)?;
    let body = pair.body();
    if body.hole_count() != 1 {
        return Err(Dim4Error::Scope(format!(
            "one-hole intersection form needs exactly one hole, got {}",
            body.hole_count()
        )));
    }
    let (v1, u1) = closest_vertex_pair(pair);
    let outer = PolygonPairing::new(pair, 0, body.locate_vertex(v1).1)?;
    let hole = PolygonPairing::new(pair, 1, body.locate_vertex(u1).1)?;
    let fv = frame_unchecked(pair, v1);
    let fu = frame_unchecked(pair, u1);
    let (sv, su) = (BigInt::from(fv.sign), BigInt::from(fu.sign));
    let mv: Vec<[BigInt; 2]> = ARC_DIRECTIONS.iter().map(|&c| frame_coords(&fv, c)).collect();
    let mu: Vec<[BigInt; 2]> = ARC_DIRECTIONS.iter().map(|&c| frame_coords(&fu, c)).collect();

    let kept = outer.facets.len() - 2;
    let l1 = hole.facets.len();
    let size = kept + 2 + l1;
    let mut g = vec![vec![BigInt::zero(); size]; size];
    let restricted = outer.restricted();
    for i in 0..kept {
        for j in 0..kept {
            g[i][j] = restricted[i][j].clone();
        }
    }
    for i in 0..l1 {
        for j in 0..l1 {
            g[kept + 2 + i][kept + 2 + j] = hole.matrix[i][j].clone();
        }
    }
    for p in 0..2 {
        let yp = kept + p;
        for q in 0..2 {
            g[yp][kept + q] = &mv[p][0] * &mv[q][1] * &sv + &mu[p][1] * &mu[q][0] * &su;
        }
        for (slot, &f) in fv.facets.iter().enumerate() {
            if let Some(i) = outer.facets[..kept].iter().position(|&x| x == f) {
                g[i][yp] = mv[p][slot].clone();
                g[yp][i] = mv[p][slot].clone();
            }
        }
        for (slot, &f) in fu.facets.iter().enumerate() {
            let i = hole.facets.iter().position(|&x| x == f).expect("frame facets lie on the hole");
            g[kept + 2 + i][yp] = -mu[p][slot].clone();
            g[yp][kept + 2 + i] = -mu[p][slot].clone();
        }
    }
    let matrix = IntMatrix::from_rows(g).expect("square");
    if !matrix.is_symmetric() {
        return Err(Dim4Error::Internal("arc sphere pairings are not symmetric".into()));
    }
    let mut generators: Vec<Generator> = outer.facets[..kept].iter().map(|&f| Generator::Facet(f)).collect();
    generators.extend(ARC_DIRECTIONS.iter().map(|&c| Generator::Arc(c)));
    generators.extend(hole.facets.iter().map(|&f| Generator::Facet(f)));
    Ok(IntersectionData {
        generators,
        matrix,
        one_three_pairing: Some(1),
    })
}

/// The intersection form for `s ∈ {0, 1}`.
pub fn intersection_form(pair: &CharacteristicPair) -> Result<IntersectionData, Dim4Error> {
    require_planar(pair)?;
    match pair.body().hole_count() {
        0 => quasitoric_intersection_form(pair),
        1 => one_hole_intersection_matrix(pair),
        s => Err(Dim4Error::Scope(format!(
            "intersection forms are available for at most one hole, got {s}"
        ))),
    }
}

/// `(c₁², c₂)` with `c₂ = χ(M) = m` and `c₁² = 2c₂ + 3·signature`.
pub fn chern_numbers_dim4(pair: &CharacteristicPair) -> Result<(i64, i64), Dim4Error> {
    let h = homology_groups(pair)?;
    let c2 = h.euler_characteristic();
    let sig = chi_y(pair, None)?.polynomial.signature();
    Ok((2 * c2 + 3 * sig, c2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymplecticStatus {
    /// No invariant symplectic form exists.
    Excluded,
    /// This tool finds no obstruction.
    Unobstructed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFlags {
    pub invariant_almost_complex: bool,
    pub invariant_symplectic: SymplecticStatus,
    pub kahler_excluded: bool,
    pub complex_excluded_by_bmy: bool,
}

/// Existence and obstruction flags for extra structure.
///
/// An invariant almost complex structure exists iff the omniorientation is
/// positive. Holes rule out invariant symplectic forms; a single hole gives
/// odd `b₁` and rules out Kähler metrics. In dimension 4 with positive
/// omniorientation, `c₁² > 3c₂` violates Bogomolov–Miyaoka–Yau.
pub fn structure_flags(pair: &CharacteristicPair) -> Result<StructureFlags, Dim4Error> {
    let positive = is_positive_omniorientation(pair)?;
    let s = pair.body().hole_count();
    let bmy = if pair.dim() == 2 && positive {
        let (c1_sq, c2) = chern_numbers_dim4(pair)?;
        c1_sq > 3 * c2
    } else {
        false
    };
    Ok(StructureFlags {
        invariant_almost_complex: positive,
        invariant_symplectic: if s >= 1 {
            SymplecticStatus::Excluded
        } else {
            SymplecticStatus::Unobstructed
        },
        kahler_excluded: s == 1,
        complex_excluded_by_bmy: bmy,
    })
}

impl fmt::Display for SymplecticStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymplecticStatus::Excluded => "excluded",
            SymplecticStatus::Unobstructed => "unobstructed by this tool",
        })
    }
}

/// `|det| = 1` check for intersection forms.
pub fn is_unimodular(data: &IntersectionData) -> bool {
    data.determinant().abs() == BigInt::from(1)
}
