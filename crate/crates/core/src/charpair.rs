//! Characteristic functions on polytopes with holes.
//!
//! A [`CharacteristicPair`] attaches an integer vector `λ_i ∈ Z^n` to every
//! facet. It is valid when every `λ_i` is primitive and, for every face, the
//! vectors of the facets meeting there span a direct summand of `Z^n`. Each
//! vertex then carries a [`VertexFrame`] whose determinant is its sign.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::exactlin::{det2, det_exact, gcd_all, rational_det, smith_normal_form, IntMatrix, RatVector};
use crate::polytope::{FacetId, PolytopeWithHoles, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("expected {expected} characteristic vectors, got {found}")]
    LambdaCount { expected: usize, found: usize },
    #[error("characteristic vector {vector:?} of {facet} is not primitive")]
    Primitivity { facet: FacetId, vector: Vec<BigInt> },
    #[error("characteristic vectors of {} do not span a direct summand (elementary divisors {divisors:?})", FacetList(.facets))]
    Summand { facets: Vec<FacetId>, divisors: Vec<BigInt> },
    #[error("the characteristic pair has not been validated")]
    NotValidated,
}

struct FacetList<'a>(&'a [FacetId]);

impl fmt::Display for FacetList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().map(ToString::to_string).join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicPair {
    body: PolytopeWithHoles,
    lambda: Vec<Vec<BigInt>>,
    validated: bool,
}

impl CharacteristicPair {
    /// Pairs a body with one vector per facet (global facet order). The
    /// result is not yet validated.
    pub fn new(body: PolytopeWithHoles, lambda: Vec<Vec<BigInt>>) -> Result<Self, CharError> {
        if lambda.len() != body.facet_count() {
            return Err(CharError::LambdaCount {
                expected: body.facet_count(),
                found: lambda.len(),
            });
        }
        let n = body.dim();
        if let Some((i, v)) = lambda.iter().enumerate().find(|(_, v)| v.len() != n) {
            return Err(CharError::Dimension(format!(
                "vector of {} has length {}, expected {n}",
                FacetId(i),
                v.len()
            )));
        }
        Ok(Self {
            body,
            lambda,
            validated: false,
        })
    }

    pub fn from_i64<R: AsRef<[i64]>>(body: PolytopeWithHoles, lambda: &[R]) -> Result<Self, CharError> {
        let lambda = lambda
            .iter()
            .map(|v| v.as_ref().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::new(body, lambda)
    }

    /// Runs [`validate`] and marks the pair as validated on success.
    pub fn validated(mut self) -> Result<Self, CharError> {
        validate(&self)?;
        self.validated = true;
        Ok(self)
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub fn body(&self) -> &PolytopeWithHoles {
        &self.body
    }

    pub fn dim(&self) -> usize {
        self.body.dim()
    }

    pub fn lambda(&self, f: FacetId) -> &[BigInt] {
        &self.lambda[f.0]
    }

    pub fn lambdas(&self) -> &[Vec<BigInt>] {
        &self.lambda
    }

    /// The `n × m` matrix with columns `λ_1 … λ_m`.
    pub fn lambda_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.dim(), &self.lambda).expect("vector lengths checked")
    }

    /// Matrix with columns `λ_f` for the given facets, in order.
    pub fn lambda_columns(&self, facets: &[FacetId]) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = facets.iter().map(|&f| self.lambda[f.0].clone()).collect();
        IntMatrix::from_columns(self.dim(), &cols).expect("vector lengths checked")
    }

    /// The same pair with `λ_f` replaced by `-λ_f`. Validity is unaffected.
    pub fn with_negated(&self, f: FacetId) -> Self {
        let mut out = self.clone();
        for x in out.lambda[f.0].iter_mut() {
            *x = -&*x;
        }
        out
    }

    fn require_validated(&self) -> Result<(), CharError> {
        if self.validated {
            Ok(())
        } else {
            Err(CharError::NotValidated)
        }
    }
}

/// Summary of a successful validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Distinct faces (facet sets of size ≥ 2) whose summand condition was
    /// checked.
    pub faces_checked: usize,
}

/// Checks primitivity of every vector, then the direct-summand condition for
/// every face, by Smith normal form.
///
/// Faces are enumerated as subsets of vertex facet sets, vertices in id
/// order and subsets by increasing size then lexicographically, so the first
/// reported failure is deterministic.
pub fn validate(pair: &CharacteristicPair) -> Result<ValidationReport, CharError> {
    for f in pair.body.facet_ids() {
        let v = pair.lambda(f);
        if !gcd_all(v).is_one() {
            return Err(CharError::Primitivity {
                facet: f,
                vector: v.to_vec(),
            });
        }
    }
    let mut seen: BTreeSet<Vec<FacetId>> = BTreeSet::new();
    for v in pair.body.vertex_ids() {
        let facets = pair.body.vertex_facets(v);
        for k in 2..=facets.len() {
            for face in facets.iter().copied().combinations(k) {
                if !seen.insert(face.clone()) {
                    continue;
                }
                let snf = smith_normal_form(&pair.lambda_columns(&face));
                if snf.rank != k || !snf.is_unimodular_span() {
                    return Err(CharError::Summand {
                        facets: face,
                        divisors: snf.divisors,
                    });
                }
            }
        }
    }
    Ok(ValidationReport {
        faces_checked: seen.len(),
    })
}

/// Planar shortcut: a 2-dimensional pair is valid iff every vector is
/// primitive and `|det[λ_i λ_j]| = 1` whenever `F_i` and `F_j` share a vertex.
pub fn validate_planar(pair: &CharacteristicPair) -> Result<(), CharError> {
    if pair.dim() != 2 {
        return Err(CharError::Dimension(format!(
            "planar validation needs dimension 2, got {}",
            pair.dim()
        )));
    }
    for f in pair.body.facet_ids() {
        let v = pair.lambda(f);
        if !gcd_all(v).is_one() {
            return Err(CharError::Primitivity {
                facet: f,
                vector: v.to_vec(),
            });
        }
    }
    for v in pair.body.vertex_ids() {
        let fs = pair.body.vertex_facets(v);
        let d = det2(pair.lambda(fs[0]), pair.lambda(fs[1]));
        if !d.abs().is_one() {
            let divisors = vec![BigInt::one(), d.abs()];
            return Err(CharError::Summand { facets: fs, divisors });
        }
    }
    Ok(())
}

/// Ordered local data at a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFrame {
    pub vertex: VertexId,
    /// Facets `i_1 … i_n` in positively oriented edge order.
    pub facets: Vec<FacetId>,
    /// `e_k` runs along the edge at the vertex not contained in `F_{i_k}`.
    pub directions: Vec<RatVector>,
    /// Columns `λ_{i_1} … λ_{i_n}`.
    pub lambda_v: IntMatrix,
    pub sign: i32,
}

/// Orders the facets at `v` so that `det[e_1 … e_n] > 0`: ascending id, with
/// the last two swapped if the determinant is negative.
pub fn vertex_frame(pair: &CharacteristicPair, v: VertexId) -> Result<VertexFrame, CharError> {
    pair.require_validated()?;
    Ok(frame_unchecked(pair, v))
}

pub(crate) fn frame_unchecked(pair: &CharacteristicPair, v: VertexId) -> VertexFrame {
    let (mut facets, mut directions): (Vec<FacetId>, Vec<RatVector>) =
        pair.body.edge_directions_at_vertex(v).into_iter().unzip();
    let rows: Vec<Vec<BigRational>> = directions.iter().map(|d| d.coords().to_vec()).collect();
    if rational_det(&rows).is_negative() {
        let n = facets.len();
        facets.swap(n - 2, n - 1);
        directions.swap(n - 2, n - 1);
    }
    let lambda_v = pair.lambda_columns(&facets);
    let det = det_exact(&lambda_v).expect("square");
    let sign = if det.is_negative() { -1 } else { 1 };
    VertexFrame {
        vertex: v,
        facets,
        directions,
        lambda_v,
        sign,
    }
}

/// `σ(v)` for every vertex of every component.
pub fn all_signs(pair: &CharacteristicPair) -> Result<BTreeMap<VertexId, i32>, CharError> {
    pair.require_validated()?;
    Ok(pair
        .body
        .vertex_ids()
        .map(|v| (v, frame_unchecked(pair, v).sign))
        .collect())
}

/// True iff every vertex sign is `+1`.
pub fn is_positive_omniorientation(pair: &CharacteristicPair) -> Result<bool, CharError> {
    Ok(all_signs(pair)?.values().all(|&s| s == 1))
}
