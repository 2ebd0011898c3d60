//! Moment-angle data: the embedding coordinates `d_i`, the kernel lattice
//! `K = ker Λ`, and freeness of the `T_K` action.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::charpair::CharacteristicPair;
use crate::exactlin::{det_exact, is_feasible, kernel_lattice_basis, smith_normal_form, Constraint, IntMatrix, RatVector};
use crate::polytope::{PolytopeWithHoles, SimplePolytope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacError {
    #[error("point has {found} coordinates, expected {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("point {0} does not lie in the polytope")]
    Domain(RatVector),
}

/// Constants of the piecewise-affine embedding.
///
/// Around hole `k` the collar coordinate is
/// `p_k(x) = max(0, 1 - g_k(x) / ω)` where `g_k(x) = max_j (b_j - n_j · x)`
/// over the hole's facets; it is `1` on the hole boundary and `0` once `x`
/// is `ω` away in that gauge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingChart {
    pub collar: BigRational,
    /// `K_i` for each global facet (zero for outer facets).
    pub hole_weights: Vec<BigRational>,
}

impl EmbeddingChart {
    pub fn new(body: &PolytopeWithHoles) -> Self {
        let collar = collar_width(body);
        let mut hole_weights = vec![BigRational::zero(); body.outer().facet_count()];
        for hole in body.holes() {
            for h in hole.facets() {
                let reach = body
                    .outer()
                    .vertices()
                    .iter()
                    .map(|w| -h.slack(&w.point))
                    .max()
                    .expect("outer polytope has vertices");
                hole_weights.push(BigRational::one() + reach.max(collar.clone()));
            }
        }
        Self { collar, hole_weights }
    }

    /// Collar coordinates `p_{n+1} … p_{n+s}` of a point.
    pub fn lift(&self, body: &PolytopeWithHoles, x: &RatVector) -> Vec<BigRational> {
        body.holes()
            .iter()
            .map(|hole| {
                let p = BigRational::one() - gauge(hole, x) / &self.collar;
                p.max(BigRational::zero())
            })
            .collect()
    }

    /// `(d_1(x), …, d_m(x))`.
    pub fn evaluate(&self, body: &PolytopeWithHoles, x: &RatVector) -> RatVector {
        let p = self.lift(body, x);
        let total: BigRational = p.iter().sum();
        let mut d = Vec::with_capacity(body.facet_count());
        for f in body.facet_ids() {
            let slack = body.facet(f).slack(x);
            let (k, _) = body.locate_facet(f);
            if k == 0 {
                d.push(slack + &total);
            } else {
                let a = BigRational::one() - &p[k - 1];
                let others = &total - &p[k - 1];
                d.push(slack + &self.hole_weights[f.0] * &a + a + others);
            }
        }
        RatVector::new(d)
    }
}

fn gauge(hole: &SimplePolytope, x: &RatVector) -> BigRational {
    hole.facets()
        .iter()
        .map(|h| -h.slack(x))
        .max()
        .expect("holes have facets")
}

fn expanded(hole: &SimplePolytope, t: &BigRational) -> Vec<Constraint> {
    hole.facets()
        .iter()
        .map(|h| Constraint::from_int(&h.normal, &h.offset - t, false))
        .collect()
}

/// Half of the largest `t = 2^-i` for which every hole grown by `t` in its
/// gauge stays strictly inside the outer body and apart from the others.
fn collar_width(body: &PolytopeWithHoles) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let mut t = BigRational::one();
    loop {
        let grown: Vec<Vec<Constraint>> = body.holes().iter().map(|h| expanded(h, &t)).collect();
        let inside = grown.iter().all(|g| {
            body.outer().facets().iter().all(|f| {
                let mut sys = g.clone();
                let neg: Vec<BigInt> = f.normal.iter().map(|x| -x).collect();
                sys.push(Constraint::from_int(&neg, -f.offset.clone(), false));
                !is_feasible(&sys)
            })
        });
        let apart = (0..grown.len()).all(|a| {
            (a + 1..grown.len()).all(|b| {
                let sys: Vec<Constraint> = grown[a].iter().chain(&grown[b]).cloned().collect();
                !is_feasible(&sys)
            })
        });
        if inside && apart {
            return t / two;
        }
        t /= &two;
    }
}

/// Embedding coordinates of a point of `P`.
pub fn embedding_coordinates(pair: &CharacteristicPair, x: &RatVector) -> Result<RatVector, MacError> {
    let body = pair.body();
    if x.dim() != body.dim() {
        return Err(MacError::Dimension {
            expected: body.dim(),
            found: x.dim(),
        });
    }
    if !body.contains(x) {
        return Err(MacError::Domain(x.clone()));
    }
    Ok(EmbeddingChart::new(body).evaluate(body, x))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelData {
    /// `n × m`, columns `λ_1 … λ_m`.
    pub lambda: IntMatrix,
    /// `m × (m - n)`, a Hermite-reduced basis of `ker Λ`.
    pub kernel_basis: IntMatrix,
    pub torus_rank: usize,
}

pub fn kernel_data(pair: &CharacteristicPair) -> KernelData {
    let lambda = pair.lambda_matrix();
    let kernel_basis = kernel_lattice_basis(&lambda);
    let torus_rank = kernel_basis.cols();
    KernelData {
        lambda,
        kernel_basis,
        torus_rank,
    }
}

/// Whether `T_K` acts freely with quotient `M(P, λ)`: `Λ` must be onto `Z^n`,
/// and at every vertex the kernel basis together with the coordinate vectors
/// of the facets through it must form a basis of `Z^m`.
///
/// Works on unvalidated pairs and agrees with validation.
pub fn freeness_check(pair: &CharacteristicPair) -> bool {
    let kd = kernel_data(pair);
    let n = pair.dim();
    let snf = smith_normal_form(&kd.lambda);
    if snf.rank != n || !snf.is_unimodular_span() {
        return false;
    }
    let m = pair.body().facet_count();
    let body = pair.body();
    body.vertex_ids().all(|v| {
        let mut cols = kd.kernel_basis.columns();
        for f in body.vertex_facets(v) {
            let mut e = vec![BigInt::zero(); m];
            e[f.0] = BigInt::one();
            cols.push(e);
        }
        let mat = IntMatrix::from_columns(m, &cols).expect("column lengths are m");
        det_exact(&mat).expect("square").abs().is_one()
    })
}
