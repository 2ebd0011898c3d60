use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{PolytopeError, PolytopeWithHoles, SimplePolytope};
use crate::exactlin::RatVector;

/// How pieces are scaled before being placed as holes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ScalePolicy {
    /// Fit each piece's bounding box into a cube of half-width
    /// `w / (4 · count)`, where `w` is the half-width of a cube around the
    /// outer vertex centroid that fits inside the outer body.
    #[default]
    Auto,
    /// Use the given scale factor for every piece.
    Fixed(BigRational),
}

/// Places scaled copies of `pieces` as holes inside `outer` with the default
/// policy.
pub fn place_holes(outer: &SimplePolytope, pieces: &[SimplePolytope]) -> Result<PolytopeWithHoles, PolytopeError> {
    place_holes_with(outer, pieces, &ScalePolicy::Auto)
}

/// Lays the pieces out in equal slots along the first coordinate axis through
/// the outer vertex centroid, then checks containment and disjointness.
///
/// Only translations and positive scalings are applied, so facet normals,
/// labels and combinatorics of every piece are preserved.
pub fn place_holes_with(
    outer: &SimplePolytope,
    pieces: &[SimplePolytope],
    policy: &ScalePolicy,
) -> Result<PolytopeWithHoles, PolytopeError> {
    let n = outer.dim();
    if let Some(p) = pieces.iter().find(|p| p.dim() != n) {
        return Err(PolytopeError::Dimension(format!(
            "piece of dimension {} cannot be placed in dimension {n}",
            p.dim()
        )));
    }
    if pieces.is_empty() {
        return Ok(PolytopeWithHoles::convex(outer.clone()));
    }
    let center = outer.vertex_centroid();
    let width = outer
        .facets()
        .iter()
        .map(|h| {
            let l1: BigInt = h.normal.iter().map(|x| x.abs()).sum();
            h.slack(&center) / BigRational::from_integer(l1)
        })
        .min()
        .expect("polytopes have facets");
    let count = BigRational::from_integer(pieces.len().into());
    let slot = &width / &count;

    let mut holes = Vec::with_capacity(pieces.len());
    for (i, piece) in pieces.iter().enumerate() {
        let (lo, hi) = piece.bounding_box();
        let half = BigRational::new(1.into(), 2.into());
        let mid: Vec<BigRational> = lo.coords().iter().zip(hi.coords()).map(|(a, b)| (a + b) * &half).collect();
        let scale = match policy {
            ScalePolicy::Fixed(s) => s.clone(),
            ScalePolicy::Auto => {
                let extent = lo
                    .coords()
                    .iter()
                    .zip(hi.coords())
                    .map(|(a, b)| (b - a) * &half)
                    .max()
                    .expect("dimension is positive");
                &width / (BigRational::from_integer(4.into()) * &count) / extent
            }
        };
        let mut target = center.coords().to_vec();
        let k = BigRational::from_integer((2 * i + 1).into());
        target[0] = &target[0] - &width + &slot * k;
        let shift: Vec<BigRational> = target
            .iter()
            .zip(&mid)
            .map(|(t, m)| t - &scale * m)
            .collect();
        holes.push(piece.transformed(&scale, &RatVector::new(shift))?);
    }
    PolytopeWithHoles::build(outer.clone(), holes).map_err(|e| PolytopeError::Placement(e.to_string()))
}
