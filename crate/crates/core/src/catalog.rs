//! Ready-made characteristic pairs used throughout the docs, examples and
//! tests. Every constructor returns a validated pair.

use num_rational::BigRational;

use crate::charpair::CharacteristicPair;
use crate::exactlin::RatVector;
use crate::polytope::{build_polytope, polygon_from_vertices, Halfspace, PolytopeWithHoles, SimplePolytope};

/// Counter-clockwise polygon through integer points, with facets labelled
/// `prefix1, prefix2, …` in cycle order.
pub fn lattice_polygon(points: &[[i64; 2]], prefix: &str) -> SimplePolytope {
    let pts: Vec<RatVector> = points.iter().map(|p| RatVector::from_i64(p)).collect();
    let poly = polygon_from_vertices(&pts).expect("catalog polygons are convex and counter-clockwise");
    relabel(poly, prefix)
}

fn relabel(poly: SimplePolytope, prefix: &str) -> SimplePolytope {
    let facets = poly
        .facets()
        .iter()
        .enumerate()
        .map(|(i, h)| h.clone().labeled(format!("{prefix}{}", i + 1)))
        .collect();
    build_polytope(poly.dim(), facets).expect("relabelling keeps geometry")
}

fn pair(body: PolytopeWithHoles, lambda: &[[i64; 2]]) -> CharacteristicPair {
    CharacteristicPair::from_i64(body, lambda)
        .and_then(CharacteristicPair::validated)
        .expect("catalog pairs are valid")
}

/// The standard triangle `{y ≥ 0, x + y ≤ 1, x ≥ 0}` with
/// `λ = (0,1), (-1,-1), (1,0)`: the complex projective plane.
pub fn cp2() -> CharacteristicPair {
    let tri = build_polytope(
        2,
        vec![
            Halfspace::from_i64(&[0, 1], 0).labeled("bottom"),
            Halfspace::from_i64(&[-1, -1], -1).labeled("diagonal"),
            Halfspace::from_i64(&[1, 0], 0).labeled("left"),
        ],
    )
    .expect("triangle");
    pair(PolytopeWithHoles::convex(tri), &[[0, 1], [-1, -1], [1, 0]])
}

/// The unit square `{x ≥ 0, y ≥ 0, x ≤ 1, y ≤ 1}` with
/// `λ = (1,0), (0,1), (-1,0), (0,-1)`: `CP^1 × CP^1`.
pub fn cp1xcp1() -> CharacteristicPair {
    let sq = build_polytope(
        2,
        vec![
            Halfspace::from_i64(&[1, 0], 0).labeled("left"),
            Halfspace::from_i64(&[0, 1], 0).labeled("bottom"),
            Halfspace::from_i64(&[-1, 0], -1).labeled("right"),
            Halfspace::from_i64(&[0, -1], -1).labeled("top"),
        ],
    )
    .expect("square");
    pair(PolytopeWithHoles::convex(sq), &[[1, 0], [0, 1], [-1, 0], [0, -1]])
}

/// A pentagon with `λ = (1,0), (-1,1), (1,-2), (0,1), (-1,-1)` on its edges in
/// counter-clockwise order: `CP^2 # CP^2 # CP^2` with a positive
/// omniorientation.
pub fn pentagon_y() -> CharacteristicPair {
    let poly = lattice_polygon(&[[0, 0], [2, 0], [3, 1], [2, 2], [0, 2]], "Y");
    pair(PolytopeWithHoles::convex(poly), &PENTAGON_Y_LAMBDA)
}

pub const PENTAGON_Y_LAMBDA: [[i64; 2]; 5] = [[1, 0], [-1, 1], [1, -2], [0, 1], [-1, -1]];

/// The square `[0,8]²` with `λ = (1,0), (0,1), (-1,k), (0,-1)` counter-clockwise
/// from the origin: the Hirzebruch surface of degree `k`.
pub fn hirzebruch(k: i64) -> CharacteristicPair {
    let sq = lattice_polygon(&HIRZEBRUCH_SQUARE, "H");
    pair(PolytopeWithHoles::convex(sq), &hirzebruch_lambda(k))
}

const HIRZEBRUCH_SQUARE: [[i64; 2]; 4] = [[0, 0], [8, 0], [8, 8], [0, 8]];
const SMALL_TRIANGLE: [[i64; 2]; 3] = [[2, 2], [4, 2], [2, 4]];
const CP2_LAMBDA: [[i64; 2]; 3] = [[0, 1], [-1, -1], [1, 0]];

fn hirzebruch_lambda(k: i64) -> [[i64; 2]; 4] {
    [[1, 0], [0, 1], [-1, k], [0, -1]]
}

/// Hirzebruch square `[0,8]²` with a triangular hole `(2,2), (4,2), (2,4)`
/// carrying the projective-plane vectors: the fiber sum of the Hirzebruch
/// surface of degree `k` with `CP^2`.
pub fn hirzebruch_cp2(k: i64) -> CharacteristicPair {
    let outer = lattice_polygon(&HIRZEBRUCH_SQUARE, "H");
    let hole = lattice_polygon(&SMALL_TRIANGLE, "T");
    let body = PolytopeWithHoles::build(outer, vec![hole]).expect("hole is interior");
    let mut lambda = hirzebruch_lambda(k).to_vec();
    lambda.extend(CP2_LAMBDA);
    pair(body, &lambda)
}

/// The square `[0,4]²` with the hole `[1,2]²`, both carrying the vectors of
/// `CP^1 × CP^1`.
pub fn square_in_square() -> CharacteristicPair {
    let outer = lattice_polygon(&[[0, 0], [4, 0], [4, 4], [0, 4]], "O");
    let hole = lattice_polygon(&[[1, 1], [2, 1], [2, 2], [1, 2]], "I");
    let body = PolytopeWithHoles::build(outer, vec![hole]).expect("hole is interior");
    let square = [[0, 1], [1, 0], [0, 1], [1, 0]];
    let lambda: Vec<[i64; 2]> = square.iter().chain(square.iter()).copied().collect();
    pair(body, &lambda)
}

/// The pentagon of [`pentagon_y`] with a quadrilateral hole, `l₀ = 5` and
/// `l₁ = 4`: the fiber sum of `Y` with `CP^1 × CP^1`.
pub fn pentagon_with_square_hole() -> CharacteristicPair {
    let outer = lattice_polygon(&[[0, 0], [8, 0], [12, 4], [8, 8], [0, 8]], "Y");
    let hole = lattice_polygon(&[[3, 3], [5, 3], [5, 5], [3, 5]], "S");
    let body = PolytopeWithHoles::build(outer, vec![hole]).expect("hole is interior");
    let mut lambda = PENTAGON_Y_LAMBDA.to_vec();
    lambda.extend([[1, 0], [0, 1], [-1, 0], [0, -1]]);
    pair(body, &lambda)
}

/// The standard 3-simplex with `λ = e₁, e₂, e₃, (-1,-1,-1)`: `CP^3`.
pub fn cp3() -> CharacteristicPair {
    let simplex = build_polytope(
        3,
        vec![
            Halfspace::from_i64(&[1, 0, 0], 0),
            Halfspace::from_i64(&[0, 1, 0], 0),
            Halfspace::from_i64(&[0, 0, 1], 0),
            Halfspace::from_i64(&[-1, -1, -1], -1),
        ],
    )
    .expect("simplex");
    CharacteristicPair::from_i64(
        PolytopeWithHoles::convex(simplex),
        &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]],
    )
    .and_then(CharacteristicPair::validated)
    .expect("valid")
}

/// A rational point, for building examples by hand.
pub fn point(coords: &[(i64, i64)]) -> RatVector {
    RatVector::new(
        coords
            .iter()
            .map(|&(p, q)| BigRational::new(p.into(), q.into()))
            .collect(),
    )
}
