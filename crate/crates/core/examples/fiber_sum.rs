//! Fiber sums: placing polytopes as holes and checking additivity.

use tmh::charpair::CharacteristicPair;
use tmh::polytope::{place_holes_with, ScalePolicy};
use tmh::{catalog, dim4};

fn main() {
    let y = catalog::pentagon_y();
    let pieces = [catalog::pentagon_y(), catalog::cp2()];

    let holes: Vec<_> = pieces.iter().map(|p| p.body().outer().clone()).collect();
    let body = place_holes_with(y.body().outer(), &holes, &ScalePolicy::Auto).unwrap();
    for (k, hole) in body.holes().iter().enumerate() {
        let (lo, hi) = hole.bounding_box();
        println!("hole {} placed in the box {lo} .. {hi}", k + 1);
    }

    let lambda = std::iter::once(&y)
        .chain(&pieces)
        .flat_map(|p| p.lambdas().iter().cloned())
        .collect();
    let sum = CharacteristicPair::new(body, lambda).unwrap().validated().unwrap();

    let mut expected = (0, 0);
    for p in std::iter::once(&y).chain(&pieces) {
        let (a, b) = dim4::chern_numbers_dim4(p).unwrap();
        expected = (expected.0 + a, expected.1 + b);
    }
    let got = dim4::chern_numbers_dim4(&sum).unwrap();
    println!("Y # Y # CP2: (c1^2, c2) = {got:?}, sum of the pieces {expected:?}");
    println!("Betti numbers {:?}", dim4::homology_groups(&sum).unwrap().betti);
}
