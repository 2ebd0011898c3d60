//! Validating characteristic functions and reading off vertex signs.

use tmh::catalog;
use tmh::charpair::{all_signs, is_positive_omniorientation, validate, vertex_frame, CharacteristicPair};

fn main() {
    let y = catalog::pentagon_y();
    println!("pentagon Y: {} faces checked", validate(&y).unwrap().faces_checked);
    for v in y.body().vertex_ids() {
        let frame = vertex_frame(&y, v).unwrap();
        let facets: Vec<String> = frame.facets.iter().map(|&f| y.body().facet_label(f)).collect();
        println!("  {v} [{}] sign {:+}", facets.join(", "), frame.sign);
    }
    println!("positive omniorientation: {}", is_positive_omniorientation(&y).unwrap());

    let flipped = y.with_negated(tmh::FacetId(0)).validated().unwrap();
    let signs: Vec<i32> = all_signs(&flipped).unwrap().into_values().collect();
    println!("after negating the first vector: {signs:?}");

    let body = catalog::cp1xcp1().body().clone();
    let bad = CharacteristicPair::from_i64(body, &[[1, 0], [1, 2], [1, 0], [0, 1]]).unwrap();
    println!("square with vectors (1,0), (1,2), (1,0), (0,1): {}", validate(&bad).unwrap_err());
}
