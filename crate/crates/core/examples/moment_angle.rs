//! Moment-angle data: the kernel torus, freeness and embedding coordinates.

use tmh::charpair::CharacteristicPair;
use tmh::catalog::{self, point};
use tmh::mac::{embedding_coordinates, freeness_check, kernel_data, EmbeddingChart};

fn main() {
    let cp2 = catalog::cp2();
    let kd = kernel_data(&cp2);
    println!("CP2: torus rank {}, kernel basis\n{}", kd.torus_rank, kd.kernel_basis);

    let pair = catalog::square_in_square();
    let kd = kernel_data(&pair);
    println!("square in square: torus rank {}, free action {}", kd.torus_rank, freeness_check(&pair));
    println!("collar width {}", EmbeddingChart::new(pair.body()).collar);
    for x in [point(&[(1, 2), (3, 1)]), point(&[(1, 1), (3, 2)]), point(&[(4, 1), (4, 1)]), point(&[(1, 1), (1, 1)])] {
        println!("  d({x}) = {}", embedding_coordinates(&pair, &x).unwrap());
    }
    println!("  inside the hole: {}", embedding_coordinates(&pair, &point(&[(3, 2), (3, 2)])).unwrap_err());

    let body = catalog::cp1xcp1().body().clone();
    let bad = CharacteristicPair::from_i64(body, &[[1, 0], [1, 2], [1, 0], [0, 1]]).unwrap();
    println!("non-unimodular square: free action {}", freeness_check(&bad));
}
