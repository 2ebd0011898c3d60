//! Smith and Hermite normal forms, kernels and signatures over the integers.

use tmh::exactlin::{det_exact, hermite_normal_form, kernel_lattice_basis, signature, smith_normal_form};
use tmh::IntMatrix;

fn main() {
    let m = IntMatrix::from_i64_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    println!("M =\n{m}");
    println!("det M = {}", det_exact(&m).unwrap());

    let snf = smith_normal_form(&m);
    println!("Smith divisors {:?}, rank {}", snf.divisors, snf.rank);
    println!("Hermite form =\n{}", hermite_normal_form(&m));

    // Columns of a characteristic matrix and the lattice they annihilate.
    let lambda = IntMatrix::from_i64_rows(&[[1, 0, -1, 0], [0, 1, 0, -1]]);
    println!("ker of\n{lambda}is spanned by the columns of\n{}", kernel_lattice_basis(&lambda));

    let form = IntMatrix::from_i64_rows(&[[0, 1], [1, 0]]);
    println!("signature of the hyperbolic plane: {}", signature(&form).unwrap());
}
