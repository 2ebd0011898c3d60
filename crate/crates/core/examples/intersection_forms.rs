//! Homology and intersection forms of 4-dimensional torus manifolds.

use tmh::{catalog, dim4};

fn main() {
    for k in 0..3 {
        let pair = catalog::hirzebruch_cp2(k);
        let form = dim4::intersection_form(&pair).unwrap();
        let labels: Vec<String> = form.generators.iter().map(|g| g.label(&pair)).collect();
        println!("Hirzebruch({k}) # CP2, generators {}", labels.join(", "));
        println!("{}", form.matrix);
        println!(
            "signature {}, determinant {}, H1 x H3 pairing {:?}\n",
            form.signature(),
            form.determinant(),
            form.one_three_pairing
        );
    }

    let pair = catalog::pentagon_with_square_hole();
    let h = dim4::homology_groups(&pair).unwrap();
    println!("pentagon with a square hole: Betti {:?}, cells {:?}", h.betti, h.cell_counts);
    let (c1_sq, c2) = dim4::chern_numbers_dim4(&pair).unwrap();
    println!("c1^2 = {c1_sq}, c2 = {c2}");
    let flags = dim4::structure_flags(&pair).unwrap();
    println!(
        "almost complex {}, symplectic {}, Kahler excluded {}, BMY excludes complex {}",
        flags.invariant_almost_complex, flags.invariant_symplectic, flags.kahler_excluded, flags.complex_excluded_by_bmy
    );
}
