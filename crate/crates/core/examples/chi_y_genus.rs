//! The χ_y genus by localization, and its independence of the direction.

use num_bigint::BigInt;
use tmh::{catalog, genus};

fn main() {
    for (name, pair) in [
        ("CP2", catalog::cp2()),
        ("CP1 x CP1", catalog::cp1xcp1()),
        ("pentagon Y", catalog::pentagon_y()),
        ("Hirzebruch(1) # CP2", catalog::hirzebruch_cp2(1)),
        ("CP3", catalog::cp3()),
    ] {
        let chi = genus::chi_y(&pair, None).unwrap();
        let p = &chi.polynomial;
        println!(
            "{name:<20} chi_y = {p:<22} nu = {}  top Chern {}  signature {}  Todd {}",
            chi.nu,
            p.top_chern(),
            p.signature(),
            p.todd()
        );
    }

    let y = catalog::pentagon_y();
    for nu in [[1, 3], [-5, 2], [7, -11]] {
        let nu: Vec<BigInt> = nu.iter().map(|&x| BigInt::from(x)).collect();
        let chi = genus::chi_y(&y, Some(&nu)).unwrap();
        println!("Y with nu = {}: {}  indices {:?}", chi.nu, chi.polynomial, chi.indices.values().collect::<Vec<_>>());
    }
    let bad: Vec<BigInt> = vec![1.into(), 0.into()];
    println!("CP2 with nu = (1, 0): {}", genus::chi_y(&catalog::cp2(), Some(&bad)).unwrap_err());
}
