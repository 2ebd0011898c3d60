mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::{oracle_sign, Gen};
use tmh::charpair::{all_signs, validate};
use tmh::cli::spec::SpecDocument;
use tmh::exactlin::{det_exact, hermite_normal_form, kernel_lattice_basis, smith_normal_form, IntMatrix};
use tmh::{dim4, genus, mac};

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows).prop_map(|r| IntMatrix::from_i64_rows(&r))
}

/// A unimodular matrix as a product of elementary operations.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..8).prop_map(move |ops| {
        let mut m = IntMatrix::identity(n);
        for (i, j, c, swap) in ops {
            let mut e = IntMatrix::identity(n);
            if swap {
                e.set(i, i, 0.into());
                e.set(j, j, 0.into());
                e.set(i, j, 1.into());
                e.set(j, i, 1.into());
                if i == j {
                    e.set(i, i, (-1).into());
                }
            } else if i != j {
                e.set(i, j, c.into());
            }
            m = &e * &m;
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_invariant_under_unimodular_maps(
        (m, u, v) in (2usize..=4, 2usize..=4).prop_flat_map(|(r, c)| (small_matrix(r, c), unimodular(r), unimodular(c)))
    ) {
        let a = smith_normal_form(&m);
        let b = smith_normal_form(&(&(&u * &m) * &v));
        prop_assert_eq!(a.divisors, b.divisors);
        prop_assert_eq!(a.rank, b.rank);
    }

    #[test]
    fn smith_divisors_multiply_to_the_determinant(m in small_matrix(3, 3)) {
        let snf = smith_normal_form(&m);
        let product: BigInt = snf.divisors.iter().product();
        prop_assert_eq!(product, det_exact(&m).unwrap().abs());
        for w in snf.divisors.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || (&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn hermite_form_is_idempotent_and_row_equivalent(m in small_matrix(3, 4), u in unimodular(3)) {
        let h = hermite_normal_form(&m);
        prop_assert_eq!(hermite_normal_form(&h), h.clone());
        prop_assert_eq!(hermite_normal_form(&(&u * &m)), h);
    }

    #[test]
    fn kernel_basis_is_saturated(m in small_matrix(2, 5)) {
        let k = kernel_lattice_basis(&m);
        prop_assert_eq!(k.cols(), 5 - m.rank());
        let image = &m * &k;
        prop_assert!((0..image.rows()).all(|i| image.row(i).iter().all(Zero::is_zero)));
        if k.cols() > 0 {
            let snf = smith_normal_form(&k);
            prop_assert!(snf.is_unimodular_span());
        }
    }

    #[test]
    fn chi_y_is_independent_of_direction(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let pair = match seed % 3 {
            0 => g.random_planar_pair(),
            1 => g.holed_pair(1 + (seed as usize / 3) % 2),
            _ => g.solid_pair(),
        };
        let reference = genus::chi_y(&pair, None).unwrap().polynomial;
        for nu in g.generic_directions(&pair, 5) {
            prop_assert_eq!(&genus::chi_y(&pair, Some(&nu)).unwrap().polynomial, &reference);
        }
    }

    #[test]
    fn top_chern_number_counts_signs(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let pair = if seed % 2 == 0 { g.holed_pair(2) } else { g.solid_pair() };
        let signs = all_signs(&pair).unwrap();
        let total: i64 = signs.values().map(|&s| s as i64).sum();
        prop_assert_eq!(genus::chi_y(&pair, None).unwrap().polynomial.top_chern(), total);
        for (v, s) in signs {
            prop_assert_eq!(s, oracle_sign(&pair, v));
        }
    }

    #[test]
    fn negating_a_vector_flips_signs_on_its_facet(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let pair = if seed % 2 == 0 { g.holed_pair(1) } else { g.solid_pair() };
        let f = tmh::FacetId(seed as usize % pair.body().facet_count());
        let flipped = pair.with_negated(f).validated().unwrap();
        let before = all_signs(&pair).unwrap();
        let after = all_signs(&flipped).unwrap();
        for v in pair.body().vertex_ids() {
            let on = pair.body().vertex_facets(v).contains(&f);
            prop_assert_eq!(after[&v], if on { -before[&v] } else { before[&v] });
        }
    }

    #[test]
    fn edge_directions_leave_along_the_other_facets(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let pair = if seed % 2 == 0 { g.holed_pair(1) } else { g.solid_pair() };
        let body = pair.body();
        for v in body.vertex_ids() {
            let at = body.vertex_facets(v);
            let p = body.vertex_point(v);
            for (f, e) in body.edge_directions_at_vertex(v) {
                let q = p.add(&e);
                prop_assert!(body.facet(f).slack(&q).is_positive());
                for other in at.iter().filter(|&&o| o != f) {
                    prop_assert!(body.facet(*other).slack(&q).is_zero());
                }
            }
        }
    }

    #[test]
    fn freeness_agrees_with_validation(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (pair, _) = g.maybe_corrupted();
        prop_assert_eq!(mac::freeness_check(&pair), validate(&pair).is_ok());
        prop_assert_eq!(mac::kernel_data(&pair).torus_rank + 2, pair.body().facet_count());
    }

    #[test]
    fn one_hole_forms_are_unimodular_with_the_genus_signature(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let pair = g.holed_pair(1);
        let form = dim4::intersection_form(&pair).unwrap();
        prop_assert!(dim4::is_unimodular(&form));
        prop_assert!(form.matrix.is_symmetric());
        prop_assert_eq!(form.signature(), genus::chi_y(&pair, None).unwrap().polynomial.signature());
    }
}

#[test]
fn spec_documents_round_trip() {
    for name in ["cp2", "pentagon_y", "hirzebruch_cp2", "cp3"] {
        let path = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("data/{name}.json"));
        let doc = SpecDocument::parse_file(&path).unwrap();
        let text = serde_json::to_string_pretty(&doc.to_json()).unwrap();
        assert_eq!(SpecDocument::parse_str(&text).unwrap(), doc, "{name}");
    }
}
