//! Acceptance checks, one PASS/FAIL line each. Exits nonzero on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use common::{oracle_on_facet, oracle_planar_valid, oracle_sign, sample_points, Gen};
use tmh::charpair::{all_signs, validate, validate_planar, CharError, CharacteristicPair};
use tmh::polytope::place_holes;
use tmh::{catalog, dim4, genus, mac};

type Check = Result<String, String>;
type Entry<'a> = (&'static str, &'static str, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tmh").chain(args.iter().copied());
    let code = tmh::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn cli_report(path: &str) -> Result<Value, String> {
    let (code, out, err) = cli(&["report", path, "--format", "json"]);
    ensure!(code == 0, "report exited {code}: {err}");
    serde_json::from_str(&out).map_err(|e| e.to_string())
}

/// The instance families shared by several checks.
struct Corpus {
    planar: Vec<CharacteristicPair>,
    holed: Vec<CharacteristicPair>,
    solid: Vec<CharacteristicPair>,
}

impl Corpus {
    fn new() -> Self {
        let mut g = Gen::new(0x5eed);
        let mut planar: Vec<_> = (0..30).map(|_| g.random_planar_pair()).collect();
        planar.extend([catalog::cp2(), catalog::cp1xcp1(), catalog::pentagon_y(), catalog::hirzebruch(3)]);
        let mut holed: Vec<_> = (0..24).map(|i| g.holed_pair(1 + i % 3)).collect();
        holed.extend([
            catalog::square_in_square(),
            catalog::pentagon_with_square_hole(),
            catalog::hirzebruch_cp2(1),
        ]);
        let mut solid: Vec<_> = (0..14).map(|_| g.solid_pair()).collect();
        solid.extend((0..4).map(|_| g.solid_holed_pair()));
        solid.push(catalog::cp3());
        Self { planar, holed, solid }
    }

    fn all(&self) -> impl Iterator<Item = &CharacteristicPair> {
        self.planar.iter().chain(&self.holed).chain(&self.solid)
    }
}

fn ac1() -> Check {
    let pair = catalog::pentagon_y();
    let signs = all_signs(&pair).map_err(|e| e.to_string())?;
    ensure!(signs.values().all(|&s| s == 1), "signs {signs:?}");
    for v in pair.body().vertex_ids() {
        ensure!(oracle_sign(&pair, v) == 1, "oracle sign at {v}");
    }
    let (c1_sq, c2) = dim4::chern_numbers_dim4(&pair).map_err(|e| e.to_string())?;
    ensure!((c1_sq, c2) == (19, 5), "library gives c1^2 = {c1_sq}, c2 = {c2}");
    let flags = dim4::structure_flags(&pair).map_err(|e| e.to_string())?;
    ensure!(flags.complex_excluded_by_bmy && c1_sq > 3 * c2, "BMY flag not set");

    let r = cli_report(&data("pentagon_y.json"))?;
    ensure!(r["validation"]["valid"] == true, "report says invalid");
    let lambdas: Vec<&Value> = r["facets"].as_array().unwrap().iter().map(|f| &f["lambda"]).collect();
    ensure!(
        lambdas == [&serde_json::json!([1, 0]), &serde_json::json!([-1, 1]), &serde_json::json!([1, -2]), &serde_json::json!([0, 1]), &serde_json::json!([-1, -1])],
        "parsed vectors {lambdas:?}"
    );
    ensure!(r["vertices"].as_array().unwrap().iter().all(|v| v["sign"] == 1), "report signs");
    ensure!(r["dim4"]["c1_squared"] == 19 && r["dim4"]["c2"] == 5, "report Chern numbers");
    ensure!(r["structure"]["complex_excluded_by_bmy"] == true, "report BMY flag");
    Ok("signs all +1, c1^2 = 19 > 15 = 3 c2, complex structure excluded".into())
}

fn ac2(c: &Corpus) -> Check {
    let mut g = Gen::new(2);
    let (mut pairs, mut dirs, mut dims) = (0, 0, [0usize; 2]);
    for pair in c.all() {
        let nus = g.generic_directions(pair, 20);
        ensure!(nus.len() == 20, "only {} generic directions found", nus.len());
        let reference = genus::chi_y(pair, None).map_err(|e| e.to_string())?.polynomial;
        for nu in &nus {
            let p = genus::chi_y(pair, Some(nu)).map_err(|e| e.to_string())?.polynomial;
            ensure!(p == reference, "chi_y {p} at nu {nu:?} differs from {reference}");
        }
        pairs += 1;
        dirs += nus.len();
        dims[pair.dim() - 2] += 1;
    }
    ensure!(pairs >= 25 && dims[0] > 0 && dims[1] > 0, "corpus too small");
    Ok(format!("{pairs} pairs ({} planar, {} solid), {dirs} directions", dims[0], dims[1]))
}

fn ac3(c: &Corpus) -> Check {
    let mut count = 0;
    for pair in c.all() {
        let signs = all_signs(pair).map_err(|e| e.to_string())?;
        let mut total = 0i64;
        for v in pair.body().vertex_ids() {
            let s = oracle_sign(pair, v);
            ensure!(signs[&v] == s, "sign at {v}: library {} vs oracle {s}", signs[&v]);
            total += s as i64;
        }
        let top = genus::chi_y(pair, None).map_err(|e| e.to_string())?.polynomial.top_chern();
        ensure!(top == total, "chi_-1 = {top} but sum of signs = {total}");
        count += 1;
    }
    Ok(format!("{count} instances"))
}

fn ac4(c: &Corpus) -> Check {
    let mut count = 0;
    for pair in c.planar.iter().chain(c.holed.iter().filter(|p| p.body().hole_count() == 1)) {
        let form = dim4::intersection_form(pair).map_err(|e| e.to_string())?;
        let chi1 = genus::chi_y(pair, None).map_err(|e| e.to_string())?.polynomial.signature();
        ensure!(form.signature() == chi1, "form signature {} vs chi_1 {chi1}", form.signature());
        ensure!(form.determinant().abs().is_one(), "det {}", form.determinant());
        count += 1;
    }
    Ok(format!("{count} instances with s in {{0, 1}}"))
}

fn ac5(c: &Corpus) -> Check {
    let h = dim4::homology_groups(&catalog::square_in_square()).map_err(|e| e.to_string())?;
    ensure!(h.betti == [1, 1, 8, 1, 1], "square-in-square Betti {:?}", h.betti);
    let h = dim4::homology_groups(&catalog::pentagon_with_square_hole()).map_err(|e| e.to_string())?;
    ensure!(h.betti[2] == 9, "l0 = 5, l1 = 4 gives b2 = {}", h.betti[2]);
    let mut count = 0;
    for pair in c.planar.iter().chain(&c.holed) {
        let m = pair.body().facet_count();
        let s = pair.body().hole_count();
        let h = dim4::homology_groups(pair).map_err(|e| e.to_string())?;
        ensure!(h.betti == [1, s, m + 2 * s - 2, s, 1], "m = {m}, s = {s}: {:?}", h.betti);
        ensure!(h.torsion == [0; 5], "torsion {:?}", h.torsion);
        let cells = dim4::cw_cell_counts(pair).map_err(|e| e.to_string())?;
        let alt: i64 = cells.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        ensure!(alt == m as i64, "cells {cells:?} alternate to {alt}, m = {m}");
        count += 1;
    }
    Ok(format!("golden cases plus {count} instances with s up to 3"))
}

fn ac6() -> Check {
    for k in 0..3 {
        let form = dim4::intersection_form(&catalog::hirzebruch_cp2(k)).map_err(|e| e.to_string())?;
        ensure!(form.generators.len() == 7, "k = {k}: rank {}", form.generators.len());
        let x = |i: usize, j: usize| form.entry(i - 1, j - 1);
        let mut expected: Vec<((usize, usize), i64)> = vec![((1, 1), 0), ((3, 3), 0), ((4, 4), 0), ((2, 2), -k)];
        expected.extend((5..=7).map(|i| ((i, i), 1)));
        expected.extend([(1, 3), (2, 3), (2, 4), (3, 6), (3, 7), (4, 5), (4, 6)].map(|p| (p, 0)));
        expected.extend([1, 2].iter().flat_map(|&i| (5..=7).map(move |j| ((i, j), 0))));
        expected.extend([(1, 2), (1, 4), (5, 6), (5, 7), (6, 7)].map(|p| (p, 1)));
        expected.extend([(3, 5), (4, 7)].map(|p| (p, -1)));
        for ((i, j), want) in expected {
            ensure!(x(i, j) == want && x(j, i) == want, "k = {k}: x{i}x{j} = {}, expected {want}", x(i, j));
        }
        ensure!(form.one_three_pairing == Some(1), "k = {k}: yz = {:?}", form.one_three_pairing);
    }
    Ok("all listed products for k = 0, 1, 2".into())
}

fn ac7() -> Check {
    let mut g = Gen::new(7);
    let mut count = 0;
    for round in 0..20 {
        let pieces: Vec<CharacteristicPair> = (0..2 + round % 2).map(|_| g.random_planar_pair()).collect();
        let mut lambda: Vec<Vec<BigInt>> = Vec::new();
        let mut want = (0, 0);
        for p in &pieces {
            lambda.extend(p.lambdas().iter().cloned());
            let (a, b) = dim4::chern_numbers_dim4(p).map_err(|e| e.to_string())?;
            want = (want.0 + a, want.1 + b);
        }
        let holes: Vec<_> = pieces[1..].iter().map(|p| p.body().outer().clone()).collect();
        let body = place_holes(pieces[0].body().outer(), &holes).map_err(|e| e.to_string())?;
        let sum = CharacteristicPair::new(body, lambda)
            .and_then(CharacteristicPair::validated)
            .map_err(|e| e.to_string())?;
        let got = dim4::chern_numbers_dim4(&sum).map_err(|e| e.to_string())?;
        ensure!(got == want, "round {round}: (c1^2, c2) = {got:?}, expected {want:?}");
        count += 1;
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("yy.json").display().to_string();
    let y = data("pentagon_y.json");
    let (code, _, err) = cli(&["fibersum", &y, &y, "-o", &out]);
    ensure!(code == 0, "fibersum exited {code}: {err}");
    let r = cli_report(&out)?;
    ensure!(
        r["dim4"]["c1_squared"] == 38 && r["dim4"]["c2"] == 10,
        "Y # Y gives ({}, {})",
        r["dim4"]["c1_squared"],
        r["dim4"]["c2"]
    );
    Ok(format!("{count} random sums, Y # Y = (38, 10)"))
}

fn offending_face_is_bad(pair: &CharacteristicPair, e: &CharError) -> bool {
    match e {
        CharError::Primitivity { facet, .. } => {
            let v = pair.lambda(*facet);
            !num_integer::Integer::gcd(&v[0], &v[1]).is_one()
        }
        CharError::Summand { facets, .. } => {
            let body = pair.body();
            let is_face = body.vertex_ids().any(|v| {
                let at = body.vertex_facets(v);
                facets.iter().all(|f| at.contains(f))
            });
            let (a, b) = (pair.lambda(facets[0]), pair.lambda(facets[1]));
            is_face && facets.len() == 2 && !(&a[0] * &b[1] - &a[1] * &b[0]).abs().is_one()
        }
        _ => false,
    }
}

fn ac8() -> Check {
    let mut g = Gen::new(8);
    let (mut valid, mut invalid) = (0, 0);
    for i in 0..100 {
        let (pair, _) = g.maybe_corrupted();
        let oracle = oracle_planar_valid(&pair);
        let general = validate(&pair);
        let planar = validate_planar(&pair);
        ensure!(
            general.is_ok() == oracle && planar.is_ok() == oracle,
            "instance {i}: oracle {oracle}, general {general:?}, planar {planar:?}"
        );
        if let Err(e) = &general {
            ensure!(offending_face_is_bad(&pair, e), "instance {i}: general validator blames {e}");
        }
        if let Err(e) = &planar {
            ensure!(offending_face_is_bad(&pair, e), "instance {i}: planar validator blames {e}");
        }
        if oracle {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    ensure!(valid > 10 && invalid > 10, "unbalanced corpus: {valid} valid, {invalid} invalid");
    Ok(format!("{valid} valid and {invalid} corrupted instances agree"))
}

fn ac9(c: &Corpus) -> Check {
    let mut g = Gen::new(9);
    let corrupted: Vec<CharacteristicPair> = (0..60).map(|_| g.maybe_corrupted().0).collect();
    let mut points = 0;
    for pair in c.all().chain(&corrupted) {
        ensure!(
            mac::freeness_check(pair) == validate(pair).is_ok(),
            "freeness and validation disagree"
        );
        let kd = mac::kernel_data(pair);
        let (m, n) = (pair.body().facet_count(), pair.dim());
        ensure!(kd.torus_rank == m - n, "kernel rank {} for m = {m}, n = {n}", kd.torus_rank);
        let image = &kd.lambda * &kd.kernel_basis;
        ensure!((0..n).all(|i| image.row(i).iter().all(Zero::is_zero)), "kernel basis not in ker");
    }
    for pair in c.all() {
        let chart = mac::EmbeddingChart::new(pair.body());
        for (k, x) in sample_points(&mut g, pair, 6).into_iter().enumerate() {
            let d = chart.evaluate(pair.body(), &x);
            if k == 0 {
                let direct = mac::embedding_coordinates(pair, &x).map_err(|e| e.to_string())?;
                ensure!(direct == d, "chart and direct evaluation differ at {x}");
            }
            for f in pair.body().facet_ids() {
                ensure!(!d[f.0].is_negative(), "negative coordinate at {x}");
                ensure!(
                    d[f.0].is_zero() == oracle_on_facet(pair, f, &x),
                    "coordinate {f} at {x} is {}",
                    d[f.0]
                );
            }
            points += 1;
        }
    }
    let kd = mac::kernel_data(&catalog::cp2());
    let col = kd.kernel_basis.column(0);
    let ones = vec![BigInt::one(); 3];
    let neg: Vec<BigInt> = ones.iter().map(|x| -x).collect();
    ensure!(kd.torus_rank == 1 && (col == ones || col == neg), "CP2 kernel {:?}", col);
    Ok(format!("freeness agrees on {} instances, {points} sample points", c.all().count() + corrupted.len()))
}

fn ac10() -> Check {
    let cp2 = catalog::cp2();
    let p = genus::chi_y(&cp2, None).map_err(|e| e.to_string())?.polynomial;
    ensure!(p.coefficients == [1, -1, 1], "CP2 chi_y = {p}");
    ensure!((p.todd(), p.signature(), p.top_chern()) == (1, 1, 3), "CP2 specializations");
    let (c1_sq, _) = dim4::chern_numbers_dim4(&cp2).map_err(|e| e.to_string())?;
    ensure!(c1_sq == 9, "CP2 c1^2 = {c1_sq}");
    let r = cli_report(&data("cp2.json"))?;
    ensure!(r["chi_y"]["coefficients"] == serde_json::json!([1, -1, 1]) && r["dim4"]["c1_squared"] == 9, "CP2 report");

    let form = dim4::intersection_form(&catalog::cp1xcp1()).map_err(|e| e.to_string())?;
    ensure!(form.generators.len() == 2, "CP1xCP1 rank {}", form.generators.len());
    ensure!(form.signature() == 0, "CP1xCP1 signature {}", form.signature());
    ensure!(
        form.entry(0, 0) == 0 && form.entry(1, 1) == 0 && form.entry(0, 1).abs() == 1,
        "CP1xCP1 form {}",
        form.matrix
    );
    Ok("CP2: 1 - y + y^2, c1^2 = 9; CP1xCP1: hyperbolic".into())
}

fn main() {
    std::panic::set_hook(Box::new(|_| {}));
    let start = std::time::Instant::now();
    let corpus = Corpus::new();
    println!("corpus built in {:.2?}", start.elapsed());
    let checks: Vec<Entry> = vec![
        ("AC1", "pentagon Y", Box::new(ac1)),
        ("AC2", "chi_y independent of nu", Box::new(|| ac2(&corpus))),
        ("AC3", "top Chern number = sum of signs", Box::new(|| ac3(&corpus))),
        ("AC4", "intersection form signature and unimodularity", Box::new(|| ac4(&corpus))),
        ("AC5", "homology formulas", Box::new(|| ac5(&corpus))),
        ("AC6", "cohomology ring golden products", Box::new(ac6)),
        ("AC7", "fiber-sum additivity", Box::new(ac7)),
        ("AC8", "validator agreement", Box::new(ac8)),
        ("AC9", "moment-angle data", Box::new(|| ac9(&corpus))),
        ("AC10", "classic sanity values", Box::new(ac10)),
    ];
    let mut failed = 0;
    for (id, title, check) in checks {
        let start = std::time::Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("PASS {id} {title}: {detail} [{:.2?}]", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {id} {title}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
