//! Seeded random instances and independent oracles shared by the integration
//! tests and the acceptance harness.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tmh::charpair::CharacteristicPair;
use tmh::polytope::{build_polytope, place_holes, polygon_from_vertices, Halfspace, PolytopeWithHoles, SimplePolytope};
use tmh::{FacetId, RatVector, VertexId};

pub struct Gen {
    pub rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A convex lattice `m`-gon: points of the parabola `y = t²` moved by a
    /// random orientation-preserving unimodular map and a translation.
    pub fn polygon(&mut self, m: usize) -> SimplePolytope {
        let mut ts: Vec<i64> = (-12..=12).collect();
        ts.shuffle(&mut self.rng);
        let mut ts = ts[..m].to_vec();
        ts.sort_unstable();
        let g = self.unimodular2(true);
        let shift = [self.rng.gen_range(-5..=5), self.rng.gen_range(-5..=5)];
        let pts: Vec<RatVector> = ts
            .iter()
            .map(|&t| {
                let (x, y) = (t, t * t);
                RatVector::from_i64(&[g[0][0] * x + g[0][1] * y + shift[0], g[1][0] * x + g[1][1] * y + shift[1]])
            })
            .collect();
        polygon_from_vertices(&pts).expect("parabola points are in convex position")
    }

    /// A random element of `GL₂(ℤ)` with small entries; `det = +1` if
    /// `orientation_preserving`.
    pub fn unimodular2(&mut self, orientation_preserving: bool) -> [[i64; 2]; 2] {
        let mut g = [[1, 0], [0, 1]];
        for _ in 0..self.rng.gen_range(0..4) {
            let c = self.rng.gen_range(-2..=2);
            let e = if self.rng.gen() { [[1, c], [0, 1]] } else { [[1, 0], [c, 1]] };
            g = mul2(&e, &g);
        }
        if !orientation_preserving && self.rng.gen() {
            g = mul2(&[[0, 1], [1, 0]], &g);
        }
        g
    }

    /// A cyclic sequence of `m ≥ 3` characteristic vectors with
    /// `det(λ_i, λ_{i+1}) = ±1`: grown from a triangle or square by
    /// inserting `λ_i ± λ_{i+1}`, then transformed by `GL₂(ℤ)`, sign flips
    /// and a rotation.
    pub fn lambda_cycle(&mut self, m: usize) -> Vec<[i64; 2]> {
        let mut cyc: Vec<[i64; 2]> = if m >= 4 && self.rng.gen() {
            vec![[1, 0], [0, 1], [-1, 0], [0, -1]]
        } else {
            vec![[1, 0], [0, 1], [-1, -1]]
        };
        while cyc.len() < m {
            let i = self.rng.gen_range(0..cyc.len());
            let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
            let s = if self.rng.gen() { 1 } else { -1 };
            cyc.insert(i + 1, [a[0] + s * b[0], a[1] + s * b[1]]);
        }
        let g = self.unimodular2(false);
        for v in &mut cyc {
            *v = [g[0][0] * v[0] + g[0][1] * v[1], g[1][0] * v[0] + g[1][1] * v[1]];
            if self.rng.gen_bool(0.3) {
                *v = [-v[0], -v[1]];
            }
        }
        let r = self.rng.gen_range(0..m);
        cyc.rotate_left(r);
        cyc
    }

    /// A validated convex 2-dimensional pair with `m` facets.
    pub fn planar_pair(&mut self, m: usize) -> CharacteristicPair {
        let poly = self.polygon(m);
        let lambda = self.lambda_cycle(m);
        CharacteristicPair::from_i64(PolytopeWithHoles::convex(poly), &lambda)
            .and_then(CharacteristicPair::validated)
            .expect("generated cycles are valid")
    }

    pub fn random_planar_pair(&mut self) -> CharacteristicPair {
        let m = self.rng.gen_range(3..=8);
        self.planar_pair(m)
    }

    /// A validated 2-dimensional pair with `s` holes placed automatically.
    pub fn holed_pair(&mut self, s: usize) -> CharacteristicPair {
        let m0 = self.rng.gen_range(3..=6);
        let outer = self.polygon(m0);
        let mut lambda = self.lambda_cycle(m0);
        let mut pieces = Vec::new();
        for _ in 0..s {
            let mk = self.rng.gen_range(3..=5);
            pieces.push(self.polygon(mk));
            lambda.extend(self.lambda_cycle(mk));
        }
        let body = place_holes(&outer, &pieces).expect("automatic placement fits");
        CharacteristicPair::from_i64(body, &lambda)
            .and_then(CharacteristicPair::validated)
            .expect("generated cycles are valid")
    }

    /// A simple 3-polytope (simplex, cube or prism, with up to three vertices
    /// truncated) and characteristic vectors built alongside it.
    pub fn solid(&mut self) -> (SimplePolytope, Vec<Vec<i64>>) {
        let (facets, lambda): (Vec<Halfspace>, Vec<Vec<i64>>) = match self.rng.gen_range(0..3) {
            0 => (
                vec![
                    Halfspace::from_i64(&[1, 0, 0], 0),
                    Halfspace::from_i64(&[0, 1, 0], 0),
                    Halfspace::from_i64(&[0, 0, 1], 0),
                    Halfspace::from_i64(&[-1, -1, -1], -6),
                ],
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, -1, -1]],
            ),
            1 => (
                (0..3)
                    .flat_map(|i| {
                        let mut e = [0i64; 3];
                        e[i] = 1;
                        let neg = e.map(|x| -x);
                        [Halfspace::from_i64(&e, 0), Halfspace::from_i64(&neg, -4)]
                    })
                    .collect(),
                (0..3)
                    .flat_map(|i| {
                        let mut e = vec![0i64; 3];
                        let c = if i == 0 { 0 } else { self.rng.gen_range(-1..=1) };
                        e[i] = 1;
                        let mut f = vec![0i64; 3];
                        f[i] = -1;
                        if i > 0 {
                            f[i - 1] = c;
                        }
                        [e, f]
                    })
                    .collect(),
            ),
            _ => (
                vec![
                    Halfspace::from_i64(&[1, 0, 0], 0),
                    Halfspace::from_i64(&[0, 1, 0], 0),
                    Halfspace::from_i64(&[-1, -1, 0], -5),
                    Halfspace::from_i64(&[0, 0, 1], 0),
                    Halfspace::from_i64(&[0, 0, -1], -5),
                ],
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![-1, -1, 0], vec![0, 0, 1], vec![0, 0, -1]],
            ),
        };
        let mut poly = build_polytope(3, facets).expect("base solids are simple");
        let mut lambda = lambda;
        for _ in 0..self.rng.gen_range(0..=3) {
            let v = self.rng.gen_range(0..poly.vertices().len());
            poly = truncate(&poly, &mut lambda, v);
        }
        let g = self.unimodular3();
        for v in &mut lambda {
            let w: Vec<i64> = (0..3).map(|i| (0..3).map(|j| g[i][j] * v[j]).sum()).collect();
            *v = w;
            if self.rng.gen_bool(0.3) {
                v.iter_mut().for_each(|x| *x = -*x);
            }
        }
        (poly, lambda)
    }

    pub fn solid_pair(&mut self) -> CharacteristicPair {
        let (poly, lambda) = self.solid();
        CharacteristicPair::from_i64(PolytopeWithHoles::convex(poly), &lambda)
            .and_then(CharacteristicPair::validated)
            .expect("truncation keeps validity")
    }

    /// A 3-dimensional pair with one solid placed as a hole in another.
    pub fn solid_holed_pair(&mut self) -> CharacteristicPair {
        let (outer, mut lambda) = self.solid();
        let (piece, more) = self.solid();
        lambda.extend(more);
        let body = place_holes(&outer, &[piece]).expect("automatic placement fits");
        CharacteristicPair::from_i64(body, &lambda)
            .and_then(CharacteristicPair::validated)
            .expect("generated pairs are valid")
    }

    fn unimodular3(&mut self) -> [[i64; 3]; 3] {
        let mut g = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for _ in 0..self.rng.gen_range(0..4) {
            let (i, j) = (self.rng.gen_range(0..3), self.rng.gen_range(0..3));
            if i == j {
                continue;
            }
            let c = self.rng.gen_range(-1..=1);
            for col in 0..3 {
                g[i][col] += c * g[j][col];
            }
        }
        g
    }

    /// A 2-dimensional pair (holes allowed) whose vectors may have been
    /// corrupted; returned unvalidated together with whether a corruption
    /// was applied.
    pub fn maybe_corrupted(&mut self) -> (CharacteristicPair, bool) {
        let valid = if self.rng.gen_bool(0.7) {
            self.random_planar_pair()
        } else {
            self.holed_pair(1)
        };
        let body = valid.body().clone();
        let mut lambda: Vec<Vec<BigInt>> = valid.lambdas().to_vec();
        let corrupt = self.rng.gen_bool(0.6);
        if corrupt {
            let i = self.rng.gen_range(0..lambda.len());
            lambda[i] = match self.rng.gen_range(0..3) {
                0 => lambda[i].iter().map(|x| x * 2).collect(),
                1 => {
                    let j = (i + 1) % lambda.len();
                    lambda[i].iter().zip(&lambda[j]).map(|(a, b)| a * 2 + b).collect()
                }
                _ => loop {
                    let v = vec![BigInt::from(self.rng.gen_range(-3..=3)), BigInt::from(self.rng.gen_range(-3..=3))];
                    if !v.iter().all(Zero::is_zero) {
                        break v;
                    }
                },
            };
        }
        (CharacteristicPair::new(body, lambda).expect("dimensions match"), corrupt)
    }

    /// Up to `count` distinct primitive generic directions.
    pub fn generic_directions(&mut self, pair: &CharacteristicPair, count: usize) -> Vec<Vec<BigInt>> {
        let n = pair.dim();
        let mut out: Vec<Vec<BigInt>> = Vec::new();
        for _ in 0..count * 50 {
            if out.len() == count {
                break;
            }
            let v: Vec<i64> = (0..n).map(|_| self.rng.gen_range(-40..=40)).collect();
            let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g == 0 {
                continue;
            }
            let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x / g)).collect();
            if !out.contains(&v) && tmh::genus::is_generic(pair, &v).unwrap() {
                out.push(v);
            }
        }
        out
    }
}

fn mul2(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// Cuts vertex `v` off with the plane whose normal is the sum of the facet
/// normals at `v`, halfway to the nearest other vertex; the new facet gets
/// the sum of the vectors at `v`.
pub fn truncate(p: &SimplePolytope, lambda: &mut Vec<Vec<i64>>, v: usize) -> SimplePolytope {
    let vert = &p.vertices()[v];
    let n = p.dim();
    let mut normal = vec![BigInt::zero(); n];
    let mut sum = vec![0i64; n];
    for &f in &vert.facets {
        for i in 0..n {
            normal[i] += &p.facets()[f].normal[i];
            sum[i] += lambda[f][i];
        }
    }
    let level = |x: &RatVector| Halfspace::new(normal.clone(), BigRational::zero()).slack(x);
    let here = level(&vert.point);
    let gap = p
        .vertices()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != v)
        .map(|(_, w)| level(&w.point) - &here)
        .min()
        .expect("other vertices");
    let offset = here + gap / BigRational::from_integer(2.into());
    let mut facets = p.facets().to_vec();
    facets.push(Halfspace::new(normal, offset));
    lambda.push(sum);
    build_polytope(n, facets).expect("truncating a simple vertex keeps the polytope simple")
}

/// Exact determinant by cofactor expansion (small matrices only).
pub fn det(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut total = BigRational::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigRational>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &rows[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Vertex sign from first principles: with facets in any fixed order,
/// `σ = sgn det[e_k] · det[λ_k]` where `e_k` leaves along the edge not in
/// the `k`-th facet.
pub fn oracle_sign(pair: &CharacteristicPair, v: VertexId) -> i32 {
    let dirs = pair.body().edge_directions_at_vertex(v);
    let e: Vec<Vec<BigRational>> = dirs.iter().map(|(_, d)| d.coords().to_vec()).collect();
    let l: Vec<Vec<BigRational>> = dirs
        .iter()
        .map(|(f, _)| pair.lambda(*f).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let de = det(&e);
    let dl = det(&l);
    assert!(dl.abs().is_one(), "vertex matrix must be unimodular");
    if de.is_positive() == dl.is_positive() {
        1
    } else {
        -1
    }
}

/// Validity in the plane from first principles: primitive vectors and
/// `|det| = 1` for the two facets at every vertex.
pub fn oracle_planar_valid(pair: &CharacteristicPair) -> bool {
    let body = pair.body();
    let primitive = body.facet_ids().all(|f| {
        let v = pair.lambda(f);
        v[0].gcd(&v[1]).is_one()
    });
    primitive
        && body.vertex_ids().all(|v| {
            let fs = body.vertex_facets(v);
            let (a, b) = (pair.lambda(fs[0]), pair.lambda(fs[1]));
            (&a[0] * &b[1] - &a[1] * &b[0]).abs().is_one()
        })
}

/// Whether `x` lies on facet `f`: on its hyperplane and in its component.
pub fn oracle_on_facet(pair: &CharacteristicPair, f: FacetId, x: &RatVector) -> bool {
    let body = pair.body();
    let (k, _) = body.locate_facet(f);
    body.facet(f).slack(x).is_zero() && body.components()[k].contains(x)
}

/// Boundary and interior sample points of a body: facet barycentres, edge
/// midpoints, vertices, and random convex combinations of outer vertices
/// that avoid hole interiors.
pub fn sample_points(g: &mut Gen, pair: &CharacteristicPair, interior: usize) -> Vec<RatVector> {
    let body = pair.body();
    let mut pts = Vec::new();
    for comp in body.components() {
        for v in comp.vertices() {
            pts.push(v.point.clone());
        }
        for e in comp.edges() {
            let a = &comp.vertices()[e.ends.0].point;
            let b = &comp.vertices()[e.ends.1].point;
            pts.push(a.add(b).scale(&BigRational::new(1.into(), 2.into())));
        }
        for f in 0..comp.facet_count() {
            let on: Vec<&RatVector> = comp.vertices().iter().filter(|v| v.facets.contains(&f)).map(|v| &v.point).collect();
            let mut c = RatVector::zeros(comp.dim());
            for p in &on {
                c = c.add(p);
            }
            pts.push(c.scale(&BigRational::new(1.into(), (on.len() as i64).into())));
        }
    }
    let verts: Vec<&RatVector> = body.outer().vertices().iter().map(|v| &v.point).collect();
    let mut tries = 0;
    let mut added = 0;
    while added < interior && tries < interior * 20 {
        tries += 1;
        let weights: Vec<i64> = verts.iter().map(|_| g.rng.gen_range(0..5)).collect();
        let total: i64 = weights.iter().sum();
        if total == 0 {
            continue;
        }
        let mut x = RatVector::zeros(body.dim());
        for (w, p) in weights.iter().zip(&verts) {
            x = x.add(&p.scale(&BigRational::new((*w).into(), total.into())));
        }
        if body.contains(&x) {
            pts.push(x);
            added += 1;
        }
    }
    pts
}
