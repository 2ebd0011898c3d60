//! Edge vectors, generic circle directions, vertex indices and the χ_y genus.
//!
//! At a vertex with frame `Λ_v`, the edge vectors are the rows of `Λ_v⁻¹`, so
//! `μ_k(λ_{i_j}) = δ_kj`. For a direction `ν` avoiding every edge-vector
//! hyperplane, the index of `v` counts negative pairings `μ_k(ν)`, and
//! `χ_y = Σ_v (-y)^{ind(v)} σ(v)`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::charpair::{frame_unchecked, CharError, CharacteristicPair, VertexFrame};
use crate::exactlin::{gcd_all, unimodular_inverse};
use crate::polytope::{FacetId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenusError {
    #[error(transparent)]
    Char(#[from] CharError),
    #[error("direction has {found} coordinates, expected {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("direction {nu:?} is not generic: edge vector {mu:?} at {vertex} pairs to zero with it")]
    NotGeneric {
        nu: Vec<BigInt>,
        vertex: VertexId,
        mu: Vec<BigInt>,
    },
}

/// Edge vectors at one vertex, in the facet order of its [`VertexFrame`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeVectorFrame {
    pub vertex: VertexId,
    pub facets: Vec<FacetId>,
    pub mu: Vec<Vec<BigInt>>,
}

impl EdgeVectorFrame {
    fn from_frame(frame: &VertexFrame) -> Self {
        let inv = unimodular_inverse(&frame.lambda_v).expect("validated frames are unimodular");
        Self {
            vertex: frame.vertex,
            facets: frame.facets.clone(),
            mu: inv.row_vecs(),
        }
    }

    /// Number of edge vectors pairing negatively with `nu`, or the first one
    /// pairing to zero.
    fn index(&self, nu: &[BigInt]) -> Result<usize, &[BigInt]> {
        let mut negative = 0;
        for mu in &self.mu {
            let p: BigInt = mu.iter().zip(nu).map(|(a, b)| a * b).sum();
            if p.is_zero() {
                return Err(mu);
            }
            if p.is_negative() {
                negative += 1;
            }
        }
        Ok(negative)
    }
}

/// A direction `ν` with `μ(ν) ≠ 0` for every edge vector `μ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenericDirection {
    pub nu: Vec<BigInt>,
}

impl fmt::Display for GenericDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.nu.iter().join(", "))
    }
}

/// `χ_y = Σ c_j y^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChiYPolynomial {
    pub coefficients: Vec<i64>,
}

impl ChiYPolynomial {
    pub fn eval(&self, y: i64) -> i64 {
        self.coefficients.iter().rev().fold(0, |acc, &c| acc * y + c)
    }

    /// `χ_{-1}`, the top Chern number.
    pub fn top_chern(&self) -> i64 {
        self.eval(-1)
    }

    /// `χ_1`, the signature.
    pub fn signature(&self) -> i64 {
        self.eval(1)
    }

    /// `χ_0`, the Todd genus.
    pub fn todd(&self) -> i64 {
        self.coefficients.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for ChiYPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if wrote {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            match (j, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("y")?,
                (1, _) => write!(f, "{mag}y")?,
                (_, 1) => write!(f, "y^{j}")?,
                _ => write!(f, "{mag}y^{j}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The χ_y genus together with the data it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiY {
    pub polynomial: ChiYPolynomial,
    pub nu: GenericDirection,
    pub indices: BTreeMap<VertexId, usize>,
}

pub fn edge_vectors(pair: &CharacteristicPair, v: VertexId) -> Result<EdgeVectorFrame, GenusError> {
    let frame = crate::charpair::vertex_frame(pair, v)?;
    Ok(EdgeVectorFrame::from_frame(&frame))
}

fn all_frames(pair: &CharacteristicPair) -> Result<Vec<(VertexFrame, EdgeVectorFrame)>, GenusError> {
    if !pair.is_validated() {
        return Err(CharError::NotValidated.into());
    }
    Ok(pair
        .body()
        .vertex_ids()
        .map(|v| {
            let f = frame_unchecked(pair, v);
            let e = EdgeVectorFrame::from_frame(&f);
            (f, e)
        })
        .collect())
}

fn check_dim(pair: &CharacteristicPair, nu: &[BigInt]) -> Result<(), GenusError> {
    if nu.len() != pair.dim() {
        return Err(GenusError::Dimension {
            expected: pair.dim(),
            found: nu.len(),
        });
    }
    Ok(())
}

/// Whether `nu` pairs nonzero with every edge vector of every vertex.
pub fn is_generic(pair: &CharacteristicPair, nu: &[BigInt]) -> Result<bool, GenusError> {
    check_dim(pair, nu)?;
    Ok(all_frames(pair)?.iter().all(|(_, e)| e.index(nu).is_ok()))
}

/// First generic primitive direction, ordered by max-norm, then
/// lexicographically.
pub fn find_generic_nu(pair: &CharacteristicPair) -> Result<GenericDirection, GenusError> {
    let frames = all_frames(pair)?;
    let n = pair.dim();
    for r in 1i64.. {
        let candidates = (0..n).map(|_| -r..=r).multi_cartesian_product();
        for c in candidates {
            if c.iter().map(|x| x.abs()).max() != Some(r) {
                continue;
            }
            let nu: Vec<BigInt> = c.into_iter().map(BigInt::from).collect();
            if !gcd_all(&nu).is_one() {
                continue;
            }
            if frames.iter().all(|(_, e)| e.index(&nu).is_ok()) {
                return Ok(GenericDirection { nu });
            }
        }
    }
    unreachable!("finitely many hyperplanes cannot cover the lattice")
}

/// `ind_ν(v)`: the number of edge vectors at `v` pairing negatively with `ν`.
pub fn vertex_index(pair: &CharacteristicPair, v: VertexId, nu: &[BigInt]) -> Result<usize, GenusError> {
    check_dim(pair, nu)?;
    let e = edge_vectors(pair, v)?;
    e.index(nu).map_err(|mu| GenusError::NotGeneric {
        nu: nu.to_vec(),
        vertex: v,
        mu: mu.to_vec(),
    })
}

/// `χ_y = Σ_v (-y)^{ind_ν(v)} σ(v)`, with `ν` found automatically when not
/// supplied.
pub fn chi_y(pair: &CharacteristicPair, nu: Option<&[BigInt]>) -> Result<ChiY, GenusError> {
    let nu = match nu {
        Some(nu) => {
            check_dim(pair, nu)?;
            GenericDirection { nu: nu.to_vec() }
        }
        None => find_generic_nu(pair)?,
    };
    let frames = all_frames(pair)?;
    let mut coefficients = vec![0i64; pair.dim() + 1];
    let mut indices = BTreeMap::new();
    for (f, e) in &frames {
        let ind = e.index(&nu.nu).map_err(|mu| GenusError::NotGeneric {
            nu: nu.nu.clone(),
            vertex: f.vertex,
            mu: mu.to_vec(),
        })?;
        let parity = if ind % 2 == 0 { 1 } else { -1 };
        coefficients[ind] += parity * i64::from(f.sign);
        indices.insert(f.vertex, ind);
    }
    Ok(ChiY {
        polynomial: ChiYPolynomial { coefficients },
        nu,
        indices,
    })
}
