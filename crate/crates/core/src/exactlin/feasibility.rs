use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A linear inequality `coeffs · x ≥ rhs` (or `>` when `strict`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
    pub strict: bool,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, rhs: BigRational, strict: bool) -> Self {
        Self {
            coeffs,
            rhs,
            strict,
        }
    }

    pub fn from_int(normal: &[BigInt], rhs: BigRational, strict: bool) -> Self {
        Self::new(
            normal.iter().cloned().map(BigRational::from_integer).collect(),
            rhs,
            strict,
        )
    }

    /// Same constraint with all entries scaled to coprime integers, so that
    /// duplicates produced during elimination compare equal.
    fn normalized(self) -> Self {
        let lcm = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.rhs))
            .fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.rhs))
            .map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() || g.is_one() {
            let mut ints = ints.into_iter().map(BigRational::from_integer).collect::<Vec<_>>();
            let rhs = ints.pop().expect("rhs present");
            return Self::new(ints, rhs, self.strict);
        }
        let mut qs: Vec<BigRational> = ints
            .into_iter()
            .map(|x| BigRational::from_integer(x / &g))
            .collect();
        let rhs = qs.pop().expect("rhs present");
        Self::new(qs, rhs, self.strict)
    }
}

/// Decides whether a system of (strict and non-strict) linear inequalities
/// has a real solution, by Fourier–Motzkin elimination.
pub fn is_feasible(constraints: &[Constraint]) -> bool {
    let Some(dim) = constraints.first().map(|c| c.coeffs.len()) else {
        return true;
    };
    let mut sys: BTreeSet<Constraint> = constraints.iter().cloned().map(Constraint::normalized).collect();
    for k in (0..dim).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), BTreeSet::new());
        for c in sys {
            if c.coeffs[k].is_positive() {
                pos.push(c);
            } else if c.coeffs[k].is_negative() {
                neg.push(c);
            } else {
                rest.insert(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let a = p.coeffs[k].clone();
                let b = -q.coeffs[k].clone();
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| &b * x + &a * y)
                    .collect();
                let rhs = &b * &p.rhs + &a * &q.rhs;
                rest.insert(Constraint::new(coeffs, rhs, p.strict || q.strict).normalized());
            }
        }
        if rest.iter().any(contradiction) {
            return false;
        }
        sys = rest;
    }
    !sys.iter().any(contradiction)
}

fn contradiction(c: &Constraint) -> bool {
    if !c.coeffs.iter().all(Zero::is_zero) {
        return false;
    }
    if c.strict {
        !c.rhs.is_negative()
    } else {
        c.rhs.is_positive()
    }
}
