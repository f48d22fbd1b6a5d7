//! Linear independence of summands and minimal vanishing subsums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::polyalg::linalg::linear_relation;
use crate::polyalg::{Poly, Rational, RationalFunction};
use crate::util::Combinations;

pub const SUBSUM_BUDGET: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearIndependence {
    Independent,
    /// Primitive integer coefficients, first nonzero entry positive.
    Dependent(Vec<Rational>),
}

/// Exact ℚ-linear independence; over ℂ the answer is the same.
pub fn independence_check(values: &[RationalFunction]) -> Result<LinearIndependence> {
    if values.is_empty() {
        return Err(Error::Precondition("empty list".into()));
    }
    if values.iter().any(RationalFunction::is_zero) {
        return Err(Error::ZeroArgument("independence_check"));
    }
    Ok(match linear_relation(values) {
        Some(c) => LinearIndependence::Dependent(c),
        None => LinearIndependence::Independent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsumWitness {
    /// Increasing positions in the input list.
    pub indices: Vec<usize>,
    /// The selected summands; they add up to zero.
    pub terms: Vec<RationalFunction>,
}

impl SubsumWitness {
    pub fn sum(&self) -> RationalFunction {
        self.terms
            .iter()
            .fold(RationalFunction::zero(), |acc, t| &acc + t)
    }
}

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

fn int_mod(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("reduced")
}

fn rat_mod(c: &Rational) -> Option<u64> {
    let d = int_mod(c.denom());
    (d != 0).then(|| mulmod(int_mod(c.numer()), powmod(d, P - 2)))
}

fn poly_at(p: &Poly, t: u64) -> Option<u64> {
    let mut acc = 0u64;
    for c in p.coeffs().iter().rev() {
        acc = (mulmod(acc, t) + rat_mod(c)?) % P;
    }
    Some(acc)
}

/// `f(t) mod P`, when the reduction is defined.
fn fingerprint(f: &RationalFunction, t: u64) -> Option<u64> {
    let d = poly_at(f.den(), t)?;
    if d == 0 {
        return None;
    }
    Some(mulmod(poly_at(f.num(), t)?, powmod(d, P - 2)))
}

/// Reduction at a few points where every value is defined. Evaluation is a
/// ring map on that subring, so a vanishing sum always fingerprints to zero.
fn fingerprints(values: &[RationalFunction]) -> Option<Vec<[u64; 3]>> {
    let mut points = Vec::new();
    let mut t = 2u64;
    while points.len() < 3 && t < 200 {
        if values.iter().all(|v| fingerprint(v, t).is_some()) {
            points.push(t);
        }
        t += 1;
    }
    if points.len() < 3 {
        return None;
    }
    Some(
        values
            .iter()
            .map(|v| {
                let mut fp = [0; 3];
                for (k, &t) in points.iter().enumerate() {
                    fp[k] = fingerprint(v, t).expect("checked above");
                }
                fp
            })
            .collect(),
    )
}

fn exact_zero(values: &[RationalFunction], idx: &[usize]) -> bool {
    idx.iter()
        .fold(RationalFunction::zero(), |acc, &i| &acc + &values[i])
        .is_zero()
}

/// Smallest vanishing subset (by size, then lexicographic), which is minimal
/// under inclusion; `None` if no nonempty subset sums to zero.
pub fn minimal_vanishing_subsum(values: &[RationalFunction]) -> Result<Option<SubsumWitness>> {
    if values.len() > SUBSUM_BUDGET {
        return Err(Error::EnumerationBudget {
            len: values.len(),
            limit: SUBSUM_BUDGET,
        });
    }
    let fps = fingerprints(values);
    for k in 1..=values.len() {
        for idx in Combinations::new(values.len(), k) {
            let candidate = match &fps {
                Some(fps) => (0..3).all(|c| idx.iter().fold(0, |acc, &i| (acc + fps[i][c]) % P) == 0),
                None => true,
            };
            if candidate && exact_zero(values, &idx) {
                let terms = idx.iter().map(|&i| values[i].clone()).collect();
                return Ok(Some(SubsumWitness { indices: idx, terms }));
            }
        }
    }
    Ok(None)
}
