//! Height bounds for unit equations and the subspace-type valuation bound.
//!
//! `|S|` counts places over ℂ: a place of degree `d` over ℚ splits into `d`
//! places of ℂ(x) with identical valuations on ℚ(x), so it contributes `d`.

use std::fmt;

use crate::error::{Error, Result};
use crate::places::{divisor, h, minimal_s, val, PlaceSet};
use crate::polyalg::RationalFunction;
use crate::util::binomial2;

use super::subsum::{independence_check, minimal_vanishing_subsum, LinearIndependence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InequalityReport {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl InequalityReport {
    fn new(lhs: i64, rhs: i64) -> Self {
        InequalityReport {
            lhs,
            rhs,
            holds: lhs <= rhs,
        }
    }
}

impl fmt::Display for InequalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lhs={} rhs={} holds={}", self.lhs, self.rhs, self.holds)
    }
}

/// `max H(uᵢ) ≤ binom(k, 2)(|S| + max(0, 2g − 2))` for a nondegenerate unit
/// equation `1 + u₁ + … + u_k = 0`. When `s` is `None` the joint support of
/// the units is used.
pub fn check_brownawell_masser(
    units: &[RationalFunction],
    s: Option<&PlaceSet>,
    genus: u64,
) -> Result<InequalityReport> {
    if units.is_empty() {
        return Err(Error::Precondition("no units".into()));
    }
    if units.iter().any(RationalFunction::is_zero) {
        return Err(Error::ZeroArgument("check_brownawell_masser"));
    }
    let total = units
        .iter()
        .fold(RationalFunction::one(), |acc, u| &acc + u);
    if !total.is_zero() {
        return Err(Error::IdentityFails(format!("1 + Σ uᵢ = {total}")));
    }
    let s = match s {
        Some(s) => s.clone(),
        None => minimal_s(units, &PlaceSet::new())?,
    };
    for (i, u) in units.iter().enumerate() {
        if let Some(p) = divisor(u)?.support().find(|p| !s.contains(p)) {
            return Err(Error::NotSUnit(format!("u{} = {u} has place {p} outside S", i + 1)));
        }
    }
    let mut all = vec![RationalFunction::one()];
    all.extend(units.iter().cloned());
    let w = minimal_vanishing_subsum(&all)?.expect("the full sum vanishes");
    if w.indices.len() < all.len() {
        return Err(Error::VanishingSubsum(w.indices));
    }
    let lhs = units.iter().map(h).max().expect("nonempty");
    let k = units.len() as u64;
    let rhs = binomial2(k) * (s.complex_size() + (2 * genus).saturating_sub(2));
    Ok(InequalityReport::new(lhs, rhs as i64))
}

/// `Σ_{ν∈S} (ν(σ) − minᵢ ν(φᵢ)) ≤ binom(n, 2)(|S| + 2g − 2) + Σ_{i>r} H(φᵢ)`
/// with `σ = Σ φᵢ`, for φ's linearly independent over the constants and `S`
/// containing every pole of every φ and every zero of `φ₁, …, φ_r`.
pub fn check_zannier(
    phis: &[RationalFunction],
    r: usize,
    s: &PlaceSet,
    genus: u64,
) -> Result<InequalityReport> {
    if phis.is_empty() {
        return Err(Error::Precondition("no functions".into()));
    }
    if r > phis.len() {
        return Err(Error::Precondition(format!("r = {r} exceeds n = {}", phis.len())));
    }
    match independence_check(phis) {
        Ok(LinearIndependence::Independent) => {}
        Ok(LinearIndependence::Dependent(_)) | Err(Error::ZeroArgument(_)) => {
            return Err(Error::NotIndependent)
        }
        Err(e) => return Err(e),
    }
    for (i, phi) in phis.iter().enumerate() {
        for (p, e) in divisor(phi)?.iter() {
            if s.contains(p) {
                continue;
            }
            if e < 0 {
                return Err(Error::Precondition(format!("S misses the pole {p} of φ{}", i + 1)));
            }
            if i < r {
                return Err(Error::Precondition(format!("S misses the zero {p} of φ{}", i + 1)));
            }
        }
    }
    let sigma = phis
        .iter()
        .fold(RationalFunction::zero(), |acc, f| &acc + f);
    let lhs: i64 = s
        .iter()
        .map(|p| {
            let m = phis.iter().map(|f| val(p, f)).min().expect("nonempty");
            p.degree() as i64 * (val(p, &sigma) - m)
        })
        .sum();
    let n = phis.len() as u64;
    let rhs = binomial2(n) as i64 * (s.complex_size() as i64 + 2 * genus as i64 - 2)
        + phis[r..].iter().map(h).sum::<i64>();
    Ok(InequalityReport::new(lhs, rhs))
}
