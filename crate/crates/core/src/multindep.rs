//! Multiplicative independence modulo constants and an effective bound for
//! `max(n, m)` given a height bound on `γⁿ/δᵐ`.
//!
//! `γ^r δ^s` is constant exactly when `r·div(γ) + s·div(δ) = 0`, so for two
//! elements independence is non-proportionality of their divisors.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::places::{divisor, Place};
use crate::polyalg::{Rational, RationalFunction};

/// Witness `γ^r δ^s ∈ ℚ*` with `gcd(|r|, |s|) = 1`, `r > 0` or `r = 0, s > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultRelation {
    pub r: i64,
    pub s: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Independence {
    Independent,
    Dependent(MultRelation),
}

impl Independence {
    pub fn is_independent(&self) -> bool {
        matches!(self, Independence::Independent)
    }
}

pub fn multiplicatively_independent(
    gamma: &RationalFunction,
    delta: &RationalFunction,
) -> Result<Independence> {
    if gamma.is_zero() || delta.is_zero() {
        return Err(Error::ZeroArgument("multiplicatively_independent"));
    }
    let dg = divisor(gamma)?;
    let dd = divisor(delta)?;
    if dg.is_empty() {
        return Ok(Independence::Dependent(MultRelation { r: 1, s: 0 }));
    }
    if dd.is_empty() {
        return Ok(Independence::Dependent(MultRelation { r: 0, s: 1 }));
    }
    // Both nonzero vectors: the only candidate is r = v_p(δ), s = -v_p(γ) at
    // some place where γ is nontrivial, reduced to lowest terms.
    let (p, eg) = dg.iter().next().expect("nonempty");
    let ed = dd.get(p);
    if ed == 0 {
        return Ok(Independence::Independent);
    }
    let g = ed.gcd(&eg);
    let (mut r, mut s) = (ed / g, -eg / g);
    if r < 0 {
        r = -r;
        s = -s;
    }
    if dg.combine(r, &dd, s).is_empty() {
        Ok(Independence::Dependent(MultRelation { r, s }))
    } else {
        Ok(Independence::Independent)
    }
}

/// Precomputed exponent table for `(n, m) ↦ H(γⁿ/δᵐ)` extended to rational
/// directions.
#[derive(Clone, Debug)]
pub struct DirectionalHeight {
    /// (deg place, ν(γ), ν(δ)) over the union of supports.
    rows: Vec<(i64, i64, i64)>,
}

impl DirectionalHeight {
    pub fn new(gamma: &RationalFunction, delta: &RationalFunction) -> Result<Self> {
        if gamma.is_zero() || delta.is_zero() {
            return Err(Error::ZeroArgument("directional_height"));
        }
        let dg = divisor(gamma)?;
        let dd = divisor(delta)?;
        let mut places: Vec<&Place> = dg.support().chain(dd.support()).collect();
        places.sort();
        places.dedup();
        let rows = places
            .into_iter()
            .map(|p| (p.degree() as i64, dg.get(p), dd.get(p)))
            .collect();
        Ok(DirectionalHeight { rows })
    }

    /// Σ deg · max(0, n·ν(γ) − m·ν(δ)).
    pub fn at(&self, n: &Rational, m: &Rational) -> Rational {
        self.rows
            .iter()
            .map(|&(deg, a, b)| {
                let v = n * Rational::from_integer(a.into()) - m * Rational::from_integer(b.into());
                if v.is_positive() {
                    v * Rational::from_integer(deg.into())
                } else {
                    Rational::zero()
                }
            })
            .sum()
    }

    /// Integer-point version of [`DirectionalHeight::at`].
    pub fn at_int(&self, n: i64, m: i64) -> i64 {
        self.rows
            .iter()
            .map(|&(deg, a, b)| deg * (n * a - m * b).max(0))
            .sum()
    }

    /// κ = min of the height over directions with `max(n, m) = 1`, `n, m ≥ 0`.
    ///
    /// The function is a sum of `max(0, linear)` terms, so on each of the two
    /// edges `n = 1` and `m = 1` its minimum sits at an endpoint or at a
    /// point where one of the linear terms changes sign.
    pub fn kappa(&self) -> Rational {
        let one = Rational::from_integer(1.into());
        let zero = Rational::zero();
        let mut candidates: Vec<(Rational, Rational)> = vec![
            (one.clone(), zero.clone()),
            (one.clone(), one.clone()),
            (zero.clone(), one.clone()),
        ];
        for &(_, a, b) in &self.rows {
            // n = 1: a − m·b = 0 ⇒ m = a/b
            if b != 0 {
                let m = Rational::new(a.into(), b.into());
                if m >= zero && m <= one {
                    candidates.push((one.clone(), m));
                }
            }
            // m = 1: n·a − b = 0 ⇒ n = b/a
            if a != 0 {
                let n = Rational::new(b.into(), a.into());
                if n >= zero && n <= one {
                    candidates.push((n, one.clone()));
                }
            }
        }
        candidates
            .iter()
            .map(|(n, m)| self.at(n, m))
            .min()
            .expect("nonempty candidate list")
    }
}

/// H(γⁿ/δᵐ) for nonnegative rational `(n, m) ≠ (0, 0)`.
pub fn directional_height(
    gamma: &RationalFunction,
    delta: &RationalFunction,
    n: &Rational,
    m: &Rational,
) -> Result<Rational> {
    if n.is_negative() || m.is_negative() || (n.is_zero() && m.is_zero()) {
        return Err(Error::Precondition(
            "direction must be nonnegative and not (0, 0)".into(),
        ));
    }
    Ok(DirectionalHeight::new(gamma, delta)?.at(n, m))
}

/// `L' = L / κ`, so that `H(γⁿ/δᵐ) ≤ L` forces `max(n, m) ≤ L'`.
pub fn effective_lprime(gamma: &RationalFunction, delta: &RationalFunction, l: u64) -> Result<Rational> {
    if gamma.is_zero() || delta.is_zero() {
        return Err(Error::LprimeHypotheses("zero argument".into()));
    }
    if gamma.is_constant() || delta.is_constant() {
        return Err(Error::LprimeHypotheses("constant argument".into()));
    }
    if let Independence::Dependent(rel) = multiplicatively_independent(gamma, delta)? {
        return Err(Error::LprimeHypotheses(format!(
            "multiplicatively dependent, relation (r, s) = ({}, {})",
            rel.r, rel.s
        )));
    }
    let kappa = DirectionalHeight::new(gamma, delta)?.kappa();
    debug_assert!(kappa.is_positive());
    Ok(Rational::from_integer(l.into()) / kappa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use crate::polyalg::int;

    fn rf(s: &str) -> RationalFunction {
        parse(s).unwrap()
    }

    #[test]
    fn independence_examples() {
        assert_eq!(
            multiplicatively_independent(&rf("x"), &rf("x+1")).unwrap(),
            Independence::Independent
        );
        assert_eq!(
            multiplicatively_independent(&rf("x^2"), &rf("x^3")).unwrap(),
            Independence::Dependent(MultRelation { r: 3, s: -2 })
        );
        assert_eq!(
            multiplicatively_independent(&rf("(x-1)/x"), &rf("x/(x-1)")).unwrap(),
            Independence::Dependent(MultRelation { r: 1, s: 1 })
        );
        assert_eq!(
            multiplicatively_independent(&rf("3"), &rf("x")).unwrap(),
            Independence::Dependent(MultRelation { r: 1, s: 0 })
        );
        assert_eq!(
            multiplicatively_independent(&rf("x"), &rf("-2")).unwrap(),
            Independence::Dependent(MultRelation { r: 0, s: 1 })
        );
        assert!(multiplicatively_independent(&RationalFunction::zero(), &rf("x")).is_err());
    }

    #[test]
    fn shared_place_but_not_proportional() {
        // x^2(x+1) and x(x+1)^2 share places but are independent
        assert!(multiplicatively_independent(&rf("x^2*(x+1)"), &rf("x*(x+1)^2"))
            .unwrap()
            .is_independent());
    }

    #[test]
    fn directional_height_examples() {
        assert_eq!(directional_height(&rf("x"), &rf("x+1"), &int(2), &int(3)).unwrap(), int(3));
        assert_eq!(directional_height(&rf("x"), &rf("x"), &int(1), &int(1)).unwrap(), int(0));
        let dh = DirectionalHeight::new(&rf("x^2+1"), &rf("x-3")).unwrap();
        let (n0, m0) = (int(2), int(5));
        let t = Rational::new(7.into(), 3.into());
        assert_eq!(dh.at(&(&t * &n0), &(&t * &m0)), &t * dh.at(&n0, &m0));
        assert!(directional_height(&rf("x"), &rf("x+1"), &int(0), &int(0)).is_err());
    }

    #[test]
    fn lprime_examples() {
        assert_eq!(effective_lprime(&rf("x"), &rf("x+1"), 10).unwrap(), int(10));
        assert_eq!(effective_lprime(&rf("x^2"), &rf("x+1"), 10).unwrap(), int(10));
        assert_eq!(effective_lprime(&rf("x^2+x+3"), &rf("x/(x-5)"), 0).unwrap(), int(0));
        assert!(matches!(
            effective_lprime(&rf("x^2"), &rf("x^3"), 5),
            Err(Error::LprimeHypotheses(_))
        ));
        assert!(matches!(effective_lprime(&rf("2"), &rf("x"), 5), Err(Error::LprimeHypotheses(_))));
    }

    #[test]
    fn kappa_matches_fine_grid_minimum() {
        // brute-force minimisation over a grid of step 1/60 on both edges
        for (g, d) in [("x^2", "x+1"), ("x", "x+1"), ("x^3/(x-1)", "(x+2)^2"), ("x^2+1", "x^3")] {
            let dh = DirectionalHeight::new(&rf(g), &rf(d)).unwrap();
            let mut best: Option<Rational> = None;
            for k in 0..=60 {
                let t = Rational::new(k.into(), 60.into());
                for (n, m) in [(int(1), t.clone()), (t.clone(), int(1))] {
                    let v = dh.at(&n, &m);
                    if best.as_ref().is_none_or(|b| v < *b) {
                        best = Some(v);
                    }
                }
            }
            let kappa = dh.kappa();
            assert!(kappa <= best.clone().unwrap(), "{g} {d}");
            assert!(kappa.is_positive());
        }
        // x^2 vs x+1: κ = 1 exactly
        assert_eq!(DirectionalHeight::new(&rf("x^2"), &rf("x+1")).unwrap().kappa(), int(1));
    }
}
