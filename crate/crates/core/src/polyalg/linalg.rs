//! ℚ-linear algebra on elements of ℚ(x).
//!
//! Elements are put over a common denominator and compared as coefficient
//! vectors of their numerators. ℚ-linear relations found this way are also
//! the ℂ-linear relations, since ℚ(x) and ℂ are linearly disjoint over ℚ.

use num_traits::{One, Signed, Zero};

use super::{Poly, Rational, RationalFunction};

/// Numerator coefficient vectors over a common denominator, all padded to the
/// same length.
pub fn coefficient_vectors(values: &[RationalFunction]) -> Vec<Vec<Rational>> {
    let den = values.iter().fold(Poly::one(), |acc, v| acc.lcm(v.den()));
    let nums: Vec<Poly> = values
        .iter()
        .map(|v| &v.num().clone() * &den.exact_div(v.den()).expect("lcm is a multiple"))
        .collect();
    let len = nums.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
    nums.into_iter()
        .map(|p| (0..len).map(|i| p.coeff(i)).collect())
        .collect()
}

/// Basis of `{c : Σ cᵢ colᵢ = 0}` for the given column vectors.
pub fn kernel(cols: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let k = cols.len();
    let rows = cols.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            cols.iter()
                .map(|c| c.get(r).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        if row == m.len() {
            break;
        }
        let Some(sel) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = m[row][col].recip();
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let f = line[col].clone();
                for (v, pv) in line.iter_mut().zip(&pivot) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..k)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); k];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// First kernel vector of the values, normalised to a primitive integer
/// vector whose first nonzero entry is positive. `None` means independent.
pub fn linear_relation(values: &[RationalFunction]) -> Option<Vec<Rational>> {
    let cols = coefficient_vectors(values);
    kernel(&cols).into_iter().next().map(normalize_relation)
}

fn normalize_relation(v: Vec<Rational>) -> Vec<Rational> {
    use num_integer::Integer;
    let den = v.iter().fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<_> = v
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let mut g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative) {
        g = -g;
    }
    ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect()
}

/// Coefficients expressing `target` in the span of `basis` (assumed
/// independent), or `None` if it lies outside.
pub fn express_in_basis(basis: &[RationalFunction], target: &RationalFunction) -> Option<Vec<Rational>> {
    if target.is_zero() {
        return Some(vec![Rational::zero(); basis.len()]);
    }
    let mut all = basis.to_vec();
    all.push(target.clone());
    let cols = coefficient_vectors(&all);
    let rel = kernel(&cols).into_iter().find(|v| !v[basis.len()].is_zero())?;
    let scale = -rel[basis.len()].recip();
    Some(rel[..basis.len()].iter().map(|c| c * &scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(c: &[i64]) -> RationalFunction {
        RationalFunction::from_poly(Poly::from_i64(c))
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from_integer(c.into())).collect()
    }

    #[test]
    fn relation_certificate() {
        let vals = [rf(&[0, 1]), rf(&[0, 2]), rf(&[1, 1])];
        assert_eq!(linear_relation(&vals), Some(ints(&[2, -1, 0])));
        assert_eq!(linear_relation(&[rf(&[0, 1]), rf(&[1, 1])]), None);
        assert_eq!(linear_relation(&[rf(&[1]), rf(&[0, 1]), rf(&[0, 0, 1])]), None);
    }

    #[test]
    fn relation_with_denominators() {
        // 1/x, 1/(x+1), 1/(x(x+1)) : 1/x - 1/(x+1) - 1/(x(x+1)) = 0
        let a = RationalFunction::new(Poly::one(), Poly::from_i64(&[0, 1])).unwrap();
        let b = RationalFunction::new(Poly::one(), Poly::from_i64(&[1, 1])).unwrap();
        let c = RationalFunction::new(Poly::one(), Poly::from_i64(&[0, 1, 1])).unwrap();
        assert_eq!(linear_relation(&[a, b, c]), Some(ints(&[1, -1, -1])));
    }

    #[test]
    fn express_target() {
        let basis = [rf(&[2, 2])];
        assert_eq!(
            express_in_basis(&basis, &rf(&[1, 1])),
            Some(vec![Rational::new(1.into(), 2.into())])
        );
        assert_eq!(express_in_basis(&basis, &rf(&[0, 1])), None);
    }
}
