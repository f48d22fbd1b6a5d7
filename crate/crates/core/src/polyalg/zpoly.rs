//! Helpers on integer polynomials stored as ascending `Vec<BigInt>` with no
//! trailing zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    if v.is_empty() {
        return Vec::new();
    }
    let mut c = content(v);
    if v.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    v.iter().map(|x| x / &c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
pub(crate) fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return a.to_vec();
    }
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len() - b.len() + 1;
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lead = r.last().expect("nonempty").clone();
        for c in r.iter_mut() {
            *c *= lc;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lead * bc;
        }
        r = trim(r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lc.clone(), steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Primitive gcd of two nonzero integer polynomials via the primitive PRS.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        a = b;
        b = primitive(&r);
    }
}

/// Exact quotient over ℤ, `None` if `d` does not divide `a` in ℤ[x].
pub(crate) fn exact_div(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    if d.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < d.len() {
        return None;
    }
    let dd = d.len() - 1;
    let lc = &d[dd];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + dd].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, dc) in d.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trim(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn prs_gcd() {
        // (x+1)(x-2) and (x+1)(3x+5)
        let a = mul(&z(&[1, 1]), &z(&[-2, 1]));
        let b = mul(&z(&[1, 1]), &z(&[5, 3]));
        assert_eq!(gcd(&a, &b), z(&[1, 1]));
        assert_eq!(gcd(&z(&[0, 0, 1]), &z(&[1, 1])), z(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = mul(&z(&[2, 3]), &z(&[-1, 0, 4]));
        assert_eq!(exact_div(&a, &z(&[2, 3])), Some(z(&[-1, 0, 4])));
        assert_eq!(exact_div(&a, &z(&[1, 3])), None);
        assert_eq!(exact_div(&z(&[1, 2]), &z(&[0, 2])), None);
    }
}
