//! Complete factorization over ℚ.
//!
//! Squarefree decomposition first, then Zassenhaus on each squarefree part:
//! Berlekamp modulo a small prime, linear Hensel lifting past the Mignotte
//! bound, and exhaustive recombination of the lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{modp, zpoly, Poly, Rational};
use crate::error::{Error, Result};
use crate::util::Combinations;

/// `unit · ∏ factorᵢ^multᵢ` with monic irreducible, pairwise distinct factors
/// sorted by degree and then coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (f, e)| &acc * &f.pow(*e))
    }
}

pub fn factor(p: &Poly) -> Result<Factorization> {
    let unit = p.leading().ok_or(Error::ZeroArgument("factor"))?.clone();
    let mut factors = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

/// Whether a nonconstant polynomial is irreducible over ℚ.
pub fn is_irreducible(p: &Poly) -> bool {
    if p.is_constant() {
        return false;
    }
    match factor(p) {
        Ok(f) => f.factors.len() == 1 && f.factors[0].1 == 1,
        Err(_) => false,
    }
}

/// Monic irreducible factors of a monic squarefree polynomial.
fn factor_squarefree(s: &Poly) -> Vec<Poly> {
    let n = s.deg();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![s.clone()];
    }
    if s.constant_term().is_zero() {
        let rest = s.exact_div(&Poly::x()).expect("x divides");
        let mut out = vec![Poly::x()];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let (_, prim) = s.primitive_integer();
    zassenhaus(&prim)
        .into_iter()
        .map(|f| Poly::from_bigints(&f).monic())
        .collect()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Irreducible primitive factors of a primitive squarefree integer polynomial
/// of degree ≥ 2 with positive leading coefficient.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let lc = f[n].clone();

    // Try a handful of admissible primes and keep the one giving the fewest
    // modular factors; recombination cost is exponential in that count.
    let mut best: Option<(u64, Vec<modp::FpPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::reduce(f, p);
        if !modp::is_squarefree(&fp, p) {
            continue;
        }
        let facs = modp::berlekamp(&modp::monic(&fp, p), p);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried == 5 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    let (p, modular) = best.expect("some prime is admissible");
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }

    // |coeff of any factor| ≤ 2^n ‖f‖₁, and candidates carry an extra lc.
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm1;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }

    let lifted = hensel_lift_all(f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

/// Lifts `f ≡ lc · ∏ gᵢ (mod p)` to monic factors modulo `p^k`.
fn hensel_lift_all(f: &[BigInt], modular: &[modp::FpPoly], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let pb = BigInt::from(p);
    let modulus = num_traits::pow(pb.clone(), k as usize);
    let mut out = Vec::with_capacity(modular.len());
    let mut cur = f.to_vec();
    for i in 0..modular.len() - 1 {
        let lc_mod = modp::reduce(&[cur.last().expect("nonzero").clone()], p);
        let rest = modular[i + 1..]
            .iter()
            .fold(lc_mod, |acc, g| modp::mul(&acc, g, p));
        let (g, h) = lift_pair(&cur, &modular[i], &rest, p, k);
        out.push(g);
        cur = h;
    }
    let lc = cur.last().expect("nonzero").clone();
    let inv = mod_inverse(&lc, &modulus);
    out.push(
        cur.iter()
            .map(|c| (c * &inv).mod_floor(&modulus))
            .collect(),
    );
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Linear Hensel lifting of `f ≡ g·h (mod p)` with `g` monic to `p^k`.
/// `lc(h) = lc(f)` throughout, so `f − g·h` never reaches degree `deg f`.
fn lift_pair(
    f: &[BigInt],
    g0: &modp::FpPoly,
    h0: &modp::FpPoly,
    p: u64,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let pb = BigInt::from(p);
    let (_, t) = modp::bezout(g0, h0, p);
    let mut g: Vec<BigInt> = g0.iter().map(|&c| BigInt::from(c)).collect();
    let mut h: Vec<BigInt> = h0.iter().map(|&c| BigInt::from(c)).collect();
    *h.last_mut().expect("nonzero") = f.last().expect("nonzero").clone();
    let mut pj = pb.clone();
    for _ in 1..k {
        let gh = zpoly::mul(&g, &h);
        let diff: Vec<BigInt> = (0..f.len().max(gh.len()))
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                (a - b) / &pj
            })
            .collect();
        let e = modp::reduce(&diff, p);
        if !e.is_empty() {
            let gm = modp::reduce(&g, p);
            let hm = modp::reduce(&h, p);
            let dg = modp::rem(&modp::mul(&t, &e, p), &gm, p);
            let (dh, r) = modp::div_rem(&modp::sub(&e, &modp::mul(&hm, &dg, p), p), &gm, p);
            debug_assert!(r.is_empty());
            add_scaled(&mut g, &dg, &pj);
            add_scaled(&mut h, &dh, &pj);
        }
        pj *= &pb;
    }
    (g, h)
}

fn add_scaled(target: &mut Vec<BigInt>, delta: &[u64], scale: &BigInt) {
    if target.len() < delta.len() {
        target.resize(delta.len(), BigInt::zero());
    }
    for (t, &d) in target.iter_mut().zip(delta) {
        if d != 0 {
            *t += scale * BigInt::from(d);
        }
    }
}

fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    zpoly::trim(
        v.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn recombine(f: &[BigInt], lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining = lifted;
    let mut f = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        for subset in Combinations::new(remaining.len(), size) {
            let lc = f.last().expect("nonzero").clone();
            let prod = subset.iter().fold(vec![lc], |acc, &i| {
                zpoly::mul(&acc, &remaining[i])
                    .into_iter()
                    .map(|c| c.mod_floor(modulus))
                    .collect()
            });
            let cand = zpoly::primitive(&symmetric(&prod, modulus));
            if cand[0].is_zero() || !(&f[0] % &cand[0]).is_zero() {
                continue;
            }
            if let Some(q) = zpoly::exact_div(&f, &cand) {
                out.push(cand);
                f = q;
                for &i in subset.iter().rev() {
                    remaining.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if f.len() > 1 {
        out.push(zpoly::primitive(&f));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn difference_of_squares() {
        let f = factor(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(f.unit, Rational::one());
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn irreducible_quadratic() {
        let f = factor(&p(&[1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn constant_only() {
        let f = factor(&p(&[6])).unwrap();
        assert_eq!(f.unit, Rational::from_integer(6.into()));
        assert!(f.factors.is_empty());
        assert!(factor(&Poly::zero()).is_err());
    }

    #[test]
    fn swinnerton_dyer_style_recombination() {
        // x^4 - 10x^2 + 1 is irreducible over ℚ but splits modulo every prime.
        let f = factor(&p(&[1, 0, -10, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[1, 0, -10, 0, 1]), 1)]);
    }

    #[test]
    fn mixed_multiplicities_and_content() {
        // 3 (x^2+x+1)^2 (2x-1) (x^3-2)
        let g = &(&p(&[1, 1, 1]).pow(2) * &p(&[-1, 2])) * &p(&[-2, 0, 0, 1]);
        let g = g.scale(&Rational::from_integer(3.into()));
        let f = factor(&g).unwrap();
        assert_eq!(f.expand(), g);
        assert_eq!(f.unit, Rational::from_integer(6.into()));
        let degs: Vec<_> = f.factors.iter().map(|(q, e)| (q.deg(), *e)).collect();
        assert_eq!(degs, vec![(1, 1), (2, 2), (3, 1)]);
    }

    #[test]
    fn cyclotomic_product() {
        // x^12 - 1 = Φ1 Φ2 Φ3 Φ4 Φ6 Φ12
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let f = factor(&p(&c)).unwrap();
        assert_eq!(f.factors.len(), 6);
        assert_eq!(f.expand(), p(&c));
        assert!(f.factors.iter().all(|(q, _)| q.is_monic()));
    }
}
