#![allow(dead_code)]

use std::path::PathBuf;

use ffrec_core::config::InstanceConfig;
use ffrec_core::effective::TheoremInstance;
use ffrec_core::expr::parse;
use ffrec_core::polyalg::{int, rational};
use ffrec_core::recurrence::{CoeffPoly, LinearRecurrence, Term};
use ffrec_core::{Poly, Rational, RationalFunction};
use rand::Rng;

pub fn rf(s: &str) -> RationalFunction {
    parse(s).unwrap()
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn load(name: &str) -> (InstanceConfig, TheoremInstance) {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    let cfg = InstanceConfig::from_json(&text).unwrap();
    let inst = cfg.build().unwrap();
    (cfg, inst)
}

/// Nonzero polynomial of degree exactly `deg` with integer coefficients in
/// `[-h, h]`.
pub fn poly_of_degree<R: Rng>(rng: &mut R, deg: usize, h: i64) -> Poly {
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-h..=h)).collect();
    while c[deg] == 0 {
        c[deg] = rng.gen_range(-h..=h);
    }
    Poly::from_i64(&c)
}

pub fn rand_poly<R: Rng>(rng: &mut R, max_deg: usize, h: i64) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    poly_of_degree(rng, deg, h)
}

/// Nonzero element with numerator and denominator degree ≤ `max_deg`; about
/// one in ten is a constant.
pub fn rand_rf<R: Rng>(rng: &mut R, max_deg: usize, h: i64) -> RationalFunction {
    if rng.gen_ratio(1, 10) {
        let n = loop {
            let v = rng.gen_range(-h..=h);
            if v != 0 {
                break v;
            }
        };
        return RationalFunction::constant(rational(n, rng.gen_range(1..=h)));
    }
    let num = rand_poly(rng, max_deg, h);
    let den = rand_poly(rng, max_deg, h);
    RationalFunction::new(num, den).unwrap()
}

pub fn rand_rational<R: Rng>(rng: &mut R, h: i64) -> Rational {
    let n = loop {
        let v = rng.gen_range(-h..=h);
        if v != 0 {
            break v;
        }
    };
    rational(n, rng.gen_range(1..=h))
}

/// Random recurrence with at most `d_max` terms, coefficient polynomials in
/// `n` of degree ≤ `coeff_deg`, and roots of degree ≤ `root_deg`.
pub fn rand_recurrence<R: Rng>(rng: &mut R, d_max: usize, coeff_deg: usize, root_deg: usize) -> LinearRecurrence {
    loop {
        let d = rng.gen_range(1..=d_max);
        let mut terms: Vec<Term> = Vec::new();
        while terms.len() < d {
            let root = if rng.gen_ratio(1, 5) {
                RationalFunction::new(Poly::one(), rand_poly(rng, root_deg, 3)).unwrap()
            } else {
                RationalFunction::from_poly(rand_poly(rng, root_deg, 3))
            };
            if terms.iter().any(|t| t.root == root) {
                continue;
            }
            let e = rng.gen_range(0..=coeff_deg);
            let mut coeffs: Vec<RationalFunction> = (0..=e).map(|_| RationalFunction::from_poly(rand_poly(rng, 1, 4))).collect();
            if rng.gen_ratio(1, 3) {
                coeffs[0] = RationalFunction::zero();
            }
            let Ok(coeff) = CoeffPoly::new(coeffs) else { continue };
            terms.push(Term { coeff, root });
        }
        if let Ok(r) = LinearRecurrence::new(terms) {
            return r;
        }
    }
}

/// Small irreducibles used to build elements with a known divisor.
pub const PLACES: [&str; 7] = ["x", "x+1", "x-1", "x+2", "x-3", "x^2+1", "x^2+x+1"];

pub fn place_degree(p: &str) -> i64 {
    if p.contains("x^2") {
        2
    } else {
        1
    }
}

/// `c · ∏ PLACES[i]^exps[i]`.
pub fn monomial_in_places(c: Rational, exps: &[i64]) -> RationalFunction {
    let mut f = RationalFunction::constant(c);
    for (p, &e) in PLACES.iter().zip(exps) {
        if e != 0 {
            f = &f * &rf(p).pow(e).unwrap();
        }
    }
    f
}

pub fn one() -> Rational {
    int(1)
}
