//! Linear recurrence sequences in power-sum form `Gₙ = Σ aᵢ(n) αᵢⁿ` over ℚ(x).

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par::Execution;
use crate::places::{h, valuation, val, ExtInt, Place};
use crate::polyalg::linalg::express_in_basis;
use crate::polyalg::{Poly, Rational, RationalFunction};

/// Polynomial in `n` with coefficients in ℚ(x); index `k` holds the
/// coefficient of `n^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffPoly {
    coeffs: Vec<RationalFunction>,
}

impl CoeffPoly {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Result<Self> {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidRecurrence("zero coefficient polynomial".into()));
        }
        Ok(CoeffPoly { coeffs })
    }

    pub fn constant(c: RationalFunction) -> Result<Self> {
        CoeffPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, n: u64) -> RationalFunction {
        let nr = RationalFunction::constant(Rational::from_integer(n.into()));
        self.coeffs
            .iter()
            .rev()
            .fold(RationalFunction::zero(), |acc, c| &(&acc * &nr) + c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: CoeffPoly,
    pub root: RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonDegeneracy {
    NonDegenerate,
    /// 0-based indices of two roots with constant ratio.
    Degenerate(usize, usize),
}

impl NonDegeneracy {
    pub fn holds(self) -> bool {
        self == NonDegeneracy::NonDegenerate
    }
}

impl LinearRecurrence {
    /// Roots must be nonzero and pairwise distinct; at least one term.
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidRecurrence("no terms".into()));
        }
        for (i, t) in terms.iter().enumerate() {
            if t.root.is_zero() {
                return Err(Error::InvalidRecurrence(format!("root {} is zero", i + 1)));
            }
            if let Some(j) = terms[..i].iter().position(|u| u.root == t.root) {
                return Err(Error::InvalidRecurrence(format!(
                    "roots {} and {} coincide",
                    j + 1,
                    i + 1
                )));
            }
        }
        Ok(LinearRecurrence { terms })
    }

    /// `c · αⁿ`.
    pub fn monomial(c: RationalFunction, root: RationalFunction) -> Result<Self> {
        LinearRecurrence::new(vec![Term {
            coeff: CoeffPoly::constant(c)?,
            root,
        }])
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn roots(&self) -> impl Iterator<Item = &RationalFunction> {
        self.terms.iter().map(|t| &t.root)
    }

    pub fn evaluate(&self, n: u64) -> RationalFunction {
        let e = i64::try_from(n).expect("index fits in i64");
        self.terms.iter().fold(RationalFunction::zero(), |acc, t| {
            let a = t.coeff.eval(n);
            if a.is_zero() {
                return acc;
            }
            &acc + &(&a * &t.root.pow(e).expect("roots are nonzero"))
        })
    }

    /// Values at `n = lo..=hi`.
    pub fn evaluate_range(&self, lo: u64, hi: u64, exec: Execution) -> Vec<RationalFunction> {
        let idx: Vec<u64> = (lo..=hi).collect();
        exec.map(&idx, |&n| self.evaluate(n))
    }

    pub fn is_nondegenerate(&self) -> NonDegeneracy {
        for i in 0..self.terms.len() {
            for j in i + 1..self.terms.len() {
                let ratio = &self.terms[i].root / &self.terms[j].root;
                if h(&ratio) == 0 {
                    return NonDegeneracy::Degenerate(i, j);
                }
            }
        }
        NonDegeneracy::NonDegenerate
    }

    pub fn has_constant_root(&self) -> bool {
        self.roots().any(|r| h(r) == 0)
    }

    pub fn min_root_valuation(&self, mu: &Place) -> i64 {
        self.roots().map(|r| val(mu, r)).min().expect("at least one term")
    }

    /// Whether the first root attains the minimal valuation at `mu`.
    pub fn dominant_root_ok(&self, mu: &Place) -> bool {
        val(mu, &self.terms[0].root) == self.min_root_valuation(mu)
    }

    /// Coefficients `c_0, …, c_D` (with `c_D = 1`) of
    /// `∏ᵢ (T − αᵢ)^(deg aᵢ + 1)`; every such sequence satisfies
    /// `Σ c_k G_{n+k} = 0`.
    pub fn characteristic_coefficients(&self) -> Vec<RationalFunction> {
        let mut poly = vec![RationalFunction::one()];
        for t in &self.terms {
            for _ in 0..=t.coeff.degree() {
                // multiply by (T − α)
                let mut next = vec![RationalFunction::zero(); poly.len() + 1];
                for (k, c) in poly.iter().enumerate() {
                    next[k + 1] = &next[k + 1] + c;
                    next[k] = &next[k] - &(c * &t.root);
                }
                poly = next;
            }
        }
        poly
    }

    /// For each root, the greedy maximal ℚ-independent subset of its
    /// coefficient functions `a_{i0}, a_{i1}, …` (scanned in that order) and
    /// the polynomials `P_{ig}(n) ∈ ℚ[n]` with `aᵢ(n) = Σ_g P_{ig}(n) π_{ig}`.
    pub fn pi_rewrite(&self) -> PiForm {
        let groups = self
            .terms
            .iter()
            .map(|t| {
                let mut basis: Vec<RationalFunction> = Vec::new();
                // per basis element, coefficient of n^k in P
                let mut pcoeffs: Vec<Vec<Rational>> = Vec::new();
                for (k, a) in t.coeff.coeffs().iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    match express_in_basis(&basis, a) {
                        Some(cs) => {
                            for (g, c) in cs.into_iter().enumerate() {
                                set_coeff(&mut pcoeffs[g], k, c);
                            }
                        }
                        None => {
                            basis.push(a.clone());
                            let mut v = Vec::new();
                            set_coeff(&mut v, k, Rational::one());
                            pcoeffs.push(v);
                        }
                    }
                }
                PiGroup {
                    root: t.root.clone(),
                    members: pcoeffs
                        .into_iter()
                        .map(Poly::from_coeffs)
                        .zip(basis)
                        .collect(),
                }
            })
            .collect();
        PiForm { groups }
    }

    /// μ(Gₙ) − n · min_i μ(αᵢ) for `n = 1..=n_max`.
    pub fn growth_profile(&self, mu: &Place, n_max: u64, exec: Execution) -> Result<GrowthProfile> {
        if let NonDegeneracy::Degenerate(i, j) = self.is_nondegenerate() {
            return Err(Error::Degenerate(i + 1, j + 1));
        }
        let base = self.min_root_valuation(mu);
        let values = self.evaluate_range(1, n_max, exec);
        let mut entries = Vec::with_capacity(values.len());
        let mut zeros = Vec::new();
        for (n, v) in (1..=n_max).zip(&values) {
            let gap = match valuation(mu, v) {
                ExtInt::Infinity => {
                    zeros.push(n);
                    ExtInt::Infinity
                }
                ExtInt::Finite(x) => ExtInt::Finite(x - n as i64 * base),
            };
            entries.push((n, gap));
        }
        let finite = || entries.iter().filter_map(|(_, g)| g.finite());
        Ok(GrowthProfile {
            c_minus: finite().min(),
            c_plus: finite().max(),
            entries,
            zeros,
        })
    }
}

fn set_coeff(v: &mut Vec<Rational>, k: usize, c: Rational) {
    if v.len() <= k {
        v.resize(k + 1, Rational::zero());
    }
    v[k] = c;
}

impl fmt::Display for LinearRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let a: Vec<String> = t
                    .coeff
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| match k {
                        0 => format!("({c})"),
                        1 => format!("({c})*n"),
                        _ => format!("({c})*n^{k}"),
                    })
                    .collect();
                format!("[{}]*({})^n", a.join("+"), t.root)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Empirical stand-in for the growth constants: the gap sequence and its
/// extremes over the finite entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthProfile {
    pub entries: Vec<(u64, ExtInt)>,
    /// Indices with `Gₙ = 0`.
    pub zeros: Vec<u64>,
    pub c_minus: Option<i64>,
    pub c_plus: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiGroup {
    pub root: RationalFunction,
    /// `(P_g(n), π_g)`.
    pub members: Vec<(Poly, RationalFunction)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiForm {
    pub groups: Vec<PiGroup>,
}

impl PiForm {
    /// Group sizes `k_i`.
    pub fn group_sizes(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.members.len()).collect()
    }

    pub fn basis_len(&self) -> usize {
        self.groups.iter().map(|g| g.members.len()).sum()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &RationalFunction> {
        self.groups.iter().flat_map(|g| g.members.iter().map(|(_, pi)| pi))
    }

    /// The summands `P_{ig}(n) π_{ig} αᵢⁿ`, group-major.
    pub fn summands(&self, n: u64) -> Vec<RationalFunction> {
        let nr = Rational::from_integer(n.into());
        let e = i64::try_from(n).expect("index fits in i64");
        self.groups
            .iter()
            .flat_map(|g| {
                let pow = g.root.pow(e).expect("roots are nonzero");
                let nr = nr.clone();
                g.members
                    .iter()
                    .map(move |(p, pi)| (pi * &pow).scale(&p.eval(&nr)))
            })
            .collect()
    }

    pub fn evaluate(&self, n: u64) -> RationalFunction {
        self.summands(n)
            .iter()
            .fold(RationalFunction::zero(), |acc, s| &acc + s)
    }

    /// Expands back to power-sum form.
    pub fn to_recurrence(&self) -> Result<LinearRecurrence> {
        let terms = self
            .groups
            .iter()
            .map(|g| {
                let deg = g
                    .members
                    .iter()
                    .map(|(p, _)| p.degree().unwrap_or(0))
                    .max()
                    .unwrap_or(0);
                let coeffs = (0..=deg)
                    .map(|k| {
                        g.members.iter().fold(RationalFunction::zero(), |acc, (p, pi)| {
                            &acc + &pi.scale(&p.coeff(k))
                        })
                    })
                    .collect();
                Ok(Term {
                    coeff: CoeffPoly::new(coeffs)?,
                    root: g.root.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LinearRecurrence::new(terms)
    }
}

impl fmt::Display for PiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.groups.iter().enumerate() {
            let members: Vec<String> = g
                .members
                .iter()
                .map(|(p, pi)| format!("({})*({})", p.display_var("n"), pi))
                .collect();
            writeln!(f, "root {} = {}: {}", i + 1, g.root, members.join(" + "))?;
        }
        Ok(())
    }
}
