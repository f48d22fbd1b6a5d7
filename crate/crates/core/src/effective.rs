//! Explicit constants attached to a pair of recurrences: the place set `S`,
//! `C_aux`, the index bounds from the mixed-root and pure-root cases of the
//! vanishing-subsum analysis, and the initial threshold `c₀`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::multindep::{effective_lprime, multiplicatively_independent};
use crate::places::{h, minimal_s, Place, PlaceSet};
use crate::polyalg::{factor, Poly, Rational, RationalFunction};
use crate::recurrence::{LinearRecurrence, NonDegeneracy, PiForm};
use crate::util::binomial2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// Both indices large.
    One,
    /// One index large; needs nonconstant roots throughout.
    Two,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub label: String,
    /// Message used when the hypothesis fails.
    pub failure: String,
    pub holds: bool,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds { "ok  " } else { "FAIL" };
        if self.holds {
            write!(f, "[{mark}] {}", self.label)
        } else {
            write!(f, "[{mark}] {}", self.failure)
        }
    }
}

pub(crate) fn sub(i: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    i.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

/// Two recurrences `G`, `H` with their π/ψ forms, multipliers `a, b`, a
/// place `μ` and the genus.
#[derive(Clone, Debug)]
pub struct TheoremInstance {
    g: LinearRecurrence,
    h: LinearRecurrence,
    g_pi: PiForm,
    h_psi: PiForm,
    a: RationalFunction,
    b: RationalFunction,
    mu: Place,
    genus: u64,
}

impl TheoremInstance {
    pub fn new(
        g: LinearRecurrence,
        h: LinearRecurrence,
        a: RationalFunction,
        b: RationalFunction,
        mu: Place,
        genus: u64,
    ) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroArgument("multiplier a or b"));
        }
        let g_pi = g.pi_rewrite();
        let h_psi = h.pi_rewrite();
        Ok(TheoremInstance {
            g,
            h,
            g_pi,
            h_psi,
            a,
            b,
            mu,
            genus,
        })
    }

    pub fn g(&self) -> &LinearRecurrence {
        &self.g
    }

    pub fn h(&self) -> &LinearRecurrence {
        &self.h
    }

    pub fn g_pi(&self) -> &PiForm {
        &self.g_pi
    }

    pub fn h_psi(&self) -> &PiForm {
        &self.h_psi
    }

    pub fn a(&self) -> &RationalFunction {
        &self.a
    }

    pub fn b(&self) -> &RationalFunction {
        &self.b
    }

    pub fn mu(&self) -> &Place {
        &self.mu
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    fn alpha1(&self) -> &RationalFunction {
        &self.g.terms()[0].root
    }

    /// The hypothesis checklist for `theorem`, in a fixed order.
    pub fn hypotheses(&self, theorem: Theorem) -> Vec<Hypothesis> {
        let mut out = Vec::new();
        for (name, root, rec) in [("G", "α", &self.g), ("H", "β", &self.h)] {
            let (holds, failure) = match rec.is_nondegenerate() {
                NonDegeneracy::NonDegenerate => (true, String::new()),
                NonDegeneracy::Degenerate(i, j) => (
                    false,
                    format!("{name} degenerate: {root}{}/{root}{} constant", sub(i + 1), sub(j + 1)),
                ),
            };
            out.push(Hypothesis {
                label: format!("{name} non-degenerate"),
                failure,
                holds,
            });
        }
        out.push(Hypothesis {
            label: "α₁ nonconstant".into(),
            failure: "α₁ constant".into(),
            holds: h(self.alpha1()) > 0,
        });
        let dominant = self.g.dominant_root_ok(&self.mu);
        out.push(Hypothesis {
            label: format!("μ(α₁) ≤ μ(αᵢ) for all i, μ = {}", self.mu),
            failure: format!("μ(α₁) is not minimal among μ(αᵢ), μ = {}", self.mu),
            holds: dominant,
        });
        for (j, beta) in self.h.roots().enumerate() {
            let holds = multiplicatively_independent(self.alpha1(), beta)
                .map(|r| r.is_independent())
                .unwrap_or(false);
            out.push(Hypothesis {
                label: format!("(α₁, β{}) multiplicatively independent", sub(j + 1)),
                failure: format!("(α₁, β{}) multiplicatively dependent", sub(j + 1)),
                holds,
            });
        }
        if theorem == Theorem::Two {
            for (name, root, rec) in [("G", "α", &self.g), ("H", "β", &self.h)] {
                let bad: Vec<String> = rec
                    .roots()
                    .enumerate()
                    .filter(|(_, r)| h(r) == 0)
                    .map(|(i, r)| format!("{root}{} = {r}", sub(i + 1)))
                    .collect();
                out.push(Hypothesis {
                    label: format!("no constant characteristic root in {name}"),
                    failure: format!("constant characteristic root in {name}: {}", bad.join(", ")),
                    holds: bad.is_empty(),
                });
            }
        }
        out
    }

    /// Fails with the first violated hypothesis.
    pub fn require(&self, theorem: Theorem) -> Result<()> {
        match self.hypotheses(theorem).into_iter().find(|h| !h.holds) {
            Some(h) => Err(Error::Hypothesis(h.failure)),
            None => Ok(()),
        }
    }
}

/// Result of a case bound: a number, or no constraint when the case cannot
/// occur (a single characteristic root).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Vacuous,
    Value(Rational),
}

impl Bound {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Bound::Vacuous => None,
            Bound::Value(v) => Some(v),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Vacuous => write!(f, "vacuous"),
            Bound::Value(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case5 {
    /// Present when some `β_j` is constant.
    pub const_bound: Option<Rational>,
    /// 1-based `j` for each nonconstant `β_j`.
    pub lprime: BTreeMap<usize, Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectiveConstants {
    pub s: PlaceSet,
    pub c_aux: u64,
    pub case3: Bound,
    /// Mirror of `case3` on the `H` side.
    pub case4: Bound,
    pub case5: Case5,
    pub c0_initial: u64,
}

impl EffectiveConstants {
    pub fn compute(inst: &TheoremInstance) -> Result<Self> {
        let c_aux = compute_c_aux(inst);
        Ok(EffectiveConstants {
            s: build_s(inst),
            c_aux,
            case3: case3_bound_with(inst.g_pi(), c_aux)?,
            case4: case3_bound_with(inst.h_psi(), c_aux)?,
            case5: case5_bounds_with(inst, c_aux)?,
            c0_initial: c0_initial(inst),
        })
    }

    pub fn to_json(&self) -> Value {
        let s: Vec<String> = self.s.iter().map(ToString::to_string).collect();
        let lprime: serde_json::Map<String, Value> = self
            .case5
            .lprime
            .iter()
            .map(|(j, v)| (j.to_string(), Value::String(v.to_string())))
            .collect();
        json!({
            "S": s,
            "C_aux": self.c_aux,
            "case3": self.case3.to_string(),
            "case4": self.case4.to_string(),
            "case5_const": self.case5.const_bound.as_ref().map(ToString::to_string),
            "case5_Lprime": lprime,
            "c0_initial": self.c0_initial,
        })
    }
}

/// All roots and π/ψ basis elements of both recurrences as S-units, plus `μ`.
pub fn build_s(inst: &TheoremInstance) -> PlaceSet {
    let fs: Vec<RationalFunction> = inst
        .g
        .roots()
        .chain(inst.h.roots())
        .chain(inst.g_pi.basis_elements())
        .chain(inst.h_psi.basis_elements())
        .cloned()
        .collect();
    let extra: PlaceSet = std::iter::once(inst.mu.clone()).collect();
    minimal_s(&fs, &extra).expect("roots and basis elements are nonzero")
}

/// `binom(total, 2) · (s_size + max(0, 2g − 2))`.
pub fn c_aux_formula(total_basis: u64, s_size: u64, genus: u64) -> u64 {
    binomial2(total_basis) * (s_size + (2 * genus).saturating_sub(2))
}

/// `|S|` counts places over ℂ, so a degree-`d` place contributes `d`.
pub fn compute_c_aux(inst: &TheoremInstance) -> u64 {
    let total = (inst.g_pi.basis_len() + inst.h_psi.basis_len()) as u64;
    c_aux_formula(total, build_s(inst).complex_size(), inst.genus)
}

fn max_pair_height<'a>(
    xs: impl IntoIterator<Item = &'a RationalFunction>,
    ys: impl IntoIterator<Item = &'a RationalFunction>,
) -> i64 {
    let ys: Vec<_> = ys.into_iter().collect();
    xs.into_iter()
        .flat_map(|p| ys.iter().map(move |q| h(&(p / *q))))
        .max()
        .unwrap_or(0)
}

/// Bound on the index when a minimal vanishing subsum mixes two different
/// roots of the same recurrence.
pub fn case3_bound(inst: &TheoremInstance) -> Result<Bound> {
    case3_bound_with(inst.g_pi(), compute_c_aux(inst))
}

pub fn case3_bound_with(form: &PiForm, c_aux: u64) -> Result<Bound> {
    let groups = &form.groups;
    if groups.len() < 2 {
        return Ok(Bound::Vacuous);
    }
    let mut min_root = i64::MAX;
    for i in 0..groups.len() {
        for j in 0..groups.len() {
            if i != j {
                let r = h(&(&groups[i].root / &groups[j].root));
                if r == 0 {
                    return Err(Error::Degenerate(i.min(j) + 1, i.max(j) + 1));
                }
                min_root = min_root.min(r);
            }
        }
    }
    let max_pi = max_pair_height(form.basis_elements(), form.basis_elements());
    Ok(Bound::Value(Rational::new(
        (c_aux as i64 + max_pi).into(),
        min_root.into(),
    )))
}

pub fn case5_bounds(inst: &TheoremInstance) -> Result<Case5> {
    case5_bounds_with(inst, compute_c_aux(inst))
}

/// Bounds for a minimal vanishing subsum containing `α₁ⁿ` and some `β_jᵐ`.
pub fn case5_bounds_with(inst: &TheoremInstance, c_aux: u64) -> Result<Case5> {
    let alpha1 = inst.alpha1();
    let pis = || inst.g_pi.groups[0].members.iter().map(|(_, pi)| pi);
    let mut const_bound = None;
    let mut lprime = BTreeMap::new();
    for (j, group) in inst.h_psi.groups.iter().enumerate() {
        if h(&group.root) == 0 {
            if const_bound.is_none() {
                let h_alpha = h(alpha1);
                if h_alpha == 0 {
                    return Err(Error::Hypothesis("α₁ constant".into()));
                }
                let max_all = max_pair_height(pis(), inst.h_psi.basis_elements());
                const_bound = Some(Rational::new((c_aux as i64 + max_all).into(), h_alpha.into()));
            }
        } else {
            let psis = group.members.iter().map(|(_, psi)| psi);
            let l = c_aux + max_pair_height(pis(), psis) as u64;
            lprime.insert(j + 1, effective_lprime(alpha1, &group.root, l)?);
        }
    }
    Ok(Case5 { const_bound, lprime })
}

/// Largest nonnegative integer root of any `P_{ig}` or `Q_{jh}`, or 0.
pub fn c0_initial(inst: &TheoremInstance) -> u64 {
    inst.g_pi
        .groups
        .iter()
        .chain(&inst.h_psi.groups)
        .flat_map(|g| g.members.iter().map(|(p, _)| p))
        .filter_map(largest_nonneg_integer_root)
        .max()
        .unwrap_or(0)
}

fn largest_nonneg_integer_root(p: &Poly) -> Option<u64> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let fac = factor(p).ok()?;
    fac.factors
        .iter()
        .filter(|(f, _)| f.degree() == Some(1))
        .filter_map(|(f, _)| {
            let r = -f.coeff(0) / f.coeff(1);
            (r.is_integer() && !r.is_negative())
                .then(|| u64::try_from(r.to_integer()).ok())
                .flatten()
        })
        .max()
}

/// Floor of a bound as an index cap, clamped at 0.
pub fn floor_nonneg(r: &Rational) -> u64 {
    if r.is_negative() || r.is_zero() {
        0
    } else {
        u64::try_from(r.floor().to_integer()).unwrap_or(u64::MAX)
    }
}
