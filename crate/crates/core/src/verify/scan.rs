//! Grid scans of the valuation gap `μ(aGₙ − bHₘ) − μ(Gₙ)`.

use std::fmt::{self, Write as _};

use serde_json::{json, Value};

use crate::effective::{c0_initial, EffectiveConstants, Hypothesis, Theorem, TheoremInstance};
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::places::{valuation, ExtInt, Place};
use crate::polyalg::RationalFunction;

/// `μ(aGₙ − bHₘ) − μ(Gₙ)`. `PosInf` marks a zero of the difference and
/// `NegInf` a zero of `Gₙ` alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gap {
    NegInf,
    Finite(i64),
    PosInf,
}

impl Gap {
    pub fn finite(self) -> Option<i64> {
        match self {
            Gap::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gap::NegInf => write!(f, "-inf"),
            Gap::Finite(v) => write!(f, "{v}"),
            Gap::PosInf => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanCell {
    pub n: u64,
    pub m: u64,
    pub mu_diff: ExtInt,
    pub mu_gn: ExtInt,
    pub gap: Gap,
}

/// Which cells the bound is claimed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionRule {
    /// `min(n, m) > threshold`.
    MinAbove,
    /// `max(n, m) > threshold`.
    MaxAbove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Region {
    pub n_range: (u64, u64),
    pub m_range: (u64, u64),
    pub threshold: u64,
    pub rule: RegionRule,
}

impl Region {
    pub fn contains(&self, n: u64, m: u64) -> bool {
        match self.rule {
            RegionRule::MinAbove => n.min(m) > self.threshold,
            RegionRule::MaxAbove => n.max(m) > self.threshold,
        }
    }

    fn rule_text(&self) -> String {
        match self.rule {
            RegionRule::MinAbove => format!("min(n,m) > {}", self.threshold),
            RegionRule::MaxAbove => format!("max(n,m) > {}", self.threshold),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub theorem: Theorem,
    pub region: Region,
    pub hypotheses: Vec<Hypothesis>,
    /// Row-major: `n` outer, `m` inner.
    pub cells: Vec<ScanCell>,
    /// `aGₙ = bHₘ`.
    pub zeros: Vec<(u64, u64)>,
    /// Zeros with `min(n, m)` above the threshold.
    pub anomalies: Vec<(u64, u64)>,
    /// Cells where `μ(aGₙ − bHₘ) < min(μ(aGₙ), μ(bHₘ))`.
    pub lower_bound_violations: Vec<(u64, u64)>,
    /// Cells where `μ(aGₙ) ≠ μ(bHₘ)` but `μ(aGₙ − bHₘ)` is not the minimum.
    pub strict_triangle_violations: Vec<(u64, u64)>,
    /// Largest finite gap inside the region; an observed value, not the
    /// constant of the proof.
    pub empirical_c: Option<i64>,
}

impl ScanReport {
    pub fn cell(&self, n: u64, m: u64) -> Option<&ScanCell> {
        self.cells.iter().find(|c| c.n == n && c.m == m)
    }

    /// Cells inside the region whose gap exceeds `c`.
    pub fn exceeding(&self, c: i64) -> Vec<(u64, u64)> {
        self.cells
            .iter()
            .filter(|cell| self.region.contains(cell.n, cell.m))
            .filter(|cell| cell.gap > Gap::Finite(c))
            .map(|cell| (cell.n, cell.m))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,mu_diff,mu_Gn,gap\n");
        for c in &self.cells {
            writeln!(out, "{},{},{},{},{}", c.n, c.m, c.mu_diff, c.mu_gn, c.gap).expect("string write");
        }
        out
    }

    pub fn summary_json(&self, constants: Option<&EffectiveConstants>) -> Value {
        let pairs = |v: &[(u64, u64)]| -> Value { v.iter().map(|&(n, m)| json!([n, m])).collect() };
        let mut out = json!({
            "theorem": match self.theorem { Theorem::One => 1, Theorem::Two => 2 },
            "region": {
                "n": [self.region.n_range.0, self.region.n_range.1],
                "m": [self.region.m_range.0, self.region.m_range.1],
                "threshold": self.region.threshold,
                "rule": self.region.rule_text(),
            },
            "empirical_C": self.empirical_c,
            "cells": self.cells.len(),
            "zeros": pairs(&self.zeros),
            "anomalies": pairs(&self.anomalies),
            "lower_bound_violations": pairs(&self.lower_bound_violations),
            "strict_triangle_violations": pairs(&self.strict_triangle_violations),
            "hypotheses": self.hypotheses.iter().map(|h| json!({
                "hypothesis": h.label,
                "holds": h.holds,
            })).collect::<Value>(),
        });
        if let Some(c) = constants {
            out["constants"] = c.to_json();
        }
        out
    }
}

/// Precomputed `Gₙ`, `aGₙ`, `bHₘ` for a block of indices.
struct Values {
    gn: Vec<RationalFunction>,
    agn: Vec<RationalFunction>,
    bhm: Vec<RationalFunction>,
}

fn values(inst: &TheoremInstance, ns: (u64, u64), ms: (u64, u64), exec: Execution) -> Values {
    let gn = inst.g().evaluate_range(ns.0, ns.1, exec);
    let agn = exec.map(&gn, |v| inst.a() * v);
    let hm = inst.h().evaluate_range(ms.0, ms.1, exec);
    let bhm = exec.map(&hm, |v| inst.b() * v);
    Values { gn, agn, bhm }
}

fn cell(mu: &Place, n: u64, m: u64, gn: &RationalFunction, agn: &RationalFunction, bhm: &RationalFunction) -> (ScanCell, bool, bool) {
    let diff = agn - bhm;
    let mu_diff = valuation(mu, &diff);
    let mu_gn = valuation(mu, gn);
    let gap = match (mu_diff, mu_gn) {
        (ExtInt::Infinity, _) => Gap::PosInf,
        (ExtInt::Finite(d), ExtInt::Finite(g)) => Gap::Finite(d - g),
        (ExtInt::Finite(_), ExtInt::Infinity) => Gap::NegInf,
    };
    let (va, vb) = (valuation(mu, agn), valuation(mu, bhm));
    let lower_ok = mu_diff >= va.min(vb);
    let strict_ok = va == vb || mu_diff == va.min(vb);
    (ScanCell { n, m, mu_diff, mu_gn, gap }, lower_ok, strict_ok)
}

/// Scans every `(n, m)` in the two inclusive ranges. No hypothesis check.
pub fn scan_region(
    inst: &TheoremInstance,
    theorem: Theorem,
    n_range: (u64, u64),
    m_range: (u64, u64),
    exec: Execution,
) -> ScanReport {
    let threshold = c0_initial(inst);
    let region = Region {
        n_range,
        m_range,
        threshold,
        rule: match theorem {
            Theorem::One => RegionRule::MinAbove,
            Theorem::Two => RegionRule::MaxAbove,
        },
    };
    let vals = values(inst, n_range, m_range, exec);
    let idx: Vec<(u64, u64)> = (n_range.0..=n_range.1)
        .flat_map(|n| (m_range.0..=m_range.1).map(move |m| (n, m)))
        .collect();
    let computed = exec.map(&idx, |&(n, m)| {
        let i = (n - n_range.0) as usize;
        let j = (m - m_range.0) as usize;
        cell(inst.mu(), n, m, &vals.gn[i], &vals.agn[i], &vals.bhm[j])
    });

    let mut report = ScanReport {
        theorem,
        region,
        hypotheses: inst.hypotheses(theorem),
        cells: Vec::with_capacity(computed.len()),
        zeros: Vec::new(),
        anomalies: Vec::new(),
        lower_bound_violations: Vec::new(),
        strict_triangle_violations: Vec::new(),
        empirical_c: None,
    };
    for (c, lower_ok, strict_ok) in computed {
        let at = (c.n, c.m);
        if c.gap == Gap::PosInf {
            report.zeros.push(at);
            if c.n.min(c.m) > threshold {
                report.anomalies.push(at);
            }
        }
        if !lower_ok {
            report.lower_bound_violations.push(at);
        }
        if !strict_ok {
            report.strict_triangle_violations.push(at);
        }
        if let (Some(g), true) = (c.gap.finite(), region.contains(c.n, c.m)) {
            report.empirical_c = Some(report.empirical_c.map_or(g, |e| e.max(g)));
        }
        report.cells.push(c);
    }
    report
}

/// Both indices large: the grid `1..=n_max × 1..=m_max`, bound claimed on
/// `min(n, m) > c₀`.
pub fn scan_theorem1(inst: &TheoremInstance, n_max: u64, m_max: u64) -> Result<ScanReport> {
    scan_theorem1_with(inst, n_max, m_max, Execution::default())
}

pub fn scan_theorem1_with(inst: &TheoremInstance, n_max: u64, m_max: u64, exec: Execution) -> Result<ScanReport> {
    inst.require(Theorem::One)?;
    Ok(scan_region(inst, Theorem::One, (1, n_max), (1, m_max), exec))
}

/// One index large: same grid, bound claimed on `max(n, m) > c₀`, which
/// takes in the strips where one index stays small.
pub fn scan_theorem2(inst: &TheoremInstance, n_max: u64, m_max: u64) -> Result<ScanReport> {
    scan_theorem2_with(inst, n_max, m_max, Execution::default())
}

pub fn scan_theorem2_with(inst: &TheoremInstance, n_max: u64, m_max: u64, exec: Execution) -> Result<ScanReport> {
    inst.require(Theorem::Two)?;
    Ok(scan_region(inst, Theorem::Two, (1, n_max), (1, m_max), exec))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strip {
    /// `m` held at the given value, `n = 1..=len`.
    FixedM(u64),
    /// `n` held at the given value, `m = 1..=len`.
    FixedN(u64),
}

/// One line of the grid with the other index fixed.
pub fn scan_strip(inst: &TheoremInstance, strip: Strip, len: u64, exec: Execution) -> Result<ScanReport> {
    inst.require(Theorem::Two)?;
    Ok(match strip {
        Strip::FixedM(m) => scan_region(inst, Theorem::Two, (1, len), (m, m), exec),
        Strip::FixedN(n) => scan_region(inst, Theorem::Two, (n, n), (1, len), exec),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub empirical_c: i64,
    /// Cells checked (nonzero difference, inside the region).
    pub checked: usize,
    /// Cells where `deg(aGₙ − bHₘ) < deg Gₙ − C`.
    pub violations: Vec<(u64, u64)>,
    /// Cells where the degree and `−ν_∞` disagree.
    pub degree_mismatches: Vec<(u64, u64)>,
    pub holds: bool,
}

/// Degree form of the bound for polynomial data at the infinite place:
/// `deg(aGₙ − bHₘ) ≥ deg Gₙ − C` with `C` the observed constant.
pub fn check_corollary_degrees(
    inst: &TheoremInstance,
    n_max: u64,
    m_max: u64,
    exec: Execution,
) -> Result<CorollaryReport> {
    if !inst.mu().is_infinite() {
        return Err(Error::Precondition("the degree check needs μ = inf".into()));
    }
    let mut data = vec![("a", inst.a()), ("b", inst.b())];
    for (name, rec) in [("G", inst.g()), ("H", inst.h())] {
        for t in rec.terms() {
            data.push((name, &t.root));
            data.extend(t.coeff.coeffs().iter().map(|c| (name, c)));
        }
    }
    if let Some((name, f)) = data.iter().find(|(_, f)| !f.is_polynomial()) {
        return Err(Error::NotPolynomial(format!("{name}: {f}")));
    }
    let report = scan_theorem1_with(inst, n_max, m_max, exec)?;
    let c = report.empirical_c.unwrap_or(0);
    let vals = values(inst, (1, n_max), (1, m_max), exec);
    let idx: Vec<&ScanCell> = report
        .cells
        .iter()
        .filter(|cell| report.region.contains(cell.n, cell.m) && cell.gap != Gap::PosInf)
        .collect();
    let results = exec.map(&idx, |cell| {
        let i = (cell.n - 1) as usize;
        let diff = &vals.agn[i] - &vals.bhm[(cell.m - 1) as usize];
        let deg_diff = diff.num().deg() as i64;
        let deg_g = vals.gn[i].num().degree().map(|d| d as i64);
        let ok = deg_g.is_none_or(|dg| deg_diff >= dg - c);
        let consistent = ExtInt::Finite(-deg_diff) == cell.mu_diff
            && deg_g.map_or(cell.mu_gn.is_infinite(), |dg| ExtInt::Finite(-dg) == cell.mu_gn);
        ((cell.n, cell.m), ok, consistent)
    });
    let violations: Vec<_> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    let degree_mismatches: Vec<_> = results.iter().filter(|r| !r.2).map(|r| r.0).collect();
    Ok(CorollaryReport {
        empirical_c: c,
        checked: results.len(),
        holds: violations.is_empty() && degree_mismatches.is_empty() && report.anomalies.is_empty(),
        violations,
        degree_mismatches,
    })
}

/// The summands `a·P_{ig}(n) π_{ig} αᵢⁿ` followed by `−b·Q_{jh}(m) ψ_{jh} β_jᵐ`,
/// group-major; they add up to `aGₙ − bHₘ`.
pub fn summand_values(inst: &TheoremInstance, n: u64, m: u64) -> Vec<RationalFunction> {
    let g = inst.g_pi().summands(n).into_iter().map(|s| inst.a() * &s);
    let h = inst.h_psi().summands(m).into_iter().map(|s| -(inst.b() * &s));
    g.chain(h).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::InstanceConfig;
    use crate::expr::parse;

    fn instance(g: &str, h: &str, extra: &str) -> TheoremInstance {
        InstanceConfig::from_json(&format!(r#"{{"G": {{"terms": {g}}}, "H": {{"terms": {h}}}{extra}}}"#))
            .unwrap()
            .build()
            .unwrap()
    }

    fn monomial() -> TheoremInstance {
        instance(r#"[{"coeff": ["1"], "root": "x"}]"#, r#"[{"coeff": ["1"], "root": "x+1"}]"#, "")
    }

    #[test]
    fn monomial_grid_small() {
        let r = scan_theorem1_with(&monomial(), 8, 8, Execution::Sequential).unwrap();
        assert_eq!(r.empirical_c, Some(1));
        for c in &r.cells {
            let expected = if c.n == c.m { 1 } else { c.n as i64 - c.n.max(c.m) as i64 };
            assert_eq!(c.gap, Gap::Finite(expected), "({}, {})", c.n, c.m);
        }
        assert!(r.zeros.is_empty());
        assert!(r.lower_bound_violations.is_empty() && r.strict_triangle_violations.is_empty());
        assert!(r.exceeding(1).is_empty());
        assert_eq!(r.exceeding(0).len(), 8);
    }

    #[test]
    fn execution_modes_agree() {
        let inst = monomial();
        let a = scan_theorem1_with(&inst, 12, 10, Execution::Sequential).unwrap();
        let b = scan_theorem1_with(&inst, 12, 10, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn dependent_instance_rejected() {
        let i = instance(r#"[{"coeff": ["1"], "root": "x"}]"#, r#"[{"coeff": ["1"], "root": "x"}]"#, r#", "b": "2""#);
        assert_eq!(
            scan_theorem1(&i, 5, 5),
            Err(Error::Hypothesis("(α₁, β₁) multiplicatively dependent".into()))
        );
        let c = instance(r#"[{"coeff": ["1"], "root": "x"}, {"coeff": ["1"], "root": "1"}]"#, r#"[{"coeff": ["1"], "root": "x+1"}]"#, "");
        assert!(scan_theorem1(&c, 3, 3).is_ok());
        let e = scan_theorem2(&c, 3, 3).unwrap_err();
        assert!(e.to_string().contains("constant characteristic root"));
    }

    #[test]
    fn zeros_are_segregated() {
        // G_n = x^n + 1, H_m = (x+1)^m: G_1 - H_1 = 0
        let i = instance(
            r#"[{"coeff": ["1"], "root": "x"}, {"coeff": ["1"], "root": "1"}]"#,
            r#"[{"coeff": ["1"], "root": "x+1"}]"#,
            "",
        );
        let r = scan_theorem1_with(&i, 4, 4, Execution::Sequential).unwrap();
        assert_eq!(r.zeros, vec![(1, 1)]);
        assert_eq!(r.anomalies, vec![(1, 1)]);
        assert_eq!(r.cell(1, 1).unwrap().gap, Gap::PosInf);
        assert!(r.to_csv().contains("\n1,1,inf,-1,inf\n"));
    }

    #[test]
    fn strips() {
        let r = scan_strip(&monomial(), Strip::FixedM(2), 20, Execution::Sequential).unwrap();
        assert_eq!(r.cells.len(), 20);
        assert_eq!(r.empirical_c, Some(1));
        assert_eq!(r.cell(2, 2).unwrap().gap, Gap::Finite(1));
        let r = scan_strip(&monomial(), Strip::FixedN(1), 20, Execution::Sequential).unwrap();
        assert!(r.cells.iter().all(|c| c.gap <= Gap::Finite(1)));
    }

    #[test]
    fn corollary_degrees() {
        let r = check_corollary_degrees(&monomial(), 10, 10, Execution::Sequential).unwrap();
        assert!(r.holds);
        assert_eq!(r.empirical_c, 1);
        assert_eq!(r.checked, 100);
        let rational = instance(r#"[{"coeff": ["1/x"], "root": "x"}]"#, r#"[{"coeff": ["1"], "root": "x+1"}]"#, "");
        assert!(matches!(check_corollary_degrees(&rational, 3, 3, Execution::Sequential), Err(Error::NotPolynomial(_))));
        let finite = instance(r#"[{"coeff": ["1"], "root": "x"}]"#, r#"[{"coeff": ["1"], "root": "x+1"}]"#, r#", "mu": "x""#);
        assert!(check_corollary_degrees(&finite, 3, 3, Execution::Sequential).is_err());
    }

    #[test]
    fn summand_examples() {
        assert_eq!(summand_values(&monomial(), 1, 1), vec![parse("x").unwrap(), parse("-x-1").unwrap()]);
        let i = instance(r#"[{"coeff": ["2*x+2", "x+1"], "root": "x"}]"#, r#"[{"coeff": ["1"], "root": "x+1"}]"#, "");
        assert_eq!(summand_values(&i, 3, 0)[0], parse("5*(x+1)*x^3").unwrap());
        assert_eq!(summand_values(&i, 0, 0), vec![parse("2*x+2").unwrap(), parse("-1").unwrap()]);
    }
}
