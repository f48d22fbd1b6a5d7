//! JSON input formats. Every expression field uses the [`crate::expr`]
//! grammar; parse errors name the offending field.

use serde::{Deserialize, Serialize};

use crate::effective::TheoremInstance;
use crate::error::{Error, Result};
use crate::expr::{self, ParseError};
use crate::places::{Place, PlaceSet};
use crate::polyalg::RationalFunction;
use crate::recurrence::{CoeffPoly, LinearRecurrence, Term};

fn field(name: &str, src: &str) -> Result<RationalFunction> {
    expr::parse(src).map_err(|e| match e {
        Error::Parse(pe) => Error::Parse(ParseError {
            message: format!("{name} = \"{src}\": {}", pe.message),
            ..pe
        }),
        other => Error::Config(format!("{name} = \"{src}\": {other}")),
    })
}

fn place_field(name: &str, src: &str) -> Result<Place> {
    Place::parse(src).map_err(|e| match e {
        Error::Parse(pe) => Error::Parse(ParseError {
            message: format!("{name} = \"{src}\": {}", pe.message),
            ..pe
        }),
        other => other,
    })
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermConfig {
    /// Index `k` holds the coefficient of `n^k`.
    pub coeff: Vec<String>,
    pub root: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecurrenceConfig {
    pub terms: Vec<TermConfig>,
}

impl RecurrenceConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn build(&self) -> Result<LinearRecurrence> {
        self.build_named("terms")
    }

    fn build_named(&self, prefix: &str) -> Result<LinearRecurrence> {
        let terms = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let coeffs = t
                    .coeff
                    .iter()
                    .enumerate()
                    .map(|(k, c)| field(&format!("{prefix}[{i}].coeff[{k}]"), c))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Term {
                    coeff: CoeffPoly::new(coeffs)?,
                    root: field(&format!("{prefix}[{i}].root"), &t.root)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LinearRecurrence::new(terms)
    }
}

fn one() -> String {
    "1".into()
}

fn infinite() -> String {
    "inf".into()
}

fn default_grid() -> (u64, u64) {
    (30, 30)
}

/// A theorem instance together with the scan grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceConfig {
    #[serde(rename = "G")]
    pub g: RecurrenceConfig,
    #[serde(rename = "H")]
    pub h: RecurrenceConfig,
    #[serde(default = "one")]
    pub a: String,
    #[serde(default = "one")]
    pub b: String,
    #[serde(default = "infinite")]
    pub mu: String,
    #[serde(default)]
    pub genus: u64,
    /// `(n_max, m_max)`.
    #[serde(default = "default_grid")]
    pub grid: (u64, u64),
}

impl InstanceConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn build(&self) -> Result<TheoremInstance> {
        TheoremInstance::new(
            self.g.build_named("G.terms")?,
            self.h.build_named("H.terms")?,
            field("a", &self.a)?,
            field("b", &self.b)?,
            place_field("mu", &self.mu)?,
            self.genus,
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitEquationConfig {
    pub units: Vec<String>,
    /// Defaults to the joint support of the units.
    #[serde(rename = "S", default)]
    pub s: Option<Vec<String>>,
    #[serde(default)]
    pub genus: u64,
}

impl UnitEquationConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn units(&self) -> Result<Vec<RationalFunction>> {
        self.units
            .iter()
            .enumerate()
            .map(|(i, u)| field(&format!("units[{i}]"), u))
            .collect()
    }

    pub fn places(&self) -> Result<Option<PlaceSet>> {
        self.s.as_ref().map(|s| place_set(s)).transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceConfig {
    pub phis: Vec<String>,
    pub r: usize,
    #[serde(rename = "S")]
    pub s: Vec<String>,
    #[serde(default)]
    pub genus: u64,
}

impl SubspaceConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn phis(&self) -> Result<Vec<RationalFunction>> {
        self.phis
            .iter()
            .enumerate()
            .map(|(i, u)| field(&format!("phis[{i}]"), u))
            .collect()
    }

    pub fn places(&self) -> Result<PlaceSet> {
        place_set(&self.s)
    }
}

fn place_set(specs: &[String]) -> Result<PlaceSet> {
    specs
        .iter()
        .enumerate()
        .map(|(i, s)| place_field(&format!("S[{i}]"), s))
        .collect()
}
