//! Valuations, divisors and heights on ℚ(x) viewed inside ℂ(x).
//!
//! A finite place is a monic ℚ-irreducible polynomial `p`; it stands for the
//! `deg p` conjugate points of ℂ where `p` vanishes, all of which give the
//! same valuation to an element of ℚ(x). Every count below (divisor degree,
//! height, `|S|`) is weighted by `deg p` so it equals the corresponding count
//! over ℂ(x).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyalg::{factor, is_irreducible, Poly, RationalFunction};

/// Genus of ℚ(x); kept symbolic so genus-dependent formulas read as stated.
pub const GENUS: u64 = 0;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(Poly),
    Infinite,
}

impl Place {
    /// Finite place for a monic irreducible polynomial.
    pub fn finite(p: Poly) -> Result<Place> {
        if p.is_constant() || !is_irreducible(&p) {
            let shown = match factor(&p) {
                Ok(f) => f
                    .factors
                    .iter()
                    .map(|(q, e)| if *e == 1 { format!("({q})") } else { format!("({q})^{e}") })
                    .collect::<Vec<_>>()
                    .join(" "),
                Err(_) => "0".to_string(),
            };
            return Err(Error::ReduciblePlace(shown));
        }
        Ok(Place::Finite(p.monic()))
    }

    /// Number of ℂ-points the place stands for.
    pub fn degree(&self) -> u64 {
        match self {
            Place::Finite(p) => p.deg() as u64,
            Place::Infinite => 1,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinite)
    }

    /// Parses `inf` or a polynomial expression (made monic, must be
    /// irreducible).
    pub fn parse(src: &str) -> Result<Place> {
        let t = src.trim();
        if t == "inf" || t == "∞" {
            return Ok(Place::Infinite);
        }
        Place::finite(crate::expr::parse_poly(t)?)
    }
}

/// Finite places by (degree, coefficients); the infinite place last.
impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(a), Place::Finite(b)) => a.cmp(b),
            (Place::Finite(_), Place::Infinite) => Ordering::Less,
            (Place::Infinite, Place::Finite(_)) => Ordering::Greater,
            (Place::Infinite, Place::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Place({self})")
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Place::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// An integer or +∞. Only ν(0) is infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtInt {
    Finite(i64),
    Infinity,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtInt::Infinity
    }

    /// `self − rhs`; ∞ − finite is ∞, anything − ∞ is an error.
    pub fn checked_sub(self, rhs: ExtInt) -> Result<ExtInt> {
        match (self, rhs) {
            (_, ExtInt::Infinity) => Err(Error::InfinityMinusInfinity),
            (ExtInt::Infinity, _) => Ok(ExtInt::Infinity),
            (ExtInt::Finite(a), ExtInt::Finite(b)) => Ok(ExtInt::Finite(a - b)),
        }
    }
}

impl Add for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
            _ => ExtInt::Infinity,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::Infinity => write!(f, "inf"),
        }
    }
}

/// ν_place(f); ν(0) = ∞.
pub fn valuation(place: &Place, f: &RationalFunction) -> ExtInt {
    if f.is_zero() {
        return ExtInt::Infinity;
    }
    let v = match place {
        Place::Infinite => f.den().deg() as i64 - f.num().deg() as i64,
        // num and den are coprime, so at most one of them is divisible.
        Place::Finite(p) => {
            let up = f.num().multiplicity(p) as i64;
            if up > 0 {
                up
            } else {
                -(f.den().multiplicity(p) as i64)
            }
        }
    };
    ExtInt::Finite(v)
}

/// Finite valuation of a nonzero element.
pub(crate) fn val(place: &Place, f: &RationalFunction) -> i64 {
    valuation(place, f)
        .finite()
        .expect("valuation of a nonzero element")
}

/// Place ↦ nonzero exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    entries: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn from_entries(entries: impl IntoIterator<Item = (Place, i64)>) -> Divisor {
        let mut d = Divisor::default();
        for (p, e) in entries {
            d.add_at(p, e);
        }
        d
    }

    fn add_at(&mut self, place: Place, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.entries.entry(place.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.entries.remove(&place);
        }
    }

    pub fn get(&self, place: &Place) -> i64 {
        self.entries.get(place).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.entries.iter().map(|(p, &e)| (p, e))
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.entries.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Σ deg(place) · exponent; zero for every principal divisor.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(p, e)| p.degree() as i64 * e).sum()
    }

    /// Σ deg(place) · max(0, exponent).
    pub fn height(&self) -> u64 {
        self.iter()
            .map(|(p, e)| p.degree() * e.max(0) as u64)
            .sum()
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: i64, other: &Divisor, b: i64) -> Divisor {
        let mut out = Divisor::default();
        for (p, e) in self.iter() {
            out.add_at(p.clone(), a * e);
        }
        for (p, e) in other.iter() {
            out.add_at(p.clone(), b * e);
        }
        out
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(p, e)| format!("{p}:{e}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Full divisor of a nonzero element, including the infinite place.
pub fn divisor(f: &RationalFunction) -> Result<Divisor> {
    if f.is_zero() {
        return Err(Error::ZeroHasNoDivisor);
    }
    let mut d = Divisor::default();
    for (p, e) in factor(f.num())?.factors {
        d.add_at(Place::Finite(p), e as i64);
    }
    for (p, e) in factor(f.den())?.factors {
        d.add_at(Place::Finite(p), -(e as i64));
    }
    d.add_at(Place::Infinite, f.den().deg() as i64 - f.num().deg() as i64);
    Ok(d)
}

/// H(f) = max(deg num, deg den); H(0) = ∞.
pub fn height(f: &RationalFunction) -> ExtInt {
    if f.is_zero() {
        return ExtInt::Infinity;
    }
    ExtInt::Finite(f.max_degree() as i64)
}

/// Height of a nonzero element as an integer.
pub(crate) fn h(f: &RationalFunction) -> i64 {
    assert!(!f.is_zero(), "height of zero is infinite");
    f.max_degree() as i64
}

/// A finite set of places.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PlaceSet {
    places: BTreeSet<Place>,
}

impl PlaceSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: Place) -> bool {
        self.places.insert(p)
    }

    pub fn contains(&self, p: &Place) -> bool {
        self.places.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Place> {
        self.places.iter()
    }

    /// Number of ℚ-places.
    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }

    /// Number of ℂ-places represented, Σ deg(place).
    pub fn complex_size(&self) -> u64 {
        self.places.iter().map(Place::degree).sum()
    }

    pub fn extend(&mut self, other: &PlaceSet) {
        self.places.extend(other.places.iter().cloned());
    }
}

impl FromIterator<Place> for PlaceSet {
    fn from_iter<I: IntoIterator<Item = Place>>(iter: I) -> Self {
        PlaceSet {
            places: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for PlaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.places.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn is_s_unit(f: &RationalFunction, s: &PlaceSet) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroArgument("is_s_unit"));
    }
    Ok(divisor(f)?.support().all(|p| s.contains(p)))
}

/// Smallest set making every element of `fs` an S-unit, joined with `extra`.
pub fn minimal_s(fs: &[RationalFunction], extra: &PlaceSet) -> Result<PlaceSet> {
    let mut out = extra.clone();
    for f in fs {
        if f.is_zero() {
            return Err(Error::ZeroArgument("minimal_s"));
        }
        for p in divisor(f)?.support() {
            out.insert(p.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn fin(s: &str) -> Place {
        Place::parse(s).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&fin("x"), &parse("x^3/(x-1)").unwrap()), ExtInt::Finite(3));
        assert_eq!(valuation(&Place::Infinite, &parse("(x^2+1)/x^5").unwrap()), ExtInt::Finite(3));
        assert_eq!(valuation(&fin("x-1"), &RationalFunction::zero()), ExtInt::Infinity);
        assert_eq!(valuation(&fin("x-1"), &parse("x^3/(x-1)").unwrap()), ExtInt::Finite(-1));
    }

    #[test]
    fn divisor_examples() {
        let d = divisor(&parse("(x^2+1)/x^5").unwrap()).unwrap();
        assert_eq!(d.get(&fin("x^2+1")), 1);
        assert_eq!(d.get(&fin("x")), -5);
        assert_eq!(d.get(&Place::Infinite), 3);
        assert_eq!(d.len(), 3);
        assert_eq!(d.degree(), 0);
        assert_eq!(d.to_string(), "x:-5 x^2+1:1 inf:3");

        assert!(divisor(&parse("7").unwrap()).unwrap().is_empty());
        let d = divisor(&parse("x-1").unwrap()).unwrap();
        assert_eq!(d.to_string(), "x-1:1 inf:-1");
        assert_eq!(divisor(&RationalFunction::zero()), Err(Error::ZeroHasNoDivisor));
    }

    #[test]
    fn height_examples() {
        let f = parse("(x^2+1)/x^5").unwrap();
        assert_eq!(height(&f), ExtInt::Finite(5));
        assert_eq!(divisor(&f).unwrap().height(), 5);
        assert_eq!(height(&parse("1/3").unwrap()), ExtInt::Finite(0));
        assert_eq!(height(&parse("(x+1)^3").unwrap()), ExtInt::Finite(3));
        assert_eq!(height(&RationalFunction::zero()), ExtInt::Infinity);
    }

    #[test]
    fn s_unit_examples() {
        let s: PlaceSet = [fin("x"), fin("x+1"), Place::Infinite].into_iter().collect();
        assert!(is_s_unit(&parse("x/(x+1)").unwrap(), &s).unwrap());
        let s2: PlaceSet = [fin("x"), Place::Infinite].into_iter().collect();
        assert!(!is_s_unit(&parse("x-2").unwrap(), &s2).unwrap());
        assert!(is_s_unit(&parse("5").unwrap(), &PlaceSet::new()).unwrap());
        assert!(is_s_unit(&RationalFunction::zero(), &s).is_err());
    }

    #[test]
    fn minimal_s_examples() {
        let extra: PlaceSet = [Place::Infinite].into_iter().collect();
        let s = minimal_s(&[parse("x").unwrap(), parse("x+1").unwrap()], &extra).unwrap();
        assert_eq!(s, [fin("x"), fin("x+1"), Place::Infinite].into_iter().collect());
        assert!(minimal_s(&[parse("1").unwrap()], &PlaceSet::new()).unwrap().is_empty());
        let extra: PlaceSet = [fin("x-1")].into_iter().collect();
        let s = minimal_s(&[parse("(x^2+1)/x").unwrap()], &extra).unwrap();
        assert_eq!(s.to_string(), "{x-1, x, x^2+1, inf}");
        assert_eq!(s.complex_size(), 5);
        assert!(minimal_s(&[RationalFunction::zero()], &extra).is_err());
    }

    #[test]
    fn place_parsing() {
        assert_eq!(Place::parse("inf").unwrap(), Place::Infinite);
        assert_eq!(Place::parse("2*x+2").unwrap(), fin("x+1"));
        let err = Place::parse("x^2-1").unwrap_err();
        assert_eq!(err.to_string(), "place polynomial is reducible, factors: (x-1) (x+1)");
        assert!(Place::parse("3").is_err());
    }

    #[test]
    fn ext_int_arithmetic() {
        assert_eq!(ExtInt::Finite(2) + ExtInt::Infinity, ExtInt::Infinity);
        assert!(ExtInt::Finite(5) < ExtInt::Infinity);
        assert_eq!(ExtInt::Infinity.checked_sub(ExtInt::Finite(3)), Ok(ExtInt::Infinity));
        assert!(ExtInt::Infinity.checked_sub(ExtInt::Infinity).is_err());
        assert_eq!(ExtInt::Finite(2).checked_sub(ExtInt::Finite(5)), Ok(ExtInt::Finite(-3)));
    }
}
