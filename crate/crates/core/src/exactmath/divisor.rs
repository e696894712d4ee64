use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::place::Place;
use super::rational::Rational;

/// A formal Q-linear combination of places. Zero coefficients are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivisorP1 {
    terms: BTreeMap<Place, Rational>,
}

impl DivisorP1 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Place, Rational)>) -> Self {
        let mut d = Self::new();
        for (p, c) in terms {
            d.add_term(p, c);
        }
        d
    }

    /// Adds `c * place`, merging with an existing coefficient.
    pub fn add_term(&mut self, place: Place, c: Rational) {
        let entry = self
            .terms
            .entry(place.clone())
            .or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&place);
        }
    }

    pub fn coefficient(&self, place: &Place) -> Rational {
        self.terms
            .get(place)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Sum of `coefficient * deg(place)`.
    pub fn degree(&self) -> Rational {
        self.terms
            .iter()
            .map(|(p, c)| c * Rational::from_integer(p.degree().into()))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, &Rational)> {
        self.terms.iter()
    }

    /// Largest coefficient and the first place carrying it.
    pub fn max_term(&self) -> Option<(&Place, &Rational)> {
        self.terms.iter().fold(None, |best, (p, c)| match best {
            Some((_, bc)) if bc >= c => best,
            _ => Some((p, c)),
        })
    }
}

impl fmt::Display for DivisorP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| format!("{c}*[{p}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
