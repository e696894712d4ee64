//! Closed points of the projective line and per-point valuation profiles.
//!
//! A finite place is a monic square-free polynomial `q(t)`. It stands for
//! the whole cluster of conjugate roots of `q`; nothing here factors over
//! the rationals, so a cluster may hold several Galois orbits as long as
//! every form under study vanishes to the same order on all of them.

use std::fmt;

use super::form::BinaryForm;
use super::poly::UniPoly;
use super::ExactError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    /// The point `s = 0`.
    Infinity,
    Finite {
        q: UniPoly,
        /// Set when `q` is known to be irreducible (currently: linear).
        irreducible: bool,
    },
}

impl Place {
    /// Wraps a square-free polynomial of positive degree, made monic.
    pub fn finite(q: UniPoly) -> Self {
        let q = q.monic();
        assert!(
            !q.is_constant(),
            "a finite place needs a non-constant polynomial"
        );
        let irreducible = q.degree().finite() == Some(1);
        Place::Finite { q, irreducible }
    }

    /// The rational point `t = a`.
    pub fn rational_point(a: super::rational::Rational) -> Self {
        Self::finite(UniPoly::from_coeffs(vec![-a, super::rational::one()]))
    }

    pub fn degree(&self) -> u32 {
        match self {
            Place::Infinity => 1,
            Place::Finite { q, .. } => q.degree().finite().unwrap_or(0) as u32,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "infinity"),
            Place::Finite { q, .. } => write!(f, "{q}"),
        }
    }
}

impl std::str::FromStr for Place {
    type Err = super::parse::ParseError;

    /// Accepts `infinity` or a polynomial literal in `t`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "infinity" {
            return Ok(Place::Infinity);
        }
        let q = super::parse::parse_unipoly(s)?;
        if q.is_constant() || !q.is_squarefree() {
            return Err(super::parse::ParseError {
                column: 1,
                message: format!("{s:?} is not a place"),
            });
        }
        Ok(Place::finite(q))
    }
}

impl serde::Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Place {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = <String as serde::Deserialize>::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Order of vanishing. The zero form vanishes to infinite order everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn at_least(self, k: u32) -> bool {
        match self {
            Valuation::Finite(v) => v >= k,
            Valuation::Infinite => true,
        }
    }

    pub fn is(self, k: u32) -> bool {
        self == Valuation::Finite(k)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// One place together with the valuation of every input form there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileEntry {
    pub place: Place,
    pub valuations: Vec<Valuation>,
}

struct Cluster {
    q: UniPoly,
    vals: Vec<u32>,
}

/// Splits the zero locus of the nonzero inputs into places on which each
/// form has constant valuation.
///
/// Works by gcd refinement over the square-free decompositions of the
/// dehomogenized forms: a cluster is split by `gcd(cluster, g)` whenever a
/// square-free factor `g` of some form meets it partially. Infinity comes
/// first, finite clusters follow in ascending polynomial order.
pub fn place_profile(forms: &[BinaryForm]) -> Result<Vec<ProfileEntry>, ExactError> {
    if forms.iter().all(BinaryForm::is_zero) {
        return Err(ExactError::IndeterminateProfile);
    }
    let n = forms.len();
    let mut clusters: Vec<Cluster> = Vec::new();
    for (j, form) in forms.iter().enumerate() {
        if form.is_zero() {
            continue;
        }
        for (g, mult) in form.dehomogenize().squarefree_decomposition() {
            let mut rest = g;
            let mut refined = Vec::with_capacity(clusters.len() + 1);
            for c in clusters.drain(..) {
                if rest.is_constant() {
                    refined.push(c);
                    continue;
                }
                let h = c.q.gcd(&rest);
                if h.is_constant() {
                    refined.push(c);
                    continue;
                }
                rest = rest.exact_div(&h).expect("gcd divides");
                let outside = c.q.exact_div(&h).expect("gcd divides");
                let mut inside_vals = c.vals.clone();
                inside_vals[j] = mult;
                refined.push(Cluster {
                    q: h,
                    vals: inside_vals,
                });
                if !outside.is_constant() {
                    refined.push(Cluster {
                        q: outside,
                        vals: c.vals,
                    });
                }
            }
            if !rest.is_constant() {
                let mut vals = vec![0; n];
                vals[j] = mult;
                refined.push(Cluster {
                    q: rest.monic(),
                    vals,
                });
            }
            clusters = refined;
        }
    }

    let lift = |vals: &[u32]| -> Vec<Valuation> {
        forms
            .iter()
            .zip(vals)
            .map(|(f, &v)| {
                if f.is_zero() {
                    Valuation::Infinite
                } else {
                    Valuation::Finite(v)
                }
            })
            .collect()
    };

    let mut out = Vec::with_capacity(clusters.len() + 1);
    let at_infinity: Vec<Valuation> = forms
        .iter()
        .map(|f| f.valuation(&Place::Infinity))
        .collect();
    let vanishes_at_infinity = forms
        .iter()
        .zip(&at_infinity)
        .any(|(f, v)| !f.is_zero() && *v != Valuation::Finite(0));
    if vanishes_at_infinity {
        out.push(ProfileEntry {
            place: Place::Infinity,
            valuations: at_infinity,
        });
    }
    clusters.sort_by(|a, b| a.q.cmp(&b.q));
    out.extend(clusters.into_iter().map(|c| ProfileEntry {
        valuations: lift(&c.vals),
        place: Place::finite(c.q),
    }));
    Ok(out)
}
