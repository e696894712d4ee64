//! Weierstrass models `y^2 = x^3 + A x + B` over the projective line and
//! the Kodaira types of their singular fibers.
//!
//! `A` and `B` are binary forms of degrees `4 chi` and `6 chi`. The residue
//! characteristic is zero everywhere, so Tate's algorithm never needs its
//! wild-ramification branches and the fiber type is a function of the
//! valuation triple `(v(A), v(B), v(Delta))` alone.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::{
    place_profile, BinaryForm, ExactError, Mat2, Place, Rational, UniPoly, Valuation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeierstrassError {
    #[error("A and B are both identically zero")]
    BothZero,
    #[error("generically singular model: the discriminant vanishes identically")]
    GenericallySingular,
    #[error("chi must be positive")]
    ZeroChi,
    #[error("{form} has degree {got}, expected {expected} for chi = {chi}")]
    FormDegree {
        form: &'static str,
        expected: u32,
        got: u32,
        chi: u32,
    },
    #[error("model is not minimal at {place}; run minimalize first")]
    NonMinimal { place: Place },
    #[error("inconsistent valuation triple (v(A), v(B), v(Delta)) = ({0}, {1}, {2})")]
    InconsistentTriple(Valuation, Valuation, u32),
    #[error("model is a twist of a constant family below the elliptic-surface threshold")]
    BelowThreshold,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Kodaira fiber types. `I(0)` is a smooth fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaType {
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Additive (potentially good) reduction types.
    pub fn is_additive(self) -> bool {
        !matches!(self, KodairaType::I(_))
    }

    pub fn is_smooth(self) -> bool {
        self == KodairaType::I(0)
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

impl FromStr for KodairaType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let fixed = match s {
            "II" => Some(KodairaType::II),
            "III" => Some(KodairaType::III),
            "IV" => Some(KodairaType::IV),
            "IV*" => Some(KodairaType::IVStar),
            "III*" => Some(KodairaType::IIIStar),
            "II*" => Some(KodairaType::IIStar),
            _ => None,
        };
        if let Some(t) = fixed {
            return Ok(t);
        }
        let bad = || format!("unknown Kodaira type {s:?}");
        let rest = s.strip_prefix('I').ok_or_else(bad)?;
        let (digits, star) = match rest.strip_suffix('*') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let n: u32 = digits.parse().map_err(|_| bad())?;
        Ok(if star {
            KodairaType::IStar(n)
        } else {
            KodairaType::I(n)
        })
    }
}

impl Serialize for KodairaType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for KodairaType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Result of looking up a valuation triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberClass {
    Type(KodairaType),
    NonMinimal,
}

/// Kodaira type of the fiber with valuations `(v(A), v(B), v(Delta))`.
pub fn classify_fiber(
    va: Valuation,
    vb: Valuation,
    vd: u32,
) -> Result<FiberClass, WeierstrassError> {
    use FiberClass::*;
    use KodairaType::*;
    let class = if vd == 0 {
        Type(I(0))
    } else if va.at_least(4) && vb.at_least(6) {
        NonMinimal
    } else if va.is(0) {
        Type(I(vd))
    } else if va.at_least(1) && vb.is(1) && vd == 2 {
        Type(II)
    } else if va.is(1) && vb.at_least(2) && vd == 3 {
        Type(III)
    } else if va.at_least(2) && vb.is(2) && vd == 4 {
        Type(IV)
    } else if va.at_least(2) && vb.at_least(3) && vd == 6 {
        Type(IStar(0))
    } else if va.is(2) && vb.is(3) && vd > 6 {
        Type(IStar(vd - 6))
    } else if va.at_least(3) && vb.is(4) && vd == 8 {
        Type(IVStar)
    } else if va.is(3) && vb.at_least(5) && vd == 9 {
        Type(IIIStar)
    } else if va.at_least(4) && vb.is(5) && vd == 10 {
        Type(IIStar)
    } else {
        return Err(WeierstrassError::InconsistentTriple(va, vb, vd));
    };
    Ok(class)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    a: BinaryForm,
    b: BinaryForm,
    chi: u32,
}

impl WeierstrassModel {
    pub fn new(a: BinaryForm, b: BinaryForm, chi: u32) -> Result<Self, WeierstrassError> {
        if chi == 0 {
            return Err(WeierstrassError::ZeroChi);
        }
        for (form, f, k) in [("A", &a, 4), ("B", &b, 6)] {
            if f.degree() != k * chi {
                return Err(WeierstrassError::FormDegree {
                    form,
                    expected: k * chi,
                    got: f.degree(),
                    chi,
                });
            }
        }
        if a.is_zero() && b.is_zero() {
            return Err(WeierstrassError::BothZero);
        }
        let model = WeierstrassModel { a, b, chi };
        discriminant(&model)?;
        Ok(model)
    }

    /// Homogenizes `A(t)`, `B(t)` to degrees `4 chi`, `6 chi`.
    pub fn from_polys(a: &UniPoly, b: &UniPoly, chi: u32) -> Result<Self, WeierstrassError> {
        if chi == 0 {
            return Err(WeierstrassError::ZeroChi);
        }
        let a = BinaryForm::homogenize(a, 4 * chi)?;
        let b = BinaryForm::homogenize(b, 6 * chi)?;
        Self::new(a, b, chi)
    }

    pub fn a(&self) -> &BinaryForm {
        &self.a
    }

    pub fn b(&self) -> &BinaryForm {
        &self.b
    }

    pub fn chi(&self) -> u32 {
        self.chi
    }

    pub fn mobius(&self, g: &Mat2) -> Result<Self, WeierstrassError> {
        Self::new(self.a.mobius(g)?, self.b.mobius(g)?, self.chi)
    }

    /// `(lambda^4 A, lambda^6 B)`, the same surface.
    pub fn rescale(&self, lambda: &Rational) -> Result<Self, WeierstrassError> {
        let l2 = lambda * lambda;
        let l4 = &l2 * &l2;
        let l6 = &l4 * &l2;
        Self::new(self.a.scale(&l4), self.b.scale(&l6), self.chi)
    }
}

/// `4 A^3 + 27 B^2`, a form of degree `12 chi`.
pub fn discriminant(model: &WeierstrassModel) -> Result<BinaryForm, WeierstrassError> {
    let four = Rational::from_integer(4.into());
    let twenty_seven = Rational::from_integer(27.into());
    let delta = model
        .a
        .pow(3)
        .scale(&four)
        .add(&model.b.pow(2).scale(&twenty_seven))?;
    if delta.is_zero() {
        return Err(WeierstrassError::GenericallySingular);
    }
    Ok(delta)
}

/// One classified fiber (or cluster of conjugate fibers).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberEntry {
    pub kind: KodairaType,
    pub multiplicity: u32,
    pub place_degree: u32,
    /// Where the fiber sits, when known. Configurations read from files
    /// carry no positions.
    pub place: Option<Place>,
    /// `(v(A), v(B), v(Delta))` for fibers that came from a model.
    pub valuations: Option<[Valuation; 3]>,
}

impl FiberEntry {
    pub fn new(kind: KodairaType, multiplicity: u32, place_degree: u32) -> Self {
        FiberEntry {
            kind,
            multiplicity,
            place_degree,
            place: None,
            valuations: None,
        }
    }
}

/// The multiset of singular fibers of an elliptic surface with
/// `deg f_* omega = chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberConfig {
    pub chi: u32,
    pub entries: Vec<FiberEntry>,
}

impl FiberConfig {
    pub fn new(chi: u32, entries: Vec<FiberEntry>) -> Self {
        FiberConfig { chi, entries }
    }

    /// Largest multiplicity among the entries (1 when none is multiple).
    pub fn multiplicity(&self) -> u32 {
        self.entries
            .iter()
            .map(|e| e.multiplicity)
            .max()
            .unwrap_or(1)
    }

    /// `(type, total place degree)` pairs sorted by type; positions dropped.
    pub fn type_degrees(&self) -> Vec<(KodairaType, u32, u32)> {
        let mut acc: std::collections::BTreeMap<(KodairaType, u32), u32> = Default::default();
        for e in &self.entries {
            *acc.entry((e.kind, e.multiplicity)).or_default() += e.place_degree;
        }
        acc.into_iter().map(|((k, m), d)| (k, m, d)).collect()
    }
}

/// On-disk fiber list: `{ "chi": 1, "fibers": [ {"type": "II*", "m": 1, "deg": 1} ] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberConfigFile {
    pub chi: u32,
    pub fibers: Vec<FiberSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSpec {
    #[serde(rename = "type")]
    pub kind: KodairaType,
    #[serde(default = "one_u32")]
    pub m: u32,
    #[serde(default = "one_u32")]
    pub deg: u32,
}

fn one_u32() -> u32 {
    1
}

impl From<&FiberConfigFile> for FiberConfig {
    fn from(file: &FiberConfigFile) -> Self {
        FiberConfig {
            chi: file.chi,
            entries: file
                .fibers
                .iter()
                .map(|f| FiberEntry::new(f.kind, f.m, f.deg))
                .collect(),
        }
    }
}

impl From<&FiberConfig> for FiberConfigFile {
    fn from(config: &FiberConfig) -> Self {
        FiberConfigFile {
            chi: config.chi,
            fibers: config
                .entries
                .iter()
                .map(|e| FiberSpec {
                    kind: e.kind,
                    m: e.multiplicity,
                    deg: e.place_degree,
                })
                .collect(),
        }
    }
}

/// Classifies every singular fiber of a minimal model.
///
/// Weierstrass models have a section, so every multiplicity is 1.
pub fn analyze(model: &WeierstrassModel) -> Result<FiberConfig, WeierstrassError> {
    let delta = discriminant(model)?;
    let profile = place_profile(&[model.a.clone(), model.b.clone(), delta])?;
    let mut entries = Vec::new();
    for entry in profile {
        let [va, vb, vd] = [
            entry.valuations[0],
            entry.valuations[1],
            entry.valuations[2],
        ];
        let vd_finite = vd.finite().expect("discriminant is nonzero");
        if vd_finite == 0 {
            continue;
        }
        match classify_fiber(va, vb, vd_finite)? {
            FiberClass::NonMinimal => {
                return Err(WeierstrassError::NonMinimal { place: entry.place })
            }
            FiberClass::Type(kind) => entries.push(FiberEntry {
                kind,
                multiplicity: 1,
                place_degree: entry.place.degree(),
                place: Some(entry.place),
                valuations: Some([va, vb, vd]),
            }),
        }
    }
    Ok(FiberConfig {
        chi: model.chi,
        entries,
    })
}

/// Drops a form by `q^k` at `place`, lowering its degree by `k deg q`.
fn divide_at(form: &BinaryForm, place: &Place, k: u32) -> Result<BinaryForm, WeierstrassError> {
    let new_degree = form.degree() - k * place.degree();
    if form.is_zero() {
        return Ok(BinaryForm::zero(new_degree));
    }
    match place {
        Place::Infinity => Ok(BinaryForm::new(
            new_degree,
            form.coeffs()[..=new_degree as usize].to_vec(),
        )?),
        Place::Finite { q, .. } => {
            let quotient = form
                .dehomogenize()
                .exact_div(&q.pow(k))
                .expect("valuation guarantees divisibility");
            Ok(BinaryForm::homogenize(&quotient, new_degree)?)
        }
    }
}

/// Removes every place with `v(A) >= 4` and `v(B) >= 6` by dividing out
/// `q^4` and `q^6`; repeats until minimal. Returns the minimal model and the
/// places divided out, one entry per division step.
pub fn minimalize(
    model: &WeierstrassModel,
) -> Result<(WeierstrassModel, Vec<Place>), WeierstrassError> {
    let mut current = model.clone();
    let mut removed = Vec::new();
    loop {
        let profile = place_profile(&[current.a.clone(), current.b.clone()])?;
        let bad: Vec<Place> = profile
            .into_iter()
            .filter(|e| e.valuations[0].at_least(4) && e.valuations[1].at_least(6))
            .map(|e| e.place)
            .collect();
        if bad.is_empty() {
            return Ok((current, removed));
        }
        let mut a = current.a.clone();
        let mut b = current.b.clone();
        let mut chi = current.chi;
        for place in bad {
            if chi <= place.degree() {
                return Err(WeierstrassError::BelowThreshold);
            }
            a = divide_at(&a, &place, 4)?;
            b = divide_at(&b, &place, 6)?;
            chi -= place.degree();
            removed.push(place);
        }
        current = WeierstrassModel::new(a, b, chi)?;
    }
}
