//! Log-twisted K-stability of curves and adiabatic verdicts for elliptic
//! fibrations over the projective line.
//!
//! On a curve every divisorial valuation is a point `p`, `A(p) = 1 - b_p`
//! and `vol(L - x p) = d - x`, so `S(p) = d / 2` and
//!
//! ```text
//! beta(p)  = (1 - b_p) d - d^2 / 2
//! delta    = min_p 2 (1 - b_p) / d
//! ```
//!
//! The minimum of `delta` sits at the largest boundary coefficient, or at a
//! point outside the boundary (`b = 0`) when the boundary is empty, so the
//! support plus one generic point is enough.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canbundle::{base_data, lct_of_fiber, BaseData, CanBundleError};
use crate::exactmath::rational::serde_str;
use crate::exactmath::{DivisorP1, Place, Rational};
use crate::weierstrass::{FiberConfig, KodairaType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error("polarization degree must be positive, got {0}")]
    NonPositiveDegree(Rational),
    #[error("boundary coefficient {coefficient} at {place} lies outside [0, 1)")]
    BoundaryCoefficient { place: Place, coefficient: Rational },
    #[error("twist degree must be non-negative, got {0}")]
    NegativeTwist(Rational),
    #[error("the beta and delta criteria are stated for genus 0, got genus {0}")]
    NotRational(u32),
    #[error("not log-twisted Fano: 2 - deg B - T = {0}; use curve_verdict")]
    NotFano(Rational),
    #[error("log-twisted Fano curve must be rational (genus {0})")]
    FanoPositiveGenus(u32),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("invariant breach: {0}")]
    InvariantBreach(String),
    #[error(transparent)]
    CanBundle(#[from] CanBundleError),
}

/// `(C, B, T, L)` with `C` of genus `genus`, boundary `B`, a twist of
/// degree `T` and polarization of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogTwistedCurve {
    genus: u32,
    boundary: DivisorP1,
    twist: Rational,
    degree: Rational,
}

impl LogTwistedCurve {
    pub fn new(
        genus: u32,
        boundary: DivisorP1,
        twist: Rational,
        degree: Rational,
    ) -> Result<Self, StabilityError> {
        if !degree.is_positive() {
            return Err(StabilityError::NonPositiveDegree(degree));
        }
        if twist.is_negative() {
            return Err(StabilityError::NegativeTwist(twist));
        }
        for (place, c) in boundary.iter() {
            if c.is_negative() || *c >= Rational::one() {
                return Err(StabilityError::BoundaryCoefficient {
                    place: place.clone(),
                    coefficient: c.clone(),
                });
            }
        }
        Ok(LogTwistedCurve {
            genus,
            boundary,
            twist,
            degree,
        })
    }

    /// The rational curve polarized by `-(K + B + T)`.
    pub fn anticanonical(boundary: DivisorP1, twist: Rational) -> Result<Self, StabilityError> {
        let d = Rational::from_integer(2.into()) - boundary.degree() - &twist;
        if !d.is_positive() {
            return Err(StabilityError::NotFano(d));
        }
        Self::new(0, boundary, twist, d)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary(&self) -> &DivisorP1 {
        &self.boundary
    }

    pub fn twist(&self) -> &Rational {
        &self.twist
    }

    pub fn degree(&self) -> &Rational {
        &self.degree
    }

    /// `deg (K + B + T)`.
    pub fn kappa(&self) -> Rational {
        Rational::from_integer((2 * i64::from(self.genus) - 2).into())
            + self.boundary.degree()
            + &self.twist
    }

    /// `2 - deg B - T`; positive exactly when the pair is log-twisted Fano.
    pub fn anticanonical_degree(&self) -> Rational {
        -self.kappa()
    }

    pub fn is_anticanonically_polarized(&self) -> bool {
        self.genus == 0
            && self.anticanonical_degree().is_positive()
            && self.anticanonical_degree() == self.degree
    }

    fn with_degree(&self, degree: Rational) -> Self {
        LogTwistedCurve {
            degree,
            ..self.clone()
        }
    }

    /// Largest boundary coefficient, with its place; `None` for an empty
    /// boundary.
    fn max_coefficient(&self) -> Option<(&Place, &Rational)> {
        self.boundary.max_term()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerdictTag {
    UniformlyKStable,
    KSemistableNotUniform,
    KUnstable,
    KStableByCY,
    KStableByGeneralType,
    /// No criterion covers this input.
    CoverageGap,
}

impl VerdictTag {
    pub fn is_uniform(self) -> bool {
        matches!(
            self,
            VerdictTag::UniformlyKStable
                | VerdictTag::KStableByCY
                | VerdictTag::KStableByGeneralType
        )
    }

    /// 2 for uniformly stable, 1 for semistable, 0 for unstable.
    pub fn rank(self) -> Option<u8> {
        match self {
            VerdictTag::KUnstable => Some(0),
            VerdictTag::KSemistableNotUniform => Some(1),
            VerdictTag::CoverageGap => None,
            _ => Some(2),
        }
    }
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub tag: VerdictTag,
    /// A destabilizing point; always present for `KUnstable`.
    pub witness: Option<Place>,
    /// The criterion the tag comes from.
    pub by: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn new(tag: VerdictTag, witness: Option<Place>, by: &str) -> Self {
        debug_assert!(tag != VerdictTag::KUnstable || witness.is_some());
        Verdict {
            tag,
            witness,
            by: by.to_string(),
            note: None,
        }
    }
}

pub const BY_FANO: &str = "log-twisted Fano threshold: max b < (deg B + T)/2";
pub const BY_CY: &str = "log-twisted Calabi-Yau curve, klt boundary";
pub const BY_GENERAL_TYPE: &str = "log-twisted curve of general type";
pub const BY_ADIABATIC: &str = "adiabatic limit: total space follows the log-twisted base";
pub const BY_CANONICAL: &str = "canonically polarized surface over a curve";

pub const POLYSTABLE_NOTE: &str =
    "polystable: two I0* fibers (two points of coefficient 1/2, no twist)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CscKNote {
    /// Uniform adiabatic stability gives cscK metrics for small epsilon.
    ExistsBySmoothCase,
    NotApplicable,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdiabaticReport {
    pub base: Verdict,
    pub total: Verdict,
    #[serde(rename = "csck")]
    pub csck_note: CscKNote,
    #[serde(with = "serde_str")]
    pub alpha_limit: Rational,
    #[serde(with = "serde_str")]
    pub delta_limit: Rational,
}

fn require_rational(pair: &LogTwistedCurve) -> Result<(), StabilityError> {
    if pair.genus != 0 {
        return Err(StabilityError::NotRational(pair.genus));
    }
    Ok(())
}

pub fn beta(pair: &LogTwistedCurve, p: &Place) -> Result<Rational, StabilityError> {
    require_rational(pair)?;
    let d = &pair.degree;
    let a = Rational::one() - pair.boundary.coefficient(p);
    Ok(a * d - d * d / Rational::from_integer(2.into()))
}

fn beta_at(pair: &LogTwistedCurve, b: &Rational) -> Rational {
    let d = &pair.degree;
    (Rational::one() - b) * d - d * d / Rational::from_integer(2.into())
}

pub fn delta(pair: &LogTwistedCurve) -> Result<Rational, StabilityError> {
    require_rational(pair)?;
    let two = Rational::from_integer(2.into());
    let generic = &two / &pair.degree;
    Ok(pair
        .boundary
        .iter()
        .map(|(_, b)| &two * (Rational::one() - b) / &pair.degree)
        .fold(generic, |m, x| if x < m { x } else { m }))
}

fn has_two_half_points(pair: &LogTwistedCurve) -> bool {
    let half = Rational::new(1.into(), 2.into());
    pair.twist.is_zero()
        && pair
            .boundary
            .iter()
            .all(|(p, c)| *c == half && p.degree() == 1)
        && pair.boundary.len() == 2
}

fn tag_from(ord: Ordering) -> VerdictTag {
    match ord {
        Ordering::Greater => VerdictTag::UniformlyKStable,
        Ordering::Equal => VerdictTag::KSemistableNotUniform,
        Ordering::Less => VerdictTag::KUnstable,
    }
}

/// Verdict for a rational log-twisted Fano curve, always judged with the
/// anticanonical polarization.
///
/// The threshold comparison, the sign of the smallest `beta` and the sign
/// of `delta - 1` are computed separately and must agree.
pub fn fano_verdict(pair: &LogTwistedCurve) -> Result<Verdict, StabilityError> {
    require_rational(pair)?;
    let d = pair.anticanonical_degree();
    if !d.is_positive() {
        return Err(StabilityError::NotFano(d));
    }
    let pair = pair.with_degree(d);
    let zero = Rational::zero();
    let (witness, max_b) = match pair.max_coefficient() {
        Some((p, b)) => (Some(p.clone()), b.clone()),
        None => (None, zero.clone()),
    };

    let threshold = (pair.boundary.degree() + &pair.twist) / Rational::from_integer(2.into());
    let by_threshold = tag_from(threshold.cmp(&max_b));

    let min_beta = pair
        .boundary
        .iter()
        .map(|(_, b)| beta_at(&pair, b))
        .fold(beta_at(&pair, &zero), |m, x| if x < m { x } else { m });
    let by_beta = tag_from(min_beta.cmp(&zero));

    let by_delta = tag_from(delta(&pair)?.cmp(&Rational::one()));

    if by_threshold != by_beta || by_beta != by_delta {
        return Err(StabilityError::InvariantBreach(format!(
            "threshold gives {by_threshold}, beta gives {by_beta}, delta gives {by_delta}"
        )));
    }
    let witness = if by_threshold == VerdictTag::KUnstable {
        witness
    } else {
        None
    };
    let mut verdict = Verdict::new(by_threshold, witness, BY_FANO);
    if by_threshold == VerdictTag::KSemistableNotUniform && has_two_half_points(&pair) {
        verdict.note = Some(POLYSTABLE_NOTE.to_string());
    }
    Ok(verdict)
}

/// Dispatches on the sign of `deg (K + B + T)`.
pub fn curve_verdict(pair: &LogTwistedCurve) -> Result<Verdict, StabilityError> {
    match pair.kappa().cmp(&Rational::zero()) {
        Ordering::Less if pair.genus > 0 => Err(StabilityError::FanoPositiveGenus(pair.genus)),
        Ordering::Less => fano_verdict(pair),
        // every boundary coefficient is below 1, so the pair is klt
        Ordering::Equal => Ok(Verdict::new(VerdictTag::KStableByCY, None, BY_CY)),
        Ordering::Greater => Ok(Verdict::new(
            VerdictTag::KStableByGeneralType,
            None,
            BY_GENERAL_TYPE,
        )),
    }
}

/// The log-twisted base `(P^1, B, M, L)` of a fiber configuration, with
/// `deg L = |2 - deg(B + M)|`, or 1 when that vanishes.
pub fn base_pair(base: &BaseData) -> Result<LogTwistedCurve, StabilityError> {
    let kappa = Rational::from_integer((-2).into()) + base.total_degree();
    let d = if kappa.is_zero() {
        Rational::one()
    } else {
        kappa.abs()
    };
    LogTwistedCurve::new(0, base.discriminant.clone(), base.moduli_degree.clone(), d)
}

/// `(inf lct, 2 inf lct)` over all fibers, smooth ones included.
pub fn alpha_delta_limits(config: &FiberConfig) -> Result<(Rational, Rational), StabilityError> {
    let mut alpha = Rational::one();
    for e in &config.entries {
        let l = lct_of_fiber(e.kind, e.multiplicity)?;
        if l < alpha {
            alpha = l;
        }
    }
    let delta = &alpha * Rational::from_integer(2.into());
    Ok((alpha, delta))
}

pub fn adiabatic_verdict(config: &FiberConfig) -> Result<AdiabaticReport, StabilityError> {
    let base = base_data(config)?;
    let pair = base_pair(&base)?;
    let base_verdict = curve_verdict(&pair)?;
    let total = Verdict {
        tag: base_verdict.tag,
        witness: base_verdict.witness.clone(),
        by: BY_ADIABATIC.to_string(),
        note: base_verdict.note.clone(),
    };
    let csck_note = if base_verdict.tag.is_uniform() {
        CscKNote::ExistsBySmoothCase
    } else if base_verdict.tag == VerdictTag::KUnstable {
        CscKNote::NotApplicable
    } else {
        CscKNote::Unknown
    };
    let (alpha_limit, delta_limit) = alpha_delta_limits(config)?;
    if delta_limit != &alpha_limit * Rational::from_integer(2.into()) {
        return Err(StabilityError::InvariantBreach(
            "delta limit differs from twice the alpha limit".into(),
        ));
    }
    Ok(AdiabaticReport {
        base: base_verdict,
        total,
        csck_note,
        alpha_limit,
        delta_limit,
    })
}

/// `beta` of `(B + eps D, (1 - eps) L)` at `p`, where `ord_p D = ord_d`.
pub fn perturbed_beta(
    pair: &LogTwistedCurve,
    p: &Place,
    ord_d: &Rational,
    eps: &Rational,
) -> Result<Rational, StabilityError> {
    require_rational(pair)?;
    if eps.is_negative() || *eps >= Rational::one() {
        return Err(StabilityError::Range(format!(
            "eps = {eps} must lie in [0, 1)"
        )));
    }
    if ord_d.is_negative() || *ord_d > pair.degree {
        return Err(StabilityError::Range(format!(
            "ord_p D = {ord_d} must lie in [0, {}]",
            pair.degree
        )));
    }
    let d = &pair.degree;
    let one_minus = Rational::one() - eps;
    let a = Rational::one() - pair.boundary.coefficient(p) - eps * ord_d;
    Ok(a * &one_minus * d - &one_minus * &one_minus * d * d / Rational::from_integer(2.into()))
}

/// Verdict for a canonically polarized surface fibred over a curve of the
/// given genus, read off the sign of `deg (K + B + M)`.
pub fn canonical_fibration_verdict(
    genus: u32,
    base: &BaseData,
    klt: bool,
) -> Result<Verdict, StabilityError> {
    let kappa = crate::canbundle::twisted_canonical_degree(genus, base, &[]);
    let mut verdict = match kappa.cmp(&Rational::zero()) {
        Ordering::Greater => Verdict::new(VerdictTag::UniformlyKStable, None, BY_CANONICAL),
        Ordering::Equal if klt => Verdict::new(VerdictTag::UniformlyKStable, None, BY_CANONICAL),
        Ordering::Equal => Verdict::new(VerdictTag::KSemistableNotUniform, None, BY_CANONICAL),
        Ordering::Less => {
            let pair = LogTwistedCurve::anticanonical(
                base.discriminant.clone(),
                base.moduli_degree.clone(),
            )?;
            let fano = fano_verdict(&pair)?;
            if fano.tag == VerdictTag::UniformlyKStable {
                Verdict::new(VerdictTag::UniformlyKStable, None, BY_CANONICAL)
            } else {
                let mut v = Verdict::new(VerdictTag::CoverageGap, fano.witness, BY_CANONICAL);
                v.note = Some(format!("Fano base is {}, not uniformly K-stable", fano.tag));
                v
            }
        }
    };
    if verdict.note.is_none() {
        verdict.note = Some(format!("dim X = 2, deg(K + B + M) = {kappa}"));
    }
    Ok(verdict)
}

/// Shorthand used by tests and the CLI: the verdict for a list of
/// `(type, multiplicity, place degree)` triples on a rational elliptic
/// surface.
pub fn verdict_for(
    chi: u32,
    fibers: &[(KodairaType, u32, u32)],
) -> Result<AdiabaticReport, StabilityError> {
    let config = FiberConfig::new(
        chi,
        fibers
            .iter()
            .map(|&(k, m, d)| crate::weierstrass::FiberEntry::new(k, m, d))
            .collect(),
    );
    adiabatic_verdict(&config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};
    use KodairaType::*;

    fn pt(a: i64) -> Place {
        Place::rational_point(int(a))
    }

    fn curve(
        genus: u32,
        coeffs: &[(i64, Rational)],
        twist: Rational,
        d: Rational,
    ) -> LogTwistedCurve {
        let b = DivisorP1::from_terms(coeffs.iter().map(|(a, c)| (pt(*a), c.clone())));
        LogTwistedCurve::new(genus, b, twist, d).unwrap()
    }

    #[test]
    fn beta_examples() {
        let c = curve(0, &[(0, rat(5, 6))], int(0), int(1));
        assert_eq!(beta(&c, &pt(0)).unwrap(), rat(-1, 3));
        let bare = curve(0, &[], int(0), int(2));
        assert_eq!(beta(&bare, &pt(0)).unwrap(), int(0));
        let c = curve(0, &[(0, rat(1, 2))], int(0), int(1));
        assert_eq!(beta(&c, &pt(0)).unwrap(), int(0));
        assert!(beta(&curve(1, &[], int(0), int(1)), &pt(0)).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(
            delta(&curve(0, &[(0, rat(1, 2))], int(0), int(1))).unwrap(),
            int(1)
        );
        assert_eq!(delta(&curve(0, &[], int(0), int(2))).unwrap(), int(1));
        assert_eq!(
            delta(&curve(0, &[(0, rat(2, 3))], int(0), int(1))).unwrap(),
            rat(2, 3)
        );
    }

    #[test]
    fn rejects_bad_pairs() {
        let b = DivisorP1::from_terms([(pt(0), int(1))]);
        assert!(LogTwistedCurve::new(0, b, int(0), int(1)).is_err());
        assert!(LogTwistedCurve::new(0, DivisorP1::new(), int(0), int(0)).is_err());
        assert!(LogTwistedCurve::new(0, DivisorP1::new(), int(-1), int(1)).is_err());
    }

    #[test]
    fn fano_examples() {
        let c = curve(0, &[(0, rat(5, 6))], rat(1, 6), int(1));
        let v = fano_verdict(&c).unwrap();
        assert_eq!(v.tag, VerdictTag::KUnstable);
        assert_eq!(v.witness, Some(pt(0)));

        let c = curve(0, &[(0, rat(1, 2)), (1, rat(1, 2))], int(0), int(1));
        let v = fano_verdict(&c).unwrap();
        assert_eq!(v.tag, VerdictTag::KSemistableNotUniform);
        assert_eq!(v.note.as_deref(), Some(POLYSTABLE_NOTE));

        let c = curve(0, &[(0, rat(3, 4)), (1, rat(1, 2))], rat(1, 4), int(1));
        assert_eq!(
            fano_verdict(&c).unwrap().tag,
            VerdictTag::KSemistableNotUniform
        );

        let c = curve(0, &[(0, int(0))], int(2), int(1));
        assert!(matches!(fano_verdict(&c), Err(StabilityError::NotFano(_))));
    }

    #[test]
    fn curve_examples() {
        let v =
            curve_verdict(&curve(0, &[(0, rat(1, 2)), (1, rat(1, 2))], int(1), int(1))).unwrap();
        assert_eq!(v.tag, VerdictTag::KStableByCY);
        let v = curve_verdict(&curve(1, &[(0, rat(1, 2))], rat(1, 2), int(1))).unwrap();
        assert_eq!(v.tag, VerdictTag::KStableByGeneralType);
        let v = curve_verdict(&curve(0, &[(0, rat(1, 3))], rat(2, 3), int(1))).unwrap();
        assert_eq!(v.tag, VerdictTag::UniformlyKStable);
    }

    #[test]
    fn adiabatic_examples() {
        let r = verdict_for(1, &[(IVStar, 1, 1), (I(1), 1, 4)]).unwrap();
        assert_eq!(r.base.tag, VerdictTag::KUnstable);
        assert_eq!(r.total.tag, VerdictTag::KUnstable);
        assert_eq!(r.csck_note, CscKNote::NotApplicable);

        let r = verdict_for(1, &[(I(0), 3, 1), (IIIStar, 1, 1), (I(1), 1, 3)]).unwrap();
        assert_eq!(r.base.tag, VerdictTag::UniformlyKStable);
        assert_eq!(r.csck_note, CscKNote::ExistsBySmoothCase);

        let r = verdict_for(1, &[(I(0), 4, 1), (IIStar, 1, 1), (II, 1, 1)]).unwrap();
        assert_eq!(r.base.tag, VerdictTag::UniformlyKStable);
        assert_eq!(r.alpha_limit, rat(1, 6));
        assert_eq!(r.delta_limit, rat(1, 3));
    }

    #[test]
    fn limits() {
        let c = FiberConfig::new(1, vec![crate::weierstrass::FiberEntry::new(I(1), 1, 12)]);
        assert_eq!(alpha_delta_limits(&c).unwrap(), (int(1), int(2)));
        let r = verdict_for(1, &[(IStar(2), 1, 1), (I(1), 1, 4)]).unwrap();
        assert_eq!((r.alpha_limit, r.delta_limit), (rat(1, 2), int(1)));
        let r = verdict_for(1, &[(I(0), 5, 1), (I(1), 1, 12)]).unwrap();
        assert_eq!((r.alpha_limit, r.delta_limit), (rat(1, 5), rat(2, 5)));
    }

    #[test]
    fn perturbed_beta_examples() {
        let c = curve(0, &[(0, rat(1, 2))], int(0), int(1));
        assert!(perturbed_beta(&c, &pt(0), &int(1), &rat(1, 10))
            .unwrap()
            .is_negative());
        assert_eq!(
            perturbed_beta(&c, &pt(0), &int(1), &int(0)).unwrap(),
            beta(&c, &pt(0)).unwrap()
        );
        for eps in [rat(1, 10), rat(1, 3), rat(9, 10)] {
            assert_eq!(
                perturbed_beta(&c, &pt(0), &rat(1, 2), &eps).unwrap(),
                int(0)
            );
        }
        assert!(perturbed_beta(&c, &pt(0), &int(2), &rat(1, 2)).is_err());
        assert!(perturbed_beta(&c, &pt(0), &int(0), &int(1)).is_err());
    }

    #[test]
    fn canonical_fibration_examples() {
        let cfg = |fibers: &[(KodairaType, u32, u32)], chi| {
            FiberConfig::new(
                chi,
                fibers
                    .iter()
                    .map(|&(k, m, d)| crate::weierstrass::FiberEntry::new(k, m, d))
                    .collect(),
            )
        };
        // chi = 3: deg M = 3 on 36 nodes, kappa = 1
        let b = base_data(&cfg(&[(I(1), 1, 36)], 3)).unwrap();
        assert_eq!(
            canonical_fibration_verdict(0, &b, true).unwrap().tag,
            VerdictTag::UniformlyKStable
        );
        let b = base_data(&cfg(&[(I(1), 1, 24)], 2)).unwrap();
        assert_eq!(
            canonical_fibration_verdict(0, &b, false).unwrap().tag,
            VerdictTag::KSemistableNotUniform
        );
        assert_eq!(
            canonical_fibration_verdict(0, &b, true).unwrap().tag,
            VerdictTag::UniformlyKStable
        );
        // kappa = -1 with max b = 1/3 against threshold 1/2
        let b = base_data(&cfg(&[(IV, 1, 1), (I(1), 1, 8)], 1)).unwrap();
        assert_eq!(
            canonical_fibration_verdict(0, &b, true).unwrap().tag,
            VerdictTag::UniformlyKStable
        );
        let b = base_data(&cfg(&[(IIStar, 1, 1), (II, 1, 1)], 1)).unwrap();
        let v = canonical_fibration_verdict(0, &b, true).unwrap();
        assert_eq!(v.tag, VerdictTag::CoverageGap);
    }

    #[test]
    fn report_json_round_trip() {
        let r = verdict_for(1, &[(IIStar, 1, 1), (II, 1, 1)]).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: AdiabaticReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
