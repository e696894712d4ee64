//! CM weights of product test configurations, Donaldson-Futaki invariants
//! of point degenerations of a log-twisted line, and Hilbert-Mumford
//! weights of ternary cubics, cubic pencils and Weierstrass data.
//!
//! Hilbert-Mumford weights follow `mu(x, lam) = -min <lam, alpha>` over the
//! support of `x`, so a point whose limit under `lam` exists with a
//! positive-weight fiber gets a negative `mu`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmath::parse::{parse_multi, ParseError};
use crate::exactmath::{BinaryForm, Place, Rational};
use crate::stability::{beta, LogTwistedCurve, StabilityError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("one-parameter subgroup weights must sum to zero, got {0:?}")]
    NotSumZero(Vec<i64>),
    #[error("expected {expected} weights, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("the zero form has no weight")]
    ZeroForm,
    #[error("pencil generators are proportional")]
    Proportional,
    #[error("leading Hilbert coefficient a0 must be positive")]
    NonPositiveA0,
    #[error("point degenerations need a degree-1 place, got {0}")]
    PlaceDegree(Place),
    #[error("pair is not anticanonically polarized log-twisted Fano")]
    NotFano,
    #[error("invariant breach: beta route gives {beta_route}, weight route gives {weight_route}")]
    RoutesDisagree {
        beta_route: Box<Rational>,
        weight_route: Box<Rational>,
    },
    #[error("weight polynomial is not quadratic: w(3) = {0}, expected {1}")]
    NotQuadratic(Box<Rational>, Box<Rational>),
    #[error(transparent)]
    Stability(#[from] StabilityError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Leading coefficients of `h^0(L^k) = a0 k^n + a1 k^(n-1) + ...` and of
/// the total weight `w(k) = b0 k^(n+1) + b1 k^n + ...`, plus the boundary
/// data `a^0`, `b^0` when a divisor is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub n: u32,
    pub a0: Rational,
    pub a1: Rational,
    pub b0: Rational,
    pub b1: Rational,
    pub a_hat0: Option<Rational>,
    pub b_hat0: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePS {
    weights: Vec<i64>,
}

impl OnePS {
    pub fn new(weights: Vec<i64>) -> Result<Self, WeightError> {
        if weights.iter().sum::<i64>() != 0 {
            return Err(WeightError::NotSumZero(weights));
        }
        Ok(OnePS { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn inverse(&self) -> Self {
        OnePS {
            weights: self.weights.iter().map(|w| -w).collect(),
        }
    }

    fn pair(&self, exps: &[u32]) -> i64 {
        self.weights
            .iter()
            .zip(exps)
            .map(|(w, &e)| w * i64::from(e))
            .sum()
    }
}

fn factorial(n: u32) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * k))
}

/// `2 ((n+1)!/a0) (b1 a0 - a1 b0) + ((n+1)!/a0) (b^0 a0 - a^0 b0)`, the
/// second summand dropped without boundary data.
pub fn cm_weight(data: &WeightData) -> Result<Rational, WeightError> {
    if !data.a0.is_positive() {
        return Err(WeightError::NonPositiveA0);
    }
    let f = factorial(data.n + 1) / &data.a0;
    let mut w = Rational::from_integer(2.into()) * &f * (&data.b1 * &data.a0 - &data.a1 * &data.b0);
    if let (Some(ah), Some(bh)) = (&data.a_hat0, &data.b_hat0) {
        w += &f * (bh * &data.a0 - ah * &data.b0);
    }
    Ok(w)
}

/// Total weight of the monomials `s^(kd-i) t^i` when `s`, `t` carry
/// weights `w0`, `w1`.
pub fn weight_sum_p1(d: u64, k: u64, w0: i64, w1: i64) -> i128 {
    let n = i128::from(d) * i128::from(k);
    (i128::from(w0) + i128::from(w1)) * n * (n + 1) / 2
}

/// Donaldson-Futaki invariant of the degeneration of an anticanonically
/// polarized rational log-twisted curve to the point `p`.
///
/// Computed twice: as `beta(p) / d`, and from the weight polynomials of the
/// product configuration induced by a one-parameter subgroup that repels
/// from `p`. Under it every other boundary point, and a general member of
/// the twist, flows to the other fixed point. The two values must agree.
pub fn point_degeneration_df(pair: &LogTwistedCurve, p: &Place) -> Result<Rational, WeightError> {
    if p.degree() != 1 {
        return Err(WeightError::PlaceDegree(p.clone()));
    }
    if !pair.is_anticanonically_polarized() {
        return Err(WeightError::NotFano);
    }
    let d = pair.degree().clone();
    let beta_route = beta(pair, p)? / &d;

    // Weights of the fibers of O(1) at p and at the attracting point. Not
    // normalized to sum zero, so the Futaki cancellation is exercised too.
    let (w_rep, w_att) = (3i64, 1i64);
    let u = Rational::from_integer((w_rep - w_att).into());

    // L^r = O(r d) with r d integral; sample k = 1, 2, 3.
    let r = d.denom().clone();
    let rd: u64 = (&d * Rational::from_integer(r.clone()))
        .to_integer()
        .try_into()
        .expect("degree fits in u64");
    let w = |k: u64| Rational::from_integer(weight_sum_p1(rd, k, w_rep, w_att).into());
    let two = Rational::from_integer(2.into());
    let b0r = (w(2) - &two * w(1)) / &two;
    let b1r = w(1) - &b0r;
    let predicted =
        Rational::from_integer(9.into()) * &b0r + Rational::from_integer(3.into()) * &b1r;
    if w(3) != predicted {
        return Err(WeightError::NotQuadratic(
            Box::new(w(3)),
            Box::new(predicted),
        ));
    }
    let r = Rational::from_integer(r);
    let data = WeightData {
        n: 1,
        a0: d.clone(),
        a1: Rational::one(),
        b0: &b0r / (&r * &r),
        b1: &b1r / &r,
        a_hat0: Some(pair.boundary().degree() + pair.twist()),
        b_hat0: Some({
            let b_p = pair.boundary().coefficient(p);
            let rest = pair.boundary().degree() - &b_p + pair.twist();
            &d * (b_p * Rational::from_integer(w_rep.into())
                + rest * Rational::from_integer(w_att.into()))
        }),
    };
    let cm = cm_weight(&data)?;
    let weight_route = -cm / (two * u.abs() * &d);

    if beta_route != weight_route {
        return Err(WeightError::RoutesDisagree {
            beta_route: Box::new(beta_route),
            weight_route: Box::new(weight_route),
        });
    }
    Ok(beta_route)
}

/// Ternary form as exponent vector `[x, y, z]` to coefficient.
pub type TernaryForm = BTreeMap<[u32; 3], Rational>;

/// Parses a literal in `x`, `y`, `z`.
pub fn parse_ternary(text: &str) -> Result<TernaryForm, ParseError> {
    Ok(parse_multi(text, &["x", "y", "z"])?
        .into_iter()
        .map(|(k, v)| ([k[0], k[1], k[2]], v))
        .collect())
}

fn check_len(lam: &OnePS, n: usize) -> Result<(), WeightError> {
    if lam.weights.len() != n {
        return Err(WeightError::WrongLength {
            expected: n,
            got: lam.weights.len(),
        });
    }
    Ok(())
}

pub fn hm_weight_form(form: &TernaryForm, lam: &OnePS) -> Result<i64, WeightError> {
    check_len(lam, 3)?;
    form.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(a, _)| lam.pair(a))
        .min()
        .map(|m| -m)
        .ok_or(WeightError::ZeroForm)
}

/// Weight of the pencil `<F, G>` as a point of the Grassmannian, read off
/// the support of `F ^ G` in the Pluecker embedding.
pub fn hm_weight_pencil(f: &TernaryForm, g: &TernaryForm, lam: &OnePS) -> Result<i64, WeightError> {
    check_len(lam, 3)?;
    let monomials: Vec<[u32; 3]> = f
        .keys()
        .chain(g.keys())
        .copied()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let zero = Rational::zero();
    let coeff = |h: &TernaryForm, a: &[u32; 3]| h.get(a).cloned().unwrap_or_else(|| zero.clone());
    let mut best: Option<i64> = None;
    for (i, a) in monomials.iter().enumerate() {
        for b in &monomials[i + 1..] {
            let minor = coeff(f, a) * coeff(g, b) - coeff(f, b) * coeff(g, a);
            if !minor.is_zero() {
                let w = lam.pair(a) + lam.pair(b);
                best = Some(best.map_or(w, |m| m.min(w)));
            }
        }
    }
    best.map(|m| -m).ok_or(WeightError::Proportional)
}

/// Smallest weight of a nonzero monomial `s^(n-i) t^i` under
/// `diag(q^a, q^-a)`, which gives it weight `a (n - 2i)`.
fn min_binary_weight(form: &BinaryForm, a: i64) -> Option<i64> {
    let n = i64::from(form.degree());
    form.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| a * (n - 2 * i as i64))
        .min()
}

/// Weight of the Weierstrass datum `(A, B)` under `diag(q^a, q^-a)` on the
/// base coordinates.
///
/// `A` and `B` sit in weights 4 and 6 of the total space, so their minimal
/// weights are scaled by 3 and 2 before the minimum is taken; `mu` is
/// negative exactly when both scaled minima are positive, i.e. when
/// `v_inf(A) > 2` and `v_inf(B) > 3`.
pub fn miranda_weight(
    a_form: &BinaryForm,
    b_form: &BinaryForm,
    a: i64,
) -> Result<i64, WeightError> {
    let wa = min_binary_weight(a_form, a).map(|w| 3 * w);
    let wb = min_binary_weight(b_form, a).map(|w| 2 * w);
    match (wa, wb) {
        (None, None) => Err(WeightError::ZeroForm),
        (Some(x), None) | (None, Some(x)) => Ok(-x),
        (Some(x), Some(y)) => Ok(-x.min(y)),
    }
}
