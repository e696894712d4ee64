//! Homogeneous binary forms on the projective line.
//!
//! A degree-`d` form stores the coefficient of `s^(d-i) t^i` in slot `i`.
//! Dehomogenizing at `s = 1` gives a polynomial in `t`; the point `s = 0`
//! is the place at infinity.

use std::fmt;

use num_traits::Zero;

use super::place::{Place, Valuation};
use super::poly::{Degree, UniPoly};
use super::rational::Rational;
use super::ExactError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    degree: u32,
    coeffs: Vec<Rational>,
}

/// A 2x2 rational matrix `[[a, b], [c, d]]` acting by
/// `s -> a s + b t`, `t -> c s + d t`.
pub type Mat2 = [[Rational; 2]; 2];

impl BinaryForm {
    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![Rational::zero(); degree as usize + 1],
        }
    }

    /// Builds a form from its `d + 1` slot coefficients.
    pub fn new(degree: u32, coeffs: Vec<Rational>) -> Result<Self, ExactError> {
        if coeffs.len() != degree as usize + 1 {
            return Err(ExactError::SlotCount {
                degree,
                got: coeffs.len(),
            });
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn from_i64(degree: u32, coeffs: &[i64]) -> Result<Self, ExactError> {
        Self::new(
            degree,
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Homogenizes `f(t)` to degree `degree`. Padding with powers of `s`
    /// encodes vanishing at infinity.
    pub fn homogenize(f: &UniPoly, degree: u32) -> Result<Self, ExactError> {
        if let Degree::Finite(d) = f.degree() {
            if d > degree as usize {
                return Err(ExactError::DegreeTooLarge {
                    poly_degree: d,
                    form_degree: degree,
                });
            }
        }
        Ok(BinaryForm {
            degree,
            coeffs: (0..=degree as usize).map(|i| f.coeff(i)).collect(),
        })
    }

    /// The monomial `c s^(d-i) t^i`.
    pub fn monomial(degree: u32, i: u32, c: Rational) -> Self {
        let mut out = Self::zero(degree);
        out.coeffs[i as usize] = c;
        out
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `f(t) = F(1, t)`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        let d = self.degree as usize;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c * pow(s, d - i) * pow(t, i))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.degree != other.degree {
            return Err(ExactError::DegreeMismatch(self.degree, other.degree));
        }
        Ok(BinaryForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        let mut coeffs = vec![Rational::zero(); degree as usize + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm { degree, coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = BinaryForm {
            degree: 0,
            coeffs: vec![Rational::from_integer(1.into())],
        };
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Order of vanishing at `place`; `Infinite` for the zero form.
    pub fn valuation(&self, place: &Place) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        let f = self.dehomogenize();
        match place {
            Place::Infinity => {
                let deg = f.degree().finite().expect("nonzero form");
                Valuation::Finite(self.degree - deg as u32)
            }
            Place::Finite { q, .. } => Valuation::Finite(f.multiplicity_of(q)),
        }
    }

    /// Substitutes `(s, t) -> g (s, t)`.
    pub fn mobius(&self, g: &Mat2) -> Result<Self, ExactError> {
        let det = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0];
        if det.is_zero() {
            return Err(ExactError::SingularMatrix);
        }
        let s_img = BinaryForm {
            degree: 1,
            coeffs: vec![g[0][0].clone(), g[0][1].clone()],
        };
        let t_img = BinaryForm {
            degree: 1,
            coeffs: vec![g[1][0].clone(), g[1][1].clone()],
        };
        let d = self.degree;
        let mut out = Self::zero(d);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = i as u32;
            let term = s_img.pow(d - i).mul(&t_img.pow(i)).scale(c);
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.degree, self.dehomogenize())
    }
}
