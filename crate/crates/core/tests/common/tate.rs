//! Step-by-step Tate's algorithm over the local ring Q[t]_(t).
//!
//! Works on a long Weierstrass equation
//! `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` with coefficients in
//! Q[t], at the place t = 0, residue field Q. It performs the coordinate
//! changes of the algorithm explicitly and reads the fiber type off the
//! first step that stops. It shares nothing with the valuation-triple
//! lookup in `ellfib::weierstrass` beyond polynomial arithmetic.

use ellfib::exactmath::poly::UniPoly;
use ellfib::exactmath::rational::Rational;
use ellfib::weierstrass::KodairaType;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TateOutcome {
    Type(KodairaType),
    NonMinimal,
}

#[derive(Clone, Debug)]
pub struct LongWeierstrass {
    pub a1: UniPoly,
    pub a2: UniPoly,
    pub a3: UniPoly,
    pub a4: UniPoly,
    pub a6: UniPoly,
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn c(x: Rational) -> UniPoly {
    UniPoly::constant(x)
}

fn ci(n: i64) -> UniPoly {
    c(q(n))
}

/// t-adic valuation; `None` for zero.
fn val(p: &UniPoly) -> Option<usize> {
    p.coeffs().iter().position(|x| !x.is_zero())
}

fn divisible(p: &UniPoly, k: usize) -> bool {
    val(p).is_none_or(|v| v >= k)
}

/// Coefficient of t^j, i.e. the residue of p / t^j when t^j | p.
fn res(p: &UniPoly, j: usize) -> Rational {
    p.coeff(j)
}

fn pi_pow(k: usize) -> UniPoly {
    UniPoly::monomial(Rational::one(), k)
}

impl LongWeierstrass {
    pub fn short(a4: UniPoly, a6: UniPoly) -> Self {
        LongWeierstrass {
            a1: UniPoly::zero(),
            a2: UniPoly::zero(),
            a3: UniPoly::zero(),
            a4,
            a6,
        }
    }

    fn b2(&self) -> UniPoly {
        &(&self.a1 * &self.a1) + &(&ci(4) * &self.a2)
    }
    fn b4(&self) -> UniPoly {
        &(&ci(2) * &self.a4) + &(&self.a1 * &self.a3)
    }
    fn b6(&self) -> UniPoly {
        &(&self.a3 * &self.a3) + &(&ci(4) * &self.a6)
    }
    fn b8(&self) -> UniPoly {
        let a1 = &self.a1;
        let a2 = &self.a2;
        let a3 = &self.a3;
        let a4 = &self.a4;
        let a6 = &self.a6;
        let t1 = &(a1 * a1) * a6;
        let t2 = &(&ci(4) * a2) * a6;
        let t3 = &(a1 * a3) * a4;
        let t4 = &(a2 * a3) * a3;
        let t5 = a4 * a4;
        &(&(&(&t1 + &t2) - &t3) + &t4) - &t5
    }
    pub fn discriminant(&self) -> UniPoly {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        let t1 = &(&b2 * &b2) * &b8;
        let t2 = &ci(8) * &(&(&b4 * &b4) * &b4);
        let t3 = &ci(27) * &(&b6 * &b6);
        let t4 = &ci(9) * &(&(&b2 * &b4) * &b6);
        &(&(&(-&t1) - &t2) - &t3) + &t4
    }

    /// `x = x' + r, y = y' + s x' + u` (unit scaling 1).
    fn change(&self, r: &UniPoly, s: &UniPoly, u: &UniPoly) -> Self {
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let n1 = a1 + &(&ci(2) * s);
        let n2 = &(&(a2 - &(s * a1)) + &(&ci(3) * r)) - &(s * s);
        let n3 = &(a3 + &(r * a1)) + &(&ci(2) * u);
        let n4 = {
            let mut x = a4 - &(s * a3);
            x = &x + &(&(&ci(2) * r) * a2);
            x = &x - &(&(u + &(r * s)) * a1);
            x = &x + &(&(&ci(3) * r) * r);
            &x - &(&(&ci(2) * s) * u)
        };
        let n6 = {
            let mut x = a6 + &(r * a4);
            x = &x + &(&(r * r) * a2);
            x = &x + &(&(r * r) * r);
            x = &x - &(u * a3);
            x = &x - &(u * u);
            &x - &(&(r * u) * a1)
        };
        LongWeierstrass {
            a1: n1,
            a2: n2,
            a3: n3,
            a4: n4,
            a6: n6,
        }
    }
}

/// Monic quadratic or general quadratic `a X^2 + b X + c` over Q: returns
/// `Some(root)` when it has a double root, `None` when the roots are
/// distinct.
fn double_root(a: &Rational, b: &Rational, cc: &Rational) -> Option<Rational> {
    let disc = b * b - q(4) * a * cc;
    disc.is_zero().then(|| -b / (q(2) * a))
}

pub fn tate(curve: &LongWeierstrass) -> TateOutcome {
    let mut e = curve.clone();
    let disc = e.discriminant();
    let n = val(&disc).expect("generically nonsingular curve");

    // Step 1.
    if n == 0 {
        return TateOutcome::Type(KodairaType::I(0));
    }

    // Step 2: move the singular point of the reduction to (0, 0).
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6; the singular x is a
    // repeated root of the reduced cubic.
    let g = UniPoly::from_coeffs(vec![
        res(&e.b6(), 0),
        q(2) * res(&e.b4(), 0),
        res(&e.b2(), 0),
        q(4),
    ]);
    let h = g.gcd(&g.derivative());
    let x0 = match h.degree().finite() {
        Some(1) => -h.coeff(0),
        Some(2) => -h.coeff(1) / q(2),
        other => panic!("reduction has no singular point (gcd degree {other:?})"),
    };
    let y0 = -(res(&e.a1, 0) * &x0 + res(&e.a3, 0)) / q(2);
    e = e.change(&c(x0), &UniPoly::zero(), &c(y0));
    assert!(divisible(&e.a3, 1) && divisible(&e.a4, 1) && divisible(&e.a6, 1));
    if !divisible(&e.b2(), 1) {
        return TateOutcome::Type(KodairaType::I(n as u32));
    }

    // Steps 3-5.
    if !divisible(&e.a6, 2) {
        return TateOutcome::Type(KodairaType::II);
    }
    if !divisible(&e.b8(), 3) {
        return TateOutcome::Type(KodairaType::III);
    }
    if !divisible(&e.b6(), 3) {
        return TateOutcome::Type(KodairaType::IV);
    }

    // Step 6: arrange t | a1, a2; t^2 | a3, a4; t^3 | a6.
    let half = Rational::new(1.into(), 2.into());
    let s = c(-res(&e.a1, 0) * &half);
    e = e.change(&UniPoly::zero(), &s, &UniPoly::zero());
    let u = &c(-res(&e.a3, 1) * &half) * &pi_pow(1);
    e = e.change(&UniPoly::zero(), &UniPoly::zero(), &u);
    assert!(divisible(&e.a1, 1) && divisible(&e.a2, 1));
    assert!(divisible(&e.a3, 2) && divisible(&e.a4, 2) && divisible(&e.a6, 3));

    // P(T) = T^3 + a2,1 T^2 + a4,2 T + a6,3
    let p = UniPoly::from_coeffs(vec![res(&e.a6, 3), res(&e.a4, 2), res(&e.a2, 1), q(1)]);
    let hp = p.gcd(&p.derivative());
    match hp.degree().finite() {
        Some(0) => return TateOutcome::Type(KodairaType::IStar(0)),
        Some(1) => {
            // Step 7: double root, move it to T = 0.
            let r0 = -hp.coeff(0);
            e = e.change(&(&c(r0) * &pi_pow(1)), &UniPoly::zero(), &UniPoly::zero());
            let mut m = 1usize;
            loop {
                if m % 2 == 1 {
                    let k = (m + 3) / 2;
                    let b = res(&e.a3, k);
                    let cc = -res(&e.a6, m + 3);
                    match double_root(&q(1), &b, &cc) {
                        None => return TateOutcome::Type(KodairaType::IStar(m as u32)),
                        Some(alpha) => {
                            e = e.change(
                                &UniPoly::zero(),
                                &UniPoly::zero(),
                                &(&c(alpha) * &pi_pow(k)),
                            );
                        }
                    }
                } else {
                    let a = res(&e.a2, 1);
                    let b = res(&e.a4, (m + 4) / 2);
                    let cc = res(&e.a6, m + 3);
                    match double_root(&a, &b, &cc) {
                        None => return TateOutcome::Type(KodairaType::IStar(m as u32)),
                        Some(alpha) => {
                            let k = (m + 2) / 2;
                            e = e.change(
                                &(&c(alpha) * &pi_pow(k)),
                                &UniPoly::zero(),
                                &UniPoly::zero(),
                            );
                        }
                    }
                }
                m += 1;
                assert!(m <= n, "I_m* loop ran past v(disc)");
            }
        }
        Some(2) => {}
        other => panic!("unexpected gcd degree {other:?}"),
    }

    // Step 8: triple root, move it to T = 0.
    let r0 = -res(&e.a2, 1) / q(3);
    e = e.change(&(&c(r0) * &pi_pow(1)), &UniPoly::zero(), &UniPoly::zero());
    assert!(divisible(&e.a2, 2) && divisible(&e.a4, 3) && divisible(&e.a6, 4));
    let b = res(&e.a3, 2);
    let cc = -res(&e.a6, 4);
    match double_root(&q(1), &b, &cc) {
        None => return TateOutcome::Type(KodairaType::IVStar),
        Some(alpha) => {
            e = e.change(
                &UniPoly::zero(),
                &UniPoly::zero(),
                &(&c(alpha) * &pi_pow(2)),
            );
        }
    }

    // Step 9.
    if !divisible(&e.a4, 4) {
        return TateOutcome::Type(KodairaType::IIIStar);
    }
    // Step 10.
    if !divisible(&e.a6, 6) {
        return TateOutcome::Type(KodairaType::IIStar);
    }
    TateOutcome::NonMinimal
}

/// The eleven table rows, each as an explicit short model `(A, B)` at t = 0,
/// written as coefficient lists in t.
pub fn table_models() -> Vec<(&'static str, Vec<i64>, Vec<i64>)> {
    vec![
        ("I0", vec![1], vec![1]),
        ("I3", vec![-3], vec![2, 0, 0, 1]),
        ("II", vec![0, 1], vec![0, 1]),
        ("III", vec![0, 1], vec![0, 0, 1]),
        ("IV", vec![0, 0, 1], vec![0, 0, 1]),
        ("I0*", vec![0, 0, 1], vec![0, 0, 0, 1]),
        ("I2*", vec![0, 0, -3], vec![0, 0, 0, 2, 0, 1]),
        ("IV*", vec![0, 0, 0, 1], vec![0, 0, 0, 0, 1]),
        ("III*", vec![0, 0, 0, 1], vec![0, 0, 0, 0, 0, 1]),
        ("II*", vec![0, 0, 0, 0, 1], vec![0, 0, 0, 0, 0, 1]),
        (
            "non-minimal",
            vec![0, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 0, 0, 1],
        ),
    ]
}
