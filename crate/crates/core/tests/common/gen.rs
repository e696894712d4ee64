//! Seeded generators shared by the property and acceptance tests.

use ellfib::exactmath::{DivisorP1, Mat2, Place, Rational, UniPoly};
use ellfib::stability::LogTwistedCurve;
use ellfib::weierstrass::{minimalize, FiberConfig, FiberEntry, KodairaType, WeierstrassModel};
use ellfib::{int, rat};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const SINGULAR_TYPES: [KodairaType; 19] = [
    KodairaType::I(1),
    KodairaType::I(2),
    KodairaType::I(3),
    KodairaType::I(4),
    KodairaType::I(5),
    KodairaType::I(6),
    KodairaType::I(7),
    KodairaType::I(8),
    KodairaType::I(9),
    KodairaType::II,
    KodairaType::III,
    KodairaType::IV,
    KodairaType::IStar(0),
    KodairaType::IStar(1),
    KodairaType::IStar(2),
    KodairaType::IStar(4),
    KodairaType::IVStar,
    KodairaType::IIIStar,
    KodairaType::IIStar,
];

/// Euler number, written out here rather than borrowed from the library.
pub fn euler_of(kind: KodairaType) -> u32 {
    match kind {
        KodairaType::I(n) => n,
        KodairaType::II => 2,
        KodairaType::III => 3,
        KodairaType::IV => 4,
        KodairaType::IStar(n) => n + 6,
        KodairaType::IVStar => 8,
        KodairaType::IIIStar => 9,
        KodairaType::IIStar => 10,
    }
}

/// Random fibers with Euler numbers summing to 12, filled up with `I1`.
pub fn random_fibers(rng: &mut ChaCha8Rng) -> Vec<KodairaType> {
    let mut left = 12;
    let mut out = Vec::new();
    let picks = rng.random_range(0..4);
    for _ in 0..picks {
        let k = SINGULAR_TYPES[rng.random_range(0..SINGULAR_TYPES.len())];
        if euler_of(k) <= left {
            left -= euler_of(k);
            out.push(k);
        }
    }
    out.extend(std::iter::repeat_n(KodairaType::I(1), left as usize));
    out
}

/// A chi = 1 configuration with multiplicity `m`; the multiple fiber is
/// `m I_N` with `N` taken out of the I1 budget when possible.
pub fn random_config(rng: &mut ChaCha8Rng, m: u32) -> FiberConfig {
    let mut fibers = random_fibers(rng);
    let mut entries = Vec::new();
    if m > 1 {
        let ones = fibers.iter().filter(|k| **k == KodairaType::I(1)).count() as u32;
        let n = rng.random_range(0..=ones.min(3));
        for _ in 0..n {
            let i = fibers.iter().position(|k| *k == KodairaType::I(1)).unwrap();
            fibers.remove(i);
        }
        entries.push(FiberEntry::new(KodairaType::I(n), m, 1));
    }
    entries.extend(fibers.into_iter().map(|k| FiberEntry::new(k, 1, 1)));
    FiberConfig::new(1, entries)
}

pub fn config_of(m: u32, kinds: &[KodairaType]) -> FiberConfig {
    let mut entries = Vec::new();
    let used: u32 = kinds.iter().map(|k| euler_of(*k)).sum();
    if m > 1 {
        entries.push(FiberEntry::new(KodairaType::I(0), m, 1));
    }
    entries.extend(kinds.iter().map(|k| FiberEntry::new(*k, 1, 1)));
    if used < 12 {
        entries.push(FiberEntry::new(KodairaType::I(1), 1, 12 - used));
    }
    FiberConfig::new(1, entries)
}

pub fn random_rational(rng: &mut ChaCha8Rng, max_den: i64) -> Rational {
    let q = rng.random_range(1..=max_den);
    let p = rng.random_range(0..q);
    rat(p, q)
}

/// A rational log-twisted Fano curve polarized by `-(K + B + T)`, boundary
/// on rational points `t = 0, 1, 2, ...`.
pub fn random_fano_curve(rng: &mut ChaCha8Rng, max_den: i64) -> LogTwistedCurve {
    loop {
        let n = rng.random_range(0..5);
        let boundary = DivisorP1::from_terms(
            (0..n).map(|i| (Place::rational_point(int(i)), random_rational(rng, max_den))),
        );
        let twist = if rng.random_bool(0.5) {
            Rational::zero()
        } else {
            random_rational(rng, max_den)
        };
        if let Ok(c) = LogTwistedCurve::anticanonical(boundary, twist) {
            return c;
        }
    }
}

fn small_poly(rng: &mut ChaCha8Rng, degree: usize, height: i64) -> UniPoly {
    UniPoly::from_i64(
        &(0..=degree)
            .map(|_| rng.random_range(-height..=height))
            .collect::<Vec<_>>(),
    )
}

/// Random chi = 1 model with coefficients of height at most `height`,
/// biased towards singular fibers: `A` and `B` often share planted roots.
pub fn random_model(rng: &mut ChaCha8Rng, height: i64) -> WeierstrassModel {
    loop {
        let (a, b) = if rng.random_bool(0.5) {
            (small_poly(rng, 4, height), small_poly(rng, 6, height))
        } else {
            let r = rng.random_range(-2..=2i64);
            let lin = UniPoly::from_i64(&[-r, 1]);
            let ka = rng.random_range(0..=4u32);
            let kb = rng.random_range(0..=6u32);
            let a = if rng.random_bool(0.2) {
                UniPoly::zero()
            } else {
                &lin.pow(ka) * &small_poly(rng, 4 - ka as usize, 3)
            };
            (a, &lin.pow(kb) * &small_poly(rng, 6 - kb as usize, 3))
        };
        let Ok(model) = WeierstrassModel::from_polys(&a, &b, 1) else {
            continue;
        };
        if let Ok((min, _)) = minimalize(&model) {
            return min;
        }
    }
}

pub fn random_gl2(rng: &mut ChaCha8Rng) -> Mat2 {
    loop {
        let e: Vec<i64> = (0..4).map(|_| rng.random_range(-3..=3)).collect();
        if e[0] * e[3] - e[1] * e[2] != 0 {
            return [[int(e[0]), int(e[1])], [int(e[2]), int(e[3])]];
        }
    }
}
