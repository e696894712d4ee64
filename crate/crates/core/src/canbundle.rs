//! Canonical bundle formula on the base: log canonical thresholds of
//! fibers, the discriminant divisor `B` and the degree of the moduli part.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmath::{DivisorP1, Place, Rational, UniPoly};
use crate::weierstrass::{FiberConfig, KodairaType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanBundleError {
    #[error("additive fibers cannot be multiple ({kind} with m = {m})")]
    AdditiveMultiple { kind: KodairaType, m: u32 },
    #[error("multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("invalid fiber configuration: {}", join(.0))]
    Invalid(Vec<Violation>),
}

fn join(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ZeroChi,
    EulerSum {
        got: u32,
        expected: u32,
    },
    ZeroPlaceDegree {
        index: usize,
    },
    ZeroMultiplicity {
        index: usize,
    },
    AdditiveMultiple {
        index: usize,
        kind: KodairaType,
        m: u32,
    },
    TooManyMultiple {
        count: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroChi => write!(f, "chi must be positive"),
            Violation::EulerSum { got, expected } => {
                write!(f, "Euler numbers sum to {got}, expected {expected}")?;
                if got < expected {
                    write!(f, " (deficit {})", expected - got)
                } else {
                    write!(f, " (excess {})", got - expected)
                }
            }
            Violation::ZeroPlaceDegree { index } => {
                write!(f, "fiber {index}: place degree must be positive")
            }
            Violation::ZeroMultiplicity { index } => {
                write!(f, "fiber {index}: multiplicity must be positive")
            }
            Violation::AdditiveMultiple { index, kind, m } => {
                write!(f, "fiber {index}: {kind} cannot have multiplicity {m}")
            }
            Violation::TooManyMultiple { count } => {
                write!(
                    f,
                    "{count} multiple fibers; at most one is allowed when chi = 1"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LctEntry {
    pub kind: KodairaType,
    pub lct: Rational,
    pub euler: u32,
}

pub fn euler(kind: KodairaType) -> u32 {
    match kind {
        KodairaType::I(n) => n,
        KodairaType::II => 2,
        KodairaType::III => 3,
        KodairaType::IV => 4,
        KodairaType::IStar(n) => 6 + n,
        KodairaType::IVStar => 8,
        KodairaType::IIIStar => 9,
        KodairaType::IIStar => 10,
    }
}

/// lct of a reduced fiber of the given type.
pub fn lct(kind: KodairaType) -> Rational {
    let (n, d) = match kind {
        KodairaType::I(_) => (1, 1),
        KodairaType::II => (5, 6),
        KodairaType::III => (3, 4),
        KodairaType::IV => (2, 3),
        KodairaType::IStar(_) => (1, 2),
        KodairaType::IVStar => (1, 3),
        KodairaType::IIIStar => (1, 4),
        KodairaType::IIStar => (1, 6),
    };
    Rational::new(n.into(), d.into())
}

pub fn lct_entry(kind: KodairaType) -> LctEntry {
    LctEntry {
        kind,
        lct: lct(kind),
        euler: euler(kind),
    }
}

/// lct of `m F` where `F` has the given reduced type.
pub fn lct_of_fiber(kind: KodairaType, m: u32) -> Result<Rational, CanBundleError> {
    match m {
        0 => Err(CanBundleError::ZeroMultiplicity),
        1 => Ok(lct(kind)),
        _ if kind.is_additive() => Err(CanBundleError::AdditiveMultiple { kind, m }),
        _ => Ok(Rational::new(1.into(), m.into())),
    }
}

/// Contribution of one point with this fiber type to `deg M`: `N/12` for
/// `I_N` and `I_N*`, zero otherwise. The multiplicity does not enter.
pub fn moduli_contribution(kind: KodairaType) -> Rational {
    let e = Rational::from_integer(euler(kind).into());
    let twelve = Rational::from_integer(12.into());
    (e - &twelve * (Rational::one() - lct(kind))) / twelve
}

pub fn validate_config(config: &FiberConfig) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    if config.chi == 0 {
        violations.push(Violation::ZeroChi);
    }
    let mut multiple_points = 0;
    for (index, e) in config.entries.iter().enumerate() {
        if e.place_degree == 0 {
            violations.push(Violation::ZeroPlaceDegree { index });
        }
        if e.multiplicity == 0 {
            violations.push(Violation::ZeroMultiplicity { index });
        }
        if e.multiplicity > 1 {
            multiple_points += e.place_degree;
            if e.kind.is_additive() {
                violations.push(Violation::AdditiveMultiple {
                    index,
                    kind: e.kind,
                    m: e.multiplicity,
                });
            }
        }
    }
    let got: u32 = config
        .entries
        .iter()
        .map(|e| e.place_degree * euler(e.kind))
        .sum();
    let expected = 12 * config.chi;
    if got != expected {
        violations.push(Violation::EulerSum { got, expected });
    }
    if config.chi == 1 && multiple_points > 1 {
        violations.push(Violation::TooManyMultiple {
            count: multiple_points,
        });
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseData {
    pub discriminant: DivisorP1,
    pub moduli_degree: Rational,
    pub chi: u32,
    /// Places carrying a multiple fiber, with the multiplicity.
    pub multiple: Vec<(Place, u32)>,
    /// `place_degree * moduli_contribution` per config entry, in order.
    pub moduli_parts: Vec<Rational>,
}

impl BaseData {
    pub fn boundary_degree(&self) -> Rational {
        self.discriminant.degree()
    }

    /// `deg B + deg M`.
    pub fn total_degree(&self) -> Rational {
        self.discriminant.degree() + &self.moduli_degree
    }
}

/// Stand-in places for entries that were given without a position: products
/// of `t - 1, t - 2, ...`, skipping anything already in use.
pub(crate) fn assign_places(config: &FiberConfig) -> Vec<Place> {
    let used: BTreeSet<Place> = config
        .entries
        .iter()
        .filter_map(|e| e.place.clone())
        .collect();
    let mut next = 1i64;
    let mut fresh = || loop {
        let q = UniPoly::from_i64(&[-next, 1]);
        next += 1;
        if !used.iter().any(|p| match p {
            Place::Finite { q: pq, .. } => !pq.gcd(&q).is_constant(),
            Place::Infinity => false,
        }) {
            return q;
        }
    };
    config
        .entries
        .iter()
        .map(|e| match &e.place {
            Some(p) => p.clone(),
            None => {
                let mut q = UniPoly::one();
                for _ in 0..e.place_degree.max(1) {
                    q = &q * &fresh();
                }
                Place::finite(q)
            }
        })
        .collect()
}

pub fn base_data(config: &FiberConfig) -> Result<BaseData, CanBundleError> {
    validate_config(config).map_err(CanBundleError::Invalid)?;
    let places = assign_places(config);
    let mut discriminant = DivisorP1::new();
    let mut moduli_degree = Rational::zero();
    let mut multiple = Vec::new();
    let mut moduli_parts = Vec::new();
    for (e, place) in config.entries.iter().zip(places) {
        let coefficient = Rational::one() - lct_of_fiber(e.kind, e.multiplicity)?;
        let part = moduli_contribution(e.kind) * Rational::from_integer(e.place_degree.into());
        assert!(
            part >= Rational::zero(),
            "negative moduli contribution for {}",
            e.kind
        );
        moduli_degree += &part;
        moduli_parts.push(part);
        if e.multiplicity > 1 {
            multiple.push((place.clone(), e.multiplicity));
        }
        if !coefficient.is_zero() {
            discriminant.add_term(place, coefficient);
        }
    }
    Ok(BaseData {
        discriminant,
        moduli_degree,
        chi: config.chi,
        multiple,
        moduli_parts,
    })
}

/// Degree of `K + B + M` on a base of the given genus. `extra_multiple` adds
/// `1 - 1/m` for each further multiple fiber not already recorded in `base`.
pub fn twisted_canonical_degree(genus: u32, base: &BaseData, extra_multiple: &[u32]) -> Rational {
    let mut kappa = Rational::from_integer((2 * i64::from(genus) - 2).into()) + base.total_degree();
    for &m in extra_multiple {
        kappa += Rational::one() - Rational::new(1.into(), m.max(1).into());
    }
    kappa
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};
    use crate::weierstrass::FiberEntry;
    use KodairaType::*;

    fn config(chi: u32, fibers: &[(KodairaType, u32, u32)]) -> FiberConfig {
        FiberConfig::new(
            chi,
            fibers
                .iter()
                .map(|&(k, m, d)| FiberEntry::new(k, m, d))
                .collect(),
        )
    }

    #[test]
    fn lct_values() {
        assert_eq!(lct_of_fiber(IIStar, 1), Ok(rat(1, 6)));
        assert_eq!(lct_of_fiber(I(5), 1), Ok(int(1)));
        assert_eq!(lct_of_fiber(I(0), 3), Ok(rat(1, 3)));
        assert_eq!(
            lct_of_fiber(IV, 2),
            Err(CanBundleError::AdditiveMultiple { kind: IV, m: 2 })
        );
    }

    #[test]
    fn moduli_contributions() {
        assert_eq!(moduli_contribution(I(5)), rat(5, 12));
        assert_eq!(moduli_contribution(IStar(3)), rat(3, 12));
        for k in [II, III, IV, IStar(0), IVStar, IIIStar, IIStar] {
            assert_eq!(moduli_contribution(k), int(0), "{k}");
        }
    }

    #[test]
    fn base_data_examples() {
        let b = base_data(&config(1, &[(IIStar, 1, 1), (II, 1, 1)])).unwrap();
        let mut coeffs: Vec<Rational> = b.discriminant.iter().map(|(_, c)| c.clone()).collect();
        coeffs.sort();
        assert_eq!(coeffs, vec![rat(1, 6), rat(5, 6)]);
        assert_eq!(b.boundary_degree(), int(1));
        assert_eq!(b.moduli_degree, int(0));

        let b = base_data(&config(1, &[(I(1), 1, 12)])).unwrap();
        assert_eq!(b.boundary_degree(), int(0));
        assert_eq!(b.moduli_degree, int(1));

        let b = base_data(&config(1, &[(I(0), 2, 1), (I(1), 1, 12)])).unwrap();
        assert_eq!(b.boundary_degree(), rat(1, 2));
        assert_eq!(b.moduli_degree, int(1));
        assert_eq!(b.total_degree(), rat(3, 2));
        assert_eq!(b.multiple.len(), 1);
    }

    #[test]
    fn validation() {
        assert_eq!(
            validate_config(&config(1, &[(IIStar, 1, 1), (II, 1, 1)])),
            Ok(())
        );
        assert_eq!(
            validate_config(&config(1, &[(IVStar, 1, 1), (I(1), 1, 3)])),
            Err(vec![Violation::EulerSum {
                got: 11,
                expected: 12
            }])
        );
        assert_eq!(
            validate_config(&config(1, &[(I(0), 2, 1), (IVStar, 1, 1), (I(1), 1, 4)])),
            Ok(())
        );
        let errs = validate_config(&config(
            1,
            &[(I(0), 2, 1), (I(0), 3, 1), (IIIStar, 2, 1), (I(1), 1, 3)],
        ))
        .unwrap_err();
        assert!(errs.contains(&Violation::TooManyMultiple { count: 3 }));
        assert!(errs
            .iter()
            .any(|v| matches!(v, Violation::AdditiveMultiple { .. })));
    }

    #[test]
    fn twisted_canonical_examples() {
        let b = base_data(&config(1, &[(IIStar, 1, 1), (II, 1, 1)])).unwrap();
        assert_eq!(twisted_canonical_degree(0, &b, &[]), int(-1));
        let b = base_data(&config(2, &[(I(1), 1, 24)])).unwrap();
        assert_eq!(twisted_canonical_degree(0, &b, &[]), int(0));
        let b = base_data(&config(1, &[(I(1), 1, 12)])).unwrap();
        assert_eq!(twisted_canonical_degree(0, &b, &[2]), rat(-1, 2));
    }

    #[test]
    fn synthetic_places_are_distinct() {
        let c = config(1, &[(I(1), 1, 3), (I(2), 1, 2), (I(1), 1, 5)]);
        let places = assign_places(&c);
        let degrees: Vec<u32> = places.iter().map(Place::degree).collect();
        assert_eq!(degrees, vec![3, 2, 5]);
        let distinct: BTreeSet<_> = places.iter().collect();
        assert_eq!(distinct.len(), 3);
    }
}
