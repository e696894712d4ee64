//! Grid scans over families of models whose literals contain parameters.

use std::collections::BTreeMap;
use std::io::Write;

use ellfib::batch::{evaluate_model, map_ordered};
use ellfib::exactmath::parse::{parse_multi, specialize, to_unipoly, MultiPoly};
use ellfib::exactmath::rational::{fmt_rational, parse_rational};
use ellfib::exactmath::{BinaryForm, Rational};
use ellfib::weierstrass::{minimalize, WeierstrassModel};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::CliError;

pub const CAP_VAR: &str = "ELLFIB_SCAN_CAP";
pub const DEFAULT_CAP: usize = 10_000;
pub const HEADER: [&str; 4] = ["A-coeffs", "B-coeffs", "types", "verdict"];

/// One parameter and its inclusive arithmetic range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange {
    pub name: String,
    pub start: Rational,
    pub end: Rational,
    pub step: Rational,
}

impl ParamRange {
    /// `name=start:end:step`, rationals as `p` or `p/q`.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let bad = |why: &str| {
            CliError::Input(format!(
                "--param {text:?}: {why}; expected name=start:end:step"
            ))
        };
        let (name, range) = text.split_once('=').ok_or_else(|| bad("missing '='"))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphabetic()) || name == "t" {
            return Err(bad("parameter names are letters other than t"));
        }
        let parts: Vec<&str> = range.split(':').collect();
        let [start, end, step] = parts[..] else {
            return Err(bad("need three fields"));
        };
        let num =
            |s: &str| parse_rational(s).ok_or_else(|| bad(&format!("{s:?} is not a rational")));
        let (start, end, step) = (num(start)?, num(end)?, num(step)?);
        if step <= Rational::zero() {
            return Err(bad("step must be positive"));
        }
        Ok(ParamRange {
            name: name.to_string(),
            start,
            end,
            step,
        })
    }

    pub fn len(&self) -> usize {
        if self.end < self.start {
            return 0;
        }
        ((&self.end - &self.start) / &self.step)
            .floor()
            .to_integer()
            .to_usize()
            .map_or(usize::MAX, |n| n.saturating_add(1))
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn value(&self, i: usize) -> Rational {
        &self.start + &self.step * Rational::from_integer(i.into())
    }
}

pub fn scan_cap() -> Result<usize, CliError> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{CAP_VAR}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub a_coeffs: String,
    pub b_coeffs: String,
    pub types: String,
    pub verdict: String,
    pub flagged: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub flagged: usize,
    pub strata: BTreeMap<String, usize>,
}

fn coeffs(form: &BinaryForm) -> String {
    form.coeffs()
        .iter()
        .map(fmt_rational)
        .collect::<Vec<_>>()
        .join(" ")
}

fn evaluate_point(a: &MultiPoly, b: &MultiPoly, chi: u32, values: &[(usize, Rational)]) -> Row {
    let pa = to_unipoly(&specialize(a, &[0], values));
    let pb = to_unipoly(&specialize(b, &[0], values));
    let flag = |a_coeffs: String, b_coeffs: String, why: String| Row {
        a_coeffs,
        b_coeffs,
        types: String::new(),
        verdict: format!("FLAGGED: {why}"),
        flagged: true,
    };
    let model = match WeierstrassModel::from_polys(&pa, &pb, chi) {
        Ok(m) => m,
        Err(e) => return flag(pa.to_string(), pb.to_string(), e.to_string()),
    };
    let (a_coeffs, b_coeffs) = (coeffs(model.a()), coeffs(model.b()));
    let minimal = match minimalize(&model) {
        Ok((m, _)) => m,
        Err(e) => return flag(a_coeffs, b_coeffs, e.to_string()),
    };
    match evaluate_model(&minimal) {
        Ok((config, report)) => {
            let types = config
                .entries
                .iter()
                .map(|e| match &e.place {
                    Some(p) => format!("{}@{p}", e.kind),
                    None => e.kind.to_string(),
                })
                .collect::<Vec<_>>()
                .join(";");
            Row {
                a_coeffs,
                b_coeffs,
                types,
                verdict: report.base.tag.to_string(),
                flagged: false,
            }
        }
        Err(e) => flag(a_coeffs, b_coeffs, e.to_string()),
    }
}

/// Evaluates the family on every grid point; rows come back in grid order
/// with the last parameter varying fastest.
pub fn run_scan(
    a: &str,
    b: &str,
    chi: u32,
    params: &[ParamRange],
    cap: usize,
) -> Result<Vec<Row>, CliError> {
    let mut vars = vec!["t"];
    for (i, p) in params.iter().enumerate() {
        if params[..i].iter().any(|q| q.name == p.name) {
            return Err(CliError::Input(format!("parameter {} given twice", p.name)));
        }
        vars.push(&p.name);
    }
    let literal = |what: &str, text: &str| {
        parse_multi(text, &vars).map_err(|e| CliError::Input(format!("--{what}: line 1, {e}")))
    };
    let (ma, mb) = (literal("A", a)?, literal("B", b)?);

    let total = params
        .iter()
        .try_fold(1usize, |acc, p| acc.checked_mul(p.len()));
    let total = match total {
        Some(n) if n <= cap => n,
        n => {
            let widest = params
                .iter()
                .max_by_key(|p| p.len())
                .map_or("the widest parameter", |p| p.name.as_str());
            let shown = n.map_or_else(|| "too many".to_string(), |n| n.to_string());
            let pieces = n.map_or(usize::MAX, |n| n.div_ceil(cap));
            return Err(CliError::Input(format!(
                "grid has {shown} points, over the cap of {cap} ({CAP_VAR}); \
                 split the range of {widest} into {pieces} pieces"
            )));
        }
    };

    let points: Vec<Vec<(usize, Rational)>> = (0..total)
        .map(|mut flat| {
            let mut values = vec![Default::default(); params.len()];
            for (i, p) in params.iter().enumerate().rev() {
                values[i] = (i + 1, p.value(flat % p.len()));
                flat /= p.len();
            }
            values
        })
        .collect();
    Ok(map_ordered(&points, |values| {
        evaluate_point(&ma, &mb, chi, values)
    }))
}

pub fn summarize(rows: &[Row]) -> Summary {
    let mut s = Summary {
        rows: rows.len(),
        ..Default::default()
    };
    for r in rows {
        if r.flagged {
            s.flagged += 1;
        } else {
            *s.strata.entry(r.verdict.clone()).or_default() += 1;
        }
    }
    s
}

pub fn write_csv(rows: &[Row], out: impl Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(HEADER).map_err(io)?;
    for r in rows {
        w.write_record([&r.a_coeffs, &r.b_coeffs, &r.types, &r.verdict])
            .map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ellfib::{int, rat};

    #[test]
    fn range_lengths() {
        let r = ParamRange::parse("c=0:2:1").unwrap();
        assert_eq!((r.len(), r.value(2)), (3, int(2)));
        assert_eq!(ParamRange::parse("c=0:1:1/3").unwrap().len(), 4);
        assert_eq!(ParamRange::parse("c=0:1:2/3").unwrap().len(), 2);
        assert!(ParamRange::parse("c=1:0:1").unwrap().is_empty());
        assert_eq!(
            ParamRange::parse("c=-1/2:1/2:1/2").unwrap().value(1),
            rat(0, 1)
        );
    }

    #[test]
    fn bad_ranges() {
        for text in ["c", "c=0:1", "c=0:1:0", "c=0:x:1", "t=0:1:1", "=0:1:1"] {
            assert!(ParamRange::parse(text).is_err(), "{text}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let p = vec![
            ParamRange::parse("c=0:99:1").unwrap(),
            ParamRange::parse("d=0:9:1").unwrap(),
        ];
        let err = run_scan("c", "t + d", 1, &p, 500).unwrap_err().to_string();
        assert!(
            err.contains("1000 points") && err.contains("split the range of c into 2"),
            "{err}"
        );
    }

    #[test]
    fn one_parameter_family() {
        let p = vec![ParamRange::parse("c=0:2:1").unwrap()];
        let rows = run_scan("0", "t + c*t^6", 1, &p, 100).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].types, "II*@infinity;II@t");
        assert_eq!(rows[0].verdict, "KUnstable");
        assert_eq!(rows[1].b_coeffs, "0 1 0 0 0 0 1");
        assert!(rows.iter().all(|r| !r.flagged));
    }
}
