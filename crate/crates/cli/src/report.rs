//! Report types emitted by the subcommands, with their text renderings.

use std::fmt::Write as _;

use ellfib::exactmath::rational::serde_str;
use ellfib::exactmath::{Place, Rational};
use ellfib::stability::{AdiabaticReport, Verdict};
use ellfib::weierstrass::KodairaType;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRow {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub place: Option<Place>,
    /// `(v(A), v(B), v(Delta))`, `"inf"` for a vanishing form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuations: Option<[String; 3]>,
    #[serde(rename = "type")]
    pub kind: KodairaType,
    pub m: u32,
    pub deg: u32,
    #[serde(with = "serde_str")]
    pub lct: Rational,
    pub euler: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub chi: u32,
    /// Places divided out by `--minimalize`, one per step.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub minimalized_at: Vec<Place>,
    pub fibers: Vec<FiberRow>,
    pub euler_sum: u32,
    pub euler_expected: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitsReport {
    #[serde(with = "serde_str")]
    pub alpha: Rational,
    #[serde(with = "serde_str")]
    pub delta: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaPoint {
    pub place: Place,
    #[serde(with = "serde_str")]
    pub coefficient: Rational,
    #[serde(with = "serde_str")]
    pub beta: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaReport {
    #[serde(with = "serde_str")]
    pub boundary_degree: Rational,
    #[serde(with = "serde_str")]
    pub twist: Rational,
    #[serde(with = "serde_str")]
    pub polarization: Rational,
    pub points: Vec<BetaPoint>,
    #[serde(with = "serde_str")]
    pub delta: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsReport {
    pub mu: i64,
    /// Donaldson-Futaki invariant of the matching point degeneration of
    /// the base, when there is one.
    #[serde(with = "opt_rational")]
    pub df: Option<Rational>,
}

mod opt_rational {
    use ellfib::exactmath::rational::{fmt_rational, parse_rational};
    use ellfib::exactmath::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(r) => s.serialize_str(&fmt_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        match Option::<String>::deserialize(d)? {
            Some(text) => parse_rational(&text)
                .map(Some)
                .ok_or_else(|| D::Error::custom(format!("not a rational: {text:?}"))),
            None => Ok(None),
        }
    }
}

pub fn classify_text(r: &ClassifyReport) -> String {
    let mut out = String::new();
    if !r.minimalized_at.is_empty() {
        let places: Vec<String> = r.minimalized_at.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "minimalized at: {}", places.join(", "));
    }
    let _ = writeln!(out, "chi = {}", r.chi);
    let _ = writeln!(
        out,
        "{:<16} {:>5} {:>5} {:>5}  {:<6} {:>3} {:>3}  {:<5} {:>5}",
        "place", "v(A)", "v(B)", "v(D)", "type", "m", "deg", "lct", "euler"
    );
    for f in &r.fibers {
        let place = f
            .place
            .as_ref()
            .map_or_else(|| "-".to_string(), ToString::to_string);
        let [va, vb, vd] = f
            .valuations
            .clone()
            .unwrap_or_else(|| ["-".into(), "-".into(), "-".into()]);
        let _ = writeln!(
            out,
            "{:<16} {:>5} {:>5} {:>5}  {:<6} {:>3} {:>3}  {:<5} {:>5}",
            place,
            va,
            vb,
            vd,
            f.kind.to_string(),
            f.m,
            f.deg,
            f.lct.to_string(),
            f.euler
        );
    }
    let status = if r.euler_sum == r.euler_expected {
        "ok"
    } else {
        "MISMATCH"
    };
    let _ = writeln!(
        out,
        "sum of Euler numbers: {} (12 chi = {}): {status}",
        r.euler_sum, r.euler_expected
    );
    out
}

fn verdict_line(label: &str, v: &Verdict) -> String {
    let mut line = format!("{label:<6} {} ({})", v.tag, v.by);
    if let Some(w) = &v.witness {
        let _ = write!(line, "\n       witness: {w}");
    }
    if let Some(n) = &v.note {
        let _ = write!(line, "\n       note: {n}");
    }
    line
}

pub fn verdict_text(r: &AdiabaticReport) -> String {
    format!(
        "{}\n{}\ncscK:  {:?}\nalpha limit {}, delta limit {}\n",
        verdict_line("base:", &r.base),
        verdict_line("total:", &r.total),
        r.csck_note,
        r.alpha_limit,
        r.delta_limit
    )
}

pub fn limits_text(r: &LimitsReport) -> String {
    format!("alpha limit {}\ndelta limit {}\n", r.alpha, r.delta)
}

pub fn beta_text(r: &BetaReport) -> String {
    let mut out = format!(
        "deg B = {}, twist = {}, deg L = {}\n{:<16} {:>8} {:>10}\n",
        r.boundary_degree, r.twist, r.polarization, "place", "coeff", "beta"
    );
    for p in &r.points {
        let _ = writeln!(
            out,
            "{:<16} {:>8} {:>10}",
            p.place.to_string(),
            p.coefficient.to_string(),
            p.beta.to_string()
        );
    }
    let _ = writeln!(out, "delta = {}", r.delta);
    out
}

pub fn weights_text(r: &WeightsReport) -> String {
    match &r.df {
        Some(df) => format!("mu = {}\ndf = {df}\n", r.mu),
        None => format!("mu = {}\ndf = n/a\n", r.mu),
    }
}
