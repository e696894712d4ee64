//! Reading models and fiber configurations from files or inline literals.

use std::fs;
use std::path::Path;

use ellfib::exactmath::parse::{parse_unipoly, ParseError};
use ellfib::exactmath::Place;
use ellfib::weierstrass::{minimalize, FiberConfig, FiberConfigFile, WeierstrassModel};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

/// On-disk model: `{ "chi": 1, "A": "0", "B": "t" }`.
#[derive(Debug, Deserialize)]
struct ModelFile {
    chi: u32,
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
}

#[derive(Debug, Clone)]
pub enum Input {
    Model(WeierstrassModel),
    Config(FiberConfig),
}

fn literal_error(what: &str, e: ParseError) -> CliError {
    CliError::Input(format!("{what}: line 1, {e}"))
}

pub fn model_from_literals(
    a: &str,
    b: &str,
    chi: u32,
    origin: &str,
) -> Result<WeierstrassModel, CliError> {
    let pa = parse_unipoly(a).map_err(|e| literal_error(&format!("{origin}A"), e))?;
    let pb = parse_unipoly(b).map_err(|e| literal_error(&format!("{origin}B"), e))?;
    WeierstrassModel::from_polys(&pa, &pb, chi).map_err(|e| CliError::Input(e.to_string()))
}

pub fn read_file(path: &Path) -> Result<Input, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let is_toml = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("toml"));
    let value: Value = if is_toml {
        toml::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    } else {
        serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    let shape_error = |e: serde_json::Error| CliError::Input(format!("{}: {e}", path.display()));
    if value.get("fibers").is_some() {
        let file: FiberConfigFile = serde_json::from_value(value).map_err(shape_error)?;
        Ok(Input::Config(FiberConfig::from(&file)))
    } else {
        let file: ModelFile = serde_json::from_value(value).map_err(shape_error)?;
        let origin = format!("{}: field ", path.display());
        Ok(Input::Model(model_from_literals(
            &file.a, &file.b, file.chi, &origin,
        )?))
    }
}

/// Resolves the input source; `minimal` divides out non-minimal places.
pub fn load(
    file: Option<&Path>,
    a: Option<&str>,
    b: Option<&str>,
    chi: Option<u32>,
    minimal: bool,
) -> Result<(Input, Vec<Place>), CliError> {
    let input = match (file, a, b) {
        (Some(path), None, None) => read_file(path)?,
        (None, Some(a), Some(b)) => {
            Input::Model(model_from_literals(a, b, chi.unwrap_or(1), "--")?)
        }
        _ => {
            return Err(CliError::Input(
                "give either an input file or both --A and --B".into(),
            ))
        }
    };
    match input {
        Input::Model(m) if minimal => {
            let (m, removed) = minimalize(&m).map_err(|e| CliError::Input(e.to_string()))?;
            Ok((Input::Model(m), removed))
        }
        other => Ok((other, Vec::new())),
    }
}
