//! Representation files: a group plus one matrix per generator.
//!
//! ```json
//! { "group": "borromean", "images": { "a": [["2+i", "2i"], ["-1", "-i"]], ... } }
//! ```
//!
//! `group` is a builtin name (simplified Wirtinger presentation) or an
//! object `{"generators": [...], "relators": ["a b a^-1 b^-1", ...]}`.
//! Entries are strings like `2-3i` or pairs `[re, im]`.

use std::collections::BTreeMap;
use std::fs;

use num::complex::Complex64;
use quandlekit::diagram::{builtin, Builtin};
use quandlekit::parabolic::Mat2;
use quandlekit::presentations::{wirtinger_presentation, Eliminate, GroupPresentation};
use quandlekit::representation::MoebiusRepresentation;
use serde::Deserialize;

use crate::CliError;

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupSpec {
    Builtin(String),
    Explicit { generators: Vec<String>, relators: Vec<String> },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Text(String),
    Real(f64),
    Pair([f64; 2]),
}

#[derive(Deserialize)]
struct RepFile {
    group: GroupSpec,
    images: BTreeMap<String, [[Entry; 2]; 2]>,
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` with optional spaces.
pub fn parse_complex(text: &str) -> Option<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0));
    };
    // split before the last sign that is not an exponent sign or the leading sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => t.parse::<f64>().ok()?,
    };
    Some(Complex64::new(re.parse::<f64>().ok()?, im))
}

fn entry_value(e: &Entry) -> Result<Complex64, String> {
    match e {
        Entry::Text(t) => parse_complex(t).ok_or_else(|| format!("bad complex number `{t}`")),
        Entry::Real(r) => Ok(Complex64::new(*r, 0.0)),
        Entry::Pair([re, im]) => Ok(Complex64::new(*re, *im)),
    }
}

fn group_of(spec: &GroupSpec) -> Result<GroupPresentation, String> {
    match spec {
        GroupSpec::Builtin(name) => {
            let b: Builtin = name.parse()?;
            Ok(wirtinger_presentation(&builtin(b)).eliminate())
        }
        GroupSpec::Explicit { generators, relators } => {
            let mut g = GroupPresentation { generator_names: generators.clone(), relators: Vec::new() };
            for r in relators {
                g.relators.push(g.parse_word(r).map_err(|e| e.to_string())?);
            }
            Ok(g)
        }
    }
}

pub fn load(path: &str) -> Result<MoebiusRepresentation, CliError> {
    let err = |why: String| CliError::Input(format!("{path}: {why}"));
    let text = fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
    let file: RepFile = serde_json::from_str(&text).map_err(|e| err(e.to_string()))?;
    let g = group_of(&file.group).map_err(err)?;
    let mut images = Vec::new();
    for name in &g.generator_names {
        let m = file.images.get(name).ok_or_else(|| err(format!("no image for generator `{name}`")))?;
        let v = |r: usize, c: usize| entry_value(&m[r][c]).map_err(err);
        images.push(Mat2::new(v(0, 0)?, v(0, 1)?, v(1, 0)?, v(1, 1)?));
    }
    if let Some(extra) = file.images.keys().find(|k| !g.generator_names.contains(k)) {
        return Err(err(format!("image for unknown generator `{extra}`")));
    }
    MoebiusRepresentation::new(g.generator_names.clone(), images, &g).map_err(|e| err(e.to_string()))
}
