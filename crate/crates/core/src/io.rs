//! JSON scheme files.
//!
//! ```json
//! {"cartan": {"x": [[2,-1],[-1,2]]}, "objects": ["x"], "rank": 2,
//!  "reflections": {"1": {"x": "x"}, "2": {"x": "x"}}}
//! ```
//!
//! Reflection keys are the index labels `"1"`..`"θ"`; every reflection maps
//! every object name to an object name. Unknown keys are rejected. Output is
//! written with sorted keys.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scheme::{CartanScheme, RawScheme, SchemeError};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SchemeFile {
    cartan: BTreeMap<String, Vec<Vec<i64>>>,
    objects: Vec<String>,
    rank: usize,
    reflections: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed scheme file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("reflection key {0:?} is not an index in 1..={1}")]
    BadIndexKey(String, usize),
    #[error("reflection {0} is missing")]
    MissingReflection(usize),
    #[error("reflection {index} has no image for object {object:?}")]
    MissingImage { index: usize, object: String },
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("no Cartan matrix for object {0:?}")]
    MissingMatrix(String),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// Parses scheme JSON into unvalidated data.
pub fn parse_raw_scheme(text: &str) -> Result<RawScheme, FormatError> {
    let file: SchemeFile = serde_json::from_str(text)?;
    let index_of: HashMap<&str, usize> =
        file.objects.iter().enumerate().map(|(k, o)| (o.as_str(), k)).collect();
    let lookup =
        |name: &str| index_of.get(name).copied().ok_or_else(|| FormatError::UnknownObject(name.to_string()));

    let mut reflections = vec![None; file.rank];
    for (key, map) in &file.reflections {
        let i = key
            .parse::<usize>()
            .ok()
            .filter(|i| (1..=file.rank).contains(i))
            .ok_or_else(|| FormatError::BadIndexKey(key.clone(), file.rank))?;
        for source in map.keys() {
            lookup(source)?;
        }
        let images = file
            .objects
            .iter()
            .map(|o| {
                let target =
                    map.get(o).ok_or_else(|| FormatError::MissingImage { index: i, object: o.clone() })?;
                lookup(target)
            })
            .collect::<Result<Vec<_>, _>>()?;
        reflections[i - 1] = Some(images);
    }
    let reflections = reflections
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or(FormatError::MissingReflection(i + 1)))
        .collect::<Result<Vec<_>, _>>()?;

    for name in file.cartan.keys() {
        lookup(name)?;
    }
    let matrices = file
        .objects
        .iter()
        .map(|o| file.cartan.get(o).cloned().ok_or_else(|| FormatError::MissingMatrix(o.clone())))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(RawScheme { rank: file.rank, objects: file.objects, reflections, matrices })
}

/// Parses and validates a scheme file.
pub fn parse_scheme(text: &str) -> Result<CartanScheme, FormatError> {
    Ok(parse_raw_scheme(text)?.validate()?)
}

fn to_file(s: &CartanScheme) -> SchemeFile {
    let name = |a: usize| s.object_name(a).to_string();
    SchemeFile {
        cartan: (0..s.object_count()).map(|a| (name(a), s.matrix(a).rows())).collect(),
        objects: s.objects().to_vec(),
        rank: s.rank(),
        reflections: (0..s.rank())
            .map(|i| {
                let map = (0..s.object_count()).map(|a| (name(a), name(s.reflect(i, a)))).collect();
                ((i + 1).to_string(), map)
            })
            .collect(),
    }
}

/// The scheme as a JSON value with sorted keys.
pub fn scheme_to_value(s: &CartanScheme) -> serde_json::Value {
    serde_json::to_value(to_file(s)).expect("scheme data serializes")
}

/// Pretty-printed scheme JSON, newline terminated.
pub fn scheme_to_json(s: &CartanScheme) -> String {
    let mut text = serde_json::to_string_pretty(&to_file(s)).expect("scheme data serializes");
    text.push('\n');
    text
}
