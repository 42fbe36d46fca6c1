//! The `scx-1` JSON interchange format.
//!
//! `{"format":"scx-1","vertex_count":N,"maximal_simplices":[[...],...],"labels":[...]}`
//! with `labels` optional. Labels are checked against the morse constraint on load.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::generators::LabeledComplex;
use crate::morse::MorseLabeling;

pub const FORMAT: &str = "scx-1";

#[derive(Serialize, Deserialize)]
struct ScxJson {
    format: String,
    vertex_count: usize,
    maximal_simplices: Vec<Simplex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<i64>>,
}

/// Parses SCX text.
pub fn parse_scx(text: &str) -> Result<LabeledComplex> {
    let raw: ScxJson = serde_json::from_str(text)?;
    if raw.format != FORMAT {
        return Err(Error::Format(format!("expected format {FORMAT:?}, found {:?}", raw.format)));
    }
    let complex = SimplicialComplex::build(&raw.maximal_simplices, raw.vertex_count)?;
    let labeling = match raw.labels {
        Some(l) => Some(MorseLabeling::checked(&complex, l)?),
        None => None,
    };
    Ok(LabeledComplex { complex, labeling })
}

/// Serializes to SCX text, one line per maximal simplex.
pub fn to_scx_string(lc: &LabeledComplex) -> String {
    let raw = ScxJson {
        format: FORMAT.to_string(),
        vertex_count: lc.complex.vertex_count(),
        maximal_simplices: lc.complex.maximal_simplices(),
        labels: lc.labeling.as_ref().map(|f| f.labels().to_vec()),
    };
    let tops: Vec<String> =
        raw.maximal_simplices.iter().map(|s| serde_json::to_string(s).expect("simplex serializes")).collect();
    let mut out = format!(
        "{{\n  \"format\": \"{}\",\n  \"vertex_count\": {},\n  \"maximal_simplices\": [\n    {}\n  ]",
        raw.format,
        raw.vertex_count,
        tops.join(",\n    ")
    );
    if let Some(l) = &raw.labels {
        out.push_str(&format!(",\n  \"labels\": {}", serde_json::to_string(l).expect("labels serialize")));
    }
    out.push_str("\n}\n");
    out
}

pub fn load_scx(path: impl AsRef<Path>) -> Result<LabeledComplex> {
    parse_scx(&fs::read_to_string(path)?)
}

pub fn save_scx(path: impl AsRef<Path>, lc: &LabeledComplex) -> Result<()> {
    fs::write(path, to_scx_string(lc))?;
    Ok(())
}
