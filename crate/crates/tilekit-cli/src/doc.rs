//! The versioned JSON envelope shared by every input and output file.
//!
//! A document is `{"schema": "tilekit/1", "kind": ..., "data": ...}`; the
//! envelope and every payload reject unknown fields.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use tilekit::aztec::{KTiling, KTilingJson, Tiling};
use tilekit::hexagon::KLozengeTiling;
use tilekit::sampler::{CellStatistics, RunOutput};

use crate::CliError;

pub const SCHEMA: &str = "tilekit/1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Envelope {
    pub schema: String,
    pub kind: String,
    pub data: Value,
}

/// A parsed input document.
#[derive(Debug)]
pub enum Document {
    Tiling(Tiling),
    KTiling(KTiling),
    Lozenges(KLozengeTiling),
    Run(Box<RunOutput>),
    Statistics(CellStatistics),
    /// Anything else this tool writes (reports, tables).
    Report(String),
}

/// Wraps a payload.
pub fn envelope(kind: &str, data: impl Serialize) -> Value {
    serde_json::json!({ "schema": SCHEMA, "kind": kind, "data": data })
}

pub fn tiling_value(t: &Tiling) -> Value {
    envelope("tiling", t)
}

pub fn ktiling_value(kt: &KTiling) -> Value {
    envelope("ktiling", KTilingJson::from(kt))
}

fn bad(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("malformed input: {e}"))
}

/// Parses a document, validating the payload.
pub fn parse(text: &str) -> Result<Document, CliError> {
    let env: Envelope = serde_json::from_str(text).map_err(bad)?;
    if env.schema != SCHEMA {
        return Err(CliError::Usage(format!("unsupported schema {:?} (expected {SCHEMA:?})", env.schema)));
    }
    Ok(match env.kind.as_str() {
        "tiling" => {
            let t: Tiling = serde_json::from_value(env.data).map_err(bad)?;
            Document::Tiling(Tiling::new(t.rank(), t.dominos().to_vec()).map_err(bad)?)
        }
        "ktiling" => {
            let j: KTilingJson = serde_json::from_value(env.data).map_err(bad)?;
            Document::KTiling(KTiling::try_from(j).map_err(bad)?)
        }
        "lozenge-ktiling" => {
            let kl: KLozengeTiling = serde_json::from_value(env.data).map_err(bad)?;
            // Re-validate every layer.
            let layers = kl
                .layers
                .iter()
                .map(|l| tilekit::hexagon::HexTiling::new(kl.region, l.steps.clone()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(bad)?;
            Document::Lozenges(KLozengeTiling::new(layers).map_err(bad)?)
        }
        "run" => Document::Run(Box::new(serde_json::from_value(env.data).map_err(bad)?)),
        "statistics" => Document::Statistics(serde_json::from_value(env.data).map_err(bad)?),
        other => Document::Report(other.to_string()),
    })
}
