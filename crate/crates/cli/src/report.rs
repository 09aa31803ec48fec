//! Output envelope and file emission.
//!
//! Every command prints one JSON envelope to stdout:
//!
//! ```text
//! {"schema": "activeinfo/1", "command": "<name>", "result": {...}}
//! ```
//!
//! With `--out BASE` the same envelope is also written to `BASE.json`,
//! and commands with auxiliary artifacts add sibling files that share the
//! base name (`BASE.csv` for solved pmfs, `BASE.svg` for CDF overlays).

use std::io::Write;
use std::path::Path;

use crate::errors::CliError;
use crate::jsonfmt::Json;

pub const SCHEMA: &str = "activeinfo/1";

pub fn envelope(command: &str, result: Json) -> Json {
    Json::obj(vec![
        ("schema", Json::Str(SCHEMA.to_string())),
        ("command", Json::Str(command.to_string())),
        ("result", result),
    ])
}

/// Extra artifact to write next to the JSON report: (extension, content).
pub struct Extra {
    pub extension: &'static str,
    pub content: String,
}

pub fn emit(
    command: &str,
    result: Json,
    out_base: Option<&Path>,
    extras: &[Extra],
) -> Result<(), CliError> {
    let text = envelope(command, result).to_pretty();
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Domain(format!("cannot write to stdout: {e}")))?;

    if let Some(base) = out_base {
        let json_path = base.with_extension("json");
        std::fs::write(&json_path, &text).map_err(|e| {
            CliError::Domain(format!("cannot write {}: {e}", json_path.display()))
        })?;
        for extra in extras {
            let path = base.with_extension(extra.extension);
            std::fs::write(&path, &extra.content)
                .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    Ok(())
}
