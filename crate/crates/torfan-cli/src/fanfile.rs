//! The on-disk fan format: a single JSON object naming the ambient rank,
//! the ray table, and the maximal cones as lists of ray indices.  Rays are
//! indexed so that cones sharing a ray share it canonically:
//!
//! ```json
//! {"dim":2,"rays":[[1,0],[0,1]],"cones":[[0,1]],"name":"affine-plane"}
//! ```
//!
//! The optional `name` is accepted for documentation purposes and ignored by
//! every command, so reports never depend on how a file is labelled.
//! Parsing is structural only (shapes and index ranges); whether the data is
//! an actual regular fan is decided by `validate_fan`.

use num_bigint::BigInt;
use serde::Deserialize;
use torfan::fan_core::FanData;

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FanFile {
    dim: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
    #[serde(default)]
    #[allow(dead_code)]
    name: Option<String>,
}

/// Parses the documented JSON format into raw fan data, checking ray
/// lengths and cone index ranges but deferring all geometry to
/// `validate_fan`.
pub fn parse_fan_file(text: &str) -> Result<FanData, CliError> {
    let file: FanFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        // serde_json appends the position to its message; strip it since the
        // error fields carry it already.
        reason: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
    })?;
    for (j, ray) in file.rays.iter().enumerate() {
        if ray.len() != file.dim {
            return Err(CliError::BadRayLength { ray: j, expected: file.dim, found: ray.len() });
        }
    }
    for (k, cone) in file.cones.iter().enumerate() {
        for &i in cone {
            if i >= file.rays.len() {
                return Err(CliError::IndexOutOfRange {
                    cone: k,
                    index: i,
                    ray_count: file.rays.len(),
                });
            }
        }
    }
    Ok(FanData {
        n: file.dim,
        rays: file
            .rays
            .iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect(),
        max_cones: file.cones,
    })
}
