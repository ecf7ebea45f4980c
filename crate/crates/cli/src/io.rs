//! File schemas and JSON emission.
//!
//! Channels and states are read as UTF-8 JSON with complex numbers as
//! `[re, im]` pairs, matrices row-major. Output documents are emitted by
//! hand so every real is serialized with 17 significant digits,
//! independent of serde's shortest-roundtrip formatting.

use num_complex::Complex64;
use serde::Deserialize;

use qchan::{ComplexMat2, DensityOp, KrausChannel, PureState};

use crate::CliError;

/// A channel file: `{"name": "...", "kraus": [matrix, ...]}` with each
/// matrix `[[ [re,im], [re,im] ], [ [re,im], [re,im] ]]`.
#[derive(Debug, Deserialize)]
pub struct ChannelSpecFile {
    #[serde(default)]
    pub name: Option<String>,
    pub kraus: Vec<[[[f64; 2]; 2]; 2]>,
}

/// A state file: either `{"bloch": [x, y, z]}` or `{"matrix": ...}`.
#[derive(Debug, Deserialize)]
pub struct StateSpecFile {
    #[serde(default)]
    pub bloch: Option<[f64; 3]>,
    #[serde(default)]
    pub matrix: Option<[[[f64; 2]; 2]; 2]>,
}

fn mat_from_entries(m: &[[[f64; 2]; 2]; 2]) -> ComplexMat2 {
    ComplexMat2::new([
        [
            Complex64::new(m[0][0][0], m[0][0][1]),
            Complex64::new(m[0][1][0], m[0][1][1]),
        ],
        [
            Complex64::new(m[1][0][0], m[1][0][1]),
            Complex64::new(m[1][1][0], m[1][1][1]),
        ],
    ])
}

/// Read and parse a channel file; CPTP validation is the caller's call.
pub fn load_channel(path: &str) -> Result<KrausChannel, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("cannot read channel file {path}: {e}")))?;
    let spec: ChannelSpecFile = serde_json::from_str(&text)
        .map_err(|e| CliError::validation(format!("channel file {path} is not valid: {e}")))?;
    if spec.kraus.is_empty() || spec.kraus.len() > 8 {
        return Err(CliError::validation(format!(
            "channel file {path} must hold 1..=8 Kraus operators, found {}",
            spec.kraus.len()
        )));
    }
    if let Some(name) = &spec.name {
        eprintln!("channel: {name}");
    }
    let ops = spec.kraus.iter().map(mat_from_entries).collect();
    KrausChannel::new(ops).map_err(|e| CliError::validation(format!("{path}: {e}")))
}

/// Parse `--state "bloch:x,y,z"` or a state file.
pub fn load_state(inline: Option<&str>, file: Option<&str>) -> Result<DensityOp, CliError> {
    match (inline, file) {
        (Some(s), None) => parse_inline_state(s),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::validation(format!("cannot read state file {path}: {e}"))
            })?;
            let spec: StateSpecFile = serde_json::from_str(&text)
                .map_err(|e| CliError::validation(format!("state file {path} is not valid: {e}")))?;
            match (spec.bloch, spec.matrix) {
                (Some(b), None) => DensityOp::from_bloch(b[0], b[1], b[2])
                    .map_err(|e| CliError::validation(format!("{path}: {e}"))),
                (None, Some(m)) => DensityOp::from_mat(mat_from_entries(&m))
                    .map_err(|e| CliError::validation(format!("{path}: {e}"))),
                _ => Err(CliError::validation(format!(
                    "state file {path} must set exactly one of \"bloch\" or \"matrix\""
                ))),
            }
        }
        _ => Err(CliError::usage(
            "provide exactly one of --state or --state-file".into(),
        )),
    }
}

fn parse_inline_state(s: &str) -> Result<DensityOp, CliError> {
    let rest = s
        .strip_prefix("bloch:")
        .ok_or_else(|| CliError::usage(format!("state \"{s}\" must look like bloch:x,y,z")))?;
    let parts: Vec<&str> = rest.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!(
            "state \"{s}\" must carry three comma-separated coordinates"
        )));
    }
    let mut b = [0.0f64; 3];
    for (k, p) in parts.iter().enumerate() {
        b[k] = p
            .trim()
            .parse()
            .map_err(|e| CliError::usage(format!("state coordinate \"{p}\": {e}")))?;
    }
    DensityOp::from_bloch(b[0], b[1], b[2]).map_err(|e| CliError::validation(e.to_string()))
}

/// Parse a sweep grid `start:stop:steps` into the inclusive sample points.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!(
            "grid \"{spec}\" must look like start:stop:steps"
        )));
    }
    let start: f64 = parts[0]
        .parse()
        .map_err(|e| CliError::usage(format!("grid start \"{}\": {e}", parts[0])))?;
    let stop: f64 = parts[1]
        .parse()
        .map_err(|e| CliError::usage(format!("grid stop \"{}\": {e}", parts[1])))?;
    let steps: usize = parts[2]
        .parse()
        .map_err(|e| CliError::usage(format!("grid steps \"{}\": {e}", parts[2])))?;
    if steps == 0 {
        return Err(CliError::usage("grid needs at least one step".into()));
    }
    if !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(CliError::usage(format!(
            "grid \"{spec}\" must satisfy start <= stop"
        )));
    }
    if steps == 1 {
        return Ok(vec![start]);
    }
    Ok((0..steps)
        .map(|k| start + (stop - start) * k as f64 / (steps - 1) as f64)
        .collect())
}

/// A real with 17 significant digits, or null when non-finite.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".into()
    }
}

pub fn fmt_complex(z: Complex64) -> String {
    format!("[{}, {}]", fmt_f64(z.re), fmt_f64(z.im))
}

pub fn fmt_bloch(b: [f64; 3]) -> String {
    format!("[{}, {}, {}]", fmt_f64(b[0]), fmt_f64(b[1]), fmt_f64(b[2]))
}

/// One ensemble member as `{"weight": w, "bloch": [...], "amplitudes": [...]}`.
pub fn fmt_ensemble_member(weight: f64, state: &PureState) -> String {
    let [x0, x1] = state.amps();
    format!(
        "{{\"weight\": {}, \"bloch\": {}, \"amplitudes\": [{}, {}]}}",
        fmt_f64(weight),
        fmt_bloch(state.density().bloch()),
        fmt_complex(x0),
        fmt_complex(x1)
    )
}
