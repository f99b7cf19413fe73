//! JSON checkpoint format for network parameters.
//!
//! Floats are stored as base64 of their raw little-endian bytes, so a
//! checkpoint round-trips bit-exactly at full precision.

use base64::engine::general_purpose::STANDARD as B64;
use base64::Engine;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::net::mlp::{MlpParams, OutputActivation};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Checkpoint {
    pub layer_sizes: Vec<usize>,
    pub hidden_activation: String,
    pub output_activation: OutputActivation,
    /// One base64 blob per layer: row-major f64 weights, little-endian.
    pub weights_b64: Vec<String>,
    /// One base64 blob per layer: f64 biases, little-endian.
    pub biases_b64: Vec<String>,
}

fn encode_f64s(vals: &[f64]) -> String {
    let mut bytes = Vec::with_capacity(vals.len() * 8);
    for v in vals {
        bytes.extend_from_slice(&v.to_le_bytes());
    }
    B64.encode(bytes)
}

fn decode_f64s(s: &str) -> Result<Vec<f64>> {
    let bytes = B64
        .decode(s)
        .map_err(|e| Error::Parse(format!("bad base64 in checkpoint: {e}")))?;
    if bytes.len() % 8 != 0 {
        return Err(Error::Parse(format!(
            "checkpoint blob length {} is not a multiple of 8",
            bytes.len()
        )));
    }
    Ok(bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect())
}

impl From<MlpParams> for Checkpoint {
    fn from(p: MlpParams) -> Self {
        Checkpoint {
            layer_sizes: p.layer_sizes.clone(),
            hidden_activation: "tanh".to_string(),
            output_activation: p.output_activation,
            weights_b64: p.weights.iter().map(|w| encode_f64s(w)).collect(),
            biases_b64: p.biases.iter().map(|b| encode_f64s(b)).collect(),
        }
    }
}

impl TryFrom<Checkpoint> for MlpParams {
    type Error = Error;

    fn try_from(c: Checkpoint) -> Result<Self> {
        if c.hidden_activation != "tanh" {
            return Err(Error::Parse(format!(
                "unsupported hidden activation '{}'",
                c.hidden_activation
            )));
        }
        let weights = c
            .weights_b64
            .iter()
            .map(|s| decode_f64s(s))
            .collect::<Result<Vec<_>>>()?;
        let biases = c
            .biases_b64
            .iter()
            .map(|s| decode_f64s(s))
            .collect::<Result<Vec<_>>>()?;
        let p = MlpParams {
            layer_sizes: c.layer_sizes,
            weights,
            biases,
            output_activation: c.output_activation,
        };
        p.validate()?;
        Ok(p)
    }
}

impl MlpParams {
    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkpoint_round_trip_is_bit_exact() {
        let p = MlpParams::init(123, &[2, 64, 64, 1], OutputActivation::Exponential).unwrap();
        let json = p.to_json_string().unwrap();
        let back = MlpParams::from_json_str(&json).unwrap();
        assert_eq!(back.layer_sizes(), p.layer_sizes());
        assert_eq!(back.output_activation(), p.output_activation());
        for l in 0..p.n_layers() {
            for (a, b) in p.weights(l).iter().zip(back.weights(l)) {
                assert_eq!(a.to_bits(), b.to_bits());
            }
            for (a, b) in p.biases(l).iter().zip(back.biases(l)) {
                assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }

    #[test]
    fn rejects_inconsistent_checkpoints() {
        let p = MlpParams::init(1, &[2, 4, 1], OutputActivation::Identity).unwrap();
        let mut c = Checkpoint::from(p);
        c.layer_sizes = vec![2, 5, 1];
        assert!(MlpParams::try_from(c.clone()).is_err());
        c.layer_sizes = vec![2, 4, 1];
        c.weights_b64[0] = "not base64!!".into();
        assert!(MlpParams::try_from(c).is_err());
    }
}
