//! Small fully-connected networks: parameters, initialization, and the
//! plain (value-only) forward pass.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::net::checkpoint::Checkpoint;

/// Inputs to the exponential output activation are clamped here so an early
/// training spike cannot overflow to infinity. Hits are counted and surfaced
/// through [`exp_clamp_hits`].
pub const EXP_INPUT_CLAMP: f64 = 30.0;

static EXP_CLAMP_HITS: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(0);

pub(crate) fn note_exp_clamp() {
    let prev = EXP_CLAMP_HITS.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
    if prev == 0 {
        log::warn!("exponential activation input exceeded {EXP_INPUT_CLAMP}; clamping");
    }
}

/// Number of times an exponential activation input has been clamped since
/// process start.
pub fn exp_clamp_hits() -> u64 {
    EXP_CLAMP_HITS.load(std::sync::atomic::Ordering::Relaxed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputActivation {
    Identity,
    Exponential,
}

/// Weights and biases of a tanh MLP with a scalar output.
///
/// Weight matrices are stored row-major, one row per output neuron, so
/// `weights[l][j * in_dim + i]` connects input `i` to neuron `j` of layer
/// `l`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Checkpoint", into = "Checkpoint")]
pub struct MlpParams {
    pub(crate) layer_sizes: Vec<usize>,
    pub(crate) weights: Vec<Vec<f64>>,
    pub(crate) biases: Vec<Vec<f64>>,
    pub(crate) output_activation: OutputActivation,
}

impl MlpParams {
    /// Glorot-uniform weights and zero biases, deterministic in `seed`.
    pub fn init(seed: u64, layer_sizes: &[usize], output_activation: OutputActivation) -> Result<Self> {
        validate_layer_sizes(layer_sizes)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut weights = Vec::with_capacity(layer_sizes.len() - 1);
        let mut biases = Vec::with_capacity(layer_sizes.len() - 1);
        for l in 0..layer_sizes.len() - 1 {
            let (fan_in, fan_out) = (layer_sizes[l], layer_sizes[l + 1]);
            let limit = (6.0 / (fan_in + fan_out) as f64).sqrt();
            let w: Vec<f64> = (0..fan_in * fan_out)
                .map(|_| rng.random_range(-limit..limit))
                .collect();
            weights.push(w);
            biases.push(vec![0.0; fan_out]);
        }
        Ok(Self {
            layer_sizes: layer_sizes.to_vec(),
            weights,
            biases,
            output_activation,
        })
    }

    pub fn layer_sizes(&self) -> &[usize] {
        &self.layer_sizes
    }

    pub fn in_dim(&self) -> usize {
        self.layer_sizes[0]
    }

    pub fn n_layers(&self) -> usize {
        self.layer_sizes.len() - 1
    }

    pub fn output_activation(&self) -> OutputActivation {
        self.output_activation
    }

    pub fn weights(&self, layer: usize) -> &[f64] {
        &self.weights[layer]
    }

    pub fn weights_mut(&mut self, layer: usize) -> &mut [f64] {
        &mut self.weights[layer]
    }

    pub fn biases(&self, layer: usize) -> &[f64] {
        &self.biases[layer]
    }

    pub fn biases_mut(&mut self, layer: usize) -> &mut [f64] {
        &mut self.biases[layer]
    }

    pub fn param_count(&self) -> usize {
        self.weights.iter().map(|w| w.len()).sum::<usize>()
            + self.biases.iter().map(|b| b.len()).sum::<usize>()
    }

    /// All parameter groups in canonical order: weight matrices, then bias
    /// vectors. The optimizer and gradient buffers follow the same order.
    pub fn param_groups_mut(&mut self) -> impl Iterator<Item = &mut [f64]> {
        self.weights
            .iter_mut()
            .map(|w| w.as_mut_slice())
            .chain(self.biases.iter_mut().map(|b| b.as_mut_slice()))
    }

    pub fn validate(&self) -> Result<()> {
        validate_layer_sizes(&self.layer_sizes)?;
        if self.weights.len() != self.n_layers() || self.biases.len() != self.n_layers() {
            return Err(Error::Shape("layer count mismatch".into()));
        }
        for l in 0..self.n_layers() {
            let (fan_in, fan_out) = (self.layer_sizes[l], self.layer_sizes[l + 1]);
            if self.weights[l].len() != fan_in * fan_out {
                return Err(Error::Shape(format!(
                    "layer {l} weight length {} != {fan_in}x{fan_out}",
                    self.weights[l].len()
                )));
            }
            if self.biases[l].len() != fan_out {
                return Err(Error::Shape(format!(
                    "layer {l} bias length {} != {fan_out}",
                    self.biases[l].len()
                )));
            }
            if self.weights[l].iter().chain(&self.biases[l]).any(|v| !v.is_finite()) {
                return Err(Error::Domain(format!("layer {l} has non-finite parameters")));
            }
        }
        Ok(())
    }

    /// Scalar network output for `inputs`. Exponential output networks
    /// always return strictly positive values.
    pub fn forward(&self, inputs: &[f64]) -> Result<f64> {
        if inputs.len() != self.in_dim() {
            return Err(Error::Shape(format!(
                "expected {} inputs, got {}",
                self.in_dim(),
                inputs.len()
            )));
        }
        let mut ws = ValueWorkspace::new(self);
        Ok(self.forward_ws(inputs, &mut ws))
    }

    /// Forward pass into a reusable workspace; the workspace retains the
    /// per-layer activations needed by [`MlpParams::backprop_value`].
    pub fn forward_ws(&self, inputs: &[f64], ws: &mut ValueWorkspace) -> f64 {
        debug_assert_eq!(inputs.len(), self.in_dim());
        ws.a[0].copy_from_slice(inputs);
        let n_layers = self.n_layers();
        for l in 0..n_layers {
            let n_in = self.layer_sizes[l];
            let n_out = self.layer_sizes[l + 1];
            let w = &self.weights[l];
            let b = &self.biases[l];
            let (head, tail) = ws.a.split_at_mut(l + 1);
            let prev = &head[l];
            let out = &mut tail[0];
            for j in 0..n_out {
                let row = &w[j * n_in..(j + 1) * n_in];
                let mut acc = b[j];
                for i in 0..n_in {
                    acc += row[i] * prev[i];
                }
                out[j] = if l + 1 < n_layers { acc.tanh() } else { acc };
            }
        }
        let z = ws.a[n_layers][0];
        ws.z_out = z;
        match self.output_activation {
            OutputActivation::Identity => z,
            OutputActivation::Exponential => {
                if z > EXP_INPUT_CLAMP {
                    note_exp_clamp();
                }
                let y = z.min(EXP_INPUT_CLAMP).exp();
                ws.a[n_layers][0] = y;
                y
            }
        }
    }

    /// Accumulates d(loss)/d(parameter) into `grad` given the upstream
    /// derivative `d_out` = d(loss)/d(output). Must follow a
    /// [`MlpParams::forward_ws`] call on the same workspace.
    pub fn backprop_value(&self, ws: &ValueWorkspace, d_out: f64, grad: &mut ParamGradient) {
        let n_layers = self.n_layers();
        let dz_out = match self.output_activation {
            OutputActivation::Identity => d_out,
            OutputActivation::Exponential => {
                if ws.z_out < EXP_INPUT_CLAMP {
                    d_out * ws.a[n_layers][0]
                } else {
                    0.0
                }
            }
        };

        // d(loss)/d(activation) for the layer currently being processed.
        let mut d_act = vec![dz_out];
        for l in (0..n_layers).rev() {
            let n_in = self.layer_sizes[l];
            let n_out = self.layer_sizes[l + 1];
            let w = &self.weights[l];
            let prev = &ws.a[l];
            let gw = &mut grad.weights[l];
            let gb = &mut grad.biases[l];
            let mut d_prev = vec![0.0; n_in];
            for j in 0..n_out {
                // Hidden layers carry tanh; the final layer's activation
                // derivative was already folded into dz_out.
                let dz = if l + 1 < n_layers {
                    let t = ws.a[l + 1][j];
                    d_act[j] * (1.0 - t * t)
                } else {
                    d_act[j]
                };
                gb[j] += dz;
                let row = &w[j * n_in..(j + 1) * n_in];
                let grow = &mut gw[j * n_in..(j + 1) * n_in];
                for i in 0..n_in {
                    grow[i] += dz * prev[i];
                    d_prev[i] += row[i] * dz;
                }
            }
            d_act = d_prev;
        }
    }
}

fn validate_layer_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.len() < 2 {
        return Err(Error::Shape(
            "need at least an input and an output layer".into(),
        ));
    }
    if sizes.iter().any(|&s| s == 0) {
        return Err(Error::Shape("layer sizes must be positive".into()));
    }
    if *sizes.last().unwrap() != 1 {
        return Err(Error::Shape("networks here produce a scalar output".into()));
    }
    Ok(())
}

/// Reusable activation buffers for the plain forward/backward pass.
#[derive(Debug, Clone)]
pub struct ValueWorkspace {
    /// a[0] is the input copy; a[l] the post-activation output of layer l.
    pub(crate) a: Vec<Vec<f64>>,
    /// Pre-activation of the scalar output (needed by the exponential head).
    pub(crate) z_out: f64,
}

impl ValueWorkspace {
    pub fn new(params: &MlpParams) -> Self {
        Self {
            a: params.layer_sizes.iter().map(|&n| vec![0.0; n]).collect(),
            z_out: 0.0,
        }
    }
}

/// Per-parameter derivatives, shape-congruent with the source [`MlpParams`].
#[derive(Debug, Clone, PartialEq)]
pub struct ParamGradient {
    pub weights: Vec<Vec<f64>>,
    pub biases: Vec<Vec<f64>>,
}

impl ParamGradient {
    pub fn zeros_like(params: &MlpParams) -> Self {
        Self {
            weights: params.weights.iter().map(|w| vec![0.0; w.len()]).collect(),
            biases: params.biases.iter().map(|b| vec![0.0; b.len()]).collect(),
        }
    }

    pub fn reset(&mut self) {
        for w in &mut self.weights {
            w.fill(0.0);
        }
        for b in &mut self.biases {
            b.fill(0.0);
        }
    }

    pub fn scale(&mut self, c: f64) {
        for v in self.iter_mut() {
            *v *= c;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &f64> {
        self.weights.iter().flatten().chain(self.biases.iter().flatten())
    }

    pub fn iter_mut(&mut self) -> impl Iterator<Item = &mut f64> {
        self.weights
            .iter_mut()
            .flatten()
            .chain(self.biases.iter_mut().flatten())
    }

    /// Groups in the same canonical order as `MlpParams::param_groups_mut`.
    pub fn groups(&self) -> impl Iterator<Item = &[f64]> {
        self.weights
            .iter()
            .map(|w| w.as_slice())
            .chain(self.biases.iter().map(|b| b.as_slice()))
    }

    pub fn max_abs(&self) -> f64 {
        self.iter().fold(0.0f64, |m, &v| m.max(v.abs()))
    }
}
