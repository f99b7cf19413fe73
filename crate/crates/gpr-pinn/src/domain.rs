//! Core physical types shared by every module: vacuum constants, spatial and
//! temporal grids, and the two permittivity profile representations
//! (piecewise-constant layered and sampled-continuous).
//!
//! All quantities are SI internally (meters, seconds). The nanosecond time
//! scaling used by the networks is applied at the network input boundary
//! only, never stored here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vacuum permittivity, F/m.
pub const EPS0: f64 = 8.854e-12;

/// Vacuum permeability, H/m.
pub const MU0: f64 = 4.0e-7 * std::f64::consts::PI;

/// Speed of light in vacuum derived from the constants above, m/s.
pub fn vacuum_speed() -> f64 {
    1.0 / (MU0 * EPS0).sqrt()
}

/// EM phase velocity in a non-magnetic medium of relative permittivity
/// `eps_r`: v = c0 / sqrt(eps_r).
pub fn wave_speed(eps_r: f64) -> Result<f64> {
    if !(eps_r > 0.0) || !eps_r.is_finite() {
        return Err(Error::Domain(format!(
            "relative permittivity must be positive and finite, got {eps_r}"
        )));
    }
    Ok(vacuum_speed() / eps_r.sqrt())
}

/// A uniform 1D spatial grid over [x_min, x_max] with spacing `dx`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpatialDomain {
    pub x_min: f64,
    pub x_max: f64,
    pub dx: f64,
    pub nx: usize,
}

impl SpatialDomain {
    pub fn new(x_min: f64, x_max: f64, dx: f64) -> Result<Self> {
        if !(x_max > x_min) {
            return Err(Error::Domain(format!(
                "x_max ({x_max}) must exceed x_min ({x_min})"
            )));
        }
        if !(dx > 0.0) || !dx.is_finite() {
            return Err(Error::Domain(format!("dx must be positive, got {dx}")));
        }
        let nx = ((x_max - x_min) / dx).round() as usize + 1;
        Ok(Self { x_min, x_max, dx, nx })
    }

    /// Re-checks the struct invariants; used after deserializing.
    pub fn validate(&self) -> Result<()> {
        let fresh = Self::new(self.x_min, self.x_max, self.dx)?;
        if fresh.nx != self.nx {
            return Err(Error::Domain(format!(
                "nx = {} inconsistent with grid extent (expected {})",
                self.nx, fresh.nx
            )));
        }
        Ok(())
    }

    pub fn x_at(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx
    }

    pub fn contains(&self, x: f64) -> bool {
        x.is_finite() && x >= self.x_min && x <= self.x_max
    }

    /// Index of the grid node nearest to `x`, or an error when `x` lies
    /// outside the grid.
    pub fn snap(&self, x: f64) -> Result<usize> {
        if !self.contains(x) {
            return Err(Error::Domain(format!(
                "x = {x} outside [{}, {}]",
                self.x_min, self.x_max
            )));
        }
        let i = ((x - self.x_min) / self.dx).round() as usize;
        Ok(i.min(self.nx - 1))
    }
}

/// A uniform time grid: `nt` steps of length `dt`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeDomain {
    pub dt: f64,
    pub nt: usize,
}

impl TimeDomain {
    pub fn new(dt: f64, nt: usize) -> Result<Self> {
        let td = Self { dt, nt };
        td.validate()?;
        Ok(td)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(Error::Domain(format!("dt must be positive, got {}", self.dt)));
        }
        if self.nt == 0 {
            return Err(Error::Domain("nt must be at least 1".into()));
        }
        Ok(())
    }

    pub fn t_at(&self, k: usize) -> f64 {
        k as f64 * self.dt
    }

    pub fn duration(&self) -> f64 {
        (self.nt.saturating_sub(1)) as f64 * self.dt
    }
}

/// Piecewise-constant relative permittivity: L layers separated by L-1
/// ordered interface positions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayeredProfile {
    /// Interface x-positions in meters, strictly increasing.
    pub boundaries: Vec<f64>,
    /// One relative permittivity per layer, each >= 1.
    pub eps_r: Vec<f64>,
}

impl LayeredProfile {
    pub fn new(boundaries: Vec<f64>, eps_r: Vec<f64>) -> Result<Self> {
        let p = Self { boundaries, eps_r };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.eps_r.len() != self.boundaries.len() + 1 {
            return Err(Error::Shape(format!(
                "{} boundaries require {} layer values, got {}",
                self.boundaries.len(),
                self.boundaries.len() + 1,
                self.eps_r.len()
            )));
        }
        for w in self.boundaries.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::Domain(format!(
                    "boundaries must be strictly increasing ({} then {})",
                    w[0], w[1]
                )));
            }
        }
        for &b in &self.boundaries {
            if !b.is_finite() {
                return Err(Error::Domain("boundary positions must be finite".into()));
            }
        }
        for &e in &self.eps_r {
            if !(e >= 1.0) || !e.is_finite() {
                return Err(Error::Domain(format!(
                    "layer permittivity must be >= 1 (physical media), got {e}"
                )));
            }
        }
        Ok(())
    }

    /// Checks that every interface lies strictly inside `domain`.
    pub fn validate_in(&self, domain: &SpatialDomain) -> Result<()> {
        self.validate()?;
        for &b in &self.boundaries {
            if !(b > domain.x_min && b < domain.x_max) {
                return Err(Error::Domain(format!(
                    "boundary {b} not strictly inside [{}, {}]",
                    domain.x_min, domain.x_max
                )));
            }
        }
        Ok(())
    }

    /// Index of the layer containing `x`. A point exactly on an interface
    /// belongs to the layer on its right.
    pub fn layer_index(&self, x: f64) -> usize {
        self.boundaries.partition_point(|&b| b <= x)
    }

    /// Relative permittivity at `x`, which must lie inside `domain`.
    pub fn eval(&self, domain: &SpatialDomain, x: f64) -> Result<f64> {
        if !domain.contains(x) {
            return Err(Error::Domain(format!(
                "x = {x} outside [{}, {}]",
                domain.x_min, domain.x_max
            )));
        }
        Ok(self.eps_r[self.layer_index(x)])
    }

    pub fn min_eps_r(&self) -> f64 {
        self.eps_r.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn num_layers(&self) -> usize {
        self.eps_r.len()
    }

    /// Samples the profile on `n` evenly spaced points across `domain`.
    pub fn sample_on(&self, domain: &SpatialDomain, n: usize) -> Result<SampledProfile> {
        if n < 2 {
            return Err(Error::Domain("need at least 2 sample points".into()));
        }
        let step = (domain.x_max - domain.x_min) / (n - 1) as f64;
        let xs: Vec<f64> = (0..n).map(|i| domain.x_min + i as f64 * step).collect();
        let eps_r = xs
            .iter()
            .map(|&x| self.eval(domain, x))
            .collect::<Result<Vec<_>>>()?;
        SampledProfile::new(xs, eps_r)
    }
}

/// Relative permittivity sampled on an explicit grid, the form produced by
/// the continuous-profile inversion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledProfile {
    pub xs: Vec<f64>,
    pub eps_r: Vec<f64>,
}

impl SampledProfile {
    pub fn new(xs: Vec<f64>, eps_r: Vec<f64>) -> Result<Self> {
        let p = Self { xs, eps_r };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.xs.len() != self.eps_r.len() {
            return Err(Error::Shape(format!(
                "xs has {} entries, eps_r has {}",
                self.xs.len(),
                self.eps_r.len()
            )));
        }
        if self.xs.is_empty() {
            return Err(Error::Degenerate("empty sampled profile".into()));
        }
        for w in self.xs.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::Domain(
                    "sample positions must be strictly increasing".into(),
                ));
            }
        }
        for &e in &self.eps_r {
            if !(e > 0.0) || !e.is_finite() {
                return Err(Error::Domain(format!(
                    "sampled permittivity must be positive, got {e}"
                )));
            }
        }
        Ok(())
    }

    /// Linear interpolation at `x`, clamped to the sampled range.
    pub fn interpolate(&self, x: f64) -> f64 {
        let xs = &self.xs;
        if x <= xs[0] {
            return self.eps_r[0];
        }
        if x >= xs[xs.len() - 1] {
            return self.eps_r[xs.len() - 1];
        }
        let hi = xs.partition_point(|&v| v < x);
        let lo = hi - 1;
        let f = (x - xs[lo]) / (xs[hi] - xs[lo]);
        self.eps_r[lo] + f * (self.eps_r[hi] - self.eps_r[lo])
    }

    /// Collapses to a layered profile with the given interfaces, choosing
    /// each layer's most frequent sampled value among the points strictly
    /// inside it.
    pub fn to_layered_majority(&self, boundaries: &[f64]) -> Result<LayeredProfile> {
        let n_layers = boundaries.len() + 1;
        let mut per_layer: Vec<Vec<f64>> = vec![Vec::new(); n_layers];
        for (&x, &e) in self.xs.iter().zip(&self.eps_r) {
            if boundaries.iter().any(|&b| b == x) {
                continue;
            }
            let idx = boundaries.partition_point(|&b| b <= x);
            per_layer[idx].push(e);
        }
        let eps_r = per_layer
            .iter()
            .enumerate()
            .map(|(i, vals)| {
                if vals.is_empty() {
                    return Err(Error::Degenerate(format!(
                        "no samples strictly inside layer {i}"
                    )));
                }
                let mut best = (vals[0], 0usize);
                for &candidate in vals {
                    let count = vals.iter().filter(|&&v| v == candidate).count();
                    if count > best.1 {
                        best = (candidate, count);
                    }
                }
                Ok(best.0)
            })
            .collect::<Result<Vec<_>>>()?;
        LayeredProfile::new(boundaries.to_vec(), eps_r)
    }

    /// Mean of the sampled values whose x lies in [lo, hi).
    pub fn mean_in(&self, lo: f64, hi: f64) -> Option<f64> {
        let mut sum = 0.0;
        let mut n = 0usize;
        for (&x, &e) in self.xs.iter().zip(&self.eps_r) {
            if x >= lo && x < hi {
                sum += e;
                n += 1;
            }
        }
        (n > 0).then(|| sum / n as f64)
    }
}

/// The JSON form of a permittivity profile: either `{"boundaries", "eps_r"}`
/// or `{"xs", "eps_r"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Profile {
    Layered(LayeredProfile),
    Sampled(SampledProfile),
}

impl Profile {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let p: Profile = serde_json::from_str(s)?;
        p.validate()?;
        Ok(p)
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Profile::Layered(p) => p.validate(),
            Profile::Sampled(p) => p.validate(),
        }
    }
}
