//! Subsurface relative-permittivity reconstruction from sparse radar
//! waveforms.
//!
//! The library couples a 1D FDTD forward simulator (synthetic data
//! generation and self-validation) with physics-informed neural network
//! inversion constrained by the lossless 1D electromagnetic wave equation.
//! Two inversion modes are provided: per-layer permittivities as learnable
//! scalars when the layer boundaries are known, and a separate permittivity
//! network producing a continuous profile when they are not. A signal
//! pipeline converts measured frequency-domain transmission sweeps into the
//! time-domain composite traces the inversion consumes, and an experiment
//! harness orchestrates multi-seed runs, receiver-count studies, and
//! CSV/SVG artifact emission.

pub mod domain;
pub mod error;
pub mod fdtd;
pub mod harness;
pub mod net;
pub mod pinn;
pub mod signal;
pub mod trace_io;

pub use error::{Error, Result};
