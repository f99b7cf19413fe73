//! Small fully-connected networks with a bespoke differentiation engine:
//! exact second-order input derivatives via forward-mode bundles, and
//! parameter gradients of losses built from those derivatives via a reverse
//! sweep over the cached bundles.

pub mod autodiff;
pub mod checkpoint;
pub mod jet;
pub mod mlp;

pub use autodiff::{loss_gradient, JetWorkspace, LossTerm, SecondOrderAdjoint, SecondOrderEval};
pub use checkpoint::Checkpoint;
pub use jet::Jet2;
pub use mlp::{
    exp_clamp_hits, MlpParams, OutputActivation, ParamGradient, ValueWorkspace, EXP_INPUT_CLAMP,
};
