//! Inference engine and measurement lab for scalar-gated linear-attention
//! recurrences (Mamba-2-style selective state-space models).
//!
//! The crate is organized around the per-head update rule
//!
//! ```text
//! h_t = alpha_t * h_{t-1} + outer(Bbar_t, x_t)      h_t in R^{N x P}
//! o_t = C_t h_t + D (.) x_t
//! y_t = Norm(o_t (.) silu(u_t W_gate)) W_o
//! ```
//!
//! with `alpha_t = exp(-Delta_t * exp(A))` and `Bbar_t = Delta_t * B_t`.
//! Everything else is instrumentation built on top of that recurrence:
//!
//! * [`model`] — full layer/model forward pass (embedding, pre-norm residual
//!   stack, tied output embedding), step-by-step or chunked.
//! * [`ops`] — the scalar/vector primitives plus the weighted-sum oracle
//!   used to cross-check the recurrence.
//! * [`mitigation`] — training-free interventions on the update rule
//!   (delta scaling, decay/insertion intervention, state normalization,
//!   sliding window by state difference).
//! * [`diagnostics`] — state statistics traces, outlier-channel detection,
//!   cumulative-decay traces, and the perplexity-based collapse detector.
//! * [`model_io`] — checkpoint container I/O, name-mapping profiles,
//!   byte/external tokenizers, seeded random models.
//! * [`harness`] — prompt generators (newlines, passkey), greedy decoding,
//!   perplexity sweeps, retrieval grids, and capacity-law fitting.
//!
//! Model parameters are immutable after construction and can be shared
//! across threads; each evaluation stream owns its [`state::StreamState`].
//! Activations are `f32` or `f64` (choose via the type parameter); every
//! reduction (dot products, RMS means, norms, accumulators) runs in `f64`
//! regardless of the activation type, with a fixed sequential order so
//! results are deterministic.

pub mod config;
pub mod diagnostics;
pub mod error;
pub mod harness;
pub mod mitigation;
pub mod model;
pub mod model_io;
pub mod ops;
pub mod params;
pub mod real;
pub mod state;

pub use config::ModelConfig;
pub use error::{Error, Result};
pub use mitigation::MitigationConfig;
pub use params::{LayerParams, ModelParams};
pub use real::Real;
pub use state::StreamState;
