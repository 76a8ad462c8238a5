//! Trained weights.
//!
//! All tensors are flat row-major `Vec<T>`. Layouts are chosen so the
//! per-token forward pass is a handful of `vec_mat_wide` calls:
//!
//! | field        | shape      | use                                    |
//! |--------------|------------|----------------------------------------|
//! | `gate_proj`  | `[d, H*P]` | `u * gate_proj` -> gate pre-activation |
//! | `x_proj`     | `[d, H*P]` | `u * x_proj` -> x pre-conv             |
//! | `b_proj`     | `[d, N]`   | shared across heads                    |
//! | `c_proj`     | `[d, N]`   | shared across heads                    |
//! | `delta_proj` | `[H, d]`   | row h dotted with u                    |
//! | `out_proj`   | `[H*P, d]` | concatenated head outputs -> d         |
//!
//! `out_proj` stacks the per-head `P x d` blocks, so multiplying the
//! concatenated normed head outputs by it sums the heads in one pass.

use crate::config::ModelConfig;
use crate::real::Real;

/// Weights of one layer.
#[derive(Debug, Clone)]
pub struct LayerParams<T> {
    /// Pre-layer RMS-norm weight, `[d]`.
    pub pre_norm: Vec<T>,
    /// Gate projection, `[d, H*P]`.
    pub gate_proj: Vec<T>,
    /// x projection, `[d, H*P]`.
    pub x_proj: Vec<T>,
    /// B projection, `[d, N]`, shared across heads.
    pub b_proj: Vec<T>,
    /// C projection, `[d, N]`, shared across heads.
    pub c_proj: Vec<T>,
    /// Delta projections, `[H, d]`: one d-vector per head.
    pub delta_proj: Vec<T>,
    /// Delta bias, `[H]`.
    pub delta_bias: Vec<T>,
    /// Per-head decay log-rate A, `[H]`; `alpha = exp(-Delta * exp(A))`.
    pub a: Vec<T>,
    /// Skip weights, `[H, P]`.
    pub d_skip: Vec<T>,
    /// Depthwise conv kernels for the x channels, `[H*P, k]`.
    pub conv_x: Vec<T>,
    /// Conv kernels for the B channels, `[N, k]`.
    pub conv_b: Vec<T>,
    /// Conv kernels for the C channels, `[N, k]`.
    pub conv_c: Vec<T>,
    /// Conv biases, `[H*P]` / `[N]` / `[N]`; empty when the config has
    /// no conv bias.
    pub conv_x_bias: Vec<T>,
    pub conv_b_bias: Vec<T>,
    pub conv_c_bias: Vec<T>,
    /// Gated-output RMS-norm weight, `[H, P]`: one P-vector per head.
    pub gated_norm: Vec<T>,
    /// Output projection, `[H*P, d]`.
    pub out_proj: Vec<T>,
}

/// Full model: tied embedding, layer stack, final norm.
#[derive(Debug, Clone)]
pub struct ModelParams<T> {
    pub config: ModelConfig,
    /// Token embedding, `[V, d]`. Also the (tied) output embedding.
    pub embedding: Vec<T>,
    pub layers: Vec<LayerParams<T>>,
    /// Final RMS-norm weight, `[d]`.
    pub final_norm: Vec<T>,
}

impl<T: Real> LayerParams<T> {
    /// Zero-filled layer with shapes from `cfg`.
    pub fn zeros(cfg: &ModelConfig) -> Self {
        let d = cfg.hidden_dim;
        let hp = cfg.inner_dim();
        let n = cfg.state_dim;
        let h = cfg.num_heads;
        let p = cfg.head_dim;
        let k = cfg.conv_kernel;
        let bias = |c: usize| if cfg.conv_bias { vec![T::zero(); c] } else { Vec::new() };
        LayerParams {
            pre_norm: vec![T::zero(); d],
            gate_proj: vec![T::zero(); d * hp],
            x_proj: vec![T::zero(); d * hp],
            b_proj: vec![T::zero(); d * n],
            c_proj: vec![T::zero(); d * n],
            delta_proj: vec![T::zero(); h * d],
            delta_bias: vec![T::zero(); h],
            a: vec![T::zero(); h],
            d_skip: vec![T::zero(); h * p],
            conv_x: vec![T::zero(); hp * k],
            conv_b: vec![T::zero(); n * k],
            conv_c: vec![T::zero(); n * k],
            conv_x_bias: bias(hp),
            conv_b_bias: bias(n),
            conv_c_bias: bias(n),
            gated_norm: vec![T::zero(); h * p],
            out_proj: vec![T::zero(); hp * d],
        }
    }

    /// Delta projection row for head `h`.
    pub fn delta_row(&self, h: usize, d: usize) -> &[T] {
        &self.delta_proj[h * d..(h + 1) * d]
    }

    /// Skip weights for head `h`.
    pub fn d_skip_head(&self, h: usize, p: usize) -> &[T] {
        &self.d_skip[h * p..(h + 1) * p]
    }

    /// Gated-norm weights for head `h`.
    pub fn gated_norm_head(&self, h: usize, p: usize) -> &[T] {
        &self.gated_norm[h * p..(h + 1) * p]
    }
}

impl<T: Real> ModelParams<T> {
    /// Zero-filled model with shapes from `cfg`.
    pub fn zeros(cfg: ModelConfig) -> Self {
        let layers = (0..cfg.num_layers).map(|_| LayerParams::zeros(&cfg)).collect();
        ModelParams {
            embedding: vec![T::zero(); cfg.vocab_size * cfg.hidden_dim],
            final_norm: vec![T::zero(); cfg.hidden_dim],
            layers,
            config: cfg,
        }
    }

    /// Embedding row for a token.
    pub fn embed_row(&self, token: u32) -> &[T] {
        let d = self.config.hidden_dim;
        &self.embedding[token as usize * d..(token as usize + 1) * d]
    }

    /// Converts every tensor to another activation type.
    pub fn cast<U: Real>(&self) -> ModelParams<U> {
        let cv = |v: &[T]| v.iter().map(|x| U::from_f64(x.to_f64())).collect::<Vec<U>>();
        ModelParams {
            config: self.config.clone(),
            embedding: cv(&self.embedding),
            final_norm: cv(&self.final_norm),
            layers: self
                .layers
                .iter()
                .map(|l| LayerParams {
                    pre_norm: cv(&l.pre_norm),
                    gate_proj: cv(&l.gate_proj),
                    x_proj: cv(&l.x_proj),
                    b_proj: cv(&l.b_proj),
                    c_proj: cv(&l.c_proj),
                    delta_proj: cv(&l.delta_proj),
                    delta_bias: cv(&l.delta_bias),
                    a: cv(&l.a),
                    d_skip: cv(&l.d_skip),
                    conv_x: cv(&l.conv_x),
                    conv_b: cv(&l.conv_b),
                    conv_c: cv(&l.conv_c),
                    conv_x_bias: cv(&l.conv_x_bias),
                    conv_b_bias: cv(&l.conv_b_bias),
                    conv_c_bias: cv(&l.conv_c_bias),
                    gated_norm: cv(&l.gated_norm),
                    out_proj: cv(&l.out_proj),
                })
                .collect(),
        }
    }
}
