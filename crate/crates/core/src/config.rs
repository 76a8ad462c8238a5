//! Model hyperparameters.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the depthwise convolution window is aligned relative to the
/// current token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ConvAlignment {
    /// Window covers positions `t-k+1 ..= t` (the current token included).
    /// This is what published checkpoints use.
    #[default]
    Standard,
    /// Window covers positions `t-k ..= t-1`, excluding the current token.
    ExcludeCurrent,
}

/// Hyperparameters of an L-layer, H-head scalar-gated SSM language model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelConfig {
    /// Vocabulary size V.
    pub vocab_size: usize,
    /// Hidden dimension d.
    pub hidden_dim: usize,
    /// Number of layers L.
    pub num_layers: usize,
    /// Heads per layer H.
    pub num_heads: usize,
    /// Head dimension P.
    pub head_dim: usize,
    /// State dimension N.
    pub state_dim: usize,
    /// Depthwise conv kernel size k.
    #[serde(default = "default_conv_kernel")]
    pub conv_kernel: usize,
    /// Whether the conv channels carry a bias term.
    #[serde(default = "default_true")]
    pub conv_bias: bool,
    /// Conv window alignment.
    #[serde(default)]
    pub conv_alignment: ConvAlignment,
    /// Training length in tokens. Metadata consumed by the collapse
    /// detector and calibration; does not affect the forward pass.
    #[serde(default)]
    pub train_len: u64,
}

fn default_conv_kernel() -> usize {
    4
}

fn default_true() -> bool {
    true
}

impl ModelConfig {
    /// Dimensions every stream and parameter tensor derive from.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("vocab_size", self.vocab_size),
            ("hidden_dim", self.hidden_dim),
            ("num_heads", self.num_heads),
            ("head_dim", self.head_dim),
            ("state_dim", self.state_dim),
            ("conv_kernel", self.conv_kernel),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be >= 1")));
            }
        }
        Ok(())
    }

    /// Checks the convention used by all published checkpoints:
    /// `P = 64`, `N = 128`, `H = 2d / P`. Loading a published checkpoint
    /// rejects configs that break it unless an override is set.
    pub fn validate_official(&self) -> Result<()> {
        self.validate()?;
        if self.head_dim != 64 || self.state_dim != 128 {
            return Err(Error::Config(format!(
                "official checkpoints use P=64, N=128; got P={}, N={}",
                self.head_dim, self.state_dim
            )));
        }
        if self.num_heads * self.head_dim != 2 * self.hidden_dim {
            return Err(Error::Config(format!(
                "official checkpoints satisfy H = 2d/P; got H={}, d={}, P={}",
                self.num_heads, self.hidden_dim, self.head_dim
            )));
        }
        Ok(())
    }

    /// Inner width H*P, the channel count of the x path.
    pub fn inner_dim(&self) -> usize {
        self.num_heads * self.head_dim
    }

    /// Channel count of the convolved projections: H*P for x plus N each
    /// for B and C.
    pub fn conv_channels(&self) -> usize {
        self.inner_dim() + 2 * self.state_dim
    }

    /// Length of the stored per-channel conv tail.
    pub fn conv_tail_len(&self) -> usize {
        match self.conv_alignment {
            ConvAlignment::Standard => self.conv_kernel - 1,
            ConvAlignment::ExcludeCurrent => self.conv_kernel,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg_130m() -> ModelConfig {
        ModelConfig {
            vocab_size: 50288,
            hidden_dim: 768,
            num_layers: 24,
            num_heads: 24,
            head_dim: 64,
            state_dim: 128,
            conv_kernel: 4,
            conv_bias: true,
            conv_alignment: ConvAlignment::Standard,
            train_len: 8192,
        }
    }

    #[test]
    fn official_130m_accepted() {
        cfg_130m().validate_official().unwrap();
    }

    #[test]
    fn official_convention_enforced() {
        let mut cfg = cfg_130m();
        cfg.num_heads = 23;
        assert!(cfg.validate_official().is_err());
        let mut cfg = cfg_130m();
        cfg.state_dim = 64;
        assert!(cfg.validate_official().is_err());
    }

    #[test]
    fn zero_dims_rejected() {
        let mut cfg = cfg_130m();
        cfg.head_dim = 0;
        assert!(cfg.validate().is_err());
    }
}
