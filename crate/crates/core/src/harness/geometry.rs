//! Synthetic point configurations.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// A circular helix sampled at `n` equally spaced parameter values.
///
/// Point `i` sits at angle `t = 2π·turns·i/(n−1)` with coordinates
/// `(radius·cos t, radius·sin t, pitch·t/2π)`, so `pitch` is the rise per
/// turn.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Helix {
    pub n: usize,
    pub turns: f64,
    pub radius: f64,
    pub pitch: f64,
}

impl Helix {
    /// The stand-in geometry used by the synthetic experiments: a long,
    /// thin helix that is genuinely three dimensional.
    pub fn standard(n: usize) -> Self {
        Helix { n, turns: 10.0, radius: 0.15, pitch: 0.75 }
    }

    pub fn points(&self) -> DMatrix<f64> {
        let denom = (self.n.max(2) - 1) as f64;
        DMatrix::from_fn(self.n, 3, |i, c| {
            let t = TAU * self.turns * i as f64 / denom;
            match c {
                0 => self.radius * t.cos(),
                1 => self.radius * t.sin(),
                _ => self.pitch * t / TAU,
            }
        })
    }
}
