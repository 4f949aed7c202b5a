//! Graph/weight configuration and the spatial grid shared by all evolutions.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Tolerance for the simplex constraint on the weights.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// The star graph `S_k` with edge weights `alpha`.
///
/// Weights are kept sorted ascending; the permutation back to the caller's
/// labelling is retained so user-facing edge labels survive round trips.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StarConfig {
    k: usize,
    alpha: Vec<f64>,
    /// `order[m]` is the original index of the `m`-th smallest weight.
    order: Vec<usize>,
}

impl StarConfig {
    /// Validate `(k, alpha)` and return the configuration with weights
    /// sorted ascending.
    ///
    /// Requires `k >= 2`, all weights positive and summing to one within
    /// [`WEIGHT_SUM_TOL`].
    pub fn new(k: usize, alpha: &[f64]) -> Result<Self> {
        if k < 2 {
            return Err(Error::parameter(format!("k must be >= 2, got {k}")));
        }
        if alpha.len() != k {
            return Err(Error::parameter(format!(
                "expected {k} weights, got {}",
                alpha.len()
            )));
        }
        for (j, &a) in alpha.iter().enumerate() {
            if !(a > 0.0) || !a.is_finite() {
                return Err(Error::parameter(format!(
                    "weight alpha[{j}] = {a} must be positive"
                )));
            }
        }
        let sum: f64 = alpha.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::parameter(format!("weights sum to {sum}, not 1")));
        }
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| alpha[a].total_cmp(&alpha[b]));
        let sorted: Vec<f64> = order.iter().map(|&m| alpha[m]).collect();
        Ok(StarConfig {
            k,
            alpha: sorted,
            order,
        })
    }

    /// Uniform weights `alpha_j = 1/k`.
    pub fn uniform(k: usize) -> Result<Self> {
        Self::new(k, &vec![1.0 / k as f64; k])
    }

    /// Number of edges (equivalently, of copies of the graph).
    pub fn k(&self) -> usize {
        self.k
    }

    /// `k - 1`: the inward transport speed and the number of edges other
    /// than a given one.
    pub fn l(&self) -> usize {
        self.k - 1
    }

    /// Weights in ascending order.
    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    /// Original (caller) index of the edge stored at sorted position `m`.
    pub fn original_index(&self, m: usize) -> usize {
        self.order[m]
    }

    /// Weights in the caller's original labelling.
    pub fn alpha_original(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.k];
        for (m, &orig) in self.order.iter().enumerate() {
            out[orig] = self.alpha[m];
        }
        out
    }
}

/// Uniform finite-volume grid on `[0, L]` with `n_cells` cells of width `h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    h: f64,
    n_cells: usize,
}

impl Grid {
    pub fn new(h: f64, n_cells: usize) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::parameter(format!("cell width h = {h} must be > 0")));
        }
        if n_cells < 2 {
            return Err(Error::parameter(format!(
                "n_cells = {n_cells} must be >= 2"
            )));
        }
        Ok(Grid { h, n_cells })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    /// Truncation length `L = n_cells * h`.
    pub fn length(&self) -> f64 {
        self.h * self.n_cells as f64
    }

    /// Midpoint of cell `n`.
    pub fn midpoint(&self, n: usize) -> f64 {
        (n as f64 + 0.5) * self.h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_symmetric_pair() {
        let c = StarConfig::new(2, &[0.5, 0.5]).unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(c.l(), 1);
    }

    #[test]
    fn accepts_valid_triple() {
        let c = StarConfig::new(3, &[0.2, 0.3, 0.5]).unwrap();
        assert_eq!(c.k(), 3);
        assert_eq!(c.l(), 2);
        assert_eq!(c.alpha(), &[0.2, 0.3, 0.5]);
    }

    #[test]
    fn rejects_bad_weight_sum() {
        let err = StarConfig::new(3, &[0.2, 0.3, 0.6]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("sum to 1.1"), "unexpected message: {msg}");
    }

    #[test]
    fn rejects_small_k_and_nonpositive_weights() {
        assert!(StarConfig::new(1, &[1.0]).is_err());
        assert!(StarConfig::new(2, &[1.0, 0.0]).is_err());
        assert!(StarConfig::new(2, &[1.5, -0.5]).is_err());
    }

    #[test]
    fn sorts_and_remembers_permutation() {
        let c = StarConfig::new(3, &[0.5, 0.2, 0.3]).unwrap();
        assert_eq!(c.alpha(), &[0.2, 0.3, 0.5]);
        assert_eq!(c.original_index(0), 1);
        assert_eq!(c.original_index(2), 0);
        assert_eq!(c.alpha_original(), vec![0.5, 0.2, 0.3]);
    }

    #[test]
    fn validation_is_idempotent() {
        let c = StarConfig::new(3, &[0.2, 0.3, 0.5]).unwrap();
        let again = StarConfig::new(c.k(), c.alpha()).unwrap();
        assert_eq!(c.alpha(), again.alpha());
        assert_eq!(again.l(), again.k() - 1);
    }

    #[test]
    fn grid_basics() {
        let g = Grid::new(0.25, 8).unwrap();
        assert_eq!(g.length(), 2.0);
        assert_eq!(g.midpoint(0), 0.125);
        assert!(Grid::new(0.0, 8).is_err());
        assert!(Grid::new(0.1, 1).is_err());
    }
}
