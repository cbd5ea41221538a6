//! Rectangular sweep grids with per-cell values and optimizer metadata.

use serde::Serialize;

/// Optimizer record attached to a sweep cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CellOptimum {
    /// Optimal laser detuning, meV.
    pub delta_l: f64,
    /// Optimal two-photon detuning, meV.
    pub delta: f64,
    /// Number of objective evaluations spent.
    pub evaluations: usize,
    /// The optimum sits on a search bound.
    pub on_boundary: bool,
}

/// Rectangular grid of scalar results over two swept axes.
///
/// Cells that failed to compute stay `None` (marked missing, never zero).
#[derive(Debug, Clone, Serialize)]
pub struct SweepGrid {
    pub x_name: String,
    pub y_name: String,
    pub x_axis: Vec<f64>,
    pub y_axis: Vec<f64>,
    /// Row-major over (x, y): index = ix * y_axis.len() + iy.
    pub values: Vec<Option<f64>>,
    pub optima: Vec<Option<CellOptimum>>,
}

impl SweepGrid {
    pub fn new(x_name: &str, y_name: &str, x_axis: Vec<f64>, y_axis: Vec<f64>) -> Self {
        let n = x_axis.len() * y_axis.len();
        Self {
            x_name: x_name.to_string(),
            y_name: y_name.to_string(),
            x_axis,
            y_axis,
            values: vec![None; n],
            optima: vec![None; n],
        }
    }

    pub fn idx(&self, ix: usize, iy: usize) -> usize {
        ix * self.y_axis.len() + iy
    }

    pub fn get(&self, ix: usize, iy: usize) -> Option<f64> {
        self.values[self.idx(ix, iy)]
    }

    pub fn set(&mut self, ix: usize, iy: usize, value: f64) {
        let i = self.idx(ix, iy);
        self.values[i] = Some(value);
    }
}
