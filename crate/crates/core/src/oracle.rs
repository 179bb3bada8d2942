// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Dense numeric ground truth for effective resistance.
//!
//! The Laplacian is grounded at vertex 0: its first row and column are
//! dropped and the remaining symmetric positive-definite block is Cholesky
//! factored. With `M` the inverse of that block (padded with a zero row and
//! column for vertex 0), `r(i, j) = M_ii + M_jj - 2 M_ij`, which agrees with
//! the pseudoinverse quadratic form `(e_i - e_j)^T L^+ (e_i - e_j)`.

use std::fmt;

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

use crate::error::{Error, Result};
use crate::graph::Graph;

const GROUND: usize = 0;

/// Comparison policy: absolute tolerance up to `switch_magnitude`, relative
/// tolerance beyond it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub switch_magnitude: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: 1e-9,
            rel: 1e-12,
            switch_magnitude: 1e3,
        }
    }
}

impl Tolerance {
    /// Policy with absolute tolerance `abs`; the relative branch scales with it
    /// so both meet at `switch_magnitude`.
    pub fn with_abs(abs: f64) -> Self {
        let base = Tolerance::default();
        Tolerance {
            abs,
            rel: abs / base.switch_magnitude,
            ..base
        }
    }

    pub fn close(&self, a: f64, b: f64) -> bool {
        let scale = a.abs().max(b.abs());
        let diff = (a - b).abs();
        if scale <= self.switch_magnitude {
            diff <= self.abs
        } else {
            diff <= self.rel * scale
        }
    }
}

fn grounded_factor(g: &Graph) -> Cholesky<f64, Dyn> {
    let n = g.vertex_count();
    let lap = g.laplacian();
    let reduced = DMatrix::<f64>::from_fn(n - 1, n - 1, |i, j| lap[(i + 1, j + 1)] as f64);
    // A connected graph always gives a positive-definite grounded block.
    Cholesky::new(reduced).expect("grounded Laplacian of a connected graph is SPD")
}

fn unit_difference(n: usize, i: usize, j: usize) -> DVector<f64> {
    let mut b = DVector::<f64>::zeros(n - 1);
    if i != GROUND {
        b[i - 1] += 1.0;
    }
    if j != GROUND {
        b[j - 1] -= 1.0;
    }
    b
}

/// Node potentials `x` with `x[0] = 0` and `L x = e_i - e_j`.
pub fn potentials(g: &Graph, i: usize, j: usize) -> Result<Vec<f64>> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    let n = g.vertex_count();
    let x = grounded_factor(g).solve(&unit_difference(n, i, j));
    let mut full = Vec::with_capacity(n);
    full.push(0.0);
    full.extend(x.iter().copied());
    Ok(full)
}

/// Effective resistance between `i` and `j`.
pub fn resistance(g: &Graph, i: usize, j: usize) -> Result<f64> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if i == j {
        return Ok(0.0);
    }
    let x = potentials(g, i, j)?;
    Ok(x[i] - x[j])
}

/// Symmetric matrix of pairwise resistances with an exactly zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceMatrix {
    size: usize,
    entries: Vec<f64>,
}

impl ResistanceMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    /// Sum of all entries, accumulated row by row.
    pub fn total(&self) -> f64 {
        self.entries.iter().sum()
    }
}

pub fn resistance_matrix(g: &Graph) -> ResistanceMatrix {
    let n = g.vertex_count();
    let inv = grounded_factor(g).inverse();
    let m = |a: usize, b: usize| -> f64 {
        if a == GROUND || b == GROUND {
            0.0
        } else {
            inv[(a - 1, b - 1)]
        }
    };
    let mut entries = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let r = m(i, i) + m(j, j) - m(i, j) - m(j, i);
            entries[i * n + j] = r;
            entries[j * n + i] = r;
        }
    }
    ResistanceMatrix { size: n, entries }
}

/// Half the sum of all resistance-matrix entries.
pub fn kirchhoff_numeric(r: &ResistanceMatrix) -> f64 {
    0.5 * r.total()
}

/// `d^T R d / (4 q)` over ordered pairs.
pub fn kemeny_numeric(g: &Graph, r: &ResistanceMatrix) -> f64 {
    let d = g.degrees();
    let q = g.edge_count() as f64;
    let mut acc = 0.0;
    for (i, &di) in d.iter().enumerate() {
        let row: f64 = r
            .row(i)
            .iter()
            .zip(&d)
            .map(|(rij, &dj)| rij * dj as f64)
            .sum();
        acc += di as f64 * row;
    }
    acc / (4.0 * q)
}

#[derive(Debug, Clone, PartialEq)]
pub enum MetricViolation {
    Asymmetric {
        i: usize,
        j: usize,
    },
    NonzeroDiagonal {
        i: usize,
        value: f64,
    },
    NonPositive {
        i: usize,
        j: usize,
        value: f64,
    },
    Triangle {
        x: usize,
        y: usize,
        z: usize,
        excess: f64,
    },
    ReverseTriangle {
        x: usize,
        y: usize,
        z: usize,
        excess: f64,
    },
}

impl fmt::Display for MetricViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Asymmetric { i, j } => write!(f, "r({i},{j}) != r({j},{i})"),
            Self::NonzeroDiagonal { i, value } => write!(f, "r({i},{i}) = {value}"),
            Self::NonPositive { i, j, value } => write!(f, "r({i},{j}) = {value} <= 0"),
            Self::Triangle { x, y, z, excess } => {
                write!(
                    f,
                    "triangle inequality fails at ({x},{y},{z}) by {excess:e}"
                )
            }
            Self::ReverseTriangle { x, y, z, excess } => {
                write!(
                    f,
                    "reverse triangle inequality fails at ({x},{y},{z}) by {excess:e}"
                )
            }
        }
    }
}

/// Check symmetry, zero diagonal, positivity and both triangle inequalities
/// up to slack `tol`.
pub fn check_metric(r: &ResistanceMatrix, tol: f64) -> std::result::Result<(), MetricViolation> {
    let n = r.size();
    for i in 0..n {
        if r.get(i, i) != 0.0 {
            return Err(MetricViolation::NonzeroDiagonal {
                i,
                value: r.get(i, i),
            });
        }
        for j in i + 1..n {
            if r.get(i, j) != r.get(j, i) {
                return Err(MetricViolation::Asymmetric { i, j });
            }
            if r.get(i, j) <= 0.0 {
                return Err(MetricViolation::NonPositive {
                    i,
                    j,
                    value: r.get(i, j),
                });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let rxy = r.get(x, y);
            for z in 0..n {
                let (ryz, rxz) = (r.get(y, z), r.get(x, z));
                let excess = rxz - (rxy + ryz);
                if excess > tol {
                    return Err(MetricViolation::Triangle { x, y, z, excess });
                }
                let excess = (rxy - ryz).abs() - rxz;
                if excess > tol {
                    return Err(MetricViolation::ReverseTriangle { x, y, z, excess });
                }
            }
        }
    }
    Ok(())
}

/// Relative residual `|L x - (e_i - e_j)| / |e_i - e_j|` of the potentials
/// returned by [`potentials`].
pub fn residual(g: &Graph, i: usize, j: usize) -> Result<f64> {
    if i == j {
        return Err(Error::InvalidPair(
            "residual needs distinct vertices".into(),
        ));
    }
    let x = potentials(g, i, j)?;
    let lap = g.laplacian();
    let n = g.vertex_count();
    let mut norm = 0.0;
    for a in 0..n {
        let mut lx = 0.0;
        for b in 0..n {
            lx += lap[(a, b)] as f64 * x[b];
        }
        let rhs = if a == i {
            1.0
        } else if a == j {
            -1.0
        } else {
            0.0
        };
        norm += (lx - rhs).powi(2);
    }
    Ok(norm.sqrt() / 2f64.sqrt())
}
