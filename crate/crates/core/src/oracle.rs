//! Brute-force ground truth for small problems, independent of the tableau
//! pivoting code: every choice of `m` columns of `[A | I]` is tried as a basis.

use crate::error::{Error, Result};
use crate::lp_model::CanonicalLp;
use crate::pivot_select::predicted_delta_ii;
use crate::tableau::Tableau;

pub const MAX_SIZE: usize = 24;
const PIVOT_THRESHOLD: f64 = 1e-10;
const FEAS_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum OracleStatus {
    Optimal { value: f64, x: Vec<f64> },
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleVerdict {
    pub status: OracleStatus,
    /// Distinct feasible vertices in `x`, deduplicated at 1e-9.
    pub vertices: Vec<Vec<f64>>,
}

impl OracleVerdict {
    pub fn value(&self) -> Option<f64> {
        match self.status {
            OracleStatus::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// Solves `B z = rhs` by Gaussian elimination with partial pivoting; `None`
/// when a pivot falls below the threshold.
#[allow(clippy::needless_range_loop)]
fn solve_dense(mut b: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Option<Vec<f64>> {
    let k = rhs.len();
    for c in 0..k {
        let p = (c..k).max_by(|&x, &y| b[x][c].abs().total_cmp(&b[y][c].abs()))?;
        if b[p][c].abs() <= PIVOT_THRESHOLD {
            return None;
        }
        b.swap(c, p);
        rhs.swap(c, p);
        for r in c + 1..k {
            let f = b[r][c] / b[c][c];
            if f != 0.0 {
                for j in c..k {
                    b[r][j] -= f * b[c][j];
                }
                rhs[r] -= f * rhs[c];
            }
        }
    }
    let mut z = vec![0.0; k];
    for c in (0..k).rev() {
        let s: f64 = (c + 1..k).map(|j| b[c][j] * z[j]).sum();
        z[c] = (rhs[c] - s) / b[c][c];
    }
    Some(z)
}

fn transpose(b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let k = b.len();
    (0..k).map(|i| (0..k).map(|j| b[j][i]).collect()).collect()
}

/// Next `k`-combination of `0..total` in lexicographic order.
fn next_combination(idx: &mut [usize], total: usize) -> bool {
    let k = idx.len();
    for pos in (0..k).rev() {
        if idx[pos] < total - k + pos {
            idx[pos] += 1;
            for q in pos + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn oracle_solve(p: &CanonicalLp) -> Result<OracleVerdict> {
    let (m, n) = (p.m(), p.n());
    if m + n > MAX_SIZE {
        return Err(Error::TooLarge {
            size: m + n,
            limit: MAX_SIZE,
        });
    }
    // column k of [A | I]
    let column = |k: usize| -> Vec<f64> {
        if k < n {
            p.a.iter().map(|row| row[k]).collect()
        } else {
            (0..m).map(|i| if i == k - n { 1.0 } else { 0.0 }).collect()
        }
    };
    let cost = |k: usize| if k < n { p.c[k] } else { 0.0 };

    let mut vertices: Vec<Vec<f64>> = Vec::new();
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut unbounded = false;

    let mut basis: Vec<usize> = (0..m).collect();
    loop {
        let bmat: Vec<Vec<f64>> = {
            let cols: Vec<Vec<f64>> = basis.iter().map(|&k| column(k)).collect();
            (0..m).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
        };
        if let Some(z) = solve_dense(bmat.clone(), p.b.clone()) {
            if z.iter().all(|&v| v >= -FEAS_TOL) {
                let mut x = vec![0.0; n];
                for (pos, &k) in basis.iter().enumerate() {
                    if k < n {
                        x[k] = z[pos].max(0.0);
                    }
                }
                let value: f64 = p.c.iter().zip(&x).map(|(c, x)| c * x).sum();
                if !matches!(best, Some((v, _)) if value <= v) {
                    best = Some((value, x.clone()));
                }
                if !vertices
                    .iter()
                    .any(|v| v.iter().zip(&x).all(|(a, b)| (a - b).abs() <= 1e-9))
                {
                    vertices.push(x);
                }
                // duals y with B^T y = c_B give reduced gains c_k - y·col_k
                let c_b: Vec<f64> = basis.iter().map(|&k| cost(k)).collect();
                if let Some(y) = solve_dense(transpose(&bmat), c_b) {
                    for k in (0..n + m).filter(|k| !basis.contains(k)) {
                        let col = column(k);
                        let gain = cost(k) - y.iter().zip(&col).map(|(a, b)| a * b).sum::<f64>();
                        if gain > FEAS_TOL {
                            if let Some(d) = solve_dense(bmat.clone(), col) {
                                if d.iter().all(|&v| v <= FEAS_TOL) {
                                    unbounded = true;
                                }
                            }
                        }
                    }
                }
            }
        }
        if m == 0 || !next_combination(&mut basis, n + m) {
            break;
        }
    }

    let status = match best {
        None => OracleStatus::Infeasible,
        Some(_) if unbounded => OracleStatus::Unbounded,
        Some((value, x)) => OracleStatus::Optimal { value, x },
    };
    Ok(OracleVerdict { status, vertices })
}

/// Infeasibility-index change found by actually pivoting and recounting.
pub fn simulate_delta_ii(t: &Tableau, row: usize, col: usize) -> Result<i64> {
    let after = t.pivot(row, col)?;
    Ok(after.infeasibility_index() as i64 - t.infeasibility_index() as i64)
}

/// Convenience check used by the CLI: both the oracle and the look-ahead agree.
pub fn delta_agrees(t: &Tableau, row: usize, col: usize) -> Result<bool> {
    Ok(predicted_delta_ii(t, row, col)? == simulate_delta_ii(t, row, col)?)
}
