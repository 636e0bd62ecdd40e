//! Candidate pivots for the six selection schemes and the choice between them.
//!
//! | scheme | indicator         | admissible cells | ratio test                        |
//! |--------|-------------------|------------------|-----------------------------------|
//! | DSPNI  | row `beta < 0`    | `-Nn`, `-Nz`     | min `gamma_j / alpha_Ij`          |
//! | PSPPI  | col `gamma > 0`   | `+Pp`, `+Zp`     | min `beta_i / alpha_iJ`           |
//! | PTPPI  | both              | `-Np`            | none                              |
//! | DTPNI  | both              | `+Np`            | none                              |
//! | DSPZI  | row `beta = 0`    | `-Zn`, `-Zz`     | min `gamma_j / alpha_Ij`          |
//! | PSPZI  | col `gamma = 0`   | `+Pz`, `+Zz`     | min `beta_i / alpha_iJ`           |
//!
//! Ratio ties are broken by an implicit lexicographic perturbation. On the primal
//! side every variable is shifted by its own `eps`, which perturbs row `i` to
//! `beta_i + eps[row label] + Σ_l alpha_il eps[col label l]`; the dual side is
//! symmetric with `gamma_j - eps[col label] + Σ_i alpha_ij eps[row label i]`.
//! Primal perturbations rank row labels before column labels and dual ones the
//! reverse, so that every zero entry of the initial tableau is perturbed to the
//! feasible side.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{exchange_update, Label, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(clippy::upper_case_acronyms)]
pub enum PivotScheme {
    DSPNI,
    PSPPI,
    PTPPI,
    DTPNI,
    DSPZI,
    PSPZI,
}

impl PivotScheme {
    pub const ALL: [PivotScheme; 6] = [
        PivotScheme::DSPNI,
        PivotScheme::PSPPI,
        PivotScheme::PTPPI,
        PivotScheme::DTPNI,
        PivotScheme::DSPZI,
        PivotScheme::PSPZI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PivotScheme::DSPNI => "DSPNI",
            PivotScheme::PSPPI => "PSPPI",
            PivotScheme::PTPPI => "PTPPI",
            PivotScheme::DTPNI => "DTPNI",
            PivotScheme::DSPZI => "DSPZI",
            PivotScheme::PSPZI => "PSPZI",
        }
    }

    /// 0 for standard, 1 for tricky, 2 for zero-indicator schemes.
    pub fn tier(self) -> usize {
        match self {
            PivotScheme::DSPNI | PivotScheme::PSPPI => 0,
            PivotScheme::PTPPI | PivotScheme::DTPNI => 1,
            PivotScheme::DSPZI | PivotScheme::PSPZI => 2,
        }
    }

    pub fn is_zero_indicator(self) -> bool {
        self.tier() == 2
    }

    /// Schemes that look at a primal-infeasible or degenerate row and keep
    /// dual feasibility use the dual perturbation; the rest use the primal one.
    fn uses_dual_key(self) -> bool {
        matches!(self, PivotScheme::DSPNI | PivotScheme::DSPZI | PivotScheme::DTPNI)
    }

    /// Admissible cell-type codes.
    pub fn cell_types(self) -> &'static [&'static str] {
        match self {
            PivotScheme::DSPNI => &["-Nn", "-Nz"],
            PivotScheme::PSPPI => &["+Pp", "+Zp"],
            PivotScheme::PTPPI => &["-Np"],
            PivotScheme::DTPNI => &["+Np"],
            PivotScheme::DSPZI => &["-Zn", "-Zz"],
            PivotScheme::PSPZI => &["+Pz", "+Zz"],
        }
    }
}

impl fmt::Display for PivotScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PivotScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PivotScheme::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::SchemeOrder(format!("unknown scheme `{}`", s.trim())))
    }
}

/// Order in which schemes are tried. Any permutation is allowed as long as the
/// standard, tricky and zero-indicator pairs keep their positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeOrder([PivotScheme; 6]);

impl Default for SchemeOrder {
    fn default() -> Self {
        SchemeOrder(PivotScheme::ALL)
    }
}

impl SchemeOrder {
    pub fn new(order: [PivotScheme; 6]) -> Result<Self> {
        for (pos, s) in order.iter().enumerate() {
            if s.tier() != pos / 2 {
                return Err(Error::SchemeOrder(format!("{s} cannot be at position {}", pos + 1)));
            }
        }
        if order[0] == order[1] || order[2] == order[3] || order[4] == order[5] {
            return Err(Error::SchemeOrder("each scheme must appear exactly once".into()));
        }
        Ok(SchemeOrder(order))
    }

    pub fn schemes(&self) -> &[PivotScheme; 6] {
        &self.0
    }
}

impl FromStr for SchemeOrder {
    type Err = Error;

    /// Comma-separated scheme names, e.g. `PSPPI,DSPNI,PTPPI,DTPNI,DSPZI,PSPZI`.
    fn from_str(s: &str) -> Result<Self> {
        let names: Vec<PivotScheme> = s.split(',').map(str::parse).collect::<Result<_>>()?;
        let order: [PivotScheme; 6] = names
            .try_into()
            .map_err(|v: Vec<_>| Error::SchemeOrder(format!("expected 6 schemes, got {}", v.len())))?;
        SchemeOrder::new(order)
    }
}

impl fmt::Display for SchemeOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|s| s.name()).collect();
        f.write_str(&names.join(","))
    }
}

/// Which tiers `select_pivot` may draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SchemeSet {
    /// Standard and tricky schemes.
    #[default]
    Primary,
    /// Only the zero-indicator schemes.
    ZeroIndicator,
    All,
}

impl SchemeSet {
    pub fn contains(self, s: PivotScheme) -> bool {
        match self {
            SchemeSet::Primary => !s.is_zero_indicator(),
            SchemeSet::ZeroIndicator => s.is_zero_indicator(),
            SchemeSet::All => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PivotCandidate {
    pub row: usize,
    pub col: usize,
    pub scheme: PivotScheme,
    pub delta_ii: i64,
    pub lem: f64,
    pub tie_key: Vec<f64>,
}

fn check_pivot(t: &Tableau, row: usize, col: usize) -> Result<f64> {
    let p = t.alpha(row, col);
    if p.abs() <= t.tol() || !p.is_finite() {
        return Err(Error::ZeroPivot { row, col, value: p });
    }
    Ok(p)
}

/// Change in the infeasibility index that pivoting on `(row, col)` would cause,
/// from a look-ahead over `beta` and `gamma` only, in O(m + n).
pub fn predicted_delta_ii(t: &Tableau, row: usize, col: usize) -> Result<i64> {
    let p = check_pivot(t, row, col)?;
    let tol = t.tol();
    let (beta, gamma) = (t.beta(), t.gamma());
    let bad_beta = |b: f64| (b < -tol) as i64;
    let bad_gamma = |g: f64| (g > tol) as i64;

    let scaled_beta = beta[row] / p;
    let mut sigma = 0;
    for (i, &b) in beta.iter().enumerate() {
        let after = if i == row {
            scaled_beta
        } else {
            let a = t.alpha(i, col);
            if a != 0.0 {
                exchange_update(b, a, scaled_beta)
            } else {
                b
            }
        };
        sigma += bad_beta(after) - bad_beta(b);
    }

    let g_c = gamma[col];
    let pivot_row = t.alpha_row(row);
    let mut rho = 0;
    for (j, &g) in gamma.iter().enumerate() {
        let after = if j == col {
            -g_c / p
        } else if g_c != 0.0 {
            exchange_update(g, g_c, pivot_row[j] / p)
        } else {
            g
        };
        rho += bad_gamma(after) - bad_gamma(g);
    }
    Ok(sigma + rho)
}

/// Local effectiveness measure `|beta_I gamma_J / alpha_IJ|`, the size of the
/// objective move a pivot makes.
pub fn lem(t: &Tableau, row: usize, col: usize) -> Result<f64> {
    let p = check_pivot(t, row, col)?;
    Ok((t.beta()[row] * t.gamma()[col] / p).abs())
}

fn primal_slot(label: Label, m: usize) -> usize {
    match label {
        Label::Row(r) => r,
        Label::Column(j) => m + j,
    }
}

fn dual_slot(label: Label, n: usize) -> usize {
    label.slot(n)
}

fn clamp(x: f64, tol: f64) -> f64 {
    if x.abs() <= tol {
        0.0
    } else {
        x
    }
}

/// Perturbed ratio of row `row` against column `col`:
/// `[beta_I / a, then eps coefficients / a in primal eps order]`, `a = alpha_IJ`.
pub fn primal_key(t: &Tableau, row: usize, col: usize) -> Vec<f64> {
    let (m, n) = (t.m(), t.n());
    let a = t.alpha(row, col);
    let mut key = vec![0.0; 1 + m + n];
    key[0] = clamp(t.beta()[row], t.tol()) / a;
    key[1 + primal_slot(t.row_labels()[row], m)] = 1.0 / a;
    for (l, label) in t.col_labels().iter().enumerate() {
        key[1 + primal_slot(*label, m)] = t.alpha(row, l) / a;
    }
    key
}

/// Perturbed dual ratio of column `col` against row `row`:
/// `[gamma_J / a, then eps coefficients / a in dual eps order]`, `a = alpha_IJ`.
pub fn dual_key(t: &Tableau, row: usize, col: usize) -> Vec<f64> {
    let (m, n) = (t.m(), t.n());
    let a = t.alpha(row, col);
    let mut key = vec![0.0; 1 + m + n];
    key[0] = clamp(t.gamma()[col], t.tol()) / a;
    key[1 + dual_slot(t.col_labels()[col], n)] = -1.0 / a;
    for (i, label) in t.row_labels().iter().enumerate() {
        key[1 + dual_slot(*label, n)] = t.alpha(i, col) / a;
    }
    key
}

fn near_min(x: f64, min: f64, tol: f64) -> bool {
    x <= min + tol * (1.0 + min.abs())
}

/// Index of the lexicographically smallest key, treating components within
/// `tol` (relative) of the running minimum as equal. Remaining ties go to the
/// earliest index, so callers pass items in row-major order.
#[allow(clippy::needless_range_loop)]
fn lex_argmin(keys: &[Vec<f64>], tol: f64) -> usize {
    let mut alive: Vec<usize> = (0..keys.len()).collect();
    let width = keys.iter().map(Vec::len).max().unwrap_or(0);
    for k in 0..width {
        if alive.len() <= 1 {
            break;
        }
        let min = alive.iter().map(|&i| keys[i][k]).fold(f64::INFINITY, f64::min);
        alive.retain(|&i| near_min(keys[i][k], min, tol));
    }
    alive[0]
}

/// Row chosen by the primal ratio test in `col` among rows with `alpha > tol`
/// and `beta >= -tol`.
fn primal_ratio_row(t: &Tableau, col: usize) -> Option<usize> {
    let tol = t.tol();
    let rows: Vec<usize> = (0..t.m())
        .filter(|&i| t.alpha(i, col) > tol && t.beta()[i] >= -tol)
        .collect();
    let ratio = |i: usize| clamp(t.beta()[i], tol) / t.alpha(i, col);
    let min = rows.iter().map(|&i| ratio(i)).fold(f64::INFINITY, f64::min);
    let tied: Vec<usize> = rows.into_iter().filter(|&i| near_min(ratio(i), min, tol)).collect();
    match tied.len() {
        0 => None,
        1 => Some(tied[0]),
        _ => {
            let keys: Vec<Vec<f64>> = tied.iter().map(|&i| primal_key(t, i, col)).collect();
            Some(tied[lex_argmin(&keys, tol)])
        }
    }
}

/// Column chosen by the dual ratio test in `row` among columns with
/// `alpha < -tol` and `gamma <= tol`.
fn dual_ratio_col(t: &Tableau, row: usize) -> Option<usize> {
    let tol = t.tol();
    let cols: Vec<usize> = (0..t.n())
        .filter(|&j| t.alpha(row, j) < -tol && t.gamma()[j] <= tol)
        .collect();
    let ratio = |j: usize| clamp(t.gamma()[j], tol) / t.alpha(row, j);
    let min = cols.iter().map(|&j| ratio(j)).fold(f64::INFINITY, f64::min);
    let tied: Vec<usize> = cols.into_iter().filter(|&j| near_min(ratio(j), min, tol)).collect();
    match tied.len() {
        0 => None,
        1 => Some(tied[0]),
        _ => {
            let keys: Vec<Vec<f64>> = tied.iter().map(|&j| dual_key(t, row, j)).collect();
            Some(tied[lex_argmin(&keys, tol)])
        }
    }
}

/// Candidate cells of one scheme, in row-major order.
fn cells(t: &Tableau, s: PivotScheme) -> Vec<(usize, usize)> {
    let tol = t.tol();
    let (beta, gamma) = (t.beta(), t.gamma());
    let mut out = Vec::new();
    match s {
        PivotScheme::PSPPI | PivotScheme::PSPZI => {
            let wanted = |g: f64| {
                if s == PivotScheme::PSPPI {
                    g > tol
                } else {
                    g.abs() <= tol
                }
            };
            for (j, &g) in gamma.iter().enumerate() {
                if wanted(g) {
                    if let Some(i) = primal_ratio_row(t, j) {
                        out.push((i, j));
                    }
                }
            }
        }
        PivotScheme::DSPNI | PivotScheme::DSPZI => {
            let wanted = |b: f64| {
                if s == PivotScheme::DSPNI {
                    b < -tol
                } else {
                    b.abs() <= tol
                }
            };
            for (i, &b) in beta.iter().enumerate() {
                if wanted(b) {
                    if let Some(j) = dual_ratio_col(t, i) {
                        out.push((i, j));
                    }
                }
            }
        }
        PivotScheme::PTPPI | PivotScheme::DTPNI => {
            let want_pos = s == PivotScheme::DTPNI;
            for i in (0..t.m()).filter(|&i| beta[i] < -tol) {
                for (j, &g) in gamma.iter().enumerate() {
                    let a = t.alpha(i, j);
                    let ok = if want_pos { a > tol } else { a < -tol };
                    if g > tol && ok {
                        out.push((i, j));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn tie_key(t: &Tableau, s: PivotScheme, row: usize, col: usize) -> Vec<f64> {
    if s.uses_dual_key() {
        dual_key(t, row, col)
    } else {
        primal_key(t, row, col)
    }
}

fn candidate(t: &Tableau, s: PivotScheme, row: usize, col: usize, delta_ii: i64) -> PivotCandidate {
    PivotCandidate {
        row,
        col,
        scheme: s,
        delta_ii,
        lem: (t.beta()[row] * t.gamma()[col] / t.alpha(row, col)).abs(),
        tie_key: tie_key(t, s, row, col),
    }
}

fn delta_of(t: &Tableau, row: usize, col: usize) -> i64 {
    predicted_delta_ii(t, row, col).expect("candidate cells have nonzero pivots")
}

/// All candidates of scheme `s`, in row-major order. Standard and
/// zero-indicator schemes give at most one candidate per indicator row or
/// column; tricky schemes give every matching cell.
pub fn enumerate_candidates(t: &Tableau, s: PivotScheme) -> Vec<PivotCandidate> {
    cells(t, s)
        .into_iter()
        .map(|(i, j)| candidate(t, s, i, j, delta_of(t, i, j)))
        .collect()
}

/// Picks the candidate with the lexicographically smallest `tie_key`, then the
/// smallest `(row, col)`.
pub fn tie_break_lex(t: &Tableau, tied: &[PivotCandidate]) -> Option<PivotCandidate> {
    let mut sorted: Vec<&PivotCandidate> = tied.iter().collect();
    sorted.sort_by_key(|c| (c.row, c.col));
    let keys: Vec<Vec<f64>> = sorted.iter().map(|c| c.tie_key.clone()).collect();
    if keys.is_empty() {
        return None;
    }
    Some(sorted[lex_argmin(&keys, t.tol())].clone())
}

/// Next pivot: the first scheme in `order` (restricted to `set`) with any
/// candidate, and within it the candidate with the smallest predicted change of
/// the infeasibility index, ties broken by [`tie_break_lex`].
pub fn select_pivot(t: &Tableau, order: &SchemeOrder, set: SchemeSet) -> Option<PivotCandidate> {
    for &s in order.schemes().iter().filter(|s| set.contains(**s)) {
        let found = cells(t, s);
        if found.is_empty() {
            continue;
        }
        let scored: Vec<(usize, usize, i64)> = found.into_iter().map(|(i, j)| (i, j, delta_of(t, i, j))).collect();
        let best = scored.iter().map(|c| c.2).min().expect("nonempty");
        let tied: Vec<PivotCandidate> = scored
            .into_iter()
            .filter(|c| c.2 == best)
            .map(|(i, j, d)| candidate(t, s, i, j, d))
            .collect();
        return tie_break_lex(t, &tied);
    }
    None
}

/// Total order used to compare two candidates of the same scheme, exposed for
/// tests: smaller `delta_ii` first, then `tie_key`, then position.
pub fn compare_candidates(a: &PivotCandidate, b: &PivotCandidate) -> Ordering {
    a.delta_ii
        .cmp(&b.delta_ii)
        .then_with(|| {
            a.tie_key
                .iter()
                .zip(&b.tie_key)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
        .then_with(|| (a.row, a.col).cmp(&(b.row, b.col)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1() -> Tableau {
        Tableau::from_parts(
            vec![vec![2.0, 1.0], vec![1.0, 1.0]],
            vec![16.0, 10.0],
            vec![6.0, 3.0],
            0.0,
        )
        .unwrap()
    }

    fn ex5() -> Tableau {
        Tableau::from_parts(
            vec![vec![-1.0, 1.0], vec![2.0, -1.0]],
            vec![-5.0, -4.0],
            vec![1.0, 1.0],
            0.0,
        )
        .unwrap()
    }

    fn cells_of(c: &[PivotCandidate]) -> Vec<(usize, usize)> {
        c.iter().map(|c| (c.row, c.col)).collect()
    }

    #[test]
    fn psppi_candidates_of_example1() {
        let c = enumerate_candidates(&ex1(), PivotScheme::PSPPI);
        assert_eq!(cells_of(&c), vec![(0, 0), (1, 1)]);
        assert_eq!(c[0].delta_ii, -2);
        assert_eq!(c[1].delta_ii, -1);
        assert!(enumerate_candidates(&ex1(), PivotScheme::DSPNI).is_empty());
    }

    #[test]
    fn ptppi_candidates_of_example5() {
        let c = enumerate_candidates(&ex5(), PivotScheme::PTPPI);
        assert_eq!(cells_of(&c), vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn predicted_delta_examples() {
        assert_eq!(predicted_delta_ii(&ex1(), 0, 0).unwrap(), -2);
        assert_eq!(predicted_delta_ii(&ex1(), 1, 1).unwrap(), -1);
        let t = Tableau::from_parts(
            vec![vec![2.0, -1.0], vec![1.0, 3.0]],
            vec![0.0, -2.0],
            vec![1.0, 4.0],
            0.0,
        )
        .unwrap();
        // a row with beta = 0 keeps every beta unchanged
        for j in 0..2 {
            let after = t.pivot(0, j).unwrap();
            assert_eq!(after.primal_infeasible_count(), t.primal_infeasible_count());
        }
    }

    #[test]
    fn predicted_delta_rejects_zero_pivot() {
        let t = Tableau::from_parts(vec![vec![0.0]], vec![1.0], vec![1.0], 0.0).unwrap();
        assert!(predicted_delta_ii(&t, 0, 0).is_err());
        assert!(lem(&t, 0, 0).is_err());
    }

    #[test]
    fn lem_examples() {
        assert_eq!(lem(&ex1(), 0, 0).unwrap(), 48.0);
        assert_eq!(lem(&ex1(), 1, 1).unwrap(), 30.0);
        let t = Tableau::from_parts(vec![vec![3.0]], vec![5.0], vec![0.0], 0.0).unwrap();
        assert_eq!(lem(&t, 0, 0).unwrap(), 0.0);
    }

    #[test]
    fn select_on_example1() {
        let order = SchemeOrder::default();
        let c = select_pivot(&ex1(), &order, SchemeSet::Primary).unwrap();
        assert_eq!((c.scheme, c.row, c.col), (PivotScheme::PSPPI, 0, 0));

        let terminal = ex1().pivot(0, 0).unwrap();
        assert!(select_pivot(&terminal, &order, SchemeSet::Primary).is_none());
        let alt = select_pivot(&terminal, &order, SchemeSet::All).unwrap();
        assert_eq!((alt.scheme, alt.row, alt.col), (PivotScheme::PSPZI, 1, 1));
    }

    #[test]
    fn example4_terminal_has_no_pivot() {
        let t = Tableau::from_parts(
            vec![vec![0.2, -0.4], vec![-0.4, -0.2]],
            vec![0.2, 0.6],
            vec![-2.8, 1.6],
            0.0,
        )
        .unwrap();
        assert!(select_pivot(&t, &SchemeOrder::default(), SchemeSet::All).is_none());
    }

    #[test]
    fn single_candidate_is_its_own_tie_break() {
        let c = enumerate_candidates(&ex1(), PivotScheme::PSPPI);
        assert_eq!(tie_break_lex(&ex1(), &c[..1]).unwrap(), c[0]);
        assert!(tie_break_lex(&ex1(), &[]).is_none());
    }

    #[test]
    fn equal_ratios_follow_the_perturbation() {
        // rows (beta, alpha_J) = (2, 1) and (4, 2): both ratios are 2
        let t = Tableau::from_parts(
            vec![vec![1.0, 1.0], vec![2.0, 1.0]],
            vec![2.0, 4.0],
            vec![1.0, 0.0],
            0.0,
        )
        .unwrap();
        let c = enumerate_candidates(&t, PivotScheme::PSPPI);
        assert_eq!(cells_of(&c), vec![(1, 0)]);

        // explicit perturbation: b_i + e^(slot+1), slots ordered rows first
        let e: f64 = 1e-3;
        let eps = |slot: usize| e.powi(slot as i32 + 1);
        let perturbed: Vec<f64> = (0..2)
            .map(|i| {
                let mut b = t.beta()[i] + eps(i);
                for l in 0..2 {
                    b += t.alpha(i, l) * eps(2 + l);
                }
                b / t.alpha(i, 0)
            })
            .collect();
        assert!(perturbed[1] < perturbed[0]);
    }

    #[test]
    fn duplicated_rows_fall_back_to_smallest_index() {
        let t = Tableau::from_parts(vec![vec![1.0], vec![1.0]], vec![2.0, 2.0], vec![1.0], 0.0).unwrap();
        let mut a = enumerate_candidates(&t, PivotScheme::PSPPI)[0].clone();
        a.row = 0;
        a.tie_key = vec![1.0, 2.0];
        let mut b = a.clone();
        b.row = 1;
        assert_eq!(tie_break_lex(&t, &[b.clone(), a.clone()]).unwrap().row, 0);
    }

    #[test]
    fn scheme_order_parsing() {
        let o: SchemeOrder = "PSPPI,DSPNI,DTPNI,PTPPI,PSPZI,DSPZI".parse().unwrap();
        assert_eq!(o.schemes()[0], PivotScheme::PSPPI);
        assert_eq!(o.to_string(), "PSPPI,DSPNI,DTPNI,PTPPI,PSPZI,DSPZI");
        assert!("PTPPI,DSPNI,PSPPI,DTPNI,DSPZI,PSPZI".parse::<SchemeOrder>().is_err());
        assert!("DSPNI,DSPNI,PTPPI,DTPNI,DSPZI,PSPZI".parse::<SchemeOrder>().is_err());
        assert!("DSPNI,PSPPI".parse::<SchemeOrder>().is_err());
        assert!("DSPNI,PSPPI,PTPPI,DTPNI,DSPZI,XXXXX".parse::<SchemeOrder>().is_err());
    }

    #[test]
    fn candidates_have_admissible_cell_types() {
        for t in [ex1(), ex5()] {
            for s in PivotScheme::ALL {
                for c in enumerate_candidates(&t, s) {
                    let code = t.cell_type(c.row, c.col).code();
                    assert!(s.cell_types().contains(&code.as_str()), "{s} {code}");
                }
            }
        }
    }
}
