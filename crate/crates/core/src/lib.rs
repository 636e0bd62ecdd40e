//! Symmetric primal-dual simplex pivoting over Tucker's compact tableau.
//!
//! A problem `maximize c·x, A x <= b, x >= 0` and its dual
//! `minimize v·b, v A >= c, v >= 0` share one tableau. Each iteration picks a
//! pivot from one of six schemes, preferring the one that most reduces the
//! number of infeasible rows and columns, and the run ends in one of six
//! primal/dual outcomes.
//!
//! ```
//! use tucker_core::{solve, CanonicalLp, SolveOptions, TerminalClass};
//!
//! let p = CanonicalLp::new(vec![vec![2.0, 1.0], vec![1.0, 1.0]], vec![16.0, 10.0], vec![6.0, 3.0]).unwrap();
//! let r = solve(&p, &SolveOptions::default()).unwrap();
//! assert_eq!(r.class, TerminalClass::OPTIMAL);
//! assert_eq!(r.objective, Some(48.0));
//! ```

pub mod error;
pub mod lp_model;
pub mod mps_io;
pub mod oracle;
pub mod pivot_select;
pub mod solver;
pub mod tableau;

pub use error::{Error, Result};
pub use lp_model::{
    canonicalize, map_back, Bound, CanonicalLp, CanonicalSolution, GeneralLp, OriginalSolution, Relation, Row,
    RowOrigin, Sense, TransformRecord, VarTransform,
};
pub use mps_io::{emit_report, parse_mps, read_mps, text_header, text_row, write_mps, ReportFormat, ReportInput};
pub use oracle::{oracle_solve, simulate_delta_ii, OracleStatus, OracleVerdict};
pub use pivot_select::{
    enumerate_candidates, lem, predicted_delta_ii, select_pivot, tie_break_lex, PivotCandidate, PivotScheme,
    SchemeOrder, SchemeSet,
};
pub use solver::{
    classify_best_effort, classify_terminal, classify_terminal_in, detect_cycle, solve, solve_tableau, Certificate,
    Classification, IterationRecord, SolveOptions, SolveReport, Status, TerminalClass,
};
pub use tableau::{CellType, Label, Sign, Tableau, DEFAULT_TOL};
