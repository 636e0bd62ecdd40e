use std::fmt::Write as _;

use crate::lp_model::{GeneralLp, Relation, Sense};

/// Shortest representation that parses back to the same `f64`.
fn num(x: f64) -> String {
    format!("{x:?}")
}

/// Writes `p` as free-format MPS. A maximization is written with a negated
/// objective, since MPS objectives are minimized.
pub fn write_mps(p: &GeneralLp) -> String {
    let sign = if p.sense == Sense::Maximize { -1.0 } else { 1.0 };
    let name = if p.name.is_empty() { "UNNAMED" } else { &p.name };
    let mut out = String::new();
    let _ = writeln!(out, "NAME {name}");
    out.push_str("ROWS\n N  OBJ\n");
    for row in &p.rows {
        let kind = match row.relation {
            Relation::Le => 'L',
            Relation::Ge => 'G',
            Relation::Eq => 'E',
        };
        let _ = writeln!(out, " {kind}  {}", row.name);
    }

    out.push_str("COLUMNS\n");
    for (j, var) in p.var_names.iter().enumerate() {
        let mut wrote = false;
        if let Some(&c) = p.objective.get(&j) {
            let _ = writeln!(out, "    {var}  OBJ  {}", num(sign * c));
            wrote = true;
        }
        for row in &p.rows {
            if let Some(&a) = row.coeffs.get(&j) {
                let _ = writeln!(out, "    {var}  {}  {}", row.name, num(a));
                wrote = true;
            }
        }
        if !wrote {
            // keeps the column declared
            let _ = writeln!(out, "    {var}  OBJ  0.0");
        }
    }

    out.push_str("RHS\n");
    if p.objective_offset != 0.0 {
        let _ = writeln!(out, "    RHS  OBJ  {}", num(-sign * p.objective_offset));
    }
    for row in p.rows.iter().filter(|r| r.rhs != 0.0) {
        let _ = writeln!(out, "    RHS  {}  {}", row.name, num(row.rhs));
    }

    if p.rows.iter().any(|r| r.range.is_some()) {
        out.push_str("RANGES\n");
        for row in &p.rows {
            if let Some(r) = row.range {
                let _ = writeln!(out, "    RNG  {}  {}", row.name, num(r));
            }
        }
    }

    let mut bounds = String::new();
    for (var, b) in p.var_names.iter().zip(&p.bounds) {
        let (lo, up) = (b.lower, b.upper);
        if lo == up {
            let _ = writeln!(bounds, " FX BND  {var}  {}", num(lo));
            continue;
        }
        match (lo == f64::NEG_INFINITY, up == f64::INFINITY) {
            (true, true) => {
                let _ = writeln!(bounds, " FR BND  {var}");
            }
            (true, false) => {
                let _ = writeln!(bounds, " MI BND  {var}");
                let _ = writeln!(bounds, " UP BND  {var}  {}", num(up));
            }
            (false, up_inf) => {
                if lo != 0.0 {
                    let _ = writeln!(bounds, " LO BND  {var}  {}", num(lo));
                }
                if !up_inf {
                    let _ = writeln!(bounds, " UP BND  {var}  {}", num(up));
                }
            }
        }
    }
    if !bounds.is_empty() {
        out.push_str("BOUNDS\n");
        out.push_str(&bounds);
    }
    out.push_str("ENDATA\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp_model::{Bound, Row};
    use crate::mps_io::parse_mps;

    #[test]
    fn round_trip_small() {
        let mut lp = GeneralLp::new("T", Sense::Minimize);
        let x = lp.add_var("x", 1.5);
        let y = lp.add_var("y", -0.1);
        lp.bounds[y] = Bound::new(-2.0, 3.0);
        lp.objective_offset = 0.25;
        let mut r = Row::new("r", Relation::Ge, 1.0).with_coeffs([(x, 1.0), (y, 1.0 / 3.0)]);
        r.range = Some(2.0);
        lp.add_row(r);
        assert_eq!(parse_mps(&write_mps(&lp)).unwrap(), lp);
    }
}
