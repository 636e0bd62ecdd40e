//! Free-format MPS reader. Fields are split on whitespace, so names must not
//! contain blanks. Section headers start in the first column; data lines are
//! indented. Lines starting with `*` are comments.

use std::collections::HashMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lp_model::{Bound, GeneralLp, Relation, Row, Sense};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Rows,
    Columns,
    Rhs,
    Ranges,
    Bounds,
    End,
}

enum RowRef {
    Objective,
    /// An extra N row, ignored.
    Free,
    Constraint(usize),
}

struct Parser {
    lp: GeneralLp,
    rows: HashMap<String, RowRef>,
    cols: HashMap<String, usize>,
    has_objective: bool,
}

fn number(token: &str, line: usize) -> Result<f64> {
    token
        .parse::<f64>()
        .ok()
        .filter(|v| !v.is_nan())
        .ok_or_else(|| Error::MalformedNumber {
            line,
            token: token.to_string(),
        })
}

fn malformed(line: usize, message: impl Into<String>) -> Error {
    Error::MalformedLine {
        line,
        message: message.into(),
    }
}

impl Parser {
    fn row(&self, name: &str, line: usize) -> Result<&RowRef> {
        self.rows.get(name).ok_or_else(|| Error::UndeclaredReference {
            line,
            kind: "row",
            name: name.to_string(),
        })
    }

    fn col(&self, name: &str, line: usize) -> Result<usize> {
        self.cols.get(name).copied().ok_or_else(|| Error::UndeclaredReference {
            line,
            kind: "column",
            name: name.to_string(),
        })
    }

    fn rows_line(&mut self, f: &[&str], line: usize) -> Result<()> {
        let [kind, name] = f else {
            return Err(malformed(line, "expected `<type> <row>`"));
        };
        if self.rows.contains_key(*name) {
            return Err(Error::DuplicateRow {
                line,
                name: name.to_string(),
            });
        }
        let entry = match kind.to_ascii_uppercase().as_str() {
            "N" if !self.has_objective => {
                self.has_objective = true;
                RowRef::Objective
            }
            "N" => RowRef::Free,
            k => {
                let relation = match k {
                    "L" => Relation::Le,
                    "G" => Relation::Ge,
                    "E" => Relation::Eq,
                    _ => return Err(malformed(line, format!("unknown row type `{kind}`"))),
                };
                RowRef::Constraint(self.lp.add_row(Row::new(*name, relation, 0.0)))
            }
        };
        self.rows.insert(name.to_string(), entry);
        Ok(())
    }

    fn columns_line(&mut self, f: &[&str], line: usize) -> Result<()> {
        if f.iter().any(|t| t.eq_ignore_ascii_case("'MARKER'")) {
            return Ok(());
        }
        if f.len() != 3 && f.len() != 5 {
            return Err(malformed(line, "expected `<column> <row> <value> [<row> <value>]`"));
        }
        let col = match self.cols.get(f[0]) {
            Some(&j) => j,
            None => {
                let j = self.lp.add_var(f[0], 0.0);
                self.cols.insert(f[0].to_string(), j);
                j
            }
        };
        for pair in f[1..].chunks(2) {
            let value = number(pair[1], line)?;
            match *self.row(pair[0], line)? {
                RowRef::Objective if value != 0.0 => {
                    self.lp.objective.insert(col, value);
                }
                RowRef::Objective => {}
                RowRef::Free => {}
                RowRef::Constraint(i) => {
                    self.lp.rows[i].coeffs.insert(col, value);
                }
            }
        }
        Ok(())
    }

    /// `[set] row value [row value]`, shared by RHS and RANGES.
    fn pairs<'a>(f: &'a [&'a str], line: usize) -> Result<&'a [&'a str]> {
        match f.len() {
            2 | 4 => Ok(f),
            3 | 5 => Ok(&f[1..]),
            _ => Err(malformed(line, "expected `[<set>] <row> <value> [<row> <value>]`")),
        }
    }

    fn rhs_line(&mut self, f: &[&str], line: usize) -> Result<()> {
        for pair in Self::pairs(f, line)?.chunks(2) {
            let value = number(pair[1], line)?;
            match *self.row(pair[0], line)? {
                RowRef::Objective => self.lp.objective_offset = -value,
                RowRef::Free => {}
                RowRef::Constraint(i) => self.lp.rows[i].rhs = value,
            }
        }
        Ok(())
    }

    fn ranges_line(&mut self, f: &[&str], line: usize) -> Result<()> {
        for pair in Self::pairs(f, line)?.chunks(2) {
            let value = number(pair[1], line)?;
            match *self.row(pair[0], line)? {
                RowRef::Constraint(i) => self.lp.rows[i].range = Some(value),
                _ => return Err(malformed(line, format!("range on objective row `{}`", pair[0]))),
            }
        }
        Ok(())
    }

    fn bounds_line(&mut self, f: &[&str], line: usize) -> Result<()> {
        let kind = f.first().map(|k| k.to_ascii_uppercase()).unwrap_or_default();
        let needs_value = !matches!(kind.as_str(), "FR" | "MI" | "PL");
        let rest = &f[1.min(f.len())..];
        // optional bound-set name
        let (name, value) = match (needs_value, rest.len()) {
            (true, 2) => (rest[0], Some(rest[1])),
            (true, 3) => (rest[1], Some(rest[2])),
            (false, 1) => (rest[0], None),
            (false, 2) => (rest[1], None),
            _ => return Err(malformed(line, "wrong number of fields in bound")),
        };
        let j = self.col(name, line)?;
        let value = value.map(|v| number(v, line)).transpose()?;
        let b: &mut Bound = &mut self.lp.bounds[j];
        match (kind.as_str(), value) {
            ("LO", Some(v)) => b.lower = v,
            ("UP", Some(v)) => {
                // a negative upper bound on a default-bounded column makes it
                // unbounded below
                if v < 0.0 && b.lower == 0.0 {
                    b.lower = f64::NEG_INFINITY;
                }
                b.upper = v;
            }
            ("FX", Some(v)) => {
                b.lower = v;
                b.upper = v;
            }
            ("FR", None) => *b = Bound::free(),
            ("MI", None) => b.lower = f64::NEG_INFINITY,
            ("PL", None) => b.upper = f64::INFINITY,
            _ => return Err(malformed(line, format!("unsupported bound type `{kind}`"))),
        }
        Ok(())
    }
}

/// Parses an MPS document. The first `N` row is the objective, read as a
/// minimization; further `N` rows are dropped. An RHS entry on the objective
/// row sets the objective offset to minus its value.
pub fn parse_mps(text: &str) -> Result<GeneralLp> {
    let mut p = Parser {
        lp: GeneralLp::new("", Sense::Minimize),
        rows: HashMap::new(),
        cols: HashMap::new(),
        has_objective: false,
    };
    let mut section: Option<Section> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() || raw.starts_with('*') {
            continue;
        }
        let fields: Vec<&str> = raw.split_whitespace().collect();
        if !raw.starts_with(char::is_whitespace) {
            let head = fields[0].to_ascii_uppercase();
            section = Some(match head.as_str() {
                "NAME" => {
                    p.lp.name = fields.get(1).unwrap_or(&"").to_string();
                    continue;
                }
                "ROWS" => Section::Rows,
                "COLUMNS" => Section::Columns,
                "RHS" => Section::Rhs,
                "RANGES" => Section::Ranges,
                "BOUNDS" => Section::Bounds,
                "ENDATA" => Section::End,
                _ => {
                    return Err(Error::UnknownSection {
                        line,
                        name: fields[0].to_string(),
                    })
                }
            });
            if section == Some(Section::End) {
                break;
            }
            continue;
        }
        match section {
            Some(Section::Rows) => p.rows_line(&fields, line)?,
            Some(Section::Columns) => p.columns_line(&fields, line)?,
            Some(Section::Rhs) => p.rhs_line(&fields, line)?,
            Some(Section::Ranges) => p.ranges_line(&fields, line)?,
            Some(Section::Bounds) => p.bounds_line(&fields, line)?,
            Some(Section::End) | None => return Err(malformed(line, "data outside of a section")),
        }
    }
    if !p.has_objective {
        return Err(Error::MissingObjective);
    }
    p.lp.validate()?;
    Ok(p.lp)
}

/// Reads and parses an MPS file.
pub fn read_mps(path: impl AsRef<Path>) -> Result<GeneralLp> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_mps(&text)
}
