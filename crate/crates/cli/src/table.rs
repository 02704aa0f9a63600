use std::fmt::Write as _;
use std::io::{self, Write};

/// One CSV cell. Reals are written with 17 significant digits so the text
/// round-trips to the same `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Flag(bool),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Flag(v)
    }
}

fn push_cell(out: &mut String, c: &Cell) {
    match *c {
        Cell::Int(i) => write!(out, "{i}").unwrap(),
        Cell::Real(x) if x.is_nan() => out.push_str("nan"),
        Cell::Real(x) => write!(out, "{x:.16e}").unwrap(),
        Cell::Flag(b) => out.push_str(if b { "1" } else { "0" }),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    /// Real values of a column, `None` if it does not exist.
    pub fn reals(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column(name)?;
        Some(
            self.rows
                .iter()
                .map(|r| match r[i] {
                    Cell::Real(x) => x,
                    Cell::Int(n) => n as f64,
                    Cell::Flag(b) => b as u8 as f64,
                })
                .collect(),
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(32 * self.columns.len() * (self.rows.len() + 1));
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            debug_assert_eq!(row.len(), self.columns.len());
            for (i, c) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                push_cell(&mut out, c);
            }
            out.push('\n');
        }
        out
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(self.to_csv().as_bytes())?;
        w.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_round_trips() {
        let mut t = Table::new(vec!["n", "x", "ok"]);
        let x = 0.1 + 0.2;
        t.rows.push(vec![Cell::Int(3), Cell::Real(x), Cell::Flag(true)]);
        t.rows
            .push(vec![Cell::Int(-1), Cell::Real(f64::NAN), Cell::Flag(false)]);
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,x,ok");
        let field = lines[1].split(',').nth(1).unwrap();
        assert_eq!(field.parse::<f64>().unwrap(), x);
        assert_eq!(lines[2], "-1,nan,0");
    }
}
