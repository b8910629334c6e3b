//! Regenerating the tables of `cd(K_n^(k))`, `d(n,k,i)` and `n_{k,d}`, and
//! comparing them against the published values.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use convexdim_core::constructions::n_kd;
use convexdim_core::theorems::{cd_complete, d_skeleton};

/// Published values of `cd(K_n^(k))`, rows `k = 1..9`, columns `n = 2..18`.
pub const PUBLISHED_CD: &str = "\
k\\n,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18
1,1,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2
2,,2,2,3,4,4,4,4,4,4,4,4,4,4,4,4,4
3,,,2,3,4,5,6,6,6,6,6,6,6,6,6,6,6
4,,,,2,4,5,6,7,8,8,8,8,8,8,8,8,8
5,,,,,2,4,6,7,8,9,10,10,10,10,10,10,10
6,,,,,,2,4,6,8,9,10,11,12,12,12,12,12
7,,,,,,,2,4,6,8,10,11,12,13,14,14,14
8,,,,,,,,2,4,6,8,10,12,13,14,15,16
9,,,,,,,,,2,4,6,8,10,12,14,15,16
";

/// Published values of `d(n,k,2)`, rows `k = 1..9`, columns `n = 3..18`.
pub const PUBLISHED_D2: &str = "\
k\\n,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18
1,2,3,4,5,6,6,6,6,6,6,6,6,6,6,6,6
2,2,3,4,5,6,7,8,8,8,8,8,8,8,8,8,8
3,,3,4,5,6,7,8,9,10,10,10,10,10,10,10,10
4,,,4,5,6,6,7,8,9,10,11,12,12,12,12,12
5,,,,5,6,7,7,8,9,10,11,12,13,14,14,14
6,,,,,6,7,8,8,9,10,11,12,13,14,15,16
7,,,,,,6,8,9,9,10,11,12,13,14,15,16
8,,,,,,,6,8,10,10,11,12,13,14,15,16
9,,,,,,,,6,8,10,11,12,13,14,15,16
";

/// Published values of `n_{k,d}`, rows `k = 1..7`, columns `d = 1..14`.
pub const PUBLISHED_NKD: &str = "\
k\\d,1,2,3,4,5,6,7,8,9,10,11,12,13,14
1,2,inf,inf,inf,inf,inf,inf,inf,inf,inf,inf,inf,inf,inf
2,2,4,5,inf,inf,inf,inf,inf,inf,inf,inf,inf,inf,inf
3,3,4,5,6,7,inf,inf,inf,inf,inf,inf,inf,inf,inf
4,4,5,5,6,7,8,9,inf,inf,inf,inf,inf,inf,inf
5,5,6,6,7,7,8,9,10,11,inf,inf,inf,inf,inf
6,6,7,7,8,8,9,9,10,11,12,13,inf,inf,inf
7,7,8,8,9,9,10,10,11,11,12,13,14,15,inf
";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Cd,
    D,
    Nkd,
}

/// A grid with one row per `k`; empty cells are outside the formula's domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub corner: String,
    pub columns: Vec<usize>,
    pub rows: Vec<(usize, Vec<String>)>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.corner.clone();
        for c in &self.columns {
            write!(out, ",{c}").unwrap();
        }
        out.push('\n');
        for (r, cells) in &self.rows {
            write!(out, "{r}").unwrap();
            for cell in cells {
                write!(out, ",{cell}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_csv(text: &str) -> anyhow::Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| anyhow::anyhow!("empty table"))?;
        let mut head = header.split(',');
        let corner = head.next().unwrap_or_default().to_string();
        let columns = head.map(|c| c.trim().parse()).collect::<Result<Vec<usize>, _>>()?;
        let mut rows = Vec::new();
        for line in lines {
            let mut cells = line.split(',');
            let r = cells.next().unwrap_or_default().trim().parse()?;
            let cells: Vec<String> = cells.map(|c| c.trim().to_string()).collect();
            anyhow::ensure!(cells.len() == columns.len(), "row {r} has {} cells", cells.len());
            rows.push((r, cells));
        }
        Ok(Table { corner, columns, rows })
    }

    pub fn cell(&self, row: usize, column: usize) -> Option<&str> {
        let c = self.columns.iter().position(|&x| x == column)?;
        let (_, cells) = self.rows.iter().find(|(r, _)| *r == row)?;
        Some(cells[c].as_str())
    }
}

/// Rows are `k`, columns `n` (or `d` for [`Which::Nkd`]).
pub fn generate(which: Which, rows: RangeInclusive<usize>, columns: RangeInclusive<usize>, i: usize) -> Table {
    let corner = match which {
        Which::Nkd => "k\\d",
        _ => "k\\n",
    };
    let cell = |k: usize, c: usize| -> String {
        let value = match which {
            Which::Cd => cd_complete(c, k).map(|v| v.to_string()),
            Which::D => d_skeleton(c, k, i).map(|v| v.to_string()),
            Which::Nkd => n_kd(k, c).map(|v| v.to_string()),
        };
        value.unwrap_or_default()
    };
    Table {
        corner: corner.into(),
        columns: columns.clone().collect(),
        rows: rows.map(|k| (k, columns.clone().map(|c| cell(k, c)).collect())).collect(),
    }
}

pub fn published(which: Which, i: usize) -> Option<Table> {
    let text = match (which, i) {
        (Which::Cd, _) => PUBLISHED_CD,
        (Which::D, 2) => PUBLISHED_D2,
        (Which::Nkd, _) => PUBLISHED_NKD,
        _ => return None,
    };
    Some(Table::parse_csv(text).expect("embedded tables parse"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

/// Compare the cells the two tables share. Returns the number compared and
/// every disagreement.
pub fn diff(found: &Table, expected: &Table) -> (usize, Vec<Mismatch>) {
    let mut compared = 0;
    let mut out = Vec::new();
    for (r, cells) in &found.rows {
        for (c, cell) in found.columns.iter().zip(cells) {
            let Some(exp) = expected.cell(*r, *c) else { continue };
            compared += 1;
            if exp != cell {
                out.push(Mismatch { row: *r, column: *c, expected: exp.into(), found: cell.clone() });
            }
        }
    }
    (compared, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_tables_are_regenerated() {
        for (which, rows, cols, i) in [(Which::Cd, 1..=9, 2..=18, 0), (Which::D, 1..=9, 3..=18, 2), (Which::Nkd, 1..=7, 1..=14, 0)] {
            let t = generate(which, rows, cols, i);
            let p = published(which, i).unwrap();
            assert_eq!(t, p);
            assert_eq!(t.to_csv(), p.to_csv());
        }
    }

    #[test]
    fn published_cell_counts() {
        let count = |t: Table| t.rows.iter().flat_map(|(_, c)| c).filter(|c| !c.is_empty()).count();
        // k <= n-1 in the first two, every cell in the third
        assert_eq!(count(published(Which::Cd, 0).unwrap()), (1..=9).map(|k| 18 - k).sum::<usize>());
        assert_eq!(count(published(Which::D, 2).unwrap()), 16 + (2..=9).map(|k| 18 - k).sum::<usize>());
        assert_eq!(count(published(Which::Nkd, 0).unwrap()), 98);
    }

    #[test]
    fn diff_reports_changes() {
        let mut t = generate(Which::Cd, 1..=3, 2..=6, 0);
        t.rows[1].1[3] = "9".into();
        let (n, m) = diff(&t, &published(Which::Cd, 0).unwrap());
        assert_eq!(n, 15);
        assert_eq!(m, [Mismatch { row: 2, column: 5, expected: "3".into(), found: "9".into() }]);
    }
}
