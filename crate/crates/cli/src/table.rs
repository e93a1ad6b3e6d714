//! The triangular table of m-gon counts and its row of column sums.

use clap::ValueEnum;
use polycensus::census::{count_mgons, count_polygons};
use polycensus::Count;
use rayon::prelude::*;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Plain,
    Csv,
}

/// `p(m, n)` for `3 <= m <= n <= max_n`, plus `p(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    max_n: u64,
    /// `cells[n - 3][m - 3]`, for `m <= n`
    cells: Vec<Vec<Count>>,
    totals: Vec<Count>,
}

impl CensusTable {
    pub fn compute(max_n: u64) -> Result<Self, CliError> {
        if max_n < 3 {
            return Err(CliError::Usage(format!(
                "--max-n must be at least 3 (no polygon has perimeter below 3), got {max_n}"
            )));
        }
        let columns: Vec<(Vec<Count>, Count)> = (3..=max_n)
            .into_par_iter()
            .map(|n| {
                let column = (3..=n).map(|m| count_mgons(n, m)).collect();
                Ok((column, count_polygons(n)?))
            })
            .collect::<Result<_, CliError>>()?;
        let (cells, totals) = columns.into_iter().unzip();
        Ok(CensusTable {
            max_n,
            cells,
            totals,
        })
    }

    pub fn max_n(&self) -> u64 {
        self.max_n
    }

    /// `p(m, n)`, or `None` outside the triangle.
    pub fn get(&self, m: u64, n: u64) -> Option<&Count> {
        if m < 3 || m > n || n > self.max_n {
            return None;
        }
        self.cells[(n - 3) as usize].get((m - 3) as usize)
    }

    pub fn total(&self, n: u64) -> Option<&Count> {
        if n < 3 {
            return None;
        }
        self.totals.get((n - 3) as usize)
    }

    fn grid(&self) -> Vec<Vec<String>> {
        let mut header = vec!["m\\n".to_string()];
        header.extend((3..=self.max_n).map(|n| n.to_string()));
        let mut grid = vec![header];
        for m in 3..=self.max_n {
            let mut row = vec![m.to_string()];
            row.extend(
                (3..=self.max_n).map(|n| self.get(m, n).map(Count::to_string).unwrap_or_default()),
            );
            grid.push(row);
        }
        grid
    }

    fn totals_row(&self) -> Vec<String> {
        let mut row = vec!["p_n".to_string()];
        row.extend(self.totals.iter().map(Count::to_string));
        row
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Csv => self.render_csv(),
            TableFormat::Plain => self.render_plain(),
        }
    }

    /// Header `m\n,3,4,...`, one row per `m`, blank cells where `m > n`,
    /// then a `p_n` row of column sums.
    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        for row in self
            .grid()
            .into_iter()
            .chain(std::iter::once(self.totals_row()))
        {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Right-aligned columns: the triangle, a blank line, then `n` / `p_n`.
    pub fn render_plain(&self) -> String {
        let grid = self.grid();
        let mut totals_header = vec!["n".to_string()];
        totals_header.extend((3..=self.max_n).map(|n| n.to_string()));
        let totals = self.totals_row();
        let width = grid
            .iter()
            .chain([&totals_header, &totals])
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        let line = |row: &[String]| {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            cells.join(" ").trim_end().to_string() + "\n"
        };
        let mut out: String = grid.iter().map(|r| line(r)).collect();
        out.push('\n');
        out.push_str(&line(&totals_header));
        out.push_str(&line(&totals));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_table() {
        let table = CensusTable::compute(3).unwrap();
        assert_eq!(table.render_csv(), "m\\n,3\n3,1\np_n,1\n");
        assert_eq!(table.get(3, 3).unwrap(), &Count::from(1u32));
        assert!(CensusTable::compute(2).is_err());
    }

    #[test]
    fn csv_blank_cells_above_diagonal() {
        let table = CensusTable::compute(5).unwrap();
        assert_eq!(
            table.render_csv(),
            "m\\n,3,4,5\n3,1,0,1\n4,,1,1\n5,,,1\np_n,1,1,3\n"
        );
    }

    #[test]
    fn plain_layout() {
        let table = CensusTable::compute(5).unwrap();
        let expected = "\
m\\n   3   4   5
  3   1   0   1
  4       1   1
  5           1

  n   3   4   5
p_n   1   1   3
";
        assert_eq!(table.render_plain(), expected);
    }

    #[test]
    fn columns_sum_to_totals() {
        let table = CensusTable::compute(40).unwrap();
        for n in 3..=40 {
            let sum: Count = (3..=n).map(|m| table.get(m, n).unwrap()).sum();
            assert_eq!(&sum, table.total(n).unwrap());
        }
    }
}
