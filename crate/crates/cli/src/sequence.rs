//! Integer sequences the tool can emit, and the OEIS b-file writer.

use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::ValueEnum;
use polycensus::census::{self, CensusError};
use polycensus::Count;
use rayon::prelude::*;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Family {
    /// m-gons with perimeter n, m fixed
    Pmn,
    /// polygons with perimeter n
    Pn,
    /// m-gons up to rotation only, m fixed
    PmnCyclic,
    /// polygons up to rotation only
    PnCyclic,
    /// nearest integer to n²/48 or (n+3)²/48
    TrianglesNearest,
    /// nearest integer to (n³-3n²+20n)/96 or (n³-7n)/96
    QuadrilateralsNearest,
}

impl Family {
    pub fn needs_m(self) -> bool {
        matches!(self, Family::Pmn | Family::PmnCyclic)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Pmn => "pmn",
            Family::Pn => "pn",
            Family::PmnCyclic => "pmn-cyclic",
            Family::PnCyclic => "pn-cyclic",
            Family::TrianglesNearest => "triangles-nearest",
            Family::QuadrilateralsNearest => "quadrilaterals-nearest",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with the index range to emit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    family: Family,
    m: Option<u64>,
    range: RangeInclusive<u64>,
    offset: Option<u64>,
}

impl SequenceSpec {
    /// Builds a validated spec. `from` defaults to the family's smallest
    /// valid `n`; `offset`, when given, relabels the first emitted index.
    pub fn new(
        family: Family,
        m: Option<u64>,
        from: Option<u64>,
        to: u64,
        offset: Option<u64>,
    ) -> Result<Self, CliError> {
        let m = match (family.needs_m(), m) {
            (true, None) => {
                return Err(CliError::Usage(format!("family {family} requires --m")));
            }
            (true, Some(m)) if m < 3 => {
                return Err(CliError::Usage(format!("--m must be at least 3, got {m}")));
            }
            (false, Some(_)) => {
                return Err(CliError::Usage(format!(
                    "family {family} does not take --m"
                )));
            }
            (_, m) => m,
        };
        let min = natural_min(family, m);
        let from = from.unwrap_or(min);
        if from < min {
            return Err(CliError::Usage(format!(
                "family {family} starts at n = {min}, got --from {from}"
            )));
        }
        if to < from {
            return Err(CliError::Usage(format!("empty range {from}..={to}")));
        }
        Ok(SequenceSpec {
            family,
            m,
            range: from..=to,
            offset,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> Option<u64> {
        self.m
    }

    pub fn range(&self) -> RangeInclusive<u64> {
        self.range.clone()
    }

    /// Index printed for perimeter `n`.
    pub fn index_of(&self, n: u64) -> u64 {
        match self.offset {
            Some(offset) => n - self.range.start() + offset,
            None => n,
        }
    }

    pub fn value(&self, n: u64) -> Result<Count, CensusError> {
        family_value(self.family, self.m, n)
    }

    /// All values in index order. Evaluation is spread across the current
    /// rayon pool; the result order does not depend on it.
    pub fn values(&self) -> Result<Vec<(u64, Count)>, CliError> {
        self.range
            .clone()
            .into_par_iter()
            .map(|n| Ok((self.index_of(n), self.value(n)?)))
            .collect()
    }

    /// Writes the b-file: one `index value` line per term.
    pub fn write_bfile<W: Write>(&self, out: &mut W) -> Result<(), CliError> {
        write_terms(&self.values()?, out)
    }
}

pub fn write_terms<W: Write>(terms: &[(u64, Count)], out: &mut W) -> Result<(), CliError> {
    for (index, value) in terms {
        writeln!(out, "{index} {value}")?;
    }
    Ok(())
}

fn natural_min(family: Family, m: Option<u64>) -> u64 {
    match family {
        Family::Pmn | Family::PmnCyclic => m.unwrap_or(3),
        Family::Pn | Family::PnCyclic => 3,
        Family::TrianglesNearest | Family::QuadrilateralsNearest => 1,
    }
}

pub fn family_value(family: Family, m: Option<u64>, n: u64) -> Result<Count, CensusError> {
    let m = m.unwrap_or(0);
    match family {
        Family::Pmn => Ok(census::count_mgons(n, m)),
        Family::Pn => census::count_polygons(n),
        Family::PmnCyclic => Ok(census::count_mgons_cyclic(n, m)),
        Family::PnCyclic => census::count_polygons_cyclic(n),
        Family::TrianglesNearest => census::triangles_nearest(n),
        Family::QuadrilateralsNearest => census::quadrilaterals_nearest(n),
    }
}
