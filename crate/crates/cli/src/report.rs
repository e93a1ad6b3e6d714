//! Machine-readable query reports.

use clap::ValueEnum;
use polycensus::census::{self, CensusError};
use polycensus::oracle::{self, OracleError};
use polycensus::{Count, Symmetry};
use serde::Serialize;

use crate::CliError;

pub const REPORT_SCHEMA: &str = "polycensus.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// simplified closed-form formulas
    #[value(name = "closed")]
    ClosedForm,
    /// Burnside average of per-class fix counts
    Burnside,
    /// exhaustive orbit enumeration (small n only)
    Oracle,
}

/// What `count` computes: `p(n)` or `p(m, n)`, dihedral or cyclic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Query {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(serialize_with = "symmetry_name")]
    pub symmetry: Symmetry,
}

fn symmetry_name<S: serde::Serializer>(s: &Symmetry, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(s.name())
}

impl Query {
    pub fn evaluate(&self, method: Method) -> Result<Count, CliError> {
        let Query { n, m, symmetry } = *self;
        if n < 3 {
            return Err(CensusError::PerimeterTooSmall { n, min: 3 }.into());
        }
        let cyclic = symmetry == Symmetry::Cyclic;
        let value = match (method, m) {
            (Method::ClosedForm, None) if cyclic => census::count_polygons_cyclic(n)?,
            (Method::ClosedForm, None) => census::count_polygons(n)?,
            (Method::ClosedForm, Some(m)) if cyclic => census::count_mgons_cyclic(n, m),
            (Method::ClosedForm, Some(m)) => census::count_mgons(n, m),
            (Method::Burnside, None) if cyclic => census::count_polygons_cyclic_via_burnside(n)?,
            (Method::Burnside, None) => census::count_polygons_via_burnside(n)?,
            (Method::Burnside, Some(m)) if m < 3 => Count::zero(),
            (Method::Burnside, Some(m)) if cyclic => census::count_mgons_cyclic_via_burnside(n, m)?,
            (Method::Burnside, Some(m)) => census::count_mgons_via_burnside(n, m)?,
            (Method::Oracle, m) => {
                let n = usize::try_from(n).unwrap_or(usize::MAX);
                if n > oracle::ORACLE_MAX_N {
                    return Err(OracleError::OutOfRange {
                        n,
                        max: oracle::ORACLE_MAX_N,
                    }
                    .into());
                }
                match m.map(|m| m as usize) {
                    Some(m) if m < 3 || m > n => Count::zero(),
                    weight => oracle::orbit_count(n, symmetry, weight)?,
                }
            }
        };
        Ok(value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MethodResult {
    pub method: Method,
    /// Decimal string; counts outgrow JSON numbers.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub schema: &'static str,
    pub query: Query,
    /// The common value when all methods agree, else the first method's.
    pub result: String,
    pub results: Vec<MethodResult>,
    /// Present only when more than one method ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

impl CensusReport {
    pub fn run(query: Query, methods: &[Method]) -> Result<Self, CliError> {
        let values = methods
            .iter()
            .map(|&m| query.evaluate(m).map(|v| (m, v)))
            .collect::<Result<Vec<_>, _>>()?;
        let agreement = (values.len() > 1).then(|| values.windows(2).all(|w| w[0].1 == w[1].1));
        Ok(CensusReport {
            schema: REPORT_SCHEMA,
            query,
            result: values
                .first()
                .map(|(_, v)| v.to_string())
                .unwrap_or_default(),
            results: values
                .into_iter()
                .map(|(method, value)| MethodResult {
                    method,
                    value: value.to_string(),
                })
                .collect(),
            agreement,
        })
    }

    pub fn agrees(&self) -> bool {
        self.agreement.unwrap_or(true)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
