//! Comparison tables of closed forms, the conjectured value and the oracle.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{conjecture_rhs, m_closed};
use crate::oracle::{self, Budget, Mode, SearchProblem};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Column {
    Formula,
    Conjecture,
    Oracle,
    Gap,
}

impl Column {
    pub const ALL: [Column; 4] = [Column::Formula, Column::Conjecture, Column::Oracle, Column::Gap];

    pub fn as_str(self) -> &'static str {
        match self {
            Column::Formula => "formula",
            Column::Conjecture => "conjecture",
            Column::Oracle => "oracle",
            Column::Gap => "gap",
        }
    }

    pub fn parse(name: &str) -> Result<Column> {
        Column::ALL
            .into_iter()
            .find(|c| c.as_str() == name)
            .ok_or_else(|| Error::arg(format!("unknown column '{name}' (expected formula, conjecture, oracle or gap)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// One table over `n ∈ n_range`, `q ∈ q_range` for fixed `k` and `s`.
#[derive(Clone, Debug)]
pub struct TableRequest {
    pub k: usize,
    pub s: usize,
    pub n_range: RangeInclusive<usize>,
    pub q_range: RangeInclusive<usize>,
    /// Kept in canonical order without duplicates by [`TableRequest::new`].
    pub columns: Vec<Column>,
    pub format: Format,
    /// Per-cell oracle budget.
    pub budget: Budget,
    pub threads: Option<usize>,
}

impl TableRequest {
    pub fn new(k: usize, s: usize, n_range: RangeInclusive<usize>, q_range: RangeInclusive<usize>) -> Self {
        TableRequest {
            k,
            s,
            n_range,
            q_range,
            columns: Column::ALL.to_vec(),
            format: Format::Csv,
            budget: Budget::default(),
            threads: Some(1),
        }
    }

    pub fn with_columns(mut self, mut columns: Vec<Column>) -> Self {
        columns.sort();
        columns.dedup();
        self.columns = columns;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n_range.is_empty() {
            return Err(Error::arg(format!("n range {:?} is empty", self.n_range)));
        }
        if self.q_range.is_empty() {
            return Err(Error::arg(format!("q range {:?} is empty", self.q_range)));
        }
        if self.k < 2 || self.s < 1 {
            return Err(Error::arg(format!("tables need k >= 2 and s >= 1 (got k={}, s={})", self.k, self.s)));
        }
        if self.columns.is_empty() {
            return Err(Error::arg("at least one column is required"));
        }
        crate::family_core::check_capacity(*self.n_range.end())?;
        Ok(())
    }

    fn wants(&self, c: Column) -> bool {
        self.columns.contains(&c)
    }
}

/// A table cell; absent values are cells where the quantity is undefined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: usize,
    pub q: usize,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "big_opt")]
    pub formula: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses_met: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "big_opt")]
    pub conjecture: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proven_optimal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "big_opt")]
    pub gap: Option<BigInt>,
}

fn big_opt<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        // values here are small enough for JSON integers
        Some(b) => match i64::try_from(b) {
            Ok(x) => s.serialize_i64(x),
            Err(_) => s.serialize_str(&b.to_string()),
        },
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub k: usize,
    pub s: usize,
    #[serde(skip)]
    pub columns: Vec<Column>,
    pub rows: Vec<Row>,
}

impl Table {
    /// Whether every oracle cell finished within its budget.
    pub fn complete(&self) -> bool {
        self.rows.iter().all(|r| r.proven_optimal != Some(false))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,q");
        for c in &self.columns {
            out.push(',');
            out.push_str(c.as_str());
        }
        out.push('\n');
        let cell = |v: Option<String>| v.unwrap_or_default();
        for r in &self.rows {
            let _ = write!(out, "{},{}", r.n, r.q);
            for c in &self.columns {
                let v = match c {
                    Column::Formula => cell(r.formula.as_ref().map(|v| v.to_string())),
                    Column::Conjecture => cell(r.conjecture.as_ref().map(|v| v.to_string())),
                    Column::Oracle => cell(r.oracle.map(|v| v.to_string())),
                    Column::Gap => cell(r.gap.as_ref().map(|v| v.to_string())),
                };
                out.push(',');
                out.push_str(&v);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes") + "\n"
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

fn row(req: &TableRequest, n: usize, q: usize) -> Result<Row> {
    let (k, s) = (req.k, req.s);
    let mut r = Row {
        n,
        q,
        formula: None,
        regime: None,
        hypotheses_met: None,
        conjecture: None,
        oracle: None,
        proven_optimal: None,
        nodes: None,
        gap: None,
    };
    let in_domain = n >= (s + 1) * k && q >= k;
    let formula = if in_domain && (req.wants(Column::Formula) || req.wants(Column::Gap)) {
        Some(m_closed(n, q, k, s)?)
    } else {
        None
    };
    if req.wants(Column::Formula) {
        if let Some(f) = &formula {
            r.formula = Some(f.value.clone());
            r.regime = Some(f.regime.as_str().to_string());
            r.hypotheses_met = Some(f.hypotheses_met);
        }
    }
    if req.wants(Column::Conjecture) && in_domain && q + 1 >= s + k && q < (s + 1) * k {
        r.conjecture = Some(conjecture_rhs(n, q, k, s)?);
    }
    let wants_oracle = req.wants(Column::Oracle) || req.wants(Column::Gap);
    if wants_oracle && q >= k && k <= n {
        let problem = SearchProblem::new(n, q, k, s, Mode::M).with_budget(req.budget).with_threads(req.threads);
        let result = oracle::exact_m(&problem)?;
        if req.wants(Column::Oracle) {
            r.oracle = Some(result.value);
            r.nodes = Some(result.nodes_explored);
        }
        r.proven_optimal = Some(result.proven_optimal);
        if req.wants(Column::Gap) && result.proven_optimal {
            r.gap = formula.map(|f| BigInt::from(result.value) - f.value);
        }
    }
    Ok(r)
}

/// Builds the table row by row in `(n, q)` order.
///
/// Oracle cells that exhaust their budget are kept with
/// `proven_optimal = false` and an empty gap; see [`Table::complete`].
pub fn build_table(req: &TableRequest) -> Result<Table> {
    req.validate()?;
    let cells: Vec<(usize, usize)> =
        req.n_range.clone().flat_map(|n| req.q_range.clone().map(move |q| (n, q))).collect();
    let rows = par::map(cells, |(n, q)| row(req, n, q));
    Ok(Table { k: req.k, s: req.s, columns: req.columns.clone(), rows: rows.into_iter().collect::<Result<_>>()? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_case_table_has_zero_gaps() {
        let table = build_table(&TableRequest::new(2, 2, 6..=9, 3..=5)).unwrap();
        assert_eq!(table.rows.len(), 12);
        assert!(table.rows.iter().all(|r| r.gap == Some(BigInt::from(0))));
        let csv = table.to_csv();
        assert!(csv.starts_with("n,q,formula,conjecture,oracle,gap\n"));
        assert!(csv.contains("\n9,4,11,11,11,0\n"));
    }

    #[test]
    fn near_top_cell() {
        let table = build_table(&TableRequest::new(3, 2, 9..=9, 7..=7)).unwrap();
        assert_eq!(table.to_csv(), "n,q,formula,conjecture,oracle,gap\n9,7,56,56,56,0\n");
    }

    #[test]
    fn column_subset_and_order() {
        let req = TableRequest::new(2, 2, 6..=6, 3..=3).with_columns(vec![Column::Conjecture, Column::Formula]);
        let table = build_table(&req).unwrap();
        assert_eq!(table.to_csv(), "n,q,formula,conjecture\n6,3,10,10\n");
    }

    #[test]
    fn exhausted_cells_are_kept() {
        let mut req = TableRequest::new(3, 2, 12..=12, 5..=5);
        req.budget = Budget { node_limit: 1, ..Budget::default() };
        let table = build_table(&req).unwrap();
        assert_eq!(table.rows.len(), 1);
        assert_eq!(table.rows[0].proven_optimal, Some(false));
        assert_eq!(table.rows[0].gap, None);
        assert!(!table.complete());
    }

    #[test]
    fn empty_range_rejected() {
        #[allow(clippy::reversed_empty_ranges)]
        let req = TableRequest::new(2, 2, 9..=6, 3..=5);
        assert!(build_table(&req).is_err());
    }
}
