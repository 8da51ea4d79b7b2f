use crate::error::CliError;
use num_bigint::BigInt;
use sasaki_core::linkgeom::{bp_group_order, table_rows, whp_obstruction, Table};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub family: String,
    pub params: String,
    pub polynomial: String,
    /// Quasi-regular weights of all coordinates, then the degree.
    pub weights: Vec<u64>,
    pub degree: u64,
    pub cone_dimension: usize,
    pub expected_dim: usize,
    pub verdict: String,
    pub obstructed: bool,
    pub expected_obstructed: bool,
    pub whp_value: String,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.cone_dimension == self.expected_dim && self.obstructed == self.expected_obstructed
    }
}

/// Rows in table order; `max_param` is the number of smallest admissible
/// values taken per parameter.
pub fn reproduce_tables(which: u8, max_param: Option<i64>) -> Result<Vec<TableRow>, CliError> {
    let table = match which {
        1 => Table::One,
        2 => Table::Two,
        other => {
            return Err(CliError::Validation(format!(
                "no table {other}; use 1 or 2"
            )))
        }
    };
    if let Some(k) = max_param {
        if k < 1 {
            return Err(CliError::Validation(
                "--max-param must be at least 1".into(),
            ));
        }
    }
    let rows = table_rows(table, max_param).map_err(CliError::internal)?;
    Ok(rows
        .into_iter()
        .map(|e| {
            let v = whp_obstruction(&e.link);
            let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            TableRow {
                family: e.family.to_string(),
                params: params.join(","),
                polynomial: e.polynomial,
                weights: e.link.quasi_regular_weights(),
                degree: e.link.degree(),
                cone_dimension: e.link.cone_dimension(),
                expected_dim: e.expected_dim,
                verdict: v.tag.to_string(),
                obstructed: v.tag.is_obstructed(),
                expected_obstructed: e.expected_obstructed,
                whp_value: v.value.to_string(),
            }
        })
        .collect())
}

pub fn render_table(rows: &[TableRow]) -> String {
    let mut s = String::new();
    for r in rows {
        let check = if r.matches() { "" } else { "  MISMATCH" };
        let _ = writeln!(
            s,
            "{:<30} {:<10} weights {:?} d={} dim {} (listed {}) {} [value {}]{check}",
            r.family,
            r.params,
            r.weights,
            r.degree,
            r.cone_dimension,
            r.expected_dim,
            r.verdict,
            r.whp_value
        );
    }
    s
}

/// `(m, |bP_{4m}|)` for `m = 2..=max`.
pub fn bp_orders(max: u32) -> Vec<(u32, BigInt)> {
    (2..=max).map(|m| (m, bp_group_order(m))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bp_examples() {
        let orders: Vec<BigInt> = bp_orders(4).into_iter().map(|(_, o)| o).collect();
        assert_eq!(orders, vec![28.into(), 992.into(), 8128.into()]);
        assert_eq!(bp_orders(2).len(), 1);
        assert!(bp_orders(1).is_empty());
    }

    #[test]
    fn first_table_defaults() {
        let rows = reproduce_tables(1, None).unwrap();
        assert!(rows.len() >= 16);
        assert!(rows.iter().all(|r| r.obstructed && r.matches()));
        // p >= 2q is enforced, so (3, 2) never appears
        assert!(!rows
            .iter()
            .any(|r| r.family == "connected-sum-s2-x-s3" && r.params == "p=3,q=2"));
    }

    #[test]
    fn second_table_order() {
        let rows = reproduce_tables(2, None).unwrap();
        let fams: Vec<&str> = rows.iter().take(5).map(|r| r.family.as_str()).collect();
        assert_eq!(fams, vec!["A", "D", "E6", "E7", "E8"]);
        assert!(rows.iter().all(|r| r.obstructed));
    }

    #[test]
    fn bad_table_number() {
        assert_eq!(reproduce_tables(3, None).unwrap_err().exit_code(), 2);
        assert_eq!(reproduce_tables(1, Some(0)).unwrap_err().exit_code(), 2);
    }
}
