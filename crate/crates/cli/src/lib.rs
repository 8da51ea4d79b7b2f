//! Batch front end: link specs in, analysis reports and table reproductions out.

mod error;
mod report;
mod spec;
mod tables;

pub use error::CliError;
pub use report::{
    analyze, AnalysisReport, ChargeVerdict, Erratum, ExtremalSummary, FamilyInfo, LinkSummary,
    NormalConeSummary, WhpSummary,
};
pub use spec::{parse_params, LinkSpec, ResolvedSpec};
pub use tables::{bp_orders, render_table, reproduce_tables, TableRow};

/// Loads, validates and analyzes the spec at `path`.
pub fn analyze_file(path: &std::path::Path) -> Result<AnalysisReport, CliError> {
    analyze(&LinkSpec::load(path)?.resolve()?)
}
