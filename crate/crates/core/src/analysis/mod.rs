//! Removal analysis, cut verification, brute-force oracle and lemma sweeps.

pub mod components;
pub mod connectivity;
pub mod oracle;
pub mod structure;
pub mod suites;

pub use components::{components_after_removal, remove_and_components, verify_cut, CutVerdict};
pub use connectivity::{is_bipartite, odd_girth, vertex_connectivity, vertex_connectivity_of};
pub use oracle::{brute_min_star_cut, OracleOptions, OracleResult};
pub use structure::{check_component_structure, StructureReport, DEFAULT_SEED};
pub use suites::{run_lemma_suite, LemmaReport, NRange, ReportRow, Suite, SuiteParams};
