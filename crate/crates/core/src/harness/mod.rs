//! Verification campaigns: the conjecture sweep with its results cache,
//! property suites, random cover sampling and graph export.

pub mod cache;
pub mod export;
pub mod sampling;
pub mod sweep;
pub mod theorems;

pub use cache::{witness_digest, LoadReport, ResultsCache};
pub use export::{export, to_dimacs, to_graph_json, ExportFormat, GraphJson};
pub use sweep::{sweep, sweep_record, RecordStatus, SweepOptions, SweepRecord, SweepSummary, SCHEMA_VERSION};
pub use theorems::{verify_theorems, CheckOutcome, Property, PropertyResult, TheoremOptions, TheoremReport};
