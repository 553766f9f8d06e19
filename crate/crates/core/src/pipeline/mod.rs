//! The classification harness: generate connected graphs, filter to the
//! indecomposable unmixed ones, flag accessibility, strong unmixedness and
//! (S2), and compare the resulting sets.

mod generate;
mod record;
mod run;

pub use generate::{enumerate_connected, read_graph6_file, MAX_GENERATED};
pub use record::{classify, ClassRecord, ClassifyOptions, Witness};
pub use run::{
    default_workers, read_records, run_pipeline, verify_equivalence, EquivalenceReport, RunOptions,
    RunOutcome, RunSummary, RECORDS_FILE, SUMMARY_FILE,
};
