//! Initially regular sequences: sum conditions, closed-form initial ideals,
//! star packing, chains, merging, verification and the depth pipeline.

mod chains;
mod closed_form;
mod forms;
mod merge;
mod pipeline;
mod star;
mod verify;

pub use chains::{find_chains, Chain};
pub use closed_form::initial_after_linear_sums;
pub use forms::{build_term_order, check_sum_conditions, LinearSumForm, OrderConstraint, SumCheck, SumViolation};
pub use merge::{merge_certificates, MergedSequence, Provenance, SequencePart};
pub use pipeline::{depth_lower_bound, polarized_bound, DepthReport, PipelineConfig, PolarizationAdjustment, Strategy};
pub use star::{star_packing, EXHAUSTIVE_LIMIT};
pub use verify::{
    verify_initially_regular, CandidateStep, CertificateJson, CertificateStep, IniRegCertificate, OrderJson,
    StepFailure, StepJson, Verifier,
};
