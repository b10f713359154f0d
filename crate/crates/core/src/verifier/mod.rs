//! Realisation sweep, property suites and the seeded random graph corpus.

mod checks;
mod corpus;
mod random;
mod sweep;

pub use self::checks::{
    check_chain_and_bounds, check_dim_one_iff_complete, check_floor_bound, check_monotonicity,
    check_oracle_agreement, check_pendant_reduction, check_profile_feasible, check_suspension,
    check_union_additivity,
};
pub use self::corpus::{
    corpus, corpus_specs, pendant_samples, run_lemma_suites, suspension_samples, union_samples,
    PendantSample, SuiteReport, SuiteSizes, CORPUS_DENSITIES,
};
pub use self::random::{random_graph, RandomGraphSpec};
pub use self::sweep::{sweep_theorem, sweep_tuples, verify_tuple, VerificationReport};
