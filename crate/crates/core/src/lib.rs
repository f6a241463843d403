//! Exact counting of injective embeddings of bipartite patterns in
//! triangle-free hosts, leading coefficients of embedding counts in weighted
//! blow-ups, the extremal constructions built on them, and exact certificates
//! for the inequalities that compare complete bipartite hosts with blow-ups
//! of the five-cycle.

pub mod blowup;
pub mod bounds;
pub mod cli;
pub mod embeddings;
pub mod error;
pub mod graph;
pub mod matchings;
pub mod oracle;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{Bipartition, Components, DegreeStats, Graph};

/// Runs `f` on a rayon pool with `workers` threads (`0` means the rayon
/// default). Every parallel reduction in this crate is order-independent, so
/// results do not depend on `workers`.
pub fn run_with_workers<R: Send>(workers: usize, f: impl FnOnce() -> R + Send) -> R {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("failed to build worker pool");
    pool.install(f)
}
