//! File-coordinated SPMD parallel computation.
//!
//! A master process splits the range `0:step:maxvalue` into per-worker
//! subranges, writes one spec file and one zero-byte lock file per rank,
//! and launches the workers as detached background processes of this same
//! executable.  Each worker expands its subrange, evaluates a mathematical
//! expression over it under CPU-time measurement, persists a result file,
//! and deletes its lock.  The master polls the lock files, gathers results
//! in rank order, and reports wall-clock time, its own CPU time, and the
//! mean worker CPU time.  The filesystem is the only shared medium; there
//! are no sockets, no shared memory, and no in-process worker threads.
//!
//! Modules:
//! - [`expr`]: the workload expression language (parse + evaluate),
//! - [`partition`]: range splitting and colon-range expansion,
//! - [`protocol`]: on-disk formats and the lock-file lifecycle,
//! - [`runtime`]: the master orchestrator and the worker entry point,
//! - [`metrics`]: speedup arithmetic, timing sweeps, table rendering.

pub mod expr;
pub mod fp;
pub mod metrics;
pub mod partition;
pub mod protocol;
pub mod runtime;

pub use expr::ComputeSpec;
pub use metrics::{BenchGrid, SpeedupReport};
pub use partition::{PartitionParams, Subrange};
pub use protocol::{ResultRecord, ResultStatus, WorkdirLayout, WorkerSpec};
pub use runtime::{RunConfig, RunReport};

/// Default workload expression, a deliberately compute-heavy scalar chain.
pub const DEFAULT_WORKLOAD: &str = "y = 5432.060708*cos((sin(x^9.876))^-1.2345)";
