//! Task-level production, automation adoption, and inequality analysis.
//!
//! The library models a single job as a CES aggregate of task-specific
//! skills. Workers either perform a task themselves or delegate it to an
//! automation technology whenever the technology's capability strictly
//! exceeds their own skill. On top of that worker-level model it provides:
//!
//! - [`model`]: production evaluation, the two-worker skill scenarios, and
//!   inequality readings (gap, absolute gap, coefficient of variation, Gini);
//! - [`statics`]: the capability threshold `A*`, the encoded expected-sign
//!   table for the comparative statics of absolute inequality, and a
//!   finite-difference conformance checker;
//! - [`sweep`]: 1-D capability sweeps and 2-D capability grids with
//!   extremum/crossing detection and CSV/JSON emission;
//! - [`oring`]: an O-ring matching Monte Carlo (log-normal skill
//!   populations, assortative matching on output, within-firm skill
//!   correlations) validated against its closed-form prediction;
//! - [`skills`]: weighted Pearson correlations for user-supplied two-skill
//!   worker records, overall and per group.
//!
//! All randomness is explicitly seeded (ChaCha12 keyed by the caller's
//! seed, one stream per deterministic chunk), so every result is
//! bit-reproducible across runs and thread counts.

pub mod error;
pub mod model;
pub mod oring;
pub mod skills;
pub mod statics;
pub mod sweep;

pub(crate) mod rng;

pub use error::{Error, Result};
pub use model::{
    adoption, effective_inputs, inequality, output, scenario_workers, AutomationState,
    Correlation, InequalityReading, ProductionSpec, ScenarioParams, SkillVector, Task,
};
pub use statics::{a_star, regimes, verify_sign_table, FdSettings, Regime, Sign, SignReport};
