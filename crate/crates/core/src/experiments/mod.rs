//! Numerical experiments built on the Li coefficients.

pub mod asymptotic;
pub mod conjecture;
pub mod diagnostics;
pub mod envelope;
pub mod identity;
pub mod reference;

pub use asymptotic::{asymptotic_logxi, log_xi, AsymptoticRow};
pub use conjecture::{
    check_bounds, conjecture_table, BoundFamily, BoundReport, BoundRow, BoundSource, BoundVerdict, ConjectureRow,
    TABLE_CAP,
};
pub use diagnostics::{convergence_diagnostics, DiagnosticRow, Sweep, DIAGNOSTICS_CAP};
pub use envelope::{envelope_data, Envelope, EnvelopeRow, DEFAULT_A_LOG, DEFAULT_A_SQRT};
pub use identity::{
    identity_limit, identity_sum, identity_sum_from, log_pi_over_3, tail_fit, ConstantsSource, TailFitResult,
    TailModel, TrendConstant,
};
pub use reference::{ReferenceDataset, ReferenceRow, RowSource};
