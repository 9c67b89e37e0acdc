//! Shattering and antichain checks, the linearity decision for point sets,
//! and the verification suites with their reports.

mod linearity;
mod report;
mod shatter;
pub mod verify;

pub use linearity::{is_linear_sperner, positive_weight_fit, weight_nullspace, MAX_LINEARITY_DIM};
pub use report::{InstanceRecord, Outcome, Status, VerificationReport, Witness, WitnessKind};
pub use shatter::{is_antichain, min_unshattered_size, shatters};
pub use verify::{run_verification, Suite, SuiteParams};
