//! Limit polarizations on the glued surface `R(s) u_T P(t)`.
//!
//! [`dispatch`] takes a non-2-divisible component, picks the construction
//! that applies to it, builds `(L', L'')` together with the decompositions
//! `L' = L'_0 + sum C_i` and `L'' = L''_0 + sum D_i`, and evaluates every
//! numerical hypothesis of the gluing criterion it relies on. The node
//! ledger in [`ledger`] then checks that the curve on the limit surface has
//! the right arithmetic genus.

mod checks;
mod ledger;
mod plan;
mod severi;
mod sweep;

pub use checks::{common_checks, verify_explicit, verify_metodo1, verify_metodo2, Check, Checklist};
pub use ledger::{ledger, plan_ledger, Ledger};
pub use plan::{dispatch, CaseId, ExplicitCurve, LimitPlan, Route, SlotAssignment};
pub use severi::{log_severi_dims, severi_regular_dim, LogSeveriDims};
pub use sweep::{sweep, sweep_tuples, SweepFailure, SweepReport};
