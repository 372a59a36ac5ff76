//! Exact divisor-class arithmetic on degenerations of Enriques surfaces and
//! a mechanical check of the limit-curve constructions that produce rigid
//! nodal elliptic curves in every non-2-divisible moduli component.
//!
//! * [`lattice`]: intersection forms on the blown-up symmetric square
//!   `R(n)`, the blown-up plane `P(n)`, the glued surface and the
//!   isotropic lattice of an Enriques surface.
//! * [`positivity`]: condition (*), oddness, (-1)-classes, nef and big tests.
//! * [`moduli`]: fundamental coefficients, parity classification and
//!   enumeration of components by genus.
//! * [`degeneration`]: the limit-plan dispatcher, its checklists and the
//!   node ledger.
//! * [`cli`]: divisor parser, records and the commands of the binary.

pub mod cli;
pub mod degeneration;
pub mod error;
pub mod lattice;
pub mod moduli;
pub mod positivity;

pub use degeneration::{dispatch, LimitPlan};
pub use lattice::{DivClass, Generator, IsoExpr, Surface, SurfaceModel, XClass};
pub use moduli::{enumerate_components, FundamentalCoefficients, TrichotomyCase};
