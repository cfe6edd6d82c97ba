//! Exact evaluation modules of current algebras `g[t]` for the classical Lie
//! algebras, the invariant tensors that produce their intertwiners, and an
//! executable suite of checks on the resulting operators.

pub mod currents;
pub mod error;
pub mod invariants;
pub mod liealg;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod repbuild;
pub mod verify;

pub use currents::{EvaluationModule, InvariantTensor};
pub use error::{Error, Result};
pub use invariants::Permutation;
pub use liealg::{build_lie_algebra, Family, LieAlgebraSpec};
pub use linalg::Mat;
pub use poly::Poly;
pub use rat::Rat;
pub use repbuild::{GModule, IsotypicComponent, Weight};
pub use verify::suite::{run_suite, Profile};
pub use verify::{CheckReport, GeneratorFamily, Status};
