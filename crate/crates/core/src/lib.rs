//! Exact computations with Jacobian ideals of projective plane curves.

pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod families;
pub mod implicit;
pub mod jacobian;
pub mod linalg;
pub mod local;
pub mod poly;
pub mod report;
pub mod sweep;

pub use error::{Error, Result};
pub use jacobian::{profile, JacobianProfile};
pub use linalg::RankMode;
pub use poly::{BinaryForm, Poly, Rat, UniPoly};
