//! Finite semigroups given by Cayley tables, their right acts and right
//! congruences, and a decision procedure for right uniformity of `S_S`.
//!
//! The crate also enumerates semigroups of small order up to isomorphism,
//! builds standard families, and checks structure results against the
//! census.

pub mod act;
pub mod canon;
pub mod cayley;
pub mod census;
pub mod classify;
pub mod error;
pub mod families;
pub mod format;
pub mod verify;

pub use act::{is_uniform, uniformity_witness, NonUniformWitness, RightAct, RightCongruence, Subact};
pub use canon::{are_isomorphic, canonical_form};
pub use cayley::{ElementProfile, Semigroup};
pub use classify::{
    classify_regular_uniform, structural_profile, RegularUniformClass, StructuralProfile, StructureTag,
};
pub use error::{Error, Result};
pub use families::{construct, FamilySpec};
pub use verify::{run_all, run_check, CheckId, VerificationReport};
