//! Decides whether the projective Clifford group in even dimension N is the
//! natural semidirect product SL(2, Z_N) ⋉ Z_N², by searching for lifts of
//! the generators of SL(2, Z_N) into (SL(2, Z_2N) ⋉ Z_N²)/K that satisfy
//! its defining relations.
//!
//! The answer is: it splits exactly when N ≡ 2 (mod 4). See [`splitcheck`].

pub mod check;
pub mod crosscheck;
pub mod error;
pub mod lemmas;
pub mod modmat;
pub mod report;
pub mod sdproduct;
pub mod slgroup;
pub mod splitcheck;
pub mod weylnum;

pub use error::{Error, Result};
pub use modmat::{Mat2, Vec2};
pub use sdproduct::{Kernel, SdElement};
pub use slgroup::{enumerate_relations, verify_presentation, RelationFamily, RelationInstance};
pub use splitcheck::{
    check_conditions_direct, search_witness, verdict, GenParams, SearchOptions, SplitVerdict,
};
