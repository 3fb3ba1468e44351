//! String C-group representations of permutation groups.
//!
//! The crate is organised bottom-up: [`perm`] and [`group`] provide the
//! permutation-group machinery, [`sggi`] the string groups generated by
//! involutions and the intersection-property check, [`reps`] the permutation
//! representation graphs, [`fracture`] the fracture graphs and splits,
//! [`extend`] the sesqui- and rank-and-degree extensions, [`classify`] the
//! exhaustive search and [`catalog`] the fixtures printed in the literature.

pub mod catalog;
pub mod classify;
pub mod extend;
pub mod fracture;
pub mod group;
pub mod perm;
pub mod reps;
pub mod sggi;

pub use group::{GroupError, GroupIdentity, GroupKind, PermGroup};
pub use perm::Perm;
pub use reps::{Edge, PermRepGraph};
pub use sggi::{CVerdict, Sggi};
