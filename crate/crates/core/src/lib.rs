//! Exact split extension classifiers for finite groups, reflexive graphs of
//! groups and internal groupoids (cat¹-groups).

pub mod action;
pub mod catalog;
pub mod construct;
pub mod error;
pub mod group;
pub mod groupoid;
pub mod hom;
pub mod homsearch;
pub mod io;
pub mod lattice;
pub mod laws;
pub mod report;
pub mod rgraph;
pub mod splitext;
pub mod subgroup;
pub mod xmod;

pub use action::Action;
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use hom::GroupHom;
pub use subgroup::Subgroup;
