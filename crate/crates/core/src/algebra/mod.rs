//! Partial operation tables, multi-space assembly and the analyses that
//! only need the bare multi-space structure.

pub mod automorphism;
pub mod group;
pub mod space;
pub mod table;
