//! Fixed points and excedances in pattern-avoiding permutations.
//!
//! The crate is organised bottom-up: [`perm`] and [`enumerate`] give the
//! permutations and the avoidance classes, [`dyck`] and [`bijection`] the Dyck
//! path side, [`poly`] and [`series`] the exact generating-function arithmetic,
//! [`catalog`] the generating functions themselves and [`oracle`] the
//! brute-force checks that tie the two together.

pub mod bijection;
pub mod catalog;
pub mod dyck;
pub mod enumerate;
pub mod exec;
pub mod expr;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod sequences;
pub mod series;
