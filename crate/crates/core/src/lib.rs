//! Exact polynomial-ideal engine and rule-based checker for saturation and
//! reducedness of group-stable algebraic subsets of a representation.

pub mod poly;
pub mod ideal;
pub mod diffgeo;
pub mod catalog;
pub mod checker;
