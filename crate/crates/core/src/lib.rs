//! Real rank and a-hyperbolic rank of real reductive Lie algebras, and the
//! rank criteria for discontinuous group actions on homogeneous spaces.

pub mod catalog;
pub mod cli;
pub mod cones;
pub mod decision;
pub mod notation;
pub mod rootsys;
pub mod satake;
