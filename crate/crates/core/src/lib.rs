//! Biquandle invariants of virtual knotoids: colorings, counting matrices,
//! virtual bracket state sums and a search for new brackets.

pub mod biquandle;
pub mod bracket;
pub mod cli;
pub mod coloring;
pub mod corpus;
pub mod data;
pub mod diagram;
pub mod report;
pub mod ring;
pub mod search;
