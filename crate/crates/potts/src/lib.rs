//! File formats, reports, the parallel point counter and the verification
//! suites around `potts_core`. The `potts` binary is a thin layer on top.

pub mod counter;
pub mod edgelist;
pub mod family;
pub mod report;
pub mod verify;

pub use counter::ParallelCounter;
