//! Exact computation of Potts-model partition polynomials (multivariate Tutte
//! polynomials) of finite multigraphs, the Grothendieck classes of their
//! hypersurface complements as polynomials in the torus class `T = L - 1`,
//! and a finite-field point-counting oracle that checks every class formula.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! the parallel counter live in the `potts` companion crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod class;
pub mod cone;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod grothendieck;
pub mod motivic;
pub mod poly;
pub mod pointcount;
pub mod tutte;

pub use class::ClassPoly;
pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeKind, FamilySpec, MultiGraph};
pub use poly::{MPoly, VarId};
pub use pointcount::{CountReport, PointCounter, SerialCounter};
