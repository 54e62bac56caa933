//! Exact-arithmetic toolkit for Point Line Cover.
//!
//! - [`geometry`]: rational points, canonical lines, orientation.
//! - [`plc`]: instances, the mandatory-line kernel, exact and branching solvers.
//! - [`duality`]: Line Point Cover and the point–line dual.
//! - [`vc`]: Vertex Cover reduction through a special-position point set.
//! - [`order_type`]: order types, canonical forms, grid catalogs.
//! - [`protocol`]: the binary-search protocol with bit-cost accounting.
//! - [`io`]: text formats and instance generators.

pub mod duality;
pub mod error;
pub mod geometry;
pub mod io;
pub mod order_type;
pub mod plc;
pub mod protocol;
pub mod vc;

pub use error::{Error, Result};
pub use geometry::{Line, Orientation, Point, Rational};
pub use plc::PlcInstance;
