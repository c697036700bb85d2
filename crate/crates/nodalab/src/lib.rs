//! Numerical laboratory for the local `L^q` growth of Laplace eigenfunctions
//! on model surfaces and the length of their nodal sets.
//!
//! The library provides:
//!
//! * closed-form Laplace eigenfunctions on the flat square torus and the
//!   unit sphere ([`eigenbasis`]), together with geodesic disk quadrature
//!   and uniform sampling ([`surface`], [`quadrature`]);
//! * nodal set extraction by marching triangles and length measurement
//!   ([`nodal`]);
//! * `L^q` growth exponents at wavelength radius and their Monte Carlo
//!   surface average ([`growth`]);
//! * a planar disk bench for solutions of `ΔF + pF = 0`: Green/Poisson
//!   reconstruction, explicit constants, and sup-vs-`L^q`, nodal-length and
//!   circle-zero-count checks ([`disklab`]);
//! * sweep orchestration and CSV/JSON/SVG reporting ([`experiments`]).
//!
//! Everything is deterministic given seeds; all floating point output is
//! formatted with a fixed number of significant digits so repeated runs are
//! byte-identical.

pub mod disklab;
pub mod eigenbasis;
pub mod error;
pub mod experiments;
pub mod growth;
pub mod nodal;
pub mod quadrature;
pub mod surface;

pub use eigenbasis::{Eigenfunction, Eigenspace};
pub use error::{Error, Result};
pub use growth::{AverageGrowth, GrowthConfig, GrowthRecord};
pub use nodal::NodalResult;
pub use quadrature::DiskQuadrature;
pub use surface::{Surface, SurfacePoint};
