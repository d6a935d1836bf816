//! Discrete fixed-point machinery on finite simplicial complexes, and a
//! constraint ledger for fixed-point sets of circle actions on
//! even-dimensional positive-curvature manifolds.
//!
//! The combinatorial side builds complexes (from facet lists, as clique
//! complexes of graphs, or from point clouds through a neighborhood graph),
//! assembles exact boundary and Hodge operators, and verifies the classical
//! identities numerically: the heat super trace str(exp(-tH)) equals the
//! Euler characteristic at every t, the Lefschetz number of an automorphism
//! equals its fixed-simplex index sum, and the positive spectra on even and
//! odd forms coincide.
//!
//! The geometric side encodes the constraint system governing fixed-point
//! sets of isometric circle actions: Berger non-emptiness, even codimension,
//! Frankel's dimension bound, Gauss-Bonnet-Chern positivity in low
//! dimensions, the Grove-Searle classification in codimension 2, and the
//! Lefschetz sum rule chi(N) = chi(M) against a closed catalog of known
//! positive-curvature manifolds.

pub mod complex;
pub mod curvature;
pub mod error;
pub mod exact;
pub mod hodge;
pub mod io;
pub mod lefschetz;
pub mod sample;

pub use complex::{Graph, PointCloud, Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use hodge::{betti, heat_supertrace, spectrum, BettiVector, SpectralData};
pub use lefschetz::{verify_lefschetz, Automorphism, LefschetzReport};
