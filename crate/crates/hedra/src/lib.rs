//! Exact rational polyhedral computation.
//!
//! Everything here runs over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate converts between outer (inequality)
//! and inner (generator) descriptions of convex polyhedra, projects them,
//! decides feasibility and validity with machine-checkable Farkas
//! certificates, analyzes face structure, and decides integrality
//! properties: integer hulls, Hilbert bases, total dual integrality and
//! total unimodularity.
//!
//! The algorithms favor exactness and verifiability over asymptotics:
//! feasibility is multiplier-tracked Fourier–Motzkin elimination (so every
//! verdict comes with a certificate), vertex enumeration is the exhaustive
//! basic-solution oracle, and the integrality tests are brute-force with
//! explicit, configurable enumeration caps ([`Caps`]). Inputs are meant to
//! be desk scale.
//!
//! All types are immutable values and all operations are pure functions of
//! their arguments, so everything can be called concurrently; results are
//! deterministic (ties break lexicographically, witnesses are the first in
//! a fixed scan order).
//!
//! See the `examples/` directory for one runnable program per capability,
//! and the `hedra` binary for the command-line surface.

pub mod convert;
pub mod error;
pub mod farkas;
pub mod fme;
pub mod integrality;
pub mod io;
pub mod linalg;
pub mod projection;
pub mod rational;
pub mod rep;
pub mod structure;
pub mod unimod;

pub use error::{Error, Result};
pub use rational::Rat;
pub use rep::{HRep, Row, VRep};

/// Explicit enumeration caps. Exceeding a cap is always a reported
/// [`Error::Resource`], never a silent truncation.
#[derive(Clone, Debug)]
pub struct Caps {
    /// Maximum row count at any intermediate elimination step.
    pub max_rows: usize,
    /// Maximum number of lattice points enumerated.
    pub max_lattice: usize,
    /// Maximum number of subsets / submatrices enumerated.
    pub max_subsets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_rows: 100_000,
            max_lattice: 1_000_000,
            max_subsets: 1_000_000,
        }
    }
}
