//! Exact combinatorics of symmetric pairs `(G, H)` for complex reductive `G`.
//!
//! The crate models the finite data behind Borel orbits on a symmetric
//! variety: root systems with rational coordinates, Weyl groups, twisted
//! involutions, characters of the maximal torus, the normal-space character
//! multisets attached to each orbit representative, and the folded-character
//! equation whose only solution for a dominant character is the trivial one.
//!
//! Everything is computed in exact rational arithmetic; there is no floating
//! point anywhere in the crate.
//!
//! ```
//! use symspace::{Budget, PairSpec, RootSystem};
//!
//! let gl3 = RootSystem::gl(3).unwrap();
//! let pair = PairSpec::galois_split(gl3);
//! let orbits = pair.twisted_involutions(&Budget::default()).unwrap();
//! assert_eq!(orbits.len(), 4);
//! ```
//!
//! Indices of simple roots, torus coordinates and roots are 0-based
//! throughout the library API. Human-facing output produced by the CLI is
//! 1-based.

pub mod chars;
pub mod distinction;
mod error;
pub mod langlands;
pub mod linalg;
pub mod normalspace;
pub mod pairs;
pub mod rational;
pub mod rootsys;
pub mod weyl;
pub mod wire;

pub use chars::CharacterOfT;
pub use distinction::{check_distinction, solve_fold_equation, DistinctionReport, OrbitVerdict};
pub use error::{Error, ErrorKind, Result};
pub use langlands::LanglandsParameter;
pub use linalg::{QMatrix, Weight};
pub use normalspace::{gln_oracle, normal_multiset, sym_eigen_count, NormalFiberMultiset};
pub use pairs::{FixedRootMode, InvolutionSpec, PairSpec, StarReport};
pub use rational::Q;
pub use rootsys::{CartanSpec, Family, ParabolicDatum, Realization, RootSystem};
pub use weyl::{TwistedInvolution, WeylElement, WeylGroup};

/// Resource limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest Weyl group the enumeration will build.
    pub max_weyl_order: u64,
    /// Node limit for the bounded lattice searches.
    pub max_search_nodes: u64,
    /// Largest degree accepted by [`sym_eigen_count`].
    pub max_degree: u32,
}

impl Budget {
    pub const DEFAULT_WEYL_ORDER: u64 = 51_840;

    pub fn with_weyl_order(max_weyl_order: u64) -> Self {
        Self {
            max_weyl_order,
            ..Self::default()
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_weyl_order: Self::DEFAULT_WEYL_ORDER,
            max_search_nodes: 5_000_000,
            max_degree: 256,
        }
    }
}
