//! Bottleneck non-crossing perfect matchings of points in convex position.
//!
//! Given an even number of points forming a strictly convex polygon, find a
//! perfect matching by straight segments, no two crossing, whose longest
//! segment is as short as possible. [`solver::solve`] does this in O(n²) by
//! combining an interval table of single-cascade matchings with a search over
//! a linear-size set of candidate diagonals. [`baselines`] holds the classic
//! O(n³) interval DP and an exhaustive enumerator used to check it.
//!
//! ```
//! use convex_bottleneck::{solve, ConvexPointSet, Point};
//!
//! let square = ConvexPointSet::new(vec![
//!     Point::new(0.0, 0.0),
//!     Point::new(1.0, 0.0),
//!     Point::new(1.0, 1.0),
//!     Point::new(0.0, 1.0),
//! ])
//! .unwrap();
//! let report = solve(&square);
//! assert_eq!(report.value, 1.0);
//! assert_eq!(report.matching.len(), 2);
//! ```

pub mod baselines;
pub mod bench;
pub mod circular;
pub mod dp;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod render;
pub mod solver;
pub mod structure;

pub use baselines::{cubic_solve, oracle_enumerate, oracle_solve};
pub use dp::{build_subproblem_table, SubproblemTable};
pub use generators::{GenMode, GenSpec};
pub use geometry::{classify_polarity_region, ConvexPointSet, Point, PolarityRegion};
pub use solver::{enumerate_candidates, solve, SolveReport, SolveStructure};
pub use structure::{cascade_decomposition, classify_pairs, verify_matching, Matching};
