//! Exact enumeration of integer polygons with a given perimeter.
//!
//! A polygon with integer sides summing to `n` is a set of corners on a
//! circle of `n` equally spaced points, subject to every side being shorter
//! than `n / 2`. Two polygons are equivalent when their side lists agree up to
//! rotation and reversal, which is the orbit relation of the dihedral group
//! `D_n` acting on corner sets. Counts come from Burnside's lemma with
//! closed-form fix-set sizes for each class of group element.
//!
//! - [`numtheory`]: divisors, totient, binomials, nearest-integer rounding
//! - [`model`]: circular tuples, group elements, goodness, side lengths
//! - [`fixcount`]: fix-set sizes per element class
//! - [`census`]: the counts themselves, two ways, plus rounding formulas and
//!   asymptotics
//! - [`oracle`]: exhaustive enumeration used to check all of the above

pub mod census;
pub mod fixcount;
pub mod model;
pub mod numtheory;
pub mod oracle;

pub use census::{
    count_mgons, count_mgons_cyclic, count_polygons, count_polygons_cyclic, CensusError,
};
pub use fixcount::{fix_mgons, fix_polygons, FixCountError};
pub use model::{CircularTuple, ElementClass, GroupElement, ModelError, SideLengths, Symmetry};
pub use numtheory::{Count, ExactRational, NumberTheoryError};
pub use oracle::{OracleError, TupleSet, ORACLE_MAX_N};
