//! Representativity bounds for pretzel, Montesinos and algebraic knots.
//!
//! The crate enumerates the closed surfaces a `(p,q,r)`-pretzel knot could
//! lie on with representativity 3, using exact boundary-slope arithmetic,
//! and turns that enumeration together with the general bridge-number and
//! tangle-decomposition bounds into a [`RepReport`].
//!
//! ```
//! use knotrep::{parse_expr, representativity_bounds};
//!
//! let report = representativity_bounds(&parse_expr("P(-2,3,5)").unwrap()).unwrap();
//! assert_eq!(report.exact, Some(3));
//! ```

pub mod error;
pub mod exactmath;
pub mod linktrace;
pub mod repclassify;
pub mod slopelemma;
pub mod surfacescan;
pub mod tanglecalc;

pub use error::{Error, ErrorClass, Result};
pub use exactmath::{cf_to_fraction, fraction_to_cf, reduce, sum_reciprocals, Fraction};
pub use linktrace::{component_count, is_knot, pretzel_diagram, PdCode};
pub use repclassify::{representativity_bounds, RepReport, Rule, TorusKnot};
pub use slopelemma::{
    brute_force_solutions, enumerate_solutions, slope_condition, LemmaSolution, SlopeCondition,
};
pub use surfacescan::{
    enumerate_patterns, scan_assignments, Family, ScanRow, SurfacePattern, TangleType, Verdict,
};
pub use tanglecalc::{
    normalize_pretzel, parse_expr, print_expr, NormalizedPretzel, PretzelTriple, TangleExpr,
};
