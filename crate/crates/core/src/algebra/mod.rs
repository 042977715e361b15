//! Exact arithmetic: rationals, uni/bivariate polynomials, truncated series,
//! fraction-free matrix algebra, and rational functions.
//!
//! Register of the main types:
//!
//! | type               | contents                                         |
//! |--------------------|--------------------------------------------------|
//! | `Rational`         | arbitrary-precision reduced fraction             |
//! | `UniPoly`          | dense univariate polynomial over `Rational`      |
//! | `BiPoly`           | sparse bivariate polynomial in `(q, u)`          |
//! | `TruncatedSeries`  | series in `q` with `u`-polynomial coefficients   |
//! | `PolyMatrix`       | matrix of `BiPoly` (Bareiss determinant)         |
//! | `RatMatrix`        | matrix of `Rational` (elimination, kernels)      |
//! | `RationalFunction` | unreduced `BiPoly` quotient, cross-mult equality |

pub mod bipoly;
pub mod numeric;
pub mod poly_matrix;
pub mod rat_matrix;
pub mod rational;
pub mod rational_function;
pub mod series;
pub mod unipoly;

pub use bipoly::{pow_rational, BiPoly};
pub use numeric::{complex_roots, extract_rational_roots, reconstruct_rational};
pub use poly_matrix::PolyMatrix;
pub use rat_matrix::{solve_on_complement, RatMatrix, SolveError};
pub use rational::{is_integer, parse_rational, rat, rat_int, rational_to_f64, Rational, RationalParseError};
pub use rational_function::RationalFunction;
pub use series::{exp_series, inverse_series, log_inverse_series, SeriesError, TruncatedSeries};
pub use unipoly::UniPoly;
