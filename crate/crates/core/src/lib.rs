//! Exact covering numbers and upper-box-dimension estimates for finite
//! sets of rationals on the line.
//!
//! The crate builds the sets `1/ℕ`, `A(p) = {1/p^k}` and their
//! smooth-number products as exact truncations, computes minimal
//! δ-covers by closed intervals, and checks the covering inequalities
//! behind the box-dimension argument for the infinitude of primes:
//!
//! * `N(1/ℕ, δ) >= k >= δ^(-1/2)/2` with `1/(k(k+1)) <= δ < 1/((k-1)k)`;
//! * `N(A(p), δ) <= 2 + log(2/δ)/log p`;
//! * `N(CD, δ) <= N(C, δ/2R) · N(D, δ/2R)` for `C, D ⊆ [−R, R]`.
//!
//! ```
//! use boxcover::{covering_number, reciprocal_integers, Rational};
//!
//! let f = reciprocal_integers(6).unwrap();
//! let delta: Rational = "1/6".parse().unwrap();
//! assert_eq!(covering_number(&f, &delta).unwrap(), 3);
//! ```

pub mod covering;
pub mod dimension;
pub mod error;
pub mod format;
pub mod generators;
pub mod primes;
pub mod rational;
pub mod sets;

pub use covering::{
    brute_force_covering_number, covering_number, min_cover, packing_lower_bound,
    product_cover_bound_check, ProductBoundReport,
};
pub use dimension::{
    count_curve, estimate_dimension, fit_slope, k_of_delta, prime_power_upper_bound,
    reciprocal_lower_bound, subadditivity_estimate_check, CountCurve, DimensionReport,
    ReciprocalBound, ScaleSchedule, SubadditivityReport,
};
pub use error::{Error, Result};
pub use generators::{
    cantor_endpoints, prime_power_reciprocals, reciprocal_integers, smallest_nonsmooth,
    smooth_reciprocals,
};
pub use primes::{factorize, is_prime, primes_up_to, Factorization};
pub use rational::Rational;
pub use sets::{
    bounding_radius, diameter, make_set, product_chain, product_set, IntervalCover, PointSet,
};
