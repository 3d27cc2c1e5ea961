//! Exact rationals, dense polynomials, canonical rational functions,
//! truncated series and small dense matrices.

mod field;
mod matrix;
mod poly;
mod ratfunc;
mod sample;
mod series;

pub use field::{int, parse_rational, rat, ratio_str, rational_to_string, signum, Field, Rational};
pub use matrix::{kron, Matrix};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use sample::{degree_bound, SamplePoints};
pub use series::{Expansion, TruncatedSeries};

use crate::error::{Error, Result};

/// Rational functions of `u` over the rationals.
pub type RatFn = RatFunc<Rational>;

/// `true` iff `gcd(p, p')` is constant.
pub fn is_squarefree<F: Field>(p: &Poly<F>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.gcd(&p.derivative()).is_constant())
}
