//! Coefficient arithmetic.
//!
//! All coefficients in this crate are arbitrary-precision rationals kept in
//! lowest terms with positive denominator; `num_rational` maintains exactly
//! that normal form.

use num_bigint::BigInt;
use num_traits::One;

pub use num_rational::BigRational as Rational;

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `a/b` in lowest terms.
pub fn ratio(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// Render as `n` for integers, `a/b` otherwise.
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let r = ratio(4, -6);
        assert_eq!(render(&r), "-2/3");
        assert_eq!(render(&int(7)), "7");
        assert_eq!(render(&ratio(0, 5)), "0");
    }
}
