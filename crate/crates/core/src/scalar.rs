//! Exact ratio arithmetic.
//!
//! Every ratio in this crate is an exact fraction over some integer type.
//! Code that produces ratios is generic over [`ExactInt`]; the crate root
//! exports [`Fraction`](crate::Fraction) (machine integers) and
//! [`BigFraction`](crate::BigFraction) (arbitrary precision) as the
//! concrete choices.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::FromPrimitive;

/// Integer types that can carry exact fixed-point ratios.
pub trait ExactInt: Integer + Clone + FromPrimitive + Display + Debug + Send + Sync {}

impl<T> ExactInt for T where T: Integer + Clone + FromPrimitive + Display + Debug + Send + Sync {}

/// `num / den` reduced to lowest terms. Panics if `den == 0` or a count
/// does not fit in `I`.
pub fn ratio<I: ExactInt>(num: usize, den: usize) -> Ratio<I> {
    let n = I::from_usize(num).expect("count does not fit the integer type");
    let d = I::from_usize(den).expect("count does not fit the integer type");
    Ratio::new(n, d)
}

/// The threshold one third, in `I`.
pub fn one_third<I: ExactInt>() -> Ratio<I> {
    ratio(1, 3)
}

/// Renders a ratio as `p/q` in lowest terms, always with a denominator.
pub fn fraction_string<I: ExactInt>(r: &Ratio<I>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn lowest_terms() {
        let r: Ratio<i64> = ratio(8, 10);
        assert_eq!(fraction_string(&r), "4/5");
        let z: Ratio<i64> = ratio(0, 7);
        assert_eq!(fraction_string(&z), "0/1");
        let one: Ratio<BigInt> = ratio(3, 3);
        assert_eq!(fraction_string(&one), "1/1");
    }

    #[test]
    fn threshold_is_exact() {
        assert!(ratio::<i64>(4, 10) > one_third());
        assert!(ratio::<i64>(6, 18) == one_third());
        assert!(ratio::<u32>(7, 21) <= one_third());
    }
}
