//! Numeric scalars used by coefficient forms and affine pivotal families.
//!
//! Everything numeric is generic over [`Scalar`]; the library itself only
//! instantiates it with exact [`Rational`]s, but `f64` satisfies the bound
//! for quick experiments.

use std::fmt::Debug;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Field-like numbers with a (possibly partial) order.
pub trait Scalar: num_traits::Num + Clone + PartialOrd + Debug {
    fn min_of(a: &Self, b: &Self) -> Self {
        if b < a {
            b.clone()
        } else {
            a.clone()
        }
    }

    fn max_of(a: &Self, b: &Self) -> Self {
        if b > a {
            b.clone()
        } else {
            a.clone()
        }
    }

    fn from_bit(bit: bool) -> Self {
        if bit {
            Self::one()
        } else {
            Self::zero()
        }
    }

    fn in_unit_interval(&self) -> bool {
        *self >= Self::zero() && *self <= Self::one()
    }
}

impl<T: num_traits::Num + Clone + PartialOrd + Debug> Scalar for T {}

/// `numer / denom` as a rational.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.25`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let whole = match int_part.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => BigInt::from_str(digits).ok()?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac_part.len());
        let frac = BigInt::from_str(frac_part).ok()?;
        let magnitude = Rational::new(whole * &scale + frac, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    match text.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => BigInt::from_str(text).ok().map(Rational::from_integer),
    }
}

/// The grid `{0, 1/d, ..., 1}`.
pub fn unit_grid(divisions: usize) -> Vec<Rational> {
    let d = divisions.max(1) as i64;
    (0..=d).map(|i| ratio(i, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rational_forms() {
        assert_eq!(parse_rational("3/4"), Some(ratio(3, 4)));
        assert_eq!(parse_rational("-2"), Some(int(-2)));
        assert_eq!(parse_rational("0.25"), Some(ratio(1, 4)));
        assert_eq!(parse_rational("-.5"), Some(ratio(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn grid_endpoints() {
        let g = unit_grid(4);
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], int(0));
        assert_eq!(g[2], ratio(1, 2));
        assert_eq!(g[4], int(1));
    }

    #[test]
    fn min_max_work_for_floats_too() {
        assert_eq!(f64::min_of(&0.5, &0.25), 0.25);
        assert_eq!(<f64 as Scalar>::max_of(&0.5, &0.25), 0.5);
        assert!(ratio(1, 3).in_unit_interval());
        assert!(!int(2).in_unit_interval());
    }
}
