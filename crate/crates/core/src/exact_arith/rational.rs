use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary precision fraction; `BigRational` keeps it reduced with a
/// positive denominator.
pub type ExactRational = BigRational;

/// Renders `p` for integers and `p/q` otherwise.
pub fn rational_to_string(q: &ExactRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q` (decimal integers).
pub fn parse_rational(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
pub(crate) fn int(v: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(rational_to_string(&q), "-3/2");
        assert_eq!(rational_to_string(&parse_rational("0/7").unwrap()), "0");
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(rational_to_string(&int(-12)), "-12");
    }
}
