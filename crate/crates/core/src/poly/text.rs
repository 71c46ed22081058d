//! Human-readable form: ascending terms such as `1 + 10x + 36x^2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::Error;

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Accepts terms in any order with an optional `*` between coefficient
    /// and `x`; repeated degrees are summed.
    fn from_str(s: &str) -> Result<Poly, Error> {
        let bad = |msg: &str| Error::Parse(format!("polynomial {s:?}: {msg}"));
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad("empty"));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let mut negative = false;
            if chars[i] == '+' || chars[i] == '-' {
                negative = chars[i] == '-';
                i += 1;
            } else if i > 0 {
                return Err(bad("expected + or -"));
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let has_digits = !digits.is_empty();
            if has_digits && i < chars.len() && chars[i] == '*' {
                i += 1;
                if i >= chars.len() || chars[i] != 'x' {
                    return Err(bad("'*' must be followed by x"));
                }
            }
            let mut degree = 0usize;
            if i < chars.len() && chars[i] == 'x' {
                i += 1;
                degree = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let exp: String = chars[start..i].iter().collect();
                    degree = exp.parse().map_err(|_| bad("bad exponent"))?;
                }
            } else if !has_digits {
                return Err(bad("expected a term"));
            }
            let mut c: BigInt = if has_digits {
                digits.parse().map_err(|_| bad("bad coefficient"))?
            } else {
                BigInt::one()
            };
            if negative {
                c = -c;
            }
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, BigInt::zero());
            }
            coeffs[degree] += c;
        }
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders() {
        assert_eq!(Poly::from_i64s(&[1, 10, 36]).to_string(), "1 + 10x + 36x^2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::from_i64s(&[0, -1, 0, 1]).to_string(), "-x + x^3");
        assert_eq!(Poly::from_i64s(&[-2, 0, -3]).to_string(), "-2 - 3x^2");
    }

    #[test]
    fn parses() {
        let p: Poly = "1 + 10x + 36x^2".parse().unwrap();
        assert_eq!(p, Poly::from_i64s(&[1, 10, 36]));
        let q: Poly = "3*x^2 - x + 1".parse().unwrap();
        assert_eq!(q, Poly::from_i64s(&[1, -1, 3]));
        assert_eq!("0".parse::<Poly>().unwrap(), Poly::zero());
        assert_eq!("-x".parse::<Poly>().unwrap(), Poly::from_i64s(&[0, -1]));
        for bad in ["", "1 +", "x^", "2*", "y", "1 ++ x"] {
            assert!(bad.parse::<Poly>().is_err(), "{bad}");
        }
    }
}
