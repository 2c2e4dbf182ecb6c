//! Exact scalars: Gaussian rationals `a + b i` with `a, b ∈ ℚ`.

use std::fmt::Debug;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = Complex<BigRational>;

/// Exact field arithmetic used by the polynomial and matrix routines.
pub trait Field: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {}

impl<T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive> Field for T {}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn real(r: BigRational) -> Scalar {
    Complex::new(r, BigRational::zero())
}

pub fn from_int(n: i64) -> Scalar {
    real(BigRational::from_integer(n.into()))
}

pub fn is_real(s: &Scalar) -> bool {
    s.im.is_zero()
}

pub fn to_complex64(s: &Scalar) -> Complex64 {
    Complex64::new(
        s.re.to_f64().unwrap_or(f64::NAN),
        s.im.to_f64().unwrap_or(f64::NAN),
    )
}

fn parse_rational(input: &str, part: &str) -> Result<BigRational> {
    let part = part.trim().trim_start_matches('+');
    BigRational::from_str(part).map_err(|e| Error::Parse {
        input: input.to_string(),
        reason: e.to_string(),
    })
}

/// Parses `p/q`, `p`, or a Gaussian rational such as `1/2+3/4i`, `1-2i`, `-i`.
pub fn parse_scalar(input: &str) -> Result<Scalar> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse { input: input.to_string(), reason: "empty scalar".into() });
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(real(parse_rational(input, &s)?));
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        other => parse_rational(input, other)?,
    };
    Ok(Complex::new(parse_rational(input, re)?, im))
}

pub fn format_scalar(s: &Scalar) -> String {
    if s.im.is_zero() {
        return s.re.to_string();
    }
    let im = if s.im.abs().is_one() {
        String::new()
    } else {
        s.im.abs().to_string()
    };
    let sign = if s.im.is_negative() { "-" } else { "+" };
    if s.re.is_zero() {
        let sign = if s.im.is_negative() { "-" } else { "" };
        format!("{sign}{im}i")
    } else {
        format!("{}{sign}{im}i", s.re)
    }
}

/// JSON form of a scalar: `"p/q"` for rationals, `["re","im"]` for Gaussian
/// rationals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Text(String),
    Pair([String; 2]),
}

impl From<&Scalar> for ScalarRepr {
    fn from(s: &Scalar) -> Self {
        if s.im.is_zero() {
            ScalarRepr::Text(s.re.to_string())
        } else {
            ScalarRepr::Pair([s.re.to_string(), s.im.to_string()])
        }
    }
}

impl TryFrom<ScalarRepr> for Scalar {
    type Error = Error;
    fn try_from(r: ScalarRepr) -> Result<Scalar> {
        match r {
            ScalarRepr::Text(t) => parse_scalar(&t),
            ScalarRepr::Pair([re, im]) => Ok(Complex::new(parse_rational(&re, &re)?, parse_rational(&im, &im)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: (i64, i64), im: (i64, i64)) -> Scalar {
        Complex::new(rational(re.0, re.1), rational(im.0, im.1))
    }

    #[test]
    fn parses_rationals_and_gaussians() {
        assert_eq!(parse_scalar("3").unwrap(), from_int(3));
        assert_eq!(parse_scalar("-3/4").unwrap(), real(rational(-3, 4)));
        assert_eq!(parse_scalar("1/2+3/4i").unwrap(), c((1, 2), (3, 4)));
        assert_eq!(parse_scalar("1-2i").unwrap(), c((1, 1), (-2, 1)));
        assert_eq!(parse_scalar("1 + i").unwrap(), c((1, 1), (1, 1)));
        assert_eq!(parse_scalar("-i").unwrap(), c((0, 1), (-1, 1)));
        assert_eq!(parse_scalar("5/3i").unwrap(), c((0, 1), (5, 3)));
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1/0").is_err());
    }

    #[test]
    fn format_round_trips() {
        for text in ["3", "-3/4", "1/2+3/4i", "1-2i", "-i", "i", "5/3i", "-7/2-i"] {
            let s = parse_scalar(text).unwrap();
            assert_eq!(parse_scalar(&format_scalar(&s)).unwrap(), s, "{text}");
        }
        assert_eq!(format_scalar(&c((1, 2), (-1, 1))), "1/2-i");
    }

    #[test]
    fn json_forms() {
        let z = c((1, 1), (1, 1));
        let j = serde_json::to_string(&ScalarRepr::from(&z)).unwrap();
        assert_eq!(j, r#"["1","1"]"#);
        let back: ScalarRepr = serde_json::from_str(&j).unwrap();
        assert_eq!(Scalar::try_from(back).unwrap(), z);
        let r: ScalarRepr = serde_json::from_str(r#""2/3""#).unwrap();
        assert_eq!(Scalar::try_from(r).unwrap(), real(rational(2, 3)));
    }
}
