//! Sign / decimal mantissa / decimal exponent numbers.
//!
//! Coefficients of 1/Γ fall far below the `f64` underflow threshold long
//! before the interesting asymptotic regime (a₁₄₀₀ is about 10⁻²⁷⁹²), so every
//! estimator reports a [`Scaled`] value. The exponent is decadic so rendered
//! values line up digit for digit with published tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::Real;

/// `sign · mantissa · 10^exponent` with `1 ≤ mantissa < 10`, or the canonical
/// zero `(0, 0, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scaled<T> {
    sign: i8,
    mantissa: T,
    exponent: i64,
}

/// Result of converting a [`Scaled`] back to a native float.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Native<T> {
    pub value: T,
    /// Set when the magnitude was below the smallest normal number, so the
    /// value is a signed zero or a subnormal with reduced precision.
    pub underflowed: bool,
}

fn pow10<T: Real>(e: i64) -> T {
    let ten = T::lit(10.0);
    // Two half-size factors keep intermediates away from over/underflow.
    let e1 = e / 2;
    let e2 = e - e1;
    ten.powi(e1 as i32) * ten.powi(e2 as i32)
}

fn sign_of<T: Real>(x: T) -> i8 {
    if x > T::zero() {
        1
    } else if x < T::zero() {
        -1
    } else {
        0
    }
}

impl<T: Real> Scaled<T> {
    pub fn zero() -> Self {
        Scaled { sign: 0, mantissa: T::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        Scaled { sign: 1, mantissa: T::one(), exponent: 0 }
    }

    /// Builds `sign · 10^log10_magnitude`.
    pub fn from_log10(sign: i8, log10_magnitude: T) -> Result<Self> {
        if sign == 0 {
            return Ok(Self::zero());
        }
        if !(-1..=1).contains(&sign) {
            return Err(Error::InvalidInput(format!("sign must be -1, 0 or +1, got {sign}")));
        }
        if !log10_magnitude.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite log10 magnitude {log10_magnitude}")));
        }
        let floor = log10_magnitude.floor();
        let mut exponent =
            floor.to_i64().ok_or_else(|| Error::InvalidInput(format!("exponent {floor} out of range")))?;
        let mut mantissa = T::lit(10.0).powf(log10_magnitude - floor);
        if mantissa >= T::lit(10.0) {
            mantissa /= T::lit(10.0);
            exponent += 1;
        }
        if mantissa < T::one() {
            mantissa = T::one();
        }
        Ok(Scaled { sign, mantissa, exponent })
    }

    /// Builds `sign · e^ln_magnitude`.
    pub fn from_ln(sign: i8, ln_magnitude: T) -> Result<Self> {
        Self::from_log10(sign, ln_magnitude / T::LN_10())
    }

    /// Canonicalizes an arbitrary positive finite mantissa.
    pub fn from_parts(sign: i8, mantissa: T, exponent: i64) -> Result<Self> {
        if sign == 0 || mantissa == T::zero() {
            return Ok(Self::zero());
        }
        if !mantissa.is_finite() || mantissa < T::zero() {
            return Err(Error::InvalidInput(format!("mantissa {mantissa} must be finite and positive")));
        }
        let shift = mantissa.log10().floor();
        let shift_i = shift.to_i64().unwrap_or(0);
        let mut m = mantissa / pow10::<T>(shift_i);
        let mut e = exponent + shift_i;
        // log10 can be off by one ulp across a power of ten.
        if m >= T::lit(10.0) {
            m /= T::lit(10.0);
            e += 1;
        } else if m < T::one() {
            m *= T::lit(10.0);
            e -= 1;
        }
        Ok(Scaled { sign: sign.signum(), mantissa: m, exponent: e })
    }

    pub fn from_native(value: T) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite value {value}")));
        }
        Self::from_parts(sign_of(value), value.abs(), 0)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn mantissa(&self) -> T {
        self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// `log10 |x|`, `-inf` for zero.
    pub fn log10_abs(&self) -> T {
        if self.is_zero() {
            return T::neg_infinity();
        }
        self.mantissa.log10() + T::from_i64(self.exponent).unwrap_or(T::nan())
    }

    /// `ln |x|`, `-inf` for zero.
    pub fn ln_abs(&self) -> T {
        self.log10_abs() * T::LN_10()
    }

    pub fn neg(self) -> Self {
        Scaled { sign: -self.sign, ..self }
    }

    pub fn abs(self) -> Self {
        Scaled { sign: self.sign.abs(), ..self }
    }

    /// Converts to the native float type.
    ///
    /// Magnitudes below the normal range come back as a signed zero (or a
    /// subnormal) with `underflowed` set; magnitudes above it are an error.
    pub fn to_native(&self) -> Result<Native<T>> {
        if self.is_zero() {
            return Ok(Native { value: T::zero(), underflowed: false });
        }
        let signed = |v: T| if self.sign < 0 { -v } else { v };
        let max_exp = T::max_value().log10().floor().to_i64().unwrap_or(38);
        let min_exp = T::min_positive_value().log10().floor().to_i64().unwrap_or(-38);
        if self.exponent > max_exp {
            return Err(Error::Overflow { exponent: self.exponent });
        }
        if self.exponent < 2 * min_exp {
            return Ok(Native { value: signed(T::zero()), underflowed: true });
        }
        let magnitude = self.mantissa * pow10::<T>(self.exponent);
        if !magnitude.is_finite() {
            return Err(Error::Overflow { exponent: self.exponent });
        }
        Ok(Native { value: signed(magnitude), underflowed: magnitude < T::min_positive_value() })
    }

    /// `|self − reference| / |reference|`, evaluated without leaving the
    /// scaled representation.
    ///
    /// Opposite signs give `1 + |self|/|reference|`. When the exponents are
    /// 17 or more decades apart the difference is not resolvable in native
    /// precision and the ratio `max(|self|/|reference|, 1)` is returned.
    pub fn relative_error(&self, reference: &Scaled<T>) -> Result<T> {
        if reference.is_zero() {
            return Err(Error::UndefinedComparison);
        }
        if self.is_zero() {
            return Ok(T::one());
        }
        let gap = self.exponent - reference.exponent;
        if self.sign != reference.sign {
            let ratio = if gap >= 17 {
                self.mantissa / reference.mantissa * pow10::<T>(gap.min(400))
            } else if gap <= -17 {
                T::zero()
            } else {
                self.mantissa / reference.mantissa * pow10::<T>(gap)
            };
            return Ok(T::one() + ratio);
        }
        if gap >= 17 {
            return Ok(self.mantissa / reference.mantissa * pow10::<T>(gap.min(400)));
        }
        if gap <= -17 {
            return Ok(T::one());
        }
        let scaled_self = self.mantissa * pow10::<T>(gap);
        Ok(((scaled_self - reference.mantissa) / reference.mantissa).abs())
    }

    /// Rounds the mantissa to `digits` significant digits, carrying into the
    /// exponent when rounding reaches 10. Returns `(sign, mantissa, exponent)`.
    pub fn rounded(&self, digits: usize) -> (i8, T, i64) {
        let digits = digits.clamp(1, 17);
        if self.is_zero() {
            return (0, T::zero(), 0);
        }
        let (q, e) = self.rounded_integer(digits);
        let m = T::from_u64(q).unwrap_or(T::nan()) / pow10::<T>(digits as i64 - 1);
        (self.sign, m, e)
    }

    fn rounded_integer(&self, digits: usize) -> (u64, i64) {
        let scale = pow10::<T>(digits as i64 - 1);
        let mut q = (self.mantissa * scale).round().to_u64().unwrap_or(0);
        let mut e = self.exponent;
        if q >= 10u64.pow(digits as u32) {
            q /= 10;
            e += 1;
        }
        (q, e)
    }

    /// Renders as `±m.dddE±e` with `digits` significant digits.
    pub fn render(&self, digits: usize) -> String {
        let digits = digits.clamp(1, 17);
        if self.is_zero() {
            let frac = "0".repeat(digits - 1);
            return if digits > 1 { format!("+0.{frac}E+0") } else { "+0E+0".to_string() };
        }
        let (q, e) = self.rounded_integer(digits);
        let text = format!("{q:0width$}", width = digits);
        let sign = if self.sign < 0 { '-' } else { '+' };
        let (lead, rest) = text.split_at(1);
        if rest.is_empty() {
            format!("{sign}{lead}E{e:+}")
        } else {
            format!("{sign}{lead}.{rest}E{e:+}")
        }
    }

    pub fn cast<U: Real>(&self) -> Scaled<U> {
        Scaled {
            sign: self.sign,
            mantissa: U::from_f64(self.mantissa.to_f64_lossy()).unwrap_or(U::nan()),
            exponent: self.exponent,
        }
    }
}

impl<T: Real> fmt::Display for Scaled<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map(|p| p + 1).unwrap_or(10);
        f.write_str(&self.render(digits))
    }
}

/// A decimal literal parsed into a [`Scaled`] value together with the
/// decimal position of its last printed digit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParsedDecimal<T> {
    pub value: Scaled<T>,
    /// Exponent `k` such that one unit in the last printed digit is `10^k`.
    pub last_digit_exponent: i64,
}

impl<T: Real> ParsedDecimal<T> {
    /// One unit of the last printed digit relative to the value itself.
    pub fn relative_resolution(&self) -> T {
        if self.value.is_zero() {
            return T::infinity();
        }
        T::lit(10.0).powf(T::from_i64(self.last_digit_exponent).unwrap_or(T::nan()) - self.value.log10_abs())
    }
}

/// Parses `[-+]digits[.digits][e[-+]digits]`.
pub fn parse_decimal<T: Real>(text: &str) -> Result<ParsedDecimal<T>> {
    let bad = || Error::InvalidInput(format!("malformed decimal literal {text:?}"));
    let s = text.trim();
    let (sign, body) = match s.as_bytes().first() {
        Some(b'-') => (-1i8, &s[1..]),
        Some(b'+') => (1, &s[1..]),
        Some(_) => (1, s),
        None => return Err(bad()),
    };
    let (num, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (body, 0),
    };
    let (int_part, frac_part) = match num.find('.') {
        Some(i) => (&num[..i], &num[i + 1..]),
        None => (num, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let last_digit_exponent = exp - frac_part.len() as i64;
    let digits: String = int_part.chars().chain(frac_part.chars()).collect();
    let Some(first_nonzero) = digits.find(|c| c != '0') else {
        return Ok(ParsedDecimal { value: Scaled::zero(), last_digit_exponent });
    };
    let significant = &digits[first_nonzero..];
    // digits · 10^last_digit_exponent with the leading digit moved in front
    // of the decimal point.
    let exponent = last_digit_exponent + significant.len() as i64 - 1;
    let mantissa_text = format!("{}.{}", &significant[..1], &significant[1..]);
    let mantissa = T::from_str_radix(&mantissa_text, 10).map_err(|_| bad())?;
    Ok(ParsedDecimal { value: Scaled::from_parts(sign, mantissa, exponent)?, last_digit_exponent })
}

impl FromStr for Scaled<f64> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        // Accept the rendered form `±m.dddE±e` as well as plain literals.
        parse_decimal::<f64>(s).map(|p| p.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_log10_table1_row20() {
        let target = 7.415156531e-12_f64;
        let x = Scaled::from_log10(1, target.log10()).unwrap();
        assert_eq!(x.sign(), 1);
        assert_eq!(x.exponent(), -12);
        assert!((x.mantissa() - 7.415156531).abs() < 1e-9);
        let lit = Scaled::from_log10(1, -11.129894_f64).unwrap();
        assert_eq!(lit.exponent(), -12);
        assert!((lit.mantissa() - 7.4151).abs() < 1e-3);
    }

    #[test]
    fn zero_and_one() {
        assert_eq!(Scaled::from_log10(0, 123.0_f64).unwrap(), Scaled::zero());
        assert_eq!(Scaled::from_log10(0, f64::NAN).unwrap(), Scaled::zero());
        let one = Scaled::from_log10(1, 0.0_f64).unwrap();
        assert_eq!((one.sign(), one.mantissa(), one.exponent()), (1, 1.0, 0));
    }

    #[test]
    fn non_finite_log_rejected() {
        assert!(matches!(Scaled::from_log10(1, f64::INFINITY), Err(Error::InvalidInput(_))));
        assert!(Scaled::from_log10(-1, f64::NAN).is_err());
    }

    #[test]
    fn to_native_examples() {
        let g = Scaled::from_parts(1, 5.772156649_f64, -1).unwrap();
        assert!((g.to_native().unwrap().value - 0.5772156649).abs() < 1e-15);
        let z = Scaled::<f64>::zero().to_native().unwrap();
        assert_eq!(z.value, 0.0);
        assert!(!z.underflowed);
        let tiny = Scaled::from_parts(-1, 6.074000773_f64, -2792).unwrap();
        let n = tiny.to_native().unwrap();
        assert_eq!(n.value, 0.0);
        assert!(n.value.is_sign_negative());
        assert!(n.underflowed);
    }

    #[test]
    fn to_native_overflow_signals() {
        let big = Scaled::from_parts(1, 1.0_f64, 309).unwrap();
        assert!(matches!(big.to_native(), Err(Error::Overflow { exponent: 309 })));
        let edge = Scaled::from_parts(1, 1.7_f64, 308).unwrap();
        assert!((edge.to_native().unwrap().value / 1.7e308 - 1.0).abs() < 1e-14);
        let over = Scaled::from_parts(1, 1.8_f64, 308).unwrap();
        assert!(over.to_native().is_err());
    }

    #[test]
    fn relative_error_examples() {
        let x = Scaled::from_parts(1, 6.599969140_f64, -106).unwrap();
        let y = Scaled::from_parts(1, 6.6158100911_f64, -106).unwrap();
        let direct = (6.6158100911 - 6.599969140) / 6.6158100911;
        assert!((x.relative_error(&y).unwrap() - direct).abs() < 1e-15);
        assert!((direct - 0.002395).abs() < 1e-6);

        let x = Scaled::from_parts(-1, 2.4878383_f64, -2).unwrap();
        let y = Scaled::from_parts(-1, 4.2002635_f64, -2).unwrap();
        assert!((x.relative_error(&y).unwrap() - 0.4077).abs() < 1e-4);

        assert_eq!(y.relative_error(&y).unwrap(), 0.0);
    }

    #[test]
    fn relative_error_edge_cases() {
        let y = Scaled::from_parts(1, 2.0_f64, -50).unwrap();
        assert_eq!(y.relative_error(&Scaled::zero()), Err(Error::UndefinedComparison));
        assert_eq!(Scaled::zero().relative_error(&y).unwrap(), 1.0);
        // opposite sign, equal magnitude
        assert_eq!(y.neg().relative_error(&y).unwrap(), 2.0);
        // far apart: short circuit
        let far_small = Scaled::from_parts(1, 2.0_f64, -80).unwrap();
        assert_eq!(far_small.relative_error(&y).unwrap(), 1.0);
        let far_big = Scaled::from_parts(1, 4.0_f64, -20).unwrap();
        assert!((far_big.relative_error(&y).unwrap() / 2e30 - 1.0).abs() < 1e-12);
        let huge = Scaled::from_parts(1, 4.0_f64, 2000).unwrap();
        assert_eq!(huge.relative_error(&y).unwrap(), f64::INFINITY);
    }

    #[test]
    fn render_rounds_and_carries() {
        let x = Scaled::from_parts(1, 7.415156531_f64, -12).unwrap();
        assert_eq!(x.render(10), "+7.415156531E-12");
        assert_eq!(format!("{x}"), "+7.415156531E-12");
        assert_eq!(format!("{x:.3}"), "+7.415E-12");
        let nines = Scaled::from_parts(-1, 9.9999999999_f64, 4).unwrap();
        assert_eq!(nines.render(10), "-1.000000000E+5");
        assert_eq!(nines.rounded(10), (-1, 1.0, 5));
        assert_eq!(Scaled::<f64>::one().render(10), "+1.000000000E+0");
        assert_eq!(Scaled::<f64>::zero().render(4), "+0.000E+0");
        assert_eq!(Scaled::from_parts(1, 3.0_f64, 7).unwrap().render(1), "+3E+7");
    }

    #[test]
    fn parse_literals() {
        let p = parse_decimal::<f64>("-0.00000125").unwrap();
        assert_eq!(p.value.sign(), -1);
        assert_eq!(p.value.exponent(), -6);
        assert!((p.value.mantissa() - 1.25).abs() < 1e-15);
        assert_eq!(p.last_digit_exponent, -8);

        let p = parse_decimal::<f64>("-6.07622638292e-2792").unwrap();
        assert_eq!(p.value.exponent(), -2792);
        assert!((p.value.mantissa() - 6.07622638292).abs() < 1e-15);
        assert_eq!(p.last_digit_exponent, -2803);
        assert!((p.relative_resolution() - 1e-11 / 6.07622638292).abs() < 1e-20);

        let p = parse_decimal::<f64>("0.0070070400").unwrap();
        assert_eq!(p.value.exponent(), -3);
        assert_eq!(p.last_digit_exponent, -10);

        let rendered: Scaled<f64> = "+7.415156531E-12".parse().unwrap();
        assert_eq!(rendered.render(10), "+7.415156531E-12");

        assert!(parse_decimal::<f64>("1.2.3").is_err());
        assert!(parse_decimal::<f64>("").is_err());
        assert!(parse_decimal::<f64>("abc").is_err());
        assert!(parse_decimal::<f64>("0.000").unwrap().value.is_zero());
    }

    #[test]
    fn works_for_f32() {
        let x = Scaled::<f32>::from_log10(-1, -40.5).unwrap();
        assert_eq!(x.exponent(), -41);
        assert!((x.mantissa() - 3.1622777).abs() < 1e-5);
        let n = x.to_native().unwrap();
        assert!(n.underflowed);
    }
}
