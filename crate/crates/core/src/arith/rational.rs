use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::ArithError;

/// Integer as a rational.
pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `num/den` as a rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3/2"`, `"-7"`, or a plain decimal such as `"1e-40"` / `"0.25"`.
pub fn parse_rational(s: &str) -> Result<BigRational, ArithError> {
    let err = || ArithError::Parse(s.to_string());
    let t = s.trim();
    if let Some((a, b)) = t.split_once('/') {
        let num: BigInt = a.trim().parse().map_err(|_| err())?;
        let den: BigInt = b.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| err())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (ip, fp) = digits.split_once('.').unwrap_or((digits, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(err());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let all: BigInt = format!("{ip}{fp}").parse().map_err(|_| err())?;
    let shift = exp - fp.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if shift >= 0 {
        BigRational::from_integer(all * num_traits::pow(ten, shift as usize))
    } else {
        BigRational::new(all, num_traits::pow(ten, (-shift) as usize))
    };
    if neg {
        q = -q;
    }
    Ok(q)
}

/// Fixed-point decimal rendering with `digits` digits after the point,
/// rounded half away from zero. Presentation only.
pub fn to_decimal(q: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = q.abs() * BigRational::from_integer(scale.clone());
    let (whole, rem) = scaled.numer().div_rem(scaled.denom());
    let twice = rem * 2;
    let rounded = if &twice >= scaled.denom() { whole + 1 } else { whole };
    let (ip, fp) = rounded.div_rem(&scale);
    let sign = if q.is_negative() && !rounded_is_zero(&ip, &fp) { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{ip}");
    }
    format!("{sign}{ip}.{:0>width$}", fp.to_string(), width = digits)
}

/// Scientific rendering `d.ddde-k` with `digits` digits after the point.
pub fn to_scientific(q: &BigRational, digits: usize) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let a = q.abs();
    let ten = BigRational::from_integer(BigInt::from(10));
    let pow10 = |k: i64| {
        let p = num_traits::pow(ten.clone(), k.unsigned_abs() as usize);
        if k >= 0 {
            p
        } else {
            p.recip()
        }
    };
    let mut k = a.numer().to_string().len() as i64 - a.denom().to_string().len() as i64;
    while a < pow10(k) {
        k -= 1;
    }
    while a >= pow10(k + 1) {
        k += 1;
    }
    let mut mantissa = to_decimal(&(&a / pow10(k)), digits);
    if mantissa.starts_with("10") {
        k += 1;
        mantissa = to_decimal(&(&a / pow10(k)), digits);
    }
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}{mantissa}e{k}")
}

fn rounded_is_zero(ip: &BigInt, fp: &BigInt) -> bool {
    ip.is_zero() && fp.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), int(250));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn decimal_rendering_rounds() {
        assert_eq!(to_decimal(&rat(2, 3), 5), "0.66667");
        assert_eq!(to_decimal(&rat(-1, 8), 2), "-0.13");
        assert_eq!(to_decimal(&int(7), 3), "7.000");
        assert_eq!(to_decimal(&rat(-1, 1000), 2), "0.00");
    }

    #[test]
    fn scientific_rendering() {
        assert_eq!(to_scientific(&rat(1, 1000), 2), "1.00e-3");
        assert_eq!(to_scientific(&rat(-12345, 1), 1), "-1.2e4");
        assert_eq!(to_scientific(&rat(9999, 1000), 2), "1.00e1");
        assert_eq!(to_scientific(&int(0), 3), "0");
    }
}
