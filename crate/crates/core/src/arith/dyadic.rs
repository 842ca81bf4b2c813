use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;

/// An exact rational `mantissa * 2^exponent`.
///
/// Normal form: the mantissa is odd, or it is zero and the exponent is zero.
/// Equal values therefore have identical representations, and derived
/// equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: impl Into<BigInt>, exponent: i64) -> Self {
        let mut mantissa = mantissa.into();
        if mantissa.is_zero() {
            return Self::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        mantissa >>= tz;
        Dyadic {
            mantissa,
            exponent: exponent + tz as i64,
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: 0,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::new(v, 0)
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Self {
        Self::new(1, e)
    }

    /// `num / 2^k`.
    pub fn ratio(num: i64, k: u32) -> Self {
        Self::new(num, -(k as i64))
    }

    /// Integer accumulator scaled by `2^exponent`; the usual exit from the
    /// hot loops.
    pub fn from_scaled(acc: i128, exponent: i64) -> Self {
        Self::new(acc, exponent)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Multiplies by `2^k`.
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + k,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        if self.is_zero() {
            return if k == 0 { Self::one() } else { Self::zero() };
        }
        Dyadic {
            mantissa: num_traits::pow(self.mantissa.clone(), k as usize),
            exponent: self.exponent * k as i64,
        }
    }

    /// Mantissas of `self` and `other` rescaled to the common exponent
    /// `min(e1, e2)`.
    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        (a, b, e)
    }

    pub fn cmp_abs(&self, other: &Dyadic) -> Ordering {
        let (a, b, _) = self.abs().aligned(&other.abs());
        a.cmp(&b)
    }

    /// The denominator exponent `k` in `m / 2^k` (zero for integers).
    pub fn denominator_log2(&self) -> u64 {
        if self.exponent < 0 {
            (-self.exponent) as u64
        } else {
            0
        }
    }

    /// Plain fraction, e.g. `-3/64`, or an integer.
    pub fn to_fraction_string(&self) -> String {
        if self.exponent >= 0 {
            return (&self.mantissa << self.exponent as usize).to_string();
        }
        let den = BigInt::one() << (-self.exponent) as usize;
        format!("{}/{}", self.mantissa, den)
    }

    /// Exact decimal expansion (always terminates for dyadic values).
    pub fn to_decimal_string(&self) -> String {
        if self.exponent >= 0 {
            return self.to_fraction_string();
        }
        let k = (-self.exponent) as usize;
        // m / 2^k = m * 5^k / 10^k
        let scaled = self.mantissa.abs() * num_traits::pow(BigInt::from(5), k);
        let digits = scaled.to_string();
        let (int, frac) = if digits.len() > k {
            let (a, b) = digits.split_at(digits.len() - k);
            (a.to_string(), b.to_string())
        } else {
            ("0".to_string(), format!("{digits:0>k$}"))
        };
        let frac = frac.trim_end_matches('0');
        let sign = if self.signum() < 0 { "-" } else { "" };
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Lossy conversion for summaries.
    pub fn to_f64(&self) -> f64 {
        let m = self.mantissa.to_f64().unwrap_or(f64::NAN);
        m * (self.exponent as f64).exp2()
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul<&Dyadic> for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        // odd * odd is odd: already normal
        Dyadic {
            mantissa: &self.mantissa * &rhs.mantissa,
            exponent: self.exponent + rhs.exponent,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic { (&self).$m(&rhs) }
        }
        impl $tr<&Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &Dyadic) -> Dyadic { (&self).$m(rhs) }
        }
        impl $tr<Dyadic> for &Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Dyadic> for Dyadic {
    fn sum<I: Iterator<Item = &'a Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |a, b| a + b)
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

/// `m/2^k` for non-integers (`-3/2^6`), the plain integer otherwise.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent >= 0 {
            f.write_str(&self.to_fraction_string())
        } else {
            write!(f, "{}/2^{}", self.mantissa, -self.exponent)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `m`, `m/2^k`, and `m/d` with `d` a power of two.
impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::ParseDyadic(s.to_string());
        let s = s.trim();
        let Some((num, den)) = s.split_once('/') else {
            return s
                .parse::<BigInt>()
                .map(|m| Dyadic::new(m, 0))
                .map_err(|_| err());
        };
        let m: BigInt = num.trim().parse().map_err(|_| err())?;
        let den = den.trim();
        let k = if let Some(exp) = den.strip_prefix("2^") {
            exp.parse::<i64>().map_err(|_| err())?
        } else {
            let d: BigInt = den.parse().map_err(|_| err())?;
            if d.sign() != Sign::Plus || !(&d & (&d - 1u32)).is_zero() {
                return Err(err());
            }
            d.trailing_zeros().unwrap_or(0) as i64
        };
        Ok(Dyadic::new(m, -k))
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(Dyadic::new(3, -3) + Dyadic::new(1, -3), Dyadic::new(1, -1));
        let p = Dyadic::new(-3, -6) * Dyadic::new(3, -3);
        assert_eq!(p, Dyadic::new(-9, -9));
        assert_eq!((p.mantissa().clone(), p.exponent()), (BigInt::from(-9), -9));
        let x = d("-15/512");
        assert!((&x + &(-&x)).is_zero());
        assert_eq!((&x - &x).exponent(), 0);
    }

    #[test]
    fn normal_form() {
        let a = Dyadic::new(12, -5);
        assert_eq!((a.mantissa().clone(), a.exponent()), (BigInt::from(3), -3));
        let z = Dyadic::new(0, -40);
        assert_eq!(z.exponent(), 0);
        assert_eq!(z, Dyadic::zero());
    }

    #[test]
    fn abs_comparisons() {
        let nine = Dyadic::new(3, -3).pow(2);
        assert_eq!(d("-3/64").cmp_abs(&nine), Ordering::Less);
        assert_eq!(d("-3/64").cmp_abs(&d("3/64")), Ordering::Equal);
        let bound = Dyadic::new(3, -3).pow(3);
        assert_eq!(bound, d("27/512"));
        assert_eq!(d("15/512").cmp_abs(&bound), Ordering::Less);
        assert!(d("-1") < d("1/2^40"));
    }

    #[test]
    fn renderings() {
        assert_eq!(d("-3/64").to_string(), "-3/2^6");
        assert_eq!(d("3/2^3").to_fraction_string(), "3/8");
        assert_eq!(d("-3/64").to_decimal_string(), "-0.046875");
        assert_eq!(d("15/512").to_decimal_string(), "0.029296875");
        assert_eq!(d("12").to_string(), "12");
        assert_eq!(d("5/2").to_decimal_string(), "2.5");
        assert_eq!(Dyadic::zero().to_string(), "0");
        assert!("3/6".parse::<Dyadic>().is_err());
        assert!("x".parse::<Dyadic>().is_err());
    }
}
