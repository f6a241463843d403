//! Exact rational helpers shared by the coefficient and certificate code.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn big_string(x: &BigUint) -> String {
    x.to_str_radix(10)
}

/// Always `p/q`, including integers (`3/1`).
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn ser_ratio<S: serde::Serializer>(
    x: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(x))
}

pub fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&big_string(x))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn ratio_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.25`.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("cannot parse `{s}` as a rational"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().map_err(|_| bad())?
        };
        let scale = BigInt::from(10u8).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let mag = int.abs() * &scale + frac;
        let num = if negative { -mag } else { mag };
        return Ok(BigRational::new(num, scale));
    }
    Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?))
}

/// `base^exp` for a non-negative or negative integer exponent. Numerator and
/// denominator are powered separately; coprimality is preserved.
pub fn pow_int(base: &BigRational, exp: i64) -> BigRational {
    let b = if exp >= 0 { base.clone() } else { base.recip() };
    let e = u32::try_from(exp.unsigned_abs()).expect("exponent fits in u32");
    let (n, d) = b.into_raw();
    BigRational::new_raw(n.pow(e), d.pow(e))
}

/// Bit size above which products are left unreduced: gcd reduction is
/// quadratic, while comparison and equality do not need lowest terms.
const REDUCE_BITS: u64 = 1 << 14;

/// `a * b`, reduced to lowest terms only when the operands are small.
pub fn mul_lazy(a: &BigRational, b: &BigRational) -> BigRational {
    let bits = a.numer().bits() + a.denom().bits() + b.numer().bits() + b.denom().bits();
    if bits <= REDUCE_BITS {
        a * b
    } else {
        BigRational::new_raw(a.numer() * b.numer(), a.denom() * b.denom())
    }
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // huge numerator or denominator: go through logarithms
        let (n, d) = (r.numer(), r.denom());
        let sign = if n.is_negative() { -1.0 } else { 1.0 };
        sign * (log2_big(&n.abs().to_biguint().unwrap()) - log2_big(&d.to_biguint().unwrap()))
            .exp2()
    })
}

pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().log2();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().log2() + shift as f64
}

pub fn log2_ratio(r: &BigRational) -> f64 {
    log2_big(&r.numer().abs().to_biguint().unwrap()) - log2_big(&r.denom().to_biguint().unwrap())
}

/// A product `coeff * prod base_i^(exp_i)` with positive rational bases and
/// rational exponents. Values may be irrational; comparisons between two
/// products are still exact, by raising both sides to the least common
/// denominator of all exponents.
#[derive(Clone, Debug)]
pub struct PowerProduct {
    pub coeff: BigRational,
    pub factors: Vec<(BigRational, BigRational)>,
}

impl PowerProduct {
    pub fn constant(c: BigRational) -> PowerProduct {
        PowerProduct {
            coeff: c,
            factors: Vec::new(),
        }
    }

    pub fn times(mut self, base: BigRational, exp: BigRational) -> PowerProduct {
        self.factors.push((base, exp));
        self
    }

    pub fn times_int(self, base: BigRational, exp: i64) -> PowerProduct {
        self.times(base, ratio_int(exp))
    }

    fn common_denominator(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (_, e)| acc.lcm(e.denom()))
    }

    /// The exact value of `self^power` where `power` clears every exponent
    /// denominator.
    pub fn raised(&self, power: &BigInt) -> BigRational {
        let p = power.to_i64().expect("exponent denominator fits in i64");
        let mut out = pow_int(&self.coeff, p);
        for (base, exp) in &self.factors {
            let e = exp * BigRational::from_integer(power.clone());
            debug_assert!(e.is_integer());
            out = mul_lazy(
                &out,
                &pow_int(base, e.to_integer().to_i64().expect("exponent fits in i64")),
            );
        }
        out
    }

    /// Exact comparison of two non-negative products. Both coefficients must
    /// be non-negative and every base positive.
    pub fn cmp_exact(&self, other: &PowerProduct) -> Ordering {
        let l = self.common_denominator().lcm(&other.common_denominator());
        self.raised(&l).cmp(&other.raised(&l))
    }

    /// Returns `(lhs^k, rhs^k, k)` for the smallest `k` making both exact.
    pub fn exact_sides(&self, other: &PowerProduct) -> (BigRational, BigRational, BigInt) {
        let l = self.common_denominator().lcm(&other.common_denominator());
        (self.raised(&l), other.raised(&l), l)
    }

    pub fn log2(&self) -> f64 {
        let mut acc = log2_ratio(&self.coeff);
        for (b, e) in &self.factors {
            acc += log2_ratio(b) * to_f64(e);
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.log2().exp2()
    }
}

/// The simplest fraction within `tol` of `x` (continued-fraction
/// convergents), for `x` in `[0, 1]`.
pub fn simplest_within(x: f64, tol: f64) -> BigRational {
    let x = x.clamp(0.0, 1.0);
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let approx = h1.to_f64().unwrap() / k1.to_f64().unwrap();
        if (approx - x).abs() <= tol {
            break;
        }
        let frac = rest - a;
        if frac <= f64::EPSILON {
            break;
        }
        rest = 1.0 / frac;
    }
    BigRational::new(h1, k1)
}
