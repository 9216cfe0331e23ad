//! Exact arithmetic in the ring of rational combinations of square roots.
//!
//! Every coefficient produced by this crate is a [`SqrtSum`]: a finite sum
//! `Σ q_r·√r` over square-free radicands `r ≥ 1` with nonzero rational
//! coefficients. Terms are kept in a sorted map, so equality (and therefore
//! zero-testing) is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("negative radicand {0}")]
    NegativeRadicand(Rational),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inverse requested for a multi-term value")]
    NotSingleTerm,
    #[error("cannot parse exact value: {0}")]
    Parse(String),
}

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Splits `n` as `a²·r` with `r` square-free, by trial division.
///
/// The loop stops once `p² > n` for the cofactor still left, so numbers built
/// from small primes are handled quickly regardless of their size.
fn square_split_u64(mut n: u64) -> (u64, u64) {
    let (mut outside, mut free) = (1u64, 1u64);
    let mut p = 2u64;
    while p * p <= n {
        let mut exp = 0;
        while n.is_multiple_of(p) {
            n /= p;
            exp += 1;
        }
        outside *= p.pow(exp / 2);
        if exp % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outside, free * n)
}

fn square_split(n: &BigUint) -> (BigUint, BigUint) {
    let mut rest = n.clone();
    let mut outside = BigUint::one();
    let mut free = BigUint::one();
    if rest.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    if let Some(small) = rest.to_u64() {
        let (o, f) = square_split_u64(small);
        return (BigUint::from(o), BigUint::from(f));
    }
    let mut p = BigUint::from(2u32);
    loop {
        if &p * &p > rest {
            break;
        }
        let mut exp = 0u32;
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            exp += 1;
        }
        if exp > 0 {
            outside *= p.pow(exp / 2);
            if exp % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    free *= rest;
    (outside, free)
}

/// An exact element of `ℚ(√2, √3, √5, …)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SqrtSum {
    terms: BTreeMap<u64, Rational>,
}

impl SqrtSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::term(q, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `q·√r`; `r` must be square-free.
    pub fn term(q: Rational, r: u64) -> Self {
        debug_assert!(r >= 1);
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(r, q);
        }
        Self { terms }
    }

    /// Exact positive square root of a nonnegative rational.
    pub fn sqrt_rational(q: &Rational) -> Result<Self, ExactError> {
        if q.is_negative() {
            return Err(ExactError::NegativeRadicand(q.clone()));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let n = q.numer().magnitude();
        let d = q.denom().magnitude();
        let (a, r1) = square_split(n);
        let (b, r2) = square_split(d);
        // √(a²r1 / b²r2) = a/(b·r2)·√(r1·r2); r1 and r2 are coprime.
        let rad = &r1 * &r2;
        let rad = rad
            .to_u64()
            .unwrap_or_else(|| panic!("square-free radicand {rad} exceeds u64"));
        let coeff = Rational::new(BigInt::from(a), BigInt::from(b * r2));
        Ok(Self::term(coeff, rad))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&1).is_some_and(|q| q.is_one())
    }

    /// Iterates `(radicand, coefficient)` pairs in ascending radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(r, q)| (*r, q))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn largest_radicand(&self) -> u64 {
        self.terms.keys().next_back().copied().unwrap_or(1)
    }

    /// The value as a rational, if it has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// The single term `(q, r)` of a one-term value.
    pub fn single_term(&self) -> Option<(&Rational, u64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(r, q)| (q, *r))
        } else {
            None
        }
    }

    /// Square of a single-term value, which is always rational.
    pub fn square_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let (q, r) = self.single_term()?;
        Some(q * q * Rational::from_integer(BigInt::from(r)))
    }

    /// `1/(q·√r) = (1/(q·r))·√r`; only defined for single-term values.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (q, r) = self.single_term().ok_or(ExactError::NotSingleTerm)?;
        let denom = q * Rational::from_integer(BigInt::from(r));
        Ok(Self::term(denom.recip(), r))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(r, c)| (*r, c * q)).collect(),
        }
    }

    /// Sign of the value: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if let Some((q, _)) = self.single_term() {
            return if q.is_negative() { -1 } else { 1 };
        }
        let v = self.to_f64();
        if v.abs() > 1e-9 * self.abs_bound() {
            return if v < 0.0 { -1 } else { 1 };
        }
        self.exact_signum()
    }

    fn abs_bound(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, q)| q.to_f64().unwrap_or(f64::INFINITY).abs() * (*r as f64).sqrt())
            .sum()
    }

    /// Exact sign by splitting off one radicand at a time: for `x = a + b√p`
    /// with `a`, `b` free of `√p`, compare `a²` against `b²p`.
    fn exact_signum(&self) -> i32 {
        let Some(&big) = self.terms.keys().next_back() else {
            return 0;
        };
        if big == 1 {
            return if self.terms[&1].is_negative() { -1 } else { 1 };
        }
        let p = smallest_prime_factor(big);
        let mut a = Self::zero();
        let mut b = Self::zero();
        for (r, q) in &self.terms {
            if r % p == 0 {
                b.add_term(r / p, q.clone());
            } else {
                a.add_term(*r, q.clone());
            }
        }
        let sa = a.signum();
        let sb = b.signum();
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        let lhs = &a * &a;
        let rhs = (&b * &b).scale(&Rational::from_integer(BigInt::from(p)));
        sa * (&lhs - &rhs).signum()
    }

    fn add_term(&mut self, r: u64, q: Rational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(r).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&r);
        }
    }

    /// Double-precision approximation; each term is rounded from `q²·r`, so its
    /// relative error stays below `2^-52`.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(r, q)| {
                let sq = q * q * Rational::from_integer(BigInt::from(*r));
                let mag = sq.to_f64().unwrap_or(f64::INFINITY).sqrt();
                if q.is_negative() {
                    -mag
                } else {
                    mag
                }
            })
            .sum()
    }

    /// Floating approximation for a requested precision; only double
    /// precision is available, which covers any request up to 53 bits.
    pub fn to_float(&self, precision_bits: u32) -> f64 {
        debug_assert!(precision_bits >= 53);
        self.to_f64()
    }

    /// Machine form `num/den*sqrt(rad)` joined by `+`/`-`; zero is `0`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (r, q)) in self.terms.iter().enumerate() {
            if i > 0 && !q.is_negative() {
                out.push('+');
            }
            out.push_str(&format!("{}/{}*sqrt({})", q.numer(), q.denom(), r));
        }
        out
    }
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return p;
        }
        p += 1;
    }
    n
}

fn merge(mut a: SqrtSum, b: &SqrtSum, sign: bool) -> SqrtSum {
    for (r, q) in &b.terms {
        a.add_term(*r, if sign { -q.clone() } else { q.clone() });
    }
    a
}

fn product(a: &SqrtSum, b: &SqrtSum) -> SqrtSum {
    let mut out = SqrtSum::zero();
    for (m, p) in &a.terms {
        for (n, q) in &b.terms {
            // √m·√n = g·√((m/g)(n/g)); the cofactors are coprime and square-free.
            let g = m.gcd(n);
            let rad = (m / g)
                .checked_mul(n / g)
                .expect("radicand overflow in product");
            out.add_term(rad, p * q * Rational::from_integer(BigInt::from(g)));
        }
    }
    out
}

impl Add for &SqrtSum {
    type Output = SqrtSum;
    fn add(self, rhs: &SqrtSum) -> SqrtSum {
        merge(self.clone(), rhs, false)
    }
}

impl Add for SqrtSum {
    type Output = SqrtSum;
    fn add(self, rhs: SqrtSum) -> SqrtSum {
        merge(self, &rhs, false)
    }
}

impl AddAssign<&SqrtSum> for SqrtSum {
    fn add_assign(&mut self, rhs: &SqrtSum) {
        for (r, q) in &rhs.terms {
            self.add_term(*r, q.clone());
        }
    }
}

impl Sub for &SqrtSum {
    type Output = SqrtSum;
    fn sub(self, rhs: &SqrtSum) -> SqrtSum {
        merge(self.clone(), rhs, true)
    }
}

impl Sub for SqrtSum {
    type Output = SqrtSum;
    fn sub(self, rhs: SqrtSum) -> SqrtSum {
        merge(self, &rhs, true)
    }
}

impl Neg for &SqrtSum {
    type Output = SqrtSum;
    fn neg(self) -> SqrtSum {
        SqrtSum {
            terms: self.terms.iter().map(|(r, q)| (*r, -q.clone())).collect(),
        }
    }
}

impl Neg for SqrtSum {
    type Output = SqrtSum;
    fn neg(self) -> SqrtSum {
        -&self
    }
}

impl Mul for &SqrtSum {
    type Output = SqrtSum;
    fn mul(self, rhs: &SqrtSum) -> SqrtSum {
        product(self, rhs)
    }
}

impl Mul for SqrtSum {
    type Output = SqrtSum;
    fn mul(self, rhs: SqrtSum) -> SqrtSum {
        product(&self, &rhs)
    }
}

impl std::iter::Sum for SqrtSum {
    fn sum<I: Iterator<Item = SqrtSum>>(iter: I) -> SqrtSum {
        let mut acc = SqrtSum::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl fmt::Display for SqrtSum {
    /// Human form: `1`, `-1/2`, `3/14*sqrt(14)`, `sqrt(2)-1/3*sqrt(5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (r, q)) in self.terms.iter().enumerate() {
            let neg = q.is_negative();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let a = q.abs();
            match (*r, a.is_one()) {
                (1, _) => write!(f, "{a}")?,
                (r, true) => write!(f, "sqrt({r})")?,
                (r, false) => write!(f, "{a}*sqrt({r})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SqrtSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SqrtSum({self})")
    }
}

impl FromStr for SqrtSum {
    type Err = ExactError;

    /// Accepts both the human and the canonical forms.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::Parse(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        let mut out = SqrtSum::zero();
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut pieces = Vec::new();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'(' {
                pieces.push(&s[start..i]);
                start = i;
            }
        }
        pieces.push(&s[start..]);
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            let (coef, rad) = match body.find("sqrt(") {
                Some(pos) => {
                    let inner = body[pos + 5..].strip_suffix(')').ok_or_else(bad)?;
                    let rad: u64 = inner.parse().map_err(|_| bad())?;
                    let coef = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                    (if coef.is_empty() { "1" } else { coef }, rad)
                }
                None => (body, 1),
            };
            let q: Rational = coef.parse().map_err(|_| bad())?;
            let q = if neg { -q } else { q };
            let root = SqrtSum::sqrt_rational(&Rational::from_integer(BigInt::from(rad)))?;
            out += &root.scale(&q);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    num: String,
    den: String,
    rad: String,
}

#[derive(Serialize, Deserialize)]
struct SqrtSumRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for SqrtSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SqrtSumRepr {
            terms: self
                .terms
                .iter()
                .map(|(r, q)| TermRepr {
                    num: q.numer().to_string(),
                    den: q.denom().to_string(),
                    rad: r.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SqrtSum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = SqrtSumRepr::deserialize(deserializer)?;
        let mut out = SqrtSum::zero();
        for t in repr.terms {
            let num: BigInt = t.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = t.den.parse().map_err(D::Error::custom)?;
            let rad: u64 = t.rad.parse().map_err(D::Error::custom)?;
            if den.is_zero() || rad == 0 {
                return Err(D::Error::custom("zero denominator or radicand"));
            }
            let (_, free) = square_split(&BigUint::from(rad));
            if free != BigUint::from(rad) {
                return Err(D::Error::custom(format!("radicand {rad} is not square-free")));
            }
            out.add_term(rad, Rational::new(num, den));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(r: i64) -> SqrtSum {
        SqrtSum::sqrt_rational(&rat(r, 1)).unwrap()
    }

    #[test]
    fn sqrt_examples() {
        assert!(SqrtSum::sqrt_rational(&rat(0, 1)).unwrap().is_zero());
        assert_eq!(
            SqrtSum::sqrt_rational(&rat(9, 4)).unwrap(),
            SqrtSum::from_rational(rat(3, 2))
        );
        assert_eq!(
            SqrtSum::sqrt_rational(&rat(1, 1080)).unwrap(),
            SqrtSum::term(rat(1, 180), 30)
        );
        assert!(matches!(
            SqrtSum::sqrt_rational(&rat(-1, 3)),
            Err(ExactError::NegativeRadicand(_))
        ));
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&sq(2) * &sq(2), SqrtSum::from_int(2));
        let a = SqrtSum::term(rat(1, 2), 6);
        let b = SqrtSum::term(rat(1, 3), 10);
        assert_eq!(&a * &b, SqrtSum::term(rat(1, 3), 15));
        assert!((&sq(2) + &(-&sq(2))).is_zero());
    }

    #[test]
    fn float_examples() {
        assert_eq!(SqrtSum::zero().to_float(53), 0.0);
        assert_eq!(SqrtSum::one().to_float(53), 1.0);
        let v = SqrtSum::term(rat(1, 180), 30).to_float(53);
        assert!((v - 30f64.sqrt() / 180.0).abs() < 1e-17);
        assert!((v - 0.030429030972).abs() < 1e-12);
    }

    #[test]
    fn inverse_single_term() {
        let x = SqrtSum::term(rat(2, 3), 5);
        assert!((&x * &x.inverse().unwrap()).is_one());
        assert_eq!((&sq(2) + &sq(3)).inverse(), Err(ExactError::NotSingleTerm));
        assert_eq!(SqrtSum::zero().inverse(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn signum_of_near_cancellation() {
        let x = &SqrtSum::from_int(99) - &SqrtSum::term(rat(70, 1), 2);
        assert_eq!(x.signum(), 1);
        assert_eq!((-x).signum(), -1);
        assert_eq!((&sq(3) - &sq(2)).signum(), 1);
    }

    #[test]
    fn text_round_trip() {
        let x = &SqrtSum::term(rat(-3, 7), 2) + &SqrtSum::term(rat(5, 2), 15);
        assert_eq!(x.to_canonical_string(), "-3/7*sqrt(2)+5/2*sqrt(15)");
        assert_eq!(x.to_string(), "-3/7*sqrt(2)+5/2*sqrt(15)");
        assert_eq!(x.to_canonical_string().parse::<SqrtSum>().unwrap(), x);
        assert_eq!("1".parse::<SqrtSum>().unwrap(), SqrtSum::one());
        assert_eq!("-sqrt(8)".parse::<SqrtSum>().unwrap(), SqrtSum::term(rat(-2, 1), 2));
    }

    #[test]
    fn json_shape() {
        let x = &SqrtSum::term(rat(1, 180), 30) + &SqrtSum::from_int(-2);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"num":"-2","den":"1","rad":"1"},{"num":"1","den":"180","rad":"30"}]}"#
        );
        assert_eq!(serde_json::from_str::<SqrtSum>(&s).unwrap(), x);
        assert!(serde_json::from_str::<SqrtSum>(r#"{"terms":[{"num":"1","den":"1","rad":"8"}]}"#).is_err());
    }
}
