//! SU(2) Clebsch–Gordan coefficients in the Condon–Shortley convention.

use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, SqrtSum};
use crate::labels::HalfInt;

/// `⟨j₁ m₁ j₂ m₂ | J M⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Su2CgKey {
    pub j1: HalfInt,
    pub m1: HalfInt,
    pub j2: HalfInt,
    pub m2: HalfInt,
    pub j: HalfInt,
    pub m: HalfInt,
}

impl Su2CgKey {
    pub fn new(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, j: HalfInt, m: HalfInt) -> Self {
        Self { j1, m1, j2, m2, j, m }
    }

    /// Same as [`Su2CgKey::new`] with every label given doubled.
    pub fn from_twice(j1: i64, m1: i64, j2: i64, m2: i64, j: i64, m: i64) -> Self {
        let h = HalfInt::from_twice;
        Self::new(h(j1), h(m1), h(j2), h(m2), h(j), h(m))
    }

    fn validate(&self) -> Result<()> {
        for (name, j, m) in [("1", self.j1, self.m1), ("2", self.j2, self.m2), ("", self.j, self.m)] {
            if j.twice < 0 {
                return Err(Error::MalformedKey(format!("j{name} = {j} is negative")));
            }
            if m.abs() > j {
                return Err(Error::MalformedKey(format!("|m{name}| = |{m}| exceeds j{name} = {j}")));
            }
            if (j.twice - m.twice) % 2 != 0 {
                return Err(Error::MalformedKey(format!("m{name} = {m} and j{name} = {j} differ in integrality")));
            }
        }
        Ok(())
    }
}

/// Whether `c` can couple from `a ⊗ b`.
pub fn triangle(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    (a - b).abs() <= c && c <= a + b && (a.twice + b.twice + c.twice) % 2 == 0
}

static FACTORIALS: RwLock<Vec<BigUint>> = RwLock::new(Vec::new());

fn factorial(n: i64) -> BigInt {
    debug_assert!(n >= 0);
    let n = n as usize;
    if let Some(v) = FACTORIALS.read().expect("factorial table").get(n) {
        return BigInt::from(v.clone());
    }
    let mut table = FACTORIALS.write().expect("factorial table");
    if table.is_empty() {
        table.push(BigUint::one());
    }
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigUint::from(k);
        table.push(next);
    }
    BigInt::from(table[n].clone())
}

/// Integer value of a half-integer expression known to be integral.
fn int(h: HalfInt) -> i64 {
    debug_assert!(h.is_integer());
    h.twice / 2
}

/// Exact `⟨j₁ m₁ j₂ m₂ | J M⟩` by Racah's single-sum formula.
pub fn su2_cg(key: &Su2CgKey) -> Result<SqrtSum> {
    key.validate()?;
    let Su2CgKey { j1, m1, j2, m2, j, m } = *key;
    if m1 + m2 != m || !triangle(j1, j2, j) {
        return Ok(SqrtSum::zero());
    }
    let f = |h: HalfInt| factorial(int(h));
    let under = Rational::new(
        BigInt::from(j.multiplet())
            * f(j + j1 - j2)
            * f(j - j1 + j2)
            * f(j1 + j2 - j)
            * f(j + m)
            * f(j - m)
            * f(j1 - m1)
            * f(j1 + m1)
            * f(j2 - m2)
            * f(j2 + m2),
        f(j1 + j2 + j + HalfInt::ONE),
    );
    let kmin = 0.max(int(j2 - j - m1)).max(int(j1 + m2 - j));
    let kmax = int(j1 + j2 - j).min(int(j1 - m1)).min(int(j2 + m2));
    let mut sum = Rational::zero();
    for k in kmin..=kmax {
        let kh = HalfInt::int(k);
        let den = factorial(k)
            * f(j1 + j2 - j - kh)
            * f(j1 - m1 - kh)
            * f(j2 + m2 - kh)
            * f(j - j2 + m1 + kh)
            * f(j - j1 - m2 + kh);
        let term = Rational::new(BigInt::one(), den);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(SqrtSum::sqrt_rational(&under)?.scale(&sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn cg(j1: i64, m1: i64, j2: i64, m2: i64, j: i64, m: i64) -> SqrtSum {
        su2_cg(&Su2CgKey::from_twice(j1, m1, j2, m2, j, m)).unwrap()
    }

    #[test]
    fn scalar_coupling_is_one() {
        for tj in 0..6 {
            for tm in (-tj..=tj).step_by(2) {
                assert!(cg(tj, tm, 0, 0, tj, tm).is_one());
            }
        }
    }

    #[test]
    fn tabulated_values() {
        let r = SqrtSum::term(rat(1, 2), 2);
        assert_eq!(cg(1, 1, 1, -1, 0, 0), r);
        assert_eq!(cg(1, -1, 1, 1, 0, 0), -r);
        assert_eq!(cg(2, 2, 2, -2, 0, 0), SqrtSum::term(rat(1, 3), 3));
    }

    #[test]
    fn selection_rules_give_zero() {
        assert!(cg(2, 2, 2, 2, 2, 0).is_zero());
        assert!(cg(2, 0, 2, 0, 6, 0).is_zero());
        assert!(cg(1, 1, 1, 1, 0, 0).is_zero());
    }

    #[test]
    fn malformed_keys() {
        let bad = [
            Su2CgKey::from_twice(1, 3, 1, 1, 2, 4),
            Su2CgKey::from_twice(2, 1, 1, 1, 1, 2),
            Su2CgKey::from_twice(-2, 0, 0, 0, 0, 0),
        ];
        for k in bad {
            assert!(matches!(su2_cg(&k), Err(Error::MalformedKey(_))), "{k:?}");
        }
    }

    /// Stretched states: `⟨j₁ j₁ j₂ j₂ | j₁+j₂ j₁+j₂⟩ = 1`.
    #[test]
    fn stretched_is_one() {
        for a in 0..6 {
            for b in 0..6 {
                assert!(cg(a, a, b, b, a + b, a + b).is_one());
            }
        }
    }

    #[test]
    fn condon_shortley_sign() {
        for a in 0i64..6 {
            for b in 0..6 {
                for j in ((a - b).abs()..=a + b).step_by(2) {
                    assert_eq!(cg(a, a, b, j - a, j, j).signum(), 1, "{a} {b} {j}");
                }
            }
        }
    }
}
