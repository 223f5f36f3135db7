use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial-division bound used when normalizing arbitrary radicands.
const TRIAL_DIVISION_BOUND: u64 = 100_000;

/// Exact value `coef · √radicand` with a rational coefficient and a
/// squarefree nonnegative radicand.
///
/// The radicand is kept as a squarefree integer (a rational radicand `p/q`
/// is rewritten as `√(pq)/q`), so equality of normalized forms is equality of
/// values. Zero is stored with radicand 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactRadical {
    coef: BigRational,
    radicand: BigUint,
}

/// Splits `n` into `(r, s)` with `n = r²·s`, `s` squarefree up to the trial
/// division bound; any leftover cofactor is tested for being a perfect square.
fn square_split(n: &BigUint) -> (BigUint, BigUint) {
    let mut rest = n.clone();
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    if rest.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_BOUND {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            root *= pb.pow(e / 2);
            if e % 2 == 1 {
                free *= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let s = rest.sqrt();
        if &s * &s == rest {
            root *= s;
        } else {
            free *= rest;
        }
    }
    (root, free)
}

impl ExactRadical {
    pub fn zero() -> Self {
        ExactRadical {
            coef: BigRational::zero(),
            radicand: BigUint::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(coef: BigRational) -> Self {
        ExactRadical {
            coef,
            radicand: BigUint::one(),
        }
    }

    /// `coef · √radicand`, normalized. Fails on a negative radicand.
    pub fn new(coef: BigRational, radicand: BigRational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::Domain(format!("negative radicand {radicand}")));
        }
        if coef.is_zero() || radicand.is_zero() {
            return Ok(Self::zero());
        }
        // √(p/q) = √(pq)/q
        let p = radicand.numer().magnitude().clone();
        let q = radicand.denom().magnitude().clone();
        let (root, free) = square_split(&(&p * &q));
        let scale = BigRational::new(BigInt::from(root), BigInt::from(q));
        Ok(ExactRadical {
            coef: coef * scale,
            radicand: free,
        })
    }

    /// Builds from an already-squarefree integer radicand. Callers must
    /// guarantee `radicand` is squarefree and nonzero.
    pub(crate) fn from_parts_unchecked(coef: BigRational, radicand: BigUint) -> Self {
        if coef.is_zero() {
            return Self::zero();
        }
        debug_assert!(!radicand.is_zero());
        ExactRadical { coef, radicand }
    }

    /// `√r` for a nonnegative rational `r`.
    pub fn sqrt_of(r: BigRational) -> Result<Self> {
        Self::new(BigRational::one(), r)
    }

    pub fn coef(&self) -> &BigRational {
        &self.coef
    }

    /// The squarefree radicand as a rational (its denominator is always 1).
    pub fn radicand(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.radicand.clone()))
    }

    pub fn radicand_int(&self) -> &BigUint {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.coef.is_zero() {
            0
        } else if self.coef.is_positive() {
            1
        } else {
            -1
        }
    }

    /// The square of the value, `coef² · radicand`.
    pub fn square(&self) -> BigRational {
        &self.coef * &self.coef * self.radicand()
    }

    /// Re-normalizes the value. Already-normalized values are unchanged.
    pub fn normalized(&self) -> Self {
        Self::new(self.coef.clone(), self.radicand()).expect("radicand is nonnegative")
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::from_parts_unchecked(&self.coef * r, self.radicand.clone())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact product. Both radicands are squarefree, so
    /// `√a·√b = g·√((a/g)(b/g))` with `g = gcd(a, b)` is again squarefree.
    pub fn mul(&self, other: &ExactRadical) -> ExactRadical {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.radicand.gcd(&other.radicand);
        let rad = (&self.radicand / &g) * (&other.radicand / &g);
        let coef = &self.coef * &other.coef * BigRational::from_integer(BigInt::from(g));
        Self::from_parts_unchecked(coef, rad)
    }

    /// Exact sum; only defined over a common radicand (or with a zero operand).
    pub fn add(&self, other: &ExactRadical) -> Result<ExactRadical> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.radicand != other.radicand {
            return Err(Error::IncompatibleRadicands(
                self.to_string(),
                other.to_string(),
            ));
        }
        Ok(Self::from_parts_unchecked(
            &self.coef + &other.coef,
            self.radicand.clone(),
        ))
    }

    /// `floor(|value| · 2^k)` computed exactly.
    fn scaled_floor(&self, k: u32) -> BigUint {
        let sq = self.square();
        let num = sq.numer().magnitude() << (2 * k as usize);
        let den = sq.denom().magnitude();
        (num / den).sqrt()
    }

    /// Value as `f64`, computed with `precision_bits` (at least 53) working
    /// bits before the final rounding.
    pub fn to_float(&self, precision_bits: u32) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = precision_bits.max(53) + 8;
        // choose k so the scaled integer carries at least `bits` bits
        let approx = self.coef.to_f64().unwrap_or(0.0).abs()
            * self.radicand.to_f64().unwrap_or(f64::MAX).sqrt();
        let mag = if approx > 0.0 && approx.is_finite() {
            approx.log2().floor() as i64
        } else {
            0
        };
        let k = (bits as i64 - mag).max(0) as u32;
        let s = self.scaled_floor(k);
        let v = BigRational::new(
            BigInt::from_biguint(Sign::Plus, s),
            BigInt::one() << k as usize,
        )
        .to_f64()
        .unwrap_or(f64::NAN);
        if self.coef.is_negative() {
            -v
        } else {
            v
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_float(53)
    }

    /// Decimal expansion truncated to `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let sq = self.square();
        let ten = BigUint::from(10u32).pow(2 * digits as u32);
        let scaled = (sq.numer().magnitude() * ten / sq.denom().magnitude()).sqrt();
        let mut s = scaled.to_string();
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        let (int, frac) = s.split_at(s.len() - digits);
        let sign = if self.coef.is_negative() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

impl<'a> Mul<&'a ExactRadical> for &'a ExactRadical {
    type Output = ExactRadical;
    fn mul(self, rhs: &ExactRadical) -> ExactRadical {
        ExactRadical::mul(self, rhs)
    }
}

impl Neg for ExactRadical {
    type Output = ExactRadical;
    fn neg(self) -> ExactRadical {
        ExactRadical::from_parts_unchecked(-self.coef, self.radicand)
    }
}

impl Default for ExactRadical {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for ExactRadical {
    /// `coef·√radicand`, or just `coef` when the radicand is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else if self.radicand.is_one() {
            write!(f, "{}", self.coef)
        } else {
            write!(f, "{}·√{}", self.coef, self.radicand)
        }
    }
}

/// Product of two radicals.
pub fn radical_mul(a: &ExactRadical, b: &ExactRadical) -> ExactRadical {
    a.mul(b)
}

/// Free radical_add.
pub fn radical_add(a: &ExactRadical, b: &ExactRadical) -> Result<ExactRadical> {
    a.add(b)
}

/// Accumulates a sum of radicals grouped by radicand.
#[derive(Clone, Debug, Default)]
pub struct RadicalSum {
    terms: BTreeMap<BigUint, BigRational>,
}

impl RadicalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: &ExactRadical) {
        if x.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(x.radicand.clone())
            .or_insert_with(BigRational::zero);
        *e += &x.coef;
    }

    /// The sum as a single radical; fails if more than one radicand survives.
    pub fn into_radical(self) -> Result<ExactRadical> {
        let mut live: Vec<_> = self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        match live.len() {
            0 => Ok(ExactRadical::zero()),
            1 => {
                let (r, c) = live.pop().unwrap();
                Ok(ExactRadical::from_parts_unchecked(c, r))
            }
            _ => Err(Error::IncompatibleRadicands(
                format!("√{}", live[0].0),
                format!("√{}", live[1].0),
            )),
        }
    }
}

/// Shorthand for a rational `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(c: (i64, i64), s: (i64, i64)) -> ExactRadical {
        ExactRadical::new(rat(c.0, c.1), rat(s.0, s.1)).unwrap()
    }

    #[test]
    fn mul_examples() {
        assert_eq!(r((1, 1), (2, 1)).mul(&r((1, 1), (2, 1))), r((2, 1), (1, 1)));
        let x = r((-3, 7), (10, 3));
        assert_eq!(ExactRadical::one().mul(&x), x);
        // (1/2·√3)(2·√6) = √18 = 3√2
        assert_eq!(r((1, 2), (3, 1)).mul(&r((2, 1), (6, 1))), r((3, 1), (2, 1)));
    }

    #[test]
    fn add_examples() {
        let a = r((1, 3), (5, 1));
        let b = r((1, 6), (5, 1));
        assert_eq!(a.add(&b).unwrap(), r((1, 2), (5, 1)));
        assert_eq!(a.add(&ExactRadical::zero()).unwrap(), a);
        assert!(matches!(
            r((1, 1), (2, 1)).add(&r((1, 1), (3, 1))),
            Err(Error::IncompatibleRadicands(_, _))
        ));
    }

    #[test]
    fn float_examples() {
        assert!((r((1, 1), (2, 1)).to_float(53) - std::f64::consts::SQRT_2).abs() < 1e-16);
        assert_eq!(r((-3, 70), (1, 1)).to_float(53), -3.0 / 70.0);
        assert_eq!(ExactRadical::zero().to_float(53), 0.0);
        assert_eq!(r((1, 1), (1, 3)).to_float(128), 0.5773502691896257);
    }

    #[test]
    fn rational_radicand_normalizes() {
        // √(1/3) = (1/3)√3
        let x = r((1, 1), (1, 3));
        assert_eq!(x.coef(), &rat(1, 3));
        assert_eq!(x.radicand(), rat(3, 1));
        // √(8/9) = (2/3)√2
        let y = r((1, 1), (8, 9));
        assert_eq!(y, r((2, 3), (2, 1)));
    }

    #[test]
    fn large_prime_square_detected() {
        let p = 1_000_003i64; // prime beyond the trial bound
        let x = r((1, 1), (p * p * 3, 1));
        assert_eq!(x, r((p, 1), (3, 1)));
    }

    #[test]
    fn decimal_expansion() {
        assert_eq!(r((1, 6), (1, 1)).to_decimal(6), "0.166666");
        assert_eq!(r((-1, 1), (2, 1)).to_decimal(10), "-1.4142135623");
        assert_eq!(r((7, 2), (1, 1)).to_decimal(0), "3");
    }

    #[test]
    fn sum_groups_radicands() {
        let mut s = RadicalSum::new();
        s.push(&r((1, 2), (3, 1)));
        s.push(&r((1, 1), (2, 1)));
        s.push(&r((-1, 1), (2, 1)));
        assert_eq!(s.into_radical().unwrap(), r((1, 2), (3, 1)));
    }

    fn arb_radical() -> impl Strategy<Value = ExactRadical> {
        (-50i64..50, 1i64..20, 0i64..200, 1i64..30)
            .prop_map(|(a, b, c, d)| ExactRadical::new(rat(a, b), rat(c, d)).unwrap())
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in arb_radical(), b in arb_radical(), c in arb_radical()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn float_of_product(a in arb_radical(), b in arb_radical()) {
            let p = a.mul(&b).to_float(53);
            let q = a.to_float(53) * b.to_float(53);
            let ulp = f64::EPSILON * p.abs().max(q.abs());
            prop_assert!((p - q).abs() <= 4.0 * ulp, "{} vs {}", p, q);
        }

        #[test]
        fn normalization_idempotent(a in arb_radical()) {
            prop_assert_eq!(a.normalized(), a.clone());
            prop_assert_eq!(a.normalized().normalized(), a.normalized());
        }
    }
}
