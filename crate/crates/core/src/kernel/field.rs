//! Exact coefficient fields.
//!
//! Every algorithm in the crate is generic over [`Field`]. Two
//! implementations ship: arbitrary-precision rationals ([`Rational`]) and
//! prime fields [`Fp`] with a compile-time modulus.
//!
//! Prime fields are finite, so they do not meet the infinite-field hypothesis
//! under which the lifting theory is stated. They are useful for speed and
//! for cross-checks, but genericity arguments (random changes of basis) lose
//! their guarantees over small primes.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational numbers in canonical form.
pub type Rational = BigRational;

/// An exact field of coefficients.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Characteristic of the field; 0 for the rationals.
    fn characteristic() -> u64;

    /// Multiplicative inverse. Zero has none.
    fn inv(&self) -> Result<Self>;

    /// Image of an integer.
    fn from_i64(n: i64) -> Self;

    /// Image of a rational number; fails when the denominator vanishes in
    /// the field.
    fn from_rational(q: &BigRational) -> Result<Self>;

    /// A numerator/denominator pair representing the value, with positive
    /// denominator. Prime-field residues report denominator 1.
    fn to_ratio(&self) -> (BigInt, BigInt);

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Inverse of a value the caller knows to be nonzero (leading
    /// coefficients, pivots).
    fn inv_nonzero(&self) -> Self {
        self.inv().expect("inverse of a nonzero field element")
    }
}

impl Field for BigRational {
    fn characteristic() -> u64 {
        0
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &BigRational) -> Result<Self> {
        Ok(q.clone())
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residues modulo the prime `P`, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME: () = assert!(is_prime(P) && P < (1 << 62), "Fp modulus must be a prime below 2^62");

    pub fn new(value: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::PRIME;
        Fp(value.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + P - rhs.0
        })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn characteristic() -> u64 {
        P
    }

    fn inv(&self) -> Result<Self> {
        if self.0 == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.pow(P - 2))
        }
    }

    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }

    fn from_rational(q: &BigRational) -> Result<Self> {
        let p = BigInt::from(P);
        let reduce = |n: &BigInt| -> Self {
            let r = n.mod_floor(&p);
            Fp(r.to_u64().expect("residue fits in u64"))
        };
        let num = reduce(q.numer());
        let den = reduce(q.denom());
        num.checked_div(&den)
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.0), BigInt::one())
    }
}

/// Formats a rational the way the text renderers expect: `p` or `p/q`.
pub fn format_ratio(num: &BigInt, den: &BigInt) -> String {
    if den.is_one() {
        num.to_string()
    } else {
        format!("{}/{}", num, den)
    }
}

/// `true` when the value is a negative rational; prime-field residues are
/// never negative.
pub fn is_negative<F: Field>(c: &F) -> bool {
    c.to_ratio().0.is_negative()
}
