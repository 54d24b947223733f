//! Exact field elements: arbitrary-precision rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// `GF(p)`; rejects composite moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime { modulus: p })
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    /// The image of `numer / denom` in this field.
    pub fn from_ratio(&self, numer: &BigInt, denom: &BigInt) -> Result<Scalar> {
        if denom.is_zero() {
            return Err(Error::Argument("zero denominator".into()));
        }
        match *self {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(numer.clone(), denom.clone()))),
            Field::Prime(p) => {
                let reduce = |n: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    (((n % &m) + &m) % &m).to_u64().expect("residue fits in u64")
                };
                let d = reduce(denom);
                if d == 0 {
                    return Err(Error::Argument(format!("denominator divisible by {p}")));
                }
                let n = Scalar::Modular { value: reduce(numer), modulus: p };
                Ok(&n * &Scalar::Modular { value: d, modulus: p }.inverse())
            }
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, Field::Prime(_))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inverse(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero scalar");
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// True when the printed form carries a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.abs()),
            s => s.clone(),
        }
    }
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "scalars from different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Modular { value: ((*a as u128 + *b as u128) % p as u128) as u64, modulus: p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Modular { value: ((*a as u128 * *b as u128) % p as u128) as u64, modulus: p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
