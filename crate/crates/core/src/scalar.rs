//! Exact field elements.
//!
//! A [`Scalar`] is either an arbitrary-precision rational number or a residue
//! modulo a prime. Every computation in this crate is performed in exactly
//! one [`Field`]; mixing elements of different fields is a programming error
//! and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals.
    Rational,
    /// The prime field with the given characteristic.
    Prime(u64),
}

impl Field {
    /// The prime field `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    /// Zero for rationals, `p` otherwise.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den`, failing when the denominator vanishes in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar, Error> {
        let d = self.int(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::Field(format!("{den} is not invertible in {self}")))?;
        Ok(&self.int(num) * &inv)
    }

    /// Parses `"p/q"`, `"p"` or (for prime fields) a residue string.
    pub fn parse(self, s: &str) -> Result<Scalar, Error> {
        let bad = || Error::Field(format!("cannot parse {s:?} as an element of {self}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| {
                    let r = ((x % &m) + &m) % &m;
                    r.to_u64().expect("residue fits in u64")
                };
                let n = Scalar::Modular {
                    value: reduce(&num),
                    modulus: p,
                };
                let d = Scalar::Modular {
                    value: reduce(&den),
                    modulus: p,
                };
                let dinv = d.inv().ok_or_else(bad)?;
                Ok(&n * &dinv)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`] in canonical form.
///
/// Rationals are kept reduced with a positive denominator and residues lie in
/// `[0, p)`, so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mixed(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed-field arithmetic: {} with {}", a.field(), b.field())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => mixed(self, rhs),
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
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Scalar::Modular {
                    value: mul_mod(*a, *b, *p),
                    modulus: *p,
                }
            }
            _ => mixed(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        // Rationals add in place to avoid a clone per accumulation step.
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}
