use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::arith::{is_prime_u64, mul_mod_u64, pow_mod_u64};
use super::{Scalar, Sign, SquareClass, ENUMERATION_LIMIT};
use crate::error::{Error, Result};

/// Element of the prime field `F_p`, `p` an odd prime below `2^62`.
///
/// `modulus == 0` marks an unbound integer constant (see the module docs of
/// [`crate::field`]); such values are reduced as soon as they meet a bound
/// element.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    value: i64,
    modulus: u64,
}

impl Fp {
    /// `value mod p`. Fails unless `p` is an odd prime below `2^62`.
    pub fn new(value: i64, p: u64) -> Result<Fp> {
        if p == 2 {
            return Err(Error::InvalidField(
                "characteristic 2 is not supported".into(),
            ));
        }
        if p >= 1 << 62 || !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not an odd prime below 2^62")));
        }
        Ok(Fp::bound(value, p))
    }

    fn bound(value: i64, p: u64) -> Fp {
        Fp {
            value: value.rem_euclid(p as i64),
            modulus: p,
        }
    }

    /// The prime, or `None` for an unbound constant.
    pub fn modulus(&self) -> Option<u64> {
        (self.modulus != 0).then_some(self.modulus)
    }

    /// Canonical residue in `[0, p)`; unbound constants return their integer value.
    pub fn value(&self) -> i64 {
        self.value
    }

    fn residue(&self, p: u64) -> u64 {
        self.value.rem_euclid(p as i64) as u64
    }

    fn common_modulus(a: &Fp, b: &Fp) -> u64 {
        match (a.modulus, b.modulus) {
            (0, m) | (m, 0) => m,
            (m, n) if m == n => m,
            (m, n) => panic!("mixing elements of F{m} and F{n}"),
        }
    }

    fn legendre(&self) -> i8 {
        let p = self.modulus;
        let r = self.residue(p);
        if r == 0 {
            0
        } else if pow_mod_u64(r, (p - 1) / 2, p) == 1 {
            1
        } else {
            -1
        }
    }

    fn least_nonresidue(p: u64) -> u64 {
        (2..p)
            .find(|&n| pow_mod_u64(n, (p - 1) / 2, p) == p - 1)
            .expect("odd prime has a non-residue")
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Fp) -> bool {
        match Fp::common_modulus(self, other) {
            0 => self.value == other.value,
            p => self.residue(p) == other.residue(p),
        }
    }
}

impl Eq for Fp {}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        match Fp::common_modulus(&self, &rhs) {
            0 => Fp {
                value: self.value.checked_add(rhs.value).expect("unbound overflow"),
                modulus: 0,
            },
            p => {
                let s = (self.residue(p) as u128 + rhs.residue(p) as u128) % p as u128;
                Fp::bound(s as i64, p)
            }
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        match self.modulus {
            0 => Fp {
                value: -self.value,
                modulus: 0,
            },
            p => Fp::bound(-self.value, p),
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        match Fp::common_modulus(&self, &rhs) {
            0 => Fp {
                value: self.value.checked_mul(rhs.value).expect("unbound overflow"),
                modulus: 0,
            },
            p => Fp::bound(mul_mod_u64(self.residue(p), rhs.residue(p), p) as i64, p),
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        match Fp::common_modulus(&self, &rhs) {
            0 => {
                assert!(
                    rhs.value != 0 && self.value % rhs.value == 0,
                    "inexact division of unbound constants"
                );
                Fp {
                    value: self.value / rhs.value,
                    modulus: 0,
                }
            }
            p => {
                let bound_rhs = Fp::bound(rhs.value, p);
                self * bound_rhs.inv().expect("division by zero in F_p")
            }
        }
    }
}

impl Zero for Fp {
    fn zero() -> Fp {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        match self.modulus {
            0 => self.value == 0,
            p => self.residue(p) == 0,
        }
    }
}

impl One for Fp {
    fn one() -> Fp {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
}

impl Scalar for Fp {
    fn inv(&self) -> Option<Fp> {
        if self.is_zero() {
            return None;
        }
        match self.modulus {
            0 => match self.value {
                1 | -1 => Some(*self),
                _ => panic!("inverse of unbound constant {}", self.value),
            },
            p => Some(Fp::bound(
                pow_mod_u64(self.residue(p), p - 2, p) as i64,
                p,
            )),
        }
    }

    fn int_in(&self, n: i64) -> Fp {
        match self.modulus {
            0 => Fp { value: n, modulus: 0 },
            p => Fp::bound(n, p),
        }
    }

    fn rational_in(&self, q: &BigRational) -> Result<Fp> {
        let p = self.modulus;
        if p == 0 {
            return Err(Error::InvalidField(
                "cannot embed a rational without a modulus".into(),
            ));
        }
        let pb = BigInt::from(p);
        let n = q.numer().mod_floor(&pb).to_i64().expect("reduced");
        let d = q.denom().mod_floor(&pb).to_i64().expect("reduced");
        if d == 0 {
            return Err(Error::InvalidField(format!(
                "denominator of {q} vanishes in F{p}"
            )));
        }
        Ok(Fp::bound(n, p) / Fp::bound(d, p))
    }

    fn field_name(&self) -> Option<String> {
        self.modulus().map(|p| format!("F{p}"))
    }

    fn sign(&self) -> Result<Sign> {
        Err(Error::NoOrdering(
            self.field_name().unwrap_or_else(|| "F_p".into()),
        ))
    }

    fn is_square(&self) -> Option<bool> {
        if self.is_zero() {
            return Some(false);
        }
        if self.modulus == 0 {
            return (self.value == 1).then_some(true);
        }
        Some(self.legendre() == 1)
    }

    fn square_class(&self) -> Result<SquareClass<Fp>> {
        if self.is_zero() {
            return Err(Error::ZeroSquareClass);
        }
        let p = self.modulus;
        if p == 0 {
            return Err(Error::InvalidField("square class of unbound constant".into()));
        }
        let rep = if self.legendre() == 1 {
            1
        } else {
            Fp::least_nonresidue(p)
        };
        Ok(SquareClass::canonical(Fp::bound(rep as i64, p)))
    }

    fn finite_order(&self) -> Option<u128> {
        self.modulus().map(u128::from)
    }

    fn elements(&self) -> Option<Vec<Fp>> {
        let p = self.modulus()?;
        if p as u128 > ENUMERATION_LIMIT {
            return None;
        }
        Some((0..p as i64).map(|v| Fp::bound(v, p)).collect())
    }
}
