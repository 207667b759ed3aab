//! Exact scalar fields.
//!
//! Everything downstream is generic over [`Scalar`]. Three families implement
//! it: arbitrary-precision rationals, prime fields `F_p` and simple extensions
//! `k[t]/(m)` over either of those.
//!
//! Prime-field and extension elements carry their modulus. The context-free
//! `Zero::zero()` / `One::one()` values are "unbound" integer constants that
//! adopt the modulus of whatever they are combined with, so generic code that
//! starts from a bound element (a monic `f`, say) stays inside one field.

pub mod arith;
mod descriptor;
mod ext;
mod prime;
mod rational;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;

pub use descriptor::{AnyField, BaseField, FieldContext, FieldDescriptor, RealInterval};
pub use ext::{Ext, ExtModulus};
pub use prime::Fp;

/// Sign of an element of an ordered field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// An exact field element.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The integer `n` in the field `self` belongs to.
    fn int_in(&self, n: i64) -> Self;

    /// The rational `q` in the field `self` belongs to. Fails when the
    /// denominator vanishes in positive characteristic.
    fn rational_in(&self, q: &BigRational) -> Result<Self>;

    /// Descriptor of the field, e.g. `"Q"`, `"F7"`, `"Q[t]/(t^2-2)"`.
    /// `None` for unbound constants.
    fn field_name(&self) -> Option<String>;

    /// Sign under the field ordering, if the field has one.
    fn sign(&self) -> Result<Sign>;

    /// Whether `self` is a nonzero square; `None` when undecidable here.
    fn is_square(&self) -> Option<bool>;

    fn square_class(&self) -> Result<SquareClass<Self>>;

    /// The value as a rational, for elements of `Q` only.
    fn to_rational(&self) -> Option<BigRational> {
        None
    }

    /// Number of elements, for finite fields whose order fits in `u128`.
    fn finite_order(&self) -> Option<u128> {
        None
    }

    /// Every element of the field, when it is finite and small enough to list.
    fn elements(&self) -> Option<Vec<Self>> {
        None
    }

    fn zero_in(&self) -> Self {
        self.int_in(0)
    }

    fn one_in(&self) -> Self {
        self.int_in(1)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_in();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.square();
            exp >>= 1;
        }
        acc
    }
}

/// Upper bound on field size for which [`Scalar::elements`] enumerates.
pub const ENUMERATION_LIMIT: u128 = 1 << 16;

/// The class of a nonzero element in `k*/(k*)^2`.
///
/// Over `Q` the representative is a square-free integer; over finite fields it
/// is `1` or the least non-square. Over extensions of `Q` no canonical choice
/// is made and equality falls back to a squareness test on the quotient.
#[derive(Debug, Clone)]
pub struct SquareClass<K> {
    rep: K,
    canonical: bool,
}

impl<K: Scalar> SquareClass<K> {
    pub(crate) fn canonical(rep: K) -> Self {
        SquareClass {
            rep,
            canonical: true,
        }
    }

    pub(crate) fn raw(rep: K) -> Self {
        SquareClass {
            rep,
            canonical: false,
        }
    }

    pub fn representative(&self) -> &K {
        &self.rep
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// `Some(true)` iff the two classes coincide; `None` if that cannot be decided.
    pub fn same_class(&self, other: &Self) -> Option<bool> {
        if self.canonical && other.canonical {
            return Some(self.rep == other.rep);
        }
        if self.rep == other.rep {
            return Some(true);
        }
        (self.rep.clone() / other.rep.clone()).is_square()
    }

    pub fn times(&self, other: &Self) -> Result<Self> {
        (self.rep.clone() * other.rep.clone()).square_class()
    }

    pub fn negate(&self) -> Result<Self> {
        (-self.rep.clone()).square_class()
    }
}

impl<K: Scalar> PartialEq for SquareClass<K> {
    fn eq(&self, other: &Self) -> bool {
        self.same_class(other) == Some(true)
    }
}

impl<K: Scalar> fmt::Display for SquareClass<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Binomial coefficient `C(n, k)` computed by Pascal's rule inside the field
/// of `like`, so no integer overflow and correct reduction in characteristic p.
pub fn binomial_in<K: Scalar>(like: &K, n: usize, k: usize) -> K {
    if k > n {
        return like.zero_in();
    }
    let mut row = vec![like.one_in()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(like.one_in());
        for w in row.windows(2) {
            next.push(w[0].clone() + w[1].clone());
        }
        next.push(like.one_in());
        row = next;
    }
    row[k].clone()
}
