use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::arith::{is_perfect_square, squarefree_part};
use super::{Scalar, Sign, SquareClass};
use crate::error::{Error, Result};

impl Scalar for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn int_in(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn rational_in(&self, q: &BigRational) -> Result<Self> {
        Ok(q.clone())
    }

    fn field_name(&self) -> Option<String> {
        Some("Q".to_string())
    }

    fn sign(&self) -> Result<Sign> {
        Ok(if self.is_zero() {
            Sign::Zero
        } else if self.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        })
    }

    fn is_square(&self) -> Option<bool> {
        if self.is_zero() {
            return Some(false);
        }
        // BigRational is kept in lowest terms with positive denominator.
        Some(is_perfect_square(self.numer()) && is_perfect_square(self.denom()))
    }

    fn square_class(&self) -> Result<SquareClass<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroSquareClass);
        }
        let n = self.numer() * self.denom();
        Ok(SquareClass::canonical(BigRational::from_integer(
            squarefree_part(&n),
        )))
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn one_in(&self) -> Self {
        BigRational::one()
    }
}
