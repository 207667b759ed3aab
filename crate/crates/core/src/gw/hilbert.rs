//! Hilbert symbols and Hasse invariants over `Q`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::field::arith::{legendre, prime_divisors};

/// A place of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(BigUint),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

/// Splits `a = p^v * u` with `p` not dividing `u`.
fn split_valuation(a: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut u = a.clone();
    let mut v = 0;
    while (&u % p).is_zero() {
        u /= p;
        v += 1;
    }
    (v, u)
}

fn mod_small(a: &BigInt, m: u32) -> u32 {
    a.mod_floor(&BigInt::from(m)).to_u32().expect("small")
}

/// `(a, b)_v` for nonzero integers `a`, `b`.
pub fn hilbert_symbol(a: &BigInt, b: &BigInt, place: &Place) -> i8 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    match place {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) => {
            let pi = BigInt::from(p.clone());
            let (alpha, u) = split_valuation(a, &pi);
            let (beta, v) = split_valuation(b, &pi);
            if p == &BigUint::from(2u32) {
                let eps = |x: &BigInt| (mod_small(x, 4) - 1) / 2;
                let omega = |x: &BigInt| {
                    let r = mod_small(x, 8);
                    (r * r - 1) / 8 % 2
                };
                let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
                if e % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                let eps_p = (mod_small(&pi, 4) - 1) / 2;
                let mut s: i8 = if (alpha * beta * eps_p).is_multiple_of(2) { 1 } else { -1 };
                if beta % 2 == 1 {
                    s *= legendre(&u, p);
                }
                if alpha % 2 == 1 {
                    s *= legendre(&v, p);
                }
                s
            }
        }
    }
}

/// Places where the Hasse invariant of a diagonal form with these integer
/// entries can be nontrivial: 2, infinity and every prime dividing an entry.
pub fn relevant_places(entries: &[BigInt]) -> BTreeSet<Place> {
    let mut places = BTreeSet::new();
    places.insert(Place::Prime(BigUint::from(2u32)));
    places.insert(Place::Infinity);
    for e in entries {
        for p in prime_divisors(e) {
            places.insert(Place::Prime(p));
        }
    }
    places
}

/// Hasse invariant `prod_{i<j} (a_i, a_j)_v`.
pub fn hasse_invariant(entries: &[BigInt], place: &Place) -> i8 {
    let mut s = 1;
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            s *= hilbert_symbol(&entries[i], &entries[j], place);
        }
    }
    s
}

/// Product formula check: `prod_v (a, b)_v = 1`.
pub fn product_formula_holds(a: &BigInt, b: &BigInt) -> bool {
    let places = relevant_places(&[a.clone(), b.clone()]);
    places.iter().map(|v| hilbert_symbol(a, b, v) as i32).product::<i32>() == 1
}
