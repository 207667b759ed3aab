use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Polynomial;
use crate::field::arith::divisors;
use crate::field::Scalar;
use crate::Rational;

/// Roots found in the working field, with multiplicities, and the cofactor
/// left after dividing them out: `f = remainder * prod (x - r)^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSearch<K> {
    pub roots: Vec<(K, usize)>,
    pub remainder: Polynomial<K>,
}

impl<K: Scalar> RootSearch<K> {
    /// True when `f` is a product of linear factors over the field.
    pub fn splits(&self) -> bool {
        self.remainder.degree() == Some(0)
    }
}

fn deflate<K: Scalar>(f: &mut Polynomial<K>, r: &K) -> usize {
    let lin = Polynomial::linear_root(r);
    let mut m = 0;
    while f.degree().is_some_and(|d| d > 0) && f.eval(r).is_zero() {
        *f = f.exact_div(&lin).expect("root divides");
        m += 1;
    }
    m
}

/// All rational roots of `f` with exact multiplicities, by the rational-root
/// test on the integer-normalized polynomial followed by deflation.
pub fn rational_roots(f: &Polynomial<Rational>) -> RootSearch<Rational> {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    let mut rest = f.clone();
    let mut roots = Vec::new();
    let zero = Rational::zero();
    let m0 = deflate(&mut rest, &zero);
    if m0 > 0 {
        roots.push((zero, m0));
    }
    if rest.degree().unwrap_or(0) > 0 {
        let lcm = rest
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = rest
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let c0 = ints[0].abs();
        let cn = ints.last().expect("nonzero").abs();
        let ps = divisors(c0.magnitude());
        let qs = divisors(cn.magnitude());
        let mut candidates = BTreeSet::new();
        for p in &ps {
            for q in &qs {
                let r = Rational::new(BigInt::from(p.clone()), BigInt::from(q.clone()));
                candidates.insert(r.clone());
                candidates.insert(-r);
            }
        }
        for r in candidates {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let m = deflate(&mut rest, &r);
            if m > 0 {
                roots.push((r, m));
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    RootSearch {
        roots,
        remainder: rest,
    }
}

/// Roots of `f` in its coefficient field, where the field supports a search:
/// rationals via the rational-root test, small finite fields by enumeration.
/// `None` when no search is available (e.g. extensions of `Q`).
pub fn find_roots<K: Scalar>(f: &Polynomial<K>) -> Option<RootSearch<K>> {
    let lead = f.leading()?;
    if lead.to_rational().is_some() {
        let fq = Polynomial::new(
            f.coeffs()
                .iter()
                .map(|c| c.to_rational().expect("rational field"))
                .collect(),
        );
        let found = rational_roots(&fq);
        let back = |q: &Rational| lead.rational_in(q).expect("rational field");
        return Some(RootSearch {
            roots: found.roots.iter().map(|(r, m)| (back(r), *m)).collect(),
            remainder: Polynomial::new(found.remainder.coeffs().iter().map(back).collect()),
        });
    }
    let elements = lead.elements()?;
    let mut rest = f.clone();
    let mut roots = Vec::new();
    for r in elements {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        let m = deflate(&mut rest, &r);
        if m > 0 {
            roots.push((r, m));
        }
    }
    Some(RootSearch {
        roots,
        remainder: rest,
    })
}
