//! Pointed rational functions `F = f/g`: `f` monic, `gcd(f, g) = 1`,
//! `deg f > deg g`, so `F(infinity) = infinity`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{find_roots, partial_fractions, reciprocal_series, Polynomial, SplitData};

#[derive(Clone, Debug, PartialEq)]
pub struct PointedRationalFunction<K> {
    f: Polynomial<K>,
    g: Polynomial<K>,
}

impl<K: Scalar> PointedRationalFunction<K> {
    /// Cancels the common factor of `f_raw` and `g_raw` and rescales both by
    /// the same unit so that the denominator polynomial `f` is monic.
    pub fn normalize(f_raw: &Polynomial<K>, g_raw: &Polynomial<K>) -> Result<Self> {
        if g_raw.is_zero() {
            return Err(Error::ConstantMap);
        }
        if f_raw.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = f_raw.gcd(g_raw);
        let f = f_raw.exact_div(&d).expect("gcd divides");
        let g = g_raw.exact_div(&d).expect("gcd divides");
        let (df, dg) = (f.degree().expect("nonzero"), g.degree().expect("nonzero"));
        if df == 0 && dg == 0 {
            return Err(Error::ConstantMap);
        }
        if df <= dg {
            return Err(Error::NotPointed(format!(
                "deg f = {df} <= deg g = {dg} after cancelling common factors"
            )));
        }
        let u = f.leading().expect("nonzero").inv().expect("nonzero");
        Ok(PointedRationalFunction {
            f: f.scale(&u),
            g: g.scale(&u),
        })
    }

    pub fn f(&self) -> &Polynomial<K> {
        &self.f
    }

    pub fn g(&self) -> &Polynomial<K> {
        &self.g
    }

    /// `mu = deg f`, the size of every matrix attached to the map.
    pub fn mu(&self) -> usize {
        self.f.degree().expect("f nonzero")
    }

    /// The field's one, bound to the working field (f is monic).
    pub fn one(&self) -> K {
        self.f.leading().expect("f nonzero").clone()
    }

    pub fn zero(&self) -> K {
        self.one().zero_in()
    }

    /// `F o G`, renormalized. With `G = p/q` this is
    /// `sum f_k p^k q^(mu-k) / sum g_k p^k q^(mu-k)`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let mu = self.mu();
        let (p, q) = (&inner.f, &inner.g);
        let homogenize = |h: &Polynomial<K>| {
            let mut acc = Polynomial::zero();
            for (k, c) in h.coeffs().iter().enumerate() {
                let term = &p.pow(k) * &q.pow(mu - k);
                acc = &acc + &term.scale(c);
            }
            acc
        };
        let composed = Self::normalize(&homogenize(&self.f), &homogenize(&self.g));
        assert!(
            !matches!(composed, Err(Error::NotPointed(_))),
            "composition of pointed maps is pointed"
        );
        composed
    }

    /// `s_1, ..., s_count` with `g/f = sum_b s_b x^(-b)`.
    pub fn reciprocal_series(&self, count: usize) -> Vec<K> {
        reciprocal_series(&self.f, &self.g, count)
    }

    /// Partial-fraction data for the given factorization of `f`.
    pub fn split_data(&self, roots: &[(K, usize)]) -> Result<SplitData<K>> {
        partial_fractions(&self.f, &self.g, roots)
    }

    /// Split data from the roots found in the working field, when `f` splits there.
    pub fn find_split_data(&self) -> Option<SplitData<K>> {
        let search = find_roots(&self.f)?;
        if !search.splits() {
            return None;
        }
        Some(self.split_data(&search.roots).expect("found roots factor f"))
    }
}

impl<K: Scalar> fmt::Display for PointedRationalFunction<K> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "({}) / ({})", self.f, self.g)
    }
}
