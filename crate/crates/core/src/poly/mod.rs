//! Dense univariate polynomials over a [`Scalar`] field.

mod partial;
mod roots;
mod series;
pub mod sturm;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Scalar;

pub use partial::{check_factorization, newton_quotients, partial_fractions, RootData, SplitData};
pub use roots::{find_roots, rational_roots, RootSearch};
pub use series::reciprocal_series;

/// Polynomial with coefficients in ascending degree order. The leading
/// coefficient is nonzero; the zero polynomial has no coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial<K> {
    coeffs: Vec<K>,
}

impl<K: PartialEq> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<K: Scalar> Polynomial<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: K) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: K, k: usize) -> Self {
        let mut coeffs = vec![c.zero_in(); k];
        coeffs.push(c);
        Polynomial::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: &K) -> Self {
        Polynomial::new(vec![-r.clone(), r.one_in()])
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> K {
        match self.coeffs.get(i) {
            Some(c) => c.clone(),
            None => self.zero_like(),
        }
    }

    fn zero_like(&self) -> K {
        match self.coeffs.first() {
            Some(c) => c.zero_in(),
            None => K::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn degree_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = self.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &K) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Divide by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.int_in(i as i64) * c.clone())
                .collect(),
        )
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = match self.coeffs.first() {
            Some(c) => Polynomial::constant(c.one_in()),
            None => return if exp == 0 { Polynomial::constant(K::one()) } else { Self::zero() },
        };
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dlead = d.leading().expect("division by zero polynomial");
        let dinv = dlead.inv().expect("nonzero leading coefficient");
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![dlead.zero_in(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone() * dinv.clone();
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k - dd + i] = rem[k - dd + i].clone() - c.clone() * dc.clone();
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// `self^exp mod m`.
    pub fn pow_mod(&self, mut exp: u128, m: &Self) -> Self {
        let one = m.leading().expect("nonzero modulus").one_in();
        let mut acc = Polynomial::constant(one).rem(m);
        let mut base = self.rem(m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (&acc * &base).rem(m);
            }
            base = (&base * &base).rem(m);
            exp >>= 1;
        }
        acc
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        xgcd(self, other).0
    }
}

impl Polynomial<crate::Rational> {
    /// The same polynomial with coefficients mapped into the field of `like`.
    pub fn embed_in<K: Scalar>(&self, like: &K) -> crate::error::Result<Polynomial<K>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| like.rational_in(c))
            .collect::<crate::error::Result<Vec<K>>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

/// Extended Euclid: returns `(d, u, v)` with `d` monic, `d = gcd(f, g) = u f + v g`.
pub fn xgcd<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>) -> (Polynomial<K>, Polynomial<K>, Polynomial<K>) {
    let one = f
        .leading()
        .or_else(|| g.leading())
        .map(|c| c.one_in())
        .unwrap_or_else(K::one);
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (Polynomial::constant(one.clone()), Polynomial::zero());
    let (mut t0, mut t1) = (Polynomial::zero(), Polynomial::constant(one));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.leading() {
        Some(lc) => {
            let inv = lc.inv().expect("nonzero");
            (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
        }
        None => (r0, s0, t0),
    }
}

/// Resultant by the Euclidean remainder recursion
/// `Res(f, g) = (-1)^{deg f deg g} lc(g)^{deg f - deg r} Res(g, r)`, `r = f mod g`.
///
/// Conventions: `Res(f, c) = c^{deg f}` for a constant `c`, in particular
/// `Res(f, 0) = 0` when `deg f > 0`.
pub fn resultant<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>) -> K {
    let like = f
        .leading()
        .or_else(|| g.leading())
        .cloned()
        .unwrap_or_else(K::one);
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut acc = like.one_in();
    loop {
        let (da, db) = match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => (da, db),
            // Res(f, 0) = 0 unless f is a nonzero constant, where c^0 = 1.
            (Some(0), None) | (None, Some(0)) => return acc,
            _ => return like.zero_in(),
        };
        if db == 0 {
            return acc * b.coeffs[0].pow(da as u64);
        }
        if da == 0 {
            return acc * a.coeffs[0].pow(db as u64);
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return like.zero_in();
        }
        let dr = r.degree().expect("nonzero");
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc = acc * b.leading().expect("nonzero").pow((da - dr) as u64);
        a = b;
        b = r;
    }
}

/// `Disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
pub fn discriminant<K: Scalar>(f: &Polynomial<K>) -> K {
    let n = f.degree().expect("discriminant of zero polynomial");
    let lc = f.leading().expect("nonzero").clone();
    let r = resultant(f, &f.derivative());
    let signed = if (n * n.saturating_sub(1) / 2) % 2 == 1 { -r } else { r };
    signed / lc
}

impl<K: Scalar> Add for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<K: Scalar> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<K: Scalar> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, rhs: &Polynomial<K>) -> Polynomial<K> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let zero = self.coeffs[0].zero_in();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<K: Scalar> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: Scalar> $tr for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $m(self, rhs: Polynomial<K>) -> Polynomial<K> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<K: Scalar> Neg for Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        -&self
    }
}

impl<K: Scalar> Polynomial<K> {
    /// Render with the given variable name, e.g. `x^2 - 1/2*x + 3`.
    /// The output is accepted back by [`crate::parse`].
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            let negative = s.starts_with('-');
            if negative {
                s.remove(0);
            }
            let compound = s.contains(['+', '-']);
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff = if compound { format!("({s})") } else { s };
            match k {
                0 => out.push_str(&coeff),
                _ => {
                    if coeff != "1" {
                        out.push_str(&coeff);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }
}

impl<K: Scalar> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}
