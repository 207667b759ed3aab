use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::arith::is_perfect_square;
use super::descriptor::RealInterval;
use super::{Scalar, Sign, SquareClass, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::poly::{find_roots, sturm, xgcd, Polynomial};

/// The defining polynomial of a simple extension `k[t]/(m)`.
#[derive(Debug)]
pub struct ExtModulus<K> {
    poly: Polynomial<K>,
    name: String,
    real_root: Option<RealInterval>,
    irreducibility_verified: bool,
    nonsquare: OnceLock<Option<Ext<K>>>,
}

impl<K: Scalar> ExtModulus<K> {
    /// Validates `m` (monic, degree >= 2) and checks irreducibility where that
    /// is cheap: always over finite fields, over `Q` up to degree 4. Above
    /// that `m` is trusted and [`ExtModulus::irreducibility_verified`] is false.
    ///
    /// `real_root` designates the real root of `m` inside an open rational
    /// interval and turns the extension into an ordered field.
    pub fn new(m: Polynomial<K>, name: impl Into<String>, real_root: Option<RealInterval>) -> Result<Arc<Self>> {
        let name = name.into();
        let degree = m
            .degree()
            .ok_or_else(|| Error::InvalidField("zero modulus".into()))?;
        if degree < 2 {
            return Err(Error::InvalidField(format!("modulus of {name} must have degree >= 2")));
        }
        if !m.is_monic() {
            return Err(Error::InvalidField(format!("modulus of {name} must be monic")));
        }
        let lead = m.leading().expect("nonzero").clone();
        let verified = if lead.finite_order().is_some() {
            if !irreducible_over_finite(&m) {
                return Err(Error::InvalidField(format!("modulus of {name} is reducible")));
            }
            true
        } else if lead.to_rational().is_some() {
            match irreducible_over_rationals(&m) {
                Some(false) => {
                    return Err(Error::InvalidField(format!("modulus of {name} is reducible")))
                }
                Some(true) => true,
                None => false,
            }
        } else {
            false
        };
        if let Some(iv) = &real_root {
            validate_interval(&m, iv, &name)?;
        }
        Ok(Arc::new(ExtModulus {
            poly: m,
            name,
            real_root,
            irreducibility_verified: verified,
            nonsquare: OnceLock::new(),
        }))
    }

    pub fn polynomial(&self) -> &Polynomial<K> {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("nonzero")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn irreducibility_verified(&self) -> bool {
        self.irreducibility_verified
    }

    pub fn real_root(&self) -> Option<&RealInterval> {
        self.real_root.as_ref()
    }

    fn base_one(&self) -> K {
        self.poly.leading().expect("nonzero").clone()
    }

    fn order(&self) -> Option<u128> {
        let q = self.base_one().finite_order()?;
        q.checked_pow(self.degree() as u32)
    }
}

/// Rabin's test over a finite base field of order q:
/// `t^{q^d} = t mod m` and `gcd(t^{q^{d/l}} - t, m) = 1` for primes `l | d`.
fn irreducible_over_finite<K: Scalar>(m: &Polynomial<K>) -> bool {
    let one = m.leading().expect("nonzero").one_in();
    let q = one.finite_order().expect("finite");
    let d = m.degree().expect("nonzero");
    let t = Polynomial::monomial(one.clone(), 1);
    let frob = |k: usize| {
        let mut p = t.clone();
        for _ in 0..k {
            p = p.pow_mod(q, m);
        }
        p
    };
    if frob(d) != t.rem(m) {
        return false;
    }
    let mut n = d;
    let mut l = 2;
    while n > 1 {
        if n.is_multiple_of(l) {
            while n.is_multiple_of(l) {
                n /= l;
            }
            let h = &frob(d / l) - &t;
            if xgcd(&h, m).0.degree() != Some(0) {
                return false;
            }
        }
        l += 1;
    }
    true
}

/// `Some(verdict)` up to degree 4, `None` beyond.
fn irreducible_over_rationals<K: Scalar>(m: &Polynomial<K>) -> Option<bool> {
    let d = m.degree().expect("nonzero");
    let roots = find_roots(m)?;
    if !roots.roots.is_empty() {
        return Some(false);
    }
    match d {
        2 | 3 => Some(true),
        4 => {
            let coeffs: Vec<BigRational> = m
                .coeffs()
                .iter()
                .map(|c| c.to_rational().expect("rational"))
                .collect();
            Some(!has_quadratic_factor(&coeffs))
        }
        _ => None,
    }
}

/// Quartic monic `m` over `Q`: search for a factorization into monic integer
/// quadratics after scaling to an integral monic polynomial (Gauss's lemma).
fn has_quadratic_factor(m: &[BigRational]) -> bool {
    // m(x) monic; with D the lcm of denominators, D^4 m(x/D) is monic integral.
    let den = m.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut c = Vec::with_capacity(5);
    let mut scale = BigInt::one();
    for k in (0..=4).rev() {
        // coefficient of x^k becomes m_k * D^{4-k}
        let v = &m[k] * BigRational::from_integer(scale.clone());
        c.push(v.to_integer());
        scale *= &den;
    }
    c.reverse();
    let (a0, a1, a2, a3) = (c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone());
    // (x^2 + a x + b)(x^2 + p x + e): b e = a0, a + p = a3, a p + b + e = a2, a e + p b = a1
    if a0.is_zero() {
        return true;
    }
    for bu in super::arith::divisors(a0.magnitude()) {
        for b in [BigInt::from(bu.clone()), -BigInt::from(bu)] {
            let e = &a0 / &b;
            if b != e {
                // a e + (a3 - a) b = a1  =>  a (e - b) = a1 - a3 b
                let num = &a1 - &a3 * &b;
                let den2 = &e - &b;
                if !(&num % &den2).is_zero() {
                    continue;
                }
                let a = &num / &den2;
                let p = &a3 - &a;
                if &a * &p + &b + &e == a2 {
                    return true;
                }
            } else {
                // b = e: need a1 = b a3 and a p = a2 - 2b with a + p = a3.
                if a1 != &b * &a3 {
                    continue;
                }
                let prod = &a2 - &b * 2;
                let disc = &a3 * &a3 - &prod * 4;
                if is_perfect_square(&disc) {
                    let r: BigInt = disc.sqrt();
                    if (&a3 + &r).is_even() {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn validate_interval<K: Scalar>(m: &Polynomial<K>, iv: &RealInterval, name: &str) -> Result<()> {
    let like = m.leading().expect("nonzero");
    if like.to_rational().is_none() {
        return Err(Error::InvalidField(format!(
            "{name}: a real embedding needs a base field of rationals"
        )));
    }
    let lo = like.rational_in(&iv.lo)?;
    let hi = like.rational_in(&iv.hi)?;
    if iv.lo >= iv.hi || m.eval(&lo).is_zero() || m.eval(&hi).is_zero() {
        return Err(Error::InvalidField(format!("{name}: bad isolating interval")));
    }
    if sturm::count_roots_between(m, &lo, &hi)? != 1 {
        return Err(Error::InvalidField(format!(
            "{name}: interval ({}, {}) does not isolate exactly one root",
            iv.lo, iv.hi
        )));
    }
    Ok(())
}

/// Element of `k[t]/(m)`, stored as a polynomial in `t` of degree `< deg m`.
///
/// Without a modulus the value is an unbound constant from the base field.
#[derive(Clone, Debug)]
pub struct Ext<K> {
    coeffs: Vec<K>,
    modulus: Option<Arc<ExtModulus<K>>>,
}

impl<K: Scalar> Ext<K> {
    pub fn from_coeffs(coeffs: Vec<K>, modulus: &Arc<ExtModulus<K>>) -> Self {
        let poly = Polynomial::new(coeffs).rem(&modulus.poly);
        Ext {
            coeffs: poly.into_coeffs(),
            modulus: Some(modulus.clone()),
        }
    }

    pub fn from_base(c: K, modulus: &Arc<ExtModulus<K>>) -> Self {
        Ext::from_coeffs(vec![c], modulus)
    }

    /// The class of `t`.
    pub fn generator(modulus: &Arc<ExtModulus<K>>) -> Self {
        let one = modulus.base_one();
        Ext::from_coeffs(vec![one.zero_in(), one], modulus)
    }

    /// Coefficients in the power basis `1, t, t^2, ...` (trailing zeros trimmed).
    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn modulus(&self) -> Option<&Arc<ExtModulus<K>>> {
        self.modulus.as_ref()
    }

    fn as_poly(&self) -> Polynomial<K> {
        Polynomial::new(self.coeffs.clone())
    }

    fn combine(a: &Self, b: &Self) -> Option<Arc<ExtModulus<K>>> {
        match (&a.modulus, &b.modulus) {
            (Some(m), Some(n)) => {
                assert!(
                    Arc::ptr_eq(m, n) || m.name == n.name,
                    "mixing elements of {} and {}",
                    m.name,
                    n.name
                );
                Some(m.clone())
            }
            (Some(m), None) | (None, Some(m)) => Some(m.clone()),
            (None, None) => None,
        }
    }

    fn build(poly: Polynomial<K>, modulus: Option<Arc<ExtModulus<K>>>) -> Self {
        match modulus {
            Some(m) => Ext {
                coeffs: poly.rem(&m.poly).into_coeffs(),
                modulus: Some(m),
            },
            None => Ext {
                coeffs: poly.into_coeffs(),
                modulus: None,
            },
        }
    }

    fn base_like(&self) -> K {
        match &self.modulus {
            Some(m) => m.base_one(),
            None => self.coeffs.first().cloned().unwrap_or_else(K::one),
        }
    }

    /// Only the constant coefficient is nonzero.
    pub fn as_base(&self) -> Option<K> {
        match self.coeffs.len() {
            0 => Some(self.base_like().zero_in()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// For `m = t^2 + c1 t + c0` over `Q`, the conjugate `t -> -c1 - t`.
    pub fn quadratic_conjugate(&self) -> Option<Self> {
        let m = self.modulus.as_ref()?;
        if m.degree() != 2 {
            return None;
        }
        let c1 = m.poly.coeff(1);
        let image_of_t = Polynomial::new(vec![-c1, -m.base_one()]);
        Some(Ext::build(self.as_poly().compose(&image_of_t), Some(m.clone())))
    }

    fn ensure_bound(&self) -> Result<&Arc<ExtModulus<K>>> {
        self.modulus
            .as_ref()
            .ok_or_else(|| Error::InvalidField("unbound extension constant".into()))
    }

    fn sign_via_embedding(&self) -> Result<Sign> {
        let m = self.ensure_bound()?;
        let iv = m
            .real_root
            .as_ref()
            .ok_or_else(|| Error::NoOrdering(m.name.clone()))?;
        let to_q = |c: &K| {
            c.to_rational()
                .ok_or_else(|| Error::NoOrdering(m.name.clone()))
        };
        let a: Vec<BigRational> = self.coeffs.iter().map(to_q).collect::<Result<_>>()?;
        if a.iter().all(Zero::is_zero) {
            return Ok(Sign::Zero);
        }
        let mq: Vec<BigRational> = m.poly.coeffs().iter().map(to_q).collect::<Result<_>>()?;
        Ok(iv.sign_of(&a, &mq))
    }

    fn first_nonsquare(m: &Arc<ExtModulus<K>>) -> Option<Ext<K>> {
        let one = m.base_one();
        let p = one.finite_order()? as u64;
        let d = m.degree();
        let mut n: u64 = 1;
        loop {
            let mut digits = Vec::with_capacity(d);
            let mut k = n;
            for _ in 0..d {
                digits.push(one.int_in((k % p) as i64));
                k /= p;
            }
            let e = Ext::from_coeffs(digits, m);
            if e.is_square() == Some(false) {
                return Some(e);
            }
            n += 1;
        }
    }
}

/// Squareness of `x + y sqrt(D)` in `Q(sqrt(D))`, `D` a non-square.
fn quadratic_is_square(x: &BigRational, y: &BigRational, disc: &BigRational) -> bool {
    let q_square = |v: &BigRational| !v.is_negative() && is_perfect_square(v.numer()) && is_perfect_square(v.denom());
    let q_sqrt = |v: &BigRational| BigRational::new(v.numer().sqrt(), v.denom().sqrt());
    if y.is_zero() {
        return q_square(x) || q_square(&(x / disc));
    }
    let norm = x * x - disc * y * y;
    if !q_square(&norm) {
        return false;
    }
    let n = q_sqrt(&norm);
    let two = BigRational::from_integer(2.into());
    for cand in [(x + &n) / &two, (x - &n) / &two] {
        if cand.is_zero() || !q_square(&cand) {
            continue;
        }
        let u = q_sqrt(&cand);
        let v = y / (&two * &u);
        if &u * &u + disc * &v * &v == *x {
            return true;
        }
    }
    false
}

impl<K: Scalar> PartialEq for Ext<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<K: Scalar> fmt::Display for Ext<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.to_string();
            let negative = s.starts_with('-');
            if negative {
                s.remove(0);
            }
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let power = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            match (k, s.as_str()) {
                (0, _) => out.push_str(&s),
                (_, "1") => out.push_str(&power),
                _ => out.push_str(&format!("{s}*{power}")),
            }
        }
        f.write_str(&out)
    }
}

impl<K: Scalar> Add for Ext<K> {
    type Output = Ext<K>;
    fn add(self, rhs: Ext<K>) -> Ext<K> {
        let m = Ext::combine(&self, &rhs);
        Ext::build(&self.as_poly() + &rhs.as_poly(), m)
    }
}

impl<K: Scalar> Sub for Ext<K> {
    type Output = Ext<K>;
    fn sub(self, rhs: Ext<K>) -> Ext<K> {
        let m = Ext::combine(&self, &rhs);
        Ext::build(&self.as_poly() - &rhs.as_poly(), m)
    }
}

impl<K: Scalar> Neg for Ext<K> {
    type Output = Ext<K>;
    fn neg(self) -> Ext<K> {
        Ext {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            modulus: self.modulus,
        }
    }
}

impl<K: Scalar> Mul for Ext<K> {
    type Output = Ext<K>;
    fn mul(self, rhs: Ext<K>) -> Ext<K> {
        let m = Ext::combine(&self, &rhs);
        Ext::build(&self.as_poly() * &rhs.as_poly(), m)
    }
}

impl<K: Scalar> Div for Ext<K> {
    type Output = Ext<K>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Ext<K>) -> Ext<K> {
        let m = Ext::combine(&self, &rhs);
        let rhs = Ext::build(rhs.as_poly(), m);
        self * rhs.inv().expect("division by zero in extension field")
    }
}

impl<K: Scalar> Zero for Ext<K> {
    fn zero() -> Self {
        Ext {
            coeffs: Vec::new(),
            modulus: None,
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<K: Scalar> One for Ext<K> {
    fn one() -> Self {
        Ext {
            coeffs: vec![K::one()],
            modulus: None,
        }
    }
}

impl<K: Scalar> Scalar for Ext<K> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.modulus {
            None => Some(Ext {
                coeffs: vec![self.coeffs[0].inv()?],
                modulus: None,
            }),
            Some(m) => {
                let (d, u, _) = xgcd(&self.as_poly(), &m.poly);
                assert_eq!(d.degree(), Some(0), "modulus {} is reducible", m.name);
                Some(Ext::build(u, Some(m.clone())))
            }
        }
    }

    fn int_in(&self, n: i64) -> Self {
        let c = self.base_like().int_in(n);
        Ext::build(Polynomial::new(vec![c]), self.modulus.clone())
    }

    fn rational_in(&self, q: &BigRational) -> Result<Self> {
        let c = self.base_like().rational_in(q)?;
        Ok(Ext::build(Polynomial::new(vec![c]), self.modulus.clone()))
    }

    fn field_name(&self) -> Option<String> {
        self.modulus.as_ref().map(|m| m.name.clone())
    }

    fn sign(&self) -> Result<Sign> {
        self.sign_via_embedding()
    }

    fn is_square(&self) -> Option<bool> {
        if self.is_zero() {
            return Some(false);
        }
        let Some(m) = &self.modulus else {
            return self.coeffs[0].is_square();
        };
        if let Some(q) = m.order() {
            let e = (q - 1) / 2;
            let mut acc = self.one_in();
            let mut base = self.clone();
            let mut k = e;
            while k > 0 {
                if k & 1 == 1 {
                    acc = acc * base.clone();
                }
                base = base.square();
                k >>= 1;
            }
            return Some(acc.is_one());
        }
        if m.degree() == 2 {
            let to_q = |c: K| c.to_rational();
            let c1 = to_q(m.poly.coeff(1))?;
            let c0 = to_q(m.poly.coeff(0))?;
            let u = to_q(self.coeffs.first().cloned().unwrap_or_else(K::zero))?;
            let v = to_q(self.coeffs.get(1).cloned().unwrap_or_else(K::zero))?;
            // t = (-c1 + sqrt(D))/2 with D = c1^2 - 4 c0.
            let two = BigRational::from_integer(2.into());
            let disc = &c1 * &c1 - BigRational::from_integer(4.into()) * &c0;
            let x = &u - &v * &c1 / &two;
            let y = &v / &two;
            return Some(quadratic_is_square(&x, &y, &disc));
        }
        None
    }

    fn square_class(&self) -> Result<SquareClass<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroSquareClass);
        }
        let m = self.ensure_bound()?;
        if m.order().is_some() {
            if self.is_square() == Some(true) {
                return Ok(SquareClass::canonical(self.one_in()));
            }
            let ns = m
                .nonsquare
                .get_or_init(|| Ext::first_nonsquare(m))
                .clone()
                .expect("finite field has a non-square");
            return Ok(SquareClass::canonical(ns));
        }
        Ok(SquareClass::raw(self.clone()))
    }

    fn finite_order(&self) -> Option<u128> {
        self.modulus.as_ref()?.order()
    }

    fn elements(&self) -> Option<Vec<Self>> {
        let m = self.modulus.as_ref()?;
        let q = m.order()?;
        if q > ENUMERATION_LIMIT {
            return None;
        }
        let base = m.base_one().elements()?;
        let d = m.degree();
        let p = base.len();
        Some(
            (0..q as usize)
                .map(|mut n| {
                    let mut digits = Vec::with_capacity(d);
                    for _ in 0..d {
                        digits.push(base[n % p].clone());
                        n /= p;
                    }
                    Ext::from_coeffs(digits, m)
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qsqrt2() -> Arc<ExtModulus<Rational>> {
        ExtModulus::new(
            Polynomial::new(vec![q(-2), q(0), q(1)]),
            "Q[t]/(t^2-2)",
            Some(RealInterval::new(q(1), q(2))),
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_in_q_sqrt2() {
        let m = qsqrt2();
        let t = Ext::generator(&m);
        assert_eq!(t.clone() * t.clone(), Ext::from_base(q(2), &m));
        let a = Ext::from_coeffs(vec![q(1), q(1)], &m);
        let inv = a.inv().unwrap();
        // 1/(1 + t) = -1 + t
        assert_eq!(inv, Ext::from_coeffs(vec![q(-1), q(1)], &m));
        assert_eq!(a.to_string(), "1+t");
        assert_eq!((-a).to_string(), "-1-t");
    }

    #[test]
    fn ordering_via_isolating_interval() {
        let m = qsqrt2();
        let t = Ext::generator(&m);
        assert_eq!(t.sign().unwrap(), Sign::Positive);
        // 1 - t < 0, 3/2 - t > 0 (sqrt 2 = 1.414...)
        let one = Ext::from_base(q(1), &m);
        assert_eq!((one.clone() - t.clone()).sign().unwrap(), Sign::Negative);
        let c = Ext::from_base(Rational::new(3.into(), 2.into()), &m);
        assert_eq!((c - t.clone()).sign().unwrap(), Sign::Positive);
        // 99/70 > sqrt 2 > 140/99
        let hi = Ext::from_base(Rational::new(99.into(), 70.into()), &m);
        let lo = Ext::from_base(Rational::new(140.into(), 99.into()), &m);
        assert_eq!((hi - t.clone()).sign().unwrap(), Sign::Positive);
        assert_eq!((lo - t).sign().unwrap(), Sign::Negative);
    }

    #[test]
    fn no_ordering_without_interval() {
        let m = ExtModulus::new(Polynomial::new(vec![q(1), q(0), q(1)]), "Q[t]/(t^2+1)", None).unwrap();
        assert!(Ext::generator(&m).sign().is_err());
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(ExtModulus::new(Polynomial::new(vec![q(-4), q(0), q(1)]), "bad", None).is_err());
        // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2) has no rational roots.
        assert!(ExtModulus::new(Polynomial::new(vec![q(4), q(0), q(0), q(0), q(1)]), "bad", None).is_err());
        assert!(ExtModulus::new(Polynomial::new(vec![q(2), q(0), q(0), q(0), q(1)]), "ok", None).is_ok());
        let f = |v| Fp::new(v, 5).unwrap();
        // t^2 + 1 splits over F5, t^2 + 2 does not.
        assert!(ExtModulus::new(Polynomial::new(vec![f(1), f(0), f(1)]), "bad", None).is_err());
        assert!(ExtModulus::new(Polynomial::new(vec![f(2), f(0), f(1)]), "F5[t]/(t^2+2)", None).is_ok());
    }

    #[test]
    fn quadratic_squares() {
        let m = qsqrt2();
        let t = Ext::generator(&m);
        // (1 + t)^2 = 3 + 2t
        let sq = Ext::from_coeffs(vec![q(3), q(2)], &m);
        assert_eq!(sq.is_square(), Some(true));
        assert_eq!(t.is_square(), Some(false));
        assert_eq!(Ext::from_base(q(2), &m).is_square(), Some(true));
        assert_eq!(Ext::from_base(q(8), &m).is_square(), Some(true));
        assert_eq!(Ext::from_base(q(3), &m).is_square(), Some(false));
        assert_eq!(Ext::from_base(q(-1), &m).is_square(), Some(false));
    }

    #[test]
    fn finite_extension_square_classes() {
        let f = |v| Fp::new(v, 5).unwrap();
        let m = ExtModulus::new(Polynomial::new(vec![f(2), f(0), f(1)]), "F5[t]/(t^2+2)", None).unwrap();
        let all = Ext::from_base(f(1), &m).elements().unwrap();
        assert_eq!(all.len(), 25);
        let squares = all.iter().filter(|e| e.is_square() == Some(true)).count();
        assert_eq!(squares, 12);
        // Every element of F5 is a square in F25.
        for v in 1..5 {
            assert_eq!(Ext::from_base(f(v), &m).is_square(), Some(true));
        }
        let t = Ext::generator(&m);
        let c1 = t.square_class().unwrap();
        let c2 = (t.clone() * Ext::from_base(f(3), &m)).square_class().unwrap();
        assert_eq!(c1.representative(), c2.representative());
    }
}
