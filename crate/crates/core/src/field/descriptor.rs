//! Field descriptors: `"Q"`, `"F7"`, `"Q[t]/(t^2-2)"`, `"F5[t]/(t^2+2)"`.
//!
//! An extension of `Q` may carry a real embedding, written as an isolating
//! interval for the chosen root of the modulus: `"Q[t]/(t^2-2)@[1,2]"`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Ext, ExtModulus, Fp, Scalar, Sign};
use crate::error::{Error, Result};
use crate::parse::parse_polynomial_in;
use crate::poly::Polynomial;
use crate::Rational;

/// Open rational interval containing exactly one real root of a modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

fn horner_interval(a: &[BigRational], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut acc = (BigRational::zero(), BigRational::zero());
    for c in a.iter().rev() {
        let products = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
        let min = products.iter().min().expect("four").clone();
        let max = products.iter().max().expect("four").clone();
        acc = (min + c, max + c);
    }
    acc
}

fn eval_q(a: &[BigRational], x: &BigRational) -> BigRational {
    a.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sign_q(v: &BigRational) -> Sign {
    if v.is_zero() {
        Sign::Zero
    } else if v.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

impl RealInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        RealInterval { lo, hi }
    }

    /// Sign of `a(theta)`, theta the unique root of `m` in the interval,
    /// found by bisecting until interval evaluation of `a` excludes zero.
    pub(crate) fn sign_of(&self, a: &[BigRational], m: &[BigRational]) -> Sign {
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let lo_sign = sign_q(&eval_q(m, &lo));
        let two = BigRational::from_integer(2.into());
        for _ in 0..20_000 {
            let (vmin, vmax) = horner_interval(a, &lo, &hi);
            if vmin.is_positive() {
                return Sign::Positive;
            }
            if vmax.is_negative() {
                return Sign::Negative;
            }
            let mid = (&lo + &hi) / &two;
            match sign_q(&eval_q(m, &mid)) {
                Sign::Zero => return sign_q(&eval_q(a, &mid)),
                s if s == lo_sign => lo = mid,
                _ => hi = mid,
            }
        }
        panic!("sign refinement did not converge; is the modulus irreducible?");
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseField {
    Rational,
    Prime(u64),
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rational => f.write_str("Q"),
            BaseField::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FieldDescriptor {
    Base(BaseField),
    Extension {
        base: BaseField,
        /// Modulus in the variable `t`, as rational coefficients (ascending).
        modulus: Polynomial<Rational>,
        /// The modulus as written, whitespace removed.
        modulus_text: String,
        real_root: Option<RealInterval>,
    },
}

/// A field with a bound `one`, ready for embedding literals.
#[derive(Clone, Debug)]
pub struct FieldContext<K> {
    pub one: K,
    /// The class of `t` in an extension.
    pub generator: Option<K>,
    pub name: String,
    pub warnings: Vec<String>,
}

impl<K: Scalar> FieldContext<K> {
    pub fn embed(&self, q: &BigRational) -> Result<K> {
        self.one.rational_in(q)
    }

    pub fn int(&self, n: i64) -> K {
        self.one.int_in(n)
    }

    pub fn is_ordered(&self) -> bool {
        self.one.sign().is_ok()
    }
}

/// A concrete field chosen at run time.
#[derive(Clone, Debug)]
pub enum AnyField {
    Rational(FieldContext<Rational>),
    Prime(FieldContext<Fp>),
    RationalExt(FieldContext<Ext<Rational>>),
    PrimeExt(FieldContext<Ext<Fp>>),
}

fn parse_base(s: &str) -> Result<BaseField> {
    if s == "Q" {
        return Ok(BaseField::Rational);
    }
    if let Some(p) = s.strip_prefix('F') {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime field '{s}'")))?;
        Fp::new(0, p)?;
        return Ok(BaseField::Prime(p));
    }
    Err(Error::InvalidField(format!("unknown field '{s}'")))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidField(format!("bad rational '{s}'"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FieldDescriptor {
    pub fn parse(text: &str) -> Result<FieldDescriptor> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (field_part, interval) = match compact.split_once('@') {
            Some((f, iv)) => (f.to_string(), Some(iv.to_string())),
            None => (compact.clone(), None),
        };
        let Some((base, rest)) = field_part.split_once("[t]/") else {
            if interval.is_some() {
                return Err(Error::InvalidField("real embeddings apply to extensions only".into()));
            }
            return Ok(FieldDescriptor::Base(parse_base(&field_part)?));
        };
        let base = parse_base(base)?;
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidField(format!("expected '(modulus)' in '{text}'")))?;
        let modulus = parse_polynomial_in(inner, "t")?;
        let real_root = match interval {
            None => None,
            Some(iv) => {
                if base != BaseField::Rational {
                    return Err(Error::InvalidField("finite fields have no ordering".into()));
                }
                let body = iv
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| Error::InvalidField(format!("bad interval '{iv}'")))?;
                let (lo, hi) = body
                    .split_once(',')
                    .ok_or_else(|| Error::InvalidField(format!("bad interval '{iv}'")))?;
                Some(RealInterval::new(parse_rational(lo)?, parse_rational(hi)?))
            }
        };
        Ok(FieldDescriptor::Extension {
            base,
            modulus,
            modulus_text: inner.to_string(),
            real_root,
        })
    }

    pub fn name(&self) -> String {
        match self {
            FieldDescriptor::Base(b) => b.to_string(),
            FieldDescriptor::Extension {
                base,
                modulus_text,
                real_root,
                ..
            } => {
                let mut s = format!("{base}[t]/({modulus_text})");
                if let Some(iv) = real_root {
                    s.push_str(&format!("@[{},{}]", iv.lo, iv.hi));
                }
                s
            }
        }
    }

    pub fn build(&self) -> Result<AnyField> {
        let name = self.name();
        match self {
            FieldDescriptor::Base(BaseField::Rational) => Ok(AnyField::Rational(FieldContext {
                one: Rational::one(),
                generator: None,
                name,
                warnings: Vec::new(),
            })),
            FieldDescriptor::Base(BaseField::Prime(p)) => Ok(AnyField::Prime(FieldContext {
                one: Fp::new(1, *p)?,
                generator: None,
                name,
                warnings: Vec::new(),
            })),
            FieldDescriptor::Extension {
                base,
                modulus,
                real_root,
                ..
            } => match base {
                BaseField::Rational => Ok(AnyField::RationalExt(extension_context(
                    &Rational::one(),
                    modulus,
                    name,
                    real_root.clone(),
                )?)),
                BaseField::Prime(p) => Ok(AnyField::PrimeExt(extension_context(
                    &Fp::new(1, *p)?,
                    modulus,
                    name,
                    None,
                )?)),
            },
        }
    }
}

fn extension_context<K: Scalar>(
    one: &K,
    modulus: &Polynomial<Rational>,
    name: String,
    real_root: Option<RealInterval>,
) -> Result<FieldContext<Ext<K>>> {
    let coeffs = modulus
        .coeffs()
        .iter()
        .map(|c| one.rational_in(c))
        .collect::<Result<Vec<K>>>()?;
    let m = ExtModulus::new(Polynomial::new(coeffs), name.clone(), real_root)?;
    let mut warnings = Vec::new();
    if !m.irreducibility_verified() {
        warnings.push(format!(
            "irreducibility of the modulus of {name} was not verified (degree {}); trusting it",
            m.degree()
        ));
    }
    let one = Ext::from_base(one.clone(), &m);
    Ok(FieldContext {
        generator: Some(Ext::generator(&m)),
        one,
        name,
        warnings,
    })
}

impl<K: Scalar> FieldContext<Ext<K>> {
    pub fn modulus(&self) -> &Arc<ExtModulus<K>> {
        self.one.modulus().expect("bound")
    }
}
