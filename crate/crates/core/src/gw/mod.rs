//! Symmetric bilinear forms and their Grothendieck-Witt classes.

pub mod hilbert;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Scalar, Sign, SquareClass};
use crate::matrix::Matrix;

pub use hilbert::{hilbert_symbol, Place};

/// Symmetric Gaussian elimination: returns `(d, P)` with `P^T m P = diag(d)`.
///
/// A zero pivot is repaired by swapping in a later nonzero diagonal entry, or
/// failing that by adding row and column `j` to row and column `i` for some
/// `m[i][j] != 0`, which makes the pivot `2 m[i][j]`.
pub fn diagonalize<K: Scalar>(m: &Matrix<K>) -> Result<(Vec<K>, Matrix<K>)> {
    assert!(m.is_square() && m.is_symmetric(), "diagonalize needs a symmetric matrix");
    let n = m.rows();
    if n == 0 {
        return Ok((Vec::new(), m.clone()));
    }
    let like = m.get(0, 0).one_in();
    let mut a = m.clone();
    let mut p = Matrix::identity(n, &like);

    // Column k += c * column i, applied as a congruence to `a` and to `p`.
    let add = |a: &mut Matrix<K>, p: &mut Matrix<K>, k: usize, i: usize, c: &K| {
        for r in 0..n {
            let v = a.get(r, k).clone() + c.clone() * a.get(r, i).clone();
            a.set(r, k, v);
            let v = p.get(r, k).clone() + c.clone() * p.get(r, i).clone();
            p.set(r, k, v);
        }
        for col in 0..n {
            let v = a.get(k, col).clone() + c.clone() * a.get(i, col).clone();
            a.set(k, col, v);
        }
    };

    for i in 0..n {
        if a.get(i, i).is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                for r in 0..n {
                    let (x, y) = (a.get(r, i).clone(), a.get(r, j).clone());
                    a.set(r, i, y);
                    a.set(r, j, x);
                    let (x, y) = (p.get(r, i).clone(), p.get(r, j).clone());
                    p.set(r, i, y);
                    p.set(r, j, x);
                }
                for c in 0..n {
                    let (x, y) = (a.get(i, c).clone(), a.get(j, c).clone());
                    a.set(i, c, y);
                    a.set(j, c, x);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !a.get(i, j).is_zero()) {
                add(&mut a, &mut p, i, j, &like);
            } else {
                return Err(Error::DegenerateForm);
            }
        }
        let pivot = a.get(i, i).clone();
        let pinv = pivot.inv().expect("nonzero pivot");
        for k in i + 1..n {
            if a.get(k, i).is_zero() {
                continue;
            }
            let c = -(a.get(k, i).clone() * pinv.clone());
            add(&mut a, &mut p, k, i, &c);
        }
    }
    let d = (0..n).map(|i| a.get(i, i).clone()).collect();
    Ok((d, p))
}

/// Signature of a nondegenerate symmetric matrix over an ordered field, from
/// the signs of its diagonalization (no square classes needed).
pub fn signature<K: Scalar>(m: &Matrix<K>) -> Result<i64> {
    let (d, _) = diagonalize(m)?;
    d.iter().map(|x| x.sign().map(|s| i64::from(s.to_i32()))).sum()
}

/// How the square classes of a field can be compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FieldKind {
    Rationals,
    Finite,
    Other,
}

fn kind_of<K: Scalar>(one: &K) -> FieldKind {
    if one.to_rational().is_some() {
        FieldKind::Rationals
    } else if one.finite_order().is_some() {
        FieldKind::Finite
    } else {
        FieldKind::Other
    }
}

/// A class in `GW(k)`: `<a_1, ..., a_r> + h H` with `H = <1, -1>`.
#[derive(Clone, Debug)]
pub struct GWClass<K> {
    pub diagonal: Vec<SquareClass<K>>,
    pub hyperbolics: usize,
    pub field: String,
    one: K,
}

impl<K: Scalar> GWClass<K> {
    /// The zero class over the field of `like`.
    pub fn zero(like: &K) -> Self {
        GWClass {
            diagonal: Vec::new(),
            hyperbolics: 0,
            field: like.field_name().unwrap_or_else(|| "?".into()),
            one: like.one_in(),
        }
    }

    /// `h H`.
    pub fn hyperbolic(h: usize, like: &K) -> Self {
        GWClass {
            hyperbolics: h,
            ..Self::zero(like)
        }
    }

    /// `<d_1, ..., d_r>`, normalized.
    pub fn from_diagonal(entries: &[K], like: &K) -> Result<Self> {
        let diagonal = entries.iter().map(Scalar::square_class).collect::<Result<Vec<_>>>()?;
        Ok(GWClass {
            diagonal,
            ..Self::zero(like)
        }
        .normalized())
    }

    /// The class of a nondegenerate symmetric matrix.
    pub fn of_matrix(m: &Matrix<K>) -> Result<Self> {
        if m.rows() == 0 {
            return Err(Error::DegenerateForm);
        }
        let (d, _) = diagonalize(m)?;
        Self::from_diagonal(&d, m.get(0, 0))
    }

    pub fn rank(&self) -> usize {
        self.diagonal.len() + 2 * self.hyperbolics
    }

    pub fn one(&self) -> &K {
        &self.one
    }

    /// All diagonal entries with each `H` written as `<1, -1>`.
    pub fn expanded(&self) -> Vec<K> {
        let mut out: Vec<K> = self.diagonal.iter().map(|c| c.representative().clone()).collect();
        for _ in 0..self.hyperbolics {
            out.push(self.one.clone());
            out.push(-self.one.clone());
        }
        out
    }

    /// Absorbs `<a, b>` into `H` whenever `b` is in the class of `-a`. Over a
    /// finite field the class is determined by rank and discriminant, so the
    /// diagonal part is reduced to at most two entries.
    pub fn normalized(mut self) -> Self {
        if kind_of(&self.one) == FieldKind::Finite {
            let rank = self.rank();
            let disc = self.discriminant_class();
            let minus_one = (-self.one.clone()).square_class().expect("nonzero");
            let sign_h = |h: usize| if h.is_multiple_of(2) { self.one.clone() } else { -self.one.clone() };
            let Some(disc) = disc else {
                return self;
            };
            let (diag, h) = if rank % 2 == 1 {
                let h = (rank - 1) / 2;
                (vec![disc.representative().clone() * sign_h(h)], h)
            } else if rank == 0 {
                (Vec::new(), 0)
            } else {
                let h = rank / 2;
                let target = if h.is_multiple_of(2) { self.one.square_class().expect("nonzero") } else { minus_one };
                if disc == target {
                    (Vec::new(), h)
                } else {
                    let h = h - 1;
                    (vec![self.one.clone(), disc.representative().clone() * sign_h(h)], h)
                }
            };
            self.diagonal = diag.iter().map(|d| d.square_class().expect("nonzero")).collect();
            self.hyperbolics = h;
            return self;
        }
        let mut rest: Vec<SquareClass<K>> = Vec::with_capacity(self.diagonal.len());
        'outer: for c in std::mem::take(&mut self.diagonal) {
            let neg = c.negate().expect("nonzero");
            for k in 0..rest.len() {
                if rest[k].same_class(&neg) == Some(true) {
                    rest.remove(k);
                    self.hyperbolics += 1;
                    continue 'outer;
                }
            }
            rest.push(c);
        }
        self.diagonal = rest;
        self
    }

    /// Orthogonal sum.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let mut out = self.clone();
        out.diagonal.extend(other.diagonal.iter().cloned());
        out.hyperbolics += other.hyperbolics;
        Ok(out.normalized())
    }

    /// Tensor product: `<a><b> = <ab>`, `H q = rank(q) H`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let mut diagonal = Vec::new();
        for a in &self.diagonal {
            for b in &other.diagonal {
                diagonal.push(a.times(b)?);
            }
        }
        let hyperbolics = self.hyperbolics * other.rank() + other.hyperbolics * self.diagonal.len();
        Ok(GWClass {
            diagonal,
            hyperbolics,
            field: self.field.clone(),
            one: self.one.clone(),
        }
        .normalized())
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.clone(), other.field.clone()));
        }
        Ok(())
    }

    /// Square class of the determinant of the expanded diagonal form.
    fn discriminant_class(&self) -> Option<SquareClass<K>> {
        let det = self.expanded().into_iter().fold(self.one.clone(), |a, b| a * b);
        det.square_class().ok()
    }

    pub fn invariants(&self) -> FormInvariants<K> {
        let expanded = self.expanded();
        let det = expanded.iter().cloned().fold(self.one.clone(), |a, b| a * b);
        let signature = expanded
            .iter()
            .map(|d| d.sign().map(Sign::to_i32))
            .collect::<Result<Vec<i32>>>()
            .ok()
            .map(|signs| signs.into_iter().map(i64::from).sum());
        let hasse = rational_entries(&expanded).map(|ints| {
            hilbert::relevant_places(&ints)
                .into_iter()
                .filter_map(|v| {
                    let s = hilbert::hasse_invariant(&ints, &v);
                    (s == -1).then_some((v, s))
                })
                .collect()
        });
        FormInvariants {
            rank: expanded.len(),
            discriminant: det.square_class().expect("nondegenerate"),
            signature,
            hasse,
            one: self.one.clone(),
        }
    }
}

/// Square-free integer representatives, for forms over `Q`.
fn rational_entries<K: Scalar>(entries: &[K]) -> Option<Vec<BigInt>> {
    entries
        .iter()
        .map(|e| {
            let class = e.square_class().ok()?;
            let q = class.representative().to_rational()?;
            Some(q.to_integer())
        })
        .collect()
}

impl<K: Scalar> PartialEq for GWClass<K> {
    /// Equality of normalized presentations, entry multisets compared by class.
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field || self.hyperbolics != other.hyperbolics || self.diagonal.len() != other.diagonal.len() {
            return false;
        }
        let mut unused: Vec<&SquareClass<K>> = other.diagonal.iter().collect();
        for c in &self.diagonal {
            match unused.iter().position(|d| c.same_class(d) == Some(true)) {
                Some(k) => {
                    unused.remove(k);
                }
                None => return false,
            }
        }
        true
    }
}

impl<K: Scalar> fmt::Display for GWClass<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.diagonal.is_empty() {
            let entries: Vec<String> = self.diagonal.iter().map(|c| c.to_string()).collect();
            parts.push(format!("<{}>", entries.join(", ")));
        }
        match self.hyperbolics {
            0 => {}
            1 => parts.push("H".to_string()),
            h => parts.push(format!("{h}H")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Rank, discriminant, signature and Hasse invariants of a form.
#[derive(Clone, Debug)]
pub struct FormInvariants<K> {
    pub rank: usize,
    /// Square class of the Gram determinant (no sign twist).
    pub discriminant: SquareClass<K>,
    /// Over ordered fields only.
    pub signature: Option<i64>,
    /// Over `Q` only: the places where the Hasse invariant is `-1`.
    pub hasse: Option<BTreeMap<Place, i8>>,
    one: K,
}

impl<K: Scalar> FormInvariants<K> {
    /// `(-1)^(r(r-1)/2) det`, the signed discriminant.
    pub fn signed_discriminant(&self) -> SquareClass<K> {
        let r = self.rank;
        if (r * r.saturating_sub(1) / 2) % 2 == 1 {
            self.discriminant.negate().expect("nonzero")
        } else {
            self.discriminant.clone()
        }
    }

    pub fn hasse_at(&self, place: &Place) -> Option<i8> {
        self.hasse.as_ref().map(|h| h.get(place).copied().unwrap_or(1))
    }

    /// Whether the two sets of invariants agree where both are known.
    /// `None` when some comparison cannot be decided.
    fn agree(&self, other: &Self) -> Option<bool> {
        if self.rank != other.rank {
            return Some(false);
        }
        if let (Some(a), Some(b)) = (self.signature, other.signature) {
            if a != b {
                return Some(false);
            }
        }
        if let (Some(a), Some(b)) = (&self.hasse, &other.hasse) {
            for place in a.keys().chain(b.keys()) {
                if self.hasse_at(place) != other.hasse_at(place) {
                    return Some(false);
                }
            }
        }
        self.discriminant.same_class(&other.discriminant)
    }

    pub fn one(&self) -> &K {
        &self.one
    }
}

/// Invariants of a nondegenerate symmetric matrix.
pub fn invariants<K: Scalar>(m: &Matrix<K>) -> Result<FormInvariants<K>> {
    Ok(GWClass::of_matrix(m)?.invariants())
}

/// Outcome of a class comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Equal,
    NotEqual,
    Undecided,
}

impl Decision {
    pub fn is_equal(self) -> bool {
        self == Decision::Equal
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Equal => "equal",
            Decision::NotEqual => "not equal",
            Decision::Undecided => "undecided",
        }
    }
}

/// Bound for the explicit representation search over extension fields.
const SEARCH_BOUND: i64 = 12;

/// Equality in `GW(k)`.
///
/// Over `Q` rank, signature, discriminant and Hasse invariants form a complete
/// set; over finite fields rank and discriminant do. Over other fields the
/// answer is `NotEqual` when some computed invariant differs, `Equal` when the
/// normalized presentations coincide or an explicit isometry is found at rank
/// at most 2, and `Undecided` otherwise.
pub fn gw_equal<K: Scalar>(a: &GWClass<K>, b: &GWClass<K>) -> Result<Decision> {
    a.same_field(b)?;
    let (ia, ib) = (a.invariants(), b.invariants());
    match (kind_of(&a.one), ia.agree(&ib)) {
        (_, Some(false)) => Ok(Decision::NotEqual),
        (FieldKind::Rationals | FieldKind::Finite, Some(true)) => Ok(Decision::Equal),
        (FieldKind::Rationals | FieldKind::Finite, None) => unreachable!("square classes are canonical"),
        (FieldKind::Other, agreement) => {
            if a == b {
                return Ok(Decision::Equal);
            }
            if agreement == Some(true) && a.rank() <= 2 && isometric_by_search(&a.expanded(), &b.expanded()) {
                return Ok(Decision::Equal);
            }
            Ok(Decision::Undecided)
        }
    }
}

/// Rank 1: same class. Rank 2 with equal discriminants: `<a1, a2>` represents `b1`,
/// found as `(a1 x^2 + a2 y^2) / b1` square for small integers `x`, `y`.
fn isometric_by_search<K: Scalar>(a: &[K], b: &[K]) -> bool {
    match (a, b) {
        ([x], [y]) => (x.clone() / y.clone()).is_square() == Some(true),
        ([a1, a2], [b1, _]) => {
            for x in -SEARCH_BOUND..=SEARCH_BOUND {
                for y in 0..=SEARCH_BOUND {
                    let v = a1.clone() * a1.int_in(x * x) + a2.clone() * a2.int_in(y * y);
                    if !v.is_zero() && (v / b1.clone()).is_square() == Some(true) {
                        return true;
                    }
                }
            }
            false
        }
        _ => false,
    }
}

/// Class of the anti-triangular Hankel matrix in `A(1), ..., A(mu)`:
/// `<A(mu)> + (mu-1)/2 H` for odd `mu`, `mu/2 H` for even `mu`.
pub fn antitriangular_hankel_class<K: Scalar>(a: &[K]) -> Result<GWClass<K>> {
    let top = a.last().ok_or_else(|| Error::Degenerate("empty coefficient list".into()))?;
    if top.is_zero() {
        return Err(Error::Degenerate("top coefficient A(mu) is zero".into()));
    }
    power_map_class(a.len(), top)
}

/// Class of the local degree of `(x - r)^mu / A`: `<A> + (mu-1)/2 <A, -A>` for
/// odd `mu` and `mu/2 <A, -A>` for even `mu`, with `<A, -A> = H`.
pub fn power_map_class<K: Scalar>(mu: usize, a: &K) -> Result<GWClass<K>> {
    if mu == 0 {
        return Err(Error::Degenerate("mu must be positive".into()));
    }
    if a.is_zero() {
        return Err(Error::Degenerate("A must be nonzero".into()));
    }
    if mu.is_multiple_of(2) {
        Ok(GWClass::hyperbolic(mu / 2, a))
    } else {
        let mut c = GWClass::from_diagonal(std::slice::from_ref(a), a)?;
        c.hyperbolics += (mu - 1) / 2;
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fp, Rational};
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
    }

    #[test]
    fn diagonalize_reproduces_diagonal() {
        for m in [qm(&[&[0, 1], &[1, 0]]), qm(&[&[-1, 1], &[1, 0]]), qm(&[&[5]]), qm(&[&[0, 0, 1], &[0, 1, 2], &[1, 2, 3]]), qm(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]])] {
            let (d, p) = diagonalize(&m).unwrap();
            let dm = Matrix::from_fn(d.len(), d.len(), |i, j| if i == j { d[i].clone() } else { q(0) });
            assert_eq!(p.transpose().congruence(&m), dm);
            assert!(!p.det().is_zero());
        }
        assert!(matches!(diagonalize(&qm(&[&[0, 0], &[0, 1]])), Err(Error::DegenerateForm)));
    }

    #[test]
    fn invariant_examples() {
        let h = invariants(&qm(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!((h.rank, h.signature), (2, Some(0)));
        assert_eq!(h.discriminant.representative(), &q(-1));
        let b = invariants(&qm(&[&[-1, 1], &[1, 0]])).unwrap();
        assert_eq!((b.rank, b.signature), (2, Some(0)));
        assert_eq!(b.discriminant.representative(), &q(-1));
        let c = invariants(&qm(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])).unwrap();
        assert_eq!((c.rank, c.signature), (3, Some(1)));
        assert_eq!(c.discriminant.representative(), &q(-1));
        let i2 = invariants(&qm(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!((i2.rank, i2.signature), (2, Some(2)));
        assert_eq!(i2.discriminant.representative(), &q(1));
        assert_eq!(i2.signed_discriminant().representative(), &q(-1));
    }

    #[test]
    fn equality_examples() {
        let one = q(1);
        let h = GWClass::hyperbolic(1, &one);
        let pair = GWClass::from_diagonal(&[q(1), q(-1)], &one).unwrap();
        assert_eq!(pair, h);
        assert_eq!(gw_equal(&pair, &h).unwrap(), Decision::Equal);
        let ones = GWClass::from_diagonal(&[q(1), q(1)], &one).unwrap();
        let twos = GWClass::from_diagonal(&[q(2), q(2)], &one).unwrap();
        assert_eq!(gw_equal(&ones, &twos).unwrap(), Decision::Equal);
        let threes = GWClass::from_diagonal(&[q(3), q(3)], &one).unwrap();
        assert_eq!(gw_equal(&ones, &threes).unwrap(), Decision::NotEqual);
        let a = GWClass::from_diagonal(&[q(1)], &one).unwrap();
        let b = GWClass::from_diagonal(&[q(-1)], &one).unwrap();
        assert_eq!(gw_equal(&a, &b).unwrap(), Decision::NotEqual);
    }

    #[test]
    fn finite_field_normal_form() {
        let one = Fp::new(1, 7).unwrap();
        let e = |v| Fp::new(v, 7).unwrap();
        // -1 is a non-square mod 7, so <1, 1> is not hyperbolic but <1, 1, 1> = H + <-1>.
        let c = GWClass::from_diagonal(&[e(1), e(1)], &one).unwrap();
        assert_eq!(c.hyperbolics, 0);
        let c = GWClass::from_diagonal(&[e(1), e(1), e(1)], &one).unwrap();
        assert_eq!((c.hyperbolics, c.diagonal.len()), (1, 1));
        assert_eq!(c.invariants().discriminant, e(1).square_class().unwrap());
        let d = GWClass::from_diagonal(&[e(3), e(5), e(2)], &one).unwrap();
        assert_eq!(gw_equal(&c, &d).unwrap(), Decision::Equal);
        assert!(c.invariants().signature.is_none());
        assert!(c.invariants().hasse.is_none());
    }

    #[test]
    fn closed_forms() {
        let h = antitriangular_hankel_class(&[q(0), q(1)]).unwrap();
        assert_eq!(h, GWClass::hyperbolic(1, &q(1)));
        let c = antitriangular_hankel_class(&[q(4), q(-2), q(3)]).unwrap();
        assert_eq!((c.hyperbolics, c.diagonal[0].representative().clone()), (1, q(3)));
        let s = antitriangular_hankel_class(&[q(7)]).unwrap();
        assert_eq!(s.diagonal[0].representative(), &q(7));
        assert!(antitriangular_hankel_class(&[q(1), q(0)]).is_err());

        assert_eq!(power_map_class(1, &q(1)).unwrap().to_string(), "<1>");
        let p3 = power_map_class(3, &q(1)).unwrap();
        assert_eq!(p3.to_string(), "<1> + H");
        let bez = invariants(&qm(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])).unwrap();
        let inv = p3.invariants();
        assert_eq!((inv.rank, inv.signature), (bez.rank, bez.signature));
        assert_eq!(power_map_class(2, &q(5)).unwrap(), GWClass::hyperbolic(1, &q(1)));
        assert!(power_map_class(2, &q(0)).is_err());
    }

    #[test]
    fn products() {
        let one = q(1);
        let a = GWClass::from_diagonal(&[q(2), q(3)], &one).unwrap();
        let h = GWClass::hyperbolic(1, &one);
        let p = a.product(&h).unwrap();
        assert_eq!((p.hyperbolics, p.diagonal.len()), (2, 0));
        let p = a.product(&a).unwrap();
        assert_eq!(p.rank(), 4);
        assert_eq!(p.invariants().signature, Some(4));
    }
}
