//! Cauchy indices, topological degree, local and global A^1-degrees and the
//! unstable pair `(w, d)`.

use crate::bezforms::{antitriangular_hankel, bezout_matrix};
use crate::error::{Error, Result};
use crate::field::{Scalar, Sign};
use crate::gw::{antitriangular_hankel_class, gw_equal, Decision, GWClass};
use crate::matrix::Matrix;
use crate::poly::{discriminant, find_roots, resultant, sturm, Polynomial, SplitData};
use crate::ratmap::PointedRationalFunction;
use crate::residue::{local_pairing, QAlgebra};

/// Multiplicity of `r` as a root of `f`, and the cofactor `f / (x - r)^m`.
fn split_off<K: Scalar>(f: &Polynomial<K>, r: &K) -> (usize, Polynomial<K>) {
    let lin = Polynomial::linear_root(r);
    let mut u = f.clone();
    let mut m = 0;
    while u.degree().is_some_and(|d| d > 0) && u.eval(r).is_zero() {
        u = u.exact_div(&lin).expect("root divides");
        m += 1;
    }
    (m, u)
}

/// Coefficients `c_k` with `p(x) = sum c_k (x - r)^k`, by repeated synthetic division.
fn taylor_coefficients<K: Scalar>(p: &Polynomial<K>, r: &K, count: usize) -> Vec<K> {
    let lin = Polynomial::linear_root(r);
    let mut rest = p.clone();
    (0..count)
        .map(|_| {
            let (q, rem) = rest.div_rem(&lin);
            rest = q;
            rem.coeff(0)
        })
        .collect()
}

/// Multiplicity `m` of `r` in `f` and the principal part `A(1), ..., A(m)` of
/// `g/f` at `r`, from the Taylor expansions of `g` and `u = f/(x - r)^m`.
pub fn local_principal_part<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>, r: &K) -> (usize, Vec<K>) {
    let (m, u) = split_off(f, r);
    let gt = taylor_coefficients(g, r, m);
    let ut = taylor_coefficients(&u, r, m);
    let u0inv = ut.first().map(|c| c.inv().expect("u(r) != 0"));
    let mut c: Vec<K> = Vec::with_capacity(m);
    for k in 0..m {
        let mut acc = gt[k].clone();
        for i in 1..=k {
            acc = acc - ut[i].clone() * c[k - i].clone();
        }
        c.push(acc * u0inv.clone().expect("m > 0"));
    }
    let a = (1..=m).map(|j| c[m - j].clone()).collect();
    (m, a)
}

/// A local Cauchy index, flagged when the point is not a pole at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalIndex {
    pub value: i32,
    pub not_a_pole: bool,
}

/// `ind_r(g/f)`: with `f = (x - r)^m u`, `u(r) != 0`, this is `sign(g(r)/u(r))`
/// for odd `m` and 0 for even `m`.
pub fn local_cauchy_index<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>, r: &K) -> Result<LocalIndex> {
    let (m, u) = split_off(f, r);
    if m == 0 {
        return Ok(LocalIndex {
            value: 0,
            not_a_pole: true,
        });
    }
    if m % 2 == 0 {
        return Ok(LocalIndex {
            value: 0,
            not_a_pole: false,
        });
    }
    let gr = g.eval(r);
    if gr.is_zero() {
        return Err(Error::Degenerate(format!("{r} is a common root; fraction not in lowest terms")));
    }
    let s = (gr / u.eval(r)).sign()?;
    Ok(LocalIndex {
        value: s.to_i32(),
        not_a_pole: false,
    })
}

/// The global Cauchy index of `num/den` and how it was obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct CauchyReport<K> {
    pub index: i64,
    /// Local indices at the poles found in the field.
    pub local: Vec<(K, i32)>,
    /// The factor of `den` without roots in the field.
    pub nonsplit_factor: Polynomial<K>,
    /// Its contribution, from a signed remainder sequence.
    pub nonsplit_index: i64,
}

/// `Ind(num/den)` computed twice: by the signed remainder sequence of
/// `(den, num)` alone, and as the sum of local indices at the poles found in
/// the field plus the remainder-sequence index over the non-split factor `h`,
/// `Ind((num * den/h mod h) / h)`. The two must agree.
pub fn global_cauchy_index<K: Scalar>(num: &Polynomial<K>, den: &Polynomial<K>) -> Result<CauchyReport<K>> {
    let direct = sturm::cauchy_index(num, den)?;
    let Some(search) = find_roots(den) else {
        return Ok(CauchyReport {
            index: direct,
            local: Vec::new(),
            nonsplit_factor: den.clone(),
            nonsplit_index: direct,
        });
    };
    let mut local = Vec::with_capacity(search.roots.len());
    for (r, _) in &search.roots {
        local.push((r.clone(), local_cauchy_index(den, num, r)?.value));
    }
    let h = search.remainder;
    let nonsplit_index = if h.degree().unwrap_or(0) == 0 {
        0
    } else {
        let rational_part = den.exact_div(&h).expect("remainder divides");
        sturm::cauchy_index(&(num * &rational_part).rem(&h), &h)?
    };
    let index = local.iter().map(|(_, v)| i64::from(*v)).sum::<i64>() + nonsplit_index;
    if index != direct {
        return Err(Error::IdentityViolated(format!(
            "Cauchy index: local sum {index} != remainder sequence {direct}"
        )));
    }
    Ok(CauchyReport {
        index,
        local,
        nonsplit_factor: h,
        nonsplit_index,
    })
}

/// Signature of the Bezout matrix.
pub fn bezout_signature<K: Scalar>(map: &PointedRationalFunction<K>) -> Result<i64> {
    crate::gw::signature(&bezout_matrix(map).matrix)
}

/// `deg F = Ind(g/f)`, checked against the signature of the Bezout matrix.
pub fn topological_degree<K: Scalar>(map: &PointedRationalFunction<K>) -> Result<i64> {
    let index = global_cauchy_index(map.g(), map.f())?.index;
    let signature = bezout_signature(map)?;
    if index != signature {
        return Err(Error::IdentityViolated(format!(
            "Cauchy index {index} != Bezout signature {signature}"
        )));
    }
    Ok(index)
}

/// The local A^1-degree at a root `r` of `f`: the class of the anti-triangular
/// Hankel block in the principal part of `g/f` at `r`, cross-checked against the
/// residue pairing restricted to the local summand of `Q(F)`.
pub fn local_a1_degree<K: Scalar>(map: &PointedRationalFunction<K>, r: &K) -> Result<GWClass<K>> {
    let (m, a) = local_principal_part(map.f(), map.g(), r);
    if m == 0 {
        return Err(Error::NotARoot(format!("{r} is not a root of {}", map.f())));
    }
    let class = antitriangular_hankel_class(&a)?;
    let explicit = GWClass::of_matrix(&antitriangular_hankel(&a))?;
    let local = GWClass::of_matrix(&local_pairing(&QAlgebra::new(map), r, m)?)?;
    for (what, other) in [("Newton block", &explicit), ("local residue pairing", &local)] {
        if gw_equal(&class, other)? == Decision::NotEqual {
            return Err(Error::IdentityViolated(format!(
                "local degree at {r}: closed form {class} != {what} class {other}"
            )));
        }
    }
    Ok(class)
}

/// Global and local classes for the degree-sum identity.
#[derive(Clone, Debug)]
pub struct DegreeSumReport<K> {
    pub global: GWClass<K>,
    pub local: Vec<(K, GWClass<K>)>,
    pub local_sum: GWClass<K>,
    pub decision: Decision,
}

impl<K: Scalar> DegreeSumReport<K> {
    pub fn passed(&self) -> bool {
        self.decision == Decision::Equal
    }
}

/// Compares the class of the Bezout form with the sum of the local degrees.
pub fn degree_sum_check<K: Scalar>(map: &PointedRationalFunction<K>, sd: &SplitData<K>) -> Result<DegreeSumReport<K>> {
    let global = GWClass::of_matrix(&bezout_matrix(map).matrix)?;
    let mut local = Vec::with_capacity(sd.roots.len());
    let mut local_sum = GWClass::zero(&map.one());
    for root in &sd.roots {
        let c = local_a1_degree(map, &root.root)?;
        local_sum = local_sum.sum(&c)?;
        local.push((root.root.clone(), c));
    }
    let decision = gw_equal(&global, &local_sum)?;
    Ok(DegreeSumReport {
        global,
        local,
        local_sum,
        decision,
    })
}

/// Split data for `map` over its own field, or an error naming the factor of
/// `f` that has no roots there.
pub fn require_split<K: Scalar>(map: &PointedRationalFunction<K>) -> Result<SplitData<K>> {
    match find_roots(map.f()) {
        Some(search) if search.splits() => map.split_data(&search.roots),
        Some(search) => Err(Error::RequiresSplitRoots(format!(
            "f does not split; non-split factor {}",
            search.remainder
        ))),
        None => Err(Error::RequiresSplitRoots(format!(
            "cannot search for roots of {} in this field; pass them explicitly",
            map.f()
        ))),
    }
}

/// `deg^{A^1}(F)`, the class of the Bezout form. When `f` splits over the
/// working field the degree-sum identity is checked as well.
pub fn a1_degree<K: Scalar>(map: &PointedRationalFunction<K>) -> Result<GWClass<K>> {
    let class = GWClass::of_matrix(&bezout_matrix(map).matrix)?;
    if let Some(sd) = map.find_split_data() {
        let report = degree_sum_check(map, &sd)?;
        if report.decision == Decision::NotEqual {
            return Err(Error::IdentityViolated(format!(
                "Bezout class {} != sum of local degrees {}",
                report.global, report.local_sum
            )));
        }
    }
    Ok(class)
}

/// The pair `(w, d)`: the stable class and the exact Bezout determinant.
#[derive(Clone, Debug)]
pub struct UnstableClass<K> {
    pub w: GWClass<K>,
    pub d: K,
}

/// `(-1)^(n(n-1)/2) Res(f, g)`.
pub fn signed_resultant<K: Scalar>(map: &PointedRationalFunction<K>) -> K {
    let n = map.mu();
    let r = resultant(map.f(), map.g());
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// `Disc(f) prod g(r_i)/f'(r_i)` for `f` with simple roots.
pub fn d_from_roots<K: Scalar>(map: &PointedRationalFunction<K>, sd: &SplitData<K>) -> Result<K> {
    if !sd.is_simple() {
        return Err(Error::Unsupported("needs simple roots".into()));
    }
    let df = map.f().derivative();
    Ok(sd.roots.iter().fold(discriminant(map.f()), |acc, root| {
        acc * map.g().eval(&root.root) / df.eval(&root.root)
    }))
}

pub fn unstable_class<K: Scalar>(map: &PointedRationalFunction<K>) -> Result<UnstableClass<K>> {
    let w = a1_degree(map)?;
    let d = bezout_matrix(map).matrix.det();
    let via_resultant = signed_resultant(map);
    if d != via_resultant {
        return Err(Error::IdentityViolated(format!(
            "det Bez = {d} but (-1)^(n(n-1)/2) Res(f, g) = {via_resultant}"
        )));
    }
    if let Some(sd) = map.find_split_data().filter(SplitData::is_simple) {
        let via_roots = d_from_roots(map, &sd)?;
        if d != via_roots {
            return Err(Error::IdentityViolated(format!(
                "det Bez = {d} but Disc(f) prod g(r)/f'(r) = {via_roots}"
            )));
        }
    }
    if w.invariants().discriminant.same_class(&d.square_class()?) == Some(false) {
        return Err(Error::IdentityViolated("square class of d differs from disc w".into()));
    }
    Ok(UnstableClass { w, d })
}

/// Checks `sigma(New(F)) = P^T New(F) P` for a field automorphism `sigma`
/// fixing the coefficients of `f` and `g`, where `P` permutes the Newton
/// blocks as `sigma` permutes the roots.
pub fn galois_conjugation_check<K: Scalar>(
    map: &PointedRationalFunction<K>,
    sd: &SplitData<K>,
    sigma: impl Fn(&K) -> K,
) -> Result<bool> {
    let fixed = |p: &Polynomial<K>| p.coeffs().iter().all(|c| &sigma(c) == c);
    if !fixed(map.f()) || !fixed(map.g()) {
        return Err(Error::Unsupported("the automorphism must fix f and g".into()));
    }
    let new = crate::bezforms::newton_matrix(map, sd)?.matrix;
    let mu = map.mu();
    let offsets: Vec<usize> = sd
        .roots
        .iter()
        .scan(0, |acc, r| {
            let start = *acc;
            *acc += r.multiplicity;
            Some(start)
        })
        .collect();
    // Column `offsets[pi(i)] + k` of P is e_{offsets[i] + k}.
    let mut p = Matrix::zeros(mu, mu, &map.one());
    for (i, root) in sd.roots.iter().enumerate() {
        let image = sigma(&root.root);
        let j = sd
            .roots
            .iter()
            .position(|s| s.root == image)
            .ok_or_else(|| Error::SplitDataInconsistent(format!("sigma({}) is not a root", root.root)))?;
        for k in 0..root.multiplicity {
            p.set(offsets[i] + k, offsets[j] + k, map.one());
        }
    }
    let conjugated = new.map(|c| sigma(c));
    Ok(p.transpose().congruence(&new) == conjugated)
}

/// Compares `deg(F o G)` with `deg(F) deg(G)` in `GW(k)`.
pub fn multiplicativity_check<K: Scalar>(
    outer: &PointedRationalFunction<K>,
    inner: &PointedRationalFunction<K>,
) -> Result<Decision> {
    let composite = a1_degree(&outer.compose(inner)?)?;
    let product = a1_degree(outer)?.product(&a1_degree(inner)?)?;
    gw_equal(&composite, &product)
}

/// Signature of a class, when the field is ordered.
pub fn signature_of<K: Scalar>(class: &GWClass<K>) -> Option<i64> {
    class.invariants().signature
}

/// Sign helper for callers that need `sign(a)` as an integer.
pub fn sign_i32<K: Scalar>(a: &K) -> Result<i32> {
    a.sign().map(Sign::to_i32)
}
