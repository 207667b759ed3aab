//! The algebra `Q(F) = k[x]/(f)` (with `g` inverted), the residue functional
//! `eta`, the residue pairing `beta(a, b) = eta(ab)` and its Gram matrices.
//!
//! Coordinates are taken in the twisted monomial basis `e_i = x^(i-1) / g`,
//! so the coordinates of `p` are the coefficients of `p g mod f`. The element
//! `Delta = sum b_ij e_i (x) e_j` has the Bezout coefficients, and the dual
//! basis relation `e_i^* = sum_j b_ij e_j` forces `Gram(beta; e) = Bez^(-1)`.

use std::fmt;
use std::str::FromStr;

use crate::bezforms::{
    bezout_coefficients, bezout_matrix, confluent_vandermonde, hankel_matrix, newton_matrix,
    vandermonde_matrix, BasisLabel, SymmetricMatrix,
};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::poly::{newton_quotients, xgcd, Polynomial, SplitData};
use crate::ratmap::PointedRationalFunction;

/// An element of `Q(F)`, represented by its residue mod `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct FAlgebraElement<K> {
    pub rep: Polynomial<K>,
}

impl<K: Scalar> fmt::Display for FAlgebraElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// `Q(F)` together with the residue pairing.
#[derive(Clone, Debug)]
pub struct QAlgebra<K> {
    map: PointedRationalFunction<K>,
    g_inv: Polynomial<K>,
    /// `Gram(beta; e)` in the twisted monomial basis.
    gram: Matrix<K>,
    /// `Gram * coords(1)`, so that `eta(p) = coords(p) . eta_vector`.
    eta_vector: Vec<K>,
}

impl<K: Scalar> QAlgebra<K> {
    pub fn new(map: &PointedRationalFunction<K>) -> Self {
        let (d, _, v) = xgcd(map.f(), map.g());
        assert_eq!(d.degree(), Some(0), "gcd(f, g) = 1");
        let g_inv = v.rem(map.f());
        let delta = delta_coefficients(map);
        let gram = delta.inverse().expect("Delta is nondegenerate");
        let one_coords = coefficient_vector(&map.g().rem(map.f()), map.mu(), &map.zero());
        let eta_vector = gram.mul_vec(&one_coords);
        QAlgebra {
            map: map.clone(),
            g_inv,
            gram,
            eta_vector,
        }
    }

    pub fn map(&self) -> &PointedRationalFunction<K> {
        &self.map
    }

    pub fn mu(&self) -> usize {
        self.map.mu()
    }

    /// `g^(-1) mod f`.
    pub fn g_inverse(&self) -> &Polynomial<K> {
        &self.g_inv
    }

    pub fn element(&self, p: &Polynomial<K>) -> FAlgebraElement<K> {
        FAlgebraElement {
            rep: p.rem(self.map.f()),
        }
    }

    pub fn mul(&self, a: &FAlgebraElement<K>, b: &FAlgebraElement<K>) -> FAlgebraElement<K> {
        self.element(&(&a.rep * &b.rep))
    }

    /// `x^(i-1) / g` for `i = 1..mu`.
    pub fn twisted_monomial(&self, i: usize) -> FAlgebraElement<K> {
        self.element(&(&Polynomial::monomial(self.map.one(), i - 1) * &self.g_inv))
    }

    /// Coordinates in the twisted monomial basis: the coefficients of `p g mod f`.
    pub fn coordinates(&self, a: &FAlgebraElement<K>) -> Vec<K> {
        let pg = (&a.rep * self.map.g()).rem(self.map.f());
        coefficient_vector(&pg, self.mu(), &self.map.zero())
    }

    /// Gram matrix of `beta` on the twisted monomial basis.
    pub fn gram(&self) -> &Matrix<K> {
        &self.gram
    }

    /// The residue functional.
    pub fn eta(&self, a: &FAlgebraElement<K>) -> K {
        self.coordinates(a)
            .into_iter()
            .zip(&self.eta_vector)
            .fold(self.map.zero(), |acc, (c, w)| acc + c * w.clone())
    }

    /// `beta(a, b)` from the Gram matrix.
    pub fn beta(&self, a: &FAlgebraElement<K>, b: &FAlgebraElement<K>) -> K {
        let (ca, cb) = (self.coordinates(a), self.coordinates(b));
        let gb = self.gram.mul_vec(&cb);
        ca.into_iter().zip(gb).fold(self.map.zero(), |acc, (x, y)| acc + x * y)
    }

    /// Gram matrix `(beta(v_i, v_j))` of arbitrary elements.
    pub fn gram_of(&self, vectors: &[FAlgebraElement<K>]) -> Matrix<K> {
        let n = vectors.len();
        Matrix::from_fn(n, n, |i, j| self.eta(&self.mul(&vectors[i], &vectors[j])))
    }

    /// The matrix whose columns are the coordinates of `vectors`.
    pub fn coordinate_matrix(&self, vectors: &[FAlgebraElement<K>]) -> Matrix<K> {
        let cols: Vec<Vec<K>> = vectors.iter().map(|v| self.coordinates(v)).collect();
        Matrix::from_fn(self.mu(), vectors.len(), |i, j| cols[j][i].clone())
    }
}

fn coefficient_vector<K: Scalar>(p: &Polynomial<K>, n: usize, zero: &K) -> Vec<K> {
    (0..n)
        .map(|i| {
            let c = p.coeff(i);
            if c.is_zero() {
                zero.clone()
            } else {
                c
            }
        })
        .collect()
}

/// Coefficients of `Delta = (f (x) g - g (x) f) / (x (x) 1 - 1 (x) x)`.
///
/// Expands `f(x) g(y) - g(x) f(y) = sum_{a > b} c_ab (x^a y^b - x^b y^a)` and
/// divides each antisymmetric pair separately:
/// `(x^a y^b - x^b y^a) / (x - y) = x^b y^b sum_{k < a-b} x^k y^(a-b-1-k)`.
/// The result is checked against the synthetic-division Bezout matrix.
pub fn delta_coefficients<K: Scalar>(map: &PointedRationalFunction<K>) -> Matrix<K> {
    let mu = map.mu();
    let (f, g) = (map.f(), map.g());
    let mut grid = Matrix::zeros(mu, mu, &map.one());
    for a in 0..=mu {
        for b in 0..a {
            let c = f.coeff(a) * g.coeff(b) - g.coeff(a) * f.coeff(b);
            if c.is_zero() {
                continue;
            }
            for k in 0..a - b {
                let (i, j) = (b + k, a - 1 - k);
                let v = grid.get(i, j).clone() + c.clone();
                grid.set(i, j, v);
            }
        }
    }
    assert_eq!(grid, bezout_coefficients(f, g), "Delta coefficients equal the Bezout matrix");
    grid
}

/// The four named bases of `Q(F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Monomial,
    Horner,
    Newton,
    Vandermonde,
}

impl BasisKind {
    pub const ALL: [BasisKind; 4] = [BasisKind::Monomial, BasisKind::Horner, BasisKind::Newton, BasisKind::Vandermonde];

    pub fn as_str(self) -> &'static str {
        match self {
            BasisKind::Monomial => "monomial",
            BasisKind::Horner => "horner",
            BasisKind::Newton => "newton",
            BasisKind::Vandermonde => "vandermonde",
        }
    }

    pub fn needs_split_data(self) -> bool {
        matches!(self, BasisKind::Newton | BasisKind::Vandermonde)
    }

    pub fn dual_label(self) -> BasisLabel {
        match self {
            BasisKind::Monomial => BasisLabel::DualMonomial,
            BasisKind::Horner => BasisLabel::DualHorner,
            BasisKind::Newton => BasisLabel::DualNewton,
            BasisKind::Vandermonde => BasisLabel::DualVandermonde,
        }
    }
}

impl FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "monomial" => Ok(BasisKind::Monomial),
            "horner" => Ok(BasisKind::Horner),
            "newton" => Ok(BasisKind::Newton),
            "vandermonde" => Ok(BasisKind::Vandermonde),
            _ => Err(Error::Unsupported(format!("unknown basis '{s}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct NamedBasis<K> {
    pub which: BasisKind,
    pub vectors: Vec<FAlgebraElement<K>>,
}

pub fn basis_vectors<K: Scalar>(
    alg: &QAlgebra<K>,
    which: BasisKind,
    sd: Option<&SplitData<K>>,
) -> Result<NamedBasis<K>> {
    let map = alg.map();
    let mu = map.mu();
    let twist = |p: Polynomial<K>| alg.element(&(&p * alg.g_inverse()));
    let vectors: Vec<FAlgebraElement<K>> = match which {
        BasisKind::Monomial => (1..=mu).map(|i| alg.twisted_monomial(i)).collect(),
        BasisKind::Horner => (1..=mu)
            .map(|k| {
                // x^(mu-k) + a_1 x^(mu-k-1) + ... + a_(mu-k), with a_i = f_(mu-i).
                let coeffs = (0..=mu - k).map(|e| map.f().coeff(k + e)).collect();
                twist(Polynomial::new(coeffs))
            })
            .collect(),
        BasisKind::Newton | BasisKind::Vandermonde => {
            let sd = sd.ok_or_else(|| {
                Error::RequiresSplitRoots(format!("the {} basis needs the roots of f", which.as_str()))
            })?;
            let roots = sd.roots_with_multiplicity();
            let newton: Vec<FAlgebraElement<K>> = newton_quotients(map.f(), &roots)?.into_iter().map(twist).collect();
            if which == BasisKind::Newton {
                newton
            } else {
                // v = newton . Vmat^(-1): v_k = sum_l newton_l (Vmat^(-1))_(l, k).
                let vinv = confluent_vandermonde(map, &roots)
                    .inverse()
                    .expect("confluent Vandermonde matrix is invertible");
                (0..mu)
                    .map(|k| {
                        let p = (0..mu).fold(Polynomial::zero(), |acc, l| &acc + &newton[l].rep.scale(vinv.get(l, k)));
                        alg.element(&p)
                    })
                    .collect()
            }
        }
    };
    let basis = NamedBasis { which, vectors };
    if alg.coordinate_matrix(&basis.vectors).det().is_zero() {
        return Err(Error::IdentityViolated(format!("{} vectors are dependent", which.as_str())));
    }
    Ok(basis)
}

/// Gram matrix of `beta` on a primal basis: `C^T Gram(e) C`.
pub fn primal_gram<K: Scalar>(alg: &QAlgebra<K>, basis: &NamedBasis<K>) -> Matrix<K> {
    let c = alg.coordinate_matrix(&basis.vectors);
    c.transpose().congruence(alg.gram())
}

/// Gram matrix of `beta` on the basis dual to `which`, checked against the
/// classical matrix it should equal (Bezout, S, New, Van in that order).
pub fn gram_matrix<K: Scalar>(
    map: &PointedRationalFunction<K>,
    which: BasisKind,
    sd: Option<&SplitData<K>>,
) -> Result<SymmetricMatrix<K>> {
    let alg = QAlgebra::new(map);
    let basis = basis_vectors(&alg, which, sd)?;
    let dual = primal_gram(&alg, &basis).inverse().ok_or(Error::DegenerateForm)?;
    let expected = match which {
        BasisKind::Monomial => bezout_matrix(map),
        BasisKind::Horner => hankel_matrix(map),
        BasisKind::Newton => newton_matrix(map, sd.expect("checked above"))?,
        BasisKind::Vandermonde => vandermonde_matrix(map, sd.expect("checked above"))?,
    };
    if let Some((i, j)) = expected.matrix.first_difference(&dual) {
        return Err(Error::IdentityViolated(format!(
            "dual {} Gram matrix differs from the {} matrix at ({}, {})",
            which.as_str(),
            expected.label,
            i + 1,
            j + 1
        )));
    }
    SymmetricMatrix::new(dual, which.dual_label())
}

/// Gram matrix on the primal twisted monomial basis, `Bez^(-1)`.
pub fn primal_monomial_gram<K: Scalar>(map: &PointedRationalFunction<K>) -> SymmetricMatrix<K> {
    let alg = QAlgebra::new(map);
    SymmetricMatrix::new(alg.gram().clone(), BasisLabel::MonomialPrimal).expect("nondegenerate")
}

/// `eta(p) = sum_r p(r) g(r) / f'(r)` over the roots of a separable split `f`.
pub fn eta_from_roots<K: Scalar>(map: &PointedRationalFunction<K>, roots: &[K], p: &Polynomial<K>) -> K {
    let df = map.f().derivative();
    roots.iter().fold(map.zero(), |acc, r| {
        let d = df.eval(r);
        acc + p.eval(r) * map.g().eval(r) / d
    })
}

/// Gram matrix of `beta` restricted to the local summand of `Q(F)` at a root
/// `r` of multiplicity `m`, in the basis `e (x - r)^k`, `k < m`, where `e` is
/// the idempotent cut out by `xgcd((x - r)^m, f / (x - r)^m)`.
pub fn local_pairing<K: Scalar>(alg: &QAlgebra<K>, r: &K, m: usize) -> Result<Matrix<K>> {
    let f = alg.map().f();
    let lin = Polynomial::linear_root(r).pow(m);
    let h = f
        .exact_div(&lin)
        .ok_or_else(|| Error::NotARoot(format!("(x - {r})^{m} does not divide f")))?;
    let (d, _, v) = xgcd(&lin, &h);
    if d.degree() != Some(0) {
        return Err(Error::NotARoot(format!("{r} has multiplicity above {m}")));
    }
    let e = alg.element(&(&v * &h));
    let local: Vec<FAlgebraElement<K>> = (0..m)
        .map(|k| alg.element(&(&e.rep * &Polynomial::linear_root(r).pow(k))))
        .collect();
    Ok(alg.gram_of(&local))
}
