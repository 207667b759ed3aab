//! The four symmetric matrices of a pointed rational function and the
//! change-of-basis matrices relating them:
//!
//! ```text
//! Bez = L S L^T = M New M^T = N Van N^T
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{binomial_in, Scalar};
use crate::matrix::Matrix;
use crate::poly::{newton_quotients, Polynomial, SplitData};
use crate::ratmap::PointedRationalFunction;

/// The basis a Gram matrix is written in. The four named matrices are Gram
/// matrices of the residue pairing on the duals of the named bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    DualMonomial,
    DualHorner,
    DualNewton,
    DualVandermonde,
    MonomialPrimal,
}

impl BasisLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisLabel::DualMonomial => "dual-monomial",
            BasisLabel::DualHorner => "dual-Horner",
            BasisLabel::DualNewton => "dual-Newton",
            BasisLabel::DualVandermonde => "dual-Vandermonde",
            BasisLabel::MonomialPrimal => "monomial-primal",
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A symmetric Gram matrix tagged with its basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix<K> {
    pub matrix: Matrix<K>,
    pub label: BasisLabel,
}

impl<K: Scalar> SymmetricMatrix<K> {
    /// Checks symmetry and nondegeneracy.
    pub fn new(matrix: Matrix<K>, label: BasisLabel) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::IdentityViolated(format!("{label} matrix is not symmetric")));
        }
        if matrix.det().is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(SymmetricMatrix { matrix, label })
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }
}

/// Coefficients `b_ij` of `(f(x) g(y) - f(y) g(x)) / (x - y)` on `x^(i-1) y^(j-1)`.
///
/// Writes the numerator as `sum_k c_k(y) x^k` with `c_k = f_k g(y) - g_k f(y)`
/// and divides by `x - y` synthetically over `k[y]`.
pub fn bezout_coefficients<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>) -> Matrix<K> {
    let mu = f.degree().expect("nonzero f");
    let like = f.leading().expect("nonzero").clone();
    let c: Vec<Polynomial<K>> = (0..=mu)
        .map(|k| &g.scale(&f.coeff(k)) - &f.scale(&g.coeff(k)))
        .collect();
    let y = Polynomial::monomial(like.one_in(), 1);
    let mut q: Vec<Polynomial<K>> = vec![Polynomial::zero(); mu];
    let mut carry = Polynomial::zero();
    for k in (1..=mu).rev() {
        carry = &c[k] + &(&y * &carry);
        q[k - 1] = carry.clone();
    }
    let remainder = &c[0] + &(&y * &carry);
    assert!(remainder.is_zero(), "x - y divides f(x)g(y) - f(y)g(x)");
    let out = Matrix::from_fn(mu, mu, |i, j| {
        let v = q[i].coeff(j);
        if v.is_zero() {
            like.zero_in()
        } else {
            v
        }
    });
    assert!(out.is_symmetric(), "Bezout matrix is symmetric");
    out
}

pub fn bezout_matrix<K: Scalar>(map: &PointedRationalFunction<K>) -> SymmetricMatrix<K> {
    SymmetricMatrix::new(bezout_coefficients(map.f(), map.g()), BasisLabel::DualMonomial)
        .expect("Bezout matrix of a pointed map is nondegenerate")
}

/// `S(F)`: Hankel in `s_1, ..., s_(2mu-1)`.
pub fn hankel_matrix<K: Scalar>(map: &PointedRationalFunction<K>) -> SymmetricMatrix<K> {
    let mu = map.mu();
    let s = map.reciprocal_series(2 * mu - 1);
    SymmetricMatrix::new(Matrix::hankel(mu, &s), BasisLabel::DualHorner)
        .expect("S(F) is congruent to the Bezout matrix")
}

fn check_split<K: Scalar>(map: &PointedRationalFunction<K>, sd: &SplitData<K>) -> Result<()> {
    let recomputed = map.split_data(&sd.roots_with_multiplicity())?;
    if &recomputed != sd {
        return Err(Error::SplitDataInconsistent(
            "partial-fraction coefficients do not match the map".into(),
        ));
    }
    Ok(())
}

/// The `m x m` anti-triangular Hankel matrix with entry `(a, b) = A(a + b + 1)`,
/// zero below the anti-diagonal.
pub fn antitriangular_hankel<K: Scalar>(a: &[K]) -> Matrix<K> {
    let m = a.len();
    let zero = a[0].zero_in();
    Matrix::from_fn(m, m, |i, j| if i + j < m { a[i + j].clone() } else { zero.clone() })
}

/// `New(F)`: block diagonal in the anti-triangular Hankel blocks of `A_i(1..mu_i)`.
pub fn newton_matrix<K: Scalar>(
    map: &PointedRationalFunction<K>,
    sd: &SplitData<K>,
) -> Result<SymmetricMatrix<K>> {
    check_split(map, sd)?;
    let blocks: Vec<Matrix<K>> = sd.roots.iter().map(|r| antitriangular_hankel(&r.coefficients)).collect();
    SymmetricMatrix::new(Matrix::block_diagonal(&blocks, &map.one()), BasisLabel::DualNewton)
}

/// `sigma_1, ..., sigma_count` with
/// `sigma_b = sum_i sum_j A_i(j) / g(r_i)^2 * C(b-1, j-1) * r_i^(b-j)`.
pub fn sigma_sequence<K: Scalar>(map: &PointedRationalFunction<K>, sd: &SplitData<K>, count: usize) -> Vec<K> {
    let zero = map.zero();
    (1..=count)
        .map(|b| {
            let mut acc = zero.clone();
            for root in &sd.roots {
                let gr = map.g().eval(&root.root);
                let weight = gr.square().inv().expect("g(r) != 0 since gcd(f, g) = 1");
                for (j0, a) in root.coefficients.iter().enumerate() {
                    let j = j0 + 1;
                    if b < j {
                        break;
                    }
                    let term = a.clone()
                        * weight.clone()
                        * binomial_in(&zero, b - 1, j - 1)
                        * root.root.pow((b - j) as u64);
                    acc = acc + term;
                }
            }
            acc
        })
        .collect()
}

/// `Van(F)`: Hankel in `sigma_1, ..., sigma_(2mu-1)`.
pub fn vandermonde_matrix<K: Scalar>(
    map: &PointedRationalFunction<K>,
    sd: &SplitData<K>,
) -> Result<SymmetricMatrix<K>> {
    check_split(map, sd)?;
    let mu = map.mu();
    let sigma = sigma_sequence(map, sd, 2 * mu - 1);
    SymmetricMatrix::new(Matrix::hankel(mu, &sigma), BasisLabel::DualVandermonde)
}

/// Change-of-basis matrices: `Bez = L S L^T = M New M^T = N Van N^T`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionMatrices<K> {
    pub l: Matrix<K>,
    pub m: Option<Matrix<K>>,
    pub n: Option<Matrix<K>>,
    /// `N_0`, the inverse of the assembled confluent Vandermonde matrix `[V_1 ... V_n]`.
    pub n0: Option<Matrix<K>>,
}

/// `L[i][k] = a_(mu-i-k+1)` (1-indexed) for `f = x^mu + a_1 x^(mu-1) + ... + a_mu`,
/// with `a_0 = 1` and zero for negative indices.
pub fn l_matrix<K: Scalar>(map: &PointedRationalFunction<K>) -> Matrix<K> {
    let mu = map.mu();
    let zero = map.zero();
    Matrix::from_fn(mu, mu, |i, k| {
        if i + k < mu {
            map.f().coeff(i + k + 1)
        } else {
            zero.clone()
        }
    })
}

/// The columns of `M` are the coefficients of `f / (x - r_i)^j`, generated by
/// the synthetic-division recursion
///
/// ```text
/// m(mu, 1) = 1,   m(mu, j) = 0 (j >= 2)
/// m(c, 1)  = r m(c+1, 1) + a_(mu-c)
/// m(c, j)  = r m(c+1, j) + m(c+1, j-1)
/// ```
///
/// where row `c` holds the coefficient of `x^(c-1)`.
pub fn m_matrix_recursive<K: Scalar>(f: &Polynomial<K>, roots: &[(K, usize)]) -> Matrix<K> {
    let mu = f.degree().expect("nonzero");
    let zero = f.leading().expect("nonzero").zero_in();
    let one = zero.one_in();
    let mut columns: Vec<Vec<K>> = Vec::with_capacity(mu);
    for (r, mult) in roots {
        // block[j][c] for j = 0..mult, c = 0..mu (0-indexed rows).
        let mut block = vec![vec![zero.clone(); mu]; *mult];
        for (j, col) in block.iter_mut().enumerate() {
            col[mu - 1] = if j == 0 { one.clone() } else { zero.clone() };
        }
        for c in (0..mu - 1).rev() {
            for j in 0..*mult {
                let carry = if j == 0 { f.coeff(c + 1) } else { block[j - 1][c + 1].clone() };
                block[j][c] = r.clone() * block[j][c + 1].clone() + carry;
            }
        }
        columns.extend(block);
    }
    Matrix::from_fn(mu, mu, |row, col| columns[col][row].clone())
}

/// `M` by direct division.
pub fn m_matrix<K: Scalar>(f: &Polynomial<K>, roots: &[(K, usize)]) -> Result<Matrix<K>> {
    let mu = f.degree().expect("nonzero");
    let quotients = newton_quotients(f, roots)?;
    Ok(Matrix::from_fn(mu, mu, |row, col| quotients[col].coeff(row)))
}

/// `V_k`, the `mu x mu_k` block with entry `(i, j) = C(i-1, j-1) r_k^(i-j) / g(r_k)`.
pub fn vandermonde_block<K: Scalar>(mu: usize, r: &K, mult: usize, g_at_r: &K) -> Matrix<K> {
    let ginv = g_at_r.inv().expect("g(r) != 0");
    let zero = r.zero_in();
    Matrix::from_fn(mu, mult, |i, j| {
        if i < j {
            zero.clone()
        } else {
            binomial_in(&zero, i, j) * r.pow((i - j) as u64) * ginv.clone()
        }
    })
}

/// `[V_1 ... V_n]`, the modified confluent Vandermonde matrix.
pub fn confluent_vandermonde<K: Scalar>(map: &PointedRationalFunction<K>, roots: &[(K, usize)]) -> Matrix<K> {
    let mu = map.mu();
    let blocks: Vec<Matrix<K>> = roots
        .iter()
        .map(|(r, m)| vandermonde_block(mu, r, *m, &map.g().eval(r)))
        .collect();
    Matrix::hcat(&blocks)
}

pub fn transition_matrices<K: Scalar>(
    map: &PointedRationalFunction<K>,
    sd: Option<&SplitData<K>>,
) -> Result<TransitionMatrices<K>> {
    let l = l_matrix(map);
    let Some(sd) = sd else {
        return Ok(TransitionMatrices {
            l,
            m: None,
            n: None,
            n0: None,
        });
    };
    check_split(map, sd)?;
    let roots = sd.roots_with_multiplicity();
    let m = m_matrix(map.f(), &roots)?;
    let rec = m_matrix_recursive(map.f(), &roots);
    if let Some((i, j)) = rec.first_difference(&m) {
        return Err(Error::IdentityViolated(format!(
            "recursive M differs from direct division at ({}, {})",
            i + 1,
            j + 1
        )));
    }
    let n0 = confluent_vandermonde(map, &roots)
        .inverse()
        .expect("confluent Vandermonde matrix with distinct nodes is invertible");
    let n = &m * &n0;
    Ok(TransitionMatrices {
        l,
        m: Some(m),
        n: Some(n),
        n0: Some(n0),
    })
}

/// Outcome of one congruence check.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// First mismatching entry, 1-based, with the expected (Bezout) and computed values.
    pub failure: Option<(usize, usize, String, String)>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn compare<K: Scalar>(name: &'static str, expected: &Matrix<K>, got: &Matrix<K>) -> Self {
        let failure = expected.first_difference(got).map(|(i, j)| {
            let shown = |m: &Matrix<K>| {
                if i < m.rows() && j < m.cols() {
                    m.get(i, j).to_string()
                } else {
                    "(shape mismatch)".to_string()
                }
            };
            (i + 1, j + 1, shown(expected), shown(got))
        });
        IdentityCheck { name, failure }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass", self.name),
            Some((i, j, e, g)) => write!(f, "{}: FAIL at ({i}, {j}): expected {e}, got {g}", self.name),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CongruenceReport {
    pub checks: Vec<IdentityCheck>,
}

impl CongruenceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

/// Checks `Bez = L S L^T`, and with split data also `Bez = M New M^T` and
/// `Bez = N Van N^T`.
pub fn verify_congruences<K: Scalar>(
    map: &PointedRationalFunction<K>,
    sd: Option<&SplitData<K>>,
) -> Result<CongruenceReport> {
    let bez = bezout_matrix(map).matrix;
    let t = transition_matrices(map, sd)?;
    let mut checks = vec![IdentityCheck::compare(
        "Bez = L S L^T",
        &bez,
        &t.l.congruence(&hankel_matrix(map).matrix),
    )];
    if let (Some(sd), Some(m), Some(n)) = (sd, &t.m, &t.n) {
        let new = newton_matrix(map, sd)?.matrix;
        let van = vandermonde_matrix(map, sd)?.matrix;
        checks.push(IdentityCheck::compare("Bez = M New M^T", &bez, &m.congruence(&new)));
        checks.push(IdentityCheck::compare("Bez = N Van N^T", &bez, &n.congruence(&van)));
    }
    Ok(CongruenceReport { checks })
}
