use super::Polynomial;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;

/// One root of `f` together with its partial-fraction coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct RootData<K> {
    pub root: K,
    pub multiplicity: usize,
    /// `A(1), ..., A(multiplicity)`: the coefficients of `1/(x - r)^j` in `g/f`.
    pub coefficients: Vec<K>,
}

impl<K: Scalar> RootData<K> {
    /// The coefficient of the highest-order pole, always nonzero.
    pub fn top_coefficient(&self) -> &K {
        self.coefficients.last().expect("multiplicity >= 1")
    }
}

/// Roots of `f` over the working field with the partial-fraction expansion
/// `g/f = sum_i sum_j A_i(j) / (x - r_i)^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitData<K> {
    pub roots: Vec<RootData<K>>,
}

impl<K: Scalar> SplitData<K> {
    pub fn degree(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.roots.iter().all(|r| r.multiplicity == 1)
    }

    pub fn roots_with_multiplicity(&self) -> Vec<(K, usize)> {
        self.roots.iter().map(|r| (r.root.clone(), r.multiplicity)).collect()
    }
}

/// The quotients `f/(x - r_i)^j` in root order, `j = 1..mu_i` within each root.
pub fn newton_quotients<K: Scalar>(f: &Polynomial<K>, roots: &[(K, usize)]) -> Result<Vec<Polynomial<K>>> {
    let mut out = Vec::new();
    for (r, m) in roots {
        let lin = Polynomial::linear_root(r);
        let mut q = f.clone();
        for _ in 0..*m {
            q = q.exact_div(&lin).ok_or_else(|| {
                Error::SplitDataInconsistent(format!("(x - {r})^{m} does not divide {f}"))
            })?;
            out.push(q.clone());
        }
    }
    Ok(out)
}

/// Checks that the roots are distinct and `prod (x - r_i)^{mu_i} = f` (f monic).
pub fn check_factorization<K: Scalar>(f: &Polynomial<K>, roots: &[(K, usize)]) -> Result<()> {
    let lead = f
        .leading()
        .ok_or_else(|| Error::SplitDataInconsistent("zero polynomial".into()))?;
    for (i, (a, _)) in roots.iter().enumerate() {
        if roots[..i].iter().any(|(b, _)| b == a) {
            return Err(Error::SplitDataInconsistent(format!("root {a} listed twice")));
        }
    }
    if roots.iter().any(|(_, m)| *m == 0) {
        return Err(Error::SplitDataInconsistent("zero multiplicity".into()));
    }
    let mut prod = Polynomial::constant(lead.clone());
    for (r, m) in roots {
        prod = &prod * &Polynomial::linear_root(r).pow(*m);
    }
    if &prod != f {
        return Err(Error::SplitDataInconsistent(format!(
            "roots do not factor {f}"
        )));
    }
    Ok(())
}

/// Partial fractions of `g/f` over the supplied factorization of `f`.
///
/// The coefficients come from solving the linear system obtained by clearing
/// denominators, `g = sum A_i(j) f/(x - r_i)^j`, which works in every odd
/// characteristic (no Taylor coefficients, hence no factorials).
pub fn partial_fractions<K: Scalar>(
    f: &Polynomial<K>,
    g: &Polynomial<K>,
    roots: &[(K, usize)],
) -> Result<SplitData<K>> {
    check_factorization(f, roots)?;
    let mu = f.degree().expect("nonzero");
    if g.degree_i() >= mu as i64 {
        return Err(Error::NotPointed("partial fractions need deg g < deg f".into()));
    }
    let quotients = newton_quotients(f, roots)?;
    let system = Matrix::from_fn(mu, mu, |row, col| quotients[col].coeff(row));
    let rhs: Vec<K> = (0..mu).map(|i| g.coeff(i)).collect();
    let sol = system
        .solve(&rhs)
        .ok_or_else(|| Error::SplitDataInconsistent("singular partial-fraction system".into()))?;

    let recombined = quotients
        .iter()
        .zip(&sol)
        .fold(Polynomial::zero(), |acc, (q, a)| &acc + &q.scale(a));
    if &recombined != g {
        return Err(Error::IdentityViolated(
            "partial fractions do not recombine to g".into(),
        ));
    }

    let mut data = Vec::with_capacity(roots.len());
    let mut offset = 0;
    for (r, m) in roots {
        let coefficients = sol[offset..offset + m].to_vec();
        offset += m;
        if coefficients.last().expect("m >= 1").is_zero() {
            return Err(Error::SplitDataInconsistent(format!(
                "x - {r} divides both f and g"
            )));
        }
        data.push(RootData {
            root: r.clone(),
            multiplicity: *m,
            coefficients,
        });
    }
    Ok(SplitData { roots: data })
}
