use super::Polynomial;
use crate::field::Scalar;

/// First `count` coefficients `s_1, s_2, ...` of `g/f = s_1/x + s_2/x^2 + ...`
/// in `k[[1/x]]`, computed by the recurrence that long division by `f` induces.
///
/// Requires `deg g < deg f`.
pub fn reciprocal_series<K: Scalar>(f: &Polynomial<K>, g: &Polynomial<K>, count: usize) -> Vec<K> {
    let mu = f.degree().expect("nonzero denominator");
    assert!(g.degree_i() < mu as i64, "series needs deg g < deg f");
    let lead_inv = f.leading().expect("nonzero").inv().expect("nonzero");
    let mut s: Vec<K> = Vec::with_capacity(count);
    for b in 1..=count {
        // Coefficient of x^{mu-b} in f * sum s_j x^{-j} must equal g_{mu-b}.
        let mut acc = if b <= mu { g.coeff(mu - b) } else { lead_inv.zero_in() };
        for k in 0..mu {
            // f_k s_j contributes to x^{k-j}; k - j = mu - b  =>  j = b - mu + k.
            if let Some(j) = (b + k).checked_sub(mu) {
                if j >= 1 && j < b {
                    acc = acc - f.coeff(k) * s[j - 1].clone();
                }
            }
        }
        s.push(acc * lead_inv.clone());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::tests::qp;
    use crate::Rational;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| Rational::from_integer(n.into())).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(reciprocal_series(&qp(&[0, 1]), &qp(&[1]), 1), ints(&[1]));
        assert_eq!(reciprocal_series(&qp(&[0, -1, 1]), &qp(&[1]), 3), ints(&[0, 1, 1]));
        assert_eq!(reciprocal_series(&qp(&[0, 0, 1]), &qp(&[1]), 3), ints(&[0, 1, 0]));
    }

    #[test]
    fn multiplying_back_recovers_g() {
        // f = x^3 - 2x + 5, g = 3x^2 - x + 4
        let f = qp(&[5, -2, 0, 1]);
        let g = qp(&[4, -1, 3]);
        let n = 12;
        let s = reciprocal_series(&f, &g, n);
        // f(x) * sum_{b<=n} s_b x^{-b}: coefficient of x^e for e > 3 - n - 1 must match g.
        for e in (3 - n as i64)..=3 {
            let mut c = Rational::from_integer(0.into());
            for k in 0..=3i64 {
                let b = k - e;
                if b >= 1 && b <= n as i64 {
                    c += f.coeff(k as usize) * s[(b - 1) as usize].clone();
                }
            }
            let expected = if e >= 0 { g.coeff(e as usize) } else { Rational::from_integer(0.into()) };
            assert_eq!(c, expected, "x^{e}");
        }
    }
}
