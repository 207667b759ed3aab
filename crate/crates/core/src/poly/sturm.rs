//! Signed remainder sequences, sign variations and Cauchy indices.

use super::Polynomial;
use crate::error::Result;
use crate::field::{Scalar, Sign};

/// `p_0 = p, p_1 = q, p_{k+1} = -rem(p_{k-1}, p_k)`, stopping before zero.
pub fn signed_remainder_sequence<K: Scalar>(p: &Polynomial<K>, q: &Polynomial<K>) -> Vec<Polynomial<K>> {
    let mut seq = vec![p.clone()];
    if q.is_zero() {
        return seq;
    }
    seq.push(q.clone());
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            return seq;
        }
        seq.push(-r);
    }
}

/// Number of sign changes, zeros skipped.
pub fn variations(signs: impl IntoIterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for s in signs {
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_at_infinity<K: Scalar>(p: &Polynomial<K>, positive: bool) -> Result<Sign> {
    let Some(lc) = p.leading() else {
        return Ok(Sign::Zero);
    };
    let s = lc.sign()?;
    let odd = p.degree().expect("nonzero") % 2 == 1;
    Ok(if !positive && odd { s.flip() } else { s })
}

/// Sign variations of the sequence at `+inf` (`positive`) or `-inf`.
pub fn variations_at_infinity<K: Scalar>(seq: &[Polynomial<K>], positive: bool) -> Result<usize> {
    let signs = seq
        .iter()
        .map(|p| sign_at_infinity(p, positive))
        .collect::<Result<Vec<_>>>()?;
    Ok(variations(signs))
}

pub fn variations_at<K: Scalar>(seq: &[Polynomial<K>], x: &K) -> Result<usize> {
    let signs = seq.iter().map(|p| p.eval(x).sign()).collect::<Result<Vec<_>>>()?;
    Ok(variations(signs))
}

/// Global Cauchy index of `num/den` over the real line, by Sturm-Tarski:
/// `V(-inf) - V(+inf)` of the signed remainder sequence of `(den, num mod den)`.
pub fn cauchy_index<K: Scalar>(num: &Polynomial<K>, den: &Polynomial<K>) -> Result<i64> {
    let reduced = num.rem(den);
    let seq = signed_remainder_sequence(den, &reduced);
    Ok(variations_at_infinity(&seq, false)? as i64 - variations_at_infinity(&seq, true)? as i64)
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn count_roots_between<K: Scalar>(p: &Polynomial<K>, lo: &K, hi: &K) -> Result<usize> {
    let seq = signed_remainder_sequence(p, &p.derivative());
    let a = variations_at(&seq, lo)?;
    let b = variations_at(&seq, hi)?;
    Ok(a.saturating_sub(b))
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots<K: Scalar>(p: &Polynomial<K>) -> Result<usize> {
    let seq = signed_remainder_sequence(p, &p.derivative());
    Ok(variations_at_infinity(&seq, false)? - variations_at_infinity(&seq, true)?)
}
