//! Seeded generators of random pointed rational functions over every field family.
#![allow(dead_code)]

use bezout_gw::field::{AnyField, FieldDescriptor};
use bezout_gw::poly::Polynomial;
use bezout_gw::{Fp, PointedRationalFunction, QExt, Rational, Scalar, SplitData};
use num_traits::One;
use std::ops::RangeInclusive;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws scalars in one field. `generator` is the class of `t` for extensions.
#[derive(Clone, Debug)]
pub struct Gen<K> {
    pub one: K,
    pub generator: Option<K>,
    /// Allow denominators 2 and 3 (meaningful over Q only).
    pub fractions: bool,
}

pub fn rationals() -> Gen<Rational> {
    Gen {
        one: Rational::one(),
        generator: None,
        fractions: true,
    }
}

pub fn prime_field(p: u64) -> Gen<Fp> {
    Gen {
        one: Fp::new(1, p).unwrap(),
        generator: None,
        fractions: false,
    }
}

pub fn rational_extension(desc: &str) -> Gen<QExt> {
    match FieldDescriptor::parse(desc).unwrap().build().unwrap() {
        AnyField::RationalExt(ctx) => Gen {
            one: ctx.one,
            generator: ctx.generator,
            fractions: false,
        },
        other => panic!("not an extension of Q: {other:?}"),
    }
}

impl<K: Scalar> Gen<K> {
    pub fn int(&self, n: i64) -> K {
        self.one.int_in(n)
    }

    pub fn scalar(&self, rng: &mut ChaCha8Rng, range: i64) -> K {
        let mut v = self.int(rng.gen_range(-range..=range));
        if let Some(t) = &self.generator {
            if rng.gen_bool(0.5) {
                v = v + t.clone() * self.int(rng.gen_range(-range..=range));
            }
        }
        if self.fractions && rng.gen_bool(0.25) {
            v = v / self.int(rng.gen_range(2..=3));
        }
        v
    }

    pub fn nonzero(&self, rng: &mut ChaCha8Rng, range: i64) -> K {
        loop {
            let v = self.scalar(rng, range);
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Random polynomial of degree below `bound`.
    pub fn poly_below(&self, rng: &mut ChaCha8Rng, bound: usize, range: i64) -> Polynomial<K> {
        let deg = rng.gen_range(0..bound);
        self.poly(rng, deg, range)
    }

    /// Random polynomial of exact degree `deg`.
    pub fn poly(&self, rng: &mut ChaCha8Rng, deg: usize, range: i64) -> Polynomial<K> {
        let mut c: Vec<K> = (0..deg).map(|_| self.scalar(rng, range)).collect();
        c.push(self.nonzero(rng, range));
        Polynomial::new(c)
    }

    pub fn monic(&self, rng: &mut ChaCha8Rng, deg: usize, range: i64) -> Polynomial<K> {
        let mut c: Vec<K> = (0..deg).map(|_| self.scalar(rng, range)).collect();
        c.push(self.one.clone());
        Polynomial::new(c)
    }

    /// A valid pointed map with `deg f = mu`; `f` need not split.
    pub fn map(&self, rng: &mut ChaCha8Rng, mus: RangeInclusive<usize>, range: i64) -> PointedRationalFunction<K> {
        let mu = rng.gen_range(mus);
        loop {
            let f = self.monic(rng, mu, range);
            let g = self.poly_below(rng, mu, range);
            if f.gcd(&g).degree() == Some(0) {
                return PointedRationalFunction::normalize(&f, &g).unwrap();
            }
        }
    }

    /// Distinct random roots.
    pub fn roots(&self, rng: &mut ChaCha8Rng, count: usize, range: i64) -> Vec<K> {
        let mut out: Vec<K> = Vec::with_capacity(count);
        while out.len() < count {
            let r = self.scalar(rng, range);
            if !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }

    /// A map whose `f` splits with planted roots. With `simple`, every
    /// multiplicity is 1; otherwise multiplicities are random.
    pub fn split_map(
        &self,
        rng: &mut ChaCha8Rng,
        mus: RangeInclusive<usize>,
        range: i64,
        simple: bool,
    ) -> (PointedRationalFunction<K>, SplitData<K>) {
        let mu = rng.gen_range(mus);
        let mut mults = Vec::new();
        let mut left = mu;
        while left > 0 {
            let m = if simple { 1 } else { rng.gen_range(1..=left.min(3)) };
            mults.push(m);
            left -= m;
        }
        let roots = self.roots(rng, mults.len(), range);
        let planted: Vec<(K, usize)> = roots.into_iter().zip(mults).collect();
        let mut f = Polynomial::constant(self.one.clone());
        for (r, m) in &planted {
            f = &f * &Polynomial::linear_root(r).pow(*m);
        }
        loop {
            let g = self.poly_below(rng, mu, range);
            if planted.iter().all(|(r, _)| !g.eval(r).is_zero()) {
                let map = PointedRationalFunction::normalize(&f, &g).unwrap();
                let sd = map.split_data(&planted).unwrap();
                return (map, sd);
            }
        }
    }
}
