//! Randomized structural properties over Q, F_p and Q[t]/(t^2 - 2).

mod common;

use bezout_gw::bezforms::bezout_matrix;
use bezout_gw::gw::{diagonalize, gw_equal, signature, Decision, GWClass};
use bezout_gw::parse::parse_rational_function;
use bezout_gw::poly::newton_quotients;
use bezout_gw::poly::resultant;
use bezout_gw::residue::{basis_vectors, gram_matrix, primal_gram, BasisKind, QAlgebra};
use bezout_gw::{Matrix, PointedRationalFunction, Polynomial, Scalar};
use common::{prime_field, rational_extension, rationals, rng, Gen};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

/// Random invertible matrix as a product of elementary operations.
fn invertible<K: Scalar>(gen: &Gen<K>, rng: &mut ChaCha8Rng, n: usize) -> Matrix<K> {
    let mut p = Matrix::identity(n, &gen.one);
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut e = Matrix::identity(n, &gen.one);
        if i == j {
            e.set(i, i, gen.nonzero(rng, 3));
        } else {
            e.set(i, j, gen.scalar(rng, 3));
        }
        p = &p * &e;
    }
    p
}

fn random_symmetric<K: Scalar>(gen: &Gen<K>, rng: &mut ChaCha8Rng, n: usize) -> Matrix<K> {
    loop {
        let mut m = Matrix::zeros(n, n, &gen.one);
        for i in 0..n {
            for j in i..n {
                let v = gen.scalar(rng, 4);
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn series_identity<K: Scalar>(map: &PointedRationalFunction<K>, n: usize) -> bool {
    // g x^n - f sum_{b<=n} s_b x^(n-b) has degree below mu.
    let s = map.reciprocal_series(n);
    let mut coeffs = vec![map.zero(); n];
    for (b, sb) in s.iter().enumerate() {
        coeffs[n - 1 - b] = sb.clone();
    }
    let tail = &(map.g() * &Polynomial::monomial(map.one(), n)) - &(map.f() * &Polynomial::new(coeffs));
    tail.degree_i() < map.mu() as i64
}

fn split_properties<K: Scalar>(gen: &Gen<K>, seed: u64, simple: bool) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let (map, sd) = gen.split_map(&mut r, 1..=5, 4, simple);
    let roots = sd.roots_with_multiplicity();

    let quotients = newton_quotients(map.f(), &roots).unwrap();
    let coefficients = sd.roots.iter().flat_map(|root| root.coefficients.iter());
    let recombined = quotients
        .iter()
        .zip(coefficients)
        .fold(Polynomial::zero(), |acc, (q, a)| &acc + &q.scale(a));
    prop_assert_eq!(recombined, map.g().clone());

    let oracle = roots
        .iter()
        .fold(map.one(), |acc, (root, m)| acc * map.g().eval(root).pow(*m as u64));
    prop_assert_eq!(resultant(map.f(), map.g()), oracle);

    let alg = QAlgebra::new(&map);
    for which in BasisKind::ALL {
        let basis = basis_vectors(&alg, which, Some(&sd)).unwrap();
        let primal = primal_gram(&alg, &basis);
        let dual = gram_matrix(&map, which, Some(&sd)).unwrap().matrix;
        prop_assert_eq!(&primal * &dual, Matrix::identity(map.mu(), &map.one()));
    }
    Ok(())
}

fn map_properties<K: Scalar>(gen: &Gen<K>, seed: u64) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let map = gen.map(&mut r, 1..=6, 5);
    prop_assert_eq!(&PointedRationalFunction::normalize(map.f(), map.g()).unwrap(), &map);
    prop_assert!(series_identity(&map, 2 * map.mu() + 1));

    let alg = QAlgebra::new(&map);
    let a = alg.element(&gen.poly_below(&mut r, map.mu(), 4));
    let b = alg.element(&gen.poly_below(&mut r, map.mu(), 4));
    prop_assert_eq!(alg.beta(&a, &b), alg.beta(&b, &a));

    let inner = gen.map(&mut r, 1..=2, 3);
    let composed = map.compose(&inner).unwrap();
    prop_assert_eq!(composed.mu(), map.mu() * inner.mu());
    Ok(())
}

fn form_properties<K: Scalar>(gen: &Gen<K>, seed: u64) -> Result<(), TestCaseError> {
    let mut r = rng(seed);
    let n = r.gen_range(1..=4);
    let m = random_symmetric(gen, &mut r, n);
    let (d, p) = diagonalize(&m).unwrap();
    let mut diag = Matrix::zeros(n, n, &gen.one);
    for (i, v) in d.iter().enumerate() {
        diag.set(i, i, v.clone());
    }
    prop_assert_eq!(p.transpose().congruence(&m), diag);

    let q = invertible(gen, &mut r, n);
    let moved = q.congruence(&m);
    let (a, b) = (GWClass::of_matrix(&m).unwrap(), GWClass::of_matrix(&moved).unwrap());
    prop_assert_ne!(gw_equal(&a, &b).unwrap(), Decision::NotEqual);
    let (ia, ib) = (a.invariants(), b.invariants());
    prop_assert_eq!(ia.rank, ib.rank);
    prop_assert!(ia.discriminant.same_class(&ib.discriminant) != Some(false));
    prop_assert_eq!(ia.signature, ib.signature);
    prop_assert_eq!(ia.hasse, ib.hasse);
    Ok(())
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn square_classes_multiply(a in -60i64..60, b in -60i64..60, p in prop::sample::select(vec![3u64, 5, 7, 11, 13])) {
        prop_assume!(a != 0 && b != 0);
        let (x, y) = (rationals().int(a), rationals().int(b));
        let prod = (x.clone() * y.clone()).square_class().unwrap();
        prop_assert_eq!(prod, x.square_class().unwrap().times(&y.square_class().unwrap()).unwrap());

        let gen = prime_field(p);
        let (x, y) = (gen.int(a), gen.int(b));
        prop_assume!(!x.is_zero() && !y.is_zero());
        let prod = (x * y).square_class().unwrap();
        prop_assert_eq!(prod, x.square_class().unwrap().times(&y.square_class().unwrap()).unwrap());
    }

    #[test]
    fn maps_over_q(seed in any::<u64>()) {
        map_properties(&rationals(), seed)?;
    }

    #[test]
    fn maps_over_fp(seed in any::<u64>()) {
        map_properties(&prime_field(11), seed)?;
    }

    #[test]
    fn maps_over_extension(seed in any::<u64>()) {
        map_properties(&rational_extension("Q[t]/(t^2-2)"), seed)?;
    }

    #[test]
    fn split_maps_over_q(seed in any::<u64>(), simple in any::<bool>()) {
        split_properties(&rationals(), seed, simple)?;
    }

    #[test]
    fn split_maps_over_fp(seed in any::<u64>(), simple in any::<bool>()) {
        split_properties(&prime_field(13), seed, simple)?;
    }

    #[test]
    fn split_maps_over_extension(seed in any::<u64>()) {
        split_properties(&rational_extension("Q[t]/(t^2-2)"), seed, true)?;
    }

    #[test]
    fn forms_over_q(seed in any::<u64>()) {
        form_properties(&rationals(), seed)?;
    }

    #[test]
    fn forms_over_fp(seed in any::<u64>()) {
        form_properties(&prime_field(7), seed)?;
    }

    #[test]
    fn signature_is_additive(s1 in any::<u64>(), s2 in any::<u64>()) {
        let gen = rationals();
        let (a, b) = (gen.map(&mut rng(s1), 1..=5, 5), gen.map(&mut rng(s2), 1..=5, 5));
        let (ba, bb) = (bezout_matrix(&a).matrix, bezout_matrix(&b).matrix);
        let sum = Matrix::block_diagonal(&[ba.clone(), bb.clone()], &gen.one);
        prop_assert_eq!(signature(&sum).unwrap(), signature(&ba).unwrap() + signature(&bb).unwrap());
    }

    #[test]
    fn parse_print_round_trip(seed in any::<u64>()) {
        let gen = rationals();
        let mut r = rng(seed);
        let deg = r.gen_range(0..8);
        let p = gen.poly(&mut r, deg, 9);
        let (num, den) = parse_rational_function(&p.to_string()).unwrap();
        prop_assert_eq!(num, p);
        prop_assert_eq!(den, Polynomial::constant(gen.one.clone()));
    }
}
