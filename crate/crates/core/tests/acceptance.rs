//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Every check is exact. Random corpora come from a fixed ChaCha seed so runs
//! are reproducible.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use bezout_gw::bezforms::{
    antitriangular_hankel, bezout_matrix, hankel_matrix, newton_matrix, transition_matrices, vandermonde_matrix,
    verify_congruences,
};
use bezout_gw::degree::{
    d_from_roots, degree_sum_check, global_cauchy_index, signed_resultant, topological_degree, unstable_class,
};
use bezout_gw::gw::{antitriangular_hankel_class, gw_equal, signature, Decision, GWClass};
use bezout_gw::parse::parse_rational_function;
use bezout_gw::poly::Polynomial;
use bezout_gw::residue::{eta_from_roots, gram_matrix, primal_monomial_gram, BasisKind, QAlgebra};
use bezout_gw::{Matrix, PointedRationalFunction, QMap, Rational, Scalar, SplitData};
use common::{prime_field, rational_extension, rationals, rng, Gen};
use num_traits::Zero;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn parsed(text: &str) -> QMap {
    let (f, g) = parse_rational_function(text).unwrap();
    PointedRationalFunction::normalize(&f, &g).unwrap()
}

// ---------------------------------------------------------------- criterion 1

fn criterion_1() -> Outcome {
    let f1 = parsed("x^2 - x");
    let f2 = parsed("(x^2-1)/2");
    let (u1, u2) = (unstable_class(&f1).map_err(|e| e.to_string())?, unstable_class(&f2).map_err(|e| e.to_string())?);
    let (i1, i2) = (u1.w.invariants(), u2.w.invariants());
    ensure(i1.rank == 2 && i2.rank == 2, || "ranks differ from 2".into())?;
    ensure(i1.signature == Some(0) && i2.signature == Some(0), || "signatures not 0".into())?;
    ensure(
        i1.discriminant.representative() == &q(-1) && i2.discriminant.representative() == &q(-1),
        || "discriminants not -1".into(),
    )?;
    ensure(i1.hasse == i2.hasse, || "Hasse invariants differ".into())?;
    ensure(gw_equal(&u1.w, &u2.w).unwrap() == Decision::Equal, || "w(F1) != w(F2)".into())?;
    ensure(u1.d == q(-1), || format!("d(F1) = {}", u1.d))?;
    ensure(u2.d == q(-4), || format!("d(F2) = {}", u2.d))?;
    Ok(format!("w = {} for both, d(F1) = {}, d(F2) = {}", u1.w, u1.d, u2.d))
}

// ---------------------------------------------------------------- criterion 2

fn det_identity<K: Scalar>(gen: &Gen<K>, rng: &mut ChaCha8Rng, count: usize) -> Result<(), String> {
    for _ in 0..count {
        
        let map = gen.map(rng, 1..=10, 6);
        let det = bezout_matrix(&map).matrix.det();
        let res = signed_resultant(&map);
        ensure(det == res, || format!("{map}: det Bez = {det}, signed resultant = {res}"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let mut r = rng(2);
    det_identity(&rationals(), &mut r, 300)?;
    det_identity(&prime_field(7), &mut r, 100)?;
    det_identity(&prime_field(101), &mut r, 100)?;
    det_identity(&prime_field(1_000_003), &mut r, 100)?;
    Ok("600 maps (300 over Q, 300 over F_7, F_101, F_1000003), mu <= 10".into())
}

// ---------------------------------------------------------------- criterion 3

fn congruences_general<K: Scalar>(gen: &Gen<K>, rng: &mut ChaCha8Rng, count: usize, max_mu: usize) -> Result<(), String> {
    for _ in 0..count {
        let map = gen.map(rng, 1..=max_mu, 5);
        let report = verify_congruences(&map, None).map_err(|e| e.to_string())?;
        ensure(report.all_passed(), || format!("{map}: {:?}", report.checks))?;
    }
    Ok(())
}

fn congruences_split<K: Scalar>(gen: &Gen<K>, rng: &mut ChaCha8Rng, count: usize, max_mu: usize) -> Result<(), String> {
    for _ in 0..count {
        let (map, sd) = gen.split_map(rng, 1..=max_mu, 4, false);
        let report = verify_congruences(&map, Some(&sd)).map_err(|e| e.to_string())?;
        ensure(report.checks.len() == 3 && report.all_passed(), || {
            format!("{map}: {:?}", report.checks)
        })?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    congruences_general(&rationals(), &mut r, 300, 10)?;
    congruences_general(&prime_field(101), &mut r, 150, 10)?;
    congruences_general(&rational_extension("Q[t]/(t^2-2)"), &mut r, 50, 6)?;
    congruences_split(&rationals(), &mut r, 100, 8)?;
    congruences_split(&prime_field(101), &mut r, 60, 8)?;
    congruences_split(&rational_extension("Q[t]/(t^2-2)"), &mut r, 30, 6)?;
    congruences_split(&rational_extension("Q[t]/(t^2+2)"), &mut r, 30, 6)?;
    Ok("L S L^T on 500 maps; M New M^T and N Van N^T on 220 split maps (Q, F_101, Q(sqrt 2), Q(sqrt -2))".into())
}

// ---------------------------------------------------------------- criterion 4

fn gram_rows_general<K: Scalar>(gen: &Gen<K>, rng: &mut ChaCha8Rng, count: usize, max_mu: usize) -> Result<(), String> {
    for _ in 0..count {
        let map = gen.map(rng, 1..=max_mu, 5);
        table_rows(&map, None)?;
    }
    Ok(())
}

fn gram_rows_split<K: Scalar>(gen: &Gen<K>, rng: &mut ChaCha8Rng, count: usize, max_mu: usize) -> Result<(), String> {
    for _ in 0..count {
        let (map, sd) = gen.split_map(rng, 1..=max_mu, 4, false);
        table_rows(&map, Some(&sd))?;
    }
    Ok(())
}

fn table_rows<K: Scalar>(map: &PointedRationalFunction<K>, sd: Option<&SplitData<K>>) -> Result<(), String> {
    let err = |e: bezout_gw::Error| format!("{map}: {e}");
    let bez = bezout_matrix(map).matrix;
    ensure(gram_matrix(map, BasisKind::Monomial, None).map_err(err)?.matrix == bez, || format!("{map}: monomial row"))?;
    let s = hankel_matrix(map).matrix;
    ensure(gram_matrix(map, BasisKind::Horner, None).map_err(err)?.matrix == s, || format!("{map}: Horner row"))?;
    if let Some(sd) = sd {
        let new = newton_matrix(map, sd).map_err(err)?.matrix;
        ensure(gram_matrix(map, BasisKind::Newton, Some(sd)).map_err(err)?.matrix == new, || format!("{map}: Newton row"))?;
        let van = vandermonde_matrix(map, sd).map_err(err)?.matrix;
        ensure(
            gram_matrix(map, BasisKind::Vandermonde, Some(sd)).map_err(err)?.matrix == van,
            || format!("{map}: Vandermonde row"),
        )?;
    }
    let primal = primal_monomial_gram(map).matrix;
    ensure(&primal * &bez == Matrix::identity(map.mu(), &map.one()), || {
        format!("{map}: Gram(primal monomial) Bez != I")
    })
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    gram_rows_general(&rationals(), &mut r, 300, 8)?;
    gram_rows_general(&prime_field(101), &mut r, 150, 8)?;
    gram_rows_general(&rational_extension("Q[t]/(t^2-2)"), &mut r, 50, 5)?;
    gram_rows_split(&rationals(), &mut r, 100, 7)?;
    gram_rows_split(&prime_field(101), &mut r, 60, 7)?;
    gram_rows_split(&rational_extension("Q[t]/(t^2-2)"), &mut r, 30, 5)?;
    gram_rows_split(&rational_extension("Q[t]/(t^2+2)"), &mut r, 30, 5)?;
    Ok("dual Gram = Bez, S on 500 maps; = New, Van on 220 split maps; Gram(primal) Bez = I throughout".into())
}

// ---------------------------------------------------------------- criterion 5

fn eta_oracle<K: Scalar>(gen: &Gen<K>, rng: &mut ChaCha8Rng, count: usize, max_mu: usize) -> Result<(), String> {
    for _ in 0..count {
        let (map, sd) = gen.split_map(rng, 1..=max_mu, 5, true);
        let alg = QAlgebra::new(&map);
        let roots: Vec<K> = sd.roots.iter().map(|r| r.root.clone()).collect();
        for _ in 0..4 {
            let p = gen.poly_below(rng, 2 * map.mu(), 5);
            let (a, b) = (alg.eta(&alg.element(&p)), eta_from_roots(&map, &roots, &p));
            ensure(a == b, || format!("{map}, p = {p}: Delta eta = {a}, oracle = {b}"))?;
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    eta_oracle(&rationals(), &mut r, 120, 8)?;
    eta_oracle(&prime_field(101), &mut r, 60, 8)?;
    eta_oracle(&rational_extension("Q[t]/(t^2-2)"), &mut r, 20, 5)?;
    eta_oracle(&rational_extension("Q[t]/(t^2+2)"), &mut r, 20, 5)?;
    Ok("220 separable split maps, 4 random p each".into())
}

// ---------------------------------------------------------------- criterion 6

fn criterion_6() -> Outcome {
    let spot = |text: &str, want: i64| -> Result<(), String> {
        let got = topological_degree(&parsed(text)).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{text}: degree {got}, expected {want}"))
    };
    spot("x^3 - x", 1)?;
    spot("x^2 - x", 0)?;
    for mu in 1..=9 {
        spot(&format!("x^{mu}"), (mu % 2) as i64)?;
    }
    let gen = rationals();
    let mut r = rng(6);
    let mut nonsplit = 0;
    for k in 0..500 {
        let map = if k % 5 == 0 {
            gen.split_map(&mut r, 1..=8, 4, false).0
        } else {
            gen.map(&mut r, 1..=10, 4)
        };
        let sig = signature(&bezout_matrix(&map).matrix).map_err(|e| e.to_string())?;
        let report = global_cauchy_index(map.g(), map.f()).map_err(|e| format!("{map}: {e}"))?;
        let deg = topological_degree(&map).map_err(|e| format!("{map}: {e}"))?;
        if report.nonsplit_factor.degree().unwrap_or(0) > 0 {
            nonsplit += 1;
        }
        ensure(sig == report.index && deg == sig, || {
            format!("{map}: signature {sig}, Cauchy index {}, degree {deg}", report.index)
        })?;
    }
    ensure(nonsplit >= 100, || format!("only {nonsplit} non-split maps"))?;
    Ok(format!("500 maps over Q ({nonsplit} with a non-split factor) plus spot values"))
}

// ---------------------------------------------------------------- criterion 7

fn criterion_7() -> Outcome {
    let gen = rationals();
    let mut r = rng(7);
    for mu in 1..=8 {
        for _ in 0..100 {
            let mut a: Vec<Rational> = (0..mu - 1).map(|_| gen.scalar(&mut r, 9)).collect();
            a.push(gen.nonzero(&mut r, 9));
            let closed = antitriangular_hankel_class(&a).map_err(|e| e.to_string())?;
            let explicit = GWClass::of_matrix(&antitriangular_hankel(&a)).map_err(|e| e.to_string())?;
            let (ic, ie) = (closed.invariants(), explicit.invariants());
            ensure(ic.rank == ie.rank && ic.signature == ie.signature, || format!("A = {a:?}: rank/signature"))?;
            ensure(ic.discriminant == ie.discriminant, || format!("A = {a:?}: discriminant"))?;
            ensure(ic.hasse == ie.hasse, || format!("A = {a:?}: Hasse {:?} vs {:?}", ic.hasse, ie.hasse))?;
            ensure(gw_equal(&closed, &explicit).unwrap() == Decision::Equal, || format!("A = {a:?}"))?;
        }
    }
    Ok("mu = 1..8, 100 random coefficient vectors each".into())
}

// ---------------------------------------------------------------- criterion 8

fn criterion_8() -> Outcome {
    let worked = parsed("(x-1)^2*(x+1)");
    let sd = worked.find_split_data().ok_or("worked case does not split")?;
    let report = degree_sum_check(&worked, &sd).map_err(|e| e.to_string())?;
    ensure(report.passed(), || "worked case: global != local sum".into())?;
    let locals: Vec<String> = report.local.iter().map(|(_, c)| c.to_string()).collect();
    ensure(locals.contains(&"H".to_string()) && locals.contains(&"<1>".to_string()), || {
        format!("worked case local classes {locals:?}")
    })?;
    // <1/4> and <1> are the same square class.
    ensure(report.local_sum.invariants().signature == Some(1), || "worked case signature".into())?;

    let gen = rationals();
    let mut r = rng(8);
    for _ in 0..200 {
        let (map, sd) = gen.split_map(&mut r, 1..=6, 3, false);
        let report = degree_sum_check(&map, &sd).map_err(|e| format!("{map}: {e}"))?;
        ensure(report.passed(), || format!("{map}: {} vs {}", report.global, report.local_sum))?;
    }
    Ok(format!("worked case H + <1/4> = {}, signature 1; 200 random split maps over Q", report.local_sum))
}

// ---------------------------------------------------------------- criterion 9

fn formula_for_d<K: Scalar>(gen: &Gen<K>, rng: &mut ChaCha8Rng, count: usize, max_mu: usize) -> Result<(), String> {
    for _ in 0..count {
        let (map, sd) = gen.split_map(rng, 1..=max_mu, 5, true);
        let d = bezout_matrix(&map).matrix.det();
        let via = d_from_roots(&map, &sd).map_err(|e| e.to_string())?;
        ensure(d == via, || format!("{map}: det Bez = {d}, Disc(f) prod g/f' = {via}"))?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    formula_for_d(&rationals(), &mut r, 150, 9)?;
    formula_for_d(&prime_field(1_000_003), &mut r, 50, 9)?;
    formula_for_d(&rational_extension("Q[t]/(t^2-2)"), &mut r, 20, 5)?;
    Ok("220 simple-split maps (Q, F_1000003, Q(sqrt 2))".into())
}

// --------------------------------------------------------------- criterion 10

fn criterion_10() -> Outcome {
    let gen = rationals();
    let mut r = rng(10);
    for _ in 0..60 {
        let roots = gen.roots(&mut r, 2, 20);
        let (r1, r2) = (roots[0].clone(), roots[1].clone());
        let f = &Polynomial::linear_root(&r1) * &Polynomial::linear_root(&r2);
        let (b0, b1) = loop {
            let (b0, b1) = (gen.nonzero(&mut r, 20), gen.scalar(&mut r, 20));
            if !(b0.clone() * r1.clone() + b1.clone()).is_zero() && !(b0.clone() * r2.clone() + b1.clone()).is_zero() {
                break (b0, b1);
            }
        };
        let planted = vec![(r1.clone(), 1), (r2.clone(), 1)];

        let unit = PointedRationalFunction::normalize(&f, &Polynomial::constant(q(1))).unwrap();
        let sd = unit.split_data(&planted).map_err(|e| e.to_string())?;
        let det_m = transition_matrices(&unit, Some(&sd)).unwrap().m.unwrap().det();
        ensure(det_m == r1.clone() - r2.clone(), || format!("det M = {det_m} at r = {r1}, {r2}"))?;

        let g = Polynomial::new(vec![b1.clone(), b0.clone()]);
        let lin = PointedRationalFunction::normalize(&f, &g).unwrap();
        let sd = lin.split_data(&planted).map_err(|e| e.to_string())?;
        let det_n = transition_matrices(&lin, Some(&sd)).unwrap().n.unwrap().det();
        let want = -((b0.clone() * r1.clone() + b1.clone()) * (b0 * r2.clone() + b1));
        ensure(det_n == want, || format!("det N = {det_n}, expected {want}"))?;
    }
    Ok("60 random rational instantiations of (r1, r2, b0, b1)".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("unstable pair separates F1 and F2", criterion_1),
        ("det Bez = (-1)^(n(n-1)/2) Res(f, g)", criterion_2),
        ("congruences L S L^T, M New M^T, N Van N^T", criterion_3),
        ("dual-basis Gram matrices", criterion_4),
        ("residue functional vs root-sum oracle", criterion_5),
        ("signature = Cauchy index = degree", criterion_6),
        ("anti-triangular Hankel closed form", criterion_7),
        ("degree-sum formula", criterion_8),
        ("d = Disc(f) prod g(r)/f'(r)", criterion_9),
        ("det M and det N closed forms", criterion_10),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2}s]", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
