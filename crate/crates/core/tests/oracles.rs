mod common;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dsgenus::cli_io::{builtin, BUILTIN_NAMES};
use dsgenus::covers::branched_cover_order;
use dsgenus::exactalg::cyclotomic::divisors;
use dsgenus::exactalg::rational::int;
use dsgenus::exactalg::{cyclotomic, resultant, LaurentPoly, Rational};
use dsgenus::lt_signature::{rho0, SignatureConfig};
use dsgenus::parity::arf;

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> LaurentPoly {
    let deg = rng.gen_range(0..=max_deg);
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-4..=4)).collect();
    if c[deg] == 0 {
        c[deg] = 1;
    }
    LaurentPoly::from_ints(&c)
}

/// Sylvester matrix with the rows of `p` first, coefficients from the top.
fn sylvester(p: &[Rational], q: &[Rational]) -> Vec<Vec<Rational>> {
    let (n, m) = (p.len() - 1, q.len() - 1);
    let size = n + m;
    let mut rows = vec![];
    for shift in 0..m {
        let mut r = vec![Rational::zero(); size];
        for (i, c) in p.iter().rev().enumerate() {
            r[shift + i] = c.clone();
        }
        rows.push(r);
    }
    for shift in 0..n {
        let mut r = vec![Rational::zero(); size];
        for (i, c) in q.iter().rev().enumerate() {
            r[shift + i] = c.clone();
        }
        rows.push(r);
    }
    rows
}

fn coeffs(p: &LaurentPoly) -> Vec<Rational> {
    let (_, poly) = p.canonical().to_poly();
    poly.coeffs().to_vec()
}

#[test]
fn resultant_matches_sylvester_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let p = random_poly(&mut rng, 5);
        let q = random_poly(&mut rng, 5);
        let (a, b) = (coeffs(&p), coeffs(&q));
        if a.len() == 1 && b.len() == 1 {
            continue;
        }
        let expected = common::det_q(sylvester(&a, &b));
        assert_eq!(resultant(&p, &q), expected, "Res({p}, {q})");
    }
}

#[test]
fn cyclotomic_products_recover_t_n_minus_one() {
    for n in 1..=120u64 {
        let product = divisors(n)
            .into_iter()
            .fold(LaurentPoly::one(), |acc, d| &acc * &cyclotomic(d));
        let expected = LaurentPoly::from_terms([(n as i64, int(1)), (0, int(-1))]);
        assert_eq!(product, expected, "n = {n}");
    }
}

#[test]
fn rho0_matches_riemann_sum() {
    let cfg = SignatureConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let steps = 4000;
    for i in 0..20 {
        let v = common::random_seifert(&mut rng, 1 + i % 2, 3);
        let k = common::knot(v.clone());
        let exact = rho0(&k, &cfg).unwrap();
        let approx = common::riemann_rho0(&v, steps);
        // At most `size` jumps, each spoiling one panel by at most 2·size.
        let size = v.size() as f64;
        let tol = 2.0 * size * size / steps as f64;
        let mid = common::rational_to_f64(&((exact.lower() + exact.upper()) / int(2)));
        assert!(
            (mid - approx).abs() <= tol,
            "{v:?}: exact {exact}, riemann {approx}"
        );
    }
    let left = builtin("left_trefoil").unwrap();
    let approx = common::riemann_rho0(left.seifert().unwrap(), steps);
    assert!((approx - 4.0 / 3.0).abs() < 1e-3);
}

#[test]
fn arf_matches_quadratic_refinement() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..200 {
        let v = common::random_seifert(&mut rng, 1 + i % 2, 4);
        let k = common::knot(v.clone());
        assert_eq!(arf(&k).value(), common::arf_by_refinement(&v), "{v:?}");
    }
    for name in BUILTIN_NAMES {
        let k = builtin(name).unwrap();
        assert_eq!(
            arf(&k).value(),
            common::arf_by_refinement(k.seifert().unwrap())
        );
    }
}

#[test]
fn cover_orders_match_complex_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut knots: Vec<_> = BUILTIN_NAMES.iter().map(|n| builtin(n).unwrap()).collect();
    knots.extend((0..10).map(|i| common::knot(common::random_seifert(&mut rng, 1 + i % 2, 2))));
    for k in &knots {
        let delta = k.alexander_polynomial();
        for n in 2..=12 {
            let oracle = common::complex_cover_product(&delta, n);
            match branched_cover_order(k, n).unwrap().order.finite() {
                None => assert!(oracle < 1e-6, "{} n={n}: {oracle}", k.name),
                Some(o) => {
                    let o: f64 = o.to_string().parse().unwrap();
                    assert!((o - oracle).abs() <= 1e-7 * o.max(1.0), "{} n={n}", k.name);
                }
            }
        }
    }
}

#[test]
fn cover_order_two_is_determinant() {
    for name in BUILTIN_NAMES {
        let k = builtin(name).unwrap();
        let det = k.alexander_polynomial().eval(&int(-1)).abs();
        let order = branched_cover_order(&k, 2).unwrap();
        assert_eq!(
            order.order.finite().cloned(),
            Some(det.to_integer()),
            "{name}"
        );
    }
}
