use pivotlab_core::farey::Triangle;
use pivotlab_core::kleinian::{
    commutator, complex_length, fricke_residual, length_residual, oracle_compare, slope_to_word, trace_of_word,
    triple_to_matrices, MarkoffSeed, Mat2,
};
use pivotlab_core::num::bigcomplex::bf_to_f64;
use pivotlab_core::num::BigComplex;
use pivotlab_core::tracecalc::trace_polynomial;
use pivotlab_core::Slope;
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = (f64, f64)> {
    (-3.0f64..3.0, -3.0f64..3.0)
}

fn unimodular() -> impl Strategy<Value = Mat2> {
    (entry(), entry(), entry()).prop_filter_map("small corner", |(a, b, c)| {
        if a.0.hypot(a.1) < 0.3 {
            return None;
        }
        let z = |v: (f64, f64)| BigComplex::from_f64(v.0, v.1, 128);
        Mat2::unimodular(z(a), z(b), z(c)).ok()
    })
}

fn seed() -> impl Strategy<Value = MarkoffSeed> {
    (2.1f64..10.0, -3.2f64..3.2, 2.1f64..10.0, -3.2f64..3.2, any::<bool>()).prop_filter_map(
        "third coordinate out of range",
        |(r, a, s, b, plus)| {
            let seed = MarkoffSeed { x: (r * a.cos(), r * a.sin()), y: (s * b.cos(), s * b.sin()), plus };
            let z = seed.triple(64)[2].abs_f64();
            (2.1..=10.0).contains(&z).then_some(seed)
        },
    )
}

fn slope() -> impl Strategy<Value = Slope> {
    (-12i64..12, 0i64..12).prop_filter_map("0/0", |(p, q)| Slope::new(p, q).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fricke_identity(a in unimodular(), b in unimodular()) {
        prop_assert!(bf_to_f64(&fricke_residual(&a, &b)) < 1e-10);
    }

    #[test]
    fn realizations_meet_all_trace_conditions(s in seed()) {
        let t = s.triple(192);
        let (a, b) = triple_to_matrices(&t).unwrap();
        let close = |u: &BigComplex, v: &BigComplex| u.sub(v).abs_f64() < 1e-30;
        prop_assert!(close(&a.trace(), &t[0]));
        prop_assert!(close(&b.trace(), &t[1]));
        prop_assert!(close(&a.mul(&b).trace(), &t[2]));
        prop_assert!(close(&commutator(&a, &b).trace(), &BigComplex::from_int(-2, 192)));
    }

    #[test]
    fn word_homology_is_the_slope(s in slope()) {
        let h = slope_to_word(&s).homology();
        prop_assert_eq!((h.0.to_string(), h.1.to_string()), (s.p().to_string(), s.q().to_string()));
    }

    #[test]
    fn polynomial_matches_word_trace(s in seed(), t in slope()) {
        let poly = trace_polynomial(&t, &Triangle::standard()).unwrap();
        let o = oracle_compare(&t, &poly, &s, 1e-8).unwrap();
        prop_assert!(o.pass, "{}", o.to_json_line());
    }

    #[test]
    fn length_identity(re in -8.0f64..8.0, im in -8.0f64..8.0) {
        let tr = BigComplex::from_f64(re, im, 128);
        let len = complex_length(&tr);
        prop_assert!(!len.l.is_negative());
        let pi = std::f64::consts::PI;
        let theta = bf_to_f64(&len.theta);
        prop_assert!(theta > -pi && theta <= pi);
        prop_assert!(bf_to_f64(&length_residual(&tr, &len)) < 1e-12);
    }

    #[test]
    fn flip_relation_on_words(s in seed(), u in slope()) {
        // any Farey neighbor pair (u, v) with u + v and u - v
        let v = {
            let (p, q) = (u.p().clone(), u.q().clone());
            // v with p v.q - q v.p = 1
            let e = extended(&p, &q);
            Slope::new(e.1, e.0).unwrap()
        };
        let (a, b) = triple_to_matrices(&s.triple(256)).unwrap();
        let tr = |x: &Slope| trace_of_word(&slope_to_word(x), &a, &b).unwrap();
        let (pu, pv) = (u.vector(), v.vector());
        let plus = Slope::from_vector(&(&pu.0 + &pv.0, &pu.1 + &pv.1));
        let minus = Slope::from_vector(&(&pu.0 - &pv.0, &pu.1 - &pv.1));
        let lhs = tr(&plus).add(&tr(&minus));
        let rhs = tr(&u).mul(&tr(&v));
        prop_assert!(lhs.sub(&rhs).abs_f64() <= 1e-30 * (1.0 + rhs.abs_f64()));
    }
}

/// `(a, b)` with `p a - q b = 1`.
fn extended(p: &num_bigint::BigInt, q: &num_bigint::BigInt) -> (num_bigint::BigInt, num_bigint::BigInt) {
    use num_integer::Integer;
    let e = p.extended_gcd(q);
    // p x + q y = 1
    (e.x, -e.y)
}

#[test]
fn near_parabolic_grid() {
    for k in 0..=50 {
        let d = 10f64.powf(-3.0 - 5.0 * k as f64 / 50.0);
        for (re, im) in [(2.0 + d, 0.0), (2.0 - d, 0.0), (-2.0, d), (2.0 + d, -d), (-2.0 - d, d)] {
            let tr = BigComplex::from_f64(re, im, 128);
            let len = complex_length(&tr);
            assert!(bf_to_f64(&length_residual(&tr, &len)) < 1e-12, "{re} {im}");
        }
    }
}
