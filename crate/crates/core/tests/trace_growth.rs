use num_bigint::BigInt;
use pivotlab_core::farey::Triangle;
use pivotlab_core::num::rat::rat;
use pivotlab_core::num::GaussRat;
use pivotlab_core::tracecalc::{
    flip, flip_path, length_growth_bounds, markoff_defect, trace_polynomial, trace_polynomial_with_path, Position,
};
use pivotlab_core::Slope;
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-40i64..40, 1i64..20, -40i64..40, 1i64..20).prop_map(|(a, b, c, d)| GaussRat::new(rat(a, b), rat(c, d)))
}

fn slope() -> impl Strategy<Value = Slope> {
    (-30i64..30, 0i64..30).prop_filter_map("0/0", |(p, q)| Slope::new(p, q).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn defect_survives_flip_paths(t in [gauss(), gauss(), gauss()], path in prop::collection::vec(0usize..3, 0..12)) {
        let d = markoff_defect(&t);
        let mut cur = t;
        for i in path {
            cur = flip(&cur, Position::from_index(i).unwrap());
            prop_assert_eq!(markoff_defect(&cur), d.clone());
        }
    }

    #[test]
    fn polynomial_agrees_with_numeric_flips(s in slope(), t in [gauss(), gauss(), gauss()]) {
        let base = Triangle::standard();
        let (poly, path) = trace_polynomial_with_path(&s, &base, 100_000).unwrap();
        let (_, slot) = flip_path(&s, &base).unwrap();
        prop_assert_eq!(poly.eval(&t[0], &t[1], &t[2]), path.apply(&t)[slot.index()].clone());
    }
}

#[test]
fn growth_bounds_cover_every_vertex_of_the_width_sequence() {
    let base = Triangle::standard();
    let w: Vec<BigInt> = [3, 4, 2, 1, 3].iter().map(|&x| BigInt::from(x)).collect();
    let bounds = length_growth_bounds(&w, &base).unwrap();
    assert_eq!(bounds.len(), w.len() + 1);
    let pivots = base.pivots_from_widths(&w).unwrap();
    for n in 1..=w.len() {
        let (a, b) = (pivots[n - 1].vector(), pivots[n].vector());
        let wn: i64 = w[n - 1].to_string().parse().unwrap();
        for j in 1..=wn + 1 {
            let v = Slope::from_vector(&(&a.0 + BigInt::from(j) * &b.0, &a.1 + BigInt::from(j) * &b.1));
            let len = trace_polynomial(&v, &base).unwrap().length().unwrap();
            assert!(len <= bounds[n], "n = {n}: {v} has length {len} > {}", bounds[n]);
        }
    }
}
