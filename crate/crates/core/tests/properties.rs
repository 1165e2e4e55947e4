use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use quadexp::analysis::{log_distance, solve_distance_equals_value, vertex, SOLVER_TOLERANCE};
use quadexp::exact::{
    check_symmetry, compute_abs_a, derivative_sign_at, exponent_at, value_at, ExactExponent,
    ParamCombo, QValue, Sign,
};
use quadexp::family::{
    build_increasing_sequence, invert_target, tail_in_ball, Ball, BallTail,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn symmetric_combo() -> impl Strategy<Value = ParamCombo> {
    (1u32..=6, 1u64..=200, 1i64..=30, prop::sample::select(vec![2u32, 4, 6]))
        .prop_map(|(k, m, u, n)| ParamCombo::new(k, m, u, n).unwrap())
}

fn standard_combo() -> impl Strategy<Value = ParamCombo> {
    (1u32..=4, 1u64..=50, 1i64..=12).prop_map(|(k, m, u)| ParamCombo::standard(k, m, u).unwrap())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-10_000i64..=10_000, 1i64..=500).prop_map(|(n, d)| rat(n, d))
}

/// `v` by repeated multiplication, with the sign flipped once per factor.
fn v_by_loop(c: &ParamCombo) -> BigInt {
    let mut v = BigInt::from(c.m());
    for _ in 0..c.nk() - 1 {
        v = -v * BigInt::from(c.u());
    }
    v
}

fn tail_rank(t: &BallTail) -> usize {
    t.index.unwrap_or(usize::MAX)
}

proptest! {
    #[test]
    fn symmetry_holds_off_the_degenerate_case(c in symmetric_combo()) {
        let abs_a = compute_abs_a(&c);
        prop_assume!(!abs_a.is_degenerate());
        prop_assert_eq!(check_symmetry(&c), Ok(true));
        let a = BigRational::from_integer(abs_a.value);
        prop_assert_eq!(exponent_at(&c, &BigRational::one()), exponent_at(&c, &a));
    }

    #[test]
    fn exponent_matches_loop_oracle(
        k in 1u32..=5, m in 1u64..=100, u in -9i64..=9, n in 1u32..=4, x in rational()
    ) {
        prop_assume!(u != 0 && n * k >= 2);
        let c = ParamCombo::new(k, m, u, n).unwrap();
        prop_assert_eq!(c.v(), v_by_loop(&c));
        let expect = BigRational::from_integer(BigInt::from(u)) * &x * &x
            + BigRational::from_integer(v_by_loop(&c)) * &x;
        prop_assert_eq!(exponent_at(&c, &x).into_inner(), expect);
    }

    #[test]
    fn derivative_changes_sign_at_vertex(c in symmetric_combo(), eps in 1i64..=1000, den in 1i64..=1000, flip in any::<bool>()) {
        let c = if flip { ParamCombo::new(c.k(), c.m(), -c.u(), c.n()).unwrap() } else { c };
        let theta = vertex(&c);
        let e = rat(eps, den);
        let (before, after) = if c.u() > 0 { (Sign::Negative, Sign::Positive) } else { (Sign::Positive, Sign::Negative) };
        prop_assert_eq!(derivative_sign_at(&c, &theta), Sign::Zero);
        prop_assert_eq!(derivative_sign_at(&c, &(&theta - &e)), before);
        prop_assert_eq!(derivative_sign_at(&c, &(&theta + &e)), after);
    }

    #[test]
    fn vertex_is_the_midpoint_and_the_minimum(c in symmetric_combo(), x in rational()) {
        let abs_a = BigRational::from_integer(compute_abs_a(&c).value);
        let theta = vertex(&c);
        prop_assert_eq!(&theta, &((abs_a + BigRational::one()) / rat(2, 1)));
        prop_assert!(exponent_at(&c, &theta) <= exponent_at(&c, &x));
    }

    #[test]
    fn mirror_offsets_share_values(c in symmetric_combo(), num in 0i64..=1000) {
        let abs_a = BigRational::from_integer(compute_abs_a(&c).value);
        let d = (&abs_a - BigRational::one()) * rat(num, 2000);
        prop_assert_eq!(
            exponent_at(&c, &(BigRational::one() + &d)),
            exponent_at(&c, &(&abs_a - &d))
        );
    }

    #[test]
    fn negated_u_negates_the_exponent(c in symmetric_combo(), x in rational()) {
        let g = ParamCombo::new(c.k(), c.m(), -c.u(), c.n()).unwrap();
        prop_assert_eq!(exponent_at(&g, &x).into_inner(), -exponent_at(&c, &x).into_inner());
    }

    #[test]
    fn qvalue_order_agrees_with_floats(a in -50_000i64..=50_000, b in -500i64..=500, d in 1i64..=100) {
        // both exponents lie in [-500, 500]
        let (ea, eb) = (rat(a, 100), rat(b, d));
        let qa = QValue::positive(ExactExponent::new(ea.clone()));
        let qb = QValue::positive(ExactExponent::new(eb.clone()));
        let exact = qa.cmp(&qb);
        prop_assert_eq!(exact, ea.cmp(&eb));
        if ea != eb {
            let (fa, fb) = ((a as f64 / 100.0).exp(), (b as f64 / d as f64).exp());
            prop_assert_eq!(Some(exact), fa.partial_cmp(&fb));
        }
    }

    #[test]
    fn value_order_follows_exponents(c1 in standard_combo(), c2 in standard_combo()) {
        let one = BigRational::one();
        let (a, b) = (value_at(&c1, &one), value_at(&c2, &one));
        prop_assert_eq!(a.cmp(&b), exponent_at(&c1, &one).cmp(&exponent_at(&c2, &one)));
    }

    #[test]
    fn exponent_display_round_trips(x in rational()) {
        let e = ExactExponent::new(x);
        prop_assert_eq!(e.to_string().parse::<ExactExponent>().unwrap(), e);
    }

    #[test]
    fn log_distance_enclosures_overlap(num in 201i64..=10_000, den in 1i64..=100, terms in 1u32..=60) {
        let z = rat(num, den);
        prop_assume!(z > rat(2, 1));
        let ld = log_distance(&z, terms).unwrap();
        prop_assert!(ld.direct.overlaps(&ld.series));
        let more = log_distance(&z, terms + 1).unwrap();
        prop_assert!(more.series.width() < ld.series.width());
    }

    #[test]
    fn tail_index_grows_as_sigma_shrinks(u in 1i64..=4, len in 2u64..=15, s1 in 1u32..=5000, s2 in 1u32..=5000) {
        let combos: Vec<_> = (2..=len + 1).map(|m| ParamCombo::standard(1, m, u).unwrap()).collect();
        let seq = build_increasing_sequence(&combos).unwrap();
        let (big, small) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        let wide = tail_in_ball(&seq, &Ball::new(rat(1, big as i64)).unwrap()).unwrap();
        let narrow = tail_in_ball(&seq, &Ball::new(rat(1, small as i64)).unwrap()).unwrap();
        prop_assert!(tail_rank(&narrow) >= tail_rank(&wide));
    }
}

#[test]
fn inversion_round_trips() {
    for n in 1..=500u64 {
        let hits = invert_target(n, 4, 10);
        assert!(!hits.is_empty(), "no combination for {n}");
        for c in hits {
            assert_eq!(compute_abs_a(&c).value, BigInt::from(n), "{c}");
        }
    }
}

#[test]
fn solver_agrees_on_sample_points() {
    for z in [2.1, 2.5, 2.9, 4.0, 10.0] {
        for e in 1..=4 {
            let s = solve_distance_equals_value(z, e, SOLVER_TOLERANCE).unwrap();
            assert!(s.relative_gap < 1e-12, "Z = {z}, E = {e}: gap {}", s.relative_gap);
            assert!(s.residual < 1e-12, "Z = {z}, E = {e}: residual {}", s.residual);
            assert_eq!(s.negative_u, z > 3.0);
        }
    }
}

#[test]
fn partner_is_unique_on_small_grid() {
    for k in 1..=2u32 {
        for m in 1..=30u64 {
            for u in 1..=5i64 {
                let c = ParamCombo::standard(k, m, u).unwrap();
                let a = compute_abs_a(&c).value;
                let at_one = exponent_at(&c, &BigRational::one());
                let limit: i64 = (&a + 5u32).try_into().unwrap();
                for x in 1..=limit {
                    let bx = BigInt::from(x);
                    let same = exponent_at(&c, &BigRational::from_integer(bx.clone())) == at_one;
                    assert_eq!(same, x == 1 || bx == a, "{c} at {x}");
                }
            }
        }
    }
}

#[test]
fn degenerate_combos_are_flagged() {
    let c = ParamCombo::standard(1, 1, 7).unwrap();
    assert!(compute_abs_a(&c).is_degenerate());
    assert!(check_symmetry(&c).is_err());
    assert_eq!(exponent_at(&c, &BigRational::zero()).value(), &BigRational::zero());
    assert_eq!(vertex(&c), rat(1, 2));
}
