use gaprec::exactnum::{int, pow, rat};
use gaprec::lacunary::{
    eq15_pair, eq16_pair, lemma_pair, solve_bernoulli_gap6, solve_euler_gap4, solve_euler_gap6, thm21_pair,
    thm33_pair, Lemma, Value, ZPoint,
};
use gaprec::lucas::LucasParams;
use gaprec::seqcore::Table;
use gaprec::{EisensteinPoly, EisensteinRational, RatPoly, Rational, SequenceCache};
use proptest::prelude::*;
use std::sync::OnceLock;

/// Classic `B_n` and `E_n` for `n ≤ 400`, built once.
fn classic() -> &'static (Vec<Rational>, Vec<Rational>) {
    static TABLES: OnceLock<(Vec<Rational>, Vec<Rational>)> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut c = SequenceCache::new();
        ((0..=400).map(|n| c.bernoulli_number(n)).collect(), (0..=400).map(|n| c.euler_number(n)).collect())
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(a, b)| rat(a, b))
}

fn z_point() -> impl Strategy<Value = ZPoint> {
    prop_oneof![
        small_rational().prop_map(ZPoint::Rational),
        (small_rational(), small_rational()).prop_map(|(a, b)| ZPoint::Gaussian(gaprec::GaussianRational::new(a, b))),
        (small_rational(), small_rational()).prop_map(|(a, b)| ZPoint::Eisenstein(EisensteinRational::new(a, b))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lemmas_hold_at_arbitrary_points(n in 1usize..18, x0 in small_rational(), z in z_point()) {
        let mut c = SequenceCache::new();
        prop_assert!(lemma_pair(&mut c, Lemma::L21, n, &x0, &z).unwrap().holds());
        prop_assert!(lemma_pair(&mut c, Lemma::L31, n, &x0, &z).unwrap().holds());
    }

    #[test]
    fn gap6_bernoulli_reads_exactly_its_chain(half in 1usize..=200) {
        let n = 2 * half;
        let mut cold = SequenceCache::new();
        let v = solve_bernoulli_gap6(&mut cold, n).unwrap();
        let chain: Vec<usize> = (n % 6..n).step_by(6).collect();
        prop_assert_eq!(cold.indices_read(Table::BernoulliNumber).into_iter().collect::<Vec<_>>(), chain);
        prop_assert_eq!(&v, &classic().0[n]);
    }

    #[test]
    fn gap_euler_solvers_read_exactly_their_chains(half in 0usize..=200) {
        let n = 2 * half;
        let classic = &classic().1[n];
        for (gap, v, read) in [4usize, 6].map(|g| {
            let mut cold = SequenceCache::new();
            let v = if g == 4 { solve_euler_gap4(&mut cold, n) } else { solve_euler_gap6(&mut cold, n).unwrap() };
            (g, v, cold.indices_read(Table::EulerNumber))
        }) {
            let chain: Vec<usize> = (n % gap..n).step_by(gap).collect();
            prop_assert_eq!(read.into_iter().collect::<Vec<_>>(), chain);
            prop_assert_eq!(&v, classic);
        }
    }

    #[test]
    fn odd_indices_vanish(k in 2usize..=200) {
        prop_assert_eq!(SequenceCache::new().euler_number(2 * k - 1), int(0));
        prop_assert_eq!(&classic().0[2 * k - 1], &int(0));
        prop_assert_eq!(&classic().1[2 * k - 1], &int(0));
    }
}

#[test]
fn bernoulli_number_is_constant_term() {
    let mut c = SequenceCache::new();
    for n in (0..=400).step_by(2) {
        assert_eq!(c.bernoulli_poly(n).coeff(0), c.bernoulli_number(n), "n={n}");
    }
}

#[test]
fn euler_number_from_the_polynomial_at_one_half() {
    let mut c = SequenceCache::new();
    for n in 0..=80 {
        let v = pow(&int(2), n as u32) * c.euler_poly(n).eval(&rat(1, 2));
        assert_eq!(v, c.euler_number(n), "n={n}");
    }
}

#[test]
fn thm21_at_zero_is_ramanujan() {
    let mut c = SequenceCache::new();
    for n in (3..=61).step_by(2) {
        let poly = thm21_pair(&mut c, n).unwrap();
        let num = eq15_pair(&mut c, n).unwrap();
        assert_eq!(poly.lhs.at(&int(0)), num.lhs, "n={n}");
        assert_eq!(poly.rhs.at(&int(0)), num.rhs, "n={n}");
    }
}

#[test]
fn thm33_at_one_half_is_lehmer() {
    let mut c = SequenceCache::new();
    for n in (2..=60).step_by(2) {
        let scale = pow(&int(2), n as u32);
        let poly = thm33_pair(&mut c, n).unwrap();
        let num = eq16_pair(&mut c, n).unwrap();
        let at = |v: &Value| v.at(&rat(1, 2)).as_number().unwrap() * &scale;
        assert_eq!(Value::Number(at(&poly.lhs)), num.lhs, "n={n}");
        assert_eq!(Value::Number(at(&poly.rhs)), num.rhs, "n={n}");
    }
}

#[test]
fn lucas_v_over_polynomials_matches_eisenstein_powers() {
    let params = LucasParams::new(RatPoly::new(vec![int(1), int(-2)]), RatPoly::new(vec![int(1), int(-1), int(1)]));
    let w = EisensteinRational::omega();
    for n in 0..=60usize {
        let v = params.v(n);
        assert_eq!(v.degree(), Some(n), "n={n}");
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        assert_eq!(v.leading().unwrap(), &(int(2) * &sign), "n={n}");
        let e = n as u32;
        let built = (EisensteinPoly::shifted_power(&w, e) + EisensteinPoly::shifted_power(&w.conj(), e))
            .scale(&EisensteinRational::from_base(sign));
        assert_eq!(built.reduce_to_rational().unwrap(), v, "n={n}");
    }
}
