use num_traits::{Signed, Zero};
use proptest::prelude::*;
use sasaki_core::exactalg::{
    gcd, int, rat, solve_linear, AlgebraError, Monomial, MultiPoly, RatFunc, Rational,
};

fn poly_strategy(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -4i64..5), 0..5).prop_map(
        move |terms| {
            MultiPoly::from_terms(
                nvars,
                terms.into_iter().map(|(e, c)| (Monomial::new(e), int(c))),
            )
        },
    )
}

fn nonzero_poly(nvars: usize) -> impl Strategy<Value = MultiPoly> {
    poly_strategy(nvars).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    (poly_strategy(2), nonzero_poly(2)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalize_is_idempotent(f in ratfunc_strategy()) {
        let again = RatFunc::new(f.numer().clone(), f.denom().clone()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn representation_is_unique(n in poly_strategy(2), d in nonzero_poly(2), s in nonzero_poly(2)) {
        let plain = RatFunc::new(n.clone(), d.clone()).unwrap();
        let padded = RatFunc::new(&n * &s, &d * &s).unwrap();
        prop_assert_eq!(padded, plain);
    }

    #[test]
    fn gcd_contains_planted_factor(a in nonzero_poly(3), b in nonzero_poly(3), c in nonzero_poly(3)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = gcd(&ac, &bc);
        prop_assert!(ac.div_exact(&g).is_some());
        prop_assert!(bc.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c).is_some());
    }

    #[test]
    fn leibniz_rule(f in ratfunc_strategy(), g in ratfunc_strategy(), var in 0usize..2) {
        let lhs = (&f * &g).derivative(var).unwrap();
        let rhs = &(&f.derivative(var).unwrap() * &g) + &(&f * &g.derivative(var).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn field_axioms_hold(f in ratfunc_strategy(), g in ratfunc_strategy()) {
        prop_assert!((&(&f + &g) - &g - f.clone()).is_zero());
        if !g.is_zero() {
            prop_assert_eq!(&(&f * &g) * &g.recip().unwrap(), f);
        }
    }

    #[test]
    fn solve_residual_is_zero(entries in prop::collection::vec((-9i64..10, 1i64..6), 9),
                              rhs in prop::collection::vec((-9i64..10, 1i64..6), 3)) {
        let m: Vec<Vec<Rational>> = entries
            .chunks(3)
            .map(|row| row.iter().map(|&(p, q)| rat(p, q)).collect())
            .collect();
        let v: Vec<Rational> = rhs.iter().map(|&(p, q)| rat(p, q)).collect();
        match solve_linear(&m, &v) {
            Ok(x) => {
                for (row, vi) in m.iter().zip(&v) {
                    let lhs = row.iter().zip(&x).fold(Rational::zero(), |a, (c, xi)| a + c * xi);
                    prop_assert_eq!(&lhs, vi);
                }
            }
            Err(e) => {
                prop_assert_eq!(e, AlgebraError::SingularSystem);
                prop_assert!(det3(&m).is_zero());
            }
        }
    }
}

fn det3(m: &[Vec<Rational>]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

#[test]
fn solve_examples() {
    let id = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
    assert_eq!(
        solve_linear(&id, &[int(3), rat(1, 2)]).unwrap(),
        vec![int(3), rat(1, 2)]
    );
    let diag = vec![vec![int(2), int(0)], vec![int(0), int(4)]];
    assert_eq!(
        solve_linear(&diag, &[int(1), int(2)]).unwrap(),
        vec![rat(1, 2), rat(1, 2)]
    );
}

fn b(i: usize) -> MultiPoly {
    MultiPoly::var(2, i)
}

fn central_difference(f: &RatFunc, p: &[Rational], var: usize, h: &Rational) -> Rational {
    let mut hi = p.to_vec();
    let mut lo = p.to_vec();
    hi[var] += h;
    lo[var] -= h;
    (f.eval(&hi).unwrap() - f.eval(&lo).unwrap()) / (h * int(2))
}

/// Functions with nonvanishing third derivative at the test point.
fn generic_corpus() -> Vec<(RatFunc, Vec<Rational>, usize)> {
    let q = &b(0).pow(2).scale(&int(9)) - &b(1).pow(2);
    vec![
        (
            RatFunc::reciprocal_of(&q).unwrap(),
            vec![int(1), rat(1, 3)],
            1,
        ),
        (
            RatFunc::reciprocal_of(&(&b(0) * &q)).unwrap(),
            vec![int(1), rat(1, 2)],
            0,
        ),
        (
            RatFunc::new(&b(0) + &b(1).pow(3), &b(0).pow(2) + &MultiPoly::one(2)).unwrap(),
            vec![rat(1, 2), int(1)],
            0,
        ),
        (
            RatFunc::new(b(1).pow(4), &b(0) + &b(1).scale(&int(3))).unwrap(),
            vec![int(2), rat(1, 5)],
            1,
        ),
    ]
}

#[test]
fn derivative_of_inverse_quadratic() {
    let q = &b(0).pow(2).scale(&int(9)) - &b(1).pow(2);
    let f = RatFunc::reciprocal_of(&q).unwrap();
    let expect = RatFunc::new(b(1).scale(&int(2)), q.pow(2)).unwrap();
    assert_eq!(f.derivative(1).unwrap(), expect);
}

#[test]
fn finite_differences_converge_quadratically() {
    let steps = [rat(1, 10), rat(1, 100), rat(1, 1000)];
    for (f, p, var) in generic_corpus() {
        let exact = f.derivative(var).unwrap().eval(&p).unwrap();
        let errs: Vec<Rational> = steps
            .iter()
            .map(|h| (central_difference(&f, &p, var, h) - &exact).abs())
            .collect();
        for w in errs.windows(2) {
            assert!(!w[1].is_zero());
            let ratio = &w[0] / &w[1];
            assert!(
                ratio >= int(80) && ratio <= int(120),
                "ratio {ratio} for {f}"
            );
        }
    }
}
