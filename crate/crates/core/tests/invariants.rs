mod common;

use num_traits::{Signed, Zero};
use rand::Rng;
use sasaki_core::charseries::CharCoeffs;
use sasaki_core::exactalg::{int, MultiPoly, RatFunc, Rational};
use sasaki_core::invariants::{
    coef_derivatives, normal_cone_futaki, normal_cone_futaki_general,
    normal_cone_futaki_tangent_form, normal_cone_futaki_with_chi, Dims, DirectionVector, PointJets,
};
use sasaki_core::linkgeom::{ReebVector, WeightedLink};

fn coeffs(link: &WeightedLink) -> CharCoeffs {
    CharCoeffs::for_link(link).unwrap()
}

fn random_direction(rng: &mut rand::rngs::StdRng, n: usize) -> DirectionVector {
    DirectionVector::new(
        (0..n)
            .map(|_| {
                Rational::new(
                    rng.gen_range(-9i64..=9).into(),
                    rng.gen_range(1i64..6).into(),
                )
            })
            .collect(),
    )
}

/// Determinant by plain elimination over the rationals.
fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut acc = int(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        acc *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            let (top, rest) = m.split_at_mut(r);
            for (x, p) in rest[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * p;
            }
        }
    }
    acc
}

#[test]
fn reeb_direction_is_null() {
    let mut rng = common::rng(21);
    for (name, link) in common::corpus() {
        let c = coeffs(&link);
        for _ in 0..3 {
            let xi = common::interior_point(&mut rng, &link);
            let jets = PointJets::new(&c, &xi).unwrap();
            let r = DirectionVector::radial(&xi);
            let z = random_direction(&mut rng, link.nvars());
            assert!(jets.inner(&r, &z).unwrap().is_zero(), "{name}");
            assert!(jets.inner(&r, &r).unwrap().is_zero(), "{name}");
            assert!(jets.futaki(&r).unwrap().is_zero(), "{name}");
        }
    }
}

#[test]
fn gram_is_positive_definite() {
    let mut rng = common::rng(22);
    for (name, link) in common::corpus().into_iter().filter(|(_, l)| l.rank() > 0) {
        let c = coeffs(&link);
        for _ in 0..20 {
            let xi = common::interior_point(&mut rng, &link);
            let g = PointJets::new(&c, &xi).unwrap().gram().unwrap();
            for k in 1..=g.len() {
                let minor: Vec<Vec<Rational>> =
                    g[..k].iter().map(|row| row[..k].to_vec()).collect();
                assert!(det(minor).is_positive(), "{name} at {:?}", xi.coeffs());
            }
        }
    }
}

#[test]
fn extremal_field_is_dual_to_futaki() {
    let mut rng = common::rng(23);
    for (name, link) in common::corpus().into_iter().filter(|(_, l)| l.rank() > 0) {
        let c = coeffs(&link);
        for _ in 0..3 {
            let xi = common::interior_point(&mut rng, &link);
            let jets = PointJets::new(&c, &xi).unwrap();
            let chi = jets.extremal_field().unwrap();
            assert!(chi.coeffs()[0].is_zero());
            for i in 1..link.nvars() {
                let z = DirectionVector::basis(link.nvars(), i);
                assert_eq!(
                    jets.futaki(&z).unwrap(),
                    jets.inner(&z, &chi).unwrap(),
                    "{name}"
                );
            }
            // linearity carries duality to every direction
            let z = random_direction(&mut rng, link.nvars());
            assert_eq!(
                jets.futaki(&z).unwrap(),
                jets.inner(&z, &chi).unwrap(),
                "{name}"
            );
        }
    }
}

#[test]
fn normal_cone_value_ignores_reeb_shift_of_chi() {
    let mut rng = common::rng(24);
    for (name, link) in common::corpus() {
        let c = coeffs(&link);
        let alpha = link.inner_charge(0).unwrap();
        let xi = common::sigma_point(&mut rng, &link);
        let base = normal_cone_futaki(&link, &xi, &alpha, &c).unwrap();
        for lambda in [-2, 1, 5] {
            let shifted = base
                .chi
                .add(&DirectionVector::radial(&xi).scale(&int(lambda)));
            let nc = normal_cone_futaki_with_chi(&link, &xi, &alpha, &c, &shifted).unwrap();
            assert_eq!(nc.relative, base.relative, "{name}");
        }
    }
}

#[test]
fn normal_cone_forms_agree_on_the_locus() {
    let mut rng = common::rng(25);
    for (name, link) in common::corpus() {
        let c = coeffs(&link);
        for i in 0..link.inner_weights().len() {
            let alpha = link.inner_charge(i).unwrap();
            for _ in 0..2 {
                let xi = common::sigma_point(&mut rng, &link);
                let nc = normal_cone_futaki(&link, &xi, &alpha, &c).unwrap();
                let general = normal_cone_futaki_general(&xi, &alpha, &c, &nc.chi).unwrap();
                assert_eq!(general, nc.relative, "{name}");
                let norm_sq = PointJets::new(&c, &xi).unwrap().norm_sq(&nc.chi).unwrap();
                let tangent =
                    normal_cone_futaki_tangent_form(&link, &xi, &alpha, &c, &norm_sq).unwrap();
                assert_eq!(tangent, nc.relative, "{name}");
            }
        }
    }
}

#[test]
fn calabi_yau_ratio_on_the_locus() {
    let mut rng = common::rng(26);
    for (name, link) in common::corpus() {
        let c = coeffs(&link);
        let ratio = Dims::new(c.dim_y).cy_ratio();
        let mut points = vec![link.sigma_reeb().unwrap()];
        points.push(common::sigma_point(&mut rng, &link));
        for xi in points {
            let p = xi.coeffs();
            assert_eq!(
                c.a1.eval(p).unwrap(),
                &ratio * c.a0.eval(p).unwrap(),
                "{name}"
            );
        }
    }
}

#[test]
fn extremal_field_vanishes_on_the_symmetric_ray() {
    for (name, link) in common::corpus() {
        let c = coeffs(&link);
        let xi = link.sigma_reeb().unwrap();
        let base = xi.coeffs()[0].clone();
        for scale in [int(1), Rational::new(7.into(), 3.into())] {
            let ray = ReebVector::new(
                std::iter::once(&base * &scale)
                    .chain(std::iter::repeat_n(Rational::zero(), link.rank()))
                    .collect(),
            );
            let chi = PointJets::new(&c, &ray).unwrap().extremal_field().unwrap();
            assert!(chi.is_zero(), "{name}");
        }
    }
}

/// `sum_i b_i d f / d b_i` as a rational function.
fn euler(f: &RatFunc) -> RatFunc {
    let n = f.nvars();
    (0..n).fold(RatFunc::zero(n), |acc, i| {
        acc + RatFunc::from_poly(MultiPoly::var(n, i)) * f.derivative(i).unwrap()
    })
}

#[test]
fn euler_identities() {
    for (name, link) in common::corpus() {
        let c = coeffs(&link);
        let m = c.dim_y as i64;
        assert_eq!(euler(&c.a0), c.a0.scale(&int(-m)), "{name}");
        assert_eq!(euler(&c.a1), c.a1.scale(&int(1 - m)), "{name}");
    }
}

#[test]
fn symbolic_and_pointwise_routes_agree() {
    let mut rng = common::rng(27);
    for (name, link) in common::corpus() {
        let c = coeffs(&link);
        let zeta = random_direction(&mut rng, link.nvars());
        let (b0, b1, c0) = coef_derivatives(&c, &zeta).unwrap();
        for _ in 0..3 {
            let xi = common::interior_point(&mut rng, &link);
            let p = xi.coeffs();
            let jets = PointJets::new(&c, &xi).unwrap();
            let (a0, a1) = (c.a0.eval(p).unwrap(), c.a1.eval(p).unwrap());
            let (b0, b1, c0) = (
                b0.eval(p).unwrap(),
                b1.eval(p).unwrap(),
                c0.eval(p).unwrap(),
            );
            assert_eq!(jets.futaki(&zeta).unwrap(), &a1 / &a0 * &b0 - b1, "{name}");
            assert_eq!(jets.norm_sq(&zeta).unwrap(), c0 - &b0 * &b0 / a0, "{name}");
        }
    }
}
