#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sasaki_core::exactalg::{rat, Rational};
use sasaki_core::linkgeom::{table_rows, ReebVector, Table, WeightedLink};

/// Catalog rows at default parameters plus a few hand-built links.
pub fn corpus() -> Vec<(String, WeightedLink)> {
    let mut out: Vec<(String, WeightedLink)> = Vec::new();
    for table in [Table::One, Table::Two] {
        for e in table_rows(table, None).unwrap() {
            let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push((format!("{} {}", e.family, params.join(",")), e.link));
        }
    }
    out.push((
        "z0^3 + 3 squares".into(),
        WeightedLink::brieskorn_pham(&[3], 3).unwrap(),
    ));
    out.push((
        "z0^6 + 5 squares".into(),
        WeightedLink::brieskorn_pham(&[6], 5).unwrap(),
    ));
    out.push((
        "z0^3 + z0 z1^3 + 2 squares".into(),
        WeightedLink::new(&[6, 4], 18, 2).unwrap(),
    ));
    out.push((
        "weights (2,3) d'=7, 4 squares".into(),
        WeightedLink::new(&[2, 3], 7, 4).unwrap(),
    ));
    out
}

/// Links of pure powers in the corpus.
pub fn bp_corpus() -> Vec<(String, WeightedLink)> {
    corpus()
        .into_iter()
        .filter(|(_, l)| l.bp_exponents().is_some())
        .collect()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random rational in `(lo, hi)` with denominator below 50.
pub fn rational_between(rng: &mut StdRng, lo: &Rational, hi: &Rational) -> Rational {
    let den: i64 = rng.gen_range(2..50);
    let t = rat(rng.gen_range(1..den), den);
    lo + (hi - lo) * t
}

/// Random interior point of the Sasaki cone.
pub fn interior_point(rng: &mut StdRng, link: &WeightedLink) -> ReebVector {
    let b0 = rational_between(rng, &rat(1, 4), &rat(3, 1));
    let bound = Rational::from_integer((link.degree() as i64).into()) * &b0 / rat(2, 1);
    let mut c = vec![b0];
    for _ in 0..link.rank() {
        c.push(rational_between(rng, &-bound.clone(), &bound));
    }
    let xi = ReebVector::new(c);
    assert!(link.in_sasaki_cone(&xi));
    xi
}

/// Random point of the Calabi-Yau locus with every `b_j` nonzero.
pub fn sigma_point(rng: &mut StdRng, link: &WeightedLink) -> ReebVector {
    let b0 = link.sigma_reeb().unwrap().coeffs()[0].clone();
    let bound = Rational::from_integer((link.degree() as i64).into()) * &b0 / rat(2, 1);
    let bs: Vec<Rational> = (0..link.rank())
        .map(|_| loop {
            let v = rational_between(rng, &-bound.clone(), &bound);
            if v != rat(0, 1) {
                break v;
            }
        })
        .collect();
    link.sigma_point(&bs).unwrap()
}
