//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive content/primitive-part scheme: strip the monomial content, split
//! off variables that occur in only one argument, then run a primitive
//! pseudo-remainder sequence in the variable of lowest degree with coefficients
//! in the remaining variables.

use super::poly::{Monomial, MultiPoly};
use super::rational::Rational;
use num_traits::One;

/// Greatest common divisor, normalized to coprime integer coefficients with a
/// positive graded-lex leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    assert_eq!(a.nvars(), b.nvars(), "variable count mismatch");
    let n = a.nvars();
    if a.is_zero() {
        return b.integer_normalized().1;
    }
    if b.is_zero() {
        return a.integer_normalized().1;
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let common = Monomial::new(
        ma.exponents()
            .iter()
            .zip(mb.exponents())
            .map(|(x, y)| *x.min(y))
            .collect(),
    );
    let a = a.div_monomial(&ma).integer_normalized().1;
    let b = b.div_monomial(&mb).integer_normalized().1;
    let g = gcd_no_monomial(&a, &b);
    g.mul_monomial(&common, &Rational::from_integer(1.into()))
        .integer_normalized()
        .1
}

fn gcd_no_monomial(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    if a == b {
        return a.clone();
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if large.div_exact(small).is_some() {
        return small.integer_normalized().1;
    }

    // A variable present in only one argument can only enter the gcd through
    // that argument's content with respect to it.
    for v in 0..n {
        match (a.involves(v), b.involves(v)) {
            (true, false) => return gcd_with_content(a, v, b),
            (false, true) => return gcd_with_content(b, v, a),
            _ => {}
        }
    }

    let var = (0..n)
        .filter(|&v| a.involves(v))
        .min_by_key(|&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .expect("non-constant polynomials involve some variable");

    let (ca, pa) = split_content(a, var);
    let (cb, pb) = split_content(b, var);
    let content_gcd = gcd(&ca, &cb);
    if image_degree_bound(&pa, &pb, var) == Some(0) {
        return content_gcd;
    }

    let (mut big, mut small) = if pa.degree_in(var) >= pb.degree_in(var) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_remainder(&big, &small, var);
        if r.is_zero() {
            break;
        }
        if r.degree_in(var) == 0 {
            small = MultiPoly::one(n);
            break;
        }
        big = small;
        small = split_content(&r, var).1;
    }
    (&content_gcd * &small).integer_normalized().1
}

/// gcd(p, q) where `var` occurs in `p` but not in `q`.
fn gcd_with_content(p: &MultiPoly, var: usize, q: &MultiPoly) -> MultiPoly {
    let mut g = q.clone();
    for c in p.coeffs_in(var).iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_constant() {
            return MultiPoly::one(p.nvars());
        }
    }
    g
}

/// Splits `p = content * primitive` with respect to `var`.
fn split_content(p: &MultiPoly, var: usize) -> (MultiPoly, MultiPoly) {
    let coeffs: Vec<MultiPoly> = p
        .coeffs_in(var)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    let mut content = coeffs[0].integer_normalized().1;
    for c in &coeffs[1..] {
        if content.is_constant() {
            break;
        }
        content = gcd(&content, c);
    }
    if content.is_constant() {
        return (MultiPoly::one(p.nvars()), p.integer_normalized().1);
    }
    let prim = p
        .div_exact(&content)
        .expect("content divides its polynomial");
    (content, prim.integer_normalized().1)
}

/// Pseudo-remainder of `a` by `b` in `var`. When the leading coefficient of `b`
/// divides that of the running remainder, the exact quotient is used instead
/// of multiplying through, which keeps coefficient growth down.
fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let n = a.nvars();
    let bc = b.coeffs_in(var);
    let db = bc.len() - 1;
    let lb = &bc[db];
    let mut r = a.coeffs_in(var);
    trim(&mut r);
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        match lr.div_exact(lb) {
            Some(q) => {
                for (j, bj) in bc.iter().enumerate() {
                    r[j + shift] = &r[j + shift] - &(&q * bj);
                }
            }
            None => {
                for c in r.iter_mut() {
                    *c = &*c * lb;
                }
                for (j, bj) in bc.iter().enumerate() {
                    r[j + shift] = &r[j + shift] - &(&lr * bj);
                }
            }
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            return MultiPoly::zero(n);
        }
        let joined = MultiPoly::from_coeffs_in(n, var, &r);
        if joined.is_zero() {
            return joined;
        }
        let (_, norm) = joined.integer_normalized();
        r = norm.coeffs_in(var);
    }
    let out = MultiPoly::from_coeffs_in(n, var, &r);
    if out.is_zero() {
        out
    } else {
        out.integer_normalized().1
    }
}

const PRIME: u64 = 2_147_483_647;

/// Upper bound on `deg_var gcd(a, b)` from the gcd of univariate images modulo
/// a prime, with the other variables set to pseudo-random residues. Only
/// images that keep both leading coefficients in `var` are used, so the bound
/// is sound; `None` when no such image was found.
fn image_degree_bound(a: &MultiPoly, b: &MultiPoly, var: usize) -> Option<usize> {
    let mut seed: u64 = 0x9e37_79b9;
    for _ in 0..4 {
        let point: Vec<u64> = (0..a.nvars())
            .map(|_| {
                seed = seed
                    .wrapping_mul(6_364_136_223_846_793_005)
                    .wrapping_add(1_442_695_040_888_963_407);
                (seed >> 33) % PRIME
            })
            .collect();
        let ia = image(a, var, &point)?;
        let ib = image(b, var, &point)?;
        if ia.len() != a.degree_in(var) as usize + 1 || ib.len() != b.degree_in(var) as usize + 1 {
            continue;
        }
        return Some(univariate_gcd_degree(ia, ib));
    }
    None
}

/// Dense coefficients in `var` of `p` mod `PRIME` at `point`, trailing zeros dropped.
fn image(p: &MultiPoly, var: usize, point: &[u64]) -> Option<Vec<u64>> {
    let modulus = num_bigint::BigInt::from(PRIME);
    let mut out = vec![0u64; p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        if !c.denom().is_one() {
            return None;
        }
        let r = c.numer() % &modulus;
        let r = if r.sign() == num_bigint::Sign::Minus {
            r + &modulus
        } else {
            r
        };
        let mut v: u64 = r.try_into().expect("reduced below the prime");
        for (i, &e) in m.exponents().iter().enumerate() {
            if i != var {
                v = mulmod(v, powmod(point[i], e as u64));
            }
        }
        let slot = &mut out[m.exponents()[var] as usize];
        *slot = (*slot + v) % PRIME;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        exp >>= 1;
    }
    acc
}

fn univariate_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), PRIME - 2);
        while a.len() >= b.len() {
            let q = mulmod(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                a[j + shift] = (a[j + shift] + PRIME - mulmod(q, bj)) % PRIME;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn trim(v: &mut Vec<MultiPoly>) {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    if v.len() == 1 && v[0].is_zero() {
        v.clear();
    }
}
