use crate::exactalg::{binomial, Rational};
use num_traits::One;

/// `B_0..=B_upto` in the convention `t / (1 - e^{-t}) = sum B_m t^m / m!`
/// (so `B_1 = +1/2`), from `sum_{j=0}^{m} C(m+1, j) B_j = m + 1`.
pub fn bernoulli_numbers(upto: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        let mut acc = Rational::from_integer((m as i64 + 1).into());
        for (j, bj) in b.iter().enumerate() {
            acc -= Rational::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
        }
        // C(m+1, m) = m+1
        acc /= Rational::from_integer((m as i64 + 1).into());
        b.push(acc);
    }
    b
}

pub fn bernoulli(m: usize) -> Rational {
    bernoulli_numbers(m).pop().unwrap_or_else(Rational::one)
}
