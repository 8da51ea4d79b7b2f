use crate::charseries::bernoulli;
use crate::exactalg::Rational;
use num_bigint::BigInt;
use num_traits::Signed;

/// `|bP_{4m}| = 2^{2m-2} (2^{2m-1} - 1) * numerator(4 |B_{2m}| / m)`.
///
/// The classical `B_m` in this formula is the `m`-th nonzero even-index number
/// up to sign, i.e. `|B_{2m}|` in the modern indexing.
pub fn bp_group_order(m: u32) -> BigInt {
    assert!(m >= 2, "bP_4m order needs m >= 2");
    let b = bernoulli(2 * m as usize).abs();
    let q: Rational = b * Rational::from_integer(4.into()) / Rational::from_integer(m.into());
    let two = BigInt::from(2);
    two.pow(2 * m - 2) * (two.pow(2 * m - 1) - 1) * q.numer()
}
