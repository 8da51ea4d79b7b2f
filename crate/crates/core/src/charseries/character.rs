use super::bernoulli::bernoulli_numbers;
use super::laurent::{LinearForm, TruncatedLaurent};
use super::SeriesError;
use crate::exactalg::{factorial, int, MultiPoly, RatFunc, Rational};
use crate::linkgeom::WeightedLink;

/// Enough relative precision for `a0`, `a1` with one spare term.
pub const DEFAULT_ORDER: usize = 3;

/// Leading Laurent data of the index character, `n + 1 = dim_y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharCoeffs {
    pub a0: RatFunc,
    pub a1: RatFunc,
    pub dim_y: usize,
}

impl CharCoeffs {
    pub fn for_link(link: &WeightedLink) -> Result<Self, SeriesError> {
        extract_a_coeffs(&index_character(link, DEFAULT_ORDER)?, link.dim_y())
    }

    pub fn nvars(&self) -> usize {
        self.a0.nvars()
    }
}

/// Index character of the link's hypersurface ring.
pub fn index_character(link: &WeightedLink, order: usize) -> Result<TruncatedLaurent, SeriesError> {
    if order < 2 {
        return Err(SeriesError::OrderTooSmall(order));
    }
    character_of(&link.charges(), Some(&link.relation_charge()), order)
}

/// `(1 - e^{-D t}) * prod_i 1/(1 - e^{-x_i t})`, or the bare product when
/// `relation` is `None` (ambient mode).
///
/// Each factor is `(1/(x t)) * u/(1 - e^{-u})` at `u = x t`, so all poles are
/// collected into one denominator `prod x_i` and the remaining products stay
/// polynomial until the end.
pub fn character_of(
    charges: &[LinearForm],
    relation: Option<&LinearForm>,
    order: usize,
) -> Result<TruncatedLaurent, SeriesError> {
    if order == 0 {
        return Err(SeriesError::OrderTooSmall(order));
    }
    let n = charges
        .first()
        .map(LinearForm::nvars)
        .or(relation.map(LinearForm::nvars))
        .ok_or(SeriesError::ZeroCharge)?;
    let bern = bernoulli_numbers(order);
    let todd: Vec<Rational> = bern
        .iter()
        .enumerate()
        .map(|(m, b)| b / Rational::from_integer(factorial(m as u64)))
        .collect();

    let mut acc = one_series(n, order);
    let mut poles = MultiPoly::one(n);
    for x in charges {
        let xp = x.to_poly();
        acc = mul_poly_series(&acc, &power_series(&xp, &todd));
        poles = &poles * &xp;
    }
    let mut min_degree = -(charges.len() as i64);
    if let Some(d) = relation {
        // (1 - e^{-D t}) / t = sum_{m >= 0} -(-D)^{m+1} t^m / (m+1)!
        let scales: Vec<Rational> = (0..order as u64)
            .map(|m| Rational::from_integer(factorial(m + 1)).recip() * int(-1))
            .collect();
        let neg_d = -d.to_poly();
        let h: Vec<MultiPoly> = power_series(&neg_d, &scales)
            .into_iter()
            .map(|c| &c * &neg_d)
            .collect();
        acc = mul_poly_series(&acc, &h);
        min_degree += 1;
    }
    let coeffs = acc
        .into_iter()
        .map(|c| RatFunc::new(c, poles.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruncatedLaurent::new(n, min_degree, coeffs))
}

fn one_series(n: usize, order: usize) -> Vec<MultiPoly> {
    let mut v = vec![MultiPoly::zero(n); order];
    v[0] = MultiPoly::one(n);
    v
}

/// `sum_m scales[m] x^m t^m`.
fn power_series(x: &MultiPoly, scales: &[Rational]) -> Vec<MultiPoly> {
    let mut out = Vec::with_capacity(scales.len());
    let mut power = MultiPoly::one(x.nvars());
    for s in scales {
        out.push(power.scale(s));
        power = &power * x;
    }
    out
}

fn mul_poly_series(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let order = a.len().min(b.len());
    (0..order)
        .map(|k| {
            (0..=k).fold(MultiPoly::zero(a[0].nvars()), |acc, i| {
                if a[i].is_zero() || b[k - i].is_zero() {
                    acc
                } else {
                    &acc + &(&a[i] * &b[k - i])
                }
            })
        })
        .collect()
}

/// `a0 = c_{-dim_y} / (dim_y - 1)!`, `a1 = c_{-dim_y + 1} / (dim_y - 2)!`
/// with `0!` standing in when `dim_y = 1`.
pub fn extract_a_coeffs(f: &TruncatedLaurent, dim_y: usize) -> Result<CharCoeffs, SeriesError> {
    let expected = -(dim_y as i64);
    if f.min_degree() != expected {
        return Err(SeriesError::PoleOrderMismatch {
            expected,
            found: f.min_degree(),
        });
    }
    let lead = f.coeff(expected).expect("leading coefficient stored");
    let next = f
        .coeff(expected + 1)
        .ok_or(SeriesError::OrderTooSmall(f.order()))?;
    let f0 = Rational::from_integer(factorial(dim_y as u64 - 1));
    let f1 = Rational::from_integer(factorial(dim_y.saturating_sub(2) as u64));
    Ok(CharCoeffs {
        a0: lead.scale(&f0.recip()),
        a1: next.scale(&f1.recip()),
        dim_y,
    })
}

/// `a0 (dim_y - 1)! = d / (w_0..w_k * b0^k * prod_j (d^2 b0^2/4 - b_j^2) * [d b0 / 2])`,
/// the bracket present for an odd tail.
pub fn closed_form_a0(link: &WeightedLink) -> RatFunc {
    let n = link.nvars();
    let d = int(link.degree() as i64);
    let half_d = &d / int(2);
    let b0 = MultiPoly::var(n, 0);
    let weights = link
        .inner_weights()
        .iter()
        .fold(int(1), |acc, &w| acc * int(w as i64));
    let k = link.inner_weights().len() as u32 - 1;
    let mut den = b0.pow(k).scale(&weights);
    let square = b0.pow(2).scale(&(&half_d * &half_d));
    for j in 1..n {
        den = &den * &(&square - &MultiPoly::var(n, j).pow(2));
    }
    if link.odd_tail() {
        den = &den * &b0.scale(&half_d);
    }
    let den = den.scale(&Rational::from_integer(factorial(link.dim_y() as u64 - 1)));
    RatFunc::new(MultiPoly::constant(n, d), den).expect("closed-form denominator is nonzero")
}
