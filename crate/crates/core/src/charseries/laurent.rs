use super::bernoulli::bernoulli_numbers;
use super::SeriesError;
use crate::exactalg::{factorial, MultiPoly, RatFunc, Rational};
use num_traits::{One, Zero};

/// Linear function of `(b0, ..., br)`: the charge of one coordinate under `xi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm(Vec<Rational>);

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(SeriesError::ZeroCharge);
        }
        Ok(LinearForm(coeffs))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Value at a Reeb vector or on a direction; linear either way.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.0.len(), "linear form dimension mismatch");
        self.0
            .iter()
            .zip(point)
            .fold(Rational::zero(), |acc, (c, x)| acc + c * x)
    }

    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::linear(&self.0)
    }
}

/// `sum_{i} c_i t^{min_degree + i}` for `i < order`, coefficients in `RatFunc`.
///
/// `order` is the number of stored coefficients; everything from degree
/// `min_degree + order` on is unknown. The leading stored coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLaurent {
    nvars: usize,
    min_degree: i64,
    coeffs: Vec<RatFunc>,
}

impl TruncatedLaurent {
    /// Drops leading zero coefficients, shifting `min_degree` up. An all-zero
    /// input keeps a single zero coefficient.
    pub fn new(nvars: usize, min_degree: i64, coeffs: Vec<RatFunc>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => TruncatedLaurent {
                nvars,
                min_degree,
                coeffs,
            },
            Some(p) => TruncatedLaurent {
                nvars,
                min_degree: min_degree + p as i64,
                coeffs: coeffs[p..].to_vec(),
            },
            None => TruncatedLaurent {
                nvars,
                min_degree,
                coeffs: vec![RatFunc::zero(nvars)],
            },
        }
    }

    /// The constant `1` known to `order` terms.
    pub fn one(nvars: usize, order: usize) -> Self {
        let mut coeffs = vec![RatFunc::zero(nvars); order.max(1)];
        coeffs[0] = RatFunc::one(nvars);
        TruncatedLaurent {
            nvars,
            min_degree: 0,
            coeffs,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    /// Coefficient of `t^deg`; zero below the leading term, `None` past the truncation.
    pub fn coeff(&self, deg: i64) -> Option<RatFunc> {
        if deg < self.min_degree {
            return Some(RatFunc::zero(self.nvars));
        }
        self.coeffs.get((deg - self.min_degree) as usize).cloned()
    }

    /// Multiplies every coefficient by `t^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        TruncatedLaurent {
            nvars: self.nvars,
            min_degree: self.min_degree + shift,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Self::new(
            self.nvars,
            self.min_degree,
            self.coeffs.iter().map(f).collect(),
        )
    }
}

/// Cauchy product, exact up to `min(order)` terms.
pub fn series_mul(a: &TruncatedLaurent, b: &TruncatedLaurent) -> TruncatedLaurent {
    assert_eq!(a.nvars, b.nvars, "variable count mismatch");
    let order = a.order().min(b.order());
    let coeffs = (0..order)
        .map(|k| {
            (0..=k).fold(RatFunc::zero(a.nvars), |acc, i| {
                let (x, y) = (&a.coeffs[i], &b.coeffs[k - i]);
                if x.is_zero() || y.is_zero() {
                    acc
                } else {
                    &acc + &(x * y)
                }
            })
        })
        .collect();
    TruncatedLaurent::new(a.nvars, a.min_degree + b.min_degree, coeffs)
}

/// `1 / (1 - e^{-x t})`: coefficient of `t^{m-1}` is `B_m x^{m-1} / m!`.
pub fn factor_series(x: &LinearForm, order: usize) -> Result<TruncatedLaurent, SeriesError> {
    if order == 0 {
        return Err(SeriesError::OrderTooSmall(order));
    }
    let n = x.nvars();
    let xp = x.to_poly();
    let bern = bernoulli_numbers(order);
    let mut coeffs = Vec::with_capacity(order);
    coeffs.push(RatFunc::reciprocal_of(&xp)?);
    let mut power = MultiPoly::one(n);
    for (m, bm) in bern.iter().enumerate().skip(1).take(order - 1) {
        let scale = bm / Rational::from_integer(factorial(m as u64));
        coeffs.push(RatFunc::from_poly(power.scale(&scale)));
        power = &power * &xp;
    }
    Ok(TruncatedLaurent::new(n, -1, coeffs))
}

/// `1 - e^{-D t} = sum_{m >= 1} -(-D t)^m / m!`, starting at `t^1`.
pub fn relation_series(d: &LinearForm, order: usize) -> Result<TruncatedLaurent, SeriesError> {
    if order == 0 {
        return Err(SeriesError::OrderTooSmall(order));
    }
    let n = d.nvars();
    let neg_d = -d.to_poly();
    let mut coeffs = Vec::with_capacity(order);
    let mut power = neg_d.clone();
    for m in 1..=order as u64 {
        let scale = -Rational::one() / Rational::from_integer(factorial(m));
        coeffs.push(RatFunc::from_poly(power.scale(&scale)));
        power = &power * &neg_d;
    }
    Ok(TruncatedLaurent::new(n, 1, coeffs))
}
