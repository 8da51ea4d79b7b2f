use super::LinkError;
use crate::charseries::LinearForm;
use crate::exactalg::{int, Rational};
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LinkKind {
    General,
    /// Pure powers; exponents aligned with the sorted inner weights.
    BrieskornPham {
        exponents: Vec<u32>,
    },
}

/// Link of `f = f'(z_0, ..., z_k) + z_{k+1}^2 + ... + z_{k+q}^2` with `f'`
/// weighted homogeneous of degree `d'` and `2 w_i < d'`.
///
/// When `d'` is odd everything is rescaled to `d = 2 d'` so the tail weight
/// `d / 2` is integral. Reeb parameters are `(b0, b_1..b_r)` with `r = q / 2`;
/// the tail pairs `u_j = z + i z'`, `v_j = z - i z'` carry charges `d b0 / 2 +- b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedLink {
    input_weights: Vec<u64>,
    input_degree: u64,
    inner_weights: Vec<u64>,
    degree: u64,
    tail: usize,
    kind: LinkKind,
}

impl WeightedLink {
    pub fn new(inner_weights: &[u64], inner_degree: u64, tail: usize) -> Result<Self, LinkError> {
        Self::build(inner_weights, inner_degree, tail, LinkKind::General)
    }

    /// `z_0^{m_0} + ... + z_k^{m_k}` plus `tail` squares. Exponents equal to 2
    /// are moved into the quadratic tail.
    pub fn brieskorn_pham(exponents: &[u32], tail: usize) -> Result<Self, LinkError> {
        if let Some(&m) = exponents.iter().find(|&&m| m == 0) {
            return Err(LinkError::InvalidExponent(m));
        }
        let inner: Vec<u32> = exponents.iter().copied().filter(|&m| m != 2).collect();
        let tail = tail + (exponents.len() - inner.len());
        if inner.is_empty() {
            return Err(LinkError::EmptyWeights);
        }
        let degree = inner.iter().fold(1u64, |acc, &m| acc.lcm(&(m as u64)));
        if inner.contains(&1) {
            return Err(LinkError::LinearFactor {
                weight: degree,
                degree,
            });
        }
        let weights: Vec<u64> = inner.iter().map(|&m| degree / m as u64).collect();
        Self::build(
            &weights,
            degree,
            tail,
            LinkKind::BrieskornPham { exponents: inner },
        )
    }

    fn build(weights: &[u64], degree: u64, tail: usize, kind: LinkKind) -> Result<Self, LinkError> {
        if weights.is_empty() {
            return Err(LinkError::EmptyWeights);
        }
        if degree == 0 || weights.contains(&0) {
            return Err(LinkError::NonPositive);
        }
        if let Some(&w) = weights.iter().find(|&&w| w == degree) {
            return Err(LinkError::LinearFactor { weight: w, degree });
        }
        if let Some(&w) = weights.iter().find(|&&w| 2 * w >= degree) {
            return Err(LinkError::WeightTooLarge { weight: w, degree });
        }
        if tail < 2 {
            return Err(LinkError::TailTooShort(tail));
        }
        let scale = if degree % 2 == 1 { 2 } else { 1 };
        let mut order: Vec<usize> = (0..weights.len()).collect();
        order.sort_by_key(|&i| (weights[i], i));
        let inner_weights = order.iter().map(|&i| weights[i] * scale).collect();
        let kind = match kind {
            LinkKind::BrieskornPham { exponents } => LinkKind::BrieskornPham {
                exponents: order.iter().map(|&i| exponents[i]).collect(),
            },
            LinkKind::General => LinkKind::General,
        };
        Ok(WeightedLink {
            input_weights: weights.to_vec(),
            input_degree: degree,
            inner_weights,
            degree: degree * scale,
            tail,
            kind,
        })
    }

    pub fn input_weights(&self) -> &[u64] {
        &self.input_weights
    }

    pub fn input_degree(&self) -> u64 {
        self.input_degree
    }

    /// Sorted, rescaled weights `w_0 <= ... <= w_k`.
    pub fn inner_weights(&self) -> &[u64] {
        &self.inner_weights
    }

    /// Total degree `d`, always even.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn tail_len(&self) -> usize {
        self.tail
    }

    pub fn kind(&self) -> &LinkKind {
        &self.kind
    }

    pub fn bp_exponents(&self) -> Option<&[u32]> {
        match &self.kind {
            LinkKind::BrieskornPham { exponents } => Some(exponents),
            LinkKind::General => None,
        }
    }

    /// Index of the last inner coordinate.
    pub fn k(&self) -> usize {
        self.inner_weights.len() - 1
    }

    /// Ambient coordinate count `N`.
    pub fn n_coords(&self) -> usize {
        self.inner_weights.len() + self.tail
    }

    pub fn dim_y(&self) -> usize {
        self.n_coords() - 1
    }

    pub fn rank(&self) -> usize {
        self.tail / 2
    }

    pub fn odd_tail(&self) -> bool {
        self.tail % 2 == 1
    }

    /// Number of Reeb parameters `r + 1`.
    pub fn nvars(&self) -> usize {
        self.rank() + 1
    }

    pub fn cone_dimension(&self) -> usize {
        self.rank() + 1
    }

    /// `I = |w| - d`.
    pub fn fano_index(&self) -> i64 {
        let w: u64 = self.quasi_regular_weights().iter().sum();
        w as i64 - self.degree as i64
    }

    /// Coordinate weights under `xi_w`: inner weights, then `d / 2` for each tail entry.
    pub fn quasi_regular_weights(&self) -> Vec<u64> {
        let half = self.degree / 2;
        self.inner_weights
            .iter()
            .copied()
            .chain(std::iter::repeat_n(half, self.tail))
            .collect()
    }

    fn form(&self, b0: Rational, j: Option<(usize, i64)>) -> LinearForm {
        let mut c = vec![Rational::zero(); self.nvars()];
        c[0] = b0;
        if let Some((j, s)) = j {
            c[j] = int(s);
        }
        LinearForm::new(c).expect("charges have a positive b0 coefficient")
    }

    /// Generator charges: `w_i b0`, then `d b0/2 + b_j`, `d b0/2 - b_j` for each
    /// pair, then `d b0 / 2` for an unpaired tail coordinate.
    pub fn charges(&self) -> Vec<LinearForm> {
        let half = int(self.degree as i64 / 2);
        let mut out: Vec<LinearForm> = self
            .inner_weights
            .iter()
            .map(|&w| self.form(int(w as i64), None))
            .collect();
        for j in 1..=self.rank() {
            out.push(self.form(half.clone(), Some((j, 1))));
            out.push(self.form(half.clone(), Some((j, -1))));
        }
        if self.odd_tail() {
            out.push(self.form(half, None));
        }
        out
    }

    /// Charge of `f` itself, `d b0`.
    pub fn relation_charge(&self) -> LinearForm {
        self.form(int(self.degree as i64), None)
    }

    /// Charge of the inner coordinate `z_i`.
    pub fn inner_charge(&self, i: usize) -> Result<LinearForm, LinkError> {
        let w = self
            .inner_weights
            .get(i)
            .ok_or(LinkError::CoordinateOutOfRange {
                index: i,
                k: self.k(),
            })?;
        Ok(self.form(int(*w as i64), None))
    }

    /// Charge of the holomorphic volume form, `I b0`.
    pub fn volume_form_charge(&self) -> LinearForm {
        self.form(int(self.fano_index()), None)
    }

    fn check_len(&self, xi: &ReebVector) -> Result<(), LinkError> {
        if xi.len() != self.nvars() {
            return Err(LinkError::DimensionMismatch {
                expected: self.nvars(),
                found: xi.len(),
            });
        }
        Ok(())
    }

    /// Every generator charge strictly positive, i.e. `b0 > 0` and `|b_j| < d b0 / 2`.
    pub fn in_sasaki_cone(&self, xi: &ReebVector) -> bool {
        if self.check_len(xi).is_err() {
            return false;
        }
        self.charges()
            .iter()
            .all(|c| c.eval(xi.coeffs()).is_positive())
    }

    /// The quasi-regular point of the Calabi-Yau locus, `(dim_y / I, 0, ..., 0)`.
    pub fn sigma_reeb(&self) -> Result<ReebVector, LinkError> {
        let i = self.fano_index();
        if i <= 0 {
            return Err(LinkError::NotPositiveCase(i));
        }
        let mut c = vec![Rational::zero(); self.nvars()];
        c[0] = Rational::new((self.dim_y() as i64).into(), i.into());
        Ok(ReebVector::new(c))
    }

    /// `xi` in the cone with volume-form charge `dim_y`. Independent of the `b_j`.
    pub fn on_sigma(&self, xi: &ReebVector) -> bool {
        self.in_sasaki_cone(xi)
            && self.volume_form_charge().eval(xi.coeffs()) == int(self.dim_y() as i64)
    }

    /// Point of the Calabi-Yau locus with the given `b_j` (`b0` fixed by the locus).
    pub fn sigma_point(&self, bs: &[Rational]) -> Result<ReebVector, LinkError> {
        let mut xi = self.sigma_reeb()?;
        if bs.len() != self.rank() {
            return Err(LinkError::DimensionMismatch {
                expected: self.rank(),
                found: bs.len(),
            });
        }
        xi.0[1..].clone_from_slice(bs);
        Ok(xi)
    }

    /// The Reeb cone bound on `|b_j|` as a multiple of `b0`: `d/2` from charge
    /// positivity, alongside the `d/4` reading.
    pub fn cone_bounds(&self) -> (Rational, Rational) {
        let d = int(self.degree as i64);
        (&d / int(2), d / int(4))
    }
}

/// Reeb vector `b0 xi_w + sum_j b_j zeta_j` as its coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReebVector(Vec<Rational>);

impl ReebVector {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        ReebVector(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(1, 0, ..., 0)`.
    pub fn quasi_regular(nvars: usize) -> Self {
        let mut c = vec![Rational::zero(); nvars];
        c[0] = int(1);
        ReebVector(c)
    }
}
