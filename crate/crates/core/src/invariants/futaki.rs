use super::{Dims, InvariantError};
use crate::charseries::CharCoeffs;
use crate::exactalg::{int, solve_linear, RatFunc, Rational};
use crate::linkgeom::ReebVector;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

/// Element of the torus Lie algebra in the basis `{xi_w, zeta_1, ..., zeta_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectionVector(Vec<Rational>);

impl DirectionVector {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        DirectionVector(coeffs)
    }

    pub fn zero(nvars: usize) -> Self {
        DirectionVector(vec![Rational::zero(); nvars])
    }

    /// The `i`-th basis vector (`0` is `xi_w`).
    pub fn basis(nvars: usize, i: usize) -> Self {
        let mut v = Self::zero(nvars);
        v.0[i] = int(1);
        v
    }

    /// The Reeb vector itself as a direction.
    pub fn radial(xi: &ReebVector) -> Self {
        DirectionVector(xi.coeffs().to_vec())
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

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        DirectionVector(self.0.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        DirectionVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// `(b0, b1, c0)` of the product configuration generated by `zeta`, as
/// functions on the cone.
pub fn coef_derivatives(
    c: &CharCoeffs,
    zeta: &DirectionVector,
) -> Result<(RatFunc, RatFunc, RatFunc), InvariantError> {
    let dims = Dims::new(c.dim_y);
    let m1 = dims.m_minus_1()?;
    let da0 = c.a0.directional_derivative(zeta.coeffs())?;
    let dda0 = da0.directional_derivative(zeta.coeffs())?;
    let da1 = c.a1.directional_derivative(zeta.coeffs())?;
    Ok((
        da0.scale(&-dims.m().recip()),
        da1.scale(&-m1.recip()),
        dda0.scale(&dims.m_m_plus_1().recip()),
    ))
}

/// Values and directional jets of `a0`, `a1` at one Reeb vector.
#[derive(Clone, Debug)]
pub struct PointJets<'a> {
    coeffs: &'a CharCoeffs,
    xi: Vec<Rational>,
    a0: Rational,
    a1: Rational,
    dims: Dims,
}

impl<'a> PointJets<'a> {
    pub fn new(coeffs: &'a CharCoeffs, xi: &ReebVector) -> Result<Self, InvariantError> {
        if xi.len() != coeffs.nvars() {
            return Err(InvariantError::DimensionMismatch {
                expected: coeffs.nvars(),
                found: xi.len(),
            });
        }
        let a0 = coeffs.a0.eval(xi.coeffs())?;
        let a1 = coeffs.a1.eval(xi.coeffs())?;
        Ok(PointJets {
            coeffs,
            xi: xi.coeffs().to_vec(),
            a0,
            a1,
            dims: Dims::new(coeffs.dim_y),
        })
    }

    pub fn a0(&self) -> &Rational {
        &self.a0
    }

    pub fn a1(&self) -> &Rational {
        &self.a1
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    fn check(&self, zeta: &DirectionVector) -> Result<(), InvariantError> {
        if zeta.len() != self.xi.len() {
            return Err(InvariantError::DimensionMismatch {
                expected: self.xi.len(),
                found: zeta.len(),
            });
        }
        Ok(())
    }

    /// `(D_zeta a0, D_zeta^2 a0)` at `xi`.
    pub fn a0_derivatives(
        &self,
        zeta: &DirectionVector,
    ) -> Result<(Rational, Rational), InvariantError> {
        self.check(zeta)?;
        let t = self.coeffs.a0.taylor_along(&self.xi, zeta.coeffs(), 2)?;
        Ok((t[1].clone(), &t[2] * int(2)))
    }

    pub fn a1_derivative(&self, zeta: &DirectionVector) -> Result<Rational, InvariantError> {
        self.check(zeta)?;
        Ok(self.coeffs.a1.taylor_along(&self.xi, zeta.coeffs(), 1)?[1].clone())
    }

    /// `D_zeta D_eta a0` by polarization of second directional derivatives.
    pub fn mixed_a0(
        &self,
        zeta: &DirectionVector,
        eta: &DirectionVector,
    ) -> Result<Rational, InvariantError> {
        let (_, zz) = self.a0_derivatives(zeta)?;
        let (_, ee) = self.a0_derivatives(eta)?;
        let (_, ss) = self.a0_derivatives(&zeta.add(eta))?;
        Ok((ss - zz - ee) / int(2))
    }

    /// `<zeta, eta> = D_zeta D_eta a0 / (m (m+1)) - D_zeta a0 D_eta a0 / (m^2 a0)`.
    pub fn inner(
        &self,
        zeta: &DirectionVector,
        eta: &DirectionVector,
    ) -> Result<Rational, InvariantError> {
        let (dz, _) = self.a0_derivatives(zeta)?;
        let (de, _) = self.a0_derivatives(eta)?;
        let mixed = self.mixed_a0(zeta, eta)?;
        let m = self.dims.m();
        Ok(mixed / self.dims.m_m_plus_1() - dz * de / (&m * &m * &self.a0))
    }

    pub fn norm_sq(&self, zeta: &DirectionVector) -> Result<Rational, InvariantError> {
        let (dz, dzz) = self.a0_derivatives(zeta)?;
        let m = self.dims.m();
        Ok(dzz / self.dims.m_m_plus_1() - &dz * &dz / (&m * &m * &self.a0))
    }

    /// `Fut = (a1 / a0) b0 - b1` with `b0 = -D a0 / m`, `b1 = -D a1 / (m - 1)`.
    pub fn futaki(&self, zeta: &DirectionVector) -> Result<Rational, InvariantError> {
        let m1 = self.dims.m_minus_1()?;
        let (da0, _) = self.a0_derivatives(zeta)?;
        let da1 = self.a1_derivative(zeta)?;
        let b0 = -da0 / self.dims.m();
        let b1 = -da1 / m1;
        Ok(&self.a1 / &self.a0 * b0 - b1)
    }

    /// Gram matrix of the inner product on `zeta_1..zeta_r`.
    pub fn gram(&self) -> Result<Vec<Vec<Rational>>, InvariantError> {
        let n = self.xi.len();
        let basis: Vec<DirectionVector> = (1..n).map(|i| DirectionVector::basis(n, i)).collect();
        let firsts = basis
            .iter()
            .map(|z| self.a0_derivatives(z))
            .collect::<Result<Vec<_>, _>>()?;
        let m = self.dims.m();
        let m2a0 = &m * &m * &self.a0;
        let mut g = vec![vec![Rational::zero(); n - 1]; n - 1];
        for i in 0..n - 1 {
            g[i][i] = &firsts[i].1 / self.dims.m_m_plus_1() - &firsts[i].0 * &firsts[i].0 / &m2a0;
            for j in i + 1..n - 1 {
                let (_, ss) = self.a0_derivatives(&basis[i].add(&basis[j]))?;
                let mixed = (ss - &firsts[i].1 - &firsts[j].1) / int(2);
                let v = mixed / self.dims.m_m_plus_1() - &firsts[i].0 * &firsts[j].0 / &m2a0;
                g[i][j] = v.clone();
                g[j][i] = v;
            }
        }
        Ok(g)
    }

    /// `chi` with zero `xi_w` component and `<zeta_i, chi> = Fut(zeta_i)`.
    pub fn extremal_field(&self) -> Result<DirectionVector, InvariantError> {
        let n = self.xi.len();
        if n == 1 {
            return Ok(DirectionVector::zero(1));
        }
        let g = self.gram()?;
        let rhs = (1..n)
            .map(|i| self.futaki(&DirectionVector::basis(n, i)))
            .collect::<Result<Vec<_>, _>>()?;
        let sol = solve_linear(&g, &rhs)?;
        let mut chi = vec![Rational::zero()];
        chi.extend(sol);
        Ok(DirectionVector::new(chi))
    }
}

pub fn inner_product(
    zeta: &DirectionVector,
    eta: &DirectionVector,
    xi: &ReebVector,
    c: &CharCoeffs,
) -> Result<Rational, InvariantError> {
    PointJets::new(c, xi)?.inner(zeta, eta)
}

pub fn gram_matrix(xi: &ReebVector, c: &CharCoeffs) -> Result<Vec<Vec<Rational>>, InvariantError> {
    PointJets::new(c, xi)?.gram()
}

pub fn futaki_product(
    xi: &ReebVector,
    zeta: &DirectionVector,
    c: &CharCoeffs,
) -> Result<Rational, InvariantError> {
    PointJets::new(c, xi)?.futaki(zeta)
}

pub fn extremal_field(xi: &ReebVector, c: &CharCoeffs) -> Result<DirectionVector, InvariantError> {
    PointJets::new(c, xi)?.extremal_field()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FutakiData {
    pub futaki: Rational,
    pub relative_futaki: Rational,
    pub chi: DirectionVector,
    pub norm_sq_chi: Rational,
    /// `<zeta, chi>`
    pub correction: Rational,
    pub gram: Vec<Vec<Rational>>,
}

pub fn relative_futaki_product(
    xi: &ReebVector,
    zeta: &DirectionVector,
    c: &CharCoeffs,
) -> Result<FutakiData, InvariantError> {
    let jets = PointJets::new(c, xi)?;
    let chi = jets.extremal_field()?;
    let futaki = jets.futaki(zeta)?;
    let correction = jets.inner(zeta, &chi)?;
    Ok(FutakiData {
        relative_futaki: &futaki - &correction,
        futaki,
        norm_sq_chi: jets.norm_sq(&chi)?,
        correction,
        chi,
        gram: jets.gram()?,
    })
}

/// `sign * sqrt(square)`; Calabi-type bounds are quotients by a norm and are
/// rational only when the squared norm is a rational square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedSqrt {
    pub sign: i8,
    pub square: Rational,
}

impl SignedSqrt {
    /// `value / sqrt(norm_sq)`.
    pub fn quotient(value: &Rational, norm_sq: &Rational) -> Result<Self, InvariantError> {
        if !norm_sq.is_positive() {
            return Err(InvariantError::ZeroNorm);
        }
        let sign = if value.is_zero() {
            0
        } else if value.is_positive() {
            1
        } else {
            -1
        };
        Ok(SignedSqrt {
            sign,
            square: value * value / norm_sq,
        })
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }

    /// The value itself when `square` is a rational square.
    pub fn exact(&self) -> Option<Rational> {
        let root = |n: &BigInt| {
            let s = n.sqrt();
            (&s * &s == *n).then_some(s)
        };
        let num = root(self.square.numer())?;
        let den = root(self.square.denom())?;
        Some(Rational::new(num, den) * int(self.sign as i64))
    }
}

impl fmt::Display for SignedSqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.exact() {
            return write!(f, "{v}");
        }
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}sqrt({})", self.square)
    }
}

/// `-Fut(xi, zeta) / ||zeta||` for the product configuration of `zeta`, in
/// units of the dimensional constant.
pub fn calabi_lower_bound(
    xi: &ReebVector,
    zeta: &DirectionVector,
    c: &CharCoeffs,
) -> Result<SignedSqrt, InvariantError> {
    let jets = PointJets::new(c, xi)?;
    let norm_sq = jets.norm_sq(zeta)?;
    if norm_sq.is_zero() {
        return Err(InvariantError::ZeroNorm);
    }
    SignedSqrt::quotient(&-jets.futaki(zeta)?, &norm_sq)
}

/// `Fut_chi^2 / ||zeta||^2 + ||chi||^2`, the squared lower bound available when
/// `Fut_chi < 0`.
pub fn calabi_lb2_rhs(
    relative_futaki: &Rational,
    norm_sq_zeta: &Rational,
    norm_sq_chi: &Rational,
) -> Result<Option<Rational>, InvariantError> {
    if !norm_sq_zeta.is_positive() {
        return Err(InvariantError::ZeroNorm);
    }
    if !relative_futaki.is_negative() {
        return Ok(None);
    }
    Ok(Some(
        relative_futaki * relative_futaki / norm_sq_zeta + norm_sq_chi,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charseries::{character_of, extract_a_coeffs, LinearForm};
    use crate::exactalg::rat;

    fn form(c: &[i64]) -> LinearForm {
        LinearForm::new(c.iter().map(|&x| int(x)).collect()).unwrap()
    }

    fn reeb(c: &[Rational]) -> ReebVector {
        ReebVector::new(c.to_vec())
    }

    /// Ambient C^2 with charges (b0, b0 + b1): the torus acts asymmetrically.
    fn asymmetric() -> CharCoeffs {
        let f = character_of(&[form(&[1, 0]), form(&[1, 1])], None, 3).unwrap();
        extract_a_coeffs(&f, 2).unwrap()
    }

    #[test]
    fn radial_direction_is_degenerate() {
        let c = asymmetric();
        let xi = reeb(&[int(1), rat(1, 3)]);
        let r = DirectionVector::radial(&xi);
        let z = DirectionVector::new(vec![rat(2, 7), int(-3)]);
        assert!(inner_product(&r, &r, &xi, &c).unwrap().is_zero());
        assert!(inner_product(&r, &z, &xi, &c).unwrap().is_zero());
        assert!(futaki_product(&xi, &r, &c).unwrap().is_zero());
    }

    #[test]
    fn radial_b0_equals_a0() {
        let c = asymmetric();
        let xi = reeb(&[int(2), int(1)]);
        let (b0, b1, c0) = coef_derivatives(&c, &DirectionVector::radial(&xi)).unwrap();
        let p = xi.coeffs();
        assert_eq!(b0.eval(p).unwrap(), c.a0.eval(p).unwrap());
        assert_eq!(b1.eval(p).unwrap(), c.a1.eval(p).unwrap());
        assert_eq!(c0.eval(p).unwrap(), c.a0.eval(p).unwrap());
    }

    #[test]
    fn asymmetric_futaki_matches_symbolic_route() {
        let c = asymmetric();
        let xi = reeb(&[int(1), rat(1, 2)]);
        let zeta = DirectionVector::basis(2, 1);
        let fast = futaki_product(&xi, &zeta, &c).unwrap();
        let (b0, b1, _) = coef_derivatives(&c, &zeta).unwrap();
        let p = xi.coeffs();
        let slow = c.a1.eval(p).unwrap() / c.a0.eval(p).unwrap() * b0.eval(p).unwrap()
            - b1.eval(p).unwrap();
        assert_eq!(fast, slow);
        assert!(!fast.is_zero());
    }

    #[test]
    fn duality_and_relative_vanishing() {
        let c = asymmetric();
        let xi = reeb(&[int(1), rat(1, 2)]);
        let data = relative_futaki_product(&xi, &DirectionVector::basis(2, 1), &c).unwrap();
        assert!(!data.chi.is_zero());
        assert!(data.relative_futaki.is_zero());
        let neg = data.chi.scale(&int(-1));
        let fut_chi = futaki_product(&xi, &data.chi, &c).unwrap();
        assert_eq!(fut_chi, data.norm_sq_chi);
        let rel = relative_futaki_product(&xi, &neg, &c).unwrap();
        assert!(rel.relative_futaki.is_zero());
    }

    #[test]
    fn calabi_bound_of_minus_chi_is_norm_chi() {
        let c = asymmetric();
        let xi = reeb(&[int(1), rat(1, 2)]);
        let chi = extremal_field(&xi, &c).unwrap();
        let bound = calabi_lower_bound(&xi, &chi.scale(&int(-1)), &c).unwrap();
        let norm_sq = inner_product(&chi, &chi, &xi, &c).unwrap();
        assert_eq!(
            bound,
            SignedSqrt {
                sign: 1,
                square: norm_sq
            }
        );
    }

    #[test]
    fn zero_norm_rejected() {
        let c = asymmetric();
        let xi = reeb(&[int(1), int(0)]);
        assert_eq!(
            calabi_lower_bound(&xi, &DirectionVector::radial(&xi), &c),
            Err(InvariantError::ZeroNorm)
        );
    }

    #[test]
    fn signed_sqrt_display() {
        let s = SignedSqrt {
            sign: -1,
            square: rat(4, 9),
        };
        assert_eq!(s.to_string(), "-2/3");
        let s = SignedSqrt {
            sign: 1,
            square: rat(1, 2),
        };
        assert_eq!(s.to_string(), "sqrt(1/2)");
        assert_eq!(s.exact(), None);
    }

    #[test]
    fn lb2_only_for_negative_relative_futaki() {
        assert_eq!(calabi_lb2_rhs(&int(1), &int(1), &int(3)).unwrap(), None);
        assert_eq!(
            calabi_lb2_rhs(&int(-2), &int(4), &int(3)).unwrap(),
            Some(int(4))
        );
        assert_eq!(
            calabi_lb2_rhs(&int(-2), &int(0), &int(3)),
            Err(InvariantError::ZeroNorm)
        );
    }
}
