//! Deformation to the normal cone of `{g = 0}` for a homogeneous `g` of
//! charge `alpha`.

use super::futaki::{DirectionVector, PointJets, SignedSqrt};
use super::{Dims, InvariantError};
use crate::charseries::{CharCoeffs, LinearForm};
use crate::exactalg::{int, Rational};
use crate::linkgeom::{ReebVector, WeightedLink};
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalConeFutaki {
    /// `Fut_chi`
    pub relative: Rational,
    /// `a0 / 2 (1 - 1 / alpha(xi))`
    pub unrelative: Rational,
    /// `<zeta, chi>` for the normal-cone generator `zeta`.
    pub correction: Rational,
    pub chi: DirectionVector,
    pub alpha_at_xi: Rational,
    pub a0: Rational,
}

fn alpha_at(alpha: &LinearForm, xi: &ReebVector) -> Result<Rational, InvariantError> {
    if alpha.nvars() != xi.len() {
        return Err(InvariantError::DimensionMismatch {
            expected: xi.len(),
            found: alpha.nvars(),
        });
    }
    let a = alpha.eval(xi.coeffs());
    if a.is_zero() {
        return Err(InvariantError::ZeroCharge);
    }
    Ok(a)
}

/// `D_chi a0 / (m^2 (m+1) alpha) + a0 alpha(chi) / (m (m+1) alpha^2)`.
fn chi_correction(
    jets: &PointJets<'_>,
    alpha: &LinearForm,
    a: &Rational,
    chi: &DirectionVector,
) -> Result<Rational, InvariantError> {
    let dims = jets.dims();
    let m = dims.m();
    let (d_chi, _) = jets.a0_derivatives(chi)?;
    let alpha_chi = alpha.eval(chi.coeffs());
    Ok(d_chi / (&m * &m * (&m + int(1)) * a) + jets.a0() * alpha_chi / (dims.m_m_plus_1() * a * a))
}

/// Relative Futaki invariant of the normal-cone configuration at `xi` on the
/// Calabi-Yau locus, with `chi` from the exact solve.
pub fn normal_cone_futaki(
    link: &WeightedLink,
    xi: &ReebVector,
    alpha: &LinearForm,
    c: &CharCoeffs,
) -> Result<NormalConeFutaki, InvariantError> {
    let jets = PointJets::new(c, xi)?;
    let chi = jets.extremal_field()?;
    normal_cone_futaki_with_chi(link, xi, alpha, c, &chi)
}

/// As [`normal_cone_futaki`] with a caller-chosen representative of `chi`.
pub fn normal_cone_futaki_with_chi(
    link: &WeightedLink,
    xi: &ReebVector,
    alpha: &LinearForm,
    c: &CharCoeffs,
    chi: &DirectionVector,
) -> Result<NormalConeFutaki, InvariantError> {
    if !link.on_sigma(xi) {
        return Err(InvariantError::NotOnSigma);
    }
    let a = alpha_at(alpha, xi)?;
    let jets = PointJets::new(c, xi)?;
    let a0 = jets.a0().clone();
    let unrelative = &a0 / int(2) * (int(1) - a.recip());
    let correction = chi_correction(&jets, alpha, &a, chi)?;
    Ok(NormalConeFutaki {
        relative: &unrelative - &correction,
        unrelative,
        correction,
        chi: chi.clone(),
        alpha_at_xi: a,
        a0,
    })
}

/// The same invariant before the Calabi-Yau normalization is imposed:
/// `a0 / 2 (1 - 2 a1 / ((m - 1) m a0 alpha)) - <zeta, chi>`. Valid at any
/// interior `xi`; agrees with [`normal_cone_futaki`] on the locus.
pub fn normal_cone_futaki_general(
    xi: &ReebVector,
    alpha: &LinearForm,
    c: &CharCoeffs,
    chi: &DirectionVector,
) -> Result<Rational, InvariantError> {
    let a = alpha_at(alpha, xi)?;
    let jets = PointJets::new(c, xi)?;
    let dims = jets.dims();
    let m = dims.m();
    let ratio = int(2) * jets.a1() / (dims.m_minus_1()? * m * jets.a0() * &a);
    let unrelative = jets.a0() / int(2) * (int(1) - ratio);
    Ok(unrelative - chi_correction(&jets, alpha, &a, chi)?)
}

/// Form valid when `alpha` kills the `zeta_j` and `chi` is tangent to the
/// locus: `a0/2 (1 - 1/alpha) - 2 ||chi||^2 / ((m+1) m^2 alpha)`.
pub fn normal_cone_futaki_tangent_form(
    link: &WeightedLink,
    xi: &ReebVector,
    alpha: &LinearForm,
    c: &CharCoeffs,
    norm_sq_chi: &Rational,
) -> Result<Rational, InvariantError> {
    if !link.on_sigma(xi) {
        return Err(InvariantError::NotOnSigma);
    }
    let a = alpha_at(alpha, xi)?;
    let a0 = c.a0.eval(xi.coeffs())?;
    let m = Dims::new(c.dim_y).m();
    Ok(&a0 / int(2) * (int(1) - a.recip()) - int(2) * norm_sq_chi / ((&m + int(1)) * &m * &m * &a))
}

/// `||zeta||^2 = a0 (m - 1) / (alpha^2 m^2 (m + 1))` for the normal-cone
/// generator. From the central fibre's `a0_hat(s) = a0 alpha / (alpha + s)`
/// along the extra weight `s`.
pub fn normal_cone_norm_sq(
    xi: &ReebVector,
    alpha: &LinearForm,
    c: &CharCoeffs,
) -> Result<Rational, InvariantError> {
    let a = alpha_at(alpha, xi)?;
    let a0 = c.a0.eval(xi.coeffs())?;
    let m = Dims::new(c.dim_y).m();
    Ok(a0 * (&m - int(1)) / (&a * &a * &m * &m * (&m + int(1))))
}

/// `-Fut_chi / ||zeta||` for the normal-cone configuration.
pub fn normal_cone_calabi_bound(
    nc: &NormalConeFutaki,
    norm_sq: &Rational,
) -> Result<SignedSqrt, InvariantError> {
    SignedSqrt::quotient(&-nc.relative.clone(), norm_sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn unit_tangent() -> (WeightedLink, CharCoeffs) {
        let link = WeightedLink::new(&[1], 6, 5).unwrap();
        let c = CharCoeffs::for_link(&link).unwrap();
        (link, c)
    }

    #[test]
    fn unit_tangent_is_negative_at_sigma() {
        let (link, c) = unit_tangent();
        let xi = link.sigma_reeb().unwrap();
        let alpha = link.inner_charge(0).unwrap();
        let nc = normal_cone_futaki(&link, &xi, &alpha, &c).unwrap();
        assert_eq!(nc.alpha_at_xi, rat(1, 2));
        assert_eq!(nc.unrelative, -nc.a0.clone() / int(2));
        assert!(nc.chi.is_zero());
        assert_eq!(nc.relative, nc.unrelative);
        let bound = normal_cone_calabi_bound(&nc, &normal_cone_norm_sq(&xi, &alpha, &c).unwrap());
        assert!(bound.unwrap().is_positive());
    }

    #[test]
    fn off_sigma_rejected() {
        let (link, c) = unit_tangent();
        let xi = ReebVector::quasi_regular(3);
        let alpha = link.inner_charge(0).unwrap();
        assert_eq!(
            normal_cone_futaki(&link, &xi, &alpha, &c),
            Err(InvariantError::NotOnSigma)
        );
    }

    #[test]
    fn general_form_agrees_on_sigma() {
        let (link, c) = unit_tangent();
        let xi = link.sigma_point(&[rat(1, 3), rat(-1, 5)]).unwrap();
        let alpha = link.inner_charge(0).unwrap();
        let nc = normal_cone_futaki(&link, &xi, &alpha, &c).unwrap();
        assert!(!nc.chi.is_zero());
        let general = normal_cone_futaki_general(&xi, &alpha, &c, &nc.chi).unwrap();
        assert_eq!(general, nc.relative);
    }
}
