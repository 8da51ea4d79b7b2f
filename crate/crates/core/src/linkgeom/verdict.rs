use super::{LinkError, WeightedLink};
use crate::charseries::{CharCoeffs, LinearForm};
use crate::exactalg::{int, Rational};
use crate::invariants::normal_cone_futaki;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Three-valued on purpose: obstruction can be certified, existence cannot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerdictTag {
    ObstructedStrict,
    ObstructedObata,
    NotObstructedByThisTest,
}

impl VerdictTag {
    pub fn is_obstructed(self) -> bool {
        !matches!(self, VerdictTag::NotObstructedByThisTest)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VerdictTag::ObstructedStrict => "ObstructedStrict",
            VerdictTag::ObstructedObata => "ObstructedObata",
            VerdictTag::NotObstructedByThisTest => "NotObstructedByThisTest",
        }
    }

    /// Tag for a charge `lambda` of a holomorphic function at the Calabi-Yau point.
    fn from_charge(lambda: &Rational) -> Self {
        match lambda.cmp(&Rational::one()) {
            Ordering::Less => VerdictTag::ObstructedStrict,
            Ordering::Equal => VerdictTag::ObstructedObata,
            Ordering::Greater => VerdictTag::NotObstructedByThisTest,
        }
    }

    /// Tag for an inequality value that is positive exactly when obstructed.
    fn from_margin(v: &Rational) -> Self {
        if v.is_positive() {
            VerdictTag::ObstructedStrict
        } else if v.is_zero() {
            VerdictTag::ObstructedObata
        } else {
            VerdictTag::NotObstructedByThisTest
        }
    }
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub tag: VerdictTag,
    /// Charge `lambda` or inequality value, per `rule`.
    pub value: Rational,
    pub rule: String,
    pub witness: String,
}

/// Charge `lambda = dim_y w_i / I` of `z_i` at the Calabi-Yau point.
pub fn lichnerowicz_check(link: &WeightedLink, i: usize) -> Result<ObstructionVerdict, LinkError> {
    let w = *link
        .inner_weights()
        .get(i)
        .ok_or(LinkError::CoordinateOutOfRange {
            index: i,
            k: link.k(),
        })?;
    let fano = link.fano_index();
    if fano <= 0 {
        return Err(LinkError::NotPositiveCase(fano));
    }
    let lambda = Rational::new(((link.dim_y() as u64 * w) as i64).into(), fano.into());
    Ok(ObstructionVerdict {
        tag: VerdictTag::from_charge(&lambda),
        value: lambda,
        rule: "charge of a holomorphic function at the Calabi-Yau Reeb field (lambda <= 1 obstructs, lambda = 1 by Obata)".into(),
        witness: format!("z_{i}"),
    })
}

/// `V = sum w_i - w_0 n + (d/2)(n - k - 2)` with `n = dim_y`; equivalently `I - n w_0`.
pub fn whp_obstruction(link: &WeightedLink) -> ObstructionVerdict {
    let n = link.dim_y() as i64;
    let k = link.k() as i64;
    let sum: u64 = link.inner_weights().iter().sum();
    let w0 = link.inner_weights()[0] as i64;
    let half = link.degree() as i64 / 2;
    let v = int(sum as i64 - w0 * n + half * (n - k - 2));
    ObstructionVerdict {
        tag: VerdictTag::from_margin(&v),
        value: v,
        rule: "weighted homogeneous inequality 0 <= sum w_i - n w_0 + (d/2)(n-k-2)".into(),
        witness: "z_0".into(),
    }
}

/// Obstruction through a homogeneous function of charge `alpha`: needs
/// `alpha(zeta_j) = 0` for every `j` and charge at most 1 at the Calabi-Yau point.
/// When `alpha` kills the `zeta_j`, the normal-cone relative Futaki invariant
/// at that point must carry the matching sign.
pub fn gen_lich_obstruction(
    link: &WeightedLink,
    alpha: &LinearForm,
    coeffs: &CharCoeffs,
) -> Result<ObstructionVerdict, LinkError> {
    let xi = link.sigma_reeb()?;
    if alpha.nvars() != link.nvars() {
        return Err(LinkError::DimensionMismatch {
            expected: link.nvars(),
            found: alpha.nvars(),
        });
    }
    let tangent_free = alpha.coeffs()[1..].iter().all(|c| c.is_zero());
    let lambda = alpha.eval(xi.coeffs());
    let rule =
        "Calabi-Yau charge of a homogeneous function vanishing on the locus tangent".to_string();
    if !tangent_free || !lambda.is_positive() {
        return Ok(ObstructionVerdict {
            tag: VerdictTag::NotObstructedByThisTest,
            value: lambda,
            rule,
            witness: "weight moves along the locus".into(),
        });
    }
    let tag = VerdictTag::from_charge(&lambda);
    let nc = normal_cone_futaki(link, &xi, alpha, coeffs)?;
    let sign_tag = VerdictTag::from_margin(&-nc.relative.clone());
    if sign_tag != tag {
        return Err(LinkError::InconsistentVerdict(format!(
            "charge {lambda} gives {tag}, normal-cone Futaki {} gives {sign_tag}",
            nc.relative
        )));
    }
    Ok(ObstructionVerdict {
        tag,
        value: lambda,
        rule,
        witness: "homogeneous function of the given weight".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn unit_tangent_verdicts() {
        let l = WeightedLink::new(&[1], 6, 5).unwrap();
        let lich = lichnerowicz_check(&l, 0).unwrap();
        assert_eq!(lich.value, rat(1, 2));
        assert_eq!(lich.tag, VerdictTag::ObstructedStrict);
        let whp = whp_obstruction(&l);
        assert_eq!(whp.value, int(5));
        assert_eq!(whp.tag, VerdictTag::ObstructedStrict);
        let c = CharCoeffs::for_link(&l).unwrap();
        let g = gen_lich_obstruction(&l, &l.inner_charge(0).unwrap(), &c).unwrap();
        assert_eq!(g.tag, VerdictTag::ObstructedStrict);
    }

    #[test]
    fn cubic_threefold_not_obstructed() {
        let l = WeightedLink::brieskorn_pham(&[3], 3).unwrap();
        let lich = lichnerowicz_check(&l, 0).unwrap();
        assert_eq!(lich.value, rat(6, 5));
        assert_eq!(lich.tag, VerdictTag::NotObstructedByThisTest);
    }

    #[test]
    fn a_series_fourfold_is_obata() {
        let l = WeightedLink::brieskorn_pham(&[3], 4).unwrap();
        let lich = lichnerowicz_check(&l, 0).unwrap();
        assert_eq!(lich.value, int(1));
        assert_eq!(lich.tag, VerdictTag::ObstructedObata);
        assert_eq!(whp_obstruction(&l).tag, VerdictTag::ObstructedObata);
    }

    #[test]
    fn tail_weight_fails_tangency() {
        let l = WeightedLink::new(&[1], 6, 5).unwrap();
        let c = CharCoeffs::for_link(&l).unwrap();
        let u1 = &l.charges()[1];
        let g = gen_lich_obstruction(&l, u1, &c).unwrap();
        assert_eq!(g.tag, VerdictTag::NotObstructedByThisTest);
    }

    #[test]
    fn inner_coordinate_bound() {
        let l = WeightedLink::new(&[1], 6, 5).unwrap();
        assert!(matches!(
            lichnerowicz_check(&l, 1),
            Err(LinkError::CoordinateOutOfRange { index: 1, k: 0 })
        ));
    }
}
