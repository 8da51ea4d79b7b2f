//! The analysis pipeline for one link and its two renderings.

use crate::error::CliError;
use crate::spec::ResolvedSpec;
use sasaki_core::charseries::CharCoeffs;
use sasaki_core::exactalg::{int, Rational};
use sasaki_core::invariants::{
    calabi_lb2_rhs, calabi_lower_bound, normal_cone_calabi_bound, normal_cone_futaki,
    normal_cone_norm_sq, DirectionVector, PointJets,
};
use sasaki_core::linkgeom::{
    gen_lich_obstruction, lichnerowicz_check, whp_obstruction, ReebVector, WeightedLink,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Rationals are carried as `"p/q"` strings throughout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub name: String,
    pub comment: Option<String>,
    pub family: Option<FamilyInfo>,
    pub link: LinkSummary,
    pub cone_dimension: usize,
    pub a0: String,
    pub a1: String,
    pub sigma_point: Vec<String>,
    pub lichnerowicz: Vec<ChargeVerdict>,
    pub whp: WhpSummary,
    /// Strongest verdict over the tests run.
    pub verdict: String,
    pub obstructed: bool,
    pub normal_cone: NormalConeSummary,
    pub extremal: ExtremalSummary,
    pub errata: Vec<Erratum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub polynomial: String,
    pub labels: Vec<String>,
    pub expected_dim: usize,
    pub expected_obstructed: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkSummary {
    pub input_weights: Vec<u64>,
    pub input_degree: u64,
    /// After doubling an odd degree, sorted ascending.
    pub inner_weights: Vec<u64>,
    pub degree: u64,
    pub tail: usize,
    pub dim_y: usize,
    pub rank: usize,
    pub fano_index: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeVerdict {
    pub coordinate: String,
    pub weight: u64,
    pub charge: String,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhpSummary {
    pub value: String,
    pub verdict: String,
    pub rule: String,
}

/// Deformation to the normal cone of `{z_0 = 0}` at the quasi-regular
/// Calabi-Yau Reeb field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalConeSummary {
    pub divisor: String,
    pub charge_at_sigma: String,
    pub relative_futaki: String,
    pub futaki: String,
    pub correction: String,
    pub generator_norm_sq: String,
    /// `-Fut_chi / ||zeta||`
    pub calabi_lower_bound: String,
    /// `Fut_chi^2 / ||zeta||^2 + ||chi||^2` when `Fut_chi < 0`.
    pub calabi_lower_bound_sq_relative: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSummary {
    pub reeb: Vec<String>,
    pub requested: bool,
    pub chi: Vec<String>,
    pub norm_sq_chi: String,
    /// `Fut(xi, zeta_j)` for `j = 1..r`.
    pub futaki: Vec<String>,
    /// `-Fut(xi, -chi) / ||chi|| = ||chi||` when `chi != 0`.
    pub calabi_lower_bound: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub id: String,
    pub printed: String,
    pub used: String,
    /// Whether the discrepancy changes anything for this input.
    pub affects_input: bool,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn errata(link: &WeightedLink, xi: &ReebVector) -> Vec<Erratum> {
    let (half, quarter) = link.cone_bounds();
    let b0 = &xi.coeffs()[0];
    let edge = &quarter * b0;
    let wide = xi.coeffs()[1..].iter().any(|b| b * b >= &edge * &edge);
    let k = link.inner_weights().len() as i64 - 1;
    vec![
        Erratum {
            id: "sasaki-cone-bound".into(),
            printed: format!("|b_j| < {quarter} b0"),
            used: format!("|b_j| < {half} b0 (every generator charge positive)"),
            affects_input: wide,
        },
        Erratum {
            id: "a0-b0-exponent".into(),
            printed: format!("b0^(k-1) with k = {k}"),
            used: format!("b0^k = b0^{k} (agrees with the series coefficient)"),
            affects_input: true,
        },
    ]
}

pub fn analyze(resolved: &ResolvedSpec) -> Result<AnalysisReport, CliError> {
    let link = &resolved.link;
    let coeffs = CharCoeffs::for_link(link).map_err(CliError::internal)?;
    let sigma = link.sigma_reeb().map_err(CliError::invalid)?;

    let lichnerowicz = (0..link.inner_weights().len())
        .map(|i| {
            let v = lichnerowicz_check(link, i).map_err(CliError::internal)?;
            Ok(ChargeVerdict {
                coordinate: format!("z_{i}"),
                weight: link.inner_weights()[i],
                charge: v.value.to_string(),
                verdict: v.tag.to_string(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let whp = whp_obstruction(link);
    let alpha = link.inner_charge(0).map_err(CliError::internal)?;
    // Errors out if the charge test and the normal-cone sign disagree.
    let general = gen_lich_obstruction(link, &alpha, &coeffs).map_err(CliError::internal)?;
    if general.tag != whp.tag {
        return Err(CliError::Internal(format!(
            "weighted inequality gives {}, charge test gives {}",
            whp.tag, general.tag
        )));
    }

    let nc = normal_cone_futaki(link, &sigma, &alpha, &coeffs).map_err(CliError::internal)?;
    let nc_norm = normal_cone_norm_sq(&sigma, &alpha, &coeffs).map_err(CliError::internal)?;
    let nc_bound = normal_cone_calabi_bound(&nc, &nc_norm).map_err(CliError::internal)?;
    let sigma_jets = PointJets::new(&coeffs, &sigma).map_err(CliError::internal)?;
    let sigma_chi_sq = sigma_jets.norm_sq(&nc.chi).map_err(CliError::internal)?;
    let lb2 = calabi_lb2_rhs(&nc.relative, &nc_norm, &sigma_chi_sq).map_err(CliError::internal)?;

    let xi = resolved.reeb.clone().unwrap_or_else(|| sigma.clone());
    let jets = PointJets::new(&coeffs, &xi).map_err(CliError::internal)?;
    let chi = jets.extremal_field().map_err(CliError::internal)?;
    let norm_sq_chi = jets.norm_sq(&chi).map_err(CliError::internal)?;
    let n = link.nvars();
    let futaki = (1..n)
        .map(|j| {
            jets.futaki(&DirectionVector::basis(n, j))
                .map(|f| f.to_string())
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::internal)?;
    let extremal_bound = if chi.is_zero() {
        None
    } else {
        let b =
            calabi_lower_bound(&xi, &chi.scale(&int(-1)), &coeffs).map_err(CliError::internal)?;
        Some(b.to_string())
    };

    Ok(AnalysisReport {
        name: resolved.spec.name.clone(),
        comment: resolved.spec.comment.clone(),
        family: resolved.entry.as_ref().map(|e| FamilyInfo {
            id: e.family.to_string(),
            params: e.params.iter().cloned().collect(),
            polynomial: e.polynomial.clone(),
            labels: e.labels.clone(),
            expected_dim: e.expected_dim,
            expected_obstructed: e.expected_obstructed,
            note: e.note.clone(),
        }),
        link: LinkSummary {
            input_weights: link.input_weights().to_vec(),
            input_degree: link.input_degree(),
            inner_weights: link.inner_weights().to_vec(),
            degree: link.degree(),
            tail: link.tail_len(),
            dim_y: link.dim_y(),
            rank: link.rank(),
            fano_index: link.fano_index(),
        },
        cone_dimension: link.cone_dimension(),
        a0: coeffs.a0.to_string(),
        a1: coeffs.a1.to_string(),
        sigma_point: strings(sigma.coeffs()),
        lichnerowicz,
        verdict: whp.tag.to_string(),
        obstructed: whp.tag.is_obstructed(),
        whp: WhpSummary {
            value: whp.value.to_string(),
            verdict: whp.tag.to_string(),
            rule: whp.rule,
        },
        normal_cone: NormalConeSummary {
            divisor: "z_0".into(),
            charge_at_sigma: nc.alpha_at_xi.to_string(),
            relative_futaki: nc.relative.to_string(),
            futaki: nc.unrelative.to_string(),
            correction: nc.correction.to_string(),
            generator_norm_sq: nc_norm.to_string(),
            calabi_lower_bound: nc_bound.to_string(),
            calabi_lower_bound_sq_relative: lb2.map(|v| v.to_string()),
        },
        extremal: ExtremalSummary {
            reeb: strings(xi.coeffs()),
            requested: resolved.reeb.is_some(),
            chi: strings(chi.coeffs()),
            norm_sq_chi: norm_sq_chi.to_string(),
            futaki,
            calabi_lower_bound: extremal_bound,
        },
        errata: errata(link, &xi),
    })
}

impl AnalysisReport {
    /// Pretty JSON with a trailing newline; the machine-readable format.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let l = &self.link;
        let _ = writeln!(s, "link: {}", self.name);
        if let Some(c) = &self.comment {
            let _ = writeln!(s, "  comment: {c}");
        }
        if let Some(f) = &self.family {
            let params: Vec<String> = f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(s, "  family: {} ({})", f.id, params.join(", "));
            let _ = writeln!(s, "  polynomial: {}", f.polynomial);
            let _ = writeln!(s, "  labels: {}", f.labels.join(" | "));
            if let Some(n) = &f.note {
                let _ = writeln!(s, "  note: {n}");
            }
        }
        let _ = writeln!(
            s,
            "  weights {:?} degree {} (input {:?}, {}), tail {}",
            l.inner_weights, l.degree, l.input_weights, l.input_degree, l.tail
        );
        let _ = writeln!(
            s,
            "  dim_y {}  rank {}  I {}",
            l.dim_y, l.rank, l.fano_index
        );
        let _ = writeln!(s, "  Sasaki cone dimension: {}", self.cone_dimension);
        if let Some(f) = &self.family {
            let mark = if f.expected_dim == self.cone_dimension {
                "matches"
            } else {
                "DIFFERS from"
            };
            let _ = writeln!(s, "  ({mark} the listed dimension {})", f.expected_dim);
        }
        let _ = writeln!(s, "a0 = {}", self.a0);
        let _ = writeln!(s, "a1 = {}", self.a1);
        let _ = writeln!(s, "Calabi-Yau point: ({})", self.sigma_point.join(", "));
        let _ = writeln!(s, "charges at the Calabi-Yau point:");
        for c in &self.lichnerowicz {
            let _ = writeln!(
                s,
                "  {} weight {} charge {}: {}",
                c.coordinate, c.weight, c.charge, c.verdict
            );
        }
        let _ = writeln!(
            s,
            "weighted homogeneous inequality: value {} -> {}",
            self.whp.value, self.whp.verdict
        );
        let nc = &self.normal_cone;
        let _ = writeln!(
            s,
            "normal cone of {{{} = 0}} at the Calabi-Yau point:",
            nc.divisor
        );
        let _ = writeln!(
            s,
            "  charge {}  Fut {}  correction {}",
            nc.charge_at_sigma, nc.futaki, nc.correction
        );
        let _ = writeln!(
            s,
            "  relative Fut {}  ||zeta||^2 {}",
            nc.relative_futaki, nc.generator_norm_sq
        );
        let _ = writeln!(
            s,
            "  Calabi lower bound (units of c(n)): {}",
            nc.calabi_lower_bound
        );
        if let Some(v) = &nc.calabi_lower_bound_sq_relative {
            let _ = writeln!(s, "  squared bound with chi: {v}");
        }
        let e = &self.extremal;
        let which = if e.requested {
            "requested"
        } else {
            "Calabi-Yau"
        };
        let _ = writeln!(
            s,
            "extremal field at the {which} Reeb field ({}):",
            e.reeb.join(", ")
        );
        let _ = writeln!(
            s,
            "  chi = ({})  ||chi||^2 = {}",
            e.chi.join(", "),
            e.norm_sq_chi
        );
        if !e.futaki.is_empty() {
            let _ = writeln!(s, "  Fut(zeta_j) = ({})", e.futaki.join(", "));
        }
        if let Some(b) = &e.calabi_lower_bound {
            let _ = writeln!(s, "  Calabi lower bound from -chi (units of c(n)): {b}");
        }
        let _ = writeln!(s, "errata:");
        for x in &self.errata {
            let hit = if x.affects_input {
                "affects this input"
            } else {
                "no effect here"
            };
            let _ = writeln!(
                s,
                "  {}: printed {}, used {} [{hit}]",
                x.id, x.printed, x.used
            );
        }
        if self.obstructed {
            let _ = writeln!(
                s,
                "verdict: {} (no extremal metric anywhere in the Sasaki cone)",
                self.verdict
            );
        } else {
            let _ = writeln!(s, "verdict: {} (no obstruction found)", self.verdict);
        }
        s
    }
}
