//! Input records. A spec names a link either explicitly by
//! `(inner_weights, inner_degree, tail)` or by a catalog family and its
//! parameters, never both.

use crate::error::CliError;
use sasaki_core::exactalg::parse_rational;
use sasaki_core::linkgeom::{catalog, CatalogEntry, ReebVector, WeightedLink};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkSpec {
    pub name: String,
    /// Free text, usually the polynomial.
    #[serde(default)]
    pub comment: Option<String>,
    #[serde(default)]
    pub inner_weights: Option<Vec<u64>>,
    #[serde(default)]
    pub inner_degree: Option<u64>,
    #[serde(default)]
    pub tail: Option<usize>,
    /// `"p/q"` strings, one per Reeb parameter `b0, b1, ...`.
    #[serde(default)]
    pub reeb: Option<Vec<String>>,
    #[serde(default)]
    pub family: Option<String>,
    #[serde(default)]
    pub params: Option<BTreeMap<String, i64>>,
}

/// A spec after validation.
#[derive(Clone, Debug)]
pub struct ResolvedSpec {
    pub spec: LinkSpec,
    pub link: WeightedLink,
    pub entry: Option<CatalogEntry>,
    pub reeb: Option<ReebVector>,
}

impl LinkSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Parses the Reeb strings before any validation, so a malformed
    /// rational is reported as a parse error.
    fn reeb_coeffs(&self) -> Result<Option<Vec<sasaki_core::exactalg::Rational>>, CliError> {
        let Some(strings) = &self.reeb else {
            return Ok(None);
        };
        strings
            .iter()
            .map(|s| {
                parse_rational(s).map_err(|e| CliError::Parse(format!("reeb entry {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }

    pub fn resolve(&self) -> Result<ResolvedSpec, CliError> {
        let coeffs = self.reeb_coeffs()?;
        let explicit = [
            self.inner_weights.is_some(),
            self.inner_degree.is_some(),
            self.tail.is_some(),
        ];
        let any_explicit = explicit.iter().any(|&b| b);
        let (link, entry) = match (&self.family, any_explicit) {
            (Some(_), true) => {
                return Err(CliError::Validation(
                    "give either inner_weights/inner_degree/tail or family, not both".into(),
                ))
            }
            (None, false) => {
                return Err(CliError::Validation(
                    "give either inner_weights/inner_degree/tail or family".into(),
                ))
            }
            (Some(family), false) => {
                let params = self.params.clone().unwrap_or_default();
                let entry = catalog(family, &params).map_err(CliError::invalid)?;
                (entry.link.clone(), Some(entry))
            }
            (None, true) => {
                if self.params.is_some() {
                    return Err(CliError::Validation("params need a family".into()));
                }
                let (Some(w), Some(d), Some(t)) =
                    (&self.inner_weights, self.inner_degree, self.tail)
                else {
                    return Err(CliError::Validation(
                        "explicit links need all of inner_weights, inner_degree and tail".into(),
                    ));
                };
                (WeightedLink::new(w, d, t).map_err(CliError::invalid)?, None)
            }
        };
        let reeb = match coeffs {
            None => None,
            Some(c) => {
                if c.len() != link.nvars() {
                    return Err(CliError::Validation(format!(
                        "reeb has {} entries, the link's Sasaki cone needs {}",
                        c.len(),
                        link.nvars()
                    )));
                }
                let xi = ReebVector::new(c);
                if !link.in_sasaki_cone(&xi) {
                    return Err(CliError::Validation(
                        "reeb is outside the Sasaki cone (some generator charge is not positive)"
                            .into(),
                    ));
                }
                Some(xi)
            }
        };
        Ok(ResolvedSpec {
            spec: self.clone(),
            link,
            entry,
            reeb,
        })
    }
}

/// `k=v,k=v` as used on the command line.
pub fn parse_params(text: &str) -> Result<BTreeMap<String, i64>, CliError> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("parameter {item:?} is not k=v")))?;
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("parameter {k:?} has non-integer value {v:?}")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}
