//! Families of links whose whole Sasaki cone is expected to carry no extremal
//! metric: eight product/sphere families and the five ADE series.

use super::{LinkError, WeightedLink};
use num_integer::Integer;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Table {
    /// Manifolds with higher-dimensional Sasaki cones.
    One,
    /// ADE singularities.
    Two,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: &'static str,
    pub table: Table,
    pub params: Vec<(String, i64)>,
    pub polynomial: String,
    pub link: WeightedLink,
    pub expected_dim: usize,
    pub expected_obstructed: bool,
    /// Topological labels; more than one when sources disagree.
    pub labels: Vec<String>,
    pub note: Option<String>,
}

const TABLE_ONE: [&str; 8] = [
    "s2n-x-s2n+1",
    "s2n-x-s2n+1-exotic",
    "unit-tangent",
    "homotopy-sphere-4n+1",
    "homotopy-sphere-4n-1",
    "rational-homology-sphere-z3",
    "products-s2n+1-x-s2n+2",
    "connected-sum-s2-x-s3",
];

const TABLE_TWO: [&str; 5] = ["A", "D", "E6", "E7", "E8"];

/// Family identifiers in table row order.
pub fn family_ids(table: Table) -> &'static [&'static str] {
    match table {
        Table::One => &TABLE_ONE,
        Table::Two => &TABLE_TWO,
    }
}

fn range(msg: impl Into<String>) -> LinkError {
    LinkError::ParameterRange(msg.into())
}

fn get(params: &BTreeMap<String, i64>, name: &str) -> Result<i64, LinkError> {
    params
        .get(name)
        .copied()
        .ok_or_else(|| range(format!("missing parameter {name}")))
}

fn require(cond: bool, msg: &str) -> Result<(), LinkError> {
    if cond {
        Ok(())
    } else {
        Err(range(msg))
    }
}

fn polynomial(inner: &[String], first_square: usize, squares: usize) -> String {
    let mut terms: Vec<String> = inner.to_vec();
    let last = first_square + squares - 1;
    if squares <= 3 {
        terms.extend((first_square..=last).map(|i| format!("z{i}^2")));
    } else {
        terms.push(format!("z{first_square}^2 + ... + z{last}^2"));
    }
    terms.join(" + ")
}

struct Built {
    polynomial: String,
    link: WeightedLink,
    expected_dim: usize,
    expected_obstructed: bool,
    labels: Vec<String>,
    note: Option<String>,
}

fn one_power(m: i64, tail: i64) -> Result<(String, WeightedLink), LinkError> {
    let link = WeightedLink::brieskorn_pham(&[m as u32], tail as usize)?;
    Ok((polynomial(&[format!("z0^{m}")], 1, tail as usize), link))
}

fn two_powers(m0: i64, m1: i64, tail: i64) -> Result<(String, WeightedLink), LinkError> {
    let link = WeightedLink::brieskorn_pham(&[m0 as u32, m1 as u32], tail as usize)?;
    let inner = [format!("z0^{m0}"), format!("z1^{m1}")];
    Ok((polynomial(&inner, 2, tail as usize), link))
}

fn build_table_one(id: &str, p: &BTreeMap<String, i64>) -> Result<Built, LinkError> {
    let built = |(polynomial, link): (String, WeightedLink), dim: i64, labels: Vec<String>| Built {
        polynomial,
        link,
        expected_dim: dim as usize,
        expected_obstructed: true,
        labels,
        note: None,
    };
    match id {
        "s2n-x-s2n+1" => {
            let (n, l) = (get(p, "n")?, get(p, "l")?);
            require(n >= 1 && l >= 1, "need n >= 1, l >= 1")?;
            Ok(built(
                one_power(8 * l, 2 * n + 1)?,
                n + 1,
                vec![format!("S^{} x S^{}", 2 * n, 2 * n + 1)],
            ))
        }
        "s2n-x-s2n+1-exotic" => {
            let (n, l) = (get(p, "n")?, get(p, "l")?);
            require(n >= 1 && l >= 0, "need n >= 1, l >= 0")?;
            Ok(built(
                one_power(8 * l + 4, 2 * n + 1)?,
                n + 1,
                vec![format!(
                    "S^{} x S^{} # Sigma_1^{}",
                    2 * n,
                    2 * n + 1,
                    4 * n + 1
                )],
            ))
        }
        "unit-tangent" => {
            let (n, l) = (get(p, "n")?, get(p, "l")?);
            require(n >= 2 && l >= 1, "need n >= 2, l >= 1")?;
            Ok(built(
                one_power(4 * l + 2, 2 * n + 1)?,
                n + 1,
                vec![format!("unit tangent bundle of S^{}", 2 * n + 1)],
            ))
        }
        "homotopy-sphere-4n+1" => {
            let (n, k) = (get(p, "n")?, get(p, "k")?);
            require(n >= 2 && k >= 1, "need n >= 2, k >= 1")?;
            Ok(built(
                one_power(2 * k + 1, 2 * n + 1)?,
                n + 1,
                vec![format!("Sigma_{k}^{}", 4 * n + 1)],
            ))
        }
        "homotopy-sphere-4n-1" => {
            let (n, k) = (get(p, "n")?, get(p, "k")?);
            require(n >= 2 && k >= 1, "need n >= 2, k >= 1")?;
            Ok(built(
                two_powers(6 * k - 1, 3, 2 * n - 1)?,
                n,
                vec![format!("Sigma_{k}^{}", 4 * n - 1)],
            ))
        }
        "rational-homology-sphere-z3" => {
            let (n, k) = (get(p, "n")?, get(p, "k")?);
            require(n >= 2, "need n >= 2")?;
            require(
                k >= 4 && matches!(k % 6, 2 | 4),
                "need k = 6l+2 or 6l+4 with k >= 4 (k = 2 puts z0^2 in the quadratic tail)",
            )?;
            Ok(built(
                two_powers(k, 3, 2 * n - 1)?,
                n,
                vec![format!("K_{k}, H_{} = Z_3", 2 * n)],
            ))
        }
        "products-s2n+1-x-s2n+2" => {
            let (n, k) = (get(p, "n")?, get(p, "k")?);
            require(n >= 1 && k >= 1, "need n >= 1, k >= 1")?;
            Ok(built(
                two_powers(2 * (2 * k + 1), 2 * k + 1, 2 * n + 1)?,
                n + 1,
                vec![format!("{}(S^{} x S^{})", 2 * k, 2 * n + 1, 2 * n + 2)],
            ))
        }
        "connected-sum-s2-x-s3" => {
            let (pp, q) = (get(p, "p")?, get(p, "q")?);
            require(pp >= 1 && q >= 1, "need p, q >= 1")?;
            require(pp >= 2 * q || q >= 2 * pp, "need p >= 2q or q >= 2p")?;
            let g = pp.gcd(&q);
            Ok(built(
                two_powers(pp, q, 2)?,
                2,
                vec![format!("#{g}(S^2 x S^3)"), format!("#{}(S^2 x S^3)", g - 1)],
            ))
        }
        other => Err(LinkError::UnknownFamily(other.to_string())),
    }
}

fn build_table_two(id: &str, p: &BTreeMap<String, i64>) -> Result<Built, LinkError> {
    let n = get(p, "n")?;
    let ceil_half = ((n + 1) / 2) as usize;
    let obstructed = n >= 4;
    let entry = |polynomial: String, link: WeightedLink, dim: usize, label: &str| Built {
        polynomial,
        link,
        expected_dim: dim,
        expected_obstructed: obstructed,
        labels: vec![label.to_string()],
        note: None,
    };
    match id {
        "A" => {
            let k = get(p, "k")?;
            require(k >= 3 && n >= 2, "need k >= 3, n >= 2")?;
            let (poly, link) = one_power(k, n)?;
            Ok(entry(
                poly,
                link,
                1 + (n / 2) as usize,
                &format!("A_{}", k - 1),
            ))
        }
        "D" => {
            let k = get(p, "k")?;
            require(k >= 2 && n >= 3, "need k >= 2, n >= 3")?;
            let poly = polynomial(&[format!("z0^{k}"), "z0*z1^2".into()], 2, (n - 1) as usize);
            if k == 2 {
                // z0^2 + z0 z1^2 = (z0 + z1^2/2)^2 - z1^4/4: D_3 is A_3.
                let link = WeightedLink::brieskorn_pham(&[4], n as usize)?;
                let mut b = entry(poly, link, ceil_half, "D_3");
                b.note = Some("D_3 = A_3; built in the normal form z1^4 + (n squares)".into());
                return Ok(b);
            }
            let link = WeightedLink::new(&[2, (k - 1) as u64], (2 * k) as u64, (n - 1) as usize)?;
            Ok(entry(poly, link, ceil_half, &format!("D_{}", k + 1)))
        }
        "E6" | "E7" | "E8" => {
            require(n >= 3, "need n >= 3")?;
            let tail = (n - 1) as usize;
            let (poly, link) = match id {
                "E6" => two_powers(4, 3, n - 1)?,
                "E8" => two_powers(5, 3, n - 1)?,
                _ => (
                    polynomial(&["z0^3".into(), "z0*z1^3".into()], 2, tail),
                    WeightedLink::new(&[6, 4], 18, tail)?,
                ),
            };
            Ok(entry(
                poly,
                link,
                ceil_half,
                &format!("{}_{}", &id[..1], &id[1..]),
            ))
        }
        other => Err(LinkError::UnknownFamily(other.to_string())),
    }
}

/// Instantiates one family member. Parameters outside the family's stated
/// range give `ParameterRange`.
pub fn catalog(family: &str, params: &BTreeMap<String, i64>) -> Result<CatalogEntry, LinkError> {
    let (table, built) = if TABLE_ONE.contains(&family) {
        (Table::One, build_table_one(family, params)?)
    } else if TABLE_TWO.contains(&family) {
        (Table::Two, build_table_two(family, params)?)
    } else {
        return Err(LinkError::UnknownFamily(family.to_string()));
    };
    let id = family_ids(table)
        .iter()
        .find(|&&f| f == family)
        .copied()
        .expect("listed");
    Ok(CatalogEntry {
        family: id,
        table,
        params: params.iter().map(|(k, v)| (k.clone(), *v)).collect(),
        polynomial: built.polynomial,
        link: built.link,
        expected_dim: built.expected_dim,
        expected_obstructed: built.expected_obstructed,
        labels: built.labels,
        note: built.note,
    })
}

fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Parameter grid of a family: the `count` smallest admissible values of each
/// parameter (Table 1), or `n in {4, 5}` and the `count` smallest `k` (Table 2).
fn grid(family: &str, count: i64) -> Vec<BTreeMap<String, i64>> {
    let c = count.max(1);
    let pairs = |a: &str, a0: i64, b: &str, b_vals: Vec<i64>| {
        let mut out = Vec::new();
        for x in a0..a0 + c {
            for y in &b_vals {
                out.push(params(&[(a, x), (b, *y)]));
            }
        }
        out
    };
    let from = |start: i64| (start..start + c).collect::<Vec<_>>();
    match family {
        "s2n-x-s2n+1" => pairs("n", 1, "l", from(1)),
        "s2n-x-s2n+1-exotic" => pairs("n", 1, "l", from(0)),
        "unit-tangent" => pairs("n", 2, "l", from(1)),
        "homotopy-sphere-4n+1" => pairs("n", 2, "k", from(1)),
        "homotopy-sphere-4n-1" => pairs("n", 2, "k", from(1)),
        "rational-homology-sphere-z3" => {
            let ks: Vec<i64> = (4..)
                .filter(|k| matches!(k % 6, 2 | 4))
                .take(c as usize)
                .collect();
            pairs("n", 2, "k", ks)
        }
        "products-s2n+1-x-s2n+2" => pairs("n", 1, "k", from(1)),
        "connected-sum-s2-x-s3" => {
            let mut out = Vec::new();
            for q in 2..2 + c {
                for p in 2 * q..2 * q + c {
                    out.push(params(&[("p", p), ("q", q)]));
                }
            }
            out
        }
        "A" | "D" => {
            let k0 = if family == "A" { 3 } else { 2 };
            let mut out = Vec::new();
            for n in [4, 5] {
                for k in k0..k0 + c {
                    out.push(params(&[("n", n), ("k", k)]));
                }
            }
            out
        }
        _ => vec![params(&[("n", 4)]), params(&[("n", 5)])],
    }
}

/// Rows of a table, in row order. `count` defaults to 2 for
/// Table 1 and 1 for Table 2.
pub fn table_rows(table: Table, count: Option<i64>) -> Result<Vec<CatalogEntry>, LinkError> {
    let count = count.unwrap_or(match table {
        Table::One => 2,
        Table::Two => 1,
    });
    let mut rows = Vec::new();
    for family in family_ids(table) {
        for p in grid(family, count) {
            rows.push(catalog(family, &p)?);
        }
    }
    if table == Table::Two {
        // Stable: keeps row order within each n.
        rows.sort_by_key(|e| e.params.iter().find(|(k, _)| k == "n").map(|(_, v)| *v));
    }
    Ok(rows)
}
