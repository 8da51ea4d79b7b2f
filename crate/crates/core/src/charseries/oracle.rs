use super::SeriesError;
use crate::linkgeom::WeightedLink;

/// `dim H_alpha` for `alpha = 0..=max_degree` under the quasi-regular grading,
/// by enumerating the monomial basis `{z^a : a_0 < m_0}` of a Brieskorn-Pham
/// quotient ring.
pub fn hilbert_count_oracle(link: &WeightedLink, max_degree: u64) -> Result<Vec<u64>, SeriesError> {
    let exps = link
        .bp_exponents()
        .ok_or(SeriesError::UnsupportedForOracle)?;
    let weights = link.quasi_regular_weights();
    let mut counts = vec![0u64; max_degree as usize + 1];
    // z_0 is capped by its exponent, every other coordinate is free.
    let cap = exps[0] as u64 - 1;
    for a0 in 0..=cap {
        let start = a0 * weights[0];
        if start > max_degree {
            break;
        }
        enumerate(&weights[1..], start, max_degree, &mut counts);
    }
    Ok(counts)
}

fn enumerate(weights: &[u64], degree: u64, max: u64, counts: &mut [u64]) {
    match weights.split_first() {
        None => counts[degree as usize] += 1,
        Some((&w, rest)) => {
            let mut deg = degree;
            while deg <= max {
                enumerate(rest, deg, max, counts);
                deg += w;
            }
        }
    }
}

/// Coefficients of `(1 - q^d) / prod_i (1 - q^{w_i})` up to `q^max_degree`.
pub fn hilbert_series_expansion(degree: u64, weights: &[u64], max_degree: u64) -> Vec<i64> {
    let len = max_degree as usize + 1;
    let mut series = vec![0i64; len];
    series[0] = 1;
    if (degree as usize) < len {
        series[degree as usize] -= 1;
    }
    // Dividing by (1 - q^w) is the running sum with stride w.
    for &w in weights {
        let w = w as usize;
        for i in w..len {
            series[i] += series[i - w];
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_of_flat_line() {
        // No relation: degree past the truncation leaves 1/(1-q).
        assert_eq!(hilbert_series_expansion(100, &[1], 4), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn expansion_of_conic() {
        assert_eq!(
            hilbert_series_expansion(2, &[1, 1], 5),
            vec![1, 2, 2, 2, 2, 2]
        );
    }

    #[test]
    fn non_bp_link_is_unsupported() {
        let link = WeightedLink::new(&[2, 2], 6, 3).unwrap();
        assert_eq!(
            hilbert_count_oracle(&link, 5),
            Err(SeriesError::UnsupportedForOracle)
        );
    }

    #[test]
    fn counts_cubic_with_three_squares() {
        let link = WeightedLink::brieskorn_pham(&[3], 3).unwrap();
        let counted = hilbert_count_oracle(&link, 18).unwrap();
        let series = hilbert_series_expansion(6, &[2, 3, 3, 3], 18);
        let as_signed: Vec<i64> = counted.iter().map(|&c| c as i64).collect();
        assert_eq!(as_signed, series);
    }
}
