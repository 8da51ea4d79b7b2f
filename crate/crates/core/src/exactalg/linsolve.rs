use super::rational::Rational;
use super::AlgebraError;
use num_traits::Zero;

/// Solves the square system `m x = rhs` exactly by fraction-free (Bareiss)
/// elimination with row pivoting.
pub fn solve_linear(m: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
    let n = m.len();
    if rhs.len() != n {
        return Err(AlgebraError::DimensionMismatch {
            expected: n,
            found: rhs.len(),
        });
    }
    if let Some(row) = m.iter().find(|row| row.len() != n) {
        return Err(AlgebraError::DimensionMismatch {
            expected: n,
            found: row.len(),
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // Augmented matrix; column n holds the right-hand side.
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            row.iter()
                .cloned()
                .chain(std::iter::once(r.clone()))
                .collect()
        })
        .collect();
    let mut prev = Rational::from_integer(1.into());
    for k in 0..n {
        let pivot = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .ok_or(AlgebraError::SingularSystem)?;
        a.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = Rational::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = a[i][n].clone();
        for j in i + 1..n {
            acc -= &a[i][j] * &x[j];
        }
        x[i] = acc / &a[i][i];
    }
    Ok(x)
}
