use crate::error::{Error, Result};
use crate::kernel::{ExpVec, Field};
use crate::poly::CPoly;

/// Square matrix in row-major order.
pub type Matrix<F> = Vec<Vec<F>>;

fn check_square<F>(m: &Matrix<F>) -> Result<usize> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            found: row.len(),
        });
    }
    Ok(n)
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> Result<F> {
    let n = check_square(m)?;
    let mut a = m.clone();
    let mut det = F::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(F::zero());
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        let inv = p.inv_nonzero();
        for r in col + 1..n {
            let factor = a[r][col].clone() * inv.clone();
            if factor.is_zero() {
                continue;
            }
            let pivot_row = a[col].clone();
            for (x, y) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *x = x.clone() - y.clone() * factor.clone();
            }
        }
    }
    Ok(det)
}

/// Gauss-Jordan inverse; singular input is an error.
pub fn invert_matrix<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(pivot, col);
        let inv = a[col][col].inv_nonzero();
        for x in a[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let pivot_row = a[col].clone();
            for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                *x = x.clone() - y.clone() * factor.clone();
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Substitutes `x_i -> sum_j m[i][j] x_j` in every polynomial.
pub fn apply_linear_change<F: Field>(polys: &[CPoly<F>], m: &Matrix<F>) -> Result<Vec<CPoly<F>>> {
    let n = check_square(m)?;
    if determinant(m)?.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let images: Vec<CPoly<F>> = m
        .iter()
        .map(|row| CPoly::from_terms(row.iter().enumerate().map(|(j, c)| (ExpVec::var(n, j), c.clone()))))
        .collect();
    polys
        .iter()
        .map(|p| {
            let mut out = CPoly::zero();
            for (mono, c) in p.terms() {
                mono.check_len(n)?;
                let mut term = CPoly::monomial(ExpVec::one(n), c.clone());
                for (i, &e) in mono.exps().iter().enumerate() {
                    for _ in 0..e {
                        term = term.product(&images[i]);
                    }
                }
                out = out.add(&term);
            }
            Ok(out)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Rational;
    use num_traits::{One, Zero};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn identity_leaves_input_unchanged() {
        let f = CPoly::from_terms([(ExpVec::new(vec![2, 1]), q(3)), (ExpVec::new(vec![0, 0]), q(-1))]);
        let out = apply_linear_change(std::slice::from_ref(&f), &mat(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(out, vec![f]);
    }

    #[test]
    fn binomial_expansion() {
        let x2 = CPoly::monomial(ExpVec::new(vec![2, 0]), Rational::one());
        let out = apply_linear_change(&[x2], &mat(&[&[1, 1], &[0, 1]])).unwrap();
        let expected = CPoly::from_terms([
            (ExpVec::new(vec![2, 0]), q(1)),
            (ExpVec::new(vec![1, 1]), q(2)),
            (ExpVec::new(vec![0, 2]), q(1)),
        ]);
        assert_eq!(out[0], expected);
    }

    #[test]
    fn singular_matrices_are_rejected() {
        let z = mat(&[&[0, 0], &[0, 0]]);
        assert!(determinant(&z).unwrap().is_zero());
        assert!(matches!(
            apply_linear_change::<Rational>(&[], &z),
            Err(Error::SingularMatrix)
        ));
        assert!(matches!(
            invert_matrix(&mat(&[&[1, 2], &[2, 4]])),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = mat(&[&[2, 1, 0], &[1, 1, 1], &[0, -1, 3]]);
        let inv = invert_matrix(&m).unwrap();
        for (i, row) in m.iter().enumerate() {
            for j in 0..3 {
                let s = row
                    .iter()
                    .zip(&inv)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a.clone() * b[j].clone());
                assert_eq!(s, if i == j { q(1) } else { q(0) });
            }
        }
        assert_eq!(determinant(&m).unwrap(), q(5));
    }
}
