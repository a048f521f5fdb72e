use crate::compoly::{invert_matrix, Matrix};
use crate::error::{Error, Result};
use crate::kernel::Field;

/// Structure constants of a finite-dimensional Lie algebra on the basis
/// `X1, ..., Xn`.
///
/// The full bracket table is stored; setting `[Xj, Xi]` also sets
/// `[Xi, Xj]` to its negative, so antisymmetry holds by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieStructure<F: Field> {
    n: usize,
    /// `table[a][b][k]` is the coefficient of `Xk` in `[Xa, Xb]`.
    table: Vec<Vec<Vec<F>>>,
}

impl<F: Field> LieStructure<F> {
    pub fn abelian(n: usize) -> Self {
        LieStructure {
            n,
            table: vec![vec![vec![F::zero(); n]; n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Sets `[Xa, Xb] = sum_k form[k] Xk` and `[Xb, Xa]` to its negative.
    pub fn set_bracket(&mut self, a: usize, b: usize, form: Vec<F>) -> Result<()> {
        if a >= self.n || b >= self.n {
            return Err(Error::LetterOutOfRange {
                letter: a.max(b),
                alphabet: self.n,
            });
        }
        if form.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: form.len(),
            });
        }
        if a == b {
            if form.iter().all(|c| c.is_zero()) {
                return Ok(());
            }
            return Err(Error::InvalidArgument(format!("[X{0}, X{0}] must vanish", a + 1)));
        }
        self.table[b][a] = form.iter().map(|c| -c.clone()).collect();
        self.table[a][b] = form;
        Ok(())
    }

    pub fn with_bracket(mut self, a: usize, b: usize, form: Vec<F>) -> Result<Self> {
        self.set_bracket(a, b, form)?;
        Ok(self)
    }

    /// `[Xa, Xb]` as a coefficient vector.
    pub fn bracket(&self, a: usize, b: usize) -> &[F] {
        &self.table[a][b]
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().flatten().all(|c| c.is_zero())
    }

    /// Bracket of two linear forms.
    pub fn bracket_forms(&self, u: &[F], v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.n];
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, vb) in v.iter().enumerate() {
                if vb.is_zero() {
                    continue;
                }
                let s = ua.clone() * vb.clone();
                for (k, c) in self.table[a][b].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<F> {
        let mut e = vec![F::zero(); self.n];
        e[i] = F::one();
        e
    }

    /// Structure constants in the basis `Yr = sum_i m[r][i] Xi`.
    pub fn change_basis(&self, m: &Matrix<F>) -> Result<Self> {
        let inv = invert_matrix(m)?;
        let mut out = LieStructure::abelian(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                let in_x = self.bracket_forms(&m[a], &m[b]);
                // X coordinates to Y coordinates: Xi = sum_r inv[i][r] Yr
                out.table[a][b] = (0..self.n)
                    .map(|r| {
                        in_x.iter()
                            .enumerate()
                            .fold(F::zero(), |acc, (i, c)| acc + c.clone() * inv[i][r].clone())
                    })
                    .collect();
            }
        }
        Ok(out)
    }
}

impl<F: Field> LieStructure<F> {
    /// `sl2` on the basis `(e, f, h)`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
    pub fn sl2() -> Self {
        let c = |v: [i64; 3]| v.iter().map(|&x| F::from_i64(x)).collect::<Vec<F>>();
        LieStructure::abelian(3)
            .with_bracket(0, 1, c([0, 0, 1]))
            .and_then(|l| l.with_bracket(2, 0, c([2, 0, 0])))
            .and_then(|l| l.with_bracket(2, 1, c([0, -2, 0])))
            .expect("sl2 constants")
    }

    /// Three-dimensional Heisenberg algebra on `(x, y, z)`: `[x,y] = z`,
    /// `z` central.
    pub fn heisenberg() -> Self {
        let z = vec![F::zero(), F::zero(), F::one()];
        LieStructure::abelian(3)
            .with_bracket(0, 1, z)
            .expect("heisenberg constants")
    }
}

/// Checks the Jacobi identity on every triple of distinct basis elements.
/// Antisymmetry is structural, so triples with repeated entries hold.
pub fn validate_lie<F: Field>(lie: &LieStructure<F>) -> Result<()> {
    let n = lie.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (xi, xj, xk) = (lie.unit(i), lie.unit(j), lie.unit(k));
                let t1 = lie.bracket_forms(&lie.bracket_forms(&xi, &xj), &xk);
                let t2 = lie.bracket_forms(&lie.bracket_forms(&xj, &xk), &xi);
                let t3 = lie.bracket_forms(&lie.bracket_forms(&xk, &xi), &xj);
                let sum: Vec<F> = (0..n).map(|r| t1[r].clone() + t2[r].clone() + t3[r].clone()).collect();
                if sum.iter().any(|c| !c.is_zero()) {
                    let residue = sum
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(r, c)| (r + 1, c.to_string()))
                        .collect();
                    return Err(Error::JacobiFailure {
                        triple: [i + 1, j + 1, k + 1],
                        residue,
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Rational;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&c| Rational::from_integer(c.into())).collect()
    }

    #[test]
    fn sl2_and_abelian_satisfy_jacobi() {
        assert!(validate_lie(&LieStructure::<Rational>::sl2()).is_ok());
        assert!(validate_lie(&LieStructure::<Rational>::abelian(4)).is_ok());
        assert!(validate_lie(&LieStructure::<Rational>::heisenberg()).is_ok());
    }

    #[test]
    fn jacobi_failure_names_the_triple() {
        // [x,y] = x, [y,z] = y, [z,x] = z
        let l = LieStructure::abelian(3)
            .with_bracket(0, 1, v(&[1, 0, 0]))
            .and_then(|l| l.with_bracket(1, 2, v(&[0, 1, 0])))
            .and_then(|l| l.with_bracket(2, 0, v(&[0, 0, 1])))
            .unwrap();
        match validate_lie(&l) {
            Err(e @ Error::JacobiFailure { triple: [1, 2, 3], .. }) => {
                assert!(e.to_string().ends_with("residue (-1)*X1 + (-1)*X2 + (-1)*X3"))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn antisymmetry_is_structural() {
        let l = LieStructure::<Rational>::sl2();
        assert_eq!(l.bracket(1, 0), &v(&[0, 0, -1])[..]);
        assert_eq!(l.bracket(0, 2), &v(&[-2, 0, 0])[..]);
        assert!(LieStructure::<Rational>::abelian(2)
            .with_bracket(1, 1, v(&[1, 0]))
            .is_err());
    }

    #[test]
    fn change_of_basis_preserves_jacobi() {
        let m = vec![v(&[1, 1, 0]), v(&[0, 1, 2]), v(&[1, 0, 1])];
        let l = LieStructure::<Rational>::sl2().change_basis(&m).unwrap();
        assert!(validate_lie(&l).is_ok());
        assert!(!l.is_abelian());
        let back = l.change_basis(&invert_matrix(&m).unwrap()).unwrap();
        assert_eq!(back, LieStructure::sl2());
    }
}
