//! Tridiagonal linear-pencil representation of a recurrence family.
//!
//! The n-th first-kind polynomial equals the determinant of the n×n
//! tridiagonal matrix whose row m (1-based) carries
//!
//! ```text
//! diagonal   w_m   = x − c_j
//! lower      χ_mᴸ  = λ_j·(x − a_j)
//! upper      χ_mᴿ  = (x − b_j)
//! ```
//!
//! with j the coefficient index consumed by the recurrence step that produces
//! P_m. Expanding the determinant along the last row reproduces the
//! three-term recurrence, which is exactly what the unit test checks — the
//! determinant here is computed by generic cofactor expansion, not by the
//! recurrence, so the two routes are independent.

use crate::error::{Error, Result};
use crate::family::RecurrenceFamily;
use crate::poly::Poly;

/// Cofactor expansion is exponential in the worst case; 12 keeps the generic
/// evaluator under a few thousand leaf determinants even for dense matrices.
pub const MAX_PENCIL_SIZE: usize = 12;

/// A square matrix of polynomials (row-major).
#[derive(Clone, Debug)]
pub struct LinearPencil {
    entries: Vec<Vec<Poly>>,
}

impl LinearPencil {
    pub fn new(entries: Vec<Vec<Poly>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidFamily(
                "pencil matrix must be square and non-empty".into(),
            ));
        }
        if n > MAX_PENCIL_SIZE {
            return Err(Error::SizeCapExceeded {
                requested: n,
                cap: MAX_PENCIL_SIZE,
            });
        }
        Ok(LinearPencil { entries })
    }

    /// Builds the n×n pencil whose determinant is the family's P_n.
    pub fn from_family(fam: &RecurrenceFamily, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_PENCIL_SIZE {
            return Err(Error::SizeCapExceeded {
                requested: n,
                cap: MAX_PENCIL_SIZE,
            });
        }
        let mut entries = vec![vec![Poly::zero(); n]; n];
        for m in 1..=n {
            let j = fam.step_index(m);
            let row = m - 1;
            entries[row][row] = Poly::x_minus(num_complex::Complex64::new(fam.c_at(j)?, 0.0));
            if m >= 2 {
                let lam = fam.lambda_at(j)?;
                entries[row][row - 1] = Poly::x_minus(fam.a_at(j)?).scale_real(lam);
                entries[row - 1][row] = Poly::x_minus(fam.b_at(j)?);
            }
        }
        LinearPencil::new(entries)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    /// Determinant by recursive cofactor expansion along the first active
    /// row, skipping zero entries (which makes banded matrices cheap).
    pub fn determinant(&self) -> Poly {
        let n = self.size();
        let rows: Vec<usize> = (0..n).collect();
        let cols: Vec<usize> = (0..n).collect();
        self.det_rec(&rows, &cols)
    }

    fn det_rec(&self, rows: &[usize], cols: &[usize]) -> Poly {
        if rows.len() == 1 {
            return self.entries[rows[0]][cols[0]].clone();
        }
        let r = rows[0];
        let sub_rows: Vec<usize> = rows[1..].to_vec();
        let mut acc = Poly::zero();
        for (pos, &cidx) in cols.iter().enumerate() {
            let pivot = &self.entries[r][cidx];
            if pivot.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&cc| cc != cidx).collect();
            let minor = self.det_rec(&sub_rows, &sub_cols);
            let term = pivot * &minor;
            acc = if pos % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate_first;
    use crate::tol::EXACT_EPS;

    #[test]
    fn pencil_determinant_matches_recurrence_constant_family() {
        let fam = RecurrenceFamily::example1();
        for n in 1..=6 {
            let det = LinearPencil::from_family(&fam, n).unwrap().determinant();
            let p = generate_first(&fam, n).unwrap();
            assert!(det.approx_eq(&p[n], EXACT_EPS), "n = {n}");
        }
    }

    #[test]
    fn pencil_determinant_matches_recurrence_varying_family() {
        let fam = RecurrenceFamily::crr(10.0, 12.0).unwrap();
        for n in [1usize, 3, 7] {
            let det = LinearPencil::from_family(&fam, n).unwrap().determinant();
            let p = generate_first(&fam, n).unwrap();
            assert!(det.approx_eq(&p[n], EXACT_EPS), "n = {n}");
        }
    }

    #[test]
    fn pencil_determinant_matches_recurrence_real_quadratic() {
        let fam = RecurrenceFamily::chebyshev_r2(1.0, 4.0).unwrap();
        let n = 5;
        let det = LinearPencil::from_family(&fam, n).unwrap().determinant();
        let p = generate_first(&fam, n).unwrap();
        assert!(det.approx_eq(&p[n], EXACT_EPS));
    }

    #[test]
    fn size_cap_is_enforced() {
        let fam = RecurrenceFamily::example1();
        assert!(matches!(
            LinearPencil::from_family(&fam, MAX_PENCIL_SIZE + 1),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn dense_three_by_three_against_rule_of_sarrus() {
        // Entries are constants, so the determinant is a plain 3×3 check.
        let c = |v: f64| Poly::from_real(&[v]);
        let m = LinearPencil::new(vec![
            vec![c(2.0), c(0.0), c(1.0)],
            vec![c(3.0), c(-1.0), c(2.0)],
            vec![c(0.0), c(5.0), c(4.0)],
        ])
        .unwrap();
        // det = 2(−4−10) − 0 + 1(15−0) = −13
        assert!(m.determinant().approx_eq(&c(-13.0), EXACT_EPS));
    }
}
