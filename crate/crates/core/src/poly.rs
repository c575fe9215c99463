//! Dense univariate polynomials with complex coefficients.
//!
//! `Poly` is the universal value type of the crate: recurrence polynomials,
//! structural correction terms, transfer-matrix entries and unit-circle
//! polynomials are all `Poly` values. Coefficients are stored ascending
//! (index j holds the coefficient of x^j); the zero polynomial is the empty
//! coefficient vector and reports `degree() == None`.

use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[")?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:.6}{:+.6}i", c.re, c.im)?;
        }
        write!(f, "]")
    }
}

impl Poly {
    /// Builds a polynomial from ascending complex coefficients, trimming
    /// exactly-zero leading entries.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Poly { coeffs };
        p.trim_exact();
        p
    }

    /// Builds a polynomial from ascending real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::new(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)])
    }

    /// x − r for a complex root r.
    pub fn x_minus(r: Complex64) -> Self {
        Poly::new(vec![-r, Complex64::new(1.0, 0.0)])
    }

    /// The real quadratic x² + 1.
    pub fn x2_plus_1() -> Self {
        Poly::from_real(&[1.0, 0.0, 1.0])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut p = Poly::one();
        for &r in roots {
            p = &p * &Poly::x_minus(r);
        }
        p
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of x^j (zero beyond the stored length).
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or_default()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    fn trim_exact(&mut self) {
        while let Some(c) = self.coeffs.last() {
            if c.re == 0.0 && c.im == 0.0 {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    /// Removes leading coefficients whose magnitude is at most `tol` relative
    /// to the largest coefficient; used after subtractions that must cancel
    /// the top degree exactly in real arithmetic.
    pub fn trimmed(&self, tol: f64) -> Poly {
        let scale = self.norm_inf().max(1.0);
        let mut coeffs = self.coeffs.clone();
        while let Some(c) = coeffs.last() {
            if c.norm() <= tol * scale {
                coeffs.pop();
            } else {
                break;
            }
        }
        Poly { coeffs }
    }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    pub fn norm_inf(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a real point.
    pub fn eval_real(&self, x: f64) -> Complex64 {
        self.eval(Complex64::new(x, 0.0))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, &c)| c * j as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: Complex64) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn scale_real(&self, s: f64) -> Poly {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Integer power by repeated multiplication.
    pub fn powi(&self, n: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Maximum imaginary part over all coefficients; a real polynomial that
    /// picked up rounding noise reports a tiny value here.
    pub fn max_imag(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    /// Real parts of the coefficients (imaginary parts dropped).
    pub fn real_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }

    /// Reversal-conjugation φ*(z) = zⁿ·conj(φ(1/z̄)) at the given degree n:
    /// coefficient j of the result is the conjugate of coefficient n−j.
    pub fn reversed_conj(&self, n: usize) -> Poly {
        let coeffs = (0..=n).map(|j| self.coeff(n - j).conj()).collect();
        Poly::new(coeffs)
    }

    /// Long division: returns (quotient, remainder) with deg(rem) < deg(divisor).
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![Complex64::new(0.0, 0.0); qlen];
        for i in (0..qlen).rev() {
            let q = rem[i + dd] / lead;
            quot[i] = q;
            for j in 0..=dd {
                rem[i + j] -= q * divisor.coeff(j);
            }
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact division: remainder must vanish within `tol` relative to the
    /// dividend scale, otherwise the residual is reported.
    pub fn div_exact(&self, divisor: &Poly, tol: f64) -> Result<Poly, f64> {
        // Synthetic division amplifies rounding by a factor tied to the
        // divisor's root moduli (a root of modulus ρ > 1 grows noise like
        // ρ^deg). Iterative refinement — divide the residual p − q·d and add
        // the correction — squares that error away each pass, so a couple of
        // rounds reach the rounding floor whenever amplification · ε ≪ 1.
        // For a genuinely inexact division the residual stalls at the true
        // remainder and the call reports it.
        let scale = self.norm_inf().max(1.0);
        let mut q = self.divrem(divisor).0;
        let mut best_q = q.clone();
        let mut best = f64::INFINITY;
        for _ in 0..4 {
            let r = self - &(&q * divisor);
            let res = r.norm_inf() / scale;
            if res < best {
                best = res;
                best_q = q.clone();
            } else {
                break;
            }
            if best <= 1e-15 {
                break;
            }
            q = &q + &r.divrem(divisor).0;
        }
        if best <= tol {
            Ok(best_q)
        } else {
            Err(best)
        }
    }

    /// Relative coefficient-wise distance: max |a_j − b_j| / max(1, ‖a‖∞, ‖b‖∞).
    pub fn rel_distance(&self, other: &Poly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let scale = self.norm_inf().max(other.norm_inf()).max(1.0);
        (0..n)
            .map(|j| (self.coeff(j) - other.coeff(j)).norm())
            .fold(0.0, f64::max)
            / scale
    }

    /// Coefficient-wise closeness test with relative tolerance.
    pub fn approx_eq(&self, other: &Poly, rel_tol: f64) -> bool {
        self.rel_distance(other) <= rel_tol
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_real(&[0.0, 0.0]).degree(), None);
    }

    #[test]
    fn constant_eval_is_identity() {
        let p = Poly::one();
        assert_eq!(p.eval(c(3.7, -2.0)), c(1.0, 0.0));
    }

    #[test]
    fn horner_matches_direct_expansion() {
        // p(x) = 2 − 3x + x³ at x = 2+i
        let p = Poly::from_real(&[2.0, -3.0, 0.0, 1.0]);
        let x = c(2.0, 1.0);
        let direct = c(2.0, 0.0) - c(3.0, 0.0) * x + x * x * x;
        assert!((p.eval(x) - direct).norm() < 1e-14);
    }

    #[test]
    fn mul_and_divrem_round_trip() {
        let a = Poly::from_real(&[1.0, 2.0, 3.0]);
        let b = Poly::from_real(&[-4.0, 0.5, 0.0, 2.0]);
        let prod = &a * &b;
        let (q, r) = prod.divrem(&b);
        assert!(q.approx_eq(&a, 1e-14));
        assert!(r.norm_inf() < 1e-12);
    }

    #[test]
    fn div_exact_rejects_nonzero_remainder() {
        let p = Poly::from_real(&[1.0, 1.0]);
        let d = Poly::from_real(&[0.0, 1.0]); // x
        assert!(p.div_exact(&d, 1e-12).is_err());
    }

    #[test]
    fn derivative_of_cubic() {
        let p = Poly::from_real(&[5.0, 0.0, -1.0, 4.0]);
        let dp = p.derivative();
        assert!(dp.approx_eq(&Poly::from_real(&[0.0, -2.0, 12.0]), 1e-15));
    }

    #[test]
    fn reversed_conj_matches_definition() {
        // φ(z) = (1−2i) + 3z²; φ*(z) at n=2: coefficient j = conj(c_{2−j}).
        let p = Poly::new(vec![c(1.0, -2.0), c(0.0, 0.0), c(3.0, 0.0)]);
        let star = p.reversed_conj(2);
        assert_eq!(star.coeff(0), c(3.0, 0.0));
        assert_eq!(star.coeff(2), c(1.0, 2.0));
    }

    #[test]
    fn from_roots_expands_correctly() {
        let roots = [c(1.0, 0.0), c(-2.0, 0.0)];
        let p = Poly::from_roots(&roots);
        // (x−1)(x+2) = x² + x − 2
        assert!(p.approx_eq(&Poly::from_real(&[-2.0, 1.0, 1.0]), 1e-15));
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let q = Poly::x2_plus_1();
        let p3 = q.powi(3);
        assert!(p3.approx_eq(&(&(&q * &q) * &q), 1e-15));
    }
}
