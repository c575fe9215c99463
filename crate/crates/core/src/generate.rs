//! Generation of the three polynomial sequences attached to a recurrence
//! family: first kind (P), second kind (Q) and associated of order r.
//!
//! All three run the same step
//!
//! ```text
//! next = (x − c_j)·prev − λ_j·(x − a_j)(x − b_j)·prev2
//! ```
//!
//! and differ only in their seeds and in the coefficient index consumed per
//! step. With `off` the family convention offset and `r` the association
//! order, the step that produces item m consumes index j = m − 1 + off + r.
//! Seeds: first kind / associated start (prev2, prev) = (0, 1); second kind
//! starts (Q_0, Q_1) = (0, 1), i.e. the index-consuming loop begins at m = 2.
//! A step whose `prev2` is the zero polynomial never queries λ at all, so
//! head indices may carry λ = 0 (or no value) without tripping validation.

use crate::error::{Error, Result};
use crate::family::{RecurrenceFamily, MAX_DEGREE};
use crate::poly::Poly;
use num_complex::Complex64;
use std::ops::Index;

/// Which of the three sequences a `PolySequence` holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    FirstKind,
    SecondKind,
    /// Associated sequence; the payload is the association order r ≥ 1.
    Associated(usize),
}

/// A generated run P_0 … P_n (indexable by subscript).
#[derive(Clone, Debug)]
pub struct PolySequence {
    items: Vec<Poly>,
    kind: SeqKind,
}

impl PolySequence {
    /// Assembles a sequence from precomputed items (perturbation routes build
    /// their outputs item by item).
    pub(crate) fn from_parts(items: Vec<Poly>, kind: SeqKind) -> Self {
        assert!(!items.is_empty(), "sequence is never empty");
        PolySequence { items, kind }
    }

    pub fn kind(&self) -> SeqKind {
        self.kind
    }

    pub fn items(&self) -> &[Poly] {
        &self.items
    }

    /// Highest subscript generated (items run 0..=n).
    pub fn max_index(&self) -> usize {
        self.items.len() - 1
    }

    pub fn last(&self) -> &Poly {
        self.items.last().expect("sequence is never empty")
    }

    /// Ratios of consecutive leading coefficients, entry n−1 holding
    /// lead(P_n)/lead(P_{n−1}) for n = 1..=max. For second-kind sequences the
    /// ratios start at n = 2 (Q_0 = 0 has no leading coefficient).
    pub fn leading_ratios(&self) -> Vec<Complex64> {
        let start = match self.kind {
            SeqKind::SecondKind => 2,
            _ => 1,
        };
        (start..self.items.len())
            .map(|n| self.items[n].leading() / self.items[n - 1].leading())
            .collect()
    }
}

impl Index<usize> for PolySequence {
    type Output = Poly;
    fn index(&self, i: usize) -> &Poly {
        &self.items[i]
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::DegreeCapExceeded {
            requested: n,
            cap: MAX_DEGREE,
        })
    } else {
        Ok(())
    }
}

/// One recurrence step consuming coefficient index j. When `prev2` is the
/// zero polynomial the λ term is structurally absent and λ_j is not read.
pub(crate) fn step(fam: &RecurrenceFamily, j: usize, prev: &Poly, prev2: &Poly) -> Result<Poly> {
    let c = fam.c_at(j)?;
    let linear = Poly::x_minus(Complex64::new(c, 0.0));
    let mut out = &linear * prev;
    if !prev2.is_zero() {
        let lam = fam.lambda_at(j)?;
        let quad = fam.quad_at(j)?;
        out = &out - &(&quad * prev2).scale_real(lam);
    }
    Ok(out)
}

fn run(
    fam: &RecurrenceFamily,
    n: usize,
    kind: SeqKind,
    seeds: (Poly, Poly),
    first_step_m: usize,
    extra_shift: usize,
) -> Result<PolySequence> {
    check_cap(n)?;
    let (seed2, seed1) = seeds;
    let mut items: Vec<Poly> = Vec::with_capacity(n + 1);
    // Seeds occupy subscripts first_step_m−2 and first_step_m−1; only
    // subscripts ≥ 0 are stored (the P_{−1} = 0 seed of first-kind runs is
    // virtual).
    if first_step_m >= 2 {
        items.push(seed2.clone());
    }
    items.push(seed1.clone());
    let (mut prev2, mut prev) = (seed2, seed1);
    for m in first_step_m..=n {
        let j = m - 1 + fam.convention.offset() + extra_shift;
        let next = step(fam, j, &prev, &prev2)?;
        items.push(next.clone());
        prev2 = prev;
        prev = next;
    }
    Ok(PolySequence { items, kind })
}

/// First-kind sequence P_0 … P_n (P_0 = 1, deg P_m = m).
pub fn generate_first(fam: &RecurrenceFamily, n: usize) -> Result<PolySequence> {
    run(
        fam,
        n,
        SeqKind::FirstKind,
        (Poly::zero(), Poly::one()),
        1,
        0,
    )
}

/// Second-kind sequence Q_0 … Q_n (Q_0 = 0, Q_1 = 1, deg Q_m = m − 1).
pub fn generate_second(fam: &RecurrenceFamily, n: usize) -> Result<PolySequence> {
    if n == 0 {
        return Ok(PolySequence {
            items: vec![Poly::zero()],
            kind: SeqKind::SecondKind,
        });
    }
    run(
        fam,
        n,
        SeqKind::SecondKind,
        (Poly::zero(), Poly::one()),
        2,
        0,
    )
}

/// Associated sequence of order r ≥ 1: same seeds as first kind, every step's
/// coefficient index shifted up by r.
pub fn generate_associated(fam: &RecurrenceFamily, r: usize, n: usize) -> Result<PolySequence> {
    if r == 0 {
        return generate_first(fam, n);
    }
    run(
        fam,
        n,
        SeqKind::Associated(r),
        (Poly::zero(), Poly::one()),
        1,
        r,
    )
}

/// Chebyshev nodes used by all pointwise identity checks: 21 points spread
/// over [−5, 5]. Wide enough to separate degree-20 polynomials, clustered at
/// the ends where they grow fastest.
pub fn check_nodes() -> Vec<f64> {
    const COUNT: usize = 21;
    (0..COUNT)
        .map(|i| 5.0 * ((2 * i + 1) as f64 * std::f64::consts::PI / (2 * COUNT) as f64).cos())
        .collect()
}

/// Replays every step of a generated sequence at the check nodes and returns
/// the largest relative residual
/// |P_m − (x−c_j)P_{m−1} + λ_j·quad·P_{m−2}| / (1 + |P_m|).
pub fn recurrence_residual(fam: &RecurrenceFamily, seq: &PolySequence) -> Result<f64> {
    let (first_step_m, extra_shift) = match seq.kind {
        SeqKind::FirstKind => (1usize, 0usize),
        SeqKind::SecondKind => (2, 0),
        SeqKind::Associated(r) => (1, r),
    };
    let nodes = check_nodes();
    let mut worst: f64 = 0.0;
    for m in first_step_m..=seq.max_index() {
        let j = m - 1 + fam.convention.offset() + extra_shift;
        let c = fam.c_at(j)?;
        let prev2 = if m >= 2 {
            seq[m - 2].clone()
        } else {
            Poly::zero()
        };
        let (lam, quad) = if prev2.is_zero() {
            (0.0, Poly::zero())
        } else {
            (fam.lambda_at(j)?, fam.quad_at(j)?)
        };
        for &x in &nodes {
            let z = Complex64::new(x, 0.0);
            let lhs = seq[m].eval(z);
            let mut rhs = (z - c) * seq[m - 1].eval(z);
            if !prev2.is_zero() {
                rhs -= lam * quad.eval(z) * prev2.eval(z);
            }
            let rel = (lhs - rhs).norm() / (1.0 + lhs.norm());
            worst = worst.max(rel);
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tol::EXACT_EPS;

    #[test]
    fn constant_family_first_kind_heads() {
        let fam = RecurrenceFamily::example1();
        let ps = generate_first(&fam, 3).unwrap();
        assert!(ps[0].approx_eq(&Poly::one(), EXACT_EPS));
        assert!(ps[1].approx_eq(&Poly::x(), EXACT_EPS));
        // P_2 = x² − (x²+1)/4 = (3x² − 1)/4
        assert!(ps[2].approx_eq(&Poly::from_real(&[-0.25, 0.0, 0.75]), EXACT_EPS));
        // P_3 = x·P_2 − (x²+1)x/4 = (x³ − x)/2
        assert!(ps[3].approx_eq(&Poly::from_real(&[0.0, -0.5, 0.0, 0.5]), EXACT_EPS));
    }

    #[test]
    fn shifted_family_first_kind_heads() {
        let fam = RecurrenceFamily::lambda2_half();
        let ps = generate_first(&fam, 3).unwrap();
        assert!(ps[1].approx_eq(&Poly::x(), EXACT_EPS));
        // P_2 = x² − (x²+1)/2 = (x² − 1)/2
        assert!(ps[2].approx_eq(&Poly::from_real(&[-0.5, 0.0, 0.5]), EXACT_EPS));
        // P_3 = x·P_2 − (x²+1)x/4 = (x³ − 3x)/4
        assert!(ps[3].approx_eq(&Poly::from_real(&[0.0, -0.75, 0.0, 0.25]), EXACT_EPS));
    }

    #[test]
    fn second_kind_of_constant_family_shifts_first_kind() {
        // With fully constant coefficients, Q_{n+1} obeys the same recurrence
        // and seeds as P_n, so Q_{n+1} = P_n.
        let fam = RecurrenceFamily::example1();
        let ps = generate_first(&fam, 5).unwrap();
        let qs = generate_second(&fam, 6).unwrap();
        for n in 0..=5 {
            assert!(qs[n + 1].approx_eq(&ps[n], EXACT_EPS));
        }
    }

    #[test]
    fn associated_order_one_of_shifted_demo_is_constant_quarter_run() {
        // Shifting the co-dilation demo by one slot skips its λ_2 = 1/2 bump,
        // leaving the all-1/4 run.
        let fam = RecurrenceFamily::lambda2_half();
        let assoc = generate_associated(&fam, 1, 4).unwrap();
        let plain = generate_first(&RecurrenceFamily::example1(), 4).unwrap();
        for n in 0..=4 {
            assert!(assoc[n].approx_eq(&plain[n], EXACT_EPS));
        }
    }

    #[test]
    fn degrees_and_leading_ratios() {
        let fam = RecurrenceFamily::crr(10.0, 12.0).unwrap();
        let ps = generate_first(&fam, 8).unwrap();
        for n in 0..=8 {
            assert_eq!(ps[n].degree(), Some(n));
        }
        let ratios = ps.leading_ratios();
        assert_eq!(ratios.len(), 8);
        // Leading-coefficient ratios equal 1 − l_m for the minimal chain
        // parameters, so they lie in (0, 1] — the very first one is exactly 1
        // because l_1 = 0, and every later one is strictly below 1.
        for (i, r) in ratios.iter().enumerate() {
            assert!(r.im.abs() < EXACT_EPS);
            assert!(r.re > 0.0 && r.re <= 1.0);
            if i > 0 {
                assert!(r.re < 1.0);
            }
        }
    }

    #[test]
    fn residual_replay_is_exact_scale() {
        let fam = RecurrenceFamily::crr_offset(10.0, 12.0).unwrap();
        for n in [1usize, 2, 7] {
            let ps = generate_first(&fam, n).unwrap();
            assert!(recurrence_residual(&fam, &ps).unwrap() < 1e-12);
            let qs = generate_second(&fam, n).unwrap();
            assert!(recurrence_residual(&fam, &qs).unwrap() < 1e-12);
        }
        // Replaying from coefficients evaluates both sides at nodes where the
        // polynomial may nearly vanish while its coefficient norm grows like
        // |x|^n, so the pointwise relative residual loosens with degree; at
        // n = 12 the observed value is ~4e-11.
        let ps = generate_first(&fam, 12).unwrap();
        assert!(recurrence_residual(&fam, &ps).unwrap() < 1e-10);
        let qs = generate_second(&fam, 12).unwrap();
        assert!(recurrence_residual(&fam, &qs).unwrap() < 1e-10);
        let assoc = generate_associated(&fam, 3, 9).unwrap();
        assert!(recurrence_residual(&fam, &assoc).unwrap() < 1e-12);
    }

    #[test]
    fn cap_is_enforced() {
        let fam = RecurrenceFamily::example1();
        assert!(matches!(
            generate_first(&fam, MAX_DEGREE + 1),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn closed_form_constant_family() {
        // P_n(x) = i·((x−i)/2)^{n+1} − i·((x+i)/2)^{n+1}
        let fam = RecurrenceFamily::example1();
        let n = 12;
        let ps = generate_first(&fam, n).unwrap();
        let half = Complex64::new(0.5, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let lo = Poly::new(vec![-i * half, half]); // (x − i)/2
        let hi = Poly::new(vec![i * half, half]); // (x + i)/2
        let closed = &lo.powi(n + 1).scale(i) - &hi.powi(n + 1).scale(i);
        assert!(ps[n].approx_eq(&closed, 1e-13));
    }

    #[test]
    fn closed_form_shifted_family() {
        // P_n(x) = ((x−i)/2)^n + ((x+i)/2)^n
        let fam = RecurrenceFamily::lambda2_half();
        let n = 12;
        let ps = generate_first(&fam, n).unwrap();
        let half = Complex64::new(0.5, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let lo = Poly::new(vec![-i * half, half]);
        let hi = Poly::new(vec![i * half, half]);
        let closed = &lo.powi(n) + &hi.powi(n);
        assert!(ps[n].approx_eq(&closed, 1e-13));
    }
}
