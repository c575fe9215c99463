//! Bridge from special recurrence families (quadratic factor x² + 1, real c)
//! to orthogonal polynomials on the unit circle.
//!
//! Labels below are 1-based "theory" labels: c_n is the c consumed by the
//! step producing the degree-n polynomial and l_n are the minimal parameters
//! of the family's chain sequence. The bridge data are
//!
//! ```text
//! τ_0 = 1,  τ_n = τ_{n−1}·(1 − i·c_n)/(1 + i·c_n)               (|τ_n| = 1)
//! α_{n−1} = −(1/τ_n)·(1 − 2l_{n+1} − i·c_{n+1})/(1 − i·c_{n+1})
//! ```
//!
//! with the second coefficient system β using the complementary parameters
//! 1 − l_{n+1} in place of l_{n+1}. The Szegő recurrence rebuilds the monic
//! circle polynomials φ from α; independently, the Cayley transform
//! ξ = (x + i)/(x − i) carries P_n to a degree-n polynomial R_n on the circle
//! with φ_{n−1} = (R_n − 2(1 − l_n)·R_{n−1}) / ((ξ − 1)·∏_{j=1}^n (1 + i·c_j)),
//! giving a second, recurrence-free route to the same φ. Para-orthogonal
//! combinations zφ_{n−1} − τ_n·φ*_{n−1} have all zeros on the circle.

use crate::chain::ChainSeq;
use crate::error::{Error, Result};
use crate::family::RecurrenceFamily;
use crate::perturb::PerturbationSpec;
use crate::poly::Poly;
use crate::tol::RESIDUAL_REL;
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn require_special(fam: &RecurrenceFamily) -> Result<()> {
    if fam.is_special() {
        Ok(())
    } else {
        Err(Error::InvalidFamily(format!(
            "the unit-circle bridge needs the x²+1 quadratic factor; family '{}' does not have it",
            fam.name
        )))
    }
}

/// The rotation chain τ_0 … τ_n (all unimodular).
pub fn tau_sequence(fam: &RecurrenceFamily, n: usize) -> Result<Vec<Complex64>> {
    require_special(fam)?;
    let mut out = Vec::with_capacity(n + 1);
    let mut tau = Complex64::new(1.0, 0.0);
    out.push(tau);
    for m in 1..=n {
        let c = fam.c_shifted(m)?;
        tau *= (1.0 - I * c) / (1.0 + I * c);
        out.push(tau);
    }
    Ok(out)
}

/// Verblunsky coefficients α_0 … α_{count−1} of the family. Each |α| < 1 is
/// validated (a violation means the family is not a valid input).
pub fn verblunsky(fam: &RecurrenceFamily, count: usize) -> Result<Vec<Complex64>> {
    verblunsky_with(fam, count, false)
}

/// Verblunsky coefficients of the *second* system attached to the family,
/// built from the complementary chain parameters.
pub fn verblunsky_complementary(fam: &RecurrenceFamily, count: usize) -> Result<Vec<Complex64>> {
    verblunsky_with(fam, count, true)
}

fn verblunsky_with(
    fam: &RecurrenceFamily,
    count: usize,
    complementary: bool,
) -> Result<Vec<Complex64>> {
    require_special(fam)?;
    let tau = tau_sequence(fam, count)?;
    let l = ChainSeq::from_family(fam).minimal_params(count + 1)?;
    let mut out = Vec::with_capacity(count);
    for n in 1..=count {
        let c = fam.c_shifted(n + 1)?;
        let param = if complementary { 1.0 - l[n] } else { l[n] }; // l_{n+1} lives at vec index n
        let a = -(1.0 / tau[n]) * (1.0 - 2.0 * param - I * c) / (1.0 - I * c);
        let modulus = a.norm();
        if modulus >= 1.0 {
            return Err(Error::InvalidVerblunsky {
                index: n - 1,
                modulus,
            });
        }
        out.push(a);
    }
    Ok(out)
}

/// Verblunsky coefficients of the coefficient-perturbed family (the perturbed
/// system's own rotation chain and chain parameters are used throughout).
pub fn verblunsky_perturbed(
    fam: &RecurrenceFamily,
    spec: &PerturbationSpec,
    count: usize,
) -> Result<Vec<Complex64>> {
    verblunsky(&fam.perturbed(spec), count)
}

/// Rotation chain of the perturbed family.
pub fn tau_perturbed(
    fam: &RecurrenceFamily,
    spec: &PerturbationSpec,
    n: usize,
) -> Result<Vec<Complex64>> {
    tau_sequence(&fam.perturbed(spec), n)
}

/// Monic Szegő polynomials φ_0 … φ_n from Verblunsky coefficients
/// α_0 … α_{n−1}: φ_{m+1} = z·φ_m − conj(α_m)·φ*_m.
pub fn szego_polys(alphas: &[Complex64]) -> Vec<Poly> {
    let mut out = Vec::with_capacity(alphas.len() + 1);
    out.push(Poly::one());
    for (m, &a) in alphas.iter().enumerate() {
        let prev: &Poly = out.last().unwrap();
        let star = prev.reversed_conj(m);
        let next = &(&Poly::x() * prev) - &star.scale(a.conj());
        out.push(next);
    }
    out
}

/// Carries a degree-n polynomial P through the Cayley transform
/// ξ = (x + i)/(x − i): returns the unique degree-≤n polynomial R with
/// R(ξ(x)) = 2ⁿ·P(x)/(x − i)ⁿ. R is interpolated at the (n+1)-st roots of −1
/// (whose ξ-preimages are real), where the system is an exact discrete
/// Fourier transform and hence perfectly conditioned; the result is verified
/// at interleaved fresh nodes before being returned.
pub fn circle_transform(p: &Poly) -> Result<Poly> {
    let n = match p.degree() {
        Some(n) => n,
        None => return Ok(Poly::zero()),
    };
    if n == 0 {
        return Ok(p.clone());
    }
    let count = n + 1;
    let pi = std::f64::consts::PI;
    let unit = |angle: f64| Complex64::from_polar(1.0, angle);
    let xi: Vec<Complex64> = (0..count)
        .map(|j| unit(pi * (2 * j + 1) as f64 / count as f64))
        .collect();
    let values: Vec<Complex64> = xi
        .iter()
        .map(|&xi_j| {
            let x = I * (xi_j + 1.0) / (xi_j - 1.0);
            let scale = 2.0_f64.powi(n as i32);
            scale * p.eval(x) / (x - I).powu(n as u32)
        })
        .collect();
    // With ω = e^{iπ/count}, the node values satisfy v_j = Σ_m (ρ_m·ω^m)·(ω²)^{jm}
    // — a plain DFT in y_m = ρ_m·ω^m. Invert it and peel off the ω^m twist.
    let coeffs: Vec<Complex64> = (0..count)
        .map(|m| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &v) in values.iter().enumerate() {
                acc += v * unit(-2.0 * pi * ((j * m) % count) as f64 / count as f64);
            }
            acc / count as f64 * unit(-pi * m as f64 / count as f64)
        })
        .collect();
    let r = Poly::new(coeffs);
    // Independent verification at fresh nodes between the interpolation nodes.
    let mut worst: f64 = 0.0;
    for j in 0..count {
        let xi_f = Complex64::from_polar(
            1.0,
            std::f64::consts::PI * (2 * j + 1) as f64 / (2 * count) as f64,
        );
        let x = I * (xi_f + 1.0) / (xi_f - 1.0);
        let expect = 2.0_f64.powi(n as i32) * p.eval(x) / (x - I).powu(n as u32);
        let got = r.eval(xi_f);
        worst = worst.max((got - expect).norm() / (1.0 + expect.norm()));
    }
    if worst > RESIDUAL_REL {
        return Err(Error::InconsistentInput {
            what: "circle transform verification".into(),
            residual: worst,
        });
    }
    Ok(r)
}

/// Builds φ_{n−1} directly from the family's first-kind polynomials P_n and
/// P_{n−1} via the circle transform, without the Szegő recurrence:
/// φ_{n−1} = (R_n − 2(1 − l_n)·R_{n−1}) / ((ξ − 1)·∏_{j=1}^n (1 + i·c_j)).
/// The division by ξ − 1 must be exact; its remainder is reported otherwise.
pub fn phi_from_first_kind(fam: &RecurrenceFamily, n: usize) -> Result<Poly> {
    require_special(fam)?;
    if n == 0 {
        return Err(Error::LevelOutOfRange {
            k: 0,
            reason: "phi extraction needs degree n ≥ 1".into(),
        });
    }
    let seq = crate::generate::generate_first(fam, n)?;
    let r_n = circle_transform(&seq[n])?;
    let r_prev = circle_transform(&seq[n - 1])?;
    let l = ChainSeq::from_family(fam).minimal_params(n.max(2))?;
    let l_n = l[n - 1]; // l_n lives at vec index n−1
    let numerator = &r_n - &r_prev.scale_real(2.0 * (1.0 - l_n));
    let (quot, rem) = numerator.divrem(&Poly::x_minus(Complex64::new(1.0, 0.0)));
    let rel_rem = rem.norm_inf() / numerator.norm_inf().max(1.0);
    if rel_rem > RESIDUAL_REL {
        return Err(Error::IdentityViolation {
            what: format!("(ξ−1) division in phi extraction at degree {n}"),
            residual: rel_rem,
        });
    }
    let mut prefactor = Complex64::new(1.0, 0.0);
    for j in 1..=n {
        prefactor *= 1.0 + I * fam.c_shifted(j)?;
    }
    Ok(quot.scale(1.0 / prefactor))
}

/// Para-orthogonal polynomial z·φ_{n−1} − τ_n·φ*_{n−1}; all its zeros lie on
/// the unit circle.
pub fn para_orthogonal(phi_prev: &Poly, tau_n: Complex64, n: usize) -> Poly {
    let star = phi_prev.reversed_conj(n - 1);
    &(&Poly::x() * phi_prev) - &star.scale(tau_n)
}

/// Leading-coefficient ratio identity: lead(P_n)/lead(P_{n−1}) = 1 − l_n.
/// Returns the largest deviation over n = 1..=count.
pub fn leading_ratio_residual(fam: &RecurrenceFamily, count: usize) -> Result<f64> {
    require_special(fam)?;
    let seq = crate::generate::generate_first(fam, count)?;
    let ratios = seq.leading_ratios();
    let l = ChainSeq::from_family(fam).minimal_params(count.max(2))?;
    let mut worst: f64 = 0.0;
    for n in 1..=count {
        let expect = 1.0 - l[n - 1];
        worst = worst.max((ratios[n - 1] - expect).norm());
    }
    Ok(worst)
}
