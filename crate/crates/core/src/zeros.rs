//! Zero computation and zero analysis.
//!
//! Roots come from the Aberth–Ehrlich simultaneous iteration (cubically
//! convergent for simple roots, warm-started on a Cauchy-bound circle) with a
//! Newton polish, and every result is certified by rebuilding the polynomial
//! from its computed roots and comparing coefficients. On top of that sit the
//! analyses used throughout: real classification, common zeros of two
//! polynomials, strict interlacing (with shared zeros removed first),
//! perturbation ladders, and the electrostatic energy of a real
//! configuration.

use crate::error::{Error, Result};
use crate::family::RecurrenceFamily;
use crate::perturb::{perturb_direct, PerturbationSpec};
use crate::poly::Poly;
use crate::tol::{COMMON_ZERO, REAL_CLASSIFY, ROOT_CERT, ROOT_STEP};
use num_complex::Complex64;

const MAX_SWEEPS: usize = 200;
const POLISH_STEPS: usize = 5;

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of `p`, certified: the monic product over the computed
/// roots times the leading coefficient must reproduce the input coefficients
/// to a relative tolerance, otherwise the failure is reported with its
/// residual. Roots are sorted by real part, then imaginary part.
pub fn roots(p: &Poly) -> Result<Vec<Complex64>> {
    let n = match p.degree() {
        None => {
            return Err(Error::InvariantViolation(
                "the zero polynomial has no root set".into(),
            ))
        }
        Some(0) => return Ok(Vec::new()),
        Some(n) => n,
    };
    let lead = p.leading();
    let monic: Vec<Complex64> = p.coeffs().iter().map(|&c| c / lead).collect();
    let mut z: Vec<Complex64>;
    if n == 1 {
        z = vec![-monic[0]];
    } else {
        let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
        z = (0..n)
            .map(|k| {
                Complex64::from_polar(
                    radius,
                    2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.41,
                )
            })
            .collect();
        for _ in 0..MAX_SWEEPS {
            let mut settled = true;
            for k in 0..n {
                let (pv, dv) = eval_with_derivative(&monic, z[k]);
                let newton = if dv.norm() == 0.0 {
                    // Degenerate point: nudge off the stationary point.
                    Complex64::new(ROOT_STEP, ROOT_STEP)
                } else {
                    pv / dv
                };
                let mut repulsion = Complex64::new(0.0, 0.0);
                for j in 0..n {
                    if j != k {
                        repulsion += 1.0 / (z[k] - z[j]);
                    }
                }
                let denom = 1.0 - newton * repulsion;
                let correction = if denom.norm() < 1e-12 {
                    newton
                } else {
                    newton / denom
                };
                z[k] -= correction;
                if correction.norm() > ROOT_STEP * (1.0 + z[k].norm()) {
                    settled = false;
                }
            }
            if settled {
                break;
            }
        }
        // Newton polish: keep steps while the residual improves.
        for zk in z.iter_mut() {
            for _ in 0..POLISH_STEPS {
                let (pv, dv) = eval_with_derivative(&monic, *zk);
                if dv.norm() == 0.0 {
                    break;
                }
                let step = pv / dv;
                let candidate = *zk - step;
                let (pc, _) = eval_with_derivative(&monic, candidate);
                if pc.norm() < pv.norm() {
                    *zk = candidate;
                } else {
                    break;
                }
            }
        }
    }
    let rebuilt = Poly::from_roots(&z).scale(lead);
    let residual = rebuilt.rel_distance(p);
    if residual > ROOT_CERT {
        return Err(Error::ConvergenceFailure {
            what: format!("root certification at degree {n}"),
            residual,
        });
    }
    z.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(z)
}

/// Splits computed roots into real values and genuinely complex ones; a root
/// x counts as real when |Im x| ≤ REAL_CLASSIFY·(1 + |Re x|).
pub fn classify_real(zs: &[Complex64]) -> (Vec<f64>, Vec<Complex64>) {
    let mut real = Vec::new();
    let mut complex = Vec::new();
    for &z in zs {
        if z.im.abs() <= REAL_CLASSIFY * (1.0 + z.re.abs()) {
            real.push(z.re);
        } else {
            complex.push(z);
        }
    }
    real.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (real, complex)
}

/// All zeros of `p`, required to be real; ascending. A genuinely complex zero
/// is an invariant violation (callers use this on polynomials whose zero
/// reality is a theorem for valid input).
pub fn real_zeros(p: &Poly) -> Result<Vec<f64>> {
    let zs = roots(p)?;
    let (real, complex) = classify_real(&zs);
    if !complex.is_empty() {
        return Err(Error::InvariantViolation(format!(
            "expected real zeros, found {} off the real line (first: {:.6}{:+.6}i)",
            complex.len(),
            complex[0].re,
            complex[0].im
        )));
    }
    Ok(real)
}

/// Zeros shared by two polynomials: the computed root sets are greedily
/// matched within `tol` (each root used at most once) and the matched
/// midpoints are returned sorted by real part.
pub fn common_zeros(p: &Poly, q: &Poly, tol: f64) -> Result<Vec<Complex64>> {
    let zp = roots(p)?;
    let zq = roots(q)?;
    let mut used = vec![false; zq.len()];
    let mut out = Vec::new();
    for &a in &zp {
        let mut best: Option<(usize, f64)> = None;
        for (j, &b) in zq.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = (a - b).norm();
            if d <= tol * (1.0 + a.norm()) && best.map_or(true, |(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        if let Some((j, _)) = best {
            used[j] = true;
            out.push((a + zq[j]) / 2.0);
        }
    }
    out.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
    Ok(out)
}

/// Convenience wrapper with the crate-wide matching tolerance.
pub fn common_zeros_default(p: &Poly, q: &Poly) -> Result<Vec<Complex64>> {
    common_zeros(p, q, COMMON_ZERO)
}

/// Strips near-equal pairs from two sorted zero lists (one element from each
/// side per match), returning what remains of each. Useful before an
/// interlacing check when the two polynomials provably share zeros.
pub fn remove_common_pairs(a: &[f64], b: &[f64], tol: f64) -> (Vec<f64>, Vec<f64>) {
    let mut ra: Vec<f64> = a.to_vec();
    let mut rb: Vec<f64> = b.to_vec();
    ra.sort_by(|x, y| x.partial_cmp(y).unwrap());
    rb.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut keep_a = Vec::new();
    let mut j = 0usize;
    let mut used = vec![false; rb.len()];
    for &x in &ra {
        while j < rb.len() && rb[j] < x - tol * (1.0 + x.abs()) {
            j += 1;
        }
        let mut matched = false;
        for (idx, &y) in rb.iter().enumerate().skip(j) {
            if y > x + tol * (1.0 + x.abs()) {
                break;
            }
            if !used[idx] {
                used[idx] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            keep_a.push(x);
        }
    }
    let keep_b: Vec<f64> = rb
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !used[*i])
        .map(|(_, v)| v)
        .collect();
    (keep_a, keep_b)
}

/// Strict interlacing test: zeros the two sets share (within `tol`) are
/// removed in pairs first, then the survivors must alternate strictly. Set
/// sizes after removal may differ by at most one; when they differ, the
/// larger set must hold both extremes.
pub fn interlace_strict(a: &[f64], b: &[f64], tol: f64) -> bool {
    let (ra, rb) = remove_common_pairs(a, b, tol);
    if ra.len().abs_diff(rb.len()) > 1 {
        return false;
    }
    let mut tagged: Vec<(f64, u8)> = ra
        .iter()
        .map(|&v| (v, 0u8))
        .chain(rb.iter().map(|&v| (v, 1u8)))
        .collect();
    tagged.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    if tagged.windows(2).any(|w| w[0].1 == w[1].1) {
        return false;
    }
    if ra.len() > rb.len() {
        tagged.first().map(|t| t.1) == Some(0) && tagged.last().map(|t| t.1) == Some(0)
    } else if rb.len() > ra.len() {
        tagged.first().map(|t| t.1) == Some(1) && tagged.last().map(|t| t.1) == Some(1)
    } else {
        true
    }
}

/// Real zeros of the perturbed degree-n polynomial for each spec in the
/// ladder, row per spec.
pub fn real_zero_ladder(
    fam: &RecurrenceFamily,
    n: usize,
    specs: &[PerturbationSpec],
) -> Result<Vec<Vec<f64>>> {
    specs
        .iter()
        .map(|spec| {
            let (p, _) = perturb_direct(fam, spec, n)?;
            real_zeros(&p[n])
        })
        .collect()
}

/// Per-index monotonicity of a ladder: +1 strictly increasing down the rows,
/// −1 strictly decreasing, 0 otherwise.
pub fn monotone_directions(rows: &[Vec<f64>]) -> Vec<i8> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    (0..cols)
        .map(|c| {
            let incr = rows.windows(2).all(|w| w[1][c] > w[0][c]);
            let decr = rows.windows(2).all(|w| w[1][c] < w[0][c]);
            if incr {
                1
            } else if decr {
                -1
            } else {
                0
            }
        })
        .collect()
}

/// Electrostatic energy of a real configuration in the external field of the
/// weight: E = −Σ_{i<j} ln|x_i − x_j| + (ζ/2)·Σ ln(1 + x_j²) − θ·Σ arctan x_j.
/// Coincident points make the energy infinite and are rejected.
pub fn electrostatic_energy(points: &[f64], zeta: f64, theta: f64) -> Result<f64> {
    let mut energy = 0.0;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = points[i] - points[j];
            if d == 0.0 {
                return Err(Error::CoincidentPoints(points[i]));
            }
            energy -= d.abs().ln();
        }
    }
    for &x in points {
        energy += 0.5 * zeta * (1.0 + x * x).ln() - theta * x.atan();
    }
    Ok(energy)
}
