//! Coefficient perturbations and the three independent routes that compute
//! their effect on a polynomial sequence.
//!
//! A perturbation entry at level k (a coefficient index in the family's own
//! convention) replaces c_k by c_k + μ and λ_k by ν·λ_k. Its first effect in
//! the first-kind sequence is on the polynomial of degree M = k + 1 − offset.
//! Three routes compute the perturbed sequences:
//!
//! 1. **direct** — substitute the new coefficients and rerun the recurrence;
//! 2. **structure** — a single correction term
//!    `S = μ·P_{M−1} + (ν−1)·λ_k·quad·P_{M−2}` propagated by the associated
//!    sequence: `P̃_n = P_n − S·A⁽ᴹ⁾_{n−M}` for n ≥ M (second kind analogously
//!    with `Ŝ = −μ·Q_{M−1} − (ν−1)·λ_k·quad·Q_{M−2}` and a + sign);
//! 3. **transfer** — a 2×2 polynomial matrix N with scalar polynomial 𝔎
//!    satisfying `𝔎·(P̃_m, −Q̃_m)ᵀ = N·(P_m, −Q_m)ᵀ` for every m ≥ M − 1.
//!
//! The routes share no intermediate results, so pairwise agreement is a
//! strong correctness check; `relate_two_perturbations` additionally links
//! two different perturbations of the same family without passing through
//! the unperturbed pair. Routes 2 and 3 need a level-independent quadratic
//! factor; route 1 works for any family.

use crate::error::{Error, Result};
use crate::family::RecurrenceFamily;
use crate::generate::{
    check_nodes, generate_associated, generate_first, generate_second, PolySequence, SeqKind,
};
use crate::poly::Poly;
use crate::tol::DIVISION_REMAINDER;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

// ---------------------------------------------------------------------------
// Perturbation specification
// ---------------------------------------------------------------------------

/// One perturbed level: c_k ← c_k + μ, λ_k ← ν·λ_k.
#[derive(Clone, Copy, Debug, Deserialize, Serialize)]
pub struct PerturbEntry {
    pub k: usize,
    #[serde(default)]
    pub mu: f64,
    #[serde(default = "one")]
    pub nu: f64,
}

fn one() -> f64 {
    1.0
}

/// A validated set of perturbed levels: distinct, ν > 0, kept sorted by level.
#[derive(Clone, Debug, Serialize)]
pub struct PerturbationSpec {
    entries: Vec<PerturbEntry>,
}

impl PerturbationSpec {
    pub fn new(mut entries: Vec<PerturbEntry>) -> Result<Self> {
        for e in &entries {
            if !(e.nu > 0.0) || !e.nu.is_finite() {
                return Err(Error::InvalidPerturbation(format!(
                    "dilation factor at level {} is {}, must be finite and > 0",
                    e.k, e.nu
                )));
            }
            if !e.mu.is_finite() {
                return Err(Error::InvalidPerturbation(format!(
                    "shift at level {} is not finite",
                    e.k
                )));
            }
        }
        entries.sort_by_key(|e| e.k);
        if entries.windows(2).any(|w| w[0].k == w[1].k) {
            return Err(Error::InvalidPerturbation(
                "duplicate perturbation level".into(),
            ));
        }
        Ok(PerturbationSpec { entries })
    }

    pub fn single(k: usize, mu: f64, nu: f64) -> Result<Self> {
        PerturbationSpec::new(vec![PerturbEntry { k, mu, nu }])
    }

    pub fn entries(&self) -> &[PerturbEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Parses `{"entries": [{"k": 4, "mu": -0.7, "nu": 1.0}, ...]}`; `mu`
    /// defaults to 0 and `nu` to 1.
    pub fn from_json(doc: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Doc {
            entries: Vec<PerturbEntry>,
        }
        let doc: Doc = serde_json::from_str(doc)?;
        PerturbationSpec::new(doc.entries)
    }
}

/// Degree of the first polynomial a perturbation at level k changes:
/// M = k + 1 − offset. Levels the recurrence never consumes are rejected.
pub fn first_affected(fam: &RecurrenceFamily, k: usize) -> Result<usize> {
    let off = fam.convention.offset();
    if k + 1 <= off {
        return Err(Error::LevelOutOfRange {
            k,
            reason: format!("this family's recurrence starts at coefficient index {off}"),
        });
    }
    Ok(k + 1 - off)
}

// ---------------------------------------------------------------------------
// Route 1: direct substitution
// ---------------------------------------------------------------------------

/// Runs the recurrence of the coefficient-substituted family. Returns the
/// perturbed first- and second-kind sequences up to degree n.
pub fn perturb_direct(
    fam: &RecurrenceFamily,
    spec: &PerturbationSpec,
    n: usize,
) -> Result<(PolySequence, PolySequence)> {
    for e in spec.entries() {
        first_affected(fam, e.k)?;
    }
    let pert = fam.perturbed(spec);
    Ok((generate_first(&pert, n)?, generate_second(&pert, n)?))
}

// ---------------------------------------------------------------------------
// Route 2: structural correction term
// ---------------------------------------------------------------------------

/// The first-kind correction S for one entry, built from the given (current)
/// first-kind sequence. The λ term is absent when M < 2, mirroring the
/// recurrence step that never reads λ against a zero polynomial.
fn structural_term(
    fam: &RecurrenceFamily,
    firsts: &PolySequence,
    e: &PerturbEntry,
) -> Result<Poly> {
    let m = first_affected(fam, e.k)?;
    let mut s = firsts[m - 1].scale_real(e.mu);
    if m >= 2 && e.nu != 1.0 {
        let quad = fam.constant_quad()?;
        let lam = fam.lambda_at(e.k)?;
        s = &s + &(&quad * &firsts[m - 2]).scale_real((e.nu - 1.0) * lam);
    }
    Ok(s)
}

/// The second-kind correction Ŝ for one entry, from the current second-kind
/// sequence.
fn structural_term_second(
    fam: &RecurrenceFamily,
    seconds: &PolySequence,
    e: &PerturbEntry,
) -> Result<Poly> {
    let m = first_affected(fam, e.k)?;
    let mut s = seconds[m - 1].scale_real(-e.mu);
    if m >= 2 && e.nu != 1.0 {
        let quad = fam.constant_quad()?;
        let lam = fam.lambda_at(e.k)?;
        s = &s - &(&quad * &seconds[m - 2]).scale_real((e.nu - 1.0) * lam);
    }
    Ok(s)
}

/// Applies one entry's structural correction to both sequences in place.
/// `sign` is −1 for first kind and +1 for second kind.
fn apply_structural(
    seq: &PolySequence,
    term: &Poly,
    assoc: &PolySequence,
    m: usize,
    sign: f64,
    kind: SeqKind,
) -> PolySequence {
    let items: Vec<Poly> = (0..=seq.max_index())
        .map(|i| {
            if i < m {
                seq[i].clone()
            } else {
                &seq[i] + &(term * &assoc[i - m]).scale_real(sign)
            }
        })
        .collect();
    PolySequence::from_parts(items, kind)
}

/// Computes the perturbed sequences through the correction-term identities,
/// applying entries in ascending level order; entry k's associated propagator
/// consumes only coefficient indices above k, so it is unaffected by the
/// entries already applied.
pub fn perturb_via_structure(
    fam: &RecurrenceFamily,
    spec: &PerturbationSpec,
    n: usize,
) -> Result<(PolySequence, PolySequence)> {
    fam.constant_quad()?;
    let mut cur_fam = fam.clone();
    let mut firsts = generate_first(fam, n)?;
    let mut seconds = generate_second(fam, n)?;
    for e in spec.entries() {
        let m = first_affected(fam, e.k)?;
        if m <= n {
            let assoc = generate_associated(&cur_fam, m, n - m)?;
            let s = structural_term(&cur_fam, &firsts, e)?;
            let s_hat = structural_term_second(&cur_fam, &seconds, e)?;
            firsts = apply_structural(&firsts, &s, &assoc, m, -1.0, SeqKind::FirstKind);
            seconds = apply_structural(&seconds, &s_hat, &assoc, m, 1.0, SeqKind::SecondKind);
        }
        cur_fam = cur_fam.perturbed(&PerturbationSpec::single(e.k, e.mu, e.nu)?);
    }
    Ok((firsts, seconds))
}

/// The correction polynomial S of a single entry, built from the unperturbed
/// first-kind sequence: S = μ·P_{M−1} + (ν−1)·λ_k·(x−a)(x−b)·P_{M−2}. Its
/// multiples of the associated sequence are exactly what the perturbation
/// subtracts from each P_n, so its zeros control where perturbed and
/// unperturbed polynomials can agree.
pub fn structural_polynomial(fam: &RecurrenceFamily, e: &PerturbEntry) -> Result<Poly> {
    let m = first_affected(fam, e.k)?;
    let firsts = generate_first(fam, m.max(1) - 1)?;
    structural_term(fam, &firsts, e)
}

// ---------------------------------------------------------------------------
// Route 3: transfer matrix
// ---------------------------------------------------------------------------

/// A 2×2 matrix of polynomials, row-major [[a, b], [c, d]].
#[derive(Clone, Debug)]
pub struct TransferMatrix2 {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub d: Poly,
}

impl TransferMatrix2 {
    pub fn identity() -> Self {
        TransferMatrix2 {
            a: Poly::one(),
            b: Poly::zero(),
            c: Poly::zero(),
            d: Poly::one(),
        }
    }

    pub fn mul(&self, rhs: &TransferMatrix2) -> TransferMatrix2 {
        TransferMatrix2 {
            a: &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            c: &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            d: &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        }
    }

    /// Applies the matrix to a column vector of polynomials.
    pub fn apply(&self, top: &Poly, bottom: &Poly) -> (Poly, Poly) {
        (
            &(&self.a * top) + &(&self.b * bottom),
            &(&self.c * top) + &(&self.d * bottom),
        )
    }

    pub fn det(&self) -> Poly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Pointwise evaluation, row-major.
    pub fn eval(&self, x: Complex64) -> [[Complex64; 2]; 2] {
        [
            [self.a.eval(x), self.b.eval(x)],
            [self.c.eval(x), self.d.eval(x)],
        ]
    }
}

/// Transfer data of a single entry: the matrix N, the scalar 𝔎 and the first
/// affected degree M, satisfying 𝔎·(P̃_m, −Q̃_m)ᵀ = N·(P_m, −Q_m)ᵀ for m ≥ M−1.
#[derive(Clone, Debug)]
pub struct TransferData {
    pub matrix: TransferMatrix2,
    pub kappa: Poly,
    pub first_affected: usize,
}

/// Builds the transfer data of one entry from the unperturbed family.
pub fn transfer_data(fam: &RecurrenceFamily, e: &PerturbEntry) -> Result<TransferData> {
    let m = first_affected(fam, e.k)?;
    let quad = fam.constant_quad()?;
    let firsts = generate_first(fam, m.max(1) - 1)?;
    let seconds = generate_second(fam, m.max(1) - 1)?;
    let s = structural_term(fam, &firsts, e)?;
    let s_hat = structural_term_second(fam, &seconds, e)?;
    // 𝔎 = (∏_{m'=2}^{M} λ_{j(m')}) · quad^{M−1}; empty product for M = 1.
    let mut kappa = Poly::one();
    for step in 2..=m {
        kappa = kappa.scale_real(fam.lambda_at(fam.step_index(step))?);
    }
    kappa = &kappa * &quad.powi(m - 1);
    let p_prev = &firsts[m - 1];
    let q_prev = &seconds[m - 1];
    let matrix = TransferMatrix2 {
        a: &kappa + &(&s * q_prev),
        b: &s * p_prev,
        c: q_prev * &s_hat,
        d: &(&s_hat * p_prev) + &kappa,
    };
    Ok(TransferData {
        matrix,
        kappa,
        first_affected: m,
    })
}

/// Computes the perturbed sequences through transfer matrices alone: for each
/// subscript m, the matrices of all entries with M ≤ m + 1 (a prefix of the
/// level-sorted list, left-multiplied in ascending level order) act on
/// (P_m, −Q_m)ᵀ, and the result is divided exactly by the product of their 𝔎.
/// A division with a real remainder is reported as an identity violation.
pub fn perturb_via_transfer(
    fam: &RecurrenceFamily,
    spec: &PerturbationSpec,
    n: usize,
) -> Result<(PolySequence, PolySequence)> {
    fam.constant_quad()?;
    let firsts = generate_first(fam, n)?;
    let seconds = generate_second(fam, n)?;
    let data: Vec<TransferData> = spec
        .entries()
        .iter()
        .map(|e| transfer_data(fam, e))
        .collect::<Result<_>>()?;
    // Prefix products: matrices ascending level left-to-right, 𝔎 multiplied.
    let mut mat_prefix = vec![TransferMatrix2::identity()];
    let mut kappa_prefix = vec![Poly::one()];
    for d in &data {
        let next_mat = mat_prefix.last().unwrap().mul(&d.matrix);
        mat_prefix.push(next_mat);
        let next_kappa = &(kappa_prefix.last().unwrap().clone()) * &d.kappa;
        kappa_prefix.push(next_kappa);
    }
    let mut p_items = Vec::with_capacity(n + 1);
    let mut q_items = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let count = data
            .iter()
            .take_while(|d| d.first_affected <= m + 1)
            .count();
        if count == 0 {
            p_items.push(firsts[m].clone());
            q_items.push(seconds[m].clone());
            continue;
        }
        let (top, bottom) = mat_prefix[count].apply(&firsts[m], &(-&seconds[m]));
        let denom = &kappa_prefix[count];
        let p = top
            .div_exact(denom, DIVISION_REMAINDER)
            .map_err(|r| Error::IdentityViolation {
                what: format!("transfer-route division for degree {m}"),
                residual: r,
            })?;
        let q = (-&bottom)
            .div_exact(denom, DIVISION_REMAINDER)
            .map_err(|r| Error::IdentityViolation {
                what: format!("transfer-route division for degree {m}, second kind"),
                residual: r,
            })?;
        p_items.push(p);
        q_items.push(q);
    }
    Ok((
        PolySequence::from_parts(p_items, SeqKind::FirstKind),
        PolySequence::from_parts(q_items, SeqKind::SecondKind),
    ))
}

/// Checks the identity linking two perturbations of the same family without
/// the unperturbed pair: (𝔎_A/𝔎_B)·ṽ_A = N_A·N_B⁻¹·ṽ_B at degree n, where
/// ṽ = (P̃_n, −Q̃_n)ᵀ. Evaluated pointwise at the Chebyshev check nodes with
/// per-node matrix inversion; nodes where N_B is near-singular are skipped,
/// and a grid with no usable nodes is an error. Returns the largest relative
/// residual. Requires n ≥ M − 1 for every entry of both perturbations.
pub fn relate_two_perturbations(
    fam: &RecurrenceFamily,
    spec_a: &PerturbationSpec,
    spec_b: &PerturbationSpec,
    n: usize,
) -> Result<f64> {
    let compose = |spec: &PerturbationSpec| -> Result<(TransferMatrix2, Poly)> {
        let mut mat = TransferMatrix2::identity();
        let mut kappa = Poly::one();
        for e in spec.entries() {
            let d = transfer_data(fam, e)?;
            if d.first_affected > n + 1 {
                return Err(Error::LevelOutOfRange {
                    k: e.k,
                    reason: format!(
                        "transfer identity needs degree ≥ {}, got {n}",
                        d.first_affected - 1
                    ),
                });
            }
            mat = mat.mul(&d.matrix);
            kappa = &kappa * &d.kappa;
        }
        Ok((mat, kappa))
    };
    let (mat_a, kappa_a) = compose(spec_a)?;
    let (mat_b, kappa_b) = compose(spec_b)?;
    let (pa, qa) = perturb_direct(fam, spec_a, n)?;
    let (pb, qb) = perturb_direct(fam, spec_b, n)?;
    let va = (pa[n].clone(), -&qa[n]);
    let vb = (pb[n].clone(), -&qb[n]);
    let mut worst: f64 = 0.0;
    let mut used = 0usize;
    for x in check_nodes() {
        let z = Complex64::new(x, 0.0);
        let nb = mat_b.eval(z);
        let det = nb[0][0] * nb[1][1] - nb[0][1] * nb[1][0];
        let scale = nb
            .iter()
            .flatten()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
            .powi(2);
        let kb = kappa_b.eval(z);
        if det.norm() <= 1e-12 * scale.max(1.0) || kb.norm() <= 1e-12 {
            continue;
        }
        used += 1;
        let inv = [
            [nb[1][1] / det, -nb[0][1] / det],
            [-nb[1][0] / det, nb[0][0] / det],
        ];
        let na = mat_a.eval(z);
        let vbx = (vb.0.eval(z), vb.1.eval(z));
        let mid = (
            inv[0][0] * vbx.0 + inv[0][1] * vbx.1,
            inv[1][0] * vbx.0 + inv[1][1] * vbx.1,
        );
        let rhs = (
            na[0][0] * mid.0 + na[0][1] * mid.1,
            na[1][0] * mid.0 + na[1][1] * mid.1,
        );
        let ratio = kappa_a.eval(z) / kb;
        let lhs = (ratio * va.0.eval(z), ratio * va.1.eval(z));
        let denom = 1.0 + lhs.0.norm().max(lhs.1.norm());
        let res = ((lhs.0 - rhs.0).norm()).max((lhs.1 - rhs.1).norm()) / denom;
        worst = worst.max(res);
    }
    if used == 0 {
        return Err(Error::DegenerateGrid);
    }
    Ok(worst)
}

// ---------------------------------------------------------------------------
// Casoratti-determinant identities
// ---------------------------------------------------------------------------

/// The Casoratti determinant u_m·v_{m+1} − u_{m+1}·v_m.
pub fn casoratti(u_m: &Poly, u_next: &Poly, v_m: &Poly, v_next: &Poly) -> Poly {
    &(u_m * v_next) - &(u_next * v_m)
}

/// Relative residual of the closed form for D(P, shifted associated) at
/// degree n with association order r ≥ 1:
/// P_n·A_{n+1−r} − P_{n+1}·A_{n−r} = (∏_{m=r}^{n} λ_{j(m+1)})·quad^{n−r+1}·P_{r−1},
/// where A carries order r and j(·) is the family's step-index map.
pub fn casoratti_associated_residual(fam: &RecurrenceFamily, r: usize, n: usize) -> Result<f64> {
    if r == 0 || n + 1 < r {
        return Err(Error::LevelOutOfRange {
            k: r,
            reason: "association order must satisfy 1 ≤ r ≤ n + 1".into(),
        });
    }
    let quad = fam.constant_quad()?;
    let p = generate_first(fam, n + 1)?;
    let a = generate_associated(fam, r, n + 1 - r)?;
    let v_n = if n >= r {
        a[n - r].clone()
    } else {
        Poly::zero()
    };
    let lhs = casoratti(&p[n], &p[n + 1], &v_n, &a[n + 1 - r]);
    let mut scalar = 1.0;
    for m in r..=n {
        scalar *= fam.lambda_at(fam.step_index(m + 1))?;
    }
    let rhs = &quad.powi(n + 1 - r).scale_real(scalar) * &p[r - 1];
    Ok(lhs.rel_distance(&rhs))
}

/// Relative residual of the closed form for D(P, co-recursive P̃) at degree n
/// for a pure shift μ at level k (first affected degree M):
/// P_n·P̃_{n+1} − P_{n+1}·P̃_n = −μ·(∏_{m=M}^{n} λ_{j(m+1)})·quad^{n−M+1}·P_{M−1}².
pub fn casoratti_corecursive_residual(
    fam: &RecurrenceFamily,
    k: usize,
    mu: f64,
    n: usize,
) -> Result<f64> {
    let m_first = first_affected(fam, k)?;
    if n + 1 < m_first {
        return Err(Error::LevelOutOfRange {
            k,
            reason: format!("identity needs degree ≥ {}", m_first - 1),
        });
    }
    let quad = fam.constant_quad()?;
    let p = generate_first(fam, n + 1)?;
    let (pt, _) = perturb_direct(fam, &PerturbationSpec::single(k, mu, 1.0)?, n + 1)?;
    let lhs = casoratti(&p[n], &p[n + 1], &pt[n], &pt[n + 1]);
    let mut scalar = -mu;
    for m in m_first..=n {
        scalar *= fam.lambda_at(fam.step_index(m + 1))?;
    }
    let pm = &p[m_first - 1];
    let rhs = &quad.powi(n + 1 - m_first).scale_real(scalar) * &(pm * pm);
    Ok(lhs.rel_distance(&rhs))
}

/// Relative residual of the closed form for D(P, −Q) at degree n:
/// P_n·(−Q_{n+1}) − P_{n+1}·(−Q_n) = −(∏_{m=1}^{n} λ_{j(m+1)})·quad^n.
pub fn casoratti_second_kind_residual(fam: &RecurrenceFamily, n: usize) -> Result<f64> {
    let quad = fam.constant_quad()?;
    let p = generate_first(fam, n + 1)?;
    let q = generate_second(fam, n + 1)?;
    let lhs = casoratti(&p[n], &p[n + 1], &(-&q[n]), &(-&q[n + 1]));
    let mut scalar = -1.0;
    for m in 1..=n {
        scalar *= fam.lambda_at(fam.step_index(m + 1))?;
    }
    let rhs = quad.powi(n).scale_real(scalar);
    Ok(lhs.rel_distance(&rhs))
}
