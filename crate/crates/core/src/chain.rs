//! Positive chain sequences and their parameter machinery.
//!
//! A positive chain sequence is {d_n}_{n≥1} admitting parameters {g_n}_{n≥1}
//! with g_1 ∈ [0, 1), g_n ∈ (0, 1) and d_n = (1 − g_n)·g_{n+1}. The
//! parameter sequence starting at g_1 = 0 is the *minimal* one; it exists iff
//! {d_n} is a chain sequence at all, which is how validity is tested here.
//! The *maximal* parameters are approached by running the recursion backward
//! from a far horizon seeded just below 1 (the backward map is monotone, so
//! the seed dominates the true maximal parameters and converges onto them).
//!
//! The chain sequence attached to a recurrence family is d_n = λ consumed by
//! the step producing P_{n+1}; dilating one family coefficient is exactly a
//! co-dilation of this chain sequence, and the complementary construction
//! (g_1 = 0, ĝ_n = 1 − g_n) links the two unit-circle coefficient systems.
//!
//! Values are produced lazily through closures because the maximal-parameter
//! horizon runs to tens of millions of indices.

use crate::error::{Error, Result};
use crate::family::{RecurrenceFamily, Seq};
use std::sync::Arc;

/// A lazily evaluated chain sequence of values d_1, d_2, … (index 1-based).
#[derive(Clone, Debug)]
pub struct ChainSeq {
    vals: Seq,
}

impl ChainSeq {
    /// From a closed-form rule n ↦ d_n (n is 1-based).
    pub fn from_fn(f: impl Fn(usize) -> f64 + Send + Sync + 'static) -> Self {
        ChainSeq {
            vals: Seq::Rule(Arc::new(move |i| f(i + 1))),
        }
    }

    /// From explicit values d_1 … d_len.
    pub fn from_list(values: Vec<f64>) -> Self {
        ChainSeq {
            vals: Seq::List(values),
        }
    }

    pub fn constant(v: f64) -> Self {
        ChainSeq {
            vals: Seq::Const(v),
        }
    }

    /// The chain sequence of a recurrence family: d_n is the λ consumed by
    /// the step that produces the degree-(n+1) polynomial.
    pub fn from_family(fam: &RecurrenceFamily) -> Self {
        let lambda = fam.lambda.clone();
        let off = fam.convention.offset();
        ChainSeq {
            vals: Seq::Rule(Arc::new(move |i| {
                lambda.get(i + 1 + off).unwrap_or(f64::NAN)
            })),
        }
    }

    /// Builds the chain d_n = (1 − g_n)·g_{n+1} from a 1-based parameter rule.
    pub fn from_params(g: impl Fn(usize) -> f64 + Send + Sync + 'static) -> Self {
        let g = Arc::new(g);
        ChainSeq {
            vals: Seq::Rule(Arc::new(move |i| {
                let n = i + 1;
                (1.0 - g(n)) * g(n + 1)
            })),
        }
    }

    /// d_n for n ≥ 1.
    pub fn value(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidFamily("chain sequences are 1-based".into()));
        }
        self.vals
            .get(n - 1)
            .ok_or_else(|| Error::InvalidFamily(format!("chain value exhausted at index {n}")))
    }

    /// Minimal parameters l_1 … l_upto (l_1 = 0). Fails with the offending
    /// index when the values do not form a positive chain sequence.
    pub fn minimal_params(&self, upto: usize) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(upto);
        let mut l = 0.0;
        if upto >= 1 {
            out.push(l);
        }
        for n in 1..upto {
            let d = self.value(n)?;
            if !(d > 0.0) {
                return Err(Error::NotAChainSequence { index: n, value: d });
            }
            l = d / (1.0 - l);
            if !(l > 0.0 && l < 1.0) {
                return Err(Error::NotAChainSequence {
                    index: n + 1,
                    value: l,
                });
            }
            out.push(l);
        }
        Ok(out)
    }

    /// Maximal parameters m_1 … m_upto, approximated by the backward
    /// recursion m_n = 1 − d_n/m_{n+1} seeded with 1 − 1e−12 at the horizon.
    /// The approximation error at index 1 decays like 1/horizon for chains
    /// whose maximal parameters approach 1/2, so a 1e−8 answer needs a
    /// horizon around 6·10⁷.
    pub fn maximal_params_approx(&self, upto: usize, horizon: usize) -> Result<Vec<f64>> {
        if horizon <= upto {
            return Err(Error::Config(format!(
                "maximal-parameter horizon {horizon} must exceed the requested count {upto}"
            )));
        }
        let mut m = 1.0 - 1e-12;
        let mut out = vec![0.0; upto];
        for n in (1..horizon).rev() {
            let d = self.value(n)?;
            if !(d > 0.0) {
                return Err(Error::NotAChainSequence { index: n, value: d });
            }
            m = 1.0 - d / m;
            if !(m > 0.0) {
                return Err(Error::NotAChainSequence { index: n, value: m });
            }
            if n <= upto {
                out[n - 1] = m;
            }
        }
        Ok(out)
    }

    /// The complementary chain sequence: with l the minimal parameters of
    /// self, the parameters k_1 = 0, k_n = 1 − l_n (n ≥ 2) generate
    /// d̂_n = (1 − k_n)·k_{n+1}. Applying the construction twice returns the
    /// original values exactly. Materialized for indices 1 … upto.
    pub fn complementary(&self, upto: usize) -> Result<ChainSeq> {
        let l = self.minimal_params(upto + 1)?;
        let k: Vec<f64> = l
            .iter()
            .enumerate()
            .map(|(i, &v)| if i == 0 { 0.0 } else { 1.0 - v })
            .collect();
        let values: Vec<f64> = (0..upto).map(|i| (1.0 - k[i]) * k[i + 1]).collect();
        Ok(ChainSeq::from_list(values))
    }

    /// Scales d_k by ν and revalidates the first `check_upto` minimal
    /// parameters; a dilation that pushes a parameter out of (0, 1) is
    /// rejected with the offending index.
    pub fn codilate(&self, k: usize, nu: f64, check_upto: usize) -> Result<ChainSeq> {
        if k == 0 {
            return Err(Error::InvalidDilation {
                index: 0,
                value: nu,
            });
        }
        if !(nu > 0.0) || !nu.is_finite() {
            return Err(Error::InvalidDilation {
                index: k,
                value: nu,
            });
        }
        let base = self.vals.clone();
        let scaled = ChainSeq {
            vals: Seq::Rule(Arc::new(move |i| {
                let v = base.get(i).unwrap_or(f64::NAN);
                if i == k - 1 {
                    v * nu
                } else {
                    v
                }
            })),
        };
        match scaled.minimal_params(check_upto) {
            Ok(_) => Ok(scaled),
            Err(Error::NotAChainSequence { index, value }) => {
                Err(Error::InvalidDilation { index, value })
            }
            Err(e) => Err(e),
        }
    }
}

// ---------------------------------------------------------------------------
// Wall-type divergence heuristic
// ---------------------------------------------------------------------------

/// Outcome of the series test Σ_n ∏_{j=2}^n l_j/(1−l_j) on the minimal
/// parameters. Divergence means the chain sequence admits *only* the minimal
/// parameter sequence; convergence means a whole interval of parameter
/// sequences exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    DivergesLikely,
    ConvergesLikely,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct WallReport {
    pub verdict: Verdict,
    /// Partial sum at the last evaluated index.
    pub sum: f64,
    /// (N, S_N) at each decade checkpoint.
    pub checkpoints: Vec<(usize, f64)>,
}

/// Finite-horizon classification of the Wall series. Decade checkpoints of
/// the partial sums feed two rules: a log–log slope above 0.1 over the last
/// decade reads as polynomial growth (divergence), and a relative last-decade
/// increment below 10⁻³ (or increments at the rounding floor) reads as
/// convergence. Sums overflowing 1e280 are classified divergent immediately.
pub fn wall_heuristic(chain: &ChainSeq, n_max: usize) -> Result<WallReport> {
    if n_max < 100 {
        return Err(Error::Config(
            "wall heuristic needs at least two decades of terms".into(),
        ));
    }
    let mut l = 0.0_f64; // minimal parameter l_n, starting at l_1 = 0
    let mut product = 1.0_f64; // ∏_{j=2}^n l_j/(1−l_j)
    let mut sum = 0.0_f64;
    let mut checkpoints = Vec::new();
    let mut next_checkpoint = 10usize;
    let mut last_term = f64::INFINITY;
    for n in 2..=n_max {
        let d = chain.value(n - 1)?;
        if !(d > 0.0) {
            return Err(Error::NotAChainSequence {
                index: n - 1,
                value: d,
            });
        }
        l = d / (1.0 - l);
        if !(l > 0.0 && l < 1.0) {
            return Err(Error::NotAChainSequence { index: n, value: l });
        }
        product *= l / (1.0 - l);
        sum += product;
        last_term = product;
        if n == next_checkpoint {
            checkpoints.push((n, sum));
            next_checkpoint *= 10;
        }
        if sum > 1e280 {
            return Ok(WallReport {
                verdict: Verdict::DivergesLikely,
                sum,
                checkpoints,
            });
        }
    }
    if checkpoints.last().map(|&(n, _)| n) != Some(n_max) {
        checkpoints.push((n_max, sum));
    }
    let (prev_n, prev_s) = checkpoints[checkpoints.len() - 2];
    let (last_n, last_s) = checkpoints[checkpoints.len() - 1];
    let slope = (last_s.ln() - prev_s.ln()) / (last_n as f64 / prev_n as f64).ln();
    let rel_increment = (last_s - prev_s) / last_s.abs().max(f64::MIN_POSITIVE);
    let verdict = if slope > 0.1 {
        Verdict::DivergesLikely
    } else if last_term < 1e-12 * sum.max(1.0) || rel_increment < 1e-3 {
        Verdict::ConvergesLikely
    } else {
        Verdict::Inconclusive
    };
    Ok(WallReport {
        verdict,
        sum,
        checkpoints,
    })
}
