//! Recurrence families: the coefficient sequences (c_n, λ_n, a_n, b_n) of an
//! R_II-type three-term recurrence
//!
//! ```text
//! P_{m}(x) = (x − c_j)·P_{m−1}(x) − λ_j·(x − a_j)(x − b_j)·P_{m−2}(x)
//! ```
//!
//! together with an indexing convention. Two conventions are first-class:
//!
//! * `ZeroBased` — the step producing P_m consumes coefficient index j = m−1
//!   (so P_1 = x − c_0, and λ_0 exists but never contributes since P_{−1} = 0);
//! * `Shifted`  — the step producing P_m consumes coefficient index j = m
//!   (so P_1 = x − c_1 and the λ sequence effectively starts at λ_2).
//!
//! Families whose quadratic factor is x² + 1 (a ≡ −i, b ≡ +i) with real c are
//! flagged `special`; the unit-circle bridge and the zero theorems apply to
//! those.

use crate::error::{Error, Result};
use crate::poly::Poly;
use num_complex::Complex64;
use serde::Deserialize;
use std::fmt;
use std::sync::Arc;

/// Generation degree cap. Reference tables need ≤ 10; doubles remain reliable
/// far beyond this, but the cap keeps accidental huge requests from silently
/// producing noise.
pub const MAX_DEGREE: usize = 64;

/// Indexing convention of a family; see the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    ZeroBased,
    Shifted,
}

impl Convention {
    /// Offset added when mapping "step producing P_m" to a coefficient index:
    /// j = m − 1 + offset.
    pub fn offset(self) -> usize {
        match self {
            Convention::ZeroBased => 0,
            Convention::Shifted => 1,
        }
    }
}

/// A real coefficient sequence: constant, finite list, or closed-form rule.
#[derive(Clone)]
pub enum Seq {
    Const(f64),
    List(Vec<f64>),
    Rule(Arc<dyn Fn(usize) -> f64 + Send + Sync>),
}

impl Seq {
    pub fn get(&self, j: usize) -> Option<f64> {
        match self {
            Seq::Const(v) => Some(*v),
            Seq::List(v) => v.get(j).copied(),
            Seq::Rule(f) => Some(f(j)),
        }
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Seq::Const(v) => write!(f, "Const({v:?})"),
            Seq::List(v) => write!(f, "List(len {})", v.len()),
            Seq::Rule(_) => write!(f, "Rule(..)"),
        }
    }
}

/// A complex coefficient sequence (used for the quadratic-factor roots a, b).
#[derive(Clone)]
pub enum CSeq {
    Const(Complex64),
    List(Vec<Complex64>),
    Rule(Arc<dyn Fn(usize) -> Complex64 + Send + Sync>),
}

impl CSeq {
    pub fn get(&self, j: usize) -> Option<Complex64> {
        match self {
            CSeq::Const(v) => Some(*v),
            CSeq::List(v) => v.get(j).copied(),
            CSeq::Rule(f) => Some(f(j)),
        }
    }
}

impl fmt::Debug for CSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CSeq::Const(v) => write!(f, "Const({v:?})"),
            CSeq::List(v) => write!(f, "List(len {})", v.len()),
            CSeq::Rule(_) => write!(f, "Rule(..)"),
        }
    }
}

/// A fully specified recurrence family.
#[derive(Clone, Debug)]
pub struct RecurrenceFamily {
    pub name: String,
    pub convention: Convention,
    pub c: Seq,
    pub lambda: Seq,
    pub a: CSeq,
    pub b: CSeq,
    /// True when a ≡ −i, b ≡ +i (quadratic factor x² + 1) — computed, not trusted.
    special: bool,
}

impl RecurrenceFamily {
    pub fn new(
        name: impl Into<String>,
        convention: Convention,
        c: Seq,
        lambda: Seq,
        a: CSeq,
        b: CSeq,
    ) -> Self {
        let special = matches!(
            (&a, &b),
            (CSeq::Const(av), CSeq::Const(bv))
                if (*av - Complex64::new(0.0, -1.0)).norm() == 0.0
                && (*bv - Complex64::new(0.0, 1.0)).norm() == 0.0
        );
        RecurrenceFamily {
            name: name.into(),
            convention,
            c,
            lambda,
            a,
            b,
            special,
        }
    }

    /// Convenience constructor for families with the x² + 1 factor.
    pub fn special(name: impl Into<String>, convention: Convention, c: Seq, lambda: Seq) -> Self {
        RecurrenceFamily::new(
            name,
            convention,
            c,
            lambda,
            CSeq::Const(Complex64::new(0.0, -1.0)),
            CSeq::Const(Complex64::new(0.0, 1.0)),
        )
    }

    pub fn is_special(&self) -> bool {
        self.special
    }

    pub fn c_at(&self, j: usize) -> Result<f64> {
        self.c
            .get(j)
            .ok_or_else(|| Error::InvalidFamily(format!("c exhausted at index {j}")))
    }

    /// λ at index j, validated positive. Callers skip validation for indices
    /// whose λ term multiplies the zero polynomial (the inert head indices).
    pub fn lambda_at(&self, j: usize) -> Result<f64> {
        let v = self
            .lambda
            .get(j)
            .ok_or_else(|| Error::InvalidFamily(format!("lambda exhausted at index {j}")))?;
        if v > 0.0 {
            Ok(v)
        } else {
            Err(Error::NonPositiveLambda { index: j, value: v })
        }
    }

    /// λ at index j without the positivity check (inert indices only).
    pub fn lambda_raw(&self, j: usize) -> Result<f64> {
        self.lambda
            .get(j)
            .ok_or_else(|| Error::InvalidFamily(format!("lambda exhausted at index {j}")))
    }

    pub fn a_at(&self, j: usize) -> Result<Complex64> {
        self.a
            .get(j)
            .ok_or_else(|| Error::InvalidFamily(format!("a exhausted at index {j}")))
    }

    pub fn b_at(&self, j: usize) -> Result<Complex64> {
        self.b
            .get(j)
            .ok_or_else(|| Error::InvalidFamily(format!("b exhausted at index {j}")))
    }

    /// The quadratic factor (x − a_j)(x − b_j) at index j.
    pub fn quad_at(&self, j: usize) -> Result<Poly> {
        if self.special {
            return Ok(Poly::x2_plus_1());
        }
        let a = self.a_at(j)?;
        let b = self.b_at(j)?;
        Ok(&Poly::x_minus(a) * &Poly::x_minus(b))
    }

    /// The quadratic factor when it is the same at every index (required by
    /// the structural and transfer-matrix perturbation routes).
    pub fn constant_quad(&self) -> Result<Poly> {
        if self.special {
            return Ok(Poly::x2_plus_1());
        }
        match (&self.a, &self.b) {
            (CSeq::Const(a), CSeq::Const(b)) => Ok(&Poly::x_minus(*a) * &Poly::x_minus(*b)),
            _ => Err(Error::InvalidFamily(
                "this operation needs a level-independent quadratic factor (constant a, b)".into(),
            )),
        }
    }

    /// Coefficient index consumed by the step that produces P_m.
    pub fn step_index(&self, m: usize) -> usize {
        m - 1 + self.convention.offset()
    }

    /// c in 1-based "theory" labels: `c_shifted(n)` is the c consumed by the
    /// step producing P_n. The unit-circle formulas are stated in these labels.
    pub fn c_shifted(&self, n: usize) -> Result<f64> {
        self.c_at(self.step_index(n))
    }

    /// λ in 1-based "theory" labels: `lambda_shifted(n)` multiplies P_{n−2}
    /// in the step producing P_n; the chain sequence of the family is
    /// n ↦ lambda_shifted(n+1) for n ≥ 1.
    pub fn lambda_shifted(&self, n: usize) -> Result<f64> {
        self.lambda_at(self.step_index(n))
    }

    /// Returns the family with a perturbation substituted into its coefficient
    /// sequences: c_k ← c_k + μ_k and λ_k ← ν_k·λ_k at each entry's level k
    /// (levels are coefficient indices in this family's own convention).
    pub fn perturbed(&self, spec: &crate::perturb::PerturbationSpec) -> RecurrenceFamily {
        let c_base = self.c.clone();
        let l_base = self.lambda.clone();
        let entries: Vec<(usize, f64, f64)> =
            spec.entries().iter().map(|e| (e.k, e.mu, e.nu)).collect();
        let entries_c = entries.clone();
        let c = Seq::Rule(Arc::new(move |j| {
            let base = c_base.get(j).unwrap_or(f64::NAN);
            match entries_c.iter().find(|(k, _, _)| *k == j) {
                Some((_, mu, _)) => base + mu,
                None => base,
            }
        }));
        let lambda = Seq::Rule(Arc::new(move |j| {
            let base = l_base.get(j).unwrap_or(f64::NAN);
            match entries.iter().find(|(k, _, _)| *k == j) {
                Some((_, _, nu)) => base * nu,
                None => base,
            }
        }));
        RecurrenceFamily::new(
            format!("{}~", self.name),
            self.convention,
            c,
            lambda,
            self.a.clone(),
            self.b.clone(),
        )
    }
}

// ---------------------------------------------------------------------------
// Builtin families
// ---------------------------------------------------------------------------

impl RecurrenceFamily {
    /// Constant family c ≡ 0, λ ≡ 1/4 with factor x² + 1 (zero-based).
    /// Closed form: P_n(x) = i((x−i)/2)^{n+1} − i((x+i)/2)^{n+1}, zeros cot(jπ/(n+1)).
    pub fn example1() -> Self {
        RecurrenceFamily::special(
            "example1",
            Convention::ZeroBased,
            Seq::Const(0.0),
            Seq::Const(0.25),
        )
    }

    /// Shifted family c ≡ 0 with λ_2 = 1/2 and λ_n = 1/4 for n ≥ 3.
    /// Closed form: P_n(x) = ((x−i)/2)^n + ((x+i)/2)^n. Dilating λ_2 by 1/2
    /// turns it into the constant family, which is what makes it the standard
    /// co-dilation demonstration.
    pub fn lambda2_half() -> Self {
        RecurrenceFamily::special(
            "codilation_demo",
            Convention::Shifted,
            Seq::Const(0.0),
            Seq::Rule(Arc::new(|j| if j == 2 { 0.5 } else { 0.25 })),
        )
    }

    /// CRR family (complementary Routh–Romanovski), zero-based:
    /// c_n = θ/(ζ+n), λ_n = n(2ζ+n+1) / (4(ζ+n)(ζ+n+1)).
    /// Requires ζ > 0.
    pub fn crr(zeta: f64, theta: f64) -> Result<Self> {
        if !(zeta > 0.0) {
            return Err(Error::InvalidFamily(format!(
                "crr needs zeta > 0, got {zeta}"
            )));
        }
        Ok(RecurrenceFamily::special(
            format!("crr({zeta},{theta})"),
            Convention::ZeroBased,
            Seq::Rule(Arc::new(move |j| theta / (zeta + j as f64))),
            Seq::Rule(Arc::new(move |j| {
                let n = j as f64;
                n * (2.0 * zeta + n + 1.0) / (4.0 * (zeta + n) * (zeta + n + 1.0))
            })),
        ))
    }

    /// CRR variant with the head coefficient repeated: c_0 = θ/ζ and
    /// c_n = θ/(ζ+n−1) for n ≥ 1, paired with λ_n = n(2ζ+n−1)/(4(ζ+n−1)(ζ+n)).
    /// Same one-parameter family as `crr` up to a shift of ζ, except that the
    /// first two steps consume the same c value; this exact pairing is what
    /// the embedded reference zero tables for this family were produced with,
    /// so the table and figure commands use this constructor.
    pub fn crr_offset(zeta: f64, theta: f64) -> Result<Self> {
        if !(zeta > 0.0) {
            return Err(Error::InvalidFamily(format!(
                "crr_offset needs zeta > 0, got {zeta}"
            )));
        }
        Ok(RecurrenceFamily::special(
            format!("crr_offset({zeta},{theta})"),
            Convention::ZeroBased,
            Seq::Rule(Arc::new(move |j| {
                let shift = if j == 0 { 0.0 } else { j as f64 - 1.0 };
                theta / (zeta + shift)
            })),
            Seq::Rule(Arc::new(move |j| {
                let n = j as f64;
                n * (2.0 * zeta + n - 1.0) / (4.0 * (zeta + n - 1.0) * (zeta + n))
            })),
        ))
    }

    /// Chebyshev-like R_II family: c ≡ √(ab), λ ≡ 1/4, quadratic factor
    /// (x − a)(x − b) with real a, b (not a `special` family unless a = −b = −i,
    /// which this constructor does not produce). Requires ab ≥ 0.
    pub fn chebyshev_r2(a: f64, b: f64) -> Result<Self> {
        if a * b < 0.0 {
            return Err(Error::InvalidFamily(format!(
                "chebyshev_r2 needs a·b ≥ 0 for a real c = sqrt(ab); got a={a}, b={b}"
            )));
        }
        Ok(RecurrenceFamily::new(
            format!("chebyshev_r2({a},{b})"),
            Convention::ZeroBased,
            Seq::Const((a * b).sqrt()),
            Seq::Const(0.25),
            CSeq::Const(Complex64::new(a, 0.0)),
            CSeq::Const(Complex64::new(b, 0.0)),
        ))
    }

    /// Resolves a builtin family by name. `lambda2half` and `codilation_demo`
    /// are aliases. `params` supplies `zeta`/`theta` (crr) or `a`/`b`
    /// (chebyshev_r2); missing parameters fall back to ζ=10, θ=12 and a=b=1.
    pub fn builtin(name: &str, params: &BuiltinParams) -> Result<Self> {
        match name {
            "example1" => Ok(RecurrenceFamily::example1()),
            "lambda2half" | "codilation_demo" => Ok(RecurrenceFamily::lambda2_half()),
            "crr" => {
                RecurrenceFamily::crr(params.zeta.unwrap_or(10.0), params.theta.unwrap_or(12.0))
            }
            "crr_offset" => RecurrenceFamily::crr_offset(
                params.zeta.unwrap_or(10.0),
                params.theta.unwrap_or(12.0),
            ),
            "chebyshev_r2" => {
                RecurrenceFamily::chebyshev_r2(params.a.unwrap_or(1.0), params.b.unwrap_or(1.0))
            }
            other => Err(Error::Config(format!("unknown builtin family '{other}'"))),
        }
    }
}

/// Optional parameters for builtin families.
#[derive(Clone, Copy, Debug, Default, Deserialize)]
pub struct BuiltinParams {
    pub zeta: Option<f64>,
    pub theta: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
}

// ---------------------------------------------------------------------------
// JSON configuration
// ---------------------------------------------------------------------------

/// One coefficient slot in a family config: a constant, an explicit list, or
/// a reference to the corresponding slot of a builtin family.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SlotSpec {
    Const {
        r#const: f64,
    },
    ConstPair {
        r#const: [f64; 2],
    },
    List {
        list: Vec<f64>,
    },
    ListPairs {
        list: Vec<[f64; 2]>,
    },
    Builtin {
        builtin: String,
        #[serde(default)]
        params: BuiltinParams,
    },
}

#[derive(Debug, Deserialize)]
struct FamilyConfig {
    #[serde(default)]
    name: Option<String>,
    /// 0 = zero-based, 1 = shifted.
    #[serde(default)]
    convention: Option<u8>,
    #[serde(default)]
    builtin: Option<String>,
    #[serde(default)]
    params: Option<BuiltinParams>,
    #[serde(default)]
    c: Option<SlotSpec>,
    #[serde(default)]
    lambda: Option<SlotSpec>,
    #[serde(default)]
    a: Option<SlotSpec>,
    #[serde(default)]
    b: Option<SlotSpec>,
}

enum Slot {
    C,
    Lambda,
    A,
    B,
}

fn real_slot(spec: &SlotSpec, slot: Slot) -> Result<Seq> {
    match spec {
        SlotSpec::Const { r#const } => Ok(Seq::Const(*r#const)),
        SlotSpec::List { list } => Ok(Seq::List(list.clone())),
        SlotSpec::Builtin { builtin, params } => {
            let fam = RecurrenceFamily::builtin(builtin, params)?;
            Ok(match slot {
                Slot::C => fam.c,
                Slot::Lambda => fam.lambda,
                _ => return Err(Error::Config("a/b slots are complex".into())),
            })
        }
        _ => Err(Error::Config(
            "c and lambda slots take real constants or lists".into(),
        )),
    }
}

fn complex_slot(spec: &SlotSpec, slot: Slot) -> Result<CSeq> {
    match spec {
        SlotSpec::Const { r#const } => Ok(CSeq::Const(Complex64::new(*r#const, 0.0))),
        SlotSpec::ConstPair { r#const } => Ok(CSeq::Const(Complex64::new(r#const[0], r#const[1]))),
        SlotSpec::List { list } => Ok(CSeq::List(
            list.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )),
        SlotSpec::ListPairs { list } => Ok(CSeq::List(
            list.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
        )),
        SlotSpec::Builtin { builtin, params } => {
            let fam = RecurrenceFamily::builtin(builtin, params)?;
            Ok(match slot {
                Slot::A => fam.a,
                Slot::B => fam.b,
                _ => unreachable!("complex_slot called for a real slot"),
            })
        }
    }
}

impl RecurrenceFamily {
    /// Parses a family from a JSON document:
    /// `{"name", "convention": 0|1, "c": slot, "lambda": slot, "a": slot, "b": slot}`
    /// where `slot` is `{"const": v}` | `{"const": [re, im]}` | `{"list": [...]}`
    /// | `{"builtin": name, "params": {...}}`. A top-level `{"builtin": name,
    /// "params": {...}}` selects the whole builtin at once. Omitted `a`/`b`
    /// default to ∓i (the x² + 1 factor).
    pub fn from_json(doc: &str) -> Result<Self> {
        let cfg: FamilyConfig = serde_json::from_str(doc)?;
        if let Some(builtin) = &cfg.builtin {
            return RecurrenceFamily::builtin(builtin, &cfg.params.unwrap_or_default());
        }
        let convention = match cfg.convention.unwrap_or(0) {
            0 => Convention::ZeroBased,
            1 => Convention::Shifted,
            other => {
                return Err(Error::Config(format!(
                    "convention must be 0 or 1, got {other}"
                )))
            }
        };
        let c = real_slot(
            cfg.c
                .as_ref()
                .ok_or_else(|| Error::Config("missing 'c' slot".into()))?,
            Slot::C,
        )?;
        let lambda = real_slot(
            cfg.lambda
                .as_ref()
                .ok_or_else(|| Error::Config("missing 'lambda' slot".into()))?,
            Slot::Lambda,
        )?;
        let a = match &cfg.a {
            Some(spec) => complex_slot(spec, Slot::A)?,
            None => CSeq::Const(Complex64::new(0.0, -1.0)),
        };
        let b = match &cfg.b {
            Some(spec) => complex_slot(spec, Slot::B)?,
            None => CSeq::Const(Complex64::new(0.0, 1.0)),
        };
        Ok(RecurrenceFamily::new(
            cfg.name.unwrap_or_else(|| "custom".into()),
            convention,
            c,
            lambda,
            a,
            b,
        ))
    }
}
