//! Central numeric tolerances.
//!
//! Every comparison threshold in the crate lives here with a rationale, so a
//! tolerance is never an unexplained literal at its point of use and related
//! checks cannot drift apart.

/// Identities that hold exactly in real arithmetic and are computed by a
/// handful of additions/multiplications on O(1)-sized coefficients. Doubles
/// carry ~2.2e−16 relative error per operation; 1e−12 leaves four orders of
/// headroom for degree ≤ 30 runs.
pub const EXACT_EPS: f64 = 1e-12;

/// Pointwise residuals of replayed recurrences and reconstructed identities
/// at the Chebyshev check nodes. Looser than `EXACT_EPS` because evaluations
/// near ±5 of degree ~20 polynomials amplify coefficient noise by the node
/// magnitude raised to the degree.
pub const RESIDUAL_REL: f64 = 1e-9;

/// Relative remainder allowed when a polynomial division must be exact by
/// theory (transfer-matrix denominators, unit-circle prefactors). Division
/// normalizes by the dividend scale, so accumulated products still cancel to
/// this level at degree ≤ 30.
pub const DIVISION_REMAINDER: f64 = 1e-8;

/// A computed zero x counts as real when |Im x| ≤ REAL_CLASSIFY·(1 + |Re x|).
/// Root-finding is iterated well below this, so genuinely complex pairs
/// (which come with conjugates at finite distance) are never misclassified.
pub const REAL_CLASSIFY: f64 = 1e-8;

/// Absolute agreement required between regenerated zero tables and the
/// embedded reference values, which are printed to 6–9 decimal places.
pub const TABLE_ABS: f64 = 1e-6;

/// Aberth–Ehrlich stops when every correction satisfies
/// |Δ| ≤ ROOT_STEP·(1 + |root|); this is the fixed-point floor of the
/// iteration in double precision.
pub const ROOT_STEP: f64 = 1e-14;

/// Chain-sequence identities (parameter recursions, complementarity) are
/// single rational expressions per index; same budget as `EXACT_EPS`.
pub const CHAIN_IDENTITY: f64 = 1e-12;

/// Root certification: the monic product over computed roots must rebuild the
/// input coefficients to this relative level. Expansion of a degree-20
/// product amplifies per-root error by the coefficient scale, hence looser
/// than the per-root step floor.
pub const ROOT_CERT: f64 = 1e-8;

/// Matching tolerance for pairing zeros across two polynomials when counting
/// common zeros: slightly looser than `REAL_CLASSIFY` since both sides carry
/// independent root-finding error.
pub const COMMON_ZERO: f64 = 1e-7;
