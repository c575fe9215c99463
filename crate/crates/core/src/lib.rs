//! Numerics for R_II-type orthogonal polynomial sequences: recurrence
//! generation, coefficient perturbations with three independent computation
//! routes, positive chain-sequence machinery, the bridge to orthogonal
//! polynomials on the unit circle, and zero analysis.
//!
//! The central objects are [`family::RecurrenceFamily`] (the coefficient
//! sequences and indexing convention of a recurrence) and [`poly::Poly`]
//! (dense complex polynomials). Everything else operates on those: the
//! [`generate`] module runs the recurrence, [`perturb`] computes coefficient
//! perturbations three independent ways, [`chain`] handles the associated
//! positive chain sequences, [`unit_circle`] maps special families to
//! Verblunsky coefficients and Szegő polynomials, [`pencil`] provides the
//! determinant representation, and [`zeros`] locates and analyzes zeros.

pub mod chain;
pub mod error;
pub mod family;
pub mod generate;
pub mod pencil;
pub mod perturb;
pub mod poly;
pub mod tol;
pub mod unit_circle;
pub mod zeros;

pub use chain::{wall_heuristic, ChainSeq, Verdict, WallReport};
pub use error::{Error, Result};
pub use family::{BuiltinParams, CSeq, Convention, RecurrenceFamily, Seq, MAX_DEGREE};
pub use generate::{
    generate_associated, generate_first, generate_second, recurrence_residual, PolySequence,
    SeqKind,
};
pub use pencil::LinearPencil;
pub use perturb::{
    perturb_direct, perturb_via_structure, perturb_via_transfer, relate_two_perturbations,
    structural_polynomial, PerturbEntry, PerturbationSpec, TransferData, TransferMatrix2,
};
pub use poly::Poly;
pub use unit_circle::{
    para_orthogonal, phi_from_first_kind, szego_polys, tau_sequence, verblunsky,
    verblunsky_complementary, verblunsky_perturbed,
};
pub use zeros::{
    common_zeros, common_zeros_default, electrostatic_energy, interlace_strict, real_zeros,
    remove_common_pairs, roots,
};
