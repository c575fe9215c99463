//! Regeneration configurations for the seven reference zero tables and the
//! twelve figure datasets, and the computations turning a configuration into
//! sorted zeros. Tables carry printed digits (see [`crate::golden`]); figures
//! carry none, so their configurations pin only which polynomials each series
//! plots.

use num_complex::Complex64;
use r2spectra_core::perturb::structural_polynomial;
use r2spectra_core::zeros::classify_real;
use r2spectra_core::{
    generate_first, perturb_direct, roots, PerturbEntry, PerturbationSpec, Poly, RecurrenceFamily,
    Result,
};

/// The families the reference tables and figures draw from.
#[derive(Clone, Copy, Debug)]
pub enum Fam {
    Example1,
    CrrDemo,
    ChebyshevUnit,
}

impl Fam {
    pub fn build(self) -> RecurrenceFamily {
        match self {
            Fam::Example1 => RecurrenceFamily::example1(),
            // The one-parameter family behind tables 3–6 with ζ=10, θ=12 and
            // the coefficient pairing that reproduces their printed digits.
            Fam::CrrDemo => RecurrenceFamily::crr_offset(10.0, 12.0)
                .expect("fixed positive parameters are valid"),
            Fam::ChebyshevUnit => RecurrenceFamily::chebyshev_r2(1.0, 1.0)
                .expect("fixed positive parameters are valid"),
        }
    }
}

/// (level, μ, ν) triples; an empty list means the unperturbed sequence.
pub type Entries = &'static [(usize, f64, f64)];

pub struct ColumnConfig {
    pub label: &'static str,
    pub entries: Entries,
}

pub struct TableConfig {
    pub id: u8,
    pub fam: Fam,
    pub n: usize,
    pub columns: &'static [ColumnConfig],
}

pub const TABLE_CONFIGS: [TableConfig; 7] = [
    TableConfig {
        id: 1,
        fam: Fam::Example1,
        n: 9,
        columns: &[
            ColumnConfig {
                label: "P9",
                entries: &[],
            },
            ColumnConfig {
                label: "P9_corecursive",
                entries: &[(4, -2.0, 1.0)],
            },
        ],
    },
    TableConfig {
        id: 2,
        fam: Fam::Example1,
        n: 7,
        columns: &[
            ColumnConfig {
                label: "P7",
                entries: &[],
            },
            ColumnConfig {
                label: "P7_corecursive",
                entries: &[(3, 0.43, 1.0)],
            },
        ],
    },
    TableConfig {
        id: 3,
        fam: Fam::CrrDemo,
        n: 6,
        columns: &[
            ColumnConfig {
                label: "P6",
                entries: &[],
            },
            ColumnConfig {
                label: "P6_corecursive",
                entries: &[(3, -0.3, 1.0)],
            },
        ],
    },
    TableConfig {
        id: 4,
        fam: Fam::CrrDemo,
        n: 7,
        columns: &[
            ColumnConfig {
                label: "P7",
                entries: &[],
            },
            ColumnConfig {
                label: "P7_corecursive",
                entries: &[(3, 1.2, 1.0)],
            },
        ],
    },
    TableConfig {
        id: 5,
        fam: Fam::CrrDemo,
        n: 6,
        columns: &[
            ColumnConfig {
                label: "P6",
                entries: &[],
            },
            ColumnConfig {
                label: "P6_mu_0.3_0.4",
                entries: &[(3, 0.3, 1.0), (4, 0.4, 1.0)],
            },
            ColumnConfig {
                label: "P6_mu_0.5_0.6",
                entries: &[(3, 0.5, 1.0), (4, 0.6, 1.0)],
            },
        ],
    },
    TableConfig {
        id: 6,
        fam: Fam::CrrDemo,
        n: 6,
        columns: &[
            ColumnConfig {
                label: "P6",
                entries: &[],
            },
            ColumnConfig {
                label: "P6_mu_-0.2_-0.3",
                entries: &[(3, -0.2, 1.0), (4, -0.3, 1.0)],
            },
            ColumnConfig {
                label: "P6_mu_-0.4_-0.5",
                entries: &[(3, -0.4, 1.0), (4, -0.5, 1.0)],
            },
        ],
    },
    TableConfig {
        id: 7,
        fam: Fam::Example1,
        n: 9,
        columns: &[
            ColumnConfig {
                label: "P9",
                entries: &[],
            },
            ColumnConfig {
                label: "P9_codilated",
                entries: &[(3, 0.0, 0.6)],
            },
        ],
    },
];

pub fn table_config(id: u8) -> Option<&'static TableConfig> {
    TABLE_CONFIGS.iter().find(|t| t.id == id)
}

fn spec_from(entries: Entries) -> Result<PerturbationSpec> {
    PerturbationSpec::new(
        entries
            .iter()
            .map(|&(k, mu, nu)| PerturbEntry { k, mu, nu })
            .collect(),
    )
}

/// The degree-n polynomial of one column: unperturbed, or perturbed through
/// the direct route (route agreement is enforced elsewhere; regeneration
/// needs one authoritative source).
fn column_poly(fam: &RecurrenceFamily, n: usize, entries: Entries) -> Result<Poly> {
    if entries.is_empty() {
        Ok(generate_first(fam, n)?[n].clone())
    } else {
        let spec = spec_from(entries)?;
        Ok(perturb_direct(fam, &spec, n)?.0[n].clone())
    }
}

/// Sorted real zeros of every column of a table configuration.
pub fn compute_table(cfg: &TableConfig) -> Result<Vec<Vec<f64>>> {
    let fam = cfg.fam.build();
    cfg.columns
        .iter()
        .map(|col| {
            let p = column_poly(&fam, cfg.n, col.entries)?;
            r2spectra_core::real_zeros(&p)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Figures
// ---------------------------------------------------------------------------

/// What one figure series plots.
pub enum SeriesKind {
    /// Zeros of the unperturbed degree-n polynomial.
    Plain(usize),
    /// Zeros of the perturbed degree-n polynomial.
    Perturbed(usize, Entries),
    /// Zeros of the structural correction polynomial of one entry.
    Structural((usize, f64, f64)),
}

pub struct SeriesConfig {
    pub label: &'static str,
    pub kind: SeriesKind,
}

pub struct FigureConfig {
    pub id: u8,
    pub fam: Fam,
    pub series: &'static [SeriesConfig],
}

pub const FIGURE_CONFIGS: [FigureConfig; 12] = [
    FigureConfig {
        id: 1,
        fam: Fam::Example1,
        series: &[
            SeriesConfig {
                label: "P9",
                kind: SeriesKind::Plain(9),
            },
            SeriesConfig {
                label: "P9_corecursive",
                kind: SeriesKind::Perturbed(9, &[(4, -2.0, 1.0)]),
            },
        ],
    },
    FigureConfig {
        id: 2,
        fam: Fam::Example1,
        series: &[
            SeriesConfig {
                label: "P7",
                kind: SeriesKind::Plain(7),
            },
            SeriesConfig {
                label: "P7_corecursive",
                kind: SeriesKind::Perturbed(7, &[(3, 0.43, 1.0)]),
            },
        ],
    },
    FigureConfig {
        id: 3,
        fam: Fam::CrrDemo,
        series: &[
            SeriesConfig {
                label: "P6",
                kind: SeriesKind::Plain(6),
            },
            SeriesConfig {
                label: "P6_corecursive",
                kind: SeriesKind::Perturbed(6, &[(3, -0.3, 1.0)]),
            },
        ],
    },
    FigureConfig {
        id: 4,
        fam: Fam::CrrDemo,
        series: &[
            SeriesConfig {
                label: "P7",
                kind: SeriesKind::Plain(7),
            },
            SeriesConfig {
                label: "P7_corecursive",
                kind: SeriesKind::Perturbed(7, &[(3, 1.2, 1.0)]),
            },
        ],
    },
    FigureConfig {
        id: 5,
        fam: Fam::CrrDemo,
        series: &[
            SeriesConfig {
                label: "P6_mu_0.3_0.4",
                kind: SeriesKind::Perturbed(6, &[(3, 0.3, 1.0), (4, 0.4, 1.0)]),
            },
            SeriesConfig {
                label: "P6_mu_0.5_0.6",
                kind: SeriesKind::Perturbed(6, &[(3, 0.5, 1.0), (4, 0.6, 1.0)]),
            },
            SeriesConfig {
                label: "P6",
                kind: SeriesKind::Plain(6),
            },
        ],
    },
    FigureConfig {
        id: 6,
        fam: Fam::CrrDemo,
        series: &[
            SeriesConfig {
                label: "P6_mu_-0.2_-0.3",
                kind: SeriesKind::Perturbed(6, &[(3, -0.2, 1.0), (4, -0.3, 1.0)]),
            },
            SeriesConfig {
                label: "P6_mu_-0.4_-0.5",
                kind: SeriesKind::Perturbed(6, &[(3, -0.4, 1.0), (4, -0.5, 1.0)]),
            },
            SeriesConfig {
                label: "P6",
                kind: SeriesKind::Plain(6),
            },
        ],
    },
    FigureConfig {
        id: 7,
        fam: Fam::Example1,
        series: &[
            SeriesConfig {
                label: "P9",
                kind: SeriesKind::Plain(9),
            },
            SeriesConfig {
                label: "P9_codilated",
                kind: SeriesKind::Perturbed(9, &[(3, 0.0, 0.6)]),
            },
        ],
    },
    FigureConfig {
        id: 8,
        fam: Fam::Example1,
        series: &[
            SeriesConfig {
                label: "P9",
                kind: SeriesKind::Plain(9),
            },
            SeriesConfig {
                label: "P9_codilated",
                kind: SeriesKind::Perturbed(9, &[(3, 0.0, 0.6)]),
            },
            SeriesConfig {
                label: "P3",
                kind: SeriesKind::Plain(3),
            },
            SeriesConfig {
                label: "P2",
                kind: SeriesKind::Plain(2),
            },
        ],
    },
    FigureConfig {
        id: 9,
        fam: Fam::CrrDemo,
        series: &[
            SeriesConfig {
                label: "P7",
                kind: SeriesKind::Plain(7),
            },
            SeriesConfig {
                label: "P7_codilated",
                kind: SeriesKind::Perturbed(7, &[(4, 0.0, 0.5)]),
            },
            SeriesConfig {
                label: "P4",
                kind: SeriesKind::Plain(4),
            },
            SeriesConfig {
                label: "P3",
                kind: SeriesKind::Plain(3),
            },
        ],
    },
    FigureConfig {
        id: 10,
        fam: Fam::ChebyshevUnit,
        series: &[
            SeriesConfig {
                label: "P10",
                kind: SeriesKind::Plain(10),
            },
            SeriesConfig {
                label: "P10_codilated",
                kind: SeriesKind::Perturbed(10, &[(5, 0.0, 0.7)]),
            },
            SeriesConfig {
                label: "P5",
                kind: SeriesKind::Plain(5),
            },
            SeriesConfig {
                label: "P4",
                kind: SeriesKind::Plain(4),
            },
        ],
    },
    FigureConfig {
        id: 11,
        fam: Fam::CrrDemo,
        series: &[
            SeriesConfig {
                label: "S7",
                kind: SeriesKind::Structural((6, 0.4, 1.2)),
            },
            SeriesConfig {
                label: "P7",
                kind: SeriesKind::Plain(7),
            },
            SeriesConfig {
                label: "P6",
                kind: SeriesKind::Plain(6),
            },
        ],
    },
    FigureConfig {
        id: 12,
        fam: Fam::CrrDemo,
        series: &[
            SeriesConfig {
                label: "S6",
                kind: SeriesKind::Structural((5, 0.6, 0.8)),
            },
            SeriesConfig {
                label: "P6",
                kind: SeriesKind::Plain(6),
            },
            SeriesConfig {
                label: "P5",
                kind: SeriesKind::Plain(5),
            },
        ],
    },
];

pub fn figure_config(id: u8) -> Option<&'static FigureConfig> {
    FIGURE_CONFIGS.iter().find(|f| f.id == id)
}

/// One computed figure series: sorted real zeros plus any complex ones.
pub struct ComputedSeries {
    pub label: &'static str,
    pub real: Vec<f64>,
    pub complex: Vec<Complex64>,
}

/// All zeros of a polynomial, split into real and complex. A polynomial that
/// is exactly a scaled power (x − r)^n defeats the simultaneous finder (its
/// certification rejects clustered estimates of a multiple root), so that
/// shape is detected first and answered exactly.
fn series_zeros(p: &Poly) -> Result<(Vec<f64>, Vec<Complex64>)> {
    if let Some(n) = p.degree() {
        if n >= 2 {
            let lead = p.leading();
            let r = -p.coeff(n - 1) / (lead * n as f64);
            let power = Poly::x_minus(r).powi(n).scale(lead);
            if p.rel_distance(&power) <= 1e-11 {
                let zs = vec![r; n];
                let (real, complex) = classify_real(&zs);
                return Ok((real, complex));
            }
        }
    }
    let zs = roots(p)?;
    let (mut real, complex) = classify_real(&zs);
    real.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok((real, complex))
}

/// Computes every series of a figure configuration.
pub fn compute_figure(cfg: &FigureConfig) -> Result<Vec<ComputedSeries>> {
    let fam = cfg.fam.build();
    cfg.series
        .iter()
        .map(|s| {
            let poly = match &s.kind {
                SeriesKind::Plain(n) => generate_first(&fam, *n)?[*n].clone(),
                SeriesKind::Perturbed(n, entries) => column_poly(&fam, *n, entries)?,
                SeriesKind::Structural((k, mu, nu)) => structural_polynomial(
                    &fam,
                    &PerturbEntry {
                        k: *k,
                        mu: *mu,
                        nu: *nu,
                    },
                )?,
            };
            let (real, complex) = series_zeros(&poly)?;
            Ok(ComputedSeries {
                label: s.label,
                real,
                complex,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    #[test]
    fn table_configs_match_golden_shapes() {
        for cfg in &TABLE_CONFIGS {
            let g = golden::golden(cfg.id).unwrap();
            assert_eq!(g.labels.len(), cfg.columns.len(), "table {}", cfg.id);
            for (gl, cl) in g.labels.iter().zip(cfg.columns.iter()) {
                assert_eq!(*gl, cl.label, "table {}", cfg.id);
            }
            for col in g.columns {
                assert_eq!(col.len(), cfg.n, "table {}", cfg.id);
            }
        }
    }

    #[test]
    fn figure_ids_are_one_through_twelve_and_unperturbed_series_lead_or_trail() {
        for (i, cfg) in FIGURE_CONFIGS.iter().enumerate() {
            assert_eq!(cfg.id as usize, i + 1);
            assert!(!cfg.series.is_empty());
        }
        assert_eq!(figure_config(1).unwrap().series.len(), 2);
        assert_eq!(figure_config(8).unwrap().series.len(), 4);
    }

    #[test]
    fn degenerate_power_polynomial_gets_exact_multiple_root() {
        // The equal-parameter family collapses to scaled powers of (x − 1);
        // the series helper must answer with the exact n-fold root.
        let fam = Fam::ChebyshevUnit.build();
        let p = generate_first(&fam, 10).unwrap()[10].clone();
        let (real, complex) = series_zeros(&p).unwrap();
        assert_eq!(real.len(), 10);
        assert!(complex.is_empty());
        for r in real {
            assert!((r - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn every_figure_computes() {
        for cfg in &FIGURE_CONFIGS {
            let series = compute_figure(cfg).unwrap();
            assert_eq!(series.len(), cfg.series.len(), "figure {}", cfg.id);
            for s in &series {
                assert!(
                    !s.real.is_empty() || !s.complex.is_empty(),
                    "figure {}",
                    cfg.id
                );
            }
        }
    }
}
