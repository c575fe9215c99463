//! Reference zero tables, embedded as verbatim string constants. These are
//! transcriptions of externally published 10-digit values used purely as
//! regression goldens: they are data, never recomputed by this program.
//! Typographic minus signs were normalized to ASCII `-`; everything else —
//! including leading-dot decimals, bare `0`/`1` entries, and the original row
//! order — appears exactly as printed. Comparison code parses these strings
//! to floats and sorts; it never edits them.

/// One reference table: column labels and per-column printed digit strings.
pub struct GoldenTable {
    pub id: u8,
    pub labels: &'static [&'static str],
    pub columns: &'static [&'static [&'static str]],
}

pub const TABLES: [GoldenTable; 7] = [
    GoldenTable {
        id: 1,
        labels: &["P9", "P9_corecursive"],
        columns: &[
            &[
                "-1.376381920",
                "1.376381920",
                "0.3249196962",
                "-0.3249196962",
                "3.077683537",
                "0.7265425280",
                "0",
                "-0.7265425280",
                "-3.077683537",
            ],
            &[
                "-1.376381920",
                "1.376381920",
                "0.3249196962",
                "-0.3249196962",
                "1.685063442",
                ".4309372535",
                "-.2251211415",
                "-1.137754967",
                "-10.75312459",
            ],
        ],
    },
    GoldenTable {
        id: 2,
        labels: &["P7", "P7_corecursive"],
        columns: &[
            &[
                "0",
                "1",
                "-1",
                "2.414213562",
                ".4142135624",
                "-.4142135624",
                "-2.414213562",
            ],
            &[
                "0",
                "1",
                "-1",
                "3.336754639",
                ".5388256504",
                "-.2996923982",
                "-1.855887891",
            ],
        ],
    },
    GoldenTable {
        id: 3,
        labels: &["P6", "P6_corecursive"],
        columns: &[
            &[
                "0.3324095627",
                "0.6295725714",
                ".9197511115",
                "1.273243623",
                "1.826806110",
                "2.724441863",
            ],
            &[
                "0.2430260465",
                "0.5966623160",
                "0.8619781365",
                "1.250348102",
                "1.813673082",
                "2.533580638",
            ],
        ],
    },
    GoldenTable {
        id: 4,
        labels: &["P7", "P7_corecursive"],
        columns: &[
            &[
                "0.2389794289",
                "0.5107520351",
                "0.7737829160",
                "1.053542176",
                "1.437251708",
                "2.019702291",
                "2.953906046",
            ],
            &[
                "0.2720925666",
                "0.6671359684",
                "0.8062631388",
                "1.111244050",
                "1.705005737",
                "2.045309617",
                "4.019126394",
            ],
        ],
    },
    GoldenTable {
        id: 5,
        labels: &["P6", "P6_mu_0.3_0.4", "P6_mu_0.5_0.6"],
        columns: &[
            &[
                "0.3324095627",
                "0.6295725714",
                "0.9197511115",
                "1.273243623",
                "1.826806110",
                "2.724441863",
            ],
            &[
                "0.5005414531",
                "0.6667100353",
                "0.9815128474",
                "1.352930479",
                "1.942194994",
                "3.229291555",
            ],
            &[
                "0.5631868840",
                "0.6803702451",
                "1.016823459",
                "1.416833556",
                "1.990311187",
                "3.556960381",
            ],
        ],
    },
    GoldenTable {
        id: 6,
        labels: &["P6", "P6_mu_-0.2_-0.3", "P6_mu_-0.4_-0.5"],
        columns: &[
            &[
                "0.3324095627",
                "0.6295725714",
                ".9197511115",
                "1.273243623",
                "1.826806110",
                "2.724441863",
            ],
            &[
                ".1599408957",
                "0.5840010301",
                ".8799756728",
                "1.232311882",
                "1.700534290",
                "2.458156724",
            ],
            &[
                "0.001082138805",
                "0.5193524908",
                "0.8456227563",
                "1.207028405",
                "1.583284261",
                "2.307246095",
            ],
        ],
    },
    GoldenTable {
        id: 7,
        labels: &["P9", "P9_codilated"],
        columns: &[
            &[
                "0",
                "-3.077683537",
                "-1.376381920",
                "-0.7265425280",
                "-0.3249196962",
                "0.3249196962",
                "0.7265425280",
                "1.376381920",
                "3.077683537",
            ],
            &[
                "0",
                "-2.428062818",
                "-1.248215157",
                "-.7432443609",
                "-.2950948155",
                ".2950948155",
                ".7432443609",
                "1.248215157",
                "2.428062818",
            ],
        ],
    },
];

/// Looks up a reference table by 1-based id.
pub fn golden(id: u8) -> Option<&'static GoldenTable> {
    TABLES.iter().find(|t| t.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_golden_entry_parses_and_columns_are_rectangular() {
        for t in &TABLES {
            assert_eq!(t.labels.len(), t.columns.len(), "table {}", t.id);
            let rows = t.columns[0].len();
            for col in t.columns {
                assert_eq!(col.len(), rows, "table {}", t.id);
                for s in *col {
                    s.parse::<f64>().unwrap();
                }
            }
        }
    }

    #[test]
    fn golden_lookup_covers_exactly_ids_one_through_seven() {
        for id in 1..=7u8 {
            assert!(golden(id).is_some());
        }
        assert!(golden(0).is_none());
        assert!(golden(8).is_none());
    }
}
