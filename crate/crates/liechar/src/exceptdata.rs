//! Curated data for exceptional groups: the table of α-values for Levi
//! subgroups of G₂, F₄, E₆, E₇, E₈, and the worked E₇ ⊃ D₆ class table,
//! with internal consistency checks (the D₆ column of the latter is
//! recomputable from the orthogonal class-dimension formula; the E₇ column
//! is transcribed data).
//!
//! Label conventions (ASCII): a leading `~` marks a short-root subsystem
//! (e.g. `~A1` for Ã₁ in G₂/F₄); a trailing `'` distinguishes the second of
//! two subsystems with the same Dynkin type (e.g. `A5'` in E₇); `rest`
//! covers all remaining Levi subgroups of the group and always carries an
//! upper-bound marker. Entries for a family of Levi subgroups sharing a
//! simple factor (rather than one specific Levi) have `is_family` set.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::alphabeta::Rat;
use crate::classgeom::{dim_class, GroupFamily};
use crate::partitions::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExceptionalGroup {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl std::fmt::Display for ExceptionalGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExceptError {
    #[error("no alpha entry for Levi label {1:?} in {0}")]
    UnknownLabel(ExceptionalGroup, String),
    #[error("E7/D6 table inconsistency at row {0}: {1}")]
    E7D6Mismatch(String, String),
}

/// One entry of the exceptional α table.
#[derive(Debug, Clone, Serialize)]
pub struct ExceptionalAlphaEntry {
    pub group: ExceptionalGroup,
    pub levi_label: &'static str,
    pub alpha: Rat,
    /// True when the table gives only an upper bound ("≤ x" entries).
    pub is_upper_bound: bool,
    /// True when the entry covers the family of Levi subgroups whose
    /// derived group has a simple factor of this type, not one fixed Levi.
    pub is_family: bool,
}

const fn entry(
    group: ExceptionalGroup,
    levi_label: &'static str,
    num: i64,
    den: i64,
    is_upper_bound: bool,
    is_family: bool,
) -> ExceptionalAlphaEntry {
    ExceptionalAlphaEntry {
        group,
        levi_label,
        alpha: Ratio::new_raw(num, den),
        is_upper_bound,
        is_family,
    }
}

use ExceptionalGroup::*;

/// α-values for exceptional groups, in the printed column order.
pub const ALPHA_TABLE: &[ExceptionalAlphaEntry] = &[
    entry(E8, "E7", 17, 29, false, false),
    entry(E8, "D7", 9, 23, false, false),
    entry(E8, "E6", 11, 29, false, true),
    entry(E8, "D6", 9, 29, false, false),
    entry(E8, "A7", 15, 56, false, false),
    entry(E8, "D5", 7, 29, false, true),
    entry(E8, "A6", 5, 23, false, true),
    entry(E8, "A5", 4, 23, false, true),
    entry(E8, "D4", 5, 29, false, true),
    entry(E8, "rest", 1, 6, true, true),
    entry(E7, "E6", 11, 17, false, false),
    entry(E7, "D6", 5, 9, false, false),
    entry(E7, "D5", 7, 17, false, true),
    entry(E7, "A6", 5, 13, false, false),
    entry(E7, "A5", 4, 13, false, false),
    entry(E7, "A5'", 1, 3, false, true),
    entry(E7, "D4", 5, 17, false, true),
    entry(E7, "A4", 1, 4, true, true),
    entry(E7, "A3", 1, 5, true, true),
    entry(E7, "rest", 1, 6, true, true),
    entry(E6, "D5", 7, 11, false, false),
    entry(E6, "A5", 1, 2, false, false),
    entry(E6, "D4", 5, 11, false, false),
    entry(E6, "A4", 3, 8, false, true),
    entry(E6, "A3", 3, 11, false, true),
    entry(E6, "A2", 7, 27, true, true),
    entry(E6, "A1^k", 3, 20, true, true),
    entry(F4, "B3", 1, 2, false, false),
    entry(F4, "C3", 7, 15, false, false),
    entry(F4, "A2~A1", 1, 4, false, false),
    entry(F4, "A2", 1, 4, false, false),
    entry(F4, "~A2A1", 2, 9, false, false),
    entry(F4, "~A2", 1, 5, false, false),
    entry(F4, "A1~A1", 1, 7, false, false),
    entry(F4, "A1", 1, 8, false, false),
    entry(F4, "~A1", 1, 11, false, false),
    entry(G2, "A1", 1, 3, false, false),
    entry(G2, "~A1", 1, 4, false, false),
];

/// Look up the α entry for a Levi label of an exceptional group.
pub fn alpha_exceptional(
    group: ExceptionalGroup,
    levi_label: &str,
) -> Result<&'static ExceptionalAlphaEntry, ExceptError> {
    ALPHA_TABLE
        .iter()
        .find(|e| e.group == group && e.levi_label == levi_label)
        .ok_or_else(|| ExceptError::UnknownLabel(group, levi_label.to_string()))
}

/// All entries for one group, in printed order.
pub fn alpha_table_for(group: ExceptionalGroup) -> Vec<&'static ExceptionalAlphaEntry> {
    ALPHA_TABLE.iter().filter(|e| e.group == group).collect()
}

/// One row of the worked E₇ ⊃ D₆ table: the Jordan form of u on the
/// 12-dimensional natural module of D₆, the label of the class of u in E₇,
/// and the two class dimensions.
#[derive(Debug, Clone, Serialize)]
pub struct E7D6Row {
    pub jordan: Partition,
    /// Disambiguates the two D₆-classes sharing an all-even Jordan form
    /// ((2⁶), (4²,2²), (6²)): 0 for the unprimed row, 1 for the primed one.
    pub prime: u8,
    pub e7_class_label: &'static str,
    pub dim_ul: u32,
    pub dim_ug: u32,
}

fn row(jordan: &[u32], prime: u8, e7: &'static str, dim_ul: u32, dim_ug: u32) -> E7D6Row {
    E7D6Row {
        jordan: Partition::new(jordan.to_vec()).expect("valid partition"),
        prime,
        e7_class_label: e7,
        dim_ul,
        dim_ug,
    }
}

/// The 30 printed rows, in printed order.
pub fn e7_d6_rows() -> Vec<E7D6Row> {
    vec![
        row(&[2, 2, 1, 1, 1, 1, 1, 1, 1, 1], 0, "A1", 18, 34),
        row(&[3, 1, 1, 1, 1, 1, 1, 1, 1, 1], 0, "A1^2", 20, 52),
        row(&[2, 2, 2, 2, 1, 1, 1, 1], 0, "A1^2", 28, 52),
        row(&[2, 2, 2, 2, 2, 2], 0, "(A1^3)^(1)", 30, 54),
        row(&[2, 2, 2, 2, 2, 2], 1, "(A1^3)^(2)", 30, 64),
        row(&[3, 2, 2, 1, 1, 1, 1, 1], 0, "(A1^3)^(2)", 32, 64),
        row(&[3, 2, 2, 2, 2, 1], 0, "A1^4", 36, 70),
        row(&[3, 3, 1, 1, 1, 1, 1, 1], 0, "A2", 34, 66),
        row(&[3, 3, 2, 2, 1, 1], 0, "A2A1", 40, 76),
        row(&[3, 3, 3, 1, 1, 1], 0, "A2A1^2", 42, 82),
        row(&[3, 3, 3, 3], 0, "A2^2", 44, 84),
        row(&[4, 4, 1, 1, 1, 1], 0, "A3", 44, 84),
        row(&[5, 1, 1, 1, 1, 1, 1, 1], 0, "A3", 36, 84),
        row(&[4, 4, 2, 2], 0, "(A3A1)^(1)", 46, 86),
        row(&[4, 4, 2, 2], 1, "(A3A1)^(2)", 46, 92),
        row(&[5, 2, 2, 1, 1, 1], 0, "(A3A1)^(1)", 44, 86),
        row(&[4, 4, 3, 1], 0, "A3A1^2", 48, 94),
        row(&[5, 3, 3, 1], 0, "A3A2", 50, 98),
        row(&[5, 5, 1, 1], 0, "A4", 52, 100),
        row(&[6, 6], 0, "(A5)^(1)", 54, 102),
        row(&[6, 6], 1, "(A5)^(2)", 54, 108),
        row(&[7, 1, 1, 1, 1, 1], 0, "D4", 48, 96),
        row(&[5, 3, 1, 1, 1, 1], 0, "D4(a1)", 46, 94),
        row(&[7, 2, 2, 1], 0, "D4A1", 52, 102),
        row(&[5, 3, 2, 2], 0, "D4(a1)A1", 48, 96),
        row(&[9, 1, 1, 1], 0, "D5", 56, 112),
        row(&[7, 3, 1, 1], 0, "D5(a1)", 54, 106),
        row(&[11, 1], 0, "D6", 60, 118),
        row(&[9, 3], 0, "D6(a1)", 58, 114),
        row(&[7, 5], 0, "D6(a2)", 56, 110),
    ]
}

/// Consistency report for the E₇ ⊃ D₆ table.
#[derive(Debug, Clone, Serialize)]
pub struct E7D6Report {
    pub rows_checked: usize,
    pub max_ratio: Rat,
    pub max_row_jordan: Partition,
    pub matches_alpha_table: bool,
}

/// Recompute each `dim u^{D₆}` from the Jordan form and confirm the maximum
/// of dim u^𝓛/dim u^𝓖 over all rows equals the α-table value for (E₇, D₆).
pub fn verify_e7_d6() -> Result<E7D6Report, ExceptError> {
    let rows = e7_d6_rows();
    let mut max_ratio = Rat::new_raw(0, 1);
    let mut max_row = rows[0].jordan.clone();
    for r in &rows {
        let name = format!("{}{}", r.jordan, if r.prime == 1 { "'" } else { "" });
        let recomputed = dim_class(GroupFamily::SOEven(12), &r.jordan)
            .map_err(|e| ExceptError::E7D6Mismatch(name.clone(), e.to_string()))?;
        if recomputed != r.dim_ul {
            return Err(ExceptError::E7D6Mismatch(
                name,
                format!("stored dim u^L = {}, recomputed {}", r.dim_ul, recomputed),
            ));
        }
        if r.dim_ul >= r.dim_ug || r.dim_ul % 2 != 0 || r.dim_ug % 2 != 0 {
            return Err(ExceptError::E7D6Mismatch(
                name,
                format!("dimension pair ({}, {}) fails sanity", r.dim_ul, r.dim_ug),
            ));
        }
        let ratio = Rat::new(r.dim_ul as i64, r.dim_ug as i64);
        if ratio > max_ratio {
            max_ratio = ratio;
            max_row = r.jordan.clone();
        }
    }
    let table_alpha = alpha_exceptional(ExceptionalGroup::E7, "D6")
        .expect("table has the D6 entry")
        .alpha;
    if max_ratio != table_alpha {
        return Err(ExceptError::E7D6Mismatch(
            max_row.to_string(),
            format!("max ratio {max_ratio} != table value {table_alpha}"),
        ));
    }
    Ok(E7D6Report {
        rows_checked: rows.len(),
        max_ratio,
        max_row_jordan: max_row,
        matches_alpha_table: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn alpha_lookups() {
        assert_eq!(alpha_exceptional(E8, "E7").unwrap().alpha, rat(17, 29));
        assert_eq!(alpha_exceptional(G2, "A1").unwrap().alpha, rat(1, 3));
        assert_eq!(alpha_exceptional(G2, "~A1").unwrap().alpha, rat(1, 4));
        let e = alpha_exceptional(E7, "A5'").unwrap();
        assert_eq!(e.alpha, rat(1, 3));
        assert!(e.is_family && !e.is_upper_bound);
        let rest = alpha_exceptional(E7, "rest").unwrap();
        assert_eq!(rest.alpha, rat(1, 6));
        assert!(rest.is_upper_bound);
        assert!(matches!(
            alpha_exceptional(E8, "B3"),
            Err(ExceptError::UnknownLabel(E8, _))
        ));
    }

    #[test]
    fn alpha_values_in_unit_interval() {
        for e in ALPHA_TABLE {
            assert!(e.alpha > rat(0, 1) && e.alpha < rat(1, 1), "{e:?}");
            // stored in lowest terms
            assert_eq!(e.alpha, rat(*e.alpha.numer(), *e.alpha.denom()));
        }
    }

    #[test]
    fn upper_bound_entries_below_exact_entries() {
        // an "≤ x" entry covers lower-rank Levi subgroups; its bound must
        // not exceed any exact value in the same group row
        for g in [G2, F4, E6, E7, E8] {
            let entries = alpha_table_for(g);
            let min_exact = entries
                .iter()
                .filter(|e| !e.is_upper_bound)
                .map(|e| e.alpha)
                .min();
            if let Some(min_exact) = min_exact {
                for e in entries.iter().filter(|e| e.is_upper_bound) {
                    assert!(e.alpha <= min_exact, "{g}: {e:?}");
                }
            }
        }
    }

    #[test]
    fn table_row_counts() {
        assert_eq!(alpha_table_for(E8).len(), 10);
        assert_eq!(alpha_table_for(E7).len(), 10);
        assert_eq!(alpha_table_for(E6).len(), 7);
        assert_eq!(alpha_table_for(F4).len(), 9);
        assert_eq!(alpha_table_for(G2).len(), 2);
    }

    #[test]
    fn e7_d6_rows_partition_twelve() {
        let rows = e7_d6_rows();
        assert_eq!(rows.len(), 30);
        for r in &rows {
            assert_eq!(r.jordan.n(), 12, "{}", r.jordan);
        }
        // the three all-even Jordan forms each appear twice
        for evens in [[2u32; 6].as_slice(), &[4, 4, 2, 2], &[6, 6]] {
            let p = Partition::new(evens.to_vec()).unwrap();
            let count = rows.iter().filter(|r| r.jordan == p).count();
            assert_eq!(count, 2, "{p}");
        }
    }

    #[test]
    fn e7_d6_examples() {
        let rows = e7_d6_rows();
        let first = &rows[0];
        assert_eq!((first.dim_ul, first.dim_ug), (18, 34));
        assert_eq!(
            dim_class(GroupFamily::SOEven(12), &first.jordan).unwrap(),
            18
        );
        let d6 = rows.iter().find(|r| r.e7_class_label == "D6").unwrap();
        assert_eq!((d6.dim_ul, d6.dim_ug), (60, 118));
    }

    #[test]
    fn verify_report() {
        let report = verify_e7_d6().unwrap();
        assert_eq!(report.rows_checked, 30);
        assert_eq!(report.max_ratio, rat(5, 9));
        assert_eq!(report.max_row_jordan, Partition::new(vec![2; 6]).unwrap());
        assert!(report.matches_alpha_table);
    }
}
