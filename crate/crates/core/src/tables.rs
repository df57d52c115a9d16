//! Expected centralizer tables and the row-by-row comparison against
//! computed profiles.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::classicmodels::predicted_rows;
use crate::error::{Error, Result};
use crate::permengine::GammaStructure;
use crate::rootsys::{CoxeterType, Irreducible};
use crate::structure::{factor_order, parse_factored, CentralizerProfile};

/// The pinned fixture compiled into the library.
pub const EMBEDDED_FIXTURE: &str = include_str!("../fixtures/tables.txt");

/// One table row. A row may stand for several classes with identical
/// profiles, one per label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub degree: usize,
    pub labels: Vec<String>,
    pub order: BigUint,
    pub g_minus: CoxeterType,
    pub tilde_g_minus: CoxeterType,
    pub g_plus: CoxeterType,
    pub tilde_g_plus: CoxeterType,
    pub gamma: GammaStructure,
}

impl TableRow {
    fn columns(&self) -> [(&'static str, String); 6] {
        [
            ("order_factored", factor_order(&self.order)),
            ("Gminus", self.g_minus.to_string()),
            ("TildeGminus", self.tilde_g_minus.to_string()),
            ("Gplus", self.g_plus.to_string()),
            ("TildeGplus", self.tilde_g_plus.to_string()),
            ("gamma", self.gamma.to_string()),
        ]
    }

    fn of_profile(p: &CentralizerProfile) -> TableRow {
        TableRow {
            degree: p.degree,
            labels: vec![p.label.clone()],
            order: p.order.clone(),
            g_minus: p.g_minus.clone(),
            tilde_g_minus: p.tilde_g_minus.clone(),
            g_plus: p.g_plus.clone(),
            tilde_g_plus: p.tilde_g_plus.clone(),
            gamma: p.gamma.clone(),
        }
    }
}

/// Rows of the dihedral group of order `2m`.
pub fn dihedral_rows(m: usize) -> Vec<TableRow> {
    let whole = CoxeterType::irreducible(Irreducible::I2(m));
    let a1 = CoxeterType::irreducible(Irreducible::A(1));
    let one = CoxeterType::trivial();
    let trivial_gamma = GammaStructure::sym(1);
    let mut rows = vec![TableRow {
        degree: 0,
        labels: vec!["0".into()],
        order: BigUint::from(2 * m),
        g_minus: one.clone(),
        tilde_g_minus: one.clone(),
        g_plus: whole.clone(),
        tilde_g_plus: whole.clone(),
        gamma: trivial_gamma.clone(),
    }];
    if m % 2 == 1 {
        rows.push(TableRow {
            degree: 1,
            labels: vec!["1".into()],
            order: BigUint::from(2u32),
            g_minus: a1.clone(),
            tilde_g_minus: a1,
            g_plus: one.clone(),
            tilde_g_plus: one,
            gamma: trivial_gamma,
        });
    } else {
        rows.push(TableRow {
            degree: 1,
            labels: vec!["1".into(), "1'".into()],
            order: BigUint::from(4u32),
            g_minus: a1.clone(),
            tilde_g_minus: a1.clone(),
            g_plus: a1.clone(),
            tilde_g_plus: a1,
            gamma: trivial_gamma.clone(),
        });
        rows.push(TableRow {
            degree: 2,
            labels: vec!["2".into()],
            order: BigUint::from(2 * m),
            g_minus: whole.clone(),
            tilde_g_minus: whole,
            g_plus: one.clone(),
            tilde_g_plus: one,
            gamma: trivial_gamma,
        });
    }
    rows
}

/// Expected rows per type name, parsed from a fixture.
#[derive(Clone, Debug, Default)]
pub struct ExpectedTable {
    rows: BTreeMap<String, Vec<TableRow>>,
}

impl ExpectedTable {
    pub fn embedded() -> Self {
        ExpectedTable::parse(EMBEDDED_FIXTURE).expect("embedded fixture parses")
    }

    /// Parses `type|degree|labels|order|G-|~G-|G+|~G+|gamma` lines; `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: BTreeMap<String, Vec<TableRow>> = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |what: &str| Error::Parse(format!("fixture line {}: {what}", lineno + 1));
            let f: Vec<&str> = line.split('|').map(str::trim).collect();
            let [ty, degree, labels, order, gm, tgm, gp, tgp, gamma] = f.as_slice() else {
                return Err(err("expected 9 fields"));
            };
            let ty: Irreducible = ty.parse().map_err(|_| err("bad type"))?;
            let row = TableRow {
                degree: degree.parse().map_err(|_| err("bad degree"))?,
                labels: labels.split(';').map(|s| s.trim().to_string()).collect(),
                order: parse_factored(order).ok_or_else(|| err("bad order"))?,
                g_minus: gm.parse().map_err(|_| err("bad G- type"))?,
                tilde_g_minus: tgm.parse().map_err(|_| err("bad ~G- type"))?,
                g_plus: gp.parse().map_err(|_| err("bad G+ type"))?,
                tilde_g_plus: tgp.parse().map_err(|_| err("bad ~G+ type"))?,
                gamma: GammaStructure::parse(gamma).map_err(|_| err("bad gamma"))?,
            };
            rows.entry(ty.to_string()).or_default().push(row);
        }
        Ok(ExpectedTable { rows })
    }

    pub fn fixture_types(&self) -> impl Iterator<Item = &str> {
        self.rows.keys().map(String::as_str)
    }

    /// Expected rows for `t`: the fixture if it lists `t`, otherwise the
    /// closed-form rows of the classical and dihedral families.
    pub fn rows_for(&self, t: Irreducible) -> Result<Vec<TableRow>> {
        if let Some(rows) = self.rows.get(&t.to_string()) {
            return Ok(rows.clone());
        }
        match t {
            Irreducible::A(_) | Irreducible::B(_) | Irreducible::D(_) => predicted_rows(t),
            Irreducible::I2(m) => Ok(dihedral_rows(m)),
            Irreducible::G2 => Ok(dihedral_rows(6)),
            other => Err(Error::Capability(format!("no expected table for {other}"))),
        }
    }
}

/// One difference between an expected table and computed profiles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Discrepancy {
    MissingClass { label: String },
    UnexpectedClass { label: String },
    Mismatch { label: String, column: String, expected: String, computed: String },
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::MissingClass { label } => write!(f, "row {label}: no computed class"),
            Discrepancy::UnexpectedClass { label } => write!(f, "row {label}: computed class not in the table"),
            Discrepancy::Mismatch { label, column, expected, computed } => {
                write!(f, "row {label}, column {column}: expected {expected}, computed {computed}")
            }
        }
    }
}

/// Compares computed profiles with expected rows. Types are compared as
/// canonical multisets and `gamma` as a group structure.
pub fn compare(expected: &[TableRow], computed: &[CentralizerProfile]) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    let mut used = vec![false; computed.len()];
    for row in expected {
        for label in &row.labels {
            let Some(k) = computed.iter().position(|p| &p.label == label && p.degree == row.degree) else {
                out.push(Discrepancy::MissingClass { label: label.clone() });
                continue;
            };
            used[k] = true;
            let got = TableRow::of_profile(&computed[k]);
            let exact = [
                row.order == got.order,
                row.g_minus == got.g_minus,
                row.tilde_g_minus == got.tilde_g_minus,
                row.g_plus == got.g_plus,
                row.tilde_g_plus == got.tilde_g_plus,
                row.gamma == got.gamma,
            ];
            for ((ok, (column, e)), (_, c)) in exact.into_iter().zip(row.columns()).zip(got.columns()) {
                if !ok {
                    out.push(Discrepancy::Mismatch {
                        label: label.clone(),
                        column: column.to_string(),
                        expected: e,
                        computed: c,
                    });
                }
            }
        }
    }
    for (p, seen) in computed.iter().zip(used) {
        if !seen {
            out.push(Discrepancy::UnexpectedClass { label: p.label.clone() });
        }
    }
    out
}

/// Number of classes the rows stand for.
pub fn class_count(rows: &[TableRow]) -> usize {
    rows.iter().map(|r| r.labels.len()).sum()
}
