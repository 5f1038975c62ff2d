//! Structured reports with a JSON form and a plain-text rendering.

use std::fmt::Write as _;

use mackey_core::decomp::{Analysis, DecompositionMatrix};
use mackey_core::exalg::CartanMatrix;
use mackey_core::grp::Group;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub subgroups: usize,
    pub subgroup_classes: usize,
}

impl GroupSummary {
    pub fn of(g: &Group) -> Self {
        GroupSummary {
            name: g.name().to_string(),
            order: g.order(),
            subgroups: g.lattice.len(),
            subgroup_classes: g.lattice.classes().len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<usize>>,
}

impl From<CartanMatrix> for LabeledMatrix {
    fn from(c: CartanMatrix) -> Self {
        LabeledMatrix { labels: c.labels, entries: c.entries }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisCount {
    pub h: usize,
    pub l: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoSection {
    pub mu_dim: usize,
    /// Dimension of `μ(G)` reduced to the rationals and to `GF(p)`.
    pub mu_dim_rational: usize,
    pub mu_dim_prime_field: Option<usize>,
    pub p_local_dim: Option<usize>,
    /// Basis elements per `(H, L)` subgroup-id pair of the algebra shown.
    pub basis_counts: Vec<BasisCount>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSummary {
    pub mu_block: usize,
    /// Matched block of the group algebra; absent for the full Mackey algebra.
    pub group_block: Option<usize>,
    pub principal: bool,
    pub mu_dim: usize,
    pub group_dim: Option<usize>,
    pub mu_simples: usize,
    pub group_simples: Option<usize>,
    pub cartan: LabeledMatrix,
    pub group_cartan: Option<LabeledMatrix>,
}

impl BlockSummary {
    pub fn of_pairs(a: &Analysis) -> Vec<BlockSummary> {
        let principal = a.principal_pair().ok().map(|p| p.mu_block);
        a.pairs
            .iter()
            .map(|bp| BlockSummary {
                mu_block: bp.mu_block,
                group_block: Some(bp.group_block),
                principal: principal == Some(bp.mu_block),
                mu_dim: bp.mu_dim,
                group_dim: Some(bp.group_dim),
                mu_simples: bp.mu_simples,
                group_simples: Some(bp.group_simples),
                cartan: a.mu_cartan(bp.mu_block).into(),
                group_cartan: Some(a.group_cartan(bp.group_block).into()),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompRow {
    pub label: String,
    pub dim: usize,
    pub vertex_order: usize,
    pub group_block: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompColumn {
    pub label: String,
    pub subgroup: usize,
    pub subgroup_order: usize,
    pub character: usize,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompSection {
    pub rows: Vec<DecompRow>,
    pub columns: Vec<DecompColumn>,
    pub entries: Vec<Vec<i64>>,
}

impl From<&DecompositionMatrix> for DecompSection {
    fn from(d: &DecompositionMatrix) -> Self {
        DecompSection {
            rows: d
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| DecompRow {
                    label: format!("W{i}[dim {}, vertex order {}]", r.dim, r.vertex_order),
                    dim: r.dim,
                    vertex_order: r.vertex_order,
                    group_block: r.group_block,
                })
                .collect(),
            columns: d
                .columns
                .iter()
                .map(|c| DecompColumn {
                    label: format!("(L{}, chi{})", c.subgroup, c.character),
                    subgroup: c.subgroup,
                    subgroup_order: c.subgroup_order,
                    character: c.character,
                    degree: c.degree,
                })
                .collect(),
            entries: d.entries.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl CheckResult {
    pub fn new(name: &str, pass: bool, details: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            details: details.into(),
            elapsed_ms: None,
        }
    }

    pub fn error(name: &str, details: impl Into<String>) -> Self {
        CheckResult { name: name.to_string(), status: Status::Error, details: details.into(), elapsed_ms: None }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub group: Option<GroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub info: Option<InfoSection>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub blocks: Vec<BlockSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub decomposition: Option<DecompSection>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            group: None,
            prime: None,
            field: None,
            info: None,
            blocks: Vec::new(),
            decomposition: None,
            checks: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(g) = &self.group {
            let _ = writeln!(
                out,
                "group {} (order {}, {} subgroups in {} classes)",
                g.name, g.order, g.subgroups, g.subgroup_classes
            );
        }
        if let Some(p) = self.prime {
            let _ = writeln!(out, "prime {p}");
        }
        if let Some(f) = &self.field {
            let _ = writeln!(out, "field {f}");
        }
        if let Some(info) = &self.info {
            let _ = writeln!(out, "dim mu = {} (over Q: {})", info.mu_dim, info.mu_dim_rational);
            if let Some(d) = info.mu_dim_prime_field {
                let _ = writeln!(out, "dim mu over GF(p) = {d}");
            }
            if let Some(d) = info.p_local_dim {
                let _ = writeln!(out, "dim mu^1 = {d}");
            }
            let _ = writeln!(out, "basis elements per (H, L):");
            for c in &info.basis_counts {
                let _ = writeln!(out, "  ({}, {}): {}", c.h, c.l, c.count);
            }
        }
        for b in &self.blocks {
            let matched = b.group_block.map_or(String::new(), |g| format!(" <-> group block {g}"));
            let principal = if b.principal { " (principal)" } else { "" };
            let _ = writeln!(out, "block {}{matched}{principal}: dim {}, {} simples", b.mu_block, b.mu_dim, b.mu_simples);
            if let (Some(d), Some(s)) = (b.group_dim, b.group_simples) {
                let _ = writeln!(out, "  group block: dim {d}, {s} simples");
            }
            let _ = writeln!(out, "  cartan:");
            write_matrix(&mut out, &b.cartan);
        }
        if let Some(d) = &self.decomposition {
            let _ = writeln!(out, "decomposition matrix ({} x {}):", d.rows.len(), d.columns.len());
            let cols: Vec<&str> = d.columns.iter().map(|c| c.label.as_str()).collect();
            let _ = writeln!(out, "  columns: {}", cols.join(" "));
            for (r, row) in d.rows.iter().zip(&d.entries) {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                let _ = writeln!(out, "  {} block {}: {}", r.label, r.group_block, cells.join(" "));
            }
        }
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            let time = c.elapsed_ms.map_or(String::new(), |ms| format!(" [{ms} ms]"));
            let _ = writeln!(out, "{status} {}{time}: {}", c.name, c.details);
        }
        out
    }
}

fn write_matrix(out: &mut String, m: &LabeledMatrix) {
    for (label, row) in m.labels.iter().zip(&m.entries) {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "    [{}]  {label}", cells.join(" "));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("verify-paper");
        r.checks.push(CheckResult::new("dim-6", true, "6 6 6"));
        r.checks.push(CheckResult::error("x", "boom"));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(!r.all_passed());
        assert!(r.to_json().contains("\"status\": \"pass\""));
        assert!(r.to_text().contains("ERROR x: boom"));
    }
}
