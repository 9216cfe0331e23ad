//! Deterministic CSV and JSON renderings of tables, matrices, branchings
//! and decompositions. Every JSON document carries `"schema": "so5cg/1"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::SqrtSum;
use crate::full::{coupling_matrix, ColLabel, RowLabel};
use crate::labels::{branching, decompose_with_14, dim, Channel, IrrepLabel, So4Label};
use crate::reduced::{reduced, EntryShift, ReducedKey};

pub const SCHEMA: &str = "so5cg/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// One row of a reduced table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub source_so4: So4Label,
    pub entry: EntryShift,
    pub value: SqrtSum,
}

/// All reduced coefficients of one channel: the fourteen table rows for
/// every SO(4) label of the source. Rows whose shifted label would have a
/// negative spin are listed with value 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedTable {
    pub schema: String,
    pub source: IrrepLabel,
    pub channel: Channel,
    pub rows: Vec<TableRow>,
}

pub fn reduced_table(source: IrrepLabel, channel: Channel) -> Result<ReducedTable> {
    let mut rows = Vec::new();
    for s in branching(source) {
        let mut entries = EntryShift::all();
        entries.sort();
        for e in entries {
            let key = ReducedKey { source, channel, source_so4: s, entry: e };
            let value = match key.target_so4() {
                Ok(_) => reduced(&key)?,
                Err(_) => SqrtSum::zero(),
            };
            rows.push(TableRow { source_so4: s, entry: e, value });
        }
    }
    Ok(ReducedTable { schema: SCHEMA.into(), source, channel, rows })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

/// CSV cells may contain commas only inside the exact value, which never
/// does; values are written in the canonical `num/den*sqrt(rad)` form.
fn value_cell(v: &SqrtSum) -> String {
    v.to_canonical_string()
}

impl ReducedTable {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => csv(
                &[
                    "twice_jbar1", "twice_jbar2", "twice_shift1", "twice_shift2", "copy", "twice_s1", "twice_s2",
                    "twice_dj1", "twice_dj2", "twice_p1", "twice_p2", "value",
                ],
                self.rows.iter().map(|r| {
                    vec![
                        self.source.jbar1().twice.to_string(),
                        self.source.jbar2().twice.to_string(),
                        self.channel.shift1.twice.to_string(),
                        self.channel.shift2.twice.to_string(),
                        self.channel.copy.to_string(),
                        r.source_so4.j1().twice.to_string(),
                        r.source_so4.j2().twice.to_string(),
                        r.entry.dj1.twice.to_string(),
                        r.entry.dj2.twice.to_string(),
                        r.entry.part.j1().twice.to_string(),
                        r.entry.part.j2().twice.to_string(),
                        value_cell(&r.value),
                    ]
                }),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry(pub usize, pub usize, pub SqrtSum);

/// Sparse coupling matrix with row and column labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixExport {
    pub schema: String,
    pub source: IrrepLabel,
    pub rows: Vec<RowLabel>,
    pub cols: Vec<ColLabel>,
    /// `(row, col, value)`, ordered by row then column.
    pub entries: Vec<MatrixEntry>,
}

pub fn matrix_export(source: IrrepLabel) -> Result<MatrixExport> {
    let m = coupling_matrix(source)?;
    let mut entries: Vec<MatrixEntry> = m.entries().map(|(r, c, v)| MatrixEntry(r, c, v.clone())).collect();
    entries.sort_by_key(|e| (e.0, e.1));
    Ok(MatrixExport { schema: SCHEMA.into(), source, rows: m.rows, cols: m.cols, entries })
}

impl MatrixExport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => csv(
                &[
                    "twice_s1", "twice_s2", "twice_m1", "twice_m2", "twice_p1", "twice_p2", "twice_mu1", "twice_mu2",
                    "twice_target_jbar1", "twice_target_jbar2", "copy", "twice_t1", "twice_t2", "twice_M1",
                    "twice_M2", "value",
                ],
                self.entries.iter().map(|MatrixEntry(r, c, v)| {
                    let (row, col) = (&self.rows[*r], &self.cols[*c]);
                    [
                        row.source.so4.j1(),
                        row.source.so4.j2(),
                        row.source.m1,
                        row.source.m2,
                        row.part.so4.j1(),
                        row.part.so4.j2(),
                        row.part.m1,
                        row.part.m2,
                        col.target.jbar1(),
                        col.target.jbar2(),
                    ]
                    .iter()
                    .map(|h| h.twice.to_string())
                    .chain([col.copy.to_string()])
                    .chain(
                        [col.state.so4.j1(), col.state.so4.j2(), col.state.m1, col.state.m2]
                            .iter()
                            .map(|h| h.twice.to_string()),
                    )
                    .chain([value_cell(v)])
                    .collect()
                }),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchEntry {
    pub label: So4Label,
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchExport {
    pub schema: String,
    pub source: IrrepLabel,
    pub labels: Vec<BranchEntry>,
}

pub fn branch_export(source: IrrepLabel) -> BranchExport {
    let labels = branching(source).into_iter().map(|label| BranchEntry { label, dim: label.dim() }).collect();
    BranchExport { schema: SCHEMA.into(), source, labels }
}

impl BranchExport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => csv(
                &["twice_j1", "twice_j2", "dim"],
                self.labels.iter().map(|e| {
                    vec![e.label.j1().twice.to_string(), e.label.j2().twice.to_string(), e.dim.to_string()]
                }),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRow {
    pub target: IrrepLabel,
    pub multiplicity: u32,
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionExport {
    pub schema: String,
    pub source: IrrepLabel,
    pub entries: Vec<DecompositionRow>,
    /// `Σ multiplicity · dim`, equal to `14 · dim(source)`.
    pub total_dim: u64,
}

pub fn decomposition_export(source: IrrepLabel) -> DecompositionExport {
    let entries: Vec<DecompositionRow> = decompose_with_14(source)
        .into_iter()
        .map(|e| DecompositionRow { target: e.target, multiplicity: e.multiplicity, dim: dim(e.target) })
        .collect();
    let total_dim = entries.iter().map(|e| e.multiplicity as u64 * e.dim).sum();
    DecompositionExport { schema: SCHEMA.into(), source, entries, total_dim }
}

impl DecompositionExport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => csv(
                &["twice_jbar1", "twice_jbar2", "multiplicity", "dim"],
                self.entries.iter().map(|e| {
                    vec![
                        e.target.jbar1().twice.to_string(),
                        e.target.jbar2().twice.to_string(),
                        e.multiplicity.to_string(),
                        e.dim.to_string(),
                    ]
                }),
            ),
        }
    }
}

/// Parses `csv` or `json`.
pub fn parse_format(s: &str) -> Result<Format> {
    match s {
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        _ => Err(Error::MalformedKey(format!("unknown format {s:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_table_has_fourteen_unit_rows() {
        let t = reduced_table(IrrepLabel::TRIVIAL, "+1,+1".parse().unwrap()).unwrap();
        assert_eq!(t.rows.len(), 14);
        assert!(t.rows.iter().all(|r| r.value.is_zero() || r.value.is_one() || (-&r.value).is_one()));
        let csv = t.render(Format::Csv);
        assert_eq!(csv.lines().count(), 15);
        let back: ReducedTable = serde_json::from_str(&t.render(Format::Json)).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn decomposition_of_fourteen() {
        let d = decomposition_export(IrrepLabel::FOURTEEN);
        assert_eq!(d.entries.len(), 6);
        assert_eq!(d.total_dim, 196);
        assert!(d.render(Format::Json).contains("\"schema\": \"so5cg/1\""));
    }

    #[test]
    fn branch_of_fourteen() {
        let b = branch_export(IrrepLabel::FOURTEEN);
        assert_eq!(b.labels.len(), 3);
        assert_eq!(b.render(Format::Csv), "twice_j1,twice_j2,dim\n0,0,1\n1,1,4\n2,2,9\n");
    }

    #[test]
    fn matrix_round_trips() {
        let m = matrix_export("1/2,0".parse().unwrap()).unwrap();
        assert_eq!(m.rows.len(), 56);
        let back: MatrixExport = serde_json::from_str(&m.render(Format::Json)).unwrap();
        assert_eq!(back, m);
        assert_eq!(m.render(Format::Csv).lines().count(), m.entries.len() + 1);
    }
}
