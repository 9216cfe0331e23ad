//! Full coefficients `⟨Λ s m; 14 P M | Λ″ t m″⟩ = R · ⟨s₁m₁ P₁M₁|t₁m₁″⟩ · ⟨s₂m₂ P₂M₂|t₂m₂″⟩`
//! and the coupling matrix of a source irrep.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::SqrtSum;
use crate::labels::{branching, dim, in_branching, present_channels, Channel, HalfInt, IrrepLabel, So4Label};
use crate::reduced::{column, reduced, EntryShift, ReducedKey};
use crate::su2::{su2_cg, Su2CgKey};

/// A basis state `|(j₁,j₂) m₁ m₂⟩` of some irrep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct So4State {
    pub so4: So4Label,
    #[serde(rename = "twice_m1")]
    pub m1: HalfInt,
    #[serde(rename = "twice_m2")]
    pub m2: HalfInt,
}

impl So4State {
    pub fn new(so4: So4Label, m1: HalfInt, m2: HalfInt) -> Result<Self> {
        for (j, m) in [(so4.j1(), m1), (so4.j2(), m2)] {
            if m.abs() > j || (j.twice - m.twice) % 2 != 0 {
                return Err(Error::MalformedKey(format!("projection {m} does not fit spin {j}")));
            }
        }
        Ok(Self { so4, m1, m2 })
    }

    /// All states of the given SO(4) labels, in order.
    pub fn enumerate(labels: &[So4Label]) -> Vec<So4State> {
        let mut out = Vec::new();
        for &so4 in labels {
            for m1 in so4.j1().projections() {
                for m2 in so4.j2().projections() {
                    out.push(So4State { so4, m1, m2 });
                }
            }
        }
        out
    }
}

/// Address of one full coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FullKey {
    pub target: IrrepLabel,
    pub copy: u8,
    pub target_state: So4State,
    pub source: IrrepLabel,
    pub source_state: So4State,
    pub part_state: So4State,
}

/// Product of a reduced coefficient with its two SO(3) factors.
pub fn full(key: &FullKey) -> Result<SqrtSum> {
    let ch = Channel::new(
        key.target.jbar1() - key.source.jbar1(),
        key.target.jbar2() - key.source.jbar2(),
        key.copy,
    )?;
    for (irrep, st) in [(key.source, key.source_state), (key.target, key.target_state)] {
        if !in_branching(irrep, st.so4) {
            return Err(Error::MalformedKey(format!("{} is not in the branching of {irrep}", st.so4)));
        }
    }
    if !in_branching(IrrepLabel::FOURTEEN, key.part_state.so4) {
        return Err(Error::MalformedKey(format!("{} is not a component of the 14", key.part_state.so4)));
    }
    let (s, p, t) = (key.source_state, key.part_state, key.target_state);
    if s.m1 + p.m1 != t.m1 || s.m2 + p.m2 != t.m2 {
        return Ok(SqrtSum::zero());
    }
    let entry = EntryShift::new(t.so4.j1() - s.so4.j1(), t.so4.j2() - s.so4.j2(), p.so4);
    let Ok(entry) = entry else {
        return Ok(SqrtSum::zero());
    };
    let r = reduced(&ReducedKey { source: key.source, channel: ch, source_so4: s.so4, entry })?;
    if r.is_zero() {
        return Ok(r);
    }
    let c1 = su2_cg(&Su2CgKey::new(s.so4.j1(), s.m1, p.so4.j1(), p.m1, t.so4.j1(), t.m1))?;
    let c2 = su2_cg(&Su2CgKey::new(s.so4.j2(), s.m2, p.so4.j2(), p.m2, t.so4.j2(), t.m2))?;
    Ok(&(&r * &c1) * &c2)
}

/// Product basis state: source state ⊗ state of the 14.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RowLabel {
    pub source: So4State,
    pub part: So4State,
}

impl RowLabel {
    /// `(M₁, M₂)` of the product state.
    pub fn total(&self) -> (HalfInt, HalfInt) {
        (self.source.m1 + self.part.m1, self.source.m2 + self.part.m2)
    }
}

/// A column label with its nonzero `(row, value)` entries.
type Column = (ColLabel, Vec<(usize, SqrtSum)>);

/// Coupled basis state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColLabel {
    pub target: IrrepLabel,
    pub copy: u8,
    pub state: So4State,
}

/// Exact change of basis from product to coupled states, stored by column.
#[derive(Debug, Clone)]
pub struct CouplingMatrix {
    pub source: IrrepLabel,
    pub rows: Vec<RowLabel>,
    pub cols: Vec<ColLabel>,
    /// For each column, its nonzero entries as `(row, value)` sorted by row.
    pub columns: Vec<Vec<(usize, SqrtSum)>>,
}

impl CouplingMatrix {
    /// Nonzero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &SqrtSum)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    /// Same data stored by row.
    pub fn row_major(&self) -> Vec<Vec<(usize, SqrtSum)>> {
        let mut rows = vec![Vec::new(); self.rows.len()];
        for (r, c, v) in self.entries() {
            rows[r].push((c, v.clone()));
        }
        rows
    }

    pub fn get(&self, row: usize, col: usize) -> SqrtSum {
        self.columns[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|i| self.columns[col][i].1.clone())
            .unwrap_or_default()
    }
}

/// The fourteen states of `(1,1)`.
pub fn fourteen_states() -> Vec<So4State> {
    So4State::enumerate(&branching(IrrepLabel::FOURTEEN))
}

/// Builds the coupling matrix over every present channel, including the
/// second diagonal copy and the lowering channels.
pub fn coupling_matrix(source: IrrepLabel) -> Result<CouplingMatrix> {
    let source_states = So4State::enumerate(&branching(source));
    let part_states = fourteen_states();
    let mut rows = Vec::with_capacity(source_states.len() * part_states.len());
    for &s in &source_states {
        for &p in &part_states {
            rows.push(RowLabel { source: s, part: p });
        }
    }
    let row_index: HashMap<RowLabel, usize> = rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();

    let mut blocks = Vec::new();
    for ch in present_channels(source) {
        let target = source.shifted(ch)?;
        for t in branching(target) {
            blocks.push((ch, target, t));
        }
    }
    let built: Vec<Result<Vec<Column>>> = blocks
        .par_iter()
        .map(|&(ch, target, t)| {
            let reduced_col = column(source, ch, t, false)?;
            let mut out = Vec::new();
            for mt1 in t.j1().projections() {
                for mt2 in t.j2().projections() {
                    let mut entries = Vec::new();
                    for (s, e, r) in &reduced_col {
                        if r.is_zero() {
                            continue;
                        }
                        let p = e.part;
                        for mp1 in p.j1().projections() {
                            let ms1 = mt1 - mp1;
                            if ms1.abs() > s.j1() {
                                continue;
                            }
                            let c1 = su2_cg(&Su2CgKey::new(s.j1(), ms1, p.j1(), mp1, t.j1(), mt1))?;
                            if c1.is_zero() {
                                continue;
                            }
                            let rc1 = r * &c1;
                            for mp2 in p.j2().projections() {
                                let ms2 = mt2 - mp2;
                                if ms2.abs() > s.j2() {
                                    continue;
                                }
                                let c2 = su2_cg(&Su2CgKey::new(s.j2(), ms2, p.j2(), mp2, t.j2(), mt2))?;
                                if c2.is_zero() {
                                    continue;
                                }
                                let row = RowLabel {
                                    source: So4State { so4: *s, m1: ms1, m2: ms2 },
                                    part: So4State { so4: p, m1: mp1, m2: mp2 },
                                };
                                entries.push((row_index[&row], &rc1 * &c2));
                            }
                        }
                    }
                    entries.sort_by_key(|(r, _)| *r);
                    let label = ColLabel { target, copy: ch.copy, state: So4State { so4: t, m1: mt1, m2: mt2 } };
                    out.push((label, entries));
                }
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for b in built {
        all.extend(b?);
    }
    all.sort_by_key(|a| a.0);
    let (cols, columns) = all.into_iter().unzip();
    Ok(CouplingMatrix { source, rows, cols, columns })
}

/// Exact sparse inner product of two index-sorted vectors.
pub fn sparse_dot(a: &[(usize, SqrtSum)], b: &[(usize, SqrtSum)]) -> SqrtSum {
    let mut acc = SqrtSum::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &(&a[i].1 * &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// First failing pair of an orthonormality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramFailure {
    pub a: usize,
    pub b: usize,
    pub value: SqrtSum,
}

/// Checks `⟨v_a, v_b⟩ = δ_ab` exactly. Vectors are grouped by a key on which
/// distinct groups have disjoint supports, so only same-group pairs are
/// multiplied out.
pub fn check_orthonormal<K: Eq + std::hash::Hash + Send + Sync>(
    vectors: &[Vec<(usize, SqrtSum)>],
    group: impl Fn(usize) -> K,
) -> std::result::Result<(), GramFailure> {
    let mut groups: HashMap<K, Vec<usize>> = HashMap::new();
    for i in 0..vectors.len() {
        groups.entry(group(i)).or_default().push(i);
    }
    let mut groups: Vec<Vec<usize>> = groups.into_values().collect();
    groups.sort();
    let failures: Vec<GramFailure> = groups
        .par_iter()
        .filter_map(|members| {
            for (x, &a) in members.iter().enumerate() {
                for &b in &members[x..] {
                    let v = sparse_dot(&vectors[a], &vectors[b]);
                    let ok = if a == b { v.is_one() } else { v.is_zero() };
                    if !ok {
                        return Some(GramFailure { a, b, value: v });
                    }
                }
            }
            None
        })
        .collect();
    match failures.into_iter().min_by_key(|f| (f.a, f.b)) {
        Some(f) => Err(f),
        None => Ok(()),
    }
}

/// Column orthonormality of a coupling matrix. Columns are grouped by the
/// total projections `(M₁, M₂)` of their rows, which are shared by all
/// entries of a column.
pub fn check_columns(m: &CouplingMatrix) -> std::result::Result<(), GramFailure> {
    check_orthonormal(&m.columns, |c| {
        let st = m.cols[c].state;
        (st.m1, st.m2)
    })
}

/// Row orthonormality, grouping rows by their total projections.
pub fn check_rows(m: &CouplingMatrix) -> std::result::Result<(), GramFailure> {
    let rows = m.row_major();
    check_orthonormal(&rows, |r| m.rows[r].total())
}

/// Sum of `dim(target)` over the distinct `(target, copy)` blocks of the columns.
pub fn column_dimension(m: &CouplingMatrix) -> u64 {
    let mut seen: Vec<(IrrepLabel, u8)> = m.cols.iter().map(|c| (c.target, c.copy)).collect();
    seen.dedup();
    seen.iter().map(|(t, _)| dim(*t)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn irrep(s: &str) -> IrrepLabel {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_source_embeds_the_fourteen() {
        let m = coupling_matrix(IrrepLabel::TRIVIAL).unwrap();
        assert_eq!((m.rows.len(), m.cols.len()), (14, 14));
        for (c, col) in m.columns.iter().enumerate() {
            assert_eq!(col.len(), 1);
            let (r, v) = &col[0];
            assert_eq!(m.rows[*r].part, m.cols[c].state);
            assert!(v.is_one() || (-v).is_one());
        }
    }

    #[test]
    fn selection_rule_on_projections() {
        let s = So4State::new("1/2,1/2".parse().unwrap(), HalfInt::HALF, HalfInt::HALF).unwrap();
        let p = So4State::new("1,1".parse().unwrap(), HalfInt::ONE, HalfInt::ZERO).unwrap();
        let t = So4State::new("1/2,1/2".parse().unwrap(), HalfInt::HALF, HalfInt::HALF).unwrap();
        let key = FullKey {
            target: irrep("1,1"),
            copy: 1,
            target_state: t,
            source: irrep("1/2,1/2"),
            source_state: s,
            part_state: p,
        };
        assert!(full(&key).unwrap().is_zero());
    }

    #[test]
    fn full_agrees_with_matrix() {
        let src = irrep("1/2,1/2");
        let m = coupling_matrix(src).unwrap();
        for (c, col) in m.cols.iter().enumerate() {
            for (r, row) in m.rows.iter().enumerate().step_by(7) {
                let key = FullKey {
                    target: col.target,
                    copy: col.copy,
                    target_state: col.state,
                    source: src,
                    source_state: row.source,
                    part_state: row.part,
                };
                assert_eq!(full(&key).unwrap(), m.get(r, c));
            }
        }
    }

    #[test]
    fn half_zero_source_is_orthogonal() {
        let m = coupling_matrix(irrep("1/2,0")).unwrap();
        assert_eq!((m.rows.len(), m.cols.len()), (56, 56));
        check_columns(&m).unwrap();
        check_rows(&m).unwrap();
    }
}
