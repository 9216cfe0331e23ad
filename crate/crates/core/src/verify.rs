//! Exact invariant suites shared by the test targets and the command line.
//!
//! Each suite returns the number of identities it checked, or the first
//! counterexample as text.

use std::collections::BTreeMap;

use crate::exactnum::SqrtSum;
use crate::full::{check_columns, check_rows, column_dimension, coupling_matrix};
use crate::labels::{
    branching, decompose_with_14, dim, in_branching, multiplicity, present_channels, Channel, HalfInt, IrrepLabel,
    So4Label,
};
use crate::reduced::{
    column, mixing, normalization_vanishes, reachable_targets, reduced, symmetry_extend, symmetry_factor,
    EntryShift, ReducedKey,
};
use crate::su2::{su2_cg, Su2CgKey};

pub type Outcome = std::result::Result<usize, String>;

type Vector = BTreeMap<(So4Label, EntryShift), SqrtSum>;

fn dot(a: &Vector, b: &Vector) -> SqrtSum {
    a.iter()
        .filter_map(|(k, x)| b.get(k).map(|y| x * y))
        .sum()
}

fn vector(source: IrrepLabel, ch: Channel, t: So4Label, aux: bool) -> Result<Vector, String> {
    let col = column(source, ch, t, aux).map_err(|e| format!("{source} {ch} at {t}: {e}"))?;
    Ok(col.into_iter().map(|(s, e, v)| ((s, e), v)).collect())
}

/// Gram matrix of the reduced vectors at every target SO(4) label is the identity.
pub fn reduced_unitarity(source: IrrepLabel) -> Outcome {
    let channels = present_channels(source);
    let mut checked = 0;
    for t in reachable_targets(source) {
        let mut vecs = Vec::new();
        for &ch in &channels {
            let target = source.shifted(ch).expect("present");
            if in_branching(target, t) {
                vecs.push((ch, vector(source, ch, t, false)?));
            }
        }
        for (i, (ca, va)) in vecs.iter().enumerate() {
            for (cb, vb) in &vecs[i..] {
                let g = dot(va, vb);
                let ok = if ca == cb { g.is_one() } else { g.is_zero() };
                if !ok {
                    return Err(format!("source {source}, t = {t}: ⟨{ca}, {cb}⟩ = {g}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// `⟨aux, copy₁⟩ = X` and `⟨aux, aux⟩ = H²` at every SO(4) label of the source.
/// Sources without a first diagonal copy are skipped.
pub fn mixing_identities(source: IrrepLabel) -> Outcome {
    let diag = Channel::from_twice(0, 0, 1).expect("diagonal");
    if !present_channels(source).contains(&diag) {
        return Ok(0);
    }
    let m = mixing(source).map_err(|e| format!("{source}: {e}"))?;
    let h2 = SqrtSum::from_rational(m.h2.clone());
    let mut checked = 0;
    for t in branching(source) {
        let c1 = vector(source, diag, t, false)?;
        let aux = vector(source, diag, t, true)?;
        let x = dot(&aux, &c1);
        if x != m.x {
            return Err(format!("source {source}, t = {t}: ⟨aux, copy1⟩ = {x}, X = {}", m.x));
        }
        let a = dot(&aux, &aux);
        if a != h2 {
            return Err(format!("source {source}, t = {t}: ⟨aux, aux⟩ = {a}, H² = {h2}"));
        }
        checked += 2;
    }
    Ok(checked)
}

/// For every raising coefficient `R(Λ″ t ← Λ s; P)`: the exchange relation
/// reproduces the engine's lowering coefficient, and applying it again
/// returns `R` exactly.
pub fn symmetry_involution(source: IrrepLabel) -> Outcome {
    let mut checked = 0;
    for ch in present_channels(source).into_iter().filter(|c| c.is_raising()) {
        let target = source.shifted(ch).expect("present");
        for s in branching(source) {
            for e in EntryShift::all() {
                let Ok(t) = e.apply(s) else { continue };
                let key = ReducedKey { source, channel: ch, source_so4: s, entry: e };
                let r = reduced(&key).map_err(|err| format!("{key:?}: {err}"))?;
                if !in_branching(target, t) {
                    continue;
                }
                let forward = symmetry_factor(source, target, s, t, e.part).map_err(|x| x.to_string())?;
                let lowered = &forward * &r;
                let engine = symmetry_extend(source, target, s, t, e.reversed()).map_err(|x| x.to_string())?;
                if lowered != engine {
                    return Err(format!("{target} {t} → {source} {s}: relation gives {lowered}, engine {engine}"));
                }
                let back = symmetry_factor(target, source, t, s, e.part).map_err(|x| x.to_string())?;
                let twice = &back * &lowered;
                if twice != r {
                    return Err(format!("{source} {s} → {target} {t} part {}: {r} became {twice}", e.part));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// The normalization expression that governs a channel: its own for the
/// raising shifts and the diagonal copies, the mirrored one evaluated at the
/// target for the lowering shifts.
fn governing_zero(source: IrrepLabel, ch: Channel, target: IrrepLabel) -> bool {
    if ch.is_lowering() {
        normalization_vanishes(ch.mirror(), target).expect("raising family")
    } else {
        normalization_vanishes(ch, source).expect("tabulated family")
    }
}

/// Racah–Speiser presence agrees with the zero-factor criterion of the
/// normalizations, channel by channel, and the dimension audit holds.
pub fn presence_crosscheck(source: IrrepLabel) -> Outcome {
    let mut checked = 0;
    for ch in Channel::all() {
        let Ok(target) = source.shifted(ch) else { continue };
        let present = multiplicity(source, target) >= ch.copy as u32;
        let vanishes = governing_zero(source, ch, target);
        if present == vanishes {
            return Err(format!(
                "{source} {ch}: Racah–Speiser says present = {present}, normalization zero = {vanishes}"
            ));
        }
        checked += 1;
    }
    let total: u64 = decompose_with_14(source).iter().map(|e| e.multiplicity as u64 * dim(e.target)).sum();
    if total != 14 * dim(source) {
        return Err(format!("{source}: Σ mult·dim = {total}, expected {}", 14 * dim(source)));
    }
    Ok(checked + 1)
}

/// Columns of the coupling matrix are exactly orthonormal and the matrix is
/// square; rows are checked too when `rows` is set.
pub fn full_unitarity(source: IrrepLabel, rows: bool) -> Outcome {
    let m = coupling_matrix(source).map_err(|e| format!("{source}: {e}"))?;
    let expected = 14 * dim(source) as usize;
    if m.rows.len() != expected || m.cols.len() != expected {
        return Err(format!("{source}: {} rows, {} columns, expected {expected}", m.rows.len(), m.cols.len()));
    }
    if column_dimension(&m) as usize != expected {
        return Err(format!("{source}: column blocks span {} states", column_dimension(&m)));
    }
    check_columns(&m).map_err(|f| {
        format!("{source}: ⟨{:?}, {:?}⟩ = {}", m.cols[f.a], m.cols[f.b], f.value)
    })?;
    if rows {
        check_rows(&m).map_err(|f| format!("{source}: rows {:?}, {:?} give {}", m.rows[f.a], m.rows[f.b], f.value))?;
    }
    Ok(m.cols.len() * (m.cols.len() + 1) / 2)
}

/// Orthogonality and completeness of the SU(2) coefficients for
/// `j₁, j₂ ≤ max_twice/2`.
pub fn su2_unitarity(max_twice: i64) -> Outcome {
    let mut checked = 0;
    for a in 0..=max_twice {
        for b in 0..=max_twice {
            let (j1, j2) = (HalfInt::from_twice(a), HalfInt::from_twice(b));
            let js: Vec<HalfInt> = ((a - b).abs()..=a + b).step_by(2).map(HalfInt::from_twice).collect();
            let cg = |m1: HalfInt, m2: HalfInt, j: HalfInt, m: HalfInt| {
                su2_cg(&Su2CgKey::new(j1, m1, j2, m2, j, m)).map_err(|e| e.to_string())
            };
            // Orthogonality: fixed M, all pairs J, J'.
            for mt in (-(a + b)..=a + b).step_by(2).map(HalfInt::from_twice) {
                let pairs: Vec<(HalfInt, HalfInt)> = j1
                    .projections()
                    .filter_map(|m1| {
                        let m2 = mt - m1;
                        (m2.abs() <= j2).then_some((m1, m2))
                    })
                    .collect();
                let live: Vec<HalfInt> = js.iter().copied().filter(|j| mt.abs() <= *j).collect();
                for (x, &ja) in live.iter().enumerate() {
                    for &jb in &live[x..] {
                        let mut acc = SqrtSum::zero();
                        for &(m1, m2) in &pairs {
                            acc += &(&cg(m1, m2, ja, mt)? * &cg(m1, m2, jb, mt)?);
                        }
                        let ok = if ja == jb { acc.is_one() } else { acc.is_zero() };
                        if !ok {
                            return Err(format!("j1={j1} j2={j2} M={mt}: Σ⟨J={ja}⟩⟨J'={jb}⟩ = {acc}"));
                        }
                        checked += 1;
                    }
                }
                // Completeness within the sector; pairs from different
                // sectors vanish term by term by the projection rule.
                for (x, &(m1, m2)) in pairs.iter().enumerate() {
                    for &(n1, n2) in &pairs[x..] {
                        let mut acc = SqrtSum::zero();
                        for &j in &live {
                            acc += &(&cg(m1, m2, j, mt)? * &cg(n1, n2, j, mt)?);
                        }
                        let ok = if m1 == n1 { acc.is_one() } else { acc.is_zero() };
                        if !ok {
                            return Err(format!("j1={j1} j2={j2}: completeness at ({m1},{m2}),({n1},{n2}) gives {acc}"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}
