//! Numerical versus analytic coupling coefficients.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::decompose::{numeric_decompose, NumericDecomposition};
use super::rep::{CMat, CVec, WeightSpace};
use super::{OracleConfig, OracleError};
use crate::full::{coupling_matrix, CouplingMatrix, So4State};
use crate::labels::{branching, decompose_with_14, IrrepLabel, So4Label};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockReport {
    pub target: IrrepLabel,
    pub copy_count: usize,
    /// Largest `|numeric − analytic|` after phase alignment; single-copy blocks only.
    pub max_abs_dev: Option<f64>,
    /// Largest `| |numeric| − |analytic| |`; single-copy blocks only.
    pub modulus_dev: Option<f64>,
    /// Frobenius distance of the projectors onto the block; repeated blocks only.
    pub projector_dev: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub schema: String,
    pub source: IrrepLabel,
    pub decomposition_matches: bool,
    pub blocks: Vec<BlockReport>,
    pub pass: bool,
    pub tol: f64,
    pub projector_tol: f64,
    /// Phase mismatches that leave every modulus intact.
    pub notes: Vec<String>,
}

/// A pair of SO(4) multiplets, one from the source and one from the 14.
type Pair = (So4Label, So4Label);

/// Dense analytic columns in the numeric product basis.
struct Analytic {
    columns: HashMap<(IrrepLabel, u8, So4State), CVec>,
}

fn analytic_columns(m: &CouplingMatrix, num: &NumericDecomposition) -> Result<Analytic, OracleError> {
    let n = num.product_dim();
    let mut index = Vec::with_capacity(m.rows.len());
    for r in &m.rows {
        index.push(num.product_index(&r.source, &r.part).ok_or_else(|| {
            OracleError::EigenFailure(format!("numeric basis lacks the product state {r:?}"))
        })?);
    }
    let mut columns = HashMap::new();
    for (label, col) in m.cols.iter().zip(&m.columns) {
        let mut v = CVec::zeros(n);
        for (r, x) in col {
            v[index[*r]] = Complex64::new(x.to_f64(), 0.0);
        }
        columns.insert((label.target, label.copy, label.state), v);
    }
    Ok(Analytic { columns })
}

fn pair_of(num: &NumericDecomposition, index: usize) -> Pair {
    let d = num.fourteen_rep.dim();
    (num.source_rep.basis[index / d].so4, num.fourteen_rep.basis[index % d].so4)
}

/// Phase of every product multiplet pair relative to the analytic basis.
///
/// Within one single-copy column `v = e^{iψ} e^{−iΦ} a`, so the products
/// `v_i v̄_j / (a_i a_j)` are free of the column phase and fix `Φ_j − Φ_i`.
/// Each remaining free component is pinned at zero.
fn solve_gauge(num: &NumericDecomposition, analytic: &Analytic) -> BTreeMap<Pair, (usize, f64)> {
    let mut links: BTreeMap<Pair, Vec<(Pair, f64)>> = BTreeMap::new();
    for block in num.blocks.iter().filter(|b| b.multiplicity == 1) {
        for (state, v) in &block.copies[0] {
            let a = &analytic.columns[&(block.target, 1, *state)];
            let Some(pivot) = (0..a.len()).max_by(|&i, &j| a[i].norm().total_cmp(&a[j].norm())) else { continue };
            if a[pivot].norm() < 1e-12 {
                continue;
            }
            let from = pair_of(num, pivot);
            for j in 0..a.len() {
                if a[j].norm() < 1e-12 {
                    continue;
                }
                let to = pair_of(num, j);
                let diff = (v[pivot] * v[j].conj() / (a[pivot] * a[j])).arg();
                links.entry(from).or_default().push((to, diff));
                links.entry(to).or_default().push((from, -diff));
            }
        }
    }
    let sources = branching(num.source);
    let parts = branching(IrrepLabel::FOURTEEN);
    let mut known: BTreeMap<Pair, (usize, f64)> = BTreeMap::new();
    let mut components = 0;
    for &s in &sources {
        for &p in &parts {
            if known.contains_key(&(s, p)) {
                continue;
            }
            known.insert((s, p), (components, 0.0));
            let mut queue = VecDeque::from([(s, p)]);
            while let Some(x) = queue.pop_front() {
                let base = known[&x].1;
                for &(y, diff) in links.get(&x).map_or(&[][..], Vec::as_slice) {
                    if let std::collections::btree_map::Entry::Vacant(e) = known.entry(y) {
                        e.insert((components, base + diff));
                        queue.push_back(y);
                    }
                }
            }
            components += 1;
        }
    }
    // Pair phases split as `φ_s + φ_p`: three corners of a rectangle in one
    // component fix the fourth, which ties its component in.
    while let Some((old, id, shift)) = rectangle_merge(&sources, &parts, &known) {
        for v in known.values_mut() {
            if v.0 == old {
                *v = (id, v.1 + shift);
            }
        }
    }
    known
}

/// Finds a rectangle with exactly one corner outside the component of the
/// other three; returns that corner's component, the target component and
/// the phase shift that closes the rectangle.
fn rectangle_merge(
    sources: &[So4Label],
    parts: &[So4Label],
    known: &BTreeMap<Pair, (usize, f64)>,
) -> Option<(usize, usize, f64)> {
    for (i, &s) in sources.iter().enumerate() {
        for &s2 in &sources[i + 1..] {
            for (k, &p) in parts.iter().enumerate() {
                for &p2 in &parts[k + 1..] {
                    let corners = [(s, p), (s2, p2), (s, p2), (s2, p)];
                    let ids = corners.map(|c| known[&c].0);
                    let phase = corners.map(|c| known[&c].1);
                    for odd in 0..4 {
                        let id = ids[(odd + 1) % 4];
                        if ids[odd] == id || (0..4).any(|x| x != odd && ids[x] != id) {
                            continue;
                        }
                        // Φ(s,p) + Φ(s2,p2) = Φ(s,p2) + Φ(s2,p).
                        let sign = if odd < 2 { 1.0 } else { -1.0 };
                        let balance = phase[0] + phase[1] - phase[2] - phase[3];
                        return Some((ids[odd], id, -sign * balance));
                    }
                }
            }
        }
    }
    None
}

/// Largest violation of `Φ(s,p) + Φ(s′,p′) ≡ Φ(s,p′) + Φ(s′,p)` over
/// rectangles inside one linked component.
fn factorization_defect(gauge: &BTreeMap<Pair, (usize, f64)>) -> f64 {
    let mut worst = 0.0f64;
    for (&(s, p), &(id, a)) in gauge {
        for (&(s2, p2), &(id2, b)) in gauge {
            let (Some(&(i3, c)), Some(&(i4, d))) = (gauge.get(&(s, p2)), gauge.get(&(s2, p))) else { continue };
            if [id2, i3, i4].iter().all(|&x| x == id) {
                worst = worst.max((Complex64::from_polar(1.0, a + b - c - d) - 1.0).norm());
            }
        }
    }
    worst
}

/// Compares with the default tolerances of `config` and no injected rotation.
pub fn compare(source: IrrepLabel, tol: f64) -> Result<ComparisonReport, OracleError> {
    let config = OracleConfig { tol, ..OracleConfig::default() };
    compare_with(source, &config, None)
}

/// Full comparison. `rotation` mixes the numeric copies of every repeated
/// block by a 2×2 unitary before the projector test.
pub fn compare_with(
    source: IrrepLabel,
    config: &OracleConfig,
    rotation: Option<[[Complex64; 2]; 2]>,
) -> Result<ComparisonReport, OracleError> {
    let num = numeric_decompose(source, config)?;
    let exact: Vec<(IrrepLabel, usize)> =
        decompose_with_14(source).iter().map(|e| (e.target, e.multiplicity as usize)).collect();
    let decomposition_matches = num.summary() == exact;
    let matrix = coupling_matrix(source).map_err(|e| OracleError::EigenFailure(e.to_string()))?;
    let analytic = analytic_columns(&matrix, &num)?;
    let gauge = solve_gauge(&num, &analytic);
    let rows: Vec<Complex64> =
        (0..num.product_dim()).map(|i| Complex64::from_polar(1.0, -gauge[&pair_of(&num, i)].1)).collect();
    let sectors = num_sectors(&num);

    let mut notes = Vec::new();
    let defect = factorization_defect(&gauge);
    if defect > config.tol {
        notes.push(format!("pair phases do not split into multiplet phases (defect {defect:e})"));
    }
    let mut blocks = Vec::new();
    let mut pass = decomposition_matches;
    for block in &num.blocks {
        let mut report = BlockReport {
            target: block.target,
            copy_count: block.multiplicity,
            max_abs_dev: None,
            modulus_dev: None,
            projector_dev: None,
        };
        if block.multiplicity == 1 {
            let mut modulus = 0.0f64;
            let mut complex = 0.0f64;
            for (state, v) in &block.copies[0] {
                let a = analytic.columns.get(&(block.target, 1, *state)).ok_or_else(|| {
                    OracleError::EigenFailure(format!("no analytic column for {} {state:?}", block.target))
                })?;
                let aligned = CVec::from_iterator(a.len(), a.iter().zip(&rows).map(|(x, r)| x * r));
                // Column phase from the largest aligned entry.
                let pivot = (0..a.len()).max_by(|&i, &j| a[i].norm().total_cmp(&a[j].norm())).unwrap_or(0);
                let col = if aligned[pivot].norm() > 0.0 {
                    let z = v[pivot] / aligned[pivot];
                    z / z.norm()
                } else {
                    Complex64::new(1.0, 0.0)
                };
                for ((x, y), z) in v.iter().zip(a.iter()).zip(aligned.iter()) {
                    modulus = modulus.max((x.norm() - y.norm()).abs());
                    complex = complex.max((x - z * col).norm());
                }
            }
            if modulus > config.tol {
                pass = false;
            } else if complex > config.tol {
                notes.push(format!(
                    "{}: moduli agree but phases differ by up to {complex:e} after alignment",
                    block.target
                ));
            }
            report.max_abs_dev = Some(complex);
            report.modulus_dev = Some(modulus);
        } else {
            let dev = projector_deviation(&num, &analytic, block.target, &rows, &sectors, rotation)?;
            if dev > config.projector_tol {
                pass = false;
            }
            report.projector_dev = Some(dev);
        }
        blocks.push(report);
    }
    Ok(ComparisonReport {
        schema: "so5cg/1".into(),
        source,
        decomposition_matches,
        blocks,
        pass,
        tol: config.tol,
        projector_tol: config.projector_tol,
        notes,
    })
}

fn num_sectors(num: &NumericDecomposition) -> BTreeMap<(i64, i64), Vec<usize>> {
    let space = super::rep::Product::new(&num.source_rep, &num.fourteen_rep);
    space.sectors()
}

/// Frobenius distance between the numeric and analytic projectors onto a
/// repeated block, summed over weight sectors.
fn projector_deviation(
    num: &NumericDecomposition,
    analytic: &Analytic,
    target: IrrepLabel,
    rows: &[Complex64],
    sectors: &BTreeMap<(i64, i64), Vec<usize>>,
    rotation: Option<[[Complex64; 2]; 2]>,
) -> Result<f64, OracleError> {
    let block = num.blocks.iter().find(|b| b.target == target).expect("block present");
    let mut numeric: BTreeMap<(i64, i64), Vec<CVec>> = BTreeMap::new();
    let mut exact: BTreeMap<(i64, i64), Vec<CVec>> = BTreeMap::new();
    let weight = |s: &So4State| (s.m1.twice, s.m2.twice);
    let copies: Vec<HashMap<So4State, &CVec>> =
        block.copies.iter().map(|c| c.iter().map(|(s, v)| (*s, v)).collect()).collect();
    for (state, _) in &block.copies[0] {
        let vs: Vec<&CVec> = copies.iter().map(|c| c[state]).collect();
        let mixed: Vec<CVec> = match (rotation, vs.as_slice()) {
            (Some(u), [a, b]) => vec![*a * u[0][0] + *b * u[1][0], *a * u[0][1] + *b * u[1][1]],
            _ => vs.iter().map(|v| (*v).clone()).collect(),
        };
        numeric.entry(weight(state)).or_default().extend(mixed);
        for copy in 1..=block.multiplicity as u8 {
            let a = analytic.columns.get(&(target, copy, *state)).ok_or_else(|| {
                OracleError::EigenFailure(format!("no analytic column for {target} copy {copy}"))
            })?;
            let rotated = CVec::from_iterator(a.len(), a.iter().zip(rows).map(|(x, r)| x * r));
            exact.entry(weight(state)).or_default().push(rotated);
        }
    }
    let mut total = 0.0;
    for (w, idx) in sectors {
        let (Some(nv), Some(av)) = (numeric.get(w), exact.get(w)) else { continue };
        let k = idx.len();
        let projector = |vs: &[CVec]| {
            let mut p = CMat::zeros(k, k);
            for v in vs {
                let r = CVec::from_iterator(k, idx.iter().map(|&i| v[i]));
                p += &r * r.adjoint();
            }
            p
        };
        total += (projector(nv) - projector(av)).norm_squared();
    }
    Ok(total.sqrt())
}
