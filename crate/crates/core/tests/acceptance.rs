//! The eight primary acceptance criteria. Each prints one PASS or FAIL line;
//! the target fails if any criterion does.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;

use so5cg::exactnum::rat;
use so5cg::full::{check_columns, check_rows, coupling_matrix};
use so5cg::oracle::{compare_with, numeric_decompose, OracleConfig};
use so5cg::reduced::{reduced, ReducedKey};
use so5cg::su2::{su2_cg, Su2CgKey};
use so5cg::verify::{
    full_unitarity, mixing_identities, presence_crosscheck, reduced_unitarity, su2_unitarity, symmetry_involution,
    Outcome,
};
use so5cg::{channel_present, decompose_with_14, dim, Channel, IrrepLabel, SqrtSum};

type Verdict = Result<String, String>;

fn irrep(s: &str) -> IrrepLabel {
    s.parse().unwrap()
}

/// Runs `check` on every label in parallel and totals the identities checked.
fn over(labels: Vec<IrrepLabel>, check: impl Fn(IrrepLabel) -> Outcome + Sync + Send) -> Result<usize, String> {
    labels.into_par_iter().map(check).collect::<Result<Vec<_>, _>>().map(|v| v.iter().sum())
}

fn reduced_unitarity_criterion() -> Verdict {
    let labels = IrrepLabel::all_up_to(5);
    let n = labels.len();
    let checked = over(labels, reduced_unitarity)?;
    Ok(format!("{checked} exact Gram entries over {n} sources with 2j̄₁ ≤ 5"))
}

fn full_unitarity_criterion() -> Verdict {
    let sources: Vec<IrrepLabel> =
        ["0,0", "1/2,0", "1/2,1/2", "1,0", "1,1", "3/2,1/2", "2,1"].iter().map(|s| irrep(s)).collect();
    for &s in &sources {
        let total: u64 = decompose_with_14(s).iter().map(|e| e.multiplicity as u64 * dim(e.target)).sum();
        if total != 14 * dim(s) {
            return Err(format!("dimension audit at {s}: {total} ≠ {}", 14 * dim(s)));
        }
    }
    let checked = over(sources.clone(), |s| full_unitarity(s, false))?;
    Ok(format!("{checked} exact column products over {} sources, largest 14·{}", sources.len(), dim(irrep("2,1"))))
}

fn mixing_criterion() -> Verdict {
    let labels = IrrepLabel::all_up_to(5);
    let with_copy = labels.iter().filter(|&&l| channel_present(l, Channel::from_twice(0, 0, 1).unwrap())).count();
    let checked = over(labels, mixing_identities)?;
    Ok(format!("{checked} identities over {with_copy} sources with a first diagonal copy"))
}

fn symmetry_criterion() -> Verdict {
    let checked = over(IrrepLabel::all_up_to(4), symmetry_involution)?;
    let key = |s: &str, e: &str| ReducedKey {
        source: IrrepLabel::FOURTEEN,
        channel: "-1,-1".parse().unwrap(),
        source_so4: s.parse().unwrap(),
        entry: e.parse().unwrap(),
    };
    let eval = |s: &str, e: &str| reduced(&key(s, e)).map_err(|err| err.to_string());
    let main = eval("1,1", "-1,-1;1,1")?;
    let sq = main.square_rational();
    if sq != Some(rat(9, 14)) {
        return Err(format!("lowering (1,1) → (0,0) at part (1,1) is {main}, square {sq:?}"));
    }
    let total: SqrtSum = [("1,1", "-1,-1;1,1"), ("1/2,1/2", "-1/2,-1/2;1/2,1/2"), ("0,0", "0,0;0,0")]
        .iter()
        .map(|(s, e)| eval(s, e).map(|v| &v * &v))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    if !total.is_one() {
        return Err(format!("lowering squares to (0,0) sum to {total}"));
    }
    Ok(format!("{checked} raising entries restored; lowering example squares to 9/14, column sums to 1"))
}

fn trivial_source_criterion() -> Verdict {
    let m = coupling_matrix(IrrepLabel::TRIVIAL).map_err(|e| e.to_string())?;
    if m.rows.len() != 14 || m.cols.len() != 14 {
        return Err(format!("shape {}×{}", m.rows.len(), m.cols.len()));
    }
    let mut negative = 0;
    for (c, col) in m.columns.iter().enumerate() {
        let [(r, v)] = col.as_slice() else {
            return Err(format!("column {:?} has {} nonzero entries", m.cols[c], col.len()));
        };
        if m.rows[*r].part != m.cols[c].state || m.cols[c].target != IrrepLabel::FOURTEEN {
            return Err(format!("column {:?} lands on row {:?}", m.cols[c], m.rows[*r]));
        }
        if v.is_one() {
            continue;
        }
        if (-v).is_one() {
            negative += 1;
        } else {
            return Err(format!("entry {v} at column {:?}", m.cols[c]));
        }
    }
    check_columns(&m).map_err(|f| format!("columns {} and {}: {}", f.a, f.b, f.value))?;
    check_rows(&m).map_err(|f| format!("rows {} and {}: {}", f.a, f.b, f.value))?;
    Ok(format!("14×14 signed permutation on matching states, {negative} entries equal to -1, orthogonal"))
}

fn oracle_criterion() -> Verdict {
    let config = OracleConfig::default();
    let sources: Vec<IrrepLabel> = IrrepLabel::all_up_to(8).into_iter().filter(|&l| dim(l) <= 35).collect();
    let mismatches: Vec<String> = sources
        .par_iter()
        .filter_map(|&s| {
            let expected: Vec<(IrrepLabel, usize)> =
                decompose_with_14(s).iter().map(|e| (e.target, e.multiplicity as usize)).collect();
            match numeric_decompose(s, &config) {
                Ok(d) if d.summary() == expected => None,
                Ok(d) => Some(format!("{s}: numeric {:?}", d.summary())),
                Err(e) => Some(format!("{s}: {e}")),
            }
        })
        .collect();
    if !mismatches.is_empty() {
        return Err(format!("decomposition mismatch: {}", mismatches.join("; ")));
    }
    let mut worst: f64 = 0.0;
    for s in ["1/2,0", "1/2,1/2", "1,0"] {
        let r = compare_with(irrep(s), &config, None).map_err(|e| e.to_string())?;
        if !r.decomposition_matches {
            return Err(format!("{s}: block structure differs"));
        }
        for b in &r.blocks {
            let dev = b.modulus_dev.ok_or_else(|| format!("{s}: no modulus deviation for {}", b.target))?;
            if dev > 1e-9 {
                return Err(format!("{s} → {}: modulus deviation {dev:e}", b.target));
            }
            worst = worst.max(dev);
        }
    }
    let big = OracleConfig { cap: 81, ..config };
    let r = compare_with(irrep("2,1"), &big, None).map_err(|e| e.to_string())?;
    let proj = r
        .blocks
        .iter()
        .find_map(|b| b.projector_dev)
        .ok_or("(2,1): no repeated block compared")?;
    if proj > 1e-8 {
        return Err(format!("(2,1): projector deviation {proj:e}"));
    }
    Ok(format!(
        "{} decompositions match; modulus deviation ≤ {worst:.1e}; (2,1) projector deviation {proj:.1e}",
        sources.len()
    ))
}

fn su2_criterion() -> Verdict {
    let checked = su2_unitarity(6)?;
    let cg = |k: [i64; 6]| su2_cg(&Su2CgKey::from_twice(k[0], k[1], k[2], k[3], k[4], k[5])).unwrap();
    let root = |n, d| SqrtSum::sqrt_rational(&rat(n, d)).unwrap();
    for j in 0..=6 {
        for m in (-j..=j).step_by(2) {
            if !cg([j, m, 0, 0, j, m]).is_one() {
                return Err(format!("⟨{j}/2 {m}/2 0 0|{j}/2 {m}/2⟩ ≠ 1"));
            }
        }
    }
    let table = [
        ([1, 1, 1, -1, 0, 0], root(1, 2)),
        ([1, -1, 1, 1, 0, 0], -root(1, 2)),
        ([2, 2, 2, -2, 0, 0], root(1, 3)),
    ];
    for (k, want) in table {
        let got = cg(k);
        if got != want {
            return Err(format!("twice-key {k:?}: {got}, expected {want}"));
        }
    }
    Ok(format!("{checked} orthogonality and completeness sums for j ≤ 3; tabulated values match"))
}

fn presence_criterion() -> Verdict {
    let checked = over(IrrepLabel::all_up_to(6), presence_crosscheck)?;
    let d = decompose_with_14(IrrepLabel::FOURTEEN);
    let total: u64 = d.iter().map(|e| e.multiplicity as u64 * dim(e.target)).sum();
    if d.len() != 6 || total != 196 {
        return Err(format!("14 ⊗ 14 has {} irreps of total dimension {total}", d.len()));
    }
    for bad in ["3/2,3/2", "3/2,1/2"] {
        if d.iter().any(|e| e.target == irrep(bad)) {
            return Err(format!("14 ⊗ 14 contains ({bad})"));
        }
    }
    Ok(format!("{checked} channel verdicts agree for 2j̄₁ ≤ 6; 14 ⊗ 14 = 6 irreps, dimension 196"))
}

#[test]
fn primary_criteria() {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("reduced unitarity", reduced_unitarity_criterion),
        ("full-matrix unitarity", full_unitarity_criterion),
        ("mixing identities", mixing_criterion),
        ("symmetry involution", symmetry_criterion),
        ("trivial source", trivial_source_criterion),
        ("oracle equivalence", oracle_criterion),
        ("SO(3) layer", su2_criterion),
        ("presence logic", presence_criterion),
    ];
    let results: Vec<(Verdict, f64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, f)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    (f(), start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| (Err("panicked".into()), 0.0)))
            .collect()
    });
    // Written to the stdout handle so the verdicts show even when the
    // harness captures output.
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, ((name, _), (verdict, secs))) in criteria.iter().zip(&results).enumerate() {
        match verdict {
            Ok(msg) => writeln!(out, "PASS criterion {} ({name}): {msg} [{secs:.1}s]", i + 1).unwrap(),
            Err(msg) => {
                writeln!(out, "FAIL criterion {} ({name}): {msg} [{secs:.1}s]", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

/// Radicands stay small enough for trial division across the suite's sources.
#[test]
fn radicands_stay_small() {
    let largest = ["1/2,1/2", "1,1", "3/2,1/2", "2,1"]
        .par_iter()
        .map(|s| coupling_matrix(irrep(s)).unwrap().entries().map(|(_, _, v)| v.largest_radicand()).max().unwrap())
        .max()
        .unwrap();
    assert!(largest < 1_000_000_000, "largest radicand {largest}");
}
