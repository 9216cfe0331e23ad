//! Numerical decomposition of `source ⊗ 14` into irreducible blocks.

use super::rep::{build_irrep, fix_phase, generate_module, tag_module, CVec, Product, RepMatrices, WeightSpace, NULL_TOL};
use super::{OracleConfig, OracleError};
use crate::full::So4State;
use crate::labels::{dim, IrrepLabel};

/// One irreducible block of the product, possibly repeated.
#[derive(Debug, Clone)]
pub struct NumericBlock {
    pub target: IrrepLabel,
    pub multiplicity: usize,
    /// Eigenvalue of `Σ M_ab²` on the block.
    pub casimir: f64,
    /// For every copy, the tagged coupled vectors in the product basis.
    pub copies: Vec<Vec<(So4State, CVec)>>,
}

#[derive(Debug, Clone)]
pub struct NumericDecomposition {
    pub source: IrrepLabel,
    pub source_rep: RepMatrices,
    pub fourteen_rep: RepMatrices,
    pub blocks: Vec<NumericBlock>,
}

impl NumericDecomposition {
    /// Product basis index of `|source state⟩ ⊗ |14 state⟩`.
    pub fn product_index(&self, source: &So4State, part: &So4State) -> Option<usize> {
        let i = self.source_rep.index_of(source)?;
        let k = self.fourteen_rep.index_of(part)?;
        Some(i * self.fourteen_rep.dim() + k)
    }

    pub fn product_dim(&self) -> usize {
        self.source_rep.dim() * self.fourteen_rep.dim()
    }

    /// `(target, multiplicity)` pairs in target order.
    pub fn summary(&self) -> Vec<(IrrepLabel, usize)> {
        let mut out: Vec<_> = self.blocks.iter().map(|b| (b.target, b.multiplicity)).collect();
        out.sort();
        out
    }
}

/// Dominance order on weights `(2m₁, 2m₂)`: compares the highest-weight
/// components `m₁ + m₂`, then `m₁ − m₂`.
fn weight_key(w: (i64, i64)) -> (i64, i64) {
    (w.0 + w.1, w.0 - w.1)
}

/// Casimir ratio relative to the 14: `λ·(λ+2ρ)` with `ρ = (3/2, 1/2)`.
pub fn casimir_ratio(label: IrrepLabel) -> f64 {
    let l1 = label.jbar1().to_f64() + label.jbar2().to_f64();
    let l2 = label.jbar1().to_f64() - label.jbar2().to_f64();
    (l1 * (l1 + 3.0) + l2 * (l2 + 1.0)) / 10.0
}

/// Splits `source ⊗ 14` by repeatedly taking the highest remaining weight:
/// its weight space, orthogonal to the blocks already found, consists of
/// highest-weight vectors, one per copy of a new block.
pub fn numeric_decompose(source: IrrepLabel, config: &OracleConfig) -> Result<NumericDecomposition, OracleError> {
    let source_rep = build_irrep(source, config.cap, config.eigen_tol)?;
    let fourteen_rep = build_irrep(IrrepLabel::FOURTEEN, config.cap.max(14), config.eigen_tol)?;
    let space = Product::new(&source_rep, &fourteen_rep);
    let sectors = space.sectors();
    let c14 = {
        let mut e = CVec::zeros(fourteen_rep.dim());
        e[0] = num_complex::Complex64::new(1.0, 0.0);
        fourteen_rep.casimir(&e).dotc(&e).re
    };
    let mut used: std::collections::BTreeMap<(i64, i64), Vec<CVec>> = Default::default();
    let mut blocks = Vec::new();
    let mut covered = 0;
    while covered < space.len() {
        let (&w, indices) = sectors
            .iter()
            .filter(|(w, idx)| used.get(w).map_or(0, Vec::len) < idx.len())
            .max_by_key(|(w, _)| weight_key(**w))
            .expect("uncovered sector");
        // Pivoted Gram–Schmidt over the unit vectors of the sector.
        let mut found: Vec<CVec> = Vec::new();
        for &i in indices {
            let mut v = CVec::zeros(space.len());
            v[i] = num_complex::Complex64::new(1.0, 0.0);
            for basis in [used.get(&w).map_or(&[][..], Vec::as_slice), found.as_slice()] {
                for _ in 0..2 {
                    for u in basis {
                        let p = u.dotc(&v);
                        v -= u * p;
                    }
                }
            }
            let n = v.norm();
            if n > 1e-6 {
                found.push(v / num_complex::Complex64::new(n, 0.0));
            }
        }
        let expected_hw = indices.len() - used.get(&w).map_or(0, Vec::len);
        if found.len() != expected_hw {
            return Err(OracleError::DegenerateBasis(format!(
                "weight {w:?}: {} highest-weight vectors, expected {expected_hw}",
                found.len()
            )));
        }
        let target = IrrepLabel::from_twice(w.0, w.1)
            .map_err(|_| OracleError::EigenFailure(format!("highest weight {w:?} is not dominant")))?;
        let d = dim(target) as usize;
        let mut casimir = 0.0;
        let mut copies = Vec::new();
        for mut hw in found {
            fix_phase(&mut hw);
            let cv = space.casimir(&hw);
            casimir = hw.dotc(&cv).re;
            let residual = (cv - &hw * num_complex::Complex64::new(casimir, 0.0)).norm();
            if residual > config.eigen_tol {
                return Err(OracleError::EigenFailure(format!("Casimir residual {residual:e} on {target}")));
            }
            let expected_ratio = casimir_ratio(target);
            if (casimir / c14 - expected_ratio).abs() > 1e-9 {
                return Err(OracleError::EigenFailure(format!(
                    "Casimir ratio {} on {target}, expected {expected_ratio}",
                    casimir / c14
                )));
            }
            let module = generate_module(&space, &sectors, hw, d)?;
            for (u, vs) in &module {
                let slot = used.entry(*u).or_default();
                for v in vs {
                    // Numerical hygiene: keep `used` exactly orthonormal.
                    let mut v = v.clone();
                    for x in slot.iter() {
                        let p = x.dotc(&v);
                        v -= x * p;
                    }
                    let n = v.norm();
                    if n < NULL_TOL {
                        return Err(OracleError::DegenerateBasis(format!("block {target} overlaps an earlier block")));
                    }
                    slot.push(v / num_complex::Complex64::new(n, 0.0));
                }
            }
            copies.push(tag_module(&space, &module, config.eigen_tol)?);
            covered += d;
        }
        blocks.push(NumericBlock { target, multiplicity: copies.len(), casimir, copies });
    }
    blocks.sort_by_key(|b| b.target);
    Ok(NumericDecomposition { source, source_rep, fourteen_rep, blocks })
}
