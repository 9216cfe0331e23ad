use super::rep::WeightSpace;
use super::*;
use crate::labels::{branching, dim, IrrepLabel};
use num_complex::Complex64;

fn irrep(s: &str) -> IrrepLabel {
    s.parse().unwrap()
}

#[test]
fn gamma_matrices_anticommute() {
    let g = gamma5();
    for a in 0..5 {
        for b in 0..5 {
            let ac = &g[a] * &g[b] + &g[b] * &g[a];
            let want = if a == b { CMat::identity(4, 4) * Complex64::new(2.0, 0.0) } else { CMat::zeros(4, 4) };
            assert_eq!(ac, want, "{a} {b}");
        }
    }
    for m in &g {
        assert!(m.iter().all(|x| [0.0, 1.0].contains(&x.norm())));
    }
}

#[test]
fn small_representations_close() {
    assert!(bracket_residual(&spinor_generators()) < 1e-12);
    assert!(bracket_residual(&vector_generators()) < 1e-12);
}

#[test]
fn built_irreps_have_the_right_content() {
    let config = OracleConfig::default();
    for label in IrrepLabel::all_up_to(4).into_iter().filter(|l| dim(*l) <= 64) {
        let rep = build_irrep(label, config.cap, config.eigen_tol).unwrap();
        assert_eq!(rep.dim() as u64, dim(label));
        assert!(rep.commutator_residual() < 1e-10, "{label}");
        let mut content: Vec<_> = rep.basis.iter().map(|s| s.so4).collect();
        content.dedup();
        assert_eq!(content, branching(label), "{label}");
        for g in &rep.generators {
            assert!((g - g.adjoint()).camax() < 1e-12);
        }
    }
}

#[test]
fn fourteen_casimir_is_scalar() {
    let rep = build_irrep(IrrepLabel::FOURTEEN, 64, 1e-10).unwrap();
    assert_eq!(rep.dim(), 14);
    let mut c = CMat::zeros(14, 14);
    for g in &rep.generators {
        c += g * g;
    }
    let v = c[(0, 0)];
    assert!((c - CMat::identity(14, 14) * v).camax() < 1e-12);
    // λ·(λ+2ρ) = 10 for the 14 with these generators.
    assert!((v.re - 10.0).abs() < 1e-12);
    let spinor = build_irrep(irrep("1/2,0"), 64, 1e-10).unwrap();
    let e = CVec::from_element(4, Complex64::new(0.5, 0.0));
    let cv = spinor.casimir(&e);
    assert!((cv[0].re / 0.5 - 10.0 * casimir_ratio(irrep("1/2,0"))).abs() < 1e-12);
}

#[test]
fn dimension_cap_is_enforced() {
    let err = build_irrep(irrep("2,1"), 64, 1e-10).unwrap_err();
    assert!(matches!(err, OracleError::DimensionCap { dim: 81, .. }));
}

#[test]
fn decomposition_examples() {
    let config = OracleConfig::default();
    let d = numeric_decompose(IrrepLabel::TRIVIAL, &config).unwrap();
    assert_eq!(d.summary(), vec![(IrrepLabel::FOURTEEN, 1)]);
    let d = numeric_decompose(IrrepLabel::FOURTEEN, &config).unwrap();
    assert_eq!(d.blocks.len(), 6);
    assert_eq!(d.summary().iter().map(|(t, m)| dim(*t) * *m as u64).sum::<u64>(), 196);
    let d = numeric_decompose(irrep("3/2,1/2"), &config).unwrap();
    assert!(d.summary().contains(&(irrep("3/2,1/2"), 2)));
}

#[test]
fn trivial_and_spinor_comparisons_pass() {
    for s in ["0,0", "1/2,0"] {
        let r = compare(irrep(s), 1e-9).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.notes.is_empty(), "{r:?}");
    }
}
