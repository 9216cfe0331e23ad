//! Spin(5) irreps built numerically from the spinor and the vector.

use std::collections::BTreeMap;
use std::sync::Mutex;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::OracleError;
use crate::full::So4State;
use crate::labels::{dim, HalfInt, IrrepLabel, So4Label};

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

/// Generator order: `M_ab` for `a < b`, zero-based, lexicographic.
pub const PAIRS: [(usize, usize); 10] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Largest numerical noise accepted when a vector should vanish.
pub(crate) const NULL_TOL: f64 = 1e-8;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn pair_index(a: usize, b: usize) -> (usize, f64) {
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    (PAIRS.iter().position(|&p| p == (lo, hi)).expect("valid pair"), sign)
}

/// Five 4×4 matrices with `{Γ_a, Γ_b} = 2δ_ab`.
pub fn gamma5() -> [CMat; 5] {
    let sx = CMat::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
    let sy = CMat::from_row_slice(2, 2, &[c(0.0), -I, I, c(0.0)]);
    let sz = CMat::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]);
    let id = CMat::identity(2, 2);
    [sx.kronecker(&id), sy.kronecker(&id), sz.kronecker(&sx), sz.kronecker(&sy), sz.kronecker(&sz)]
}

/// Hermitian spinor generators `[Γ_a, Γ_b]/(4i)`.
pub fn spinor_generators() -> Vec<CMat> {
    let g = gamma5();
    PAIRS
        .iter()
        .map(|&(a, b)| (&g[a] * &g[b] - &g[b] * &g[a]) / (I * 4.0))
        .collect()
}

/// Hermitian vector generators `−i(e_ab − e_ba)`.
pub fn vector_generators() -> Vec<CMat> {
    PAIRS
        .iter()
        .map(|&(a, b)| {
            let mut m = CMat::zeros(5, 5);
            m[(a, b)] = -I;
            m[(b, a)] = I;
            m
        })
        .collect()
}

/// Linear combination of generators, as (generator index, coefficient).
pub(crate) type Combo = Vec<(usize, Complex64)>;

fn combo(terms: &[(usize, usize, Complex64)]) -> Combo {
    terms
        .iter()
        .map(|&(a, b, k)| {
            let (i, s) = pair_index(a, b);
            (i, k * s)
        })
        .collect()
}

/// Components x, y, z of the two commuting su(2) algebras inside so(4).
pub(crate) fn su2_components(second: bool) -> [Combo; 3] {
    let s = if second { -0.5 } else { 0.5 };
    let h = c(0.5);
    [
        combo(&[(1, 2, h), (0, 3, c(s))]),
        combo(&[(2, 0, h), (1, 3, c(s))]),
        combo(&[(0, 1, h), (2, 3, c(s))]),
    ]
}

/// `J₋ = J_x − iJ_y` for one of the two su(2) factors.
pub(crate) fn lowering(second: bool) -> Combo {
    let [x, y, _] = su2_components(second);
    x.into_iter().chain(y.into_iter().map(|(g, k)| (g, -I * k))).collect()
}

/// A representation in a basis of weight vectors: every basis vector has
/// definite `(2m₁, 2m₂)`.
pub trait WeightSpace: Sync {
    fn len(&self) -> usize;
    fn weight(&self, i: usize) -> (i64, i64);
    fn apply(&self, generator: usize, v: &CVec) -> CVec;

    fn apply_combo(&self, combo: &Combo, v: &CVec) -> CVec {
        let mut out = CVec::zeros(self.len());
        for &(g, k) in combo {
            out += self.apply(g, v) * k;
        }
        out
    }

    fn sectors(&self) -> BTreeMap<(i64, i64), Vec<usize>> {
        let mut out: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
        for i in 0..self.len() {
            out.entry(self.weight(i)).or_default().push(i);
        }
        out
    }

    /// `Σ M_ab²`.
    fn casimir(&self, v: &CVec) -> CVec {
        let mut out = CVec::zeros(self.len());
        for g in 0..PAIRS.len() {
            out += self.apply(g, &self.apply(g, v));
        }
        out
    }

    /// `J²` of one su(2) factor.
    fn su2_square(&self, second: bool, v: &CVec) -> CVec {
        let mut out = CVec::zeros(self.len());
        for comp in su2_components(second) {
            out += self.apply_combo(&comp, &self.apply_combo(&comp, v));
        }
        out
    }
}

/// Dense generators in a weight basis, without SO(4) tags.
#[derive(Debug, Clone)]
pub struct DenseWeightRep {
    pub generators: Vec<CMat>,
    pub weights: Vec<(i64, i64)>,
}

impl WeightSpace for DenseWeightRep {
    fn len(&self) -> usize {
        self.weights.len()
    }
    fn weight(&self, i: usize) -> (i64, i64) {
        self.weights[i]
    }
    fn apply(&self, generator: usize, v: &CVec) -> CVec {
        &self.generators[generator] * v
    }
}

fn dense_combo(gens: &[CMat], combo: &Combo) -> CMat {
    let n = gens[0].nrows();
    let mut out = CMat::zeros(n, n);
    for &(g, k) in combo {
        out += &gens[g] * k;
    }
    out
}

/// Rotates a small representation into a basis where `J₁z` and `J₂z` are diagonal.
fn weight_basis(gens: Vec<CMat>) -> Result<DenseWeightRep, OracleError> {
    let z1 = dense_combo(&gens, &su2_components(false)[2]);
    let z2 = dense_combo(&gens, &su2_components(true)[2]);
    let mix = &z1 + &z2 * c(std::f64::consts::SQRT_2);
    let eig = mix.symmetric_eigen();
    let u = eig.eigenvectors;
    let ud = u.adjoint();
    let rotate = |m: &CMat| &ud * m * &u;
    let d1 = rotate(&z1);
    let d2 = rotate(&z2);
    let mut weights = Vec::new();
    for i in 0..u.ncols() {
        let w1 = 2.0 * d1[(i, i)].re;
        let w2 = 2.0 * d2[(i, i)].re;
        if (w1 - w1.round()).abs() > 1e-9 || (w2 - w2.round()).abs() > 1e-9 {
            return Err(OracleError::EigenFailure(format!("non-half-integral weight ({w1}, {w2})/2")));
        }
        weights.push((w1.round() as i64, w2.round() as i64));
    }
    Ok(DenseWeightRep { generators: gens.iter().map(rotate).collect(), weights })
}

/// A Spin(5) irrep with its generators in a tagged SO(4) ⊃ SO(2)×SO(2) basis.
#[derive(Debug, Clone)]
pub struct RepMatrices {
    pub label: IrrepLabel,
    /// `M_ab` in [`PAIRS`] order.
    pub generators: Vec<CMat>,
    pub basis: Vec<So4State>,
}

impl RepMatrices {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, state: &So4State) -> Option<usize> {
        self.basis.iter().position(|s| s == state)
    }

    /// Largest deviation from the so(5) brackets, measured against the
    /// vector representation's structure constants.
    pub fn commutator_residual(&self) -> f64 {
        bracket_residual(&self.generators)
    }
}

impl WeightSpace for RepMatrices {
    fn len(&self) -> usize {
        self.basis.len()
    }
    fn weight(&self, i: usize) -> (i64, i64) {
        (self.basis[i].m1.twice, self.basis[i].m2.twice)
    }
    fn apply(&self, generator: usize, v: &CVec) -> CVec {
        &self.generators[generator] * v
    }
}

/// `[M_ab, M_cd]` expressed through the vector representation: the
/// structure constants are read off the 5×5 matrices and the residual of
/// `gens` against them is returned.
pub fn bracket_residual(gens: &[CMat]) -> f64 {
    let vec = vector_generators();
    let mut worst = 0.0f64;
    for x in 0..PAIRS.len() {
        for y in 0..PAIRS.len() {
            let cv = &vec[x] * &vec[y] - &vec[y] * &vec[x];
            // Coefficients of the bracket in the vector representation.
            let coeffs: Vec<Complex64> =
                vec.iter().map(|g| (g.adjoint() * &cv).trace() / c(2.0)).collect();
            let lhs = &gens[x] * &gens[y] - &gens[y] * &gens[x];
            let mut rhs = CMat::zeros(lhs.nrows(), lhs.ncols());
            for (g, k) in gens.iter().zip(&coeffs) {
                rhs += g * *k;
            }
            worst = worst.max((lhs - rhs).camax());
        }
    }
    worst
}

/// Tensor product of two weight spaces; index `i·len(b) + k`.
pub struct Product<'a, A: WeightSpace, B: WeightSpace> {
    pub a: &'a A,
    pub b: &'a B,
    gens_a: Vec<CMat>,
    gens_b_t: Vec<CMat>,
}

fn dense_generators<S: WeightSpace>(s: &S) -> Vec<CMat> {
    (0..PAIRS.len())
        .map(|g| {
            let n = s.len();
            let mut m = CMat::zeros(n, n);
            for j in 0..n {
                let mut e = CVec::zeros(n);
                e[j] = c(1.0);
                m.set_column(j, &s.apply(g, &e));
            }
            m
        })
        .collect()
}

impl<'a, A: WeightSpace, B: WeightSpace> Product<'a, A, B> {
    pub fn new(a: &'a A, b: &'a B) -> Self {
        let gens_a = dense_generators(a);
        let gens_b_t = dense_generators(b).into_iter().map(|m| m.transpose()).collect();
        Self { a, b, gens_a, gens_b_t }
    }

    pub fn split(&self, index: usize) -> (usize, usize) {
        (index / self.b.len(), index % self.b.len())
    }
}

impl<A: WeightSpace, B: WeightSpace> WeightSpace for Product<'_, A, B> {
    fn len(&self) -> usize {
        self.a.len() * self.b.len()
    }
    fn weight(&self, i: usize) -> (i64, i64) {
        let (x, y) = self.split(i);
        let (wa, wb) = (self.a.weight(x), self.b.weight(y));
        (wa.0 + wb.0, wa.1 + wb.1)
    }
    fn apply(&self, generator: usize, v: &CVec) -> CVec {
        let (na, nb) = (self.a.len(), self.b.len());
        // Row-major reshape: rows index the first factor.
        let m = CMat::from_row_slice(na, nb, v.as_slice());
        let r = &self.gens_a[generator] * &m + &m * &self.gens_b_t[generator];
        CVec::from_column_slice(r.transpose().as_slice())
    }
}

/// One irreducible submodule, as orthonormal vectors grouped by weight.
pub(crate) type Module = BTreeMap<(i64, i64), Vec<CVec>>;

fn orthogonalize(v: &mut CVec, against: &[CVec]) {
    // Two passes of modified Gram–Schmidt.
    for _ in 0..2 {
        for u in against {
            let p = u.dotc(v);
            *v -= u * p;
        }
    }
}

/// Invariant subspace generated from a highest-weight vector, closed under
/// all ten generators.
pub(crate) fn generate_module<S: WeightSpace>(
    space: &S,
    sectors: &BTreeMap<(i64, i64), Vec<usize>>,
    seed: CVec,
    expected: usize,
) -> Result<Module, OracleError> {
    let mut module: Module = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    let w0 = dominant_weight(space, &seed)?;
    let norm = seed.norm();
    module.insert(w0, vec![seed / c(norm)]);
    queue.push_back((w0, 0usize));
    let mut total = 1;
    while let Some((w, idx)) = queue.pop_front() {
        let v = module[&w][idx].clone();
        for g in 0..PAIRS.len() {
            let r = space.apply(g, &v);
            for (u, indices) in sectors {
                let mut comp = CVec::zeros(space.len());
                let mut any = false;
                for &i in indices {
                    if r[i].norm() > 0.0 {
                        comp[i] = r[i];
                        any = true;
                    }
                }
                if !any {
                    continue;
                }
                let existing = module.entry(*u).or_default();
                orthogonalize(&mut comp, existing);
                let n = comp.norm();
                if n > NULL_TOL {
                    existing.push(comp / c(n));
                    queue.push_back((*u, existing.len() - 1));
                    total += 1;
                    if total > expected {
                        return Err(OracleError::DegenerateBasis(format!(
                            "generated module exceeds {expected} states"
                        )));
                    }
                }
            }
        }
    }
    if total != expected {
        return Err(OracleError::DegenerateBasis(format!("generated {total} states, expected {expected}")));
    }
    Ok(module)
}

fn dominant_weight<S: WeightSpace>(space: &S, v: &CVec) -> Result<(i64, i64), OracleError> {
    let mut found = None;
    for i in 0..space.len() {
        if v[i].norm() > NULL_TOL {
            let w = space.weight(i);
            match found {
                None => found = Some(w),
                Some(x) if x != w => {
                    return Err(OracleError::EigenFailure("seed vector is not a weight vector".into()))
                }
                _ => {}
            }
        }
    }
    found.ok_or_else(|| OracleError::DegenerateBasis("zero seed vector".into()))
}

/// Multiplies the vector by a phase so that its first component of maximal
/// modulus is real and positive.
pub(crate) fn fix_phase(v: &mut CVec) {
    let max = v.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if let Some(x) = v.iter().find(|x| x.norm() >= max - 1e-9) {
        let p = x.conj() / c(x.norm());
        *v *= p;
    }
}

/// Tags every state of a module by `(j₁ j₂; m₁ m₂)`: the top state of each
/// SO(4) multiplet is isolated as the lowest joint eigenvalue of `J₁² + J₂²`
/// in its weight sector, and the rest follow by Condon–Shortley lowering.
pub(crate) fn tag_module<S: WeightSpace>(
    space: &S,
    module: &Module,
    eigen_tol: f64,
) -> Result<Vec<(So4State, CVec)>, OracleError> {
    let mut out = Vec::new();
    let expected: usize = module.values().map(Vec::len).sum();
    for (&(w1, w2), vectors) in module {
        if w1 < 0 || w2 < 0 {
            continue;
        }
        let k = vectors.len();
        if k == 0 {
            continue;
        }
        let applied: Vec<CVec> =
            vectors.iter().map(|v| space.su2_square(false, v) + space.su2_square(true, v)).collect();
        let mut h = CMat::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                h[(i, j)] = vectors[i].dotc(&applied[j]);
            }
        }
        let eig = h.symmetric_eigen();
        let (m1, m2) = (w1 as f64 / 2.0, w2 as f64 / 2.0);
        let floor = m1 * (m1 + 1.0) + m2 * (m2 + 1.0);
        let tops: Vec<usize> =
            (0..k).filter(|&i| (eig.eigenvalues[i] - floor).abs() < 1e-6).collect();
        if tops.len() > 1 {
            return Err(OracleError::DegenerateBasis(format!(
                "{} multiplets share the top weight ({m1}, {m2})",
                tops.len()
            )));
        }
        let Some(&top) = tops.first() else { continue };
        let mut v = CVec::zeros(space.len());
        for (i, u) in vectors.iter().enumerate() {
            v += u * eig.eigenvectors[(i, top)];
        }
        let residual = (space.su2_square(false, &v) + space.su2_square(true, &v) - &v * c(floor)).norm();
        if residual > eigen_tol {
            return Err(OracleError::EigenFailure(format!("J² residual {residual:e} at ({m1}, {m2})")));
        }
        fix_phase(&mut v);
        let so4 = So4Label::from_twice(w1, w2).map_err(|e| OracleError::EigenFailure(e.to_string()))?;
        out.extend(lower_multiplet(space, so4, v, eigen_tol)?);
    }
    if out.len() != expected {
        return Err(OracleError::EigenFailure(format!("tagged {} of {expected} states", out.len())));
    }
    Ok(out)
}

fn lower_once<S: WeightSpace>(
    space: &S,
    second: bool,
    j: HalfInt,
    m: HalfInt,
    v: &CVec,
    eigen_tol: f64,
) -> Result<CVec, OracleError> {
    let factor = ((j + m).to_f64() * (j - m + HalfInt::ONE).to_f64()).sqrt();
    let w = space.apply_combo(&lowering(second), v) / c(factor);
    if (w.norm() - 1.0).abs() > eigen_tol {
        return Err(OracleError::EigenFailure(format!("lowering norm {} at j = {j}, m = {m}", w.norm())));
    }
    Ok(w)
}

fn lower_multiplet<S: WeightSpace>(
    space: &S,
    so4: So4Label,
    top: CVec,
    eigen_tol: f64,
) -> Result<Vec<(So4State, CVec)>, OracleError> {
    let mut out = Vec::new();
    let mut row = top;
    for m1 in so4.j1().projections().collect::<Vec<_>>().into_iter().rev() {
        let mut v = row.clone();
        for m2 in so4.j2().projections().collect::<Vec<_>>().into_iter().rev() {
            let state = So4State::new(so4, m1, m2).map_err(|e| OracleError::EigenFailure(e.to_string()))?;
            if m2 > -so4.j2() {
                let next = lower_once(space, true, so4.j2(), m2, &v, eigen_tol)?;
                out.push((state, std::mem::replace(&mut v, next)));
            } else {
                out.push((state, v.clone()));
            }
        }
        if m1 > -so4.j1() {
            row = lower_once(space, false, so4.j1(), m1, &row, eigen_tol)?;
        }
    }
    Ok(out)
}

/// Irrep used as the smaller factor when building `label`, together with
/// whether the other factor is the spinor.
fn recursion_step(label: IrrepLabel) -> (IrrepLabel, bool) {
    let (a, b) = (label.jbar1().twice, label.jbar2().twice);
    if a > b {
        (IrrepLabel::from_twice(a - 1, b).expect("dominant"), true)
    } else {
        (IrrepLabel::from_twice(a - 1, b - 1).expect("dominant"), false)
    }
}

static BUILT: Mutex<BTreeMap<IrrepLabel, RepMatrices>> = Mutex::new(BTreeMap::new());

/// Builds `label` inside `(smaller irrep) ⊗ spinor` or `⊗ vector` from its
/// highest-weight vector. Results are memoized.
pub fn build_irrep(label: IrrepLabel, cap: u64, eigen_tol: f64) -> Result<RepMatrices, OracleError> {
    let d = dim(label);
    if d > cap {
        return Err(OracleError::DimensionCap { label, dim: d, cap });
    }
    if let Some(r) = BUILT.lock().expect("irrep cache").get(&label) {
        return Ok(r.clone());
    }
    let rep = if label == IrrepLabel::TRIVIAL {
        RepMatrices {
            label,
            generators: vec![CMat::zeros(1, 1); PAIRS.len()],
            basis: vec![So4State::new(So4Label::from_twice(0, 0).expect("zero"), HalfInt::ZERO, HalfInt::ZERO)
                .expect("zero state")],
        }
    } else {
        let (smaller, spinor) = recursion_step(label);
        let prev = build_irrep(smaller, cap, eigen_tol)?;
        let small = weight_basis(if spinor { spinor_generators() } else { vector_generators() })?;
        let space = Product::new(&prev, &small);
        let sectors = space.sectors();
        let top = (label.jbar1().twice, label.jbar2().twice);
        let indices = sectors.get(&top).ok_or_else(|| {
            OracleError::DegenerateBasis(format!("no state of weight {top:?} in the ambient product"))
        })?;
        if indices.len() != 1 {
            return Err(OracleError::DegenerateBasis(format!(
                "highest weight of {label} occurs {} times in the ambient product",
                indices.len()
            )));
        }
        let mut seed = CVec::zeros(space.len());
        seed[indices[0]] = c(1.0);
        let module = generate_module(&space, &sectors, seed, d as usize)?;
        let tagged = tag_module(&space, &module, eigen_tol)?;
        restrict(&space, label, tagged)?
    };
    BUILT.lock().expect("irrep cache").insert(label, rep.clone());
    Ok(rep)
}

fn restrict<S: WeightSpace>(
    space: &S,
    label: IrrepLabel,
    mut tagged: Vec<(So4State, CVec)>,
) -> Result<RepMatrices, OracleError> {
    tagged.sort_by_key(|a| a.0);
    let n = tagged.len();
    let basis: Vec<So4State> = tagged.iter().map(|t| t.0).collect();
    let generators = (0..PAIRS.len())
        .map(|g| {
            let images: Vec<CVec> = tagged.iter().map(|(_, v)| space.apply(g, v)).collect();
            CMat::from_fn(n, n, |i, j| tagged[i].1.dotc(&images[j]))
        })
        .collect();
    Ok(RepMatrices { label, generators, basis })
}
