//! Reduced (isoscalar) coefficients for `Λ ⊗ (1,1) → Λ″`.
//!
//! Six raising shifts and the first diagonal copy are evaluated from stored
//! closed forms. The second diagonal copy is the Gram–Schmidt completion of an
//! auxiliary vector against the first, and the six lowering shifts follow from
//! the raising ones by the exchange symmetry of the coupling.

mod tables;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rat, Rational, SqrtSum};
use crate::labels::{branching, channel_present, dim, in_branching, Channel, HalfInt, IrrepLabel, So4Label};
use crate::su2::triangle;
use tables::{Entry, Factor, Formula, Mono, Part};

/// One row of a reduced table: the SO(4) shift `t − s` and the SO(4)
/// component of the 14 that carries it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EntryShift {
    #[serde(rename = "twice_dj1")]
    pub dj1: HalfInt,
    #[serde(rename = "twice_dj2")]
    pub dj2: HalfInt,
    pub part: So4Label,
}

impl EntryShift {
    pub fn new(dj1: HalfInt, dj2: HalfInt, part: So4Label) -> Result<Self> {
        let (a, b) = (dj1.twice, dj2.twice);
        let p = (part.j1().twice, part.j2().twice);
        let ok = match p {
            (2, 2) => a.abs() <= 2 && b.abs() <= 2 && a % 2 == 0 && b % 2 == 0,
            (1, 1) => a.abs() == 1 && b.abs() == 1,
            (0, 0) => a == 0 && b == 0,
            _ => false,
        };
        if !ok {
            return Err(Error::MalformedKey(format!(
                "({dj1},{dj2}) with part {part} is not a table row"
            )));
        }
        Ok(Self { dj1, dj2, part })
    }

    pub fn from_twice(a: i64, b: i64, p1: i64, p2: i64) -> Result<Self> {
        Self::new(
            HalfInt::from_twice(a),
            HalfInt::from_twice(b),
            So4Label::from_twice(p1, p2)?,
        )
    }

    /// The fourteen rows, ordered by doubled shift then part.
    pub fn all() -> Vec<EntryShift> {
        let mut out = Vec::with_capacity(14);
        for a in [-2, 0, 2] {
            for b in [-2, 0, 2] {
                out.push(Self::from_twice(a, b, 2, 2).expect("vector row"));
            }
        }
        for a in [-1, 1] {
            for b in [-1, 1] {
                out.push(Self::from_twice(a, b, 1, 1).expect("spinor row"));
            }
        }
        out.push(Self::from_twice(0, 0, 0, 0).expect("scalar row"));
        out.sort();
        out
    }

    fn table_part(self) -> Part {
        match self.part.j1().twice {
            2 => Part::Vector,
            1 => Part::Spinor,
            _ => Part::Scalar,
        }
    }

    /// `s + (dj₁, dj₂)`, rejecting negative spins.
    pub fn apply(self, s: So4Label) -> Result<So4Label> {
        So4Label::new(s.j1() + self.dj1, s.j2() + self.dj2)
    }

    /// The same row seen from the other side of the coupling.
    pub fn reversed(self) -> EntryShift {
        EntryShift { dj1: -self.dj1, dj2: -self.dj2, part: self.part }
    }
}

impl fmt::Display for EntryShift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |h: HalfInt| if h.twice > 0 { format!("+{h}") } else { h.to_string() };
        write!(f, "{},{} part {}", sign(self.dj1), sign(self.dj2), self.part)
    }
}

impl FromStr for EntryShift {
    type Err = Error;

    /// `"+1,-1;1,1"`: the shift, then the part.
    fn from_str(s: &str) -> Result<Self> {
        let (shift, part) = s
            .split_once(';')
            .ok_or_else(|| Error::MalformedKey(format!("expected \"dj1,dj2;p1,p2\", got {s:?}")))?;
        let (a, b) = shift
            .split_once(',')
            .ok_or_else(|| Error::MalformedKey(format!("bad shift {shift:?}")))?;
        EntryShift::new(a.parse()?, b.parse()?, part.parse()?)
    }
}

/// Address of one reduced coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReducedKey {
    pub source: IrrepLabel,
    pub channel: Channel,
    pub source_so4: So4Label,
    pub entry: EntryShift,
}

impl ReducedKey {
    pub fn target(&self) -> Result<IrrepLabel> {
        self.source.shifted(self.channel)
    }

    pub fn target_so4(&self) -> Result<So4Label> {
        self.entry.apply(self.source_so4)
    }
}

/// Inner-product data of the diagonal channel: `⟨aux, copy₁⟩ = x`,
/// `⟨aux, aux⟩ = h2`, and `norm2 = h2 − x²` is the squared length of the
/// component of aux orthogonal to copy 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixingData {
    pub x: SqrtSum,
    pub x_squared: Rational,
    pub h2: Rational,
    pub norm2: Rational,
}

fn half(h: HalfInt) -> Rational {
    h.to_rational()
}

fn eval_mono(m: &Mono, vars: &[Rational; 4]) -> Rational {
    let mut v = rat(m.num, m.den);
    for (x, &p) in vars.iter().zip(&m.pow) {
        for _ in 0..p {
            v *= x;
        }
    }
    v
}

fn eval_factor(f: &Factor, vars: &[Rational; 4]) -> Rational {
    match f {
        Factor::Lin(c) => {
            let mut v = Rational::from_integer(BigInt::from(c[4]));
            for (x, &k) in vars.iter().zip(c) {
                if k != 0 {
                    v += x * Rational::from_integer(BigInt::from(k));
                }
            }
            v
        }
        Factor::Poly(ms) => ms.iter().map(|m| eval_mono(m, vars)).sum(),
    }
}

fn describe(f: &Factor) -> String {
    const NAMES: [&str; 4] = ["j1", "j2", "jb1", "jb2"];
    match f {
        Factor::Lin(c) => {
            let mut s = String::new();
            for (k, name) in c.iter().zip(NAMES) {
                if *k != 0 {
                    s.push_str(&format!("{k:+}{name}"));
                }
            }
            format!("({s}{:+})", c[4])
        }
        Factor::Poly(_) => "(polynomial)".to_string(),
    }
}

fn show(vars: &[Rational; 4]) -> String {
    format!("j=({},{}) jbar=({},{})", vars[0], vars[1], vars[2], vars[3])
}

/// Evaluates a closed form without any selection-rule guard.
fn eval_formula(formula: &Formula, vars: &[Rational; 4]) -> Result<SqrtSum> {
    let mut pre = rat(formula.sign * formula.scale.0, formula.scale.1);
    for f in formula.prefactor {
        pre *= eval_factor(f, vars);
    }
    // Individual factors may be negative in pairs; only the radical as a
    // whole has to be nonnegative.
    let mut under = rat(formula.radical_scale.0, formula.radical_scale.1);
    for f in formula.radicand {
        under *= eval_factor(f, vars);
    }
    for f in formula.denominator {
        let v = eval_factor(f, vars);
        if v.is_zero() {
            return Err(Error::FormulaDomain(format!(
                "denominator factor {} vanishes at {}",
                describe(f),
                show(vars)
            )));
        }
        under /= v;
    }
    if under.is_negative() {
        return Err(Error::FormulaDomain(format!("negative radicand {under} at {}", show(vars))));
    }
    if pre.is_zero() || under.is_zero() {
        return Ok(SqrtSum::zero());
    }
    Ok(SqrtSum::sqrt_rational(&under)?.scale(&pre))
}

fn vars(source: IrrepLabel, s: So4Label) -> [Rational; 4] {
    [half(s.j1()), half(s.j2()), half(source.jbar1()), half(source.jbar2())]
}

/// Table family of a channel with a stored closed form.
#[derive(Debug, Clone, Copy)]
enum Family {
    Raising(&'static [Entry; 14], &'static [Factor; 8]),
    Diagonal,
    Aux,
}

impl Family {
    fn entries(self) -> &'static [Entry; 14] {
        match self {
            Family::Raising(t, _) => t,
            Family::Diagonal => &tables::DIAGONAL_FIRST,
            Family::Aux => &tables::DIAGONAL_AUX,
        }
    }

    fn entry(self, e: EntryShift) -> &'static Entry {
        let key = (e.dj1.twice, e.dj2.twice);
        let part = e.table_part();
        self.entries()
            .iter()
            .find(|x| x.shift == key && x.part == part)
            .expect("every family lists all fourteen rows")
    }
}

fn raising_family(ch: Channel) -> Option<Family> {
    use tables::*;
    let f = match (ch.shift1.twice, ch.shift2.twice) {
        (2, 2) => Family::Raising(&RAISE_BOTH, &NORM_RAISE_BOTH),
        (2, 0) => Family::Raising(&RAISE_FIRST, &NORM_RAISE_FIRST),
        (0, 2) => Family::Raising(&RAISE_SECOND, &NORM_RAISE_SECOND),
        (2, -2) => Family::Raising(&RAISE_FIRST_LOWER_SECOND, &NORM_RAISE_FIRST_LOWER_SECOND),
        (1, 1) => Family::Raising(&HALF_RAISE_BOTH, &NORM_HALF_RAISE_BOTH),
        (1, -1) => Family::Raising(&HALF_RAISE_FIRST_LOWER_SECOND, &NORM_HALF_RAISE_FIRST_LOWER_SECOND),
        (0, 0) if ch.copy == 1 => Family::Diagonal,
        _ => return None,
    };
    Some(f)
}

/// Value of the expression under the inverse square root of the
/// normalization, or `None` for channels without one.
fn normalization_radicand(family: Channel, source: IrrepLabel) -> Option<Rational> {
    let v = vars(source, So4Label::from_twice(0, 0).expect("zero label"));
    match raising_family(family)? {
        Family::Raising(_, norm) => Some(norm.iter().map(|f| eval_factor(f, &v)).product()),
        Family::Diagonal => Some(tables::NORM_DIAGONAL.iter().map(|m| eval_mono(m, &v)).sum()),
        Family::Aux => None,
    }
}

/// Whether a factor inside the normalization's inverse square root vanishes
/// (or the expression is otherwise nonpositive) at `source`.
///
/// For the second diagonal copy the criterion is `H² − X² = 0`.
pub fn normalization_vanishes(family: Channel, source: IrrepLabel) -> Option<bool> {
    if family.is_diagonal() && family.copy == 2 {
        return Some(match mixing(source) {
            Ok(m) => !m.norm2.is_positive(),
            Err(_) => true,
        });
    }
    let v = vars(source, So4Label::from_twice(0, 0).expect("zero label"));
    match raising_family(family)? {
        Family::Raising(_, norm) => Some(norm.iter().any(|f| !eval_factor(f, &v).is_positive())),
        Family::Diagonal => normalization_radicand(family, source).map(|q| !q.is_positive()),
        Family::Aux => None,
    }
}

/// Family normalization constant; defined for the six raising shifts and
/// the first diagonal copy.
pub fn normalization(family: Channel, source: IrrepLabel) -> Result<SqrtSum> {
    let q = normalization_radicand(family, source).ok_or_else(|| {
        Error::MalformedKey(format!("channel {family} has no tabulated normalization"))
    })?;
    if normalization_vanishes(family, source) == Some(true) {
        return Err(Error::ChannelAbsent(format!(
            "normalization of {family} vanishes at {source}"
        )));
    }
    let scale = if family.is_diagonal() { rat(20, 1) } else { Rational::one() };
    Ok(SqrtSum::sqrt_rational(&(scale / q))?)
}

fn check_source_so4(source: IrrepLabel, s: So4Label) -> Result<()> {
    if in_branching(source, s) {
        Ok(())
    } else {
        Err(Error::MalformedKey(format!("{s} is not in the branching of {source}")))
    }
}

fn require_present(source: IrrepLabel, ch: Channel) -> Result<IrrepLabel> {
    let target = source.shifted(ch).map_err(|_| {
        Error::ChannelAbsent(format!("{source} shifted by {ch} is not an irrep"))
    })?;
    if !channel_present(source, ch) {
        return Err(Error::ChannelAbsent(format!("{target} (copy {}) is not in {source} ⊗ 14", ch.copy)));
    }
    Ok(target)
}

/// The selection rules common to every table: the target SO(4) label must
/// occur in the target irrep, and each SO(3) factor must satisfy the triangle
/// rule with the matching spin of the 14-component.
fn passes_guard(target: IrrepLabel, s: So4Label, t: So4Label, part: So4Label) -> bool {
    in_branching(target, t) && triangle(s.j1(), part.j1(), t.j1()) && triangle(s.j2(), part.j2(), t.j2())
}

/// Stored closed form for `family`, guarded; `target` is only used by the guard.
fn tabulated(family: Family, target: IrrepLabel, key: &ReducedKey) -> Result<SqrtSum> {
    let t = key.target_so4()?;
    if !passes_guard(target, key.source_so4, t, key.entry.part) {
        return Ok(SqrtSum::zero());
    }
    let entry = family.entry(key.entry);
    let value = eval_formula(&entry.formula, &vars(key.source, key.source_so4))?;
    match family {
        Family::Aux => Ok(value),
        _ => Ok(&value * &normalization(key.channel, key.source)?),
    }
}

/// Any reduced coefficient: raising, diagonal (both copies) or lowering.
pub fn reduced(key: &ReducedKey) -> Result<SqrtSum> {
    check_source_so4(key.source, key.source_so4)?;
    let target = require_present(key.source, key.channel)?;
    if key.channel.is_lowering() {
        return symmetry_extend(target, key.source, key.target_so4()?, key.source_so4, key.entry);
    }
    if key.channel.copy == 2 {
        return reduced_copy2(key);
    }
    let family = raising_family(key.channel).expect("raising or first diagonal copy");
    tabulated(family, target, key)
}

/// Row of the auxiliary diagonal table.
pub fn reduced_aux(key: &ReducedKey) -> Result<SqrtSum> {
    check_source_so4(key.source, key.source_so4)?;
    if !key.channel.is_diagonal() {
        return Err(Error::MalformedKey(format!("auxiliary rows belong to the diagonal channel, not {}", key.channel)));
    }
    key.target_so4()?;
    tabulated(Family::Aux, key.source, key)
}

/// The first-copy and auxiliary inner-product constants of the diagonal channel.
pub fn mixing(source: IrrepLabel) -> Result<MixingData> {
    let diag = Channel::from_twice(0, 0, 1).expect("diagonal channel");
    let ng = normalization(diag, source)?;
    let a = half(source.jbar1());
    let b = half(source.jbar2());
    let one = Rational::one();
    let common = (&a - &b) * (&a - &b + &one) * (&a + &b + &one) * (&a + &b + rat(2, 1));
    let a_term = rat(4, 1) * &a * (&a + rat(2, 1));
    let x_poly = &common * (&a_term + rat(4, 1) * &b * (&b + &one) - rat(5, 1)) * rat(-1, 10);
    let x = ng.scale(&x_poly);
    let x_squared = x.square_rational().expect("single term");
    let b2 = &b * &b;
    let quartic = rat(4, 1) * &b2 * &b2 + rat(8, 1) * &b2 * &b
        - &b2 * (rat(8, 1) * &a * (&a + rat(2, 1)) + rat(9, 1))
        - &b * (rat(8, 1) * &a * (&a + rat(2, 1)) + rat(13, 1))
        + (&a + &one) * (&a + &one) * (&a_term - rat(5, 1));
    let h2 = common * quartic * rat(1, 5);
    let norm2 = &h2 - &x_squared;
    Ok(MixingData { x, x_squared, h2, norm2 })
}

/// Second diagonal copy: `(aux − X·copy₁)/√(H² − X²)`.
pub fn reduced_copy2(key: &ReducedKey) -> Result<SqrtSum> {
    check_source_so4(key.source, key.source_so4)?;
    let absent = || Error::ChannelAbsent(format!("{} has a single diagonal copy", key.source));
    if !key.channel.is_diagonal() || key.channel.copy != 2 {
        return Err(Error::MalformedKey(format!("{} is not the second diagonal copy", key.channel)));
    }
    let m = match mixing(key.source) {
        Ok(m) if m.norm2.is_positive() => m,
        _ => return Err(absent()),
    };
    let first = ReducedKey { channel: Channel::from_twice(0, 0, 1)?, ..*key };
    let c1 = tabulated(Family::Diagonal, key.source, &first)?;
    let aux = reduced_aux(&first)?;
    let inv = SqrtSum::sqrt_rational(&m.norm2)?.inverse()?;
    Ok(&(&aux - &(&m.x * &c1)) * &inv)
}

/// Phase and dimension factor relating `R(Λ″ t ← Λ s; P)` to
/// `R(Λ s ← Λ″ t; P)`.
pub fn symmetry_factor(
    target: IrrepLabel,
    source: IrrepLabel,
    target_so4: So4Label,
    source_so4: So4Label,
    part: So4Label,
) -> Result<SqrtSum> {
    let exponent = target.jbar1().twice - source.jbar1().twice + source.jbar2().twice
        - target.jbar2().twice
        + target_so4.j1().twice
        - source_so4.j1().twice
        + target_so4.j2().twice
        - source_so4.j2().twice
        + part.j1().twice
        + part.j2().twice;
    if exponent % 2 != 0 {
        return Err(Error::MalformedKey(format!(
            "non-integral exchange phase for {target} {target_so4} ← {source} {source_so4}"
        )));
    }
    let num = dim(target) as i64 * source_so4.dim() as i64;
    let den = dim(source) as i64 * target_so4.dim() as i64;
    let root = SqrtSum::sqrt_rational(&rat(num, den))?;
    Ok(if (exponent / 2) % 2 == 0 { root } else { -root })
}

/// Lowering coefficient `R(target t ← source s; P)` obtained from the
/// tabulated raising coefficient with source and target exchanged.
pub fn symmetry_extend(
    target: IrrepLabel,
    source: IrrepLabel,
    target_so4: So4Label,
    source_so4: So4Label,
    entry: EntryShift,
) -> Result<SqrtSum> {
    let shift = Channel::new(
        target.jbar1() - source.jbar1(),
        target.jbar2() - source.jbar2(),
        1,
    )?;
    if !shift.is_lowering() {
        return Err(Error::MalformedKey(format!("{source} → {target} is not a lowering shift")));
    }
    check_source_so4(source, source_so4)?;
    require_present(source, shift)?;
    if entry.apply(source_so4)? != target_so4 {
        return Err(Error::MalformedKey(format!(
            "{target_so4} is not {source_so4} shifted by {entry}"
        )));
    }
    if !passes_guard(target, source_so4, target_so4, entry.part) {
        return Ok(SqrtSum::zero());
    }
    let mirrored = ReducedKey {
        source: target,
        channel: shift.mirror(),
        source_so4: target_so4,
        entry: entry.reversed(),
    };
    let raised = reduced(&mirrored)?;
    if raised.is_zero() {
        return Ok(raised);
    }
    Ok(&symmetry_factor(target, source, target_so4, source_so4, entry.part)? * &raised)
}

/// Evaluates the stored closed form for `key` with no selection-rule guard.
///
/// Returns `Ok(None)` when the channel has no stored form (lowering or second
/// copy). Used to check that the guard only ever discards values that the
/// formulas themselves make zero.
pub fn unguarded(key: &ReducedKey, aux: bool) -> Result<Option<SqrtSum>> {
    let family = if aux { Some(Family::Aux) } else { raising_family(key.channel) };
    let Some(family) = family else {
        return Ok(None);
    };
    let value = eval_formula(&family.entry(key.entry).formula, &vars(key.source, key.source_so4))?;
    Ok(Some(match family {
        Family::Aux => value,
        _ => &value * &normalization(key.channel, key.source)?,
    }))
}

/// Reduced vector of one coupled channel at a fixed target SO(4) label:
/// the entries `R(Λ″ t ← Λ s; P)` for every table row with `s = t − shift`
/// in the branching of the source. Rows that do not exist are skipped.
pub fn column(source: IrrepLabel, channel: Channel, t: So4Label, aux: bool) -> Result<Vec<(So4Label, EntryShift, SqrtSum)>> {
    let mut out = Vec::new();
    for e in EntryShift::all() {
        let s1 = t.j1() - e.dj1;
        let s2 = t.j2() - e.dj2;
        let Ok(s) = So4Label::new(s1, s2) else { continue };
        if !in_branching(source, s) {
            continue;
        }
        let key = ReducedKey { source, channel, source_so4: s, entry: e };
        let v = if aux { reduced_aux(&key)? } else { reduced(&key)? };
        out.push((s, e, v));
    }
    Ok(out)
}

/// Every SO(4) label reachable from the source branching by a table row.
pub fn reachable_targets(source: IrrepLabel) -> Vec<So4Label> {
    let mut out: Vec<So4Label> = branching(source)
        .into_iter()
        .flat_map(|s| EntryShift::all().into_iter().filter_map(move |e| e.apply(s).ok()))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests;
