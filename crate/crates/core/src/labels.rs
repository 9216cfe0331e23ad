//! Half-integer labels, Spin(5) irreps, their SO(3)×SO(3) content, and the
//! decomposition of `Λ ⊗ (1,1)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// `n/2` stored as the integer `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt {
    pub twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    pub const fn int(n: i64) -> Self {
        Self { twice: 2 * n }
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn abs(self) -> Self {
        Self { twice: self.twice.abs() }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.twice), BigInt::from(2))
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// `2x + 1`, the dimension of spin `x`.
    pub fn multiplet(self) -> i64 {
        self.twice + 1
    }

    /// The values `-x, -x+1, …, x`.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> + Clone {
        (-self.twice..=self.twice)
            .step_by(2)
            .map(HalfInt::from_twice)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `3`, `-1`, `+1`, `3/2`, `-1/2`, `0.5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedKey(format!("not a half-integer: {s:?}"));
        let t = s.trim();
        let t = t.strip_prefix('+').unwrap_or(t);
        if let Some((n, d)) = t.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            return match d {
                1 => Ok(HalfInt::int(n)),
                2 => Ok(HalfInt::from_twice(n)),
                _ => Err(bad()),
            };
        }
        if let Ok(n) = t.parse::<i64>() {
            return Ok(HalfInt::int(n));
        }
        let x: f64 = t.parse().map_err(|_| bad())?;
        let twice = 2.0 * x;
        if twice.fract() != 0.0 || twice.abs() > 1e15 {
            return Err(bad());
        }
        Ok(HalfInt::from_twice(twice as i64))
    }
}

fn parse_pair(s: &str) -> Result<(HalfInt, HalfInt)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::MalformedKey(format!("expected \"a,b\", got {s:?}")))?;
    Ok((a.parse()?, b.parse()?))
}

/// A Spin(5) irrep `(j̄₁, j̄₂)` with `j̄₁ ≥ j̄₂ ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TwiceRepr", into = "TwiceRepr")]
pub struct IrrepLabel {
    jbar1: HalfInt,
    jbar2: HalfInt,
}

/// JSON form shared by irrep and SO(4) labels.
#[derive(Serialize, Deserialize)]
struct TwiceRepr {
    twice_j1: i64,
    twice_j2: i64,
}

impl TryFrom<TwiceRepr> for IrrepLabel {
    type Error = Error;
    fn try_from(r: TwiceRepr) -> Result<Self> {
        IrrepLabel::from_twice(r.twice_j1, r.twice_j2)
    }
}

impl From<IrrepLabel> for TwiceRepr {
    fn from(l: IrrepLabel) -> Self {
        TwiceRepr { twice_j1: l.jbar1.twice, twice_j2: l.jbar2.twice }
    }
}

impl IrrepLabel {
    /// The 14-dimensional irrep `(1,1)`.
    pub const FOURTEEN: IrrepLabel = IrrepLabel { jbar1: HalfInt::ONE, jbar2: HalfInt::ONE };
    pub const TRIVIAL: IrrepLabel = IrrepLabel { jbar1: HalfInt::ZERO, jbar2: HalfInt::ZERO };

    pub fn new(jbar1: HalfInt, jbar2: HalfInt) -> Result<Self> {
        if jbar2.twice < 0 || jbar1 < jbar2 {
            return Err(Error::MalformedKey(format!(
                "irrep ({jbar1},{jbar2}) needs j̄₁ ≥ j̄₂ ≥ 0"
            )));
        }
        Ok(Self { jbar1, jbar2 })
    }

    pub fn from_twice(a: i64, b: i64) -> Result<Self> {
        Self::new(HalfInt::from_twice(a), HalfInt::from_twice(b))
    }

    pub fn jbar1(self) -> HalfInt {
        self.jbar1
    }

    pub fn jbar2(self) -> HalfInt {
        self.jbar2
    }

    pub fn is_spinor(self) -> bool {
        !(self.jbar1 + self.jbar2).is_integer()
    }

    /// Doubled B₂ highest weight `(2λ₁, 2λ₂)` with `λ₁ = j̄₁+j̄₂`, `λ₂ = j̄₁−j̄₂`.
    pub fn twice_highest_weight(self) -> (i64, i64) {
        (self.jbar1.twice + self.jbar2.twice, self.jbar1.twice - self.jbar2.twice)
    }

    pub fn dim(self) -> u64 {
        dim(self)
    }

    pub fn shifted(self, ch: Channel) -> Result<IrrepLabel> {
        IrrepLabel::new(self.jbar1 + ch.shift1, self.jbar2 + ch.shift2)
    }

    /// All irreps with `2j̄₁ ≤ max_twice`, in lexicographic order.
    pub fn all_up_to(max_twice: i64) -> Vec<IrrepLabel> {
        let mut out = Vec::new();
        for a in 0..=max_twice {
            for b in 0..=a {
                out.push(IrrepLabel::from_twice(a, b).expect("ordered by construction"));
            }
        }
        out
    }

    fn key(self) -> (i64, i64) {
        (self.jbar1.twice, self.jbar2.twice)
    }
}

impl PartialOrd for IrrepLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IrrepLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.jbar1, self.jbar2)
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = parse_pair(s.trim().trim_start_matches('(').trim_end_matches(')'))?;
        IrrepLabel::new(a, b)
    }
}

/// An SO(3)×SO(3) irrep `(j₁, j₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TwiceRepr", into = "TwiceRepr")]
pub struct So4Label {
    j1: HalfInt,
    j2: HalfInt,
}

impl TryFrom<TwiceRepr> for So4Label {
    type Error = Error;
    fn try_from(r: TwiceRepr) -> Result<Self> {
        So4Label::from_twice(r.twice_j1, r.twice_j2)
    }
}

impl From<So4Label> for TwiceRepr {
    fn from(l: So4Label) -> Self {
        TwiceRepr { twice_j1: l.j1.twice, twice_j2: l.j2.twice }
    }
}

impl So4Label {
    pub fn new(j1: HalfInt, j2: HalfInt) -> Result<Self> {
        if j1.twice < 0 || j2.twice < 0 {
            return Err(Error::MalformedKey(format!("SO(4) label ({j1},{j2}) has a negative spin")));
        }
        Ok(Self { j1, j2 })
    }

    pub fn from_twice(a: i64, b: i64) -> Result<Self> {
        Self::new(HalfInt::from_twice(a), HalfInt::from_twice(b))
    }

    pub fn j1(self) -> HalfInt {
        self.j1
    }

    pub fn j2(self) -> HalfInt {
        self.j2
    }

    pub fn dim(self) -> u64 {
        (self.j1.multiplet() * self.j2.multiplet()) as u64
    }

    fn key(self) -> (i64, i64) {
        (self.j1.twice, self.j2.twice)
    }
}

impl PartialOrd for So4Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for So4Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for So4Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.j1, self.j2)
    }
}

impl FromStr for So4Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = parse_pair(s.trim().trim_start_matches('(').trim_end_matches(')'))?;
        So4Label::new(a, b)
    }
}

/// One summand of `Λ ⊗ (1,1)`, named by the label shift it applies to `Λ`.
///
/// `copy` distinguishes the two occurrences of `Λ` itself and is 1 for every
/// other shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Channel {
    #[serde(rename = "twice_shift1")]
    pub shift1: HalfInt,
    #[serde(rename = "twice_shift2")]
    pub shift2: HalfInt,
    pub copy: u8,
}

/// Doubled shifts of the twelve channels that change the label.
const SHIFTS: [(i64, i64); 12] = [
    (2, 2),
    (2, 0),
    (0, 2),
    (2, -2),
    (-2, -2),
    (-2, 0),
    (0, -2),
    (-2, 2),
    (1, 1),
    (1, -1),
    (-1, 1),
    (-1, -1),
];

impl Channel {
    pub fn new(shift1: HalfInt, shift2: HalfInt, copy: u8) -> Result<Self> {
        let s = (shift1.twice, shift2.twice);
        let ok = match copy {
            1 => s == (0, 0) || SHIFTS.contains(&s),
            2 => s == (0, 0),
            _ => false,
        };
        if !ok {
            return Err(Error::MalformedKey(format!(
                "({shift1},{shift2}) copy {copy} is not a coupling channel"
            )));
        }
        Ok(Self { shift1, shift2, copy })
    }

    pub fn from_twice(a: i64, b: i64, copy: u8) -> Result<Self> {
        Self::new(HalfInt::from_twice(a), HalfInt::from_twice(b), copy)
    }

    /// All fourteen channels, ordered by doubled shift then copy.
    pub fn all() -> Vec<Channel> {
        let mut out: Vec<Channel> = SHIFTS
            .iter()
            .map(|&(a, b)| Channel::from_twice(a, b, 1).expect("listed shift"))
            .collect();
        out.push(Channel::from_twice(0, 0, 1).expect("listed shift"));
        out.push(Channel::from_twice(0, 0, 2).expect("listed shift"));
        out.sort();
        out
    }

    pub fn is_diagonal(self) -> bool {
        self.shift1.twice == 0 && self.shift2.twice == 0
    }

    /// One of the six shifts whose coefficients are tabulated directly.
    pub fn is_raising(self) -> bool {
        matches!(
            (self.shift1.twice, self.shift2.twice),
            (2, 2) | (2, 0) | (0, 2) | (2, -2) | (1, 1) | (1, -1)
        )
    }

    pub fn is_lowering(self) -> bool {
        !self.is_diagonal() && !self.is_raising()
    }

    /// The opposite shift; diagonal channels are their own mirror.
    pub fn mirror(self) -> Channel {
        Channel { shift1: -self.shift1, shift2: -self.shift2, copy: self.copy }
    }
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |h: HalfInt| if h.twice > 0 { format!("+{h}") } else { h.to_string() };
        write!(f, "{},{}", sign(self.shift1), sign(self.shift2))?;
        if self.is_diagonal() {
            write!(f, "#{}", self.copy)?;
        }
        Ok(())
    }
}

impl FromStr for Channel {
    type Err = Error;

    /// `+1,-1`, `1/2,-1/2`, `0,0` (copy 1), `0,0#2`.
    fn from_str(s: &str) -> Result<Self> {
        let (pair, copy) = match s.split_once('#') {
            Some((p, c)) => (
                p,
                c.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::MalformedKey(format!("bad copy in {s:?}")))?,
            ),
            None => (s, 1),
        };
        let (a, b) = parse_pair(pair)?;
        Channel::new(a, b, copy)
    }
}

/// One block of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompEntry {
    pub target: IrrepLabel,
    pub multiplicity: u32,
}

/// `(2j̄₁−2j̄₂+1)(2j̄₁+2j̄₂+3)(2j̄₁+2)(2j̄₂+1)/6`.
pub fn dim(rep: IrrepLabel) -> u64 {
    let a = rep.jbar1.twice;
    let b = rep.jbar2.twice;
    let n = (a - b + 1) * (a + b + 3) * (a + 2) * (b + 1);
    debug_assert_eq!(n % 6, 0);
    (n / 6) as u64
}

/// SO(3)×SO(3) content by the interleaving rule, in lexicographic order.
pub fn branching(rep: IrrepLabel) -> Vec<So4Label> {
    let (l1, l2) = rep.twice_highest_weight();
    let mut out = Vec::new();
    for s1 in (l2..=l1).step_by(2) {
        for s2 in (-l2..=l2).step_by(2) {
            // j = ((σ₁+σ₂)/2, (σ₁−σ₂)/2); both σ are doubled here.
            out.push(
                So4Label::from_twice((s1 + s2) / 2, (s1 - s2) / 2).expect("σ₁ ≥ |σ₂|"),
            );
        }
    }
    out.sort();
    out
}

pub fn in_branching(rep: IrrepLabel, s: So4Label) -> bool {
    let (l1, l2) = rep.twice_highest_weight();
    let s1 = s.j1.twice + s.j2.twice;
    let s2 = s.j1.twice - s.j2.twice;
    s1 >= l2 && s1 <= l1 && (s1 - l2) % 2 == 0 && s2.abs() <= l2 && (s2 + l2) % 2 == 0
}

/// Weights of `(1,1)` in doubled orthogonal coordinates, with multiplicity.
const FOURTEEN_WEIGHTS: [((i64, i64), i32); 13] = [
    ((4, 0), 1),
    ((-4, 0), 1),
    ((0, 4), 1),
    ((0, -4), 1),
    ((2, 2), 1),
    ((2, -2), 1),
    ((-2, 2), 1),
    ((-2, -2), 1),
    ((2, 0), 1),
    ((-2, 0), 1),
    ((0, 2), 1),
    ((0, -2), 1),
    ((0, 0), 2),
];

/// `source ⊗ (1,1)` by Racah–Speiser, sorted by target.
pub fn decompose_with_14(source: IrrepLabel) -> Vec<DecompEntry> {
    let (l1, l2) = source.twice_highest_weight();
    // Doubled ρ = (3/2, 1/2).
    let (r1, r2) = (3, 1);
    let mut acc: BTreeMap<IrrepLabel, i32> = BTreeMap::new();
    for ((w1, w2), mult) in FOURTEEN_WEIGHTS {
        let mut x = l1 + w1 + r1;
        let mut y = l2 + w2 + r2;
        if x == 0 || y == 0 || x.abs() == y.abs() {
            continue;
        }
        // Reflect into the dominant chamber x > y > 0 with the signed
        // permutation group, tracking the determinant.
        let mut sign = 1;
        if x < 0 {
            x = -x;
            sign = -sign;
        }
        if y < 0 {
            y = -y;
            sign = -sign;
        }
        if x < y {
            std::mem::swap(&mut x, &mut y);
            sign = -sign;
        }
        let (h1, h2) = (x - r1, y - r2);
        let target = IrrepLabel::from_twice((h1 + h2) / 2, (h1 - h2) / 2)
            .expect("dominant weight gives a valid label");
        *acc.entry(target).or_default() += sign * mult;
    }
    acc.into_iter()
        .filter(|&(_, m)| m != 0)
        .map(|(target, m)| {
            assert!(m > 0, "negative Racah–Speiser multiplicity at {target}");
            DecompEntry { target, multiplicity: m as u32 }
        })
        .collect()
}

pub fn multiplicity(source: IrrepLabel, target: IrrepLabel) -> u32 {
    decompose_with_14(source)
        .into_iter()
        .find(|e| e.target == target)
        .map_or(0, |e| e.multiplicity)
}

/// Whether `ch` occurs in `source ⊗ (1,1)`.
pub fn channel_present(source: IrrepLabel, ch: Channel) -> bool {
    match source.shifted(ch) {
        Ok(target) => multiplicity(source, target) >= ch.copy as u32,
        Err(_) => false,
    }
}

/// The channels occurring in `source ⊗ (1,1)`, ordered by target then copy.
pub fn present_channels(source: IrrepLabel) -> Vec<Channel> {
    let mut out: Vec<Channel> =
        Channel::all().into_iter().filter(|&c| channel_present(source, c)).collect();
    out.sort_by_key(|&c| (source.shifted(c).expect("present"), c.copy));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn irrep(s: &str) -> IrrepLabel {
        s.parse().unwrap()
    }

    fn so4(s: &str) -> So4Label {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(irrep("3/2,1/2"), IrrepLabel::from_twice(3, 1).unwrap());
        assert_eq!(irrep("(1,1)").to_string(), "(1,1)");
        assert_eq!(irrep("3/2, 1/2").to_string(), "(3/2,1/2)");
        assert!(matches!("0,-1".parse::<IrrepLabel>(), Err(Error::MalformedKey(_))));
        assert!(matches!("1/2,1".parse::<IrrepLabel>(), Err(Error::MalformedKey(_))));
        assert!(matches!("1/3,0".parse::<IrrepLabel>(), Err(Error::MalformedKey(_))));
        assert_eq!("-1/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-1));
        assert_eq!("+1".parse::<HalfInt>().unwrap(), HalfInt::ONE);
    }

    #[test]
    fn json_uses_doubled_integers() {
        let l = irrep("3/2,1/2");
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"twice_j1":3,"twice_j2":1}"#);
        assert_eq!(serde_json::from_str::<IrrepLabel>(&s).unwrap(), l);
        assert!(serde_json::from_str::<IrrepLabel>(r#"{"twice_j1":1,"twice_j2":3}"#).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim(IrrepLabel::FOURTEEN), 14);
        assert_eq!(dim(IrrepLabel::TRIVIAL), 1);
        assert_eq!(dim(irrep("1/2,1/2")), 5);
        assert_eq!(dim(irrep("1,0")), 10);
        assert_eq!(dim(irrep("1/2,0")), 4);
    }

    /// Weyl dimension formula for B₂ written in the highest weight directly.
    fn weyl_dim(l1: i64, l2: i64) -> i64 {
        // Positive roots e1±e2, e1, e2 with ρ = (3/2, 1/2); doubled throughout.
        let (x, y) = (l1 + 3, l2 + 1);
        let num = (x - y) * (x + y) * x * y;
        let den = 2 * 4 * 3 * 1;
        assert_eq!(num % den, 0);
        num / den
    }

    #[test]
    fn dim_matches_weyl_formula() {
        for l in IrrepLabel::all_up_to(12) {
            let (l1, l2) = l.twice_highest_weight();
            assert_eq!(dim(l) as i64, weyl_dim(l1, l2), "{l}");
        }
    }

    #[test]
    fn branching_examples() {
        assert_eq!(
            branching(IrrepLabel::FOURTEEN),
            vec![so4("0,0"), so4("1/2,1/2"), so4("1,1")]
        );
        assert_eq!(branching(IrrepLabel::TRIVIAL), vec![so4("0,0")]);
        assert_eq!(branching(irrep("1/2,0")), vec![so4("0,1/2"), so4("1/2,0")]);
    }

    #[test]
    fn branching_membership_agrees() {
        for l in IrrepLabel::all_up_to(8) {
            let b = branching(l);
            for a in 0..=10 {
                for c in 0..=10 {
                    let s = So4Label::from_twice(a, c).unwrap();
                    assert_eq!(in_branching(l, s), b.contains(&s), "{l} {s}");
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_with_14(IrrepLabel::TRIVIAL);
        assert_eq!(d, vec![DecompEntry { target: IrrepLabel::FOURTEEN, multiplicity: 1 }]);

        let d = decompose_with_14(IrrepLabel::FOURTEEN);
        let targets: Vec<_> = d.iter().map(|e| e.target.to_string()).collect();
        assert_eq!(targets, ["(0,0)", "(1,0)", "(1,1)", "(2,0)", "(2,1)", "(2,2)"]);
        assert!(d.iter().all(|e| e.multiplicity == 1));
        assert_eq!(d.iter().map(|e| dim(e.target)).sum::<u64>(), 196);
    }

    #[test]
    fn generic_source_has_all_fourteen() {
        let src = irrep("3,1");
        let chans = present_channels(src);
        assert_eq!(chans.len(), 14);
        assert_eq!(multiplicity(src, src), 2);
    }

    #[test]
    fn presence_examples() {
        let c = |s: &str| s.parse::<Channel>().unwrap();
        assert!(!channel_present(IrrepLabel::FOURTEEN, c("1/2,1/2")));
        assert!(!channel_present(IrrepLabel::FOURTEEN, c("0,0#2")));
        assert_eq!(present_channels(IrrepLabel::TRIVIAL), vec![c("+1,+1")]);
    }

    #[test]
    fn channel_syntax() {
        assert_eq!(Channel::all().len(), 14);
        for ch in Channel::all() {
            assert_eq!(ch.to_string().parse::<Channel>().unwrap(), ch);
        }
        assert!("1,1/2".parse::<Channel>().is_err());
        assert!("1,1#2".parse::<Channel>().is_err());
    }

    #[test]
    fn channels_preserve_class() {
        for src in IrrepLabel::all_up_to(6) {
            for ch in present_channels(src) {
                let tgt = src.shifted(ch).unwrap();
                assert_eq!(tgt.is_spinor(), src.is_spinor(), "{src} {ch}");
            }
        }
    }
}
