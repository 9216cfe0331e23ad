use super::*;
use crate::labels::present_channels;

fn irrep(s: &str) -> IrrepLabel {
    s.parse().unwrap()
}

fn so4(s: &str) -> So4Label {
    s.parse().unwrap()
}

fn ch(s: &str) -> Channel {
    s.parse().unwrap()
}

fn entry(s: &str) -> EntryShift {
    s.parse().unwrap()
}

fn key(source: &str, channel: &str, s: &str, e: &str) -> ReducedKey {
    ReducedKey { source: irrep(source), channel: ch(channel), source_so4: so4(s), entry: entry(e) }
}

/// Independent evaluation of the first raising normalization's radicand,
/// written out from the product form.
fn raise_both_radicand(a: i64, b: i64) -> i64 {
    (2 * a + 2) * (2 * a + 3) * (2 * b + 1) * (2 * b + 2) * (a + b + 2) * (a + b + 3) * (2 * a + 2 * b + 3) * (2 * a + 2 * b + 5)
}

#[test]
fn normalization_of_raise_both_at_trivial() {
    let q = raise_both_radicand(0, 0);
    assert_eq!(q, 1080);
    let n = normalization(ch("+1,+1"), IrrepLabel::TRIVIAL).unwrap();
    assert_eq!(n.square_rational().unwrap(), rat(1, q));
    assert_eq!(n, SqrtSum::term(rat(1, 180), 30));
    assert!((n.to_f64() - 1.0 / (q as f64).sqrt()).abs() < 1e-15);
}

#[test]
fn normalization_absent_when_factor_vanishes() {
    for a in 0..5 {
        let src = IrrepLabel::from_twice(a, 0).unwrap();
        assert!(matches!(normalization(ch("+1,0"), src), Err(Error::ChannelAbsent(_))));
    }
}

#[test]
fn diagonal_normalization_at_fourteen() {
    let q = 4 * 1 * 4 + 11 * (8 + 16 + 5) * 2 + 3 * 7;
    assert_eq!(q, 675);
    let n = normalization(ch("0,0"), IrrepLabel::FOURTEEN).unwrap();
    // (2√5)² / 675
    assert_eq!(n.square_rational().unwrap(), rat(20, q));
    assert_eq!(n.signum(), 1);
}

#[test]
fn trivial_source_entries_are_one() {
    let k = key("0,0", "+1,+1", "0,0", "+1,+1;1,1");
    assert!(reduced(&k).unwrap().is_one());
    let k = key("0,0", "+1,+1", "0,0", "0,0;0,0");
    assert!(reduced(&k).unwrap().is_one());
    let k = key("0,0", "+1,+1", "0,0", "1/2,1/2;1/2,1/2");
    assert!(reduced(&k).unwrap().is_one());
}

#[test]
fn guard_returns_zero_outside_target_branching() {
    // (1,1) → (2,1) from s = (½,½); t = (0,0) is not in the branching of (2,1).
    let k = key("1,1", "+1,0", "1/2,1/2", "-1/2,-1/2;1/2,1/2");
    assert!(!in_branching(irrep("2,1"), k.target_so4().unwrap()));
    assert!(reduced(&k).unwrap().is_zero());
}

#[test]
fn absent_raising_channel_is_refused() {
    // (2,0) does not occur in (1,0) ⊗ 14, so every key on this channel fails.
    let k = key("1,0", "+1,0", "1/2,1/2", "+1,0;1,1");
    assert!(matches!(reduced(&k), Err(Error::ChannelAbsent(_))));
    let k = key("1,1", "1/2,1/2", "1,1", "0,0;0,0");
    assert!(matches!(reduced(&k), Err(Error::ChannelAbsent(_))));
}

#[test]
fn malformed_keys() {
    let k = key("1,1", "+1,+1", "1,0", "0,0;0,0");
    assert!(matches!(reduced(&k), Err(Error::MalformedKey(_))));
    let k = key("1,1", "+1,+1", "0,0", "-1,0;1,1");
    assert!(matches!(reduced(&k), Err(Error::MalformedKey(_))));
    assert!("+1,+1;1/2,1/2".parse::<EntryShift>().is_err());
}

#[test]
fn mixing_at_fourteen_vanishes() {
    let m = mixing(IrrepLabel::FOURTEEN).unwrap();
    assert!(m.x.is_zero());
    assert!(m.h2.is_zero());
    assert!(matches!(mixing(IrrepLabel::TRIVIAL), Err(Error::ChannelAbsent(_))));
}

#[test]
fn second_copy_absent_for_fourteen() {
    for s in branching(IrrepLabel::FOURTEEN) {
        for e in EntryShift::all() {
            let k = ReducedKey { source: IrrepLabel::FOURTEEN, channel: ch("0,0#2"), source_so4: s, entry: e };
            assert!(matches!(reduced_copy2(&k), Err(Error::ChannelAbsent(_))));
        }
    }
}

/// The scalar row of the auxiliary table, transcribed separately in floating point.
fn aux_scalar_row(j1: f64, j2: f64, a: f64, b: f64) -> f64 {
    let inner = j1 * j1 + j1 - j2 * (j2 + 1.0);
    let p = a.powi(4) + 4.0 * a.powi(3) + (-2.0 * b * b - 2.0 * b + 5.0) * a * a + (-4.0 * b * b - 4.0 * b + 2.0) * a
        + b.powi(4)
        + 2.0 * b.powi(3)
        - 5.0 * inner * inner
        - b * b
        - 2.0 * b;
    -p / (2.0 * 5f64.sqrt())
}

#[test]
fn aux_examples() {
    let k = key("1,1", "0,0", "1,1", "0,0;0,0");
    let v = reduced_aux(&k).unwrap();
    assert_eq!(aux_scalar_row(1.0, 1.0, 1.0, 1.0), 0.0);
    assert!(v.is_zero());
    for src in IrrepLabel::all_up_to(6) {
        for s in branching(src) {
            let k = ReducedKey { source: src, channel: ch("0,0"), source_so4: s, entry: entry("0,0;0,0") };
            let v = reduced_aux(&k).unwrap();
            let want = aux_scalar_row(s.j1().to_f64(), s.j2().to_f64(), src.jbar1().to_f64(), src.jbar2().to_f64());
            assert!((v.to_f64() - want).abs() < 1e-12, "{src} {s}: {v} vs {want}");
        }
    }
    // The (+1,+1) row carries the prefactor (j₁ − j₂)².
    for s in branching(irrep("3,1")) {
        if s.j1() == s.j2() {
            let k = ReducedKey { source: irrep("3,1"), channel: ch("0,0"), source_so4: s, entry: entry("+1,+1;1,1") };
            assert!(reduced_aux(&k).unwrap().is_zero(), "{s}");
        }
    }
    let k = key("1/2,0", "0,0", "1/2,0", "1/2,-1/2;1/2,1/2");
    assert!(matches!(reduced_aux(&k), Err(Error::MalformedKey(_))));
}

#[test]
fn second_copy_is_orthonormal_to_first() {
    let src = irrep("2,1");
    for t in branching(src) {
        let c1 = column(src, ch("0,0"), t, false).unwrap();
        let c2 = column(src, ch("0,0#2"), t, false).unwrap();
        let dot = |a: &[(So4Label, EntryShift, SqrtSum)], b: &[(So4Label, EntryShift, SqrtSum)]| -> SqrtSum {
            a.iter().zip(b).map(|(x, y)| &x.2 * &y.2).sum()
        };
        assert!(dot(&c1, &c2).is_zero(), "{t}");
        assert!(dot(&c2, &c2).is_one(), "{t}");
    }
}

#[test]
fn lowering_to_trivial_from_fourteen() {
    let src = IrrepLabel::FOURTEEN;
    let zero = IrrepLabel::TRIVIAL;
    let t = so4("0,0");
    let v = symmetry_extend(zero, src, t, so4("1,1"), entry("-1,-1;1,1")).unwrap();
    // √(dim(0,0)·(2·1+1)² / (dim(1,1)·1)) times the unit raising value.
    let expected_sq = rat(1 * 3 * 3, 14);
    assert_eq!(v.square_rational().unwrap(), expected_sq);
    assert_eq!(v.signum(), 1);
    let rows = [
        (so4("1,1"), entry("-1,-1;1,1")),
        (so4("1/2,1/2"), entry("-1/2,-1/2;1/2,1/2")),
        (so4("0,0"), entry("0,0;0,0")),
    ];
    let total: SqrtSum = rows
        .iter()
        .map(|&(s, e)| {
            let x = symmetry_extend(zero, src, t, s, e).unwrap();
            &x * &x
        })
        .sum();
    assert!(total.is_one());
}

#[test]
fn formulas_stay_in_domain_under_guard() {
    for src in IrrepLabel::all_up_to(8) {
        for c in present_channels(src) {
            for s in branching(src) {
                for e in EntryShift::all() {
                    let k = ReducedKey { source: src, channel: c, source_so4: s, entry: e };
                    if k.target_so4().is_err() {
                        continue;
                    }
                    reduced(&k).unwrap_or_else(|err| panic!("{k:?}: {err}"));
                    if c.is_diagonal() && c.copy == 1 {
                        reduced_aux(&k).unwrap_or_else(|err| panic!("aux {k:?}: {err}"));
                    }
                }
            }
        }
    }
}

#[test]
fn guard_only_discards_formula_zeros() {
    for src in IrrepLabel::all_up_to(6) {
        for c in present_channels(src) {
            let target = src.shifted(c).unwrap();
            for s in branching(src) {
                for e in EntryShift::all() {
                    let k = ReducedKey { source: src, channel: c, source_so4: s, entry: e };
                    let Ok(t) = k.target_so4() else { continue };
                    if in_branching(target, t) && triangle(s.j1(), e.part.j1(), t.j1()) && triangle(s.j2(), e.part.j2(), t.j2()) {
                        continue;
                    }
                    // Outside the selection rules: where the closed form is
                    // defined at all, it must vanish.
                    if let Ok(Some(v)) = unguarded(&k, false) {
                        assert!(v.is_zero(), "{k:?} gives {v}");
                    }
                }
            }
        }
    }
}

#[test]
fn normalizations_positive_for_present_channels() {
    for src in IrrepLabel::all_up_to(8) {
        for c in present_channels(src) {
            if c.is_raising() || (c.is_diagonal() && c.copy == 1) {
                let n = normalization(c, src).unwrap();
                assert_eq!(n.signum(), 1, "{src} {c}");
                assert_eq!(n.num_terms(), 1);
            }
        }
    }
}
