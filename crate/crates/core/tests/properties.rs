use num_complex::Complex64;
use proptest::prelude::*;

use so5cg::exactnum::rat;
use so5cg::labels::{multiplicity, present_channels};
use so5cg::oracle::{compare_with, OracleConfig};
use so5cg::reduced::{normalization, reduced, EntryShift, ReducedKey};
use so5cg::su2::{su2_cg, Su2CgKey};
use so5cg::verify::{mixing_identities, reduced_unitarity, symmetry_involution};
use so5cg::{branching, decompose_with_14, dim, Channel, HalfInt, IrrepLabel, Rational, SqrtSum};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

/// Sums of up to four terms `q·√r` with small radicands, square factors included.
fn sqrt_sum() -> impl Strategy<Value = SqrtSum> {
    prop::collection::vec((small_rational(), 1u32..=40), 0..=4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(q, r)| SqrtSum::sqrt_rational(&rat(r as i64, 1)).unwrap().scale(&q))
            .sum()
    })
}

fn label(max_twice: i64) -> impl Strategy<Value = IrrepLabel> {
    let all = IrrepLabel::all_up_to(max_twice);
    (0..all.len()).prop_map(move |i| all[i])
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in sqrt_sum(), b in sqrt_sum(), c in sqrt_sum()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive(a in sqrt_sum(), b in sqrt_sum(), c in sqrt_sum()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &SqrtSum::one(), a.clone());
    }

    #[test]
    fn negation_cancels_structurally(a in sqrt_sum()) {
        let z = &a + &(-&a);
        prop_assert!(z.is_zero());
        prop_assert_eq!(z.num_terms(), 0);
        prop_assert_eq!(&a - &a, SqrtSum::zero());
    }

    #[test]
    fn square_root_squares_back(n in 0i64..100_000, d in 1i64..10_000) {
        let q = rat(n, d);
        let r = SqrtSum::sqrt_rational(&q).unwrap();
        prop_assert_eq!((&r * &r).as_rational(), Some(q));
        prop_assert!(r.num_terms() <= 1);
        prop_assert!(r.signum() >= 0);
    }

    #[test]
    fn float_value_tracks_ring_operations(a in sqrt_sum(), b in sqrt_sum()) {
        let (x, y) = (a.to_f64(), b.to_f64());
        let scale = 1.0 + x.abs() + y.abs();
        prop_assert!(((&a + &b).to_f64() - (x + y)).abs() <= 1e-12 * scale);
        prop_assert!(((&a * &b).to_f64() - x * y).abs() <= 1e-12 * scale * scale);
    }

    #[test]
    fn text_and_json_round_trip(a in sqrt_sum()) {
        prop_assert_eq!(a.to_string().parse::<SqrtSum>().unwrap(), a.clone());
        prop_assert_eq!(a.to_canonical_string().parse::<SqrtSum>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        let back: SqrtSum = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn single_terms_invert(q in small_rational(), r in 1u32..=40) {
        prop_assume!(q != rat(0, 1));
        let x = SqrtSum::sqrt_rational(&rat(r as i64, 1)).unwrap().scale(&q);
        prop_assert!((&x * &x.inverse().unwrap()).is_one());
    }
}

proptest! {
    #[test]
    fn decomposition_fills_fourteen_copies(src in label(6)) {
        let total: u64 = decompose_with_14(src).iter().map(|e| e.multiplicity as u64 * dim(e.target)).sum();
        prop_assert_eq!(total, 14 * dim(src));
        for e in decompose_with_14(src) {
            prop_assert!(e.multiplicity >= 1 && e.multiplicity <= 2);
            prop_assert!(e.multiplicity == 1 || e.target == src);
        }
    }

    #[test]
    fn branching_fills_the_irrep(src in label(8)) {
        let total: u64 = branching(src).iter().map(|s| s.dim()).sum();
        prop_assert_eq!(total, dim(src));
    }

    #[test]
    fn channels_keep_spin_class(src in label(6)) {
        for ch in present_channels(src) {
            let t = src.shifted(ch).unwrap();
            prop_assert_eq!(t.is_spinor(), src.is_spinor());
            let integral = |l: IrrepLabel| l.jbar1().is_integer();
            let half_shift = !ch.shift1.is_integer();
            prop_assert_eq!(integral(t) != integral(src), half_shift);
            prop_assert!(multiplicity(src, t) as u8 >= ch.copy);
        }
    }

    #[test]
    fn present_channels_have_positive_normalization(src in label(6)) {
        for ch in present_channels(src).into_iter().filter(|c| c.is_raising() || (c.is_diagonal() && c.copy == 1)) {
            let n = normalization(ch, src).unwrap();
            prop_assert!(n.signum() > 0, "{} {}: {}", src, ch, n);
        }
    }
}

/// Racah's closed form in floating point, written independently of the library.
fn racah(j1: i64, m1: i64, j2: i64, m2: i64, j: i64, m: i64) -> f64 {
    if m1 + m2 != m || j < (j1 - j2).abs() || j > j1 + j2 || (j1 + j2 + j) % 2 != 0 {
        return 0.0;
    }
    let f = |n: i64| -> f64 { (1..=n / 2).map(|k| k as f64).product() };
    let pre = ((j + 1) as f64 * f(j1 + j2 - j) * f(j1 - j2 + j) * f(-j1 + j2 + j) / f(j1 + j2 + j + 2)).sqrt()
        * (f(j1 + m1) * f(j1 - m1) * f(j2 + m2) * f(j2 - m2) * f(j + m) * f(j - m)).sqrt();
    let mut sum = 0.0;
    let mut k = 0;
    while k <= j1 + j2 + j {
        let d = [k, j1 + j2 - j - k, j1 - m1 - k, j2 + m2 - k, j - j2 + m1 + k, j - j1 - m2 + k];
        if d.iter().all(|&x| x >= 0) {
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign / d.iter().map(|&x| f(x)).product::<f64>();
        }
        k += 2;
    }
    pre * sum
}

fn su2_key() -> impl Strategy<Value = (i64, i64, i64, i64, i64)> {
    (0i64..=6, 0i64..=6)
        .prop_flat_map(|(a, b)| {
            let js = ((a - b).abs()..=a + b).step_by(2).collect::<Vec<_>>();
            (Just(a), Just(b), 0..=a as usize, 0..=b as usize, prop::sample::select(js))
        })
        .prop_map(|(a, b, i, k, j)| (a, a - 2 * i as i64, b, b - 2 * k as i64, j))
}

proptest! {
    #[test]
    fn su2_exchange_symmetry((a, ma, b, mb, j) in su2_key()) {
        let m = ma + mb;
        prop_assume!(m.abs() <= j);
        let x = su2_cg(&Su2CgKey::from_twice(a, ma, b, mb, j, m)).unwrap();
        let y = su2_cg(&Su2CgKey::from_twice(b, mb, a, ma, j, m)).unwrap();
        let sign = if ((a + b - j) / 2) % 2 == 0 { y } else { -y };
        prop_assert_eq!(x, sign);
    }

    #[test]
    fn su2_matches_closed_form((a, ma, b, mb, j) in su2_key()) {
        let m = ma + mb;
        prop_assume!(m.abs() <= j);
        let x = su2_cg(&Su2CgKey::from_twice(a, ma, b, mb, j, m)).unwrap();
        prop_assert!((x.to_f64() - racah(a, ma, b, mb, j, m)).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn reduced_suites_hold(src in label(5)) {
        prop_assert!(reduced_unitarity(src).is_ok(), "{:?}", reduced_unitarity(src));
        prop_assert!(mixing_identities(src).is_ok(), "{:?}", mixing_identities(src));
    }

    #[test]
    fn symmetry_is_an_involution(src in label(4)) {
        prop_assert!(symmetry_involution(src).is_ok(), "{:?}", symmetry_involution(src));
    }

    /// Entries outside the target irrep's branching are zero and never errors.
    #[test]
    fn guarded_entries_are_zero(src in label(6), e in 0usize..14, c in 0usize..28) {
        let channels = Channel::all();
        let ch = channels[c % channels.len()];
        prop_assume!(present_channels(src).contains(&ch));
        let entry = EntryShift::all()[e];
        let target = src.shifted(ch).unwrap();
        for s in branching(src) {
            let key = ReducedKey { source: src, channel: ch, source_so4: s, entry };
            if let Ok(t) = key.target_so4() {
                let v = reduced(&key).unwrap();
                if !branching(target).contains(&t) {
                    prop_assert!(v.is_zero());
                }
            }
        }
    }
}

fn unitary(theta: f64, phi: f64, alpha: f64) -> [[Complex64; 2]; 2] {
    let (c, s) = (theta.cos(), theta.sin());
    let e = |x: f64| Complex64::from_polar(1.0, x);
    [[e(alpha) * c, -e(alpha + phi) * s], [e(-phi) * s, Complex64::new(c, 0.0)]]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 6, ..ProptestConfig::default() })]

    /// The projector onto a repeated block ignores how its numeric copies are mixed.
    #[test]
    fn projector_ignores_copy_rotation(theta in 0.0..std::f64::consts::TAU, phi in 0.0..std::f64::consts::TAU, alpha in 0.0..std::f64::consts::TAU) {
        let src: IrrepLabel = "3/2,1/2".parse().unwrap();
        let config = OracleConfig { cap: 81, ..OracleConfig::default() };
        let base = compare_with(src, &config, None).unwrap();
        let rotated = compare_with(src, &config, Some(unitary(theta, phi, alpha))).unwrap();
        prop_assert!(rotated.pass);
        for (x, y) in base.blocks.iter().zip(&rotated.blocks) {
            if let (Some(p), Some(q)) = (x.projector_dev, y.projector_dev) {
                prop_assert!(q <= config.projector_tol);
                prop_assert!((p - q).abs() < 1e-10);
            }
        }
        prop_assert!(base.blocks.iter().any(|b| b.projector_dev.is_some()));
    }
}

#[test]
fn half_integers_order_like_rationals() {
    let xs: Vec<HalfInt> = (-6..=6).map(HalfInt::from_twice).collect();
    for w in xs.windows(2) {
        assert!(w[0] < w[1]);
        assert_eq!(w[1] - w[0], HalfInt::HALF);
    }
}
