use qchan::channels::{family_apply, DensityState, FamilyChannel, FamilyKind};
use qchan::scalar::rational;
use qchan::verification::{constant_fnorm_sample_test, dcq_det_direct, dcq_det_formula, is_cptp, param_range};
use qchan::{Matrix32, Rational};

#[test]
fn ranges_are_exact_over_rationals() {
    // (L, U) with p_min = -1/L and p_max = 1/U
    let denominators = |kind, n: i64| match kind {
        FamilyKind::Depolarizing => (n * n - 1, 1),
        FamilyKind::TransposeDepolarizing | FamilyKind::Tcq => (n - 1, n + 1),
        FamilyKind::Dcq => (2 * n - 1, (n - 1) * (n - 1)),
    };
    for kind in FamilyKind::ALL {
        for n in 2..9 {
            let r = param_range::<Rational>(kind, n as usize).unwrap();
            let (l, u) = denominators(kind, n);
            assert_eq!(r.p_min, rational(-1, l), "{kind:?} n={n}");
            assert_eq!(r.p_max, rational(1, u), "{kind:?} n={n}");
        }
    }
}

#[test]
fn determinant_exact_at_sample_points() {
    for n in 2..7 {
        for (a, b) in [(-1, 2), (-1, 7), (0, 1), (1, 9), (1, 3), (1, 2)] {
            let p = rational(a, b);
            assert_eq!(dcq_det_direct(n, &p).unwrap(), dcq_det_formula(n, &p).unwrap(), "n={n} p={p}");
        }
    }
}

#[test]
fn single_precision_pipeline() {
    let r = param_range::<f32>(FamilyKind::Tcq, 3).unwrap();
    let ch = FamilyChannel::new(FamilyKind::Tcq, r.p_max, 3).unwrap();
    assert!(is_cptp(&ch, 1e-5f32).unwrap().passed);
    assert!(constant_fnorm_sample_test(&ch, 50, 1, 1e-5f32).unwrap().passed);
    let out: Matrix32 = family_apply(&ch, &DensityState::<f32>::basis(3, 1)).unwrap();
    assert!((out.trace().re - 1.0).abs() < 1e-6);
    let outside = ch.with_p(r.p_max + 0.05).unwrap();
    assert!(!is_cptp(&outside, 1e-5f32).unwrap().passed);
}
