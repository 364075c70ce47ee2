use brieskorn::floer::{cobordism_report, jones_floer_audit, mu_bar, mu_bar_with_splice, InvariantBundle};
use brieskorn::SeifertData;

fn sigma(m: &[i64]) -> SeifertData {
    SeifertData::solve(m).unwrap()
}

#[test]
fn bundle_identities() {
    for m in [[2, 3, 5], [2, 3, 7], [3, 5, 7], [2, 5, 9], [3, 4, 7]] {
        let b = InvariantBundle::compute(&sigma(&m)).unwrap();
        assert_eq!(b.ranks.total(), 2 * b.lambda);
        assert_eq!(b.nu, b.sign_k / 8);
        assert_eq!(b.nu, b.mu_bar);
        assert_eq!(b.chi_rho, 2 * b.nu);
        assert_eq!(b.determinant, 1);
        assert!(b.audit_flags.theorem1_ok && b.audit_flags.mirror_calibrated);
    }
}

#[test]
fn mirror_bundle_swaps_ranks() {
    for m in [[2, 3, 7], [2, 3, 17], [3, 5, 7]] {
        let d = sigma(&m);
        let (b, r) = (InvariantBundle::compute(&d).unwrap(), InvariantBundle::compute_mirror(&d).unwrap());
        assert_eq!(r.sign_k, -b.sign_k);
        assert_eq!(r.nu, -b.nu);
        assert_eq!(r.ranks, b.ranks.mirrored());
        assert_eq!(r.jones, b.jones.invert_variable());
    }
}

#[test]
fn splice_recursion() {
    let d = sigma(&[2, 3, 5, 7]);
    assert_eq!(mu_bar(&d).unwrap(), mu_bar(&sigma(&[2, 3, 35])).unwrap() + mu_bar(&sigma(&[6, 5, 7])).unwrap());
    let d = sigma(&[2, 3, 5, 7, 11]);
    assert_eq!(mu_bar_with_splice(&d, 2).unwrap(), mu_bar_with_splice(&d, 3).unwrap());
    assert!(mu_bar_with_splice(&d, 4).is_err());
}

#[test]
fn cobordism_examples() {
    let r = cobordism_report(&sigma(&[2, 3, 5]), true).unwrap();
    assert_eq!(r.nu, -1);
    assert_eq!(r.nonnegative_nu, Some(false));
    assert!(r.claim_refuted);
    let r = cobordism_report(&sigma(&[2, 3, 7]), true).unwrap();
    assert_eq!(r.nonnegative_nu, Some(true));
    assert_eq!(r.family, Some((2, 3, 1, 1)));
    assert_eq!(r.family_nu_zero, Some(false));
    assert!(r.claim_refuted);
    let r = cobordism_report(&sigma(&[2, 3, 5]), false).unwrap();
    assert_eq!((r.nonnegative_nu, r.family_nu_zero, r.claim_refuted), (None, None, false));
}

#[test]
fn jones_audit_findings() {
    let b = InvariantBundle::compute(&sigma(&[2, 3, 7])).unwrap();
    let a = jones_floer_audit(&b);
    assert!(a.x_integral && a.mullins);
    assert_eq!(a.x, num_rational::BigRational::from_integer((-2).into()));
    assert!(!a.strict && !a.mirror_robust);
    assert!(a.note.is_some());
}

#[test]
fn bundle_json_round_trip() {
    let b = InvariantBundle::compute(&sigma(&[2, 3, 7])).unwrap();
    let s = serde_json::to_string(&b).unwrap();
    assert_eq!(serde_json::from_str::<InvariantBundle>(&s).unwrap(), b);
}
