use brieskorn::diagram::{build_diagram, continued_fraction, RationalTangle, TangleBuilder};
use brieskorn::invariants::bracket::{jones_brute_force, BRUTE_MAX_CROSSINGS};
use brieskorn::invariants::{determinant, gl_signature, jones, seifert_matrix_signature};
use brieskorn::{Error, PdCode, SeifertData};
use num_bigint::BigInt;

fn built(m: &[i64]) -> PdCode {
    build_diagram(&SeifertData::solve(m).unwrap()).unwrap()
}

fn corpus() -> Vec<PdCode> {
    let mut out = vec![
        PdCode::unknot(),
        PdCode::positive_kink(),
        PdCode::right_trefoil(),
        PdCode::left_trefoil(),
        PdCode::figure_eight(),
    ];
    for m in [[2, 3, 5], [2, 3, 7], [2, 5, 7], [3, 4, 5], [2, 3, 11], [2, 5, 9]] {
        out.push(built(&m));
    }
    for (a, b) in [(5, 2), (7, 3), (13, 5), (11, 7)] {
        let mut tb = TangleBuilder::new();
        let t = tb.rational(&RationalTangle::new(a, b).unwrap());
        out.push(tb.denominator_closure(t).unwrap());
    }
    out
}

#[test]
fn torus_knot_from_poincare_sphere() {
    let v = jones(&built(&[2, 3, 5])).unwrap();
    assert_eq!(v, brieskorn::LaurentPolynomial::from_terms([(4, 1), (6, 1), (10, -1)]));
}

#[test]
fn sigma_237_signature_and_determinant() {
    let pd = built(&[2, 3, 7]);
    assert_eq!(determinant(&pd).unwrap(), 1);
    assert_eq!(gl_signature(&pd).unwrap().abs(), 8);
    assert_eq!(seifert_matrix_signature(&pd).unwrap(), gl_signature(&pd).unwrap());
}

#[test]
fn crossing_count_bound() {
    for m in [[2, 3, 5], [2, 3, 7], [3, 5, 7], [2, 7, 9]] {
        let d = SeifertData::solve(&m).unwrap();
        let bound: i64 = d
            .multiplicities
            .iter()
            .zip(&d.pair_weights)
            .map(|(&a, &b)| continued_fraction(a, b).unwrap().iter().sum::<i64>())
            .sum::<i64>()
            + d.base_weight.abs();
        assert!(built(&m).len() as i64 <= bound);
    }
}

#[test]
fn jones_at_one_is_one() {
    for pd in corpus() {
        assert_eq!(jones(&pd).unwrap().eval_int(1), BigInt::from(1), "{pd}");
    }
}

#[test]
fn bracket_paths_agree() {
    for pd in corpus().into_iter().filter(|pd| pd.len() <= BRUTE_MAX_CROSSINGS) {
        assert_eq!(jones(&pd).unwrap(), jones_brute_force(&pd).unwrap(), "{pd}");
    }
}

#[test]
fn mirror_covariance() {
    for pd in corpus() {
        let m = pd.mirror().unwrap();
        assert_eq!(jones(&m).unwrap(), jones(&pd).unwrap().invert_variable());
        assert_eq!(gl_signature(&m).unwrap(), -gl_signature(&pd).unwrap());
        assert_eq!(determinant(&m).unwrap(), determinant(&pd).unwrap());
        assert_eq!(m.writhe().unwrap(), -pd.writhe().unwrap());
        assert_eq!(m.mirror().unwrap(), pd);
    }
    assert_eq!(PdCode::unknot().mirror().unwrap(), PdCode::unknot());
}

#[test]
fn tangle_order_does_not_matter() {
    for m in [[2i64, 3, 5], [2, 3, 7], [3, 5, 7], [2, 5, 11]] {
        let base = built(&m);
        let (v, s) = (jones(&base).unwrap(), gl_signature(&base).unwrap());
        for perm in [[1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0]] {
            let pd = built(&perm.map(|i| m[i]));
            assert_eq!(determinant(&pd).unwrap(), 1);
            assert_eq!(gl_signature(&pd).unwrap().abs(), s.abs());
            let w = jones(&pd).unwrap();
            assert!(w == v || w == v.invert_variable(), "{m:?} {perm:?}");
        }
    }
}

#[test]
fn writhe_rejects_links() {
    let mut tb = TangleBuilder::new();
    let t = tb.integer(2);
    let hopf = tb.numerator_closure(t).unwrap();
    assert_eq!(hopf.components().unwrap(), 2);
    assert_eq!(hopf.writhe(), Err(Error::NotAKnot(2)));
    assert!(jones(&hopf).is_err());
}

#[test]
fn pd_export_round_trips() {
    let pd = built(&[2, 3, 7]);
    assert_eq!(pd.to_string().parse::<PdCode>().unwrap(), pd);
    assert_eq!(pd.gauss_code().unwrap().len(), 2 * pd.len());
}
