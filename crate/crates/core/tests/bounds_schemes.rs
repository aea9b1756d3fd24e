mod common;

use common::{random_mixed_sign, random_one_sign, rel_err, rng};
use distsense::bounds::{
    allocate_groups, appendix_d_triple, group_bound, heisenberg_envelope, product_squeezed_bound,
    proposed_bound, sql_bound,
};
use distsense::fisher::qfim_pure;
use distsense::schemes::{evaluate_scheme, SchemeKind, SchemeSpec};
use distsense::WeightVector;
use proptest::prelude::*;

fn weights_strategy() -> impl Strategy<Value = WeightVector> {
    proptest::collection::vec((0.01..1.0f64, any::<bool>()), 1..7).prop_map(|v| {
        WeightVector::new(v.into_iter().map(|(x, neg)| if neg { -x } else { x }).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bound_hierarchy(w in weights_strategy(), n in 0.1..100.0f64) {
        let sql = sql_bound(&w, n);
        let product = product_squeezed_bound(&w, n).unwrap();
        let proposed = proposed_bound(&w, n).unwrap();
        prop_assert!(rel_err(sql, 1.0 / (4.0 * n)) < 1e-12);
        prop_assert!(proposed <= product * (1.0 + 1e-12));
        prop_assert!(product < sql);
        prop_assert!(proposed < heisenberg_envelope(&w, n));
        prop_assert!(proposed < 1.0 / (4.0 * n * n));
    }

    #[test]
    fn proposed_depends_only_on_group_norms(w in weights_strategy(), n in 0.1..50.0f64) {
        let (pos, neg) = w.group_norms();
        let mut collapsed = Vec::new();
        if pos > 0.0 { collapsed.push(pos); }
        if neg > 0.0 { collapsed.push(-neg); }
        let c = WeightVector::new(collapsed).unwrap();
        let a = proposed_bound(&w, n).unwrap();
        prop_assert!(rel_err(a, proposed_bound(&c, n).unwrap()) < 1e-10);
        let mut rev = w.raw().to_vec();
        rev.reverse();
        let r = WeightVector::new(rev).unwrap();
        prop_assert!(rel_err(a, proposed_bound(&r, n).unwrap()) < 1e-10);
    }

    #[test]
    fn group_allocation_is_locally_optimal(w in weights_strategy(), n in 0.1..100.0f64, shift in -0.01..0.01f64) {
        let (pos, neg) = w.group_norms();
        prop_assume!(pos > 0.0 && neg > 0.0);
        let alloc = allocate_groups(&w, n).unwrap();
        prop_assert!(alloc.residual <= 1e-9 * n);
        let total = |np: f64| group_bound(&[pos], np) + group_bound(&[neg], n - np);
        let np = alloc.n_bar[0];
        let best = total(np);
        let moved = (np * (1.0 + shift)).clamp(1e-12, n - 1e-12);
        prop_assert!(total(moved) >= best * (1.0 - 1e-12));
    }
}

#[test]
fn two_group_probe_saturates_proposed_bound() {
    let mut r = rng(3);
    for m in 1..=6 {
        for n in [0.5, 2.0, 10.0] {
            let w = if m >= 2 { random_mixed_sign(&mut r, m) } else { random_one_sign(&mut r, m) };
            let spec = SchemeSpec::new(SchemeKind::TwoGroup, w.clone(), n).unwrap();
            let report = evaluate_scheme(&spec, None, &w).unwrap();
            let want = proposed_bound(&w, n).unwrap();
            assert!(rel_err(report.qcrb, want) < 1e-9, "m={m} n={n}: {} vs {want}", report.qcrb);
            let ccrb = report.homodyne_ccrb.unwrap();
            assert!(rel_err(ccrb, report.qcrb) < 1e-7, "homodyne {ccrb} vs {}", report.qcrb);
        }
    }
}

#[test]
fn two_group_covariance_is_block_diagonal() {
    let w = WeightVector::new(vec![0.3, -0.1, 0.2, -0.25, 0.15]).unwrap();
    let probe = SchemeSpec::new(SchemeKind::TwoGroup, w.clone(), 4.0).unwrap().build_probe().unwrap();
    for &i in w.pos_modes() {
        for &j in w.neg_modes() {
            assert!(probe.block(i, j).amax() < 1e-14, "block ({i},{j}) not zero");
        }
    }
    let h = qfim_pure(&probe).unwrap();
    for &i in w.pos_modes() {
        for &j in w.neg_modes() {
            assert!(h.matrix()[(i, j)].abs() < 1e-12);
        }
    }
}

#[test]
fn every_scheme_spends_the_photon_budget() {
    let mut r = rng(5);
    for m in 2..=5 {
        let w = random_mixed_sign(&mut r, m);
        for n in [0.3, 4.0, 25.0] {
            for kind in [
                SchemeKind::CoherentProduct,
                SchemeKind::ProductSqueezed,
                SchemeKind::TwoGroup,
                SchemeKind::NaiveGlobal,
            ] {
                let probe = SchemeSpec::new(kind.clone(), w.clone(), n).unwrap().build_probe().unwrap();
                assert!(probe.is_pure());
                assert!(rel_err(probe.total_photon_number(), n) < 1e-10, "{} m={m} n={n}", kind.name());
            }
        }
    }
}

#[test]
fn classical_schemes_hit_their_closed_forms() {
    let mut r = rng(9);
    for m in 1..=5 {
        let w = random_one_sign(&mut r, m);
        let n = 3.0;
        let coherent = SchemeSpec::new(SchemeKind::CoherentProduct, w.clone(), n).unwrap();
        let q = evaluate_scheme(&coherent, None, &w).unwrap();
        assert!(rel_err(q.qcrb, sql_bound(&w, n)) < 1e-10);
        assert!(q.homodyne_ccrb.is_none());
        let product = SchemeSpec::new(SchemeKind::ProductSqueezed, w.clone(), n).unwrap();
        let q = evaluate_scheme(&product, None, &w).unwrap();
        assert!(rel_err(q.qcrb, product_squeezed_bound(&w, n).unwrap()) < 1e-9);
    }
}

#[test]
fn naive_global_matches_closed_form_on_symmetric_weights() {
    for (m, nbar) in [(2usize, 1.0), (4, 1.0), (4, 2.5), (6, 0.5)] {
        let raw: Vec<f64> = (0..m).map(|i| if i < m / 2 { 1.0 } else { -1.0 }).collect();
        let w = WeightVector::new(raw).unwrap();
        let n = m as f64 * nbar;
        let spec = SchemeSpec::new(SchemeKind::NaiveGlobal, w.clone(), n).unwrap();
        let q = evaluate_scheme(&spec, None, &w).unwrap().qcrb;
        let (naive, product, two_group) = appendix_d_triple(m, nbar).unwrap();
        assert!(rel_err(q, naive) < 1e-8, "m={m}: {q} vs {naive}");
        assert!(two_group <= product * (1.0 + 1e-12) && product < naive);
        assert!(rel_err(two_group, proposed_bound(&w, n).unwrap()) < 1e-10);
    }
}

#[test]
fn invalid_scheme_inputs() {
    let w = WeightVector::new(vec![0.5, -0.5]).unwrap();
    assert!(SchemeSpec::new(SchemeKind::TwoGroup, w.clone(), 0.0).is_err());
    assert!(SchemeSpec::new(SchemeKind::TwoGroup, w.clone(), f64::NAN).is_err());
    assert!(WeightVector::new(vec![]).is_err());
    assert!(WeightVector::new(vec![0.5, 0.0]).is_err());
    assert!(appendix_d_triple(3, 1.0).is_err());
}
