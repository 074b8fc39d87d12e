mod common;

use gencontact::catalog::{catalog, witness_gcs, NAMES};
use gencontact::exterior::{binomial, contract, Form, Multivector};
use gencontact::linalg::Vector;
use gencontact::omni::{
    b_transform, classify_subspace, dorfman, from_endomorphism, pairing, to_endomorphism,
    OmniVector, Twist,
};
use gencontact::scalar::{rat, Gauss};
use gencontact::spectral::{
    filtration_relations, obstruction_report, witness_del, SpectralContext,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gauss() -> impl Strategy<Value = Gauss> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| Gauss::new(rat(a, 1), rat(b, 1)))
}

fn coords(len: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(gauss(), len)
}

fn form(n: usize, k: usize) -> impl Strategy<Value = Form> {
    coords(binomial(n, k)).prop_map(move |c| Form::from_coords(n, k, &c))
}

fn omni(n: usize) -> impl Strategy<Value = OmniVector> {
    (coords(n), coords(n)).prop_map(|(v, f)| OmniVector::new(v, f))
}

fn algebra_index() -> impl Strategy<Value = usize> {
    0..NAMES.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squares_to_zero_and_homotopy(idx in algebra_index(), k in 0usize..=6, seed in any::<u64>()) {
        let ext = common::entry_by_name(NAMES[idx]).ext;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = Form::from_coords(6, k, &common::rand_vector(&mut rng, binomial(6, k), 5));
        let d = ext.der_diff(&psi).unwrap();
        prop_assert!(ext.der_diff(&d).unwrap().is_zero());
        let h = &ext.der_diff(&ext.homotopy(&psi).unwrap()).unwrap() + &ext.homotopy(&d).unwrap();
        prop_assert_eq!(h, psi);
    }

    #[test]
    fn wedge_is_graded_commutative_and_associative(a in form(6, 1), b in form(6, 2), c in form(6, 2)) {
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        let aa = a.wedge(&a).unwrap();
        prop_assert!(aa.is_zero());
        prop_assert_eq!(a.wedge(&b).unwrap().wedge(&c).unwrap(), a.wedge(&b.wedge(&c).unwrap()).unwrap());
    }

    #[test]
    fn contraction_is_an_antiderivation(v in coords(6), a in form(6, 1), b in form(6, 2)) {
        let x = Multivector::from_vector(&v);
        let lhs = contract(&x, &a.wedge(&b).unwrap()).unwrap();
        let rhs = &contract(&x, &a).unwrap().wedge(&b).unwrap() - &a.wedge(&contract(&x, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dorfman_leibniz_and_square(idx in algebra_index(), a in omni(6), b in omni(6), c in omni(6)) {
        let ext = common::entry_by_name(NAMES[idx]).ext;
        let zero = Twist::zero(&ext);
        let br = |x: &OmniVector, y: &OmniVector| dorfman(&ext, x, y, &zero).unwrap();
        prop_assert_eq!(br(&a, &br(&b, &c)), br(&br(&a, &b), &c).add(&br(&b, &br(&a, &c))));
        let half = pairing(&a, &a).scale(&rat(1, 2));
        let want = OmniVector::new(vec![Gauss::from_int(0); 6], ext.der_diff(&Form::scalar(6, half)).unwrap().to_coords(1));
        prop_assert_eq!(br(&a, &a), want);
        prop_assert_eq!(pairing(&a, &b), pairing(&b, &a));
    }

    #[test]
    fn twisted_dorfman_leibniz_for_closed_twist(idx in algebra_index(), beta in form(6, 2), a in omni(6), b in omni(6), c in omni(6)) {
        let ext = common::entry_by_name(NAMES[idx]).ext;
        let h = Twist::new(&ext, ext.der_diff(&beta.real_part()).unwrap()).unwrap();
        let br = |x: &OmniVector, y: &OmniVector| dorfman(&ext, x, y, &h).unwrap();
        prop_assert_eq!(br(&a, &br(&b, &c)), br(&br(&a, &b), &c).add(&br(&b, &br(&a, &c))));
    }

    #[test]
    fn b_fields_preserve_the_verdict(idx in algebra_index(), beta in form(6, 1), b in form(6, 2), closed in any::<bool>()) {
        let entry = common::entry_by_name(NAMES[idx]);
        let ext = &entry.ext;
        if let Ok((_, l)) = witness_gcs(&entry) {
            let b = if closed { ext.der_diff(&beta.real_part()).unwrap() } else { b.real_part() };
            let (lb, h) = b_transform(ext, &l, &b, &Twist::zero(ext)).unwrap();
            let after = classify_subspace(ext, &lb, &h).unwrap();
            prop_assert!(after.is_gcs());
            prop_assert_eq!(h.is_zero(), b.is_zero() || ext.der_diff(&b).unwrap().is_zero());
            let k = to_endomorphism(ext, &lb).unwrap();
            prop_assert_eq!(from_endomorphism(&k).unwrap(), lb);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_pairs_satisfy_relations_and_the_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seeds = common::seed_pairs();
        let (name, pair) = &seeds[(seed as usize) % seeds.len()];
        let ext = pair.ext().clone();
        let a = common::random_automorphism(&ext, &mut rng);
        let j = gencontact::structures::JacobiTensor::new(&ext, common::push_bivector(&a, pair.tensor().bivector())).unwrap();
        let k = common::push_subspace(&a, pair.k());
        let image = gencontact::structures::transversal_pair(&ext, &j, &k);
        prop_assert!(image.is_ok(), "image of {} rejected", name);
        let ctx = SpectralContext::new(image.unwrap()).unwrap();
        let rel = filtration_relations(&ctx);
        prop_assert!(rel.holds(), "{:?}", rel.violations);
        let r = obstruction_report(&ctx).unwrap();
        prop_assert_eq!(r.direct_feasible(), r.primary_zero && r.secondary_feasible());
        if let Some(w) = &r.direct {
            prop_assert!(witness_del(&ctx, w).unwrap().is_zero());
        }
    }
}

#[test]
fn automorphic_images_keep_the_catalog_verdict() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let seeds = common::seed_pairs();
    assert!(seeds.len() >= catalog().len());
    for (name, pair) in seeds {
        let ext = pair.ext().clone();
        let a = common::random_automorphism(&ext, &mut rng);
        let j = gencontact::structures::JacobiTensor::new(
            &ext,
            common::push_bivector(&a, pair.tensor().bivector()),
        )
        .unwrap();
        let image = gencontact::structures::transversal_pair(
            &ext,
            &j,
            &common::push_subspace(&a, pair.k()),
        )
        .unwrap();
        let before = obstruction_report(&SpectralContext::new(pair).unwrap())
            .unwrap()
            .direct_feasible();
        let after = obstruction_report(&SpectralContext::new(image).unwrap())
            .unwrap()
            .direct_feasible();
        assert_eq!(before, after, "{name}");
    }
}
