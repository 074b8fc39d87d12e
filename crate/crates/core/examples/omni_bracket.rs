//! The Dorfman bracket and pairing on `𝔤_ℝ ⊕ 𝔤_ℝ*`, classification of subspaces and
//! B-field transforms, on `L5_2`.

use gencontact::catalog::catalog_get;
use gencontact::exterior::Form;
use gencontact::linalg::{unit_vector, Field};
use gencontact::omni::{
    b_transform, classify_subspace, dorfman, pairing, OmniSubspace, OmniVector, Twist,
};
use gencontact::scalar::Gauss;
use gencontact::structures::complex_to_gcs;
use num_traits::{One, Zero};

fn main() {
    let entry = catalog_get("L5_2").unwrap();
    let ext = &entry.ext;
    let n = ext.dim();
    let zero = Twist::zero(ext);
    let a = OmniVector::new(
        unit_vector(n, 0),
        Form::term(n, &[2], Gauss::one()).to_coords(1),
    );
    let b = OmniVector::new(unit_vector(n, 1), vec![Gauss::zero(); n]);
    let br = dorfman(ext, &a, &b, &zero).unwrap();
    println!(
        "[[a, b]] = ({:?}, {:?}),  <<a, b>> = {}",
        br.vector_part(),
        br.form_part(),
        pairing(&a, &b)
    );

    // only vectors: isotropic and involutive, but meets its conjugate
    let tangent = OmniSubspace::span(
        Field::Complex,
        n,
        &(0..n)
            .map(|k| OmniVector::new(unit_vector(n, k), vec![Gauss::zero(); n]))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let c = classify_subspace(ext, &tangent, &zero).unwrap();
    println!(
        "tangent bundle: gcs = {}, failed axiom = {:?}",
        c.is_gcs(),
        c.failed_axiom()
    );

    let l = complex_to_gcs(ext, entry.complex_witness.as_ref().unwrap()).unwrap();
    println!(
        "complex structure gives a GCS: {}",
        classify_subspace(ext, &l, &zero).unwrap().is_gcs()
    );

    for (name, b) in [
        ("e1*^e2*", Form::term(n, &[0, 1], Gauss::one())),
        ("e3*^e4*", Form::term(n, &[2, 3], Gauss::one())),
    ] {
        let (lb, h) = b_transform(ext, &l, &b, &zero).unwrap();
        let gcs = classify_subspace(ext, &lb, &h).unwrap().is_gcs();
        println!(
            "B = {name}: new twist DB zero = {}, still a GCS for it = {gcs}",
            h.is_zero()
        );
    }
}
