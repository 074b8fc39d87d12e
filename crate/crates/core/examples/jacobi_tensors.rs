//! Jacobi tensors: graph involutivity, the `(Λ, E)` pair identities and the inverse
//! extension, on the `L5_3` tensor `J = e₃∧e₁ + 𝟙∧e₄`.

use gencontact::catalog::{algebra, l53_witness};
use gencontact::exterior::Multivector;
use gencontact::scalar::Gauss;
use gencontact::structures::{jacobi_inverse_extend, jacobi_report, JacobiTensor};
use num_traits::One;

fn main() {
    let ext = algebra("L5_3").unwrap().extend().unwrap();
    let space = ext.space();
    let j = JacobiTensor::new(&ext, l53_witness().j).unwrap();
    let r = jacobi_report(&ext, &j).unwrap();
    println!("J = {}", space.render(j.bivector()));
    println!(
        "  Lambda = {}, E = {}",
        space.render(&j.lambda()),
        space.render(&j.e())
    );
    println!(
        "  graph involutive: {}, pair identities: {}",
        r.is_jacobi(),
        r.pair_condition()
    );
    println!("  image of J#: dim {}", j.image().dim());
    println!(
        "  extension of the inverse: {}",
        space.render(&jacobi_inverse_extend(&j, None).unwrap())
    );

    let bad = JacobiTensor::new(&ext, Multivector::term(6, &[0, 1], Gauss::one())).unwrap();
    let r = jacobi_report(&ext, &bad).unwrap();
    println!(
        "e1^e2: graph involutive: {}, pair identities: {}",
        r.is_jacobi(),
        r.pair_condition()
    );
}
