//! Chevalley–Eilenberg differential, the differential `D = δ + 𝟙*∧` on the extension,
//! its contracting homotopy and Lie derivatives, on `L5_6`.

use gencontact::catalog::algebra;
use gencontact::exterior::{monomials, Form, Multivector};
use gencontact::scalar::Gauss;
use num_traits::One;

fn main() {
    let alg = algebra("L5_6").unwrap();
    println!("{} valid: {}", alg.name(), alg.validate().holds());
    for k in 0..5 {
        let e = Form::term(5, &[k], Gauss::one());
        println!(
            "  d e{}* = {}",
            k + 1,
            alg.space().render(&alg.ce_diff(&e).unwrap())
        );
    }
    let (center, lcs) = alg.center_and_lcs();
    println!(
        "center dim {}, lower central series dims {:?}",
        center.dim(),
        lcs.iter().map(|s| s.dim()).collect::<Vec<_>>()
    );

    let ext = alg.extend().unwrap();
    let space = ext.space();
    let n = ext.dim();
    // D² = 0 and Dι_𝟙 + ι_𝟙D = id on every basis monomial
    let mut checked = 0;
    for k in 0..=n {
        for m in monomials(n, k) {
            let psi = Form::term(n, &m.indices(), Gauss::one());
            let d = ext.der_diff(&psi).unwrap();
            assert!(ext.der_diff(&d).unwrap().is_zero());
            let h =
                &ext.der_diff(&ext.homotopy(&psi).unwrap()).unwrap() + &ext.homotopy(&d).unwrap();
            assert_eq!(h, psi);
            checked += 1;
        }
    }
    println!("D^2 = 0 and the homotopy identity hold on all {checked} basis forms");

    let theta = ext.lift_form(&Form::term(5, &[4], Gauss::one())).unwrap();
    println!("D e5* = {}", space.render(&ext.der_diff(&theta).unwrap()));
    let x = Multivector::term(n, &[0], Gauss::one());
    println!(
        "L_e1 e5* = {}",
        space.render(&ext.lie_derivative(&x, &theta).unwrap())
    );
}
