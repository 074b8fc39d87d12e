//! Wedge products, contractions and evaluation in the exterior algebra of a based space.

use gencontact::exterior::{contract, evaluate, BasedSpace, Form, Multivector};
use gencontact::scalar::Gauss;
use num_traits::One;

fn main() {
    let space = BasedSpace::new((1..=3).map(|k| format!("e{k}")).collect())
        .unwrap()
        .extended()
        .unwrap();
    let n = space.dim();
    let one = Gauss::one();

    let a = Form::term(n, &[0], one.clone());
    let b = Form::term(n, &[1], one.clone());
    let ab = a.wedge(&b).unwrap();
    println!("e1* ^ e2*            = {}", space.render(&ab));
    println!(
        "e2* ^ e1*            = {}",
        space.render(&b.wedge(&a).unwrap())
    );

    // ι_{e1∧e2} applies ι_{e2} first
    let top = Form::term(n, &[3, 0, 1], one.clone());
    let x = Multivector::term(n, &[0, 1], one.clone());
    println!(
        "i(e1^e2) unit*^e1*^e2* = {}",
        space.render(&contract(&x, &top).unwrap())
    );

    let omega = &ab + &Form::term(n, &[2, 3], Gauss::from_int(3));
    let xy = Multivector::term(n, &[2, 3], one);
    println!(
        "omega = {}, <omega, e3^unit> = {}",
        space.render(&omega),
        evaluate(&omega, &xy).unwrap()
    );
    println!("omega^omega = {}", space.render(&omega.wedge_power(2)));
}
