//! Reading and writing algebras, forms and subspaces in the JSON grammar.

use gencontact::catalog::{catalog_get, entry_to_json};
use gencontact::exterior::Form;
use gencontact::io;
use gencontact::scalar::Gauss;
use num_traits::One;

fn main() {
    let entry = catalog_get("L5_2").unwrap();
    let text = serde_json::to_string_pretty(&io::algebra_to_json(&entry.algebra)).unwrap();
    println!("{text}");
    let back = io::algebra_from_json(&io::parse_json_text(&text).unwrap()).unwrap();
    println!("roundtrip equal: {}", back == entry.algebra);

    let space = entry.ext.space();
    let omega = &Form::term(6, &[0, 2], Gauss::one()) - &Form::term(6, &[5, 3], Gauss::one());
    let json = io::element_to_json(space, &omega);
    println!("{json}");
    println!(
        "form roundtrip equal: {}",
        io::form_from_json(space, &json).unwrap() == omega
    );

    let bad = r#"{"name":"x","dim":2,"basis":["a","b"],"brackets":[{"x":"a","y":"b","value":{"a":"1"}},{"x":"a","y":"b","value":{"b":"1"}}]}"#;
    println!(
        "duplicate bracket: {}",
        io::algebra_from_json(&io::parse_json_text(bad).unwrap()).unwrap_err()
    );
    println!("{}", entry_to_json(&catalog_get("L5_3").unwrap()));
}
