//! The summary table of the nine five-dimensional nilpotent Lie algebras.

use gencontact::catalog::{catalog, no_contact_criteria, run_table};

fn main() {
    for entry in catalog() {
        if entry.contact_witness.is_none() {
            let c = no_contact_criteria(&entry.algebra).unwrap();
            println!("{}: no-contact {:?} {}", entry.name(), c.verdict, c.witness);
        }
    }
    let table = run_table().unwrap();
    print!("{table}");
    for m in table.mismatches() {
        println!("mismatch: {m}");
    }
}
