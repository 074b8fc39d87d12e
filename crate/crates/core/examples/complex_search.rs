//! Searches integrable complex structures of the form `e_a ↦ e_b ↦ −e_a` on each
//! extended catalog algebra and verifies the stored witnesses.

use gencontact::catalog::{catalog, search_pair_complex};

fn main() {
    for entry in catalog() {
        let found = search_pair_complex(&entry.ext);
        let stored = entry
            .complex_witness
            .as_ref()
            .map(|phi| {
                if phi.is_integrable(&entry.ext) {
                    "stored witness integrable"
                } else {
                    "stored witness FAILS"
                }
            })
            .unwrap_or("no stored witness");
        println!(
            "{}: {} pair structures found; {stored}",
            entry.name(),
            found.len()
        );
    }
}
