//! Contact forms, the associated GCS and the block form of its endomorphism.

use gencontact::catalog::catalog_get;
use gencontact::omni::{classify_subspace, from_endomorphism, to_endomorphism, Twist};
use gencontact::structures::{contact_check, contact_coefficient, contact_to_gcs};

fn main() {
    for name in ["L5_4", "L5_5", "L5_6"] {
        let entry = catalog_get(name).unwrap();
        let theta = entry.contact_witness.as_ref().unwrap();
        let coeff = contact_coefficient(&entry.algebra, theta).unwrap();
        println!(
            "{name}: e5*^(d e5*)^2 = {coeff} * top, certificate {:?}",
            contact_check(&entry.algebra, theta).unwrap().verdict
        );
        let l = contact_to_gcs(&entry.ext, theta).unwrap();
        let ok = classify_subspace(&entry.ext, &l, &Twist::zero(&entry.ext))
            .unwrap()
            .is_gcs();
        let k = to_endomorphism(&entry.ext, &l).unwrap();
        let back = from_endomorphism(&k).unwrap();
        println!(
            "  gcs {ok}; phi = 0: {}; roundtrip: {}",
            k.diagonal_blocks_vanish(),
            back == l
        );
    }
}
