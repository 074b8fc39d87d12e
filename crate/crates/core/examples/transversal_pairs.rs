//! Transversally complex Jacobi pairs: the `L5_3` pair passes, the printed `L5_7` pair
//! does not.

use gencontact::catalog::catalog_get;
use gencontact::structures::{transversal_check, JacobiTensor};

fn main() {
    for name in ["L5_3", "L5_7"] {
        let entry = catalog_get(name).unwrap();
        let w = entry.spectral_witness.as_ref().unwrap();
        let j = JacobiTensor::new(&entry.ext, w.j.clone()).unwrap();
        let (cert, _) = transversal_check(&entry.ext, &j, &w.k).unwrap();
        println!(
            "{name}: {:?}; failed condition: {}",
            cert.verdict, cert.witness["failed"]
        );
        for extra in &entry.extra_pairs {
            let j = JacobiTensor::new(&entry.ext, extra.j.clone()).unwrap();
            let (cert, _) = transversal_check(&entry.ext, &j, &extra.k).unwrap();
            println!(
                "  other pair J = {}: {:?}",
                entry.ext.space().render(&extra.j),
                cert.verdict
            );
        }
    }
}
