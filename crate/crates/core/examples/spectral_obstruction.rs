//! Pages of the filtered complex and the obstruction to inducing a pair from a GCS.

use gencontact::catalog::catalog_get;
use gencontact::omni::{classify_subspace, to_endomorphism, Twist};
use gencontact::spectral::{build_gcs, obstruction_report, page_table, SpectralContext};

fn main() {
    let entry = catalog_get("L5_3").unwrap();
    let pair = entry
        .spectral_witness
        .as_ref()
        .unwrap()
        .pair(&entry.ext)
        .unwrap();
    let ctx = SpectralContext::new(pair.clone()).unwrap();
    let space = entry.ext.space();
    println!("dim F_1^2 = {}", ctx.f(1, 2).dim());
    for row in page_table(&ctx, 2).unwrap()["pages"].as_array().unwrap() {
        println!(
            "  E_{}^{{{},{}}} dim {}  split {}",
            row["r"], row["p"], row["q"], row["dim"], row["split"]
        );
    }
    let r = obstruction_report(&ctx).unwrap();
    println!(
        "primary zero {}, secondary feasible {}, direct feasible {}, agreement {}",
        r.primary_zero,
        r.secondary_feasible(),
        r.direct_feasible(),
        r.agreement()
    );
    let w = r.direct.unwrap();
    println!(
        "omega = {}\nB = {}",
        space.render(&w.omega),
        space.render(&w.b)
    );
    let l = build_gcs(&pair, &w.omega, &w.b).unwrap();
    println!(
        "built subspace is a GCS: {}",
        classify_subspace(&entry.ext, &l, &Twist::zero(&entry.ext))
            .unwrap()
            .is_gcs()
    );
    let k = to_endomorphism(&entry.ext, &l).unwrap();
    println!(
        "induced J equals the input: {}",
        &k.j == pair.tensor().bivector()
    );

    let l57 = catalog_get("L5_7").unwrap();
    for extra in &l57.extra_pairs {
        let ctx = SpectralContext::new(extra.pair(&l57.ext).unwrap()).unwrap();
        let r = obstruction_report(&ctx).unwrap();
        println!(
            "L5_7 pair J = {}: primary zero {}, direct feasible {}",
            l57.ext.space().render(&extra.j),
            r.primary_zero,
            r.direct_feasible()
        );
    }
}
