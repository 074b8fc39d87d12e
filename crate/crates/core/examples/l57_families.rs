//! Exact checks on `L5_7 ⊕ ℝ` for the two families of complex subalgebras `K` with
//! `K ∩ K̄` of dimension 2 or 4: the closed complex 2-forms never have a nondegenerate
//! imaginary part on `S = K ∩ K̄`, so no GCS has such a `K`.

use gencontact::catalog::catalog_get;
use gencontact::exterior::{binomial, evaluate, Form, Multivector};
use gencontact::lie::ExtendedAlgebra;
use gencontact::linalg::{axpy, invert, kernel, realify, unit_vector, Field, Subspace, Vector};
use gencontact::scalar::{rat, Gauss};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Basis of real `(B, A)` with `ι_Z D(B + iA) = 0` for all `Z ∈ Λ³K`.
fn closed_pairs(ext: &ExtendedAlgebra, k: &Subspace) -> Vec<Vector> {
    let n = ext.dim();
    let n2 = binomial(n, 2);
    let kb = k.basis();
    let mut zs = Vec::new();
    for a in 0..kb.len() {
        for b in a + 1..kb.len() {
            for c in b + 1..kb.len() {
                let v = |x: &Vector| Multivector::from_vector(x);
                zs.push(
                    v(&kb[a])
                        .wedge(&v(&kb[b]))
                        .unwrap()
                        .wedge(&v(&kb[c]))
                        .unwrap(),
                );
            }
        }
    }
    let mut cols = Vec::new();
    for s in [Gauss::from_int(1), Gauss::i()] {
        for t in 0..n2 {
            let df = ext
                .der_diff(&Form::from_coords(n, 2, &unit_vector(n2, t)).scale(&s))
                .unwrap();
            cols.push(
                zs.iter()
                    .map(|z| evaluate(&df, z).unwrap())
                    .collect::<Vector>(),
            );
        }
    }
    let rows: Vec<Vector> = (0..zs.len())
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let (rr, _) = realify(&rows, &vec![Gauss::zero(); rows.len()]);
    kernel(&rr, 2 * n2)
}

/// Maximal rank of `Im ε` on `S` over the closed pairs, via a few random combinations.
fn nondegenerate_somewhere(
    ext: &ExtendedAlgebra,
    s: &Subspace,
    k: &Subspace,
    rng: &mut ChaCha8Rng,
) -> bool {
    let n2 = binomial(ext.dim(), 2);
    let ker = closed_pairs(ext, k);
    (0..4).any(|_| {
        let mut v = vec![Gauss::zero(); 2 * n2];
        for kv in &ker {
            axpy(&mut v, &Gauss::from_int(rng.gen_range(-20..=20)), kv);
        }
        let a = Form::from_coords(ext.dim(), 2, &v[n2..]);
        let sb = s.basis();
        let m: Vec<Vector> = sb
            .iter()
            .map(|x| {
                sb.iter()
                    .map(|y| {
                        evaluate(
                            &a,
                            &Multivector::from_vector(x)
                                .wedge(&Multivector::from_vector(y))
                                .unwrap(),
                        )
                        .unwrap()
                    })
                    .collect()
            })
            .collect();
        invert(&m).is_some()
    })
}

fn main() {
    let entry = catalog_get("L5_7").unwrap();
    let ext = &entry.ext;
    let n = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = |rng: &mut ChaCha8Rng| {
        Gauss::new(rat(rng.gen_range(-3..=3), 1), rat(rng.gen_range(-3..=3), 1))
    };
    let (mut tried2, mut found2) = (0, 0);
    for _ in 0..60 {
        // K = ⟨e1 + a₂e₂ + a₆𝟙, e3 + β𝟙, e4, e5⟩
        let mut k0 = unit_vector(n, 0);
        k0[1] = g(&mut rng);
        k0[5] = g(&mut rng);
        let mut w = unit_vector(n, 2);
        w[5] = g(&mut rng);
        let k = Subspace::span(
            Field::Complex,
            n,
            vec![k0, w, unit_vector(n, 3), unit_vector(n, 4)],
        )
        .unwrap();
        let s = k.intersect(&k.conj()).unwrap();
        if s.dim() != 2 || !k.sum(&k.conj()).unwrap().is_full() {
            continue;
        }
        tried2 += 1;
        found2 += nondegenerate_somewhere(ext, &s, &k, &mut rng) as usize;
    }
    println!("dim S = 2 family: {tried2} subspaces, {found2} with a nondegenerate closed form");
    let (mut tried4, mut found4) = (0, 0);
    for _ in 0..60 {
        // S = ⟨e3, e4, e5, w⟩ an ideal, K = S_ℂ + ⟨z⟩
        let mut w = vec![Gauss::zero(); n];
        for idx in [0, 1, 5] {
            w[idx] = Gauss::from_int(rng.gen_range(-3..=3));
        }
        let s = Subspace::span(
            Field::Complex,
            n,
            vec![unit_vector(n, 2), unit_vector(n, 3), unit_vector(n, 4), w],
        )
        .unwrap();
        let z: Vector = (0..n).map(|_| g(&mut rng)).collect();
        let mut gens = s.basis().to_vec();
        gens.push(z);
        let k = Subspace::span(Field::Complex, n, gens).unwrap();
        if s.dim() != 4
            || k.intersect(&k.conj()).unwrap() != s
            || !k.sum(&k.conj()).unwrap().is_full()
        {
            continue;
        }
        tried4 += 1;
        found4 += nondegenerate_somewhere(ext, &s, &k, &mut rng) as usize;
    }
    println!("dim S = 4 family: {tried4} subspaces, {found4} with a nondegenerate closed form");
}
