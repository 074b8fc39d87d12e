//! Shared fixtures: seed pairs from the catalog and random valid pairs obtained by pushing
//! them forward along automorphisms of the extended algebra.

#![allow(dead_code)]

use gencontact::catalog::{catalog, witness_gcs, CatalogEntry};
use gencontact::exterior::Multivector;
use gencontact::lie::ExtendedAlgebra;
use gencontact::linalg::{apply, identity, matmul, unit_vector, Field, Subspace, Vector};
use gencontact::omni::{to_endomorphism, OmniSubspace, OmniVector};
use gencontact::scalar::{rat, Gauss};
use gencontact::structures::{transversal_pair, JacobiTensor, TransversalPair};
use num_traits::{One, Zero};
use rand::Rng;

pub fn rand_gauss<R: Rng>(rng: &mut R, bound: i64) -> Gauss {
    Gauss::new(
        rat(rng.gen_range(-bound..=bound), 1),
        rat(rng.gen_range(-bound..=bound), 1),
    )
}

pub fn rand_real<R: Rng>(rng: &mut R, bound: i64) -> Gauss {
    Gauss::from_int(rng.gen_range(-bound..=bound))
}

pub fn rand_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vector {
    (0..n).map(|_| rand_gauss(rng, bound)).collect()
}

pub fn rand_omni<R: Rng>(rng: &mut R, n: usize, bound: i64) -> OmniVector {
    OmniVector::new(rand_vector(rng, n, bound), rand_vector(rng, n, bound))
}

/// `exp(t·ad_x)` composed with `𝟙 ↦ 𝟙 + v` for `v` central in the base algebra.
/// Both preserve the bracket and the dual unit, hence commute with `D`.
pub fn random_automorphism<R: Rng>(ext: &ExtendedAlgebra, rng: &mut R) -> Vec<Vector> {
    let n = ext.dim();
    let unit = ext.unit_index();
    let mut x = vec![Gauss::zero(); n];
    for c in x.iter_mut().take(unit) {
        *c = Gauss::real(rat(rng.gen_range(-2..=2), rng.gen_range(1..=2)));
    }
    // ad[i][j]: coordinate i of [x, e_j]
    let cols: Vec<Vector> = (0..n)
        .map(|j| ext.bracket(&x, &unit_vector(n, j)))
        .collect();
    let ad: Vec<Vector> = (0..n)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let mut exp = identity(n);
    let mut power = identity(n);
    for k in 1..=n {
        power = matmul(&power, &ad);
        let inv = Gauss::real(rat(1, (1..=k as i64).product()));
        for (row, prow) in exp.iter_mut().zip(&power) {
            for (e, p) in row.iter_mut().zip(prow) {
                *e = &*e + &(p * &inv);
            }
        }
    }
    let (center, _) = ext.base().center_and_lcs();
    let mut shift = identity(n);
    for b in center.basis() {
        let c = Gauss::from_int(rng.gen_range(-1..=1));
        for (i, bi) in b.iter().enumerate() {
            shift[i][unit] = &shift[i][unit] + &(bi * &c);
        }
    }
    matmul(&exp, &shift)
}

pub fn push_bivector(a: &[Vector], j: &Multivector) -> Multivector {
    let n = a.len();
    let col = |k: usize| apply(a, &unit_vector(n, k));
    let mut out = Multivector::zero(n);
    for (m, c) in j.terms() {
        let idx = m.indices();
        let w = Multivector::from_vector(&col(idx[0]))
            .wedge(&Multivector::from_vector(&col(idx[1])))
            .unwrap();
        out = &out + &w.scale(c);
    }
    out
}

pub fn push_subspace(a: &[Vector], k: &Subspace) -> Subspace {
    k.map(Field::Complex, a.len(), |v| apply(a, v)).unwrap()
}

/// The pair `(J, pr K)` induced by a generalized contact structure.
pub fn induced_pair(ext: &ExtendedAlgebra, l: &OmniSubspace) -> TransversalPair {
    let k = to_endomorphism(ext, l).unwrap();
    let j = JacobiTensor::new(ext, k.j).unwrap();
    transversal_pair(ext, &j, &l.vector_projection()).unwrap()
}

/// Every valid pair shipped with the catalog, or induced by a shipped GCS witness.
pub fn seed_pairs() -> Vec<(String, TransversalPair)> {
    let mut out = Vec::new();
    for entry in catalog() {
        let name = entry.name().to_string();
        if let Ok((route, l)) = witness_gcs(&entry) {
            out.push((format!("{name} [{route}]"), induced_pair(&entry.ext, &l)));
        }
        if let Some(w) = &entry.spectral_witness {
            if let Ok(p) = w.pair(&entry.ext) {
                out.push((format!("{name} stored pair"), p));
            }
        }
        for (k, w) in entry.extra_pairs.iter().enumerate() {
            out.push((format!("{name} pair {k}"), w.pair(&entry.ext).unwrap()));
        }
    }
    out
}

pub fn entry_by_name(name: &str) -> CatalogEntry {
    gencontact::catalog::catalog_get(name).unwrap()
}

/// `per_seed` random automorphic images of every seed pair.
pub fn random_pairs<R: Rng>(rng: &mut R, per_seed: usize) -> Vec<(String, TransversalPair)> {
    let mut out = Vec::new();
    for (name, pair) in seed_pairs() {
        let ext = pair.ext().clone();
        for t in 0..per_seed {
            let a = random_automorphism(&ext, rng);
            let j = JacobiTensor::new(&ext, push_bivector(&a, pair.tensor().bivector())).unwrap();
            let k = push_subspace(&a, pair.k());
            let p = transversal_pair(&ext, &j, &k)
                .unwrap_or_else(|e| panic!("image {t} of {name} is not a valid pair: {e}"));
            out.push((format!("{name} image {t}"), p));
        }
    }
    out
}

pub fn one() -> Gauss {
    Gauss::one()
}

/// Serialize and reparse every stored object of the catalog; returns what did not survive.
pub fn catalog_roundtrip_failures() -> Vec<String> {
    use gencontact::io;
    let mut bad = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            bad.push(what);
        }
    };
    for entry in catalog() {
        let name = entry.name().to_string();
        let text = serde_json::to_string(&io::algebra_to_json(&entry.algebra)).unwrap();
        let back = io::algebra_from_json(&io::parse_json_text(&text).unwrap()).unwrap();
        check(back == entry.algebra, format!("{name} algebra"));
        let space = entry.ext.space();
        if let Some(theta) = &entry.contact_witness {
            let v = io::element_to_json(entry.algebra.space(), theta);
            check(
                io::form_from_json(entry.algebra.space(), &v).unwrap() == *theta,
                format!("{name} contact form"),
            );
        }
        if let Some(phi) = &entry.complex_witness {
            let v = io::matrix_to_json(&phi.rational_matrix());
            check(
                io::matrix_from_json(&v, entry.ext.dim()).unwrap() == phi.rational_matrix(),
                format!("{name} phi"),
            );
        }
        for w in entry.spectral_witness.iter().chain(&entry.extra_pairs) {
            let j = io::element_to_json(space, &w.j);
            check(
                io::multivector_from_json(space, &j).unwrap() == w.j,
                format!("{name} tensor"),
            );
            let k = io::subspace_to_json(space, &w.k);
            check(
                io::subspace_from_json(space, &k).unwrap() == w.k,
                format!("{name} K"),
            );
        }
        if let Ok((_, l)) = witness_gcs(&entry) {
            let v = io::omni_subspace_to_json(space, &l);
            check(
                io::omni_subspace_from_json(space, &v).unwrap() == l,
                format!("{name} GCS"),
            );
        }
        let a = gencontact::catalog::entry_to_json(&entry).to_string();
        let b =
            gencontact::catalog::entry_to_json(&gencontact::catalog::catalog_get(&name).unwrap())
                .to_string();
        check(a == b, format!("{name} entry json is not deterministic"));
    }
    bad
}
