//! The nine five-dimensional nilpotent Lie algebras `L5_1 … L5_9` with stored witnesses,
//! the no-contact criteria and the summary table.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::exterior::{Form, Monomial, Multivector};
use crate::io;
use crate::lie::{ExtendedAlgebra, LieAlgebra};
use crate::linalg::{unit_vector, Field, Subspace, Vector};
use crate::omni::{classify_certificate, OmniSubspace, Twist};
use crate::scalar::{Gauss, Rational};
use crate::spectral::{build_gcs, direct_feasibility, SpectralContext};
use crate::structures::{
    complex_check, complex_to_gcs, contact_check, contact_to_gcs, transversal_pair,
    ComplexStructure, JacobiTensor, TransversalPair,
};

pub const NAMES: [&str; 9] = [
    "L5_1", "L5_2", "L5_3", "L5_4", "L5_5", "L5_6", "L5_7", "L5_8", "L5_9",
];

/// Brackets `[e_i, e_j] = e_k`, 1-based.
fn bracket_table(name: &str) -> Option<&'static [(usize, usize, usize)]> {
    Some(match name {
        "L5_1" => &[],
        "L5_2" => &[(1, 2, 3)],
        "L5_3" => &[(1, 2, 3), (1, 3, 4)],
        "L5_4" => &[(1, 2, 5), (3, 4, 5)],
        "L5_5" => &[(1, 2, 3), (1, 3, 5), (2, 4, 5)],
        "L5_6" => &[(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5)],
        "L5_7" => &[(1, 2, 3), (1, 3, 4), (1, 4, 5)],
        "L5_8" => &[(1, 2, 4), (1, 3, 5)],
        "L5_9" => &[(1, 2, 3), (1, 3, 4), (2, 3, 5)],
        _ => return None,
    })
}

pub fn algebra(name: &str) -> Result<LieAlgebra> {
    let table = bracket_table(name).ok_or_else(|| {
        Error::input(format!(
            "unknown algebra {name:?}; valid names are {}",
            NAMES.join(", ")
        ))
    })?;
    let labels = (1..=5).map(|k| format!("e{k}")).collect();
    let brackets = table
        .iter()
        .map(|&(i, j, k)| {
            let mut v = vec![Rational::zero(); 5];
            v[k - 1] = Rational::one();
            ((i - 1, j - 1), v)
        })
        .collect();
    LieAlgebra::new(name, labels, brackets)
}

/// Expected table row: contact, complex on `𝔤_ℝ`, generalized contact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedRow {
    pub contact: bool,
    pub complex: bool,
    pub gencontact: bool,
}

/// A Jacobi tensor and a complex subspace, both on `𝔤_ℝ`.
#[derive(Clone, Debug)]
pub struct SpectralWitness {
    pub j: Multivector,
    pub k: Subspace,
}

impl SpectralWitness {
    pub fn pair(&self, ext: &ExtendedAlgebra) -> Result<TransversalPair> {
        let j = JacobiTensor::new(ext, self.j.clone())?;
        transversal_pair(ext, &j, &self.k)
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub algebra: LieAlgebra,
    pub ext: ExtendedAlgebra,
    pub contact_witness: Option<Form>,
    pub complex_witness: Option<ComplexStructure>,
    pub spectral_witness: Option<SpectralWitness>,
    /// Further valid transversally complex pairs, induced by a GCS or not.
    pub extra_pairs: Vec<SpectralWitness>,
    pub expected: ExpectedRow,
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        self.algebra.name()
    }
}

fn e(k: usize) -> Vector {
    unit_vector(6, k - 1)
}

fn bi(a: usize, b: usize) -> Multivector {
    Multivector::term(6, &[a - 1, b - 1], Gauss::one())
}

/// `x + i·y` for basis indices, 1-based with `6 = 𝟙`.
fn complex_vector(x: usize, y: usize) -> Vector {
    let mut v = e(x);
    v[y - 1] = &v[y - 1] + &Gauss::i();
    v
}

fn span(gens: Vec<Vector>) -> Subspace {
    Subspace::span(Field::Complex, 6, gens).expect("catalog generators")
}

/// `L5_3`: `J = e₃∧e₁ + 𝟙∧e₄`, `K = ⟨𝟙, e₁, e₃, e₄, e₂ − ie₅⟩`.
pub fn l53_witness() -> SpectralWitness {
    let mut last = e(2);
    last[4] = -Gauss::i();
    SpectralWitness {
        j: &bi(3, 1) + &bi(6, 4),
        k: span(vec![e(6), e(1), e(3), e(4), last]),
    }
}

/// `L5_7`: `J = e₁∧e₃ + e₄∧(𝟙+e₅)`, `K = ⟨𝟙+e₅, e₁, e₃, e₄, 𝟙+ie₂⟩`.
///
/// With the brackets of `L5_7` this `J` is not a Jacobi tensor: `E = −e₄` and
/// `[E, Λ] = e₃∧e₅ ≠ 0`. It is stored unchanged and fails its checks.
pub fn l57_witness() -> SpectralWitness {
    let mut u = e(6);
    u[4] = Gauss::one();
    SpectralWitness {
        j: &(&bi(1, 3) + &bi(4, 5)) + &bi(4, 6),
        k: span(vec![u, e(1), e(3), e(4), complex_vector(6, 2)]),
    }
}

/// Valid pairs on `L5_7` with `S ⊂ 𝔤`; none of them is induced by a GCS.
pub fn l57_obstructed_pairs() -> Vec<SpectralWitness> {
    let w = |a: (usize, usize), b: (usize, usize), z: Vector| {
        let j = &bi(a.0, a.1) + &bi(b.0, b.1);
        let mut gens: Vec<Vector> = [a.0, a.1, b.0, b.1].iter().map(|&k| e(k)).collect();
        gens.push(z);
        SpectralWitness { j, k: span(gens) }
    };
    vec![
        w((1, 5), (3, 4), complex_vector(6, 2)),
        w((1, 5), (3, 4), complex_vector(2, 6)),
        w((2, 3), (4, 5), complex_vector(1, 6)),
        w((2, 4), (3, 5), complex_vector(6, 1)),
        w((2, 5), (3, 4), complex_vector(1, 6)),
    ]
}

/// Pairs `(a, b)`, 1-based, for `φ: e_a ↦ e_b ↦ −e_a`.
fn complex_pairs(name: &str) -> Option<[(usize, usize); 3]> {
    match name {
        "L5_1" | "L5_2" | "L5_4" | "L5_5" => Some([(1, 2), (3, 4), (5, 6)]),
        "L5_8" => Some([(2, 3), (4, 5), (1, 6)]),
        "L5_9" => Some([(1, 2), (4, 5), (3, 6)]),
        _ => None,
    }
}

fn expected_row(name: &str) -> ExpectedRow {
    let contact = matches!(name, "L5_4" | "L5_5" | "L5_6");
    let complex = !matches!(name, "L5_3" | "L5_6" | "L5_7");
    ExpectedRow {
        contact,
        complex,
        gencontact: true,
    }
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    let algebra = algebra(name)?;
    let ext = algebra.extend()?;
    let expected = expected_row(name);
    let contact_witness = expected.contact.then(|| Form::term(5, &[4], Gauss::one()));
    let complex_witness = match complex_pairs(name) {
        Some(pairs) => {
            let zero_based: Vec<(usize, usize)> =
                pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
            Some(ComplexStructure::from_pairs(&ext, &zero_based)?)
        }
        None => None,
    };
    let (spectral_witness, extra_pairs) = match name {
        "L5_3" => (Some(l53_witness()), Vec::new()),
        "L5_7" => (Some(l57_witness()), l57_obstructed_pairs()),
        _ => (None, Vec::new()),
    };
    Ok(CatalogEntry {
        algebra,
        ext,
        contact_witness,
        complex_witness,
        spectral_witness,
        extra_pairs,
        expected,
    })
}

pub fn catalog() -> Vec<CatalogEntry> {
    NAMES
        .iter()
        .map(|n| catalog_get(n).expect("catalog entries are valid"))
        .collect()
}

/// Coefficients of `α∧(δα)²` on `e¹∧…∧e⁵`, for `α = Σ tₖ eᵏ`, keyed by sorted exponent triples.
pub fn contact_polynomial(alg: &LieAlgebra) -> Result<BTreeMap<[usize; 3], Gauss>> {
    let n = alg.dim();
    let top = Monomial::from_bits((1u32 << n) - 1);
    let basis: Vec<Form> = (0..n).map(|k| Form::term(n, &[k], Gauss::one())).collect();
    let diffs: Vec<Form> = basis
        .iter()
        .map(|b| alg.ce_diff(b))
        .collect::<Result<_>>()?;
    let mut poly: BTreeMap<[usize; 3], Gauss> = BTreeMap::new();
    for (a, alpha) in basis.iter().enumerate() {
        for (b, db) in diffs.iter().enumerate() {
            for (c, dc) in diffs.iter().enumerate() {
                let t = alpha.wedge(db)?.wedge(dc)?.coeff(top);
                if !t.is_zero() {
                    let mut key = [a, b, c];
                    key.sort_unstable();
                    *poly.entry(key).or_insert_with(Gauss::zero) += &t;
                }
            }
        }
    }
    poly.retain(|_, v| !v.is_zero());
    Ok(poly)
}

/// Which criterion settles non-contactness, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoContact {
    Center,
    Polynomial,
    Inconclusive,
}

/// Criterion A: `dim Z(𝔤) ≠ 1`. Criterion B: `α∧(δα)² ≡ 0`.
pub fn no_contact(alg: &LieAlgebra) -> Result<(NoContact, usize, bool)> {
    if !alg.is_nilpotent() {
        return Err(Error::input(format!("{} is not nilpotent", alg.name())));
    }
    if alg.dim() != 5 {
        return Err(Error::input(
            "the no-contact criteria are for five-dimensional algebras",
        ));
    }
    let center = alg.center_and_lcs().0.dim();
    let vanishes = contact_polynomial(alg)?.is_empty();
    let verdict = if center != 1 {
        NoContact::Center
    } else if vanishes {
        NoContact::Polynomial
    } else {
        NoContact::Inconclusive
    };
    Ok((verdict, center, vanishes))
}

pub fn no_contact_criteria(alg: &LieAlgebra) -> Result<Certificate> {
    let (which, center, vanishes) = no_contact(alg)?;
    let criterion = match which {
        NoContact::Center => json!("center"),
        NoContact::Polynomial => json!("polynomial"),
        NoContact::Inconclusive => Value::Null,
    };
    let witness =
        json!({ "center_dim": center, "polynomial_vanishes": vanishes, "criterion": criterion });
    let verdict = if which == NoContact::Inconclusive {
        Verdict::Inconclusive
    } else {
        Verdict::Verified
    };
    Ok(Certificate::new(
        "no-contact",
        verdict,
        witness,
        &io::algebra_to_json(alg),
    ))
}

/// Every `φ` of the form `e_a ↦ e_b ↦ −e_a` over a perfect matching that is integrable.
pub fn search_pair_complex(ext: &ExtendedAlgebra) -> Vec<ComplexStructure> {
    fn matchings(
        rest: &[usize],
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for (pos, &other) in tail.iter().enumerate() {
            let remaining: Vec<usize> = tail
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != pos)
                .map(|(_, &x)| x)
                .collect();
            for pair in [(first, other), (other, first)] {
                acc.push(pair);
                matchings(&remaining, acc, out);
                acc.pop();
            }
        }
    }
    let n = ext.dim();
    let mut all = Vec::new();
    matchings(&(0..n).collect::<Vec<_>>(), &mut Vec::new(), &mut all);
    all.into_iter()
        .filter_map(|pairs| ComplexStructure::from_pairs(ext, &pairs).ok())
        .filter(|phi| phi.is_integrable(ext))
        .collect()
}

/// How a table cell was settled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub value: bool,
    pub method: String,
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub name: String,
    pub contact: Cell,
    pub complex: Cell,
    pub gencontact: Cell,
    pub expected: ExpectedRow,
    pub gcs: Option<OmniSubspace>,
    pub certificates: Vec<Certificate>,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.contact.value == self.expected.contact
            && self.complex.value == self.expected.complex
            && self.gencontact.value == self.expected.gencontact
    }

    pub fn to_json(&self) -> Value {
        let cell = |c: &Cell| json!({ "value": c.value, "method": c.method });
        json!({
            "algebra": self.name,
            "contact": cell(&self.contact),
            "complex": cell(&self.complex),
            "generalized_contact": cell(&self.gencontact),
            "expected": [self.expected.contact, self.expected.complex, self.expected.gencontact],
            "matches": self.matches(),
            "certificates": self.certificates.iter().map(Certificate::to_json).collect::<Vec<_>>(),
        })
    }
}

/// The GCS produced by the first available route, with its route name.
pub fn witness_gcs(entry: &CatalogEntry) -> Result<(String, OmniSubspace)> {
    let ext = &entry.ext;
    if let Some(theta) = &entry.contact_witness {
        return Ok(("contact e5*".into(), contact_to_gcs(ext, theta)?));
    }
    if let Some(phi) = &entry.complex_witness {
        return Ok(("complex".into(), complex_to_gcs(ext, phi)?));
    }
    if let Some(w) = &entry.spectral_witness {
        let pair = w.pair(ext)?;
        let ctx = SpectralContext::new(pair.clone())?;
        let d = direct_feasibility(&ctx)?
            .ok_or_else(|| Error::axiom("obstruction", "no B-field closes the data"))?;
        return Ok(("spectral (J,K)".into(), build_gcs(&pair, &d.omega, &d.b)?));
    }
    Err(Error::Internal(format!(
        "{} carries no witness",
        entry.name()
    )))
}

pub fn table_row(entry: &CatalogEntry) -> Result<TableRow> {
    let mut certificates = Vec::new();
    let contact = match &entry.contact_witness {
        Some(theta) => {
            let c = contact_check(&entry.algebra, theta)?;
            let cell = Cell {
                value: c.holds(),
                method: "contact form e5*".into(),
            };
            certificates.push(c);
            cell
        }
        None => {
            let c = no_contact_criteria(&entry.algebra)?;
            let method = match c.witness["criterion"].as_str() {
                Some("center") => format!("center dimension {}", c.witness["center_dim"]),
                Some("polynomial") => "alpha^(d alpha)^2 vanishes identically".to_string(),
                _ => "inconclusive".to_string(),
            };
            // a cell without a settled criterion is reported as contact, so it cannot match a ×
            let cell = Cell {
                value: !c.holds(),
                method,
            };
            certificates.push(c);
            cell
        }
    };
    let complex = match &entry.complex_witness {
        Some(phi) => {
            let c = complex_check(&entry.ext, phi)?;
            let cell = Cell {
                value: c.holds(),
                method: "integrable pair structure".into(),
            };
            certificates.push(c);
            cell
        }
        None => Cell {
            value: false,
            method: "per Salamon, not machine-verified".into(),
        },
    };
    let (gencontact, gcs) = match witness_gcs(entry) {
        Ok((route, l)) => {
            let c = classify_certificate(&entry.ext, &l, &Twist::zero(&entry.ext))?;
            let cell = Cell {
                value: c.holds(),
                method: route,
            };
            certificates.push(c);
            (cell, Some(l))
        }
        Err(err) => (
            Cell {
                value: false,
                method: err.to_string(),
            },
            None,
        ),
    };
    Ok(TableRow {
        name: entry.name().to_string(),
        contact,
        complex,
        gencontact,
        expected: entry.expected,
        gcs,
        certificates,
    })
}

/// The nine rows, verified concurrently and returned in catalog order.
pub struct Table {
    pub rows: Vec<TableRow>,
}

pub fn run_table() -> Result<Table> {
    let entries = catalog();
    let rows = std::thread::scope(|s| {
        let handles: Vec<_> = entries
            .iter()
            .map(|e| s.spawn(move || table_row(e)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("table worker"))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(Table { rows })
}

impl Table {
    pub fn matches(&self) -> bool {
        self.rows.iter().all(TableRow::matches)
    }

    pub fn mismatches(&self) -> Vec<String> {
        let mark = |b: bool| if b { "yes" } else { "no" };
        let mut out = Vec::new();
        for r in &self.rows {
            for (col, got, want) in [
                ("contact", r.contact.value, r.expected.contact),
                ("complex", r.complex.value, r.expected.complex),
                (
                    "generalized contact",
                    r.gencontact.value,
                    r.expected.gencontact,
                ),
            ] {
                if got != want {
                    out.push(format!(
                        "{} {col}: expected {}, computed {}",
                        r.name,
                        mark(want),
                        mark(got)
                    ));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({ "rows": self.rows.iter().map(TableRow::to_json).collect::<Vec<_>>(), "matches": self.matches() })
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "✓" } else { "×" };
        writeln!(
            f,
            "{:<6} {:^9} {:^9} {:^9}  notes",
            "", "contact", "complex", "gen.cont"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<6} {:^9} {:^9} {:^9}  {}; {}; {}",
                r.name,
                mark(r.contact.value),
                mark(r.complex.value),
                mark(r.gencontact.value),
                r.contact.method,
                r.complex.method,
                r.gencontact.method
            )?;
        }
        Ok(())
    }
}

/// Catalog data rendered in the file grammar, for roundtrip checks.
pub fn entry_to_json(entry: &CatalogEntry) -> Value {
    let space = entry.ext.space();
    let witness = |w: &SpectralWitness| json!({ "tensor": io::element_to_json(space, &w.j), "K": io::subspace_to_json(space, &w.k) });
    json!({
        "algebra": io::algebra_to_json(&entry.algebra),
        "contact": entry.contact_witness.as_ref().map(|t| io::element_to_json(entry.algebra.space(), t)),
        "complex": entry.complex_witness.as_ref().map(|p| io::matrix_to_json(&p.rational_matrix())),
        "spectral": entry.spectral_witness.as_ref().map(witness),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets_match_the_standard_list() {
        let l54 = algebra("L5_4").unwrap();
        assert_eq!(l54.brackets().len(), 2);
        assert_eq!(l54.structure(0, 1), &unit_vector(5, 4));
        assert_eq!(l54.structure(2, 3), &unit_vector(5, 4));
        let l59 = algebra("L5_9").unwrap();
        assert_eq!(l59.structure(1, 2), &unit_vector(5, 4));
        assert!(algebra("L5_0").unwrap_err().to_string().contains("L5_1"));
        for n in NAMES {
            let a = algebra(n).unwrap();
            assert!(a.validate().holds() && a.is_nilpotent(), "{n}");
        }
    }

    #[test]
    fn no_contact_examples() {
        assert_eq!(
            no_contact(&algebra("L5_2").unwrap()).unwrap(),
            (NoContact::Center, 3, true)
        );
        assert_eq!(
            no_contact(&algebra("L5_7").unwrap()).unwrap().0,
            NoContact::Polynomial
        );
        assert_eq!(no_contact(&algebra("L5_7").unwrap()).unwrap().1, 1);
        assert_eq!(
            no_contact(&algebra("L5_6").unwrap()).unwrap().0,
            NoContact::Inconclusive
        );
        let c = no_contact_criteria(&algebra("L5_6").unwrap()).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn polynomial_matches_pointwise_evaluation() {
        // evaluate α∧(δα)² at α = e¹ + 2e² + … and compare with the expanded polynomial
        let alg = algebra("L5_6").unwrap();
        let poly = contact_polynomial(&alg).unwrap();
        let t = [1i64, 2, -1, 3, 5];
        let mut alpha = Form::zero(5);
        for (k, c) in t.iter().enumerate() {
            alpha = &alpha + &Form::term(5, &[k], Gauss::from_int(*c));
        }
        let d = alg.ce_diff(&alpha).unwrap();
        let direct = alpha
            .wedge(&d)
            .unwrap()
            .wedge(&d)
            .unwrap()
            .coeff(Monomial::from_bits(31));
        let mut summed = Gauss::zero();
        for (key, c) in &poly {
            summed += &(c * &Gauss::from_int(t[key[0]] * t[key[1]] * t[key[2]]));
        }
        assert_eq!(direct, summed);
        assert!(!direct.is_zero());
    }

    #[test]
    fn complex_witnesses_are_integrable() {
        for entry in catalog() {
            if let Some(phi) = &entry.complex_witness {
                assert!(phi.is_integrable(&entry.ext), "{}", entry.name());
            }
        }
    }

    #[test]
    fn l57_stored_tensor_is_not_jacobi() {
        let entry = catalog_get("L5_7").unwrap();
        let err = entry
            .spectral_witness
            .unwrap()
            .pair(&entry.ext)
            .unwrap_err();
        assert!(err.to_string().contains("Jacobi"), "{err}");
        for w in &entry.extra_pairs {
            let ctx = SpectralContext::new(w.pair(&entry.ext).unwrap()).unwrap();
            assert!(direct_feasibility(&ctx).unwrap().is_none());
        }
    }
}
