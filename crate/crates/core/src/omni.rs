//! The omni-Lie algebra `𝔤_ℝ ⊕ 𝔤_ℝ*` of an extended algebra, with its Dorfman bracket,
//! symmetric pairing, generalized contact structures, and B-field transforms.
//!
//! Omni coordinates are `(vector | form)`, each of length `N = dim 𝔤_ℝ`.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::exterior::{contract, Form, Multivector};
use crate::io;
use crate::lie::ExtendedAlgebra;
use crate::linalg::{
    apply, conj_vec, dot, identity, invert, is_zero_vec, kernel, matmul, Field, Subspace, Vector,
};
use crate::scalar::Gauss;

/// An element `(X, ψ)` of the complexified omni-Lie algebra, by coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmniVector {
    pub vec: Vector,
    pub form: Vector,
}

impl OmniVector {
    pub fn new(vec: Vector, form: Vector) -> Self {
        assert_eq!(
            vec.len(),
            form.len(),
            "vector and form parts must have equal length"
        );
        OmniVector { vec, form }
    }

    pub fn zero(n: usize) -> Self {
        OmniVector {
            vec: vec![Gauss::zero(); n],
            form: vec![Gauss::zero(); n],
        }
    }

    pub fn from_coords(c: &[Gauss]) -> Self {
        let n = c.len() / 2;
        OmniVector {
            vec: c[..n].to_vec(),
            form: c[n..].to_vec(),
        }
    }

    pub fn coords(&self) -> Vector {
        let mut c = self.vec.clone();
        c.extend(self.form.iter().cloned());
        c
    }

    /// `N`, the dimension of each half.
    pub fn half_dim(&self) -> usize {
        self.vec.len()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.vec) && is_zero_vec(&self.form)
    }

    pub fn conj(&self) -> Self {
        OmniVector {
            vec: conj_vec(&self.vec),
            form: conj_vec(&self.form),
        }
    }

    pub fn add(&self, o: &OmniVector) -> Self {
        OmniVector::from_coords(
            &self
                .coords()
                .iter()
                .zip(o.coords())
                .map(|(a, b)| a + &b)
                .collect::<Vector>(),
        )
    }

    pub fn sub(&self, o: &OmniVector) -> Self {
        OmniVector::from_coords(
            &self
                .coords()
                .iter()
                .zip(o.coords())
                .map(|(a, b)| a - &b)
                .collect::<Vector>(),
        )
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        OmniVector::from_coords(&self.coords().iter().map(|a| a * c).collect::<Vector>())
    }

    pub fn vector_part(&self) -> Multivector {
        Multivector::from_vector(&self.vec)
    }

    pub fn form_part(&self) -> Form {
        Form::from_vector(&self.form)
    }
}

/// A closed real 3-form twisting the Dorfman bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    h: Form,
}

impl Twist {
    /// Validates that `h` is a real, D-closed 3-form.
    pub fn new(ext: &ExtendedAlgebra, h: Form) -> Result<Self> {
        if h.dim() != ext.dim() {
            return Err(Error::DimensionMismatch {
                expected: ext.dim(),
                found: h.dim(),
            });
        }
        if !h.is_real() {
            return Err(Error::input("twist must be real"));
        }
        if !h.is_homogeneous(3) {
            return Err(Error::input("twist must be a 3-form"));
        }
        if !ext.der_diff(&h)?.is_zero() {
            return Err(Error::input("twist is not D-closed"));
        }
        Ok(Twist { h })
    }

    pub fn zero(ext: &ExtendedAlgebra) -> Self {
        Twist {
            h: Form::zero(ext.dim()),
        }
    }

    pub fn form(&self) -> &Form {
        &self.h
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero()
    }
}

/// `([X₁,X₂], 𝓛_{X₁}ψ₂ − ι_{X₂}Dψ₁ + ι_{X₁}ι_{X₂}H)`.
pub fn dorfman(
    ext: &ExtendedAlgebra,
    a: &OmniVector,
    b: &OmniVector,
    twist: &Twist,
) -> Result<OmniVector> {
    let n = ext.dim();
    if a.half_dim() != n || b.half_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.half_dim().min(b.half_dim()),
        });
    }
    let vec = ext.bracket(&a.vec, &b.vec);
    let (x1, x2) = (a.vector_part(), b.vector_part());
    let (psi1, psi2) = (a.form_part(), b.form_part());
    let mut form = ext.lie_derivative(&x1, &psi2)?;
    form = &form - &contract(&x2, &ext.der_diff(&psi1)?)?;
    if !twist.is_zero() {
        form = &form + &contract(&x1, &contract(&x2, twist.form())?)?;
    }
    Ok(OmniVector {
        vec,
        form: form.to_coords(1),
    })
}

/// `⟨⟨(X₁,ψ₁),(X₂,ψ₂)⟩⟩ = ψ₁(X₂) + ψ₂(X₁)`.
pub fn pairing(a: &OmniVector, b: &OmniVector) -> Gauss {
    &dot(&a.form, &b.vec) + &dot(&b.form, &a.vec)
}

/// A complex subspace of the omni space, stored canonically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmniSubspace {
    half: usize,
    sub: Subspace,
}

impl OmniSubspace {
    pub fn span(field: Field, half: usize, gens: &[OmniVector]) -> Result<Self> {
        let rows = gens.iter().map(OmniVector::coords).collect();
        Ok(OmniSubspace {
            half,
            sub: Subspace::span(field, 2 * half, rows)?.complexify(),
        })
    }

    pub fn from_subspace(half: usize, sub: Subspace) -> Result<Self> {
        if sub.ambient_dim() != 2 * half {
            return Err(Error::DimensionMismatch {
                expected: 2 * half,
                found: sub.ambient_dim(),
            });
        }
        Ok(OmniSubspace {
            half,
            sub: sub.complexify(),
        })
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }

    pub fn half_dim(&self) -> usize {
        self.half
    }

    pub fn dim(&self) -> usize {
        self.sub.dim()
    }

    pub fn generators(&self) -> Vec<OmniVector> {
        self.sub
            .basis()
            .iter()
            .map(|r| OmniVector::from_coords(r))
            .collect()
    }

    pub fn contains(&self, a: &OmniVector) -> bool {
        self.sub.contains(&a.coords())
    }

    pub fn conj(&self) -> Self {
        OmniSubspace {
            half: self.half,
            sub: self.sub.conj(),
        }
    }

    /// Projection to the vector half.
    pub fn vector_projection(&self) -> Subspace {
        let rows = self.generators().into_iter().map(|g| g.vec).collect();
        Subspace::span(Field::Complex, self.half, rows)
            .expect("projection rows have the right length")
    }
}

/// Outcome of [`classify_subspace`], with a witness for each failed axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub dim: usize,
    pub half_dim: usize,
    /// First basis pair with nonzero pairing.
    pub isotropy_failure: Option<(usize, usize, Gauss)>,
    pub maximal: bool,
    /// `dim(𝓛 ∩ 𝓛̄)`.
    pub real_intersection_dim: usize,
    /// First basis pair whose bracket leaves `𝓛`.
    pub involutivity_failure: Option<(usize, usize, OmniVector)>,
}

impl Classification {
    pub fn isotropic(&self) -> bool {
        self.isotropy_failure.is_none()
    }

    pub fn transverse(&self) -> bool {
        self.real_intersection_dim == 0
    }

    pub fn involutive(&self) -> bool {
        self.involutivity_failure.is_none()
    }

    pub fn is_almost(&self) -> bool {
        self.isotropic() && self.maximal && self.transverse()
    }

    pub fn is_gcs(&self) -> bool {
        self.is_almost() && self.involutive()
    }

    /// First failing axiom, by name.
    pub fn failed_axiom(&self) -> Option<&'static str> {
        if !self.isotropic() {
            Some("isotropy")
        } else if !self.maximal {
            Some("maximality")
        } else if !self.transverse() {
            Some("L ∩ conj(L) = 0")
        } else if !self.involutive() {
            Some("involutivity")
        } else {
            None
        }
    }

    pub fn to_json(&self, ext: &ExtendedAlgebra, l: &OmniSubspace) -> Value {
        let gens = l.generators();
        let space = ext.space();
        json!({
            "dim": self.dim,
            "isotropic": self.isotropic(),
            "isotropy_witness": self.isotropy_failure.as_ref().map(|(i, j, c)| json!({
                "a": io::omni_vector_to_json(space, &gens[*i]),
                "b": io::omni_vector_to_json(space, &gens[*j]),
                "pairing": io::gauss_to_json(c),
            })),
            "maximal": self.maximal,
            "conj_intersection_dim": self.real_intersection_dim,
            "involutive": self.involutive(),
            "involutivity_witness": self.involutivity_failure.as_ref().map(|(i, j, v)| json!({
                "a": io::omni_vector_to_json(space, &gens[*i]),
                "b": io::omni_vector_to_json(space, &gens[*j]),
                "bracket": io::omni_vector_to_json(space, v),
            })),
            "almost_generalized_contact": self.is_almost(),
            "generalized_contact": self.is_gcs(),
        })
    }
}

/// Checks isotropy, maximality, `𝓛∩𝓛̄ = 0`, and involutivity on the canonical basis.
pub fn classify_subspace(
    ext: &ExtendedAlgebra,
    l: &OmniSubspace,
    twist: &Twist,
) -> Result<Classification> {
    let half = ext.dim();
    if l.half_dim() != half {
        return Err(Error::DimensionMismatch {
            expected: half,
            found: l.half_dim(),
        });
    }
    let gens = l.generators();
    let mut isotropy_failure = None;
    'iso: for i in 0..gens.len() {
        for j in i..gens.len() {
            let p = pairing(&gens[i], &gens[j]);
            if !p.is_zero() {
                isotropy_failure = Some((i, j, p));
                break 'iso;
            }
        }
    }
    let real_intersection_dim = l.subspace().intersect(&l.conj().subspace().clone())?.dim();
    let mut involutivity_failure = None;
    'inv: for i in 0..gens.len() {
        for j in 0..gens.len() {
            let br = dorfman(ext, &gens[i], &gens[j], twist)?;
            if !l.contains(&br) {
                involutivity_failure = Some((i, j, br));
                break 'inv;
            }
        }
    }
    Ok(Classification {
        dim: l.dim(),
        half_dim: half,
        isotropy_failure,
        maximal: l.dim() == half,
        real_intersection_dim,
        involutivity_failure,
    })
}

pub fn classify_certificate(
    ext: &ExtendedAlgebra,
    l: &OmniSubspace,
    twist: &Twist,
) -> Result<Certificate> {
    let c = classify_subspace(ext, l, twist)?;
    let inputs = json!({
        "algebra": io::algebra_to_json(ext.base()),
        "subspace": io::omni_subspace_to_json(ext.space(), l),
        "twist": io::element_to_json(ext.space(), twist.form()),
    });
    Ok(Certificate::new(
        "check-gcs",
        Verdict::from_bool(c.is_gcs()),
        c.to_json(ext, l),
        &inputs,
    ))
}

/// `J^♯ψ := ι_ψ J`, so that `J^♯(e^a) = Σ_b J^{ab} e_b`.
pub fn bivector_sharp(j: &Multivector, psi: &[Gauss]) -> Vector {
    contract(&Form::from_vector(psi), j)
        .expect("matching dimensions")
        .to_coords(1)
}

/// `ω^♭X := ι_X ω`.
pub fn form_flat(omega: &Form, x: &[Gauss]) -> Vector {
    contract(&Multivector::from_vector(x), omega)
        .expect("matching dimensions")
        .to_coords(1)
}

/// The endomorphism `𝕂 = [[φ, J^♯], [σ^♭, −φ*]]` of the omni space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcsEndomorphism {
    /// `phi[i][j]` is the `i`-th coordinate of `φ(e_j)`.
    pub phi: Vec<Vector>,
    pub j: Multivector,
    pub sigma: Form,
}

impl GcsEndomorphism {
    pub fn new(phi: Vec<Vector>, j: Multivector, sigma: Form) -> Result<Self> {
        let n = phi.len();
        if phi.iter().any(|r| r.len() != n) || j.dim() != n || sigma.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: j.dim(),
            });
        }
        if !j.is_homogeneous(2) || !sigma.is_homogeneous(2) {
            return Err(Error::input("J and σ must have degree two"));
        }
        Ok(GcsEndomorphism { phi, j, sigma })
    }

    pub fn half_dim(&self) -> usize {
        self.phi.len()
    }

    pub fn apply(&self, a: &OmniVector) -> OmniVector {
        let n = self.half_dim();
        let mut vec = apply(&self.phi, &a.vec);
        let js = bivector_sharp(&self.j, &a.form);
        let sf = form_flat(&self.sigma, &a.vec);
        let mut form = vec![Gauss::zero(); n];
        for k in 0..n {
            vec[k] += &js[k];
            // (φ*ψ)_k = Σ_i ψ_i φ_{ik}
            let mut pull = Gauss::zero();
            for i in 0..n {
                pull += &(&a.form[i] * &self.phi[i][k]);
            }
            form[k] = &sf[k] - &pull;
        }
        OmniVector { vec, form }
    }

    /// Matrix by rows acting on omni coordinates.
    pub fn matrix(&self) -> Vec<Vector> {
        let n = self.half_dim();
        let cols: Vec<Vector> = (0..2 * n)
            .map(|k| {
                self.apply(&OmniVector::from_coords(&crate::linalg::unit_vector(
                    2 * n,
                    k,
                )))
                .coords()
            })
            .collect();
        crate::linalg::transpose(&cols, 2 * n)
    }

    pub fn from_matrix(m: &[Vector]) -> Result<Self> {
        let n = m.len() / 2;
        if m.len() != 2 * n || m.iter().any(|r| r.len() != 2 * n) {
            return Err(Error::input(
                "endomorphism matrix must be square of even size",
            ));
        }
        let phi: Vec<Vector> = (0..n).map(|i| m[i][..n].to_vec()).collect();
        let mut j = Multivector::zero(n);
        let mut sigma = Form::zero(n);
        for a in 0..n {
            for b in a + 1..n {
                j = &j + &Multivector::term(n, &[a, b], m[b][n + a].clone());
                sigma = &sigma + &Form::term(n, &[a, b], m[n + b][a].clone());
            }
        }
        let k = GcsEndomorphism { phi, j, sigma };
        if k.matrix() != m {
            return Err(Error::axiom(
                "block form",
                "matrix is not of the form [[φ, J♯], [σ♭, −φ*]] with J, σ skew",
            ));
        }
        Ok(k)
    }

    pub fn is_real(&self) -> bool {
        self.phi.iter().flatten().all(Gauss::is_real) && self.j.is_real() && self.sigma.is_real()
    }

    /// Zero `φ` block.
    pub fn diagonal_blocks_vanish(&self) -> bool {
        self.phi.iter().flatten().all(Gauss::is_zero)
    }

    /// Zero `J^♯` and `σ^♭` blocks.
    pub fn off_diagonal_blocks_vanish(&self) -> bool {
        self.j.is_zero() && self.sigma.is_zero()
    }

    /// First violated axiom among `𝕂² = −id` and `⟨⟨𝕂a,𝕂b⟩⟩ = ⟨⟨a,b⟩⟩` on basis pairs.
    pub fn axiom_failure(&self) -> Option<&'static str> {
        let n = self.half_dim();
        let m = self.matrix();
        let sq = matmul(&m, &m);
        let minus_id: Vec<Vector> = identity(2 * n)
            .into_iter()
            .map(|r| r.iter().map(|x| -x).collect())
            .collect();
        if sq != minus_id {
            return Some("K² = −id");
        }
        let basis: Vec<OmniVector> = (0..2 * n)
            .map(|k| OmniVector::from_coords(&crate::linalg::unit_vector(2 * n, k)))
            .collect();
        let images: Vec<OmniVector> = basis.iter().map(|b| self.apply(b)).collect();
        for a in 0..2 * n {
            for b in a..2 * n {
                if pairing(&images[a], &images[b]) != pairing(&basis[a], &basis[b]) {
                    return Some("orthogonality");
                }
            }
        }
        None
    }
}

/// `𝕂` acting by `+i` on `𝓛` and `−i` on `𝓛̄`.
pub fn to_endomorphism(ext: &ExtendedAlgebra, l: &OmniSubspace) -> Result<GcsEndomorphism> {
    let c = classify_subspace(ext, l, &Twist::zero(ext))?;
    if let Some(axiom) = [
        (!c.isotropic()).then_some("isotropy"),
        (!c.maximal).then_some("maximality"),
        (!c.transverse()).then_some("L ∩ conj(L) = 0"),
    ]
    .into_iter()
    .flatten()
    .next()
    {
        return Err(Error::axiom(
            axiom,
            "subspace is not almost generalized contact",
        ));
    }
    endomorphism_of(l)
}

fn endomorphism_of(l: &OmniSubspace) -> Result<GcsEndomorphism> {
    let n2 = 2 * l.half_dim();
    let lb = l.conj();
    // columns of P: basis of 𝓛 then of 𝓛̄; 𝕂 = P diag(i, −i) P⁻¹
    let cols: Vec<Vector> = l
        .subspace()
        .basis()
        .iter()
        .chain(lb.subspace().basis())
        .cloned()
        .collect();
    if cols.len() != n2 {
        return Err(Error::axiom(
            "maximality",
            "L ⊕ conj(L) is not the whole space",
        ));
    }
    let p = crate::linalg::transpose(&cols, n2);
    let pinv = invert(&p)
        .ok_or_else(|| Error::axiom("L ∩ conj(L) = 0", "L and conj(L) are not complementary"))?;
    let half = l.dim();
    let scaled: Vec<Vector> = p
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(k, x)| {
                    if k < half {
                        x * &Gauss::i()
                    } else {
                        -(x * &Gauss::i())
                    }
                })
                .collect()
        })
        .collect();
    let m = matmul(&scaled, &pinv);
    if !m.iter().flatten().all(Gauss::is_real) {
        return Err(Error::Internal(
            "eigenspace endomorphism is not real".into(),
        ));
    }
    GcsEndomorphism::from_matrix(&m)
}

/// `ker(𝕂 − i)` after checking `𝕂² = −id` and orthogonality.
pub fn from_endomorphism(k: &GcsEndomorphism) -> Result<OmniSubspace> {
    if let Some(axiom) = k.axiom_failure() {
        return Err(Error::axiom(
            axiom,
            "endomorphism is not a generalized almost contact structure",
        ));
    }
    let n = k.half_dim();
    let mut m = k.matrix();
    for (r, row) in m.iter_mut().enumerate() {
        row[r] -= &Gauss::i();
    }
    OmniSubspace::from_subspace(n, Subspace::span(Field::Complex, 2 * n, kernel(&m, 2 * n))?)
}

/// `N(A,B) = [[𝕂A,𝕂B]] − 𝕂[[𝕂A,B]] − 𝕂[[A,𝕂B]] − [[A,B]]`.
pub fn nijenhuis_endo(
    ext: &ExtendedAlgebra,
    k: &GcsEndomorphism,
    twist: &Twist,
    a: &OmniVector,
    b: &OmniVector,
) -> Result<OmniVector> {
    let ka = k.apply(a);
    let kb = k.apply(b);
    let t1 = dorfman(ext, &ka, &kb, twist)?;
    let t2 = k.apply(&dorfman(ext, &ka, b, twist)?);
    let t3 = k.apply(&dorfman(ext, a, &kb, twist)?);
    let t4 = dorfman(ext, a, b, twist)?;
    Ok(t1.sub(&t2).sub(&t3).sub(&t4))
}

/// First basis pair on which the Nijenhuis torsion is nonzero.
pub fn nijenhuis_failure(
    ext: &ExtendedAlgebra,
    k: &GcsEndomorphism,
    twist: &Twist,
) -> Result<Option<(usize, usize, OmniVector)>> {
    let n2 = 2 * k.half_dim();
    let basis: Vec<OmniVector> = (0..n2)
        .map(|i| OmniVector::from_coords(&crate::linalg::unit_vector(n2, i)))
        .collect();
    for i in 0..n2 {
        for j in 0..n2 {
            let v = nijenhuis_endo(ext, k, twist, &basis[i], &basis[j])?;
            if !v.is_zero() {
                return Ok(Some((i, j, v)));
            }
        }
    }
    Ok(None)
}

/// `𝓛^B = {(X, ψ + ι_X B)}`, which is generalized contact for the twist `H + DB`.
pub fn b_transform(
    ext: &ExtendedAlgebra,
    l: &OmniSubspace,
    b: &Form,
    twist: &Twist,
) -> Result<(OmniSubspace, Twist)> {
    if !b.is_real() {
        return Err(Error::input("B-field must be real"));
    }
    if !b.is_homogeneous(2) || b.dim() != ext.dim() {
        return Err(Error::input(
            "B-field must be a 2-form on the extended algebra",
        ));
    }
    let gens: Vec<OmniVector> = l
        .generators()
        .into_iter()
        .map(|g| {
            let shift = form_flat(b, &g.vec);
            let form = g.form.iter().zip(&shift).map(|(a, s)| a + s).collect();
            OmniVector { vec: g.vec, form }
        })
        .collect();
    let h = twist.form() + &ext.der_diff(b)?;
    Ok((
        OmniSubspace::span(Field::Complex, l.half_dim(), &gens)?,
        Twist { h },
    ))
}

/// B-transform by `−ι_𝟙H`; the resulting twist is zero.
pub fn untwist(
    ext: &ExtendedAlgebra,
    l: &OmniSubspace,
    twist: &Twist,
) -> Result<(OmniSubspace, Twist, Form)> {
    let b = -ext.homotopy(twist.form())?;
    let (l2, t2) = b_transform(ext, l, &b, twist)?;
    if !t2.is_zero() {
        return Err(Error::Internal("untwisted twist is not zero".into()));
    }
    Ok((l2, t2, b))
}

/// The omni vector `(X, 0)`.
pub fn vector_only(x: Vector) -> OmniVector {
    let n = x.len();
    OmniVector {
        vec: x,
        form: vec![Gauss::zero(); n],
    }
}

/// The omni vector `(0, ψ)`.
pub fn form_only(psi: Vector) -> OmniVector {
    let n = psi.len();
    OmniVector {
        vec: vec![Gauss::zero(); n],
        form: psi,
    }
}
