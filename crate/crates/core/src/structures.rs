//! Contact forms, complex structures, Jacobi tensors and transversally complex pairs on
//! an extended algebra `𝔤_ℝ`.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::exterior::{Form, Monomial, Multivector};
use crate::io;
use crate::lie::{ExtendedAlgebra, LieAlgebra};
use crate::linalg::{
    apply, invert, kernel, matmul, transpose, unit_vector, Field, Subspace, Vector,
};
use crate::omni::{bivector_sharp, form_flat, OmniSubspace, OmniVector, Twist};
use crate::scalar::{Gauss, Rational};

/// A real bivector `J = Λ + 𝟙∧E` on `𝔤_ℝ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiTensor {
    j: Multivector,
    unit: usize,
}

impl JacobiTensor {
    pub fn new(ext: &ExtendedAlgebra, j: Multivector) -> Result<Self> {
        if j.dim() != ext.dim() {
            return Err(Error::DimensionMismatch {
                expected: ext.dim(),
                found: j.dim(),
            });
        }
        if !j.is_homogeneous(2) {
            return Err(Error::input("a Jacobi tensor is a bivector"));
        }
        if !j.is_real() {
            return Err(Error::input("a Jacobi tensor must be real"));
        }
        Ok(JacobiTensor {
            j,
            unit: ext.unit_index(),
        })
    }

    pub fn zero(ext: &ExtendedAlgebra) -> Self {
        JacobiTensor {
            j: Multivector::zero(ext.dim()),
            unit: ext.unit_index(),
        }
    }

    pub fn bivector(&self) -> &Multivector {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.j.dim()
    }

    /// The part of `J` without a unit leg.
    pub fn lambda(&self) -> Multivector {
        let mut l = Multivector::zero(self.dim());
        for (m, c) in self.j.terms() {
            if !m.contains(self.unit) {
                l.add_term(*m, c.clone());
            }
        }
        l
    }

    /// `E = J^♯(𝟙*)`, so that `J = Λ + 𝟙∧E`.
    pub fn e(&self) -> Multivector {
        Multivector::from_vector(&self.sharp(&unit_vector(self.dim(), self.unit)))
    }

    /// `J^♯ψ = ι_ψ J`.
    pub fn sharp(&self, psi: &[Gauss]) -> Vector {
        bivector_sharp(&self.j, psi)
    }

    /// `S = image(J^♯)`, a real subspace.
    pub fn image(&self) -> Subspace {
        let n = self.dim();
        let gens = (0..n).map(|k| self.sharp(&unit_vector(n, k))).collect();
        Subspace::span(Field::Real, n, gens).expect("real image")
    }

    /// `graph(J^♯) = {(J^♯ψ, ψ)}`.
    pub fn graph(&self) -> OmniSubspace {
        let n = self.dim();
        let gens: Vec<OmniVector> = (0..n)
            .map(|k| {
                let psi = unit_vector(n, k);
                OmniVector::new(self.sharp(&psi), psi)
            })
            .collect();
        OmniSubspace::span(Field::Real, n, &gens).expect("graph generators")
    }
}

/// Detailed outcome of [`jacobi_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    /// First pair of graph generators `(J^♯e^a, e^a)` whose bracket leaves the graph.
    pub graph_failure: Option<(usize, usize, OmniVector)>,
    /// `[Λ,Λ] + 2E∧Λ`.
    pub pair_trivector: Multivector,
    /// `[E,Λ]`.
    pub pair_bivector: Multivector,
}

impl JacobiReport {
    pub fn is_jacobi(&self) -> bool {
        self.graph_failure.is_none()
    }

    pub fn pair_condition(&self) -> bool {
        self.pair_trivector.is_zero() && self.pair_bivector.is_zero()
    }
}

/// Decides whether `J` is a Jacobi tensor.
///
/// The verdict is graph involutivity under the untwisted Dorfman bracket. The pair
/// identities `[Λ,Λ] + 2E∧Λ = 0`, `[E,Λ] = 0` (Schouten bracket) are computed alongside.
pub fn jacobi_report(ext: &ExtendedAlgebra, j: &JacobiTensor) -> Result<JacobiReport> {
    let n = ext.dim();
    let zero = Twist::zero(ext);
    let gens: Vec<OmniVector> = (0..n)
        .map(|k| {
            let psi = unit_vector(n, k);
            OmniVector::new(j.sharp(&psi), psi)
        })
        .collect();
    let graph = j.graph();
    let mut graph_failure = None;
    'outer: for a in 0..n {
        for b in 0..n {
            let br = crate::omni::dorfman(ext, &gens[a], &gens[b], &zero)?;
            if !graph.contains(&br) {
                graph_failure = Some((a, b, br));
                break 'outer;
            }
        }
    }
    let lambda = j.lambda();
    let e = j.e();
    let ll = ext.schouten(&lambda, &lambda)?;
    let pair_trivector = &ll + &e.wedge(&lambda)?.scale(&Gauss::from_int(2));
    let pair_bivector = ext.schouten(&e, &lambda)?;
    Ok(JacobiReport {
        graph_failure,
        pair_trivector,
        pair_bivector,
    })
}

pub fn jacobi_check(ext: &ExtendedAlgebra, j: &JacobiTensor) -> Result<Certificate> {
    let r = jacobi_report(ext, j)?;
    let space = ext.space();
    let labels = space.dual_labels();
    let witness = json!({
        "graph_involutive": r.is_jacobi(),
        "failing_pair": r.graph_failure.as_ref().map(|(a, b, v)| json!({
            "psi1": labels[*a], "psi2": labels[*b],
            "bracket": io::omni_vector_to_json(space, v),
        })),
        "pair_condition": r.pair_condition(),
        "lambda_lambda_plus_2e_lambda": io::element_to_json(space, &r.pair_trivector),
        "e_lambda": io::element_to_json(space, &r.pair_bivector),
    });
    let inputs = json!({
        "algebra": io::algebra_to_json(ext.base()),
        "tensor": io::element_to_json(space, j.bivector()),
    });
    Ok(Certificate::new(
        "check-jacobi",
        Verdict::from_bool(r.is_jacobi()),
        witness,
        &inputs,
    ))
}

pub fn is_jacobi(ext: &ExtendedAlgebra, j: &JacobiTensor) -> Result<bool> {
    Ok(jacobi_report(ext, j)?.is_jacobi())
}

/// `Θ ∧ (δΘ)^k` for `dim 𝔤 = 2k+1`, returned with its top coefficient.
pub fn contact_coefficient(alg: &LieAlgebra, theta: &Form) -> Result<Gauss> {
    let n = alg.dim();
    if n.is_multiple_of(2) {
        return Err(Error::input(format!(
            "contact forms need odd dimension, found {n}"
        )));
    }
    if theta.dim() != n || !theta.is_homogeneous(1) {
        return Err(Error::input(
            "contact form must be a 1-form on the base algebra",
        ));
    }
    if !theta.is_real() {
        return Err(Error::input("contact form must be real"));
    }
    let top = theta.wedge(&alg.ce_diff(theta)?.wedge_power(n / 2))?;
    Ok(top.coeff(Monomial::from_bits((1u32 << n) - 1)))
}

pub fn contact_check(alg: &LieAlgebra, theta: &Form) -> Result<Certificate> {
    let c = contact_coefficient(alg, theta)?;
    let witness = json!({ "top_coefficient": io::gauss_to_json(&c) });
    let inputs = json!({
        "algebra": io::algebra_to_json(alg),
        "theta": io::element_to_json(alg.space(), theta),
    });
    Ok(Certificate::new(
        "check-contact",
        Verdict::from_bool(!c.is_zero()),
        witness,
        &inputs,
    ))
}

/// `𝓛 = {(X, i·ι_X DΩ)}` with `Ω` the pullback of `Θ`.
pub fn contact_to_gcs(ext: &ExtendedAlgebra, theta: &Form) -> Result<OmniSubspace> {
    if contact_coefficient(ext.base(), theta)?.is_zero() {
        return Err(Error::axiom("contact", "Θ∧(δΘ)^n = 0"));
    }
    let omega = ext.der_diff(&ext.lift_form(theta)?)?;
    let n = ext.dim();
    let gens: Vec<OmniVector> = (0..n)
        .map(|k| {
            let x = unit_vector(n, k);
            let form = form_flat(&omega, &x)
                .iter()
                .map(|c| c * &Gauss::i())
                .collect();
            OmniVector::new(x, form)
        })
        .collect();
    OmniSubspace::span(Field::Complex, n, &gens)
}

/// A real endomorphism `φ` of `𝔤_ℝ`; `phi[i][j]` is the `i`-th coordinate of `φ(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexStructure {
    phi: Vec<Vector>,
}

impl ComplexStructure {
    pub fn new(ext: &ExtendedAlgebra, phi: Vec<Vec<Rational>>) -> Result<Self> {
        let n = ext.dim();
        if phi.len() != n || phi.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: phi.len(),
            });
        }
        Ok(ComplexStructure {
            phi: phi
                .into_iter()
                .map(|r| r.into_iter().map(Gauss::real).collect())
                .collect(),
        })
    }

    /// `φ` sending `e_a ↦ e_b` and `e_b ↦ −e_a` for each listed pair `(a, b)`.
    pub fn from_pairs(ext: &ExtendedAlgebra, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = ext.dim();
        let mut phi = vec![vec![Rational::zero(); n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::input("pair index out of range"));
            }
            phi[b][a] = Rational::one();
            phi[a][b] = -Rational::one();
        }
        ComplexStructure::new(ext, phi)
    }

    pub fn matrix(&self) -> &[Vector] {
        &self.phi
    }

    pub fn rational_matrix(&self) -> Vec<Vec<Rational>> {
        self.phi
            .iter()
            .map(|r| r.iter().map(|c| c.re.clone()).collect())
            .collect()
    }

    pub fn apply(&self, x: &[Gauss]) -> Vector {
        apply(&self.phi, x)
    }

    pub fn squares_to_minus_one(&self) -> bool {
        let n = self.phi.len();
        let sq = matmul(&self.phi, &self.phi);
        (0..n).all(|i| {
            (0..n).all(|j| {
                sq[i][j]
                    == if i == j {
                        Gauss::from_int(-1)
                    } else {
                        Gauss::zero()
                    }
            })
        })
    }

    /// `N_φ(x,y) = [φx,φy] − φ[φx,y] − φ[x,φy] + φ²[x,y]`.
    pub fn nijenhuis(&self, ext: &ExtendedAlgebra, x: &[Gauss], y: &[Gauss]) -> Vector {
        let (px, py) = (self.apply(x), self.apply(y));
        let a = ext.bracket(&px, &py);
        let b = self.apply(&ext.bracket(&px, y));
        let c = self.apply(&ext.bracket(x, &py));
        let d = self.apply(&self.apply(&ext.bracket(x, y)));
        (0..a.len())
            .map(|k| &(&(&a[k] - &b[k]) - &c[k]) + &d[k])
            .collect()
    }

    /// First basis pair with nonzero torsion.
    pub fn nijenhuis_failure(&self, ext: &ExtendedAlgebra) -> Option<(usize, usize, Vector)> {
        let n = ext.dim();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.nijenhuis(ext, &unit_vector(n, i), &unit_vector(n, j));
                if v.iter().any(|c| !c.is_zero()) {
                    return Some((i, j, v));
                }
            }
        }
        None
    }

    pub fn is_integrable(&self, ext: &ExtendedAlgebra) -> bool {
        self.squares_to_minus_one() && self.nijenhuis_failure(ext).is_none()
    }

    /// `𝔤_ℝ^{(1,0)} = ker(φ − i)`.
    pub fn holomorphic(&self) -> Subspace {
        let n = self.phi.len();
        let mut m = self.phi.clone();
        for (r, row) in m.iter_mut().enumerate() {
            row[r] -= &Gauss::i();
        }
        Subspace::span(Field::Complex, n, kernel(&m, n)).expect("kernel")
    }
}

pub fn complex_check(ext: &ExtendedAlgebra, phi: &ComplexStructure) -> Result<Certificate> {
    let squares = phi.squares_to_minus_one();
    let failure = if squares {
        phi.nijenhuis_failure(ext)
    } else {
        None
    };
    let labels = ext.space().labels();
    let witness = json!({
        "squares_to_minus_identity": squares,
        "nijenhuis_failure": failure.as_ref().map(|(i, j, v)| json!({
            "x": labels[*i], "y": labels[*j],
            "torsion": io::vector_to_json(ext.space(), v),
        })),
    });
    let inputs = json!({
        "algebra": io::algebra_to_json(ext.base()),
        "phi": io::matrix_to_json(&phi.rational_matrix()),
    });
    Ok(Certificate::new(
        "check-complex",
        Verdict::from_bool(squares && failure.is_none()),
        witness,
        &inputs,
    ))
}

/// `𝓛 = 𝔤_ℝ^{(1,0)} ⊕ Ann(𝔤_ℝ^{(1,0)})`.
pub fn complex_to_gcs(ext: &ExtendedAlgebra, phi: &ComplexStructure) -> Result<OmniSubspace> {
    if !phi.squares_to_minus_one() {
        return Err(Error::axiom("φ² = −id", "not an almost complex structure"));
    }
    if phi.nijenhuis_failure(ext).is_some() {
        return Err(Error::axiom("Nijenhuis torsion", "φ is not integrable"));
    }
    let k = phi.holomorphic();
    Ok(split_gcs(ext.dim(), &k))
}

/// `K ⊕ Ann(K)` inside the omni space.
pub fn split_gcs(n: usize, k: &Subspace) -> OmniSubspace {
    let mut gens: Vec<OmniVector> = k
        .basis()
        .iter()
        .map(|x| OmniVector::new(x.clone(), vec![Gauss::zero(); n]))
        .collect();
    gens.extend(
        k.annihilator()
            .basis()
            .iter()
            .map(|a| OmniVector::new(vec![Gauss::zero(); n], a.clone())),
    );
    OmniSubspace::span(Field::Complex, n, &gens).expect("split generators")
}

pub fn jacobi_sharp(j: &JacobiTensor, psi: &Form) -> Result<Multivector> {
    if psi.dim() != j.dim() || !psi.is_homogeneous(1) {
        return Err(Error::input("J^♯ takes a 1-form on the extended algebra"));
    }
    Ok(Multivector::from_vector(&j.sharp(&psi.to_coords(1))))
}

pub fn image_of_sharp(j: &JacobiTensor) -> Subspace {
    j.image()
}

/// A real 2-form `ω` with `ω(J^♯α, J^♯β) = α(J^♯β)`, extended by zero on a complement of `S`.
///
/// Without an explicit complement, `S` is completed greedily by standard basis vectors.
pub fn jacobi_inverse_extend(j: &JacobiTensor, complement: Option<&Subspace>) -> Result<Form> {
    let n = j.dim();
    // α_a = e^{k_a} for the dual basis vectors whose sharps are independent
    let mut alphas = Vec::new();
    let mut s: Vec<Vector> = Vec::new();
    for k in 0..n {
        let v = j.sharp(&unit_vector(n, k));
        let mut trial = s.clone();
        trial.push(v.clone());
        if crate::linalg::rank(&trial, n) > s.len() {
            s.push(v);
            alphas.push(k);
        }
    }
    let r = s.len();
    let c: Vec<Vector> = match complement {
        Some(c) => {
            if !c.is_real() || c.ambient_dim() != n {
                return Err(Error::input(
                    "complement must be a real subspace of the extended algebra",
                ));
            }
            c.basis().to_vec()
        }
        None => {
            let mut out = Vec::new();
            let mut acc = s.clone();
            for k in 0..n {
                let v = unit_vector(n, k);
                let mut trial = acc.clone();
                trial.push(v.clone());
                if crate::linalg::rank(&trial, n) > acc.len() {
                    acc = trial;
                    out.push(v);
                }
            }
            out
        }
    };
    let cols: Vec<Vector> = s.iter().chain(&c).cloned().collect();
    if cols.len() != n {
        return Err(Error::input(
            "complement does not complete image(J♯) to the whole space",
        ));
    }
    let basis = transpose(&cols, n);
    let dual = invert(&basis).ok_or_else(|| Error::input("complement meets image(J♯)"))?;
    let dual_forms: Vec<Form> = dual.iter().map(|row| Form::from_vector(row)).collect();
    let mut omega = Form::zero(n);
    for a in 0..r {
        for b in a + 1..r {
            let m = s[b][alphas[a]].clone();
            if !m.is_zero() {
                omega = &omega + &dual_forms[a].wedge(&dual_forms[b])?.scale(&m);
            }
        }
    }
    Ok(omega)
}

/// A validated transversally complex Jacobi pair `(J, K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalPair {
    ext: ExtendedAlgebra,
    j: JacobiTensor,
    k: Subspace,
    s: Subspace,
}

impl TransversalPair {
    pub fn ext(&self) -> &ExtendedAlgebra {
        &self.ext
    }

    pub fn tensor(&self) -> &JacobiTensor {
        &self.j
    }

    pub fn k(&self) -> &Subspace {
        &self.k
    }

    pub fn k_bar(&self) -> Subspace {
        self.k.conj()
    }

    /// `S = image(J^♯)`, real.
    pub fn s(&self) -> &Subspace {
        &self.s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": io::algebra_to_json(self.ext.base()),
            "tensor": io::element_to_json(self.ext.space(), self.j.bivector()),
            "K": io::subspace_to_json(self.ext.space(), &self.k),
        })
    }
}

/// Detailed outcome of [`transversal_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalReport {
    pub jacobi: bool,
    /// A pair of basis vectors of `S` whose bracket leaves `S`.
    pub s_failure: Option<(Vector, Vector, Vector)>,
    pub k_failure: Option<(Vector, Vector, Vector)>,
    pub sum_dim: usize,
    pub intersection_is_s: bool,
    pub pair: Option<TransversalPair>,
}

impl TransversalReport {
    pub fn is_valid(&self) -> bool {
        self.pair.is_some()
    }

    pub fn failed_condition(&self) -> Option<&'static str> {
        if !self.jacobi {
            Some("J is not a Jacobi tensor")
        } else if self.s_failure.is_some() {
            Some("image(J♯) is not a subalgebra")
        } else if self.k_failure.is_some() {
            Some("K is not a subalgebra")
        } else if self.pair.is_none() && !self.intersection_is_s {
            Some("K ∩ conj(K) ≠ S_ℂ")
        } else if self.pair.is_none() {
            Some("K + conj(K) is not everything")
        } else {
            None
        }
    }
}

fn closure_failure(ext: &ExtendedAlgebra, sub: &Subspace) -> Option<(Vector, Vector, Vector)> {
    let b = sub.basis();
    for x in b {
        for y in b {
            let br = ext.bracket(x, y);
            if !sub.contains(&br) {
                return Some((x.clone(), y.clone(), br));
            }
        }
    }
    None
}

pub fn transversal_report(
    ext: &ExtendedAlgebra,
    j: &JacobiTensor,
    k: &Subspace,
) -> Result<TransversalReport> {
    let n = ext.dim();
    if k.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: k.ambient_dim(),
        });
    }
    let k = k.complexify();
    let jacobi = is_jacobi(ext, j)?;
    let s = j.image();
    let s_failure = closure_failure(ext, &s);
    let k_failure = closure_failure(ext, &k);
    let (meet, join) = crate::linalg::meet_join(&k, &k.conj())?;
    let intersection_is_s = meet == s.complexify();
    let ok =
        jacobi && s_failure.is_none() && k_failure.is_none() && join.is_full() && intersection_is_s;
    let pair = ok.then(|| TransversalPair {
        ext: ext.clone(),
        j: j.clone(),
        k: k.clone(),
        s: s.clone(),
    });
    Ok(TransversalReport {
        jacobi,
        s_failure,
        k_failure,
        sum_dim: join.dim(),
        intersection_is_s,
        pair,
    })
}

pub fn transversal_check(
    ext: &ExtendedAlgebra,
    j: &JacobiTensor,
    k: &Subspace,
) -> Result<(Certificate, Option<TransversalPair>)> {
    let r = transversal_report(ext, j, k)?;
    let space = ext.space();
    let triple = |t: &Option<(Vector, Vector, Vector)>| {
        t.as_ref().map(|(x, y, b)| {
            json!({
                "x": io::vector_to_json(space, x),
                "y": io::vector_to_json(space, y),
                "bracket": io::vector_to_json(space, b),
            })
        })
    };
    let witness = json!({
        "jacobi": r.jacobi,
        "S": io::subspace_to_json(space, &j.image()),
        "S_involutive": r.s_failure.is_none(),
        "S_failure": triple(&r.s_failure),
        "K_involutive": r.k_failure.is_none(),
        "K_failure": triple(&r.k_failure),
        "K_plus_conj_K_dim": r.sum_dim,
        "K_meet_conj_K_is_S": r.intersection_is_s,
        "failed": r.failed_condition(),
    });
    let inputs = json!({
        "algebra": io::algebra_to_json(ext.base()),
        "tensor": io::element_to_json(space, j.bivector()),
        "K": io::subspace_to_json(space, &k.complexify()),
    });
    let cert = Certificate::new(
        "transversal",
        Verdict::from_bool(r.is_valid()),
        witness,
        &inputs,
    );
    Ok((cert, r.pair))
}

/// Validates `(J, K)` and returns the pair or an error naming the failed condition.
pub fn transversal_pair(
    ext: &ExtendedAlgebra,
    j: &JacobiTensor,
    k: &Subspace,
) -> Result<TransversalPair> {
    let r = transversal_report(ext, j, k)?;
    match r.pair {
        Some(p) => Ok(p),
        None => Err(Error::axiom(
            "transversally complex pair",
            r.failed_condition().unwrap_or("unknown"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn alg(n: usize, br: &[(usize, usize, usize)]) -> LieAlgebra {
        let labels = (1..=n).map(|k| format!("e{k}")).collect();
        let brackets = br
            .iter()
            .map(|&(i, j, k)| {
                let mut v = vec![Rational::zero(); n];
                v[k - 1] = rat(1, 1);
                ((i - 1, j - 1), v)
            })
            .collect();
        LieAlgebra::new("test", labels, brackets).unwrap()
    }

    fn l53() -> ExtendedAlgebra {
        alg(5, &[(1, 2, 3), (1, 3, 4)]).extend().unwrap()
    }

    fn mv(idx: &[usize], c: i64) -> Multivector {
        Multivector::term(6, idx, Gauss::from_int(c))
    }

    fn v(c: &[(usize, i64, i64)]) -> Vector {
        let mut out = vec![Gauss::zero(); 6];
        for &(k, re, im) in c {
            out[k] = Gauss::new(rat(re, 1), rat(im, 1));
        }
        out
    }

    #[test]
    fn sharp_examples() {
        let ext = l53();
        // J = e₃∧e₁ + 𝟙∧e₄
        let j = JacobiTensor::new(&ext, &mv(&[2, 0], 1) + &mv(&[5, 3], 1)).unwrap();
        assert_eq!(j.sharp(&unit_vector(6, 0)), v(&[(2, -1, 0)]));
        assert_eq!(j.sharp(&unit_vector(6, 5)), v(&[(3, 1, 0)]));
        assert_eq!(j.sharp(&unit_vector(6, 3)), v(&[(5, -1, 0)]));
        let s = j.image();
        let expect = Subspace::span(
            Field::Real,
            6,
            [0, 2, 3, 5].iter().map(|&k| unit_vector(6, k)).collect(),
        )
        .unwrap();
        assert_eq!(s, expect);
        assert!(JacobiTensor::zero(&ext).image().is_zero());
        assert_eq!(j.e(), Multivector::basis(6, 3));
        assert_eq!(j.lambda(), mv(&[2, 0], 1));
    }

    #[test]
    fn sharp_is_skew() {
        let ext = l53();
        let j = JacobiTensor::new(
            &ext,
            &(&mv(&[2, 0], 1) + &mv(&[5, 3], 2)) + &mv(&[1, 4], -3),
        )
        .unwrap();
        for a in 0..6 {
            for b in 0..6 {
                let x = crate::linalg::dot(&unit_vector(6, a), &j.sharp(&unit_vector(6, b)));
                let y = crate::linalg::dot(&unit_vector(6, b), &j.sharp(&unit_vector(6, a)));
                assert_eq!(&x + &y, Gauss::zero());
            }
        }
    }

    #[test]
    fn l53_pipeline_pieces() {
        let ext = l53();
        let j = JacobiTensor::new(&ext, &mv(&[2, 0], 1) + &mv(&[5, 3], 1)).unwrap();
        let r = jacobi_report(&ext, &j).unwrap();
        assert!(r.is_jacobi());
        assert!(r.pair_condition());
        let k = Subspace::span(
            Field::Complex,
            6,
            vec![
                v(&[(5, 1, 0)]),
                v(&[(0, 1, 0)]),
                v(&[(2, 1, 0)]),
                v(&[(3, 1, 0)]),
                v(&[(1, 1, 0), (4, 0, -1)]),
            ],
        )
        .unwrap();
        assert!(transversal_report(&ext, &j, &k).unwrap().is_valid());
        let k2 = Subspace::span(
            Field::Complex,
            6,
            vec![
                v(&[(5, 1, 0)]),
                v(&[(1, 1, 0)]),
                v(&[(2, 1, 0)]),
                v(&[(3, 1, 0)]),
                v(&[(0, 1, 0), (4, 0, -1)]),
            ],
        )
        .unwrap();
        let r2 = transversal_report(&ext, &j, &k2).unwrap();
        assert!(!r2.is_valid());
        assert!(!r2.intersection_is_s);

        let omega = jacobi_inverse_extend(&j, None).unwrap();
        let s = j.image();
        // ω(J^♯α, J^♯β) = α(J^♯β)
        for a in 0..6 {
            for b in 0..6 {
                let (sa, sb) = (j.sharp(&unit_vector(6, a)), j.sharp(&unit_vector(6, b)));
                let lhs = crate::linalg::dot(&form_flat(&omega, &sa), &sb);
                assert_eq!(lhs, sb[a]);
            }
        }
        // congruent to e¹∧e³ − 𝟙*∧e⁴ on Λ²S
        let expected = &Form::term(6, &[0, 2], Gauss::one()) - &Form::term(6, &[5, 3], Gauss::one());
        let diff = &omega - &expected;
        for x in s.basis() {
            for y in s.basis() {
                assert!(crate::linalg::dot(&form_flat(&diff, x), y).is_zero());
            }
        }
        assert!(jacobi_inverse_extend(&JacobiTensor::zero(&ext), None)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn l52_bivector_is_not_jacobi() {
        let ext = alg(5, &[(1, 2, 3)]).extend().unwrap();
        let j = JacobiTensor::new(&ext, mv(&[0, 1], 1)).unwrap();
        let r = jacobi_report(&ext, &j).unwrap();
        assert!(!r.is_jacobi());
        assert!(!r.pair_condition());
    }

    #[test]
    fn contact_examples() {
        let l56 = alg(5, &[(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5)]);
        let theta = Form::basis(5, 4);
        assert_eq!(
            contact_coefficient(&l56, &theta).unwrap(),
            Gauss::from_int(2)
        );
        let l54 = alg(5, &[(1, 2, 5), (3, 4, 5)]);
        assert!(contact_check(&l54, &theta).unwrap().holds());
        assert!(!contact_check(&LieAlgebra::abelian(5), &theta)
            .unwrap()
            .holds());
        assert!(contact_check(&LieAlgebra::abelian(4), &Form::basis(4, 0)).is_err());
    }

    #[test]
    fn complex_examples() {
        let l52 = alg(5, &[(1, 2, 3)]).extend().unwrap();
        let phi = ComplexStructure::from_pairs(&l52, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(complex_check(&l52, &phi).unwrap().holds());
        let id = ComplexStructure::new(
            &l52,
            crate::linalg::identity(6)
                .iter()
                .map(|r| r.iter().map(|c| c.re.clone()).collect())
                .collect(),
        )
        .unwrap();
        let cert = complex_check(&l52, &id).unwrap();
        assert!(!cert.holds());
        assert_eq!(cert.witness["squares_to_minus_identity"], json!(false));
    }
}
