//! Lie algebras given by structure constants, the abelian extension by a central unit,
//! and the differentials acting on their exterior algebras.

use num_traits::{One, Zero};
use serde_json::json;

use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::exterior::{contract, BasedSpace, Form, Monomial, Multivector};
use crate::linalg::{kernel, Field, Subspace, Vector};
use crate::scalar::{Gauss, Rational};

/// A finite-dimensional Lie algebra over ℚ with a named basis.
///
/// The bracket is stored densely as `consts[i][j] = [e_i, e_j]`; only pairs `i < j`
/// are ever supplied, the rest is filled in by antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    space: BasedSpace,
    consts: Vec<Vec<Vector>>,
    d_basis: Vec<Form>,
}

impl LieAlgebra {
    /// Builds an algebra from the brackets `[e_i, e_j] = value` for `i < j`.
    ///
    /// The Jacobi identity is not checked here; see [`LieAlgebra::validate`].
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: Vec<((usize, usize), Vec<Rational>)>,
    ) -> Result<Self> {
        let space = BasedSpace::new(labels)?;
        Self::with_space(name.into(), space, brackets)
    }

    fn with_space(
        name: String,
        space: BasedSpace,
        brackets: Vec<((usize, usize), Vec<Rational>)>,
    ) -> Result<Self> {
        let n = space.dim();
        let mut consts = vec![vec![vec![Gauss::zero(); n]; n]; n];
        let mut seen = vec![vec![false; n]; n];
        for ((i, j), value) in brackets {
            if i >= j || j >= n {
                return Err(Error::input(format!(
                    "bracket pair ({i},{j}) must satisfy i < j < {n}"
                )));
            }
            if seen[i][j] {
                return Err(Error::input(format!(
                    "bracket [{}, {}] given twice",
                    space.labels()[i],
                    space.labels()[j]
                )));
            }
            if value.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: value.len(),
                });
            }
            seen[i][j] = true;
            for (k, c) in value.into_iter().enumerate() {
                consts[j][i][k] = Gauss::real(-c.clone());
                consts[i][j][k] = Gauss::real(c);
            }
        }
        let d_basis = (0..n)
            .map(|k| {
                let mut f = Form::zero(n);
                for (i, row) in consts.iter().enumerate() {
                    for (j, v) in row.iter().enumerate().skip(i + 1) {
                        let c = &v[k];
                        if !c.is_zero() {
                            f = &f + &Form::term(n, &[i, j], -c);
                        }
                    }
                }
                f
            })
            .collect();
        Ok(LieAlgebra {
            name,
            space,
            consts,
            d_basis,
        })
    }

    /// The abelian algebra of the given dimension with basis `e1, e2, …`.
    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|k| format!("e{k}")).collect();
        LieAlgebra::new(format!("abelian{n}"), labels, vec![]).expect("abelian algebra")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn labels(&self) -> &[String] {
        self.space.labels()
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn structure(&self, i: usize, j: usize) -> &Vector {
        &self.consts[i][j]
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`, as real coordinates.
    pub fn brackets(&self) -> Vec<((usize, usize), Vec<Rational>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = &self.consts[i][j];
                if v.iter().any(|c| !c.is_zero()) {
                    out.push(((i, j), v.iter().map(|c| c.re.clone()).collect()));
                }
            }
        }
        out
    }

    /// Bracket of two vectors given by coordinates.
    pub fn bracket(&self, x: &[Gauss], y: &[Gauss]) -> Vector {
        let n = self.dim();
        let mut out = vec![Gauss::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in self.consts[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[k] += &(&c * s);
                    }
                }
            }
        }
        out
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobiator(&self, x: &[Gauss], y: &[Gauss], z: &[Gauss]) -> Vector {
        let a = self.bracket(&self.bracket(x, y), z);
        let b = self.bracket(&self.bracket(y, z), x);
        let c = self.bracket(&self.bracket(z, x), y);
        a.iter()
            .zip(&b)
            .zip(&c)
            .map(|((a, b), c)| &(a + b) + c)
            .collect()
    }

    fn basis_vec(&self, k: usize) -> Vector {
        crate::linalg::unit_vector(self.dim(), k)
    }

    /// First basis triple `i < j < k` whose Jacobiator is nonzero.
    pub fn jacobi_failure(&self) -> Option<((usize, usize, usize), Vector)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let v =
                        self.jacobiator(&self.basis_vec(i), &self.basis_vec(j), &self.basis_vec(k));
                    if v.iter().any(|c| !c.is_zero()) {
                        return Some(((i, j, k), v));
                    }
                }
            }
        }
        None
    }

    /// Checks the Jacobi identity on all basis triples.
    pub fn validate(&self) -> Certificate {
        let inputs = crate::io::algebra_to_json(self);
        match self.jacobi_failure() {
            None => Certificate::new("validate", Verdict::Verified, json!({}), &inputs),
            Some(((i, j, k), v)) => {
                let l = self.labels();
                let witness = json!({
                    "triple": [l[i], l[j], l[k]],
                    "jacobiator": crate::io::vector_to_json(&self.space, &v),
                });
                Certificate::new("validate", Verdict::Refuted, witness, &inputs)
            }
        }
    }

    /// Errors unless the Jacobi identity holds.
    pub fn ensure_valid(&self) -> Result<()> {
        match self.jacobi_failure() {
            None => Ok(()),
            Some(((i, j, k), _)) => {
                let l = self.labels();
                Err(Error::axiom(
                    "jacobi identity",
                    format!("fails on ({}, {}, {})", l[i], l[j], l[k]),
                ))
            }
        }
    }

    /// Center and lower central series `𝔤 ⊇ [𝔤,𝔤] ⊇ …` (stopping once it stabilizes).
    pub fn center_and_lcs(&self) -> (Subspace, Vec<Subspace>) {
        let n = self.dim();
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push(
                    (0..n)
                        .map(|i| self.consts[i][j][k].clone())
                        .collect::<Vector>(),
                );
            }
        }
        let center = Subspace::span(Field::Real, n, kernel(&rows, n)).expect("real kernel");
        let mut series = vec![Subspace::full(Field::Real, n)];
        loop {
            let last = series.last().unwrap();
            let gens: Vec<Vector> = (0..n)
                .flat_map(|i| last.basis().iter().map(move |b| (i, b)))
                .map(|(i, b)| self.bracket(&self.basis_vec(i), b))
                .collect();
            let next = Subspace::span(Field::Real, n, gens).expect("real span");
            if &next == last {
                break;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                break;
            }
        }
        (center, series)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.center_and_lcs()
            .1
            .last()
            .map(Subspace::is_zero)
            .unwrap_or(true)
    }

    /// Abelian extension `𝔤 ⊕ ℝ𝟙` with the unit as the last basis vector.
    pub fn extend(&self) -> Result<ExtendedAlgebra> {
        let space = self.space.extended()?;
        let n = self.dim();
        let brackets = self
            .brackets()
            .into_iter()
            .map(|(p, mut v)| {
                v.push(Rational::zero());
                (p, v)
            })
            .collect();
        let ext = LieAlgebra::with_space(self.name.clone(), space, brackets)?;
        debug_assert_eq!(ext.dim(), n + 1);
        Ok(ExtendedAlgebra {
            base: self.clone(),
            ext,
        })
    }

    /// Chevalley–Eilenberg differential with trivial coefficients:
    /// `δe^k = −Σ_{i<j} c_{ij}^k e^i∧e^j`, extended as an antiderivation.
    pub fn ce_diff(&self, alpha: &Form) -> Result<Form> {
        if alpha.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: alpha.dim(),
            });
        }
        let mut out = Form::zero(self.dim());
        for (m, c) in alpha.terms() {
            out = &out + &self.ce_diff_monomial(*m).scale(c);
        }
        Ok(out)
    }

    fn ce_diff_monomial(&self, m: Monomial) -> Form {
        let n = self.dim();
        let idx = m.indices();
        let Some((&first, rest)) = idx.split_first() else {
            return Form::zero(n);
        };
        let tail = Form::term(n, rest, Gauss::one());
        let head = Form::basis(n, first);
        let a = self.d_basis[first].wedge(&tail).expect("same dim");
        let b = head
            .wedge(&self.ce_diff_monomial(Monomial::from_bits(m.bits() & !(1 << first))))
            .expect("same dim");
        &a - &b
    }

    /// δ of a single dual basis vector.
    pub fn ce_diff_basis(&self, k: usize) -> &Form {
        &self.d_basis[k]
    }

    /// Schouten bracket of multivectors:
    /// `[x₁∧…∧x_k, y₁∧…∧y_l] = Σ (−1)^{i+j} [x_i,y_j] ∧ x₁…x̂_i…x_k ∧ y₁…ŷ_j…y_l`.
    pub fn schouten(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        let n = self.dim();
        if a.dim() != n || b.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if a.dim() != n { a.dim() } else { b.dim() },
            });
        }
        let mut out = Multivector::zero(n);
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let xs = ma.indices();
                let ys = mb.indices();
                let c = ca * cb;
                for (i, &x) in xs.iter().enumerate() {
                    for (j, &y) in ys.iter().enumerate() {
                        let br = Multivector::from_vector(&self.consts[x][y]);
                        if br.is_zero() {
                            continue;
                        }
                        let xr: Vec<usize> = xs
                            .iter()
                            .enumerate()
                            .filter(|&(p, _)| p != i)
                            .map(|(_, &v)| v)
                            .collect();
                        let yr: Vec<usize> = ys
                            .iter()
                            .enumerate()
                            .filter(|&(p, _)| p != j)
                            .map(|(_, &v)| v)
                            .collect();
                        let rest = Multivector::term(n, &[xr, yr].concat(), Gauss::one());
                        let sign = if (i + j) % 2 == 0 { c.clone() } else { -&c };
                        out = &out + &br.wedge(&rest)?.scale(&sign);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `𝔤_ℝ = 𝔤 ⊕ ℝ𝟙` with bracket `[(ξ,r),(η,k)] = ([ξ,η],0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedAlgebra {
    base: LieAlgebra,
    ext: LieAlgebra,
}

impl ExtendedAlgebra {
    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    /// The extension viewed as a Lie algebra in its own right.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.ext
    }

    pub fn name(&self) -> &str {
        self.base.name()
    }

    /// `n + 1`.
    pub fn dim(&self) -> usize {
        self.ext.dim()
    }

    pub fn space(&self) -> &BasedSpace {
        self.ext.space()
    }

    pub fn unit_index(&self) -> usize {
        self.base.dim()
    }

    /// `𝟙` as a multivector.
    pub fn unit(&self) -> Multivector {
        Multivector::basis(self.dim(), self.unit_index())
    }

    /// `𝟙*` as a form.
    pub fn unit_dual(&self) -> Form {
        Form::basis(self.dim(), self.unit_index())
    }

    pub fn bracket(&self, x: &[Gauss], y: &[Gauss]) -> Vector {
        self.ext.bracket(x, y)
    }

    /// `δ_CE` on the extended complex; `δ𝟙* = 0`.
    pub fn ce_diff(&self, psi: &Form) -> Result<Form> {
        self.ext.ce_diff(psi)
    }

    /// `D = δ_CE + 𝟙*∧`.
    pub fn der_diff(&self, psi: &Form) -> Result<Form> {
        let d = self.ce_diff(psi)?;
        Ok(&d + &self.unit_dual().wedge(psi)?)
    }

    /// `ι_𝟙`, the contracting homotopy of `D`.
    pub fn homotopy(&self, psi: &Form) -> Result<Form> {
        contract(&self.unit(), psi)
    }

    /// `𝓛_X = ι_X D + D ι_X` for a degree-one `X`.
    pub fn lie_derivative(&self, x: &Multivector, psi: &Form) -> Result<Form> {
        if !x.is_homogeneous(1) {
            return Err(Error::input("Lie derivative needs a vector of degree one"));
        }
        let a = contract(x, &self.der_diff(psi)?)?;
        let b = self.der_diff(&contract(x, psi)?)?;
        Ok(&a + &b)
    }

    pub fn schouten(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        self.ext.schouten(a, b)
    }

    /// Embeds a form over `𝔤*` into `𝔤_ℝ*`.
    pub fn lift_form(&self, alpha: &Form) -> Result<Form> {
        if alpha.dim() != self.base.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.base.dim(),
                found: alpha.dim(),
            });
        }
        alpha.embed(self.dim())
    }
}

/// Coordinates of a degree-one element.
pub fn vector_coords<S: crate::exterior::Side>(x: &crate::exterior::Exterior<S>) -> Vector {
    x.to_coords(1)
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

    fn f(n: usize, idx: &[usize]) -> Form {
        Form::term(n, idx, Gauss::one())
    }

    #[test]
    fn validate_examples() {
        let l53 = alg(5, &[(1, 2, 3), (1, 3, 4)]);
        assert_eq!(l53.validate().verdict, Verdict::Verified);
        assert_eq!(LieAlgebra::abelian(5).validate().verdict, Verdict::Verified);
        // [e1,e2]=e1, [e1,e3]=e2: Jacobiator(e1,e2,e3) = [e1,e3] = e2
        let bad = alg(3, &[(1, 2, 1), (1, 3, 2)]);
        let ((i, j, k), v) = bad.jacobi_failure().unwrap();
        assert_eq!((i, j, k), (0, 1, 2));
        assert_eq!(v, vec![Gauss::zero(), Gauss::one(), Gauss::zero()]);
        assert_eq!(bad.validate().verdict, Verdict::Refuted);
    }

    #[test]
    fn duplicate_bracket_rejected() {
        let labels = vec!["a".into(), "b".into()];
        let v = vec![rat(0, 1), rat(0, 1)];
        assert!(LieAlgebra::new(
            "x",
            labels.clone(),
            vec![((0, 1), v.clone()), ((0, 1), v.clone())]
        )
        .is_err());
        assert!(LieAlgebra::new("x", labels, vec![((1, 0), v)]).is_err());
    }

    #[test]
    fn centers() {
        let l52 = alg(5, &[(1, 2, 3)]);
        let (z, lcs) = l52.center_and_lcs();
        assert_eq!(z.dim(), 3);
        assert!(lcs.last().unwrap().is_zero());
        let l57 = alg(5, &[(1, 2, 3), (1, 3, 4), (1, 4, 5)]);
        let (z, _) = l57.center_and_lcs();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&crate::linalg::unit_vector(5, 4)));
        assert_eq!(LieAlgebra::abelian(4).center_and_lcs().0.dim(), 4);
    }

    #[test]
    fn extension() {
        let l53 = alg(5, &[(1, 2, 3), (1, 3, 4)]);
        let ext = l53.extend().unwrap();
        assert_eq!(ext.dim(), 6);
        assert!(ext.algebra().extend().is_err());
        let u = crate::linalg::unit_vector(6, 5);
        for k in 0..6 {
            assert!(ext
                .bracket(&u, &crate::linalg::unit_vector(6, k))
                .iter()
                .all(Gauss::is_zero));
        }
        assert_eq!(ext.algebra().brackets().len(), l53.brackets().len());
    }

    #[test]
    fn ce_examples() {
        let l52 = alg(5, &[(1, 2, 3)]);
        assert_eq!(l52.ce_diff(&f(5, &[2])).unwrap(), -f(5, &[0, 1]));
        let l56 = alg(5, &[(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5)]);
        assert_eq!(
            l56.ce_diff(&f(5, &[4])).unwrap(),
            &(-f(5, &[0, 3])) - &f(5, &[1, 2])
        );
        let ab = LieAlgebra::abelian(5);
        assert!(ab.ce_diff(&f(5, &[0, 1])).unwrap().is_zero());
    }

    #[test]
    fn der_examples() {
        let l53 = alg(5, &[(1, 2, 3), (1, 3, 4)]);
        let ext = l53.extend().unwrap();
        let one = Form::scalar(6, Gauss::one());
        assert_eq!(ext.der_diff(&one).unwrap(), ext.unit_dual());
        let omega = &f(6, &[0, 2]) - &f(6, &[5, 3]);
        assert!(ext.der_diff(&omega).unwrap().is_zero());

        let l57 = alg(5, &[(1, 2, 3), (1, 3, 4), (1, 4, 5)]);
        let ext = l57.extend().unwrap();
        let omega = &(-f(6, &[0, 2])) + &f(6, &[5, 3]);
        assert!(ext.der_diff(&omega).unwrap().is_zero());
        // −(e¹∧e³ + e⁴∧e⁵) + (𝟙* − e⁵)∧e⁴ expands to the same form
        let expected = &(&(-(&f(6, &[0, 2]) + &f(6, &[3, 4]))) + &f(6, &[5, 3])) - &f(6, &[4, 3]);
        assert_eq!(expected, omega);
    }

    #[test]
    fn lie_derivative_examples() {
        let ext = LieAlgebra::abelian(5).extend().unwrap();
        let e1 = Multivector::basis(6, 0);
        assert!(ext.lie_derivative(&e1, &f(6, &[0])).unwrap().is_zero());
        assert_eq!(
            ext.lie_derivative(&ext.unit(), &f(6, &[0])).unwrap(),
            f(6, &[0])
        );
        let c = Form::scalar(6, Gauss::from_int(3));
        assert_eq!(ext.lie_derivative(&ext.unit(), &c).unwrap(), c);
        assert!(ext.lie_derivative(&e1, &c).unwrap().is_zero());
    }

    #[test]
    fn ce_matches_evaluation_formula() {
        // δα(x0,x1,x2) = Σ_{i<j} (−1)^{i+j} α([xi,xj], x_rest) on 2-forms, by explicit evaluation
        let l = alg(5, &[(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5)]);
        let n = 5;
        let alpha =
            &(&f(n, &[0, 3]) + &Form::term(n, &[1, 4], Gauss::from_int(2))) - &f(n, &[2, 3]);
        let d = l.ce_diff(&alpha).unwrap();
        // α(x₁,…,x_k) = ι_{x_k}…ι_{x₁}α
        let eval = |a: &Form, xs: &[&Vector]| {
            let mut acc = a.clone();
            for x in xs {
                acc = contract(&Multivector::from_vector(x), &acc).unwrap();
            }
            acc.scalar_part()
        };
        for (i, j, k) in [(0, 1, 2), (0, 2, 3), (1, 2, 4), (0, 1, 3)] {
            let xs = [i, j, k].map(|t| crate::linalg::unit_vector(n, t));
            let mut expect = Gauss::zero();
            for a in 0..3 {
                for b in a + 1..3 {
                    let c = 3 - a - b;
                    let v = eval(&alpha, &[&l.bracket(&xs[a], &xs[b]), &xs[c]]);
                    expect = if (a + b) % 2 == 0 {
                        &expect + &v
                    } else {
                        &expect - &v
                    };
                }
            }
            let got = eval(&d, &[&xs[0], &xs[1], &xs[2]]);
            assert_eq!(got, expect, "triple {:?}", (i, j, k));
        }
    }
}
