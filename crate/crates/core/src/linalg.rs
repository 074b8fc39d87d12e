//! Exact linear algebra over ℚ and ℚ(i).
//!
//! Every subspace is stored by the reduced row-echelon form of a spanning set, with
//! pivots scaled to one. That presentation is unique, so subspace equality is plain
//! `==` on the struct, and certificates that print subspaces are reproducible.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Gauss;

/// A coefficient vector.
pub type Vector = Vec<Gauss>;

/// Ground field of a subspace presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    /// ℚ: every basis coefficient is real.
    #[serde(rename = "Q")]
    Real,
    /// ℚ(i).
    #[serde(rename = "C")]
    Complex,
}

/// Reduces `rows` in place to reduced row-echelon form, drops zero rows and returns
/// the pivot column of each surviving row.
pub fn rref(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of the null space `{x : M x = 0}` of a matrix given by rows.
pub fn kernel(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m: Vec<Vector> = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![None; ncols];
    for (row, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(row);
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| is_pivot[c].is_none()) {
        let mut x = vec![Gauss::zero(); ncols];
        x[free] = Gauss::one();
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = -&m[row][free];
        }
        out.push(x);
    }
    out
}

/// Rank of a matrix given by rows.
pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

fn is_real_vec(v: &[Gauss]) -> bool {
    v.iter().all(Gauss::is_real)
}

pub fn dot(a: &[Gauss], b: &[Gauss]) -> Gauss {
    let mut s = Gauss::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += &(x * y);
        }
    }
    s
}

pub fn conj_vec(v: &[Gauss]) -> Vector {
    v.iter().map(Gauss::conj).collect()
}

pub fn is_zero_vec(v: &[Gauss]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `a + c·b`
pub fn axpy(a: &mut [Gauss], c: &Gauss, b: &[Gauss]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += &(c * y);
        }
    }
}

/// Linear combination `Σ cₖ vₖ` in an ambient space of dimension `n`.
pub fn combine(coeffs: &[Gauss], vectors: &[Vector], n: usize) -> Vector {
    let mut out = vec![Gauss::zero(); n];
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

/// A subspace in canonical reduced row-echelon presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

/// Canonical presentation of the span of `generators`.
pub fn canonicalize(generators: &[Vector], field: Field, ambient_dim: usize) -> Result<Subspace> {
    Subspace::span(field, ambient_dim, generators.to_vec())
}

impl Subspace {
    pub fn span(field: Field, ambient_dim: usize, mut generators: Vec<Vector>) -> Result<Self> {
        for g in &generators {
            if g.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: g.len(),
                });
            }
            if field == Field::Real && !is_real_vec(g) {
                return Err(Error::FieldMismatch(
                    "complex generator for a real subspace".into(),
                ));
            }
        }
        let pivots = rref(&mut generators, ambient_dim);
        Ok(Subspace {
            field,
            ambient_dim,
            basis: generators,
            pivots,
        })
    }

    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|k| unit_vector(ambient_dim, k))
            .collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    /// The canonical basis rows.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Coordinates of `v` with respect to [`Self::basis`], or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Gauss]) -> Option<Vector> {
        let coeffs: Vector = self.pivots.iter().map(|&c| v[c].clone()).collect();
        let back = combine(&coeffs, &self.basis, self.ambient_dim);
        (back.as_slice() == v).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Gauss]) -> bool {
        v.len() == self.ambient_dim && self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim && other.basis.iter().all(|v| self.contains(v))
    }

    /// The same subspace viewed over ℚ(i).
    pub fn complexify(&self) -> Subspace {
        Subspace {
            field: Field::Complex,
            ..self.clone()
        }
    }

    /// Whether the subspace is closed under conjugation (has a real basis).
    pub fn is_real(&self) -> bool {
        self.basis.iter().all(|v| is_real_vec(v))
    }

    /// Real form of a conjugation-stable subspace.
    pub fn to_real(&self) -> Result<Subspace> {
        if !self.is_real() {
            return Err(Error::FieldMismatch(
                "subspace is not conjugation-invariant".into(),
            ));
        }
        Ok(Subspace {
            field: Field::Real,
            ..self.clone()
        })
    }

    pub fn conj(&self) -> Subspace {
        let gens = self.basis.iter().map(|v| conj_vec(v)).collect();
        Subspace::span(self.field, self.ambient_dim, gens).expect("conjugate keeps dimensions")
    }

    /// `{f : Σₖ fₖ vₖ = 0 for all v in self}` under the bilinear coordinate pairing.
    pub fn annihilator(&self) -> Subspace {
        let k = kernel(&self.basis, self.ambient_dim);
        Subspace::span(self.field, self.ambient_dim, k).expect("kernel has ambient length")
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                "subspaces over different fields".into(),
            ));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient_dim, gens)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let joint = self.annihilator().sum(&other.annihilator())?;
        Ok(joint.annihilator())
    }

    /// Image of the subspace under a linear map.
    pub fn map(
        &self,
        field: Field,
        target_dim: usize,
        f: impl Fn(&[Gauss]) -> Vector,
    ) -> Result<Subspace> {
        let gens = self.basis.iter().map(|v| f(v)).collect();
        Subspace::span(field, target_dim, gens)
    }
}

pub fn unit_vector(n: usize, k: usize) -> Vector {
    let mut v = vec![Gauss::zero(); n];
    v[k] = Gauss::one();
    v
}

/// Intersection and sum of two subspaces of the same ambient space.
pub fn meet_join(a: &Subspace, b: &Subspace) -> Result<(Subspace, Subspace)> {
    Ok((a.intersect(b)?, a.sum(b)?))
}

/// Solves `A x = b`. `Ok(None)` is the definite "infeasible" verdict.
pub fn solve_affine(coeff_rows: &[Vector], rhs: &[Gauss]) -> Result<Option<Vector>> {
    if coeff_rows.len() != rhs.len() {
        return Err(Error::DimensionMismatch {
            expected: coeff_rows.len(),
            found: rhs.len(),
        });
    }
    let ncols = coeff_rows.first().map_or(0, Vec::len);
    if let Some(bad) = coeff_rows.iter().find(|r| r.len() != ncols) {
        return Err(Error::DimensionMismatch {
            expected: ncols,
            found: bad.len(),
        });
    }
    let mut aug: Vec<Vector> = coeff_rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return Ok(None);
    }
    let mut x = vec![Gauss::zero(); ncols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[row][ncols].clone();
    }
    Ok(Some(x))
}

/// Coset representatives of `ambient / sub` with an exact reduction map.
#[derive(Clone, Debug)]
pub struct Quotient {
    ambient: Subspace,
    sub: Subspace,
    representatives: Vec<Vector>,
    // rows: sub basis followed by representatives; `inverse` solves x·rows = v on `cols`.
    cols: Vec<usize>,
    inverse: Vec<Vector>,
}

/// Builds the quotient `ambient / sub`; errors unless `sub ⊆ ambient`.
pub fn quotient(ambient: &Subspace, sub: &Subspace) -> Result<Quotient> {
    if ambient.field != sub.field || ambient.ambient_dim != sub.ambient_dim {
        return Err(Error::FieldMismatch(
            "quotient of incompatible subspaces".into(),
        ));
    }
    if !ambient.contains_subspace(sub) {
        return Err(Error::NotContained);
    }
    let n = ambient.ambient_dim;
    let mut rows: Vec<Vector> = sub.basis.clone();
    let mut representatives = Vec::new();
    let mut echelon = sub.basis.clone();
    for v in &ambient.basis {
        let mut trial = echelon.clone();
        trial.push(v.clone());
        if rank(&trial, n) > echelon.len() {
            echelon = trial;
            rows.push(v.clone());
            representatives.push(v.clone());
        }
    }
    // The pivot columns of the stacked rows give an invertible square block.
    let k = rows.len();
    let mut echelon_rows = rows.clone();
    let cols = rref(&mut echelon_rows, n);
    let block: Vec<Vector> = rows
        .iter()
        .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    let inverse =
        invert(&block).ok_or_else(|| Error::Internal("quotient block not invertible".into()))?;
    debug_assert_eq!(inverse.len(), k);
    Ok(Quotient {
        ambient: ambient.clone(),
        sub: sub.clone(),
        representatives,
        cols,
        inverse,
    })
}

impl Quotient {
    pub fn representatives(&self) -> &[Vector] {
        &self.representatives
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn ambient(&self) -> &Subspace {
        &self.ambient
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    /// Coordinates of `v` over the coset representatives, modulo `sub`.
    pub fn reduce(&self, v: &[Gauss]) -> Result<Vector> {
        if !self.ambient.contains(v) {
            return Err(Error::NotContained);
        }
        let restricted: Vector = self.cols.iter().map(|&c| v[c].clone()).collect();
        // x · block = restricted  ⇒  x = restricted · block⁻¹
        let k = self.inverse.len();
        let mut x = vec![Gauss::zero(); k];
        for (i, r) in restricted.iter().enumerate() {
            axpy(&mut x, r, &self.inverse[i]);
        }
        Ok(x[self.sub.dim()..].to_vec())
    }

    /// Canonical representative `Σ cₖ repₖ` of the coset of `v`.
    pub fn canonical(&self, v: &[Gauss]) -> Result<Vector> {
        let coords = self.reduce(v)?;
        Ok(combine(
            &coords,
            &self.representatives,
            self.ambient.ambient_dim,
        ))
    }
}

/// Inverse of a square matrix given by rows.
pub fn invert(m: &[Vector]) -> Option<Vec<Vector>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut aug: Vec<Vector> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend(unit_vector(n, i));
            row
        })
        .collect();
    let pivots = rref(&mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Product of matrices given by rows.
pub fn matmul(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![Gauss::zero(); cols];
            for (x, brow) in row.iter().zip(b) {
                axpy(&mut out, x, brow);
            }
            out
        })
        .collect()
}

/// Matrix-vector product `M v`.
pub fn apply(m: &[Vector], v: &[Gauss]) -> Vector {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn transpose(m: &[Vector], ncols: usize) -> Vec<Vector> {
    (0..ncols)
        .map(|c| m.iter().map(|r| r[c].clone()).collect())
        .collect()
}

pub fn identity(n: usize) -> Vec<Vector> {
    (0..n).map(|k| unit_vector(n, k)).collect()
}

/// Splits a complex system `A x = b` with real unknowns into a rational one.
pub fn realify(rows: &[Vector], rhs: &[Gauss]) -> (Vec<Vector>, Vector) {
    let mut out_rows = Vec::with_capacity(rows.len() * 2);
    let mut out_rhs = Vec::with_capacity(rows.len() * 2);
    for (row, b) in rows.iter().zip(rhs) {
        out_rows.push(row.iter().map(|x| Gauss::real(x.re.clone())).collect());
        out_rhs.push(Gauss::real(b.re.clone()));
        if row.iter().any(|x| !x.is_real()) || !b.is_real() {
            out_rows.push(row.iter().map(|x| Gauss::real(x.im.clone())).collect());
            out_rhs.push(Gauss::real(b.im.clone()));
        }
    }
    (out_rows, out_rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Gauss::from_int(x)).collect()
    }

    fn cv(xs: &[(i64, i64)]) -> Vector {
        xs.iter()
            .map(|&(a, b)| Gauss::new(rat(a, 1), rat(b, 1)))
            .collect()
    }

    #[test]
    fn dependent_generators_collapse() {
        let s = canonicalize(&[v(&[1, 0]), v(&[2, 0])], Field::Real, 2).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.basis(), &[v(&[1, 0])]);
    }

    #[test]
    fn empty_span_is_zero() {
        let s = canonicalize(&[], Field::Real, 3).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s, Subspace::zero(Field::Real, 3));
    }

    #[test]
    fn complex_dependence() {
        let s = canonicalize(
            &[cv(&[(1, 0), (0, 1)]), cv(&[(0, 1), (-1, 0)])],
            Field::Complex,
            2,
        )
        .unwrap();
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn length_mismatch_is_input_error() {
        assert!(canonicalize(&[v(&[1, 0, 0])], Field::Real, 2).is_err());
        assert!(canonicalize(&[cv(&[(0, 1), (0, 0)])], Field::Real, 2).is_err());
    }

    #[test]
    fn meet_join_coordinate_axes() {
        let a = canonicalize(&[v(&[1, 0])], Field::Real, 2).unwrap();
        let b = canonicalize(&[v(&[0, 1])], Field::Real, 2).unwrap();
        let (m, j) = meet_join(&a, &b).unwrap();
        assert_eq!(m.dim(), 0);
        assert!(j.is_full());
        let (m, j) = meet_join(&a, &a).unwrap();
        assert_eq!(m, a);
        assert_eq!(j, a);
        assert!(meet_join(&a, &Subspace::zero(Field::Real, 3)).is_err());
    }

    #[test]
    fn affine_examples() {
        let x = solve_affine(&[v(&[1, 1]), v(&[1, -1])], &v(&[1, 1]))
            .unwrap()
            .unwrap();
        assert_eq!(x, v(&[1, 0]));
        assert_eq!(solve_affine(&[v(&[0])], &v(&[1])).unwrap(), None);
        let x = solve_affine(&[v(&[0])], &v(&[0])).unwrap().unwrap();
        assert_eq!(x, v(&[0]));
        assert!(solve_affine(&[v(&[1, 2])], &v(&[1, 2])).is_err());
    }

    #[test]
    fn quotient_examples() {
        let full = Subspace::full(Field::Real, 2);
        let sub = canonicalize(&[v(&[1, 0])], Field::Real, 2).unwrap();
        let q = quotient(&full, &sub).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.representatives(), &[v(&[0, 1])]);
        assert_eq!(q.reduce(&v(&[1, 1])).unwrap(), v(&[1]));
        assert_eq!(quotient(&full, &full).unwrap().dim(), 0);
        assert!(matches!(quotient(&sub, &full), Err(Error::NotContained)));
    }

    #[test]
    fn inversion_roundtrip() {
        let m = vec![v(&[2, 1]), v(&[1, 1])];
        let inv = invert(&m).unwrap();
        assert_eq!(matmul(&m, &inv), identity(2));
        assert!(invert(&[v(&[1, 2]), v(&[2, 4])]).is_none());
    }
}
