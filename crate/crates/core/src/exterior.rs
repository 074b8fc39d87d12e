//! Graded exterior algebra over a based vector space.
//!
//! [`Form`]s live in `Λ•V*` and [`Multivector`]s in `Λ•V`, both with Gaussian-rational
//! coefficients. A term is keyed by a [`Monomial`], the strictly increasing index set of
//! its legs; the sign of any other ordering is absorbed into the coefficient when the
//! term is built.
//!
//! Contraction of a basis vector is the degree −1 antiderivation with
//! `ι_{e_k} e^k = 1`. A decomposable multivector contracts its last factor first:
//! `ι_{x∧y} = ι_x ∘ ι_y`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::scalar::{Gauss, Rational};

/// Label of the central unit `𝟙` in an extended algebra.
pub const UNIT: &str = "unit";
/// Label of the dual unit `𝟙*`.
pub const UNIT_DUAL: &str = "unit*";

/// Maximum supported dimension of the underlying space.
pub const MAX_DIM: usize = 31;

/// A strictly increasing set of basis indices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u32);

impl Monomial {
    pub const EMPTY: Monomial = Monomial(0);

    pub fn single(k: usize) -> Self {
        Monomial(1 << k)
    }

    pub fn from_bits(bits: u32) -> Self {
        Monomial(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, k: usize) -> bool {
        self.0 & (1 << k) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|&k| self.contains(k)).collect()
    }

    pub fn is_disjoint(self, other: Monomial) -> bool {
        self.0 & other.0 == 0
    }

    /// Sign of `e_A ∧ e_B` relative to `e_{A∪B}` for disjoint `A`, `B`.
    fn merge_sign(self, other: Monomial) -> bool {
        let mut inversions = 0u32;
        let mut b = other.0;
        while b != 0 {
            let k = b.trailing_zeros();
            inversions += (self.0 >> (k + 1)).count_ones();
            b &= b - 1;
        }
        inversions % 2 == 1
    }

    /// Sign of removing index `k`: the number of indices before it.
    fn position(self, k: usize) -> usize {
        (self.0 & ((1u32 << k) - 1)).count_ones() as usize
    }
}

impl Ord for Monomial {
    /// Degree first, then lexicographic order of the sorted index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                return Ordering::Equal;
            }
            let lowest = diff.trailing_zeros();
            if self.0 & (1 << lowest) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}

/// All degree-`k` monomials in dimension `n`, in canonical order.
pub fn monomials(n: usize, k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(Monomial(idx.iter().fold(0u32, |m, &i| m | (1 << i))));
        let mut p = k;
        while p > 0 && idx[p - 1] == n - k + p - 1 {
            p -= 1;
        }
        if p == 0 {
            return out;
        }
        idx[p - 1] += 1;
        for q in p..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Number of degree-`k` monomials in dimension `n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Marker for which side of the pairing an element lives on.
pub trait Side:
    Clone + Copy + fmt::Debug + PartialEq + Eq + std::hash::Hash + Default + 'static
{
    type Dual: Side<Dual = Self>;
    const IS_FORM: bool;
}

/// `Λ•V*`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Dual;
/// `Λ•V`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Primal;

impl Side for Dual {
    type Dual = Primal;
    const IS_FORM: bool = true;
}

impl Side for Primal {
    type Dual = Dual;
    const IS_FORM: bool = false;
}

/// An element of the exterior algebra over a `dim`-dimensional space, possibly of mixed degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Exterior<S: Side> {
    dim: usize,
    terms: BTreeMap<Monomial, Gauss>,
    side: PhantomData<S>,
}

pub type Form = Exterior<Dual>;
pub type Multivector = Exterior<Primal>;

impl<S: Side> Exterior<S> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Exterior {
            dim,
            terms: BTreeMap::new(),
            side: PhantomData,
        }
    }

    pub fn scalar(dim: usize, c: Gauss) -> Self {
        let mut e = Self::zero(dim);
        e.add_term(Monomial::EMPTY, c);
        e
    }

    /// The basis element `e_k` (or `e^k`).
    pub fn basis(dim: usize, k: usize) -> Self {
        Self::term(dim, &[k], Gauss::one())
    }

    /// `c · e_{i₁} ∧ … ∧ e_{iₖ}` for indices in any order; repeated indices give zero.
    pub fn term(dim: usize, indices: &[usize], c: Gauss) -> Self {
        let mut e = Self::zero(dim);
        let mut acc = Monomial::EMPTY;
        let mut negative = false;
        for &k in indices {
            assert!(k < dim, "index {k} out of range for dimension {dim}");
            let m = Monomial::single(k);
            if !acc.is_disjoint(m) {
                return e;
            }
            negative ^= acc.merge_sign(m);
            acc = Monomial(acc.0 | m.0);
        }
        e.add_term(acc, if negative { -c } else { c });
        e
    }

    /// Linear combination of degree-one basis elements.
    pub fn from_vector(v: &[Gauss]) -> Self {
        let mut e = Self::zero(v.len());
        for (k, c) in v.iter().enumerate() {
            e.add_term(Monomial::single(k), c.clone());
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Gauss> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Gauss {
        self.terms.get(&m).cloned().unwrap_or_else(Gauss::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Gauss) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Degree-`k` component.
    pub fn part(&self, k: usize) -> Self {
        let mut e = Self::zero(self.dim);
        for (m, c) in &self.terms {
            if m.degree() == k {
                e.terms.insert(*m, c.clone());
            }
        }
        e
    }

    /// `Some(k)` when every term has degree `k` (zero is homogeneous of every degree).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn scalar_part(&self) -> Gauss {
        self.coeff(Monomial::EMPTY)
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        let mut e = Self::zero(self.dim);
        if c.is_zero() {
            return e;
        }
        for (m, x) in &self.terms {
            e.terms.insert(*m, x * c);
        }
        e
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&Gauss::real(r.clone()))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut e = self.clone();
        for (m, c) in &other.terms {
            e.add_term(*m, c.clone());
        }
        Ok(e)
    }

    /// Exterior product; associative and graded-commutative.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut e = Self::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if !ma.is_disjoint(*mb) {
                    continue;
                }
                let c = ca * cb;
                e.add_term(
                    Monomial(ma.0 | mb.0),
                    if ma.merge_sign(*mb) { -c } else { c },
                );
            }
        }
        Ok(e)
    }

    /// `self ∧ self ∧ … ` (`k` factors; the scalar 1 for `k = 0`).
    pub fn wedge_power(&self, k: usize) -> Self {
        let mut acc = Self::scalar(self.dim, Gauss::one());
        for _ in 0..k {
            acc = acc.wedge(self).expect("same dimension");
        }
        acc
    }

    /// Coefficient-wise complex conjugation.
    pub fn conj(&self) -> Self {
        let mut e = Self::zero(self.dim);
        for (m, c) in &self.terms {
            e.terms.insert(*m, c.conj());
        }
        e
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(Gauss::is_real)
    }

    pub fn real_part(&self) -> Self {
        let mut e = Self::zero(self.dim);
        for (m, c) in &self.terms {
            e.add_term(*m, Gauss::real(c.re.clone()));
        }
        e
    }

    pub fn imag_part(&self) -> Self {
        let mut e = Self::zero(self.dim);
        for (m, c) in &self.terms {
            e.add_term(*m, Gauss::real(c.im.clone()));
        }
        e
    }

    /// Contraction by a single basis element of the dual side.
    pub fn contract_basis(&self, k: usize) -> Self {
        let mut e = Self::zero(self.dim);
        for (m, c) in &self.terms {
            if m.contains(k) {
                let rest = Monomial(m.0 & !(1 << k));
                let c = if m.position(k) % 2 == 1 {
                    -c
                } else {
                    c.clone()
                };
                e.add_term(rest, c);
            }
        }
        e
    }

    /// Coordinates of the degree-`k` part over [`monomials`]`(dim, k)`.
    pub fn to_coords(&self, k: usize) -> Vector {
        monomials(self.dim, k)
            .into_iter()
            .map(|m| self.coeff(m))
            .collect()
    }

    pub fn from_coords(dim: usize, k: usize, v: &[Gauss]) -> Self {
        let mut e = Self::zero(dim);
        for (m, c) in monomials(dim, k).into_iter().zip(v) {
            e.add_term(m, c.clone());
        }
        e
    }

    /// The same element viewed in a space of dimension `dim ≥ self.dim` with the
    /// original basis as its first vectors.
    pub fn embed(&self, dim: usize) -> Result<Self> {
        if dim < self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: dim,
            });
        }
        Ok(Exterior {
            dim,
            terms: self.terms.clone(),
            side: PhantomData,
        })
    }

    /// Drops every term involving an index `≥ dim`, keeping the others.
    pub fn truncate(&self, dim: usize) -> Self {
        let mask = if dim >= 32 {
            u32::MAX
        } else {
            (1u32 << dim) - 1
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0 & !mask == 0)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Exterior {
            dim,
            terms,
            side: PhantomData,
        }
    }

    /// Renders with the given basis labels; forms get a `*` suffix on each leg.
    pub fn render(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let legs: Vec<String> = m
                .indices()
                .into_iter()
                .map(|k| {
                    let l = labels.get(k).cloned().unwrap_or_else(|| format!("#{k}"));
                    if S::IS_FORM && l != UNIT_DUAL {
                        format!("{l}*")
                    } else {
                        l
                    }
                })
                .collect();
            let coeff = c.to_string();
            let (sign, mag) = match coeff.strip_prefix('-') {
                Some(rest) if c.is_real() => ("-", rest.to_string()),
                _ => ("+", coeff),
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if legs.is_empty() {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                    out.push('·');
                }
                out.push_str(&legs.join("∧"));
            }
        }
        out
    }
}

impl<S: Side> fmt::Debug for Exterior<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.dim).map(|k| format!("e{}", k + 1)).collect();
        write!(f, "{}", self.render(&labels))
    }
}

impl<S: Side> Add for &Exterior<S> {
    type Output = Exterior<S>;
    fn add(self, o: &Exterior<S>) -> Exterior<S> {
        self.try_add(o).expect("dimension mismatch in exterior sum")
    }
}

impl<S: Side> Add for Exterior<S> {
    type Output = Exterior<S>;
    fn add(self, o: Exterior<S>) -> Exterior<S> {
        &self + &o
    }
}

impl<S: Side> Neg for &Exterior<S> {
    type Output = Exterior<S>;
    fn neg(self) -> Exterior<S> {
        self.scale(&Gauss::from_int(-1))
    }
}

impl<S: Side> Neg for Exterior<S> {
    type Output = Exterior<S>;
    fn neg(self) -> Exterior<S> {
        -&self
    }
}

impl<S: Side> Sub for &Exterior<S> {
    type Output = Exterior<S>;
    fn sub(self, o: &Exterior<S>) -> Exterior<S> {
        self + &(-o)
    }
}

impl<S: Side> Sub for Exterior<S> {
    type Output = Exterior<S>;
    fn sub(self, o: Exterior<S>) -> Exterior<S> {
        &self - &o
    }
}

/// Contraction `ι_x a` of an element of the dual side into `a`.
///
/// For a decomposable `x = x₁ ∧ … ∧ x_k` this is `ι_{x₁} ∘ … ∘ ι_{x_k}`, extended linearly.
pub fn contract<S: Side>(x: &Exterior<S::Dual>, a: &Exterior<S>) -> Result<Exterior<S>> {
    if x.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: x.dim(),
        });
    }
    let mut out = Exterior::<S>::zero(a.dim());
    for (m, c) in x.terms() {
        let mut acc = a.clone();
        for k in m.indices().into_iter().rev() {
            acc = acc.contract_basis(k);
            if acc.is_zero() {
                break;
            }
        }
        out = &out + &acc.scale(c);
    }
    Ok(out)
}

/// Full evaluation `⟨a, x⟩`: the scalar part of `ι_x a`.
pub fn evaluate(a: &Form, x: &Multivector) -> Result<Gauss> {
    Ok(contract(x, a)?.scalar_part())
}

/// `α(v)` for a form of degree one and a vector of degree one, both given by coordinates.
pub fn pair_coords(alpha: &[Gauss], v: &[Gauss]) -> Gauss {
    crate::linalg::dot(alpha, v)
}

/// Names of basis vectors of a space, with the reserved unit labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasedSpace {
    labels: Vec<String>,
    has_unit: bool,
}

impl BasedSpace {
    /// A space with the given basis labels; reserved labels are rejected.
    pub fn new(labels: Vec<String>) -> Result<Self> {
        for (i, l) in labels.iter().enumerate() {
            if l == UNIT || l == UNIT_DUAL {
                return Err(Error::input(format!("basis label {l:?} is reserved")));
            }
            if l.is_empty() || l.ends_with('*') {
                return Err(Error::input(format!("invalid basis label {l:?}")));
            }
            if labels[..i].contains(l) {
                return Err(Error::input(format!("duplicate basis label {l:?}")));
            }
        }
        if labels.len() >= MAX_DIM {
            return Err(Error::input(format!(
                "dimension {} exceeds {}",
                labels.len(),
                MAX_DIM - 1
            )));
        }
        Ok(BasedSpace {
            labels,
            has_unit: false,
        })
    }

    /// Appends the unit as the last basis vector.
    pub fn extended(&self) -> Result<Self> {
        if self.has_unit {
            return Err(Error::input("space already contains the unit"));
        }
        let mut labels = self.labels.clone();
        labels.push(UNIT.into());
        Ok(BasedSpace {
            labels,
            has_unit: true,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn has_unit(&self) -> bool {
        self.has_unit
    }

    pub fn unit_index(&self) -> Option<usize> {
        self.has_unit.then(|| self.labels.len() - 1)
    }

    /// Labels of the primal basis.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Labels used for the dual basis: the primal ones, with `unit*` for the unit.
    pub fn dual_labels(&self) -> Vec<String> {
        let mut l = self.labels.clone();
        if self.has_unit {
            *l.last_mut().unwrap() = UNIT_DUAL.into();
        }
        l
    }

    /// Index of a label on the given side (`unit` for vectors, `unit*` for forms).
    pub fn index_of(&self, label: &str, form_side: bool) -> Option<usize> {
        let reserved = if form_side { UNIT_DUAL } else { UNIT };
        if label == reserved {
            return self.unit_index();
        }
        if label == UNIT || label == UNIT_DUAL {
            return None;
        }
        let k = self.labels.iter().position(|l| l == label)?;
        (Some(k) != self.unit_index()).then_some(k)
    }

    pub fn render<S: Side>(&self, e: &Exterior<S>) -> String {
        if S::IS_FORM {
            let labels: Vec<String> = self.dual_labels();
            e.render(&labels)
        } else {
            e.render(&self.labels)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(dim: usize, idx: &[usize]) -> Form {
        Form::term(dim, idx, Gauss::one())
    }

    fn mv(dim: usize, idx: &[usize]) -> Multivector {
        Multivector::term(dim, idx, Gauss::one())
    }

    #[test]
    fn wedge_antisymmetry() {
        let e1 = f(3, &[0]);
        let e2 = f(3, &[1]);
        assert!(e1.wedge(&e1).unwrap().is_zero());
        assert_eq!(e1.wedge(&e2).unwrap(), f(3, &[0, 1]));
        assert_eq!(e2.wedge(&e1).unwrap(), -f(3, &[0, 1]));
        assert!(e1.wedge(&f(4, &[0])).is_err());
    }

    #[test]
    fn contact_form_square_on_l56() {
        // e⁵ ∧ (e¹∧e⁴ + e²∧e³)² = 2·e¹∧…∧e⁵
        let omega = &f(5, &[0, 3]) + &f(5, &[1, 2]);
        let top = f(5, &[4]).wedge(&omega.wedge_power(2)).unwrap();
        assert_eq!(top, Form::term(5, &[0, 1, 2, 3, 4], Gauss::from_int(2)));
    }

    #[test]
    fn contraction_examples() {
        // ι_{e₁}(e¹∧e²) = e²
        assert_eq!(contract(&mv(3, &[0]), &f(3, &[0, 1])).unwrap(), f(3, &[1]));
        // unit is the last index: ι_𝟙(𝟙*∧e¹) = e¹
        assert_eq!(contract(&mv(3, &[2]), &f(3, &[2, 0])).unwrap(), f(3, &[0]));
        // ι_{e₁∧e₂}(𝟙*∧e¹∧e²) = −𝟙*
        assert_eq!(
            contract(&mv(3, &[0, 1]), &f(3, &[2, 0, 1])).unwrap(),
            -f(3, &[2])
        );
    }

    #[test]
    fn conjugation() {
        let x = &mv(5, &[1]) - &Multivector::term(5, &[4], Gauss::i());
        let y = &mv(5, &[1]) + &Multivector::term(5, &[4], Gauss::i());
        assert_eq!(x.conj(), y);
        assert_eq!(x.conj().conj(), x);
        let real = f(4, &[0, 2]);
        assert_eq!(real.conj(), real);
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials(4, 2).len(), 6);
        assert_eq!(monomials(6, 3).len(), binomial(6, 3));
        let ms = monomials(5, 3);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(monomials(2, 3).len(), 0);
        assert_eq!(monomials(3, 0), vec![Monomial::EMPTY]);
    }

    #[test]
    fn term_sign_normalization() {
        assert_eq!(f(4, &[2, 0]), -f(4, &[0, 2]));
        assert_eq!(f(4, &[2, 0, 1]), f(4, &[0, 1, 2]));
        assert!(f(4, &[1, 1]).is_zero());
    }

    #[test]
    fn based_space_guards() {
        let s = BasedSpace::new(vec!["a".into(), "b".into()]).unwrap();
        let x = s.extended().unwrap();
        assert!(x.extended().is_err());
        assert_eq!(x.index_of("unit", false), Some(2));
        assert_eq!(x.index_of("unit*", true), Some(2));
        assert_eq!(x.index_of("unit", true), None);
        assert!(BasedSpace::new(vec!["a".into(), "a".into()]).is_err());
        assert!(BasedSpace::new(vec!["unit".into()]).is_err());
        let e = &f(3, &[0, 1]) - &f(3, &[2, 1]);
        assert_eq!(x.render(&e), "a*∧b* + b*∧unit*");
    }
}
