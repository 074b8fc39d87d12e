//! Filtrations of the complex `(Λ•𝔤_ℝ*, D)` attached to a transversally complex pair,
//! the pages `E₀`, `E₁` with their `(i,j)` splitting, and the obstruction to inducing the
//! pair from a generalized contact structure.
//!
//! Forms of degree `m` are handled as coordinate vectors over [`monomials`]`(N, m)`.
//! The filtration spaces are
//!
//! * `F_n^m = {α : ι_X α = 0 for all X ∈ Λ^{m−n+1} S_ℂ}`, and likewise `G` with `K`,
//!   `Ḡ` with `K̄`;
//! * full for `n ≤ 0` and zero for `n ≥ m + 1`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::certificate::{Certificate, Verdict};
use crate::error::{Error, Result};
use crate::exterior::{binomial, contract, monomials, Form, Multivector};
use crate::io;
use crate::lie::ExtendedAlgebra;
use crate::linalg::{
    apply, is_zero_vec, kernel, quotient, realify, solve_affine, Field, Quotient, Subspace, Vector,
};
use crate::omni::{classify_subspace, form_flat, OmniSubspace, OmniVector, Twist};
use crate::scalar::Gauss;
use crate::structures::{jacobi_inverse_extend, TransversalPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FiltrationKind {
    F,
    G,
    GBar,
}

/// A filtration space together with its indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationSpace {
    pub kind: FiltrationKind,
    pub n: i64,
    pub m: usize,
    pub space: Subspace,
}

/// Caches the differential matrices and filtration spaces of one pair.
pub struct SpectralContext {
    pair: TransversalPair,
    dim: usize,
    // d[m] maps Λ^m to Λ^{m+1}, by rows
    d: Vec<Vec<Vector>>,
    cache: Mutex<HashMap<(FiltrationKind, i64, usize), Subspace>>,
}

/// Position of a page component: either a split piece `(i,j)` or the whole `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PageIndex {
    Split { i: usize, j: usize },
    Total { p: usize },
}

impl PageIndex {
    pub fn p(self) -> usize {
        match self {
            PageIndex::Split { i, j } => i + j,
            PageIndex::Total { p } => p,
        }
    }
}

/// `E_r` at the given position, as numerator modulo denominator.
#[derive(Clone, Debug)]
pub struct PageComponent {
    pub r: u8,
    pub index: PageIndex,
    pub q: usize,
    pub numerator: Subspace,
    pub denominator: Subspace,
    quotient: Quotient,
}

impl PageComponent {
    /// Total form degree `p + q`.
    pub fn degree(&self) -> usize {
        self.index.p() + self.q
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn representatives(&self) -> &[Vector] {
        self.quotient.representatives()
    }

    /// Coordinates of a numerator element modulo the denominator.
    pub fn reduce(&self, v: &[Gauss]) -> Result<Vector> {
        self.quotient.reduce(v)
    }
}

/// A class in a page component, with its canonical reduced representative.
#[derive(Clone, Debug)]
pub struct PageClass {
    pub component: PageComponent,
    pub representative: Vector,
    pub coords: Vector,
}

impl PageClass {
    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    /// The canonical representative `Σ cₖ repₖ`.
    pub fn canonical(&self) -> Vector {
        crate::linalg::combine(
            &self.coords,
            self.component.representatives(),
            self.component.numerator.ambient_dim(),
        )
    }

    pub fn form(&self, dim: usize) -> Form {
        Form::from_coords(dim, self.component.degree(), &self.representative)
    }
}

impl SpectralContext {
    pub fn new(pair: TransversalPair) -> Result<Self> {
        let ext = pair.ext().clone();
        let dim = ext.dim();
        let mut d = Vec::with_capacity(dim + 1);
        for m in 0..=dim {
            let cols: Vec<Vector> = monomials(dim, m)
                .into_iter()
                .map(|mono| {
                    let f = Form::from_coords(
                        dim,
                        m,
                        &unit(
                            binomial(dim, m),
                            monomials(dim, m).iter().position(|x| *x == mono).unwrap(),
                        ),
                    );
                    ext.der_diff(&f).map(|g| g.to_coords(m + 1))
                })
                .collect::<Result<_>>()?;
            d.push(crate::linalg::transpose(&cols, binomial(dim, m + 1)));
        }
        Ok(SpectralContext {
            pair,
            dim,
            d,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn pair(&self) -> &TransversalPair {
        &self.pair
    }

    pub fn ext(&self) -> &ExtendedAlgebra {
        self.pair.ext()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Λ^m` as a full complex subspace.
    pub fn full(&self, m: usize) -> Subspace {
        Subspace::full(Field::Complex, binomial(self.dim, m))
    }

    /// `D : Λ^m → Λ^{m+1}` applied to coordinates.
    pub fn d(&self, m: usize, v: &[Gauss]) -> Vector {
        if m >= self.dim {
            return Vec::new();
        }
        apply(&self.d[m], v)
    }

    /// `D(W)` for a subspace `W ⊆ Λ^m`.
    pub fn d_image(&self, m: usize, w: &Subspace) -> Subspace {
        let gens = w.basis().iter().map(|b| self.d(m, b)).collect();
        Subspace::span(Field::Complex, binomial(self.dim, m + 1), gens).expect("image rows")
    }

    fn generating_space(&self, kind: FiltrationKind) -> Subspace {
        match kind {
            FiltrationKind::F => self.pair.s().complexify(),
            FiltrationKind::G => self.pair.k().clone(),
            FiltrationKind::GBar => self.pair.k_bar(),
        }
    }

    pub fn filtration(&self, kind: FiltrationKind, n: i64, m: usize) -> FiltrationSpace {
        FiltrationSpace {
            kind,
            n,
            m,
            space: self.filtration_space(kind, n, m),
        }
    }

    pub fn filtration_space(&self, kind: FiltrationKind, n: i64, m: usize) -> Subspace {
        let ambient = binomial(self.dim, m);
        if n <= 0 {
            return self.full(m);
        }
        if n > m as i64 {
            return Subspace::zero(Field::Complex, ambient);
        }
        if let Some(s) = self.cache.lock().expect("cache lock").get(&(kind, n, m)) {
            return s.clone();
        }
        let k = (m as i64 - n + 1) as usize;
        let v = self.generating_space(kind);
        let vb = v.basis();
        let mut rows: Vec<Vector> = Vec::new();
        for sel in monomials(vb.len(), k) {
            let mut x = Multivector::scalar(self.dim, Gauss::one());
            for t in sel.indices() {
                x = x
                    .wedge(&Multivector::from_vector(&vb[t]))
                    .expect("same dim");
            }
            // row block: coordinates of ι_X e^A, as a matrix acting on α
            let cols: Vec<Vector> = (0..ambient)
                .map(|a| {
                    let f = Form::from_coords(self.dim, m, &unit(ambient, a));
                    contract(&x, &f).expect("same dim").to_coords(m - k)
                })
                .collect();
            rows.extend(crate::linalg::transpose(&cols, binomial(self.dim, m - k)));
        }
        let space =
            Subspace::span(Field::Complex, ambient, kernel(&rows, ambient)).expect("kernel");
        self.cache
            .lock()
            .expect("cache lock")
            .insert((kind, n, m), space.clone());
        space
    }

    pub fn f(&self, n: i64, m: usize) -> Subspace {
        self.filtration_space(FiltrationKind::F, n, m)
    }

    pub fn g(&self, n: i64, m: usize) -> Subspace {
        self.filtration_space(FiltrationKind::G, n, m)
    }

    pub fn gbar(&self, n: i64, m: usize) -> Subspace {
        self.filtration_space(FiltrationKind::GBar, n, m)
    }

    /// `G_j^m ∩ Ḡ_i^m`.
    pub fn bigraded(&self, i: i64, j: i64, m: usize) -> Subspace {
        self.g(j, m)
            .intersect(&self.gbar(i, m))
            .expect("same ambient")
    }

    /// `{α ∈ W : Dα ∈ F_p^{m+1}}`.
    fn d_preimage(&self, w: &Subspace, m: usize, p: i64) -> Subspace {
        let target = self.f(p, m + 1);
        let ann = target.annihilator();
        let images: Vec<Vector> = w.basis().iter().map(|b| self.d(m, b)).collect();
        let rows: Vec<Vector> = ann
            .basis()
            .iter()
            .map(|a| images.iter().map(|im| crate::linalg::dot(a, im)).collect())
            .collect();
        let coeffs = kernel(&rows, w.dim());
        let gens = coeffs
            .iter()
            .map(|c| crate::linalg::combine(c, w.basis(), w.ambient_dim()))
            .collect();
        Subspace::span(Field::Complex, w.ambient_dim(), gens).expect("preimage")
    }

    /// `E_r^{(i,j),q}`.
    pub fn page(&self, r: u8, i: usize, j: usize, q: usize) -> Result<PageComponent> {
        let m = i + j + q;
        let p = (i + j) as i64;
        let w = self.bigraded(i as i64, j as i64, m);
        let (num, den) = match r {
            0 => (w.clone(), self.f(p + 1, m).intersect(&w)?),
            1 => {
                let num = self.d_preimage(&w, m, p + 1);
                let lower = if m == 0 {
                    Subspace::zero(Field::Complex, 1)
                } else {
                    self.f(p, m - 1)
                };
                let exact = if m == 0 {
                    Subspace::zero(Field::Complex, binomial(self.dim, m))
                } else {
                    self.d_image(m - 1, &lower)
                };
                let den = self.f(p + 1, m).sum(&exact)?.intersect(&w)?;
                (num, den)
            }
            _ => return Err(Error::input("only pages 0 and 1 are available")),
        };
        self.component(r, PageIndex::Split { i, j }, q, num, den)
    }

    /// The unsplit `E_r^{p,q}`.
    pub fn page_total(&self, r: u8, p: usize, q: usize) -> Result<PageComponent> {
        let m = p + q;
        let pi = p as i64;
        let w = self.f(pi, m);
        let (num, den) = match r {
            0 => (w.clone(), self.f(pi + 1, m)),
            1 => {
                let num = self.d_preimage(&w, m, pi + 1);
                let exact = if m == 0 {
                    Subspace::zero(Field::Complex, 1)
                } else {
                    self.d_image(m - 1, &self.f(pi, m - 1))
                };
                (num, self.f(pi + 1, m).sum(&exact)?)
            }
            _ => return Err(Error::input("only pages 0 and 1 are available")),
        };
        self.component(r, PageIndex::Total { p }, q, num, den)
    }

    fn component(
        &self,
        r: u8,
        index: PageIndex,
        q: usize,
        numerator: Subspace,
        denominator: Subspace,
    ) -> Result<PageComponent> {
        let quotient = quotient(&numerator, &denominator)
            .map_err(|_| Error::Internal("page denominator is not inside its numerator".into()))?;
        Ok(PageComponent {
            r,
            index,
            q,
            numerator,
            denominator,
            quotient,
        })
    }

    /// The class of `form` in `E_r^{(i,j),q}`.
    pub fn reduce_class(
        &self,
        form: &[Gauss],
        r: u8,
        i: usize,
        j: usize,
        q: usize,
    ) -> Result<PageClass> {
        let component = self.page(r, i, j, q)?;
        self.class_in(component, form)
    }

    pub fn class_in(&self, component: PageComponent, form: &[Gauss]) -> Result<PageClass> {
        let m = component.degree();
        let p = component.index.p() as i64;
        if form.len() != component.numerator.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: component.numerator.ambient_dim(),
                found: form.len(),
            });
        }
        let w = match component.index {
            PageIndex::Split { i, j } => self.bigraded(i as i64, j as i64, m),
            PageIndex::Total { p } => self.f(p as i64, m),
        };
        if !w.contains(form) {
            return Err(Error::axiom(
                "filtration membership",
                format!(
                    "form is not in the degree-{m} filtration piece of {:?}",
                    component.index
                ),
            ));
        }
        if component.r == 1 && !self.f(p + 1, m + 1).contains(&self.d(m, form)) {
            return Err(Error::axiom(
                "page-1 cycle",
                format!("D(form) is not in F_{}^{}", p + 1, m + 1),
            ));
        }
        let coords = component.reduce(form)?;
        Ok(PageClass {
            component,
            representative: form.to_vec(),
            coords,
        })
    }

    /// Splits `Dα = β₁ + β₂` with `β₁ ∈ G_j∩Ḡ_{i+1}` and `β₂ ∈ G_{j+1}∩Ḡ_i`.
    pub fn split_differential(
        &self,
        form: &[Gauss],
        i: usize,
        j: usize,
        m: usize,
    ) -> Result<(Vector, Vector)> {
        let target = self.d(m, form);
        let w1 = self.bigraded(i as i64 + 1, j as i64, m + 1);
        let w2 = self.bigraded(i as i64, j as i64 + 1, m + 1);
        let cols: Vec<&Vector> = w1.basis().iter().chain(w2.basis()).collect();
        let ambient = binomial(self.dim, m + 1);
        let rows: Vec<Vector> = (0..ambient)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        let sol = if cols.is_empty() {
            if is_zero_vec(&target) {
                Some(Vec::new())
            } else {
                None
            }
        } else {
            solve_affine(&rows, &target)?
        };
        let sol = sol.ok_or_else(|| {
            Error::Internal("D(form) does not split over the (i,j) grading".into())
        })?;
        let (c1, c2) = sol.split_at(w1.dim());
        Ok((
            crate::linalg::combine(c1, w1.basis(), ambient),
            crate::linalg::combine(c2, w2.basis(), ambient),
        ))
    }

    /// `(∂¹c, ∂̄¹c)` in `E₁^{(i+1,j),q}` and `E₁^{(i,j+1),q}`.
    pub fn split_d1(&self, class: &PageClass) -> Result<(PageClass, PageClass)> {
        let PageIndex::Split { i, j } = class.component.index else {
            return Err(Error::input(
                "split differential needs a split page component",
            ));
        };
        if class.component.r != 1 {
            return Err(Error::input("split differential acts on page 1"));
        }
        let m = class.component.degree();
        let (b1, b2) = self.split_differential(&class.representative, i, j, m)?;
        let del = self.reduce_class(&b1, 1, i + 1, j, class.component.q)?;
        let delbar = self.reduce_class(&b2, 1, i, j + 1, class.component.q)?;
        Ok((del, delbar))
    }

    /// `[ω]₁ ∈ E₁^{(0,0),2}` for the default real extension `ω` of `J⁻¹`.
    pub fn inverse_class(&self) -> Result<(Form, PageClass)> {
        let omega = jacobi_inverse_extend(self.pair.tensor(), None)?;
        let class = self
            .reduce_class(&omega.to_coords(2), 1, 0, 0, 2)
            .map_err(|e| Error::Internal(format!("leafwise closedness of J⁻¹ fails: {e}")))?;
        Ok((omega, class))
    }
}

fn unit(n: usize, k: usize) -> Vector {
    crate::linalg::unit_vector(n, k)
}

/// Outcome of `∂¹∂̄¹[J⁻¹]₁`.
#[derive(Clone, Debug)]
pub struct PrimaryObstruction {
    pub omega: Form,
    pub class_is_zero: bool,
    pub obstruction: PageClass,
}

impl PrimaryObstruction {
    pub fn is_zero(&self) -> bool {
        self.obstruction.is_zero()
    }
}

pub fn primary_obstruction(ctx: &SpectralContext) -> Result<PrimaryObstruction> {
    let (omega, class) = ctx.inverse_class()?;
    let (_, delbar) = ctx.split_d1(&class)?;
    let (deldelbar, _) = ctx.split_d1(&delbar)?;
    Ok(PrimaryObstruction {
        omega,
        class_is_zero: class.is_zero(),
        obstruction: deldelbar,
    })
}

/// A real `B` with `DB ∈ F₁³` and `D¹[[B]₀]₁ = i(∂̄¹ − ∂¹)[J⁻¹]₁` in `E₁^{1,2}`, if any.
pub fn secondary_obstruction(ctx: &SpectralContext) -> Result<Option<Form>> {
    let primary = primary_obstruction(ctx)?;
    if !primary.is_zero() {
        return Err(Error::axiom("primary obstruction", "∂¹∂̄¹[J⁻¹]₁ ≠ 0"));
    }
    let n = ctx.dim();
    let (b1, b2) = ctx.split_differential(&primary.omega.to_coords(2), 0, 0, 2)?;
    let rhs: Vector = b2
        .iter()
        .zip(&b1)
        .map(|(x, y)| &(x - y) * &Gauss::i())
        .collect();
    let n3 = binomial(n, 3);
    let n2 = binomial(n, 2);
    // unknowns: real B coefficients, then real and imaginary parts over F₂³ and F₁² bases
    let mut cols: Vec<Vector> = (0..n2).map(|a| ctx.d(2, &unit(n2, a))).collect();
    let f23 = ctx.f(2, 3);
    let f12 = ctx.f(1, 2);
    for b in f23.basis() {
        cols.push(b.iter().map(|x| -x).collect());
        cols.push(b.iter().map(|x| -(x * &Gauss::i())).collect());
    }
    for b in f12.basis() {
        let db = ctx.d(2, b);
        cols.push(db.iter().map(|x| -x).collect());
        cols.push(db.iter().map(|x| -(x * &Gauss::i())).collect());
    }
    let mut rows: Vec<Vector> = (0..n3)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut rhs_all = rhs;
    // DB ∈ F₁³
    for a in ctx.f(1, 3).annihilator().basis() {
        let mut row: Vector = (0..n2).map(|k| crate::linalg::dot(a, &cols[k])).collect();
        row.extend(std::iter::repeat_n(Gauss::zero(), cols.len() - n2));
        rows.push(row);
        rhs_all.push(Gauss::zero());
    }
    let (rrows, rrhs) = realify(&rows, &rhs_all);
    Ok(solve_affine(&rrows, &rrhs)?.map(|x| Form::from_coords(n, 2, &x[..n2])))
}

/// A witness `(ω', B)` of the direct criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectWitness {
    pub omega: Form,
    pub b: Form,
}

/// Real `f ∈ F₁²` and real `B` with `ι_Z D(i(ω+f) + B) = 0` for all `Z ∈ Λ³K`.
pub fn direct_feasibility(ctx: &SpectralContext) -> Result<Option<DirectWitness>> {
    let n = ctx.dim();
    let omega = jacobi_inverse_extend(ctx.pair().tensor(), None)?;
    let n2 = binomial(n, 2);
    let ann = ctx.g(1, 3).annihilator();
    let f12 = ctx.f(1, 2);
    let real_f: Vec<Vector> = f12.basis().to_vec();
    if real_f.iter().flatten().any(|c| !c.is_real()) {
        return Err(Error::Internal("F₁² has no real echelon basis".into()));
    }
    let mut cols: Vec<Vector> = (0..n2).map(|a| ctx.d(2, &unit(n2, a))).collect();
    for f in &real_f {
        cols.push(ctx.d(2, f).iter().map(|x| x * &Gauss::i()).collect());
    }
    let d_omega: Vector = ctx
        .d(2, &omega.to_coords(2))
        .iter()
        .map(|x| x * &Gauss::i())
        .collect();
    let rows: Vec<Vector> = ann
        .basis()
        .iter()
        .map(|a| cols.iter().map(|c| crate::linalg::dot(a, c)).collect())
        .collect();
    let rhs: Vector = ann
        .basis()
        .iter()
        .map(|a| -crate::linalg::dot(a, &d_omega))
        .collect();
    if rows.is_empty() {
        return Ok(Some(DirectWitness {
            omega,
            b: Form::zero(n),
        }));
    }
    let (rrows, rrhs) = realify(&rows, &rhs);
    let Some(x) = solve_affine(&rrows, &rrhs)? else {
        return Ok(None);
    };
    let b = Form::from_coords(n, 2, &x[..n2]);
    let f = crate::linalg::combine(&x[n2..], &real_f, n2);
    let omega = &omega + &Form::from_coords(n, 2, &f);
    Ok(Some(DirectWitness { omega, b }))
}

/// `∂¹(i[[ω]₀]₁ + [[B]₀]₁)`, which vanishes for every direct witness.
pub fn witness_del(ctx: &SpectralContext, w: &DirectWitness) -> Result<PageClass> {
    let total = &w.omega.scale(&Gauss::i()) + &w.b;
    let class = ctx.reduce_class(&total.to_coords(2), 1, 0, 0, 2)?;
    Ok(ctx.split_d1(&class)?.0)
}

/// `(K ⊕ Ann K)^{iω+B} = {(X, ψ + ι_X(iω+B))}`.
pub fn build_gcs(pair: &TransversalPair, omega: &Form, b: &Form) -> Result<OmniSubspace> {
    if !omega.is_real() || !b.is_real() {
        return Err(Error::input("ω and B must be real"));
    }
    let n = pair.ext().dim();
    let field = &omega.scale(&Gauss::i()) + b;
    let mut gens: Vec<OmniVector> = pair
        .k()
        .basis()
        .iter()
        .map(|x| OmniVector::new(x.clone(), form_flat(&field, x)))
        .collect();
    gens.extend(
        pair.k()
            .annihilator()
            .basis()
            .iter()
            .map(|a| OmniVector::new(vec![Gauss::zero(); n], a.clone())),
    );
    OmniSubspace::span(Field::Complex, n, &gens)
}

/// All obstruction computations for a pair, with the agreement flag.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub primary_zero: bool,
    pub primary: PrimaryObstruction,
    /// `None` when the primary obstruction is nonzero.
    pub secondary: Option<Option<Form>>,
    pub direct: Option<DirectWitness>,
    pub witness_del_zero: Option<bool>,
    pub built_gcs: Option<bool>,
}

impl ObstructionReport {
    pub fn secondary_feasible(&self) -> bool {
        matches!(self.secondary, Some(Some(_)))
    }

    pub fn spectral_feasible(&self) -> bool {
        self.primary_zero && self.secondary_feasible()
    }

    pub fn direct_feasible(&self) -> bool {
        self.direct.is_some()
    }

    pub fn agreement(&self) -> bool {
        self.spectral_feasible() == self.direct_feasible()
    }
}

/// Which criteria to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Direct,
    Spectral,
    Both,
}

pub fn obstruction_report(ctx: &SpectralContext) -> Result<ObstructionReport> {
    let primary = primary_obstruction(ctx)?;
    let primary_zero = primary.is_zero();
    let secondary = if primary_zero {
        Some(secondary_obstruction(ctx)?)
    } else {
        None
    };
    let direct = direct_feasibility(ctx)?;
    let (witness_del_zero, built_gcs) = match &direct {
        Some(w) => {
            let del = witness_del(ctx, w)?.is_zero();
            let l = build_gcs(ctx.pair(), &w.omega, &w.b)?;
            let ok = classify_subspace(ctx.ext(), &l, &Twist::zero(ctx.ext()))?.is_gcs();
            (Some(del), Some(ok))
        }
        None => (None, None),
    };
    Ok(ObstructionReport {
        primary_zero,
        primary,
        secondary,
        direct,
        witness_del_zero,
        built_gcs,
    })
}

pub fn obstruction_certificate(ctx: &SpectralContext, method: Method) -> Result<Certificate> {
    let ext = ctx.ext();
    let space = ext.space();
    let form_json = |f: &Form| io::element_to_json(space, f);
    let n = ctx.dim();
    let mut witness = serde_json::Map::new();
    let mut spectral_ok = None;
    let mut direct_ok = None;
    if matches!(method, Method::Spectral | Method::Both) {
        let primary = primary_obstruction(ctx)?;
        let class = &primary.obstruction;
        witness.insert("omega".into(), form_json(&primary.omega));
        witness.insert("inverse_class_zero".into(), json!(primary.class_is_zero));
        witness.insert("primary_zero".into(), json!(primary.is_zero()));
        witness.insert(
            "primary_representative".into(),
            form_json(&Form::from_coords(
                n,
                class.component.degree(),
                &class.canonical(),
            )),
        );
        let secondary = if primary.is_zero() {
            secondary_obstruction(ctx)?
        } else {
            None
        };
        witness.insert("secondary_feasible".into(), json!(secondary.is_some()));
        witness.insert(
            "secondary_b".into(),
            secondary.as_ref().map(form_json).unwrap_or(Value::Null),
        );
        spectral_ok = Some(primary.is_zero() && secondary.is_some());
    }
    if matches!(method, Method::Direct | Method::Both) {
        let direct = direct_feasibility(ctx)?;
        witness.insert("direct_feasible".into(), json!(direct.is_some()));
        if let Some(w) = &direct {
            witness.insert("direct_omega".into(), form_json(&w.omega));
            witness.insert("direct_b".into(), form_json(&w.b));
            witness.insert(
                "witness_del_zero".into(),
                json!(witness_del(ctx, w)?.is_zero()),
            );
        }
        direct_ok = Some(direct.is_some());
    }
    let verdict = match (spectral_ok, direct_ok) {
        (Some(a), Some(b)) => {
            witness.insert("agreement".into(), json!(a == b));
            if a == b {
                Verdict::from_bool(a)
            } else {
                Verdict::Inconclusive
            }
        }
        (Some(a), None) | (None, Some(a)) => Verdict::from_bool(a),
        (None, None) => Verdict::Inconclusive,
    };
    Ok(Certificate::new(
        "obstruction",
        verdict,
        Value::Object(witness),
        &ctx.pair().to_json(),
    ))
}

/// Dimensions of all split and total page components up to form degree `max_degree`.
pub fn page_table(ctx: &SpectralContext, max_degree: usize) -> Result<Value> {
    let mut rows = Vec::new();
    for m in 0..=max_degree.min(ctx.dim()) {
        for p in 0..=m {
            let q = m - p;
            for r in 0..=1u8 {
                let total = ctx.page_total(r, p, q)?;
                let mut split = Vec::new();
                for i in 0..=p {
                    let c = ctx.page(r, i, p - i, q)?;
                    split.push(json!({ "i": i, "j": p - i, "dim": c.dim() }));
                }
                rows.push(json!({ "r": r, "p": p, "q": q, "dim": total.dim(), "split": split }));
            }
        }
    }
    Ok(json!({ "pages": rows }))
}

/// `(K ⊕ Ann K)^{iω+B}` for a direct witness, as an omni subspace and its generators.
pub fn build_from_witness(ctx: &SpectralContext) -> Result<Option<(DirectWitness, OmniSubspace)>> {
    match direct_feasibility(ctx)? {
        Some(w) => {
            let l = build_gcs(ctx.pair(), &w.omega, &w.b)?;
            Ok(Some((w, l)))
        }
        None => Ok(None),
    }
}

/// A failed instance of a structural identity, with the indices it was checked at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: &'static str,
    pub m: usize,
    pub indices: Vec<i64>,
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
    /// Failures of the complement relation, whose bracketing is ambiguous; never fatal.
    pub warnings: Vec<Violation>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, ok: bool, relation: &'static str, m: usize, indices: Vec<i64>) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                relation,
                m,
                indices,
            });
        }
    }
}

fn span_all(ambient: usize, spaces: impl IntoIterator<Item = Subspace>) -> Subspace {
    spaces
        .into_iter()
        .fold(Subspace::zero(Field::Complex, ambient), |acc, s| {
            acc.sum(&s).expect("same ambient")
        })
}

/// Relations between the filtrations, for every degree and every index up to `m+1`:
///
/// - `G_n ⊆ F_n`;
/// - `G_j ∩ Ḡ_i ⊆ F_{i+j}`;
/// - `F_n` is spanned by the `G_j ∩ Ḡ_i` with `i+j = n`;
/// - `F_{i+j+s} ∩ G_j ∩ Ḡ_i` is spanned by the `G_{j+k} ∩ Ḡ_{i+l}` with `k+l = s`;
/// - `D` preserves `F`, `G`, `Ḡ`, and `D(G_j ∩ Ḡ_i) ⊆ G_j ∩ Ḡ_i + F_{i+j+1}`.
///
/// The complement relation `G_j ∩ Ḡ_i ∩ (Σ_{(k,l)≠(i,j)} G_l ∩ Ḡ_k + F_{n+1}) ⊆ F_{n+1}`
/// is checked literally and only reported in `warnings`.
pub fn filtration_relations(ctx: &SpectralContext) -> RelationReport {
    let mut rep = RelationReport::default();
    let dim = ctx.dim();
    for m in 0..=dim {
        let ambient = binomial(dim, m);
        let top = m as i64 + 1;
        for n in 0..=top {
            rep.record(ctx.f(n, m).contains_subspace(&ctx.g(n, m)), "G in F", m, vec![n]);
            let pieces: Vec<Subspace> = (0..=n).map(|i| ctx.bigraded(i, n - i, m)).collect();
            rep.record(
                span_all(ambient, pieces.clone()) == ctx.f(n, m),
                "span of bigraded",
                m,
                vec![n],
            );
            for i in 0..=n {
                let j = n - i;
                let w = &pieces[i as usize];
                rep.record(ctx.f(n, m).contains_subspace(w), "bigraded in F", m, vec![i, j]);
                let others = span_all(
                    ambient,
                    (0..=n)
                        .filter(|&k| k != i)
                        .map(|k| pieces[k as usize].clone()),
                );
                let lhs = w
                    .intersect(&others.sum(&ctx.f(n + 1, m)).expect("same ambient"))
                    .expect("same ambient");
                rep.checked += 1;
                if !ctx.f(n + 1, m).contains_subspace(&lhs) {
                    rep.warnings.push(Violation {
                        relation: "complement",
                        m,
                        indices: vec![i, j],
                    });
                }
                for step in 0..=top - n {
                    let lhs = ctx.f(n + step, m).intersect(w).expect("same ambient");
                    let rhs = span_all(
                        ambient,
                        (0..=step).map(|k| ctx.bigraded(i + step - k, j + k, m)),
                    );
                    rep.record(lhs == rhs, "bigraded filtration", m, vec![i, j, step]);
                }
                if m < dim {
                    let image = ctx.d_image(m, w);
                    let target = ctx
                        .bigraded(i, j, m + 1)
                        .sum(&ctx.f(n + 1, m + 1))
                        .expect("same ambient");
                    rep.record(
                        target.contains_subspace(&image),
                        "page-0 differential",
                        m,
                        vec![i, j],
                    );
                }
            }
            if m < dim {
                for (kind, name) in [
                    (FiltrationKind::F, "D-stable F"),
                    (FiltrationKind::G, "D-stable G"),
                    (FiltrationKind::GBar, "D-stable Gbar"),
                ] {
                    let image = ctx.d_image(m, &ctx.filtration_space(kind, n, m));
                    rep.record(
                        ctx.filtration_space(kind, n, m + 1)
                            .contains_subspace(&image),
                        name,
                        m,
                        vec![n],
                    );
                }
            }
        }
    }
    rep
}

/// `(∂¹)² = (∂̄¹)² = ∂¹∂̄¹ + ∂̄¹∂¹ = 0` on every basis class of every split page-1
/// component of form degree at most `max_degree`.
pub fn split_identities(ctx: &SpectralContext, max_degree: usize) -> Result<RelationReport> {
    let mut rep = RelationReport::default();
    let top = max_degree.min(ctx.dim().saturating_sub(2));
    for m in 0..=top {
        for p in 0..=m {
            for i in 0..=p {
                let j = p - i;
                let component = ctx.page(1, i, j, m - p)?;
                for v in component.representatives().to_vec() {
                    let class = ctx.class_in(component.clone(), &v)?;
                    let idx = vec![i as i64, j as i64, (m - p) as i64];
                    let (del, delbar) = ctx.split_d1(&class)?;
                    let (dd, d_delbar) = ctx.split_d1(&del)?;
                    let (delbar_d, bb) = ctx.split_d1(&delbar)?;
                    rep.record(dd.is_zero(), "del^2", m, idx.clone());
                    rep.record(bb.is_zero(), "delbar^2", m, idx.clone());
                    let mut sum = d_delbar.representative.clone();
                    crate::linalg::axpy(&mut sum, &Gauss::one(), &delbar_d.representative);
                    rep.record(
                        ctx.reduce_class(&sum, 1, i + 1, j + 1, m - p)?.is_zero(),
                        "del delbar + delbar del",
                        m,
                        idx,
                    );
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;
    use crate::scalar::{rat, Rational};
    use crate::structures::{transversal_pair, JacobiTensor};

    fn l53_pair() -> TransversalPair {
        let labels = (1..=5).map(|k| format!("e{k}")).collect();
        let mut a = vec![Rational::zero(); 5];
        a[2] = rat(1, 1);
        let mut b = vec![Rational::zero(); 5];
        b[3] = rat(1, 1);
        let alg = LieAlgebra::new("L5_3", labels, vec![((0, 1), a), ((0, 2), b)]).unwrap();
        let ext = alg.extend().unwrap();
        let j = &Multivector::term(6, &[2, 0], Gauss::one())
            + &Multivector::term(6, &[5, 3], Gauss::one());
        let j = JacobiTensor::new(&ext, j).unwrap();
        let mut g = vec![unit(6, 5), unit(6, 0), unit(6, 2), unit(6, 3)];
        let mut last = unit(6, 1);
        last[4] = Gauss::new(rat(0, 1), rat(-1, 1));
        g.push(last);
        let k = Subspace::span(Field::Complex, 6, g).unwrap();
        transversal_pair(&ext, &j, &k).unwrap()
    }

    #[test]
    fn boundary_conventions() {
        let ctx = SpectralContext::new(l53_pair()).unwrap();
        for m in 0..=6 {
            assert!(ctx.f(0, m).is_full());
            assert!(ctx.f(m as i64 + 1, m).is_zero());
            assert!(ctx.f(m as i64 + 3, m).is_zero());
        }
        assert_eq!(ctx.f(1, 2).dim(), 9);
        // F_{m+1}^m is the single-vector condition at the next index down
        assert_eq!(ctx.f(2, 2).dim(), 1);
    }

    #[test]
    fn l53_inverse_class_vanishes() {
        let ctx = SpectralContext::new(l53_pair()).unwrap();
        let (_, class) = ctx.inverse_class().unwrap();
        assert!(class.is_zero());
        let expected = &Form::term(6, &[0, 2], Gauss::one()) - &Form::term(6, &[5, 3], Gauss::one());
        let c0 = ctx.reduce_class(&expected.to_coords(2), 0, 0, 0, 2).unwrap();
        assert_eq!(c0.component.index, PageIndex::Split { i: 0, j: 0 });
        let c1 = ctx.reduce_class(&expected.to_coords(2), 1, 0, 0, 2).unwrap();
        assert!(c1.is_zero());
        let (a, b) = ctx.split_d1(&c1).unwrap();
        assert!(a.is_zero() && b.is_zero());
        assert!(primary_obstruction(&ctx).unwrap().is_zero());
        assert!(secondary_obstruction(&ctx).unwrap().is_some());
        let w = direct_feasibility(&ctx).unwrap().unwrap();
        let l = build_gcs(ctx.pair(), &w.omega, &w.b).unwrap();
        assert!(classify_subspace(ctx.ext(), &l, &Twist::zero(ctx.ext()))
            .unwrap()
            .is_gcs());
    }

    #[test]
    fn membership_errors_are_named() {
        let ctx = SpectralContext::new(l53_pair()).unwrap();
        // e² does not vanish on K̄, so it is outside Ḡ₁¹
        let f = Form::term(6, &[1], Gauss::one());
        let bad = ctx.reduce_class(&f.to_coords(1), 1, 1, 0, 0);
        assert!(bad.is_err());
    }

    #[test]
    fn relations_hold_on_l53() {
        let ctx = SpectralContext::new(l53_pair()).unwrap();
        let rel = filtration_relations(&ctx);
        assert!(rel.holds(), "{:?}", rel.violations);
        assert!(rel.checked > 100);
        let split = split_identities(&ctx, 4).unwrap();
        assert!(split.holds(), "{:?}", split.violations);
    }
}
