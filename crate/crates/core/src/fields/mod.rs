//! Complex scalar fields on Minkowski space with exact derivatives of any
//! order, and the spinor containers built from them.
//!
//! A field answers one question: given a point and a list of (possibly
//! complex) direction vectors `v₁ … v_k`, return the [`Jet`] whose
//! coefficient at mask `S` is `Π_{i∈S}(v_i·∂) f`. Closed-form fields compute
//! that jet by evaluating their formula on seeded coordinates. Derived fields
//! (derivatives, linear combinations, pullbacks along affine maps) forward
//! the request to their inputs with the directions adjusted, so arbitrarily
//! deep constructions stay exact.

mod catalog;
mod fd;
mod singular;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::{Mat2C, SpacetimePoint, C2};
use crate::error::{Error, Result};
use crate::jet::Jet;

pub use catalog::{
    broglie_kg, chain_yukawa_2, coulomb_kg, plane_wave_kg, spinor_broglie, stereo_coulomb_static, stereo_kg, yukawa,
    yukawa_spinor, Coords, Sign,
};
pub use fd::{fd_oracle, nested_central_difference};
pub use singular::{AffineMap, SingularPart, SingularSet};

/// Points closer than this to a declared singular set are rejected by
/// pointwise operators.
pub const SINGULAR_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    T,
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 4] = [Axis::T, Axis::X, Axis::Y, Axis::Z];
    pub const SPACE: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::T => 0,
            Axis::X => 1,
            Axis::Y => 2,
            Axis::Z => 3,
        }
    }

    pub fn direction(self) -> Direction {
        let mut v = [Complex64::new(0.0, 0.0); 4];
        v[self.index()] = Complex64::new(1.0, 0.0);
        Direction(v)
    }
}

/// Complex tangent vector in (t, x, y, z) components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction(pub [Complex64; 4]);

impl Direction {
    pub fn new(t: Complex64, x: Complex64, y: Complex64, z: Complex64) -> Self {
        Self([t, x, y, z])
    }

    pub fn real(v: [f64; 4]) -> Self {
        Self(v.map(|c| Complex64::new(c, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self(self.0.map(|v| v * c))
    }

    fn mapped(&self, lin: &[[f64; 4]; 4]) -> Self {
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for (row, o) in out.iter_mut().enumerate() {
            *o = self.0.iter().zip(&lin[row]).map(|(c, l)| c * l).sum();
        }
        Self(out)
    }
}

/// Evaluation back end of a [`ScalarField`].
pub trait FieldFn: Send + Sync {
    /// Jet of mixed directional derivatives along `dirs` at `p`.
    fn jet(&self, p: &SpacetimePoint, dirs: &[Direction]) -> Jet;

    fn singular_set(&self) -> SingularSet {
        SingularSet::none()
    }
}

/// Shared, immutable handle to a complex scalar field.
#[derive(Clone)]
pub struct ScalarField {
    inner: Arc<dyn FieldFn>,
}

impl fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarField")
            .field("singular_set", &self.singular_set())
            .finish()
    }
}

impl ScalarField {
    pub fn from_fn(f: impl FieldFn + 'static) -> Self {
        Self { inner: Arc::new(f) }
    }

    /// Field given by a formula over seeded coordinates.
    pub fn closed_form(singular: SingularSet, formula: impl Fn(&Coords) -> Jet + Send + Sync + 'static) -> Self {
        Self::from_fn(ClosedForm {
            formula: Box::new(formula),
            singular,
        })
    }

    /// Field known only through its values; derivatives fall back to nested
    /// central differences with step `1e−4·(1 + |p|)`, accurate to roughly
    /// `1e−8 / h^{k−1}` for order `k`.
    pub fn from_values(
        singular: SingularSet,
        eval: impl Fn(&SpacetimePoint) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        Self::from_fn(ValuesOnly {
            eval: Box::new(eval),
            singular,
        })
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_fn(Constant(c))
    }

    pub fn zero() -> Self {
        Self::constant(Complex64::new(0.0, 0.0))
    }

    pub fn jet(&self, p: &SpacetimePoint, dirs: &[Direction]) -> Jet {
        self.inner.jet(p, dirs)
    }

    pub fn singular_set(&self) -> SingularSet {
        self.inner.singular_set()
    }

    pub fn eval(&self, p: &SpacetimePoint) -> Complex64 {
        self.jet(p, &[]).value()
    }

    /// Mixed directional derivative along every direction in `dirs`.
    pub fn partial(&self, p: &SpacetimePoint, dirs: &[Direction]) -> Complex64 {
        self.jet(p, dirs).top()
    }

    pub fn d1(&self, p: &SpacetimePoint, a: Axis) -> Complex64 {
        self.partial(p, &[a.direction()])
    }

    pub fn d2(&self, p: &SpacetimePoint, a: Axis, b: Axis) -> Complex64 {
        self.partial(p, &[a.direction(), b.direction()])
    }

    pub fn gradient(&self, p: &SpacetimePoint) -> [Complex64; 4] {
        Axis::ALL.map(|a| self.d1(p, a))
    }

    /// The field `v·∂ f`.
    pub fn derivative(&self, dir: Direction) -> ScalarField {
        ScalarField::from_fn(Derivative {
            inner: self.clone(),
            dir,
        })
    }

    pub fn derivative_axis(&self, a: Axis) -> ScalarField {
        self.derivative(a.direction())
    }

    /// `Σ cᵢ fᵢ`; zero coefficients are dropped.
    pub fn linear_combination(terms: Vec<(Complex64, ScalarField)>) -> ScalarField {
        let terms: Vec<_> = terms
            .into_iter()
            .filter(|(c, _)| *c != Complex64::new(0.0, 0.0))
            .collect();
        if terms.is_empty() {
            return ScalarField::zero();
        }
        ScalarField::from_fn(LinearCombination { terms })
    }

    pub fn scaled(&self, c: Complex64) -> ScalarField {
        Self::linear_combination(vec![(c, self.clone())])
    }

    pub fn plus(&self, other: &ScalarField) -> ScalarField {
        let one = Complex64::new(1.0, 0.0);
        Self::linear_combination(vec![(one, self.clone()), (one, other.clone())])
    }

    pub fn minus(&self, other: &ScalarField) -> ScalarField {
        Self::linear_combination(vec![
            (Complex64::new(1.0, 0.0), self.clone()),
            (Complex64::new(-1.0, 0.0), other.clone()),
        ])
    }

    /// `Y ↦ f(map(Y))`.
    pub fn pull_back(&self, map: AffineMap) -> ScalarField {
        ScalarField::from_fn(PullBack {
            inner: self.clone(),
            map,
        })
    }

    /// Errors when `p` is within [`SINGULAR_EPS`] of the singular set.
    pub fn check_regular(&self, p: &SpacetimePoint) -> Result<()> {
        check_regular(&self.singular_set(), p)
    }
}

pub(crate) fn check_regular(set: &SingularSet, p: &SpacetimePoint) -> Result<()> {
    if set.distance(p) <= SINGULAR_EPS || !p.is_finite() {
        Err(Error::SingularPoint {
            t: p.t,
            x: p.x,
            y: p.y,
            z: p.z,
        })
    } else {
        Ok(())
    }
}

struct ClosedForm {
    formula: Box<dyn Fn(&Coords) -> Jet + Send + Sync>,
    singular: SingularSet,
}

impl FieldFn for ClosedForm {
    fn jet(&self, p: &SpacetimePoint, dirs: &[Direction]) -> Jet {
        (self.formula)(&Coords::seed(p, dirs))
    }

    fn singular_set(&self) -> SingularSet {
        self.singular.clone()
    }
}

struct Constant(Complex64);

impl FieldFn for Constant {
    fn jet(&self, _p: &SpacetimePoint, dirs: &[Direction]) -> Jet {
        Jet::constant(dirs.len(), self.0)
    }
}

struct Derivative {
    inner: ScalarField,
    dir: Direction,
}

impl FieldFn for Derivative {
    fn jet(&self, p: &SpacetimePoint, dirs: &[Direction]) -> Jet {
        let mut extended = Vec::with_capacity(dirs.len() + 1);
        extended.extend_from_slice(dirs);
        extended.push(self.dir);
        self.inner.jet(p, &extended).differentiate_last()
    }

    fn singular_set(&self) -> SingularSet {
        self.inner.singular_set()
    }
}

struct LinearCombination {
    terms: Vec<(Complex64, ScalarField)>,
}

impl FieldFn for LinearCombination {
    fn jet(&self, p: &SpacetimePoint, dirs: &[Direction]) -> Jet {
        let mut out = Jet::zero(dirs.len());
        for (c, f) in &self.terms {
            out.add_scaled(&f.jet(p, dirs), *c);
        }
        out
    }

    fn singular_set(&self) -> SingularSet {
        SingularSet::union(self.terms.iter().map(|(_, f)| f.singular_set()))
    }
}

struct PullBack {
    inner: ScalarField,
    map: AffineMap,
}

impl FieldFn for PullBack {
    fn jet(&self, p: &SpacetimePoint, dirs: &[Direction]) -> Jet {
        let q = self.map.apply(p);
        let mapped: Vec<Direction> = dirs.iter().map(|d| d.mapped(&self.map.lin)).collect();
        self.inner.jet(&q, &mapped)
    }

    fn singular_set(&self) -> SingularSet {
        self.inner.singular_set().pulled_back(self.map)
    }
}

struct ValuesOnly {
    eval: Box<dyn Fn(&SpacetimePoint) -> Complex64 + Send + Sync>,
    singular: SingularSet,
}

impl FieldFn for ValuesOnly {
    fn jet(&self, p: &SpacetimePoint, dirs: &[Direction]) -> Jet {
        let h = 1e-4 * (1.0 + p.to_array().iter().map(|v| v * v).sum::<f64>().sqrt());
        let coeffs = (0..1usize << dirs.len())
            .map(|mask| {
                let sub: Vec<Direction> = (0..dirs.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| dirs[i])
                    .collect();
                nested_central_difference(&*self.eval, p, &sub, h)
            })
            .collect();
        Jet::from_coeffs(coeffs)
    }

    fn singular_set(&self) -> SingularSet {
        self.singular.clone()
    }
}

/// Two-component column of scalar fields.
#[derive(Debug, Clone)]
pub struct Spinor2Field {
    pub c1: ScalarField,
    pub c2: ScalarField,
}

impl Spinor2Field {
    pub fn new(c1: ScalarField, c2: ScalarField) -> Self {
        Self { c1, c2 }
    }

    pub fn zero() -> Self {
        Self::new(ScalarField::zero(), ScalarField::zero())
    }

    /// `(0, f)`.
    pub fn lower(f: ScalarField) -> Self {
        Self::new(ScalarField::zero(), f)
    }

    /// `(f, 0)`.
    pub fn upper(f: ScalarField) -> Self {
        Self::new(f, ScalarField::zero())
    }

    pub fn components(&self) -> [&ScalarField; 2] {
        [&self.c1, &self.c2]
    }

    pub fn eval(&self, p: &SpacetimePoint) -> C2 {
        [self.c1.eval(p), self.c2.eval(p)]
    }

    /// Constant matrix acting on the column.
    pub fn mix(&self, m: &Mat2C) -> Spinor2Field {
        let row = |r: usize| {
            ScalarField::linear_combination(vec![(m.m[r][0], self.c1.clone()), (m.m[r][1], self.c2.clone())])
        };
        Spinor2Field::new(row(0), row(1))
    }

    pub fn scaled(&self, c: Complex64) -> Spinor2Field {
        Spinor2Field::new(self.c1.scaled(c), self.c2.scaled(c))
    }

    pub fn plus(&self, other: &Spinor2Field) -> Spinor2Field {
        Spinor2Field::new(self.c1.plus(&other.c1), self.c2.plus(&other.c2))
    }

    pub fn minus(&self, other: &Spinor2Field) -> Spinor2Field {
        Spinor2Field::new(self.c1.minus(&other.c1), self.c2.minus(&other.c2))
    }

    pub fn pull_back(&self, map: AffineMap) -> Spinor2Field {
        Spinor2Field::new(self.c1.pull_back(map), self.c2.pull_back(map))
    }

    pub fn singular_set(&self) -> SingularSet {
        SingularSet::union([self.c1.singular_set(), self.c2.singular_set()])
    }
}

/// A Dirac field in the chiral splitting: right spinor `a`, left spinor `b`
/// and mass `m`.
#[derive(Debug, Clone)]
pub struct DiracSolutionChiral {
    pub a: Spinor2Field,
    pub b: Spinor2Field,
    pub m: f64,
}

impl DiracSolutionChiral {
    pub fn new(a: Spinor2Field, b: Spinor2Field, m: f64) -> Result<Self> {
        check_mass(m)?;
        Ok(Self { a, b, m })
    }

    pub fn zero(m: f64) -> Result<Self> {
        Self::new(Spinor2Field::zero(), Spinor2Field::zero(), m)
    }

    /// The four components `(a₁, a₂, b₁, b₂)`.
    pub fn components(&self) -> [&ScalarField; 4] {
        [&self.a.c1, &self.a.c2, &self.b.c1, &self.b.c2]
    }

    /// Values `(a₁, a₂, b₁, b₂)` at `p`.
    pub fn eval(&self, p: &SpacetimePoint) -> [Complex64; 4] {
        self.components().map(|f| f.eval(p))
    }

    pub fn singular_set(&self) -> SingularSet {
        SingularSet::union([self.a.singular_set(), self.b.singular_set()])
    }

    pub fn scaled(&self, c: Complex64) -> DiracSolutionChiral {
        DiracSolutionChiral {
            a: self.a.scaled(c),
            b: self.b.scaled(c),
            m: self.m,
        }
    }

    pub fn check_regular(&self, p: &SpacetimePoint) -> Result<()> {
        check_regular(&self.singular_set(), p)
    }
}

/// Four-component Dirac field `ψ = (κ, χ)` in the standard representation.
#[derive(Debug, Clone)]
pub struct BispinorField {
    pub psi: [ScalarField; 4],
    pub m: f64,
}

impl BispinorField {
    pub fn new(psi: [ScalarField; 4], m: f64) -> Result<Self> {
        check_mass(m)?;
        Ok(Self { psi, m })
    }

    pub fn eval(&self, p: &SpacetimePoint) -> [Complex64; 4] {
        [0, 1, 2, 3].map(|i| self.psi[i].eval(p))
    }

    pub fn singular_set(&self) -> SingularSet {
        SingularSet::union(self.psi.iter().map(|f| f.singular_set()))
    }

    pub fn check_regular(&self, p: &SpacetimePoint) -> Result<()> {
        check_regular(&self.singular_set(), p)
    }
}

pub(crate) fn check_mass(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidMass(m))
    }
}
