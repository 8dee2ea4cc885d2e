//! Weyl, Dirac, d'Alembert and Klein-Gordon operators: as field-valued maps
//! (so their output can be differentiated again) and as pointwise residuals.

use std::ops::{Add, Mul, Sub};

use crate::algebra::{pauli, Mat2C, SpacetimePoint, C2, C64};
use crate::error::Result;
use crate::fields::{check_regular, Axis, BispinorField, DiracSolutionChiral, Direction, ScalarField, Spinor2Field};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// `W = ∂_t − σ·∇` or `W̃ = ∂_t + σ·∇`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeylVariant {
    W,
    WTilde,
}

impl WeylVariant {
    pub fn opposite(self) -> Self {
        match self {
            WeylVariant::W => WeylVariant::WTilde,
            WeylVariant::WTilde => WeylVariant::W,
        }
    }

    fn sign(self) -> f64 {
        match self {
            WeylVariant::W => -1.0,
            WeylVariant::WTilde => 1.0,
        }
    }

    /// Directions `d[row][col]` with `(Op s)_row = Σ_col (d·∂) s_col`.
    fn stencil(self) -> [[Direction; 2]; 2] {
        let s = C64::new(self.sign(), 0.0);
        let dir = |t: C64, x: C64, y: C64, z: C64| Direction::new(t, x, y, z);
        [
            [dir(ONE, ZERO, ZERO, s), dir(ZERO, s, -s * I, ZERO)],
            [dir(ZERO, s, s * I, ZERO), dir(ONE, ZERO, ZERO, -s)],
        ]
    }
}

/// `D = iγ^μ∂_μ − m` or `D* = iγ^μ∂_μ + m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiracVariant {
    D,
    DStar,
}

impl DiracVariant {
    fn mass_sign(self) -> f64 {
        match self {
            DiracVariant::D => -1.0,
            DiracVariant::DStar => 1.0,
        }
    }
}

/// The field `Op s` for a Weyl operator.
pub fn weyl_field(s: &Spinor2Field, variant: WeylVariant) -> Spinor2Field {
    let st = variant.stencil();
    let row = |r: usize| {
        ScalarField::linear_combination(vec![(ONE, s.c1.derivative(st[r][0])), (ONE, s.c2.derivative(st[r][1]))])
    };
    Spinor2Field::new(row(0), row(1))
}

fn weyl_from_gradients(g: [&[C64; 4]; 2], variant: WeylVariant) -> C2 {
    let st = variant.stencil();
    let dot = |d: &Direction, grad: &[C64; 4]| -> C64 { (0..4).map(|mu| d.0[mu] * grad[mu]).sum() };
    [0, 1].map(|r| dot(&st[r][0], g[0]) + dot(&st[r][1], g[1]))
}

/// `(∂_t ∓ σ·∇)s` at `p`.
pub fn apply_weyl(s: &Spinor2Field, p: &SpacetimePoint, variant: WeylVariant) -> Result<C2> {
    check_regular(&s.singular_set(), p)?;
    let g1 = s.c1.gradient(p);
    let g2 = s.c2.gradient(p);
    Ok(weyl_from_gradients([&g1, &g2], variant))
}

/// Values and gradients of the four components of a chiral solution.
struct ChiralSample {
    values: [C64; 4],
    grads: [[C64; 4]; 4],
}

impl ChiralSample {
    fn new(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<Self> {
        sol.check_regular(p)?;
        let comps = sol.components();
        Ok(Self {
            values: comps.map(|f| f.eval(p)),
            grads: comps.map(|f| f.gradient(p)),
        })
    }

    fn wa(&self) -> C2 {
        weyl_from_gradients([&self.grads[0], &self.grads[1]], WeylVariant::W)
    }

    fn wtb(&self) -> C2 {
        weyl_from_gradients([&self.grads[2], &self.grads[3]], WeylVariant::WTilde)
    }
}

/// Residuals `(W a + i m b, W̃ b + i m a)`.
pub fn dirac_residual_chiral(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<(C2, C2)> {
    dirac_residual_chiral_scaled(sol, p).map(|(r, _)| r)
}

/// Residuals together with the magnitude of the largest term entering them:
/// `max(m|a|, m|b|, |∂_μ c|)` over components `c`.
pub fn dirac_residual_chiral_scaled(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<((C2, C2), f64)> {
    let s = ChiralSample::new(sol, p)?;
    let im = I * sol.m;
    let [a1, a2, b1, b2] = s.values;
    let wa = s.wa();
    let wtb = s.wtb();
    let r1 = [wa[0] + im * b1, wa[1] + im * b2];
    let r2 = [wtb[0] + im * a1, wtb[1] + im * a2];
    let mut scale = s.values.iter().map(|v| sol.m * v.norm()).fold(0.0, f64::max);
    for g in &s.grads {
        for d in g {
            scale = scale.max(d.norm());
        }
    }
    Ok(((r1, r2), scale))
}

/// `(Δ − ∂_t² − m²) f` at `p`.
pub fn kg_residual(f: &ScalarField, m: f64, p: &SpacetimePoint) -> Result<C64> {
    kg_residual_scaled(f, m, p).map(|(r, _)| r)
}

/// KG residual and its term scale `max(Σ|∂_i²f|, |∂_t²f|, m²|f|)`.
pub fn kg_residual_scaled(f: &ScalarField, m: f64, p: &SpacetimePoint) -> Result<(C64, f64)> {
    f.check_regular(p)?;
    let lap: Vec<C64> = Axis::SPACE.iter().map(|&a| f.d2(p, a, a)).collect();
    let tt = f.d2(p, Axis::T, Axis::T);
    let v = f.eval(p);
    let res = lap.iter().sum::<C64>() - tt - v * (m * m);
    let scale = lap
        .iter()
        .map(|c| c.norm())
        .sum::<f64>()
        .max(tt.norm())
        .max(m * m * v.norm());
    Ok((res, scale))
}

/// `□f = (Δ − ∂_t²) f`.
pub fn dalembert_residual(f: &ScalarField, p: &SpacetimePoint) -> Result<C64> {
    kg_residual(f, 0.0, p)
}

/// The field `(Δ − ∂_t²) f`.
pub fn dalembert_field(f: &ScalarField) -> ScalarField {
    let second = |a: Axis| f.derivative_axis(a).derivative_axis(a);
    ScalarField::linear_combination(vec![
        (ONE, second(Axis::X)),
        (ONE, second(Axis::Y)),
        (ONE, second(Axis::Z)),
        (-ONE, second(Axis::T)),
    ])
}

/// Dense 4×4 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4C {
    pub m: [[C64; 4]; 4],
}

impl Mat4C {
    pub fn zero() -> Self {
        Self { m: [[ZERO; 4]; 4] }
    }

    pub fn identity() -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            out.m[i][i] = ONE;
        }
        out
    }

    /// `[[a, b], [c, d]]` in 2×2 blocks.
    pub fn from_blocks(a: &Mat2C, b: &Mat2C, c: &Mat2C, d: &Mat2C) -> Self {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = a.m[i][j];
                out.m[i][j + 2] = b.m[i][j];
                out.m[i + 2][j] = c.m[i][j];
                out.m[i + 2][j + 2] = d.m[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            m: self.m.map(|row| row.map(|v| v * c)),
        }
    }

    pub fn apply(&self, v: &[C64; 4]) -> [C64; 4] {
        [0, 1, 2, 3].map(|i| (0..4).map(|j| self.m[i][j] * v[j]).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

impl Mul for Mat4C {
    type Output = Mat4C;
    fn mul(self, rhs: Mat4C) -> Mat4C {
        let mut out = Mat4C::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] = (0..4).map(|k| self.m[i][k] * rhs.m[k][j]).sum();
            }
        }
        out
    }
}

impl Add for Mat4C {
    type Output = Mat4C;
    fn add(self, rhs: Mat4C) -> Mat4C {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.m[i][j] += rhs.m[i][j];
            }
        }
        out
    }
}

impl Sub for Mat4C {
    type Output = Mat4C;
    fn sub(self, rhs: Mat4C) -> Mat4C {
        self + rhs.scale(-ONE)
    }
}

/// Dirac matrices `γ⁰ = diag(I, −I)`, `γ^i = [[0, −σ_i], [σ_i, 0]]` and
/// `γ⁵ = iγ⁰γ¹γ²γ³`. With this sign of `γ^i` the half-sum `a = (κ + χ)/2`
/// satisfies `W a = −i m b`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaBasis {
    pub gamma: [Mat4C; 4],
    pub gamma5: Mat4C,
}

impl GammaBasis {
    pub fn dirac() -> Self {
        let id = Mat2C::identity();
        let zero = Mat2C::zero();
        let g0 = Mat4C::from_blocks(&id, &zero, &zero, &id.scale(-ONE));
        let gi = |i: usize| {
            let s = pauli(i).expect("index in 1..=3");
            Mat4C::from_blocks(&zero, &s.scale(-ONE), &s, &zero)
        };
        let gamma = [g0, gi(1), gi(2), gi(3)];
        let gamma5 = (gamma[0] * gamma[1] * gamma[2] * gamma[3]).scale(I);
        Self { gamma, gamma5 }
    }

    /// `max |γ^μγ^ν + γ^νγ^μ − 2η^{μν}|`.
    pub fn anticommutator_defect(&self) -> f64 {
        let eta = [1.0, -1.0, -1.0, -1.0];
        let mut worst: f64 = 0.0;
        for (mu, eta_mu) in eta.iter().enumerate() {
            for nu in 0..4 {
                let ac = self.gamma[mu] * self.gamma[nu] + self.gamma[nu] * self.gamma[mu];
                let expect = if mu == nu {
                    Mat4C::identity().scale(C64::new(2.0 * eta_mu, 0.0))
                } else {
                    Mat4C::zero()
                };
                worst = worst.max((ac - expect).max_abs());
            }
        }
        worst
    }
}

/// `(i γ^μ ∂_μ ± m) ψ` as fields.
pub fn dirac_field_4d(psi: &[ScalarField; 4], m: f64, variant: DiracVariant) -> [ScalarField; 4] {
    let g = GammaBasis::dirac();
    [0, 1, 2, 3].map(|row| {
        let mut terms = vec![(C64::new(variant.mass_sign() * m, 0.0), psi[row].clone())];
        for (mu, axis) in Axis::ALL.iter().enumerate() {
            for (col, f) in psi.iter().enumerate() {
                let c = I * g.gamma[mu].m[row][col];
                if c != ZERO {
                    terms.push((c, f.derivative_axis(*axis)));
                }
            }
        }
        ScalarField::linear_combination(terms)
    })
}

fn dirac_from_gradients(values: &[C64; 4], grads: &[[C64; 4]; 4], m: f64, variant: DiracVariant) -> [C64; 4] {
    let g = GammaBasis::dirac();
    [0, 1, 2, 3].map(|row| {
        let mut acc = values[row] * (variant.mass_sign() * m);
        for (mu, gamma) in g.gamma.iter().enumerate() {
            for (col, grad) in grads.iter().enumerate() {
                acc += I * gamma.m[row][col] * grad[mu];
            }
        }
        acc
    })
}

/// `Dψ` or `D*ψ` at `p`.
pub fn apply_dirac_4d(psi: &BispinorField, p: &SpacetimePoint, variant: DiracVariant) -> Result<[C64; 4]> {
    psi.check_regular(p)?;
    let values = psi.eval(p);
    let grads = [0, 1, 2, 3].map(|i| psi.psi[i].gradient(p));
    Ok(dirac_from_gradients(&values, &grads, psi.m, variant))
}

/// `D(D*Φ) − (□ − m²)Φ` at `p`; vanishes for any smooth quadruple.
pub fn factorization_check(phi: &[ScalarField; 4], m: f64, p: &SpacetimePoint) -> Result<[C64; 4]> {
    for f in phi {
        f.check_regular(p)?;
    }
    let dstar = dirac_field_4d(phi, m, DiracVariant::DStar);
    let values = [0, 1, 2, 3].map(|i| dstar[i].eval(p));
    let grads = [0, 1, 2, 3].map(|i| dstar[i].gradient(p));
    let ddstar = dirac_from_gradients(&values, &grads, m, DiracVariant::D);
    let mut out = [ZERO; 4];
    for i in 0..4 {
        out[i] = ddstar[i] - kg_residual(&phi[i], m, p)?;
    }
    Ok(out)
}

/// `a = (κ + χ)/2`, `b = (κ − χ)/2`.
pub fn chiral_from_bispinor(psi: &BispinorField) -> DiracSolutionChiral {
    let half = C64::new(0.5, 0.0);
    let mix = |i: usize, sign: f64| {
        ScalarField::linear_combination(vec![(half, psi.psi[i].clone()), (half * sign, psi.psi[i + 2].clone())])
    };
    DiracSolutionChiral {
        a: Spinor2Field::new(mix(0, 1.0), mix(1, 1.0)),
        b: Spinor2Field::new(mix(0, -1.0), mix(1, -1.0)),
        m: psi.m,
    }
}

/// `κ = a + b`, `χ = a − b`.
pub fn bispinor_from_chiral(sol: &DiracSolutionChiral) -> BispinorField {
    BispinorField {
        psi: [
            sol.a.c1.plus(&sol.b.c1),
            sol.a.c2.plus(&sol.b.c2),
            sol.a.c1.minus(&sol.b.c1),
            sol.a.c2.minus(&sol.b.c2),
        ],
        m: sol.m,
    }
}

/// The 4D residual `Dψ` expressed through the chiral residuals `(r₁, r₂)`:
/// `Dψ = i(r₁ + r₂, r₂ − r₁)` in (upper, lower) blocks.
pub fn dirac_4d_from_chiral_residual(r1: &C2, r2: &C2) -> [C64; 4] {
    [
        I * (r1[0] + r2[0]),
        I * (r1[1] + r2[1]),
        I * (r2[0] - r1[0]),
        I * (r2[1] - r1[1]),
    ]
}
