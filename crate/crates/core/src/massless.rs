//! Massless case: Weyl solutions from d'Alembert potentials, their gauge
//! freedom, the Coulomb-like solution and the self-duality predicate.
//!
//! Null coordinates are `u, v = t ± z`, `w = x − iy`, `w̄ = x + iy`, so
//! `∂_u = (∂_t + ∂_z)/2`, `∂_w = (∂_x + i∂_y)/2` and
//! `W̃ = 2[[∂_u, ∂_w̄], [∂_w, ∂_v]]`, `W = 2[[∂_v, −∂_w̄], [−∂_w, ∂_u]]`.
//! The null-coordinate wave operator `−∂_u∂_v + ∂_w∂_w̄` is one quarter of
//! `Δ − ∂_t²`.

use num_complex::Complex64;

use crate::algebra::{SpacetimePoint, C2};
use crate::error::{Error, Result};
use crate::fields::{check_regular, Direction, ScalarField, Sign, SingularSet, Spinor2Field};
use crate::operators::{apply_weyl, weyl_field, WeylVariant};
use crate::verify::{residual_stats, sample_points, PointResidual, ResidualReport, SampleConfig};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const HALF: Complex64 = Complex64::new(0.5, 0.0);

/// Derivative directions of the null coordinates.
pub mod null {
    use super::*;

    pub fn du() -> Direction {
        Direction::new(HALF, ZERO, ZERO, HALF)
    }

    pub fn dv() -> Direction {
        Direction::new(HALF, ZERO, ZERO, -HALF)
    }

    pub fn dw() -> Direction {
        Direction::new(ZERO, HALF, HALF * I, ZERO)
    }

    pub fn dw_bar() -> Direction {
        Direction::new(ZERO, HALF, -HALF * I, ZERO)
    }
}

/// A Weyl spinor stored as `ψ = (α, −β)`.
#[derive(Debug, Clone)]
pub struct WeylSolution {
    pub psi: Spinor2Field,
}

impl WeylSolution {
    pub fn from_alpha_beta(alpha: ScalarField, beta: ScalarField) -> Self {
        Self {
            psi: Spinor2Field::new(alpha, beta.scaled(-Complex64::new(1.0, 0.0))),
        }
    }

    pub fn alpha(&self) -> ScalarField {
        self.psi.c1.clone()
    }

    pub fn beta(&self) -> ScalarField {
        self.psi.c2.scaled(-Complex64::new(1.0, 0.0))
    }
}

/// Potentials `ζ = (ν, μ)`.
#[derive(Debug, Clone)]
pub struct PotentialRow {
    pub zeta: Spinor2Field,
}

/// Complexified electric and magnetic fields.
#[derive(Debug, Clone)]
pub struct ComplexEmField {
    pub e: [ScalarField; 3],
    pub h: [ScalarField; 3],
}

/// Checks `□f ≈ 0` at the fixed precondition sample.
pub fn check_dalembert(f: &ScalarField, what: &str) -> Result<()> {
    crate::generator::check_kg(f, 0.0, what).map_err(|e| match e {
        Error::Precondition { residual, .. } => Error::Precondition {
            what: what.to_string(),
            residual,
        },
        other => other,
    })
}

/// `W̃ψ`.
pub fn weyl_residual(ws: &WeylSolution, p: &SpacetimePoint) -> Result<C2> {
    apply_weyl(&ws.psi, p, WeylVariant::WTilde)
}

/// `(∂_uα − ∂_w̄β, ∂_wα − ∂_vβ)`; twice this equals [`weyl_residual`].
pub fn weyl_residual_null(ws: &WeylSolution, p: &SpacetimePoint) -> Result<C2> {
    check_regular(&ws.psi.singular_set(), p)?;
    let alpha = ws.alpha();
    let beta = ws.beta();
    Ok([
        alpha.partial(p, &[null::du()]) - beta.partial(p, &[null::dw_bar()]),
        alpha.partial(p, &[null::dw()]) - beta.partial(p, &[null::dv()]),
    ])
}

/// `(−∂_u∂_v + ∂_w∂_w̄) f`, one quarter of `(Δ − ∂_t²) f`.
pub fn dalembert_null(f: &ScalarField, p: &SpacetimePoint) -> Result<Complex64> {
    f.check_regular(p)?;
    Ok(f.partial(p, &[null::dw(), null::dw_bar()]) - f.partial(p, &[null::du(), null::dv()]))
}

/// `ψ = Wζ`.
pub fn weyl_from_potentials(pr: &PotentialRow) -> Result<WeylSolution> {
    check_dalembert(&pr.zeta.c1, "nu")?;
    check_dalembert(&pr.zeta.c2, "mu")?;
    Ok(WeylSolution {
        psi: weyl_field(&pr.zeta, WeylVariant::W),
    })
}

/// `α = ∂_w̄ μ`, `β = ∂_u μ`.
pub fn potentials_single(mu: &ScalarField) -> Result<(ScalarField, ScalarField)> {
    check_dalembert(mu, "mu")?;
    Ok((mu.derivative(null::dw_bar()), mu.derivative(null::du())))
}

/// `ζ ↦ ζ + W̃κ`.
pub fn weyl_gauge_shift(pr: &PotentialRow, kappa: &Spinor2Field) -> Result<PotentialRow> {
    check_dalembert(&kappa.c1, "kappa[1]")?;
    check_dalembert(&kappa.c2, "kappa[2]")?;
    Ok(PotentialRow {
        zeta: pr.zeta.plus(&weyl_field(kappa, WeylVariant::WTilde)),
    })
}

/// `H ± iE` componentwise.
pub fn selfduality_residual(em: &ComplexEmField, p: &SpacetimePoint, sign: Sign) -> Result<[Complex64; 3]> {
    for f in em.e.iter().chain(&em.h) {
        f.check_regular(p)?;
    }
    let s = I * sign.value();
    Ok([0, 1, 2].map(|i| em.h[i].eval(p) + s * em.e[i].eval(p)))
}

/// `μ = w̄/(z + r) = tan(θ/2) e^{iφ}`.
pub fn dalembert_stereo() -> ScalarField {
    ScalarField::closed_form(SingularSet::negative_z_axis(), |q| {
        q.x_plus_iy() * (q.r() + q.z.clone()).recip()
    })
}

/// `α = 1/(2r)`, `β = −μ/(2r)`.
pub fn weyl_coulomb() -> WeylSolution {
    let alpha = ScalarField::closed_form(SingularSet::origin(), |q| q.r().recip().scale_re(0.5));
    let beta = ScalarField::closed_form(SingularSet::negative_z_axis(), |q| {
        let r = q.r();
        q.x_plus_iy() * (&r + &q.z).recip() * r.recip().scale_re(-0.5)
    });
    WeylSolution::from_alpha_beta(alpha, beta)
}

/// Residual statistics of `W̃ψ` relative to `max|∂ψ|` over sampled points.
pub fn weyl_residual_report(ws: &WeylSolution, cfg: &SampleConfig) -> Result<ResidualReport> {
    let points = sample_points(cfg, &[ws.psi.singular_set()])?;
    residual_stats(
        |p| {
            let r = weyl_residual(ws, p)?;
            let scale = [&ws.psi.c1, &ws.psi.c2]
                .iter()
                .flat_map(|f| f.gradient(p))
                .map(|d| d.norm())
                .fold(0.0, f64::max);
            Ok(PointResidual::new(r.to_vec(), scale))
        },
        &points,
    )
}

/// Largest relative Weyl residual over the sampled points.
pub fn weyl_residual_max(ws: &WeylSolution, cfg: &SampleConfig) -> Result<f64> {
    weyl_residual_report(ws, cfg).map(|r| r.max_rel)
}
