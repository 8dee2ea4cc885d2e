//! Dirac-type and Klein-Gordon-type densities, energies, Lagrangians and the
//! finite field charge of the localized stationary solution.
//!
//! Bilinears are summed over the four chiral components `(a₁, a₂, b₁, b₂)`.
//! The Klein-Gordon charge density counts each component with the full
//! weight of a scalar field, `ρ_KG = i Σ (c̄ ∂_t c − ∂_t c̄ c)`, so that a
//! stationary solution `∝ e^{−iωt}` has `ρ_KG = 2ω Σ|c|² = ω ρ_D`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::SpacetimePoint;
use crate::error::{Error, Result};
use crate::fields::{broglie_kg, check_mass, Axis, DiracSolutionChiral, ScalarField};
use crate::operators::{apply_weyl, WeylVariant};
use crate::quadrature::{gauss_legendre, integrate};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChargeResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub truncation_radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    /// Lower radial limit; the charge integrand is regular at zero.
    pub r_min: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            r_min: 0.0,
            max_subdivisions: 500,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.rel_tol.is_nan() || self.rel_tol <= 0.0 {
            return Err(Error::InvalidConfig("rel_tol must be positive".into()));
        }
        if self.r_min.is_nan() || self.r_min < 0.0 {
            return Err(Error::InvalidConfig("r_min must be non-negative".into()));
        }
        Ok(())
    }
}

fn real_part(z: Complex64) -> f64 {
    debug_assert!(
        z.im.abs() <= 1e-12 * z.norm().max(1.0),
        "density has imaginary part {z}"
    );
    z.re
}

/// `ρ_D = 2(a†a + b†b)`.
pub fn rho_dirac(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<f64> {
    sol.check_regular(p)?;
    Ok(2.0 * sol.eval(p).iter().map(|c| c.norm_sqr()).sum::<f64>())
}

/// `i Σ (c̄ ∂_t c − ∂_t c̄ c)` over the four components.
pub fn rho_kg(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<f64> {
    sol.check_regular(p)?;
    let i = Complex64::new(0.0, 1.0);
    let z: Complex64 = sol
        .components()
        .iter()
        .map(|f| {
            let c = f.eval(p);
            let dt = f.d1(p, Axis::T);
            i * (c.conj() * dt - dt.conj() * c)
        })
        .sum();
    Ok(real_part(z))
}

/// Energy density of the Dirac Lagrangian; it coincides with [`rho_kg`].
pub fn energy_dirac(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<f64> {
    rho_kg(sol, p)
}

/// `J^μ` with `J_μ = (i/2) Σ (F̄ ∂_μ F − ∂_μ F̄ F)`, indices raised with
/// `diag(1, −1, −1, −1)`. A plane wave `e^{−i(Et − k·r)}` gives `(E, k)`.
pub fn current_kg(fields: &[ScalarField], p: &SpacetimePoint) -> Result<[f64; 4]> {
    let mut out = [0.0; 4];
    for f in fields {
        f.check_regular(p)?;
        let c = f.eval(p);
        for (mu, a) in Axis::ALL.iter().enumerate() {
            let d = f.d1(p, *a);
            let lower = real_part(Complex64::new(0.0, 0.5) * (c.conj() * d - d.conj() * c));
            out[mu] += if mu == 0 { lower } else { -lower };
        }
    }
    Ok(out)
}

/// `Σ (|∇c|² + |∂_t c|² + m²|c|²)` over the four components.
pub fn energy_kg(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<f64> {
    sol.check_regular(p)?;
    let m2 = sol.m * sol.m;
    Ok(sol
        .components()
        .iter()
        .map(|f| {
            let g = f.gradient(p);
            g.iter().map(|d| d.norm_sqr()).sum::<f64>() + m2 * f.eval(p).norm_sqr()
        })
        .sum())
}

fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(x, y)| x.conj() * y).sum()
}

/// `i{a†Wa − (Wa)†a + b†W̃b − (W̃b)†b} − 2m(a†b + b†a)`.
pub fn lagrangian_dirac(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<f64> {
    sol.check_regular(p)?;
    let a = sol.a.eval(p);
    let b = sol.b.eval(p);
    let wa = apply_weyl(&sol.a, p, WeylVariant::W)?;
    let wtb = apply_weyl(&sol.b, p, WeylVariant::WTilde)?;
    let i = Complex64::new(0.0, 1.0);
    let kinetic = i * (inner(&a, &wa) - inner(&wa, &a) + inner(&b, &wtb) - inner(&wtb, &b));
    let mass = (inner(&a, &b) + inner(&b, &a)) * (2.0 * sol.m);
    Ok(real_part(kinetic - mass))
}

/// `(2/m){(Wa)†(W̃b) + (W̃b)†(Wa) − m²(a†b + b†a)}`.
pub fn lagrangian_kg(sol: &DiracSolutionChiral, p: &SpacetimePoint) -> Result<f64> {
    sol.check_regular(p)?;
    let a = sol.a.eval(p);
    let b = sol.b.eval(p);
    let wa = apply_weyl(&sol.a, p, WeylVariant::W)?;
    let wtb = apply_weyl(&sol.b, p, WeylVariant::WTilde)?;
    let m = sol.m;
    let z = inner(&wa, &wtb) + inner(&wtb, &wa) - (inner(&a, &b) + inner(&b, &a)) * (m * m);
    Ok(real_part(z * (2.0 / m)))
}

/// `Q(ψ) = (1/4π)∫J⁰ dV` for the localized stationary field
/// `e^{−mr cos ψ − imt sin ψ}/r`, integrated radially up to the radius where
/// the neglected tail falls below `rel_tol/100` of the total.
pub fn field_charge_radial(m: f64, psi: f64, cfg: &QuadratureConfig) -> Result<ChargeResult> {
    check_mass(m)?;
    cfg.validate()?;
    if psi.is_nan() || psi < 0.0 {
        return Err(Error::OutOfRange {
            name: "psi",
            value: psi,
        });
    }
    if psi >= FRAC_PI_2 - 1e-9 {
        return Err(Error::Divergent(format!(
            "field charge at psi = {psi}: the field decays like 1/r"
        )));
    }
    let k = psi.cos();
    let f = broglie_kg(m, psi)?;
    let radius = -(0.01 * cfg.rel_tol).ln() / (2.0 * m * k);
    let integrand = |r: f64| {
        let p = SpacetimePoint::new(0.0, 0.0, 0.0, r);
        current_kg(std::slice::from_ref(&f), &p).map_or(0.0, |j| j[0] * r * r)
    };
    let est = integrate(
        integrand,
        cfg.r_min,
        radius.max(cfg.r_min),
        cfg.rel_tol,
        0.0,
        cfg.max_subdivisions,
    )?;
    Ok(ChargeResult {
        value: est.value,
        abs_error_estimate: est.abs_error,
        truncation_radius: radius,
    })
}

/// Ball `|r| ≤ radius` at time `t` with the inner ball `|r| ≤ exclusion`
/// removed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub radius: f64,
    pub exclusion: f64,
    pub t: f64,
}

/// Volume integral of `density` over `region`: adaptive radial
/// Gauss–Kronrod over a fixed angular product rule (24 Legendre nodes in
/// `cos θ`, 48 equispaced in `φ`).
pub fn charge_volume<F>(density: F, region: &Region, cfg: &QuadratureConfig) -> Result<ChargeResult>
where
    F: Fn(&SpacetimePoint) -> f64 + Sync,
{
    cfg.validate()?;
    if !(region.radius > region.exclusion && region.exclusion >= 0.0) {
        return Err(Error::InvalidConfig("region radius must exceed the exclusion".into()));
    }
    let polar = gauss_legendre(24);
    let n_phi = 48;
    let dphi = 2.0 * PI / n_phi as f64;
    let directions: Vec<([f64; 3], f64)> = polar
        .iter()
        .flat_map(|&(c, w)| {
            let s = (1.0 - c * c).sqrt();
            (0..n_phi).map(move |j| {
                let phi = (j as f64 + 0.5) * dphi;
                ([s * phi.cos(), s * phi.sin(), c], w * dphi)
            })
        })
        .collect();
    let shell = |r: f64| {
        let values: Vec<f64> = directions
            .par_iter()
            .map(|(n, w)| w * density(&SpacetimePoint::new(region.t, r * n[0], r * n[1], r * n[2])))
            .collect();
        values.iter().sum::<f64>() * r * r
    };
    let est = integrate(
        shell,
        region.exclusion,
        region.radius,
        cfg.rel_tol,
        1e-300,
        cfg.max_subdivisions,
    )?;
    Ok(ChargeResult {
        value: est.value,
        abs_error_estimate: est.abs_error,
        truncation_radius: region.radius,
    })
}
