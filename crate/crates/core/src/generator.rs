//! Dirac solutions from Klein-Gordon potentials, the inverse ansatz, gauge
//! shifts of the potentials and solution chains.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fields::{check_mass, BispinorField, DiracSolutionChiral, ScalarField, Spinor2Field};
use crate::operators::{dirac_field_4d, kg_residual_scaled, weyl_field, DiracVariant, GammaBasis, WeylVariant};
use crate::verify::{sample_points, SampleConfig};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Sample size, seed and tolerance of the statistical wave-equation check.
pub const PRECONDITION_POINTS: usize = 64;
pub const PRECONDITION_SEED: u64 = 0x5EED;
pub const PRECONDITION_TOL: f64 = 1e-8;

/// Checks `(□ − m²) f ≈ 0` relative to the term scale at a fixed set of
/// sampled regular points. `what` names the field in the error.
pub fn check_kg(f: &ScalarField, m: f64, what: &str) -> Result<()> {
    let cfg = SampleConfig::with_seed(PRECONDITION_SEED, PRECONDITION_POINTS);
    let points = sample_points(&cfg, &[f.singular_set()])?;
    let mut worst: f64 = 0.0;
    for p in &points {
        let (r, scale) = kg_residual_scaled(f, m, p)?;
        worst = worst.max(r.norm() / scale.max(1e-30));
    }
    if worst <= PRECONDITION_TOL {
        Ok(())
    } else {
        Err(Error::Precondition {
            what: what.to_string(),
            residual: worst,
        })
    }
}

fn check_kg_spinor(s: &Spinor2Field, m: f64, what: &str) -> Result<()> {
    check_kg(&s.c1, m, &format!("{what}[1]"))?;
    check_kg(&s.c2, m, &format!("{what}[2]"))
}

/// Chiral potentials `{α, β}`.
#[derive(Debug, Clone)]
pub struct PotentialPairChiral {
    pub alpha: Spinor2Field,
    pub beta: Spinor2Field,
    pub m: f64,
}

/// Four scalar potentials `Φ = {φ_a}`.
#[derive(Debug, Clone)]
pub struct PotentialQuad4D {
    pub phi: [ScalarField; 4],
    pub m: f64,
}

/// `b = (i/m) W a` without checking `a`.
pub(crate) fn complete_unchecked(a: Spinor2Field, m: f64) -> DiracSolutionChiral {
    let b = weyl_field(&a, WeylVariant::W).scaled(I / m);
    DiracSolutionChiral { a, b, m }
}

/// Completes a KG doublet `a` to a Dirac solution with `b = (i/m) W a`.
pub fn complete_to_dirac(a: &Spinor2Field, m: f64) -> Result<DiracSolutionChiral> {
    check_mass(m)?;
    check_kg_spinor(a, m, "a")?;
    Ok(complete_unchecked(a.clone(), m))
}

/// `a = W̃β − imα`, `b = Wα − imβ`.
pub fn dirac_from_potentials_chiral(pp: &PotentialPairChiral) -> Result<DiracSolutionChiral> {
    check_mass(pp.m)?;
    let mi = -I * pp.m;
    let a = weyl_field(&pp.beta, WeylVariant::WTilde).plus(&pp.alpha.scaled(mi));
    let b = weyl_field(&pp.alpha, WeylVariant::W).plus(&pp.beta.scaled(mi));
    Ok(DiracSolutionChiral { a, b, m: pp.m })
}

/// The ansatz `α = (i/m) a`, `β = 0`.
pub fn potentials_from_chiral(sol: &DiracSolutionChiral) -> PotentialPairChiral {
    PotentialPairChiral {
        alpha: sol.a.scaled(I / sol.m),
        beta: Spinor2Field::zero(),
        m: sol.m,
    }
}

/// `α ↦ α − m²π − imW̃ρ`, `β ↦ β + m²ρ + imWπ`.
pub fn gauge_shift_chiral(
    pp: &PotentialPairChiral,
    pi: &Spinor2Field,
    rho: &Spinor2Field,
) -> Result<PotentialPairChiral> {
    check_kg_spinor(pi, pp.m, "pi")?;
    check_kg_spinor(rho, pp.m, "rho")?;
    let m = pp.m;
    let m2 = Complex64::new(m * m, 0.0);
    let im = I * m;
    let alpha = pp
        .alpha
        .minus(&pi.scaled(m2))
        .minus(&weyl_field(rho, WeylVariant::WTilde).scaled(im));
    let beta = pp
        .beta
        .plus(&rho.scaled(m2))
        .plus(&weyl_field(pi, WeylVariant::W).scaled(im));
    Ok(PotentialPairChiral { alpha, beta, m })
}

/// `Ψ = D*Φ`.
pub fn dirac_from_potentials_4d(pq: &PotentialQuad4D) -> Result<BispinorField> {
    check_mass(pq.m)?;
    BispinorField::new(dirac_field_4d(&pq.phi, pq.m, DiracVariant::DStar), pq.m)
}

/// The projective ansatz `Φ = (1/2m)(1 ± γ⁵)Ψ`.
pub fn potentials_from_bispinor(psi: &BispinorField, sign: f64) -> PotentialQuad4D {
    let g5 = GammaBasis::dirac().gamma5;
    let s = if sign < 0.0 { -1.0 } else { 1.0 };
    let k = 1.0 / (2.0 * psi.m);
    let phi = [0, 1, 2, 3].map(|row| {
        let terms = (0..4)
            .map(|col| {
                let delta = if row == col { ONE } else { Complex64::new(0.0, 0.0) };
                ((delta + g5.m[row][col] * s) * k, psi.psi[col].clone())
            })
            .collect();
        ScalarField::linear_combination(terms)
    });
    PotentialQuad4D { phi, m: psi.m }
}

/// `Φ ↦ Φ + DΞ`.
pub fn gauge_shift_4d(pq: &PotentialQuad4D, xi: &PotentialQuad4D) -> Result<PotentialQuad4D> {
    for (i, f) in xi.phi.iter().enumerate() {
        check_kg(f, pq.m, &format!("xi[{}]", i + 1))?;
    }
    let dxi = dirac_field_4d(&xi.phi, pq.m, DiracVariant::D);
    let phi = [0, 1, 2, 3].map(|i| pq.phi[i].plus(&dxi[i]));
    Ok(PotentialQuad4D { phi, m: pq.m })
}

/// Which component of `b` seeds the next link of a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    First,
    Second,
}

/// Where the promoted component goes in the new `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Upper,
    Lower,
}

/// Promotes one component of `b` to the new generating doublet and
/// completes it. The component is used without rescaling.
pub fn chain_next(sol: &DiracSolutionChiral, comp: Component, slot: Slot) -> DiracSolutionChiral {
    let f = match comp {
        Component::First => sol.b.c1.clone(),
        Component::Second => sol.b.c2.clone(),
    };
    let a = match slot {
        Slot::Upper => Spinor2Field::upper(f),
        Slot::Lower => Spinor2Field::lower(f),
    };
    complete_unchecked(a, sol.m)
}
