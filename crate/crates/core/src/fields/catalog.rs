//! Closed-form Klein-Gordon and Dirac solutions.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::{check_mass, DiracSolutionChiral, Direction, ScalarField, SingularSet, Spinor2Field};
use crate::algebra::SpacetimePoint;
use crate::error::{Error, Result};
use crate::jet::Jet;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Coordinates seeded with the requested directions.
#[derive(Debug, Clone)]
pub struct Coords {
    pub t: Jet,
    pub x: Jet,
    pub y: Jet,
    pub z: Jet,
}

impl Coords {
    pub fn seed(p: &SpacetimePoint, dirs: &[Direction]) -> Self {
        let v = p.to_array();
        let var = |mu: usize| {
            let slopes: Vec<Complex64> = dirs.iter().map(|d| d.0[mu]).collect();
            Jet::variable(v[mu], &slopes)
        };
        Self {
            t: var(0),
            x: var(1),
            y: var(2),
            z: var(3),
        }
    }

    pub fn r(&self) -> Jet {
        (&(&self.x * &self.x) + &(&self.y * &self.y) + (&self.z * &self.z)).sqrt()
    }

    /// `x + iy`.
    pub fn x_plus_iy(&self) -> Jet {
        &self.x + &self.y.scale(I)
    }

    /// `x − iy`.
    pub fn x_minus_iy(&self) -> Jet {
        &self.x - &self.y.scale(I)
    }

    /// `e^{c·t}`.
    pub fn time_phase(&self, c: Complex64) -> Jet {
        self.t.scale(c).exp()
    }
}

/// Sign choice `±` in the oscillating factor `e^{±imt}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// `F = e^{±imt}/r`.
pub fn coulomb_kg(m: f64, sign: Sign) -> Result<ScalarField> {
    check_mass(m)?;
    let c = I * (sign.value() * m);
    Ok(ScalarField::closed_form(SingularSet::origin(), move |q| {
        q.time_phase(c) * q.r().recip()
    }))
}

/// `F = (x + iy)/(r + z)·e^{±imt}`.
pub fn stereo_kg(m: f64, sign: Sign) -> Result<ScalarField> {
    check_mass(m)?;
    let c = I * (sign.value() * m);
    Ok(ScalarField::closed_form(SingularSet::negative_z_axis(), move |q| {
        q.x_plus_iy() * (q.r() + q.z.clone()).recip() * q.time_phase(c)
    }))
}

/// `F = −g²e^{−mr}/r`.
pub fn yukawa(m: f64, g2: f64) -> Result<ScalarField> {
    check_mass(m)?;
    Ok(ScalarField::closed_form(SingularSet::origin(), move |q| {
        let r = q.r();
        (r.scale_re(-m).exp() * r.recip()).scale_re(-g2)
    }))
}

/// `F = (x + iy)/(r(r + z))·e^{−mr}`.
pub fn stereo_coulomb_static(m: f64) -> Result<ScalarField> {
    check_mass(m)?;
    Ok(ScalarField::closed_form(SingularSet::negative_z_axis(), move |q| {
        let r = q.r();
        let den = &r * &(&r + &q.z);
        q.x_plus_iy() * den.recip() * r.scale_re(-m).exp()
    }))
}

fn check_angle(psi: f64) -> Result<()> {
    if (0.0..=FRAC_PI_2).contains(&psi) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "psi",
            value: psi,
        })
    }
}

/// `F = e^{−mkr}/r·e^{−imωt}` with `k = cos ψ`, `ω = sin ψ`, `ψ ∈ [0, π/2]`.
pub fn broglie_kg(m: f64, psi: f64) -> Result<ScalarField> {
    check_mass(m)?;
    check_angle(psi)?;
    let (omega, k) = psi.sin_cos();
    Ok(ScalarField::closed_form(SingularSet::origin(), move |q| {
        let r = q.r();
        r.scale_re(-m * k).exp() * r.recip() * q.time_phase(-I * (m * omega))
    }))
}

/// `F = e^{−i(Et − k·r)}` with `E = √(m² + |k|²)`.
pub fn plane_wave_kg(m: f64, k3: [f64; 3]) -> Result<ScalarField> {
    check_mass(m)?;
    let e = (m * m + k3.iter().map(|k| k * k).sum::<f64>()).sqrt();
    Ok(ScalarField::closed_form(SingularSet::none(), move |q| {
        let phase = q.t.scale_re(-e) + q.x.scale_re(k3[0]) + q.y.scale_re(k3[1]) + q.z.scale_re(k3[2]);
        phase.scale(I).exp()
    }))
}

/// Dirac completion of [`yukawa`]: `a = (0, F)`,
/// `b = −(ig²/(mr³))(1 + mr)e^{−mr}·(x − iy, −z)`.
pub fn yukawa_spinor(m: f64, g2: f64) -> Result<DiracSolutionChiral> {
    let a = Spinor2Field::lower(yukawa(m, g2)?);
    let radial = move |q: &Coords| {
        let r = q.r();
        (r.scale_re(m) + 1.0) * r.scale_re(-m).exp() * r.powi(-3) * (-I * (g2 / m))
    };
    let b = Spinor2Field::new(
        ScalarField::closed_form(SingularSet::origin(), move |q| radial(q) * q.x_minus_iy()),
        ScalarField::closed_form(SingularSet::origin(), move |q| -(radial(q) * q.z.clone())),
    );
    DiracSolutionChiral::new(a, b, m)
}

/// Second link of the Yukawa chain: `a = (0, (x − iy)(1 + mr)e^{−mr}/r³)`,
/// `b = (i/(mr⁵))(3 + 3mr + m²r²)e^{−mr}·((x − iy)², −(x − iy)z)`.
pub fn chain_yukawa_2(m: f64) -> Result<DiracSolutionChiral> {
    check_mass(m)?;
    let a = Spinor2Field::lower(ScalarField::closed_form(SingularSet::origin(), move |q| {
        let r = q.r();
        q.x_minus_iy() * (r.scale_re(m) + 1.0) * r.scale_re(-m).exp() * r.powi(-3)
    }));
    let radial = move |q: &Coords| {
        let r = q.r();
        let poly = r.scale_re(3.0 * m) + (&r * &r).scale_re(m * m) + 3.0;
        poly * r.scale_re(-m).exp() * r.powi(-5) * (I / m)
    };
    let b = Spinor2Field::new(
        ScalarField::closed_form(SingularSet::origin(), move |q| {
            let w = q.x_minus_iy();
            radial(q) * (&w * &w)
        }),
        ScalarField::closed_form(SingularSet::origin(), move |q| {
            -(radial(q) * q.x_minus_iy() * q.z.clone())
        }),
    );
    DiracSolutionChiral::new(a, b, m)
}

/// Dirac completion of [`broglie_kg`]: `a = (0, F)`,
/// `b = −i e^{−mkr−imωt}/(mr³)·(−(x − iy)(1 + mkr), z(1 + mkr) + imωr²)`.
pub fn spinor_broglie(m: f64, psi: f64) -> Result<DiracSolutionChiral> {
    let a = Spinor2Field::lower(broglie_kg(m, psi)?);
    let (omega, k) = psi.sin_cos();
    let common = move |q: &Coords| {
        let r = q.r();
        (r.scale_re(-m * k) + q.t.scale(-I * (m * omega))).exp() * r.powi(-3) * (-I / m)
    };
    let b = Spinor2Field::new(
        ScalarField::closed_form(SingularSet::origin(), move |q| {
            let r = q.r();
            -(common(q) * q.x_minus_iy() * (r.scale_re(m * k) + 1.0))
        }),
        ScalarField::closed_form(SingularSet::origin(), move |q| {
            let r = q.r();
            let second = q.z.clone() * (r.scale_re(m * k) + 1.0) + (&r * &r).scale(I * (m * omega));
            common(q) * second
        }),
    );
    DiracSolutionChiral::new(a, b, m)
}
