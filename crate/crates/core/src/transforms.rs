//! Transformation laws of Dirac solutions under SL(2,C).
//!
//! A transformed field is read in the new frame: its value at `Y` is built
//! from the old field at `X = S† Y S`. For a boost matrix
//! `S = diag(e^{−θ/2}, e^{θ/2})` this is `z_X = cosh θ·(z − t tanh θ)`.
//!
//! * canonical: `ā(Y) = S a(X)`, `b̄(Y) = (S⁻¹)† b(X)`;
//! * alternative: carry `a` as two scalars and regenerate `b̄ = (i/m) W ā`;
//! * general: `ā(Y) = M a(X)` with an internal matrix `M`, `b̄` regenerated.
//!
//! All three map solutions to solutions; the general law with `M = S`
//! coincides with the canonical one.

use num_complex::Complex64;

use crate::algebra::{lorentz_matrix, Mat2C, UNIMODULAR_USE_TOL};
use crate::error::{Error, Result};
use crate::fields::{check_mass, AffineMap, DiracSolutionChiral, ScalarField, SingularSet, Spinor2Field};
use crate::generator::complete_to_dirac;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Coordinate map `Y ↦ S† Y S` of the pullback.
pub fn pullback_map(s: &Mat2C) -> Result<AffineMap> {
    s.check_unimodular(UNIMODULAR_USE_TOL)?;
    Ok(AffineMap::linear(lorentz_matrix(&s.adjoint())))
}

/// The field carried as a scalar: `Y ↦ f(S† Y S)`.
pub fn scalar_transport(f: &ScalarField, s: &Mat2C) -> Result<ScalarField> {
    Ok(f.pull_back(pullback_map(s)?))
}

fn transport_spinor(sp: &Spinor2Field, s: &Mat2C) -> Result<Spinor2Field> {
    Ok(sp.pull_back(pullback_map(s)?))
}

/// `ā = S·a(X)`, `b̄ = (S⁻¹)†·b(X)`.
pub fn transform_canonical(sol: &DiracSolutionChiral, s: &Mat2C) -> Result<DiracSolutionChiral> {
    let a = transport_spinor(&sol.a, s)?.mix(s);
    let b = transport_spinor(&sol.b, s)?.mix(&s.dual());
    DiracSolutionChiral::new(a, b, sol.m)
}

/// Scalar transport of `a` followed by regeneration of `b`.
pub fn transform_alternative(sol: &DiracSolutionChiral, s: &Mat2C) -> Result<DiracSolutionChiral> {
    complete_to_dirac(&transport_spinor(&sol.a, s)?, sol.m)
}

/// `ā = M·a(X)` followed by regeneration of `b`.
pub fn transform_general(sol: &DiracSolutionChiral, s: &Mat2C, mix: &Mat2C) -> Result<DiracSolutionChiral> {
    mix.check_unimodular(UNIMODULAR_USE_TOL)?;
    complete_to_dirac(&transport_spinor(&sol.a, s)?.mix(mix), sol.m)
}

/// A transformation law together with its matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TransformLaw {
    Canonical { s: Mat2C },
    Alternative { s: Mat2C },
    General { s: Mat2C, mix: Mat2C },
}

impl TransformLaw {
    pub fn new(tag: &str, s: Mat2C, mix: Option<Mat2C>) -> Result<Self> {
        s.check_unimodular(UNIMODULAR_USE_TOL)?;
        match tag {
            "canonical" => Ok(TransformLaw::Canonical { s }),
            "alternative" => Ok(TransformLaw::Alternative { s }),
            "general" => {
                let mix = mix.ok_or_else(|| Error::InvalidConfig("general law needs a mix matrix".into()))?;
                mix.check_unimodular(UNIMODULAR_USE_TOL)?;
                Ok(TransformLaw::General { s, mix })
            }
            other => Err(Error::UnknownId(other.to_string())),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            TransformLaw::Canonical { .. } => "canonical",
            TransformLaw::Alternative { .. } => "alternative",
            TransformLaw::General { .. } => "general",
        }
    }

    pub fn apply(&self, sol: &DiracSolutionChiral) -> Result<DiracSolutionChiral> {
        match self {
            TransformLaw::Canonical { s } => transform_canonical(sol, s),
            TransformLaw::Alternative { s } => transform_alternative(sol, s),
            TransformLaw::General { s, mix } => transform_general(sol, s, mix),
        }
    }
}

/// Closed form of the Yukawa spinor seen from a frame boosted along `z`
/// with rapidity `θ`, canonical law. With `z* = z − t tanh θ` and
/// `r* = √(x² + y² + z*² cosh²θ)`:
///
/// `ā = −g² e^{θ/2} e^{−mr*}/r*·(0, 1)`,
/// `b̄ = −(ig² e^{θ/2}/(m r*³))(1 + mr*)e^{−mr*}·(x − iy, −½(1 + e^{−2θ}) z*)`.
///
/// The alternative law gives the same fields without the factor `e^{θ/2}`.
pub fn yukawa_spinor_boosted_z(m: f64, g2: f64, theta: f64, canonical: bool) -> Result<DiracSolutionChiral> {
    check_mass(m)?;
    let overall = if canonical { (0.5 * theta).exp() } else { 1.0 };
    let (ch, v) = (theta.cosh(), theta.tanh());
    let deform = 0.5 * (1.0 + (-2.0 * theta).exp());
    let singular = SingularSet::custom(move |p| {
        let zs = p.z - v * p.t;
        (p.x * p.x + p.y * p.y + zs * zs * ch * ch).sqrt()
    });
    let zs = move |q: &crate::fields::Coords| &q.z - &q.t.scale_re(v);
    let rs = move |q: &crate::fields::Coords| {
        let z = zs(q);
        (&(&q.x * &q.x) + &(&q.y * &q.y) + (&z * &z).scale_re(ch * ch)).sqrt()
    };
    let a = ScalarField::closed_form(singular.clone(), move |q| {
        let r = rs(q);
        r.scale_re(-m).exp() * r.recip() * (-g2 * overall)
    });
    let radial = move |q: &crate::fields::Coords| {
        let r = rs(q);
        (r.scale_re(m) + 1.0) * r.scale_re(-m).exp() * r.powi(-3) * (-I * (g2 * overall / m))
    };
    let b1 = ScalarField::closed_form(singular.clone(), move |q| radial(q) * q.x_minus_iy());
    let b2 = ScalarField::closed_form(singular, move |q| radial(q) * zs(q) * (-deform));
    DiracSolutionChiral::new(Spinor2Field::lower(a), Spinor2Field::new(b1, b2), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{sl2c_boost, sl2c_rotation, SpacetimePoint};
    use crate::fields::{stereo_kg, yukawa, yukawa_spinor, Sign};
    use crate::generator::complete_to_dirac;
    use crate::verify::{
        compare_fields, dirac_residual_report, sample_points, solution_values, CompareMode, SampleConfig,
    };

    fn points() -> Vec<SpacetimePoint> {
        sample_points(
            &SampleConfig::with_seed(21, 60),
            &[SingularSet::origin(), SingularSet::negative_z_axis()],
        )
        .unwrap()
    }

    fn diff(x: &DiracSolutionChiral, y: &DiracSolutionChiral, mode: CompareMode) -> (f64, Option<Complex64>) {
        let c = compare_fields(solution_values(x), solution_values(y), &points(), mode).unwrap();
        (c.max_diff, c.constant)
    }

    #[test]
    fn pullback_of_z_boost_moves_the_origin() {
        let th = 0.7;
        let map = pullback_map(&sl2c_boost([0.0, 0.0, 1.0], th).unwrap()).unwrap();
        let p = SpacetimePoint::new(1.0, 0.2, 0.3, 0.5);
        let q = map.apply(&p);
        assert!((q.z - th.cosh() * (p.z - th.tanh() * p.t)).abs() < 1e-14);
    }

    #[test]
    fn scalar_transport_examples() {
        let y = yukawa(1.0, 1.0).unwrap();
        let id = scalar_transport(&y, &Mat2C::identity()).unwrap();
        let rot = scalar_transport(&y, &sl2c_rotation([0.6, 0.0, 0.8], 1.1).unwrap()).unwrap();
        for p in points() {
            assert!((id.eval(&p) - y.eval(&p)).norm() < 1e-15);
            assert!((rot.eval(&p) - y.eval(&p)).norm() < 1e-13);
        }
        assert!(scalar_transport(&y, &Mat2C::identity().scale(Complex64::new(1.1, 0.0))).is_err());
    }

    #[test]
    fn all_laws_preserve_the_equation() {
        let s = sl2c_boost([0.0, 0.6, 0.8], 0.4).unwrap() * sl2c_rotation([1.0, 0.0, 0.0], 0.9).unwrap();
        let mix = sl2c_rotation([0.0, 1.0, 0.0], 0.3).unwrap() * sl2c_boost([1.0, 0.0, 0.0], -0.2).unwrap();
        let sol = yukawa_spinor(1.0, 1.0).unwrap();
        for law in [
            TransformLaw::Canonical { s },
            TransformLaw::Alternative { s },
            TransformLaw::General { s, mix },
        ] {
            let out = law.apply(&sol).unwrap();
            let r = dirac_residual_report(&out, &SampleConfig::with_seed(8, 100)).unwrap();
            assert!(r.max_rel < 1e-9, "{} {r:?}", law.tag());
        }
    }

    #[test]
    fn canonical_composition() {
        let s1 = sl2c_rotation([0.0, 0.0, 1.0], 0.5).unwrap() * sl2c_boost([1.0, 0.0, 0.0], 0.3).unwrap();
        let s2 = sl2c_boost([0.0, 1.0, 0.0], -0.6).unwrap();
        let sol = yukawa_spinor(1.0, 1.0).unwrap();
        let twice = transform_canonical(&transform_canonical(&sol, &s1).unwrap(), &s2).unwrap();
        let once = transform_canonical(&sol, &(s2 * s1)).unwrap();
        assert!(diff(&twice, &once, CompareMode::Absolute).0 < 1e-9);
    }

    #[test]
    fn boost_closed_forms() {
        let sol = yukawa_spinor(1.0, -1.0).unwrap();
        for th in [0.3, 1.0] {
            let s = sl2c_boost([0.0, 0.0, 1.0], th).unwrap();
            let can = transform_canonical(&sol, &s).unwrap();
            let alt = transform_alternative(&sol, &s).unwrap();
            assert!(
                diff(
                    &can,
                    &yukawa_spinor_boosted_z(1.0, -1.0, th, true).unwrap(),
                    CompareMode::Absolute
                )
                .0 < 1e-9
            );
            assert!(
                diff(
                    &alt,
                    &yukawa_spinor_boosted_z(1.0, -1.0, th, false).unwrap(),
                    CompareMode::Absolute
                )
                .0 < 1e-9
            );
            let (d, c) = diff(&alt, &can, CompareMode::UpToGlobalConstant);
            assert!(d < 1e-9);
            assert!((c.unwrap() - Complex64::new((-0.5 * th).exp(), 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn rotation_phases() {
        let phi = 0.8;
        let rz = sl2c_rotation([0.0, 0.0, 1.0], phi).unwrap();
        let sol = yukawa_spinor(1.0, 1.0).unwrap();
        let can = transform_canonical(&sol, &rz).unwrap();
        let expected = sol.scaled(Complex64::from_polar(1.0, -0.5 * phi));
        assert!(diff(&can, &expected, CompareMode::Absolute).0 < 1e-10);

        let stereo = complete_to_dirac(&Spinor2Field::lower(stereo_kg(1.0, Sign::Plus).unwrap()), 1.0).unwrap();
        let alt = transform_alternative(&stereo, &rz).unwrap();
        let expected = stereo.scaled(Complex64::from_polar(1.0, phi));
        assert!(diff(&alt, &expected, CompareMode::Absolute).0 < 1e-9);

        let general = transform_general(&sol, &rz, &rz).unwrap();
        assert!(diff(&general, &can, CompareMode::Absolute).0 < 1e-10);
    }

    #[test]
    fn internal_mix_acts_algebraically() {
        let sol = yukawa_spinor(1.0, 1.0).unwrap();
        let mix = sl2c_rotation([0.0, 0.0, 1.0], std::f64::consts::PI).unwrap();
        let out = transform_general(&sol, &Mat2C::identity(), &mix).unwrap();
        let p = SpacetimePoint::new(0.1, 0.5, 0.4, -0.3);
        let a = sol.a.eval(&p);
        let expect = mix.apply(&a);
        let got = out.a.eval(&p);
        assert!((got[0] - expect[0]).norm() < 1e-14 && (got[1] - expect[1]).norm() < 1e-14);
    }

    #[test]
    fn law_parsing() {
        let s = Mat2C::identity();
        assert_eq!(TransformLaw::new("canonical", s, None).unwrap().tag(), "canonical");
        assert!(TransformLaw::new("general", s, None).is_err());
        assert!(matches!(TransformLaw::new("spin", s, None), Err(Error::UnknownId(_))));
    }
}
