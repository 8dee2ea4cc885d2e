//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines appear in plain `cargo test` output.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::process::{Command, ExitCode};

use num_complex::Complex64;

use relfield::conserved::{energy_kg, field_charge_radial, lagrangian_dirac, rho_dirac, rho_kg, QuadratureConfig};
use relfield::fields::{
    broglie_kg, chain_yukawa_2, coulomb_kg, plane_wave_kg, spinor_broglie, stereo_coulomb_static, stereo_kg, yukawa,
    yukawa_spinor, Coords,
};
use relfield::generator::{
    chain_next, complete_to_dirac, dirac_from_potentials_4d, dirac_from_potentials_chiral, gauge_shift_4d,
    gauge_shift_chiral, potentials_from_bispinor, potentials_from_chiral,
};
use relfield::massless::{
    dalembert_stereo, potentials_single, weyl_coulomb, weyl_from_potentials, weyl_gauge_shift, weyl_residual_max,
};
use relfield::operators::{
    apply_dirac_4d, apply_weyl, bispinor_from_chiral, chiral_from_bispinor, dalembert_field,
    dirac_4d_from_chiral_residual, dirac_field_4d, dirac_residual_chiral, kg_residual, weyl_field,
};
use relfield::transforms::{transform_alternative, transform_canonical, transform_general, yukawa_spinor_boosted_z};
use relfield::verify::{compare_fields, dirac_residual_report, sample_points, solution_values, CompareMode};
use relfield::{
    sl2c_boost, sl2c_rotation, Component, DiracSolutionChiral, DiracVariant, Error, GammaBasis, PotentialQuad4D,
    PotentialRow, SampleConfig, ScalarField, Sign, SingularSet, Slot, SpacetimePoint, Spinor2Field, WeylVariant,
};

const Z: [f64; 3] = [0.0, 0.0, 1.0];
const X: [f64; 3] = [1.0, 0.0, 0.0];

/// Sub-checks of one criterion.
#[derive(Default)]
struct Criterion {
    checks: Vec<(String, f64, f64, bool)>,
}

impl Criterion {
    fn at_most(&mut self, name: impl Into<String>, value: f64, bound: f64) {
        self.checks.push((name.into(), value, bound, value <= bound));
    }

    fn above(&mut self, name: impl Into<String>, value: f64, bound: f64) {
        self.checks.push((name.into(), value, bound, value > bound));
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), f64::NAN, f64::NAN, ok));
    }

    fn report(&self, id: usize, title: &str) -> bool {
        let failed: Vec<_> = self.checks.iter().filter(|c| !c.3).collect();
        let status = if failed.is_empty() && !self.checks.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("{status} criterion {id}: {title} ({} checks)", self.checks.len());
        for (name, value, bound, _) in &failed {
            println!("     failed: {name}: {value:e} vs {bound:e}");
        }
        status == "PASS"
    }
}

fn points(sets: &[SingularSet], seed: u64, count: usize) -> Vec<SpacetimePoint> {
    sample_points(&SampleConfig::with_seed(seed, count), sets).expect("sampling succeeds")
}

fn points_for(sols: &[&DiracSolutionChiral], seed: u64, count: usize) -> Vec<SpacetimePoint> {
    let sets: Vec<_> = sols.iter().map(|s| s.singular_set()).collect();
    points(&sets, seed, count)
}

fn gap(x: &DiracSolutionChiral, y: &DiracSolutionChiral, pts: &[SpacetimePoint]) -> f64 {
    compare_fields(solution_values(x), solution_values(y), pts, CompareMode::Absolute)
        .unwrap()
        .max_diff
}

fn ratio(x: &DiracSolutionChiral, y: &DiracSolutionChiral, pts: &[SpacetimePoint]) -> (f64, Complex64) {
    let c = compare_fields(
        solution_values(x),
        solution_values(y),
        pts,
        CompareMode::UpToGlobalConstant,
    )
    .unwrap();
    (c.max_diff, c.constant.unwrap())
}

fn lower(f: ScalarField) -> Spinor2Field {
    Spinor2Field::lower(f)
}

fn generated(f: ScalarField, m: f64) -> DiracSolutionChiral {
    complete_to_dirac(&lower(f), m).unwrap()
}

fn massless_wave(k: [f64; 3]) -> ScalarField {
    let e = k.iter().map(|v| v * v).sum::<f64>().sqrt();
    ScalarField::closed_form(SingularSet::none(), move |q: &Coords| {
        (q.t.scale_re(-e) + q.x.scale_re(k[0]) + q.y.scale_re(k[1]) + q.z.scale_re(k[2]))
            .scale(Complex64::new(0.0, 1.0))
            .exp()
    })
}

/// Smooth non-solution built from seeded coefficients `c`.
fn smooth_field(c: [f64; 8]) -> ScalarField {
    ScalarField::closed_form(SingularSet::none(), move |q: &Coords| {
        let phase = (q.t.scale_re(0.1 * c[0]) + q.x.scale_re(0.1 * c[1]) + q.y.scale_re(0.1 * c[2]))
            .scale(Complex64::new(0.3, 0.7))
            .exp();
        let poly = (&q.x * &q.y).scale_re(0.2 * c[3])
            + (&q.z * &q.z).scale_re(0.2 * c[4])
            + (&q.t * &q.x).scale_re(0.2 * c[5])
            + q.z.scale_re(c[6])
            + c[7];
        phase * poly
    })
}

fn seeded_coefficients(seed: u64) -> [f64; 8] {
    let p = points(&[], seed, 2);
    let [a, b] = [p[0].to_array(), p[1].to_array()];
    [a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]]
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::default();
    let cfg = SampleConfig::with_seed(42, 500);
    let m = 1.0;
    let inputs = [
        ("yukawa", yukawa(m, 1.0).unwrap()),
        ("coulomb-kg", coulomb_kg(m, Sign::Plus).unwrap()),
        ("stereo-kg", stereo_kg(m, Sign::Plus).unwrap()),
        ("stereo-coulomb", stereo_coulomb_static(m).unwrap()),
        ("broglie psi=0.3", broglie_kg(m, 0.3).unwrap()),
        ("broglie psi=0.8", broglie_kg(m, 0.8).unwrap()),
        ("plane-wave", plane_wave_kg(m, [0.3, -0.2, 0.5]).unwrap()),
    ];
    for (name, f) in inputs {
        let report = dirac_residual_report(&generated(f, m), &cfg).unwrap();
        c.holds(format!("{name}: 500 points used"), report.points_used == 500);
        c.at_most(format!("{name}: max relative Dirac residual"), report.max_rel, 1e-9);
    }
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::default();
    for (m, g2) in [(1.0, 1.0), (1.7, -0.6)] {
        let closed = yukawa_spinor(m, g2).unwrap();
        let pts = points_for(&[&closed], 5, 300);
        c.at_most(
            format!("yukawa m={m} g2={g2} componentwise"),
            gap(&generated(yukawa(m, g2).unwrap(), m), &closed, &pts),
            1e-10,
        );
    }
    for (m, psi) in [(1.0, 0.3), (1.0, 0.8), (2.2, 1.1)] {
        let closed = spinor_broglie(m, psi).unwrap();
        let pts = points_for(&[&closed], 6, 300);
        c.at_most(
            format!("broglie m={m} psi={psi} componentwise"),
            gap(&generated(broglie_kg(m, psi).unwrap(), m), &closed, &pts),
            1e-10,
        );
    }
    for m in [1.0, 0.7] {
        let level2 = chain_next(&generated(yukawa(m, 1.0).unwrap(), m), Component::First, Slot::Lower);
        let closed = chain_yukawa_2(m).unwrap();
        let pts = points_for(&[&closed], 7, 300);
        let (diff, constant) = ratio(&level2, &closed, &pts);
        c.at_most(format!("depth-2 chain m={m} up to a constant"), diff, 1e-9);
        c.holds(
            format!("depth-2 chain m={m} constant is nonzero"),
            constant.norm() > 1e-3,
        );
    }
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::default();
    let cfg = QuadratureConfig::default();
    for psi in [0.0, 0.2, 0.5, FRAC_PI_4, 1.0, 1.2] {
        let q = field_charge_radial(1.0, psi, &cfg).unwrap().value;
        let expected = 0.5 * psi.tan();
        let dev = if expected == 0.0 {
            q.abs()
        } else {
            (q - expected).abs() / expected
        };
        c.at_most(format!("Q({psi}) against tan(psi)/2"), dev, 1e-6);
    }
    let divergent = field_charge_radial(1.0, FRAC_PI_2, &cfg);
    c.holds("psi = pi/2 diverges", matches!(divergent, Err(Error::Divergent(_))));
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::default();
    let m = 1.0;
    let gauge_functions = [
        ("plane-wave", plane_wave_kg(m, [0.4, 0.1, -0.3]).unwrap()),
        ("plane-wave-2", plane_wave_kg(m, [-0.7, 0.5, 0.2]).unwrap()),
        ("coulomb-kg", coulomb_kg(m, Sign::Minus).unwrap()),
        ("yukawa", yukawa(m, 0.5).unwrap()),
        ("stereo-kg", stereo_kg(m, Sign::Plus).unwrap()),
    ];
    let bases = [
        ("yukawa-spinor", yukawa_spinor(m, 1.0).unwrap()),
        ("plane-wave", generated(plane_wave_kg(m, [0.2, 0.3, -0.1]).unwrap(), m)),
    ];
    let all_sets = [SingularSet::origin(), SingularSet::negative_z_axis()];
    let pts = points(&all_sets, 11, 200);
    for (bname, sol) in &bases {
        let pp = potentials_from_chiral(sol);
        let base = dirac_from_potentials_chiral(&pp).unwrap();
        c.at_most(
            format!("chiral ansatz regenerates {bname}"),
            gap(&base, sol, &pts),
            1e-9,
        );
        for (i, (gname, g)) in gauge_functions.iter().enumerate() {
            let (_, other) = &gauge_functions[(i + 1) % gauge_functions.len()];
            let pi = Spinor2Field::new(g.clone(), other.scaled(Complex64::new(0.3, -0.2)));
            let rho = Spinor2Field::new(other.clone(), g.scaled(Complex64::new(-0.5, 0.1)));
            let shifted = dirac_from_potentials_chiral(&gauge_shift_chiral(&pp, &pi, &rho).unwrap()).unwrap();
            c.at_most(
                format!("chiral shift of {bname} by {gname}"),
                gap(&shifted, &base, &pts),
                1e-9,
            );
        }

        let psi = bispinor_from_chiral(sol);
        let pq = potentials_from_bispinor(&psi, 1.0);
        let psi0 = dirac_from_potentials_4d(&pq).unwrap();
        for (i, (gname, g)) in gauge_functions.iter().enumerate() {
            let phi = [0, 1, 2, 3].map(|k| {
                let (_, f) = &gauge_functions[(i + k) % gauge_functions.len()];
                if k == 0 {
                    g.clone()
                } else {
                    f.scaled(Complex64::new(0.25 * k as f64, 0.1))
                }
            });
            let shifted = gauge_shift_4d(&pq, &PotentialQuad4D { phi, m }).unwrap();
            let psi1 = dirac_from_potentials_4d(&shifted).unwrap();
            let diff = pts
                .iter()
                .flat_map(|p| {
                    let (a, b) = (psi1.eval(p), psi0.eval(p));
                    (0..4).map(move |j| (a[j] - b[j]).norm())
                })
                .fold(0.0, f64::max);
            c.at_most(format!("4D shift of {bname} by {gname}"), diff, 1e-9);
        }
    }
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::default();
    let m = 1.0;
    let yk = yukawa_spinor(m, 1.0).unwrap();
    let br = spinor_broglie(m, 0.6).unwrap();
    let stereo = generated(stereo_kg(m, Sign::Plus).unwrap(), m);
    let pts = points(&[SingularSet::origin(), SingularSet::negative_z_axis()], 13, 200);
    let rotations = [(Z, 0.8), (X, -1.3), ([0.48, 0.6, 0.64], 2.9), ([0.0, -0.6, 0.8], 5.1)];

    for (name, sol) in [("yukawa-spinor", &yk), ("spinor-broglie", &br)] {
        for (axis, phi) in rotations {
            let s = sl2c_rotation(axis, phi).unwrap();
            let out = transform_alternative(sol, &s).unwrap();
            c.at_most(
                format!("(a) alternative {axis:?} {phi} keeps {name}"),
                gap(&out, sol, &pts),
                1e-10,
            );
        }
        for phi in [0.8, -2.0, 4.0] {
            let out = transform_canonical(sol, &sl2c_rotation(Z, phi).unwrap()).unwrap();
            let expected = sol.scaled(Complex64::from_polar(1.0, -0.5 * phi));
            c.at_most(
                format!("(b) canonical z {phi} phase on {name}"),
                gap(&out, &expected, &pts),
                1e-10,
            );
        }
    }

    for phi in [0.8, -2.0, 4.0] {
        let out = transform_alternative(&stereo, &sl2c_rotation(Z, phi).unwrap()).unwrap();
        let expected = stereo.scaled(Complex64::from_polar(1.0, phi));
        c.at_most(
            format!("(c) alternative z {phi} phase on stereo"),
            gap(&out, &expected, &pts),
            1e-9,
        );
    }

    for (name, sol) in [("yukawa-spinor", &yk), ("spinor-broglie", &br), ("stereo", &stereo)] {
        for axis in [Z, X, [0.48, 0.6, 0.64]] {
            let s = sl2c_rotation(axis, 2.0 * PI).unwrap();
            let alt = transform_alternative(sol, &s).unwrap();
            let can = transform_canonical(sol, &s).unwrap();
            c.at_most(
                format!("(d) alternative 2pi {axis:?} identity on {name}"),
                gap(&alt, sol, &pts),
                1e-12,
            );
            let minus = sol.scaled(Complex64::new(-1.0, 0.0));
            c.at_most(
                format!("(d) canonical 2pi {axis:?} is -1 on {name}"),
                gap(&can, &minus, &pts),
                1e-12,
            );
        }
    }

    for g2 in [1.0, -1.0] {
        let base = yukawa_spinor(m, g2).unwrap();
        for th in [0.3, 1.0] {
            let s = sl2c_boost(Z, th).unwrap();
            let can = transform_canonical(&base, &s).unwrap();
            let alt = transform_alternative(&base, &s).unwrap();
            let bpts = points_for(&[&can, &alt], 17, 200);
            let scaled = can.scaled(Complex64::new((-0.5 * th).exp(), 0.0));
            c.at_most(
                format!("(e) g2={g2} theta={th} alternative = e^(-theta/2) canonical"),
                gap(&alt, &scaled, &bpts),
                1e-9,
            );
            let closed_can = yukawa_spinor_boosted_z(m, g2, th, true).unwrap();
            let closed_alt = yukawa_spinor_boosted_z(m, g2, th, false).unwrap();
            c.at_most(
                format!("(e) g2={g2} theta={th} canonical closed form"),
                gap(&can, &closed_can, &bpts),
                1e-9,
            );
            c.at_most(
                format!("(e) g2={g2} theta={th} alternative closed form"),
                gap(&alt, &closed_alt, &bpts),
                1e-9,
            );
        }
    }

    let lorentz = [
        sl2c_rotation(Z, 0.8).unwrap(),
        sl2c_boost([0.0, 0.6, 0.8], 0.5).unwrap() * sl2c_rotation(X, 1.1).unwrap(),
        sl2c_boost(X, -0.9).unwrap(),
    ];
    for (i, s) in lorentz.iter().enumerate() {
        for (name, sol) in [("yukawa-spinor", &yk), ("stereo", &stereo)] {
            let general = transform_general(sol, s, s).unwrap();
            let canonical = transform_canonical(sol, s).unwrap();
            let gpts = points_for(&[&general, &canonical], 19, 200);
            c.at_most(
                format!("(f) general M=S #{i} on {name}"),
                gap(&general, &canonical, &gpts),
                1e-10,
            );
        }
    }

    let s = sl2c_rotation(X, 0.9).unwrap();
    let can = transform_canonical(&stereo, &s).unwrap();
    let alt = transform_alternative(&stereo, &s).unwrap();
    let xpts = points_for(&[&can, &alt], 23, 200);
    let ratios: Vec<Complex64> = xpts
        .iter()
        .flat_map(|p| {
            let (a, b) = (alt.eval(p), can.eval(p));
            (0..4).filter(move |&j| b[j].norm() > 1e-6).map(move |j| a[j] / b[j])
        })
        .collect();
    let spread = ratios.iter().map(|r| (r - ratios[0]).norm()).fold(0.0, f64::max);
    c.above("(g) x rotation of stereo: ratio spread", spread, 1e-3);
    let (resid, _) = ratio(&alt, &can, &xpts);
    c.above("(g) x rotation of stereo: least-squares misfit", resid, 1e-3);
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::default();
    let m = 1.0;
    let catalog = [
        ("yukawa-spinor", yukawa_spinor(m, 1.0).unwrap()),
        ("chain-yukawa-2", chain_yukawa_2(m).unwrap()),
        ("spinor-broglie", spinor_broglie(m, 0.7).unwrap()),
        ("coulomb-kg", generated(coulomb_kg(m, Sign::Plus).unwrap(), m)),
        ("stereo-kg", generated(stereo_kg(m, Sign::Minus).unwrap(), m)),
        ("stereo-coulomb", generated(stereo_coulomb_static(m).unwrap(), m)),
        ("plane-wave", generated(plane_wave_kg(m, [0.3, -0.2, 0.5]).unwrap(), m)),
    ];
    for (name, sol) in &catalog {
        let pts = points_for(&[sol], 29, 300);
        let min_rho = pts
            .iter()
            .map(|p| rho_dirac(sol, p).unwrap())
            .fold(f64::INFINITY, f64::min);
        let min_energy = pts
            .iter()
            .map(|p| energy_kg(sol, p).unwrap())
            .fold(f64::INFINITY, f64::min);
        c.holds(format!("{name}: rho_dirac >= 0"), min_rho >= 0.0);
        c.holds(format!("{name}: energy_kg >= 0"), min_energy >= 0.0);
        let worst = pts
            .iter()
            .map(|p| {
                let l = lagrangian_dirac(sol, p).unwrap();
                let (a, b) = (sol.a.eval(p), sol.b.eval(p));
                let wa = apply_weyl(&sol.a, p, WeylVariant::W).unwrap();
                let wtb = apply_weyl(&sol.b, p, WeylVariant::WTilde).unwrap();
                let n = |v: &[Complex64; 2]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                let scale = 2.0 * (n(&a) * n(&wa) + n(&b) * n(&wtb)) + 4.0 * m * n(&a) * n(&b);
                l.abs() / scale.max(1e-300)
            })
            .fold(0.0, f64::max);
        c.at_most(format!("{name}: relative Dirac Lagrangian"), worst, 1e-9);
    }

    let yk = yukawa_spinor(m, 1.0).unwrap();
    let pts = points_for(&[&yk], 31, 300);
    let static_rho = pts.iter().map(|p| rho_kg(&yk, p).unwrap().abs()).fold(0.0, f64::max);
    c.at_most("static yukawa-spinor rho_kg", static_rho, 1e-12);

    for psi in [0.3, 0.7, 1.2] {
        let sol = spinor_broglie(m, psi).unwrap();
        let omega = m * psi.sin();
        let pts = points_for(&[&sol], 37, 300);
        let worst = pts
            .iter()
            .map(|p| {
                let (kg, d) = (rho_kg(&sol, p).unwrap(), rho_dirac(&sol, p).unwrap());
                (kg - omega * d).abs() / d.max(1.0)
            })
            .fold(0.0, f64::max);
        c.at_most(
            format!("spinor-broglie psi={psi}: rho_kg = omega rho_dirac"),
            worst,
            1e-10,
        );
    }

    for r in [0.5f64, 1.0, 2.0] {
        let expected = 2.0 / (r * r) * (-2.0 * r).exp() * (1.0 + (1.0 + r) * (1.0 + r) / (r * r));
        let actual = rho_dirac(&yk, &SpacetimePoint::at(0.0, [0.0, r * 0.6, r * 0.8])).unwrap();
        c.at_most(
            format!("yukawa-spinor rho_dirac profile at r={r}"),
            (actual - expected).abs() / expected,
            1e-12,
        );
    }
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::default();
    c.at_most(
        "gamma anticommutators",
        GammaBasis::dirac().anticommutator_defect(),
        1e-14,
    );
    let m = 1.3;
    let pts = points(&[], 41, 60);
    for seed in [1u64, 2, 3] {
        let phi = [0, 1, 2, 3].map(|k| smooth_field(seeded_coefficients(100 * seed + k)));
        let dd_star = dirac_field_4d(&dirac_field_4d(&phi, m, DiracVariant::DStar), m, DiracVariant::D);
        let d_star_d = dirac_field_4d(&dirac_field_4d(&phi, m, DiracVariant::D), m, DiracVariant::DStar);
        let spinor = Spinor2Field::new(phi[0].clone(), phi[1].clone());
        let w_wt = weyl_field(&weyl_field(&spinor, WeylVariant::WTilde), WeylVariant::W);
        let wt_w = weyl_field(&weyl_field(&spinor, WeylVariant::W), WeylVariant::WTilde);
        let boxes = [dalembert_field(&phi[0]), dalembert_field(&phi[1])];
        let (mut d_worst, mut w_worst) = (0.0f64, 0.0f64);
        for p in &pts {
            for i in 0..4 {
                let kg = kg_residual(&phi[i], m, p).unwrap();
                let scale = 1.0 + kg.norm();
                d_worst = d_worst.max((dd_star[i].eval(p) - kg).norm() / scale);
                d_worst = d_worst.max((d_star_d[i].eval(p) - kg).norm() / scale);
            }
            let (a, b) = (w_wt.eval(p), wt_w.eval(p));
            for i in 0..2 {
                let minus_box = -boxes[i].eval(p);
                let scale = 1.0 + minus_box.norm();
                w_worst = w_worst.max((a[i] - minus_box).norm() / scale);
                w_worst = w_worst.max((b[i] - minus_box).norm() / scale);
            }
        }
        c.at_most(format!("field set {seed}: DD* = D*D = box - m^2"), d_worst, 1e-9);
        c.at_most(format!("field set {seed}: WW~ = W~W = -box"), w_worst, 1e-9);

        let sol = DiracSolutionChiral::new(
            Spinor2Field::new(phi[0].clone(), phi[1].clone()),
            Spinor2Field::new(phi[2].clone(), phi[3].clone()),
            m,
        )
        .unwrap();
        let psi = bispinor_from_chiral(&sol);
        let back = chiral_from_bispinor(&psi);
        let mut worst = gap(&back, &sol, &pts);
        for p in &pts {
            let (r1, r2) = dirac_residual_chiral(&sol, p).unwrap();
            let via_chiral = dirac_4d_from_chiral_residual(&r1, &r2);
            let direct = apply_dirac_4d(&psi, p, DiracVariant::D).unwrap();
            for i in 0..4 {
                worst = worst.max((via_chiral[i] - direct[i]).norm() / (1.0 + direct[i].norm()));
            }
        }
        c.at_most(format!("field set {seed}: 4D and chiral residuals agree"), worst, 1e-10);
    }
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::default();
    let wc = weyl_coulomb();
    let mu = dalembert_stereo();
    let pts = points(&[SingularSet::negative_z_axis()], 43, 300);
    let (alpha, beta) = potentials_single(&mu).unwrap();
    let closed_gap = pts
        .iter()
        .map(|p| {
            let r = (p.x * p.x + p.y * p.y + p.z * p.z).sqrt();
            let a = Complex64::new(0.5 / r, 0.0);
            let b = -mu.eval(p) / (2.0 * r);
            (alpha.eval(p) - a)
                .norm()
                .max((beta.eval(p) - b).norm())
                .max((wc.alpha().eval(p) - a).norm())
                .max((wc.beta().eval(p) - b).norm())
        })
        .fold(0.0, f64::max);
    c.at_most("single potential gives alpha = 1/2r, beta = -mu/2r", closed_gap, 1e-10);

    let row = PotentialRow {
        zeta: lower(mu.clone()),
    };
    let ws = weyl_from_potentials(&row).unwrap();
    // The row generator is W(0, mu), which carries the fixed factor −2 of the
    // null-coordinate operators relative to (alpha, −beta).
    let row_gap = pts
        .iter()
        .map(|p| {
            let (g, w) = (ws.psi.eval(p), wc.psi.eval(p));
            (g[0] + w[0] * 2.0).norm().max((g[1] + w[1] * 2.0).norm())
        })
        .fold(0.0, f64::max);
    c.at_most("weyl_from_potentials(0, mu) = -2 (alpha, -beta)", row_gap, 1e-10);

    let kappas = [
        (
            "massless plane waves",
            Spinor2Field::new(massless_wave([0.3, 0.0, 0.4]), massless_wave([-0.1, 0.5, 0.2])),
        ),
        (
            "stereographic",
            Spinor2Field::new(mu.scaled(Complex64::new(0.0, 1.0)), mu.clone()),
        ),
        (
            "mixed",
            Spinor2Field::new(massless_wave([0.0, -0.7, 0.1]), mu.scaled(Complex64::new(2.0, 0.0))),
        ),
    ];
    for (name, kappa) in kappas {
        let shifted = weyl_from_potentials(&weyl_gauge_shift(&row, &kappa).unwrap()).unwrap();
        let diff = pts
            .iter()
            .map(|p| {
                let (a, b) = (shifted.psi.eval(p), ws.psi.eval(p));
                (a[0] - b[0]).norm().max((a[1] - b[1]).norm())
            })
            .fold(0.0, f64::max);
        c.at_most(format!("Weyl gauge shift by {name}"), diff, 1e-9);
    }
    c.at_most(
        "Weyl residual of the catalog solution",
        weyl_residual_max(&wc, &SampleConfig::with_seed(42, 500)).unwrap(),
        1e-10,
    );
    c
}

fn run_cli(args: &[&str], threads: Option<&str>) -> (Vec<u8>, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_relfield"));
    cmd.args(args);
    if let Some(n) = threads {
        cmd.env("RELFIELD_THREADS", n);
    }
    let out = cmd.output().expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::default();
    let batch_file = std::env::temp_dir().join(format!("relfield-acceptance-{}.txt", std::process::id()));
    std::fs::write(
        &batch_file,
        "verify --solution stereo-kg --seed 9 --count 100\ncharge --psi 0.4\nverify --solution nope\n",
    )
    .unwrap();
    let batch_path = batch_file.to_str().unwrap().to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec!["verify", "--solution", "yukawa-spinor", "--seed", "42"],
        vec![
            "verify",
            "--solution",
            "stereo-coulomb",
            "--seed",
            "7",
            "--count",
            "300",
        ],
        vec!["chain", "--base", "yukawa", "--depth", "3", "--seed", "5"],
        vec![
            "transform",
            "--solution",
            "stereo-kg",
            "--law",
            "alternative",
            "--kind",
            "boost",
            "--axis",
            "0.2,0.3,0.9",
            "--angle",
            "0.6",
            "--seed",
            "3",
        ],
        vec![
            "transform",
            "--solution",
            "yukawa",
            "--law",
            "general",
            "--mix-equals-s",
            "--kind",
            "rotation",
            "--axis",
            "x",
            "--angle",
            "1.1",
        ],
        vec!["charge", "--psi", "1.0"],
        vec![
            "profile",
            "--solution",
            "yukawa-spinor",
            "--r-min",
            "0.05",
            "--steps",
            "20",
        ],
        vec!["batch", "--input", &batch_path],
    ];
    for args in &runs {
        let (first, code) = run_cli(args, None);
        let (second, _) = run_cli(args, None);
        let (single, _) = run_cli(args, Some("1"));
        let name = args[..2].join(" ");
        c.holds(format!("{name}: produced output"), !first.is_empty() && code >= 0);
        c.holds(format!("{name}: identical across runs"), first == second);
        c.holds(format!("{name}: identical with one thread"), first == single);
    }
    let _ = std::fs::remove_file(batch_file);
    c
}

type Entry = (&'static str, fn() -> Criterion);

fn main() -> ExitCode {
    let criteria: [Entry; 9] = [
        ("generation soundness", criterion_1),
        ("closed-form reproduction", criterion_2),
        ("field charge", criterion_3),
        ("gauge invariance", criterion_4),
        ("transformation laws", criterion_5),
        ("conserved quantities", criterion_6),
        ("operator identities", criterion_7),
        ("massless case", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut all = true;
    for (i, (title, f)) in criteria.iter().enumerate() {
        all &= f().report(i + 1, title);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
