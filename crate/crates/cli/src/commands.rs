//! Subcommand implementations. Each returns an [`Outcome`]; errors are
//! mapped to exit codes by the caller.

use std::f64::consts::PI;

use clap::{Args, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use relfield::conserved::{energy_dirac, energy_kg, field_charge_radial, rho_dirac, rho_kg, QuadratureConfig};
use relfield::fields::{broglie_kg, chain_yukawa_2, spinor_broglie, yukawa, yukawa_spinor};
use relfield::generator::{chain_next, complete_to_dirac};
use relfield::massless::{dalembert_stereo, weyl_from_potentials, weyl_residual_report};
use relfield::transforms::{transform_canonical, yukawa_spinor_boosted_z};
use relfield::verify::{
    compare_fields, dirac_residual_report, kg_residual_report, sample_points, solution_values, CompareMode, Comparison,
};
use relfield::{
    sl2c_boost, sl2c_rotation, Component, DiracSolutionChiral, Error, Mat2C, PotentialRow, Result, SampleConfig, Slot,
    SpacetimePoint, Spinor2Field, TransformLaw,
};

use crate::catalog::{complex_json, lookup, parse_vec3, Entry, Params, SPHERICAL};

pub enum Body {
    Json(Value),
    Csv(String),
}

pub struct Outcome {
    pub body: Body,
    pub pass: bool,
}

/// A quantitative reference value: passes when `|actual − expected| ≤ tol`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub actual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, expected: f64, actual: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            expected,
            actual,
            tol,
            pass: (actual - expected).abs() <= tol,
        }
    }

    /// A difference that should vanish.
    fn gap(name: impl Into<String>, actual: f64, tol: f64) -> Self {
        Self::new(name, 0.0, actual, tol)
    }
}

fn document(config: Value, report: Value, checks: Vec<Check>, report_pass: bool) -> Outcome {
    let pass = report_pass && checks.iter().all(|c| c.pass);
    Outcome {
        body: Body::Json(json!({
            "config": config,
            "report": report,
            "reference_checks": checks,
        })),
        pass,
    }
}

fn echo(command: &str, args: &impl Serialize) -> Value {
    let mut v = serde_json::to_value(args).expect("arguments serialize");
    if let Value::Object(map) = &mut v {
        map.insert("command".into(), command.into());
    }
    v
}

/// Sampling flags.
#[derive(Debug, Clone, Args, Serialize)]
pub struct SampleArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Number of sample points.
    #[arg(long, default_value_t = 500)]
    pub count: usize,
    /// Spatial half-width of the sampling box.
    #[arg(long, default_value_t = 3.0)]
    pub box_half_width: f64,
    /// Radius of the tube excluded around singular sets.
    #[arg(long, default_value_t = 0.1)]
    pub exclusion: f64,
    /// Times are drawn from `[−T, T]`.
    #[arg(long, default_value_t = 2.0)]
    pub time_window: f64,
}

impl SampleArgs {
    pub fn config(&self) -> SampleConfig {
        SampleConfig {
            seed: self.seed,
            count: self.count,
            box_half_width: self.box_half_width,
            exclusion_radius: self.exclusion,
            time_window: self.time_window,
        }
    }
}

fn points_for(cfg: &SampleConfig, sols: &[&DiracSolutionChiral]) -> Result<Vec<SpacetimePoint>> {
    let sets: Vec<_> = sols.iter().map(|s| s.singular_set()).collect();
    sample_points(cfg, &sets)
}

fn compare(
    x: &DiracSolutionChiral,
    y: &DiracSolutionChiral,
    points: &[SpacetimePoint],
    mode: CompareMode,
) -> Result<Comparison> {
    compare_fields(solution_values(x), solution_values(y), points, mode)
}

fn comparison_json(c: &Comparison) -> Value {
    json!({
        "max_diff": c.max_diff,
        "constant": c.constant.map(complex_json),
    })
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    /// Catalog id.
    #[arg(long)]
    pub solution: String,
    #[command(flatten)]
    #[serde(flatten)]
    pub params: Params,
    #[command(flatten)]
    #[serde(flatten)]
    pub sample: SampleArgs,
    /// Largest admissible relative residual.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome> {
    let entry = lookup(&args.solution, &args.params)?;
    let cfg = args.sample.config();
    let m = args.params.m;
    let mut report = serde_json::Map::new();
    let mut worst: f64 = 0.0;
    match &entry {
        Entry::Scalar(f) => {
            let kg = kg_residual_report(f, m, &cfg)?;
            let dirac = dirac_residual_report(&entry.dirac(&args.solution, m)?, &cfg)?;
            worst = worst.max(kg.max_rel).max(dirac.max_rel);
            report.insert("kg".into(), json!(kg));
            report.insert("dirac".into(), json!(dirac));
        }
        Entry::Dirac(sol) => {
            let dirac = dirac_residual_report(sol, &cfg)?;
            worst = worst.max(dirac.max_rel);
            report.insert("dirac".into(), json!(dirac));
        }
        Entry::Weyl(ws) => {
            let weyl = weyl_residual_report(ws, &cfg)?;
            worst = worst.max(weyl.max_rel);
            report.insert("weyl".into(), json!(weyl));
        }
        Entry::Dalembert(f) => {
            let dal = kg_residual_report(f, 0.0, &cfg)?;
            worst = worst.max(dal.max_rel);
            report.insert("dalembert".into(), json!(dal));
        }
    }
    let checks = verify_checks(&args.solution, &entry, &args.params, &cfg)?;
    Ok(document(
        echo("verify", args),
        Value::Object(report),
        checks,
        worst <= args.tol,
    ))
}

/// Closed forms the catalog entry must reproduce.
fn verify_checks(id: &str, entry: &Entry, p: &Params, cfg: &SampleConfig) -> Result<Vec<Check>> {
    let m = p.m;
    let mut checks = Vec::new();
    match id {
        "yukawa" | "yukawa-spinor" => {
            let generated = complete_to_dirac(&Spinor2Field::lower(yukawa(m, p.g2)?), m)?;
            let closed = yukawa_spinor(m, p.g2)?;
            let pts = points_for(cfg, &[&closed])?;
            let c = compare(&generated, &closed, &pts, CompareMode::Absolute)?;
            checks.push(Check::gap("yukawa-spinor-closed-form", c.max_diff, 1e-10));
        }
        "broglie" | "spinor-broglie" => {
            let generated = complete_to_dirac(&Spinor2Field::lower(broglie_kg(m, p.psi)?), m)?;
            let closed = spinor_broglie(m, p.psi)?;
            let pts = points_for(cfg, &[&closed])?;
            let c = compare(&generated, &closed, &pts, CompareMode::Absolute)?;
            checks.push(Check::gap("spinor-broglie-closed-form", c.max_diff, 1e-10));
        }
        "chain-yukawa-2" => {
            let closed = chain_yukawa_2(m)?;
            let chained = chain_next(&yukawa_spinor(m, p.g2)?, Component::First, Slot::Lower);
            let pts = points_for(cfg, &[&closed])?;
            let c = compare(&chained, &closed, &pts, CompareMode::UpToGlobalConstant)?;
            checks.push(Check::gap("chain-yukawa-2-up-to-constant", c.max_diff, 1e-9));
        }
        "weyl-coulomb" => {
            let Entry::Weyl(ws) = entry else { unreachable!() };
            let row = PotentialRow {
                zeta: Spinor2Field::lower(dalembert_stereo()),
            };
            let generated = weyl_from_potentials(&row)?;
            let pts = sample_points(cfg, &[ws.psi.singular_set()])?;
            let diff = pts
                .iter()
                .flat_map(|q| {
                    let g = generated.psi.eval(q);
                    let w = ws.psi.eval(q);
                    [(g[0] / -2.0 - w[0]).norm(), (g[1] / -2.0 - w[1]).norm()]
                })
                .fold(0.0, f64::max);
            checks.push(Check::gap("weyl-coulomb-from-potentials", diff, 1e-10));
        }
        _ => {}
    }
    Ok(checks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompArg {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SlotArg {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ChainArgs {
    /// Catalog id of the first level.
    #[arg(long)]
    pub base: String,
    /// Number of levels, counting the base.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub depth: u32,
    /// Component of `b` promoted to the next generating scalar.
    #[arg(long, value_enum, default_value_t = CompArg::First)]
    pub comp: CompArg,
    /// Slot of `a` that receives it.
    #[arg(long, value_enum, default_value_t = SlotArg::Lower)]
    pub slot: SlotArg,
    #[command(flatten)]
    #[serde(flatten)]
    pub params: Params,
    #[command(flatten)]
    #[serde(flatten)]
    pub sample: SampleArgs,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

pub fn chain(args: &ChainArgs) -> Result<Outcome> {
    let m = args.params.m;
    let cfg = args.sample.config();
    let comp = match args.comp {
        CompArg::First => Component::First,
        CompArg::Second => Component::Second,
    };
    let slot = match args.slot {
        SlotArg::Upper => Slot::Upper,
        SlotArg::Lower => Slot::Lower,
    };
    let mut sol = lookup(&args.base, &args.params)?.dirac(&args.base, m)?;
    let mut levels = Vec::new();
    let mut pass = true;
    let mut level2 = None;
    for level in 1..=args.depth {
        if level > 1 {
            sol = chain_next(&sol, comp, slot);
        }
        let report = dirac_residual_report(&sol, &cfg)?;
        pass &= report.max_rel <= args.tol;
        let pts = points_for(&cfg, &[&sol])?;
        let values = pts.iter().flat_map(|q| sol.eval(q)).map(|c| c.norm());
        let scale = values.fold(0.0, f64::max);
        let gap = compare_fields(
            |q| sol.a.eval(q).to_vec(),
            |q| sol.b.eval(q).to_vec(),
            &pts,
            CompareMode::Absolute,
        )?;
        levels.push(json!({
            "level": level,
            "report": report,
            "fixed_point": gap.max_diff <= 1e-12 * scale.max(1e-300),
        }));
        if level == 2 {
            level2 = Some(sol.clone());
        }
    }
    let mut checks = Vec::new();
    let mut closed_form = Value::Null;
    let yukawa_base = matches!(args.base.as_str(), "yukawa" | "yukawa-spinor");
    if let (true, Some(l2), Component::First, Slot::Lower) = (yukawa_base, &level2, comp, slot) {
        let reference = chain_yukawa_2(m)?;
        let pts = points_for(&cfg, &[&reference])?;
        let c = compare(l2, &reference, &pts, CompareMode::UpToGlobalConstant)?;
        closed_form = comparison_json(&c);
        checks.push(Check::gap("chain-yukawa-2-up-to-constant", c.max_diff, 1e-9));
    }
    Ok(document(
        echo("chain", args),
        json!({"levels": levels, "closed_form": closed_form}),
        checks,
        pass,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawArg {
    Canonical,
    Alternative,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KindArg {
    Rotation,
    Boost,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TransformArgs {
    #[arg(long)]
    pub solution: String,
    #[arg(long, value_enum)]
    pub law: LawArg,
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// `x`, `y`, `z` or a direction `nx,ny,nz` (normalized).
    #[arg(long, default_value = "z", allow_hyphen_values = true)]
    pub axis: String,
    /// Rotation angle or rapidity.
    #[arg(long, alias = "rapidity", allow_negative_numbers = true)]
    pub angle: f64,
    /// Use the Lorentz matrix itself as the internal mix (general law).
    #[arg(long)]
    pub mix_equals_s: bool,
    /// Internal mix matrix as eight numbers `re,im` per entry, row-major.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "mix_equals_s"
    )]
    pub mix: Option<Vec<f64>>,
    #[command(flatten)]
    #[serde(flatten)]
    pub params: Params,
    #[command(flatten)]
    #[serde(flatten)]
    pub sample: SampleArgs,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

fn parse_axis(s: &str) -> Result<[f64; 3]> {
    let v = match s {
        "x" => [1.0, 0.0, 0.0],
        "y" => [0.0, 1.0, 0.0],
        "z" => [0.0, 0.0, 1.0],
        _ => parse_vec3(s).map_err(|e| Error::InvalidConfig(format!("bad axis `{s}`: {e}")))?,
    };
    let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
    if !(n > 0.0 && n.is_finite()) {
        return Err(Error::InvalidConfig(format!("axis `{s}` has no direction")));
    }
    Ok(v.map(|c| c / n))
}

/// Number of whole turns when `angle` is within `1e−9` rad of one.
fn full_turns(angle: f64) -> Option<i64> {
    let k = (angle / (2.0 * PI)).round();
    (k != 0.0 && (angle - 2.0 * PI * k).abs() < 1e-9).then_some(k as i64)
}

pub fn transform(args: &TransformArgs) -> Result<Outcome> {
    let m = args.params.m;
    let cfg = args.sample.config();
    let axis = parse_axis(&args.axis)?;
    // Decimal input of a full turn is snapped so that the turn is exact.
    let turns = match args.kind {
        KindArg::Rotation => full_turns(args.angle),
        KindArg::Boost => None,
    };
    let angle = turns.map_or(args.angle, |k| 2.0 * PI * k as f64);
    let s = match args.kind {
        KindArg::Rotation => sl2c_rotation(axis, angle)?,
        KindArg::Boost => sl2c_boost(axis, angle)?,
    };
    let mix = match (&args.mix, args.mix_equals_s) {
        (_, true) => Some(s),
        (Some(v), false) if v.len() != 8 => {
            return Err(Error::InvalidConfig(format!("--mix needs 8 numbers, got {}", v.len())));
        }
        (Some(v), false) => Some(Mat2C::new(
            Complex64::new(v[0], v[1]),
            Complex64::new(v[2], v[3]),
            Complex64::new(v[4], v[5]),
            Complex64::new(v[6], v[7]),
        )),
        (None, false) => None,
    };
    let tag = match args.law {
        LawArg::Canonical => "canonical",
        LawArg::Alternative => "alternative",
        LawArg::General => "general",
    };
    let law = TransformLaw::new(tag, s, mix)?;
    let sol = lookup(&args.solution, &args.params)?.dirac(&args.solution, m)?;
    let out = law.apply(&sol)?;
    let report = dirac_residual_report(&out, &cfg)?;
    let pts = points_for(&cfg, &[&sol, &out])?;
    let ratio = match compare(&out, &sol, &pts, CompareMode::UpToGlobalConstant) {
        Ok(c) => comparison_json(&c),
        Err(Error::ZeroReference) => Value::Null,
        Err(e) => return Err(e),
    };

    let id = args.solution.as_str();
    let spherical = SPHERICAL.contains(&id);
    let along_z = axis == [0.0, 0.0, 1.0];
    let gap_to = |expected: &DiracSolutionChiral| -> Result<f64> {
        Ok(compare(&out, expected, &pts, CompareMode::Absolute)?.max_diff)
    };
    let mut checks = Vec::new();
    let canonical_like = matches!(law, TransformLaw::Canonical { .. }) || args.mix_equals_s;
    match args.kind {
        KindArg::Rotation => {
            if let Some(k) = turns {
                let sign = if canonical_like && k % 2 != 0 { -1.0 } else { 1.0 };
                let name = if sign < 0.0 {
                    "full-turn-sign-flip"
                } else {
                    "full-turn-identity"
                };
                if canonical_like || matches!(law, TransformLaw::Alternative { .. }) {
                    checks.push(Check::gap(name, gap_to(&sol.scaled(Complex64::new(sign, 0.0)))?, 1e-12));
                }
            }
            if spherical && matches!(law, TransformLaw::Alternative { .. }) {
                checks.push(Check::gap("rotation-invariance", gap_to(&sol)?, 1e-10));
            }
            if spherical && along_z && canonical_like {
                let phase = Complex64::from_polar(1.0, -0.5 * angle);
                checks.push(Check::gap("phase-minus-half-angle", gap_to(&sol.scaled(phase))?, 1e-10));
            }
            if id == "stereo-kg" && along_z && matches!(law, TransformLaw::Alternative { .. }) {
                let phase = Complex64::from_polar(1.0, angle);
                checks.push(Check::gap("phase-plus-angle", gap_to(&sol.scaled(phase))?, 1e-9));
            }
        }
        KindArg::Boost => {
            let yukawa_like = matches!(id, "yukawa" | "yukawa-spinor");
            let plain = matches!(law, TransformLaw::Alternative { .. });
            if yukawa_like && along_z && (canonical_like || plain) {
                let closed = yukawa_spinor_boosted_z(m, args.params.g2, angle, canonical_like)?;
                checks.push(Check::gap("boosted-yukawa-closed-form", gap_to(&closed)?, 1e-9));
            }
        }
    }
    if args.mix_equals_s {
        let canonical = transform_canonical(&sol, &s)?;
        checks.push(Check::gap("general-equals-canonical", gap_to(&canonical)?, 1e-10));
    }
    Ok(document(
        echo("transform", args),
        json!({"angle_used": angle, "transformed": report, "relative_to_input": ratio}),
        checks,
        report.max_rel <= args.tol,
    ))
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ChargeArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub psi: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub m: f64,
    /// Relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-9)]
    pub rel_tol: f64,
}

pub fn charge(args: &ChargeArgs) -> Result<Outcome> {
    let cfg = QuadratureConfig {
        rel_tol: args.rel_tol,
        ..QuadratureConfig::default()
    };
    let q = field_charge_radial(args.m, args.psi, &cfg)?;
    let analytic = 0.5 * args.psi.tan();
    let gap = (q.value - analytic).abs();
    let deviation = if analytic == 0.0 { gap } else { gap / analytic };
    let check = Check::new("half-tan-psi", analytic, q.value, args.rel_tol * analytic.max(1.0));
    let pass = deviation <= args.rel_tol;
    Ok(document(
        echo("charge", args),
        json!({
            "value": q.value,
            "abs_error_estimate": q.abs_error_estimate,
            "truncation_radius": q.truncation_radius,
            "analytic": analytic,
            "deviation": deviation,
        }),
        vec![check],
        pass,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensityArg {
    RhoDirac,
    RhoKg,
    EnergyDirac,
    EnergyKg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ProfileArgs {
    #[arg(long)]
    pub solution: String,
    #[arg(long, value_enum, default_value_t = DensityArg::RhoDirac)]
    pub density: DensityArg,
    #[arg(long, default_value_t = 0.1)]
    pub r_min: f64,
    #[arg(long, default_value_t = 3.0)]
    pub r_max: f64,
    /// Number of rows.
    #[arg(long, default_value_t = 30)]
    pub steps: usize,
    /// Time slice.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub t: f64,
    /// Rows with `r` below this radius are flagged `near-singular`.
    #[arg(long, default_value_t = 0.1)]
    pub exclusion: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub params: Params,
}

/// Unit directions at which spherical symmetry is checked; the first one
/// supplies the reported value.
const DIRECTIONS: [[f64; 3]; 6] = [
    [1.0, 0.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, 0.0, 1.0],
    [0.48, 0.6, 0.64],
    [-0.6, 0.0, 0.8],
    [0.0, -0.8, 0.6],
];

const SYMMETRY_TOL: f64 = 1e-9;

pub fn profile(args: &ProfileArgs) -> Result<Outcome> {
    if args.steps == 0 || !(args.r_max >= args.r_min && args.r_min >= 0.0) {
        return Err(Error::InvalidConfig("need steps ≥ 1 and 0 ≤ r_min ≤ r_max".into()));
    }
    let sol = lookup(&args.solution, &args.params)?.dirac(&args.solution, args.params.m)?;
    let density: fn(&DiracSolutionChiral, &SpacetimePoint) -> Result<f64> = match args.density {
        DensityArg::RhoDirac => rho_dirac,
        DensityArg::RhoKg => rho_kg,
        DensityArg::EnergyDirac => energy_dirac,
        DensityArg::EnergyKg => energy_kg,
    };
    let mut csv = String::from("r,value,flag\n");
    for i in 0..args.steps {
        let r = if args.steps == 1 {
            args.r_min
        } else {
            args.r_min + (args.r_max - args.r_min) * i as f64 / (args.steps - 1) as f64
        };
        let values: Vec<Option<f64>> = DIRECTIONS
            .iter()
            .map(|d| density(&sol, &SpacetimePoint::at(args.t, d.map(|c| c * r))).ok())
            .collect();
        let regular: Vec<f64> = values.iter().flatten().copied().collect();
        if let Some(&first) = regular.first() {
            let spread = regular.iter().map(|v| (v - first).abs()).fold(0.0, f64::max);
            if spread > SYMMETRY_TOL * first.abs().max(1.0) {
                return Err(Error::InvalidConfig(format!(
                    "density of `{}` is not spherically symmetric (spread {spread:e} at r = {r})",
                    args.solution
                )));
            }
        }
        let value = values[0].map_or_else(|| "NaN".to_string(), |v| format!("{v:e}"));
        let flag = if r < args.exclusion { "near-singular" } else { "" };
        csv.push_str(&format!("{r},{value},{flag}\n"));
    }
    Ok(Outcome {
        body: Body::Csv(csv),
        pass: true,
    })
}
