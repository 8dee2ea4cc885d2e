//! Solution ids understood by the command line.

use clap::{Args, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use relfield::fields::{
    broglie_kg, chain_yukawa_2, coulomb_kg, plane_wave_kg, spinor_broglie, stereo_coulomb_static, stereo_kg, yukawa,
    yukawa_spinor,
};
use relfield::generator::complete_to_dirac;
use relfield::massless::{dalembert_stereo, weyl_coulomb};
use relfield::{DiracSolutionChiral, Error, Result, ScalarField, Sign, Spinor2Field, WeylSolution};

pub const IDS: &[&str] = &[
    "coulomb-kg",
    "stereo-kg",
    "yukawa",
    "stereo-coulomb",
    "broglie",
    "plane-wave",
    "yukawa-spinor",
    "chain-yukawa-2",
    "spinor-broglie",
    "weyl-coulomb",
    "dalembert-stereo",
    "zero",
];

/// Ids whose generating scalar depends on `r` and `t` only.
pub const SPHERICAL: &[&str] = &[
    "coulomb-kg",
    "yukawa",
    "broglie",
    "yukawa-spinor",
    "spinor-broglie",
    "zero",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

/// Physical parameters shared by all catalog entries.
#[derive(Debug, Clone, Args, Serialize)]
pub struct Params {
    /// Mass.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub m: f64,
    /// Yukawa coupling `g²`.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub g2: f64,
    /// Angle `ψ ∈ [0, π/2]` of the localized stationary solution.
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub psi: f64,
    /// Plane-wave momentum `kx,ky,kz`.
    #[arg(long, default_value = "0,0,0", value_parser = parse_vec3, allow_hyphen_values = true)]
    pub k: [f64; 3],
    /// Sign of the time phase for the Coulomb and stereographic scalars.
    #[arg(long, value_enum, default_value_t = SignArg::Plus)]
    pub sign: SignArg,
}

pub fn parse_vec3(s: &str) -> std::result::Result<[f64; 3], String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected three comma-separated numbers, got {}", v.len()))
}

pub enum Entry {
    /// Klein-Gordon scalar used as the lower component of `a`.
    Scalar(ScalarField),
    Dirac(DiracSolutionChiral),
    Weyl(WeylSolution),
    Dalembert(ScalarField),
}

impl Entry {
    pub fn dirac(&self, id: &str, m: f64) -> Result<DiracSolutionChiral> {
        match self {
            Entry::Scalar(f) => complete_to_dirac(&Spinor2Field::lower(f.clone()), m),
            Entry::Dirac(sol) => Ok(sol.clone()),
            Entry::Weyl(_) | Entry::Dalembert(_) => Err(Error::InvalidConfig(format!(
                "`{id}` is massless and has no Dirac solution"
            ))),
        }
    }
}

pub fn lookup(id: &str, p: &Params) -> Result<Entry> {
    let m = p.m;
    Ok(match id {
        "coulomb-kg" => Entry::Scalar(coulomb_kg(m, p.sign.into())?),
        "stereo-kg" => Entry::Scalar(stereo_kg(m, p.sign.into())?),
        "yukawa" => Entry::Scalar(yukawa(m, p.g2)?),
        "stereo-coulomb" => Entry::Scalar(stereo_coulomb_static(m)?),
        "broglie" => Entry::Scalar(broglie_kg(m, p.psi)?),
        "plane-wave" => Entry::Scalar(plane_wave_kg(m, p.k)?),
        "yukawa-spinor" => Entry::Dirac(yukawa_spinor(m, p.g2)?),
        "chain-yukawa-2" => Entry::Dirac(chain_yukawa_2(m)?),
        "spinor-broglie" => Entry::Dirac(spinor_broglie(m, p.psi)?),
        "weyl-coulomb" => Entry::Weyl(weyl_coulomb()),
        "dalembert-stereo" => Entry::Dalembert(dalembert_stereo()),
        "zero" => Entry::Dirac(DiracSolutionChiral::zero(m)?),
        other => return Err(Error::UnknownId(other.to_string())),
    })
}

pub fn complex_json(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}
