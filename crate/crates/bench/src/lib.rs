//! Shared fixtures for the benchmarks.

use relfield::fields::{stereo_kg, yukawa_spinor};
use relfield::generator::complete_to_dirac;
use relfield::verify::sample_points;
use relfield::{DiracSolutionChiral, SampleConfig, Sign, SingularSet, SpacetimePoint, Spinor2Field};

pub const SEED: u64 = 0xBE7C;

pub fn yukawa_solution() -> DiracSolutionChiral {
    yukawa_spinor(1.0, 1.0).expect("valid mass")
}

pub fn stereo_solution() -> DiracSolutionChiral {
    let f = stereo_kg(1.0, Sign::Plus).expect("valid mass");
    complete_to_dirac(&Spinor2Field::lower(f), 1.0).expect("stereographic scalar solves the KGE")
}

pub fn regular_points(count: usize) -> Vec<SpacetimePoint> {
    let sets = [SingularSet::origin(), SingularSet::negative_z_axis()];
    sample_points(&SampleConfig::with_seed(SEED, count), &sets).expect("sampling succeeds")
}
