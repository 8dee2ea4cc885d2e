pub mod algebra;
pub mod conserved;
pub mod error;
pub mod fields;
pub mod generator;
pub mod jet;
pub mod massless;
pub mod operators;
pub mod quadrature;
pub mod transforms;
pub mod verify;

pub use algebra::{
    coord_matrix, lorentz_map, lorentz_matrix, pauli, point_from_matrix, sl2c_boost, sl2c_rotation, Mat2C, NullCoords,
    SpacetimePoint, C2, C64,
};
pub use error::{Error, Result};
pub use fields::{Axis, BispinorField, DiracSolutionChiral, Direction, ScalarField, Sign, SingularSet, Spinor2Field};
pub use generator::{Component, PotentialPairChiral, PotentialQuad4D, Slot};
pub use massless::{ComplexEmField, PotentialRow, WeylSolution};
pub use operators::{DiracVariant, GammaBasis, Mat4C, WeylVariant};
pub use transforms::TransformLaw;
pub use verify::{ResidualReport, SampleConfig};
