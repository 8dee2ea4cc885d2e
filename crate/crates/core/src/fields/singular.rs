use std::fmt;
use std::sync::Arc;

use crate::algebra::SpacetimePoint;

/// `Y ↦ lin·Y + shift` on (t, x, y, z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    pub lin: [[f64; 4]; 4],
    pub shift: [f64; 4],
}

impl AffineMap {
    pub fn linear(lin: [[f64; 4]; 4]) -> Self {
        Self { lin, shift: [0.0; 4] }
    }

    pub fn identity() -> Self {
        let mut lin = [[0.0; 4]; 4];
        for (i, row) in lin.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self::linear(lin)
    }

    pub fn translation(shift: [f64; 4]) -> Self {
        Self {
            shift,
            ..Self::identity()
        }
    }

    pub fn apply(&self, p: &SpacetimePoint) -> SpacetimePoint {
        let v = p.to_array();
        let mut out = self.shift;
        for (row, o) in out.iter_mut().enumerate() {
            *o += self.lin[row].iter().zip(&v).map(|(l, x)| l * x).sum::<f64>();
        }
        SpacetimePoint::from_array(out)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        let mut lin = [[0.0; 4]; 4];
        for (i, row) in lin.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.lin[i][k] * inner.lin[k][j]).sum();
            }
        }
        let shift = self.apply(&SpacetimePoint::from_array(inner.shift)).to_array();
        AffineMap { lin, shift }
    }
}

/// One piece of a declared singular locus.
#[derive(Clone)]
pub enum SingularPart {
    /// The world line `r = 0`.
    Origin,
    /// The string `x = y = 0, z ≤ 0`.
    NegativeZAxis,
    /// Caller-supplied spatial distance to the locus.
    Custom(Arc<dyn Fn(&SpacetimePoint) -> f64 + Send + Sync>),
    /// A part seen through a coordinate map: `Y` is singular when `map(Y)` is.
    Pulled(Box<SingularPart>, AffineMap),
}

impl SingularPart {
    /// Spatial distance to the locus at the point's time slice. For pulled
    /// parts the distance is measured in the original coordinates.
    pub fn distance(&self, p: &SpacetimePoint) -> f64 {
        match self {
            SingularPart::Origin => p.radius(),
            SingularPart::NegativeZAxis => {
                if p.z <= 0.0 {
                    p.x.hypot(p.y)
                } else {
                    p.radius()
                }
            }
            SingularPart::Custom(f) => f(p),
            SingularPart::Pulled(inner, map) => inner.distance(&map.apply(p)),
        }
    }

    fn label(&self) -> String {
        match self {
            SingularPart::Origin => "origin".into(),
            SingularPart::NegativeZAxis => "negative-z-half-line".into(),
            SingularPart::Custom(_) => "custom".into(),
            SingularPart::Pulled(inner, _) => format!("transformed({})", inner.label()),
        }
    }
}

impl fmt::Debug for SingularPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Union of singular pieces; empty means regular everywhere.
#[derive(Clone, Default, Debug)]
pub struct SingularSet {
    parts: Vec<SingularPart>,
}

impl SingularSet {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn origin() -> Self {
        Self {
            parts: vec![SingularPart::Origin],
        }
    }

    pub fn negative_z_axis() -> Self {
        Self {
            parts: vec![SingularPart::NegativeZAxis],
        }
    }

    pub fn custom(distance: impl Fn(&SpacetimePoint) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            parts: vec![SingularPart::Custom(Arc::new(distance))],
        }
    }

    pub fn union(sets: impl IntoIterator<Item = SingularSet>) -> Self {
        let mut parts: Vec<SingularPart> = Vec::new();
        for set in sets {
            for part in set.parts {
                // Plain pieces are deduplicated; composite ones are kept.
                let dup = parts.iter().any(|q| {
                    matches!(
                        (q, &part),
                        (SingularPart::Origin, SingularPart::Origin)
                            | (SingularPart::NegativeZAxis, SingularPart::NegativeZAxis)
                    )
                });
                if !dup {
                    parts.push(part);
                }
            }
        }
        Self { parts }
    }

    pub fn pulled_back(&self, map: AffineMap) -> Self {
        Self {
            parts: self
                .parts
                .iter()
                .map(|p| match p {
                    SingularPart::Pulled(inner, m) => SingularPart::Pulled(inner.clone(), m.compose(&map)),
                    other => SingularPart::Pulled(Box::new(other.clone()), map),
                })
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[SingularPart] {
        &self.parts
    }

    /// Distance to the nearest piece; `+∞` when empty.
    pub fn distance(&self, p: &SpacetimePoint) -> f64 {
        self.parts
            .iter()
            .map(|part| part.distance(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn labels(&self) -> Vec<String> {
        self.parts.iter().map(SingularPart::label).collect()
    }
}
