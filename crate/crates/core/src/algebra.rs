//! Complex 2×2 matrices, the Pauli basis, Minkowski points in Hermitian
//! matrix form, and SL(2,ℂ) elements.
//!
//! Units are natural (c = ħ = 1) and the metric is diag(+1, −1, −1, −1).
//! A point is identified with the Hermitian matrix `X = t·I + x·σ₁ + y·σ₂ + z·σ₃`,
//! whose determinant is the Minkowski interval.
//!
//! Group elements describe a change of reference frame: `lorentz_map(S, p)`
//! returns the coordinates `S X S†` assigned to the event `p` by the new
//! frame. [`sl2c_rotation`] and [`sl2c_boost`] use the frame sense for their
//! parameters, so a rotation by `φ` about `n` turns the axes by `φ`, and a
//! boost with rapidity `θ` along `n` moves the frame with velocity `tanh θ`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Two-component complex column.
pub type C2 = [C64; 2];

/// Tolerance applied when an SL(2,ℂ) element is built.
pub const UNIMODULAR_BUILD_TOL: f64 = 1e-12;
/// Tolerance applied when an SL(2,ℂ) element is consumed.
pub const UNIMODULAR_USE_TOL: f64 = 1e-10;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpacetimePoint {
    pub const ORIGIN: SpacetimePoint = SpacetimePoint {
        t: 0.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    /// A point at time `t` with spatial position `r`.
    pub fn at(t: f64, r: [f64; 3]) -> Self {
        Self::new(t, r[0], r[1], r[2])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn radius(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn interval(&self) -> f64 {
        self.t * self.t - self.x * self.x - self.y * self.y - self.z * self.z
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }
}

/// Dense row-major 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2C {
    pub m: [[C64; 2]; 2],
}

impl Mat2C {
    pub const fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Self { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub fn diag(a: C64, d: C64) -> Self {
        Self::new(a, ZERO, ZERO, d)
    }

    pub fn det(&self) -> C64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn adjoint(&self) -> Self {
        Self::new(
            self.m[0][0].conj(),
            self.m[1][0].conj(),
            self.m[0][1].conj(),
            self.m[1][1].conj(),
        )
    }

    /// Closed-form inverse; `None` for a singular matrix.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.norm() == 0.0 {
            return None;
        }
        let inv = d.inv();
        Some(Self::new(
            self.m[1][1] * inv,
            -self.m[0][1] * inv,
            -self.m[1][0] * inv,
            self.m[0][0] * inv,
        ))
    }

    pub fn scale(&self, c: C64) -> Self {
        let m = self.m;
        Self::new(m[0][0] * c, m[0][1] * c, m[1][0] * c, m[1][1] * c)
    }

    pub fn apply(&self, v: &C2) -> C2 {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut out: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                out = out.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        out
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.max_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn unimodularity_defect(&self) -> f64 {
        (self.det() - ONE).norm()
    }

    /// Errors unless `|det − 1| ≤ tol`.
    pub fn check_unimodular(&self, tol: f64) -> Result<()> {
        let deviation = self.unimodularity_defect();
        if deviation <= tol {
            Ok(())
        } else {
            Err(Error::NotUnimodular { deviation })
        }
    }

    /// Inverse of a unit-determinant matrix (the adjugate).
    pub fn sl2_inverse(&self) -> Self {
        Self::new(self.m[1][1], -self.m[0][1], -self.m[1][0], self.m[0][0])
    }

    /// `(S⁻¹)†`, the matrix acting on the second 2-spinor in the canonical law.
    pub fn dual(&self) -> Self {
        self.inverse().expect("dual of a singular matrix").adjoint()
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;
    fn mul(self, rhs: Mat2C) -> Mat2C {
        let a = self.m;
        let b = rhs.m;
        Mat2C::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl Add for Mat2C {
    type Output = Mat2C;
    fn add(self, rhs: Mat2C) -> Mat2C {
        let a = self.m;
        let b = rhs.m;
        Mat2C::new(
            a[0][0] + b[0][0],
            a[0][1] + b[0][1],
            a[1][0] + b[1][0],
            a[1][1] + b[1][1],
        )
    }
}

impl Sub for Mat2C {
    type Output = Mat2C;
    fn sub(self, rhs: Mat2C) -> Mat2C {
        self + rhs.scale(-ONE)
    }
}

/// Standard Pauli matrix σ_i, `i ∈ {1, 2, 3}`.
pub fn pauli(i: usize) -> Result<Mat2C> {
    match i {
        1 => Ok(Mat2C::new(ZERO, ONE, ONE, ZERO)),
        2 => Ok(Mat2C::new(ZERO, -I, I, ZERO)),
        3 => Ok(Mat2C::new(ONE, ZERO, ZERO, -ONE)),
        _ => Err(Error::PauliIndex(i)),
    }
}

fn sigma_dot(n: [f64; 3]) -> Mat2C {
    let [x, y, z] = n;
    Mat2C::new(C64::new(z, 0.0), C64::new(x, -y), C64::new(x, y), C64::new(-z, 0.0))
}

/// `X = t + σ⃗·r⃗`.
pub fn coord_matrix(p: &SpacetimePoint) -> Mat2C {
    sigma_dot([p.x, p.y, p.z]) + Mat2C::identity().scale(C64::new(p.t, 0.0))
}

/// Inverse of [`coord_matrix`]; the input must be Hermitian within 1e−10.
pub fn point_from_matrix(x: &Mat2C) -> Result<SpacetimePoint> {
    let deviation = x.hermiticity_defect();
    if deviation > 1e-10 {
        return Err(Error::NotHermitian { deviation });
    }
    let m = x.m;
    Ok(SpacetimePoint::new(
        0.5 * (m[0][0].re + m[1][1].re),
        0.5 * (m[0][1].re + m[1][0].re),
        0.5 * (m[1][0].im - m[0][1].im),
        0.5 * (m[0][0].re - m[1][1].re),
    ))
}

fn check_axis(axis: [f64; 3]) -> Result<()> {
    let norm = axis.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        Err(Error::NonUnitAxis { norm })
    } else {
        Ok(())
    }
}

/// Spinor matrix of a frame rotation by `angle` about `axis`:
/// `exp(+i·angle/2·σ⃗·n)`. Its canonical action on a lower-component spinor
/// `(0, F)` about the same axis is the phase `exp(−i·angle/2)`.
pub fn sl2c_rotation(axis: [f64; 3], angle: f64) -> Result<Mat2C> {
    check_axis(axis)?;
    let half = 0.5 * angle;
    Ok(Mat2C::identity().scale(C64::new(half.cos(), 0.0)) + sigma_dot(axis).scale(C64::new(0.0, half.sin())))
}

/// Spinor matrix of a boost with rapidity `rapidity` along `axis`:
/// `exp(−rapidity/2·σ⃗·n)`; for the z axis this is `diag(e^{−θ/2}, e^{θ/2})`.
pub fn sl2c_boost(axis: [f64; 3], rapidity: f64) -> Result<Mat2C> {
    check_axis(axis)?;
    let half = 0.5 * rapidity;
    Ok(Mat2C::identity().scale(C64::new(half.cosh(), 0.0)) - sigma_dot(axis).scale(C64::new(half.sinh(), 0.0)))
}

/// `X ↦ S X S†`.
pub fn lorentz_map(s: &Mat2C, p: &SpacetimePoint) -> Result<SpacetimePoint> {
    s.check_unimodular(UNIMODULAR_USE_TOL)?;
    Ok(conjugate_point(s, p))
}

fn conjugate_point(s: &Mat2C, p: &SpacetimePoint) -> SpacetimePoint {
    let x = *s * coord_matrix(p) * s.adjoint();
    let m = x.m;
    // Hermitian by construction; read components without the tolerance check.
    SpacetimePoint::new(
        0.5 * (m[0][0].re + m[1][1].re),
        0.5 * (m[0][1].re + m[1][0].re),
        0.5 * (m[1][0].im - m[0][1].im),
        0.5 * (m[0][0].re - m[1][1].re),
    )
}

/// Real 4×4 matrix `Λ` with `coord(S X S†) = Λ·coord(X)`, indices (t, x, y, z).
pub fn lorentz_matrix(s: &Mat2C) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for col in 0..4 {
        let mut e = [0.0; 4];
        e[col] = 1.0;
        let image = conjugate_point(s, &SpacetimePoint::from_array(e)).to_array();
        for row in 0..4 {
            out[row][col] = image[row];
        }
    }
    out
}

/// Null coordinates `u, v = t ± z` and `w = x − iy`, `w̄ = x + iy`, so that
/// the coordinate matrix reads `[[u, w], [w̄, v]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullCoords {
    pub u: f64,
    pub v: f64,
    pub w: C64,
}

impl NullCoords {
    pub fn from_point(p: &SpacetimePoint) -> Self {
        Self {
            u: p.t + p.z,
            v: p.t - p.z,
            w: C64::new(p.x, -p.y),
        }
    }

    pub fn w_bar(&self) -> C64 {
        self.w.conj()
    }

    pub fn to_point(&self) -> SpacetimePoint {
        SpacetimePoint::new(0.5 * (self.u + self.v), self.w.re, -self.w.im, 0.5 * (self.u - self.v))
    }

    pub fn matrix(&self) -> Mat2C {
        Mat2C::new(C64::new(self.u, 0.0), self.w, self.w_bar(), C64::new(self.v, 0.0))
    }
}
