//! Truncated expansions in independent nilpotent infinitesimals.
//!
//! A [`Jet`] of order `k` is a polynomial in `ε₁ … ε_k` with `ε_i² = 0`.
//! The coefficient stored at bitmask `S` multiplies `Π_{i∈S} ε_i`. Seeding
//! each coordinate `x_μ` with `x_μ + Σ_i v_i^μ ε_i` and evaluating an
//! analytic expression yields, at mask `S`, the exact mixed directional
//! derivative `Π_{i∈S} (v_i · ∂) f`. Only analytic operations are offered
//! (no conjugation, no modulus), so complex direction vectors are valid.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    order: usize,
    coeffs: Vec<Complex64>,
}

impl Jet {
    pub fn constant(order: usize, value: Complex64) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 1 << order];
        coeffs[0] = value;
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(order, Complex64::new(0.0, 0.0))
    }

    /// A seeded variable: `value + Σ_i slopes[i] ε_i`.
    pub fn variable(value: f64, slopes: &[Complex64]) -> Self {
        let order = slopes.len();
        let mut jet = Self::constant(order, Complex64::new(value, 0.0));
        for (i, s) in slopes.iter().enumerate() {
            jet.coeffs[1 << i] = *s;
        }
        jet
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        assert!(coeffs.len().is_power_of_two(), "jet length must be 2^k");
        let order = coeffs.len().trailing_zeros() as usize;
        Self { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self) -> Complex64 {
        self.coeffs[0]
    }

    pub fn coeff(&self, mask: usize) -> Complex64 {
        self.coeffs[mask]
    }

    /// Coefficient of `ε₁ ε₂ … ε_k`: the full mixed derivative.
    pub fn top(&self) -> Complex64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Drops the last infinitesimal, keeping the half of the coefficients that
    /// carries it. This is the jet of the derivative along the dropped direction.
    pub fn differentiate_last(&self) -> Jet {
        assert!(self.order > 0, "cannot differentiate an order-0 jet");
        let half = 1 << (self.order - 1);
        Jet {
            order: self.order - 1,
            coeffs: self.coeffs[half..].to_vec(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Jet {
        Jet {
            order: self.order,
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn scale_re(&self, c: f64) -> Jet {
        self.scale(Complex64::new(c, 0.0))
    }

    pub fn add_scaled(&mut self, other: &Jet, c: Complex64) {
        debug_assert_eq!(self.order, other.order);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
    }

    fn product(&self, other: &Jet) -> Jet {
        debug_assert_eq!(self.order, other.order);
        let n = self.coeffs.len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (u, slot) in out.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut s = u;
            loop {
                acc += self.coeffs[s] * other.coeffs[u ^ s];
                if s == 0 {
                    break;
                }
                s = (s - 1) & u;
            }
            *slot = acc;
        }
        Jet {
            order: self.order,
            coeffs: out,
        }
    }

    /// Applies an analytic function given its Taylor coefficients
    /// `taylor[j] = f^{(j)}(a₀)/j!` at the base value `a₀`.
    fn compose(&self, taylor: &[Complex64]) -> Jet {
        let mut nil = self.clone();
        nil.coeffs[0] = Complex64::new(0.0, 0.0);
        let mut out = Jet::constant(self.order, taylor[0]);
        let mut power = nil.clone();
        for (j, c) in taylor.iter().enumerate().skip(1) {
            out.add_scaled(&power, *c);
            if j < self.order {
                power = power.product(&nil);
            }
        }
        out
    }

    pub fn exp(&self) -> Jet {
        let e = self.value().exp();
        let mut taylor = Vec::with_capacity(self.order + 1);
        let mut fact = 1.0;
        for j in 0..=self.order {
            if j > 0 {
                fact *= j as f64;
            }
            taylor.push(e / fact);
        }
        self.compose(&taylor)
    }

    /// Real power `self^alpha` (principal branch at the base value).
    pub fn powf(&self, alpha: f64) -> Jet {
        let a0 = self.value();
        let mut taylor = Vec::with_capacity(self.order + 1);
        let mut binom = 1.0;
        for j in 0..=self.order {
            if j > 0 {
                binom *= (alpha - (j as f64 - 1.0)) / j as f64;
            }
            taylor.push(a0.powf(alpha - j as f64) * binom);
        }
        self.compose(&taylor)
    }

    pub fn sqrt(&self) -> Jet {
        self.powf(0.5)
    }

    pub fn recip(&self) -> Jet {
        let a0 = self.value();
        let inv = a0.inv();
        let mut taylor = Vec::with_capacity(self.order + 1);
        let mut term = inv;
        for _ in 0..=self.order {
            taylor.push(term);
            term *= -inv;
        }
        self.compose(&taylor)
    }

    pub fn powi(&self, n: i32) -> Jet {
        if n < 0 {
            return self.recip().powi(-n);
        }
        let mut out = Jet::constant(self.order, Complex64::new(1.0, 0.0));
        for _ in 0..n {
            out = out.product(self);
        }
        out
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(mut self, rhs: Jet) -> Jet {
        self += &rhs;
        self
    }
}

impl AddAssign<&Jet> for Jet {
    fn add_assign(&mut self, rhs: &Jet) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        let mut out = self.clone();
        out.add_scaled(rhs, Complex64::new(-1.0, 0.0));
        out
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        &self - &rhs
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        self.product(rhs)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        self.product(&rhs)
    }
}

impl Mul<Complex64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: Complex64) -> Jet {
        self.scale(rhs)
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale_re(rhs)
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(mut self, rhs: f64) -> Jet {
        self.coeffs[0] += rhs;
        self
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale_re(-1.0)
    }
}
