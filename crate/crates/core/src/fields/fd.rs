use num_complex::Complex64;

use super::{Axis, Direction, ScalarField};
use crate::algebra::SpacetimePoint;
use crate::error::{Error, Result};

/// Fourth-order central difference of `f` along an axis. Independent of the
/// jet machinery: only point values of `f` are used.
pub fn fd_oracle(f: &ScalarField, p: &SpacetimePoint, dir: Axis, h: f64) -> Result<Complex64> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::OutOfRange { name: "h", value: h });
    }
    if f.singular_set().distance(p) <= 4.0 * h {
        return Err(Error::SingularPoint {
            t: p.t,
            x: p.x,
            y: p.y,
            z: p.z,
        });
    }
    let shifted = |k: f64| {
        let mut a = p.to_array();
        a[dir.index()] += k * h;
        f.eval(&SpacetimePoint::from_array(a))
    };
    Ok((-shifted(2.0) + shifted(1.0) * 8.0 - shifted(-1.0) * 8.0 + shifted(-2.0)) / (12.0 * h))
}

/// Nested second-order central differences of `eval` along every direction
/// in `dirs` (complex directions split into real and imaginary parts).
pub fn nested_central_difference(
    eval: &dyn Fn(&SpacetimePoint) -> Complex64,
    p: &SpacetimePoint,
    dirs: &[Direction],
    h: f64,
) -> Complex64 {
    let Some((last, rest)) = dirs.split_last() else {
        return eval(p);
    };
    let re = last.0.map(|c| c.re);
    let im = last.0.map(|c| c.im);
    let along = |u: [f64; 4]| -> Complex64 {
        if u.iter().all(|v| *v == 0.0) {
            return Complex64::new(0.0, 0.0);
        }
        let base = p.to_array();
        let plus = SpacetimePoint::from_array([0, 1, 2, 3].map(|i| base[i] + h * u[i]));
        let minus = SpacetimePoint::from_array([0, 1, 2, 3].map(|i| base[i] - h * u[i]));
        (nested_central_difference(eval, &plus, rest, h) - nested_central_difference(eval, &minus, rest, h)) / (2.0 * h)
    };
    along(re) + Complex64::new(0.0, 1.0) * along(im)
}
