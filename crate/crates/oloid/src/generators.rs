//! Common generating lines of the surface and its inscribed quadrics.
//!
//! Every ruled member Q_lambda (lambda outside [0, 1]) shares exactly four
//! straight lines with the ruled surface: the rulings at the parameters
//! -+t_tilde(lambda) on the two families, where `phi(t_tilde) = lambda`.
//! Along such a line the quadric and the surface touch the same tangent
//! plane field, and the line is tangent to the touching curve C_lambda at
//! one of the four second-order contact points `r(lambda, .)`. For the
//! infinite member the four lines degenerate into the asymptotes of the
//! edge of regression.

use crate::error::{Error, Result};
use crate::geom::{Line3, Point3};
use crate::pencil::ExtendedParam;
use crate::regression::{self, QuadrantSigns};
use crate::surface::{generating_line, ZBranch};

/// The positive ruling parameter of the common generators of Q_lambda,
/// arccos((1 - lambda + rho)/lambda) in (0, 2pi/3). Requires lambda
/// outside [0, 1].
pub fn t_tilde(lambda: f64) -> Result<f64> {
    regression::phi_inverse(lambda, ZBranch::Pos)
}

/// The common generator through `r(lambda, PP)`, parametrized by the ruling
/// coordinate m:
///
/// ```text
/// w_1 = (1 - m) sqrt((lambda - 1)(2 - lambda + 2 rho)) / (-|lambda|)
/// w_2 = (1 - m)(lambda - 2 - 2 rho)/(2 lambda) + m (2 lambda - 1 - rho)/(2 (1 + rho))
/// w_3 = m sgn(lambda) sqrt(lambda (2 - lambda + 2 rho)) / (1 + rho)
/// ```
///
/// This coincides pointwise with `ruling_point(m, -t_tilde, Pos)`.
pub fn omega_tilde(m: f64, lambda: f64) -> Result<Point3> {
    if (0.0..=1.0).contains(&lambda) {
        return Err(Error::Domain {
            op: "omega_tilde",
            requirement: "lambda outside [0, 1]",
            got: lambda,
        });
    }
    let rho = regression::rho(lambda);
    let rad1 = (lambda - 1.0) * (2.0 - lambda + 2.0 * rho);
    let w1 = (1.0 - m) * rad1.max(0.0).sqrt() / (-lambda.abs());
    let w2 = (1.0 - m) * (lambda - 2.0 - 2.0 * rho) / (2.0 * lambda)
        + m * (2.0 * lambda - 1.0 - rho) / (2.0 * (1.0 + rho));
    let rad3 = lambda * (2.0 - lambda + 2.0 * rho);
    let w3 = m * lambda.signum() * rad3.max(0.0).sqrt() / (1.0 + rho);
    Ok(Point3::new(w1, w2, w3))
}

/// The four common generators of Q_lambda and the surface, ordered so that
/// line k is tangent to C_lambda at `tangency_points(lambda)[k - 1]`.
///
/// Members with lambda in [0, 1] are not ruled and are rejected; the
/// infinite member returns the asymptotes of the edge of regression.
pub fn common_generators(lambda: ExtendedParam) -> Result<[Line3; 4]> {
    let l = match lambda {
        ExtendedParam::Infinity => {
            return Ok([
                regression::regression_asymptote(1)?,
                regression::regression_asymptote(2)?,
                regression::regression_asymptote(3)?,
                regression::regression_asymptote(4)?,
            ]);
        }
        ExtendedParam::Finite(l) => l,
    };
    if (0.0..=1.0).contains(&l) {
        return Err(Error::Domain {
            op: "common_generators",
            requirement: "lambda outside [0, 1] (those members are not ruled)",
            got: l,
        });
    }
    let t = t_tilde(l)?;
    Ok([
        generating_line((-t).into(), ZBranch::Pos)?,
        generating_line(t.into(), ZBranch::Pos)?,
        generating_line(t.into(), ZBranch::Neg)?,
        generating_line((-t).into(), ZBranch::Neg)?,
    ])
}

/// The ruling coordinate of the tangency point on each common generator:
/// `omega_tilde(m_hat, lambda)` equals `r(lambda, PP)`.
pub fn m_hat(lambda: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&lambda) {
        return Err(Error::Domain {
            op: "m_hat",
            requirement: "lambda outside [0, 1]",
            got: lambda,
        });
    }
    let rho = regression::rho(lambda);
    Ok((1.0 + rho) / (2.0 - lambda + rho))
}

/// The four points where the common generators touch C_lambda, one per
/// quadrant, ordered to match [`common_generators`].
pub fn tangency_points(lambda: f64) -> Result<[Point3; 4]> {
    Ok([
        regression::r(lambda, QuadrantSigns::PP)?,
        regression::r(lambda, QuadrantSigns::MP)?,
        regression::r(lambda, QuadrantSigns::MM)?,
        regression::r(lambda, QuadrantSigns::PM)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::f_lambda;
    use crate::surface::ruling_point;
    use crate::touching::kappa_dot;
    use approx::assert_abs_diff_eq;

    #[test]
    fn t_tilde_frozen_values() {
        assert_abs_diff_eq!(t_tilde(2.0).unwrap(), 1.1960618940861567, epsilon = 1e-14);
        assert_abs_diff_eq!(t_tilde(-1.0).unwrap(), 1.8420600805209175, epsilon = 1e-14);
        assert!(t_tilde(0.5).is_err());
    }

    #[test]
    fn omega_tilde_is_the_ruling_through_the_contact_point() {
        for &l in &[-3.0, -1.5, 1.3, 2.0, 4.0, 25.0] {
            let t = t_tilde(l).unwrap();
            for &m in &[-1.0, 0.0, 0.5, 1.0, 2.0] {
                let w = omega_tilde(m, l).unwrap();
                let p = ruling_point(m, (-t).into(), ZBranch::Pos).unwrap();
                assert!(
                    (w - p).norm() < 1e-10,
                    "lambda = {l}, m = {m}: {w:?} vs {p:?}"
                );
            }
        }
        assert!(omega_tilde(0.3, 1.0).is_err());
    }

    #[test]
    fn m_hat_frozen_values_and_contact_identity() {
        assert_abs_diff_eq!(m_hat(2.0).unwrap(), 1.5773502691896257, epsilon = 1e-15);
        assert_abs_diff_eq!(m_hat(-1.0).unwrap(), -(3f64.sqrt()) / 3.0, epsilon = 1e-15);
        for &l in &[-3.0, -1.5, 1.3, 2.0, 4.0, 25.0] {
            let mh = m_hat(l).unwrap();
            let w = omega_tilde(mh, l).unwrap();
            let p = regression::r(l, QuadrantSigns::PP).unwrap();
            assert!((w - p).norm() < 1e-10, "lambda = {l}");
        }
        assert!(m_hat(0.0).is_err());
    }

    #[test]
    fn generators_lie_on_the_quadric() {
        for &l in &[-3.0, -1.5, 1.3, 2.0, 4.0, 25.0] {
            let lines = common_generators(l.into()).unwrap();
            for (k, line) in lines.iter().enumerate() {
                for &m in &[-1.0, -0.3, 0.3, 1.0, 2.0] {
                    let v = f_lambda(l.into(), line.point_at(m)).unwrap();
                    assert!(
                        v.abs() < 1e-9,
                        "lambda = {l}, generator {}, m = {m}: f = {v}",
                        k + 1
                    );
                }
            }
        }
    }

    #[test]
    fn generators_touch_the_curve_at_the_tangency_points() {
        for &l in &[-3.0, 1.3, 2.0, 4.0] {
            let lines = common_generators(l.into()).unwrap();
            let pts = tangency_points(l).unwrap();
            for (line, p) in lines.iter().zip(pts.iter()) {
                assert!(line.distance_to(*p) < 1e-10, "lambda = {l}");
            }
            // The first generator is parallel to the curve velocity there.
            let t = t_tilde(l).unwrap();
            let kd = kappa_dot(l, (-t).into()).unwrap();
            let cross = lines[0].dir.cross(kd).norm() / (lines[0].dir.norm() * kd.norm());
            assert!(cross < 1e-9, "lambda = {l}: normalized cross {cross}");
        }
    }

    #[test]
    fn unruled_members_are_rejected() {
        for l in [0.0, 0.2, 0.5, 1.0] {
            let err = common_generators(l.into()).unwrap_err();
            assert!(err.to_string().contains("not ruled"), "lambda = {l}");
        }
    }

    #[test]
    fn infinite_member_returns_regression_asymptotes() {
        let lines = common_generators(ExtendedParam::Infinity).unwrap();
        for (k, line) in lines.iter().enumerate() {
            let a = regression::regression_asymptote(k as u8 + 1).unwrap();
            assert_eq!(line.base, a.base);
            assert_eq!(line.dir, a.dir);
        }
    }

    #[test]
    fn generators_approach_the_asymptotes_for_large_lambda() {
        let lines = common_generators(1e6.into()).unwrap();
        for k in 0..4 {
            let target = regression::regression_asymptote(k as u8 + 1).unwrap();
            let mut worst: f64 = 0.0;
            for i in 0..41 {
                let m = -2.0 + 5.0 * i as f64 / 40.0;
                let p = lines[k].point_at(m);
                if p.norm_inf() <= 3.5 {
                    worst = worst.max(target.distance_to(p));
                }
            }
            assert!(worst < 1e-4, "generator {}: distance {worst}", k + 1);
        }
    }
}
