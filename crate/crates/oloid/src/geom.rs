//! Points, vectors, and lines in three-space.
//!
//! This is deliberately tiny: the crate only needs affine combinations,
//! dot/cross products, norms, and point-to-line distances, so pulling in a
//! linear-algebra dependency for it would be overkill.

use std::ops::{Add, Mul, Neg, Sub};

/// A point in Cartesian three-space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A displacement in Cartesian three-space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Largest coordinate magnitude.
    pub fn norm_inf(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    /// Mirror image under z -> -z.
    pub fn mirror_z(self) -> Self {
        Self::new(self.x, self.y, -self.z)
    }

    /// Mirror image under x -> -x.
    pub fn mirror_x(self) -> Self {
        Self::new(-self.x, self.y, self.z)
    }

    pub fn distance(self, other: Point3) -> f64 {
        (self - other).norm()
    }
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_inf(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Sub for Point3 {
    type Output = Vec3;
    fn sub(self, o: Point3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Add<Vec3> for Point3 {
    type Output = Point3;
    fn add(self, v: Vec3) -> Point3 {
        Point3::new(self.x + v.x, self.y + v.y, self.z + v.z)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// A straight line given by a base point and a direction vector.
///
/// The direction is kept exactly as constructed (not normalized) so that
/// `point_at` can reproduce affine parametrizations bit for bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line3 {
    pub base: Point3,
    pub dir: Vec3,
}

impl Line3 {
    pub fn new(base: Point3, dir: Vec3) -> Self {
        Self { base, dir }
    }

    /// Line through two points, parametrized so that `point_at(0) = a` and
    /// `point_at(1) = b`.
    pub fn through(a: Point3, b: Point3) -> Self {
        Self::new(a, b - a)
    }

    pub fn point_at(&self, s: f64) -> Point3 {
        self.base + self.dir * s
    }

    /// Euclidean distance from `p` to the line.
    pub fn distance_to(&self, p: Point3) -> f64 {
        let d = self.dir;
        let n = d.norm();
        if n == 0.0 {
            return self.base.distance(p);
        }
        (p - self.base).cross(d).norm() / n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn cross_is_orthogonal() {
        let a = Vec3::new(1.0, 2.0, 3.0);
        let b = Vec3::new(-0.5, 0.25, 2.0);
        let c = a.cross(b);
        assert_abs_diff_eq!(c.dot(a), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c.dot(b), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn line_distance_matches_hand_value() {
        // Distance from the origin to the line x = 1 (in the z = 0 plane,
        // running parallel to the y axis) is 1.
        let l = Line3::new(Point3::new(1.0, -4.0, 0.0), Vec3::new(0.0, 2.0, 0.0));
        assert_abs_diff_eq!(l.distance_to(Point3::new(0.0, 0.0, 0.0)), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(l.distance_to(Point3::new(1.0, 7.5, 0.0)), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn through_hits_both_endpoints() {
        let a = Point3::new(0.1, 0.2, 0.3);
        let b = Point3::new(-1.0, 4.0, 2.0);
        let l = Line3::through(a, b);
        assert_eq!(l.point_at(0.0), a);
        assert_eq!(l.point_at(1.0), b);
    }
}
