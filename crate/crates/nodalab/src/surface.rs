//! Model surfaces: the flat square torus `[0, 2pi)^2` and the unit sphere.
//!
//! Both carry closed-form geodesics, disk areas and eigenfunctions, so every
//! quantity computed downstream has an independent oracle. Points are stored
//! in canonical chart coordinates (torus: `(x, y)` wrapped into `[0, 2pi)`;
//! sphere: colatitude/longitude `(theta, phi)` with `theta` in `[0, pi]`).

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

/// A model surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surface {
    /// `[0, 2pi)^2` with the flat metric.
    FlatTorus,
    /// The round unit sphere in chart coordinates `(theta, phi)`.
    UnitSphere,
}

impl Surface {
    /// Total Riemannian area: `4pi^2` for the torus, `4pi` for the sphere.
    pub fn volume(self) -> f64 {
        match self {
            Surface::FlatTorus => TAU * TAU,
            Surface::UnitSphere => 2.0 * TAU,
        }
    }

    /// Largest radius below which geodesic disks are embedded (`pi` for both).
    pub fn injectivity_radius(self) -> f64 {
        PI
    }

    /// Canonically wrapped point on this surface.
    pub fn point(self, c1: f64, c2: f64) -> SurfacePoint {
        match self {
            Surface::FlatTorus => SurfacePoint {
                surface: self,
                c1: wrap_tau(c1),
                c2: wrap_tau(c2),
            },
            Surface::UnitSphere => {
                let (theta, phi) = wrap_sphere(c1, c2);
                SurfacePoint {
                    surface: self,
                    c1: theta,
                    c2: phi,
                }
            }
        }
    }

    /// Closed-form area of a geodesic disk of the given radius.
    pub fn disk_area(self, radius: f64) -> f64 {
        match self {
            Surface::FlatTorus => PI * radius * radius,
            Surface::UnitSphere => TAU * (1.0 - radius.cos()),
        }
    }

    /// Area-element factor in geodesic polar coordinates at distance `s`
    /// from the pole: `s` on the torus, `sin s` on the sphere.
    pub fn polar_jacobian(self, s: f64) -> f64 {
        match self {
            Surface::FlatTorus => s,
            Surface::UnitSphere => s.sin(),
        }
    }

    /// Point at geodesic distance `s` from `center` along the direction
    /// `angle` (measured in a fixed orthonormal tangent frame at `center`).
    pub fn polar_point(self, center: &SurfacePoint, s: f64, angle: f64) -> SurfacePoint {
        debug_assert_eq!(center.surface, self);
        match self {
            Surface::FlatTorus => {
                self.point(center.c1 + s * angle.cos(), center.c2 + s * angle.sin())
            }
            Surface::UnitSphere => {
                let c = center.unit_vector();
                let (e1, e2) = tangent_frame(c);
                let (sin_s, cos_s) = s.sin_cos();
                let (sin_a, cos_a) = angle.sin_cos();
                let p = [
                    cos_s * c[0] + sin_s * (cos_a * e1[0] + sin_a * e2[0]),
                    cos_s * c[1] + sin_s * (cos_a * e1[1] + sin_a * e2[1]),
                    cos_s * c[2] + sin_s * (cos_a * e1[2] + sin_a * e2[2]),
                ];
                SurfacePoint::from_unit_vector(p)
            }
        }
    }

    /// Geodesic distance between two points of this surface.
    ///
    /// Torus: minimum-image Euclidean distance; sphere: arc of the great
    /// circle, with the dot product clamped to `[-1, 1]`.
    pub fn distance(self, a: &SurfacePoint, b: &SurfacePoint) -> f64 {
        assert_eq!(a.surface, self);
        assert_eq!(b.surface, self);
        match self {
            Surface::FlatTorus => {
                let dx = wrapped_delta(a.c1, b.c1);
                let dy = wrapped_delta(a.c2, b.c2);
                dx.hypot(dy)
            }
            Surface::UnitSphere => {
                let u = a.unit_vector();
                let v = b.unit_vector();
                let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
                dot.clamp(-1.0, 1.0).acos()
            }
        }
    }

    /// `n` i.i.d. points uniform with respect to the area measure,
    /// deterministic given `seed`.
    pub fn sample_centers(self, n: usize, seed: u64) -> Result<Vec<SurfacePoint>> {
        if n == 0 {
            return Err(Error::InvalidCount { min: 1, got: 0 });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            out.push(match self {
                Surface::FlatTorus => {
                    let x: f64 = rng.random::<f64>() * TAU;
                    let y: f64 = rng.random::<f64>() * TAU;
                    self.point(x, y)
                }
                Surface::UnitSphere => {
                    let cos_theta = 2.0 * rng.random::<f64>() - 1.0;
                    let phi = rng.random::<f64>() * TAU;
                    self.point(cos_theta.clamp(-1.0, 1.0).acos(), phi)
                }
            });
        }
        Ok(out)
    }
}

/// A point in canonical chart coordinates on one of the model surfaces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    surface: Surface,
    c1: f64,
    c2: f64,
}

impl SurfacePoint {
    pub fn surface(&self) -> Surface {
        self.surface
    }

    /// First chart coordinate: torus `x`, sphere colatitude `theta`.
    pub fn c1(&self) -> f64 {
        self.c1
    }

    /// Second chart coordinate: torus `y`, sphere longitude `phi`.
    pub fn c2(&self) -> f64 {
        self.c2
    }

    /// Embedding of a sphere point into `R^3`.
    pub fn unit_vector(&self) -> [f64; 3] {
        debug_assert_eq!(self.surface, Surface::UnitSphere);
        let (sin_t, cos_t) = self.c1.sin_cos();
        let (sin_p, cos_p) = self.c2.sin_cos();
        [sin_t * cos_p, sin_t * sin_p, cos_t]
    }

    /// Sphere point from an (approximately) unit vector.
    pub fn from_unit_vector(v: [f64; 3]) -> SurfacePoint {
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        let z = (v[2] / norm).clamp(-1.0, 1.0);
        let theta = z.acos();
        let phi = v[1].atan2(v[0]);
        Surface::UnitSphere.point(theta, phi)
    }
}

fn wrap_tau(x: f64) -> f64 {
    let w = x.rem_euclid(TAU);
    // rem_euclid can return TAU itself when x is a tiny negative number.
    if w >= TAU {
        0.0
    } else {
        w
    }
}

fn wrap_sphere(theta: f64, phi: f64) -> (f64, f64) {
    let mut t = theta.rem_euclid(TAU);
    let mut p = phi;
    if t > PI {
        t = TAU - t;
        p += PI;
    }
    (t, wrap_tau(p))
}

/// Signed minimum-image difference on the `2pi`-periodic circle.
fn wrapped_delta(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

/// Deterministic orthonormal tangent frame at a unit vector `c`.
fn tangent_frame(c: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    // Use the north pole as the reference axis unless c is too close to it.
    let axis = if c[2].abs() < 0.9 {
        [0.0, 0.0, 1.0]
    } else {
        [1.0, 0.0, 0.0]
    };
    let dot = axis[0] * c[0] + axis[1] * c[1] + axis[2] * c[2];
    let mut e1 = [axis[0] - dot * c[0], axis[1] - dot * c[1], axis[2] - dot * c[2]];
    let n = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
    e1 = [e1[0] / n, e1[1] / n, e1[2] / n];
    let e2 = [
        c[1] * e1[2] - c[2] * e1[1],
        c[2] * e1[0] - c[0] * e1[2],
        c[0] * e1[1] - c[1] * e1[0],
    ];
    (e1, e2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn volumes_and_injectivity() {
        assert_relative_eq!(Surface::FlatTorus.volume(), 4.0 * PI * PI);
        assert_relative_eq!(Surface::UnitSphere.volume(), 4.0 * PI);
        assert_eq!(Surface::FlatTorus.injectivity_radius(), PI);
        assert_eq!(Surface::UnitSphere.injectivity_radius(), PI);
    }

    #[test]
    fn torus_distance_wraps() {
        let s = Surface::FlatTorus;
        let a = s.point(0.1, 0.0);
        let b = s.point(TAU - 0.1, 0.0);
        assert_relative_eq!(s.distance(&a, &b), 0.2, epsilon = 1e-12);
    }

    #[test]
    fn sphere_antipodal_distance() {
        let s = Surface::UnitSphere;
        let north = s.point(0.0, 0.0);
        let south = s.point(PI, 0.0);
        assert_relative_eq!(s.distance(&north, &south), PI, epsilon = 1e-12);
    }

    #[test]
    fn distance_to_self_is_zero() {
        for s in [Surface::FlatTorus, Surface::UnitSphere] {
            let p = s.point(1.234, 2.345);
            assert_eq!(s.distance(&p, &p), 0.0);
        }
    }

    #[test]
    fn sample_centers_deterministic() {
        for s in [Surface::FlatTorus, Surface::UnitSphere] {
            let a = s.sample_centers(5, 99).unwrap();
            let b = s.sample_centers(5, 99).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn sample_centers_rejects_zero() {
        assert!(Surface::FlatTorus.sample_centers(0, 1).is_err());
    }

    #[test]
    fn torus_sample_mean_within_three_sigma() {
        let n = 100_000;
        let pts = Surface::FlatTorus.sample_centers(n, 7).unwrap();
        let mean_x: f64 = pts.iter().map(|p| p.c1()).sum::<f64>() / n as f64;
        let sigma = (TAU / 12f64.sqrt()) / (n as f64).sqrt();
        assert!((mean_x - PI).abs() < 3.0 * sigma, "mean {mean_x} vs pi");
    }

    #[test]
    fn sphere_sample_cos_theta_mean_within_three_sigma() {
        let n = 100_000;
        let pts = Surface::UnitSphere.sample_centers(n, 7).unwrap();
        let mean: f64 = pts.iter().map(|p| p.c1().cos()).sum::<f64>() / n as f64;
        // cos(theta) is uniform on [-1, 1]: sigma = (2/sqrt 12)/sqrt n.
        let sigma = (2.0 / 12f64.sqrt()) / (n as f64).sqrt();
        assert!(mean.abs() < 3.0 * sigma, "mean {mean}");
    }

    #[test]
    fn sample_centers_chi_squared_uniform() {
        // 16 equal-area bins, 15 degrees of freedom; chi2_{0.999} = 37.697.
        const CHI2_CRIT: f64 = 37.697;
        let n = 100_000;
        for s in [Surface::FlatTorus, Surface::UnitSphere] {
            let pts = s.sample_centers(n, 20240229).unwrap();
            let mut bins = [0usize; 16];
            for p in &pts {
                let (u, v) = match s {
                    // Both coordinates uniform.
                    Surface::FlatTorus => (p.c1() / TAU, p.c2() / TAU),
                    // cos(theta) and phi uniform.
                    Surface::UnitSphere => ((1.0 - p.c1().cos()) / 2.0, p.c2() / TAU),
                };
                let i = ((u * 4.0) as usize).min(3);
                let j = ((v * 4.0) as usize).min(3);
                bins[4 * i + j] += 1;
            }
            let expected = n as f64 / 16.0;
            let chi2: f64 = bins
                .iter()
                .map(|&b| {
                    let d = b as f64 - expected;
                    d * d / expected
                })
                .sum();
            assert!(chi2 < CHI2_CRIT, "{s:?}: chi2 = {chi2}");
        }
    }

    #[test]
    fn polar_point_lies_at_requested_distance() {
        for s in [Surface::FlatTorus, Surface::UnitSphere] {
            let c = s.point(0.9, 2.1);
            for k in 0..12 {
                let angle = k as f64 * 0.5;
                let q = s.polar_point(&c, 0.37, angle);
                assert_relative_eq!(s.distance(&c, &q), 0.37, epsilon = 1e-12);
            }
        }
    }

    proptest! {
        #[test]
        fn distance_symmetric_and_triangle(
            a1 in 0.0..TAU, a2 in 0.0..TAU,
            b1 in 0.0..TAU, b2 in 0.0..TAU,
            c1 in 0.0..TAU, c2 in 0.0..TAU,
            torus in proptest::bool::ANY,
        ) {
            let s = if torus { Surface::FlatTorus } else { Surface::UnitSphere };
            let a = s.point(a1, a2);
            let b = s.point(b1, b2);
            let c = s.point(c1, c2);
            let dab = s.distance(&a, &b);
            let dba = s.distance(&b, &a);
            prop_assert!((dab - dba).abs() < 1e-12);
            let dac = s.distance(&a, &c);
            let dcb = s.distance(&c, &b);
            prop_assert!(dab <= dac + dcb + 1e-12);
        }

        #[test]
        fn points_wrap_into_chart(x in -50.0..50.0, y in -50.0..50.0) {
            let t = Surface::FlatTorus.point(x, y);
            prop_assert!((0.0..TAU).contains(&t.c1()) && (0.0..TAU).contains(&t.c2()));
            let s = Surface::UnitSphere.point(x, y);
            prop_assert!((0.0..=PI).contains(&s.c1()));
            prop_assert!((0.0..TAU).contains(&s.c2()));
        }
    }
}
