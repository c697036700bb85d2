//! Quadrature rules: Gauss-Legendre nodes, geodesic disk rules in polar
//! coordinates, and graded composite rules for integrands with an endpoint
//! singularity.

use crate::error::{Error, Result};
use crate::surface::{Surface, SurfacePoint};
use std::f64::consts::TAU;

/// Default radial node count for disk rules.
pub const DEFAULT_N_RADIAL: usize = 24;
/// Default angular node count for disk rules.
pub const DEFAULT_N_ANGULAR: usize = 64;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
///
/// Newton iteration on the three-term recurrence; accurate to machine
/// precision for the node counts used here (n up to a few hundred).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative by recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            // p1 = P_n, p0 = P_{n-1}.
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n == 1 {
        nodes[0] = 0.0;
        weights[0] = 2.0;
    }
    (nodes, weights)
}

/// Integrate `f` over `[a, b]` with an `n`-point Gauss-Legendre rule.
pub fn gl_integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let (xs, ws) = gauss_legendre(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let terms: Vec<f64> = xs
        .iter()
        .zip(&ws)
        .map(|(&x, &w)| w * f(mid + half * x))
        .collect();
    half * pairwise_sum(&terms)
}

/// Integrate `f` over `[0, r]` when `f` may have an integrable singularity
/// (a kink or a logarithm) at 0: geometric panels toward 0, Gauss-Legendre
/// on each panel. The innermost panel `[0, r/2^panels]` contributes below
/// roundoff for the integrands used here.
pub fn integrate_graded_zero<F: Fn(f64) -> f64>(
    f: F,
    r: f64,
    panels: usize,
    nodes_per_panel: usize,
) -> f64 {
    let (xs, ws) = gauss_legendre(nodes_per_panel);
    let mut terms = Vec::with_capacity((panels + 1) * nodes_per_panel);
    let mut hi = r;
    for j in 0..=panels {
        let lo = if j == panels { 0.0 } else { hi * 0.5 };
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        for (&x, &w) in xs.iter().zip(&ws) {
            terms.push(half * w * f(mid + half * x));
        }
        hi = lo;
    }
    pairwise_sum(&terms)
}

/// Numerically stable summation whose result does not depend on how the
/// work was distributed: fixed pairwise recursion over the input order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 32 {
        let mut s = 0.0;
        for &x in xs {
            s += x;
        }
        return s;
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Quadrature rule on a geodesic disk, in polar coordinates about the
/// center: Gauss-Legendre in the radial variable composed with the
/// (periodic) trapezoid rule in the angular variable, weights carrying the
/// metric Jacobian.
#[derive(Debug, Clone)]
pub struct DiskQuadrature {
    center: SurfacePoint,
    radius: f64,
    nodes: Vec<(SurfacePoint, f64)>,
    n_radial: usize,
    n_angular: usize,
}

impl DiskQuadrature {
    pub fn center(&self) -> &SurfacePoint {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn nodes(&self) -> &[(SurfacePoint, f64)] {
        &self.nodes
    }

    pub fn n_radial(&self) -> usize {
        self.n_radial
    }

    pub fn n_angular(&self) -> usize {
        self.n_angular
    }

    /// Sum of the node weights (the quadrature's notion of the disk area).
    pub fn weight_sum(&self) -> f64 {
        let ws: Vec<f64> = self.nodes.iter().map(|&(_, w)| w).collect();
        pairwise_sum(&ws)
    }

    /// Integrate a function over the disk.
    pub fn integrate<F: Fn(&SurfacePoint) -> f64>(&self, f: F) -> f64 {
        let terms: Vec<f64> = self.nodes.iter().map(|(p, w)| w * f(p)).collect();
        pairwise_sum(&terms)
    }
}

/// Build a polar quadrature rule for the geodesic disk of the given radius.
///
/// Radial nodes are Gauss-Legendre on `[0, radius]`; angular nodes are the
/// `n_angular`-point periodic trapezoid rule. Node weights include the
/// polar Jacobian (`s` on the torus, `sin s` on the sphere), so the rule is
/// exact for radial polynomials times the Jacobian up to the usual
/// Gauss-Legendre degree.
pub fn disk_quadrature(
    surface: Surface,
    center: &SurfacePoint,
    radius: f64,
    n_radial: usize,
    n_angular: usize,
) -> Result<DiskQuadrature> {
    if n_radial == 0 || n_angular == 0 {
        return Err(Error::InvalidCount {
            min: 1,
            got: n_radial.min(n_angular),
        });
    }
    if !(radius > 0.0) || radius >= surface.injectivity_radius() {
        return Err(Error::RadiusTooLarge {
            radius,
            injectivity_radius: surface.injectivity_radius(),
        });
    }
    let (xs, ws) = gauss_legendre(n_radial);
    let dtheta = TAU / n_angular as f64;
    let mut nodes = Vec::with_capacity(n_radial * n_angular);
    for (&x, &w) in xs.iter().zip(&ws) {
        let s = 0.5 * radius * (x + 1.0);
        let radial_weight = 0.5 * radius * w * surface.polar_jacobian(s);
        for j in 0..n_angular {
            let angle = j as f64 * dtheta;
            let p = surface.polar_point(center, s, angle);
            nodes.push((p, radial_weight * dtheta));
        }
    }
    Ok(DiskQuadrature {
        center: *center,
        radius,
        nodes,
        n_radial,
        n_angular,
    })
}

/// Disk rule with the resolution scaled to the integrand's oscillation.
///
/// Default counts (24 x 64) are used unless the disk spans more than 4
/// oscillations of a frequency-`sqrt(lambda)` eigenfunction, in which case
/// both counts are doubled and the radial count keeps at least 8 nodes per
/// oscillation. At wavelength radius `r = k0 / sqrt(lambda)` the number of
/// oscillations is `k0 / pi`, so the defaults always apply there.
pub fn disk_quadrature_for_frequency(
    surface: Surface,
    center: &SurfacePoint,
    radius: f64,
    lambda: f64,
) -> Result<DiskQuadrature> {
    let oscillations = radius * lambda.max(0.0).sqrt() / std::f64::consts::PI;
    let (n_radial, n_angular) = if oscillations > 4.0 {
        let n_r = (8.0 * oscillations).ceil() as usize;
        (
            n_r.max(2 * DEFAULT_N_RADIAL),
            (2.0 * oscillations).ceil() as usize * 8usize.max(2 * DEFAULT_N_ANGULAR / 8),
        )
    } else {
        (DEFAULT_N_RADIAL, DEFAULT_N_ANGULAR)
    };
    disk_quadrature(surface, center, radius, n_radial, n_angular)
}
