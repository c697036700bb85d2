//! Exact `L^2`-normalized Laplace eigenfunctions on the model surfaces.
//!
//! Torus eigenvalues are the integers `m^2 + n^2`; the eigenspace basis is
//! `cos(mx + ny), sin(mx + ny)` over one lattice representative per
//! `(m, n) ~ -(m, n)` pair, each normalized by `1/sqrt(2 pi^2)`. Sphere
//! eigenvalues are `l(l+1)` with the real spherical harmonics as basis;
//! associated Legendre functions are evaluated with the fully normalized
//! three-term recurrence, which is stable well past degree 200 (no
//! factorials are ever formed).

use crate::error::{Error, Result};
use crate::surface::{Surface, SurfacePoint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use std::f64::consts::PI;

/// Torus eigenvalue levels are precomputed up to this value.
pub const TORUS_LAMBDA_CAP: u64 = 5000;
/// Sphere degrees are capped here (the Legendre recurrence is validated
/// through this degree).
pub const SPHERE_DEGREE_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Cos,
    Sin,
}

/// Identifies one basis mode of an eigenspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeDescriptor {
    /// `cos/sin(m x + n y)` on the torus.
    Torus { m: i64, n: i64, parity: Parity },
    /// Real spherical harmonic of degree `l` and order `m` (`m = 0` is the
    /// zonal mode; parity is `Cos` for it).
    Sphere { l: usize, m: usize, parity: Parity },
}

/// One `L^2`-normalized basis mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisMode {
    descriptor: ModeDescriptor,
    /// Scalar applied to the raw mode so that its surface `L^2` norm is 1.
    /// For sphere modes the orthonormal Legendre recurrence already carries
    /// the degree-dependent part; this field holds only the remaining
    /// `sqrt(2)` for nonzonal orders.
    normalization: f64,
}

impl BasisMode {
    pub fn descriptor(&self) -> ModeDescriptor {
        self.descriptor
    }

    pub fn normalization(&self) -> f64 {
        self.normalization
    }

    /// Evaluate the normalized mode at a point of its surface.
    pub fn eval(&self, p: &SurfacePoint) -> f64 {
        match self.descriptor {
            ModeDescriptor::Torus { m, n, parity } => {
                let u = m as f64 * p.c1() + n as f64 * p.c2();
                let raw = match parity {
                    Parity::Cos => u.cos(),
                    Parity::Sin => u.sin(),
                };
                self.normalization * raw
            }
            ModeDescriptor::Sphere { l, m, parity } => {
                let q = legendre_q(l, m, p.c1());
                let angular = match parity {
                    Parity::Cos => (m as f64 * p.c2()).cos(),
                    Parity::Sin => (m as f64 * p.c2()).sin(),
                };
                self.normalization * q * angular
            }
        }
    }
}

/// A full eigenspace: eigenvalue plus an orthonormal basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenspace {
    surface: Surface,
    eigenvalue: f64,
    level: usize,
    basis: Vec<BasisMode>,
}

impl Eigenspace {
    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn eigenvalue(&self) -> f64 {
        self.eigenvalue
    }

    /// 1-based index into the increasing sequence of distinct eigenvalues.
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn basis(&self) -> &[BasisMode] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Increasing list of distinct nonzero torus eigenvalues up to `cap`.
pub fn torus_distinct_eigenvalues(cap: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for lambda in 1..=cap {
        if sum_of_two_squares(lambda) {
            out.push(lambda);
        }
    }
    out
}

fn sum_of_two_squares(lambda: u64) -> bool {
    let mut m = 0u64;
    while m * m <= lambda {
        let rest = lambda - m * m;
        let r = rest.isqrt();
        if r * r == rest {
            return true;
        }
        m += 1;
    }
    false
}

/// Distinct eigenvalue for a 1-based level index.
pub fn eigenvalue_for_level(surface: Surface, level: usize) -> Result<f64> {
    if level == 0 {
        return Err(Error::LevelOutOfRange { level, cap: 0 });
    }
    match surface {
        Surface::FlatTorus => {
            let all = torus_distinct_eigenvalues(TORUS_LAMBDA_CAP);
            all.get(level - 1)
                .map(|&l| l as f64)
                .ok_or(Error::LevelOutOfRange {
                    level,
                    cap: all.len(),
                })
        }
        Surface::UnitSphere => {
            if level > SPHERE_DEGREE_CAP {
                Err(Error::LevelOutOfRange {
                    level,
                    cap: SPHERE_DEGREE_CAP,
                })
            } else {
                let l = level as f64;
                Ok(l * (l + 1.0))
            }
        }
    }
}

/// Level whose eigenvalue is closest to `lambda` (ties toward the smaller).
pub fn level_near_lambda(surface: Surface, lambda: f64) -> Result<usize> {
    match surface {
        Surface::FlatTorus => {
            let all = torus_distinct_eigenvalues(TORUS_LAMBDA_CAP);
            if all.is_empty() || lambda > TORUS_LAMBDA_CAP as f64 {
                return Err(Error::InvalidParameter(format!(
                    "lambda {lambda} above the precomputed cap {TORUS_LAMBDA_CAP}"
                )));
            }
            let mut best = 0usize;
            let mut best_d = f64::INFINITY;
            for (i, &l) in all.iter().enumerate() {
                let d = (l as f64 - lambda).abs();
                if d < best_d {
                    best_d = d;
                    best = i;
                }
            }
            Ok(best + 1)
        }
        Surface::UnitSphere => {
            let mut best = 1usize;
            let mut best_d = f64::INFINITY;
            for level in 1..=SPHERE_DEGREE_CAP {
                let l = level as f64;
                let d = (l * (l + 1.0) - lambda).abs();
                if d < best_d {
                    best_d = d;
                    best = level;
                }
            }
            Ok(best)
        }
    }
}

/// Construct the full orthonormal eigenspace basis at the given level.
pub fn eigenspace_basis(surface: Surface, level: usize) -> Result<Eigenspace> {
    let eigenvalue = eigenvalue_for_level(surface, level)?;
    let basis = match surface {
        Surface::FlatTorus => {
            let lambda = eigenvalue as u64;
            let norm = 1.0 / (2.0 * PI * PI).sqrt();
            let mut modes = Vec::new();
            // One representative per (m, n) ~ -(m, n) pair:
            // m > 0 with any n, plus (0, n) with n > 0.
            for (m, n) in torus_lattice_representatives(lambda) {
                modes.push(BasisMode {
                    descriptor: ModeDescriptor::Torus {
                        m,
                        n,
                        parity: Parity::Cos,
                    },
                    normalization: norm,
                });
                modes.push(BasisMode {
                    descriptor: ModeDescriptor::Torus {
                        m,
                        n,
                        parity: Parity::Sin,
                    },
                    normalization: norm,
                });
            }
            modes
        }
        Surface::UnitSphere => {
            let l = level;
            let mut modes = Vec::with_capacity(2 * l + 1);
            modes.push(BasisMode {
                descriptor: ModeDescriptor::Sphere {
                    l,
                    m: 0,
                    parity: Parity::Cos,
                },
                normalization: 1.0,
            });
            for m in 1..=l {
                for parity in [Parity::Cos, Parity::Sin] {
                    modes.push(BasisMode {
                        descriptor: ModeDescriptor::Sphere { l, m, parity },
                        normalization: std::f64::consts::SQRT_2,
                    });
                }
            }
            modes
        }
    };
    Ok(Eigenspace {
        surface,
        eigenvalue,
        level,
        basis,
    })
}

/// Lattice points with `m^2 + n^2 = lambda`, one per sign pair.
fn torus_lattice_representatives(lambda: u64) -> Vec<(i64, i64)> {
    let mut reps = Vec::new();
    let root = lambda.isqrt();
    for m in 0..=root {
        let rest = lambda - m * m;
        let n = rest.isqrt();
        if n * n != rest {
            continue;
        }
        if m == 0 {
            if n > 0 {
                reps.push((0i64, n as i64));
            }
        } else {
            reps.push((m as i64, n as i64));
            if n > 0 {
                reps.push((m as i64, -(n as i64)));
            }
        }
    }
    reps.sort_unstable();
    reps
}

/// An eigenfunction: real coefficient vector over an eigenspace basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenfunction {
    eigenspace: Eigenspace,
    coefficients: Vec<f64>,
}

impl Eigenfunction {
    /// Gaussian random element of the eigenspace, normalized to unit
    /// `L^2` norm; deterministic given the seed.
    pub fn random(eigenspace: &Eigenspace, seed: u64) -> Eigenfunction {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut coefficients: Vec<f64> = (0..eigenspace.dimension())
            .map(|_| StandardNormal.sample(&mut rng))
            .collect();
        let norm = coefficients.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm == 0.0 {
            coefficients[0] = 1.0;
        } else {
            for c in &mut coefficients {
                *c /= norm;
            }
        }
        Eigenfunction {
            eigenspace: eigenspace.clone(),
            coefficients,
        }
    }

    /// The eigenfunction equal to a single basis mode.
    pub fn single_mode(eigenspace: &Eigenspace, index: usize) -> Eigenfunction {
        assert!(index < eigenspace.dimension());
        let mut coefficients = vec![0.0; eigenspace.dimension()];
        coefficients[index] = 1.0;
        Eigenfunction {
            eigenspace: eigenspace.clone(),
            coefficients,
        }
    }

    /// Eigenfunction with the given coefficients, rescaled to unit norm.
    pub fn from_coefficients(eigenspace: &Eigenspace, coefficients: &[f64]) -> Result<Eigenfunction> {
        if coefficients.len() != eigenspace.dimension() {
            return Err(Error::InvalidParameter(format!(
                "coefficient vector length {} does not match dimension {}",
                coefficients.len(),
                eigenspace.dimension()
            )));
        }
        let norm = coefficients.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidParameter(
                "coefficient vector must be nonzero".into(),
            ));
        }
        Ok(Eigenfunction {
            eigenspace: eigenspace.clone(),
            coefficients: coefficients.iter().map(|c| c / norm).collect(),
        })
    }

    pub fn eigenspace(&self) -> &Eigenspace {
        &self.eigenspace
    }

    pub fn surface(&self) -> Surface {
        self.eigenspace.surface
    }

    pub fn eigenvalue(&self) -> f64 {
        self.eigenspace.eigenvalue
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Pointwise evaluation; errors if the point lives on the wrong surface.
    pub fn evaluate(&self, p: &SurfacePoint) -> Result<f64> {
        if p.surface() != self.eigenspace.surface {
            return Err(Error::SurfaceMismatch {
                expected: self.eigenspace.surface,
                point: p.surface(),
            });
        }
        Ok(self.value_at(p))
    }

    /// Pointwise evaluation on the hot path. Panics (debug) on a surface
    /// mismatch; call sites check the surface once up front.
    pub fn value_at(&self, p: &SurfacePoint) -> f64 {
        debug_assert_eq!(p.surface(), self.eigenspace.surface);
        match self.eigenspace.surface {
            Surface::FlatTorus => {
                // Basis layout: cos/sin pairs per lattice representative.
                let norm = 1.0 / (2.0 * PI * PI).sqrt();
                let mut sum = 0.0;
                let mut i = 0;
                while i < self.coefficients.len() {
                    let c_cos = self.coefficients[i];
                    let c_sin = self.coefficients[i + 1];
                    if c_cos != 0.0 || c_sin != 0.0 {
                        let ModeDescriptor::Torus { m, n, .. } = self.eigenspace.basis[i].descriptor
                        else {
                            unreachable!()
                        };
                        let u = m as f64 * p.c1() + n as f64 * p.c2();
                        let (s, c) = u.sin_cos();
                        sum += c_cos * c + c_sin * s;
                    }
                    i += 2;
                }
                norm * sum
            }
            Surface::UnitSphere => {
                let ModeDescriptor::Sphere { l, .. } = self.eigenspace.basis[0].descriptor else {
                    unreachable!()
                };
                // Highest order with a nonzero coefficient; forced modes
                // keep the Legendre work proportional to what they use.
                let mut m_max = 0;
                for m in (1..=l).rev() {
                    if self.coefficients[2 * m - 1] != 0.0 || self.coefficients[2 * m] != 0.0 {
                        m_max = m;
                        break;
                    }
                }
                let q = legendre_q_row_bounded(l, m_max, p.c1());
                let mut sum = self.coefficients[0] * q[0];
                let (sin_phi, cos_phi) = p.c2().sin_cos();
                // cos(m phi), sin(m phi) by angle addition.
                let mut cos_m = 1.0;
                let mut sin_m = 0.0;
                for m in 1..=m_max {
                    let next_cos = cos_m * cos_phi - sin_m * sin_phi;
                    let next_sin = sin_m * cos_phi + cos_m * sin_phi;
                    cos_m = next_cos;
                    sin_m = next_sin;
                    let c_cos = self.coefficients[2 * m - 1];
                    let c_sin = self.coefficients[2 * m];
                    if c_cos != 0.0 || c_sin != 0.0 {
                        sum += std::f64::consts::SQRT_2 * q[m] * (c_cos * cos_m + c_sin * sin_m);
                    }
                }
                sum
            }
        }
    }
}

/// The deterministic single-mode eigenfunction proportional to `cos(m x)`
/// on the torus (eigenvalue `m^2`). Used as an oracle subject: its nodal
/// set is `2m` vertical circles of total length `4 pi m`.
pub fn torus_cos_mode(m: i64) -> Result<Eigenfunction> {
    if m <= 0 {
        return Err(Error::InvalidParameter(format!("need m >= 1, got {m}")));
    }
    let lambda = (m * m) as u64;
    if lambda > TORUS_LAMBDA_CAP {
        return Err(Error::InvalidParameter(format!(
            "m^2 = {lambda} above the eigenvalue cap {TORUS_LAMBDA_CAP}"
        )));
    }
    let all = torus_distinct_eigenvalues(TORUS_LAMBDA_CAP);
    let level = all
        .iter()
        .position(|&l| l == lambda)
        .expect("every perfect square is a torus eigenvalue")
        + 1;
    let space = eigenspace_basis(Surface::FlatTorus, level)?;
    let idx = space
        .basis()
        .iter()
        .position(|b| {
            matches!(b.descriptor(), ModeDescriptor::Torus { m: mm, n: 0, parity: Parity::Cos } if mm == m)
        })
        .expect("(m, 0) cosine mode exists");
    Ok(Eigenfunction::single_mode(&space, idx))
}

/// The zonal spherical harmonic of degree `l` (eigenvalue `l(l+1)`); its
/// nodal set is `l` latitude circles at the Legendre roots.
pub fn sphere_zonal_mode(l: usize) -> Result<Eigenfunction> {
    let space = eigenspace_basis(Surface::UnitSphere, l)?;
    Ok(Eigenfunction::single_mode(&space, 0))
}

/// Orthonormal associated Legendre value `Q_{l m}(cos theta)`, where the
/// real spherical harmonics are `Q_{l 0}` and `sqrt(2) Q_{l m} cos/sin(m phi)`.
pub(crate) fn legendre_q(l: usize, m: usize, theta: f64) -> f64 {
    debug_assert!(m <= l);
    let x = theta.cos();
    let s = theta.sin();
    // Sectoral seed Q_{m m}.
    let mut q_mm = (1.0 / (4.0 * PI)).sqrt();
    for k in 0..m {
        q_mm *= ((2.0 * k as f64 + 3.0) / (2.0 * k as f64 + 2.0)).sqrt() * s;
    }
    if l == m {
        return q_mm;
    }
    let mut prev = q_mm;
    let mut cur = (2.0 * m as f64 + 3.0).sqrt() * x * prev;
    for ll in (m + 2)..=l {
        let llf = ll as f64;
        let mf = m as f64;
        let a = ((4.0 * llf * llf - 1.0) / (llf * llf - mf * mf)).sqrt();
        let b = (((2.0 * llf + 1.0) * (llf - 1.0 - mf) * (llf - 1.0 + mf))
            / ((2.0 * llf - 3.0) * (llf * llf - mf * mf)))
            .sqrt();
        let next = a * x * cur - b * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// All `Q_{l m}(cos theta)` for `m = 0..=l` in one pass.
#[cfg(test)]
pub(crate) fn legendre_q_row(l: usize, theta: f64) -> Vec<f64> {
    legendre_q_row_bounded(l, l, theta)
}

/// `Q_{l m}(cos theta)` for `m = 0..=m_max`.
pub(crate) fn legendre_q_row_bounded(l: usize, m_max: usize, theta: f64) -> Vec<f64> {
    debug_assert!(m_max <= l);
    let x = theta.cos();
    let s = theta.sin();
    let mut out = vec![0.0; m_max + 1];
    let mut q_mm = (1.0 / (4.0 * PI)).sqrt();
    for m in 0..=m_max {
        out[m] = if l == m {
            q_mm
        } else {
            let mut prev = q_mm;
            let mut cur = (2.0 * m as f64 + 3.0).sqrt() * x * prev;
            for ll in (m + 2)..=l {
                let llf = ll as f64;
                let mf = m as f64;
                let a = ((4.0 * llf * llf - 1.0) / (llf * llf - mf * mf)).sqrt();
                let b = (((2.0 * llf + 1.0) * (llf - 1.0 - mf) * (llf - 1.0 + mf))
                    / ((2.0 * llf - 3.0) * (llf * llf - mf * mf)))
                    .sqrt();
                let next = a * x * cur - b * prev;
                prev = cur;
                cur = next;
            }
            cur
        };
        q_mm *= ((2.0 * m as f64 + 3.0) / (2.0 * m as f64 + 2.0)).sqrt() * s;
    }
    out
}

/// `|Delta_h f(p) + lambda f(p)|` with a second-order finite-difference
/// Laplacian: 5-point stencil on the torus, the metric-corrected stencil
/// `(1/sin t) d_t(sin t d_t) + (1/sin^2 t) d_pp` on the sphere.
pub fn laplacian_residual(f: &Eigenfunction, p: &SurfacePoint, h: f64) -> Result<f64> {
    if !(h > 0.0) || h >= 1e-2 {
        return Err(Error::StepTooLarge(h));
    }
    let surface = f.surface();
    if p.surface() != surface {
        return Err(Error::SurfaceMismatch {
            expected: surface,
            point: p.surface(),
        });
    }
    let lambda = f.eigenvalue();
    let center = f.value_at(p);
    let lap = match surface {
        Surface::FlatTorus => {
            let (x, y) = (p.c1(), p.c2());
            let fxp = f.value_at(&surface.point(x + h, y));
            let fxm = f.value_at(&surface.point(x - h, y));
            let fyp = f.value_at(&surface.point(x, y + h));
            let fym = f.value_at(&surface.point(x, y - h));
            (fxp + fxm + fyp + fym - 4.0 * center) / (h * h)
        }
        Surface::UnitSphere => {
            let (theta, phi) = (p.c1(), p.c2());
            if theta < 2.0 * h || theta > PI - 2.0 * h {
                return Err(Error::PoleProximity(theta));
            }
            let ftp = f.value_at(&surface.point(theta + h, phi));
            let ftm = f.value_at(&surface.point(theta - h, phi));
            let fpp = f.value_at(&surface.point(theta, phi + h));
            let fpm = f.value_at(&surface.point(theta, phi - h));
            let sin_t = theta.sin();
            let flux = ((theta + 0.5 * h).sin() * (ftp - center)
                - (theta - 0.5 * h).sin() * (center - ftm))
                / (h * h);
            flux / sin_t + (fpp - 2.0 * center + fpm) / (h * h * sin_t * sin_t)
        }
    };
    Ok((lap + lambda * center).abs())
}
