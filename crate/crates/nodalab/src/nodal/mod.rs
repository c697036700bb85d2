//! Nodal set extraction and measurement.
//!
//! The surface is triangulated at a wavelength-resolving spacing, the
//! eigenfunction is linearly interpolated per triangle, and zero-crossing
//! segments are chained into polylines. Lengths are Riemannian: wrapped
//! Euclidean on the torus, great-circle between consecutive vertices on the
//! sphere.

pub mod marching;

pub use marching::planar_nodal_polylines;

use crate::eigenbasis::Eigenfunction;
use crate::error::{Error, Result};
use crate::quadrature::pairwise_sum;
use crate::surface::{Surface, SurfacePoint};
use marching::{chain_segments, triangle_crossings, EdgeKey, Segment};
use std::f64::consts::{PI, TAU};

/// Convergence metadata from a 2x grid refinement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refinement {
    /// Length measured on the coarser grid.
    pub coarse_length: f64,
    /// |fine - coarse|.
    pub delta: f64,
    /// Second-order Richardson extrapolation of the two lengths.
    pub richardson_length: f64,
    /// Error bar attached to the reported value: delta / 3.
    pub error_estimate: f64,
}

/// Polyline approximation of a nodal set.
#[derive(Debug, Clone)]
pub struct NodalResult {
    surface: Surface,
    polylines: Vec<Vec<SurfacePoint>>,
    total_length: f64,
    /// Samples per wavelength used to size the grid.
    grid_resolution: usize,
    /// Triangle ids where all three vertex values sit below the singular
    /// threshold (`spacing^2 * max|f|`) or whose parent quad has
    /// alternating corner signs. Heuristic flags only; never resolved.
    suspected_singular_cells: Vec<usize>,
    refinement: Option<Refinement>,
}

impl NodalResult {
    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn polylines(&self) -> &[Vec<SurfacePoint>] {
        &self.polylines
    }

    pub fn total_length(&self) -> f64 {
        self.total_length
    }

    pub fn grid_resolution(&self) -> usize {
        self.grid_resolution
    }

    pub fn suspected_singular_cells(&self) -> &[usize] {
        &self.suspected_singular_cells
    }

    pub fn refinement(&self) -> Option<Refinement> {
        self.refinement
    }

    /// Length reported with refinement information when present
    /// (Richardson value), otherwise the raw grid length.
    pub fn reported_length(&self) -> f64 {
        self.refinement
            .map(|r| r.richardson_length)
            .unwrap_or(self.total_length)
    }

    /// CSV dump of the polylines (curve_id, vertex_index, coord1, coord2).
    pub fn polylines_csv(&self) -> String {
        let mut out = String::from("curve_id,vertex_index,coord1,coord2\n");
        for (curve, poly) in self.polylines.iter().enumerate() {
            for (k, p) in poly.iter().enumerate() {
                out.push_str(&format!("{curve},{k},{:.11e},{:.11e}\n", p.c1(), p.c2()));
            }
        }
        out
    }
}

/// Riemannian length of one polyline.
pub fn polyline_length(surface: Surface, polyline: &[SurfacePoint]) -> f64 {
    let terms: Vec<f64> = polyline
        .windows(2)
        .map(|w| surface.distance(&w[0], &w[1]))
        .collect();
    pairwise_sum(&terms)
}

/// Total Riemannian length of an extracted nodal set.
pub fn nodal_length(result: &NodalResult) -> f64 {
    let terms: Vec<f64> = result
        .polylines
        .iter()
        .map(|p| polyline_length(result.surface, p))
        .collect();
    pairwise_sum(&terms)
}

/// Extract the nodal set of `f` on a grid with at least
/// `samples_per_wavelength` vertices per wavelength `2 pi / sqrt(lambda)`.
pub fn extract_nodal_set(f: &Eigenfunction, samples_per_wavelength: usize) -> Result<NodalResult> {
    extract_with_zero_sign(f, samples_per_wavelength, 1.0)
}

/// Same extraction, refined once: runs at `spw` and `2 spw` and attaches
/// Richardson metadata to the finer result.
pub fn extract_nodal_set_refined(
    f: &Eigenfunction,
    samples_per_wavelength: usize,
) -> Result<NodalResult> {
    let coarse = extract_with_zero_sign(f, samples_per_wavelength, 1.0)?;
    let mut fine = extract_with_zero_sign(f, samples_per_wavelength * 2, 1.0)?;
    let delta = (fine.total_length - coarse.total_length).abs();
    let richardson = fine.total_length + (fine.total_length - coarse.total_length) / 3.0;
    fine.refinement = Some(Refinement {
        coarse_length: coarse.total_length,
        delta,
        richardson_length: richardson,
        error_estimate: delta / 3.0,
    });
    Ok(fine)
}

/// Extraction with the sign used to replace exact-zero vertex values
/// (`+delta` by default; the negative choice exists to test stability).
pub fn extract_with_zero_sign(
    f: &Eigenfunction,
    samples_per_wavelength: usize,
    zero_sign: f64,
) -> Result<NodalResult> {
    if samples_per_wavelength < 4 {
        return Err(Error::InvalidCount {
            min: 4,
            got: samples_per_wavelength,
        });
    }
    let surface = f.surface();
    let lambda = f.eigenvalue();
    let spacing = (TAU / lambda.sqrt()) / samples_per_wavelength as f64;
    if spacing > surface.injectivity_radius() {
        return Err(Error::ResolutionTooCoarse {
            spacing,
            injectivity_radius: surface.injectivity_radius(),
        });
    }
    let (polylines, singular) = match surface {
        Surface::FlatTorus => torus_extract(f, spacing, zero_sign),
        Surface::UnitSphere => sphere_extract(f, spacing, zero_sign),
    };
    let mut result = NodalResult {
        surface,
        polylines,
        total_length: 0.0,
        grid_resolution: samples_per_wavelength,
        suspected_singular_cells: singular,
        refinement: None,
    };
    result.total_length = nodal_length(&result);
    Ok(result)
}

fn replace_zeros(values: &mut [f64], zero_sign: f64) -> f64 {
    let max_abs = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let delta = 1e-12 * if max_abs > 0.0 { max_abs } else { 1.0 };
    for v in values.iter_mut() {
        if *v == 0.0 {
            *v = zero_sign * delta;
        }
    }
    max_abs
}

fn torus_extract(
    f: &Eigenfunction,
    spacing: f64,
    zero_sign: f64,
) -> (Vec<Vec<SurfacePoint>>, Vec<usize>) {
    let surface = Surface::FlatTorus;
    let n = ((TAU / spacing).ceil() as usize).max(4);
    let h = TAU / n as f64;
    let mut values = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            let p = surface.point(i as f64 * h, j as f64 * h);
            values[i * n + j] = f.value_at(&p);
        }
    }
    let max_abs = replace_zeros(&mut values, zero_sign);
    let singular_threshold = spacing * spacing * max_abs;
    let id = |i: usize, j: usize| -> u32 { ((i % n) * n + (j % n)) as u32 };

    let mut segments: Vec<Segment<SurfacePoint>> = Vec::new();
    let mut singular = Vec::new();
    let mut tri_index = 0usize;
    for i in 0..n {
        for j in 0..n {
            // Unwrapped local corner positions; canonical wrapping happens
            // when the crossing point is converted to a SurfacePoint.
            let corners = [
                (id(i, j), (i as f64 * h, j as f64 * h)),
                (id(i + 1, j), ((i + 1) as f64 * h, j as f64 * h)),
                (id(i, j + 1), (i as f64 * h, (j + 1) as f64 * h)),
                (id(i + 1, j + 1), ((i + 1) as f64 * h, (j + 1) as f64 * h)),
            ];
            let quad_vals = corners.map(|(vid, _)| values[vid as usize]);
            let saddle = alternating_signs(&quad_vals);
            for tri in [[0usize, 1, 3], [0, 3, 2]] {
                let ids = tri.map(|k| corners[k].0);
                let vals = tri.map(|k| quad_vals[k]);
                if vals.iter().all(|v| v.abs() < singular_threshold) || saddle {
                    singular.push(tri_index);
                }
                if let Some(crossings) = triangle_crossings(ids, vals) {
                    let ends = crossings.map(|cr| {
                        let pa = corner_pos(&corners, cr.key.0);
                        let pb = corner_pos(&corners, cr.key.1);
                        let x = pa.0 + cr.t * (pb.0 - pa.0);
                        let y = pa.1 + cr.t * (pb.1 - pa.1);
                        (cr.key, surface.point(x, y))
                    });
                    segments.push(Segment { ends });
                }
                tri_index += 1;
            }
        }
    }
    (chain_segments(segments), singular)
}

fn corner_pos(corners: &[(u32, (f64, f64)); 4], vid: u32) -> (f64, f64) {
    corners
        .iter()
        .find(|(id, _)| *id == vid)
        .map(|&(_, p)| p)
        .expect("crossing key belongs to this triangle")
}

fn alternating_signs(vals: &[f64; 4]) -> bool {
    // Corner order (0,0), (1,0), (0,1), (1,1); the cycle is 0-1-3-2.
    let cycle = [vals[0], vals[1], vals[3], vals[2]];
    let mut changes = 0;
    for k in 0..4 {
        if (cycle[k] > 0.0) != (cycle[(k + 1) % 4] > 0.0) {
            changes += 1;
        }
    }
    changes == 4
}

fn sphere_extract(
    f: &Eigenfunction,
    spacing: f64,
    zero_sign: f64,
) -> (Vec<Vec<SurfacePoint>>, Vec<usize>) {
    let surface = Surface::UnitSphere;
    let n_theta = ((PI / spacing).ceil() as usize).max(3);
    let n_phi = ((TAU / spacing).ceil() as usize).max(4);
    let interior_rows = n_theta - 1;
    let south_id = (1 + interior_rows * n_phi) as u32;
    let vid = |i: usize, j: usize| -> u32 {
        debug_assert!((1..n_theta).contains(&i));
        (1 + (i - 1) * n_phi + (j % n_phi)) as u32
    };
    let theta_of = |i: usize| i as f64 * PI / n_theta as f64;
    let phi_of = |j: usize| (j % n_phi) as f64 * TAU / n_phi as f64;

    let mut values = vec![0.0f64; south_id as usize + 1];
    let mut positions = vec![[0.0f64; 3]; south_id as usize + 1];
    values[0] = f.value_at(&surface.point(0.0, 0.0));
    positions[0] = [0.0, 0.0, 1.0];
    values[south_id as usize] = f.value_at(&surface.point(PI, 0.0));
    positions[south_id as usize] = [0.0, 0.0, -1.0];
    for i in 1..n_theta {
        let theta = theta_of(i);
        for j in 0..n_phi {
            let p = surface.point(theta, phi_of(j));
            let k = vid(i, j) as usize;
            values[k] = f.value_at(&p);
            positions[k] = p.unit_vector();
        }
    }
    let max_abs = replace_zeros(&mut values, zero_sign);
    let singular_threshold = spacing * spacing * max_abs;

    let mut segments: Vec<Segment<SurfacePoint>> = Vec::new();
    let mut singular = Vec::new();
    let mut tri_index = 0usize;
    let mut emit = |ids: [u32; 3],
                    segments: &mut Vec<Segment<SurfacePoint>>,
                    singular: &mut Vec<usize>,
                    tri_index: &mut usize,
                    saddle: bool| {
        let vals = ids.map(|k| values[k as usize]);
        if vals.iter().all(|v| v.abs() < singular_threshold) || saddle {
            singular.push(*tri_index);
        }
        if let Some(crossings) = triangle_crossings(ids, vals) {
            let ends = crossings.map(|cr| {
                let pa = positions[cr.key.0 as usize];
                let pb = positions[cr.key.1 as usize];
                (cr.key, slerp_point(pa, pb, cr.t))
            });
            segments.push(Segment { ends });
        }
        *tri_index += 1;
    };

    // North polar fan.
    for j in 0..n_phi {
        emit(
            [0, vid(1, j), vid(1, j + 1)],
            &mut segments,
            &mut singular,
            &mut tri_index,
            false,
        );
    }
    // Latitude bands.
    for i in 1..n_theta - 1 {
        for j in 0..n_phi {
            let a = vid(i, j);
            let b = vid(i, j + 1);
            let c = vid(i + 1, j);
            let d = vid(i + 1, j + 1);
            let quad = [
                values[a as usize],
                values[b as usize],
                values[d as usize],
                values[c as usize],
            ];
            let mut changes = 0;
            for k in 0..4 {
                if (quad[k] > 0.0) != (quad[(k + 1) % 4] > 0.0) {
                    changes += 1;
                }
            }
            let saddle = changes == 4;
            emit([a, b, d], &mut segments, &mut singular, &mut tri_index, saddle);
            emit([a, d, c], &mut segments, &mut singular, &mut tri_index, saddle);
        }
    }
    // South polar fan.
    for j in 0..n_phi {
        emit(
            [south_id, vid(n_theta - 1, j), vid(n_theta - 1, j + 1)],
            &mut segments,
            &mut singular,
            &mut tri_index,
            false,
        );
    }
    (chain_segments(segments), singular)
}

/// Point at arc fraction `t` along the great circle from `a` to `b`.
fn slerp_point(a: [f64; 3], b: [f64; 3], t: f64) -> SurfacePoint {
    let dot = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]).clamp(-1.0, 1.0);
    let omega = dot.acos();
    let v = if omega < 1e-12 {
        [
            a[0] + t * (b[0] - a[0]),
            a[1] + t * (b[1] - a[1]),
            a[2] + t * (b[2] - a[2]),
        ]
    } else {
        let sin_omega = omega.sin();
        let wa = ((1.0 - t) * omega).sin() / sin_omega;
        let wb = (t * omega).sin() / sin_omega;
        [
            wa * a[0] + wb * b[0],
            wa * a[1] + wb * b[1],
            wa * a[2] + wb * b[2],
        ]
    };
    SurfacePoint::from_unit_vector(v)
}

/// Zero count of a continuous planar function on the circle of the given
/// radius, with the stability flag from doubling the sample count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircleZeros {
    pub count: usize,
    /// False when doubling `n_samples` changes the count (sampling too
    /// coarse for this function).
    pub stable: bool,
}

/// Count sign changes of `F` on the circle `|z| = radius`, refining each
/// bracketed zero by bisection to width 1e-10 in the angle and merging
/// zeros closer than one sample spacing.
pub fn circle_zero_count<F: Fn(f64, f64) -> f64>(
    f: F,
    radius: f64,
    n_samples: usize,
) -> Result<CircleZeros> {
    if n_samples < 64 {
        return Err(Error::InvalidCount {
            min: 64,
            got: n_samples,
        });
    }
    let count = circle_zeros_at(&f, radius, n_samples);
    let count2 = circle_zeros_at(&f, radius, 2 * n_samples);
    Ok(CircleZeros {
        count,
        stable: count == count2,
    })
}

fn circle_zeros_at<F: Fn(f64, f64) -> f64>(f: &F, radius: f64, n: usize) -> usize {
    let g = |theta: f64| f(radius * theta.cos(), radius * theta.sin());
    let mut values: Vec<f64> = (0..n).map(|j| g(j as f64 * TAU / n as f64)).collect();
    let max_abs = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if max_abs == 0.0 {
        return 0;
    }
    let tiny = 1e-14 * max_abs;
    for v in &mut values {
        if *v == 0.0 {
            *v = tiny;
        }
    }
    let mut zeros = Vec::new();
    for j in 0..n {
        let va = values[j];
        let vb = values[(j + 1) % n];
        if (va > 0.0) == (vb > 0.0) {
            continue;
        }
        let mut lo = j as f64 * TAU / n as f64;
        let mut hi = (j + 1) as f64 * TAU / n as f64;
        let mut vlo = va;
        while hi - lo > 1e-10 {
            let mid = 0.5 * (lo + hi);
            let vm = g(mid);
            if vm == 0.0 {
                lo = mid;
                break;
            }
            if (vm > 0.0) == (vlo > 0.0) {
                lo = mid;
                vlo = vm;
            } else {
                hi = mid;
            }
        }
        zeros.push(0.5 * (lo + hi));
    }
    if zeros.is_empty() {
        return 0;
    }
    // Merge zeros closer than one sample spacing (arc 2 pi r / n), including
    // the wrap-around pair.
    let min_sep = TAU / n as f64;
    let mut merged = vec![zeros[0]];
    for &z in &zeros[1..] {
        if z - *merged.last().unwrap() >= min_sep {
            merged.push(z);
        }
    }
    if merged.len() > 1 && (merged[0] + TAU - *merged.last().unwrap()) < min_sep {
        merged.pop();
    }
    merged.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigenbasis::{
        eigenspace_basis, torus_distinct_eigenvalues, Eigenfunction, ModeDescriptor, Parity,
        TORUS_LAMBDA_CAP,
    };
    use approx::assert_relative_eq;

    fn torus_level_of(lambda: u64) -> usize {
        torus_distinct_eigenvalues(TORUS_LAMBDA_CAP)
            .iter()
            .position(|&l| l == lambda)
            .unwrap()
            + 1
    }

    pub(crate) fn torus_cos_mx(m: i64) -> Eigenfunction {
        let space = eigenspace_basis(Surface::FlatTorus, torus_level_of((m * m) as u64)).unwrap();
        let idx = space
            .basis()
            .iter()
            .position(|b| {
                matches!(b.descriptor(), ModeDescriptor::Torus { m: mm, n: 0, parity: Parity::Cos } if mm == m)
            })
            .unwrap();
        Eigenfunction::single_mode(&space, idx)
    }

    #[test]
    fn cos_5x_gives_ten_circles_of_total_length_20pi() {
        let f = torus_cos_mx(5);
        let r = extract_nodal_set(&f, 16).unwrap();
        assert_eq!(r.polylines().len(), 10);
        assert_relative_eq!(r.total_length(), 20.0 * PI, max_relative = 5e-3);
        // Every circle is closed.
        for poly in r.polylines() {
            assert_eq!(poly.first(), poly.last());
        }
    }

    #[test]
    fn sphere_zonal_l2_two_latitude_circles() {
        let space = eigenspace_basis(Surface::UnitSphere, 2).unwrap();
        let f = Eigenfunction::single_mode(&space, 0);
        let r = extract_nodal_set(&f, 16).unwrap();
        assert_eq!(r.polylines().len(), 2);
        let expected = 2.0 * TAU * (2.0f64 / 3.0).sqrt();
        assert_relative_eq!(r.total_length(), expected, max_relative = 5e-3);
    }

    #[test]
    fn cos_x_plus_cos_y_matches_dense_marching_oracle() {
        let space = eigenspace_basis(Surface::FlatTorus, 1).unwrap();
        // cos x + cos y, normalized: coefficients on (1,0)cos and (0,1)cos.
        let idx_x = space
            .basis()
            .iter()
            .position(|b| {
                matches!(
                    b.descriptor(),
                    ModeDescriptor::Torus {
                        m: 1,
                        n: 0,
                        parity: Parity::Cos
                    }
                )
            })
            .unwrap();
        let idx_y = space
            .basis()
            .iter()
            .position(|b| {
                matches!(
                    b.descriptor(),
                    ModeDescriptor::Torus {
                        m: 0,
                        n: 1,
                        parity: Parity::Cos
                    }
                )
            })
            .unwrap();
        let mut coeffs = vec![0.0; space.dimension()];
        coeffs[idx_x] = 1.0;
        coeffs[idx_y] = 1.0;
        let f = Eigenfunction::from_coefficients(&space, &coeffs).unwrap();
        let coarse = extract_nodal_set(&f, 16).unwrap();
        let dense = extract_nodal_set(&f, 128).unwrap();
        assert_relative_eq!(coarse.total_length(), dense.total_length(), max_relative = 1e-2);
        // The zero set is the pair of diagonal closed geodesics, total 4 pi sqrt 2.
        assert_relative_eq!(
            dense.total_length(),
            4.0 * PI * std::f64::consts::SQRT_2,
            max_relative = 1e-2
        );
        // Saddle points of cos x + cos y sit on the nodal set; the flag
        // heuristic must notice them.
        assert!(!coarse.suspected_singular_cells().is_empty());
    }

    #[test]
    fn nodal_length_of_empty_set_is_zero() {
        let r = NodalResult {
            surface: Surface::FlatTorus,
            polylines: Vec::new(),
            total_length: 0.0,
            grid_resolution: 16,
            suspected_singular_cells: Vec::new(),
            refinement: None,
        };
        assert_eq!(nodal_length(&r), 0.0);
    }

    #[test]
    fn single_torus_segment_has_euclidean_length() {
        let s = Surface::FlatTorus;
        let poly = vec![s.point(0.0, 0.0), s.point(0.3, 0.4)];
        assert_relative_eq!(polyline_length(s, &poly), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn cos_mx_lengths_match_4_pi_m() {
        for m in [2i64, 7, 12] {
            let f = torus_cos_mx(m);
            let r = extract_nodal_set(&f, 16).unwrap();
            let expected = 4.0 * PI * m as f64;
            assert!(
                (r.total_length() / expected - 1.0).abs() < 5e-3,
                "m={m}: {} vs {expected}",
                r.total_length()
            );
        }
    }

    #[test]
    fn refinement_metadata_present_and_consistent() {
        let space = eigenspace_basis(Surface::FlatTorus, torus_level_of(65)).unwrap();
        let f = Eigenfunction::random(&space, 4);
        let r = extract_nodal_set_refined(&f, 16).unwrap();
        let info = r.refinement().unwrap();
        assert_eq!(r.grid_resolution(), 32);
        assert_relative_eq!(
            info.richardson_length,
            r.total_length() + (r.total_length() - info.coarse_length) / 3.0
        );
        assert!(info.error_estimate >= 0.0);
    }

    #[test]
    fn zero_sign_perturbation_is_stable() {
        // cos(5x) has exact zeros on grid vertices; flipping the replacement
        // sign must not move the measured length by more than 0.1%.
        let f = torus_cos_mx(5);
        let plus = extract_with_zero_sign(&f, 16, 1.0).unwrap();
        let minus = extract_with_zero_sign(&f, 16, -1.0).unwrap();
        let rel = (plus.total_length() - minus.total_length()).abs() / plus.total_length();
        assert!(rel < 1e-3, "relative change {rel}");
    }

    #[test]
    fn bruning_lower_bound_sanity() {
        for (lambda, seed) in [(25u64, 1u64), (100, 2), (401, 3)] {
            let space = eigenspace_basis(Surface::FlatTorus, torus_level_of(lambda)).unwrap();
            let f = Eigenfunction::random(&space, seed);
            let r = extract_nodal_set(&f, 16).unwrap();
            assert!(
                r.total_length() >= 0.1 * (lambda as f64).sqrt(),
                "lambda {lambda}: length {}",
                r.total_length()
            );
        }
    }

    #[test]
    fn rejects_too_coarse_sampling() {
        let f = torus_cos_mx(2);
        assert!(matches!(
            extract_nodal_set(&f, 3),
            Err(Error::InvalidCount { min: 4, .. })
        ));
    }

    #[test]
    fn circle_zeros_of_re_z3() {
        let z = circle_zero_count(|x, y| x * x * x - 3.0 * x * y * y, 1.0, 256).unwrap();
        assert_eq!(z.count, 6);
        assert!(z.stable);
    }

    #[test]
    fn circle_zeros_of_constant() {
        let z = circle_zero_count(|_, _| 1.0, 1.0, 128).unwrap();
        assert_eq!(z.count, 0);
        assert!(z.stable);
    }

    #[test]
    fn circle_zeros_match_dense_brute_force() {
        // F = Re(z^5) + 0.1 Re(z^2) on the unit circle.
        let f = |x: f64, y: f64| {
            let z = num_complex::Complex64::new(x, y);
            (z.powi(5) + 0.1 * z.powi(2)).re
        };
        let z = circle_zero_count(f, 1.0, 256).unwrap();
        assert!(z.stable);
        // Brute force: raw sign changes over 10^6 samples.
        let n = 1_000_000usize;
        let mut changes = 0;
        let mut prev = f(1.0, 0.0);
        for j in 1..=n {
            let t = j as f64 * TAU / n as f64;
            let v = f(t.cos(), t.sin());
            if (v > 0.0) != (prev > 0.0) {
                changes += 1;
            }
            prev = v;
        }
        assert_eq!(z.count, changes);
    }

    #[test]
    fn circle_zeros_requires_64_samples() {
        assert!(circle_zero_count(|x, _| x, 1.0, 32).is_err());
    }
}
