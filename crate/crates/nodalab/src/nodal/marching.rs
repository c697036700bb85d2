//! Marching triangles: per-simplex linear zero-crossing extraction and
//! chaining of the resulting segments into polylines.
//!
//! Working per triangle keeps the interpolation unambiguous (no marching
//! squares saddle cases). Crossing points are keyed by the grid edge they
//! lie on; the two triangles sharing an edge compute bit-identical points
//! there, so chaining is exact id matching rather than float comparison.

use std::collections::HashMap;

/// Ordered pair of grid vertex ids identifying an edge.
pub(crate) type EdgeKey = (u32, u32);

/// A crossing on the edge `(a, b)` (ids ordered): the zero sits at
/// parameter `t` measured from the vertex with the smaller id.
#[derive(Debug, Clone, Copy)]
pub(crate) struct EdgeCrossing {
    pub key: EdgeKey,
    pub t: f64,
}

/// Zero crossings of the linear interpolant on a triangle with (nonzero)
/// vertex values. Either no edge changes sign or exactly two do.
pub(crate) fn triangle_crossings(ids: [u32; 3], values: [f64; 3]) -> Option<[EdgeCrossing; 2]> {
    debug_assert!(values.iter().all(|v| *v != 0.0));
    let mut found = [EdgeCrossing {
        key: (0, 0),
        t: 0.0,
    }; 2];
    let mut count = 0;
    for (i, j) in [(0usize, 1usize), (1, 2), (2, 0)] {
        let (va, vb) = (values[i], values[j]);
        if (va > 0.0) == (vb > 0.0) {
            continue;
        }
        let (lo, hi, vlo, vhi) = if ids[i] < ids[j] {
            (ids[i], ids[j], va, vb)
        } else {
            (ids[j], ids[i], vb, va)
        };
        let t = vlo / (vlo - vhi);
        if count < 2 {
            found[count] = EdgeCrossing { key: (lo, hi), t };
        }
        count += 1;
    }
    match count {
        0 => None,
        2 => Some(found),
        _ => unreachable!("a triangle has 0 or 2 sign-changing edges"),
    }
}

/// One extracted segment: the two edge crossings and their positions.
pub(crate) struct Segment<P> {
    pub ends: [(EdgeKey, P); 2],
}

/// Chain segments into polylines by matching shared edge keys.
///
/// Deterministic: polylines start from the lowest unvisited segment index
/// and the walk order depends only on the input order.
pub(crate) fn chain_segments<P: Copy>(segments: Vec<Segment<P>>) -> Vec<Vec<P>> {
    let mut by_edge: HashMap<EdgeKey, Vec<usize>> = HashMap::new();
    for (i, seg) in segments.iter().enumerate() {
        by_edge.entry(seg.ends[0].0).or_default().push(i);
        by_edge.entry(seg.ends[1].0).or_default().push(i);
    }
    let mut visited = vec![false; segments.len()];
    let mut polylines = Vec::new();
    for start in 0..segments.len() {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut chain: Vec<(EdgeKey, P)> = vec![segments[start].ends[0], segments[start].ends[1]];
        // Walk forward from the tail, then backward from the head.
        for dir in 0..2 {
            loop {
                let (tail_key, _) = *chain.last().unwrap();
                let next = by_edge
                    .get(&tail_key)
                    .and_then(|ids| ids.iter().find(|&&i| !visited[i]).copied());
                let Some(i) = next else { break };
                visited[i] = true;
                let seg = &segments[i];
                let other = if seg.ends[0].0 == tail_key {
                    seg.ends[1]
                } else {
                    seg.ends[0]
                };
                chain.push(other);
            }
            if dir == 0 {
                chain.reverse();
            }
        }
        // Closed curves come out with first == last (same edge, same
        // interpolated point); nothing to fix up.
        polylines.push(chain.into_iter().map(|(_, p)| p).collect());
    }
    polylines
}

/// Marching triangles on a planar square grid over `[-half, half]^2` with
/// `n x n` vertices. Returns chained polylines in plane coordinates.
pub fn planar_nodal_polylines<F: Fn(f64, f64) -> f64>(
    f: F,
    half_width: f64,
    n: usize,
) -> Vec<Vec<(f64, f64)>> {
    assert!(n >= 2);
    let h = 2.0 * half_width / (n - 1) as f64;
    let coord = |k: usize| -half_width + k as f64 * h;
    let mut values = vec![0.0f64; n * n];
    let mut max_abs = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let v = f(coord(i), coord(j));
            values[i * n + j] = v;
            max_abs = max_abs.max(v.abs());
        }
    }
    let delta = 1e-12 * if max_abs > 0.0 { max_abs } else { 1.0 };
    for v in &mut values {
        if *v == 0.0 {
            *v = delta;
        }
    }
    let pos = |id: u32| -> (f64, f64) {
        let i = (id as usize) / n;
        let j = (id as usize) % n;
        (coord(i), coord(j))
    };
    let mut segments = Vec::new();
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            let a = (i * n + j) as u32;
            let b = ((i + 1) * n + j) as u32;
            let c = (i * n + j + 1) as u32;
            let d = ((i + 1) * n + j + 1) as u32;
            for tri in [[a, b, d], [a, d, c]] {
                let vals = [
                    values[tri[0] as usize],
                    values[tri[1] as usize],
                    values[tri[2] as usize],
                ];
                if let Some(crossings) = triangle_crossings(tri, vals) {
                    let ends = crossings.map(|cr| {
                        let (pa, pb) = (pos(cr.key.0), pos(cr.key.1));
                        (
                            cr.key,
                            (pa.0 + cr.t * (pb.0 - pa.0), pa.1 + cr.t * (pb.1 - pa.1)),
                        )
                    });
                    segments.push(Segment { ends });
                }
            }
        }
    }
    chain_segments(segments)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_parameter_is_orientation_free() {
        // Same edge seen from two triangles must produce the same t.
        let c1 = triangle_crossings([0, 1, 2], [1.0, -3.0, 2.0]).unwrap();
        let c2 = triangle_crossings([1, 0, 3], [-3.0, 1.0, 5.0]).unwrap();
        let on01_1 = c1.iter().find(|c| c.key == (0, 1)).unwrap();
        let on01_2 = c2.iter().find(|c| c.key == (0, 1)).unwrap();
        assert_eq!(on01_1.t, on01_2.t);
        assert_eq!(on01_1.t, 0.25);
    }

    #[test]
    fn no_crossing_when_signs_agree() {
        assert!(triangle_crossings([0, 1, 2], [1.0, 2.0, 0.5]).is_none());
        assert!(triangle_crossings([0, 1, 2], [-1.0, -2.0, -0.5]).is_none());
    }

    #[test]
    fn planar_line_is_one_polyline_of_right_length() {
        // f = x: nodal line x = 0, a vertical diameter of the square.
        let polys = planar_nodal_polylines(|x, _y| x, 1.0, 65);
        assert_eq!(polys.len(), 1);
        let len: f64 = polys[0]
            .windows(2)
            .map(|w| ((w[1].0 - w[0].0).powi(2) + (w[1].1 - w[0].1).powi(2)).sqrt())
            .sum();
        assert!((len - 2.0).abs() < 1e-9, "length {len}");
    }

    #[test]
    fn planar_circle_closes() {
        // f = x^2 + y^2 - 0.25: nodal set is the circle of radius 0.5.
        let polys = planar_nodal_polylines(|x, y| x * x + y * y - 0.25, 1.0, 257);
        assert_eq!(polys.len(), 1);
        let poly = &polys[0];
        assert_eq!(poly.first(), poly.last());
        let len: f64 = poly
            .windows(2)
            .map(|w| ((w[1].0 - w[0].0).powi(2) + (w[1].1 - w[0].1).powi(2)).sqrt())
            .sum();
        assert!(
            (len - std::f64::consts::PI).abs() < 0.01,
            "circumference {len}"
        );
    }
}
