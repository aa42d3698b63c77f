//! Standard example spaces.

use num_traits::Float;

use super::GapSpace;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The discrete metric: every two distinct points at gap 1.
pub fn uniform_metric<S: Scalar>(n: usize) -> Result<GapSpace<S>> {
    if n == 0 {
        return Err(Error::EmptySpace);
    }
    let rows = (0..n)
        .map(|x| (0..n).map(|y| if x == y { S::zero() } else { S::one() }).collect())
        .collect();
    Ok(GapSpace::new(rows)?.with_generator("uniform"))
}

/// Points of the real line with the induced metric `|a - b|`.
pub fn collinear_points<S: Scalar>(values: &[S]) -> Result<GapSpace<S>> {
    if values.is_empty() {
        return Err(Error::EmptySpace);
    }
    for (i, a) in values.iter().enumerate() {
        if values[..i].iter().any(|b| a == b) {
            return Err(Error::Generator(format!("duplicate coordinate {a}")));
        }
    }
    let rows = values
        .iter()
        .map(|a| values.iter().map(|b| (a.clone() - b.clone()).abs()).collect())
        .collect();
    let labels = values.iter().map(|v| v.to_string()).collect();
    Ok(GapSpace::new(rows)?.with_labels(labels)?.with_generator("collinear"))
}

fn euclidean_space<F: Scalar + Float>(points: &[(F, F)], name: &str) -> Result<GapSpace<F>> {
    let rows = points
        .iter()
        .map(|&(ax, ay)| {
            points.iter().map(|&(bx, by)| (ax - bx).hypot(ay - by)).collect()
        })
        .collect();
    Ok(GapSpace::new(rows)?.with_generator(name))
}

/// `m` points on the line `y = 0` and `n` points on `y = separation`, both at
/// x-coordinates `0, spacing, 2 * spacing, ...`.
pub fn two_parallel_lines<F: Scalar + Float>(
    m: usize,
    n: usize,
    separation: F,
    spacing: F,
) -> Result<GapSpace<F>> {
    if m < 3 || n < 3 {
        return Err(Error::Generator(format!("each line needs at least 3 points, got {m} and {n}")));
    }
    if !(separation > F::zero()) || !(spacing > F::zero()) {
        return Err(Error::Generator("separation and spacing must be positive".into()));
    }
    let step = |i: usize| spacing * F::from(i).expect("index fits the float type");
    let points: Vec<(F, F)> = (0..m)
        .map(|i| (step(i), F::zero()))
        .chain((0..n).map(|j| (step(j), separation)))
        .collect();
    euclidean_space(&points, "parallel-lines")
}

/// Vertices of a convex polygon followed by evenly spaced interior points on
/// each edge. `edge_point_counts[i]` counts the points on edge `i` (from vertex
/// `i` to vertex `i + 1`) including both endpoints, so it must be at least 3.
pub fn polygon_points<F: Scalar + Float>(
    edge_point_counts: &[usize],
    vertices: &[(F, F)],
) -> Result<GapSpace<F>> {
    let k = vertices.len();
    if k < 3 {
        return Err(Error::Generator("a polygon needs at least 3 vertices".into()));
    }
    if edge_point_counts.len() != k {
        return Err(Error::Generator(format!(
            "{} edge counts for {k} edges",
            edge_point_counts.len()
        )));
    }
    if let Some(c) = edge_point_counts.iter().find(|&&c| c < 3) {
        return Err(Error::Generator(format!("edge with {c} points; each edge needs at least 3")));
    }
    // strictly convex: every turn has the same nonzero orientation
    let mut sign = 0i8;
    for i in 0..k {
        let (a, b, c) = (vertices[i], vertices[(i + 1) % k], vertices[(i + 2) % k]);
        let cross = (b.0 - a.0) * (c.1 - b.1) - (b.1 - a.1) * (c.0 - b.0);
        let s = if cross > F::zero() {
            1
        } else if cross < F::zero() {
            -1
        } else {
            0
        };
        if s == 0 || (sign != 0 && s != sign) {
            return Err(Error::Generator("polygon is not strictly convex".into()));
        }
        sign = s;
    }
    let mut points = vertices.to_vec();
    for i in 0..k {
        let (a, b) = (vertices[i], vertices[(i + 1) % k]);
        let parts = F::from(edge_point_counts[i] - 1).expect("count fits the float type");
        for j in 1..edge_point_counts[i] - 1 {
            let t = F::from(j).expect("index fits the float type") / parts;
            points.push((a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t));
        }
    }
    euclidean_space(&points, "polygon")
}

/// A regular `k`-gon on the unit circle with `interior` points inside each edge.
pub fn regular_polygon_points<F: Scalar + Float>(k: usize, interior: usize) -> Result<GapSpace<F>> {
    let kf = F::from(k).expect("count fits the float type");
    let tau = F::from(std::f64::consts::TAU).expect("float constant");
    let vertices: Vec<(F, F)> = (0..k)
        .map(|i| {
            let angle = tau * F::from(i).expect("index fits the float type") / kf;
            (angle.cos(), angle.sin())
        })
        .collect();
    polygon_points(&vec![interior + 2; k], &vertices)
}

/// Points on a circle of the given circumference with the shortest-arc metric.
pub fn circle_arc_metric<S: Scalar>(positions: &[S], circumference: S) -> Result<GapSpace<S>> {
    if positions.is_empty() {
        return Err(Error::EmptySpace);
    }
    if !(circumference > S::zero()) {
        return Err(Error::Generator("circumference must be positive".into()));
    }
    let reduced: Vec<S> = positions
        .iter()
        .map(|p| {
            let r = p.clone() % circumference.clone();
            if r < S::zero() {
                r + circumference.clone()
            } else {
                r
            }
        })
        .collect();
    for (i, a) in reduced.iter().enumerate() {
        if reduced[..i].iter().any(|b| a == b) {
            return Err(Error::Generator(format!(
                "position {} coincides with an earlier one",
                positions[i]
            )));
        }
    }
    let rows = reduced
        .iter()
        .map(|a| {
            reduced
                .iter()
                .map(|b| {
                    let diff = (a.clone() - b.clone()).abs();
                    let around = circumference.clone() - diff.clone();
                    if around < diff {
                        around
                    } else {
                        diff
                    }
                })
                .collect()
        })
        .collect();
    let labels = (1..=positions.len()).map(|i| format!("x{i}")).collect();
    Ok(GapSpace::new(rows)?.with_labels(labels)?.with_generator("circle-arc"))
}

/// Shortest-path gaps of a strongly connected weighted digraph (Floyd-Warshall).
pub fn digraph_gaps<S: Scalar>(nodes: usize, arcs: &[(usize, usize, S)]) -> Result<GapSpace<S>> {
    if nodes == 0 {
        return Err(Error::EmptySpace);
    }
    let mut dist: Vec<Vec<Option<S>>> = vec![vec![None; nodes]; nodes];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = Some(S::zero());
    }
    for (from, to, len) in arcs {
        let (from, to) = (*from, *to);
        for idx in [from, to] {
            if idx >= nodes {
                return Err(Error::IndexOutOfRange { index: idx, points: nodes });
            }
        }
        if *len < S::zero() {
            return Err(Error::NegativeArc { from, to });
        }
        let better = match &dist[from][to] {
            Some(cur) => len < cur,
            None => true,
        };
        if better {
            dist[from][to] = Some(len.clone());
        }
    }
    for k in 0..nodes {
        for i in 0..nodes {
            let Some(ik) = dist[i][k].clone() else { continue };
            for j in 0..nodes {
                let Some(kj) = &dist[k][j] else { continue };
                let through = ik.clone() + kj.clone();
                let better = match &dist[i][j] {
                    Some(cur) => through < *cur,
                    None => true,
                };
                if better {
                    dist[i][j] = Some(through);
                }
            }
        }
    }
    let mut rows = Vec::with_capacity(nodes);
    for (from, row) in dist.into_iter().enumerate() {
        let mut out = Vec::with_capacity(nodes);
        for (to, d) in row.into_iter().enumerate() {
            out.push(d.ok_or(Error::NotStronglyConnected { from, to })?);
        }
        rows.push(out);
    }
    Ok(GapSpace::new(rows)?.with_generator("digraph"))
}
