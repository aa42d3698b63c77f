//! Finite gap spaces: a point set with a gap function obeying only the
//! triangle inequality. Metric spaces are the symmetric, nonnegative,
//! identity-separating special case.

mod generators;

pub use generators::{
    circle_arc_metric, collinear_points, digraph_gaps, polygon_points, regular_polygon_points,
    two_parallel_lines, uniform_metric,
};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{Mode, Scalar};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A triple witnessing `gaps[x][y] + gaps[y][z] < gaps[x][z]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<S> {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub lhs: S,
    pub rhs: S,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport<S> {
    pub ok: bool,
    pub violations: Vec<Violation<S>>,
}

fn check_square<S>(matrix: &[Vec<S>]) -> Result<usize> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::EmptySpace);
    }
    for (row, r) in matrix.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare { row, len: r.len(), expected: n });
        }
    }
    Ok(n)
}

fn check_tolerance(tolerance: f64) -> Result<()> {
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(Error::BadTolerance(tolerance));
    }
    Ok(())
}

/// Checks the triangle inequality over every ordered triple, repeats included.
///
/// The n-gon inequality is not checked on its own; it follows from the
/// pairwise triangles.
pub fn validate<S: Scalar>(matrix: &[Vec<S>], tolerance: f64) -> Result<ValidationReport<S>> {
    let n = check_square(matrix)?;
    check_tolerance(tolerance)?;
    let violations: Vec<Violation<S>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut found = Vec::new();
            for y in 0..n {
                for z in 0..n {
                    let lhs = matrix[x][y].clone() + matrix[y][z].clone();
                    let rhs = &matrix[x][z];
                    if !rhs.approx_le(&lhs, tolerance) {
                        found.push(Violation { x, y, z, lhs, rhs: rhs.clone() });
                    }
                }
            }
            found
        })
        .collect();
    Ok(ValidationReport { ok: violations.is_empty(), violations })
}

/// An immutable finite gap space.
#[derive(Debug, Clone, PartialEq)]
pub struct GapSpace<S> {
    n: usize,
    gaps: Vec<S>,
    labels: Option<Vec<String>>,
    symmetric: bool,
    metric: bool,
    tolerance: f64,
    generator: Option<String>,
}

impl<S: Scalar> GapSpace<S> {
    /// Builds and validates a space with the default tolerance.
    pub fn new(rows: Vec<Vec<S>>) -> Result<Self> {
        Self::with_tolerance(rows, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(rows: Vec<Vec<S>>, tolerance: f64) -> Result<Self> {
        let report = validate(&rows, tolerance)?;
        if let Some(v) = report.violations.first() {
            return Err(Error::TriangleViolation {
                count: report.violations.len(),
                x: v.x,
                y: v.y,
                z: v.z,
            });
        }
        let n = rows.len();
        let gaps: Vec<S> = rows.into_iter().flatten().collect();
        let mut space = GapSpace {
            n,
            gaps,
            labels: None,
            symmetric: false,
            metric: false,
            tolerance,
            generator: None,
        };
        space.symmetric = space.compute_symmetric();
        space.metric = space.symmetric && space.compute_metric();
        Ok(space)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelCount { count: labels.len(), points: self.n });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn with_generator(mut self, name: &str) -> Self {
        self.generator = Some(name.to_string());
        self
    }

    fn compute_symmetric(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.eq(self.gap(x, y), self.gap(y, x))))
    }

    fn compute_metric(&self) -> bool {
        let zero = S::zero();
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                let g = self.gap(x, y);
                if x == y {
                    self.eq(g, &zero)
                } else {
                    !self.le(g, &zero)
                }
            })
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn gap(&self, x: usize, y: usize) -> &S {
        &self.gaps[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[S] {
        &self.gaps[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        self.gaps.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of point `i`, or its index when the space is unlabeled.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_metric(&self) -> bool {
        self.metric
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn mode(&self) -> Mode {
        S::MODE
    }

    /// Name of the generator that produced this space, if any.
    pub fn generator(&self) -> Option<&str> {
        self.generator.as_deref()
    }

    /// Equality under the space tolerance.
    #[inline]
    pub fn eq(&self, a: &S, b: &S) -> bool {
        a.approx_eq(b, self.tolerance)
    }

    /// `a <= b` under the space tolerance.
    #[inline]
    pub fn le(&self, a: &S, b: &S) -> bool {
        a.approx_le(b, self.tolerance)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, points: self.n });
        }
        Ok(())
    }

    /// Re-runs the triangle check on the stored gaps.
    pub fn validate(&self) -> ValidationReport<S> {
        validate(&self.rows(), self.tolerance).expect("stored matrix is square")
    }
}

/// True iff the space is symmetric, nonnegative, and zero exactly on the diagonal.
pub fn is_metric<S: Scalar>(space: &GapSpace<S>) -> bool {
    space.is_metric()
}
