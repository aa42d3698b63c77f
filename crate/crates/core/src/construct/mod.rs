//! Realizing 2-dimensional triangulations as finite metric spaces.
//!
//! The points of the realized space are the simplices of the triangulation.
//! Two simplices are at distance `k` unless one is a face of the other; a
//! vertex is at `u` from its edges, an edge at `v` from its triangles, and a
//! vertex at `u + v` from its triangles. With `k/2 < u, v < k` the only
//! three-point strings are the flags `vertex ⊂ edge ⊂ triangle` (edge in the
//! middle), there are no longer strings, and the string complex is the
//! barycentric subdivision of the input.

mod search;
mod surfaces;

pub use search::{metric_grid_search, shape_search, GridSearch, ShapeSearch, MAX_SEARCH_POINTS};
pub use surfaces::{surface_library, SURFACE_NAMES};

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{build_complex, StringComplex};
use crate::error::{Error, Result};
use crate::gapspace::{circle_arc_metric, GapSpace};
use crate::scalar::Scalar;
use crate::strings::{direct_orders, enumerate_eps_strings};

/// A finite simplicial complex of dimension at most 2 with explicit edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation2D {
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
    triangles: Vec<[usize; 3]>,
}

/// A chain vertex ⊂ edge ⊂ triangle, as indices into the vertex, edge and
/// triangle lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    pub vertex: usize,
    pub edge: usize,
    pub triangle: usize,
}

impl Triangulation2D {
    /// Checks that edges and triangles are well formed, distinct, and that every
    /// edge of every triangle is listed.
    pub fn new(vertices: Vec<String>, edges: Vec<[usize; 2]>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let n = vertices.len();
        let bad = |msg: String| Err(Error::Triangulation(msg));
        let mut edge_set = BTreeSet::new();
        let mut edges_sorted = Vec::with_capacity(edges.len());
        for e in &edges {
            let mut e = *e;
            e.sort_unstable();
            if e[1] >= n {
                return bad(format!("edge {e:?} refers to a missing vertex"));
            }
            if e[0] == e[1] {
                return bad(format!("degenerate edge {e:?}"));
            }
            if !edge_set.insert(e) {
                return bad(format!("duplicate edge {e:?}"));
            }
            edges_sorted.push(e);
        }
        let mut tri_set = BTreeSet::new();
        let mut tris_sorted = Vec::with_capacity(triangles.len());
        for t in &triangles {
            let mut t = *t;
            t.sort_unstable();
            if t[2] >= n {
                return bad(format!("triangle {t:?} refers to a missing vertex"));
            }
            if t[0] == t[1] || t[1] == t[2] {
                return bad(format!("degenerate triangle {t:?}"));
            }
            if !tri_set.insert(t) {
                return bad(format!("duplicate triangle {t:?}"));
            }
            for e in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
                if !edge_set.contains(&e) {
                    return bad(format!("edge {e:?} of triangle {t:?} is not listed"));
                }
            }
            tris_sorted.push(t);
        }
        Ok(Triangulation2D { vertices, edges: edges_sorted, triangles: tris_sorted })
    }

    /// Infers the edge list from the triangles.
    pub fn from_triangles(vertices: Vec<String>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for t in &triangles {
            let mut t = *t;
            t.sort_unstable();
            edges.extend([[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]]);
        }
        Self::new(vertices, edges.into_iter().collect(), triangles)
    }

    /// Vertices labeled `0..n`.
    pub fn numbered(n: usize, triangles: &[[usize; 3]]) -> Result<Self> {
        Self::from_triangles((0..n).map(|i| i.to_string()).collect(), triangles.to_vec())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Total number of simplices, the size of the realized space.
    pub fn simplex_count(&self) -> usize {
        self.vertices.len() + self.edges.len() + self.triangles.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Why the triangulation is not admissible, if it is not.
    pub fn admissibility_defect(&self) -> Option<String> {
        let mut in_triangle_v = vec![false; self.vertices.len()];
        let mut in_triangle_e = BTreeSet::new();
        for t in &self.triangles {
            for &v in t {
                in_triangle_v[v] = true;
            }
            in_triangle_e.extend([[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]]);
        }
        if let Some(v) = in_triangle_v.iter().position(|&b| !b) {
            return Some(format!("vertex {} lies in no triangle", self.vertices[v]));
        }
        if let Some(e) = self.edges.iter().find(|e| !in_triangle_e.contains(*e)) {
            return Some(format!("edge {e:?} lies in no triangle"));
        }
        None
    }

    /// Every vertex and every edge is a face of some triangle.
    pub fn is_admissible(&self) -> bool {
        self.admissibility_defect().is_none()
    }

    /// Vertex sets of all simplices in point order: vertices, then edges, then
    /// triangles. Point `p` of a realized space is simplex `p` of this list.
    pub fn simplices(&self) -> Vec<Vec<usize>> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(i, _)| vec![i])
            .chain(self.edges.iter().map(|e| e.to_vec()))
            .chain(self.triangles.iter().map(|t| t.to_vec()))
            .collect()
    }

    pub fn edge_point(&self, edge: usize) -> usize {
        self.vertices.len() + edge
    }

    pub fn triangle_point(&self, triangle: usize) -> usize {
        self.vertices.len() + self.edges.len() + triangle
    }

    /// Label of each simplex, in point order.
    pub fn simplex_labels(&self) -> Vec<String> {
        self.simplices()
            .iter()
            .map(|s| s.iter().map(|&v| self.vertices[v].as_str()).collect::<Vec<_>>().join("-"))
            .collect()
    }

    pub fn flags(&self) -> Vec<Flag> {
        let edge_index: BTreeMap<[usize; 2], usize> =
            self.edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut flags = Vec::with_capacity(6 * self.triangles.len());
        for (ti, t) in self.triangles.iter().enumerate() {
            for e in [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]] {
                let edge = edge_index[&e];
                for vertex in e {
                    flags.push(Flag { vertex, edge, triangle: ti });
                }
            }
        }
        flags.sort_unstable();
        flags
    }

    /// Point triple `(vertex, edge, triangle)` of a flag in a realized space.
    pub fn flag_points(&self, flag: &Flag) -> [usize; 3] {
        [flag.vertex, self.edge_point(flag.edge), self.triangle_point(flag.triangle)]
    }

    /// The triangulation as a complex with every simplex born at zero.
    pub fn to_complex<S: Scalar>(&self) -> StringComplex<S> {
        let all = self
            .simplices()
            .into_iter()
            .map(|s| (s, S::zero()));
        StringComplex::from_simplices(all)
            .expect("a validated triangulation is face closed")
            .with_labels(Some(&self.vertices))
    }

    /// Disjoint union; the vertices of `other` are renumbered after ours.
    pub fn disjoint_union(&self, other: &Triangulation2D) -> Triangulation2D {
        let off = self.vertices.len();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|v| format!("{v}'")));
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| [e[0] + off, e[1] + off]));
        let mut triangles = self.triangles.clone();
        triangles.extend(other.triangles.iter().map(|t| [t[0] + off, t[1] + off, t[2] + off]));
        Triangulation2D { vertices, edges, triangles }
    }
}

/// The barycentric subdivision: one vertex per simplex (in point order), one
/// edge per face relation, one triangle per flag.
pub fn barycentric_subdivision(tri: &Triangulation2D) -> Triangulation2D {
    let simplices = tri.simplices();
    let mut edges = Vec::new();
    for (p, a) in simplices.iter().enumerate() {
        for (q, b) in simplices.iter().enumerate() {
            if a.len() < b.len() && a.iter().all(|v| b.contains(v)) {
                edges.push([p.min(q), p.max(q)]);
            }
        }
    }
    let triangles = tri.flags().iter().map(|f| tri.flag_points(f)).collect();
    Triangulation2D::new(tri.simplex_labels(), edges, triangles)
        .expect("subdivision of a valid triangulation is valid")
}

/// Distances `k`, `u`, `v` of the realization.
#[derive(Debug, Clone, PartialEq)]
pub struct RealizationParams<S> {
    pub k: S,
    pub u: S,
    pub v: S,
}

impl<S: Scalar> RealizationParams<S> {
    /// Requires `k > 0` and `k/2 < u, v < k`, all strict.
    pub fn new(k: S, u: S, v: S) -> Result<Self> {
        let params = RealizationParams { k, u, v };
        params.check()?;
        Ok(params)
    }

    pub fn check(&self) -> Result<()> {
        let half = self.k.clone() / S::from_ratio(2, 1);
        let inside = |x: &S| *x > half && *x < self.k;
        if self.k > S::zero() && inside(&self.u) && inside(&self.v) {
            Ok(())
        } else {
            Err(Error::BadParams)
        }
    }
}

impl<S: Scalar> Default for RealizationParams<S> {
    /// `k = 1`, `u = 3/5`, `v = 7/10`.
    fn default() -> Self {
        RealizationParams { k: S::one(), u: S::from_ratio(3, 5), v: S::from_ratio(7, 10) }
    }
}

/// The metric space whose string complex is the barycentric subdivision of `tri`.
pub fn realize<S: Scalar>(tri: &Triangulation2D, params: &RealizationParams<S>) -> Result<GapSpace<S>> {
    if let Some(defect) = tri.admissibility_defect() {
        return Err(Error::NotAdmissible(defect));
    }
    params.check()?;
    let simplices = tri.simplices();
    let gap = |a: &[usize], b: &[usize]| -> S {
        if a == b {
            return S::zero();
        }
        let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        if small.len() == big.len() || !small.iter().all(|v| big.contains(v)) {
            return params.k.clone();
        }
        match (small.len(), big.len()) {
            (1, 2) => params.u.clone(),
            (2, 3) => params.v.clone(),
            (1, 3) => params.u.clone() + params.v.clone(),
            _ => unreachable!("simplices have at most three vertices"),
        }
    };
    let rows = simplices
        .iter()
        .map(|a| simplices.iter().map(|b| gap(a, b)).collect())
        .collect();
    Ok(GapSpace::new(rows)?
        .with_labels(tri.simplex_labels())?
        .with_generator("realize"))
}

/// Outcome of checking a realized space against its triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub flags: usize,
    pub three_point_strings: usize,
    /// Three-point strings are exactly the flags.
    pub flags_exact: bool,
    /// Every direct order of a flag string has the edge in the middle.
    pub edge_in_middle: bool,
    /// Number of strings with four points (none means none longer either).
    pub longer_strings: usize,
    /// The string complex equals the barycentric subdivision under the
    /// identity on simplices.
    pub isomorphic: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.flags_exact && self.edge_in_middle && self.longer_strings == 0 && self.isomorphic
    }

    fn failure(&self) -> Option<String> {
        let mut problems = Vec::new();
        if !self.flags_exact {
            problems.push(format!(
                "{} three-point strings for {} flags",
                self.three_point_strings, self.flags
            ));
        }
        if !self.edge_in_middle {
            problems.push("a flag string has a direct order without the edge in the middle".into());
        }
        if self.longer_strings > 0 {
            problems.push(format!("{} strings of four points", self.longer_strings));
        }
        if !self.isomorphic {
            problems.push("string complex differs from the barycentric subdivision".into());
        }
        (!problems.is_empty()).then(|| problems.join("; "))
    }
}

/// Runs the three checks and reports each, without failing.
pub fn check_realization<S: Scalar>(space: &GapSpace<S>, tri: &Triangulation2D) -> Result<VerificationReport> {
    if space.len() != tri.simplex_count() {
        return Err(Error::Triangulation(format!(
            "space has {} points but the triangulation has {} simplices",
            space.len(),
            tri.simplex_count()
        )));
    }
    // strings of four points are enough to detect anything longer
    let strings = enumerate_eps_strings(space, &S::zero(), Some(4))?;
    let flags = tri.flags();
    let flag_sets: BTreeSet<Vec<usize>> = flags
        .iter()
        .map(|f| {
            let mut p = tri.flag_points(f).to_vec();
            p.sort_unstable();
            p
        })
        .collect();
    let triples: BTreeSet<Vec<usize>> = strings.sets().filter(|s| s.len() == 3).cloned().collect();
    let flags_exact = triples == flag_sets;

    let mut edge_in_middle = true;
    for f in &flags {
        let [_, edge, _] = tri.flag_points(f);
        match direct_orders(space, &tri.flag_points(f)) {
            Ok(orders) => edge_in_middle &= orders.iter().all(|o| o.order[1] == edge),
            Err(_) => edge_in_middle = false,
        }
    }
    let longer_strings = strings.count_of_size(4);

    let isomorphic = match build_complex(&strings) {
        Ok(c) => c.same_simplices(&barycentric_subdivision(tri).to_complex::<S>()),
        Err(_) => false,
    };
    Ok(VerificationReport {
        flags: flags.len(),
        three_point_strings: triples.len(),
        flags_exact,
        edge_in_middle,
        longer_strings,
        isomorphic,
    })
}

/// Like [`check_realization`], but a failed check is an error.
pub fn verify_realization<S: Scalar>(space: &GapSpace<S>, tri: &Triangulation2D) -> Result<VerificationReport> {
    let report = check_realization(space, tri)?;
    match report.failure() {
        Some(msg) => Err(Error::Triangulation(format!("realization check failed: {msg}"))),
        None => Ok(report),
    }
}

/// Four points on a circle of circumference 12 at 0, 2, 6, 8 with the
/// shortest-arc metric: the smallest metric space whose string complex is a
/// 2-sphere.
pub fn sphere_four_points<S: Scalar>() -> GapSpace<S> {
    let p = |v| S::from_ratio(v, 1);
    circle_arc_metric(&[p(0), p(2), p(6), p(8)], p(12)).expect("fixed valid input")
}
