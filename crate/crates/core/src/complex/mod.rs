//! Abstract simplicial complexes built from string sets, with their topology
//! computed combinatorially.

mod homology;

pub use homology::{gf2_rank, homology, smith_invariants, Coefficients, HomologyResult, IntegerHomology};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gapspace::GapSpace;
use crate::scalar::Scalar;
use crate::strings::StringSet;

/// A face-closed family of simplices (sorted vertex tuples), each with a birth value.
#[derive(Debug, Clone, PartialEq)]
pub struct StringComplex<S> {
    simplices: BTreeMap<Vec<usize>, S>,
    labels: Option<Vec<String>>,
}

impl<S: Scalar> StringComplex<S> {
    pub fn empty() -> Self {
        StringComplex { simplices: BTreeMap::new(), labels: None }
    }

    /// Builds a complex from simplices that are already face closed.
    ///
    /// Fails when a face is missing or born after one of its cofaces.
    pub fn from_simplices(simplices: impl IntoIterator<Item = (Vec<usize>, S)>) -> Result<Self> {
        let simplices: BTreeMap<Vec<usize>, S> = simplices
            .into_iter()
            .map(|(mut s, b)| {
                s.sort_unstable();
                (s, b)
            })
            .collect();
        let complex = StringComplex { simplices, labels: None };
        complex.check_closed()?;
        Ok(complex)
    }

    fn check_closed(&self) -> Result<()> {
        for (simplex, birth) in &self.simplices {
            if simplex.is_empty() {
                return Err(Error::EmptySubset);
            }
            if simplex.len() < 2 {
                continue;
            }
            for skip in 0..simplex.len() {
                let face = facet(simplex, skip);
                match self.simplices.get(&face) {
                    None => {
                        return Err(Error::NotClosed {
                            simplex: simplex.clone(),
                            face,
                            problem: "missing",
                        })
                    }
                    Some(fb) if !(fb <= birth) => {
                        return Err(Error::NotClosed {
                            simplex: simplex.clone(),
                            face,
                            problem: "born after its coface",
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Option<&[String]>) -> Self {
        self.labels = labels.map(<[String]>::to_vec);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.keys().map(|s| s.len() - 1).max()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.simplices.contains_key(simplex)
    }

    pub fn birth(&self, simplex: &[usize]) -> Option<&S> {
        self.simplices.get(simplex)
    }

    /// All simplices with their births, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.simplices.iter()
    }

    /// Simplices of dimension `dim`, in lexicographic order.
    pub fn simplices(&self, dim: usize) -> Vec<&Vec<usize>> {
        self.simplices.keys().filter(|s| s.len() == dim + 1).collect()
    }

    /// Number of simplices in each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim().map_or(0, |d| d + 1)];
        for s in self.simplices.keys() {
            f[s.len() - 1] += 1;
        }
        f
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices.keys().filter(|s| s.len() == 1).map(|s| s[0]).collect()
    }

    /// Maximal simplices (not a face of any other).
    pub fn facets(&self) -> Vec<&Vec<usize>> {
        let mut covered = std::collections::BTreeSet::new();
        for s in self.simplices.keys().filter(|s| s.len() > 1) {
            for skip in 0..s.len() {
                covered.insert(facet(s, skip));
            }
        }
        self.simplices.keys().filter(|s| !covered.contains(*s)).collect()
    }

    /// True when every vertex and every edge lies in some 2-simplex, the shape
    /// every string complex has.
    pub fn low_faces_in_triangles(&self) -> bool {
        let mut covered = std::collections::BTreeSet::new();
        for t in self.simplices.keys().filter(|s| s.len() == 3) {
            for skip in 0..3 {
                covered.insert(facet(t, skip));
            }
            for &v in t {
                covered.insert(vec![v]);
            }
        }
        self.simplices.keys().filter(|s| s.len() <= 2).all(|s| covered.contains(s))
    }

    /// Simplices present at level `eps`, i.e. born at or before it.
    pub fn sublevel(&self, eps: &S, tolerance: f64) -> StringComplex<S> {
        StringComplex {
            simplices: self
                .simplices
                .iter()
                .filter(|(_, b)| b.approx_le(eps, tolerance))
                .map(|(s, b)| (s.clone(), b.clone()))
                .collect(),
            labels: self.labels.clone(),
        }
    }

    /// Same simplices, ignoring births.
    pub fn same_simplices(&self, other: &StringComplex<S>) -> bool {
        self.simplices.len() == other.simplices.len()
            && self.simplices.keys().zip(other.simplices.keys()).all(|(a, b)| a == b)
    }
}

pub(crate) fn facet(simplex: &[usize], skip: usize) -> Vec<usize> {
    simplex
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, &v)| v)
        .collect()
}

/// One simplex per string, carrying its birth.
pub fn build_complex<S: Scalar>(strings: &StringSet<S>) -> Result<StringComplex<S>> {
    StringComplex::from_simplices(strings.iter().map(|(s, e)| (s.clone(), e.birth.clone())))
}

/// Alternating count of simplices by dimension.
pub fn euler_characteristic<S: Scalar>(complex: &StringComplex<S>) -> i64 {
    complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component index per point of the ambient space; `None` for points that
    /// are not vertices of the complex.
    pub labeling: Vec<Option<usize>>,
}

/// Connected components of the 1-skeleton. `points` sizes the labeling.
pub fn connected_components<S: Scalar>(complex: &StringComplex<S>, points: usize) -> Components {
    let vertices = complex.vertices();
    let size = points.max(vertices.iter().map(|v| v + 1).max().unwrap_or(0));
    let mut parent: Vec<usize> = (0..size).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in complex.simplices(1) {
        let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut labeling = vec![None; size];
    let mut roots: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in &vertices {
        let r = find(&mut parent, v);
        let next = roots.len();
        labeling[v] = Some(*roots.entry(r).or_insert(next));
    }
    Components { count: roots.len(), labeling }
}

/// An endpoint subcomplex together with the strings that generated it.
#[derive(Debug, Clone, PartialEq)]
pub struct EndpointSubcomplex<S> {
    /// Strings of two or more points whose endpoints are the requested pair,
    /// before closure.
    pub generators: Vec<Vec<usize>>,
    /// Downward closure of the generators.
    pub complex: StringComplex<S>,
}

/// The subcomplex spanned by strings whose endpoints are `{x, y}`.
///
/// The endpoints of each member are read from its witness order, which for
/// strings (birth 0) of a metric space is the unique extreme pair. The
/// collection of such strings is not face closed in general, so the result is
/// its downward closure; singletons appear only as faces of generators.
pub fn endpoint_subcomplex<S: Scalar>(
    space: &GapSpace<S>,
    strings: &StringSet<S>,
    x: usize,
    y: usize,
) -> Result<EndpointSubcomplex<S>> {
    if !space.is_metric() {
        return Err(Error::NotMetric);
    }
    space.check_index(x)?;
    space.check_index(y)?;
    if x == y {
        return Err(Error::SameEndpoints);
    }
    let target = (x.min(y), x.max(y));
    let mut generators = Vec::new();
    let mut closure: BTreeMap<Vec<usize>, S> = BTreeMap::new();
    for (set, entry) in strings.iter() {
        if set.len() < 2 {
            continue;
        }
        let w = &entry.witness;
        let (a, b) = (w[0], w[w.len() - 1]);
        if (a.min(b), a.max(b)) != target {
            continue;
        }
        generators.push(set.clone());
        let k = set.len();
        for mask in 1u64..(1 << k) {
            let face: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| set[i]).collect();
            if closure.contains_key(&face) {
                continue;
            }
            let birth = strings.get(&face).ok_or_else(|| Error::NotClosed {
                simplex: set.clone(),
                face: face.clone(),
                problem: "missing",
            })?;
            closure.insert(face, birth.birth.clone());
        }
    }
    let complex = StringComplex::from_simplices(closure)?.with_labels(space.labels());
    Ok(EndpointSubcomplex { generators, complex })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gapspace::{circle_arc_metric, collinear_points, uniform_metric};
    use crate::strings::enumerate_eps_strings;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_ratio(v, 1)
    }

    fn complex_of(space: &GapSpace<Q>) -> StringComplex<Q> {
        build_complex(&enumerate_eps_strings(space, &q(0), None).unwrap()).unwrap()
    }

    fn ex5() -> GapSpace<Q> {
        circle_arc_metric(&[q(0), q(2), q(6), q(8)], q(12)).unwrap()
    }

    #[test]
    fn collinear_gives_full_simplex() {
        let c = complex_of(&collinear_points(&[q(0), q(1), q(2), q(3)]).unwrap());
        assert_eq!(c.f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(c.dim(), Some(3));
        assert_eq!(euler_characteristic(&c), 1);
    }

    #[test]
    fn uniform_gives_empty_complex() {
        let c = complex_of(&uniform_metric(4).unwrap());
        assert!(c.is_empty());
        assert_eq!(euler_characteristic(&c), 0);
        assert_eq!(connected_components(&c, 4).count, 0);
        assert_eq!(c.dim(), None);
    }

    #[test]
    fn circle_arc_gives_tetrahedron_boundary() {
        let c = complex_of(&ex5());
        assert_eq!(c.f_vector(), vec![4, 6, 4]);
        assert_eq!(c.len(), 14);
        assert_eq!(euler_characteristic(&c), 2);
        assert_eq!(connected_components(&c, 4).count, 1);
        assert!(c.low_faces_in_triangles());
        assert_eq!(c.facets().len(), 4);
    }

    #[test]
    fn missing_faces_are_rejected() {
        let r = StringComplex::from_simplices(vec![(vec![0, 1], q(0)), (vec![0], q(0))]);
        assert!(matches!(r, Err(Error::NotClosed { problem: "missing", .. })));
        let r = StringComplex::from_simplices(vec![
            (vec![0, 1], q(0)),
            (vec![0], q(1)),
            (vec![1], q(0)),
        ]);
        assert!(matches!(r, Err(Error::NotClosed { problem: "born after its coface", .. })));
    }

    #[test]
    fn endpoint_subcomplex_of_a_line() {
        let s = collinear_points(&[q(0), q(1), q(2), q(3)]).unwrap();
        let strings = enumerate_eps_strings(&s, &q(0), None).unwrap();
        let sub = endpoint_subcomplex(&s, &strings, 0, 3).unwrap();
        assert_eq!(sub.generators.len(), 4);
        assert_eq!(sub.complex.f_vector(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn endpoint_subcomplex_of_circle_arc() {
        let s = ex5();
        let strings = enumerate_eps_strings(&s, &q(0), None).unwrap();
        let sub = endpoint_subcomplex(&s, &strings, 0, 2).unwrap();
        assert_eq!(sub.generators, vec![vec![0, 1, 2], vec![0, 2], vec![0, 2, 3]]);
        assert_eq!(sub.complex.f_vector(), vec![4, 5, 2]);
        assert_eq!(sub.complex.facets(), vec![&vec![0, 1, 2], &vec![0, 2, 3]]);
        assert!(matches!(endpoint_subcomplex(&s, &strings, 1, 1), Err(Error::SameEndpoints)));
    }

    #[test]
    fn components_label_vertices() {
        let c = StringComplex::from_simplices(vec![
            (vec![0], q(0)),
            (vec![1], q(0)),
            (vec![3], q(0)),
            (vec![0, 1], q(0)),
        ])
        .unwrap();
        let comps = connected_components(&c, 4);
        assert_eq!(comps.count, 2);
        assert_eq!(comps.labeling, vec![Some(0), Some(0), None, Some(1)]);
    }
}
