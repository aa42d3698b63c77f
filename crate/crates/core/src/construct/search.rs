//! Exhaustive searches over tiny spaces, used to pin down how few points a
//! metric space needs for its string complex to be a 2-sphere.

use crate::complex::{build_complex, homology, Coefficients, StringComplex};
use crate::error::{Error, Result};
use crate::gapspace::{validate, GapSpace};
use crate::scalar::Scalar;
use crate::strings::enumerate_eps_strings;

pub const MAX_SEARCH_POINTS: usize = 4;

const SPHERE_BETTI: [usize; 3] = [1, 0, 1];

/// Every complex a string set on `points` points could produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeSearch {
    pub points: usize,
    pub families: usize,
    /// Families (listed by their sets of three or more points) whose complex
    /// has the mod-2 Betti numbers of a 2-sphere.
    pub spheres: Vec<Vec<Vec<usize>>>,
}

/// Enumerates every family of subsets with three or more points that is
/// closed under taking subsets of three or more points, which is the shape of
/// the strings of any gap space, and reports those whose complex looks like a
/// 2-sphere.
pub fn shape_search(points: usize) -> Result<ShapeSearch> {
    if points > MAX_SEARCH_POINTS {
        return Err(Error::TooManyPoints { points, limit: MAX_SEARCH_POINTS });
    }
    let big: Vec<Vec<usize>> = (0u32..(1 << points))
        .filter(|m| m.count_ones() >= 3)
        .map(|m| (0..points).filter(|i| m & (1 << i) != 0).collect())
        .collect();
    let mut families = 0;
    let mut spheres = Vec::new();
    for choice in 0u32..(1 << big.len()) {
        let family: Vec<&Vec<usize>> =
            (0..big.len()).filter(|i| choice & (1 << i) != 0).map(|i| &big[i]).collect();
        let closed = family.iter().all(|s| {
            big.iter()
                .filter(|t| t.len() + 1 == s.len() && t.iter().all(|v| s.contains(v)))
                .all(|t| family.contains(&t))
        });
        if !closed {
            continue;
        }
        families += 1;
        let mut simplices = std::collections::BTreeSet::new();
        for s in &family {
            for m in 1u32..(1 << s.len()) {
                simplices.insert((0..s.len()).filter(|i| m & (1 << i) != 0).map(|i| s[i]).collect::<Vec<_>>());
            }
        }
        let complex = StringComplex::from_simplices(simplices.into_iter().map(|s| (s, 0.0f64)))?;
        if homology(&complex, Coefficients::Mod2)?.betti_mod2 == SPHERE_BETTI {
            spheres.push(family.into_iter().cloned().collect());
        }
    }
    Ok(ShapeSearch { points, families, spheres })
}

/// Metric spaces on `points` points with every distance drawn from a value grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSearch<S> {
    pub assignments: usize,
    pub metric_spaces: usize,
    pub spheres: usize,
    pub first_sphere: Option<GapSpace<S>>,
}

/// Tries every symmetric assignment of `values` to the pairs of `points`
/// points, keeps the metric ones, and counts those whose string complex has
/// the mod-2 Betti numbers of a 2-sphere.
pub fn metric_grid_search<S: Scalar>(points: usize, values: &[S]) -> Result<GridSearch<S>> {
    if points > MAX_SEARCH_POINTS {
        return Err(Error::TooManyPoints { points, limit: MAX_SEARCH_POINTS });
    }
    if points == 0 {
        return Err(Error::EmptySpace);
    }
    if values.iter().any(|v| *v <= S::zero()) {
        return Err(Error::Generator("grid values must be positive".into()));
    }
    let pairs: Vec<(usize, usize)> =
        (0..points).flat_map(|a| (a + 1..points).map(move |b| (a, b))).collect();
    let total = values.len().pow(pairs.len() as u32);
    let mut out = GridSearch { assignments: total, metric_spaces: 0, spheres: 0, first_sphere: None };
    for code in 0..total {
        let mut rows = vec![vec![S::zero(); points]; points];
        let mut c = code;
        for &(a, b) in &pairs {
            let v = values[c % values.len()].clone();
            c /= values.len();
            rows[a][b] = v.clone();
            rows[b][a] = v;
        }
        if !validate(&rows, 0.0)?.ok {
            continue;
        }
        let space = GapSpace::with_tolerance(rows, 0.0)?;
        out.metric_spaces += 1;
        let complex = build_complex(&enumerate_eps_strings(&space, &S::zero(), None)?)?;
        if homology(&complex, Coefficients::Mod2)?.betti_mod2 == SPHERE_BETTI {
            out.spheres += 1;
            out.first_sphere.get_or_insert(space);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn three_points_never_make_a_sphere() {
        for n in 1..=3 {
            let s = shape_search(n).unwrap();
            assert!(s.spheres.is_empty());
        }
        assert_eq!(shape_search(3).unwrap().families, 2);
    }

    #[test]
    fn four_points_make_exactly_one_sphere_shape() {
        let s = shape_search(4).unwrap();
        assert_eq!(s.families, 17);
        assert_eq!(s.spheres.len(), 1);
        assert_eq!(s.spheres[0].len(), 4);
        assert!(shape_search(5).is_err());
    }

    #[test]
    fn grid_search_small() {
        let values: Vec<BigRational> = (1..=3).map(|v| BigRational::from_ratio(v, 1)).collect();
        let r = metric_grid_search(3, &values).unwrap();
        assert_eq!(r.assignments, 27);
        assert_eq!(r.spheres, 0);
        assert!(r.metric_spaces > 0);
    }
}
