//! The ε-filtration of string complexes and its persistence barcode over ℤ/2.
//!
//! Every subset with a finite birth enters the filtration at that birth.
//! Singletons and pairs are born with the cheapest three-point string
//! containing them, so vertices are not necessarily present at ε = 0 (unlike
//! Vietoris-Rips filtrations), and a space with fewer than three points has an
//! empty filtration.

use std::cmp::Ordering;
use std::collections::HashMap;

use rayon::prelude::*;

use crate::complex::StringComplex;
use crate::error::{Error, Result};
use crate::gapspace::GapSpace;
use crate::scalar::Scalar;
use crate::strings::{self, Level};

/// Spaces up to this size compute every birth in one Held-Karp pass per
/// starting point; larger spaces run the dynamic program per subset.
pub const SHARED_DP_POINTS: usize = 14;

/// Largest space the filtration accepts (subsets are stored as bitmasks).
pub const MAX_FILTRATION_POINTS: usize = 63;

#[derive(Debug, Clone, PartialEq)]
pub struct FilteredSimplex<S> {
    pub vertices: Vec<usize>,
    pub birth: S,
}

impl<S> FilteredSimplex<S> {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// How simplices with equal birth and dimension are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    Lexicographic,
    ReverseLexicographic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Filtration<S> {
    simplices: Vec<FilteredSimplex<S>>,
    tolerance: f64,
    points: usize,
}

impl<S: Scalar> Filtration<S> {
    /// Sorts arbitrary filtered simplices by `(birth, dimension, tie-break)`.
    pub fn from_simplices(
        simplices: Vec<FilteredSimplex<S>>,
        points: usize,
        tolerance: f64,
        tie_break: TieBreak,
    ) -> Self {
        let mut f = Filtration { simplices, tolerance, points };
        f.sort(tie_break);
        f
    }

    fn sort(&mut self, tie_break: TieBreak) {
        self.simplices.sort_by(|a, b| {
            a.birth
                .partial_cmp(&b.birth)
                .unwrap_or(Ordering::Equal)
                .then(a.vertices.len().cmp(&b.vertices.len()))
                .then_with(|| match tie_break {
                    TieBreak::Lexicographic => a.vertices.cmp(&b.vertices),
                    TieBreak::ReverseLexicographic => b.vertices.cmp(&a.vertices),
                })
        });
    }

    /// The same simplices under another tie-break rule.
    pub fn reordered(&self, tie_break: TieBreak) -> Self {
        let mut f = self.clone();
        f.sort(tie_break);
        f
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &[FilteredSimplex<S>] {
        &self.simplices
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// Distinct birth values in increasing order.
    pub fn critical_values(&self) -> Vec<S> {
        let mut out: Vec<S> = Vec::new();
        for s in &self.simplices {
            if out.last().is_none_or(|l| !l.approx_eq(&s.birth, self.tolerance)) {
                out.push(s.birth.clone());
            }
        }
        out
    }

    /// The level complex: simplices born at or before `eps`.
    pub fn complex_at(&self, eps: &S) -> StringComplex<S> {
        StringComplex::from_simplices(
            self.simplices
                .iter()
                .filter(|s| s.birth.approx_le(eps, self.tolerance))
                .map(|s| (s.vertices.clone(), s.birth.clone())),
        )
        .expect("sublevel sets of a filtration are face closed")
    }

    /// Every simplex of the filtration.
    pub fn complex(&self) -> StringComplex<S> {
        StringComplex::from_simplices(
            self.simplices.iter().map(|s| (s.vertices.clone(), s.birth.clone())),
        )
        .expect("a filtration is face closed")
    }
}

fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &i| m | (1 << i))
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

fn keep_min<S: Scalar>(slot: &mut Option<S>, value: S) {
    if slot.as_ref().is_none_or(|cur| value < *cur) {
        *slot = Some(value);
    }
}

/// Births of every subset with 3..=cap points, via one Held-Karp table per
/// starting point, indexed by subset mask.
fn shared_births<S: Scalar>(space: &GapSpace<S>, cap: usize) -> Vec<Option<S>> {
    let n = space.len();
    let size = 1usize << n;
    let per_start: Vec<Vec<Option<S>>> = (0..n)
        .into_par_iter()
        .map(|start| {
            let mut dp: Vec<Option<S>> = vec![None; size * n];
            let mut best: Vec<Option<S>> = vec![None; size];
            dp[(1 << start) * n + start] = Some(S::zero());
            for mask in 1..size {
                if mask & (1 << start) == 0 {
                    continue;
                }
                let count = mask.count_ones() as usize;
                for last in 0..n {
                    let Some(sum) = dp[mask * n + last].clone() else { continue };
                    if count >= 3 {
                        let value = excess_value(space, &sum, space.gap(start, last));
                        keep_min(&mut best[mask], value);
                    }
                    if count == cap {
                        continue;
                    }
                    for next in 0..n {
                        if mask & (1 << next) != 0 {
                            continue;
                        }
                        let cand = sum.clone() + space.gap(last, next).clone();
                        keep_min(&mut dp[(mask | (1 << next)) * n + next], cand);
                    }
                }
            }
            best
        })
        .collect();
    let mut births: Vec<Option<S>> = vec![None; size];
    for best in per_start {
        for (slot, value) in births.iter_mut().zip(best) {
            if let Some(v) = value {
                keep_min(slot, v);
            }
        }
    }
    births
}

fn excess_value<S: Scalar>(space: &GapSpace<S>, sum: &S, end: &S) -> S {
    if space.eq(sum, end) {
        S::zero()
    } else {
        sum.clone() - end.clone()
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else { break };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Births of every subset with at least one point and at most `max_dim + 1`
/// points (default: all), assembled into a filtration.
///
/// The filtration has up to `2^n` simplices; cap `max_dim` for larger spaces.
pub fn build_filtration<S: Scalar>(space: &GapSpace<S>, max_dim: Option<usize>) -> Result<Filtration<S>> {
    let n = space.len();
    let cap = max_dim.map_or(n, |d| (d + 1).min(n));
    if n > MAX_FILTRATION_POINTS {
        return Err(Error::TooManyPoints { points: n, limit: MAX_FILTRATION_POINTS });
    }
    let mut births: HashMap<u64, S> = HashMap::new();
    if n >= 3 && cap >= 1 {
        let dp_cap = cap.max(3);
        if n <= SHARED_DP_POINTS {
            for (mask, b) in shared_births(space, dp_cap).into_iter().enumerate() {
                if let Some(b) = b {
                    births.insert(mask as u64, b);
                }
            }
        } else {
            if dp_cap > strings::MAX_DP_POINTS {
                return Err(Error::TooManyPoints { points: n, limit: SHARED_DP_POINTS });
            }
            let sets: Vec<Vec<usize>> = (3..=dp_cap).flat_map(|k| combinations(n, k)).collect();
            let computed: Vec<(u64, S)> = sets
                .par_iter()
                .map(|set| {
                    let b = match strings::birth(space, set)? {
                        Level::Finite(b) => b,
                        Level::Infinite => unreachable!("three or more points always have a birth"),
                    };
                    Ok((mask_of(set), b))
                })
                .collect::<Result<_>>()?;
            births.extend(computed);
        }
        // singletons and pairs inherit from their cheapest triple
        let mut small: HashMap<u64, S> = HashMap::new();
        for (&mask, b) in births.iter().filter(|(m, _)| m.count_ones() == 3) {
            let t = members(mask);
            for sub in [
                1 << t[0],
                1 << t[1],
                1 << t[2],
                (1 << t[0]) | (1 << t[1]),
                (1 << t[0]) | (1 << t[2]),
                (1 << t[1]) | (1 << t[2]),
            ] {
                let slot = small.entry(sub).or_insert_with(|| b.clone());
                if *b < *slot {
                    *slot = b.clone();
                }
            }
        }
        births.extend(small);
        births.retain(|m, _| m.count_ones() as usize <= cap);
    }

    // Exact births are already monotone along faces; rounding in float mode
    // can break that by an ulp, so lift each birth to its facets' maximum.
    let mut masks: Vec<u64> = births.keys().copied().collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for &mask in &masks {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut b = births[&mask].clone();
        for v in members(mask) {
            let fb = &births[&(mask & !(1 << v))];
            if *fb > b {
                b = fb.clone();
            }
        }
        births.insert(mask, b);
    }

    let simplices = births
        .into_iter()
        .map(|(mask, birth)| FilteredSimplex { vertices: members(mask), birth })
        .collect();
    Ok(Filtration::from_simplices(simplices, n, space.tolerance(), TieBreak::Lexicographic))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Interval<S> {
    pub degree: usize,
    pub birth: S,
    pub death: Level<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Barcode<S> {
    /// Sorted by degree, then birth, then death.
    pub intervals: Vec<Interval<S>>,
    /// Pairs whose birth equals their death; not listed in `intervals`.
    pub zero_length: usize,
    pub tolerance: f64,
}

impl<S: Scalar> Barcode<S> {
    /// Number of intervals of `degree` alive at `eps` (birth <= eps < death).
    pub fn betti_at(&self, degree: usize, eps: &S) -> usize {
        self.intervals
            .iter()
            .filter(|iv| iv.degree == degree && iv.birth.approx_le(eps, self.tolerance))
            .filter(|iv| match &iv.death {
                Level::Finite(d) => !d.approx_le(eps, self.tolerance),
                Level::Infinite => true,
            })
            .count()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.intervals.iter().map(|iv| iv.degree).max()
    }

    pub fn of_degree(&self, degree: usize) -> impl Iterator<Item = &Interval<S>> {
        self.intervals.iter().filter(move |iv| iv.degree == degree)
    }
}

/// Symmetric difference of two sorted index lists.
fn add_columns(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Persistence barcode by left-to-right column reduction over ℤ/2.
pub fn barcode<S: Scalar>(filtration: &Filtration<S>) -> Result<Barcode<S>> {
    let simplices = filtration.simplices();
    let index: HashMap<&[usize], usize> =
        simplices.iter().enumerate().map(|(i, s)| (s.vertices.as_slice(), i)).collect();
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(simplices.len());
    for (j, s) in simplices.iter().enumerate() {
        let mut col = Vec::with_capacity(s.vertices.len());
        if s.vertices.len() > 1 {
            for skip in 0..s.vertices.len() {
                let face = crate::complex::facet(&s.vertices, skip);
                match index.get(face.as_slice()) {
                    Some(&i) if i < j => col.push(i),
                    _ => {
                        return Err(Error::FaceOrder { simplex: s.vertices.clone(), face })
                    }
                }
            }
        }
        col.sort_unstable();
        columns.push(col);
    }

    let tol = filtration.tolerance();
    let mut pivot_owner: Vec<Option<usize>> = vec![None; simplices.len()];
    let mut paired = vec![false; simplices.len()];
    let mut intervals = Vec::new();
    let mut zero_length = 0;
    for j in 0..columns.len() {
        while let Some(&low) = columns[j].last() {
            match pivot_owner[low] {
                Some(k) => {
                    let reduced = add_columns(&columns[j], &columns[k]);
                    columns[j] = reduced;
                }
                None => break,
            }
        }
        if let Some(&low) = columns[j].last() {
            pivot_owner[low] = Some(j);
            paired[low] = true;
            paired[j] = true;
            let (b, d) = (&simplices[low].birth, &simplices[j].birth);
            if b.approx_eq(d, tol) {
                zero_length += 1;
            } else {
                intervals.push(Interval {
                    degree: simplices[low].dim(),
                    birth: b.clone(),
                    death: Level::Finite(d.clone()),
                });
            }
        }
    }
    for (j, s) in simplices.iter().enumerate() {
        if !paired[j] {
            intervals.push(Interval { degree: s.dim(), birth: s.birth.clone(), death: Level::Infinite });
        }
    }
    intervals.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then(a.birth.partial_cmp(&b.birth).unwrap_or(Ordering::Equal))
            .then(a.death.partial_cmp(&b.death).unwrap_or(Ordering::Equal))
    });
    Ok(Barcode { intervals, zero_length, tolerance: tol })
}

/// Betti numbers of `degree` at each grid level, read off the barcode.
pub fn betti_curve<S: Scalar>(filtration: &Filtration<S>, degree: usize, grid: &[S]) -> Result<Vec<(S, usize)>> {
    let bars = barcode(filtration)?;
    Ok(grid.iter().map(|eps| (eps.clone(), bars.betti_at(degree, eps))).collect())
}
