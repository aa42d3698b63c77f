#![allow(dead_code)]

use string_complex::construct::surface_library;
use string_complex::gapspace::{
    circle_arc_metric, collinear_points, digraph_gaps, polygon_points, regular_polygon_points,
    two_parallel_lines, uniform_metric,
};
use string_complex::random::{random_digraph, random_grid_metric, random_metric, seeded_rng};
use string_complex::strings::{direct_orders, endpoints, excess, Level};
use string_complex::{
    birth, enumerate_eps_strings, realize, Exact, ExactSpace, FloatSpace, GapSpace, RealizationParams, Scalar,
};

pub fn q(v: i64) -> Exact {
    Exact::from_integer(v.into())
}

pub fn r(n: i64, d: i64) -> Exact {
    Exact::new(n.into(), d.into())
}

pub fn ex5() -> ExactSpace {
    circle_arc_metric(&[q(0), q(2), q(6), q(8)], q(12)).unwrap()
}

pub fn three_cycle() -> ExactSpace {
    digraph_gaps(3, &[(0, 1, q(1)), (1, 2, q(1)), (2, 0, q(1))]).unwrap()
}

pub fn negative_gaps() -> ExactSpace {
    let rows = vec![vec![q(0), q(-1), q(1)], vec![q(2), q(0), q(2)], vec![q(1), q(0), q(0)]];
    GapSpace::new(rows).unwrap()
}

/// Named exact fixtures small enough for oracles and full filtrations.
pub fn exact_fixtures() -> Vec<(String, ExactSpace)> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push((format!("uniform({n})"), uniform_metric(n).unwrap()));
    }
    out.push(("collinear[0,1,2,3]".into(), collinear_points(&[q(0), q(1), q(2), q(3)]).unwrap()));
    out.push(("collinear[0,5,7,12]".into(), collinear_points(&[q(0), q(5), q(7), q(12)]).unwrap()));
    out.push(("circle[0,2,6,8]/12".into(), ex5()));
    out.push((
        "circle[0,1,3,4,7]/10".into(),
        circle_arc_metric(&[q(0), q(1), q(3), q(4), q(7)], q(10)).unwrap(),
    ));
    out.push(("three-cycle".into(), three_cycle()));
    out.push(("negative-gaps".into(), negative_gaps()));
    let disk = surface_library("disk").unwrap();
    out.push(("realized-disk".into(), realize(&disk, &RealizationParams::default()).unwrap()));
    out
}

/// Euclidean fixtures in float mode.
pub fn float_fixtures() -> Vec<(String, FloatSpace)> {
    let mut out = Vec::new();
    for (m, n) in [(3, 3), (3, 5), (4, 4)] {
        out.push((format!("parallel({m},{n})"), two_parallel_lines(m, n, 1.0, 1.0).unwrap()));
    }
    for k in 3..=5 {
        for interior in 1..=2 {
            out.push((format!("polygon({k},{interior})"), regular_polygon_points(k, interior).unwrap()));
        }
    }
    out.push((
        "square-mixed".into(),
        polygon_points(&[3, 4, 3, 4], &[(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]).unwrap(),
    ));
    out
}

/// A random exact space drawn by seed: a weighted-graph metric, an ℓ¹ grid
/// metric or an asymmetric digraph space, on 3..=max_n points.
pub fn random_space(seed: u64, max_n: usize) -> ExactSpace {
    let mut rng = seeded_rng(seed);
    let n = 3 + (seed as usize / 3) % (max_n - 2);
    match seed % 3 {
        0 => random_metric(n, 3, &mut rng).unwrap(),
        1 => random_grid_metric(n, 3, &mut rng).unwrap(),
        _ => random_digraph(n, 4, 0.3, &mut rng).unwrap(),
    }
}

fn subsets_of(set: &[usize]) -> Vec<Vec<usize>> {
    (1u32..(1 << set.len()) - 1)
        .map(|m| (0..set.len()).filter(|i| m & (1 << i) != 0).map(|i| set[i]).collect())
        .collect()
}

fn level_le<S: Scalar>(space: &GapSpace<S>, a: &Level<S>, b: &Level<S>) -> bool {
    match (a, b) {
        (_, Level::Infinite) => true,
        (Level::Infinite, _) => false,
        (Level::Finite(x), Level::Finite(y)) => space.le(x, y),
    }
}

/// Substring closure, direct-order restriction and birth monotonicity of the
/// ε-strings. Returns one message per violation.
pub fn closure_violations<S: Scalar>(space: &GapSpace<S>, eps: &S) -> Vec<String> {
    let mut out = Vec::new();
    let strings = enumerate_eps_strings(space, eps, None).unwrap();
    for (set, entry) in strings.iter() {
        for sub in subsets_of(set) {
            match strings.get(&sub) {
                None => out.push(format!("{sub:?} ⊂ {set:?} missing at ε={eps}")),
                Some(e) if !space.le(&e.birth, &entry.birth) => {
                    out.push(format!("birth{sub:?}={} > birth{set:?}={}", e.birth, entry.birth))
                }
                _ => {}
            }
        }
        if set.len() >= 3 {
            for skip in 0..entry.witness.len() {
                let rest: Vec<usize> =
                    entry.witness.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                let ok = if rest.len() >= 3 {
                    space.le(&excess(space, &rest).unwrap(), eps)
                } else {
                    let mut key = rest.clone();
                    key.sort_unstable();
                    strings.contains(&key)
                };
                if !ok {
                    out.push(format!("restriction {rest:?} of witness {:?} is not direct", entry.witness));
                }
            }
        }
    }
    let n = space.len();
    // every subset, for spaces small enough to afford it
    let masks = if n <= 9 { 1u32..(1 << n) } else { 0..0 };
    for mask in masks {
        let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if set.len() < 2 {
            continue;
        }
        let b = birth(space, &set).unwrap();
        for skip in 0..set.len() {
            let face: Vec<usize> = set.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            let fb = birth(space, &face).unwrap();
            if !level_le(space, &fb, &b) {
                out.push(format!("birth not monotone: {face:?} ⊂ {set:?}"));
            }
        }
    }
    out
}

/// The gap formula along every direct order of every string: the gap between
/// any two positions equals the sum of the consecutive gaps between them.
pub fn gap_formula_violations<S: Scalar>(space: &GapSpace<S>) -> Vec<String> {
    let mut out = Vec::new();
    let strings = enumerate_eps_strings(space, &S::zero(), None).unwrap();
    for set in strings.sets().filter(|s| s.len() >= 3) {
        for o in direct_orders(space, set).unwrap() {
            let x = &o.order;
            for i in 0..x.len() {
                let mut sum = S::zero();
                for j in i + 1..x.len() {
                    sum = sum + space.gap(x[j - 1], x[j]).clone();
                    if !space.eq(&sum, space.gap(x[i], x[j])) {
                        out.push(format!("gap formula fails on {x:?} at ({i}, {j})"));
                    }
                }
            }
        }
    }
    out
}

/// Metric-only facts: reversal preserves excess, strings of two or more
/// points have exactly two mutually reverse direct orders, and endpoints
/// realize the diameter of the string.
pub fn metric_violations<S: Scalar>(space: &GapSpace<S>) -> Vec<String> {
    let mut out = Vec::new();
    if !space.is_metric() {
        return out;
    }
    let n = space.len();
    let all: Vec<usize> = (0..n).collect();
    let mut rev = all.clone();
    rev.reverse();
    if !space.eq(&excess(space, &all).unwrap(), &excess(space, &rev).unwrap()) {
        out.push("reversal changes excess".into());
    }
    let strings = enumerate_eps_strings(space, &S::zero(), None).unwrap();
    for set in strings.sets().filter(|s| s.len() >= 2) {
        let orders = direct_orders(space, set).unwrap();
        let mut r = orders[0].order.clone();
        r.reverse();
        if orders.len() != 2 || orders[1].order != r {
            out.push(format!("{set:?} has direct orders {:?}", orders.iter().map(|o| &o.order).collect::<Vec<_>>()));
        }
        for o in &orders {
            if !space.eq(&excess(space, &o.order).unwrap(), &S::zero()) {
                out.push(format!("{:?} reported direct but has positive excess", o.order));
            }
        }
        let (a, b) = endpoints(space, set).unwrap();
        for &x in set {
            for &y in set {
                if !space.le(space.gap(x, y), space.gap(a, b)) {
                    out.push(format!("endpoints ({a}, {b}) of {set:?} are closer than ({x}, {y})"));
                }
            }
        }
    }
    out
}

/// Every lemma check on one space at ε = 0 and at ε = `eps`.
pub fn lemma_violations<S: Scalar>(space: &GapSpace<S>, eps: &S) -> Vec<String> {
    let mut out = closure_violations(space, &S::zero());
    out.extend(closure_violations(space, eps));
    out.extend(gap_formula_violations(space));
    out.extend(metric_violations(space));
    out
}

/// ε levels for slicing a filtration: every critical value, the midpoints
/// between consecutive ones and a point beyond the last, then seeded random
/// levels, `count` in all.
pub fn sample_levels<S: Scalar>(critical: &[S], count: usize, seed: u64) -> Vec<S> {
    use rand::Rng;
    let two = S::from_ratio(2, 1);
    let mut levels = Vec::new();
    for (i, c) in critical.iter().enumerate() {
        levels.push(c.clone());
        match critical.get(i + 1) {
            Some(next) => levels.push((c.clone() + next.clone()) / two.clone()),
            None => levels.push(c.clone() + S::one()),
        }
    }
    levels.push(S::zero());
    levels.truncate(count);
    let top = critical.last().cloned().unwrap_or_else(S::one) + S::one();
    let mut rng = seeded_rng(seed);
    while levels.len() < count {
        levels.push(top.clone() * S::from_ratio(rng.gen_range(0..=1000), 1000));
    }
    levels
}

fn betti_of<S: Scalar>(c: &string_complex::StringComplex<S>, degrees: usize) -> Vec<usize> {
    let h = string_complex::homology(c, string_complex::Coefficients::Mod2).unwrap();
    (0..degrees).map(|d| h.betti(d)).collect()
}

/// Level-slice equivalence, monotone embedding, local constancy, the full
/// simplex at the top and tie-break independence for one space.
///
/// Spaces with more than 12 points use a filtration capped at dimension 3,
/// and only degrees 0..=2 are compared.
pub fn persistence_violations<S: Scalar>(space: &GapSpace<S>, samples: usize, seed: u64) -> Vec<String> {
    use string_complex::persistence::TieBreak;
    use string_complex::{barcode, build_complex, build_filtration};
    let mut out = Vec::new();
    let n = space.len();
    let cap = if n > 12 { Some(3) } else { None };
    let degrees = cap.unwrap_or(n.max(1));
    let f = build_filtration(space, cap).unwrap();
    let bars = barcode(&f).unwrap();
    let critical = f.critical_values();
    let levels = sample_levels(&critical, samples, seed);

    let mut sorted = levels.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut previous: Option<string_complex::StringComplex<S>> = None;
    for eps in &sorted {
        let level = build_complex(&enumerate_eps_strings(space, eps, cap.map(|d| d + 1)).unwrap()).unwrap();
        let from_bars: Vec<usize> = (0..degrees).map(|d| bars.betti_at(d, eps)).collect();
        let direct = betti_of(&level, degrees);
        if from_bars != direct {
            out.push(format!("ε={eps}: barcode gives {from_bars:?}, level complex {direct:?}"));
        }
        if !f.complex_at(eps).same_simplices(&level) {
            out.push(format!("ε={eps}: filtration prefix differs from the enumerated level complex"));
        }
        if let Some(p) = &previous {
            if p.iter().any(|(s, _)| !level.contains(s)) {
                out.push(format!("ε={eps}: a lower level is not contained in this one"));
            }
        }
        previous = Some(level);
    }

    for (i, c) in critical.iter().enumerate() {
        let next = critical.get(i + 1).cloned().unwrap_or_else(|| c.clone() + S::one());
        let mid = (c.clone() + next) / S::from_ratio(2, 1);
        let a = enumerate_eps_strings(space, c, cap.map(|d| d + 1)).unwrap();
        let b = enumerate_eps_strings(space, &mid, cap.map(|d| d + 1)).unwrap();
        if a.sets().ne(b.sets()) {
            out.push(format!("complex changes between ε={c} and ε={mid}"));
        }
    }

    if n >= 3 && cap.is_none() {
        let full = f.complex();
        let expected: Vec<usize> = (1..=n).map(|k| binomial(n, k)).collect();
        if full.f_vector() != expected {
            out.push(format!("top complex has f-vector {:?}, not a full simplex", full.f_vector()));
        }
    }

    let other = barcode(&f.reordered(TieBreak::ReverseLexicographic)).unwrap();
    if other.intervals != bars.intervals {
        out.push("barcode depends on the tie-break".into());
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
