//! Strings and ε-strings of a gap space.
//!
//! An ordered sequence `x1, ..., xn` has excess
//! `d(x1,x2) + ... + d(x(n-1),xn) - d(x1,xn)`, which is never negative. A set
//! of three or more points is an ε-string when some order has excess at most
//! ε; sets of one or two points are ε-strings when they lie in an ε-string of
//! three points. Strings are the ε = 0 case.

pub mod oracle;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gapspace::GapSpace;
use crate::scalar::Scalar;

pub use oracle::{oracle_births, oracle_enumerate, DEFAULT_ORACLE_LIMIT};

/// Largest set handled by the bitmask dynamic program in [`birth`].
pub const MAX_DP_POINTS: usize = 20;

/// A filtration value that may be infinite.
///
/// Subsets that never become ε-strings (singletons and pairs of a space with
/// fewer than three points) have an infinite birth; unpaired homology classes
/// have an infinite death.
#[derive(Debug, Clone, PartialEq)]
pub enum Level<S> {
    Finite(S),
    Infinite,
}

impl<S: Scalar> Level<S> {
    pub fn finite(&self) -> Option<&S> {
        match self {
            Level::Finite(v) => Some(v),
            Level::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Level::Finite(_))
    }
}

impl<S: Scalar> PartialOrd for Level<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Level::Finite(a), Level::Finite(b)) => a.partial_cmp(b),
            (Level::Finite(_), Level::Infinite) => Some(Ordering::Less),
            (Level::Infinite, Level::Finite(_)) => Some(Ordering::Greater),
            (Level::Infinite, Level::Infinite) => Some(Ordering::Equal),
        }
    }
}

/// A sequence of distinct points together with its excess.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedString<S> {
    pub order: Vec<usize>,
    pub excess: S,
}

/// Birth value and a witnessing order of one member of a [`StringSet`].
#[derive(Debug, Clone, PartialEq)]
pub struct StringEntry<S> {
    pub birth: S,
    pub witness: Vec<usize>,
}

/// ε-strings keyed by their sorted point tuple.
#[derive(Debug, Clone, PartialEq)]
pub struct StringSet<S> {
    points: usize,
    entries: BTreeMap<Vec<usize>, StringEntry<S>>,
}

impl<S: Scalar> StringSet<S> {
    pub fn new(points: usize) -> Self {
        StringSet { points, entries: BTreeMap::new() }
    }

    /// Inserts `set` unless an entry with a smaller `(birth, witness)` exists.
    /// The set is sorted before insertion.
    pub fn offer(&mut self, mut set: Vec<usize>, birth: S, witness: Vec<usize>) {
        set.sort_unstable();
        match self.entries.get_mut(&set) {
            Some(cur) => {
                if precedes(&birth, &witness, &cur.birth, &cur.witness) {
                    *cur = StringEntry { birth, witness };
                }
            }
            None => {
                self.entries.insert(set, StringEntry { birth, witness });
            }
        }
    }

    /// Raises each birth to the largest birth among its facets. Exact births
    /// are already monotone; float rounding can break that by an ulp.
    pub(crate) fn lift_births(&mut self) {
        let mut keys: Vec<Vec<usize>> = self.entries.keys().filter(|k| k.len() >= 2).cloned().collect();
        keys.sort_by_key(Vec::len);
        for key in keys {
            let mut b = self.entries[&key].birth.clone();
            for skip in 0..key.len() {
                let face: Vec<usize> =
                    key.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                if let Some(f) = self.entries.get(&face) {
                    if f.birth > b {
                        b = f.birth.clone();
                    }
                }
            }
            self.entries.get_mut(&key).expect("key taken from the map").birth = b;
        }
    }

    pub fn merge(&mut self, other: StringSet<S>) {
        for (set, e) in other.entries {
            self.offer(set, e.birth, e.witness);
        }
    }

    /// Number of points of the ambient space.
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, set: &[usize]) -> Option<&StringEntry<S>> {
        self.entries.get(set)
    }

    pub fn contains(&self, set: &[usize]) -> bool {
        self.entries.contains_key(set)
    }

    /// Entries in lexicographic order of their sorted tuples.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &StringEntry<S>)> {
        self.entries.iter()
    }

    pub fn sets(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.entries.keys()
    }

    pub fn max_size(&self) -> usize {
        self.entries.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn count_of_size(&self, k: usize) -> usize {
        self.entries.keys().filter(|s| s.len() == k).count()
    }

    /// Keeps only the members with at most `max` points.
    pub fn truncate_size(&mut self, max: usize) {
        self.entries.retain(|k, _| k.len() <= max);
    }
}

/// Total order on `(birth, witness)` used to pick canonical witnesses.
fn precedes<S: PartialOrd>(b1: &S, w1: &[usize], b2: &S, w2: &[usize]) -> bool {
    match b1.partial_cmp(b2) {
        Some(Ordering::Less) => true,
        Some(Ordering::Equal) => w1 < w2,
        _ => false,
    }
}

fn check_sequence<S: Scalar>(space: &GapSpace<S>, seq: &[usize]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut seen = vec![false; space.len()];
    for &i in seq {
        space.check_index(i)?;
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::RepeatedIndex(i));
        }
    }
    Ok(())
}

/// `sum - end`, snapped to zero when the two agree under the space tolerance.
fn slack<S: Scalar>(space: &GapSpace<S>, sum: S, end: &S) -> S {
    if space.eq(&sum, end) {
        S::zero()
    } else {
        sum - end.clone()
    }
}

fn path_sum<S: Scalar>(space: &GapSpace<S>, order: &[usize]) -> S {
    order
        .windows(2)
        .fold(S::zero(), |acc, w| acc + space.gap(w[0], w[1]).clone())
}

/// Excess of an ordered sequence: consecutive gaps minus the end gap.
pub fn excess<S: Scalar>(space: &GapSpace<S>, order: &[usize]) -> Result<S> {
    check_sequence(space, order)?;
    if order.len() == 1 {
        return Ok(S::zero());
    }
    let end = space.gap(order[0], order[order.len() - 1]);
    Ok(slack(space, path_sum(space, order), end))
}

/// Minimal excess over all orders of `set` (|set| >= 3) with the
/// lexicographically first order attaining it. Held-Karp over subsets of
/// `set`, one pass per starting point.
fn min_excess_order<S: Scalar>(space: &GapSpace<S>, set: &[usize]) -> (S, Vec<usize>) {
    let k = set.len();
    debug_assert!((3..=MAX_DP_POINTS).contains(&k));
    let full = (1usize << k) - 1;
    let mut best: Option<(S, Vec<usize>)> = None;
    let mut dp: Vec<Option<S>> = vec![None; (1 << k) * k];
    let mut parent: Vec<u8> = vec![0; (1 << k) * k];
    for start in 0..k {
        dp.iter_mut().for_each(|c| *c = None);
        dp[(1 << start) * k + start] = Some(S::zero());
        for mask in 1..=full {
            if mask & (1 << start) == 0 {
                continue;
            }
            for last in 0..k {
                let Some(cur) = dp[mask * k + last].clone() else { continue };
                for next in 0..k {
                    if mask & (1 << next) != 0 {
                        continue;
                    }
                    let cand = cur.clone() + space.gap(set[last], set[next]).clone();
                    let slot = (mask | (1 << next)) * k + next;
                    let better = match &dp[slot] {
                        Some(old) => cand < *old,
                        None => true,
                    };
                    if better {
                        dp[slot] = Some(cand);
                        parent[slot] = last as u8;
                    }
                }
            }
        }
        for last in 0..k {
            if last == start {
                continue;
            }
            let Some(sum) = dp[full * k + last].clone() else { continue };
            let value = slack(space, sum, space.gap(set[start], set[last]));
            // rebuild the path for the witness
            let mut order = Vec::with_capacity(k);
            let (mut mask, mut node) = (full, last);
            loop {
                order.push(set[node]);
                if mask == 1 << start {
                    break;
                }
                let prev = parent[mask * k + node] as usize;
                mask &= !(1 << node);
                node = prev;
            }
            order.reverse();
            let replace = match &best {
                Some((b, w)) => precedes(&value, &order, b, w),
                None => true,
            };
            if replace {
                best = Some((value, order));
            }
        }
    }
    best.expect("a set of three or more points has an order")
}

/// Minimal ε for which `subset` is an ε-string.
///
/// Sets of three or more points use a bitmask dynamic program,
/// `O(2^k k^3)` for `k` points. Singletons and pairs take the least birth of
/// a three-point superset, which is infinite when the space has fewer than
/// three points.
pub fn birth<S: Scalar>(space: &GapSpace<S>, subset: &[usize]) -> Result<Level<S>> {
    check_sequence(space, subset)?;
    let mut set = subset.to_vec();
    set.sort_unstable();
    if set.len() >= 3 {
        if set.len() > MAX_DP_POINTS {
            return Err(Error::TooManyPoints { points: set.len(), limit: MAX_DP_POINTS });
        }
        return Ok(Level::Finite(min_excess_order(space, &set).0));
    }
    let mut best: Level<S> = Level::Infinite;
    for_each_triple_superset(space.len(), &set, |triple| {
        let b = Level::Finite(min_excess_order(space, triple).0);
        if b < best {
            best = b;
        }
    });
    Ok(best)
}

fn for_each_triple_superset(n: usize, set: &[usize], mut f: impl FnMut(&[usize])) {
    let others: Vec<usize> = (0..n).filter(|i| !set.contains(i)).collect();
    match set.len() {
        1 => {
            for (i, &a) in others.iter().enumerate() {
                for &b in &others[i + 1..] {
                    let mut t = [set[0], a, b];
                    t.sort_unstable();
                    f(&t);
                }
            }
        }
        2 => {
            for &a in &others {
                let mut t = [set[0], set[1], a];
                t.sort_unstable();
                f(&t);
            }
        }
        _ => unreachable!("only singletons and pairs take triple supersets"),
    }
}

pub fn is_eps_string<S: Scalar>(space: &GapSpace<S>, subset: &[usize], eps: &S) -> Result<bool> {
    if *eps < S::zero() {
        return Err(Error::NegativeEpsilon);
    }
    Ok(match birth(space, subset)? {
        Level::Finite(b) => space.le(&b, eps),
        Level::Infinite => false,
    })
}

pub fn is_string<S: Scalar>(space: &GapSpace<S>, subset: &[usize]) -> Result<bool> {
    is_eps_string(space, subset, &S::zero())
}

/// Every order of `set` (|set| >= 3) with excess at most `eps`, found by a
/// depth-first search that drops any prefix already over budget.
fn orders_within<S: Scalar>(space: &GapSpace<S>, set: &[usize], eps: &S) -> Vec<OrderedString<S>> {
    fn go<S: Scalar>(
        space: &GapSpace<S>,
        set: &[usize],
        eps: &S,
        seq: &mut Vec<usize>,
        used: &mut [bool],
        sum: S,
        out: &mut Vec<OrderedString<S>>,
    ) {
        if seq.len() == set.len() {
            let end = space.gap(seq[0], seq[seq.len() - 1]);
            out.push(OrderedString { order: seq.clone(), excess: slack(space, sum, end) });
            return;
        }
        for (i, &next) in set.iter().enumerate() {
            if used[i] {
                continue;
            }
            let last = seq[seq.len() - 1];
            let new_sum = sum.clone() + space.gap(last, next).clone();
            let bound = space.gap(seq[0], next).clone() + eps.clone();
            if !space.le(&new_sum, &bound) {
                continue;
            }
            used[i] = true;
            seq.push(next);
            go(space, set, eps, seq, used, new_sum, out);
            seq.pop();
            used[i] = false;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; set.len()];
    for (i, &start) in set.iter().enumerate() {
        used[i] = true;
        let mut seq = vec![start];
        go(space, set, eps, &mut seq, &mut used, S::zero(), &mut out);
        used[i] = false;
    }
    out
}

/// Direct orders of an ε-string.
///
/// A pair's order is direct when it is the restriction of a direct order of
/// some three-point ε-string containing the pair; every such order is
/// returned without assuming how many there are.
pub fn direct_eps_orders<S: Scalar>(
    space: &GapSpace<S>,
    subset: &[usize],
    eps: &S,
) -> Result<Vec<OrderedString<S>>> {
    check_sequence(space, subset)?;
    if *eps < S::zero() {
        return Err(Error::NegativeEpsilon);
    }
    let mut set = subset.to_vec();
    set.sort_unstable();
    let orders = match set.len() {
        1 => {
            if is_eps_string(space, &set, eps)? {
                vec![OrderedString { order: set.clone(), excess: S::zero() }]
            } else {
                vec![]
            }
        }
        2 => {
            let mut found: Vec<Vec<usize>> = Vec::new();
            for_each_triple_superset(space.len(), &set, |triple| {
                for o in orders_within(space, triple, eps) {
                    let restricted: Vec<usize> =
                        o.order.into_iter().filter(|p| set.contains(p)).collect();
                    if !found.contains(&restricted) {
                        found.push(restricted);
                    }
                }
            });
            found.sort();
            found
                .into_iter()
                .map(|order| OrderedString { order, excess: S::zero() })
                .collect()
        }
        _ => {
            let mut orders = orders_within(space, &set, eps);
            orders.sort_by(|a, b| a.order.cmp(&b.order));
            orders
        }
    };
    if orders.is_empty() {
        return Err(Error::NotAString(set));
    }
    Ok(orders)
}

/// Direct orders of a string (ε = 0).
pub fn direct_orders<S: Scalar>(space: &GapSpace<S>, subset: &[usize]) -> Result<Vec<OrderedString<S>>> {
    direct_eps_orders(space, subset, &S::zero())
}

/// The unordered pair of extreme points of a string in a metric space,
/// returned in increasing index order.
pub fn endpoints<S: Scalar>(space: &GapSpace<S>, string: &[usize]) -> Result<(usize, usize)> {
    if !space.is_metric() {
        return Err(Error::NotMetric);
    }
    check_sequence(space, string)?;
    if string.len() < 2 {
        return Err(Error::Parse("endpoints need a string of at least two points".into()));
    }
    let orders = direct_orders(space, string)?;
    let o = &orders[0].order;
    let (a, b) = (o[0], o[o.len() - 1]);
    Ok((a.min(b), a.max(b)))
}

/// All ε-strings with at most `max_size` points (default: no cap).
///
/// Ordered sequences are grown depth first from every starting point, and a
/// prefix is abandoned as soon as its running excess exceeds ε; every prefix
/// of a direct order is itself direct, so nothing is lost. Singletons and
/// pairs come from the three-point strings containing them. Starting points
/// are explored in parallel and merged deterministically.
pub fn enumerate_eps_strings<S: Scalar>(
    space: &GapSpace<S>,
    eps: &S,
    max_size: Option<usize>,
) -> Result<StringSet<S>> {
    if *eps < S::zero() {
        return Err(Error::NegativeEpsilon);
    }
    let n = space.len();
    let cap = max_size.unwrap_or(n).min(n);
    let depth = cap.max(3);

    let partials: Vec<StringSet<S>> = (0..n)
        .into_par_iter()
        .map(|start| {
            let mut out = StringSet::new(n);
            let mut used = vec![false; n];
            used[start] = true;
            let mut seq = vec![start];
            extend(space, eps, depth, &mut seq, &mut used, S::zero(), &mut out);
            out
        })
        .collect();
    let mut long = StringSet::new(n);
    for p in partials {
        long.merge(p);
    }

    let mut result = StringSet::new(n);
    for (set, entry) in long.iter() {
        if set.len() == 3 && cap >= 1 {
            let w = &entry.witness;
            for skip in 0..3 {
                if cap >= 2 {
                    let pair: Vec<usize> =
                        (0..3).filter(|&i| i != skip).map(|i| w[i]).collect();
                    result.offer(pair.clone(), entry.birth.clone(), pair);
                }
                result.offer(vec![w[skip]], entry.birth.clone(), vec![w[skip]]);
            }
        }
    }
    result.merge(long);
    result.truncate_size(cap);
    result.lift_births();
    Ok(result)
}

fn extend<S: Scalar>(
    space: &GapSpace<S>,
    eps: &S,
    depth: usize,
    seq: &mut Vec<usize>,
    used: &mut [bool],
    sum: S,
    out: &mut StringSet<S>,
) {
    let first = seq[0];
    let last = seq[seq.len() - 1];
    for next in 0..space.len() {
        if used[next] {
            continue;
        }
        let new_sum = sum.clone() + space.gap(last, next).clone();
        let end = space.gap(first, next);
        let bound = end.clone() + eps.clone();
        if !space.le(&new_sum, &bound) {
            continue;
        }
        seq.push(next);
        if seq.len() >= 3 {
            out.offer(seq.clone(), slack(space, new_sum.clone(), end), seq.clone());
        }
        if seq.len() < depth {
            used[next] = true;
            extend(space, eps, depth, seq, used, new_sum, out);
            used[next] = false;
        }
        seq.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gapspace::{circle_arc_metric, collinear_points, digraph_gaps, uniform_metric};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_ratio(v, 1)
    }

    fn line(values: &[i64]) -> GapSpace<Q> {
        collinear_points(&values.iter().map(|&v| q(v)).collect::<Vec<_>>()).unwrap()
    }

    fn ex5() -> GapSpace<Q> {
        circle_arc_metric(&[q(0), q(2), q(6), q(8)], q(12)).unwrap()
    }

    fn cycle3() -> GapSpace<Q> {
        digraph_gaps(3, &[(0, 1, q(1)), (1, 2, q(1)), (2, 0, q(1))]).unwrap()
    }

    #[test]
    fn excess_examples() {
        let s = line(&[0, 1, 2]);
        assert_eq!(excess(&s, &[0, 1, 2]).unwrap(), q(0));
        assert_eq!(excess(&s, &[1, 0, 2]).unwrap(), q(2));
        assert_eq!(excess(&s, &[2]).unwrap(), q(0));
        assert!(matches!(excess(&s, &[0, 1, 0]), Err(Error::RepeatedIndex(0))));
        assert!(matches!(excess(&s, &[]), Err(Error::EmptySubset)));
    }

    #[test]
    fn uniform_space_has_no_strings() {
        let s = uniform_metric::<Q>(3).unwrap();
        for sub in [&[0][..], &[0, 1], &[0, 1, 2]] {
            assert!(!is_string(&s, sub).unwrap());
        }
        assert!(enumerate_eps_strings(&uniform_metric::<Q>(5).unwrap(), &q(0), None)
            .unwrap()
            .is_empty());
        assert_eq!(enumerate_eps_strings(&s, &q(1), None).unwrap().len(), 7);
        assert_eq!(birth(&s, &[0, 1, 2]).unwrap(), Level::Finite(q(1)));
    }

    #[test]
    fn circle_arc_strings() {
        let s = ex5();
        assert!(is_string(&s, &[0, 1, 2]).unwrap());
        assert!(!is_string(&s, &[0, 1, 2, 3]).unwrap());
        assert_eq!(birth(&s, &[0, 1, 2, 3]).unwrap(), Level::Finite(q(4)));
        assert!(matches!(is_string(&s, &[]), Err(Error::EmptySubset)));
    }

    #[test]
    fn collinear_enumeration_is_everything() {
        let strings = enumerate_eps_strings(&line(&[0, 1, 2, 3]), &q(0), None).unwrap();
        assert_eq!(strings.len(), 15);
        assert!(strings.iter().all(|(_, e)| e.birth == q(0)));
    }

    #[test]
    fn max_size_cap() {
        let strings = enumerate_eps_strings(&line(&[0, 1, 2, 3]), &q(0), Some(2)).unwrap();
        assert_eq!(strings.len(), 10);
        assert_eq!(strings.max_size(), 2);
        let strings = enumerate_eps_strings(&line(&[0, 1, 2, 3]), &q(0), Some(3)).unwrap();
        assert_eq!(strings.len(), 14);
    }

    #[test]
    fn negative_epsilon_is_rejected() {
        assert!(matches!(
            enumerate_eps_strings(&ex5(), &q(-1), None),
            Err(Error::NegativeEpsilon)
        ));
    }

    #[test]
    fn metric_strings_have_two_opposite_orders() {
        let s = line(&[0, 5, 7, 12]);
        let orders = direct_orders(&s, &[0, 1, 2, 3]).unwrap();
        let got: Vec<_> = orders.iter().map(|o| o.order.clone()).collect();
        assert_eq!(got, vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]]);
        let pair: Vec<_> = direct_orders(&s, &[1, 3]).unwrap().into_iter().map(|o| o.order).collect();
        assert_eq!(pair, vec![vec![1, 3], vec![3, 1]]);
        let single = direct_orders(&s, &[2]).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn directed_cycle_orders_are_rotations() {
        let s = cycle3();
        let got: Vec<_> =
            direct_orders(&s, &[0, 1, 2]).unwrap().into_iter().map(|o| o.order).collect();
        assert_eq!(got, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        // both orders of every pair extend into some rotation
        let pair: Vec<_> = direct_orders(&s, &[0, 1]).unwrap().into_iter().map(|o| o.order).collect();
        assert_eq!(pair, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn direct_orders_of_non_string_fail() {
        assert!(matches!(direct_orders(&ex5(), &[0, 1, 2, 3]), Err(Error::NotAString(_))));
    }

    #[test]
    fn endpoint_examples() {
        let s = line(&[0, 5, 7, 12]);
        assert_eq!(endpoints(&s, &[0, 1, 2, 3]).unwrap(), (0, 3));
        assert_eq!(endpoints(&s, &[1, 2]).unwrap(), (1, 2));
        let s = line(&[0, 1, 2]);
        assert_eq!(endpoints(&s, &[0, 1]).unwrap(), (0, 1));
        assert!(matches!(endpoints(&cycle3(), &[0, 1, 2]), Err(Error::NotMetric)));
        assert!(matches!(endpoints(&ex5(), &[0, 1, 2, 3]), Err(Error::NotAString(_))));
    }

    #[test]
    fn small_spaces_have_infinite_birth() {
        let s = line(&[0, 1]);
        assert_eq!(birth(&s, &[0]).unwrap(), Level::Infinite);
        assert_eq!(birth(&s, &[0, 1]).unwrap(), Level::Infinite);
        assert!(enumerate_eps_strings(&s, &q(100), None).unwrap().is_empty());
    }

    #[test]
    fn witness_is_a_direct_order() {
        let s = ex5();
        let strings = enumerate_eps_strings(&s, &q(4), None).unwrap();
        assert_eq!(strings.len(), 15);
        for (set, e) in strings.iter() {
            let mut w = e.witness.clone();
            assert_eq!(excess(&s, &w).unwrap(), e.birth, "{set:?}");
            w.sort_unstable();
            assert_eq!(&w, set);
        }
    }

    #[test]
    fn float_strings_use_tolerance() {
        let s = GapSpace::with_tolerance(
            vec![vec![0.0, 0.1, 0.3], vec![0.1, 0.0, 0.2], vec![0.3, 0.2, 0.0]],
            1e-9,
        )
        .unwrap();
        assert!(is_string(&s, &[0, 1, 2]).unwrap());
        assert_eq!(birth(&s, &[0, 1, 2]).unwrap(), Level::Finite(0.0));
        let strict = GapSpace::with_tolerance(s.rows(), 0.0).unwrap();
        assert!(!is_string(&strict, &[0, 1, 2]).unwrap());
    }
}
