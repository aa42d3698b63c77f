//! Brute-force reference enumeration: every nonempty subset, every order.
//!
//! Shares nothing with the pruned search beyond the space itself; it exists
//! to be compared against.

use std::collections::BTreeMap;

use super::{StringEntry, StringSet};
use crate::error::{Error, Result};
use crate::gapspace::GapSpace;
use crate::scalar::Scalar;

pub const DEFAULT_ORACLE_LIMIT: usize = 8;

/// Lexicographic successor of a permutation, in place. False after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Minimal excess and the lexicographically first order attaining it, for
/// every subset of at least three points.
pub fn oracle_births<S: Scalar>(
    space: &GapSpace<S>,
    limit: usize,
) -> Result<BTreeMap<Vec<usize>, StringEntry<S>>> {
    let n = space.len();
    if n > limit {
        return Err(Error::OracleLimit { points: n, limit });
    }
    let mut out = BTreeMap::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let mut perm = set.clone();
        let mut best: Option<StringEntry<S>> = None;
        loop {
            let mut total = S::zero();
            for w in perm.windows(2) {
                total = total + space.gap(w[0], w[1]).clone();
            }
            let end = space.gap(perm[0], perm[perm.len() - 1]);
            let value = if space.eq(&total, end) { S::zero() } else { total - end.clone() };
            // permutations arrive in lexicographic order, so strict improvement
            // keeps the first minimal order
            if best.as_ref().is_none_or(|b| value < b.birth) {
                best = Some(StringEntry { birth: value, witness: perm.clone() });
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out.insert(set, best.expect("nonempty permutation set"));
    }
    Ok(out)
}

/// All ε-strings by exhaustive search over subsets and orders.
pub fn oracle_enumerate<S: Scalar>(space: &GapSpace<S>, eps: &S, limit: usize) -> Result<StringSet<S>> {
    if *eps < S::zero() {
        return Err(Error::NegativeEpsilon);
    }
    let births = oracle_births(space, limit)?;
    let mut out = StringSet::new(space.len());
    for (set, e) in births {
        if !space.le(&e.birth, eps) {
            continue;
        }
        if set.len() == 3 {
            let w = &e.witness;
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                out.offer(vec![w[i], w[j]], e.birth.clone(), vec![w[i], w[j]]);
            }
            for &p in w {
                out.offer(vec![p], e.birth.clone(), vec![p]);
            }
        }
        out.offer(set, e.birth, e.witness);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gapspace::{collinear_points, uniform_metric};
    use num_rational::BigRational;

    #[test]
    fn permutations_are_lexicographic() {
        let mut p = vec![1, 2, 3];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn collinear_oracle_finds_every_subset() {
        for n in 3..=6 {
            let values: Vec<BigRational> =
                (0..n).map(|i| BigRational::from_ratio(i * i, 1)).collect();
            let s = collinear_points(&values).unwrap();
            let found = oracle_enumerate(&s, &BigRational::from_ratio(0, 1), 8).unwrap();
            assert_eq!(found.len(), (1 << n) - 1);
        }
    }

    #[test]
    fn oracle_limit_is_enforced() {
        let s = uniform_metric::<f64>(9).unwrap();
        assert!(matches!(oracle_enumerate(&s, &0.0, 8), Err(Error::OracleLimit { .. })));
    }
}
