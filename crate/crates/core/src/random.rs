//! Seeded random spaces for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gapspace::{digraph_gaps, GapSpace};
use crate::scalar::Scalar;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_weights(max_weight: u32) -> Result<()> {
    if max_weight == 0 {
        return Err(Error::Generator("max_weight must be at least 1".into()));
    }
    Ok(())
}

/// Shortest-path metric of a complete graph with integer edge weights drawn
/// uniformly from `1..=max_weight`. Small weight ranges produce many
/// collinear triples and hence many strings.
pub fn random_metric<S: Scalar, R: Rng>(n: usize, max_weight: u32, rng: &mut R) -> Result<GapSpace<S>> {
    check_weights(max_weight)?;
    let mut arcs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in a + 1..n {
            let w = S::from_ratio(rng.gen_range(1..=max_weight) as i64, 1);
            arcs.push((a, b, w.clone()));
            arcs.push((b, a, w));
        }
    }
    Ok(digraph_gaps(n, &arcs)?.with_generator("random-metric"))
}

/// Distinct integer points of a `side × side` grid under the ℓ¹ distance.
pub fn random_grid_metric<S: Scalar, R: Rng>(n: usize, side: u32, rng: &mut R) -> Result<GapSpace<S>> {
    if (side as usize).pow(2) < n {
        return Err(Error::Generator(format!("a {side}x{side} grid has fewer than {n} points")));
    }
    let mut cells: Vec<(i64, i64)> =
        (0..side as i64).flat_map(|x| (0..side as i64).map(move |y| (x, y))).collect();
    cells.shuffle(rng);
    cells.truncate(n);
    let rows = cells
        .iter()
        .map(|a| cells.iter().map(|b| S::from_ratio((a.0 - b.0).abs() + (a.1 - b.1).abs(), 1)).collect())
        .collect();
    let labels = cells.iter().map(|(x, y)| format!("({x},{y})")).collect();
    Ok(GapSpace::new(rows)?.with_labels(labels)?.with_generator("random-grid"))
}

/// Shortest-path gaps of a random strongly connected digraph: a random
/// Hamiltonian cycle plus each other arc with probability `density`, with
/// weights in `1..=max_weight`. The result is usually asymmetric.
pub fn random_digraph<S: Scalar, R: Rng>(
    n: usize,
    max_weight: u32,
    density: f64,
    rng: &mut R,
) -> Result<GapSpace<S>> {
    check_weights(max_weight)?;
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Generator(format!("density {density} is not in [0, 1]")));
    }
    let mut cycle: Vec<usize> = (0..n).collect();
    cycle.shuffle(rng);
    let weight = |rng: &mut R| S::from_ratio(rng.gen_range(1..=max_weight) as i64, 1);
    let mut arcs = Vec::new();
    for i in 0..n {
        if n > 1 {
            arcs.push((cycle[i], cycle[(i + 1) % n], weight(rng)));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.gen_bool(density) {
                arcs.push((a, b, weight(rng)));
            }
        }
    }
    Ok(digraph_gaps(n, &arcs)?.with_generator("random-digraph"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn random_spaces_validate() {
        let mut rng = seeded_rng(7);
        for n in 1..8 {
            let m: GapSpace<BigRational> = random_metric(n, 3, &mut rng).unwrap();
            assert!(m.is_metric());
            let g: GapSpace<BigRational> = random_grid_metric(n, 3, &mut rng).unwrap();
            assert!(g.is_metric());
            let d: GapSpace<f64> = random_digraph(n, 5, 0.2, &mut rng).unwrap();
            assert!(d.validate().ok);
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a: GapSpace<f64> = random_digraph(6, 9, 0.3, &mut seeded_rng(11)).unwrap();
        let b: GapSpace<f64> = random_digraph(6, 9, 0.3, &mut seeded_rng(11)).unwrap();
        assert_eq!(a.rows(), b.rows());
    }

    #[test]
    fn bad_parameters() {
        let mut rng = seeded_rng(0);
        assert!(random_metric::<f64, _>(3, 0, &mut rng).is_err());
        assert!(random_grid_metric::<f64, _>(10, 3, &mut rng).is_err());
        assert!(random_digraph::<f64, _>(3, 2, 1.5, &mut rng).is_err());
    }
}
