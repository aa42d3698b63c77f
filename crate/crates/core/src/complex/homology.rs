//! Simplicial homology over ℤ/2 (column reduction on bit-packed columns) and
//! over ℤ (Smith normal form of the signed boundary matrices).

use std::collections::HashMap;

use num_integer::Integer;
use rayon::prelude::*;

use super::StringComplex;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Mod2,
    Integer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerHomology {
    /// Free rank of H_k.
    pub ranks: Vec<usize>,
    /// Torsion coefficients of H_k (invariant factors greater than 1).
    pub torsion: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    /// Betti numbers over ℤ/2, one per dimension `0..=dim`.
    pub betti_mod2: Vec<usize>,
    pub integer: Option<IntegerHomology>,
}

impl HomologyResult {
    pub fn euler_characteristic(&self) -> i64 {
        self.betti_mod2
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Mod-2 Betti number in `degree`, zero above the top dimension.
    pub fn betti(&self, degree: usize) -> usize {
        self.betti_mod2.get(degree).copied().unwrap_or(0)
    }
}

/// Column `j` of the boundary matrix from dimension `dim` to `dim - 1`, as
/// (row index, sign) pairs.
fn boundary_columns(
    faces: &HashMap<&[usize], usize>,
    cofaces: &[&Vec<usize>],
) -> Vec<Vec<(usize, i64)>> {
    cofaces
        .iter()
        .map(|s| {
            (0..s.len())
                .map(|skip| {
                    let face = super::facet(s, skip);
                    let row = faces[face.as_slice()];
                    (row, if skip % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect()
}

/// Rank over ℤ/2 of a matrix given by the row indices of its nonzero entries
/// in each column.
pub fn gf2_rank(rows: usize, columns: &[Vec<usize>]) -> usize {
    let words = rows.div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut rank = 0;
    for col in columns {
        let mut bits = vec![0u64; words];
        for &r in col {
            bits[r / 64] ^= 1 << (r % 64);
        }
        while let Some(low) = highest_bit(&bits) {
            match pivots.get(&low) {
                Some(p) => bits.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(low, bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn highest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

/// Nonzero invariant factors of an integer matrix, in divisibility order.
///
/// Elimination pivots on the entry of least absolute value; entries stay
/// small for boundary matrices. Arithmetic is checked and overflow reported.
pub fn smith_invariants(mut m: Vec<Vec<i64>>) -> Result<Vec<u64>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t] == 0 {
                    continue;
                }
                let f = m[i][t] / p;
                for j in t..cols {
                    let sub = f.checked_mul(m[t][j]).ok_or(Error::Overflow)?;
                    m[i][j] = m[i][j].checked_sub(sub).ok_or(Error::Overflow)?;
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                if m[t][j] == 0 {
                    continue;
                }
                let f = m[t][j] / p;
                for row in m.iter_mut().skip(t) {
                    let sub = f.checked_mul(row[t]).ok_or(Error::Overflow)?;
                    row[j] = row[j].checked_sub(sub).ok_or(Error::Overflow)?;
                }
                clean &= m[t][j] == 0;
            }
            if clean {
                break;
            }
            // a remainder is smaller than the pivot; bring it to (t, t)
            let mut best = (t, t);
            for i in t + 1..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].unsigned_abs());
        t += 1;
    }
    // enforce d_i | d_(i+1)
    let k = diag.len();
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (diag[i], diag[j]);
            let g = a.gcd(&b);
            let l = (a / g).checked_mul(b).ok_or(Error::Overflow)?;
            diag[i] = g;
            diag[j] = l;
        }
    }
    Ok(diag)
}

/// Homology of a complex. Mod-2 Betti numbers are always computed; integer
/// ranks and torsion are added for [`Coefficients::Integer`].
pub fn homology<S: Scalar>(complex: &StringComplex<S>, coefficients: Coefficients) -> Result<HomologyResult> {
    let Some(top) = complex.dim() else {
        return Ok(HomologyResult {
            betti_mod2: vec![],
            integer: (coefficients == Coefficients::Integer)
                .then(|| IntegerHomology { ranks: vec![], torsion: vec![] }),
        });
    };
    let by_dim: Vec<Vec<&Vec<usize>>> = (0..=top).map(|d| complex.simplices(d)).collect();
    let counts: Vec<usize> = by_dim.iter().map(Vec::len).collect();
    // boundary[d] maps dimension d+1 to dimension d
    let boundaries: Vec<Vec<Vec<(usize, i64)>>> = (0..top)
        .into_par_iter()
        .map(|d| {
            let index: HashMap<&[usize], usize> =
                by_dim[d].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
            boundary_columns(&index, &by_dim[d + 1])
        })
        .collect();

    let ranks2: Vec<usize> = boundaries
        .par_iter()
        .enumerate()
        .map(|(d, cols)| {
            let cols: Vec<Vec<usize>> = cols.iter().map(|c| c.iter().map(|e| e.0).collect()).collect();
            gf2_rank(counts[d], &cols)
        })
        .collect();
    let betti = |ranks: &[usize], k: usize| {
        let into = if k == 0 { 0 } else { ranks[k - 1] };
        let out = ranks.get(k).copied().unwrap_or(0);
        counts[k] - into - out
    };
    let betti_mod2 = (0..=top).map(|k| betti(&ranks2, k)).collect();

    let integer = if coefficients == Coefficients::Integer {
        let invariants: Vec<Vec<u64>> = boundaries
            .par_iter()
            .enumerate()
            .map(|(d, cols)| {
                let mut dense = vec![vec![0i64; cols.len()]; counts[d]];
                for (j, col) in cols.iter().enumerate() {
                    for &(i, sign) in col {
                        dense[i][j] = sign;
                    }
                }
                smith_invariants(dense)
            })
            .collect::<Result<_>>()?;
        let ranks_z: Vec<usize> = invariants.iter().map(Vec::len).collect();
        let ranks = (0..=top).map(|k| betti(&ranks_z, k)).collect();
        let torsion = (0..=top)
            .map(|k| {
                invariants
                    .get(k)
                    .map(|inv| inv.iter().copied().filter(|&v| v > 1).collect())
                    .unwrap_or_default()
            })
            .collect();
        Some(IntegerHomology { ranks, torsion })
    } else {
        None
    };
    Ok(HomologyResult { betti_mod2, integer })
}
