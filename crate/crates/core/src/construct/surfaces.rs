//! Small admissible triangulations of common surfaces.

use super::Triangulation2D;
use crate::error::{Error, Result};

pub const SURFACE_NAMES: [&str; 8] =
    ["sphere", "torus", "klein", "rp2", "disk", "cylinder", "moebius", "two-spheres"];

fn tetrahedron_boundary() -> Result<Triangulation2D> {
    Triangulation2D::numbered(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
}

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
fn torus() -> Result<Triangulation2D> {
    let tris: Vec<[usize; 3]> = (0..7)
        .flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]])
        .collect();
    Triangulation2D::numbered(7, &tris)
}

/// A 3x3 grid with the vertical sides glued straight and the horizontal sides
/// glued with a flip.
fn klein_bottle() -> Result<Triangulation2D> {
    const N: i64 = 3;
    let vid = |mut i: i64, mut j: i64| -> usize {
        while j >= N {
            j -= N;
            i = -i;
        }
        (i.rem_euclid(N) * N + j) as usize
    };
    let mut tris = Vec::new();
    for i in 0..N {
        for j in 0..N {
            let (a, b, c, d) = (vid(i, j), vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1));
            tris.push([a, b, d]);
            tris.push([a, c, d]);
        }
    }
    Triangulation2D::numbered((N * N) as usize, &tris)
}

/// The 6-vertex projective plane (antipodal quotient of the icosahedron).
fn projective_plane() -> Result<Triangulation2D> {
    Triangulation2D::numbered(
        6,
        &[
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ],
    )
}

fn cylinder() -> Result<Triangulation2D> {
    let tris: Vec<[usize; 3]> = (0..3)
        .flat_map(|i| {
            let j = (i + 1) % 3;
            [[i, j, 3 + i], [j, 3 + i, 3 + j]]
        })
        .collect();
    Triangulation2D::numbered(6, &tris)
}

/// The 5-vertex Moebius strip: triangles {i, i+1, i+2} mod 5.
fn moebius() -> Result<Triangulation2D> {
    let tris: Vec<[usize; 3]> = (0..5).map(|i| [i, (i + 1) % 5, (i + 2) % 5]).collect();
    Triangulation2D::numbered(5, &tris)
}

/// A small admissible triangulation of a named surface; see [`SURFACE_NAMES`].
pub fn surface_library(name: &str) -> Result<Triangulation2D> {
    match name {
        "sphere" => tetrahedron_boundary(),
        "torus" => torus(),
        "klein" => klein_bottle(),
        "rp2" => projective_plane(),
        "disk" => Triangulation2D::numbered(3, &[[0, 1, 2]]),
        "cylinder" => cylinder(),
        "moebius" => moebius(),
        "two-spheres" => {
            let s = tetrahedron_boundary()?;
            Ok(s.disjoint_union(&s))
        }
        other => Err(Error::UnknownSurface(other.to_string())),
    }
}
