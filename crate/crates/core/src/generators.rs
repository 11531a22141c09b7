//! Named complexes: Möbius' torus, the vertex-minimal `3 × k` series and the
//! combinatorial tube around a `k`-gon.

use crate::complex::SimplicialTorus;
use crate::error::{Error, Result};

/// Möbius' 7-vertex torus: `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn moebius_torus() -> SimplicialTorus {
    circulant_torus(7)
}

fn circulant_torus(n: usize) -> SimplicialTorus {
    let faces: Vec<[usize; 3]> = (0..n)
        .flat_map(|i| [[i, (i + 1) % n, (i + 3) % n], [i, (i + 2) % n, (i + 3) % n]])
        .collect();
    SimplicialTorus::new(n, &faces).expect("circulant torus is valid for n >= 7")
}

/// The unique torus of type `3 × k` on `3k − 2` vertices.
///
/// Cut open along the empty triangle `1 2 3`, it consists of three strips over
/// the paths `1-3'`, `2-1'` and `3-2'` (0-based here as `0, 1, 2`),
/// glued with the shift `3' ≡ 3, 1' ≡ 1, 2' ≡ 2`, with the path from `1`
/// carrying the one extra subdivision vertex `3k − 2`. In these labels every
/// strip vertex `j` is followed by `j + 3` (mod `3k − 2`), so the complex is the
/// circulant triangulation with faces `{i, i+1, i+3}` and `{i, i+2, i+3}`.
pub fn minimal_torus_3k(k: usize) -> Result<SimplicialTorus> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    Ok(circulant_torus(3 * k - 2))
}

/// The cyclic symmetry `1 → 4 → 7 → …` of [`minimal_torus_3k`] as a 0-based
/// permutation `perm[v]`.
pub fn minimal_torus_symmetry(k: usize) -> Vec<usize> {
    let n = 3 * k - 2;
    (0..n).map(|v| (v + 3) % n).collect()
}

/// The vertex sequence `1, 4, 7, …, 3k−2, 3, 6, …, 3k−3, 2, 5, …, 3k−4`
/// (0-based), a Hamiltonian cycle of [`minimal_torus_3k`].
pub fn minimal_torus_hamiltonian(k: usize) -> Vec<usize> {
    let n = 3 * k - 2;
    let mut seq: Vec<usize> = (0..n).step_by(3).collect();
    seq.extend((2..n).step_by(3));
    seq.extend((1..n).step_by(3));
    seq
}

/// Triangulation of one prism between consecutive rings of a tube.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrismPattern {
    /// Ring vertex `j` is joined to vertex `(j + shift) % 3` of the next ring.
    pub shift: usize,
    /// For side quad `j`, `true` uses the diagonal `a_j-b_{j+1}`, `false`
    /// the diagonal `a_{j+1}-b_j`.
    pub diagonals: [bool; 3],
}

impl Default for PrismPattern {
    fn default() -> Self {
        Self { shift: 0, diagonals: [true; 3] }
    }
}

/// Tube over a `k`-gon: ring `i` has vertices `3i, 3i+1, 3i+2`; prism `i`
/// joins ring `i` to ring `i + 1 mod k`.
pub fn tube_complex_with(k: usize, prisms: &[PrismPattern]) -> Result<SimplicialTorus> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    assert_eq!(prisms.len(), k, "one pattern per prism");
    let mut faces = Vec::with_capacity(6 * k);
    for (i, p) in prisms.iter().enumerate() {
        let next = (i + 1) % k;
        let a = |j: usize| 3 * i + j % 3;
        let b = |j: usize| 3 * next + (j + p.shift) % 3;
        for j in 0..3 {
            if p.diagonals[j] {
                faces.push([a(j), a(j + 1), b(j + 1)]);
                faces.push([a(j), b(j + 1), b(j)]);
            } else {
                faces.push([a(j), a(j + 1), b(j)]);
                faces.push([a(j + 1), b(j + 1), b(j)]);
            }
        }
    }
    SimplicialTorus::new(3 * k, &faces)
}

/// The standard tube complex: no twist, diagonals `a_j-b_{j+1}`.
pub fn tube_complex(k: usize) -> Result<SimplicialTorus> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    tube_complex_with(k, &vec![PrismPattern::default(); k])
}

/// The three vertices of ring `i` of a tube complex.
pub fn tube_ring(i: usize) -> [usize; 3] {
    [3 * i, 3 * i + 1, 3 * i + 2]
}
