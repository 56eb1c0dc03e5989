//! Canonical example coalgebras and comodules, plus seeded random basis
//! twists — the corpus generators used throughout the test suite and by the
//! command-line `gen` subcommand.

use std::sync::Arc;

use crate::coalgebra::{Coalgebra, DeltaEntry};
use crate::comodule::{Comodule, RhoEntry};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::rng::Rng;

/// A finite quiver with a path-length cutoff. Paths of length at most
/// `max_len` form the basis of [`path_coalgebra`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverSpec {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
    pub max_len: usize,
}

impl QuiverSpec {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>, max_len: usize) -> QuiverSpec {
        QuiverSpec { vertices, arrows, max_len }
    }
}

/// The grouplike coalgebra on `n` points: `Δ(g_i) = g_i ⊗ g_i`,
/// `ε(g_i) = 1`. Cocommutative, with each coordinate line a simple
/// subcoalgebra.
pub fn grouplike(field: Field, n: usize) -> Result<Coalgebra> {
    if n == 0 {
        return Err(Error::Invalid("a grouplike coalgebra needs at least one point".into()));
    }
    let delta = (0..n)
        .map(|i| DeltaEntry { source: i, left: i, right: i, coeff: field.one() })
        .collect();
    Coalgebra::new(field, n, delta, vec![field.one(); n])
}

/// The comatrix coalgebra of size `n`: basis `e_ij` at index `i·n + j`,
/// `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`. Its dual algebra is the
/// full `n×n` matrix algebra, so the coalgebra is simple.
pub fn matrix_coalgebra(field: Field, n: usize) -> Result<Coalgebra> {
    if n == 0 {
        return Err(Error::Invalid("a comatrix coalgebra needs size at least one".into()));
    }
    let mut delta = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                delta.push(DeltaEntry {
                    source: i * n + j,
                    left: i * n + k,
                    right: k * n + j,
                    coeff: field.one(),
                });
            }
        }
    }
    let mut counit = vec![field.zero(); n * n];
    for i in 0..n {
        counit[i * n + i] = field.one();
    }
    Coalgebra::new(field, n * n, delta, counit)
}

/// Paths of length at most `q.max_len`, grouped by length: first the
/// trivial paths (one per vertex), then arrows in input order, then longer
/// compositions ordered lexicographically by their arrow sequences. Each
/// entry is `(start_vertex, arrow_indices)`.
fn enumerate_paths(q: &QuiverSpec) -> Vec<(usize, Vec<usize>)> {
    let mut paths: Vec<(usize, Vec<usize>)> = (0..q.vertices).map(|v| (v, Vec::new())).collect();
    let mut frontier: Vec<usize> = (0..paths.len()).collect();
    for _ in 0..q.max_len {
        let mut next = Vec::new();
        for &idx in &frontier {
            let (start, seq) = paths[idx].clone();
            let end = seq.last().map_or(start, |&a| q.arrows[a].1);
            for (a, &(src, _)) in q.arrows.iter().enumerate() {
                if src == end {
                    let mut extended = seq.clone();
                    extended.push(a);
                    next.push(paths.len());
                    paths.push((start, extended));
                }
            }
        }
        frontier = next;
    }
    paths
}

/// The path coalgebra of a quiver, truncated at paths of length
/// `q.max_len`. A path splits along its intermediate vertices:
/// `Δ(p) = Σ prefix ⊗ suffix` with trivial paths at the endpoints covering
/// the empty prefix and suffix, and `ε` is the indicator of trivial paths.
/// The truncation is a subcoalgebra of the full path coalgebra, and its
/// coradical is the span of the trivial paths.
pub fn path_coalgebra(field: Field, q: &QuiverSpec) -> Result<Coalgebra> {
    for &(s, t) in &q.arrows {
        if s >= q.vertices || t >= q.vertices {
            return Err(Error::Invalid(format!(
                "arrow ({s}, {t}) leaves the vertex range 0..{}",
                q.vertices
            )));
        }
    }
    let paths = enumerate_paths(q);
    let index_of = |start: usize, seq: &[usize]| -> usize {
        paths
            .iter()
            .position(|(s, p)| *s == start && p == seq)
            .expect("every split of an enumerated path is enumerated")
    };
    let mut delta = Vec::new();
    let mut counit = vec![field.zero(); paths.len()];
    for (source, (start, seq)) in paths.iter().enumerate() {
        if seq.is_empty() {
            counit[source] = field.one();
        }
        for cut in 0..=seq.len() {
            let prefix = &seq[..cut];
            let suffix = &seq[cut..];
            let mid = if cut == 0 { *start } else { q.arrows[seq[cut - 1]].1 };
            delta.push(DeltaEntry {
                source,
                left: index_of(*start, prefix),
                right: index_of(mid, suffix),
                coeff: field.one(),
            });
        }
    }
    Coalgebra::new(field, paths.len(), delta, counit)
}

/// External direct sum: block-diagonal comultiplication and concatenated
/// counits.
pub fn direct_sum_coalgebras(a: &Coalgebra, b: &Coalgebra) -> Result<Coalgebra> {
    if a.field() != b.field() {
        return Err(Error::Invalid("direct sum of coalgebras over different fields".into()));
    }
    let offset = a.dim();
    let mut delta = a.delta_entries().to_vec();
    delta.extend(b.delta_entries().iter().map(|e| DeltaEntry {
        source: e.source + offset,
        left: e.left + offset,
        right: e.right + offset,
        coeff: e.coeff.clone(),
    }));
    let mut counit = a.counit().to_vec();
    counit.extend_from_slice(b.counit());
    Coalgebra::new(a.field(), a.dim() + b.dim(), delta, counit)
}

/// External direct sum of comodules, taken over the direct sum of their
/// coalgebras: the second block's module and coalgebra legs are both
/// shifted past the first block.
pub fn direct_sum_comodules(a: &Comodule, b: &Comodule) -> Result<Comodule> {
    if a.field() != b.field() {
        return Err(Error::Invalid("direct sum of comodules over different fields".into()));
    }
    let parent = direct_sum_coalgebras(a.coalgebra(), b.coalgebra())?;
    let module_offset = a.dim();
    let coalgebra_offset = a.coalgebra().dim();
    let mut rho = a.rho_entries().to_vec();
    rho.extend(b.rho_entries().iter().map(|e| RhoEntry {
        source: e.source + module_offset,
        left: e.left + module_offset,
        right: e.right + coalgebra_offset,
        coeff: e.coeff.clone(),
    }));
    Comodule::new(Arc::new(parent), a.dim() + b.dim(), rho)
}

/// `C` as a right comodule over itself: `ρ = Δ`.
pub fn regular_comodule(c: Arc<Coalgebra>) -> Comodule {
    let rho = c
        .delta_entries()
        .iter()
        .map(|e| RhoEntry { source: e.source, left: e.left, right: e.right, coeff: e.coeff.clone() })
        .collect();
    let dim = c.dim();
    Comodule::new(c, dim, rho).expect("the comultiplication is a valid coaction")
}

/// The standard `n`-dimensional comodule over the comatrix coalgebra:
/// `ρ(v_i) = Σ_j v_j ⊗ e_ji`. Simple and full.
pub fn standard_matrix_comodule(field: Field, n: usize) -> Result<Comodule> {
    let c = matrix_coalgebra(field, n)?;
    let mut rho = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            rho.push(RhoEntry { source: i, left: j, right: j * n + i, coeff: field.one() });
        }
    }
    Comodule::new(Arc::new(c), n, rho)
}

/// A seeded invertible matrix: a product of a unit lower-triangular, a unit
/// upper-triangular, and a permutation matrix, so invertibility holds by
/// construction with no determinant retries.
pub fn random_invertible(field: Field, n: usize, rng: &mut Rng) -> Matrix {
    let mut lower = Matrix::identity(field, n);
    let mut upper = Matrix::identity(field, n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, rng.small_scalar(field));
            upper.set(j, i, rng.small_scalar(field));
        }
    }
    let mut perm = Matrix::zero(field, n, n);
    for (i, p) in rng.permutation(n).into_iter().enumerate() {
        perm.set(i, p, field.one());
    }
    lower.mul(&upper).mul(&perm)
}

/// Re-coordinatizes a coalgebra along a seeded random invertible matrix.
/// Every basis-independent invariant of the result matches the input.
pub fn randomized_basis_coalgebra(c: &Coalgebra, seed: u64) -> Coalgebra {
    let mut rng = Rng::from_seed(seed);
    let p = random_invertible(c.field(), c.dim(), &mut rng);
    c.change_basis(&p).expect("the twist matrix is invertible by construction")
}

/// Re-coordinatizes a comodule on both sides: a seeded module-side change
/// followed by a coalgebra-side change drawn from the same stream.
pub fn randomized_basis_comodule(m: &Comodule, seed: u64) -> Comodule {
    let mut rng = Rng::from_seed(seed);
    let p = random_invertible(m.field(), m.dim(), &mut rng);
    let q = random_invertible(m.field(), m.coalgebra().dim(), &mut rng);
    m.change_module_basis(&p)
        .expect("the module twist is invertible by construction")
        .change_coalgebra_basis(&q)
        .expect("the coalgebra twist is invertible by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::WedgeMode;
    use crate::matrix::matrix_from_i64;
    use crate::radical;
    use crate::subspace::Subspace;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn builder_outputs_satisfy_the_laws() {
        assert!(grouplike(q(), 3).unwrap().check().is_empty());
        assert!(matrix_coalgebra(q(), 2).unwrap().check().is_empty());
        let crossed = QuiverSpec::new(2, vec![(0, 1), (1, 0)], 2);
        assert!(path_coalgebra(q(), &crossed).unwrap().check().is_empty());
        assert!(standard_matrix_comodule(q(), 3).unwrap().check().is_empty());
        let sum = direct_sum_coalgebras(
            &matrix_coalgebra(q(), 2).unwrap(),
            &grouplike(q(), 1).unwrap(),
        )
        .unwrap();
        assert!(sum.check().is_empty());
    }

    #[test]
    fn degenerate_sizes_are_refused() {
        assert!(matches!(grouplike(q(), 0), Err(Error::Invalid(_))));
        assert!(matches!(matrix_coalgebra(q(), 0), Err(Error::Invalid(_))));
        let bad = QuiverSpec::new(1, vec![(0, 1)], 1);
        assert!(matches!(path_coalgebra(q(), &bad), Err(Error::Invalid(_))));
    }

    #[test]
    fn one_point_builders_coincide() {
        let g = grouplike(q(), 1).unwrap();
        let m = matrix_coalgebra(q(), 1).unwrap();
        let p = path_coalgebra(q(), &QuiverSpec::new(1, vec![], 0)).unwrap();
        assert_eq!(g.delta_entries(), m.delta_entries());
        assert_eq!(g.delta_entries(), p.delta_entries());
        assert_eq!(g.counit(), p.counit());
    }

    #[test]
    fn the_arrow_quiver_gives_the_three_dimensional_example() {
        let c = path_coalgebra(q(), &QuiverSpec::new(2, vec![(0, 1)], 1)).unwrap();
        assert_eq!(c.dim(), 3);
        // Δa = x⊗a + a⊗y, so the two mixed wedges of the vertex lines
        // differ: one captures the arrow, the other does not.
        let kx = Subspace::from_matrix(matrix_from_i64(q(), 3, &[&[1, 0, 0]]));
        let ky = Subspace::from_matrix(matrix_from_i64(q(), 3, &[&[0, 1, 0]]));
        let xy = c.wedge(&kx, &ky, WedgeMode::Verify).unwrap();
        let yx = c.wedge(&ky, &kx, WedgeMode::Verify).unwrap();
        assert_eq!(xy.dim(), 3);
        assert_eq!(yx.dim(), 2);
    }

    #[test]
    fn two_way_quiver_is_four_dimensional_with_both_mixed_wedges_noncommuting() {
        let c = path_coalgebra(q(), &QuiverSpec::new(2, vec![(0, 1), (1, 0)], 1)).unwrap();
        assert_eq!(c.dim(), 4);
        let kx = Subspace::from_matrix(matrix_from_i64(q(), 4, &[&[1, 0, 0, 0]]));
        let ky = Subspace::from_matrix(matrix_from_i64(q(), 4, &[&[0, 1, 0, 0]]));
        let xy = c.wedge(&kx, &ky, WedgeMode::Verify).unwrap();
        let yx = c.wedge(&ky, &kx, WedgeMode::Verify).unwrap();
        assert_ne!(xy, yx);
        assert_eq!(xy.dim(), 3);
        assert_eq!(yx.dim(), 3);
    }

    #[test]
    fn path_coradical_filtration_counts_path_lengths() {
        let crossed = QuiverSpec::new(2, vec![(0, 1), (1, 0)], 2);
        let c = path_coalgebra(q(), &crossed).unwrap();
        assert_eq!(c.dim(), 6);
        let coradical = radical::coradical(&c).unwrap();
        // Trivial paths occupy the leading coordinates.
        assert_eq!(
            coradical.space(),
            &Subspace::from_matrix(matrix_from_i64(q(), 6, &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0]]))
        );
        let tower = c.wedge_tower(coradical.space(), WedgeMode::Verify).unwrap();
        let dims: Vec<usize> = tower.steps.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![2, 4, 6]);
        let identity = Matrix::identity(q(), 6);
        for (k, step) in tower.steps.iter().enumerate() {
            // Step k is exactly the span of paths of length ≤ k.
            let rows: Vec<Vec<_>> = (0..2 * k + 2).map(|r| identity.row_vec(r)).collect();
            let expected = Subspace::from_rows(q(), 6, rows);
            assert_eq!(step, &expected);
        }
    }

    #[test]
    fn direct_sum_of_grouplikes_is_a_grouplike() {
        let sum =
            direct_sum_coalgebras(&grouplike(q(), 1).unwrap(), &grouplike(q(), 1).unwrap()).unwrap();
        let g2 = grouplike(q(), 2).unwrap();
        assert_eq!(sum.delta_entries(), g2.delta_entries());
        assert_eq!(sum.counit(), g2.counit());
    }

    #[test]
    fn sum_of_regular_comodules_is_the_regular_comodule_of_the_sum() {
        let a = grouplike(q(), 2).unwrap();
        let b = matrix_coalgebra(q(), 2).unwrap();
        let summed = direct_sum_comodules(
            &regular_comodule(Arc::new(a.clone())),
            &regular_comodule(Arc::new(b.clone())),
        )
        .unwrap();
        let of_sum = regular_comodule(Arc::new(direct_sum_coalgebras(&a, &b).unwrap()));
        assert_eq!(summed.rho_entries(), of_sum.rho_entries());
        assert_eq!(summed.coalgebra().delta_entries(), of_sum.coalgebra().delta_entries());
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let f5 = Field::prime(5).unwrap();
        let a = grouplike(q(), 1).unwrap();
        let b = grouplike(f5, 1).unwrap();
        assert!(matches!(direct_sum_coalgebras(&a, &b), Err(Error::Invalid(_))));
        assert!(matches!(
            direct_sum_comodules(
                &regular_comodule(Arc::new(a)),
                &regular_comodule(Arc::new(b))
            ),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn random_twists_preserve_invariants() {
        let c = grouplike(q(), 3).unwrap();
        for seed in [1, 7, 1729] {
            let twisted = randomized_basis_coalgebra(&c, seed);
            assert!(twisted.check().is_empty());
            assert_eq!(radical::simple_subcoalgebras(&twisted).unwrap().len(), 3);
        }
        let arrow = path_coalgebra(q(), &QuiverSpec::new(2, vec![(0, 1)], 1)).unwrap();
        let m = regular_comodule(Arc::new(arrow));
        for seed in [2, 11, 1729] {
            let twisted = randomized_basis_comodule(&m, seed);
            assert!(twisted.check().is_empty());
            assert_eq!(twisted.socle().unwrap().dim(), 2);
            assert_eq!(twisted.minimal_closed_subcomodules().unwrap().len(), 2);
        }
    }

    #[test]
    fn random_invertible_matrices_invert() {
        let mut rng = Rng::from_seed(99);
        for n in [1, 2, 5, 8] {
            let p = random_invertible(q(), n, &mut rng);
            assert!(p.inverse().is_some());
        }
        let f7 = Field::prime(7).unwrap();
        let p = random_invertible(f7, 6, &mut rng);
        assert!(p.inverse().is_some());
    }
}
