//! Subspaces of a fixed coordinate space, held in a canonical form.
//!
//! A `Subspace` stores the reduced row echelon basis of its span: pivot
//! columns strictly increasing, pivots equal to one, pivot columns zero
//! elsewhere, no zero rows. Two subspaces are equal as sets of vectors if
//! and only if they are structurally equal, so set-level reasoning all
//! through the engine is plain `==`.
//!
//! The dual space is identified with the same coordinate space through the
//! dual basis; `annihilator` flips between a subspace and the functionals
//! vanishing on it without any bookkeeping about which side it is on.

use crate::field::{Field, FieldElem};
use crate::matrix::Matrix;
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Matrix, // rref, no zero rows
}

impl Subspace {
    /// Canonicalizes the span of the given rows.
    pub fn from_rows(field: Field, ambient: usize, rows: Vec<Vec<FieldElem>>) -> Subspace {
        Subspace::from_matrix(Matrix::from_rows(field, ambient, rows))
    }

    /// Canonicalizes the row space of a matrix.
    pub fn from_matrix(m: Matrix) -> Subspace {
        let ambient = m.cols();
        let field = m.field();
        let (red, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|r| red.row_vec(r)).collect();
        Subspace { field, ambient, basis: Matrix::from_rows(field, ambient, rows) }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Matrix::zero(field, 0, ambient) }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Matrix::identity(field, ambient) }
    }

    pub fn span_of_vector(field: Field, v: Vec<FieldElem>) -> Subspace {
        let ambient = v.len();
        Subspace::from_rows(field, ambient, vec![v])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[FieldElem]> {
        self.basis.row_iter()
    }

    /// Pivot column of each basis row (strictly increasing).
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .row_iter()
            .map(|row| row.iter().position(|e| !e.is_zero()).expect("no zero rows in basis"))
            .collect()
    }

    /// Residual of `v` after eliminating against the basis. Zero iff `v`
    /// lies in the subspace; otherwise the result is `v` minus its
    /// projection along the pivot coordinates.
    pub fn reduce_vector(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut out = v.to_vec();
        for (row, pivot) in self.basis.row_iter().zip(self.pivots()) {
            let coeff = out[pivot].clone();
            if coeff.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(row.iter()) {
                if !b.is_zero() {
                    *o = &*o - &(&coeff * b);
                }
            }
        }
        out
    }

    /// Coordinates of `v` in the canonical basis; `None` if `v` is outside.
    /// Because the basis is rref, the coordinate along each basis vector is
    /// just the entry of `v` at that vector's pivot column.
    pub fn coordinates_of(&self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots().iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_vector(&self, v: &[FieldElem]) -> bool {
        self.reduce_vector(v).iter().all(|e| e.is_zero())
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        other.basis_rows().all(|row| self.contains_vector(row))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        Subspace::from_matrix(self.basis.vstack(&other.basis))
    }

    /// Intersection via the kernel of the stacked coordinate system: a
    /// vector in both spans is `Aᵀu = Bᵀv`, so solutions `(u, v)` of
    /// `[Aᵀ | -Bᵀ]` parametrize the intersection through `Aᵀu`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let at = self.basis.transpose();
        let bt_neg = {
            let mut m = other.basis.transpose();
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let v = -&*m.get(r, c);
                    m.set(r, c, v);
                }
            }
            m
        };
        let stacked = at.hstack(&bt_neg);
        let ker = kernel_of(&stacked);
        let rows = ker
            .basis_rows()
            .map(|uv| at.apply(&uv[..self.dim()]))
            .collect();
        Subspace::from_rows(self.field, self.ambient, rows)
    }

    /// Functionals vanishing on the subspace (or, read the other way,
    /// vectors annihilated by a space of functionals). Dimensions are
    /// complementary: `dim + dim^⊥ = ambient`.
    pub fn annihilator(&self) -> Subspace {
        kernel_of(&self.basis)
    }

    /// Lexicographically smallest canonical basis vector; used as a
    /// deterministic sort key for collections of subspaces. `None` for the
    /// zero subspace.
    pub fn lex_min_basis_vector(&self) -> Option<Vec<FieldElem>> {
        self.basis_rows().map(|r| r.to_vec()).min_by(compare_vectors)
    }
}

/// Deterministic total order: by ambient, then dimension, then basis rows
/// lexicographically. Structural, so equal subspaces compare equal.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| {
                for (a, b) in self.basis_rows().zip(other.basis_rows()) {
                    let ord = compare_vectors(&a.to_vec(), &b.to_vec());
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn compare_vectors(a: &Vec<FieldElem>, b: &Vec<FieldElem>) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        let ord = x.cmp(y);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    a.len().cmp(&b.len())
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subspace of k^{} with basis rows ", self.ambient)?;
        write!(f, "{:?}", self.basis_rows().map(|r| {
            r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
        }).collect::<Vec<_>>())
    }
}

/// Null space of a matrix, in canonical form. For each free column the
/// standard construction yields one spanning vector; the constructor then
/// re-canonicalizes.
pub fn kernel_of(m: &Matrix) -> Subspace {
    let field = m.field();
    let n = m.cols();
    let (red, pivots) = m.rref();
    let mut rows = Vec::new();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; n];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red.get(r, free);
        }
        rows.push(v);
    }
    Subspace::from_rows(field, n, rows)
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::Rationals),
            Just(Field::Prime(7)),
            Just(Field::Prime(101)),
        ]
    }

    /// Random low-dimensional subspaces with small integer generators.
    fn arb_space(ambient: usize) -> impl Strategy<Value = Subspace> {
        arb_spaces(ambient, 1).prop_map(|mut v| v.pop().unwrap())
    }

    /// Several subspaces drawn over one shared field.
    fn arb_spaces(ambient: usize, count: usize) -> impl Strategy<Value = Vec<Subspace>> {
        (arb_field(), proptest::collection::vec(-3i64..=3, ambient * 3 * count)).prop_map(
            move |(field, ints)| {
                ints.chunks(ambient * 3)
                    .map(|block| {
                        let rows = block
                            .chunks(ambient)
                            .map(|chunk| chunk.iter().map(|&v| field.from_i64(v)).collect())
                            .collect();
                        Subspace::from_rows(field, ambient, rows)
                    })
                    .collect()
            },
        )
    }

    proptest! {
        #[test]
        fn double_annihilator_is_identity(s in arb_space(5)) {
            prop_assert_eq!(s.annihilator().annihilator(), s);
        }

        #[test]
        fn annihilator_dimension_is_complementary(s in arb_space(5)) {
            prop_assert_eq!(s.dim() + s.annihilator().dim(), 5);
        }

        #[test]
        fn sum_intersection_dimension_law(pair in arb_spaces(4, 2)) {
            let (a, b) = (&pair[0], &pair[1]);
            let sum = a.sum(b);
            let int = a.intersect(b);
            prop_assert_eq!(sum.dim() + int.dim(), a.dim() + b.dim());
            prop_assert!(sum.contains(a) && sum.contains(b));
            prop_assert!(a.contains(&int) && b.contains(&int));
        }

        #[test]
        fn modular_law(triple in arb_spaces(4, 3)) {
            let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
            // a ⊆ c  ⟹  a + (b ∩ c) = (a + b) ∩ c; force a ⊆ c by intersecting.
            let a = a.intersect(c);
            let lhs = a.sum(&b.intersect(c));
            let rhs = a.sum(b).intersect(c);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn annihilator_swaps_sum_and_intersection(pair in arb_spaces(4, 2)) {
            let (a, b) = (&pair[0], &pair[1]);
            prop_assert_eq!(a.sum(b).annihilator(), a.annihilator().intersect(&b.annihilator()));
            prop_assert_eq!(a.intersect(b).annihilator(), a.annihilator().sum(&b.annihilator()));
        }

        #[test]
        fn canonical_form_is_stable(s in arb_space(5)) {
            // Re-feeding the canonical basis reproduces the same value, and
            // scaling the generators does not change it.
            let again = Subspace::from_rows(
                s.field(), s.ambient(),
                s.basis_rows().map(|r| r.to_vec()).collect());
            prop_assert_eq!(&again, &s);
            let two = s.field().from_i64(2);
            let scaled = Subspace::from_rows(
                s.field(), s.ambient(),
                s.basis_rows().map(|r| r.iter().map(|e| e * &two).collect()).collect());
            prop_assert_eq!(&scaled, &s);
        }

        #[test]
        fn reduce_vector_is_a_projection_residual(s in arb_space(4), ints in proptest::collection::vec(-3i64..=3, 4)) {
            let f = s.field();
            let v: Vec<_> = ints.iter().map(|&i| f.from_i64(i)).collect();
            let red = s.reduce_vector(&v);
            // v - red lies in s, and red reduces to itself.
            let diff: Vec<_> = v.iter().zip(red.iter()).map(|(a, b)| a - b).collect();
            prop_assert!(s.contains_vector(&diff));
            prop_assert_eq!(s.reduce_vector(&red), red.clone());
        }
    }
}
