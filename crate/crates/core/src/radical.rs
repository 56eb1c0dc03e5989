//! Jacobson radical of the dual algebra, the coradical, and the simple
//! subcoalgebras.
//!
//! The radical of `C*` is computed as the radical of the trace bilinear form
//! of the left regular representation, `B(f, g) = tr(L_{f·g})`. That
//! characterization is exact in characteristic zero and over a prime field
//! whose characteristic exceeds the algebra dimension, which is why prime
//! moduli `p ≤ dim` are refused rather than risked.
//!
//! Simple subcoalgebras come from the block decomposition of the semisimple
//! quotient `Ā = C*/J`: the center of `Ā` is split into one-dimensional
//! pieces by extracting base-field roots of squarefree minimal polynomials
//! of its basis elements, the resulting central primitive idempotents carve
//! `Ā` into simple two-sided ideals, and each block `B_t` is recovered
//! inside the coradical as the joint kernel of the other blocks (any linear
//! lift of a block functional works, because the radical annihilates the
//! coradical). A center that does not split over the base field is reported
//! as unsupported together with the offending polynomial factor.

use crate::coalgebra::{Coalgebra, Subcoalgebra};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::matrix::Matrix;
use crate::poly::{base_field_roots, Poly};
use crate::subspace::{kernel_of, Subspace};

/// Radical of the trace form on `C*`, as a subspace of dual coordinates.
///
/// The Gram matrix has a closed sparse form: with `τ_i = Σ{coeff : entries
/// with source = right, left = i}` (the trace functional of left
/// multiplication), `G[i][j] = Σ coeff·τ_source` over entries with
/// `left = i, right = j`.
pub fn jacobson_radical(c: &Coalgebra) -> Result<Subspace> {
    check_field_constraint(c)?;
    let field = c.field();
    let n = c.dim();
    let mut tau = vec![field.zero(); n];
    for e in c.delta_entries() {
        if e.source == e.right {
            tau[e.left] = &tau[e.left] + &e.coeff;
        }
    }
    let mut gram = Matrix::zero(field, n, n);
    for e in c.delta_entries() {
        if tau[e.source].is_zero() {
            continue;
        }
        let add = &*gram.get(e.left, e.right) + &(&e.coeff * &tau[e.source]);
        gram.set(e.left, e.right, add);
    }
    let radical = kernel_of(&gram);
    verify_radical(c, &radical)?;
    Ok(radical)
}

/// The returned space must be a nilpotent two-sided ideal; anything else
/// means the arithmetic above is broken.
fn verify_radical(c: &Coalgebra, j: &Subspace) -> Result<()> {
    let n = c.dim();
    for f in j.basis_rows() {
        for k in 0..n {
            let ek = crate::coalgebra::basis_vec(c.field(), n, k);
            if !j.contains_vector(&c.convolve(&ek, f)) || !j.contains_vector(&c.convolve(f, &ek))
            {
                return Err(Error::Internal(
                    "trace-form radical is not a two-sided ideal".into(),
                ));
            }
        }
    }
    let mut power = j.clone();
    for _ in 0..=n {
        if power.is_zero() {
            return Ok(());
        }
        let next = c.ideal_product(&power, j);
        if next == power {
            return Err(Error::Internal(
                "trace-form radical is not nilpotent".into(),
            ));
        }
        power = next;
    }
    Err(Error::Internal("radical powers failed to vanish".into()))
}

fn check_field_constraint(c: &Coalgebra) -> Result<()> {
    if let Field::Prime(p) = c.field() {
        if p <= c.dim() as u64 {
            return Err(Error::Unsupported(format!(
                "radical computation by the trace form needs the characteristic to exceed the \
                 dual algebra dimension; got p = {p} with dimension {}",
                c.dim()
            )));
        }
    }
    Ok(())
}

/// The coradical `C_0 = J^⊥`, validated as a subcoalgebra.
pub fn coradical(c: &Coalgebra) -> Result<Subcoalgebra> {
    let j = jacobson_radical(c)?;
    let space = j.annihilator();
    if space.annihilator() != j {
        return Err(Error::Internal("coradical annihilator does not recover the radical".into()));
    }
    c.subcoalgebra(space)
        .map_err(|_| Error::Internal("coradical is not a subcoalgebra".into()))
}

/// The simple subcoalgebras of `C`, sorted canonically. Refuses (with the
/// offending factor) when the semisimple quotient does not split over the
/// base field.
pub fn simple_subcoalgebras(c: &Coalgebra) -> Result<Vec<Subcoalgebra>> {
    let j = jacobson_radical(c)?;
    if c.dim() == 0 {
        return Ok(Vec::new());
    }
    let quotient = QuotientAlgebra::new(c, &j);
    let idempotents = quotient.central_primitive_idempotents()?;

    // Simple two-sided ideals of the quotient: B_t = ê_t·Ā.
    let blocks: Vec<Subspace> = idempotents
        .iter()
        .map(|e| {
            let rows = (0..quotient.dim)
                .map(|s| quotient.mul(e, &quotient.basis_elem(s)))
                .collect();
            Subspace::from_rows(c.field(), quotient.dim, rows)
        })
        .collect();
    if blocks.iter().map(Subspace::dim).sum::<usize>() != quotient.dim {
        return Err(Error::Internal("semisimple blocks do not fill the quotient".into()));
    }

    // D_t kills every other block and the radical; its dimension must come
    // out equal to the block's.
    let coradical_space = j.annihilator();
    let mut simples = Vec::new();
    for (t, block) in blocks.iter().enumerate() {
        let mut rows: Vec<Vec<FieldElem>> = j.basis_rows().map(|r| r.to_vec()).collect();
        for (u, other) in blocks.iter().enumerate() {
            if u == t {
                continue;
            }
            rows.extend(other.basis_rows().map(|r| quotient.lift(r)));
        }
        let killers = Subspace::from_rows(c.field(), c.dim(), rows);
        let d = killers.annihilator();
        if d.dim() != block.dim() || !coradical_space.contains(&d) {
            return Err(Error::Internal(
                "recovered simple subcoalgebra has the wrong dimension".into(),
            ));
        }
        let sub = c
            .subcoalgebra(d)
            .map_err(|_| Error::Internal("simple block is not a subcoalgebra".into()))?;
        simples.push(sub);
    }

    // The simples must decompose the coradical.
    let mut sum = Subspace::zero(c.field(), c.dim());
    for s in &simples {
        if !sum.intersect(s.space()).is_zero() {
            return Err(Error::Internal("simple subcoalgebras overlap".into()));
        }
        sum = sum.sum(s.space());
    }
    if sum != coradical_space {
        return Err(Error::Internal("simple subcoalgebras do not span the coradical".into()));
    }
    simples.sort();
    Ok(simples)
}

/// `Ā = C*/J` in explicit coordinates: the complement of `J` spanned by the
/// standard functionals at the non-pivot columns of `J`'s canonical basis.
struct QuotientAlgebra<'a> {
    c: &'a Coalgebra,
    j: &'a Subspace,
    dim: usize,
    free_cols: Vec<usize>,
}

impl<'a> QuotientAlgebra<'a> {
    fn new(c: &'a Coalgebra, j: &'a Subspace) -> QuotientAlgebra<'a> {
        let pivots: std::collections::BTreeSet<usize> = j.pivots().into_iter().collect();
        let free_cols: Vec<usize> = (0..c.dim()).filter(|k| !pivots.contains(k)).collect();
        QuotientAlgebra { c, j, dim: free_cols.len(), free_cols }
    }

    fn basis_elem(&self, t: usize) -> Vec<FieldElem> {
        crate::coalgebra::basis_vec(self.c.field(), self.dim, t)
    }

    /// Quotient coordinates of a functional: reduce modulo `J`, then read
    /// the residual at the complement positions.
    fn project(&self, f: &[FieldElem]) -> Vec<FieldElem> {
        let reduced = self.j.reduce_vector(f);
        self.free_cols.iter().map(|&k| reduced[k].clone()).collect()
    }

    /// The chosen linear section of the projection.
    fn lift(&self, a: &[FieldElem]) -> Vec<FieldElem> {
        let mut out = vec![self.c.field().zero(); self.c.dim()];
        for (t, &k) in self.free_cols.iter().enumerate() {
            out[k] = a[t].clone();
        }
        out
    }

    fn mul(&self, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
        self.project(&self.c.convolve(&self.lift(a), &self.lift(b)))
    }

    fn unit(&self) -> Vec<FieldElem> {
        self.project(&self.c.dual_unit())
    }

    /// Center of the quotient: solutions of `z·ā_t = ā_t·z` for all `t`.
    fn center(&self) -> Subspace {
        let field = self.c.field();
        let mut rows = Matrix::zero(field, 0, self.dim);
        for t in 0..self.dim {
            let at = self.basis_elem(t);
            let mut commutator = Matrix::zero(field, self.dim, self.dim);
            for s in 0..self.dim {
                let as_ = self.basis_elem(s);
                let left = self.mul(&as_, &at);
                let right = self.mul(&at, &as_);
                for r in 0..self.dim {
                    commutator.set(r, s, &left[r] - &right[r]);
                }
            }
            rows = rows.vstack(&commutator);
        }
        kernel_of(&rows)
    }

    /// Splits the unit into central primitive idempotents by refining along
    /// each center basis element: roots of the squarefree minimal polynomial
    /// of `z` on a block yield the interpolation idempotents of its
    /// eigencomponents. After one pass every center element is scalar on
    /// every block, so the blocks are primitive.
    fn central_primitive_idempotents(&self) -> Result<Vec<Vec<FieldElem>>> {
        let field = self.c.field();
        if self.dim == 0 {
            return Err(Error::Internal("semisimple quotient of a nonzero coalgebra is zero".into()));
        }
        let center = self.center();
        let mut blocks = vec![self.unit()];
        for z in center.basis_rows() {
            let mut refined = Vec::new();
            for e in &blocks {
                let w = self.mul(z, e);
                let minimal = self.minimal_polynomial_on_block(&w, e, &center);
                let squarefree = minimal.squarefree_part();
                let (roots, leftover) = base_field_roots(&squarefree)?;
                if leftover.degree().unwrap_or(0) > 0 {
                    return Err(Error::Unsupported(format!(
                        "semisimple quotient does not split over the base field; offending \
                         minimal-polynomial factor: {leftover}"
                    )));
                }
                if roots.len() <= 1 {
                    refined.push(e.clone());
                    continue;
                }
                for lambda in &roots {
                    // Lagrange idempotent: e·Π_{μ≠λ} (w − μe)/(λ − μ).
                    let mut u = e.clone();
                    for mu in roots.iter().filter(|mu| *mu != lambda) {
                        let scale = (&(lambda - mu)).inv().expect("distinct roots");
                        let factor: Vec<FieldElem> = w
                            .iter()
                            .zip(e.iter())
                            .map(|(wi, ei)| &(wi - &(mu * ei)) * &scale)
                            .collect();
                        u = self.mul(&u, &factor);
                    }
                    if self.mul(&u, &u) != u {
                        return Err(Error::Internal("block splitter produced a non-idempotent".into()));
                    }
                    refined.push(u);
                }
            }
            blocks = refined;
        }

        // The refined family must still sum to the unit and be orthogonal.
        let mut total = vec![field.zero(); self.dim];
        for e in &blocks {
            for (t, v) in total.iter_mut().zip(e.iter()) {
                *t = &*t + v;
            }
        }
        if total != self.unit() {
            return Err(Error::Internal("central idempotents do not sum to the unit".into()));
        }
        for (i, a) in blocks.iter().enumerate() {
            for b in blocks.iter().skip(i + 1) {
                if self.mul(a, b).iter().any(|v| !v.is_zero()) {
                    return Err(Error::Internal("central idempotents are not orthogonal".into()));
                }
            }
        }
        Ok(blocks)
    }

    /// Minimal polynomial of `w` inside the commutative algebra `e·Z` (with
    /// unit `e`), found as the first linear dependence among its powers.
    fn minimal_polynomial_on_block(
        &self,
        w: &[FieldElem],
        e: &[FieldElem],
        center: &Subspace,
    ) -> Poly {
        let field = self.c.field();
        let block_dim = {
            let rows = center.basis_rows().map(|z| self.mul(e, z)).collect();
            Subspace::from_rows(field, self.dim, rows).dim()
        };
        let mut powers = vec![e.to_vec()];
        let mut current = e.to_vec();
        for _ in 0..=block_dim {
            current = self.mul(&current, w);
            powers.push(current.clone());
            let stacked = Matrix::from_rows(field, self.dim, powers.clone());
            let dependence = kernel_of(&stacked.transpose());
            if dependence.is_zero() {
                continue;
            }
            let coeffs = dependence.basis().row_vec(0);
            let lead = coeffs.last().unwrap();
            if lead.is_zero() {
                // Dependence among earlier powers cannot happen at the first
                // detection; normalize defensively anyway.
                continue;
            }
            let inv = lead.inv().unwrap();
            return Poly::new(field, coeffs.iter().map(|c| c * &inv).collect());
        }
        unreachable!("powers of an element in a {block_dim}-dimensional algebra must repeat")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::coalgebra::DeltaEntry;
    use crate::matrix::matrix_from_i64;

    fn q() -> Field {
        Field::Rationals
    }

    fn arrow() -> Coalgebra {
        builders::path_coalgebra(q(), &builders::QuiverSpec::new(2, vec![(0, 1)], 1)).unwrap()
    }

    fn span(c: &Coalgebra, rows: &[&[i64]]) -> Subspace {
        Subspace::from_matrix(matrix_from_i64(c.field(), c.dim(), rows))
    }

    /// The coalgebra whose dual is `k[t]/(t² − 2)`: simple but split only
    /// when 2 is a square in the base field.
    fn quadratic_field_dual(field: Field) -> Coalgebra {
        let two = field.from_i64(2);
        Coalgebra::new(
            field,
            2,
            vec![
                DeltaEntry { source: 0, left: 0, right: 0, coeff: field.one() },
                DeltaEntry { source: 0, left: 1, right: 1, coeff: two },
                DeltaEntry { source: 1, left: 0, right: 1, coeff: field.one() },
                DeltaEntry { source: 1, left: 1, right: 0, coeff: field.one() },
            ],
            vec![field.one(), field.zero()],
        )
        .unwrap()
    }

    #[test]
    fn radical_of_the_arrow_coalgebra_is_the_arrow_functional() {
        let c = arrow();
        let j = jacobson_radical(&c).unwrap();
        assert_eq!(j, span(&c, &[&[0, 0, 1]]));
        let cor = coradical(&c).unwrap();
        assert_eq!(cor.space(), &span(&c, &[&[1, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn simples_of_the_arrow_coalgebra_are_the_vertex_lines() {
        let c = arrow();
        let simples = simple_subcoalgebras(&c).unwrap();
        let spaces: Vec<_> = simples.iter().map(|s| s.space().clone()).collect();
        assert_eq!(spaces, vec![span(&c, &[&[0, 1, 0]]), span(&c, &[&[1, 0, 0]])]);
    }

    #[test]
    fn cosemisimple_instances_have_zero_radical() {
        for c in [builders::grouplike(q(), 3).unwrap(), builders::matrix_coalgebra(q(), 2).unwrap()] {
            let j = jacobson_radical(&c).unwrap();
            assert!(j.is_zero());
            assert!(coradical(&c).unwrap().space().is_full());
        }
    }

    #[test]
    fn grouplike_simples_are_the_coordinate_lines() {
        let c = builders::grouplike(q(), 3).unwrap();
        let simples = simple_subcoalgebras(&c).unwrap();
        assert_eq!(simples.len(), 3);
        for s in &simples {
            assert_eq!(s.dim(), 1);
        }
    }

    #[test]
    fn matrix_coalgebra_is_one_simple_block() {
        let c = builders::matrix_coalgebra(q(), 2).unwrap();
        let simples = simple_subcoalgebras(&c).unwrap();
        assert_eq!(simples.len(), 1);
        assert!(simples[0].space().is_full());
    }

    #[test]
    fn splitting_depends_on_the_base_field() {
        // Over Q and over F_5, 2 is not a square: refuse with the factor.
        let over_q = simple_subcoalgebras(&quadratic_field_dual(q()));
        assert!(matches!(over_q, Err(Error::Unsupported(_))), "got {over_q:?}");
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(
            simple_subcoalgebras(&quadratic_field_dual(f5)),
            Err(Error::Unsupported(_))
        ));
        // Over F_7, 3² = 2: two one-dimensional simples.
        let f7 = Field::prime(7).unwrap();
        let simples = simple_subcoalgebras(&quadratic_field_dual(f7)).unwrap();
        assert_eq!(simples.len(), 2);
        assert!(simples.iter().all(|s| s.dim() == 1));
        // The radical itself is still available over Q: the dual is a field.
        assert!(jacobson_radical(&quadratic_field_dual(q())).unwrap().is_zero());
    }

    #[test]
    fn small_characteristic_is_refused() {
        let f2 = Field::prime(2).unwrap();
        let c = builders::grouplike(f2, 3).unwrap();
        assert!(matches!(jacobson_radical(&c), Err(Error::Unsupported(_))));
        let f101 = Field::prime(101).unwrap();
        let c = builders::grouplike(f101, 3).unwrap();
        assert!(jacobson_radical(&c).unwrap().is_zero());
    }

    #[test]
    fn radical_respects_basis_changes() {
        let c = arrow();
        let p = matrix_from_i64(q(), 3, &[&[1, 0, 1], &[0, 1, -1], &[0, 0, 1]]);
        let twisted = c.change_basis(&p).unwrap();
        let j = jacobson_radical(&twisted).unwrap();
        assert_eq!(j.dim(), 1);
        let cor = coradical(&twisted).unwrap();
        // The coradical transports along the twist.
        let expected = Coalgebra::transport_subspace(&p, &span(&c, &[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(cor.space(), &expected);
    }

    #[test]
    fn zero_coalgebra_has_no_simples() {
        let c = Coalgebra::new(q(), 0, vec![], vec![]).unwrap();
        assert!(jacobson_radical(&c).unwrap().is_zero());
        assert!(simple_subcoalgebras(&c).unwrap().is_empty());
    }
}
