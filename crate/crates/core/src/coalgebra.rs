//! Finite-dimensional coalgebras given by structure constants.
//!
//! A coalgebra here is a based vector space `k^n` with a comultiplication
//! `Δ(e_k) = Σ c_k^{ij} e_i ⊗ e_j` stored sparsely, and a counit vector.
//! Tensor-square coordinates are flattened row-major: `(i, j) ↦ i·n + j`,
//! a convention shared by every module in this crate.
//!
//! The linear dual `C*` is an associative algebra under convolution,
//! `(f·g)(e_k) = Σ c_k^{ij} f(e_i) g(e_j)`, with the counit as unit. All the
//! structure theory downstream — wedges, radicals, components — is driven by
//! moving back and forth across that duality, so this module also provides
//! the wedge of two subspaces along both of its classical descriptions:
//!
//! * the kernel of `C → C/X ⊗ C/Y` composed with `Δ`, and
//! * the annihilator of the ideal product `X^⊥ · Y^⊥` in `C*`.
//!
//! The two agree for arbitrary subspaces; `WedgeMode::Verify` computes both
//! and treats any disagreement as an internal arithmetic failure.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::matrix::Matrix;
use crate::subspace::{kernel_of, Subspace};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// One structure constant: `Δ(e_source) += coeff · e_left ⊗ e_right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaEntry {
    pub source: usize,
    pub left: usize,
    pub right: usize,
    pub coeff: FieldElem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    dim: usize,
    delta: Vec<DeltaEntry>,
    counit: Vec<FieldElem>,
    /// Dense cache: `delta_mats[k][i][j]` is the coefficient of
    /// `e_i ⊗ e_j` in `Δ(e_k)`.
    delta_mats: Vec<Matrix>,
}

/// Which coalgebra law a `check` violation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoalgebraLaw {
    Coassociativity,
    CounitLeft,
    CounitRight,
    DualAssociativity,
}

impl fmt::Display for CoalgebraLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CoalgebraLaw::Coassociativity => "coassociativity",
            CoalgebraLaw::CounitLeft => "left counit law",
            CoalgebraLaw::CounitRight => "right counit law",
            CoalgebraLaw::DualAssociativity => "dual associativity",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone)]
pub struct LawViolation {
    pub law: CoalgebraLaw,
    pub basis_index: usize,
    /// Human-readable rendering of the two unequal tensors, listing only
    /// the coordinates where they differ.
    pub detail: String,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at basis index {}: {}", self.law, self.basis_index, self.detail)
    }
}

/// Whether wedges are computed by one route or by both with a cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WedgeMode {
    /// Dual-ideal formula only.
    Fast,
    /// Both formulas; a mismatch is an internal error.
    #[default]
    Verify,
}

/// An increasing wedge tower `e ⊆ e∧e ⊆ …` together with its stable value.
#[derive(Debug, Clone)]
pub struct WedgeTower {
    /// Strictly increasing distinct steps, starting at the input.
    pub steps: Vec<Subspace>,
    /// First repeated value, i.e. the union of the tower.
    pub limit: Subspace,
}

/// A subspace that has been validated as a subcoalgebra of some coalgebra.
/// Construction goes through [`Coalgebra::subcoalgebra`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subcoalgebra {
    space: Subspace,
}

impl Subcoalgebra {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }
}

impl Coalgebra {
    /// Builds a coalgebra value. Structure constants are validated for index
    /// range, field membership, and duplicate `(source, left, right)` keys;
    /// the coalgebra laws themselves are checked separately by [`check`],
    /// so that invalid instances can still be loaded and diagnosed.
    ///
    /// [`check`]: Coalgebra::check
    pub fn new(
        field: Field,
        dim: usize,
        delta: Vec<DeltaEntry>,
        counit: Vec<FieldElem>,
    ) -> Result<Coalgebra> {
        if counit.len() != dim {
            return Err(Error::Invalid(format!(
                "counit has {} entries for dimension {dim}",
                counit.len()
            )));
        }
        for (i, e) in counit.iter().enumerate() {
            if e.field() != field {
                return Err(Error::Invalid(format!("counit entry {i} is not in the {field}")));
            }
        }
        let mut seen = BTreeSet::new();
        for entry in &delta {
            if entry.source >= dim || entry.left >= dim || entry.right >= dim {
                return Err(Error::Invalid(format!(
                    "delta entry ({}, {}, {}) out of range for dimension {dim}",
                    entry.source, entry.left, entry.right
                )));
            }
            if entry.coeff.field() != field {
                return Err(Error::Invalid(format!(
                    "delta entry ({}, {}, {}) has a coefficient outside the {field}",
                    entry.source, entry.left, entry.right
                )));
            }
            if !seen.insert((entry.source, entry.left, entry.right)) {
                return Err(Error::Invalid(format!(
                    "duplicate delta entry ({}, {}, {})",
                    entry.source, entry.left, entry.right
                )));
            }
        }
        let delta: Vec<DeltaEntry> = delta.into_iter().filter(|e| !e.coeff.is_zero()).collect();
        let mut delta_mats = vec![Matrix::zero(field, dim, dim); dim];
        for e in &delta {
            delta_mats[e.source].set(e.left, e.right, e.coeff.clone());
        }
        Ok(Coalgebra { field, dim, delta, counit, delta_mats })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta_entries(&self) -> &[DeltaEntry] {
        &self.delta
    }

    pub fn counit(&self) -> &[FieldElem] {
        &self.counit
    }

    /// `Δ` of a basis vector as an `n×n` tensor matrix.
    pub fn delta_mat(&self, k: usize) -> &Matrix {
        &self.delta_mats[k]
    }

    /// `Δ(v)` for an arbitrary coordinate vector.
    pub fn delta_of(&self, v: &[FieldElem]) -> Matrix {
        assert_eq!(v.len(), self.dim, "ambient mismatch");
        let mut out = Matrix::zero(self.field, self.dim, self.dim);
        for e in &self.delta {
            if v[e.source].is_zero() {
                continue;
            }
            let add = &(&v[e.source] * &e.coeff) + out.get(e.left, e.right);
            out.set(e.left, e.right, add);
        }
        out
    }

    pub fn counit_of(&self, v: &[FieldElem]) -> FieldElem {
        assert_eq!(v.len(), self.dim, "ambient mismatch");
        let mut acc = self.field.zero();
        for (c, x) in self.counit.iter().zip(v.iter()) {
            if !c.is_zero() && !x.is_zero() {
                acc = &acc + &(c * x);
            }
        }
        acc
    }

    /// Convolution product in the dual algebra:
    /// `(f·g)(e_k) = Σ c_k^{ij} f_i g_j`.
    pub fn convolve(&self, f: &[FieldElem], g: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(f.len(), self.dim, "ambient mismatch");
        assert_eq!(g.len(), self.dim, "ambient mismatch");
        let mut out = vec![self.field.zero(); self.dim];
        for e in &self.delta {
            if f[e.left].is_zero() || g[e.right].is_zero() {
                continue;
            }
            out[e.source] = &out[e.source] + &(&e.coeff * &(&f[e.left] * &g[e.right]));
        }
        out
    }

    /// Unit of the dual algebra (the counit).
    pub fn dual_unit(&self) -> Vec<FieldElem> {
        self.counit.clone()
    }

    /// Matrix of left multiplication by `z` on the dual algebra, in dual
    /// basis coordinates: column `k` is `z · e_k*`.
    pub fn dual_left_mult(&self, z: &[FieldElem]) -> Matrix {
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for k in 0..self.dim {
            let mut ek = vec![self.field.zero(); self.dim];
            ek[k] = self.field.one();
            let col = self.convolve(z, &ek);
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, k, v);
            }
        }
        m
    }

    /// Checks the coalgebra laws and dual associativity on every basis
    /// vector, returning one violation per failing basis index and law.
    pub fn check(&self) -> Vec<LawViolation> {
        let mut out = Vec::new();
        let n = self.dim;
        for k in 0..n {
            // (Δ⊗id)Δ vs (id⊗Δ)Δ, accumulated sparsely over (a, b, c).
            let mut lhs: BTreeMap<(usize, usize, usize), FieldElem> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), FieldElem> = BTreeMap::new();
            for e in self.delta.iter().filter(|e| e.source == k) {
                for e2 in self.delta.iter().filter(|e2| e2.source == e.left) {
                    accumulate(&mut lhs, (e2.left, e2.right, e.right), &(&e.coeff * &e2.coeff));
                }
                for e2 in self.delta.iter().filter(|e2| e2.source == e.right) {
                    accumulate(&mut rhs, (e.left, e2.left, e2.right), &(&e.coeff * &e2.coeff));
                }
            }
            if lhs != rhs {
                out.push(LawViolation {
                    law: CoalgebraLaw::Coassociativity,
                    basis_index: k,
                    detail: tensor_diff(&lhs, &rhs),
                });
            }

            // Counit laws: (ε⊗id)Δ(e_k) = e_k = (id⊗ε)Δ(e_k).
            let mut left = vec![self.field.zero(); n];
            let mut right = vec![self.field.zero(); n];
            for e in self.delta.iter().filter(|e| e.source == k) {
                left[e.right] = &left[e.right] + &(&self.counit[e.left] * &e.coeff);
                right[e.left] = &right[e.left] + &(&self.counit[e.right] * &e.coeff);
            }
            let mut unit = vec![self.field.zero(); n];
            unit[k] = self.field.one();
            if left != unit {
                out.push(LawViolation {
                    law: CoalgebraLaw::CounitLeft,
                    basis_index: k,
                    detail: vector_diff(&left, &unit),
                });
            }
            if right != unit {
                out.push(LawViolation {
                    law: CoalgebraLaw::CounitRight,
                    basis_index: k,
                    detail: vector_diff(&right, &unit),
                });
            }
        }

        // Dual associativity on basis triples. Mathematically equivalent to
        // coassociativity, but asserted independently as a self-check of the
        // convolution code itself.
        'triples: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (ei, ej, ek) = (basis_vec(self.field, n, i), basis_vec(self.field, n, j), basis_vec(self.field, n, k));
                    let ab_c = self.convolve(&self.convolve(&ei, &ej), &ek);
                    let a_bc = self.convolve(&ei, &self.convolve(&ej, &ek));
                    if ab_c != a_bc {
                        out.push(LawViolation {
                            law: CoalgebraLaw::DualAssociativity,
                            basis_index: i,
                            detail: format!(
                                "(e{i}*·e{j}*)·e{k}* = {} but e{i}*·(e{j}*·e{k}*) = {}",
                                render_vector(&ab_c),
                                render_vector(&a_bc)
                            ),
                        });
                        break 'triples;
                    }
                }
            }
        }
        out
    }

    /// `Δ(s) ⊆ s ⊗ s`, tested through the slice criterion: the tensor of a
    /// member lies in `s⊗C ∩ C⊗s = s⊗s` iff all its rows and columns lie
    /// in `s`.
    pub fn is_subcoalgebra(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient(), self.dim, "ambient mismatch");
        for v in s.basis_rows() {
            let t = self.delta_of(v);
            for j in 0..self.dim {
                if !s.contains_vector(&t.col_vec(j)) {
                    return false;
                }
            }
            for i in 0..self.dim {
                if !s.contains_vector(&t.row_vec(i)) {
                    return false;
                }
            }
        }
        true
    }

    /// Validated subcoalgebra wrapper around a subspace.
    pub fn subcoalgebra(&self, space: Subspace) -> Result<Subcoalgebra> {
        if space.ambient() != self.dim {
            return Err(Error::Invalid(format!(
                "subspace of k^{} inside a coalgebra of dimension {}",
                space.ambient(),
                self.dim
            )));
        }
        if !self.is_subcoalgebra(&space) {
            return Err(Error::Invalid("subspace is not a subcoalgebra".into()));
        }
        Ok(Subcoalgebra { space })
    }

    /// Smallest subcoalgebra containing `seed`: closes under first- and
    /// second-slot slices of `Δ` until stable. Terminates in at most `dim`
    /// rounds because the dimension grows strictly until the fixpoint.
    pub fn subcoalgebra_generated(&self, seed: &Subspace) -> Subspace {
        assert_eq!(seed.ambient(), self.dim, "ambient mismatch");
        let mut current = seed.clone();
        loop {
            let mut rows: Vec<Vec<FieldElem>> =
                current.basis_rows().map(|r| r.to_vec()).collect();
            for v in current.basis_rows() {
                let t = self.delta_of(v);
                for i in 0..self.dim {
                    rows.push(t.row_vec(i));
                }
                for j in 0..self.dim {
                    rows.push(t.col_vec(j));
                }
            }
            let next = Subspace::from_rows(self.field, self.dim, rows);
            if next == current {
                return next;
            }
            current = next;
        }
    }

    /// Span of all pairwise convolutions of basis functionals — the ideal
    /// product `p·q` inside the dual algebra when `p` and `q` are ideals,
    /// and the span `{f·g}` for arbitrary dual subspaces.
    pub fn ideal_product(&self, p: &Subspace, q: &Subspace) -> Subspace {
        let mut rows = Vec::new();
        for f in p.basis_rows() {
            for g in q.basis_rows() {
                rows.push(self.convolve(f, g));
            }
        }
        Subspace::from_rows(self.field, self.dim, rows)
    }

    /// Wedge by the dual-ideal formula: `(X^⊥ · Y^⊥)^⊥`.
    pub fn wedge_dual_route(&self, x: &Subspace, y: &Subspace) -> Subspace {
        self.ideal_product(&x.annihilator(), &y.annihilator()).annihilator()
    }

    /// Wedge as the kernel of `(π_X ⊗ π_Y) ∘ Δ`, where the projections are
    /// realized by annihilator bases (rows of `X^⊥` give a map with kernel
    /// exactly `X`).
    pub fn wedge_kernel_route(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let px = x.annihilator();
        let py = y.annihilator();
        let (qx, qy) = (px.dim(), py.dim());
        let mut composite = Matrix::zero(self.field, qx * qy, self.dim);
        for k in 0..self.dim {
            let sandwich = px.basis().mul(self.delta_mat(k)).mul(&py.basis().transpose());
            for r in 0..qx {
                for s in 0..qy {
                    composite.set(r * qy + s, k, sandwich.get(r, s).clone());
                }
            }
        }
        kernel_of(&composite)
    }

    /// The wedge `x ∧ y`. In `Verify` mode both formulas are computed and a
    /// mismatch aborts with an internal error.
    pub fn wedge(&self, x: &Subspace, y: &Subspace, mode: WedgeMode) -> Result<Subspace> {
        assert_eq!(x.ambient(), self.dim, "ambient mismatch");
        assert_eq!(y.ambient(), self.dim, "ambient mismatch");
        let dual = self.wedge_dual_route(x, y);
        if mode == WedgeMode::Verify {
            let kernel = self.wedge_kernel_route(x, y);
            if dual != kernel {
                return Err(Error::Internal(format!(
                    "wedge routes disagree: dual-ideal gives dimension {}, kernel gives {}",
                    dual.dim(),
                    kernel.dim()
                )));
            }
        }
        Ok(dual)
    }

    /// Iterated wedge powers `e, e∧e, (e∧e)∧e, …` up to stabilization.
    /// Requires `e` to be a subcoalgebra so that the chain is increasing.
    pub fn wedge_tower(&self, e: &Subspace, mode: WedgeMode) -> Result<WedgeTower> {
        if !self.is_subcoalgebra(e) {
            return Err(Error::Invalid(
                "wedge tower requires a subcoalgebra as its base".into(),
            ));
        }
        let mut steps = vec![e.clone()];
        loop {
            let last = steps.last().unwrap();
            let next = self.wedge(last, e, mode)?;
            if &next == last {
                break;
            }
            if !next.contains(last) {
                return Err(Error::Internal(
                    "wedge tower failed to increase over a subcoalgebra".into(),
                ));
            }
            steps.push(next);
            if steps.len() > self.dim + 1 {
                return Err(Error::Internal("wedge tower failed to stabilize".into()));
            }
        }
        let limit = steps.last().unwrap().clone();
        Ok(WedgeTower { steps, limit })
    }

    /// Structure transport along an invertible change of coordinates
    /// `x' = p·x`: the new comultiplication is `(p⊗p) ∘ Δ ∘ p⁻¹` and the
    /// new counit is `ε ∘ p⁻¹`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Coalgebra> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::Invalid("change of basis matrix has wrong shape".into()));
        }
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::Invalid("change of basis matrix is singular".into()))?;
        let mut delta = Vec::new();
        for k in 0..self.dim {
            let w = pinv.col_vec(k);
            let t = self.delta_of(&w);
            let transported = p.mul(&t).mul(&p.transpose());
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let c = transported.get(i, j);
                    if !c.is_zero() {
                        delta.push(DeltaEntry { source: k, left: i, right: j, coeff: c.clone() });
                    }
                }
            }
        }
        let counit = (0..self.dim).map(|k| self.counit_of(&pinv.col_vec(k))).collect();
        Coalgebra::new(self.field, self.dim, delta, counit)
    }

    /// Image of a subspace under the coordinate change `x' = p·x`.
    pub fn transport_subspace(p: &Matrix, s: &Subspace) -> Subspace {
        Subspace::from_matrix(s.basis().mul(&p.transpose()))
    }

    /// The subcoalgebra `e`, re-coordinatized on its own canonical basis.
    /// Because the basis is rref, coordinates of a member vector are read
    /// off at the pivot columns, which makes the structure transport exact
    /// sampling rather than solving.
    pub fn restrict_to(&self, e: &Subspace) -> Result<RestrictedCoalgebra> {
        if !self.is_subcoalgebra(e) {
            return Err(Error::Invalid("restriction target is not a subcoalgebra".into()));
        }
        let pivots = e.pivots();
        let d = e.dim();
        let mut delta = Vec::new();
        for (a, row) in e.basis_rows().enumerate() {
            let t = self.delta_of(row);
            for c in 0..d {
                for dd in 0..d {
                    let coeff = t.get(pivots[c], pivots[dd]).clone();
                    if !coeff.is_zero() {
                        delta.push(DeltaEntry { source: a, left: c, right: dd, coeff });
                    }
                }
            }
        }
        let counit = e.basis_rows().map(|row| self.counit_of(row)).collect();
        let coalgebra = Coalgebra::new(self.field, d, delta, counit)?;
        Ok(RestrictedCoalgebra { coalgebra, basis: e.basis().clone(), pivots })
    }
}

/// A coalgebra re-coordinatized on the canonical basis of one of its
/// subcoalgebras, together with the maps in and out of the original
/// coordinates.
#[derive(Debug, Clone)]
pub struct RestrictedCoalgebra {
    pub coalgebra: Coalgebra,
    /// Rows embed the new basis into the original coordinates.
    pub basis: Matrix,
    pivots: Vec<usize>,
}

impl RestrictedCoalgebra {
    /// Original coordinates of a restricted vector.
    pub fn lift_vector(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        self.basis.transpose().apply(v)
    }

    /// Restricted coordinates of an original vector lying in the
    /// subcoalgebra (pivot sampling).
    pub fn project_vector(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Transport a subspace of the subcoalgebra into restricted coordinates.
    pub fn project_subspace(&self, s: &Subspace) -> Subspace {
        let rows = s.basis_rows().map(|r| self.project_vector(r)).collect();
        Subspace::from_rows(self.coalgebra.field(), self.coalgebra.dim(), rows)
    }

    /// Transport a subspace of the restriction back to the original space.
    pub fn lift_subspace(&self, s: &Subspace) -> Subspace {
        let rows = s.basis_rows().map(|r| self.lift_vector(r)).collect();
        Subspace::from_rows(self.basis.field(), self.basis.cols(), rows)
    }

    /// Functionals on the original space restricted to the subcoalgebra:
    /// `f ↦ (f(b_1), …, f(b_d))`.
    pub fn restrict_functional(&self, f: &[FieldElem]) -> Vec<FieldElem> {
        self.basis.apply(f)
    }

    /// Extend a functional on the restriction to the original space by zero
    /// on the pivot complement: the extension agrees with `f` on the
    /// subcoalgebra because pivot sampling is a section of the embedding.
    pub fn extend_functional(&self, f: &[FieldElem]) -> Vec<FieldElem> {
        let field = self.coalgebra.field();
        let mut out = vec![field.zero(); self.basis.cols()];
        for (t, &p) in self.pivots.iter().enumerate() {
            out[p] = f[t].clone();
        }
        out
    }
}

pub(crate) fn basis_vec(field: Field, n: usize, k: usize) -> Vec<FieldElem> {
    let mut v = vec![field.zero(); n];
    v[k] = field.one();
    v
}

fn accumulate(
    map: &mut BTreeMap<(usize, usize, usize), FieldElem>,
    key: (usize, usize, usize),
    add: &FieldElem,
) {
    let entry = map.entry(key).or_insert_with(|| add.field().zero());
    *entry = &*entry + add;
    if entry.is_zero() {
        map.remove(&key);
    }
}

fn tensor_diff(
    lhs: &BTreeMap<(usize, usize, usize), FieldElem>,
    rhs: &BTreeMap<(usize, usize, usize), FieldElem>,
) -> String {
    let keys: BTreeSet<_> = lhs.keys().chain(rhs.keys()).collect();
    let mut parts = Vec::new();
    for key in keys {
        let l = lhs.get(key);
        let r = rhs.get(key);
        if l != r {
            let show = |v: Option<&FieldElem>| v.map_or("0".to_string(), |e| e.to_string());
            parts.push(format!(
                "e{}⊗e{}⊗e{}: {} vs {}",
                key.0,
                key.1,
                key.2,
                show(l),
                show(r)
            ));
        }
    }
    parts.join("; ")
}

fn vector_diff(lhs: &[FieldElem], rhs: &[FieldElem]) -> String {
    let mut parts = Vec::new();
    for (i, (l, r)) in lhs.iter().zip(rhs.iter()).enumerate() {
        if l != r {
            parts.push(format!("e{i}: {l} vs {r}"));
        }
    }
    parts.join("; ")
}

fn render_vector(v: &[FieldElem]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(i, e)| format!("{e}·e{i}"))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
