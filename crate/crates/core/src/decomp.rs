//! Link graphs over simple subcoalgebras and minimal closed subcomodules,
//! the direct-sum decompositions they induce, classification flags, and a
//! catalog of structural self-checks.
//!
//! The decomposition pipeline: the simple subcoalgebras of `C` are grouped
//! into link classes; each class sum `E_α` is grown by its wedge tower into
//! a coalgebra summand `C_α`; the component `M_{C_α}` is the corresponding
//! module summand. The engine recomputes every summand by an independent
//! second route (the comodule wedge tower over the component of `E_α`) and
//! refuses to emit a report when any cross-check fails — such a failure can
//! only come from an arithmetic bug, never from the input.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coalgebra::{Coalgebra, Subcoalgebra, WedgeMode};
use crate::comodule::{
    Comodule, MinimalClosed, RhoEntry, WeakClosedVerdict, DEFAULT_WEAK_SAMPLES,
};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::radical;
use crate::rng::{Rng, DEFAULT_SEED};
use crate::subspace::{compare_vectors, Subspace};

/// Knobs shared by the analysis entry points: how wedges are checked, how
/// many weak-closedness samples are drawn, and the sampling seed.
#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    pub wedge_mode: WedgeMode,
    pub weak_samples: usize,
    pub seed: u64,
}

impl Default for AnalysisOptions {
    fn default() -> AnalysisOptions {
        AnalysisOptions {
            wedge_mode: WedgeMode::Verify,
            weak_samples: DEFAULT_WEAK_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// The link graph on a family of nonzero objects: one vertex per object,
/// with an edge joining two objects whose wedges in the two orders differ.
///
/// Linkedness is defined by separation: two objects are linked when every
/// split of the family into two disjoint halves, one containing each, has
/// some noncommuting pair reaching across the split. That is precisely
/// connectivity in this graph. If a path of noncommuting pairs joins the
/// two objects, any split separating them places two consecutive path
/// vertices on opposite sides, so an edge crosses the split; if no path
/// joins them, the split into the connected component of the first object
/// versus everything else is crossed by no edge. Hence the equivalence
/// classes of the link relation are the connected components, and `classes`
/// stores exactly those.
#[derive(Debug, Clone)]
pub struct LinkGraph {
    /// Canonical spaces of the vertex objects.
    pub vertices: Vec<Subspace>,
    /// Noncommuting pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
    /// Connected components, each ascending, ordered by the
    /// lexicographically smallest basis vector of the component's sum.
    pub classes: Vec<Vec<usize>>,
}

impl LinkGraph {
    fn from_edges(vertices: Vec<Subspace>, edges: Vec<(usize, usize)>) -> LinkGraph {
        let mut uf = UnionFind::new(vertices.len());
        for &(i, j) in &edges {
            uf.union(i, j);
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..vertices.len() {
            by_root.entry(uf.find(v)).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
        if let Some(first) = vertices.first() {
            let field = first.field();
            let ambient = first.ambient();
            let key = |class: &[usize]| {
                sum_of(field, ambient, class.iter().map(|&i| &vertices[i])).lex_min_basis_vector()
            };
            classes.sort_by(|a, b| match (key(a), key(b)) {
                (Some(x), Some(y)) => compare_vectors(&x, &y),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => std::cmp::Ordering::Equal,
            });
        }
        LinkGraph { vertices, edges, classes }
    }

    /// Index of the class containing a vertex.
    pub fn class_of(&self, vertex: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&vertex))
            .expect("every vertex lies in a class")
    }
}

fn sum_of<'a>(
    field: Field,
    ambient: usize,
    spaces: impl IntoIterator<Item = &'a Subspace>,
) -> Subspace {
    let mut acc = Subspace::zero(field, ambient);
    for s in spaces {
        acc = acc.sum(s);
    }
    acc
}

/// Simple subcoalgebras of `c` and their link graph.
pub fn coalgebra_link_graph(
    c: &Coalgebra,
    mode: WedgeMode,
) -> Result<(Vec<Subcoalgebra>, LinkGraph)> {
    let simples = radical::simple_subcoalgebras(c)?;
    let mut edges = Vec::new();
    for i in 0..simples.len() {
        for j in i + 1..simples.len() {
            let ij = c.wedge(simples[i].space(), simples[j].space(), mode)?;
            let ji = c.wedge(simples[j].space(), simples[i].space(), mode)?;
            if ij != ji {
                edges.push((i, j));
            }
        }
    }
    let vertices = simples.iter().map(|s| s.space().clone()).collect();
    Ok((simples, LinkGraph::from_edges(vertices, edges)))
}

/// Nonzero minimal closed subcomodules of `m` and their link graph.
pub fn comodule_link_graph(
    m: &Comodule,
    mode: WedgeMode,
) -> Result<(Vec<MinimalClosed>, LinkGraph)> {
    let minimal = m.minimal_closed_subcomodules()?;
    let mut edges = Vec::new();
    for i in 0..minimal.len() {
        for j in i + 1..minimal.len() {
            let ij = m.comodule_wedge(&minimal[i].subcomodule, &minimal[j].subcomodule, mode)?;
            let ji = m.comodule_wedge(&minimal[j].subcomodule, &minimal[i].subcomodule, mode)?;
            if ij != ji {
                edges.push((i, j));
            }
        }
    }
    let vertices = minimal.iter().map(|mc| mc.subcomodule.clone()).collect();
    Ok((minimal, LinkGraph::from_edges(vertices, edges)))
}

fn assert_direct_sum(parts: &[&Subspace], whole: &Subspace, what: &str) -> Result<()> {
    let field = whole.field();
    let ambient = whole.ambient();
    let total = sum_of(field, ambient, parts.iter().copied());
    if &total != whole {
        return Err(Error::Internal(format!("{what} do not span the whole space")));
    }
    let dim_sum: usize = parts.iter().map(|p| p.dim()).sum();
    if dim_sum != whole.dim() {
        return Err(Error::Internal(format!("{what} overlap: dimensions do not add up")));
    }
    Ok(())
}

/// Splits a coalgebra into the direct sum of its indecomposable
/// subcoalgebras: one summand per link class, obtained as the wedge-tower
/// limit of the class sum. The summands are verified to be independent and
/// exhaustive before they are returned.
pub fn decompose_coalgebra(c: &Coalgebra, mode: WedgeMode) -> Result<Vec<Subcoalgebra>> {
    let (simples, graph) = coalgebra_link_graph(c, mode)?;
    let mut out = Vec::new();
    for class in &graph.classes {
        let class_sum = sum_of(c.field(), c.dim(), class.iter().map(|&i| simples[i].space()));
        let tower = c.wedge_tower(&class_sum, mode)?;
        let summand = c.subcoalgebra(tower.limit).map_err(|_| {
            Error::Internal("a wedge-tower limit of subcoalgebras is not a subcoalgebra".into())
        })?;
        out.push(summand);
    }
    let spaces: Vec<&Subspace> = out.iter().map(Subcoalgebra::space).collect();
    assert_direct_sum(&spaces, &Subspace::full(c.field(), c.dim()), "coalgebra summands")?;
    Ok(out)
}

/// One refinement cell inside a link class: simples whose components share
/// a comodule link class (or the cell of component-free simples), with the
/// wedge-tower limit of the component over the cell sum.
#[derive(Debug, Clone)]
pub struct RefinementCell {
    pub simples: Vec<Subcoalgebra>,
    /// Sum of the cell's simples.
    pub cell_sum: Subspace,
    /// Wedge-tower limit of the component over `cell_sum`.
    pub tower_limit: Subspace,
    /// Whether this is the cell of simples with zero component.
    pub is_zero_cell: bool,
}

/// One direct summand of the comodule, indexed by a link class of simple
/// subcoalgebras.
#[derive(Debug, Clone)]
pub struct ComoduleSummand {
    /// The link class members, ascending.
    pub simples: Vec<Subcoalgebra>,
    /// `E_α`: the sum of the class members.
    pub class_sum: Subspace,
    /// `C_α`: the wedge-tower limit of `E_α` (the coalgebra summand).
    pub coalgebra_summand: Subcoalgebra,
    /// `N_α`: the component of the module over `C_α`.
    pub module_summand: Subspace,
    /// Refinement of the class by comodule link classes.
    pub cells: Vec<RefinementCell>,
}

/// The full decomposition of a comodule and its coalgebra, together with
/// both link graphs.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub coalgebra_summands: Vec<Subcoalgebra>,
    pub summands: Vec<ComoduleSummand>,
    pub coalgebra_graph: LinkGraph,
    pub comodule_graph: LinkGraph,
}

fn comodule_class_of(graph: &LinkGraph, space: &Subspace) -> Result<usize> {
    let v = graph.vertices.iter().position(|x| x == space).ok_or_else(|| {
        Error::Internal("a nonzero simple component is missing from the minimal closed list".into())
    })?;
    Ok(graph.class_of(v))
}

/// Decomposes `m` into weak-closed indecomposable subcomodules, one per
/// link class of simple subcoalgebras, refined inside each class by the
/// comodule link classes. Every summand is recomputed along an independent
/// second route and all direct-sum and reassembly identities are enforced;
/// any mismatch aborts with an internal error.
pub fn decompose_comodule(m: &Comodule, options: &AnalysisOptions) -> Result<DecompositionReport> {
    let mode = options.wedge_mode;
    let c = m.coalgebra();
    let (simples, cgraph) = coalgebra_link_graph(c, mode)?;
    let components: Vec<Subspace> =
        simples.iter().map(|d| m.component(d.space())).collect::<Result<_>>()?;
    let (_minimal, mgraph) = comodule_link_graph(m, mode)?;

    let mut coalgebra_summands = Vec::new();
    let mut summands = Vec::new();
    for class in &cgraph.classes {
        let class_simples: Vec<Subcoalgebra> = class.iter().map(|&i| simples[i].clone()).collect();
        let class_sum = sum_of(c.field(), c.dim(), class.iter().map(|&i| simples[i].space()));
        let tower = c.wedge_tower(&class_sum, mode)?;
        let coalgebra_summand = c.subcoalgebra(tower.limit).map_err(|_| {
            Error::Internal("a wedge-tower limit of subcoalgebras is not a subcoalgebra".into())
        })?;
        let module_summand = m.component(coalgebra_summand.space())?;

        // Independent route: grow the component of the class sum by the
        // comodule wedge tower.
        let second_route = m.comodule_wedge_tower(&m.component(&class_sum)?, mode)?.limit;
        if second_route != module_summand {
            return Err(Error::Internal(
                "module summand differs between its two computation routes".into(),
            ));
        }

        let mut faithful: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut component_free: Vec<usize> = Vec::new();
        for &i in class {
            if components[i].is_zero() {
                component_free.push(i);
            } else {
                faithful.entry(comodule_class_of(&mgraph, &components[i])?).or_default().push(i);
            }
        }
        let mut cells = Vec::new();
        for members in faithful.into_values() {
            let cell_sum = sum_of(c.field(), c.dim(), members.iter().map(|&i| simples[i].space()));
            let component = m.component(&cell_sum)?;
            let tower_limit = m.comodule_wedge_tower(&component, mode)?.limit;
            cells.push(RefinementCell {
                simples: members.iter().map(|&i| simples[i].clone()).collect(),
                cell_sum,
                tower_limit,
                is_zero_cell: false,
            });
        }
        cells.sort_by(|a, b| {
            match (a.cell_sum.lex_min_basis_vector(), b.cell_sum.lex_min_basis_vector()) {
                (Some(x), Some(y)) => compare_vectors(&x, &y),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => std::cmp::Ordering::Equal,
            }
        });
        if !component_free.is_empty() {
            let cell_sum =
                sum_of(c.field(), c.dim(), component_free.iter().map(|&i| simples[i].space()));
            let component = m.component(&cell_sum)?;
            if !component.is_zero() {
                return Err(Error::Internal(
                    "the component over a sum of component-free simples is nonzero".into(),
                ));
            }
            cells.push(RefinementCell {
                simples: component_free.iter().map(|&i| simples[i].clone()).collect(),
                cell_sum,
                tower_limit: component,
                is_zero_cell: true,
            });
        }

        let cell_total =
            sum_of(m.field(), m.dim(), cells.iter().map(|cell| &cell.tower_limit));
        if cell_total != module_summand {
            return Err(Error::Internal(
                "refinement cells do not reassemble their module summand".into(),
            ));
        }

        coalgebra_summands.push(coalgebra_summand.clone());
        summands.push(ComoduleSummand {
            simples: class_simples,
            class_sum,
            coalgebra_summand,
            module_summand,
            cells,
        });
    }

    let coalgebra_spaces: Vec<&Subspace> =
        coalgebra_summands.iter().map(Subcoalgebra::space).collect();
    assert_direct_sum(
        &coalgebra_spaces,
        &Subspace::full(c.field(), c.dim()),
        "coalgebra summands",
    )?;
    let module_spaces: Vec<&Subspace> = summands.iter().map(|s| &s.module_summand).collect();
    assert_direct_sum(&module_spaces, &Subspace::full(m.field(), m.dim()), "module summands")?;

    Ok(DecompositionReport {
        coalgebra_summands,
        summands,
        coalgebra_graph: cgraph,
        comodule_graph: mgraph,
    })
}

/// The structural flags of a comodule and its coalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// The coefficient coalgebra is all of `C`.
    pub full: bool,
    /// Every simple subcoalgebra of `C` has a nonzero component.
    pub component_faithful: bool,
    /// No pair of simple subcoalgebras has noncommuting wedges.
    pub pi_commutative_coalgebra: bool,
    /// No pair of minimal closed subcomodules has noncommuting wedges.
    pub pi_commutative_comodule: bool,
    /// Linked simples inside the coefficient coalgebra have linked (or
    /// simultaneously zero) components.
    pub w_relational_hereditary: bool,
    /// The coalgebra has exactly one link class.
    pub indecomposable_coalgebra: bool,
    /// The comodule has exactly one link class of minimal closed
    /// subcomodules.
    pub indecomposable_comodule: bool,
    /// Exactly one nonzero minimal closed subcomodule.
    pub relative_irreducible_comodule: bool,
    /// The socle is the whole module.
    pub cosemisimple: bool,
    pub coalgebra_class_count: usize,
    pub comodule_class_count: usize,
    pub minimal_closed_count: usize,
    pub socle_dim: usize,
}

fn hereditary_flag(
    simples: &[Subcoalgebra],
    components: &[Subspace],
    cgraph: &LinkGraph,
    mgraph: &LinkGraph,
    coefficient_space: &Subspace,
) -> Result<bool> {
    let inside: Vec<bool> =
        simples.iter().map(|d| coefficient_space.contains(d.space())).collect();
    for i in 0..simples.len() {
        for j in i + 1..simples.len() {
            if !inside[i] || !inside[j] || cgraph.class_of(i) != cgraph.class_of(j) {
                continue;
            }
            let (zi, zj) = (components[i].is_zero(), components[j].is_zero());
            if zi != zj {
                return Ok(false);
            }
            if !zi
                && comodule_class_of(mgraph, &components[i])?
                    != comodule_class_of(mgraph, &components[j])?
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Computes the nine structural flags plus the headline counts.
pub fn classify(m: &Comodule, options: &AnalysisOptions) -> Result<Classification> {
    let mode = options.wedge_mode;
    let c = m.coalgebra();
    let cm = m.coefficient_coalgebra_of_module()?;
    let (simples, cgraph) = coalgebra_link_graph(c, mode)?;
    let components: Vec<Subspace> =
        simples.iter().map(|d| m.component(d.space())).collect::<Result<_>>()?;
    let (minimal, mgraph) = comodule_link_graph(m, mode)?;
    let socle = m.socle()?;

    Ok(Classification {
        full: cm.space().is_full(),
        component_faithful: components.iter().all(|x| !x.is_zero()),
        pi_commutative_coalgebra: cgraph.edges.is_empty(),
        pi_commutative_comodule: mgraph.edges.is_empty(),
        w_relational_hereditary: hereditary_flag(
            &simples,
            &components,
            &cgraph,
            &mgraph,
            cm.space(),
        )?,
        indecomposable_coalgebra: cgraph.classes.len() == 1,
        indecomposable_comodule: mgraph.classes.len() == 1,
        relative_irreducible_comodule: minimal.len() == 1,
        cosemisimple: socle.is_full(),
        coalgebra_class_count: cgraph.classes.len(),
        comodule_class_count: mgraph.classes.len(),
        minimal_closed_count: minimal.len(),
        socle_dim: socle.dim(),
    })
}

/// Outcome of one structural check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The check's hypothesis does not hold for this instance; nothing was
    /// asserted (deliberately distinct from a vacuous pass).
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not applicable",
        }
    }
}

/// A named structural check with its outcome. A `Fail` indicates an
/// arithmetic or logic bug in the engine, never a property of the input.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub note: Option<String>,
}

struct Checks {
    results: Vec<CheckResult>,
}

impl Checks {
    fn record(&mut self, name: &'static str, ok: bool) {
        self.results.push(CheckResult {
            name,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            note: None,
        });
    }

    fn skip(&mut self, name: &'static str, note: String) {
        self.results.push(CheckResult {
            name,
            status: CheckStatus::NotApplicable,
            note: Some(note),
        });
    }

    fn gated(&mut self, name: &'static str, gate: bool, why_not: &str, check: impl FnOnce() -> Result<bool>) -> Result<()> {
        if gate {
            let ok = check()?;
            self.record(name, ok);
        } else {
            self.skip(name, why_not.to_string());
        }
        Ok(())
    }
}

fn sampled_subcomodules(m: &Comodule, rng: &mut Rng, count: usize) -> Vec<Subspace> {
    let field = m.field();
    let mut out = vec![Subspace::zero(field, m.dim()), Subspace::full(field, m.dim())];
    for _ in 0..count {
        let v: Vec<FieldElem> = (0..m.dim()).map(|_| rng.small_scalar(field)).collect();
        if v.iter().all(FieldElem::is_zero) {
            continue;
        }
        out.push(m.subcomodule_generated(&Subspace::span_of_vector(field, v)));
    }
    out
}

fn sampled_subspaces(m: &Comodule, rng: &mut Rng, count: usize) -> Vec<Subspace> {
    let field = m.field();
    let mut out = Vec::new();
    for _ in 0..count {
        let rows: Vec<Vec<FieldElem>> = (0..2)
            .map(|_| (0..m.dim()).map(|_| rng.small_scalar(field)).collect())
            .collect();
        out.push(Subspace::from_rows(field, m.dim(), rows));
    }
    out
}

fn is_regular(m: &Comodule) -> bool {
    if m.dim() != m.coalgebra().dim() {
        return false;
    }
    let rho: BTreeMap<(usize, usize, usize), &FieldElem> =
        m.rho_entries().iter().map(|e| ((e.source, e.left, e.right), &e.coeff)).collect();
    let delta: BTreeMap<(usize, usize, usize), &FieldElem> = m
        .coalgebra()
        .delta_entries()
        .iter()
        .map(|e| ((e.source, e.left, e.right), &e.coeff))
        .collect();
    rho == delta
}

/// The comodule re-expressed over its coefficient coalgebra: the module
/// coordinates are unchanged and the coalgebra legs are rewritten in the
/// restricted basis, so subspace-valued operators can be compared with the
/// originals directly.
fn restrict_to_coefficient_coalgebra(m: &Comodule) -> Result<Comodule> {
    let cm = m.coefficient_coalgebra_of_module()?;
    let restricted = m.coalgebra().restrict_to(cm.space())?;
    let mut entries = Vec::new();
    for s in 0..m.dim() {
        let b = m.rho_mat(s);
        for i in 0..m.dim() {
            let projected = restricted.project_vector(&b.row_vec(i));
            for (j, coeff) in projected.into_iter().enumerate() {
                if !coeff.is_zero() {
                    entries.push(RhoEntry { source: s, left: i, right: j, coeff });
                }
            }
        }
    }
    Comodule::new(Arc::new(restricted.coalgebra.clone()), m.dim(), entries)
}

/// Runs the full catalog of structural identities on one instance. Every
/// identity is recomputed from scratch here — nothing is trusted from the
/// earlier pipeline stages — and each result is `Pass`, `Fail`, or
/// `NotApplicable` when its hypothesis does not hold. Any `Fail` means the
/// engine itself is wrong.
pub fn verify_structure(m: &Comodule, options: &AnalysisOptions) -> Result<Vec<CheckResult>> {
    let mode = options.wedge_mode;
    let c = m.coalgebra();
    let field = m.field();
    let mut checks = Checks { results: Vec::new() };
    let mut rng = Rng::from_seed(options.seed);

    checks.record("comodule_laws_hold", m.check().is_empty());
    checks.record("coalgebra_laws_hold", c.check().is_empty());

    let report = decompose_comodule(m, options)?;
    let (simples, cgraph) = coalgebra_link_graph(c, mode)?;
    let components: Vec<Subspace> =
        simples.iter().map(|d| m.component(d.space())).collect::<Result<_>>()?;
    let (minimal, mgraph) = comodule_link_graph(m, mode)?;
    let socle = m.socle()?;
    let cm = m.coefficient_coalgebra_of_module()?;
    let flags = classify(m, options)?;

    let subcomodule_samples = {
        let mut s = sampled_subcomodules(m, &mut rng, 6);
        s.extend(minimal.iter().map(|mc| mc.subcomodule.clone()));
        s.push(socle.clone());
        s
    };
    let raw_samples = sampled_subspaces(m, &mut rng, 6);

    // --- Annihilators and closures -------------------------------------

    checks.record(
        "dual_annihilator_matches_the_coefficient_coalgebra_annihilator",
        subcomodule_samples.iter().try_fold(true, |acc, s| -> Result<bool> {
            let direct = m.ann_dual(s);
            let via_coefficients = m.coefficient_coalgebra(s)?.space().annihilator();
            Ok(acc && direct == via_coefficients)
        })?,
    );

    checks.record(
        "closure_is_extensive_and_idempotent",
        raw_samples.iter().chain(subcomodule_samples.iter()).all(|s| {
            let cl = m.closure(s);
            cl.contains(s) && m.closure(&cl) == cl
        }),
    );

    checks.record(
        "closures_of_subcomodules_are_subcomodules",
        subcomodule_samples.iter().all(|s| m.is_subcomodule(&m.closure(s))),
    );

    let component_arguments: Vec<Subspace> = {
        let mut e: Vec<Subspace> = simples.iter().map(|d| d.space().clone()).collect();
        e.extend(report.summands.iter().map(|s| s.class_sum.clone()));
        e.extend(report.coalgebra_summands.iter().map(|d| d.space().clone()));
        e.push(Subspace::full(field, c.dim()));
        e
    };

    checks.record(
        "components_are_recovered_from_their_coefficient_coalgebras",
        component_arguments.iter().try_fold(true, |acc, e| -> Result<bool> {
            let n = m.component(e)?;
            let again = m.component(m.coefficient_coalgebra(&n)?.space())?;
            Ok(acc && n == again)
        })?,
    );

    checks.record(
        "components_equal_the_annihilator_of_the_orthogonal_ideal",
        component_arguments.iter().try_fold(true, |acc, e| -> Result<bool> {
            Ok(acc && m.component(e)? == m.ann_module(&e.annihilator()))
        })?,
    );

    checks.record("distinct_simples_have_independent_components", {
        let mut ok = true;
        for i in 0..simples.len() {
            for j in i + 1..simples.len() {
                ok = ok && components[i].intersect(&components[j]).is_zero();
            }
        }
        ok
    });

    // --- Component wedges ----------------------------------------------

    let faithful: Vec<usize> =
        (0..simples.len()).filter(|&i| !components[i].is_zero()).collect();

    checks.gated(
        "wedges_of_faithful_simple_components_match_components_of_wedges",
        faithful.len() >= 2,
        "needs at least two simples with nonzero components",
        || {
            let mut ok = true;
            for (a, &i) in faithful.iter().enumerate() {
                for &j in &faithful[a + 1..] {
                    let lhs = m.comodule_wedge(&components[i], &components[j], mode)?;
                    let wedge = c.wedge(simples[i].space(), simples[j].space(), mode)?;
                    ok = ok && lhs == m.component(&wedge)?;
                    let rhs = m.comodule_wedge(&components[j], &components[i], mode)?;
                    let wedge_rev = c.wedge(simples[j].space(), simples[i].space(), mode)?;
                    ok = ok && rhs == m.component(&wedge_rev)?;
                }
            }
            Ok(ok)
        },
    )?;

    checks.gated(
        "component_wedges_land_in_the_component_of_the_wedge",
        simples.len() >= 2,
        "needs at least two simple subcoalgebras",
        || {
            let mut ok = true;
            for i in 0..simples.len() {
                for j in 0..simples.len() {
                    if i == j {
                        continue;
                    }
                    let lhs = m.comodule_wedge(&components[i], &components[j], mode)?;
                    let wedge = c.wedge(simples[i].space(), simples[j].space(), mode)?;
                    ok = ok && m.component(&wedge)?.contains(&lhs);
                }
            }
            Ok(ok)
        },
    )?;

    checks.gated(
        "components_are_superadditive_on_sums_of_simples",
        simples.len() >= 2,
        "needs at least two simple subcoalgebras",
        || {
            let mut ok = true;
            for i in 0..simples.len() {
                for j in i + 1..simples.len() {
                    let sum = simples[i].space().sum(simples[j].space());
                    ok = ok
                        && m.component(&sum)?.contains(&components[i].sum(&components[j]));
                }
            }
            Ok(ok)
        },
    )?;

    checks.record("the_component_over_the_coradical_is_the_sum_of_simple_components", {
        let coradical = radical::coradical(c)?;
        let total = sum_of(field, m.dim(), components.iter());
        m.component(coradical.space())? == total && total == socle
    });

    // --- Socle ----------------------------------------------------------

    checks.record("the_socle_annihilates_the_dual_radical", {
        let restricted = c.restrict_to(cm.space())?;
        let jd = radical::jacobson_radical(&restricted.coalgebra)?;
        let lifted: Vec<Vec<FieldElem>> =
            jd.basis_rows().map(|f| restricted.extend_functional(f)).collect();
        m.ann_module(&Subspace::from_rows(field, c.dim(), lifted)) == socle
    });

    checks.record("functionals_killing_the_socle_restrict_onto_the_dual_radical", {
        let restricted = c.restrict_to(cm.space())?;
        let jd = radical::jacobson_radical(&restricted.coalgebra)?;
        let rows: Vec<Vec<FieldElem>> =
            m.ann_dual(&socle).basis_rows().map(|f| restricted.restrict_functional(f)).collect();
        Subspace::from_rows(field, cm.dim(), rows) == jd
    });

    checks.record(
        "the_socle_is_the_sum_of_the_minimal_closed_subcomodules",
        sum_of(field, m.dim(), minimal.iter().map(|mc| &mc.subcomodule)) == socle,
    );

    checks.record(
        "the_socle_wedge_tower_exhausts_the_module",
        m.comodule_wedge_tower(&socle, mode)?.limit.is_full(),
    );

    checks.record("the_socle_is_closed", m.closure(&socle) == socle);

    // --- Minimal closed subcomodules -------------------------------------

    checks.record("minimal_closed_subcomodules_biject_with_faithful_simples", {
        minimal.len() == faithful.len()
            && faithful.iter().zip(minimal.iter()).try_fold(
                true,
                |acc, (&i, mc)| -> Result<bool> {
                    Ok(acc
                        && mc.simple.space() == simples[i].space()
                        && mc.subcomodule == components[i]
                        && m.coefficient_coalgebra(&mc.subcomodule)?.space()
                            == simples[i].space())
                },
            )?
    });

    checks.gated(
        "every_nonzero_vector_of_a_minimal_closed_subcomodule_generates_it",
        !minimal.is_empty(),
        "no nonzero minimal closed subcomodules",
        || {
            let mut ok = true;
            for mc in &minimal {
                for x in mc.subcomodule.basis_rows() {
                    let cyclic =
                        m.subcomodule_generated(&Subspace::span_of_vector(field, x.to_vec()));
                    ok = ok && m.closure(&cyclic) == mc.subcomodule;
                }
            }
            Ok(ok)
        },
    )?;

    // --- Decomposition ----------------------------------------------------

    checks.record("coalgebra_summands_form_a_direct_sum", {
        let spaces: Vec<&Subspace> =
            report.coalgebra_summands.iter().map(Subcoalgebra::space).collect();
        assert_direct_sum(&spaces, &Subspace::full(field, c.dim()), "coalgebra summands").is_ok()
    });

    checks.record("module_summands_form_a_direct_sum", {
        let spaces: Vec<&Subspace> = report.summands.iter().map(|s| &s.module_summand).collect();
        assert_direct_sum(&spaces, &Subspace::full(field, m.dim()), "module summands").is_ok()
    });

    checks.record(
        "module_summands_are_closed",
        report.summands.iter().all(|s| m.closure(&s.module_summand) == s.module_summand),
    );

    checks.record(
        "module_summands_are_weak_closed",
        report.summands.iter().all(|s| {
            m.is_weak_closed(&s.module_summand, options.weak_samples, options.seed)
                == WeakClosedVerdict::Holds
        }),
    );

    checks.record(
        "summand_chain_equalities_hold",
        report.summands.iter().try_fold(true, |acc, s| -> Result<bool> {
            let via_class_sum =
                m.comodule_wedge_tower(&m.component(&s.class_sum)?, mode)?.limit;
            let via_cells =
                sum_of(field, m.dim(), s.cells.iter().map(|cell| &cell.tower_limit));
            Ok(acc && via_class_sum == s.module_summand && via_cells == s.module_summand)
        })?,
    );

    checks.record(
        "refinement_cells_partition_each_class",
        report.summands.iter().all(|s| {
            let mut from_cells: Vec<&Subcoalgebra> =
                s.cells.iter().flat_map(|cell| cell.simples.iter()).collect();
            from_cells.sort();
            let mut expected: Vec<&Subcoalgebra> = s.simples.iter().collect();
            expected.sort();
            let zero_cells_exact = s.cells.iter().all(|cell| {
                cell.simples.iter().all(|d| {
                    let i = simples.iter().position(|x| x == d).expect("known simple");
                    cell.is_zero_cell == components[i].is_zero()
                })
            });
            from_cells == expected && zero_cells_exact
        }),
    );

    // --- Descent between coalgebra and comodule --------------------------

    checks.gated(
        "commuting_coalgebra_wedges_descend_to_the_comodule",
        cgraph.edges.is_empty(),
        "the coalgebra link graph has edges",
        || Ok(mgraph.edges.is_empty()),
    )?;

    checks.gated(
        "decomposable_coalgebras_give_decomposable_component_faithful_comodules",
        flags.component_faithful && cgraph.classes.len() >= 2 && m.dim() > 0,
        "needs a decomposable coalgebra and a component-faithful nonzero comodule",
        || Ok(mgraph.classes.len() >= 2),
    )?;

    checks.gated(
        "irreducible_coalgebras_give_relatively_irreducible_comodules",
        simples.len() == 1 && m.dim() > 0,
        "needs an irreducible coalgebra and a nonzero comodule",
        || Ok(minimal.len() == 1),
    )?;

    checks.gated(
        "hereditary_comodules_have_only_faithful_simples_in_their_coefficient_coalgebra",
        flags.w_relational_hereditary,
        "the comodule is not hereditary",
        || {
            Ok((0..simples.len())
                .filter(|&i| cm.space().contains(simples[i].space()))
                .all(|i| !components[i].is_zero()))
        },
    )?;

    checks.gated(
        "hereditary_link_classes_land_in_single_comodule_classes",
        flags.w_relational_hereditary,
        "the comodule is not hereditary",
        || {
            let mut ok = true;
            for class in &cgraph.classes {
                let mut target = None;
                for &i in class {
                    if !cm.space().contains(simples[i].space()) || components[i].is_zero() {
                        continue;
                    }
                    let mc = comodule_class_of(&mgraph, &components[i])?;
                    ok = ok && *target.get_or_insert(mc) == mc;
                }
            }
            Ok(ok)
        },
    )?;

    let coefficient_simples_faithful = (0..simples.len())
        .filter(|&i| cm.space().contains(simples[i].space()))
        .all(|i| !components[i].is_zero());

    checks.gated(
        "indecomposable_comodules_have_indecomposable_coefficient_coalgebras",
        coefficient_simples_faithful && flags.indecomposable_comodule,
        "needs faithful coefficient simples and an indecomposable comodule",
        || {
            let restricted = c.restrict_to(cm.space())?;
            Ok(decompose_coalgebra(&restricted.coalgebra, mode)?.len() == 1)
        },
    )?;

    checks.gated(
        "relative_irreducibility_matches_coefficient_coalgebra_irreducibility",
        coefficient_simples_faithful && m.dim() > 0,
        "needs faithful coefficient simples and a nonzero comodule",
        || {
            let restricted = c.restrict_to(cm.space())?;
            let restricted_simples = radical::simple_subcoalgebras(&restricted.coalgebra)?;
            Ok((minimal.len() == 1) == (restricted_simples.len() == 1))
        },
    )?;

    // --- Full hereditary transfer ----------------------------------------

    let full_hereditary = flags.full && flags.w_relational_hereditary && m.dim() > 0;
    let not_full_hereditary = "needs a full hereditary nonzero comodule";

    checks.gated(
        "full_hereditary_comodules_share_indecomposability_with_the_coalgebra",
        full_hereditary,
        not_full_hereditary,
        || Ok(flags.indecomposable_comodule == flags.indecomposable_coalgebra),
    )?;

    checks.gated(
        "full_hereditary_relative_irreducibility_matches_coalgebra_irreducibility",
        full_hereditary,
        not_full_hereditary,
        || Ok(flags.relative_irreducible_comodule == (simples.len() == 1)),
    )?;

    checks.gated(
        "full_hereditary_comodules_share_commuting_wedges_with_the_coalgebra",
        full_hereditary,
        not_full_hereditary,
        || Ok(flags.pi_commutative_comodule == flags.pi_commutative_coalgebra),
    )?;

    checks.gated(
        "full_hereditary_comodules_split_into_irreducibles_together",
        full_hereditary,
        not_full_hereditary,
        || {
            let coalgebra_side = report
                .summands
                .iter()
                .all(|s| s.simples.len() == 1);
            let module_side = report.summands.iter().all(|s| {
                !s.module_summand.is_zero()
                    && minimal
                        .iter()
                        .filter(|mc| s.module_summand.contains(&mc.subcomodule))
                        .count()
                        == 1
            });
            Ok(coalgebra_side == module_side)
        },
    )?;

    // Whenever commuting component wedges force commuting simple wedges,
    // heredity must follow; when that forcing hypothesis itself fails the
    // implication asserts nothing.
    {
        let inside: Vec<usize> = (0..simples.len())
            .filter(|&i| cm.space().contains(simples[i].space()))
            .collect();
        let mut hypothesis = true;
        let mut offending = None;
        for (a, &i) in inside.iter().enumerate() {
            for &j in &inside[a + 1..] {
                let mij = m.comodule_wedge(&components[i], &components[j], mode)?;
                let mji = m.comodule_wedge(&components[j], &components[i], mode)?;
                if mij == mji {
                    let cij = c.wedge(simples[i].space(), simples[j].space(), mode)?;
                    let cji = c.wedge(simples[j].space(), simples[i].space(), mode)?;
                    if cij != cji {
                        hypothesis = false;
                        offending = Some((i, j));
                    }
                }
            }
        }
        if hypothesis {
            checks.record(
                "commuting_component_wedges_forcing_simple_wedges_implies_heredity",
                flags.w_relational_hereditary,
            );
        } else {
            let (i, j) = offending.unwrap();
            checks.skip(
                "commuting_component_wedges_forcing_simple_wedges_implies_heredity",
                format!(
                    "the forcing hypothesis fails for the simple pair ({i}, {j}): their \
                     components have commuting wedges while the simples do not"
                ),
            );
        }
    }

    // --- Regular comodule ----------------------------------------------

    let regular = is_regular(m);
    let not_regular = "the coaction is not the comultiplication";

    checks.gated(
        "regular_closed_subcomodules_are_exactly_the_subcoalgebras",
        regular,
        not_regular,
        || {
            let mut ok = true;
            // A subcoalgebra generated from an arbitrary seed is a
            // subcomodule of the regular comodule and must come back closed.
            for s in raw_samples.iter() {
                let generated = c.subcoalgebra_generated(s);
                ok = ok && m.closure(&generated) == generated;
            }
            // On genuine subcomodules the two notions coincide.  The
            // restriction matters: the closure of an arbitrary subspace is
            // only a one-sided coideal, as the span of a nontrivial path
            // already shows.
            for n in subcomodule_samples.iter() {
                let closed = m.closure(n) == *n;
                ok = ok && closed == c.is_subcoalgebra(n);
            }
            Ok(ok)
        },
    )?;

    checks.gated(
        "regular_comodule_wedges_match_the_coalgebra_wedges",
        regular,
        not_regular,
        || {
            let mut subcoalgebras: Vec<Subspace> =
                simples.iter().map(|d| d.space().clone()).collect();
            subcoalgebras.push(cm.space().clone());
            subcoalgebras
                .extend(subcomodule_samples.iter().map(|s| c.subcoalgebra_generated(s)));
            let mut ok = true;
            for x in &subcoalgebras {
                for y in &subcoalgebras {
                    ok = ok && m.comodule_wedge(x, y, mode)? == c.wedge(x, y, mode)?;
                }
            }
            Ok(ok)
        },
    )?;

    checks.gated(
        "regular_comodules_are_full_hereditary_and_component_faithful",
        regular,
        not_regular,
        || Ok(flags.full && flags.w_relational_hereditary && flags.component_faithful),
    )?;

    checks.gated("regular_comodule_decompositions_coincide", regular, not_regular, || {
        Ok(report
            .summands
            .iter()
            .map(|s| &s.module_summand)
            .eq(report.coalgebra_summands.iter().map(Subcoalgebra::space)))
    })?;

    // --- Restriction to the coefficient coalgebra ------------------------

    checks.record("operators_agree_over_the_coefficient_coalgebra", {
        let over_cm = restrict_to_coefficient_coalgebra(m)?;
        let mut ok = over_cm.check().is_empty();
        for s in &subcomodule_samples {
            ok = ok && over_cm.closure(s) == m.closure(s);
        }
        ok = ok && over_cm.socle()? == socle;
        let restricted_minimal = over_cm.minimal_closed_subcomodules()?;
        ok = ok
            && restricted_minimal.len() == minimal.len()
            && restricted_minimal
                .iter()
                .zip(minimal.iter())
                .all(|(a, b)| a.subcomodule == b.subcomodule);
        ok
    });

    Ok(checks.results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;
    use crate::coalgebra::Coalgebra;
    use crate::matrix::matrix_from_i64;

    fn q() -> Field {
        Field::Rationals
    }

    fn arrow() -> Coalgebra {
        builders::path_coalgebra(q(), &builders::QuiverSpec::new(2, vec![(0, 1)], 1)).unwrap()
    }

    fn options() -> AnalysisOptions {
        AnalysisOptions::default()
    }

    /// `M = ku ⊕ kw` over the arrow coalgebra, with `ρ(u) = u⊗x` and
    /// `ρ(w) = w⊗y`: the two vertex lines stay linked in the coalgebra but
    /// their components fall into separate comodule classes.
    fn split_socle_comodule() -> Comodule {
        let c = Arc::new(arrow());
        Comodule::new(
            Arc::clone(&c),
            2,
            vec![
                RhoEntry { source: 0, left: 0, right: 0, coeff: q().one() },
                RhoEntry { source: 1, left: 1, right: 1, coeff: q().one() },
            ],
        )
        .unwrap()
    }

    #[test]
    fn grouplike_coalgebras_split_into_their_points() {
        let c = builders::grouplike(q(), 3).unwrap();
        let summands = decompose_coalgebra(&c, WedgeMode::Verify).unwrap();
        assert_eq!(summands.len(), 3);
        assert!(summands.iter().all(|s| s.dim() == 1));
        let (_, graph) = coalgebra_link_graph(&c, WedgeMode::Verify).unwrap();
        assert!(graph.edges.is_empty());
        assert_eq!(graph.classes.len(), 3);
    }

    #[test]
    fn the_arrow_coalgebra_is_indecomposable() {
        let c = arrow();
        let (_, graph) = coalgebra_link_graph(&c, WedgeMode::Verify).unwrap();
        assert_eq!(graph.edges, vec![(0, 1)]);
        assert_eq!(graph.classes.len(), 1);
        let summands = decompose_coalgebra(&c, WedgeMode::Verify).unwrap();
        assert_eq!(summands.len(), 1);
        assert!(summands[0].space().is_full());
    }

    #[test]
    fn block_sums_decompose_blockwise() {
        let c = builders::direct_sum_coalgebras(
            &builders::matrix_coalgebra(q(), 2).unwrap(),
            &builders::grouplike(q(), 1).unwrap(),
        )
        .unwrap();
        let summands = decompose_coalgebra(&c, WedgeMode::Verify).unwrap();
        assert_eq!(summands.len(), 2);
        // The grouplike line sorts first: its basis vector starts with
        // more zeros.
        assert_eq!(
            summands[0].space(),
            &Subspace::from_matrix(matrix_from_i64(q(), 5, &[&[0, 0, 0, 0, 1]]))
        );
        assert_eq!(summands[1].dim(), 4);
    }

    #[test]
    fn decomposition_is_invariant_under_basis_changes() {
        let c = builders::direct_sum_coalgebras(
            &builders::matrix_coalgebra(q(), 2).unwrap(),
            &builders::grouplike(q(), 1).unwrap(),
        )
        .unwrap();
        let p = builders::random_invertible(q(), 5, &mut Rng::from_seed(5));
        let twisted = c.change_basis(&p).unwrap();
        let mut direct: Vec<Subspace> = decompose_coalgebra(&twisted, WedgeMode::Verify)
            .unwrap()
            .into_iter()
            .map(Subcoalgebra::into_space)
            .collect();
        let mut transported: Vec<Subspace> = decompose_coalgebra(&c, WedgeMode::Verify)
            .unwrap()
            .iter()
            .map(|s| Coalgebra::transport_subspace(&p, s.space()))
            .collect();
        direct.sort();
        transported.sort();
        assert_eq!(direct, transported);
    }

    #[test]
    fn the_regular_arrow_comodule_is_one_summand_with_one_cell() {
        let m = builders::regular_comodule(Arc::new(arrow()));
        let report = decompose_comodule(&m, &options()).unwrap();
        assert_eq!(report.summands.len(), 1);
        let s = &report.summands[0];
        assert!(s.module_summand.is_full());
        assert!(s.coalgebra_summand.space().is_full());
        assert_eq!(s.simples.len(), 2);
        assert_eq!(s.cells.len(), 1);
        assert!(!s.cells[0].is_zero_cell);
        assert_eq!(s.cells[0].simples.len(), 2);
        assert!(s.cells[0].tower_limit.is_full());
    }

    #[test]
    fn flags_of_the_regular_arrow_comodule() {
        let m = builders::regular_comodule(Arc::new(arrow()));
        let f = classify(&m, &options()).unwrap();
        assert!(f.full);
        assert!(f.component_faithful);
        assert!(!f.pi_commutative_coalgebra);
        assert!(!f.pi_commutative_comodule);
        assert!(f.w_relational_hereditary);
        assert!(f.indecomposable_coalgebra);
        assert!(f.indecomposable_comodule);
        assert!(!f.relative_irreducible_comodule);
        assert!(!f.cosemisimple);
        assert_eq!(f.socle_dim, 2);
        assert_eq!(f.minimal_closed_count, 2);
    }

    #[test]
    fn flags_of_the_standard_matrix_comodule() {
        let m = builders::standard_matrix_comodule(q(), 2).unwrap();
        let f = classify(&m, &options()).unwrap();
        assert!(f.full);
        assert!(f.component_faithful);
        assert!(f.pi_commutative_coalgebra);
        assert!(f.pi_commutative_comodule);
        assert!(f.w_relational_hereditary);
        assert!(f.indecomposable_coalgebra);
        assert!(f.indecomposable_comodule);
        assert!(f.relative_irreducible_comodule);
        assert!(f.cosemisimple);
    }

    #[test]
    fn flags_of_the_grouplike_regular_comodule() {
        let m = builders::regular_comodule(Arc::new(builders::grouplike(q(), 3).unwrap()));
        let f = classify(&m, &options()).unwrap();
        assert!(f.full);
        assert!(f.pi_commutative_coalgebra);
        assert!(f.pi_commutative_comodule);
        assert!(f.w_relational_hereditary);
        assert!(!f.indecomposable_coalgebra);
        assert!(!f.indecomposable_comodule);
        assert_eq!(f.coalgebra_class_count, 3);
        assert_eq!(f.comodule_class_count, 3);
        assert!(f.cosemisimple);
        let report = decompose_comodule(&m, &options()).unwrap();
        assert_eq!(report.summands.len(), 3);
        assert!(report.summands.iter().all(|s| s.module_summand.dim() == 1));
    }

    #[test]
    fn a_split_socle_defeats_heredity() {
        let m = split_socle_comodule();
        assert!(m.check().is_empty());
        let f = classify(&m, &options()).unwrap();
        assert!(!f.full);
        assert!(f.component_faithful);
        assert!(!f.pi_commutative_coalgebra);
        assert!(f.pi_commutative_comodule);
        assert!(!f.w_relational_hereditary);
        assert!(f.indecomposable_coalgebra);
        assert!(!f.indecomposable_comodule);
        assert!(f.cosemisimple);
        let report = decompose_comodule(&m, &options()).unwrap();
        assert_eq!(report.summands.len(), 1);
        assert_eq!(report.summands[0].cells.len(), 2);
        assert!(report.summands[0].module_summand.is_full());
    }

    #[test]
    fn a_partial_module_keeps_one_faithful_simple() {
        // M = kx over the arrow coalgebra: one faithful simple, one
        // component-free simple that lands in the zero cell.
        let c = Arc::new(arrow());
        let m = Comodule::new(
            Arc::clone(&c),
            1,
            vec![RhoEntry { source: 0, left: 0, right: 0, coeff: q().one() }],
        )
        .unwrap();
        let f = classify(&m, &options()).unwrap();
        assert!(!f.full);
        assert!(!f.component_faithful);
        assert!(f.w_relational_hereditary);
        assert!(f.indecomposable_comodule);
        assert!(f.relative_irreducible_comodule);
        assert!(f.cosemisimple);
        let report = decompose_comodule(&m, &options()).unwrap();
        assert_eq!(report.summands.len(), 1);
        let s = &report.summands[0];
        assert!(s.module_summand.is_full());
        assert_eq!(s.cells.len(), 2);
        assert!(!s.cells[0].is_zero_cell);
        assert!(s.cells[1].is_zero_cell);
        assert!(s.cells[1].tower_limit.is_zero());
    }

    #[test]
    fn zero_objects_decompose_to_nothing() {
        let zero = Coalgebra::new(q(), 0, vec![], vec![]).unwrap();
        assert!(decompose_coalgebra(&zero, WedgeMode::Verify).unwrap().is_empty());
        let m = Comodule::new(Arc::new(builders::grouplike(q(), 2).unwrap()), 0, vec![]).unwrap();
        let f = classify(&m, &options()).unwrap();
        assert!(!f.full);
        assert!(!f.component_faithful);
        assert!(f.cosemisimple);
        assert!(!f.indecomposable_comodule);
        assert!(f.w_relational_hereditary);
        let report = decompose_comodule(&m, &options()).unwrap();
        assert_eq!(report.summands.len(), 2);
        assert!(report.summands.iter().all(|s| s.module_summand.is_zero()));
    }

    #[test]
    fn the_check_catalog_is_green_across_the_corpus() {
        let instances: Vec<Comodule> = vec![
            builders::regular_comodule(Arc::new(arrow())),
            builders::regular_comodule(Arc::new(builders::grouplike(q(), 3).unwrap())),
            builders::standard_matrix_comodule(q(), 2).unwrap(),
            split_socle_comodule(),
            builders::regular_comodule(Arc::new(
                builders::direct_sum_coalgebras(
                    &builders::matrix_coalgebra(q(), 2).unwrap(),
                    &builders::grouplike(q(), 1).unwrap(),
                )
                .unwrap(),
            )),
        ];
        for m in &instances {
            let results = verify_structure(m, &options()).unwrap();
            assert!(results.len() >= 30);
            let failures: Vec<&CheckResult> =
                results.iter().filter(|r| r.status == CheckStatus::Fail).collect();
            assert!(failures.is_empty(), "failed checks: {failures:?}");
            // Names stay unique so reports are unambiguous.
            let mut names: Vec<&str> = results.iter().map(|r| r.name).collect();
            names.sort_unstable();
            names.dedup();
            assert_eq!(names.len(), results.len());
        }
    }

    #[test]
    fn hypothesis_gating_reports_not_applicable() {
        // M = kx over the arrow coalgebra is not full, so the transfer
        // checks must be skipped, not passed.
        let c = Arc::new(arrow());
        let m = Comodule::new(
            Arc::clone(&c),
            1,
            vec![RhoEntry { source: 0, left: 0, right: 0, coeff: q().one() }],
        )
        .unwrap();
        let results = verify_structure(&m, &options()).unwrap();
        let by_name = |name: &str| {
            results.iter().find(|r| r.name == name).map(|r| r.status).unwrap_or_else(|| {
                panic!("check {name} missing from the catalog");
            })
        };
        assert_eq!(
            by_name("full_hereditary_comodules_share_indecomposability_with_the_coalgebra"),
            CheckStatus::NotApplicable
        );
        assert_eq!(
            by_name("regular_comodule_decompositions_coincide"),
            CheckStatus::NotApplicable
        );
        assert_eq!(by_name("the_socle_is_closed"), CheckStatus::Pass);
        assert!(results.iter().all(|r| r.status != CheckStatus::Fail));
    }

    #[test]
    fn twisted_instances_report_identical_invariants() {
        let m = builders::regular_comodule(Arc::new(arrow()));
        let base = classify(&m, &options()).unwrap();
        for seed in [3, 41, 99] {
            let twisted = builders::randomized_basis_comodule(&m, seed);
            let f = classify(&twisted, &options()).unwrap();
            assert_eq!(f, base);
        }
    }
}
