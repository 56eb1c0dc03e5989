//! Report shapes and their canonical JSON rendering.
//!
//! Reports are plain data: canonical subspace bases rendered as string
//! scalars, keys in declared order, map-free except for sorted maps. The
//! same input therefore always produces byte-identical report text.

use comodec_core::{
    CheckResult, Classification, Comodule, DecompositionReport, LinkGraph, Subcoalgebra, Subspace,
};
use serde::Serialize;

/// Pretty JSON plus a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    text
}

/// A subspace as its canonical (reduced row echelon) basis.
#[derive(Serialize)]
pub struct SubspaceOut {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl SubspaceOut {
    pub fn of(s: &Subspace) -> SubspaceOut {
        SubspaceOut {
            dim: s.dim(),
            basis: s
                .basis_rows()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }

    pub fn of_subcoalgebra(d: &Subcoalgebra) -> SubspaceOut {
        SubspaceOut::of(d.space())
    }
}

#[derive(Serialize)]
pub struct CheckOut {
    pub ok: bool,
    pub coalgebra_violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comodule_violations: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct CoradicalOut {
    pub coradical: SubspaceOut,
    /// Dimensions along the wedge filtration of the coradical, ending at the
    /// full coalgebra.
    pub filtration_dims: Vec<usize>,
}

#[derive(Serialize)]
pub struct SimplesOut {
    pub count: usize,
    pub simples: Vec<SubspaceOut>,
}

#[derive(Serialize)]
pub struct WedgeOut {
    /// `"coalgebra"` or `"module"`.
    pub ambient: &'static str,
    pub left: String,
    pub right: String,
    pub wedge: SubspaceOut,
}

#[derive(Serialize)]
pub struct ClosureOut {
    pub name: String,
    pub input_dim: usize,
    pub closure: SubspaceOut,
    pub input_closed: bool,
    /// `"true"`, `"false"`, or `"unknown"` — the sampled verdict on whether
    /// every member generates inside the input.
    pub input_weak_closed: &'static str,
}

#[derive(Serialize)]
pub struct ComponentOut {
    pub over: String,
    pub component: SubspaceOut,
}

#[derive(Serialize)]
pub struct SocleOut {
    pub socle: SubspaceOut,
    /// Dimensions along the wedge filtration of the socle, ending at the
    /// full module.
    pub filtration_dims: Vec<usize>,
    pub cosemisimple: bool,
}

#[derive(Serialize)]
pub struct GraphOut {
    /// Canonical bases of the graph vertices (simple subcoalgebras, or
    /// minimal closed subcomodules on the module side).
    pub vertices: Vec<SubspaceOut>,
    /// Vertex index pairs whose wedges differ in the two orders.
    pub edges: Vec<(usize, usize)>,
    /// Connected components, each a sorted list of vertex indices.
    pub classes: Vec<Vec<usize>>,
}

impl GraphOut {
    pub fn of(g: &LinkGraph) -> GraphOut {
        GraphOut {
            vertices: g.vertices.iter().map(SubspaceOut::of).collect(),
            edges: g.edges.clone(),
            classes: g.classes.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct CellOut {
    pub simples: Vec<SubspaceOut>,
    pub zero_cell: bool,
    /// The stabilized wedge tower over the cell — the summand slice this
    /// cell contributes.
    pub span: SubspaceOut,
}

#[derive(Serialize)]
pub struct SummandOut {
    pub simples: Vec<SubspaceOut>,
    pub coalgebra_summand: SubspaceOut,
    pub module_summand: SubspaceOut,
    pub cells: Vec<CellOut>,
}

#[derive(Serialize)]
pub struct CoalgebraDecompositionOut {
    pub dim: usize,
    pub graph: GraphOut,
    pub summands: Vec<SubspaceOut>,
}

#[derive(Serialize)]
pub struct ComoduleDecompositionOut {
    pub dim: usize,
    pub graph: GraphOut,
    /// Nonzero indecomposable summands only.
    pub summands: Vec<SummandOut>,
    /// Indices of coalgebra summands whose module part is zero — the
    /// implicit zero class.
    pub zero_classes: Vec<usize>,
}

#[derive(Serialize)]
pub struct DecomposeOut {
    pub coalgebra: CoalgebraDecompositionOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comodule: Option<ComoduleDecompositionOut>,
}

impl DecomposeOut {
    pub fn of_report(m: &Comodule, report: &DecompositionReport) -> DecomposeOut {
        DecomposeOut {
            coalgebra: CoalgebraDecompositionOut {
                dim: m.coalgebra().dim(),
                graph: GraphOut::of(&report.coalgebra_graph),
                summands: report
                    .coalgebra_summands
                    .iter()
                    .map(SubspaceOut::of_subcoalgebra)
                    .collect(),
            },
            comodule: Some(ComoduleDecompositionOut {
                dim: m.dim(),
                graph: GraphOut::of(&report.comodule_graph),
                summands: report
                    .summands
                    .iter()
                    .filter(|a| a.module_summand.dim() > 0)
                    .map(|a| SummandOut {
                        simples: a.simples.iter().map(SubspaceOut::of_subcoalgebra).collect(),
                        coalgebra_summand: SubspaceOut::of_subcoalgebra(&a.coalgebra_summand),
                        module_summand: SubspaceOut::of(&a.module_summand),
                        cells: a
                            .cells
                            .iter()
                            .map(|cell| CellOut {
                                simples: cell
                                    .simples
                                    .iter()
                                    .map(SubspaceOut::of_subcoalgebra)
                                    .collect(),
                                zero_cell: cell.is_zero_cell,
                                span: SubspaceOut::of(&cell.tower_limit),
                            })
                            .collect(),
                    })
                    .collect(),
                zero_classes: report
                    .summands
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.module_summand.dim() == 0)
                    .map(|(i, _)| i)
                    .collect(),
            }),
        }
    }
}

/// Classification flags under their report names.
#[derive(Serialize)]
pub struct FlagsOut {
    pub full: bool,
    pub component_faithful: bool,
    #[serde(rename = "pi_commutative_C")]
    pub pi_commutative_c: bool,
    #[serde(rename = "pi_commutative_M")]
    pub pi_commutative_m: bool,
    pub w_relational_hereditary: bool,
    #[serde(rename = "indecomposable_C")]
    pub indecomposable_c: bool,
    #[serde(rename = "indecomposable_M")]
    pub indecomposable_m: bool,
    #[serde(rename = "relative_irreducible_M")]
    pub relative_irreducible_m: bool,
    pub cosemisimple: bool,
}

#[derive(Serialize)]
pub struct ClassifyOut {
    pub flags: FlagsOut,
    pub coalgebra_link_classes: usize,
    pub comodule_link_classes: usize,
    pub minimal_closed_count: usize,
    pub socle_dim: usize,
}

impl ClassifyOut {
    pub fn of(c: &Classification) -> ClassifyOut {
        ClassifyOut {
            flags: FlagsOut {
                full: c.full,
                component_faithful: c.component_faithful,
                pi_commutative_c: c.pi_commutative_coalgebra,
                pi_commutative_m: c.pi_commutative_comodule,
                w_relational_hereditary: c.w_relational_hereditary,
                indecomposable_c: c.indecomposable_coalgebra,
                indecomposable_m: c.indecomposable_comodule,
                relative_irreducible_m: c.relative_irreducible_comodule,
                cosemisimple: c.cosemisimple,
            },
            coalgebra_link_classes: c.coalgebra_class_count,
            comodule_link_classes: c.comodule_class_count,
            minimal_closed_count: c.minimal_closed_count,
            socle_dim: c.socle_dim,
        }
    }
}

#[derive(Serialize)]
pub struct CheckLineOut {
    pub name: &'static str,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub checks: Vec<CheckLineOut>,
}

impl VerifyOut {
    pub fn of(results: &[CheckResult]) -> VerifyOut {
        use comodec_core::CheckStatus;
        let count = |status: CheckStatus| results.iter().filter(|r| r.status == status).count();
        VerifyOut {
            passed: count(CheckStatus::Pass),
            failed: count(CheckStatus::Fail),
            not_applicable: count(CheckStatus::NotApplicable),
            checks: results
                .iter()
                .map(|r| CheckLineOut {
                    name: r.name,
                    status: r.status.as_str(),
                    note: r.note.clone(),
                })
                .collect(),
        }
    }
}
