//! The on-disk instance format.
//!
//! An instance is a single JSON object: a field selector, a coalgebra given
//! by sparse comultiplication entries and a counit row, an optional comodule
//! given by sparse coaction entries, and optional named subspaces. Every
//! scalar is a string — integers, fractions in lowest terms over the
//! rationals, residues in `[0, p)` over a prime field — so parsing is exact
//! and `parse(serialize(doc)) == doc` holds on the nose.

use std::collections::BTreeMap;
use std::sync::Arc;

use comodec_core::{
    Coalgebra, Comodule, DeltaEntry, Error, Field, Result, RhoEntry, Subspace,
};
use serde::{Deserialize, Serialize};

/// Ground field selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldSpec {
    /// Exact rational arithmetic.
    Rationals,
    /// Arithmetic modulo the given prime.
    Prime { p: u64 },
}

/// One comultiplication structure constant:
/// `Δ(basis[source]) += coeff · basis[left] ⊗ basis[right]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaEntrySpec {
    pub source: usize,
    pub left: usize,
    pub right: usize,
    pub coeff: String,
}

/// One coaction structure constant:
/// `ρ(module[source]) += coeff · module[left] ⊗ coalgebra[right]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RhoEntrySpec {
    pub source: usize,
    pub left: usize,
    pub right: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraSpec {
    pub dim: usize,
    pub delta: Vec<DeltaEntrySpec>,
    pub counit: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleSpec {
    pub dim: usize,
    pub rho: Vec<RhoEntrySpec>,
}

/// A parsed instance file. Named subspaces are lists of vectors whose length
/// must match either the coalgebra dimension or the module dimension; which
/// of the two a command expects is decided by the command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub coalgebra: CoalgebraSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comodule: Option<ComoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subspaces: BTreeMap<String, Vec<Vec<String>>>,
}

/// Parses an instance file. Errors carry the line/column position reported
/// by the JSON reader.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))
}

/// Canonical rendering: pretty-printed JSON with declared key order, map
/// keys sorted, and a trailing newline. Identical documents serialize to
/// identical bytes.
pub fn serialize_input(doc: &InputDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

/// A document resolved into live engine objects.
#[derive(Debug)]
pub struct BuiltDocument {
    pub coalgebra: Arc<Coalgebra>,
    pub comodule: Option<Comodule>,
    pub subspaces: BTreeMap<String, Subspace>,
}

/// Prefixes `Invalid` messages with the document path they arose from;
/// refusals and internal failures pass through untouched.
fn tag(context: &str, e: Error) -> Error {
    match e {
        Error::Invalid(msg) => Error::Invalid(format!("{context}: {msg}")),
        other => other,
    }
}

/// Checks ranges, scalar syntax, and duplicate entries, then builds the
/// engine objects. Every error names the offending document location.
pub fn build(doc: &InputDocument) -> Result<BuiltDocument> {
    let field = match doc.field {
        FieldSpec::Rationals => Field::Rationals,
        FieldSpec::Prime { p } => Field::prime(p).map_err(|e| tag("field.p", e))?,
    };

    let spec = &doc.coalgebra;
    let mut delta = Vec::with_capacity(spec.delta.len());
    for (i, entry) in spec.delta.iter().enumerate() {
        let coeff = field
            .parse_scalar(&entry.coeff)
            .map_err(|e| tag(&format!("coalgebra.delta[{i}].coeff"), e))?;
        delta.push(DeltaEntry {
            source: entry.source,
            left: entry.left,
            right: entry.right,
            coeff,
        });
    }
    let mut counit = Vec::with_capacity(spec.counit.len());
    for (i, s) in spec.counit.iter().enumerate() {
        counit.push(
            field
                .parse_scalar(s)
                .map_err(|e| tag(&format!("coalgebra.counit[{i}]"), e))?,
        );
    }
    let coalgebra = Arc::new(
        Coalgebra::new(field, spec.dim, delta, counit).map_err(|e| tag("coalgebra", e))?,
    );

    let comodule = match &doc.comodule {
        None => None,
        Some(spec) => {
            let mut rho = Vec::with_capacity(spec.rho.len());
            for (i, entry) in spec.rho.iter().enumerate() {
                let coeff = field
                    .parse_scalar(&entry.coeff)
                    .map_err(|e| tag(&format!("comodule.rho[{i}].coeff"), e))?;
                rho.push(RhoEntry {
                    source: entry.source,
                    left: entry.left,
                    right: entry.right,
                    coeff,
                });
            }
            Some(
                Comodule::new(Arc::clone(&coalgebra), spec.dim, rho)
                    .map_err(|e| tag("comodule", e))?,
            )
        }
    };

    let module_dim = comodule.as_ref().map(|m| m.dim());
    let mut subspaces = BTreeMap::new();
    for (name, vectors) in &doc.subspaces {
        let ambient = match vectors.first() {
            Some(v) => v.len(),
            None => {
                return Err(Error::Invalid(format!(
                    "subspaces.{name}: empty vector list; spell the zero space \
                     as a single zero vector"
                )));
            }
        };
        if ambient != coalgebra.dim() && Some(ambient) != module_dim {
            return Err(Error::Invalid(format!(
                "subspaces.{name}: vectors have {ambient} coordinates, matching \
                 neither the coalgebra dimension nor the module dimension"
            )));
        }
        let mut rows = Vec::with_capacity(vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != ambient {
                return Err(Error::Invalid(format!(
                    "subspaces.{name}[{i}]: expected {ambient} coordinates, found {}",
                    v.len()
                )));
            }
            let mut row = Vec::with_capacity(ambient);
            for (j, s) in v.iter().enumerate() {
                row.push(
                    field
                        .parse_scalar(s)
                        .map_err(|e| tag(&format!("subspaces.{name}[{i}][{j}]"), e))?,
                );
            }
            rows.push(row);
        }
        subspaces.insert(name.clone(), Subspace::from_rows(field, ambient, rows));
    }

    Ok(BuiltDocument { coalgebra, comodule, subspaces })
}

/// Renders live engine objects back into a document, e.g. for `gen`.
pub fn document_for(c: &Coalgebra, m: Option<&Comodule>) -> InputDocument {
    let field = match c.field() {
        Field::Rationals => FieldSpec::Rationals,
        Field::Prime(p) => FieldSpec::Prime { p },
    };
    InputDocument {
        field,
        coalgebra: CoalgebraSpec {
            dim: c.dim(),
            delta: c
                .delta_entries()
                .iter()
                .map(|e| DeltaEntrySpec {
                    source: e.source,
                    left: e.left,
                    right: e.right,
                    coeff: e.coeff.to_string(),
                })
                .collect(),
            counit: c.counit().iter().map(|x| x.to_string()).collect(),
        },
        comodule: m.map(|m| ComoduleSpec {
            dim: m.dim(),
            rho: m
                .rho_entries()
                .iter()
                .map(|e| RhoEntrySpec {
                    source: e.source,
                    left: e.left,
                    right: e.right,
                    coeff: e.coeff.to_string(),
                })
                .collect(),
        }),
        subspaces: BTreeMap::new(),
    }
}
