//! Structured input records and their conversion to engine types. Every
//! record is JSON with unknown fields rejected; rationals are `"p/q"` strings
//! or integers; degree-keyed maps use integer keys written as strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use qahom::complexes::{ChainMap, Complex, ComplexError};
use qahom::dglie::{BracketSpec, DgLie, LieError};
use qahom::filtvect::{FiltError, FiltMorphism, FiltObject};
use qahom::graded::{Element, GradedAlgebra};
use qahom::koszul::PolySpec;
use qahom::linalg::{format_rational, parse_rational, Matrix, Rational};
use qahom::model::{LiftingSquare, ModelError};

use crate::report::Witness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed input: {0}")]
    Syntax(String),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

impl InputError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> InputError {
        InputError::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}

/// Why an input was not turned into an engine value: either it is malformed
/// (exit 2) or it is well formed but violates an invariant (exit 1).
#[derive(Debug, Clone, PartialEq)]
pub enum Rejection {
    Input(InputError),
    Violation(Witness),
}

impl From<InputError> for Rejection {
    fn from(e: InputError) -> Self {
        Rejection::Input(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalLit {
    Int(i64),
    Text(String),
}

impl RationalLit {
    pub fn from_rational(r: &Rational) -> RationalLit {
        RationalLit::Text(format_rational(r))
    }

    pub fn to_rational(&self, field: &str) -> Result<Rational, InputError> {
        match self {
            RationalLit::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalLit::Text(s) => {
                parse_rational(s).ok_or_else(|| InputError::field(field, format!("`{s}` is not a rational p/q")))
            }
        }
    }
}

pub type MatrixRecord = Vec<Vec<RationalLit>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectRecord {
    pub dim: usize,
    pub weights: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismRecord {
    pub source: ObjectRecord,
    pub target: ObjectRecord,
    pub matrix: MatrixRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexRecord {
    pub objects: BTreeMap<i64, ObjectRecord>,
    #[serde(default)]
    pub differentials: BTreeMap<i64, MatrixRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainMapRecord {
    pub source: ComplexRecord,
    pub target: ComplexRecord,
    #[serde(default)]
    pub components: BTreeMap<i64, MatrixRecord>,
}

/// A square `top: a -> x`, `left: a -> b`, `right: x -> y`, `bottom: b -> y`
/// whose four maps are given by their components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareRecord {
    pub a: ComplexRecord,
    pub b: ComplexRecord,
    pub x: ComplexRecord,
    pub y: ComplexRecord,
    #[serde(default)]
    pub left: BTreeMap<i64, MatrixRecord>,
    #[serde(default)]
    pub right: BTreeMap<i64, MatrixRecord>,
    #[serde(default)]
    pub top: BTreeMap<i64, MatrixRecord>,
    #[serde(default)]
    pub bottom: BTreeMap<i64, MatrixRecord>,
}

/// `[e_i, e_j] = Σ_k coeffs[k] e_k`, indices from 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<RationalLit>,
}

/// Names default to `e0, e1, …`, degrees and weights to 0 and the
/// differential (column `j` is `d e_j`) to 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieRecord {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub differential: Option<MatrixRecord>,
    #[serde(default)]
    pub brackets: Vec<BracketRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KoszulRecord {
    pub weights: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<RationalLit>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorRecord {
    pub name: String,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraRecord {
    pub generators: Vec<GeneratorRecord>,
    pub bound: usize,
}

/// The basis element `element` of the Lie algebra sends `generator` to the
/// polynomial `image`. Pairs that are not listed act by zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionRecord {
    pub element: usize,
    pub generator: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientRecord {
    pub lie: LieRecord,
    pub algebra: AlgebraRecord,
    #[serde(default)]
    pub action: Vec<ActionRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CritRecord {
    pub polynomial: String,
}

/// `prefix.name`, or `name` at the top level.
pub fn join(prefix: &str, name: &str) -> String {
    if prefix.is_empty() {
        name.to_string()
    } else {
        format!("{prefix}.{name}")
    }
}

pub fn parse_record<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Syntax(e.to_string()))
}

pub fn object(r: &ObjectRecord, field: &str) -> Result<FiltObject, InputError> {
    if r.weights.len() != r.dim {
        return Err(InputError::field(
            format!("{field}.weights"),
            format!("has {} entries but dim is {}", r.weights.len(), r.dim),
        ));
    }
    Ok(FiltObject::new(r.weights.clone()))
}

pub fn matrix(rows: &MatrixRecord, nrows: usize, ncols: usize, field: &str) -> Result<Matrix, InputError> {
    if rows.is_empty() && (nrows == 0 || ncols == 0) {
        return Ok(Matrix::zeros(nrows, ncols));
    }
    if rows.len() != nrows {
        return Err(InputError::field(
            field,
            format!("has {} rows, expected {nrows}", rows.len()),
        ));
    }
    let mut m = Matrix::zeros(nrows, ncols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(InputError::field(
                format!("{field}[{i}]"),
                format!("has {} entries, expected {ncols}", row.len()),
            ));
        }
        for (j, c) in row.iter().enumerate() {
            m.set(i, j, c.to_rational(&format!("{field}[{i}][{j}]"))?);
        }
    }
    Ok(m)
}

fn filtration_witness(field: &str, e: &FiltError) -> Option<Witness> {
    match e {
        FiltError::FiltrationViolated {
            row,
            col,
            source_weight,
            target_weight,
        } => Some(Witness::new(
            "filtration",
            serde_json::json!({ "field": field, "row": row, "col": col }),
            format!("{field}: entry ({row}, {col}) maps weight {source_weight} to weight {target_weight}"),
        )),
        _ => None,
    }
}

fn filt_rejection(field: &str, e: FiltError) -> Rejection {
    match filtration_witness(field, &e) {
        Some(w) => Rejection::Violation(w),
        None => Rejection::Input(InputError::field(field, e.to_string())),
    }
}

/// Maps an engine error on a complex or chain map read from `field` to exit
/// status semantics with a located witness where possible.
pub fn complex_rejection(field: &str, e: ComplexError) -> Rejection {
    match e {
        ComplexError::Differential { degree, source } => {
            filt_rejection(&join(field, &format!("differentials.{degree}")), source)
        }
        ComplexError::Component { degree, source } => {
            filt_rejection(&join(field, &format!("components.{degree}")), source)
        }
        ComplexError::NotSquareZero {
            degree,
            row,
            col,
            value,
        } => Rejection::Violation(Witness::new(
            "d^2 = 0",
            serde_json::json!({ "field": field, "degree": degree, "row": row, "col": col, "value": value }),
            format!("d^{} ∘ d^{degree} has entry ({row}, {col}) = {value}", degree + 1),
        )),
        ComplexError::NotChainMap { degree } => Rejection::Violation(Witness::new(
            "chain map",
            serde_json::json!({ "field": field, "degree": degree }),
            format!("map does not commute with the differentials in degree {degree}"),
        )),
        other => Rejection::Input(InputError::field(
            if field.is_empty() { "input" } else { field },
            other.to_string(),
        )),
    }
}

pub fn morphism(r: &MorphismRecord, field: &str) -> Result<FiltMorphism, Rejection> {
    let s = object(&r.source, &join(field, "source"))?;
    let t = object(&r.target, &join(field, "target"))?;
    let m = matrix(&r.matrix, t.dim(), s.dim(), &join(field, "matrix"))?;
    FiltMorphism::new(s, t, m).map_err(|e| filt_rejection(&join(field, "matrix"), e))
}

pub fn complex(r: &ComplexRecord, field: &str) -> Result<Complex, Rejection> {
    let mut objects = BTreeMap::new();
    for (n, o) in &r.objects {
        objects.insert(*n, object(o, &join(field, &format!("objects.{n}")))?);
    }
    let zero = FiltObject::new(vec![]);
    let mut diffs = BTreeMap::new();
    for (n, rows) in &r.differentials {
        let s = objects.get(n).unwrap_or(&zero);
        let t = objects.get(&(n + 1)).unwrap_or(&zero);
        diffs.insert(
            *n,
            matrix(rows, t.dim(), s.dim(), &join(field, &format!("differentials.{n}")))?,
        );
    }
    Complex::new(objects, diffs).map_err(|e| complex_rejection(field, e))
}

fn components(
    r: &BTreeMap<i64, MatrixRecord>,
    source: &Complex,
    target: &Complex,
    field: &str,
) -> Result<BTreeMap<i64, Matrix>, InputError> {
    r.iter()
        .map(|(n, rows)| {
            let m = matrix(
                rows,
                target.object(*n).dim(),
                source.object(*n).dim(),
                &format!("{field}.{n}"),
            )?;
            Ok((*n, m))
        })
        .collect()
}

fn map_between(
    source: &Complex,
    target: &Complex,
    r: &BTreeMap<i64, MatrixRecord>,
    field: &str,
) -> Result<ChainMap, Rejection> {
    let comps = components(r, source, target, field)?;
    ChainMap::new(source.clone(), target.clone(), comps).map_err(|e| match e {
        ComplexError::Component { degree, source } => filt_rejection(&format!("{field}.{degree}"), source),
        other => complex_rejection(field, other),
    })
}

pub fn chain_map(r: &ChainMapRecord, field: &str) -> Result<ChainMap, Rejection> {
    let s = complex(&r.source, &join(field, "source"))?;
    let t = complex(&r.target, &join(field, "target"))?;
    map_between(&s, &t, &r.components, &join(field, "components"))
}

pub fn square(r: &SquareRecord) -> Result<LiftingSquare, Rejection> {
    let a = complex(&r.a, "a")?;
    let b = complex(&r.b, "b")?;
    let x = complex(&r.x, "x")?;
    let y = complex(&r.y, "y")?;
    let left = map_between(&a, &b, &r.left, "left")?;
    let right = map_between(&x, &y, &r.right, "right")?;
    let top = map_between(&a, &x, &r.top, "top")?;
    let bottom = map_between(&b, &y, &r.bottom, "bottom")?;
    LiftingSquare::new(left, right, top, bottom).map_err(|e| match e {
        ModelError::NonCommuting { degree } => Rejection::Violation(Witness::new(
            "commuting square",
            serde_json::json!({ "degree": degree }),
            format!("right ∘ top and bottom ∘ left differ in degree {degree}"),
        )),
        other => Rejection::Input(InputError::field("square", other.to_string())),
    })
}

/// Builds the Lie algebra without checking its axioms.
pub fn lie_unchecked(r: &LieRecord, field: &str) -> Result<DgLie, Rejection> {
    let n = r.dim;
    let check_len = |len: usize, name: &str| {
        if len == n {
            Ok(())
        } else {
            Err(InputError::field(
                join(field, name),
                format!("has {len} entries but dim is {n}"),
            ))
        }
    };
    let names = match &r.names {
        Some(v) => {
            check_len(v.len(), "names")?;
            v.clone()
        }
        None => (0..n).map(|i| format!("e{i}")).collect(),
    };
    let degrees = match &r.degrees {
        Some(v) => {
            check_len(v.len(), "degrees")?;
            v.clone()
        }
        None => vec![0; n],
    };
    let weights = match &r.weights {
        Some(v) => {
            check_len(v.len(), "weights")?;
            v.clone()
        }
        None => vec![0; n],
    };
    let differential = match &r.differential {
        Some(rows) => matrix(rows, n, n, &join(field, "differential"))?,
        None => Matrix::zeros(n, n),
    };
    let mut brackets = Vec::new();
    for (t, b) in r.brackets.iter().enumerate() {
        let f = join(field, &format!("brackets[{t}]"));
        if b.i >= n || b.j >= n {
            return Err(InputError::field(f, format!("index out of range for dim {n}")).into());
        }
        if b.coeffs.len() != n {
            return Err(InputError::field(
                format!("{f}.coeffs"),
                format!("has {} entries, expected {n}", b.coeffs.len()),
            )
            .into());
        }
        let coeffs = b
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_rational(&format!("{f}.coeffs[{k}]")))
            .collect::<Result<Vec<_>, _>>()?;
        brackets.push(BracketSpec { i: b.i, j: b.j, coeffs });
    }
    DgLie::new_deferred(names, degrees, weights, differential, brackets).map_err(|e| lie_rejection(field, e))
}

pub fn lie_rejection(field: &str, e: LieError) -> Rejection {
    match e {
        LieError::Axioms(v) => Rejection::Violation(Witness::new(
            &v.axiom.to_string(),
            serde_json::json!({
                "field": field,
                "indices": v.indices,
                "names": v.names,
                "defect": v.defect.iter().map(format_rational).collect::<Vec<_>>(),
            }),
            v.to_string(),
        )),
        other => Rejection::Input(InputError::field(field, other.to_string())),
    }
}

/// Builds the Lie algebra and rejects it if an axiom fails.
pub fn lie(r: &LieRecord, field: &str) -> Result<DgLie, Rejection> {
    let g = lie_unchecked(r, field)?;
    let report = qahom::dglie::check_lie_axioms(&g);
    match report.violations.into_iter().next() {
        Some(v) => Err(lie_rejection(field, LieError::Axioms(v))),
        None => Ok(g),
    }
}

pub fn point(values: &[RationalLit], field: &str) -> Result<Vec<Rational>, InputError> {
    values
        .iter()
        .enumerate()
        .map(|(i, c)| c.to_rational(&format!("{field}[{i}]")))
        .collect()
}

/// Reads a polynomial from plain text or from a `{"polynomial": …}` record.
pub fn polynomial(text: &str) -> Result<PolySpec, InputError> {
    let trimmed = text.trim();
    let (source, field) = if trimmed.starts_with('{') {
        (parse_record::<CritRecord>(trimmed)?.polynomial, "polynomial")
    } else {
        (trimmed.to_string(), "input")
    };
    PolySpec::parse(&source).map_err(|e| InputError::field(field, e.to_string()))
}

/// Converts a polynomial in the algebra's generator names to an element of
/// the (graded-commutative) algebra.
pub fn algebra_element(a: &GradedAlgebra, text: &str, field: &str) -> Result<Element, InputError> {
    let p = PolySpec::parse(text).map_err(|e| InputError::field(field, e.to_string()))?;
    let index: Vec<usize> = p
        .vars
        .iter()
        .map(|v| {
            a.generators()
                .iter()
                .position(|g| &g.name == v)
                .ok_or_else(|| InputError::field(field, format!("unknown generator `{v}`")))
        })
        .collect::<Result<_, _>>()?;
    let mut out = Element::new();
    for (exps, c) in &p.terms {
        let mut word = Vec::new();
        for (v, &k) in exps.iter().enumerate() {
            word.extend(std::iter::repeat_n(index[v], k as usize));
        }
        let (sign, w) = a
            .normalize(&word)
            .ok_or_else(|| InputError::field(field, "term vanishes by graded commutativity"))?;
        qahom::graded::add_term(&mut out, w, c * Rational::from_integer(sign.into()));
    }
    Ok(out)
}

pub fn object_record(v: &FiltObject) -> ObjectRecord {
    ObjectRecord {
        dim: v.dim(),
        weights: v.weights().to_vec(),
    }
}

pub fn matrix_record(m: &Matrix) -> MatrixRecord {
    let (r, c) = m.shape();
    (0..r)
        .map(|i| (0..c).map(|j| RationalLit::from_rational(m.get(i, j))).collect())
        .collect()
}

pub fn morphism_record(f: &FiltMorphism) -> MorphismRecord {
    MorphismRecord {
        source: object_record(f.source()),
        target: object_record(f.target()),
        matrix: matrix_record(f.matrix()),
    }
}

pub fn complex_record(x: &Complex) -> ComplexRecord {
    ComplexRecord {
        objects: x.objects().iter().map(|(n, v)| (*n, object_record(v))).collect(),
        differentials: x
            .support()
            .into_iter()
            .filter(|n| !x.differential_matrix(*n).is_zero())
            .map(|n| (n, matrix_record(&x.differential_matrix(n))))
            .collect(),
    }
}

pub fn chain_map_record(f: &ChainMap) -> ChainMapRecord {
    ChainMapRecord {
        source: complex_record(f.source()),
        target: complex_record(f.target()),
        components: f
            .degrees()
            .into_iter()
            .filter(|n| !f.component_matrix(*n).is_zero())
            .map(|n| (n, matrix_record(&f.component_matrix(n))))
            .collect(),
    }
}

pub fn lie_record(g: &DgLie) -> LieRecord {
    LieRecord {
        dim: g.dim(),
        names: Some(g.names().to_vec()),
        degrees: Some(g.degrees().to_vec()),
        weights: Some(g.weights().to_vec()),
        differential: g.has_differential().then(|| matrix_record(g.differential())),
        brackets: g
            .bracket_specs()
            .into_iter()
            .filter(|b| b.i <= b.j)
            .map(|b| BracketRecord {
                i: b.i,
                j: b.j,
                coeffs: b.coeffs.iter().map(RationalLit::from_rational).collect(),
            })
            .collect(),
    }
}

pub fn square_record(sq: &LiftingSquare) -> SquareRecord {
    let comps = |f: &ChainMap| chain_map_record(f).components;
    SquareRecord {
        a: complex_record(sq.left.source()),
        b: complex_record(sq.left.target()),
        x: complex_record(sq.right.source()),
        y: complex_record(sq.right.target()),
        left: comps(&sq.left),
        right: comps(&sq.right),
        top: comps(&sq.top),
        bottom: comps(&sq.bottom),
    }
}
