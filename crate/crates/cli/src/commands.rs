//! One function per command. Each reads its input text, runs the engine and
//! returns structured results with human-readable lines.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde_json::{json, Value};

use qahom::complexes::{self, ChainMap};
use qahom::dglie::{self, Action, DgLie, LieError};
use qahom::filtvect::FiltObject;
use qahom::graded::{Element, Word};
use qahom::koszul::{self, KoszulError};
use qahom::linalg::format_rational;
use qahom::model::{self, MorphismClassification};

use crate::input::{self, InputError, Rejection};
use crate::report::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CommandKind {
    Cohomology,
    ClassifyMap,
    CheckLift,
    Factor,
    ResolveCe,
    ResolveKoszul,
    Pbw,
    LieCheck,
    DerivedQuotient,
    Crit,
    Selftest,
}

impl CommandKind {
    pub const ALL: [CommandKind; 11] = [
        CommandKind::Cohomology,
        CommandKind::ClassifyMap,
        CommandKind::CheckLift,
        CommandKind::Factor,
        CommandKind::ResolveCe,
        CommandKind::ResolveKoszul,
        CommandKind::Pbw,
        CommandKind::LieCheck,
        CommandKind::DerivedQuotient,
        CommandKind::Crit,
        CommandKind::Selftest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Cohomology => "cohomology",
            CommandKind::ClassifyMap => "classify-map",
            CommandKind::CheckLift => "check-lift",
            CommandKind::Factor => "factor",
            CommandKind::ResolveCe => "resolve-ce",
            CommandKind::ResolveKoszul => "resolve-koszul",
            CommandKind::Pbw => "pbw",
            CommandKind::LieCheck => "lie-check",
            CommandKind::DerivedQuotient => "derived-quotient",
            CommandKind::Crit => "crit",
            CommandKind::Selftest => "selftest",
        }
    }

    pub fn from_name(name: &str) -> Option<CommandKind> {
        CommandKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

pub const DEFAULT_KOSZUL_DEGREE: usize = 6;
pub const DEFAULT_CRIT_DEGREE: usize = 8;
pub const DEFAULT_WEIGHT: usize = 4;
pub const DEFAULT_PBW: usize = 6;
pub const DEFAULT_SEED: u64 = 20240229;

/// Command-line bounds. `None` selects the per-command default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub degree_bound: Option<usize>,
    pub weight_bound: Option<usize>,
    pub pbw_bound: Option<usize>,
    pub seed: Option<u64>,
}

impl Options {
    /// The options a command actually uses, with defaults filled in.
    pub fn effective(&self, kind: CommandKind) -> Value {
        match kind {
            CommandKind::ResolveKoszul => json!({ "degree_bound": self.degree_bound.unwrap_or(DEFAULT_KOSZUL_DEGREE) }),
            CommandKind::Crit => json!({ "degree_bound": self.degree_bound.unwrap_or(DEFAULT_CRIT_DEGREE) }),
            CommandKind::ResolveCe | CommandKind::DerivedQuotient => {
                json!({ "weight_bound": self.weight_bound.unwrap_or(DEFAULT_WEIGHT) })
            }
            CommandKind::Pbw => json!({ "pbw_bound": self.pbw_bound.unwrap_or(DEFAULT_PBW) }),
            CommandKind::Selftest => json!({ "seed": self.seed.unwrap_or(DEFAULT_SEED) }),
            _ => json!({}),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub passed: bool,
    pub result: Value,
    pub lines: Vec<String>,
}

impl Outcome {
    fn new(passed: bool, result: Value, lines: Vec<String>) -> Outcome {
        Outcome { passed, result, lines }
    }
}

pub fn execute(kind: CommandKind, text: &str, opts: &Options) -> Result<Outcome, Rejection> {
    match kind {
        CommandKind::Cohomology => cohomology(text),
        CommandKind::ClassifyMap => classify_map(text),
        CommandKind::CheckLift => check_lift(text),
        CommandKind::Factor => factor(text),
        CommandKind::ResolveCe => resolve_ce(text, opts.weight_bound.unwrap_or(DEFAULT_WEIGHT)),
        CommandKind::ResolveKoszul => resolve_koszul(text, opts.degree_bound.unwrap_or(DEFAULT_KOSZUL_DEGREE)),
        CommandKind::Pbw => pbw(text, opts.pbw_bound.unwrap_or(DEFAULT_PBW)),
        CommandKind::LieCheck => lie_check(text),
        CommandKind::DerivedQuotient => derived_quotient(text, opts.weight_bound.unwrap_or(DEFAULT_WEIGHT)),
        CommandKind::Crit => crit(text, opts.degree_bound.unwrap_or(DEFAULT_CRIT_DEGREE)),
        CommandKind::Selftest => Ok(crate::selftest::selftest(opts.seed.unwrap_or(DEFAULT_SEED))),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn fmt_map<K: Display, V: Display>(m: &BTreeMap<K, V>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn fmt_weights(v: &FiltObject) -> String {
    let parts: Vec<String> = v.weights().iter().map(|w| w.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_word(names: &[String], w: &Word) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("·")
    }
}

fn fmt_matrix(m: &qahom::linalg::Matrix) -> String {
    let (r, c) = m.shape();
    let rows: Vec<String> = (0..r)
        .map(|i| {
            let row: Vec<String> = (0..c).map(|j| format_rational(m.get(i, j))).collect();
            format!("[{}]", row.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn violation_outcome(w: Witness) -> Outcome {
    Outcome::new(
        false,
        json!({ "violations": [w] }),
        vec![format!("violation ({}): {}", w.property, w.message)],
    )
}

/// Converts an invariant violation found while reading the input into a
/// failed outcome, keeping input errors as errors.
pub fn settle(r: Result<Outcome, Rejection>) -> Result<Outcome, InputError> {
    match r {
        Ok(o) => Ok(o),
        Err(Rejection::Violation(w)) => Ok(violation_outcome(w)),
        Err(Rejection::Input(e)) => Err(e),
    }
}

fn cohomology(text: &str) -> Result<Outcome, Rejection> {
    let x = input::complex(&input::parse_record(text)?, "")?;
    let h = complexes::cohomology(&x);
    let mut lines = Vec::new();
    if h.is_empty() {
        lines.push("complex is zero".to_string());
    }
    for (n, v) in &h {
        if v.is_zero() {
            lines.push(format!("H^{n} = 0"));
        } else {
            lines.push(format!("H^{n}: dim {}, weights {}", v.dim(), fmt_weights(v)));
        }
    }
    let acyclic = h.values().all(|v| v.is_zero());
    lines.push(format!("acyclic: {}", yes(acyclic)));
    let records: BTreeMap<i64, input::ObjectRecord> = h.iter().map(|(n, v)| (*n, input::object_record(v))).collect();
    Ok(Outcome::new(
        true,
        json!({ "cohomology": records, "acyclic": acyclic }),
        lines,
    ))
}

fn classification_value(c: &MorphismClassification) -> Value {
    json!({
        "degreewise_mono": c.degreewise_mono,
        "degreewise_epi": c.degreewise_epi,
        "degreewise_strict_mono": c.degreewise_strict_mono,
        "degreewise_strict_epi": c.degreewise_strict_epi,
        "reduced_qiso": c.reduced_qiso,
        "injective_cofibration": c.injective_cofibration(),
        "injective_trivial_cofibration": c.injective_trivial_cofibration(),
        "projective_fibration": c.projective_fibration(),
        "projective_trivial_fibration": c.projective_trivial_fibration(),
    })
}

/// Reads either a chain map record or a single morphism, which is taken as
/// a chain map concentrated in degree 0.
fn map_input(text: &str) -> Result<ChainMap, Rejection> {
    let value: Value = serde_json::from_str(text).map_err(|e| InputError::Syntax(e.to_string()))?;
    if value.get("components").is_some() || value.get("source").and_then(|s| s.get("objects")).is_some() {
        input::chain_map(&input::parse_record(text)?, "")
    } else {
        let f = input::morphism(&input::parse_record(text)?, "")?;
        Ok(ChainMap::concentrated(&f, 0))
    }
}

fn classify_map(text: &str) -> Result<Outcome, Rejection> {
    let f = map_input(text)?;
    let c = model::classify(&f);
    let mut lines = vec![
        format!(
            "mono: {}, strict mono: {}, fibration: {}, weak equivalence: {}",
            yes(c.degreewise_mono),
            yes(c.degreewise_strict_mono),
            yes(c.projective_fibration()),
            yes(c.weak_equivalence())
        ),
        format!(
            "epi: {}, strict epi: {}, cofibration: {}, trivial cofibration: {}, trivial fibration: {}",
            yes(c.degreewise_epi),
            yes(c.degreewise_strict_epi),
            yes(c.injective_cofibration()),
            yes(c.injective_trivial_cofibration()),
            yes(c.projective_trivial_fibration())
        ),
    ];
    let first = complexes::first_non_iso_degree(&f);
    if let Some(n) = first {
        lines.push(format!("cohomology map is not an isomorphism in degree {n}"));
    }
    let mut result = classification_value(&c);
    result["first_non_iso_degree"] = json!(first);
    Ok(Outcome::new(true, result, lines))
}

fn check_lift(text: &str) -> Result<Outcome, Rejection> {
    let sq = input::square(&input::parse_record(text)?)?;
    let left = model::classify(&sq.left);
    let right = model::classify(&sq.right);
    let mut lines = vec![
        format!(
            "left: cofibration {}, trivial cofibration {}",
            yes(left.injective_cofibration()),
            yes(left.injective_trivial_cofibration())
        ),
        format!(
            "right: fibration {}, trivial fibration {}",
            yes(right.projective_fibration()),
            yes(right.projective_trivial_fibration())
        ),
    ];
    let space = model::lift_space(&sq);
    let result = match &space {
        Some(s) => {
            lines.push(format!(
                "lift: found (solution space of dimension {})",
                s.homogeneous.len()
            ));
            for n in s.particular.degrees() {
                let m = s.particular.component_matrix(n);
                if m.shape().0 > 0 && m.shape().1 > 0 {
                    lines.push(format!("  h^{n} = {}", fmt_matrix(&m)));
                }
            }
            json!({
                "left": classification_value(&left),
                "right": classification_value(&right),
                "lift": input::chain_map_record(&s.particular),
                "solution_space_dim": s.homogeneous.len(),
            })
        }
        None => {
            lines.push("lift: none (no filtered chain map solves the square)".to_string());
            json!({
                "left": classification_value(&left),
                "right": classification_value(&right),
                "lift": Value::Null,
            })
        }
    };
    Ok(Outcome::new(true, result, lines))
}

fn factor(text: &str) -> Result<Outcome, Rejection> {
    let f = input::morphism(&input::parse_record(text)?, "")?;
    let a = f.factor();
    let b = f.factor_through_image();
    let first_ok = a.recompose() == f && a.strict_epi.is_strict_epi() && a.mono.is_mono();
    let second_ok = b.recompose() == f && b.epi.is_epi() && b.strict_mono.is_strict_mono();
    let lines = vec![
        format!(
            "strict epi then mono through the coimage, weights {}: {}",
            fmt_weights(a.mono.source()),
            if first_ok { "recomposes exactly" } else { "FAILED" }
        ),
        format!(
            "epi then strict mono through the image, weights {}: {}",
            fmt_weights(b.strict_mono.source()),
            if second_ok { "recomposes exactly" } else { "FAILED" }
        ),
        format!("strict: {}", yes(f.is_strict())),
    ];
    let result = json!({
        "coimage_factorization": {
            "strict_epi": input::morphism_record(&a.strict_epi),
            "mono": input::morphism_record(&a.mono),
        },
        "image_factorization": {
            "epi": input::morphism_record(&b.epi),
            "strict_mono": input::morphism_record(&b.strict_mono),
        },
        "strict": f.is_strict(),
    });
    Ok(Outcome::new(first_ok && second_ok, result, lines))
}

fn lie_input(text: &str) -> Result<DgLie, Rejection> {
    input::lie(&input::parse_record(text)?, "")
}

fn unsupported(field: &str, e: LieError) -> Rejection {
    input::lie_rejection(field, e)
}

fn resolve_ce(text: &str, weight_bound: usize) -> Result<Outcome, Rejection> {
    let g = lie_input(text)?;
    let w = weight_bound as i64;
    let field = if g.degrees().iter().any(|&p| p != 0) {
        "degrees"
    } else if g.has_differential() {
        "differential"
    } else {
        "weights"
    };
    let res = dglie::ce_resolution(&g, w).map_err(|e| unsupported(field, e))?;
    let report = dglie::verify_ce_acyclicity(&res, w);
    let names = res.uea().lie().names().to_vec();
    let mut lines = Vec::new();
    let mut strands = Vec::new();
    for s in &report.strands {
        lines.push(format!(
            "weight {}: dims {}, cohomology {}",
            s.weight,
            fmt_map(&s.dims),
            if s.cohomology.is_empty() {
                "0".to_string()
            } else {
                fmt_map(&s.cohomology)
            }
        ));
        strands.push(json!({ "weight": s.weight, "dims": s.dims, "cohomology": s.cohomology }));
    }
    let mut violations = Vec::new();
    for w in &report.square_zero_failures {
        violations.push(Witness::new(
            "d^2 = 0",
            json!({ "word": fmt_word(&names, w) }),
            format!("d^2 is nonzero on {}", fmt_word(&names, w)),
        ));
    }
    if !report.augmentation_is_chain_map {
        violations.push(Witness::new(
            "augmentation",
            json!({}),
            "augmentation is not a chain map".into(),
        ));
    }
    if !report.augmentation_iso_in_weight_zero {
        violations.push(Witness::new(
            "augmentation",
            json!({ "weight": 0 }),
            "augmentation is not an isomorphism in weight 0".into(),
        ));
    }
    for s in &report.strands {
        let expected: BTreeMap<i64, usize> = if s.weight == 0 {
            BTreeMap::from([(0, 1)])
        } else {
            BTreeMap::new()
        };
        if s.cohomology != expected {
            violations.push(Witness::new(
                "exactness",
                json!({ "weight": s.weight }),
                format!("weight {} has cohomology {}", s.weight, fmt_map(&s.cohomology)),
            ));
        }
    }
    let passed = report.passed();
    lines.push(format!(
        "resolution of the ground field: {}",
        if passed { "verified" } else { "FAILED" }
    ));
    for v in &violations {
        lines.push(format!("violation ({}): {}", v.property, v.message));
    }
    Ok(Outcome::new(
        passed,
        json!({ "strands": strands, "violations": violations }),
        lines,
    ))
}

fn koszul_rejection(field: &str, e: KoszulError) -> Rejection {
    Rejection::Input(InputError::field(field, e.to_string()))
}

fn resolve_koszul(text: &str, bound: usize) -> Result<Outcome, Rejection> {
    let rec: input::KoszulRecord = input::parse_record(text)?;
    let p = FiltObject::new(rec.weights.clone());
    let k = koszul::fancy_koszul(&p, bound);
    let report = koszul::verify_augmentation_qiso(&k);
    let mut lines = Vec::new();
    let mut strands = Vec::new();
    for s in &report.strands {
        lines.push(format!(
            "total degree {}: dims {}, cohomology {}",
            s.total_degree,
            fmt_map(&s.dims),
            if s.cohomology.is_empty() {
                "0".to_string()
            } else {
                fmt_map(&s.cohomology)
            }
        ));
        strands.push(json!({ "total_degree": s.total_degree, "dims": s.dims, "cohomology": s.cohomology }));
    }
    let mut violations = Vec::new();
    for b in report.square_zero_failures.iter() {
        violations.push(Witness::new(
            "d^2 = 0",
            json!({ "monomial": b.monomial, "subset": b.subset }),
            format!(
                "d^2 is nonzero on monomial {:?} with exterior factor {:?}",
                b.monomial, b.subset
            ),
        ));
    }
    for b in report.degree_failures.iter() {
        violations.push(Witness::new(
            "degree",
            json!({ "monomial": b.monomial, "subset": b.subset }),
            format!("d does not have bidegree (+1, -1) on {:?} ⊗ {:?}", b.monomial, b.subset),
        ));
    }
    let mut passed = report.passed();
    lines.push(format!(
        "augmentation quasi-isomorphism: {}",
        if passed { "verified" } else { "FAILED" }
    ));
    let mut result = json!({
        "rank": k.rank(),
        "strands": strands,
        "augmentation_is_chain_map": report.augmentation_is_chain_map,
        "augmentation_iso_in_degree_zero": report.augmentation_iso_in_degree_zero,
    });
    if let Some(point) = &rec.point {
        let m = input::point(point, "point")?;
        let bc = koszul::base_change_check(&p, &m, bound).map_err(|e| koszul_rejection("point", e))?;
        let mut layers = Vec::new();
        for (j, fancy, special) in &bc.layers {
            let equal = fancy == special;
            if !equal {
                violations.push(Witness::new(
                    "base change",
                    json!({ "exterior_degree": j }),
                    format!("specialized differential differs from the contraction in exterior degree {j}"),
                ));
            }
            layers.push(json!({
                "exterior_degree": j,
                "specialized": input::matrix_record(fancy),
                "contraction": input::matrix_record(special),
                "equal": equal,
            }));
        }
        if !bc.evaluation_is_chain_map {
            violations.push(Witness::new(
                "base change",
                json!({}),
                "evaluation at the point is not a chain map".into(),
            ));
        }
        let coords: Vec<String> = m.iter().map(format_rational).collect();
        lines.push(format!(
            "base change at ({}): {}",
            coords.join(", "),
            if bc.passed() {
                "matches the specialized complex in every exterior degree"
            } else {
                "FAILED"
            }
        ));
        passed &= bc.passed();
        result["base_change"] = json!({
            "point": coords,
            "layers": layers,
            "evaluation_is_chain_map": bc.evaluation_is_chain_map,
        });
    }
    for v in &violations {
        lines.push(format!("violation ({}): {}", v.property, v.message));
    }
    result["violations"] = json!(violations);
    Ok(Outcome::new(passed, result, lines))
}

fn pbw(text: &str, bound: usize) -> Result<Outcome, Rejection> {
    let g = lie_input(text)?;
    let report = dglie::pbw_check(&g, bound);
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for r in &report.rows {
        lines.push(format!("n = {}: gr {}, sym {}", r.length, r.gr_dim, r.sym_dim));
        rows.push(json!({ "length": r.length, "gr_dim": r.gr_dim, "sym_dim": r.sym_dim }));
        if r.gr_dim != r.sym_dim {
            violations.push(Witness::new(
                "PBW",
                json!({ "length": r.length }),
                format!(
                    "length {}: gr has dim {} but Sym has dim {}",
                    r.length, r.gr_dim, r.sym_dim
                ),
            ));
        }
    }
    for (w, a, b) in &report.ambiguities {
        violations.push(Witness::new(
            "confluence",
            json!({ "word": fmt_word(g.names(), w) }),
            format!(
                "rewriting {} gives two normal forms ({} and {} terms)",
                fmt_word(g.names(), w),
                a.len(),
                b.len()
            ),
        ));
    }
    let passed = report.passed();
    lines.push(format!(
        "PBW up to length {bound}: {}",
        if passed { "verified" } else { "FAILED" }
    ));
    for v in &violations {
        lines.push(format!("violation ({}): {}", v.property, v.message));
    }
    Ok(Outcome::new(
        passed,
        json!({ "rows": rows, "violations": violations }),
        lines,
    ))
}

fn lie_check(text: &str) -> Result<Outcome, Rejection> {
    let g = input::lie_unchecked(&input::parse_record(text)?, "")?;
    let report = dglie::check_lie_axioms(&g);
    let mut lines: Vec<String> = report
        .checked
        .iter()
        .map(|(axiom, n)| format!("{axiom}: {n} instances checked"))
        .collect();
    let violations: Vec<Witness> = report
        .violations
        .iter()
        .map(|v| match input::lie_rejection("", LieError::Axioms(v.clone())) {
            Rejection::Violation(w) => w,
            Rejection::Input(_) => unreachable!("axiom failures are violations"),
        })
        .collect();
    for v in &violations {
        lines.push(format!("violation ({}): {}", v.property, v.message));
    }
    let passed = violations.is_empty();
    lines.push(format!("dg-Lie axioms: {}", if passed { "hold" } else { "FAIL" }));
    let checked: BTreeMap<String, usize> = report.checked.iter().map(|(a, n)| (a.to_string(), *n)).collect();
    Ok(Outcome::new(
        passed,
        json!({ "checked": checked, "violations": violations }),
        lines,
    ))
}

fn derived_quotient(text: &str, weight_bound: usize) -> Result<Outcome, Rejection> {
    let rec: input::QuotientRecord = input::parse_record(text)?;
    let g = input::lie(&rec.lie, "lie")?;
    let names: Vec<&str> = rec.algebra.generators.iter().map(|t| t.name.as_str()).collect();
    let weights: Vec<i64> = rec.algebra.generators.iter().map(|t| t.weight).collect();
    let a = dglie::polynomial_algebra(&names, &weights, rec.algebra.bound);
    let mut images = vec![vec![Element::new(); names.len()]; g.dim()];
    for (t, act) in rec.action.iter().enumerate() {
        let field = format!("action[{t}]");
        if act.element >= g.dim() {
            return Err(
                InputError::field(format!("{field}.element"), format!("out of range for dim {}", g.dim())).into(),
            );
        }
        let gen = names.iter().position(|n| *n == act.generator).ok_or_else(|| {
            InputError::field(
                format!("{field}.generator"),
                format!("unknown generator `{}`", act.generator),
            )
        })?;
        images[act.element][gen] = input::algebra_element(&a, &act.image, &format!("{field}.image"))?;
    }
    let q = dglie::derived_quotient(&g, &a, &Action { images }, weight_bound as i64).map_err(|e| match e {
        LieError::NotRepresentation { i, j, a: t } => Rejection::Violation(Witness::new(
            "representation",
            json!({ "elements": [i, j], "generator": names[t] }),
            format!(
                "[e{i}, e{j}] does not act as the commutator of the actions of e{i} and e{j} on {}",
                names[t]
            ),
        )),
        LieError::ActionInhomogeneous { i, a: t } => Rejection::Input(InputError::field(
            "action",
            format!(
                "image of {} under e{i} is not homogeneous of the right weight",
                names[t]
            ),
        )),
        other => Rejection::Input(InputError::field("input", other.to_string())),
    })?;
    let mut lines = Vec::new();
    let mut pieces = Vec::new();
    for p in &q.pieces {
        lines.push(format!(
            "weight {}: dims {}, cohomology {}",
            p.weight,
            fmt_map(&p.dims),
            if p.cohomology.is_empty() {
                "0".to_string()
            } else {
                fmt_map(&p.cohomology)
            }
        ));
        pieces.push(json!({ "weight": p.weight, "dims": p.dims, "cohomology": p.cohomology }));
    }
    let top = g.dim() as i64;
    let totals: BTreeMap<i64, usize> = (0..=top).map(|n| (n, q.cohomology_in_degree(n))).collect();
    let parts: Vec<String> = totals.iter().map(|(n, d)| format!("H^{n} = {d}")).collect();
    lines.push(format!("total over complete weights: {}", parts.join(", ")));
    Ok(Outcome::new(true, json!({ "pieces": pieces, "totals": totals }), lines))
}

fn crit(text: &str, bound: usize) -> Result<Outcome, Rejection> {
    let f = input::polynomial(text)?;
    let r = koszul::critical_locus(&f, bound);
    let mut parts = vec![format!(
        "dim H0 = {} ({})",
        r.h0(),
        if r.stabilized { "stabilized" } else { "not stabilized" }
    )];
    for i in 1..=f.nvars() as i64 {
        parts.push(format!("H-{i} = {}", r.cohomology.get(&-i).copied().unwrap_or(0)));
    }
    let lines = vec![
        format!("polynomial: {f}"),
        format!("variables: {}", r.vars.join(", ")),
        format!("cutoff: {}", r.cutoff),
        parts.join(", "),
    ];
    let result = json!({
        "polynomial": f.to_string(),
        "vars": r.vars,
        "cutoff": r.cutoff,
        "xi_weights": r.xi_weights,
        "cohomology": r.cohomology,
        "h0_by_cutoff": r.h0_by_cutoff,
        "stabilized": r.stabilized,
    });
    Ok(Outcome::new(true, result, lines))
}
