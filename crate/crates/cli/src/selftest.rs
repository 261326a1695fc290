//! Bundled fixtures plus small randomized property suites under a fixed
//! seed. Random instances are generated in order of increasing size, so the
//! first failing instance of a suite is also a smallest one found.

use serde_json::{json, Value};

use qahom::complexes::{self, ChainMap};
use qahom::dglie;
use qahom::filtvect::{self, FiltMorphism};
use qahom::koszul;
use qahom::model;
use qahom::random::{self, Bounds, InstanceRng};

use crate::commands::{self, Options, Outcome};
use crate::fixtures::{Fixture, FIXTURES};
use crate::input;
use crate::report::Witness;

struct Suite {
    name: &'static str,
    instances: usize,
    run: fn(&mut InstanceRng, Bounds) -> Option<Value>,
}

/// Bounds for instance `i` of `n`: dimensions grow from 1 to 4.
fn schedule(i: usize, n: usize) -> Bounds {
    Bounds::default().with_max_dim(1 + 3 * i / n.max(1))
}

fn pushout_pullback(r: &mut InstanceRng, b: Bounds) -> Option<Value> {
    let a = random::object(r, b);
    let c = random::object(r, b);
    let f = random::strict_mono_into(r, &a, b);
    let g = random::morphism(r, f.source(), &c, b);
    let pushed = filtvect::pushout(&f, &g).expect("common source").from_second;
    if !pushed.is_strict_mono() {
        return Some(json!({ "strict_mono": input::morphism_record(&f), "along": input::morphism_record(&g) }));
    }
    let p = random::strict_epi_from(r, &a, b);
    let h = random::morphism(r, &c, p.target(), b);
    let pulled = filtvect::pullback(&p, &h).expect("common target").to_second;
    if !pulled.is_strict_epi() {
        return Some(json!({ "strict_epi": input::morphism_record(&p), "along": input::morphism_record(&h) }));
    }
    None
}

fn factorization(r: &mut InstanceRng, b: Bounds) -> Option<Value> {
    let s = random::object(r, b);
    let t = random::object(r, b);
    let f = random::morphism(r, &s, &t, b);
    let a = f.factor();
    let c = f.factor_through_image();
    let ok = a.recompose() == f
        && a.strict_epi.is_strict_epi()
        && a.mono.is_mono()
        && c.recompose() == f
        && c.epi.is_epi()
        && c.strict_mono.is_strict_mono();
    (!ok).then(|| json!({ "morphism": input::morphism_record(&f) }))
}

fn strictness_oracle(r: &mut InstanceRng, b: Bounds) -> Option<Value> {
    let s = random::object(r, b);
    let t = random::object(r, b);
    let f = random::morphism(r, &s, &t, b);
    (f.is_strict() != filtvect::is_strict_by_steps(&f)).then(|| json!({ "morphism": input::morphism_record(&f) }))
}

fn cone_identity(r: &mut InstanceRng, b: Bounds) -> Option<Value> {
    let x = random::complex(r, -1, 3, b);
    let c = complexes::cone(&ChainMap::identity(&x));
    (!complexes::is_acyclic(&c)).then(|| json!({ "complex": input::complex_record(&x) }))
}

fn tensor_exactness(r: &mut InstanceRng, b: Bounds) -> Option<Value> {
    let v = random::object(r, b);
    let i = random::strict_mono_into(r, &v, b);
    let p = i.cokernel().projection;
    let z = random::object(r, b.with_max_dim(2));
    let one = FiltMorphism::identity(&z);
    let ok = complexes::strict_exact_check(&i.tensor(&one), &p.tensor(&one)).unwrap_or(false);
    (!ok).then(|| json!({ "strict_mono": input::morphism_record(&i), "tensor_with": input::object_record(&z) }))
}

/// Lifting against generating projective cofibrations when the trivial
/// fibration has a filtered contraction of its kernel.
fn contractible_lifting(r: &mut InstanceRng, b: Bounds) -> Option<Value> {
    let b = b.with_max_dim(b.max_dim.min(2));
    let p = random::trivial_fibration(r, -1, 3, false, b);
    let rr = random::nonzero_object(r, b);
    let n = -1;
    let left = model::generating_projective_cofibration(&rr, n);
    let bottom = random::chain_map(r, left.target(), p.target(), b);
    let target = bottom.compose(&left).expect("composable");
    let zero = complexes::Complex::zero();
    let probe = model::LiftingSquare::new(
        ChainMap::zero(&zero, left.source()),
        p.clone(),
        ChainMap::zero(&zero, p.source()),
        target,
    )
    .expect("zero source commutes");
    let Some(space) = model::lift_space(&probe) else {
        return Some(json!({ "unliftable_top": input::square_record(&probe) }));
    };
    let top = random::combine(r, space.particular, &space.homogeneous, b);
    let sq = model::LiftingSquare::new(left, p, top, bottom).expect("square commutes by construction");
    match model::solve_lift(&sq) {
        Some(h) if sq.is_lift(&h) => None,
        _ => Some(json!({ "square": input::square_record(&sq) })),
    }
}

const SUITES: &[Suite] = &[
    Suite {
        name: "pushouts preserve strict monos and pullbacks preserve strict epis",
        instances: 100,
        run: pushout_pullback,
    },
    Suite {
        name: "canonical factorizations recompose",
        instances: 100,
        run: factorization,
    },
    Suite {
        name: "strictness agrees with the filtration-step oracle",
        instances: 100,
        run: strictness_oracle,
    },
    Suite {
        name: "cone of the identity is acyclic",
        instances: 40,
        run: cone_identity,
    },
    Suite {
        name: "tensoring preserves strict exact sequences",
        instances: 60,
        run: tensor_exactness,
    },
    Suite {
        name: "lifts exist against filtered-contractible trivial fibrations",
        instances: 20,
        run: contractible_lifting,
    },
];

fn fixture_suite(fixtures: &[Fixture]) -> (usize, Option<Witness>) {
    for f in fixtures {
        let got = match commands::settle(commands::execute(f.command, f.text, &Options::default())) {
            Ok(o) if o.passed => 0,
            Ok(_) => 1,
            Err(_) => 2,
        };
        if got != f.expected_exit {
            return (
                fixtures.len(),
                Some(Witness::new(
                    "fixture",
                    json!({ "fixture": f.name, "command": f.command.name(), "expected_exit": f.expected_exit, "exit": got }),
                    format!(
                        "{} on {} exited {got}, expected {}",
                        f.command.name(),
                        f.name,
                        f.expected_exit
                    ),
                )),
            );
        }
    }
    (fixtures.len(), None)
}

fn engine_suite() -> (usize, Option<Witness>) {
    let mut checked = 0;
    for g in [
        dglie::sl2(),
        dglie::heisenberg(),
        dglie::solvable2(),
        dglie::odd_square(),
        dglie::abelian(3),
    ] {
        for h in [g.clone(), dglie::cone_lie(&g)] {
            checked += 1;
            if let Some(v) = dglie::check_lie_axioms(&h).violations.into_iter().next() {
                return (
                    checked,
                    Some(Witness::new(
                        "Lie axioms",
                        json!({ "algebra": input::lie_record(&h) }),
                        v.to_string(),
                    )),
                );
            }
        }
    }
    for weights in [vec![0], vec![0, -1], vec![0, 0, -1]] {
        checked += 1;
        let k = koszul::fancy_koszul(&filtvect::FiltObject::new(weights.clone()), 4);
        if !koszul::verify_augmentation_qiso(&k).passed() {
            return (
                checked,
                Some(Witness::new(
                    "Koszul acyclicity",
                    json!({ "weights": weights }),
                    "augmentation is not a quasi-isomorphism".into(),
                )),
            );
        }
    }
    for (text, h0) in [("x^2", 1), ("x^3", 2), ("x^3 + y^3", 4)] {
        checked += 1;
        let f = koszul::PolySpec::parse(text).expect("literal polynomial");
        let got = koszul::critical_locus(&f, 6).h0();
        if got != h0 {
            return (
                checked,
                Some(Witness::new(
                    "critical locus",
                    json!({ "polynomial": text }),
                    format!("dim H0 = {got}, expected {h0}"),
                )),
            );
        }
    }
    (checked, None)
}

pub fn selftest(seed: u64) -> Outcome {
    run_suites(seed, FIXTURES)
}

/// Runs the fixture suite on `fixtures` and every randomized suite.
pub fn run_suites(seed: u64, fixtures: &[Fixture]) -> Outcome {
    let mut rows = Vec::new();
    let mut lines = vec![format!("seed: {seed}")];
    let mut passed = true;
    let mut record = |name: &str, instances: usize, failure: Option<Witness>| {
        lines.push(format!(
            "{}: {} ({instances} instances)",
            name,
            if failure.is_none() { "pass" } else { "FAIL" }
        ));
        if let Some(w) = &failure {
            lines.push(format!("  witness ({}): {}", w.property, w.message));
            passed = false;
        }
        rows.push(json!({ "suite": name, "instances": instances, "passed": failure.is_none(), "witness": failure }));
    };
    let (n, w) = fixture_suite(fixtures);
    record("bundled fixtures", n, w);
    let (n, w) = engine_suite();
    record("library algebras", n, w);
    for (k, suite) in SUITES.iter().enumerate() {
        let mut r = random::rng(seed.wrapping_add(k as u64));
        let failure = (0..suite.instances).find_map(|i| {
            (suite.run)(&mut r, schedule(i, suite.instances)).map(|instance| {
                Witness::new(
                    suite.name,
                    json!({ "seed": seed, "suite_index": k, "instance": i, "data": instance }),
                    format!("instance {i} violates the property"),
                )
            })
        });
        record(suite.name, suite.instances, failure);
    }
    Outcome {
        passed,
        result: json!({ "seed": seed, "suites": rows }),
        lines,
    }
}
