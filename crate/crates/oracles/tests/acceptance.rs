//! Acceptance gate: every criterion runs at exact rational equality and
//! prints one PASS/FAIL line. The process exits nonzero if any fails.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::Rng;

use qahom::complexes::{self, ChainMap, Complex};
use qahom::dglie::{self, DgLie};
use qahom::filtvect::{self, FiltMorphism, FiltObject};
use qahom::koszul::{self, PolySpec};
use qahom::linalg::{self, frac, Matrix, Rational};
use qahom::model::{self, LiftingSquare};
use qahom::random::{self, Bounds, InstanceRng};
use qahom_oracles::{
    binomial, brute_force_lift_exists, cohomology_dims, contraction, jacobian_oracle, specialized_fancy,
    strict_epi_oracle, strict_mono_oracle, strict_oracle,
};

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: String) -> Verdict {
    Verdict { passed, detail }
}

fn random_bounds(r: &mut InstanceRng) -> Bounds {
    Bounds::default().with_max_dim(r.gen_range(1..=4))
}

fn c1() -> Verdict {
    let mut r = random::rng(1);
    let mut bad = 0;
    let n = 500;
    for _ in 0..n {
        let b = random_bounds(&mut r);
        let a = random::object(&mut r, b);
        let c = random::object(&mut r, b);
        let f = random::strict_mono_into(&mut r, &a, b);
        let g = random::morphism(&mut r, f.source(), &c, b);
        let pushed = filtvect::pushout(&f, &g).expect("common source").from_second;
        let p = random::strict_epi_from(&mut r, &a, b);
        let h = random::morphism(&mut r, &c, p.target(), b);
        let pulled = filtvect::pullback(&p, &h).expect("common target").to_second;
        let ok = strict_mono_oracle(&f)
            && strict_epi_oracle(&p)
            && pushed.is_strict_mono()
            && strict_mono_oracle(&pushed)
            && pulled.is_strict_epi()
            && strict_epi_oracle(&pulled);
        if !ok {
            bad += 1;
        }
    }
    verdict(
        bad == 0,
        format!("{n} pushout and {n} pullback instances, {bad} failures"),
    )
}

fn c2() -> Verdict {
    let mut r = random::rng(2);
    let n = 500;
    let mut bad = 0;
    for _ in 0..n {
        let b = random_bounds(&mut r);
        let s = random::object(&mut r, b);
        let t = random::object(&mut r, b);
        let f = random::morphism(&mut r, &s, &t, b);
        let a = f.factor();
        let c = f.factor_through_image();
        let rank = linalg::rank(f.matrix());
        let ok = &(a.mono.matrix() * a.strict_epi.matrix()) == f.matrix()
            && &(c.strict_mono.matrix() * c.epi.matrix()) == f.matrix()
            && strict_epi_oracle(&a.strict_epi)
            && linalg::rank(a.mono.matrix()) == a.mono.source().dim()
            && linalg::rank(c.epi.matrix()) == c.epi.target().dim()
            && strict_mono_oracle(&c.strict_mono)
            && a.mono.source().dim() == rank
            && c.strict_mono.source().dim() == rank;
        if !ok {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("{n} morphisms factored both ways, {bad} failures"))
}

fn c3() -> Verdict {
    let shift = FiltMorphism::new(FiltObject::new(vec![0]), FiltObject::new(vec![-1]), Matrix::identity(1)).unwrap();
    let witness = shift.is_mono() && shift.is_epi() && !shift.is_strict() && !strict_oracle(&shift);
    let mut r = random::rng(3);
    let n = 500;
    let mut bad = 0;
    let flat = Bounds {
        min_weight: 0,
        max_weight: 0,
        ..Bounds::default()
    };
    for _ in 0..n {
        let s = random::object(&mut r, flat);
        let t = random::object(&mut r, flat);
        let f = random::morphism(&mut r, &s, &t, flat);
        if !f.is_strict() {
            bad += 1;
        }
        let b = random_bounds(&mut r);
        let s = random::object(&mut r, b);
        let t = random::object(&mut r, b);
        let g = random::morphism(&mut r, &s, &t, b);
        if g.is_strict() != strict_oracle(&g) || g.is_strict() != filtvect::is_strict_by_steps(&g) {
            bad += 1;
        }
    }
    verdict(
        witness && bad == 0,
        format!(
            "shift identity mono/epi/non-strict: {}; {n} weight-0 and {n} weighted instances, {bad} disagreements",
            if witness { "yes" } else { "no" }
        ),
    )
}

fn c4() -> Verdict {
    let mut r = random::rng(4);
    let n = 200;
    let mut bad = 0;
    for _ in 0..n {
        let b = random_bounds(&mut r);
        let start = r.gen_range(-2..=0);
        let len = r.gen_range(1..=4);
        let x = random::complex(&mut r, start, len, b);
        let c = complexes::cone(&ChainMap::identity(&x));
        let engine = complexes::is_acyclic(&c);
        let oracle = cohomology_dims(&c).values().all(|&d| d == 0);
        if !(engine && oracle) {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("{n} random complexes, {bad} cones with cohomology"))
}

/// A random lifting problem of a generating projective cofibration against a
/// projective trivial fibration, with the top map drawn from the whole space
/// of maps compatible with the bottom one.
fn lifting_instance(r: &mut InstanceRng) -> Option<LiftingSquare> {
    let b = Bounds::default().with_max_dim(r.gen_range(1..=2));
    let start = r.gen_range(-2..=0);
    let p = random::trivial_fibration(r, start, 3, true, b);
    assert!(model::classify(&p).projective_trivial_fibration());
    let rr = random::nonzero_object(r, b.with_max_dim(2));
    let n = r.gen_range(start - 1..=start + 2);
    let left = model::generating_projective_cofibration(&rr, n);
    let bottom = random::chain_map(r, left.target(), p.target(), b);
    let zero = Complex::zero();
    let probe = LiftingSquare::new(
        ChainMap::zero(&zero, left.source()),
        p.clone(),
        ChainMap::zero(&zero, p.source()),
        bottom.compose(&left).expect("composable"),
    )
    .expect("zero source commutes");
    let space = model::lift_space(&probe)?;
    let top = random::combine(r, space.particular, &space.homogeneous, b);
    Some(LiftingSquare::new(left, p, top, bottom).expect("commutes by construction"))
}

fn obstructed_square() -> LiftingSquare {
    let shift = FiltMorphism::new(FiltObject::new(vec![0]), FiltObject::new(vec![-1]), Matrix::identity(1)).unwrap();
    let k = Complex::two_term(&shift, -1);
    let p = ChainMap::zero(&k, &Complex::zero());
    let left = model::generating_projective_cofibration(&FiltObject::new(vec![-1]), -1);
    let top = ChainMap::new(left.source().clone(), k, BTreeMap::from([(0, Matrix::identity(1))])).unwrap();
    let bottom = ChainMap::zero(left.target(), &Complex::zero());
    LiftingSquare::new(left, p, top, bottom).unwrap()
}

fn c5() -> Verdict {
    let mut r = random::rng(5);
    let mut squares = vec![obstructed_square()];
    while squares.len() < 200 {
        if let Some(sq) = lifting_instance(&mut r) {
            squares.push(sq);
        }
    }
    let (mut lifted, mut agree) = (0, 0);
    for sq in &squares {
        let engine = model::solve_lift(sq);
        let engine_ok = engine.as_ref().is_some_and(|h| sq.is_lift(h));
        lifted += engine_ok as usize;
        let oracle = brute_force_lift_exists(sq);
        agree += (oracle == engine.is_some() && (engine.is_none() || engine_ok)) as usize;
    }
    let n = squares.len();
    verdict(
        lifted == n && agree == n,
        format!("lifts exist in {lifted}/{n} instances; solve_lift agrees with the brute-force oracle on {agree}/{n}"),
    )
}

fn c6() -> Verdict {
    let mut r = random::rng(6);
    let n = 200;
    let mut bad = 0;
    for _ in 0..n {
        let b = random_bounds(&mut r);
        let v = random::object(&mut r, b);
        let i = random::strict_mono_into(&mut r, &v, b);
        let p = i.cokernel().projection;
        let z = random::object(&mut r, b.with_max_dim(3));
        let one = FiltMorphism::identity(&z);
        for (ti, tp) in [(i.tensor(&one), p.tensor(&one)), (one.tensor(&i), one.tensor(&p))] {
            let engine = complexes::strict_exact_check(&ti, &tp).unwrap_or(false);
            let exact = (tp.matrix() * ti.matrix()).is_zero()
                && linalg::rank(ti.matrix()) + linalg::rank(tp.matrix()) == ti.target().dim();
            let oracle = exact && strict_mono_oracle(&ti) && strict_epi_oracle(&tp);
            if !(engine && oracle) {
                bad += 1;
            }
        }
    }
    verdict(
        bad == 0,
        format!("{n} strict exact sequences tensored on both sides, {bad} failures"),
    )
}

fn c7() -> Verdict {
    let start = Instant::now();
    let algebras: Vec<(&str, DgLie)> = vec![
        ("abelian 1", dglie::abelian(1)),
        ("abelian 2", dglie::abelian(2)),
        ("abelian 3", dglie::abelian(3)),
        ("abelian 4", dglie::abelian(4)),
        ("solvable 2", dglie::solvable2()),
        ("heisenberg", dglie::heisenberg()),
        ("sl2", dglie::sl2()),
    ];
    let mut bad = Vec::new();
    for (name, g) in &algebras {
        let report = dglie::pbw_check(g, 6);
        let d = g.dim();
        let oracle: Vec<usize> = (0..=6).map(|n| binomial(n + d - 1, d - 1)).collect();
        let got: Vec<usize> = report.rows.iter().map(|row| row.gr_dim).collect();
        if !report.passed() || got != oracle {
            bad.push(format!("{name}: gr {got:?} vs oracle {oracle:?}"));
        }
    }
    let sl2: Vec<usize> = dglie::pbw_check(&dglie::sl2(), 6)
        .rows
        .iter()
        .map(|row| row.gr_dim)
        .collect();
    let secs = start.elapsed().as_secs_f64();
    verdict(
        bad.is_empty() && sl2 == vec![1, 3, 6, 10, 15, 21, 28] && secs < 30.0,
        format!(
            "{} algebras up to length 6, sl2 gives {sl2:?}, {secs:.1} s {}",
            algebras.len(),
            bad.join("; ")
        ),
    )
}

fn c8() -> Verdict {
    let mut bad = Vec::new();
    let cases = [
        ("abelian 1", dglie::abelian(1)),
        ("abelian 2", dglie::abelian(2)),
        ("abelian 3", dglie::abelian(3)),
        ("heisenberg", dglie::heisenberg()),
    ];
    for (name, g) in &cases {
        let res = dglie::ce_resolution(g, 4).expect("positive weights");
        let report = dglie::verify_ce_acyclicity(&res, 4);
        for w in 0..=4 {
            let Some((_, c)) = res.strand(w) else {
                bad.push(format!("{name}: weight {w} missing"));
                continue;
            };
            let dims = cohomology_dims(c);
            let nonzero: BTreeMap<i64, usize> = dims.into_iter().filter(|&(_, d)| d > 0).collect();
            let expected = if w == 0 {
                BTreeMap::from([(0, 1)])
            } else {
                BTreeMap::new()
            };
            if nonzero != expected {
                bad.push(format!("{name}: weight {w} has cohomology {nonzero:?}"));
            }
        }
        if !report.passed() {
            bad.push(format!("{name}: engine report fails"));
        }
    }
    verdict(
        bad.is_empty(),
        format!("{} algebras, weights 0..4 {}", cases.len(), bad.join("; ")),
    )
}

fn c9() -> Verdict {
    let mut bad = Vec::new();
    let mut r = random::rng(9);
    let mut cases = Vec::new();
    for rank in 1..=3 {
        cases.push(vec![0; rank]);
        cases.push((0..rank).map(|_| r.gen_range(-2..=0)).collect::<Vec<i64>>());
    }
    for weights in &cases {
        let p = FiltObject::new(weights.clone());
        let k = koszul::fancy_koszul(&p, 6);
        let report = koszul::verify_augmentation_qiso(&k);
        if !report.passed() || !report.square_zero_failures.is_empty() {
            bad.push(format!("{weights:?}: engine report fails"));
        }
        let rank = weights.len();
        for t in 0..=6 {
            let strand = k.strand(t);
            for e in 0..=rank.min(t) {
                let expected = binomial(rank, e) * binomial(t - e + rank - 1, rank - 1);
                if strand.object(-(e as i64)).dim() != expected {
                    bad.push(format!("{weights:?}: total {t}, exterior {e} has wrong dimension"));
                }
            }
            let nonzero: BTreeMap<i64, usize> = cohomology_dims(&strand).into_iter().filter(|&(_, d)| d > 0).collect();
            let expected = if t == 0 {
                BTreeMap::from([(0, 1)])
            } else {
                BTreeMap::new()
            };
            if nonzero != expected {
                bad.push(format!("{weights:?}: total {t} has cohomology {nonzero:?}"));
            }
        }
        let full = k.complex();
        for n in full.support() {
            if !(&full.differential_matrix(n) * &full.differential_matrix(n - 1)).is_zero() {
                bad.push(format!("{weights:?}: d^2 != 0 at degree {n}"));
            }
        }
    }
    verdict(
        bad.is_empty(),
        format!(
            "{} modules of rank 1-3, total degrees 0-6 {}",
            cases.len(),
            bad.join("; ")
        ),
    )
}

fn c10() -> Verdict {
    let mut r = random::rng(10);
    let n = 100;
    let mut bad = 0;
    for _ in 0..n {
        let rank = r.gen_range(1..=3);
        let weights: Vec<i64> = (0..rank).map(|_| r.gen_range(-2..=0)).collect();
        let p = FiltObject::new(weights);
        let m: Vec<Rational> = (0..rank)
            .map(|_| frac(r.gen_range(-9..=9), r.gen_range(1..=5)))
            .collect();
        let report = koszul::base_change_check(&p, &m, 3).expect("point in F_0");
        let special = koszul::specialized_koszul(&p, &m).expect("point in F_0");
        let k = koszul::fancy_koszul(&p, 3);
        let mut ok = report.passed();
        for j in 1..=rank {
            let oracle = contraction(rank, j, &m);
            ok &= special.differential_matrix(-(j as i64)) == oracle;
            ok &= specialized_fancy(&k, j, &m) == oracle;
        }
        if !ok {
            bad += 1;
        }
    }
    verdict(
        bad == 0,
        format!("{n} random rational points, ranks 1-3, {bad} mismatches"),
    )
}

fn c11() -> Verdict {
    let start = Instant::now();
    let cases: Vec<(&str, usize, bool)> = vec![
        ("x^2", 1, true),
        ("x^3", 2, true),
        ("x^4", 3, true),
        ("x^5", 4, true),
        ("x^3 + y^3", (3 - 1) * (3 - 1), true),
        ("x", 0, false),
    ];
    let mut bad = Vec::new();
    let mut summary = Vec::new();
    for (text, expected, isolated) in &cases {
        let f = PolySpec::parse(text).unwrap();
        let report = koszul::critical_locus(&f, 8);
        let oracle = jacobian_oracle(&f, 7);
        summary.push(format!("{text}: {}", report.h0()));
        if report.h0() != *expected || oracle != *expected {
            bad.push(format!(
                "{text}: engine {} oracle {oracle} expected {expected}",
                report.h0()
            ));
        }
        if *isolated {
            let higher = report.cohomology.iter().any(|(&d, &v)| d < 0 && v > 0);
            if !report.stabilized || higher {
                bad.push(format!("{text}: not stabilized or H^-i != 0"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(
        bad.is_empty() && secs < 60.0,
        format!(
            "dim H0 at D = 8: {}; {secs:.1} s {}",
            summary.join(", "),
            bad.join("; ")
        ),
    )
}

fn c12() -> Verdict {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../cli/fixtures");
    let cases = [
        (
            "lie-check",
            "sl2_broken_jacobi.json",
            "Jacobi identity",
            &["indices", "names"][..],
        ),
        ("cohomology", "broken_d2.json", "d^2 = 0", &["degree", "row", "col"][..]),
        (
            "check-lift",
            "lift_noncommuting.json",
            "commuting square",
            &["degree"][..],
        ),
    ];
    let mut bad = Vec::new();
    for (cmd, file, property, keys) in cases {
        let path = format!("{dir}/{file}");
        let run = qahom_cli::app::run(["qahom", cmd, path.as_str(), "--format", "machine"]);
        let report: serde_json::Value = serde_json::from_str(&run.stdout).unwrap_or_default();
        let witness = &report["result"]["violations"][0];
        let located = keys.iter().all(|k| !witness["location"][k].is_null());
        if run.code != 1 || witness["property"] != property || !located {
            bad.push(format!("{file}: exit {}, witness {witness}", run.code));
        }
    }
    verdict(
        bad.is_empty(),
        format!(
            "broken Jacobi, broken d^2 and non-commuting square rejected with located witnesses {}",
            bad.join("; ")
        ),
    )
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 12] = [
        ("quasi-abelian axioms", c1),
        ("factorizations", c2),
        ("strictness witness", c3),
        ("cone acyclicity", c4),
        ("projective lifting", c5),
        ("tensor preserves strict exactness", c6),
        ("PBW", c7),
        ("Chevalley-Eilenberg acyclicity", c8),
        ("Koszul acyclicity", c9),
        ("base change", c10),
        ("critical locus", c11),
        ("negative controls", c12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        let secs = start.elapsed().as_secs_f64();
        if !v.passed {
            failed += 1;
        }
        println!(
            "{} C{:<2} {name}: {} [{secs:.2} s]",
            if v.passed { "PASS" } else { "FAIL" },
            i + 1,
            v.detail.trim_end()
        );
    }
    println!("acceptance: {}/12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
