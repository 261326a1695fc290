//! The bundled fixture corpus with the exit status each fixture must give.

use crate::commands::CommandKind;

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub command: CommandKind,
    pub text: &'static str,
    pub expected_exit: i32,
}

macro_rules! fixture {
    ($file:literal, $command:ident, $exit:literal) => {
        Fixture {
            name: $file,
            command: CommandKind::$command,
            text: include_str!(concat!("../fixtures/", $file)),
            expected_exit: $exit,
        }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("cone_identity.json", Cohomology, 0),
    fixture!("two_term_shift.json", Cohomology, 0),
    fixture!("broken_d2.json", Cohomology, 1),
    fixture!("filtration_violation.json", Cohomology, 1),
    fixture!("malformed_object.json", Cohomology, 2),
    fixture!("filtration_shift.json", ClassifyMap, 0),
    fixture!("generating_cofibration.json", ClassifyMap, 0),
    fixture!("trivial_fibration.json", ClassifyMap, 0),
    fixture!("lift_projective.json", CheckLift, 0),
    fixture!("lift_obstructed.json", CheckLift, 0),
    fixture!("lift_noncommuting.json", CheckLift, 1),
    fixture!("filtration_shift.json", Factor, 0),
    fixture!("factor_rank_one.json", Factor, 0),
    fixture!("sl2.json", LieCheck, 0),
    fixture!("sl2.json", Pbw, 0),
    fixture!("sl2_broken_jacobi.json", LieCheck, 1),
    fixture!("sl2_broken_jacobi.json", Pbw, 1),
    fixture!("heisenberg.json", LieCheck, 0),
    fixture!("heisenberg.json", Pbw, 0),
    fixture!("heisenberg.json", ResolveCe, 0),
    fixture!("abelian2.json", ResolveCe, 0),
    fixture!("solvable2.json", Pbw, 0),
    fixture!("odd_square.json", LieCheck, 0),
    fixture!("odd_square.json", Pbw, 0),
    fixture!("sl2.json", ResolveCe, 2),
    fixture!("koszul_rank2.json", ResolveKoszul, 0),
    fixture!("koszul_rank3.json", ResolveKoszul, 0),
    fixture!("koszul_unfiltered_point.json", ResolveKoszul, 2),
    fixture!("quotient_translation.json", DerivedQuotient, 0),
    fixture!("quotient_euler.json", DerivedQuotient, 0),
    fixture!("crit_x3.txt", Crit, 0),
    fixture!("crit_x3_y3.json", Crit, 0),
];

/// The corrupted fixtures that must be rejected with a located witness.
pub const NEGATIVE_CONTROLS: &[(&str, CommandKind)] = &[
    ("sl2_broken_jacobi.json", CommandKind::LieCheck),
    ("broken_d2.json", CommandKind::Cohomology),
    ("lift_noncommuting.json", CommandKind::CheckLift),
];

pub fn find(name: &str, command: CommandKind) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name && f.command == command)
}
