//! Acceptance suite: every criterion is exact (equalities of scalars,
//! vectors, or ranks), runs at desk scale, and prints one line.

use std::time::{Duration, Instant};

use vira_core::coeff::{rat, rat_int, Gaussian, Rational, Scalar};
use vira_core::fock::{doubled_shift, FockSpace, OrderingVariant, TwistVariant};
use vira_core::kreduce::{
    h0_spanning_check, k_monomial_span_check, lowest_k_eigen_check, universal_vs_verma_check,
};
use vira_core::liealg::{
    bracket, gamma, gamma_endo_check, k_bracket_closed, kn_closure_check,
    solve_bracket_functionals, BracketVariant, FunctionalVariant, GammaVariant, KCombination,
};
use vira_core::linalg::FieldElem;
use vira_core::partitions::Partition;
use vira_core::verma::{discrete_series, VermaModule};

fn verdict(number: u32, name: &str, pass: bool, elapsed: Duration) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!(
        "criterion {number:02} ({name}): {status} [{:.3}s]",
        elapsed.as_secs_f64()
    );
}

fn rational_points() -> Vec<(Rational, Rational)> {
    vec![
        (rat_int(3), rat(1, 5)),
        (rat(1, 2), rat(1, 16)),
        (rat(5, 2), rat_int(0)),
    ]
}

#[test]
fn criterion_01_closed_bracket_matches_expansion() {
    let start = Instant::now();
    let mut pass = true;
    for r in -10i64..=10 {
        for m in -10i64..=10 {
            let direct = bracket(&KCombination::k(r).expand(), &KCombination::k(m).expand());
            let closed = k_bracket_closed(r, m).expand();
            if direct != closed {
                pass = false;
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        1,
        "closed bracket equals expansion, |r|,|m| <= 10",
        pass,
        elapsed,
    );
    assert!(pass);
    assert!(
        elapsed < Duration::from_secs(1),
        "budget exceeded: {elapsed:?}"
    );
}

#[test]
fn criterion_02_subalgebra_closure() {
    let start = Instant::now();
    let mut pass = true;
    for n in 1..=3u32 {
        let report = kn_closure_check(n, 4, BracketVariant::Exact);
        if !report.is_pass() {
            pass = false;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        2,
        "point-stabilizer subalgebras close, n in {1,2,3}",
        pass,
        elapsed,
    );
    assert!(pass);
    assert!(
        elapsed < Duration::from_secs(1),
        "budget exceeded: {elapsed:?}"
    );
}

#[test]
fn criterion_03_rescaling_endomorphism() {
    let start = Instant::now();
    let mut pass = true;
    for r in [2u32, 3] {
        if !gamma_endo_check(r, 6, GammaVariant::Exact).is_pass() {
            pass = false;
        }
    }
    // the unit rescaling is the identity
    for m in [-3i64, -1, 1, 4] {
        let x = KCombination::k(m).add(&KCombination::central(1).scale(&Scalar::from_int(5)));
        if gamma(1, &x, GammaVariant::Exact).unwrap() != x {
            pass = false;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        3,
        "rescaling maps are endomorphisms commuting with theta",
        pass,
        elapsed,
    );
    assert!(pass);
}

#[test]
fn criterion_04_functional_solver_forces_zero_space() {
    let start = Instant::now();
    let mut central_pinned = true;
    let mut zero_space = true;
    let mut witness = String::new();
    for n in 1..=3u32 {
        let sol = solve_bracket_functionals(n, 12, FunctionalVariant::Exact).unwrap();
        assert_eq!(sol.inner_radius, 6);
        if sol.inner_basis.iter().any(|f| !f.phi_c.is_zero()) {
            central_pinned = false;
        }
        if !sol.inner_basis.is_empty() {
            zero_space = false;
            witness = format!("n = {n}: {}", sol.inner_basis[0]);
        }
    }
    let elapsed = start.elapsed();
    verdict(
        4,
        "bracket functionals vanish on the inner window",
        central_pinned && zero_space,
        elapsed,
    );
    assert!(central_pinned, "phi(C) must be forced to zero");
    assert!(
        zero_space,
        "the truncated system has a nonzero solution space: {witness}. \
         The surviving functional is the first derivative at the fixed points \
         (phi_r proportional to r), which kills every bracket of vector fields \
         vanishing there; the predicted phi_r = 0 therefore cannot hold."
    );
}

#[test]
fn criterion_05_discrete_series_and_positivity() {
    let start = Instant::now();
    let mut pass = true;

    let series = discrete_series(1);
    let expected: Vec<(Rational, Rational)> = vec![
        (rat(1, 2), rat_int(0)),
        (rat(1, 2), rat(1, 2)),
        (rat(1, 2), rat(1, 16)),
    ];
    let got: Vec<(Rational, Rational)> =
        series.iter().map(|p| (p.c.clone(), p.h.clone())).collect();
    if got != expected {
        pass = false;
    }

    for point in &series {
        let module = VermaModule::rational(point.c.clone(), point.h.clone());
        if !module.psd_check(6).unwrap().is_pass() {
            pass = false;
        }
    }
    let bad = VermaModule::rational(rat(1, 2), rat(1, 3));
    let report = bad.psd_check(6).unwrap();
    if report.is_pass() || report.counterexample.is_none() {
        pass = false;
    }

    let elapsed = start.elapsed();
    verdict(
        5,
        "discrete series values and exact positivity",
        pass,
        elapsed,
    );
    assert!(pass);
    assert!(
        elapsed < Duration::from_secs(30),
        "budget exceeded: {elapsed:?}"
    );
}

#[test]
fn criterion_06_monomial_spanning() {
    let start = Instant::now();
    let mut pass = true;
    for (c, h) in rational_points() {
        let module = VermaModule::rational(c, h);
        if !k_monomial_span_check(&module, 6).is_pass() {
            pass = false;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        6,
        "difference-generator monomials span every level <= 6",
        pass,
        elapsed,
    );
    assert!(pass);
}

#[test]
fn criterion_07_lowest_energy_eigenrelations() {
    let start = Instant::now();
    let mut pass = true;
    for (c, h) in rational_points() {
        let module = VermaModule::rational(c, h);
        if !lowest_k_eigen_check(&module, 6, 3).is_pass() {
            pass = false;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        7,
        "lowest vector eigen-relations and uniqueness",
        pass,
        elapsed,
    );
    assert!(pass);
}

#[test]
fn criterion_08_vacuum_spanning_three_points() {
    let start = Instant::now();
    let mut pass = true;
    for c in [rat_int(3), rat(1, 2)] {
        if !h0_spanning_check(c, 6).is_pass() {
            pass = false;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        8,
        "three-point annihilator family spans the vacuum module",
        pass,
        elapsed,
    );
    assert!(pass);
}

#[test]
fn criterion_09_quadratic_virasoro() {
    let start = Instant::now();
    let mut pass = true;
    for q in [rat_int(0), rat_int(1)] {
        let space = FockSpace::new(q);
        if !space
            .current_virasoro_check(6, 3, OrderingVariant::NormalOrdered)
            .is_pass()
        {
            pass = false;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        9,
        "quadratic Virasoro relations at central charge one",
        pass,
        elapsed,
    );
    assert!(pass);
}

#[test]
fn criterion_10_twisted_relations_in_alpha() {
    let start = Instant::now();
    let space = FockSpace::vacuum();
    let report = space.k_alpha_relations_check(6, 4, TwistVariant::Exact);
    let elapsed = start.elapsed();
    verdict(
        10,
        "twisted generator relations identically in alpha",
        report.is_pass(),
        elapsed,
    );
    assert!(report.is_pass(), "{:?}", report.counterexample);
    assert!(
        elapsed < Duration::from_secs(120),
        "budget exceeded: {elapsed:?}"
    );
}

#[test]
fn criterion_11_two_lowest_vectors() {
    let start = Instant::now();
    let space = FockSpace::vacuum();
    let analysis = space.rho2_eigen_analysis(6).unwrap();
    let mut pass = true;

    let expected_first = doubled_shift(); // (1 + 12 alpha^2)/16
    let expected_second = &doubled_shift() + &Scalar::from_rat(rat(1, 2)); // (9 + 12 alpha^2)/16
    if analysis.eigenvalues.0 != expected_first || analysis.eigenvalues.1 != expected_second {
        pass = false;
    }
    // beta: nonzero, purely imaginary, odd in alpha; equals the overlap
    if analysis.beta.is_zero()
        || !analysis.beta.is_pure_imaginary()
        || !analysis.beta.is_odd_in_alpha()
    {
        pass = false;
    }
    let phi = space.second_lowest_vector(&analysis);
    if space.inner(&space.lowest(), &phi).unwrap() != analysis.beta {
        pass = false;
    }
    let elapsed = start.elapsed();
    verdict(
        11,
        "restricted action eigenvalues and nonzero overlap",
        pass,
        elapsed,
    );
    assert!(pass);
}

#[test]
fn criterion_12_universal_product_crosschecks() {
    let start = Instant::now();
    let mut pass = true;
    for (c, h) in rational_points() {
        let module = VermaModule::rational(c, h);
        if !universal_vs_verma_check(&module, 4).is_pass() {
            pass = false;
        }
    }
    let space = FockSpace::vacuum();
    if !space.crosscheck_universal(3).is_pass() {
        pass = false;
    }
    let elapsed = start.elapsed();
    verdict(
        12,
        "universal scalar product agrees with both realizations",
        pass,
        elapsed,
    );
    assert!(pass);
    assert!(
        elapsed < Duration::from_secs(120),
        "budget exceeded: {elapsed:?}"
    );
}

#[test]
fn criterion_13_negative_controls() {
    let start = Instant::now();
    let mut pass = true;

    // dropping the central correction of the rescaling map
    let gamma_report = gamma_endo_check(2, 6, GammaVariant::DropCentralTerm);
    if gamma_report.is_pass() || gamma_report.counterexample.is_none() {
        pass = false;
    }

    // dropping the boundary correction of the twisted generators
    let space = FockSpace::vacuum();
    let twist_report = space.k_alpha_relations_check(4, 3, TwistVariant::DropBoundaryCorrection);
    if twist_report.is_pass() || twist_report.counterexample.is_none() {
        pass = false;
    }
    if let Some(ce) = &twist_report.counterexample {
        if !(ce.location.contains_key("n")
            && ce.location.contains_key("m")
            && ce.location.contains_key("vector"))
        {
            pass = false;
        }
    }

    // deleting the cubic term of the functional system frees the central value
    let sol = solve_bracket_functionals(1, 12, FunctionalVariant::DropCentralDelta).unwrap();
    if sol.inner_basis.is_empty() || !sol.inner_basis.iter().any(|f| !f.phi_c.is_zero()) {
        pass = false;
    }

    // perturbing a single structure constant breaks closure
    let closure = kn_closure_check(1, 3, BracketVariant::PerturbedLinearTerm);
    if closure.is_pass() || closure.counterexample.is_none() {
        pass = false;
    }

    let elapsed = start.elapsed();
    verdict(
        13,
        "negative controls produce recorded counterexamples",
        pass,
        elapsed,
    );
    assert!(pass);
}

#[test]
fn scalar_sanity_for_the_suite() {
    // keep the acceptance file self-contained: the twisted central value
    // evaluates to the expected numbers at sample points
    let c = vira_core::fock::twisted_charge();
    assert_eq!(c.eval_alpha(&rat(1, 2)), Gaussian::from_int(4));
    assert_eq!(c.eval_alpha(&rat_int(0)), Gaussian::from_int(1));
    let phi = Partition::new(vec![1]);
    assert_eq!(phi.weight(), 1);
}
