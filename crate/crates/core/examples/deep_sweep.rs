//! Stress sweeps beyond the acceptance scale: larger truncation windows,
//! a four-point closure, higher oscillator levels and modes, a nonzero
//! charge, and the largest crosscheck degree. Run with `--release`.

use std::time::Instant;

use vira_core::coeff::rat_int;
use vira_core::fock::{FockSpace, OrderingVariant, TwistVariant};
use vira_core::liealg::{
    kn_closure_check, solve_bracket_functionals, BracketVariant, FunctionalVariant,
};

fn main() {
    // truncation stability of the functional solver
    for trunc in [12i64, 16, 20, 24] {
        let t = Instant::now();
        let sol = solve_bracket_functionals(1, trunc, FunctionalVariant::Exact).unwrap();
        println!(
            "functional n=1 R={trunc}: nullity {} inner basis {} [{:?}]",
            sol.full_nullity,
            sol.inner_basis.len(),
            t.elapsed()
        );
        assert_eq!(sol.inner_basis.len(), 1);
        assert!(sol.inner_basis[0].phi_c == rat_int(0));
    }
    for trunc in [16i64, 20] {
        let sol = solve_bracket_functionals(3, trunc, FunctionalVariant::Exact).unwrap();
        println!(
            "functional n=3 R={trunc}: nullity {} inner {}",
            sol.full_nullity,
            sol.inner_basis.len()
        );
        assert_eq!(sol.inner_basis.len(), 1);
    }

    // four-point closure beyond the acceptance window
    let t = Instant::now();
    let closure = kn_closure_check(4, 6, BracketVariant::Exact);
    println!(
        "closure n=4 rmax=6: {:?} [{:?}]",
        closure.status,
        t.elapsed()
    );
    assert!(closure.is_pass());

    // twisted relations one level and one mode beyond acceptance scale
    let t = Instant::now();
    let space = FockSpace::vacuum();
    let rel = space.k_alpha_relations_check(7, 5, TwistVariant::Exact);
    println!(
        "twisted relations level 7 |n|<=5: {:?} ({} cases) [{:?}]",
        rel.status,
        rel.cases_total,
        t.elapsed()
    );
    assert!(rel.is_pass());

    // quadratic relations at charge two
    let t = Instant::now();
    let charged = FockSpace::new(rat_int(2));
    let cv = charged.current_virasoro_check(6, 3, OrderingVariant::NormalOrdered);
    println!(
        "current-virasoro q=2 level 6: {:?} [{:?}]",
        cv.status,
        t.elapsed()
    );
    assert!(cv.is_pass());

    // oscillator crosscheck at the largest allowed degree
    let t = Instant::now();
    let cross = space.crosscheck_universal(4);
    println!(
        "crosscheck degree 4: {:?} ({} cases) [{:?}]",
        cross.status,
        cross.cases_total,
        t.elapsed()
    );
    assert!(cross.is_pass());

    println!("deep sweep complete");
}
