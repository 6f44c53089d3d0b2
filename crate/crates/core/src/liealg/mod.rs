//! Symbolic layer for the Virasoro algebra and its point-stabilizer
//! subalgebras.
//!
//! The Virasoro algebra is spanned by generators `l[n]` (`n` an integer)
//! and a central element `C`, with
//!
//! ```text
//! [l[a], l[b]] = (a - b) l[a+b] + C/12 (a^3 - a) delta(a+b, 0)
//! ```
//!
//! For a point count `n`, the subalgebra fixing `n` equally spaced points
//! of the circle is spanned by the difference generators
//! `k[j, r*n] = l[j] - l[r*n + j]` (`0 <= j < n`) together with `C`. This
//! module provides the bracket, the antilinear involution `theta`, exact
//! membership in the subalgebras, the rescaling endomorphisms `gamma_r`,
//! and the linear-functional solver showing that the central element and
//! all `k[r*n]` lie in the derived subalgebra.

mod functional;

pub use functional::{
    functional_solver_check, solve_bracket_functionals, FunctionalSolution, FunctionalVariant,
    InnerFunctional,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coeff::{rat, rat_int, Scalar};
use crate::report::{location, Report};

#[derive(Debug, Error)]
pub enum LieError {
    #[error("element is not in the point-stabilizer subalgebra (residue {residue}: class sum {class_sum})")]
    NotInSubalgebra { residue: u32, class_sum: String },
    #[error("truncation radius {0} is too small (need at least 6)")]
    TruncationTooSmall(i64),
    #[error("operation requires a single-point (n = 1) combination, got n = {0}")]
    WrongPointCount(u32),
}

/// Finite linear combination of Virasoro generators `l[n]` and the central
/// element `C`, with polynomial scalar coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    l: BTreeMap<i64, Scalar>,
    c: Scalar,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    /// The generator `l[n]`.
    pub fn l_gen(n: i64) -> Self {
        let mut l = BTreeMap::new();
        l.insert(n, Scalar::one());
        LieElement {
            l,
            c: Scalar::zero(),
        }
    }

    /// The central element `C`.
    pub fn central() -> Self {
        LieElement {
            l: BTreeMap::new(),
            c: Scalar::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.l.is_empty() && self.c.is_zero()
    }

    pub fn l_coeff(&self, n: i64) -> Scalar {
        self.l.get(&n).cloned().unwrap_or_default()
    }

    pub fn c_coeff(&self) -> &Scalar {
        &self.c
    }

    pub fn l_terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.l.iter().map(|(n, s)| (*n, s))
    }

    pub fn modes(&self) -> Vec<i64> {
        self.l.keys().copied().collect()
    }

    fn add_l(&mut self, n: i64, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let entry = self.l.entry(n).or_default();
        *entry = &*entry + s;
        if entry.is_zero() {
            self.l.remove(&n);
        }
    }

    pub fn add(&self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (n, s) in &rhs.l {
            out.add_l(*n, s);
        }
        out.c = &out.c + &rhs.c;
        out
    }

    pub fn sub(&self, rhs: &LieElement) -> LieElement {
        self.add(&rhs.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, by: &Scalar) -> LieElement {
        if by.is_zero() {
            return LieElement::zero();
        }
        LieElement {
            l: self.l.iter().map(|(n, s)| (*n, s * by)).collect(),
            c: &self.c * by,
        }
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, s) in &self.l {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({s})*l[{n}]")?;
            first = false;
        }
        if !self.c.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})*C", self.c)?;
        }
        Ok(())
    }
}

/// Which structure constants the bracket uses; the perturbed variant is a
/// negative control that bumps the single constant in `[l[1], l[-1]]` by
/// one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketVariant {
    Exact,
    PerturbedLinearTerm,
}

fn bracket_with(variant: BracketVariant, x: &LieElement, y: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (&a, xa) in &x.l {
        for (&b, yb) in &y.l {
            let coeff = xa * yb;
            if coeff.is_zero() {
                continue;
            }
            let mut linear = a - b;
            if variant == BracketVariant::PerturbedLinearTerm && (a, b) == (1, -1) {
                linear += 1;
            }
            out.add_l(a + b, &coeff.scale_rat(&rat_int(linear)));
            if a + b == 0 {
                let delta = rat(a * a * a - a, 12);
                out.c = &out.c + &coeff.scale_rat(&delta);
            }
        }
    }
    out
}

/// The Virasoro bracket, extended bilinearly; `C` is central.
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    bracket_with(BracketVariant::Exact, x, y)
}

/// The antilinear involution `theta`: `l[n] -> l[-n]`, `C -> C`,
/// coefficients conjugated.
pub fn theta(x: &LieElement) -> LieElement {
    LieElement {
        l: x.l.iter().map(|(n, s)| (-n, s.conj())).collect(),
        c: x.c.conj(),
    }
}

/// Index of a difference generator `k[j, r*n] = l[j] - l[r*n + j]` in the
/// `n`-point stabilizer subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KIndex {
    pub j: u32,
    pub r: i64,
    pub n: u32,
}

impl KIndex {
    pub fn new(j: u32, r: i64, n: u32) -> Self {
        assert!(n >= 1, "point count must be positive");
        assert!(j < n, "offset must satisfy 0 <= j < n");
        KIndex { j, r, n }
    }

    /// The mode of the subtracted generator, `r*n + j`.
    pub fn shifted_mode(&self) -> i64 {
        self.r * self.n as i64 + self.j as i64
    }

    /// Expansion `l[j] - l[r*n + j]`; zero when `r = 0`.
    pub fn expand(&self) -> LieElement {
        if self.r == 0 {
            return LieElement::zero();
        }
        LieElement::l_gen(self.j as i64).sub(&LieElement::l_gen(self.shifted_mode()))
    }
}

impl fmt::Display for KIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "k[{}]", self.r)
        } else {
            write!(f, "k[j={},r={},n={}]", self.j, self.r, self.n)
        }
    }
}

/// Finite combination of difference generators and `C`, for a fixed point
/// count. Terms are keyed by `(j, r)`; the zero generator `(j, 0)` is never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCombination {
    n: u32,
    terms: BTreeMap<(u32, i64), Scalar>,
    c: Scalar,
}

impl KCombination {
    pub fn zero(n: u32) -> Self {
        assert!(n >= 1);
        KCombination {
            n,
            terms: BTreeMap::new(),
            c: Scalar::zero(),
        }
    }

    pub fn gen(idx: KIndex) -> Self {
        let mut out = KCombination::zero(idx.n);
        out.add_term(idx.j, idx.r, &Scalar::one());
        out
    }

    /// Single-point generator `k[r]`.
    pub fn k(r: i64) -> Self {
        KCombination::gen(KIndex::new(0, r, 1))
    }

    pub fn central(n: u32) -> Self {
        let mut out = KCombination::zero(n);
        out.c = Scalar::one();
        out
    }

    pub fn point_count(&self) -> u32 {
        self.n
    }

    pub fn c_coeff(&self) -> &Scalar {
        &self.c
    }

    pub fn coeff(&self, j: u32, r: i64) -> Scalar {
        self.terms.get(&(j, r)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (KIndex, &Scalar)> {
        let n = self.n;
        self.terms
            .iter()
            .map(move |(&(j, r), s)| (KIndex::new(j, r, n), s))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.c.is_zero()
    }

    pub fn add_term(&mut self, j: u32, r: i64, s: &Scalar) {
        assert!(j < self.n);
        if r == 0 || s.is_zero() {
            return;
        }
        let entry = self.terms.entry((j, r)).or_default();
        *entry = &*entry + s;
        if entry.is_zero() {
            self.terms.remove(&(j, r));
        }
    }

    pub fn add_central(&mut self, s: &Scalar) {
        self.c = &self.c + s;
    }

    pub fn add(&self, rhs: &KCombination) -> KCombination {
        assert_eq!(
            self.n, rhs.n,
            "mixing combinations of different point counts"
        );
        let mut out = self.clone();
        for (&(j, r), s) in &rhs.terms {
            out.add_term(j, r, s);
        }
        out.c = &out.c + &rhs.c;
        out
    }

    pub fn sub(&self, rhs: &KCombination) -> KCombination {
        self.add(&rhs.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, by: &Scalar) -> KCombination {
        if by.is_zero() {
            return KCombination::zero(self.n);
        }
        KCombination {
            n: self.n,
            terms: self.terms.iter().map(|(k, s)| (*k, s * by)).collect(),
            c: &self.c * by,
        }
    }

    /// Expansion into Virasoro generators.
    pub fn expand(&self) -> LieElement {
        let mut out = LieElement::zero();
        for (idx, s) in self.terms() {
            out = out.add(&idx.expand().scale(s));
        }
        out.c = &out.c + &self.c;
        out
    }

    /// `theta` mapped through the expansion and re-extracted; the
    /// subalgebras are `theta`-invariant, so this always succeeds.
    pub fn theta(&self) -> KCombination {
        match kn_membership(&theta(&self.expand()), self.n) {
            Membership::Member(combo) => combo,
            Membership::NotMember { .. } => {
                unreachable!("theta must preserve the stabilizer subalgebra")
            }
        }
    }
}

impl fmt::Display for KCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, s) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({s})*{idx}")?;
            first = false;
        }
        if !self.c.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})*C", self.c)?;
        }
        Ok(())
    }
}

/// Closed form of the bracket of single-point generators:
///
/// ```text
/// [k[r], k[m]] = r k[r] - m k[m] - (r - m) k[r+m] + C/12 (r^3 - r) delta(r+m, 0)
/// ```
pub fn k_bracket_closed(r: i64, m: i64) -> KCombination {
    let mut out = KCombination::zero(1);
    out.add_term(0, r, &Scalar::from_rat(rat_int(r)));
    out.add_term(0, m, &Scalar::from_rat(rat_int(-m)));
    out.add_term(0, r + m, &Scalar::from_rat(rat_int(-(r - m))));
    if r + m == 0 {
        out.add_central(&Scalar::from_rat(rat(r * r * r - r, 12)));
    }
    out
}

/// Result of the exact membership test for the `n`-point subalgebra.
#[derive(Clone, Debug)]
pub enum Membership {
    Member(KCombination),
    NotMember { residue: u32, class_sum: Scalar },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }

    pub fn into_combination(self) -> Result<KCombination, LieError> {
        match self {
            Membership::Member(c) => Ok(c),
            Membership::NotMember { residue, class_sum } => Err(LieError::NotInSubalgebra {
                residue,
                class_sum: class_sum.to_string(),
            }),
        }
    }
}

/// Exact coordinates of `x` in the `k[j, r*n]` / `C` basis, or a witness
/// residue class on which the expansion is impossible.
///
/// For each residue class `j mod n`, a member must have coefficients
/// summing to zero over the class (each basis element contributes `+1` at
/// mode `j` and `-1` at mode `r*n + j`); the coordinates are then forced by
/// the modes outside `0..n`.
pub fn kn_membership(x: &LieElement, n: u32) -> Membership {
    let n_i = n as i64;
    let mut combo = KCombination::zero(n);
    for j in 0..n {
        let mut class_sum = Scalar::zero();
        for (mode, s) in x.l_terms() {
            if mode.rem_euclid(n_i) != j as i64 {
                continue;
            }
            class_sum = &class_sum + s;
            if mode != j as i64 {
                let r = (mode - j as i64) / n_i;
                combo.add_term(j, r, &-s);
            }
        }
        if !class_sum.is_zero() {
            return Membership::NotMember {
                residue: j,
                class_sum,
            };
        }
    }
    combo.add_central(x.c_coeff());
    Membership::Member(combo)
}

/// Verifies that brackets of basis generators stay inside the subalgebra.
pub fn kn_closure_check(n: u32, r_max: i64, variant: BracketVariant) -> Report {
    let mut report = Report::new("kn-closure")
        .with_param("n", n)
        .with_param("rmax", r_max)
        .with_param("variant", format!("{variant:?}"));
    let basis: Vec<KIndex> = (0..n)
        .flat_map(|j| {
            (-r_max..=r_max)
                .filter(|&r| r != 0)
                .map(move |r| KIndex::new(j, r, n))
        })
        .collect();
    for &left in &basis {
        let mut row_failures = 0usize;
        for &right in &basis {
            let b = bracket_with(variant, &left.expand(), &right.expand());
            match kn_membership(&b, n) {
                Membership::Member(_) => {}
                Membership::NotMember { residue, class_sum } => {
                    row_failures += 1;
                    report.fail_case(
                        format!("bracket({left},{right}) in subalgebra"),
                        location(&[
                            ("left", left.to_string()),
                            ("right", right.to_string()),
                            ("residue", residue.to_string()),
                        ]),
                        format!("class sum {class_sum}"),
                        "0",
                    );
                }
            }
        }
        if row_failures == 0 {
            report.pass_case(
                format!("bracket({left}, *) closes"),
                format!("{} partners", basis.len()),
            );
        }
    }
    report
}

/// Which form of the rescaling map to apply; dropping the central
/// correction is a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaVariant {
    Exact,
    DropCentralTerm,
}

/// The rescaling endomorphism of the single-point subalgebra:
/// `k[m] -> (1/r) k[r*m] + C/24 (r - 1/r)`, `C -> r C`.
pub fn gamma(r: u32, x: &KCombination, variant: GammaVariant) -> Result<KCombination, LieError> {
    assert!(r >= 1, "rescaling index must be positive");
    if x.point_count() != 1 {
        return Err(LieError::WrongPointCount(x.point_count()));
    }
    let r_i = r as i64;
    let correction = Scalar::from_rat(&rat_int(r_i) - &rat(1, r_i)).scale_rat(&rat(1, 24));
    let mut out = KCombination::zero(1);
    for (idx, s) in x.terms() {
        out.add_term(0, idx.r * r_i, &s.scale_rat(&rat(1, r_i)));
        if variant == GammaVariant::Exact {
            out.add_central(&(s * &correction));
        }
    }
    out.add_central(&x.c_coeff().scale_rat(&rat_int(r_i)));
    Ok(out)
}

/// Exhaustive Jacobi, antisymmetry, and `theta`-compatibility checks on
/// basis generators up to `range`, plus the same identities on seeded
/// random elements with Gaussian-rational polynomial coefficients.
pub fn vir_jacobi_check(range: i64, samples: u32, seed: u64) -> Report {
    let mut report = Report::new("vir-jacobi")
        .with_param("range", range)
        .with_param("samples", samples)
        .with_param("seed", seed);
    let gens: Vec<i64> = (-range..=range).collect();
    let mut worst = 0usize;
    for &a in &gens {
        for &b in &gens {
            // antisymmetry and theta-compatibility on generators
            let ab = bracket(&LieElement::l_gen(a), &LieElement::l_gen(b));
            let ba = bracket(&LieElement::l_gen(b), &LieElement::l_gen(a));
            if !ab.add(&ba).is_zero() {
                worst += 1;
                report.fail_case(
                    format!("antisymmetry at ({a},{b})"),
                    location(&[("a", a.to_string()), ("b", b.to_string())]),
                    ab.to_string(),
                    format!("-({ba})"),
                );
            }
            let tt = bracket(&theta(&LieElement::l_gen(a)), &theta(&LieElement::l_gen(b)));
            if tt != theta(&ba) {
                worst += 1;
                report.fail_case(
                    format!("theta compatibility at ({a},{b})"),
                    location(&[("a", a.to_string()), ("b", b.to_string())]),
                    tt.to_string(),
                    theta(&ba).to_string(),
                );
            }
            for &c in &gens {
                let jac = bracket(&ab, &LieElement::l_gen(c))
                    .add(&bracket(
                        &bracket(&LieElement::l_gen(b), &LieElement::l_gen(c)),
                        &LieElement::l_gen(a),
                    ))
                    .add(&bracket(
                        &bracket(&LieElement::l_gen(c), &LieElement::l_gen(a)),
                        &LieElement::l_gen(b),
                    ));
                if !jac.is_zero() {
                    worst += 1;
                    report.fail_case(
                        format!("jacobi at ({a},{b},{c})"),
                        location(&[
                            ("a", a.to_string()),
                            ("b", b.to_string()),
                            ("c", c.to_string()),
                        ]),
                        jac.to_string(),
                        "0",
                    );
                }
            }
        }
    }
    if worst == 0 {
        report.pass_case(
            format!("generator identities on |a|,|b|,|c| <= {range}"),
            format!("{} triples", gens.len().pow(3)),
        );
    }

    // sampled identities on random elements
    let mut state = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    let random_element = |next: &mut dyn FnMut() -> u64| {
        let mut x = LieElement::zero();
        for _ in 0..3 {
            let n = (next() % (2 * range as u64 + 1)) as i64 - range;
            let re = (next() % 11) as i64 - 5;
            let im = (next() % 11) as i64 - 5;
            let deg = (next() % 3) as u32;
            let coeff = Scalar::term(crate::coeff::Gaussian::new(rat_int(re), rat_int(im)), deg);
            x = x.add(&LieElement::l_gen(n).scale(&coeff));
        }
        x
    };
    let mut sampled_failures = 0usize;
    for i in 0..samples {
        let x = random_element(&mut next);
        let y = random_element(&mut next);
        let z = random_element(&mut next);
        let anti = bracket(&x, &y).add(&bracket(&y, &x));
        let jac = bracket(&bracket(&x, &y), &z)
            .add(&bracket(&bracket(&y, &z), &x))
            .add(&bracket(&bracket(&z, &x), &y));
        if !anti.is_zero() || !jac.is_zero() {
            sampled_failures += 1;
            report.fail_case(
                format!("sampled identities, draw {i}"),
                location(&[("draw", i.to_string())]),
                format!("antisymmetry residue {anti}; jacobi residue {jac}"),
                "0",
            );
        }
    }
    if sampled_failures == 0 {
        report.pass_case(
            "sampled antisymmetry and jacobi identities",
            format!("{samples} random triples"),
        );
    }
    report
}

/// Checks that `gamma_r` respects brackets and commutes with `theta` on
/// single-point generators with indices up to `range`.
pub fn gamma_endo_check(r: u32, range: i64, variant: GammaVariant) -> Report {
    let mut report = Report::new("gamma-endo")
        .with_param("r", r)
        .with_param("range", range)
        .with_param("variant", format!("{variant:?}"));
    let r_i = r as i64;
    let indices: Vec<i64> = (-range..=range).filter(|&a| a != 0).collect();
    for &a in &indices {
        let mut row_failures = 0usize;
        for &b in &indices {
            // gamma([k_a, k_b]) against [gamma(k_a), gamma(k_b)]; the
            // right-hand side reduces to (1/r^2) [k_ra, k_rb] because the
            // central corrections drop out of brackets.
            let lhs = gamma(r, &k_bracket_closed(a, b), variant).expect("n = 1");
            let rhs =
                k_bracket_closed(r_i * a, r_i * b).scale(&Scalar::from_rat(rat(1, r_i * r_i)));
            if lhs != rhs {
                row_failures += 1;
                report.fail_case(
                    format!("gamma_{r} respects bracket at ({a},{b})"),
                    location(&[("a", a.to_string()), ("b", b.to_string())]),
                    lhs.to_string(),
                    rhs.to_string(),
                );
            }
        }
        if row_failures == 0 {
            report.pass_case(
                format!("gamma_{r} respects brackets of k[{a}]"),
                format!("{} partners", indices.len()),
            );
        }
        let gt = gamma(r, &KCombination::k(a).theta(), variant).expect("n = 1");
        let tg = gamma(r, &KCombination::k(a), variant)
            .expect("n = 1")
            .theta();
        report.expect_eq(
            format!("gamma_{r} commutes with theta at k[{a}]"),
            location(&[("a", a.to_string())]),
            &gt.to_string(),
            &tg.to_string(),
        );
    }
    report
}
