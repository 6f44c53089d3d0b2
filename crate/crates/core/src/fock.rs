//! The charged oscillator (Fock) space and its twisted Virasoro
//! structures.
//!
//! The current algebra `[J[n], J[m]] = n delta(n+m,0)` acts on the
//! charge-`q` space with lowest vector `Phi_q` (`J[n] Phi_q = 0` for
//! `n > 0`, `J[0] = q`). The quadratic normal product gives Virasoro
//! operators `L[n] = (1/2) :J^2:[n]` at central charge one, and for a
//! formal real parameter `alpha` the twisted combinations
//!
//! ```text
//! K_alpha[n] = (L[0] - L[n]) + i n alpha (J[n] + (J[0] + J[n] - 2 S_n) / |n|)
//! ```
//!
//! with `S_n` the sum of `J[k]` for `k` between `0` and `n` inclusive,
//! represent the single-point difference-generator algebra with central
//! value `1 + 12 alpha^2`. Composing with the index-doubling endomorphism
//! gives the doubled representation `rho2`, whose restriction to the span
//! of the vacuum and `J[-1] Omega` produces two lowest-energy-type
//! vectors with energies `(1+12 alpha^2)/16` and `(9+12 alpha^2)/16` and
//! a nonzero mutual overlap, all certified by exact polynomial
//! arithmetic in `alpha`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::Zero;
use thiserror::Error;

use crate::coeff::{rat, rat_int, Gaussian, Rational, Scalar};
use crate::kreduce::{k_monomials_of_energy, KMonomial, UniversalProduct};
use crate::linalg::nullspace;
use crate::partitions::{partitions_of, Partition};
use crate::report::{location, Report};
use crate::verma::gram_rank_and_radical;

#[derive(Debug, Error)]
pub enum FockError {
    #[error("vectors carry different charges")]
    ChargeMismatch,
    #[error("the twisted generator is defined for nonzero mode only")]
    ZeroMode,
    #[error("operation requires the vacuum (charge zero) representation")]
    NonVacuumCharge,
    #[error(
        "naive quadratic sum does not terminate: mode {n} still contributes at |k| = {window}"
    )]
    Divergence { n: i64, window: i64 },
    #[error("operator does not preserve the two-dimensional span: residual {0}")]
    SpanNotInvariant(String),
    #[error("restricted actions differ across modes: {0}")]
    InconsistentRestriction(String),
    #[error("matrix entries are not even polynomials in alpha")]
    NotEvenInAlpha,
}

/// Exact vector in the charge-`q` oscillator space; a partition labels the
/// creation monomial `J[-p1]...J[-pk] Phi_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    charge: Rational,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl FockVector {
    pub fn zero(charge: Rational) -> Self {
        FockVector {
            charge,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(charge: Rational, partition: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(partition, Scalar::one());
        FockVector { charge, coeffs }
    }

    pub fn charge(&self) -> &Rational {
        &self.charge
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, partition: &Partition) -> Scalar {
        self.coeffs.get(partition).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.coeffs.iter()
    }

    /// Oscillator levels with nonzero components.
    pub fn levels(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.coeffs.keys().map(Partition::weight).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn component(&self, level: u32) -> FockVector {
        FockVector {
            charge: self.charge.clone(),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| p.weight() == level)
                .map(|(p, s)| (p.clone(), s.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, partition: &Partition, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(partition.clone()).or_default();
        *entry = &*entry + s;
        if entry.is_zero() {
            self.coeffs.remove(partition);
        }
    }

    pub fn add(&self, rhs: &FockVector) -> FockVector {
        assert_eq!(self.charge, rhs.charge, "mixing charges");
        let mut out = self.clone();
        for (p, s) in &rhs.coeffs {
            out.add_term(p, s);
        }
        out
    }

    pub fn sub(&self, rhs: &FockVector) -> FockVector {
        self.add(&rhs.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, by: &Scalar) -> FockVector {
        if by.is_zero() {
            return FockVector::zero(self.charge.clone());
        }
        FockVector {
            charge: self.charge.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, s)| (p.clone(), s * by))
                .collect(),
        }
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, s) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            if p.is_empty() {
                write!(f, "({s})*Phi")?;
            } else {
                write!(f, "({s})*J{p}Phi")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// The central value realized by the twisted generators, `1 + 12 alpha^2`.
pub fn twisted_charge() -> Scalar {
    &Scalar::one() + &Scalar::alpha_pow(2).scale_rat(&rat_int(12))
}

/// The constant shift of the doubled representation, `(1 + 12 alpha^2)/16`.
pub fn doubled_shift() -> Scalar {
    twisted_charge().scale_rat(&rat(1, 16))
}

/// The central value of the doubled representation, `2 (1 + 12 alpha^2)`.
pub fn doubled_charge() -> Scalar {
    twisted_charge().scale_rat(&rat_int(2))
}

/// Whether quadratic sums are normally ordered; the naive variant is a
/// negative control guarded against divergence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderingVariant {
    NormalOrdered,
    Naive,
}

/// Whether the twisted generators keep the boundary-sum correction; the
/// dropped variant is a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistVariant {
    Exact,
    DropBoundaryCorrection,
}

type BasisAction = BTreeMap<Partition, Scalar>;

fn action_add(map: &mut BasisAction, p: &Partition, s: &Scalar) {
    if s.is_zero() {
        return;
    }
    let entry = map.entry(p.clone()).or_default();
    *entry = &*entry + s;
    if entry.is_zero() {
        map.remove(p);
    }
}

/// The charge-`q` oscillator representation with its quadratic-action
/// memo.
pub struct FockSpace {
    charge: Rational,
    sugawara_memo: Mutex<HashMap<(i64, Partition), BasisAction>>,
}

impl FockSpace {
    pub fn new(charge: Rational) -> Self {
        FockSpace {
            charge,
            sugawara_memo: Mutex::new(HashMap::new()),
        }
    }

    /// The vacuum representation, charge zero.
    pub fn vacuum() -> Self {
        FockSpace::new(Rational::zero())
    }

    pub fn charge(&self) -> &Rational {
        &self.charge
    }

    /// The lowest vector `Phi_q` (the vacuum `Omega` at charge zero).
    pub fn lowest(&self) -> FockVector {
        FockVector::basis(self.charge.clone(), Partition::empty())
    }

    pub fn basis_vector(&self, partition: Partition) -> FockVector {
        FockVector::basis(self.charge.clone(), partition)
    }

    fn is_vacuum(&self) -> bool {
        self.charge.is_zero()
    }

    /// One current generator on one basis monomial.
    fn act_j_basis(&self, m: i64, partition: &Partition) -> Option<(Partition, Scalar)> {
        if m == 0 {
            if self.charge.is_zero() {
                return None;
            }
            return Some((partition.clone(), Scalar::from_rat(self.charge.clone())));
        }
        if m < 0 {
            return Some((partition.with_part((-m) as u32), Scalar::one()));
        }
        let part = m as u32;
        let mult = partition.multiplicity(part);
        if mult == 0 {
            return None;
        }
        let removed = partition.without_part(part).expect("part present");
        Some((removed, Scalar::from_rat(rat_int(m * mult as i64))))
    }

    /// The current generator `J[m]`: creation for `m < 0`, contraction
    /// with multiplicity factor for `m > 0`, the charge for `m = 0`.
    pub fn act_j(&self, m: i64, v: &FockVector) -> FockVector {
        assert_eq!(v.charge, self.charge, "vector from another charge sector");
        let mut out = FockVector::zero(self.charge.clone());
        for (p, s) in &v.coeffs {
            if let Some((q, a)) = self.act_j_basis(m, p) {
                out.add_term(&q, &(s * &a));
            }
        }
        out
    }

    /// Scalar product with `<Phi_q, Phi_q> = 1`, antilinear in the first
    /// argument, computed by flipping creators leftward (`J[-n]^+ = J[n]`).
    pub fn inner(&self, v: &FockVector, w: &FockVector) -> Result<Scalar, FockError> {
        if v.charge != self.charge || w.charge != self.charge {
            return Err(FockError::ChargeMismatch);
        }
        let mut total = Scalar::zero();
        for (p, s) in &v.coeffs {
            total = &total + &(&s.conj() * &self.pair_basis(p, w));
        }
        Ok(total)
    }

    fn pair_basis(&self, left: &Partition, w: &FockVector) -> Scalar {
        match left.first() {
            None => w.coeff(&Partition::empty()),
            Some(p) => self.pair_basis(&left.without_first(), &self.act_j(p as i64, w)),
        }
    }

    /// Quadratic Virasoro operator `L[n] = (1/2) :J^2:[n]` on one basis
    /// monomial; normal ordering puts the larger index on the right, so
    /// only finitely many `k` contribute at fixed level.
    fn sugawara_basis(&self, n: i64, partition: &Partition) -> BasisAction {
        let key = (n, partition.clone());
        if let Some(hit) = self.sugawara_memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let level = partition.weight() as i64;
        let mut out = BasisAction::new();
        for k in (n - level - 2)..=(level + 2) {
            // k > n-k: the term is J[n-k] J[k]; otherwise J[k] J[n-k]
            let (first, second) = if k > n - k { (k, n - k) } else { (n - k, k) };
            let Some((mid, a)) = self.act_j_basis(first, partition) else {
                continue;
            };
            if let Some((fin, b)) = self.act_j_basis(second, &mid) {
                action_add(&mut out, &fin, &(&a * &b));
            }
        }
        let half = Scalar::from_rat(rat(1, 2));
        for s in out.values_mut() {
            *s = &*s * &half;
        }
        self.sugawara_memo
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    /// The Virasoro operator `L[n]` of the quadratic construction.
    pub fn sugawara_l(&self, n: i64, v: &FockVector) -> FockVector {
        assert_eq!(v.charge, self.charge, "vector from another charge sector");
        let mut out = FockVector::zero(self.charge.clone());
        for (p, s) in &v.coeffs {
            for (q, a) in self.sugawara_basis(n, p) {
                out.add_term(&q, &(s * &a));
            }
        }
        out
    }

    /// The quadratic sum without normal ordering, truncated at `|k| <=
    /// window`. Contributions at the window edge mean the full sum does
    /// not exist, which is reported as a divergence.
    pub fn sugawara_l_naive(
        &self,
        n: i64,
        v: &FockVector,
        window: i64,
    ) -> Result<FockVector, FockError> {
        assert_eq!(v.charge, self.charge, "vector from another charge sector");
        let mut out = FockVector::zero(self.charge.clone());
        for k in -window..=window {
            // literal sum of J[n-k] J[k] over all k
            let mut term = FockVector::zero(self.charge.clone());
            for (p, s) in &v.coeffs {
                if let Some((mid, a)) = self.act_j_basis(k, p) {
                    if let Some((fin, b)) = self.act_j_basis(n - k, &mid) {
                        let mut single = FockVector::zero(self.charge.clone());
                        single.add_term(&fin, &(&(s * &a) * &b));
                        term = term.add(&single);
                    }
                }
            }
            if !term.is_zero() && k.abs() >= window - 1 {
                return Err(FockError::Divergence { n, window });
            }
            out = out.add(&term);
        }
        Ok(out.scale(&Scalar::from_rat(rat(1, 2))))
    }

    fn l_op(
        &self,
        variant: OrderingVariant,
        n: i64,
        v: &FockVector,
    ) -> Result<FockVector, FockError> {
        match variant {
            OrderingVariant::NormalOrdered => Ok(self.sugawara_l(n, v)),
            OrderingVariant::Naive => self.sugawara_l_naive(n, v, 10),
        }
    }

    /// Verifies `[L[n], J[m]] = -m J[n+m]` and the Virasoro relations at
    /// central charge exactly one, on every basis vector up to `level`.
    pub fn current_virasoro_check(
        &self,
        max_level: u32,
        n_max: i64,
        variant: OrderingVariant,
    ) -> Report {
        let mut report = Report::new("current-virasoro")
            .with_param("q", self.charge.to_string())
            .with_param("level", max_level)
            .with_param("nmax", n_max)
            .with_param("variant", format!("{variant:?}"));
        let basis: Vec<FockVector> = (0..=max_level)
            .flat_map(partitions_of)
            .map(|p| self.basis_vector(p))
            .collect();
        for n in -n_max..=n_max {
            for m in -n_max..=n_max {
                let mut mismatches = 0usize;
                for v in &basis {
                    // [L_n, J_m] v = -m J_{n+m} v
                    let mixed = (|| -> Result<(FockVector, FockVector), FockError> {
                        let lhs = self
                            .l_op(variant, n, &self.act_j(m, v))?
                            .sub(&self.act_j(m, &self.l_op(variant, n, v)?));
                        let rhs = self.act_j(n + m, v).scale(&Scalar::from_int(-m));
                        Ok((lhs, rhs))
                    })();
                    match mixed {
                        Err(e) => {
                            report.fail_case(
                                format!("[L[{n}], J[{m}]] well defined"),
                                location(&[("n", n.to_string()), ("m", m.to_string())]),
                                e.to_string(),
                                "a finite operator",
                            );
                            return report;
                        }
                        Ok((lhs, rhs)) => {
                            if lhs != rhs {
                                mismatches += 1;
                                report.fail_case(
                                    format!("[L[{n}], J[{m}]] = -m J[{}]", n + m),
                                    location(&[
                                        ("n", n.to_string()),
                                        ("m", m.to_string()),
                                        ("vector", v.to_string()),
                                    ]),
                                    lhs.to_string(),
                                    rhs.to_string(),
                                );
                            }
                        }
                    }
                    // [L_n, L_m] v with the central charge literally one
                    let viras = (|| -> Result<(FockVector, FockVector), FockError> {
                        let lhs = self
                            .l_op(variant, n, &self.l_op(variant, m, v)?)?
                            .sub(&self.l_op(variant, m, &self.l_op(variant, n, v)?)?);
                        let mut rhs = self
                            .l_op(variant, n + m, v)?
                            .scale(&Scalar::from_int(n - m));
                        if n + m == 0 {
                            rhs = rhs.add(&v.scale(&Scalar::from_rat(rat(n * n * n - n, 12))));
                        }
                        Ok((lhs, rhs))
                    })();
                    match viras {
                        Err(e) => {
                            report.fail_case(
                                format!("[L[{n}], L[{m}]] well defined"),
                                location(&[("n", n.to_string()), ("m", m.to_string())]),
                                e.to_string(),
                                "a finite operator",
                            );
                            return report;
                        }
                        Ok((lhs, rhs)) => {
                            if lhs != rhs {
                                mismatches += 1;
                                report.fail_case(
                                    format!("[L[{n}], L[{m}]] Virasoro relation (c = 1)"),
                                    location(&[
                                        ("n", n.to_string()),
                                        ("m", m.to_string()),
                                        ("vector", v.to_string()),
                                    ]),
                                    lhs.to_string(),
                                    rhs.to_string(),
                                );
                            }
                        }
                    }
                }
                if mismatches == 0 {
                    report.pass_case(
                        format!("current and Virasoro relations at (n, m) = ({n}, {m})"),
                        format!("{} basis vectors", basis.len()),
                    );
                }
            }
        }
        report
    }

    /// Sum of the currents `J[k]` for `k` between `0` and `n` inclusive.
    fn charge_window_sum(&self, n: i64, v: &FockVector) -> FockVector {
        let (lo, hi) = (n.min(0), n.max(0));
        let mut out = FockVector::zero(self.charge.clone());
        for k in lo..=hi {
            out = out.add(&self.act_j(k, v));
        }
        out
    }

    /// The twisted generator
    /// `(L[0] - L[n]) + i n alpha (J[n] + (J[0] + J[n] - 2 S_n)/|n|)`,
    /// an exact evaluation of the defining formula (the `n/|n|` sign
    /// behaviour is kept as written).
    pub fn k_alpha(
        &self,
        n: i64,
        v: &FockVector,
        variant: TwistVariant,
    ) -> Result<FockVector, FockError> {
        if n == 0 {
            return Err(FockError::ZeroMode);
        }
        let base = self.sugawara_l(0, v).sub(&self.sugawara_l(n, v));
        let mut current = self.act_j(n, v);
        if variant == TwistVariant::Exact {
            let boundary = self
                .act_j(0, v)
                .add(&self.act_j(n, v))
                .sub(&self.charge_window_sum(n, v).scale(&Scalar::from_int(2)));
            current = current.add(&boundary.scale(&Scalar::from_rat(rat(1, n.abs()))));
        }
        let in_alpha = Scalar::term(Gaussian::imaginary(rat_int(n)), 1);
        Ok(base.add(&current.scale(&in_alpha)))
    }

    /// Verifies the difference-generator relations for the twisted
    /// operators, with the central element represented by `1 + 12
    /// alpha^2`, as polynomial identities in `alpha`.
    pub fn k_alpha_relations_check(
        &self,
        max_level: u32,
        n_max: i64,
        variant: TwistVariant,
    ) -> Report {
        let mut report = Report::new("k-alpha-relations")
            .with_param("q", self.charge.to_string())
            .with_param("level", max_level)
            .with_param("nmax", n_max)
            .with_param("variant", format!("{variant:?}"));
        let basis: Vec<FockVector> = (0..=max_level)
            .flat_map(partitions_of)
            .map(|p| self.basis_vector(p))
            .collect();
        let central = twisted_charge();
        let modes: Vec<i64> = (-n_max..=n_max).filter(|&n| n != 0).collect();
        for &n in &modes {
            for &m in &modes {
                let mut mismatches = 0usize;
                for v in &basis {
                    let run = (|| -> Result<(FockVector, FockVector), FockError> {
                        let lhs = self
                            .k_alpha(n, &self.k_alpha(m, v, variant)?, variant)?
                            .sub(&self.k_alpha(m, &self.k_alpha(n, v, variant)?, variant)?);
                        let mut rhs = self
                            .k_alpha(n, v, variant)?
                            .scale(&Scalar::from_int(n))
                            .sub(&self.k_alpha(m, v, variant)?.scale(&Scalar::from_int(m)));
                        if n + m != 0 {
                            rhs = rhs.sub(
                                &self
                                    .k_alpha(n + m, v, variant)?
                                    .scale(&Scalar::from_int(n - m)),
                            );
                        } else {
                            let delta = central.scale_rat(&rat(n * n * n - n, 12));
                            rhs = rhs.add(&v.scale(&delta));
                        }
                        Ok((lhs, rhs))
                    })();
                    let (lhs, rhs) = run.expect("nonzero modes");
                    if lhs != rhs {
                        mismatches += 1;
                        report.fail_case(
                            format!("[K[{n}], K[{m}]] closed relation"),
                            location(&[
                                ("n", n.to_string()),
                                ("m", m.to_string()),
                                ("vector", v.to_string()),
                            ]),
                            lhs.to_string(),
                            rhs.to_string(),
                        );
                    }
                }
                if mismatches == 0 {
                    report.pass_case(
                        format!("twisted relations at (n, m) = ({n}, {m})"),
                        format!("{} basis vectors", basis.len()),
                    );
                }
            }
        }
        report
    }

    /// The doubled representation through the index-doubling
    /// endomorphism: `(1/2) K_alpha[2n] + (1 + 12 alpha^2)/16`.
    pub fn rho2(&self, n: i64, v: &FockVector) -> Result<FockVector, FockError> {
        if !self.is_vacuum() {
            return Err(FockError::NonVacuumCharge);
        }
        if n == 0 {
            return Err(FockError::ZeroMode);
        }
        let twisted = self.k_alpha(2 * n, v, TwistVariant::Exact)?;
        Ok(twisted
            .scale(&Scalar::from_rat(rat(1, 2)))
            .add(&v.scale(&doubled_shift())))
    }

    /// The literal display of the doubled generator:
    /// `(1/2)(L[0] - L[2n]) + i n alpha (J[2n] + (J[2n] - 2 S_{2n})/(2|n|))
    ///  + (1 + 12 alpha^2)/16` (no charge term at `q = 0`).
    pub fn rho2_literal(&self, n: i64, v: &FockVector) -> Result<FockVector, FockError> {
        if !self.is_vacuum() {
            return Err(FockError::NonVacuumCharge);
        }
        if n == 0 {
            return Err(FockError::ZeroMode);
        }
        let two_n = 2 * n;
        let base = self
            .sugawara_l(0, v)
            .sub(&self.sugawara_l(two_n, v))
            .scale(&Scalar::from_rat(rat(1, 2)));
        let boundary = self
            .act_j(two_n, v)
            .sub(&self.charge_window_sum(two_n, v).scale(&Scalar::from_int(2)));
        let current = self
            .act_j(two_n, v)
            .add(&boundary.scale(&Scalar::from_rat(rat(1, 2 * n.abs()))));
        let in_alpha = Scalar::term(Gaussian::imaginary(rat_int(n)), 1);
        Ok(base
            .add(&current.scale(&in_alpha))
            .add(&v.scale(&doubled_shift())))
    }

    /// Asserts the two evaluation routes of the doubled generator agree
    /// on every basis vector up to `max_level`, for nonzero `|n| <= n_max`.
    pub fn rho2_routes_check(&self, max_level: u32, n_max: i64) -> Report {
        let mut report = Report::new("rho2-routes")
            .with_param("level", max_level)
            .with_param("nmax", n_max);
        if !self.is_vacuum() {
            return report.error(FockError::NonVacuumCharge.to_string());
        }
        let basis: Vec<FockVector> = (0..=max_level)
            .flat_map(partitions_of)
            .map(|p| self.basis_vector(p))
            .collect();
        for n in (-n_max..=n_max).filter(|&n| n != 0) {
            let mut mismatches = 0usize;
            for v in &basis {
                let composed = self.rho2(n, v).expect("vacuum, nonzero mode");
                let literal = self.rho2_literal(n, v).expect("vacuum, nonzero mode");
                if composed != literal {
                    mismatches += 1;
                    report.fail_case(
                        format!("doubled generator routes agree at n = {n}"),
                        location(&[("n", n.to_string()), ("vector", v.to_string())]),
                        composed.to_string(),
                        literal.to_string(),
                    );
                }
            }
            if mismatches == 0 {
                report.pass_case(
                    format!("doubled generator routes agree at n = {n}"),
                    format!("{} basis vectors", basis.len()),
                );
            }
        }
        report
    }
}

/// The doubled generators restricted to `Span{Omega, J[-1] Omega}`.
#[derive(Clone, Debug)]
pub struct TwoByTwoAction {
    /// Columns are the images of `Omega` and `J[-1] Omega`.
    pub matrix: [[Scalar; 2]; 2],
    /// The diagonal of the upper-triangular restriction.
    pub eigenvalues: (Scalar, Scalar),
    /// Difference of the eigenvalues (exactly one half).
    pub gap: Scalar,
    /// Coefficient of the second eigenvector `Phi = J[-1]Omega + beta Omega`.
    pub beta: Scalar,
}

impl FockSpace {
    /// Restricts the doubled generators to `Span{Omega, J[-1] Omega}`,
    /// verifying invariance and that the restriction is identical for
    /// every positive mode up to `n_max`; returns the triangular matrix,
    /// its eigenvalues, and the solved second eigenvector coefficient.
    pub fn rho2_eigen_analysis(&self, n_max: i64) -> Result<TwoByTwoAction, FockError> {
        if !self.is_vacuum() {
            return Err(FockError::NonVacuumCharge);
        }
        let omega = self.lowest();
        let excited = self.basis_vector(Partition::new(vec![1]));
        let restrict = |w: &FockVector| -> Result<(Scalar, Scalar), FockError> {
            let a = w.coeff(&Partition::empty());
            let b = w.coeff(&Partition::new(vec![1]));
            let residual = w.sub(&omega.scale(&a)).sub(&excited.scale(&b));
            if !residual.is_zero() {
                return Err(FockError::SpanNotInvariant(residual.to_string()));
            }
            Ok((a, b))
        };
        let mut matrix: Option<[[Scalar; 2]; 2]> = None;
        for n in 1..=n_max {
            let (a00, a10) = restrict(&self.rho2(n, &omega)?)?;
            let (a01, a11) = restrict(&self.rho2(n, &excited)?)?;
            let m = [[a00, a01], [a10, a11]];
            match &matrix {
                None => matrix = Some(m),
                Some(prev) => {
                    if *prev != m {
                        return Err(FockError::InconsistentRestriction(format!(
                            "mode {n} differs from mode 1"
                        )));
                    }
                }
            }
        }
        let matrix = matrix.expect("at least one mode");
        if !matrix[1][0].is_zero() {
            return Err(FockError::SpanNotInvariant(format!(
                "lower-left entry {} nonzero",
                matrix[1][0]
            )));
        }
        let lambda1 = matrix[0][0].clone();
        let lambda2 = matrix[1][1].clone();
        let gap = &lambda2 - &lambda1;
        // beta solves lambda1 beta + b = lambda2 beta for b the corner entry
        let gap_const = gap.as_gaussian().ok_or_else(|| {
            FockError::InconsistentRestriction("eigenvalue gap is not constant".into())
        })?;
        let beta = matrix[0][1].scale(&gap_const.inv());
        Ok(TwoByTwoAction {
            matrix,
            eigenvalues: (lambda1, lambda2),
            gap,
            beta,
        })
    }

    /// The second lowest-energy-type vector `Phi = J[-1]Omega + beta Omega`.
    pub fn second_lowest_vector(&self, analysis: &TwoByTwoAction) -> FockVector {
        self.basis_vector(Partition::new(vec![1]))
            .add(&self.lowest().scale(&analysis.beta))
    }
}

/// One energy layer of an orbit family.
#[derive(Clone, Debug)]
pub struct OrbitLevel {
    pub energy: u32,
    pub monomials: Vec<KMonomial>,
    pub gram: Vec<Vec<Scalar>>,
    /// Rank over the rational-function field (identically in `alpha`).
    pub rank_generic: usize,
    /// Rank after specializing `alpha^2`; equals the generic rank when
    /// the specialization avoids the pivot roots.
    pub rank_specialized: usize,
}

/// Monomial orbit of a starting vector under the negative doubled
/// generators, with per-level Gram data.
#[derive(Clone, Debug)]
pub struct OrbitFamily {
    pub start: String,
    pub max_energy: u32,
    /// The recorded `alpha^2` specialization used for numeric ranks.
    pub alpha_sq: Rational,
    pub levels: Vec<OrbitLevel>,
}

impl FockSpace {
    /// Applies all monomials in the negative doubled generators of total
    /// energy up to `max_energy` to `start`.
    pub fn orbit_family(
        &self,
        start: &FockVector,
        label: &str,
        max_energy: u32,
        alpha_sq: &Rational,
    ) -> Result<OrbitFamily, FockError> {
        if !self.is_vacuum() {
            return Err(FockError::NonVacuumCharge);
        }
        let mut levels = Vec::new();
        for energy in 0..=max_energy {
            let monomials = k_monomials_of_energy(energy);
            let vectors: Vec<FockVector> = monomials
                .iter()
                .map(|mono| {
                    let mut v = start.clone();
                    for &idx in mono.indices().iter().rev() {
                        v = self.rho2(-(idx as i64), &v).expect("vacuum, nonzero mode");
                    }
                    v
                })
                .collect();
            let gram: Vec<Vec<Scalar>> = vectors
                .iter()
                .map(|v| {
                    vectors
                        .iter()
                        .map(|w| self.inner(v, w).expect("same charge"))
                        .collect()
                })
                .collect();
            let (rank_generic, _) = gram_rank_and_radical(&gram);
            let numeric: Result<Vec<Vec<Gaussian>>, FockError> = gram
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| {
                            e.eval_alpha_squared(alpha_sq)
                                .ok_or(FockError::NotEvenInAlpha)
                        })
                        .collect()
                })
                .collect();
            let numeric = numeric?;
            let rank_specialized = numeric.len() - nullspace(&numeric).len();
            levels.push(OrbitLevel {
                energy,
                monomials,
                gram,
                rank_generic,
                rank_specialized,
            });
        }
        Ok(OrbitFamily {
            start: label.to_string(),
            max_energy,
            alpha_sq: alpha_sq.clone(),
            levels,
        })
    }

    /// Certifies that the orbit pairings reproduce the universal scalar
    /// product: the vacuum orbit at `(c, h1)` and the second orbit at
    /// `(c, h2)` scaled by `<Phi, Phi>`, with `c = 2(1 + 12 alpha^2)`,
    /// `h1 = c/32`, `h2 = h1 + 1/2`, as identities in `alpha`.
    pub fn crosscheck_universal(&self, max_degree: u32) -> Report {
        let mut report = Report::new("crosscheck-universal")
            .with_param("maxdegree", max_degree)
            .with_param("side", "oscillator");
        if !self.is_vacuum() {
            return report.error(FockError::NonVacuumCharge.to_string());
        }
        let analysis = match self.rho2_eigen_analysis(6) {
            Ok(a) => a,
            Err(e) => return report.error(e.to_string()),
        };
        let omega = self.lowest();
        let phi = self.second_lowest_vector(&analysis);
        let phi_norm = self.inner(&phi, &phi).expect("same charge");

        let h1 = analysis.eigenvalues.0.clone();
        let h2 = analysis.eigenvalues.1.clone();
        let uni1 = UniversalProduct::new(doubled_charge(), h1);
        let uni2 = UniversalProduct::new(doubled_charge(), h2);

        let monomials: Vec<KMonomial> = (0..=max_degree).flat_map(k_monomials_of_energy).collect();
        let orbit = |start: &FockVector, mono: &KMonomial| -> FockVector {
            let mut v = start.clone();
            for &idx in mono.indices().iter().rev() {
                v = self.rho2(-(idx as i64), &v).expect("vacuum, nonzero mode");
            }
            v
        };
        let omega_vectors: Vec<FockVector> = monomials.iter().map(|m| orbit(&omega, m)).collect();
        let phi_vectors: Vec<FockVector> = monomials.iter().map(|m| orbit(&phi, m)).collect();

        for (i, left) in monomials.iter().enumerate() {
            let mut mismatches = 0usize;
            for (j, right) in monomials.iter().enumerate() {
                let concrete = self
                    .inner(&omega_vectors[i], &omega_vectors[j])
                    .expect("charge");
                let reduced = uni1.product(left, right);
                if concrete != reduced {
                    mismatches += 1;
                    report.fail_case(
                        format!("vacuum orbit <{left}, {right}>"),
                        location(&[("left", left.to_string()), ("right", right.to_string())]),
                        concrete.to_string(),
                        reduced.to_string(),
                    );
                }
                let concrete2 = self
                    .inner(&phi_vectors[i], &phi_vectors[j])
                    .expect("charge");
                let reduced2 = &uni2.product(left, right) * &phi_norm;
                if concrete2 != reduced2 {
                    mismatches += 1;
                    report.fail_case(
                        format!("second orbit <{left}, {right}>"),
                        location(&[("left", left.to_string()), ("right", right.to_string())]),
                        concrete2.to_string(),
                        reduced2.to_string(),
                    );
                }
            }
            if mismatches == 0 {
                report.pass_case(
                    format!("orbit pairings <{left}, *> match the universal product"),
                    format!("{} partners, both orbits", monomials.len()),
                );
            }
        }
        report
    }
}

#[cfg(test)]
#[path = "fock_tests.rs"]
mod tests;
