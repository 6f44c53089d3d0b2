//! Exact lowest-energy modules for the Virasoro algebra.
//!
//! A module is generated by a lowest-energy vector `Psi` with `L[0] Psi =
//! h Psi`, `L[n] Psi = 0` for `n > 0`, and central charge `c`. Level `n`
//! is spanned by the PBW monomials `L[-n1]...L[-nk] Psi` indexed by the
//! partitions of `n`; the sesquilinear form is fixed by `<Psi, Psi> = 1`
//! and the adjoint relation `L[n]^+ = L[-n]`.
//!
//! Operator actions reduce words to the PBW basis by exact commutation;
//! the per-generator results are memoized, since they dominate every Gram
//! matrix and spanning computation. Parameters may be exact rationals or
//! polynomials in `alpha`; ranks over symbolic parameters go through the
//! rational-function field, while positivity tests require rational ones.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::coeff::{rat, rat_int, Gaussian, Rational, Scalar};
use crate::liealg::LieElement;
use crate::linalg::ratfun::{poly_divmod, poly_gcd, RatFun};
use crate::linalg::{nullspace, symmetric_psd};
use crate::partitions::{partitions_of, Partition};
use crate::report::{location, Report};

#[derive(Debug, Error)]
pub enum VermaError {
    #[error("vectors belong to modules with different parameters")]
    ParameterMismatch,
    #[error("operation requires rational (alpha-free) parameters")]
    SymbolicParameters,
}

/// Central charge and lowest energy; exact rationals or polynomials in
/// `alpha`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleParams {
    pub c: Scalar,
    pub h: Scalar,
}

impl ModuleParams {
    pub fn rational(c: Rational, h: Rational) -> Self {
        ModuleParams {
            c: Scalar::from_rat(c),
            h: Scalar::from_rat(h),
        }
    }

    pub fn symbolic(c: Scalar, h: Scalar) -> Self {
        ModuleParams { c, h }
    }

    pub fn is_rational(&self) -> bool {
        self.c.as_rational().is_some() && self.h.as_rational().is_some()
    }
}

impl fmt::Display for ModuleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c = {}, h = {}", self.c, self.h)
    }
}

/// Exact vector in the module: scalar coefficients over the partition
/// basis. Vectors produced by difference-generator actions mix levels, so
/// homogeneity is queried rather than assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaVector {
    params: ModuleParams,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl VermaVector {
    pub fn zero(params: ModuleParams) -> Self {
        VermaVector {
            params,
            coeffs: BTreeMap::new(),
        }
    }

    /// The lowest-energy vector `Psi`.
    pub fn lowest(params: ModuleParams) -> Self {
        VermaVector::basis(params, Partition::empty())
    }

    /// The PBW basis monomial labelled by `partition`.
    pub fn basis(params: ModuleParams, partition: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(partition, Scalar::one());
        VermaVector { params, coeffs }
    }

    pub fn params(&self) -> &ModuleParams {
        &self.params
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

    /// Levels with nonzero components.
    pub fn levels(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.coeffs.keys().map(Partition::weight).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The level, when homogeneous; `None` for zero or mixed vectors.
    pub fn level(&self) -> Option<u32> {
        match self.levels().as_slice() {
            [l] => Some(*l),
            _ => None,
        }
    }

    /// Component of the given level.
    pub fn component(&self, level: u32) -> VermaVector {
        VermaVector {
            params: self.params.clone(),
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

    pub fn add(&self, rhs: &VermaVector) -> VermaVector {
        assert_eq!(self.params, rhs.params, "mixing modules");
        let mut out = self.clone();
        for (p, s) in &rhs.coeffs {
            out.add_term(p, s);
        }
        out
    }

    pub fn sub(&self, rhs: &VermaVector) -> VermaVector {
        self.add(&rhs.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, by: &Scalar) -> VermaVector {
        if by.is_zero() {
            return VermaVector::zero(self.params.clone());
        }
        VermaVector {
            params: self.params.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, s)| (p.clone(), s * by))
                .collect(),
        }
    }
}

impl fmt::Display for VermaVector {
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
                write!(f, "({s})*Psi")?;
            } else {
                write!(f, "({s})*L{p}Psi")?;
            }
            first = false;
        }
        Ok(())
    }
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

/// A lowest-energy module with its reduction memo.
pub struct VermaModule {
    params: ModuleParams,
    memo: Mutex<HashMap<(i64, Partition), BasisAction>>,
}

impl VermaModule {
    pub fn new(params: ModuleParams) -> Self {
        VermaModule {
            params,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn rational(c: Rational, h: Rational) -> Self {
        VermaModule::new(ModuleParams::rational(c, h))
    }

    pub fn params(&self) -> &ModuleParams {
        &self.params
    }

    pub fn lowest(&self) -> VermaVector {
        VermaVector::lowest(self.params.clone())
    }

    pub fn basis_vector(&self, partition: Partition) -> VermaVector {
        VermaVector::basis(self.params.clone(), partition)
    }

    /// `L[n]` applied to a basis monomial, reduced to the PBW basis.
    ///
    /// Reduction commutes `L[n]` past the leading generator:
    /// `L[n] L[-p] = L[-p] L[n] + (n + p) L[n-p] + delta(n, p) c (n^3-n)/12`.
    fn act_basis(&self, n: i64, partition: &Partition) -> BasisAction {
        let key = (n, partition.clone());
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let mut out = BasisAction::new();
        match partition.first() {
            None => {
                // action on Psi itself
                if n == 0 {
                    action_add(&mut out, partition, &self.params.h);
                } else if n < 0 {
                    action_add(&mut out, &Partition::new(vec![(-n) as u32]), &Scalar::one());
                }
            }
            Some(p) if n < 0 && (-n) as u32 >= p => {
                action_add(&mut out, &partition.with_part((-n) as u32), &Scalar::one());
            }
            Some(p) => {
                let p_i = p as i64;
                let rest = partition.without_first();
                for (mu, a) in self.act_basis(n, &rest) {
                    for (nu, b) in self.act_basis(-p_i, &mu) {
                        action_add(&mut out, &nu, &(&a * &b));
                    }
                }
                let lin = Scalar::from_rat(rat_int(n + p_i));
                for (mu, a) in self.act_basis(n - p_i, &rest) {
                    action_add(&mut out, &mu, &(&a * &lin));
                }
                if n == p_i {
                    let central = self.params.c.scale_rat(&rat(n * n * n - n, 12));
                    action_add(&mut out, &rest, &central);
                }
            }
        }
        self.memo
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    /// Exact action of `L[n]`.
    pub fn act_l(&self, n: i64, v: &VermaVector) -> VermaVector {
        assert_eq!(v.params, self.params, "vector from a different module");
        let mut out = VermaVector::zero(self.params.clone());
        for (p, s) in &v.coeffs {
            for (q, a) in self.act_basis(n, p) {
                out.add_term(&q, &(s * &a));
            }
        }
        out
    }

    /// The difference generator `K[n] = L[0] - L[n]`.
    pub fn act_k(&self, n: i64, v: &VermaVector) -> VermaVector {
        self.act_l(0, v).sub(&self.act_l(n, v))
    }

    /// Action of a general Virasoro element; `C` acts as `c`.
    pub fn apply(&self, x: &LieElement, v: &VermaVector) -> VermaVector {
        let mut out = v.scale(&(x.c_coeff() * &self.params.c));
        for (n, s) in x.l_terms() {
            out = out.add(&self.act_l(n, v).scale(s));
        }
        out
    }

    /// Sesquilinear form, antilinear in the first argument. Computed by
    /// flipping the first vector's generators onto the second via the
    /// adjoint relation; distinct levels pair to zero automatically.
    pub fn inner(&self, v: &VermaVector, w: &VermaVector) -> Result<Scalar, VermaError> {
        if v.params != self.params || w.params != self.params {
            return Err(VermaError::ParameterMismatch);
        }
        let mut total = Scalar::zero();
        for (p, s) in &v.coeffs {
            total = &total + &(&s.conj() * &self.pair_basis(p, w));
        }
        Ok(total)
    }

    fn pair_basis(&self, left: &Partition, w: &VermaVector) -> Scalar {
        match left.first() {
            None => w.coeff(&Partition::empty()),
            Some(p) => self.pair_basis(&left.without_first(), &self.act_l(p as i64, w)),
        }
    }

    /// Gram matrix of one level with exact rank and radical.
    pub fn gram(&self, level: u32) -> GramMatrix {
        let basis = partitions_of(level);
        let vectors: Vec<VermaVector> =
            basis.iter().map(|p| self.basis_vector(p.clone())).collect();
        let entries: Vec<Vec<Scalar>> = vectors
            .iter()
            .map(|v| {
                vectors
                    .iter()
                    .map(|w| self.inner(v, w).expect("same module"))
                    .collect()
            })
            .collect();
        let (rank, radical) = gram_rank_and_radical(&entries);
        GramMatrix {
            level,
            basis,
            entries,
            rank,
            radical,
        }
    }

    /// Exact positive-semidefiniteness of all levels up to `max_level`;
    /// requires rational parameters.
    pub fn psd_check(&self, max_level: u32) -> Result<Report, VermaError> {
        if !self.params.is_rational() {
            return Err(VermaError::SymbolicParameters);
        }
        let mut report = Report::new("psd")
            .with_param("c", self.params.c.to_string())
            .with_param("h", self.params.h.to_string())
            .with_param("maxlevel", max_level);
        for level in 0..=max_level {
            let gram = self.gram(level);
            let matrix: Vec<Vec<Rational>> = gram
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| {
                            e.as_rational()
                                .expect("rational parameters give rational entries")
                        })
                        .collect()
                })
                .collect();
            let outcome = symmetric_psd(&matrix);
            match outcome.witness {
                None => {
                    report.pass_case(
                        format!("level {level} positive semidefinite"),
                        format!("rank {}", outcome.rank),
                    );
                }
                Some(witness) => {
                    let vector = self.combination(&gram.basis, &witness);
                    let norm = self
                        .inner(&vector, &vector)
                        .expect("same module")
                        .as_rational()
                        .expect("rational norm");
                    report.fail_case(
                        format!("level {level} positive semidefinite"),
                        location(&[("level", level.to_string()), ("vector", vector.to_string())]),
                        format!("<v, v> = {norm}"),
                        "<v, v> >= 0",
                    );
                }
            }
        }
        Ok(report)
    }

    /// Linear combination of level-basis monomials with rational weights.
    pub fn combination(&self, basis: &[Partition], weights: &[Rational]) -> VermaVector {
        let mut out = VermaVector::zero(self.params.clone());
        for (p, w) in basis.iter().zip(weights) {
            out.add_term(p, &Scalar::from_rat(w.clone()));
        }
        out
    }
}

/// Hermitian level pairing with exact rank and radical data.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub level: u32,
    pub basis: Vec<Partition>,
    pub entries: Vec<Vec<Scalar>>,
    pub rank: usize,
    /// Kernel vectors as polynomial coordinates in `basis` order.
    pub radical: Vec<Vec<Scalar>>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn radical_dim(&self) -> usize {
        self.radical.len()
    }
}

/// Right null space of a matrix of polynomial entries: Gaussian field
/// elimination when the entries are constants, rational-function
/// elimination otherwise. Kernel vectors come back with denominators
/// cleared to polynomial coordinates.
pub fn scalar_nullspace(rows: &[Vec<Scalar>], n_cols: usize) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return (0..n_cols)
            .map(|i| {
                let mut v = vec![Scalar::zero(); n_cols];
                v[i] = Scalar::one();
                v
            })
            .collect();
    }
    let constant = rows
        .iter()
        .all(|row| row.iter().all(|e| e.as_gaussian().is_some()));
    if constant {
        let field_rows: Vec<Vec<Gaussian>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.as_gaussian().expect("constant"))
                    .collect()
            })
            .collect();
        nullspace(&field_rows)
            .into_iter()
            .map(|v| v.into_iter().map(Scalar::from_gaussian).collect())
            .collect()
    } else {
        let field_rows: Vec<Vec<RatFun>> = rows
            .iter()
            .map(|row| row.iter().map(|e| RatFun::from_poly(e.clone())).collect())
            .collect();
        nullspace(&field_rows)
            .into_iter()
            .map(|v| clear_denominators(&v))
            .collect()
    }
}

/// Rank and radical of a square pairing matrix.
pub fn gram_rank_and_radical(entries: &[Vec<Scalar>]) -> (usize, Vec<Vec<Scalar>>) {
    let n = entries.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let kernel = scalar_nullspace(entries, n);
    (n - kernel.len(), kernel)
}

/// Scale a rational-function vector to polynomial coordinates.
fn clear_denominators(v: &[RatFun]) -> Vec<Scalar> {
    let mut common = Scalar::one();
    for f in v {
        let den = f.denominator();
        let g = poly_gcd(&common, den);
        let (extra, _) = poly_divmod(den, &g);
        common = &common * &extra;
    }
    v.iter()
        .map(|f| {
            let (factor, rem) = poly_divmod(&common, f.denominator());
            debug_assert!(rem.is_zero());
            f.numerator() * &factor
        })
        .collect()
}

/// One member of the discrete series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteSeriesPoint {
    pub c: Rational,
    pub h: Rational,
    pub p: u32,
    pub q: u32,
}

/// The discrete-series central charge `c(m) = 1 - 6/((m+2)(m+3))`.
pub fn discrete_charge(m: u32) -> Rational {
    let m = m as i64;
    rat_int(1) - rat(6, (m + 2) * (m + 3))
}

/// All discrete-series points at index `m`:
/// `h = (((m+3)p - (m+2)q)^2 - 1) / (4(m+2)(m+3))` for `1 <= q <= p <= m+1`.
pub fn discrete_series(m: u32) -> Vec<DiscreteSeriesPoint> {
    let c = discrete_charge(m);
    let m_i = m as i64;
    let mut out = Vec::new();
    for p in 1..=m + 1 {
        for q in 1..=p {
            let top = (m_i + 3) * p as i64 - (m_i + 2) * q as i64;
            let h = rat(top * top - 1, 4 * (m_i + 2) * (m_i + 3));
            out.push(DiscreteSeriesPoint {
                c: c.clone(),
                h,
                p,
                q,
            });
        }
    }
    out
}

/// Exact classification of a parameter pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Trivial,
    Continuous,
    Discrete { m: u32, p: u32, q: u32 },
    Inadmissible,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Trivial => write!(f, "trivial"),
            Classification::Continuous => write!(f, "continuous"),
            Classification::Discrete { m, p, q } => write!(f, "discrete(m={m},p={p},q={q})"),
            Classification::Inadmissible => write!(f, "inadmissible"),
        }
    }
}

/// Decides admissibility of `(c, h)`: the trivial pair, the continuous
/// region `c >= 1`, `h >= 0`, or a discrete-series point. The search over
/// `m` is bounded because `c(m)` increases strictly towards one.
pub fn classify(c: &Rational, h: &Rational) -> Classification {
    if c.is_zero() && h.is_zero() {
        return Classification::Trivial;
    }
    if *c >= rat_int(1) {
        if !h.is_negative() {
            return Classification::Continuous;
        }
        return Classification::Inadmissible;
    }
    if c.is_negative() {
        return Classification::Inadmissible;
    }
    let mut m = 0u32;
    loop {
        let cm = discrete_charge(m);
        if cm > *c {
            return Classification::Inadmissible;
        }
        if cm == *c {
            for point in discrete_series(m) {
                if point.h == *h {
                    return Classification::Discrete {
                        m,
                        p: point.p,
                        q: point.q,
                    };
                }
            }
            return Classification::Inadmissible;
        }
        m += 1;
    }
}

/// A parameter pair together with its classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePair {
    pub c: Rational,
    pub h: Rational,
    pub classification: Classification,
}

impl AdmissiblePair {
    pub fn classify(c: Rational, h: Rational) -> Self {
        let classification = classify(&c, &h);
        AdmissiblePair {
            c,
            h,
            classification,
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.classification != Classification::Inadmissible
    }
}

#[cfg(test)]
#[path = "verma_tests.rs"]
mod tests;
