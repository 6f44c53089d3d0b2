//! Exact linear algebra over the crate's scalar fields.
//!
//! Everything here is plain Gaussian elimination with exact arithmetic; no
//! pivoting heuristics are needed because there is no rounding. The same
//! routines run over `Rational`, `Gaussian`, and the rational-function
//! field [`ratfun::RatFun`] used for generic ranks of `alpha`-dependent
//! matrices.

pub mod ratfun;

use num_traits::{One, Signed, Zero};

use crate::coeff::{Gaussian, Rational};

/// Field operations needed by the elimination routines.
pub trait FieldElem: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
}

impl FieldElem for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl FieldElem for Gaussian {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        Gaussian::inv(self)
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: FieldElem>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let n_rows = rows.len();
    if n_rows == 0 {
        return Vec::new();
    }
    let n_cols = rows[0].len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(pivot_row) = (rank..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].inv();
        for entry in rows[rank][col..].iter_mut() {
            *entry = entry.mul(&inv);
        }
        for r in 0..n_rows {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let pivot_row_values = rows[rank][col..].to_vec();
            for (entry, pivot_value) in rows[r][col..].iter_mut().zip(&pivot_row_values) {
                *entry = entry.sub(&pivot_value.mul(&factor));
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == n_rows {
            break;
        }
    }
    pivots
}

/// Rank of a matrix given as rows.
pub fn rank<F: FieldElem>(rows: &[Vec<F>]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

/// Basis of the right null space of the matrix (vectors `v` with `A v = 0`),
/// one vector per free column, in column order.
pub fn nullspace<F: FieldElem>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let n_cols = rows[0].len();
    let mut work = rows.to_vec();
    let pivots = rref(&mut work);
    let mut basis = Vec::new();
    let mut pivot_iter = pivots.iter().copied().enumerate().collect::<Vec<_>>();
    pivot_iter.sort_by_key(|&(_, col)| col);
    for free in 0..n_cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![F::zero(); n_cols];
        v[free] = F::one();
        for &(row, col) in &pivot_iter {
            v[col] = work[row][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Outcome of the exact positive-semidefiniteness test on a symmetric
/// rational matrix.
#[derive(Clone, Debug)]
pub struct PsdOutcome {
    /// Pivots produced by symmetric elimination, in elimination order.
    pub pivots: Vec<Rational>,
    /// Rank (number of nonzero pivots) when the test passes.
    pub rank: usize,
    /// Basis combinations spanning the radical when the test passes.
    pub radical: Vec<Vec<Rational>>,
    /// A combination with strictly negative self-pairing, when not PSD.
    pub witness: Option<Vec<Rational>>,
}

impl PsdOutcome {
    pub fn is_psd(&self) -> bool {
        self.witness.is_none()
    }
}

/// LDL-style elimination with diagonal pivot search. The input must be
/// symmetric; the matrix is interpreted as the pairing of a basis, and the
/// returned witness (if any) gives coordinates of a vector of negative
/// self-pairing.
pub fn symmetric_psd(matrix: &[Vec<Rational>]) -> PsdOutcome {
    let n = matrix.len();
    let rat_zero = <Rational as FieldElem>::zero();
    let mut a = matrix.to_vec();
    // `basis[i]` expresses the current i-th vector in the original basis.
    let mut basis: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = vec![rat_zero.clone(); n];
            row[i] = <Rational as FieldElem>::one();
            row
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut pivots = Vec::new();

    while let Some(pos) = active.iter().position(|&i| !FieldElem::is_zero(&a[i][i])) {
        let p = active.remove(pos);
        let d = a[p][p].clone();
        if d.is_negative() {
            pivots.push(d);
            return PsdOutcome {
                pivots,
                rank: 0,
                radical: Vec::new(),
                witness: Some(basis[p].clone()),
            };
        }
        pivots.push(d.clone());
        for &j in &active {
            if FieldElem::is_zero(&a[j][p]) {
                continue;
            }
            // single-sided row updates suffice: with a symmetric input,
            // A[j][k] - (A[j][p]/d) A[p][k] equals the full congruence
            // update on the active block, which stays symmetric
            let f = &a[j][p] / &d;
            let pivot_basis = basis[p].clone();
            for (entry, pivot_value) in basis[j].iter_mut().zip(&pivot_basis) {
                *entry = &*entry - &(&f * pivot_value);
            }
            for &k in active.iter().chain(std::iter::once(&p)) {
                let delta = &f * &a[p][k];
                a[j][k] = &a[j][k] - &delta;
            }
            a[j][p] = rat_zero.clone();
        }
    }

    // All remaining diagonal entries vanish; any nonzero off-diagonal entry
    // between remaining vectors produces an explicit negative-norm vector.
    for (idx, &j) in active.iter().enumerate() {
        for &k in &active[idx + 1..] {
            if FieldElem::is_zero(&a[j][k]) {
                continue;
            }
            let witness: Vec<Rational> = if a[j][k].is_positive() {
                (0..n).map(|t| &basis[j][t] - &basis[k][t]).collect()
            } else {
                (0..n).map(|t| &basis[j][t] + &basis[k][t]).collect()
            };
            return PsdOutcome {
                pivots,
                rank: 0,
                radical: Vec::new(),
                witness: Some(witness),
            };
        }
    }

    let rank = pivots.iter().filter(|p| !FieldElem::is_zero(*p)).count();
    let radical = active.iter().map(|&i| basis[i].clone()).collect();
    PsdOutcome {
        pivots,
        rank,
        radical,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int};

    fn rmat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = rmat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot = row
                .iter()
                .zip(&ns[0])
                .fold(<Rational as FieldElem>::zero(), |acc, (a, b)| acc + a * b);
            assert!(FieldElem::is_zero(&dot));
        }
    }

    #[test]
    fn psd_pass_with_radical() {
        let m = rmat(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 2]]);
        let out = symmetric_psd(&m);
        assert!(out.is_psd());
        assert_eq!(out.rank, 2);
        assert_eq!(out.radical.len(), 1);
    }

    #[test]
    fn psd_fail_negative_diagonal() {
        let m = rmat(&[&[1, 0], &[0, -3]]);
        let out = symmetric_psd(&m);
        let w = out.witness.expect("not psd");
        // verify the witness really has negative self-pairing
        let norm: Rational = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| &w[i] * &m[i][j] * &w[j])
            .sum();
        assert!(norm.is_negative());
    }

    #[test]
    fn psd_fail_zero_diagonal_off_diagonal() {
        let m = rmat(&[&[0, 2], &[2, 0]]);
        let out = symmetric_psd(&m);
        let w = out.witness.expect("not psd");
        let norm: Rational = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| &w[i] * &m[i][j] * &w[j])
            .sum();
        assert!(norm.is_negative());
    }

    #[test]
    fn psd_indefinite_found_via_elimination() {
        // [[1, 2], [2, 1]] has eigenvalues 3 and -1.
        let m = rmat(&[&[1, 2], &[2, 1]]);
        let out = symmetric_psd(&m);
        let w = out.witness.expect("not psd");
        let norm: Rational = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| &w[i] * &m[i][j] * &w[j])
            .sum();
        assert_eq!(norm, rat(-3, 1));
    }
}
