//! Difference-generator calculus on lowest-energy modules.
//!
//! For `K[n] = L[0] - L[n]` the commutation relations close among the
//! `K`'s, and the lowest-energy vector satisfies `K[n] Psi = h Psi` for
//! all `n > 0`. Two consequences are certified here:
//!
//! - scalar products of `K`-monomial vectors are *universal*: they are
//!   computed from `(c, h)` alone by commuting positive generators to the
//!   right ([`UniversalProduct`]), independently of any concrete module;
//! - the `K`-monomials span the module, level by level
//!   ([`k_monomial_span_check`]), and for `h = 0` so does the family built
//!   from three-point annihilators ([`h0_spanning_check`]).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::coeff::{rat, rat_int, Rational, Scalar};
use crate::liealg::{kn_membership, theta, KCombination, LieElement, LieError};
use crate::partitions::{partitions_of, partitions_of_with_min, Partition};
use crate::report::{location, Report};
use crate::verma::{
    gram_rank_and_radical, scalar_nullspace, ModuleParams, VermaModule, VermaVector,
};

/// `K[-n1] K[-n2] ... K[-nk] Psi` with `n1 >= n2 >= ... >= nk > 0`;
/// the energy is the sum of the indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KMonomial(Vec<u32>);

impl KMonomial {
    pub fn new(mut indices: Vec<u32>) -> Self {
        assert!(indices.iter().all(|&n| n > 0), "indices must be positive");
        indices.sort_unstable_by(|a, b| b.cmp(a));
        KMonomial(indices)
    }

    pub fn empty() -> Self {
        KMonomial::default()
    }

    pub fn from_partition(p: &Partition) -> Self {
        KMonomial(p.parts().to_vec())
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn energy(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Expansion in a module: the generators applied right to left.
    pub fn realize(&self, module: &VermaModule) -> VermaVector {
        let mut v = module.lowest();
        for &n in self.0.iter().rev() {
            v = module.act_k(-(n as i64), &v);
        }
        v
    }
}

impl fmt::Display for KMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "Psi");
        }
        for n in &self.0 {
            write!(f, "K[-{n}]")?;
        }
        write!(f, "Psi")
    }
}

/// All monomials of the given energy, in the canonical partition order.
pub fn k_monomials_of_energy(energy: u32) -> Vec<KMonomial> {
    partitions_of(energy)
        .iter()
        .map(KMonomial::from_partition)
        .collect()
}

/// The universal scalar product: pairings of `K`-monomial vectors
/// computed from `(c, h)` alone.
///
/// A pairing is reduced as a word of signed generator indices read inside
/// `<Psi, K[w1] ... K[wt] Psi>`. Trailing positive generators eat into the
/// right vacuum with factor `h`; leading negative ones flip to the left
/// slot with factor `conj(h)`; otherwise the rightmost positive generator
/// is commuted one step right with the closed bracket relation. The
/// measure (number of positive generators, their total index, their total
/// distance from the word end) decreases strictly, so the reduction
/// terminates.
pub struct UniversalProduct {
    c: Scalar,
    h: Scalar,
    memo: Mutex<HashMap<Vec<i64>, Scalar>>,
}

impl UniversalProduct {
    pub fn new(c: Scalar, h: Scalar) -> Self {
        UniversalProduct {
            c,
            h,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn for_params(params: &ModuleParams) -> Self {
        UniversalProduct::new(params.c.clone(), params.h.clone())
    }

    /// `<K[-left] Psi, K[-right] Psi>`.
    pub fn product(&self, left: &KMonomial, right: &KMonomial) -> Scalar {
        let mut word: Vec<i64> = left.indices().iter().rev().map(|&n| n as i64).collect();
        word.extend(right.indices().iter().map(|&n| -(n as i64)));
        self.eval(&word)
    }

    fn eval(&self, word: &[i64]) -> Scalar {
        if word.is_empty() {
            return Scalar::one();
        }
        if let Some(hit) = self.memo.lock().expect("memo lock").get(word) {
            return hit.clone();
        }
        let result = self.reduce(word);
        self.memo
            .lock()
            .expect("memo lock")
            .insert(word.to_vec(), result.clone());
        result
    }

    fn reduce(&self, word: &[i64]) -> Scalar {
        let last = *word.last().expect("nonempty");
        if last > 0 {
            // K[p] Psi = h Psi for p > 0
            return &self.h * &self.eval(&word[..word.len() - 1]);
        }
        let first = word[0];
        if first < 0 {
            // <Psi, K[-m] X> = <K[m] Psi, X> = conj(h) <Psi, X>
            return &self.h.conj() * &self.eval(&word[1..]);
        }
        // the word starts positive and ends negative: the rightmost
        // positive generator has a negative right neighbour
        let i = (0..word.len())
            .rev()
            .find(|&i| word[i] > 0)
            .expect("positive exists");
        let p = word[i];
        let q = word[i + 1];
        debug_assert!(q < 0);

        // K[p] K[q] = K[q] K[p] + p K[p] - q K[q] - (p-q) K[p+q]
        //             + c/12 (p^3 - p) delta(p+q, 0)
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        let mut acc = self.eval(&swapped);

        let mut dropped_q = word.to_vec();
        dropped_q.remove(i + 1);
        acc = &acc + &self.eval(&dropped_q).scale_rat(&rat_int(p));

        let mut dropped_p = word.to_vec();
        dropped_p.remove(i);
        acc = &acc - &self.eval(&dropped_p).scale_rat(&rat_int(q));

        if p + q != 0 {
            let mut merged = word.to_vec();
            merged[i] = p + q;
            merged.remove(i + 1);
            acc = &acc - &self.eval(&merged).scale_rat(&rat_int(p - q));
        } else {
            let mut without = word.to_vec();
            without.remove(i + 1);
            without.remove(i);
            let central = self.c.scale_rat(&rat(p * p * p - p, 12));
            acc = &acc + &(&central * &self.eval(&without));
        }
        acc
    }
}

/// Gram rank of a family of module vectors.
fn family_rank(module: &VermaModule, family: &[VermaVector]) -> usize {
    let entries: Vec<Vec<Scalar>> = family
        .iter()
        .map(|v| {
            family
                .iter()
                .map(|w| module.inner(v, w).expect("same module"))
                .collect()
        })
        .collect();
    gram_rank_and_radical(&entries).0
}

/// Checks that the universal reduction agrees with the concrete module
/// pairing on all monomial pairs up to `max_energy`.
pub fn universal_vs_verma_check(module: &VermaModule, max_energy: u32) -> Report {
    let mut report = Report::new("crosscheck-universal")
        .with_param("c", module.params().c.to_string())
        .with_param("h", module.params().h.to_string())
        .with_param("maxenergy", max_energy);
    let uni = UniversalProduct::for_params(module.params());
    let monomials: Vec<KMonomial> = (0..=max_energy).flat_map(k_monomials_of_energy).collect();
    let realized: Vec<VermaVector> = monomials.iter().map(|m| m.realize(module)).collect();
    for (i, left) in monomials.iter().enumerate() {
        let mut mismatches = 0usize;
        for (j, right) in monomials.iter().enumerate() {
            let reduced = uni.product(left, right);
            let concrete = module
                .inner(&realized[i], &realized[j])
                .expect("same module");
            if reduced != concrete {
                mismatches += 1;
                report.fail_case(
                    format!("universal <{left}, {right}>"),
                    location(&[("left", left.to_string()), ("right", right.to_string())]),
                    reduced.to_string(),
                    concrete.to_string(),
                );
            }
        }
        if mismatches == 0 {
            report.pass_case(
                format!("universal <{left}, *> matches the module pairing"),
                format!("{} partners", monomials.len()),
            );
        }
    }
    report
}

/// Level-by-level spanning certificate for the `K`-monomials.
///
/// For each level the monomials of that energy are expanded and projected
/// onto their top level: the projected family must have the same Gram
/// rank as the level itself. A cumulative case additionally certifies
/// that all monomials of energy up to the level span the whole filtered
/// space (Gram rank equal to the summed level ranks).
pub fn k_monomial_span_check(module: &VermaModule, max_level: u32) -> Report {
    let mut report = Report::new("k-span")
        .with_param("c", module.params().c.to_string())
        .with_param("h", module.params().h.to_string())
        .with_param("maxlevel", max_level);
    let mut cumulative: Vec<VermaVector> = vec![module.lowest()];
    let mut cumulative_target = module.gram(0).rank;
    for level in 1..=max_level {
        let gram_rank = module.gram(level).rank;
        let monomials = k_monomials_of_energy(level);
        let realized: Vec<VermaVector> = monomials.iter().map(|m| m.realize(module)).collect();

        let projected: Vec<VermaVector> = realized.iter().map(|v| v.component(level)).collect();
        let projected_rank = family_rank(module, &projected);
        report.expect_eq(
            format!("level {level}: projected monomial family rank = level rank"),
            location(&[("level", level.to_string())]),
            &projected_rank,
            &gram_rank,
        );

        cumulative.extend(realized);
        cumulative_target += gram_rank;
        let cumulative_rank = family_rank(module, &cumulative);
        report.expect_eq(
            format!("level {level}: monomials of energy <= {level} span the filtered space"),
            location(&[("level", level.to_string())]),
            &cumulative_rank,
            &cumulative_target,
        );
    }
    report
}

/// Eigen-relations of the lowest-energy vector and their uniqueness.
///
/// `K[n] Psi = h Psi` is verified for `0 < n <= n_max`; uniqueness solves
/// the same equations over the whole filtered space up to `uniq_level`
/// and checks that the solution family has Gram rank one (no other
/// non-null common eigenvector).
pub fn lowest_k_eigen_check(module: &VermaModule, n_max: u32, uniq_level: u32) -> Report {
    let mut report = Report::new("lowest-k-eigen")
        .with_param("c", module.params().c.to_string())
        .with_param("h", module.params().h.to_string())
        .with_param("nmax", n_max)
        .with_param("uniqlevel", uniq_level);
    let psi = module.lowest();
    let h = module.params().h.clone();
    for n in 1..=n_max {
        let lhs = module.act_k(n as i64, &psi);
        let rhs = psi.scale(&h);
        report.expect_eq(
            format!("K[{n}] Psi = h Psi"),
            location(&[("n", n.to_string())]),
            &lhs.to_string(),
            &rhs.to_string(),
        );
    }

    // negative control inside the suite: a level-one candidate fails
    let candidate = module.basis_vector(Partition::new(vec![1]));
    let moved = module.act_k(1, &candidate);
    if moved.sub(&candidate.scale(&h)).is_zero() {
        report.fail_case(
            "level-one candidate is not a common eigenvector",
            location(&[("candidate", candidate.to_string())]),
            format!("K[1] {candidate} = h {candidate}"),
            "a non-eigen residual",
        );
    } else {
        report.pass_case(
            "level-one candidate is not a common eigenvector",
            format!("K[1] {candidate} = {moved}"),
        );
    }

    // uniqueness: solve K[n] v = h v for n = 1..n_max over levels <= uniq_level
    let basis: Vec<Partition> = (0..=uniq_level).flat_map(partitions_of).collect();
    let index: BTreeMap<Partition, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for n in 1..=n_max as i64 {
        let residuals: Vec<VermaVector> = basis
            .iter()
            .map(|p| {
                let e = module.basis_vector(p.clone());
                module.act_k(n, &e).sub(&e.scale(&h))
            })
            .collect();
        for target in &basis {
            let row: Vec<Scalar> = residuals.iter().map(|r| r.coeff(target)).collect();
            if row.iter().any(|s| !s.is_zero()) {
                rows.push(row);
            }
        }
    }
    let kernel = scalar_nullspace(&rows, basis.len());
    let solutions: Vec<VermaVector> = kernel
        .iter()
        .map(|coords| {
            let mut v = VermaVector::zero(module.params().clone());
            for (p, s) in basis.iter().zip(coords) {
                v = v.add(&module.basis_vector(p.clone()).scale(s));
            }
            v
        })
        .collect();
    let psi_index = index[&Partition::empty()];
    if kernel.iter().any(|coords| !coords[psi_index].is_zero()) {
        report.pass_case("Psi solves the truncated eigen-system", String::new());
    } else {
        report.fail_case(
            "Psi solves the truncated eigen-system",
            location(&[("uniqlevel", uniq_level.to_string())]),
            "solution space misses Psi",
            "Psi in solution space",
        );
    }
    let rank = family_rank(module, &solutions);
    report.expect_eq(
        format!("common eigenvector unique up to null vectors (levels <= {uniq_level})"),
        location(&[("uniqlevel", uniq_level.to_string())]),
        &rank,
        &1usize,
    );
    report
}

/// Outcome of testing one subalgebra element on the lowest-energy vector.
#[derive(Clone, Debug)]
pub struct EigenOutcome {
    pub eigen: bool,
    pub eigenvalue: Option<Scalar>,
}

/// Applies a point-stabilizer element to `Psi` and reports whether `Psi`
/// is an eigenvector. The element must lie in the `n`-point subalgebra.
pub fn eigen_subalgebra_check(
    module: &VermaModule,
    n: u32,
    x: &LieElement,
) -> Result<EigenOutcome, LieError> {
    let _coords: KCombination = kn_membership(x, n).into_combination()?;
    let psi = module.lowest();
    let moved = module.apply(x, &psi);
    let lambda = moved.coeff(&Partition::empty());
    if moved.sub(&psi.scale(&lambda)).is_zero() {
        Ok(EigenOutcome {
            eigen: true,
            eigenvalue: Some(lambda),
        })
    } else {
        Ok(EigenOutcome {
            eigen: false,
            eigenvalue: None,
        })
    }
}

/// The residue in `{0, 1, -1}` congruent to `n` modulo three.
fn residue_mod_three(n: u32) -> i64 {
    match n % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Spanning certificate for the vacuum module from three-point
/// annihilators.
///
/// For each generator index `s >= 2` the element `A = l[s] - l[r]` with
/// `r = s mod 3` taken in `{0, +1, -1}` lies in the three-point
/// subalgebra and kills the vacuum; the family applies the adjoints `A^+`
/// along partitions with parts `>= 2`, smallest part outermost. Each
/// level is certified by the projected family rank, plus a cumulative
/// full-filtration case.
pub fn h0_spanning_check(c: Rational, max_level: u32) -> Report {
    let module = VermaModule::rational(c.clone(), rat_int(0));
    let mut report = Report::new("h0-span")
        .with_param("c", c.to_string())
        .with_param("maxlevel", max_level);

    // the generators: membership and annihilation are part of the claim
    for s in 2..=max_level.max(2) {
        let r = residue_mod_three(s);
        let a = LieElement::l_gen(s as i64).sub(&LieElement::l_gen(r));
        if kn_membership(&a, 3).is_member() {
            report.pass_case(
                format!("l[{s}] - l[{r}] lies in the three-point subalgebra"),
                String::new(),
            );
        } else {
            report.fail_case(
                format!("l[{s}] - l[{r}] lies in the three-point subalgebra"),
                location(&[("s", s.to_string())]),
                "not a member",
                "member",
            );
        }
        // annihilation holds in the unitary module: the image must be
        // Gram-null (at h = 0 the image is -L[-r] Omega, a null vector
        // when r = -1 rather than the zero vector of the PBW realization)
        let image = module.apply(&a, &module.lowest());
        let norm = module.inner(&image, &image).expect("same module");
        if norm.is_zero() {
            report.pass_case(
                format!("(l[{s}] - l[{r}]) annihilates the vacuum in the unitary module"),
                String::new(),
            );
        } else {
            report.fail_case(
                format!("(l[{s}] - l[{r}]) annihilates the vacuum in the unitary module"),
                location(&[("s", s.to_string())]),
                format!("|A Omega|^2 = {norm}"),
                "0",
            );
        }
    }

    // family vectors indexed by partitions with parts >= 2, built by
    // applying A^+ = l[-s] - l[-r] for the smallest part outermost
    fn build(
        module: &VermaModule,
        family: &mut HashMap<Partition, VermaVector>,
        partition: &Partition,
    ) -> VermaVector {
        if let Some(hit) = family.get(partition) {
            return hit.clone();
        }
        let s = partition.smallest().expect("nonempty");
        let rest = partition.without_smallest();
        let inner = build(module, family, &rest);
        let r = residue_mod_three(s);
        let adjoint = theta(&LieElement::l_gen(s as i64).sub(&LieElement::l_gen(r)));
        let v = module.apply(&adjoint, &inner);
        family.insert(partition.clone(), v.clone());
        v
    }
    let mut family: HashMap<Partition, VermaVector> = HashMap::new();
    family.insert(Partition::empty(), module.lowest());

    let mut cumulative: Vec<VermaVector> = vec![module.lowest()];
    let mut cumulative_target = module.gram(0).rank;
    report.pass_case("level 0: vacuum spans", format!("rank {cumulative_target}"));
    for level in 1..=max_level {
        let gram_rank = module.gram(level).rank;
        let vectors: Vec<VermaVector> = partitions_of_with_min(level, 2)
            .iter()
            .map(|p| build(&module, &mut family, p))
            .collect();
        let projected: Vec<VermaVector> = vectors.iter().map(|v| v.component(level)).collect();
        let projected_rank = family_rank(&module, &projected);
        report.expect_eq(
            format!("level {level}: projected family rank = level rank"),
            location(&[("level", level.to_string())]),
            &projected_rank,
            &gram_rank,
        );
        cumulative.extend(vectors);
        cumulative_target += gram_rank;
        let cumulative_rank = family_rank(&module, &cumulative);
        report.expect_eq(
            format!("level {level}: family spans the filtered space"),
            location(&[("level", level.to_string())]),
            &cumulative_rank,
            &cumulative_target,
        );
    }
    report
}

#[cfg(test)]
#[path = "kreduce_tests.rs"]
mod tests;
