//! Integer partitions indexing graded module bases.
//!
//! A partition `[n1, n2, ...]` with `n1 >= n2 >= ... > 0` labels the PBW
//! monomial obtained by applying the corresponding lowering operators to a
//! lowest-energy vector. Basis enumeration is in descending lexicographic
//! order (largest part first), which fixes the row/column order of every
//! Gram matrix and report in the crate.

use std::fmt;

/// Weakly decreasing list of positive integers; the empty partition is
/// allowed and has weight zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Partition with a copy of `part` inserted.
    pub fn with_part(&self, part: u32) -> Self {
        assert!(part > 0);
        let mut parts = self.0.clone();
        let pos = parts.partition_point(|&p| p > part);
        parts.insert(pos, part);
        Partition(parts)
    }

    /// Partition with one copy of `part` removed, if present.
    pub fn without_part(&self, part: u32) -> Option<Self> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Partition with the first (largest) part removed.
    pub fn without_first(&self) -> Self {
        Partition(self.0[1..].to_vec())
    }

    /// Partition with the last (smallest) part removed.
    pub fn without_smallest(&self) -> Self {
        Partition(self.0[..self.0.len() - 1].to_vec())
    }

    /// Number of parts equal to `part`.
    pub fn multiplicity(&self, part: u32) -> u32 {
        self.0.iter().filter(|&&p| p == part).count() as u32
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

fn gen(n: u32, max: u32, min: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    let top = max.min(n);
    if top < min {
        return;
    }
    for k in (min..=top).rev() {
        prefix.push(k);
        gen(n - k, k, min, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    gen(n, n.max(1), 1, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` whose parts are all `>= min`, same order.
pub fn partitions_of_with_min(n: u32, min: u32) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    gen(n, n, min, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n`.
pub fn partition_count(n: u32) -> usize {
    partitions_of(n).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match() {
        let expected = [1usize, 1, 2, 3, 5, 7, 11];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partition_count(n as u32), e, "p({n})");
        }
    }

    #[test]
    fn canonical_order_level_four() {
        let parts: Vec<String> = partitions_of(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(parts, vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
    }

    #[test]
    fn min_part_restriction() {
        let parts: Vec<String> = partitions_of_with_min(6, 2)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(parts, vec!["[6]", "[4,2]", "[3,3]", "[2,2,2]"]);
    }

    #[test]
    fn insertion_keeps_order() {
        let p = Partition::new(vec![3, 1]);
        assert_eq!(p.with_part(2).parts(), &[3, 2, 1]);
        assert_eq!(p.with_part(5).parts(), &[5, 3, 1]);
        assert_eq!(p.without_part(3).unwrap().parts(), &[1]);
        assert!(p.without_part(4).is_none());
    }
}
