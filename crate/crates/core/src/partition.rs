//! Partitions, Young diagrams, hook lengths and β-sets.
//!
//! The β-set of a partition is the set of hook lengths in its first column.
//! For a partition of length `m` it equals `{λ_i + m - i : 1 ≤ i ≤ m}` and
//! determines the partition uniquely, which is what lets core partitions be
//! studied through order ideals of a poset of integers.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{BigCount, Error, Result};

/// A weakly decreasing sequence of positive parts. The empty sequence is the
/// empty partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes as a machine integer.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn size(&self) -> BigCount {
        BigCount::from(self.weight())
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols).map(|c| self.parts.iter().take_while(|&&p| p >= c).count() as u32).collect();
        Partition { parts }
    }

    /// Hook lengths box by box; row `i` holds `λ_i` entries.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row as usize).map(|j| row - j as u32 + conj.parts[j] - i as u32 - 1).collect())
            .collect()
    }

    pub fn beta_set(&self) -> BetaSet {
        let m = self.parts.len() as u32;
        let elements = self.parts.iter().enumerate().map(|(i, &p)| p + m - 1 - i as u32).collect();
        BetaSet { elements }
    }

    /// Inverse of [`Partition::beta_set`].
    pub fn from_beta(beta: &BetaSet) -> Partition {
        let m = beta.elements.len() as u32;
        let parts = beta.elements.iter().enumerate().map(|(i, &h)| h - (m - 1 - i as u32)).collect();
        Partition { parts }
    }

    /// True when no hook length in the diagram is divisible by any generator.
    ///
    /// Scans the whole hook matrix rather than only the β-set, so it stays an
    /// independent check on the poset characterisation.
    pub fn is_core(&self, tuple: &CoreTuple) -> bool {
        self.hook_lengths().iter().flatten().all(|&h| tuple.generators().iter().all(|&a| h % a != 0))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

pub fn hook_lengths(p: &Partition) -> Vec<Vec<u32>> {
    p.hook_lengths()
}

pub fn beta_set(p: &Partition) -> BetaSet {
    p.beta_set()
}

pub fn partition_from_beta(b: &BetaSet) -> Partition {
    Partition::from_beta(b)
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn is_core(p: &Partition, t: &CoreTuple) -> bool {
    p.is_core(t)
}

pub fn size(p: &Partition) -> BigCount {
    p.size()
}

/// Strictly decreasing set of positive integers: first-column hook lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct BetaSet {
    elements: Vec<u32>,
}

impl BetaSet {
    pub fn new(elements: Vec<u32>) -> Result<Self> {
        let decreasing = elements.windows(2).all(|w| w[0] > w[1]);
        if !decreasing || elements.last() == Some(&0) {
            return Err(Error::InvalidBetaSet(elements));
        }
        Ok(Self { elements })
    }

    /// Builds a β-set from elements in any order.
    pub fn from_unordered(mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(elements)
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Size of the corresponding partition: `Σ h - C(m, 2)`.
    pub fn partition_size(&self) -> u64 {
        let m = self.elements.len() as u64;
        let total: u64 = self.elements.iter().map(|&h| u64::from(h)).sum();
        total - m * m.saturating_sub(1) / 2
    }
}

impl TryFrom<Vec<u32>> for BetaSet {
    type Error = Error;

    fn try_from(elements: Vec<u32>) -> Result<Self> {
        BetaSet::new(elements)
    }
}

impl From<BetaSet> for Vec<u32> {
    fn from(b: BetaSet) -> Self {
        b.elements
    }
}

/// Distinct positive generators `a_1 < ... < a_r` with gcd 1.
///
/// Divisibility between generators is allowed here (so tuples like `(2,3,4)`
/// can be used in core tests) and rejected separately by
/// [`CoreTuple::check_no_divisibility`], which poset construction calls.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoreTuple {
    generators: Vec<u32>,
}

impl CoreTuple {
    /// Sorts the generators ascending and validates them.
    pub fn new(mut generators: Vec<u32>) -> Result<Self> {
        generators.sort_unstable();
        let invalid = |reason: &str| Error::InvalidTuple { generators: generators.clone(), reason: reason.to_string() };
        if generators.is_empty() {
            return Err(invalid("at least one generator is required"));
        }
        if generators[0] == 0 {
            return Err(invalid("generators must be positive"));
        }
        if generators.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("generators must be distinct"));
        }
        if generators.iter().fold(0, |g, &a| g.gcd(&a)) != 1 {
            return Err(invalid("gcd of the generators must be 1 (otherwise the poset is infinite)"));
        }
        Ok(Self { generators })
    }

    /// The consecutive tuple `(s, s+1, s+2)`; for `s = 0` this degenerates to `(1, 2)`.
    pub fn consecutive(s: u32) -> Self {
        let generators = if s == 0 { vec![1, 2] } else { vec![s, s + 1, s + 2] };
        Self { generators }
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn check_no_divisibility(&self) -> Result<()> {
        for (k, &a) in self.generators.iter().enumerate() {
            if let Some(&b) = self.generators[k + 1..].iter().find(|&&b| b % a == 0) {
                return Err(Error::InvalidTuple {
                    generators: self.generators.clone(),
                    reason: format!("{a} divides {b}"),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for CoreTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.generators.iter().map(u32::to_string).collect();
        write!(f, "({})", joined.join(","))
    }
}

/// All partitions of `n`, largest first part first, parts in decreasing order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_lengths_of_worked_example() {
        let hooks = p(&[5, 3, 2, 2, 1]).hook_lengths();
        assert_eq!(hooks[0], vec![9, 7, 4, 2, 1]);
        let first_col: Vec<u32> = hooks.iter().map(|row| row[0]).collect();
        assert_eq!(first_col, vec![9, 6, 4, 3, 1]);
        assert_eq!(hooks[1], vec![6, 4, 1]);
        assert_eq!(hooks[2], vec![4, 2]);
        assert_eq!(hooks[3], vec![3, 1]);
    }

    #[test]
    fn hook_lengths_trivial() {
        assert!(Partition::empty().hook_lengths().is_empty());
        assert_eq!(p(&[1]).hook_lengths(), vec![vec![1]]);
    }

    #[test]
    fn beta_sets() {
        assert_eq!(p(&[5, 3, 2, 2, 1]).beta_set().elements(), &[9, 6, 4, 3, 1]);
        assert!(Partition::empty().beta_set().is_empty());
        assert_eq!(p(&[3, 1, 1]).beta_set().elements(), &[5, 2, 1]);
    }

    #[test]
    fn partition_from_beta_examples() {
        let b = |v: &[u32]| BetaSet::new(v.to_vec()).unwrap();
        assert_eq!(Partition::from_beta(&b(&[9, 6, 4, 3, 1])), p(&[5, 3, 2, 2, 1]));
        assert_eq!(Partition::from_beta(&b(&[16, 15, 4, 3, 2, 1])), p(&[11, 11, 1, 1, 1, 1]));
        assert_eq!(Partition::from_beta(&b(&[1])), p(&[1]));
    }

    #[test]
    fn beta_set_rejects_bad_input() {
        assert!(BetaSet::new(vec![3, 3, 1]).is_err());
        assert!(BetaSet::new(vec![1, 2]).is_err());
        assert!(BetaSet::new(vec![2, 0]).is_err());
        assert!(BetaSet::new(vec![]).is_ok());
        assert_eq!(BetaSet::from_unordered(vec![1, 5, 2]).unwrap().elements(), &[5, 2, 1]);
    }

    #[test]
    fn partition_rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2]).conjugate(), p(&[1, 1]));
        assert_eq!(p(&[4, 1, 1, 1]).conjugate(), p(&[4, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5, 3, 2, 2, 1]).conjugate(), p(&[5, 4, 2, 1, 1]));
    }

    #[test]
    fn core_membership() {
        let t58 = CoreTuple::new(vec![5, 8]).unwrap();
        assert!(p(&[5, 3, 2, 2, 1]).is_core(&t58));
        assert!(Partition::empty().is_core(&CoreTuple::new(vec![2, 3, 4]).unwrap()));
        assert!(!p(&[1, 1]).is_core(&CoreTuple::new(vec![2, 3, 4]).unwrap()));
    }

    #[test]
    fn sizes() {
        assert_eq!(Partition::empty().size(), BigCount::from(0u32));
        assert_eq!(p(&[5, 3, 2, 2, 1]).size(), BigCount::from(13u32));
        assert_eq!(p(&[11, 11, 1, 1, 1, 1]).size(), BigCount::from(26u32));
    }

    #[test]
    fn tuple_validation() {
        assert_eq!(CoreTuple::new(vec![4, 3]).unwrap().generators(), &[3, 4]);
        assert!(CoreTuple::new(vec![]).is_err());
        assert!(CoreTuple::new(vec![0, 3]).is_err());
        assert!(CoreTuple::new(vec![3, 3, 4]).is_err());
        assert!(CoreTuple::new(vec![4, 6]).is_err());
        let t = CoreTuple::new(vec![2, 3, 4]).unwrap();
        assert!(t.check_no_divisibility().is_err());
        assert!(CoreTuple::new(vec![3, 4, 5]).unwrap().check_no_divisibility().is_ok());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn json_shapes() {
        let json = serde_json::to_string(&p(&[5, 3, 2, 2, 1])).unwrap();
        assert_eq!(json, "[5,3,2,2,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        let b: BetaSet = serde_json::from_str("[9,6,4,3,1]").unwrap();
        assert_eq!(b.len(), 5);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn partition_strategy() -> impl Strategy<Value = Partition> {
            (0u32..=30).prop_flat_map(|n| {
                let all = partitions_of(n);
                (0..all.len()).prop_map(move |k| all[k].clone())
            })
        }

        fn beta_strategy() -> impl Strategy<Value = BetaSet> {
            proptest::collection::btree_set(1u32..=40, 0..12)
                .prop_map(|s| BetaSet::from_unordered(s.into_iter().collect()).unwrap())
        }

        proptest! {
            #[test]
            fn beta_round_trip(part in partition_strategy()) {
                prop_assert_eq!(Partition::from_beta(&part.beta_set()), part);
            }

            #[test]
            fn partition_round_trip(b in beta_strategy()) {
                prop_assert_eq!(Partition::from_beta(&b).beta_set(), b);
            }

            #[test]
            fn conjugation(part in partition_strategy(), a in 2u32..7, d in 1u32..4) {
                let c = part.conjugate();
                prop_assert_eq!(c.conjugate(), part.clone());
                prop_assert_eq!(c.weight(), part.weight());
                if let Ok(t) = CoreTuple::new(vec![a, a + d]) {
                    prop_assert_eq!(part.is_core(&t), c.is_core(&t));
                }
            }

            #[test]
            fn beta_size_formula(part in partition_strategy()) {
                let hooks = part.hook_lengths();
                let first_col: Vec<u32> = hooks.iter().map(|r| r[0]).collect();
                prop_assert_eq!(part.beta_set().elements().to_vec(), first_col);
                prop_assert_eq!(part.beta_set().partition_size(), part.weight());
            }
        }
    }
}
