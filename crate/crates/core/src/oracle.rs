//! Brute-force ground truth.
//!
//! Nothing here calls the recurrences or closed forms in
//! [`crate::enumeration`] or [`crate::extremal`]: cores are found by filtering
//! partitions on their hook lengths, and ideals by filtering subsets on the
//! closure predicate.

use serde::Serialize;

use crate::partition::{partitions_of, CoreTuple, Partition};
use crate::poset::{CorePoset, OrderIdeal};
use crate::{BigCount, Error, Result};

/// Largest poset the subset scan accepts.
pub const SUBSET_SCAN_LIMIT: usize = 24;

/// Every `t`-core of size at most `n_max`, ordered by size and then by
/// decreasing parts.
///
/// Partitions are grown by prepending rows. Prepending a row leaves the hook
/// lengths of the rows below unchanged, so once a suffix fails the hook test
/// no extension of it can pass and the branch is cut. Only hooks of the new
/// row are computed at each step.
pub fn cores_by_size_scan(t: &CoreTuple, n_max: u32) -> Vec<Partition> {
    struct Scan<'a> {
        gens: &'a [u32],
        n_max: u32,
        rows: Vec<u32>,
        // col_len[j] = number of rows (so far) longer than j
        col_len: Vec<u32>,
        out: Vec<Partition>,
    }

    impl Scan<'_> {
        fn visit(&mut self, size: u32) {
            let mut parts = self.rows.clone();
            parts.reverse();
            self.out.push(Partition::new(parts).expect("rows are prepended in decreasing order"));
            let min_len = self.rows.last().copied().unwrap_or(1);
            for len in min_len..=self.n_max - size {
                let ok = (0..len as usize).all(|j| {
                    let below = self.col_len.get(j).copied().unwrap_or(0);
                    let hook = len - j as u32 + below;
                    self.gens.iter().all(|&a| !hook.is_multiple_of(a))
                });
                if !ok {
                    continue;
                }
                if self.col_len.len() < len as usize {
                    self.col_len.resize(len as usize, 0);
                }
                for c in &mut self.col_len[..len as usize] {
                    *c += 1;
                }
                self.rows.push(len);
                self.visit(size + len);
                self.rows.pop();
                for c in &mut self.col_len[..len as usize] {
                    *c -= 1;
                }
            }
        }
    }

    let mut scan = Scan { gens: t.generators(), n_max, rows: Vec::new(), col_len: Vec::new(), out: Vec::new() };
    scan.visit(0);
    let mut out = scan.out;
    out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| b.parts().cmp(a.parts())));
    out
}

/// Same result as [`cores_by_size_scan`] with no pruning at all: every
/// partition of every `n ≤ n_max` is generated and tested.
pub fn cores_by_full_scan(t: &CoreTuple, n_max: u32) -> Vec<Partition> {
    (0..=n_max).flat_map(partitions_of).filter(|p| p.is_core(t)).collect()
}

/// Every order ideal of `p`, found by testing all `2^n` subsets.
///
/// Closure is checked against `e - a` for each generator `a`, recomputed
/// here from the element list rather than read from the poset's edge table.
pub fn ideals_by_subset_scan(p: &CorePoset) -> Result<Vec<OrderIdeal>> {
    let n = p.len();
    if n > SUBSET_SCAN_LIMIT {
        return Err(Error::TooLarge { elements: n, limit: SUBSET_SCAN_LIMIT });
    }
    let elements = p.elements();
    let below: Vec<u32> = elements
        .iter()
        .map(|&e| {
            p.generators()
                .iter()
                .filter(|&&a| e > a)
                .filter_map(|&a| elements.iter().position(|&x| x == e - a))
                .fold(0u32, |m, i| m | 1 << i)
        })
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let closed = (0..n).all(|i| mask & (1 << i) == 0 || below[i] & !mask == 0);
        if closed {
            let mut bits = fixedbitset::FixedBitSet::with_capacity(n);
            for i in (0..n).filter(|&i| mask & (1 << i) != 0) {
                bits.insert(i);
            }
            out.push(OrderIdeal::from_bits_unchecked(bits));
        }
    }
    Ok(out)
}

/// Aggregates over the cores found by [`cores_by_size_scan`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub tuple: CoreTuple,
    pub count: BigCount,
    pub total_size: BigCount,
    pub max_size: BigCount,
    pub maximizers: Vec<Partition>,
}

pub fn summarize(t: &CoreTuple, n_max: u32) -> OracleSummary {
    summarize_partitions(t, &cores_by_size_scan(t, n_max))
}

pub fn summarize_partitions(t: &CoreTuple, cores: &[Partition]) -> OracleSummary {
    let max = cores.iter().map(Partition::weight).max().unwrap_or(0);
    OracleSummary {
        tuple: t.clone(),
        count: BigCount::from(cores.len()),
        total_size: BigCount::from(cores.iter().map(Partition::weight).sum::<u64>()),
        max_size: BigCount::from(max),
        maximizers: cores.iter().filter(|p| p.weight() == max).cloned().collect(),
    }
}

/// Sums over all ideals of a poset, read directly off each ideal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdealTotals {
    pub count: u64,
    /// `Σ |I|`
    pub cardinality: u64,
    /// `Σ Σ_{a∈I} ρ(a)`
    pub rank: u64,
    /// `Σ Σ_{a∈I} a`
    pub elements: u64,
    /// `Σ binom(|I|, 2)`
    pub pairs: u64,
    /// `Σ |λ(I)|`, sizes of the corresponding partitions
    pub size: u64,
    pub max_size: u64,
    pub maximizers: Vec<Partition>,
}

pub fn ideal_totals<I>(p: &CorePoset, ideals: I) -> Result<IdealTotals>
where
    I: IntoIterator<Item = OrderIdeal>,
{
    let mut totals = IdealTotals::default();
    for ideal in ideals {
        let stats = p.ideal_stats(&ideal)?;
        let lambda = p.partition_of_ideal(&ideal)?;
        let size = lambda.weight();
        totals.count += 1;
        totals.cardinality += stats.cardinality;
        totals.rank += stats.rank_sum;
        totals.elements += stats.element_sum;
        totals.pairs += stats.cardinality * stats.cardinality.saturating_sub(1) / 2;
        totals.size += size;
        if size > totals.max_size || totals.count == 1 {
            totals.max_size = size;
            totals.maximizers.clear();
        }
        if size == totals.max_size {
            totals.maximizers.push(lambda);
        }
    }
    Ok(totals)
}
