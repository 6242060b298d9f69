//! Posets of non-representable integers and their order ideals.
//!
//! `P_(a_1,...,a_r)` is the complement in the positive integers of the numerical
//! semigroup generated by the `a_i`. The order is generated by the edges
//! `e -> e - a_i` whose endpoints both lie in the poset; ideals are subsets
//! closed under those edges. `T_s` is the special case `(s, s+1, s+2)`, which
//! is graded with rank blocks `B_k = [1 + k(s+2), (k+1)s - 1]`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::partition::{BetaSet, CoreTuple, Partition};
use crate::{Error, Result};

/// A finite poset of non-representable integers with its generating edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorePoset {
    tuple: CoreTuple,
    elements: Vec<u32>,
    ranks: Vec<u32>,
    down: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
}

impl CorePoset {
    fn from_elements(tuple: CoreTuple, elements: Vec<u32>, ranks: Option<Vec<u32>>) -> Self {
        let n = elements.len();
        let mut down = vec![Vec::new(); n];
        let mut up = vec![Vec::new(); n];
        for (idx, &e) in elements.iter().enumerate() {
            for &a in tuple.generators() {
                if e > a {
                    if let Ok(d) = elements.binary_search(&(e - a)) {
                        down[idx].push(d);
                        up[d].push(idx);
                    }
                }
            }
            down[idx].sort_unstable();
        }
        for u in &mut up {
            u.sort_unstable();
        }
        let ranks = ranks.unwrap_or_else(|| {
            // Longest down-chain; down-neighbours always have smaller indices.
            let mut ranks = vec![0u32; n];
            for idx in 0..n {
                ranks[idx] = down[idx].iter().map(|&d| ranks[d] + 1).max().unwrap_or(0);
            }
            ranks
        });
        Self { tuple, elements, ranks, down, up }
    }

    pub fn tuple(&self) -> &CoreTuple {
        &self.tuple
    }

    pub fn generators(&self) -> &[u32] {
        self.tuple.generators()
    }

    /// Elements in ascending order; an element's position is its bit index.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, e: u32) -> Option<usize> {
        self.elements.binary_search(&e).ok()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.index_of(e).is_some()
    }

    pub fn rank_of(&self, e: u32) -> Option<u32> {
        self.index_of(e).map(|i| self.ranks[i])
    }

    /// Rank by element position.
    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// Length of the longest chain, or `None` for the empty poset.
    pub fn height(&self) -> Option<u32> {
        self.ranks.iter().copied().max()
    }

    /// Elements `e - a` (for generators `a`) that lie in the poset, ascending.
    pub fn down_neighbors(&self, e: u32) -> Vec<u32> {
        self.index_of(e).map(|i| self.down[i].iter().map(|&d| self.elements[d]).collect()).unwrap_or_default()
    }

    pub fn up_neighbors(&self, e: u32) -> Vec<u32> {
        self.index_of(e).map(|i| self.up[i].iter().map(|&u| self.elements[u]).collect()).unwrap_or_default()
    }

    /// Down-neighbour positions of the element at position `idx`.
    pub fn down_indices(&self, idx: usize) -> &[usize] {
        &self.down[idx]
    }

    pub fn up_indices(&self, idx: usize) -> &[usize] {
        &self.up[idx]
    }

    /// All generating edges `(e, e - a)`, ordered by `e` then `e - a`.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.down
            .iter()
            .enumerate()
            .flat_map(|(i, ds)| ds.iter().map(move |&d| (self.elements[i], self.elements[d])))
            .collect()
    }

    /// Cover relations: generating edges not implied by a longer chain.
    pub fn covers(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (i, ds) in self.down.iter().enumerate() {
            for &d in ds {
                let implied = ds.iter().any(|&other| other != d && self.reaches(other, d));
                if !implied {
                    out.push((self.elements[i], self.elements[d]));
                }
            }
        }
        out
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut stack = vec![from];
        let mut seen = FixedBitSet::with_capacity(self.len());
        while let Some(i) = stack.pop() {
            if i == to {
                return true;
            }
            if i < to || seen.put(i) {
                continue;
            }
            stack.extend_from_slice(&self.down[i]);
        }
        false
    }

    /// Elements grouped by rank, each group ascending.
    pub fn rank_levels(&self) -> Vec<Vec<u32>> {
        let mut levels: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (&e, &r) in self.elements.iter().zip(&self.ranks) {
            levels.entry(r).or_default().push(e);
        }
        levels.into_values().collect()
    }

    /// Streams every order ideal once, in increasing order of the bitset read
    /// as a binary number (largest element most significant).
    pub fn enumerate_ideals(&self) -> IdealIter<'_> {
        IdealIter::new(self, 0, 0)
    }

    /// Same sequence as [`CorePoset::enumerate_ideals`], computed by splitting
    /// on the decisions for the largest elements and running the branches on
    /// the rayon pool.
    pub fn enumerate_ideals_par(&self) -> Vec<OrderIdeal> {
        let depth = self.len().min(6);
        let chunks: Vec<Vec<OrderIdeal>> =
            (0..1u64 << depth).into_par_iter().map(|prefix| IdealIter::new(self, depth, prefix).collect()).collect();
        chunks.into_iter().flatten().collect()
    }

    pub fn count_ideals(&self) -> u64 {
        self.enumerate_ideals().count() as u64
    }

    pub fn ideal_stats(&self, ideal: &OrderIdeal) -> Result<IdealStats> {
        self.check_ideal(ideal)?;
        let mut stats = IdealStats::default();
        for idx in ideal.members.ones() {
            stats.cardinality += 1;
            stats.element_sum += u64::from(self.elements[idx]);
            stats.rank_sum += u64::from(self.ranks[idx]);
        }
        Ok(stats)
    }

    /// The core partition whose β-set is the ideal.
    pub fn partition_of_ideal(&self, ideal: &OrderIdeal) -> Result<Partition> {
        self.check_ideal(ideal)?;
        let beta = BetaSet::new(ideal.elements(self))?;
        Ok(Partition::from_beta(&beta))
    }

    fn check_ideal(&self, ideal: &OrderIdeal) -> Result<()> {
        if ideal.members.len() != self.len() || !ideal.is_ideal_of(self) {
            let elements = ideal.members.ones().filter_map(|i| self.elements.get(i).copied()).collect();
            return Err(Error::NotAnIdeal(elements));
        }
        Ok(())
    }

    /// Graphviz rendering of the Hasse diagram, smaller elements at the bottom.
    pub fn hasse_dot(&self) -> String {
        let mut out = String::new();
        let name: Vec<String> = self.generators().iter().map(u32::to_string).collect();
        writeln!(out, "digraph \"P({})\" {{", name.join(",")).unwrap();
        out.push_str("  rankdir=BT;\n  node [shape=circle];\n");
        for level in self.rank_levels() {
            let nodes: Vec<String> = level.iter().map(|e| format!("\"{e}\";")).collect();
            writeln!(out, "  {{ rank=same; {} }}", nodes.join(" ")).unwrap();
        }
        for (e, d) in self.covers() {
            writeln!(out, "  \"{d}\" -> \"{e}\";").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn summary(&self) -> PosetSummary {
        PosetSummary {
            generators: self.generators().to_vec(),
            elements: self.elements.clone(),
            ranks: self.rank_levels(),
            edges: self.edges().into_iter().map(|(e, d)| [e, d]).collect(),
        }
    }
}

/// JSON view of a poset.
#[derive(Debug, Clone, Serialize)]
pub struct PosetSummary {
    pub generators: Vec<u32>,
    pub elements: Vec<u32>,
    pub ranks: Vec<Vec<u32>>,
    pub edges: Vec<[u32; 2]>,
}

/// `|I|`, `Σ_{a∈I} a` and `Σ_{a∈I} ρ(a)` for an ideal `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdealStats {
    pub cardinality: u64,
    pub element_sum: u64,
    pub rank_sum: u64,
}

/// Builds `P_(a_1,...,a_r)` by sieving representable integers.
pub fn build_poset(tuple: &CoreTuple) -> Result<CorePoset> {
    tuple.check_no_divisibility()?;
    let gens = tuple.generators();
    let a_min = gens[0] as usize;
    let cap = a_min * *gens.last().unwrap() as usize;
    let mut representable = vec![true];
    let mut run = 0;
    let mut n = 0usize;
    // Once a_min consecutive integers are representable, so is everything above.
    while run < a_min {
        n += 1;
        if n > cap {
            return Err(Error::Inconsistent(format!("sieve for {tuple} exceeded {cap}")));
        }
        let rep = gens.iter().any(|&a| a as usize <= n && representable[n - a as usize]);
        representable.push(rep);
        run = if rep { run + 1 } else { 0 };
    }
    let elements = (1..=n as u32).filter(|&e| !representable[e as usize]).collect();
    Ok(CorePoset::from_elements(tuple.clone(), elements, None))
}

/// `T_s = P_(s,s+1,s+2)` built directly from its rank blocks.
///
/// `T_0 = T_1 = ∅` and `T_2 = {1}`.
pub fn build_t(s: u32) -> CorePoset {
    let tuple = CoreTuple::consecutive(s);
    let (elements, ranks) = t_blocks(s);
    CorePoset::from_elements(tuple, elements, Some(ranks))
}

fn t_blocks(s: u32) -> (Vec<u32>, Vec<u32>) {
    let mut elements = Vec::new();
    let mut ranks = Vec::new();
    if s == 2 {
        return (vec![1], vec![0]);
    }
    if s < 3 {
        return (elements, ranks);
    }
    for k in 0..s / 2 {
        let lo = 1 + k * (s + 2);
        let hi = (k + 1) * s - 1;
        for e in lo..=hi {
            elements.push(e);
            ranks.push(k);
        }
    }
    (elements, ranks)
}

/// Downward-closed subset of a [`CorePoset`], stored as a bitset over the
/// poset's ascending element list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderIdeal {
    members: FixedBitSet,
}

impl OrderIdeal {
    pub fn empty(poset: &CorePoset) -> Self {
        Self { members: FixedBitSet::with_capacity(poset.len()) }
    }

    pub fn full(poset: &CorePoset) -> Self {
        let mut members = FixedBitSet::with_capacity(poset.len());
        members.insert_range(..);
        Self { members }
    }

    /// Validates membership and downward closure.
    pub fn from_elements(poset: &CorePoset, elements: &[u32]) -> Result<Self> {
        let mut members = FixedBitSet::with_capacity(poset.len());
        for &e in elements {
            match poset.index_of(e) {
                Some(i) => members.insert(i),
                None => return Err(Error::NotAnIdeal(elements.to_vec())),
            }
        }
        let ideal = Self { members };
        if !ideal.is_ideal_of(poset) {
            return Err(Error::NotAnIdeal(elements.to_vec()));
        }
        Ok(ideal)
    }

    /// Wraps a bitset without checking closure.
    pub fn from_bits_unchecked(members: FixedBitSet) -> Self {
        Self { members }
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        self.members.contains(idx)
    }

    /// Members in decreasing order (the β-set order).
    pub fn elements(&self, poset: &CorePoset) -> Vec<u32> {
        let mut out: Vec<u32> = self.members.ones().map(|i| poset.elements[i]).collect();
        out.reverse();
        out
    }

    pub fn is_ideal_of(&self, poset: &CorePoset) -> bool {
        self.members.len() == poset.len()
            && self.members.ones().all(|i| poset.down[i].iter().all(|&d| self.members.contains(d)))
    }
}

/// Iterator behind [`CorePoset::enumerate_ideals`].
///
/// Positions are decided from the largest element down. A position whose
/// up-neighbour is already included is forced in; otherwise it branches,
/// exclude first. Every leaf is an ideal, so there is no dead-end search.
pub struct IdealIter<'a> {
    poset: &'a CorePoset,
    members: FixedBitSet,
    free: Vec<bool>,
    // Positions at or above this index are pinned by the prefix.
    pinned_from: usize,
    started: bool,
    done: bool,
}

impl<'a> IdealIter<'a> {
    /// `pinned` top positions take their values from the bits of `prefix`
    /// (most significant bit = largest element).
    fn new(poset: &'a CorePoset, pinned: usize, prefix: u64) -> Self {
        let n = poset.len();
        let mut it = Self {
            poset,
            members: FixedBitSet::with_capacity(n),
            free: vec![false; n],
            pinned_from: n - pinned,
            started: false,
            done: false,
        };
        for (k, idx) in (it.pinned_from..n).rev().enumerate() {
            let want = (prefix >> (pinned - 1 - k)) & 1 == 1;
            if it.forced(idx) && !want {
                it.done = true;
                return it;
            }
            it.members.set(idx, want);
        }
        it.fill_below(it.pinned_from);
        it
    }

    fn forced(&self, idx: usize) -> bool {
        self.poset.up[idx].iter().any(|&u| self.members.contains(u))
    }

    fn fill_below(&mut self, top: usize) {
        for idx in (0..top).rev() {
            let forced = self.forced(idx);
            self.members.set(idx, forced);
            self.free[idx] = !forced;
        }
    }
}

impl Iterator for IdealIter<'_> {
    type Item = OrderIdeal;

    fn next(&mut self) -> Option<OrderIdeal> {
        if self.done {
            return None;
        }
        if self.started {
            let flip = (0..self.pinned_from).find(|&i| self.free[i] && !self.members.contains(i));
            match flip {
                Some(idx) => {
                    self.members.insert(idx);
                    self.fill_below(idx);
                }
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        Some(OrderIdeal { members: self.members.clone() })
    }
}
