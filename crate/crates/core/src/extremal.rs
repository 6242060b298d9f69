//! Largest `(s, s+1, s+2)`-cores.
//!
//! `κ_s` is the partition whose β-set is all of `T_s`. It has maximum size;
//! for even `s` it is the only maximiser and is self-conjugate, for odd
//! `s ≥ 3` its conjugate is the only other one. The family `λ_{i,j}` (ideals
//! made of an embedded copy of `T_{s-i}` plus a chain at residue `i`) is the
//! candidate set the maximum is taken over.

use serde::Serialize;

use crate::enumeration::binomial;
use crate::partition::{BetaSet, Partition};
use crate::poset::{build_t, OrderIdeal};
use crate::{BigCount, Error, Result};

/// `|T_s|`: `m² - m` for `s = 2m - 1`, `m²` for `s = 2m`.
pub fn t_cardinality(s: u32) -> u64 {
    let m = u64::from(s.div_ceil(2));
    if s % 2 == 1 {
        m * m - m
    } else {
        m * m
    }
}

/// `Σ_{h∈T_s} h` in closed form:
/// `(2/3)m⁴ - m³ - (1/6)m² + (1/2)m` for `s = 2m - 1`,
/// `(2/3)m⁴ + (1/3)m³ - (1/6)m² + (1/6)m` for `s = 2m`.
pub fn t_element_sum(s: u32) -> u64 {
    let m = i128::from(s.div_ceil(2));
    let sixfold =
        if s % 2 == 1 { 4 * m.pow(4) - 6 * m.pow(3) - m * m + 3 * m } else { 4 * m.pow(4) + 2 * m.pow(3) - m * m + m };
    debug_assert_eq!(sixfold % 6, 0);
    (sixfold / 6) as u64
}

/// `Σ_{h∈T_s} ρ_s(h)`; rank `k` holds `s - 1 - 2k` elements.
pub fn t_rank_sum(s: u32) -> u64 {
    if s < 3 {
        return 0;
    }
    let s = u64::from(s);
    (0..s / 2).map(|k| k * (s - 1 - 2 * k)).sum()
}

fn check_ij(s: u32, i: u32, j: u32) -> Result<()> {
    if i < 1 || i >= s {
        return Err(Error::OutOfRange(format!("need 1 <= i <= s-1, got s={s}, i={i}")));
    }
    let top = (s - i).div_ceil(2);
    if j > top {
        return Err(Error::OutOfRange(format!("need 0 <= j <= {top}, got j={j}")));
    }
    Ok(())
}

/// Elements of `β_{i,j}` in decreasing order.
///
/// The copy of `T_{s-i}` is embedded by `a ↦ a + i + i·ρ_{s-i}(a)`, which maps
/// its bottom rank onto `[i+1, s-1]`; the chain is `i, i+(s+2), ..., i+(j-1)(s+2)`.
pub fn beta_ij_elements(s: u32, i: u32, j: u32) -> Result<Vec<u32>> {
    check_ij(s, i, j)?;
    let inner = build_t(s - i);
    let mut out: Vec<u32> = inner.elements().iter().zip(inner.ranks()).map(|(&a, &r)| a + i + i * r).collect();
    out.extend((0..j).map(|p| i + p * (s + 2)));
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `β_{i,j}` as an ideal of `build_t(s)`.
pub fn beta_ij(s: u32, i: u32, j: u32) -> Result<OrderIdeal> {
    let elements = beta_ij_elements(s, i, j)?;
    OrderIdeal::from_elements(&build_t(s), &elements)
}

/// `|λ_{i,j}| = |λ_{i,0}| + ij + (s+1)·binom(j,2) - |β_{i,0}|·j`, with
/// `|λ_{i,0}|` and `|β_{i,0}|` taken from the closed forms for `T_{s-i}`.
pub fn lambda_ij_size(s: u32, i: u32, j: u32) -> Result<BigCount> {
    check_ij(s, i, j)?;
    let n = s - i;
    let (i, j, s) = (i128::from(i), i128::from(j), i128::from(s));
    let card = i128::from(t_cardinality(n));
    let sum = i128::from(t_element_sum(n)) + i * card + i * i128::from(t_rank_sum(n));
    let base = sum - card * (card - 1) / 2;
    let size = base + i * j + (s + 1) * (j * (j - 1) / 2) - card * j;
    Ok(BigCount::from(u128::try_from(size).expect("partition sizes are nonnegative")))
}

/// The partition with β-set `T_s`.
pub fn kappa(s: u32) -> Partition {
    let mut elements = build_t(s).elements().to_vec();
    elements.reverse();
    Partition::from_beta(&BetaSet::new(elements).expect("poset elements are distinct and positive"))
}

/// Maximum size of an `(s, s+1, s+2)`-core:
/// `m·binom(m+1, 3)` for `s = 2m - 1`, `(m+1)·binom(m+1, 3) + binom(m+2, 3)` for `s = 2m`.
pub fn max_size_l(s: u32) -> BigCount {
    let m = u64::from(s.div_ceil(2));
    if s % 2 == 1 {
        m * binomial(m + 1, 3)
    } else {
        (m + 1) * binomial(m + 1, 3) + binomial(m + 2, 3)
    }
}

/// `Σ_{h∈T_s} h - binom(|T_s|, 2)`: the size of `κ_s` from the closed forms
/// for the poset, without building the partition.
pub fn kappa_size_from_poset_sums(s: u32) -> u64 {
    let card = t_cardinality(s);
    t_element_sum(s) - card * card.saturating_sub(1) / 2
}

/// All maximum-size `(s, s+1, s+2)`-cores for `s ≥ 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub s: u32,
    #[serde(serialize_with = "as_decimal")]
    pub max_size: BigCount,
    /// `κ_s` first, then its conjugate when it differs.
    pub witnesses: Vec<Partition>,
    pub unique: bool,
    pub self_conjugate: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigCount, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&v.to_string())
}

pub fn extremal_report(s: u32) -> Result<ExtremalReport> {
    if s < 3 {
        return Err(Error::OutOfRange(format!("the maximum-size classification needs s >= 3, got {s}")));
    }
    let k = kappa(s);
    let conj = k.conjugate();
    let self_conjugate = conj == k;
    let mut witnesses = vec![k];
    if !self_conjugate {
        witnesses.push(conj);
    }
    Ok(ExtremalReport { s, max_size: max_size_l(s), unique: witnesses.len() == 1, witnesses, self_conjugate })
}
