//! Counting and summation formulas for `(s, s+1, s+2)`-cores.
//!
//! Sequences, all indexed by `s` and all exact:
//!
//! - `r(s)`: number of cores, i.e. ideals of `T_s`; equal to the Motzkin number `M_s`,
//! - `f(s) = Σ_I |I|` and `g(s) = Σ_I Σ_{a∈I} ρ(a)` over ideals `I` of `T_s`,
//! - `h(s)`: total size of all cores,
//! - `p(s) = Σ_I Σ_{a∈I} a`.
//!
//! The ideal-decomposition recurrences are cached in a process-wide table that
//! grows on demand. `h(s)` additionally has two closed forms, a three-term
//! recurrence, and a generating function; see [`sum_h_closed`], [`sum_h_rec3`]
//! and [`series`].

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::poset::build_t;
use crate::series::Series;
use crate::{BigCount, Error, ExactRational, Result};

pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn factorial(n: u64) -> BigCount {
    (1..=n).fold(BigCount::one(), |acc, k| acc * k)
}

fn exact_div(num: &BigCount, den: &BigCount, what: &str) -> Result<BigCount> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(q)
}

/// `C_k = binom(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> BigCount {
    exact_div(&binomial(2 * k, k), &BigCount::from(k + 1), "catalan").expect("Catalan division is exact")
}

/// `M_s = Σ_k binom(s, 2k) C_k`.
pub fn motzkin(s: u64) -> BigCount {
    (0..=s / 2).map(|k| binomial(s, 2 * k) * catalan(k)).sum()
}

#[derive(Default)]
struct Tables {
    motzkin: Vec<BigCount>,
    r: Vec<BigCount>,
    f: Vec<BigCount>,
    g: Vec<BigCount>,
    h: Vec<BigCount>,
}

impl Tables {
    fn extend_to(&mut self, n: usize) {
        while self.r.len() <= n {
            let s = self.r.len();
            self.motzkin.push(motzkin(s as u64));
            let (r, f, g, h) = if s < 2 {
                let zero = BigCount::zero();
                (BigCount::one(), zero.clone(), zero.clone(), zero)
            } else {
                (self.next_r(s), self.next_f(s), self.next_g(s), self.next_h(s))
            };
            self.r.push(r);
            self.f.push(f);
            self.g.push(g);
            self.h.push(h);
        }
    }

    fn next_r(&self, s: usize) -> BigCount {
        let r = &self.r;
        let tail: BigCount = (2..=s).map(|i| &r[i - 2] * &r[s - i]).sum();
        &r[s - 1] + tail
    }

    fn next_f(&self, s: usize) -> BigCount {
        let (m, f) = (&self.motzkin, &self.f);
        let tail: BigCount = (2..=s)
            .map(|i| BigCount::from(2u32) * &m[s - i] * &f[i - 2] + (i as u64 - 1) * &m[s - i] * &m[i - 2])
            .sum();
        &f[s - 1] + tail
    }

    fn next_g(&self, s: usize) -> BigCount {
        let (m, f, g) = (&self.motzkin, &self.f, &self.g);
        let tail: BigCount = (2..=s).map(|i| &m[s - i] * (BigCount::from(2u32) * &g[i - 2] + &f[i - 2])).sum();
        &g[s - 1] + tail
    }

    fn next_h(&self, s: usize) -> BigCount {
        let int = |x: &BigCount| BigInt::from(x.clone());
        let (m, f, g, h) = (&self.motzkin, &self.f, &self.g, &self.h);
        let mut acc = int(&h[s - 1]) + int(&f[s - 1]) + int(&g[s - 1]);
        for i in 2..=s {
            let ms = int(&m[s - i]);
            let (si, ii) = (s as i64, i as i64);
            acc += 2 * &ms * int(&h[i - 2])
                + (si + 4 - ii) * &ms * int(&f[i - 2])
                + 2 * (si - ii + 2) * &ms * int(&g[i - 2])
                + (ii - 1) * &ms * int(&m[i - 2])
                - int(&f[i - 2]) * int(&f[s - i]);
        }
        acc.to_biguint().expect("h(s) is nonnegative")
    }
}

fn tables() -> &'static RwLock<Tables> {
    static TABLES: OnceLock<RwLock<Tables>> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(Tables::default()))
}

fn lookup(s: u64, pick: fn(&Tables) -> &Vec<BigCount>) -> BigCount {
    let s = s as usize;
    {
        let t = tables().read().unwrap();
        if let Some(v) = pick(&t).get(s) {
            return v.clone();
        }
    }
    let mut t = tables().write().unwrap();
    t.extend_to(s);
    pick(&t)[s].clone()
}

/// Number of `(s, s+1, s+2)`-cores by the ideal-decomposition recurrence
/// `r(s) = r(s-1) + Σ_{i=2}^{s} r(i-2) r(s-i)`.
pub fn count_r(s: u64) -> BigCount {
    lookup(s, |t| &t.r)
}

/// `f(s) = Σ_{I ∈ J(T_s)} |I|`, by recurrence.
pub fn sum_f(s: u64) -> BigCount {
    lookup(s, |t| &t.f)
}

/// `g(s) = Σ_{I ∈ J(T_s)} Σ_{a ∈ I} ρ_s(a)`, by recurrence.
pub fn sum_g(s: u64) -> BigCount {
    lookup(s, |t| &t.g)
}

/// Total size `h(s)` of all `(s, s+1, s+2)`-cores, by the recurrence coupling
/// `h` with `f`, `g` and the Motzkin numbers.
pub fn sum_h(s: u64) -> BigCount {
    lookup(s, |t| &t.h)
}

/// `Σ_{j=0}^{s-2} binom(j+3, 3) Σ_i binom(j, 2i) C_i`.
pub fn sum_h_closed_motzkin(s: u64) -> BigCount {
    (0..s.saturating_sub(1)).map(|j| binomial(j + 3, 3) * motzkin(j)).sum()
}

/// `Σ_i (2i+3)! / (6 i! (i+1)!) · binom(s+2, 2i+4)`.
pub fn sum_h_closed_central(s: u64) -> BigCount {
    let mut total = BigCount::zero();
    let mut i = 0;
    while 2 * i + 4 <= s + 2 {
        let den = BigCount::from(6u32) * factorial(i) * factorial(i + 1);
        let weight = exact_div(&factorial(2 * i + 3), &den, "central coefficient")
            .expect("central coefficient division is exact");
        total += weight * binomial(s + 2, 2 * i + 4);
        i += 1;
    }
    total
}

/// Both closed forms of `h(s)`: `(motzkin form, central-binomial form)`.
pub fn sum_h_closed(s: u64) -> (BigCount, BigCount) {
    (sum_h_closed_motzkin(s), sum_h_closed_central(s))
}

/// `h(s)` from `(2-s) h(s) + (2s-1) h(s-1) + (3s+3) h(s-2) = 0`, run forward
/// from `h(1) = 0`, `h(2) = 1`. Requires `s ≥ 3`; at `s = 2` the leading
/// coefficient vanishes.
pub fn sum_h_rec3(s: u64) -> Result<BigCount> {
    if s < 3 {
        return Err(Error::OutOfRange(format!("the three-term recurrence needs s >= 3 (got {s})")));
    }
    let (mut prev2, mut prev1) = (BigCount::zero(), BigCount::one());
    for n in 3..=s {
        let num = (2 * n - 1) * &prev1 + (3 * n + 3) * &prev2;
        let next = exact_div(&num, &BigCount::from(n - 2), &format!("three-term recurrence at s={n}"))?;
        prev2 = std::mem::replace(&mut prev1, next);
    }
    Ok(prev1)
}

/// `p(s) = Σ_{I ∈ J(T_s)} Σ_{a ∈ I} a`, by enumerating the ideals of `T_s`.
pub fn sum_p(s: u32) -> BigCount {
    let t = build_t(s);
    let total: u64 =
        t.enumerate_ideals().map(|ideal| ideal.bits().ones().map(|i| u64::from(t.elements()[i])).sum::<u64>()).sum();
    BigCount::from(total)
}

/// Exact average size `h(s) / r(s)`.
pub fn average_size(s: u64) -> ExactRational {
    ExactRational::new(sum_h(s), count_r(s))
}

/// Decimal rendering of a nonnegative rational, rounded half up to `digits`
/// places.
pub fn decimal_string(q: &ExactRational, digits: u32) -> String {
    let scale = num_traits::pow(BigCount::from(10u32), digits as usize);
    let two = BigCount::from(2u32);
    let scaled = (q.numer() * &scale * &two + q.denom()) / (q.denom() * &two);
    let (int, frac) = scaled.div_rem(&scale);
    if digits == 0 {
        return int.to_string();
    }
    format!("{int}.{:0>width$}", frac.to_string(), width = digits as usize)
}

fn check_coprime_pair(s: u64, t: u64) -> Result<()> {
    if s == 0 || t == 0 || s == t || s.gcd(&t) != 1 {
        return Err(Error::InvalidTuple {
            generators: vec![s as u32, t as u32],
            reason: "expected two distinct coprime positive integers".into(),
        });
    }
    Ok(())
}

/// Number of `(s, t)`-cores: `binom(s+t, s) / (s+t)`.
pub fn anderson_count(s: u64, t: u64) -> Result<BigCount> {
    check_coprime_pair(s, t)?;
    exact_div(&binomial(s + t, s), &BigCount::from(s + t), "Anderson count")
}

/// Largest size of an `(s, t)`-core: `(s²-1)(t²-1) / 24`.
pub fn olsson_stanton_max(s: u64, t: u64) -> Result<BigCount> {
    check_coprime_pair(s, t)?;
    let num = BigCount::from(s * s - 1) * BigCount::from(t * t - 1);
    exact_div(&num, &BigCount::from(24u32), "maximum (s,t)-core size")
}

/// Which generating function a [`SeriesTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeriesName {
    F,
    G,
    H,
    M,
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            SeriesName::F => "F",
            SeriesName::G => "G",
            SeriesName::H => "H",
            SeriesName::M => "M",
        };
        f.write_str(c)
    }
}

/// Leading coefficients of one of the generating functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesTable {
    pub name: SeriesName,
    pub coeffs: Vec<BigCount>,
}

const DISCRIMINANT: [i64; 3] = [1, -2, -3];

fn half(n: i64) -> BigRational {
    BigRational::new(n.into(), 2.into())
}

/// `1 - x - sqrt(1 - 2x - 3x²)`, which starts at `2x²`.
fn motzkin_numerator(order: usize) -> Result<Series> {
    let root = Series::poly_power(&DISCRIMINANT, &half(1), order)?;
    Ok(&Series::from_integers(&[1, -1], order) - &root)
}

/// Closed-form generating functions expanded exactly:
///
/// - `M(x) = (1 - x - sqrt(1-2x-3x²)) / (2x²)`
/// - `F(x) = (1 - x - sqrt(1-2x-3x²))² / (4x² (1-2x-3x²))`
/// - `G(x) = (1 - x - sqrt(1-2x-3x²))³ / (8x² (1-2x-3x²)^{3/2})`
/// - `H(x) = x² / (1-2x-3x²)^{5/2}`
pub fn series_rational(name: SeriesName, n_terms: usize) -> Result<Series> {
    if n_terms == 0 {
        return Err(Error::OutOfRange("a series table needs at least one term".into()));
    }
    let n = n_terms;
    let out = match name {
        SeriesName::M => motzkin_numerator(n + 2)?.shift_down(2)?.scale(&half(1)),
        SeriesName::F => {
            let num = motzkin_numerator(n + 2)?;
            let sq = (&num * &num).shift_down(2)?;
            let inv = Series::poly_power(&DISCRIMINANT, &BigRational::from_integer((-1).into()), n)?;
            (&sq * &inv).scale(&BigRational::new(1.into(), 4.into()))
        }
        SeriesName::G => {
            let num = motzkin_numerator(n + 2)?;
            let cube = (&(&num * &num) * &num).shift_down(2)?;
            let inv = Series::poly_power(&DISCRIMINANT, &half(-3), n)?;
            (&cube * &inv).scale(&BigRational::new(1.into(), 8.into()))
        }
        SeriesName::H => Series::poly_power(&DISCRIMINANT, &half(-5), n)?.shift_up(2),
    };
    Ok(out)
}

/// The first `n_terms` coefficients of `M`, `F`, `G` or `H` as exact counts.
pub fn series(name: SeriesName, n_terms: usize) -> Result<SeriesTable> {
    let coeffs = series_rational(name, n_terms)?.to_counts()?;
    Ok(SeriesTable { name, coeffs })
}

/// `u64` view of a count, for callers that know it is small.
pub fn small(c: &BigCount) -> u64 {
    c.to_u64().expect("count fits in u64")
}
