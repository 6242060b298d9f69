//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Every comparison is exact; there are no tolerances.

use std::collections::BTreeSet;
use std::process::Command;

use core_partitions::enumeration::{self, SeriesName};
use core_partitions::extremal::{self, beta_ij, lambda_ij_size};
use core_partitions::oracle;
use core_partitions::poset::{build_poset, build_t};
use core_partitions::{BetaSet, BigCount, CorePoset, CoreTuple, OrderIdeal, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: u64) -> BigCount {
    BigCount::from(v)
}

fn small(c: &BigCount) -> u32 {
    enumeration::small(c) as u32
}

/// Ideal count of T_s = r(s) = M_s for s in [0, 14].
fn motzkin_count() -> Outcome {
    for s in 0..=14u32 {
        let ideals = build_t(s).enumerate_ideals().count() as u64;
        let r = enumeration::count_r(s.into());
        let m = enumeration::motzkin(s.into());
        ensure(big(ideals) == r && r == m, || format!("s={s}: ideals={ideals} r={r} M={m}"))?;
    }
    Ok("s = 0..=14, ideal count = r(s) = M_s".into())
}

/// Brute-force maximum = l(s) and maximizer set = {κ_s} or {κ_s, κ_s'} for s in [3, 12].
fn maximum_size() -> Outcome {
    for s in 3..=12u32 {
        let l = extremal::max_size_l(s);
        let tuple = CoreTuple::consecutive(s);
        // Scan one size past l(s) so a larger core would be seen.
        let summary = oracle::summarize(&tuple, small(&l) + 1);
        ensure(summary.max_size == l, || format!("s={s}: scan max {} vs l(s) {l}", summary.max_size))?;
        let kappa = extremal::kappa(s);
        let mut want = BTreeSet::from([kappa.clone()]);
        if s % 2 == 1 {
            want.insert(kappa.conjugate());
        }
        let got: BTreeSet<Partition> = summary.maximizers.into_iter().collect();
        ensure(got == want, || format!("s={s}: maximizers {got:?} vs {want:?}"))?;
        ensure(want.len() == if s % 2 == 0 { 1 } else { 2 }, || format!("s={s}: κ_s self-conjugacy"))?;
    }
    Ok("s = 3..=12, hook-length scan maximum and maximizers match".into())
}

/// Σ sizes over cores = h(s) by five routes for s in [2, 12]; formula routes agree to s = 200.
fn total_size() -> Outcome {
    let h_series = enumeration::series(SeriesName::H, 201).map_err(|e| e.to_string())?.coeffs;
    for s in 2..=12u32 {
        let k = u64::from(s);
        let l = small(&extremal::max_size_l(s));
        let brute = oracle::summarize(&CoreTuple::consecutive(s), l).total_size;
        let t = build_t(s);
        let via_ideals = oracle::ideal_totals(&t, t.enumerate_ideals()).map_err(|e| e.to_string())?.size;
        ensure(big(via_ideals) == brute, || format!("s={s}: ideal total {via_ideals} vs scan {brute}"))?;
        let (closed_a, closed_b) = enumeration::sum_h_closed(k);
        let rec3 = if s >= 3 { enumeration::sum_h_rec3(k).map_err(|e| e.to_string())? } else { brute.clone() };
        let routes = [enumeration::sum_h(k), closed_a, closed_b, rec3, h_series[s as usize].clone()];
        ensure(routes.iter().all(|v| *v == brute), || format!("s={s}: brute {brute}, routes {routes:?}"))?;
    }
    for s in 3..=200u64 {
        let rec = enumeration::sum_h(s);
        let (a, b) = enumeration::sum_h_closed(s);
        let rec3 = enumeration::sum_h_rec3(s).map_err(|e| e.to_string())?;
        let ser = &h_series[s as usize];
        ensure(a == rec && b == rec && rec3 == rec && *ser == rec, || format!("formula routes disagree at s={s}"))?;
    }
    Ok("s = 2..=12 against brute force; formula routes agree through s = 200".into())
}

/// `enumerate --gens 3,4` lists exactly the five ideals and partitions in order.
fn worked_example() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_core-partitions"))
        .args(["enumerate", "--gens", "3,4"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let expected = [
        r#"{"ideal":[],"partition":[],"size":"0"}"#,
        r#"{"ideal":[1],"partition":[1],"size":"1"}"#,
        r#"{"ideal":[2],"partition":[2],"size":"2"}"#,
        r#"{"ideal":[2,1],"partition":[1,1],"size":"2"}"#,
        r#"{"ideal":[5,2,1],"partition":[3,1,1],"size":"5"}"#,
    ];
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let lines: Vec<&str> = text.lines().collect();
    ensure(lines == expected, || format!("got {lines:?}"))?;
    Ok("∅, (1), (2), (1,1), (3,1,1)".into())
}

/// Anderson count and unique Olsson–Stanton maximum for coprime (s, t), s + t ≤ 16.
fn two_generator_oracles() -> Outcome {
    let mut pairs = 0;
    for s in 2u32..=15 {
        for t in s + 1..=16 - s {
            let Ok(tuple) = CoreTuple::new(vec![s, t]) else { continue };
            let p = build_poset(&tuple).map_err(|e| e.to_string())?;
            let totals = oracle::ideal_totals(&p, p.enumerate_ideals()).map_err(|e| e.to_string())?;
            let count = enumeration::anderson_count(s.into(), t.into()).map_err(|e| e.to_string())?;
            let max = enumeration::olsson_stanton_max(s.into(), t.into()).map_err(|e| e.to_string())?;
            ensure(big(totals.count) == count, || format!("({s},{t}): {} ideals vs {count}", totals.count))?;
            ensure(big(totals.max_size) == max && totals.maximizers.len() == 1, || {
                format!("({s},{t}): max {} x{} vs {max}", totals.max_size, totals.maximizers.len())
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} coprime pairs"))
}

/// Hook-length cores up to l(s) = ideal images, as sets, for s ≤ 8.
fn bijection() -> Outcome {
    for s in 0..=8u32 {
        let t = build_t(s);
        let l = small(&extremal::max_size_l(s));
        let scanned: BTreeSet<Partition> =
            oracle::cores_by_size_scan(&CoreTuple::consecutive(s), l).into_iter().collect();
        let mut images = BTreeSet::new();
        for ideal in t.enumerate_ideals() {
            images.insert(t.partition_of_ideal(&ideal).map_err(|e| e.to_string())?);
        }
        let missing: Vec<_> = scanned.difference(&images).collect();
        let extra: Vec<_> = images.difference(&scanned).collect();
        ensure(missing.is_empty() && extra.is_empty(), || {
            format!("s={s}: cores without ideal {missing:?}, ideals without core {extra:?}")
        })?;
        for p in &scanned {
            let beta = p.beta_set();
            let ideal = OrderIdeal::from_elements(&t, beta.elements());
            ensure(ideal.is_ok(), || format!("s={s}: β({p}) is not an ideal"))?;
        }
    }
    Ok("s = 0..=8, both directions".into())
}

fn random_partition(rng: &mut ChaCha8Rng) -> Partition {
    let len = rng.gen_range(0..=12);
    let mut parts: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=15)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted positive parts")
}

/// Property suites.
fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let tuples: Vec<CoreTuple> = [vec![2, 3], vec![3, 4], vec![3, 5], vec![4, 5, 6], vec![5, 6, 7], vec![4, 7]]
        .into_iter()
        .map(|g| CoreTuple::new(g).unwrap())
        .collect();
    for _ in 0..10_000 {
        let p = random_partition(&mut rng);
        let beta = p.beta_set();
        ensure(Partition::from_beta(&beta) == p, || format!("β round trip fails for {p}"))?;
        ensure(beta.partition_size() == p.weight(), || format!("β size formula fails for {p}"))?;
        let c = p.conjugate();
        ensure(c.conjugate() == p && c.weight() == p.weight(), || format!("conjugation fails for {p}"))?;
        for t in &tuples {
            ensure(p.is_core(t) == c.is_core(t), || format!("core-ness not conjugation invariant: {p}, {t}"))?;
        }
        let mut set: Vec<u32> = (0..rng.gen_range(0..10)).map(|_| rng.gen_range(1..=40)).collect();
        set.sort_unstable();
        set.dedup();
        let b = BetaSet::from_unordered(set).unwrap();
        ensure(Partition::from_beta(&b).beta_set() == b, || format!("β-set round trip fails for {b:?}"))?;
    }

    let mut posets: Vec<CorePoset> = (0..=9).map(build_t).collect();
    for a in 2..=12u32 {
        for c in a + 1..=13 - a {
            if let Ok(p) = CoreTuple::new(vec![a, c]).and_then(|t| build_poset(&t)) {
                posets.push(p);
            }
        }
    }
    for a in 3..=7u32 {
        for b in a + 1..=9 {
            for c in b + 1..=11 {
                if let Ok(p) = CoreTuple::new(vec![a, b, c]).and_then(|t| build_poset(&t)) {
                    posets.push(p);
                }
            }
        }
    }
    let posets: Vec<CorePoset> = posets.into_iter().filter(|p| p.len() <= 20).collect();
    for p in &posets {
        let fast: Vec<OrderIdeal> = p.enumerate_ideals().collect();
        let scan = oracle::ideals_by_subset_scan(p).map_err(|e| e.to_string())?;
        ensure(scan == fast, || format!("{}: enumeration and subset scan differ", p.tuple()))?;
        ensure(p.enumerate_ideals_par() == fast, || format!("{}: parallel enumeration differs", p.tuple()))?;
        ensure(fast.iter().all(|i| i.is_ideal_of(p)), || format!("{}: non-ideal yielded", p.tuple()))?;
    }

    let mut beta_cases = 0;
    for s in 2..=12u32 {
        for i in 1..s {
            let top = (s - i).div_ceil(2);
            let best = lambda_ij_size(s, i, top).map_err(|e| e.to_string())?;
            for j in 0..=top {
                let size = lambda_ij_size(s, i, j).map_err(|e| e.to_string())?;
                let ideal = beta_ij(s, i, j).map_err(|e| e.to_string())?;
                let direct = build_t(s).partition_of_ideal(&ideal).map_err(|e| e.to_string())?.size();
                ensure(size == direct, || format!("|λ_{{{i},{j}}}| formula wrong at s={s}"))?;
                let equality_expected = j == top || (s % 2 == 1 && i == 1 && j == 0);
                ensure(size <= best && (size == best) == equality_expected, || {
                    format!("inequality/equality case fails at s={s}, i={i}, j={j}")
                })?;
                beta_cases += 1;
            }
        }
    }

    for s in 0..=30u32 {
        let m = u64::from(s.div_ceil(2));
        let want = if s % 2 == 1 { m * m - m } else { m * m };
        let got = build_t(s).len() as u64;
        ensure(got == want && extremal::t_cardinality(s) == want, || format!("|T_{s}| = {got}, want {want}"))?;
    }
    Ok(format!("10^4 random partitions, {} posets, {beta_cases} (s,i,j) cases, |T_s| to 30", posets.len()))
}

/// Repeated runs produce byte-identical output.
fn determinism() -> Outcome {
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_core-partitions")).args(args).output().map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("{args:?} exited with {}", out.status))?;
        Ok(out.stdout)
    };
    for args in [&["verify", "--s-max", "10"][..], &["table", "--s-max", "14"]] {
        let first = run(args)?;
        for _ in 0..2 {
            ensure(run(args)? == first, || format!("{args:?} output changed between runs"))?;
        }
    }
    Ok("verify --s-max 10 and table --s-max 14 stable across 3 runs".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 Motzkin count of (s,s+1,s+2)-cores", motzkin_count),
        ("2 maximum size and maximizers", maximum_size),
        ("3 total size h(s)", total_size),
        ("4 (3,4) worked example", worked_example),
        ("5 Anderson / Olsson-Stanton", two_generator_oracles),
        ("6 cores <-> ideals set equality", bijection),
        ("7 property suites", properties),
        ("8 CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
