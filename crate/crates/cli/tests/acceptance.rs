//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails or overruns its time budget.

use std::collections::HashMap;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use palindensity::exact::{
    delta_factor, limit_value, palindromic_count, pd_exact, pd_product, space_size, tail_gap,
    upper_bound, ProductMode, ProductValue,
};
use palindensity::oracle::{
    add_center, brute_force_counts, center_insertion_is_bijective, double,
    doubling_is_bijective, halve, is_palindromic, profiles, Multisets, PalindromeMethod,
    DEFAULT_ENUMERATION_CAP, DEFAULT_PARTITION_CAP,
};
use palindensity::sampler::{estimate_pd, sample_multiset};
use palindensity::{Parity, SamplingModel, SpaceParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed for every statistical criterion, fixed before the first run.
const SEED: u64 = 0;
const DRAWS: u64 = 100_000;
/// Chi-square critical value, 9 degrees of freedom, upper tail 0.001.
const CHI2_DF9_P001: f64 = 27.877_164_871_256_575;
const FLOAT_REL_TOL: f64 = 1e-12;
const LIMIT_REL_TOL: (i64, i64) = (1, 100);

type Outcome = Result<String, String>;

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    check: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(n: u64, b: u64) -> SpaceParams {
    SpaceParams::new(n, b).unwrap()
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn palin(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_palin"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn palin: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "palin {args:?} exited with {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn worked_example() -> Outcome {
    let pd = pd_exact(params(5, 10));
    ensure(pd == ratio(550, 2002) && pd == ratio(25, 91), || format!("pd(5,10) = {pd}"))?;
    let text = String::from_utf8(palin(&["profiles", "5", "10"])?).unwrap();
    let sizes: HashMap<&str, &str> = text
        .lines()
        .skip(1)
        .filter_map(|l| {
            let mut it = l.split_whitespace();
            Some((it.next()?, it.next()?))
        })
        .collect();
    ensure(sizes.get("(1,1,1,1,1)") == Some(&"252"), || format!("Y1 row missing:\n{text}"))?;
    ensure(sizes.get("(2,1,1,1)") == Some(&"840"), || format!("Y2 row missing:\n{text}"))?;
    ensure(text.lines().count() == 9, || format!("expected 7 classes:\n{text}"))?;
    ensure(text.contains("totals: palindromic 550, all 2002"), || text.clone())?;
    Ok("25/91, |Y1| = 252, |Y2| = 840, palindromic total 550".into())
}

fn oracle_equivalence() -> Outcome {
    let mut cells = 0;
    for n in 2..=8 {
        for b in 2..=6 {
            let p = params(n, b);
            let c = brute_force_counts(p, DEFAULT_ENUMERATION_CAP).map_err(|e| e.to_string())?;
            ensure(c.total == space_size(p), || format!("{p}: total {}", c.total))?;
            ensure(c.palindromic == palindromic_count(p), || {
                format!("{p}: palindromic {}", c.palindromic)
            })?;
            let list = profiles(p, DEFAULT_PARTITION_CAP).map_err(|e| e.to_string())?;
            let total: num_bigint::BigUint = list.iter().map(|x| &x.class_size).sum();
            let pal: num_bigint::BigUint =
                list.iter().filter(|x| x.palindromic).map(|x| &x.class_size).sum();
            ensure(total == c.total && pal == c.palindromic, || {
                format!("{p}: profile sums {pal}/{total}")
            })?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells"))
}

fn definition_equivalence() -> Outcome {
    let mut checked = 0;
    for n in 0..=8u32 {
        for b in 2..=5usize {
            for m in Multisets::new(n, b) {
                let by_counts = is_palindromic(&m, PalindromeMethod::Counts).unwrap();
                let by_search = is_palindromic(&m, PalindromeMethod::Search).unwrap();
                ensure(by_counts == by_search, || format!("{m}: {by_counts} vs {by_search}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} multisets"))
}

fn bijections() -> Outcome {
    for b in 2..=4u64 {
        for n in 2..=6u64 {
            let p = params(n, b);
            match p.parity() {
                Parity::Even => {
                    ensure(doubling_is_bijective(p), || format!("doubling fails at {p}"))?;
                    for m in Multisets::new(n as u32, b as usize) {
                        if is_palindromic(&m, PalindromeMethod::Search).unwrap() {
                            let back = halve(&m).map(|h| double(&h));
                            ensure(back.as_ref() == Ok(&m), || format!("halve/double at {m}"))?;
                        } else {
                            ensure(halve(&m).is_err(), || format!("halve accepted {m}"))?;
                        }
                    }
                }
                Parity::Odd => {
                    ensure(center_insertion_is_bijective(p), || {
                        format!("center insertion fails at {p}")
                    })?;
                    let non_pal = Multisets::new((n - 1) as u32, b as usize)
                        .find(|m| !is_palindromic(m, PalindromeMethod::Counts).unwrap());
                    if let Some(m) = non_pal {
                        ensure(add_center(&m, 0).is_err(), || format!("add_center accepted {m}"))?;
                    }
                }
            }
        }
        for n in 1..=6u32 {
            for m in Multisets::new(n, b as usize) {
                ensure(halve(&double(&m)) == Ok(m.clone()), || format!("round trip at {m}"))?;
            }
        }
    }
    Ok("n <= 6, b <= 4".into())
}

fn product_identity() -> Outcome {
    for n in 2..=200 {
        for b in 2..=50 {
            let p = params(n, b);
            ensure(
                pd_product(p, ProductMode::Exact) == ProductValue::Exact(pd_exact(p)),
                || format!("exact product differs at {p}"),
            )?;
        }
    }
    let mut worst = 0.0f64;
    for n in 2..=60 {
        for b in 2..=60 {
            let p = params(n, b);
            let exact = pd_product(p, ProductMode::Exact).to_f64();
            let float = pd_product(p, ProductMode::Float).to_f64();
            worst = worst.max(((float - exact) / exact).abs());
        }
    }
    ensure(worst < FLOAT_REL_TOL, || format!("float relative error {worst:e}"))?;
    Ok(format!("worst float relative error {worst:.2e}"))
}

fn monotonicity() -> Outcome {
    let cases = (2..=12).map(|b| (Parity::Even, b)).chain((3..=12).map(|b| (Parity::Odd, b)));
    for (parity, b) in cases {
        for k in 1..=30 {
            let d = delta_factor(k, b, parity);
            ensure(d.value < BigRational::one(), || format!("delta({k},{b},{parity}) = {}", d.value))?;
            let here = pd_exact(params(parity.length(k), b));
            let next = pd_exact(params(parity.length(k + 1), b));
            ensure(next == d.value * here, || format!("recurrence fails at k={k} b={b} {parity}"))?;
        }
    }
    for k in 1..=30 {
        ensure(pd_exact(params(2 * k + 1, 2)).is_one(), || format!("PD({}, 2) != 1", 2 * k + 1))?;
        ensure(delta_factor(k, 2, Parity::Odd).value.is_one(), || format!("delta({k},2,odd) != 1"))?;
    }
    Ok("k <= 30".into())
}

fn limits() -> Outcome {
    let tol = ratio(LIMIT_REL_TOL.0, LIMIT_REL_TOL.1);
    let mut summary = Vec::new();
    for b in [2u64, 3, 4, 6, 8] {
        let k_end = 50 * b * b;
        for parity in [Parity::Even, Parity::Odd] {
            if parity == Parity::Odd && b == 2 {
                // Constant density 1 equals its limit: the gap is identically zero.
                for k in 1..=k_end {
                    ensure(tail_gap(k, b, parity).is_zero(), || format!("odd b=2 gap at k={k}"))?;
                }
                continue;
            }
            let mut prev = tail_gap(1, b, parity);
            ensure(prev > BigRational::zero(), || format!("gap(1,{b},{parity}) <= 0"))?;
            for k in 2..=k_end {
                let gap = tail_gap(k, b, parity);
                ensure(gap > BigRational::zero() && gap < prev, || {
                    format!("gap not positive and decreasing at k={k} b={b} {parity}")
                })?;
                prev = gap;
            }
            let rel = &prev / limit_value(b, parity);
            ensure(rel < tol, || format!("gap/limit at k={k_end} b={b} {parity}: {rel}"))?;
            summary.push(format!(
                "b={b} {parity}: {:.2e}",
                palindensity::decimal::ratio_to_f64(&rel)
            ));
        }
    }
    Ok(summary.join(", "))
}

fn bounds() -> Outcome {
    for n in 2..=40 {
        for b in 2..=40 {
            let p = params(n, b);
            let (pd, bound) = (pd_exact(p), upper_bound(p));
            match p.parity() {
                Parity::Even if n == 2 => ensure(pd == bound, || format!("{p}: no equality"))?,
                Parity::Even => ensure(pd < bound, || format!("{p}: {pd} >= {bound}"))?,
                Parity::Odd => ensure(pd < bound, || format!("{p}: {pd} >= {bound}"))?,
            }
        }
    }
    Ok("n, b <= 40".into())
}

fn surface_grid() -> Outcome {
    let first = palin(&["grid", "2", "50", "2", "50"])?;
    let second = palin(&["grid", "2", "50", "2", "50"])?;
    ensure(first == second, || "grid output differs between runs".into())?;
    let text = String::from_utf8(first).unwrap();
    let mut lines = text.lines();
    ensure(lines.next() == Some("n,b,pd_num,pd_den,pd_float"), || "bad header".into())?;
    let rows: Vec<(u64, u64, BigRational, String)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            let num: BigInt = f[2].parse().unwrap();
            let den: BigInt = f[3].parse().unwrap();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), BigRational::new(num, den), f[4].to_string())
        })
        .collect();
    ensure(rows.len() == 2401, || format!("{} rows", rows.len()))?;
    ensure(text.contains("\n5,10,550,2002,0.27472527472527475\n"), || {
        "row (5,10) missing".into()
    })?;
    for w in rows.windows(2) {
        let ((n0, b0, pd0, _), (n1, b1, pd1, _)) = (&w[0], &w[1]);
        if n0 == n1 {
            ensure(b1 == &(b0 + 1) && pd1 < pd0, || format!("not decreasing at n={n0}, b={b1}"))?;
        } else {
            ensure(n1 == &(n0 + 1), || "rows out of order".into())?;
        }
    }
    for (n, b, pd, float) in &rows {
        if n % 2 == 1 && *b == 2 {
            ensure(pd.is_one() && float == "1.0", || format!("({n},2) = {pd}"))?;
        }
    }
    Ok("2401 rows, byte-identical".into())
}

fn sampling() -> Outcome {
    let r = estimate_pd(params(5, 10), SamplingModel::UniformMultiset, DRAWS, SEED);
    ensure(r.contains(25.0 / 91.0), || format!("(5,10) interval {:?}", r.interval))?;

    let p = params(3, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut seen: HashMap<Vec<u32>, u64> = HashMap::new();
    for _ in 0..DRAWS {
        let m = sample_multiset(p, SamplingModel::UniformMultiset, &mut rng);
        *seen.entry(m.counts().to_vec()).or_default() += 1;
    }
    let cells: Vec<_> = Multisets::new(3, 3).collect();
    let expected = DRAWS as f64 / cells.len() as f64;
    let chi2: f64 = cells
        .iter()
        .map(|m| (*seen.get(m.counts()).unwrap_or(&0) as f64 - expected).powi(2) / expected)
        .sum();
    ensure(cells.len() == 10 && chi2 < CHI2_DF9_P001, || format!("chi2 = {chi2}"))?;

    let picks = estimate_pd(params(2, 2), SamplingModel::UniformPicks, DRAWS, SEED);
    ensure(picks.contains(0.5), || format!("picks interval {:?}", picks.interval))?;
    ensure(!picks.contains(2.0 / 3.0), || "picks interval contains 2/3".into())?;
    Ok(format!(
        "(5,10) [{:.4}, {:.4}], chi2 = {chi2:.2}, picks [{:.4}, {:.4}]",
        r.interval.0, r.interval.1, picks.interval.0, picks.interval.1
    ))
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { name: "worked example (5,10)", budget: secs(1), check: worked_example },
        Criterion { name: "oracle equivalence n<=8 b<=6", budget: secs(30), check: oracle_equivalence },
        Criterion { name: "definition equivalence n<=8 b<=5", budget: secs(60), check: definition_equivalence },
        Criterion { name: "bijections n<=6 b<=4", budget: None, check: bijections },
        Criterion { name: "product-form identity", budget: secs(60), check: product_identity },
        Criterion { name: "monotonicity and recurrence", budget: None, check: monotonicity },
        Criterion { name: "limits at k = 50 b^2", budget: secs(60), check: limits },
        Criterion { name: "upper bounds n,b<=40", budget: None, check: bounds },
        Criterion { name: "density surface grid [2,50]^2", budget: None, check: surface_grid },
        Criterion { name: "sampling (statistical)", budget: secs(30), check: sampling },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.check)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, budget {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {} ({elapsed:.2?}): {detail}", c.name),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {} ({elapsed:.2?}): {why}", c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
