use std::fs;
use std::io::Write;
use std::path::Path;

use num_traits::Zero;
use palindensity::decimal::{format_ratio, format_sig17};
use palindensity::exact::{self, delta_factor, limit_value, tail_gap, ProductMode};
use palindensity::oracle::{self, CellCheck};
use palindensity::sampler::estimate_pd;
use palindensity::{DensityReport, Parity, SamplingModel, SpaceParams};
use rayon::prelude::*;

use crate::grid::{self, GridSpec, MAX_EXACT_PARAM};
use crate::CliError;

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

macro_rules! out {
    ($w:expr, $($arg:tt)*) => {
        writeln!($w, $($arg)*).map_err(stdout_err)?
    };
}

fn params(n: u64, b: u64) -> Result<SpaceParams, CliError> {
    Ok(SpaceParams::new(n, b)?)
}

fn exact_params(n: u64, b: u64) -> Result<SpaceParams, CliError> {
    let p = params(n, b)?;
    if n > MAX_EXACT_PARAM || b > MAX_EXACT_PARAM {
        return Err(CliError::Usage(format!(
            "exact evaluation is limited to n, b <= {MAX_EXACT_PARAM}"
        )));
    }
    Ok(p)
}

pub fn pd(out: &mut dyn Write, n: u64, b: u64, float: bool) -> Result<(), CliError> {
    let report = if float {
        DensityReport::product(params(n, b)?, ProductMode::Float)
    } else {
        DensityReport::closed_form(exact_params(n, b)?)
    };
    out!(out, "{report}");
    Ok(())
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn verify(out: &mut dyn Write, max_n: u64, max_b: u64, cap: u64) -> Result<(), CliError> {
    params(max_n, max_b)?;
    let cells: Vec<SpaceParams> = (2..=max_n)
        .flat_map(|n| (2..=max_b).map(move |b| SpaceParams::new(n, b).expect("n, b >= 2")))
        .collect();
    let checks: Vec<CellCheck> = cells
        .par_iter()
        .map(|&p| oracle::check_cell(p, cap))
        .collect::<Result<_, _>>()?;

    out!(
        out,
        "{:<10} {:>12} {:>12}  {:<6} {:<8} {:<9} {}",
        "cell",
        "total",
        "palindromic",
        "closed",
        "profiles",
        "bijection",
        "search"
    );
    for c in &checks {
        let search = match c.search_agrees {
            Some(ok) => mark(ok),
            None => "-",
        };
        out!(
            out,
            "{:<10} {:>12} {:>12}  {:<6} {:<8} {:<9} {}",
            format!("({},{})", c.params.n(), c.params.b()),
            c.counts.total,
            c.counts.palindromic,
            mark(c.closed_forms),
            mark(c.profile_sums),
            mark(c.bijection),
            search
        );
    }

    out!(out, "");
    let mut header = String::from("n\\b");
    for b in 2..=max_b {
        header.push_str(&format!(" {b:>3}"));
    }
    out!(out, "{header}");
    for (row, n) in checks.chunks((max_b - 1) as usize).zip(2..) {
        let mut line = format!("{n:>3}");
        for c in row {
            line.push_str(if c.passed() { "   ." } else { "   X" });
        }
        out!(out, "{line}");
    }

    match checks.iter().find(|c| !c.passed()) {
        None => {
            out!(out, "all {} cells pass", checks.len());
            Ok(())
        }
        Some(c) => {
            let failed = checks.iter().filter(|c| !c.passed()).count();
            out!(out, "{failed} of {} cells fail", checks.len());
            Err(CliError::Mismatch(format!(
                "verification failed, first failing cell (n={}, b={})",
                c.params.n(),
                c.params.b()
            )))
        }
    }
}

pub fn grid(out: &mut dyn Write, spec: &GridSpec, path: Option<&Path>) -> Result<(), CliError> {
    spec.validate()?;
    let text = grid::render(&grid::compute(spec), spec.format);
    match path {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        }),
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

pub fn converge(out: &mut dyn Write, b: u64, parity: Parity, k_max: u64) -> Result<(), CliError> {
    exact_params(2, b)?;
    if k_max < 1 {
        return Err(CliError::Usage("k-max must be at least 1".into()));
    }
    // Odd lengths over a binary alphabet are all palindromic: the density is
    // constant rather than strictly decreasing.
    let constant = parity == Parity::Odd && b == 2;

    out!(out, "b = {b}, parity = {parity}");
    out!(
        out,
        "{:>6} {:>7} {:>24} {:>24} {:>24}",
        "k",
        "n",
        "pd",
        "delta",
        "tail_gap"
    );
    let mut violations = 0u64;
    let mut prev = None;
    for k in 1..=k_max {
        let n = parity.length(k);
        let pd = exact::pd_exact(SpaceParams::new(n, b)?);
        let delta = delta_factor(k, b, parity);
        let gap = tail_gap(k, b, parity);
        let ok = match &prev {
            None => true,
            Some((prev_pd, prev_gap)) if constant => pd == *prev_pd && gap.is_zero() && prev_gap == &gap,
            Some((prev_pd, prev_gap)) => pd < *prev_pd && gap < *prev_gap && gap > Zero::zero(),
        };
        if !ok {
            violations += 1;
        }
        out!(
            out,
            "{:>6} {:>7} {:>24} {:>24} {:>24}{}",
            k,
            n,
            format_ratio(&pd),
            format_ratio(&delta.value),
            format_ratio(&gap),
            if ok { "" } else { "  <- monotonicity violated" }
        );
        prev = Some((pd, gap));
    }
    let limit = limit_value(b, parity);
    out!(out, "violations: {violations}");
    out!(out, "limit: {limit} ≈ {}", format_ratio(&limit));
    Ok(())
}

pub fn profiles(out: &mut dyn Write, n: u64, b: u64, cap: u64) -> Result<(), CliError> {
    let p = params(n, b)?;
    let list = oracle::profiles(p, cap)?;
    let width = list
        .iter()
        .map(|pr| pr.to_string().len())
        .max()
        .unwrap_or(5)
        .max(5);
    out!(out, "{:<width$}  {:>12}  palindromic", "parts", "size");
    let mut pal = num_bigint::BigUint::zero();
    let mut total = num_bigint::BigUint::zero();
    for pr in &list {
        out!(
            out,
            "{:<width$}  {:>12}  {}",
            pr.to_string(),
            pr.class_size,
            if pr.palindromic { "yes" } else { "no" }
        );
        total += &pr.class_size;
        if pr.palindromic {
            pal += &pr.class_size;
        }
    }
    out!(out, "totals: palindromic {pal}, all {total}");
    Ok(())
}

pub fn sample(
    out: &mut dyn Write,
    n: u64,
    b: u64,
    model: SamplingModel,
    draws: u64,
    seed: u64,
) -> Result<(), CliError> {
    let p = params(n, b)?;
    if draws == 0 {
        return Err(CliError::Usage("draws must be at least 1".into()));
    }
    let r = estimate_pd(p, model, draws, seed);
    out!(out, "params: {p}");
    out!(out, "model: {}", r.model);
    out!(out, "draws: {}", r.draws);
    out!(out, "hits: {}", r.hits);
    out!(out, "estimate: {}", format_sig17(r.estimate));
    out!(
        out,
        "interval99: [{}, {}]",
        format_sig17(r.interval.0),
        format_sig17(r.interval.1)
    );
    out!(out, "seed: {}", r.seed);
    Ok(())
}
