use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use rgc_core::methods::{b_sequence, integral_coefficient};
use rgc_core::reference::{lookup, table, Source};
use rgc_core::{Diagnostics, Estimate, Method, MethodConfig, PhaseVariant, ScaledReal};

use crate::args::{Against, Common, Indices};
use crate::report::{render_ratio, Cell, Report};

/// A request that cannot be run as given; reported with exit code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

type Outcome = Result<Report, UsageError>;

fn map_rows<J, R, F>(jobs: &[J], parallel: bool, f: F) -> Vec<R>
where
    J: Sync,
    R: Send,
    F: Fn(&J) -> R + Sync + Send,
{
    if parallel {
        jobs.par_iter().map(f).collect()
    } else {
        jobs.iter().map(f).collect()
    }
}

fn config(common: &Common) -> Result<MethodConfig, UsageError> {
    let cfg = common.config();
    cfg.validate().map_err(|e| UsageError(e.to_string()))?;
    Ok(cfg)
}

fn check_domains(ns: &[usize], methods: &[Method]) -> Result<(), UsageError> {
    for &m in methods {
        let bad: Vec<usize> = ns.iter().copied().filter(|&n| m.check_domain(n).is_err()).collect();
        if !bad.is_empty() {
            let (lo, hi) = m.domain();
            return Err(UsageError(format!("{m} accepts n in {lo}..={hi}; got {}", list(&bad))));
        }
    }
    Ok(())
}

fn list(ns: &[usize]) -> String {
    ns.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

fn diagnostics_text(d: &Diagnostics) -> String {
    let mut parts = Vec::new();
    let mut push = |key: &str, v: Option<f64>| {
        if let Some(v) = v {
            parts.push(format!("{key}={}", render_ratio(v)));
        }
    };
    push("saddle_residual", d.saddle_residual);
    push("estimated_error", d.estimated_error);
    push("radius", d.radius);
    push("corrected_exponent", d.corrected_exponent);
    push("literal_exponent", d.literal_exponent);
    if let Some(m) = d.nodes {
        parts.push(format!("nodes={m}"));
    }
    if let Some(p) = d.phase_variant {
        let name = match p {
            PhaseVariant::Bornemann => "bornemann",
            PhaseVariant::Hayman => "hayman",
        };
        parts.push(format!("phase_variant={name}"));
    }
    parts.join(";")
}

fn value_cell(r: &rgc_core::Result<Estimate>) -> Cell {
    match r {
        Ok(e) => Cell::Value(e.value),
        Err(err) => Cell::Failed(err.to_string()),
    }
}

fn difference_cells(value: &rgc_core::Result<Estimate>, reference: Result<ScaledReal, String>) -> [Cell; 2] {
    match (value, reference) {
        (Ok(v), Ok(r)) => match v.value.relative_error(&r) {
            Ok(d) => [Cell::Ratio(d), Cell::Flag(v.value.sign() == r.sign())],
            Err(e) => [Cell::Failed(e.to_string()), Cell::Empty],
        },
        _ => [Cell::Empty, Cell::Empty],
    }
}

pub fn run_compute(indices: &Indices, methods: &[Method], common: &Common) -> Outcome {
    let cfg = config(common)?;
    let ns = indices.values();
    check_domains(&ns, methods)?;
    let jobs: Vec<(usize, Method)> = ns.iter().flat_map(|&n| methods.iter().map(move |&m| (n, m))).collect();
    let results = map_rows(&jobs, common.parallel, |&(n, m)| m.estimate::<f64>(n, &cfg));
    let mut report = Report::new(vec!["n", "method", "value", "diagnostics"]);
    for (&(n, m), r) in jobs.iter().zip(&results) {
        let diag = r.as_ref().map(|e| diagnostics_text(&e.diagnostics)).unwrap_or_default();
        report.rows.push(vec![Cell::Int(n), Cell::Text(m.to_string()), value_cell(r), Cell::Text(diag)]);
    }
    Ok(report)
}

pub fn run_table(which: u8, common: &Common) -> Outcome {
    let cfg = config(common)?;
    let source = if which == 1 { Source::Table1 } else { Source::Table2 };
    let records: Vec<_> = table(source).collect();
    let results = map_rows(&records, common.parallel, |r| {
        (Method::Saddle.estimate::<f64>(r.n, &cfg), Method::Hayman.estimate::<f64>(r.n, &cfg))
    });
    let mut report = Report::new(vec!["n", "exact", "theorem", "theorem_rel_err", "hayman", "hayman_rel_err"]);
    for (r, (theorem, hayman)) in records.iter().zip(&results) {
        let exact = r.exact.value;
        let [t_err, _] = difference_cells(theorem, Ok(exact));
        let [h_err, _] = difference_cells(hayman, Ok(exact));
        report.rows.push(vec![
            Cell::Int(r.n),
            Cell::Value(exact),
            value_cell(theorem),
            t_err,
            value_cell(hayman),
            h_err,
        ]);
    }
    Ok(report)
}

pub fn run_compare(indices: &Indices, methods: &[Method], against: Against, common: &Common) -> Outcome {
    let cfg = config(common)?;
    let ns = indices.values();
    check_domains(&ns, methods)?;
    let references: Vec<Result<ScaledReal, String>> = match against {
        Against::Exact => {
            let missing: Vec<usize> = ns.iter().copied().filter(|&n| lookup(n).is_err()).collect();
            if !missing.is_empty() {
                return Err(UsageError(format!("no published value for n = {}", list(&missing))));
            }
            ns.iter().map(|&n| Ok(lookup(n).expect("checked above").exact.value)).collect()
        }
        Against::Method(m) => {
            check_domains(&ns, &[m])?;
            map_rows(&ns, common.parallel, |&n| m.estimate::<f64>(n, &cfg).map(|e| e.value).map_err(|e| e.to_string()))
        }
    };
    let against_name = match against {
        Against::Exact => "exact".to_string(),
        Against::Method(m) => m.to_string(),
    };
    let jobs: Vec<(usize, usize, Method)> =
        ns.iter().enumerate().flat_map(|(i, &n)| methods.iter().map(move |&m| (i, n, m))).collect();
    let results = map_rows(&jobs, common.parallel, |&(_, n, m)| m.estimate::<f64>(n, &cfg));
    let mut report =
        Report::new(vec!["n", "method", "value", "against", "reference", "relative_difference", "sign_match"]);
    for (&(i, n, m), r) in jobs.iter().zip(&results) {
        let reference = references[i].clone();
        let ref_cell = match &reference {
            Ok(v) => Cell::Value(*v),
            Err(e) => Cell::Failed(e.clone()),
        };
        let [diff, sign] = difference_cells(r, reference);
        report.rows.push(vec![
            Cell::Int(n),
            Cell::Text(m.to_string()),
            value_cell(r),
            Cell::Text(against_name.clone()),
            ref_cell,
            diff,
            sign,
        ]);
    }
    Ok(report)
}

pub fn run_bn(max: usize, common: &Common) -> Outcome {
    let cfg = config(common)?;
    let ns: Vec<usize> = (1..=max + 1).collect();
    let a: Vec<Result<f64, String>> = map_rows(&ns, common.parallel, |&n| {
        integral_coefficient::<f64>(n, &cfg)
            .and_then(|e| e.value.to_native())
            .map(|v| v.value)
            .map_err(|e| e.to_string())
    });
    let good = a.iter().take_while(|r| r.is_ok()).count();
    let exact: Vec<BigRational> = a[..good]
        .iter()
        .map(|r| BigRational::from_float(*r.as_ref().expect("prefix is ok")).expect("finite coefficient"))
        .collect();
    let b = if good > 0 { b_sequence(&exact, good - 1).map_err(|e| UsageError(e.to_string()))? } else { Vec::new() };
    let mut report = Report::new(vec!["k", "b", "check"]);
    for k in 0..=max {
        if k >= b.len() {
            let msg = a[good].clone().err().unwrap_or_default();
            report.rows.push(vec![Cell::Int(k), Cell::Failed(msg), Cell::Empty]);
            continue;
        }
        // aₖ₊₁ − bₖ − bₖ₋₁ in exact arithmetic
        let prev = if k == 0 { BigRational::zero() } else { b[k - 1].clone() };
        let check = exact[k].clone() - b[k].clone() - prev;
        report.rows.push(vec![Cell::Int(k), rational_cell(&b[k]), rational_cell(&check)]);
    }
    Ok(report)
}

fn rational_cell(x: &BigRational) -> Cell {
    match x.to_f64().map(ScaledReal::from_native) {
        Some(Ok(v)) => Cell::Value(v),
        _ => Cell::Failed(format!("{x} is not representable")),
    }
}
