//! Implementations of the four subcommands. Each returns the machine-readable
//! report it printed, so tests can inspect what the binary produced.

use std::path::Path;

use projineq_core::dfun::{bound_chain, cs_gap_lower_bound, d_function, d_identity_residual};
use projineq_core::hoelder::{averaged_walker_bound, refined_hoelder, ConjugatePair};
use projineq_core::pcov::{
    classical_buzano, classical_richard, enhanced_buzano, enhanced_d, enhanced_richard,
};
use projineq_core::default_sigma_floor;
use projineq_core::prob::{l2_inner, sharpe_equalization, walker_chain};

use crate::fuzz::{self, FuzzConfig, FuzzReport};
use crate::input::{read_bounds_input, read_csv_variables, BoundsInstance};
use crate::report::{
    write_json, AveragedWalkerJson, BoundsReport, ColumnJson, GapJson, HoelderCliReport,
    WalkerPairJson, WalkerReport, WitnessJson, REPORT_VERSION,
};
use crate::CliError;

fn fmt_opt(value: Option<f64>) -> String {
    value.map_or_else(|| "undefined".to_string(), |v| v.to_string())
}

fn status(ok: bool) -> &'static str {
    if ok {
        "[ok]"
    } else {
        "[VIOLATED]"
    }
}

pub fn cmd_bounds(
    input_path: &Path,
    json_path: Option<&Path>,
    tolerance: f64,
) -> Result<BoundsReport, CliError> {
    let input = read_bounds_input(input_path)?;
    let BoundsInstance {
        x,
        y,
        projector,
        direction,
    } = input.build()?;

    let d = d_function(&projector, &x, &y)?;
    let chain = bound_chain(&projector, &x, &y, tolerance)?;
    let residual = d_identity_residual(&projector, &x, &y)?;
    let gap = cs_gap_lower_bound(&projector, &x, &y)?;
    let gap_scale = x.norm_squared() * y.norm_squared();

    let mut witnesses: Vec<WitnessJson> = vec![
        enhanced_richard(&projector, &x, &y, tolerance)?.into(),
        enhanced_buzano(&projector, &x, &y, tolerance)?.into(),
        enhanced_d(&projector, &x, &y, tolerance)?.into(),
    ];
    // the classical Buzano/Richard forms need a direction; they apply exactly
    // when the projector is one-dimensional
    if let Some(z) = &direction {
        witnesses.push(classical_buzano(z, &x, &y, tolerance)?.witness.into());
        witnesses.push(classical_richard(z, &x, &y, tolerance)?.witness.into());
    }

    let report = BoundsReport {
        version: REPORT_VERSION,
        kind: "bounds".to_string(),
        tolerance,
        ambient_dim: projector.ambient_dim(),
        projector_rank: projector.rank(),
        d_function: d,
        chain: chain.into(),
        identity_residual: residual,
        gap: GapJson {
            gap: gap.gap,
            bound: gap.bound,
            holds: gap.gap >= gap.bound - tolerance * gap_scale.max(1.0),
        },
        witnesses,
    };

    println!(
        "projector: ambient dimension {}, rank {}",
        report.ambient_dim, report.projector_rank
    );
    println!("D(x,y|P) = {}", report.d_function);
    println!(
        "chain |<x,y>| <= D <= |x||y|: {} <= {} <= {}  {}",
        report.chain.lower,
        report.chain.middle,
        report.chain.upper,
        status(report.chain.holds)
    );
    println!("determinant identity residual = {}", report.identity_residual);
    println!(
        "CS gap {} >= det^2 bound {}  {}",
        report.gap.gap,
        report.gap.bound,
        status(report.gap.holds)
    );
    println!("witnesses:");
    for w in &report.witnesses {
        println!(
            "  {:>2}: lhs = {} rhs = {} slack = {}  {}",
            w.name,
            w.lhs,
            w.rhs,
            w.slack,
            status(w.holds)
        );
    }
    if direction.is_none() {
        println!("  (B and R need a one-dimensional projector; skipped at rank > 1)");
    }

    write_json(&report, json_path)?;
    Ok(report)
}

pub fn cmd_walker(
    csv_path: &Path,
    columns: &[String],
    weight_column: Option<&str>,
    json_path: Option<&Path>,
    tolerance: f64,
) -> Result<WalkerReport, CliError> {
    if columns.len() != 2 {
        return Err(CliError::Input(format!(
            "walker needs exactly two columns, got {}",
            columns.len()
        )));
    }
    let vars = read_csv_variables(csv_path, columns, weight_column, tolerance)?;
    let sigma_floor: f64 = default_sigma_floor();

    let column_stats: Vec<ColumnJson> = vars
        .iter()
        .map(|(name, v)| ColumnJson::new(name, v.l2_norm(), v.sharpe_ratio(sigma_floor)))
        .collect();

    let (x_name, x) = &vars[0];
    let (y_name, y) = &vars[1];
    let chain = walker_chain(x, y, tolerance)?;
    let equalization = sharpe_equalization(x, y, sigma_floor, tolerance)?;
    let report = WalkerReport {
        version: REPORT_VERSION,
        kind: "walker".to_string(),
        tolerance,
        outcomes: x.space().outcomes(),
        weighting: weight_column.unwrap_or("uniform").to_string(),
        columns: column_stats,
        pair: WalkerPairJson {
            x_column: x_name.clone(),
            y_column: y_name.clone(),
            e_xy: l2_inner(x, y)?,
            chain: chain.into(),
            cs_bound: chain.upper,
            improvement: chain.upper - chain.middle,
            equalization: equalization.into(),
        },
    };

    println!(
        "{} outcomes, {} weighting",
        report.outcomes, report.weighting
    );
    for c in &report.columns {
        println!(
            "column {}: mean = {} std = {} l2 = {} sharpe = {}",
            c.name,
            c.mean,
            c.std,
            c.l2_norm,
            fmt_opt(c.sharpe)
        );
    }
    println!("pair ({}, {}):", report.pair.x_column, report.pair.y_column);
    println!("  E(XY) = {}", report.pair.e_xy);
    println!(
        "  chain |E(XY)| <= walker <= |X||Y|: {} <= {} <= {}  {}",
        report.pair.chain.lower,
        report.pair.chain.middle,
        report.pair.chain.upper,
        status(report.pair.chain.holds)
    );
    println!("  improvement over Cauchy-Schwarz = {}", report.pair.improvement);
    println!(
        "  equalization gap = {} ({}equalized), SR^2 gap = {}",
        report.pair.equalization.gap,
        if report.pair.equalization.equalized {
            ""
        } else {
            "not "
        },
        fmt_opt(report.pair.equalization.sr_squared_gap)
    );

    write_json(&report, json_path)?;
    Ok(report)
}

pub fn cmd_hoelder(
    csv_path: &Path,
    columns: &[String],
    p: f64,
    json_path: Option<&Path>,
    tolerance: f64,
) -> Result<HoelderCliReport, CliError> {
    if columns.len() != 2 {
        return Err(CliError::Input(format!(
            "hoelder needs exactly two columns, got {}",
            columns.len()
        )));
    }
    let pair = ConjugatePair::from_p(p).map_err(CliError::from)?;
    let vars = read_csv_variables(csv_path, columns, None, tolerance)?;
    let (x_name, x) = &vars[0];
    let (y_name, y) = &vars[1];

    let hoelder = refined_hoelder(x, y, &pair, tolerance)?;
    let p2_comparison = if (p - 2.0).abs() < 1e-12 {
        let avg = averaged_walker_bound(x, y)?;
        Some(AveragedWalkerJson {
            averaged_bound: avg.bound,
            walker_bound: avg.walker,
        })
    } else {
        None
    };
    let report = HoelderCliReport {
        version: REPORT_VERSION,
        kind: "hoelder".to_string(),
        tolerance,
        p: pair.p(),
        q: pair.q(),
        x_column: x_name.clone(),
        y_column: y_name.clone(),
        outcomes: x.space().outcomes(),
        lhs: hoelder.lhs,
        refined: hoelder.refined,
        classical: hoelder.classical,
        young_term: hoelder.young_term,
        improvement: hoelder.improvement,
        holds: hoelder.holds,
        p2_comparison,
    };

    println!(
        "p = {}, q = {} on columns ({}, {}), {} outcomes",
        report.p, report.q, report.x_column, report.y_column, report.outcomes
    );
    println!("E|XY| = {}", report.lhs);
    println!("refined bound = {}", report.refined);
    println!("classical bound = {}", report.classical);
    println!("young route = {}", report.young_term);
    println!("improvement = {}  {}", report.improvement, status(report.holds));
    if let Some(cmp) = &report.p2_comparison {
        println!(
            "p = 2 comparison: averaged bound = {}, walker bound = {}",
            cmp.averaged_bound, cmp.walker_bound
        );
    }

    write_json(&report, json_path)?;
    Ok(report)
}

pub fn cmd_fuzz(config: &FuzzConfig, json_path: Option<&Path>) -> Result<FuzzReport, CliError> {
    let report = fuzz::run(config);
    println!(
        "fuzz: seed = {}, trials = {} per family, tolerance = {:e}",
        config.seed, config.trials, config.tolerance
    );
    for stats in &report.properties {
        println!(
            "  {:<28} trials {:>8}  worst violation {:>12.3e}  equal-within-eps {:>8}  {}",
            stats.name,
            stats.trials,
            stats.worst_violation,
            stats.equality_cases,
            status(stats.violation_count == 0)
        );
    }
    println!(
        "total violations: {} -> {}",
        report.total_violations,
        if report.passed() { "PASS" } else { "FAIL" }
    );
    write_json(&report, json_path)?;
    Ok(report)
}
