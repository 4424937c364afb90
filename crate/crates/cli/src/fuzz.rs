//! Seeded randomized verification of every invariant the library promises.
//!
//! Instances are generated from per-group ChaCha streams, so a fixed seed
//! reproduces the exact instance sequence and the machine-readable report is
//! byte-identical across runs. Checks are uniformly of the form `lhs ≤ rhs`
//! with a relative violation `(lhs − rhs)/scale`; identities are recorded as
//! `|difference| ≤ 0`.

use std::f64::consts::TAU;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use projineq_core::dfun::{bound_chain, cs_gap_lower_bound, d_function, d_identity_residual};
use projineq_core::hoelder::{averaged_walker_bound, refined_hoelder, ConjugatePair};
use projineq_core::pcov::{
    classical_buzano, classical_richard, covariance_bound, enhanced_buzano, enhanced_d,
    enhanced_richard, p_covariance, p_covariance_expanded, p_variance, z_covariance,
};
use projineq_core::prob::{
    covariance, l2_inner, sharpe_equalization, walker_bound, walker_chain, walker_radicand,
    DiscreteRandomVariable, ProbabilitySpace,
};
use projineq_core::space::{Projector, Vector};
use projineq_core::{default_sigma_floor, DiscreteRandomVariable64, Projector64, Vector64};

pub const REPORT_VERSION: u32 = 1;
const MAX_DUMPS_PER_PROPERTY: usize = 5;
const HOELDER_GRID: [f64; 5] = [1.2, 1.5, 2.0, 3.0, 5.0];

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: u64,
    pub max_dim: usize,
    pub max_outcomes: usize,
    pub value_range: (f64, f64),
    pub tolerance: f64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 10_000,
            max_dim: 16,
            max_outcomes: 64,
            value_range: (-10.0, 10.0),
            tolerance: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyGroup {
    Hilbert,
    RankOne,
    Discrete,
    Equalization,
    Hoelder,
}

pub const ALL_GROUPS: [FamilyGroup; 5] = [
    FamilyGroup::Hilbert,
    FamilyGroup::RankOne,
    FamilyGroup::Discrete,
    FamilyGroup::Equalization,
    FamilyGroup::Hoelder,
];

/// A failing instance, serialized in the same shape the `bounds` command
/// accepts (Hilbert families) or as raw samples plus weights (discrete
/// families), so it can be replayed.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum InstanceDump {
    Hilbert(HilbertInstance),
    Discrete(DiscreteInstance),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct HilbertInstance {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub span: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DiscreteInstance {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub weights: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ViolationDump {
    pub trial: u64,
    pub check: String,
    pub lhs: f64,
    pub rhs: f64,
    pub violation: f64,
    pub instance: InstanceDump,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PropertyStats {
    pub name: String,
    pub trials: u64,
    pub checks: u64,
    /// Largest relative violation `(lhs − rhs)/scale` observed, clamped at 0.
    pub worst_violation: f64,
    /// Smallest slack `rhs − lhs` observed (how close the bound came to
    /// being tight or broken).
    pub worst_slack: f64,
    /// Checks whose slack was within tolerance of zero.
    pub equality_cases: u64,
    pub violation_count: u64,
    pub violations: Vec<ViolationDump>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FuzzReport {
    pub version: u32,
    pub kind: String,
    pub config: FuzzConfig,
    pub properties: Vec<PropertyStats>,
    pub total_violations: u64,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }

    pub fn property(&self, name: &str) -> Option<&PropertyStats> {
        self.properties.iter().find(|p| p.name == name)
    }
}

struct Tracker {
    name: &'static str,
    tolerance: f64,
    checks: u64,
    worst_violation: f64,
    worst_slack: f64,
    equality_cases: u64,
    violation_count: u64,
    violations: Vec<ViolationDump>,
}

impl Tracker {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            checks: 0,
            worst_violation: 0.0,
            worst_slack: f64::INFINITY,
            equality_cases: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    /// Records one `lhs ≤ rhs` observation at the given natural scale.
    fn check(
        &mut self,
        trial: u64,
        label: &str,
        lhs: f64,
        rhs: f64,
        scale: f64,
        instance: &InstanceDump,
    ) {
        self.checks += 1;
        let scale = scale.abs().max(f64::MIN_POSITIVE);
        let slack = rhs - lhs;
        if slack < self.worst_slack {
            self.worst_slack = slack;
        }
        let violation = ((lhs - rhs) / scale).max(0.0);
        if violation > self.worst_violation {
            self.worst_violation = violation;
        }
        if slack.abs() <= self.tolerance * scale {
            self.equality_cases += 1;
        }
        if violation > self.tolerance {
            self.violation_count += 1;
            if self.violations.len() < MAX_DUMPS_PER_PROPERTY {
                self.violations.push(ViolationDump {
                    trial,
                    check: label.to_string(),
                    lhs,
                    rhs,
                    violation,
                    instance: instance.clone(),
                });
            }
        }
    }

    /// Identity observation `value ≈ 0`, recorded as `|value| ≤ 0`.
    fn check_zero(
        &mut self,
        trial: u64,
        label: &str,
        value: f64,
        scale: f64,
        instance: &InstanceDump,
    ) {
        self.check(trial, label, value.abs(), 0.0, scale, instance);
    }

    fn finish(self, trials: u64) -> PropertyStats {
        PropertyStats {
            name: self.name.to_string(),
            trials,
            checks: self.checks,
            worst_violation: self.worst_violation,
            worst_slack: if self.checks == 0 { 0.0 } else { self.worst_slack },
            equality_cases: self.equality_cases,
            violation_count: self.violation_count,
            violations: self.violations,
        }
    }
}

struct Gen {
    rng: ChaCha12Rng,
    lo: f64,
    hi: f64,
}

impl Gen {
    fn new(config: &FuzzConfig, stream: u64) -> Self {
        let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
        rng.set_stream(stream);
        Self {
            rng,
            lo: config.value_range.0,
            hi: config.value_range.1,
        }
    }

    fn uniform(&mut self) -> f64 {
        self.rng.random_range(self.lo..self.hi)
    }

    fn gaussian(&mut self) -> f64 {
        // Box-Muller on the raw uniform stream keeps generation independent
        // of distribution-crate internals.
        let u1: f64 = self.rng.random::<f64>().max(1e-16);
        let u2: f64 = self.rng.random();
        (-2.0 * u1.ln()).sqrt() * (TAU * u2).cos()
    }

    fn vector(&mut self, dim: usize) -> Vector64 {
        Vector::new((0..dim).map(|_| self.uniform()).collect()).expect("finite coords")
    }

    fn gaussian_vector(&mut self, dim: usize) -> Vector64 {
        Vector::new((0..dim).map(|_| self.gaussian()).collect()).expect("finite coords")
    }

    /// Random subspace: orthonormalized standard-Gaussian spanning set.
    fn projector(&mut self, dim: usize, rank: usize) -> (Projector64, Vec<Vector64>) {
        let span: Vec<Vector64> = (0..rank).map(|_| self.gaussian_vector(dim)).collect();
        let p = if span.is_empty() {
            Projector::zero(dim).expect("dim >= 1")
        } else {
            Projector::from_spanning_set(&span).expect("valid spanning set")
        };
        (p, span)
    }

    /// Full-support weights from normalized exponentials.
    fn weights(&mut self, outcomes: usize) -> Vec<f64> {
        let raw: Vec<f64> = (0..outcomes)
            .map(|_| -self.rng.random::<f64>().max(1e-300).ln())
            .collect();
        let total: f64 = raw.iter().sum();
        raw.into_iter().map(|w| w / total).collect()
    }

    fn variable_pair(
        &mut self,
        max_outcomes: usize,
    ) -> (DiscreteRandomVariable64, DiscreteRandomVariable64) {
        let outcomes = self.rng.random_range(1..=max_outcomes);
        let space = Arc::new(ProbabilitySpace::new(self.weights(outcomes)).expect("valid weights"));
        let x = (0..outcomes).map(|_| self.uniform()).collect();
        let y = (0..outcomes).map(|_| self.uniform()).collect();
        (
            DiscreteRandomVariable::new(Arc::clone(&space), x).expect("finite values"),
            DiscreteRandomVariable::new(space, y).expect("finite values"),
        )
    }
}

fn hilbert_dump(p: &Projector64, x: &Vector64, y: &Vector64) -> InstanceDump {
    InstanceDump::Hilbert(HilbertInstance {
        x: x.coords().to_vec(),
        y: y.coords().to_vec(),
        span: p.basis().iter().map(|b| b.coords().to_vec()).collect(),
    })
}

fn discrete_dump(
    x: &DiscreteRandomVariable64,
    y: &DiscreteRandomVariable64,
    p: Option<f64>,
) -> InstanceDump {
    InstanceDump::Discrete(DiscreteInstance {
        x: x.values().to_vec(),
        y: y.values().to_vec(),
        weights: x.space().weights().to_vec(),
        p,
    })
}

/// Projection through an explicitly materialized matrix; the independent
/// arithmetic route used by the decoupling-function oracle check.
#[allow(clippy::needless_range_loop)]
fn matrix_decoupling(p: &Projector64, x: &Vector64) -> (f64, f64) {
    let n = p.ambient_dim();
    let mut matrix = vec![0.0f64; n * n];
    for b in p.basis() {
        for i in 0..n {
            for j in 0..n {
                matrix[i * n + j] += b.coords()[i] * b.coords()[j];
            }
        }
    }
    let mut projected = vec![0.0f64; n];
    for i in 0..n {
        let mut acc = 0.0;
        for j in 0..n {
            acc += matrix[i * n + j] * x.coords()[j];
        }
        projected[i] = acc;
    }
    let mut p_sq = 0.0;
    let mut q_sq = 0.0;
    for i in 0..n {
        p_sq += projected[i] * projected[i];
        let r = x.coords()[i] - projected[i];
        q_sq += r * r;
    }
    (p_sq.sqrt(), q_sq.sqrt())
}

pub fn run(config: &FuzzConfig) -> FuzzReport {
    run_groups(config, &ALL_GROUPS)
}

pub fn run_groups(config: &FuzzConfig, groups: &[FamilyGroup]) -> FuzzReport {
    let mut properties = Vec::new();
    if config.trials > 0 {
        for group in groups {
            let stats = match group {
                FamilyGroup::Hilbert => hilbert_group(config),
                FamilyGroup::RankOne => rank_one_group(config),
                FamilyGroup::Discrete => discrete_group(config),
                FamilyGroup::Equalization => equalization_group(config),
                FamilyGroup::Hoelder => hoelder_group(config),
            };
            properties.extend(stats);
        }
    }
    let total_violations = properties.iter().map(|p| p.violation_count).sum();
    FuzzReport {
        version: REPORT_VERSION,
        kind: "fuzz".to_string(),
        config: config.clone(),
        properties,
        total_violations,
    }
}

fn hilbert_group(config: &FuzzConfig) -> Vec<PropertyStats> {
    let tol = config.tolerance;
    let mut pythagoras = Tracker::new("space/pythagoras", tol);
    let mut idempotence = Tracker::new("space/idempotence", tol);
    let mut self_adjoint = Tracker::new("space/self_adjoint", tol);
    let mut orthogonality = Tracker::new("space/orthogonality", tol);
    let mut span_order = Tracker::new("space/span_order", tol);
    let mut d_self = Tracker::new("dfun/self_value", tol);
    let mut d_complement = Tracker::new("dfun/complement_symmetry", tol);
    let mut d_homogeneity = Tracker::new("dfun/homogeneity", tol);
    let mut d_subadditivity = Tracker::new("dfun/subadditivity", tol);
    let mut d_projected = Tracker::new("dfun/projected_arguments", tol);
    let mut d_reflection = Tracker::new("dfun/reflection", tol);
    let mut d_split = Tracker::new("dfun/split_vanishes", tol);
    let mut cs_chain = Tracker::new("dfun/cs_chain", tol);
    let mut identity = Tracker::new("dfun/identity_residual", tol);
    let mut gap_bound = Tracker::new("dfun/gap_bound", tol);
    let mut oracle = Tracker::new("dfun/oracle_equivalence", tol);
    let mut dual_form = Tracker::new("pcov/dual_form", tol);
    let mut bilinearity = Tracker::new("pcov/symmetry_bilinearity", tol);
    let mut variance = Tracker::new("pcov/variance_nonnegative", tol);
    let mut split_chain = Tracker::new("pcov/split_chain", tol);
    let mut witnesses = Tracker::new("pcov/witnesses", tol);

    let mut gen = Gen::new(config, 1);
    for trial in 0..config.trials {
        let dim = gen.rng.random_range(1..=config.max_dim);
        let rank = gen.rng.random_range(0..=dim);
        let (p, span) = gen.projector(dim, rank);
        let mut x = gen.vector(dim);
        let mut y = gen.vector(dim);
        let x2 = gen.vector(dim);
        // structured cases keep equality branches in the stream
        match trial % 8 {
            3 => y = x.scale(gen.uniform() / 3.0),
            5 => x = Vector::zeros(dim).expect("dim >= 1"),
            7 => y = p.complement_project(&y).expect("dims agree"),
            _ => {}
        }
        let dump = hilbert_dump(&p, &x, &y);

        let nx = x.norm();
        let ny = y.norm();
        let scale = nx * ny;
        let scale_sq = x.norm_squared() * y.norm_squared();

        // space invariants
        let dv_x = p.decoupling_vector(&x).expect("dims agree");
        pythagoras.check_zero(
            trial,
            "p^2 + q^2 = |x|^2",
            dv_x.norm_squared() - x.norm_squared(),
            x.norm_squared(),
            &dump,
        );
        let px = p.project(&x).expect("dims agree");
        let py = p.project(&y).expect("dims agree");
        let ppx = p.project(&px).expect("dims agree");
        idempotence.check_zero(
            trial,
            "P(Px) = Px",
            ppx.sub(&px).expect("dims agree").norm(),
            nx,
            &dump,
        );
        self_adjoint.check_zero(
            trial,
            "<Px,y> = <x,Py>",
            px.inner(&y).expect("dims agree") - x.inner(&py).expect("dims agree"),
            scale,
            &dump,
        );
        let cy = p.complement_project(&y).expect("dims agree");
        orthogonality.check_zero(
            trial,
            "<Px, (I-P)y> = 0",
            px.inner(&cy).expect("dims agree"),
            scale,
            &dump,
        );
        if span.len() > 1 {
            let mut shuffled = span.clone();
            for i in (1..shuffled.len()).rev() {
                let j = gen.rng.random_range(0..=i);
                shuffled.swap(i, j);
            }
            let reordered = Projector::from_spanning_set(&shuffled).expect("valid spanning set");
            let diff = p
                .project(&x)
                .expect("dims agree")
                .sub(&reordered.project(&x).expect("dims agree"))
                .expect("dims agree")
                .norm();
            span_order.check_zero(trial, "span order irrelevant", diff, nx, &dump);
        }

        // decoupling-function invariants
        let d_xy = d_function(&p, &x, &y).expect("dims agree");
        d_self.check_zero(
            trial,
            "D(x,x) = |x|^2",
            d_function(&p, &x, &x).expect("dims agree") - x.norm_squared(),
            x.norm_squared(),
            &dump,
        );
        let complement = p.complement();
        d_complement.check_zero(
            trial,
            "D under P = D under complement",
            d_function(&complement, &x, &y).expect("dims agree") - d_xy,
            scale,
            &dump,
        );
        let lambda = gen.uniform() / 3.0;
        let mu = gen.uniform() / 3.0;
        d_homogeneity.check_zero(
            trial,
            "D(ax, by) = |ab| D(x,y)",
            d_function(&p, &x.scale(lambda), &y.scale(mu)).expect("dims agree")
                - (lambda * mu).abs() * d_xy,
            ((lambda * mu).abs() + 1.0) * scale,
            &dump,
        );
        d_subadditivity.check(
            trial,
            "D(x+x2, y) <= D(x,y) + D(x2,y)",
            d_function(&p, &x.add(&x2).expect("dims agree"), &y).expect("dims agree"),
            d_xy + d_function(&p, &x2, &y).expect("dims agree"),
            (nx + x2.norm()) * ny,
            &dump,
        );
        d_projected.check_zero(
            trial,
            "D(Px, y) = |Px||Py|",
            d_function(&p, &px, &y).expect("dims agree") - px.norm() * py.norm(),
            scale,
            &dump,
        );
        let cx = p.complement_project(&x).expect("dims agree");
        d_projected.check_zero(
            trial,
            "D((I-P)x, y) = |(I-P)x||(I-P)y|",
            d_function(&p, &cx, &y).expect("dims agree") - cx.norm() * cy.norm(),
            scale,
            &dump,
        );
        let reflected = px.sub(&cx).expect("dims agree");
        d_reflection.check_zero(
            trial,
            "D((P - (I-P))x, y) = D(x,y)",
            d_function(&p, &reflected, &y).expect("dims agree") - d_xy,
            scale,
            &dump,
        );
        d_split.check(
            trial,
            "D vanishes on range x complement",
            d_function(&p, &px, &cy).expect("dims agree"),
            0.0,
            scale,
            &dump,
        );
        let chain = bound_chain(&p, &x, &y, tol).expect("dims agree");
        cs_chain.check(trial, "|<x,y>| <= D", chain.lower, chain.middle, chain.upper, &dump);
        cs_chain.check(trial, "D <= |x||y|", chain.middle, chain.upper, chain.upper, &dump);
        identity.check_zero(
            trial,
            "determinant identity",
            d_identity_residual(&p, &x, &y).expect("dims agree"),
            scale_sq,
            &dump,
        );
        let gap = cs_gap_lower_bound(&p, &x, &y).expect("dims agree");
        gap_bound.check(trial, "det^2 <= CS gap", gap.bound, gap.gap, scale_sq, &dump);
        let (op, oq) = matrix_decoupling(&p, &x);
        let (opy, oqy) = matrix_decoupling(&p, &y);
        oracle.check_zero(
            trial,
            "D matches matrix-route recomputation",
            d_xy - (op * opy + oq * oqy),
            scale,
            &dump,
        );

        // projection-covariance invariants
        let cov = p_covariance(&p, &x, &y).expect("dims agree");
        dual_form.check_zero(
            trial,
            "<x-Px,y-Py> = <x,y> - <Px,y>",
            cov - p_covariance_expanded(&p, &x, &y).expect("dims agree"),
            scale,
            &dump,
        );
        bilinearity.check_zero(
            trial,
            "cov(x,y) = cov(y,x)",
            cov - p_covariance(&p, &y, &x).expect("dims agree"),
            scale,
            &dump,
        );
        let a = gen.uniform() / 3.0;
        let b = gen.uniform() / 3.0;
        let combo = x.scale(a).add(&x2.scale(b)).expect("dims agree");
        bilinearity.check_zero(
            trial,
            "cov linear in first slot",
            p_covariance(&p, &combo, &y).expect("dims agree")
                - (a * cov + b * p_covariance(&p, &x2, &y).expect("dims agree")),
            (a.abs() * nx + b.abs() * x2.norm() + nx) * ny,
            &dump,
        );
        variance.check(
            trial,
            "variance >= 0",
            -p_variance(&p, &x).expect("dims agree"),
            0.0,
            x.norm_squared(),
            &dump,
        );
        let ip = x.inner(&y).expect("dims agree").abs();
        let pip = px.inner(&y).expect("dims agree").abs();
        let qq = dv_x.q() * p.decoupling_vector(&y).expect("dims agree").q();
        split_chain.check(trial, "|<x,y>| - |<Px,y>| <= qq", ip - pip, qq, scale, &dump);
        split_chain.check(trial, "|<Px,y>| - |<x,y>| <= qq", pip - ip, qq, scale, &dump);
        for w in [
            covariance_bound(&p, &x, &y, tol).expect("dims agree"),
            enhanced_richard(&p, &x, &y, tol).expect("dims agree"),
            enhanced_buzano(&p, &x, &y, tol).expect("dims agree"),
            enhanced_d(&p, &x, &y, tol).expect("dims agree"),
        ] {
            witnesses.check(trial, w.name.label(), w.lhs, w.rhs, scale, &dump);
        }
        // the enhanced-D rhs is itself dominated by the decoupling bound
        let ed = enhanced_d(&p, &x, &y, tol).expect("dims agree");
        witnesses.check(trial, "eD rhs <= D", ed.rhs, d_xy, scale, &dump);
        witnesses.check(trial, "D <= |x||y|", d_xy, scale, scale, &dump);
    }

    let trials = config.trials;
    vec![
        pythagoras.finish(trials),
        idempotence.finish(trials),
        self_adjoint.finish(trials),
        orthogonality.finish(trials),
        span_order.finish(trials),
        d_self.finish(trials),
        d_complement.finish(trials),
        d_homogeneity.finish(trials),
        d_subadditivity.finish(trials),
        d_projected.finish(trials),
        d_reflection.finish(trials),
        d_split.finish(trials),
        cs_chain.finish(trials),
        identity.finish(trials),
        gap_bound.finish(trials),
        oracle.finish(trials),
        dual_form.finish(trials),
        bilinearity.finish(trials),
        variance.finish(trials),
        split_chain.finish(trials),
        witnesses.finish(trials),
    ]
}

fn rank_one_group(config: &FuzzConfig) -> Vec<PropertyStats> {
    let tol = config.tolerance;
    let mut dominance = Tracker::new("pcov/rank_one_dominance", tol);
    let mut rank_one_witnesses = Tracker::new("pcov/rank_one_witnesses", tol);
    let mut zcov_agreement = Tracker::new("pcov/z_cov_agreement", tol);

    let mut gen = Gen::new(config, 2);
    for trial in 0..config.trials {
        let dim = gen.rng.random_range(1..=config.max_dim);
        let mut z = gen.gaussian_vector(dim);
        while z.norm() <= 1e-9 {
            z = gen.gaussian_vector(dim);
        }
        let x = gen.vector(dim);
        let y = gen.vector(dim);
        let pz = Projector::rank_one(&z).expect("nonzero direction");
        let dump = hilbert_dump(&pz, &x, &y);
        let scale = x.norm() * y.norm();

        let b = classical_buzano(&z, &x, &y, tol).expect("dims agree");
        let r = classical_richard(&z, &x, &y, tol).expect("dims agree");
        rank_one_witnesses.check(trial, "B", b.witness.lhs, b.witness.rhs, scale, &dump);
        rank_one_witnesses.check(trial, "R", r.witness.lhs, r.witness.rhs, scale, &dump);
        for w in [
            enhanced_richard(&pz, &x, &y, tol).expect("dims agree"),
            enhanced_buzano(&pz, &x, &y, tol).expect("dims agree"),
            enhanced_d(&pz, &x, &y, tol).expect("dims agree"),
        ] {
            rank_one_witnesses.check(trial, w.name.label(), w.lhs, w.rhs, scale, &dump);
        }
        dominance.check(trial, "eB rhs <= B rhs", b.enhanced_rhs, b.witness.rhs, scale, &dump);
        dominance.check(trial, "eR rhs <= R rhs", r.enhanced_rhs, r.witness.rhs, scale, &dump);
        zcov_agreement.check_zero(
            trial,
            "z-covariance = rank-one covariance",
            z_covariance(&z, &x, &y).expect("dims agree")
                - p_covariance(&pz, &x, &y).expect("dims agree"),
            scale,
            &dump,
        );
    }

    vec![
        dominance.finish(config.trials),
        rank_one_witnesses.finish(config.trials),
        zcov_agreement.finish(config.trials),
    ]
}

fn discrete_group(config: &FuzzConfig) -> Vec<PropertyStats> {
    let tol = config.tolerance;
    let mut chain_tracker = Tracker::new("prob/walker_chain", tol);
    let mut radicand = Tracker::new("prob/walker_radicand", tol);
    let mut symmetry = Tracker::new("prob/walker_symmetry", tol);
    let mut bridge = Tracker::new("prob/bridge", tol);

    let mut gen = Gen::new(config, 3);
    for trial in 0..config.trials {
        let (x, mut y) = gen.variable_pair(config.max_outcomes);
        match trial % 16 {
            7 => {
                y = DiscreteRandomVariable::constant(Arc::clone(x.space()), gen.uniform())
                    .expect("finite value");
            }
            11 => {
                let negated = x.values().iter().map(|v| -v).collect();
                y = DiscreteRandomVariable::new(Arc::clone(x.space()), negated)
                    .expect("finite values");
            }
            3 => {
                let c = gen.uniform() / 3.0;
                let scaled = x.values().iter().map(|v| c * v).collect();
                y = DiscreteRandomVariable::new(Arc::clone(x.space()), scaled)
                    .expect("finite values");
            }
            _ => {}
        }
        let dump = discrete_dump(&x, &y, None);
        let scale = x.l2_norm() * y.l2_norm();

        let chain = walker_chain(&x, &y, tol).expect("shared space");
        chain_tracker.check(trial, "|E(XY)| <= walker", chain.lower, chain.middle, chain.upper, &dump);
        chain_tracker.check(trial, "walker <= |X||Y|", chain.middle, chain.upper, chain.upper, &dump);
        radicand.check(
            trial,
            "radicand >= 0",
            -walker_radicand(&x, &y).expect("shared space"),
            0.0,
            scale * scale,
            &dump,
        );
        let base = walker_bound(&x, &y).expect("shared space");
        symmetry.check_zero(
            trial,
            "walker(X,Y) = walker(Y,X)",
            base - walker_bound(&y, &x).expect("shared space"),
            scale,
            &dump,
        );
        let negated = DiscreteRandomVariable::new(
            Arc::clone(x.space()),
            x.values().iter().map(|v| -v).collect(),
        )
        .expect("finite values");
        symmetry.check_zero(
            trial,
            "walker(-X,Y) = walker(X,Y)",
            base - walker_bound(&negated, &y).expect("shared space"),
            scale,
            &dump,
        );

        // embedding bridge into the Hilbert layer
        let ex = x.euclidean_embedding();
        let ey = y.euclidean_embedding();
        bridge.check_zero(
            trial,
            "E(XY) = <embed X, embed Y>",
            l2_inner(&x, &y).expect("shared space") - ex.inner(&ey).expect("dims agree"),
            scale,
            &dump,
        );
        let one = DiscreteRandomVariable::constant(Arc::clone(x.space()), 1.0)
            .expect("finite value");
        let p1 = Projector::rank_one(&one.euclidean_embedding()).expect("unit direction");
        bridge.check_zero(
            trial,
            "cov(X,Y) = projection covariance of embeddings",
            covariance(&x, &y).expect("shared space")
                - p_covariance(&p1, &ex, &ey).expect("dims agree"),
            scale,
            &dump,
        );
    }

    vec![
        chain_tracker.finish(config.trials),
        radicand.finish(config.trials),
        symmetry.finish(config.trials),
        bridge.finish(config.trials),
    ]
}

fn equalization_group(config: &FuzzConfig) -> Vec<PropertyStats> {
    let tol = config.tolerance;
    let sigma_floor: f64 = default_sigma_floor();
    let mut equalization = Tracker::new("prob/equalization", tol);

    let mut gen = Gen::new(config, 4);
    for trial in 0..config.trials {
        let (x, template) = gen.variable_pair(config.max_outcomes);
        // engineer Y so that |EX|σ_Y = |EY|σ_X holds analytically
        let y = if trial % 2 == 0 {
            let magnitude = 0.2 + gen.rng.random::<f64>() * 2.8;
            let c = if trial % 4 == 0 { magnitude } else { -magnitude };
            let scaled = x.values().iter().map(|v| c * v).collect();
            DiscreteRandomVariable::new(Arc::clone(x.space()), scaled).expect("finite values")
        } else {
            // affine image of an unrelated variable with matched mean/deviation ratio
            let t = 0.5 + gen.rng.random::<f64>();
            let sigma_z = template.std();
            if sigma_z > 1e-9 {
                let b = t * x.std() / sigma_z;
                let a = t * x.expectation() - b * template.expectation();
                let shifted = template.values().iter().map(|v| a + b * v).collect();
                DiscreteRandomVariable::new(Arc::clone(x.space()), shifted)
                    .expect("finite values")
            } else {
                let scaled = x.values().iter().map(|v| t * v).collect();
                DiscreteRandomVariable::new(Arc::clone(x.space()), scaled).expect("finite values")
            }
        };
        let dump = discrete_dump(&x, &y, None);
        let scale = x.l2_norm() * y.l2_norm();

        let eq = sharpe_equalization(&x, &y, sigma_floor, tol).expect("shared space");
        equalization.check_zero(trial, "deflation gap vanishes", eq.gap, scale, &dump);
        if eq.equalized {
            let chain = walker_chain(&x, &y, tol).expect("shared space");
            equalization.check_zero(
                trial,
                "equalized implies zero improvement",
                chain.upper - chain.middle,
                chain.upper,
                &dump,
            );
        }
        if eq.sr_squared_gap.is_some() {
            // SR(X)^2 = SR(Y)^2 is checked in the cross-multiplied form
            // (EX σ_Y)^2 = (EY σ_X)^2; dividing by tiny variances first would
            // amplify rounding beyond any fixed relative tolerance
            let cross = (x.expectation() * y.std()).powi(2)
                - (y.expectation() * x.std()).powi(2);
            equalization.check_zero(
                trial,
                "squared Sharpe ratios agree",
                cross,
                scale * scale,
                &dump,
            );
        }
    }

    vec![equalization.finish(config.trials)]
}

fn hoelder_group(config: &FuzzConfig) -> Vec<PropertyStats> {
    let tol = config.tolerance;
    let mut chain_tracker = Tracker::new("hoelder/refined_chain", tol);
    let mut young = Tracker::new("hoelder/young_route", tol);
    let mut oracle = Tracker::new("hoelder/oracle", tol);
    let mut radicand = Tracker::new("hoelder/radicand", tol);
    let mut half = Tracker::new("hoelder/half_improvement", tol);
    let mut p2_consistency = Tracker::new("hoelder/p2_consistency", tol);

    let mut gen = Gen::new(config, 5);
    for trial in 0..config.trials {
        let (mut x, y) = gen.variable_pair(config.max_outcomes);
        if trial % 32 == 13 {
            x = DiscreteRandomVariable::constant(Arc::clone(y.space()), 0.0)
                .expect("finite value");
        }
        let p = HOELDER_GRID[(trial % HOELDER_GRID.len() as u64) as usize];
        let pair = ConjugatePair::from_p(p).expect("p > 1");
        let dump = discrete_dump(&x, &y, Some(p));

        let report = refined_hoelder(&x, &y, &pair, tol).expect("shared space");
        let scale = report.classical;
        chain_tracker.check(trial, "E|XY| <= refined", report.lhs, report.refined, scale, &dump);
        chain_tracker.check(trial, "refined <= classical", report.refined, report.classical, scale, &dump);
        young.check(trial, "E|XY| <= young", report.lhs, report.young_term, scale, &dump);
        young.check(trial, "young <= refined", report.young_term, report.refined, scale, &dump);

        // naive weighted-sum recomputation of every expectation in the bound
        let o = naive_hoelder(
            x.space().weights(),
            x.values(),
            y.values(),
            pair.p(),
            pair.q(),
        );
        oracle.check_zero(trial, "E|XY| vs oracle", report.lhs - o.lhs, o.scale(), &dump);
        oracle.check_zero(
            trial,
            "classical vs oracle",
            report.classical - o.classical,
            o.scale(),
            &dump,
        );
        oracle.check_zero(
            trial,
            "refined vs oracle",
            report.refined - o.refined,
            o.scale(),
            &dump,
        );
        radicand.check(trial, "radicand >= 0", -o.radicand, 0.0, 1.0, &dump);
        radicand.check(trial, "radicand <= 1", o.radicand, 1.0, 1.0, &dump);

        let avg = averaged_walker_bound(&x, &y).expect("shared space");
        let classical2 = x.abs().l2_norm() * y.abs().l2_norm();
        half.check(trial, "walker <= averaged", avg.walker, avg.bound, classical2, &dump);
        half.check(trial, "averaged <= classical", avg.bound, classical2, classical2, &dump);
        let pair2 = ConjugatePair::new(2.0, 2.0).expect("conjugate");
        let report2 = refined_hoelder(&x, &y, &pair2, tol).expect("shared space");
        p2_consistency.check_zero(
            trial,
            "p = 2 refined equals averaged walker",
            report2.refined - avg.bound,
            report2.classical,
            &dump,
        );
    }

    vec![
        chain_tracker.finish(config.trials),
        young.finish(config.trials),
        oracle.finish(config.trials),
        radicand.finish(config.trials),
        half.finish(config.trials),
        p2_consistency.finish(config.trials),
    ]
}

struct NaiveHoelder {
    lhs: f64,
    classical: f64,
    refined: f64,
    radicand: f64,
}

impl NaiveHoelder {
    fn scale(&self) -> f64 {
        self.classical.max(1.0)
    }
}

/// Brute-force evaluation of the refined bound, every expectation computed by
/// an explicit index loop straight from the definitions.
fn naive_hoelder(w: &[f64], xv: &[f64], yv: &[f64], p: f64, q: f64) -> NaiveHoelder {
    let m = w.len();
    let mut e_abs_xy = 0.0;
    let mut e_abs_x_p = 0.0;
    let mut e_abs_y_q = 0.0;
    let mut e_u = 0.0;
    let mut e_v = 0.0;
    let mut e_u2 = 0.0;
    let mut e_v2 = 0.0;
    for i in 0..m {
        let u = xv[i].abs().powf(p / 2.0);
        let v = yv[i].abs().powf(q / 2.0);
        e_abs_xy += w[i] * (xv[i] * yv[i]).abs();
        e_abs_x_p += w[i] * xv[i].abs().powf(p);
        e_abs_y_q += w[i] * yv[i].abs().powf(q);
        e_u += w[i] * u;
        e_v += w[i] * v;
        e_u2 += w[i] * u * u;
        e_v2 += w[i] * v * v;
    }
    let norm_p = e_abs_x_p.powf(1.0 / p);
    let norm_q = e_abs_y_q.powf(1.0 / q);
    let classical = norm_p * norm_q;
    if classical == 0.0 {
        return NaiveHoelder {
            lhs: 0.0,
            classical: 0.0,
            refined: 0.0,
            radicand: 1.0,
        };
    }
    let sigma_u = (e_u2 - e_u * e_u).max(0.0).sqrt();
    let sigma_v = (e_v2 - e_v * e_v).max(0.0).sqrt();
    let denom = e_u2.sqrt() * e_v2.sqrt();
    let ratio = (sigma_v * e_u - sigma_u * e_v) / denom;
    let radicand = 1.0 - ratio * ratio;
    let refined = classical
        * (1.0 / (p * p) + 1.0 / (q * q) + (2.0 / (p * q)) * radicand.max(0.0).sqrt());
    NaiveHoelder {
        lhs: e_abs_xy,
        classical,
        refined,
        radicand,
    }
}
