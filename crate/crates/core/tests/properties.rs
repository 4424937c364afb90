//! Property tests for the invariants every module promises, driven by random
//! projectors, vectors and discrete spaces.

use std::sync::Arc;

use proptest::prelude::*;

use projineq_core::dfun::{bound_chain, cs_gap_lower_bound, d_function, d_identity_residual};
use projineq_core::hoelder::{
    averaged_walker_bound, lp_norm, refined_hoelder, young_intermediate_bound, ConjugatePair,
};
use projineq_core::pcov::{
    classical_buzano, classical_richard, covariance_bound, enhanced_buzano, enhanced_d,
    enhanced_richard, p_covariance, p_covariance_expanded, p_variance, z_covariance,
};
use projineq_core::prob::{
    covariance, l2_inner, sharpe_equalization, walker_bound, walker_chain,
    DiscreteRandomVariable, ProbabilitySpace,
};
use projineq_core::space::{Projector, Vector};

const REL_TOL: f64 = 1e-9;

fn coord() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn vector(dim: usize) -> impl Strategy<Value = Vector<f64>> {
    prop::collection::vec(coord(), dim).prop_map(|c| Vector::new(c).unwrap())
}

fn projector(dim: usize) -> impl Strategy<Value = Projector<f64>> {
    (0..=dim).prop_flat_map(move |rank| {
        prop::collection::vec(vector(dim), rank).prop_map(move |span| {
            if span.is_empty() {
                Projector::zero(dim).unwrap()
            } else {
                Projector::from_spanning_set(&span).unwrap()
            }
        })
    })
}

fn hilbert_instance() -> impl Strategy<Value = (Projector<f64>, Vector<f64>, Vector<f64>)> {
    (1usize..=8).prop_flat_map(|dim| (projector(dim), vector(dim), vector(dim)))
}

fn variable_pair(
) -> impl Strategy<Value = (DiscreteRandomVariable<f64>, DiscreteRandomVariable<f64>)> {
    (1usize..=16).prop_flat_map(|m| {
        (
            prop::collection::vec(0.01..1.0f64, m),
            prop::collection::vec(coord(), m),
            prop::collection::vec(coord(), m),
        )
            .prop_map(|(raw, xs, ys)| {
                let total: f64 = raw.iter().sum();
                let weights = raw.into_iter().map(|w| w / total).collect();
                let space = Arc::new(ProbabilitySpace::new(weights).unwrap());
                (
                    DiscreteRandomVariable::new(Arc::clone(&space), xs).unwrap(),
                    DiscreteRandomVariable::new(space, ys).unwrap(),
                )
            })
    })
}

/// Projection via an explicitly materialized matrix `M = Σ bbᵀ`; a separate
/// arithmetic route used as the oracle for the library's basis-wise path.
#[allow(clippy::needless_range_loop)]
fn matrix_project(p: &Projector<f64>, x: &Vector<f64>) -> Vector<f64> {
    let n = p.ambient_dim();
    let mut matrix = vec![vec![0.0f64; n]; n];
    for b in p.basis() {
        for i in 0..n {
            for j in 0..n {
                matrix[i][j] += b.coords()[i] * b.coords()[j];
            }
        }
    }
    let coords = matrix
        .iter()
        .map(|row| row.iter().zip(x.coords()).map(|(m, c)| m * c).sum())
        .collect();
    Vector::new(coords).unwrap()
}

fn scale_of(x: &Vector<f64>, y: &Vector<f64>) -> f64 {
    (x.norm() * y.norm()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    // --- space ---

    #[test]
    fn pythagoras((p, x, _) in hilbert_instance()) {
        let dv = p.decoupling_vector(&x).unwrap();
        let lhs = dv.p().powi(2) + dv.q().powi(2);
        let rhs = x.norm_squared();
        prop_assert!((lhs - rhs).abs() <= REL_TOL * rhs.max(1.0));
    }

    #[test]
    fn projection_idempotent((p, x, _) in hilbert_instance()) {
        let px = p.project(&x).unwrap();
        let ppx = p.project(&px).unwrap();
        prop_assert!(ppx.sub(&px).unwrap().norm() <= REL_TOL * x.norm().max(1.0));
    }

    #[test]
    fn projection_self_adjoint((p, x, y) in hilbert_instance()) {
        let lhs = p.project(&x).unwrap().inner(&y).unwrap();
        let rhs = x.inner(&p.project(&y).unwrap()).unwrap();
        prop_assert!((lhs - rhs).abs() <= REL_TOL * scale_of(&x, &y));
    }

    #[test]
    fn range_and_complement_orthogonal((p, x, y) in hilbert_instance()) {
        let ip = p.project(&x).unwrap()
            .inner(&p.complement_project(&y).unwrap())
            .unwrap();
        prop_assert!(ip.abs() <= REL_TOL * scale_of(&x, &y));
    }

    #[test]
    fn spanning_set_order_insensitive(
        (dim, probe, span) in (2usize..=6).prop_flat_map(|dim| {
            (Just(dim), vector(dim), prop::collection::vec(vector(dim), 1..=4))
        }),
        seed in 0u64..1000,
    ) {
        let forward = Projector::from_spanning_set(&span).unwrap();
        let mut shuffled = span.clone();
        // cheap deterministic shuffle keyed by the seed
        for i in (1..shuffled.len()).rev() {
            let j = ((seed.wrapping_mul(6364136223846793005).wrapping_add(i as u64)) % (i as u64 + 1)) as usize;
            shuffled.swap(i, j);
        }
        let backward = Projector::from_spanning_set(&shuffled).unwrap();
        let diff = forward.project(&probe).unwrap()
            .sub(&backward.project(&probe).unwrap())
            .unwrap();
        prop_assert!(diff.norm() <= REL_TOL * probe.norm().max(1.0), "dim {}", dim);
    }

    #[test]
    fn projection_matches_matrix_oracle((p, x, _) in hilbert_instance()) {
        let fast = p.project(&x).unwrap();
        let oracle = matrix_project(&p, &x);
        prop_assert!(fast.sub(&oracle).unwrap().norm() <= REL_TOL * x.norm().max(1.0));
    }

    // --- dfun ---

    #[test]
    fn d_of_self_is_norm_squared((p, x, _) in hilbert_instance()) {
        let d = d_function(&p, &x, &x).unwrap();
        prop_assert!((d - x.norm_squared()).abs() <= REL_TOL * x.norm_squared().max(1.0));
    }

    #[test]
    fn d_invariant_under_complement((p, x, y) in hilbert_instance()) {
        let direct = d_function(&p, &x, &y).unwrap();
        let via_complement = d_function(&p.complement(), &x, &y).unwrap();
        prop_assert!((direct - via_complement).abs() <= REL_TOL * scale_of(&x, &y));
    }

    #[test]
    fn d_absolutely_homogeneous(
        (p, x, y) in hilbert_instance(),
        lambda in -4.0..4.0f64,
        mu in -4.0..4.0f64,
    ) {
        let scaled = d_function(&p, &x.scale(lambda), &y.scale(mu)).unwrap();
        let expected = (lambda * mu).abs() * d_function(&p, &x, &y).unwrap();
        prop_assert!((scaled - expected).abs() <= REL_TOL * 16.0 * scale_of(&x, &y));
    }

    #[test]
    fn d_subadditive_in_first_argument(
        (dim, p, x, x2, y) in (1usize..=8).prop_flat_map(|dim| {
            (Just(dim), projector(dim), vector(dim), vector(dim), vector(dim))
        }),
    ) {
        let _ = dim;
        let lhs = d_function(&p, &x.add(&x2).unwrap(), &y).unwrap();
        let rhs = d_function(&p, &x, &y).unwrap() + d_function(&p, &x2, &y).unwrap();
        prop_assert!(lhs <= rhs + REL_TOL * rhs.max(1.0));
    }

    #[test]
    fn d_on_projected_argument_is_norm_product((p, x, y) in hilbert_instance()) {
        let scale = scale_of(&x, &y);
        let px = p.project(&x).unwrap();
        let d = d_function(&p, &px, &y).unwrap();
        let expected = px.norm() * p.project(&y).unwrap().norm();
        prop_assert!((d - expected).abs() <= REL_TOL * scale);

        let cx = p.complement_project(&x).unwrap();
        let dc = d_function(&p, &cx, &y).unwrap();
        let expected_c = cx.norm() * p.complement_project(&y).unwrap().norm();
        prop_assert!((dc - expected_c).abs() <= REL_TOL * scale);
    }

    #[test]
    fn d_invariant_under_reflection((p, x, y) in hilbert_instance()) {
        let reflected = p.project(&x).unwrap()
            .sub(&p.complement_project(&x).unwrap())
            .unwrap();
        let lhs = d_function(&p, &reflected, &y).unwrap();
        let rhs = d_function(&p, &x, &y).unwrap();
        prop_assert!((lhs - rhs).abs() <= REL_TOL * scale_of(&x, &y));
    }

    #[test]
    fn d_vanishes_on_split_pairs((p, x, y) in hilbert_instance()) {
        let in_range = p.project(&x).unwrap();
        let in_complement = p.complement_project(&y).unwrap();
        let d = d_function(&p, &in_range, &in_complement).unwrap();
        prop_assert!(d.abs() <= REL_TOL * scale_of(&x, &y));
    }

    #[test]
    fn cauchy_schwarz_chain_holds((p, x, y) in hilbert_instance()) {
        let chain = bound_chain(&p, &x, &y, REL_TOL).unwrap();
        prop_assert!(chain.holds,
            "chain violated: {} / {} / {}", chain.lower, chain.middle, chain.upper);
    }

    #[test]
    fn determinant_identity_residual_small((p, x, y) in hilbert_instance()) {
        let residual = d_identity_residual(&p, &x, &y).unwrap();
        let scale = (x.norm_squared() * y.norm_squared()).max(1.0);
        prop_assert!(residual.abs() <= REL_TOL * scale);
    }

    #[test]
    fn gap_dominates_det_bound((p, x, y) in hilbert_instance()) {
        let g = cs_gap_lower_bound(&p, &x, &y).unwrap();
        let scale = (x.norm_squared() * y.norm_squared()).max(1.0);
        prop_assert!(g.gap >= g.bound - REL_TOL * scale);
    }

    // --- pcov ---

    #[test]
    fn p_covariance_forms_agree((p, x, y) in hilbert_instance()) {
        let direct = p_covariance(&p, &x, &y).unwrap();
        let expanded = p_covariance_expanded(&p, &x, &y).unwrap();
        prop_assert!((direct - expanded).abs() <= REL_TOL * scale_of(&x, &y));
    }

    #[test]
    fn p_covariance_symmetric_and_bilinear(
        (dim, p, x, x2, y) in (1usize..=8).prop_flat_map(|dim| {
            (Just(dim), projector(dim), vector(dim), vector(dim), vector(dim))
        }),
        a in -3.0..3.0f64,
        b in -3.0..3.0f64,
    ) {
        let _ = dim;
        let scale = 10.0 * scale_of(&x, &y).max(scale_of(&x2, &y));
        let xy = p_covariance(&p, &x, &y).unwrap();
        let yx = p_covariance(&p, &y, &x).unwrap();
        prop_assert!((xy - yx).abs() <= REL_TOL * scale);

        let combo = x.scale(a).add(&x2.scale(b)).unwrap();
        let lhs = p_covariance(&p, &combo, &y).unwrap();
        let rhs = a * xy + b * p_covariance(&p, &x2, &y).unwrap();
        prop_assert!((lhs - rhs).abs() <= REL_TOL * scale);
    }

    #[test]
    fn p_variance_nonnegative((p, x, _) in hilbert_instance()) {
        prop_assert!(p_variance(&p, &x).unwrap() >= 0.0);
    }

    #[test]
    fn inner_product_split_chain((p, x, y) in hilbert_instance()) {
        // both |⟨x,y⟩| − |⟨Px,y⟩| and its negation stay below ‖P⊥x‖‖P⊥y‖
        let ip = x.inner(&y).unwrap().abs();
        let pip = p.project(&x).unwrap().inner(&y).unwrap().abs();
        let qq = p_variance(&p, &x).unwrap().sqrt() * p_variance(&p, &y).unwrap().sqrt();
        let eps = REL_TOL * scale_of(&x, &y);
        prop_assert!(ip - pip <= qq + eps);
        prop_assert!(pip - ip <= qq + eps);
    }

    #[test]
    fn projection_witnesses_hold((p, x, y) in hilbert_instance()) {
        prop_assert!(covariance_bound(&p, &x, &y, REL_TOL).unwrap().holds);
        prop_assert!(enhanced_richard(&p, &x, &y, REL_TOL).unwrap().holds);
        prop_assert!(enhanced_buzano(&p, &x, &y, REL_TOL).unwrap().holds);
        prop_assert!(enhanced_d(&p, &x, &y, REL_TOL).unwrap().holds);
    }

    #[test]
    fn enhanced_d_tighter_than_decoupling((p, x, y) in hilbert_instance()) {
        let eps = REL_TOL * scale_of(&x, &y);
        let ed = enhanced_d(&p, &x, &y, REL_TOL).unwrap();
        let d = d_function(&p, &x, &y).unwrap();
        prop_assert!(ed.rhs <= d + eps);
        prop_assert!(d <= x.norm() * y.norm() + eps);
    }

    #[test]
    fn rank_one_dominance(
        (dim, z, x, y) in (1usize..=8).prop_flat_map(|dim| {
            (Just(dim), vector(dim), vector(dim), vector(dim))
        }),
    ) {
        let _ = dim;
        prop_assume!(z.norm() > 1e-6);
        let eps = REL_TOL * scale_of(&x, &y);

        let b = classical_buzano(&z, &x, &y, REL_TOL).unwrap();
        prop_assert!(b.witness.holds);
        prop_assert!(b.enhanced_rhs <= b.witness.rhs + eps);

        let r = classical_richard(&z, &x, &y, REL_TOL).unwrap();
        prop_assert!(r.witness.holds);
        prop_assert!(r.enhanced_rhs <= r.witness.rhs + eps);

        // z-covariance agrees with the rank-one projection covariance
        let pz = Projector::rank_one(&z).unwrap();
        let zc = z_covariance(&z, &x, &y).unwrap();
        let pc = p_covariance(&pz, &x, &y).unwrap();
        prop_assert!((zc - pc).abs() <= REL_TOL * scale_of(&x, &y));
    }

    // --- prob ---

    #[test]
    fn walker_chain_holds((x, y) in variable_pair()) {
        let chain = walker_chain(&x, &y, REL_TOL).unwrap();
        prop_assert!(chain.holds,
            "walker chain violated: {} / {} / {}", chain.lower, chain.middle, chain.upper);
    }

    #[test]
    fn walker_symmetric_and_sign_blind((x, y) in variable_pair()) {
        let base = walker_bound(&x, &y).unwrap();
        let swapped = walker_bound(&y, &x).unwrap();
        let scale = (x.l2_norm() * y.l2_norm()).max(1.0);
        prop_assert!((base - swapped).abs() <= REL_TOL * scale);

        let negated_values: Vec<f64> = x.values().iter().map(|v| -v).collect();
        let negated =
            DiscreteRandomVariable::new(Arc::clone(x.space()), negated_values).unwrap();
        let flipped = walker_bound(&negated, &y).unwrap();
        prop_assert!((base - flipped).abs() <= REL_TOL * scale);
    }

    #[test]
    fn proportional_variables_are_equalized((x, _) in variable_pair(), c in 0.1..4.0f64) {
        let scaled: Vec<f64> = x.values().iter().map(|v| c * v).collect();
        let y = DiscreteRandomVariable::new(Arc::clone(x.space()), scaled).unwrap();
        let eq = sharpe_equalization(&x, &y, 1e-12, REL_TOL).unwrap();
        prop_assert!(eq.equalized, "gap {}", eq.gap);
        // equalized means the bound collapses onto Cauchy-Schwarz
        let chain = walker_chain(&x, &y, REL_TOL).unwrap();
        prop_assert!(chain.upper - chain.middle <= REL_TOL * chain.upper.max(1.0));
    }

    #[test]
    fn embedding_bridges_to_hilbert_layer((x, y) in variable_pair()) {
        let ex = x.euclidean_embedding();
        let ey = y.euclidean_embedding();
        let scale = (x.l2_norm() * y.l2_norm()).max(1.0);

        // weighted inner product = Euclidean inner product of embeddings
        let weighted = l2_inner(&x, &y).unwrap();
        prop_assert!((weighted - ex.inner(&ey).unwrap()).abs() <= REL_TOL * scale);

        // covariance = projection covariance onto the embedded constant
        let one = DiscreteRandomVariable::constant(Arc::clone(x.space()), 1.0).unwrap();
        let p1 = Projector::rank_one(&one.euclidean_embedding()).unwrap();
        let cov = covariance(&x, &y).unwrap();
        let pcov = p_covariance(&p1, &ex, &ey).unwrap();
        prop_assert!((cov - pcov).abs() <= REL_TOL * scale);

        // and equals the z-covariance of the embedded constant
        let zcov = z_covariance(&one.euclidean_embedding(), &ex, &ey).unwrap();
        prop_assert!((cov - zcov).abs() <= REL_TOL * scale);
    }

    // --- hoelder ---

    #[test]
    fn refined_hoelder_chain_holds(
        (x, y) in variable_pair(),
        p in prop::sample::select(vec![1.2f64, 1.5, 2.0, 3.0, 5.0]),
    ) {
        let pair = ConjugatePair::from_p(p).unwrap();
        let report = refined_hoelder(&x, &y, &pair, REL_TOL).unwrap();
        prop_assert!(report.holds,
            "refined chain violated at p={}: {} / {} / {}",
            p, report.lhs, report.refined, report.classical);
        // the Young route sits between the product expectation and the bound
        let young = young_intermediate_bound(&x, &y, &pair).unwrap();
        let eps = REL_TOL * report.classical.max(1.0);
        prop_assert!(report.lhs <= young + eps);
        prop_assert!((report.young_term - young).abs() <= eps);
    }

    #[test]
    fn hoelder_radicand_within_unit_interval(
        (x, y) in variable_pair(),
        p in prop::sample::select(vec![1.2f64, 1.5, 2.0, 3.0, 5.0]),
    ) {
        let pair = ConjugatePair::from_p(p).unwrap();
        let two = 2.0f64;
        let u = x.abs_pow(pair.p() / two);
        let v = y.abs_pow(pair.q() / two);
        let denom = u.l2_norm() * v.l2_norm();
        prop_assume!(denom > 0.0);
        let ratio = (v.std() * u.expectation() - u.std() * v.expectation()) / denom;
        let radicand = 1.0 - ratio * ratio;
        prop_assert!((-REL_TOL..=1.0 + REL_TOL).contains(&radicand), "radicand {}", radicand);
    }

    #[test]
    fn half_improvement_ordering((x, y) in variable_pair()) {
        let avg = averaged_walker_bound(&x, &y).unwrap();
        let classical = lp_norm(&x, 2.0).unwrap() * lp_norm(&y, 2.0).unwrap();
        let eps = REL_TOL * classical.max(1.0);
        prop_assert!(avg.walker <= avg.bound + eps);
        prop_assert!(avg.bound <= classical + eps);

        let pair = ConjugatePair::new(2.0, 2.0).unwrap();
        let report = refined_hoelder(&x, &y, &pair, REL_TOL).unwrap();
        let scale = report.refined.abs().max(avg.bound.abs()).max(1e-300);
        prop_assert!((report.refined - avg.bound).abs() <= 1e-12 * scale);
    }
}
