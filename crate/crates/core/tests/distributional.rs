//! Sample-level checks of every sampler against the laws it targets.

use std::f64::consts::TAU;

use curvtorus::distributions::{
    default_catalog, g2_cdf, mobius_transform, CircularDensity, CircularUniform, KatoJones, TorusWeighted,
    UniformTorusMarginal, VonMises,
};
use curvtorus::samplers::{
    eau_sample, har_sample_stream_tallied, torus_sample, vmbfr_sample, HarSampler, UniformAngle,
};
use curvtorus::validation::{
    chi_square_binned, chi_square_critical, histogram, ks_critical, ks_statistic, EcdfSummary, NumericCdf,
    SignificanceLevel,
};
use curvtorus::{HarEnvelope, RngStream, TorusGeometry};

fn ks_passes(sample: Vec<f64>, f: &dyn CircularDensity) -> (f64, f64) {
    let e = EcdfSummary::new(sample).unwrap();
    let d = ks_statistic(&e, NumericCdf::best_for(f));
    (d, ks_critical(e.len(), SignificanceLevel::One))
}

#[test]
fn eau_theta2_matches_g2() {
    for (i, &a) in [0.1, 0.5, 1.0].iter().enumerate() {
        let mut rng = RngStream::new(100 + i as u64);
        let (pairs, _) = eau_sample(200_000, a, &mut rng).unwrap();
        let e = EcdfSummary::new(pairs.iter().map(|p| p.theta2).collect()).unwrap();
        let d = ks_statistic(&e, |t| g2_cdf(t, a).unwrap());
        assert!(d < ks_critical(e.len(), SignificanceLevel::One), "a={a}: D={d}");
        let e1 = EcdfSummary::new(pairs.iter().map(|p| p.theta1).collect()).unwrap();
        let d1 = ks_statistic(&e1, |t| t / TAU);
        assert!(
            d1 < ks_critical(e1.len(), SignificanceLevel::One),
            "theta1 a={a}: D={d1}"
        );
    }
}

#[test]
fn eau_histogram_tracks_g2() {
    let mut rng = RngStream::new(8);
    let (pairs, _) = eau_sample(1_000_000, 0.5, &mut rng).unwrap();
    let t2: Vec<f64> = pairs.iter().map(|p| p.theta2).collect();
    let h = histogram(&t2, 36).unwrap();
    let g2 = UniformTorusMarginal::new(0.5).unwrap();
    let worst = h
        .centers()
        .iter()
        .zip(&h.density)
        .map(|(&c, &d)| (d - g2.pdf(c)).abs())
        .fold(0.0, f64::max);
    assert!(worst < 0.01, "max |hist - g2| = {worst}");
}

#[test]
fn streaming_har_is_exact_over_catalog() {
    for (i, entry) in default_catalog().iter().enumerate() {
        let s = HarSampler::new(entry.build().unwrap(), 500).unwrap();
        let f = s.density();
        let mut rng = RngStream::derive(11, i as u64);
        let (x, _) = s.sample(20_000, &mut rng);
        let (d, crit) = ks_passes(x, f);
        assert!(d < crit, "{}: D={d} crit={crit}", f.label());
    }
}

#[test]
fn batch_har_passes_ks() {
    for (i, entry) in default_catalog().iter().enumerate() {
        let s = HarSampler::new(entry.build().unwrap(), 500).unwrap();
        let f = s.density();
        let mut rng = RngStream::derive(12, i as u64);
        let (x, _) = s.sample_batch(20_000, &mut rng);
        assert_eq!(x.len(), 20_000);
        let (d, crit) = ks_passes(x, f);
        assert!(d < crit, "{}: D={d} crit={crit}", f.label());
    }
}

#[test]
fn vmbfr_passes_ks() {
    for (i, &kappa) in [0.1, 1.0, 10.0, 100.0].iter().enumerate() {
        let mut rng = RngStream::new(30 + i as u64);
        let (x, _) = vmbfr_sample(1.0, kappa, 50_000, &mut rng).unwrap();
        let (d, crit) = ks_passes(x, &VonMises::new(1.0, kappa).unwrap());
        assert!(d < crit, "kappa={kappa}: D={d}");
    }
}

/// Within a cell, acceptance of a proposal is `P(A_i) / (B H_i) = 1 / M_i`.
#[test]
fn per_cell_acceptance_matches_cell_constants() {
    let vm = VonMises::new(0.0, 10.0).unwrap();
    let env = HarEnvelope::circle(&vm, 64).unwrap();
    let mut rng = RngStream::new(5);
    let (_, _, tallies) = har_sample_stream_tallied(&env, &vm, 200_000, &mut rng);
    let mut cells: Vec<usize> = (0..env.cell_count()).collect();
    cells.sort_by(|&i, &j| env.cell_mass(&vm, j).total_cmp(&env.cell_mass(&vm, i)));
    for &i in &cells[..5] {
        let t = tallies[i];
        let p = 1.0 / env.cell_m(&vm, i);
        let rate = t.accepted as f64 / t.proposed as f64;
        let se = (p * (1.0 - p) / t.proposed as f64).sqrt();
        assert!((rate - p).abs() < 3.0 * se.max(1e-4), "cell {i}: {rate} vs {p}");
    }
}

#[test]
fn torus_uniform_joint_via_har() {
    let g = TorusGeometry::new(3.0, 1.5).unwrap();
    let w = HarSampler::new(TorusWeighted::new(CircularUniform, 0.5).unwrap(), 500).unwrap();
    let mut rng = RngStream::new(9);
    let s = torus_sample(&UniformAngle, &w, 50_000, &mut rng, &g).unwrap();
    assert_eq!(s.points.len(), 50_000);
    assert!(s.points.iter().all(|&p| g.implicit_residual(p).abs() < 1e-9));
    let (d, crit) = ks_passes(
        s.pairs.iter().map(|p| p.theta2).collect(),
        &UniformTorusMarginal::new(0.5).unwrap(),
    );
    assert!(d < crit);
}

#[test]
fn weighted_marginals_binned_chi_square() {
    let g = TorusGeometry::new(3.0, 1.5).unwrap();
    let crit = chi_square_critical(35, SignificanceLevel::One).unwrap();
    let vm = HarSampler::new(TorusWeighted::new(VonMises::new(0.0, 1.0).unwrap(), 0.5).unwrap(), 500).unwrap();
    let theta1 = HarSampler::new(VonMises::new(0.0, 1.0).unwrap(), 500).unwrap();
    let mut rng = RngStream::new(21);
    let s = torus_sample(&theta1, &vm, 50_000, &mut rng, &g).unwrap();
    let t2: Vec<f64> = s.pairs.iter().map(|p| p.theta2).collect();
    let t1: Vec<f64> = s.pairs.iter().map(|p| p.theta1).collect();
    assert!(chi_square_binned(&t2, vm.density(), 36).unwrap().statistic < crit);
    assert!(chi_square_binned(&t1, theta1.density(), 36).unwrap().statistic < crit);

    let kj = KatoJones::new(0.0, 0.0, 0.3, 1.0).unwrap();
    let w = HarSampler::new(TorusWeighted::new(kj, 0.5).unwrap(), 500).unwrap();
    let s = torus_sample(&UniformAngle, &w, 50_000, &mut rng, &g).unwrap();
    let t2: Vec<f64> = s.pairs.iter().map(|p| p.theta2).collect();
    assert!(chi_square_binned(&t2, w.density(), 36).unwrap().statistic < crit);
}

/// Möbius images of von Mises draws follow the Kato–Jones density.
#[test]
fn kato_jones_mobius_cross_validation() {
    for (i, &(mu, nu, rho, kappa)) in [(0.0, 0.0, 0.3, 1.0), (1.0, 0.7, 0.6, 5.0), (4.0, 2.0, 0.2, 0.5)]
        .iter()
        .enumerate()
    {
        let mut rng = RngStream::new(40 + i as u64);
        let (base, _) = vmbfr_sample(0.0, kappa, 50_000, &mut rng).unwrap();
        let x: Vec<f64> = base.iter().map(|&t| mobius_transform(t, mu, nu, rho)).collect();
        let kj = KatoJones::new(mu, nu, rho, kappa).unwrap();
        let (d, crit) = ks_passes(x, &kj);
        assert!(d < crit, "({mu},{nu},{rho},{kappa}): D={d}");
    }
}

#[test]
fn reproducible_streams() {
    let vm = VonMises::new(0.5, 3.0).unwrap();
    let s = HarSampler::new(vm, 500).unwrap();
    let a = s.sample(1_000, &mut RngStream::new(3)).0;
    let b = s.sample(1_000, &mut RngStream::new(3)).0;
    assert_eq!(a, b);
    assert_ne!(a, s.sample(1_000, &mut RngStream::new(4)).0);
}
