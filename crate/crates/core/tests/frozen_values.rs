//! Reference values computed with an independent exact-fraction greedy
//! cover and a textbook least-squares fit, then frozen here.

use boxcover::*;

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn geo(d0: &str, ratio: &str, steps: usize) -> ScaleSchedule {
    ScaleSchedule::new(r(d0), r(ratio), steps).unwrap()
}

fn close(got: f64, want: f64, tol: f64) {
    assert!((got - want).abs() <= tol, "got {got}, want {want} ± {tol}");
}

#[test]
fn prime_power_product_bound_small() {
    let c = prime_power_reciprocals(2, 8).unwrap();
    let d = prime_power_reciprocals(3, 5).unwrap();
    let rep = product_cover_bound_check(&c, &d, &r("1/10")).unwrap();
    assert!(rep.holds);
    assert_eq!(rep.radius, Rational::one());
}

#[test]
fn reciprocal_curve_tail_counts() {
    let f = reciprocal_integers(10_000).unwrap();
    let rep = estimate_dimension(&f, &geo("1/4", "1/2", 24)).unwrap();
    let tail: Vec<usize> = rep.samples[21..].iter().map(|s| s.1).collect();
    assert_eq!(tail, [4559, 5986, 7595]);
    assert_eq!(rep.delta_min, r("1/33554432"));
    close(rep.slope, 0.492011, 1e-6);
    assert!(rep.valid);
}

#[test]
fn prime_power_slopes_over_eighteen_scales() {
    let s = geo("1/4", "1/2", 18);
    let a2 = estimate_dimension(&prime_power_reciprocals(2, 64).unwrap(), &s).unwrap();
    let counts: Vec<usize> = a2.samples.iter().map(|x| x.1).collect();
    assert_eq!(counts, (3..=20).collect::<Vec<_>>());
    close(a2.slope, 0.146882, 1e-6);
    let a3 = estimate_dimension(&prime_power_reciprocals(3, 64).unwrap(), &s).unwrap();
    close(a3.slope, 0.125129, 1e-6);
}

#[test]
fn subadditivity_prime_powers() {
    let c = prime_power_reciprocals(2, 40).unwrap();
    let d = prime_power_reciprocals(3, 25).unwrap();
    let rep = subadditivity_estimate_check(&c, &d, &geo("1/4", "1/2", 18), 0.1).unwrap();
    close(rep.dim_c, 0.146882, 1e-6);
    close(rep.dim_d, 0.125129, 1e-6);
    close(rep.dim_cd, 0.275414, 1e-6);
    assert!(rep.holds);
}

#[test]
fn subadditivity_cantor() {
    let c = cantor_endpoints(8);
    let rep = subadditivity_estimate_check(&c, &c, &ScaleSchedule::pow3(8).unwrap(), 0.1).unwrap();
    close(rep.dim_c, 2f64.ln() / 3f64.ln(), 1e-9);
    close(rep.dim_cd, 0.961763, 1e-6);
    assert!(rep.holds);
}
