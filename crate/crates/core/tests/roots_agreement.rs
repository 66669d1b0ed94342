//! Sturm isolation plus bisection against the numeric root finder on random
//! integer polynomials.

use k3dyn::algebra::numeric::complex_roots_f64;
use k3dyn::algebra::{isolate_real_roots, refine_root, IntPolynomial};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng) -> Vec<i64> {
    let deg = rng.gen_range(1..=12);
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-20..=20)).collect();
    let lead = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
    c.push(lead);
    c
}

#[test]
fn isolation_matches_numeric_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let c = random_poly(&mut rng);
        let p = IntPolynomial::from_i64(&c);
        let numeric = complex_roots_f64(&c.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect::<Vec<_>>()).unwrap();
        assert_eq!(numeric.len(), c.len() - 1);

        let isolated = isolate_real_roots(&p).unwrap();
        let mut exact_count = 0;
        for root in &isolated {
            let r = refine_root(&p, &root.interval, 1e-12).unwrap();
            // A root of multiplicity m is only resolved to about eps^(1/m).
            let tol = 1e-6f64.powf(1.0 / root.multiplicity as f64) * (1.0 + r.abs());
            let near = numeric.iter().filter(|z| (*z - Complex64::new(r, 0.0)).norm() < tol).count();
            assert_eq!(near, root.multiplicity, "{c:?}: root {r}");
            exact_count += root.multiplicity;
        }

        let numeric_real = numeric.iter().filter(|z| z.im.abs() < 1e-7 * (1.0 + z.norm())).count();
        assert_eq!(numeric_real, exact_count, "{c:?}: {numeric:?}");
    }
}
