// The cosh x / cos x bounds b_{k0} for a fixed point, decreasing towards
// the true ratio as the refinement level grows.
//
//     cargo run --example coshcos_family

use ratio_bounds::bounds::{coshcos_bound, coshcos_bound_with, CoshCosOptions, LambdaSource};
use ratio_bounds::oracle::ratio_coshcos;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (x, alpha) = (0.5, 1.0);
    let reference = ratio_coshcos(x)?;
    println!("cosh x / cos x at x = {x}: {reference:.15}");

    // I_k from direct summation instead of the zeta closed form
    let direct = CoshCosOptions {
        lambda_source: LambdaSource::Partial,
        ..Default::default()
    };
    let mut previous = f64::INFINITY;
    for k0 in [-1, 0, 1, 2, 4, 8, 16, 30] {
        let b = coshcos_bound(x, alpha, k0)?;
        let b_direct = coshcos_bound_with(x, alpha, k0, &direct)?;
        println!(
            "k0 = {k0:>3}: b = {b:.15}  margin {:>10.3e}  (direct I_k: {:+.1e})",
            b - reference,
            b_direct - b
        );
        assert!(b >= reference && b <= previous);
        previous = b;
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
