// Two closed-form bounds for cosh x / cos x: the limit bound valid on all
// of (0, pi/2), and the exponential envelope with the best constant beta.
//
//     cargo run --example limit_and_envelope

use ratio_bounds::bounds::{best_exp_constant, coshcos_limit_bound, exp_envelope};
use ratio_bounds::oracle::ratio_coshcos;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>5} {:>14} {:>14} {:>12}",
        "x", "cosh/cos", "limit", "margin"
    );
    for x in [0.25, 0.5, 1.0, 1.5] {
        let r = ratio_coshcos(x)?;
        let l = coshcos_limit_bound(x)?;
        println!("{x:>5} {r:>14.9} {l:>14.9} {:>12.3e}", l - r);
    }

    for alpha in [0.5, 1.0, 1.4] {
        let beta = best_exp_constant(alpha)?;
        let near = alpha * (1.0 - 1e-9);
        println!(
            "alpha = {alpha}: beta = {beta:.10}, envelope at alpha- = {:.10}, ratio = {:.10}",
            exp_envelope(near, alpha)?,
            ratio_coshcos(near)?
        );
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
