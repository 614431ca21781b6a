// The odd-denominator sums I_k three ways: zeta closed form, direct
// summation with an integral tail, and the zeta-based upper bound.
//
//     cargo run --example lambda_sums

use ratio_bounds::series::{
    lambda_sum_closed_with, lambda_sum_partial, lambda_sum_upper, zeta_even, SeriesConfig,
};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SeriesConfig::default();
    println!("zeta(4) = {:.16}", zeta_even(2, &cfg)?.value);
    println!(
        "{:>2} {:>20} {:>20} {:>10} {:>20}",
        "k", "closed", "direct", "tail", "upper"
    );
    for k in 0..=6 {
        let closed = lambda_sum_closed_with(k, &cfg)?;
        let direct = lambda_sum_partial(k, &cfg)?;
        println!(
            "{k:>2} {:>20.16} {:>20.16} {:>10.1e} {:>20.16}",
            closed.value,
            direct.value,
            direct.tail_bound,
            lambda_sum_upper(k)
        );
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
