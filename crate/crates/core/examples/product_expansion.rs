// Truncations of the infinite product for cosh x / cos x with rigorous
// bounds on the omitted factors.
//
//     cargo run --example product_expansion

use ratio_bounds::oracle::{product_coshcos, product_coshcos_corrected, ratio_coshcos};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let x = 1.3;
    let r = ratio_coshcos(x)?;
    println!("cosh x / cos x at x = {x}: {r:.15}");
    for n in [1, 10, 100, 1_000, 100_000] {
        let raw = product_coshcos(x, n)?;
        let corrected = product_coshcos_corrected(x, n)?;
        println!(
            "N = {n:>6}: partial {:.15} (+{:.1e})  corrected {:.15} (+/-{:.1e})",
            raw.value, raw.tail_bound, corrected.value, corrected.tail_bound
        );
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
