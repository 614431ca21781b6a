// The sinh x / sin x bounds, built with zeta(4k+2) as coefficients.
//
//     cargo run --example sinhsin_family

use ratio_bounds::bounds::{Family, RatioQuery};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = 1.4;
    println!("alpha = {alpha}");
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "x", "k0 = -1", "k0 = 0", "k0 = 3"
    );
    for x in [0.2, 0.5, 0.8, 1.1, 1.3] {
        let margins: Vec<f64> = [-1, 0, 3]
            .iter()
            .map(|&k0| {
                let r = RatioQuery::new(x, alpha, k0, Family::SinhSin)?.evaluate()?;
                Ok(r.margin.unwrap_or_default())
            })
            .collect::<Result<_, ratio_bounds::Error>>()?;
        println!(
            "{x:>6} {:>12.3e} {:>12.3e} {:>12.3e}",
            margins[0], margins[1], margins[2]
        );
        // at high k0 the bound meets the ratio to within rounding
        assert!(margins.iter().all(|&m| m >= -1e-15));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
