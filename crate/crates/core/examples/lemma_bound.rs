// The Bernoulli-type bound on ln((1+uv)/(1-uv)) at increasing refinement
// levels, and the closed-form gaps between consecutive levels.
//
//     cargo run --example lemma_bound

use ratio_bounds::bounds::{a_gap, a_sequence, bernoulli_ratio_bound, LemmaQuery};
use ratio_bounds::series::{log_ratio, SeriesConfig};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (u, v) = (0.5, 0.5);
    let exact = log_ratio(u * v)?;
    let levels = a_sequence(u, v, 4)?;
    let cfg = SeriesConfig::default();

    println!("ln((1+uv)/(1-uv)) at u = v = 0.5: {exact:.12}");
    println!(
        "{:>4} {:>16} {:>12} {:>12}",
        "k0", "bound", "excess", "gap to next"
    );
    for (i, a) in levels.iter().enumerate() {
        let k0 = i as i32 - 1;
        let gap = a_gap(u, v, k0, &cfg)?;
        println!(
            "{k0:>4} {a:>16.12} {:>12.3e} {:>12.3e}",
            a - exact,
            gap.value
        );
        assert!(*a >= exact);
    }

    let q = LemmaQuery::new(0.9, 0.9, 2)?;
    println!(
        "(1+uv)/(1-uv) at u = v = 0.9: {:.6} <= {:.6}",
        1.81 / 0.19,
        bernoulli_ratio_bound(&q)?
    );
    Ok(())
}

fn main() {
    run().unwrap();
}
