// Produce plotting data for the cosh/cos bounds through the CLI layer.
//
//     cargo run --example sweep_table > coshcos.csv

use ratio_bounds::cli::{cmd_sweep, Environment, FamilyArg, Format, SweepArgs};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let args = SweepArgs {
        family: FamilyArg::Coshcos,
        alpha: 1.2,
        k0_list: vec![-1, 0, 1, 2],
        points: 12,
        format: Format::Csv,
    };
    print!("{}", cmd_sweep(&args, &Environment::default())?);
    Ok(())
}

fn main() {
    run().unwrap();
}
