//! α_{m,k} for the blow-up of CP² at two points, where no finite level
//! reaches the toric value 1/3 once k >= 2.
//!
//!     cargo run --release --example mk_sweep -- 6 3

use alpha_polytope::cli::bundled;
use alpha_polytope::invariants::{alpha_mk, alpha_toric, SweepOptions};

fn main() -> alpha_polytope::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>().expect("integer argument"));
    let max_m = args.next().unwrap_or(4);
    let max_k = args.next().unwrap_or(3);

    let data = bundled("cp2-blowup2")?.data;
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let opts = SweepOptions { threads, ..SweepOptions::default() };

    println!("alpha^T = {}", alpha_toric(data.polytope())?);
    print!("{:>4}", "m\\k");
    for k in 1..=max_k {
        print!("{k:>8}");
    }
    println!();
    for m in 1..=max_m {
        print!("{m:>4}");
        for k in 1..=max_k {
            print!("{:>8}", alpha_mk(&data, m, k.into(), opts)?.alpha.to_string());
        }
        println!();
    }
    Ok(())
}
