use std::time::Instant;

fn main() {
    let depth = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);
    let start = Instant::now();
    let rungs = pi_ladder::run_ladder(depth).expect("depth ≥ 2");
    let top = rungs.last().expect("nonempty");
    let bits = top
        .poly()
        .coeffs()
        .iter()
        .map(|c| c.denom().bits())
        .max()
        .unwrap_or(0);
    println!(
        "run_ladder({depth}): {:?}, widest denominator {bits} bits",
        start.elapsed()
    );
}
