//! Sweep a few catalog entries in parallel and print JSON lines plus a summary.

use rayon::prelude::*;
use rbb::identities::report::SweepSummary;
use rbb::identities::{lookup, Context};

fn main() {
    let ctx = Context::global();
    ctx.warm_up(64);
    let mut reports = Vec::new();
    for name in ["miki", "triple-sum", "kim3"] {
        let spec = lookup(name).unwrap();
        let batch: Vec<_> = spec.default_tuples().par_iter().map(|t| spec.run(&ctx, t).unwrap()).collect();
        reports.extend(batch);
    }
    for r in reports.iter().take(5) {
        println!("{}", r.to_json());
    }
    println!("...");
    println!("{}", SweepSummary::from_reports(&reports).line());
}
