//! Products of three divided Bernoulli polynomials.
//!
//! The expansion holds up to a constant; the constant is computed. Integrating
//! it from 0 leaves that constant behind as a linear term.

use rbb::identities::triple::{
    verify_triple_integral, verify_triple_integral_with_linear_term, verify_triple_product, verify_triple_sum,
};
use rbb::BernoulliCache;

fn main() {
    let cache = BernoulliCache::global();
    for (i, j, k) in [(1, 1, 1), (1, 1, 2), (2, 3, 4), (3, 3, 3)] {
        let product = verify_triple_product(&cache, i, j, k).unwrap();
        let integral = verify_triple_integral(&cache, i, j, k).unwrap();
        let corrected = verify_triple_integral_with_linear_term(&cache, i, j, k).unwrap();
        println!("({i},{j},{k})");
        println!("  product:             {product}");
        println!("  integral:            {integral}");
        println!("  integral with c*x:   {corrected}");
    }
    for n in [3, 6, 9] {
        println!("triple sum N = {n}: {}", verify_triple_sum(&cache, n).unwrap());
    }
}
