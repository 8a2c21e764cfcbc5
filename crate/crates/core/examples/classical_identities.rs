//! Nielsen, Gessel, Miki and Matiyasevich identities, expanded exactly.

use rbb::identities::classical::{gessel_sides, miki_sides, verify_agoh, verify_kim_pair_sum, verify_nielsen};
use rbb::BernoulliCache;

fn main() {
    let cache = BernoulliCache::global();

    println!("nielsen(3, 5): {}", verify_nielsen(&cache, 3, 5).unwrap());
    println!("agoh(6, 4): {}", verify_agoh(&cache, 6, 4));
    println!("pair sum N = 9: {}", verify_kim_pair_sum(&cache, 9));

    let (lhs, rhs) = gessel_sides(&cache, 6).unwrap();
    println!("\ngessel N = 6\n  lhs = {lhs}\n  rhs = {rhs}");

    for n in [4, 6, 8, 10] {
        let (l, r) = miki_sides(&cache, n).unwrap();
        println!("miki N = {n:<2}: {l} = {r}");
    }
}
