//! Persist Bernoulli numbers, reload them, and catch a corrupted entry.

use rbb::bernoulli::{check_entries, parse_cache_text};
use rbb::BernoulliCache;

fn main() -> rbb::Result<()> {
    let dir = std::env::temp_dir().join(format!("rbb-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("bernoulli.tsv");

    BernoulliCache::global().save(&path, 50)?;
    let loaded = BernoulliCache::load(&path)?;
    println!("loaded {} entries; B_50 = {}", loaded.len(), loaded.number(50));

    let text = std::fs::read_to_string(&path)?.replacen("2\t1/6", "2\t1/5", 1);
    let numbers = parse_cache_text(&text)?;
    match check_entries(&numbers, 50) {
        Ok(()) => println!("corruption missed"),
        Err(e) => println!("check failed as expected: {e}"),
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
