//! Bernoulli numbers and polynomials, divided Bernoulli quantities, Faulhaber
//! power-sum polynomials, harmonic numbers, and the persistent number cache.
//!
//! Convention: `B_1 = -1/2`, i.e. `B_n = B_n(0)`. The numbers come from the
//! recurrence `sum_{j=0}^{n} C(n+1, j) B_j = 0` with `B_0 = 1`, and
//! `B_n(x) = sum_k C(n, k) B_k x^(n-k)`.
//!
//! The cache file is one record per line, `n<TAB>p/q`, with `n` running
//! `0, 1, 2, ...` without gaps.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{binomial, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Fraction of entries revalidated when a cache file is loaded.
pub const LOAD_SAMPLE_FRACTION: f64 = 0.10;

const LOAD_SAMPLE_SEED: u64 = 0x5eed_b3e7;

/// Grow-only tables of Bernoulli numbers, Bernoulli polynomials and power-sum
/// polynomials. An entry never changes once written, so readers only ever see
/// finished values.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    numbers: RwLock<Vec<Rational>>,
    polys: RwLock<Vec<Arc<Poly>>>,
    power_sums: RwLock<Vec<Arc<Poly>>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache backing the free functions of this module.
    pub fn global() -> Arc<BernoulliCache> {
        static GLOBAL: OnceLock<Arc<BernoulliCache>> = OnceLock::new();
        GLOBAL.get_or_init(|| Arc::new(BernoulliCache::new())).clone()
    }

    /// A cache whose first entries are taken as given (e.g. from a file).
    /// Later entries continue the recurrence from them.
    pub fn with_numbers(numbers: Vec<Rational>) -> Self {
        BernoulliCache { numbers: RwLock::new(numbers), ..Self::default() }
    }

    /// Reads a cache file, validating the format and a deterministic sample of
    /// about [`LOAD_SAMPLE_FRACTION`] of the entries against the recurrence.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let numbers = parse_cache_text(&text)?;
        validate_sample(&numbers)?;
        Ok(BernoulliCache::with_numbers(numbers))
    }

    /// Writes `B_0..=B_max_n` as `n<TAB>p/q` lines.
    pub fn save(&self, path: impl AsRef<Path>, max_n: usize) -> Result<()> {
        self.warm_up(max_n);
        let numbers = self.numbers.read().expect("cache lock poisoned");
        let mut out = String::new();
        for (n, b) in numbers.iter().take(max_n + 1).enumerate() {
            writeln!(out, "{n}\t{b}").expect("write to string");
        }
        std::fs::write(path, out)?;
        Ok(())
    }

    /// Number of Bernoulli numbers currently stored.
    pub fn len(&self) -> usize {
        self.numbers.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Fills numbers and polynomials for indices `0..=max_n`. Concurrent
    /// callers are serialized by the write locks and the work is idempotent.
    pub fn warm_up(&self, max_n: usize) {
        self.ensure_numbers(max_n);
        self.ensure_polys(max_n);
    }

    fn ensure_numbers(&self, max_n: usize) {
        if self.numbers.read().expect("cache lock poisoned").len() > max_n {
            return;
        }
        let mut numbers = self.numbers.write().expect("cache lock poisoned");
        while numbers.len() <= max_n {
            let n = numbers.len();
            let next = if n == 0 {
                Rational::one()
            } else {
                let acc: Rational = numbers
                    .iter()
                    .enumerate()
                    .map(|(j, b)| b * Rational::from_integer(binomial(n as u64 + 1, j as i64)))
                    .sum();
                -acc / Rational::from(n as i64 + 1)
            };
            numbers.push(next);
        }
    }

    fn ensure_polys(&self, max_n: usize) {
        if self.polys.read().expect("cache lock poisoned").len() > max_n {
            return;
        }
        self.ensure_numbers(max_n);
        let numbers = self.numbers.read().expect("cache lock poisoned");
        let mut polys = self.polys.write().expect("cache lock poisoned");
        while polys.len() <= max_n {
            let n = polys.len();
            let coeffs =
                (0..=n).map(|e| Rational::from_integer(binomial(n as u64, (n - e) as i64)) * &numbers[n - e]).collect();
            polys.push(Arc::new(Poly::from_coeffs(coeffs)));
        }
    }

    /// `B_n`.
    pub fn number(&self, n: usize) -> Rational {
        if let Some(b) = self.numbers.read().expect("cache lock poisoned").get(n) {
            return b.clone();
        }
        self.ensure_numbers(n);
        self.numbers.read().expect("cache lock poisoned")[n].clone()
    }

    /// `B_n(x)`.
    pub fn poly(&self, n: usize) -> Arc<Poly> {
        if let Some(p) = self.polys.read().expect("cache lock poisoned").get(n) {
            return p.clone();
        }
        self.ensure_polys(n);
        self.polys.read().expect("cache lock poisoned")[n].clone()
    }

    /// `B_n(1)`, which equals `B_n` except `B_1(1) = 1/2`.
    pub fn number_at_one(&self, n: usize) -> Rational {
        if n == 1 {
            Rational::frac(1, 2)
        } else {
            self.number(n)
        }
    }

    /// `B_n / n`.
    pub fn divided_number(&self, n: usize) -> Result<Rational> {
        if n == 0 {
            return Err(Error::DividedIndexZero);
        }
        Ok(self.number(n) / Rational::from(n as i64))
    }

    /// `B_n(x) / n`.
    pub fn divided_poly(&self, n: usize) -> Result<Poly> {
        if n == 0 {
            return Err(Error::DividedIndexZero);
        }
        Ok(self.poly(n).scale(&Rational::frac(1, n as i64)))
    }

    /// `F_n(m) = 1/(n+1) sum_{j=0}^{n} (-1)^j C(n+1, j) B_j m^(n+1-j)`.
    pub fn power_sum_poly(&self, n: usize) -> Arc<Poly> {
        if let Some(p) = self.power_sums.read().expect("cache lock poisoned").get(n) {
            return p.clone();
        }
        self.ensure_numbers(n);
        let mut table = self.power_sums.write().expect("cache lock poisoned");
        while table.len() <= n {
            let k = table.len();
            let mut coeffs = vec![Rational::zero(); k + 2];
            let scale = Rational::frac(1, k as i64 + 1);
            for j in 0..=k {
                let c = Rational::sign_power(j as i64)
                    * Rational::from_integer(binomial(k as u64 + 1, j as i64))
                    * self.number(j)
                    * &scale;
                coeffs[k + 1 - j] = c;
            }
            table.push(Arc::new(Poly::from_coeffs(coeffs)));
        }
        table[n].clone()
    }

    /// `(B_{n+1}(m+1) - B_{n+1}(1)) / (n+1)`, assembled by composition.
    ///
    /// `B_{n+1}(1) = B_{n+1}` except at `n = 0`, where subtracting `B_1 = -1/2`
    /// would count the empty term `0^0` and give `m + 1`.
    pub fn power_sum_via_bernoulli(&self, n: usize) -> Poly {
        let shifted = self.poly(n + 1).compose(&Poly::from_i64(&[1, 1]));
        (shifted - Poly::constant(self.number_at_one(n + 1))).scale(&Rational::frac(1, n as i64 + 1))
    }
}

/// `B_n` from the global cache.
pub fn bernoulli_number(n: usize) -> Rational {
    BernoulliCache::global().number(n)
}

/// `B_n(x)` from the global cache.
pub fn bernoulli_poly(n: usize) -> Poly {
    BernoulliCache::global().poly(n).as_ref().clone()
}

pub fn divided_bernoulli_number(n: usize) -> Result<Rational> {
    BernoulliCache::global().divided_number(n)
}

pub fn divided_bernoulli_poly(n: usize) -> Result<Poly> {
    BernoulliCache::global().divided_poly(n)
}

pub fn power_sum_poly(n: usize) -> Poly {
    BernoulliCache::global().power_sum_poly(n).as_ref().clone()
}

pub fn power_sum_via_bernoulli(n: usize) -> Poly {
    BernoulliCache::global().power_sum_via_bernoulli(n)
}

/// `sum_{j=1}^{m} j^n`, computed literally.
pub fn power_sum_literal(n: u32, m: u64) -> Rational {
    (1..=m).map(|j| Rational::from_integer(num_bigint::BigInt::from(j).pow(n))).sum()
}

/// `H_{n,s} = sum_{k=1}^{n} 1/k^s`; `H_{0,s} = 0`.
pub fn harmonic(n: u64, s: u32) -> Rational {
    assert!(s >= 1, "harmonic order must be positive");
    (1..=n).map(|k| Rational::from_integer(num_bigint::BigInt::from(k).pow(s)).recip().expect("k >= 1")).sum()
}

/// A harmonic number together with its arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicPair {
    pub n: u64,
    pub s: u32,
    pub value: Rational,
}

impl HarmonicPair {
    pub fn new(n: u64, s: u32) -> Self {
        HarmonicPair { n, s, value: harmonic(n, s) }
    }
}

/// Parses cache text into `B_0, B_1, ...`. Only the format is checked here.
pub fn parse_cache_text(text: &str) -> Result<Vec<Rational>> {
    let mut numbers = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let malformed = |reason: &str| Error::Cache { line, reason: reason.to_string() };
        let (n, value) = raw.split_once('\t').ok_or_else(|| malformed("expected n<TAB>p/q"))?;
        let n: usize = n.trim().parse().map_err(|_| malformed("index is not a nonnegative integer"))?;
        if n != numbers.len() {
            return Err(malformed(&format!("expected index {}, found {n}", numbers.len())));
        }
        let value: Rational = value.parse().map_err(|_| malformed("value is not a rational p/q"))?;
        numbers.push(value);
    }
    Ok(numbers)
}

/// Line number (1-based) of record `n` in a file written by [`BernoulliCache::save`].
fn line_of(n: usize) -> usize {
    n + 1
}

/// Compares every entry with index `<= max_n` against a fresh recurrence run.
pub fn check_entries(numbers: &[Rational], max_n: usize) -> Result<()> {
    let reference = BernoulliCache::new();
    for (n, value) in numbers.iter().enumerate().take(max_n.saturating_add(1)) {
        let expected = reference.number(n);
        if *value != expected {
            return Err(Error::Cache {
                line: line_of(n),
                reason: format!("B_{n} recorded as {value}, recurrence gives {expected}"),
            });
        }
    }
    Ok(())
}

/// Revalidates a deterministic random sample of about 10% of the entries.
pub fn validate_sample(numbers: &[Rational]) -> Result<()> {
    let picked = sampled_indices(numbers.len());
    let reference = BernoulliCache::new();
    for n in picked {
        let expected = reference.number(n);
        if numbers[n] != expected {
            return Err(Error::Cache {
                line: line_of(n),
                reason: format!("B_{n} recorded as {}, recurrence gives {expected}", numbers[n]),
            });
        }
    }
    Ok(())
}

/// The indices [`validate_sample`] inspects for a table of `len` entries.
pub fn sampled_indices(len: usize) -> Vec<usize> {
    if len == 0 {
        return Vec::new();
    }
    let amount = ((len as f64) * LOAD_SAMPLE_FRACTION).ceil() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(LOAD_SAMPLE_SEED);
    let mut picked = sample(&mut rng, len, amount.min(len)).into_vec();
    picked.sort_unstable();
    picked
}
