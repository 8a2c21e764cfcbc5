//! Products of three divided Bernoulli polynomials: the single-product
//! expansion, its integrated form, and the symmetric sum over `i+j+k = N`.
//!
//! Throughout, `DB_n(x) = B_n(x)/n` and `DB_n = B_n/n`. A term of a
//! `q, t >= 0` sum exists iff each of its binomials has `0 <= lower <= upper`
//! and every divided index it mentions is at least 1.

use std::collections::BTreeMap;

use crate::arith::{binomial_in_range, binomial_rat, Rational};
use crate::bernoulli::{harmonic, BernoulliCache};
use crate::error::Result;
use crate::poly::{classify_discrepancy, Discrepancy, Poly};

use super::{divided, divided_poly, require};

/// Linear combination `sum_n c_n DB_n(x)`, accumulated slot by slot and
/// expanded once.
#[derive(Default, Debug)]
struct DividedCombination {
    slots: BTreeMap<usize, Rational>,
}

impl DividedCombination {
    fn add(&mut self, index: usize, c: Rational) {
        debug_assert!(index >= 1, "divided index must be positive");
        *self.slots.entry(index).or_insert_with(Rational::zero) += c;
    }

    fn expand(&self, cache: &BernoulliCache) -> Poly {
        let mut out = Poly::zero();
        for (&n, c) in &self.slots {
            out.add_scaled(&divided_poly(cache, n), c);
        }
        out
    }
}

/// `C(u+v-2q, 2t-2q)/(u+v-2q) * (C(u,2q)/u + C(v,2q)/v)`, with each of the two
/// products present only when both of its binomials are in range.
fn bracket_term(u: usize, v: usize, two_q: usize, two_t: usize) -> Rational {
    let (u, v, two_q, two_t) = (u as i64, v as i64, two_q as i64, two_t as i64);
    let upper = u + v - two_q;
    let Some(outer) = binomial_in_range(upper, two_t - two_q) else {
        return Rational::zero();
    };
    let mut acc = Rational::zero();
    for w in [u, v] {
        if let Some(inner) = binomial_in_range(w, two_q) {
            // w >= 2q and the other index is >= 1, so upper >= 1
            acc += &outer / Rational::from(upper) * inner / Rational::from(w);
        }
    }
    acc
}

/// `B_{2q} B_{2t-2q} [ ... ]` summed over `q`, the coefficient that multiplies
/// `DB_{i+j+k-2t}(x)` in the double sum.
fn double_sum_coefficient(cache: &BernoulliCache, i: usize, j: usize, k: usize, two_t: usize) -> Rational {
    let mut total = Rational::zero();
    for two_q in (0..=two_t).step_by(2) {
        let bracket =
            bracket_term(i, j, two_q, two_t) + bracket_term(i, k, two_q, two_t) + bracket_term(j, k, two_q, two_t);
        if bracket.is_zero() {
            continue;
        }
        total += cache.number(two_q) * cache.number(two_t - two_q) * bracket;
    }
    total
}

/// `(-1)^sign / (a b C(a+b, a)) * B_{a+b}`.
fn cross_coefficient(cache: &BernoulliCache, a: usize, b: usize, sign: usize) -> Rational {
    Rational::sign_power(sign as i64) / (Rational::from((a * b) as i64) * binomial_rat((a + b) as i64, a as i64))
        * cache.number(a + b)
}

/// The right side of the single triple-product expansion, without its
/// unspecified constant:
///
/// ```text
/// DB_i(x) DB_j(x) DB_k(x)
///   = sum_{q,t>=0} B_{2q} B_{2t-2q} [ C(i+j-2q,2t-2q)/(i+j-2q) (C(i,2q)/i + C(j,2q)/j)
///                                   + C(i+k-2q,2t-2q)/(i+k-2q) (C(i,2q)/i + C(k,2q)/k)
///                                   + C(j+k-2q,2t-2q)/(j+k-2q) (C(j,2q)/j + C(k,2q)/k) ] DB_{i+j+k-2t}(x)
///     - (-1)^j/(ij C(i+j,i)) B_{i+j} DB_k(x)
///     - (-1)^k/(ik C(i+k,i)) B_{i+k} DB_j(x)
///     - (-1)^k/(jk C(j+k,j)) B_{j+k} DB_i(x)
///     - 1/2 DB_{i+j+k-2}(x) + const
/// ```
pub fn triple_product_rhs(cache: &BernoulliCache, i: usize, j: usize, k: usize) -> Result<Poly> {
    require(i >= 1 && j >= 1 && k >= 1, "triple product needs i, j, k >= 1")?;
    let total = i + j + k;
    let mut combo = DividedCombination::default();
    for two_t in (0..total).step_by(2) {
        let c = double_sum_coefficient(cache, i, j, k, two_t);
        if !c.is_zero() {
            combo.add(total - two_t, c);
        }
    }
    combo.add(k, -cross_coefficient(cache, i, j, j));
    combo.add(j, -cross_coefficient(cache, i, k, k));
    combo.add(i, -cross_coefficient(cache, j, k, k));
    combo.add(total - 2, Rational::frac(-1, 2));
    Ok(combo.expand(cache))
}

pub fn triple_product_lhs(cache: &BernoulliCache, i: usize, j: usize, k: usize) -> Poly {
    &(&divided_poly(cache, i) * &divided_poly(cache, j)) * &divided_poly(cache, k)
}

/// Expected class: constant or zero. A `Constant` result carries the
/// otherwise unstated constant.
pub fn verify_triple_product(cache: &BernoulliCache, i: usize, j: usize, k: usize) -> Result<Discrepancy> {
    let rhs = triple_product_rhs(cache, i, j, k)?;
    Ok(classify_discrepancy(&triple_product_lhs(cache, i, j, k), &rhs))
}

/// The integrated expansion, again without its constant:
///
/// ```text
/// int_0^x DB_i DB_j DB_k dy
///   = sum_{q,t>=0} B_{2q} B_{2t-2q} [ same bracket ] DB_{i+j+k+1-2t}(x) / (i+j+k-2t)
///     - 1/(ijk) ( (-1)^j/C(i+j,i) B_{i+j} DB_{k+1}(x)
///               + (-1)^k/C(i+k,i) B_{i+k} DB_{j+1}(x)
///               + (-1)^k/C(j+k,j) B_{j+k} DB_{i+1}(x) )
///     - DB_{i+j+k-1}(x) / (2(i+j+k-2)) + const
/// ```
pub fn triple_integral_rhs(cache: &BernoulliCache, i: usize, j: usize, k: usize) -> Result<Poly> {
    require(i >= 1 && j >= 1 && k >= 1, "triple integral needs i, j, k >= 1")?;
    let total = i + j + k;
    let mut combo = DividedCombination::default();
    for two_t in (0..total).step_by(2) {
        let c = double_sum_coefficient(cache, i, j, k, two_t);
        if !c.is_zero() {
            combo.add(total + 1 - two_t, c / Rational::from((total - two_t) as i64));
        }
    }
    combo.add(k + 1, -cross_coefficient(cache, i, j, j) / Rational::from(k as i64));
    combo.add(j + 1, -cross_coefficient(cache, i, k, k) / Rational::from(j as i64));
    combo.add(i + 1, -cross_coefficient(cache, j, k, k) / Rational::from(i as i64));
    combo.add(total - 1, Rational::frac(-1, 2 * (total as i64 - 2)));
    Ok(combo.expand(cache))
}

pub fn triple_integral_lhs(cache: &BernoulliCache, i: usize, j: usize, k: usize) -> Poly {
    triple_product_lhs(cache, i, j, k).integrate_from_zero()
}

/// Integrated expansion as written. Expected class: constant or zero.
pub fn verify_triple_integral(cache: &BernoulliCache, i: usize, j: usize, k: usize) -> Result<Discrepancy> {
    let rhs = triple_integral_rhs(cache, i, j, k)?;
    Ok(classify_discrepancy(&triple_integral_lhs(cache, i, j, k), &rhs))
}

/// Differentiates both sides of the integrated expansion; any constant on the
/// right side disappears, so the result must be exactly zero.
pub fn verify_triple_integral_derivative(cache: &BernoulliCache, i: usize, j: usize, k: usize) -> Result<Discrepancy> {
    let rhs = triple_integral_rhs(cache, i, j, k)?.derivative();
    Ok(classify_discrepancy(&triple_integral_lhs(cache, i, j, k).derivative(), &rhs))
}

/// The integrated expansion with the integral of the single-product constant
/// `c` added back as `c * x`. Expected class: constant or zero.
pub fn verify_triple_integral_with_linear_term(
    cache: &BernoulliCache,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Discrepancy> {
    let c = match verify_triple_product(cache, i, j, k)?.constant() {
        Some(c) => c,
        None => return verify_triple_integral(cache, i, j, k),
    };
    let mut rhs = triple_integral_rhs(cache, i, j, k)?;
    rhs.add_scaled(&Poly::x(), &c);
    Ok(classify_discrepancy(&triple_integral_lhs(cache, i, j, k), &rhs))
}

/// `1/3! sum_{i+j+k=N; i,j,k>0} DB_i(x) DB_j(x) DB_k(x)` by direct expansion.
pub fn triple_sum_lhs(cache: &BernoulliCache, big_n: usize) -> Poly {
    let mut acc = Poly::zero();
    for i in 1..big_n {
        for j in 1..big_n - i {
            acc = acc + triple_product_lhs(cache, i, j, big_n - i - j);
        }
    }
    acc.scale(&Rational::frac(1, 6))
}

/// The harmonic index used in the closing coefficient of [`triple_sum_rhs`].
pub fn triple_sum_harmonic_index(big_n: usize) -> usize {
    big_n - 1
}

/// ```text
/// sum_{t>0} C(N-1,2t) DB_{N-2t}(x) ( DB_{2t} (H_{N-1} - H_{2t}) + 1/2! sum_{i+j=2t; i,j>0} DB_i DB_j )
///   - 1/12 C(N-1,2) DB_{N-2}(x) + (H_n^2 - H_{n,2})/2 DB_N(x) + const,   n = N - 1
/// ```
pub fn triple_sum_rhs(cache: &BernoulliCache, big_n: usize) -> Result<Poly> {
    require(big_n >= 3, "triple sum needs N >= 3")?;
    let h_top = harmonic(big_n as u64 - 1, 1);
    let mut combo = DividedCombination::default();
    for two_t in (2..big_n).step_by(2) {
        let Some(outer) = binomial_in_range(big_n as i64 - 1, two_t as i64) else {
            continue;
        };
        let pair_sum: Rational = (1..two_t).map(|a| divided(cache, a) * divided(cache, two_t - a)).sum();
        let inner = divided(cache, two_t) * (&h_top - harmonic(two_t as u64, 1)) + pair_sum * Rational::frac(1, 2);
        combo.add(big_n - two_t, outer * inner);
    }
    combo.add(big_n - 2, -Rational::frac(1, 12) * binomial_rat(big_n as i64 - 1, 2));
    let n = triple_sum_harmonic_index(big_n) as u64;
    let h = harmonic(n, 1);
    combo.add(big_n, (&h * &h - harmonic(n, 2)) * Rational::frac(1, 2));
    Ok(combo.expand(cache))
}

/// Expected class: constant or zero, against the direct expansion.
pub fn verify_triple_sum(cache: &BernoulliCache, big_n: usize) -> Result<Discrepancy> {
    let rhs = triple_sum_rhs(cache, big_n)?;
    Ok(classify_discrepancy(&triple_sum_lhs(cache, big_n), &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cache() -> std::sync::Arc<BernoulliCache> {
        BernoulliCache::global()
    }

    #[test]
    fn product_examples() {
        let c = cache();
        for (i, j, k) in [(1, 1, 1), (2, 2, 2), (3, 4, 5)] {
            assert!(verify_triple_product(&c, i, j, k).unwrap().is_constant_or_zero(), "{i},{j},{k}");
        }
        // LHS (x - 1/2)^3
        let h = Poly::from_coeffs(vec![Rational::frac(-1, 2), Rational::one()]);
        assert_eq!(triple_product_lhs(&c, 1, 1, 1), h.pow(3));
        assert!(verify_triple_product(&c, 0, 1, 1).is_err());
    }

    #[test]
    fn flipping_a_cross_sign_is_caught() {
        // + in place of -(-1)^j in the first cross term is not an identity
        let c = cache();
        let (i, j, k) = (1, 3, 2);
        let mut rhs = triple_product_rhs(&c, i, j, k).unwrap();
        let wrong = cross_coefficient(&c, i, j, j) * Rational::from(-2);
        rhs.add_scaled(&divided_poly(&c, k), &-wrong);
        assert!(classify_discrepancy(&triple_product_lhs(&c, i, j, k), &rhs).is_nonconstant());
    }

    #[test]
    fn integral_as_written_misses_a_linear_term() {
        let c = cache();
        assert!(verify_triple_integral(&c, 1, 1, 1).unwrap().is_constant_or_zero());
        let product_constant = verify_triple_product(&c, 1, 1, 2).unwrap().constant().unwrap();
        assert!(!product_constant.is_zero());
        match verify_triple_integral(&c, 1, 1, 2).unwrap() {
            Discrepancy::NonConstant { difference, witness } => {
                assert_eq!(witness, 1);
                assert_eq!(difference.degree(), Some(1));
                assert_eq!(difference.coeff(1), product_constant);
            }
            other => panic!("unexpected {other:?}"),
        }
        for (i, j, k) in [(1, 1, 2), (2, 3, 2), (1, 2, 3)] {
            assert!(verify_triple_integral_with_linear_term(&c, i, j, k).unwrap().is_constant_or_zero());
        }
    }

    #[test]
    fn derivative_check_equals_product_constant() {
        let c = cache();
        for (i, j, k) in [(1, 1, 1), (1, 2, 3), (2, 3, 2)] {
            let product = verify_triple_product(&c, i, j, k).unwrap();
            let derivative = verify_triple_integral_derivative(&c, i, j, k).unwrap();
            assert_eq!(derivative, product, "{i},{j},{k}");
        }
    }

    #[test]
    fn triple_sum_examples() {
        let c = cache();
        for n in [3, 4, 12] {
            assert!(verify_triple_sum(&c, n).unwrap().is_constant_or_zero(), "N = {n}");
        }
        // N = 3: the single ordered triple (1,1,1), divided by 3!
        let db1 = divided_poly(&c, 1);
        assert_eq!(triple_sum_lhs(&c, 3), db1.pow(3).scale(&Rational::frac(1, 6)));
        assert!(verify_triple_sum(&c, 2).is_err());
    }
}
