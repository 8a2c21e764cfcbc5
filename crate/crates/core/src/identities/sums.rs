//! Sums of products of Bernoulli polynomials over compositions, their
//! decomposition in the Bernoulli basis, and two binomial-harmonic summation
//! formulas.

use crate::arith::{binomial_rat, Rational};
use crate::bernoulli::{harmonic, BernoulliCache};
use crate::error::Result;
use crate::poly::{classify_discrepancy, Discrepancy, Poly};

use super::classical::kim_pair_sides;
use super::require;

/// All compositions of `n` into `parts` parts, zero parts allowed unless
/// `positive`, in lexicographic order.
pub fn compositions(n: usize, parts: usize, positive: bool) -> Vec<Vec<usize>> {
    fn go(n: usize, parts: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if n >= min {
                prefix.push(n);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for first in min..=n {
            prefix.push(first);
            go(n - first, parts - 1, min, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(n, parts, usize::from(positive), &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// `S(r, n) = sum_{i_1+...+i_r=n} B_{i_1}(x)...B_{i_r}(x)`, every composition
/// expanded separately. With `positive`, all indices must be `> 0`.
pub fn sum_products_direct(cache: &BernoulliCache, r: usize, n: usize, positive: bool) -> Result<Poly> {
    require(r >= 1, "sum of products needs r >= 1")?;
    let mut acc = Poly::zero();
    for comp in compositions(n, r, positive) {
        let term = comp.iter().fold(Poly::one(), |p, &i| &p * cache.poly(i).as_ref());
        acc = acc + term;
    }
    Ok(acc)
}

/// `sum_{i_1+...+i_r=s} (B_{i_1}(1)...B_{i_r}(1) - B_{i_1}...B_{i_r})`.
fn composition_gap(cache: &BernoulliCache, s: usize, r: usize) -> Rational {
    compositions(s, r, false)
        .iter()
        .map(|comp| {
            let at_one: Rational = comp.iter().map(|&i| cache.number_at_one(i)).product();
            let at_zero: Rational = comp.iter().map(|&i| cache.number(i)).product();
            at_one - at_zero
        })
        .sum()
}

/// ```text
/// S(r, n) = sum_{k=1}^{n} B_k(x) C(n+r,k)/(n+r) sum_{i_1+...+i_r=n-k+1} (B_{i_1}(1)...B_{i_r}(1) - B_{i_1}...B_{i_r}) + const
/// ```
pub fn sum_decomposition_rhs(cache: &BernoulliCache, r: usize, n: usize) -> Result<Poly> {
    require(r >= 1, "decomposition needs r >= 1")?;
    let mut rhs = Poly::zero();
    for k in 1..=n {
        let c = binomial_rat((n + r) as i64, k as i64) / Rational::from((n + r) as i64)
            * composition_gap(cache, n - k + 1, r);
        rhs.add_scaled(&cache.poly(k), &c);
    }
    Ok(rhs)
}

/// Expected class: constant or zero.
pub fn verify_sum_decomposition(cache: &BernoulliCache, r: usize, n: usize) -> Result<Discrepancy> {
    let lhs = sum_products_direct(cache, r, n, false)?;
    Ok(classify_discrepancy(&lhs, &sum_decomposition_rhs(cache, r, n)?))
}

/// The `r = 3` decomposition in closed form:
///
/// ```text
/// C(n+2,2) B_n(x) + 1/4 C(n+2,4) B_{n-2}(x)
///   + 3/(n+3) sum_{t>=2} C(n+3,n-2t) B_{n-2t}(x) sum_{q=0}^{t} B_{2q} B_{2t-2q}
/// ```
pub fn kim3_rhs(cache: &BernoulliCache, n: usize) -> Poly {
    let mut rhs = cache.poly(n).scale(&binomial_rat(n as i64 + 2, 2));
    if n >= 2 {
        rhs.add_scaled(&cache.poly(n - 2), &(Rational::frac(1, 4) * binomial_rat(n as i64 + 2, 4)));
    }
    let mut tail = Poly::zero();
    for t in (2..).take_while(|t| 2 * t <= n) {
        let inner: Rational = (0..=t).map(|q| cache.number(2 * q) * cache.number(2 * t - 2 * q)).sum();
        let c = binomial_rat(n as i64 + 3, (n - 2 * t) as i64) * inner;
        tail.add_scaled(&cache.poly(n - 2 * t), &c);
    }
    rhs.add_scaled(&tail, &Rational::frac(3, n as i64 + 3));
    rhs
}

/// The intermediate form
/// `-2/(n+3) sum_{t>=0} C(n+3,n-2t) (sum_{a+b+c=2t+1} B_a B_b B_c) B_{n-2t}(x)`.
pub fn kim3_middle(cache: &BernoulliCache, n: usize) -> Poly {
    let mut acc = Poly::zero();
    for t in (0..).take_while(|t| 2 * t <= n) {
        let inner: Rational = compositions(2 * t + 1, 3, false)
            .iter()
            .map(|c| c.iter().map(|&i| cache.number(i)).product::<Rational>())
            .sum();
        acc.add_scaled(&cache.poly(n - 2 * t), &(binomial_rat(n as i64 + 3, (n - 2 * t) as i64) * inner));
    }
    acc.scale(&Rational::frac(-2, n as i64 + 3))
}

/// Expected class: constant or zero.
pub fn verify_kim3(cache: &BernoulliCache, n: usize) -> Result<Discrepancy> {
    let lhs = sum_products_direct(cache, 3, n, false)?;
    Ok(classify_discrepancy(&lhs, &kim3_rhs(cache, n)))
}

/// The `r = 2` decomposition against the pair-sum closed form; they agree up
/// to a constant.
pub fn verify_decomposition_pair_agreement(cache: &BernoulliCache, n: usize) -> Result<Discrepancy> {
    let decomposition = sum_decomposition_rhs(cache, 2, n)?;
    let (_, pair_closed_form) = kim_pair_sides(cache, n);
    Ok(classify_discrepancy(&decomposition, &pair_closed_form))
}

/// `sum_{s=1}^{n-1} C(s,m) H_s = C(n,m+1) (H_n - 1/(m+1))`.
pub fn verify_gkp_binomial_harmonic(n: usize, m: usize) -> Result<Discrepancy> {
    require(n >= 1 && m < n, "needs 1 <= m+1 <= n")?;
    let lhs: Rational = (1..n).map(|s| binomial_rat(s as i64, m as i64) * harmonic(s as u64, 1)).sum();
    let rhs = binomial_rat(n as i64, m as i64 + 1) * (harmonic(n as u64, 1) - Rational::frac(1, m as i64 + 1));
    Ok(Discrepancy::of_scalars(&lhs, &rhs))
}

/// `sum_{s=1}^{n} H_s / s = (H_n^2 + H_{n,2}) / 2`.
pub fn verify_gkp_harmonic_square(n: usize) -> Result<Discrepancy> {
    require(n >= 1, "needs n >= 1")?;
    let lhs: Rational = (1..=n).map(|s| harmonic(s as u64, 1) / Rational::from(s as i64)).sum();
    let h = harmonic(n as u64, 1);
    let rhs = (&h * &h + harmonic(n as u64, 2)) * Rational::frac(1, 2);
    Ok(Discrepancy::of_scalars(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cache() -> std::sync::Arc<BernoulliCache> {
        BernoulliCache::global()
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(compositions(2, 3, false).len(), 6);
        assert_eq!(compositions(4, 3, true), vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        assert_eq!(compositions(0, 2, false), vec![vec![0, 0]]);
        assert!(compositions(1, 2, true).is_empty());
        assert_eq!(compositions(5, 1, false), vec![vec![5]]);
    }

    #[test]
    fn direct_sum_examples() {
        let c = cache();
        for n in 0..6 {
            assert_eq!(sum_products_direct(&c, 1, n, false).unwrap(), *c.poly(n));
        }
        assert_eq!(sum_products_direct(&c, 2, 0, false).unwrap(), Poly::one());
        // compositions of 2 into 3 parts: three of type (2,0,0), three of type (1,1,0)
        let b1 = c.poly(1);
        let expected = c.poly(2).scale(&Rational::from(3)) + (b1.as_ref() * b1.as_ref()).scale(&Rational::from(3));
        assert_eq!(sum_products_direct(&c, 3, 2, false).unwrap(), expected);
        assert_eq!(sum_products_direct(&c, 3, 2, true).unwrap(), Poly::zero());
        assert!(sum_products_direct(&c, 0, 2, false).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let c = cache();
        for n in 0..=10 {
            assert!(verify_sum_decomposition(&c, 2, n).unwrap().is_constant_or_zero());
            assert!(verify_decomposition_pair_agreement(&c, n).unwrap().is_constant_or_zero());
        }
        assert!(verify_sum_decomposition(&c, 3, 4).unwrap().is_constant_or_zero());
        assert_eq!(verify_sum_decomposition(&c, 1, 5).unwrap(), Discrepancy::Zero);
    }

    #[test]
    fn kim3_examples() {
        let c = cache();
        for n in [0, 2, 10] {
            assert!(verify_kim3(&c, n).unwrap().is_constant_or_zero(), "n = {n}");
        }
        for n in 0..=8 {
            let direct = sum_products_direct(&c, 3, n, false).unwrap();
            assert!(classify_discrepancy(&direct, &kim3_middle(&c, n)).is_constant_or_zero());
        }
    }

    #[test]
    fn gkp_examples() {
        for (n, m) in [(3, 1), (5, 0), (8, 2)] {
            assert_eq!(verify_gkp_binomial_harmonic(n, m).unwrap(), Discrepancy::Zero);
        }
        for n in [1, 3, 10] {
            assert_eq!(verify_gkp_harmonic_square(n).unwrap(), Discrepancy::Zero);
        }
        assert!(verify_gkp_binomial_harmonic(2, 2).is_err());
    }
}
