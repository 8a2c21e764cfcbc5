//! Symmetries of power sums and Bernoulli polynomials, products of two
//! Bernoulli polynomials, and the scalar convolution identities that follow
//! from them.

use crate::arith::{binomial_rat, factorial, Rational};
use crate::bernoulli::{harmonic, BernoulliCache};
use crate::error::Result;
use crate::poly::{classify_discrepancy, Discrepancy, Poly};

use super::{divided, divided_poly, require};

/// `F_n(y) = (-1)^(n+1) F_n(-1-y)`.
pub fn verify_powersum_symmetry(cache: &BernoulliCache, n: usize) -> Result<Discrepancy> {
    require(n >= 1, "power-sum symmetry needs n >= 1")?;
    let f = cache.power_sum_poly(n);
    let reflected = f.compose(&Poly::from_i64(&[-1, -1])).scale(&Rational::sign_power(n as i64 + 1));
    Ok(classify_discrepancy(&f, &reflected))
}

/// `B_n(x) = (-1)^n B_n(1-x)`.
pub fn verify_bernoulli_symmetry(cache: &BernoulliCache, n: usize) -> Result<Discrepancy> {
    require(n >= 1, "Bernoulli symmetry needs n >= 1")?;
    let b = cache.poly(n);
    let reflected = b.compose(&Poly::from_i64(&[1, -1])).scale(&Rational::sign_power(n as i64));
    Ok(classify_discrepancy(&b, &reflected))
}

/// Coefficient `C(i,2l)/i + C(j,2l)/j` shared by both two-factor product formulas.
fn pair_weight(i: usize, j: usize, two_l: usize) -> Rational {
    binomial_rat(i as i64, two_l as i64) / Rational::from(i as i64)
        + binomial_rat(j as i64, two_l as i64) / Rational::from(j as i64)
}

/// Both sides of
///
/// ```text
/// DB_i(x) DB_j(x) - DB_i DB_j
///   = sum_{l>=0} (C(i,2l)/i + C(j,2l)/j) B_{2l} (DB_{i+j-2l}(x) - DB_{i+j-2l})
/// ```
///
/// where `DB_n = B_n / n`. Terms with `i+j-2l < 1` are dropped.
pub fn almost_nielsen_sides(cache: &BernoulliCache, i: usize, j: usize) -> Result<(Poly, Poly)> {
    require(i >= 1 && j >= 1, "almost-Nielsen needs i, j >= 1")?;
    let lhs = &divided_poly(cache, i) * &divided_poly(cache, j) - Poly::constant(divided(cache, i) * divided(cache, j));
    let mut rhs = Poly::zero();
    for two_l in (0..i + j).step_by(2) {
        let weight = pair_weight(i, j, two_l);
        if weight.is_zero() {
            continue;
        }
        let idx = i + j - two_l;
        let term = divided_poly(cache, idx) - Poly::constant(divided(cache, idx));
        rhs.add_scaled(&term, &(weight * cache.number(two_l)));
    }
    Ok((lhs, rhs))
}

pub fn verify_almost_nielsen(cache: &BernoulliCache, i: usize, j: usize) -> Result<Discrepancy> {
    let (lhs, rhs) = almost_nielsen_sides(cache, i, j)?;
    Ok(classify_discrepancy(&lhs, &rhs))
}

/// Both sides of
///
/// ```text
/// DB_i(x) DB_j(x) = sum_{l>=0} (C(i,2l)/i + C(j,2l)/j) B_{2l} DB_{i+j-2l}(x)
///                   + (-1)^(i-1) (i-1)! (j-1)! / (i+j)! B_{i+j}
/// ```
pub fn nielsen_sides(cache: &BernoulliCache, i: usize, j: usize) -> Result<(Poly, Poly)> {
    require(i >= 1 && j >= 1, "Nielsen needs i, j >= 1")?;
    let lhs = &divided_poly(cache, i) * &divided_poly(cache, j);
    let mut rhs = Poly::zero();
    for two_l in (0..i + j).step_by(2) {
        let weight = pair_weight(i, j, two_l);
        if weight.is_zero() {
            continue;
        }
        rhs.add_scaled(&divided_poly(cache, i + j - two_l), &(weight * cache.number(two_l)));
    }
    let tail = Rational::sign_power(i as i64 - 1)
        * Rational::from_integer(factorial(i as u64 - 1) * factorial(j as u64 - 1))
        / Rational::from_integer(factorial((i + j) as u64))
        * cache.number(i + j);
    rhs.add_scaled(&Poly::one(), &tail);
    Ok((lhs, rhs))
}

pub fn verify_nielsen(cache: &BernoulliCache, i: usize, j: usize) -> Result<Discrepancy> {
    let (lhs, rhs) = nielsen_sides(cache, i, j)?;
    Ok(classify_discrepancy(&lhs, &rhs))
}

/// The two product formulas differ only in constant bookkeeping: the Nielsen
/// right side minus the almost-Nielsen right side must be exactly the constant
/// `DB_i DB_j`.
pub fn verify_nielsen_agreement(cache: &BernoulliCache, i: usize, j: usize) -> Result<Discrepancy> {
    let (_, nielsen_rhs) = nielsen_sides(cache, i, j)?;
    let (_, almost_rhs) = almost_nielsen_sides(cache, i, j)?;
    let bookkeeping = Poly::constant(divided(cache, i) * divided(cache, j));
    Ok(classify_discrepancy(&(nielsen_rhs - almost_rhs), &bookkeeping))
}

/// ```text
/// B_{n+m} + 1/(n+1) sum_{k=0}^{n} C(n+1,n-k) B_{n-k} B_{m+k+1}
///         + 1/(m+1) sum_{l=0}^{m} C(m+1,m-l) B_{m-l} B_{n+l+1} = 0
/// ```
pub fn agoh_value(cache: &BernoulliCache, n: usize, m: usize) -> Rational {
    let half = |n: usize, m: usize| -> Rational {
        let s: Rational = (0..=n)
            .map(|k| binomial_rat(n as i64 + 1, (n - k) as i64) * cache.number(n - k) * cache.number(m + k + 1))
            .sum();
        s / Rational::from(n as i64 + 1)
    };
    cache.number(n + m) + half(n, m) + half(m, n)
}

pub fn verify_agoh(cache: &BernoulliCache, n: usize, m: usize) -> Discrepancy {
    Discrepancy::of_scalars(&agoh_value(cache, n, m), &Rational::zero())
}

/// `sum_{r=0}^{n} (-1)^r / C(n,r) = (1 + (-1)^n) (n+1)/(n+2)`.
pub fn verify_altern_binom(n: usize) -> Discrepancy {
    let lhs: Rational = (0..=n).map(|r| Rational::sign_power(r as i64) / binomial_rat(n as i64, r as i64)).sum();
    let rhs = (Rational::one() + Rational::sign_power(n as i64)) * Rational::frac(n as i64 + 1, n as i64 + 2);
    Discrepancy::of_scalars(&lhs, &rhs)
}

/// Both sides of
///
/// ```text
/// N/2 (-B_{N-1}(x) + sum_{k=1}^{N-1} DB_k(x) DB_{N-k}(x))
///   = sum_{k=1}^{N} C(N,k) DB_k B_{N-k}(x) + H_{N-1} B_N(x)
/// ```
pub fn gessel_sides(cache: &BernoulliCache, big_n: usize) -> Result<(Poly, Poly)> {
    require(big_n >= 2, "Gessel needs N >= 2")?;
    let mut inner = -cache.poly(big_n - 1).as_ref();
    for k in 1..big_n {
        inner = inner + &divided_poly(cache, k) * &divided_poly(cache, big_n - k);
    }
    let lhs = inner.scale(&Rational::frac(big_n as i64, 2));
    let mut rhs = cache.poly(big_n).scale(&harmonic(big_n as u64 - 1, 1));
    for k in 1..=big_n {
        let c = binomial_rat(big_n as i64, k as i64) * divided(cache, k);
        rhs.add_scaled(&cache.poly(big_n - k), &c);
    }
    Ok((lhs, rhs))
}

pub fn verify_gessel(cache: &BernoulliCache, big_n: usize) -> Result<Discrepancy> {
    let (lhs, rhs) = gessel_sides(cache, big_n)?;
    Ok(classify_discrepancy(&lhs, &rhs))
}

/// Both sides of
///
/// ```text
/// sum_{k=0}^{N} B_k(x) B_{N-k}(x) = 2/(N+2) sum_{t>=0} C(N+2,2t+2) B_{2t} B_{N-2t}(x)
/// ```
pub fn kim_pair_sides(cache: &BernoulliCache, big_n: usize) -> (Poly, Poly) {
    let mut lhs = Poly::zero();
    for k in 0..=big_n {
        lhs = lhs + cache.poly(k).as_ref() * cache.poly(big_n - k).as_ref();
    }
    let mut rhs = Poly::zero();
    for two_t in (0..=big_n).step_by(2) {
        let c = binomial_rat(big_n as i64 + 2, two_t as i64 + 2) * cache.number(two_t);
        rhs.add_scaled(&cache.poly(big_n - two_t), &c);
    }
    let rhs = rhs.scale(&Rational::frac(2, big_n as i64 + 2));
    (lhs, rhs)
}

pub fn verify_kim_pair_sum(cache: &BernoulliCache, big_n: usize) -> Discrepancy {
    let (lhs, rhs) = kim_pair_sides(cache, big_n);
    classify_discrepancy(&lhs, &rhs)
}

/// Both sides of
///
/// ```text
/// sum_{k=2}^{N-2} DB_k DB_{N-k} = sum_{k=2}^{N-2} C(N,k) DB_k DB_{N-k} + 2 H_N DB_N
/// ```
pub fn miki_sides(cache: &BernoulliCache, big_n: usize) -> Result<(Rational, Rational)> {
    require(big_n >= 4, "Miki needs N >= 4")?;
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for k in 2..=big_n - 2 {
        let prod = divided(cache, k) * divided(cache, big_n - k);
        rhs += binomial_rat(big_n as i64, k as i64) * &prod;
        lhs += prod;
    }
    rhs += Rational::from(2) * harmonic(big_n as u64, 1) * divided(cache, big_n);
    Ok((lhs, rhs))
}

pub fn verify_miki(cache: &BernoulliCache, big_n: usize) -> Result<Discrepancy> {
    let (lhs, rhs) = miki_sides(cache, big_n)?;
    Ok(Discrepancy::of_scalars(&lhs, &rhs))
}

/// Both sides of
///
/// ```text
/// (N+2) sum_{k=2}^{N-2} B_k B_{N-k} = 2 sum_{k=2}^{N-2} C(N+2,k) B_k B_{N-k} + N(N+1) B_N
/// ```
pub fn matiyasevich_sides(cache: &BernoulliCache, big_n: usize) -> Result<(Rational, Rational)> {
    require(big_n >= 4, "Matiyasevich needs N >= 4")?;
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for k in 2..=big_n - 2 {
        let prod = cache.number(k) * cache.number(big_n - k);
        rhs += binomial_rat(big_n as i64 + 2, k as i64) * &prod;
        lhs += prod;
    }
    let n = big_n as i64;
    let lhs = lhs * Rational::from(n + 2);
    let rhs = rhs * Rational::from(2) + Rational::from(n * (n + 1)) * cache.number(big_n);
    Ok((lhs, rhs))
}

pub fn verify_matiyasevich(cache: &BernoulliCache, big_n: usize) -> Result<Discrepancy> {
    let (lhs, rhs) = matiyasevich_sides(cache, big_n)?;
    Ok(Discrepancy::of_scalars(&lhs, &rhs))
}

fn compare_pairs(got: (Rational, Rational), want: (Rational, Rational)) -> Discrepancy {
    match Discrepancy::of_scalars(&got.0, &want.0) {
        Discrepancy::Zero => Discrepancy::of_scalars(&got.1, &want.1),
        other => other,
    }
}

/// At `x = 0` and even `N >= 4`, each side of the Gessel identity is exactly
/// `N/2` times the corresponding side of Miki's identity. Zero iff both
/// rescaled sides match.
pub fn verify_gessel_miki_ladder(cache: &BernoulliCache, big_n: usize) -> Result<Discrepancy> {
    require(big_n >= 4 && big_n.is_multiple_of(2), "Gessel-Miki ladder needs even N >= 4")?;
    let (lhs, rhs) = gessel_sides(cache, big_n)?;
    let zero = Rational::zero();
    let rescale = Rational::frac(2, big_n as i64);
    let at_zero = (lhs.eval(&zero) * &rescale, rhs.eval(&zero) * &rescale);
    Ok(compare_pairs(at_zero, miki_sides(cache, big_n)?))
}

/// At `x = 0` and even `N >= 4`, the map `v -> (N+2)(v - 2 B_N)` carries each
/// side of the pair-sum identity to the corresponding side of Matiyasevich's.
pub fn verify_kim_matiyasevich_ladder(cache: &BernoulliCache, big_n: usize) -> Result<Discrepancy> {
    require(big_n >= 4 && big_n.is_multiple_of(2), "pair-sum/Matiyasevich ladder needs even N >= 4")?;
    let (lhs, rhs) = kim_pair_sides(cache, big_n);
    let zero = Rational::zero();
    let shift = Rational::from(2) * cache.number(big_n);
    let factor = Rational::from(big_n as i64 + 2);
    let map = |v: Rational| (v - &shift) * &factor;
    let at_zero = (map(lhs.eval(&zero)), map(rhs.eval(&zero)));
    Ok(compare_pairs(at_zero, matiyasevich_sides(cache, big_n)?))
}
