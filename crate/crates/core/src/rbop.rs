//! Rota-Baxter operators on the one-generated commutative algebra `F[a]`.
//!
//! An operator is stored extensionally: its weight plus the images of the
//! basis monomials `a^n`, computed lazily and memoized. Linear extension over
//! the monomial basis gives [`RbOperator::apply`]. The three constructions are
//! the summation operator ([`standard_rb`], weight `-1`, `a^n -> F_n(a)`), the
//! involution [`phi`] (`P -> -P - weight * id`) and [`scale`] (`P -> mu * P`,
//! which has weight `mu * weight`).
//!
//! Operator axiom, for weight `w`:
//!
//! ```text
//! R(x) R(y) = R( R(x) y + x R(y) + w x y )
//! ```

use std::fmt;
use std::sync::{Arc, RwLock};

use crate::arith::Rational;
use crate::bernoulli::BernoulliCache;
use crate::error::{Error, Result};
use crate::poly::{classify_discrepancy, Discrepancy, Poly};

/// Elements of `F[a]` are polynomials in the generator `a`.
pub type AlgebraElement = Poly;

#[derive(Debug)]
enum Source {
    Summation(Arc<BernoulliCache>),
    Phi(RbOperator),
    Scaled(RbOperator, Rational),
}

#[derive(Debug)]
struct Inner {
    weight: Rational,
    label: String,
    source: Source,
    images: RwLock<Vec<Arc<Poly>>>,
}

/// A linear operator on `F[a]` with a weight, cheap to clone.
#[derive(Clone, Debug)]
pub struct RbOperator(Arc<Inner>);

impl RbOperator {
    fn build(weight: Rational, label: String, source: Source) -> Self {
        RbOperator(Arc::new(Inner { weight, label, source, images: RwLock::new(Vec::new()) }))
    }

    /// The weight `-1` summation operator over the given Bernoulli cache.
    pub fn summation(cache: Arc<BernoulliCache>) -> Self {
        Self::build(-Rational::one(), "standard".to_string(), Source::Summation(cache))
    }

    pub fn weight(&self) -> &Rational {
        &self.0.weight
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// `R(a^n)`.
    pub fn image(&self, n: usize) -> Arc<Poly> {
        if let Some(p) = self.0.images.read().expect("image lock poisoned").get(n) {
            return p.clone();
        }
        let mut images = self.0.images.write().expect("image lock poisoned");
        while images.len() <= n {
            let k = images.len();
            let img = match &self.0.source {
                Source::Summation(cache) => cache.power_sum_poly(k),
                Source::Phi(base) => {
                    // -R(a^k) - w a^k
                    let mut p = -base.image(k).as_ref();
                    p.add_scaled(&Poly::monomial(Rational::one(), k), &-&self.0.weight);
                    Arc::new(p)
                }
                Source::Scaled(base, mu) => Arc::new(base.image(k).scale(mu)),
            };
            images.push(img);
        }
        images[n].clone()
    }

    /// `R(1)`, the element the operator singles out as its own generator.
    pub fn unit_image(&self) -> Arc<Poly> {
        self.image(0)
    }

    /// Linear extension: `sum_n coeff_n(p) R(a^n)`.
    pub fn apply(&self, p: &AlgebraElement) -> AlgebraElement {
        let mut out = Poly::zero();
        for (n, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.image(n), c);
            }
        }
        out
    }

    pub fn phi(&self) -> RbOperator {
        Self::build(self.0.weight.clone(), format!("phi({})", self.0.label), Source::Phi(self.clone()))
    }

    pub fn scale(&self, mu: &Rational) -> Result<RbOperator> {
        if mu.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(Self::build(
            &self.0.weight * mu,
            format!("scale({}, {mu})", self.0.label),
            Source::Scaled(self.clone(), mu.clone()),
        ))
    }
}

impl fmt::Display for RbOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (weight {})", self.0.label, self.0.weight)
    }
}

/// The summation operator over the global Bernoulli cache.
pub fn standard_rb() -> RbOperator {
    RbOperator::summation(BernoulliCache::global())
}

pub fn apply(r: &RbOperator, p: &AlgebraElement) -> AlgebraElement {
    r.apply(p)
}

pub fn phi(r: &RbOperator) -> RbOperator {
    r.phi()
}

pub fn scale(r: &RbOperator, mu: &Rational) -> Result<RbOperator> {
    r.scale(mu)
}

fn a_pow(n: usize) -> Poly {
    Poly::monomial(Rational::one(), n)
}

/// The operator axiom on the basis pair `(a^n, a^m)`.
pub fn check_axiom(r: &RbOperator, n: usize, m: usize) -> Discrepancy {
    let (rn, rm) = (r.image(n), r.image(m));
    let lhs = rn.as_ref() * rm.as_ref();
    let mut inner = rn.shift(m);
    inner.add_scaled(&rm.shift(n), &Rational::one());
    inner.add_scaled(&a_pow(n + m), r.weight());
    classify_discrepancy(&lhs, &r.apply(&inner))
}

/// Closed form of the images of powers of `g = R(1)`:
///
/// ```text
/// R(g^n) = (-w)^(n+1) F_n(-g / w)
/// ```
///
/// Both sides are expressed in the standard generator `a` by substituting
/// `g = R(1)`; for the summation operator `g = a` and the substitution is the
/// identity. Weight zero is inapplicable.
pub fn check_statement2(r: &RbOperator, n: usize, cache: &BernoulliCache) -> Result<Discrepancy> {
    let w = r.weight();
    if w.is_zero() {
        return Err(Error::Domain(format!("closed form needs a nonzero weight; {r} has weight 0")));
    }
    let g = r.unit_image();
    let lhs = r.apply(&g.pow(n as u32));
    let arg = g.scale(&(-w.recip()?));
    let factor = (-w).pow(n as i32 + 1)?;
    let rhs = cache.power_sum_poly(n).compose(&arg).scale(&factor);
    Ok(classify_discrepancy(&lhs, &rhs))
}

/// Whether [`check_statement2`] had to rewrite the generator, i.e. `R(1) != a`.
pub fn statement2_substitutes_generator(r: &RbOperator) -> bool {
    *r.unit_image() != Poly::x()
}

/// `R(a^n) - a^n = (-1)^(n+1) (phi(R)(b^n) - b^n)` with `b = phi(R)(1)`,
/// for the summation operator `R`.
pub fn check_lemma(n: usize) -> Result<Discrepancy> {
    check_lemma_for(&standard_rb(), n)
}

pub fn check_lemma_for(r: &RbOperator, n: usize) -> Result<Discrepancy> {
    if n == 0 {
        return Err(Error::Domain("lemma requires n >= 1".into()));
    }
    let q = r.phi();
    let b = q.unit_image();
    let lhs = r.image(n).as_ref() - &a_pow(n);
    let bn = b.pow(n as u32);
    let rhs = (q.apply(&bn) - &bn).scale(&Rational::sign_power(n as i64 + 1));
    Ok(classify_discrepancy(&lhs, &rhs))
}

/// The three-factor consequence of the axiom on `(a^n, a^m, a^l)`:
///
/// ```text
/// R(x)R(y)R(z) = R( R(x)R(z) y + R(y)R(z) x + R(x)R(y) z
///                   + w (R(x) y z + R(y) x z + R(z) x y) + w^2 x y z )
/// ```
///
/// For `w = -1` this is term for term the usual weight `-1` expansion.
pub fn check_triple_expansion(r: &RbOperator, n: usize, m: usize, l: usize) -> Discrepancy {
    let (rn, rm, rl) = (r.image(n), r.image(m), r.image(l));
    let lhs = &(rn.as_ref() * rm.as_ref()) * rl.as_ref();

    let w = r.weight();
    let mut inner = (rn.as_ref() * rl.as_ref()).shift(m);
    inner.add_scaled(&(rm.as_ref() * rl.as_ref()).shift(n), &Rational::one());
    inner.add_scaled(&(rn.as_ref() * rm.as_ref()).shift(l), &Rational::one());
    inner.add_scaled(&rn.shift(m + l), w);
    inner.add_scaled(&rm.shift(n + l), w);
    inner.add_scaled(&rl.shift(n + m), w);
    inner.add_scaled(&a_pow(n + m + l), &(w * w));
    classify_discrepancy(&lhs, &r.apply(&inner))
}
