//! Identity verifiers, the catalog that names them, and verification reports.
//!
//! Every verifier expands both sides of an identity exactly and classifies
//! the difference as a [`Discrepancy`]. The [`catalog`] lists each verifier
//! once, with its parameter names, constraints, default sweep ranges and the
//! class of discrepancy that counts as a pass.

pub mod classical;
pub mod report;
pub mod sums;
pub mod triple;

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use crate::arith::Rational;
use crate::bernoulli::{power_sum_literal, BernoulliCache};
use crate::error::{Error, Result};
use crate::poly::{classify_discrepancy, Discrepancy, Poly};
use crate::rbop::{self, RbOperator};

pub use report::VerificationReport;

pub(crate) fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg.to_string()))
    }
}

/// `DB_n`; callers guarantee `n >= 1`.
pub(crate) fn divided(cache: &BernoulliCache, n: usize) -> Rational {
    cache.divided_number(n).expect("divided index >= 1")
}

/// `DB_n(x)`; callers guarantee `n >= 1`.
pub(crate) fn divided_poly(cache: &BernoulliCache, n: usize) -> Poly {
    cache.divided_poly(n).expect("divided index >= 1")
}

/// Which discrepancy classes count as a pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Expected {
    Zero,
    /// The identity holds up to an additive constant.
    ConstantOrZero,
}

impl Expected {
    pub fn accepts(self, d: &Discrepancy) -> bool {
        match self {
            Expected::Zero => d.is_zero(),
            Expected::ConstantOrZero => d.is_constant_or_zero(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Expected::Zero => "zero",
            Expected::ConstantOrZero => "constant-or-zero",
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The operators the catalog checks, sharing one Bernoulli cache.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    Standard,
    Phi,
    ScaledNeg1,
    Scaled2,
    ScaledNeg3Half,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 5] = [
        OperatorKind::Standard,
        OperatorKind::Phi,
        OperatorKind::ScaledNeg1,
        OperatorKind::Scaled2,
        OperatorKind::ScaledNeg3Half,
    ];

    pub fn scale_factor(self) -> Option<Rational> {
        match self {
            OperatorKind::ScaledNeg1 => Some(Rational::from(-1)),
            OperatorKind::Scaled2 => Some(Rational::from(2)),
            OperatorKind::ScaledNeg3Half => Some(Rational::frac(-3, 2)),
            _ => None,
        }
    }
}

/// Shared state for a verification run: the Bernoulli cache and the operators
/// built over it.
pub struct Context {
    cache: Arc<BernoulliCache>,
    operators: Vec<(OperatorKind, RbOperator)>,
}

impl Context {
    pub fn new(cache: Arc<BernoulliCache>) -> Self {
        let standard = RbOperator::summation(cache.clone());
        let operators = OperatorKind::ALL
            .iter()
            .map(|&kind| {
                let op = match kind {
                    OperatorKind::Standard => standard.clone(),
                    OperatorKind::Phi => standard.phi(),
                    _ => standard.scale(&kind.scale_factor().expect("scaled kind")).expect("nonzero factor"),
                };
                (kind, op)
            })
            .collect();
        Context { cache, operators }
    }

    pub fn global() -> Self {
        Context::new(BernoulliCache::global())
    }

    pub fn cache(&self) -> &BernoulliCache {
        &self.cache
    }

    pub fn operator(&self, kind: OperatorKind) -> &RbOperator {
        &self.operators.iter().find(|(k, _)| *k == kind).expect("every kind is built").1
    }

    /// Fills the Bernoulli tables far enough for the given catalog sweep.
    pub fn warm_up(&self, max_index: usize) {
        self.cache.warm_up(max_index);
    }
}

/// A verifier's result plus an optional remark carried into the report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub discrepancy: Discrepancy,
    pub note: Option<String>,
}

impl From<Discrepancy> for Outcome {
    fn from(discrepancy: Discrepancy) -> Self {
        Outcome { discrepancy, note: None }
    }
}

type Verifier = fn(&Context, &[usize]) -> Result<Outcome>;
type Constraint = fn(&[i64]) -> std::result::Result<(), String>;

/// One catalog entry.
pub struct IdentitySpec {
    pub name: &'static str,
    pub params: &'static [&'static str],
    /// Inclusive default sweep range per parameter.
    pub default_ranges: &'static [(i64, i64)],
    pub expected: Expected,
    pub summary: &'static str,
    constraint: Constraint,
    verify: Verifier,
}

impl IdentitySpec {
    pub fn arity(&self) -> usize {
        self.params.len()
    }

    /// Checks arity, nonnegativity and the entry's own constraint.
    pub fn check_params(&self, params: &[i64]) -> std::result::Result<(), String> {
        if params.len() != self.arity() {
            return Err(format!(
                "{} takes {} parameter(s) ({}), got {}",
                self.name,
                self.arity(),
                self.params.join(", "),
                params.len()
            ));
        }
        if let Some(p) = params.iter().find(|&&p| p < 0) {
            return Err(format!("{}: parameters must be nonnegative, got {p}", self.name));
        }
        (self.constraint)(params).map_err(|e| format!("{}: {e}", self.name))
    }

    /// Runs the verifier and times it. Parameters must satisfy
    /// [`check_params`](Self::check_params).
    pub fn run(&self, ctx: &Context, params: &[i64]) -> Result<VerificationReport> {
        self.check_params(params).map_err(Error::Domain)?;
        let args: Vec<usize> = params.iter().map(|&p| p as usize).collect();
        let start = Instant::now();
        let outcome = (self.verify)(ctx, &args)?;
        let elapsed = start.elapsed();
        Ok(VerificationReport::new(self.name, params.to_vec(), self.expected, outcome, elapsed))
    }

    /// All parameter tuples in the given inclusive ranges that satisfy the
    /// constraint, in lexicographic order.
    pub fn tuples(&self, ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for &(lo, hi) in ranges {
            let mut next = Vec::new();
            for prefix in &out {
                for v in lo..=hi {
                    let mut t = prefix.clone();
                    t.push(v);
                    next.push(t);
                }
            }
            out = next;
        }
        out.retain(|t| self.check_params(t).is_ok());
        out
    }

    pub fn default_tuples(&self) -> Vec<Vec<i64>> {
        self.tuples(self.default_ranges)
    }
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("expected", &self.expected)
            .finish()
    }
}

fn ok(_: &[i64]) -> std::result::Result<(), String> {
    Ok(())
}

fn all_positive(p: &[i64]) -> std::result::Result<(), String> {
    if p.iter().all(|&v| v >= 1) {
        Ok(())
    } else {
        Err("all parameters must be >= 1".into())
    }
}

fn at_least<const MIN: i64>(p: &[i64]) -> std::result::Result<(), String> {
    if p[0] >= MIN {
        Ok(())
    } else {
        Err(format!("{} must be >= {MIN}", p[0]))
    }
}

fn even_at_least_4(p: &[i64]) -> std::result::Result<(), String> {
    if p[0] >= 4 && p[0] % 2 == 0 {
        Ok(())
    } else {
        Err("N must be even and >= 4".into())
    }
}

const fn axiom(kind: OperatorKind) -> Verifier {
    match kind {
        OperatorKind::Standard => |c, p| Ok(rbop::check_axiom(c.operator(OperatorKind::Standard), p[0], p[1]).into()),
        OperatorKind::Phi => |c, p| Ok(rbop::check_axiom(c.operator(OperatorKind::Phi), p[0], p[1]).into()),
        OperatorKind::ScaledNeg1 => {
            |c, p| Ok(rbop::check_axiom(c.operator(OperatorKind::ScaledNeg1), p[0], p[1]).into())
        }
        OperatorKind::Scaled2 => |c, p| Ok(rbop::check_axiom(c.operator(OperatorKind::Scaled2), p[0], p[1]).into()),
        OperatorKind::ScaledNeg3Half => {
            |c, p| Ok(rbop::check_axiom(c.operator(OperatorKind::ScaledNeg3Half), p[0], p[1]).into())
        }
    }
}

fn statement2(ctx: &Context, kind: OperatorKind, n: usize) -> Result<Outcome> {
    let op = ctx.operator(kind);
    let discrepancy = rbop::check_statement2(op, n, ctx.cache())?;
    let note = rbop::statement2_substitutes_generator(op)
        .then(|| format!("generator substituted: a -> R(1) = {}", op.unit_image().display_with("a")));
    Ok(Outcome { discrepancy, note })
}

fn power_sum_oracle(ctx: &Context, n: usize, m: usize) -> Discrepancy {
    let value = ctx.cache().power_sum_poly(n).eval(&Rational::from(m as i64));
    Discrepancy::of_scalars(&value, &power_sum_literal(n as u32, m as u64))
}

const TRIPLE_SUM_NOTE: &str = "closing coefficient uses H_{N-1}: (H_{N-1}^2 - H_{N-1,2})/2";

static CATALOG: &[IdentitySpec] = &[
    IdentitySpec {
        name: "rb-axiom",
        params: &["n", "m"],
        default_ranges: &[(0, 25), (0, 25)],
        expected: Expected::Zero,
        summary: "operator axiom on (a^n, a^m), summation operator",
        constraint: ok,
        verify: axiom(OperatorKind::Standard),
    },
    IdentitySpec {
        name: "rb-axiom-phi",
        params: &["n", "m"],
        default_ranges: &[(0, 25), (0, 25)],
        expected: Expected::Zero,
        summary: "operator axiom on (a^n, a^m), phi of the summation operator",
        constraint: ok,
        verify: axiom(OperatorKind::Phi),
    },
    IdentitySpec {
        name: "rb-axiom-scale-neg1",
        params: &["n", "m"],
        default_ranges: &[(0, 25), (0, 25)],
        expected: Expected::Zero,
        summary: "operator axiom on (a^n, a^m), summation operator scaled by -1",
        constraint: ok,
        verify: axiom(OperatorKind::ScaledNeg1),
    },
    IdentitySpec {
        name: "rb-axiom-scale-2",
        params: &["n", "m"],
        default_ranges: &[(0, 25), (0, 25)],
        expected: Expected::Zero,
        summary: "operator axiom on (a^n, a^m), summation operator scaled by 2",
        constraint: ok,
        verify: axiom(OperatorKind::Scaled2),
    },
    IdentitySpec {
        name: "rb-axiom-scale-neg3/2",
        params: &["n", "m"],
        default_ranges: &[(0, 25), (0, 25)],
        expected: Expected::Zero,
        summary: "operator axiom on (a^n, a^m), summation operator scaled by -3/2",
        constraint: ok,
        verify: axiom(OperatorKind::ScaledNeg3Half),
    },
    IdentitySpec {
        name: "statement2",
        params: &["n"],
        default_ranges: &[(0, 50)],
        expected: Expected::Zero,
        summary: "R(a^n) = (-w)^(n+1) F_n(-a/w) with a = R(1), summation operator",
        constraint: ok,
        verify: |c, p| statement2(c, OperatorKind::Standard, p[0]),
    },
    IdentitySpec {
        name: "statement2-scale-neg1",
        params: &["n"],
        default_ranges: &[(0, 20)],
        expected: Expected::Zero,
        summary: "R(a^n) = (-w)^(n+1) F_n(-a/w) with a = R(1), summation operator scaled by -1",
        constraint: ok,
        verify: |c, p| statement2(c, OperatorKind::ScaledNeg1, p[0]),
    },
    IdentitySpec {
        name: "lemma",
        params: &["n"],
        default_ranges: &[(1, 40)],
        expected: Expected::Zero,
        summary: "R(a^n) - a^n = (-1)^(n+1) (phi(R)(b^n) - b^n), b = 1 - a",
        constraint: at_least::<1>,
        verify: |c, p| Ok(rbop::check_lemma_for(c.operator(OperatorKind::Standard), p[0])?.into()),
    },
    IdentitySpec {
        name: "triple-expansion",
        params: &["n", "m", "l"],
        default_ranges: &[(0, 8), (0, 8), (0, 8)],
        expected: Expected::Zero,
        summary: "three-factor operator identity on (a^n, a^m, a^l)",
        constraint: ok,
        verify: |c, p| Ok(rbop::check_triple_expansion(c.operator(OperatorKind::Standard), p[0], p[1], p[2]).into()),
    },
    IdentitySpec {
        name: "powersum-symmetry",
        params: &["n"],
        default_ranges: &[(1, 100)],
        expected: Expected::Zero,
        summary: "F_n(y) = (-1)^(n+1) F_n(-1-y)",
        constraint: at_least::<1>,
        verify: |c, p| Ok(classical::verify_powersum_symmetry(c.cache(), p[0])?.into()),
    },
    IdentitySpec {
        name: "bernoulli-symmetry",
        params: &["n"],
        default_ranges: &[(1, 100)],
        expected: Expected::Zero,
        summary: "B_n(x) = (-1)^n B_n(1-x)",
        constraint: at_least::<1>,
        verify: |c, p| Ok(classical::verify_bernoulli_symmetry(c.cache(), p[0])?.into()),
    },
    IdentitySpec {
        name: "power-sum-oracle",
        params: &["n", "m"],
        default_ranges: &[(0, 15), (0, 50)],
        expected: Expected::Zero,
        summary: "F_n(m) equals the literal sum 1^n + ... + m^n",
        constraint: ok,
        verify: |c, p| Ok(power_sum_oracle(c, p[0], p[1]).into()),
    },
    IdentitySpec {
        name: "power-sum-bernoulli",
        params: &["n"],
        default_ranges: &[(0, 60)],
        expected: Expected::Zero,
        summary: "F_n(m) = (B_{n+1}(m+1) - B_{n+1})/(n+1) as polynomials",
        constraint: ok,
        verify: |c, p| {
            let cache = c.cache();
            Ok(classify_discrepancy(&cache.power_sum_poly(p[0]), &cache.power_sum_via_bernoulli(p[0])).into())
        },
    },
    IdentitySpec {
        name: "almost-nielsen",
        params: &["i", "j"],
        default_ranges: &[(1, 20), (1, 20)],
        expected: Expected::Zero,
        summary: "product of two divided Bernoulli polynomials, constants explicit",
        constraint: all_positive,
        verify: |c, p| Ok(classical::verify_almost_nielsen(c.cache(), p[0], p[1])?.into()),
    },
    IdentitySpec {
        name: "nielsen",
        params: &["i", "j"],
        default_ranges: &[(1, 20), (1, 20)],
        expected: Expected::Zero,
        summary: "product of two divided Bernoulli polynomials with closing B_{i+j} term",
        constraint: all_positive,
        verify: |c, p| Ok(classical::verify_nielsen(c.cache(), p[0], p[1])?.into()),
    },
    IdentitySpec {
        name: "nielsen-agreement",
        params: &["i", "j"],
        default_ranges: &[(1, 20), (1, 20)],
        expected: Expected::Zero,
        summary: "the two product formulas differ by exactly DB_i DB_j",
        constraint: all_positive,
        verify: |c, p| Ok(classical::verify_nielsen_agreement(c.cache(), p[0], p[1])?.into()),
    },
    IdentitySpec {
        name: "agoh",
        params: &["n", "m"],
        default_ranges: &[(0, 40), (0, 40)],
        expected: Expected::Zero,
        summary: "scalar two-sum Bernoulli identity",
        constraint: |p| if p[0] + p[1] <= 40 { Ok(()) } else { Err("n + m must be <= 40".into()) },
        verify: |c, p| Ok(classical::verify_agoh(c.cache(), p[0], p[1]).into()),
    },
    IdentitySpec {
        name: "altern-binom",
        params: &["n"],
        default_ranges: &[(0, 60)],
        expected: Expected::Zero,
        summary: "sum (-1)^r / C(n,r) = (1 + (-1)^n)(n+1)/(n+2)",
        constraint: ok,
        verify: |_, p| Ok(classical::verify_altern_binom(p[0]).into()),
    },
    IdentitySpec {
        name: "gessel",
        params: &["N"],
        default_ranges: &[(2, 40)],
        expected: Expected::Zero,
        summary: "convolution of divided Bernoulli polynomials with H_{N-1} B_N(x)",
        constraint: at_least::<2>,
        verify: |c, p| Ok(classical::verify_gessel(c.cache(), p[0])?.into()),
    },
    IdentitySpec {
        name: "kim-pair-sum",
        params: &["N"],
        default_ranges: &[(0, 40)],
        expected: Expected::Zero,
        summary: "sum_k B_k(x) B_{N-k}(x) in the Bernoulli basis",
        constraint: ok,
        verify: |c, p| Ok(classical::verify_kim_pair_sum(c.cache(), p[0]).into()),
    },
    IdentitySpec {
        name: "miki",
        params: &["N"],
        default_ranges: &[(4, 40)],
        expected: Expected::Zero,
        summary: "Miki's convolution of divided Bernoulli numbers",
        constraint: at_least::<4>,
        verify: |c, p| Ok(classical::verify_miki(c.cache(), p[0])?.into()),
    },
    IdentitySpec {
        name: "matiyasevich",
        params: &["N"],
        default_ranges: &[(4, 40)],
        expected: Expected::Zero,
        summary: "Matiyasevich's convolution of Bernoulli numbers",
        constraint: at_least::<4>,
        verify: |c, p| Ok(classical::verify_matiyasevich(c.cache(), p[0])?.into()),
    },
    IdentitySpec {
        name: "ladder-gessel-miki",
        params: &["N"],
        default_ranges: &[(4, 30)],
        expected: Expected::Zero,
        summary: "Gessel at x = 0 rescaled by 2/N gives both sides of Miki",
        constraint: even_at_least_4,
        verify: |c, p| Ok(classical::verify_gessel_miki_ladder(c.cache(), p[0])?.into()),
    },
    IdentitySpec {
        name: "ladder-kim-matiyasevich",
        params: &["N"],
        default_ranges: &[(4, 30)],
        expected: Expected::Zero,
        summary: "pair sum at x = 0 mapped by v -> (N+2)(v - 2B_N) gives both sides of Matiyasevich",
        constraint: even_at_least_4,
        verify: |c, p| Ok(classical::verify_kim_matiyasevich_ladder(c.cache(), p[0])?.into()),
    },
    IdentitySpec {
        name: "triple-product",
        params: &["i", "j", "k"],
        default_ranges: &[(1, 10), (1, 10), (1, 10)],
        expected: Expected::ConstantOrZero,
        summary: "symmetric expansion of DB_i(x) DB_j(x) DB_k(x), up to a constant",
        constraint: all_positive,
        verify: |c, p| Ok(triple::verify_triple_product(c.cache(), p[0], p[1], p[2])?.into()),
    },
    IdentitySpec {
        name: "triple-integral",
        params: &["i", "j", "k"],
        default_ranges: &[(1, 8), (1, 8), (1, 8)],
        expected: Expected::ConstantOrZero,
        summary: "integral from 0 of DB_i DB_j DB_k, up to a constant, as written",
        constraint: all_positive,
        verify: |c, p| Ok(triple::verify_triple_integral(c.cache(), p[0], p[1], p[2])?.into()),
    },
    IdentitySpec {
        name: "triple-integral-derivative",
        params: &["i", "j", "k"],
        default_ranges: &[(1, 8), (1, 8), (1, 8)],
        expected: Expected::Zero,
        summary: "derivative of both sides of the integrated expansion",
        constraint: all_positive,
        verify: |c, p| Ok(triple::verify_triple_integral_derivative(c.cache(), p[0], p[1], p[2])?.into()),
    },
    IdentitySpec {
        name: "triple-integral-linear",
        params: &["i", "j", "k"],
        default_ranges: &[(1, 8), (1, 8), (1, 8)],
        expected: Expected::ConstantOrZero,
        summary: "integrated expansion with the product constant integrated in as c*x",
        constraint: all_positive,
        verify: |c, p| Ok(triple::verify_triple_integral_with_linear_term(c.cache(), p[0], p[1], p[2])?.into()),
    },
    IdentitySpec {
        name: "triple-sum",
        params: &["N"],
        default_ranges: &[(3, 20)],
        expected: Expected::ConstantOrZero,
        summary: "1/3! sum over i+j+k = N of DB_i DB_j DB_k, up to a constant",
        constraint: at_least::<3>,
        verify: |c, p| {
            Ok(Outcome {
                discrepancy: triple::verify_triple_sum(c.cache(), p[0])?,
                note: Some(TRIPLE_SUM_NOTE.to_string()),
            })
        },
    },
    IdentitySpec {
        name: "sum-decomposition",
        params: &["r", "n"],
        default_ranges: &[(1, 3), (0, 12)],
        expected: Expected::ConstantOrZero,
        summary: "S(r, n) in the Bernoulli basis, up to a constant",
        constraint: |p| if p[0] >= 1 { Ok(()) } else { Err("r must be >= 1".into()) },
        verify: |c, p| Ok(sums::verify_sum_decomposition(c.cache(), p[0], p[1])?.into()),
    },
    IdentitySpec {
        name: "kim3",
        params: &["n"],
        default_ranges: &[(0, 12)],
        expected: Expected::ConstantOrZero,
        summary: "S(3, n) in closed form, up to a constant",
        constraint: ok,
        verify: |c, p| Ok(sums::verify_kim3(c.cache(), p[0])?.into()),
    },
    IdentitySpec {
        name: "decomposition-pair-agreement",
        params: &["n"],
        default_ranges: &[(0, 20)],
        expected: Expected::ConstantOrZero,
        summary: "r = 2 decomposition matches the pair-sum closed form up to a constant",
        constraint: ok,
        verify: |c, p| Ok(sums::verify_decomposition_pair_agreement(c.cache(), p[0])?.into()),
    },
    IdentitySpec {
        name: "gkp-binomial-harmonic",
        params: &["n", "m"],
        default_ranges: &[(1, 30), (0, 5)],
        expected: Expected::Zero,
        summary: "sum_{s<n} C(s,m) H_s = C(n,m+1)(H_n - 1/(m+1))",
        constraint: |p| if p[0] >= 1 && p[1] < p[0] { Ok(()) } else { Err("needs 1 <= m+1 <= n".into()) },
        verify: |_, p| Ok(sums::verify_gkp_binomial_harmonic(p[0], p[1])?.into()),
    },
    IdentitySpec {
        name: "gkp-harmonic-square",
        params: &["n"],
        default_ranges: &[(1, 30)],
        expected: Expected::Zero,
        summary: "sum_{s<=n} H_s/s = (H_n^2 + H_{n,2})/2",
        constraint: at_least::<1>,
        verify: |_, p| Ok(sums::verify_gkp_harmonic_square(p[0])?.into()),
    },
];

/// Every registered verifier, in a fixed order.
pub fn catalog() -> &'static [IdentitySpec] {
    CATALOG
}

pub fn lookup(name: &str) -> Option<&'static IdentitySpec> {
    CATALOG.iter().find(|s| s.name == name)
}

/// Largest Bernoulli index any default-range verification touches, with slack.
pub const DEFAULT_WARMUP_INDEX: usize = 128;

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn catalog_names_are_unique() {
        let names: HashSet<_> = catalog().iter().map(|s| s.name).collect();
        assert_eq!(names.len(), catalog().len());
        for spec in catalog() {
            assert_eq!(spec.default_ranges.len(), spec.arity(), "{}", spec.name);
            assert!(!spec.default_tuples().is_empty(), "{}", spec.name);
        }
    }

    #[test]
    fn tuples_respect_constraints() {
        let agoh = lookup("agoh").unwrap();
        let tuples = agoh.default_tuples();
        assert!(tuples.iter().all(|t| t[0] + t[1] <= 40));
        assert_eq!(tuples.len(), 41 * 42 / 2);
        let ladder = lookup("ladder-gessel-miki").unwrap();
        assert_eq!(ladder.default_tuples(), (4..=30).step_by(2).map(|n| vec![n]).collect::<Vec<_>>());
        let gkp = lookup("gkp-binomial-harmonic").unwrap();
        assert!(gkp.default_tuples().iter().all(|t| t[1] < t[0]));
    }

    #[test]
    fn param_checks() {
        let miki = lookup("miki").unwrap();
        assert!(miki.check_params(&[3]).is_err());
        assert!(miki.check_params(&[4, 1]).is_err());
        assert!(miki.check_params(&[-4]).is_err());
        assert!(miki.check_params(&[4]).is_ok());
    }

    #[test]
    fn run_produces_report() {
        let ctx = Context::global();
        let report = lookup("miki").unwrap().run(&ctx, &[4]).unwrap();
        assert!(report.pass);
        assert_eq!(report.discrepancy, Discrepancy::Zero);
        let report = lookup("statement2-scale-neg1").unwrap().run(&ctx, &[3]).unwrap();
        assert!(report.pass);
        assert!(report.note.as_deref().unwrap().contains("R(1) = -a"));
        let report = lookup("triple-sum").unwrap().run(&ctx, &[5]).unwrap();
        assert!(report.note.is_some());
        assert!(lookup("miki").unwrap().run(&ctx, &[3]).is_err());
    }

    #[test]
    fn expected_classes() {
        let c = Discrepancy::Constant(Rational::one());
        assert!(!Expected::Zero.accepts(&c));
        assert!(Expected::ConstantOrZero.accepts(&c));
        let nc = Discrepancy::of_difference(Poly::x());
        assert!(!Expected::ConstantOrZero.accepts(&nc));
    }
}
