//! Exact scalar arithmetic for the three-parameter deformation.
//!
//! The algebra depends on parameters q1, q2, q3 constrained by
//! q1 q2 q3 = 1, an evaluation parameter u, and a level parameter K.
//! All arithmetic in this crate is exact: parameters are arbitrary-precision
//! rationals, and coefficients that must survive the q1 → 1 limit are kept
//! in factored form (products of binomials `1 - q1^a * rho`) so the limit
//! can be computed without polynomial expansion.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Pow, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational scalar.
pub type Rat = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Integer (possibly negative) power of an exact rational.
pub fn rat_pow(base: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    assert!(!base.is_zero() || e > 0, "negative power of zero");
    let p = base.clone().pow(e.unsigned_abs() as u32);
    if e > 0 {
        p
    } else {
        p.recip()
    }
}

/// Errors raised by exact scalar computations.
#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum ScalarError {
    #[error("division by a scalar that vanishes identically")]
    DivisionByZero,
    #[error("pole encountered when evaluating a factored scalar")]
    Pole,
    #[error("q1 -> 1 limit diverges (pole order {0})")]
    DivergentLimit(i64),
    #[error("failed to generate generic parameters: {0}")]
    Genericity(String),
}

// ---------------------------------------------------------------------------
// Monomials in (q1, q2, q3)
// ---------------------------------------------------------------------------

/// A monomial q1^j q2^k q3^i.  The field names follow the box-coordinate
/// convention: the i-axis pairs with q3, the j-axis with q1 and the k-axis
/// with q2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MonomialTriple {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl MonomialTriple {
    pub fn new(i: i64, j: i64, k: i64) -> Self {
        MonomialTriple { i, j, k }
    }

    /// Canonical representative modulo the relation q1 q2 q3 = 1: shifting
    /// all three exponents by the same amount does not change the value, so
    /// we translate until the minimum exponent is zero.
    pub fn normalize(&self) -> Self {
        let m = self.i.min(self.j).min(self.k);
        MonomialTriple::new(self.i - m, self.j - m, self.k - m)
    }

    /// Applies a permutation of the three axes: `perm[t]` is the new axis
    /// receiving old axis `t` (axes ordered as (i, j, k)).
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let old = [self.i, self.j, self.k];
        let mut new = [0i64; 3];
        for (t, &p) in perm.iter().enumerate() {
            new[p] = old[t];
        }
        MonomialTriple::new(new[0], new[1], new[2])
    }
}

impl fmt::Display for MonomialTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q1^{} q2^{} q3^{}", self.j, self.k, self.i)
    }
}

// ---------------------------------------------------------------------------
// Parameter specifications
// ---------------------------------------------------------------------------

/// The level parameter K, kept structurally: at a resonance it is the exact
/// monomial q2^m q3^n (so its q1-dependence is visible to the factored
/// scalars), otherwise it is a free rational value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Level {
    Generic(Rat),
    /// K = q2^m q3^n.
    Resonance { m: i64, n: i64 },
}

/// A complete, certified parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamSpec {
    pub q1: Rat,
    pub q2: Rat,
    pub u: Rat,
    pub level: Level,
    /// Exponent bound used when certifying genericity.
    pub bound: i64,
}

impl ParamSpec {
    /// q3 is always derived from the constraint q1 q2 q3 = 1.
    pub fn q3(&self) -> Rat {
        (self.q1.clone() * self.q2.clone()).recip()
    }

    /// The rational value of the level parameter K.
    pub fn k_value(&self) -> Rat {
        match &self.level {
            Level::Generic(k) => k.clone(),
            Level::Resonance { m, n } => {
                rat_pow(&self.q2, *m) * rat_pow(&self.q3(), *n)
            }
        }
    }

    /// Exact value of a monomial q1^j q2^k q3^i at this parameter point.
    pub fn eval_monomial(&self, t: &MonomialTriple) -> Rat {
        // q3 = (q1 q2)^{-1}, so the value only depends on (j - i, k - i).
        rat_pow(&self.q1, t.j - t.i) * rat_pow(&self.q2, t.k - t.i)
    }

    /// Builds an explicitly chosen parameter point without genericity
    /// certification (used by tests with hand-picked values).
    pub fn explicit(q1: Rat, q2: Rat, u: Rat, level: Level, bound: i64) -> Self {
        ParamSpec { q1, q2, u, level, bound }
    }

    /// Derives a resonance point from generic parameters: K is pinned to
    /// q2^m q3^n while (q1, q2, u) keep their certified genericity.
    pub fn with_resonance(&self, m: i64, n: i64) -> Self {
        let mut p = self.clone();
        p.level = Level::Resonance { m, n };
        p
    }
}

/// Prime exponent vector of a positive rational with smooth numerator and
/// denominator (all generated candidates are such).
fn prime_exponents(x: &Rat) -> BTreeMap<u64, i64> {
    fn accumulate(map: &mut BTreeMap<u64, i64>, mut n: u64, sign: i64) {
        let mut p = 2u64;
        while p * p <= n {
            while n.is_multiple_of(p) {
                *map.entry(p).or_insert(0) += sign;
                n /= p;
            }
            p += 1;
        }
        if n > 1 {
            *map.entry(n).or_insert(0) += sign;
        }
    }
    assert!(x.is_positive(), "prime factorization of non-positive rational");
    let mut map = BTreeMap::new();
    let num: u64 = x.numer().to_string().parse().expect("numerator too large");
    let den: u64 = x.denom().to_string().parse().expect("denominator too large");
    accumulate(&mut map, num, 1);
    accumulate(&mut map, den, -1);
    map.retain(|_, e| *e != 0);
    map
}

/// Checks that q1^a q2^b != 1 for all (a, b) != (0, 0) with |a|, |b| <= 2B.
/// This is done on prime exponent vectors: the candidates are constructed
/// with independent vectors, which is strictly stronger (the inequality then
/// holds for every exponent pair).
fn multiplicatively_independent(q1: &Rat, q2: &Rat) -> bool {
    let v1 = prime_exponents(q1);
    let v2 = prime_exponents(q2);
    if v1.is_empty() || v2.is_empty() {
        return false; // one of them is 1
    }
    // Dependent iff v1 and v2 are parallel as integer vectors.
    // Cross-product test over the union of primes.
    let primes: Vec<u64> = v1.keys().chain(v2.keys()).copied().collect();
    for a in 0..primes.len() {
        for b in (a + 1)..primes.len() {
            let (pa, pb) = (primes[a], primes[b]);
            let e1a = *v1.get(&pa).unwrap_or(&0);
            let e1b = *v1.get(&pb).unwrap_or(&0);
            let e2a = *v2.get(&pa).unwrap_or(&0);
            let e2b = *v2.get(&pb).unwrap_or(&0);
            if e1a * e2b - e1b * e2a != 0 {
                return true;
            }
        }
    }
    false
}

/// Checks that K differs from every monomial q1^a q2^b with |a|, |b| <= 2B.
fn level_is_generic(k: &Rat, q1: &Rat, q2: &Rat, bound: i64) -> bool {
    if !k.is_positive() {
        return true; // monomials in positive q's are positive
    }
    let vk = prime_exponents(k);
    let v1 = prime_exponents(q1);
    let v2 = prime_exponents(q2);
    let b2 = 2 * bound;
    for a in -b2..=b2 {
        for b in -b2..=b2 {
            let mut matches = true;
            let primes: Vec<u64> = vk
                .keys()
                .chain(v1.keys())
                .chain(v2.keys())
                .copied()
                .collect();
            for p in primes {
                let ek = *vk.get(&p).unwrap_or(&0);
                let e1 = *v1.get(&p).unwrap_or(&0);
                let e2 = *v2.get(&p).unwrap_or(&0);
                if ek != a * e1 + b * e2 {
                    matches = false;
                    break;
                }
            }
            if matches {
                return false;
            }
        }
    }
    true
}

/// Draws a certified generic parameter point from a seeded PRNG.  The
/// certificate guarantees q1^{i1} q2^{i2} q3^{i3} != 1 unless i1 = i2 = i3,
/// and K != q1^{i1} q2^{i2} q3^{i3}, for all exponents bounded by `bound`
/// in absolute value (the construction is in fact independent of the bound
/// for the q's; the bound is honoured literally for K).
pub fn make_generic_params(seed: u64, bound: i64) -> Result<ParamSpec, ScalarError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..2000 {
        let pick = |rng: &mut ChaCha8Rng| -> Rat {
            let n = rng.gen_range(2i64..60);
            let d = rng.gen_range(2i64..60);
            rat(n, d)
        };
        let q1 = pick(&mut rng);
        let q2 = pick(&mut rng);
        if q1 == q2 || q1.is_one() || q2.is_one() {
            continue;
        }
        if !multiplicatively_independent(&q1, &q2) {
            continue;
        }
        let k = pick(&mut rng);
        if !level_is_generic(&k, &q1, &q2, bound) {
            continue;
        }
        let u = pick(&mut rng);
        return Ok(ParamSpec {
            q1,
            q2,
            u,
            level: Level::Generic(k),
            bound,
        });
    }
    Err(ScalarError::Genericity(format!(
        "no generic point found for seed {seed}"
    )))
}

// ---------------------------------------------------------------------------
// Factored scalars
// ---------------------------------------------------------------------------

/// A scalar of the shape  c * q1^e * prod_t (1 - q1^{a_t} rho_t)^{m_t}
/// with exact rational c and rho_t and nonzero integer exponents a_t.
/// Multiplication and division never expand the product, which makes the
/// q1 -> 1 limit computable exactly: the order of vanishing at q1 = 1 is
/// read off from the factors with rho_t = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct FactoredQ1Scalar {
    c: Rat,
    q1_exp: i64,
    /// (a, rho) -> multiplicity, representing (1 - q1^a * rho)^multiplicity.
    factors: BTreeMap<(i64, Rat), i64>,
}

impl FactoredQ1Scalar {
    pub fn one() -> Self {
        FactoredQ1Scalar {
            c: Rat::one(),
            q1_exp: 0,
            factors: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        FactoredQ1Scalar {
            c: Rat::zero(),
            q1_exp: 0,
            factors: BTreeMap::new(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        let mut s = Self::one();
        s.c = c;
        s
    }

    pub fn q1_pow(e: i64) -> Self {
        let mut s = Self::one();
        s.q1_exp = e;
        s
    }

    /// The binomial 1 - q1^a * rho.  Degenerate cases are folded into the
    /// constant: a = 0 gives the constant 1 - rho, rho = 0 gives 1.
    pub fn binomial(a: i64, rho: Rat) -> Self {
        if rho.is_zero() {
            return Self::one();
        }
        if a == 0 {
            return Self::from_rat(Rat::one() - rho);
        }
        let mut s = Self::one();
        s.factors.insert((a, rho), 1);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.c *= other.c.clone();
        out.q1_exp += other.q1_exp;
        for (key, m) in &other.factors {
            let e = out.factors.entry(key.clone()).or_insert(0);
            *e += m;
            if *e == 0 {
                out.factors.remove(key);
            }
        }
        out
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = self.clone();
        out.c /= other.c.clone();
        out.q1_exp -= other.q1_exp;
        for (key, m) in &other.factors {
            let e = out.factors.entry(key.clone()).or_insert(0);
            *e -= m;
            if *e == 0 {
                out.factors.remove(key);
            }
        }
        Ok(out)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        Self::one().div(self)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let mut out = Self::one();
        let base = if e >= 0 { self.clone() } else { self.inv()? };
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Evaluates at an explicit rational q1 value.
    pub fn eval_q1(&self, q1: &Rat) -> Result<Rat, ScalarError> {
        if self.is_zero() {
            return Ok(Rat::zero());
        }
        let mut val = self.c.clone() * rat_pow(q1, self.q1_exp);
        for ((a, rho), m) in &self.factors {
            let f = Rat::one() - rat_pow(q1, *a) * rho.clone();
            if f.is_zero() {
                if *m < 0 {
                    return Err(ScalarError::Pole);
                }
                return Ok(Rat::zero());
            }
            val *= rat_pow(&f, *m);
        }
        Ok(val)
    }

    /// Order of vanishing at q1 = 1: the signed count of factors with
    /// rho = 1 (each such factor vanishes simply there).
    pub fn order_at_q1_one(&self) -> i64 {
        self.factors
            .iter()
            .filter(|((_, rho), _)| rho.is_one())
            .map(|(_, m)| *m)
            .sum()
    }

    /// Exact limit as q1 -> 1.  Returns `(value, order)` where `order` is
    /// the order of vanishing; `value` is the limit when the order is zero,
    /// and zero when the order is positive.  A negative order is an error.
    /// Matched pairs (1 - q1^a) / (1 - q1^b) contribute a / b.
    pub fn limit_at_q1_one(&self) -> Result<(Rat, i64), ScalarError> {
        if self.is_zero() {
            return Ok((Rat::zero(), 0));
        }
        let order = self.order_at_q1_one();
        if order < 0 {
            return Err(ScalarError::DivergentLimit(order));
        }
        if order > 0 {
            return Ok((Rat::zero(), order));
        }
        let mut val = self.c.clone(); // q1^e -> 1
        for ((a, rho), m) in &self.factors {
            if rho.is_one() {
                // (1 - q1^a) / (1 - q1) -> a; these occur in matched pairs.
                val *= rat_pow(&rat(*a, 1), *m);
            } else {
                let f = Rat::one() - rho.clone();
                if f.is_zero() {
                    unreachable!("rho = 1 handled above");
                }
                val *= rat_pow(&f, *m);
            }
        }
        Ok((val, 0))
    }

    /// Number of binomial factors (used for sizing evaluations in tests).
    pub fn factor_count(&self) -> usize {
        self.factors.values().map(|m| m.unsigned_abs() as usize).sum()
    }
}

impl fmt::Display for FactoredQ1Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * q1^{}", self.c, self.q1_exp)?;
        for ((a, rho), m) in &self.factors {
            write!(f, " * (1 - q1^{a} * {rho})^{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_eval_respects_diagonal_shift() {
        let p = make_generic_params(7, 16).unwrap();
        let t = MonomialTriple::new(2, 5, 1);
        let s = MonomialTriple::new(5, 8, 4); // shifted by (3,3,3)
        assert_eq!(p.eval_monomial(&t), p.eval_monomial(&s));
        assert_eq!(t.normalize(), s.normalize());
        // And q1 q2 q3 = 1 exactly.
        let one = MonomialTriple::new(1, 1, 1);
        assert_eq!(p.eval_monomial(&one), Rat::one());
    }

    #[test]
    fn genericity_examples() {
        // q1 = 2, q2 = 3 is multiplicatively independent ...
        assert!(multiplicatively_independent(&rat(2, 1), &rat(3, 1)));
        // ... while q1 = q2 = 2 and q1 = 2, q2 = 4 are not.
        assert!(!multiplicatively_independent(&rat(2, 1), &rat(2, 1)));
        assert!(!multiplicatively_independent(&rat(2, 1), &rat(4, 1)));
        // K = q1^2 q2^{-1} must be rejected at any reasonable bound.
        assert!(!level_is_generic(&rat(4, 3), &rat(2, 1), &rat(3, 1), 4));
        assert!(level_is_generic(&rat(7, 1), &rat(2, 1), &rat(3, 1), 16));
    }

    #[test]
    fn generic_params_are_certified() {
        for seed in [1u64, 2, 3, 11, 12, 13] {
            let p = make_generic_params(seed, 16).unwrap();
            assert!(multiplicatively_independent(&p.q1, &p.q2));
            // Spot-check a window of exponents directly.
            for a in -6i64..=6 {
                for b in -6i64..=6 {
                    if (a, b) != (0, 0) {
                        let m = rat_pow(&p.q1, a) * rat_pow(&p.q2, b);
                        assert_ne!(m, Rat::one(), "seed {seed}: q1^{a} q2^{b} = 1");
                        assert_ne!(m, p.k_value(), "seed {seed}: K = q1^{a} q2^{b}");
                    }
                }
            }
        }
    }

    #[test]
    fn resonance_level_value() {
        let p = make_generic_params(5, 16).unwrap().with_resonance(2, 1);
        let expected = rat_pow(&p.q2, 2) * rat_pow(&p.q3(), 1);
        assert_eq!(p.k_value(), expected);
    }

    #[test]
    fn factored_limit_examples() {
        // (1 - q1^3) / (1 - q1) -> 3.
        let s = FactoredQ1Scalar::binomial(3, Rat::one())
            .div(&FactoredQ1Scalar::binomial(1, Rat::one()))
            .unwrap();
        assert_eq!(s.limit_at_q1_one().unwrap(), (rat(3, 1), 0));

        // (1 - q1) * (1 - 2 q1) -> order 1, value 0.
        let s = FactoredQ1Scalar::binomial(1, Rat::one())
            .mul(&FactoredQ1Scalar::binomial(1, rat(2, 1)));
        assert_eq!(s.limit_at_q1_one().unwrap(), (Rat::zero(), 1));

        // (1 - q1^3)(1 - 2 q1) / (1 - q1^2) -> -3/2.
        let num = FactoredQ1Scalar::binomial(3, Rat::one())
            .mul(&FactoredQ1Scalar::binomial(1, rat(2, 1)));
        let den = FactoredQ1Scalar::binomial(2, Rat::one());
        let s = num.div(&den).unwrap();
        assert_eq!(s.limit_at_q1_one().unwrap(), (rat(-3, 2), 0));

        // 1 / (1 - q1) diverges.
        let s = FactoredQ1Scalar::binomial(1, Rat::one()).inv().unwrap();
        assert!(matches!(
            s.limit_at_q1_one(),
            Err(ScalarError::DivergentLimit(-1))
        ));
    }

    #[test]
    fn factored_limit_matches_numeric_evaluation() {
        // The limit must agree with evaluation at q1 = 1 +/- 1/10^k.
        let num = FactoredQ1Scalar::binomial(4, Rat::one())
            .mul(&FactoredQ1Scalar::binomial(-2, Rat::one()))
            .mul(&FactoredQ1Scalar::binomial(1, rat(3, 5)));
        let den = FactoredQ1Scalar::binomial(1, Rat::one())
            .mul(&FactoredQ1Scalar::binomial(-1, Rat::one()))
            .mul(&FactoredQ1Scalar::binomial(2, rat(7, 2)));
        let s = num.div(&den).unwrap().mul(&FactoredQ1Scalar::q1_pow(-3));
        let (limit, order) = s.limit_at_q1_one().unwrap();
        assert_eq!(order, 0);
        for k in [6i64, 9, 12] {
            for sign in [1i64, -1] {
                let q1 = Rat::one() + rat(sign, 1) * rat(1, 10).pow(k as u32);
                let v = s.eval_q1(&q1).unwrap();
                let err = (v - limit.clone()).abs();
                assert!(err < rat(1, 10).pow((k - 3) as u32));
            }
        }
    }

    #[test]
    fn factored_mul_div_commute_with_eval() {
        let p = make_generic_params(42, 16).unwrap();
        let a = FactoredQ1Scalar::binomial(2, rat(5, 3)).mul(&FactoredQ1Scalar::from_rat(rat(7, 4)));
        let b = FactoredQ1Scalar::binomial(-1, rat(2, 9)).mul(&FactoredQ1Scalar::q1_pow(2));
        let prod = a.mul(&b);
        let quot = a.div(&b).unwrap();
        let (va, vb) = (a.eval_q1(&p.q1).unwrap(), b.eval_q1(&p.q1).unwrap());
        assert_eq!(prod.eval_q1(&p.q1).unwrap(), va.clone() * vb.clone());
        assert_eq!(quot.eval_q1(&p.q1).unwrap(), va / vb);
    }
}
