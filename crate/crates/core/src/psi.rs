//! Rational eigenvalue functions of the Cartan currents.
//!
//! The currents act diagonally on the combinatorial bases, and the
//! eigenvalue attached to a basis element is a rational function of the
//! form  c * (1 - K x) * prod_t (1 - m_t x)^{a_t}  with monomials
//! m_t = q1^j q2^k q3^i read off from the shell of the configuration.  The
//! two currents are the expansions of this single function at x = 0 and at
//! x = infinity; both expansions are computed here.

use crate::planepartitions::ShellPoint;
use crate::scalars::{rat_pow, MonomialTriple, ParamSpec, Rat, ScalarError};
use num::{One, Zero};
use std::collections::BTreeMap;

// --- truncated power series over Rat -------------------------------------

fn series_one(n: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n + 1];
    v[0] = Rat::one();
    v
}

fn series_mul(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn series_inv(a: &[Rat], n: usize) -> Vec<Rat> {
    assert!(!a[0].is_zero(), "series has no inverse");
    let mut out = vec![Rat::zero(); n + 1];
    let lead = a[0].recip();
    out[0] = lead.clone();
    for i in 1..=n {
        let mut s = Rat::zero();
        for j in 1..=i.min(a.len() - 1) {
            s += &a[j] * &out[i - j];
        }
        out[i] = -s * &lead;
    }
    out
}

/// Truncated expansion of (1 - m x)^a for integer a of either sign.
fn series_binom(m: &Rat, a: i64, n: usize) -> Vec<Rat> {
    let mut lin = vec![Rat::zero(); n + 1];
    lin[0] = Rat::one();
    if n >= 1 {
        lin[1] = -m.clone();
    }
    let base = if a >= 0 { lin } else { series_inv(&lin, n) };
    let mut out = series_one(n);
    for _ in 0..a.abs() {
        out = series_mul(&out, &base, n);
    }
    out
}

// --- the eigenvalue function ----------------------------------------------

/// A finite product  (1 - K x)^{level} * prod (1 - m x)^{a}  of binomial
/// factors; `level` counts copies of the level factor (1 - K x), whose
/// value depends on the resonance data rather than on a fixed monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiFunction {
    factors: BTreeMap<MonomialTriple, i64>,
    level: i64,
}

impl PsiFunction {
    /// The constant function 1.
    pub fn one() -> Self {
        PsiFunction {
            factors: BTreeMap::new(),
            level: 0,
        }
    }

    /// Builds the eigenvalue function from a shell, including `level`
    /// copies of the factor (1 - K x).
    pub fn from_shell(shell: &[ShellPoint], level: i64) -> Self {
        let mut f = PsiFunction::one();
        f.level = level;
        for sp in shell {
            let (i, j, k) = sp.pos;
            f.push(MonomialTriple::new(i, j, k), sp.order);
        }
        f
    }

    /// Multiplies by (1 - m x)^a where m = q1^{t.j} q2^{t.k} q3^{t.i}.
    pub fn push(&mut self, t: MonomialTriple, a: i64) {
        if a == 0 {
            return;
        }
        let e = self.factors.entry(t).or_insert(0);
        *e += a;
        if *e == 0 {
            self.factors.remove(&t);
        }
    }

    /// Multiplies by another function.
    pub fn mul(&self, other: &PsiFunction) -> PsiFunction {
        let mut out = self.clone();
        out.level += other.level;
        for (&t, &a) in &other.factors {
            out.push(t, a);
        }
        out
    }

    /// Shifts the argument: f(x) -> f(m x) with m = q1^j q2^k q3^i.  Only
    /// valid for functions without a level factor (the level factor does
    /// not transform into another level factor).
    pub fn shift_argument(&self, s: MonomialTriple) -> PsiFunction {
        assert_eq!(self.level, 0, "cannot shift through the level factor");
        let mut out = PsiFunction::one();
        for (&t, &a) in &self.factors {
            out.push(MonomialTriple::new(t.i + s.i, t.j + s.j, t.k + s.k), a);
        }
        out
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    /// Multiplies by (1 - K x)^a.
    pub fn push_level(&mut self, a: i64) {
        self.level += a;
    }

    pub fn factors(&self) -> &BTreeMap<MonomialTriple, i64> {
        &self.factors
    }

    /// Number of binomial factors counted with multiplicity (degree bound
    /// for sampling-based equality checks).
    pub fn factor_count(&self) -> i64 {
        self.level.abs() + self.factors.values().map(|a| a.abs()).sum::<i64>()
    }

    /// Sum of all exponents; zero exactly when the function is regular and
    /// nonzero at x = infinity.
    pub fn total_order(&self) -> i64 {
        self.level + self.factors.values().sum::<i64>()
    }

    /// Evaluates at a rational point x.
    pub fn eval(&self, p: &ParamSpec, x: &Rat) -> Result<Rat, ScalarError> {
        let mut out = Rat::one();
        let mut apply = |m: Rat, a: i64| -> Result<(), ScalarError> {
            let f = Rat::one() - m * x;
            if f.is_zero() {
                if a < 0 {
                    return Err(ScalarError::Pole);
                }
                out = Rat::zero();
                return Ok(());
            }
            out *= rat_pow(&f, a);
            Ok(())
        };
        for (&t, &a) in &self.factors {
            apply(p.eval_monomial(&t), a)?;
        }
        if self.level != 0 {
            apply(p.k_value(), self.level)?;
        }
        Ok(out)
    }

    /// Grouped factors with monomials evaluated in the parameters; two
    /// functions are equal iff these maps agree (exact comparison).
    pub fn factors_by_value(&self, p: &ParamSpec) -> BTreeMap<Rat, i64> {
        let mut out: BTreeMap<Rat, i64> = BTreeMap::new();
        let mut add = |m: Rat, a: i64| {
            let e = out.entry(m).or_insert(0);
            *e += a;
        };
        for (&t, &a) in &self.factors {
            add(p.eval_monomial(&t), a);
        }
        if self.level != 0 {
            add(p.k_value(), self.level);
        }
        out.retain(|_, a| *a != 0);
        out
    }

    /// Exact equality as rational functions of x, for the given parameters.
    pub fn same_function(&self, other: &PsiFunction, p: &ParamSpec) -> bool {
        self.factors_by_value(p) == other.factors_by_value(p)
    }

    /// The modes of the expansion at x = 0:  psi^+_r = u^r [x^r] f(x)
    /// for r = 0..=rmax.
    pub fn plus_modes(&self, p: &ParamSpec, rmax: usize) -> Vec<Rat> {
        let mut s = series_one(rmax);
        for (&t, &a) in &self.factors {
            s = series_mul(&s, &series_binom(&p.eval_monomial(&t), a, rmax), rmax);
        }
        if self.level != 0 {
            s = series_mul(&s, &series_binom(&p.k_value(), self.level, rmax), rmax);
        }
        s.iter()
            .enumerate()
            .map(|(r, c)| c * rat_pow(&p.u, r as i64))
            .collect()
    }

    /// The modes of the expansion at x = infinity:  psi^-_{-r} =
    /// u^{-r} [y^r] f(1/y)  for r = 0..=rmax.  Requires total order 0,
    /// which holds for every shell eigenvalue.
    pub fn minus_modes(&self, p: &ParamSpec, rmax: usize) -> Vec<Rat> {
        assert_eq!(
            self.total_order(),
            0,
            "expansion at infinity needs total order 0"
        );
        // (1 - m x) = (-m x)(1 - y/m) with y = 1/x; the prefactors
        // (-m)^a combine to a constant because the x powers cancel.
        let mut c = Rat::one();
        let mut s = series_one(rmax);
        let mut apply = |m: Rat, a: i64| {
            c *= rat_pow(&(-m.clone()), a);
            s = series_mul(&s, &series_binom(&m.recip(), a, rmax), rmax);
        };
        for (&t, &a) in &self.factors {
            apply(p.eval_monomial(&t), a);
        }
        if self.level != 0 {
            apply(p.k_value(), self.level);
        }
        s.iter()
            .enumerate()
            .map(|(r, v)| v * &c * rat_pow(&p.u, -(r as i64)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planepartitions::{shell, BoundaryTriple, PlanePartition};
    use crate::scalars::rat;

    fn params() -> ParamSpec {
        crate::scalars::make_generic_params(7, 6).unwrap()
    }

    #[test]
    fn series_helpers() {
        let n = 6;
        let a = series_binom(&rat(2, 1), 3, n); // (1 - 2x)^3
        assert_eq!(a[0], rat(1, 1));
        assert_eq!(a[1], rat(-6, 1));
        assert_eq!(a[2], rat(12, 1));
        assert_eq!(a[3], rat(-8, 1));
        assert!(a[4].is_zero());
        let inv = series_inv(&a, n);
        let prod = series_mul(&a, &inv, n);
        assert_eq!(prod, series_one(n));
        // Geometric series.
        let g = series_binom(&rat(3, 1), -1, n);
        for (r, c) in g.iter().enumerate() {
            assert_eq!(*c, rat_pow(&rat(3, 1), r as i64));
        }
    }

    #[test]
    fn vacuum_modes() {
        // f(x) = (1 - K x)/(1 - x):
        //   at 0:        1, (1-K) x, (1-K) x^2, ...
        //   at infinity: K, (K-1) y, (K-1) y^2, ...
        let p = params();
        let b = BoundaryTriple::vacuum();
        let f = PsiFunction::from_shell(&shell(&PlanePartition::minimal(&b)), 1);
        assert_eq!(f.total_order(), 0);
        let k = p.k_value();
        let plus = f.plus_modes(&p, 4);
        assert_eq!(plus[0], Rat::one());
        for r in 1..=4i64 {
            let expect = (Rat::one() - &k) * rat_pow(&p.u, r);
            assert_eq!(plus[r as usize], expect);
        }
        let minus = f.minus_modes(&p, 4);
        assert_eq!(minus[0], k);
        for r in 1..=4i64 {
            let expect = (p.k_value() - Rat::one()) * rat_pow(&p.u, -r);
            assert_eq!(minus[r as usize], expect);
        }
    }

    #[test]
    fn single_box_function() {
        // Adding the first box multiplies the eigenvalue by
        // prod_{s<t} (1 - q_s q_t x) / prod_t (1 - q_t x) * (1-x)^{-1}
        // relative to the vacuum's pole structure.
        let p = params();
        let b = BoundaryTriple::vacuum();
        let omega = PlanePartition::minimal(&b);
        let one_box = omega.add_box((1, 1, 1)).unwrap();
        let f = PsiFunction::from_shell(&shell(&one_box), 1);
        let mut expect = PsiFunction::from_shell(&shell(&omega), 1);
        expect.push(MonomialTriple::new(0, 1, 1), 1); // q1 q2
        expect.push(MonomialTriple::new(1, 0, 1), 1); // q2 q3
        expect.push(MonomialTriple::new(1, 1, 0), 1); // q1 q3
        expect.push(MonomialTriple::new(0, 1, 0), -1); // q1
        expect.push(MonomialTriple::new(0, 0, 1), -1); // q2
        expect.push(MonomialTriple::new(1, 0, 0), -1); // q3
        expect.push(MonomialTriple::new(1, 1, 1), -1); // q1 q2 q3 = 1
        expect.push(MonomialTriple::new(0, 0, 0), 1); // cancels vacuum pole
        assert!(f.same_function(&expect, &p));
        let x = rat(3, 7);
        assert_eq!(f.eval(&p, &x).unwrap(), expect.eval(&p, &x).unwrap());
    }

    #[test]
    fn eval_detects_poles_and_zeros() {
        let p = params();
        let mut f = PsiFunction::one();
        f.push(MonomialTriple::new(0, 1, 0), 1); // (1 - q1 x)
        f.push(MonomialTriple::new(0, 0, 0), -1); // 1/(1 - x)
        assert_eq!(f.eval(&p, &p.q1.recip()).unwrap(), Rat::zero());
        assert_eq!(f.eval(&p, &Rat::one()), Err(ScalarError::Pole));
    }

    #[test]
    fn shell_functions_multiply_over_boxes() {
        // Adding any box at position (i, j, k) multiplies the eigenvalue
        // function by a fixed "box factor" shifted by the box monomial.
        let p = params();
        let mut box_factor = PsiFunction::one();
        for (t, a) in [
            (MonomialTriple::new(0, 1, 1), 1),
            (MonomialTriple::new(1, 0, 1), 1),
            (MonomialTriple::new(1, 1, 0), 1),
            (MonomialTriple::new(0, 1, 0), -1),
            (MonomialTriple::new(0, 0, 1), -1),
            (MonomialTriple::new(1, 0, 0), -1),
            (MonomialTriple::new(1, 1, 1), -1),
            (MonomialTriple::new(0, 0, 0), 1),
        ] {
            box_factor.push(t, a);
        }
        let b = BoundaryTriple::parse("(1);(1);(2)").unwrap();
        for d in 0..=2i64 {
            for pp in crate::planepartitions::enumerate_pp(&b, d, None) {
                let f = PsiFunction::from_shell(&shell(&pp), 1);
                for c in pp.concave_corners3() {
                    let up = pp.add_box(c).unwrap();
                    let g = PsiFunction::from_shell(&shell(&up), 1);
                    // Box at (i, j, k) sits at monomial q1^{j-1} q2^{k-1} q3^{i-1}.
                    let s = MonomialTriple::new(c.0 - 1, c.1 - 1, c.2 - 1);
                    let expect = f.mul(&box_factor.shift_argument(s));
                    assert!(
                        g.same_function(&expect, &p),
                        "boundary {b} box {c:?} at degree {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn minus_modes_match_series_identity() {
        // For f with total order 0, f(x) - psi^-_0/u^0 tends to 0 at
        // infinity; check numerically via large x against the expansion.
        let p = params();
        let b = BoundaryTriple::parse("(2,1);();(1)").unwrap();
        let pp = PlanePartition::minimal(&b);
        let f = PsiFunction::from_shell(&shell(&pp), 1);
        let rmax = 8usize;
        let minus = f.minus_modes(&p, rmax);
        let plus = f.plus_modes(&p, rmax);
        // Evaluate both truncations at a small |x| resp. small |y| and
        // compare with the exact value; the tails must agree to high order.
        let x = rat(1, 1_000_000_000_000);
        let exact = f.eval(&p, &x).unwrap();
        let mut approx = Rat::zero();
        for (r, c) in plus.iter().enumerate() {
            approx += c * rat_pow(&x, r as i64) * rat_pow(&p.u, -(r as i64));
        }
        let err = exact - approx;
        // Error is O(x^{rmax+1}): compare against x^rmax.
        assert!(err.numer().magnitude() * x.denom().magnitude().pow(rmax as u32)
            < err.denom().magnitude() * x.numer().magnitude().pow(rmax as u32)
            || err.is_zero());
        let y = rat(1, 1_000_000_000_000);
        let xx = y.recip();
        let exact = f.eval(&p, &xx).unwrap();
        let mut approx = Rat::zero();
        for (r, c) in minus.iter().enumerate() {
            approx += c * rat_pow(&y, r as i64) * rat_pow(&p.u, r as i64);
        }
        let err = exact - approx;
        assert!(err.numer().magnitude() * y.denom().magnitude().pow(rmax as u32)
            < err.denom().magnitude() * y.numer().magnitude().pow(rmax as u32)
            || err.is_zero());
    }
}
