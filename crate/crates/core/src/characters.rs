//! q-series engine: the MacMahon generating series, the chi_k closed forms
//! and their recursion, the S_n alternating-sum character theorem for the
//! hook Gelfand-Zetlin modules, the two conjectural character formulas for
//! quotient modules, brute-force enumerative characters, and the
//! tensor-factorization check at character level.

use std::fmt;

use num::{BigInt, One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::glinf_gz::enumerate_gz;
use crate::partitions::Partition;
use crate::planepartitions::{
    enumerate_pp, resonance_box, splits_decompose, BoundaryTriple, PpError,
};

/// Errors raised by character computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("coefficient of q^{degree} is negative: {value}")]
    NegativeCoefficient { degree: usize, value: String },
    #[error("series is not divisible by q^{shift}: residue at q^{degree}")]
    NotDivisible { shift: i64, degree: usize },
    #[error("series has no inverse: constant term is not a unit")]
    NotInvertible,
    #[error("plane-partition error: {0}")]
    Pp(#[from] PpError),
}

// ---------------------------------------------------------------------------
// Truncated integer power series
// ---------------------------------------------------------------------------

/// A power series in q with integer coefficients, truncated at a fixed
/// order N: arithmetic is exact modulo q^{N+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSeries {
    truncation: usize,
    coeffs: Vec<BigInt>,
}

impl IntegerSeries {
    /// The zero series truncated at order n.
    pub fn zero(n: usize) -> Self {
        IntegerSeries { truncation: n, coeffs: vec![BigInt::zero(); n + 1] }
    }

    /// The constant series 1.
    pub fn one(n: usize) -> Self {
        let mut s = IntegerSeries::zero(n);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from small integer coefficients (padded with zeros).
    pub fn from_coeffs(n: usize, coeffs: &[i64]) -> Self {
        let mut s = IntegerSeries::zero(n);
        for (d, &c) in coeffs.iter().enumerate().take(n + 1) {
            s.coeffs[d] = BigInt::from(c);
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// The coefficient of q^d (zero beyond the stored range is an error in
    /// the caller's bookkeeping, so indexing past N panics).
    pub fn coeff(&self, d: usize) -> &BigInt {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Adds a single monomial c q^d (ignored if d exceeds the truncation).
    pub fn add_term(&mut self, d: usize, c: BigInt) {
        if d <= self.truncation {
            self.coeffs[d] += c;
        }
    }

    pub fn add(&self, other: &IntegerSeries) -> IntegerSeries {
        let n = self.truncation.min(other.truncation);
        let mut out = IntegerSeries::zero(n);
        for d in 0..=n {
            out.coeffs[d] = &self.coeffs[d] + &other.coeffs[d];
        }
        out
    }

    pub fn sub(&self, other: &IntegerSeries) -> IntegerSeries {
        let n = self.truncation.min(other.truncation);
        let mut out = IntegerSeries::zero(n);
        for d in 0..=n {
            out.coeffs[d] = &self.coeffs[d] - &other.coeffs[d];
        }
        out
    }

    pub fn mul(&self, other: &IntegerSeries) -> IntegerSeries {
        let n = self.truncation.min(other.truncation);
        let mut out = IntegerSeries::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        out
    }

    /// The multiplicative inverse; the constant term must be a unit (+-1).
    pub fn inverse(&self) -> Result<IntegerSeries, CharError> {
        let c0 = &self.coeffs[0];
        if !(c0 == &BigInt::one() || c0 == &(-BigInt::one())) {
            return Err(CharError::NotInvertible);
        }
        let n = self.truncation;
        let mut out = IntegerSeries::zero(n);
        out.coeffs[0] = c0.clone(); // 1/c0 = c0 for a unit
        for d in 1..=n {
            let mut s = BigInt::zero();
            for i in 1..=d {
                s += &self.coeffs[i] * &out.coeffs[d - i];
            }
            out.coeffs[d] = -s * c0;
        }
        Ok(out)
    }

    /// Integer power, negative exponents via the inverse.
    pub fn pow(&self, e: i64) -> Result<IntegerSeries, CharError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut out = IntegerSeries::one(self.truncation);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Multiplies by q^k.  For k < 0 the dropped low-order coefficients
    /// must vanish (otherwise the series is not divisible by q^{-k}), and
    /// the truncation order shrinks by |k| since the top coefficients of
    /// the quotient are not determined by the input.
    pub fn shift(&self, k: i64) -> Result<IntegerSeries, CharError> {
        let n = self.truncation;
        if k >= 0 {
            let k = k as usize;
            let mut out = IntegerSeries::zero(n);
            for d in 0..=n.saturating_sub(k) {
                out.coeffs[d + k] = self.coeffs[d].clone();
            }
            Ok(out)
        } else {
            let k = (-k) as usize;
            for d in 0..k.min(n + 1) {
                if !self.coeffs[d].is_zero() {
                    return Err(CharError::NotDivisible { shift: -(k as i64), degree: d });
                }
            }
            let mut out = IntegerSeries::zero(n.saturating_sub(k));
            for d in k..=n {
                out.coeffs[d - k] = self.coeffs[d].clone();
            }
            Ok(out)
        }
    }

    /// Drops coefficients above order n.
    pub fn truncate(&self, n: usize) -> IntegerSeries {
        assert!(n <= self.truncation);
        IntegerSeries { truncation: n, coeffs: self.coeffs[..=n].to_vec() }
    }

    /// Checks that every coefficient is non-negative.
    pub fn assert_nonnegative(&self) -> Result<(), CharError> {
        for (d, c) in self.coeffs.iter().enumerate() {
            if c < &BigInt::zero() {
                return Err(CharError::NegativeCoefficient { degree: d, value: c.to_string() });
            }
        }
        Ok(())
    }

    /// The first degree at which the two series differ (up to the shorter
    /// truncation), or None if they agree.
    pub fn first_difference(&self, other: &IntegerSeries) -> Option<usize> {
        let n = self.truncation.min(other.truncation);
        (0..=n).find(|&d| self.coeffs[d] != other.coeffs[d])
    }

    /// CSV export: one "degree,coefficient" row per degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,coefficient\n");
        for (d, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{d},{c}\n"));
        }
        out
    }
}

impl Serialize for IntegerSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("IntegerSeries", 2)?;
        st.serialize_field("truncation", &self.truncation)?;
        let digits: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coefficients", &digits)?;
        st.end()
    }
}

impl fmt::Display for IntegerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*q^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.truncation + 1)
    }
}

// ---------------------------------------------------------------------------
// Basic q-series
// ---------------------------------------------------------------------------

/// The Euler function (q)_inf = prod_{i>=1}(1 - q^i), truncated at order n,
/// computed by the pentagonal-number expansion
/// sum_{k in Z} (-1)^k q^{k(3k-1)/2}.
pub fn euler_function(n: usize) -> IntegerSeries {
    let mut s = IntegerSeries::zero(n);
    let mut k: i64 = 0;
    loop {
        let mut hit = false;
        for kk in [k, -k] {
            let e = kk * (3 * kk - 1) / 2;
            if e <= n as i64 {
                hit = true;
                let sign = if kk.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
                s.add_term(e as usize, sign);
            }
            if k == 0 {
                break;
            }
        }
        if !hit {
            break;
        }
        k += 1;
    }
    s
}

/// The MacMahon generating series prod_{i>=1}(1 - q^i)^{-i} mod q^{N+1}.
pub fn macmahon_series(n: usize) -> IntegerSeries {
    // Accumulate the numerator prod (1 - q^i)^i and invert once.
    let mut num = IntegerSeries::one(n);
    for i in 1..=n {
        let mut f = IntegerSeries::one(n);
        f.add_term(i, -BigInt::one());
        for _ in 0..i {
            num = num.mul(&f);
        }
    }
    num.inverse().expect("unit constant term")
}

/// chi_bar_a = (q)_inf^{-2} sum_{j>=0} (-1)^j q^{j(j+1)/2 + j a}: the
/// character of the set of pairs (lambda, mu) with mu_1 + a >= lambda_1.
pub fn chi_bar(a: i64, n: usize) -> IntegerSeries {
    assert!(a >= 0, "chi_bar requires a >= 0");
    let mut num = IntegerSeries::zero(n);
    let mut j: i64 = 0;
    loop {
        let e = j * (j + 1) / 2 + j * a;
        if e > n as i64 {
            break;
        }
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        num.add_term(e as usize, sign);
        j += 1;
    }
    let e = euler_function(n);
    num.mul(&e.mul(&e).inverse().expect("unit"))
}

/// chi_k for any integer k: chi_k = chi_bar_k for k >= 0 and
/// chi_{-k} = q^k chi_bar_k.
pub fn chi(k: i64, n: usize) -> IntegerSeries {
    if k >= 0 {
        chi_bar(k, n)
    } else {
        chi_bar(-k, n).shift(-k).expect("upward shift")
    }
}

// ---------------------------------------------------------------------------
// The S_n character theorem
// ---------------------------------------------------------------------------

/// p(alpha) = sum_{i <= k}(i-1) alpha_i + sum_{i <= n-k} i alpha_{n-i+1},
/// with k the number of positive parts.
pub fn p_alpha(alpha: &[i64], n: usize) -> i64 {
    assert_eq!(alpha.len(), n);
    assert!(alpha.windows(2).all(|w| w[0] >= w[1]), "alpha must decrease");
    let k = alpha.iter().filter(|&&a| a > 0).count();
    let s1: i64 = (1..=k).map(|i| (i as i64 - 1) * alpha[i - 1]).sum();
    let s2: i64 = (1..=(n - k)).map(|i| i as i64 * alpha[n - i]).sum();
    s1 + s2
}

/// The actual degree of the singular vector v_alpha in the fermionic
/// realization: the annihilation determinants D_i^* carry degree
/// i(i+1)/2, so the negative parts contribute -sum i * alpha_{n-i+1}
/// (equivalently +sum i * |alpha_{n-i+1}|).  Agrees with p_alpha when
/// every part is non-negative.
pub fn singular_vector_degree(alpha: &[i64], n: usize) -> i64 {
    assert_eq!(alpha.len(), n);
    let k = alpha.iter().filter(|&&a| a > 0).count();
    let s = alpha.iter().filter(|&&a| a < 0).count();
    let s1: i64 = (1..=k).map(|i| (i as i64 - 1) * alpha[i - 1]).sum();
    let s2: i64 = (1..=s).map(|i| i as i64 * alpha[n - i]).sum();
    s1 - s2
}

/// Signed permutations of 0..n-1 by Heap's algorithm.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    fn heap(k: usize, a: &mut Vec<usize>, sign: &mut i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == 1 {
            out.push((a.clone(), *sign));
            return;
        }
        for i in 0..k {
            heap(k - 1, a, sign, out);
            if i < k - 1 {
                if k.is_multiple_of(2) {
                    a.swap(i, k - 1);
                } else {
                    a.swap(0, k - 1);
                }
                *sign = -*sign;
            }
        }
    }
    let mut sign = 1i64;
    heap(n, &mut a, &mut sign, &mut out);
    out
}

/// The alternating-sum character of the irreducible lowest-weight module
/// with lowest weight theta(alpha, 0):
/// sum_{sigma in S_n} (-1)^sigma prod_i chi_{alpha_{sigma(i)} + i - sigma(i)},
/// normalized by the singular-vector degree so that the lowest vector sits
/// at q^0.  Coefficients are asserted non-negative integers.
pub fn theorem_character(alpha: &[i64], n: usize, nn: usize) -> Result<IntegerSeries, CharError> {
    assert_eq!(alpha.len(), n);
    assert!(alpha.windows(2).all(|w| w[0] >= w[1]), "alpha must decrease");
    let deg = singular_vector_degree(alpha, n);
    // Work at a higher order so the downward shift still covers q^nn.
    let work = nn + usize::try_from(deg.max(0)).unwrap();
    let mut total = IntegerSeries::zero(work);
    for (sigma, sign) in signed_permutations(n) {
        let mut term = IntegerSeries::one(work);
        for (i, &si) in sigma.iter().enumerate() {
            // (sigma(alpha + rho) - rho)_i = alpha_{sigma(i)} + i - sigma(i)
            // with 1-based i; the offsets cancel, so 0-based works too.
            let k = alpha[si] + i as i64 - si as i64;
            term = term.mul(&chi(k, work));
        }
        if sign < 0 {
            total = total.sub(&term);
        } else {
            total = total.add(&term);
        }
    }
    let out = total.shift(-deg)?.truncate(nn);
    out.assert_nonnegative()?;
    Ok(out)
}

/// Graded count of hook Gelfand-Zetlin patterns of width n with row limits
/// alpha (integers allowed): the brute-force oracle for
/// `theorem_character`.  Negative parts are handled by shifting every
/// entry up by a constant, which leaves the deviation grading unchanged.
pub fn gz_character(alpha: &[i64], n: usize, nn: usize) -> IntegerSeries {
    assert_eq!(alpha.len(), n);
    let s = -alpha.iter().copied().min().unwrap_or(0).min(0);
    let ap = Partition::new(alpha.iter().map(|&a| a + s).collect());
    let gp = Partition::new(vec![s; n]);
    let mut out = IntegerSeries::zero(nn);
    for d in 0..=nn {
        let cnt = enumerate_gz(n, &ap, &gp, d as i64).len();
        out.add_term(d, BigInt::from(cnt));
    }
    out
}

// ---------------------------------------------------------------------------
// Conjectural character formulas
// ---------------------------------------------------------------------------

/// Conjecture 1: the character of the vacuum quotient at K = q2 q3^m,
/// [prod_{i=1}^{m-2}(1-q^i)^{m-i-1} / (q)_inf^{m+1}]
///   * sum_{j>=0} (-1)^j q^{j(j+1)/2} prod_{i=1}^{m-1}(1 - q^{i+j}).
pub fn conjecture1(m: i64, n: usize) -> IntegerSeries {
    assert!(m >= 1);
    let mut pre = IntegerSeries::one(n);
    for i in 1..=(m - 2) {
        let mut f = IntegerSeries::one(n);
        if i as usize <= n {
            f.add_term(i as usize, -BigInt::one());
        }
        for _ in 0..(m - i - 1) {
            pre = pre.mul(&f);
        }
    }
    let denom = euler_function(n).pow(m + 1).expect("unit");
    pre = pre.mul(&denom.inverse().expect("unit"));
    let mut sum = IntegerSeries::zero(n);
    let mut j: i64 = 0;
    loop {
        let e = j * (j + 1) / 2;
        if e > n as i64 {
            break;
        }
        let mut term = IntegerSeries::zero(n);
        let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        term.add_term(e as usize, sign);
        for i in 1..=(m - 1) {
            let mut f = IntegerSeries::one(n);
            if (i + j) as usize <= n {
                f.add_term((i + j) as usize, -BigInt::one());
            }
            term = term.mul(&f);
        }
        sum = sum.add(&term);
        j += 1;
    }
    pre.mul(&sum)
}

/// Conjecture 2 (n >= m): the character of the vacuum quotient at
/// K = q2^n q3^m,
/// (q)_inf^{-(m+n)} sum_{lambda_1 >= ... >= lambda_m >= 0}
///   (-1)^{sum lambda} q^{(1/2) sum (lambda_i^2 + (2i-1) lambda_i)}
///   * prod_{i<j<=m}(1 - q^{l_i - l_j + j - i})
///   * prod_{i<j<=n}(1 - q^{l_i - l_j + j - i})   (lambda_j = 0 for j > m).
/// The lambda-sum is truncated at sum lambda <= N: the leading exponent
/// already exceeds the truncation beyond that.
pub fn conjecture2(n_par: i64, m: i64, nn: usize) -> IntegerSeries {
    assert!(n_par >= m && m >= 1);
    let mut total = IntegerSeries::zero(nn);
    let mut lambda = vec![0i64; m as usize];
    fn rec(
        idx: usize,
        maxpart: i64,
        rem: i64,
        lambda: &mut Vec<i64>,
        n_par: i64,
        nn: usize,
        total: &mut IntegerSeries,
    ) {
        let m = lambda.len();
        if idx == m {
            let part = |j: i64| if j as usize <= m { lambda[j as usize - 1] } else { 0 };
            let e2: i64 = (1..=m as i64).map(|i| part(i) * part(i) + (2 * i - 1) * part(i)).sum();
            let e0 = e2 / 2;
            if e0 > nn as i64 {
                return;
            }
            let total_boxes: i64 = lambda.iter().sum();
            let sign =
                if total_boxes % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let mut term = IntegerSeries::zero(nn);
            term.add_term(e0 as usize, sign);
            let apply_product = |upper: i64, term: &mut IntegerSeries| {
                for i in 1..upper {
                    for j in (i + 1)..=upper {
                        let e = part(i) - part(j) + j - i;
                        let mut f = IntegerSeries::one(nn);
                        if e as usize <= nn {
                            f.add_term(e as usize, -BigInt::one());
                        }
                        *term = term.mul(&f);
                    }
                }
            };
            apply_product(m as i64, &mut term);
            apply_product(n_par, &mut term);
            *total = total.add(&term);
            return;
        }
        for v in 0..=maxpart.min(rem) {
            lambda[idx] = v;
            rec(idx + 1, v, rem - v, lambda, n_par, nn, total);
        }
        lambda[idx] = 0;
    }
    rec(0, nn as i64, nn as i64, &mut lambda, n_par, nn, &mut total);
    let denom = euler_function(nn).pow(m + n_par).expect("unit");
    total.mul(&denom.inverse().expect("unit"))
}

// ---------------------------------------------------------------------------
// Enumerative characters
// ---------------------------------------------------------------------------

/// The graded dimension of the module with the given boundary: at a
/// resonance (m, n) the quotient excludes plane partitions containing the
/// forbidden box, otherwise all plane partitions count.
pub fn module_character(
    boundary: &BoundaryTriple,
    resonance: Option<(i64, i64)>,
    nn: usize,
) -> Result<IntegerSeries, CharError> {
    let forbidden = match resonance {
        Some((m, n)) => Some(resonance_box(boundary, m, n)?),
        None => None,
    };
    let counts = crate::par::map_collect(
        (0..=nn).collect::<Vec<_>>(),
        |d: &usize| enumerate_pp(boundary, *d as i64, forbidden).len(),
    );
    let mut out = IntegerSeries::zero(nn);
    for (d, cnt) in counts.into_iter().enumerate() {
        out.add_term(d, BigInt::from(cnt));
    }
    Ok(out)
}

/// The character of the finite tensor module with k Fock factors and
/// elevation data (a_1..a_{k-1}, b_1..b_{k-1}): the graded count of
/// k-tuples of partitions with lambda^{(i)}_j + a_i >= lambda^{(i+1)}_{j+b_i},
/// each box counting degree 1.
pub fn elevation_character(k: usize, a: &[i64], b: &[i64], nn: usize) -> IntegerSeries {
    assert_eq!(a.len(), k.saturating_sub(1));
    assert_eq!(b.len(), k.saturating_sub(1));
    let mut out = IntegerSeries::zero(nn);
    if k == 0 {
        out.add_term(0, BigInt::one());
        return out;
    }
    let by_size: Vec<Vec<Partition>> =
        (0..=nn as i64).map(Partition::all_of_size).collect();
    fn rec(
        idx: usize,
        k: usize,
        used: usize,
        prev: &Partition,
        a: &[i64],
        b: &[i64],
        by_size: &[Vec<Partition>],
        nn: usize,
        out: &mut Vec<BigInt>,
    ) {
        if idx == k {
            out[used] += BigInt::one();
            return;
        }
        for s in 0..=(nn - used) {
            for lam in &by_size[s] {
                if idx > 0 && !prev.interlace_elevated(lam, a[idx - 1], b[idx - 1]) {
                    continue;
                }
                rec(idx + 1, k, used + s, lam, a, b, by_size, nn, out);
            }
        }
    }
    let mut counts = vec![BigInt::zero(); nn + 1];
    rec(0, k, 0, &Partition::empty(), a, b, &by_size, nn, &mut counts);
    for (d, c) in counts.into_iter().enumerate() {
        out.add_term(d, c);
    }
    out
}

/// Result of a tensor-factorization check: the quotient-module character
/// against the product of the three factor characters.
#[derive(Debug, Clone, Serialize)]
pub struct TensorReport {
    pub abc: (i64, i64, i64),
    pub resonance: (i64, i64),
    pub module: IntegerSeries,
    pub factors: Vec<IntegerSeries>,
    pub product: IntegerSeries,
    pub agree: bool,
    pub first_difference: Option<usize>,
}

/// Converts a factor's (row, column) partitions into elevation data:
/// a_k and b_k are the consecutive differences of the two partitions.
fn elevation_data(rows: &Partition, cols: &Partition, k: usize) -> (Vec<i64>, Vec<i64>) {
    let a: Vec<i64> =
        (1..k).map(|i| rows.part(i) - rows.part(i + 1)).collect();
    let b: Vec<i64> =
        (1..k).map(|i| cols.part(i) - cols.part(i + 1)).collect();
    (a, b)
}

/// Character-level check of the splits factorization: the quotient module
/// cut out by the forbidden box (a, b, c) factorizes into three finite
/// tensor modules built from the arms and legs of the boundary.
pub fn tensor_factorization_check(
    boundary: &BoundaryTriple,
    abc: (i64, i64, i64),
    nn: usize,
) -> Result<TensorReport, CharError> {
    let parts = splits_decompose(boundary, abc)?;
    let (a, b, c) = abc;
    let (m, n) = (c - b, a - b);
    let found = resonance_box(boundary, m, n)?;
    if found != abc {
        return Err(CharError::Pp(PpError::BadBox(abc)));
    }
    let module = module_character(boundary, Some((m, n)), nn)?;
    let specs: [(usize, &Partition, &Partition); 3] = [
        ((c - 1) as usize, &parts.alpha_arms, &parts.beta_arms),
        ((a - 1) as usize, &parts.beta_legs, &parts.gamma_arms),
        ((b - 1) as usize, &parts.alpha_legs, &parts.gamma_legs),
    ];
    let mut factors = Vec::new();
    let mut product = IntegerSeries::one(nn);
    for (k, rows, cols) in specs {
        let (av, bv) = elevation_data(rows, cols, k);
        let f = elevation_character(k, &av, &bv, nn);
        product = product.mul(&f);
        factors.push(f);
    }
    let first_difference = module.first_difference(&product);
    Ok(TensorReport {
        abc,
        resonance: (m, n),
        module,
        factors,
        product,
        agree: first_difference.is_none(),
        first_difference,
    })
}
