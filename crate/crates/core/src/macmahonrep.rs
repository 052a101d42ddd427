//! MacMahon modules M_{alpha,beta,gamma}(u, K) on plane partitions with
//! boundary conditions: eigenvalue functions in shell and product form,
//! e/f mode actions, graded sparse matrices, resonance quotients and
//! singular vectors.
//!
//! All coefficients are finite products of binomials (1 - monomial); the
//! infinite products of the construction are evaluated past their exact
//! stabilization index, never truncated approximately.

use crate::fockrep;
use crate::planepartitions::{
    enumerate_pp, omega_t, shell, BoundaryTriple, PlanePartition, INF,
};
use crate::psi::PsiFunction;
use crate::scalars::{rat, rat_pow, MonomialTriple, ParamSpec, Rat};
use num::{One, Zero};
use serde::Serialize;

/// A MacMahon module, optionally restricted to the resonance quotient
/// basis (states avoiding the distinguished diagonal box).
#[derive(Debug, Clone)]
pub struct MacmahonModule {
    pub boundary: BoundaryTriple,
    pub params: ParamSpec,
    pub quotient: bool,
}

impl MacmahonModule {
    pub fn new(boundary: BoundaryTriple, params: ParamSpec) -> Self {
        MacmahonModule {
            boundary,
            params,
            quotient: false,
        }
    }

    /// The resonance quotient N^{m,n}: requires the level to be the
    /// resonance K = q2^m q3^n.
    pub fn quotient(boundary: BoundaryTriple, params: ParamSpec) -> Self {
        assert!(
            matches!(params.level, crate::scalars::Level::Resonance { .. }),
            "quotient requires a resonance level"
        );
        MacmahonModule {
            boundary,
            params,
            quotient: true,
        }
    }

    /// The box whose presence characterizes the submodule being divided
    /// out (None for the full module).
    pub fn forbidden_box(&self) -> Option<(i64, i64, i64)> {
        if !self.quotient {
            return None;
        }
        let crate::scalars::Level::Resonance { m, n } = self.params.level else {
            unreachable!()
        };
        Some(
            crate::planepartitions::resonance_box(&self.boundary, m, n)
                .expect("resonance box must exist"),
        )
    }

    /// Canonically ordered basis of the degree-d component.
    pub fn basis(&self, d: i64) -> Vec<PlanePartition> {
        enumerate_pp(&self.boundary, d, self.forbidden_box())
    }
}

// ---------------------------------------------------------------------------
// Eigenvalue functions
// ---------------------------------------------------------------------------

/// The eigenvalue function of |mu> from its shell, with the level factor.
pub fn psi_shell(pp: &PlanePartition) -> PsiFunction {
    PsiFunction::from_shell(&shell(pp), 1)
}

/// The eigenvalue function of the single generalized-partition layer
/// mu^{(m)}, with the argument already shifted by q2^{m-1}:
///
/// psi_mu(x) = (1 - q1^{mu_1 - 1} q3^{-1} x)/(1 - q1^{mu_1} x)
///   * prod_j (1 - q1^{mu_j} q3^j x)(1 - q1^{mu_{j+1}-1} q3^{j-1} x)
///           / ((1 - q1^{mu_{j+1}} q3^j x)(1 - q1^{mu_j - 1} q3^{j-1} x)),
///
/// where q1^infinity = 0 (such binomials are simply 1).  Factors with
/// mu_j = mu_{j+1} equal to the row limit cancel, so the product is finite.
pub fn psi_layer(pp: &PlanePartition, m: usize) -> PsiFunction {
    let b = pp.boundary();
    let shift = m as i64 - 1;
    let jmax = b.beta.part(m) + pp.layer(m).len() as i64;
    let mut f = PsiFunction::one();
    let mut push = |i: i64, q1exp: i64, a: i64| {
        if q1exp < INF / 2 {
            f.push(MonomialTriple::new(i, q1exp, shift), a);
        }
    };
    let e = |i: i64| pp.entry(m, i);
    push(-1, e(1) - 1, 1);
    push(0, e(1), -1);
    for j in 1..=jmax {
        push(j, e(j), 1);
        push(j - 1, e(j + 1) - 1, 1);
        push(j, e(j + 1), -1);
        push(j - 1, e(j) - 1, -1);
    }
    f
}

/// psi^{(k)} = prod_{m=1}^{k} of the layer eigenvalue functions (no level
/// factor; this is the finite-tensor-product eigenvalue).
pub fn psi_prefix(pp: &PlanePartition, k: usize) -> PsiFunction {
    let mut f = PsiFunction::one();
    for m in 1..=k {
        f = f.mul(&psi_layer(pp, m));
    }
    f
}

/// The tail function psi'^{(k)}: the product of the layer eigenvalues from
/// layer k on, with the level correction
/// (1 - K x) / (1 - q1^{gamma_1} q2^{N} x)
/// * prod_j (1 - q1^{gamma_j} q2^{N} q3^j x)/(1 - q1^{gamma_{j+1}} q2^{N} q3^j x).
/// Past the stabilization layer every further layer factor cancels against
/// shifting N, so the limit is reached at N = max(stored layers, k - 1).
pub fn psi_tail(pp: &PlanePartition, k: usize) -> PsiFunction {
    let m0 = (pp.stored_layers() + 1).max(k);
    let mut f = PsiFunction::one();
    for m in k..m0 {
        f = f.mul(&psi_layer(pp, m));
    }
    let ga = &pp.boundary().gamma;
    let n = m0 as i64 - 1;
    f.push(MonomialTriple::new(0, ga.part(1), n), -1);
    for j in 1..=ga.len() as i64 {
        f.push(MonomialTriple::new(j, ga.part(j as usize), n), 1);
        f.push(MonomialTriple::new(j, ga.part(j as usize + 1), n), -1);
    }
    let mut out = PsiFunction::one();
    out.push_level(1);
    out.mul(&f)
}

/// The layerwise product form of the full eigenvalue function:
///
/// psi(x) = (1 - K x)/(1 - q1^{l^{(1)}_1} x_1)
///   * prod_i (1 - q1^{l^{(i)}_1} q2 x_i)/(1 - q1^{l^{(i+1)}_1} x_{i+1})
///   * prod_j (1 - q1^{l^{(1)}_j} q3^j x_1)/(1 - q1^{l^{(1)}_{j+1}} q3^j x_1)
///   * prod_{i,j} (1 - q1^{l^{(i+1)}_j} q3^j x_{i+1})(1 - q1^{l^{(i)}_{j+1}} q2 q3^j x_i)
///              / ((1 - q1^{l^{(i+1)}_{j+1}} q3^j x_{i+1})(1 - q1^{l^{(i)}_j} q2 q3^j x_i))
///
/// with x_i = q1^{alpha_i} q2^{i-1} q3^{beta_i} x.  All products are
/// finite: they stabilize once the layers reach gamma.
pub fn psi_product(pp: &PlanePartition) -> PsiFunction {
    let b = pp.boundary();
    let s0 = pp
        .stored_layers()
        .max(b.alpha.len())
        .max(b.beta.len());
    let lam = |i: usize, j: usize| pp.layer(i).part(j);
    // Exponent triple of q1^{lam^{(i)}_j + extra} q3^{j'} x_i q2^{extra2}.
    let t = |i: usize, q1e: i64, q3e: i64, q2e: i64| {
        MonomialTriple::new(b.beta.part(i) + q3e, q1e + b.alpha.part(i), i as i64 - 1 + q2e)
    };
    let mut f = PsiFunction::one();
    f.push_level(1);
    f.push(t(1, lam(1, 1), 0, 0), -1);
    for i in 1..=s0 {
        f.push(t(i, lam(i, 1), 0, 1), 1);
        f.push(t(i + 1, lam(i + 1, 1), 0, 0), -1);
    }
    for j in 1..=pp.layer(1).len() {
        f.push(t(1, lam(1, j), j as i64, 0), 1);
        f.push(t(1, lam(1, j + 1), j as i64, 0), -1);
    }
    for i in 1..=s0 {
        let jmax = pp.layer(i).len().max(pp.layer(i + 1).len());
        for j in 1..=jmax {
            f.push(t(i + 1, lam(i + 1, j), j as i64, 0), 1);
            f.push(t(i, lam(i, j + 1), j as i64, 1), 1);
            f.push(t(i + 1, lam(i + 1, j + 1), j as i64, 0), -1);
            f.push(t(i, lam(i, j), j as i64, 1), -1);
        }
    }
    f
}

// ---------------------------------------------------------------------------
// e / f actions
// ---------------------------------------------------------------------------

fn support_point(c: (i64, i64, i64)) -> MonomialTriple {
    MonomialTriple::new(c.0, c.1, c.2)
}

fn support_inverse(c: (i64, i64, i64)) -> MonomialTriple {
    MonomialTriple::new(-c.0, -c.1, -c.2)
}

/// e_r |mu> = sum over concave corners (i,j,k) of
/// psi^{(k-1)}(q1^{-j} q2^{-k} q3^{-i}) * psi_{lambda^{(k)}, i - beta_k}
/// / (1 - q1) * (q1^j q2^k q3^i u)^r * |mu + box>.
pub fn e_action(md: &MacmahonModule, pp: &PlanePartition, r: i64) -> Vec<(PlanePartition, Rat)> {
    let p = &md.params;
    let forbidden = md.forbidden_box();
    let mut out = Vec::new();
    for c in pp.concave_corners3() {
        let target = pp.add_box(c).expect("concave corner is addable");
        if let Some(fb) = forbidden {
            if target.contains(fb.0, fb.1, fb.2) {
                continue; // projected away in the quotient
            }
        }
        let (i, _j, k) = c;
        let x = p.eval_monomial(&support_inverse(c));
        let chi = psi_prefix(pp, k as usize - 1)
            .eval(p, &x)
            .expect("pole at the delta-function support in the e-action");
        assert!(!chi.is_zero(), "e-coefficient vanished at a valid corner");
        let row = (i - pp.boundary().beta.part(k as usize)) as usize;
        let la = fockrep::psi_la_factors(&pp.layer(k as usize), row)
            .eval(p, &Rat::one())
            .expect("psi_{la,i} has no pole");
        let coeff = chi * la / (Rat::one() - &p.q1)
            * rat_pow(&(p.eval_monomial(&support_point(c)) * &p.u), r);
        out.push((target, coeff));
    }
    out
}

/// f_r |mu> = sum over convex corners (i,j,k) of
/// q1 * psi'^{(k+1)}(q1^{-j} q2^{-k} q3^{-i}) * psi'_{lambda^{(k)}, i - beta_k}
/// / (1 - q1) * (q1^j q2^k q3^i u)^r * |mu - box>.
pub fn f_action(md: &MacmahonModule, pp: &PlanePartition, r: i64) -> Vec<(PlanePartition, Rat)> {
    let p = &md.params;
    let mut out = Vec::new();
    for c in pp.convex_corners3() {
        let target = pp.remove_box(c).expect("convex corner is removable");
        let (i, _j, k) = c;
        let x = p.eval_monomial(&support_inverse(c));
        let chi = psi_tail(pp, k as usize + 1)
            .eval(p, &x)
            .expect("pole at the delta-function support in the f-action");
        let row = (i - pp.boundary().beta.part(k as usize)) as usize;
        let la = fockrep::psi_prime_factors(&pp.layer(k as usize), row)
            .eval(p, &Rat::one())
            .expect("psi'_{la,i} has no pole");
        let coeff = &p.q1 * chi * la / (Rat::one() - &p.q1)
            * rat_pow(&(p.eval_monomial(&support_point(c)) * &p.u), r);
        if !coeff.is_zero() {
            out.push((target, coeff));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Mode matrices
// ---------------------------------------------------------------------------

/// Generators whose graded matrices can be assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    E,
    F,
    PsiPlus,
    PsiMinus,
}

impl Gen {
    pub fn degree_shift(self) -> i64 {
        match self {
            Gen::E => 1,
            Gen::F => -1,
            Gen::PsiPlus | Gen::PsiMinus => 0,
        }
    }
}

/// A dense exact matrix of a mode between two graded components; rows are
/// indexed by the target basis, columns by the source basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeMatrix {
    pub gen: Gen,
    pub r: i64,
    pub source: Vec<PlanePartition>,
    pub target: Vec<PlanePartition>,
    pub entries: Vec<Vec<Rat>>,
}

impl ModeMatrix {
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.source.len());
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(Rat::zero(), |acc, x| acc + x)
            })
            .collect()
    }
}

/// The diagonal psi-mode eigenvalue of a single basis vector.
pub fn psi_mode(pp: &PlanePartition, plus: bool, r: i64, p: &ParamSpec) -> Rat {
    let f = psi_shell(pp);
    if plus {
        if r < 0 {
            return Rat::zero();
        }
        f.plus_modes(p, r as usize)[r as usize].clone()
    } else {
        if r > 0 {
            return Rat::zero();
        }
        f.minus_modes(p, (-r) as usize)[(-r) as usize].clone()
    }
}

/// Assembles the matrix of the mode `gen_r` from degree d to d + shift.
pub fn mode_matrix(md: &MacmahonModule, gen: Gen, r: i64, d: i64) -> ModeMatrix {
    let source = md.basis(d);
    let target = md.basis(d + gen.degree_shift());
    let index: std::collections::BTreeMap<_, _> = target
        .iter()
        .enumerate()
        .map(|(i, pp)| (pp.clone(), i))
        .collect();
    let columns: Vec<Vec<(usize, Rat)>> = crate::par::map_collect(source.clone(), |pp| {
        let terms: Vec<(PlanePartition, Rat)> = match gen {
            Gen::E => e_action(md, pp, r),
            Gen::F => f_action(md, pp, r),
            Gen::PsiPlus => vec![(pp.clone(), psi_mode(pp, true, r, &md.params))],
            Gen::PsiMinus => vec![(pp.clone(), psi_mode(pp, false, r, &md.params))],
        };
        terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (*index.get(&t).expect("target outside basis"), c))
            .collect()
    });
    let mut entries = vec![vec![Rat::zero(); source.len()]; target.len()];
    for (col, terms) in columns.into_iter().enumerate() {
        for (row, c) in terms {
            entries[row][col] = c;
        }
    }
    ModeMatrix {
        gen,
        r,
        source,
        target,
        entries,
    }
}

/// JSON-exportable form of a mode matrix: dimensions, basis labels, and a
/// coordinate list of exact rational entries.
#[derive(Debug, Clone, Serialize)]
pub struct ModeOperator {
    pub generator: String,
    pub mode: i64,
    pub source_degree: i64,
    pub target_degree: i64,
    pub source_labels: Vec<String>,
    pub target_labels: Vec<String>,
    pub entries: Vec<(usize, usize, String)>,
}

impl ModeOperator {
    pub fn from_matrix(m: &ModeMatrix, d: i64) -> Self {
        let mut entries = Vec::new();
        for (i, row) in m.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    entries.push((i, j, v.to_string()));
                }
            }
        }
        ModeOperator {
            generator: match m.gen {
                Gen::E => "e",
                Gen::F => "f",
                Gen::PsiPlus => "psi+",
                Gen::PsiMinus => "psi-",
            }
            .to_string(),
            mode: m.r,
            source_degree: d,
            target_degree: d + m.gen.degree_shift(),
            source_labels: m.source.iter().map(|p| p.to_string()).collect(),
            target_labels: m.target.iter().map(|p| p.to_string()).collect(),
            entries,
        }
    }
}

// ---------------------------------------------------------------------------
// Singular vectors
// ---------------------------------------------------------------------------

/// Checks that |omega_t> is a singular vector of the resonance module:
/// f_r applied to it vanishes for every mode r in [-window, window].
pub fn singular_vector_check(md: &MacmahonModule, t: i64, window: i64) -> bool {
    let crate::scalars::Level::Resonance { m, n } = md.params.level else {
        panic!("singular vectors require a resonance level");
    };
    let w = omega_t(&md.boundary, m, n, t).expect("omega_t exists");
    (-window..=window).all(|r| f_action(md, &w, r).is_empty())
}

// ---------------------------------------------------------------------------
// The q1 -> 1 limit (beta empty, K = (q2 q3)^n)
// ---------------------------------------------------------------------------

use crate::scalars::{FactoredQ1Scalar, ScalarError};

/// The rescaling exponent p(la) = sum_i la^{(i)}_i of the diagonal layer
/// entries (finite for beta empty).
pub fn p_weight(pp: &PlanePartition) -> i64 {
    let imax = pp.stored_layers().max(pp.boundary().gamma.len()) + 1;
    (1..=imax).map(|i| pp.layer(i).part(i)).sum()
}

/// The exponent triple of K at resonance: K = q2^m q3^n.
fn level_triple(p: &ParamSpec) -> MonomialTriple {
    let crate::scalars::Level::Resonance { m, n } = p.level else {
        panic!("factored coefficients require a resonance level");
    };
    MonomialTriple::new(n, 0, m)
}

/// A single binomial (1 - q1^j q2^k q3^i) as a factored scalar in q1
/// with q2 specialized: q3 = 1/(q1 q2) gives 1 - q1^{j-i} q2^{k-i}.
fn triple_binomial(t: &MonomialTriple, p: &ParamSpec) -> FactoredQ1Scalar {
    FactoredQ1Scalar::binomial(t.j - t.i, rat_pow(&p.q2, t.k - t.i))
}

/// The monomial q1^j q2^k q3^i itself (a unit, not a binomial).
fn triple_unit(t: &MonomialTriple, p: &ParamSpec) -> FactoredQ1Scalar {
    FactoredQ1Scalar::q1_pow(t.j - t.i)
        .mul(&FactoredQ1Scalar::from_rat(rat_pow(&p.q2, t.k - t.i)))
}

fn triple_sum(a: &MonomialTriple, b: &MonomialTriple) -> MonomialTriple {
    MonomialTriple::new(a.i + b.i, a.j + b.j, a.k + b.k)
}

/// Evaluates a psi-type function at the monomial argument x as a factored
/// scalar in q1.
fn psi_factored_at(f: &PsiFunction, x: &MonomialTriple, p: &ParamSpec) -> FactoredQ1Scalar {
    let mut out = FactoredQ1Scalar::one();
    for (t, &a) in f.factors() {
        let b = triple_binomial(&triple_sum(t, x), p);
        out = out.mul(&b.pow(a).expect("binomial power"));
    }
    if f.level() != 0 {
        let k = level_triple(p);
        let b = triple_binomial(&triple_sum(&k, x), p);
        out = out.mul(&b.pow(f.level()).expect("level power"));
    }
    out
}

/// e_r matrix entries as factored scalars in q1 (u and q2 specialized),
/// without the basis rescaling.
pub fn e_action_factored(
    md: &MacmahonModule,
    pp: &PlanePartition,
    r: i64,
) -> Vec<(PlanePartition, FactoredQ1Scalar)> {
    let p = &md.params;
    let forbidden = md.forbidden_box();
    let one_minus_q1 = FactoredQ1Scalar::binomial(1, Rat::one());
    let mut out = Vec::new();
    for c in pp.concave_corners3() {
        let target = pp.add_box(c).expect("concave corner is addable");
        if let Some(fb) = forbidden {
            if target.contains(fb.0, fb.1, fb.2) {
                continue;
            }
        }
        let (i, _j, k) = c;
        let x = support_inverse(c);
        let chi = psi_factored_at(&psi_prefix(pp, k as usize - 1), &x, p);
        let row = (i - pp.boundary().beta.part(k as usize)) as usize;
        let la = psi_factored_at(
            &fockrep::psi_la_factors(&pp.layer(k as usize), row),
            &MonomialTriple::new(0, 0, 0),
            p,
        );
        let mode = triple_unit(&support_point(c), p)
            .pow(r)
            .expect("unit power")
            .mul(&FactoredQ1Scalar::from_rat(rat_pow(&p.u, r)));
        let coeff = chi
            .mul(&la)
            .div(&one_minus_q1)
            .expect("divide by 1 - q1")
            .mul(&mode);
        out.push((target, coeff));
    }
    out
}

/// f_r matrix entries as factored scalars in q1, without the rescaling.
pub fn f_action_factored(
    md: &MacmahonModule,
    pp: &PlanePartition,
    r: i64,
) -> Vec<(PlanePartition, FactoredQ1Scalar)> {
    let p = &md.params;
    let one_minus_q1 = FactoredQ1Scalar::binomial(1, Rat::one());
    let mut out = Vec::new();
    for c in pp.convex_corners3() {
        let target = pp.remove_box(c).expect("convex corner is removable");
        let (i, _j, k) = c;
        let x = support_inverse(c);
        let chi = psi_factored_at(&psi_tail(pp, k as usize + 1), &x, p);
        let row = (i - pp.boundary().beta.part(k as usize)) as usize;
        let la = psi_factored_at(
            &fockrep::psi_prime_factors(&pp.layer(k as usize), row),
            &MonomialTriple::new(0, 0, 0),
            p,
        );
        let mode = triple_unit(&support_point(c), p)
            .pow(r)
            .expect("unit power")
            .mul(&FactoredQ1Scalar::from_rat(rat_pow(&p.u, r)));
        let coeff = FactoredQ1Scalar::q1_pow(1)
            .mul(&chi)
            .mul(&la)
            .div(&one_minus_q1)
            .expect("divide by 1 - q1")
            .mul(&mode);
        if !coeff.is_zero() {
            out.push((target, coeff));
        }
    }
    out
}

/// One rescaled matrix entry and its q1 -> 1 limit.
#[derive(Debug, Clone, Serialize)]
pub struct LimitEntry {
    pub generator: String,
    pub mode: i64,
    pub source: String,
    pub target: String,
    pub order: i64,
    pub limit: String,
}

/// Report of all rescaled e/f entries at low degree and their limits.
#[derive(Debug, Clone, Serialize)]
pub struct LimitReport {
    pub max_degree: i64,
    pub entries: Vec<LimitEntry>,
}

/// Computes every e/f matrix entry at degrees <= d in the rescaled basis
/// |la>_new = (1 - q1)^{-p(la)} |la> and takes its exact q1 -> 1 limit.
/// Requires beta empty and the resonance K = (q2 q3)^n; a negative
/// vanishing order (a pole, contradicting the well-definedness of the
/// limit) surfaces as an error.
pub fn limit_coefficients(md: &MacmahonModule, d: i64) -> Result<LimitReport, ScalarError> {
    if !md.boundary.beta.is_empty() {
        return Err(ScalarError::Genericity(
            "the q1 -> 1 limit requires beta to be empty".into(),
        ));
    }
    let crate::scalars::Level::Resonance { m, n } = md.params.level else {
        return Err(ScalarError::Genericity(
            "the q1 -> 1 limit requires the resonance K = (q2 q3)^n".into(),
        ));
    };
    if m != n {
        return Err(ScalarError::Genericity(
            "the q1 -> 1 limit requires the resonance K = (q2 q3)^n".into(),
        ));
    }
    let one_minus_q1 = FactoredQ1Scalar::binomial(1, Rat::one());
    let mut entries = Vec::new();
    for deg in 0..=d {
        for pp in md.basis(deg) {
            let ps = p_weight(&pp);
            for r in -2..=2i64 {
                let terms = [
                    ("e", e_action_factored(md, &pp, r)),
                    ("f", f_action_factored(md, &pp, r)),
                ];
                for (gen, ts) in terms {
                    for (t, c) in ts {
                        let dp = p_weight(&t) - ps;
                        let rescaled = c
                            .mul(&one_minus_q1.pow(dp).expect("rescaling"))
                            .clone();
                        let (value, order) = rescaled.limit_at_q1_one()?;
                        entries.push(LimitEntry {
                            generator: gen.to_string(),
                            mode: r,
                            source: pp.to_string(),
                            target: t.to_string(),
                            order,
                            limit: value.to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(LimitReport {
        max_degree: d,
        entries,
    })
}

/// Cartan eigenvalues theta_i of E_{i,i} in the q1 -> 1 limit, read off
/// the psi eigenvalue function of the vacuum of the module.
///
/// Writing the eigenvalue function as prod_f (1 - a_f u/z)^{m_f} with
/// a_f = q1^{A_f} rho_f (rho_f a power of q2 = q), the h_m eigenvalue is
/// sum_f m_f (a_f u)^m / prod_i (1 - q_i^m); in the limit this is finite
/// because sum_f m_f rho_f^m = 0, and L'Hopital gives
///   D^m / u^m = -sum_f m_f A_f rho_f^m / (1 - q^m).
/// Subtracting the central term kappa/(1 - q^m) (kappa = n) leaves
/// sum_i t_i q^{-im} with t_i the :E_{i,i}: eigenvalues, recovered by
/// solving the (exact, rational) Vandermonde system over m = 1..2I+1.
/// Finally theta_i = t_i - kappa for i > 0.
pub fn cartan_theta(md: &MacmahonModule, window: i64) -> Result<Vec<(i64, Rat)>, ScalarError> {
    if !md.boundary.beta.is_empty() {
        return Err(ScalarError::Genericity("beta must be empty".into()));
    }
    let crate::scalars::Level::Resonance { m, n } = md.params.level else {
        return Err(ScalarError::Genericity("resonance (n, n) required".into()));
    };
    if m != n {
        return Err(ScalarError::Genericity("resonance (n, n) required".into()));
    }
    let p = &md.params;
    let q = &p.q2;
    let omega = PlanePartition::minimal(&md.boundary);
    let f = psi_shell(&omega);
    // factor data: (A, rho, multiplicity), including the level factor
    let mut factors: Vec<(i64, Rat, i64)> = f
        .factors()
        .iter()
        .map(|(t, &a)| (t.j - t.i, rat_pow(&p.q2, t.k - t.i), a))
        .collect();
    let kt = level_triple(p);
    factors.push((kt.j - kt.i, rat_pow(&p.q2, kt.k - kt.i), f.level()));
    let size = (2 * window + 1) as usize;
    let mut mat = vec![vec![Rat::zero(); size]; size];
    let mut rhs = vec![Rat::zero(); size];
    for (row, mm) in (1..=size as i64).enumerate() {
        // the limit must exist: the rho^m multiplicities cancel
        let check: Rat = factors
            .iter()
            .map(|(_, rho, mult)| rat_pow(rho, mm) * rat(*mult, 1))
            .fold(Rat::zero(), |a, b| a + b);
        if !check.is_zero() {
            return Err(ScalarError::DivergentLimit(-1));
        }
        let num: Rat = factors
            .iter()
            .map(|(aa, rho, mult)| rat_pow(rho, mm) * rat(-aa * mult, 1))
            .fold(Rat::zero(), |a, b| a + b);
        rhs[row] = (num - rat(n, 1)) / (Rat::one() - rat_pow(q, mm));
        for (col, i) in (-window..=window).enumerate() {
            mat[row][col] = rat_pow(q, -i * mm);
        }
    }
    let t = solve_linear(mat, rhs)?;
    Ok((-window..=window)
        .zip(t)
        .map(|(i, ti)| (i, if i > 0 { ti - rat(n, 1) } else { ti }))
        .collect())
}

fn solve_linear(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Result<Vec<Rat>, ScalarError> {
    let nn = b.len();
    for col in 0..nn {
        let piv = (col..nn)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(ScalarError::DivisionByZero)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].clone().recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        b[col] *= &inv;
        for r in 0..nn {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for cc in 0..nn {
                    let v = a[col][cc].clone();
                    a[r][cc] -= f.clone() * v;
                }
                let v = b[col].clone();
                b[r] -= f * v;
            }
        }
    }
    Ok(b)
}
