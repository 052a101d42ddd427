//! Relation verifier: checks the defining relations of the quotient
//! algebra (the delta-function commutator of e and f, the quadratic
//! exchange relations, the psi-exchange relations, and the two Serre
//! relations) as exact rational identities on graded truncations of the
//! vector, Fock, and MacMahon modules.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num::{One, Zero};
use serde::Serialize;

use crate::fockrep::{fock_e, fock_f, fock_psi, vector_e, vector_f, vector_psi};
use crate::macmahonrep::{e_action, f_action, psi_shell, Gen, MacmahonModule};
use crate::partitions::Partition;
use crate::planepartitions::PlanePartition;
use crate::psi::PsiFunction;
use crate::scalars::{ParamSpec, Rat};

// ---------------------------------------------------------------------------
// A uniform view of the graded modules
// ---------------------------------------------------------------------------

/// A module whose graded components and generator actions the verifier can
/// evaluate exactly.
pub enum Rep {
    /// The vector representation V(u): one basis vector per integer degree.
    Vector(ParamSpec),
    /// The Fock representation F(u): partitions, graded by size.
    Fock(ParamSpec),
    /// A MacMahon module (or its resonance quotient).
    Macmahon(MacmahonModule),
    /// Fault-injection wrapper: doubles every e_0 coefficient of the inner
    /// module, so the relation suite must fail with a located
    /// counterexample.  Used to test the failure path end to end.
    Corrupted(Box<Rep>),
}

/// Basis vectors of the three module families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasisLabel {
    Index(i64),
    Fock(Partition),
    Mac(PlanePartition),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Index(i) => write!(f, "[{i}]"),
            BasisLabel::Fock(la) => write!(f, "|{la}>"),
            BasisLabel::Mac(pp) => write!(f, "{pp}"),
        }
    }
}

/// A finitely supported vector with exact rational coefficients.
pub type State = BTreeMap<BasisLabel, Rat>;

fn add_to(state: &mut State, label: BasisLabel, c: Rat) {
    if c.is_zero() {
        return;
    }
    let e = state.entry(label).or_insert_with(Rat::zero);
    *e += c;
    state.retain(|_, v| !v.is_zero());
}

impl Rep {
    pub fn descriptor(&self) -> String {
        match self {
            Rep::Vector(_) => "V(u)".to_string(),
            Rep::Fock(_) => "F(u)".to_string(),
            Rep::Macmahon(md) => match md.forbidden_box() {
                Some(b) => format!("N[{}] \\ {:?}", md.boundary, b),
                None => format!("M[{}]", md.boundary),
            },
            Rep::Corrupted(inner) => format!("corrupted({})", inner.descriptor()),
        }
    }

    pub fn params(&self) -> &ParamSpec {
        match self {
            Rep::Vector(p) | Rep::Fock(p) => p,
            Rep::Macmahon(md) => &md.params,
            Rep::Corrupted(inner) => inner.params(),
        }
    }

    /// The basis of the degree-d component.
    pub fn basis(&self, d: i64) -> Vec<BasisLabel> {
        match self {
            Rep::Vector(_) => vec![BasisLabel::Index(d)],
            Rep::Fock(_) => {
                if d < 0 {
                    Vec::new()
                } else {
                    Partition::all_of_size(d).into_iter().map(BasisLabel::Fock).collect()
                }
            }
            Rep::Macmahon(md) => {
                if d < 0 {
                    Vec::new()
                } else {
                    md.basis(d).into_iter().map(BasisLabel::Mac).collect()
                }
            }
            Rep::Corrupted(inner) => inner.basis(d),
        }
    }

    /// The eigenvalue function of a basis vector.
    pub fn psi_function(&self, label: &BasisLabel) -> PsiFunction {
        if let Rep::Corrupted(inner) = self {
            return inner.psi_function(label);
        }
        match (self, label) {
            (Rep::Vector(_), BasisLabel::Index(i)) => vector_psi(*i),
            (Rep::Fock(_), BasisLabel::Fock(la)) => fock_psi(la),
            (Rep::Macmahon(_), BasisLabel::Mac(pp)) => psi_shell(pp),
            _ => panic!("label does not belong to this module"),
        }
    }

    fn act_label(&self, gen: Gen, r: i64, label: &BasisLabel) -> Vec<(BasisLabel, Rat)> {
        if let Rep::Corrupted(inner) = self {
            let mut out = inner.act_label(gen, r, label);
            if gen == Gen::E && r == 0 {
                for (_, c) in out.iter_mut() {
                    *c = c.clone() * Rat::from_integer(2.into());
                }
            }
            return out;
        }
        match gen {
            Gen::PsiPlus | Gen::PsiMinus => {
                let f = self.psi_function(label);
                let plus = matches!(gen, Gen::PsiPlus);
                let c = psi_function_mode(&f, plus, r, self.params());
                vec![(label.clone(), c)]
            }
            Gen::E | Gen::F => match (self, label) {
                (Rep::Vector(p), BasisLabel::Index(i)) => {
                    let (c, j) =
                        if gen == Gen::E { vector_e(*i, r, p) } else { vector_f(*i, r, p) };
                    vec![(BasisLabel::Index(j), c)]
                }
                (Rep::Fock(p), BasisLabel::Fock(la)) => {
                    let out = if gen == Gen::E { fock_e(la, r, p) } else { fock_f(la, r, p) };
                    out.0.into_iter().map(|(t, c)| (BasisLabel::Fock(t), c)).collect()
                }
                (Rep::Macmahon(md), BasisLabel::Mac(pp)) => {
                    let out =
                        if gen == Gen::E { e_action(md, pp, r) } else { f_action(md, pp, r) };
                    out.into_iter().map(|(t, c)| (BasisLabel::Mac(t), c)).collect()
                }
                _ => panic!("label does not belong to this module"),
            },
        }
    }

    /// Applies the mode gen_r to a state.  Single-label actions are
    /// memoized in the cache, which the relation suite shares across all
    /// checks: the same mode hits the same basis vector many times.
    pub fn apply(&self, cache: &ActionCache, gen: Gen, r: i64, state: &State) -> State {
        let mut out = State::new();
        for (label, c) in state {
            let image = cache.get_or_compute(self, gen, r, label);
            for (t, a) in image.iter() {
                add_to(&mut out, t.clone(), a * c);
            }
        }
        out
    }
}

/// Memo table for single-basis-vector mode actions, shared across the
/// checks of one suite run.
#[derive(Default)]
pub struct ActionCache {
    map: Mutex<BTreeMap<(u8, i64, BasisLabel), Arc<Vec<(BasisLabel, Rat)>>>>,
}

fn gen_key(gen: Gen) -> u8 {
    match gen {
        Gen::E => 0,
        Gen::F => 1,
        Gen::PsiPlus => 2,
        Gen::PsiMinus => 3,
    }
}

impl ActionCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn get_or_compute(
        &self,
        rep: &Rep,
        gen: Gen,
        r: i64,
        label: &BasisLabel,
    ) -> Arc<Vec<(BasisLabel, Rat)>> {
        let key = (gen_key(gen), r, label.clone());
        if let Some(v) = self.map.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = Arc::new(rep.act_label(gen, r, label));
        self.map.lock().unwrap().insert(key, v.clone());
        v
    }
}

/// The mode of an eigenvalue function: psi^+ expands around z = infinity
/// (modes r >= 0), psi^- around z = 0 (modes r <= 0).
pub fn psi_function_mode(f: &PsiFunction, plus: bool, r: i64, p: &ParamSpec) -> Rat {
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

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Outcome of one relation check on one graded component.
#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub relation: String,
    pub module: String,
    pub degree: i64,
    pub modes: (i64, i64),
    pub pass: bool,
    pub counterexample: Option<String>,
}

impl RelationReport {
    fn new(relation: &str, rep: &Rep, d: i64, modes: (i64, i64)) -> Self {
        RelationReport {
            relation: relation.to_string(),
            module: rep.descriptor(),
            degree: d,
            modes,
            pass: true,
            counterexample: None,
        }
    }

    fn fail(&mut self, witness: String) {
        if self.pass {
            self.pass = false;
            self.counterexample = Some(witness);
        }
    }
}

fn single(label: &BasisLabel) -> State {
    let mut s = State::new();
    s.insert(label.clone(), Rat::one());
    s
}

fn describe(state: &State) -> String {
    state
        .iter()
        .map(|(l, c)| format!("{c} * {l}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The four monomial coefficients of g(z, w) = (z - q1 w)(z - q2 w)(z - q3 w)
/// = z^3 - s1 z^2 w + s2 z w^2 - w^3 (using q1 q2 q3 = 1), as
/// (z-exponent, w-exponent, coefficient).
fn g_monomials(p: &ParamSpec) -> [(i64, i64, Rat); 4] {
    let q3 = p.q3();
    let s1 = &p.q1 + &p.q2 + &q3;
    let s2 = &p.q1 * &p.q2 + &p.q1 * &q3 + &p.q2 * &q3;
    [
        (3, 0, Rat::one()),
        (2, 1, -s1),
        (1, 2, s2),
        (0, 3, -Rat::one()),
    ]
}

fn g11(p: &ParamSpec) -> Rat {
    (Rat::one() - &p.q1) * (Rat::one() - &p.q2) * (Rat::one() - p.q3())
}

// ---------------------------------------------------------------------------
// The individual checks
// ---------------------------------------------------------------------------

/// [e_r, f_s] = (psi^+_{r+s} - psi^-_{r+s}) / g(1,1) on the degree-d
/// component.
pub fn check_ef(rep: &Rep, cache: &ActionCache, d: i64, r: i64, s: i64) -> RelationReport {
    let mut report = RelationReport::new("ef-commutator", rep, d, (r, s));
    let g = g11(rep.params());
    for label in rep.basis(d) {
        let x = single(&label);
        let mut lhs = rep.apply(cache, Gen::E, r, &rep.apply(cache, Gen::F, s, &x));
        for (t, c) in rep.apply(cache, Gen::F, s, &rep.apply(cache, Gen::E, r, &x)) {
            add_to(&mut lhs, t, -c);
        }
        let psi = rep.psi_function(&label);
        let rhs_c = (psi_function_mode(&psi, true, r + s, rep.params())
            - psi_function_mode(&psi, false, r + s, rep.params()))
            / &g;
        let mut diff = lhs;
        add_to(&mut diff, label.clone(), -rhs_c);
        if !diff.is_empty() {
            report.fail(format!("on {label}: residual {}", describe(&diff)));
        }
    }
    report
}

/// The quadratic exchange relation in mode form:
/// sum over the monomials g_{p,t} of g(z,w) of
///   g_{p,t} (e_{r+p} e_{s+t} + e_{s+p} e_{r+t}) = 0, and the mirrored
/// combination g_{p,t} (f_{r+t} f_{s+p} + f_{s+t} f_{r+p}) = 0.
pub fn check_quadratic(
    rep: &Rep,
    cache: &ActionCache,
    gen: Gen,
    d: i64,
    r: i64,
    s: i64,
) -> RelationReport {
    assert!(matches!(gen, Gen::E | Gen::F));
    let name = if gen == Gen::E { "ee-exchange" } else { "ff-exchange" };
    let mut report = RelationReport::new(name, rep, d, (r, s));
    for label in rep.basis(d) {
        let x = single(&label);
        let mut acc = State::new();
        for (p_exp, t_exp, c) in g_monomials(rep.params()) {
            let pairs: [(i64, i64); 2] = if gen == Gen::E {
                // outer mode applied second, inner applied first
                [(r + p_exp, s + t_exp), (s + p_exp, r + t_exp)]
            } else {
                [(r + t_exp, s + p_exp), (s + t_exp, r + p_exp)]
            };
            for (outer, inner) in pairs {
                for (t, a) in rep.apply(cache, gen, outer, &rep.apply(cache, gen, inner, &x)) {
                    add_to(&mut acc, t, a * &c);
                }
            }
        }
        if !acc.is_empty() {
            report.fail(format!("on {label}: residual {}", describe(&acc)));
        }
    }
    report
}

/// The psi-exchange relation in mode form:
/// sum g_{p,t} (psi_{r+p} e_{s+t} + e_{s+p} psi_{r+t}) = 0 for e and
/// sum g_{p,t} (psi_{r+t} f_{s+p} + f_{s+t} psi_{r+p}) = 0 for f,
/// with psi either psi^+ or psi^-.
pub fn check_psi_exchange(
    rep: &Rep,
    cache: &ActionCache,
    psi: Gen,
    gen: Gen,
    d: i64,
    r: i64,
    s: i64,
) -> RelationReport {
    assert!(matches!(psi, Gen::PsiPlus | Gen::PsiMinus));
    assert!(matches!(gen, Gen::E | Gen::F));
    let name = format!(
        "psi{}-{}-exchange",
        if psi == Gen::PsiPlus { "+" } else { "-" },
        if gen == Gen::E { "e" } else { "f" }
    );
    let mut report = RelationReport::new(&name, rep, d, (r, s));
    for label in rep.basis(d) {
        let x = single(&label);
        let mut acc = State::new();
        for (p_exp, t_exp, c) in g_monomials(rep.params()) {
            // (psi-mode applied second o gen-mode first) and vice versa
            let (psi_a, gen_a, psi_b, gen_b) = if gen == Gen::E {
                (r + p_exp, s + t_exp, r + t_exp, s + p_exp)
            } else {
                (r + t_exp, s + p_exp, r + p_exp, s + t_exp)
            };
            for (t, a) in rep.apply(cache, psi, psi_a, &rep.apply(cache, gen, gen_a, &x)) {
                add_to(&mut acc, t, a * &c);
            }
            for (t, a) in rep.apply(cache, gen, gen_b, &rep.apply(cache, psi, psi_b, &x)) {
                add_to(&mut acc, t, a * &c);
            }
        }
        if !acc.is_empty() {
            report.fail(format!("on {label}: residual {}", describe(&acc)));
        }
    }
    report
}

/// The Serre relations [x_0, [x_1, x_{-1}]] = 0 for x = e and x = f.
pub fn check_serre(rep: &Rep, cache: &ActionCache, gen: Gen, d: i64) -> RelationReport {
    assert!(matches!(gen, Gen::E | Gen::F));
    let name = if gen == Gen::E { "serre-e" } else { "serre-f" };
    let mut report = RelationReport::new(name, rep, d, (0, 0));
    for label in rep.basis(d) {
        let x = single(&label);
        let word = |modes: [i64; 3]| {
            // modes applied right to left
            let mut st = x.clone();
            for m in modes.iter().rev() {
                st = rep.apply(cache, gen, *m, &st);
            }
            st
        };
        let mut acc = word([0, 1, -1]);
        for (w, sign) in [
            ([0, -1, 1], -1),
            ([1, -1, 0], -1),
            ([-1, 1, 0], 1),
        ] {
            for (t, c) in word(w) {
                add_to(&mut acc, t, c * Rat::from_integer(sign.into()));
            }
        }
        if !acc.is_empty() {
            report.fail(format!("on {label}: residual {}", describe(&acc)));
        }
    }
    report
}

/// Tameness: pairwise-distinct joint psi-spectra on the degree-d basis.
/// Degenerate parameters (coinciding q_i) are flagged before any
/// comparison, since the spectra are only meaningful for generic q.
pub fn check_tame(rep: &Rep, d: i64) -> RelationReport {
    let mut report = RelationReport::new("tame", rep, d, (0, 0));
    let p = rep.params();
    let q3 = p.q3();
    if p.q1 == p.q2 || p.q1 == q3 || p.q2 == q3 {
        report.fail("parameters are not generic: coinciding q_i".to_string());
        return report;
    }
    let basis = rep.basis(d);
    let functions: Vec<PsiFunction> =
        basis.iter().map(|l| rep.psi_function(l)).collect();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if functions[i].same_function(&functions[j], p) {
                report.fail(format!(
                    "equal psi-spectra: {} and {}",
                    basis[i], basis[j]
                ));
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Aggregated suite
// ---------------------------------------------------------------------------

/// Runs every relation check on the module: the ef-commutator, both
/// quadratic exchanges, all four psi-exchanges, both Serre relations, and
/// tameness, over all degrees 0..=max_degree and modes r, s in
/// [-window, window].  The individual checks run in parallel.
pub fn run_suite(rep: &Rep, max_degree: i64, window: i64) -> Vec<RelationReport> {
    run_suite_range(rep, max_degree, -window, window)
}

/// Like `run_suite` with an explicit mode range r, s in [lo, hi].
pub fn run_suite_range(rep: &Rep, max_degree: i64, lo: i64, hi: i64) -> Vec<RelationReport> {
    #[derive(Clone, Copy)]
    enum Task {
        Ef(i64, i64, i64),
        Quad(Gen, i64, i64, i64),
        Psi(Gen, Gen, i64, i64, i64),
        Serre(Gen, i64),
        Tame(i64),
    }
    let mut tasks = Vec::new();
    let degrees: Vec<i64> = match rep {
        // the vector representation is graded over all of Z; a symmetric
        // window around 0 exercises the same identities
        Rep::Vector(_) => (-max_degree..=max_degree).collect(),
        _ => (0..=max_degree).collect(),
    };
    for &d in &degrees {
        for r in lo..=hi {
            for s in lo..=hi {
                tasks.push(Task::Ef(d, r, s));
                if r <= s {
                    // the quadratic and psi-exchange forms are symmetric
                    // under r <-> s, so half the grid suffices
                    tasks.push(Task::Quad(Gen::E, d, r, s));
                    tasks.push(Task::Quad(Gen::F, d, r, s));
                }
                for psi in [Gen::PsiPlus, Gen::PsiMinus] {
                    for gen in [Gen::E, Gen::F] {
                        tasks.push(Task::Psi(psi, gen, d, r, s));
                    }
                }
            }
        }
        tasks.push(Task::Serre(Gen::E, d));
        tasks.push(Task::Serre(Gen::F, d));
        tasks.push(Task::Tame(d));
    }
    let cache = ActionCache::new();
    crate::par::map_collect(tasks, |t| match *t {
        Task::Ef(d, r, s) => check_ef(rep, &cache, d, r, s),
        Task::Quad(gen, d, r, s) => check_quadratic(rep, &cache, gen, d, r, s),
        Task::Psi(psi, gen, d, r, s) => check_psi_exchange(rep, &cache, psi, gen, d, r, s),
        Task::Serre(gen, d) => check_serre(rep, &cache, gen, d),
        Task::Tame(d) => check_tame(rep, d),
    })
}

/// True when every report passes.
pub fn all_pass(reports: &[RelationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
