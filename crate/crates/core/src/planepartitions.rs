//! Plane partitions with boundary conditions along the three coordinate
//! axes, their graded enumeration, 3D corners, shells, resonance
//! combinatorics and splits decompositions.
//!
//! A configuration is an array mu^{(k)}_i (k = layer, i = row) of values in
//! Z_{>=0} ∪ {infinity}, weakly decreasing in both k and i, whose box set is
//! Y = { (i, j, k) : j <= mu^{(k)}_i }.  The boundary triple (alpha, beta,
//! gamma) prescribes the asymptotics: mu^{(k)}_i -> alpha_k as i -> inf,
//! mu^{(k)}_i = inf exactly for i <= beta_k, and mu^{(k)} -> gamma as
//! k -> inf.  Every admissible configuration differs from the unique
//! minimal one in finitely many boxes; the number of extra boxes is the
//! degree.

use crate::partitions::{parse_partition, Partition};
use crate::scalars::MonomialTriple;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Sentinel for infinite entries.
pub const INF: i64 = i64::MAX / 4;

/// Boundary conditions along the three axes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoundaryTriple {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

impl BoundaryTriple {
    pub fn new(alpha: Partition, beta: Partition, gamma: Partition) -> Self {
        BoundaryTriple { alpha, beta, gamma }
    }

    pub fn vacuum() -> Self {
        BoundaryTriple::new(Partition::empty(), Partition::empty(), Partition::empty())
    }

    /// Parses the textual form "(3,1);(3,2,1,1);(3,2,1,1)".
    pub fn parse(s: &str) -> Result<Self, String> {
        let pieces: Vec<&str> = s.split(';').collect();
        if pieces.len() != 3 {
            return Err(format!("boundary must have three components: {s:?}"));
        }
        Ok(BoundaryTriple::new(
            parse_partition(pieces[0])?,
            parse_partition(pieces[1])?,
            parse_partition(pieces[2])?,
        ))
    }
}

impl fmt::Display for BoundaryTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.alpha, self.beta, self.gamma)
    }
}

/// Errors from plane-partition operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum PpError {
    #[error("configuration violates the monotonicity conditions")]
    Invalid,
    #[error("box {0:?} is not addable/removable here")]
    BadBox((i64, i64, i64)),
    #[error("no resonance box exists for these data")]
    NoResonanceBox,
    #[error("boundary does not satisfy the splits conditions at {0:?}")]
    NotSplit((i64, i64, i64)),
}

/// A plane partition with boundary, stored as the finite list of layer
/// partitions lambda^{(k)} = (mu^{(k)}_{i + beta_k} - alpha_k)_i for
/// k = 1..L; layers beyond L equal gamma.  The representation is canonical:
/// L >= max(len alpha, len beta) and trailing layers equal to gamma are
/// trimmed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlanePartition {
    boundary: BoundaryTriple,
    layers: Vec<Partition>,
}

impl PlanePartition {
    /// The minimal configuration for a boundary: mu^{(k)}_i = infinity for
    /// i <= beta_k and max(gamma_i, alpha_k) otherwise.
    pub fn minimal(boundary: &BoundaryTriple) -> PlanePartition {
        let l0 = boundary.alpha.len().max(boundary.beta.len());
        let layers = (1..=l0)
            .map(|k| Self::minimal_layer(boundary, k))
            .collect();
        let mut pp = PlanePartition {
            boundary: boundary.clone(),
            layers,
        };
        pp.canonicalize();
        pp
    }

    fn minimal_layer(boundary: &BoundaryTriple, k: usize) -> Partition {
        let a = boundary.alpha.part(k);
        let b = boundary.beta.part(k);
        let mut parts = Vec::new();
        for i in 1..=boundary.gamma.len() as i64 {
            let g = boundary.gamma.part((i + b) as usize);
            let v = g.max(a) - a;
            if v == 0 {
                break;
            }
            parts.push(v);
        }
        Partition::new(parts)
    }

    /// Builds a configuration from explicit layer partitions (layers beyond
    /// the list equal gamma), validating all monotonicity conditions.
    pub fn from_layers(
        boundary: &BoundaryTriple,
        layers: Vec<Partition>,
    ) -> Result<PlanePartition, PpError> {
        let mut pp = PlanePartition {
            boundary: boundary.clone(),
            layers,
        };
        let l0 = boundary.alpha.len().max(boundary.beta.len());
        while pp.layers.len() < l0 {
            pp.layers.push(boundary.gamma.clone());
        }
        pp.validate()?;
        pp.canonicalize();
        Ok(pp)
    }

    pub fn boundary(&self) -> &BoundaryTriple {
        &self.boundary
    }

    /// Layer partitions lambda^{(k)} for k = 1..=l (continuing with gamma).
    pub fn layer(&self, k: usize) -> Partition {
        assert!(k >= 1);
        if k <= self.layers.len() {
            self.layers[k - 1].clone()
        } else {
            self.boundary.gamma.clone()
        }
    }

    /// Number of explicitly stored layers.
    pub fn stored_layers(&self) -> usize {
        self.layers.len()
    }

    /// The entry mu^{(k)}_i (INF for rows pinned to infinity).
    pub fn entry(&self, k: usize, i: i64) -> i64 {
        assert!(k >= 1 && i >= 1);
        let b = self.boundary.beta.part(k);
        if i <= b {
            return INF;
        }
        let lam = if k <= self.layers.len() {
            &self.layers[k - 1]
        } else {
            &self.boundary.gamma
        };
        lam.part((i - b) as usize) + self.boundary.alpha.part(k)
    }

    /// Box membership: (i, j, k) in Y iff  j <= mu^{(k)}_i  (1-based).
    pub fn contains(&self, i: i64, j: i64, k: i64) -> bool {
        if i < 1 || j < 1 || k < 1 {
            return false;
        }
        j <= self.entry(k as usize, i)
    }

    /// Membership in the completion that treats points with a coordinate
    /// <= 0 as inside.
    pub fn contains_bar(&self, i: i64, j: i64, k: i64) -> bool {
        i <= 0 || j <= 0 || k <= 0 || self.contains(i, j, k)
    }

    fn validate(&self) -> Result<(), PpError> {
        // Rows within a layer decrease automatically (layers are
        // partitions); check the decline from layer k to layer k + 1,
        // including the junction with the gamma tail.
        let lmax = self.layers.len() + 1;
        let rmax = self.row_extent() + 1;
        for k in 1..=lmax {
            for i in 1..=rmax {
                let a = self.entry(k, i);
                let b = self.entry(k + 1, i);
                if a < b {
                    return Err(PpError::Invalid);
                }
            }
        }
        Ok(())
    }

    /// Largest row index at which anything interesting can happen.
    fn row_extent(&self) -> i64 {
        let mut r = self.boundary.beta.part(1) + self.boundary.gamma.len() as i64;
        for (k, lam) in self.layers.iter().enumerate() {
            r = r.max(self.boundary.beta.part(k + 1) + lam.len() as i64);
        }
        r.max(self.boundary.gamma.len() as i64) + 1
    }

    fn canonicalize(&mut self) {
        let l0 = self.boundary.alpha.len().max(self.boundary.beta.len());
        while self.layers.len() > l0 && self.layers.last() == Some(&self.boundary.gamma) {
            self.layers.pop();
        }
    }

    /// Number of boxes added over the minimal configuration.
    pub fn degree(&self) -> i64 {
        let omega = PlanePartition::minimal(&self.boundary);
        let lmax = self.layers.len().max(omega.layers.len());
        let mut d = 0;
        for k in 1..=lmax {
            d += self.layer(k).size() - omega.layer(k).size();
        }
        d
    }

    /// The finite set Y \ Y_omega, sorted (canonical key of the state).
    pub fn deviation_boxes(&self) -> Vec<(i64, i64, i64)> {
        let omega = PlanePartition::minimal(&self.boundary);
        let lmax = self.layers.len().max(omega.layers.len());
        let mut out = Vec::new();
        for k in 1..=lmax {
            let b = self.boundary.beta.part(k);
            let lam = self.layer(k);
            let lam0 = omega.layer(k);
            for r in 1..=lam.len() as i64 {
                let lo = lam0.part(r as usize) + self.boundary.alpha.part(k);
                let hi = lam.part(r as usize) + self.boundary.alpha.part(k);
                for j in (lo + 1)..=hi {
                    out.push((r + b, j, k as i64));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Rebuilds a configuration from its boundary and deviation boxes.
    pub fn from_deviation_boxes(
        boundary: &BoundaryTriple,
        boxes: &[(i64, i64, i64)],
    ) -> Result<PlanePartition, PpError> {
        let omega = PlanePartition::minimal(boundary);
        let lmax = boxes
            .iter()
            .map(|&(_, _, k)| k as usize)
            .max()
            .unwrap_or(0)
            .max(omega.layers.len());
        let mut layers = Vec::with_capacity(lmax);
        for k in 1..=lmax {
            let b = boundary.beta.part(k);
            let a = boundary.alpha.part(k);
            let base = omega.layer(k);
            let rows = boxes
                .iter()
                .filter(|&&(_, _, kk)| kk == k as i64)
                .map(|&(i, _, _)| i - b)
                .max()
                .unwrap_or(0)
                .max(base.len() as i64);
            let mut parts = Vec::new();
            for r in 1..=rows {
                let mut v = base.part(r as usize);
                for &(i, j, kk) in boxes {
                    if kk == k as i64 && i == r + b {
                        v = v.max(j - a);
                    }
                }
                parts.push(v);
            }
            while parts.last() == Some(&0) {
                parts.pop();
            }
            for w in parts.windows(2) {
                if w[0] < w[1] {
                    return Err(PpError::Invalid);
                }
            }
            layers.push(Partition::new(parts));
        }
        let pp = PlanePartition::from_layers(boundary, layers)?;
        // The reconstruction must reproduce exactly the requested boxes.
        if pp.deviation_boxes() != boxes {
            return Err(PpError::Invalid);
        }
        Ok(pp)
    }

    /// Layer decomposition with evaluation shifts: layer k lives in a Fock
    /// space with parameter u * q1^{alpha_k} q2^{k-1} q3^{beta_k}.
    pub fn to_layers(&self) -> Vec<(Partition, MonomialTriple)> {
        let l = self
            .layers
            .len()
            .max(self.boundary.alpha.len())
            .max(self.boundary.beta.len())
            .max(1);
        (1..=l)
            .map(|k| {
                (
                    self.layer(k),
                    MonomialTriple::new(
                        self.boundary.beta.part(k),
                        self.boundary.alpha.part(k),
                        k as i64 - 1,
                    ),
                )
            })
            .collect()
    }

    /// Concave corners: boxes outside Y all of whose predecessors are
    /// present (coordinates <= 0 counting as present); exactly the
    /// positions where a box can be added.
    pub fn concave_corners3(&self) -> Vec<(i64, i64, i64)> {
        let mut out = Vec::new();
        let lmax = self.layers.len() as i64 + 1;
        let rmax = self.row_extent() + 1;
        for k in 1..=lmax {
            for i in 1..=rmax {
                let here = self.entry(k as usize, i);
                if here >= INF {
                    continue;
                }
                let j = here + 1;
                let up = if i == 1 { INF } else { self.entry(k as usize, i - 1) };
                let back = if k == 1 { INF } else { self.entry(k as usize - 1, i) };
                if up >= j && back >= j {
                    out.push((i, j, k));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Convex corners: boxes of Y all of whose successors are absent;
    /// exactly the positions where a box can be removed.
    pub fn convex_corners3(&self) -> Vec<(i64, i64, i64)> {
        let mut out = Vec::new();
        let lmax = self.layers.len() as i64;
        let rmax = self.row_extent() + 1;
        for k in 1..=lmax {
            for i in 1..=rmax {
                let here = self.entry(k as usize, i);
                if here >= INF || here == 0 {
                    continue;
                }
                let j = here;
                let down = self.entry(k as usize, i + 1);
                let front = self.entry(k as usize + 1, i);
                if down < j && front < j {
                    out.push((i, j, k));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Adds a box at a concave corner.
    pub fn add_box(&self, b: (i64, i64, i64)) -> Result<PlanePartition, PpError> {
        let (i, j, k) = b;
        if !self.concave_corners3().contains(&b) {
            return Err(PpError::BadBox(b));
        }
        let mut layers = self.layers.clone();
        while (layers.len() as i64) < k {
            layers.push(self.boundary.gamma.clone());
        }
        let row = (i - self.boundary.beta.part(k as usize)) as usize;
        debug_assert!(j == self.entry(k as usize, i) + 1);
        layers[k as usize - 1] = layers[k as usize - 1].add_at_row(row);
        let mut pp = PlanePartition {
            boundary: self.boundary.clone(),
            layers,
        };
        pp.canonicalize();
        Ok(pp)
    }

    /// Removes a box at a convex corner.
    pub fn remove_box(&self, b: (i64, i64, i64)) -> Result<PlanePartition, PpError> {
        let (i, _j, k) = b;
        if !self.convex_corners3().contains(&b) {
            return Err(PpError::BadBox(b));
        }
        let mut layers = self.layers.clone();
        let row = (i - self.boundary.beta.part(k as usize)) as usize;
        layers[k as usize - 1] = layers[k as usize - 1].remove_at_row(row);
        let mut pp = PlanePartition {
            boundary: self.boundary.clone(),
            layers,
        };
        pp.canonicalize();
        Ok(pp)
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.boundary)?;
        for lam in &self.layers {
            write!(f, " {lam}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Graded enumeration
// ---------------------------------------------------------------------------

/// Enumerates all configurations of the given degree, optionally excluding
/// those containing a forbidden box.  The result is sorted by the canonical
/// deviation-box key, so the basis ordering is reproducible.
pub fn enumerate_pp(
    boundary: &BoundaryTriple,
    degree: i64,
    forbidden: Option<(i64, i64, i64)>,
) -> Vec<PlanePartition> {
    let allowed = |pp: &PlanePartition| match forbidden {
        Some((i, j, k)) => !pp.contains(i, j, k),
        None => true,
    };
    let omega = PlanePartition::minimal(boundary);
    if !allowed(&omega) {
        return Vec::new();
    }
    let mut level = vec![omega];
    for _ in 0..degree {
        let expanded: Vec<Vec<PlanePartition>> = crate::par::map_collect(level, |pp| {
            pp.concave_corners3()
                .into_iter()
                .map(|b| pp.add_box(b).expect("concave corner must be addable"))
                .filter(&allowed)
                .collect()
        });
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for child in expanded.into_iter().flatten() {
            if seen.insert(child.deviation_boxes()) {
                next.push(child);
            }
        }
        next.sort_by_key(|p| p.deviation_boxes());
        level = next;
    }
    level.sort_by_key(|p| p.deviation_boxes());
    level
}

/// Sequential twin of [`enumerate_pp`] (bench baseline).
pub fn enumerate_pp_seq(
    boundary: &BoundaryTriple,
    degree: i64,
    forbidden: Option<(i64, i64, i64)>,
) -> Vec<PlanePartition> {
    let allowed = |pp: &PlanePartition| match forbidden {
        Some((i, j, k)) => !pp.contains(i, j, k),
        None => true,
    };
    let omega = PlanePartition::minimal(boundary);
    if !allowed(&omega) {
        return Vec::new();
    }
    let mut level = vec![omega];
    for _ in 0..degree {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for pp in &level {
            for b in pp.concave_corners3() {
                let child = pp.add_box(b).expect("concave corner must be addable");
                if allowed(&child) && seen.insert(child.deviation_boxes()) {
                    next.push(child);
                }
            }
        }
        next.sort_by_key(|p| p.deviation_boxes());
        level = next;
    }
    level.sort_by_key(|p| p.deviation_boxes());
    level
}

// ---------------------------------------------------------------------------
// Shells
// ---------------------------------------------------------------------------

/// A shell point with the order of the zero (order < 0 meaning a pole) that
/// the eigenvalue function acquires at the corresponding monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShellPoint {
    pub pos: (i64, i64, i64),
    pub order: i64,
}

/// Computes the shell of a configuration: for every diagonal class of
/// monomials q1^j q2^k q3^i (classes are orbits under the shift
/// (i,j,k) -> (i+1,j+1,k+1), which acts trivially on values), the order of
/// zero of the eigenvalue function and the unique crossing point of the
/// diagonal with the surface of Y.
///
/// The order is computed locally: a box at position b contributes a zero at
/// the monomials of b - e_t (t = 1, 2, 3) and a pole at those of
/// b - e_s - e_t (s != t), and the function of the empty configuration
/// contributes a single pole on the main diagonal.  Summed along a
/// diagonal, only finitely many boxes contribute and the telescoping makes
/// all but finitely many classes cancel.
pub fn shell(pp: &PlanePartition) -> Vec<ShellPoint> {
    let b = pp.boundary();
    let feature = pp
        .deviation_boxes()
        .iter()
        .map(|&(i, j, k)| i.max(j).max(k))
        .max()
        .unwrap_or(0);
    let r = feature
        + b.alpha.part(1)
        + b.alpha.len() as i64
        + b.beta.part(1)
        + b.beta.len() as i64
        + b.gamma.part(1)
        + b.gamma.len() as i64
        + 4;
    let mut out = Vec::new();
    for d1 in -r..=r {
        for d2 in -r..=r {
            // Points on this diagonal: x(n) = (n, n + d1, n + d2).
            let x = |n: i64| (n, n + d1, n + d2);
            // Crossing: the largest n with x(n) in the completion.  The set
            // of such n is a down-set, and x(n_low - 1) always has a zero
            // coordinate, so scan upwards from there.
            let n_low = (-d1).max(-d2).max(0);
            let mut n0 = n_low - 1;
            loop {
                let (i, j, k) = x(n0 + 1);
                if pp.contains_bar(i, j, k) {
                    n0 += 1;
                } else {
                    break;
                }
            }
            // Local contributions along the diagonal.
            let mut order = if d1 == 0 && d2 == 0 { -1 } else { 0 };
            for n in (n_low - 1)..=(n0 + 1) {
                let (i, j, k) = x(n);
                let zero_nbrs = [(i + 1, j, k), (i, j + 1, k), (i, j, k + 1)];
                let pole_nbrs = [(i + 1, j + 1, k), (i + 1, j, k + 1), (i, j + 1, k + 1)];
                for &(a, bb, c) in &zero_nbrs {
                    if pp.contains(a, bb, c) {
                        order += 1;
                    }
                }
                for &(a, bb, c) in &pole_nbrs {
                    if pp.contains(a, bb, c) {
                        order -= 1;
                    }
                }
            }
            if order != 0 {
                out.push(ShellPoint { pos: x(n0), order });
            }
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Symmetry, resonance, splits
// ---------------------------------------------------------------------------

/// Applies a permutation of the three axes to a configuration.  `perm[t]`
/// is the image of axis t (axes ordered (i, j, k)).  The boundary triple
/// transforms accordingly; for example swapping i and j exchanges alpha
/// with beta and transposes gamma.
pub fn s3_transform(pp: &PlanePartition, perm: [usize; 3]) -> PlanePartition {
    let b = pp.boundary();
    // Cross-sections of Y at infinity along each axis, as partitions:
    //   axis i (rows of the section indexed by k):   alpha
    //   axis j (rows indexed by k):                  beta
    //   axis k (rows indexed by i):                  gamma
    // After permuting coordinates, the new section along new-axis t is the
    // old section along perm^{-1}(t), with its two remaining coordinates
    // possibly swapped (a transpose).
    let sections = [&b.alpha, &b.beta, &b.gamma];
    // Section along axis t is a partition in the plane of the other two
    // axes; rows of the stored partition are indexed by the *larger* of the
    // remaining axes in the fixed order (i, j, k): alpha rows by k, beta
    // rows by k, gamma rows by i.  Record (row_axis, col_axis) per section.
    let frames = [(2usize, 1usize), (2, 0), (0, 1)];
    let mut new_sections: Vec<Partition> = vec![Partition::empty(); 3];
    for old_axis in 0..3 {
        let new_axis = perm[old_axis];
        let (or_, oc) = frames[old_axis];
        let (nr, nc) = frames[new_axis];
        // The old row/col axes map to perm[or_], perm[oc]; if that matches
        // the new frame keep the partition, otherwise transpose it.
        let p = if (perm[or_], perm[oc]) == (nr, nc) {
            sections[old_axis].clone()
        } else {
            debug_assert_eq!((perm[oc], perm[or_]), (nr, nc));
            sections[old_axis].transpose()
        };
        new_sections[new_axis] = p;
    }
    let new_boundary = BoundaryTriple::new(
        new_sections[0].clone(),
        new_sections[1].clone(),
        new_sections[2].clone(),
    );
    let devs: Vec<(i64, i64, i64)> = pp
        .deviation_boxes()
        .iter()
        .map(|&(i, j, k)| {
            let old = [i, j, k];
            let mut new = [0i64; 3];
            for (t, &p) in perm.iter().enumerate() {
                new[p] = old[t];
            }
            (new[0], new[1], new[2])
        })
        .collect();
    let mut devs = devs;
    devs.sort_unstable();
    PlanePartition::from_deviation_boxes(&new_boundary, &devs)
        .expect("axis permutation preserves admissibility")
}

/// The distinguished box of a resonance K = q2^m q3^n on a boundary: the
/// unique (a, b, c) with a, b, c >= 1 such that K = q1^b q2^c q3^a,
/// (a, b, c) lies outside the minimal configuration, and
/// (a-1, b-1, c-1) lies inside its completion.
pub fn resonance_box(
    boundary: &BoundaryTriple,
    m: i64,
    n: i64,
) -> Result<(i64, i64, i64), PpError> {
    let omega = PlanePartition::minimal(boundary);
    for b in 1..=10_000i64 {
        let a = n + b;
        let c = m + b;
        if a < 1 || c < 1 {
            continue;
        }
        if !omega.contains(a, b, c) && omega.contains_bar(a - 1, b - 1, c - 1) {
            return Ok((a, b, c));
        }
    }
    Err(PpError::NoResonanceBox)
}

/// The auxiliary configurations omega_t generating the submodule chain at a
/// resonance: omega_0 = omega, and for t >= 1 the entries below layer
/// c + t - 1 and row a + t - 1 are raised to at least b + t - 1.  Each
/// omega_t (t >= 1) has the single convex corner (a+t-1, b+t-1, c+t-1).
pub fn omega_t(
    boundary: &BoundaryTriple,
    m: i64,
    n: i64,
    t: i64,
) -> Result<PlanePartition, PpError> {
    let (a, b, c) = resonance_box(boundary, m, n)?;
    let omega = PlanePartition::minimal(boundary);
    if t == 0 {
        return Ok(omega);
    }
    let mut boxes = omega.deviation_boxes();
    for k in 1..=(c + t - 1) {
        for i in 1..=(a + t - 1) {
            let cur = omega.entry(k as usize, i);
            if cur >= INF {
                continue;
            }
            let target = (b + t - 1).max(cur);
            for j in (cur + 1)..=target {
                boxes.push((i, j, k));
            }
        }
    }
    boxes.sort_unstable();
    boxes.dedup();
    PlanePartition::from_deviation_boxes(boundary, &boxes)
}

/// The six arm/leg partitions of a splits decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitParts {
    pub alpha_arms: Partition,
    pub alpha_legs: Partition,
    pub beta_arms: Partition,
    pub beta_legs: Partition,
    pub gamma_arms: Partition,
    pub gamma_legs: Partition,
}

/// Checks the splits condition of a boundary at the box (a, b, c) and, when
/// it holds, returns the six arm/leg partitions of the factorization.  The
/// condition requires the rows (a-1, b-1, *), (a-1, *, c-1) and
/// (*, b-1, c-1) to lie inside the completed minimal configuration.
pub fn splits_decompose(
    boundary: &BoundaryTriple,
    abc: (i64, i64, i64),
) -> Result<SplitParts, PpError> {
    let (a, b, c) = abc;
    let al = &boundary.alpha;
    let be = &boundary.beta;
    let ga = &boundary.gamma;
    let cond1 = a <= 1 || b <= 1 || ga.part((a - 1) as usize) >= b - 1;
    let cond2 = a <= 1 || c <= 1 || be.part((c - 1) as usize) >= a - 1;
    let cond3 = b <= 1 || c <= 1 || al.part((c - 1) as usize) >= b - 1;
    if !(cond1 && cond2 && cond3) {
        return Err(PpError::NotSplit(abc));
    }
    let take = |f: &dyn Fn(i64) -> i64, count: i64| -> Partition {
        let mut v: Vec<i64> = (1..=count).map(f).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        Partition::new(v)
    };
    let alt = al.transpose();
    let bet = be.transpose();
    let gat = ga.transpose();
    let alpha_arms = take(&|i| al.part(i as usize) - (b - 1), c - 1);
    let alpha_legs = take(&|i| alt.part(i as usize) - (c - 1), b - 1);
    let beta_arms = take(&|i| be.part(i as usize) - (a - 1), c - 1);
    let beta_legs = take(&|i| bet.part(i as usize) - (c - 1), a - 1);
    let gamma_arms = take(&|i| ga.part(i as usize) - (b - 1), a - 1);
    let gamma_legs = take(&|i| gat.part(i as usize) - (a - 1), b - 1);
    Ok(SplitParts {
        alpha_arms,
        alpha_legs,
        beta_arms,
        beta_legs,
        gamma_arms,
        gamma_legs,
    })
}
