//! Integer partitions and the 2D corner combinatorics used by the Fock
//! representation and as layers of plane partitions.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition: a weakly decreasing list of positive integers.  Trailing
/// zeros are trimmed on construction; parts beyond the length are zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<i64>);

impl Partition {
    /// Builds a partition, trimming trailing zeros.  Panics if the parts
    /// are negative or increase.
    pub fn new(mut parts: Vec<i64>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            assert!(w[0] >= w[1], "parts must be weakly decreasing: {parts:?}");
        }
        assert!(parts.last().is_none_or(|&p| p > 0), "parts must be nonnegative");
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The i-th part, 1-based; zero beyond the length.
    pub fn part(&self, i: usize) -> i64 {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// Membership of the box (row i, column j), 1-based.
    pub fn contains(&self, i: usize, j: i64) -> bool {
        j >= 1 && j <= self.part(i)
    }

    /// Conjugate (transposed) partition.
    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0];
        let mut t = Vec::with_capacity(cols as usize);
        for j in 1..=cols {
            t.push(self.0.iter().filter(|&&p| p >= j).count() as i64);
        }
        Partition::new(t)
    }

    /// Concave corners: positions (i, j) outside the diagram whose addition
    /// keeps it a partition, i.e. lambda_i = j - 1 < lambda_{i-1} (with
    /// lambda_0 = infinity).  There are always len + 1 at most and at least
    /// one; the count exceeds the convex-corner count by exactly one.
    pub fn concave_corners(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for i in 1..=self.0.len() + 1 {
            let here = self.part(i);
            let above = if i == 1 { i64::MAX } else { self.part(i - 1) };
            if here < above {
                out.push((i, here + 1));
            }
        }
        out
    }

    /// Convex corners: boxes (i, j) in the diagram whose removal keeps it a
    /// partition, i.e. lambda_i = j > lambda_{i+1}.
    pub fn convex_corners(&self) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for i in 1..=self.0.len() {
            let here = self.part(i);
            if here > self.part(i + 1) {
                out.push((i, here));
            }
        }
        out
    }

    /// Adds a box at row i (which must be a concave corner row).
    pub fn add_at_row(&self, i: usize) -> Partition {
        let mut parts = self.0.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Partition::new(parts)
    }

    /// Removes a box at row i (which must be a convex corner row).
    pub fn remove_at_row(&self, i: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        Partition::new(parts)
    }

    /// Elevated interlacing: lambda_i + a >= mu_{i + b} for all i >= 1.
    /// With (a, b) = (0, 0) this is containment mu ⊆ lambda.
    pub fn interlace_elevated(&self, mu: &Partition, a: i64, b: i64) -> bool {
        assert!(b >= 0, "row shift must be nonnegative");
        // For i beyond both lengths the condition reads a >= 0.
        if a < 0 {
            return false;
        }
        let imax = self.0.len().max(mu.0.len()) + 1;
        for i in 1..=imax {
            let rhs_index = i as i64 + b;
            let rhs = mu.part(rhs_index as usize);
            if self.part(i) + a < rhs {
                return false;
            }
        }
        // Rows of mu before the shift window must be dominated too when
        // b > 0? No: the condition only constrains mu_{i+b} for i >= 1,
        // leaving mu_1..mu_b unconstrained by definition.
        true
    }

    /// All partitions of n, in lexicographically decreasing order.
    pub fn all_of_size(n: i64) -> Vec<Partition> {
        fn rec(n: i64, maxpart: i64, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition::new(prefix.clone()));
                return;
            }
            let top = maxpart.min(n);
            for p in (1..=top).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses the textual form used by the command line: "(3,2,1)" or "()".
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| format!("partition must be parenthesized: {s:?}"))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in inner.split(',') {
        let v: i64 = piece
            .trim()
            .parse()
            .map_err(|_| format!("invalid part {piece:?} in {s:?}"))?;
        if v < 0 {
            return Err(format!("negative part in {s:?}"));
        }
        parts.push(v);
    }
    for w in parts.windows(2) {
        if w[0] < w[1] {
            return Err(format!("parts must be weakly decreasing in {s:?}"));
        }
    }
    Ok(Partition::new(parts))
}
