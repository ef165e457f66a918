//! Partitions, compositions, descent sets, skew shapes, ribbons and the three
//! ribbon gluing operations, plus corner/diagonal data for the box-adding
//! operator engines.
//!
//! Conventions (used consistently across the crate):
//! - English notation; cell (r, c) is 1-based, row 1 on top.
//! - The diagonal of cell (r, c) is c - r.
//! - A composition (a_1, ..., a_k) of n has descent set {a_1, a_1+a_2, ...}
//!   inside [1, n-1].
//! - The ribbon of (a_1, ..., a_k) has a_1 cells in its bottom row and a_k in
//!   its top row; consecutive rows overlap in exactly one column.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

// ===== Partition =====

/// Integer partition: weakly decreasing positive parts. `[]` is the empty one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("parts not weakly decreasing: {parts:?}")));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidShape(format!("zero part in partition: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Builds from any nonnegative part list: sorts decreasing, drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part at 1-based row index; 0 beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for (i, &p) in self.parts.iter().enumerate() {
            for c in 1..=p as usize {
                out.push((i + 1, c));
            }
        }
        out
    }

    pub fn has_cell(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && c as u32 <= self.part(r)
    }

    /// Cells that can be added keeping a partition shape, top row first.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for r in 1..=self.len() + 1 {
            let here = self.part(r);
            let above = if r == 1 { u32::MAX } else { self.part(r - 1) };
            if here < above {
                out.push((r, here as usize + 1));
            }
        }
        out
    }

    /// Cells that can be removed keeping a partition shape, top row first.
    pub fn removable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for r in 1..=self.len() {
            if self.part(r) > self.part(r + 1) {
                out.push((r, self.part(r) as usize));
            }
        }
        out
    }

    /// New partition with one cell added at (r, c); errors if not addable.
    pub fn with_added_cell(&self, r: usize, c: usize) -> Result<Partition> {
        if !self.addable_cells().contains(&(r, c)) {
            return Err(Error::InvalidShape(format!("cell ({r},{c}) not addable to {self}")));
        }
        let mut parts = self.parts.clone();
        if r == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// All partitions of total size n, in lexicographically decreasing order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            let hi = max.min(remaining);
            for next in (1..=hi).rev() {
                prefix.push(next);
                rec(remaining - next, next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = vec![];
        rec(n, n, &mut vec![], &mut out);
        out
    }

    /// All partitions fitting inside the given one (subdiagrams), any size.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn rec(bound: &[u32], row: usize, min_next: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if row == bound.len() {
                out.push(Partition { parts: prefix.iter().rev().cloned().filter(|&p| p > 0).collect() });
                return;
            }
            // build from the bottom row up so weak decrease is a lower bound
            for p in min_next..=bound[bound.len() - 1 - row] {
                prefix.push(p);
                rec(bound, row + 1, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = vec![];
        rec(&self.parts, 0, 0, &mut vec![], &mut out);
        out.sort();
        out.dedup();
        out
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must look like [3,2,1]: {s:?}")))?;
        let parts = parse_u32_list(inner)?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join_u32(&self.parts))
    }
}

// ===== Composition =====

/// Composition: ordered list of positive parts. `()` is the empty one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidShape(format!("zero part in composition: {parts:?}")));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn reversed(&self) -> Composition {
        Composition { parts: self.parts.iter().rev().cloned().collect() }
    }

    /// All compositions of total size n.
    pub fn all_of_size(n: u32) -> Vec<Composition> {
        fn rec(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if remaining == 0 {
                out.push(Composition { parts: prefix.clone() });
                return;
            }
            for next in 1..=remaining {
                prefix.push(next);
                rec(remaining - next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = vec![];
        rec(n, &mut vec![], &mut out);
        out
    }

    pub fn parse(s: &str) -> Result<Composition> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("composition must look like (2,1): {s:?}")))?;
        let parts = parse_u32_list(inner)?;
        Composition::new(parts)
    }
}

// ===== Descent sets =====

/// A subset of [1, n-1] together with its ambient n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DescentSet {
    pub n: u32,
    pub set: BTreeSet<u32>,
}

impl DescentSet {
    pub fn new(n: u32, set: BTreeSet<u32>) -> Result<Self> {
        if let Some(&d) = set.iter().find(|&&d| d == 0 || d >= n) {
            return Err(Error::InvalidArgument(format!("descent {d} outside [1, {}]", n.saturating_sub(1))));
        }
        Ok(DescentSet { n, set })
    }
}

/// Descent set {a_1, a_1+a_2, ...} of a composition, ambient |alpha|.
pub fn comp_to_descents(alpha: &Composition) -> DescentSet {
    let mut set = BTreeSet::new();
    let mut acc = 0;
    for (i, &p) in alpha.parts().iter().enumerate() {
        acc += p;
        if i + 1 < alpha.len() {
            set.insert(acc);
        }
    }
    DescentSet { n: alpha.size(), set }
}

/// All compositions of n, one per subset of [n-1], in bitmask order.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let bits = (n - 1) as usize;
    assert!(bits < 32, "too many compositions to enumerate");
    (0u64..(1 << bits))
        .map(|mask| {
            let set = (1..n).filter(|&d| mask >> (d - 1) & 1 == 1).collect();
            descents_to_comp(&DescentSet { n, set })
        })
        .collect()
}

/// Inverse of `comp_to_descents`: consecutive differences.
pub fn descents_to_comp(d: &DescentSet) -> Composition {
    if d.n == 0 {
        return Composition::empty();
    }
    let mut parts = vec![];
    let mut prev = 0;
    for &x in &d.set {
        parts.push(x - prev);
        prev = x;
    }
    parts.push(d.n - prev);
    Composition { parts }
}

// ===== Skew shapes =====

/// Skew shape: pair of partitions inner ⊆ outer. Cells are outer minus inner.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("inner {inner} not contained in outer {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Cells in row-major order (top row first, left to right).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for r in 1..=self.outer.len() {
            for c in self.inner.part(r) as usize + 1..=self.outer.part(r) as usize {
                out.push((r, c));
            }
        }
        out
    }

    pub fn has_cell(&self, r: usize, c: usize) -> bool {
        self.outer.has_cell(r, c) && !self.inner.has_cell(r, c)
    }

    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return false;
        }
        let set: BTreeSet<_> = cells.iter().cloned().collect();
        let mut seen = BTreeSet::new();
        let mut stack = vec![cells[0]];
        while let Some((r, c)) = stack.pop() {
            if !seen.insert((r, c)) {
                continue;
            }
            let mut neighbors = vec![(r + 1, c), (r, c + 1)];
            if r > 1 {
                neighbors.push((r - 1, c));
            }
            if c > 1 {
                neighbors.push((r, c - 1));
            }
            for nb in neighbors {
                if set.contains(&nb) {
                    stack.push(nb);
                }
            }
        }
        seen.len() == cells.len()
    }

    pub fn has_2x2(&self) -> bool {
        self.cells()
            .iter()
            .any(|&(r, c)| self.has_cell(r, c + 1) && self.has_cell(r + 1, c) && self.has_cell(r + 1, c + 1))
    }

    pub fn is_ribbon(&self) -> bool {
        self.size() > 0 && self.is_connected() && !self.has_2x2()
    }

    /// "[3,2]/[1]" with the "/[..]" omitted for straight shapes; parses both.
    pub fn parse(s: &str) -> Result<SkewShape> {
        let s = s.trim();
        if let Some((o, i)) = s.split_once('/') {
            SkewShape::new(Partition::parse(o)?, Partition::parse(i)?)
        } else {
            Ok(SkewShape::straight(Partition::parse(s)?))
        }
    }
}

// ===== Ribbons =====

/// The ribbon skew shape of a composition: bottom row has a_1 cells, next row
/// up a_2, and so on, each row overlapping the one below in exactly one
/// column. Empty composition gives the empty shape.
pub fn ribbon(alpha: &Composition) -> SkewShape {
    let k = alpha.len();
    if k == 0 {
        return SkewShape::straight(Partition::empty());
    }
    let a = alpha.parts();
    // right edge per display row (row 1 on top holds a_k)
    let mut right = vec![0u32; k];
    right[k - 1] = a[0];
    for i in (0..k - 1).rev() {
        right[i] = right[i + 1] + a[k - 1 - i] - 1;
    }
    let outer = Partition { parts: right.clone() };
    let inner_parts: Vec<u32> = (0..k).map(|i| right[i] - a[k - 1 - i]).collect();
    let inner = Partition { parts: inner_parts.into_iter().filter(|&p| p > 0).collect() };
    SkewShape { outer, inner }
}

/// Reads a ribbon back to its composition (bottom-to-top row lengths).
pub fn ribbon_to_comp(shape: &SkewShape) -> Result<Composition> {
    if !shape.is_ribbon() {
        return Err(Error::InvalidShape(format!("not a ribbon: {shape}")));
    }
    let mut parts: Vec<u32> = (1..=shape.outer.len())
        .map(|r| shape.outer.part(r) - shape.inner.part(r))
        .collect();
    parts.reverse();
    let alpha = Composition::new(parts)?;
    if ribbon(&alpha) != normalize_cells(&shape.cells())? {
        return Err(Error::InvalidShape(format!("ribbon {shape} is not in normalized position")));
    }
    Ok(alpha)
}

/// The three ways to glue shape `tau` onto shape `rho`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Glue {
    /// Bottom-left cell of tau goes directly right of rho's top-right cell.
    Right,
    /// Bottom-left cell of tau goes directly above rho's top-right cell.
    Above,
    /// Bottom-left cell of tau lands on rho's top-right cell (shapes overlap
    /// in that one cell).
    Overlap,
}

/// Glues two nonempty skew shapes and renormalizes to the minimal
/// inner/outer pair. Errors if the union of cells is not a skew shape.
pub fn ribbon_glue(rho: &SkewShape, tau: &SkewShape, how: Glue) -> Result<SkewShape> {
    if rho.size() == 0 || tau.size() == 0 {
        return Err(Error::InvalidArgument("cannot glue an empty shape".into()));
    }
    let rc: Vec<(i64, i64)> = rho.cells().iter().map(|&(r, c)| (r as i64, c as i64)).collect();
    let tc: Vec<(i64, i64)> = tau.cells().iter().map(|&(r, c)| (r as i64, c as i64)).collect();
    // top-right cell of rho
    let top = rc.iter().map(|&(r, _)| r).min().unwrap();
    let ur = (top, rc.iter().filter(|&&(r, _)| r == top).map(|&(_, c)| c).max().unwrap());
    // bottom-left cell of tau
    let bot = tc.iter().map(|&(r, _)| r).max().unwrap();
    let ll = (bot, tc.iter().filter(|&&(r, _)| r == bot).map(|&(_, c)| c).min().unwrap());
    let target = match how {
        Glue::Right => (ur.0, ur.1 + 1),
        Glue::Above => (ur.0 - 1, ur.1),
        Glue::Overlap => ur,
    };
    let shift = (target.0 - ll.0, target.1 - ll.1);
    let mut cells: BTreeSet<(i64, i64)> = rc.iter().cloned().collect();
    for &(r, c) in &tc {
        cells.insert((r + shift.0, c + shift.1));
    }
    let expected = match how {
        Glue::Overlap => rc.len() + tc.len() - 1,
        _ => rc.len() + tc.len(),
    };
    if cells.len() != expected {
        return Err(Error::InvalidShape("glued shapes collide".into()));
    }
    let cells: Vec<(i64, i64)> = cells.into_iter().collect();
    normalize_cells_i64(&cells)
}

/// Rebuilds the canonical skew pair from a set of cells (rows contiguous,
/// both boundary partitions weakly decreasing); cells may sit anywhere.
fn normalize_cells_i64(cells: &[(i64, i64)]) -> Result<SkewShape> {
    if cells.is_empty() {
        return Ok(SkewShape::straight(Partition::empty()));
    }
    let rmin = cells.iter().map(|&(r, _)| r).min().unwrap();
    let rmax = cells.iter().map(|&(r, _)| r).max().unwrap();
    let cmin = cells.iter().map(|&(_, c)| c).min().unwrap();
    let height = (rmax - rmin + 1) as usize;
    let mut lo = vec![i64::MAX; height];
    let mut hi = vec![i64::MIN; height];
    let mut count = vec![0usize; height];
    for &(r, c) in cells {
        let i = (r - rmin) as usize;
        lo[i] = lo[i].min(c);
        hi[i] = hi[i].max(c);
        count[i] += 1;
    }
    for i in 0..height {
        if count[i] == 0 {
            return Err(Error::InvalidShape("empty row inside shape".into()));
        }
        if (hi[i] - lo[i] + 1) as usize != count[i] {
            return Err(Error::InvalidShape("row not contiguous".into()));
        }
    }
    let outer: Vec<u32> = hi.iter().map(|&b| (b - cmin + 1) as u32).collect();
    let inner: Vec<u32> = lo.iter().map(|&a| (a - cmin) as u32).collect();
    if outer.windows(2).any(|w| w[0] < w[1]) || inner.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidShape("cells do not form a skew shape".into()));
    }
    let outer = Partition { parts: outer };
    let inner = Partition { parts: inner.into_iter().filter(|&p| p > 0).collect() };
    SkewShape::new(outer, inner)
}

fn normalize_cells(cells: &[(usize, usize)]) -> Result<SkewShape> {
    let v: Vec<(i64, i64)> = cells.iter().map(|&(r, c)| (r as i64, c as i64)).collect();
    normalize_cells_i64(&v)
}

/// Composition-level glue: `Right` merges the join rows, `Above` stacks,
/// `Overlap` merges with one shared cell.
pub fn comp_glue(alpha: &Composition, beta: &Composition, how: Glue) -> Result<Composition> {
    if alpha.is_empty() || beta.is_empty() {
        return Err(Error::InvalidArgument("cannot glue an empty composition".into()));
    }
    let a = alpha.parts();
    let b = beta.parts();
    let parts: Vec<u32> = match how {
        Glue::Right => {
            let mut p = a[..a.len() - 1].to_vec();
            p.push(a[a.len() - 1] + b[0]);
            p.extend_from_slice(&b[1..]);
            p
        }
        Glue::Above => {
            let mut p = a.to_vec();
            p.extend_from_slice(b);
            p
        }
        Glue::Overlap => {
            let mut p = a[..a.len() - 1].to_vec();
            p.push(a[a.len() - 1] + b[0] - 1);
            p.extend_from_slice(&b[1..]);
            p
        }
    };
    Composition::new(parts)
}

// ===== Corners =====

/// Corner cells of a partition relative to a fixed floor shape nu.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corners {
    /// Addable cells (r, c, diagonal), top row first.
    pub addable: Vec<(usize, usize, i64)>,
    /// Removable cells of lambda that are not cells of nu, with diagonals.
    pub removable_free: Vec<(usize, usize, i64)>,
}

/// Addable-corner and free removable-corner data of `lambda` over `nu`.
pub fn corners(lambda: &Partition, nu: &Partition) -> Result<Corners> {
    if !lambda.contains(nu) {
        return Err(Error::InvalidShape(format!("floor {nu} not contained in {lambda}")));
    }
    let addable = lambda
        .addable_cells()
        .into_iter()
        .map(|(r, c)| (r, c, c as i64 - r as i64))
        .collect();
    let removable_free = lambda
        .removable_cells()
        .into_iter()
        .filter(|&(r, c)| !nu.has_cell(r, c))
        .map(|(r, c)| (r, c, c as i64 - r as i64))
        .collect();
    Ok(Corners { addable, removable_free })
}

// ===== Display and parsing =====

pub fn parse_u32_list(inner: &str) -> Result<Vec<u32>> {
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad integer {p:?}: {e}")))
        })
        .collect()
}

pub fn join_u32(parts: &[u32]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join_u32(&self.parts))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn descents_of_composition() {
        let d = comp_to_descents(&comp(&[2, 1]));
        assert_eq!(d.n, 3);
        assert_eq!(d.set, BTreeSet::from([2]));
        assert_eq!(descents_to_comp(&d), comp(&[2, 1]));
        // empty and single-part edge cases
        assert_eq!(descents_to_comp(&comp_to_descents(&Composition::empty())), Composition::empty());
        let d5 = comp_to_descents(&comp(&[5]));
        assert!(d5.set.is_empty());
        assert_eq!(d5.n, 5);
    }

    #[test]
    fn descent_roundtrip_exhaustive() {
        for n in 0..=8u32 {
            for alpha in Composition::all_of_size(n) {
                assert_eq!(descents_to_comp(&comp_to_descents(&alpha)), alpha);
            }
        }
    }

    #[test]
    fn ribbon_golden_shapes() {
        assert_eq!(ribbon(&comp(&[3, 1])), SkewShape::new(part(&[3, 3]), part(&[2])).unwrap());
        assert_eq!(ribbon(&comp(&[2, 2])), SkewShape::new(part(&[3, 2]), part(&[1])).unwrap());
        assert_eq!(ribbon(&comp(&[4])), SkewShape::straight(part(&[4])));
        assert_eq!(ribbon(&comp(&[1, 1, 1])), SkewShape::straight(part(&[1, 1, 1])));
        assert_eq!(ribbon(&Composition::empty()).size(), 0);
    }

    #[test]
    fn ribbons_are_ribbons() {
        for n in 1..=7u32 {
            for alpha in Composition::all_of_size(n) {
                let r = ribbon(&alpha);
                assert_eq!(r.size(), n);
                assert!(r.is_ribbon(), "ribbon of {alpha} fails shape test");
                assert_eq!(ribbon_to_comp(&r).unwrap(), alpha);
            }
        }
    }

    #[test]
    fn glue_matches_composition_glue() {
        for n in 1..=4u32 {
            for m in 1..=4u32 {
                for a in Composition::all_of_size(n) {
                    for b in Composition::all_of_size(m) {
                        for how in [Glue::Right, Glue::Above, Glue::Overlap] {
                            let by_shape = ribbon_glue(&ribbon(&a), &ribbon(&b), how).unwrap();
                            let by_comp = ribbon(&comp_glue(&a, &b, how).unwrap());
                            assert_eq!(by_shape, by_comp, "glue mismatch {a} {b} {how:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn glue_sizes() {
        let a = comp(&[3, 2, 5, 1]);
        let b = comp(&[4, 2]);
        assert_eq!(comp_glue(&a, &b, Glue::Right).unwrap(), comp(&[3, 2, 5, 5, 2]));
        assert_eq!(comp_glue(&a, &b, Glue::Above).unwrap(), comp(&[3, 2, 5, 1, 4, 2]));
        assert_eq!(comp_glue(&a, &b, Glue::Overlap).unwrap(), comp(&[3, 2, 5, 4, 2]));
    }

    #[test]
    fn corner_diagonals() {
        let lam = part(&[4, 3, 3, 1]);
        let c = corners(&lam, &Partition::empty()).unwrap();
        let add: Vec<i64> = c.addable.iter().map(|&(_, _, d)| d).collect();
        let rem: Vec<i64> = c.removable_free.iter().map(|&(_, _, d)| d).collect();
        assert_eq!(add, vec![4, 2, -2, -4]);
        assert_eq!(rem, vec![3, 0, -3]);

        let one = part(&[1]);
        let c1 = corners(&one, &Partition::empty()).unwrap();
        assert_eq!(c1.addable.iter().map(|&(_, _, d)| d).collect::<Vec<_>>(), vec![1, -1]);
        assert_eq!(c1.removable_free.iter().map(|&(_, _, d)| d).collect::<Vec<_>>(), vec![0]);

        let c0 = corners(&Partition::empty(), &Partition::empty()).unwrap();
        assert_eq!(c0.addable, vec![(1, 1, 0)]);
        assert!(c0.removable_free.is_empty());

        // corners interleave strictly along the diagonal axis
        for lam in part(&[4, 4, 2, 1]).subdiagrams() {
            let c = corners(&lam, &Partition::empty()).unwrap();
            let mut diags: Vec<i64> = vec![];
            let mut merged: Vec<(i64, bool)> = c.addable.iter().map(|&(_, _, d)| (d, true)).collect();
            merged.extend(c.removable_free.iter().map(|&(_, _, d)| (d, false)));
            merged.sort();
            for w in merged.windows(2) {
                assert_ne!(w[0].0, w[1].0);
                assert_ne!(w[0].1, w[1].1, "addable/removable must alternate");
            }
            diags.extend(merged.iter().map(|x| x.0));
            assert!(diags.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn corners_respect_floor() {
        // removable cell sitting inside nu is not free
        let lam = part(&[2, 1]);
        let nu = part(&[2]);
        let c = corners(&lam, &nu).unwrap();
        assert_eq!(c.removable_free, vec![(2, 1, -1)]);
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["[4,3,3,1]", "[]", "[1]"] {
            assert_eq!(Partition::parse(s).unwrap().to_string(), s);
        }
        for s in ["(2,1)", "()", "(5)"] {
            assert_eq!(Composition::parse(s).unwrap().to_string(), s);
        }
        for s in ["[3,2]/[1]", "[3,2]", "[1,1]"] {
            assert_eq!(SkewShape::parse(s).unwrap().to_string(), s);
        }
        assert!(Partition::parse("[1,2]").is_err());
        assert!(Partition::parse("[0]").is_err());
        assert!(Composition::parse("(1,0)").is_err());
        assert!(SkewShape::parse("[1]/[2]").is_err());
    }

    #[test]
    fn conjugate_and_containment() {
        assert_eq!(part(&[4, 3, 3, 1]).conjugate(), part(&[4, 3, 3, 1]));
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[3, 1]).conjugate().conjugate(), part(&[3, 1]));
        assert!(part(&[3, 2]).contains(&part(&[2, 2])));
        assert!(!part(&[3, 2]).contains(&part(&[1, 1, 1])));
    }

    #[test]
    fn skew_cells_and_connectivity() {
        let s = SkewShape::parse("[3,3]/[2]").unwrap();
        assert_eq!(s.cells(), vec![(1, 3), (2, 1), (2, 2), (2, 3)]);
        assert!(s.is_connected());
        assert!(!s.has_2x2());
        let disc = SkewShape::parse("[3,1]/[2]").unwrap();
        assert!(!disc.is_connected());
        let square = SkewShape::parse("[2,2]").unwrap();
        assert!(square.has_2x2());
        assert!(!square.is_ribbon());
    }
}
