//! Tableau models: semistandard, reverse plane partitions, set-valued, weak
//! set-valued, valued-set (with groups), and elegant fillings, together with
//! their weight generating functions and the insertion bijection sending a
//! reverse plane partition to a semistandard tableau plus an elegant filling.
//!
//! All shapes are in English notation with 1-based cells (row, col).

use crate::error::{Error, Result};
use crate::series::TruncPoly;
use crate::shapes::{Partition, SkewShape};
use std::collections::BTreeMap;
use std::fmt;

/// A filling of a skew shape: each cell holds a sorted nonempty list of
/// entries (a set or multiset depending on the model).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Filling {
    shape: SkewShape,
    entries: BTreeMap<(usize, usize), Vec<u32>>,
}

impl Filling {
    pub fn new(shape: SkewShape, mut entries: BTreeMap<(usize, usize), Vec<u32>>) -> Result<Self> {
        let cells = shape.cells();
        if entries.len() != cells.len() || !cells.iter().all(|c| entries.contains_key(c)) {
            return Err(Error::InvalidShape(format!("entries do not cover the cells of {shape} exactly")));
        }
        for v in entries.values_mut() {
            if v.is_empty() {
                return Err(Error::InvalidArgument("empty cell entry".into()));
            }
            if v.iter().any(|&x| x == 0) {
                return Err(Error::InvalidArgument("entries must be positive".into()));
            }
            v.sort_unstable();
        }
        Ok(Filling { shape, entries })
    }

    /// Single-valued filling of a straight shape from its rows.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let shape = SkewShape::straight(outer);
        let mut entries = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                entries.insert((i + 1, j + 1), vec![v]);
            }
        }
        Filling::new(shape, entries)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<&[u32]> {
        self.entries.get(&(r, c)).map(|v| v.as_slice())
    }

    pub fn cells(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<u32>)> {
        self.entries.iter()
    }

    /// Rows of a single-valued filling of a straight shape.
    pub fn rows(&self) -> Result<Vec<Vec<u32>>> {
        if !self.shape.is_straight() {
            return Err(Error::InvalidShape("rows() needs a straight shape".into()));
        }
        let parts = self.shape.outer().parts();
        let mut out = vec![];
        for (i, &len) in parts.iter().enumerate() {
            let mut row = vec![];
            for j in 1..=len as usize {
                let e = &self.entries[&(i + 1, j)];
                if e.len() != 1 {
                    return Err(Error::InvalidArgument("rows() needs single-valued cells".into()));
                }
                row.push(e[0]);
            }
            out.push(row);
        }
        Ok(out)
    }

    fn single(&self, r: usize, c: usize) -> Option<u32> {
        self.entries.get(&(r, c)).and_then(|v| if v.len() == 1 { Some(v[0]) } else { None })
    }

    fn all_single(&self) -> bool {
        self.entries.values().all(|v| v.len() == 1)
    }

    fn cell_min(&self, r: usize, c: usize) -> Option<u32> {
        self.entries.get(&(r, c)).map(|v| v[0])
    }

    fn cell_max(&self, r: usize, c: usize) -> Option<u32> {
        self.entries.get(&(r, c)).map(|v| *v.last().unwrap())
    }

    /// Semistandard: single values, rows weakly increasing, columns strictly.
    pub fn is_ssyt(&self) -> bool {
        self.all_single()
            && self.entries.keys().all(|&(r, c)| {
                self.single(r, c - 1).is_none_or(|l| l <= self.single(r, c).unwrap())
                    && self.single(r - 1, c).is_none_or(|a| a < self.single(r, c).unwrap())
            })
    }

    /// Reverse plane partition: single values, rows and columns weakly
    /// increasing.
    pub fn is_rpp(&self) -> bool {
        self.all_single()
            && self.entries.keys().all(|&(r, c)| {
                self.single(r, c - 1).is_none_or(|l| l <= self.single(r, c).unwrap())
                    && self.single(r - 1, c).is_none_or(|a| a <= self.single(r, c).unwrap())
            })
    }

    /// Transpose of a semistandard tableau: rows strictly increasing,
    /// columns weakly.
    pub fn is_transpose_ssyt(&self) -> bool {
        self.all_single()
            && self.entries.keys().all(|&(r, c)| {
                self.single(r, c - 1).is_none_or(|l| l < self.single(r, c).unwrap())
                    && self.single(r - 1, c).is_none_or(|a| a <= self.single(r, c).unwrap())
            })
    }

    /// Set-valued semistandard: sets, weak along rows (max of the left cell
    /// at most min of the right), strict down columns.
    pub fn is_set_valued(&self) -> bool {
        self.entries.values().all(|v| v.windows(2).all(|w| w[0] < w[1]))
            && self.entries.keys().all(|&(r, c)| {
                let mn = self.cell_min(r, c).unwrap();
                self.cell_max(r, c - 1).is_none_or(|l| l <= mn)
                    && self.cell_max(r - 1, c).is_none_or(|a| a < mn)
            })
    }

    /// Weak set-valued: multisets, strict along rows, weak down columns.
    pub fn is_weak_set_valued(&self) -> bool {
        self.entries.keys().all(|&(r, c)| {
            let mn = self.cell_min(r, c).unwrap();
            self.cell_max(r, c - 1).is_none_or(|l| l < mn)
                && self.cell_max(r - 1, c).is_none_or(|a| a <= mn)
        })
    }

    /// Elegant: semistandard with the entries of row i at most i-1.
    pub fn is_elegant(&self) -> bool {
        self.is_ssyt() && self.entries.iter().all(|(&(r, _), v)| (v[0] as usize) < r)
    }

    /// Exponent vector counting every occurrence of each letter.
    pub fn content_exponents(&self, nvars: usize) -> Result<Vec<u32>> {
        let mut e = vec![0u32; nvars];
        for v in self.entries.values() {
            for &x in v {
                if x as usize > nvars {
                    return Err(Error::InvalidArgument(format!("entry {x} exceeds {nvars} variables")));
                }
                e[x as usize - 1] += 1;
            }
        }
        Ok(e)
    }

    /// Exponent vector counting, for each letter, the number of columns
    /// containing it.
    pub fn column_weight_exponents(&self, nvars: usize) -> Result<Vec<u32>> {
        let mut per_col: BTreeMap<usize, std::collections::BTreeSet<u32>> = BTreeMap::new();
        for (&(_, c), v) in &self.entries {
            per_col.entry(c).or_default().extend(v.iter().copied());
        }
        let mut e = vec![0u32; nvars];
        for vals in per_col.values() {
            for &x in vals {
                if x as usize > nvars {
                    return Err(Error::InvalidArgument(format!("entry {x} exceeds {nvars} variables")));
                }
                e[x as usize - 1] += 1;
            }
        }
        Ok(e)
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for (&(r, _), v) in &self.entries {
            let cell = if v.len() == 1 {
                v[0].to_string()
            } else {
                format!("{{{}}}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            };
            rows.entry(r).or_default().push(cell);
        }
        let body: Vec<String> = rows.values().map(|cells| cells.join(" ")).collect();
        write!(f, "[{}]", body.join(" / "))
    }
}

/// Valued-set tableau: a transpose-semistandard filling plus a partition of
/// the cells into groups, each group a vertical run of equal entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedSetTableau {
    pub filling: Filling,
    pub groups: Vec<Vec<(usize, usize)>>,
}

impl ValuedSetTableau {
    pub fn new(filling: Filling, groups: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        if !filling.is_transpose_ssyt() {
            return Err(Error::InvalidArgument("filling is not transpose-semistandard".into()));
        }
        let mut covered = std::collections::BTreeSet::new();
        for g in &groups {
            if g.is_empty() {
                return Err(Error::InvalidArgument("empty group".into()));
            }
            let col = g[0].1;
            let val = filling.single(g[0].0, g[0].1);
            let mut sorted = g.clone();
            sorted.sort();
            for (i, &(r, c)) in sorted.iter().enumerate() {
                if c != col
                    || filling.single(r, c) != val
                    || (i > 0 && r != sorted[i - 1].0 + 1)
                    || !covered.insert((r, c))
                {
                    return Err(Error::InvalidArgument(
                        "groups must be disjoint vertical runs of equal entries".into(),
                    ));
                }
            }
        }
        if covered.len() != filling.shape().cells().len() {
            return Err(Error::InvalidArgument("groups do not cover the shape".into()));
        }
        Ok(ValuedSetTableau { filling, groups })
    }

    /// Exponent vector counting, for each letter, the groups holding it.
    pub fn group_exponents(&self, nvars: usize) -> Result<Vec<u32>> {
        let mut e = vec![0u32; nvars];
        for g in &self.groups {
            let v = self.filling.single(g[0].0, g[0].1).unwrap();
            if v as usize > nvars {
                return Err(Error::InvalidArgument(format!("entry {v} exceeds {nvars} variables")));
            }
            e[v as usize - 1] += 1;
        }
        Ok(e)
    }
}

// ===== Enumeration =====

fn neighbor_indices(cells: &[(usize, usize)]) -> Vec<(Option<usize>, Option<usize>)> {
    let index: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    cells
        .iter()
        .map(|&(r, c)| {
            let left = if c > 1 { index.get(&(r, c - 1)).copied() } else { None };
            let above = if r > 1 { index.get(&(r - 1, c)).copied() } else { None };
            (left, above)
        })
        .collect()
}

fn enumerate_single<F>(shape: &SkewShape, mut lo_of: F, hi_of: impl Fn(usize) -> u32) -> Vec<Filling>
where
    F: FnMut(Option<u32>, Option<u32>) -> u32,
{
    let cells = shape.cells();
    let nbrs = neighbor_indices(&cells);
    let mut out = vec![];
    let mut vals: Vec<u32> = vec![];
    fn rec<F2: FnMut(Option<u32>, Option<u32>) -> u32>(
        cells: &[(usize, usize)],
        nbrs: &[(Option<usize>, Option<usize>)],
        lo_of: &mut F2,
        hi_of: &impl Fn(usize) -> u32,
        vals: &mut Vec<u32>,
        out: &mut Vec<Filling>,
        shape: &SkewShape,
    ) {
        let i = vals.len();
        if i == cells.len() {
            let entries: BTreeMap<(usize, usize), Vec<u32>> =
                cells.iter().zip(vals.iter()).map(|(&c, &v)| (c, vec![v])).collect();
            out.push(Filling { shape: shape.clone(), entries });
            return;
        }
        let (l, a) = nbrs[i];
        let lo = lo_of(l.map(|j| vals[j]), a.map(|j| vals[j])).max(1);
        for v in lo..=hi_of(cells[i].0) {
            vals.push(v);
            rec(cells, nbrs, lo_of, hi_of, vals, out, shape);
            vals.pop();
        }
    }
    rec(&cells, &nbrs, &mut lo_of, &hi_of, &mut vals, &mut out, shape);
    out
}

/// Semistandard tableaux with entries at most max_entry.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: u32) -> Vec<Filling> {
    enumerate_single(shape, |l, a| l.unwrap_or(1).max(a.map_or(1, |x| x + 1)), |_| max_entry)
}

/// Reverse plane partitions with entries at most max_entry.
pub fn enumerate_rpp(shape: &SkewShape, max_entry: u32) -> Vec<Filling> {
    enumerate_single(shape, |l, a| l.unwrap_or(1).max(a.unwrap_or(1)), |_| max_entry)
}

/// Transpose-semistandard fillings with entries at most max_entry.
pub fn enumerate_transpose_ssyt(shape: &SkewShape, max_entry: u32) -> Vec<Filling> {
    enumerate_single(shape, |l, a| l.map_or(1, |x| x + 1).max(a.unwrap_or(1)), |_| max_entry)
}

/// Elegant fillings: semistandard with row-i entries at most i-1.
pub fn enumerate_elegant(shape: &SkewShape) -> Vec<Filling> {
    enumerate_single(
        shape,
        |l, a| l.unwrap_or(1).max(a.map_or(1, |x| x + 1)),
        |row| (row - 1) as u32,
    )
}

/// Number of elegant fillings of lambda/mu (zero unless mu fits in lambda).
pub fn elegant_count(lambda: &Partition, mu: &Partition) -> u64 {
    match SkewShape::new(lambda.clone(), mu.clone()) {
        Ok(shape) => enumerate_elegant(&shape).len() as u64,
        Err(_) => 0,
    }
}

fn enumerate_multi<G>(shape: &SkewShape, max_entry: u32, max_total: usize, cell_choices: G) -> Vec<Filling>
where
    G: Fn(Option<u32>, Option<u32>, u32, usize) -> Vec<Vec<u32>>,
{
    let cells = shape.cells();
    let nbrs = neighbor_indices(&cells);
    let mut out = vec![];
    let mut chosen: Vec<Vec<u32>> = vec![];
    fn rec<G2: Fn(Option<u32>, Option<u32>, u32, usize) -> Vec<Vec<u32>>>(
        cells: &[(usize, usize)],
        nbrs: &[(Option<usize>, Option<usize>)],
        max_entry: u32,
        budget: usize,
        cell_choices: &G2,
        chosen: &mut Vec<Vec<u32>>,
        out: &mut Vec<Filling>,
        shape: &SkewShape,
    ) {
        let i = chosen.len();
        if i == cells.len() {
            let entries: BTreeMap<(usize, usize), Vec<u32>> =
                cells.iter().zip(chosen.iter()).map(|(&c, v)| (c, v.clone())).collect();
            out.push(Filling { shape: shape.clone(), entries });
            return;
        }
        let remaining_cells = cells.len() - i - 1;
        if budget <= remaining_cells {
            return;
        }
        let cell_budget = budget - remaining_cells;
        let (l, a) = nbrs[i];
        let lmax = l.map(|j| *chosen[j].last().unwrap());
        let amax = a.map(|j| *chosen[j].last().unwrap());
        for v in cell_choices(lmax, amax, max_entry, cell_budget) {
            let used = v.len();
            chosen.push(v);
            rec(cells, nbrs, max_entry, budget - used, cell_choices, chosen, out, shape);
            chosen.pop();
        }
    }
    rec(&cells, &nbrs, max_entry, max_total, &cell_choices, &mut chosen, &mut out, shape);
    out
}

/// Nonempty subsets of [lo, hi] with at most max_size elements, as sorted
/// vectors.
pub(crate) fn subsets_from(lo: u32, hi: u32, max_size: usize) -> Vec<Vec<u32>> {
    let mut out = vec![];
    fn rec(from: u32, hi: u32, max_size: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_size {
            return;
        }
        for v in from..=hi {
            cur.push(v);
            rec(v + 1, hi, max_size, cur, out);
            cur.pop();
        }
    }
    if lo <= hi {
        rec(lo, hi, max_size, &mut vec![], &mut out);
    }
    out
}

/// Nonempty multisets from [lo, hi] with at most max_size elements, as
/// sorted vectors.
fn multisets_from(lo: u32, hi: u32, max_size: usize) -> Vec<Vec<u32>> {
    let mut out = vec![];
    fn rec(from: u32, hi: u32, max_size: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_size {
            return;
        }
        for v in from..=hi {
            cur.push(v);
            rec(v, hi, max_size, cur, out);
            cur.pop();
        }
    }
    if lo <= hi {
        rec(lo, hi, max_size, &mut vec![], &mut out);
    }
    out
}

/// Set-valued semistandard tableaux: entries at most max_entry, at most
/// max_total letters in total.
pub fn enumerate_set_valued(shape: &SkewShape, max_entry: u32, max_total: usize) -> Vec<Filling> {
    enumerate_multi(shape, max_entry, max_total, |lmax, amax, hi, cap| {
        let lo = lmax.unwrap_or(1).max(amax.map_or(1, |x| x + 1));
        subsets_from(lo, hi, cap)
    })
}

/// Weak set-valued tableaux: multiset entries at most max_entry, at most
/// max_total letters in total.
pub fn enumerate_weak_set_valued(shape: &SkewShape, max_entry: u32, max_total: usize) -> Vec<Filling> {
    enumerate_multi(shape, max_entry, max_total, |lmax, amax, hi, cap| {
        let lo = lmax.map_or(1, |x| x + 1).max(amax.unwrap_or(1));
        multisets_from(lo, hi, cap)
    })
}

/// Valued-set tableaux: transpose-semistandard fillings with every way of
/// splitting their vertical constant runs into groups.
pub fn enumerate_valued_set(shape: &SkewShape, max_entry: u32) -> Vec<ValuedSetTableau> {
    let mut out = vec![];
    for f in enumerate_transpose_ssyt(shape, max_entry) {
        let runs = vertical_runs(&f);
        // each run of length L splits into consecutive groups in 2^(L-1) ways
        let mut splittings: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![]];
        for run in &runs {
            let l = run.len();
            let mut next = vec![];
            for mask in 0u64..(1 << (l - 1)) {
                let mut groups = vec![];
                let mut start = 0usize;
                for pos in 0..l {
                    if pos == l - 1 || mask & (1 << pos) != 0 {
                        groups.push(run[start..=pos].to_vec());
                        start = pos + 1;
                    }
                }
                for prev in &splittings {
                    let mut combined = prev.clone();
                    combined.extend(groups.clone());
                    next.push(combined);
                }
            }
            splittings = next;
        }
        for groups in splittings {
            out.push(ValuedSetTableau { filling: f.clone(), groups });
        }
    }
    out
}

/// Maximal vertical runs of equal entries, each as a top-to-bottom cell list.
fn vertical_runs(f: &Filling) -> Vec<Vec<(usize, usize)>> {
    let mut runs: Vec<Vec<(usize, usize)>> = vec![];
    let mut open: BTreeMap<usize, usize> = BTreeMap::new(); // column -> run index
    for (&(r, c), v) in &f.entries {
        let val = v[0];
        match open.get(&c) {
            Some(&idx)
                if runs[idx].last().unwrap().0 + 1 == r
                    && f.single(runs[idx][0].0, c) == Some(val) =>
            {
                runs[idx].push((r, c));
            }
            _ => {
                runs.push(vec![(r, c)]);
                open.insert(c, runs.len() - 1);
            }
        }
    }
    runs
}

// ===== Generating function windows =====

/// Schur window from semistandard tableaux by content weight.
pub fn ssyt_gf(shape: &SkewShape, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    for t in enumerate_ssyt(shape, nvars as u32) {
        out.add_monomial(&t.content_exponents(nvars).unwrap(), 1);
    }
    out
}

/// Window of the dual stable Grothendieck function: reverse plane
/// partitions weighted by columns containing each letter.
pub fn rpp_gf(shape: &SkewShape, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    for t in enumerate_rpp(shape, nvars as u32) {
        out.add_monomial(&t.column_weight_exponents(nvars).unwrap(), 1);
    }
    out
}

/// Window of the set-valued tableau generating function (the symmetric
/// Grothendieck series without signs).
pub fn set_valued_gf(shape: &SkewShape, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    for t in enumerate_set_valued(shape, nvars as u32, maxdeg as usize) {
        out.add_monomial(&t.content_exponents(nvars).unwrap(), 1);
    }
    out
}

/// Window of the weak set-valued tableau generating function.
pub fn weak_set_valued_gf(shape: &SkewShape, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    for t in enumerate_weak_set_valued(shape, nvars as u32, maxdeg as usize) {
        out.add_monomial(&t.content_exponents(nvars).unwrap(), 1);
    }
    out
}

/// Window of the valued-set tableau generating function: groups per letter.
pub fn valued_set_gf(shape: &SkewShape, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    for t in enumerate_valued_set(shape, nvars as u32) {
        out.add_monomial(&t.group_exponents(nvars).unwrap(), 1);
    }
    out
}

// ===== Insertion bijection =====

fn rsk_insert(rows: &mut Vec<Vec<u32>>, mut v: u32) {
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(vec![v]);
            return;
        }
        match rows[r].iter().position(|&x| x > v) {
            None => {
                rows[r].push(v);
                return;
            }
            Some(j) => {
                std::mem::swap(&mut rows[r][j], &mut v);
                r += 1;
            }
        }
    }
}

fn rsk_remove(rows: &mut Vec<Vec<u32>>, r0: usize, c0: usize) -> Result<u32> {
    if rows[r0].len() != c0 + 1 {
        return Err(Error::InvalidArgument("removal cell is not at the end of its row".into()));
    }
    let mut v = rows[r0].pop().unwrap();
    if rows[r0].is_empty() {
        rows.remove(r0);
    }
    for r in (0..r0).rev() {
        let j = rows[r]
            .iter()
            .rposition(|&x| x < v)
            .ok_or_else(|| Error::InvalidArgument("no reverse insertion target".into()))?;
        std::mem::swap(&mut rows[r][j], &mut v);
    }
    Ok(v)
}

/// Maps a reverse plane partition of straight shape lambda to a pair (S, U):
/// S semistandard of some shape mu, U an elegant filling of lambda/mu.
/// Rows are processed bottom to top; each row is reduced by dropping entries
/// equal to the entry directly below, then inserted, and the cells not
/// reached by the insertion strip are recorded as fresh 1s in U.
pub fn gschur_forward(t: &Filling) -> Result<(Filling, Filling)> {
    if !t.shape().is_straight() {
        return Err(Error::InvalidShape("expected a straight shape".into()));
    }
    if !t.is_rpp() {
        return Err(Error::InvalidArgument("not a reverse plane partition".into()));
    }
    let lam: Vec<u32> = t.shape().outer().parts().to_vec();
    let m = lam.len();
    if m == 0 {
        let empty = Filling::from_rows(&[])?;
        return Ok((empty.clone(), empty));
    }
    let rows = t.rows()?;
    let mut s_rows = vec![rows[m - 1].clone()];
    let mut u_map: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for k0 in (0..m - 1).rev() {
        let below = &rows[k0 + 1];
        let reduced: Vec<u32> = rows[k0]
            .iter()
            .enumerate()
            .filter(|&(j, &v)| j >= below.len() || below[j] != v)
            .map(|(_, &v)| v)
            .collect();
        let old_sh: Vec<usize> = s_rows.iter().map(|r| r.len()).collect();
        for &v in &reduced {
            rsk_insert(&mut s_rows, v);
        }
        let new_sh: Vec<usize> = s_rows.iter().map(|r| r.len()).collect();
        let mut shifted: BTreeMap<(usize, usize), u32> =
            u_map.iter().map(|(&(r, c), &val)| ((r + 1, c), val + 1)).collect();
        // the unfilled cells run along the old boundary, one horizontal
        // strip of total length lam[k0]; 1s go wherever the insertion strip
        // did not reach
        for r in 1..=(m - k0) {
            let hi = if r == 1 { lam[k0] as usize } else { old_sh.get(r - 2).copied().unwrap_or(0) };
            let lo = old_sh.get(r - 1).copied().unwrap_or(0);
            let new_r = new_sh.get(r - 1).copied().unwrap_or(0);
            for c in (lo + 1)..=hi {
                if c > new_r {
                    shifted.insert((r, c), 1);
                }
            }
        }
        u_map = shifted;
    }
    let mu = Partition::new(s_rows.iter().map(|r| r.len() as u32).collect())
        .expect("insertion keeps row lengths weakly decreasing");
    let s = Filling::from_rows(&s_rows)?;
    let skew = SkewShape::new(t.shape().outer().clone(), mu)?;
    let u = Filling::new(skew, u_map.into_iter().map(|(c, v)| (c, vec![v])).collect())?;
    Ok((s, u))
}

/// Inverse of `gschur_forward`. The boundary cells of S not flagged by a 1
/// directly below in U are removed by reverse insertion, row by row; the
/// first rows of the intermediate tableaux are the rows of the output.
pub fn gschur_backward(s: &Filling, u: &Filling) -> Result<Filling> {
    if !s.shape().is_straight() {
        return Err(Error::InvalidShape("expected a straight shape".into()));
    }
    if !s.is_ssyt() {
        return Err(Error::InvalidArgument("not a semistandard tableau".into()));
    }
    if !u.is_elegant() {
        return Err(Error::InvalidArgument("not an elegant filling".into()));
    }
    if u.shape().inner() != s.shape().outer() {
        return Err(Error::InvalidShape("inner shape of the filling must match the tableau".into()));
    }
    let lam: Vec<u32> = u.shape().outer().parts().to_vec();
    let m = lam.len();
    if m == 0 {
        return Filling::from_rows(&[]);
    }
    let mut s_rows = s.rows()?;
    let mut u_map: BTreeMap<(usize, usize), u32> = u.cells().map(|(&rc, v)| (rc, v[0])).collect();
    let mut t_rows: Vec<Vec<u32>> = vec![];
    for k in 1..=m {
        if s_rows.first().map_or(0, |r| r.len()) != lam[k - 1] as usize {
            return Err(Error::InvalidArgument("pair is not in the image of the bijection".into()));
        }
        t_rows.push(s_rows[0].clone());
        if k == m {
            if s_rows.len() != 1 || !u_map.is_empty() {
                return Err(Error::InvalidArgument("pair is not in the image of the bijection".into()));
            }
            break;
        }
        let ncols = s_rows[0].len();
        let mut active: Vec<(usize, usize)> = vec![];
        for c in 1..=ncols {
            let h = s_rows.iter().take_while(|row| row.len() >= c).count();
            if u_map.get(&(h + 1, c)) != Some(&1) {
                active.push((h - 1, c - 1));
            }
        }
        for &(r0, c0) in active.iter().rev() {
            rsk_remove(&mut s_rows, r0, c0)?;
        }
        let mut next: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (&(r, c), &val) in &u_map {
            if val == 1 {
                continue;
            }
            next.insert((r - 1, c), val - 1);
        }
        u_map = next;
    }
    let out = Filling::from_rows(&t_rows)?;
    if out.shape().outer().parts() != lam || !out.is_rpp() {
        return Err(Error::InvalidArgument("pair is not in the image of the bijection".into()));
    }
    Ok(out)
}
