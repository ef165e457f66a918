//! Labeled posets, their set-valued partitions, and linear multi-extensions.
//!
//! A labeled poset carries a labeling theta used to decide, on each cover
//! s < t, whether values must increase weakly (theta(s) < theta(t)) or
//! strictly (theta(t) < theta(s)). Set-valued partitions assign nonempty
//! finite sets ordered by max/min comparison. Multi-extensions spread the
//! positions 1..N over the poset, several per element but never two
//! consecutive, respecting the order; reading labels off gives words whose
//! descent compositions expand the weight generating function into
//! multi-fundamental quasisymmetric functions.

use crate::error::{Error, Result};
use crate::series::TruncPoly;
use crate::shapes::SkewShape;
use crate::tableaux::subsets_from;
use crate::words::MPermSmall;
use std::collections::BTreeMap;

/// Poset on elements 1..n with cover relations and a positive labeling.
/// The labeling may repeat overall but must separate the two ends of every
/// cover. At most 64 elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPoset {
    n: usize,
    covers: Vec<(usize, usize)>,
    theta: Vec<u32>,
    below: Vec<u64>,
}

impl LabeledPoset {
    pub fn new(n: usize, covers: Vec<(usize, usize)>, theta: Vec<u32>) -> Result<Self> {
        if n > 64 {
            return Err(Error::InvalidArgument("at most 64 poset elements supported".into()));
        }
        if theta.len() != n || theta.iter().any(|&l| l == 0) {
            return Err(Error::InvalidArgument("labeling must assign a positive label to each element".into()));
        }
        for &(s, t) in &covers {
            if s < 1 || s > n || t < 1 || t > n || s == t {
                return Err(Error::InvalidArgument(format!("cover ({s},{t}) out of range")));
            }
            if theta[s - 1] == theta[t - 1] {
                return Err(Error::InvalidArgument(format!("cover ({s},{t}) joins equal labels")));
            }
        }
        let below = strict_below(n, &covers)?;
        Ok(LabeledPoset { n, covers, theta, below })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn theta(&self) -> &[u32] {
        &self.theta
    }

    /// Label of the 1-based element.
    pub fn label(&self, x: usize) -> u32 {
        self.theta[x - 1]
    }

    /// Whether x < y in the poset order (1-based elements).
    pub fn less(&self, x: usize, y: usize) -> bool {
        self.below[y - 1] & (1 << (x - 1)) != 0
    }

    /// The cell poset of a skew shape: covers go to the right and downward
    /// neighbors, and the labeling reads rows bottom to top, left to right.
    /// Returns the poset and the cell of each element in element order.
    pub fn from_skew(shape: &SkewShape) -> (Self, Vec<(usize, usize)>) {
        let cells = shape.cells();
        let index: BTreeMap<(usize, usize), usize> =
            cells.iter().enumerate().map(|(i, &c)| (c, i + 1)).collect();
        let mut covers = vec![];
        for (&(r, c), &x) in &index {
            if let Some(&y) = index.get(&(r, c + 1)) {
                covers.push((x, y));
            }
            if let Some(&y) = index.get(&(r + 1, c)) {
                covers.push((x, y));
            }
        }
        let mut by_reading: Vec<usize> = (0..cells.len()).collect();
        by_reading.sort_by_key(|&i| (std::cmp::Reverse(cells[i].0), cells[i].1));
        let mut theta = vec![0u32; cells.len()];
        for (label0, &i) in by_reading.iter().enumerate() {
            theta[i] = label0 as u32 + 1;
        }
        let poset = LabeledPoset::new(cells.len(), covers, theta)
            .expect("skew cell posets are valid");
        (poset, cells)
    }

    /// Chain c_1 < c_2 < ... labeled by the given word.
    pub fn from_chain(labels: &[u32]) -> Result<Self> {
        let covers = (1..labels.len()).map(|i| (i, i + 1)).collect();
        LabeledPoset::new(labels.len(), covers, labels.to_vec())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "covers": self.covers.iter().map(|&(s, t)| vec![s, t]).collect::<Vec<_>>(),
            "theta": self.theta,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Parse("poset wants {\"n\": 3, \"covers\": [[1,2]], \"theta\": [2,1,3]}".into());
        let n = v.get("n").and_then(|x| x.as_u64()).ok_or_else(bad)? as usize;
        let mut covers = vec![];
        for e in v.get("covers").and_then(|x| x.as_array()).ok_or_else(bad)? {
            let pair = e.as_array().ok_or_else(bad)?;
            if pair.len() != 2 {
                return Err(bad());
            }
            let s = pair[0].as_u64().ok_or_else(bad)? as usize;
            let t = pair[1].as_u64().ok_or_else(bad)? as usize;
            covers.push((s, t));
        }
        let theta = v
            .get("theta")
            .and_then(|x| x.as_array())
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_u64().map(|l| l as u32).ok_or_else(bad))
            .collect::<Result<Vec<u32>>>()?;
        LabeledPoset::new(n, covers, theta)
    }

    /// Elements ordered so that everything below an element comes earlier.
    fn topological(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (1..=self.n).collect();
        order.sort_by_key(|&x| self.below[x - 1].count_ones());
        order
    }

    /// For each element, its direct predecessors with the strictness of the
    /// required increase across that cover.
    fn parents(&self) -> Vec<Vec<(usize, bool)>> {
        let mut out = vec![vec![]; self.n];
        for &(s, t) in &self.covers {
            let strict = self.theta[t - 1] < self.theta[s - 1];
            out[t - 1].push((s, strict));
        }
        out
    }
}

/// Strictly-below masks from covers; errors on a cycle.
fn strict_below(n: usize, covers: &[(usize, usize)]) -> Result<Vec<u64>> {
    let mut below = vec![0u64; n];
    for _ in 0..n {
        let mut changed = false;
        for &(s, t) in covers {
            let add = below[s - 1] | (1 << (s - 1));
            if below[t - 1] | add != below[t - 1] {
                below[t - 1] |= add;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for x in 0..n {
        if below[x] & (1 << x) != 0 {
            return Err(Error::InvalidArgument("cover relations contain a cycle".into()));
        }
    }
    Ok(below)
}

/// Whether sigma (indexed by element order, values sorted distinct) is a
/// set-valued partition of the labeled poset.
pub fn is_svpp(poset: &LabeledPoset, sigma: &[Vec<u32>]) -> bool {
    if sigma.len() != poset.n {
        return false;
    }
    if sigma.iter().any(|s| {
        s.is_empty() || s.iter().any(|&v| v == 0) || s.windows(2).any(|w| w[0] >= w[1])
    }) {
        return false;
    }
    poset.covers.iter().all(|&(s, t)| {
        let smax = *sigma[s - 1].last().unwrap();
        let tmin = sigma[t - 1][0];
        if poset.theta[s - 1] < poset.theta[t - 1] {
            smax <= tmin
        } else {
            smax < tmin
        }
    })
}

/// Whether values (one per element) form a plain partition of the poset.
pub fn is_ppart(poset: &LabeledPoset, values: &[u32]) -> bool {
    let sigma: Vec<Vec<u32>> = values.iter().map(|&v| vec![v]).collect();
    is_svpp(poset, &sigma)
}

/// All set-valued partitions with values at most max_entry and at most
/// max_total letters in total.
pub fn enumerate_svpp(poset: &LabeledPoset, max_entry: u32, max_total: usize) -> Vec<Vec<Vec<u32>>> {
    let order = poset.topological();
    let parents = poset.parents();
    let mut sigma: Vec<Vec<u32>> = vec![vec![]; poset.n];
    let mut out = vec![];
    fn rec(
        poset: &LabeledPoset,
        order: &[usize],
        parents: &[Vec<(usize, bool)>],
        pos: usize,
        budget: usize,
        max_entry: u32,
        sigma: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if pos == order.len() {
            out.push(sigma.clone());
            return;
        }
        let remaining = order.len() - pos - 1;
        if budget <= remaining {
            return;
        }
        let x = order[pos];
        let mut lo = 1u32;
        for &(p, strict) in &parents[x - 1] {
            let pmax = *sigma[p - 1].last().unwrap();
            lo = lo.max(if strict { pmax + 1 } else { pmax });
        }
        for choice in subsets_from(lo, max_entry, budget - remaining) {
            let used = choice.len();
            sigma[x - 1] = choice;
            rec(poset, order, parents, pos + 1, budget - used, max_entry, sigma, out);
        }
        sigma[x - 1] = vec![];
    }
    rec(poset, &order, &parents, 0, max_total, max_entry, &mut sigma, &mut out);
    out
}

/// All plain partitions with values at most max_entry.
pub fn enumerate_ppart(poset: &LabeledPoset, max_entry: u32) -> Vec<Vec<u32>> {
    let order = poset.topological();
    let parents = poset.parents();
    let mut values = vec![0u32; poset.n];
    let mut out = vec![];
    fn rec(
        order: &[usize],
        parents: &[Vec<(usize, bool)>],
        pos: usize,
        max_entry: u32,
        values: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if pos == order.len() {
            out.push(values.clone());
            return;
        }
        let x = order[pos];
        let mut lo = 1u32;
        for &(p, strict) in &parents[x - 1] {
            lo = lo.max(if strict { values[p - 1] + 1 } else { values[p - 1] });
        }
        for v in lo..=max_entry {
            values[x - 1] = v;
            rec(order, parents, pos + 1, max_entry, values, out);
        }
    }
    rec(&order, &parents, 0, max_entry, &mut values, &mut out);
    out
}

fn weight_exponents(sigma: &[Vec<u32>], nvars: usize) -> Option<Vec<u32>> {
    let mut e = vec![0u32; nvars];
    for s in sigma {
        for &v in s {
            if v as usize > nvars {
                return None;
            }
            e[v as usize - 1] += 1;
        }
    }
    Some(e)
}

/// Weight window of the set-valued partition generating function.
pub fn svpp_gf(poset: &LabeledPoset, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    for sigma in enumerate_svpp(poset, nvars as u32, maxdeg as usize) {
        out.add_monomial(&weight_exponents(&sigma, nvars).unwrap(), 1);
    }
    out
}

/// Weight window of the plain partition generating function.
pub fn ppart_gf(poset: &LabeledPoset, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    for values in enumerate_ppart(poset, nvars as u32) {
        let sigma: Vec<Vec<u32>> = values.iter().map(|&v| vec![v]).collect();
        out.add_monomial(&weight_exponents(&sigma, nvars).unwrap(), 1);
    }
    out
}

/// Linear multi-extensions by [N], read off as label words. The labeling
/// must be a bijection onto [1, n] so that the words are m-permutations.
/// Each position 1..N goes to one element; an element is frozen once
/// anything above it starts receiving positions; adjacent positions never
/// repeat an element; everything below must be complete before an element
/// receives a position.
pub fn multi_jordan_holder(poset: &LabeledPoset, big_n: usize) -> Result<Vec<MPermSmall>> {
    let n = poset.n;
    let mut seen = vec![false; n + 1];
    for &l in &poset.theta {
        if l as usize > n || seen[l as usize] {
            return Err(Error::InvalidArgument("labeling must be a bijection onto [1, n]".into()));
        }
        seen[l as usize] = true;
    }
    if n == 0 {
        return Ok(if big_n == 0 { vec![MPermSmall::empty()] } else { vec![] });
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut out = vec![];
    let mut word: Vec<u32> = vec![];
    fn rec(
        poset: &LabeledPoset,
        big_n: usize,
        frozen: u64,
        used: u64,
        last: usize,
        full: u64,
        word: &mut Vec<u32>,
        out: &mut Vec<MPermSmall>,
    ) {
        let i = word.len();
        if i == big_n {
            if used == full {
                out.push(MPermSmall::new(word.clone()).expect("multi-extension words are m-permutations"));
            }
            return;
        }
        if (big_n - i) < (full & !used).count_ones() as usize {
            return;
        }
        for x in 1..=poset.n {
            let bit = 1u64 << (x - 1);
            if frozen & bit != 0 || x == last {
                continue;
            }
            if poset.below[x - 1] & !used != 0 {
                continue;
            }
            word.push(poset.theta[x - 1]);
            rec(poset, big_n, frozen | poset.below[x - 1], used | bit, x, full, word, out);
            word.pop();
        }
    }
    rec(poset, big_n, 0, 0, 0, full, &mut word, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

/// For each position 1..N-1, how many multi-extension words have a descent
/// there.
pub fn mjh_descent_profile(poset: &LabeledPoset, big_n: usize) -> Result<Vec<u64>> {
    let words = multi_jordan_holder(poset, big_n)?;
    let mut profile = vec![0u64; big_n.saturating_sub(1)];
    for w in &words {
        for d in crate::words::word_descents(w.word()) {
            profile[d as usize - 1] += 1;
        }
    }
    Ok(profile)
}

/// Decomposes a set-valued partition into an m-permutation (a word of the
/// multi-Jordan-Holder set) and a set-valued partition of the chain labeled
/// by it. For each value r in increasing order, the labels of the elements
/// containing r are written in increasing order; collapsing the repeated
/// runs of the concatenation gives the word, and the values feeding run i
/// form the set at chain position i.
pub fn multippart_forward(poset: &LabeledPoset, sigma: &[Vec<u32>]) -> Result<(MPermSmall, Vec<Vec<u32>>)> {
    if !is_svpp(poset, sigma) {
        return Err(Error::InvalidArgument("not a set-valued partition of the poset".into()));
    }
    let mut values: Vec<u32> = sigma.iter().flatten().copied().collect();
    values.sort_unstable();
    values.dedup();
    let mut pairs: Vec<(u32, u32)> = vec![];
    for &r in &values {
        let mut labels: Vec<u32> = (1..=poset.n)
            .filter(|&x| sigma[x - 1].binary_search(&r).is_ok())
            .map(|x| poset.theta[x - 1])
            .collect();
        labels.sort_unstable();
        for g in labels {
            pairs.push((g, r));
        }
    }
    let mut word: Vec<u32> = vec![];
    let mut chain: Vec<Vec<u32>> = vec![];
    for (g, r) in pairs {
        if word.last() == Some(&g) {
            chain.last_mut().unwrap().push(r);
        } else {
            word.push(g);
            chain.push(vec![r]);
        }
    }
    let w = MPermSmall::new(word)?;
    Ok((w, chain))
}

/// Inverse of `multippart_forward`: the set at element x is the union of
/// the chain sets at the positions where x's label occurs in the word.
pub fn multippart_backward(
    poset: &LabeledPoset,
    w: &MPermSmall,
    chain: &[Vec<u32>],
) -> Result<Vec<Vec<u32>>> {
    if w.len() != chain.len() {
        return Err(Error::InvalidArgument("chain length must match the word".into()));
    }
    let mut sigma: Vec<Vec<u32>> = vec![vec![]; poset.n];
    for (x, s) in sigma.iter_mut().enumerate() {
        let g = poset.theta[x];
        let mut total = 0usize;
        for (j, &wj) in w.word().iter().enumerate() {
            if wj == g {
                s.extend(chain[j].iter().copied());
                total += chain[j].len();
            }
        }
        s.sort_unstable();
        s.dedup();
        if s.len() != total {
            return Err(Error::InvalidArgument("chain sets overlap within one element".into()));
        }
    }
    if !is_svpp(poset, &sigma) {
        return Err(Error::InvalidArgument("pair does not assemble into a set-valued partition".into()));
    }
    Ok(sigma)
}
