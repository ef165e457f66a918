//! Words and the two multi-Malvenuto-Reutenauer worlds built on them.
//!
//! Small world: m-permutations (words using every letter of [n] at least
//! once, never the same letter twice in a row) with the multishuffle product
//! and the cuut coproduct. Products here are infinite sums, so every product
//! takes an explicit length cap and results carry it.
//!
//! Big world: M-permutations (ordered set partitions of [n] whose blocks
//! avoid consecutive integers) with a finite product, deconcatenation
//! coproduct, antipode, irreducible factorization, and a weak order. The two
//! worlds are tied together by inversion, which this module also provides.

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::shapes::{descents_to_comp, Composition, DescentSet};
use std::collections::BTreeSet;
use std::fmt;

pub type Letter = u32;
pub type Word = Vec<Letter>;

// ===== Word statistics =====

/// Descent positions {i : w_i > w_{i+1}}, 1-based.
pub fn word_descents(w: &[Letter]) -> BTreeSet<u32> {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| (i + 1) as u32)
        .collect()
}

/// Descent composition of a word, ambient its length.
pub fn word_comp(w: &[Letter]) -> Composition {
    let d = DescentSet { n: w.len() as u32, set: word_descents(w) };
    descents_to_comp(&d)
}

/// Canonical permutation with descent composition alpha: the i-th run of
/// length alpha_i takes the interval just above the letters of the later
/// runs, in increasing order. For (2,1) this gives 231.
pub fn composition_word(alpha: &Composition) -> MPermSmall {
    let parts = alpha.parts();
    let mut word = Vec::with_capacity(alpha.size() as usize);
    for (i, &a) in parts.iter().enumerate() {
        let above: u32 = parts[i + 1..].iter().sum();
        word.extend(above + 1..=above + a);
    }
    MPermSmall::new(word).expect("runs construction yields a permutation")
}

// ===== m-permutations =====

/// Word using each letter of [1, n] at least once for some n, with no two
/// equal adjacent letters. The empty word is the case n = 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MPermSmall {
    word: Word,
}

impl MPermSmall {
    pub fn new(word: Word) -> Result<Self> {
        if word.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidWord(format!("equal adjacent letters in {word:?}")));
        }
        let distinct: BTreeSet<Letter> = word.iter().copied().collect();
        let n = word.iter().copied().max().unwrap_or(0);
        if distinct.contains(&0) || distinct.len() as u32 != n {
            return Err(Error::InvalidWord(format!("letters of {word:?} are not exactly [1, n]")));
        }
        Ok(MPermSmall { word })
    }

    pub fn empty() -> Self {
        MPermSmall { word: vec![] }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Alphabet size n.
    pub fn alphabet(&self) -> u32 {
        self.word.iter().copied().max().unwrap_or(0)
    }

    /// Descent composition, ambient the word length.
    pub fn comp(&self) -> Composition {
        word_comp(&self.word)
    }

    /// "121" when all letters are single digits, else "1,5,12". "" is empty.
    pub fn parse(s: &str) -> Result<Self> {
        MPermSmall::new(parse_word(s)?)
    }
}

pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<Letter>().map_err(|e| Error::Parse(format!("bad letter {p:?}: {e}"))))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad digit {c:?} in word {s:?}"))))
            .collect()
    }
}

pub fn word_to_string(w: &[Letter]) -> String {
    if w.iter().all(|&x| x <= 9) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for MPermSmall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", word_to_string(&self.word))
    }
}

/// Order-pattern standardization: the unique m-permutation whose letters
/// compare exactly like the input's. Undefined when two equal letters are
/// adjacent.
pub fn standardize_word(w: &[Letter]) -> Result<MPermSmall> {
    if w.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::Standardize(format!("equal adjacent letters in {w:?}")));
    }
    Ok(rank_letters(w))
}

/// Standardization extended to multiwords: collapse runs of equal adjacent
/// letters first, then rank.
pub fn standardize_multiword(w: &[Letter]) -> MPermSmall {
    let mut collapsed: Word = vec![];
    for &x in w {
        if collapsed.last() != Some(&x) {
            collapsed.push(x);
        }
    }
    rank_letters(&collapsed)
}

fn rank_letters(w: &[Letter]) -> MPermSmall {
    let distinct: BTreeSet<Letter> = w.iter().copied().collect();
    let rank = |x: Letter| (distinct.iter().position(|&y| y == x).unwrap() + 1) as Letter;
    MPermSmall { word: w.iter().map(|&x| rank(x)).collect() }
}

// ===== Multishuffle and cuut =====

/// All multishuffles of `u` and `v` up to length `cap`, with multiplicity.
///
/// A multishuffle interleaves a multiword of `u` (each letter repeated, in
/// order, at least once) with a multiword of `v` so that no two equal
/// adjacent letters appear; repeated letters of the inputs are treated as
/// distinct while shuffling and substituted back afterwards, which is where
/// multiplicities come from.
pub fn multishuffle(u: &[Letter], v: &[Letter], cap: usize) -> LinComb<Word> {
    #[derive(Clone, Copy, PartialEq, Eq)]
    enum Last {
        None,
        U(usize),
        V(usize),
    }
    struct St<'a> {
        u: &'a [Letter],
        v: &'a [Letter],
        cap: usize,
        buf: Word,
        out: LinComb<Word>,
    }
    fn rec(s: &mut St, iu: usize, iv: usize, last: Last) {
        if iu == s.u.len() && iv == s.v.len() {
            s.out.add_term(s.buf.clone(), 1);
        }
        if s.buf.len() >= s.cap {
            return;
        }
        if iu < s.u.len() {
            s.buf.push(s.u[iu]);
            rec(s, iu + 1, iv, Last::U(iu));
            s.buf.pop();
        }
        if iu > 0 && last != Last::U(iu - 1) {
            s.buf.push(s.u[iu - 1]);
            rec(s, iu, iv, Last::U(iu - 1));
            s.buf.pop();
        }
        if iv < s.v.len() {
            s.buf.push(s.v[iv]);
            rec(s, iu, iv + 1, Last::V(iv));
            s.buf.pop();
        }
        if iv > 0 && last != Last::V(iv - 1) {
            s.buf.push(s.v[iv - 1]);
            rec(s, iu, iv, Last::V(iv - 1));
            s.buf.pop();
        }
    }
    let mut st = St { u, v, cap, buf: vec![], out: LinComb::new() };
    rec(&mut st, 0, 0, Last::None);
    st.out
}

/// The 2n+1 coproduct terms of a length-n word: plain cut pairs plus pairs
/// cutting through each letter (the letter lands on both sides).
pub fn cuut(w: &[Letter]) -> Vec<(Word, Word)> {
    let n = w.len();
    let mut out = Vec::with_capacity(2 * n + 1);
    for i in 0..=n {
        out.push((w[..i].to_vec(), w[i..].to_vec()));
        if i < n {
            out.push((w[..=i].to_vec(), w[i..].to_vec()));
        }
    }
    out
}

/// Linear combination of m-permutations with the truncation cap it is exact
/// up to (None means the element is exact as written).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordElement {
    pub cap: Option<usize>,
    pub terms: LinComb<MPermSmall>,
}

impl WordElement {
    pub fn exact(terms: LinComb<MPermSmall>) -> Self {
        WordElement { cap: None, terms }
    }

    pub fn capped(cap: usize, terms: LinComb<MPermSmall>) -> Self {
        WordElement { cap: Some(cap), terms }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, c)| (k.to_string(), serde_json::Value::from(c)))
            .collect();
        serde_json::json!({ "cap": self.cap, "terms": terms })
    }
}

/// Product of two m-permutations: multishuffle of `w` with `u` shifted up by
/// w's alphabet. Every term is again an m-permutation; infinitely many exist,
/// so only terms of length at most `cap` are produced.
pub fn mmr_product(w: &MPermSmall, u: &MPermSmall, cap: usize) -> WordElement {
    let n = w.alphabet();
    let shifted: Word = u.word().iter().map(|&x| x + n).collect();
    let raw = multishuffle(w.word(), &shifted, cap);
    let mut terms = LinComb::new();
    for (word, c) in raw {
        let t = MPermSmall::new(word).expect("multishuffle of shifted m-permutations yields m-permutations");
        terms.add_term(t, c);
    }
    WordElement::capped(cap, terms)
}

/// Coproduct of an m-permutation: standardize both sides of every cuut term.
/// Finite (2n+1 terms), so no cap.
pub fn mmr_coproduct(w: &MPermSmall) -> LinComb<(MPermSmall, MPermSmall)> {
    let mut out = LinComb::new();
    for (a, b) in cuut(w.word()) {
        let sa = standardize_word(&a).expect("pieces of an m-permutation standardize");
        let sb = standardize_word(&b).expect("pieces of an m-permutation standardize");
        out.add_term((sa, sb), 1);
    }
    out
}

/// Greedy factorization of an m-permutation into irreducibles: split after
/// every prefix that uses an initial alphabet interval completely.
pub fn factor_irreducible_small(w: &MPermSmall) -> Vec<MPermSmall> {
    let word = w.word();
    if word.is_empty() {
        return vec![];
    }
    let mut last_pos = std::collections::BTreeMap::new();
    for (i, &x) in word.iter().enumerate() {
        last_pos.insert(x, i);
    }
    let mut factors = vec![];
    let mut start = 0usize;
    let mut offset: Letter = 0;
    let mut max_seen: Letter = 0;
    let mut latest = 0usize;
    for (i, &x) in word.iter().enumerate() {
        // every letter of [1, max_seen] occurs somewhere; the prefix is a
        // complete factor once all their last occurrences sit inside it
        for y in (max_seen + 1)..=x {
            latest = latest.max(last_pos[&y]);
        }
        max_seen = max_seen.max(x);
        if latest <= i {
            let piece: Word = word[start..=i].iter().map(|&y| y - offset).collect();
            factors.push(MPermSmall::new(piece).expect("factor of an m-permutation is an m-permutation"));
            start = i + 1;
            offset = max_seen;
        }
    }
    factors
}

// ===== Set compositions and M-permutations =====

/// Ordered list of disjoint nonempty finite sets of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetComposition {
    blocks: Vec<BTreeSet<u32>>,
}

impl SetComposition {
    pub fn new(blocks: Vec<BTreeSet<u32>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidWord("empty block in set composition".into()));
            }
            for &x in b {
                if x == 0 {
                    return Err(Error::InvalidWord("set composition entries must be positive".into()));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidWord(format!("repeated entry {x} in set composition")));
                }
            }
        }
        Ok(SetComposition { blocks })
    }

    pub fn blocks(&self) -> &[BTreeSet<u32>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground(&self) -> BTreeSet<u32> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// "[(1,3),2]": singleton blocks print bare, larger ones in parens.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("set composition must look like [(1,3),2]: {s:?}")))?;
        let mut blocks = vec![];
        let mut rest = inner.trim();
        while !rest.is_empty() {
            if let Some(tail) = rest.strip_prefix('(') {
                let end = tail
                    .find(')')
                    .ok_or_else(|| Error::Parse(format!("unclosed paren in {s:?}")))?;
                let body = &tail[..end];
                let set: Result<BTreeSet<u32>> = body
                    .split(',')
                    .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Parse(format!("bad entry {p:?}: {e}"))))
                    .collect();
                blocks.push(set?);
                rest = tail[end + 1..].trim_start().trim_start_matches(',').trim_start();
            } else {
                let end = rest.find(',').unwrap_or(rest.len());
                let tok = rest[..end].trim();
                let x = tok.parse::<u32>().map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))?;
                blocks.push(BTreeSet::from([x]));
                rest = rest[end..].trim_start_matches(',').trim_start();
            }
        }
        SetComposition::new(blocks)
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                if b.len() == 1 {
                    b.iter().next().unwrap().to_string()
                } else {
                    format!("({})", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                }
            })
            .collect();
        write!(f, "[{}]", pieces.join(","))
    }
}

/// M-permutation: set composition of exactly [1, n] none of whose blocks
/// contains two consecutive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MPermBig {
    sc: SetComposition,
}

impl MPermBig {
    pub fn new(sc: SetComposition) -> Result<Self> {
        let ground = sc.ground();
        let n = ground.len() as u32;
        if ground.iter().copied().max().unwrap_or(0) != n {
            return Err(Error::InvalidWord(format!("ground set of {sc} is not an initial interval")));
        }
        for b in sc.blocks() {
            if b.iter().any(|&x| b.contains(&(x + 1))) {
                return Err(Error::InvalidWord(format!("block with consecutive integers in {sc}")));
            }
        }
        Ok(MPermBig { sc })
    }

    pub fn empty() -> Self {
        MPermBig { sc: SetComposition { blocks: vec![] } }
    }

    pub fn setcomp(&self) -> &SetComposition {
        &self.sc
    }

    pub fn blocks(&self) -> &[BTreeSet<u32>] {
        self.sc.blocks()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.sc.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sc.is_empty()
    }

    /// Ground set size n.
    pub fn n(&self) -> u32 {
        self.sc.blocks().iter().map(|b| b.len() as u32).sum()
    }

    pub fn parse(s: &str) -> Result<Self> {
        MPermBig::new(SetComposition::parse(s)?)
    }
}

impl fmt::Display for MPermBig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.sc.fmt(f)
    }
}

// ===== Standardization of set compositions =====

/// Applies the two reductions until none fires: drop i+1 when i and i+1
/// share a block; close a gap when some letter below the maximum is absent.
/// Confluent, so the scan order is fixed but immaterial.
pub fn standardize_setcomp(sc: &SetComposition) -> MPermBig {
    let mut blocks = sc.blocks.clone();
    loop {
        if let Some(x) = find_r1(&blocks) {
            apply_delete_and_shift(&mut blocks, x);
            continue;
        }
        let ground: BTreeSet<u32> = blocks.iter().flatten().copied().collect();
        let max = ground.iter().copied().max().unwrap_or(0);
        if let Some(gap) = (1..=max).find(|g| !ground.contains(g)) {
            shift_down_above(&mut blocks, gap);
            continue;
        }
        break;
    }
    MPermBig::new(SetComposition { blocks }).expect("reduction terminates at an M-permutation")
}

/// Same normal form computed with pseudo-randomly chosen applicable moves;
/// used to check confluence.
pub fn standardize_setcomp_seeded(sc: &SetComposition, seed: u64) -> MPermBig {
    let mut state = seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut blocks = sc.blocks.clone();
    loop {
        let mut moves: Vec<(bool, u32)> = vec![];
        for b in &blocks {
            for &x in b {
                if b.contains(&(x + 1)) {
                    moves.push((true, x + 1));
                }
            }
        }
        let ground: BTreeSet<u32> = blocks.iter().flatten().copied().collect();
        let max = ground.iter().copied().max().unwrap_or(0);
        for g in 1..=max {
            if !ground.contains(&g) {
                moves.push((false, g));
            }
        }
        if moves.is_empty() {
            break;
        }
        let (is_delete, x) = moves[(next() % moves.len() as u64) as usize];
        if is_delete {
            apply_delete_and_shift(&mut blocks, x);
        } else {
            shift_down_above(&mut blocks, x);
        }
    }
    MPermBig::new(SetComposition { blocks }).expect("reduction terminates at an M-permutation")
}

fn find_r1(blocks: &[BTreeSet<u32>]) -> Option<u32> {
    for b in blocks {
        for &x in b {
            if b.contains(&(x + 1)) {
                return Some(x + 1);
            }
        }
    }
    None
}

fn apply_delete_and_shift(blocks: &mut Vec<BTreeSet<u32>>, x: u32) {
    for b in blocks.iter_mut() {
        b.remove(&x);
    }
    blocks.retain(|b| !b.is_empty());
    shift_down_above(blocks, x);
}

fn shift_down_above(blocks: &mut [BTreeSet<u32>], gap: u32) {
    for b in blocks.iter_mut() {
        *b = b.iter().map(|&y| if y > gap { y - 1 } else { y }).collect();
    }
}

// ===== Inversion between the worlds =====

/// Word reading of a set composition of [1, n]: position i holds the index
/// of the block containing i.
pub fn invert_setcomp(sc: &SetComposition) -> Result<Word> {
    let ground = sc.ground();
    let n = ground.len() as u32;
    if ground.iter().copied().max().unwrap_or(0) != n {
        return Err(Error::InvalidWord(format!("ground set of {sc} is not an initial interval")));
    }
    let mut word = vec![0; n as usize];
    for (j, b) in sc.blocks().iter().enumerate() {
        for &x in b {
            word[x as usize - 1] = (j + 1) as Letter;
        }
    }
    Ok(word)
}

/// Inverse of `invert_setcomp`: blocks of positions grouped by letter.
/// Requires the letters to cover an initial interval [1, k].
pub fn invert_word(w: &[Letter]) -> Result<SetComposition> {
    let distinct: BTreeSet<Letter> = w.iter().copied().collect();
    let k = distinct.iter().copied().max().unwrap_or(0);
    if distinct.contains(&0) || distinct.len() as u32 != k {
        return Err(Error::InvalidWord(format!("letters of {w:?} are not exactly [1, k]")));
    }
    let blocks: Vec<BTreeSet<u32>> = (1..=k)
        .map(|j| {
            w.iter()
                .enumerate()
                .filter(|&(_, &x)| x == j)
                .map(|(i, _)| (i + 1) as u32)
                .collect()
        })
        .collect();
    SetComposition::new(blocks)
}

/// M-permutation to m-permutation: the word of block indices.
pub fn invert_big(w: &MPermBig) -> MPermSmall {
    let word = invert_setcomp(&w.sc).expect("M-permutation ground is an interval");
    MPermSmall::new(word).expect("inverse of an M-permutation is an m-permutation")
}

/// m-permutation to M-permutation: blocks of positions by letter.
pub fn invert_small(u: &MPermSmall) -> MPermBig {
    let sc = invert_word(u.word()).expect("m-permutation letters cover [1, k]");
    MPermBig::new(sc).expect("inverse of an m-permutation is an M-permutation")
}

/// Type of an M-permutation: the descent composition of its inverse word,
/// ambient the ground size.
pub fn type_of(w: &MPermBig) -> Composition {
    invert_big(w).comp()
}

// ===== Big-world product, coproduct, antipode =====

/// Semishuffle of two block lists with disjoint grounds: interleavings that
/// may also merge the two current front blocks.
pub fn semishuffle(u: &[BTreeSet<u32>], v: &[BTreeSet<u32>]) -> Vec<Vec<BTreeSet<u32>>> {
    if u.is_empty() {
        return vec![v.to_vec()];
    }
    if v.is_empty() {
        return vec![u.to_vec()];
    }
    let mut out = vec![];
    for rest in semishuffle(&u[1..], v) {
        let mut t = vec![u[0].clone()];
        t.extend(rest);
        out.push(t);
    }
    for rest in semishuffle(u, &v[1..]) {
        let mut t = vec![v[0].clone()];
        t.extend(rest);
        out.push(t);
    }
    for rest in semishuffle(&u[1..], &v[1..]) {
        let mut t = vec![u[0].union(&v[0]).copied().collect()];
        t.extend(rest);
        out.push(t);
    }
    out
}

/// Product of M-permutations: standardized semishuffle of `w` with `u`
/// shifted up by w's ground size. Finite.
pub fn mmr_big_product(w: &MPermBig, u: &MPermBig) -> LinComb<MPermBig> {
    let n = w.n();
    let shifted: Vec<BTreeSet<u32>> = u.blocks().iter().map(|b| b.iter().map(|&x| x + n).collect()).collect();
    let mut out = LinComb::new();
    for term in semishuffle(w.blocks(), &shifted) {
        let sc = SetComposition::new(term).expect("semishuffle preserves disjointness");
        out.add_term(standardize_setcomp(&sc), 1);
    }
    out
}

/// Same product computed from the defining description: sum of all
/// M-permutations of [m+n] or [m+n-1] restricting to `w` on the small
/// letters and standardizing to `u` on the large ones. Exponential; used as
/// an independent oracle at small sizes.
pub fn mmr_big_product_by_restriction(w: &MPermBig, u: &MPermBig) -> LinComb<MPermBig> {
    let m = w.n();
    let n = u.n();
    let mut out = LinComb::new();
    if m == 0 {
        out.add_term(u.clone(), 1);
        return out;
    }
    if n == 0 {
        out.add_term(w.clone(), 1);
        return out;
    }
    for v in enumerate_mperms_big((m + n) as usize) {
        if restrict_blocks(v.blocks(), 1, m) == w.sc.blocks()
            && standardize_setcomp(&restriction(&v, m + 1, m + n)) == *u
        {
            out.add_term(v, 1);
        }
    }
    for v in enumerate_mperms_big((m + n - 1) as usize) {
        if restrict_blocks(v.blocks(), 1, m) == w.sc.blocks()
            && standardize_setcomp(&restriction(&v, m, m + n - 1)) == *u
        {
            out.add_term(v, 1);
        }
    }
    out
}

fn restrict_blocks(blocks: &[BTreeSet<u32>], lo: u32, hi: u32) -> Vec<BTreeSet<u32>> {
    blocks
        .iter()
        .map(|b| b.iter().copied().filter(|&x| x >= lo && x <= hi).collect::<BTreeSet<u32>>())
        .filter(|b: &BTreeSet<u32>| !b.is_empty())
        .collect()
}

fn restriction(v: &MPermBig, lo: u32, hi: u32) -> SetComposition {
    SetComposition { blocks: restrict_blocks(v.blocks(), lo, hi) }
}

/// Deconcatenation coproduct: split the block list everywhere, standardizing
/// both sides. len(w)+1 terms.
pub fn mmr_big_coproduct(w: &MPermBig) -> LinComb<(MPermBig, MPermBig)> {
    let mut out = LinComb::new();
    for k in 0..=w.len() {
        let left = standardize_setcomp(&SetComposition { blocks: w.blocks()[..k].to_vec() });
        let right = standardize_setcomp(&SetComposition { blocks: w.blocks()[k..].to_vec() });
        out.add_term((left, right), 1);
    }
    out
}

pub fn big_lincomb_product(a: &LinComb<MPermBig>, b: &LinComb<MPermBig>) -> LinComb<MPermBig> {
    let mut out = LinComb::new();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_assign_scaled(&mmr_big_product(x, y), cx * cy);
        }
    }
    out
}

/// Antipode on the big world, via the convolution-series formula: sum over
/// splittings of the block list into i nonempty consecutive pieces of
/// (-1)^i times the product of the standardized pieces.
pub fn antipode_big(w: &MPermBig) -> LinComb<MPermBig> {
    if w.is_empty() {
        return LinComb::singleton(MPermBig::empty());
    }
    let l = w.len();
    let mut out = LinComb::new();
    // iterate over compositions of l as split point subsets
    for mask in 0..(1u32 << (l - 1)) {
        let mut pieces: Vec<LinComb<MPermBig>> = vec![];
        let mut start = 0usize;
        for pos in 0..l {
            let is_end = pos == l - 1 || mask & (1 << pos) != 0;
            if is_end {
                let piece = standardize_setcomp(&SetComposition { blocks: w.blocks()[start..=pos].to_vec() });
                pieces.push(LinComb::singleton(piece));
                start = pos + 1;
            }
        }
        let sign = if pieces.len() % 2 == 0 { 1 } else { -1 };
        let mut prod = pieces[0].clone();
        for p in &pieces[1..] {
            prod = big_lincomb_product(&prod, p);
        }
        out.add_assign_scaled(&prod, sign);
    }
    out
}

/// Splits an M-permutation at every block boundary where the prefix ground
/// is an initial interval; pieces are standardized by subtraction.
pub fn factor_irreducible_big(w: &MPermBig) -> Vec<MPermBig> {
    let mut factors = vec![];
    let mut start = 0usize;
    let mut offset: u32 = 0;
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    for (j, b) in w.blocks().iter().enumerate() {
        seen.extend(b.iter().copied());
        let max = seen.iter().copied().max().unwrap_or(0);
        if max as usize == seen.len() + offset as usize && max > 0 {
            let piece: Vec<BTreeSet<u32>> = w.blocks()[start..=j]
                .iter()
                .map(|blk| blk.iter().map(|&x| x - offset).collect())
                .collect();
            factors.push(
                MPermBig::new(SetComposition { blocks: piece }).expect("factor of an M-permutation is one"),
            );
            start = j + 1;
            offset = max;
            seen.clear();
        }
    }
    factors
}

// ===== Enumeration =====

/// All set compositions of the given ground set.
pub fn enumerate_set_compositions(ground: &BTreeSet<u32>) -> Vec<SetComposition> {
    fn nonempty_subsets(items: &[u32]) -> Vec<BTreeSet<u32>> {
        let mut out = vec![];
        for mask in 1u32..(1 << items.len()) {
            out.push(items.iter().enumerate().filter(|&(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect());
        }
        out
    }
    fn rec(remaining: &BTreeSet<u32>, prefix: &mut Vec<BTreeSet<u32>>, out: &mut Vec<SetComposition>) {
        if remaining.is_empty() {
            out.push(SetComposition { blocks: prefix.clone() });
            return;
        }
        let items: Vec<u32> = remaining.iter().copied().collect();
        for first in nonempty_subsets(&items) {
            let rest: BTreeSet<u32> = remaining.difference(&first).copied().collect();
            prefix.push(first);
            rec(&rest, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    rec(ground, &mut vec![], &mut out);
    out
}

/// All M-permutations of [1, n].
pub fn enumerate_mperms_big(n: usize) -> Vec<MPermBig> {
    let ground: BTreeSet<u32> = (1..=n as u32).collect();
    enumerate_set_compositions(&ground)
        .into_iter()
        .filter_map(|sc| MPermBig::new(sc).ok())
        .collect()
}

/// All m-permutations with alphabet exactly [1, n] and length at most
/// max_len.
pub fn enumerate_mperms_small(n: u32, max_len: usize) -> Vec<MPermSmall> {
    fn rec(n: u32, max_len: usize, buf: &mut Word, used: &mut Vec<bool>, out: &mut Vec<MPermSmall>) {
        if used.iter().all(|&u| u) && !buf.is_empty() {
            out.push(MPermSmall { word: buf.clone() });
        }
        if buf.len() >= max_len {
            return;
        }
        for x in 1..=n {
            if buf.last() == Some(&x) {
                continue;
            }
            // prune: remaining slots must fit all unused letters
            let unused = used.iter().filter(|&&u| !u).count() - if used[x as usize - 1] { 0 } else { 1 };
            if buf.len() + 1 + unused > max_len {
                continue;
            }
            buf.push(x);
            let was = used[x as usize - 1];
            used[x as usize - 1] = true;
            rec(n, max_len, buf, used, out);
            used[x as usize - 1] = was;
            buf.pop();
        }
    }
    if n == 0 {
        return vec![MPermSmall::empty()];
    }
    let mut out = vec![];
    rec(n, max_len, &mut vec![], &mut vec![false; n as usize], &mut out);
    out.sort();
    out
}

// ===== Weak order =====

/// Up-covers on set compositions: merge an adjacent increasing pair of
/// blocks, or split one block into its upper part followed by its lower
/// part.
pub fn weak_covers(sc: &SetComposition) -> Vec<SetComposition> {
    let mut out = vec![];
    let blocks = sc.blocks();
    for i in 0..blocks.len().saturating_sub(1) {
        let maxl = blocks[i].iter().copied().max().unwrap();
        let minr = blocks[i + 1].iter().copied().min().unwrap();
        if maxl < minr {
            let mut nb = blocks.to_vec();
            let merged: BTreeSet<u32> = nb[i].union(&nb[i + 1]).copied().collect();
            nb[i] = merged;
            nb.remove(i + 1);
            out.push(SetComposition { blocks: nb });
        }
    }
    for (i, b) in blocks.iter().enumerate() {
        let elems: Vec<u32> = b.iter().copied().collect();
        for t in 1..elems.len() {
            let lower: BTreeSet<u32> = elems[..t].iter().copied().collect();
            let upper: BTreeSet<u32> = elems[t..].iter().copied().collect();
            let mut nb = blocks.to_vec();
            nb[i] = upper;
            nb.insert(i + 1, lower);
            out.push(SetComposition { blocks: nb });
        }
    }
    out
}

/// All set compositions of [1, n] standardizing to the given M-permutation:
/// blow each letter up into an interval of consecutive integers.
pub fn representatives(w: &MPermBig, n: usize) -> Vec<SetComposition> {
    let q = w.n() as usize;
    if n < q {
        return vec![];
    }
    if q == 0 {
        return if n == 0 { vec![SetComposition { blocks: vec![] }] } else { vec![] };
    }
    let mut out = vec![];
    for comp in Composition::all_of_size(n as u32).into_iter().filter(|c| c.len() == q) {
        let mut start = vec![0u32; q + 1];
        for i in 0..q {
            start[i + 1] = start[i] + comp.parts()[i];
        }
        let blocks: Vec<BTreeSet<u32>> = w
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .flat_map(|&x| (start[x as usize - 1] + 1)..=start[x as usize])
                    .collect()
            })
            .collect();
        out.push(SetComposition { blocks });
    }
    out
}

/// Weak-order comparison by breadth-first search upward from `w` through
/// covers taken on every representative of ground size at most `n_bound`.
/// `true` is definitive; `false` means no path exists within the bound.
pub fn weak_order_leq(w: &MPermBig, v: &MPermBig, n_bound: usize) -> Result<bool> {
    if (w.n() as usize) > n_bound || (v.n() as usize) > n_bound {
        return Err(Error::InvalidArgument(format!(
            "bound {n_bound} smaller than an input ground set"
        )));
    }
    let mut seen = BTreeSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(m) = queue.pop_front() {
        if m == *v {
            return Ok(true);
        }
        for n in m.n() as usize..=n_bound {
            for rep in representatives(&m, n) {
                for cov in weak_covers(&rep) {
                    let nxt = standardize_setcomp(&cov);
                    if seen.insert(nxt.clone()) {
                        queue.push_back(nxt);
                    }
                }
            }
        }
    }
    Ok(false)
}
