//! Truncated polynomial windows and basis expansions.
//!
//! Everything quasisymmetric or symmetric in this crate is ultimately checked
//! against an explicit polynomial in finitely many variables, truncated by
//! total degree. A window with nvars >= maxdeg determines basis coefficients
//! exactly for all indexing shapes of size up to the cap, which is what the
//! expansion containers record.

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::shapes::{comp_to_descents, descents_to_comp, join_u32, Composition, DescentSet, Partition};
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

/// Polynomial in x_1..x_nvars with integer coefficients, truncated to total
/// degree maxdeg. Exponent vectors always have length nvars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncPoly {
    nvars: usize,
    maxdeg: u32,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl TruncPoly {
    pub fn zero(nvars: usize, maxdeg: u32) -> Self {
        TruncPoly { nvars, maxdeg, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, maxdeg: u32) -> Self {
        let mut p = Self::zero(nvars, maxdeg);
        p.add_monomial(&vec![0; nvars], 1);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coeff(&self, expt: &[u32]) -> i64 {
        self.terms.get(expt).copied().unwrap_or(0)
    }

    pub fn add_monomial(&mut self, expt: &[u32], coeff: i64) {
        assert_eq!(expt.len(), self.nvars, "exponent vector length");
        if coeff == 0 || expt.iter().sum::<u32>() > self.maxdeg {
            return;
        }
        let e = self.terms.entry(expt.to_vec()).or_insert(0);
        *e = e.checked_add(coeff).expect("coefficient overflow");
        if *e == 0 {
            self.terms.remove(expt);
        }
    }

    pub fn add_assign(&mut self, other: &TruncPoly) {
        self.add_assign_scaled(other, 1);
    }

    pub fn add_assign_scaled(&mut self, other: &TruncPoly, scale: i64) {
        assert_eq!(self.nvars, other.nvars, "mismatched variable counts");
        for (e, c) in other.terms() {
            self.add_monomial(e, c.checked_mul(scale).expect("coefficient overflow"));
        }
    }

    pub fn scaled(&self, scale: i64) -> TruncPoly {
        let mut out = TruncPoly::zero(self.nvars, self.maxdeg);
        out.add_assign_scaled(self, scale);
        out
    }

    pub fn mul(&self, other: &TruncPoly) -> TruncPoly {
        assert_eq!(self.nvars, other.nvars, "mismatched variable counts");
        let maxdeg = self.maxdeg.min(other.maxdeg);
        let mut out = TruncPoly::zero(self.nvars, maxdeg);
        for (ea, ca) in self.terms() {
            let da: u32 = ea.iter().sum();
            if da > maxdeg {
                continue;
            }
            for (eb, cb) in other.terms() {
                let db: u32 = eb.iter().sum();
                if da + db > maxdeg {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_monomial(&e, ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Substitutes x_i -> -x_i: each monomial picks up (-1)^degree.
    pub fn negate_vars(&self) -> TruncPoly {
        let mut out = TruncPoly::zero(self.nvars, self.maxdeg);
        for (e, c) in self.terms() {
            let d: u32 = e.iter().sum();
            out.add_monomial(e, if d % 2 == 0 { c } else { -c });
        }
        out
    }

    pub fn homogeneous_component(&self, d: u32) -> TruncPoly {
        let mut out = TruncPoly::zero(self.nvars, self.maxdeg);
        for (e, c) in self.terms() {
            if e.iter().sum::<u32>() == d {
                out.add_monomial(e, c);
            }
        }
        out
    }

    /// The same polynomial viewed in more variables (the new ones unused).
    pub fn embed(&self, nvars: usize) -> TruncPoly {
        assert!(nvars >= self.nvars, "can only embed into more variables");
        let mut out = TruncPoly::zero(nvars, self.maxdeg);
        for (e, c) in self.terms() {
            let mut ee = e.clone();
            ee.resize(nvars, 0);
            out.add_monomial(&ee, c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: serde_json::Map<String, serde_json::Value> = self
            .terms()
            .map(|(e, c)| (format!("[{}]", join_u32(e)), serde_json::Value::from(c)))
            .collect();
        serde_json::json!({ "nvars": self.nvars, "maxdeg": self.maxdeg, "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let nvars = v["nvars"].as_u64().ok_or_else(|| Error::Parse("missing nvars".into()))? as usize;
        let maxdeg = v["maxdeg"].as_u64().ok_or_else(|| Error::Parse("missing maxdeg".into()))? as u32;
        let mut out = TruncPoly::zero(nvars, maxdeg);
        let terms = v["terms"].as_object().ok_or_else(|| Error::Parse("missing terms".into()))?;
        for (k, c) in terms {
            let body = k
                .trim()
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad exponent key {k:?}")))?;
            let expt: Vec<u32> = crate::shapes::parse_u32_list(body)?;
            if expt.len() != nvars {
                return Err(Error::Parse(format!("exponent key {k:?} has wrong length")));
            }
            let coeff = c.as_i64().ok_or_else(|| Error::Parse(format!("bad coefficient for {k:?}")))?;
            out.add_monomial(&expt, coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|&(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a == 1 {
                write!(f, "{}", vars.join(""))?;
            } else {
                write!(f, "{a}{}", vars.join(""))?;
            }
        }
        Ok(())
    }
}

// ===== Standard windows =====

/// Complete homogeneous h_k in the window.
pub fn h_poly(k: u32, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    if k > maxdeg {
        return out;
    }
    fn rec(out: &mut TruncPoly, expt: &mut Vec<u32>, var: usize, left: u32, nvars: usize) {
        if var == nvars {
            if left == 0 {
                out.add_monomial(expt, 1);
            }
            return;
        }
        for take in 0..=left {
            expt.push(take);
            rec(out, expt, var + 1, left - take, nvars);
            expt.pop();
        }
    }
    rec(&mut out, &mut vec![], 0, k, nvars);
    out
}

/// Elementary e_k in the window.
pub fn e_poly(k: u32, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    if k as usize > nvars || k > maxdeg {
        return out;
    }
    let mut expt = vec![0u32; nvars];
    fn rec(out: &mut TruncPoly, expt: &mut Vec<u32>, from: usize, left: u32) {
        if left == 0 {
            out.add_monomial(expt, 1);
            return;
        }
        for i in from..expt.len() {
            if expt.len() - i < left as usize {
                break;
            }
            expt[i] = 1;
            rec(out, expt, i + 1, left - 1);
            expt[i] = 0;
        }
    }
    rec(&mut out, &mut expt, 0, k);
    out
}

/// Monomial symmetric m_lambda in the window: the orbit sum of x^lambda.
pub fn m_sym_poly(lambda: &Partition, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    if lambda.len() > nvars || lambda.size() > maxdeg {
        return out;
    }
    let mut base = lambda.parts().to_vec();
    base.resize(nvars, 0);
    let orbit: BTreeSet<Vec<u32>> = permutations_of(&base);
    for e in orbit {
        out.add_monomial(&e, 1);
    }
    out
}

fn permutations_of(v: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let mut v = v.to_vec();
    v.sort();
    loop {
        out.insert(v.clone());
        if !next_permutation(&mut v) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Schur polynomial via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
pub fn schur_poly(lambda: &Partition, nvars: usize, maxdeg: u32) -> TruncPoly {
    skew_schur_poly(lambda, &Partition::empty(), nvars, maxdeg)
}

/// Skew Schur via det(h_{lambda_i - mu_i - i + j}).
pub fn skew_schur_poly(lambda: &Partition, mu: &Partition, nvars: usize, maxdeg: u32) -> TruncPoly {
    let l = lambda.len();
    let mut out = TruncPoly::zero(nvars, maxdeg);
    if l == 0 {
        return TruncPoly::one(nvars, maxdeg);
    }
    if !lambda.contains(mu) {
        return out;
    }
    // h-window cache by degree
    let mut hs: BTreeMap<i64, TruncPoly> = BTreeMap::new();
    let h = |k: i64, hs: &mut BTreeMap<i64, TruncPoly>| -> TruncPoly {
        if k < 0 {
            return TruncPoly::zero(nvars, maxdeg);
        }
        hs.entry(k).or_insert_with(|| h_poly(k as u32, nvars, maxdeg)).clone()
    };
    for (perm, sign) in signed_permutations(l) {
        let mut prod = TruncPoly::one(nvars, maxdeg);
        let mut zero = false;
        for i in 0..l {
            let j = perm[i];
            let k = lambda.part(i + 1) as i64 - mu.part(j + 1) as i64 - (i as i64) + (j as i64);
            let f = h(k, &mut hs);
            if f.is_zero() && k != 0 {
                zero = true;
                break;
            }
            prod = prod.mul(&f);
            if prod.is_zero() {
                zero = true;
                break;
            }
        }
        if !zero {
            out.add_assign_scaled(&prod, sign);
        }
    }
    out
}

fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = vec![];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut sign = 1i64;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        out.push((perm.clone(), sign));
        let mut p: Vec<u32> = perm.iter().map(|&x| x as u32).collect();
        if !next_permutation(&mut p) {
            break;
        }
        perm = p.iter().map(|&x| x as usize).collect();
    }
    out
}

/// Monomial quasisymmetric M_alpha in the window.
pub fn monomial_qsym(alpha: &Composition, nvars: usize, maxdeg: u32) -> TruncPoly {
    let mut out = TruncPoly::zero(nvars, maxdeg);
    let k = alpha.len();
    if k > nvars || alpha.size() > maxdeg {
        return out;
    }
    // choose positions i_1 < ... < i_k
    fn rec(out: &mut TruncPoly, alpha: &[u32], expt: &mut Vec<u32>, from: usize, idx: usize, nvars: usize) {
        if idx == alpha.len() {
            out.add_monomial(expt, 1);
            return;
        }
        for i in from..nvars {
            if nvars - i < alpha.len() - idx {
                break;
            }
            expt[i] = alpha[idx];
            rec(out, alpha, expt, i + 1, idx + 1, nvars);
            expt[i] = 0;
        }
    }
    let mut expt = vec![0u32; nvars];
    rec(&mut out, alpha.parts(), &mut expt, 0, 0, nvars);
    out
}

/// Fundamental quasisymmetric L_alpha in the window: sum of M_beta over
/// refinements of alpha.
pub fn fundamental_qsym(alpha: &Composition, nvars: usize, maxdeg: u32) -> TruncPoly {
    let n = alpha.size();
    let mut out = TruncPoly::zero(nvars, maxdeg);
    if n > maxdeg {
        return out;
    }
    if n == 0 {
        return TruncPoly::one(nvars, maxdeg);
    }
    let d = comp_to_descents(alpha);
    let others: Vec<u32> = (1..n).filter(|i| !d.set.contains(i)).collect();
    for mask in 0u64..(1 << others.len()) {
        let mut set = d.set.clone();
        for (i, &pos) in others.iter().enumerate() {
            if mask & (1 << i) != 0 {
                set.insert(pos);
            }
        }
        let beta = descents_to_comp(&DescentSet { n, set });
        out.add_assign(&monomial_qsym(&beta, nvars, maxdeg));
    }
    out
}

// ===== Expansions =====

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QBasis {
    Monomial,
    Fundamental,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SBasis {
    Monomial,
    Schur,
}

/// Quasisymmetric expansion: coefficients by composition, exact for all
/// compositions of size <= cap (None: exact everywhere).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QsymExpansion {
    pub basis: QBasis,
    pub cap: Option<u32>,
    pub coeffs: LinComb<Composition>,
}

/// Symmetric expansion: coefficients by partition, exact for all partitions
/// of size <= cap (None: exact everywhere).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymExpansion {
    pub basis: SBasis,
    pub cap: Option<u32>,
    pub coeffs: LinComb<Partition>,
}

/// Expands a window in the monomial or fundamental quasisymmetric basis.
/// The window must have nvars >= maxdeg so that every composition of size up
/// to maxdeg is visible; the reconstruction check makes failure loud.
pub fn expand_qsym(p: &TruncPoly, basis: QBasis) -> Result<QsymExpansion> {
    if p.nvars() < p.maxdeg() as usize {
        return Err(Error::InsufficientTruncation(format!(
            "need nvars >= maxdeg to expand, got {} < {}",
            p.nvars(),
            p.maxdeg()
        )));
    }
    // leading monomials x_1^{a_1}..x_k^{a_k} give the M-coefficients
    let mut mcoeffs: LinComb<Composition> = LinComb::new();
    for (e, c) in p.terms() {
        let k = e.iter().position(|&x| x == 0).unwrap_or(e.len());
        if e[k..].iter().all(|&x| x == 0) {
            let alpha = Composition::new(e[..k].to_vec()).expect("leading exponents are positive");
            mcoeffs.add_term(alpha, c);
        }
    }
    // reconstruction check is the quasisymmetry test
    let mut rebuilt = TruncPoly::zero(p.nvars(), p.maxdeg());
    for (alpha, c) in mcoeffs.iter() {
        rebuilt.add_assign_scaled(&monomial_qsym(alpha, p.nvars(), p.maxdeg()), c);
    }
    if rebuilt != *p {
        return Err(Error::NotQuasisymmetric(format!("window is not quasisymmetric: {p}")));
    }
    let coeffs = match basis {
        QBasis::Monomial => mcoeffs,
        QBasis::Fundamental => {
            // c^L_beta = sum over coarsenings alpha of beta of
            // (-1)^{l(beta)-l(alpha)} c^M_alpha
            let mut out = LinComb::new();
            let sizes: BTreeSet<u32> = mcoeffs.iter().map(|(a, _)| a.size()).collect();
            for n in sizes {
                for beta in Composition::all_of_size(n) {
                    let db = comp_to_descents(&beta);
                    let mut total = 0i64;
                    for sub in subsets(&db.set) {
                        let alpha = descents_to_comp(&DescentSet { n, set: sub });
                        let c = mcoeffs.coeff(&alpha);
                        if c != 0 {
                            let sign = if (beta.len() - alpha.len()) % 2 == 0 { 1 } else { -1 };
                            total += sign * c;
                        }
                    }
                    if total != 0 {
                        out.add_term(beta, total);
                    }
                }
            }
            out
        }
    };
    Ok(QsymExpansion { basis, cap: Some(p.maxdeg()), coeffs })
}

fn subsets(s: &BTreeSet<u32>) -> Vec<BTreeSet<u32>> {
    let items: Vec<u32> = s.iter().copied().collect();
    let mut out = vec![];
    for mask in 0u64..(1 << items.len()) {
        out.push(items.iter().enumerate().filter(|&(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect());
    }
    out
}

/// Expands a window in the monomial or Schur symmetric basis. Schur
/// expansion peels the lexicographically greatest monomial, which for a
/// symmetric polynomial is partition-shaped.
pub fn expand_sym(p: &TruncPoly, basis: SBasis) -> Result<SymExpansion> {
    if p.nvars() < p.maxdeg() as usize {
        return Err(Error::InsufficientTruncation(format!(
            "need nvars >= maxdeg to expand, got {} < {}",
            p.nvars(),
            p.maxdeg()
        )));
    }
    let coeffs = match basis {
        SBasis::Monomial => {
            let mut out: LinComb<Partition> = LinComb::new();
            for (e, c) in p.terms() {
                if e.windows(2).all(|w| w[0] >= w[1]) {
                    let mut parts = e.clone();
                    while parts.last() == Some(&0) {
                        parts.pop();
                    }
                    out.add_term(Partition::new(parts).expect("sorted exponents"), c);
                }
            }
            // reconstruction check is the symmetry test
            let mut rebuilt = TruncPoly::zero(p.nvars(), p.maxdeg());
            for (lam, c) in out.iter() {
                rebuilt.add_assign_scaled(&m_sym_poly(lam, p.nvars(), p.maxdeg()), c);
            }
            if rebuilt != *p {
                return Err(Error::NotSymmetric(format!("window is not symmetric: {p}")));
            }
            out
        }
        SBasis::Schur => {
            let mut rest = p.clone();
            let mut out: LinComb<Partition> = LinComb::new();
            while !rest.is_zero() {
                let (lead, &c) = rest.terms.iter().next_back().expect("nonzero");
                let mut parts = lead.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                let lam = Partition::new(parts)
                    .map_err(|_| Error::NotSymmetric(format!("leading monomial not partition-shaped: {p}")))?;
                out.add_term(lam.clone(), c);
                rest.add_assign_scaled(&schur_poly(&lam, p.nvars(), p.maxdeg()), -c);
            }
            out
        }
    };
    Ok(SymExpansion { basis, cap: Some(p.maxdeg()), coeffs })
}

impl QsymExpansion {
    pub fn exact(basis: QBasis, coeffs: LinComb<Composition>) -> Self {
        QsymExpansion { basis, cap: None, coeffs }
    }

    pub fn to_json(&self) -> serde_json::Value {
        expansion_json(
            match self.basis {
                QBasis::Monomial => "M",
                QBasis::Fundamental => "L",
            },
            self.cap,
            self.coeffs.iter().map(|(k, c)| (k.to_string(), c)),
        )
    }
}

impl SymExpansion {
    pub fn exact(basis: SBasis, coeffs: LinComb<Partition>) -> Self {
        SymExpansion { basis, cap: None, coeffs }
    }

    pub fn to_json(&self) -> serde_json::Value {
        expansion_json(
            match self.basis {
                SBasis::Monomial => "m",
                SBasis::Schur => "s",
            },
            self.cap,
            self.coeffs.iter().map(|(k, c)| (k.to_string(), c)),
        )
    }
}

fn expansion_json(
    basis: &str,
    cap: Option<u32>,
    coeffs: impl Iterator<Item = (String, i64)>,
) -> serde_json::Value {
    let terms: serde_json::Map<String, serde_json::Value> =
        coeffs.map(|(k, c)| (k, serde_json::Value::from(c))).collect();
    serde_json::json!({ "basis": basis, "cap": cap, "coeffs": terms })
}

/// Hall inner product of two Schur expansions: Schur functions are
/// orthonormal. An expansion only known up to a cap can be paired only when
/// the other side's support fits under that cap.
pub fn hall_pair(a: &SymExpansion, b: &SymExpansion) -> Result<i64> {
    if a.basis != SBasis::Schur || b.basis != SBasis::Schur {
        return Err(Error::InvalidArgument("hall_pair needs Schur expansions".into()));
    }
    let support_max = |x: &SymExpansion| x.coeffs.iter().map(|(l, _)| l.size()).max().unwrap_or(0);
    match (a.cap, b.cap) {
        (None, None) => {}
        (None, Some(cb)) => {
            if support_max(a) > cb {
                return Err(Error::InsufficientTruncation(format!(
                    "support reaches degree {} but the other side is only exact to {}",
                    support_max(a),
                    cb
                )));
            }
        }
        (Some(ca), None) => {
            if support_max(b) > ca {
                return Err(Error::InsufficientTruncation(format!(
                    "support reaches degree {} but the other side is only exact to {}",
                    support_max(b),
                    ca
                )));
            }
        }
        (Some(ca), Some(cb)) => {
            return Err(Error::InsufficientTruncation(format!(
                "both sides truncated (caps {ca}, {cb}); pair an exact element instead"
            )));
        }
    }
    let mut total = 0i64;
    for (lam, c) in a.coeffs.iter() {
        total += c * b.coeffs.coeff(lam);
    }
    Ok(total)
}

/// Omega involution on a Schur expansion: conjugates every partition.
pub fn omega_schur(a: &SymExpansion) -> Result<SymExpansion> {
    if a.basis != SBasis::Schur {
        return Err(Error::InvalidArgument("omega_schur needs a Schur expansion".into()));
    }
    let coeffs = a.coeffs.iter().map(|(l, c)| (l.conjugate(), c)).collect();
    Ok(SymExpansion { basis: SBasis::Schur, cap: a.cap, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn cp(s: &str) -> Composition {
        Composition::parse(s).unwrap()
    }

    #[test]
    fn h_and_e_windows() {
        let h2 = h_poly(2, 3, 4);
        assert_eq!(h2.coeff(&[2, 0, 0]), 1);
        assert_eq!(h2.coeff(&[1, 1, 0]), 1);
        assert_eq!(h2.terms().count(), 6);
        let e2 = e_poly(2, 3, 4);
        assert_eq!(e2.coeff(&[1, 1, 0]), 1);
        assert_eq!(e2.coeff(&[2, 0, 0]), 0);
        assert_eq!(e2.terms().count(), 3);
        assert!(e_poly(4, 3, 9).is_zero());
    }

    #[test]
    fn schur_21_window() {
        // s_(2,1) = m_(2,1) + 2 m_(1,1,1)
        let s = schur_poly(&pt("[2,1]"), 3, 3);
        assert_eq!(s.coeff(&[2, 1, 0]), 1);
        assert_eq!(s.coeff(&[1, 2, 0]), 1);
        assert_eq!(s.coeff(&[0, 1, 2]), 1);
        assert_eq!(s.coeff(&[1, 1, 1]), 2);
        assert_eq!(s.terms().count(), 7);
        let ex = expand_sym(&s, SBasis::Monomial).unwrap();
        assert_eq!(ex.coeffs.coeff(&pt("[2,1]")), 1);
        assert_eq!(ex.coeffs.coeff(&pt("[1,1,1]")), 2);
        assert_eq!(ex.coeffs.len(), 2);
    }

    #[test]
    fn schur_expansion_roundtrip() {
        for lam in ["[3]", "[2,1]", "[1,1,1]", "[2,2]", "[4,2,1]"] {
            let lam = pt(lam);
            let w = schur_poly(&lam, 7, 7);
            let ex = expand_sym(&w, SBasis::Schur).unwrap();
            assert_eq!(ex.coeffs, LinComb::singleton(lam.clone()), "peeling {lam}");
            assert_eq!(ex.cap, Some(7));
        }
        // a small sum with signs
        let mut w = schur_poly(&pt("[2,1]"), 5, 5);
        w.add_assign_scaled(&schur_poly(&pt("[3]"), 5, 5), -2);
        let ex = expand_sym(&w, SBasis::Schur).unwrap();
        assert_eq!(ex.coeffs.coeff(&pt("[2,1]")), 1);
        assert_eq!(ex.coeffs.coeff(&pt("[3]")), -2);
    }

    #[test]
    fn skew_schur_window() {
        // s_{(2,1)/(1)} = m_2 + 2 m_{11} = h2 + m11, i.e. s_2 + s_11
        let w = skew_schur_poly(&pt("[2,1]"), &pt("[1]"), 4, 4);
        let ex = expand_sym(&w, SBasis::Schur).unwrap();
        assert_eq!(ex.coeffs.coeff(&pt("[2]")), 1);
        assert_eq!(ex.coeffs.coeff(&pt("[1,1]")), 1);
        assert_eq!(ex.coeffs.len(), 2);
    }

    #[test]
    fn qsym_windows_and_expansion() {
        // L_(2,1) = M_(2,1) + M_(1,1,1)
        let l = fundamental_qsym(&cp("(2,1)"), 4, 4);
        let ex = expand_qsym(&l, QBasis::Monomial).unwrap();
        assert_eq!(ex.coeffs.coeff(&cp("(2,1)")), 1);
        assert_eq!(ex.coeffs.coeff(&cp("(1,1,1)")), 1);
        assert_eq!(ex.coeffs.len(), 2);
        let exl = expand_qsym(&l, QBasis::Fundamental).unwrap();
        assert_eq!(exl.coeffs, LinComb::singleton(cp("(2,1)")));
        // schur windows are quasisymmetric: s_(2,1) = L_(2,1) + L_(1,2)
        let s = schur_poly(&pt("[2,1]"), 3, 3);
        let exs = expand_qsym(&s, QBasis::Fundamental).unwrap();
        assert_eq!(exs.coeffs.coeff(&cp("(2,1)")), 1);
        assert_eq!(exs.coeffs.coeff(&cp("(1,2)")), 1);
        assert_eq!(exs.coeffs.len(), 2);
    }

    #[test]
    fn expansion_rejects_wrong_class() {
        let mut p = TruncPoly::zero(3, 3);
        p.add_monomial(&[1, 0, 0], 1);
        assert!(matches!(expand_qsym(&p, QBasis::Monomial), Err(Error::NotQuasisymmetric(_))));
        let m21 = monomial_qsym(&cp("(2,1)"), 3, 3);
        assert!(matches!(expand_sym(&m21, SBasis::Monomial), Err(Error::NotSymmetric(_))));
        // quasisymmetric but not symmetric
        assert!(expand_qsym(&m21, QBasis::Monomial).is_ok());
    }

    #[test]
    fn expansion_requires_wide_window() {
        let p = schur_poly(&pt("[2,1]"), 2, 3);
        assert!(matches!(expand_sym(&p, SBasis::Schur), Err(Error::InsufficientTruncation(_))));
    }

    #[test]
    fn hall_pairing_rules() {
        let a = SymExpansion::exact(SBasis::Schur, LinComb::term(pt("[2,1]"), 1));
        let mut bc = LinComb::term(pt("[2,1]"), 3);
        bc.add_term(pt("[3]"), 5);
        let b = SymExpansion { basis: SBasis::Schur, cap: Some(4), coeffs: bc };
        assert_eq!(hall_pair(&a, &b).unwrap(), 3);
        assert_eq!(hall_pair(&b, &a).unwrap(), 3);
        let big = SymExpansion::exact(SBasis::Schur, LinComb::term(pt("[5]"), 1));
        assert!(matches!(hall_pair(&big, &b), Err(Error::InsufficientTruncation(_))));
        assert!(matches!(hall_pair(&b, &b), Err(Error::InsufficientTruncation(_))));
    }

    #[test]
    fn omega_conjugates() {
        let a = SymExpansion::exact(SBasis::Schur, LinComb::term(pt("[2,1]"), 1));
        let w = omega_schur(&a).unwrap();
        assert_eq!(w.coeffs, LinComb::term(pt("[2,1]"), 1));
        let b = SymExpansion::exact(SBasis::Schur, LinComb::term(pt("[3]"), 2));
        assert_eq!(omega_schur(&b).unwrap().coeffs, LinComb::term(pt("[1,1,1]"), 2));
    }

    #[test]
    fn mul_truncates() {
        let h1 = h_poly(1, 3, 3);
        let sq = h1.mul(&h1);
        assert_eq!(sq.coeff(&[2, 0, 0]), 1);
        assert_eq!(sq.coeff(&[1, 1, 0]), 2);
        let capped = h_poly(1, 3, 1).mul(&h_poly(1, 3, 1));
        assert!(capped.is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let p = schur_poly(&pt("[2,1]"), 3, 3);
        let j = p.to_json();
        assert_eq!(TruncPoly::from_json(&j).unwrap(), p);
        let p = schur_poly(&pt("[2,1]"), 4, 3);
        let ex = expand_sym(&p, SBasis::Schur).unwrap();
        let j = ex.to_json();
        assert_eq!(j["basis"], "s");
        assert_eq!(j["cap"], 3);
        assert_eq!(j["coeffs"]["[2,1]"], 1);
    }
}
