//! Box-adding operator engines and their ordered products. The diagonal
//! engine toggles corners over a fixed floor shape; the column engine grows
//! one column at a time. Multiplying out the per-variable factor products
//! reproduces the four tableau generating functions by a route independent
//! of direct enumeration, and the sign-normalized set-valued series feeds
//! the rectangle-quotient structure constants.

use std::collections::BTreeMap;

use crate::lincomb::LinComb;
use crate::series::{expand_sym, SBasis, TruncPoly};
use crate::shapes::{corners, Partition, SkewShape};
use crate::tableaux::{rpp_gf, set_valued_gf, valued_set_gf, weak_set_valued_gf};
use crate::{Error, Result};

// ===== Vectors of partitions =====

/// Formal sum of partitions, admitting only shapes of at most `bound` cells.
/// The engines silently drop anything growing past the bound, so a result is
/// exact for every coefficient whose shape fits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionVector {
    pub bound: u32,
    pub terms: LinComb<Partition>,
}

impl PartitionVector {
    pub fn zero(bound: u32) -> Self {
        PartitionVector { bound, terms: LinComb::new() }
    }

    pub fn singleton(lambda: Partition, bound: u32) -> Result<Self> {
        if lambda.size() > bound {
            return Err(Error::InvalidArgument(format!(
                "partition {lambda} exceeds the size bound {bound}"
            )));
        }
        Ok(PartitionVector { bound, terms: LinComb::singleton(lambda) })
    }

    /// Adds a term, dropping it when the shape exceeds the bound.
    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        if lambda.size() <= self.bound {
            self.terms.add_term(lambda, coeff);
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, scale: i64) {
        assert_eq!(self.bound, other.bound, "mismatched bounds");
        self.terms.add_assign_scaled(&other.terms, scale);
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_assign_scaled(other, 1);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

// ===== The two engines =====

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// Corner toggling on diagonals over a floor shape.
    V,
    /// Column adding.
    U,
}

/// Diagonal engine: adds the outer corner on diagonal `i` when the shape has
/// one, fixes shapes with a removable corner on diagonal `i` outside the
/// floor `nu`, and kills everything else. Errors on a term not containing
/// the floor.
pub fn apply_v(i: i64, x: &PartitionVector, nu: &Partition) -> Result<PartitionVector> {
    let mut out = PartitionVector::zero(x.bound);
    for (lam, c) in x.terms.iter() {
        let cor = corners(lam, nu)?;
        if let Some(&(r, col, _)) = cor.addable.iter().find(|&&(_, _, d)| d == i) {
            out.add_term(lam.with_added_cell(r, col)?, c);
        } else if cor.removable_free.iter().any(|&(_, _, d)| d == i) {
            out.add_term(lam.clone(), c);
        }
    }
    Ok(out)
}

/// Column engine: every way to add at least one cell to column `i`, within
/// the bound. Columns are 1-based; the result is zero when nothing can be
/// added.
pub fn apply_u(i: u32, x: &PartitionVector) -> PartitionVector {
    assert!(i >= 1, "columns are 1-based");
    let mut out = PartitionVector::zero(x.bound);
    for (lam, c) in x.terms.iter() {
        let height = lam.conjugate().part(i as usize) as usize;
        let mut parts = lam.parts().to_vec();
        let mut size = lam.size();
        for r in height.. {
            // the next row must currently stop exactly one cell short
            let cur = parts.get(r).copied().unwrap_or(0);
            if cur != i - 1 {
                break;
            }
            if r < parts.len() {
                parts[r] = i;
            } else {
                parts.push(i);
            }
            size += 1;
            if size > x.bound {
                break;
            }
            out.add_term(Partition::new(parts.clone()).expect("column growth keeps shape"), c);
        }
    }
    out
}

fn apply_op(engine: Engine, nu: &Partition, i: i64, x: &PartitionVector) -> Result<PartitionVector> {
    match engine {
        Engine::V => apply_v(i, x, nu),
        Engine::U if i >= 1 => Ok(apply_u(i as u32, x)),
        Engine::U => Ok(PartitionVector::zero(x.bound)),
    }
}

/// Indices that can act nontrivially on shapes within the bound: every cell
/// of such a shape lies on a diagonal in (-bound, bound), and a column
/// beyond `bound` cannot be grown without overshooting.
fn index_window(engine: Engine, bound: u32) -> Vec<i64> {
    if bound == 0 {
        return vec![];
    }
    match engine {
        Engine::V => (1 - bound as i64..bound as i64).collect(),
        Engine::U => (1..=bound as i64).collect(),
    }
}

// ===== Elementary and complete analogs =====

/// The degree-k coefficient of the ascending once-per-index product: all
/// strictly increasing k-step applications.
pub fn apply_e_k(engine: Engine, nu: &Partition, k: u32, x: &PartitionVector) -> Result<PartitionVector> {
    let mut state: Vec<PartitionVector> = (0..=k).map(|_| PartitionVector::zero(x.bound)).collect();
    state[0] = x.clone();
    for i in index_window(engine, x.bound) {
        for j in (0..k as usize).rev() {
            if state[j].is_zero() {
                continue;
            }
            let img = apply_op(engine, nu, i, &state[j])?;
            state[j + 1].add_assign(&img);
        }
    }
    Ok(state.pop().expect("k + 1 levels"))
}

/// The degree-k coefficient of the descending unlimited-repeat product: all
/// weakly decreasing k-step applications.
pub fn apply_h_k(engine: Engine, nu: &Partition, k: u32, x: &PartitionVector) -> Result<PartitionVector> {
    let mut state: Vec<PartitionVector> = (0..=k).map(|_| PartitionVector::zero(x.bound)).collect();
    state[0] = x.clone();
    for i in index_window(engine, x.bound).into_iter().rev() {
        // ascending levels over the live state, so repeats of one index chain
        for j in 1..=k as usize {
            let img = apply_op(engine, nu, i, &state[j - 1])?;
            state[j].add_assign(&img);
        }
    }
    Ok(state.pop().expect("k + 1 levels"))
}

fn permutations_with_sign(m: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(k: usize, perm: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == perm.len() {
            let mut inv = 0;
            for a in 0..perm.len() {
                for b in a + 1..perm.len() {
                    if perm[a] > perm[b] {
                        inv += 1;
                    }
                }
            }
            out.push((perm.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    let mut out = vec![];
    rec(0, &mut (0..m).collect(), &mut out);
    out
}

/// Schur analog through the dual Jacobi-Trudi determinant in the elementary
/// analogs. The elementary analogs commute, so the factor order inside each
/// determinant term is immaterial.
pub fn apply_schur(
    engine: Engine,
    nu: &Partition,
    lambda: &Partition,
    x: &PartitionVector,
) -> Result<PartitionVector> {
    let conj = lambda.conjugate();
    let m = conj.len();
    if m == 0 {
        return Ok(x.clone());
    }
    let mut out = PartitionVector::zero(x.bound);
    'perm: for (sigma, sign) in permutations_with_sign(m) {
        let mut cur = x.clone();
        for i in 0..m {
            let k = conj.part(i + 1) as i64 + sigma[i] as i64 - i as i64;
            if k < 0 {
                continue 'perm;
            }
            if k > 0 {
                cur = apply_e_k(engine, nu, k as u32, &cur)?;
            }
        }
        out.add_assign_scaled(&cur, sign);
    }
    Ok(out)
}

/// Checks that the elementary analogs of degrees k1 and k2 commute on every
/// given vector, and that the engine's defining relations hold there.
pub fn ecom_check(
    engine: Engine,
    nu: &Partition,
    k1: u32,
    k2: u32,
    vectors: &[PartitionVector],
) -> Result<bool> {
    for x in vectors {
        let ab = apply_e_k(engine, nu, k2, &apply_e_k(engine, nu, k1, x)?)?;
        let ba = apply_e_k(engine, nu, k1, &apply_e_k(engine, nu, k2, x)?)?;
        if ab != ba {
            return Ok(false);
        }
        if !relations_hold(engine, nu, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn relations_hold(engine: Engine, nu: &Partition, x: &PartitionVector) -> Result<bool> {
    let idx = index_window(engine, x.bound);
    let op = |i: i64, y: &PartitionVector| apply_op(engine, nu, i, y);
    match engine {
        Engine::V => {
            for &i in &idx {
                let vi = op(i, x)?;
                if op(i, &vi)? != vi {
                    return Ok(false);
                }
                let braid1 = op(i, &op(i + 1, &vi)?)?;
                let braid2 = op(i + 1, &op(i, &op(i + 1, x)?)?)?;
                if !braid1.is_zero() || !braid2.is_zero() {
                    return Ok(false);
                }
                for &j in &idx {
                    if j >= i + 2 && op(i, &op(j, x)?)? != op(j, &op(i, x)?)? {
                        return Ok(false);
                    }
                }
            }
        }
        Engine::U => {
            for a in 0..idx.len() {
                for b in a + 1..idx.len() {
                    let (i, j) = (idx[a], idx[b]);
                    for &k in &idx[b + 1..] {
                        let uj = op(j, x)?;
                        if op(i, &op(k, &uj)?)? != op(k, &op(i, &uj)?)? {
                            return Ok(false);
                        }
                        let lhs = op(j, &op(i, &op(k, x)?)?)?;
                        let rhs = op(j, &op(k, &op(i, x)?)?)?;
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                    let mut inner = op(i, x)?;
                    inner.add_assign(&op(j, x)?);
                    let lhs = op(j, &op(i, &inner)?)?;
                    let base = op(j, &op(i, x)?)?;
                    let mut rhs = op(i, &base)?;
                    rhs.add_assign(&op(j, &base)?);
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

// ===== Ordered products as generating functions =====

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductForm {
    /// Once per index, ascending: one factor (1 + x op_i) per index.
    A,
    /// Unlimited repeats, descending: one factor 1/(1 - x op_i) per index.
    B,
}

fn times_var(p: &TruncPoly, t: usize) -> TruncPoly {
    let mut out = TruncPoly::zero(p.nvars(), p.maxdeg());
    for (e, c) in p.terms() {
        let mut ee = e.clone();
        ee[t] += 1;
        out.add_monomial(&ee, c);
    }
    out
}

type State = BTreeMap<Partition, TruncPoly>;

fn state_add(state: &mut State, lam: &Partition, p: &TruncPoly) {
    if p.is_zero() {
        return;
    }
    state
        .entry(lam.clone())
        .or_insert_with(|| TruncPoly::zero(p.nvars(), p.maxdeg()))
        .add_assign(p);
}

/// Multiplies the state by one factor for variable slot t and index i.
fn apply_factor(
    engine: Engine,
    form: ProductForm,
    nu: &Partition,
    bound: u32,
    i: i64,
    t: usize,
    state: &mut State,
) -> Result<()> {
    let snapshot: Vec<(Partition, TruncPoly)> =
        state.iter().map(|(l, p)| (l.clone(), p.clone())).collect();
    match form {
        ProductForm::A => {
            for (lam, poly) in snapshot {
                let xp = times_var(&poly, t);
                if xp.is_zero() {
                    continue;
                }
                let image = apply_op(engine, nu, i, &PartitionVector::singleton(lam, bound)?)?;
                for (mu, k) in image.terms.iter() {
                    state_add(state, mu, &xp.scaled(k));
                }
            }
        }
        ProductForm::B => {
            let mut frontier = snapshot;
            while !frontier.is_empty() {
                let mut next: State = BTreeMap::new();
                for (lam, poly) in frontier {
                    let xp = times_var(&poly, t);
                    if xp.is_zero() {
                        continue;
                    }
                    let image = apply_op(engine, nu, i, &PartitionVector::singleton(lam, bound)?)?;
                    for (mu, k) in image.terms.iter() {
                        state_add(&mut next, mu, &xp.scaled(k));
                    }
                }
                for (mu, p) in &next {
                    state_add(state, mu, p);
                }
                frontier = next.into_iter().collect();
            }
        }
    }
    Ok(())
}

/// Pairs the full ordered product against a target shape: one ascending or
/// descending pass per variable, starting from the floor shape. The bound is
/// the target's size, which is safe because neither engine ever shrinks a
/// shape.
pub fn gf_via_operators(
    engine: Engine,
    form: ProductForm,
    nu: &Partition,
    lambda: &Partition,
    nvars: usize,
    maxdeg: u32,
) -> Result<TruncPoly> {
    if !lambda.contains(nu) {
        return Err(Error::InvalidShape(format!("floor {nu} not contained in target {lambda}")));
    }
    if (nvars as u32) < maxdeg {
        return Err(Error::InsufficientTruncation(format!(
            "need nvars >= maxdeg for an exact window, got {nvars} < {maxdeg}"
        )));
    }
    let bound = lambda.size();
    let mut state: State = BTreeMap::from([(nu.clone(), TruncPoly::one(nvars, maxdeg))]);
    for t in 0..nvars {
        let idx = index_window(engine, bound);
        match form {
            ProductForm::A => {
                for i in idx {
                    apply_factor(engine, form, nu, bound, i, t, &mut state)?;
                }
            }
            ProductForm::B => {
                for i in idx.into_iter().rev() {
                    apply_factor(engine, form, nu, bound, i, t, &mut state)?;
                }
            }
        }
    }
    Ok(state.remove(lambda).unwrap_or_else(|| TruncPoly::zero(nvars, maxdeg)))
}

/// The four tableau series an ordered product computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    SetValued,
    WeakSetValued,
    Rpp,
    ValuedSet,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 4] =
        [SeriesKind::SetValued, SeriesKind::WeakSetValued, SeriesKind::Rpp, SeriesKind::ValuedSet];

    pub fn engine_form(self) -> (Engine, ProductForm) {
        match self {
            SeriesKind::SetValued => (Engine::V, ProductForm::A),
            SeriesKind::WeakSetValued => (Engine::V, ProductForm::B),
            SeriesKind::Rpp => (Engine::U, ProductForm::A),
            SeriesKind::ValuedSet => (Engine::U, ProductForm::B),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::SetValued => "set-valued",
            SeriesKind::WeakSetValued => "weak-set-valued",
            SeriesKind::Rpp => "rpp",
            SeriesKind::ValuedSet => "valued-set",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown series {s:?}")))
    }
}

/// Window of a tableau series computed through the operator engines.
pub fn series_via_operators(
    kind: SeriesKind,
    shape: &SkewShape,
    nvars: usize,
    maxdeg: u32,
) -> Result<TruncPoly> {
    let (engine, form) = kind.engine_form();
    gf_via_operators(engine, form, shape.inner(), shape.outer(), nvars, maxdeg)
}

/// The same window by direct tableau enumeration, for dual-route checks.
pub fn series_via_tableaux(kind: SeriesKind, shape: &SkewShape, nvars: usize, maxdeg: u32) -> TruncPoly {
    match kind {
        SeriesKind::SetValued => set_valued_gf(shape, nvars, maxdeg),
        SeriesKind::WeakSetValued => weak_set_valued_gf(shape, nvars, maxdeg),
        SeriesKind::Rpp => rpp_gf(shape, nvars, maxdeg),
        SeriesKind::ValuedSet => valued_set_gf(shape, nvars, maxdeg),
    }
}

// ===== Sign normalizations =====

/// Stable Grothendieck window: the set-valued series with every degree-n
/// component twisted by (-1)^(n - size), so the lowest component is the
/// Schur function of the shape.
pub fn grothendieck_gf(shape: &SkewShape, nvars: usize, maxdeg: u32) -> TruncPoly {
    let sign = if shape.size() % 2 == 0 { 1 } else { -1 };
    set_valued_gf(shape, nvars, maxdeg).negate_vars().scaled(sign)
}

/// The matching twist of the column-weight series of reverse plane
/// partitions; its top component is the Schur function of the shape.
pub fn gtilde_gf(shape: &SkewShape, nvars: usize, maxdeg: u32) -> TruncPoly {
    let sign = if shape.size() % 2 == 0 { 1 } else { -1 };
    rpp_gf(shape, nvars, maxdeg).negate_vars().scaled(sign)
}

// ===== Rectangle quotient =====

/// Structure constants of the rectangle quotient: the coefficient of each
/// basis shape inside the product of the sign-normalized set-valued series
/// for lambda and mu, keeping only shapes inside the k x (n-k) rectangle.
/// Peels the product window from the bottom degree, where each basis element
/// starts with its Schur function.
pub fn grassmann_constants(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    n: u32,
    maxdeg: u32,
) -> Result<BTreeMap<Partition, i64>> {
    if n < k {
        return Err(Error::InvalidArgument(format!("rectangle needs n >= k, got k = {k}, n = {n}")));
    }
    let rect = Partition::new(vec![n - k; k as usize]).expect("rectangle rows are equal");
    if !rect.contains(lambda) || !rect.contains(mu) {
        return Err(Error::InvalidShape(format!(
            "shapes must fit inside the {k} x {} rectangle",
            n - k
        )));
    }
    if maxdeg < rect.size() {
        return Err(Error::InsufficientTruncation(format!(
            "window degree {maxdeg} cannot see every shape in a rectangle of size {}",
            rect.size()
        )));
    }
    let nvars = maxdeg as usize;
    let gl = grothendieck_gf(&SkewShape::straight(lambda.clone()), nvars, maxdeg);
    let gm = grothendieck_gf(&SkewShape::straight(mu.clone()), nvars, maxdeg);
    let mut rest = gl.mul(&gm);
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let low = rest.terms().map(|(e, _)| e.iter().sum::<u32>()).min().expect("nonzero");
        let exp = expand_sym(&rest.homogeneous_component(low), SBasis::Schur)?;
        for (shape, c) in exp.coeffs.iter() {
            let g = grothendieck_gf(&SkewShape::straight(shape.clone()), nvars, maxdeg);
            rest.add_assign_scaled(&g, -c);
            if rect.contains(shape) {
                out.insert(shape.clone(), c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{e_poly, omega_schur, schur_poly};

    fn pt(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn pv(s: &str, bound: u32) -> PartitionVector {
        PartitionVector::singleton(pt(s), bound).unwrap()
    }

    fn terms_of(x: &PartitionVector) -> Vec<(String, i64)> {
        x.terms.iter().map(|(l, c)| (l.to_string(), c)).collect()
    }

    #[test]
    fn diagonal_engine_cases() {
        let empty = Partition::empty();
        // adding the outer corner on the main diagonal
        let got = apply_v(0, &pv("[]", 3), &empty).unwrap();
        assert_eq!(terms_of(&got), vec![("[1]".into(), 1)]);
        // a free removable corner fixes the shape
        let got = apply_v(0, &pv("[1]", 3), &empty).unwrap();
        assert_eq!(terms_of(&got), vec![("[1]".into(), 1)]);
        // the same corner inside the floor kills it instead
        let got = apply_v(0, &pv("[1]", 3), &pt("[1]")).unwrap();
        assert!(got.is_zero());
        // no corner on the diagonal at all
        assert!(apply_v(2, &pv("[1]", 3), &empty).unwrap().is_zero());
        // braid products vanish: v_0 v_1 v_0 and v_1 v_0 v_1
        for start in ["[]", "[1]", "[2]", "[2,1]"] {
            let x = pv(start, 6);
            let a = apply_v(0, &apply_v(1, &apply_v(0, &x, &empty).unwrap(), &empty).unwrap(), &empty);
            let b = apply_v(1, &apply_v(0, &apply_v(1, &x, &empty).unwrap(), &empty).unwrap(), &empty);
            assert!(a.unwrap().is_zero(), "{start}");
            assert!(b.unwrap().is_zero(), "{start}");
        }
        // a term not containing the floor is a domain error
        assert!(apply_v(0, &pv("[1]", 3), &pt("[2]")).is_err());
    }

    #[test]
    fn column_engine_golden_row() {
        let lam = pv("[4,3,3,1]", 13);
        assert!(apply_u(6, &lam).is_zero());
        assert_eq!(terms_of(&apply_u(5, &lam)), vec![("[5,3,3,1]".into(), 1)]);
        assert_eq!(
            terms_of(&apply_u(4, &lam)),
            vec![("[4,4,3,1]".into(), 1), ("[4,4,4,1]".into(), 1)]
        );
        assert!(apply_u(3, &lam).is_zero());
        assert_eq!(terms_of(&apply_u(2, &lam)), vec![("[4,3,3,2]".into(), 1)]);
        // the first column grows forever; the bound cuts it to two terms
        assert_eq!(
            terms_of(&apply_u(1, &lam)),
            vec![("[4,3,3,1,1]".into(), 1), ("[4,3,3,1,1,1]".into(), 1)]
        );
        let empty = PartitionVector::singleton(Partition::empty(), 2).unwrap();
        assert_eq!(terms_of(&apply_u(1, &empty)), vec![("[1]".into(), 1), ("[1,1]".into(), 1)]);
    }

    #[test]
    fn engines_satisfy_their_relations() {
        let empty = Partition::empty();
        let mut vectors = vec![];
        for n in 0..=5u32 {
            for lam in Partition::all_of_size(n) {
                vectors.push(PartitionVector::singleton(lam, 8).unwrap());
            }
        }
        assert!(ecom_check(Engine::U, &empty, 1, 2, &vectors).unwrap());
        assert!(ecom_check(Engine::U, &empty, 2, 3, &vectors).unwrap());
        assert!(ecom_check(Engine::V, &empty, 1, 2, &vectors).unwrap());
        // diagonal engine over a nonempty floor
        let floor = pt("[1]");
        let over_floor: Vec<PartitionVector> = vectors
            .iter()
            .filter(|x| x.terms.keys().all(|l| l.contains(&floor)))
            .cloned()
            .collect();
        assert!(ecom_check(Engine::V, &floor, 2, 3, &over_floor).unwrap());
    }

    #[test]
    fn single_cell_series_are_e_and_h_sums() {
        // set-valued fillings of one box are nonempty sets: sum of e_k
        let one = SkewShape::parse("[1]").unwrap();
        let via_ops = series_via_operators(SeriesKind::SetValued, &one, 4, 4).unwrap();
        let mut expected = TruncPoly::zero(4, 4);
        for k in 1..=4 {
            expected.add_assign(&e_poly(k, 4, 4));
        }
        assert_eq!(via_ops, expected);
        // weak set-valued fillings of one box are nonempty multisets
        let via_ops = series_via_operators(SeriesKind::WeakSetValued, &one, 4, 4).unwrap();
        let mut expected = TruncPoly::zero(4, 4);
        for k in 1..=4 {
            expected.add_assign(&crate::series::h_poly(k, 4, 4));
        }
        assert_eq!(via_ops, expected);
    }

    #[test]
    fn operator_route_matches_enumeration_straight() {
        for n in 1..=4u32 {
            for lam in Partition::all_of_size(n) {
                let shape = SkewShape::straight(lam);
                let deg = n + 2;
                let nv = deg as usize;
                for kind in SeriesKind::ALL {
                    let ops = series_via_operators(kind, &shape, nv, deg).unwrap();
                    let direct = series_via_tableaux(kind, &shape, nv, deg);
                    assert_eq!(ops, direct, "{} {shape}", kind.name());
                }
            }
        }
    }

    #[test]
    fn operator_route_matches_enumeration_skew() {
        for spec in ["[2,1]/[1]", "[2,2]/[1]", "[3,1]/[2]", "[2,2,1]/[1,1]"] {
            let shape = SkewShape::parse(spec).unwrap();
            let deg = shape.size() + 2;
            let nv = deg as usize;
            for kind in SeriesKind::ALL {
                let ops = series_via_operators(kind, &shape, nv, deg).unwrap();
                let direct = series_via_tableaux(kind, &shape, nv, deg);
                assert_eq!(ops, direct, "{} {spec}", kind.name());
            }
        }
    }

    #[test]
    fn gf_via_operators_validates_inputs() {
        let e = Partition::empty();
        assert!(gf_via_operators(Engine::V, ProductForm::A, &pt("[2]"), &pt("[1]"), 4, 4).is_err());
        assert!(gf_via_operators(Engine::V, ProductForm::A, &e, &pt("[1]"), 2, 4).is_err());
    }

    #[test]
    fn sign_twists_start_at_schur() {
        for n in 1..=3u32 {
            for lam in Partition::all_of_size(n) {
                let shape = SkewShape::straight(lam.clone());
                let s = schur_poly(&lam, 5, 5);
                assert_eq!(grothendieck_gf(&shape, 5, 5).homogeneous_component(n), s, "{lam}");
                assert_eq!(gtilde_gf(&shape, 5, 5).homogeneous_component(n), s, "{lam}");
            }
        }
    }

    #[test]
    fn omega_swaps_the_two_forms() {
        // swapping e for h swaps the once-per-index and unlimited products
        let mut shapes = vec![];
        for n in 1..=4u32 {
            for lam in Partition::all_of_size(n) {
                shapes.push(SkewShape::straight(lam));
            }
        }
        shapes.push(SkewShape::parse("[2,2]/[1]").unwrap());
        for shape in shapes {
            let deg = shape.size() + 2;
            let nv = deg as usize;
            let a = series_via_operators(SeriesKind::SetValued, &shape, nv, deg).unwrap();
            let b = series_via_operators(SeriesKind::WeakSetValued, &shape, nv, deg).unwrap();
            let oa = omega_schur(&expand_sym(&a, SBasis::Schur).unwrap()).unwrap();
            assert_eq!(oa.coeffs, expand_sym(&b, SBasis::Schur).unwrap().coeffs, "{shape}");
            let g = series_via_operators(SeriesKind::Rpp, &shape, nv, deg).unwrap();
            let j = series_via_operators(SeriesKind::ValuedSet, &shape, nv, deg).unwrap();
            let og = omega_schur(&expand_sym(&g, SBasis::Schur).unwrap()).unwrap();
            assert_eq!(og.coeffs, expand_sym(&j, SBasis::Schur).unwrap().coeffs, "{shape}");
        }
    }

    #[test]
    fn cauchy_expansions_window() {
        // once-per-index product carries conjugate Schur weights, unlimited
        // product straight ones
        let empty = Partition::empty();
        let deg = 4u32;
        let nv = deg as usize;
        let engines: [(Engine, Partition, Partition); 3] = [
            (Engine::U, empty.clone(), empty.clone()),
            (Engine::V, empty.clone(), empty.clone()),
            (Engine::V, pt("[1]"), pt("[1]")),
        ];
        for (engine, nu, start) in engines {
            for m in 0..=3u32 {
                for mu in Partition::all_of_size(start.size() + m) {
                    if !mu.contains(&start) {
                        continue;
                    }
                    for form in [ProductForm::A, ProductForm::B] {
                        let lhs = gf_via_operators(engine, form, &nu, &mu, nv, deg).unwrap();
                        let mut rhs = TruncPoly::zero(nv, deg);
                        for d in 0..=deg {
                            for lam in Partition::all_of_size(d) {
                                let x = PartitionVector::singleton(start.clone(), mu.size()).unwrap();
                                let applied = apply_schur(engine, &nu, &lam, &x).unwrap();
                                let c = applied.terms.coeff(&mu);
                                if c == 0 {
                                    continue;
                                }
                                let weight = match form {
                                    ProductForm::A => schur_poly(&lam.conjugate(), nv, deg),
                                    ProductForm::B => schur_poly(&lam, nv, deg),
                                };
                                rhs.add_assign_scaled(&weight, c);
                            }
                        }
                        assert_eq!(lhs, rhs, "{engine:?} {form:?} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn complete_alternates_against_elementary() {
        // sum over k of (-1)^k h_k e_(l-k) kills every positive degree l
        let empty = Partition::empty();
        for engine in [Engine::U, Engine::V] {
            for start in ["[]", "[2,1]"] {
                let x = pv(start, 6);
                for l in 1..=4u32 {
                    let mut acc = PartitionVector::zero(6);
                    for k in 0..=l {
                        let ek = apply_e_k(engine, &empty, l - k, &x).unwrap();
                        let hk = apply_h_k(engine, &empty, k, &ek).unwrap();
                        acc.add_assign_scaled(&hk, if k % 2 == 0 { 1 } else { -1 });
                    }
                    assert!(acc.is_zero(), "{engine:?} {start} degree {l}");
                }
            }
        }
    }

    #[test]
    fn rectangle_constants_goldens() {
        // unit
        let got = grassmann_constants(&Partition::empty(), &pt("[2,1]"), 2, 4, 4).unwrap();
        assert_eq!(got, BTreeMap::from([(pt("[2,1]"), 1)]));
        // one-box square in the smallest Grassmannian: all products leave
        // the rectangle
        let got = grassmann_constants(&pt("[1]"), &pt("[1]"), 1, 2, 1).unwrap();
        assert!(got.is_empty());
        // one-box square in the 2 x 2 rectangle
        let got = grassmann_constants(&pt("[1]"), &pt("[1]"), 2, 4, 4).unwrap();
        assert_eq!(
            got,
            BTreeMap::from([(pt("[2]"), 1), (pt("[1,1]"), 1), (pt("[2,1]"), -1)])
        );
        // commutativity
        let ab = grassmann_constants(&pt("[2,1]"), &pt("[1]"), 2, 4, 4).unwrap();
        let ba = grassmann_constants(&pt("[1]"), &pt("[2,1]"), 2, 4, 4).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(ab, BTreeMap::from([(pt("[2,2]"), 1)]));
        // shapes must fit in the rectangle
        assert!(grassmann_constants(&pt("[3]"), &pt("[1]"), 2, 4, 4).is_err());
        assert!(grassmann_constants(&pt("[1]"), &pt("[1]"), 2, 4, 3).is_err());
    }

    #[test]
    fn truncation_is_explicit() {
        assert!(PartitionVector::singleton(pt("[2,1]"), 2).is_err());
        // over-bound growth drops silently
        let x = pv("[1]", 2);
        assert_eq!(terms_of(&apply_u(2, &x)), vec![("[2]".into(), 1)]);
        let tight = pv("[1]", 1);
        assert!(apply_u(2, &tight).is_zero());
    }
}
