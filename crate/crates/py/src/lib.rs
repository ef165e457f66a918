//! Python bindings: the same operations the msym CLI exposes, returned as
//! native Python values. Labels use the string grammars of the core crate:
//! partitions "[2,1]", skew shapes "[3,1]/[1]", compositions "(2,1)",
//! m-permutation words "121" or "1,5,1,4", set compositions "[(1,3),2]".

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use multisym::hopf;
use multisym::operators;
use multisym::ppartitions::{mjh_descent_profile, multi_jordan_holder, LabeledPoset};
use multisym::series::{expand_sym, hall_pair, SBasis};
use multisym::shapes::{Composition, Partition, SkewShape};
use multisym::tableaux;
use multisym::verify;
use multisym::words;
use multisym::words::{MPermBig, MPermSmall, SetComposition};

fn err(e: multisym::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bad(msg: impl Into<String>) -> PyErr {
    PyValueError::new_err(msg.into())
}

/// A basis expansion: coefficients by label, with the truncation cap when the
/// full expansion is infinite (None means exact).
#[pyclass(frozen, get_all)]
struct Expansion {
    basis: String,
    cap: Option<u64>,
    coeffs: BTreeMap<String, i64>,
}

#[pymethods]
impl Expansion {
    fn __repr__(&self) -> String {
        let cap = match self.cap {
            Some(c) => c.to_string(),
            None => "None".into(),
        };
        format!("Expansion(basis={:?}, cap={cap}, terms={})", self.basis, self.coeffs.len())
    }

    fn __len__(&self) -> usize {
        self.coeffs.len()
    }

    fn coeff(&self, label: &str) -> i64 {
        self.coeffs.get(label).copied().unwrap_or(0)
    }
}

fn expansion<K: Ord + std::fmt::Display>(
    basis: impl Into<String>,
    cap: Option<u64>,
    comb: &multisym::lincomb::LinComb<K>,
) -> Expansion {
    Expansion {
        basis: basis.into(),
        cap,
        coeffs: comb.iter().map(|(k, c)| (k.to_string(), c)).collect(),
    }
}

fn from_element<K: Ord + std::fmt::Display>(e: &hopf::BasisElement<K>) -> Expansion {
    expansion(e.basis.clone(), e.cap.map(|c| c as u64), &e.coeffs)
}

/// Expand a distinguished element in a target basis. Families g, gtilde, j,
/// and s expand exactly; G, Ktilde, and J are truncated at `cap`
/// (default |label| + 3).
#[pyfunction]
#[pyo3(signature = (of, basis, label, cap = None))]
fn expand(of: &str, basis: &str, label: &str, cap: Option<u32>) -> PyResult<Expansion> {
    let sym = |tag: &str| -> PyResult<SBasis> {
        match tag {
            "s" => Ok(SBasis::Schur),
            "m" => Ok(SBasis::Monomial),
            other => Err(bad(format!("basis {other}: want s or m"))),
        }
    };
    match (of, basis) {
        ("g" | "gtilde" | "j" | "s", "s" | "m") => {
            let shape = SkewShape::parse(label).map_err(err)?;
            let deg = shape.size();
            let nv = deg.max(1) as usize;
            let poly = match of {
                "g" => tableaux::rpp_gf(&shape, nv, deg),
                "gtilde" => operators::gtilde_gf(&shape, nv, deg),
                "j" => tableaux::valued_set_gf(&shape, nv, deg),
                _ => tableaux::ssyt_gf(&shape, nv, deg),
            };
            let e = expand_sym(&poly, sym(basis)?).map_err(err)?;
            Ok(expansion(basis, None, &e.coeffs))
        }
        ("G" | "Ktilde" | "J", "s" | "m") => {
            let shape = SkewShape::parse(label).map_err(err)?;
            let cap = cap.unwrap_or(shape.size() + 3);
            let nv = cap.max(1) as usize;
            let poly = match of {
                "G" => operators::grothendieck_gf(&shape, nv, cap),
                "Ktilde" => tableaux::set_valued_gf(&shape, nv, cap),
                _ => tableaux::weak_set_valued_gf(&shape, nv, cap),
            };
            let e = expand_sym(&poly, sym(basis)?).map_err(err)?;
            Ok(expansion(basis, Some(cap as u64), &e.coeffs))
        }
        ("Ltilde", "L") => {
            let alpha = Composition::parse(label).map_err(err)?;
            let cap = cap.unwrap_or(alpha.size() + 3);
            Ok(from_element(&hopf::ltilde_in_l(&alpha, cap)))
        }
        ("Mtilde", "Ltilde") => {
            let alpha = Composition::parse(label).map_err(err)?;
            Ok(from_element(&hopf::mtilde(&alpha)))
        }
        ("Mtilde", "L") => {
            let alpha = Composition::parse(label).map_err(err)?;
            let cap = cap.unwrap_or(alpha.size() + 3);
            Ok(from_element(&hopf::mtilde_in_l(&alpha, cap)))
        }
        ("Rtilde", "F") => {
            let alpha = Composition::parse(label).map_err(err)?;
            let coeffs = hopf::rtilde_in_f(&alpha)
                .iter()
                .map(|(mono, c)| {
                    let key = if mono.is_empty() {
                        "1".to_string()
                    } else {
                        mono.iter().map(|k| format!("F{k}")).collect::<Vec<_>>().join("*")
                    };
                    (key, c)
                })
                .collect();
            Ok(Expansion { basis: "F".into(), cap: None, coeffs })
        }
        ("F", "Rtilde") => {
            let alpha = Composition::parse(label).map_err(err)?;
            Ok(expansion("Rtilde", None, &hopf::f_word_in_rtilde(alpha.parts())))
        }
        (of, basis) => Err(bad(format!("unsupported combination of={of} basis={basis}"))),
    }
}

/// Multiply two elements of Ltilde, Rtilde, mMR, MMR, or skew-g.
#[pyfunction]
#[pyo3(signature = (basis, left, right, cap = None))]
fn product(basis: &str, left: &str, right: &str, cap: Option<usize>) -> PyResult<Expansion> {
    match basis {
        "Ltilde" => {
            let l = Composition::parse(left).map_err(err)?;
            let r = Composition::parse(right).map_err(err)?;
            let cap = cap.unwrap_or((l.size() + r.size() + 3) as usize);
            Ok(from_element(&hopf::ltilde_product(&l, &r, cap)))
        }
        "Rtilde" => {
            let l = Composition::parse(left).map_err(err)?;
            let r = Composition::parse(right).map_err(err)?;
            Ok(from_element(&hopf::rtilde_product(&l, &r)))
        }
        "mMR" => {
            let w = MPermSmall::parse(left).map_err(err)?;
            let u = MPermSmall::parse(right).map_err(err)?;
            let cap = cap.unwrap_or(w.len() + u.len() + 3);
            let prod = words::mmr_product(&w, &u, cap);
            Ok(expansion("mMR", prod.cap.map(|c| c as u64), &prod.terms))
        }
        "MMR" => {
            let w = MPermBig::parse(left).map_err(err)?;
            let u = MPermBig::parse(right).map_err(err)?;
            Ok(expansion("MMR", None, &words::mmr_big_product(&w, &u)))
        }
        "g" => {
            let rho = SkewShape::parse(left).map_err(err)?;
            let tau = SkewShape::parse(right).map_err(err)?;
            Ok(from_element(&hopf::g_ribbon_product(&rho, &tau).map_err(err)?))
        }
        other => Err(bad(format!("basis {other}: want Ltilde, Rtilde, mMR, MMR, or g"))),
    }
}

/// Coproduct in Ltilde, mMR, or MMR; tensor factors are joined by "⊗".
#[pyfunction]
fn coproduct(basis: &str, label: &str) -> PyResult<Expansion> {
    let coeffs: BTreeMap<String, i64> = match basis {
        "Ltilde" => {
            let alpha = Composition::parse(label).map_err(err)?;
            hopf::ltilde_coproduct(&alpha)
                .iter()
                .map(|((l, r), c)| (format!("{l}⊗{r}"), c))
                .collect()
        }
        "mMR" => {
            let w = MPermSmall::parse(label).map_err(err)?;
            words::mmr_coproduct(&w).iter().map(|((l, r), c)| (format!("{l}⊗{r}"), c)).collect()
        }
        "MMR" => {
            let w = MPermBig::parse(label).map_err(err)?;
            words::mmr_big_coproduct(&w)
                .iter()
                .map(|((l, r), c)| (format!("{l}⊗{r}"), c))
                .collect()
        }
        other => return Err(bad(format!("basis {other}: want Ltilde, mMR, or MMR"))),
    };
    Ok(Expansion { basis: format!("{basis}⊗{basis}"), cap: None, coeffs })
}

/// Raise a fundamental quasisymmetric function by i degrees.
#[pyfunction]
fn pump(label: &str, i: u32) -> PyResult<Expansion> {
    let alpha = Composition::parse(label).map_err(err)?;
    Ok(expansion("L", None, &hopf::pump_comp(&alpha, i)))
}

/// Duality pairings: (Rtilde, Ltilde), (mMR, MMR), (g, G), (gtilde, Ktilde),
/// or (s, s).
#[pyfunction]
#[pyo3(signature = (left_basis, right_basis, left, right, cap = None))]
fn pair(left_basis: &str, right_basis: &str, left: &str, right: &str, cap: Option<u32>) -> PyResult<i64> {
    match (left_basis, right_basis) {
        ("Rtilde", "Ltilde") => {
            let l = Composition::parse(left).map_err(err)?;
            let r = Composition::parse(right).map_err(err)?;
            Ok(hopf::rtilde_ltilde_pairing(&l, &r))
        }
        ("mMR", "MMR") => {
            let w = MPermSmall::parse(left).map_err(err)?;
            let v = MPermBig::parse(right).map_err(err)?;
            Ok(i64::from(words::invert_small(&w) == v))
        }
        ("g", "G") | ("gtilde", "Ktilde") | ("s", "s") => {
            let lshape = SkewShape::parse(left).map_err(err)?;
            let rshape = SkewShape::parse(right).map_err(err)?;
            let cap = cap.unwrap_or(lshape.size().max(rshape.size()) + 3);
            let nv = cap.max(1) as usize;
            let (lpoly, rpoly) = match left_basis {
                "g" => (
                    tableaux::rpp_gf(&lshape, nv, cap),
                    operators::grothendieck_gf(&rshape, nv, cap),
                ),
                "gtilde" => (
                    operators::gtilde_gf(&lshape, nv, cap),
                    tableaux::set_valued_gf(&rshape, nv, cap),
                ),
                _ => (tableaux::ssyt_gf(&lshape, nv, cap), tableaux::ssyt_gf(&rshape, nv, cap)),
            };
            let mut lexp = expand_sym(&lpoly, SBasis::Schur).map_err(err)?;
            lexp.cap = None;
            let mut rexp = expand_sym(&rpoly, SBasis::Schur).map_err(err)?;
            if left_basis == "s" {
                rexp.cap = None;
            }
            hall_pair(&lexp, &rexp).map_err(err)
        }
        (l, r) => Err(bad(format!("unsupported pairing ({l}, {r})"))),
    }
}

/// List a combinatorial family as display strings. Kinds: ssyt, rpp,
/// transpose-ssyt, elegant, set-valued, weak-set-valued, valued-set,
/// mperms, Mperms, set-compositions.
#[pyfunction]
#[pyo3(signature = (kind, shape = None, max_entry = None, max_total = None, alphabet = None, max_len = None, n = None))]
fn enumerate_family(
    kind: &str,
    shape: Option<&str>,
    max_entry: Option<u32>,
    max_total: Option<usize>,
    alphabet: Option<u32>,
    max_len: Option<usize>,
    n: Option<usize>,
) -> PyResult<Vec<String>> {
    let want_shape = || -> PyResult<SkewShape> {
        let s = shape.ok_or_else(|| bad(format!("kind {kind} requires shape")))?;
        SkewShape::parse(s).map_err(err)
    };
    let want_entry = || max_entry.ok_or_else(|| bad(format!("kind {kind} requires max_entry")));
    Ok(match kind {
        "ssyt" => {
            tableaux::enumerate_ssyt(&want_shape()?, want_entry()?).iter().map(|t| t.to_string()).collect()
        }
        "rpp" => {
            tableaux::enumerate_rpp(&want_shape()?, want_entry()?).iter().map(|t| t.to_string()).collect()
        }
        "transpose-ssyt" => tableaux::enumerate_transpose_ssyt(&want_shape()?, want_entry()?)
            .iter()
            .map(|t| t.to_string())
            .collect(),
        "elegant" => tableaux::enumerate_elegant(&want_shape()?).iter().map(|t| t.to_string()).collect(),
        "set-valued" | "weak-set-valued" => {
            let sh = want_shape()?;
            let total = max_total.unwrap_or(sh.size() as usize + 3);
            let all = if kind == "set-valued" {
                tableaux::enumerate_set_valued(&sh, want_entry()?, total)
            } else {
                tableaux::enumerate_weak_set_valued(&sh, want_entry()?, total)
            };
            all.iter().map(|t| t.to_string()).collect()
        }
        "valued-set" => tableaux::enumerate_valued_set(&want_shape()?, want_entry()?)
            .iter()
            .map(|t| format!("{} groups={:?}", t.filling, t.groups))
            .collect(),
        "mperms" => {
            let a = alphabet.ok_or_else(|| bad("kind mperms requires alphabet"))?;
            let l = max_len.ok_or_else(|| bad("kind mperms requires max_len"))?;
            words::enumerate_mperms_small(a, l).iter().map(|w| w.to_string()).collect()
        }
        "Mperms" => {
            let n = n.ok_or_else(|| bad("kind Mperms requires n"))?;
            words::enumerate_mperms_big(n).iter().map(|w| w.to_string()).collect()
        }
        "set-compositions" => {
            let n = n.ok_or_else(|| bad("kind set-compositions requires n"))?;
            let ground = (1..=n as u32).collect();
            words::enumerate_set_compositions(&ground).iter().map(|sc| sc.to_string()).collect()
        }
        other => return Err(bad(format!("unknown kind {other}"))),
    })
}

fn poset_from(shape: Option<&str>, poset_json: Option<&str>) -> PyResult<LabeledPoset> {
    match (shape, poset_json) {
        (Some(_), Some(_)) => Err(bad("give shape or poset, not both")),
        (None, None) => Err(bad("a shape or a poset is required")),
        (Some(s), None) => Ok(LabeledPoset::from_skew(&SkewShape::parse(s).map_err(err)?).0),
        (None, Some(p)) => {
            let v: serde_json::Value =
                serde_json::from_str(p).map_err(|e| bad(format!("poset is not JSON: {e}")))?;
            LabeledPoset::from_json(&v).map_err(err)
        }
    }
}

/// Multi-Jordan-Holder set of a skew-shape cell poset (or an explicit labeled
/// poset as JSON) at ambient size `length`.
#[pyfunction]
#[pyo3(signature = (length, shape = None, poset = None))]
fn mjh(length: usize, shape: Option<&str>, poset: Option<&str>) -> PyResult<Vec<String>> {
    let p = poset_from(shape, poset)?;
    Ok(multi_jordan_holder(&p, length).map_err(err)?.iter().map(|w| w.to_string()).collect())
}

/// Descent-count profile of the multi-Jordan-Holder set.
#[pyfunction]
#[pyo3(signature = (length, shape = None, poset = None))]
fn mjh_profile(length: usize, shape: Option<&str>, poset: Option<&str>) -> PyResult<Vec<u64>> {
    let p = poset_from(shape, poset)?;
    mjh_descent_profile(&p, length).map_err(err)
}

/// Generating-function window of one of the six series, by the operator or
/// tableau route. Returns monomial exponent vector -> coefficient.
#[pyfunction]
#[pyo3(signature = (series, shape, nvars = None, maxdeg = None, route = "operators"))]
fn oracle(
    series: &str,
    shape: &str,
    nvars: Option<usize>,
    maxdeg: Option<u32>,
    route: &str,
) -> PyResult<BTreeMap<String, i64>> {
    let shape = SkewShape::parse(shape).map_err(err)?;
    let maxdeg = maxdeg.unwrap_or(shape.size() + 3);
    let nvars = nvars.unwrap_or(maxdeg.max(1) as usize);
    let (kind, twist) = match series {
        "G" => (operators::SeriesKind::SetValued, true),
        "gtilde" => (operators::SeriesKind::Rpp, true),
        other => (operators::SeriesKind::parse(other).map_err(err)?, false),
    };
    let base = match route {
        "operators" => operators::series_via_operators(kind, &shape, nvars, maxdeg).map_err(err)?,
        "tableaux" => operators::series_via_tableaux(kind, &shape, nvars, maxdeg),
        other => return Err(bad(format!("route {other}: want operators or tableaux"))),
    };
    let poly = if twist {
        let sign = if shape.size() % 2 == 0 { 1 } else { -1 };
        base.negate_vars().scaled(sign)
    } else {
        base
    };
    Ok(poly
        .terms()
        .map(|(expo, c)| {
            let key = format!(
                "[{}]",
                expo.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
            );
            (key, c)
        })
        .collect())
}

/// Antipode of an M-permutation.
#[pyfunction]
fn antipode(label: &str) -> PyResult<Expansion> {
    let w = MPermBig::parse(label).map_err(err)?;
    Ok(expansion("MMR", None, &words::antipode_big(&w)))
}

/// Factor a word (basis "mMR") or an M-permutation (basis "MMR") into
/// irreducibles.
#[pyfunction]
fn factor(basis: &str, label: &str) -> PyResult<Vec<String>> {
    Ok(match basis {
        "mMR" => words::factor_irreducible_small(&MPermSmall::parse(label).map_err(err)?)
            .iter()
            .map(|w| w.to_string())
            .collect(),
        "MMR" => words::factor_irreducible_big(&MPermBig::parse(label).map_err(err)?)
            .iter()
            .map(|w| w.to_string())
            .collect(),
        other => return Err(bad(format!("basis {other}: want mMR or MMR"))),
    })
}

/// Weak-order comparison of two M-permutations, searching witness chains in
/// ambient sizes up to `bound`.
#[pyfunction]
#[pyo3(signature = (left, right, bound = None))]
fn order_leq(left: &str, right: &str, bound: Option<usize>) -> PyResult<bool> {
    let w = MPermBig::parse(left).map_err(err)?;
    let v = MPermBig::parse(right).map_err(err)?;
    let bound = bound.unwrap_or(2 * w.n().max(v.n()) as usize);
    words::weak_order_leq(&w, &v, bound).map_err(err)
}

/// Standardize a multiword by order pattern.
#[pyfunction]
fn standardize_word(word: &str) -> PyResult<String> {
    Ok(words::standardize_multiword(&words::parse_word(word).map_err(err)?).to_string())
}

/// Standardize a set composition to an M-permutation.
#[pyfunction]
fn standardize_setcomp(label: &str) -> PyResult<String> {
    let sc = SetComposition::parse(label).map_err(err)?;
    Ok(words::standardize_setcomp(&sc).to_string())
}

/// Inverse of an m-permutation word, as an M-permutation.
#[pyfunction]
fn invert_word(word: &str) -> PyResult<String> {
    Ok(words::invert_small(&MPermSmall::parse(word).map_err(err)?).to_string())
}

/// Inverse of an M-permutation, as an m-permutation word.
#[pyfunction]
fn invert_setcomp(label: &str) -> PyResult<String> {
    Ok(words::invert_big(&MPermBig::parse(label).map_err(err)?).to_string())
}

/// Column-adding operator u_i on a partition, truncated at `bound` cells.
#[pyfunction]
fn apply_u(i: u32, label: &str, bound: u32) -> PyResult<BTreeMap<String, i64>> {
    let lam = Partition::parse(label).map_err(err)?;
    let x = operators::PartitionVector::singleton(lam, bound).map_err(err)?;
    Ok(operators::apply_u(i, &x).terms.iter().map(|(k, c)| (k.to_string(), c)).collect())
}

/// Corner-toggling operator v_i over the floor `nu`, truncated at `bound`.
#[pyfunction]
fn apply_v(i: i64, label: &str, nu: &str, bound: u32) -> PyResult<BTreeMap<String, i64>> {
    let lam = Partition::parse(label).map_err(err)?;
    let floor = Partition::parse(nu).map_err(err)?;
    let x = operators::PartitionVector::singleton(lam, bound).map_err(err)?;
    let out = operators::apply_v(i, &x, &floor).map_err(err)?;
    Ok(out.terms.iter().map(|(k, c)| (k.to_string(), c)).collect())
}

/// Structure constants of the Grothendieck basis on the Grassmannian
/// quotient: coefficients of G_nu in G_lambda G_mu for nu inside the
/// (n-k) x k rectangle.
#[pyfunction]
#[pyo3(signature = (lambda_, mu, k, n, maxdeg = None))]
fn grassmann(lambda_: &str, mu: &str, k: u32, n: u32, maxdeg: Option<u32>) -> PyResult<BTreeMap<String, i64>> {
    let lam = Partition::parse(lambda_).map_err(err)?;
    let mu = Partition::parse(mu).map_err(err)?;
    if n < k {
        return Err(bad("need n >= k"));
    }
    let maxdeg = maxdeg.unwrap_or(k * (n - k));
    let out = operators::grassmann_constants(&lam, &mu, k, n, maxdeg).map_err(err)?;
    Ok(out.iter().map(|(nu, c)| (nu.to_string(), *c)).collect())
}

/// Run the invariant battery. Returns (module, property, passed, millis,
/// detail) per check.
#[pyfunction]
#[pyo3(signature = (suite = "all", size = "small", seed = 17))]
fn run_checks(suite: &str, size: &str, seed: u64) -> PyResult<Vec<(String, String, bool, u64, String)>> {
    let size = verify::SizeClass::parse(size).map_err(err)?;
    let outcomes = verify::run_suite(suite, size, seed).map_err(err)?;
    Ok(outcomes
        .into_iter()
        .map(|o| (o.module.to_string(), o.property.to_string(), o.passed, o.millis as u64, o.detail))
        .collect())
}

#[pymodule]
fn multisym_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Expansion>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(coproduct, m)?)?;
    m.add_function(wrap_pyfunction!(pump, m)?)?;
    m.add_function(wrap_pyfunction!(pair, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_family, m)?)?;
    m.add_function(wrap_pyfunction!(mjh, m)?)?;
    m.add_function(wrap_pyfunction!(mjh_profile, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(antipode, m)?)?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(order_leq, m)?)?;
    m.add_function(wrap_pyfunction!(standardize_word, m)?)?;
    m.add_function(wrap_pyfunction!(standardize_setcomp, m)?)?;
    m.add_function(wrap_pyfunction!(invert_word, m)?)?;
    m.add_function(wrap_pyfunction!(invert_setcomp, m)?)?;
    m.add_function(wrap_pyfunction!(apply_u, m)?)?;
    m.add_function(wrap_pyfunction!(apply_v, m)?)?;
    m.add_function(wrap_pyfunction!(grassmann, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    Ok(())
}
