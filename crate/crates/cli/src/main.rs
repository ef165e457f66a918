//! msym: exact computations with multi-fundamental quasisymmetric functions,
//! multi-Malvenuto-Reutenauer algebras, and the K-theoretic symmetric
//! functions g, G, J, j, and K-tilde.
//!
//! Every verb prints deterministic JSON (the verify verb prints a plain
//! report). Truncated results always carry their cap in the output. Exit
//! codes: 0 success, 1 domain errors (bad labels, unsatisfiable bounds,
//! failed verification), 2 usage errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use multisym::hopf::{
    f_word_in_rtilde, g_ribbon_product, ltilde_coproduct, ltilde_in_l, ltilde_product, mtilde,
    mtilde_in_l, pump_comp, rtilde_in_f, rtilde_ltilde_pairing, rtilde_product, BasisElement,
};
use multisym::operators::{
    grothendieck_gf, gtilde_gf, series_via_operators, series_via_tableaux, SeriesKind,
};
use multisym::ppartitions::{mjh_descent_profile, multi_jordan_holder, LabeledPoset};
use multisym::series::{expand_sym, hall_pair, SBasis};
use multisym::shapes::{Composition, SkewShape};
use multisym::tableaux::{
    ssyt_gf,
    enumerate_elegant, enumerate_rpp, enumerate_set_valued, enumerate_ssyt,
    enumerate_transpose_ssyt, enumerate_valued_set, enumerate_weak_set_valued,
};
use multisym::verify::{render_report, run_suite, SizeClass};
use multisym::words::{
    antipode_big, enumerate_mperms_big, enumerate_mperms_small, enumerate_set_compositions,
    factor_irreducible_big, factor_irreducible_small, invert_small, mmr_big_coproduct,
    mmr_big_product, mmr_coproduct, mmr_product, weak_order_leq, MPermBig, MPermSmall,
};

#[derive(Parser)]
#[command(name = "msym", version, about = "Exact K-theoretic combinatorics: expansions, products, pairings, oracles")]
struct Cli {
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Expand a distinguished element in a target basis.
    Expand(ExpandArgs),
    /// Multiply two basis elements.
    Product(ProductArgs),
    /// Coproduct of a basis element.
    Coproduct(CoproductArgs),
    /// Raise the degree of a fundamental by i, Bernstein-style.
    Pump(PumpArgs),
    /// Evaluate a duality pairing.
    Pair(PairArgs),
    /// List tableaux, m-permutations, or set compositions.
    Enumerate(EnumerateArgs),
    /// Multi-Jordan-Holder set of a labeled poset or skew shape.
    Mjh(MjhArgs),
    /// Generating-function window via the operator or tableau route.
    Oracle(OracleArgs),
    /// Antipode of a multi-permutation.
    Antipode(AntipodeArgs),
    /// Factor a word or multi-permutation into irreducibles.
    Factor(FactorArgs),
    /// Compare two multi-permutations in the weak order.
    Order(OrderArgs),
    /// Run the invariant battery and print a pass report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ExpandArgs {
    /// Target basis: s, m, L, Ltilde, Rtilde, or F.
    #[arg(long)]
    basis: String,
    /// Source family: g, gtilde, j, s, G, Ktilde, J, Ltilde, Mtilde, Rtilde, or F.
    #[arg(long)]
    of: String,
    /// Label in the source family's grammar (shape, composition, or word).
    #[arg(long)]
    label: String,
    /// Degree cap for expansions with infinitely many terms; default |label| + 3.
    #[arg(long)]
    cap: Option<u32>,
}

#[derive(Args)]
struct ProductArgs {
    /// Basis to multiply in: Ltilde, Rtilde, mMR, MMR, or g.
    #[arg(long)]
    basis: String,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    /// Size cap on output labels where the product is infinite; default |left| + |right| + 3.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct CoproductArgs {
    /// Basis: Ltilde, mMR, or MMR.
    #[arg(long)]
    basis: String,
    #[arg(long)]
    label: String,
}

#[derive(Args)]
struct PumpArgs {
    /// Composition label of the fundamental to pump.
    #[arg(long)]
    label: String,
    /// Number of degrees to add.
    #[arg(long)]
    i: u32,
}

#[derive(Args)]
struct PairArgs {
    /// Left basis: Rtilde, g, gtilde, s, or mMR.
    #[arg(long)]
    left_basis: String,
    /// Right basis: Ltilde, G, Ktilde, s, or MMR respectively.
    #[arg(long)]
    right_basis: String,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    /// Window cap for Hall pairings; default max(|left|, |right|) + 3.
    #[arg(long)]
    cap: Option<u32>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// One of: ssyt, rpp, transpose-ssyt, elegant, set-valued, weak-set-valued,
    /// valued-set, mperms, Mperms, set-compositions.
    #[arg(long)]
    kind: String,
    /// Skew shape for the tableau kinds.
    #[arg(long)]
    shape: Option<String>,
    /// Largest entry allowed (tableau kinds except elegant).
    #[arg(long)]
    max_entry: Option<u32>,
    /// Cap on total entries for set-valued kinds; default |shape| + 3.
    #[arg(long)]
    max_total: Option<usize>,
    /// Alphabet size for mperms (letters 1..=alphabet).
    #[arg(long)]
    alphabet: Option<u32>,
    /// Length cap for mperms.
    #[arg(long)]
    max_len: Option<usize>,
    /// Ground set size for Mperms and set-compositions.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct MjhArgs {
    /// Skew shape whose cell poset to use.
    #[arg(long)]
    shape: Option<String>,
    /// Labeled poset as JSON {"n":..,"covers":[[s,t],..],"theta":[..]}.
    #[arg(long)]
    poset: Option<String>,
    /// Ambient size N of the multi-permutations.
    #[arg(long)]
    length: usize,
    /// Print the descent-count profile instead of the words.
    #[arg(long)]
    profile: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Series: set-valued, weak-set-valued, rpp, valued-set, G, or gtilde.
    #[arg(long)]
    series: String,
    #[arg(long)]
    shape: String,
    /// Number of variables; default maxdeg.
    #[arg(long)]
    nvars: Option<usize>,
    /// Truncation degree; default |shape| + 3.
    #[arg(long)]
    maxdeg: Option<u32>,
    /// operators (Fomin-Greene engines) or tableaux (direct enumeration).
    #[arg(long, default_value = "operators")]
    route: String,
}

#[derive(Args)]
struct AntipodeArgs {
    /// Multi-permutation of a finite set, e.g. "[(1,3),2]".
    #[arg(long)]
    label: String,
}

#[derive(Args)]
struct FactorArgs {
    /// mMR (words) or MMR (set compositions).
    #[arg(long)]
    basis: String,
    #[arg(long)]
    label: String,
}

#[derive(Args)]
struct OrderArgs {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    /// Largest ambient n searched for a witness chain; default 2·max(n_left, n_right).
    #[arg(long)]
    bound: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or a module name (shapes, words, tableaux, series, ppartitions, hopf, operators).
    #[arg(long, default_value = "all")]
    suite: String,
    /// small (seconds) or medium (the full contract sizes).
    #[arg(long, default_value = "small")]
    size: String,
    /// Seed for the randomized properties.
    #[arg(long, default_value_t = 17)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<multisym::Error> for Failure {
    fn from(e: multisym::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, ok) = match run(&cli.verb) {
        Ok(pair) => pair,
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            return ExitCode::from(2);
        }
    };
    match &cli.output {
        None => println!("{text}"),
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(verb: &Verb) -> CliResult<(String, bool)> {
    let value = match verb {
        Verb::Expand(a) => run_expand(a)?,
        Verb::Product(a) => run_product(a)?,
        Verb::Coproduct(a) => run_coproduct(a)?,
        Verb::Pump(a) => run_pump(a)?,
        Verb::Pair(a) => run_pair(a)?,
        Verb::Enumerate(a) => run_enumerate(a)?,
        Verb::Mjh(a) => run_mjh(a)?,
        Verb::Oracle(a) => run_oracle(a)?,
        Verb::Antipode(a) => run_antipode(a)?,
        Verb::Factor(a) => run_factor(a)?,
        Verb::Order(a) => run_order(a)?,
        Verb::Verify(a) => return run_verify(a),
    };
    Ok((value.to_string(), true))
}

// ===== expand =====

fn sym_basis(tag: &str) -> CliResult<SBasis> {
    match tag {
        "s" => Ok(SBasis::Schur),
        "m" => Ok(SBasis::Monomial),
        other => Err(usage(format!("--basis {other} is not a symmetric basis (want s or m)"))),
    }
}

fn run_expand(a: &ExpandArgs) -> CliResult<Value> {
    match (a.of.as_str(), a.basis.as_str()) {
        // Finite symmetric families: the window at degree |shape| is complete,
        // so the expansion is exact and carries no cap.
        ("g" | "gtilde" | "j" | "s", "s" | "m") => {
            let shape = SkewShape::parse(&a.label)?;
            let deg = shape.size();
            let nvars = deg.max(1) as usize;
            let poly = match a.of.as_str() {
                "g" => series_via_tableaux(SeriesKind::Rpp, &shape, nvars, deg),
                "gtilde" => gtilde_gf(&shape, nvars, deg),
                "j" => series_via_tableaux(SeriesKind::ValuedSet, &shape, nvars, deg),
                _ => ssyt_gf(&shape, nvars, deg),
            };
            let mut exp = expand_sym(&poly, sym_basis(&a.basis)?)?;
            exp.cap = None;
            Ok(exp.to_json())
        }
        // Infinite symmetric families: expanded through an explicit cap.
        ("G" | "Ktilde" | "J", "s" | "m") => {
            let shape = SkewShape::parse(&a.label)?;
            let cap = a.cap.unwrap_or(shape.size() + 3);
            let nvars = cap.max(1) as usize;
            let poly = match a.of.as_str() {
                "G" => grothendieck_gf(&shape, nvars, cap),
                "Ktilde" => series_via_tableaux(SeriesKind::SetValued, &shape, nvars, cap),
                _ => series_via_tableaux(SeriesKind::WeakSetValued, &shape, nvars, cap),
            };
            Ok(expand_sym(&poly, sym_basis(&a.basis)?)?.to_json())
        }
        ("Ltilde", "L") => {
            let alpha = Composition::parse(&a.label)?;
            let cap = a.cap.unwrap_or(alpha.size() + 3);
            Ok(ltilde_in_l(&alpha, cap).to_json())
        }
        ("Mtilde", "Ltilde") => {
            let alpha = Composition::parse(&a.label)?;
            Ok(mtilde(&alpha).to_json())
        }
        ("Mtilde", "L") => {
            let alpha = Composition::parse(&a.label)?;
            let cap = a.cap.unwrap_or(alpha.size() + 3);
            Ok(mtilde_in_l(&alpha, cap).to_json())
        }
        ("Rtilde", "F") => {
            let alpha = Composition::parse(&a.label)?;
            let coeffs: BTreeMap<String, i64> = rtilde_in_f(&alpha)
                .iter()
                .map(|(mono, c)| (f_monomial(mono), c))
                .collect();
            Ok(json!({ "basis": "F", "cap": null, "coeffs": coeffs }))
        }
        ("F", "Rtilde") => {
            let alpha = Composition::parse(&a.label)?;
            let comb = f_word_in_rtilde(alpha.parts());
            Ok(BasisElement::new("Rtilde", None, comb).to_json())
        }
        (of, basis) => Err(usage(format!("unsupported combination --of {of} --basis {basis}"))),
    }
}

fn f_monomial(indices: &[u32]) -> String {
    if indices.is_empty() {
        "1".to_string()
    } else {
        indices.iter().map(|k| format!("F{k}")).collect::<Vec<_>>().join("*")
    }
}

// ===== product =====

fn run_product(a: &ProductArgs) -> CliResult<Value> {
    match a.basis.as_str() {
        "Ltilde" => {
            let l = Composition::parse(&a.left)?;
            let r = Composition::parse(&a.right)?;
            let cap = a.cap.unwrap_or((l.size() + r.size() + 3) as usize);
            Ok(ltilde_product(&l, &r, cap).to_json())
        }
        "Rtilde" => {
            let l = Composition::parse(&a.left)?;
            let r = Composition::parse(&a.right)?;
            Ok(rtilde_product(&l, &r).to_json())
        }
        "mMR" => {
            let w = MPermSmall::parse(&a.left)?;
            let u = MPermSmall::parse(&a.right)?;
            let cap = a.cap.unwrap_or(w.len() + u.len() + 3);
            Ok(mmr_product(&w, &u, cap).to_json())
        }
        "MMR" => {
            let w = MPermBig::parse(&a.left)?;
            let u = MPermBig::parse(&a.right)?;
            let terms: BTreeMap<String, i64> = mmr_big_product(&w, &u)
                .iter()
                .map(|(k, c)| (k.to_string(), c))
                .collect();
            Ok(json!({ "cap": null, "terms": terms }))
        }
        "g" => {
            let rho = SkewShape::parse(&a.left)?;
            let tau = SkewShape::parse(&a.right)?;
            Ok(g_ribbon_product(&rho, &tau)?.to_json())
        }
        other => Err(usage(format!("--basis {other}: want Ltilde, Rtilde, mMR, MMR, or g"))),
    }
}

// ===== coproduct =====

fn run_coproduct(a: &CoproductArgs) -> CliResult<Value> {
    let (basis, coeffs): (&str, BTreeMap<String, i64>) = match a.basis.as_str() {
        "Ltilde" => {
            let alpha = Composition::parse(&a.label)?;
            let terms = ltilde_coproduct(&alpha);
            ("Ltilde", terms.iter().map(|((l, r), c)| (format!("{l}⊗{r}"), c)).collect())
        }
        "mMR" => {
            let w = MPermSmall::parse(&a.label)?;
            let terms = mmr_coproduct(&w);
            ("mMR", terms.iter().map(|((l, r), c)| (format!("{l}⊗{r}"), c)).collect())
        }
        "MMR" => {
            let w = MPermBig::parse(&a.label)?;
            let terms = mmr_big_coproduct(&w);
            ("MMR", terms.iter().map(|((l, r), c)| (format!("{l}⊗{r}"), c)).collect())
        }
        other => return Err(usage(format!("--basis {other}: want Ltilde, mMR, or MMR"))),
    };
    Ok(json!({ "basis": format!("{basis}⊗{basis}"), "cap": null, "coeffs": coeffs }))
}

// ===== pump =====

fn run_pump(a: &PumpArgs) -> CliResult<Value> {
    let alpha = Composition::parse(&a.label)?;
    Ok(BasisElement::new("L", None, pump_comp(&alpha, a.i)).to_json())
}

// ===== pair =====

fn run_pair(a: &PairArgs) -> CliResult<Value> {
    match (a.left_basis.as_str(), a.right_basis.as_str()) {
        ("Rtilde", "Ltilde") => {
            let l = Composition::parse(&a.left)?;
            let r = Composition::parse(&a.right)?;
            let v = rtilde_ltilde_pairing(&l, &r);
            Ok(json!({ "value": v, "cap": null }))
        }
        ("mMR", "MMR") => {
            let w = MPermSmall::parse(&a.left)?;
            let v = MPermBig::parse(&a.right)?;
            let val = i64::from(invert_small(&w) == v);
            Ok(json!({ "value": val, "cap": null }))
        }
        ("g", "G") | ("gtilde", "Ktilde") | ("s", "s") => {
            let lshape = SkewShape::parse(&a.left)?;
            let rshape = SkewShape::parse(&a.right)?;
            let cap = a.cap.unwrap_or(lshape.size().max(rshape.size()) + 3);
            let nvars = cap.max(1) as usize;
            let (lpoly, rpoly) = match a.left_basis.as_str() {
                "g" => (
                    series_via_tableaux(SeriesKind::Rpp, &lshape, nvars, cap),
                    grothendieck_gf(&rshape, nvars, cap),
                ),
                "gtilde" => (
                    gtilde_gf(&lshape, nvars, cap),
                    series_via_tableaux(SeriesKind::SetValued, &rshape, nvars, cap),
                ),
                _ => (
                    ssyt_gf(&lshape, nvars, cap),
                    ssyt_gf(&rshape, nvars, cap),
                ),
            };
            // The left families are polynomials of degree <= |shape| <= cap,
            // so their windows are complete and the expansion is exact.
            let mut lexp = expand_sym(&lpoly, SBasis::Schur)?;
            lexp.cap = None;
            let mut rexp = expand_sym(&rpoly, SBasis::Schur)?;
            if a.left_basis == "s" {
                rexp.cap = None;
            }
            let v = hall_pair(&lexp, &rexp)?;
            Ok(json!({ "value": v, "cap": cap }))
        }
        (l, r) => Err(usage(format!(
            "unsupported pairing --left-basis {l} --right-basis {r}"
        ))),
    }
}

// ===== enumerate =====

fn run_enumerate(a: &EnumerateArgs) -> CliResult<Value> {
    let kind = a.kind.as_str();
    let shape = |a: &EnumerateArgs| -> CliResult<SkewShape> {
        let s = a
            .shape
            .as_ref()
            .ok_or_else(|| usage(format!("--kind {kind} requires --shape")))?;
        Ok(SkewShape::parse(s)?)
    };
    let max_entry = |a: &EnumerateArgs| -> CliResult<u32> {
        a.max_entry
            .ok_or_else(|| usage(format!("--kind {kind} requires --max-entry")))
    };
    match kind {
        "ssyt" | "rpp" | "transpose-ssyt" => {
            let sh = shape(a)?;
            let top = max_entry(a)?;
            let items: Vec<String> = match kind {
                "ssyt" => enumerate_ssyt(&sh, top),
                "rpp" => enumerate_rpp(&sh, top),
                _ => enumerate_transpose_ssyt(&sh, top),
            }
            .iter()
            .map(|t| t.to_string())
            .collect();
            Ok(json!({
                "kind": kind, "shape": sh.to_string(), "max_entry": top,
                "count": items.len(), "items": items,
            }))
        }
        "elegant" => {
            let sh = shape(a)?;
            let items: Vec<String> = enumerate_elegant(&sh).iter().map(|t| t.to_string()).collect();
            Ok(json!({
                "kind": kind, "shape": sh.to_string(),
                "count": items.len(), "items": items,
            }))
        }
        "set-valued" | "weak-set-valued" => {
            let sh = shape(a)?;
            let top = max_entry(a)?;
            let total = a.max_total.unwrap_or(sh.size() as usize + 3);
            let items: Vec<String> = if kind == "set-valued" {
                enumerate_set_valued(&sh, top, total)
            } else {
                enumerate_weak_set_valued(&sh, top, total)
            }
            .iter()
            .map(|t| t.to_string())
            .collect();
            Ok(json!({
                "kind": kind, "shape": sh.to_string(), "max_entry": top,
                "max_total": total, "count": items.len(), "items": items,
            }))
        }
        "valued-set" => {
            let sh = shape(a)?;
            let top = max_entry(a)?;
            let items: Vec<Value> = enumerate_valued_set(&sh, top)
                .iter()
                .map(|t| {
                    json!({
                        "filling": t.filling.to_string(),
                        "groups": t.groups.iter()
                            .map(|g| g.iter().map(|&(r, c)| vec![r, c]).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(json!({
                "kind": kind, "shape": sh.to_string(), "max_entry": top,
                "count": items.len(), "items": items,
            }))
        }
        "mperms" => {
            let alphabet = a
                .alphabet
                .ok_or_else(|| usage("--kind mperms requires --alphabet"))?;
            let max_len = a
                .max_len
                .ok_or_else(|| usage("--kind mperms requires --max-len"))?;
            let items: Vec<String> = enumerate_mperms_small(alphabet, max_len)
                .iter()
                .map(|w| w.to_string())
                .collect();
            Ok(json!({
                "kind": kind, "alphabet": alphabet, "max_len": max_len,
                "count": items.len(), "items": items,
            }))
        }
        "Mperms" => {
            let n = a.n.ok_or_else(|| usage("--kind Mperms requires --n"))?;
            let items: Vec<String> = enumerate_mperms_big(n).iter().map(|w| w.to_string()).collect();
            Ok(json!({ "kind": kind, "n": n, "count": items.len(), "items": items }))
        }
        "set-compositions" => {
            let n = a.n.ok_or_else(|| usage("--kind set-compositions requires --n"))?;
            let ground = (1..=n as u32).collect();
            let items: Vec<String> = enumerate_set_compositions(&ground)
                .iter()
                .map(|sc| sc.to_string())
                .collect();
            Ok(json!({ "kind": kind, "n": n, "count": items.len(), "items": items }))
        }
        other => Err(usage(format!("unknown --kind {other}"))),
    }
}

// ===== mjh =====

fn run_mjh(a: &MjhArgs) -> CliResult<Value> {
    let poset = match (&a.shape, &a.poset) {
        (Some(_), Some(_)) => return Err(usage("give --shape or --poset, not both")),
        (None, None) => return Err(usage("mjh requires --shape or --poset")),
        (Some(s), None) => LabeledPoset::from_skew(&SkewShape::parse(s)?).0,
        (None, Some(p)) => {
            let v: Value = serde_json::from_str(p)
                .map_err(|e| Failure::Domain(format!("--poset is not JSON: {e}")))?;
            LabeledPoset::from_json(&v)?
        }
    };
    if a.profile {
        let profile = mjh_descent_profile(&poset, a.length)?;
        Ok(json!(profile))
    } else {
        let words: Vec<String> = multi_jordan_holder(&poset, a.length)?
            .iter()
            .map(|w| w.to_string())
            .collect();
        Ok(json!(words))
    }
}

// ===== oracle =====

fn run_oracle(a: &OracleArgs) -> CliResult<Value> {
    let shape = SkewShape::parse(&a.shape)?;
    let maxdeg = a.maxdeg.unwrap_or(shape.size() + 3);
    let nvars = a.nvars.unwrap_or(maxdeg.max(1) as usize);
    let (kind, twist) = match a.series.as_str() {
        "G" => (SeriesKind::SetValued, true),
        "gtilde" => (SeriesKind::Rpp, true),
        other => (
            SeriesKind::parse(other).map_err(|_| {
                usage(format!(
                    "--series {other}: want set-valued, weak-set-valued, rpp, valued-set, G, or gtilde"
                ))
            })?,
            false,
        ),
    };
    let base = match a.route.as_str() {
        "operators" => series_via_operators(kind, &shape, nvars, maxdeg)?,
        "tableaux" => series_via_tableaux(kind, &shape, nvars, maxdeg),
        other => return Err(usage(format!("--route {other}: want operators or tableaux"))),
    };
    let poly = if twist {
        let sign = if shape.size() % 2 == 0 { 1 } else { -1 };
        base.negate_vars().scaled(sign)
    } else {
        base
    };
    Ok(json!({
        "series": a.series, "route": a.route, "shape": shape.to_string(),
        "nvars": nvars, "maxdeg": maxdeg, "poly": poly.to_json(),
    }))
}

// ===== antipode =====

fn run_antipode(a: &AntipodeArgs) -> CliResult<Value> {
    let w = MPermBig::parse(&a.label)?;
    let terms: BTreeMap<String, i64> =
        antipode_big(&w).iter().map(|(k, c)| (k.to_string(), c)).collect();
    Ok(json!({ "cap": null, "terms": terms }))
}

// ===== factor =====

fn run_factor(a: &FactorArgs) -> CliResult<Value> {
    let factors: Vec<String> = match a.basis.as_str() {
        "mMR" => factor_irreducible_small(&MPermSmall::parse(&a.label)?)
            .iter()
            .map(|w| w.to_string())
            .collect(),
        "MMR" => factor_irreducible_big(&MPermBig::parse(&a.label)?)
            .iter()
            .map(|w| w.to_string())
            .collect(),
        other => return Err(usage(format!("--basis {other}: want mMR or MMR"))),
    };
    let irreducible = factors.len() == 1;
    Ok(json!({ "factors": factors, "irreducible": irreducible }))
}

// ===== order =====

fn run_order(a: &OrderArgs) -> CliResult<Value> {
    let w = MPermBig::parse(&a.left)?;
    let v = MPermBig::parse(&a.right)?;
    let bound = a.bound.unwrap_or(2 * w.n().max(v.n()) as usize);
    let leq = weak_order_leq(&w, &v, bound)?;
    let geq = weak_order_leq(&v, &w, bound)?;
    Ok(json!({ "leq": leq, "geq": geq, "bound": bound }))
}

// ===== verify =====

fn run_verify(a: &VerifyArgs) -> CliResult<(String, bool)> {
    let size = SizeClass::parse(&a.size).map_err(|e| usage(e.to_string()))?;
    let outcomes = run_suite(&a.suite, size, a.seed).map_err(|e| usage(e.to_string()))?;
    let ok = outcomes.iter().all(|o| o.passed);
    Ok((render_report(&outcomes), ok))
}
