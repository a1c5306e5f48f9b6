//! The classification table: Gorenstein Fano threefolds with canonical
//! singularities whose anticanonical system has base points.
//!
//! The cases are derived mechanically. Curve cases come from the splitting
//! type `O(a) ⊕ O(b)` of the normal bundle of the base curve, pruned by
//! [`prune`]; cone cases additionally need the double cover `U_m` to pass
//! the branch analysis of [`crate::cover::analyze_um`]. The point case
//! (`m = 2`) has no base curve and is added directly.
//!
//! Every case carries a suite of exact checks run by [`run_checks`].

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::blowup::{
    blowup_degree, cone_case_normal_bundle, decomposition_fiber_coeff, product_degree, BlowupError,
    BlowupStep, NormalBundle,
};
use crate::cover::{analyze_um, branch_for_taut_anticanonical, CoverError};
use crate::k3::{base_locus_dimension, cover_pullback, fano_degree, PencilClass, PencilError};
use crate::report::{Check, CheckValue, Report};
use crate::scroll::{DivisorClass, Scroll};
use crate::surface::{from_scroll, SurfaceClass};
use crate::wps::{infer_ring, rr_chi, WeightedCI, DEFAULT_TRUNCATION};

/// Largest `m` tried when searching for cone cases. The branch test fails
/// for every `m ≥ 13`, so any bound past 12 gives the same table.
pub const CONE_SEARCH_LIMIT: i64 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("splitting type ({a}, {b}) outside the range a >= b >= -2")]
    OutOfRange { a: i64, b: i64 },
    #[error(
        "case {}: check '{}' failed ({}): expected {}, got {}",
        .0.case, .0.name, .0.claim, .0.expected, .0.got
    )]
    CheckFailure(Box<Check>),
    #[error("series truncation {0} is too short, need at least 6")]
    TruncationTooShort(usize),
    #[error(transparent)]
    Blowup(#[from] BlowupError),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    I,
    IIa,
    IIb,
    IIc(i64),
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::I => f.write_str("i"),
            CaseLabel::IIa => f.write_str("ii-a"),
            CaseLabel::IIb => f.write_str("ii-b"),
            CaseLabel::IIc(m) => write!(f, "ii-c({m})"),
        }
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The anticanonical image `W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum WDescriptor {
    /// Quadric surface in `P_3`.
    Quadric,
    /// Hirzebruch surface `Σ_e`.
    Sigma(i64),
    P1xP1,
    /// Cone over the rational normal curve of degree `d`.
    Cone(i64),
}

impl fmt::Display for WDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WDescriptor::Quadric => f.write_str("quadric in P3"),
            WDescriptor::Sigma(e) => write!(f, "Σ{e}"),
            WDescriptor::P1xP1 => f.write_str("P1 x P1"),
            WDescriptor::Cone(d) => write!(f, "cone over the rational normal curve of degree {d}"),
        }
    }
}

impl WDescriptor {
    /// A rank-2 scroll whose `|O(1)|`-image is `W` embedded with degree `m`
    /// (for cones, the resolution `Σ_m`).
    pub fn model_scroll(&self, m: i64) -> Scroll {
        let twists = match *self {
            WDescriptor::Quadric => vec![1, 1],
            WDescriptor::Sigma(e) => vec![(m + e) / 2, (m - e) / 2],
            WDescriptor::P1xP1 => vec![m / 2, m / 2],
            WDescriptor::Cone(d) => vec![d, 0],
        };
        Scroll::new(twists).expect("rank 2")
    }

    /// The surface index `e` of the ruled model (`Σ_0` for quadrics).
    pub fn surface_index(&self) -> i64 {
        match *self {
            WDescriptor::Quadric | WDescriptor::P1xP1 => 0,
            WDescriptor::Sigma(e) => e,
            WDescriptor::Cone(d) => d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    WeightedCompleteIntersection,
    BlowupOfSextic,
    Product,
    ModelOfBlownUpCover,
}

impl Construction {
    pub fn describe(&self) -> &'static str {
        match self {
            Construction::WeightedCompleteIntersection => {
                "complete intersection of a quadric in x0..x3 and a sextic in P(1,1,1,1,2,3)"
            }
            Construction::BlowupOfSextic => {
                "blowup of a sextic in P(1,1,1,2,3) along a complete intersection curve of genus 1"
            }
            Construction::Product => "S1 x P1 with S1 a Du Val del Pezzo surface of degree 1",
            Construction::ModelOfBlownUpCover => {
                "anticanonical model of the blowup of U_m along the rational curve over B ∩ Σ4"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationCase {
    pub label: CaseLabel,
    pub m: i64,
    pub nb: Option<NormalBundle>,
    pub w: WDescriptor,
    pub degree: i64,
    pub bs_dim: u8,
    pub construction: Construction,
    /// Geometric inputs taken as given rather than checked.
    pub assumptions: Vec<&'static str>,
    pub checks: Vec<Check>,
}

impl ClassificationCase {
    fn build(
        label: CaseLabel,
        m: i64,
        nb: Option<NormalBundle>,
        w: WDescriptor,
        construction: Construction,
        assumptions: Vec<&'static str>,
    ) -> Result<Self, ClassifyError> {
        Ok(ClassificationCase {
            label,
            m,
            nb,
            w,
            degree: fano_degree(m)?,
            bs_dim: base_locus_dimension(m)?,
            construction,
            assumptions,
            checks: Vec::new(),
        })
    }

    /// Isolated base point: `m = 2`.
    pub fn point() -> Self {
        Self::build(
            CaseLabel::I,
            2,
            None,
            WDescriptor::Quadric,
            Construction::WeightedCompleteIntersection,
            vec![
                "Bs|-K| = {[0:0:0:0:-1:1]} for general F6",
                "the general elephant has an ordinary double point at the base point",
                "h0(-kK) = χ(-kK) for k >= 0",
            ],
        )
        .expect("m = 2 is valid")
    }

    /// `N = O ⊕ O(-1)`, `W = Σ_1`.
    pub fn ruled_sextic() -> Self {
        let nb = NormalBundle::new(0, -1).expect("ordered");
        Self::build(
            CaseLabel::IIa,
            nb.m(),
            Some(nb),
            WDescriptor::Sigma(nb.exceptional_surface_index()),
            Construction::BlowupOfSextic,
            vec![
                "-K|_S taken in normal form Γ + 3f, m fixed by (-K)^3 = 4",
                "Z contracts to a curve and h1(O_Z) <= 1",
            ],
        )
        .expect("m = 3 is valid")
    }

    /// `N = O ⊕ O`, `W = P1 × P1`.
    pub fn product() -> Self {
        let nb = NormalBundle::new(0, 0).expect("ordered");
        Self::build(
            CaseLabel::IIb,
            nb.m(),
            Some(nb),
            WDescriptor::P1xP1,
            Construction::Product,
            vec!["a del Pezzo fibration over P1 with section Γ and nef Z is a product"],
        )
        .expect("m = 4 is valid")
    }

    /// `N = O(m-2) ⊕ O(-2)`, `W` the cone `Ĉ_m`. Built for any `m ≥ 3`;
    /// only `m ≤ 12` survives [`enumerate_cases`].
    pub fn cone(m: i64) -> Result<Self, ClassifyError> {
        let nb = cone_case_normal_bundle(m)?;
        Self::build(
            CaseLabel::IIc(m),
            m,
            Some(nb),
            WDescriptor::Cone(nb.exceptional_surface_index()),
            Construction::ModelOfBlownUpCover,
            vec![
                "line-plus-cubic fibres of the branch divisor give A-D-E points for 4 <= m <= 12",
                "after flops Z is contractible onto a smooth rational curve",
                "the blown-up curve lies in the smooth locus of U_m",
            ],
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Exclusion {
    /// `b = -2` requires `a ≥ 1`.
    ConeNeedsPositiveA,
    /// ruled `W` with `a > b` requires `a ≤ 0`.
    RuledNeedsNonPositiveA,
    /// `a = b` requires `a = b = 0`.
    ProductNeedsTrivialBundle,
}

impl Exclusion {
    pub fn claim(&self) -> &'static str {
        match self {
            Exclusion::ConeNeedsPositiveA => "b = -2 and a >= 1",
            Exclusion::RuledNeedsNonPositiveA => "a <= 0",
            Exclusion::ProductNeedsTrivialBundle => "a = b = 0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseVerdict {
    Cone { m: i64 },
    RuledSextic,
    Product,
    Excluded(Exclusion),
}

impl fmt::Display for CaseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseVerdict::Cone { m } => write!(f, "cone case, m = {m}"),
            CaseVerdict::RuledSextic => f.write_str("ruled case, blowup of a sextic"),
            CaseVerdict::Product => f.write_str("product case"),
            CaseVerdict::Excluded(e) => write!(f, "excluded ({})", e.claim()),
        }
    }
}

/// Decides which case a normal-bundle splitting type `(a, b)` can belong to.
///
/// `b = -2` is the cone case; `b ≥ -1` means `E_Γ → W` is an isomorphism and
/// `W = Σ_{a-b}`.
pub fn prune(a: i64, b: i64) -> Result<CaseVerdict, ClassifyError> {
    if b < -2 || a < b {
        return Err(ClassifyError::OutOfRange { a, b });
    }
    let verdict = match (a, b) {
        (a, -2) if a >= 1 => CaseVerdict::Cone { m: a + b + 4 },
        (_, -2) => CaseVerdict::Excluded(Exclusion::ConeNeedsPositiveA),
        (0, -1) => CaseVerdict::RuledSextic,
        (0, 0) => CaseVerdict::Product,
        (a, b) if a == b => CaseVerdict::Excluded(Exclusion::ProductNeedsTrivialBundle),
        _ => CaseVerdict::Excluded(Exclusion::RuledNeedsNonPositiveA),
    };
    Ok(verdict)
}

/// Splitting types with `-2 ≤ b ≤ a ≤ max_a` that survive [`prune`].
pub fn surviving_splittings(max_a: i64) -> Vec<(i64, i64, CaseVerdict)> {
    let mut out = Vec::new();
    for a in -2..=max_a {
        for b in -2..=a {
            let v = prune(a, b).expect("inside the grid");
            if !matches!(v, CaseVerdict::Excluded(_)) {
                out.push((a, b, v));
            }
        }
    }
    out
}

/// All cases of the table, ordered by label.
pub fn enumerate_cases() -> Vec<ClassificationCase> {
    let mut cases = vec![ClassificationCase::point()];
    for (_, _, verdict) in surviving_splittings(CONE_SEARCH_LIMIT - 2) {
        let case = match verdict {
            CaseVerdict::RuledSextic => ClassificationCase::ruled_sextic(),
            CaseVerdict::Product => ClassificationCase::product(),
            CaseVerdict::Cone { m } => {
                let report = analyze_um(m).expect("m >= 3");
                if !report.verdict.passes() {
                    continue;
                }
                ClassificationCase::cone(m).expect("m >= 3")
            }
            CaseVerdict::Excluded(_) => unreachable!("filtered"),
        };
        cases.push(case);
    }
    cases.sort_by_key(|c| c.label);
    cases
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Highest degree of every Hilbert series expanded by the checks.
    pub max_degree: usize,
    /// Worker threads for [`verify_all`]; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_degree: DEFAULT_TRUNCATION,
            threads: None,
        }
    }
}

struct Suite {
    case: String,
    checks: Vec<Check>,
}

impl Suite {
    fn new(label: CaseLabel) -> Self {
        Suite {
            case: label.to_string(),
            checks: Vec::new(),
        }
    }

    fn eq(
        &mut self,
        name: &str,
        claim: &str,
        expected: impl Into<CheckValue>,
        got: impl Into<CheckValue>,
    ) {
        self.checks
            .push(Check::compare(&self.case, name, claim, expected, got));
    }

    /// Records an operation that may fail; a failure is reported as text.
    fn res<T: Into<CheckValue>, E: fmt::Display>(
        &mut self,
        name: &str,
        claim: &str,
        expected: impl Into<CheckValue>,
        got: Result<T, E>,
    ) {
        self.eq(name, claim, expected, value(got));
    }
}

fn value<T: Into<CheckValue>, E: fmt::Display>(r: Result<T, E>) -> CheckValue {
    r.map_or_else(|e| CheckValue::Text(format!("error: {e}")), Into::into)
}

fn verdict_text(v: Result<CaseVerdict, ClassifyError>) -> Result<String, ClassifyError> {
    v.map(|v| v.to_string())
}

fn integer_degree(ci: &WeightedCI) -> Result<i64, String> {
    let d = ci.anticanonical_degree().map_err(|e| e.to_string())?;
    if d.is_integral {
        Ok(*d.degree.numer())
    } else {
        Err(format!("non-integral degree {}", d.degree))
    }
}

fn seq(v: &[i64]) -> Vec<i64> {
    v.to_vec()
}

/// Runs every check for `case` and returns all records, passing or not.
pub fn run_checks(case: &ClassificationCase, opts: &VerifyOptions) -> Vec<Check> {
    let mut s = Suite::new(case.label);
    common_checks(&mut s, case);
    match case.label {
        CaseLabel::I => point_checks(&mut s, case, opts.max_degree),
        CaseLabel::IIa => ruled_sextic_checks(&mut s, case, opts.max_degree),
        CaseLabel::IIb => product_checks(&mut s, case),
        CaseLabel::IIc(m) => cone_checks(&mut s, case, m),
    }
    s.checks
}

/// Runs the checks and fails on the first one that does not hold.
pub fn verify_case(
    case: &ClassificationCase,
    opts: &VerifyOptions,
) -> Result<Vec<Check>, ClassifyError> {
    if opts.max_degree < 6 {
        return Err(ClassifyError::TruncationTooShort(opts.max_degree));
    }
    let checks = run_checks(case, opts);
    if let Some(bad) = checks.iter().find(|c| !c.pass) {
        return Err(ClassifyError::CheckFailure(Box::new(bad.clone())));
    }
    Ok(checks)
}

/// Enumerates the table and runs every case's checks. Cases are checked
/// independently; the result is ordered by label whatever the thread count.
pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<ClassificationCase>, ClassifyError> {
    if opts.max_degree < 6 {
        return Err(ClassifyError::TruncationTooShort(opts.max_degree));
    }
    let fill = |mut case: ClassificationCase| {
        case.checks = run_checks(&case, opts);
        case
    };
    let cases = enumerate_cases();
    let mut done: Vec<ClassificationCase> = match opts.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("thread pool");
            pool.install(|| cases.into_par_iter().map(fill).collect())
        }
        None => cases.into_par_iter().map(fill).collect(),
    };
    done.sort_by_key(|c| c.label);
    Ok(done)
}

pub fn verification_report(opts: &VerifyOptions) -> Result<Report, ClassifyError> {
    let cases = verify_all(opts)?;
    Ok(Report::new(
        cases.into_iter().flat_map(|c| c.checks).collect(),
    ))
}

fn common_checks(s: &mut Suite, case: &ClassificationCase) {
    let m = case.m;
    s.res("degree", "(-K)^3 = 2m - 2", case.degree, fano_degree(m));
    s.eq(
        "elephant square",
        "(Γ + mf)^2 = (-K)^3",
        case.degree,
        PencilClass::elephant(m).square(),
    );
    s.res(
        "base locus dimension",
        "dim Bs|-K| = 0 iff m = 2",
        i64::from(case.bs_dim),
        base_locus_dimension(m).map(i64::from),
    );
    if let Some(nb) = case.nb {
        s.eq("m from normal bundle", "m = a + b + 4", m, nb.m());
        s.eq(
            "curve degree",
            "-K·Γ = m - 2 = a + b + 2",
            PencilClass::elephant(m).dot(&PencilClass::SECTION),
            nb.a + nb.b + 2,
        );
        s.eq(
            "exceptional surface",
            "E_Γ = Σ_{a-b} matches W",
            case.w.surface_index(),
            nb.exceptional_surface_index(),
        );
    }
    let model = case.w.model_scroll(m);
    match model.minimal_degree_data() {
        Ok(md) => {
            s.eq("deg W", "deg W = m", m, md.degree);
            s.eq("ambient of W", "W ⊂ P_{m+1}", m + 1, md.ambient_dim);
            s.eq(
                "minimal degree",
                "deg W = codim W + 1",
                true,
                md.is_minimal_degree,
            );
        }
        Err(e) => s.eq("deg W", "deg W = m", m, format!("error: {e}")),
    }
}

fn point_checks(s: &mut Suite, case: &ClassificationCase, max_degree: usize) {
    let ci = WeightedCI::new(vec![1, 1, 1, 1, 2, 3], vec![2, 6]).expect("valid");
    let minimal = WeightedCI::new(vec![1, 1, 1, 1, 3], vec![6]).expect("valid");

    s.eq(
        "pencil meets section trivially",
        "(Γ + mf)·Γ = 0 forces m = 2",
        0,
        PencilClass::elephant(case.m).dot(&PencilClass::SECTION),
    );
    s.res(
        "Riemann-Roch counts",
        "h0(-K) = 4, h0(-2K) = 10, h0(-3K) = 21",
        vec![4i64, 10, 21],
        (1..=3)
            .map(|k| rr_chi(case.degree, k))
            .collect::<Result<Vec<_>, _>>(),
    );
    s.eq(
        "quadratic relation",
        "h0(-2K) = dim S^2 H0(-K)",
        10,
        (4 * 5 / 2) as i64,
    );
    s.res(
        "CI degree",
        "(-K)^3 = Πe/Πw = 2",
        case.degree,
        integer_degree(&ci),
    );
    s.eq(
        "Hilbert prefix",
        "h0(-kK) = 1, 4, 10, 21",
        vec![1i64, 4, 10, 21],
        seq(&ci.hilbert_coeffs(3).0[..]),
    );
    let rr_top = max_degree.min(12) as i64;
    s.res(
        "Hilbert series = Riemann-Roch",
        "h0(-kK) = χ(-kK) for k <= 12",
        value(
            (0..=rr_top)
                .map(|k| rr_chi(case.degree, k))
                .collect::<Result<Vec<_>, _>>(),
        ),
        Ok::<_, String>(ci.hilbert_coeffs(rr_top as usize).0),
    );
    s.eq(
        "relation in degree 6",
        "h0(-6K) = 104",
        104,
        ci.hilbert_coeffs(max_degree).0[6],
    );
    s.eq(
        "presentation equivalence",
        "P(1^4,2,3) ∩ (2,6) and P(1^4,3) ∩ (6) have equal Hilbert series",
        minimal.hilbert_coeffs(max_degree).0,
        ci.hilbert_coeffs(max_degree).0,
    );
    let inferred = infer_ring(&ci.hilbert_coeffs(max_degree));
    s.res(
        "inferred generators",
        "generators in degrees 1,1,1,1,3 after cancelling (1 - t^2)",
        vec![1u32, 1, 1, 1, 3],
        inferred.clone().map(|r| r.generators),
    );
    s.res(
        "inferred relations",
        "a relation in degree 6",
        vec![6u32],
        inferred.map(|r| r.relations),
    );
}

fn ruled_sextic_checks(s: &mut Suite, case: &ClassificationCase, max_degree: usize) {
    let sextic = WeightedCI::new(vec![1, 1, 1, 2, 3], vec![6]).expect("valid");
    let nb = case.nb.expect("curve case");

    s.res(
        "splitting survives pruning",
        "a = 0, b = -1",
        CaseVerdict::RuledSextic.to_string(),
        verdict_text(prune(nb.a, nb.b)),
    );
    s.res(
        "elephant normal form",
        "-K|_S = Γ + mf with m = 3",
        case.m,
        PencilClass::elephant(case.m).saint_donat_form(),
    );
    s.eq(
        "fibre coefficient",
        "-K = Z + (a+2)F",
        2,
        decomposition_fiber_coeff(nb.a),
    );
    match sextic.anticanonical_degree() {
        Ok(d) => {
            s.eq("sextic amplitude", "-K_V = 2H", 2, d.amplitude);
            s.eq("H^3", "H^3 = 1", "1", d.hyperplane_cube.to_string());
            s.res("sextic degree", "(-K_V)^3 = 8", 8, integer_degree(&sextic));
            // C = H ∩ H, so -K_V·C = amplitude·H^3
            let curve = d.hyperplane_cube * d.amplitude;
            s.eq(
                "curve degree",
                "-K_V·C = 2H·H·H = 2",
                "2",
                curve.to_string(),
            );
            if let (Ok(ambient), true) = (integer_degree(&sextic), curve.is_integer()) {
                let step = BlowupStep {
                    ambient_degree: ambient,
                    curve_degree: *curve.numer(),
                    genus: 1,
                };
                s.eq(
                    "blowup degree",
                    "(-K_X)^3 = 8 - 2·2 - 2 + 2·1 = 4",
                    case.degree,
                    blowup_degree(step),
                );
            }
        }
        Err(e) => s.eq("sextic degree", "(-K_V)^3 = 8", 8, format!("error: {e}")),
    }
    let closed_top = max_degree.min(20) as i64;
    s.eq(
        "h0(kH) closed form",
        "h0(kH) = 1 + k(8 + 3k + k^2)/6",
        (0..=closed_top)
            .map(|k| 1 + k * (8 + 3 * k + k * k) / 6)
            .collect::<Vec<i64>>(),
        sextic.hilbert_coeffs(closed_top as usize).0,
    );
    let rr_top = (max_degree / 2).min(12) as i64;
    s.res(
        "Hilbert series = Riemann-Roch",
        "h0(-kK_V) = h0(2kH) = χ(-kK_V)",
        value(
            (0..=rr_top)
                .map(|k| rr_chi(8, k))
                .collect::<Result<Vec<_>, _>>(),
        ),
        Ok::<_, String>(sextic.hilbert_coeffs(2 * rr_top as usize).every(2).0),
    );
    let inferred = infer_ring(&sextic.hilbert_coeffs(max_degree));
    s.res(
        "inferred generators",
        "generators in degrees 1,1,1,2,3",
        vec![1u32, 1, 1, 2, 3],
        inferred.clone().map(|r| r.generators),
    );
    s.res(
        "inferred relations",
        "one sextic relation",
        vec![6u32],
        inferred.map(|r| r.relations),
    );
}

fn product_checks(s: &mut Suite, case: &ClassificationCase) {
    let nb = case.nb.expect("curve case");
    s.res(
        "splitting survives pruning",
        "a = b = 0",
        CaseVerdict::Product.to_string(),
        verdict_text(prune(nb.a, nb.b)),
    );
    s.res(
        "product degree",
        "(-K)^3 = 6·K_S^2 = 6",
        case.degree,
        product_degree(1),
    );
    s.eq("m from degree", "2m - 2 = 6", case.m, (case.degree + 2) / 2);
    s.eq(
        "fibre coefficient",
        "-K = Z + 2F",
        2,
        decomposition_fiber_coeff(nb.a),
    );
}

fn cone_checks(s: &mut Suite, case: &ClassificationCase, m: i64) {
    let report = match analyze_um(m) {
        Ok(r) => r,
        Err(e) => {
            s.eq(
                "branch analysis",
                "U_m is defined",
                true,
                format!("error: {e}"),
            );
            return;
        }
    };
    s.eq(
        "branch analysis",
        "fibre multiplicity of D is at most 3, so 3 <= m <= 12",
        true,
        report.verdict.passes(),
    );
    s.eq(
        "B is a fixed component",
        "D = B + R for m >= 4; D may be smooth for m = 3",
        if m >= 4 { 1u32 } else { 0 },
        report.b_mult,
    );
    s.eq("R·B·Σ4", "R·ξ4 = 0", 0, report.r_dot_b_sigma);

    let nb = case.nb.expect("curve case");
    s.res(
        "splitting survives pruning",
        "b = -2 and a >= 1",
        CaseVerdict::Cone { m }.to_string(),
        verdict_text(prune(nb.a, nb.b)),
    );
    s.res(
        "cone normal bundle",
        "N = O(m-2) + O(-2)",
        vec![m - 2, -2],
        cone_case_normal_bundle(m).map(|nb| vec![nb.a, nb.b]),
    );
    s.eq(
        "fibre coefficient",
        "-K = Z + B + mF",
        m,
        decomposition_fiber_coeff(nb.a),
    );

    let base = &report.base;
    let taut = [DivisorClass::TAUTOLOGICAL; 3];
    s.res(
        "scroll degree",
        "O_W(1)^3 = 2m - 4",
        2 * m - 4,
        base.intersect(&taut),
    );
    let cover = branch_for_taut_anticanonical(base);
    s.res(
        "branch class",
        "D ∈ |O(4) - (4m-12)F|",
        vec![4, -(4 * m - 12)],
        cover.clone().map(|c| vec![c.branch.h, c.branch.f]),
    );
    let cover_degree = match cover {
        Ok(c) => c.cover_degree(),
        Err(e) => {
            s.eq(
                "cover degree",
                "(-K_U)^3 = 4m - 8",
                4 * m - 8,
                format!("error: {e}"),
            );
            return;
        }
    };
    s.eq("cover degree", "(-K_U)^3 = 4m - 8", 4 * m - 8, cover_degree);

    // Γ0 ⊂ U_m has normal bundle O(m-4) + O(-2), so -K·Γ0 = m - 4.
    let gamma0 = NormalBundle::new(m - 4, -2).map(|n| n.a + n.b + 2);
    let gamma0_degree = gamma0.unwrap_or(i64::MIN);
    let x_degree = blowup_degree(BlowupStep {
        ambient_degree: cover_degree,
        curve_degree: gamma0_degree,
        genus: 0,
    });
    s.eq(
        "blowup of U_m",
        "(-K_X)^3 = 4m - 8 - 2(m - 4) - 2 = 2m - 2",
        case.degree,
        x_degree,
    );
    let fibration_degree = blowup_degree(BlowupStep {
        ambient_degree: x_degree,
        curve_degree: nb.a + nb.b + 2,
        genus: 0,
    });
    s.eq(
        "blowup of X",
        "(-K)^3 = 0 after blowing up the base curve",
        0,
        fibration_degree,
    );

    sigma4_checks(s, base, report.branch, m);
}

/// Restriction of the branch divisor to the surface `Σ4 = F(m, m-4)` spanned
/// by the first two summands of the bundle.
fn sigma4_checks(s: &mut Suite, base: &Scroll, branch: DivisorClass, m: i64) {
    let index_of = |d: i64| base.twists().iter().position(|&t| t == d).map(|i| i + 1);
    let keep = match (index_of(m), index_of(m - 4)) {
        (Some(i), Some(j)) => {
            let mut k = vec![i, j];
            k.sort_unstable();
            k
        }
        _ => {
            s.eq("Σ4 restriction", "Σ4 = F(m, m-4) ⊂ W", true, false);
            return;
        }
    };
    let restricted = base
        .restrict_to_subscroll(&keep, branch)
        .map_err(|e| e.to_string())
        .and_then(|(sub, c)| {
            let d = from_scroll(&sub, c).map_err(|e| e.to_string())?;
            let h = from_scroll(&sub, DivisorClass::TAUTOLOGICAL).map_err(|e| e.to_string())?;
            Ok((d, h))
        });
    let (d, hyperplane) = match restricted {
        Ok(pair) => pair,
        Err(e) => {
            s.eq(
                "Σ4 restriction",
                "D|Σ4 = 4ξ4 + 12f",
                true,
                format!("error: {e}"),
            );
            return;
        }
    };
    s.eq(
        "Σ4 restriction",
        "D|Σ4 = 4ξ4 + 12f",
        vec![4i64, 4, 12],
        vec![i64::from(d.e), d.xi, d.fib],
    );
    match d.forced_minimal_decomposition() {
        Ok((mu, c)) => {
            s.eq(
                "Σ4 splitting",
                "D|Σ4 = ξ4 + C, C ∈ |3ξ4 + 12f|",
                vec![1i64, 3, 12],
                vec![i64::from(mu), c.xi, c.fib],
            );
            s.res(
                "C misses ξ4",
                "C·ξ4 = 0",
                0,
                c.dot(&SurfaceClass::minimal_section(4)),
            );
            s.res("genus of C", "2g - 2 = C·(C + K)", 10, c.genus());
        }
        Err(e) => s.eq("Σ4 splitting", "D|Σ4 = ξ4 + C", true, format!("error: {e}")),
    }

    s.eq(
        "O(1) on Σ4",
        "O_W(1)|Σ4 = ξ4 + m·f",
        vec![1i64, m],
        vec![hyperplane.xi, hyperplane.fib],
    );
    let up = match cover_pullback(&hyperplane) {
        Ok(p) => p,
        Err(e) => {
            s.eq(
                "pullback to S",
                "μ*O(1) = 2Γ0 + mf",
                true,
                format!("error: {e}"),
            );
            return;
        }
    };
    s.eq(
        "pullback to S",
        "μ*O(1) = 2Γ0 + mf",
        vec![2i64, m],
        vec![up.gamma, up.ell],
    );
    s.res(
        "pullback doubles squares",
        "(2Γ0 + mf)^2 = 2·(O(1)|Σ4)^2 = (-K_U)^3",
        up.square(),
        hyperplane.dot(&hyperplane).map(|q| 2 * q),
    );
    let reduced = up.blowup_section_reduce();
    s.res(
        "blowup of Γ0",
        "-K_Y|_S = Γ0 + mf",
        vec![1i64, m],
        reduced.clone().map(|p| vec![p.gamma, p.ell]),
    );
    s.res(
        "elephant normal form",
        "Γ + mf with m >= 2",
        m,
        reduced
            .map_err(|e| e.to_string())
            .and_then(|p| p.saint_donat_form().map_err(|e| e.to_string())),
    );
}
