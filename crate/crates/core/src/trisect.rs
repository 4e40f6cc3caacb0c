//! Trisection diagrams at the level of first homology.
//!
//! Curves on a closed genus-`g` surface are recorded by their classes in
//! `H1(Σ) = Z^{2g}` with basis `a1..ag, b1..bg` and `a_i · b_i = 1`. Every
//! check here is a necessary condition for the corresponding statement
//! about curves up to isotopy; none of them is sufficient, and reports say
//! so.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kirby::{self, cokernel, smith_normal_form, AbelianGroup, IntegerMatrix, KirbyDiagram, TwoHandle};

pub const HOMOLOGY_CAVEAT: &str =
    "homology-level check: necessary conditions only, curves are not checked up to isotopy";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceModel {
    pub genus: usize,
}

impl SurfaceModel {
    pub fn new(genus: usize) -> Self {
        Self { genus }
    }

    /// The standard skew form.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> BigInt {
        let g = self.genus;
        (0..g)
            .map(|i| BigInt::from(x[i]) * y[g + i] - BigInt::from(x[g + i]) * y[i])
            .sum()
    }

    pub fn form_matrix(&self) -> IntegerMatrix {
        let g = self.genus;
        IntegerMatrix::from_fn(2 * g, 2 * g, |i, j| {
            if j == i + g {
                BigInt::one()
            } else if i == j + g {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub class: Vec<i64>,
    pub label: String,
}

impl Curve {
    pub fn new(class: Vec<i64>, label: impl Into<String>) -> Self {
        Self { class, label: label.into() }
    }

    pub fn is_primitive(&self) -> bool {
        self.class.iter().fold(0i64, |acc, &x| acc.gcd(&x)) == 1
    }

    fn same_unoriented(&self, other: &Curve) -> bool {
        self.class == other.class || self.class.iter().zip(&other.class).all(|(a, b)| *a == -*b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSystem {
    pub curves: Vec<Curve>,
}

impl CutSystem {
    pub fn from_classes(classes: Vec<Vec<i64>>, name: &str) -> Self {
        let curves = classes
            .into_iter()
            .enumerate()
            .map(|(i, c)| Curve::new(c, format!("{name}{}", i + 1)))
            .collect();
        Self { curves }
    }

    pub fn classes(&self) -> Vec<Vec<i64>> {
        self.curves.iter().map(|c| c.class.clone()).collect()
    }

    fn class_matrix(&self, g: usize) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.curves.len(), 2 * g, |i, j| BigInt::from(self.curves[i].class[j]))
    }

    /// Whether `v` lies in the span of the curves. Valid systems span a
    /// direct summand, so rational membership is integral membership.
    fn spans(&self, g: usize, v: &[i64]) -> bool {
        let base = self.class_matrix(g);
        let mut rows = self.classes();
        rows.push(v.to_vec());
        let extended = IntegerMatrix::from_i64_rows(&rows).expect("equal lengths");
        extended.rank() == base.rank()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutSystemDefect {
    WrongCount { expected: usize, found: usize },
    WrongLength { curve: String, expected: usize, found: usize },
    NonPrimitive { curve: String },
    NotDisjoint { first: String, second: String, pairing: BigInt },
    NotSummand { invariant_factors: Vec<BigInt> },
}

impl fmt::Display for CutSystemDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongCount { expected, found } => write!(f, "expected {expected} curves, found {found}"),
            Self::WrongLength { curve, expected, found } => {
                write!(f, "{curve}: class has length {found}, expected {expected}")
            }
            Self::NonPrimitive { curve } => write!(f, "{curve}: non-primitive class"),
            Self::NotDisjoint { first, second, pairing } => {
                write!(f, "{first} and {second}: algebraic intersection {pairing}")
            }
            Self::NotSummand { invariant_factors } => {
                let s: Vec<String> = invariant_factors.iter().map(|d| d.to_string()).collect();
                write!(f, "classes do not span a rank-g summand (invariant factors [{}])", s.join(", "))
            }
        }
    }
}

/// Count, primitivity, pairwise algebraic disjointness, and the summand
/// condition, in that order; the first failure is returned.
pub fn validate_cut_system(s: &CutSystem, g: usize) -> std::result::Result<(), CutSystemDefect> {
    if s.curves.len() != g {
        return Err(CutSystemDefect::WrongCount { expected: g, found: s.curves.len() });
    }
    if let Some(c) = s.curves.iter().find(|c| c.class.len() != 2 * g) {
        return Err(CutSystemDefect::WrongLength { curve: c.label.clone(), expected: 2 * g, found: c.class.len() });
    }
    if let Some(c) = s.curves.iter().find(|c| !c.is_primitive()) {
        return Err(CutSystemDefect::NonPrimitive { curve: c.label.clone() });
    }
    let surface = SurfaceModel::new(g);
    for (i, x) in s.curves.iter().enumerate() {
        for y in &s.curves[i + 1..] {
            let p = surface.pairing(&x.class, &y.class);
            if !p.is_zero() {
                return Err(CutSystemDefect::NotDisjoint {
                    first: x.label.clone(),
                    second: y.label.clone(),
                    pairing: p,
                });
            }
        }
    }
    let snf = smith_normal_form(&s.class_matrix(g));
    let factors = snf.invariant_factors();
    if factors.len() != g || factors.iter().any(|d| !d.is_one()) {
        return Err(CutSystemDefect::NotSummand { invariant_factors: factors });
    }
    Ok(())
}

/// `P[i][j] = x_i · y_j`.
pub fn intersection_matrix(s1: &CutSystem, s2: &CutSystem, g: usize) -> IntegerMatrix {
    let surface = SurfaceModel::new(g);
    IntegerMatrix::from_fn(s1.curves.len(), s2.curves.len(), |i, j| {
        surface.pairing(&s1.curves[i].class, &s2.curves[j].class)
    })
}

/// The `k` with `H1(H ∪ H') = Z^k`, read off the cokernel of the algebraic
/// intersection matrix. Torsion rules out `#_k S1xS2`.
pub fn pairwise_k(s1: &CutSystem, s2: &CutSystem, g: usize) -> Result<usize> {
    for s in [s1, s2] {
        validate_cut_system(s, g).map_err(|e| Error::Precondition(format!("invalid cut system: {e}")))?;
    }
    let coker = cokernel(&intersection_matrix(s1, s2, g));
    if !coker.is_free() {
        return Err(Error::TorsionObstruction(coker.to_string()));
    }
    Ok(coker.free_rank)
}

/// Geometric intersection numbers `|x_i ∩ y_j|` between pairs of systems.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ab: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bg: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ga: Option<Vec<Vec<u64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawTrisection", into = "RawTrisection")]
pub struct TrisectionDiagram {
    pub surface: SurfaceModel,
    pub alpha: CutSystem,
    pub beta: CutSystem,
    pub gamma: CutSystem,
    pub geometric: Option<GeometricData>,
    pub declared_k: Option<[u64; 3]>,
}

#[derive(Serialize, Deserialize)]
struct RawTrisection {
    genus: usize,
    alpha: Vec<Vec<i64>>,
    beta: Vec<Vec<i64>>,
    gamma: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    geometric: Option<GeometricData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    declared_k: Option<[u64; 3]>,
}

impl From<RawTrisection> for TrisectionDiagram {
    fn from(r: RawTrisection) -> Self {
        TrisectionDiagram {
            surface: SurfaceModel::new(r.genus),
            alpha: CutSystem::from_classes(r.alpha, "alpha"),
            beta: CutSystem::from_classes(r.beta, "beta"),
            gamma: CutSystem::from_classes(r.gamma, "gamma"),
            geometric: r.geometric,
            declared_k: r.declared_k,
        }
    }
}

impl From<TrisectionDiagram> for RawTrisection {
    fn from(d: TrisectionDiagram) -> Self {
        RawTrisection {
            genus: d.surface.genus,
            alpha: d.alpha.classes(),
            beta: d.beta.classes(),
            gamma: d.gamma.classes(),
            geometric: d.geometric,
            declared_k: d.declared_k,
        }
    }
}

impl TrisectionDiagram {
    pub fn new(genus: usize, alpha: Vec<Vec<i64>>, beta: Vec<Vec<i64>>, gamma: Vec<Vec<i64>>) -> Self {
        RawTrisection { genus, alpha, beta, gamma, geometric: None, declared_k: None }.into()
    }

    pub fn genus(&self) -> usize {
        self.surface.genus
    }

    pub fn with_declared_k(mut self, k: [u64; 3]) -> Self {
        self.declared_k = Some(k);
        self
    }

    pub fn with_geometric(mut self, geometric: GeometricData) -> Self {
        self.geometric = Some(geometric);
        self
    }

    fn systems(&self) -> [(&'static str, &CutSystem); 3] {
        [("alpha", &self.alpha), ("beta", &self.beta), ("gamma", &self.gamma)]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrisectionReport {
    pub genus: usize,
    pub k12: Option<usize>,
    pub k23: Option<usize>,
    pub k31: Option<usize>,
    pub euler: Option<i64>,
    /// The single width entry `max(2g - 1, 0)` of the induced decomposition.
    pub width_entry: u64,
    pub diagnostics: Vec<String>,
    pub caveat: &'static str,
}

impl TrisectionReport {
    pub fn is_ok(&self) -> bool {
        self.diagnostics.is_empty()
    }

    pub fn k(&self) -> Option<[usize; 3]> {
        Some([self.k12?, self.k23?, self.k31?])
    }
}

fn check_geometric(
    name: &str,
    geometric: &[Vec<u64>],
    algebraic: &IntegerMatrix,
    diagnostics: &mut Vec<String>,
) {
    let (r, c) = algebraic.shape();
    if geometric.len() != r || geometric.iter().any(|row| row.len() != c) {
        diagnostics.push(format!("geometric matrix {name} is not {r}x{c}"));
        return;
    }
    for i in 0..r {
        for j in 0..c {
            let geo = BigInt::from(geometric[i][j]);
            let alg = algebraic[(i, j)].abs();
            if geo < alg || (&geo - &alg).is_odd() {
                diagnostics.push(format!(
                    "geometric matrix {name}[{}][{}] = {geo} is incompatible with algebraic intersection {}",
                    i + 1,
                    j + 1,
                    algebraic[(i, j)]
                ));
            }
        }
    }
}

pub fn validate_trisection(d: &TrisectionDiagram) -> TrisectionReport {
    let g = d.genus();
    let mut diagnostics = Vec::new();
    let mut valid = [true; 3];
    for (slot, (name, s)) in d.systems().into_iter().enumerate() {
        if let Err(e) = validate_cut_system(s, g) {
            diagnostics.push(format!("{name}: {e}"));
            valid[slot] = false;
        }
    }

    let pairs = [(0usize, 1usize, "ab"), (1, 2, "bg"), (2, 0, "ga")];
    let systems = d.systems();
    let mut ks = [None; 3];
    for (slot, &(i, j, name)) in pairs.iter().enumerate() {
        if !(valid[i] && valid[j]) {
            continue;
        }
        match pairwise_k(systems[i].1, systems[j].1, g) {
            Ok(k) => ks[slot] = Some(k),
            Err(e) => diagnostics.push(format!("{}/{}: {e}", systems[i].0, systems[j].0)),
        }
        if let Some(geo) = &d.geometric {
            let m = match name {
                "ab" => &geo.ab,
                "bg" => &geo.bg,
                _ => &geo.ga,
            };
            if let Some(m) = m {
                check_geometric(name, m, &intersection_matrix(systems[i].1, systems[j].1, g), &mut diagnostics);
            }
        }
    }

    let euler = match ks {
        [Some(a), Some(b), Some(c)] => Some(2 + g as i64 - (a + b + c) as i64),
        _ => None,
    };
    if let (Some(declared), [Some(a), Some(b), Some(c)]) = (d.declared_k, ks) {
        if declared != [a as u64, b as u64, c as u64] {
            diagnostics.push(format!("declared k {declared:?} differs from computed [{a}, {b}, {c}]"));
        }
    }
    TrisectionReport {
        genus: g,
        k12: ks[0],
        k23: ks[1],
        k31: ks[2],
        euler,
        width_entry: (2 * g as u64).saturating_sub(1),
        diagnostics,
        caveat: HOMOLOGY_CAVEAT,
    }
}

/// `H1` of the closed 4-manifold: `Z^{2g}` modulo all three spans.
pub fn first_homology(d: &TrisectionDiagram) -> AbelianGroup {
    let g = d.genus();
    let rows: Vec<Vec<i64>> = d.systems().iter().flat_map(|(_, s)| s.classes()).collect();
    let m = IntegerMatrix::from_rows(&rows, 2 * g).expect("class lengths checked by caller");
    cokernel(&m.transpose())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardPosition {
    /// Indices (1-based) of the gamma curves forming the extracted link.
    pub link: Vec<usize>,
    pub diagnostics: Vec<String>,
}

impl StandardPosition {
    pub fn is_ok(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

/// Checks that `alpha` and `gamma` are in the standard position of a
/// `#_k S1xS2` splitting: the first `k` curves agree and the remaining ones
/// meet geometrically in the identity pattern. When it holds, the remaining
/// gamma curves are the attaching link of the relative handlebody.
pub fn standard_position_check(d: &TrisectionDiagram, k: usize) -> Result<StandardPosition> {
    let ga = d.geometric.as_ref().and_then(|g| g.ga.as_ref()).ok_or(Error::GeometricRequired)?;
    let g = d.genus();
    if k > g {
        return Err(Error::Invalid(format!("k = {k} exceeds the genus {g}")));
    }
    if ga.len() != g || ga.iter().any(|r| r.len() != g) {
        return Err(Error::DimensionMismatch(format!("geometric matrix ga must be {g}x{g}")));
    }
    if d.alpha.curves.len() != g || d.gamma.curves.len() != g {
        return Err(Error::DimensionMismatch("alpha and gamma need g curves each".into()));
    }
    let mut diagnostics = Vec::new();
    for l in 0..k {
        let (a, c) = (&d.alpha.curves[l], &d.gamma.curves[l]);
        if !a.same_unoriented(c) {
            diagnostics.push(format!("{} and {} differ", a.label, c.label));
        }
    }
    for i in k..g {
        for j in k..g {
            let expected = u64::from(i == j);
            if ga[i][j] != expected {
                diagnostics.push(format!(
                    "|gamma{} ∩ alpha{}| = {}, expected {expected}",
                    i + 1,
                    j + 1,
                    ga[i][j]
                ));
            }
        }
    }
    Ok(StandardPosition { link: (k + 1..=g).collect(), diagnostics })
}

fn embed(class: &[i64], offset: usize, own: usize, total: usize) -> Vec<i64> {
    let mut v = vec![0; 2 * total];
    for i in 0..own {
        v[offset + i] = class[i];
        v[total + offset + i] = class[own + i];
    }
    v
}

fn block(a: &Option<Vec<Vec<u64>>>, b: &Option<Vec<Vec<u64>>>, g1: usize, g2: usize) -> Option<Vec<Vec<u64>>> {
    let (a, b) = (a.as_ref()?, b.as_ref()?);
    let mut m = vec![vec![0; g1 + g2]; g1 + g2];
    for i in 0..g1 {
        m[i][..g1].copy_from_slice(&a[i]);
    }
    for i in 0..g2 {
        m[g1 + i][g1..].copy_from_slice(&b[i]);
    }
    Some(m)
}

/// Connected sum: genera add and classes embed block-diagonally.
pub fn connected_sum(d1: &TrisectionDiagram, d2: &TrisectionDiagram) -> Result<TrisectionDiagram> {
    for (i, d) in [d1, d2].into_iter().enumerate() {
        let r = validate_trisection(d);
        if !r.is_ok() {
            return Err(Error::Invalid(format!("summand {}: {}", i + 1, r.diagnostics.join("; "))));
        }
    }
    let (g1, g2) = (d1.genus(), d2.genus());
    let total = g1 + g2;
    let join = |s1: &CutSystem, s2: &CutSystem| -> Vec<Vec<i64>> {
        s1.curves
            .iter()
            .map(|c| embed(&c.class, 0, g1, total))
            .chain(s2.curves.iter().map(|c| embed(&c.class, g1, g2, total)))
            .collect()
    };
    let mut out = TrisectionDiagram::new(
        total,
        join(&d1.alpha, &d2.alpha),
        join(&d1.beta, &d2.beta),
        join(&d1.gamma, &d2.gamma),
    );
    if let (Some(a), Some(b)) = (&d1.declared_k, &d2.declared_k) {
        out.declared_k = Some([a[0] + b[0], a[1] + b[1], a[2] + b[2]]);
    }
    if let (Some(a), Some(b)) = (&d1.geometric, &d2.geometric) {
        out.geometric = Some(GeometricData {
            ab: block(&a.ab, &b.ab, g1, g2),
            bg: block(&a.bg, &b.bg, g1, g2),
            ga: block(&a.ga, &b.ga, g1, g2),
        });
    }
    Ok(out)
}

/// Homology classes of a trisection diagram for the closed manifold
/// described by `d`.
///
/// The surface has one handle for each 1-handle `u` and each 2-handle `j`
/// (genus `c + d`). The alpha curves are the 0-framed push-offs of the
/// dotted circles, `b_u + Σ R[u][j] a_j`, together with the meridians
/// `a_j` of the attaching circles; beta is the standard `b_i`; gamma keeps
/// the alpha curves of the 1-handles and replaces each meridian `a_j` by
/// the framed push-off `b_j + Σ R[u][j] a_u + Σ Q[j][l] a_l`. Here `R` is
/// the run-through matrix and `Q` the linking matrix. The declared `k` is
/// `(|1-handles|, |3-handles|, |1-handles|)`.
pub fn from_kirby(d: &KirbyDiagram) -> Result<TrisectionDiagram> {
    if d.zero_handles() != 1 || d.four_handles() != 1 {
        return Err(Error::Precondition("a closed diagram with one 0-handle and one 4-handle is required".into()));
    }
    let c = d.one_handles().len();
    let n = d.two_handles().len();
    let g = c + n;
    let r = kirby::run_through_matrix(d);
    let q = kirby::linking_matrix(d);
    let entry = |x: &BigInt| i64::try_from(x).expect("entries come from i64 data");
    let a = |i: usize| i;
    let b = |i: usize| g + i;

    let mut alpha = Vec::with_capacity(g);
    for u in 0..c {
        let mut v = vec![0i64; 2 * g];
        v[b(u)] = 1;
        for j in 0..n {
            v[a(c + j)] = entry(&r[(u, j)]);
        }
        alpha.push(v);
    }
    for j in 0..n {
        let mut v = vec![0i64; 2 * g];
        v[a(c + j)] = 1;
        alpha.push(v);
    }
    let beta: Vec<Vec<i64>> = (0..g)
        .map(|i| {
            let mut v = vec![0i64; 2 * g];
            v[b(i)] = 1;
            v
        })
        .collect();
    let mut gamma: Vec<Vec<i64>> = alpha[..c].to_vec();
    for j in 0..n {
        let mut v = vec![0i64; 2 * g];
        v[b(c + j)] = 1;
        for u in 0..c {
            v[a(u)] = entry(&r[(u, j)]);
        }
        for l in 0..n {
            v[a(c + l)] = entry(&q[(j, l)]);
        }
        gamma.push(v);
    }
    Ok(TrisectionDiagram::new(g, alpha, beta, gamma).with_declared_k([
        c as u64,
        d.three_handles() as u64,
        c as u64,
    ]))
}

/// Genus-0 diagram of `S4`.
pub fn s4() -> TrisectionDiagram {
    TrisectionDiagram::new(0, vec![], vec![], vec![]).with_declared_k([0, 0, 0])
}

/// Genus-1 diagram of `S1xS3`: three parallel curves.
pub fn s1xs3() -> TrisectionDiagram {
    let c = vec![vec![1, 0]];
    TrisectionDiagram::new(1, c.clone(), c.clone(), c).with_declared_k([1, 1, 1])
}

/// Genus-1 diagram of `CP2` (or `-CP2`): `(1,0)`, `(0,1)`, `(±1,1)`.
pub fn cp2(positive: bool) -> TrisectionDiagram {
    let h = TwoHandle::new("k", if positive { 1 } else { -1 });
    let d = KirbyDiagram::new(1, vec![], vec![h], 0, 1).expect("valid diagram");
    from_kirby(&d).expect("closed diagram")
}

/// A diagram of the sphere bundle `D(X_{g,n})` (genus `2g+2`) or
/// `D(Y_{g,n})` (genus `g+2`), from the doubled one-2-handle disk bundle
/// diagram with both 2-handles attached at once.
pub fn sphere_bundle_double_diagram(orientable: bool, g: u32, n: i64) -> Result<TrisectionDiagram> {
    let bundle = kirby::disk_bundle(orientable, g, n)?;
    from_kirby(&kirby::double(&bundle)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub period: u32,
    pub diagnostics: Vec<String>,
    pub necessary_conditions_only: bool,
}

impl SymmetryReport {
    pub fn is_ok(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

fn matrix_power(m: &IntegerMatrix, p: u32) -> IntegerMatrix {
    let mut acc = IntegerMatrix::identity(m.rows());
    for _ in 0..p {
        acc = &acc * m;
    }
    acc
}

fn scaled_identity(n: usize, s: i64) -> IntegerMatrix {
    IntegerMatrix::from_fn(n, n, |i, j| if i == j { BigInt::from(s) } else { BigInt::zero() })
}

fn is_plus_minus(m: &IntegerMatrix, target: &IntegerMatrix) -> bool {
    let neg = IntegerMatrix::from_fn(target.rows(), target.cols(), |i, j| -&target[(i, j)]);
    m == target || *m == neg
}

/// Necessary conditions for a period-`p` symmetry acting on `H1(Σ)` by
/// `action`: it preserves the skew form up to sign, has `M^p = ±I`, and
/// maps each cut system's span into itself.
pub fn check_symmetry_action(d: &TrisectionDiagram, action: &IntegerMatrix, p: u32) -> Result<SymmetryReport> {
    let g = d.genus();
    if action.shape() != (2 * g, 2 * g) {
        return Err(Error::DimensionMismatch(format!(
            "action is {}x{}, expected {}x{}",
            action.rows(),
            action.cols(),
            2 * g,
            2 * g
        )));
    }
    if p < 2 {
        return Err(Error::Invalid(format!("period must be at least 2, got {p}")));
    }
    let mut diagnostics = Vec::new();
    let j = SurfaceModel::new(g).form_matrix();
    let pulled = &(&action.transpose() * &j) * action;
    if !is_plus_minus(&pulled, &j) {
        diagnostics.push("action does not preserve the intersection form up to sign".to_string());
    }
    if !is_plus_minus(&matrix_power(action, p), &scaled_identity(2 * g, 1)) {
        diagnostics.push(format!("action^{p} is not ±identity"));
    }
    for (name, s) in d.systems() {
        if let Err(e) = validate_cut_system(s, g) {
            diagnostics.push(format!("{name}: {e}"));
            continue;
        }
        for c in &s.curves {
            let v: Vec<i64> = (0..2 * g)
                .map(|i| {
                    let x: BigInt = (0..2 * g).map(|k| &action[(i, k)] * c.class[k]).sum();
                    i64::try_from(&x).unwrap_or(i64::MAX)
                })
                .collect();
            if !s.spans(g, &v) {
                diagnostics.push(format!("image of {} leaves the span of {name}", c.label));
            }
        }
    }
    Ok(SymmetryReport { period: p, diagnostics, necessary_conditions_only: true })
}
