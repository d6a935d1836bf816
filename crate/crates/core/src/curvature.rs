//! Constraint ledger for fixed-point sets of isometric circle actions on
//! even-dimensional positive-curvature manifolds.
//!
//! A configuration is a multiset of catalog manifolds standing for the
//! connected components of the fixed-point set inside an ambient manifold.
//! Four checks (Berger non-emptiness, even codimension, Frankel's dimension
//! bound, Gauss-Bonnet-Chern positivity in dimension at most 4) plus the
//! Grove-Searle rule table and the Lefschetz sum rule chi(M) = chi(N) carve
//! out the admissible configurations. The component catalog is a closed
//! world: the known even-dimensional positive-curvature manifolds. The gap
//! report shows exactly where that assumption does work.

use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on the number of components per configuration.
pub const DEFAULT_MAX_COMPONENTS: usize = 6;

/// Default budget for enumeration work (candidate extensions examined).
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Sphere,
    RealProjective,
    ComplexProjective,
    QuaternionicProjective,
    CayleyPlane,
    Wallach,
    Eschenburg,
    Point,
}

/// One known even-dimensional positive-curvature manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldRecord {
    pub label: String,
    pub dim: usize,
    pub euler: i64,
    pub family: Family,
}

impl ManifoldRecord {
    pub fn new(label: impl Into<String>, dim: usize, euler: i64, family: Family) -> Result<Self> {
        if !dim.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "manifold dimension must be even, got {dim}"
            )));
        }
        Ok(Self {
            label: label.into(),
            dim,
            euler,
            family,
        })
    }
}

/// The known manifolds of dimension at most `max_dim`, sorted by label:
/// the point, spheres S^{2k} (chi 2), real projective spaces RP^{2k} (chi 1),
/// complex projective CP^k from k = 2 (chi k+1), quaternionic HP^k from
/// k = 2 (chi k+1), the Cayley plane OP^2 at dimension 16 (chi 3), and the
/// Wallach/Eschenburg spaces W^6, E^6, W^12, W^24 (chi 6). Low members that
/// coincide with spheres (CP^1, HP^1, OP^1) are listed once, as spheres.
pub fn catalog(max_dim: usize) -> Vec<ManifoldRecord> {
    let mut out = vec![ManifoldRecord::new("pt", 0, 1, Family::Point).unwrap()];
    let mut dim = 2;
    while dim <= max_dim {
        out.push(ManifoldRecord::new(format!("S{dim}"), dim, 2, Family::Sphere).unwrap());
        out.push(ManifoldRecord::new(format!("RP{dim}"), dim, 1, Family::RealProjective).unwrap());
        dim += 2;
    }
    for k in 2..=(max_dim / 2).max(1) {
        if 2 * k <= max_dim {
            out.push(
                ManifoldRecord::new(
                    format!("CP{k}"),
                    2 * k,
                    k as i64 + 1,
                    Family::ComplexProjective,
                )
                .unwrap(),
            );
        }
    }
    for k in 2..=(max_dim / 4).max(1) {
        if 4 * k <= max_dim {
            out.push(
                ManifoldRecord::new(
                    format!("HP{k}"),
                    4 * k,
                    k as i64 + 1,
                    Family::QuaternionicProjective,
                )
                .unwrap(),
            );
        }
    }
    if max_dim >= 16 {
        out.push(ManifoldRecord::new("OP2", 16, 3, Family::CayleyPlane).unwrap());
    }
    if max_dim >= 6 {
        out.push(ManifoldRecord::new("W6", 6, 6, Family::Wallach).unwrap());
        out.push(ManifoldRecord::new("E6", 6, 6, Family::Eschenburg).unwrap());
    }
    if max_dim >= 12 {
        out.push(ManifoldRecord::new("W12", 12, 6, Family::Wallach).unwrap());
    }
    if max_dim >= 24 {
        out.push(ManifoldRecord::new("W24", 24, 6, Family::Wallach).unwrap());
    }
    out.sort_by(|a, b| a.label.cmp(&b.label));
    out
}

/// Looks a label up in the catalog of dimension at most `max_dim`.
pub fn catalog_lookup(label: &str, max_dim: usize) -> Result<ManifoldRecord> {
    catalog(max_dim)
        .into_iter()
        .find(|m| m.label == label)
        .ok_or_else(|| Error::UnknownManifoldLabel(label.to_string()))
}

/// A candidate fixed-point set: components inside an ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointConfiguration {
    pub ambient_dim: usize,
    pub components: Vec<ManifoldRecord>,
}

impl FixedPointConfiguration {
    /// Components are sorted by label so that equal multisets compare equal.
    /// Every component must sit strictly below the ambient dimension;
    /// emptiness and codimension parity are left to `check_configuration`.
    pub fn new(ambient_dim: usize, mut components: Vec<ManifoldRecord>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::BadAmbientDimension(ambient_dim));
        }
        for c in &components {
            if c.dim >= ambient_dim {
                return Err(Error::ComponentTooLarge {
                    label: c.label.clone(),
                    dim: c.dim,
                    ambient: ambient_dim,
                });
            }
        }
        components.sort_by(|a, b| a.label.cmp(&b.label).then(a.dim.cmp(&b.dim)));
        Ok(Self {
            ambient_dim,
            components,
        })
    }

    /// Builds a configuration from catalog labels.
    pub fn from_labels(ambient_dim: usize, labels: &[&str]) -> Result<Self> {
        let components = labels
            .iter()
            .map(|l| catalog_lookup(l, ambient_dim))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient_dim, components)
    }

    /// The Lefschetz sum rule: the Euler characteristic the ambient manifold
    /// must have.
    pub fn implied_euler(&self) -> i64 {
        self.components.iter().map(|c| c.euler).sum()
    }

    pub fn labels(&self) -> Vec<String> {
        self.components.iter().map(|c| c.label.clone()).collect()
    }

    fn codim(&self, c: &ManifoldRecord) -> usize {
        self.ambient_dim - c.dim
    }

    fn codim_two_components(&self) -> Vec<&ManifoldRecord> {
        self.components
            .iter()
            .filter(|c| self.codim(c) == 2)
            .collect()
    }

    /// Exactly two isolated points, the discrete model of S^0.
    fn is_zero_sphere(&self) -> bool {
        self.components.len() == 2 && self.components.iter().all(|c| c.dim == 0)
    }
}

/// One failed check, naming the rule and the offending components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub members: Vec<String>,
}

/// Outcome of the four structural checks on a configuration.
#[derive(Debug, Clone, Serialize)]
pub struct ConstraintReport {
    pub berger_ok: bool,
    pub parity_ok: bool,
    pub frankel_ok: bool,
    pub gauss_bonnet_ok: bool,
    pub implied_euler: i64,
    pub violations: Vec<Violation>,
}

impl ConstraintReport {
    pub fn all_ok(&self) -> bool {
        self.berger_ok && self.parity_ok && self.frankel_ok && self.gauss_bonnet_ok
    }
}

/// Runs the structural checks: Berger (the fixed set of an isometric circle
/// action is non-empty), codimension parity, Frankel (two distinct totally
/// geodesic components satisfy dim N_k + dim N_l < dim M, strictly), and
/// Gauss-Bonnet-Chern (components of dimension at most 4 have positive Euler
/// characteristic). All findings are report content, never errors.
pub fn check_configuration(cfg: &FixedPointConfiguration) -> ConstraintReport {
    let mut violations = Vec::new();

    let berger_ok = !cfg.components.is_empty();
    if !berger_ok {
        violations.push(Violation {
            rule: "berger_nonempty".into(),
            members: vec![],
        });
    }

    let mut parity_ok = true;
    for c in &cfg.components {
        if !cfg.codim(c).is_multiple_of(2) {
            parity_ok = false;
            violations.push(Violation {
                rule: "even_codimension".into(),
                members: vec![c.label.clone()],
            });
        }
    }

    let mut frankel_ok = true;
    for i in 0..cfg.components.len() {
        for j in (i + 1)..cfg.components.len() {
            let (a, b) = (&cfg.components[i], &cfg.components[j]);
            if a.dim + b.dim >= cfg.ambient_dim {
                frankel_ok = false;
                violations.push(Violation {
                    rule: "frankel_dimension".into(),
                    members: vec![a.label.clone(), b.label.clone()],
                });
            }
        }
    }

    let mut gauss_bonnet_ok = true;
    for c in &cfg.components {
        if c.dim <= 4 && c.euler <= 0 {
            gauss_bonnet_ok = false;
            violations.push(Violation {
                rule: "gauss_bonnet_chern_positive".into(),
                members: vec![c.label.clone()],
            });
        }
    }

    ConstraintReport {
        berger_ok,
        parity_ok,
        frankel_ok,
        gauss_bonnet_ok,
        implied_euler: cfg.implied_euler(),
        violations,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    SphericalSpaceForm,
    ComplexProjective,
    Unconstrained,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub outcome: Outcome,
    pub reason: String,
}

/// The Grove-Searle rule table. A single codimension-2 component, or the
/// two-point set S^0, forces a spherical space form; a positive-dimensional
/// codimension-2 component plus exactly one point (the almost connected
/// case) forces complex projective space; anything else is unconstrained.
pub fn grove_searle_classify(cfg: &FixedPointConfiguration) -> Classification {
    if cfg.is_zero_sphere() {
        return Classification {
            outcome: Outcome::SphericalSpaceForm,
            reason: "fixed set S^0 (two points) forces a spherical space form: a sphere or \
                     real projective space in even dimensions, a lens space S^{2d+1}/Z_m in odd"
                .into(),
        };
    }
    if cfg.components.len() == 1 && cfg.codim(&cfg.components[0]) == 2 {
        return Classification {
            outcome: Outcome::SphericalSpaceForm,
            reason: "connected codimension-2 fixed set forces a spherical space form: a \
                     sphere or real projective space in even dimensions, a lens space \
                     S^{2d+1}/Z_m in odd"
                .into(),
        };
    }
    if cfg.components.len() == 2 {
        let (a, b) = (&cfg.components[0], &cfg.components[1]);
        let almost = |n1: &ManifoldRecord, p: &ManifoldRecord| {
            p.dim == 0 && n1.dim > 0 && cfg.codim(n1) == 2
        };
        if almost(a, b) || almost(b, a) {
            return Classification {
                outcome: Outcome::ComplexProjective,
                reason: "almost connected fixed set N + {p} with dim N > 0 and codimension 2 \
                         forces complex projective space"
                    .into(),
            };
        }
    }
    Classification {
        outcome: Outcome::Unconstrained,
        reason: "no Grove-Searle rule applies".into(),
    }
}

/// Consistency of a configuration with the Grove-Searle classification it
/// triggers. A codimension-2 component pins the ambient manifold to a
/// sphere, real projective space, or complex projective space, whose fixed
/// sets are constrained: spheres and RP carry chi at most 2, and the complex
/// projective target demands exactly one extra point with chi(N) = d.
/// Returns `None` when consistent, or the reason the configuration
/// contradicts the classification.
fn grove_searle_inconsistency(cfg: &FixedPointConfiguration) -> Option<String> {
    if cfg.is_zero_sphere() {
        return None; // S^0 inside a sphere: chi 2 matches
    }
    let codim2 = cfg.codim_two_components();
    if codim2.is_empty() {
        return None;
    }
    if codim2.len() > 1 {
        return Some("more than one codimension-2 component".into());
    }
    let n1 = codim2[0];
    let rest: Vec<&ManifoldRecord> = cfg
        .components
        .iter()
        .filter(|c| !std::ptr::eq(*c, n1))
        .collect();
    if rest.is_empty() {
        if n1.euler == 1 || n1.euler == 2 {
            None
        } else {
            Some(format!(
                "connected codimension-2 fixed set forces a sphere or real projective space, \
                 but chi({}) = {} is not 1 or 2",
                n1.label, n1.euler
            ))
        }
    } else if rest.len() == 1 && rest[0].dim == 0 && n1.dim > 0 {
        let d = (cfg.ambient_dim / 2) as i64;
        if n1.euler == d {
            None
        } else {
            Some(format!(
                "almost connected fixed set forces CP^{d} with chi(N) = {d}, but chi({}) = {}",
                n1.label, n1.euler
            ))
        }
    } else {
        Some(format!(
            "codimension-2 component {} admits no extra components beyond a single point",
            n1.label
        ))
    }
}

/// One enumerated configuration with everything the ledger knows about it.
#[derive(Debug, Clone, Serialize)]
pub struct EnumeratedConfiguration {
    pub components: Vec<String>,
    pub implied_euler: i64,
    pub classification: Classification,
    pub grove_searle_consistent: bool,
    pub inconsistency: Option<String>,
    /// Catalog manifolds of the ambient dimension whose Euler characteristic
    /// equals the implied one; empty when the closed-world catalog offers no
    /// target.
    pub ambient_targets: Vec<String>,
    pub admissible: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerationOptions {
    pub max_components: usize,
    pub budget: u64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            max_components: DEFAULT_MAX_COMPONENTS,
            budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

/// Enumerates every multiset of catalog components (sizes 1 through
/// `max_components`, dimensions below the ambient, even codimension) that
/// passes `check_configuration`, in deterministic order: component count
/// first, then lexicographic labels. Each entry carries the implied Euler
/// characteristic, the Grove-Searle classification and consistency verdict,
/// and the ambient catalog targets matching the implied characteristic.
/// `admissible` means: checks pass, Grove-Searle consistent, and at least
/// one ambient target exists.
pub fn enumerate_configurations(
    ambient_dim: usize,
    components: &[ManifoldRecord],
    options: &EnumerationOptions,
) -> Result<Vec<EnumeratedConfiguration>> {
    if ambient_dim == 0 || !ambient_dim.is_multiple_of(2) {
        return Err(Error::BadAmbientDimension(ambient_dim));
    }
    let mut pool: Vec<&ManifoldRecord> = components
        .iter()
        .filter(|c| c.dim < ambient_dim && (ambient_dim - c.dim).is_multiple_of(2))
        .collect();
    pool.sort_by(|a, b| a.label.cmp(&b.label));

    let targets: Vec<&ManifoldRecord> = {
        let mut t: Vec<&ManifoldRecord> =
            components.iter().filter(|c| c.dim == ambient_dim).collect();
        t.sort_by(|a, b| a.label.cmp(&b.label));
        t
    };
    // ambient targets may come from the caller's pool bound; extend with the
    // standard catalog at the ambient dimension so the sum rule always has
    // the full closed world to match against
    let standard_targets: Vec<ManifoldRecord> = catalog(ambient_dim)
        .into_iter()
        .filter(|c| c.dim == ambient_dim)
        .collect();

    let mut budget = options.budget;
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for size in 1..=options.max_components {
        enumerate_multisets(
            ambient_dim,
            &pool,
            size,
            0,
            &mut stack,
            &mut budget,
            &mut out,
        )?;
    }

    let mut entries = Vec::with_capacity(out.len());
    for cfg in out {
        let report = check_configuration(&cfg);
        if !report.all_ok() {
            continue;
        }
        let implied = report.implied_euler;
        let classification = grove_searle_classify(&cfg);
        let inconsistency = grove_searle_inconsistency(&cfg);
        let mut ambient_targets: Vec<String> = targets
            .iter()
            .filter(|t| t.euler == implied)
            .map(|t| t.label.clone())
            .chain(
                standard_targets
                    .iter()
                    .filter(|t| t.euler == implied)
                    .map(|t| t.label.clone()),
            )
            .collect();
        ambient_targets.sort();
        ambient_targets.dedup();
        let admissible = inconsistency.is_none() && !ambient_targets.is_empty();
        entries.push(EnumeratedConfiguration {
            components: cfg.labels(),
            implied_euler: implied,
            grove_searle_consistent: inconsistency.is_none(),
            inconsistency,
            classification,
            ambient_targets,
            admissible,
        });
    }
    Ok(entries)
}

fn enumerate_multisets(
    ambient_dim: usize,
    pool: &[&ManifoldRecord],
    size: usize,
    start: usize,
    stack: &mut Vec<usize>,
    budget: &mut u64,
    out: &mut Vec<FixedPointConfiguration>,
) -> Result<()> {
    if stack.len() == size {
        let components = stack.iter().map(|&i| pool[i].clone()).collect();
        out.push(FixedPointConfiguration::new(ambient_dim, components)?);
        return Ok(());
    }
    for i in start..pool.len() {
        if *budget == 0 {
            return Err(Error::AmbientDimTooLarge {
                ambient: ambient_dim,
                budget: 0,
            });
        }
        *budget -= 1;
        // Frankel pruning: a pair already violating the strict bound can
        // never be repaired by adding components
        if stack
            .iter()
            .any(|&j| pool[j].dim + pool[i].dim >= ambient_dim)
        {
            continue;
        }
        stack.push(i);
        enumerate_multisets(ambient_dim, pool, size, i, stack, budget, out)?;
        stack.pop();
    }
    Ok(())
}

/// A configuration shape whose Euler-characteristic positivity is not forced
/// by any rule in the ledger.
#[derive(Debug, Clone, Serialize)]
pub struct GapEntry {
    pub component_dim: usize,
    pub codimension: usize,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    pub ambient_dim: usize,
    pub entries: Vec<GapEntry>,
}

impl GapReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// With the catalog disabled for dimensions 6 and up, which component
/// dimensions escape both Gauss-Bonnet-Chern (dimension at most 4) and
/// Grove-Searle (codimension 2)? Each uncovered dimension is reported with
/// its minimal witness, a single component of that dimension and unknown
/// Euler characteristic. Empty for ambient dimension at most 8.
pub fn hopf_gap_report(ambient_dim: usize) -> Result<GapReport> {
    if ambient_dim == 0 || !ambient_dim.is_multiple_of(2) {
        return Err(Error::BadAmbientDimension(ambient_dim));
    }
    let mut entries = Vec::new();
    let mut dim = 6;
    while dim + 2 <= ambient_dim {
        let codim = ambient_dim - dim;
        if codim != 2 {
            entries.push(GapEntry {
                component_dim: dim,
                codimension: codim,
                note: format!(
                    "a single {dim}-dimensional component: Gauss-Bonnet-Chern stops at \
                     dimension 4 and Grove-Searle needs codimension 2, so chi > 0 is not \
                     forced"
                ),
            });
        }
        dim += 2;
    }
    Ok(GapReport {
        ambient_dim,
        entries,
    })
}
