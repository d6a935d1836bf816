//! Simplicial automorphisms, the signed permutation matrices they induce on
//! forms, Lefschetz numbers, fixed-point indices, and the heat-interpolation
//! path connecting the two.
//!
//! Three independent computations of the same integer are kept side by side:
//! the super trace of the induced map on harmonic forms, the combinatorial
//! sum of fixed-simplex indices, and the heat value str(exp(-tH) U_T) at each
//! point of a t-grid. A verification report records all three and whether
//! they agree.

use nalgebra::DMatrix;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hodge::{hodge_laplacian, symmetric_eigen, zero_threshold};

/// Default cap on the vertex count for exhaustive automorphism search.
pub const DEFAULT_VERTEX_CAP: usize = 12;

/// Default evaluation grid for heat interpolation and flatness checks.
pub const DEFAULT_T_GRID: [f64; 5] = [0.0, 0.1, 1.0, 5.0, 20.0];

/// Default tolerance for heat-value agreement.
pub const DEFAULT_TOL: f64 = 1e-8;

/// A vertex permutation that maps every simplex of its complex to a simplex.
///
/// Instances are only produced by validating constructors and are tied to the
/// complex they were validated against; every consuming operation re-checks
/// at least the vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    perm: Vec<usize>,
}

impl Automorphism {
    /// Validates `perm` as a simplicial automorphism of `k`: it must be a
    /// bijection on vertex ids under which the image of every simplex is
    /// again a simplex.
    pub fn from_vertex_map(k: &SimplicialComplex, perm: Vec<usize>) -> Result<Self> {
        let n = k.vertex_count();
        if perm.len() != n {
            return Err(Error::NotPermutation { perm, n });
        }
        let mut seen = vec![false; n];
        for &img in &perm {
            if img >= n || seen[img] {
                return Err(Error::NotPermutation { perm, n });
            }
            seen[img] = true;
        }
        for s in k.simplices() {
            if s.dim() == 0 {
                continue;
            }
            let mut image: Vec<usize> = s.vertices().iter().map(|&v| perm[v]).collect();
            image.sort_unstable();
            if !k.contains(&Simplex::new(image).expect("image of distinct vertices")) {
                return Err(Error::NotSimplicial(s.vertices().to_vec()));
            }
        }
        Ok(Self { perm })
    }

    pub fn identity(k: &SimplicialComplex) -> Self {
        Self {
            perm: (0..k.vertex_count()).collect(),
        }
    }

    /// One-line notation: the image of vertex v at position v.
    pub fn vertex_map(&self) -> &[usize] {
        &self.perm
    }

    pub fn image_of(&self, v: usize) -> usize {
        self.perm[v]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (v, &img) in self.perm.iter().enumerate() {
            inv[img] = v;
        }
        Self { perm: inv }
    }

    /// The composite "self after other": v -> self(other(v)).
    pub fn compose(&self, other: &Self) -> Self {
        let perm = other.perm.iter().map(|&v| self.perm[v]).collect();
        Self { perm }
    }

    pub(crate) fn check_acts_on(&self, k: &SimplicialComplex) -> Result<()> {
        if self.perm.len() != k.vertex_count() {
            return Err(Error::InvalidAutomorphism {
                expected: self.perm.len(),
                actual: k.vertex_count(),
            });
        }
        Ok(())
    }

    /// Sorted image of a simplex together with the sign of the sort
    /// permutation.
    fn image_with_sign(&self, s: &Simplex) -> (Simplex, i64) {
        let raw: Vec<usize> = s.vertices().iter().map(|&v| self.perm[v]).collect();
        let mut sign = 1i64;
        let mut sorted = raw;
        // insertion sort, flipping the sign per inversion
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        (
            Simplex::new(sorted).expect("image of distinct vertices"),
            sign,
        )
    }
}

/// The signed permutation matrix induced on k-forms by an automorphism.
#[derive(Debug, Clone)]
pub struct InducedFormMap {
    pub degree: usize,
    pub matrix: DMatrix<i64>,
}

/// Outcome of running all three Lefschetz computations on one automorphism.
#[derive(Debug, Clone)]
pub struct LefschetzReport {
    pub lefschetz_number: i64,
    pub index_sum: i64,
    /// Fixed simplices (setwise) with their indices, in canonical order.
    pub indices: Vec<(Simplex, i64)>,
    pub heat_values: Vec<(f64, f64)>,
    pub verdict: bool,
}

/// Column j of the result carries the single entry +-1 of the sorted image of
/// the j-th k-simplex, with sign the signature of the sorting permutation.
pub fn induced_form_matrix(
    k: &SimplicialComplex,
    t: &Automorphism,
    degree: usize,
) -> Result<InducedFormMap> {
    t.check_acts_on(k)?;
    if degree > k.dim() {
        return Err(Error::DegreeOutOfRange {
            degree,
            dim: k.dim(),
        });
    }
    let simplices = k.simplices_of_dim(degree);
    let mut m = DMatrix::zeros(simplices.len(), simplices.len());
    for (j, s) in simplices.iter().enumerate() {
        let (image, sign) = t.image_with_sign(s);
        let row = k
            .position(&image)
            .ok_or_else(|| Error::NotSimplicial(s.vertices().to_vec()))?;
        m[(row, j)] = sign;
    }
    Ok(InducedFormMap { degree, matrix: m })
}

/// All simplicial automorphisms, found by backtracking over vertex images.
///
/// Vertices can only map to vertices with an identical star profile (count of
/// incident simplices per dimension), and partial assignments are pruned by
/// 1-skeleton adjacency before the full simplex check. Results come out
/// sorted by one-line notation.
pub fn automorphism_group(k: &SimplicialComplex, vertex_cap: usize) -> Result<Vec<Automorphism>> {
    let n = k.vertex_count();
    if n > vertex_cap {
        return Err(Error::TooManyVertices { n, cap: vertex_cap });
    }
    let profiles = k.star_profiles();
    let adj = k.adjacency();

    // simplices grouped by their largest vertex: checkable as soon as that
    // vertex is assigned
    let mut by_max: Vec<Vec<&Simplex>> = vec![Vec::new(); n];
    for s in k.simplices() {
        if s.dim() >= 2 {
            by_max[*s.vertices().last().unwrap()].push(s);
        }
    }

    let mut out = Vec::new();
    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(
        k,
        &profiles,
        &adj,
        &by_max,
        0,
        &mut assignment,
        &mut used,
        &mut out,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    k: &SimplicialComplex,
    profiles: &[Vec<usize>],
    adj: &[Vec<bool>],
    by_max: &[Vec<&Simplex>],
    v: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Automorphism>,
) {
    let n = assignment.len();
    if v == n {
        out.push(Automorphism {
            perm: assignment.clone(),
        });
        return;
    }
    'candidates: for img in 0..n {
        if used[img] || profiles[v] != profiles[img] {
            continue;
        }
        // adjacency must be preserved in both directions
        for u in 0..v {
            if adj[u][v] != adj[assignment[u]][img] {
                continue 'candidates;
            }
        }
        assignment[v] = img;
        // higher simplices whose vertices are now all assigned
        let ok = by_max[v].iter().all(|s| {
            let mut image: Vec<usize> = s.vertices().iter().map(|&w| assignment[w]).collect();
            image.sort_unstable();
            k.contains(&Simplex::new(image).expect("distinct images"))
        });
        if ok {
            used[img] = true;
            search(k, profiles, adj, by_max, v + 1, assignment, used, out);
            used[img] = false;
        }
        assignment[v] = usize::MAX;
    }
}

/// The Lefschetz number: super trace of the maps induced on harmonic forms,
/// computed by projecting the induced form map onto the numerically
/// identified kernel of each Laplacian block and rounding the result to the
/// nearest integer. A residual above `1e-6` signals numerical failure.
pub fn lefschetz_number(k: &SimplicialComplex, t: &Automorphism) -> Result<i64> {
    t.check_acts_on(k)?;
    let h = hodge_laplacian(k);
    let mut value = 0.0;
    for (degree, block) in h.blocks().iter().enumerate() {
        let (values, vectors) = symmetric_eigen(block)?;
        let thresh = zero_threshold(&values);
        let kernel_dim = values.iter().filter(|&&v| v < thresh).count();
        if kernel_dim == 0 {
            continue;
        }
        let u = induced_form_matrix(k, t, degree)?.matrix.map(|x| x as f64);
        let kernel = vectors.columns(0, kernel_dim);
        let projected = kernel.transpose() * &u * kernel;
        let sign = if degree % 2 == 0 { 1.0 } else { -1.0 };
        value += sign * projected.trace();
    }
    let rounded = value.round();
    if (value - rounded).abs() >= 1e-6 {
        return Err(Error::NonIntegerTrace(value, 1e-6));
    }
    Ok(rounded as i64)
}

/// Fixed simplices (setwise: the automorphism permutes their vertices) with
/// index weight(x) * sign(permutation induced on x), and the exact sum.
pub fn fixed_point_indices(
    k: &SimplicialComplex,
    t: &Automorphism,
) -> Result<(Vec<(Simplex, i64)>, i64)> {
    t.check_acts_on(k)?;
    let mut indices = Vec::new();
    let mut sum = 0i64;
    for s in k.simplices() {
        let (image, sign) = t.image_with_sign(s);
        if &image == s {
            let index = s.weight() * sign;
            sum += index;
            indices.push((s.clone(), index));
        }
    }
    Ok((indices, sum))
}

/// Super trace of the induced form maps, exactly in integer arithmetic.
/// Equals the fixed-point index sum: off-fixed simplices contribute zero
/// diagonal, fixed ones contribute their sign.
pub fn supertrace_induced(k: &SimplicialComplex, t: &Automorphism) -> Result<i64> {
    t.check_acts_on(k)?;
    let mut total = 0i64;
    for degree in 0..=k.dim() {
        let u = induced_form_matrix(k, t, degree)?.matrix;
        let sign = if degree % 2 == 0 { 1 } else { -1 };
        total += sign * u.diagonal().sum();
    }
    Ok(total)
}

/// Heat interpolation l(t) = sum_k (-1)^k tr(exp(-t H_k) U_T^k) over the
/// given grid. At t = 0 the value is the exact integer super trace of U_T;
/// for t > 0 it is evaluated through the eigendecomposition of each block.
pub fn heat_interpolation(
    k: &SimplicialComplex,
    t: &Automorphism,
    t_grid: &[f64],
) -> Result<Vec<(f64, f64)>> {
    t.check_acts_on(k)?;
    if let Some(&bad) = t_grid.iter().find(|&&x| x < 0.0) {
        return Err(Error::NegativeHeatTime(bad));
    }
    let h = hodge_laplacian(k);
    // per degree: eigenvalues and the induced map conjugated into the
    // eigenbasis, so each grid point is a weighted diagonal sum
    let mut per_degree = Vec::with_capacity(h.degree_count());
    for (degree, block) in h.blocks().iter().enumerate() {
        let (values, vectors) = symmetric_eigen(block)?;
        let u = induced_form_matrix(k, t, degree)?.matrix.map(|x| x as f64);
        let conjugated = vectors.transpose() * &u * &vectors;
        per_degree.push((values, conjugated));
    }
    let exact_at_zero = supertrace_induced(k, t)? as f64;
    let mut out = Vec::with_capacity(t_grid.len());
    for &time in t_grid {
        if time == 0.0 {
            out.push((time, exact_at_zero));
            continue;
        }
        let mut value = 0.0;
        for (degree, (values, conjugated)) in per_degree.iter().enumerate() {
            let sign = if degree % 2 == 0 { 1.0 } else { -1.0 };
            let mut tr = 0.0;
            for (i, &l) in values.iter().enumerate() {
                tr += (-time * l).exp() * conjugated[(i, i)];
            }
            value += sign * tr;
        }
        out.push((time, value));
    }
    Ok(out)
}

/// Runs all three computations and assembles the agreement verdict: the
/// harmonic super trace must equal the combinatorial index sum exactly, and
/// every heat value must sit within `tol` of the Lefschetz number.
pub fn verify_lefschetz(
    k: &SimplicialComplex,
    t: &Automorphism,
    t_grid: &[f64],
    tol: f64,
) -> Result<LefschetzReport> {
    let lefschetz_number = lefschetz_number(k, t)?;
    let (indices, index_sum) = fixed_point_indices(k, t)?;
    let heat_values = heat_interpolation(k, t, t_grid)?;
    let heat_ok = heat_values
        .iter()
        .all(|&(_, v)| (v - lefschetz_number as f64).abs() < tol);
    let verdict = lefschetz_number == index_sum && heat_ok;
    Ok(LefschetzReport {
        lefschetz_number,
        index_sum,
        indices,
        heat_values,
        verdict,
    })
}
