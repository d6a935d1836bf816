//! Boundary operators, the Dirac operator, Hodge Laplacians, Betti numbers,
//! spectra, and heat super traces.
//!
//! All combinatorial matrices are integer-valued and exact; the spectral side
//! goes through a dense symmetric eigendecomposition. Betti numbers are
//! computed twice, once by exact rational ranks and once as numerical kernel
//! dimensions, and the two paths are required to agree.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exact::rational_rank;

/// Relative zero threshold for eigenvalues: anything below
/// `RELATIVE_ZERO_TOL * max(1, lambda_max)` counts as kernel.
pub const RELATIVE_ZERO_TOL: f64 = 1e-9;

const EIGEN_MAX_ITER: usize = 10_000;

/// Signed incidence matrix of degree k, mapping k-chains to (k-1)-chains.
///
/// Entry (face, simplex) is (-1)^i when the face is the simplex with its i-th
/// smallest vertex removed; rows and columns follow the canonical simplex
/// order of the complex.
#[derive(Debug, Clone)]
pub struct BoundaryOperator {
    pub k: usize,
    pub matrix: DMatrix<i64>,
}

/// The per-degree blocks H_k of the Hodge Laplacian, together with the full
/// operator assembled as the square of the Dirac matrix.
#[derive(Debug, Clone)]
pub struct HodgeLaplacian {
    blocks: Vec<DMatrix<i64>>,
    total: DMatrix<i64>,
}

/// Eigenvalues of one Laplacian block, sorted ascending, with the count of
/// numerically-zero eigenvalues.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SpectralData {
    pub degree: usize,
    pub eigenvalues: Vec<f64>,
    pub kernel_dim: usize,
}

/// Betti numbers b_0..b_d computed over exact rational arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct BettiVector {
    pub b: Vec<usize>,
}

impl BettiVector {
    /// Alternating sum of the Betti numbers; equals the Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.b
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Result of comparing the positive spectrum on even-degree forms against the
/// positive spectrum on odd-degree forms.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SupersymmetryReport {
    pub even: Vec<f64>,
    pub odd: Vec<f64>,
    pub pairs: Vec<(f64, f64)>,
    pub unmatched_even: Vec<f64>,
    pub unmatched_odd: Vec<f64>,
    pub max_pair_gap: f64,
    pub matched: bool,
}

pub fn boundary_matrix(k: &SimplicialComplex, degree: usize) -> Result<BoundaryOperator> {
    if degree < 1 || degree > k.dim() {
        return Err(Error::DegreeOutOfRange {
            degree,
            dim: k.dim(),
        });
    }
    let rows = k.simplices_of_dim(degree - 1);
    let cols = k.simplices_of_dim(degree);
    let mut m = DMatrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        for (i, face) in s.facets().iter().enumerate() {
            let row = k.position(face).expect("complex is closed under faces");
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m[(row, j)] = sign;
        }
    }
    Ok(BoundaryOperator {
        k: degree,
        matrix: m,
    })
}

/// The Dirac operator d + d* on the direct sum of all form degrees, as one
/// symmetric integer matrix of side `sum(f_k)`.
pub fn dirac(k: &SimplicialComplex) -> DMatrix<i64> {
    let sizes = k.f_vector();
    let offsets = block_offsets(&sizes);
    let n = *offsets.last().unwrap();
    let mut d = DMatrix::zeros(n, n);
    for degree in 1..=k.dim() {
        let b = boundary_matrix(k, degree).expect("degree in range").matrix;
        let (r0, c0) = (offsets[degree - 1], offsets[degree]);
        for i in 0..b.nrows() {
            for j in 0..b.ncols() {
                d[(r0 + i, c0 + j)] = b[(i, j)];
                d[(c0 + j, r0 + i)] = b[(i, j)];
            }
        }
    }
    d
}

pub fn hodge_laplacian(k: &SimplicialComplex) -> HodgeLaplacian {
    let d = dirac(k);
    let total = &d * &d;
    let sizes = k.f_vector();
    let offsets = block_offsets(&sizes);
    let mut blocks = Vec::with_capacity(sizes.len());
    for degree in 0..sizes.len() {
        let n = sizes[degree];
        let mut block = DMatrix::zeros(n, n);
        if degree >= 1 {
            let b = boundary_matrix(k, degree).unwrap().matrix;
            block += b.transpose() * &b;
        }
        if degree + 1 < sizes.len() {
            let b = boundary_matrix(k, degree + 1).unwrap().matrix;
            block += &b * b.transpose();
        }
        let o = offsets[degree];
        debug_assert_eq!(block, total.view((o, o), (n, n)).into_owned());
        blocks.push(block);
    }
    HodgeLaplacian { blocks, total }
}

impl HodgeLaplacian {
    pub fn degree_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, degree: usize) -> &DMatrix<i64> {
        &self.blocks[degree]
    }

    pub fn blocks(&self) -> &[DMatrix<i64>] {
        &self.blocks
    }

    /// The full operator D^2 on the direct sum of all degrees.
    pub fn total(&self) -> &DMatrix<i64> {
        &self.total
    }

    /// Super trace of the p-th power of the full Laplacian, exactly in
    /// integer arithmetic. Zero for every p >= 1.
    pub fn supertrace_power(&self, p: u32) -> i64 {
        let n = self.total.nrows();
        let mut power = DMatrix::<i64>::identity(n, n);
        for _ in 0..p {
            power = &power * &self.total;
        }
        let sizes: Vec<usize> = self.blocks.iter().map(|b| b.nrows()).collect();
        let offsets = block_offsets(&sizes);
        let mut s = 0i64;
        for (degree, &size) in sizes.iter().enumerate() {
            let sign = if degree % 2 == 0 { 1 } else { -1 };
            for i in 0..size {
                s += sign * power[(offsets[degree] + i, offsets[degree] + i)];
            }
        }
        s
    }
}

pub(crate) fn block_offsets(sizes: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(sizes.len() + 1);
    let mut acc = 0;
    offsets.push(0);
    for &s in sizes {
        acc += s;
        offsets.push(acc);
    }
    offsets
}

/// Eigendecomposition of a symmetric integer matrix, eigenvalues ascending.
pub(crate) fn symmetric_eigen(m: &DMatrix<i64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let mf = m.map(|x| x as f64);
    if mf.nrows() == 0 {
        return Ok((Vec::new(), DMatrix::zeros(0, 0)));
    }
    let eig = SymmetricEigen::try_new(mf, f64::EPSILON, EIGEN_MAX_ITER)
        .ok_or_else(|| Error::EigensolverFailure("symmetric QR did not converge".into()))?;
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(eig.eigenvectors.nrows(), order.len(), |r, c| {
        eig.eigenvectors[(r, order[c])]
    });
    Ok((values, vectors))
}

pub(crate) fn zero_threshold(eigenvalues: &[f64]) -> f64 {
    let max = eigenvalues.iter().copied().fold(0.0f64, f64::max);
    RELATIVE_ZERO_TOL * max.max(1.0)
}

/// Exact Betti numbers via rational ranks of the boundary matrices:
/// b_k = f_k - rank d_k - rank d_{k+1}.
pub fn betti(k: &SimplicialComplex) -> BettiVector {
    let f = k.f_vector();
    let ranks: Vec<usize> = (1..=k.dim())
        .map(|deg| rational_rank(&boundary_matrix(k, deg).unwrap().matrix))
        .collect();
    let rank_at = |deg: usize| -> usize {
        if deg >= 1 && deg <= k.dim() {
            ranks[deg - 1]
        } else {
            0
        }
    };
    let b = (0..=k.dim())
        .map(|deg| f[deg] - rank_at(deg) - rank_at(deg + 1))
        .collect();
    BettiVector { b }
}

/// Eigenvalues of the degree-k Laplacian block. The numerically identified
/// kernel dimension is cross-checked against the exact Betti number; a
/// mismatch is reported as an eigensolver failure rather than silently
/// trusted.
pub fn spectrum(k: &SimplicialComplex, degree: usize) -> Result<SpectralData> {
    if degree > k.dim() {
        return Err(Error::DegreeOutOfRange {
            degree,
            dim: k.dim(),
        });
    }
    let h = hodge_laplacian(k);
    let (values, _) = symmetric_eigen(h.block(degree))?;
    let thresh = zero_threshold(&values);
    let kernel_dim = values.iter().filter(|&&v| v < thresh).count();
    let exact = betti(k).b[degree];
    if kernel_dim != exact {
        return Err(Error::EigensolverFailure(format!(
            "kernel dimension {kernel_dim} of H_{degree} disagrees with exact Betti number {exact}"
        )));
    }
    Ok(SpectralData {
        degree,
        eigenvalues: values,
        kernel_dim,
    })
}

/// The heat super trace sum_k (-1)^k tr(exp(-t H_k)). Independent of t and
/// equal to the Euler characteristic; at t = 0 the sum is evaluated exactly
/// as the alternating f-vector sum.
pub fn heat_supertrace(k: &SimplicialComplex, t: f64) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::NegativeHeatTime(t));
    }
    if t == 0.0 {
        return Ok(k.euler_characteristic() as f64);
    }
    let h = hodge_laplacian(k);
    let mut total = 0.0;
    for (degree, block) in h.blocks().iter().enumerate() {
        let (values, _) = symmetric_eigen(block)?;
        let sign = if degree % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * values.iter().map(|&l| (-t * l).exp()).sum::<f64>();
    }
    Ok(total)
}

/// Compares the positive even-degree spectrum against the positive odd-degree
/// spectrum as sorted multisets. A mismatch is a verdict, not an error.
pub fn supersymmetry_check(k: &SimplicialComplex, tol: f64) -> Result<SupersymmetryReport> {
    let h = hodge_laplacian(k);
    let mut all = Vec::new();
    let mut per_degree = Vec::new();
    for block in h.blocks() {
        let (values, _) = symmetric_eigen(block)?;
        all.extend_from_slice(&values);
        per_degree.push(values);
    }
    let thresh = zero_threshold(&all);
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (degree, values) in per_degree.into_iter().enumerate() {
        let target = if degree % 2 == 0 { &mut even } else { &mut odd };
        target.extend(values.into_iter().filter(|&v| v >= thresh));
    }
    even.sort_by(f64::total_cmp);
    odd.sort_by(f64::total_cmp);

    let paired = even.len().min(odd.len());
    let pairs: Vec<(f64, f64)> = even[..paired]
        .iter()
        .zip(&odd[..paired])
        .map(|(&a, &b)| (a, b))
        .collect();
    let max_pair_gap = pairs
        .iter()
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    let matched = even.len() == odd.len() && max_pair_gap <= tol;
    Ok(SupersymmetryReport {
        unmatched_even: even[paired..].to_vec(),
        unmatched_odd: odd[paired..].to_vec(),
        even,
        odd,
        pairs,
        max_pair_gap,
        matched,
    })
}
