//! Small dense linear-algebra helpers shared by every module.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

/// Max entrywise absolute value.
pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |a, x| a.max(x.abs()))
}

/// Max deviation of `bᵀb` from the identity.
pub fn gram_residual(basis: &DMatrix<f64>) -> f64 {
    let k = basis.ncols();
    let gram = basis.transpose() * basis;
    max_abs(&(gram - DMatrix::identity(k, k)))
}

/// Modified Gram–Schmidt with column rejection below `threshold`.
///
/// Returns the orthonormal columns that survive, in input order.
pub fn orthonormalize(cols: &DMatrix<f64>, threshold: f64) -> DMatrix<f64> {
    let n = cols.nrows();
    let mut kept: Vec<DVector<f64>> = Vec::new();
    for j in 0..cols.ncols() {
        let mut v = cols.column(j).into_owned();
        for _ in 0..2 {
            for u in &kept {
                let d = u.dot(&v);
                v -= u * d;
            }
        }
        let norm = v.norm();
        if norm > threshold {
            kept.push(v / norm);
        }
    }
    DMatrix::from_columns(&kept.iter().map(|v| v.as_view()).collect::<Vec<_>>())
}

/// Orthonormal basis of the orthogonal complement of the (orthonormal) columns
/// of `basis`. Deterministic: coordinate axes are projected out in order.
pub fn complete_orthonormal_basis(basis: &DMatrix<f64>) -> DMatrix<f64> {
    let n = basis.nrows();
    let want = n - basis.ncols();
    let mut kept: Vec<DVector<f64>> = Vec::new();
    for axis in 0..n {
        if kept.len() == want {
            break;
        }
        let mut v = DVector::zeros(n);
        v[axis] = 1.0;
        for _ in 0..2 {
            let coeff = basis.transpose() * &v;
            v -= basis * coeff;
            for u in &kept {
                let d = u.dot(&v);
                v -= u * d;
            }
        }
        let norm = v.norm();
        if norm > 1e-8 {
            kept.push(v / norm);
        }
    }
    assert_eq!(kept.len(), want, "complement construction fell short");
    DMatrix::from_columns(&kept.iter().map(|v| v.as_view()).collect::<Vec<_>>())
}

/// Rank-revealing orthonormal span of a vector collection (columns of `m`).
pub fn span_basis(m: &DMatrix<f64>, threshold: f64) -> DMatrix<f64> {
    orthonormalize(m, threshold)
}

/// Principal angles (radians, ascending) between two column-orthonormal bases.
pub fn principal_angles(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Vec<f64> {
    if a.ncols() == 0 || b.ncols() == 0 {
        return Vec::new();
    }
    let prod = a.transpose() * b;
    let svd = prod.svd(false, false);
    let mut angles: Vec<f64> = svd
        .singular_values
        .iter()
        .map(|s| s.min(1.0).max(-1.0).acos())
        .collect();
    angles.sort_by(|x, y| x.partial_cmp(y).unwrap());
    angles
}

/// Subspace equality up to `tol` on principal angles (dimensions must agree).
pub fn subspaces_equal(a: &DMatrix<f64>, b: &DMatrix<f64>, tol: f64) -> bool {
    if a.ncols() != b.ncols() {
        return false;
    }
    principal_angles(a, b).iter().all(|t| *t <= tol)
}

/// Orthonormal basis of the common kernel of a family of matrices, obtained
/// from the SVD of their vertical stack. `threshold` is the singular-value
/// cutoff for rank decisions.
pub fn common_kernel(mats: &[DMatrix<f64>], n: usize, threshold: f64) -> DMatrix<f64> {
    if mats.is_empty() {
        return DMatrix::identity(n, n);
    }
    let rows: usize = mats.iter().map(|m| m.nrows()).sum();
    let mut stacked = DMatrix::zeros(rows, n);
    let mut at = 0;
    for m in mats {
        stacked.view_mut((at, 0), (m.nrows(), n)).copy_from(m);
        at += m.nrows();
    }
    let svd = stacked.svd(false, true);
    let vt = svd.v_t.expect("svd requested v_t");
    let mut kernel_cols: Vec<DVector<f64>> = Vec::new();
    for i in 0..n {
        let sv = if i < svd.singular_values.len() {
            svd.singular_values[i]
        } else {
            0.0
        };
        if sv <= threshold {
            kernel_cols.push(vt.row(i).transpose());
        }
    }
    if kernel_cols.is_empty() {
        return DMatrix::zeros(n, 0);
    }
    DMatrix::from_columns(&kernel_cols.iter().map(|v| v.as_view()).collect::<Vec<_>>())
}

/// Symmetric eigendecomposition sorted by descending eigenvalue with stable
/// tie-breaking on the original index.
pub fn sym_eigen_sorted(m: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let eig = m.clone().symmetric_eigen();
    let mut idx: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    idx.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    let values: Vec<f64> = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_columns(
        &idx.iter()
            .map(|&i| eig.eigenvectors.column(i))
            .collect::<Vec<_>>(),
    );
    (values, vectors)
}

/// Smallest eigenvalue of a symmetric matrix. Closed forms for orders 1 and 2.
pub fn lambda_min_sym(m: &DMatrix<f64>) -> f64 {
    match m.nrows() {
        0 => 0.0,
        1 => m[(0, 0)],
        2 => {
            let (a, b, c) = (m[(0, 0)], m[(0, 1)], m[(1, 1)]);
            let tr = a + c;
            let disc = ((a - c) * (a - c) + 4.0 * b * b).max(0.0).sqrt();
            0.5 * (tr - disc)
        }
        _ => {
            let eig = m.clone().symmetric_eigen();
            eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
        }
    }
}

/// Gaussian matrix with independent standard-normal entries (column major
/// fill, deterministic for a given RNG state).
pub fn gaussian_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(rows, cols);
    for j in 0..cols {
        for i in 0..rows {
            m[(i, j)] = rng.sample(StandardNormal);
        }
    }
    m
}

/// Haar-ish random column-orthonormal `n×k` matrix (Gaussian + Gram–Schmidt).
pub fn random_orthonormal<R: Rng>(rng: &mut R, n: usize, k: usize) -> DMatrix<f64> {
    loop {
        let g = gaussian_matrix(rng, n, k);
        let q = orthonormalize(&g, 1e-8);
        if q.ncols() == k {
            return q;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn complement_is_orthonormal_and_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let b = random_orthonormal(&mut rng, 8, 3);
        let c = complete_orthonormal_basis(&b);
        assert_eq!(c.ncols(), 5);
        assert!(gram_residual(&c) < 1e-12);
        assert!(max_abs(&(b.transpose() * &c)) < 1e-12);
    }

    #[test]
    fn common_kernel_finds_shared_null_direction() {
        // Two 3×3 matrices whose last column/row vanish share span{e3}.
        let a = DMatrix::from_row_slice(3, 3, &[1.0, 2.0, 0.0, 2.0, 5.0, 0.0, 0.0, 0.0, 0.0]);
        let b = DMatrix::from_row_slice(3, 3, &[0.5, 0.0, 0.0, 0.0, 1.5, 0.0, 0.0, 0.0, 0.0]);
        let k = common_kernel(&[a, b], 3, 1e-10);
        assert_eq!(k.ncols(), 1);
        assert!((k[(2, 0)].abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sorted_eigen_is_descending_and_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = gaussian_matrix(&mut rng, 5, 5);
        let s = (&g + g.transpose()) * 0.5;
        let (vals, vecs) = sym_eigen_sorted(&s);
        for w in vals.windows(2) {
            assert!(w[0] >= w[1]);
        }
        let d = DMatrix::from_diagonal(&DVector::from_vec(vals.clone()));
        let rebuilt = &vecs * d * vecs.transpose();
        assert!(max_abs(&(rebuilt - &s)) < 1e-10);
        assert!((lambda_min_sym(&s) - vals[vals.len() - 1]).abs() < 1e-10);
    }

    #[test]
    fn principal_angles_detect_equality() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_orthonormal(&mut rng, 6, 2);
        // Same span, rotated basis.
        let rot = DMatrix::from_row_slice(2, 2, &[0.6, -0.8, 0.8, 0.6]);
        let b = &a * rot;
        assert!(subspaces_equal(&a, &b, 1e-10));
        let c = random_orthonormal(&mut rng, 6, 2);
        assert!(!subspaces_equal(&a, &c, 1e-6));
    }
}
