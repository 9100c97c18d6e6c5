//! Dense complex linear algebra helpers.
//!
//! Complex matrix products are dispatched as four real GEMM calls on strided
//! views of the interleaved `Complex` storage; this is what keeps the cascade
//! and sweep loops fast enough for paper-scale runs on one core.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::scalar::{Real, C};

/// Column-major strided real view (re or im lane) of a complex matrix.
struct Lane<R> {
    ptr: *const R,
    rs: isize,
    cs: isize,
}

fn lane<R: Real>(m: &DMatrix<C<R>>, imag: bool) -> Lane<R> {
    let base = m.as_slice().as_ptr() as *const R;
    Lane {
        // Complex<R> is repr(C): re at offset 0, im at offset 1.
        ptr: unsafe { base.offset(imag as isize) },
        rs: 2,
        cs: 2 * m.nrows() as isize,
    }
}

fn lane_mut<R: Real>(m: &mut DMatrix<C<R>>, imag: bool) -> *mut R {
    let base = m.as_mut_slice().as_mut_ptr() as *mut R;
    unsafe { base.offset(imag as isize) }
}

/// `a * b` for dense complex matrices.
pub fn cmul<R: Real>(a: &DMatrix<C<R>>, b: &DMatrix<C<R>>) -> DMatrix<C<R>> {
    complex_gemm(a, b, false)
}

/// `a * b.adjoint()` without materializing the adjoint.
pub fn cmul_adj<R: Real>(a: &DMatrix<C<R>>, b: &DMatrix<C<R>>) -> DMatrix<C<R>> {
    complex_gemm(a, b, true)
}

/// `v * rho * v.adjoint()`, the conditional-map update on a density matrix.
pub fn sandwich<R: Real>(v: &DMatrix<C<R>>, rho: &DMatrix<C<R>>) -> DMatrix<C<R>> {
    cmul_adj(&cmul(v, rho), v)
}

fn complex_gemm<R: Real>(a: &DMatrix<C<R>>, b: &DMatrix<C<R>>, adjoint_b: bool) -> DMatrix<C<R>> {
    let (m, k) = (a.nrows(), a.ncols());
    let (n, ok) = if adjoint_b {
        (b.nrows(), k == b.ncols())
    } else {
        (b.ncols(), k == b.nrows())
    };
    assert!(ok, "complex_gemm: dimension mismatch");

    let mut out = DMatrix::<C<R>>::zeros(m, n);
    let ar = lane(a, false);
    let ai = lane(a, true);
    let mut br = lane(b, false);
    let mut bi = lane(b, true);
    if adjoint_b {
        std::mem::swap(&mut br.rs, &mut br.cs);
        std::mem::swap(&mut bi.rs, &mut bi.cs);
    }
    // conj(b) flips the sign of the imaginary lane; fold it into alpha.
    let s = if adjoint_b { -R::one() } else { R::one() };
    let one = R::one();
    let zero = R::zero();
    let (crs, ccs) = (2, 2 * m as isize);
    let cr = lane_mut(&mut out, false);
    let ci = lane_mut(&mut out, true);
    unsafe {
        // re(out) = re(a) re(b') - im(a) (s * im(b'))
        R::gemm(m, k, n, one, ar.ptr, ar.rs, ar.cs, br.ptr, br.rs, br.cs, zero, cr, crs, ccs);
        R::gemm(m, k, n, -s, ai.ptr, ai.rs, ai.cs, bi.ptr, bi.rs, bi.cs, one, cr, crs, ccs);
        // im(out) = re(a) (s * im(b')) + im(a) re(b')
        R::gemm(m, k, n, s, ar.ptr, ar.rs, ar.cs, bi.ptr, bi.rs, bi.cs, zero, ci, crs, ccs);
        R::gemm(m, k, n, one, ai.ptr, ai.rs, ai.cs, br.ptr, br.rs, br.cs, one, ci, crs, ccs);
    }
    out
}

/// Eigendecomposition of a Hermitian matrix: real eigenvalues plus unitary
/// eigenvector matrix.
pub fn hermitian_eigen<R: Real>(h: DMatrix<C<R>>) -> (DVector<R>, DMatrix<C<R>>) {
    let eig = SymmetricEigen::new(h);
    (eig.eigenvalues, eig.eigenvectors)
}

/// `exp(g)` for anti-Hermitian `g`, via eigendecomposition of `i*g`.
///
/// The result is unitary up to eigensolver tolerance, which keeps repeated
/// conditional-map applications from drifting off the unit sphere.
pub fn exp_antihermitian<R: Real>(g: &DMatrix<C<R>>) -> DMatrix<C<R>> {
    let i = C::<R>::i();
    let h = g.map(|z| i * z);
    let (vals, vecs) = hermitian_eigen(h);
    unitary_from_eigen(&vals, &vecs, R::one())
}

/// Assemble `Q exp(-i * scale * diag(vals)) Q^dag` from a Hermitian
/// eigendecomposition. One decomposition serves every evolution time.
pub fn unitary_from_eigen<R: Real>(
    vals: &DVector<R>,
    vecs: &DMatrix<C<R>>,
    scale: R,
) -> DMatrix<C<R>> {
    let n = vals.len();
    let mut scaled = vecs.clone();
    for j in 0..n {
        let phase = -scale * vals[j];
        let f = C::new(phase.cos(), phase.sin());
        for i in 0..n {
            scaled[(i, j)] *= f;
        }
    }
    cmul_adj(&scaled, vecs)
}

/// Largest magnitude over all matrix elements.
pub fn max_abs<R: Real>(m: &DMatrix<C<R>>) -> R {
    m.iter()
        .map(|z| z.norm())
        .fold(R::zero(), |acc, v| if v > acc { v } else { acc })
}

/// Largest magnitude of `a - b` over the interior block, i.e. skipping the
/// top `margin` rows and columns where truncation artifacts live.
pub fn interior_max_abs_diff<R: Real>(
    a: &DMatrix<C<R>>,
    b: &DMatrix<C<R>>,
    margin: usize,
) -> R {
    assert_eq!(a.shape(), b.shape());
    let lim = a.nrows().saturating_sub(margin);
    let mut best = R::zero();
    for j in 0..lim {
        for i in 0..lim {
            let v = (a[(i, j)] - b[(i, j)]).norm();
            if v > best {
                best = v;
            }
        }
    }
    best
}

/// Operator (spectral) norm, computed as sqrt of the top eigenvalue of
/// `m^dag m`.
pub fn op_norm<R: Real>(m: &DMatrix<C<R>>) -> R {
    let gram = cmul(&m.adjoint(), m);
    let (vals, _) = hermitian_eigen(gram);
    let top = vals.iter().fold(R::zero(), |a, &v| if v > a { v } else { a });
    top.max(R::zero()).sqrt()
}

/// `(m + m^dag) / 2`: re-Hermitize a density matrix after float roundoff.
pub fn hermitize<R: Real>(m: &DMatrix<C<R>>) -> DMatrix<C<R>> {
    let half = crate::scalar::r::<R>(0.5);
    (m + m.adjoint()).map(|z| z.scale(half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    fn rand_matrix(n: usize, seed: u64) -> DMatrix<C<f64>> {
        // cheap deterministic LCG fill; good enough for algebra checks
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        let mut next = move || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (s >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        DMatrix::from_fn(n, n, |_, _| c(next(), next()))
    }

    #[test]
    fn cmul_matches_nalgebra() {
        let a = rand_matrix(17, 1);
        let b = rand_matrix(17, 2);
        let fast = cmul(&a, &b);
        let slow = &a * &b;
        assert!(max_abs(&(&fast - &slow)) < 1e-13);
    }

    #[test]
    fn cmul_adj_matches_nalgebra() {
        let a = rand_matrix(13, 3);
        let b = rand_matrix(13, 4);
        let fast = cmul_adj(&a, &b);
        let slow = &a * b.adjoint();
        assert!(max_abs(&(&fast - &slow)) < 1e-13);
    }

    #[test]
    fn exp_antihermitian_is_unitary() {
        let m = rand_matrix(24, 5);
        let g = &m - m.adjoint(); // anti-Hermitian by construction
        let u = exp_antihermitian(&g);
        let dev = &cmul_adj(&u, &u) - DMatrix::<C<f64>>::identity(24, 24);
        assert!(max_abs(&dev) < 1e-12);
    }

    #[test]
    fn op_norm_of_unitary_is_one() {
        let m = rand_matrix(16, 7);
        let g = &m - m.adjoint();
        let u = exp_antihermitian(&g);
        assert!((op_norm(&u) - 1.0).abs() < 1e-12);
    }
}
