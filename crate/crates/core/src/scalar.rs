//! Scalar abstraction: the whole kernel is generic over the real float type.

use nalgebra::RealField;
use num_complex::Complex;
use num_traits::{FromPrimitive, ToPrimitive};

/// Real scalar the simulation runs on: `f32` or `f64`.
///
/// Everything numeric in this crate is parameterized over `Real`; the crate
/// root exports `f64` type aliases for ordinary use.
pub trait Real: RealField + FromPrimitive + ToPrimitive + Copy {
    /// Dense real matrix product, `c := alpha * a * b + beta * c`.
    ///
    /// Strides are in elements and may describe non-contiguous views (this is
    /// how complex products are dispatched as four real products).
    ///
    /// # Safety
    /// Pointers must describe valid `m x k`, `k x n`, `m x n` matrices with
    /// the given strides, and `c` must not alias `a` or `b`.
    #[allow(clippy::too_many_arguments)]
    unsafe fn gemm(
        m: usize,
        k: usize,
        n: usize,
        alpha: Self,
        a: *const Self,
        rsa: isize,
        csa: isize,
        b: *const Self,
        rsb: isize,
        csb: isize,
        beta: Self,
        c: *mut Self,
        rsc: isize,
        csc: isize,
    );
}

impl Real for f64 {
    unsafe fn gemm(
        m: usize,
        k: usize,
        n: usize,
        alpha: Self,
        a: *const Self,
        rsa: isize,
        csa: isize,
        b: *const Self,
        rsb: isize,
        csb: isize,
        beta: Self,
        c: *mut Self,
        rsc: isize,
        csc: isize,
    ) {
        matrixmultiply::dgemm(m, k, n, alpha, a, rsa, csa, b, rsb, csb, beta, c, rsc, csc);
    }
}

impl Real for f32 {
    unsafe fn gemm(
        m: usize,
        k: usize,
        n: usize,
        alpha: Self,
        a: *const Self,
        rsa: isize,
        csa: isize,
        b: *const Self,
        rsb: isize,
        csb: isize,
        beta: Self,
        c: *mut Self,
        rsc: isize,
        csc: isize,
    ) {
        matrixmultiply::sgemm(m, k, n, alpha, a, rsa, csa, b, rsb, csb, beta, c, rsc, csc);
    }
}

/// Complex scalar over a [`Real`].
pub type C<R> = Complex<R>;

/// Shorthand for lifting an `f64` literal into `R`.
#[inline]
pub fn r<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("literal not representable")
}

/// Shorthand for building a complex number from `f64` parts.
#[inline]
pub fn c<R: Real>(re: f64, im: f64) -> C<R> {
    Complex::new(r(re), r(im))
}
