//! Activation scalar abstraction.
//!
//! The engine runs with `f32` or `f64` activations. Reductions always
//! accumulate in `f64`, so the two modes share one code path and differ
//! only in storage precision.

use std::fmt::Debug;

/// Floating-point activation type. Implemented for `f32` and `f64`.
pub trait Real:
    num_traits::Float + num_traits::NumAssign + Copy + Debug + Default + Send + Sync + 'static
{
    const BITS: u32;

    fn to_f64(self) -> f64;
    fn from_f64(v: f64) -> Self;
}

impl Real for f32 {
    const BITS: u32 = 32;

    #[inline(always)]
    fn to_f64(self) -> f64 {
        self as f64
    }

    #[inline(always)]
    fn from_f64(v: f64) -> Self {
        v as f32
    }
}

impl Real for f64 {
    const BITS: u32 = 64;

    #[inline(always)]
    fn to_f64(self) -> f64 {
        self
    }

    #[inline(always)]
    fn from_f64(v: f64) -> Self {
        v
    }
}

/// Dot product with a 64-bit accumulator and fixed left-to-right order.
#[inline]
pub fn dot_wide<T: Real>(a: &[T], b: &[T]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0.0f64;
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x.to_f64() * y.to_f64();
    }
    acc
}

/// `out[j] = sum_i v[i] * m[i*cols + j]`, accumulated in 64-bit.
///
/// `m` is row-major `[v.len() x cols]`. The accumulation order per output
/// column is the row order, which keeps results deterministic.
pub fn vec_mat_wide<T: Real>(v: &[T], m: &[T], cols: usize, out: &mut [T]) {
    debug_assert_eq!(m.len(), v.len() * cols);
    debug_assert_eq!(out.len(), cols);
    let mut acc = vec![0.0f64; cols];
    for (i, x) in v.iter().enumerate() {
        let x = x.to_f64();
        let row = &m[i * cols..(i + 1) * cols];
        for (a, w) in acc.iter_mut().zip(row.iter()) {
            *a += x * w.to_f64();
        }
    }
    for (o, a) in out.iter_mut().zip(acc.iter()) {
        *o = T::from_f64(*a);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_matches_naive() {
        let a = [1.0f32, 2.0, 3.0];
        let b = [4.0f32, -5.0, 6.0];
        assert_eq!(dot_wide(&a, &b), 4.0 - 10.0 + 18.0);
    }

    #[test]
    fn vec_mat_shapes() {
        // [1, 2] * [[1, 2, 3], [4, 5, 6]] = [9, 12, 15]
        let v = [1.0f64, 2.0];
        let m = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let mut out = [0.0f64; 3];
        vec_mat_wide(&v, &m, 3, &mut out);
        assert_eq!(out, [9.0, 12.0, 15.0]);
    }
}
