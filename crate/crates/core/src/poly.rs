//! Exact integer polynomial arithmetic (ascending coefficient order),
//! shared by the characteristic-polynomial routines.

use num_bigint::BigInt;
use num_traits::Zero;

/// Product of two polynomials given as ascending coefficient slices.
pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `base^k` by repeated multiplication; `k = 0` gives the constant 1.
pub(crate) fn pow(base: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(1)];
    for _ in 0..k {
        out = mul(&out, base);
    }
    out
}
