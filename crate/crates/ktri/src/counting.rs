//! Exact integer counting: Catalan numbers, the Hankel determinant of
//! consecutive Catalan numbers, and the equivalent product formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::polygon::validate_parameters;

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut result = BigInt::one();
    for i in 0..k {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// The m-th Catalan number, `binom(2m, m) / (m+1)`.
pub fn catalan(m: u64) -> BigInt {
    let num = binomial(2 * m, m);
    let den = BigInt::from(m + 1);
    let (q, r) = div_rem(&num, &den);
    debug_assert!(r.is_zero());
    q
}

fn div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// Determinant of the k x k Hankel matrix with entries
/// `Cat(n-2-i-j)` for 0-based `i`, `j`. Requires `2k+1 <= n` so every
/// Catalan index is at least 1.
pub fn count_determinant(n: usize, k: usize) -> Result<BigInt, Error> {
    validate_parameters(n, k)?;
    let mat: Vec<Vec<BigInt>> = (0..k)
        .map(|i| (0..k).map(|j| catalan((n - 2 - i - j) as u64)).collect())
        .collect();
    Ok(determinant(&mat))
}

/// Cofactor expansion along the first row. Fine for the small matrices
/// used here.
fn determinant(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &mat[0][j] * determinant(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The product `prod_{1 <= i <= j < n-2k} (i+j+2k)/(i+j)`, evaluated as a
/// single exact fraction. The division is asserted to be exact.
pub fn count_product(n: usize, k: usize) -> Result<BigInt, Error> {
    validate_parameters(n, k)?;
    let bound = n - 2 * k; // exponents range over 1 <= i <= j < bound
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..bound {
        for j in i..bound {
            num *= BigInt::from(i + j + 2 * k);
            den *= BigInt::from(i + j);
        }
    }
    let (q, r) = div_rem(&num, &den);
    assert!(r.is_zero(), "product formula must evaluate to an integer");
    Ok(q)
}
