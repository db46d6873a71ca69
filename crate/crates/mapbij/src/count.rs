//! Exact closed-form counting sequences, in arbitrary precision.
//!
//! All rational prefactors are applied as exact integer divisions with a
//! zero-remainder assertion; no floating point is involved anywhere.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("parameters out of range for this sequence")]
    OutOfRange,
    #[error("closed form did not divide exactly (formula transcription error)")]
    NonIntegerResult,
}

/// The counting sequences exposed by the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountFamily {
    /// Plane bipolar orientations with `n` edges and `i` non-special
    /// vertices (and the equinumerous N-avoiding families).
    ThetaNI,
    /// Baxter numbers: plane bipolar orientations with `n` edges.
    ThetaN,
    /// Rooted non-separable maps with `n+1` edges and `i+2` vertices.
    LambdaNI,
    /// Rooted non-separable maps with `n+1` edges.
    LambdaN,
    /// Rooted loopless maps with `n` edges = rooted triangulations with `n`
    /// inner vertices.
    AN,
}

fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for k in 2..=n {
        acc *= k;
    }
    acc
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for j in 0..k.min(n - k) {
        acc = acc * (n - j) / (j + 1); // exact at every step
    }
    acc
}

fn exact_div(num: BigUint, den: BigUint) -> Result<BigUint, CountError> {
    if (&num % &den) != BigUint::from(0u32) {
        return Err(CountError::NonIntegerResult);
    }
    Ok(num / den)
}

/// `Theta(n,i) = 2/(n(n+1)^2) C(n+1,i) C(n+1,i+1) C(n+1,i+2)` for `n >= 1`,
/// `0 <= i <= n-1`.
pub fn theta_ni(n: u64, i: u64) -> Result<BigUint, CountError> {
    if n < 1 || i >= n {
        return Err(CountError::OutOfRange);
    }
    let num = BigUint::from(2u32)
        * binomial(n + 1, i)
        * binomial(n + 1, i + 1)
        * binomial(n + 1, i + 2);
    exact_div(num, BigUint::from(n) * BigUint::from(n + 1) * BigUint::from(n + 1))
}

/// The Baxter number `theta(n) = sum_i Theta(n,i)` for `n >= 1`.
pub fn theta_n(n: u64) -> Result<BigUint, CountError> {
    if n < 1 {
        return Err(CountError::OutOfRange);
    }
    let mut acc = BigUint::from(0u32);
    for i in 0..n {
        acc += theta_ni(n, i)?;
    }
    Ok(acc)
}

/// `Lambda(n,i) = (n+i)! (2n-i-1)! / ((i+1)! (n-i)! (2i+1)! (2n-2i-1)!)`
/// for `n >= 1`, `0 <= i <= n-1`.
pub fn lambda_ni(n: u64, i: u64) -> Result<BigUint, CountError> {
    if n < 1 || i >= n {
        return Err(CountError::OutOfRange);
    }
    let num = factorial(n + i) * factorial(2 * n - i - 1);
    let den = factorial(i + 1) * factorial(n - i) * factorial(2 * i + 1) * factorial(2 * n - 2 * i - 1);
    exact_div(num, den)
}

/// `lambda(n) = 2 (3n)! / ((n+1)! (2n+1)!)` for `n >= 1`: rooted
/// non-separable maps with `n+1` edges.
pub fn lambda_n(n: u64) -> Result<BigUint, CountError> {
    if n < 1 {
        return Err(CountError::OutOfRange);
    }
    exact_div(
        BigUint::from(2u32) * factorial(3 * n),
        factorial(n + 1) * factorial(2 * n + 1),
    )
}

/// `a(n) = 2 (4n+1)! / ((n+1)! (3n+2)!)` for `n >= 0`: rooted loopless maps
/// with `n` edges, equivalently rooted triangulations with `n` inner
/// vertices.
pub fn a_n(n: u64) -> Result<BigUint, CountError> {
    exact_div(
        BigUint::from(2u32) * factorial(4 * n + 1),
        factorial(n + 1) * factorial(3 * n + 2),
    )
}

/// Uniform entry point used by the command line.
pub fn count_formula(family: CountFamily, n: u64, i: Option<u64>) -> Result<BigUint, CountError> {
    match (family, i) {
        (CountFamily::ThetaNI, Some(i)) => theta_ni(n, i),
        (CountFamily::ThetaN, None) => theta_n(n),
        (CountFamily::LambdaNI, Some(i)) => lambda_ni(n, i),
        (CountFamily::LambdaN, None) => lambda_n(n),
        (CountFamily::AN, None) => a_n(n),
        _ => Err(CountError::OutOfRange),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta_ni(1, 0).unwrap(), big(1));
        assert_eq!(theta_n(1).unwrap(), big(1));
        assert_eq!(theta_ni(3, 1).unwrap(), big(4));
        assert_eq!(theta_n(5).unwrap(), big(92));
        let baxter = [1u64, 2, 6, 22, 92, 422, 2074];
        for (k, &want) in baxter.iter().enumerate() {
            assert_eq!(theta_n(k as u64 + 1).unwrap(), big(want));
        }
    }

    #[test]
    fn lambda_values() {
        assert_eq!(lambda_ni(1, 0).unwrap(), big(1));
        assert_eq!(lambda_n(3).unwrap(), big(6));
        assert_eq!(lambda_n(4).unwrap(), big(22));
        let seq = [1u64, 2, 6, 22, 91, 408, 1938];
        for (k, &want) in seq.iter().enumerate() {
            assert_eq!(lambda_n(k as u64 + 1).unwrap(), big(want));
        }
    }

    #[test]
    fn a_values() {
        let seq = [1u64, 1, 3, 13, 68, 399, 2530];
        for (n, &want) in seq.iter().enumerate() {
            assert_eq!(a_n(n as u64).unwrap(), big(want));
        }
    }

    #[test]
    fn row_sums() {
        for n in 1..=10u64 {
            let mut theta_sum = BigUint::from(0u32);
            let mut lambda_sum = BigUint::from(0u32);
            for i in 0..n {
                theta_sum += theta_ni(n, i).unwrap();
                lambda_sum += lambda_ni(n, i).unwrap();
            }
            assert_eq!(theta_sum, theta_n(n).unwrap());
            assert_eq!(lambda_sum, lambda_n(n).unwrap());
        }
    }

    #[test]
    fn theta_symmetry() {
        for n in 1..=10u64 {
            for i in 0..n {
                assert_eq!(theta_ni(n, i).unwrap(), theta_ni(n, n - 1 - i).unwrap());
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert_eq!(theta_n(0), Err(CountError::OutOfRange));
        assert_eq!(theta_ni(3, 3), Err(CountError::OutOfRange));
        assert_eq!(lambda_n(0), Err(CountError::OutOfRange));
    }
}
