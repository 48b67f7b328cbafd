//! Closed forms for the Catalan (`c_i = 0, λ_i = 1`) and Fibonacci
//! (`c_i = 0, λ_i = -1`) specialisations.

use num_bigint::BigInt;
use num_integer::binomial;

use crate::exact::Rational;

/// `C_m = binom(2m, m) / (m + 1)`.
pub fn catalan_number(m: usize) -> BigInt {
    binomial(BigInt::from(2 * m), BigInt::from(m)) / BigInt::from(m + 1)
}

/// Catalan-spec moment: `C_m` at `n = 2m`, zero at odd `n`.
pub fn catalan_moment(n: usize) -> Rational {
    if n % 2 == 1 {
        Rational::from_integer(0.into())
    } else {
        Rational::from_integer(catalan_number(n / 2))
    }
}

/// Fibonacci-spec moment `ν_n`: `(-1)^m C_m` at `n = 2m`, zero at odd `n`.
pub fn fibonacci_moment(n: usize) -> Rational {
    let v = catalan_moment(n);
    if (n / 2) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `(-1)^⌈n/2⌉`, the Fibonacci Hankel determinant `d_n`.
pub fn fibonacci_hankel_det(n: usize) -> i64 {
    if n.div_ceil(2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(-1)^⌈(n-1)/2⌉`, the factor turning the bordered ν-determinant into
/// `P_n`; equals `1/d_{n-1}`.
pub fn fibonacci_determinant_prefactor(n: usize) -> i64 {
    // ⌈(n-1)/2⌉ = ⌊n/2⌋ for n ≥ 1, and 0 for n = 0
    if (n / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let got: Vec<BigInt> = (0..9).map(catalan_number).collect();
        let want: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429, 1430].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn signs() {
        let d: Vec<i64> = (0..7).map(fibonacci_hankel_det).collect();
        assert_eq!(d, vec![1, -1, -1, 1, 1, -1, -1]);
        for n in 1..12 {
            assert_eq!(fibonacci_determinant_prefactor(n), fibonacci_hankel_det(n - 1));
        }
        let nu: Vec<Rational> = (0..7).map(fibonacci_moment).collect();
        let want: Vec<Rational> = [1, 0, -1, 0, 2, 0, -5].iter().map(|&v: &i64| Rational::from_integer(v.into())).collect();
        assert_eq!(nu, want);
    }
}
