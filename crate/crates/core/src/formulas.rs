//! Closed forms for the six families, evaluated with exact integers.
//!
//! All sums are inclusion-exclusion over `j` chosen forbidden substrings:
//!
//! * `d(n, k)  = Σ_{j=0}^{n-k} (-1)^j C(n-k, j) (n-j)!`
//! * `c*(n, k) = Σ_{j=0}^{n-k} (-1)^j C(n-k, j) (n-j-1)!  = d(n-1, k-1)`
//! * `d*(n, k) = n · c*(n, k)`
//! * `D(n, k)  = Σ_{j=0}^{n-1} (-1)^j C(n, j) (n-j)!`
//! * `C(n)     = Σ_{j=0}^{n-1} (-1)^j C(n, j) (n-j-1)! + (-1)^n`
//! * `D*(n, k) = n · C(n)`, `C*(n, k) = C(n)`
//!
//! The mod-n closed forms only hold when `gcd(n, k) = 1`; elsewhere they
//! return [`Error::Inapplicable`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::succession::Family;

/// `0!, 1!, ..., n!`.
fn factorials(n: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for i in 1..=n {
        acc *= i;
        out.push(acc.clone());
    }
    out
}

/// Row `m` of Pascal's triangle, `C(m, 0..=m)`, by the multiplicative
/// recurrence `C(m, j+1) = C(m, j) (m-j) / (j+1)` (each division is exact).
fn binomial_row(m: u32) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for j in 0..m {
        c = c * (m - j) / (j + 1);
        row.push(c.clone());
    }
    row
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(m: u32, j: u32) -> BigInt {
    if j > m {
        return BigInt::zero();
    }
    binomial_row(m).swap_remove(j as usize)
}

/// `Σ_{j=0}^{terms} (-1)^j C(choose_from, j) (top - j)!`
fn alternating_sum(choose_from: u32, terms: u32, top: u32) -> BigInt {
    debug_assert!(terms <= top);
    let fact = factorials(top);
    let binom = binomial_row(choose_from);
    let mut sum = BigInt::zero();
    for j in 0..=terms {
        let term = &binom[j as usize] * &fact[(top - j) as usize];
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

fn check_shift(n: u32, k: u32) -> Result<()> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::ShiftOutOfRange { n, k });
    }
    Ok(())
}

fn check_coprime(n: u32, k: u32) -> Result<()> {
    check_shift(n, k)?;
    let gcd = n.gcd(&k);
    if gcd != 1 {
        return Err(Error::Inapplicable { n, k, gcd });
    }
    Ok(())
}

/// The `n`-th derangement number.
pub fn derangement(n: u32) -> BigInt {
    alternating_sum(n, n, n)
}

/// Words of `[n]` avoiding `j(j+k)` for `1 <= j <= n-k`. `k = 0` is accepted
/// and gives `derangement(n)`.
pub fn d_count(n: u32, k: u32) -> Result<BigInt> {
    if n == 0 || k >= n {
        return Err(Error::ShiftOutOfRange { n, k });
    }
    Ok(alternating_sum(n - k, n - k, n))
}

/// Words of `[n]` avoiding `j(j+k) mod n` for every `j`. Requires
/// `gcd(n, k) = 1`.
#[allow(non_snake_case)]
pub fn D_count(n: u32, k: u32) -> Result<BigInt> {
    check_coprime(n, k)?;
    Ok(alternating_sum(n, n - 1, n))
}

/// Rotation classes avoiding the linear pairs.
pub fn c_star_count(n: u32, k: u32) -> Result<BigInt> {
    check_shift(n, k)?;
    Ok(alternating_sum(n - k, n - k, n - 1))
}

/// Words avoiding the linear pairs, read circularly.
pub fn d_star_count(n: u32, k: u32) -> Result<BigInt> {
    Ok(c_star_count(n, k)? * n)
}

/// Number of rotation classes avoiding every `j(j+1) mod n`; the inner term
/// of the mod-n circular counts.
#[allow(non_snake_case)]
pub fn C_term(n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("C_term needs n >= 2, got {n}")));
    }
    let sign = if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    Ok(alternating_sum(n, n - 1, n - 1) + sign)
}

/// Words avoiding the mod-n pairs, read circularly. Requires `gcd(n, k) = 1`.
#[allow(non_snake_case)]
pub fn D_star_count(n: u32, k: u32) -> Result<BigInt> {
    check_coprime(n, k)?;
    Ok(C_term(n)? * n)
}

/// Rotation classes avoiding the mod-n pairs. Requires `gcd(n, k) = 1`.
#[allow(non_snake_case)]
pub fn C_star_count(n: u32, k: u32) -> Result<BigInt> {
    check_coprime(n, k)?;
    C_term(n)
}

/// Closed form for any family.
pub fn count(family: Family, n: u32, k: u32) -> Result<BigInt> {
    match family {
        Family::Shift => d_count(n, k),
        Family::CircularShift => d_star_count(n, k),
        Family::CyclicShift => c_star_count(n, k),
        Family::ModShift => D_count(n, k),
        Family::CircularModShift => D_star_count(n, k),
        Family::CyclicModShift => C_star_count(n, k),
    }
}

/// Whether [`count`] has a closed form for `(family, n, k)`.
pub fn is_applicable(family: Family, n: u32, k: u32) -> bool {
    !matches!(count(family, n, k), Err(Error::Inapplicable { .. }))
}
