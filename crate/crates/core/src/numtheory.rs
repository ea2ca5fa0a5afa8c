//! Integer helpers used to build cyclotomic polynomials and bin orders.
//!
//! Factorization is plain trial division; inputs are DFT lengths, so that is
//! more than fast enough.

use crate::error::{Error, Result};

/// Canonical prime factorization, ascending by prime.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> Result<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, e)| {
            p.checked_pow(e)
                .and_then(|pe| acc.checked_mul(pe))
                .ok_or(Error::Overflow("factorization product"))
        })
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

fn check_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::NonPositive(0))
    } else {
        Ok(())
    }
}

pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    Ok(a)
}

pub fn factorize(n: u64) -> Result<Factorization> {
    check_positive(n)?;
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Euler's totient, from the factorization: n * prod (1 - 1/p).
pub fn totient(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    f.factors.iter().try_fold(1u64, |acc, &(p, e)| {
        p.checked_pow(e - 1)
            .and_then(|pe| pe.checked_mul(p - 1))
            .and_then(|t| acc.checked_mul(t))
            .ok_or(Error::Overflow("totient"))
    })
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut divs = vec![1u64];
    for &(p, e) in f.factors() {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk = pk.checked_mul(p).ok_or(Error::Overflow("divisors"))?;
            for i in 0..len {
                let d = divs[i].checked_mul(pk).ok_or(Error::Overflow("divisors"))?;
                divs.push(d);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Reduces any integer bin index into `0..n`.
pub fn reduce_index(n: u64, k: i64) -> Result<u64> {
    check_positive(n)?;
    let n_i = i128::from(n);
    Ok(i128::from(k).rem_euclid(n_i) as u64)
}

/// Multiplicative order of W_N^k, i.e. N / gcd(N, k mod N).
pub fn bin_order(n: u64, k: i64) -> Result<u64> {
    let k = reduce_index(n, k)?;
    if k == 0 {
        return Ok(1);
    }
    Ok(n / gcd(n, k)?)
}
