//! Cyclotomic polynomials over the integers, built by Möbius inversion:
//! `Φ_n(x) = Π_{d | n} (x^d - 1)^{μ(n/d)}`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::Result;
use crate::numtheory::{divisors, mobius, totient};
use crate::polynomial::{int_exact_div, int_mul, IntPoly};

/// Builds `Φ_n` from scratch. All `μ = +1` factors are multiplied in before
/// any `μ = -1` factor is divided out, so every intermediate division is exact.
pub fn build_cyclotomic(n: u64) -> Result<IntPoly> {
    let mut numer = Vec::new();
    let mut denom = Vec::new();
    for d in divisors(n)? {
        match mobius(n / d)? {
            1 => numer.push(d),
            -1 => denom.push(d),
            _ => {}
        }
    }
    let mut poly = IntPoly::one();
    for d in numer {
        poly = int_mul(&poly, &IntPoly::x_pow_minus_one(d as usize))?;
    }
    for d in denom {
        poly = int_exact_div(&poly, &IntPoly::x_pow_minus_one(d as usize))?;
    }
    debug_assert_eq!(poly.degree(), Some(totient(n)? as usize));
    Ok(poly)
}

/// Memoized `n -> Φ_n`. Concurrent readers share the lock; a missing entry is
/// built outside the lock and inserted, so racing builders just recompute the
/// same value.
#[derive(Debug, Default)]
pub struct CyclotomicTable {
    entries: RwLock<HashMap<u64, Arc<IntPoly>>>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: u64) -> Result<Arc<IntPoly>> {
        if let Some(p) = self.entries.read().expect("cyclotomic table poisoned").get(&n) {
            return Ok(Arc::clone(p));
        }
        let built = Arc::new(build_cyclotomic(n)?);
        let mut map = self.entries.write().expect("cyclotomic table poisoned");
        Ok(Arc::clone(map.entry(n).or_insert(built)))
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cyclotomic table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Process-wide table used by the algorithms.
pub fn global_table() -> &'static CyclotomicTable {
    static TABLE: OnceLock<CyclotomicTable> = OnceLock::new();
    TABLE.get_or_init(CyclotomicTable::new)
}

pub fn cyclotomic(n: u64) -> Result<Arc<IntPoly>> {
    global_table().get(n)
}

/// True iff every coefficient of `Φ_n` is -1, 0 or 1.
pub fn is_ternary(n: u64) -> Result<bool> {
    Ok(cyclotomic(n)?.coeffs().iter().all(|c| c.abs() <= 1))
}
