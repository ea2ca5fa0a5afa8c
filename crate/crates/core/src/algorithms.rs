//! Block single-bin algorithms: naive summation, Goertzel, JCO (reduction
//! modulo the cyclotomic polynomial of the bin's order) and JCO-Goertzel.
//!
//! Every algorithm has a `*_with` form that threads a [`Recorder`] through
//! the arithmetic and a plain form that returns a [`BinResult`] with counts.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::complexity::{nominal_costs, OpCounts, Recorder, Tracked};
use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory::{bin_order, reduce_index, totient};
use crate::polynomial::{reduce_by_intpoly_tracked, reduce_by_pk_tracked, ComplexPoly};

/// `e^{-j 2π num / den}`, exact at multiples of an eighth turn.
pub fn twiddle(num: u64, den: u64) -> Complex64 {
    let r = num % den;
    if (8 * r).is_multiple_of(den) {
        let h = FRAC_1_SQRT_2;
        return match 8 * r / den {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(h, -h),
            2 => Complex64::new(0.0, -1.0),
            3 => Complex64::new(-h, -h),
            4 => Complex64::new(-1.0, 0.0),
            5 => Complex64::new(-h, h),
            6 => Complex64::new(0.0, 1.0),
            _ => Complex64::new(h, h),
        };
    }
    let theta = 2.0 * PI * r as f64 / den as f64;
    Complex64::new(theta.cos(), -theta.sin())
}

/// One DFT bin and its derived constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinSpec {
    pub n: usize,
    /// Reduced into `0..n`.
    pub k: usize,
    /// Multiplicative order of `w`.
    pub order: u64,
    /// `W_N^k`.
    pub w: Complex64,
    /// `2 cos(2πk/N)`.
    pub a: f64,
}

impl BinSpec {
    pub fn new(n: usize, k: i64) -> Result<Self> {
        let n64 = n as u64;
        let kr = reduce_index(n64, k)?;
        let w = twiddle(kr, n64);
        Ok(BinSpec {
            n,
            k: kr as usize,
            order: bin_order(n64, k)?,
            w,
            a: 2.0 * w.re,
        })
    }

    /// `W^m`, computed directly rather than by repeated multiplication.
    pub fn w_pow(&self, m: usize) -> Complex64 {
        let e = (m as u128 * self.k as u128) % self.n as u128;
        twiddle(e as u64, self.n as u64)
    }

    pub fn order_totient(&self) -> u64 {
        totient(self.order).expect("order is positive")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Naive,
    Goertzel,
    Jco,
    JcoGoertzel,
    /// Sample-at-a-time JCO filter.
    Stream,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Naive,
        Algorithm::Goertzel,
        Algorithm::Jco,
        Algorithm::JcoGoertzel,
        Algorithm::Stream,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Goertzel => "goertzel",
            Algorithm::Jco => "jco",
            Algorithm::JcoGoertzel => "jco-goertzel",
            Algorithm::Stream => "stream",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(Algorithm::Naive),
            "goertzel" => Ok(Algorithm::Goertzel),
            "jco" => Ok(Algorithm::Jco),
            "jco-goertzel" | "jco_goertzel" => Ok(Algorithm::JcoGoertzel),
            "stream" | "streaming" => Ok(Algorithm::Stream),
            _ => Err(Error::UnknownAlgorithm(s.to_string())),
        }
    }
}

/// A computed bin value with its measured cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinResult {
    pub value: Complex64,
    /// Counted under the standard cost policy.
    pub counts: OpCounts,
    /// Closed-form real-input multiplication count; `None` for the naive sum.
    pub nominal_mults: Option<u64>,
    pub algorithm: Algorithm,
}

impl BinResult {
    pub(crate) fn new(value: Complex64, counts: OpCounts, algorithm: Algorithm, spec: &BinSpec) -> Self {
        let nominal = nominal_costs(spec.n, spec.k as i64).ok();
        let nominal_mults = nominal.and_then(|c| match algorithm {
            Algorithm::Naive => None,
            Algorithm::Goertzel => Some(c.goertzel),
            Algorithm::Jco | Algorithm::Stream => Some(c.jco),
            Algorithm::JcoGoertzel => Some(c.jco_goertzel),
        });
        BinResult { value, counts, nominal_mults, algorithm }
    }
}

fn lanes(v: &ComplexPoly) -> Result<Vec<Tracked>> {
    if v.is_empty() {
        return Err(Error::EmptySignal);
    }
    Ok(Tracked::signal(v.coeffs()))
}

/// `Σ_m p_m W^m` with each power of `W` treated as a stored constant.
pub(crate) fn eval_at_bin<R: Recorder>(p: &[Tracked], spec: &BinSpec, rec: &mut R) -> Tracked {
    p.iter().enumerate().fold(Tracked::ZERO, |acc, (m, &c)| {
        let term = c.mul_const(spec.w_pow(m), rec);
        acc.add(term, rec)
    })
}

pub fn naive_with<R: Recorder>(v: &ComplexPoly, k: i64, rec: &mut R) -> Result<Complex64> {
    let x = lanes(v)?;
    let spec = BinSpec::new(v.len(), k)?;
    Ok(eval_at_bin(&x, &spec, rec).value())
}

pub fn goertzel_with<R: Recorder>(v: &ComplexPoly, k: i64, rec: &mut R) -> Result<Complex64> {
    let x = lanes(v)?;
    let spec = BinSpec::new(v.len(), k)?;
    let (r0, r1) = reduce_by_pk_tracked(&x, spec.a, rec);
    Ok(r0.add(r1.mul_const(spec.w, rec), rec).value())
}

fn jco_remainder<R: Recorder>(x: &[Tracked], spec: &BinSpec, rec: &mut R) -> Result<Vec<Tracked>> {
    let phi = cyclotomic(spec.order)?;
    reduce_by_intpoly_tracked(x, &phi, rec)
}

pub fn jco_with<R: Recorder>(v: &ComplexPoly, k: i64, rec: &mut R) -> Result<Complex64> {
    let x = lanes(v)?;
    let spec = BinSpec::new(v.len(), k)?;
    let rem = jco_remainder(&x, &spec, rec)?;
    Ok(eval_at_bin(&rem, &spec, rec).value())
}

pub fn jco_goertzel_with<R: Recorder>(v: &ComplexPoly, k: i64, rec: &mut R) -> Result<Complex64> {
    let x = lanes(v)?;
    let spec = BinSpec::new(v.len(), k)?;
    let rem = jco_remainder(&x, &spec, rec)?;
    if spec.order_totient() <= 2 {
        // Φ_L already has degree <= 2; a second reduction would be a no-op.
        return Ok(eval_at_bin(&rem, &spec, rec).value());
    }
    let (r0, r1) = reduce_by_pk_tracked(&rem, spec.a, rec);
    Ok(r0.add(r1.mul_const(spec.w, rec), rec).value())
}

fn counted(
    v: &ComplexPoly,
    k: i64,
    algorithm: Algorithm,
    f: impl FnOnce(&ComplexPoly, i64, &mut OpCounts) -> Result<Complex64>,
) -> Result<BinResult> {
    let mut counts = OpCounts::ZERO;
    let value = f(v, k, &mut counts)?;
    let spec = BinSpec::new(v.len(), k)?;
    Ok(BinResult::new(value, counts, algorithm, &spec))
}

/// Direct summation of `v_n W^{kn}`; the reference for every other algorithm.
pub fn naive_bin(v: &ComplexPoly, k: i64) -> Result<BinResult> {
    counted(v, k, Algorithm::Naive, naive_with)
}

pub fn goertzel_bin(v: &ComplexPoly, k: i64) -> Result<BinResult> {
    counted(v, k, Algorithm::Goertzel, goertzel_with)
}

pub fn jco_bin(v: &ComplexPoly, k: i64) -> Result<BinResult> {
    counted(v, k, Algorithm::Jco, jco_with)
}

pub fn jco_goertzel_bin(v: &ComplexPoly, k: i64) -> Result<BinResult> {
    counted(v, k, Algorithm::JcoGoertzel, jco_goertzel_with)
}
