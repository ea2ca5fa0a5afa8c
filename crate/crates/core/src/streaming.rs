//! Sample-at-a-time realization of the JCO algorithm.
//!
//! The first-order bin filter `1 / (1 - W^{-k} z^{-1})` is rewritten as
//! `a(z^{-1}) / Φ_L(z^{-1})`, where `a(u) = Φ_L(u) / (1 - W^{-k} u)`. The
//! denominator taps are the integer coefficients of `Φ_L`, so the recursive
//! part runs on additions alone; the complex numerator taps `a_m` are applied
//! once, after the last sample.

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::algorithms::{Algorithm, BinResult, BinSpec};
use crate::complexity::{OpCounts, Tracked};
use crate::cyclotomic::cyclotomic;
use crate::error::{Error, Result};
use crate::polynomial::ComplexPoly;

const DESIGN_TOLERANCE: f64 = 1e-10;

/// Designed filter coefficients for one bin.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FilterSpec {
    #[serde(rename = "N")]
    pub n: usize,
    pub k: usize,
    #[serde(rename = "L")]
    pub order: u64,
    /// Numerator taps `a_0 = 1, .., a_M`, `M = φ(L) - 1`.
    #[serde(serialize_with = "serialize_taps")]
    pub a: Vec<Complex64>,
    /// Denominator taps `b_0 = 1, .., b_{φ(L)}`.
    pub b: Vec<i64>,
    /// Magnitude of the synthetic-division remainder left by the design.
    #[serde(skip)]
    pub residual: f64,
}

fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x).parse().unwrap_or(x)
}

fn serialize_taps<S: Serializer>(taps: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    let pairs: Vec<[f64; 2]> = taps.iter().map(|c| [round_sig(c.re, 12), round_sig(c.im, 12)]).collect();
    pairs.serialize(s)
}

impl FilterSpec {
    pub fn numerator_len(&self) -> usize {
        self.a.len()
    }

    /// JSON export: `{"N", "k", "L", "a": [[re, im], ..], "b": [..]}` with 12
    /// significant digits.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("filter spec is always serializable")
    }
}

/// Designs the filter by synthetic division of `Φ_L` by `1 - W^{-k} u`:
/// `a_0 = 1`, `a_m = W^{-k} a_{m-1} + Φ_{L,m}`.
pub fn design_filter(n: usize, k: i64) -> Result<FilterSpec> {
    let spec = BinSpec::new(n, k)?;
    let phi = cyclotomic(spec.order)?;
    // b_0 must be 1; only Φ_1 = x - 1 needs the sign flip.
    let b: Vec<i64> = if phi.coeffs()[0] == -1 {
        phi.coeffs().iter().map(|c| -c).collect()
    } else {
        phi.coeffs().to_vec()
    };
    let pole = spec.w.conj();
    let deg = b.len() - 1;
    let mut a = Vec::with_capacity(deg);
    a.push(Complex64::new(1.0, 0.0));
    for m in 1..deg {
        let next = pole * a[m - 1] + b[m] as f64;
        a.push(next);
    }
    let residual = (b[deg] as f64 + pole * a[deg - 1]).norm();
    if residual > DESIGN_TOLERANCE {
        return Err(Error::DesignResidual(residual));
    }
    Ok(FilterSpec { n, k: spec.k, order: spec.order, a, b, residual })
}

/// Shift register of the recursive part. Owns its counts.
#[derive(Debug, Clone)]
pub struct FilterState {
    n: usize,
    k: usize,
    b: Vec<i64>,
    /// Newest first: `registers[j]` is `w_{t-j}` after `t` steps.
    registers: Vec<Tracked>,
    samples_consumed: usize,
    counts: OpCounts,
}

impl FilterState {
    pub fn new(spec: &FilterSpec) -> Self {
        FilterState {
            n: spec.n,
            k: spec.k,
            b: spec.b.clone(),
            registers: vec![Tracked::ZERO; spec.b.len() - 1],
            samples_consumed: 0,
            counts: OpCounts::ZERO,
        }
    }

    pub fn samples_consumed(&self) -> usize {
        self.samples_consumed
    }

    /// Register contents, newest first.
    pub fn registers(&self) -> Vec<Complex64> {
        self.registers.iter().map(Tracked::value).collect()
    }

    /// Costs recorded so far.
    pub fn counts(&self) -> OpCounts {
        self.counts
    }

    fn step(&mut self, input: Tracked) {
        let mut head = input;
        for (j, &bj) in self.b.iter().enumerate().skip(1) {
            if bj != 0 {
                let fb = self.registers[j - 1].scale_int(bj, &mut self.counts);
                head = head.sub(fb, &mut self.counts);
            }
        }
        self.registers.rotate_right(1);
        self.registers[0] = head;
    }

    fn push_tracked(&mut self, sample: Tracked) -> Result<()> {
        if self.samples_consumed >= self.n {
            return Err(Error::SampleCount { expected: self.n, got: self.samples_consumed + 1 });
        }
        self.step(sample);
        self.samples_consumed += 1;
        Ok(())
    }

    /// Feeds one complex sample.
    pub fn push(&mut self, sample: Complex64) -> Result<()> {
        self.push_tracked(Tracked::input(sample, true))
    }

    /// Feeds one real sample; its imaginary lane stays structurally zero.
    pub fn push_real(&mut self, sample: f64) -> Result<()> {
        self.push_tracked(Tracked::real(sample))
    }

    /// Runs the trailing zero-input step, then applies the numerator taps.
    pub fn finalize(mut self, spec: &FilterSpec) -> Result<BinResult> {
        if spec.n != self.n || spec.k != self.k || spec.b != self.b {
            return Err(Error::SpecMismatch);
        }
        if self.samples_consumed != self.n {
            return Err(Error::SampleCount { expected: self.n, got: self.samples_consumed });
        }
        self.step(Tracked::ZERO);
        self.samples_consumed += 1;

        let mut y = Tracked::ZERO;
        for (&a, &w) in spec.a.iter().zip(&self.registers) {
            let term = w.mul_const(a, &mut self.counts);
            y = y.add(term, &mut self.counts);
        }
        let bin = BinSpec::new(spec.n, spec.k as i64)?;
        Ok(BinResult::new(y.value(), self.counts, Algorithm::Stream, &bin))
    }
}

/// Designs, feeds and finalizes in one call. Real signals use real pushes.
pub fn stream_bin(v: &ComplexPoly, k: i64) -> Result<BinResult> {
    if v.is_empty() {
        return Err(Error::EmptySignal);
    }
    let spec = design_filter(v.len(), k)?;
    let mut state = FilterState::new(&spec);
    if v.is_real() {
        for c in v.coeffs() {
            state.push_real(c.re)?;
        }
    } else {
        for &c in v.coeffs() {
            state.push(c)?;
        }
    }
    state.finalize(&spec)
}

/// `y_n = v_n + W^{-k} y_{n-1}`, read out after one extra zero step.
/// Reference only; one complex multiply per sample.
#[derive(Debug, Clone)]
pub struct FirstOrderFilter {
    n: usize,
    pole: Complex64,
    y: Complex64,
    consumed: usize,
}

impl FirstOrderFilter {
    pub fn new(n: usize, k: i64) -> Result<Self> {
        let spec = BinSpec::new(n, k)?;
        Ok(FirstOrderFilter { n, pole: spec.w.conj(), y: Complex64::new(0.0, 0.0), consumed: 0 })
    }

    pub fn push(&mut self, sample: Complex64) -> Result<()> {
        if self.consumed >= self.n {
            return Err(Error::SampleCount { expected: self.n, got: self.consumed + 1 });
        }
        self.y = sample + self.pole * self.y;
        self.consumed += 1;
        Ok(())
    }

    pub fn finalize(self) -> Result<Complex64> {
        if self.consumed != self.n {
            return Err(Error::SampleCount { expected: self.n, got: self.consumed });
        }
        Ok(self.pole * self.y)
    }
}
