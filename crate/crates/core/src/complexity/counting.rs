//! Operation recorder and the lane-tracked scalar used by every kernel.
//!
//! A [`Tracked`] value is a complex number whose real and imaginary lanes each
//! carry a "live" flag. A dead lane is structurally zero: it came from a
//! real-valued input, an empty register, or a product with a zero constant.
//! Costs are charged per live lane, so a real signal pays half of what a
//! complex one does and additions against structural zeros are free.

use std::ops::{Add, AddAssign};

use num_complex::Complex64;
use serde::Serialize;

/// Real multiplication and addition tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct OpCounts {
    pub real_mults: u64,
    pub real_adds: u64,
}

impl OpCounts {
    pub const ZERO: OpCounts = OpCounts { real_mults: 0, real_adds: 0 };

    pub fn new(real_mults: u64, real_adds: u64) -> Self {
        OpCounts { real_mults, real_adds }
    }
}

impl Add for OpCounts {
    type Output = OpCounts;

    fn add(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            real_mults: self.real_mults + rhs.real_mults,
            real_adds: self.real_adds + rhs.real_adds,
        }
    }
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: OpCounts) {
        *self = *self + rhs;
    }
}

/// Sink for operation costs. Passed explicitly into every instrumented kernel.
pub trait Recorder {
    fn record_mults(&mut self, n: u64);
    fn record_adds(&mut self, n: u64);
}

impl Recorder for OpCounts {
    fn record_mults(&mut self, n: u64) {
        self.real_mults += n;
    }

    fn record_adds(&mut self, n: u64) {
        self.real_adds += n;
    }
}

/// Discards every record.
#[derive(Debug, Clone, Copy, Default)]
pub struct NullRecorder;

impl Recorder for NullRecorder {
    fn record_mults(&mut self, _: u64) {}
    fn record_adds(&mut self, _: u64) {}
}

/// Which constants are free to multiply by.
///
/// Real constants in `trivial_reals` cost nothing (sign flips, shifts and
/// adds). A complex constant `a + bj` applied to one live real lane costs the
/// number of distinct magnitudes among `|a|, |b|` that are not trivial, so
/// `(√2/2)(1 + j)` costs one multiplication and `j` costs none. Integer
/// constants with `|c| >= 3` cost one multiplication.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostPolicy {
    pub trivial_reals: &'static [f64],
    /// Two reals closer than this are treated as equal when classifying.
    pub tolerance: f64,
    pub max_free_int: i64,
}

impl CostPolicy {
    pub const STANDARD: CostPolicy = CostPolicy {
        trivial_reals: &[0.0, 1.0, -1.0, 2.0, -2.0],
        tolerance: 1e-12,
        max_free_int: 2,
    };

    /// Returns the exact trivial value `c` rounds to, if any.
    pub fn snap(&self, c: f64) -> Option<f64> {
        self.trivial_reals
            .iter()
            .copied()
            .find(|t| (c - t).abs() <= self.tolerance)
    }

    pub fn real_cost(&self, c: f64) -> u64 {
        u64::from(self.snap(c).is_none())
    }

    pub fn complex_cost(&self, c: Complex64) -> u64 {
        let mut mags: Vec<f64> = Vec::with_capacity(2);
        for part in [c.re, c.im] {
            if self.snap(part).is_none() {
                let m = part.abs();
                if !mags.iter().any(|x| (x - m).abs() <= self.tolerance) {
                    mags.push(m);
                }
            }
        }
        mags.len() as u64
    }

    pub fn int_cost(&self, c: i64) -> u64 {
        u64::from(c.unsigned_abs() > self.max_free_int.unsigned_abs())
    }

    fn snapped(&self, c: f64) -> f64 {
        self.snap(c).unwrap_or(c)
    }
}

impl Default for CostPolicy {
    fn default() -> Self {
        CostPolicy::STANDARD
    }
}

const POLICY: CostPolicy = CostPolicy::STANDARD;

/// Complex value with per-lane structural-zero tracking.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tracked {
    value: Complex64,
    re_live: bool,
    im_live: bool,
}

impl Tracked {
    pub const ZERO: Tracked = Tracked {
        value: Complex64 { re: 0.0, im: 0.0 },
        re_live: false,
        im_live: false,
    };

    /// An input sample. The imaginary lane is live only for complex signals.
    pub fn input(value: Complex64, complex: bool) -> Self {
        Tracked {
            value: if complex { value } else { Complex64::new(value.re, 0.0) },
            re_live: true,
            im_live: complex,
        }
    }

    pub fn real(value: f64) -> Self {
        Tracked::input(Complex64::new(value, 0.0), false)
    }

    /// Lifts a whole signal, treating it as real iff every imaginary part is zero.
    pub fn signal(samples: &[Complex64]) -> Vec<Tracked> {
        let complex = samples.iter().any(|c| c.im != 0.0);
        samples.iter().map(|&c| Tracked::input(c, complex)).collect()
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn live_lanes(&self) -> u64 {
        u64::from(self.re_live) + u64::from(self.im_live)
    }

    /// True when the imaginary lane is structurally zero.
    pub fn is_real(&self) -> bool {
        !self.im_live
    }

    pub fn is_structural_zero(&self) -> bool {
        !self.re_live && !self.im_live
    }

    pub fn negate(self) -> Tracked {
        Tracked { value: -self.value, ..self }
    }

    pub fn add<R: Recorder>(self, rhs: Tracked, rec: &mut R) -> Tracked {
        rec.record_adds(u64::from(self.re_live && rhs.re_live) + u64::from(self.im_live && rhs.im_live));
        Tracked {
            value: self.value + rhs.value,
            re_live: self.re_live || rhs.re_live,
            im_live: self.im_live || rhs.im_live,
        }
    }

    pub fn sub<R: Recorder>(self, rhs: Tracked, rec: &mut R) -> Tracked {
        self.add(rhs.negate(), rec)
    }

    pub fn scale_int<R: Recorder>(self, c: i64, rec: &mut R) -> Tracked {
        if c == 0 || self.is_structural_zero() {
            return Tracked::ZERO;
        }
        rec.record_mults(POLICY.int_cost(c) * self.live_lanes());
        Tracked { value: self.value * c as f64, ..self }
    }

    pub fn scale_real<R: Recorder>(self, c: f64, rec: &mut R) -> Tracked {
        let c = POLICY.snapped(c);
        if c == 0.0 || self.is_structural_zero() {
            return Tracked::ZERO;
        }
        rec.record_mults(POLICY.real_cost(c) * self.live_lanes());
        Tracked { value: self.value * c, ..self }
    }

    /// Multiplies by a complex constant, lane by lane.
    pub fn mul_const<R: Recorder>(self, c: Complex64, rec: &mut R) -> Tracked {
        let (a, b) = (POLICY.snapped(c.re), POLICY.snapped(c.im));
        if self.is_structural_zero() || (a == 0.0 && b == 0.0) {
            return Tracked::ZERO;
        }
        rec.record_mults(POLICY.complex_cost(Complex64::new(a, b)) * self.live_lanes());

        let (x, y) = (self.value.re, self.value.im);
        // (x + yj)(a + bj) = (xa - yb) + (xb + ya)j
        let xa = self.re_live && a != 0.0;
        let yb = self.im_live && b != 0.0;
        let xb = self.re_live && b != 0.0;
        let ya = self.im_live && a != 0.0;
        rec.record_adds(u64::from(xa && yb) + u64::from(xb && ya));

        let re = if xa { x * a } else { 0.0 } - if yb { y * b } else { 0.0 };
        let im = if xb { x * b } else { 0.0 } + if ya { y * a } else { 0.0 };
        Tracked {
            value: Complex64::new(re, im),
            re_live: xa || yb,
            im_live: xb || ya,
        }
    }
}
