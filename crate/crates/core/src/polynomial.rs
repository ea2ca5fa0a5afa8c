//! Dense polynomials, ascending degree.
//!
//! [`IntPoly`] holds exact integer moduli (cyclotomic polynomials). Signals and
//! remainders are [`ComplexPoly`]. The two remainder kernels stream the signal
//! from its highest-degree coefficient down, the order a shift-register
//! divider consumes it.

use std::fmt;

use num_complex::Complex64;

use crate::complexity::{NullRecorder, Recorder, Tracked};
use crate::error::{Error, Result};

/// Exact integer polynomial. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    /// `x^d - 1`.
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[0] = -1;
        coeffs[d] += 1;
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<i64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64)
    }

    pub fn to_complex(&self) -> ComplexPoly {
        ComplexPoly {
            coeffs: self.coeffs.iter().map(|&c| Complex64::new(c as f64, 0.0)).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    /// Descending-degree rendering, e.g. `x^4 - x^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            match (deg, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "x")?,
                (1, m) => write!(f, "{m}x")?,
                (d, 1) => write!(f, "x^{d}")?,
                (d, m) => write!(f, "{m}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// Complex-coefficient polynomial, also used as the sample container.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    /// Rejects NaN and infinite entries.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(ComplexPoly { coeffs })
    }

    pub fn from_real(samples: &[f64]) -> Result<Self> {
        ComplexPoly::new(samples.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

pub fn int_mul(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if a.is_zero() || b.is_zero() {
        return Ok(IntPoly::zero());
    }
    let mut out = vec![0i64; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &ai) in a.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
        for (j, &bj) in b.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            let t = ai.checked_mul(bj).ok_or(Error::Overflow("int_mul"))?;
            out[i + j] = out[i + j].checked_add(t).ok_or(Error::Overflow("int_mul"))?;
        }
    }
    Ok(IntPoly::new(out))
}

/// Quotient of an exact division by a divisor with leading coefficient ±1.
pub fn int_exact_div(num: &IntPoly, den: &IntPoly) -> Result<IntPoly> {
    let den_deg = den.degree().ok_or(Error::ZeroDivisor)?;
    let lead = den.coeffs[den_deg];
    if lead.abs() != 1 {
        return Err(Error::NonUnitLeading);
    }
    let Some(num_deg) = num.degree() else {
        return Ok(IntPoly::zero());
    };
    if num_deg < den_deg {
        return Err(Error::NotExactlyDivisible);
    }
    let taps: Vec<(usize, i64)> = den.coeffs[..den_deg]
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .collect();
    let mut rem = num.coeffs.clone();
    let mut quot = vec![0i64; num_deg - den_deg + 1];
    for q in (0..quot.len()).rev() {
        // lead is ±1, so dividing by it is multiplying by it.
        let c = rem[q + den_deg] * lead;
        quot[q] = c;
        rem[q + den_deg] = 0;
        for &(j, d) in &taps {
            let t = c.checked_mul(d).ok_or(Error::Overflow("int_exact_div"))?;
            rem[q + j] = rem[q + j].checked_sub(t).ok_or(Error::Overflow("int_exact_div"))?;
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Err(Error::NotExactlyDivisible);
    }
    Ok(IntPoly::new(quot))
}

/// Remainder of `signal` modulo a monic integer polynomial, on tracked lanes.
///
/// Shift-register division: each step shifts the register up by one degree,
/// inserts the next coefficient at degree 0 and folds the overflowing top
/// coefficient back through the modulus taps. Ternary taps cost only adds.
pub fn reduce_by_intpoly_tracked<R: Recorder>(
    signal: &[Tracked],
    modulus: &IntPoly,
    rec: &mut R,
) -> Result<Vec<Tracked>> {
    let deg = match modulus.degree() {
        Some(d) if d >= 1 && modulus.is_monic() => d,
        _ => return Err(Error::InvalidModulus),
    };
    let taps: Vec<(usize, i64)> = modulus.coeffs[..deg]
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .collect();
    let mut reg = vec![Tracked::ZERO; deg];
    for &v in signal.iter().rev() {
        let top = reg[deg - 1];
        reg.copy_within(0..deg - 1, 1);
        reg[0] = v;
        if top.is_structural_zero() {
            continue;
        }
        for &(i, c) in &taps {
            reg[i] = reg[i].sub(top.scale_int(c, rec), rec);
        }
    }
    Ok(reg)
}

pub fn reduce_by_intpoly(signal: &ComplexPoly, modulus: &IntPoly) -> Result<ComplexPoly> {
    let lanes: Vec<Tracked> = signal.coeffs.iter().map(|&c| Tracked::input(c, true)).collect();
    let rem = reduce_by_intpoly_tracked(&lanes, modulus, &mut NullRecorder)?;
    ComplexPoly::new(rem.iter().map(Tracked::value).collect())
}

/// Remainder `r0 + r1 x` of `signal` modulo `1 - A x + x^2`, on tracked lanes.
///
/// Runs `s_n = v_n + A s_{n+1} - s_{n+2}` from `n = N-1` down to 1; then
/// `r1 = s_1` and `r0 = v_0 - s_2`.
pub fn reduce_by_pk_tracked<R: Recorder>(signal: &[Tracked], a: f64, rec: &mut R) -> (Tracked, Tracked) {
    let Some((&v0, rest)) = signal.split_first() else {
        return (Tracked::ZERO, Tracked::ZERO);
    };
    // s1 holds s_{n+1}, s2 holds s_{n+2}
    let mut s1 = Tracked::ZERO;
    let mut s2 = Tracked::ZERO;
    for &v in rest.iter().rev() {
        let s = v.add(s1.scale_real(a, rec), rec).sub(s2, rec);
        s2 = s1;
        s1 = s;
    }
    (v0.sub(s2, rec), s1)
}

pub fn reduce_by_pk(signal: &ComplexPoly, a: f64) -> (Complex64, Complex64) {
    let lanes: Vec<Tracked> = signal.coeffs.iter().map(|&c| Tracked::input(c, true)).collect();
    let (r0, r1) = reduce_by_pk_tracked(&lanes, a, &mut NullRecorder);
    (r0.value(), r1.value())
}

/// Horner evaluation.
pub fn eval(p: &ComplexPoly, z: Complex64) -> Complex64 {
    p.coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}
