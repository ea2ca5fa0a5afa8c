//! DTMF synthesis and detection on top of the single-bin algorithms.
//!
//! Detection evaluates the eight tone bins of one block and accepts a digit
//! only when both the row and the column winner dominate their groups.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::algorithms::Algorithm;
use crate::complexity::measure;
use crate::error::{Error, Result};
use crate::polynomial::ComplexPoly;

pub const ROW_FREQS: [f64; 4] = [697.0, 770.0, 852.0, 941.0];
pub const COL_FREQS: [f64; 4] = [1209.0, 1336.0, 1477.0, 1633.0];

const KEYPAD: [[char; 4]; 4] = [
    ['1', '2', '3', 'A'],
    ['4', '5', '6', 'B'],
    ['7', '8', '9', 'C'],
    ['*', '0', '#', 'D'],
];

#[derive(Debug, Clone, PartialEq)]
pub struct DtmfConfig {
    pub sample_rate: f64,
    pub block_size: usize,
    pub row_freqs: [f64; 4],
    pub col_freqs: [f64; 4],
    /// Winner power must exceed this multiple of the runner-up.
    pub dominance_ratio: f64,
}

impl Default for DtmfConfig {
    fn default() -> Self {
        DtmfConfig {
            sample_rate: 8000.0,
            block_size: 205,
            row_freqs: ROW_FREQS,
            col_freqs: COL_FREQS,
            dominance_ratio: 4.0,
        }
    }
}

impl DtmfConfig {
    fn bin(&self, f: f64) -> usize {
        (f * self.block_size as f64 / self.sample_rate).round() as usize
    }

    pub fn row_bins(&self) -> [usize; 4] {
        self.row_freqs.map(|f| self.bin(f))
    }

    pub fn col_bins(&self) -> [usize; 4] {
        self.col_freqs.map(|f| self.bin(f))
    }
}

/// Keypad position `(row, col)` of a digit.
pub fn digit_position(digit: char) -> Result<(usize, usize)> {
    let d = digit.to_ascii_uppercase();
    KEYPAD
        .iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().position(|&c| c == d).map(|c| (r, c)))
        .ok_or(Error::UnknownDigit(digit))
}

pub fn all_digits() -> impl Iterator<Item = char> {
    KEYPAD.into_iter().flatten()
}

/// One block of the digit's two tones plus seeded white Gaussian noise.
pub fn synthesize(digit: char, config: &DtmfConfig, amplitude: f64, noise_rms: f64, seed: u64) -> Result<Vec<f64>> {
    let (r, c) = digit_position(digit)?;
    let (fr, fc) = (config.row_freqs[r], config.col_freqs[c]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, noise_rms.abs()).expect("finite noise level");
    let tau = std::f64::consts::TAU;
    Ok((0..config.block_size)
        .map(|i| {
            let t = i as f64 / config.sample_rate;
            let tone = amplitude * ((tau * fr * t).sin() + (tau * fc * t).sin());
            if noise_rms == 0.0 {
                tone
            } else {
                tone + noise.sample(&mut rng)
            }
        })
        .collect())
}

/// Index of the strongest bin, if it beats every other bin by `ratio`.
fn dominant(powers: &[f64; 4], ratio: f64) -> Option<usize> {
    let (best, &p) = powers.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1))?;
    let runner_up = powers
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != best)
        .map(|(_, &q)| q)
        .fold(0.0, f64::max);
    (p > ratio * runner_up).then_some(best)
}

/// Squared magnitudes of the 4 row and 4 column bins.
pub fn tone_powers(block: &[f64], config: &DtmfConfig, alg: Algorithm) -> Result<([f64; 4], [f64; 4])> {
    if block.len() != config.block_size {
        return Err(Error::BlockLength { expected: config.block_size, got: block.len() });
    }
    let v = ComplexPoly::from_real(block)?;
    let power = |k: usize| -> Result<f64> { Ok(measure(alg, &v, k as i64)?.value.norm_sqr()) };
    let mut rows = [0.0; 4];
    let mut cols = [0.0; 4];
    for (slot, k) in rows.iter_mut().zip(config.row_bins()) {
        *slot = power(k)?;
    }
    for (slot, k) in cols.iter_mut().zip(config.col_bins()) {
        *slot = power(k)?;
    }
    Ok((rows, cols))
}

pub fn detect(block: &[f64], config: &DtmfConfig, alg: Algorithm) -> Result<Option<char>> {
    let (rows, cols) = tone_powers(block, config, alg)?;
    let r = dominant(&rows, config.dominance_ratio);
    let c = dominant(&cols, config.dominance_ratio);
    Ok(r.zip(c).map(|(r, c)| KEYPAD[r][c]))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALGS: [Algorithm; 3] = [Algorithm::Goertzel, Algorithm::Jco, Algorithm::JcoGoertzel];

    #[test]
    fn default_bins() {
        let cfg = DtmfConfig::default();
        assert_eq!(cfg.row_bins(), [18, 20, 22, 24]);
        assert_eq!(cfg.col_bins(), [31, 34, 38, 42]);
        let mut all: Vec<usize> = cfg.row_bins().into_iter().chain(cfg.col_bins()).collect();
        all.dedup();
        assert_eq!(all.len(), 8);
        assert_eq!(all_digits().count(), 16);
    }

    #[test]
    fn digit_five_peaks() {
        let cfg = DtmfConfig::default();
        let block = synthesize('5', &cfg, 1.0, 0.0, 0).unwrap();
        let (rows, cols) = tone_powers(&block, &cfg, Algorithm::Goertzel).unwrap();
        assert_eq!(dominant(&rows, 1.0), Some(1));
        assert_eq!(dominant(&cols, 1.0), Some(1));
        assert_eq!((cfg.row_bins()[1], cfg.col_bins()[1]), (20, 34));
    }

    #[test]
    fn zero_amplitude_is_silent() {
        let block = synthesize('1', &DtmfConfig::default(), 0.0, 0.0, 3).unwrap();
        assert!(block.iter().all(|&x| x == 0.0));
        assert_eq!(detect(&block, &DtmfConfig::default(), Algorithm::Jco).unwrap(), None);
    }

    #[test]
    fn seeded_noise_is_reproducible() {
        let cfg = DtmfConfig::default();
        let a = synthesize('#', &cfg, 1.0, 0.1, 42).unwrap();
        let b = synthesize('#', &cfg, 1.0, 0.1, 42).unwrap();
        let c = synthesize('#', &cfg, 1.0, 0.1, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn round_trip_every_digit() {
        let cfg = DtmfConfig::default();
        for (i, d) in all_digits().enumerate() {
            let block = synthesize(d, &cfg, 1.0, 0.05, i as u64).unwrap();
            for alg in ALGS {
                assert_eq!(detect(&block, &cfg, alg).unwrap(), Some(d), "{d} with {alg}");
            }
        }
    }

    #[test]
    fn pure_noise_rejected() {
        let cfg = DtmfConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let normal = Normal::new(0.0, 1.0).unwrap();
        let block: Vec<f64> = (0..cfg.block_size).map(|_| normal.sample(&mut rng)).collect();
        for alg in ALGS {
            assert_eq!(detect(&block, &cfg, alg).unwrap(), None);
        }
    }

    #[test]
    fn errors() {
        let cfg = DtmfConfig::default();
        assert_eq!(synthesize('X', &cfg, 1.0, 0.0, 0), Err(Error::UnknownDigit('X')));
        assert_eq!(
            detect(&[0.0; 10], &cfg, Algorithm::Goertzel),
            Err(Error::BlockLength { expected: 205, got: 10 })
        );
        assert_eq!(digit_position('d').unwrap(), (3, 3));
    }
}
