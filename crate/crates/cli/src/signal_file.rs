//! Text signal files: one sample per line, `re` or `re,im`. Lines starting
//! with `#` are comments; blank lines are skipped.

use std::fmt::Write as _;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

fn parse_number(s: &str, line: usize) -> Result<f64, ParseError> {
    let x: f64 = s.trim().parse().map_err(|_| ParseError {
        line,
        message: format!("invalid number `{}`", s.trim()),
    })?;
    if !x.is_finite() {
        return Err(ParseError { line, message: format!("non-finite value `{}`", s.trim()) });
    }
    Ok(x)
}

pub fn parse(text: &str) -> Result<Vec<Complex64>, ParseError> {
    let mut samples = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let sample = match line.split_once(',') {
            None => Complex64::new(parse_number(line, i + 1)?, 0.0),
            Some((re, im)) => Complex64::new(parse_number(re, i + 1)?, parse_number(im, i + 1)?),
        };
        samples.push(sample);
    }
    if samples.is_empty() {
        return Err(ParseError { line: 0, message: "signal file has no samples".into() });
    }
    Ok(samples)
}

/// Writes real samples, one per line, with an optional comment header.
pub fn render_real(samples: &[f64], comment: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(s, "# {line}");
        }
    }
    for x in samples {
        let _ = writeln!(s, "{x}");
    }
    s
}
