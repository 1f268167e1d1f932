//! Monte Carlo estimates over Haar-random unitaries.
//!
//! Samples are drawn in fixed-size chunks. Chunk `c` uses a ChaCha8 stream
//! seeded with `seed` and stream number `c`; chunks run in parallel and their
//! running moments are merged in chunk order, so a report depends only on
//! `(seed, n, chunk_size)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::haar::haar_sample_with;
use crate::error::{Error, Result};

/// Sample count, seed and chunk size of a Monte Carlo run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct McConfig {
    pub n: usize,
    pub seed: u64,
    pub chunk_size: usize,
}

impl McConfig {
    pub const DEFAULT_N: usize = 100_000;
    pub const DEFAULT_SEED: u64 = 20_240_601;
    pub const DEFAULT_CHUNK: usize = 4096;

    pub fn with_n(self, n: usize) -> Self {
        McConfig { n, ..self }
    }
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig {
            n: Self::DEFAULT_N,
            seed: Self::DEFAULT_SEED,
            chunk_size: Self::DEFAULT_CHUNK,
        }
    }
}

/// Means and standard errors (`stddev / √n`) of named per-sample quantities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McReport {
    pub seed: u64,
    pub n: usize,
    pub chunk_size: usize,
    pub estimates: Vec<Estimate>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub label: String,
    #[serde(with = "decimal")]
    pub mean: f64,
    #[serde(with = "decimal")]
    pub se: f64,
}

/// Comparison of one estimate against an exact value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BandCheck {
    pub label: String,
    pub expected: f64,
    pub mean: f64,
    pub se: f64,
    /// `(mean - expected) / se`; `0` when the absolute fallback applies.
    pub z: f64,
    pub pass: bool,
}

/// Below this standard error the quantity is constant up to rounding and is
/// compared with [`ABS_TOLERANCE`] instead.
pub const SE_FLOOR: f64 = 1e-12;
pub const ABS_TOLERANCE: f64 = 1e-9;
pub const BAND: f64 = 4.0;

impl McReport {
    pub fn means(&self) -> Vec<f64> {
        self.estimates.iter().map(|e| e.mean).collect()
    }

    pub fn estimate(&self, label: &str) -> Option<&Estimate> {
        self.estimates.iter().find(|e| e.label == label)
    }

    /// Checks every estimate against `expected` (same order) within
    /// [`BAND`] standard errors.
    pub fn band_check(&self, expected: &[f64]) -> Result<Vec<BandCheck>> {
        if expected.len() != self.estimates.len() {
            return Err(Error::SizeMismatch {
                left: expected.len(),
                right: self.estimates.len(),
            });
        }
        Ok(self
            .estimates
            .iter()
            .zip(expected)
            .map(|(e, &x)| {
                let diff = e.mean - x;
                let (z, pass) = if e.se < SE_FLOOR {
                    (0.0, diff.abs() <= ABS_TOLERANCE)
                } else {
                    let z = diff / e.se;
                    (z, z.abs() <= BAND)
                };
                BandCheck {
                    label: e.label.clone(),
                    expected: x,
                    mean: e.mean,
                    se: e.se,
                    z,
                    pass,
                }
            })
            .collect())
    }
}

mod decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom(format!("not a decimal number: {s:?}")))
    }
}

#[derive(Clone)]
struct Moments {
    count: f64,
    mean: Vec<f64>,
    m2: Vec<f64>,
}

impl Moments {
    fn new(width: usize) -> Self {
        Moments {
            count: 0.0,
            mean: vec![0.0; width],
            m2: vec![0.0; width],
        }
    }

    fn push(&mut self, x: &[f64]) {
        self.count += 1.0;
        for (i, &v) in x.iter().enumerate() {
            let delta = v - self.mean[i];
            self.mean[i] += delta / self.count;
            self.m2[i] += delta * (v - self.mean[i]);
        }
    }

    fn merge(&mut self, other: &Moments) {
        if other.count == 0.0 {
            return;
        }
        let total = self.count + other.count;
        for i in 0..self.mean.len() {
            let delta = other.mean[i] - self.mean[i];
            self.mean[i] += delta * other.count / total;
            self.m2[i] += other.m2[i] + delta * delta * self.count * other.count / total;
        }
        self.count = total;
    }
}

/// Runs `sample` `cfg.n` times and reports each coordinate under `labels`.
pub fn run<F>(cfg: &McConfig, labels: Vec<String>, sample: F) -> Result<McReport>
where
    F: Fn(&mut ChaCha8Rng) -> Vec<f64> + Sync,
{
    if cfg.n == 0 {
        return Err(Error::Invalid("Monte Carlo needs n >= 1".into()));
    }
    if cfg.chunk_size == 0 {
        return Err(Error::Invalid("chunk size must be positive".into()));
    }
    let width = labels.len();
    let chunks = cfg.n.div_ceil(cfg.chunk_size);
    let partials: Vec<Moments> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(c as u64);
            let count = cfg.chunk_size.min(cfg.n - c * cfg.chunk_size);
            let mut m = Moments::new(width);
            for _ in 0..count {
                m.push(&sample(&mut rng));
            }
            m
        })
        .collect();
    let mut total = Moments::new(width);
    for p in &partials {
        total.merge(p);
    }
    let n = cfg.n as f64;
    let estimates = labels
        .into_iter()
        .enumerate()
        .map(|(i, label)| {
            let se = if cfg.n > 1 {
                (total.m2[i] / (n - 1.0)).sqrt() / n.sqrt()
            } else {
                f64::INFINITY
            };
            Estimate {
                label,
                mean: total.mean[i],
                se,
            }
        })
        .collect();
    Ok(McReport {
        seed: cfg.seed,
        n: cfg.n,
        chunk_size: cfg.chunk_size,
        estimates,
    })
}

/// `e_0, ..., e_d` of the eigenvalues of `m` from `Tr(m^j)` by Newton's identities.
pub fn elementary_from_traces(m: &DMatrix<Complex64>) -> Vec<Complex64> {
    let d = m.nrows();
    let mut p = Vec::with_capacity(d);
    let mut power = m.clone();
    for j in 1..=d {
        p.push(power.trace());
        if j < d {
            power = &power * m;
        }
    }
    let mut e = vec![Complex64::new(1.0, 0.0)];
    for j in 1..=d {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 1..=j {
            let term = e[j - i] * p[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / j as f64);
    }
    e
}

fn check_dims(a: &[f64], b: &[f64]) -> Result<usize> {
    if a.is_empty() {
        return Err(Error::Invalid("spectrum is empty".into()));
    }
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.len())
}

/// `U diag(b) U*`.
fn rotate(u: &DMatrix<Complex64>, b: &[f64]) -> DMatrix<Complex64> {
    let d = b.len();
    let mut ub = u.clone();
    for j in 0..d {
        for i in 0..d {
            ub[(i, j)] *= b[j];
        }
    }
    ub * u.adjoint()
}

fn e_labels(d: usize) -> Vec<String> {
    (0..=d).map(|k| format!("e_{k}")).collect()
}

fn real_parts(e: Vec<Complex64>) -> Vec<f64> {
    e.into_iter().map(|z| z.re).collect()
}

/// Estimates `E e_k(AUBU* − UBU*A)` for `A = diag(a)`, `B = diag(b)`.
pub fn mc_commutator_charpoly(a: &[f64], b: &[f64], cfg: &McConfig) -> Result<McReport> {
    let d = check_dims(a, b)?;
    run(cfg, e_labels(d), |rng| {
        let u = haar_sample_with(d, rng);
        let v = rotate(u.matrix(), b);
        let c = DMatrix::from_fn(d, d, |i, j| v[(i, j)] * (a[i] - a[j]));
        real_parts(elementary_from_traces(&c))
    })
}

/// Estimates `E e_k(A + UBU*)`.
pub fn mc_boxplus(a: &[f64], b: &[f64], cfg: &McConfig) -> Result<McReport> {
    let d = check_dims(a, b)?;
    run(cfg, e_labels(d), |rng| {
        let u = haar_sample_with(d, rng);
        let mut m = rotate(u.matrix(), b);
        for i in 0..d {
            m[(i, i)] += a[i];
        }
        real_parts(elementary_from_traces(&m))
    })
}

/// Estimates `E e_k(AUBU*)`.
pub fn mc_boxtimes(a: &[f64], b: &[f64], cfg: &McConfig) -> Result<McReport> {
    let d = check_dims(a, b)?;
    run(cfg, e_labels(d), |rng| {
        let u = haar_sample_with(d, rng);
        let v = rotate(u.matrix(), b);
        let m = DMatrix::from_fn(d, d, |i, j| v[(i, j)] * a[i]);
        real_parts(elementary_from_traces(&m))
    })
}

/// Estimates `E|u_11|²` and `E|u_11|⁴`.
pub fn mc_entry_moments(d: usize, cfg: &McConfig) -> Result<McReport> {
    if d == 0 {
        return Err(Error::Invalid("dimension must be positive".into()));
    }
    let labels = vec!["|u11|^2".to_string(), "|u11|^4".to_string()];
    run(cfg, labels, |rng| {
        let s = haar_sample_with(d, rng).get(0, 0).norm_sqr();
        vec![s, s * s]
    })
}

/// Estimates every entry of `U diag(x) U*`, real then imaginary part, row-major.
pub fn mc_conjugation(x: &[f64], cfg: &McConfig) -> Result<McReport> {
    let d = check_dims(x, x)?;
    let mut labels = Vec::with_capacity(2 * d * d);
    for i in 1..=d {
        for j in 1..=d {
            labels.push(format!("re({i},{j})"));
            labels.push(format!("im({i},{j})"));
        }
    }
    run(cfg, labels, |rng| {
        let w = rotate(haar_sample_with(d, rng).matrix(), x);
        let mut out = Vec::with_capacity(2 * d * d);
        for i in 0..d {
            for j in 0..d {
                out.push(w[(i, j)].re);
                out.push(w[(i, j)].im);
            }
        }
        out
    })
}

/// Expected values for [`mc_conjugation`]: `(Tr X / d) I`.
pub fn conjugation_expected(x: &[f64]) -> Vec<f64> {
    let d = x.len();
    let avg = x.iter().sum::<f64>() / d as f64;
    let mut out = Vec::with_capacity(2 * d * d);
    for i in 0..d {
        for j in 0..d {
            out.push(if i == j { avg } else { 0.0 });
            out.push(0.0);
        }
    }
    out
}

/// Largest unitarity residual over `samples` draws.
pub fn max_unitarity_residual(d: usize, samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| haar_sample_with(d, &mut rng).unitarity_residual())
        .fold(0.0, f64::max)
}
