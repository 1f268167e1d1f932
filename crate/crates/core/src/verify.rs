//! One-shot invariant suites with a pass/fail table.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::combinatorics::{
    dominance_leq, partitions_of, set_partitions, split_chain_count_formula, split_chain_count_of_type, two_column,
    Partition,
};
use crate::error::{Error, Result};
use crate::finfree::{boxplus, boxtimes, commutator_coefficient, commutator_poly, MonicPoly};
use crate::immanant::{
    charpoly_z_delta, class_sums, delta, imm_delta_minus, immanant_direct, immanant_from_class_sums, immanant_gj,
    DeltaSign,
};
use crate::matrix::RationalMatrix;
use crate::oracle::exact::MomentTable;
use crate::oracle::identities::{
    binomial_ratio_identity, identity_leftdep, identity_rightdep, padding_identity, rothe_hagen_identity,
    telescoping_identity, two_column_m_closed, two_row_e_closed,
};
use crate::oracle::montecarlo::{
    conjugation_expected, max_unitarity_residual, mc_boxplus, mc_boxtimes, mc_commutator_charpoly, mc_conjugation,
    mc_entry_moments, McConfig, McReport,
};
use crate::rational::{big, factorial, int, ratio, to_f64, Rational};
use crate::symfunc::{e_to_m, kernel_sum, kernel_sum_closed, m_to_e, Spectrum};
use crate::symgroup::{c_constant, c_constant_bruteforce, c_constant_two_column, dim_irrep, Permutation};
use crate::weingarten::{integrate_moment_with, weingarten, weingarten_gram, ClassFunction, IndexMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Weingarten,
    Immanant,
    Identities,
    Commutator,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["all", "weingarten", "immanant", "identities", "commutator"];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "weingarten" => Ok(Suite::Weingarten),
            "immanant" => Ok(Suite::Immanant),
            "identities" => Ok(Suite::Identities),
            "commutator" => Ok(Suite::Commutator),
            _ => Err(Error::Parse(format!(
                "unknown suite {s:?}; expected one of {}",
                Suite::NAMES.join(", ")
            ))),
        }
    }
}

/// Caps, Monte Carlo settings and optional replacement Weingarten tables.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub caps: Caps,
    pub mc: McConfig,
    /// Tables used instead of the computed `Wg_{k,d}`, keyed by `(k, d)`.
    pub wg_overrides: HashMap<(usize, usize), ClassFunction>,
}

impl VerifyOptions {
    pub fn wg(&self, k: usize, d: usize) -> Result<Arc<ClassFunction>> {
        match self.wg_overrides.get(&(k, d)) {
            Some(wg) => Ok(Arc::new(wg.clone())),
            None => weingarten(k, d, &self.caps),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sw = self.checks.iter().map(|c| c.suite.len()).max().unwrap_or(5).max(5);
        let nw = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        writeln!(f, "{:<sw$}  {:<nw$}  result  detail", "suite", "check")?;
        for c in &self.checks {
            let r = if c.pass { "PASS" } else { "FAIL" };
            writeln!(f, "{:<sw$}  {:<nw$}  {r:<6}  {}", c.suite, c.name, c.detail)?;
        }
        write!(f, "{} checks, {} failed", self.checks.len(), self.failures())
    }
}

/// Outcome of one check body: `Ok(detail)` on success, `Err(detail)` on failure.
type Outcome = std::result::Result<String, String>;

struct Recorder<'a> {
    suite: &'static str,
    checks: &'a mut Vec<Check>,
}

impl Recorder<'_> {
    fn check(&mut self, name: &str, body: impl FnOnce() -> Result<Outcome>) {
        let (pass, detail) = match body() {
            Ok(Ok(d)) => (true, d),
            Ok(Err(d)) => (false, d),
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(Check {
            suite: self.suite,
            name: name.to_string(),
            pass,
            detail,
        });
    }
}

fn equal<T: PartialEq + fmt::Debug>(left: &T, right: &T, context: impl FnOnce() -> String) -> Outcome {
    if left == right {
        Ok(String::new())
    } else {
        Err(format!("{}: {left:?} != {right:?}", context()))
    }
}

fn bands(report: &McReport, expected: &[f64]) -> Result<Outcome> {
    let checks = report.band_check(expected)?;
    let worst = checks.iter().map(|c| c.z.abs()).fold(0.0, f64::max);
    match checks.iter().find(|c| !c.pass) {
        None => Ok(Ok(format!("n={} max |z|={worst:.2}", report.n))),
        Some(c) => Ok(Err(format!(
            "{}: mean {} vs {} (se {:.3e}, z {:.2})",
            c.label, c.mean, c.expected, c.se, c.z
        ))),
    }
}

fn random_spectrum(rng: &mut ChaCha8Rng, d: usize, range: i64) -> Spectrum {
    Spectrum::from_ints(&(0..d).map(|_| rng.random_range(-range..=range)).collect::<Vec<_>>())
        .expect("non-empty")
}

fn im(v: Vec<usize>) -> IndexMap {
    IndexMap::new(v).expect("valid index map")
}

/// Runs the requested suites.
pub fn run(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let mut checks = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Weingarten {
        weingarten_suite(&mut Recorder { suite: "weingarten", checks: &mut checks }, opts);
    }
    if all || suite == Suite::Immanant {
        immanant_suite(&mut Recorder { suite: "immanant", checks: &mut checks }, opts);
    }
    if all || suite == Suite::Identities {
        identities_suite(&mut Recorder { suite: "identities", checks: &mut checks }, opts);
    }
    if all || suite == Suite::Commutator {
        commutator_suite(&mut Recorder { suite: "commutator", checks: &mut checks }, opts);
    }
    VerifyReport { checks }
}

fn entry_moments(opts: &VerifyOptions, d: usize) -> Result<(Rational, Rational)> {
    let caps = &opts.caps;
    let second = integrate_moment_with(opts.wg(1, d)?.as_ref(), &im(vec![1]), &im(vec![1]), &im(vec![1]), &im(vec![1]), d, caps)?;
    let ones = im(vec![1, 1]);
    let fourth = integrate_moment_with(opts.wg(2, d)?.as_ref(), &ones, &ones, &ones, &ones, d, caps)?;
    Ok((second, fourth))
}

fn weingarten_suite(r: &mut Recorder, opts: &VerifyOptions) {
    let caps = &opts.caps;
    r.check("Wg_2,d = 1/(d²-1), -1/(d(d²-1)) for d=2..6", || {
        for d in 2..=6i64 {
            let wg = opts.wg(2, d as usize)?;
            let got = (wg.get(&Partition::column(2)).clone(), wg.get(&Partition::row(2)).clone());
            let out = equal(&got, &(ratio(1, d * d - 1), ratio(-1, d * (d * d - 1))), || format!("d={d}"));
            if out.is_err() {
                return Ok(out);
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("Gram-system oracle agrees, k<=4, d=k..k+2", || {
        for k in 1..=4 {
            for d in k..=k + 2 {
                let out = equal(opts.wg(k, d)?.as_ref(), &weingarten_gram(k, d, caps)?, || format!("k={k} d={d}"));
                if out.is_err() {
                    return Ok(out);
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("E|u11|² = 1/d, E|u11|⁴ = 2/(d(d+1)), d=1..6", || {
        for d in 1..=6i64 {
            let got = entry_moments(opts, d as usize)?;
            let out = equal(&got, &(ratio(1, d), ratio(2, d * (d + 1))), || format!("d={d}"));
            if out.is_err() {
                return Ok(out);
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("unitarity sum rule Σ_j E|u1j|² = 1, d<=6", || {
        for d in 1..=6 {
            let wg = opts.wg(1, d)?;
            let mut total = Rational::zero();
            for j in 1..=d {
                total += integrate_moment_with(&wg, &im(vec![1]), &im(vec![j]), &im(vec![1]), &im(vec![j]), d, caps)?;
            }
            let out = equal(&total, &int(1), || format!("d={d}"));
            if out.is_err() {
                return Ok(out);
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("row orthogonality Σ_j E[u1j ū2j u2j' ū1j'] = 0, d<=5", || {
        for d in 2..=5 {
            let wg = opts.wg(2, d)?;
            let mut total = Rational::zero();
            for j in 1..=d {
                total += integrate_moment_with(&wg, &im(vec![1, 2]), &im(vec![j, 1]), &im(vec![2, 1]), &im(vec![j, 1]), d, caps)?;
            }
            let out = equal(&total, &int(0), || format!("d={d}"));
            if out.is_err() {
                return Ok(out);
            }
        }
        Ok(Ok(String::new()))
    });
    for d in [2usize, 3, 5] {
        r.check(&format!("Monte Carlo E|u11|², E|u11|⁴ within 4 SE, d={d}"), || {
            let (second, fourth) = entry_moments(opts, d)?;
            bands(&mc_entry_moments(d, &opts.mc)?, &[to_f64(&second), to_f64(&fourth)])
        });
    }
}

fn immanant_suite(r: &mut Recorder, opts: &VerifyOptions) {
    let caps = &opts.caps;
    r.check("Imm^λ(δ_−(X)) closed form = direct, k<=7, 20 spectra", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0x1);
        for k in 1..=7 {
            for _ in 0..20 {
                let x = random_spectrum(&mut rng, k, 5);
                let sums = class_sums(&delta(&x, DeltaSign::Minus), caps)?;
                for lam in partitions_of(k) {
                    let out = equal(&imm_delta_minus(&lam, &x)?, &immanant_from_class_sums(&lam, &sums, caps)?, || {
                        format!("λ={lam} X={x:?}")
                    });
                    if out.is_err() {
                        return Ok(out);
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("permanent of δ_−(X) = Σ_l (-1)^l (k-l)! l! e_(k-l) e_l, k<=7", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0x2);
        for k in 1..=7 {
            let x = random_spectrum(&mut rng, k, 5);
            let out = equal(
                &immanant_direct(&Partition::row(k), &delta(&x, DeltaSign::Minus), caps)?,
                &imm_delta_minus(&Partition::row(k), &x)?,
                || format!("X={x:?}"),
            );
            if out.is_err() {
                return Ok(out);
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("Σ_λ dim(λ) Imm^λ(Y) = n! ∏ y_ii, n<=5", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0x3);
        for n in 1..=5 {
            let y = RationalMatrix::from_fn(n, |_, _| int(rng.random_range(-4..=4)));
            let sums = class_sums(&y, caps)?;
            let mut total = Rational::zero();
            for lam in partitions_of(n) {
                total += big(dim_irrep(&lam)) * immanant_from_class_sums(&lam, &sums, caps)?;
            }
            let diag: Rational = (0..n).map(|i| y.get(i, i).clone()).product();
            let out = equal(&total, &(big(factorial(n)) * diag), || format!("n={n}"));
            if out.is_err() {
                return Ok(out);
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("coefficient extraction = direct immanant, n<=5, 10 matrices", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0x4);
        for n in 1..=5 {
            for _ in 0..10 {
                let y = RationalMatrix::from_fn(n, |_, _| int(rng.random_range(-4..=4)));
                let sums = class_sums(&y, caps)?;
                for lam in partitions_of(n) {
                    let out = equal(&immanant_gj(&lam, &y, caps)?, &immanant_from_class_sums(&lam, &sums, caps)?, || {
                        format!("λ={lam} n={n}")
                    });
                    if out.is_err() {
                        return Ok(out);
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("charpoly of Z δ_−(X): closed form = expansion, k<=6", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0x5);
        for k in 2..=6 {
            for _ in 0..5 {
                let x = random_spectrum(&mut rng, k, 5);
                let z = random_spectrum(&mut rng, k, 5);
                charpoly_z_delta(&x, &z)?;
            }
        }
        Ok(Ok(String::new()))
    });
}

fn identities_suite(r: &mut Recorder, opts: &VerifyOptions) {
    let caps = &opts.caps;
    r.check("e_(k-p,p) in monomials, k<=10", || {
        for k in 0..=10 {
            for p in 0..=k / 2 {
                let lam = Partition::from_unsorted(vec![k - p, p]);
                let out = equal(&e_to_m(&lam, caps)?, &two_row_e_closed(k, p)?, || format!("k={k} p={p}"));
                if out.is_err() {
                    return Ok(out);
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("m_(2_k^q) in elementaries, k<=10", || {
        for k in 0..=10 {
            for q in 0..=k / 2 {
                let out = equal(&m_to_e(&two_column(k, q)?, caps)?, &two_column_m_closed(k, q)?, || {
                    format!("k={k} q={q}")
                });
                if out.is_err() {
                    return Ok(out);
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("orbit padding identity, k<=6, d<=8", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0x6);
        for d in 1..=8 {
            let a = random_spectrum(&mut rng, d, 3);
            for k in 0..=6 {
                for q in 0..=k / 2 {
                    let (l, rhs) = padding_identity(&a, k, q)?;
                    let out = equal(&l, &rhs, || format!("k={k} q={q} d={d}"));
                    if out.is_err() {
                        return Ok(out);
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("split-chain counts, k<=6", || {
        for k in 0..=6 {
            for l in 0..=k {
                for q in 0..=k / 2 {
                    let out = equal(
                        &num_bigint::BigInt::from(split_chain_count_of_type(k, l, q, caps)?),
                        &split_chain_count_formula(k, l, q),
                        || format!("k={k} l={l} q={q}"),
                    );
                    if out.is_err() {
                        return Ok(out);
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("telescoping binomial sum, k<=12", || {
        for k in 0..=12 {
            for q in 0..=k / 2 {
                for p in q..=k / 2 {
                    let (l, rhs) = telescoping_identity(k, q, p)?;
                    let out = equal(&l, &rhs, || format!("k={k} q={q} p={p}"));
                    if out.is_err() {
                        return Ok(out);
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("alternating binomial-ratio sum, n<=8, y=1..12", || {
        for n in 0..=8 {
            for y in 1..=12 {
                let (l, rhs) = binomial_ratio_identity(n, y);
                let out = equal(&l, &rhs, || format!("n={n} y={y}"));
                if out.is_err() {
                    return Ok(out);
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("Rothe–Hagen sum, n<=8, y=n..n+12", || {
        for n in 1..=8 {
            for y in n..=n + 12 {
                let (l, rhs) = rothe_hagen_identity(n, y)?;
                let out = equal(&l, &rhs, || format!("n={n} y={y}"));
                if out.is_err() {
                    return Ok(out);
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("A-factor and B-factor closed forms, k<=6, d<=8", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0x7);
        for d in 1..=8 {
            for k in 0..=d.min(6) {
                for _ in 0..10 {
                    let a = random_spectrum(&mut rng, d, 3);
                    let (raw, closed) = identity_leftdep(&a, k, caps)?;
                    let out = equal(&raw, &closed, || format!("A-factor k={k} A={a:?}"));
                    if out.is_err() {
                        return Ok(out);
                    }
                    if k % 2 == 0 {
                        let (raw, closed) = identity_rightdep(&a, k, caps)?;
                        let out = equal(&raw, &closed, || format!("B-factor k={k} B={a:?}"));
                        if out.is_err() {
                            return Ok(out);
                        }
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("C_λμ closed form = character brute force, k<=5", || {
        for k in 1..=5 {
            for lam in partitions_of(k) {
                for mu in partitions_of(k) {
                    let c = c_constant(&lam, &mu, caps)?;
                    if c.is_zero() == dominance_leq(&mu, &lam)? {
                        return Ok(Err(format!("λ={lam} μ={mu}: zero pattern disagrees with dominance")));
                    }
                    for rho in partitions_of(k) {
                        let b = c_constant_bruteforce(&lam, &mu, &Permutation::of_cycle_type(&rho), caps)?;
                        let out = equal(&int(b.raw_sum), &(&c * int(b.character)), || format!("λ={lam} μ={mu} σ∈{rho}"));
                        if out.is_err() {
                            return Ok(out);
                        }
                    }
                }
            }
            for p in 0..=k / 2 {
                for q in 0..=k / 2 {
                    let out = equal(&c_constant_two_column(k, p, q)?, &c_constant(&two_column(k, p)?, &two_column(k, q)?, caps)?, || {
                        format!("k={k} p={p} q={q}")
                    });
                    if out.is_err() {
                        return Ok(out);
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    });
    r.check("kernel sums = ∏ power sums over blocks, k<=4, d<=4", || {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0x8);
        for k in 1..=4 {
            for pi in set_partitions(k, caps)? {
                for d in 1..=4 {
                    let b = random_spectrum(&mut rng, d, 3);
                    let out = equal(&kernel_sum(&pi, &b, caps)?, &kernel_sum_closed(&pi, &b), || format!("π={pi:?} d={d}"));
                    if out.is_err() {
                        return Ok(out);
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    });
}

/// Every multiset of size `d` with entries in `-2..=2`.
pub fn small_spectra(d: usize) -> Vec<Spectrum> {
    (-2i64..=2)
        .combinations_with_replacement(d)
        .map(|v| Spectrum::from_ints(&v).expect("non-empty"))
        .collect()
}

fn triple_route(tables: &[MomentTable], a: &Spectrum, b: &Spectrum) -> Result<Outcome> {
    let poly = commutator_poly(&MonicPoly::from_spectrum(a), &MonicPoly::from_spectrum(b))?;
    for (k, table) in tables.iter().enumerate() {
        let brute = table.expected_ek(a, b)?;
        let closed = commutator_coefficient(k, a, b)?;
        if brute != closed || &closed != poly.coeff(k) {
            return Ok(Err(format!(
                "A={a:?} B={b:?} k={k}: brute force {brute}, coefficient form {closed}, convolution form {}",
                poly.coeff(k)
            )));
        }
        if k % 2 == 1 && !brute.is_zero() {
            return Ok(Err(format!("A={a:?} B={b:?}: odd coefficient k={k} is {brute}")));
        }
    }
    Ok(Ok(String::new()))
}

fn tables(opts: &VerifyOptions, d: usize) -> Result<Vec<MomentTable>> {
    (0..=d)
        .map(|k| MomentTable::new(opts.wg(k, d)?.as_ref(), k, d, &opts.caps))
        .collect()
}

fn commutator_suite(r: &mut Recorder, opts: &VerifyOptions) {
    for d in [2usize, 3] {
        r.check(&format!("three exact routes agree, all spectra in {{-2..2}}, d={d}"), || {
            let tables = tables(opts, d)?;
            let spectra = small_spectra(d);
            for a in &spectra {
                for b in &spectra {
                    let out = triple_route(&tables, a, b)?;
                    if out.is_err() {
                        return Ok(out);
                    }
                }
            }
            Ok(Ok(format!("{} pairs", spectra.len() * spectra.len())))
        });
    }
    r.check("three exact routes agree, 50 sampled pairs, d=4", || {
        let tables = tables(opts, 4)?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0x9);
        for _ in 0..50 {
            let a = random_spectrum(&mut rng, 4, 2);
            let b = random_spectrum(&mut rng, 4, 2);
            let out = triple_route(&tables, &a, &b)?;
            if out.is_err() {
                return Ok(out);
            }
        }
        Ok(Ok(String::new()))
    });
    let flagship = Spectrum::from_ints(&[1, -1]).expect("non-empty");
    r.check("A=B=(1,-1): x^2 + 8/3 on every exact route", || {
        let expected = MonicPoly::new(vec![int(1), int(0), ratio(8, 3)])?;
        let p = MonicPoly::from_spectrum(&flagship);
        let brute = tables(opts, 2)?
            .iter()
            .map(|t| t.expected_ek(&flagship, &flagship))
            .collect::<Result<Vec<_>>>()?;
        let coeffs = (0..=2)
            .map(|k| commutator_coefficient(k, &flagship, &flagship))
            .collect::<Result<Vec<_>>>()?;
        for (route, got) in [
            ("brute force", MonicPoly::new(brute)?),
            ("coefficient form", MonicPoly::new(coeffs)?),
            ("convolution form", commutator_poly(&p, &p)?),
        ] {
            if got != expected {
                return Ok(Err(format!("{route} gives {got}")));
            }
        }
        Ok(Ok(expected.to_string()))
    });
    r.check("A=B=(1,-1): Monte Carlo within 4 SE", || {
        let v = flagship.to_f64();
        bands(&mc_commutator_charpoly(&v, &v, &opts.mc)?, &[1.0, 0.0, 8.0 / 3.0])
    });
    for d in [2usize, 3] {
        r.check(&format!("⊞ and ⊠ match Monte Carlo within 4 SE, d={d}"), || {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.mc.seed ^ 0xa ^ d as u64);
            let a = random_spectrum(&mut rng, d, 2);
            let b = random_spectrum(&mut rng, d, 2);
            let (p, q) = (MonicPoly::from_spectrum(&a), MonicPoly::from_spectrum(&b));
            let (af, bf) = (a.to_f64(), b.to_f64());
            let plus: Vec<f64> = boxplus(&p, &q)?.a().iter().map(to_f64).collect();
            let times: Vec<f64> = boxtimes(&p, &q)?.a().iter().map(to_f64).collect();
            let out = bands(&mc_boxplus(&af, &bf, &opts.mc)?, &plus)?;
            if out.is_err() {
                return Ok(out);
            }
            bands(&mc_boxtimes(&af, &bf, &opts.mc)?, &times)
        });
    }
    r.check("Haar samples unitary to 1e-10, d<=50", || {
        for d in [1, 2, 3, 5, 10, 20, 50] {
            let res = max_unitarity_residual(d, 20, opts.mc.seed);
            if res >= 1e-10 {
                return Ok(Err(format!("d={d}: residual {res:e}")));
            }
        }
        Ok(Ok(String::new()))
    });
    for d in [2usize, 3, 5] {
        r.check(&format!("E[U X U*] = (Tr X / d) I within 4 SE, d={d}"), || {
            let x: Vec<f64> = (0..d).map(|i| i as f64 * 1.5 - 1.0).collect();
            bands(&mc_conjugation(&x, &opts.mc)?, &conjugation_expected(&x))
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions {
            mc: McConfig::default().with_n(20_000),
            ..Default::default()
        }
    }

    #[test]
    fn suite_names() {
        for name in Suite::NAMES {
            name.parse::<Suite>().unwrap();
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn weingarten_suite_passes() {
        let report = run(Suite::Weingarten, &quick());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn corrupted_table_fails() {
        let mut opts = quick();
        let wg = weingarten(2, 3, &opts.caps).unwrap();
        let bad = wg.as_ref().clone().with_value(&Partition::row(2), ratio(-1, 25)).unwrap();
        opts.wg_overrides.insert((2, 3), bad);
        let report = run(Suite::Weingarten, &opts);
        assert!(!report.passed());
        assert!(report.to_string().contains("FAIL"));
    }

    #[test]
    fn multiset_enumeration() {
        assert_eq!(small_spectra(2).len(), 15);
        assert_eq!(small_spectra(3).len(), 35);
    }
}
