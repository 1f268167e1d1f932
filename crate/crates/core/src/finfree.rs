//! Finite free additive, multiplicative and subtractive convolutions, and the
//! expected characteristic polynomial of the commutator `AUBU* − UBU*A`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, big, binomial_q, factorial, factorial_q, falling, int, Rational, RationalStr};
use crate::symfunc::{elementary_all, Spectrum};

/// Monic degree-`d` polynomial `Σ_k x^(d-k) (-1)^k a_k` with `a_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MonicPolyJson", into = "MonicPolyJson")]
pub struct MonicPoly {
    a: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonicPolyJson {
    pub d: usize,
    pub a: Vec<RationalStr>,
}

impl MonicPoly {
    pub fn new(a: Vec<Rational>) -> Result<Self> {
        match a.first() {
            Some(a0) if a0.is_one() => Ok(MonicPoly { a }),
            Some(a0) => Err(Error::Invalid(format!("a_0 must be 1, got {a0}"))),
            None => Err(Error::Invalid("coefficient list is empty".into())),
        }
    }

    pub fn from_ints(a: &[i64]) -> Result<Self> {
        Self::new(a.iter().map(|&v| int(v)).collect())
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut a = vec![Rational::zero(); d + 1];
        a[0] = Rational::one();
        MonicPoly { a }
    }

    /// `(x - c)^d`.
    pub fn shifted_power(c: &Rational, d: usize) -> Self {
        let a = (0..=d)
            .map(|k| binomial_q(d as i64, k as i64) * num_traits::pow(c.clone(), k))
            .collect();
        MonicPoly { a }
    }

    /// `∏ (x - s)`, i.e. `a_k = e_k(S)`.
    pub fn from_spectrum(s: &Spectrum) -> Self {
        MonicPoly {
            a: elementary_all(s.values()),
        }
    }

    pub fn d(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.a[k]
    }

    /// Coefficient of `x^(d-k)`, i.e. `(-1)^k a_k`.
    pub fn signed_coeff(&self, k: usize) -> Rational {
        if k.is_multiple_of(2) {
            self.a[k].clone()
        } else {
            -self.a[k].clone()
        }
    }

    /// The polynomial of the negated spectrum: `a_k -> (-1)^k a_k`.
    pub fn reflect(&self) -> Self {
        MonicPoly {
            a: (0..=self.d()).map(|k| self.signed_coeff(k)).collect(),
        }
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        (0..=self.d()).fold(Rational::zero(), |acc, k| acc * x + self.signed_coeff(k))
    }

    pub fn to_json(&self) -> MonicPolyJson {
        self.clone().into()
    }
}

impl TryFrom<MonicPolyJson> for MonicPoly {
    type Error = Error;

    fn try_from(json: MonicPolyJson) -> Result<Self> {
        if json.a.len() != json.d + 1 {
            return Err(Error::Parse(format!(
                "degree {} needs {} coefficients, got {}",
                json.d,
                json.d + 1,
                json.a.len()
            )));
        }
        MonicPoly::new(json.a.into_iter().map(|q| q.0).collect())
    }
}

impl From<MonicPoly> for MonicPolyJson {
    fn from(p: MonicPoly) -> Self {
        MonicPolyJson {
            d: p.d(),
            a: p.a.into_iter().map(RationalStr).collect(),
        }
    }
}

/// Signed expanded form, e.g. `x^3 - 6x^2 + 11x - 6` or `x^3 + 27/8 x`.
impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d();
        let mut first = true;
        for k in 0..=d {
            let c = self.signed_coeff(k);
            if c.is_zero() {
                continue;
            }
            let power = d - k;
            let mono = match power {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{power}"),
            };
            let abs = c.abs();
            let body = if mono.is_empty() {
                rational::format_rational(&abs)
            } else if abs.is_one() {
                mono
            } else if abs.is_integer() {
                format!("{abs}{mono}")
            } else {
                format!("{abs} {mono}")
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn same_degree(p: &MonicPoly, q: &MonicPoly) -> Result<usize> {
    if p.d() != q.d() {
        return Err(Error::DegreeMismatch {
            left: p.d(),
            right: q.d(),
        });
    }
    Ok(p.d())
}

fn additive(p: &MonicPoly, q: &MonicPoly, alternate: bool) -> Result<MonicPoly> {
    let d = same_degree(p, q)?;
    let fact: Vec<Rational> = (0..=d).map(factorial_q).collect();
    let a = (0..=d)
        .map(|k| {
            let mut c = Rational::zero();
            for i in 0..=k {
                let j = k - i;
                let mut term = &fact[d - i] * &fact[d - j] * &p.a[i] * &q.a[j];
                if alternate && j % 2 == 1 {
                    term = -term;
                }
                c += term;
            }
            c / (&fact[d] * &fact[d - k])
        })
        .collect();
    MonicPoly::new(a)
}

/// `p ⊞_d q`: coefficient `k` is `Σ_{i+j=k} (d-i)!(d-j)!/(d!(d-k)!) a_i b_j`.
pub fn boxplus(p: &MonicPoly, q: &MonicPoly) -> Result<MonicPoly> {
    additive(p, q, false)
}

/// `p ⊟_d q`: as `⊞_d` with `b_j` replaced by `(-1)^j b_j`.
pub fn boxminus(p: &MonicPoly, q: &MonicPoly) -> Result<MonicPoly> {
    additive(p, q, true)
}

/// `p ⊠_d q`: coefficient `k` is `a_k b_k / C(d, k)`.
pub fn boxtimes(p: &MonicPoly, q: &MonicPoly) -> Result<MonicPoly> {
    let d = same_degree(p, q)?;
    let a = (0..=d)
        .map(|k| &p.a[k] * &q.a[k] / binomial_q(d as i64, k as i64))
        .collect();
    MonicPoly::new(a)
}

/// `z_d = Σ_k x^(d-2k) C(d,2k) (d)_k k!/(2k)! (d+1-k)/(d+1)`.
pub fn z_poly(d: usize) -> Result<MonicPoly> {
    if d < 1 {
        return Err(Error::OutOfRange("z_d needs d >= 1".into()));
    }
    let mut a = vec![Rational::zero(); d + 1];
    for k in 0..=d / 2 {
        a[2 * k] = binomial_q(d as i64, 2 * k as i64) * big(falling(d as i64, k)) * factorial_q(k)
            / factorial_q(2 * k)
            * int((d + 1 - k) as i64)
            / int(d as i64 + 1);
    }
    MonicPoly::new(a)
}

/// `E c_x(AUBU* − UBU*A) = (p ⊟ p) ⊠ (q ⊟ q) ⊠ z_d` for `p = c_x(A)`, `q = c_x(B)`.
pub fn commutator_poly(p: &MonicPoly, q: &MonicPoly) -> Result<MonicPoly> {
    let d = same_degree(p, q)?;
    let left = boxminus(p, p)?;
    let right = boxminus(q, q)?;
    boxtimes(&boxtimes(&left, &right)?, &z_poly(d)?)
}

/// `Σ_{i+j=k} (-1)^i (d-i)!(d-j)!/(d!(d-k)!) e_i e_j`.
fn signed_pair_sum(e: &[Rational], d: usize, k: usize) -> Rational {
    let mut total = Rational::zero();
    for i in 0..=k {
        let j = k - i;
        let term = big(factorial(d - i) * factorial(d - j)) * &e[i] * &e[j];
        total += if i % 2 == 0 { term } else { -term };
    }
    total / big(factorial(d) * factorial(d - k))
}

/// Coefficient `a_k` of `E c_x(AUBU* − UBU*A)`, from the eigenvalues directly.
pub fn commutator_coefficient(k: usize, a: &Spectrum, b: &Spectrum) -> Result<Rational> {
    let d = a.dim();
    if b.dim() != d {
        return Err(Error::SizeMismatch { left: d, right: b.dim() });
    }
    if k > d {
        return Err(Error::OutOfRange(format!("coefficient index k = {k} exceeds d = {d}")));
    }
    if k % 2 == 1 {
        return Ok(Rational::zero());
    }
    let h = k / 2;
    let ea = elementary_all(a.values());
    let eb = elementary_all(b.values());
    Ok(signed_pair_sum(&ea, d, k) * signed_pair_sum(&eb, d, k) * big(factorial(d - k)) / big(factorial(d - h))
        * factorial_q(h)
        * int((d + 1 - h) as i64)
        / int(d as i64 + 1))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::rational::ratio;

    fn poly(a: &[i64]) -> MonicPoly {
        MonicPoly::from_ints(a).unwrap()
    }

    fn spec(v: &[i64]) -> Spectrum {
        Spectrum::from_ints(v).unwrap()
    }

    #[test]
    fn spectra() {
        assert_eq!(MonicPoly::from_spectrum(&spec(&[1, -1])), poly(&[1, 0, -1]));
        assert_eq!(MonicPoly::from_spectrum(&spec(&[1, 2, 3])), poly(&[1, 6, 11, 6]));
        assert_eq!(MonicPoly::from_spectrum(&spec(&[1, 2, 3])).to_string(), "x^3 - 6x^2 + 11x - 6");
        let c = ratio(-3, 2);
        let s = Spectrum::new(vec![c.clone(); 4]).unwrap();
        assert_eq!(MonicPoly::from_spectrum(&s), MonicPoly::shifted_power(&c, 4));
        let p = MonicPoly::from_spectrum(&spec(&[1, 2, 3]));
        for r in [1, 2, 3] {
            assert_eq!(p.evaluate(&int(r)), int(0));
        }
        assert_eq!(p.evaluate(&int(0)), int(-6));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, 0, -1]).to_string(), "x^2 - 1");
        assert_eq!(z_poly(1).unwrap().to_string(), "x");
        assert_eq!(z_poly(3).unwrap().to_string(), "x^3 + 27/8 x");
        assert_eq!(poly(&[1, 1]).to_string(), "x - 1");
        assert_eq!(MonicPoly::monomial(0).to_string(), "1");
    }

    #[test]
    fn json() {
        let p = poly(&[1, 0, -1]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"d":2,"a":["1","0","-1"]}"#);
        assert_eq!(serde_json::from_str::<MonicPoly>(&json).unwrap(), p);
        assert!(serde_json::from_str::<MonicPoly>(r#"{"d":3,"a":["1","0","-1"]}"#).is_err());
        assert!(serde_json::from_str::<MonicPoly>(r#"{"d":1,"a":["2","0"]}"#).is_err());
        let z = z_poly(2).unwrap();
        let back: MonicPoly = serde_json::from_str(&serde_json::to_string(&z).unwrap()).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn convolution_examples() {
        let p = poly(&[1, 0, -1]);
        assert_eq!(boxplus(&p, &p).unwrap(), poly(&[1, 0, -2]));
        assert_eq!(boxtimes(&p, &p).unwrap(), poly(&[1, 0, 1]));
        assert_eq!(boxminus(&p, &p).unwrap(), poly(&[1, 0, -2]));
        assert_eq!(boxtimes(&p, &MonicPoly::monomial(2)).unwrap(), MonicPoly::monomial(2));
        let (a, b) = (ratio(2, 3), int(-5));
        for d in 1..=6 {
            let sum = boxplus(&MonicPoly::shifted_power(&a, d), &MonicPoly::shifted_power(&b, d)).unwrap();
            assert_eq!(sum, MonicPoly::shifted_power(&(&a + &b), d));
            let diff = boxminus(&MonicPoly::shifted_power(&a, d), &MonicPoly::shifted_power(&a, d)).unwrap();
            assert_eq!(diff, MonicPoly::monomial(d));
        }
        assert!(matches!(
            boxplus(&p, &poly(&[1, 2])),
            Err(Error::DegreeMismatch { left: 2, right: 1 })
        ));
        assert!(boxtimes(&p, &poly(&[1, 2])).is_err());
        assert!(boxminus(&p, &poly(&[1, 2])).is_err());
    }

    #[test]
    fn z_polynomials() {
        assert_eq!(z_poly(1).unwrap(), poly(&[1, 0]));
        assert_eq!(z_poly(2).unwrap().a(), &[int(1), int(0), ratio(2, 3)]);
        assert_eq!(z_poly(3).unwrap().a(), &[int(1), int(0), ratio(27, 8), int(0)]);
        assert!(z_poly(0).is_err());
        for d in 1..=10 {
            let z = z_poly(d).unwrap();
            assert!((1..=d).step_by(2).all(|k| z.coeff(k).is_zero()));
        }
    }

    #[test]
    fn commutator_examples() {
        let p = poly(&[1, 0, -1]);
        assert_eq!(commutator_poly(&p, &p).unwrap().to_string(), "x^2 + 8/3");
        let a = spec(&[1, -1]);
        assert_eq!(commutator_coefficient(2, &a, &a).unwrap(), ratio(8, 3));
        assert_eq!(commutator_coefficient(1, &a, &a).unwrap(), int(0));
        assert_eq!(commutator_coefficient(0, &a, &a).unwrap(), int(1));
        assert!(commutator_coefficient(3, &a, &a).is_err());
        assert!(commutator_coefficient(0, &a, &spec(&[1, 2, 3])).is_err());
        let scalar = MonicPoly::from_spectrum(&spec(&[5, 5, 5]));
        let q = MonicPoly::from_spectrum(&spec(&[1, -2, 7]));
        assert_eq!(commutator_poly(&scalar, &q).unwrap(), MonicPoly::monomial(3));
        // 1 × 1 matrices commute
        assert_eq!(commutator_poly(&poly(&[1, 4]), &poly(&[1, -9])).unwrap(), MonicPoly::monomial(1));
    }

    fn route_check(a: &Spectrum, b: &Spectrum) {
        let p = MonicPoly::from_spectrum(a);
        let q = MonicPoly::from_spectrum(b);
        let c = commutator_poly(&p, &q).unwrap();
        for k in 0..=a.dim() {
            assert_eq!(c.coeff(k), &commutator_coefficient(k, a, b).unwrap(), "A={a:?} B={b:?} k={k}");
            if k % 2 == 1 {
                assert!(c.coeff(k).is_zero());
            }
        }
    }

    #[test]
    fn identities() {
        for d in 1..=8 {
            let p = MonicPoly::from_spectrum(&Spectrum::from_ints(&(0..d as i64).map(|i| i * i - 3).collect::<Vec<_>>()).unwrap());
            assert_eq!(boxplus(&p, &MonicPoly::monomial(d)).unwrap(), p);
            assert_eq!(boxplus(&MonicPoly::monomial(d), &p).unwrap(), p);
            assert_eq!(boxtimes(&p, &MonicPoly::shifted_power(&int(1), d)).unwrap(), p);
            assert_eq!(boxminus(&p, &MonicPoly::monomial(d)).unwrap(), p);
        }
    }

    fn poly_strategy(d: usize) -> impl Strategy<Value = MonicPoly> {
        prop::collection::vec((-9i64..=9, 1i64..=4), d).prop_map(|v| {
            let mut a = vec![int(1)];
            a.extend(v.into_iter().map(|(n, m)| ratio(n, m)));
            MonicPoly::new(a).unwrap()
        })
    }

    fn triple() -> impl Strategy<Value = (MonicPoly, MonicPoly, MonicPoly)> {
        (1usize..=6).prop_flat_map(|d| (poly_strategy(d), poly_strategy(d), poly_strategy(d)))
    }

    fn int_spectra() -> impl Strategy<Value = (Spectrum, Spectrum)> {
        (1usize..=6).prop_flat_map(|d| {
            let s = prop::collection::vec(-3i64..=3, d).prop_map(|v| Spectrum::from_ints(&v).unwrap());
            (s.clone(), s)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn convolutions_commute_and_associate((p, q, r) in triple()) {
            prop_assert_eq!(boxplus(&p, &q).unwrap(), boxplus(&q, &p).unwrap());
            prop_assert_eq!(boxtimes(&p, &q).unwrap(), boxtimes(&q, &p).unwrap());
            prop_assert_eq!(
                boxplus(&boxplus(&p, &q).unwrap(), &r).unwrap(),
                boxplus(&p, &boxplus(&q, &r).unwrap()).unwrap()
            );
            prop_assert_eq!(
                boxtimes(&boxtimes(&p, &q).unwrap(), &r).unwrap(),
                boxtimes(&p, &boxtimes(&q, &r).unwrap()).unwrap()
            );
        }

        #[test]
        fn boxminus_is_boxplus_of_reflection((p, q, _r) in triple()) {
            prop_assert_eq!(boxminus(&p, &q).unwrap(), boxplus(&p, &q.reflect()).unwrap());
        }

        #[test]
        fn reflection_negates_spectrum((a, _b) in int_spectra()) {
            prop_assert_eq!(MonicPoly::from_spectrum(&a).reflect(), MonicPoly::from_spectrum(&a.negated()));
        }

        #[test]
        fn commutator_routes_agree((a, b) in int_spectra()) {
            route_check(&a, &b);
        }
    }
}
