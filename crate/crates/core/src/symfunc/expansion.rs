use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{eval_elementary, eval_monomial, Spectrum};
use crate::caps::Caps;
use crate::combinatorics::{kostka_table, Partition};
use crate::error::{Error, Result};
use crate::rational::{int, Rational, RationalStr};
use crate::symgroup::inverse_kostka;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Elementary,
}

/// Degree-`k` symmetric function in one basis; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpansion {
    pub basis: Basis,
    pub k: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SymExpansion {
    pub fn new(basis: Basis, k: usize) -> Self {
        SymExpansion {
            basis,
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, lambda: Partition, coeff: Rational) -> Result<()> {
        if lambda.size() != self.k {
            return Err(Error::SizeMismatch {
                left: lambda.size(),
                right: self.k,
            });
        }
        let entry = self.terms.entry(lambda.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
        Ok(())
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self, x: &Spectrum) -> Rational {
        self.terms
            .iter()
            .map(|(lambda, c)| {
                c * match self.basis {
                    Basis::Monomial => eval_monomial(lambda, x),
                    Basis::Elementary => eval_elementary(lambda, x),
                }
            })
            .sum()
    }

    pub fn to_json(&self) -> SymExpansionJson {
        SymExpansionJson {
            basis: self.basis,
            k: self.k,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    coeff: RationalStr(c.clone()),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SymExpansionJson) -> Result<Self> {
        let mut out = SymExpansion::new(json.basis, json.k);
        for t in &json.terms {
            out.add(t.partition.clone(), t.coeff.0.clone())?;
        }
        Ok(out)
    }
}

/// Wire form: `{"basis": "monomial", "k": 5, "terms": [{"partition": [3,2], "coeff": "1"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymExpansionJson {
    pub basis: Basis,
    pub k: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub coeff: RationalStr,
}

/// `e_λ = Σ_μ (Σ_ν K(ν,λ) K(νᵀ,μ)) m_μ`.
pub fn e_to_m(lambda: &Partition, caps: &Caps) -> Result<SymExpansion> {
    let k = lambda.size();
    let table = kostka_table(k, caps)?;
    let mut out = SymExpansion::new(Basis::Monomial, k);
    for mu in &table.partitions {
        let c: u64 = table
            .partitions
            .iter()
            .map(|nu| table.get(nu, lambda) * table.get(&nu.transpose(), mu))
            .sum();
        out.add(mu.clone(), int(c as i64))?;
    }
    Ok(out)
}

/// `m_λ = Σ_μ (Σ_ν K⁻¹(λ,νᵀ) K⁻¹(μ,ν)) e_μ`.
pub fn m_to_e(lambda: &Partition, caps: &Caps) -> Result<SymExpansion> {
    let k = lambda.size();
    let table = kostka_table(k, caps)?;
    let mut out = SymExpansion::new(Basis::Elementary, k);
    for mu in &table.partitions {
        let mut c = 0i64;
        for nu in &table.partitions {
            c += inverse_kostka(lambda, &nu.transpose(), caps)? * inverse_kostka(mu, nu, caps)?;
        }
        out.add(mu.clone(), int(c))?;
    }
    Ok(out)
}
