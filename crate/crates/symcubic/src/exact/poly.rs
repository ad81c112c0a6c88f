//! Homogeneous polynomials with exact rational coefficients.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// A polynomial in `nvars` variables with no zero-coefficient terms.
/// All constructors that build from term lists drop zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Monomial with integer coefficient, convenience for tests and fixtures.
    pub fn term_i64(nvars: usize, exps: &[u8], coef: i64) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(
            Monomial::new(exps.to_vec()),
            BigRational::from_integer(BigInt::from(coef)),
        );
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Total degree when homogeneous; `None` for zero or mixed-degree input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for m in self.terms.keys() {
            match deg {
                None => deg = Some(m.degree()),
                Some(d) if d != m.degree() => return None,
                _ => {}
            }
        }
        deg
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some(down) = m.step_down(i) {
                let e = BigRational::from_integer(BigInt::from(m.0[i]));
                out.add_term(down, c * e);
            }
        }
        out
    }

    /// Substitute `subs[i]` for variable `i`; the images live in `target_nvars`
    /// variables. Used for parametrization checks.
    pub fn substitute(&self, subs: &[Polynomial], target_nvars: usize) -> Polynomial {
        assert_eq!(subs.len(), self.nvars);
        let mut out = Polynomial::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::from_terms(
                target_nvars,
                [(Monomial::new(vec![0; target_nvars]), BigRational::one())],
            );
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    prod = prod.mul(&subs[i]);
                }
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Validate arity, nonzeroness and homogeneity of the expected degree.
    pub fn expect_form(&self, nvars: usize, degree: u32) -> Result<()> {
        if self.nvars != nvars {
            return Err(Error::WrongArity {
                expected: nvars,
                found: self.nvars,
            });
        }
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        match self.homogeneous_degree() {
            Some(d) if d == degree => Ok(()),
            other => Err(Error::NotHomogeneous(format!(
                "expected degree {degree}, found {other:?}"
            ))),
        }
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a.is_one() && m.degree() > 0 {
                write!(f, "{}", m)?;
            } else if m.degree() == 0 {
                write!(f, "{}", a)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

/// Serialization form: coefficients as exact fraction strings "p/q".
#[derive(Debug, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: usize,
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: String,
    pub exps: Vec<u8>,
}

/// Parse an exact fraction string "p/q" or integer string "p".
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad numerator in {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Polynomial {
    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            vars: self.nvars,
            degree: self.homogeneous_degree().unwrap_or(0),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    coef: format_rational(c),
                    exps: m.0.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolynomialJson) -> Result<Polynomial> {
        let mut p = Polynomial::zero(j.vars);
        for t in &j.terms {
            if t.exps.len() != j.vars {
                return Err(Error::InvalidInput(format!(
                    "term exponent tuple has length {}, expected {}",
                    t.exps.len(),
                    j.vars
                )));
            }
            p.add_term(Monomial::new(t.exps.clone()), parse_rational(&t.coef)?);
        }
        Ok(p)
    }
}
