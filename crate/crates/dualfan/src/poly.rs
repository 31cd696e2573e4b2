//! Integer Laurent polynomials in named parameters, used as specialization
//! targets (`-5*psi`, `q1^-1`, ...). Only construction, addition,
//! multiplication and printing are needed.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::Int;

/// Monomial: parameter name to nonzero exponent, sorted by name.
pub type Monomial = BTreeMap<String, i64>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Int>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Int) -> Self {
        let mut p = Self::default();
        p.add_term(Monomial::new(), c);
        p
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(Int::from(c))
    }

    /// `c * name^exp`.
    pub fn monomial(c: Int, name: &str, exp: i64) -> Self {
        let mut mono = Monomial::new();
        if exp != 0 {
            mono.insert(name.to_string(), exp);
        }
        let mut p = Self::default();
        p.add_term(mono, c);
        p
    }

    pub fn add_term(&mut self, mono: Monomial, c: Int) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mono.clone()).or_insert_with(Int::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Int> {
        &self.terms
    }

    /// Constant value when the polynomial has no parameters.
    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.len() {
            0 => Some(Int::zero()),
            1 => self.terms.get(&Monomial::new()).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (k, e) in m2 {
                    let v = m.entry(k.clone()).or_insert(0);
                    *v += e;
                    if *v == 0 {
                        m.remove(k);
                    }
                }
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

fn fmt_mono(m: &Monomial) -> String {
    m.iter()
        .map(|(k, e)| if *e == 1 { k.clone() } else { format!("{k}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", fmt_mono(m))?;
            } else {
                write!(f, "{a}*{}", fmt_mono(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        let p = ParamPoly::monomial(Int::from(-5), "psi", 1);
        assert_eq!(p.to_string(), "-5*psi");
        let q = ParamPoly::monomial(Int::from(-1), "q1", -1);
        assert_eq!(q.to_string(), "-q1^-1");
        assert_eq!(ParamPoly::from_i64(1).add(&ParamPoly::from_i64(-1)), ParamPoly::zero());
        let r = ParamPoly::monomial(Int::from(1), "q", 1).mul(&ParamPoly::monomial(Int::from(1), "q", -1));
        assert_eq!(r.as_constant(), Some(Int::from(1)));
    }
}
