//! JSON-friendly wire forms. Rationals travel as `"p/q"` strings, polynomial
//! terms in descending graded-lex order, Laurent terms by descending `hbar`.

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, rational_to_string, HLaurent, Monomial, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermWire {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentTermWire {
    pub hbar: i64,
    pub poly: Vec<TermWire>,
}

pub fn poly_to_wire(p: &Poly) -> Vec<TermWire> {
    p.terms().rev().map(|(m, c)| TermWire { exponents: m.0.clone(), coeff: rational_to_string(c) }).collect()
}

pub fn poly_from_wire(nvars: usize, terms: &[TermWire]) -> Result<Poly> {
    let parsed = terms
        .iter()
        .map(|t| Ok((Monomial(t.exponents.clone()), parse_rational(&t.coeff)?)))
        .collect::<Result<Vec<_>>>()?;
    Poly::from_terms(nvars, parsed)
}

pub fn laurent_to_wire(h: &HLaurent) -> Vec<LaurentTermWire> {
    h.terms().rev().map(|(e, p)| LaurentTermWire { hbar: e, poly: poly_to_wire(p) }).collect()
}

pub fn laurent_from_wire(nvars: usize, terms: &[LaurentTermWire]) -> Result<HLaurent> {
    let mut out = HLaurent::zero(nvars);
    for t in terms {
        if t.poly.is_empty() {
            return Err(Error::Malformed(format!("empty coefficient at hbar^{}", t.hbar)));
        }
        out.add_term(t.hbar, poly_from_wire(nvars, &t.poly)?);
    }
    Ok(out)
}
