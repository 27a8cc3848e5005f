//! Text serialization. Big numbers are written as decimal strings so the JSON
//! stays exact; fractions use `a/b`.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{fmt_rat, PartialFraction, PartialFractions, Rational, RationalGF};
use crate::error::{Error, Result};

fn parse_rat(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s.trim()).map_err(|_| bad())?)),
    }
}

/// `{"numerator": ["1", "-1"], "denominator": [["2", 1], ["4", 1]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalGfJson {
    pub numerator: Vec<String>,
    pub denominator: Vec<(String, u32)>,
}

/// Terms are `(num, den, m, e)` for `(num/den) / (1 - m t)^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialFractionsJson {
    pub polynomial: Vec<String>,
    pub terms: Vec<(String, String, String, u32)>,
}

impl From<&RationalGF> for RationalGfJson {
    fn from(f: &RationalGF) -> Self {
        RationalGfJson {
            numerator: f.numerator.iter().map(fmt_rat).collect(),
            denominator: f.denominator.iter().map(|(q, &e)| (fmt_rat(q), e)).collect(),
        }
    }
}

impl TryFrom<&RationalGfJson> for RationalGF {
    type Error = Error;

    fn try_from(j: &RationalGfJson) -> Result<Self> {
        let numerator = j.numerator.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
        let mut denominator = BTreeMap::new();
        for (q, e) in &j.denominator {
            *denominator.entry(parse_rat(q)?).or_insert(0) += *e;
        }
        Ok(RationalGF::from_parts(numerator, denominator))
    }
}

impl From<&PartialFractions> for PartialFractionsJson {
    fn from(pf: &PartialFractions) -> Self {
        PartialFractionsJson {
            polynomial: pf.polynomial.iter().map(fmt_rat).collect(),
            terms: pf
                .terms
                .iter()
                .map(|t| {
                    (
                        t.coefficient.numer().to_string(),
                        t.coefficient.denom().to_string(),
                        fmt_rat(&t.pole),
                        t.exponent,
                    )
                })
                .collect(),
        }
    }
}

impl TryFrom<&PartialFractionsJson> for PartialFractions {
    type Error = Error;

    fn try_from(j: &PartialFractionsJson) -> Result<Self> {
        let polynomial = j.polynomial.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
        let terms = j
            .terms
            .iter()
            .map(|(n, d, m, e)| {
                Ok(PartialFraction {
                    coefficient: parse_rat(&format!("{n}/{d}"))?,
                    pole: parse_rat(m)?,
                    exponent: *e,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PartialFractions { polynomial, terms })
    }
}

impl RationalGF {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(RationalGfJson::from(self)).expect("plain strings serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let j: RationalGfJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        RationalGF::try_from(&j)
    }
}

impl PartialFractions {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PartialFractionsJson::from(self)).expect("plain strings serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let j: PartialFractionsJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        PartialFractions::try_from(&j)
    }
}
