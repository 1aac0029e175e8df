//! Wire formats: small serde DTOs for the JSON payloads the command line
//! and the case catalog exchange, plus the string encoding of rationals.
//!
//! Rationals travel as strings `"num/den"`, with the denominator omitted
//! when it is 1. Integers travel as JSON numbers; values outside the
//! 64-bit range are rejected rather than silently rounded.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{int, Integer, Rational};
use crate::openbook::{BindingSpec, OpenBookSpec};
use crate::plumbing::{PlumbingGraph, Vertex};
use crate::seifert::{AbelianGroup, NormalForm, SeifertData};
use crate::{Error, Result};

/// Renders a rational as `num/den`, omitting a unit denominator.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num` or `num/den`.
pub fn rational_from_str(s: &str) -> Result<Rational> {
    let parse_int = |part: &str| -> Result<Integer> {
        part.trim()
            .parse::<Integer>()
            .map_err(|_| Error::WireRange(format!("bad integer literal {part:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == Integer::from(0) {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
    }
}

pub fn int_to_i64(v: &Integer) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::WireRange(format!("{v} does not fit in 64 bits")))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SeifertDataDto {
    #[serde(default)]
    pub genus: u32,
    pub fibers: Vec<[i64; 2]>,
}

impl SeifertDataDto {
    pub fn to_core(&self) -> Result<SeifertData> {
        SeifertData::new(
            self.genus,
            self.fibers.iter().map(|f| (int(f[0]), int(f[1]))).collect(),
        )
    }

    pub fn from_core(data: &SeifertData) -> Result<Self> {
        let fibers = data
            .fibers()
            .iter()
            .map(|(a, b)| Ok([int_to_i64(a)?, int_to_i64(b)?]))
            .collect::<Result<_>>()?;
        Ok(SeifertDataDto { genus: data.genus(), fibers })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NormalFormDto {
    pub genus: u32,
    pub b: i64,
    pub fibers: Vec<[i64; 2]>,
}

impl NormalFormDto {
    pub fn from_core(n: &NormalForm) -> Result<Self> {
        Ok(NormalFormDto {
            genus: n.genus,
            b: int_to_i64(&n.b)?,
            fibers: n
                .fibers
                .iter()
                .map(|(a, b)| Ok([int_to_i64(a)?, int_to_i64(b)?]))
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AbelianGroupDto {
    pub torsion: Vec<i64>,
    pub rank: u32,
}

impl AbelianGroupDto {
    pub fn from_core(g: &AbelianGroup) -> Result<Self> {
        Ok(AbelianGroupDto {
            torsion: g.torsion.iter().map(int_to_i64).collect::<Result<_>>()?,
            rank: g.rank,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BindingSpecDto {
    pub pair: [i64; 2],
    pub c: i64,
    pub b: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OpenBookSpecDto {
    #[serde(default)]
    pub genus: u32,
    #[serde(default)]
    pub interior: Vec<[i64; 2]>,
    pub bindings: Vec<BindingSpecDto>,
    pub n: i64,
}

impl OpenBookSpecDto {
    pub fn to_core(&self) -> OpenBookSpec {
        OpenBookSpec {
            genus: self.genus,
            interior: self.interior.iter().map(|f| (int(f[0]), int(f[1]))).collect(),
            bindings: self
                .bindings
                .iter()
                .map(|b| BindingSpec {
                    pair: (int(b.pair[0]), int(b.pair[1])),
                    c: int(b.c),
                    b: int(b.b),
                })
                .collect(),
            n: int(self.n),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexDto {
    pub w: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PlumbingGraphDto {
    pub vertices: Vec<VertexDto>,
    pub edges: Vec<[usize; 2]>,
}

impl PlumbingGraphDto {
    pub fn to_core(&self) -> Result<PlumbingGraph> {
        PlumbingGraph::new(
            self.vertices
                .iter()
                .map(|v| Vertex { weight: int(v.w), label: v.label.clone() })
                .collect(),
            self.edges.iter().map(|e| (e[0], e[1])).collect(),
        )
    }

    pub fn from_core(g: &PlumbingGraph) -> Result<Self> {
        Ok(PlumbingGraphDto {
            vertices: g
                .vertices()
                .iter()
                .map(|v| Ok(VertexDto { w: int_to_i64(&v.weight)?, label: v.label.clone() }))
                .collect::<Result<_>>()?,
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        })
    }
}

/// Parses the inline Seifert shorthand `a,b;a,b;...` (genus 0).
pub fn seifert_from_shorthand(s: &str) -> Result<SeifertData> {
    let mut fibers = Vec::new();
    for part in s.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (a, b) = part
            .split_once(',')
            .ok_or_else(|| Error::InvalidSeifert(format!("expected `alpha,beta`, got {part:?}")))?;
        let a = a.trim().parse::<i64>().map_err(|_| {
            Error::InvalidSeifert(format!("bad integer {a:?} in fiber specification"))
        })?;
        let b = b.trim().parse::<i64>().map_err(|_| {
            Error::InvalidSeifert(format!("bad integer {b:?} in fiber specification"))
        })?;
        fibers.push((int(a), int(b)));
    }
    if fibers.is_empty() {
        return Err(Error::InvalidSeifert("no fibers given".into()));
    }
    SeifertData::new(0, fibers)
}

/// Accepts either the inline shorthand or the JSON object form.
pub fn seifert_from_arg(s: &str) -> Result<SeifertData> {
    let trimmed = s.trim();
    if trimmed.starts_with('{') {
        let dto: SeifertDataDto = serde_json::from_str(trimmed)
            .map_err(|e| Error::InvalidSeifert(format!("bad JSON: {e}")))?;
        dto.to_core()
    } else {
        seifert_from_shorthand(trimmed)
    }
}
