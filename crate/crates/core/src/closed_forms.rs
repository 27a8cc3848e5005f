//! Closed-form `A` and `B` functions for the group classes treated in the
//! literature on simultaneous conjugacy, written as data in a small template
//! language and evaluated exactly.
//!
//! Every coefficient is a sum of monomials `c · x^(a·m + b)` where `x` is the
//! base (the prime `p`, or `n` for the dihedral formulas) and `m` the size
//! parameter. Exponents may be negative, which covers the normalized table rows.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::genfun::{Rational, RationalGF};

/// `num/den · x^(a·m + b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mono {
    pub num: i64,
    pub den: i64,
    pub a: i32,
    pub b: i32,
}

impl Mono {
    fn eval(&self, x: i64, m: i64) -> Rational {
        let e = self.a as i64 * m + self.b as i64;
        let power = if e >= 0 {
            Rational::from_integer(BigInt::from(x).pow(e as u32))
        } else {
            Rational::one() / Rational::from_integer(BigInt::from(x).pow((-e) as u32))
        };
        Rational::new(BigInt::from(self.num), BigInt::from(self.den)) * power
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A constant `Σ` of monomials.
    Coef(Vec<Mono>),
    T,
    /// `1 / (1 - c t)`.
    Geometric(Vec<Mono>),
    /// `1 - c t`.
    Linear(Vec<Mono>),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
}

fn coef_value(c: &[Mono], x: i64, m: i64) -> Rational {
    c.iter().fold(Rational::from_integer(BigInt::from(0)), |acc, mono| acc + mono.eval(x, m))
}

impl Expr {
    pub fn eval(&self, x: i64, m: i64) -> RationalGF {
        match self {
            Expr::Coef(c) => RationalGF::constant(coef_value(c, x, m)),
            Expr::T => RationalGF::t(),
            Expr::Geometric(c) => RationalGF::geometric(coef_value(c, x, m)),
            Expr::Linear(c) => RationalGF::linear(coef_value(c, x, m)),
            Expr::Sum(terms) => terms.iter().fold(RationalGF::zero(), |acc, e| acc.add(&e.eval(x, m))),
            Expr::Prod(terms) => terms.iter().fold(RationalGF::one(), |acc, e| acc.mul(&e.eval(x, m))),
        }
    }
}

// Template shorthands. `(num, den, a, b)` is one monomial.

fn c(monos: &[(i64, i64, i32, i32)]) -> Vec<Mono> {
    monos
        .iter()
        .map(|&(num, den, a, b)| Mono { num, den, a, b })
        .collect()
}

/// `x^(a·m + b)` as a coefficient.
fn px(a: i32, b: i32) -> Vec<Mono> {
    c(&[(1, 1, a, b)])
}

fn k(v: Vec<Mono>) -> Expr {
    Expr::Coef(v)
}

fn geo(v: Vec<Mono>) -> Expr {
    Expr::Geometric(v)
}

fn lin(v: Vec<Mono>) -> Expr {
    Expr::Linear(v)
}

fn sum(v: Vec<Expr>) -> Expr {
    Expr::Sum(v)
}

fn prod(v: Vec<Expr>) -> Expr {
    Expr::Prod(v)
}

fn one() -> Expr {
    k(px(0, 0))
}

/// `coef · t · rest...`
fn tterm(coef: Vec<Mono>, rest: Vec<Expr>) -> Expr {
    let mut v = vec![k(coef), Expr::T];
    v.extend(rest);
    prod(v)
}

/// `coef / (1 - pole t)`
fn frac(coef: Vec<Mono>, pole: Vec<Mono>) -> Expr {
    prod(vec![k(coef), geo(pole)])
}

/// A closed-form `(A, B)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub a: RationalGF,
    pub b: RationalGF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "name")]
pub enum FormulaId {
    Abelian { order: u64 },
    CentralQuotientP2 { p: u64, m: u32 },
    CentralQuotientP3NoAbelianMax { p: u64, m: u32 },
    CentralQuotientP3AbelianMax { p: u64, m: u32 },
    MaximalClassAbelianMax { p: u64, m: u32 },
    #[serde(rename = "maximal_class_P1P3")]
    MaximalClassP1P3 { p: u64, m: u32 },
    ExtraspecialP5 { p: u64 },
    DihedralEven { n: u64 },
    MaximalClass2Group { n: u32 },
    /// Rank-5 families with a Camina pair `(G, Z(G))` and `|G'| = p^2`.
    Phi7Family { p: u64 },
    TableRow { family: Family, p: u64 },
}

impl FormulaId {
    pub fn name(&self) -> &'static str {
        match self {
            FormulaId::Abelian { .. } => "abelian",
            FormulaId::CentralQuotientP2 { .. } => "central_quotient_p2",
            FormulaId::CentralQuotientP3NoAbelianMax { .. } => "central_quotient_p3_no_abelian_max",
            FormulaId::CentralQuotientP3AbelianMax { .. } => "central_quotient_p3_abelian_max",
            FormulaId::MaximalClassAbelianMax { .. } => "maximal_class_abelian_max",
            FormulaId::MaximalClassP1P3 { .. } => "maximal_class_P1P3",
            FormulaId::ExtraspecialP5 { .. } => "extraspecial_p5",
            FormulaId::DihedralEven { .. } => "dihedral_even",
            FormulaId::MaximalClass2Group { .. } => "maximal_class_2group",
            FormulaId::Phi7Family { .. } => "phi7_family",
            FormulaId::TableRow { .. } => "table_row",
        }
    }

    pub fn evaluate(&self) -> Result<ClosedForm> {
        let pair = |a: Result<RationalGF>, b: Result<RationalGF>| -> Result<ClosedForm> { Ok(ClosedForm { a: a?, b: b? }) };
        match *self {
            FormulaId::Abelian { order } => {
                if order == 0 {
                    return Err(Error::InvalidParameters("abelian order must be positive".into()));
                }
                let f = RationalGF::geometric(Rational::from_integer(BigInt::from(order)));
                Ok(ClosedForm { a: f.clone(), b: f })
            }
            FormulaId::CentralQuotientP2 { p, m } => pair(a_central_quotient_p2(p, m), b_central_quotient_p2(p, m)),
            FormulaId::CentralQuotientP3NoAbelianMax { p, m } => {
                pair(a_central_quotient_p3(p, m, false), b_central_quotient_p3(p, m, false))
            }
            FormulaId::CentralQuotientP3AbelianMax { p, m } => {
                pair(a_central_quotient_p3(p, m, true), b_central_quotient_p3(p, m, true))
            }
            FormulaId::MaximalClassAbelianMax { p, m } => pair(
                a_maximal_class(p, m, MaximalClassCase::AbelianMax),
                b_maximal_class(p, m, MaximalClassCase::AbelianMax),
            ),
            FormulaId::MaximalClassP1P3 { p, m } => pair(
                a_maximal_class(p, m, MaximalClassCase::P1P3NoAbelianMax),
                b_maximal_class(p, m, MaximalClassCase::P1P3NoAbelianMax),
            ),
            FormulaId::ExtraspecialP5 { p } => pair(a_extraspecial_p5(p), b_extraspecial_p5(p)),
            FormulaId::DihedralEven { n } => pair(a_dihedral(n), b_dihedral(n)),
            FormulaId::MaximalClass2Group { n } => pair(a_maximal_class_2group(n), b_maximal_class_2group(n)),
            FormulaId::Phi7Family { p } => pair(a_phi7_family(p), b_phi7_family(p)),
            FormulaId::TableRow { family, p } => {
                let (a, b) = table_row(family, p)?;
                Ok(ClosedForm { a, b })
            }
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn need_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!("{p} is not prime")))
    }
}

fn need_m(m: u32, min: u32, what: &str) -> Result<()> {
    if m >= min {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!("{what} needs m >= {min}, got {m}")))
    }
}

fn eval_p(e: Expr, p: u64, m: u32) -> RationalGF {
    e.eval(p as i64, m as i64)
}

/// `|G/Z(G)| = p^2`, `|G| = p^m`.
pub fn a_central_quotient_p2(p: u64, m: u32) -> Result<RationalGF> {
    need_prime(p)?;
    need_m(m, 3, "central_quotient_p2")?;
    let e = prod(vec![
        k(px(-1, 0)),
        sum(vec![
            frac(px(1, -2), px(1, 0)),
            frac(c(&[(1, 1, 1, 0), (-1, 1, 1, -2)]), px(1, -1)),
        ]),
    ]);
    Ok(eval_p(e, p, m))
}

pub fn b_central_quotient_p2(p: u64, m: u32) -> Result<RationalGF> {
    need_prime(p)?;
    need_m(m, 3, "central_quotient_p2")?;
    let e = prod(vec![lin(px(1, -3)), geo(px(1, -2)), geo(px(1, -1))]);
    Ok(eval_p(e, p, m))
}

/// `|G/Z(G)| = p^3`, with or without an abelian maximal subgroup.
pub fn a_central_quotient_p3(p: u64, m: u32, has_abelian_max: bool) -> Result<RationalGF> {
    need_prime(p)?;
    let e = if has_abelian_max {
        need_m(m, 4, "central_quotient_p3_abelian_max")?;
        prod(vec![
            k(px(-1, 0)),
            sum(vec![
                frac(px(1, -3), px(1, 0)),
                frac(c(&[(1, 1, 1, -1), (-1, 1, 1, -3)]), px(1, -1)),
                frac(c(&[(1, 1, 1, 0), (-1, 1, 1, -1)]), px(1, -2)),
            ]),
        ])
    } else {
        need_m(m, 5, "central_quotient_p3_no_abelian_max")?;
        prod(vec![
            k(px(-1, 0)),
            sum(vec![
                frac(px(1, -3), px(1, 0)),
                frac(c(&[(1, 1, 1, 0), (-1, 1, 1, -3)]), px(1, -2)),
            ]),
        ])
    };
    Ok(eval_p(e, p, m))
}

pub fn b_central_quotient_p3(p: u64, m: u32, has_abelian_max: bool) -> Result<RationalGF> {
    need_prime(p)?;
    let e = if has_abelian_max {
        need_m(m, 4, "central_quotient_p3_abelian_max")?;
        prod(vec![
            geo(px(1, -3)),
            sum(vec![
                one(),
                tterm(c(&[(1, 1, 1, -2), (-1, 1, 1, -4)]), vec![geo(px(1, -1))]),
                tterm(c(&[(1, 1, 1, -2), (-1, 1, 1, -3)]), vec![geo(px(1, -2))]),
            ]),
        ])
    } else {
        need_m(m, 5, "central_quotient_p3_no_abelian_max")?;
        prod(vec![lin(px(1, -5)), geo(px(1, -2)), geo(px(1, -3))])
    };
    Ok(eval_p(e, p, m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MaximalClassCase {
    AbelianMax,
    #[serde(rename = "P1P3_no_abelian_max")]
    P1P3NoAbelianMax,
}

/// Maximal class, positive degree of commutativity, `|G| = p^m`.
pub fn a_maximal_class(p: u64, m: u32, case: MaximalClassCase) -> Result<RationalGF> {
    need_prime(p)?;
    let e = match case {
        MaximalClassCase::AbelianMax => {
            need_m(m, 4, "maximal_class_abelian_max")?;
            prod(vec![
                k(px(-1, 0)),
                sum(vec![
                    frac(px(0, 1), px(1, 0)),
                    frac(c(&[(1, 1, 1, 0), (-1, 1, 1, -1)]), px(0, 2)),
                    frac(c(&[(1, 1, 1, -1), (-1, 1, 0, 1)]), px(1, -1)),
                ]),
            ])
        }
        MaximalClassCase::P1P3NoAbelianMax => {
            need_m(m, 5, "maximal_class_P1P3")?;
            prod(vec![
                k(px(-1, 0)),
                sum(vec![
                    frac(px(0, 1), px(1, 0)),
                    frac(c(&[(1, 1, 1, 0), (-1, 1, 1, -1)]), px(0, 2)),
                    frac(c(&[(1, 1, 1, -1), (-1, 1, 1, -3)]), px(1, -2)),
                    frac(c(&[(1, 1, 1, -3), (-1, 1, 0, 1)]), px(1, -1)),
                ]),
            ])
        }
    };
    Ok(eval_p(e, p, m))
}

pub fn b_maximal_class(p: u64, m: u32, case: MaximalClassCase) -> Result<RationalGF> {
    need_prime(p)?;
    let e = match case {
        MaximalClassCase::AbelianMax => {
            need_m(m, 4, "maximal_class_abelian_max")?;
            prod(vec![
                geo(px(0, 1)),
                sum(vec![
                    one(),
                    tterm(c(&[(1, 1, 1, -2), (-1, 1, 0, 0)]), vec![geo(px(1, -1))]),
                    tterm(c(&[(1, 1, 0, 2), (-1, 1, 0, 1)]), vec![geo(px(0, 2))]),
                ]),
            ])
        }
        MaximalClassCase::P1P3NoAbelianMax => {
            need_m(m, 5, "maximal_class_P1P3")?;
            prod(vec![
                geo(px(0, 1)),
                sum(vec![
                    one(),
                    tterm(
                        c(&[(1, 1, 1, -4), (-1, 1, 0, 0)]),
                        vec![lin(px(1, -4)), geo(px(1, -2)), geo(px(1, -3))],
                    ),
                    tterm(c(&[(1, 1, 1, -3), (-1, 1, 1, -5)]), vec![geo(px(1, -2))]),
                    tterm(c(&[(1, 1, 0, 2), (-1, 1, 0, 1)]), vec![geo(px(0, 2))]),
                ]),
            ])
        }
    };
    Ok(eval_p(e, p, m))
}

fn need_even_n(n: u64) -> Result<()> {
    if n >= 4 && n % 2 == 0 {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!(
            "dihedral formula needs even n >= 4 (order 2n), got n = {n}"
        )))
    }
}

/// Dihedral group of order `2n`, `n` even.
pub fn a_dihedral(n: u64) -> Result<RationalGF> {
    need_even_n(n)?;
    let e = prod(vec![
        k(c(&[(1, 2, 0, -1)])),
        sum(vec![
            frac(c(&[(2, 1, 0, 0)]), c(&[(2, 1, 0, 1)])),
            frac(px(0, 1), c(&[(4, 1, 0, 0)])),
            frac(c(&[(1, 1, 0, 1), (-2, 1, 0, 0)]), px(0, 1)),
        ]),
    ]);
    Ok(e.eval(n as i64, 0))
}

pub fn b_dihedral(n: u64) -> Result<RationalGF> {
    need_even_n(n)?;
    let e = prod(vec![
        geo(c(&[(2, 1, 0, 0)])),
        sum(vec![
            one(),
            tterm(c(&[(1, 2, 0, 1), (-1, 1, 0, 0)]), vec![geo(px(0, 1))]),
            tterm(c(&[(2, 1, 0, 0)]), vec![geo(c(&[(4, 1, 0, 0)]))]),
        ]),
    ]);
    Ok(e.eval(n as i64, 0))
}

fn need_2group_n(n: u32) -> Result<()> {
    if (4..=13).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!(
            "maximal-class 2-group formula needs 4 <= n <= 13, got {n}"
        )))
    }
}

/// Maximal class 2-group of order `2^n`.
pub fn a_maximal_class_2group(n: u32) -> Result<RationalGF> {
    need_2group_n(n)?;
    let e = prod(vec![
        k(px(-1, 0)),
        sum(vec![
            frac(px(0, 1), px(1, 0)),
            frac(px(1, -1), px(0, 2)),
            frac(c(&[(1, 1, 1, -1), (-1, 1, 0, 1)]), px(1, -1)),
        ]),
    ]);
    Ok(e.eval(2, n as i64))
}

/// The dihedral formula at `n -> 2^(n-1)`: the middle term has pole `2^(n-1)`.
pub fn b_maximal_class_2group(n: u32) -> Result<RationalGF> {
    need_2group_n(n)?;
    let e = prod(vec![
        geo(px(0, 1)),
        sum(vec![
            one(),
            tterm(c(&[(1, 1, 1, -2), (-1, 1, 0, 0)]), vec![geo(px(1, -1))]),
            tterm(px(0, 1), vec![geo(px(0, 2))]),
        ]),
    ]);
    Ok(e.eval(2, n as i64))
}

/// The published display `(1/(1-2t))(1 + (2^(n-2)-1)t/(2(1-nt)) + 2t/(1-4t))`,
/// kept for comparison. Its middle pole is `n`, not `2^(n-1)`.
pub fn b_maximal_class_2group_as_printed(n: u32) -> Result<RationalGF> {
    need_2group_n(n)?;
    let r = |v: i64| Rational::from_integer(BigInt::from(v));
    let middle = RationalGF::t()
        .scale(&(r((1 << (n - 2)) - 1) / r(2)))
        .mul(&RationalGF::geometric(r(n as i64)));
    let inner = RationalGF::one()
        .add(&middle)
        .add(&RationalGF::t().scale(&r(2)).mul(&RationalGF::geometric(r(4))));
    Ok(RationalGF::geometric(r(2)).mul(&inner))
}

/// Extraspecial group of order `p^5`.
pub fn a_extraspecial_p5(p: u64) -> Result<RationalGF> {
    need_prime(p)?;
    let e = prod(vec![
        k(px(0, -5)),
        sum(vec![
            frac(px(0, 1), px(0, 5)),
            frac(c(&[(1, 1, 0, 5), (-1, 1, 0, 1)]), px(0, 4)),
        ]),
    ]);
    Ok(eval_p(e, p, 5))
}

/// `B` of the extraspecial group of order `p^5` from the centralizer recursion:
/// the `p^4 - 1` non-central classes all have centralizer `C_p × E` with `E`
/// extraspecial of order `p^3`, whose `B` is the `|G/Z| = p^2` form at `m = 4`.
/// Equals `(1 + (p^4-p^3-p^2-1)t + p t^2) / ((1-pt)(1-p^2t)(1-p^3t))`.
pub fn b_extraspecial_p5(p: u64) -> Result<RationalGF> {
    need_prime(p)?;
    let e = prod(vec![
        geo(px(0, 1)),
        sum(vec![
            one(),
            tterm(
                c(&[(1, 1, 0, 4), (-1, 1, 0, 0)]),
                vec![lin(px(0, 1)), geo(px(0, 2)), geo(px(0, 3))],
            ),
        ]),
    ]);
    Ok(eval_p(e, p, 5))
}

/// The published display `(1 - t)/((1 - pt)(1 - p^4 t))`, kept for comparison.
pub fn b_extraspecial_p5_as_printed(p: u64) -> Result<RationalGF> {
    need_prime(p)?;
    let e = prod(vec![lin(px(0, 0)), geo(px(0, 1)), geo(px(0, 4))]);
    Ok(eval_p(e, p, 5))
}

/// Stem groups of rank 5 with `|Z| = p` and `|G'| = p^2` (families 7 and 8
/// for odd `p`, families 6 and 7 for `p = 2`).
pub fn a_phi7_family(p: u64) -> Result<RationalGF> {
    need_prime(p)?;
    let e = prod(vec![
        k(px(0, -5)),
        sum(vec![
            frac(px(0, 1), px(0, 5)),
            frac(c(&[(1, 1, 0, 3), (-1, 1, 0, 1)]), px(0, 4)),
            frac(c(&[(1, 1, 0, 5), (-1, 1, 0, 3)]), px(0, 3)),
        ]),
    ]);
    Ok(eval_p(e, p, 5))
}

pub fn b_phi7_family(p: u64) -> Result<RationalGF> {
    need_prime(p)?;
    let e = prod(vec![lin(px(0, 0)), geo(px(0, 3)), geo(px(0, 2))]);
    Ok(eval_p(e, p, 5))
}

/// Normalized `(A, B)` pair of the family table, with poles `p^-k`.
pub fn table_row(family: Family, p: u64) -> Result<(RationalGF, RationalGF)> {
    need_prime(p)?;
    if family.is_gamma() && p != 2 {
        return Err(Error::InvalidParameters(format!("{} rows need p = 2", family.name())));
    }
    if family.is_phi() && p == 2 {
        return Err(Error::InvalidParameters(format!("{} rows need an odd prime", family.name())));
    }
    use Family::*;
    // `x^-j` as a coefficient or pole.
    let q = |j: i32| px(0, -j);
    let (a, b) = match family {
        Abelian => (frac(q(0), q(0)), frac(q(0), q(0))),
        Phi2 | Gamma2 => (
            sum(vec![
                frac(c(&[(1, 1, 0, 0), (-1, 1, 0, -2)]), q(1)),
                frac(q(2), q(0)),
            ]),
            sum(vec![
                frac(c(&[(-1, 1, 0, -1)]), q(2)),
                frac(c(&[(1, 1, 0, 0), (1, 1, 0, -1)]), q(1)),
            ]),
        ),
        Phi3 | Phi4 | Gamma3 | Gamma4 => (
            sum(vec![
                frac(c(&[(1, 1, 0, 0), (-1, 1, 0, -1)]), q(2)),
                frac(c(&[(1, 1, 0, -1), (-1, 1, 0, -3)]), q(1)),
                frac(q(3), q(0)),
            ]),
            sum(vec![
                frac(c(&[(-1, 1, 0, -1)]), q(3)),
                frac(q(0), q(2)),
                frac(q(1), q(1)),
            ]),
        ),
        Phi5 | Gamma5 => (
            sum(vec![
                frac(c(&[(1, 1, 0, 0), (-1, 1, 0, -4)]), q(1)),
                frac(q(4), q(0)),
            ]),
            sum(vec![
                frac(q(0), q(4)),
                frac(c(&[(-1, 1, 0, 1), (-1, 1, 0, 0), (-1, 1, 0, -1), (-1, 1, 0, -2)]), q(3)),
                frac(c(&[(1, 1, 0, 1), (1, 1, 0, 0), (1, 1, 0, -1), (1, 1, 0, -2)]), q(2)),
            ]),
        ),
        Phi6 => (
            sum(vec![
                frac(c(&[(1, 1, 0, 0), (-1, 1, 0, -3)]), q(2)),
                frac(q(3), q(0)),
            ]),
            sum(vec![
                frac(c(&[(-1, 1, 0, -1), (-1, 1, 0, -2)]), q(3)),
                frac(c(&[(1, 1, 0, 0), (1, 1, 0, -1), (1, 1, 0, -2)]), q(2)),
            ]),
        ),
        Phi7 | Phi8 | Gamma6 | Gamma7 => (
            sum(vec![
                frac(c(&[(1, 1, 0, 0), (-1, 1, 0, -2)]), q(2)),
                frac(c(&[(1, 1, 0, -2), (-1, 1, 0, -4)]), q(1)),
                frac(q(4), q(0)),
            ]),
            sum(vec![
                frac(c(&[(-1, 1, 0, -1), (-1, 1, 0, -2)]), q(3)),
                frac(c(&[(1, 1, 0, 0), (1, 1, 0, -1), (1, 1, 0, -2)]), q(2)),
            ]),
        ),
        Phi9 | Gamma8 => (
            sum(vec![
                frac(c(&[(1, 1, 0, 0), (-1, 1, 0, -1)]), q(3)),
                frac(c(&[(1, 1, 0, -1), (-1, 1, 0, -4)]), q(1)),
                frac(q(4), q(0)),
            ]),
            sum(vec![
                frac(c(&[(-1, 1, 0, -1)]), q(4)),
                frac(q(0), q(3)),
                frac(q(1), q(1)),
            ]),
        ),
        Phi10 => (
            sum(vec![
                frac(c(&[(1, 1, 0, 0), (-1, 1, 0, -1)]), q(3)),
                frac(c(&[(1, 1, 0, -1), (-1, 1, 0, -3)]), q(2)),
                frac(c(&[(1, 1, 0, -3), (-1, 1, 0, -4)]), q(1)),
                frac(q(4), q(0)),
            ]),
            sum(vec![
                frac(c(&[(-1, 1, 0, -1)]), q(4)),
                frac(c(&[(1, 1, 0, 0), (-1, 1, 0, -2)]), q(3)),
                frac(c(&[(1, 1, 0, -1), (1, 1, 0, -2)]), q(2)),
            ]),
        ),
    };
    Ok((eval_p(a, p, 0), eval_p(b, p, 0)))
}

/// The closed form that applies to a family's stem group, as used for the
/// table-consistency check.
pub fn stem_formula(family: Family, p: u64) -> FormulaId {
    use Family::*;
    match family {
        Abelian => FormulaId::Abelian { order: p },
        Phi2 | Gamma2 => FormulaId::CentralQuotientP2 { p, m: 3 },
        Phi3 => FormulaId::CentralQuotientP3AbelianMax { p, m: 4 },
        Gamma3 => FormulaId::DihedralEven { n: 8 },
        Phi4 | Gamma4 => FormulaId::CentralQuotientP3AbelianMax { p, m: 5 },
        Phi5 | Gamma5 => FormulaId::ExtraspecialP5 { p },
        Phi6 => FormulaId::CentralQuotientP3NoAbelianMax { p, m: 5 },
        Phi7 | Phi8 | Gamma6 | Gamma7 => FormulaId::Phi7Family { p },
        Phi9 => FormulaId::MaximalClassAbelianMax { p, m: 5 },
        Gamma8 => FormulaId::DihedralEven { n: 16 },
        Phi10 => FormulaId::MaximalClassP1P3 { p, m: 5 },
    }
}
