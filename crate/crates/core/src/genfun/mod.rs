//! Exact rational generating functions in one variable `t`.
//!
//! A [`RationalGF`] is `N(t) / ∏ (1 - q t)^e` with rational coefficients in
//! `N` and nonzero rational poles `q`. Keeping the denominator factored makes
//! reduction, normalization `t -> t/|G|` and partial fractions exact and cheap.

mod compute;
mod serial;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use compute::{
    a_equivalent, a_of_t, alpha_coefficient, b_equivalent, b_of_t, beta_coefficient, gf_equal, BEngine,
    Fingerprint, MemoPolicy,
};
pub use serial::{PartialFractionsJson, RationalGfJson};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

// ---- dense polynomials, ascending coefficients ----

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// `(1 - q t)^e` expanded.
fn linear_power(q: &Rational, e: u32) -> Vec<Rational> {
    let lin = vec![Rational::one(), -q.clone()];
    (0..e).fold(vec![Rational::one()], |acc, _| poly_mul(&acc, &lin))
}

/// Exact quotient of `p` by `(1 - q t)`, or `None` if it does not divide.
fn div_linear(p: &[Rational], q: &Rational) -> Option<Vec<Rational>> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    let mut prev = Rational::zero();
    for c in &p[..p.len() - 1] {
        let next = c + q * &prev;
        out.push(next.clone());
        prev = next;
    }
    // Leading coefficient must equal -q * (last quotient coefficient).
    if p[p.len() - 1] == -(q * &prev) {
        trim(&mut out);
        Some(out)
    } else {
        None
    }
}

/// `N(t) / ∏ (1 - q t)^e`, always kept reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalGF {
    numerator: Vec<Rational>,
    denominator: BTreeMap<Rational, u32>,
}

impl RationalGF {
    pub fn zero() -> Self {
        RationalGF {
            numerator: Vec::new(),
            denominator: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalGF::from_parts(vec![c], BTreeMap::new())
    }

    pub fn one() -> Self {
        RationalGF::constant(Rational::one())
    }

    pub fn t() -> Self {
        RationalGF::from_parts(vec![Rational::zero(), Rational::one()], BTreeMap::new())
    }

    /// `1 / (1 - q t)`.
    pub fn geometric(q: Rational) -> Self {
        RationalGF::pole_power(q, 1)
    }

    /// `1 / (1 - q t)^e`.
    pub fn pole_power(q: Rational, e: u32) -> Self {
        if q.is_zero() || e == 0 {
            return RationalGF::one();
        }
        RationalGF::from_parts(vec![Rational::one()], BTreeMap::from([(q, e)]))
    }

    /// The polynomial `1 - q t`.
    pub fn linear(q: Rational) -> Self {
        RationalGF::from_parts(vec![Rational::one(), -q], BTreeMap::new())
    }

    pub fn polynomial(coeffs: Vec<Rational>) -> Self {
        RationalGF::from_parts(coeffs, BTreeMap::new())
    }

    /// Build and reduce. Zero poles and zero exponents are dropped.
    pub fn from_parts(mut numerator: Vec<Rational>, denominator: BTreeMap<Rational, u32>) -> Self {
        trim(&mut numerator);
        let denominator = denominator
            .into_iter()
            .filter(|(q, e)| !q.is_zero() && *e > 0)
            .collect();
        let mut f = RationalGF {
            numerator,
            denominator,
        };
        f.reduce();
        f
    }

    fn reduce(&mut self) {
        if self.numerator.is_empty() {
            self.denominator.clear();
            return;
        }
        let poles: Vec<Rational> = self.denominator.keys().cloned().collect();
        for q in poles {
            let e = self.denominator.get_mut(&q).unwrap();
            while *e > 0 {
                match div_linear(&self.numerator, &q) {
                    Some(quot) => {
                        self.numerator = quot;
                        *e -= 1;
                    }
                    None => break,
                }
            }
            if *e == 0 {
                self.denominator.remove(&q);
            }
        }
    }

    pub fn numerator(&self) -> &[Rational] {
        &self.numerator
    }

    /// Pole `q -> exponent e` for each factor `(1 - q t)^e`.
    pub fn denominator(&self) -> &BTreeMap<Rational, u32> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    pub fn has_integer_poles(&self) -> bool {
        self.denominator.keys().all(|q| q.is_integer())
    }

    pub fn denominator_polynomial(&self) -> Vec<Rational> {
        self.denominator
            .iter()
            .fold(vec![Rational::one()], |acc, (q, &e)| poly_mul(&acc, &linear_power(q, e)))
    }

    pub fn add(&self, other: &RationalGF) -> RationalGF {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut den = self.denominator.clone();
        for (q, &e) in &other.denominator {
            let slot = den.entry(q.clone()).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |f: &RationalGF| -> Vec<Rational> {
            den.iter().fold(f.numerator.clone(), |acc, (q, &e)| {
                let have = f.denominator.get(q).copied().unwrap_or(0);
                poly_mul(&acc, &linear_power(q, e - have))
            })
        };
        let num = poly_add(&lift(self), &lift(other));
        RationalGF::from_parts(num, den)
    }

    pub fn neg(&self) -> RationalGF {
        RationalGF {
            numerator: self.numerator.iter().map(|c| -c).collect(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn sub(&self, other: &RationalGF) -> RationalGF {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RationalGF) -> RationalGF {
        let mut den = self.denominator.clone();
        for (q, &e) in &other.denominator {
            *den.entry(q.clone()).or_insert(0) += e;
        }
        RationalGF::from_parts(poly_mul(&self.numerator, &other.numerator), den)
    }

    pub fn scale(&self, c: &Rational) -> RationalGF {
        if c.is_zero() {
            return RationalGF::zero();
        }
        RationalGF {
            numerator: self.numerator.iter().map(|x| x * c).collect(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn times_t(&self) -> RationalGF {
        if self.is_zero() {
            return RationalGF::zero();
        }
        let mut num = vec![Rational::zero()];
        num.extend(self.numerator.iter().cloned());
        RationalGF {
            numerator: num,
            denominator: self.denominator.clone(),
        }
    }

    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a RationalGF>) -> RationalGF {
        terms.into_iter().fold(RationalGF::zero(), |acc, f| acc.add(f))
    }

    /// First `len` Taylor coefficients at `t = 0`.
    pub fn series(&self, len: usize) -> Vec<Rational> {
        let den = self.denominator_polynomial();
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        for n in 0..len {
            // den(0) = 1, so c_n = num_n - Σ_{k>=1} den_k c_{n-k}.
            let mut c = self.numerator.get(n).cloned().unwrap_or_else(Rational::zero);
            for k in 1..den.len().min(n + 1) {
                c -= &den[k] * &out[n - k];
            }
            out.push(c);
        }
        out
    }

    /// Substitute `t -> t / order`.
    pub fn normalize(&self, order: u64) -> RationalGF {
        let s = Rational::from_integer(BigInt::from(order));
        self.substitute_scale(&s.recip())
    }

    /// Substitute `t -> c t`.
    pub fn substitute_scale(&self, c: &Rational) -> RationalGF {
        let mut power = Rational::one();
        let numerator = self
            .numerator
            .iter()
            .map(|a| {
                let v = a * &power;
                power *= c;
                v
            })
            .collect();
        let denominator = self.denominator.iter().map(|(q, &e)| (q * c, e)).collect();
        RationalGF::from_parts(numerator, denominator)
    }

    pub fn partial_fractions(&self) -> PartialFractions {
        let mut terms = Vec::new();
        for (q, &e) in &self.denominator {
            let qinv = q.recip();
            // u = 1 - q t, t = (1 - u)/q.
            let t_of_u = vec![qinv.clone(), -qinv.clone()];
            let num_u = self
                .numerator
                .iter()
                .rev()
                .fold(Vec::new(), |acc, c| poly_add(&poly_mul(&acc, &t_of_u), &[c.clone()]));
            let rest_u = self.denominator.iter().filter(|(r, _)| *r != q).fold(
                vec![Rational::one()],
                |acc, (r, &er)| {
                    let ratio = r * &qinv;
                    let lin = vec![Rational::one() - &ratio, ratio];
                    (0..er).fold(acc, |a, _| poly_mul(&a, &lin))
                },
            );
            let g = series_divide(&num_u, &rest_u, e as usize);
            for k in 1..=e {
                let c = g[(e - k) as usize].clone();
                if !c.is_zero() {
                    terms.push(PartialFraction {
                        coefficient: c,
                        pole: q.clone(),
                        exponent: k,
                    });
                }
            }
        }
        let recombined = RationalGF::sum(terms.iter().map(PartialFraction::to_gf).collect::<Vec<_>>().iter());
        let remainder = self.sub(&recombined);
        debug_assert!(remainder.denominator.is_empty());
        PartialFractions {
            polynomial: remainder.numerator,
            terms,
        }
    }
}

/// First `len` coefficients of `a / b` as power series; `b(0) != 0`.
fn series_divide(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let b0inv = b[0].recip();
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        let mut c = a.get(n).cloned().unwrap_or_else(Rational::zero);
        for k in 1..b.len().min(n + 1) {
            c -= &b[k] * &out[n - k];
        }
        out.push(c * &b0inv);
    }
    out
}

/// `coefficient / (1 - pole t)^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFraction {
    pub coefficient: Rational,
    pub pole: Rational,
    pub exponent: u32,
}

impl PartialFraction {
    pub fn to_gf(&self) -> RationalGF {
        RationalGF::pole_power(self.pole.clone(), self.exponent).scale(&self.coefficient)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub polynomial: Vec<Rational>,
    /// Sorted by pole, then exponent.
    pub terms: Vec<PartialFraction>,
}

impl PartialFractions {
    pub fn recombine(&self) -> RationalGF {
        let mut f = RationalGF::polynomial(self.polynomial.clone());
        for term in &self.terms {
            f = f.add(&term.to_gf());
        }
        f
    }
}

fn fmt_rat(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_poly(p: &[Rational]) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let coef = fmt_rat(&mag);
        match k {
            0 => s.push_str(&coef),
            _ => {
                let power = if k > 1 { format!("t^{k}") } else { "t".to_string() };
                let n = mag.numer();
                if !n.is_one() {
                    s.push_str(&n.to_string());
                }
                s.push_str(&power);
                if !mag.is_integer() {
                    s.push_str(&format!("/{}", mag.denom()));
                }
            }
        }
    }
    s
}

/// `q t` written as `t`, `3t`, `t/81` or `2t/81`.
fn fmt_scaled_t(q: &Rational) -> String {
    let n = q.numer();
    let head = if n.is_one() { "t".to_string() } else { format!("{n}t") };
    if q.is_integer() {
        head
    } else {
        format!("{head}/{}", q.denom())
    }
}

fn fmt_factor(q: &Rational, e: u32) -> String {
    let lin = if q.is_negative() {
        format!("(1 + {})", fmt_scaled_t(&-q.clone()))
    } else {
        format!("(1 - {})", fmt_scaled_t(q))
    };
    if e == 1 {
        lin
    } else {
        format!("{lin}^{e}")
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = fmt_poly(&self.numerator);
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        let den: Vec<String> = self.denominator.iter().map(|(q, &e)| fmt_factor(q, e)).collect();
        let num = if self.numerator.len() > 1 { format!("({num})") } else { num };
        if den.len() == 1 && self.denominator.values().all(|&e| e == 1) {
            write!(f, "{num} / {}", den[0])
        } else {
            write!(f, "{num} / ({})", den.join(""))
        }
    }
}

impl fmt::Display for PartialFractions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.polynomial.is_empty() {
            out.push_str(&fmt_poly(&self.polynomial));
        }
        for term in &self.terms {
            let c = &term.coefficient;
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            let coef = if mag.is_integer() { fmt_rat(&mag) } else { format!("({})", fmt_rat(&mag)) };
            out.push_str(&format!("{coef}/{}", fmt_factor(&term.pole, term.exponent)));
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        int(n)
    }

    #[test]
    fn sum_of_geometrics_reduces() {
        // 1/(1-t) - t/(1-t) = 1
        let f = RationalGF::geometric(q(1));
        let g = RationalGF::geometric(q(1)).times_t();
        assert_eq!(f.sub(&g), RationalGF::one());
    }

    #[test]
    fn series_of_geometric() {
        let f = RationalGF::geometric(q(3));
        assert_eq!(f.series(4), vec![q(1), q(3), q(9), q(27)]);
        let g = RationalGF::pole_power(q(2), 2);
        // 1/(1-2t)^2 = Σ (n+1) 2^n t^n
        assert_eq!(g.series(4), vec![q(1), q(4), q(12), q(32)]);
    }

    #[test]
    fn partial_fractions_of_quaternion_b() {
        // (1 - t)/((1 - 2t)(1 - 4t)) = -1/2/(1-2t) + 3/2/(1-4t)
        let f = RationalGF::linear(q(1))
            .mul(&RationalGF::geometric(q(2)))
            .mul(&RationalGF::geometric(q(4)));
        let pf = f.partial_fractions();
        assert!(pf.polynomial.is_empty());
        assert_eq!(
            pf.terms,
            vec![
                PartialFraction {
                    coefficient: rat(-1, 2),
                    pole: q(2),
                    exponent: 1
                },
                PartialFraction {
                    coefficient: rat(3, 2),
                    pole: q(4),
                    exponent: 1
                },
            ]
        );
        assert_eq!(pf.recombine(), f);
    }

    #[test]
    fn partial_fractions_with_repeated_pole_and_polynomial_part() {
        // t^3 / (1 - 2t)^2
        let f = RationalGF::polynomial(vec![q(0), q(0), q(0), q(1)]).mul(&RationalGF::pole_power(q(2), 2));
        let pf = f.partial_fractions();
        assert_eq!(pf.recombine(), f);
        assert!(!pf.polynomial.is_empty());
    }

    #[test]
    fn single_geometric_is_its_own_decomposition() {
        let pf = RationalGF::geometric(q(1)).partial_fractions();
        assert_eq!(
            pf.terms,
            vec![PartialFraction {
                coefficient: q(1),
                pole: q(1),
                exponent: 1
            }]
        );
    }

    #[test]
    fn normalize_abelian() {
        let f = RationalGF::geometric(q(7));
        assert_eq!(f.normalize(7), RationalGF::geometric(q(1)));
        assert_eq!(f.normalize(1), f);
    }

    #[test]
    fn display_forms() {
        let f = RationalGF::linear(q(1))
            .mul(&RationalGF::geometric(q(2)))
            .mul(&RationalGF::geometric(q(4)));
        assert_eq!(f.to_string(), "(1 - t) / ((1 - 2t)(1 - 4t))");
        assert_eq!(RationalGF::geometric(rat(4, 1)).to_string(), "1 / (1 - 4t)");
        assert_eq!(RationalGF::geometric(rat(2, 1)).mul(&RationalGF::geometric(rat(3, 1))).to_string(), "1 / ((1 - 2t)(1 - 3t))");
        assert_eq!(f.partial_fractions().to_string(), "-(1/2)/(1 - 2t) + (3/2)/(1 - 4t)");
    }
}
