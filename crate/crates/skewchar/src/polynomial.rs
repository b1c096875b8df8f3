//! Exact sparse polynomials in the variables `u`, `v`, `w` over arbitrary-precision
//! integers. This is the value type of every invariant in the crate: the one-variable
//! skew characteristic polynomial lives in `u`, the refined polynomial adds `v`, and
//! the delta-matroid polynomial adds `w`.
//!
//! Terms are kept in a canonical sparse map (no zero coefficients), so structural
//! equality is polynomial equality. The textual form lists terms by descending degree
//! in `u`, then `v`, then `w`, e.g. `u^6 + 10*u^4 + 10*u^2 + 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// One of the three polynomial variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    U,
    V,
    W,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::U => 'u',
            Var::V => 'v',
            Var::W => 'w',
        }
    }
}

/// Exponent triple of a monomial `u^u_deg * v^v_deg * w^w_deg`.
///
/// Ordered ascending by (u, v, w); display iterates the term map in reverse so the
/// leading `u`-term comes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub u: u32,
    pub v: u32,
    pub w: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u: 0, v: 0, w: 0 };

    pub fn new(u: u32, v: u32, w: u32) -> Self {
        Monomial { u, v, w }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            u: self.u + other.u,
            v: self.v + other.v,
            w: self.w + other.w,
        }
    }

    fn degree_in(self, var: Var) -> u32 {
        match var {
            Var::U => self.u,
            Var::V => self.v,
            Var::W => self.w,
        }
    }
}

/// Multivariate polynomial with integer coefficients in canonical sparse form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        Polynomial { terms }
    }

    /// The variable itself, e.g. `Polynomial::var(Var::U)` is `u`.
    pub fn var(var: Var) -> Self {
        Polynomial::var_pow(var, 1)
    }

    pub fn var_pow(var: Var, deg: u32) -> Self {
        let m = match var {
            Var::U => Monomial::new(deg, 0, 0),
            Var::V => Monomial::new(0, deg, 0),
            Var::W => Monomial::new(0, 0, deg),
        };
        Polynomial::term(m, BigInt::one())
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The constant term (coefficient of `u^0 v^0 w^0`).
    pub fn free_term(&self) -> BigInt {
        self.coefficient(Monomial::ONE)
    }

    pub fn degree_in(&self, var: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in(var))
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(*m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Drop every term with positive degree in `var` (evaluate that variable at zero).
    pub fn eval_at_zero(&self, var: Var) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(var) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// JSON form: a list of `{"u": du, "v": dv, "w": dw, "c": coeff}` objects in the
    /// canonical term order. Coefficients must fit an i64 for interchange.
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let mut arr = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.iter().rev() {
            let c64: i64 = c
                .try_into()
                .map_err(|_| Error::CoefficientRange(c.to_string()))?;
            arr.push(serde_json::json!({
                "u": m.u, "v": m.v, "w": m.w, "c": c64,
            }));
        }
        Ok(serde_json::Value::Array(arr))
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Polynomial> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::parse("json", "expected an array of term objects"))?;
        let mut p = Polynomial::zero();
        for (i, t) in arr.iter().enumerate() {
            let obj = t
                .as_object()
                .ok_or_else(|| Error::parse(format!("json term {i}"), "expected an object"))?;
            let deg = |key: &str| -> Result<u32> {
                match obj.get(key) {
                    None => Ok(0),
                    Some(v) => v
                        .as_u64()
                        .and_then(|d| u32::try_from(d).ok())
                        .ok_or_else(|| {
                            Error::parse(format!("json term {i}"), format!("bad degree {key}"))
                        }),
                }
            };
            let c = obj
                .get("c")
                .and_then(|v| v.as_i64())
                .ok_or_else(|| Error::parse(format!("json term {i}"), "bad coefficient"))?;
            p.add_term(Monomial::new(deg("u")?, deg("v")?, deg("w")?), c);
        }
        Ok(p)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (var, deg) in [(Var::U, m.u), (Var::V, m.v), (Var::W, m.w)] {
        if deg == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if deg == 1 {
            write!(f, "{}", var.symbol())?;
        } else {
            write!(f, "{}^{}", var.symbol(), deg)?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write_monomial(f, m)?;
            } else {
                write!(f, "{abs}*")?;
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parse the textual form produced by `Display`. Accepts arbitrary whitespace,
    /// optional `*` between coefficient and variables, and `^` exponents.
    fn from_str(s: &str) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        let n = bytes.len();
        let skip_ws = |i: &mut usize| {
            while *i < n && bytes[*i].is_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == n {
            return Err(Error::parse("polynomial", "empty input"));
        }
        let mut sign = BigInt::one();
        let mut expect_term = true;
        loop {
            skip_ws(&mut i);
            if i == n {
                if expect_term {
                    return Err(Error::parse("polynomial", "trailing operator"));
                }
                break;
            }
            if !expect_term {
                match bytes[i] {
                    '+' => sign = BigInt::one(),
                    '-' => sign = -BigInt::one(),
                    c => {
                        return Err(Error::parse(
                            format!("polynomial char {i}"),
                            format!("expected '+' or '-', found {c:?}"),
                        ))
                    }
                }
                i += 1;
                expect_term = true;
                continue;
            }
            // A term may start with an extra sign, e.g. a leading "-".
            if bytes[i] == '-' {
                sign = -sign;
                i += 1;
                skip_ws(&mut i);
            } else if bytes[i] == '+' {
                i += 1;
                skip_ws(&mut i);
            }
            let mut coeff: Option<BigInt> = None;
            if i < n && bytes[i].is_ascii_digit() {
                let start = i;
                while i < n && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = bytes[start..i].iter().collect();
                coeff = Some(digits.parse().expect("digits"));
            }
            let mut mono = Monomial::ONE;
            loop {
                skip_ws(&mut i);
                if i < n && bytes[i] == '*' {
                    i += 1;
                    skip_ws(&mut i);
                }
                let var = match bytes.get(i) {
                    Some('u') => Var::U,
                    Some('v') => Var::V,
                    Some('w') => Var::W,
                    _ => break,
                };
                i += 1;
                let mut deg: u32 = 1;
                if i < n && bytes[i] == '^' {
                    i += 1;
                    let start = i;
                    while i < n && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(Error::parse(
                            format!("polynomial char {i}"),
                            "missing exponent after '^'",
                        ));
                    }
                    let digits: String = bytes[start..i].iter().collect();
                    deg = digits.parse().map_err(|_| {
                        Error::parse(format!("polynomial char {start}"), "exponent too large")
                    })?;
                }
                mono = mono.mul(match var {
                    Var::U => Monomial::new(deg, 0, 0),
                    Var::V => Monomial::new(0, deg, 0),
                    Var::W => Monomial::new(0, 0, deg),
                });
            }
            if coeff.is_none() && mono == Monomial::ONE {
                return Err(Error::parse(
                    format!("polynomial char {i}"),
                    "expected a coefficient or a variable",
                ));
            }
            let c = coeff.unwrap_or_else(BigInt::one);
            p.add_term(mono, sign.clone() * c);
            sign = BigInt::one();
            expect_term = false;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn u() -> Polynomial {
        Polynomial::var(Var::U)
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancellation() {
        // (u^2 + 1) + (-1) = u^2
        let p = poly("u^2 + 1").add(&Polynomial::constant(-1));
        assert_eq!(p, poly("u^2"));
    }

    #[test]
    fn add_identity() {
        let p = poly("u^3 + 3*u");
        assert_eq!(Polynomial::zero().add(&p), p);
    }

    #[test]
    fn add_wheel_recombination() {
        // First row of the wheel reduction: three known values recombine to the wheel.
        let a = poly("u^6 + 9*u^4 + 9*u^2 + 1");
        let b = poly("u^6 + 10*u^4 + 9*u^2 + 1");
        let c = poly("u^6 + 9*u^4 + 8*u^2 + 1");
        assert_eq!(a.add(&b).sub(&c), poly("u^6 + 10*u^4 + 10*u^2 + 1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(u().mul(&u()), poly("u^2"));
        let w1 = poly("w + 1");
        assert_eq!(w1.mul(&w1), poly("w^2 + 2*w + 1"));
        assert_eq!(poly("u^2 + 1").mul(&u()), poly("u^3 + u"));
    }

    #[test]
    fn eval_at_zero_examples() {
        assert_eq!(poly("u^2 + 1").eval_at_zero(Var::U), Polynomial::one());
        assert_eq!(
            poly("u^6 + 9*u^4 + 12*u^2").eval_at_zero(Var::U),
            Polynomial::zero()
        );
        assert_eq!(poly("w^2 + 2*w").eval_at_zero(Var::W), Polynomial::zero());
    }

    #[test]
    fn display_matches_expected_layout() {
        let p = poly("u^6 + 10*u^4 + 10*u^2 + 1");
        assert_eq!(p.to_string(), "u^6 + 10*u^4 + 10*u^2 + 1");
        let refined_k3 = poly("u^3 + 3*u^2*v + 3*u + v");
        assert_eq!(refined_k3.to_string(), "u^3 + 3*u^2*v + 3*u + v");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(poly("-2*u + 1").to_string(), "-2*u + 1");
    }

    #[test]
    fn json_round_trip() {
        let p = poly("u^3 + 3*u^2*v + 3*u + v - 7*w^2");
        let json = p.to_json().unwrap();
        assert_eq!(Polynomial::from_json(&json).unwrap(), p);
    }

    #[test]
    fn json_rejects_huge_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = Polynomial::constant(big);
        assert!(matches!(p.to_json(), Err(Error::CoefficientRange(_))));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u32..4, 0u32..3, 0u32..3), -9i64..10), 0..6).prop_map(|ts| {
            Polynomial::from_terms(
                ts.into_iter()
                    .map(|((du, dv, dw), c)| (Monomial::new(du, dv, dw), BigInt::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn display_parse_round_trip(a in arb_poly()) {
            let text = a.to_string();
            let back: Polynomial = text.parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
