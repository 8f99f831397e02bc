//! Truncated power series in `z` with [`StatPoly`] coefficients.
//!
//! A series of order `N` stores the coefficients of `z^0..=z^N`; everything of
//! higher degree has been discarded. The `std::ops` impls on references
//! truncate to the smaller of the two orders, while [`series_arith`] insists on
//! matching orders.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poly::{Monomial, StatPoly};

pub const DEFAULT_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term {0} is not invertible over the integers")]
    NonUnitConstant(String),
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstant(String),
    #[error("coefficient of z^{degree} is not integral")]
    NotIntegral { degree: usize },
    #[error("term {monomial} at z^{degree} has no preimage under the inverse transform")]
    NegativeExponent { degree: usize, monomial: String },
    #[error("degree {n} is beyond the truncation order {order}")]
    DegreeOutOfRange { n: usize, order: usize },
    #[error("exponent {exponent} at z^{degree} exceeds the bound {bound}")]
    ExponentBlowup { degree: usize, exponent: u32, bound: u32 },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<StatPoly>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exact `a op b`; both operands must have the same order.
pub fn series_arith(a: &Series, b: &Series, op: ArithOp) -> Result<Series, SeriesError> {
    if a.order() != b.order() {
        return Err(SeriesError::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    })
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![StatPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(StatPoly::one(), order)
    }

    pub fn constant(c: StatPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * z^k`, or zero when `k > order`.
    pub fn monomial(c: StatPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn z(order: usize) -> Self {
        Self::monomial(StatPoly::one(), 1, order)
    }

    /// Builds a series from leading coefficients, padding with zeros or truncating.
    pub fn from_coeffs(mut coeffs: Vec<StatPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, StatPoly::zero());
        Series { coeffs }
    }

    /// `sum c_n z^n` for a plain integer sequence.
    pub fn from_integers<I, T>(values: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coeffs = values
            .into_iter()
            .take(order + 1)
            .map(StatPoly::constant)
            .collect();
        Self::from_coeffs(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[StatPoly] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&StatPoly, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::DegreeOutOfRange {
            n,
            order: self.order(),
        })
    }

    /// Joint `(fp, exc)` counts at `z^n`, read off the `x^a q^b` coefficients.
    /// Any `p` is summed out.
    pub fn distribution(&self, n: usize) -> Result<BTreeMap<(u32, u32), BigInt>, SeriesError> {
        let mut out = BTreeMap::new();
        for (m, c) in self.coefficient(n)?.at_p_one().terms() {
            out.insert((m.x, m.q), c.clone());
        }
        Ok(out)
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(StatPoly::is_zero)
    }

    /// Multiplies every coefficient by the polynomial `c`.
    pub fn scale(&self, c: &StatPoly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.order();
        let mut out = Series::zero(n);
        for i in k..=n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Substitutes `z -> c z`.
    pub fn dilate(&self, c: &StatPoly) -> Series {
        let mut power = StatPoly::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power = &power * c;
        }
        Series { coeffs }
    }

    /// Applies a coefficientwise polynomial map.
    pub fn map_coeffs(&self, f: impl FnMut(&StatPoly) -> StatPoly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn at_q_one(&self) -> Series {
        self.map_coeffs(StatPoly::at_q_one)
    }

    pub fn at_p_one(&self) -> Series {
        self.map_coeffs(StatPoly::at_p_one)
    }

    /// Divides every coefficient by the integer `d`, failing unless all are multiples.
    pub fn div_integer(&self, d: &BigInt) -> Result<Series, SeriesError> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (degree, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a.div_exact(d).ok_or(SeriesError::NotIntegral { degree })?);
        }
        Ok(Series { coeffs })
    }

    fn unit_constant(&self) -> Result<BigInt, SeriesError> {
        match self.coeffs[0].as_constant() {
            Some(c) if c.is_one() || c == BigInt::from(-1) => Ok(c),
            _ => Err(SeriesError::NonUnitConstant(self.coeffs[0].to_string())),
        }
    }

    /// `self / den`, where `den` has constant term `1` or `-1`.
    pub fn div(&self, den: &Series) -> Result<Series, SeriesError> {
        let c0 = den.unit_constant()?;
        let n = self.order().min(den.order());
        let mut q: Vec<StatPoly> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                if !den.coeffs[i].is_zero() && !q[k - i].is_zero() {
                    acc -= &(&den.coeffs[i] * &q[k - i]);
                }
            }
            q.push(acc.scale(&c0));
        }
        Ok(Series { coeffs: q })
    }

    pub fn recip(&self) -> Result<Series, SeriesError> {
        Series::one(self.order()).div(self)
    }

    /// `1 / (1 - self)`: the sequence construction. `self` must have no constant term.
    pub fn sequence(&self) -> Result<Series, SeriesError> {
        (&Series::one(self.order()) - self).recip()
    }

    /// The square root with constant term 1.
    ///
    /// Solved degree by degree from `2 s_n = a_n - sum_{0<i<n} s_i s_{n-i}`,
    /// which is exact whenever the root has integer coefficients.
    pub fn sqrt(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].as_constant().is_some_and(|c| c.is_one()) {
            return Err(SeriesError::SqrtConstant(self.coeffs[0].to_string()));
        }
        let two = BigInt::from(2);
        let n = self.order();
        let mut s: Vec<StatPoly> = Vec::with_capacity(n + 1);
        s.push(StatPoly::one());
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc -= &(&s[i] * &s[k - i]);
            }
            s.push(acc.div_exact(&two).ok_or(SeriesError::NotIntegral { degree: k })?);
        }
        Ok(Series { coeffs: s })
    }

    /// `q^n P_n(x/q, 1/q)` at every `z^n`: the generating function of the
    /// inverse class. Each `x^a q^b z^n` becomes `x^a q^(n-a-b) z^n`.
    pub fn invert_transform(&self) -> Result<Series, SeriesError> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (n, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a.map_monomials(|m| {
                let q = (n as i64) - m.x as i64 - m.q as i64;
                if q < 0 {
                    Err(SeriesError::NegativeExponent {
                        degree: n,
                        monomial: m.to_string(),
                    })
                } else {
                    Ok(Monomial { q: q as u32, ..m })
                }
            })?);
        }
        Ok(Series { coeffs })
    }

    /// Rejects any exponent larger than `bound` times the degree plus `bound`.
    pub fn exponent_guard(&self, bound: u32) -> Result<(), SeriesError> {
        for (degree, a) in self.coeffs.iter().enumerate() {
            let limit = bound * (degree as u32 + 1);
            let e = a.max_exponent();
            if e > limit {
                return Err(SeriesError::ExponentBlowup {
                    degree,
                    exponent: e,
                    bound: limit,
                });
            }
        }
        Ok(())
    }

    /// One line per nonzero degree, `z^n: <poly>`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (n, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out.push_str(&format!("z^{n}: {a}\n"));
            }
        }
        out
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        Series {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut out = Series::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !rhs.coeffs[j].is_zero() {
                    out.coeffs[i + j] += &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        out
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.map_coeffs(|a| -a)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let zpart = match n {
                0 => String::new(),
                1 => "z".to_string(),
                n => format!("z^{n}"),
            };
            if n == 0 {
                write!(f, "{a}")?;
            } else if a.as_constant().is_some_and(|c| c.is_one()) {
                f.write_str(&zpart)?;
            } else if a.num_terms() == 1 && !a.to_string().starts_with('-') {
                write!(f, "{a}*{zpart}")?;
            } else {
                write!(f, "({a})*{zpart}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

struct Term<'a>(&'a Monomial, &'a BigInt);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("x", &self.0.x)?;
        map.serialize_entry("q", &self.0.q)?;
        map.serialize_entry("p", &self.0.p)?;
        map.serialize_entry("coef", &self.1.to_string())?;
        map.end()
    }
}

struct Terms<'a>(&'a StatPoly);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.num_terms()))?;
        for (m, c) in self.0.terms() {
            seq.serialize_element(&Term(m, c))?;
        }
        seq.end()
    }
}

impl Serialize for Series {
    /// An array indexed by degree; each entry lists the terms in increasing
    /// `(x, q, p)` order with the coefficient as a decimal string.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for a in &self.coeffs {
            seq.serialize_element(&Terms(a))?;
        }
        seq.end()
    }
}

/// Sign between consecutive levels of a [`ContinuedFraction`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfSign {
    /// `1 / (1 - a_h - b * level_{h+1})`
    Minus,
    /// `1 / (1 - a_h + b * level_{h+1})`
    Plus,
}

/// `level_h = 1 / (1 - a_h -+ link * level_{h+1})` with the level below the
/// deepest one replaced by `1`.
pub struct ContinuedFraction<'a> {
    /// `a_h` as a series of the requested order; must vanish at `z = 0`.
    pub partial: Box<dyn Fn(usize, usize) -> Series + Sync + 'a>,
    /// Must vanish at `z = 0`, so level `h` only reaches degrees `>= h`.
    pub link: StatPoly,
    pub link_degree: usize,
    pub sign: CfSign,
}

impl ContinuedFraction<'_> {
    /// Evaluates bottom-up through `depth` levels.
    pub fn evaluate(&self, order: usize, depth: usize) -> Result<Series, SeriesError> {
        let link = Series::monomial(self.link.clone(), self.link_degree, order);
        let mut level = Series::one(order);
        for h in (0..depth).rev() {
            let below = &link * &level;
            let a = (self.partial)(h, order);
            let den = match self.sign {
                CfSign::Minus => &(&Series::one(order) - &a) - &below,
                CfSign::Plus => &(&Series::one(order) - &a) + &below,
            };
            level = den.recip()?;
        }
        Ok(level)
    }
}

/// Expands `cf` to order `order`, truncating at depth `order + 1`.
pub fn cf_to_series(cf: &ContinuedFraction<'_>, order: usize) -> Result<Series, SeriesError> {
    cf.evaluate(order, order + 1)
}
