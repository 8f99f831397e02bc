//! Exact integer polynomials in the statistic markers `x` (fixed points),
//! `q` (excedances) and `p` (descents or peaks).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Exponent triple of `x^x q^q p^p`; ordered lexicographically.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    pub x: u32,
    pub q: u32,
    pub p: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, q: 0, p: 0 };

    pub fn new(x: u32, q: u32, p: u32) -> Self {
        Monomial { x, q, p }
    }

    fn times(self, o: Monomial) -> Monomial {
        Monomial {
            x: self.x + o.x,
            q: self.q + o.q,
            p: self.p + o.p,
        }
    }

    pub fn max_exponent(&self) -> u32 {
        self.x.max(self.q).max(self.p)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x", self.x), ("q", self.q), ("p", self.p)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct StatPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl StatPoly {
    pub fn zero() -> Self {
        StatPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn x() -> Self {
        Self::monomial(Monomial::new(1, 0, 0), 1)
    }

    pub fn q() -> Self {
        Self::monomial(Monomial::new(0, 1, 0), 1)
    }

    pub fn p() -> Self {
        Self::monomial(Monomial::new(0, 0, 1), 1)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut out = StatPoly::zero();
        out.add_term(m, c.into());
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
            *slot += c;
            slot.is_zero()
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The value when this polynomial is a constant, `None` otherwise.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn max_exponent(&self) -> u32 {
        self.terms.keys().map(Monomial::max_exponent).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> StatPoly {
        let mut out = StatPoly::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    /// Divides every coefficient by `d`, or `None` if some coefficient is not a multiple.
    pub fn div_exact(&self, d: &BigInt) -> Option<StatPoly> {
        let mut out = StatPoly::zero();
        for (m, v) in &self.terms {
            let (quo, rem) = v.div_rem(d);
            if !rem.is_zero() {
                return None;
            }
            out.add_term(*m, quo);
        }
        Some(out)
    }

    /// Rewrites each monomial; terms mapping to the same monomial are summed.
    pub fn map_monomials<E>(
        &self,
        mut f: impl FnMut(Monomial) -> Result<Monomial, E>,
    ) -> Result<StatPoly, E> {
        let mut out = StatPoly::zero();
        for (m, v) in &self.terms {
            out.add_term(f(*m)?, v.clone());
        }
        Ok(out)
    }

    /// Substitutes `q = 1`.
    pub fn at_q_one(&self) -> StatPoly {
        self.map_monomials::<()>(|m| Ok(Monomial { q: 0, ..m })).unwrap()
    }

    /// Substitutes `p = 1`.
    pub fn at_p_one(&self) -> StatPoly {
        self.map_monomials::<()>(|m| Ok(Monomial { p: 0, ..m })).unwrap()
    }

    /// Keeps only the terms with `p`-exponent `k`, dropping the `p`.
    pub fn p_coefficient(&self, k: u32) -> StatPoly {
        let mut out = StatPoly::zero();
        for (m, v) in &self.terms {
            if m.p == k {
                out.add_term(Monomial { p: 0, ..*m }, v.clone());
            }
        }
        out
    }

    /// Sum of all coefficients (value at `x = q = p = 1`).
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn mentions_q(&self) -> bool {
        self.terms.keys().any(|m| m.q > 0)
    }

    pub fn mentions_p(&self) -> bool {
        self.terms.keys().any(|m| m.p > 0)
    }
}

impl Add<&StatPoly> for &StatPoly {
    type Output = StatPoly;
    fn add(self, rhs: &StatPoly) -> StatPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&StatPoly> for &StatPoly {
    type Output = StatPoly;
    fn sub(self, rhs: &StatPoly) -> StatPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&StatPoly> for StatPoly {
    fn add_assign(&mut self, rhs: &StatPoly) {
        for (m, v) in &rhs.terms {
            self.add_term(*m, v.clone());
        }
    }
}

impl SubAssign<&StatPoly> for StatPoly {
    fn sub_assign(&mut self, rhs: &StatPoly) {
        for (m, v) in &rhs.terms {
            self.add_term(*m, -v);
        }
    }
}

impl Mul<&StatPoly> for &StatPoly {
    type Output = StatPoly;
    fn mul(self, rhs: &StatPoly) -> StatPoly {
        let mut out = StatPoly::zero();
        for (ma, va) in &self.terms {
            for (mb, vb) in &rhs.terms {
                out.add_term(ma.times(*mb), va * vb);
            }
        }
        out
    }
}

impl Neg for &StatPoly {
    type Output = StatPoly;
    fn neg(self) -> StatPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for StatPoly {
    /// Terms in increasing monomial order, e.g. `q + 2*x*q + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StatPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let x = StatPoly::x();
        let q = StatPoly::q();
        let a = &x + &q;
        let sq = &a * &a;
        assert_eq!(sq.to_string(), "q^2 + 2*x*q + x^2");
        let zero = &sq - &sq;
        assert!(zero.is_zero());
        assert_eq!(zero.to_string(), "0");
        let neg = -&StatPoly::one();
        assert_eq!((&neg - &x).to_string(), "-1 - x");
    }

    #[test]
    fn substitutions() {
        let poly = &(&StatPoly::x() * &StatPoly::q()) + &StatPoly::q();
        assert_eq!(poly.at_q_one().to_string(), "1 + x");
        assert_eq!(poly.total(), BigInt::from(2));
        assert_eq!(StatPoly::constant(6).div_exact(&BigInt::from(4)), None);
        assert_eq!(
            StatPoly::constant(6).div_exact(&BigInt::from(3)),
            Some(StatPoly::constant(2))
        );
    }
}
