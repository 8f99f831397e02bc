//! Every generating function and counting formula for fixed points and
//! excedances in the avoidance classes of patterns of length 3, plus the
//! parameterised families, addressable by a stable id.
//!
//! Letters follow the usual listing of the symmetry classes: for pairs
//! `a = {123,132}`, `b = {231,321}`, `b' = {312,321}`, `c = {132,213}`,
//! `d = {231,312}`, `e = {132,231}`, `e' = {132,312}`, `f = {132,321}`,
//! `g = {123,231}`, `g' = {123,312}`, `h = {123,321}`; triples run from `a`
//! to `j'` in the same way. Every pattern set sharing a generating function is
//! listed in the entry's `classes`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::expr::{expand_expr, ExprError};
use crate::perm::{PatternSet, Permutation};
use crate::poly::{Monomial, StatPoly};
use crate::sequences::{ballot, binomial, catalan, catalan_bounded, g_chebyshev};
use crate::series::{cf_to_series, CfSign, ContinuedFraction, Series, SeriesError};

/// Largest supported family parameter.
pub const MAX_FAMILY_K: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("{id} needs a parameter k in {lo}..={hi}")]
    MissingParam { id: String, lo: usize, hi: usize },
    #[error("{id} takes k in {lo}..={hi}, got {k}")]
    ParamOutOfRange { id: String, k: usize, lo: usize, hi: usize },
    #[error("{id} takes no parameter")]
    UnexpectedParam { id: String },
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Rational,
    Cf,
    SqrtClosedForm,
    RecursiveFamily,
    ExplicitFormula,
}

/// Which markers an entry's series carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Vars {
    /// `x` for fixed points, `q` for excedances.
    #[serde(rename = "x,q")]
    XQ,
    /// Fixed points only (`q = 1`, or involutions where `q` is redundant).
    #[serde(rename = "x")]
    X,
    /// `x`, `q` and `p` for descents.
    #[serde(rename = "x,q,p")]
    XQP,
}

/// How `p` relates to descents in a three-variable entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DescentMarker {
    Des,
    /// `p^(des+1)` for nonempty permutations.
    DesPlusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Source {
    Expr(&'static str),
    Cf312,
    Cf231,
    S123,
    Inv123,
    Inv132,
    FamilyM,
    FamilyA,
    FamilyA231,
    DescentP,
}

/// Pattern sets of a family at parameter `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FamilyShape {
    /// `{132, 12..(k+1)}`
    Increasing132,
    /// `{312, (k+1)..1}`
    Decreasing312,
    /// `{231, (k+1)..1}`
    Decreasing231,
    /// `{132, (k+1)..1}` and `{213, (k+1)..1}`
    Decreasing132,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub kind: Kind,
    pub vars: Vars,
    pub involutions: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub descents: Option<DescentMarker>,
    /// The displayed closed form, or a description of the formula.
    pub anchor: &'static str,
    /// Pattern sets that share this series (empty for families).
    pub classes: &'static [&'static str],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param_range: Option<(usize, usize)>,
    #[serde(skip)]
    source: Source,
    #[serde(skip)]
    family: Option<FamilyShape>,
}

impl CatalogEntry {
    /// Pattern sets whose series this entry gives, for parameter `k` on families.
    pub fn pattern_sets(&self, k: Option<usize>) -> Vec<PatternSet> {
        if let (Some(shape), Some(k)) = (self.family, k) {
            let inc = Permutation::identity(k + 1);
            let dec = Permutation::decreasing(k + 1);
            let set = |w: &str, long: Permutation| {
                PatternSet::new([w.parse::<Permutation>().unwrap(), long]).unwrap()
            };
            return match shape {
                FamilyShape::Increasing132 => vec![set("132", inc)],
                FamilyShape::Decreasing312 => vec![set("312", dec)],
                FamilyShape::Decreasing231 => vec![set("231", dec)],
                FamilyShape::Decreasing132 => vec![set("132", dec), set("213", dec)],
            };
        }
        self.classes.iter().map(|c| c.parse().unwrap()).collect()
    }

    pub fn is_family(&self) -> bool {
        self.param_range.is_some()
    }
}

const fn entry(
    id: &'static str,
    kind: Kind,
    vars: Vars,
    anchor: &'static str,
    classes: &'static [&'static str],
    source: Source,
) -> CatalogEntry {
    CatalogEntry {
        id,
        kind,
        vars,
        involutions: false,
        descents: None,
        anchor,
        classes,
        param_range: None,
        source,
        family: None,
    }
}

const fn rational(id: &'static str, form: &'static str, classes: &'static [&'static str]) -> CatalogEntry {
    entry(id, Kind::Rational, Vars::XQ, form, classes, Source::Expr(form))
}

const fn involution(
    id: &'static str,
    kind: Kind,
    anchor: &'static str,
    classes: &'static [&'static str],
    source: Source,
) -> CatalogEntry {
    let mut e = entry(id, kind, Vars::X, anchor, classes, source);
    e.involutions = true;
    e
}

const fn inv_rational(id: &'static str, form: &'static str, classes: &'static [&'static str]) -> CatalogEntry {
    involution(id, Kind::Rational, form, classes, Source::Expr(form))
}

const fn descents(
    id: &'static str,
    form: &'static str,
    classes: &'static [&'static str],
    marker: DescentMarker,
) -> CatalogEntry {
    let mut e = entry(id, Kind::SqrtClosedForm, Vars::XQP, form, classes, Source::Expr(form));
    e.descents = Some(marker);
    e
}

const fn family(
    id: &'static str,
    kind: Kind,
    vars: Vars,
    anchor: &'static str,
    source: Source,
    shape: FamilyShape,
    lo: usize,
) -> CatalogEntry {
    let mut e = entry(id, kind, vars, anchor, &[], source);
    e.param_range = Some((lo, MAX_FAMILY_K));
    e.family = Some(shape);
    e
}

const F132: &str = "2/(1+z(1+q-2x)+sqrt(1-2z(1+q)+z^2(1-q)^2))";
const F321_DES: &str = "2/(1+z(1+q-2x)+sqrt(1-2z(1+q)+z^2((1+q)^2-4qp)))";
const F132_DES: &str = "2(1+xz(p-1))/(1+(1+q-2x)z-qz^2(p-1)^2\
+sqrt(1-2(1+q)z+((1-q)^2-2q(p-1)(p+3))z^2-2q(1+q)(p-1)^2z^3+q^2(p-1)^4z^4))";

static ENTRIES: &[CatalogEntry] = &[
    entry(
        "single.132.sqrt",
        Kind::SqrtClosedForm,
        Vars::XQ,
        F132,
        &["132", "213", "321"],
        Source::Expr(F132),
    ),
    descents("single.321.descents", F321_DES, &["321"], DescentMarker::Des),
    descents("single.132.descents", F132_DES, &["132", "213"], DescentMarker::DesPlusOne),
    entry(
        "single.312.cf",
        Kind::Cf,
        Vars::XQ,
        "1/(1-zK_0-z/(1-zK_1-z/(...))), K_n=(x-1)C_n q^n z^n+(q-1)C_{<n}(qz)",
        &["312"],
        Source::Cf312,
    ),
    entry(
        "single.231.cf",
        Kind::Cf,
        Vars::XQ,
        "1/(1-zK'_0-qz/(1-zK'_1-qz/(...))), K'_n=(x-q)C_n z^n+(1-q)C_{<n}(z)",
        &["231"],
        Source::Cf231,
    ),
    entry(
        "formula.s2_123",
        Kind::ExplicitFormula,
        Vars::X,
        "s_n^2(123) double sum with the lattice-path helper f; s_n^1, s_n^0 from the big/small fixed point counts",
        &["123"],
        Source::S123,
    ),
    rational(
        "pair.a",
        "(1+xz+(x^2-4q)z^2+(-3xq+q+q^2)z^3+(xq+xq^2-3x^2q+3q^2)z^4)/((1-qz^2)(1-4qz^2))",
        &["123/132", "123/213"],
    ),
    rational("pair.b", "(1-z)/(1-(x+1)z+(x-q)z^2)", &["231/321"]),
    rational("pair.b'", "(1-qz)/(1-(x+q)z+(x-1)qz^2)", &["312/321"]),
    rational(
        "pair.c",
        "(1-(1+q)z-2qz^2+4q(1+q)z^3-(xq^2+xq+5q^2)z^4+2xq^2z^5)/((1-z)(1-xz)(1-qz)(1-4qz^2))",
        &["132/213"],
    ),
    rational("pair.d", "(1-qz^2)/(1-xz-2qz^2)", &["231/312"]),
    rational("pair.e", "(1-z-qz^2+xqz^3)/((1-xz)(1-z-2qz^2))", &["132/231", "213/231"]),
    rational("pair.e'", "(1-qz-qz^2+xqz^3)/((1-xz)(1-qz-2qz^2))", &["132/312", "213/312"]),
    rational("pair.f", "(1-(1+q)z+2qz^2)/((1-z)(1-xz)(1-qz))", &["132/321", "213/321"]),
    rational(
        "pair.g",
        "(1+xz+(x^2-2q)z^2+(-x^2q+xq+3q^2)z^4+3q^2z^5-q^3z^6-4q^3z^7-2xq^3z^8)/((1-qz^2)^3(1-qz^3))",
        &["123/231"],
    ),
    rational(
        "pair.g'",
        "(1+xz+(x^2-2q)z^2+(-x^2q+xq^2+3q^2)z^4+3q^3z^5-q^3z^6-4q^4z^7-2xq^4z^8)/((1-qz^2)^3(1-q^2z^3))",
        &["123/312"],
    ),
    rational("pair.h", "1+xz+(x^2+q)z^2+(2xq+q^2+q)z^3+4q^2z^4", &["123/321"]),
    rational(
        "triple.a",
        "(1+xz+(x^2-q)z^2+(-xq+q^2+q)z^3-x^2qz^4)/((1+qz^2)(1-3qz^2+q^2z^4))",
        &["123/132/213"],
    ),
    rational("triple.b", "1/(1-xz-qz^2)", &["231/312/321"]),
    rational(
        "triple.c",
        "(1+xz+(x^2-q)z^2+qz^3+(-x^2q+xq+q^2)z^4)/(1-qz^2)^2",
        &["123/132/231", "123/213/231"],
    ),
    rational(
        "triple.c'",
        "(1+xz+(x^2-q)z^2+q^2z^3+(-x^2q+xq^2+q^2)z^4)/(1-qz^2)^2",
        &["123/132/312", "123/213/312"],
    ),
    rational("triple.d", "(1-z+qz^2)/((1-z)(1-xz))", &["132/231/321", "213/231/321"]),
    rational("triple.d'", "(1-qz+qz^2)/((1-xz)(1-qz))", &["132/312/321", "213/312/321"]),
    rational(
        "triple.e",
        "(1-z-qz^2+2qz^3+(-x^2q+q^2-xq)z^4+(x^2q-2q^2)z^5+xq^2z^6)/((1-z)(1-xz)(1-qz^2)^2)",
        &["132/213/231"],
    ),
    rational(
        "triple.e'",
        "(1-qz-qz^2+2q^2z^3+(-x^2q-xq^2+q^2)z^4+(x^2q^2-2q^3)z^5+xq^3z^6)/((1-xz)(1-qz)(1-qz^2)^2)",
        &["132/213/312"],
    ),
    rational("triple.f", "(1+xqz^3)/((1-xz)(1-qz^2))", &["132/231/312", "213/231/312"]),
    rational("triple.g", "(1+xz+(x^2-q)z^2+xqz^3+q^2z^4)/(1-qz^2)^2", &["123/231/312"]),
    rational("triple.h", "(1-(1+q)z+2qz^2-xqz^3)/((1-z)(1-xz)(1-qz))", &["132/213/321"]),
    rational("triple.i", "1+xz+(x^2+q)z^2+(xq+q^2+q)z^3+q^2z^4", &["123/132/321", "123/213/321"]),
    rational("triple.j", "1+xz+(x^2+q)z^2+(2xq+q)z^3+q^2z^4", &["123/231/321"]),
    rational("triple.j'", "1+xz+(x^2+q)z^2+(2xq+q^2)z^3+q^2z^4", &["123/312/321"]),
    involution(
        "inv.single.123",
        Kind::ExplicitFormula,
        "i_n^0 = i_n^2 = binom(n-1, n/2) for even n, i_n^1 = binom(n, (n-1)/2) for odd n",
        &["123"],
        Source::Inv123,
    ),
    involution(
        "inv.single.132",
        Kind::ExplicitFormula,
        "i_n^k = (k+1)/(n+1) binom(n+1, (n-k)/2) for n-k even",
        &["132", "213", "321"],
        Source::Inv132,
    ),
    inv_rational("inv.single.231", "(1-z^2)/(1-xz-2z^2)", &["231", "312"]),
    inv_rational("inv.pair.a", "(1+xz+(x^2-1)z^2)/(1-2z^2)", &["123/132", "123/213"]),
    inv_rational("inv.pair.b", "1/(1-xz-z^2)", &["231/321", "312/321"]),
    inv_rational("inv.pair.c", "(1-z^2)/((1-xz)(1-2z^2))", &["132/213"]),
    inv_rational("inv.pair.d", "(1-z^2)/(1-xz-2z^2)", &["231/312"]),
    inv_rational(
        "inv.pair.e",
        "(1+xz^3)/((1-xz)(1-z^2))",
        &["132/231", "213/231", "132/312", "213/312"],
    ),
    inv_rational("inv.pair.f", "1/((1-xz)(1-z^2))", &["132/321", "213/321"]),
    inv_rational(
        "inv.pair.g",
        "(1+xz+(x^2-1)z^2+xz^3+z^4)/(1-z^2)^2",
        &["123/231", "123/312"],
    ),
    inv_rational("inv.pair.h", "1+xz+(x^2+1)z^2+2xz^3+2z^4", &["123/321"]),
    family(
        "family.M_k",
        Kind::RecursiveFamily,
        Vars::X,
        "M_k = sum_l G_{k,l}(z)(1+(x-1)z M_{l-1}), G_{k,l} = sum_n g_{k,l}(n)^2 z^n",
        Source::FamilyM,
        FamilyShape::Increasing132,
        0,
    ),
    family(
        "family.A_k",
        Kind::RecursiveFamily,
        Vars::XQ,
        "A_i^k = 1/(1-z[(x-1)C_i^{<=k-i-1}q^i z^i+(q-1)C_{<i}^{<=k-i-1}(qz)+A_{i+1}^k]), A_k^k = 1",
        Source::FamilyA,
        FamilyShape::Decreasing312,
        0,
    ),
    family(
        "family.A231_k",
        Kind::RecursiveFamily,
        Vars::XQ,
        "A_0^k(x/q, 1/q, qz)",
        Source::FamilyA231,
        FamilyShape::Decreasing231,
        0,
    ),
    family(
        "family.descent_p",
        Kind::SqrtClosedForm,
        Vars::XQ,
        "sum_k F_{132,(k+1)k..1} p^k = 2(1+xz(p-1))/((1-p)[1+(1+q-2x)z-qz^2(p-1)^2+sqrt(f_1)])",
        Source::DescentP,
        FamilyShape::Decreasing132,
        0,
    ),
];

/// All entries in listing order.
pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

/// Looks up an entry; `_prime` is accepted in place of `'`.
pub fn lookup(id: &str) -> Result<&'static CatalogEntry, CatalogError> {
    let id = id.replace("_prime", "'");
    ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or(CatalogError::UnknownId(id))
}

fn check_param(e: &CatalogEntry, k: Option<usize>) -> Result<Option<usize>, CatalogError> {
    match (e.param_range, k) {
        (None, None) => Ok(None),
        (None, Some(_)) => Err(CatalogError::UnexpectedParam { id: e.id.into() }),
        (Some((lo, hi)), None) => Err(CatalogError::MissingParam { id: e.id.into(), lo, hi }),
        (Some((lo, hi)), Some(k)) if k < lo || k > hi => Err(CatalogError::ParamOutOfRange {
            id: e.id.into(),
            k,
            lo,
            hi,
        }),
        (Some(_), Some(k)) => Ok(Some(k)),
    }
}

/// Expands the entry `id` to order `order` (`k` is the family parameter).
pub fn expand(id: &str, order: usize, k: Option<usize>) -> Result<Series, CatalogError> {
    expand_entry(lookup(id)?, order, k)
}

pub fn expand_entry(e: &CatalogEntry, order: usize, k: Option<usize>) -> Result<Series, CatalogError> {
    let k = check_param(e, k)?;
    let s = match e.source {
        Source::Expr(form) => expand_expr(form, order)?,
        Source::Cf312 => cf_to_series(&cf312(), order)?,
        Source::Cf231 => cf_to_series(&cf231(), order)?,
        Source::S123 => s123_series(order),
        Source::Inv123 => involutions_123_series(order),
        Source::Inv132 => involutions_132_series(order),
        Source::FamilyM => family_m(k.unwrap(), order)?,
        Source::FamilyA => family_a(k.unwrap(), order)?,
        Source::FamilyA231 => family_a(k.unwrap(), order)?.invert_transform()?,
        Source::DescentP => descent_class(k.unwrap(), order)?,
    };
    s.exponent_guard(4)?;
    Ok(s)
}

/// `C_{<i}(c z)` with `C_j` replaced by `C_j^{<=h}` when `h` is given.
fn catalan_prefix(i: usize, h: Option<usize>, c: &StatPoly, order: usize) -> Series {
    let vals = (0..i).map(|j| match h {
        Some(h) => catalan_bounded(j, h),
        None => catalan(j),
    });
    Series::from_integers(vals, order).truncate(order).dilate(c)
}

/// The continued fraction for 312-avoiders.
pub fn cf312() -> ContinuedFraction<'static> {
    ContinuedFraction {
        partial: Box::new(|h, order| {
            // z K_h = (x-1) C_h q^h z^{h+1} + (q-1) z C_{<h}(qz)
            let xm1 = &StatPoly::x() - &StatPoly::one();
            let qm1 = &StatPoly::q() - &StatPoly::one();
            let qh = StatPoly::monomial(Monomial::new(0, h as u32, 0), catalan(h));
            let lead = Series::monomial(&xm1 * &qh, h + 1, order);
            let tail = catalan_prefix(h, None, &StatPoly::q(), order).scale(&qm1).shift(1);
            &lead + &tail
        }),
        link: StatPoly::one(),
        link_degree: 1,
        sign: CfSign::Minus,
    }
}

/// The continued fraction for 231-avoiders.
pub fn cf231() -> ContinuedFraction<'static> {
    ContinuedFraction {
        partial: Box::new(|h, order| {
            // z K'_h = (x-q) C_h z^{h+1} + (1-q) z C_{<h}(z)
            let xmq = &StatPoly::x() - &StatPoly::q();
            let omq = &StatPoly::one() - &StatPoly::q();
            let lead = Series::monomial(xmq.scale(&catalan(h)), h + 1, order);
            let tail = catalan_prefix(h, None, &StatPoly::one(), order).scale(&omq).shift(1);
            &lead + &tail
        }),
        link: StatPoly::q(),
        link_degree: 1,
        sign: CfSign::Minus,
    }
}

/// `G_{k,l}(z) = sum_n g_{k,l}(n)^2 z^n`.
pub fn g_squared_series(k: usize, l: usize, order: usize) -> Series {
    Series::from_integers((0..=order).map(|n| {
        let g = g_chebyshev(k, l, n);
        &g * &g
    }), order)
}

/// Fixed points in `S_n(132, 12..(k+1))`, by the Chebyshev recurrence.
pub fn family_m(k: usize, order: usize) -> Result<Series, SeriesError> {
    let xm1z = Series::monomial(&StatPoly::x() - &StatPoly::one(), 1, order);
    // ms[j] = M_{j-1}
    let mut ms = vec![Series::zero(order)];
    for j in 0..=k {
        let mut acc = Series::zero(order);
        for l in 0..=j {
            let inner = &Series::one(order) + &(&xm1z * &ms[l]);
            acc = &acc + &(&g_squared_series(j, l, order) * &inner);
        }
        ms.push(acc);
    }
    Ok(ms.pop().unwrap())
}

/// `F_{312,(k+1)k..1} = A_0^k`.
pub fn family_a(k: usize, order: usize) -> Result<Series, SeriesError> {
    let xm1 = &StatPoly::x() - &StatPoly::one();
    let qm1 = &StatPoly::q() - &StatPoly::one();
    let mut a = Series::one(order);
    for i in (0..k).rev() {
        let h = k - i - 1;
        let qi = StatPoly::monomial(Monomial::new(0, i as u32, 0), catalan_bounded(i, h));
        let lead = Series::monomial(&xm1 * &qi, i, order);
        let mid = catalan_prefix(i, Some(h), &StatPoly::q(), order).scale(&qm1);
        let bracket = &(&lead + &mid) + &a;
        a = bracket.shift(1).sequence()?;
    }
    Ok(a)
}

/// `sum_D x^ct q^rt p^peaks z^|D|`, the series whose partial sums in `p` give
/// the classes `{132, (k+1)k..1}`.
pub fn peaks_series(order: usize) -> Result<Series, CatalogError> {
    Ok(expand_expr(F132_DES, order)?)
}

/// `sum_k F_{132,(k+1)k..1} p^k`, truncated to `p`-degree `order` (a path of
/// semilength `n` has at most `n` peaks, so higher `p`-powers repeat).
pub fn family_descent_p(order: usize) -> Result<Series, CatalogError> {
    let h = peaks_series(order)?;
    Ok(h.map_coeffs(|c| {
        let mut out = StatPoly::zero();
        let mut partial = StatPoly::zero();
        for k in 0..=order as u32 {
            partial += &c.p_coefficient(k);
            for (m, v) in partial.terms() {
                out.add_term(Monomial { p: k, ..*m }, v.clone());
            }
        }
        out
    }))
}

/// `F_{132,(k+1)k..1}`: the `p^k` coefficient of [`family_descent_p`].
pub fn descent_class(k: usize, order: usize) -> Result<Series, CatalogError> {
    let h = peaks_series(order)?;
    Ok(h.map_coeffs(|c| {
        let mut out = StatPoly::zero();
        for j in 0..=k as u32 {
            out += &c.p_coefficient(j);
        }
        out
    }))
}

fn half(v: i64) -> Option<i64> {
    (v % 2 == 0).then_some(v / 2)
}

/// Lattice paths from `(0, r)` to `(l, h)` with exactly `k` peaks that start
/// and end with an up-step and stay weakly above the axis. Binomials whose
/// arguments would be half-integers count as zero.
pub fn f_helper(k: i64, r: i64, h: i64, l: i64) -> BigInt {
    if k == 0 {
        return if l == h - r { BigInt::one() } else { BigInt::zero() };
    }
    if k < 0 {
        return BigInt::zero();
    }
    let term = |a: i64, b: i64| match (half(a), half(b)) {
        (Some(a), Some(b)) => binomial(a - 1, k) * binomial(b - 1, k - 1),
        _ => BigInt::zero(),
    };
    term(l + h - r, l - h + r) - term(l - h - r, l + h + r)
}

/// `s_n^2(123)`: 123-avoiders of length `n` with two fixed points.
pub fn s2_123(n: usize) -> BigInt {
    let n = n as i64;
    let ballot_diff = |i: i64, r: i64| binomial(2 * i - r - 1, i - 1) - binomial(2 * i - r - 1, i);
    let mut total = BigInt::zero();
    for i in 1..n {
        for r in 1..=i {
            let a = ballot_diff(i, r);
            if a.is_zero() {
                continue;
            }
            for s in 1..=i {
                let b = ballot_diff(i, s);
                if b.is_zero() {
                    continue;
                }
                let mut inner = BigInt::zero();
                for h in (1..=n).filter(|h| (n - h) % 2 == 0) {
                    for k in 0..=n - 2 * i {
                        let left = f_helper(k, r, h, n - 2 * i + r);
                        if left.is_zero() {
                            continue;
                        }
                        inner += left * f_helper(n - 2 * i - k, s, h, n - 2 * i + s);
                    }
                }
                total += &a * &b * inner;
            }
        }
    }
    total
}

/// `(big, small)`: 123-avoiders of length `n >= 1` with a big, resp. small, fixed point.
pub fn bigsmall_counts(n: usize) -> (BigInt, BigInt) {
    assert!(n >= 1);
    let big = catalan(n - 1);
    let small = if n.is_multiple_of(2) {
        big.clone()
    } else {
        let c = catalan((n - 1) / 2);
        &big - &c * &c
    };
    (big, small)
}

/// `(s0, s1, s2)`: 123-avoiders of length `n` by number of fixed points.
pub fn s123_distribution(n: usize) -> (BigInt, BigInt, BigInt) {
    if n == 0 {
        return (BigInt::one(), BigInt::zero(), BigInt::zero());
    }
    let s2 = s2_123(n);
    let (big, small) = bigsmall_counts(n);
    let s1 = &big + &small - &s2 * 2;
    let s0 = catalan(n) - &s1 - &s2;
    (s0, s1, s2)
}

fn s123_series(order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|n| {
            let (s0, s1, s2) = s123_distribution(n);
            let mut c = StatPoly::zero();
            c.add_term(Monomial::new(0, 0, 0), s0);
            c.add_term(Monomial::new(1, 0, 0), s1);
            c.add_term(Monomial::new(2, 0, 0), s2);
            c
        })
        .collect();
    Series::from_coeffs(coeffs, order)
}

/// `i_n^k(sigma)` for a single pattern of length 3: involutions of length
/// `n` avoiding `sigma` with `k` fixed points.
pub fn involution_counts(sigma: &str, n: usize, k: usize) -> Option<BigInt> {
    let n64 = n as i64;
    Some(match sigma {
        "123" => {
            if n == 0 {
                return Some(if k == 0 { BigInt::one() } else { BigInt::zero() });
            }
            match (n % 2, k) {
                (0, 0) | (0, 2) => binomial(n64 - 1, n64 / 2),
                (1, 1) => binomial(n64, (n64 - 1) / 2),
                _ => BigInt::zero(),
            }
        }
        "132" | "213" | "321" => ballot(n, k),
        "231" | "312" => {
            let s = expand_expr("(1-z^2)/(1-xz-2z^2)", n).ok()?;
            s.coefficient(n).ok()?.coefficient(&Monomial::new(k as u32, 0, 0))
        }
        _ => return None,
    })
}

fn involution_series(order: usize, sigma: &str) -> Series {
    let coeffs = (0..=order)
        .map(|n| {
            let mut c = StatPoly::zero();
            for k in 0..=n {
                c.add_term(
                    Monomial::new(k as u32, 0, 0),
                    involution_counts(sigma, n, k).unwrap(),
                );
            }
            c
        })
        .collect();
    Series::from_coeffs(coeffs, order)
}

fn involutions_123_series(order: usize) -> Series {
    involution_series(order, "123")
}

fn involutions_132_series(order: usize) -> Series {
    involution_series(order, "132")
}

/// `u_0 = 1, u_1 = 1, u_r = u_{r-1} - w^2 u_{r-2}`: `w^r U_r(1/(2w))` as a series in `w`.
pub fn chebyshev_u(r: usize, order: usize) -> Series {
    let w2 = Series::monomial(StatPoly::one(), 2, order);
    let (mut a, mut b) = (Series::one(order), Series::one(order));
    if r == 0 {
        return a;
    }
    for _ in 1..r {
        let c = &b - &(&w2 * &a);
        a = std::mem::replace(&mut b, c);
    }
    b
}

/// `sum_n g_{k,l}(n) w^n = w^{k-l} u_l / u_{k+1}`.
pub fn g_series_chebyshev(k: usize, l: usize, order: usize) -> Result<Series, SeriesError> {
    if l > k {
        return Ok(Series::zero(order));
    }
    chebyshev_u(l, order)
        .shift(k - l)
        .div(&chebyshev_u(k + 1, order))
}

/// `sum_i C_i^{<=h} z^i = u_h / u_{h+1}` read at even powers of `w`.
pub fn bounded_catalan_chebyshev(h: usize, order: usize) -> Result<Series, SeriesError> {
    let w = chebyshev_u(h, 2 * order).div(&chebyshev_u(h + 1, 2 * order))?;
    let coeffs = (0..=order).map(|i| w.coeffs()[2 * i].clone()).collect();
    Ok(Series::from_coeffs(coeffs, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_resolvable() {
        let mut ids: Vec<_> = entries().iter().map(|e| e.id).collect();
        ids.sort();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
        assert_eq!(lookup("pair.b_prime").unwrap().id, "pair.b'");
        assert!(matches!(lookup("pair.z"), Err(CatalogError::UnknownId(_))));
        for e in entries() {
            for set in e.pattern_sets(e.param_range.map(|r| r.0)) {
                assert!(!set.is_empty());
            }
        }
    }

    #[test]
    fn parameters_are_checked() {
        assert!(matches!(expand("family.M_k", 4, None), Err(CatalogError::MissingParam { .. })));
        assert!(matches!(expand("pair.a", 4, Some(1)), Err(CatalogError::UnexpectedParam { .. })));
        assert!(matches!(
            expand("family.A_k", 4, Some(7)),
            Err(CatalogError::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn pair_h_polynomial() {
        let s = expand("pair.h", 8, None).unwrap();
        assert_eq!(
            s.to_string(),
            "1 + x*z + (q + x^2)*z^2 + (q + q^2 + 2*x*q)*z^3 + 4*q^2*z^4 + O(z^9)"
        );
    }

    #[test]
    fn f_helper_cases() {
        assert_eq!(f_helper(0, 2, 5, 3), BigInt::one());
        assert_eq!(f_helper(0, 2, 5, 4), BigInt::zero());
        assert_eq!(f_helper(-1, 0, 0, 0), BigInt::zero());
    }

    /// Brute force: paths of `l` unit steps from height `r` to `h`, starting and
    /// ending with an up-step, never below 0, with `k` peaks.
    fn f_paths(k: usize, r: usize, h: usize, l: usize) -> u64 {
        let mut count = 0;
        for mask in 0u32..(1 << l) {
            let up = |j: usize| mask >> j & 1 == 1;
            if l > 0 && (!up(0) || !up(l - 1)) {
                continue;
            }
            let mut y = r as i64;
            let mut ok = true;
            for j in 0..l {
                y += if up(j) { 1 } else { -1 };
                ok &= y >= 0;
            }
            if !ok || y != h as i64 {
                continue;
            }
            let peaks = (0..l.saturating_sub(1)).filter(|&j| up(j) && !up(j + 1)).count();
            if peaks == k {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn f_helper_matches_path_oracle() {
        for l in 1..=8 {
            for r in 0..=4 {
                for h in 0..=8 {
                    for k in 1..=4 {
                        assert_eq!(
                            f_helper(k as i64, r as i64, h as i64, l as i64),
                            BigInt::from(f_paths(k, r, h, l)),
                            "k={k} r={r} h={h} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bigsmall_small_cases() {
        assert_eq!(bigsmall_counts(3), (BigInt::from(2), BigInt::from(1)));
        assert_eq!(bigsmall_counts(4), (BigInt::from(5), BigInt::from(5)));
        let (s0, s1, s2) = s123_distribution(2);
        assert_eq!((s0, s1, s2), (BigInt::one(), BigInt::zero(), BigInt::one()));
    }

    #[test]
    fn involution_count_examples() {
        assert_eq!(involution_counts("123", 5, 1), Some(BigInt::from(10)));
        assert_eq!(involution_counts("123", 4, 0), Some(BigInt::from(3)));
        assert_eq!(involution_counts("123", 4, 2), Some(BigInt::from(3)));
        assert_eq!(involution_counts("132", 4, 2), Some(BigInt::from(3)));
        assert_eq!(involution_counts("1234", 4, 2), None);
    }

    #[test]
    fn chebyshev_cross_checks() {
        let order = 12;
        for k in 0..=5 {
            for l in 0..=k {
                let dp = Series::from_integers((0..=order).map(|n| g_chebyshev(k, l, n)), order);
                assert_eq!(g_series_chebyshev(k, l, order).unwrap(), dp, "k={k} l={l}");
            }
            let dp = Series::from_integers((0..=order).map(|i| catalan_bounded(i, k)), order);
            assert_eq!(bounded_catalan_chebyshev(k, order).unwrap(), dp, "h={k}");
        }
    }

    #[test]
    fn printed_g_series() {
        // G_{1,0} = z/(1-z^2), G_{2,1} = z/(1-4z^2)
        let order = 10;
        assert_eq!(g_squared_series(1, 0, order), expand_expr("z/(1-z^2)", order).unwrap());
        assert_eq!(g_squared_series(2, 1, order), expand_expr("z/(1-4z^2)", order).unwrap());
        assert_eq!(
            g_squared_series(3, 2, order),
            expand_expr("z(1-4z^2+z^4)/((1-z^2)(1-7z^2+z^4))", order).unwrap()
        );
    }

    #[test]
    fn cf_leading_terms() {
        let s = expand("single.312.cf", 6, None).unwrap();
        assert_eq!(s.coefficient(0).unwrap(), &StatPoly::one());
        assert_eq!(s.coefficient(1).unwrap(), &StatPoly::x());
        let cat: Vec<BigInt> = s.at_q_one().coeffs().iter().map(StatPoly::total).collect();
        assert_eq!(cat, (0..=6).map(catalan).collect::<Vec<_>>());
    }
}
