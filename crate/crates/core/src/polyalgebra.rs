//! Exact sparse multivariate polynomial arithmetic over arbitrary-precision
//! rationals.
//!
//! Variables are partitioned into groups: coefficient variables `a`, covariant
//! groups `x`, `y`, `z` and contravariant groups `zeta`, `eta`. Every variable
//! additionally carries a copy tag (plain, `'`, `''`, `'''`) so that the same
//! group can appear in several "copies" of a product, which is what the Cayley
//! operators differentiate across.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar used for every coefficient in the crate.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse an exact rational from a string: `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Variable group. The declaration order fixes the global variable ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    /// Coefficient variables of the hypermatrix, flattened to a single index.
    A,
    X,
    Y,
    Z,
    Zeta,
    Eta,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::A => "a",
            Group::X => "x",
            Group::Y => "y",
            Group::Z => "z",
            Group::Zeta => "zeta",
            Group::Eta => "eta",
        }
    }
}

/// Copy tag: plain or one of the three primed copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CopyTag {
    Plain,
    P1,
    P2,
    P3,
}

impl CopyTag {
    pub fn primes(self) -> &'static str {
        match self {
            CopyTag::Plain => "",
            CopyTag::P1 => "'",
            CopyTag::P2 => "''",
            CopyTag::P3 => "'''",
        }
    }
}

/// A single variable. The derived ordering (group, then index, then copy) is
/// the fixed total order that monomial comparison and serialization use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId {
    pub group: Group,
    pub index: u8,
    pub copy: CopyTag,
}

impl VariableId {
    pub fn new(group: Group, index: u8, copy: CopyTag) -> Self {
        VariableId { group, index, copy }
    }

    pub fn plain(group: Group, index: u8) -> Self {
        VariableId::new(group, index, CopyTag::Plain)
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.group.name(), self.index, self.copy.primes())
    }
}

/// A monomial: a finite map from variables to positive exponents, stored as a
/// vector sorted by `VariableId`. No zero exponents are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VariableId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VariableId) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Build from an unsorted list of (variable, exponent) pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VariableId, u32)>) -> Self {
        let mut map: BTreeMap<VariableId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial(map.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(VariableId, u32)> {
        self.0.iter()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Total degree in one variable group (all copies combined).
    pub fn degree_in(&self, group: Group) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| v.group == group)
            .map(|&(_, e)| e)
            .sum()
    }

    /// Total degree in one (group, copy) pair.
    pub fn degree_in_copy(&self, group: Group, copy: CopyTag) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| v.group == group && v.copy == copy)
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl Ord for Monomial {
    /// Lexicographic order induced by the fixed `VariableId` order: the
    /// monomial with the larger exponent on the earliest differing variable is
    /// the larger monomial. The unit monomial is the smallest.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // The side owning the earlier variable has a positive
                    // exponent where the other has zero.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { format!("{v}") } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse polynomial: a finite map from monomials to nonzero rational
/// coefficients. The zero polynomial is the empty map, and equality of maps is
/// equality of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(v: VariableId) -> Self {
        Polynomial::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient viewed at a constant polynomial; errors if any variable
    /// is still present.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_add(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.insert_add(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        // accumulate in a hash map, then rebuild the ordered term map
        let mut acc: std::collections::HashMap<Monomial, Rational> =
            std::collections::HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                let m = ma.mul(mb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(ca * cb);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += ca * cb;
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to one variable.
    pub fn derive(&self, v: VariableId) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.iter() {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let reduced = Monomial::from_pairs(
                m.iter()
                    .map(|&(w, k)| if w == v { (w, k - 1) } else { (w, k) }),
            );
            out.insert_add(reduced, c * rat(e as i64));
        }
        out
    }

    /// Evaluate the bound variables at rational values, leaving the rest
    /// symbolic.
    pub fn substitute(&self, bindings: &BTreeMap<VariableId, Rational>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.iter() {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.iter() {
                match bindings.get(&v) {
                    Some(val) => {
                        let mut p = Rational::one();
                        for _ in 0..e {
                            p *= val;
                        }
                        coeff *= p;
                    }
                    None => rest.push((v, e)),
                }
            }
            out.insert_add(Monomial(rest), coeff);
        }
        out
    }

    /// Substitute whole polynomials for variables (used for linear changes of
    /// variables).
    pub fn substitute_poly(&self, bindings: &BTreeMap<VariableId, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.iter() {
            let mut term = Polynomial::constant(c.clone());
            for &(v, e) in m.iter() {
                match bindings.get(&v) {
                    Some(p) => term = term.mul(&p.pow(e)),
                    None => term = term.mul(&Polynomial::var(v).pow(e)),
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Relabel copy tags group-wise and merge like monomials. This implements
    /// the trace maps that erase primes.
    pub fn retag(&self, map: impl Fn(Group, CopyTag) -> CopyTag) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in self.terms.iter() {
            let renamed = Monomial::from_pairs(m.iter().map(|&(v, e)| {
                (
                    VariableId::new(v.group, v.index, map(v.group, v.copy)),
                    e,
                )
            }));
            out.insert_add(renamed, c.clone());
        }
        out
    }

    /// Retag every plain variable of every group to the given copy.
    pub fn tagged(&self, copy: CopyTag) -> Polynomial {
        self.retag(|_, c| if c == CopyTag::Plain { copy } else { c })
    }

    /// Erase all copy tags (the trace map `tr`).
    pub fn trace(&self) -> Polynomial {
        self.retag(|_, _| CopyTag::Plain)
    }

    /// Total degree in a group across all copies, as the maximum over terms.
    pub fn degree_in(&self, group: Group) -> u32 {
        self.terms.keys().map(|m| m.degree_in(group)).max().unwrap_or(0)
    }

    /// Degree in one (group, copy) pair, as the maximum over terms.
    pub fn degree_in_copy(&self, group: Group, copy: CopyTag) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in_copy(group, copy))
            .max()
            .unwrap_or(0)
    }

    /// True if some term contains a variable of this (group, copy) pair.
    pub fn mentions_copy(&self, group: Group, copy: CopyTag) -> bool {
        self.terms
            .keys()
            .any(|m| m.iter().any(|(v, _)| v.group == group && v.copy == copy))
    }

    /// Split the polynomial as `sum_m m * coeff_m` where the monomials `m`
    /// range over the listed variables and the coefficients collect everything
    /// else.
    pub fn coefficients_in(&self, vars: &[VariableId]) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            let mut inside = Vec::new();
            let mut outside = Vec::new();
            for &(v, e) in m.iter() {
                if vars.contains(&v) {
                    inside.push((v, e));
                } else {
                    outside.push((v, e));
                }
            }
            out.entry(Monomial(inside))
                .or_insert_with(Polynomial::zero)
                .insert_add(Monomial(outside), c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in descending monomial order, each as
    /// `coefficient * monomial`, joined by ` + `. The zero polynomial prints
    /// as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.is_one() {
                    format!("{c}")
                } else {
                    format!("{c} * {m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion along
/// the first row.
pub fn det_poly(m: &[Vec<Polynomial>]) -> Result<Polynomial, Error> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension(format!(
            "determinant requires a square matrix, got {} rows of lengths {:?}",
            n,
            m.iter().map(|r| r.len()).collect::<Vec<_>>()
        )));
    }
    Ok(det_cofactor(m, &(0..n).collect::<Vec<_>>(), 0))
}

fn det_cofactor(m: &[Vec<Polynomial>], cols: &[usize], row: usize) -> Polynomial {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = Polynomial::zero();
    for (i, &col) in cols.iter().enumerate() {
        if m[row][col].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
        let minor = det_cofactor(m, &rest, row + 1);
        let signed = if i % 2 == 0 { minor } else { minor.neg() };
        acc = acc.add(&m[row][col].mul(&signed));
    }
    acc
}

/// Check that a rational is a nonnegative power `s^k` times another, i.e.
/// `value == other * s^k`. Helper for homogeneity tests.
pub fn is_scaled_by(value: &Rational, other: &Rational, s: &Rational, k: u32) -> bool {
    let mut p = Rational::one();
    for _ in 0..k {
        p *= s;
    }
    *value == other * p
}

/// Render a rational without surrounding spaces, e.g. `-2/3`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else if r.is_negative() {
        format!("-{}/{}", r.numer().magnitude(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
