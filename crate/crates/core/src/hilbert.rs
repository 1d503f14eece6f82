//! Hilbert series of the covariant algebras: expansion of the closed-form
//! generating functions as truncated power series, and an independent
//! brute-force count of covariants by exact linear algebra.
//!
//! The oracle computes, for a fixed multidegree (d0 in the coefficients,
//! d1,d2,d3 in the covariant variable groups), the dimension of the joint
//! kernel of the simple raising derivations of each sl factor acting
//! simultaneously on the coefficient variables and contragradiently on the
//! covariant variables, restricted to the balanced-weight monomial basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::forms::Shape;
use crate::linalg::rank_sparse;
use crate::polyalgebra::{Group, Monomial, Polynomial, Rational, VariableId};

/// Exponent of one series monomial t^d0 u1^d1 u2^d2 u3^d3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct SeriesMono {
    pub t: u32,
    pub u: [u32; 3],
}

impl SeriesMono {
    pub fn new(t: u32, u1: u32, u2: u32, u3: u32) -> Self {
        SeriesMono { t, u: [u1, u2, u3] }
    }

    fn add(&self, other: &SeriesMono) -> SeriesMono {
        SeriesMono {
            t: self.t + other.t,
            u: [self.u[0] + other.u[0], self.u[1] + other.u[1], self.u[2] + other.u[2]],
        }
    }
}

/// A rational generating function: a signed polynomial numerator over a
/// product of factors (1 - m), each with positive t-degree, together with the
/// truncation bound for expansion.
#[derive(Debug, Clone)]
pub struct RationalSeriesSpec {
    pub numerator: Vec<(i64, SeriesMono)>,
    pub denominator_factors: Vec<SeriesMono>,
    pub truncation: u32,
}

/// A truncated multivariate power series with exact integer coefficients.
#[derive(Debug, Clone)]
pub struct SeriesTruncation {
    pub truncation: u32,
    coeffs: BTreeMap<SeriesMono, BigInt>,
}

impl SeriesTruncation {
    pub fn coefficient(&self, m: &SeriesMono) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SeriesMono, &BigInt)> {
        self.coeffs.iter()
    }
}

/// Expand the generating function as an exact truncated series.
pub fn expand_series(spec: &RationalSeriesSpec) -> Result<SeriesTruncation, Error> {
    for f in &spec.denominator_factors {
        if f.t == 0 {
            return Err(Error::Dimension(
                "denominator factor must have positive t-degree".into(),
            ));
        }
    }
    let mut coeffs: BTreeMap<SeriesMono, BigInt> = BTreeMap::new();
    for (c, m) in &spec.numerator {
        if m.t <= spec.truncation {
            let e = coeffs.entry(*m).or_insert_with(BigInt::zero);
            *e += BigInt::from(*c);
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    // Multiply by 1/(1 - m) factor by factor: a single ascending pass adds
    // the coefficient of k into k + m, which realizes the geometric series
    // because t(m) > 0 makes the order well-founded.
    for m in &spec.denominator_factors {
        let mut queue: std::collections::BTreeSet<SeriesMono> =
            coeffs.keys().cloned().collect();
        while let Some(k) = queue.pop_first() {
            let c = coeffs.get(&k).cloned().unwrap_or_else(BigInt::zero);
            if c.is_zero() {
                continue;
            }
            let next = k.add(m);
            if next.t <= spec.truncation {
                let e = coeffs.entry(next).or_insert_with(BigInt::zero);
                *e += c;
                queue.insert(next);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
    }
    Ok(SeriesTruncation { truncation: spec.truncation, coeffs })
}

/// The printed closed-form series for one of the three classifiable formats.
pub fn printed_series(shape: Shape, truncation: u32) -> Result<RationalSeriesSpec, Error> {
    let m = SeriesMono::new;
    match shape.dims() {
        [2, 2, 2] => Ok(RationalSeriesSpec {
            numerator: vec![(1, m(0, 0, 0, 0)), (-1, m(6, 2, 2, 2))],
            denominator_factors: vec![
                m(1, 1, 1, 1),
                m(2, 2, 0, 0),
                m(2, 0, 2, 0),
                m(2, 0, 0, 2),
                m(3, 1, 1, 1),
                m(4, 0, 0, 0),
            ],
            truncation,
        }),
        [2, 2, 3] => Ok(RationalSeriesSpec {
            numerator: vec![(1, m(0, 0, 0, 0)), (-1, m(8, 2, 2, 2))],
            denominator_factors: vec![
                m(1, 1, 1, 1),
                m(2, 0, 0, 2),
                m(3, 1, 1, 0),
                m(4, 1, 2, 0),
                m(4, 1, 0, 2),
                m(6, 0, 0, 0),
            ],
            truncation,
        }),
        [2, 3, 3] => Ok(RationalSeriesSpec {
            numerator: vec![
                (1, m(0, 0, 0, 0)),
                (1, m(4, 2, 1, 1)),
                (1, m(5, 1, 2, 2)),
                (1, m(7, 1, 1, 1)),
                (1, m(8, 0, 2, 2)),
                (1, m(9, 3, 0, 0)),
                (-1, m(10, 4, 1, 1)),
                (1, m(10, 2, 1, 1)),
                (-1, m(11, 3, 2, 2)),
                (1, m(11, 1, 2, 2)),
                (-1, m(15, 3, 3, 3)),
                (1, m(15, 1, 3, 3)),
                (-1, m(16, 2, 4, 4)),
                (1, m(16, 0, 4, 4)),
                (-1, m(17, 1, 5, 5)),
                (-1, m(18, 4, 3, 3)),
                (-1, m(19, 3, 4, 4)),
                (-1, m(21, 3, 3, 3)),
                (-1, m(22, 2, 4, 4)),
                (-1, m(26, 4, 5, 5)),
            ],
            denominator_factors: vec![
                m(1, 1, 1, 1),
                m(3, 3, 0, 0),
                m(4, 0, 1, 1),
                m(6, 0, 3, 0),
                m(6, 0, 0, 3),
                m(6, 0, 3, 3),
                m(6, 2, 0, 0),
                m(12, 0, 0, 0),
            ],
            truncation,
        }),
        other => Err(Error::UnsupportedShape(other)),
    }
}

/// A covariant multidegree: d0 in the coefficients, (d1, d2, d3) in the
/// covariant variable groups. The implied weights are l_i = (d0 - d_i)/n_i;
/// the degree is admissible only when all three are nonnegative integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CovariantDegree {
    pub d0: u32,
    pub d: [u32; 3],
}

impl CovariantDegree {
    pub fn new(d0: u32, d1: u32, d2: u32, d3: u32) -> Self {
        CovariantDegree { d0, d: [d1, d2, d3] }
    }

    /// The implied weights, or None when the degree is inadmissible.
    pub fn weights(&self, shape: Shape) -> Option<[u32; 3]> {
        let dims = shape.dims();
        let mut l = [0u32; 3];
        for i in 0..3 {
            if self.d[i] > self.d0 {
                return None;
            }
            let diff = self.d0 - self.d[i];
            if diff % dims[i] as u32 != 0 {
                return None;
            }
            l[i] = diff / dims[i] as u32;
        }
        Some(l)
    }
}

/// Configured d0 bound for the kernel computation.
pub fn default_degree_bound(shape: Shape) -> u32 {
    match shape.dims() {
        [2, 3, 3] => 3,
        _ => 4,
    }
}

fn covariant_groups() -> [Group; 3] {
    [Group::X, Group::Y, Group::Z]
}

/// Enumerate all monomials of total degree `deg` in `nvars` variables, as
/// exponent vectors.
fn enumerate_monomials(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if nvars == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, deg, &mut cur, &mut out);
    out
}

/// Number of linearly independent covariants of the given multidegree,
/// computed as the corank of the stacked simple raising derivations on the
/// balanced-weight monomial basis.
pub fn covariant_dimension(shape: Shape, deg: CovariantDegree) -> Result<usize, Error> {
    let bound = default_degree_bound(shape);
    if deg.d0 > bound {
        return Err(Error::DegreeBound { requested: deg.d0, bound });
    }
    let Some(weights) = deg.weights(shape) else {
        return Ok(0);
    };
    let dims = shape.dims();
    let nvars = shape.len();

    // Basis: coefficient monomials whose slot weights dominate the implied
    // weight; the covariant-variable exponents are then forced.
    let mut basis: Vec<Polynomial> = Vec::new();
    'mono: for exps in enumerate_monomials(nvars, deg.d0) {
        let mut slot_counts = [[0u32; 6]; 3];
        for (idx, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (i, j, k) = shape.unflat(idx);
            slot_counts[0][i] += e;
            slot_counts[1][j] += e;
            slot_counts[2][k] += e;
        }
        let mut pairs: Vec<(VariableId, u32)> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(idx, &e)| (VariableId::plain(Group::A, idx as u8), e))
            .collect();
        for slot in 0..3 {
            let group = covariant_groups()[slot];
            for comp in 0..dims[slot] {
                let w = slot_counts[slot][comp];
                if w < weights[slot] {
                    continue 'mono;
                }
                let e = w - weights[slot];
                if e > 0 {
                    pairs.push((VariableId::plain(group, comp as u8), e));
                }
            }
        }
        basis.push(Polynomial::term(
            Monomial::from_pairs(pairs),
            Rational::one(),
        ));
    }

    if basis.is_empty() {
        return Ok(0);
    }

    // Simple raising derivations E_{j,j+1} for each slot.
    let mut operators: Vec<(usize, u8, u8)> = Vec::new();
    for slot in 0..3 {
        for j in 0..dims[slot] - 1 {
            operators.push((slot, j as u8, j as u8 + 1));
        }
    }

    let mut col_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    for b in &basis {
        let mut row: Vec<(usize, Rational)> = Vec::new();
        for (op_id, &(slot, j, k)) in operators.iter().enumerate() {
            let image = apply_raising(shape, slot, j, k, b);
            for (m, c) in image.iter() {
                let next = col_index.len();
                let col = *col_index.entry((op_id, m.clone())).or_insert(next);
                row.push((col, c.clone()));
            }
        }
        rows.push(row);
    }
    let rank = rank_sparse(rows);
    Ok(basis.len() - rank)
}

/// The derivation for the slot generator E_{j,k}: coefficient variables move
/// index j to index k in the slot, covariant variables move contragradiently.
fn apply_raising(shape: Shape, slot: usize, j: u8, k: u8, f: &Polynomial) -> Polynomial {
    let dims = shape.dims();
    let mut out = Polynomial::zero();
    for idx in 0..shape.len() {
        let (i1, i2, i3) = shape.unflat(idx);
        let slot_index = [i1, i2, i3][slot];
        if slot_index != j as usize {
            continue;
        }
        let mut target = [i1, i2, i3];
        target[slot] = k as usize;
        let tvar = VariableId::plain(
            Group::A,
            shape.flat(target[0], target[1], target[2]) as u8,
        );
        let d = f.derive(VariableId::plain(Group::A, idx as u8));
        if !d.is_zero() {
            out = out.add(&d.mul(&Polynomial::var(tvar)));
        }
    }
    let group = covariant_groups()[slot];
    let _ = dims;
    let vj = VariableId::plain(group, j);
    let vk = VariableId::plain(group, k);
    let d = f.derive(vk);
    if !d.is_zero() {
        out = out.sub(&d.mul(&Polynomial::var(vj)));
    }
    out
}

/// One line of the verification table.
#[derive(Debug, Clone, serde::Serialize)]
pub struct HilbertRow {
    pub d0: u32,
    pub d: [u32; 3],
    pub series: i64,
    pub kernel: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct HilbertReport {
    pub shape: [usize; 3],
    pub d0_bound: u32,
    pub rows: Vec<HilbertRow>,
}

impl HilbertReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }
}

/// Compare the expanded printed series against the kernel oracle at every
/// admissible degree with d0 up to the bound.
pub fn verify_hilbert(shape: Shape, d0_bound: u32) -> Result<HilbertReport, Error> {
    let series = expand_series(&printed_series(shape, d0_bound)?)?;
    let mut rows = Vec::new();
    for d0 in 0..=d0_bound {
        for d1 in 0..=d0 {
            for d2 in 0..=d0 {
                for d3 in 0..=d0 {
                    let deg = CovariantDegree::new(d0, d1, d2, d3);
                    if deg.weights(shape).is_none() {
                        continue;
                    }
                    let kernel = covariant_dimension(shape, deg)?;
                    let series_coeff = series.coefficient(&SeriesMono::new(d0, d1, d2, d3));
                    let series_i64 =
                        i64::try_from(&series_coeff).expect("series coefficient fits i64");
                    rows.push(HilbertRow {
                        d0,
                        d: deg.d,
                        series: series_i64,
                        kernel,
                        matches: series_i64 >= 0 && series_i64 as usize == kernel,
                    });
                }
            }
        }
    }
    Ok(HilbertReport { shape: shape.dims(), d0_bound, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn s222() -> Shape {
        Shape::new(2, 2, 2).unwrap()
    }
    fn s223() -> Shape {
        Shape::new(2, 2, 3).unwrap()
    }
    fn s233() -> Shape {
        Shape::new(2, 3, 3).unwrap()
    }

    #[test]
    fn expansion_spot_coefficients() {
        let series = expand_series(&printed_series(s222(), 6).unwrap()).unwrap();
        assert_eq!(series.coefficient(&SeriesMono::new(0, 0, 0, 0)), BigInt::one());
        // the ground form
        assert_eq!(series.coefficient(&SeriesMono::new(1, 1, 1, 1)), BigInt::one());
        // three quadratic generators
        assert_eq!(series.coefficient(&SeriesMono::new(2, 2, 0, 0)), BigInt::one());
        // the degree-4 invariant
        assert_eq!(series.coefficient(&SeriesMono::new(4, 0, 0, 0)), BigInt::one());

        let series = expand_series(&printed_series(s223(), 4).unwrap()).unwrap();
        assert_eq!(series.coefficient(&SeriesMono::new(2, 0, 0, 2)), BigInt::one());
        assert_eq!(series.coefficient(&SeriesMono::new(3, 1, 1, 0)), BigInt::one());
    }

    #[test]
    fn geometric_expansion_is_exact() {
        // 1/(1-t)(1-t^2) : coefficient of t^n counts partitions into 1s and 2s
        let spec = RationalSeriesSpec {
            numerator: vec![(1, SeriesMono::new(0, 0, 0, 0))],
            denominator_factors: vec![SeriesMono::new(1, 0, 0, 0), SeriesMono::new(2, 0, 0, 0)],
            truncation: 10,
        };
        let series = expand_series(&spec).unwrap();
        for n in 0..=10u32 {
            assert_eq!(
                series.coefficient(&SeriesMono::new(n, 0, 0, 0)),
                BigInt::from(n / 2 + 1)
            );
        }
        let bad = RationalSeriesSpec {
            numerator: vec![(1, SeriesMono::new(0, 0, 0, 0))],
            denominator_factors: vec![SeriesMono::new(0, 1, 0, 0)],
            truncation: 3,
        };
        assert!(expand_series(&bad).is_err());
    }

    #[test]
    fn full_symmetry_of_the_222_series() {
        let series = expand_series(&printed_series(s222(), 8).unwrap()).unwrap();
        for (m, c) in series.iter() {
            for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let p = SeriesMono::new(m.t, m.u[perm[0]], m.u[perm[1]], m.u[perm[2]]);
                assert_eq!(series.coefficient(&p), c.clone(), "asymmetry at {m:?}");
            }
        }
    }

    #[test]
    fn series_coefficients_nonnegative_at_admissible_degrees() {
        for (shape, trunc) in [(s222(), 8u32), (s223(), 6), (s233(), 12)] {
            let series = expand_series(&printed_series(shape, trunc).unwrap()).unwrap();
            for (m, c) in series.iter() {
                let deg = CovariantDegree::new(m.t, m.u[0], m.u[1], m.u[2]);
                if deg.weights(shape).is_some() {
                    assert!(
                        !c.is_negative(),
                        "negative coefficient {c} at {m:?} for {shape}"
                    );
                }
            }
        }
    }

    #[test]
    fn named_generators_appear_in_the_expansions() {
        let cases: Vec<(Shape, u32, Vec<SeriesMono>)> = vec![
            (
                s222(),
                6,
                vec![
                    SeriesMono::new(1, 1, 1, 1),
                    SeriesMono::new(2, 2, 0, 0),
                    SeriesMono::new(2, 0, 2, 0),
                    SeriesMono::new(2, 0, 0, 2),
                    SeriesMono::new(3, 1, 1, 1),
                    SeriesMono::new(4, 0, 0, 0),
                ],
            ),
            (
                s223(),
                8,
                vec![
                    SeriesMono::new(1, 1, 1, 1),
                    SeriesMono::new(2, 0, 0, 2),
                    SeriesMono::new(3, 1, 1, 0),
                    SeriesMono::new(4, 1, 2, 0),
                    SeriesMono::new(4, 1, 0, 2),
                    SeriesMono::new(6, 0, 0, 0),
                ],
            ),
            (
                s233(),
                12,
                vec![
                    SeriesMono::new(1, 1, 1, 1),
                    SeriesMono::new(3, 3, 0, 0),
                    SeriesMono::new(4, 0, 1, 1),
                    SeriesMono::new(4, 2, 1, 1),
                    SeriesMono::new(6, 2, 0, 0),
                    SeriesMono::new(12, 0, 0, 0),
                ],
            ),
        ];
        for (shape, trunc, monos) in cases {
            let series = expand_series(&printed_series(shape, trunc).unwrap()).unwrap();
            for m in monos {
                assert!(
                    series.coefficient(&m) >= BigInt::one(),
                    "generator at {m:?} missing for {shape}"
                );
            }
        }
    }

    #[test]
    fn kernel_oracle_spot_dimensions() {
        // the ground form spans its degree space
        assert_eq!(
            covariant_dimension(s222(), CovariantDegree::new(1, 1, 1, 1)).unwrap(),
            1
        );
        // one quadratic covariant of type (2; 2,0,0)
        assert_eq!(
            covariant_dimension(s222(), CovariantDegree::new(2, 2, 0, 0)).unwrap(),
            1
        );
        // nothing of type (2; 0,2,2) for 2x3x3 (the antisymmetric contraction
        // dies under the trace)
        assert_eq!(
            covariant_dimension(s233(), CovariantDegree::new(2, 0, 2, 2)).unwrap(),
            0
        );
        // inadmissible weight
        assert_eq!(
            covariant_dimension(s222(), CovariantDegree::new(2, 1, 1, 1)).unwrap(),
            0
        );
        // (4; 0,2,0) for 2x2x3: the ternary weight (4-0)/3 is fractional, so
        // the dimension is 0 on both sides
        assert_eq!(
            covariant_dimension(s223(), CovariantDegree::new(4, 0, 2, 0)).unwrap(),
            0
        );
        let series = expand_series(&printed_series(s223(), 4).unwrap()).unwrap();
        assert_eq!(series.coefficient(&SeriesMono::new(4, 0, 2, 0)), BigInt::zero());
        // resource guard
        assert!(matches!(
            covariant_dimension(s222(), CovariantDegree::new(5, 1, 1, 1)),
            Err(Error::DegreeBound { .. })
        ));
    }

    #[test]
    fn verify_smoke_at_low_degree() {
        let report = verify_hilbert(s222(), 2).unwrap();
        assert!(report.all_match());
        assert!(report.rows.iter().any(|r| r.d0 == 2 && r.d == [2, 0, 0] && r.series == 1));

        let report = verify_hilbert(s223(), 2).unwrap();
        assert!(report.all_match());

        let report = verify_hilbert(s233(), 1).unwrap();
        assert!(report.all_match());
    }
}
