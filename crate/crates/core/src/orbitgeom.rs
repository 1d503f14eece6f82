//! Orbit/variety registry for the supported formats: representatives, variety
//! identifications, projective dimensions, inclusion order and duality
//! annotations, together with independent dimension verification via
//! Lie-algebra tangent spaces.

use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::Error;
use crate::forms::{Hypermatrix, Shape};
use crate::linalg;
use crate::polyalgebra::Rational;

/// One orbit closure: its label, normal form, variety identification,
/// projective dimension and the orbits it covers in the inclusion order.
#[derive(Debug, Clone)]
pub struct OrbitRecord {
    pub format: Shape,
    pub label: &'static str,
    pub representative: Hypermatrix,
    pub projective_dimension: usize,
    pub variety: String,
    /// True for the single maximal record, the ambient projective space.
    pub ambient: bool,
    /// Direct lower neighbours in the inclusion order.
    pub covers: Vec<&'static str>,
    /// Display-only duality annotation, when known.
    pub duality: Option<String>,
}

/// Dimension verification entry for one orbit.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TangentReport {
    pub label: &'static str,
    pub affine_rank: usize,
    pub projective_dimension: usize,
    pub expected: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

fn rec(
    format: Shape,
    label: &'static str,
    kets: &[(usize, usize, usize)],
    dim: usize,
    variety: &str,
    ambient: bool,
    covers: &[&'static str],
    duality: Option<&str>,
) -> OrbitRecord {
    OrbitRecord {
        format,
        label,
        representative: Hypermatrix::from_kets(format, kets),
        projective_dimension: dim,
        variety: variety.to_string(),
        ambient,
        covers: covers.to_vec(),
        duality: duality.map(|s| s.to_string()),
    }
}

/// The six orbits of the 2x2x2 format, top orbit first.
pub fn registry222() -> &'static [OrbitRecord] {
    static REG: OnceLock<Vec<OrbitRecord>> = OnceLock::new();
    REG.get_or_init(|| {
        let s = Shape::new(2, 2, 2).unwrap();
        vec![
            rec(s, "O_VI", &[(0, 0, 0), (1, 1, 1)], 7, "P^7", true, &["O_V"], None),
            rec(
                s,
                "O_V",
                &[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
                6,
                "tau(P^1 x P^1 x P^1)",
                false,
                &["O_IV", "O_III", "O_II"],
                Some("dual to O_I"),
            ),
            rec(
                s,
                "O_IV",
                &[(0, 0, 1), (1, 1, 1)],
                4,
                "sigma_2(P^1 x P^1) x P^1",
                false,
                &["O_I"],
                Some("self-dual"),
            ),
            rec(
                s,
                "O_III",
                &[(1, 0, 0), (1, 1, 1)],
                4,
                "P^1 x sigma_2(P^1 x P^1)",
                false,
                &["O_I"],
                Some("self-dual"),
            ),
            rec(
                s,
                "O_II",
                &[(0, 1, 0), (1, 1, 1)],
                4,
                "sigma_2(P^1 x [P^1] x P^1) x P^1",
                false,
                &["O_I"],
                Some("self-dual"),
            ),
            rec(
                s,
                "O_I",
                &[(0, 0, 0)],
                3,
                "X = P^1 x P^1 x P^1",
                false,
                &[],
                Some("dual to O_V"),
            ),
        ]
    })
}

/// The eight orbits of the 2x2x3 format, top orbit first.
pub fn registry223() -> &'static [OrbitRecord] {
    static REG: OnceLock<Vec<OrbitRecord>> = OnceLock::new();
    REG.get_or_init(|| {
        let s = Shape::new(2, 2, 3).unwrap();
        vec![
            rec(
                s,
                "O_VIII",
                &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 2)],
                11,
                "P^11",
                true,
                &["O_VII"],
                None,
            ),
            rec(
                s,
                "O_VII",
                &[(0, 0, 0), (0, 1, 1), (1, 0, 2)],
                10,
                "J(X, O_IV)",
                false,
                &["O_VI"],
                Some("dual to O_I"),
            ),
            rec(
                s,
                "O_VI",
                &[(0, 0, 0), (1, 1, 1)],
                9,
                "sigma_2(X)",
                false,
                &["O_V"],
                Some("dual to O_II"),
            ),
            rec(
                s,
                "O_V",
                &[(0, 0, 0), (0, 1, 1), (1, 0, 1)],
                8,
                "tau(X)",
                false,
                &["O_IV", "O_III", "O_II"],
                Some("self-dual"),
            ),
            rec(
                s,
                "O_IV",
                &[(0, 0, 0), (0, 1, 1)],
                6,
                "P^1 x sigma_2(P^1 x P^2) ~ P^1 x P^5",
                false,
                &["O_I"],
                Some("self-dual"),
            ),
            rec(
                s,
                "O_III",
                &[(0, 0, 0), (1, 0, 1)],
                6,
                "sigma_2(P^1 x [P^1] x P^2) x P^1",
                false,
                &["O_I"],
                Some("self-dual"),
            ),
            rec(
                s,
                "O_II",
                &[(0, 0, 0), (1, 1, 0)],
                5,
                "sigma_2(P^1 x P^1) x P^2 ~ P^3 x P^2",
                false,
                &["O_I"],
                Some("dual to O_VI"),
            ),
            rec(
                s,
                "O_I",
                &[(0, 0, 0)],
                4,
                "X = P^1 x P^1 x P^2",
                false,
                &[],
                Some("dual to O_VII"),
            ),
        ]
    })
}

/// The nine orbits of the 2x2x(n+1) formats for n >= 3; dimensions are the
/// affine formulas evaluated at the concrete n.
pub fn registry22n(n: usize) -> Result<Vec<OrbitRecord>, Error> {
    if n < 3 {
        return Err(Error::Dimension(format!(
            "parametric registry requires n >= 3, got {n}"
        )));
    }
    let s = Shape::new(2, 2, n + 1)?;
    Ok(vec![
        rec(
            s,
            "O_IX",
            &[(0, 0, 0), (0, 1, 1), (1, 0, 2), (1, 1, 3)],
            4 * n + 3,
            &format!("P^{}", 4 * n + 3),
            true,
            &["O_VIII"],
            None,
        ),
        rec(
            s,
            "O_VIII",
            &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 2)],
            3 * n + 5,
            "sigma_3(X)",
            false,
            &["O_VII"],
            Some("dual to O_II"),
        ),
        rec(
            s,
            "O_VII",
            &[(0, 0, 0), (0, 1, 1), (1, 0, 2)],
            3 * n + 4,
            "J(X, O_IV)",
            false,
            &["O_VI"],
            Some("dual to O_I"),
        ),
        rec(
            s,
            "O_VI",
            &[(0, 0, 0), (1, 1, 1)],
            2 * n + 5,
            "sigma_2(X)",
            false,
            &["O_V"],
            Some("self-dual"),
        ),
        rec(
            s,
            "O_V",
            &[(0, 0, 0), (0, 1, 1), (1, 0, 1)],
            2 * n + 4,
            "tau(X)",
            false,
            &["O_IV", "O_III", "O_II"],
            Some("self-dual"),
        ),
        rec(
            s,
            "O_IV",
            &[(0, 0, 0), (0, 1, 1)],
            2 * n + 2,
            &format!("P^1 x sigma_2(P^1 x P^{n}) ~ P^1 x P^{}", 2 * n + 1),
            false,
            &["O_I"],
            Some("self-dual"),
        ),
        rec(
            s,
            "O_III",
            &[(0, 0, 0), (1, 0, 1)],
            2 * n + 2,
            &format!("sigma_2(P^1 x [P^1] x P^{n}) x P^1"),
            false,
            &["O_I"],
            Some("self-dual"),
        ),
        rec(
            s,
            "O_II",
            &[(0, 0, 0), (1, 1, 0)],
            n + 3,
            &format!("sigma_2(P^1 x P^1) x P^{n} ~ P^3 x P^{n}"),
            false,
            &["O_I"],
            Some("dual to O_VIII"),
        ),
        rec(
            s,
            "O_I",
            &[(0, 0, 0)],
            n + 2,
            &format!("X = P^1 x P^1 x P^{n}"),
            false,
            &[],
            Some("dual to O_VII"),
        ),
    ])
}

/// The seventeen orbits of the 2x3x3 format, top orbit first.
pub fn registry233() -> &'static [OrbitRecord] {
    static REG: OnceLock<Vec<OrbitRecord>> = OnceLock::new();
    REG.get_or_init(|| {
        let s = Shape::new(2, 3, 3).unwrap();
        vec![
            rec(
                s,
                "O_XVII",
                &[(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 2, 2)],
                17,
                "P^17",
                true,
                &["O_XVI"],
                None,
            ),
            rec(
                s,
                "O_XVI",
                &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 2, 2)],
                16,
                "J(X, tau(X))",
                false,
                &["O_XV", "O_XIV"],
                None,
            ),
            rec(
                s,
                "O_XV",
                &[(0, 0, 0), (0, 1, 1), (0, 2, 2), (1, 0, 1), (1, 1, 2)],
                15,
                "T(X, tau(X))",
                false,
                &["O_XIII", "O_XII", "O_XI", "O_VIII"],
                None,
            ),
            rec(
                s,
                "O_XIV",
                &[(0, 0, 0), (0, 1, 1), (1, 2, 2)],
                14,
                "J(X, P^1 x sigma_2(P^2 x P^2))",
                false,
                &["O_XIII"],
                None,
            ),
            rec(
                s,
                "O_XIII",
                &[(0, 0, 0), (0, 1, 1), (0, 2, 2), (1, 0, 1)],
                13,
                "T(X, P^1 x sigma_2(P^2 x P^2))",
                false,
                &["O_X", "O_IX", "O_VII"],
                None,
            ),
            rec(
                s,
                "O_XII",
                &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 2)],
                13,
                "sigma_2(sigma_2(P^1 x [P^2] x P^2) x P^2)",
                false,
                &["O_X"],
                None,
            ),
            rec(
                s,
                "O_XI",
                &[(0, 0, 0), (0, 1, 1), (1, 2, 1), (1, 0, 2)],
                13,
                "J(P^5 x P^2, sigma_2(P^1 x [P^2] x P^2) x P^2)",
                false,
                &["O_X", "O_VII"],
                None,
            ),
            rec(
                s,
                "O_X",
                &[(0, 0, 0), (0, 1, 1), (1, 0, 2)],
                12,
                "J(X, sigma_2(P^1 x [P^2] x P^2) x P^2)",
                false,
                &["O_VI"],
                None,
            ),
            rec(
                s,
                "O_IX",
                &[(0, 0, 0), (0, 1, 1), (0, 2, 2)],
                9,
                "P^1 x sigma_3(P^2 x P^2) ~ P^1 x P^8",
                false,
                &["O_IV"],
                None,
            ),
            rec(
                s,
                "O_VIII",
                &[(0, 0, 0), (0, 1, 1), (1, 1, 0), (1, 2, 1)],
                13,
                "sigma_2(P^5 x P^2)",
                false,
                &["O_VII"],
                None,
            ),
            rec(
                s,
                "O_VII",
                &[(0, 0, 0), (0, 1, 1), (1, 2, 0)],
                12,
                "J(X, P^5 x P^2)",
                false,
                &["O_VI"],
                None,
            ),
            rec(
                s,
                "O_VI",
                &[(0, 0, 0), (1, 1, 1)],
                11,
                "sigma_2(X)",
                false,
                &["O_V"],
                None,
            ),
            rec(
                s,
                "O_V",
                &[(0, 0, 0), (0, 1, 1), (1, 0, 1)],
                10,
                "tau(X)",
                false,
                &["O_IV", "O_III", "O_II"],
                None,
            ),
            rec(
                s,
                "O_IV",
                &[(0, 0, 0), (0, 1, 1)],
                8,
                "P^1 x sigma_2(P^2 x P^2) ~ P^1 x P^7",
                false,
                &["O_I"],
                None,
            ),
            rec(
                s,
                "O_III",
                &[(0, 0, 0), (1, 0, 1)],
                7,
                "sigma_2(P^1 x [P^2] x P^2) x P^2",
                false,
                &["O_I"],
                None,
            ),
            rec(
                s,
                "O_II",
                &[(0, 0, 0), (1, 1, 0)],
                7,
                "sigma_2(P^1 x P^2) x P^2 ~ P^5 x P^2",
                false,
                &["O_I"],
                None,
            ),
            rec(s, "O_I", &[(0, 0, 0)], 5, "X = P^1 x P^2 x P^2", false, &[], None),
        ]
    })
}

/// Registry for a fixed classifiable format, or the parametric 2x2x(n+1)
/// family evaluated at the concrete n for larger third factors.
pub fn registry(shape: Shape) -> Result<Vec<OrbitRecord>, Error> {
    match shape.dims() {
        [2, 2, 2] => Ok(registry222().to_vec()),
        [2, 2, 3] => Ok(registry223().to_vec()),
        [2, 3, 3] => Ok(registry233().to_vec()),
        [2, 2, k] => registry22n(k - 1),
        other => Err(Error::UnsupportedShape(other)),
    }
}

/// Find a record by label.
pub fn record(shape: Shape, label: &str) -> Result<OrbitRecord, Error> {
    registry(shape)?
        .into_iter()
        .find(|r| r.label == label)
        .ok_or_else(|| Error::UnknownLabel { shape: shape.dims(), label: label.to_string() })
}

/// Projective dimension of the orbit through `h`: the exact rank of the
/// tangent vectors {(E (x) I (x) I) h, (I (x) E (x) I) h, (I (x) I (x) E) h}
/// over the elementary-matrix basis of each slot's full matrix algebra, minus
/// one for the cone direction.
pub fn tangent_dimension(h: &Hypermatrix) -> Result<usize, Error> {
    if h.is_zero() {
        return Err(Error::ZeroState);
    }
    let dims = h.shape().dims();
    let len = h.shape().len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for slot in 0..3 {
        let n = dims[slot];
        for p in 0..n {
            for q in 0..n {
                // (E_pq acting on slot) h : index_slot p component receives the
                // q component of h.
                let mut row = vec![Rational::zero(); len];
                for idx in 0..len {
                    let (i, j, k) = h.shape().unflat(idx);
                    let src = match slot {
                        0 if i == p => Some(h.shape().flat(q, j, k)),
                        1 if j == p => Some(h.shape().flat(i, q, k)),
                        2 if k == p => Some(h.shape().flat(i, j, q)),
                        _ => None,
                    };
                    if let Some(s) = src {
                        row[idx] = h.entries()[s].clone();
                    }
                }
                rows.push(row);
            }
        }
    }
    let rank = linalg::rank_rational(&rows);
    Ok(rank - 1)
}

/// Verify every dimension entry of the registry for a format by the tangent
/// rank computation.
pub fn verify_registry(shape: Shape) -> Result<Vec<TangentReport>, Error> {
    let regs = registry(shape)?;
    let mut out = Vec::with_capacity(regs.len());
    for r in &regs {
        let dim = tangent_dimension(&r.representative)?;
        out.push(TangentReport {
            label: r.label,
            affine_rank: dim + 1,
            projective_dimension: dim,
            expected: r.projective_dimension,
            matches: dim == r.projective_dimension,
        });
    }
    Ok(out)
}

/// All orbits strictly above `label` in the inclusion order (the transitive
/// closure upward), topologically ordered by dimension.
pub fn hasse_ancestors(shape: Shape, label: &str) -> Result<Vec<&'static str>, Error> {
    let regs = registry(shape)?;
    if !regs.iter().any(|r| r.label == label) {
        return Err(Error::UnknownLabel { shape: shape.dims(), label: label.to_string() });
    }
    let mut above: Vec<&OrbitRecord> = Vec::new();
    let mut frontier = vec![label.to_string()];
    while let Some(cur) = frontier.pop() {
        for r in &regs {
            if r.covers.iter().any(|c| *c == cur)
                && !above.iter().any(|a| a.label == r.label)
            {
                above.push(r);
                frontier.push(r.label.to_string());
            }
        }
    }
    let mut keyed: Vec<(usize, usize, &'static str)> = above
        .iter()
        .map(|r| {
            let idx = regs.iter().position(|q| q.label == r.label).unwrap();
            (r.projective_dimension, regs.len() - idx, r.label)
        })
        .collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, _, l)| l).collect())
}

/// DOT rendering of the inclusion order, dimensions as node annotations.
pub fn hasse_dot(shape: Shape) -> Result<String, Error> {
    let regs = registry(shape)?;
    let mut out = String::new();
    out.push_str(&format!("digraph hasse_{} {{\n", shape.to_string().replace('x', "_")));
    out.push_str("  rankdir=BT;\n");
    for r in &regs {
        out.push_str(&format!(
            "  \"{}\" [label=\"{}\\n{}\\ndim {}\"];\n",
            r.label, r.label, r.variety, r.projective_dimension
        ));
    }
    for r in &regs {
        for c in &r.covers {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", c, r.label));
        }
    }
    out.push_str("}\n");
    Ok(out)
}
