//! Hypermatrix states, ground forms and the SLOCC group action.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::linalg;
use crate::polyalgebra::{
    format_rational, parse_rational, rat, Group, Monomial, Polynomial, Rational, VariableId,
};

/// Tensor format (n1, n2, n3). Supported: 2x2x(n+1) for any n >= 1, and
/// 2x3x3. Classification is available for 2x2x2, 2x2x3 and 2x3x3 only;
/// the larger 2x2x(n+1) formats participate in dimension checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    dims: [usize; 3],
}

impl Shape {
    pub fn new(n1: usize, n2: usize, n3: usize) -> Result<Self, Error> {
        let dims = [n1, n2, n3];
        let supported = (n1 == 2 && n2 == 2 && n3 >= 2) || (n1 == 2 && n2 == 3 && n3 == 3);
        if supported {
            Ok(Shape { dims })
        } else {
            Err(Error::UnsupportedShape(dims))
        }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_classifiable(&self) -> bool {
        matches!(self.dims, [2, 2, 2] | [2, 2, 3] | [2, 3, 3])
    }

    /// Flattened coefficient index of A_{ijk}: i*n2*n3 + j*n3 + k. This
    /// ordering is part of the external interface.
    pub fn flat(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims[0] && j < self.dims[1] && k < self.dims[2]);
        i * self.dims[1] * self.dims[2] + j * self.dims[2] + k
    }

    pub fn unflat(&self, idx: usize) -> (usize, usize, usize) {
        let (n2, n3) = (self.dims[1], self.dims[2]);
        (idx / (n2 * n3), (idx / n3) % n2, idx % n3)
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}x{}", self.dims[0], self.dims[1], self.dims[2])
    }
}

/// Dense exact-rational tensor holding the state coefficients A_{ijk}.
/// The zero hypermatrix is representable but is not a projective state:
/// classification operations reject it with a distinct error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypermatrix {
    shape: Shape,
    entries: Vec<Rational>,
}

impl Hypermatrix {
    pub fn new(shape: Shape, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != shape.len() {
            return Err(Error::Dimension(format!(
                "shape {} expects {} entries, got {}",
                shape,
                shape.len(),
                entries.len()
            )));
        }
        Ok(Hypermatrix { shape, entries })
    }

    pub fn zero(shape: Shape) -> Self {
        Hypermatrix { entries: vec![Rational::zero(); shape.len()], shape }
    }

    /// Build from |ijk> basis kets with unit coefficients.
    pub fn from_kets(shape: Shape, kets: &[(usize, usize, usize)]) -> Self {
        let mut h = Hypermatrix::zero(shape);
        for &(i, j, k) in kets {
            let idx = shape.flat(i, j, k);
            h.entries[idx] += Rational::one();
        }
        h
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[self.shape.flat(i, j, k)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, s: &Rational) -> Hypermatrix {
        Hypermatrix {
            shape: self.shape,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }
}

/// The ground form A(x,y,z) = sum A_{ijk} x_i y_j z_k with the hypermatrix
/// entries as numeric coefficients.
pub fn ground_form(h: &Hypermatrix) -> Polynomial {
    let [_, n2, n3] = h.shape.dims();
    let mut p = Polynomial::zero();
    for (idx, c) in h.entries.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j, k) = h.shape.unflat(idx);
        let _ = (n2, n3);
        let m = Monomial::from_pairs([
            (VariableId::plain(Group::X, i as u8), 1),
            (VariableId::plain(Group::Y, j as u8), 1),
            (VariableId::plain(Group::Z, k as u8), 1),
        ]);
        p = p.add(&Polynomial::term(m, c.clone()));
    }
    p
}

/// The generic ground form with symbolic coefficient variables a_{flat(i,j,k)}.
pub fn ground_form_symbolic(shape: Shape) -> Polynomial {
    let mut p = Polynomial::zero();
    for idx in 0..shape.len() {
        let (i, j, k) = shape.unflat(idx);
        let m = Monomial::from_pairs([
            (VariableId::plain(Group::A, idx as u8), 1),
            (VariableId::plain(Group::X, i as u8), 1),
            (VariableId::plain(Group::Y, j as u8), 1),
            (VariableId::plain(Group::Z, k as u8), 1),
        ]);
        p = p.add(&Polynomial::term(m, Rational::one()));
    }
    p
}

/// An element of SL(n1) x SL(n2) x SL(n3), stored as three exact rational
/// matrices of determinant one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SloccElement {
    mats: [Vec<Vec<Rational>>; 3],
}

impl SloccElement {
    pub fn new(mats: [Vec<Vec<Rational>>; 3]) -> Result<Self, Error> {
        for m in &mats {
            let n = m.len();
            if n == 0 || m.iter().any(|row| row.len() != n) {
                return Err(Error::Dimension("SLOCC factor must be square".into()));
            }
            if linalg::det_rational(m) != Rational::one() {
                return Err(Error::Dimension("SLOCC factor must have determinant 1".into()));
            }
        }
        Ok(SloccElement { mats })
    }

    pub fn identity(shape: Shape) -> Self {
        let mats = shape.dims().map(identity_matrix);
        SloccElement { mats }
    }

    pub fn factor(&self, slot: usize) -> &Vec<Vec<Rational>> {
        &self.mats[slot]
    }

    pub fn inverse(&self) -> SloccElement {
        let mats = [0, 1, 2].map(|s| linalg::inverse_rational(&self.mats[s]).expect("det 1"));
        SloccElement { mats }
    }

    pub fn compose(&self, other: &SloccElement) -> SloccElement {
        let mats =
            [0, 1, 2].map(|s| linalg::mat_mul_rational(&self.mats[s], &other.mats[s]));
        SloccElement { mats }
    }
}

fn identity_matrix(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

/// Apply the group action: A'_{i'j'k'} = sum g1_{i'i} g2_{j'j} g3_{k'k} A_{ijk}.
pub fn act(g: &SloccElement, h: &Hypermatrix) -> Result<Hypermatrix, Error> {
    let dims = h.shape.dims();
    for (s, m) in g.mats.iter().enumerate() {
        if m.len() != dims[s] {
            return Err(Error::Dimension(format!(
                "SLOCC factor {} has size {}, state expects {}",
                s + 1,
                m.len(),
                dims[s]
            )));
        }
    }
    let mut out = Hypermatrix::zero(h.shape);
    for (idx, c) in h.entries.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j, k) = h.shape.unflat(idx);
        for ip in 0..dims[0] {
            let gi = &g.mats[0][ip][i];
            if gi.is_zero() {
                continue;
            }
            for jp in 0..dims[1] {
                let gj = &g.mats[1][jp][j];
                if gj.is_zero() {
                    continue;
                }
                let gij = gi * gj;
                for kp in 0..dims[2] {
                    let gk = &g.mats[2][kp][k];
                    if gk.is_zero() {
                        continue;
                    }
                    let t = &gij * gk * c;
                    let fidx = h.shape.flat(ip, jp, kp);
                    out.entries[fidx] += t;
                }
            }
        }
    }
    Ok(out)
}

/// Deterministic-from-seed random SLOCC element: each factor is a product of
/// at most `size_bound` integer shear matrices with shear amounts bounded by
/// `size_bound`, hence exactly unimodular.
pub fn random_slocc(shape: Shape, seed: u64, size_bound: u32) -> SloccElement {
    assert!(size_bound >= 1, "size_bound must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mats = shape.dims().map(|n| {
        let mut m = identity_matrix(n);
        let shears = rng.gen_range(0..=size_bound);
        for _ in 0..shears {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let mut lambda = 0i64;
            while lambda == 0 {
                lambda = rng.gen_range(-(size_bound as i64)..=size_bound as i64);
            }
            // m <- E_{ij}(lambda) * m : row i += lambda * row j
            for col in 0..n {
                let add = &m[j][col] * rat(lambda);
                m[i][col] += add;
            }
        }
        m
    });
    SloccElement { mats }
}

/// JSON state document shared with the CLI: exact rational entry strings in
/// the flattened index order.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct StateDocument {
    pub shape: [usize; 3],
    pub entries: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
}

impl StateDocument {
    pub fn to_hypermatrix(&self) -> Result<Hypermatrix, Error> {
        let shape = Shape::new(self.shape[0], self.shape[1], self.shape[2])?;
        if self.entries.len() != shape.len() {
            return Err(Error::Parse(format!(
                "shape {} expects {} entries, document has {}",
                shape,
                shape.len(),
                self.entries.len()
            )));
        }
        let entries = self
            .entries
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        Hypermatrix::new(shape, entries)
    }

    pub fn from_hypermatrix(h: &Hypermatrix, label: Option<String>) -> StateDocument {
        StateDocument {
            shape: h.shape.dims(),
            entries: h.entries.iter().map(format_rational).collect(),
            label,
        }
    }
}

/// Substitution map sending each covariant variable through the transpose of
/// the matching group factor; used to express how the ground form transforms.
pub fn contragredient_substitution(
    g: &SloccElement,
    shape: Shape,
) -> BTreeMap<VariableId, Polynomial> {
    let mut map = BTreeMap::new();
    let groups = [Group::X, Group::Y, Group::Z];
    for (slot, group) in groups.iter().enumerate() {
        let n = shape.dims()[slot];
        for i in 0..n {
            let mut p = Polynomial::zero();
            for ip in 0..n {
                p = p.add(
                    &Polynomial::var(VariableId::plain(*group, ip as u8))
                        .scale(&g.mats[slot][ip][i]),
                );
            }
            map.insert(VariableId::plain(*group, i as u8), p);
        }
    }
    map
}
