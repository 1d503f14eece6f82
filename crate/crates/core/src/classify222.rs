//! The 2x2x2 covariant system and the six-orbit classifier.
//!
//! The battery is the ground form A, the three quadratics B_x, B_y, B_z
//! (determinants of the mixed second-derivative matrices), the trilinear
//! Jacobian C and the degree-4 invariant Delta (the discriminant of B_x,
//! which is the hyperdeterminant up to normalization). The vanishing pattern
//! <[B_x],[B_y],[B_z],[C],[Delta]> separates the six orbits.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cayley::{discriminant_binary_quadratic, jacobian2, second_derivative_matrix};
use crate::error::Error;
use crate::forms::{ground_form, ground_form_symbolic, Hypermatrix, Shape};
use crate::nullity::NullityVector;
use crate::orbitgeom::{registry222, OrbitRecord};
use crate::polyalgebra::{det_poly, rat, Group, Polynomial, Rational, VariableId};

/// Slot names of the 2x2x2 nullity vector.
pub const SCHEMA: &[&str] = &["B_x", "B_y", "B_z", "C", "Delta"];

/// Nullity patterns of the six orbits, top orbit first.
const TABLE: &[(&str, &str)] = &[
    ("O_VI", "11111"),
    ("O_V", "11110"),
    ("O_IV", "00100"),
    ("O_III", "10000"),
    ("O_II", "01000"),
    ("O_I", "00000"),
];

/// The 2x2x2 covariants of a concrete state (coefficients substituted).
#[derive(Debug, Clone)]
pub struct Cov222 {
    pub a: Polynomial,
    pub b_x: Polynomial,
    pub b_y: Polynomial,
    pub b_z: Polynomial,
    pub c: Polynomial,
    pub delta: Rational,
}

impl Cov222 {
    pub fn nullity(&self) -> NullityVector {
        NullityVector::new(
            SCHEMA,
            vec![
                !self.b_x.is_zero(),
                !self.b_y.is_zero(),
                !self.b_z.is_zero(),
                !self.c.is_zero(),
                !self.delta.is_zero(),
            ],
        )
    }
}

/// The same covariant system over an arbitrary ground form, numeric or with
/// symbolic coefficient variables. Delta stays a polynomial here.
pub(crate) struct System222 {
    pub a: Polynomial,
    pub b_x: Polynomial,
    pub b_y: Polynomial,
    pub b_z: Polynomial,
    pub c: Polynomial,
    pub delta: Polynomial,
}

pub(crate) fn system_from_ground_form(a: &Polynomial) -> System222 {
    let b_x = det_poly(&second_derivative_matrix(a, Group::Y, 2, Group::Z, 2)).unwrap();
    let b_y = det_poly(&second_derivative_matrix(a, Group::X, 2, Group::Z, 2)).unwrap();
    let b_z = det_poly(&second_derivative_matrix(a, Group::X, 2, Group::Y, 2)).unwrap();
    let c = jacobian2(a, &b_x, Group::X);
    let delta = discriminant_binary_quadratic(&b_x, Group::X);
    System222 { a: a.clone(), b_x, b_y, b_z, c, delta }
}

fn check_input(h: &Hypermatrix) -> Result<(), Error> {
    if h.shape().dims() != [2, 2, 2] {
        return Err(Error::UnsupportedShape(h.shape().dims()));
    }
    if h.is_zero() {
        return Err(Error::ZeroState);
    }
    Ok(())
}

/// Compute the full covariant battery for a nonzero 2x2x2 state.
pub fn covariants222(h: &Hypermatrix) -> Result<Cov222, Error> {
    check_input(h)?;
    let sys = system_from_ground_form(&ground_form(h));
    let delta = sys
        .delta
        .as_constant()
        .expect("numeric coefficients leave Delta constant");
    Ok(Cov222 { a: sys.a, b_x: sys.b_x, b_y: sys.b_y, b_z: sys.b_z, c: sys.c, delta })
}

/// Classify a nonzero 2x2x2 state by its nullity vector.
pub fn classify222(h: &Hypermatrix) -> Result<&'static OrbitRecord, Error> {
    let cov = covariants222(h)?;
    let v = cov.nullity();
    lookup(&v)
}

pub(crate) fn lookup_in(
    table: &[(&'static str, &str)],
    registry: &'static [OrbitRecord],
    schema: &'static [&'static str],
    v: &NullityVector,
) -> Result<&'static OrbitRecord, Error> {
    for (label, pattern) in table {
        if &NullityVector::from_pattern(schema, pattern) == v {
            return Ok(registry.iter().find(|r| r.label == *label).unwrap());
        }
    }
    // The printed patterns are exhaustive for nonzero states; reaching this
    // point means the covariant computation itself is broken.
    panic!("nullity vector {v} matches no known orbit pattern");
}

fn lookup(v: &NullityVector) -> Result<&'static OrbitRecord, Error> {
    lookup_in(TABLE, registry222(), SCHEMA, v)
}

/// Expected nullity pattern for an orbit label.
pub fn expected_nullity(label: &str) -> Option<NullityVector> {
    TABLE
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, p)| NullityVector::from_pattern(SCHEMA, p))
}

/// The resolved triquadratic relation lambda1 C^2 + lambda2 B_x B_y B_z +
/// lambda3 Delta A^2 = 0 over generic symbolic coefficients.
#[derive(Debug, Clone)]
pub struct Syzygy222 {
    /// Normalized to coprime integers with positive first entry.
    pub lambda: [Rational; 3],
    /// The generic residual; identically zero once the constants are right.
    pub residual: Polynomial,
}

/// Determine the syzygy constants empirically from random specializations of
/// the generic covariants, then form the symbolic residual.
pub fn syzygy222() -> Syzygy222 {
    let shape = Shape::new(2, 2, 2).unwrap();
    let generic = ground_form_symbolic(shape);
    let sys = system_from_ground_form(&generic);
    let c2 = sys.c.mul(&sys.c);
    let bbb = sys.b_x.mul(&sys.b_y).mul(&sys.b_z);
    let da2 = sys.delta.mul(&sys.a.mul(&sys.a));

    let mut rng = ChaCha8Rng::seed_from_u64(20220222);
    let lambda = 'outer: loop {
        let mut rows: Vec<[Rational; 3]> = Vec::new();
        for _ in 0..3 {
            let entries: Vec<Rational> = (0..8).map(|_| rat(rng.gen_range(-4i64..=4))).collect();
            let h = Hypermatrix::new(shape, entries).unwrap();
            let bind = a_bindings(&h);
            let spec = [c2.substitute(&bind), bbb.substitute(&bind), da2.substitute(&bind)];
            let mut monomials = std::collections::BTreeSet::new();
            for p in &spec {
                for (m, _) in p.iter() {
                    monomials.insert(m.clone());
                }
            }
            for m in monomials {
                rows.push([
                    spec[0].coefficient(&m),
                    spec[1].coefficient(&m),
                    spec[2].coefficient(&m),
                ]);
            }
        }
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let candidate = cross3(&rows[i], &rows[j]);
                if candidate.iter().all(|v| v.is_zero()) {
                    continue;
                }
                if rows.iter().all(|r| dot3(r, &candidate).is_zero()) {
                    break 'outer normalize3(candidate);
                }
            }
        }
        // rank-deficient sample, try again
    };

    let residual = c2
        .scale(&lambda[0])
        .add(&bbb.scale(&lambda[1]))
        .add(&da2.scale(&lambda[2]));
    Syzygy222 { lambda, residual }
}

/// The syzygy residual: symbolic over generic coefficients when `generic` is
/// true, otherwise specialized at the GHZ representative through the numeric
/// covariant path.
pub fn syzygy222_residual(generic: bool) -> Polynomial {
    let syz = syzygy222();
    if generic {
        syz.residual
    } else {
        let ghz = Hypermatrix::from_kets(Shape::new(2, 2, 2).unwrap(), &[(0, 0, 0), (1, 1, 1)]);
        residual_at(&syz.lambda, &ghz).unwrap()
    }
}

/// Combine numerically computed covariants of `h` with the given constants.
pub fn residual_at(lambda: &[Rational; 3], h: &Hypermatrix) -> Result<Polynomial, Error> {
    let cov = covariants222(h)?;
    let c2 = cov.c.mul(&cov.c);
    let bbb = cov.b_x.mul(&cov.b_y).mul(&cov.b_z);
    let da2 = cov.a.mul(&cov.a).scale(&cov.delta);
    Ok(c2
        .scale(&lambda[0])
        .add(&bbb.scale(&lambda[1]))
        .add(&da2.scale(&lambda[2])))
}

/// Bindings of the symbolic coefficient variables to a state's entries.
pub fn a_bindings(h: &Hypermatrix) -> std::collections::BTreeMap<VariableId, Rational> {
    h.entries()
        .iter()
        .enumerate()
        .map(|(i, v)| (VariableId::plain(Group::A, i as u8), v.clone()))
        .collect()
}

fn cross3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot3(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Scale to coprime integer entries with positive first nonzero entry.
fn normalize3(v: [Rational; 3]) -> [Rational; 3] {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed};
    let mut lcm = BigInt::one();
    for r in &v {
        let d = r.denom();
        lcm = &lcm / lcm.gcd(d) * d;
    }
    let ints: Vec<BigInt> = v.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let mut g = BigInt::zero();
    for i in &ints {
        g = g.gcd(i);
    }
    let lead_negative = ints.iter().find(|i| !i.is_zero()).map(|i| i.is_negative()).unwrap_or(false);
    let sign = if lead_negative { -BigInt::one() } else { BigInt::one() };
    let scaled: Vec<Rational> = ints
        .into_iter()
        .map(|i| Rational::from_integer(i * &sign / &g))
        .collect();
    [scaled[0].clone(), scaled[1].clone(), scaled[2].clone()]
}
