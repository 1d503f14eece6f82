//! The 2x2x3 covariant/concomitant system and the eight-orbit classifier.
//!
//! The covariant battery alone (B, C, D_x, D_y, Delta) famously fails to
//! separate two triples of orbits; the classifier therefore uses the extended
//! vector <[B],[B_xzeta],[B_yzeta],[C],[Delta],[D_zeta]> with the ternary
//! contravariant variable zeta. Both vectors are exposed: `v_vector223`
//! reproduces the documented non-separation, `classify223` separates fully.

use num_traits::Zero;

use crate::cayley::{second_derivative_matrix, transvect, OmegaSpec, PlanStep, TransvectionPlan};
use crate::conformance::{diff_column, CandidateDoc, ConcomitantEntry, ConformanceReport, PlanDoc};
use crate::error::Error;
use crate::forms::{ground_form, Hypermatrix};
use crate::nullity::NullityVector;
use crate::orbitgeom::{registry223, OrbitRecord};
use crate::polyalgebra::{det_poly, CopyTag, Group, Monomial, Polynomial, Rational, VariableId};

/// Slot names of the separating vector (Table order).
pub const SCHEMA_W: &[&str] = &["B", "B_xzeta", "B_yzeta", "C", "Delta", "D_zeta"];

/// Slot names of the covariant-only vector.
pub const SCHEMA_V: &[&str] = &["B", "C", "D_x", "D_y", "Delta"];

/// Separating patterns of the eight orbits, top orbit first.
const TABLE_W: &[(&str, &str)] = &[
    ("O_VIII", "111111"),
    ("O_VII", "111101"),
    ("O_VI", "111001"),
    ("O_V", "111000"),
    ("O_IV", "010000"),
    ("O_III", "001000"),
    ("O_II", "100000"),
    ("O_I", "000000"),
];

/// Covariant-only patterns; {O_VI, O_V, O_II} and {O_IV, O_III, O_I} collide.
const TABLE_V: &[(&str, &str)] = &[
    ("O_VIII", "11111"),
    ("O_VII", "11110"),
    ("O_VI", "10000"),
    ("O_V", "10000"),
    ("O_IV", "00000"),
    ("O_III", "00000"),
    ("O_II", "10000"),
    ("O_I", "00000"),
];

/// The 2x2x3 concomitants of a concrete state.
#[derive(Debug, Clone)]
pub struct Cov223 {
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
    pub d_x: Polynomial,
    pub d_y: Polynomial,
    pub delta: Rational,
    pub b_xzeta: Polynomial,
    pub b_yzeta: Polynomial,
    pub d_zeta: Polynomial,
}

impl Cov223 {
    pub fn w_vector(&self) -> NullityVector {
        NullityVector::new(
            SCHEMA_W,
            vec![
                !self.b.is_zero(),
                !self.b_xzeta.is_zero(),
                !self.b_yzeta.is_zero(),
                !self.c.is_zero(),
                !self.delta.is_zero(),
                !self.d_zeta.is_zero(),
            ],
        )
    }

    pub fn v_vector(&self) -> NullityVector {
        NullityVector::new(
            SCHEMA_V,
            vec![
                !self.b.is_zero(),
                !self.c.is_zero(),
                !self.d_x.is_zero(),
                !self.d_y.is_zero(),
                !self.delta.is_zero(),
            ],
        )
    }
}

fn check_input(h: &Hypermatrix) -> Result<(), Error> {
    if h.shape().dims() != [2, 2, 3] {
        return Err(Error::UnsupportedShape(h.shape().dims()));
    }
    if h.is_zero() {
        return Err(Error::ZeroState);
    }
    Ok(())
}

/// The pairing form P_zeta = z0 zeta0 + z1 zeta1 + z2 zeta2.
pub(crate) fn pairing_form(cov: Group, contra: Group, arity: u8) -> Polynomial {
    let mut p = Polynomial::zero();
    for i in 0..arity {
        p = p.add(&Polynomial::term(
            Monomial::from_pairs([
                (VariableId::plain(cov, i), 1),
                (VariableId::plain(contra, i), 1),
            ]),
            Rational::from_integer(1.into()),
        ));
    }
    p
}

/// The 4x4 determinant defining the bilinear covariant C: the three
/// coefficient slices bordered by the row (x1 y1, -x0 y1, -x1 y0, x0 y0).
fn c_by_determinant(h: &Hypermatrix) -> Polynomial {
    let a = |i: usize, j: usize, k: usize| Polynomial::constant(h.get(i, j, k).clone());
    let x = |i: u8| Polynomial::var(VariableId::plain(Group::X, i));
    let y = |i: u8| Polynomial::var(VariableId::plain(Group::Y, i));
    let mut rows: Vec<Vec<Polynomial>> = (0..3)
        .map(|k| vec![a(0, 0, k), a(1, 0, k), a(0, 1, k), a(1, 1, k)])
        .collect();
    rows.push(vec![
        x(1).mul(&y(1)),
        x(0).mul(&y(1)).neg(),
        x(1).mul(&y(0)).neg(),
        x(0).mul(&y(0)),
    ]);
    det_poly(&rows).unwrap()
}

/// Independent closed form for C: the sum over the symmetric group on the
/// three slice indices. The permutation sum carries the determinant signs and
/// the (i,j) term carries (-1)^(j+1); this is the signed reading that agrees
/// with the bordered 4x4 determinant (the unsigned literal sum differs from
/// it by the reflection y0 -> -y0).
pub fn c_closed_form(h: &Hypermatrix) -> Polynomial {
    const PERMS: [(i64, [usize; 3]); 6] = [
        (1, [0, 1, 2]),
        (-1, [0, 2, 1]),
        (-1, [1, 0, 2]),
        (1, [1, 2, 0]),
        (1, [2, 0, 1]),
        (-1, [2, 1, 0]),
    ];
    let mut c = Polynomial::zero();
    for i in 0..2usize {
        for j in 0..2usize {
            let mut coeff = Rational::zero();
            for (sign, p) in PERMS {
                let t = h.get(i, j, p[0])
                    * &(h.get(0, 0, p[1]) * h.get(1, 1, p[2])
                        - h.get(1, 0, p[1]) * h.get(0, 1, p[2]));
                coeff += t * crate::polyalgebra::rat(sign);
            }
            if j == 0 {
                coeff = -coeff;
            }
            c = c.add(&Polynomial::term(
                Monomial::from_pairs([
                    (VariableId::plain(Group::X, i as u8), 1),
                    (VariableId::plain(Group::Y, j as u8), 1),
                ]),
                coeff,
            ));
        }
    }
    c
}

/// Transvection plans for the zeta concomitants. The printed index triples do
/// not line up with the concomitant names; the plans below are the candidates
/// selected by matching the vanishing columns against the orbit table (see
/// `conformance_report`).
mod plans {
    use super::*;

    pub fn b_xzeta(a: &Polynomial, pz: &Polynomial) -> TransvectionPlan {
        TransvectionPlan::new(
            vec![a.tagged(CopyTag::P1), a.tagged(CopyTag::P2), pz.tagged(CopyTag::P3)],
            vec![
                PlanStep::Omega(OmegaSpec::binary(Group::Y, CopyTag::P1, CopyTag::P2, 1)),
                PlanStep::Omega(OmegaSpec::ternary(
                    Group::Z,
                    CopyTag::P1,
                    CopyTag::P2,
                    CopyTag::P3,
                    1,
                )),
            ],
        )
    }

    pub fn b_yzeta(a: &Polynomial, pz: &Polynomial) -> TransvectionPlan {
        TransvectionPlan::new(
            vec![a.tagged(CopyTag::P1), a.tagged(CopyTag::P2), pz.tagged(CopyTag::P3)],
            vec![
                PlanStep::Omega(OmegaSpec::binary(Group::X, CopyTag::P1, CopyTag::P2, 1)),
                PlanStep::Omega(OmegaSpec::ternary(
                    Group::Z,
                    CopyTag::P1,
                    CopyTag::P2,
                    CopyTag::P3,
                    1,
                )),
            ],
        )
    }

    /// D_zeta: the bordered z-operator applied twice across the two copies of
    /// B, the pairing form acting only as the zeta carrier.
    pub fn d_zeta(b: &Polynomial) -> TransvectionPlan {
        TransvectionPlan::new(
            vec![b.tagged(CopyTag::P1), b.tagged(CopyTag::P2)],
            vec![PlanStep::Omega(
                OmegaSpec::bordered(Group::Z, CopyTag::P1, CopyTag::P2, 2).unwrap(),
            )],
        )
    }

    /// Rejected candidate: a single ternary omega across B, B and P_zeta.
    pub fn d_zeta_once(b: &Polynomial, pz: &Polynomial) -> TransvectionPlan {
        TransvectionPlan::new(
            vec![b.tagged(CopyTag::P1), b.tagged(CopyTag::P2), pz.tagged(CopyTag::P3)],
            vec![PlanStep::Omega(OmegaSpec::ternary(
                Group::Z,
                CopyTag::P1,
                CopyTag::P2,
                CopyTag::P3,
                1,
            ))],
        )
    }

    /// Rejected candidate: the literal binary x-omega squared (B carries no x).
    pub fn d_zeta_x2(b: &Polynomial, pz: &Polynomial) -> TransvectionPlan {
        TransvectionPlan::new(
            vec![b.tagged(CopyTag::P1), b.tagged(CopyTag::P2), pz.tagged(CopyTag::P3)],
            vec![PlanStep::Omega(OmegaSpec::binary(Group::X, CopyTag::P1, CopyTag::P2, 2))],
        )
    }

    /// Rejected candidate: the ternary z-omega squared over three copies
    /// (over-differentiates the degree-1 pairing factor).
    pub fn d_zeta_z2(b: &Polynomial, pz: &Polynomial) -> TransvectionPlan {
        TransvectionPlan::new(
            vec![b.tagged(CopyTag::P1), b.tagged(CopyTag::P2), pz.tagged(CopyTag::P3)],
            vec![PlanStep::Omega(OmegaSpec::ternary(
                Group::Z,
                CopyTag::P1,
                CopyTag::P2,
                CopyTag::P3,
                2,
            ))],
        )
    }

    /// Rejected candidate for B_xzeta: the literal reading with the x-omega.
    pub fn b_xzeta_literal(a: &Polynomial, pz: &Polynomial) -> TransvectionPlan {
        b_yzeta(a, pz)
    }
}

/// Compute all nine quantities for a nonzero 2x2x3 state.
pub fn covariants223(h: &Hypermatrix) -> Result<Cov223, Error> {
    check_input(h)?;
    let a = ground_form(h);
    let b = det_poly(&second_derivative_matrix(&a, Group::X, 2, Group::Y, 2)).unwrap();
    let c = c_by_determinant(h);
    let delta = det_poly(&second_derivative_matrix(&c, Group::X, 2, Group::Y, 2))
        .unwrap()
        .as_constant()
        .expect("Delta is an invariant");
    // D_x = (A, C)_{0,1} and D_y = (A, C)_{1,0}: one binary transvection on
    // the group erased from the result's name.
    let d_x = transvect(&TransvectionPlan::new(
        vec![a.tagged(CopyTag::P1), c.tagged(CopyTag::P2)],
        vec![PlanStep::Omega(OmegaSpec::binary(Group::Y, CopyTag::P1, CopyTag::P2, 1))],
    ))?;
    let d_y = transvect(&TransvectionPlan::new(
        vec![a.tagged(CopyTag::P1), c.tagged(CopyTag::P2)],
        vec![PlanStep::Omega(OmegaSpec::binary(Group::X, CopyTag::P1, CopyTag::P2, 1))],
    ))?;
    let pz = pairing_form(Group::Z, Group::Zeta, 3);
    let b_xzeta = transvect(&plans::b_xzeta(&a, &pz))?;
    let b_yzeta = transvect(&plans::b_yzeta(&a, &pz))?;
    let d_zeta = transvect(&plans::d_zeta(&b))?;
    Ok(Cov223 { a, b, c, d_x, d_y, delta, b_xzeta, b_yzeta, d_zeta })
}

/// Classify a nonzero 2x2x3 state by the separating vector.
pub fn classify223(h: &Hypermatrix) -> Result<&'static OrbitRecord, Error> {
    let cov = covariants223(h)?;
    crate::classify222::lookup_in(TABLE_W, registry223(), SCHEMA_W, &cov.w_vector())
}

/// The covariant-only vector, which does not separate {O_VI, O_V, O_II} or
/// {O_IV, O_III, O_I}.
pub fn v_vector223(h: &Hypermatrix) -> Result<NullityVector, Error> {
    Ok(covariants223(h)?.v_vector())
}

/// Expected separating pattern for an orbit label.
pub fn expected_w(label: &str) -> Option<NullityVector> {
    TABLE_W
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, p)| NullityVector::from_pattern(SCHEMA_W, p))
}

/// Expected covariant-only pattern for an orbit label.
pub fn expected_v(label: &str) -> Option<NullityVector> {
    TABLE_V
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, p)| NullityVector::from_pattern(SCHEMA_V, p))
}

/// Expected column of one concomitant over the orbits, top orbit first.
fn expected_column(slot: usize) -> Vec<u8> {
    TABLE_W
        .iter()
        .map(|(_, p)| p.as_bytes()[slot] - b'0')
        .collect()
}

/// Build the conformance report: every classifier concomitant, its plan, its
/// computed vanishing column over the eight representatives and the candidate
/// plans tried for the ambiguous definitions.
pub fn conformance_report() -> ConformanceReport {
    let regs = registry223();
    let labels: Vec<&'static str> = regs.iter().map(|r| r.label).collect();
    let covs: Vec<Cov223> = regs
        .iter()
        .map(|r| covariants223(&r.representative).unwrap())
        .collect();

    let column = |f: &dyn Fn(&Cov223) -> bool| -> Vec<u8> {
        covs.iter().map(|c| f(c) as u8).collect()
    };

    let mut entries = Vec::new();
    let mut push_simple = |name: &str, slot: usize, doc: PlanDoc, col: Vec<u8>| {
        let expected = expected_column(slot);
        let deviations = diff_column(name, &labels, &col, &expected);
        entries.push(ConcomitantEntry {
            name: name.to_string(),
            chosen: doc,
            matches: col == expected,
            column: col,
            expected,
            candidates: Vec::new(),
            deviations,
        });
    };

    push_simple(
        "B",
        0,
        PlanDoc::determinantal("det(d^2 A / dx_i dy_j), a quadratic form in z"),
        column(&|c| !c.b.is_zero()),
    );
    push_simple(
        "C",
        3,
        PlanDoc::determinantal(
            "4x4 determinant of the three coefficient slices bordered by (x1y1, -x0y1, -x1y0, x0y0)",
        ),
        column(&|c| !c.c.is_zero()),
    );
    push_simple(
        "Delta",
        4,
        PlanDoc::determinantal("det(d^2 C / dx_i dy_j)"),
        column(&|c| !c.delta.is_zero()),
    );

    // B_xzeta and B_yzeta: the printed subscripts conflict with the names;
    // both readings are evaluated and the table decides.
    let pz = pairing_form(Group::Z, Group::Zeta, 3);
    let bxz_doc = PlanDoc::plan(
        "tr Omega_y Omega_z A' A'' P_zeta'''",
        &["A in copy 1", "A in copy 2", "P_zeta in copy 3"],
        plans::b_xzeta(&Polynomial::zero(), &pz).steps,
    );
    let bxz_alt_doc = PlanDoc::plan(
        "tr Omega_x Omega_z A' A'' P_zeta'''",
        &["A in copy 1", "A in copy 2", "P_zeta in copy 3"],
        plans::b_xzeta_literal(&Polynomial::zero(), &pz).steps,
    );
    let col_oy = column(&|c| !c.b_xzeta.is_zero());
    let col_ox = column(&|c| !c.b_yzeta.is_zero());

    for (name, slot, chosen_doc, chosen_col, alt_doc, alt_col) in [
        ("B_xzeta", 1usize, bxz_doc.clone(), col_oy.clone(), bxz_alt_doc.clone(), col_ox.clone()),
        ("B_yzeta", 2usize, bxz_alt_doc, col_ox, bxz_doc, col_oy),
    ] {
        let expected = expected_column(slot);
        let deviations = diff_column(name, &labels, &chosen_col, &expected);
        let alt_matches = alt_col == expected;
        entries.push(ConcomitantEntry {
            name: name.to_string(),
            matches: chosen_col == expected,
            candidates: vec![
                CandidateDoc {
                    name: format!("{name}: omega on the group absent from the name"),
                    plan: chosen_doc.clone(),
                    column: chosen_col.clone(),
                    selected: true,
                    note: "column matches the orbit table".into(),
                },
                CandidateDoc {
                    name: format!("{name}: literal printed index triple"),
                    plan: alt_doc,
                    column: alt_col,
                    selected: false,
                    note: if alt_matches {
                        "also matches (degenerate case)".into()
                    } else {
                        "column contradicts the orbit table".into()
                    },
                },
            ],
            chosen: chosen_doc,
            column: chosen_col,
            expected,
            deviations,
        });
    }

    // D_zeta: enumerate the structurally sensible readings.
    let dz_expected = expected_column(5);
    let zero_b = Polynomial::zero();
    let chosen_doc = PlanDoc::plan(
        "tr [Omega_z bordered by zeta over copies 1,2]^2 B' B''",
        &["B in copy 1", "B in copy 2"],
        plans::d_zeta(&zero_b).steps,
    );
    let cand_defs: Vec<(String, PlanDoc, Box<dyn Fn(&Cov223, &Hypermatrix) -> bool>)> = vec![
        (
            "bordered omega_z squared over the two B copies (P_zeta as zeta carrier)".into(),
            chosen_doc.clone(),
            Box::new(|c: &Cov223, _h: &Hypermatrix| !c.d_zeta.is_zero()),
        ),
        (
            "single ternary omega_z over B, B, P_zeta".into(),
            PlanDoc::plan(
                "tr Omega_z B' B'' P_zeta'''",
                &["B in copy 1", "B in copy 2", "P_zeta in copy 3"],
                plans::d_zeta_once(&zero_b, &pz).steps,
            ),
            Box::new(|c: &Cov223, _h| {
                let pz = pairing_form(Group::Z, Group::Zeta, 3);
                !transvect(&plans::d_zeta_once(&c.b, &pz)).unwrap().is_zero()
            }),
        ),
        (
            "literal omega_x squared (annihilates: B has no x)".into(),
            PlanDoc::plan(
                "tr Omega_x^2 B' B'' P_zeta'''",
                &["B in copy 1", "B in copy 2", "P_zeta in copy 3"],
                plans::d_zeta_x2(&zero_b, &pz).steps,
            ),
            Box::new(|c: &Cov223, _h| {
                let pz = pairing_form(Group::Z, Group::Zeta, 3);
                !transvect(&plans::d_zeta_x2(&c.b, &pz)).unwrap().is_zero()
            }),
        ),
        (
            "literal omega_z squared over three copies (annihilates the pairing factor)".into(),
            PlanDoc::plan(
                "tr Omega_z^2 B' B'' P_zeta'''",
                &["B in copy 1", "B in copy 2", "P_zeta in copy 3"],
                plans::d_zeta_z2(&zero_b, &pz).steps,
            ),
            Box::new(|c: &Cov223, _h| {
                let pz = pairing_form(Group::Z, Group::Zeta, 3);
                !transvect(&plans::d_zeta_z2(&c.b, &pz)).unwrap().is_zero()
            }),
        ),
    ];
    let mut candidates = Vec::new();
    let mut chosen_col = Vec::new();
    for (i, (name, doc, eval)) in cand_defs.iter().enumerate() {
        let col: Vec<u8> = covs
            .iter()
            .zip(regs.iter())
            .map(|(c, r)| eval(c, &r.representative) as u8)
            .collect();
        let matches = col == dz_expected;
        if i == 0 {
            chosen_col = col.clone();
        }
        candidates.push(CandidateDoc {
            name: name.clone(),
            plan: doc.clone(),
            column: col,
            selected: i == 0,
            note: if matches {
                "column matches the orbit table".into()
            } else {
                "column contradicts the orbit table".into()
            },
        });
    }
    let deviations = diff_column("D_zeta", &labels, &chosen_col, &dz_expected);
    entries.push(ConcomitantEntry {
        name: "D_zeta".into(),
        chosen: chosen_doc,
        matches: chosen_col == dz_expected,
        column: chosen_col,
        expected: dz_expected,
        candidates,
        deviations,
    });

    ConformanceReport {
        format: [2, 2, 3],
        orbit_order: labels,
        concomitants: entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Shape;
    use crate::forms::{act, random_slocc};
    use crate::polyalgebra::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s() -> Shape {
        Shape::new(2, 2, 3).unwrap()
    }

    #[test]
    fn covariant_spot_values() {
        // top orbit: Delta nonzero
        let o8 = Hypermatrix::from_kets(s(), &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 2)]);
        let cov = covariants223(&o8).unwrap();
        assert!(!cov.delta.is_zero());

        // O_IV: B vanishes, B_xzeta survives, B_yzeta vanishes
        let o4 = Hypermatrix::from_kets(s(), &[(0, 0, 0), (0, 1, 1)]);
        let cov = covariants223(&o4).unwrap();
        assert!(cov.b.is_zero());
        assert!(!cov.b_xzeta.is_zero());
        assert!(cov.b_yzeta.is_zero());
        assert_eq!(cov.w_vector(), expected_w("O_IV").unwrap());

        // separable state: everything vanishes
        let o1 = Hypermatrix::from_kets(s(), &[(0, 0, 0)]);
        let cov = covariants223(&o1).unwrap();
        assert_eq!(cov.w_vector(), expected_w("O_I").unwrap());
        assert!(cov.d_x.is_zero() && cov.d_y.is_zero());
    }

    #[test]
    fn classify_spot_cases() {
        let h = Hypermatrix::from_kets(s(), &[(0, 0, 0), (1, 1, 1)]);
        let cov = covariants223(&h).unwrap();
        assert_eq!(cov.w_vector().as_u8(), vec![1, 1, 1, 0, 0, 1]);
        assert_eq!(classify223(&h).unwrap().label, "O_VI");

        let h = Hypermatrix::from_kets(s(), &[(0, 0, 0), (0, 1, 1), (1, 0, 1)]);
        assert_eq!(covariants223(&h).unwrap().w_vector().as_u8(), vec![1, 1, 1, 0, 0, 0]);
        assert_eq!(classify223(&h).unwrap().label, "O_V");

        let h = Hypermatrix::from_kets(s(), &[(0, 0, 0), (1, 1, 0)]);
        assert_eq!(covariants223(&h).unwrap().w_vector().as_u8(), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(classify223(&h).unwrap().label, "O_II");
    }

    #[test]
    fn registry_representatives_classify_to_their_labels() {
        for r in registry223() {
            assert_eq!(classify223(&r.representative).unwrap().label, r.label);
            assert_eq!(
                covariants223(&r.representative).unwrap().w_vector(),
                expected_w(r.label).unwrap(),
                "w vector mismatch on {}",
                r.label
            );
        }
    }

    #[test]
    fn covariant_vector_reproduces_documented_non_separation() {
        for r in registry223() {
            assert_eq!(
                v_vector223(&r.representative).unwrap(),
                expected_v(r.label).unwrap(),
                "v vector mismatch on {}",
                r.label
            );
        }
        // the collisions
        let v6 = v_vector223(&crate::orbitgeom::record(s(), "O_VI").unwrap().representative)
            .unwrap();
        let v2 = v_vector223(&crate::orbitgeom::record(s(), "O_II").unwrap().representative)
            .unwrap();
        assert_eq!(v6, v2);
        assert_eq!(v6.as_u8(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn determinant_and_closed_form_for_c_are_proportional() {
        let mut rng = ChaCha8Rng::seed_from_u64(223);
        let mut constant: Option<Rational> = None;
        let mut seen = 0;
        while seen < 20 {
            let entries: Vec<Rational> =
                (0..12).map(|_| rat(rng.gen_range(-4i64..=4))).collect();
            let h = Hypermatrix::new(s(), entries).unwrap();
            let det_route = c_by_determinant(&h);
            let closed = c_closed_form(&h);
            if det_route.is_zero() {
                assert!(closed.is_zero());
                continue;
            }
            seen += 1;
            let (m, c0) = det_route.iter().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
            let k = &closed.coefficient(&m) / &c0;
            assert!(!k.is_zero());
            assert_eq!(closed, det_route.scale(&k));
            match &constant {
                None => constant = Some(k),
                Some(expect) => assert_eq!(&k, expect),
            }
        }
    }

    #[test]
    fn delta_vanishes_exactly_below_o_vii() {
        for r in registry223() {
            let cov = covariants223(&r.representative).unwrap();
            let top = r.label == "O_VIII";
            assert_eq!(!cov.delta.is_zero(), top, "orbit {}", r.label);
        }
    }

    #[test]
    fn slocc_images_keep_labels() {
        for r in registry223() {
            for seed in 0..200 {
                let g = random_slocc(s(), seed * 53 + 11, 2);
                let img = act(&g, &r.representative).unwrap();
                assert_eq!(classify223(&img).unwrap().label, r.label, "orbit {}", r.label);
            }
        }
    }

    #[test]
    fn conformance_report_is_clean() {
        let report = conformance_report();
        assert_eq!(report.deviation_count(), 0);
        assert!(report.all_match());
        // the rejected D_zeta candidates do not match the table
        let dz = report.concomitants.iter().find(|c| c.name == "D_zeta").unwrap();
        assert_eq!(dz.candidates.len(), 4);
        assert!(dz.candidates[0].selected);
        for cand in &dz.candidates[1..] {
            assert_ne!(cand.column, dz.expected, "candidate `{}` should fail", cand.name);
        }
        // the literal index readings for the zeta quadratics fail too
        let bx = report.concomitants.iter().find(|c| c.name == "B_xzeta").unwrap();
        assert_ne!(bx.candidates[1].column, bx.expected);
    }

    #[test]
    fn zero_and_shape_errors() {
        assert!(matches!(
            classify223(&Hypermatrix::zero(s())),
            Err(Error::ZeroState)
        ));
        let h = Hypermatrix::from_kets(Shape::new(2, 2, 2).unwrap(), &[(0, 0, 0)]);
        assert!(matches!(classify223(&h), Err(Error::UnsupportedShape(_))));
    }
}
