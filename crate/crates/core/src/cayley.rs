//! Cayley omega operators and transvection plans.
//!
//! An omega operator is the determinantal differential operator over primed
//! copies of one variable group: 2x2 for binary groups, 3x3 for ternary ones.
//! A two-copy "bordered" form replaces the missing third column by the paired
//! (contravariant or covariant) variable, which is the classical way to
//! transvect two ternary factors. A transvection is a product of factors in
//! distinct copies, a sequence of omega applications and the final trace that
//! erases every copy tag.

use crate::error::Error;
use crate::polyalgebra::{rat, CopyTag, Group, Polynomial, VariableId};

/// One omega operator raised to a power.
///
/// `produces: None` is the plain determinantal operator over 2 or 3 copies.
/// `produces: Some(g)` is the bordered two-copy form on a ternary group whose
/// third column emits the paired variable of group `g`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct OmegaSpec {
    pub group: Group,
    pub copies: Vec<CopyTag>,
    pub power: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub produces: Option<Group>,
}

impl OmegaSpec {
    pub fn binary(group: Group, c1: CopyTag, c2: CopyTag, power: u32) -> Self {
        OmegaSpec { group, copies: vec![c1, c2], power, produces: None }
    }

    pub fn ternary(group: Group, c1: CopyTag, c2: CopyTag, c3: CopyTag, power: u32) -> Self {
        OmegaSpec { group, copies: vec![c1, c2, c3], power, produces: None }
    }

    pub fn bordered(group: Group, c1: CopyTag, c2: CopyTag, power: u32) -> Result<Self, Error> {
        let out = pairing(group).ok_or_else(|| {
            Error::Plan(format!("group {:?} has no paired variable group", group))
        })?;
        Ok(OmegaSpec { group, copies: vec![c1, c2], power, produces: Some(out) })
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.copies.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.copies[i] == self.copies[j] {
                    return Err(Error::Plan("omega copies must be distinct".into()));
                }
            }
        }
        match self.produces {
            None if n == 2 || n == 3 => Ok(()),
            Some(out) if n == 2 => {
                if pairing(self.group) == Some(out) {
                    Ok(())
                } else {
                    Err(Error::Plan(format!(
                        "bordered omega on {:?} cannot produce {:?}",
                        self.group, out
                    )))
                }
            }
            _ => Err(Error::Plan(format!(
                "omega over {n} copies is not supported"
            ))),
        }
    }

    /// Expand one application into signed derivative assignments. Each term is
    /// (sign, derivatives as (variable index, copy), optional emitted index).
    fn terms(&self) -> Vec<(i64, Vec<(u8, CopyTag)>, Option<u8>)> {
        match (self.copies.len(), self.produces) {
            (2, None) => vec![
                (1, vec![(0, self.copies[0]), (1, self.copies[1])], None),
                (-1, vec![(1, self.copies[0]), (0, self.copies[1])], None),
            ],
            (3, None) => PERMS3
                .iter()
                .map(|&(sign, [i, j, k])| {
                    (
                        sign,
                        vec![(i, self.copies[0]), (j, self.copies[1]), (k, self.copies[2])],
                        None,
                    )
                })
                .collect(),
            (2, Some(_)) => PERMS3
                .iter()
                .map(|&(sign, [i, j, k])| {
                    (sign, vec![(i, self.copies[0]), (j, self.copies[1])], Some(k))
                })
                .collect(),
            _ => unreachable!("validated"),
        }
    }
}

/// The six permutations of {0,1,2} with signs.
const PERMS3: [(i64, [u8; 3]); 6] = [
    (1, [0, 1, 2]),
    (-1, [0, 2, 1]),
    (-1, [1, 0, 2]),
    (1, [1, 2, 0]),
    (1, [2, 0, 1]),
    (-1, [2, 1, 0]),
];

/// The contravariant/covariant pairing between ternary groups.
fn pairing(group: Group) -> Option<Group> {
    match group {
        Group::Z => Some(Group::Zeta),
        Group::Zeta => Some(Group::Z),
        Group::Y => Some(Group::Eta),
        Group::Eta => Some(Group::Y),
        _ => None,
    }
}

/// Apply an omega operator directly to one polynomial.
pub fn omega_apply(spec: &OmegaSpec, p: &Polynomial) -> Result<Polynomial, Error> {
    spec.validate()?;
    let mut cur = p.clone();
    for _ in 0..spec.power {
        let mut next = Polynomial::zero();
        for (sign, derivs, emitted) in spec.terms() {
            let mut term = cur.clone();
            for (idx, copy) in derivs {
                term = term.derive(VariableId::new(spec.group, idx, copy));
                if term.is_zero() {
                    break;
                }
            }
            if term.is_zero() {
                continue;
            }
            if let Some(k) = emitted {
                let out = self_or_err(spec)?;
                term = term.mul(&Polynomial::var(VariableId::plain(out, k)));
            }
            next = next.add(&term.scale(&rat(sign)));
        }
        cur = next;
    }
    Ok(cur)
}

fn self_or_err(spec: &OmegaSpec) -> Result<Group, Error> {
    spec.produces
        .ok_or_else(|| Error::Plan("missing output group".into()))
}

/// One pipeline step of a transvection plan.
#[derive(Debug, Clone, serde::Serialize)]
pub enum PlanStep {
    Omega(OmegaSpec),
    /// Mid-pipeline relabel of one group's copy tag (a partial trace).
    Relabel { group: Group, from: CopyTag, to: CopyTag },
}

/// A transvection, written out as data: factors already expressed in their
/// designated copies, the omega/relabel pipeline, and the implicit final
/// trace. Every copy a step differentiates must live in exactly one factor.
#[derive(Debug, Clone)]
pub struct TransvectionPlan {
    pub factors: Vec<Polynomial>,
    pub steps: Vec<PlanStep>,
}

impl TransvectionPlan {
    pub fn new(factors: Vec<Polynomial>, steps: Vec<PlanStep>) -> Self {
        TransvectionPlan { factors, steps }
    }
}

/// One summand of the expanded omega pipeline: the sign, the factors that
/// derivatives have rewritten (indexed into the plan's factor list) and any
/// variables the bordered operators emitted.
struct Branch {
    sign: i64,
    changed: std::collections::BTreeMap<usize, Polynomial>,
    emitted: Vec<VariableId>,
}

impl Branch {
    fn factor<'a>(&'a self, originals: &'a [Polynomial], i: usize) -> &'a Polynomial {
        self.changed.get(&i).unwrap_or(&originals[i])
    }
}

/// Execute a transvection plan.
///
/// Derivatives are routed factor-wise: since each (group, copy) pair lives in
/// a single factor, a product-rule expansion never mixes factors, so the full
/// product is never expanded. Branches carry the signed combinations that the
/// omega determinants generate and store only the factors a derivative has
/// touched; factors left untouched by every branch are multiplied in once at
/// the end, after the trace.
pub fn transvect(plan: &TransvectionPlan) -> Result<Polynomial, Error> {
    for step in &plan.steps {
        if let PlanStep::Omega(spec) = step {
            spec.validate()?;
        }
    }
    let mut originals = plan.factors.clone();
    let mut branches = vec![Branch { sign: 1, changed: Default::default(), emitted: Vec::new() }];
    for step in &plan.steps {
        match step {
            PlanStep::Relabel { group, from, to } => {
                let relabel = |p: &Polynomial| {
                    p.retag(|g, c| if g == *group && c == *from { *to } else { c })
                };
                for f in originals.iter_mut() {
                    *f = relabel(f);
                }
                for b in branches.iter_mut() {
                    for (_, f) in b.changed.iter_mut() {
                        *f = relabel(f);
                    }
                }
            }
            PlanStep::Omega(spec) => {
                for _ in 0..spec.power {
                    branches = omega_on_branches(branches, &originals, spec)?;
                    if branches.is_empty() {
                        return Ok(Polynomial::zero());
                    }
                }
            }
        }
    }

    // Factors untouched in every branch divide out of the sum.
    let mut touched: std::collections::BTreeSet<usize> = Default::default();
    for b in &branches {
        touched.extend(b.changed.keys().copied());
    }
    let mut sum = Polynomial::zero();
    for b in &branches {
        let mut parts: Vec<Polynomial> = touched
            .iter()
            .map(|&i| b.factor(&originals, i).trace())
            .collect();
        for v in &b.emitted {
            parts.push(Polynomial::var(*v));
        }
        parts.sort_by_key(|f| f.num_terms());
        let mut prod = Polynomial::constant(rat(b.sign));
        for f in &parts {
            if f.is_zero() {
                prod = Polynomial::zero();
                break;
            }
            prod = prod.mul(f);
        }
        sum = sum.add(&prod);
    }
    let mut out = sum;
    for (i, f) in originals.iter().enumerate() {
        if !touched.contains(&i) {
            out = out.mul(&f.trace());
        }
    }
    Ok(out)
}

fn omega_on_branches(
    branches: Vec<Branch>,
    originals: &[Polynomial],
    spec: &OmegaSpec,
) -> Result<Vec<Branch>, Error> {
    let terms = spec.terms();
    let mut out = Vec::new();
    for branch in &branches {
        'term: for (tsign, derivs, emitted) in &terms {
            let mut changed = branch.changed.clone();
            for &(idx, copy) in derivs {
                let mut owner = None;
                for fi in 0..originals.len() {
                    let content = changed.get(&fi).unwrap_or(&originals[fi]);
                    if content.mentions_copy(spec.group, copy) {
                        if owner.is_some() {
                            return Err(Error::Plan(format!(
                                "copy {:?} of group {:?} appears in more than one factor",
                                copy, spec.group
                            )));
                        }
                        owner = Some(fi);
                    }
                }
                let Some(fi) = owner else { continue 'term };
                let content = changed.get(&fi).unwrap_or(&originals[fi]);
                let d = content.derive(VariableId::new(spec.group, idx, copy));
                if d.is_zero() {
                    continue 'term;
                }
                changed.insert(fi, d);
            }
            let mut emitted_vars = branch.emitted.clone();
            if let Some(k) = emitted {
                let outgroup = self_or_err(spec)?;
                emitted_vars.push(VariableId::plain(outgroup, *k));
            }
            out.push(Branch { sign: branch.sign * tsign, changed, emitted: emitted_vars });
        }
    }
    Ok(out)
}

/// 2x2 Jacobian determinant of two polynomials in the plain variables of a
/// binary group.
pub fn jacobian2(f: &Polynomial, g: &Polynomial, group: Group) -> Polynomial {
    let v0 = VariableId::plain(group, 0);
    let v1 = VariableId::plain(group, 1);
    f.derive(v0).mul(&g.derive(v1)).sub(&f.derive(v1).mul(&g.derive(v0)))
}

/// Matrix of mixed second derivatives d^2 p / (d row_i d col_j) over plain
/// variables.
pub fn second_derivative_matrix(
    p: &Polynomial,
    row_group: Group,
    nrows: usize,
    col_group: Group,
    ncols: usize,
) -> Vec<Vec<Polynomial>> {
    (0..nrows)
        .map(|i| {
            let di = p.derive(VariableId::plain(row_group, i as u8));
            (0..ncols)
                .map(|j| di.derive(VariableId::plain(col_group, j as u8)))
                .collect()
        })
        .collect()
}

/// Discriminant of a binary quadratic `q = alpha v0^2 + beta v0 v1 + gamma v1^2`
/// in the plain variables of `group`: beta^2 - 4 alpha gamma. The coefficients
/// may themselves be polynomials in other variables.
pub fn discriminant_binary_quadratic(q: &Polynomial, group: Group) -> Polynomial {
    let v0 = VariableId::plain(group, 0);
    let v1 = VariableId::plain(group, 1);
    let parts = q.coefficients_in(&[v0, v1]);
    let get = |e0: u32, e1: u32| {
        let m = crate::polyalgebra::Monomial::from_pairs([(v0, e0), (v1, e1)]);
        parts.get(&m).cloned().unwrap_or_else(Polynomial::zero)
    };
    let alpha = get(2, 0);
    let beta = get(1, 1);
    let gamma = get(0, 2);
    beta.mul(&beta).sub(&alpha.mul(&gamma).scale(&rat(4)))
}
