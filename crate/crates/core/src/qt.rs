//! Derivation-style coproducts from elements of A (x) A, the weighted
//! associative Yang-Baxter machinery, the induced Hopf-bimodule structure,
//! the vanishing-braiding theorem, and an exhaustive grid solver.

use crate::bialgebra::{check_coassociativity, Algebra, Coalgebra, WeightedInfBialgebra};
use crate::error::CoreError;
use crate::hopf::{braiding_tensor, check_bimodule, ActionData, BraidedObject, HopfBimoduleData};
use crate::report::{CheckReport, Violation};
use crate::scalar::Rat;
use crate::tensor::{StructTensor3, Tensor};

/// An element r of A (x) A over a unital algebra, together with a weight.
#[derive(Clone, Debug)]
pub struct RMatrix {
    alg: Algebra,
    r: Tensor,
    lambda: Rat,
}

impl RMatrix {
    pub fn new(alg: Algebra, r: Tensor, lambda: Rat) -> Result<Self, CoreError> {
        alg.require_unit()?;
        if r.arity() != 2 || r.spaces()[0] != *alg.space() || r.spaces()[1] != *alg.space() {
            return Err(CoreError::DimensionMismatch(
                "r must be an element of A (x) A".into(),
            ));
        }
        Ok(RMatrix { alg, r, lambda })
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn r(&self) -> &Tensor {
        &self.r
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    /// r with the unit inserted in the given slot of a triple product.
    /// 0 -> 1 (x) u (x) v, 1 -> u (x) 1 (x) v, 2 -> u (x) v (x) 1.
    pub fn padded(&self, unit_slot: usize) -> Result<Tensor, CoreError> {
        let unit = Tensor::from_vector(self.alg.require_unit()?);
        match unit_slot {
            0 => Ok(unit.tensor_product(&self.r)),
            1 => self.r.tensor_product(&unit).permute(&[0, 2, 1]),
            2 => Ok(self.r.tensor_product(&unit)),
            _ => Err(CoreError::DimensionMismatch("pad slot must be 0..3".into())),
        }
    }
}

/// Componentwise product of two elements of A (x) A (x) A.
pub fn triple_product(alg: &Algebra, s: &Tensor, t: &Tensor) -> Result<Tensor, CoreError> {
    let a = alg.space();
    let spaces = vec![a.clone(), a.clone(), a.clone()];
    if s.spaces() != spaces.as_slice() || t.spaces() != spaces.as_slice() {
        return Err(CoreError::DimensionMismatch(
            "triple product needs two elements of A (x) A (x) A".into(),
        ));
    }
    let mut out = Tensor::zero(spaces);
    for (is, vs) in s.entries() {
        for (it, vt) in t.entries() {
            let c = vs * vt;
            let p0 = alg.mu().map_basis(is[0], it[0])?;
            let p1 = alg.mu().map_basis(is[1], it[1])?;
            let p2 = alg.mu().map_basis(is[2], it[2])?;
            for (m, x) in p0.nonzero() {
                for (n, y) in p1.nonzero() {
                    for (p, z) in p2.nonzero() {
                        let mut v = &c * x;
                        v *= y.clone();
                        v *= z.clone();
                        out.add_entry(&[m, n, p], v)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Left module action of a basis element on the first leg of a triple tensor.
fn act_first_leg(alg: &Algebra, a: usize, w: &Tensor) -> Result<Tensor, CoreError> {
    let mut out = Tensor::zero(w.spaces().to_vec());
    for (idx, c) in w.entries() {
        let row = alg.mu().map_basis(a, idx[0])?;
        for (m, v) in row.nonzero() {
            out.add_entry(&[m, idx[1], idx[2]], c * v)?;
        }
    }
    Ok(out)
}

/// Right module action of a basis element on the last leg of a triple tensor.
fn act_last_leg(alg: &Algebra, w: &Tensor, a: usize) -> Result<Tensor, CoreError> {
    let mut out = Tensor::zero(w.spaces().to_vec());
    for (idx, c) in w.entries() {
        let row = alg.mu().map_basis(idx[2], a)?;
        for (m, v) in row.nonzero() {
            out.add_entry(&[idx[0], idx[1], m], c * v)?;
        }
    }
    Ok(out)
}

/// The derivation-style coproduct a -> a.r - r.a - lambda (a (x) 1), as a
/// comap structure tensor.
pub fn principal_derivation(rm: &RMatrix) -> Result<StructTensor3, CoreError> {
    let a = rm.alg().space();
    let unit = rm.alg().require_unit()?.clone();
    let mut delta = StructTensor3::zero_comap(a, a, a);
    for i in 0..a.dim() {
        for (idx, c) in rm.r().entries() {
            // e_i u (x) v
            let left = rm.alg().mu().map_basis(i, idx[0])?;
            for (m, v) in left.nonzero() {
                delta.add_entry(&[i, m, idx[1]], c * v)?;
            }
            // - u (x) v e_i
            let right = rm.alg().mu().map_basis(idx[1], i)?;
            for (m, v) in right.nonzero() {
                delta.add_entry(&[i, idx[0], m], -(c * v))?;
            }
        }
        if !rm.lambda().is_zero() {
            for (k, u) in unit.nonzero() {
                delta.add_entry(&[i, i, k], -(rm.lambda() * u))?;
            }
        }
    }
    Ok(delta)
}

/// The bialgebra (A, mu, derivation coproduct, lambda).
pub fn principal_bialgebra(rm: &RMatrix) -> Result<WeightedInfBialgebra, CoreError> {
    let delta = principal_derivation(rm)?;
    let coalg = Coalgebra::new(rm.alg().space().clone(), delta)?;
    WeightedInfBialgebra::new(rm.alg().clone(), coalg, rm.lambda().clone())
}

/// r13 r12 - r12 r23 + r23 r13 - lambda r13, an element of A (x) A (x) A.
pub fn wayb_residual(rm: &RMatrix) -> Result<Tensor, CoreError> {
    let alg = rm.alg();
    let r12 = rm.padded(2)?;
    let r13 = rm.padded(1)?;
    let r23 = rm.padded(0)?;
    let mut acc = triple_product(alg, &r13, &r12)?;
    acc = acc.sub(&triple_product(alg, &r12, &r23)?)?;
    acc = acc.add(&triple_product(alg, &r23, &r13)?)?;
    acc.sub(&r13.scaled(rm.lambda()))
}

pub fn is_wayb_solution(rm: &RMatrix) -> Result<bool, CoreError> {
    Ok(wayb_residual(rm)?.is_zero())
}

/// a.w = w.a for every basis a, for the two-sided action on A (x) A (x) A
/// that multiplies the outer legs.
pub fn check_a_invariance(alg: &Algebra, w: &Tensor) -> Result<CheckReport, CoreError> {
    if w.arity() != 3 {
        return Err(CoreError::DimensionMismatch(
            "invariance check expects a triple tensor".into(),
        ));
    }
    let mut report = CheckReport::ok_report();
    for a in 0..alg.space().dim() {
        let left = act_first_leg(alg, a, w)?;
        let right = act_last_leg(alg, w, a)?;
        let diff = left.sub(&right)?;
        if !diff.is_zero() {
            report.push(Violation {
                condition: "A-INV".to_string(),
                indices: vec![a],
                residual: diff,
            });
        }
    }
    Ok(report)
}

/// Both routes of the coassociativity criterion: the derivation coproduct
/// checked directly, and the invariance of the Yang-Baxter-shaped element.
/// The two verdicts agree for every input.
pub struct CoassocCriterion {
    pub derived_coassociative: CheckReport,
    pub residual_invariant: CheckReport,
}

impl CoassocCriterion {
    pub fn agree(&self) -> bool {
        self.derived_coassociative.ok() == self.residual_invariant.ok()
    }
}

pub fn check_coassociativity_criterion(rm: &RMatrix) -> Result<CoassocCriterion, CoreError> {
    let delta = principal_derivation(rm)?;
    let coalg = Coalgebra::new(rm.alg().space().clone(), delta)?;
    let derived = check_coassociativity(&coalg);
    let invariant = check_a_invariance(rm.alg(), &wayb_residual(rm)?)?;
    Ok(CoassocCriterion {
        derived_coassociative: derived,
        residual_invariant: invariant,
    })
}

/// The two derived identities of a Yang-Baxter solution. The second identity
/// appears in the literature with two different sign conventions; both are
/// evaluated and reported so instances document which one they satisfy.
pub struct QtIdentities {
    /// (delta (x) id)(r) = -r23 r13
    pub first: CheckReport,
    /// (id (x) delta)(r) = r13 r12 - lambda (r13 + r12)
    pub second_minus_sum: CheckReport,
    /// (id (x) delta)(r) = r13 r12 + lambda (r13 - r12)
    pub second_plus_diff: CheckReport,
}

impl QtIdentities {
    /// Verdict under the minus-sum convention.
    pub fn ok(&self) -> bool {
        self.first.ok() && self.second_minus_sum.ok()
    }

    pub fn some_variant_holds(&self) -> bool {
        self.first.ok() && (self.second_minus_sum.ok() || self.second_plus_diff.ok())
    }
}

fn report_whole_tensor(diff: Tensor, label: &str) -> CheckReport {
    let mut report = CheckReport::ok_report();
    if !diff.is_zero() {
        report.push(Violation {
            condition: label.to_string(),
            indices: vec![],
            residual: diff,
        });
    }
    report
}

pub fn check_qt_identities(rm: &RMatrix) -> Result<QtIdentities, CoreError> {
    if !is_wayb_solution(rm)? {
        return Err(CoreError::NotQuasitriangular);
    }
    let alg = rm.alg();
    let delta = principal_derivation(rm)?;
    // (delta (x) id)(r) and (id (x) delta)(r)
    let mut delta_first = Tensor::zero(vec![
        alg.space().clone(),
        alg.space().clone(),
        alg.space().clone(),
    ]);
    let mut delta_second = delta_first.clone();
    for (idx, c) in rm.r().entries() {
        let du = delta.comap_basis(idx[0])?;
        for (d_idx, v) in du.entries() {
            delta_first.add_entry(&[d_idx[0], d_idx[1], idx[1]], c * v)?;
        }
        let dv = delta.comap_basis(idx[1])?;
        for (d_idx, v) in dv.entries() {
            delta_second.add_entry(&[idx[0], d_idx[0], d_idx[1]], c * v)?;
        }
    }
    let r12 = rm.padded(2)?;
    let r13 = rm.padded(1)?;
    let r23 = rm.padded(0)?;
    let first_rhs = triple_product(alg, &r23, &r13)?.scaled(&-Rat::one());
    let base = triple_product(alg, &r13, &r12)?;
    let minus_sum_rhs = base.sub(&r13.add(&r12)?.scaled(rm.lambda()))?;
    let plus_diff_rhs = base.add(&r13.sub(&r12)?.scaled(rm.lambda()))?;
    Ok(QtIdentities {
        first: report_whole_tensor(delta_first.sub(&first_rhs)?, "QT1"),
        second_minus_sum: report_whole_tensor(delta_second.sub(&minus_sum_rhs)?, "QT2-minus-sum"),
        second_plus_diff: report_whole_tensor(delta_second.sub(&plus_diff_rhs)?, "QT2-plus-diff"),
    })
}

/// Coactions induced on a bimodule by a Yang-Baxter solution:
/// phi(m) = -sum u_i (x) (v_i |> m), psi(m) = sum (m <| u_i) (x) v_i
/// - lambda (m (x) 1).
pub fn induced_hopf_bimodule(
    rm: &RMatrix,
    actions: &ActionData,
) -> Result<HopfBimoduleData, CoreError> {
    if !is_wayb_solution(rm)? {
        return Err(CoreError::NotQuasitriangular);
    }
    if actions.algebra.space() != rm.alg().space() || actions.algebra.mu() != rm.alg().mu() {
        return Err(CoreError::DimensionMismatch(
            "actions must be over the element's algebra".into(),
        ));
    }
    if !check_bimodule(actions)?.ok() {
        return Err(CoreError::BadBimodule);
    }
    let a = rm.alg().space();
    let v = &actions.carrier;
    let unit = rm.alg().require_unit()?.clone();
    let mut phi = StructTensor3::zero_comap(v, a, v);
    let mut psi = StructTensor3::zero_comap(v, v, a);
    for m in 0..v.dim() {
        for (idx, c) in rm.r().entries() {
            let acted = actions.left.map_basis(idx[1], m)?;
            for (k, w) in acted.nonzero() {
                phi.add_entry(&[m, idx[0], k], -(c * w))?;
            }
            let acted = actions.right.map_basis(m, idx[0])?;
            for (k, w) in acted.nonzero() {
                psi.add_entry(&[m, k, idx[1]], c * w)?;
            }
        }
        if !rm.lambda().is_zero() {
            for (k, u) in unit.nonzero() {
                psi.add_entry(&[m, m, k], -(rm.lambda() * u))?;
            }
        }
    }
    HopfBimoduleData::new(
        principal_bialgebra(rm)?,
        v.clone(),
        actions.left.clone(),
        actions.right.clone(),
        phi,
        psi,
    )
}

/// The braided object induced on M = A itself: regular actions, induced
/// coactions, the algebra's own product, zero coproduct on the carrier.
pub fn induced_braided_object(rm: &RMatrix) -> Result<BraidedObject, CoreError> {
    let actions = ActionData::regular(rm.alg().clone());
    let data = induced_hopf_bimodule(rm, &actions)?;
    let v = data.carrier.clone();
    BraidedObject::new(
        data.base.clone(),
        v.clone(),
        rm.alg().mu().clone(),
        StructTensor3::zero_comap(&v, &v, &v),
        data.act_left,
        data.act_right,
        data.coact_left,
        data.coact_right,
    )
}

/// The induced braiding on M = A vanishes identically for every Yang-Baxter
/// solution; this evaluates it exactly and reports any nonzero slice.
pub fn check_zero_braiding(rm: &RMatrix) -> Result<CheckReport, CoreError> {
    let obj = induced_braided_object(rm)?;
    let s = braiding_tensor(&obj)?;
    let mut report = CheckReport::ok_report();
    for (indices, slice) in s.group_by_prefix(2) {
        report.push(Violation {
            condition: "BRAIDING".to_string(),
            indices,
            residual: slice,
        });
    }
    Ok(report)
}

/// Exhaustive search for Yang-Baxter solutions with entries drawn from a
/// finite coefficient set, optionally restricted to a support mask. Results
/// come back in lexicographic candidate order and re-verify to zero residual.
pub fn solve_wayb_grid(
    alg: &Algebra,
    lambda: &Rat,
    coeffs: &[Rat],
    support: Option<&[(usize, usize)]>,
    budget: u128,
) -> Result<Vec<Tensor>, CoreError> {
    alg.require_unit()?;
    let dim = alg.space().dim();
    let default_support: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .collect();
    let support: Vec<(usize, usize)> = match support {
        Some(s) => s.to_vec(),
        None => default_support,
    };
    for &(i, j) in &support {
        if i >= dim || j >= dim {
            return Err(CoreError::IndexOutOfRange {
                index: vec![i, j],
                dim,
            });
        }
    }
    let mut coeffs = coeffs.to_vec();
    coeffs.sort();
    coeffs.dedup();
    let candidates = (coeffs.len() as u128)
        .checked_pow(support.len() as u32)
        .unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(CoreError::BudgetExceeded { candidates, budget });
    }
    let mut solutions = Vec::new();
    let mut counters = vec![0usize; support.len()];
    loop {
        let mut r = Tensor::zero(vec![alg.space().clone(), alg.space().clone()]);
        for (pos, &(i, j)) in support.iter().enumerate() {
            r.add_entry(&[i, j], coeffs[counters[pos]].clone())?;
        }
        let rm = RMatrix::new(alg.clone(), r.clone(), lambda.clone())?;
        if is_wayb_solution(&rm)? {
            solutions.push(r);
        }
        // lexicographic increment, last position fastest
        let mut pos = support.len();
        loop {
            if pos == 0 {
                return Ok(solutions);
            }
            pos -= 1;
            counters[pos] += 1;
            if counters[pos] < coeffs.len() {
                break;
            }
            counters[pos] = 0;
        }
    }
}

/// The cataloged 2x2-matrix Yang-Baxter element: produced by the grid solver
/// over a fixed support mask, picking the densest solution (ties broken by
/// candidate order) so the derived coproduct is nontrivial.
pub fn mat2_grid_element(alg: &Algebra, lambda: &Rat) -> Result<Tensor, CoreError> {
    let (support, coeffs): (Vec<(usize, usize)>, Vec<Rat>) = if lambda.is_zero() {
        // the nilpotent corner E12 (x) E12
        (
            vec![(1, 1)],
            vec![Rat::from_int(-1), Rat::zero(), Rat::one()],
        )
    } else {
        // E11 (x) E11 and E11 (x) E22
        (
            vec![(0, 0), (0, 3)],
            vec![Rat::zero(), lambda.clone()],
        )
    };
    let solutions = solve_wayb_grid(alg, lambda, &coeffs, Some(&support), 1 << 20)?;
    solutions
        .into_iter()
        .enumerate()
        .max_by_key(|(pos, t)| (t.num_entries(), *pos))
        .map(|(_, t)| t)
        .ok_or_else(|| CoreError::UnknownExample("no grid solution found".into()))
}
