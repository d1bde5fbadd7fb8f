//! Algebras, coalgebras, and weighted infinitesimal bialgebras given by
//! structure constants, together with their axiom checkers and a small
//! catalog of validated instances.

use crate::error::CoreError;
use crate::report::{CheckReport, Violation};
use crate::scalar::Rat;
use crate::space::{Space, Vector};
use crate::tensor::{
    cocompose_left, cocompose_right, comap_of_product, compose_left, compose_right, mul_first_leg,
    mul_second_leg, StructTensor3, Tensor,
};

/// An algebra by structure constants. The constructor validates shape and,
/// when a unit is supplied, the unit law; associativity is a checkable
/// property, not a constructor guarantee, so invalid algebras can be
/// represented deliberately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    space: Space,
    mu: StructTensor3,
    unit: Option<Vector>,
}

impl Algebra {
    pub fn new(space: Space, mu: StructTensor3, unit: Option<Vector>) -> Result<Self, CoreError> {
        mu.expect_map()?;
        for axis in 0..3 {
            if mu.tensor().spaces()[axis] != space {
                return Err(CoreError::DimensionMismatch(
                    "multiplication legs must all live on the algebra's space".into(),
                ));
            }
        }
        if let Some(u) = &unit {
            if u.space() != &space {
                return Err(CoreError::DimensionMismatch("unit lives elsewhere".into()));
            }
            for i in 0..space.dim() {
                let e = Vector::basis(&space, i);
                if mu.map_apply(u, &e)? != e || mu.map_apply(&e, u)? != e {
                    return Err(CoreError::UnitLaw(i));
                }
            }
        }
        Ok(Algebra { space, mu, unit })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn mu(&self) -> &StructTensor3 {
        &self.mu
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn require_unit(&self) -> Result<&Vector, CoreError> {
        self.unit.as_ref().ok_or(CoreError::MissingUnit)
    }

    /// Product of two elements.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector, CoreError> {
        self.mu.map_apply(x, y)
    }
}

/// A coalgebra by structure constants. Coassociativity is a checkable
/// property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    space: Space,
    delta: StructTensor3,
}

impl Coalgebra {
    pub fn new(space: Space, delta: StructTensor3) -> Result<Self, CoreError> {
        delta.expect_comap()?;
        for axis in 0..3 {
            if delta.tensor().spaces()[axis] != space {
                return Err(CoreError::DimensionMismatch(
                    "comultiplication legs must all live on the coalgebra's space".into(),
                ));
            }
        }
        Ok(Coalgebra { space, delta })
    }

    pub fn zero(space: Space) -> Self {
        let delta = StructTensor3::zero_comap(&space, &space, &space);
        Coalgebra { space, delta }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn delta(&self) -> &StructTensor3 {
        &self.delta
    }
}

/// An algebra and a coalgebra on one space, tied by a fixed rational weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedInfBialgebra {
    alg: Algebra,
    coalg: Coalgebra,
    lambda: Rat,
}

impl WeightedInfBialgebra {
    pub fn new(alg: Algebra, coalg: Coalgebra, lambda: Rat) -> Result<Self, CoreError> {
        if alg.space() != coalg.space() {
            return Err(CoreError::DimensionMismatch(
                "algebra and coalgebra must share one space".into(),
            ));
        }
        Ok(WeightedInfBialgebra { alg, coalg, lambda })
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn coalg(&self) -> &Coalgebra {
        &self.coalg
    }

    pub fn space(&self) -> &Space {
        self.alg.space()
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }
}

fn violations_from(residual: Tensor, condition: &str, input_arity: usize) -> CheckReport {
    let mut report = CheckReport::ok_report();
    for (indices, slice) in residual.group_by_prefix(input_arity) {
        report.push(Violation {
            condition: condition.to_string(),
            indices,
            residual: slice,
        });
    }
    report
}

/// mu(mu(a,b),c) = mu(a,mu(b,c)) on every basis triple.
pub fn check_associativity(alg: &Algebra) -> CheckReport {
    let left = compose_left(alg.mu(), alg.mu()).expect("orientation checked");
    let right = compose_right(alg.mu(), alg.mu()).expect("orientation checked");
    violations_from(left.sub(&right).expect("same spaces"), "ASSOC", 3)
}

/// (delta (x) id) delta = (id (x) delta) delta on every basis vector.
pub fn check_coassociativity(coalg: &Coalgebra) -> CheckReport {
    let right = cocompose_right(coalg.delta(), coalg.delta()).expect("orientation checked");
    let left = cocompose_left(coalg.delta(), coalg.delta()).expect("orientation checked");
    violations_from(right.sub(&left).expect("same spaces"), "COASSOC", 1)
}

/// delta(ab) = a.delta(b) + delta(a).b + lambda (a (x) b) on every basis pair.
pub fn check_weighted_compatibility(b: &WeightedInfBialgebra) -> CheckReport {
    let mu = b.alg().mu();
    let delta = b.coalg().delta();
    let mut residual = comap_of_product(mu, delta).expect("orientations checked");
    residual = residual
        .sub(&mul_first_leg(delta, mu).expect("orientations checked"))
        .expect("same spaces");
    residual = residual
        .sub(&mul_second_leg(delta, mu).expect("orientations checked"))
        .expect("same spaces");
    if !b.lambda().is_zero() {
        let dim = b.space().dim();
        for i in 0..dim {
            for j in 0..dim {
                residual
                    .add_entry(&[i, j, i, j], -b.lambda().clone())
                    .expect("in range");
            }
        }
    }
    violations_from(residual, "COMPAT", 2)
}

/// All three structural checks in one report.
pub fn check_bialgebra(b: &WeightedInfBialgebra) -> CheckReport {
    let mut report = check_associativity(b.alg());
    report.merge(check_coassociativity(b.coalg()));
    report.merge(check_weighted_compatibility(b));
    report
}

fn mu_from_table(space: &Space, entries: &[(usize, usize, usize, Rat)]) -> StructTensor3 {
    let mut mu = StructTensor3::zero_map(space, space, space);
    for (i, j, k, v) in entries {
        mu.add_entry(&[*i, *j, *k], v.clone()).expect("in range");
    }
    mu
}

/// Named algebras used throughout the workbench and its tests.
///
/// * `k`: the ground field, basis {e}, e*e = e, unital.
/// * `dual-numbers`: basis {1, x} with x*x = 0, unital.
/// * `k2`: split two-dimensional algebra, two orthogonal idempotents, unital.
/// * `mat2`: 2x2 matrices over the rationals, basis E11, E12, E21, E22.
/// * `triangular2`: upper triangular 2x2 matrices, basis E11, E12, E22.
pub fn algebra_library(name: &str) -> Result<Algebra, CoreError> {
    let one = Rat::one;
    match name {
        "k" => {
            let s = Space::new("A", vec!["e".into()])?;
            let mu = mu_from_table(&s, &[(0, 0, 0, one())]);
            Algebra::new(s.clone(), mu, Some(Vector::basis(&s, 0)))
        }
        "dual-numbers" => {
            let s = Space::new("A", vec!["1".into(), "x".into()])?;
            let mu = mu_from_table(
                &s,
                &[(0, 0, 0, one()), (0, 1, 1, one()), (1, 0, 1, one())],
            );
            Algebra::new(s.clone(), mu, Some(Vector::basis(&s, 0)))
        }
        "k2" => {
            let s = Space::new("A", vec!["e1".into(), "e2".into()])?;
            let mu = mu_from_table(&s, &[(0, 0, 0, one()), (1, 1, 1, one())]);
            let mut unit = Vector::basis(&s, 0);
            unit.add_scaled(&Vector::basis(&s, 1), &one());
            Algebra::new(s.clone(), mu, Some(unit))
        }
        "mat2" => {
            let s = Space::new(
                "A",
                vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
            )?;
            // E_{ij} E_{kl} = delta_{jk} E_{il}; index = 2*(i-1) + (j-1)
            let mut entries = Vec::new();
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        for l in 0..2 {
                            if j == k {
                                entries.push((2 * i + j, 2 * k + l, 2 * i + l, one()));
                            }
                        }
                    }
                }
            }
            let mu = mu_from_table(&s, &entries);
            let mut unit = Vector::basis(&s, 0);
            unit.add_scaled(&Vector::basis(&s, 3), &one());
            Algebra::new(s.clone(), mu, Some(unit))
        }
        "triangular2" => {
            let s = Space::new("A", vec!["E11".into(), "E12".into(), "E22".into()])?;
            let mu = mu_from_table(
                &s,
                &[
                    (0, 0, 0, one()),
                    (0, 1, 1, one()),
                    (1, 2, 1, one()),
                    (2, 2, 2, one()),
                ],
            );
            let mut unit = Vector::basis(&s, 0);
            unit.add_scaled(&Vector::basis(&s, 2), &one());
            Algebra::new(s.clone(), mu, Some(unit))
        }
        other => Err(CoreError::UnknownExample(other.to_string())),
    }
}

/// Named weighted infinitesimal bialgebras. Every returned structure passes
/// all three checks; the coproducts of the `-principal` entries come from
/// cataloged elements of A (x) A through the derivation machinery, with the
/// `mat2-principal` element produced by the Yang-Baxter grid solver.
pub fn example_library(name: &str, lambda: &Rat) -> Result<WeightedInfBialgebra, CoreError> {
    match name {
        "zero-coproduct" => {
            if !lambda.is_zero() {
                return Err(CoreError::UnknownExample(
                    "zero-coproduct requires weight 0".into(),
                ));
            }
            let alg = algebra_library("dual-numbers")?;
            let coalg = Coalgebra::zero(alg.space().clone());
            WeightedInfBialgebra::new(alg, coalg, Rat::zero())
        }
        "k-principal" => {
            let alg = algebra_library("k")?;
            let mut r = Tensor::zero(vec![alg.space().clone(), alg.space().clone()]);
            r.add_entry(&[0, 0], lambda.clone())?;
            principal_bialgebra(alg, r, lambda.clone())
        }
        "dual-numbers-principal" => {
            let alg = algebra_library("dual-numbers")?;
            let mut r = Tensor::zero(vec![alg.space().clone(), alg.space().clone()]);
            r.add_entry(&[1, 1], Rat::one())?;
            principal_bialgebra(alg, r, lambda.clone())
        }
        "k2-principal" => {
            let alg = algebra_library("k2")?;
            // e1 (x) 1, scaled by the weight
            let mut r = Tensor::zero(vec![alg.space().clone(), alg.space().clone()]);
            r.add_entry(&[0, 0], lambda.clone())?;
            r.add_entry(&[0, 1], lambda.clone())?;
            principal_bialgebra(alg, r, lambda.clone())
        }
        "mat2-principal" => {
            let alg = algebra_library("mat2")?;
            let r = crate::qt::mat2_grid_element(&alg, lambda)?;
            principal_bialgebra(alg, r, lambda.clone())
        }
        other => Err(CoreError::UnknownExample(other.to_string())),
    }
}

fn principal_bialgebra(
    alg: Algebra,
    r: Tensor,
    lambda: Rat,
) -> Result<WeightedInfBialgebra, CoreError> {
    let rm = crate::qt::RMatrix::new(alg.clone(), r, lambda.clone())?;
    let delta = crate::qt::principal_derivation(&rm)?;
    let coalg = Coalgebra::new(alg.space().clone(), delta)?;
    WeightedInfBialgebra::new(alg, coalg, lambda)
}
