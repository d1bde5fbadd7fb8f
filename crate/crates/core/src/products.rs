//! Matched pairs, bicrossed (co)products, double matched pairs, cocycle and
//! cycle cross systems, and the cocycle bicrossproduct.

use crate::bialgebra::{Algebra, Coalgebra, WeightedInfBialgebra};
use crate::error::CoreError;
use crate::mixed::{
    direct_sum_com, direct_sum_mul, profile_cocycle_braided, profile_cocycle_cross,
    profile_cocycle_double_matched_pair, profile_cocycles, profile_cycle_cross, profile_cycles,
    profile_double_matched_pair, profile_matched_pair_alg, profile_matched_pair_coalg,
    run_profile, MixedSystem, Role,
};
use crate::report::CheckReport;
use crate::scalar::Rat;
use crate::tensor::StructTensor3;

/// Two algebras with mutual actions.
#[derive(Clone, Debug)]
pub struct MatchedPairAlgData {
    pub a: Algebra,
    pub h: Algebra,
    /// H (x) A -> A
    pub harpoon_l: StructTensor3,
    /// A (x) H -> A
    pub harpoon_r: StructTensor3,
    /// A (x) H -> H
    pub tri_l: StructTensor3,
    /// H (x) A -> H
    pub tri_r: StructTensor3,
}

impl MatchedPairAlgData {
    pub fn zero(a: Algebra, h: Algebra) -> Self {
        let (sa, sh) = (a.space().clone(), h.space().clone());
        MatchedPairAlgData {
            a,
            h,
            harpoon_l: StructTensor3::zero_map(&sh, &sa, &sa),
            harpoon_r: StructTensor3::zero_map(&sa, &sh, &sa),
            tri_l: StructTensor3::zero_map(&sa, &sh, &sh),
            tri_r: StructTensor3::zero_map(&sh, &sa, &sh),
        }
    }

    pub fn install(&self, sys: &mut MixedSystem) -> Result<(), CoreError> {
        sys.set(Role::MuA, self.a.mu().clone())?;
        sys.set(Role::MuH, self.h.mu().clone())?;
        sys.set(Role::HarpoonL, self.harpoon_l.clone())?;
        sys.set(Role::HarpoonR, self.harpoon_r.clone())?;
        sys.set(Role::TriL, self.tri_l.clone())?;
        sys.set(Role::TriR, self.tri_r.clone())?;
        Ok(())
    }

    pub fn as_mixed(&self) -> Result<MixedSystem, CoreError> {
        let mut sys = MixedSystem::new(
            self.a.space().clone(),
            self.h.space().clone(),
            Rat::zero(),
        );
        self.install(&mut sys)?;
        Ok(sys)
    }
}

/// Two coalgebras with mutual coactions.
#[derive(Clone, Debug)]
pub struct MatchedPairCoalgData {
    pub a: Coalgebra,
    pub h: Coalgebra,
    /// A -> H (x) A
    pub phi: StructTensor3,
    /// A -> A (x) H
    pub psi: StructTensor3,
    /// H -> A (x) H
    pub rho: StructTensor3,
    /// H -> H (x) A
    pub gamma: StructTensor3,
}

impl MatchedPairCoalgData {
    pub fn zero(a: Coalgebra, h: Coalgebra) -> Self {
        let (sa, sh) = (a.space().clone(), h.space().clone());
        MatchedPairCoalgData {
            a,
            h,
            phi: StructTensor3::zero_comap(&sa, &sh, &sa),
            psi: StructTensor3::zero_comap(&sa, &sa, &sh),
            rho: StructTensor3::zero_comap(&sh, &sa, &sh),
            gamma: StructTensor3::zero_comap(&sh, &sh, &sa),
        }
    }

    pub fn install(&self, sys: &mut MixedSystem) -> Result<(), CoreError> {
        sys.set(Role::DeltaA, self.a.delta().clone())?;
        sys.set(Role::DeltaH, self.h.delta().clone())?;
        sys.set(Role::Phi, self.phi.clone())?;
        sys.set(Role::Psi, self.psi.clone())?;
        sys.set(Role::Rho, self.rho.clone())?;
        sys.set(Role::Gamma, self.gamma.clone())?;
        Ok(())
    }

    pub fn as_mixed(&self) -> Result<MixedSystem, CoreError> {
        let mut sys = MixedSystem::new(
            self.a.space().clone(),
            self.h.space().clone(),
            Rat::zero(),
        );
        self.install(&mut sys)?;
        Ok(sys)
    }
}

/// A matched pair of algebras enriched with two twisting cocycles.
#[derive(Clone, Debug)]
pub struct CocycleSystemData {
    pub pair: MatchedPairAlgData,
    /// H (x) H -> A
    pub sigma: StructTensor3,
    /// A (x) A -> H
    pub theta: StructTensor3,
}

impl CocycleSystemData {
    pub fn from_pair(pair: MatchedPairAlgData) -> Self {
        let (sa, sh) = (pair.a.space().clone(), pair.h.space().clone());
        CocycleSystemData {
            pair,
            sigma: StructTensor3::zero_map(&sh, &sh, &sa),
            theta: StructTensor3::zero_map(&sa, &sa, &sh),
        }
    }

    pub fn install(&self, sys: &mut MixedSystem) -> Result<(), CoreError> {
        self.pair.install(sys)?;
        sys.set(Role::Sigma, self.sigma.clone())?;
        sys.set(Role::Theta, self.theta.clone())?;
        Ok(())
    }

    pub fn as_mixed(&self) -> Result<MixedSystem, CoreError> {
        let mut sys = MixedSystem::new(
            self.pair.a.space().clone(),
            self.pair.h.space().clone(),
            Rat::zero(),
        );
        self.install(&mut sys)?;
        Ok(sys)
    }
}

/// A matched pair of coalgebras enriched with two twisting cycles.
#[derive(Clone, Debug)]
pub struct CycleCoSystemData {
    pub pair: MatchedPairCoalgData,
    /// A -> H (x) H
    pub cap_p: StructTensor3,
    /// H -> A (x) A
    pub cap_q: StructTensor3,
}

impl CycleCoSystemData {
    pub fn from_pair(pair: MatchedPairCoalgData) -> Self {
        let (sa, sh) = (pair.a.space().clone(), pair.h.space().clone());
        CycleCoSystemData {
            pair,
            cap_p: StructTensor3::zero_comap(&sa, &sh, &sh),
            cap_q: StructTensor3::zero_comap(&sh, &sa, &sa),
        }
    }

    pub fn install(&self, sys: &mut MixedSystem) -> Result<(), CoreError> {
        self.pair.install(sys)?;
        sys.set(Role::CapP, self.cap_p.clone())?;
        sys.set(Role::CapQ, self.cap_q.clone())?;
        Ok(())
    }

    pub fn as_mixed(&self) -> Result<MixedSystem, CoreError> {
        let mut sys = MixedSystem::new(
            self.pair.a.space().clone(),
            self.pair.h.space().clone(),
            Rat::zero(),
        );
        self.install(&mut sys)?;
        Ok(sys)
    }
}

/// The full two-sided structure: products, coproducts, actions, coactions,
/// cocycles and cycles, with one shared weight.
#[derive(Clone, Debug)]
pub struct CocycleBraidedPair {
    pub system: CocycleSystemData,
    pub cosystem: CycleCoSystemData,
    pub lambda: Rat,
}

impl CocycleBraidedPair {
    pub fn new(
        system: CocycleSystemData,
        cosystem: CycleCoSystemData,
        lambda: Rat,
    ) -> Result<Self, CoreError> {
        if system.pair.a.space() != cosystem.pair.a.space()
            || system.pair.h.space() != cosystem.pair.h.space()
        {
            return Err(CoreError::DimensionMismatch(
                "product and coproduct sides must share spaces".into(),
            ));
        }
        Ok(CocycleBraidedPair {
            system,
            cosystem,
            lambda,
        })
    }

    pub fn as_mixed(&self) -> Result<MixedSystem, CoreError> {
        let mut sys = MixedSystem::new(
            self.system.pair.a.space().clone(),
            self.system.pair.h.space().clone(),
            self.lambda.clone(),
        );
        self.system.install(&mut sys)?;
        self.cosystem.install(&mut sys)?;
        Ok(sys)
    }
}

/// Mutual bimodule laws plus the six mixed multiplication laws.
pub fn check_matched_pair_alg(d: &MatchedPairAlgData) -> Result<CheckReport, CoreError> {
    run_profile(&d.as_mixed()?, &profile_matched_pair_alg())
}

/// The algebra on A (+) H with blockwise product from the mutual actions.
pub fn bicrossed_product(d: &MatchedPairAlgData) -> Result<Algebra, CoreError> {
    let (space, mul) = direct_sum_mul(&d.as_mixed()?)?;
    Algebra::new(space, mul, None)
}

/// Mutual bicomodule laws plus the six mixed comultiplication laws.
pub fn check_matched_pair_coalg(d: &MatchedPairCoalgData) -> Result<CheckReport, CoreError> {
    run_profile(&d.as_mixed()?, &profile_matched_pair_coalg())
}

/// The coalgebra on A (+) H with blockwise coproduct from the coactions.
pub fn bicrossed_coproduct(d: &MatchedPairCoalgData) -> Result<Coalgebra, CoreError> {
    let (space, com) = direct_sum_com(&d.as_mixed()?)?;
    Coalgebra::new(space, com)
}

fn combined_mixed(
    alg: &MatchedPairAlgData,
    coalg: &MatchedPairCoalgData,
    lambda: &Rat,
) -> Result<MixedSystem, CoreError> {
    if alg.a.space() != coalg.a.space() || alg.h.space() != coalg.h.space() {
        return Err(CoreError::DimensionMismatch(
            "matched pairs must share spaces".into(),
        ));
    }
    let mut sys = MixedSystem::new(
        alg.a.space().clone(),
        alg.h.space().clone(),
        lambda.clone(),
    );
    alg.install(&mut sys)?;
    coalg.install(&mut sys)?;
    Ok(sys)
}

/// The twelve mixed compatibility laws between the actions and coactions.
pub fn check_double_matched_pair(
    alg: &MatchedPairAlgData,
    coalg: &MatchedPairCoalgData,
    lambda: &Rat,
) -> Result<CheckReport, CoreError> {
    run_profile(
        &combined_mixed(alg, coalg, lambda)?,
        &profile_double_matched_pair(),
    )
}

/// The bialgebra assembled from a matched pair of algebras and a matched
/// pair of coalgebras on the same two spaces.
pub fn double_cross_biproduct(
    alg: &MatchedPairAlgData,
    coalg: &MatchedPairCoalgData,
    lambda: &Rat,
) -> Result<WeightedInfBialgebra, CoreError> {
    let sys = combined_mixed(alg, coalg, lambda)?;
    let (space, mul) = direct_sum_mul(&sys)?;
    let (_, com) = direct_sum_com(&sys)?;
    let a = Algebra::new(space.clone(), mul, None)?;
    let c = Coalgebra::new(space, com)?;
    WeightedInfBialgebra::new(a, c, lambda.clone())
}

/// The two cocycle laws and the two twisted associativity laws.
pub fn check_cocycles(d: &CocycleSystemData) -> Result<CheckReport, CoreError> {
    run_profile(&d.as_mixed()?, &profile_cocycles())
}

/// The two cycle laws and the two twisted coassociativity laws.
pub fn check_cycles(d: &CycleCoSystemData) -> Result<CheckReport, CoreError> {
    run_profile(&d.as_mixed()?, &profile_cycles())
}

/// The twelve cross-relations tying actions and cocycles together.
pub fn check_cocycle_cross_system(d: &CocycleSystemData) -> Result<CheckReport, CoreError> {
    run_profile(&d.as_mixed()?, &profile_cocycle_cross())
}

/// The algebra on A (+) H with the cocycle-twisted blockwise product.
pub fn cocycle_cross_product(d: &CocycleSystemData) -> Result<Algebra, CoreError> {
    let (space, mul) = direct_sum_mul(&d.as_mixed()?)?;
    Algebra::new(space, mul, None)
}

/// The twelve cross-relations tying coactions and cycles together.
pub fn check_cycle_cross_cosystem(d: &CycleCoSystemData) -> Result<CheckReport, CoreError> {
    run_profile(&d.as_mixed()?, &profile_cycle_cross())
}

/// The coalgebra on A (+) H with the cycle-twisted blockwise coproduct.
pub fn cycle_cross_coproduct(d: &CycleCoSystemData) -> Result<Coalgebra, CoreError> {
    let (space, com) = direct_sum_com(&d.as_mixed()?)?;
    Coalgebra::new(space, com)
}

/// The two braided compatibility laws of a cocycle braided pair.
pub fn check_cocycle_braided(p: &CocycleBraidedPair) -> Result<CheckReport, CoreError> {
    run_profile(&p.as_mixed()?, &profile_cocycle_braided())
}

/// The fourteen compatibility laws between the twisted product and coproduct.
pub fn check_cocycle_double_matched_pair(
    p: &CocycleBraidedPair,
) -> Result<CheckReport, CoreError> {
    run_profile(&p.as_mixed()?, &profile_cocycle_double_matched_pair())
}

/// The bialgebra on A (+) H assembled from the cocycle cross product and the
/// cycle cross coproduct.
pub fn cocycle_bicrossproduct(p: &CocycleBraidedPair) -> Result<WeightedInfBialgebra, CoreError> {
    let sys = p.as_mixed()?;
    let (space, mul) = direct_sum_mul(&sys)?;
    let (_, com) = direct_sum_com(&sys)?;
    let a = Algebra::new(space.clone(), mul, None)?;
    let c = Coalgebra::new(space, com)?;
    WeightedInfBialgebra::new(a, c, p.lambda.clone())
}
