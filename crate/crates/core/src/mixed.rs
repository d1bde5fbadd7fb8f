//! The two-sided structure system underlying every cross-product construction.
//!
//! All products, coproducts, and compatibility axioms in this crate live on a
//! direct sum A (+) H carrying up to sixteen structure maps: blockwise
//! multiplications, blockwise comultiplications, mutual actions, mutual
//! coactions, two cocycles and two cycles. Each named axiom is one "slot" of
//! one of three residual tables:
//!
//!   * associativity of the assembled multiplication, restricted to an input
//!     triple of sides and an output side;
//!   * coassociativity of the assembled comultiplication, restricted to an
//!     input side and an output triple;
//!   * the weighted compatibility between the two, restricted to an input
//!     pair and an output pair.
//!
//! Condition lists are data: a profile is a list of (label, slot) pairs, and a
//! checker is the generic slot evaluator run over a profile. Absent maps are
//! structural zeros, which is how one table serves every specialization.

use crate::error::CoreError;
use crate::report::{CheckReport, Violation};
use crate::scalar::Rat;
use crate::space::Space;
use crate::tensor::{
    comap_of_product, cocompose_left, cocompose_right, compose_left, compose_right, mul_first_leg,
    mul_second_leg, Orientation, StructTensor3, Tensor,
};

/// Which summand of A (+) H a leg lives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Side {
    A,
    H,
}

pub use Side::{A, H};

/// Names for the sixteen structure maps of a mixed system.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Role {
    MuA,      // A (x) A -> A
    MuH,      // H (x) H -> H
    Theta,    // A (x) A -> H   (cocycle)
    Sigma,    // H (x) H -> A   (cocycle)
    HarpoonL, // H (x) A -> A   (left action of H on A)
    HarpoonR, // A (x) H -> A   (right action of H on A)
    TriL,     // A (x) H -> H   (left action of A on H)
    TriR,     // H (x) A -> H   (right action of A on H)
    DeltaA,   // A -> A (x) A
    DeltaH,   // H -> H (x) H
    CapP,     // A -> H (x) H   (cycle)
    CapQ,     // H -> A (x) A   (cycle)
    Phi,      // A -> H (x) A   (left coaction)
    Psi,      // A -> A (x) H   (right coaction)
    Rho,      // H -> A (x) H   (left coaction)
    Gamma,    // H -> H (x) A   (right coaction)
}

impl Role {
    pub const ALL: [Role; 16] = [
        Role::MuA,
        Role::MuH,
        Role::Theta,
        Role::Sigma,
        Role::HarpoonL,
        Role::HarpoonR,
        Role::TriL,
        Role::TriR,
        Role::DeltaA,
        Role::DeltaH,
        Role::CapP,
        Role::CapQ,
        Role::Phi,
        Role::Psi,
        Role::Rho,
        Role::Gamma,
    ];

    pub fn orientation(self) -> Orientation {
        match self {
            Role::MuA
            | Role::MuH
            | Role::Theta
            | Role::Sigma
            | Role::HarpoonL
            | Role::HarpoonR
            | Role::TriL
            | Role::TriR => Orientation::Map,
            _ => Orientation::Comap,
        }
    }

    /// (first axis, second axis, third axis) sides for the stored tensor.
    pub fn axes(self) -> [Side; 3] {
        match self {
            Role::MuA => [A, A, A],
            Role::MuH => [H, H, H],
            Role::Theta => [A, A, H],
            Role::Sigma => [H, H, A],
            Role::HarpoonL => [H, A, A],
            Role::HarpoonR => [A, H, A],
            Role::TriL => [A, H, H],
            Role::TriR => [H, A, H],
            Role::DeltaA => [A, A, A],
            Role::DeltaH => [H, H, H],
            Role::CapP => [A, H, H],
            Role::CapQ => [H, A, A],
            Role::Phi => [A, H, A],
            Role::Psi => [A, A, H],
            Role::Rho => [H, A, H],
            Role::Gamma => [H, H, A],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Role::MuA => "mu",
            Role::MuH => "mu_h",
            Role::Theta => "theta",
            Role::Sigma => "sigma",
            Role::HarpoonL => "harpoon_l",
            Role::HarpoonR => "harpoon_r",
            Role::TriL => "tri_l",
            Role::TriR => "tri_r",
            Role::DeltaA => "delta",
            Role::DeltaH => "delta_h",
            Role::CapP => "P",
            Role::CapQ => "Q",
            Role::Phi => "phi",
            Role::Psi => "psi",
            Role::Rho => "rho",
            Role::Gamma => "gamma",
        }
    }

    pub fn from_name(name: &str) -> Option<Role> {
        Role::ALL.iter().copied().find(|r| r.name() == name)
    }
}

/// Two based spaces plus any subset of the sixteen structure maps.
#[derive(Clone, Debug)]
pub struct MixedSystem {
    a: Space,
    h: Space,
    lambda: Rat,
    maps: [Option<StructTensor3>; 16],
}

impl MixedSystem {
    pub fn new(a: Space, h: Space, lambda: Rat) -> Self {
        MixedSystem {
            a,
            h,
            lambda,
            maps: Default::default(),
        }
    }

    pub fn a_space(&self) -> &Space {
        &self.a
    }

    pub fn h_space(&self) -> &Space {
        &self.h
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn side_space(&self, side: Side) -> &Space {
        match side {
            A => &self.a,
            H => &self.h,
        }
    }

    fn slot(role: Role) -> usize {
        Role::ALL.iter().position(|r| *r == role).expect("known role")
    }

    /// Installs a map after validating its orientation and leg spaces.
    pub fn set(&mut self, role: Role, tensor: StructTensor3) -> Result<(), CoreError> {
        if tensor.orientation() != role.orientation() {
            return match role.orientation() {
                Orientation::Map => Err(CoreError::WrongOrientation {
                    expected: "map",
                    got: "comap",
                }),
                Orientation::Comap => Err(CoreError::WrongOrientation {
                    expected: "comap",
                    got: "map",
                }),
            };
        }
        let want = role.axes();
        for (axis, side) in want.iter().enumerate() {
            if tensor.tensor().spaces()[axis] != *self.side_space(*side) {
                return Err(CoreError::DimensionMismatch(format!(
                    "role {:?}: axis {} must live on side {:?}",
                    role, axis, side
                )));
            }
        }
        self.maps[Self::slot(role)] = Some(tensor);
        Ok(())
    }

    pub fn get(&self, role: Role) -> Option<&StructTensor3> {
        self.maps[Self::slot(role)].as_ref()
    }

    /// The multiplication component `in1 (x) in2 -> out`, if installed.
    pub fn mul(&self, in1: Side, in2: Side, out: Side) -> Option<&StructTensor3> {
        let role = match (in1, in2, out) {
            (A, A, A) => Role::MuA,
            (A, A, H) => Role::Theta,
            (H, H, H) => Role::MuH,
            (H, H, A) => Role::Sigma,
            (H, A, A) => Role::HarpoonL,
            (H, A, H) => Role::TriR,
            (A, H, A) => Role::HarpoonR,
            (A, H, H) => Role::TriL,
        };
        self.get(role)
    }

    /// The comultiplication component `input -> out1 (x) out2`, if installed.
    pub fn com(&self, input: Side, out1: Side, out2: Side) -> Option<&StructTensor3> {
        let role = match (input, out1, out2) {
            (A, A, A) => Role::DeltaA,
            (A, H, H) => Role::CapP,
            (H, H, H) => Role::DeltaH,
            (H, A, A) => Role::CapQ,
            (A, H, A) => Role::Phi,
            (A, A, H) => Role::Psi,
            (H, A, H) => Role::Rho,
            (H, H, A) => Role::Gamma,
        };
        self.get(role)
    }

    fn accumulate(acc: &mut Tensor, term: Tensor, negate: bool) -> Result<(), CoreError> {
        let term = if negate {
            term.scaled(&-Rat::one())
        } else {
            term
        };
        *acc = acc.add(&term)?;
        Ok(())
    }

    /// Associativity defect of the assembled product on the given slot.
    /// Axes of the result: (t0, t1, t2, out).
    pub fn assoc_residual(&self, t: [Side; 3], out: Side) -> Result<Tensor, CoreError> {
        let spaces = vec![
            self.side_space(t[0]).clone(),
            self.side_space(t[1]).clone(),
            self.side_space(t[2]).clone(),
            self.side_space(out).clone(),
        ];
        let mut acc = Tensor::zero(spaces);
        for z in [A, H] {
            if let (Some(f), Some(g)) = (self.mul(t[0], t[1], z), self.mul(z, t[2], out)) {
                Self::accumulate(&mut acc, compose_left(f, g)?, false)?;
            }
            if let (Some(f), Some(g)) = (self.mul(t[1], t[2], z), self.mul(t[0], z, out)) {
                Self::accumulate(&mut acc, compose_right(f, g)?, true)?;
            }
        }
        Ok(acc)
    }

    /// Coassociativity defect of the assembled coproduct on the given slot.
    /// Axes of the result: (input, out0, out1, out2).
    pub fn coassoc_residual(&self, input: Side, out: [Side; 3]) -> Result<Tensor, CoreError> {
        let spaces = vec![
            self.side_space(input).clone(),
            self.side_space(out[0]).clone(),
            self.side_space(out[1]).clone(),
            self.side_space(out[2]).clone(),
        ];
        let mut acc = Tensor::zero(spaces);
        for z in [A, H] {
            if let (Some(f), Some(g)) = (self.com(input, out[0], z), self.com(z, out[1], out[2])) {
                Self::accumulate(&mut acc, cocompose_right(f, g)?, false)?;
            }
            if let (Some(f), Some(g)) = (self.com(input, z, out[2]), self.com(z, out[0], out[1])) {
                Self::accumulate(&mut acc, cocompose_left(f, g)?, true)?;
            }
        }
        Ok(acc)
    }

    /// Defect of the weighted compatibility law on the given slot:
    /// coproduct of a product minus both one-sided module actions minus the
    /// weight term. Axes of the result: (t0, t1, out0, out1).
    pub fn compat_residual(&self, t: [Side; 2], out: [Side; 2]) -> Result<Tensor, CoreError> {
        let spaces = vec![
            self.side_space(t[0]).clone(),
            self.side_space(t[1]).clone(),
            self.side_space(out[0]).clone(),
            self.side_space(out[1]).clone(),
        ];
        let mut acc = Tensor::zero(spaces);
        for z in [A, H] {
            if let (Some(m), Some(c)) = (self.mul(t[0], t[1], z), self.com(z, out[0], out[1])) {
                Self::accumulate(&mut acc, comap_of_product(m, c)?, false)?;
            }
            // u . comap(v): product applied to the first output leg
            if let (Some(c), Some(m)) = (self.com(t[1], z, out[1]), self.mul(t[0], z, out[0])) {
                Self::accumulate(&mut acc, mul_first_leg(c, m)?, true)?;
            }
            // comap(u) . v: product applied to the second output leg
            if let (Some(c), Some(m)) = (self.com(t[0], out[0], z), self.mul(z, t[1], out[1])) {
                Self::accumulate(&mut acc, mul_second_leg(c, m)?, true)?;
            }
        }
        if out == t && !self.lambda.is_zero() {
            let d0 = self.side_space(t[0]).dim();
            let d1 = self.side_space(t[1]).dim();
            for i in 0..d0 {
                for j in 0..d1 {
                    acc.add_entry(&[i, j, i, j], -self.lambda.clone())?;
                }
            }
        }
        Ok(acc)
    }
}

/// One slot of one of the three residual tables.
#[derive(Clone, Copy, Debug)]
pub enum Slot {
    Assoc([Side; 3], Side),
    Coassoc(Side, [Side; 3]),
    Compat([Side; 2], [Side; 2]),
}

impl Slot {
    fn input_arity(&self) -> usize {
        match self {
            Slot::Assoc(..) => 3,
            Slot::Coassoc(..) => 1,
            Slot::Compat(..) => 2,
        }
    }
}

/// A named condition: a paper label attached to one or more slots.
#[derive(Clone, Debug)]
pub struct Condition {
    pub id: &'static str,
    pub slots: Vec<Slot>,
}

impl Condition {
    pub fn new(id: &'static str, slot: Slot) -> Self {
        Condition {
            id,
            slots: vec![slot],
        }
    }

    pub fn bundle(id: &'static str, slots: Vec<Slot>) -> Self {
        Condition { id, slots }
    }
}

/// Evaluates a profile of named conditions, reporting every violated basis
/// tuple with its exact residual.
pub fn run_profile(sys: &MixedSystem, profile: &[Condition]) -> Result<CheckReport, CoreError> {
    let mut report = CheckReport::ok_report();
    for cond in profile {
        for slot in &cond.slots {
            let residual = match *slot {
                Slot::Assoc(t, out) => sys.assoc_residual(t, out)?,
                Slot::Coassoc(input, out) => sys.coassoc_residual(input, out)?,
                Slot::Compat(t, out) => sys.compat_residual(t, out)?,
            };
            for (indices, slice) in residual.group_by_prefix(slot.input_arity()) {
                report.push(Violation {
                    condition: cond.id.to_string(),
                    indices,
                    residual: slice,
                });
            }
        }
    }
    Ok(report)
}

fn c(id: &'static str, slot: Slot) -> Condition {
    Condition::new(id, slot)
}

/// Bimodule axioms for A acted on by H via the harpoons.
pub fn profile_a_bimodule() -> Vec<Condition> {
    vec![
        c("A-BM1", Slot::Assoc([H, H, A], A)),
        c("A-BM2", Slot::Assoc([A, H, H], A)),
        c("A-BM3", Slot::Assoc([H, A, H], A)),
    ]
}

/// Bimodule axioms for H acted on by A via the triangles.
pub fn profile_h_bimodule() -> Vec<Condition> {
    vec![
        c("H-BM1", Slot::Assoc([A, A, H], H)),
        c("H-BM2", Slot::Assoc([H, A, A], H)),
        c("H-BM3", Slot::Assoc([A, H, A], H)),
    ]
}

/// Bimodule-algebra axioms: the action of H respects the product of A.
pub fn profile_a_bimodule_algebra() -> Vec<Condition> {
    vec![
        c("BMA1", Slot::Assoc([H, A, A], A)),
        c("BMA2", Slot::Assoc([A, H, A], A)),
        c("BMA3", Slot::Assoc([A, A, H], A)),
    ]
}

/// Bicomodule axioms for A coacted on by H via phi and psi.
pub fn profile_a_bicomodule() -> Vec<Condition> {
    vec![
        c("A-BC1", Slot::Coassoc(A, [H, H, A])),
        c("A-BC2", Slot::Coassoc(A, [A, H, H])),
        c("A-BC3", Slot::Coassoc(A, [H, A, H])),
    ]
}

/// Bicomodule axioms for H coacted on by A via rho and gamma.
pub fn profile_h_bicomodule() -> Vec<Condition> {
    vec![
        c("H-BC1", Slot::Coassoc(H, [A, A, H])),
        c("H-BC2", Slot::Coassoc(H, [H, A, A])),
        c("H-BC3", Slot::Coassoc(H, [A, H, A])),
    ]
}

/// Bicomodule-coalgebra axioms: the coactions respect the coproduct of A.
pub fn profile_a_bicomodule_coalgebra() -> Vec<Condition> {
    vec![
        c("BCC1", Slot::Coassoc(A, [H, A, A])),
        c("BCC2", Slot::Coassoc(A, [A, A, H])),
        c("BCC3", Slot::Coassoc(A, [A, H, A])),
    ]
}

/// The four weighted Hopf-module compatibilities.
pub fn profile_hopf_module() -> Vec<Condition> {
    vec![
        c("HM1", Slot::Compat([H, A], [H, A])),
        c("HM2", Slot::Compat([A, H], [A, H])),
        c("HM3", Slot::Compat([H, A], [A, H])),
        c("HM4", Slot::Compat([A, H], [H, A])),
    ]
}

/// Comodule-algebra and module-coalgebra laws for a braided object.
pub fn profile_braided_mixed() -> Vec<Condition> {
    vec![
        c("CA1", Slot::Compat([A, A], [H, A])),
        c("CA2", Slot::Compat([A, A], [A, H])),
        c("MC1", Slot::Compat([H, A], [A, A])),
        c("MC2", Slot::Compat([A, H], [A, A])),
    ]
}

/// The braided compatibility on the A side.
pub fn profile_bb1() -> Vec<Condition> {
    vec![c("BB1", Slot::Compat([A, A], [A, A]))]
}

/// The nine compatibility conditions from the biproduct theorem's proof.
pub fn profile_biproduct_proof() -> Vec<Condition> {
    vec![
        c("T3-1", Slot::Compat([A, A], [A, A])),
        c("T3-2", Slot::Compat([H, A], [H, A])),
        c("T3-3", Slot::Compat([A, H], [A, H])),
        c("T3-4", Slot::Compat([H, A], [A, H])),
        c("T3-5", Slot::Compat([A, H], [H, A])),
        c("T3-6", Slot::Compat([A, A], [H, A])),
        c("T3-7", Slot::Compat([A, A], [A, H])),
        c("T3-8", Slot::Compat([H, A], [A, A])),
        c("T3-9", Slot::Compat([A, H], [A, A])),
    ]
}

/// Matched pair of algebras: two mutual bimodules plus the six mixed laws.
pub fn profile_matched_pair_alg() -> Vec<Condition> {
    let mut v = profile_h_bimodule();
    v.extend(profile_a_bimodule());
    v.extend(vec![
        c("AM1", Slot::Assoc([H, A, A], A)),
        c("AM2", Slot::Assoc([A, A, H], A)),
        c("AM3", Slot::Assoc([A, H, H], H)),
        c("AM4", Slot::Assoc([H, H, A], H)),
        c("AM5", Slot::Assoc([A, H, A], A)),
        c("AM6", Slot::Assoc([H, A, H], H)),
    ]);
    v
}

/// Matched pair of coalgebras: two mutual bicomodules plus six mixed laws.
pub fn profile_matched_pair_coalg() -> Vec<Condition> {
    let mut v = profile_a_bicomodule();
    v.extend(profile_h_bicomodule());
    v.extend(vec![
        c("CM1", Slot::Coassoc(A, [H, A, A])),
        c("CM2", Slot::Coassoc(A, [A, A, H])),
        c("CM3", Slot::Coassoc(H, [A, H, H])),
        c("CM4", Slot::Coassoc(H, [H, H, A])),
        c("CM5", Slot::Coassoc(A, [A, H, A])),
        c("CM6", Slot::Coassoc(H, [H, A, H])),
    ]);
    v
}

/// Cocycle laws: twisted associativity on both sides plus both cocycle
/// identities.
pub fn profile_cocycles() -> Vec<Condition> {
    vec![
        c("CC1", Slot::Assoc([H, H, H], A)),
        c("CC2", Slot::Assoc([A, A, A], H)),
        c("CC5", Slot::Assoc([H, H, H], H)),
        c("CC6", Slot::Assoc([A, A, A], A)),
    ]
}

/// Cycle laws: twisted coassociativity on both sides plus both cycle
/// identities.
pub fn profile_cycles() -> Vec<Condition> {
    vec![
        c("CC3", Slot::Coassoc(A, [H, H, H])),
        c("CC4", Slot::Coassoc(H, [A, A, A])),
        c("CC7", Slot::Coassoc(H, [H, H, H])),
        c("CC8", Slot::Coassoc(A, [A, A, A])),
    ]
}

/// The twelve cross-relations of a cocycle cross product system.
pub fn profile_cocycle_cross() -> Vec<Condition> {
    vec![
        c("CP1", Slot::Assoc([A, A, H], H)),
        c("CP2", Slot::Assoc([H, A, A], H)),
        c("CP3", Slot::Assoc([A, H, A], H)),
        c("CP4", Slot::Assoc([A, H, H], H)),
        c("CP5", Slot::Assoc([H, H, A], H)),
        c("CP6", Slot::Assoc([H, A, H], H)),
        c("CP7", Slot::Assoc([H, H, A], A)),
        c("CP8", Slot::Assoc([A, H, H], A)),
        c("CP9", Slot::Assoc([H, A, H], A)),
        c("CP10", Slot::Assoc([H, A, A], A)),
        c("CP11", Slot::Assoc([A, A, H], A)),
        c("CP12", Slot::Assoc([A, H, A], A)),
    ]
}

/// The twelve cross-relations of a cycle cross coproduct system.
pub fn profile_cycle_cross() -> Vec<Condition> {
    vec![
        c("CCP1", Slot::Coassoc(A, [H, A, A])),
        c("CCP2", Slot::Coassoc(A, [A, A, H])),
        c("CCP3", Slot::Coassoc(H, [A, H, H])),
        c("CCP4", Slot::Coassoc(H, [H, H, A])),
        c("CCP5", Slot::Coassoc(A, [A, H, A])),
        c("CCP6", Slot::Coassoc(H, [H, A, H])),
        c("CCP7", Slot::Coassoc(A, [H, H, A])),
        c("CCP8", Slot::Coassoc(A, [A, H, H])),
        c("CCP9", Slot::Coassoc(A, [H, A, H])),
        c("CCP10", Slot::Coassoc(H, [A, A, H])),
        c("CCP11", Slot::Coassoc(H, [H, A, A])),
        c("CCP12", Slot::Coassoc(H, [A, H, A])),
    ]
}

/// The twelve double matched pair conditions (cocycle-free case).
pub fn profile_double_matched_pair() -> Vec<Condition> {
    vec![
        c("DM1", Slot::Compat([A, A], [H, A])),
        c("DM2", Slot::Compat([A, A], [A, H])),
        c("DM3", Slot::Compat([H, H], [A, H])),
        c("DM4", Slot::Compat([H, H], [H, A])),
        c("DM5", Slot::Compat([H, A], [A, A])),
        c("DM6", Slot::Compat([A, H], [A, A])),
        c("DM7", Slot::Compat([A, H], [H, H])),
        c("DM8", Slot::Compat([H, A], [H, H])),
        c("DM9", Slot::Compat([H, A], [H, A])),
        c("DM10", Slot::Compat([A, H], [A, H])),
        c("DM11", Slot::Compat([H, A], [A, H])),
        c("DM12", Slot::Compat([A, H], [H, A])),
    ]
}

/// The fourteen cocycle double matched pair conditions.
pub fn profile_cocycle_double_matched_pair() -> Vec<Condition> {
    vec![
        c("CDM1", Slot::Compat([A, A], [H, A])),
        c("CDM2", Slot::Compat([A, A], [A, H])),
        c("CDM3", Slot::Compat([H, H], [A, H])),
        c("CDM4", Slot::Compat([H, H], [H, A])),
        c("CDM5", Slot::Compat([H, A], [A, A])),
        c("CDM6", Slot::Compat([A, H], [A, A])),
        c("CDM7", Slot::Compat([A, H], [H, H])),
        c("CDM8", Slot::Compat([H, A], [H, H])),
        c("CDM9", Slot::Compat([A, A], [H, H])),
        c("CDM10", Slot::Compat([H, H], [A, A])),
        c("CDM11", Slot::Compat([H, A], [H, A])),
        c("CDM12", Slot::Compat([A, H], [A, H])),
        c("CDM13", Slot::Compat([H, A], [A, H])),
        c("CDM14", Slot::Compat([A, H], [H, A])),
    ]
}

/// The two braided compatibilities of a cocycle braided pair.
pub fn profile_cocycle_braided() -> Vec<Condition> {
    vec![
        c("CBB1", Slot::Compat([A, A], [A, A])),
        c("CBB2", Slot::Compat([H, H], [H, H])),
    ]
}

/// Validity of a type (a1) unified product (complement side plays H).
pub fn profile_a1() -> Vec<Condition> {
    vec![
        c("A1", Slot::Assoc([A, A, H], H)),
        c("A2", Slot::Assoc([H, A, A], H)),
        c("A3", Slot::Assoc([A, H, A], H)),
        c("A4", Slot::Assoc([A, H, H], H)),
        c("A5", Slot::Assoc([H, H, A], H)),
        c("A6", Slot::Assoc([H, A, H], H)),
        c("A7", Slot::Assoc([A, A, A], H)),
        c("A8", Slot::Assoc([H, H, H], H)),
    ]
}

/// Validity of a type (a2) unified product.
pub fn profile_a2() -> Vec<Condition> {
    vec![
        Condition::bundle(
            "B1",
            vec![
                Slot::Assoc([A, A, H], H),
                Slot::Assoc([H, A, A], H),
                Slot::Assoc([A, H, A], H),
            ],
        ),
        c("B2", Slot::Assoc([A, H, H], H)),
        c("B3", Slot::Assoc([H, H, A], H)),
        c("B4", Slot::Assoc([H, A, H], H)),
        c("B5", Slot::Assoc([H, H, A], A)),
        c("B6", Slot::Assoc([A, H, H], A)),
        c("B7", Slot::Assoc([H, A, H], A)),
        c("B8", Slot::Assoc([H, A, A], A)),
        c("B9", Slot::Assoc([A, A, H], A)),
        c("B10", Slot::Assoc([A, H, A], A)),
        c("B11", Slot::Assoc([H, H, H], A)),
        c("B12", Slot::Assoc([H, H, H], H)),
    ]
}

/// Validity of a type (c1) unified coproduct. The final two conditions are
/// the cycle laws on the two pure complement slots, which the coassociativity
/// expansion forces although the published list stops at twelve.
pub fn profile_c1() -> Vec<Condition> {
    vec![
        c("C1", Slot::Coassoc(A, [H, A, A])),
        c("C2", Slot::Coassoc(A, [A, A, H])),
        c("C3", Slot::Coassoc(H, [A, H, H])),
        c("C4", Slot::Coassoc(H, [H, H, A])),
        c("C5", Slot::Coassoc(A, [A, H, A])),
        c("C6", Slot::Coassoc(H, [H, A, H])),
        c("C7", Slot::Coassoc(A, [H, H, A])),
        c("C8", Slot::Coassoc(A, [A, H, H])),
        c("C9", Slot::Coassoc(A, [H, A, H])),
        c("C10", Slot::Coassoc(H, [A, A, H])),
        c("C11", Slot::Coassoc(H, [H, A, A])),
        c("C12", Slot::Coassoc(H, [A, H, A])),
        c("CC3", Slot::Coassoc(A, [H, H, H])),
        c("CC7", Slot::Coassoc(H, [H, H, H])),
    ]
}

/// Validity of a type (c2) unified coproduct.
pub fn profile_c2() -> Vec<Condition> {
    vec![
        c("D1", Slot::Coassoc(H, [A, H, H])),
        c("D2", Slot::Coassoc(H, [H, H, A])),
        c("D3", Slot::Coassoc(H, [H, A, H])),
        c("D4", Slot::Coassoc(H, [A, A, H])),
        c("D5", Slot::Coassoc(H, [H, A, A])),
        c("D6", Slot::Coassoc(H, [A, H, A])),
        c("D7", Slot::Coassoc(H, [A, A, A])),
        c("D8", Slot::Coassoc(H, [H, H, H])),
    ]
}

/// Compatibility conditions for a bialgebra extending datum of type (I).
pub fn profile_e() -> Vec<Condition> {
    vec![
        c("E1", Slot::Compat([A, A], [H, A])),
        c("E2", Slot::Compat([A, A], [A, H])),
        c("E3", Slot::Compat([H, H], [A, H])),
        c("E4", Slot::Compat([H, H], [H, A])),
        c("E5", Slot::Compat([H, A], [A, A])),
        c("E6", Slot::Compat([A, H], [A, A])),
        c("E7", Slot::Compat([A, H], [H, H])),
        c("E8", Slot::Compat([H, A], [H, H])),
        c("E9", Slot::Compat([A, A], [H, H])),
        c("E10", Slot::Compat([H, H], [A, A])),
        c("E11", Slot::Compat([H, A], [H, A])),
        c("E12", Slot::Compat([A, H], [A, H])),
        c("E13", Slot::Compat([H, A], [A, H])),
        c("E14", Slot::Compat([A, H], [H, A])),
        c("E15", Slot::Compat([H, H], [H, H])),
    ]
}

/// Compatibility conditions for a bialgebra extending datum of type (II).
pub fn profile_f() -> Vec<Condition> {
    vec![
        c("F1", Slot::Compat([H, H], [A, H])),
        c("F2", Slot::Compat([H, H], [H, A])),
        c("F3", Slot::Compat([H, A], [A, A])),
        c("F4", Slot::Compat([A, H], [A, A])),
        c("F5", Slot::Compat([A, H], [H, H])),
        c("F6", Slot::Compat([H, A], [H, H])),
        c("F7", Slot::Compat([H, H], [A, A])),
        c("F8", Slot::Compat([H, A], [H, A])),
        c("F9", Slot::Compat([A, H], [A, H])),
        c("F10", Slot::Compat([H, A], [A, H])),
        c("F11", Slot::Compat([A, H], [H, A])),
        c("F12", Slot::Compat([H, H], [H, H])),
    ]
}

/// The special case of type (II) with trivial harpoons.
pub fn profile_g() -> Vec<Condition> {
    profile_f()
        .into_iter()
        .zip([
            "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12",
        ])
        .map(|(cond, id)| Condition { id, ..cond })
        .collect()
}

/// Assembles the direct-sum multiplication on A (+) H from the installed
/// blockwise components. A-indices come first in the sum basis.
pub fn direct_sum_mul(sys: &MixedSystem) -> Result<(Space, StructTensor3), CoreError> {
    let e = direct_sum_space(sys)?;
    let da = sys.a_space().dim();
    let off = |side: Side, i: usize| match side {
        A => i,
        H => da + i,
    };
    let mut mul = StructTensor3::zero_map(&e, &e, &e);
    for in1 in [A, H] {
        for in2 in [A, H] {
            for out in [A, H] {
                if let Some(t) = sys.mul(in1, in2, out) {
                    for (idx, val) in t.tensor().entries() {
                        mul.add_entry(
                            &[off(in1, idx[0]), off(in2, idx[1]), off(out, idx[2])],
                            val.clone(),
                        )?;
                    }
                }
            }
        }
    }
    Ok((e, mul))
}

/// Assembles the direct-sum comultiplication on A (+) H.
pub fn direct_sum_com(sys: &MixedSystem) -> Result<(Space, StructTensor3), CoreError> {
    let e = direct_sum_space(sys)?;
    let da = sys.a_space().dim();
    let off = |side: Side, i: usize| match side {
        A => i,
        H => da + i,
    };
    let mut com = StructTensor3::zero_comap(&e, &e, &e);
    for input in [A, H] {
        for out1 in [A, H] {
            for out2 in [A, H] {
                if let Some(t) = sys.com(input, out1, out2) {
                    for (idx, val) in t.tensor().entries() {
                        com.add_entry(
                            &[off(input, idx[0]), off(out1, idx[1]), off(out2, idx[2])],
                            val.clone(),
                        )?;
                    }
                }
            }
        }
    }
    Ok((e, com))
}

/// The sum space with A basis labels first, then H labels, each qualified by
/// the side name so labels stay distinct. A clashing side name gets a prime.
pub fn direct_sum_space(sys: &MixedSystem) -> Result<Space, CoreError> {
    let a_name = sys.a_space().name().to_string();
    let mut h_name = sys.h_space().name().to_string();
    if h_name == a_name {
        h_name.push('\'');
    }
    let mut labels = Vec::new();
    for l in sys.a_space().labels() {
        labels.push(format!("{a_name}.{l}"));
    }
    for l in sys.h_space().labels() {
        labels.push(format!("{h_name}.{l}"));
    }
    Space::new(&format!("{a_name}+{h_name}"), labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn dual_numbers_mu(s: &Space) -> StructTensor3 {
        let mut mu = StructTensor3::zero_map(s, s, s);
        mu.set_entry(&[0, 0, 0], rat(1)).unwrap();
        mu.set_entry(&[0, 1, 1], rat(1)).unwrap();
        mu.set_entry(&[1, 0, 1], rat(1)).unwrap();
        mu
    }

    #[test]
    fn regular_actions_form_a_matched_pair() {
        let a = Space::with_dim("A", 2).unwrap();
        let h = Space::with_dim("H", 2).unwrap();
        let mut sys = MixedSystem::new(a.clone(), h.clone(), rat(0));
        sys.set(Role::MuA, dual_numbers_mu(&a)).unwrap();
        sys.set(Role::MuH, dual_numbers_mu(&h)).unwrap();
        // H acts on A by "multiplication" through the index identification
        let mut hl = StructTensor3::zero_map(&h, &a, &a);
        let mut hr = StructTensor3::zero_map(&a, &h, &a);
        for (idx, val) in dual_numbers_mu(&a).tensor().entries() {
            hl.set_entry(&[idx[0], idx[1], idx[2]], val.clone()).unwrap();
            hr.set_entry(&[idx[0], idx[1], idx[2]], val.clone()).unwrap();
        }
        sys.set(Role::HarpoonL, hl).unwrap();
        sys.set(Role::HarpoonR, hr).unwrap();
        let report = run_profile(&sys, &profile_matched_pair_alg()).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn perturbed_action_flags_the_right_label() {
        let a = Space::with_dim("A", 2).unwrap();
        let h = Space::with_dim("H", 2).unwrap();
        let mut sys = MixedSystem::new(a.clone(), h.clone(), rat(0));
        sys.set(Role::MuA, dual_numbers_mu(&a)).unwrap();
        sys.set(Role::MuH, dual_numbers_mu(&h)).unwrap();
        // a left action that is not associative over mu_h: x*(),
        // single structure constant with no compensating term
        let mut hl = StructTensor3::zero_map(&h, &a, &a);
        hl.set_entry(&[1, 0, 0], rat(1)).unwrap(); // x |> 1 = 1
        sys.set(Role::HarpoonL, hl).unwrap();
        let report = run_profile(&sys, &profile_matched_pair_alg()).unwrap();
        assert!(!report.ok());
        // (1*x) |> 1 = x |> 1 = 1 but 1 |> (x |> 1) = 0: A-BM1 must fire
        assert!(report.condition_failed("A-BM1"), "{report}");
    }

    #[test]
    fn direct_sum_blocks_land_at_offsets() {
        let a = Space::with_dim("A", 2).unwrap();
        let h = Space::with_dim("H", 1).unwrap();
        let mut sys = MixedSystem::new(a.clone(), h.clone(), rat(0));
        sys.set(Role::MuA, dual_numbers_mu(&a)).unwrap();
        let mut mu_h = StructTensor3::zero_map(&h, &h, &h);
        mu_h.set_entry(&[0, 0, 0], rat(1)).unwrap();
        sys.set(Role::MuH, mu_h).unwrap();
        let (e, mul) = direct_sum_mul(&sys).unwrap();
        assert_eq!(e.dim(), 3);
        assert_eq!(mul.get(0, 1, 1), rat(1));
        assert_eq!(mul.get(2, 2, 2), rat(1));
        assert_eq!(mul.get(1, 1, 1), rat(0));
    }

    #[test]
    fn set_rejects_wrong_side_spaces() {
        let a = Space::with_dim("A", 2).unwrap();
        let h = Space::with_dim("H", 3).unwrap();
        let mut sys = MixedSystem::new(a.clone(), h.clone(), rat(0));
        // harpoon_l must be H (x) A -> A; feed it an A (x) A -> A tensor
        let bad = StructTensor3::zero_map(&a, &a, &a);
        assert!(sys.set(Role::HarpoonL, bad).is_err());
    }
}
