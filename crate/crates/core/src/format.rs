//! The structure-file format: one self-describing JSON envelope for every
//! kind of object the workbench consumes or emits.
//!
//! Rationals serialize as "p/q" or "p" strings. Tensors serialize as lists of
//! sparse records `[i, j, ..., "p/q"]` with 0-based indices. Spaces are
//! listed in role order: the base (or carrier) space first, the second space
//! (base of a braided object, complement of an extension) after it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bialgebra::{Algebra, Coalgebra, WeightedInfBialgebra};
use crate::error::CoreError;
use crate::extending::{
    EnumeratedDatum, ExtDatumA1, ExtDatumA2, ExtDatumBialgI, ExtDatumBialgII, ExtDatumC1,
    ExtDatumC2,
};
use crate::hopf::BraidedObject;
use crate::mixed::Role;
use crate::products::{
    CocycleBraidedPair, CocycleSystemData, CycleCoSystemData, MatchedPairAlgData,
    MatchedPairCoalgData,
};
use crate::qt::RMatrix;
use crate::scalar::Rat;
use crate::space::{Space, Vector};
use crate::tensor::{Orientation, StructTensor3, Tensor};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid structure file: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceDecl {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

/// Validity summary a construction command embeds in its output file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportSummary {
    pub ok: bool,
    pub failed_conditions: Vec<String>,
}

/// The JSON envelope. Tensor records are heterogeneous arrays (indices then
/// one rational string), so they pass through `serde_json::Value`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureFile {
    pub format_version: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub spaces: Vec<SpaceDecl>,
    #[serde(default)]
    pub tensors: BTreeMap<String, Vec<Vec<serde_json::Value>>>,
    /// Present on constructed outputs; ignored when reading.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportSummary>,
}

/// Every kind of object a structure file can carry.
#[derive(Clone, Debug)]
pub enum Structure {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
    Bialgebra(WeightedInfBialgebra),
    RMatrix(RMatrix),
    Braided(BraidedObject),
    MatchedPair {
        alg: MatchedPairAlgData,
        coalg: MatchedPairCoalgData,
        lambda: Rat,
    },
    CocycleSystem(CocycleSystemData),
    CycleCosystem(CycleCoSystemData),
    CocycleBraidedPair(CocycleBraidedPair),
    ExtendingDatum(EnumeratedDatum),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Coalgebra(_) => "coalgebra",
            Structure::Bialgebra(_) => "bialgebra",
            Structure::RMatrix(_) => "rmatrix",
            Structure::Braided(_) => "braided",
            Structure::MatchedPair { .. } => "matched-pair",
            Structure::CocycleSystem(_) => "cocycle-system",
            Structure::CycleCosystem(_) => "cycle-cosystem",
            Structure::CocycleBraidedPair(_) => "cocycle-braided-pair",
            Structure::ExtendingDatum(_) => "extending-datum",
        }
    }
}

fn record_to_entry(record: &[serde_json::Value], arity: usize) -> Result<(Vec<usize>, Rat), FormatError> {
    if record.len() != arity + 1 {
        return Err(FormatError::Invalid(format!(
            "tensor record must hold {arity} indices and one value, got {record:?}"
        )));
    }
    let mut idx = Vec::with_capacity(arity);
    for v in &record[..arity] {
        let i = v
            .as_u64()
            .ok_or_else(|| FormatError::Invalid(format!("index must be a nonnegative integer, got {v}")))?;
        idx.push(i as usize);
    }
    let value = match &record[arity] {
        serde_json::Value::String(s) => s
            .parse::<Rat>()
            .map_err(|e| FormatError::Invalid(e.to_string()))?,
        serde_json::Value::Number(n) if n.is_i64() => Rat::from_int(n.as_i64().unwrap()),
        other => {
            return Err(FormatError::Invalid(format!(
                "tensor value must be a rational string, got {other}"
            )))
        }
    };
    Ok((idx, value))
}

fn entry_to_record(idx: &[usize], value: &Rat) -> Vec<serde_json::Value> {
    let mut rec: Vec<serde_json::Value> = idx
        .iter()
        .map(|&i| serde_json::Value::from(i as u64))
        .collect();
    rec.push(serde_json::Value::from(value.to_string()));
    rec
}

struct FileReader<'a> {
    file: &'a StructureFile,
    a: Space,
    h: Option<Space>,
    used: std::cell::RefCell<Vec<String>>,
}

impl<'a> FileReader<'a> {
    fn new(file: &'a StructureFile, two_spaces: bool) -> Result<Self, FormatError> {
        if file.format_version != FORMAT_VERSION {
            return Err(FormatError::Invalid(format!(
                "unrecognized format version {}",
                file.format_version
            )));
        }
        let want = if two_spaces { 2 } else { 1 };
        if file.spaces.len() != want {
            return Err(FormatError::Invalid(format!(
                "kind {} needs {} space(s), found {}",
                file.kind,
                want,
                file.spaces.len()
            )));
        }
        let mk = |d: &SpaceDecl| -> Result<Space, FormatError> {
            let labels = if d.labels.is_empty() {
                (0..d.dim).map(|i| format!("e{i}")).collect()
            } else {
                d.labels.clone()
            };
            if labels.len() != d.dim {
                return Err(FormatError::Invalid(format!(
                    "space {} declares dim {} but {} labels",
                    d.name,
                    d.dim,
                    labels.len()
                )));
            }
            Ok(Space::new(&d.name, labels)?)
        };
        let a = mk(&file.spaces[0])?;
        let h = if two_spaces {
            Some(mk(&file.spaces[1])?)
        } else {
            None
        };
        Ok(FileReader {
            file,
            a,
            h,
            used: Default::default(),
        })
    }

    fn side(&self, which: crate::mixed::Side) -> &Space {
        match which {
            crate::mixed::Side::A => &self.a,
            crate::mixed::Side::H => self.h.as_ref().unwrap_or(&self.a),
        }
    }

    fn tensor3(&self, role: Role) -> Result<StructTensor3, FormatError> {
        let axes = role.axes();
        let spaces: Vec<Space> = axes.iter().map(|s| self.side(*s).clone()).collect();
        let mut t = Tensor::zero(spaces);
        if let Some(records) = self.file.tensors.get(role.name()) {
            self.used.borrow_mut().push(role.name().to_string());
            for rec in records {
                let (idx, val) = record_to_entry(rec, 3)?;
                t.add_entry(&idx, val)?;
            }
        }
        Ok(StructTensor3::new(
            t,
            match role.orientation() {
                Orientation::Map => Orientation::Map,
                Orientation::Comap => Orientation::Comap,
            },
        )?)
    }

    fn require(&self, role: Role) -> Result<StructTensor3, FormatError> {
        if !self.file.tensors.contains_key(role.name()) {
            return Err(FormatError::Invalid(format!(
                "kind {} requires tensor role `{}`",
                self.file.kind,
                role.name()
            )));
        }
        self.tensor3(role)
    }

    fn unit(&self) -> Result<Option<Vector>, FormatError> {
        let Some(records) = self.file.tensors.get("unit") else {
            return Ok(None);
        };
        self.used.borrow_mut().push("unit".to_string());
        let mut v = Vector::zero(&self.a);
        for rec in records {
            let (idx, val) = record_to_entry(rec, 1)?;
            if idx[0] >= self.a.dim() {
                return Err(FormatError::Invalid("unit index out of range".into()));
            }
            v.set(idx[0], val);
        }
        Ok(Some(v))
    }

    fn element2(&self, name: &str) -> Result<Tensor, FormatError> {
        let mut t = Tensor::zero(vec![self.a.clone(), self.a.clone()]);
        if let Some(records) = self.file.tensors.get(name) {
            self.used.borrow_mut().push(name.to_string());
            for rec in records {
                let (idx, val) = record_to_entry(rec, 2)?;
                t.add_entry(&idx, val)?;
            }
        }
        Ok(t)
    }

    fn lambda(&self) -> Result<Rat, FormatError> {
        match &self.file.lambda {
            Some(s) => s
                .parse::<Rat>()
                .map_err(|e| FormatError::Invalid(e.to_string())),
            None => Ok(Rat::zero()),
        }
    }

    fn finish(self) -> Result<(), FormatError> {
        let used = self.used.borrow();
        for key in self.file.tensors.keys() {
            if !used.contains(key) {
                return Err(FormatError::Invalid(format!(
                    "tensor role `{key}` is not part of kind {}",
                    self.file.kind
                )));
            }
        }
        Ok(())
    }
}

/// Parses and validates a structure file into a typed structure.
pub fn read_structure(file: &StructureFile) -> Result<Structure, FormatError> {
    use crate::mixed::Side::{A, H};
    match file.kind.as_str() {
        "algebra" => {
            let r = FileReader::new(file, false)?;
            let mu = r.require(Role::MuA)?;
            let unit = r.unit()?;
            let alg = Algebra::new(r.a.clone(), mu, unit)?;
            r.finish()?;
            Ok(Structure::Algebra(alg))
        }
        "coalgebra" => {
            let r = FileReader::new(file, false)?;
            let delta = r.require(Role::DeltaA)?;
            let coalg = Coalgebra::new(r.a.clone(), delta)?;
            r.finish()?;
            Ok(Structure::Coalgebra(coalg))
        }
        "bialgebra" => {
            let r = FileReader::new(file, false)?;
            let mu = r.require(Role::MuA)?;
            let delta = r.require(Role::DeltaA)?;
            let unit = r.unit()?;
            let lambda = r.lambda()?;
            let alg = Algebra::new(r.a.clone(), mu, unit)?;
            let coalg = Coalgebra::new(r.a.clone(), delta)?;
            r.finish()?;
            Ok(Structure::Bialgebra(WeightedInfBialgebra::new(
                alg, coalg, lambda,
            )?))
        }
        "rmatrix" => {
            let r = FileReader::new(file, false)?;
            let mu = r.require(Role::MuA)?;
            let unit = r.unit()?.ok_or_else(|| {
                FormatError::Invalid("rmatrix kind requires a unit".into())
            })?;
            let elem = r.element2("r")?;
            let lambda = r.lambda()?;
            let alg = Algebra::new(r.a.clone(), mu, Some(unit))?;
            let rm = RMatrix::new(alg, elem, lambda)?;
            r.finish()?;
            Ok(Structure::RMatrix(rm))
        }
        "braided" => {
            // spaces: [carrier V, base H]
            let r = FileReader::new(file, true)?;
            let mu_h = r.require(Role::MuH)?;
            let delta_h = r.require(Role::DeltaH)?;
            let lambda = r.lambda()?;
            let base_alg = Algebra::new(r.side(H).clone(), mu_h, None)?;
            let base_coalg = Coalgebra::new(r.side(H).clone(), delta_h)?;
            let base = WeightedInfBialgebra::new(base_alg, base_coalg, lambda)?;
            let obj = BraidedObject::new(
                base,
                r.side(A).clone(),
                r.require(Role::MuA)?,
                r.require(Role::DeltaA)?,
                r.tensor3(Role::HarpoonL)?,
                r.tensor3(Role::HarpoonR)?,
                r.tensor3(Role::Phi)?,
                r.tensor3(Role::Psi)?,
            )?;
            r.finish()?;
            Ok(Structure::Braided(obj))
        }
        "matched-pair" => {
            let r = FileReader::new(file, true)?;
            let (alg, coalg) = read_pairs(&r)?;
            let lambda = r.lambda()?;
            r.finish()?;
            Ok(Structure::MatchedPair { alg, coalg, lambda })
        }
        "cocycle-system" => {
            let r = FileReader::new(file, true)?;
            let a = Algebra::new(r.side(A).clone(), r.require(Role::MuA)?, None)?;
            let h = Algebra::new(r.side(H).clone(), r.require(Role::MuH)?, None)?;
            let mut pair = MatchedPairAlgData::zero(a, h);
            pair.harpoon_l = r.tensor3(Role::HarpoonL)?;
            pair.harpoon_r = r.tensor3(Role::HarpoonR)?;
            pair.tri_l = r.tensor3(Role::TriL)?;
            pair.tri_r = r.tensor3(Role::TriR)?;
            let mut d = CocycleSystemData::from_pair(pair);
            d.sigma = r.tensor3(Role::Sigma)?;
            d.theta = r.tensor3(Role::Theta)?;
            r.finish()?;
            Ok(Structure::CocycleSystem(d))
        }
        "cycle-cosystem" => {
            let r = FileReader::new(file, true)?;
            let a = Coalgebra::new(r.side(A).clone(), r.require(Role::DeltaA)?)?;
            let h = Coalgebra::new(r.side(H).clone(), r.require(Role::DeltaH)?)?;
            let mut pair = MatchedPairCoalgData::zero(a, h);
            pair.phi = r.tensor3(Role::Phi)?;
            pair.psi = r.tensor3(Role::Psi)?;
            pair.rho = r.tensor3(Role::Rho)?;
            pair.gamma = r.tensor3(Role::Gamma)?;
            let mut d = CycleCoSystemData::from_pair(pair);
            d.cap_p = r.tensor3(Role::CapP)?;
            d.cap_q = r.tensor3(Role::CapQ)?;
            r.finish()?;
            Ok(Structure::CycleCosystem(d))
        }
        "cocycle-braided-pair" => {
            let r = FileReader::new(file, true)?;
            let (alg, coalg) = read_pairs(&r)?;
            let mut system = CocycleSystemData::from_pair(alg);
            system.sigma = r.tensor3(Role::Sigma)?;
            system.theta = r.tensor3(Role::Theta)?;
            let mut cosystem = CycleCoSystemData::from_pair(coalg);
            cosystem.cap_p = r.tensor3(Role::CapP)?;
            cosystem.cap_q = r.tensor3(Role::CapQ)?;
            let lambda = r.lambda()?;
            r.finish()?;
            Ok(Structure::CocycleBraidedPair(CocycleBraidedPair::new(
                system, cosystem, lambda,
            )?))
        }
        "extending-datum" => read_extending(file),
        other => Err(FormatError::Invalid(format!("unknown kind `{other}`"))),
    }
}

fn read_pairs(
    r: &FileReader<'_>,
) -> Result<(MatchedPairAlgData, MatchedPairCoalgData), FormatError> {
    use crate::mixed::Side::{A, H};
    let a = Algebra::new(r.side(A).clone(), r.require(Role::MuA)?, None)?;
    let h = Algebra::new(r.side(H).clone(), r.require(Role::MuH)?, None)?;
    let mut alg = MatchedPairAlgData::zero(a, h);
    alg.harpoon_l = r.tensor3(Role::HarpoonL)?;
    alg.harpoon_r = r.tensor3(Role::HarpoonR)?;
    alg.tri_l = r.tensor3(Role::TriL)?;
    alg.tri_r = r.tensor3(Role::TriR)?;
    let ca = Coalgebra::new(r.side(A).clone(), r.require(Role::DeltaA)?)?;
    let ch = Coalgebra::new(r.side(H).clone(), r.require(Role::DeltaH)?)?;
    let mut coalg = MatchedPairCoalgData::zero(ca, ch);
    coalg.phi = r.tensor3(Role::Phi)?;
    coalg.psi = r.tensor3(Role::Psi)?;
    coalg.rho = r.tensor3(Role::Rho)?;
    coalg.gamma = r.tensor3(Role::Gamma)?;
    Ok((alg, coalg))
}

fn read_extending(file: &StructureFile) -> Result<Structure, FormatError> {
    use crate::mixed::Side::{A, H};
    let r = FileReader::new(file, true)?;
    let variant = file
        .variant
        .as_deref()
        .ok_or_else(|| FormatError::Invalid("extending-datum requires a variant".into()))?;
    let v = r.side(H).clone();
    let datum = match variant {
        "a1" => {
            let alg = Algebra::new(r.side(A).clone(), r.require(Role::MuA)?, None)?;
            EnumeratedDatum::A1(ExtDatumA1 {
                alg,
                v,
                tri_l: r.tensor3(Role::TriL)?,
                tri_r: r.tensor3(Role::TriR)?,
                theta: r.tensor3(Role::Theta)?,
                mul_v: r.require(Role::MuH)?,
            })
        }
        "a2" => {
            let alg = Algebra::new(r.side(A).clone(), r.require(Role::MuA)?, None)?;
            EnumeratedDatum::A2(ExtDatumA2 {
                alg,
                v,
                harpoon_l: r.tensor3(Role::HarpoonL)?,
                harpoon_r: r.tensor3(Role::HarpoonR)?,
                tri_l: r.tensor3(Role::TriL)?,
                tri_r: r.tensor3(Role::TriR)?,
                sigma: r.tensor3(Role::Sigma)?,
                mul_v: r.require(Role::MuH)?,
            })
        }
        "c1" => {
            let coalg = Coalgebra::new(r.side(A).clone(), r.require(Role::DeltaA)?)?;
            EnumeratedDatum::C1(ExtDatumC1 {
                coalg,
                v,
                phi: r.tensor3(Role::Phi)?,
                psi: r.tensor3(Role::Psi)?,
                rho: r.tensor3(Role::Rho)?,
                gamma: r.tensor3(Role::Gamma)?,
                cap_p: r.tensor3(Role::CapP)?,
                delta_v: r.require(Role::DeltaH)?,
            })
        }
        "c2" => {
            let coalg = Coalgebra::new(r.side(A).clone(), r.require(Role::DeltaA)?)?;
            EnumeratedDatum::C2(ExtDatumC2 {
                coalg,
                v,
                rho: r.tensor3(Role::Rho)?,
                gamma: r.tensor3(Role::Gamma)?,
                cap_q: r.tensor3(Role::CapQ)?,
                delta_v: r.require(Role::DeltaH)?,
            })
        }
        "I" => {
            let alg = Algebra::new(r.side(A).clone(), r.require(Role::MuA)?, None)?;
            let coalg = Coalgebra::new(r.side(A).clone(), r.require(Role::DeltaA)?)?;
            let bialg = WeightedInfBialgebra::new(alg, coalg, r.lambda()?)?;
            EnumeratedDatum::I(ExtDatumBialgI {
                bialg,
                v,
                tri_l: r.tensor3(Role::TriL)?,
                tri_r: r.tensor3(Role::TriR)?,
                theta: r.tensor3(Role::Theta)?,
                mul_v: r.require(Role::MuH)?,
                phi: r.tensor3(Role::Phi)?,
                psi: r.tensor3(Role::Psi)?,
                rho: r.tensor3(Role::Rho)?,
                gamma: r.tensor3(Role::Gamma)?,
                cap_p: r.tensor3(Role::CapP)?,
                delta_v: r.require(Role::DeltaH)?,
            })
        }
        "II" | "special" => {
            let alg = Algebra::new(r.side(A).clone(), r.require(Role::MuA)?, None)?;
            let coalg = Coalgebra::new(r.side(A).clone(), r.require(Role::DeltaA)?)?;
            let bialg = WeightedInfBialgebra::new(alg, coalg, r.lambda()?)?;
            let d = ExtDatumBialgII {
                bialg,
                v,
                harpoon_l: r.tensor3(Role::HarpoonL)?,
                harpoon_r: r.tensor3(Role::HarpoonR)?,
                tri_l: r.tensor3(Role::TriL)?,
                tri_r: r.tensor3(Role::TriR)?,
                sigma: r.tensor3(Role::Sigma)?,
                mul_v: r.require(Role::MuH)?,
                rho: r.tensor3(Role::Rho)?,
                gamma: r.tensor3(Role::Gamma)?,
                cap_q: r.tensor3(Role::CapQ)?,
                delta_v: r.require(Role::DeltaH)?,
            };
            if variant == "special" && !d.harpoons_trivial() {
                return Err(FormatError::Invalid(
                    "the special variant requires trivial harpoons".into(),
                ));
            }
            EnumeratedDatum::II(d)
        }
        other => {
            return Err(FormatError::Invalid(format!(
                "unknown extending variant `{other}`"
            )))
        }
    };
    r.finish()?;
    Ok(Structure::ExtendingDatum(datum))
}

fn space_decl(s: &Space) -> SpaceDecl {
    SpaceDecl {
        name: s.name().to_string(),
        dim: s.dim(),
        labels: s.labels().to_vec(),
    }
}

fn tensor_records(t: &Tensor) -> Vec<Vec<serde_json::Value>> {
    t.entries().map(|(idx, val)| entry_to_record(idx, val)).collect()
}

fn put(map: &mut BTreeMap<String, Vec<Vec<serde_json::Value>>>, name: &str, t: &StructTensor3) {
    if !t.is_zero() {
        map.insert(name.to_string(), tensor_records(t.tensor()));
    }
}

fn put_required(
    map: &mut BTreeMap<String, Vec<Vec<serde_json::Value>>>,
    name: &str,
    t: &StructTensor3,
) {
    map.insert(name.to_string(), tensor_records(t.tensor()));
}

/// Serializes a typed structure into the canonical envelope.
pub fn write_structure(s: &Structure) -> StructureFile {
    let mut tensors: BTreeMap<String, Vec<Vec<serde_json::Value>>> = BTreeMap::new();
    let mut lambda = None;
    let mut variant = None;
    let spaces: Vec<SpaceDecl>;
    match s {
        Structure::Algebra(a) => {
            spaces = vec![space_decl(a.space())];
            put_required(&mut tensors, "mu", a.mu());
            if let Some(u) = a.unit() {
                tensors.insert("unit".into(), tensor_records(&Tensor::from_vector(u)));
            }
        }
        Structure::Coalgebra(c) => {
            spaces = vec![space_decl(c.space())];
            put_required(&mut tensors, "delta", c.delta());
        }
        Structure::Bialgebra(b) => {
            spaces = vec![space_decl(b.space())];
            put_required(&mut tensors, "mu", b.alg().mu());
            put_required(&mut tensors, "delta", b.coalg().delta());
            if let Some(u) = b.alg().unit() {
                tensors.insert("unit".into(), tensor_records(&Tensor::from_vector(u)));
            }
            lambda = Some(b.lambda().to_string());
        }
        Structure::RMatrix(rm) => {
            spaces = vec![space_decl(rm.alg().space())];
            put_required(&mut tensors, "mu", rm.alg().mu());
            if let Some(u) = rm.alg().unit() {
                tensors.insert("unit".into(), tensor_records(&Tensor::from_vector(u)));
            }
            tensors.insert("r".into(), tensor_records(rm.r()));
            lambda = Some(rm.lambda().to_string());
        }
        Structure::Braided(obj) => {
            spaces = vec![space_decl(&obj.carrier), space_decl(obj.base.space())];
            put_required(&mut tensors, "mu", &obj.mul);
            put_required(&mut tensors, "delta", &obj.comul);
            put_required(&mut tensors, "mu_h", obj.base.alg().mu());
            put_required(&mut tensors, "delta_h", obj.base.coalg().delta());
            put(&mut tensors, "harpoon_l", &obj.act_left);
            put(&mut tensors, "harpoon_r", &obj.act_right);
            put(&mut tensors, "phi", &obj.coact_left);
            put(&mut tensors, "psi", &obj.coact_right);
            lambda = Some(obj.base.lambda().to_string());
        }
        Structure::MatchedPair { alg, coalg, lambda: l } => {
            spaces = vec![space_decl(alg.a.space()), space_decl(alg.h.space())];
            put_required(&mut tensors, "mu", alg.a.mu());
            put_required(&mut tensors, "mu_h", alg.h.mu());
            put_required(&mut tensors, "delta", coalg.a.delta());
            put_required(&mut tensors, "delta_h", coalg.h.delta());
            put(&mut tensors, "harpoon_l", &alg.harpoon_l);
            put(&mut tensors, "harpoon_r", &alg.harpoon_r);
            put(&mut tensors, "tri_l", &alg.tri_l);
            put(&mut tensors, "tri_r", &alg.tri_r);
            put(&mut tensors, "phi", &coalg.phi);
            put(&mut tensors, "psi", &coalg.psi);
            put(&mut tensors, "rho", &coalg.rho);
            put(&mut tensors, "gamma", &coalg.gamma);
            lambda = Some(l.to_string());
        }
        Structure::CocycleSystem(d) => {
            spaces = vec![space_decl(d.pair.a.space()), space_decl(d.pair.h.space())];
            put_required(&mut tensors, "mu", d.pair.a.mu());
            put_required(&mut tensors, "mu_h", d.pair.h.mu());
            put(&mut tensors, "harpoon_l", &d.pair.harpoon_l);
            put(&mut tensors, "harpoon_r", &d.pair.harpoon_r);
            put(&mut tensors, "tri_l", &d.pair.tri_l);
            put(&mut tensors, "tri_r", &d.pair.tri_r);
            put(&mut tensors, "sigma", &d.sigma);
            put(&mut tensors, "theta", &d.theta);
        }
        Structure::CycleCosystem(d) => {
            spaces = vec![space_decl(d.pair.a.space()), space_decl(d.pair.h.space())];
            put_required(&mut tensors, "delta", d.pair.a.delta());
            put_required(&mut tensors, "delta_h", d.pair.h.delta());
            put(&mut tensors, "phi", &d.pair.phi);
            put(&mut tensors, "psi", &d.pair.psi);
            put(&mut tensors, "rho", &d.pair.rho);
            put(&mut tensors, "gamma", &d.pair.gamma);
            put(&mut tensors, "P", &d.cap_p);
            put(&mut tensors, "Q", &d.cap_q);
        }
        Structure::CocycleBraidedPair(p) => {
            spaces = vec![
                space_decl(p.system.pair.a.space()),
                space_decl(p.system.pair.h.space()),
            ];
            put_required(&mut tensors, "mu", p.system.pair.a.mu());
            put_required(&mut tensors, "mu_h", p.system.pair.h.mu());
            put_required(&mut tensors, "delta", p.cosystem.pair.a.delta());
            put_required(&mut tensors, "delta_h", p.cosystem.pair.h.delta());
            put(&mut tensors, "harpoon_l", &p.system.pair.harpoon_l);
            put(&mut tensors, "harpoon_r", &p.system.pair.harpoon_r);
            put(&mut tensors, "tri_l", &p.system.pair.tri_l);
            put(&mut tensors, "tri_r", &p.system.pair.tri_r);
            put(&mut tensors, "sigma", &p.system.sigma);
            put(&mut tensors, "theta", &p.system.theta);
            put(&mut tensors, "phi", &p.cosystem.pair.phi);
            put(&mut tensors, "psi", &p.cosystem.pair.psi);
            put(&mut tensors, "rho", &p.cosystem.pair.rho);
            put(&mut tensors, "gamma", &p.cosystem.pair.gamma);
            put(&mut tensors, "P", &p.cosystem.cap_p);
            put(&mut tensors, "Q", &p.cosystem.cap_q);
            lambda = Some(p.lambda.to_string());
        }
        Structure::ExtendingDatum(d) => {
            variant = Some(d.type_tag().to_string());
            match d {
                EnumeratedDatum::A1(d) => {
                    spaces = vec![space_decl(d.alg.space()), space_decl(&d.v)];
                    put_required(&mut tensors, "mu", d.alg.mu());
                    put_required(&mut tensors, "mu_h", &d.mul_v);
                    put(&mut tensors, "tri_l", &d.tri_l);
                    put(&mut tensors, "tri_r", &d.tri_r);
                    put(&mut tensors, "theta", &d.theta);
                }
                EnumeratedDatum::A2(d) => {
                    spaces = vec![space_decl(d.alg.space()), space_decl(&d.v)];
                    put_required(&mut tensors, "mu", d.alg.mu());
                    put_required(&mut tensors, "mu_h", &d.mul_v);
                    put(&mut tensors, "harpoon_l", &d.harpoon_l);
                    put(&mut tensors, "harpoon_r", &d.harpoon_r);
                    put(&mut tensors, "tri_l", &d.tri_l);
                    put(&mut tensors, "tri_r", &d.tri_r);
                    put(&mut tensors, "sigma", &d.sigma);
                }
                EnumeratedDatum::C1(d) => {
                    spaces = vec![space_decl(d.coalg.space()), space_decl(&d.v)];
                    put_required(&mut tensors, "delta", d.coalg.delta());
                    put_required(&mut tensors, "delta_h", &d.delta_v);
                    put(&mut tensors, "phi", &d.phi);
                    put(&mut tensors, "psi", &d.psi);
                    put(&mut tensors, "rho", &d.rho);
                    put(&mut tensors, "gamma", &d.gamma);
                    put(&mut tensors, "P", &d.cap_p);
                }
                EnumeratedDatum::C2(d) => {
                    spaces = vec![space_decl(d.coalg.space()), space_decl(&d.v)];
                    put_required(&mut tensors, "delta", d.coalg.delta());
                    put_required(&mut tensors, "delta_h", &d.delta_v);
                    put(&mut tensors, "rho", &d.rho);
                    put(&mut tensors, "gamma", &d.gamma);
                    put(&mut tensors, "Q", &d.cap_q);
                }
                EnumeratedDatum::I(d) => {
                    spaces = vec![space_decl(d.bialg.space()), space_decl(&d.v)];
                    put_required(&mut tensors, "mu", d.bialg.alg().mu());
                    put_required(&mut tensors, "delta", d.bialg.coalg().delta());
                    put_required(&mut tensors, "mu_h", &d.mul_v);
                    put_required(&mut tensors, "delta_h", &d.delta_v);
                    put(&mut tensors, "tri_l", &d.tri_l);
                    put(&mut tensors, "tri_r", &d.tri_r);
                    put(&mut tensors, "theta", &d.theta);
                    put(&mut tensors, "phi", &d.phi);
                    put(&mut tensors, "psi", &d.psi);
                    put(&mut tensors, "rho", &d.rho);
                    put(&mut tensors, "gamma", &d.gamma);
                    put(&mut tensors, "P", &d.cap_p);
                    lambda = Some(d.bialg.lambda().to_string());
                }
                EnumeratedDatum::II(d) => {
                    spaces = vec![space_decl(d.bialg.space()), space_decl(&d.v)];
                    put_required(&mut tensors, "mu", d.bialg.alg().mu());
                    put_required(&mut tensors, "delta", d.bialg.coalg().delta());
                    put_required(&mut tensors, "mu_h", &d.mul_v);
                    put_required(&mut tensors, "delta_h", &d.delta_v);
                    put(&mut tensors, "harpoon_l", &d.harpoon_l);
                    put(&mut tensors, "harpoon_r", &d.harpoon_r);
                    put(&mut tensors, "tri_l", &d.tri_l);
                    put(&mut tensors, "tri_r", &d.tri_r);
                    put(&mut tensors, "sigma", &d.sigma);
                    put(&mut tensors, "rho", &d.rho);
                    put(&mut tensors, "gamma", &d.gamma);
                    put(&mut tensors, "Q", &d.cap_q);
                    lambda = Some(d.bialg.lambda().to_string());
                }
            }
        }
    }
    StructureFile {
        format_version: FORMAT_VERSION.to_string(),
        kind: s.kind().to_string(),
        variant,
        lambda,
        spaces,
        tensors,
        report: None,
    }
}

/// Parses a JSON document into a typed structure.
pub fn parse_json(text: &str) -> Result<(StructureFile, Structure), FormatError> {
    let file: StructureFile = serde_json::from_str(text)?;
    let s = read_structure(&file)?;
    Ok((file, s))
}

/// Canonical JSON for an envelope.
pub fn to_json(file: &StructureFile) -> String {
    serde_json::to_string_pretty(file).expect("serializable") + "\n"
}
