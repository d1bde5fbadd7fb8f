//! Sparse multi-index tensors of exact rationals and the contraction calculus.
//!
//! A `Tensor` is a canonical sparse map from index tuples to nonzero rationals.
//! No explicit zero entry is ever stored, so tensor equality is entry-map
//! equality. All operations are pure; values are immutable after construction.

use std::collections::BTreeMap;

use crate::error::CoreError;
use crate::scalar::Rat;
use crate::space::{Space, Vector};

#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    spaces: Vec<Space>,
    entries: BTreeMap<Vec<usize>, Rat>,
}

impl Tensor {
    pub fn zero(spaces: Vec<Space>) -> Self {
        Tensor {
            spaces,
            entries: BTreeMap::new(),
        }
    }

    pub fn scalar_one() -> Self {
        let mut t = Tensor::zero(vec![]);
        t.entries.insert(vec![], Rat::one());
        t
    }

    pub fn arity(&self) -> usize {
        self.spaces.len()
    }

    pub fn spaces(&self) -> &[Space] {
        &self.spaces
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Rat)> {
        self.entries.iter()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: &[usize]) -> Rat {
        self.entries.get(index).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_index(&self, index: &[usize]) -> Result<(), CoreError> {
        if index.len() != self.arity() {
            return Err(CoreError::IndexOutOfRange {
                index: index.to_vec(),
                dim: self.arity(),
            });
        }
        for (pos, (&i, s)) in index.iter().zip(&self.spaces).enumerate() {
            if i >= s.dim() {
                return Err(CoreError::IndexOutOfRange {
                    index: index.to_vec(),
                    dim: self.spaces[pos].dim(),
                });
            }
        }
        Ok(())
    }

    /// Adds `value` at `index`, dropping the entry if the sum cancels to zero.
    pub fn add_entry(&mut self, index: &[usize], value: Rat) -> Result<(), CoreError> {
        self.check_index(index)?;
        if value.is_zero() {
            return Ok(());
        }
        match self.entries.get_mut(index) {
            Some(existing) => {
                *existing += value;
                if existing.is_zero() {
                    self.entries.remove(index);
                }
            }
            None => {
                self.entries.insert(index.to_vec(), value);
            }
        }
        Ok(())
    }

    pub fn set_entry(&mut self, index: &[usize], value: Rat) -> Result<(), CoreError> {
        self.check_index(index)?;
        if value.is_zero() {
            self.entries.remove(index);
        } else {
            self.entries.insert(index.to_vec(), value);
        }
        Ok(())
    }

    pub fn from_entries(
        spaces: Vec<Space>,
        entries: impl IntoIterator<Item = (Vec<usize>, Rat)>,
    ) -> Result<Self, CoreError> {
        let mut t = Tensor::zero(spaces);
        for (index, value) in entries {
            t.add_entry(&index, value)?;
        }
        Ok(t)
    }

    /// Kronecker product: arity adds, entries multiply pairwise.
    pub fn tensor_product(&self, other: &Tensor) -> Tensor {
        let mut spaces = self.spaces.clone();
        spaces.extend(other.spaces.iter().cloned());
        let mut out = Tensor::zero(spaces);
        for (i1, v1) in &self.entries {
            for (i2, v2) in &other.entries {
                let mut idx = i1.clone();
                idx.extend_from_slice(i2);
                out.entries.insert(idx, v1 * v2);
            }
        }
        out
    }

    /// Sums over a shared index pair; arity drops by two.
    pub fn contract(&self, axis_a: usize, axis_b: usize) -> Result<Tensor, CoreError> {
        let n = self.arity();
        if axis_a >= n || axis_b >= n || axis_a == axis_b {
            return Err(CoreError::DimensionMismatch(format!(
                "cannot contract axes {axis_a},{axis_b} of arity-{n} tensor"
            )));
        }
        if self.spaces[axis_a] != self.spaces[axis_b] {
            return Err(CoreError::DimensionMismatch(format!(
                "contracted axes live in different spaces ({} vs {})",
                self.spaces[axis_a].name(),
                self.spaces[axis_b].name()
            )));
        }
        let spaces = self
            .spaces
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != axis_a && *i != axis_b)
            .map(|(_, s)| s.clone())
            .collect();
        let mut out = Tensor::zero(spaces);
        for (idx, val) in &self.entries {
            if idx[axis_a] != idx[axis_b] {
                continue;
            }
            let rest: Vec<usize> = idx
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != axis_a && *i != axis_b)
                .map(|(_, &v)| v)
                .collect();
            out.add_entry(&rest, val.clone())?;
        }
        Ok(out)
    }

    /// Relabels axes: result axis `i` is the original axis `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor, CoreError> {
        let n = self.arity();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(CoreError::BadPermutation {
                perm: perm.to_vec(),
                arity: n,
            });
        }
        let spaces = perm.iter().map(|&p| self.spaces[p].clone()).collect();
        let mut out = Tensor::zero(spaces);
        for (idx, val) in &self.entries {
            let new_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            out.entries.insert(new_idx, val.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor, CoreError> {
        if self.spaces != other.spaces {
            return Err(CoreError::DimensionMismatch(
                "tensor addition over different space lists".into(),
            ));
        }
        let mut out = self.clone();
        for (idx, val) in &other.entries {
            out.add_entry(idx, val.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor, CoreError> {
        self.add(&other.scaled(&-Rat::one()))
    }

    pub fn scaled(&self, factor: &Rat) -> Tensor {
        if factor.is_zero() {
            return Tensor::zero(self.spaces.clone());
        }
        let mut out = Tensor::zero(self.spaces.clone());
        for (idx, val) in &self.entries {
            out.entries.insert(idx.clone(), val * factor);
        }
        out
    }

    /// The identity map on `space` as an arity-2 tensor.
    pub fn identity(space: &Space) -> Tensor {
        let mut t = Tensor::zero(vec![space.clone(), space.clone()]);
        for i in 0..space.dim() {
            t.entries.insert(vec![i, i], Rat::one());
        }
        t
    }

    pub fn from_vector(v: &Vector) -> Tensor {
        let mut t = Tensor::zero(vec![v.space().clone()]);
        for (i, c) in v.nonzero() {
            t.entries.insert(vec![i], c.clone());
        }
        t
    }

    /// Contracts one axis against a vector, eliminating that axis.
    pub fn apply_vector(&self, axis: usize, v: &Vector) -> Result<Tensor, CoreError> {
        if axis >= self.arity() || self.spaces[axis] != *v.space() {
            return Err(CoreError::DimensionMismatch(
                "vector application axis mismatch".into(),
            ));
        }
        let spaces = self
            .spaces
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != axis)
            .map(|(_, s)| s.clone())
            .collect();
        let mut out = Tensor::zero(spaces);
        for (idx, val) in &self.entries {
            let c = v.coeff(idx[axis]);
            if c.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != axis)
                .map(|(_, &v)| v)
                .collect();
            out.add_entry(&rest, val * c)?;
        }
        Ok(out)
    }

    /// Groups entries by the leading `prefix_len` axes.
    pub fn group_by_prefix(&self, prefix_len: usize) -> BTreeMap<Vec<usize>, Tensor> {
        let tail_spaces: Vec<Space> = self.spaces[prefix_len..].to_vec();
        let mut out: BTreeMap<Vec<usize>, Tensor> = BTreeMap::new();
        for (idx, val) in &self.entries {
            let (head, tail) = idx.split_at(prefix_len);
            out.entry(head.to_vec())
                .or_insert_with(|| Tensor::zero(tail_spaces.clone()))
                .add_entry(tail, val.clone())
                .expect("in-range");
        }
        out
    }
}

impl std::fmt::Debug for Tensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tensor[")?;
        for (i, s) in self.spaces.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{}", s.name())?;
        }
        write!(f, "]{{")?;
        for (i, (idx, val)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{idx:?}: {val}")?;
        }
        write!(f, "}}")
    }
}

/// Whether an arity-3 tensor encodes a bilinear map or a co-map.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    /// Two inputs, one output: entry (i, j, k) is the coefficient of basis
    /// vector k in the image of the basis pair (i, j).
    Map,
    /// One input, two outputs: entry (i, j, k) is the coefficient of
    /// e_j (x) e_k in the image of e_i.
    Comap,
}

/// An arity-3 structure-constant tensor with a declared orientation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructTensor3 {
    tensor: Tensor,
    orientation: Orientation,
}

impl StructTensor3 {
    pub fn new(tensor: Tensor, orientation: Orientation) -> Result<Self, CoreError> {
        if tensor.arity() != 3 {
            return Err(CoreError::DimensionMismatch(format!(
                "structure tensor must have arity 3, got {}",
                tensor.arity()
            )));
        }
        Ok(StructTensor3 {
            tensor,
            orientation,
        })
    }

    /// A zero bilinear map `in1 (x) in2 -> out`.
    pub fn zero_map(in1: &Space, in2: &Space, out: &Space) -> Self {
        StructTensor3 {
            tensor: Tensor::zero(vec![in1.clone(), in2.clone(), out.clone()]),
            orientation: Orientation::Map,
        }
    }

    /// A zero co-map `input -> out1 (x) out2`.
    pub fn zero_comap(input: &Space, out1: &Space, out2: &Space) -> Self {
        StructTensor3 {
            tensor: Tensor::zero(vec![input.clone(), out1.clone(), out2.clone()]),
            orientation: Orientation::Comap,
        }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    pub fn expect_map(&self) -> Result<(), CoreError> {
        match self.orientation {
            Orientation::Map => Ok(()),
            Orientation::Comap => Err(CoreError::WrongOrientation {
                expected: "map",
                got: "comap",
            }),
        }
    }

    pub fn expect_comap(&self) -> Result<(), CoreError> {
        match self.orientation {
            Orientation::Comap => Ok(()),
            Orientation::Map => Err(CoreError::WrongOrientation {
                expected: "comap",
                got: "map",
            }),
        }
    }

    pub fn set_entry(&mut self, index: &[usize; 3], value: Rat) -> Result<(), CoreError> {
        self.tensor.set_entry(index.as_slice(), value)
    }

    pub fn add_entry(&mut self, index: &[usize; 3], value: Rat) -> Result<(), CoreError> {
        self.tensor.add_entry(index.as_slice(), value)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Rat {
        self.tensor.get(&[i, j, k])
    }

    /// For a map: the image of the basis pair (i, j).
    pub fn map_basis(&self, i: usize, j: usize) -> Result<Vector, CoreError> {
        self.expect_map()?;
        let out_space = &self.tensor.spaces()[2];
        let mut v = Vector::zero(out_space);
        for (idx, val) in self.tensor.entries() {
            if idx[0] == i && idx[1] == j {
                v.set(idx[2], val.clone());
            }
        }
        Ok(v)
    }

    /// For a map: the image of two general elements.
    pub fn map_apply(&self, u: &Vector, v: &Vector) -> Result<Vector, CoreError> {
        self.expect_map()?;
        let out_space = &self.tensor.spaces()[2];
        let mut out = Vector::zero(out_space);
        for (idx, val) in self.tensor.entries() {
            let cu = u.coeff(idx[0]);
            if cu.is_zero() {
                continue;
            }
            let cv = v.coeff(idx[1]);
            if cv.is_zero() {
                continue;
            }
            let mut add = val * cu;
            add *= cv.clone();
            let cur = out.coeff(idx[2]) + &add;
            out.set(idx[2], cur);
        }
        Ok(out)
    }

    /// For a comap: the image of basis vector i, as an arity-2 tensor.
    pub fn comap_basis(&self, i: usize) -> Result<Tensor, CoreError> {
        self.expect_comap()?;
        let spaces = vec![self.tensor.spaces()[1].clone(), self.tensor.spaces()[2].clone()];
        let mut out = Tensor::zero(spaces);
        for (idx, val) in self.tensor.entries() {
            if idx[0] == i {
                out.add_entry(&[idx[1], idx[2]], val.clone())?;
            }
        }
        Ok(out)
    }

    /// For a comap: the image of a general element.
    pub fn comap_apply(&self, v: &Vector) -> Result<Tensor, CoreError> {
        self.expect_comap()?;
        self.tensor.apply_vector(0, v)
    }

    pub fn in1(&self) -> &Space {
        &self.tensor.spaces()[0]
    }

    pub fn in2(&self) -> &Space {
        &self.tensor.spaces()[1]
    }

    pub fn out(&self) -> &Space {
        &self.tensor.spaces()[2]
    }
}

/// `second(first(u, v), w)`: structure tensor of the left-grouped composite,
/// with axes (u, v, w, out).
pub fn compose_left(first: &StructTensor3, second: &StructTensor3) -> Result<Tensor, CoreError> {
    first.expect_map()?;
    second.expect_map()?;
    // axes: [u, v, z, z', w, out] -> contract (2, 3)
    first.tensor().tensor_product(second.tensor()).contract(2, 3)
}

/// `second(u, first(v, w))`: structure tensor of the right-grouped composite,
/// with axes (u, v, w, out).
pub fn compose_right(first: &StructTensor3, second: &StructTensor3) -> Result<Tensor, CoreError> {
    first.expect_map()?;
    second.expect_map()?;
    // axes: [v, w, z, u, z', out] -> contract (2, 4) -> [v, w, u, out]
    let c = first.tensor().tensor_product(second.tensor()).contract(2, 4)?;
    c.permute(&[2, 0, 1, 3])
}

/// `(id (x) second) first`: comap composite on the second output leg,
/// axes (in, out1, out2, out3).
pub fn cocompose_right(first: &StructTensor3, second: &StructTensor3) -> Result<Tensor, CoreError> {
    first.expect_comap()?;
    second.expect_comap()?;
    // first: [in, a, z]; second: [z', b, c] -> contract (2, 3) -> [in, a, b, c]
    first.tensor().tensor_product(second.tensor()).contract(2, 3)
}

/// `(second (x) id) first`: comap composite on the first output leg,
/// axes (in, out1, out2, out3).
pub fn cocompose_left(first: &StructTensor3, second: &StructTensor3) -> Result<Tensor, CoreError> {
    first.expect_comap()?;
    second.expect_comap()?;
    // first: [in, z, c]; second: [z', a, b] -> contract (1, 3) -> [in, c, a, b]
    let t = first.tensor().tensor_product(second.tensor()).contract(1, 3)?;
    t.permute(&[0, 2, 3, 1])
}

/// `comap(mul(u, v))`: axes (u, v, out1, out2).
pub fn comap_of_product(mul: &StructTensor3, comap: &StructTensor3) -> Result<Tensor, CoreError> {
    mul.expect_map()?;
    comap.expect_comap()?;
    // mul: [u, v, z]; comap: [z', a, b] -> contract (2, 3) -> [u, v, a, b]
    mul.tensor().tensor_product(comap.tensor()).contract(2, 3)
}

/// `u . comap(v)`: multiply the first output leg of `comap(v)` by `u` on the
/// left. Axes (u, v, out1, out2).
pub fn mul_first_leg(comap: &StructTensor3, mul: &StructTensor3) -> Result<Tensor, CoreError> {
    comap.expect_comap()?;
    mul.expect_map()?;
    // comap: [v, z, b]; mul: [u, z', a] -> contract (1, 4) -> [v, b, u, a]
    let t = comap.tensor().tensor_product(mul.tensor()).contract(1, 4)?;
    t.permute(&[2, 0, 3, 1])
}

/// `comap(u) . v`: multiply the second output leg of `comap(u)` by `v` on the
/// right. Axes (u, v, out1, out2).
pub fn mul_second_leg(comap: &StructTensor3, mul: &StructTensor3) -> Result<Tensor, CoreError> {
    comap.expect_comap()?;
    mul.expect_map()?;
    // comap: [u, a, z]; mul: [z', v, b] -> contract (2, 3) -> [u, a, v, b]
    let t = comap.tensor().tensor_product(mul.tensor()).contract(2, 3)?;
    t.permute(&[0, 2, 1, 3])
}
