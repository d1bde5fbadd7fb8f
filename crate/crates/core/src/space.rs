//! Based vector spaces and their elements.

use std::fmt;
use std::sync::Arc;

use crate::error::CoreError;
use crate::scalar::Rat;

#[derive(Debug, PartialEq, Eq)]
struct SpaceInner {
    name: String,
    labels: Vec<String>,
}

/// A finite-dimensional vector space with a fixed, labelled basis.
///
/// Labels exist for witness readability only; all computation is index-based.
/// Cloning is cheap (shared pointer) and equality is structural.
#[derive(Clone, Debug)]
pub struct Space(Arc<SpaceInner>);

impl Space {
    pub fn new(name: &str, labels: Vec<String>) -> Result<Self, CoreError> {
        if labels.is_empty() {
            return Err(CoreError::EmptySpace);
        }
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != labels.len() {
            return Err(CoreError::BadLabels);
        }
        Ok(Space(Arc::new(SpaceInner {
            name: name.to_string(),
            labels,
        })))
    }

    /// A space with basis labels `e0..e{dim-1}`.
    pub fn with_dim(name: &str, dim: usize) -> Result<Self, CoreError> {
        if dim == 0 {
            return Err(CoreError::EmptySpace);
        }
        let labels = (0..dim).map(|i| format!("e{i}")).collect();
        Space::new(name, labels)
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Space {}

/// An element of a based space, stored densely.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector {
    space: Space,
    coeffs: Vec<Rat>,
}

impl Vector {
    pub fn zero(space: &Space) -> Self {
        Vector {
            space: space.clone(),
            coeffs: vec![Rat::zero(); space.dim()],
        }
    }

    pub fn new(space: &Space, coeffs: Vec<Rat>) -> Result<Self, CoreError> {
        if coeffs.len() != space.dim() {
            return Err(CoreError::DimensionMismatch(format!(
                "vector has {} coefficients for a {}-dimensional space",
                coeffs.len(),
                space.dim()
            )));
        }
        Ok(Vector {
            space: space.clone(),
            coeffs,
        })
    }

    pub fn basis(space: &Space, i: usize) -> Self {
        let mut v = Vector::zero(space);
        v.coeffs[i] = Rat::one();
        v
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn set(&mut self, i: usize, value: Rat) {
        self.coeffs[i] = value;
    }

    pub fn add_scaled(&mut self, other: &Vector, factor: &Rat) {
        for (c, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c += factor * o;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn scaled(&self, factor: &Rat) -> Vector {
        Vector {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl std::ops::Add for Vector {
    type Output = Vector;
    fn add(mut self, rhs: Vector) -> Vector {
        self.add_scaled(&rhs, &Rat::one());
        self
    }
}

impl std::ops::Sub for Vector {
    type Output = Vector;
    fn sub(mut self, rhs: Vector) -> Vector {
        self.add_scaled(&rhs, &-Rat::one());
        self
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.nonzero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", c, self.space.label(i))?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
