use std::collections::HashMap;

use crate::error::{Error, Result};

use super::poly::Poly;

/// Number and names of the coordinate variables `x0 > x1 > ... > xn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new(nvars: usize) -> Self {
        Ring {
            names: (0..nvars).map(|i| format!("x{}", i)).collect(),
        }
    }

    pub fn with_names(names: Vec<String>) -> Self {
        Ring { names }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of the last variable `x_n`.
    pub fn last(&self) -> usize {
        self.names.len() - 1
    }

    /// The ring with one more variable appended at the bottom of the order.
    pub fn extend(&self) -> Ring {
        let mut names = self.names.clone();
        names.push(format!("x{}", names.len()));
        Ring { names }
    }

    /// The ring with the last variable removed.
    pub fn section(&self) -> Ring {
        Ring {
            names: self.names[..self.names.len().saturating_sub(1)].to_vec(),
        }
    }

    /// Rejects polynomials that use variables outside the ring.
    pub fn check<R: super::Coefficient>(&self, polys: &[Poly<R>]) -> Result<()> {
        for p in polys {
            if p.span() > self.nvars() {
                return Err(Error::RingMismatch {
                    expected: self.nvars(),
                    found: p.span(),
                });
            }
        }
        Ok(())
    }
}

/// Parameter names, indexed by position; parameter `i` is variable `i` of the
/// coefficient polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Alphabet { names, index }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn push(&mut self, name: String) -> usize {
        let i = self.names.len();
        self.index.insert(name.clone(), i);
        self.names.push(name);
        i
    }
}
