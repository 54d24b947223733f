//! Ring declarations: variables, weights, coefficient field.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// `K[x_1, ..., x_n]`
    Commutative,
    /// `K<X_1, ..., X_n>`
    Free,
}

/// A polynomial ring over a field with a positive weight grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    kind: RingKind,
    vars: Vec<String>,
    weights: Vec<u32>,
    field: Field,
    homog_var: Option<usize>,
}

impl RingContext {
    pub fn new(kind: RingKind, vars: Vec<String>, weights: Vec<u32>, field: Field) -> Result<Self> {
        if vars.len() != weights.len() {
            return Err(Error::Argument(format!(
                "{} variables but {} weights",
                vars.len(),
                weights.len()
            )));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(Error::Argument(format!("duplicate variable {v}")));
            }
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Argument(format!("variable {} has weight 0", vars[i])));
        }
        if let Field::Prime(p) = field {
            Field::prime(p)?;
        }
        Ok(RingContext { kind, vars, weights, field, homog_var: None })
    }

    /// Unit-weight ring on the given names.
    pub fn standard(kind: RingKind, vars: &[&str], field: Field) -> Result<Arc<Self>> {
        let names = vars.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let weights = vec![1; names.len()];
        Ok(Arc::new(RingContext::new(kind, names, weights, field)?))
    }

    /// Marks variable `index` as the homogenizing variable; its weight must be 1.
    pub fn with_homog_var(mut self, index: usize) -> Result<Self> {
        if index >= self.vars.len() {
            return Err(Error::Argument(format!("no variable with index {index}")));
        }
        if self.weights[index] != 1 {
            return Err(Error::Argument(format!(
                "homogenizing variable {} must have weight 1, not {}",
                self.vars[index], self.weights[index]
            )));
        }
        self.homog_var = Some(index);
        Ok(self)
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn is_commutative(&self) -> bool {
        self.kind == RingKind::Commutative
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn homog_var(&self) -> Option<usize> {
        self.homog_var
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The same ring with variable `index` removed.
    pub(crate) fn without_var(&self, index: usize) -> RingContext {
        let mut vars = self.vars.clone();
        let mut weights = self.weights.clone();
        vars.remove(index);
        weights.remove(index);
        RingContext { kind: self.kind, vars, weights, field: self.field, homog_var: None }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self.kind {
            RingKind::Commutative => ("[", "]"),
            RingKind::Free => ("<", ">"),
        };
        write!(f, "{}{}{}{}", self.field, open, self.vars.join(", "), close)
    }
}

pub(crate) fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same(a: &Arc<RingContext>, b: &Arc<RingContext>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::Context(format!("{a} vs {b}")))
    }
}
