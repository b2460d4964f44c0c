use std::sync::Arc;

use super::monomial::{TermOrder, MAX_VARS};
use crate::error::{usage, Error, Result};
use crate::field::PrimeField;

/// A polynomial ring `F_p[x_1..x_n]` together with its term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    names: Vec<String>,
    order: TermOrder,
}

impl Ring {
    pub fn new(field: PrimeField, names: Vec<String>, order: TermOrder) -> Result<Arc<Ring>> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return usage(format!("bad variable name `{name}`"));
            }
            if names[..i].contains(name) {
                return usage(format!("duplicate variable name `{name}`"));
            }
        }
        Ok(Arc::new(Ring { field, names, order }))
    }

    /// `F_p[z_1..z_n]` with degrevlex.
    pub fn standard(p: u64, n: usize) -> Result<Arc<Ring>> {
        Ring::new(PrimeField::new(p)?, (1..=n).map(|i| format!("z_{i}")).collect(), TermOrder::DegRevLex)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: TermOrder) -> Arc<Ring> {
        Arc::new(Ring { order, ..self.clone() })
    }

    /// This ring with extra variables appended at the end.
    pub fn extended(&self, extra: &[&str], order: TermOrder) -> Result<Arc<Ring>> {
        let mut names = self.names.clone();
        for e in extra {
            let mut name = e.to_string();
            while names.contains(&name) {
                name.push('_');
            }
            names.push(name);
        }
        Ring::new(self.field, names, order)
    }

    /// Same field and order with variables renamed by `perm`
    /// (variable `i` moves to slot `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Arc<Ring> {
        let mut names = self.names.clone();
        for (i, &j) in perm.iter().enumerate() {
            names[j] = self.names[i].clone();
        }
        Arc::new(Ring { names, ..self.clone() })
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
