use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// Variables, coefficient field and monomial order of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

pub type Ring = Arc<RingContext>;

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Build a validated ring context.
pub fn make_ring<S: AsRef<str>>(names: &[S], field: Field, order: MonomialOrder) -> Result<Ring> {
    if names.is_empty() {
        return Err(Error::NoVariables);
    }
    let mut vars: Vec<String> = Vec::with_capacity(names.len());
    for n in names {
        let n = n.as_ref();
        if !is_identifier(n) {
            return Err(Error::InvalidVariable(n.to_string()));
        }
        if vars.iter().any(|v| v == n) {
            return Err(Error::DuplicateVariable(n.to_string()));
        }
        vars.push(n.to_string());
    }
    if let Field::Prime(p) = field {
        Field::prime(p)?;
    }
    if let MonomialOrder::Block(k) = order {
        if k == 0 || k > vars.len() {
            return Err(Error::InvalidOrder(format!("block({k}) on {} variables", vars.len())));
        }
    }
    Ok(Arc::new(RingContext { vars, field, order }))
}

impl RingContext {
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingContext { vars: self.vars.clone(), field: self.field.clone(), order })
    }

    /// Same field, given variables (assumed valid and distinct) and order.
    pub(crate) fn with_vars(&self, vars: Vec<String>, order: MonomialOrder) -> Ring {
        Arc::new(RingContext { vars, field: self.field.clone(), order })
    }

    /// A variable name not used by this ring.
    pub(crate) fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.vars.contains(&name) {
            name.push('_');
        }
        name
    }

    /// Same variables and field: polynomials can be moved between the two.
    pub fn compatible(&self, other: &RingContext) -> bool {
        self.vars == other.vars && self.field == other.field
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] order {}", self.field, self.vars.join(","), self.order)
    }
}
