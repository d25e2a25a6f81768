use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::mrel::Multirelation;
use crate::universe::{is_identifier, Universe};

use super::RESERVED;

/// Named multirelations over one shared universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Environment {
    universe: Universe,
    bindings: BTreeMap<String, Multirelation>,
}

impl Environment {
    pub fn new(universe: &Universe) -> Self {
        Environment { universe: universe.clone(), bindings: BTreeMap::new() }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Binds or rebinds `name`, returning the previous value.
    pub fn bind(&mut self, name: &str, value: Multirelation) -> Result<Option<Multirelation>> {
        if !is_identifier(name) || RESERVED.contains(&name) {
            return Err(Error::Invalid(format!("`{name}` cannot be used as a variable name")));
        }
        if value.universe() != &self.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.bindings.insert(name.to_string(), value))
    }

    pub fn lookup(&self, name: &str) -> Result<&Multirelation> {
        self.bindings.get(name).ok_or_else(|| Error::Unbound(name.to_string()))
    }

    pub fn get(&self, name: &str) -> Option<&Multirelation> {
        self.bindings.get(name)
    }

    pub fn remove(&mut self, name: &str) -> Option<Multirelation> {
        self.bindings.remove(name)
    }

    /// Bindings in name order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Multirelation)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }
}
