use std::collections::{BTreeMap, HashMap};

use super::Rational;

/// Dense small-integer handle for an indeterminate.
pub type VarId = u32;

/// Maps variable names to dense ids `0..len`.
#[derive(Debug, Clone, Default)]
pub struct VariableTable {
    names: Vec<String>,
    lookup: HashMap<String, VarId>,
}

impl VariableTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id for `name`, registering it on first use.
    pub fn var(&mut self, name: &str) -> VarId {
        if let Some(&id) = self.lookup.get(name) {
            return id;
        }
        let id = self.names.len() as VarId;
        self.names.push(name.to_string());
        self.lookup.insert(name.to_string(), id);
        id
    }

    /// Registers `prefix1 .. prefix{len}` and returns their ids in order.
    pub fn vector(&mut self, prefix: &str, len: usize) -> Vec<VarId> {
        (1..=len).map(|i| self.var(&format!("{prefix}{i}"))).collect()
    }

    pub fn id(&self, name: &str) -> Option<VarId> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, id: VarId) -> Option<&str> {
        self.names.get(id as usize).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// A point at which polynomials are evaluated.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Assignment {
    values: BTreeMap<VarId, Rational>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, var: VarId, value: Rational) {
        self.values.insert(var, value);
    }

    pub fn get(&self, var: VarId) -> Option<&Rational> {
        self.values.get(&var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, &Rational)> {
        self.values.iter().map(|(&k, v)| (k, v))
    }
}

impl FromIterator<(VarId, Rational)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (VarId, Rational)>>(iter: I) -> Self {
        Self { values: iter.into_iter().collect() }
    }
}
