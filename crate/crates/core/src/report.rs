use serde::Serialize;

/// Outcome of one named check.  A failed check carries the first witness
/// tuple found in the deterministic scan order, as element (or character)
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub witness: Option<Vec<usize>>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: Vec<usize>) -> Self {
        Check { name: name.into(), witness: Some(witness) }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        Check { name: name.into(), witness }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// An ordered list of checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}
