//! Named pass/fail checks collected into a list.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckList {
    pub items: Vec<CheckItem>,
}

impl CheckList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.push(name, passed, String::new());
    }

    pub fn extend(&mut self, prefix: &str, other: CheckList) {
        for mut item in other.items {
            item.name = format!("{prefix}{}", item.name);
            self.items.push(item);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collects_and_prefixes() {
        let mut a = CheckList::new();
        a.check("x", true);
        let mut b = CheckList::new();
        b.push("y", false, "bad");
        a.extend("sub.", b);
        assert!(!a.all_passed());
        assert_eq!(a.failures().next().unwrap().name, "sub.y");
        assert_eq!(a.len(), 2);
    }
}
