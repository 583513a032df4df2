use std::collections::HashMap;

use crate::error::FrameworkError;
use crate::set::ArgumentSet;

/// An abstract argumentation framework: arguments plus a binary attack relation.
///
/// Arguments are interned to dense indices `0..n` in declaration order.
/// The attack relation is a set; adjacency in both directions is
/// precomputed. Values are immutable once built and can be shared freely
/// between threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentationFramework {
    names: Vec<String>,
    index: HashMap<String, usize>,
    attacks: Vec<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
    self_attacking: Vec<bool>,
}

/// Checks that `name` can be written in every supported file format.
pub fn validate_name(name: &str) -> Result<(), FrameworkError> {
    if name.is_empty()
        || name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ','))
    {
        return Err(FrameworkError::InvalidName(name.to_string()));
    }
    Ok(())
}

impl ArgumentationFramework {
    /// Builds a framework from argument names and attacks given by index.
    ///
    /// Repeated attacks collapse silently.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        attacks: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, FrameworkError> {
        let mut builder = FrameworkBuilder::new();
        for name in names {
            builder.add_argument(name)?;
        }
        for (from, to) in attacks {
            builder.add_attack(from, to)?;
        }
        builder.build()
    }

    /// Builds a framework from names and attacks given by name.
    pub fn from_named(names: &[&str], attacks: &[(&str, &str)]) -> Result<Self, FrameworkError> {
        let mut builder = FrameworkBuilder::new();
        for name in names {
            builder.add_argument(*name)?;
        }
        for (from, to) in attacks {
            builder.add_attack_by_name(from, to)?;
        }
        builder.build()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false: frameworks have at least one argument.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Attacks as sorted `(attacker, target)` pairs.
    pub fn attacks(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub fn attackers(&self, a: usize) -> &[usize] {
        &self.attackers[a]
    }

    pub fn targets(&self, a: usize) -> &[usize] {
        &self.targets[a]
    }

    pub fn attacks_arg(&self, from: usize, to: usize) -> bool {
        self.targets[from].binary_search(&to).is_ok()
    }

    pub fn is_self_attacking(&self, a: usize) -> bool {
        self.self_attacking[a]
    }

    pub fn arguments(&self) -> ArgumentSet {
        ArgumentSet::full(self.len())
    }

    /// Resolves a set of argument names to an [`ArgumentSet`].
    pub fn set_of<'a>(
        &self,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Result<ArgumentSet, FrameworkError> {
        names
            .into_iter()
            .map(|n| {
                self.index_of(n)
                    .ok_or_else(|| FrameworkError::UnknownArgument(n.to_string()))
            })
            .collect()
    }

    /// Member names of `set`, in index order.
    pub fn names_of(&self, set: &ArgumentSet) -> Vec<&str> {
        set.iter().map(|a| self.name(a)).collect()
    }

    /// Member names of `set`, sorted lexicographically.
    pub fn sorted_names_of(&self, set: &ArgumentSet) -> Vec<&str> {
        let mut names = self.names_of(set);
        names.sort_unstable();
        names
    }
}

/// Incremental construction of an [`ArgumentationFramework`].
#[derive(Debug, Default)]
pub struct FrameworkBuilder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    attacks: Vec<(usize, usize)>,
}

impl FrameworkBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_argument(&mut self, name: impl Into<String>) -> Result<usize, FrameworkError> {
        let name = name.into();
        validate_name(&name)?;
        if self.index.contains_key(&name) {
            return Err(FrameworkError::DuplicateArgument(name));
        }
        let idx = self.names.len();
        self.index.insert(name.clone(), idx);
        self.names.push(name);
        Ok(idx)
    }

    pub fn add_attack(&mut self, from: usize, to: usize) -> Result<(), FrameworkError> {
        let n = self.names.len();
        if from >= n || to >= n {
            return Err(FrameworkError::AttackOutOfRange { from, to, len: n });
        }
        self.attacks.push((from, to));
        Ok(())
    }

    pub fn add_attack_by_name(&mut self, from: &str, to: &str) -> Result<(), FrameworkError> {
        let lookup = |n: &str| {
            self.index
                .get(n)
                .copied()
                .ok_or_else(|| FrameworkError::UnknownArgument(n.to_string()))
        };
        let (f, t) = (lookup(from)?, lookup(to)?);
        self.attacks.push((f, t));
        Ok(())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn build(self) -> Result<ArgumentationFramework, FrameworkError> {
        let n = self.names.len();
        if n == 0 {
            return Err(FrameworkError::Empty);
        }
        let mut attacks = self.attacks;
        attacks.sort_unstable();
        attacks.dedup();
        let mut attackers = vec![Vec::new(); n];
        let mut targets = vec![Vec::new(); n];
        let mut self_attacking = vec![false; n];
        for &(f, t) in &attacks {
            targets[f].push(t);
            attackers[t].push(f);
            if f == t {
                self_attacking[f] = true;
            }
        }
        for list in &mut attackers {
            list.sort_unstable();
        }
        Ok(ArgumentationFramework {
            names: self.names,
            index: self.index,
            attacks,
            attackers,
            targets,
            self_attacking,
        })
    }
}
