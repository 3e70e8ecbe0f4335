//! Ordered collections of groups searched by the classifier and the checkers.
//!
//! File format: one group spec per line, `#` starts a comment, blank lines are
//! ignored. Entries are kept in ascending group order, ties broken by spec text.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;

use crate::counting::{Caps, GroupContext};
use crate::error::{Error, Result};
use crate::groups::GroupSpec;

/// The corpus shipped with the crate.
pub const DEFAULT_CORPUS: &str = include_str!("../data/default_corpus.txt");

pub struct CorpusEntry {
    spec: GroupSpec,
    text: String,
    order: BigUint,
    context: OnceLock<Result<Arc<GroupContext>>>,
}

impl CorpusEntry {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }
}

pub struct Corpus {
    entries: Vec<CorpusEntry>,
    caps: Caps,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with_caps(text, Caps::default())
    }

    pub fn parse_with_caps(text: &str, caps: Caps) -> Result<Self> {
        let mut specs = Vec::new();
        let mut seen = HashSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let spec: GroupSpec = line.parse().map_err(|e: Error| Error::Corpus {
                line: i + 1,
                msg: e.to_string(),
            })?;
            if !seen.insert(spec.to_string()) {
                return Err(Error::Corpus {
                    line: i + 1,
                    msg: format!("duplicate entry {spec}"),
                });
            }
            specs.push(spec);
        }
        Ok(Self::from_specs(specs, caps))
    }

    /// Default corpus with default caps.
    pub fn default_corpus() -> Self {
        Self::parse(DEFAULT_CORPUS).expect("the shipped corpus is valid")
    }

    pub fn from_specs(specs: Vec<GroupSpec>, caps: Caps) -> Self {
        let mut entries: Vec<CorpusEntry> = specs
            .into_iter()
            .map(|spec| CorpusEntry {
                text: spec.to_string(),
                order: spec.order(),
                spec,
                context: OnceLock::new(),
            })
            .collect();
        entries.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.text.cmp(&b.text)));
        Corpus { entries, caps }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &CorpusEntry {
        &self.entries[i]
    }

    /// Built group for entry `i`, shared between callers.
    pub fn context(&self, i: usize) -> Result<Arc<GroupContext>> {
        let entry = &self.entries[i];
        entry
            .context
            .get_or_init(|| GroupContext::from_spec(&entry.spec, self.caps).map(Arc::new))
            .clone()
    }

    /// Specs in corpus order.
    pub fn specs(&self) -> impl Iterator<Item = &GroupSpec> + '_ {
        self.entries.iter().map(|e| &e.spec)
    }
}
