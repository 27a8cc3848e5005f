//! Group specification files (TOML, one group per file).
//!
//! ```toml
//! kind = "permutation"          # or "cayley", "pcp", "family"
//! label = "S3"                  # optional
//! generators = [[1, 2, 0], [1, 0, 2]]
//! ```
//!
//! * `cayley`: `rows = [[0, 1], [1, 0]]`.
//! * `pcp`: `prime`, `relative_orders`, optional `powers` entries
//!   `{ generator = i, word = [..] }` and `commutators` entries
//!   `{ j = .., i = .., word = [..] }` meaning `[g_j, g_i] = word`, with words
//!   given as exponent vectors.
//! * `family`: `name` is either a family (`phi5`, `gamma3`, `abelian`) with a
//!   prime `p`, or a catalog label (`D16`, `Q8`, `Heis27`) with no `p`.
//!
//! Unknown fields are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{Error, Result};
use crate::families::{stem_group, Family};
use crate::group::{build_from_cayley, build_from_pcp, build_from_permutations, GroupTable, PcPresentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerRelation {
    pub generator: usize,
    pub word: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommutatorRelation {
    pub j: usize,
    pub i: usize,
    pub word: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Permutation {
        #[serde(default)]
        label: Option<String>,
        generators: Vec<Vec<usize>>,
    },
    Cayley {
        #[serde(default)]
        label: Option<String>,
        rows: Vec<Vec<usize>>,
    },
    Pcp {
        #[serde(default)]
        label: Option<String>,
        prime: u64,
        relative_orders: Vec<u32>,
        #[serde(default)]
        powers: Vec<PowerRelation>,
        #[serde(default)]
        commutators: Vec<CommutatorRelation>,
    },
    Family {
        #[serde(default)]
        label: Option<String>,
        name: String,
        #[serde(default)]
        p: Option<u64>,
    },
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("group specs serialize")
    }

    fn label(&self) -> Option<&str> {
        match self {
            GroupSpec::Permutation { label, .. }
            | GroupSpec::Cayley { label, .. }
            | GroupSpec::Pcp { label, .. }
            | GroupSpec::Family { label, .. } => label.as_deref(),
        }
    }

    pub fn build(&self) -> Result<GroupTable> {
        let mut g = match self {
            GroupSpec::Permutation { generators, .. } => build_from_permutations(generators)?,
            GroupSpec::Cayley { rows, .. } => build_from_cayley(rows)?,
            GroupSpec::Pcp {
                prime,
                relative_orders,
                powers,
                commutators,
                ..
            } => {
                let d = relative_orders.len();
                let mut pc = PcPresentation::new(*prime, relative_orders.clone());
                for rel in powers {
                    if rel.generator >= d {
                        return Err(Error::InconsistentPresentation(format!(
                            "power relation for missing generator g{}",
                            rel.generator
                        )));
                    }
                    pc.powers[rel.generator] = rel.word.clone();
                }
                pc.commutators = commutators.iter().map(|c| (c.j, c.i, c.word.clone())).collect();
                build_from_pcp(&pc)?
            }
            GroupSpec::Family { name, p, .. } => match (name.parse::<Family>(), p) {
                (Ok(family), Some(p)) => stem_group(family, *p)?,
                (Ok(_), None) => {
                    return Err(Error::InvalidParameters(format!("family {name} needs a prime `p`")))
                }
                (Err(_), None) => catalog::lookup(name)?,
                (Err(_), Some(_)) => {
                    return Err(Error::InvalidParameters(format!(
                        "{name} is not a family, so `p` does not apply"
                    )))
                }
            },
        };
        if let Some(label) = self.label() {
            g.set_label(label.to_string());
        }
        Ok(g)
    }
}
