//! JSON input format for groups.
//!
//! Two shapes are accepted:
//!
//! ```json
//! {"degree": 3, "generators": [[1,2,0],[1,0,2]]}
//! {"cayley": [[0,1],[1,0]]}
//! ```
//!
//! Generator images are 0-based. Element indexing of the resulting group
//! follows the deterministic breadth-first enumeration rule, so the same
//! file always produces the same table.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::Permutation;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupInput {
    Generators { degree: usize, generators: Vec<Vec<usize>> },
    Cayley { cayley: Vec<Vec<usize>> },
}

impl GroupInput {
    pub fn build(&self, cap: usize) -> Result<GroupTable> {
        match self {
            GroupInput::Generators { degree, generators } => {
                let perms: Vec<Permutation> = generators
                    .iter()
                    .map(|images| Permutation::new(images.clone()))
                    .collect::<Result<_>>()?;
                GroupTable::from_generators_capped(*degree, &perms, cap)
            }
            GroupInput::Cayley { cayley } => {
                if cayley.len() > cap {
                    return Err(Error::OrderCapExceeded { order: cayley.len(), cap });
                }
                GroupTable::from_cayley(cayley)
            }
        }
    }
}

/// Parses a group input document and builds the group.
pub fn group_from_json(text: &str, cap: usize) -> Result<GroupTable> {
    let input: GroupInput = serde_json::from_str(text)
        .map_err(|e| Error::SpecParse(format!("invalid group JSON: {e}")))?;
    input.build(cap)
}

/// Exports a group as a Cayley-table input document.
pub fn group_to_json(group: &GroupTable) -> String {
    serde_json::to_string(&GroupInput::Cayley { cayley: group.cayley_rows() })
        .expect("cayley table serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    #[test]
    fn generator_input() {
        let g = group_from_json(
            r#"{"degree": 3, "generators": [[1,2,0],[1,0,2]]}"#,
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn cayley_input() {
        let g = group_from_json(r#"{"cayley": [[0,1],[1,0]]}"#, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn malformed_json_is_rejected() {
        assert!(group_from_json("{oops", DEFAULT_ORDER_CAP).is_err());
        assert!(group_from_json(r#"{"degree": 3}"#, DEFAULT_ORDER_CAP).is_err());
        assert!(group_from_json(
            r#"{"degree": 3, "generators": [[1,1,0]]}"#,
            DEFAULT_ORDER_CAP
        )
        .is_err());
    }

    #[test]
    fn round_trip_preserves_the_table() {
        let g = group_from_json(
            r#"{"degree": 4, "generators": [[1,2,3,0],[1,0,2,3]]}"#,
            DEFAULT_ORDER_CAP,
        )
        .unwrap();
        let json = group_to_json(&g);
        let h = group_from_json(&json, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.table_bytes(), h.table_bytes());
    }
}
