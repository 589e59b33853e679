//! Line-oriented hypernym tree files.
//!
//! Each line is `id parent label | synonym ...`, with `-` as the root's
//! parent:
//!
//! ```text
//! e0   -    physical entity
//! e3   e1   whole | unit
//! ```

use discotrans_core::concepts::{HypernymTree, NodeId, TreeNode};

use super::content_lines;
use crate::error::{Error, Result};

/// Parses a tree file; `name` labels errors.
pub fn parse_tree(source: &str, name: &str) -> Result<HypernymTree> {
    let mut nodes = Vec::new();
    for (lineno, line) in content_lines(source) {
        let Some((id, rest)) = line.split_once(char::is_whitespace) else {
            return Err(Error::line(name, lineno, "expected `id parent labels`"));
        };
        let rest = rest.trim_start();
        let (parent, rest) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
        let id: NodeId = id
            .parse()
            .map_err(|e: discotrans_core::concepts::ConceptError| Error::line(name, lineno, e.to_string()))?;
        let parent = match parent {
            "-" => None,
            p => Some(
                p.parse::<NodeId>()
                    .map_err(|e| Error::line(name, lineno, e.to_string()))?,
            ),
        };
        let labels: Vec<String> = rest
            .split('|')
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect();
        if labels.is_empty() {
            return Err(Error::line(name, lineno, format!("node {id} has no label")));
        }
        nodes.push(TreeNode { id, parent, labels });
    }
    HypernymTree::new(nodes).map_err(|e| Error::format(name, e.to_string()))
}

/// Checks that two trees share node ids and parents.
pub fn check_aligned(a: &HypernymTree, b: &HypernymTree, names: (&str, &str)) -> Result<()> {
    if a.same_structure(b) {
        Ok(())
    } else {
        Err(Error::format(
            names.1,
            format!(
                "tree structure differs from `{}` ({} vs {})",
                names.0,
                a.signature(),
                b.signature()
            ),
        ))
    }
}
