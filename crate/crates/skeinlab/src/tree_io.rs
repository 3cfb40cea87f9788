//! Skein trees as JSON and Graphviz DOT, and ledger transcripts as JSON.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use skeinlab_core::bounds::{DegreeBound, LedgerLine, Role, SkeinTree};
use skeinlab_core::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Exact,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundJson {
    pub kind: BoundKind,
    pub value: i64,
}

impl From<DegreeBound> for BoundJson {
    fn from(b: DegreeBound) -> Self {
        let kind = if b.is_exact() { BoundKind::Exact } else { BoundKind::Upper };
        BoundJson { kind, value: b.value() }
    }
}

impl From<BoundJson> for DegreeBound {
    fn from(b: BoundJson) -> Self {
        match b.kind {
            BoundKind::Exact => DegreeBound::Exact(b.value),
            BoundKind::Upper => DegreeBound::UpperBound(b.value),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub parent: String,
    pub child: String,
    pub role: RoleJson,
    #[serde(default = "plus")]
    pub sign: String,
}

fn plus() -> String {
    "+".into()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoleJson {
    Switched,
    Smoothed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    /// Optional; nodes are otherwise collected from edges and leaves.
    #[serde(default)]
    pub nodes: Vec<String>,
    pub edges: Vec<EdgeJson>,
    pub leaves: BTreeMap<String, BoundJson>,
}

impl From<&SkeinTree> for TreeJson {
    fn from(t: &SkeinTree) -> Self {
        TreeJson {
            nodes: t.nodes.clone(),
            edges: t
                .edges
                .iter()
                .map(|e| EdgeJson {
                    parent: e.parent.clone(),
                    child: e.child.clone(),
                    role: match e.role {
                        Role::Switched => RoleJson::Switched,
                        Role::Smoothed => RoleJson::Smoothed,
                    },
                    sign: e.parent_sign.symbol().to_string(),
                })
                .collect(),
            leaves: t.leaf_bounds.iter().map(|(k, &b)| (k.clone(), b.into())).collect(),
        }
    }
}

impl TreeJson {
    pub fn to_tree(&self) -> Result<SkeinTree, String> {
        let mut t = SkeinTree::default();
        let mut names = self.nodes.clone();
        if names.is_empty() {
            for e in &self.edges {
                names.push(e.parent.clone());
                names.push(e.child.clone());
            }
            names.extend(self.leaves.keys().cloned());
            let mut seen = std::collections::BTreeSet::new();
            names.retain(|n| seen.insert(n.clone()));
        }
        for n in &names {
            t.add_node(n);
        }
        for e in &self.edges {
            let sign = match e.sign.as_str() {
                "+" => Sign::Positive,
                "-" => Sign::Negative,
                s => return Err(format!("edge {} -> {}: sign must be \"+\" or \"-\", found {s:?}", e.parent, e.child)),
            };
            let role = match e.role {
                RoleJson::Switched => Role::Switched,
                RoleJson::Smoothed => Role::Smoothed,
            };
            t.add_edge(&e.parent, &e.child, role, sign);
        }
        for (n, &b) in &self.leaves {
            t.set_leaf(n, b.into());
        }
        Ok(t)
    }
}

pub fn tree_to_json(t: &SkeinTree) -> String {
    serde_json::to_string_pretty(&TreeJson::from(t)).expect("tree JSON")
}

/// DOT string literal; `\n` inside `s` stays a DOT line break.
fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// Graphviz rendering: switched edges solid, smoothed edges dashed, each
/// node labelled with its bound when one is known.
pub fn tree_to_dot(t: &SkeinTree, bounds: &BTreeMap<String, DegreeBound>) -> String {
    let mut out = String::from("digraph skein {\n  node [shape=box];\n");
    for n in &t.nodes {
        let label = match bounds.get(n) {
            Some(b) => format!("{n}\\n{b}"),
            None => n.clone(),
        };
        let style = if t.leaf_bounds.contains_key(n) { ", style=rounded" } else { "" };
        writeln!(out, "  {} [label={}{style}];", quote(n), quote(&label)).unwrap();
    }
    for e in &t.edges {
        let style = match e.role {
            Role::Switched => "solid",
            Role::Smoothed => "dashed",
        };
        writeln!(
            out,
            "  {} -> {} [style={style}, label={}];",
            quote(&e.parent),
            quote(&e.child),
            quote(&format!("{} {}", e.role.name(), e.parent_sign.symbol()))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerLineJson {
    pub node: String,
    #[serde(flatten)]
    pub bound: BoundJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerJson {
    pub c: i64,
    pub variant: String,
    pub lines: Vec<LedgerLineJson>,
    pub root: BoundJson,
}

pub fn ledger_to_json(c: i64, variant: &str, lines: &[LedgerLine]) -> String {
    let j = LedgerJson {
        c,
        variant: variant.to_string(),
        lines: lines.iter().map(|l| LedgerLineJson { node: l.node.to_string(), bound: l.bound.into() }).collect(),
        root: lines.last().expect("ledger lines").bound.into(),
    };
    serde_json::to_string_pretty(&j).expect("ledger JSON")
}
