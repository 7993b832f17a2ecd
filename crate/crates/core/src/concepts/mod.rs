//! Concepts (groups of rules over the same terms) and their graphs.
//!
//! Rules are grouped by subsumption: a rule whose term union is contained
//! in another rule's union joins the concept of the larger union, so
//! `{a}->{b}`, `{a}->{c}` and `{a}->{b,c}` form the single concept `a_b_c`.

mod dot;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::mining::RuleKey;

pub use dot::export_dot;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Concept {
    /// Sorted union of every member rule's terms.
    pub terms: Vec<String>,
    /// Sorted member rules.
    pub rules: Vec<RuleKey>,
}

impl Concept {
    pub fn label(&self) -> String {
        self.terms.join("_")
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }
}

fn is_subset(small: &[String], big: &[String]) -> bool {
    small.iter().all(|t| big.binary_search(t).is_ok())
}

/// Partitions `rules` into concepts keyed by maximal term unions. A rule
/// contained in several maximal unions goes to the largest, then the
/// lexicographically first label.
pub fn group_similar_rules(rules: &[RuleKey]) -> Vec<Concept> {
    let rules: BTreeSet<&RuleKey> = rules.iter().collect();
    let unions: BTreeSet<Vec<String>> = rules.iter().map(|r| r.terms()).collect();
    let maximal: Vec<&Vec<String>> = unions
        .iter()
        .filter(|u| !unions.iter().any(|o| o.len() > u.len() && is_subset(u, o)))
        .collect();

    let mut groups: BTreeMap<&Vec<String>, Vec<RuleKey>> = BTreeMap::new();
    for rule in rules {
        let terms = rule.terms();
        let home = maximal
            .iter()
            .filter(|m| is_subset(&terms, m))
            .min_by(|a, b| {
                b.len()
                    .cmp(&a.len())
                    .then_with(|| a.join("_").cmp(&b.join("_")))
            })
            .expect("every union lies in some maximal union");
        groups.entry(home).or_default().push(rule.clone());
    }
    let mut concepts: Vec<Concept> = groups
        .into_iter()
        .map(|(terms, rules)| Concept {
            terms: terms.clone(),
            rules,
        })
        .collect();
    concepts.sort_by_key(|c| c.label());
    concepts
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphNode {
    /// Sorted terms joined by `_`.
    pub label: String,
    pub terms: Vec<String>,
}

impl GraphNode {
    fn new(terms: &[String]) -> Self {
        let mut terms = terms.to_vec();
        terms.sort();
        GraphNode {
            label: terms.join("_"),
            terms,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphEdge {
    pub source: String,
    pub target: String,
    /// The rule behind a transitive edge; absent in lattices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<RuleKey>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Transitive,
    Lattice,
}

/// Graph in the form written to JSON and DOT. Nodes and edges are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConceptGraph {
    pub kind: GraphKind,
    pub concept: String,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
    /// Lattice root label.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
}

impl ConceptGraph {
    pub fn name(&self) -> String {
        match self.kind {
            GraphKind::Transitive => format!("Transitive_{}", self.concept),
            GraphKind::Lattice => format!("Lattice_{}", self.concept),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    fn finish(mut self) -> Self {
        self.nodes.sort();
        self.nodes.dedup();
        self.edges.sort();
        self
    }
}

/// One node per distinct rule side, one edge per rule (antecedent -> consequent).
pub fn build_transitive_graph(concept: &Concept) -> ConceptGraph {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for rule in &concept.rules {
        let source = GraphNode::new(&rule.antecedent);
        let target = GraphNode::new(&rule.consequent);
        edges.push(GraphEdge {
            source: source.label.clone(),
            target: target.label.clone(),
            rule: Some(rule.clone()),
        });
        nodes.push(source);
        nodes.push(target);
    }
    ConceptGraph {
        kind: GraphKind::Transitive,
        concept: concept.label(),
        nodes,
        edges,
        root: None,
    }
    .finish()
}

/// Singletons, rule sides and the full concept, linked by the subset
/// covering relation (`S -> T` when `S ⊂ T` with no node strictly between).
pub fn build_lattice_graph(concept: &Concept) -> ConceptGraph {
    let mut sets: BTreeSet<Vec<String>> = concept.terms.iter().map(|t| vec![t.clone()]).collect();
    for rule in &concept.rules {
        sets.insert(rule.antecedent.clone());
        sets.insert(rule.consequent.clone());
    }
    sets.insert(concept.terms.clone());
    let sets: Vec<Vec<String>> = sets.into_iter().collect();

    let strict = |a: &Vec<String>, b: &Vec<String>| a.len() < b.len() && is_subset(a, b);
    let mut edges = Vec::new();
    for s in &sets {
        for t in &sets {
            if strict(s, t) && !sets.iter().any(|u| strict(s, u) && strict(u, t)) {
                edges.push(GraphEdge {
                    source: s.join("_"),
                    target: t.join("_"),
                    rule: None,
                });
            }
        }
    }
    ConceptGraph {
        kind: GraphKind::Lattice,
        concept: concept.label(),
        nodes: sets.iter().map(|s| GraphNode::new(s)).collect(),
        edges,
        root: Some(concept.label()),
    }
    .finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rule(a: &[&str], c: &[&str]) -> RuleKey {
        RuleKey::new(a.iter().copied(), c.iter().copied())
    }

    #[test]
    fn subsumed_rules_merge_into_maximal_concept() {
        let concepts = group_similar_rules(&[
            rule(&["a"], &["b", "c"]),
            rule(&["a"], &["b"]),
            rule(&["a"], &["c"]),
        ]);
        assert_eq!(concepts.len(), 1);
        assert_eq!(concepts[0].label(), "a_b_c");
        assert_eq!(concepts[0].rule_count(), 3);
    }

    #[test]
    fn disjoint_rules_stay_apart() {
        let concepts = group_similar_rules(&[
            rule(&["x"], &["y"]),
            rule(&["p"], &["q"]),
            rule(&["x"], &["y"]),
        ]);
        let labels: Vec<_> = concepts
            .iter()
            .map(|c| (c.label(), c.rule_count()))
            .collect();
        assert_eq!(labels, [("p_q".to_string(), 1), ("x_y".to_string(), 1)]);
    }

    #[test]
    fn overlapping_maximals_pick_larger_then_first_label() {
        let concepts = group_similar_rules(&[
            rule(&["a"], &["b", "c"]),
            rule(&["a"], &["d"]),
            rule(&["a"], &["b"]),
        ]);
        let labels: Vec<_> = concepts
            .iter()
            .map(|c| (c.label(), c.rule_count()))
            .collect();
        assert_eq!(labels, [("a_b_c".to_string(), 2), ("a_d".to_string(), 1)]);
    }

    #[test]
    fn single_rule_graphs() {
        let c = &group_similar_rules(&[rule(&["x"], &["y"])])[0];
        let t = build_transitive_graph(c);
        assert_eq!(t.nodes.len(), 2);
        assert_eq!(t.edges.len(), 1);
        let l = build_lattice_graph(c);
        let edges: Vec<_> = l
            .edges
            .iter()
            .map(|e| (e.source.as_str(), e.target.as_str()))
            .collect();
        assert_eq!(edges, [("x", "x_y"), ("y", "x_y")]);
        assert_eq!(l.root.as_deref(), Some("x_y"));
    }

    #[test]
    fn chain_exposes_transitivity() {
        let c = &group_similar_rules(&[
            rule(&["a"], &["b"]),
            rule(&["b"], &["c"]),
            rule(&["a"], &["b", "c"]),
        ])[0];
        let t = build_transitive_graph(c);
        let reach = |from: &str, to: &str| {
            let mut frontier = vec![from.to_string()];
            let mut seen = BTreeSet::new();
            while let Some(n) = frontier.pop() {
                if n == to {
                    return true;
                }
                if seen.insert(n.clone()) {
                    frontier.extend(
                        t.edges
                            .iter()
                            .filter(|e| e.source == n)
                            .map(|e| e.target.clone()),
                    );
                }
            }
            false
        };
        assert!(reach("a", "c"));
        assert!(!reach("c", "a"));
    }
}
