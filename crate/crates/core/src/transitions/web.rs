//! Transition webs over a corpus of reflexive polytopes.
//!
//! Members are normalized, deduplicated by vertex set and grouped into
//! nodes by canonical key. Containment is tested between members as given
//! (no automorphism search), and every proper inclusion between members
//! yields an edge between their nodes; the first witness pair in input
//! order is kept.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use super::{canonical_form, mirror_edge, CanonicalKey, TransitionEdge};
use crate::error::{Error, Result};
use crate::hodge::{hodge_numbers, HodgeData};
use crate::lattice::{LatticePolytope, LatticeVector};
use crate::reflexive::ReflexivePolytope;

#[derive(Clone, Debug)]
pub struct WebNode {
    pub id: String,
    pub key: CanonicalKey,
    pub polytope: ReflexivePolytope,
    pub hodge: Option<HodgeData>,
    /// Ids of the corpus members in this class, in input order.
    pub members: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct WebEdge {
    pub sub: String,
    pub sup: String,
    /// Witness inclusion between members of the two classes.
    pub transition: TransitionEdge,
}

#[derive(Clone, Debug)]
pub struct TransitionWeb {
    /// Sorted by key; keys are unique.
    pub nodes: Vec<WebNode>,
    /// Sorted by (sub, sup) node position.
    pub edges: Vec<WebEdge>,
    pub inputs: usize,
    /// `(member id, message)` for inputs that could not be used.
    pub rejected: Vec<(String, String)>,
}

/// Checks `q ⊆ p` and then `p° ⊆ q°`.
fn verified_inclusion(q: &ReflexivePolytope, p: &ReflexivePolytope) -> Result<bool> {
    if !p.contains(q)? {
        return Ok(false);
    }
    if !q.polar().contains(&p.polar())? {
        return Err(Error::Internal("polar of an inclusion of reflexive polytopes is not reversed".into()));
    }
    Ok(true)
}

fn delta(sub: &Option<HodgeData>, sup: &Option<HodgeData>) -> Option<(i64, i64)> {
    match (sub, sup) {
        (Some(a), Some(b)) => Some((b.h11 - a.h11, b.h21 - a.h21)),
        _ => None,
    }
}

pub fn build_web(corpus: &[(String, LatticePolytope)]) -> TransitionWeb {
    let mut rejected = Vec::new();
    let mut seen = BTreeSet::new();
    let mut members: Vec<(String, ReflexivePolytope)> = Vec::new();
    for (id, p) in corpus {
        match ReflexivePolytope::new(p) {
            Ok(r) => {
                if seen.insert(r.vertices().to_vec()) {
                    members.push((id.clone(), r));
                }
            }
            Err(e) => rejected.push((id.clone(), e.to_string())),
        }
    }

    let mut classes: BTreeMap<CanonicalKey, Vec<usize>> = BTreeMap::new();
    for (i, (_, r)) in members.iter().enumerate() {
        classes.entry(canonical_form(r)).or_default().push(i);
    }
    let mut node_of = vec![0; members.len()];
    let mut nodes = Vec::with_capacity(classes.len());
    for (n, (key, idx)) in classes.into_iter().enumerate() {
        let (id, rep) = &members[idx[0]];
        let hodge = if rep.ambient_dim() == 4 {
            match hodge_numbers(rep) {
                Ok(h) => Some(h),
                Err(e) => {
                    rejected.push((id.clone(), e.to_string()));
                    None
                }
            }
        } else {
            None
        };
        for &i in &idx {
            node_of[i] = n;
        }
        nodes.push(WebNode {
            id: id.clone(),
            key,
            polytope: rep.clone(),
            hodge,
            members: idx.iter().map(|&i| members[i].0.clone()).collect(),
        });
    }

    let mut witness: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (a, (_, pa)) in members.iter().enumerate() {
        for (b, (_, pb)) in members.iter().enumerate() {
            if a == b || pa.ambient_dim() != pb.ambient_dim() || node_of[a] == node_of[b] {
                continue;
            }
            let pair = (node_of[b], node_of[a]);
            if witness.contains_key(&pair) || !pa.contains(pb).unwrap_or(false) {
                continue;
            }
            witness.insert(pair, (b, a));
        }
    }
    let mut edges = Vec::with_capacity(witness.len());
    for ((ns, np), (b, a)) in witness {
        let (q, p) = (&members[b].1, &members[a].1);
        match verified_inclusion(q, p) {
            Ok(mirror_verified) => edges.push(WebEdge {
                sub: nodes[ns].id.clone(),
                sup: nodes[np].id.clone(),
                transition: TransitionEdge {
                    sub: q.clone(),
                    sup: p.clone(),
                    hodge_delta: delta(&nodes[ns].hodge, &nodes[np].hodge),
                    mirror_verified,
                },
            }),
            Err(e) => rejected.push((format!("{} -> {}", members[b].0, members[a].0), e.to_string())),
        }
    }
    TransitionWeb { nodes, edges, inputs: corpus.len(), rejected }
}

fn big(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

fn vector_json(v: &LatticeVector) -> Value {
    Value::Array(v.coords().iter().map(big).collect())
}

impl TransitionWeb {
    fn position(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub fn node(&self, id: &str) -> Option<&WebNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    /// Every node replaced by its polar (id suffixed with `*`) and every
    /// edge reversed.
    pub fn polar_image(&self) -> TransitionWeb {
        let star = |id: &str| format!("{id}*");
        let mut nodes: Vec<WebNode> = self
            .nodes
            .iter()
            .map(|n| {
                let polytope = n.polytope.polar();
                WebNode {
                    id: star(&n.id),
                    key: canonical_form(&polytope),
                    polytope,
                    hodge: n.hodge.as_ref().map(HodgeData::mirror),
                    members: n.members.iter().map(|m| star(m)).collect(),
                }
            })
            .collect();
        nodes.sort_by(|a, b| a.key.cmp(&b.key));
        let mut web = TransitionWeb { nodes, edges: Vec::new(), inputs: self.inputs, rejected: self.rejected.clone() };
        let mut edges: Vec<(usize, usize, WebEdge)> = self
            .edges
            .iter()
            .map(|e| {
                let (sub, sup) = (star(&e.sup), star(&e.sub));
                let (i, j) = (web.position(&sub).expect("node"), web.position(&sup).expect("node"));
                (i, j, WebEdge { sub, sup, transition: mirror_edge(&e.transition) })
            })
            .collect();
        edges.sort_by_key(|(i, j, _)| (*i, *j));
        web.edges = edges.into_iter().map(|(_, _, e)| e).collect();
        web
    }

    /// Structural checks: unique sorted keys, keys that match their node
    /// polytopes, edge endpoints that exist and whose witnesses lie in the
    /// endpoint classes, verified inclusions and consistent Hodge deltas.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Internal(msg));
        for w in self.nodes.windows(2) {
            if w[0].key >= w[1].key {
                return fail(format!("nodes {} and {} are out of order or duplicate", w[0].id, w[1].id));
            }
        }
        let mut ids = BTreeSet::new();
        for n in &self.nodes {
            if !ids.insert(n.id.as_str()) {
                return fail(format!("duplicate node id {}", n.id));
            }
            if canonical_form(&n.polytope) != n.key {
                return fail(format!("node {} has a stale key", n.id));
            }
        }
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            let (Some(i), Some(j)) = (self.position(&e.sub), self.position(&e.sup)) else {
                return fail(format!("edge {} -> {} has a missing endpoint", e.sub, e.sup));
            };
            if !pairs.insert((i, j)) || i == j {
                return fail(format!("edge {} -> {} is repeated or a loop", e.sub, e.sup));
            }
            let t = &e.transition;
            if canonical_form(&t.sub) != self.nodes[i].key || canonical_form(&t.sup) != self.nodes[j].key {
                return fail(format!("edge {} -> {} has a witness outside its classes", e.sub, e.sup));
            }
            if !t.sup.contains(&t.sub)? {
                return fail(format!("edge {} -> {} is not an inclusion", e.sub, e.sup));
            }
            if t.mirror_verified && !t.sub.polar().contains(&t.sup.polar())? {
                return fail(format!("edge {} -> {} fails the mirror inclusion", e.sub, e.sup));
            }
            if t.hodge_delta != delta(&self.nodes[i].hodge, &self.nodes[j].hodge) {
                return fail(format!("edge {} -> {} has inconsistent Hodge deltas", e.sub, e.sup));
            }
        }
        Ok(())
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        if self.nodes.len() <= 1 {
            return true;
        }
        let index: HashMap<&str, usize> = self.nodes.iter().enumerate().map(|(i, n)| (n.id.as_str(), i)).collect();
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            let (a, b) = (index[e.sub.as_str()], index[e.sup.as_str()]);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .map(|n| {
                json!({
                    "id": n.id,
                    "key": n.key.to_compact_string(),
                    "vertices": n.polytope.vertices().iter().map(vector_json).collect::<Vec<_>>(),
                    "h11": n.hodge.as_ref().map(|h| h.h11),
                    "h21": n.hodge.as_ref().map(|h| h.h21),
                    "members": n.members,
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| {
                json!({
                    "sub": e.sub,
                    "super": e.sup,
                    "dh11": e.transition.hodge_delta.map(|d| d.0),
                    "dh21": e.transition.hodge_delta.map(|d| d.1),
                    "mirror_verified": e.transition.mirror_verified,
                })
            })
            .collect();
        let rejected: Vec<Value> = self.rejected.iter().map(|(id, msg)| json!({"id": id, "error": msg})).collect();
        json!({
            "nodes": nodes,
            "edges": edges,
            "metadata": {"inputs": self.inputs, "rejected": rejected},
        })
    }

    /// DOT digraph; nodes in key order, edges `sub -> super`.
    pub fn to_dot(&self) -> String {
        let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
        let mut out = String::from("digraph transitions {\n");
        for n in &self.nodes {
            let label = match &n.hodge {
                Some(h) => format!("{} ({},{})", n.id, h.h11, h.h21),
                None => n.id.clone(),
            };
            out.push_str(&format!("  {} [label={}];\n", quote(&n.id), quote(&label)));
        }
        for e in &self.edges {
            out.push_str(&format!("  {} -> {};\n", quote(&e.sub), quote(&e.sup)));
        }
        out.push_str("}\n");
        out
    }
}
