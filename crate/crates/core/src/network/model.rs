use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ExactRadical, HalfInt};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    #[default]
    Ccw,
    Cw,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

/// Which port of a 2j-node is its first operand: `Up` means `ports[0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stub {
    Up,
    Down,
}

impl Stub {
    pub fn flipped(self) -> Self {
        match self {
            Stub::Up => Stub::Down,
            Stub::Down => Stub::Up,
        }
    }

    pub fn first_port(self) -> usize {
        match self {
            Stub::Up => 0,
            Stub::Down => 1,
        }
    }

    pub fn with_first_port(port: usize) -> Self {
        if port == 0 {
            Stub::Up
        } else {
            Stub::Down
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    /// Trivalent node carrying the 3j-symbol of its ports in cyclic order.
    W3(Orientation),
    /// Bivalent node carrying the components of the invariant `K`.
    K2(Stub),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub kind: NodeKind,
    /// Ids of the attached edges, one per port.
    pub ports: Vec<String>,
}

impl Node {
    pub fn w3(id: &str, ports: [&str; 3], orientation: Orientation) -> Self {
        Node {
            id: id.to_string(),
            kind: NodeKind::W3(orientation),
            ports: ports.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn k2(id: &str, ports: [&str; 2], stub: Stub) -> Self {
        Node {
            id: id.to_string(),
            kind: NodeKind::K2(stub),
            ports: ports.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn is_k2(&self) -> bool {
        matches!(self.kind, NodeKind::K2(_))
    }
}

/// Where an edge ends when it does not end on a node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Terminal {
    Ket,
    Bra,
    M {
        m2: i64,
        #[serde(default)]
        starred: bool,
    },
}

impl Terminal {
    pub fn m(m: HalfInt, starred: bool) -> Self {
        Terminal::M { m2: m.twice(), starred }
    }

    /// Image under Hermitian conjugation.
    pub fn conjugate(&self) -> Self {
        match self {
            Terminal::Ket => Terminal::Bra,
            Terminal::Bra => Terminal::Ket,
            Terminal::M { m2, starred } => Terminal::M { m2: *m2, starred: !starred },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Port { node: String, port: usize },
    Terminal(Terminal),
}

impl Endpoint {
    pub fn port(node: &str, port: usize) -> Self {
        Endpoint::Port { node: node.to_string(), port }
    }

    pub fn node(&self) -> Option<&str> {
        match self {
            Endpoint::Port { node, .. } => Some(node),
            Endpoint::Terminal(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arrow {
    FromTo,
    ToFrom,
}

impl Arrow {
    pub fn flipped(self) -> Self {
        match self {
            Arrow::FromTo => Arrow::ToFrom,
            Arrow::ToFrom => Arrow::FromTo,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub j: HalfInt,
    pub from: Endpoint,
    pub to: Endpoint,
    pub arrow: Arrow,
}

impl Edge {
    pub fn new(id: &str, j: HalfInt, from: Endpoint, to: Endpoint, arrow: Arrow) -> Self {
        Edge { id: id.to_string(), j, from, to, arrow }
    }

    /// Edge whose arrow runs `tail → head`.
    pub fn directed(id: &str, j: HalfInt, tail: Endpoint, head: Endpoint) -> Self {
        Edge::new(id, j, tail, head, Arrow::FromTo)
    }

    pub fn tail(&self) -> &Endpoint {
        match self.arrow {
            Arrow::FromTo => &self.from,
            Arrow::ToFrom => &self.to,
        }
    }

    pub fn head(&self) -> &Endpoint {
        match self.arrow {
            Arrow::FromTo => &self.to,
            Arrow::ToFrom => &self.from,
        }
    }

    /// `(-1)^{2j}`.
    pub fn epsilon(&self) -> i64 {
        if self.j.twice() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn ends(&self) -> [&Endpoint; 2] {
        [&self.from, &self.to]
    }
}

/// Closed or open spin network built from 3j- and 2j-nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinNetwork {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    /// Scalar prefactor accumulated by rewrites.
    pub phase: ExactRadical,
}

impl SpinNetwork {
    /// Builds and validates a network with unit phase.
    pub fn new(nodes: Vec<Node>, edges: Vec<Edge>) -> Result<Self> {
        let net = SpinNetwork { nodes, edges, phase: ExactRadical::one() };
        net.validate()?;
        Ok(net)
    }

    pub fn with_phase(mut self, phase: ExactRadical) -> Self {
        self.phase = phase;
        self
    }

    pub fn node(&self, id: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub(crate) fn node_index(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    pub(crate) fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn is_closed(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.ends().iter().all(|ep| matches!(ep, Endpoint::Port { .. })))
    }

    pub fn count_w3(&self) -> usize {
        self.nodes.iter().filter(|n| !n.is_k2()).count()
    }

    pub fn count_k2(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_k2()).count()
    }

    /// A fresh id starting with `prefix` that no node or edge uses.
    pub(crate) fn fresh_id(&self, prefix: &str) -> String {
        let used: HashSet<&str> = self
            .nodes
            .iter()
            .map(|n| n.id.as_str())
            .chain(self.edges.iter().map(|e| e.id.as_str()))
            .collect();
        if !used.contains(prefix) {
            return prefix.to_string();
        }
        (1..)
            .map(|k| format!("{prefix}{k}"))
            .find(|s| !used.contains(s.as_str()))
            .unwrap()
    }

    /// Checks the structural invariants: unique ids, correct port counts,
    /// every port attached to exactly one consistent edge end, equal spins on
    /// the two sides of each 2j-node, and admissible terminal projections.
    pub fn validate(&self) -> Result<()> {
        let mut node_ids = HashSet::new();
        for n in &self.nodes {
            if !node_ids.insert(n.id.as_str()) {
                return Err(Error::Validation(format!("duplicate node id `{}`", n.id)));
            }
            let want = if n.is_k2() { 2 } else { 3 };
            if n.ports.len() != want {
                return Err(Error::Validation(format!(
                    "node `{}` has {} ports, expected {want}",
                    n.id,
                    n.ports.len()
                )));
            }
        }
        let mut edge_ids = HashSet::new();
        for e in &self.edges {
            if !edge_ids.insert(e.id.as_str()) {
                return Err(Error::Validation(format!("duplicate edge id `{}`", e.id)));
            }
            if e.j.twice() < 0 {
                return Err(Error::Validation(format!("edge `{}` has negative spin", e.id)));
            }
        }
        let mut attached: HashMap<(&str, usize), &str> = HashMap::new();
        for e in &self.edges {
            for ep in e.ends() {
                match ep {
                    Endpoint::Port { node, port } => {
                        let n = self.node(node).ok_or_else(|| {
                            Error::Validation(format!("edge `{}` refers to unknown node `{node}`", e.id))
                        })?;
                        if *port >= n.ports.len() {
                            return Err(Error::Validation(format!(
                                "edge `{}` refers to port {port} of node `{node}`, which has {} ports",
                                e.id,
                                n.ports.len()
                            )));
                        }
                        if n.ports[*port] != e.id {
                            return Err(Error::Validation(format!(
                                "port {port} of node `{node}` lists edge `{}` but edge `{}` is attached there",
                                n.ports[*port], e.id
                            )));
                        }
                        if attached.insert((node.as_str(), *port), e.id.as_str()).is_some() {
                            return Err(Error::Validation(format!(
                                "port {port} of node `{node}` has more than one edge end"
                            )));
                        }
                    }
                    Endpoint::Terminal(Terminal::M { m2, .. }) => {
                        HalfInt::check_projection(e.j, HalfInt::from_twice(*m2)).map_err(|_| {
                            Error::Validation(format!(
                                "terminal on edge `{}` has m = {} outside spin {}",
                                e.id,
                                HalfInt::from_twice(*m2),
                                e.j
                            ))
                        })?;
                    }
                    Endpoint::Terminal(_) => {}
                }
            }
        }
        for n in &self.nodes {
            for (p, eid) in n.ports.iter().enumerate() {
                if !attached.contains_key(&(n.id.as_str(), p)) {
                    return Err(Error::Validation(format!(
                        "dangling port {p} of node `{}` (edge `{eid}` is not attached to it)",
                        n.id
                    )));
                }
            }
            match n.kind {
                NodeKind::K2(_) => {
                    let j0 = self.edge(&n.ports[0]).unwrap().j;
                    let j1 = self.edge(&n.ports[1]).unwrap().j;
                    if j0 != j1 {
                        return Err(Error::Validation(format!(
                            "2j-node `{}` joins spins {j0} and {j1}",
                            n.id
                        )));
                    }
                }
                NodeKind::W3(_) => {}
            }
        }
        Ok(())
    }
}
