//! Contraction of closed networks by an explicit sum over projections.
//!
//! Every node port has a variance: 3j-ports are lower, 2j-ports are upper.
//! Starred `m` terminals behave like lower ends and unstarred ones like upper
//! ends. An edge whose arrow runs from an upper end to a lower end is a plain
//! contraction; reversing it costs `(-1)^{2j}`, and an edge joining two ends
//! of equal variance carries the components of `K` with the tail as first
//! operand.

use super::model::{Endpoint, NodeKind, SpinNetwork, Terminal};
use crate::error::{Error, Result};
use crate::exact::{ExactRadical, HalfInt, RadicalSum};
use crate::symbols::{three_j_cached, two_j_component};

/// Default bound on the number of partial assignments visited by
/// [`evaluate_closed`].
pub const DEFAULT_EVAL_STEP_CAP: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Variance {
    Lower,
    Upper,
    /// Chevron ends, which carry no component index.
    Free,
}

pub(crate) fn end_variance(net: &SpinNetwork, ep: &Endpoint) -> Variance {
    match ep {
        Endpoint::Port { node, .. } => match net.node(node).map(|n| n.kind) {
            Some(NodeKind::W3(_)) => Variance::Lower,
            Some(NodeKind::K2(_)) => Variance::Upper,
            None => Variance::Free,
        },
        Endpoint::Terminal(Terminal::M { starred: true, .. }) => Variance::Lower,
        Endpoint::Terminal(Terminal::M { starred: false, .. }) => Variance::Upper,
        Endpoint::Terminal(_) => Variance::Free,
    }
}

/// Components of `K`: `(-1)^{j - first} δ_{first, -second}` (twice-values).
pub(crate) fn k_component(j2: i64, first: i64, second: i64) -> i64 {
    two_j_component(HalfInt::from_twice(j2), HalfInt::from_twice(first), HalfInt::from_twice(second))
}

/// Whether an edge between ends of these variances identifies projections
/// (`true`) or negates them (`false`).
pub(crate) fn preserves_m(tail: Variance, head: Variance) -> bool {
    !matches!(
        (tail, head),
        (Variance::Lower, Variance::Lower) | (Variance::Upper, Variance::Upper)
    )
}

/// Factor contributed by an edge with projections `mt` at its tail and `mh`
/// at its head (twice-values).
pub(crate) fn edge_factor(tail: Variance, head: Variance, j2: i64, mt: i64, mh: i64) -> i64 {
    use Variance::*;
    match (tail, head) {
        (Lower, Upper) => {
            if mt == mh {
                if j2 % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                0
            }
        }
        (Lower, Lower) | (Upper, Upper) => k_component(j2, mt, mh),
        _ => (mt == mh) as i64,
    }
}

struct EdgeInfo {
    j2: i64,
    /// `m_head = σ · m_tail`
    sigma: i64,
    tail_var: Variance,
    head_var: Variance,
}

impl EdgeInfo {
    fn sign(&self, mt: i64) -> i64 {
        edge_factor(self.tail_var, self.head_var, self.j2, mt, self.sigma * mt)
    }
}

struct NodeInfo {
    kind: NodeKind,
    /// For each port: edge index and whether the port is the edge's tail.
    ports: Vec<(usize, bool)>,
}

impl NodeInfo {
    fn port_m(&self, p: usize, edges: &[EdgeInfo], m: &[i64]) -> i64 {
        let (e, is_tail) = self.ports[p];
        if is_tail {
            m[e]
        } else {
            edges[e].sigma * m[e]
        }
    }
}

struct Evaluator {
    edges: Vec<EdgeInfo>,
    nodes: Vec<NodeInfo>,
    order: Vec<usize>,
    /// Nodes completed once the k-th edge of `order` is assigned.
    completes: Vec<Vec<usize>>,
    /// For each step, nodes that force the projection of the edge assigned.
    forcing: Vec<Vec<(usize, usize)>>,
    m: Vec<i64>,
    steps: u64,
    cap: u64,
    acc: RadicalSum,
}

impl Evaluator {
    fn new(net: &SpinNetwork, cap: u64) -> Result<Self> {
        if !net.is_closed() {
            return Err(Error::Validation("cannot evaluate a network with terminals".into()));
        }
        let edges: Vec<EdgeInfo> = net
            .edges
            .iter()
            .map(|e| {
                let tv = end_variance(net, e.tail());
                let hv = end_variance(net, e.head());
                EdgeInfo {
                    j2: e.j.twice(),
                    sigma: if preserves_m(tv, hv) { 1 } else { -1 },
                    tail_var: tv,
                    head_var: hv,
                }
            })
            .collect();
        let nodes: Vec<NodeInfo> = net
            .nodes
            .iter()
            .map(|n| {
                let ports = n
                    .ports
                    .iter()
                    .enumerate()
                    .map(|(p, eid)| {
                        let ei = net.edge_index(eid).expect("validated network");
                        let is_tail = matches!(
                            net.edges[ei].tail(),
                            Endpoint::Port { node, port } if *node == n.id && *port == p
                        );
                        (ei, is_tail)
                    })
                    .collect();
                NodeInfo { kind: n.kind, ports }
            })
            .collect();

        // greedy order: repeatedly take an unassigned edge touching the node
        // with the most assigned ports
        let ne = edges.len();
        let mut pos = vec![usize::MAX; ne];
        let mut order = Vec::with_capacity(ne);
        while order.len() < ne {
            let mut best: Option<(usize, usize)> = None;
            for node in &nodes {
                let assigned = node.ports.iter().filter(|(e, _)| pos[*e] != usize::MAX).count();
                if let Some(&(e, _)) = node.ports.iter().find(|(e, _)| pos[*e] == usize::MAX) {
                    if best.map_or(true, |(_, a)| assigned > a) {
                        best = Some((e, assigned));
                    }
                }
            }
            let e = match best {
                Some((e, _)) => e,
                None => (0..ne).find(|&e| pos[e] == usize::MAX).unwrap(),
            };
            pos[e] = order.len();
            order.push(e);
        }
        let mut completes = vec![Vec::new(); ne];
        let mut forcing = vec![Vec::new(); ne];
        for (ni, node) in nodes.iter().enumerate() {
            let last = node.ports.iter().map(|(e, _)| pos[*e]).max().unwrap();
            completes[last].push(ni);
            let at_last: Vec<usize> = (0..node.ports.len())
                .filter(|&p| pos[node.ports[p].0] == last)
                .collect();
            if at_last.len() == 1 {
                forcing[last].push((ni, at_last[0]));
            }
        }
        Ok(Evaluator {
            edges,
            nodes,
            order,
            completes,
            forcing,
            m: vec![0; ne],
            steps: 0,
            cap,
            acc: RadicalSum::new(),
        })
    }

    fn node_value(&self, ni: usize) -> Option<ExactRadical> {
        let node = &self.nodes[ni];
        let pm = |p| node.port_m(p, &self.edges, &self.m);
        match node.kind {
            NodeKind::K2(stub) => {
                let f = stub.first_port();
                let j2 = self.edges[node.ports[0].0].j2;
                let v = k_component(j2, pm(f), pm(1 - f));
                (v != 0).then(|| ExactRadical::from_integer(v))
            }
            NodeKind::W3(o) => {
                let js = [0, 1, 2].map(|p| self.edges[node.ports[p].0].j2);
                let ms = [pm(0), pm(1), pm(2)];
                let (js, ms) = match o {
                    super::model::Orientation::Ccw => (js, ms),
                    super::model::Orientation::Cw => ([js[1], js[0], js[2]], [ms[1], ms[0], ms[2]]),
                };
                if ms.iter().sum::<i64>() != 0 {
                    return None;
                }
                let v = three_j_cached(js, ms);
                (!v.is_zero()).then_some(v)
            }
        }
    }

    /// Projection forced at port `p` of node `ni` by the other ports.
    fn forced_port_m(&self, ni: usize, p: usize) -> i64 {
        let node = &self.nodes[ni];
        let others: i64 = (0..node.ports.len())
            .filter(|&q| q != p)
            .map(|q| node.port_m(q, &self.edges, &self.m))
            .sum();
        -others
    }

    fn run(&mut self, k: usize, value: ExactRadical, sign: i64) -> Result<()> {
        if k == self.order.len() {
            let v = if sign < 0 { -value } else { value };
            self.acc.push(&v);
            return Ok(());
        }
        let e = self.order[k];
        let j2 = self.edges[e].j2;
        let mut candidates: Option<i64> = None;
        for &(ni, p) in &self.forcing[k] {
            let pm = self.forced_port_m(ni, p);
            let (_, is_tail) = self.nodes[ni].ports[p];
            let me = if is_tail { pm } else { self.edges[e].sigma * pm };
            match candidates {
                None => candidates = Some(me),
                Some(c) if c != me => return Ok(()),
                _ => {}
            }
        }
        let values: Vec<i64> = match candidates {
            Some(c) if c.abs() <= j2 && (j2 - c) % 2 == 0 => vec![c],
            Some(_) => return Ok(()),
            None => (0..=j2).map(|i| j2 - 2 * i).collect(),
        };
        for mv in values {
            self.steps += 1;
            if self.steps > self.cap {
                return Err(Error::ResourceLimit(format!(
                    "network contraction exceeded {} steps",
                    self.cap
                )));
            }
            self.m[e] = mv;
            let s = self.edges[e].sign(mv);
            if s == 0 {
                continue;
            }
            let mut v = value.clone();
            let mut ok = true;
            for &ni in &self.completes[k] {
                match self.node_value(ni) {
                    Some(nv) => v = v.mul(&nv),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.run(k + 1, v, sign * s)?;
            }
        }
        Ok(())
    }
}

/// Exact value of a closed network, including its phase.
pub fn evaluate_closed(net: &SpinNetwork) -> Result<ExactRadical> {
    evaluate_closed_with_cap(net, DEFAULT_EVAL_STEP_CAP)
}

/// As [`evaluate_closed`], with an explicit bound on visited assignments.
pub fn evaluate_closed_with_cap(net: &SpinNetwork, cap: u64) -> Result<ExactRadical> {
    let mut ev = Evaluator::new(net, cap)?;
    ev.run(0, ExactRadical::one(), 1)?;
    let acc = std::mem::take(&mut ev.acc);
    Ok(acc.into_radical()?.mul(&net.phase))
}
