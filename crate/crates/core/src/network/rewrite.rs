//! Value-preserving rewrites of spin networks.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::eval::{edge_factor, end_variance, k_component, Variance};
use super::model::{Edge, Endpoint, Node, NodeKind, SpinNetwork, Stub};
use crate::error::{Error, Result};
use crate::exact::ExactRadical;

type Mat = Vec<Vec<i64>>;

fn m_of(j2: i64, i: usize) -> i64 {
    j2 - 2 * i as i64
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// Factor of a (possibly hypothetical) edge between ends `x` and `y`, as a
/// matrix indexed by the projections at `x` (rows) and `y` (columns).
fn link_matrix(j2: i64, vx: Variance, vy: Variance, x_is_tail: bool) -> Mat {
    let n = (j2 + 1) as usize;
    let mut out = vec![vec![0i64; n]; n];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            let (mx, my) = (m_of(j2, a), m_of(j2, b));
            *cell = if x_is_tail {
                edge_factor(vx, vy, j2, mx, my)
            } else {
                edge_factor(vy, vx, j2, my, mx)
            };
        }
    }
    out
}

/// Components of `K` indexed by the projection at the port facing `x`
/// (rows) and the other port (columns).
fn k_matrix(j2: i64, first_faces_x: bool) -> Mat {
    let n = (j2 + 1) as usize;
    let mut out = vec![vec![0i64; n]; n];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            let (mx, my) = (m_of(j2, a), m_of(j2, b));
            *cell = if first_faces_x {
                k_component(j2, mx, my)
            } else {
                k_component(j2, my, mx)
            };
        }
    }
    out
}

/// The end of `edge` that is not `(node, port)`.
fn other_end<'a>(edge: &'a Edge, node: &str, port: usize) -> &'a Endpoint {
    let here = Endpoint::port(node, port);
    if edge.from == here {
        &edge.to
    } else {
        &edge.from
    }
}

/// Matrix of an existing edge traversed from end `x`.
fn edge_matrix(net: &SpinNetwork, e: &Edge, x: &Endpoint) -> Mat {
    let (vx, vy) = if &e.from == x {
        (end_variance(net, &e.from), end_variance(net, &e.to))
    } else {
        (end_variance(net, &e.to), end_variance(net, &e.from))
    };
    link_matrix(e.j.twice(), vx, vy, e.tail() == x)
}

/// Finds the arrow for a new edge `x - y` and a sign `p` such that `p` times
/// its factor equals `target`. Prefers `p = +1`, then the arrow `x → y`.
fn match_link(j2: i64, vx: Variance, vy: Variance, target: &Mat) -> (bool, i64) {
    let mut found = None;
    for x_is_tail in [true, false] {
        let c = link_matrix(j2, vx, vy, x_is_tail);
        for p in [1i64, -1] {
            let hit = c
                .iter()
                .zip(target)
                .all(|(cr, tr)| cr.iter().zip(tr).all(|(a, b)| p * a == *b));
            if hit {
                match found {
                    None => found = Some((x_is_tail, p)),
                    Some((_, -1)) if p == 1 => found = Some((x_is_tail, p)),
                    _ => {}
                }
            }
        }
    }
    found.expect("a chain of δ-type factors reduces to a single link")
}

fn scale_phase(net: &mut SpinNetwork, k: i64) {
    if k != 1 {
        net.phase = net.phase.scale(&BigRational::from_integer(BigInt::from(k)));
    }
}

fn set_port(net: &mut SpinNetwork, ep: &Endpoint, edge_id: &str) {
    if let Endpoint::Port { node, port } = ep {
        let ni = net.node_index(node).expect("endpoint refers to a node");
        net.nodes[ni].ports[*port] = edge_id.to_string();
    }
}

/// Replaces the path `x - ... - y` (the listed edges and 2j-nodes) by a
/// single edge with id `new_id`, choosing its arrow and a sign so that the
/// value is unchanged.
fn splice(
    net: &mut SpinNetwork,
    x: Endpoint,
    y: Endpoint,
    transfer: Mat,
    j2: i64,
    new_id: &str,
    remove_edges: &[String],
    remove_nodes: &[String],
) {
    let vx = end_variance(net, &x);
    let vy = end_variance(net, &y);
    let (x_is_tail, p) = match_link(j2, vx, vy, &transfer);
    let j = net.edge(&remove_edges[0]).unwrap().j;
    net.edges.retain(|e| !remove_edges.contains(&e.id));
    net.nodes.retain(|n| !remove_nodes.contains(&n.id));
    let (tail, head) = if x_is_tail { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) };
    set_port(net, &x, new_id);
    set_port(net, &y, new_id);
    net.edges.push(Edge::directed(new_id, j, tail, head));
    scale_phase(net, p);
}

/// Flips the arrow of `edge_id` without compensating; the value changes by
/// `(-1)^{2j}`.
pub fn flip_arrow(net: &SpinNetwork, edge_id: &str) -> Result<SpinNetwork> {
    let i = net.edge_index(edge_id).ok_or_else(|| Error::UnknownEdge(edge_id.to_string()))?;
    let mut out = net.clone();
    out.edges[i].arrow = out.edges[i].arrow.flipped();
    Ok(out)
}

/// Reverses the arrow of `edge_id` and multiplies the phase by `(-1)^{2j}`,
/// which leaves the value of the network unchanged.
pub fn reverse_arrow(net: &SpinNetwork, edge_id: &str) -> Result<SpinNetwork> {
    let mut out = flip_arrow(net, edge_id)?;
    let eps = out.edge(edge_id).unwrap().epsilon();
    scale_phase(&mut out, eps);
    Ok(out)
}

fn k2_index(net: &SpinNetwork, node_id: &str) -> Result<usize> {
    net.node_index(node_id)
        .filter(|&i| net.nodes[i].is_k2())
        .ok_or_else(|| Error::NotATwoJNode(node_id.to_string()))
}

/// Swaps the operand order of a 2j-node without compensating.
pub fn flip_stub(net: &SpinNetwork, node_id: &str) -> Result<SpinNetwork> {
    let i = k2_index(net, node_id)?;
    let mut out = net.clone();
    if let NodeKind::K2(s) = out.nodes[i].kind {
        out.nodes[i].kind = NodeKind::K2(s.flipped());
    }
    Ok(out)
}

/// Swaps the operand order of a 2j-node and multiplies the phase by
/// `(-1)^{2j}`, leaving the value unchanged.
pub fn invert_stub(net: &SpinNetwork, node_id: &str) -> Result<SpinNetwork> {
    let mut out = flip_stub(net, node_id)?;
    let eid = out.node(node_id).unwrap().ports[0].clone();
    let eps = out.edge(&eid).unwrap().epsilon();
    scale_phase(&mut out, eps);
    Ok(out)
}

/// Hermitian conjugate: bra and ket chevrons exchanged, every arrow
/// reversed, stars toggled on terminal symbols. Drawing the conjugate as the
/// mirror image also reverses the cyclic order at every 3j-node and the
/// operand order at every 2j-node.
pub fn hermitian_conjugate(net: &SpinNetwork) -> SpinNetwork {
    let mut out = net.clone();
    for e in &mut out.edges {
        e.arrow = e.arrow.flipped();
        for ep in [&mut e.from, &mut e.to] {
            if let Endpoint::Terminal(t) = ep {
                *t = t.conjugate();
            }
        }
    }
    for n in &mut out.nodes {
        n.kind = match n.kind {
            NodeKind::W3(o) => NodeKind::W3(o.flipped()),
            NodeKind::K2(s) => NodeKind::K2(s.flipped()),
        };
    }
    out
}

/// For a 2j-node, the port index of its first operand and the two edge ids.
fn k2_layout(node: &Node) -> Option<(usize, [String; 2])> {
    match node.kind {
        NodeKind::K2(s) => Some((s.first_port(), [node.ports[0].clone(), node.ports[1].clone()])),
        _ => None,
    }
}

/// Finds one adjacent pair of 2j-nodes with oppositely oriented stubs:
/// either both first operands face the shared edge or both face away.
fn find_opposite_pair(net: &SpinNetwork) -> Option<(String, usize, String, usize, String)> {
    for e in &net.edges {
        let (Endpoint::Port { node: n1, port: p1 }, Endpoint::Port { node: n2, port: p2 }) = (&e.from, &e.to)
        else {
            continue;
        };
        if n1 == n2 {
            continue;
        }
        let (k1, k2) = (net.node(n1)?, net.node(n2)?);
        let (Some((f1, ports1)), Some((f2, ports2))) = (k2_layout(k1), k2_layout(k2)) else {
            continue;
        };
        // outer edges must be distinct and not close a loop through the pair
        let outer1 = &ports1[1 - p1];
        let outer2 = &ports2[1 - p2];
        if outer1 == outer2 || outer1 == &e.id || outer2 == &e.id {
            continue;
        }
        let inner1 = f1 == *p1;
        let inner2 = f2 == *p2;
        if inner1 == inner2 {
            return Some((n1.clone(), *p1, n2.clone(), *p2, e.id.clone()));
        }
    }
    None
}

/// Removes every adjacent pair of 2j-nodes with oppositely oriented stubs,
/// splicing the two outer edges into one. The value is unchanged.
pub fn cancel_stub_pairs(net: &SpinNetwork) -> SpinNetwork {
    let mut out = net.clone();
    while let Some((n1, p1, n2, p2, inner)) = find_opposite_pair(&out) {
        let k1 = out.node(&n1).unwrap().clone();
        let k2 = out.node(&n2).unwrap().clone();
        let a = out.edge(&k1.ports[1 - p1]).unwrap().clone();
        let b = out.edge(&k2.ports[1 - p2]).unwrap().clone();
        let e = out.edge(&inner).unwrap().clone();
        let x = other_end(&a, &n1, 1 - p1).clone();
        let y = other_end(&b, &n2, 1 - p2).clone();
        let j2 = e.j.twice();
        let (f1, _) = k2_layout(&k1).unwrap();
        let (f2, _) = k2_layout(&k2).unwrap();
        let t = matmul(
            &matmul(
                &matmul(&edge_matrix(&out, &a, &x), &k_matrix(j2, f1 == 1 - p1)),
                &edge_matrix(&out, &e, &Endpoint::port(&n1, p1)),
            ),
            &matmul(&k_matrix(j2, f2 == p2), &edge_matrix(&out, &b, &Endpoint::port(&n2, 1 - p2))),
        );
        splice(
            &mut out,
            x,
            y,
            t,
            j2,
            &a.id.clone(),
            &[a.id.clone(), e.id.clone(), b.id.clone()],
            &[n1, n2],
        );
    }
    out
}

/// Whether every edge not ending in a chevron runs from an upper end
/// (2j-node port or unstarred symbol) to a lower end (3j-node port or
/// starred symbol).
pub fn is_standard_form(net: &SpinNetwork) -> bool {
    net.edges.iter().all(|e| {
        let (t, h) = (end_variance(net, e.tail()), end_variance(net, e.head()));
        t == Variance::Free || h == Variance::Free || (t == Variance::Upper && h == Variance::Lower)
    })
}

enum Fix {
    Reverse(usize),
    Insert(usize),
    SelfLoop(usize),
    RemoveK { edge: usize, node: String, port: usize },
}

fn next_fix(net: &SpinNetwork) -> Option<Fix> {
    use Variance::*;
    for (i, e) in net.edges.iter().enumerate() {
        let (t, h) = (end_variance(net, e.tail()), end_variance(net, e.head()));
        match (t, h) {
            (Free, _) | (_, Free) | (Upper, Lower) => {}
            (Lower, Upper) => return Some(Fix::Reverse(i)),
            (Lower, Lower) => return Some(Fix::Insert(i)),
            (Upper, Upper) => {
                if let (Some(a), Some(b)) = (e.from.node(), e.to.node()) {
                    if a == b && net.node(a).is_some_and(|n| n.is_k2()) {
                        return Some(Fix::SelfLoop(i));
                    }
                }
                for ep in [e.head(), e.tail()] {
                    if let Endpoint::Port { node, port } = ep {
                        if net.node(node).is_some_and(|n| n.is_k2()) {
                            return Some(Fix::RemoveK { edge: i, node: node.clone(), port: *port });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Brings the network to standard form: arrows point into 3j-nodes, out of
/// 2j-nodes, toward starred symbols and away from unstarred ones. Phases
/// extracted on the way are accumulated in the phase field, so the value is
/// unchanged. Edges ending in chevrons are left as they are.
pub fn to_standard_form(net: &SpinNetwork) -> SpinNetwork {
    let mut out = net.clone();
    while let Some(fix) = next_fix(&out) {
        match fix {
            Fix::Reverse(i) => {
                let eps = out.edges[i].epsilon();
                out.edges[i].arrow = out.edges[i].arrow.flipped();
                scale_phase(&mut out, eps);
            }
            Fix::Insert(i) => {
                let e = out.edges[i].clone();
                let k = out.fresh_id(&format!("k_{}", e.id));
                let second = out.fresh_id(&format!("{}'", e.id));
                let tail = e.tail().clone();
                let head = e.head().clone();
                out.edges[i] = Edge::directed(&e.id, e.j, Endpoint::port(&k, 0), tail);
                out.edges.push(Edge::directed(&second, e.j, Endpoint::port(&k, 1), head.clone()));
                set_port(&mut out, &head, &second);
                out.nodes.push(Node::k2(&k, [&e.id, &second], Stub::Up));
            }
            Fix::SelfLoop(i) => {
                let e = out.edges[i].clone();
                let node = out.node(e.from.node().unwrap()).unwrap().clone();
                let (first, _) = k2_layout(&node).unwrap();
                let j2 = e.j.twice();
                let tail_port = match e.tail() {
                    Endpoint::Port { port, .. } => *port,
                    _ => unreachable!(),
                };
                let mut total = 0i64;
                for a in 0..=j2 as usize {
                    for b in 0..=j2 as usize {
                        // projections at port 0 and port 1
                        let (m0, m1) = (m_of(j2, a), m_of(j2, b));
                        let (mt, mh) = if tail_port == 0 { (m0, m1) } else { (m1, m0) };
                        let (mf, ms) = if first == 0 { (m0, m1) } else { (m1, m0) };
                        total += k_component(j2, mf, ms)
                            * edge_factor(Variance::Upper, Variance::Upper, j2, mt, mh);
                    }
                }
                out.edges.remove(i);
                out.nodes.retain(|n| n.id != node.id);
                out.phase = out.phase.mul(&ExactRadical::from_integer(total));
            }
            Fix::RemoveK { edge, node, port } => {
                let e = out.edges[edge].clone();
                let k = out.node(&node).unwrap().clone();
                let (first, _) = k2_layout(&k).unwrap();
                let f = out.edge(&k.ports[1 - port]).unwrap().clone();
                let x = other_end(&e, &node, port).clone();
                let y = other_end(&f, &node, 1 - port).clone();
                let j2 = e.j.twice();
                let t = matmul(
                    &matmul(&edge_matrix(&out, &e, &x), &k_matrix(j2, first == port)),
                    &edge_matrix(&out, &f, &Endpoint::port(&node, 1 - port)),
                );
                splice(&mut out, x, y, t, j2, &e.id.clone(), &[e.id.clone(), f.id.clone()], &[node]);
            }
        }
    }
    out
}
