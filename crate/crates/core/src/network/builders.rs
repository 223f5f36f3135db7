//! Ready-made networks: theta graphs, the tetrahedral network of the
//! 6j-symbol, loops of 2j-nodes, and a small test corpus.

use super::model::{Edge, Endpoint, Node, Orientation, SpinNetwork, Stub, Terminal};
use super::rewrite::{flip_arrow, to_standard_form};
use crate::error::Result;
use crate::exact::HalfInt;
use crate::symbols::SixJArgs;

fn p(node: &str, port: usize) -> Endpoint {
    Endpoint::port(node, port)
}

/// Two 3j-nodes joined by three edges, arrows from `a` to `b`. Its value is
/// 1 for an admissible triad and 0 otherwise.
pub fn theta(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> Result<SpinNetwork> {
    SpinNetwork::new(
        vec![
            Node::w3("a", ["e1", "e2", "e3"], Orientation::Ccw),
            Node::w3("b", ["e1", "e2", "e3"], Orientation::Ccw),
        ],
        vec![
            Edge::directed("e1", j1, p("a", 0), p("b", 0)),
            Edge::directed("e2", j2, p("a", 1), p("b", 1)),
            Edge::directed("e3", j3, p("a", 2), p("b", 2)),
        ],
    )
}

/// Tetrahedral network of `{j1 j2 j3; j4 j5 j6}` (symbols read row by row).
///
/// Nodes `A = (1 2 3)`, `B = (1 5 6)`, `C = (2 6 4)`, `D = (3 4 5)`, all
/// counterclockwise. Each arrow runs from the node where the projection of
/// that edge enters unprimed to the node where it enters primed:
/// `1: A→B`, `2: A→C`, `3: A→D`, `4: C→D`, `5: D→B`, `6: B→C`.
/// Putting this network in standard form reproduces the explicit m-sum term
/// by term.
pub fn tetrahedral(args: &SixJArgs) -> Result<SpinNetwork> {
    let [j1, j2, j3, j4, j5, j6] = args.as_array();
    SpinNetwork::new(
        vec![
            Node::w3("A", ["e1", "e2", "e3"], Orientation::Ccw),
            Node::w3("B", ["e1", "e5", "e6"], Orientation::Ccw),
            Node::w3("C", ["e2", "e6", "e4"], Orientation::Ccw),
            Node::w3("D", ["e3", "e4", "e5"], Orientation::Ccw),
        ],
        vec![
            Edge::directed("e1", j1, p("A", 0), p("B", 0)),
            Edge::directed("e2", j2, p("A", 1), p("C", 0)),
            Edge::directed("e3", j3, p("A", 2), p("D", 0)),
            Edge::directed("e4", j4, p("C", 2), p("D", 1)),
            Edge::directed("e5", j5, p("D", 2), p("B", 1)),
            Edge::directed("e6", j6, p("B", 2), p("C", 1)),
        ],
    )
}

/// The tetrahedral network with a 2j-node inserted on every edge, in
/// standard form.
pub fn tetrahedral_standard(args: &SixJArgs) -> Result<SpinNetwork> {
    Ok(to_standard_form(&tetrahedral(args)?))
}

/// A closed loop of spin `j` through two 2j-nodes `k1`, `k2` joined by edges
/// `a` (`k1` port 0 to `k2` port 0) and `b` (`k1` port 1 to `k2` port 1),
/// both with arrows leaving `k1`.
pub fn k_loop(j: HalfInt, stub1: Stub, stub2: Stub) -> Result<SpinNetwork> {
    SpinNetwork::new(
        vec![Node::k2("k1", ["a", "b"], stub1), Node::k2("k2", ["a", "b"], stub2)],
        vec![
            Edge::directed("a", j, p("k1", 0), p("k2", 0)),
            Edge::directed("b", j, p("k1", 1), p("k2", 1)),
        ],
    )
}

/// A single 2j-node whose two ports are joined by one edge.
pub fn k_self_loop(j: HalfInt, stub: Stub) -> Result<SpinNetwork> {
    SpinNetwork::new(
        vec![Node::k2("k", ["a", "a"], stub)],
        vec![Edge::directed("a", j, p("k", 0), p("k", 1))],
    )
}

/// A theta graph whose first edge passes through a pair of 2j-nodes
/// `a -e1- k1 -m- k2 -e1'- b` with the given stubs.
pub fn theta_with_k_pair(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    stub1: Stub,
    stub2: Stub,
) -> Result<SpinNetwork> {
    SpinNetwork::new(
        vec![
            Node::w3("a", ["e1", "e2", "e3"], Orientation::Ccw),
            Node::w3("b", ["f1", "e2", "e3"], Orientation::Ccw),
            Node::k2("k1", ["e1", "m"], stub1),
            Node::k2("k2", ["m", "f1"], stub2),
        ],
        vec![
            Edge::directed("e1", j1, p("k1", 0), p("a", 0)),
            Edge::directed("m", j1, p("k1", 1), p("k2", 0)),
            Edge::directed("f1", j1, p("k2", 1), p("b", 0)),
            Edge::directed("e2", j2, p("a", 1), p("b", 1)),
            Edge::directed("e3", j3, p("a", 2), p("b", 2)),
        ],
    )
}

/// Triangular prism: two triangles `a b c` and `d e f` joined by rungs.
pub fn prism(j: [HalfInt; 9]) -> Result<SpinNetwork> {
    SpinNetwork::new(
        vec![
            Node::w3("a", ["ab", "ca", "ad"], Orientation::Ccw),
            Node::w3("b", ["bc", "ab", "be"], Orientation::Ccw),
            Node::w3("c", ["ca", "bc", "cf"], Orientation::Ccw),
            Node::w3("d", ["de", "ad", "fd"], Orientation::Cw),
            Node::w3("e", ["ef", "be", "de"], Orientation::Cw),
            Node::w3("f", ["fd", "cf", "ef"], Orientation::Cw),
        ],
        vec![
            Edge::directed("ab", j[0], p("a", 0), p("b", 1)),
            Edge::directed("bc", j[1], p("b", 0), p("c", 1)),
            Edge::directed("ca", j[2], p("c", 0), p("a", 1)),
            Edge::directed("de", j[3], p("d", 0), p("e", 2)),
            Edge::directed("ef", j[4], p("e", 0), p("f", 2)),
            Edge::directed("fd", j[5], p("f", 0), p("d", 2)),
            Edge::directed("ad", j[6], p("a", 2), p("d", 1)),
            Edge::directed("be", j[7], p("b", 2), p("e", 1)),
            Edge::directed("cf", j[8], p("c", 2), p("f", 1)),
        ],
    )
}

/// Complete bipartite graph `K(3,3)` on the 9j-symbol
/// `{j11 j12 j13; j21 j22 j23; j31 j32 j33}`: rows are nodes `r1..r3`
/// (counterclockwise), columns are nodes `c1..c3` (clockwise), arrows run
/// from rows to columns. Its value is `(-1)^{Σj}` times the 9j-symbol.
pub fn k33(j: [[HalfInt; 3]; 3]) -> Result<SpinNetwork> {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let id = |r: usize, c: usize| format!("x{}{}", r + 1, c + 1);
    for r in 0..3 {
        let ports = [id(r, 0), id(r, 1), id(r, 2)];
        nodes.push(Node::w3(&format!("r{}", r + 1), [&ports[0], &ports[1], &ports[2]], Orientation::Ccw));
    }
    for c in 0..3 {
        let ports = [id(0, c), id(1, c), id(2, c)];
        nodes.push(Node::w3(&format!("c{}", c + 1), [&ports[0], &ports[1], &ports[2]], Orientation::Cw));
    }
    for (r, row) in j.iter().enumerate() {
        for (c, &jj) in row.iter().enumerate() {
            edges.push(Edge::directed(
                &id(r, c),
                jj,
                p(&format!("r{}", r + 1), c),
                p(&format!("c{}", c + 1), r),
            ));
        }
    }
    SpinNetwork::new(nodes, edges)
}

/// Basis ket `|j m⟩` drawn as an edge from a ket chevron to an `m` symbol.
pub fn basis_ket(j: HalfInt, m: HalfInt) -> Result<SpinNetwork> {
    SpinNetwork::new(
        vec![],
        vec![Edge::directed(
            "e",
            j,
            Endpoint::Terminal(Terminal::m(m, false)),
            Endpoint::Terminal(Terminal::Ket),
        )],
    )
}

/// A 3j-node with its three edges ending in `m` symbols, unstarred and with
/// inward arrows: the components of the 3j-intertwiner.
pub fn three_j_components(j: [HalfInt; 3], m: [HalfInt; 3]) -> Result<SpinNetwork> {
    let ids = ["e1", "e2", "e3"];
    SpinNetwork::new(
        vec![Node::w3("w", ids, Orientation::Ccw)],
        (0..3)
            .map(|i| {
                Edge::directed(ids[i], j[i], Endpoint::Terminal(Terminal::m(m[i], false)), p("w", i))
            })
            .collect(),
    )
}

/// Provenance of a corpus network's expected value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    /// Equal to the 6j m-sum of the given arguments.
    SixJ(SixJArgs),
    /// A known exact integer.
    Integer(i64),
    /// Recorded from a previous evaluation.
    Recorded,
}

/// Named closed networks with spins at most 2, used as a test corpus.
pub fn corpus() -> Result<Vec<(String, SpinNetwork, Expected)>> {
    let h = HalfInt::from_twice;
    let mut out = Vec::new();

    for t in [[1, 1, 2], [2, 2, 2], [4, 4, 4], [1, 3, 2], [2, 2, 4], [1, 1, 4]] {
        let ok = crate::symbols::triangle(h(t[0]), h(t[1]), h(t[2]));
        out.push((
            format!("theta_{}_{}_{}", t[0], t[1], t[2]),
            theta(h(t[0]), h(t[1]), h(t[2]))?,
            Expected::Integer(ok as i64),
        ));
    }
    for t in [
        [2, 2, 2, 2, 2, 2],
        [1, 1, 2, 2, 2, 1],
        [4, 4, 4, 4, 4, 4],
        [3, 2, 1, 1, 2, 3],
        [2, 4, 2, 4, 2, 4],
        [1, 1, 2, 1, 1, 2],
    ] {
        let args = SixJArgs::from_twice(t);
        let name = t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_");
        out.push((format!("tetra_{name}"), tetrahedral(&args)?, Expected::SixJ(args)));
        out.push((format!("tetra_std_{name}"), tetrahedral_standard(&args)?, Expected::SixJ(args)));
    }
    let args = SixJArgs::from_twice([3, 2, 1, 1, 2, 3]);
    let mut mixed = tetrahedral(&args)?;
    mixed.nodes[1].kind = super::model::NodeKind::W3(Orientation::Cw);
    mixed = flip_arrow(&mixed, "e2")?;
    out.push(("tetra_mixed_3_2_1_1_2_3".into(), mixed, Expected::Recorded));

    for (tj, s1, s2) in [
        (1, Stub::Up, Stub::Up),
        (1, Stub::Up, Stub::Down),
        (2, Stub::Up, Stub::Down),
        (3, Stub::Down, Stub::Down),
        (4, Stub::Up, Stub::Up),
    ] {
        let j = h(tj);
        out.push((
            format!("kloop_{tj}_{s1:?}_{s2:?}").to_lowercase(),
            k_loop(j, s1, s2)?,
            Expected::Integer(k_loop_value(tj, s1, s2)),
        ));
    }
    out.push(("kself_3".into(), k_self_loop(h(3), Stub::Up)?, Expected::Integer(4)));
    out.push((
        "theta_kpair_1_1_2".into(),
        theta_with_k_pair(h(1), h(1), h(2), Stub::Down, Stub::Up)?,
        Expected::Recorded,
    ));
    out.push((
        "theta_kpair_same_3_2_1".into(),
        theta_with_k_pair(h(3), h(2), h(1), Stub::Up, Stub::Up)?,
        Expected::Recorded,
    ));
    out.push(("prism_1".into(), prism([h(2); 9])?, Expected::Recorded));
    out.push((
        "prism_long_rung".into(),
        prism([h(2), h(2), h(2), h(2), h(2), h(2), h(4), h(2), h(2)])?,
        Expected::Recorded,
    ));
    for (name, t) in [
        ("k33_1", [[2, 2, 2], [2, 2, 2], [2, 2, 4]]),
        ("k33_zero_spin", [[2, 2, 2], [2, 2, 0], [2, 0, 2]]),
        ("k33_half", [[1, 1, 2], [1, 1, 0], [2, 2, 2]]),
    ] {
        out.push((name.into(), k33(t.map(|r| r.map(h)))?, Expected::Recorded));
    }
    Ok(out)
}

/// Value of [`k_loop`]: `Σ_m K(...) K(...)` with both arrows leaving `k1`.
/// Equal stubs give `2j+1`, unequal stubs `(-1)^{2j}(2j+1)`.
pub fn k_loop_value(j2: i64, stub1: Stub, stub2: Stub) -> i64 {
    let eps = if j2 % 2 == 0 { 1 } else { -1 };
    if stub1 == stub2 {
        j2 + 1
    } else {
        eps * (j2 + 1)
    }
}
