//! JSON text format for spin networks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::model::{Arrow, Edge, Endpoint, Node, NodeKind, Orientation, SpinNetwork, Stub, Terminal};
use crate::error::{Error, Result};
use crate::exact::{ExactRadical, HalfInt};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkDoc {
    nodes: Vec<NodeDoc>,
    edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phase: Option<PhaseDoc>,
}

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum KindDoc {
    W3,
    K2,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NodeDoc {
    id: String,
    kind: KindDoc,
    ports: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orientation: Option<Orientation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    stub: Option<Stub>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EndDoc {
    Port { node: String, port: usize },
    Terminal { terminal: Terminal },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: String,
    j2: i64,
    from: EndDoc,
    to: EndDoc,
    arrow: Arrow,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PhaseDoc {
    coef_num: i64,
    coef_den: i64,
    radicand_num: i64,
    radicand_den: i64,
}

impl From<EndDoc> for Endpoint {
    fn from(d: EndDoc) -> Self {
        match d {
            EndDoc::Port { node, port } => Endpoint::Port { node, port },
            EndDoc::Terminal { terminal } => Endpoint::Terminal(terminal),
        }
    }
}

impl From<&Endpoint> for EndDoc {
    fn from(e: &Endpoint) -> Self {
        match e {
            Endpoint::Port { node, port } => EndDoc::Port { node: node.clone(), port: *port },
            Endpoint::Terminal(t) => EndDoc::Terminal { terminal: t.clone() },
        }
    }
}

fn small(x: &BigInt, what: &str) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Validation(format!("phase {what} {x} does not fit a 64-bit integer")))
}

/// Parses a network from its JSON description and validates it.
pub fn parse(text: &str) -> Result<SpinNetwork> {
    let doc: NetworkDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let mut nodes = Vec::with_capacity(doc.nodes.len());
    for n in doc.nodes {
        let kind = match (n.kind, n.stub) {
            (KindDoc::W3, None) => NodeKind::W3(n.orientation.unwrap_or_default()),
            (KindDoc::W3, Some(_)) => {
                return Err(Error::Validation(format!("3j-node `{}` has a stub", n.id)))
            }
            (KindDoc::K2, Some(stub)) => NodeKind::K2(stub),
            (KindDoc::K2, None) => {
                return Err(Error::Validation(format!("2j-node `{}` has no stub", n.id)))
            }
        };
        nodes.push(Node { id: n.id, kind, ports: n.ports });
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in doc.edges {
        edges.push(Edge {
            id: e.id,
            j: HalfInt::from_twice(e.j2),
            from: e.from.into(),
            to: e.to.into(),
            arrow: e.arrow,
        });
    }
    let phase = match doc.phase {
        None => ExactRadical::one(),
        Some(p) => {
            if p.coef_den == 0 || p.radicand_den == 0 {
                return Err(Error::Validation("phase has a zero denominator".into()));
            }
            let rad = BigRational::new(BigInt::from(p.radicand_num), BigInt::from(p.radicand_den));
            if rad.is_negative() {
                return Err(Error::Validation("phase has a negative radicand".into()));
            }
            ExactRadical::new(
                BigRational::new(BigInt::from(p.coef_num), BigInt::from(p.coef_den)),
                rad,
            )?
        }
    };
    let net = SpinNetwork { nodes, edges, phase };
    net.validate()?;
    Ok(net)
}

fn to_doc(net: &SpinNetwork) -> Result<NetworkDoc> {
    let nodes = net
        .nodes
        .iter()
        .map(|n| {
            let (kind, orientation, stub) = match n.kind {
                NodeKind::W3(o) => (KindDoc::W3, Some(o), None),
                NodeKind::K2(s) => (KindDoc::K2, None, Some(s)),
            };
            NodeDoc { id: n.id.clone(), kind, ports: n.ports.clone(), orientation, stub }
        })
        .collect();
    let edges = net
        .edges
        .iter()
        .map(|e| EdgeDoc {
            id: e.id.clone(),
            j2: e.j.twice(),
            from: (&e.from).into(),
            to: (&e.to).into(),
            arrow: e.arrow,
        })
        .collect();
    let c = net.phase.coef();
    let r = net.phase.radicand();
    let phase = PhaseDoc {
        coef_num: small(c.numer(), "numerator")?,
        coef_den: small(c.denom(), "denominator")?,
        radicand_num: small(r.numer(), "radicand")?,
        radicand_den: small(r.denom(), "radicand denominator")?,
    };
    Ok(NetworkDoc { nodes, edges, phase: Some(phase) })
}

/// Pretty-printed JSON description; [`parse`] inverts it.
pub fn serialize(net: &SpinNetwork) -> Result<String> {
    Ok(serde_json::to_string_pretty(&to_doc(net)?).expect("network document serializes"))
}

/// The network as a JSON value.
pub fn to_value(net: &SpinNetwork) -> Result<serde_json::Value> {
    Ok(serde_json::to_value(to_doc(net)?).expect("network document serializes"))
}
