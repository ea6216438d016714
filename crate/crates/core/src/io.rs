//! JSON formats for graphs, chains, walks and task matrices. Rationals are
//! written as `"p/q"` strings so that nothing passes through floating point.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, Graph, VertexId, Weight};
use crate::homology::Chain;
use crate::trp::TaskMatrix;

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Deserialize)]
struct GraphDoc {
    vertices: usize,
    edges: Vec<EdgeDoc>,
}

#[derive(Deserialize)]
struct EdgeDoc {
    id: usize,
    u: VertexId,
    v: VertexId,
    #[serde(default)]
    weight: Option<Value>,
}

fn parse_weight(v: &Value) -> Result<Weight> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) if n.is_u64() || n.is_i64() => n.to_string().parse(),
        other => Err(Error::BadWeight(other.to_string())),
    }
}

/// `{"vertices": n, "edges": [{"id", "u", "v", "weight"?}]}`. Edges may be
/// listed in any order but their ids must cover `0..m` exactly once.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(parse_err)?;
    let m = doc.edges.len();
    let mut slots: Vec<Option<Edge>> = vec![None; m];
    for e in doc.edges {
        if e.id >= m {
            return Err(Error::BadEdgeId(format!("id {} with {} edges", e.id, m)));
        }
        if slots[e.id].is_some() {
            return Err(Error::BadEdgeId(format!("id {} repeated", e.id)));
        }
        let weight = match &e.weight {
            Some(w) => parse_weight(w)?,
            None => Weight::one(),
        };
        slots[e.id] = Some(Edge::weighted(e.u, e.v, weight));
    }
    Graph::new(
        doc.vertices,
        slots.into_iter().map(Option::unwrap).collect(),
    )
}

pub fn graph_to_json(g: &Graph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(id, e)| {
            let mut obj = json!({"id": id, "u": e.u, "v": e.v});
            if !e.weight.is_one() {
                obj["weight"] = json!(e.weight.to_string());
            }
            obj
        })
        .collect();
    json!({"vertices": g.vertex_count(), "edges": edges})
}

#[derive(Deserialize)]
struct ChainDoc {
    coeffs: BTreeMap<String, i64>,
}

/// `{"coeffs": {"edge id": coefficient}}`.
pub fn parse_chain(text: &str) -> Result<Chain> {
    let doc: ChainDoc = serde_json::from_str(text).map_err(parse_err)?;
    let mut c = Chain::zero();
    for (k, v) in doc.coeffs {
        let e: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("edge id {k:?} is not an integer")))?;
        c.add_to(e, v);
    }
    Ok(c)
}

pub fn chain_to_json(c: &Chain) -> Value {
    let coeffs: serde_json::Map<String, Value> =
        c.iter().map(|(e, k)| (e.to_string(), json!(k))).collect();
    json!({ "coeffs": coeffs })
}

#[derive(Serialize, Deserialize)]
struct DartDoc {
    edge: usize,
    forward: bool,
}

/// A bare list of `{"edge", "forward"}`.
pub fn parse_darts(text: &str) -> Result<Vec<Dart>> {
    let doc: Vec<DartDoc> = serde_json::from_str(text).map_err(parse_err)?;
    Ok(doc
        .into_iter()
        .map(|d| Dart::new(d.edge, d.forward))
        .collect())
}

pub fn darts_to_json(darts: &[Dart]) -> Value {
    Value::Array(
        darts
            .iter()
            .map(|d| json!({"edge": d.edge, "forward": d.forward}))
            .collect(),
    )
}

#[derive(Deserialize)]
struct TasksDoc {
    tasks: Vec<TaskDoc>,
}

#[derive(Deserialize)]
struct TaskDoc {
    from: VertexId,
    to: VertexId,
    count: u64,
}

/// `{"tasks": [{"from", "to", "count"}]}`. Repeated pairs add up.
pub fn parse_tasks(text: &str) -> Result<TaskMatrix> {
    let doc: TasksDoc = serde_json::from_str(text).map_err(parse_err)?;
    Ok(TaskMatrix::from_triples(
        doc.tasks.into_iter().map(|t| (t.from, t.to, t.count)),
    ))
}

pub fn tasks_to_json(q: &TaskMatrix) -> Value {
    let tasks: Vec<Value> = q
        .iter()
        .map(|(i, j, k)| json!({"from": i, "to": j, "count": k}))
        .collect();
    json!({ "tasks": tasks })
}
