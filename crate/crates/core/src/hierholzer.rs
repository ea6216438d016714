//! Greedy detection of a direction-consistent circuit whose abelianization is
//! a given connected circulation.

use crate::error::{Error, Result};
use crate::graph::{Circuit, Dart, EdgeId, Graph, VertexId};
use crate::homology::{is_circulation, support_info, Chain};

/// Overrides for the two free choices of the greedy walk.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DetectOptions {
    /// Starting vertex; the lowest support vertex when `None`.
    pub start: Option<VertexId>,
    /// Edges tried first, in this order. Unlisted edges follow by ascending id.
    pub edge_priority: Vec<EdgeId>,
}

/// Detects a circuit `C` with `C^ab = alpha` and exactly `||alpha||` darts.
pub fn detect_dcc(g: &Graph, alpha: &Chain) -> Result<Circuit> {
    detect_dcc_with(g, alpha, &DetectOptions::default())
}

pub fn detect_dcc_with(g: &Graph, alpha: &Chain, opts: &DetectOptions) -> Result<Circuit> {
    if alpha.is_zero() {
        return Err(Error::ZeroChain);
    }
    alpha.check_on(g)?;
    if !is_circulation(g, alpha) {
        return Err(Error::NotCirculation);
    }
    let info = support_info(g, alpha)?;
    if !info.connected {
        return Err(Error::DisconnectedSupport);
    }
    let start = match opts.start {
        Some(v) => {
            g.check_vertex(v)?;
            if !info.contains_vertex(v) {
                return Err(Error::StartNotInSupport(v));
            }
            v
        }
        None => info.components[0].vertices[0],
    };

    let mut rank: Vec<usize> = (0..g.edge_count())
        .map(|e| opts.edge_priority.len() + e)
        .collect();
    for (i, &e) in opts.edge_priority.iter().enumerate().rev() {
        g.check_edge(e)?;
        rank[e] = i;
    }

    // residual out-darts per vertex, best rank last so that pop is cheap
    let mut residual: Vec<Vec<(Dart, u64)>> = vec![Vec::new(); g.vertex_count()];
    for &d in &info.orientation {
        residual[g.tail(d)].push((d, alpha.coeff(d.edge).unsigned_abs()));
    }
    for list in &mut residual {
        list.sort_by_key(|(d, _)| std::cmp::Reverse(rank[d.edge]));
    }
    let mut left = alpha.norm();

    let mut path: Vec<Dart> = Vec::with_capacity(left as usize);
    let mut cur = start;
    loop {
        while let Some(slot) = residual[cur].last_mut() {
            let d = slot.0;
            slot.1 -= 1;
            if slot.1 == 0 {
                residual[cur].pop();
            }
            left -= 1;
            path.push(d);
            cur = g.head(d);
        }
        if left == 0 {
            break;
        }
        // stuck: the path is closed; rotate it to a vertex with residual darts
        let k = (1..path.len())
            .find(|&k| !residual[g.tail(path[k])].is_empty())
            .expect("connected support leaves a reachable residual dart");
        path.rotate_left(k);
        cur = g.tail(path[0]);
    }
    Circuit::new(g, path)
}
