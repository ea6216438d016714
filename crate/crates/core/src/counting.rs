//! Exact counting of shortest circuits in a homology class through the
//! coefficient-weighted Laplacian, and a depth-first enumeration oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Circuit, Dart, Graph, VertexId};
use crate::homology::{is_circulation, support_info, support_subgraph, Chain};

/// Square integer matrix, row-major.
pub type Matrix = Vec<Vec<BigInt>>;

/// Count of circuits with abelianization `alpha` and length `||alpha||`,
/// with the factors of the product formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub total: BigInt,
    pub norm: BigInt,
    /// Reduced Laplacian determinant.
    pub determinant: BigInt,
    /// Product of `(out-degree - 1)!` over support vertices.
    pub out_degree_factor: BigInt,
    /// Product of `|coefficient|!` over support edges.
    pub multiplicity_factor: BigInt,
    /// Whether the support was the whole graph; the count is taken on the
    /// support subgraph otherwise.
    pub universal: bool,
    /// Removed vertex, in the original numbering.
    pub removed_vertex: VertexId,
}

impl CountResult {
    /// Rotation classes: `total / ||alpha||`.
    pub fn cycles(&self) -> BigInt {
        &self.total / &self.norm
    }
}

/// Laplacian weighted by chain coefficients along the induced orientation.
/// The chain must be universal. Loops are left out.
pub fn weighted_laplacian(g: &Graph, alpha: &Chain) -> Result<Matrix> {
    let info = support_info(g, alpha)?;
    if !info.universal {
        return Err(Error::NotUniversal);
    }
    let n = g.vertex_count();
    let mut l = vec![vec![BigInt::zero(); n]; n];
    for &d in &info.orientation {
        let (i, j) = (g.tail(d), g.head(d));
        if i == j {
            continue;
        }
        let c = BigInt::from(alpha.coeff(d.edge).unsigned_abs());
        l[i][i] += &c;
        l[i][j] -= c;
    }
    Ok(l)
}

/// Exact determinant by fraction-free elimination. The empty matrix has
/// determinant 1.
pub fn determinant(m: &Matrix) -> BigInt {
    let n = m.len();
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 {
        BigInt::one()
    } else {
        a[n - 1][n - 1].clone()
    };
    if sign {
        -det
    } else {
        det
    }
}

/// Determinant of `l` with row and column `w` removed.
pub fn reduced_determinant(l: &Matrix, w: VertexId) -> BigInt {
    let minor: Matrix = l
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != w)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != w)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect();
    determinant(&minor)
}

fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn check_connected_circulation(g: &Graph, alpha: &Chain) -> Result<()> {
    if alpha.is_zero() {
        return Err(Error::ZeroChain);
    }
    alpha.check_on(g)?;
    if !is_circulation(g, alpha) {
        return Err(Error::NotCirculation);
    }
    if !support_info(g, alpha)?.connected {
        return Err(Error::DisconnectedSupport);
    }
    Ok(())
}

/// Number of circuits `C` with `C^ab = alpha` of length `||alpha||`, counted
/// with their rotations. Non-universal chains are counted on their support.
pub fn count_dcc(g: &Graph, alpha: &Chain) -> Result<CountResult> {
    count_dcc_removing(g, alpha, None)
}

/// As [`count_dcc`], removing row and column `w` (an original vertex id of
/// the support) instead of the lowest support vertex.
pub fn count_dcc_removing(g: &Graph, alpha: &Chain, w: Option<VertexId>) -> Result<CountResult> {
    check_connected_circulation(g, alpha)?;
    let (sub, chain, ids) = support_subgraph(g, alpha)?;
    let universal = ids.len() == g.vertex_count() && chain.support_edges().len() == g.edge_count();
    let local = match w {
        None => 0,
        Some(v) => ids
            .iter()
            .position(|&x| x == v)
            .ok_or(Error::StartNotInSupport(v))?,
    };
    let l = weighted_laplacian(&sub, &chain)?;
    let det = reduced_determinant(&l, local);
    let info = support_info(&sub, &chain)?;
    let out_degree_factor = info
        .out_degree
        .iter()
        .fold(BigInt::one(), |acc, &d| acc * factorial(d - 1));
    let multiplicity_factor = chain.iter().fold(BigInt::one(), |acc, (_, k)| {
        acc * factorial(k.unsigned_abs())
    });
    let norm = BigInt::from(chain.norm());
    let numerator = &norm * &det * &out_degree_factor;
    let (total, rem) = numerator.div_rem(&multiplicity_factor);
    assert!(rem.is_zero(), "product formula left a remainder");
    Ok(CountResult {
        total,
        norm,
        determinant: det,
        out_degree_factor,
        multiplicity_factor,
        universal,
        removed_vertex: ids[local],
    })
}

/// Every circuit with abelianization `alpha` and exactly `||alpha||` darts,
/// rotations listed separately. Disconnected supports and non-circulations
/// give an empty list.
pub fn enumerate_circuits(g: &Graph, alpha: &Chain, budget: u64) -> Result<Vec<Circuit>> {
    let mut found = Vec::new();
    for_each_circuit(g, alpha, budget, |darts| {
        found.push(Circuit::new(g, darts.to_vec()).expect("search yields circuits"));
    })?;
    Ok(found)
}

/// Calls `visit` on the darts of each circuit [`enumerate_circuits`] would
/// return, without collecting them, and returns how many there were. The
/// search runs over all darts and prunes a branch once the residual chain
/// can no longer be spent in the remaining steps.
pub fn for_each_circuit(
    g: &Graph,
    alpha: &Chain,
    budget: u64,
    mut visit: impl FnMut(&[Dart]),
) -> Result<u64> {
    if alpha.is_zero() {
        return Err(Error::ZeroChain);
    }
    alpha.check_on(g)?;
    if !is_circulation(g, alpha) {
        return Ok(0);
    }
    let info = support_info(g, alpha)?;
    let mut search = Enumerator {
        g,
        residual: alpha.dense(g.edge_count()),
        residual_norm: alpha.norm(),
        target: alpha.norm() as usize,
        path: Vec::new(),
        visit: &mut visit,
        found: 0,
        nodes: 0,
        budget,
    };
    for start in info.vertices() {
        search.dfs(start, start)?;
    }
    Ok(search.found)
}

struct Enumerator<'a> {
    g: &'a Graph,
    residual: Vec<i64>,
    residual_norm: u64,
    target: usize,
    path: Vec<Dart>,
    visit: &'a mut dyn FnMut(&[Dart]),
    found: u64,
    nodes: u64,
    budget: u64,
}

impl Enumerator<'_> {
    fn dfs(&mut self, start: VertexId, cur: VertexId) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if self.path.len() == self.target {
            // backtracks are never extended, so only the tail is left to check
            let tail =
                self.path.len() > 1 && self.path[0] == self.path[self.path.len() - 1].inverse();
            if cur == start && self.residual_norm == 0 && !tail {
                self.found += 1;
                (self.visit)(&self.path);
            }
            return Ok(());
        }
        let left_after = (self.target - self.path.len() - 1) as u64;
        for &d in self.g.out_darts(cur) {
            if self.path.last().is_some_and(|&p| p == d.inverse()) {
                continue;
            }
            let before = self.residual[d.edge];
            let after = before - d.sign();
            let norm = self.residual_norm - before.unsigned_abs() + after.unsigned_abs();
            if norm > left_after {
                continue;
            }
            self.residual[d.edge] = after;
            let saved = std::mem::replace(&mut self.residual_norm, norm);
            self.path.push(d);
            let r = self.dfs(start, self.g.head(d));
            self.path.pop();
            self.residual_norm = saved;
            self.residual[d.edge] = before;
            r?;
        }
        Ok(())
    }
}

/// True when every row sums to zero.
pub fn rows_sum_to_zero(l: &Matrix) -> bool {
    l.iter()
        .all(|row| row.iter().fold(BigInt::zero(), |a, x| a + x).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::homology::abelianize;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    // Weighted in-arborescences of the lift rooted at `root`: each other
    // vertex picks one outgoing lifted copy, and every pick must lead to root.
    fn arborescences(g: &Graph, alpha: &Chain, root: VertexId) -> BigInt {
        let info = support_info(g, alpha).unwrap();
        let n = g.vertex_count();
        let choices: Vec<Vec<(VertexId, u64)>> = (0..n)
            .map(|v| {
                info.orientation
                    .iter()
                    .filter(|&&d| g.tail(d) == v && g.head(d) != v)
                    .map(|&d| (g.head(d), alpha.coeff(d.edge).unsigned_abs()))
                    .collect()
            })
            .collect();
        let others: Vec<VertexId> = (0..n).filter(|&v| v != root).collect();
        let mut pick = vec![0usize; others.len()];
        let mut total = BigInt::zero();
        if others.iter().any(|&v| choices[v].is_empty()) {
            return total;
        }
        loop {
            let mut next = vec![root; n];
            let mut weight = BigInt::one();
            for (i, &v) in others.iter().enumerate() {
                let (h, c) = choices[v][pick[i]];
                next[v] = h;
                weight *= c;
            }
            let ok = others.iter().all(|&v| {
                let mut x = v;
                for _ in 0..n {
                    if x == root {
                        return true;
                    }
                    x = next[x];
                }
                x == root
            });
            if ok {
                total += weight;
            }
            let mut i = 0;
            loop {
                if i == others.len() {
                    return total;
                }
                pick[i] += 1;
                if pick[i] < choices[others[i]].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn k4_laplacian() {
        let g = fixtures::k4();
        let l = weighted_laplacian(&g, &fixtures::k4_alpha()).unwrap();
        assert!(rows_sum_to_zero(&l));
        assert_eq!(l[3][2], int(-3));
        for w in 0..4 {
            assert_eq!(reduced_determinant(&l, w), int(12));
            assert_eq!(arborescences(&g, &fixtures::k4_alpha(), w), int(12));
        }
    }

    #[test]
    fn k4_count() {
        let r = count_dcc(&fixtures::k4(), &fixtures::k4_alpha()).unwrap();
        assert_eq!(r.total, int(20));
        assert_eq!(r.norm, int(10));
        assert_eq!(r.determinant, int(12));
        assert_eq!(r.out_degree_factor, int(4));
        assert_eq!(r.multiplicity_factor, int(24));
        assert_eq!(r.cycles(), int(2));
        assert!(r.universal);
        for w in 0..4 {
            let r = count_dcc_removing(&fixtures::k4(), &fixtures::k4_alpha(), Some(w)).unwrap();
            assert_eq!(r.total, int(20));
            assert_eq!(r.removed_vertex, w);
        }
    }

    #[test]
    fn k4_enumeration() {
        let g = fixtures::k4();
        let alpha = fixtures::k4_alpha();
        let all = enumerate_circuits(&g, &alpha, 1_000_000).unwrap();
        assert_eq!(all.len(), 20);
        let reference = Circuit::new(&g, fixtures::k4_reference_circuit()).unwrap();
        assert!(all.contains(&reference));
        for c in &all {
            assert_eq!(abelianize(c.walk()), alpha);
            assert!(c.walk().is_direction_consistent());
        }
        assert_eq!(
            enumerate_circuits(&g, &alpha, 5),
            Err(Error::BudgetExceeded(5))
        );
    }

    #[test]
    fn small_cases() {
        let t = Graph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let rot = Chain::from_pairs([(0, 1), (1, 1), (2, 1)]);
        let l = weighted_laplacian(&t, &rot).unwrap();
        for (i, row) in l.iter().enumerate() {
            assert_eq!(row[i], int(1));
            assert_eq!(row.iter().filter(|x| **x == int(-1)).count(), 1);
        }
        assert_eq!(reduced_determinant(&l, 1), int(1));
        assert_eq!(count_dcc(&t, &rot).unwrap().total, int(3));
        assert_eq!(enumerate_circuits(&t, &rot, 1000).unwrap().len(), 3);

        let lp = Graph::from_pairs(1, &[(0, 0)]).unwrap();
        let one = Chain::from_pairs([(0, 1)]);
        assert_eq!(weighted_laplacian(&lp, &one).unwrap(), vec![vec![int(0)]]);
        assert_eq!(determinant(&Vec::new()), int(1));
        assert_eq!(count_dcc(&lp, &one).unwrap().total, int(1));
        // a loop taken twice: the two copies are indistinguishable
        let two = Chain::from_pairs([(0, 2)]);
        assert_eq!(count_dcc(&lp, &two).unwrap().total, int(1));
        assert_eq!(enumerate_circuits(&lp, &two, 1000).unwrap().len(), 1);
    }

    #[test]
    fn loop_on_a_cycle() {
        // 2-cycle 0 -> 1 -> 0 with a loop at 0: rooted circuits of length 3
        let g = Graph::from_pairs(2, &[(0, 1), (1, 0), (0, 0)]).unwrap();
        let a = Chain::from_pairs([(0, 1), (1, 1), (2, 1)]);
        let count = count_dcc(&g, &a).unwrap().total;
        assert_eq!(count, int(3));
        assert_eq!(enumerate_circuits(&g, &a, 1000).unwrap().len(), 3);
    }

    #[test]
    fn determinant_examples() {
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(determinant(&m), int(-1));
        let m = vec![
            vec![int(2), int(-1), int(0)],
            vec![int(-1), int(2), int(-1)],
            vec![int(0), int(-1), int(2)],
        ];
        assert_eq!(determinant(&m), int(4));
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(determinant(&m), int(0));
    }

    #[test]
    fn restricted_to_support() {
        let g = fixtures::three_blocks();
        let h2 = Chain::from_pairs([
            (fixtures::F_E45, 2),
            (fixtures::F_E54, 1),
            (fixtures::F_E56, 1),
            (fixtures::F_E64, 1),
        ]);
        let r = count_dcc(&g, &h2).unwrap();
        assert!(!r.universal);
        assert_eq!(
            r.total,
            int(enumerate_circuits(&g, &h2, 100_000).unwrap().len() as i64)
        );
        assert_eq!(
            count_dcc(&g, &fixtures::three_blocks_alpha()),
            Err(Error::DisconnectedSupport)
        );
        assert!(
            enumerate_circuits(&g, &fixtures::three_blocks_alpha(), 1000)
                .unwrap()
                .is_empty()
        );
        assert_eq!(weighted_laplacian(&g, &h2), Err(Error::NotUniversal));
    }
}
