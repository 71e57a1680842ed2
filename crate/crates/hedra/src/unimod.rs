//! Total unimodularity and the graph matrices it comes from.
//!
//! Two independent TU oracles are kept on purpose: the subdeterminant
//! definition and the Ghouila-Houri row-signing criterion. Their agreement
//! on exhaustive small cases is part of the acceptance suite. Incidence
//! and network matrices fix their row/column orders from the stored
//! arc/edge lists so outputs are reproducible bit for bit.

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::rational::{rat_to_i64, Rat};
use crate::rep::{HRep, Row};
use crate::Caps;

/// Directed graph with an ordered arc list; parallel arcs are allowed,
/// self-loops are not (the incidence pattern is undefined for them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub nodes: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(nodes: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &arcs {
            if u >= nodes || v >= nodes {
                return Err(Error::dim(format!("arc ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::pre(format!(
                    "self-loop at node {u}: the node-arc incidence pattern is undefined"
                )));
            }
        }
        Ok(Self { nodes, arcs })
    }
}

/// Undirected graph with an ordered edge list; parallel edges are
/// rejected (they would duplicate matching-polytope rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in &edges {
            if u >= nodes || v >= nodes {
                return Err(Error::dim(format!("edge {{{u}, {v}}} out of range")));
            }
            if u == v {
                return Err(Error::pre(format!("self-loop at node {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::pre(format!("parallel edge {{{u}, {v}}}")));
            }
        }
        Ok(Self { nodes, edges })
    }
}

/// Node-arc incidence: −1 at the tail, +1 at the head of each arc.
pub fn node_arc_incidence(d: &Digraph) -> RatMatrix {
    let mut m = RatMatrix::zero(d.nodes, d.arcs.len());
    for (j, &(u, v)) in d.arcs.iter().enumerate() {
        *m.entry_mut(u, j) = -Rat::from_integer(BigInt::from(1));
        *m.entry_mut(v, j) = Rat::from_integer(BigInt::from(1));
    }
    m
}

/// Node-edge incidence: 1 at both endpoints of each edge.
pub fn node_edge_incidence(g: &Graph) -> RatMatrix {
    let mut m = RatMatrix::zero(g.nodes, g.edges.len());
    for (j, &(u, v)) in g.edges.iter().enumerate() {
        *m.entry_mut(u, j) = Rat::from_integer(BigInt::from(1));
        *m.entry_mut(v, j) = Rat::from_integer(BigInt::from(1));
    }
    m
}

/// Why a matrix fails to be totally unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TuWitness {
    /// A square submatrix with determinant outside {−1, 0, 1} (or an
    /// entry outside the sign range, as a 1×1 case).
    Submatrix {
        rows: Vec<usize>,
        cols: Vec<usize>,
        det: i64,
    },
    /// A row subset that admits no ±1 signing with column sums in
    /// {−1, 0, 1}.
    UnsignableRows(Vec<usize>),
    /// Same, on the column side.
    UnsignableCols(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuVerdict {
    pub is_tu: bool,
    pub witness: Option<TuWitness>,
}

impl TuVerdict {
    fn tu() -> Self {
        Self {
            is_tu: true,
            witness: None,
        }
    }

    fn not_tu(witness: TuWitness) -> Self {
        Self {
            is_tu: false,
            witness: Some(witness),
        }
    }
}

/// Converts to a machine sign matrix, or reports the first offending
/// entry as a 1×1 witness.
fn sign_matrix(m: &RatMatrix) -> std::result::Result<Vec<Vec<i64>>, TuWitness> {
    let mut out = Vec::with_capacity(m.row_count());
    for i in 0..m.row_count() {
        let mut row = Vec::with_capacity(m.col_count());
        for j in 0..m.col_count() {
            match rat_to_i64(m.entry(i, j)) {
                Some(v) if (-1..=1).contains(&v) => row.push(v),
                _ => {
                    return Err(TuWitness::Submatrix {
                        rows: vec![i],
                        cols: vec![j],
                        det: rat_to_i64(m.entry(i, j)).unwrap_or(i64::MAX),
                    })
                }
            }
        }
        out.push(row);
    }
    Ok(out)
}

/// Integer determinant by fraction-free elimination; exact for the small
/// sign matrices handled here.
fn int_det(rows: &[usize], cols: &[usize], m: &[Vec<i64>]) -> i64 {
    let n = rows.len();
    let mut z: Vec<Vec<i128>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if z[k][k] == 0 {
            match (k + 1..n).find(|&i| z[i][k] != 0) {
                Some(p) => {
                    z.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                z[i][j] = (z[i][j] * z[k][k] - z[i][k] * z[k][j]) / prev;
            }
            z[i][k] = 0;
        }
        prev = z[k][k];
    }
    (sign * z[n - 1][n - 1]) as i64
}

fn subsets_in_order(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        // Advance to the next lexicographic k-subset.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < n - (k - i) {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Exhaustive subdeterminant test: totally unimodular iff every square
/// submatrix has determinant −1, 0 or 1. The first violation in
/// (order, row set, column set) order is reported.
pub fn is_tu_determinant(m: &RatMatrix, caps: &Caps) -> Result<TuVerdict> {
    let signs = match sign_matrix(m) {
        Ok(s) => s,
        Err(w) => return Ok(TuVerdict::not_tu(w)),
    };
    let (rows, cols) = (m.row_count(), m.col_count());
    let mut checked: usize = 0;
    for order in 1..=rows.min(cols) {
        let row_sets = subsets_in_order(rows, order);
        let col_sets = subsets_in_order(cols, order);
        for rs in &row_sets {
            for cs in &col_sets {
                checked += 1;
                if checked > caps.max_subsets {
                    return Err(Error::cap(format!(
                        "more than {} square submatrices",
                        caps.max_subsets
                    )));
                }
                let det = int_det(rs, cs, &signs);
                if det.abs() > 1 {
                    return Ok(TuVerdict::not_tu(TuWitness::Submatrix {
                        rows: rs.clone(),
                        cols: cs.clone(),
                        det,
                    }));
                }
            }
        }
    }
    Ok(TuVerdict::tu())
}

/// Ghouila-Houri signing test: totally unimodular iff every subset of
/// rows splits into two parts whose difference of row sums lies in
/// {−1, 0, 1} componentwise. Checks the smaller side of the matrix
/// (rows or columns); the witness is the first unsignable subset.
pub fn is_tu_ghouila_houri(m: &RatMatrix, caps: &Caps) -> Result<TuVerdict> {
    let signs = match sign_matrix(m) {
        Ok(s) => s,
        Err(w) => return Ok(TuVerdict::not_tu(w)),
    };
    let on_rows = m.row_count() <= m.col_count();
    let signs: Vec<Vec<i64>> = if on_rows {
        signs
    } else {
        (0..m.col_count())
            .map(|j| (0..m.row_count()).map(|i| signs[i][j]).collect())
            .collect()
    };
    let rows = signs.len();
    let cols = signs.first().map_or(0, Vec::len);
    if rows >= usize::BITS as usize - 1 || (1usize << rows) > caps.max_subsets {
        return Err(Error::cap(format!(
            "{rows} rows exceed the signing subset cap"
        )));
    }
    let mut sums = vec![0i64; cols];
    for mask in 1usize..(1 << rows) {
        let members: Vec<usize> = (0..rows).filter(|i| mask & (1 << i) != 0).collect();
        let mut signable = false;
        // Fix the first member positive; signings come in ± pairs.
        'signing: for signing in 0usize..(1 << (members.len() - 1)) {
            sums.iter_mut().for_each(|s| *s = 0);
            for (pos, &i) in members.iter().enumerate() {
                let sign = if pos > 0 && signing & (1 << (pos - 1)) != 0 {
                    -1
                } else {
                    1
                };
                for (s, &v) in sums.iter_mut().zip(&signs[i]) {
                    *s += sign * v;
                }
            }
            if sums.iter().all(|s| s.abs() <= 1) {
                signable = true;
                break 'signing;
            }
        }
        if !signable {
            return Ok(TuVerdict::not_tu(if on_rows {
                TuWitness::UnsignableRows(members)
            } else {
                TuWitness::UnsignableCols(members)
            }));
        }
    }
    Ok(TuVerdict::tu())
}

/// Result of the bipartiteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite { left: Vec<usize>, right: Vec<usize> },
    /// Nodes of an odd cycle, in order.
    OddCycle(Vec<usize>),
}

/// Two-colors the graph breadth-first; a same-color edge closes an odd
/// cycle, which is returned as a witness.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let mut color: Vec<Option<bool>> = vec![None; g.nodes];
    let mut parent: Vec<usize> = (0..g.nodes).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.nodes];
    for &(u, v) in &g.edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for start in 0..g.nodes {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].expect("u is colored"));
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    Some(c) if c == color[u].expect("u is colored") => {
                        // Same color: the tree paths to the common
                        // ancestor plus this edge form an odd cycle.
                        let path_to_root = |mut x: usize| {
                            let mut path = vec![x];
                            while parent[x] != x {
                                x = parent[x];
                                path.push(x);
                            }
                            path
                        };
                        let pu = path_to_root(u);
                        let pv = path_to_root(v);
                        let mut i = pu.len();
                        let mut j = pv.len();
                        while i > 1 && j > 1 && pu[i - 2] == pv[j - 2] {
                            i -= 1;
                            j -= 1;
                        }
                        let mut cycle: Vec<usize> = pu[..i].to_vec();
                        cycle.extend(pv[..j - 1].iter().rev());
                        return Bipartiteness::OddCycle(cycle);
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let left = (0..g.nodes).filter(|&v| color[v] == Some(false)).collect();
    let right = (0..g.nodes).filter(|&v| color[v] == Some(true)).collect();
    Bipartiteness::Bipartite { left, right }
}

/// Network matrix of a digraph with respect to a spanning tree given by
/// arc indices: rows are tree arcs, columns are all arcs, and the entry
/// records whether the tree path from tail to head of the column's arc
/// uses the row's arc forward (+1), backward (−1), or not at all.
pub fn network_matrix(d: &Digraph, tree_arcs: &[usize]) -> Result<RatMatrix> {
    if tree_arcs.iter().any(|&i| i >= d.arcs.len()) {
        return Err(Error::dim("tree arc index out of range".to_string()));
    }
    if d.nodes == 0 || tree_arcs.len() != d.nodes - 1 {
        return Err(Error::pre(format!(
            "a spanning tree on {} nodes has {} arcs, got {}",
            d.nodes,
            d.nodes.saturating_sub(1),
            tree_arcs.len()
        )));
    }
    // The tree arcs, viewed as undirected edges, must form a spanning
    // tree: connected and acyclic.
    let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); d.nodes]; // (neighbor, tree pos, forward)
    for (pos, &ai) in tree_arcs.iter().enumerate() {
        let (u, v) = d.arcs[ai];
        adj[u].push((v, pos, true));
        adj[v].push((u, pos, false));
    }
    let mut seen = vec![false; d.nodes];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut visited = 1;
    let mut prev: Vec<Option<(usize, usize, bool)>> = vec![None; d.nodes]; // (parent, tree pos, forward)
    while let Some(u) = stack.pop() {
        for &(v, pos, forward) in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                visited += 1;
                prev[v] = Some((u, pos, forward));
                stack.push(v);
            }
        }
    }
    if visited != d.nodes {
        return Err(Error::pre(
            "the chosen arcs do not span all nodes".to_string(),
        ));
    }
    // |V| - 1 arcs spanning all nodes are automatically acyclic.
    let depth_path = |mut x: usize| -> Vec<(usize, bool)> {
        // Tree-arc positions from x up to the root, with traversal
        // direction relative to the arc orientation.
        let mut path = Vec::new();
        while let Some((p, pos, forward)) = prev[x] {
            // Walking x -> p: the tree arc is (p, x) when forward.
            path.push((pos, !forward));
            x = p;
        }
        path
    };
    let mut out = RatMatrix::zero(tree_arcs.len(), d.arcs.len());
    for (j, &(v, w)) in d.arcs.iter().enumerate() {
        // Path v -> w through the root, cancelling the shared tail.
        let mut up_v = depth_path(v);
        let mut up_w = depth_path(w);
        while let (Some(a), Some(b)) = (up_v.last(), up_w.last()) {
            if a.0 == b.0 {
                up_v.pop();
                up_w.pop();
            } else {
                break;
            }
        }
        for (pos, toward_root) in up_v {
            // v-side segment walks toward the root.
            let sign = if toward_root { 1 } else { -1 };
            *out.entry_mut(pos, j) = Rat::from_integer(BigInt::from(sign));
        }
        for (pos, toward_root) in up_w {
            // w-side segment is traversed away from the root.
            let sign = if toward_root { -1 } else { 1 };
            *out.entry_mut(pos, j) = Rat::from_integer(BigInt::from(sign));
        }
    }
    Ok(out)
}

/// Outer description of the bipartite matching polytope: one degree row
/// per node, one nonnegativity row per edge (column order = edge order).
pub fn matching_polytope_bipartite(g: &Graph) -> Result<HRep> {
    if let Bipartiteness::OddCycle(cycle) = is_bipartite(g) {
        return Err(Error::pre(format!(
            "matching polytope rows describe bipartite graphs only; odd cycle {cycle:?}"
        )));
    }
    let e = g.edges.len();
    let mut rows = Vec::with_capacity(g.nodes + e);
    for v in 0..g.nodes {
        let mut a = vec![Rat::zero(); e];
        for (j, &(x, y)) in g.edges.iter().enumerate() {
            if x == v || y == v {
                a[j] = Rat::from_integer(BigInt::from(1));
            }
        }
        rows.push(Row::new(a, Rat::from_integer(BigInt::from(1))));
    }
    for j in 0..e {
        let mut a = vec![Rat::zero(); e];
        a[j] = -Rat::from_integer(BigInt::from(1));
        rows.push(Row::new(a, Rat::zero()));
    }
    HRep::new(e, rows, vec![])
}

/// Circulation polytope `{x : inc(D)x = 0, ℓ ≤ x ≤ u}` with integral
/// bounds.
pub fn circulation_polytope(d: &Digraph, lower: &[Rat], upper: &[Rat]) -> Result<HRep> {
    let e = d.arcs.len();
    if lower.len() != e || upper.len() != e {
        return Err(Error::dim("one bound per arc".to_string()));
    }
    for (l, u) in lower.iter().zip(upper) {
        if !crate::rational::is_integer(l) || !crate::rational::is_integer(u) {
            return Err(Error::pre("circulation bounds must be integral".to_string()));
        }
        if l > u {
            return Err(Error::pre(format!(
                "lower bound {l} exceeds upper bound {u}"
            )));
        }
    }
    let inc = node_arc_incidence(d);
    let eqs = (0..d.nodes)
        .map(|i| Row::new(inc.row(i).to_vec(), Rat::zero()))
        .collect();
    let mut ineqs = Vec::with_capacity(2 * e);
    for j in 0..e {
        let mut a = vec![Rat::zero(); e];
        a[j] = Rat::from_integer(BigInt::from(1));
        ineqs.push(Row::new(a.clone(), upper[j].clone()));
        a[j] = -Rat::from_integer(BigInt::from(1));
        ineqs.push(Row::new(a, -lower[j].clone()));
    }
    HRep::new(e, ineqs, eqs)
}
