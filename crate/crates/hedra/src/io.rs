//! Text formats for polyhedra, matrices, graphs and certificates.
//!
//! The grammar is line-comment (`#`) and whitespace tokenized, with no
//! floating point anywhere:
//!
//! ```text
//! hrep                 vrep                matrix        digraph | graph
//! m n                  m n                 m n           nodes k
//! [linearity k i1..ik] t x_1 .. x_n  (×m)  rows (×m)     arc u v | edge u v ...
//! a_1 .. a_n b  (×m)
//! ```
//!
//! An `hrep` row means `⟨a, x⟩ ≤ b`, or `= b` for rows listed on the
//! `linearity` line (1-based). A `vrep` row is a point when its type flag
//! is 1 and a ray when it is 0. Graph files use 1-based node numbers.
//! Certificates serialize as an `INFEASIBLE` or `VALID` header followed
//! by one rational multiplier per line, in expanded row order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::farkas::{CertKind, Certificate};
use crate::linalg::RatMatrix;
use crate::rational::{format_rat, parse_rat, Rat};
use crate::rep::{HRep, Row, VRep};
use crate::unimod::{Digraph, Graph};

/// A parsed polyhedron file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyFile {
    H(HRep),
    V(VRep),
}

/// A parsed graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFile {
    Directed(Digraph),
    Undirected(Graph),
}

struct Tokens {
    items: Vec<(usize, String)>,
    pos: usize,
}

impl Tokens {
    fn new(text: &str) -> Self {
        let mut items = Vec::new();
        for (i, raw_line) in text.lines().enumerate() {
            let line = raw_line.split('#').next().unwrap_or("");
            for tok in line.split_whitespace() {
                items.push((i + 1, tok.to_string()));
            }
        }
        Self { items, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &str)> {
        match self.items.get(self.pos) {
            Some((line, tok)) => {
                self.pos += 1;
                Ok((*line, tok))
            }
            None => Err(Error::Parse {
                line: self.items.last().map_or(1, |(l, _)| *l),
                msg: format!("unexpected end of input, expected {what}"),
            }),
        }
    }

    fn usize(&mut self, what: &str) -> Result<(usize, usize)> {
        let (line, tok) = self.next(what)?;
        let v = tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("expected {what}, got `{tok}`"),
        })?;
        Ok((line, v))
    }

    fn rat(&mut self, what: &str) -> Result<Rat> {
        let (line, tok) = self.next(what)?;
        parse_rat(tok).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line, msg },
            other => other,
        })
    }

    fn expect_end(&self) -> Result<()> {
        if let Some((line, tok)) = self.items.get(self.pos) {
            return Err(Error::Parse {
                line: *line,
                msg: format!("trailing token `{tok}`"),
            });
        }
        Ok(())
    }
}

/// Parses an `hrep` or `vrep` file.
pub fn parse_poly(text: &str) -> Result<PolyFile> {
    let mut t = Tokens::new(text);
    let (line, header) = t.next("`hrep` or `vrep` header")?;
    match header {
        "hrep" => {
            let (_, m) = t.usize("row count")?;
            let (_, n) = t.usize("column count")?;
            // Peek for a linearity line.
            let mut linearity: Vec<usize> = Vec::new();
            if let Some((_, tok)) = t.items.get(t.pos) {
                if tok == "linearity" {
                    t.pos += 1;
                    let (_, k) = t.usize("linearity count")?;
                    for _ in 0..k {
                        let (line, idx) = t.usize("linearity row index")?;
                        if idx == 0 || idx > m {
                            return Err(Error::Parse {
                                line,
                                msg: format!("linearity index {idx} out of range 1..={m}"),
                            });
                        }
                        linearity.push(idx - 1);
                    }
                }
            }
            let mut ineqs = Vec::new();
            let mut eqs = Vec::new();
            for i in 0..m {
                let mut a = Vec::with_capacity(n);
                for _ in 0..n {
                    a.push(t.rat("coefficient")?);
                }
                let b = t.rat("right-hand side")?;
                if linearity.contains(&i) {
                    eqs.push(Row::new(a, b));
                } else {
                    ineqs.push(Row::new(a, b));
                }
            }
            t.expect_end()?;
            Ok(PolyFile::H(HRep::new(n, ineqs, eqs)?))
        }
        "vrep" => {
            let (_, m) = t.usize("generator count")?;
            let (_, n) = t.usize("dimension")?;
            let mut points = Vec::new();
            let mut rays = Vec::new();
            for _ in 0..m {
                let (line, flag) = t.usize("generator type flag")?;
                if flag > 1 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("generator type must be 1 (point) or 0 (ray), got {flag}"),
                    });
                }
                let mut x = Vec::with_capacity(n);
                for _ in 0..n {
                    x.push(t.rat("coordinate")?);
                }
                if flag == 1 {
                    points.push(x);
                } else {
                    rays.push(x);
                }
            }
            t.expect_end()?;
            Ok(PolyFile::V(VRep::new(n, points, rays)?))
        }
        other => Err(Error::Parse {
            line,
            msg: format!("unknown header `{other}`, expected `hrep` or `vrep`"),
        }),
    }
}

/// Emits the canonical `hrep` layout: inequality rows first, equation
/// rows last, listed on the `linearity` line.
pub fn emit_hrep(h: &HRep) -> String {
    let m = h.ineqs.len() + h.eqs.len();
    let mut out = String::new();
    let _ = writeln!(out, "hrep");
    let _ = writeln!(out, "{} {}", m, h.dim);
    if !h.eqs.is_empty() {
        let _ = write!(out, "linearity {}", h.eqs.len());
        for i in 0..h.eqs.len() {
            let _ = write!(out, " {}", h.ineqs.len() + i + 1);
        }
        out.push('\n');
    }
    for row in h.ineqs.iter().chain(&h.eqs) {
        let mut first = true;
        for v in row.a.iter().chain(std::iter::once(&row.b)) {
            if !first {
                out.push(' ');
            }
            out.push_str(&format_rat(v));
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Emits the `vrep` layout: point rows (flag 1) before ray rows (flag 0).
pub fn emit_vrep(v: &VRep) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vrep");
    let _ = writeln!(out, "{} {}", v.points.len() + v.rays.len(), v.dim);
    for (flag, gens) in [("1", &v.points), ("0", &v.rays)] {
        for g in gens {
            out.push_str(flag);
            for x in g {
                out.push(' ');
                out.push_str(&format_rat(x));
            }
            out.push('\n');
        }
    }
    out
}

pub fn emit_poly(p: &PolyFile) -> String {
    match p {
        PolyFile::H(h) => emit_hrep(h),
        PolyFile::V(v) => emit_vrep(v),
    }
}

/// Parses a `matrix` file.
pub fn parse_matrix(text: &str) -> Result<RatMatrix> {
    let mut t = Tokens::new(text);
    let (line, header) = t.next("`matrix` header")?;
    if header != "matrix" {
        return Err(Error::Parse {
            line,
            msg: format!("unknown header `{header}`, expected `matrix`"),
        });
    }
    let (_, m) = t.usize("row count")?;
    let (_, n) = t.usize("column count")?;
    let mut data = Vec::with_capacity(m * n);
    for _ in 0..m * n {
        data.push(t.rat("matrix entry")?);
    }
    t.expect_end()?;
    RatMatrix::new(m, n, data)
}

pub fn emit_matrix(m: &RatMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "matrix");
    let _ = writeln!(out, "{} {}", m.row_count(), m.col_count());
    for i in 0..m.row_count() {
        let row = m.row(i);
        let line: Vec<String> = row.iter().map(format_rat).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a `digraph` or `graph` file (1-based node numbers).
pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut t = Tokens::new(text);
    let (line, header) = t.next("`digraph` or `graph` header")?;
    let directed = match header {
        "digraph" => true,
        "graph" => false,
        other => {
            return Err(Error::Parse {
                line,
                msg: format!("unknown header `{other}`, expected `digraph` or `graph`"),
            })
        }
    };
    let (line, kw) = t.next("`nodes`")?;
    if kw != "nodes" {
        return Err(Error::Parse {
            line,
            msg: format!("expected `nodes`, got `{kw}`"),
        });
    }
    let (_, nodes) = t.usize("node count")?;
    let mut pairs = Vec::new();
    while t.pos < t.items.len() {
        let (line, kw) = t.next("`arc` or `edge`")?;
        match (directed, kw) {
            (true, "arc") | (false, "edge") => {}
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!(
                        "expected `{}`, got `{kw}`",
                        if directed { "arc" } else { "edge" }
                    ),
                })
            }
        }
        let (line_u, u) = t.usize("node number")?;
        let (line_v, v) = t.usize("node number")?;
        if u == 0 || u > nodes {
            return Err(Error::Parse {
                line: line_u,
                msg: format!("node {u} out of range 1..={nodes}"),
            });
        }
        if v == 0 || v > nodes {
            return Err(Error::Parse {
                line: line_v,
                msg: format!("node {v} out of range 1..={nodes}"),
            });
        }
        pairs.push((u - 1, v - 1));
    }
    Ok(if directed {
        GraphFile::Directed(Digraph::new(nodes, pairs)?)
    } else {
        GraphFile::Undirected(Graph::new(nodes, pairs)?)
    })
}

pub fn emit_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph");
    let _ = writeln!(out, "nodes {}", d.nodes);
    for &(u, v) in &d.arcs {
        let _ = writeln!(out, "arc {} {}", u + 1, v + 1);
    }
    out
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph");
    let _ = writeln!(out, "nodes {}", g.nodes);
    for &(u, v) in &g.edges {
        let _ = writeln!(out, "edge {} {}", u + 1, v + 1);
    }
    out
}

/// Serializes a certificate: header, then one multiplier per line in
/// expanded row order.
pub fn emit_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    match cert.kind {
        CertKind::Infeasibility => out.push_str("INFEASIBLE\n"),
        CertKind::Validity => out.push_str("VALID\n"),
        CertKind::Separation => out.push_str("SEPARATION\n"),
    }
    if cert.kind == CertKind::Separation {
        if let Some(a) = &cert.separating_normal {
            let line: Vec<String> = a.iter().map(format_rat).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        return out;
    }
    for l in &cert.multipliers {
        out.push_str(&format_rat(l));
        out.push('\n');
    }
    out
}

/// Parses a certificate file back into multipliers (or a separating
/// normal).
pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut t = Tokens::new(text);
    let (line, header) = t.next("certificate header")?;
    let kind = match header {
        "INFEASIBLE" => CertKind::Infeasibility,
        "VALID" => CertKind::Validity,
        "SEPARATION" => CertKind::Separation,
        other => {
            return Err(Error::Parse {
                line,
                msg: format!("unknown certificate header `{other}`"),
            })
        }
    };
    let mut values = Vec::new();
    while t.pos < t.items.len() {
        values.push(t.rat("multiplier")?);
    }
    Ok(match kind {
        CertKind::Separation => Certificate {
            kind,
            multipliers: Vec::new(),
            separating_normal: Some(values),
            bound: None,
        },
        _ => Certificate {
            kind,
            multipliers: values,
            separating_normal: None,
            bound: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn hrep_examples_from_the_grammar() {
        let p = parse_poly("hrep\n1 1\n1 1\n").unwrap();
        match p {
            PolyFile::H(h) => {
                assert_eq!(h.dim, 1);
                assert_eq!(h.ineqs.len(), 1);
                assert_eq!(h.ineqs[0].a, vec![rat_int(1)]);
                assert_eq!(h.ineqs[0].b, rat_int(1));
            }
            _ => panic!("hrep header"),
        }
    }

    #[test]
    fn vrep_examples_from_the_grammar() {
        match parse_poly("vrep\n2 2\n1 0 0\n1 1 1\n").unwrap() {
            PolyFile::V(v) => {
                assert_eq!(v.points.len(), 2);
                assert!(v.rays.is_empty());
            }
            _ => panic!("vrep header"),
        }
        match parse_poly("vrep\n1 2\n0 1 0\n").unwrap() {
            PolyFile::V(v) => {
                assert!(v.points.is_empty());
                assert!(v.rays.is_empty()); // no points: canonical empty
            }
            _ => panic!("vrep header"),
        }
    }

    #[test]
    fn linearity_rows_become_equations() {
        let text = "hrep\n3 2\nlinearity 1 2\n1 0 1\n0 1 2\n-1 0 0\n";
        match parse_poly(text).unwrap() {
            PolyFile::H(h) => {
                assert_eq!(h.ineqs.len(), 2);
                assert_eq!(h.eqs.len(), 1);
                assert_eq!(h.eqs[0].a, vec![rat_int(0), rat_int(1)]);
            }
            _ => panic!("hrep header"),
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_poly("hrep\n1 1\n1 1.5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("floats must be rejected, got {other:?}"),
        }
        match parse_poly("box\n1 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unknown header must be rejected, got {other:?}"),
        }
        match parse_poly("hrep\n2 1\n1 1\n") {
            Err(Error::Parse { .. }) => {}
            other => panic!("missing rows must be rejected, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_whitespace_are_ignored()  {
        let text = "# a unit interval\nhrep\n 2 1 # two rows\n1 1\n-1   0\n";
        match parse_poly(text).unwrap() {
            PolyFile::H(h) => assert_eq!(h.ineqs.len(), 2),
            _ => panic!("hrep header"),
        }
    }

    #[test]
    fn canonical_emission_is_byte_stable() {
        let text = "hrep\n3 2\nlinearity 1 3\n1 0 1\n0 1 1/2\n1 1 1\n";
        let parsed = parse_poly(text).unwrap();
        let emitted = emit_poly(&parsed);
        assert_eq!(emitted, text);
        assert_eq!(emit_poly(&parse_poly(&emitted).unwrap()), emitted);

        let v = VRep::new(
            2,
            vec![vec![rat_int(0), rat_int(0)]],
            vec![vec![rat(1, 2), rat_int(1)]],
        )
        .unwrap();
        let emitted = emit_vrep(&v);
        assert_eq!(emitted, "vrep\n2 2\n1 0 0\n0 1 2\n");
        assert_eq!(emit_poly(&parse_poly(&emitted).unwrap()), emitted);
    }

    #[test]
    fn matrix_and_graph_round_trips() {
        let m = parse_matrix("matrix\n2 2\n1 2\n3/2 -1\n").unwrap();
        assert_eq!(*m.entry(1, 0), rat(3, 2));
        assert_eq!(emit_matrix(&m), "matrix\n2 2\n1 2\n3/2 -1\n");

        match parse_graph("digraph\nnodes 3\narc 1 2\narc 2 3\n").unwrap() {
            GraphFile::Directed(d) => {
                assert_eq!(d.arcs, vec![(0, 1), (1, 2)]);
                assert_eq!(emit_digraph(&d), "digraph\nnodes 3\narc 1 2\narc 2 3\n");
            }
            _ => panic!("digraph header"),
        }
        match parse_graph("graph\nnodes 2\nedge 1 2\n").unwrap() {
            GraphFile::Undirected(g) => assert_eq!(g.edges, vec![(0, 1)]),
            _ => panic!("graph header"),
        }
        assert!(parse_graph("graph\nnodes 2\nedge 1 3\n").is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let cert = Certificate {
            kind: CertKind::Infeasibility,
            multipliers: vec![rat_int(1), rat(1, 2)],
            separating_normal: None,
            bound: None,
        };
        let text = emit_certificate(&cert);
        assert_eq!(text, "INFEASIBLE\n1\n1/2\n");
        let back = parse_certificate(&text).unwrap();
        assert_eq!(back.multipliers, cert.multipliers);
    }
}
