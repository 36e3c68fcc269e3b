//! Line-oriented text formats.
//!
//! `#` starts a comment in the native formats (`cmc`, `dcmc`, `psi`, `csp`);
//! the DIMACS readers use `c` comment lines. Writers always emit canonical
//! order, so `write(parse(write(x))) == write(x)`.
//!
//! ```text
//! cmc <n> <m> <p> <k>            dcmc <n> <p> <a>          psi <h> <n>
//! e <u> <v> <color>              g <i>                     pe <x> <y>
//!                                e <u> <v>                 block <x> <v...>
//!                                                          he <u> <v>
//! csp <variables>
//! dom <var> <token...>
//! con <var1> <var2> <i>,<j> ...
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use super::{BinaryCsp, CnfFormula, ColoredMultigraph, DualCmcInstance, InstanceError, PsiInstance, Relation};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line `{0}`")]
    MissingHeader(&'static str),
    #[error("declared {declared} {what}, found {found}")]
    CountMismatch { what: &'static str, declared: usize, found: usize },
    #[error("declared {declared} {what}, limit {limit}")]
    TooLarge { what: &'static str, declared: usize, limit: usize },
    #[error(transparent)]
    Invalid(#[from] InstanceError),
}

/// Largest count a header may declare.
pub const MAX_DECLARED: usize = 1 << 25;

pub(crate) fn bounded(what: &'static str, declared: usize, limit: usize) -> Result<usize, ParseError> {
    if declared > limit {
        return Err(ParseError::TooLarge { what, declared, limit });
    }
    Ok(declared)
}

pub(crate) fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Non-empty, comment-stripped lines with 1-based line numbers.
pub(crate) fn records<'a>(text: &'a str, comment: &'a str) -> impl Iterator<Item = (usize, Vec<&'a str>)> + 'a {
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let body = match raw.find(comment) {
            Some(pos) if comment == "#" => &raw[..pos],
            _ => raw,
        };
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.is_empty() || (comment == "c" && fields[0] == "c") {
            None
        } else {
            Some((i + 1, fields))
        }
    })
}

pub(crate) fn num<T: std::str::FromStr>(line: usize, field: &str) -> Result<T, ParseError> {
    field.parse().map_err(|_| syntax(line, format!("expected a number, got `{field}`")))
}

pub(crate) fn expect_fields(line: usize, fields: &[&str], count: usize) -> Result<(), ParseError> {
    if fields.len() != count {
        return Err(syntax(line, format!("`{}` expects {} fields, got {}", fields[0], count - 1, fields.len() - 1)));
    }
    Ok(())
}

pub(crate) fn header<'a>(
    recs: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    tag: &'static str,
    arity: usize,
) -> Result<(usize, Vec<usize>), ParseError> {
    let (line, fields) = recs.next().ok_or(ParseError::MissingHeader(tag))?;
    if fields[0] != tag {
        return Err(ParseError::MissingHeader(tag));
    }
    expect_fields(line, &fields, arity + 1)?;
    let values = fields[1..]
        .iter()
        .map(|f| num(line, f).and_then(|v| bounded(tag, v, MAX_DECLARED)))
        .collect::<Result<_, _>>()?;
    Ok((line, values))
}

pub fn parse_cmc(text: &str) -> Result<ColoredMultigraph, ParseError> {
    let mut recs = records(text, "#");
    let (_, h) = header(&mut recs, "cmc", 4)?;
    let (n, m, p, k) = (h[0], h[1], h[2], h[3]);
    let mut edges = Vec::new();
    for (line, f) in recs {
        if f[0] != "e" {
            return Err(syntax(line, format!("unknown record `{}`", f[0])));
        }
        expect_fields(line, &f, 4)?;
        edges.push((num(line, f[1])?, num(line, f[2])?, num(line, f[3])?));
    }
    if edges.len() != m {
        return Err(ParseError::CountMismatch { what: "edges", declared: m, found: edges.len() });
    }
    Ok(ColoredMultigraph::new(n, p, k, edges)?)
}

pub fn write_cmc(g: &ColoredMultigraph) -> String {
    let mut out = format!("cmc {} {} {} {}\n", g.vertex_count(), g.edges().len(), g.colors(), g.budget());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {} {}", e.u, e.v, e.color);
    }
    out
}

pub fn parse_dcmc(text: &str) -> Result<DualCmcInstance, ParseError> {
    let mut recs = records(text, "#");
    let (_, h) = header(&mut recs, "dcmc", 3)?;
    let recs: Vec<_> = recs.collect();
    let (n, p, a) = (h[0], bounded("graphs", h[1], recs.len())?, h[2]);
    let mut graphs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); p];
    let mut seen = vec![false; p];
    let mut current: Option<usize> = None;
    for (line, f) in recs {
        match f[0] {
            "g" => {
                expect_fields(line, &f, 2)?;
                let i: usize = num(line, f[1])?;
                if i == 0 || i > p {
                    return Err(syntax(line, format!("graph index {i} outside 1..={p}")));
                }
                if std::mem::replace(&mut seen[i - 1], true) {
                    return Err(syntax(line, format!("graph {i} declared twice")));
                }
                current = Some(i - 1);
            }
            "e" => {
                expect_fields(line, &f, 3)?;
                let g = current.ok_or_else(|| syntax(line, "edge before any `g` block"))?;
                graphs[g].push((num(line, f[1])?, num(line, f[2])?));
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let listed = seen.iter().filter(|&&s| s).count();
    if listed != p {
        return Err(ParseError::CountMismatch { what: "graphs", declared: p, found: listed });
    }
    Ok(DualCmcInstance::new(n, graphs, a)?)
}

pub fn write_dcmc(d: &DualCmcInstance) -> String {
    let mut out = format!("dcmc {} {} {}\n", d.vertex_count(), d.graph_count(), d.select());
    for (i, g) in d.graphs().iter().enumerate() {
        let _ = writeln!(out, "g {}", i + 1);
        for &(u, v) in g {
            let _ = writeln!(out, "e {u} {v}");
        }
    }
    out
}

pub fn parse_psi(text: &str) -> Result<PsiInstance, ParseError> {
    let mut recs = records(text, "#");
    let (_, h) = header(&mut recs, "psi", 2)?;
    let recs: Vec<_> = recs.collect();
    let pattern_n = bounded("blocks", h[0], recs.len())?;
    let n = h[1];
    bounded("host vertices", pattern_n.saturating_mul(n), MAX_DECLARED)?;
    let mut pattern_edges = Vec::new();
    let mut host_edges = Vec::new();
    let mut blocks: Vec<Option<Vec<usize>>> = vec![None; pattern_n];
    for (line, f) in recs {
        match f[0] {
            "pe" => {
                expect_fields(line, &f, 3)?;
                pattern_edges.push((num(line, f[1])?, num(line, f[2])?));
            }
            "he" => {
                expect_fields(line, &f, 3)?;
                host_edges.push((num(line, f[1])?, num(line, f[2])?));
            }
            "block" => {
                if f.len() < 2 {
                    return Err(syntax(line, "`block` needs a pattern vertex"));
                }
                let x: usize = num(line, f[1])?;
                let members = f[2..].iter().map(|v| num(line, v)).collect::<Result<Vec<usize>, _>>()?;
                match blocks.get_mut(x) {
                    Some(slot @ None) => *slot = Some(members),
                    _ => return Err(ParseError::Invalid(InstanceError::BadBlockIndex(x))),
                }
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let blocks = blocks
        .into_iter()
        .enumerate()
        .map(|(x, b)| b.ok_or(ParseError::Invalid(InstanceError::BadBlockIndex(x))))
        .collect::<Result<Vec<_>, _>>()?;
    if blocks.iter().any(|b| b.len() != n) {
        let (x, b) = blocks.iter().enumerate().find(|(_, b)| b.len() != n).unwrap();
        return Err(InstanceError::BlockSize { x, got: b.len(), expected: n }.into());
    }
    let pattern = Graph::new(pattern_n, pattern_edges).map_err(InstanceError::from)?;
    let host = Graph::new(pattern_n * n, host_edges).map_err(InstanceError::from)?;
    Ok(PsiInstance::new(pattern, host, blocks)?)
}

pub fn write_psi(inst: &PsiInstance) -> String {
    let mut out = format!("psi {} {}\n", inst.pattern().vertex_count(), inst.block_size());
    for &(x, y) in inst.pattern().edges() {
        let _ = writeln!(out, "pe {x} {y}");
    }
    for (x, block) in inst.blocks().iter().enumerate() {
        let _ = write!(out, "block {x}");
        for v in block {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for &(u, v) in inst.host().edges() {
        let _ = writeln!(out, "he {u} {v}");
    }
    out
}

pub fn parse_csp(text: &str) -> Result<BinaryCsp, ParseError> {
    let mut recs = records(text, "#");
    let (_, h) = header(&mut recs, "csp", 1)?;
    let recs: Vec<_> = recs.collect();
    let vars = bounded("domains", h[0], recs.len())?;
    let mut domains: Vec<Option<Vec<String>>> = vec![None; vars];
    let mut pending = Vec::new();
    for (line, f) in recs {
        match f[0] {
            "dom" => {
                if f.len() < 2 {
                    return Err(syntax(line, "`dom` needs a variable"));
                }
                let v: usize = num(line, f[1])?;
                match domains.get_mut(v) {
                    Some(slot @ None) => *slot = Some(f[2..].iter().map(|s| s.to_string()).collect()),
                    Some(Some(_)) => return Err(syntax(line, format!("domain of {v} declared twice"))),
                    None => return Err(InstanceError::VariableOutOfRange(v).into()),
                }
            }
            "con" => {
                if f.len() < 3 {
                    return Err(syntax(line, "`con` needs two variables"));
                }
                let a: usize = num(line, f[1])?;
                let b: usize = num(line, f[2])?;
                let mut pairs = Vec::new();
                for tok in &f[3..] {
                    let (i, j) = tok
                        .split_once(',')
                        .ok_or_else(|| syntax(line, format!("expected `i,j`, got `{tok}`")))?;
                    pairs.push((num::<usize>(line, i)?, num::<usize>(line, j)?));
                }
                pending.push((a, b, pairs));
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let domains = domains
        .into_iter()
        .enumerate()
        .map(|(v, d)| d.ok_or(ParseError::Invalid(InstanceError::VariableOutOfRange(v))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut csp = BinaryCsp::new(domains);
    for (a, b, pairs) in pending {
        if a >= vars || b >= vars {
            return Err(InstanceError::VariableOutOfRange(a.max(b)).into());
        }
        let (rows, cols) = (csp.domain(a).len(), csp.domain(b).len());
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i >= rows || j >= cols) {
            return Err(InstanceError::RelationOutOfDomain((a, b), i, j).into());
        }
        csp.add_constraint(a, b, Relation::from_pairs(rows, cols, pairs))?;
    }
    Ok(csp)
}

pub fn write_csp(csp: &BinaryCsp) -> String {
    let mut out = format!("csp {}\n", csp.variable_count());
    for (v, d) in csp.domains().iter().enumerate() {
        let _ = write!(out, "dom {v}");
        for tok in d {
            let _ = write!(out, " {tok}");
        }
        out.push('\n');
    }
    for (&(a, b), rel) in csp.constraints() {
        let _ = write!(out, "con {a} {b}");
        for (i, j) in rel.pairs() {
            let _ = write!(out, " {i},{j}");
        }
        out.push('\n');
    }
    out
}

/// DIMACS `p cnf N M`; clauses are `0`-terminated and may span lines.
pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut recs = records(text, "c");
    let (line, f) = recs.next().ok_or(ParseError::MissingHeader("p cnf"))?;
    if f.len() != 4 || f[0] != "p" || f[1] != "cnf" {
        return Err(ParseError::MissingHeader("p cnf"));
    }
    let vars = bounded("variables", num(line, f[2])?, MAX_DECLARED)?;
    let declared = bounded("clauses", num(line, f[3])?, MAX_DECLARED)?;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (line, f) in recs {
        for tok in f {
            if tok == "%" {
                break;
            }
            let lit: i32 = num(line, tok)?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != declared {
        return Err(ParseError::CountMismatch { what: "clauses", declared, found: clauses.len() });
    }
    Ok(CnfFormula::new(vars, clauses)?)
}

pub fn write_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.variables(), f.clauses().len());
    for clause in f.clauses() {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

/// DIMACS graph format: `p edge n m` then `e u v` with 1-based vertices.
pub fn parse_dimacs_graph(text: &str) -> Result<Graph, ParseError> {
    let mut recs = records(text, "c");
    let (line, f) = recs.next().ok_or(ParseError::MissingHeader("p edge"))?;
    if f.len() != 4 || f[0] != "p" || (f[1] != "edge" && f[1] != "col") {
        return Err(ParseError::MissingHeader("p edge"));
    }
    let n = bounded("vertices", num(line, f[2])?, MAX_DECLARED)?;
    let m = bounded("edges", num(line, f[3])?, MAX_DECLARED)?;
    let mut edges = Vec::new();
    for (line, f) in recs {
        if f[0] != "e" {
            return Err(syntax(line, format!("unknown record `{}`", f[0])));
        }
        expect_fields(line, &f, 3)?;
        let u: usize = num(line, f[1])?;
        let v: usize = num(line, f[2])?;
        if u == 0 || v == 0 {
            return Err(syntax(line, "DIMACS vertices are 1-based"));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(ParseError::CountMismatch { what: "edges", declared: m, found: edges.len() });
    }
    Graph::new(n, edges).map_err(|e| ParseError::Invalid(e.into()))
}

pub fn write_dimacs_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
