//! Diagram text format and DOT export.
//!
//! ```text
//! diagram <name>
//! nodes <d>
//! edge <i> <j> m=<k>
//! edge <i> <j> bold
//! edge <i> <j> dotted [w=<expr>]
//! ```
//!
//! Unlisted pairs are orthogonal. A stream may hold several diagrams;
//! each starts at its `diagram` line. Comments start with `#`.

use std::fmt::Write as _;

use super::{CoxeterDiagram, EdgeLabel};
use crate::algebra::expr::Expr;
use crate::algebra::rational::{Rat, RatExt};
use crate::algebra::tower::Tw;

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

pub fn parse_diagrams(input: &str) -> Result<Vec<(String, CoxeterDiagram)>, ParseError> {
    let mut out: Vec<(String, CoxeterDiagram)> = Vec::new();
    let mut current: Option<(String, Option<CoxeterDiagram>, Vec<(usize, usize, EdgeLabel)>)> =
        None;
    let mut flush = |cur: &mut Option<(String, Option<CoxeterDiagram>, Vec<_>)>,
                     line: usize|
     -> Result<(), ParseError> {
        if let Some((name, d, edges)) = cur.take() {
            let mut d = d.ok_or_else(|| err(line, "diagram without a 'nodes' line"))?;
            for (i, j, label) in edges {
                if i >= d.order() || j >= d.order() {
                    return Err(err(line, format!("edge {}-{} out of range", i, j)));
                }
                if i == j {
                    return Err(err(line, "self-loop"));
                }
                d.set_edge(i, j, label);
            }
            out.push((name, d));
        }
        Ok(())
    };
    for (lineno0, raw) in input.lines().enumerate() {
        let lineno = lineno0 + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "diagram" => {
                flush(&mut current, lineno)?;
                let name = words
                    .next()
                    .ok_or_else(|| err(lineno, "missing diagram name"))?;
                current = Some((name.to_string(), None, Vec::new()));
            }
            "nodes" => {
                let n: usize = words
                    .next()
                    .ok_or_else(|| err(lineno, "missing node count"))?
                    .parse()
                    .map_err(|_| err(lineno, "bad node count"))?;
                match &mut current {
                    None => return Err(err(lineno, "'nodes' before 'diagram'")),
                    Some((_, d, _)) => {
                        if d.is_some() {
                            return Err(err(lineno, "duplicate 'nodes' line"));
                        }
                        *d = Some(CoxeterDiagram::new(n));
                    }
                }
            }
            "edge" => {
                let i: usize = words
                    .next()
                    .ok_or_else(|| err(lineno, "missing node index"))?
                    .parse()
                    .map_err(|_| err(lineno, "bad node index"))?;
                let j: usize = words
                    .next()
                    .ok_or_else(|| err(lineno, "missing node index"))?
                    .parse()
                    .map_err(|_| err(lineno, "bad node index"))?;
                let kind = words
                    .next()
                    .ok_or_else(|| err(lineno, "missing edge kind"))?;
                let rest: Vec<&str> = words.collect();
                let label = parse_edge_label(kind, &rest, lineno)?;
                match &mut current {
                    None => return Err(err(lineno, "'edge' before 'diagram'")),
                    Some((_, _, edges)) => edges.push((i, j, label)),
                }
            }
            other => return Err(err(lineno, format!("unknown directive '{}'", other))),
        }
    }
    flush(&mut current, input.lines().count())?;
    Ok(out)
}

fn parse_edge_label(kind: &str, rest: &[&str], lineno: usize) -> Result<EdgeLabel, ParseError> {
    if let Some(mval) = kind.strip_prefix("m=") {
        let m: u32 = mval
            .parse()
            .map_err(|_| err(lineno, "bad multiplicity"))?;
        if m < 3 {
            return Err(err(lineno, "edge m=<k> needs k >= 3"));
        }
        return Ok(EdgeLabel::Angle(m));
    }
    match kind {
        "bold" => Ok(EdgeLabel::Bold),
        "dotted" => {
            // optional w=<expr>; the expression may contain spaces
            if rest.is_empty() {
                return Ok(EdgeLabel::Dotted(None));
            }
            let joined = rest.join(" ");
            let wexpr = joined
                .strip_prefix("w=")
                .ok_or_else(|| err(lineno, "expected w=<expr> after 'dotted'"))?;
            let e = Expr::parse(wexpr).map_err(|e| err(lineno, e.to_string()))?;
            let w = e
                .eval_tower()
                .map_err(|e| err(lineno, format!("bad dotted weight: {}", e)))?;
            if w.sub(&Tw::from_rat(Rat::from_int(1))).sign() <= 0 {
                return Err(err(lineno, "dotted weight must be greater than 1"));
            }
            Ok(EdgeLabel::Dotted(Some(w)))
        }
        other => Err(err(lineno, format!("unknown edge kind '{}'", other))),
    }
}

pub fn write_diagram(name: &str, d: &CoxeterDiagram) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "diagram {}", name);
    let _ = writeln!(s, "nodes {}", d.order());
    for i in 0..d.order() {
        for j in i + 1..d.order() {
            match d.edge(i, j) {
                EdgeLabel::Orthogonal => {}
                EdgeLabel::Angle(m) => {
                    let _ = writeln!(s, "edge {} {} m={}", i, j, m);
                }
                EdgeLabel::Bold => {
                    let _ = writeln!(s, "edge {} {} bold", i, j);
                }
                EdgeLabel::Dotted(None) => {
                    let _ = writeln!(s, "edge {} {} dotted", i, j);
                }
                EdgeLabel::Dotted(Some(w)) => {
                    let _ = writeln!(s, "edge {} {} dotted w={}", i, j, Expr::from_tower(w));
                }
            }
        }
    }
    s
}

/// DOT source: plain edges for simple (m = 3), labels for m > 3, bold for
/// parallel pairs, dashed with weight label for dotted pairs.
pub fn to_dot(name: &str, d: &CoxeterDiagram) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{}\" {{", name);
    let _ = writeln!(s, "  node [shape=circle];");
    for i in 0..d.order() {
        match d.name(i) {
            Some(n) => {
                let _ = writeln!(s, "  n{} [label=\"{}\"];", i, n);
            }
            None => {
                let _ = writeln!(s, "  n{} [label=\"{}\"];", i, i);
            }
        }
    }
    for i in 0..d.order() {
        for j in i + 1..d.order() {
            match d.edge(i, j) {
                EdgeLabel::Orthogonal => {}
                EdgeLabel::Angle(3) => {
                    let _ = writeln!(s, "  n{} -- n{};", i, j);
                }
                EdgeLabel::Angle(m) => {
                    let _ = writeln!(s, "  n{} -- n{} [label=\"{}\"];", i, j, m);
                }
                EdgeLabel::Bold => {
                    let _ = writeln!(s, "  n{} -- n{} [style=bold];", i, j);
                }
                EdgeLabel::Dotted(None) => {
                    let _ = writeln!(s, "  n{} -- n{} [style=dashed];", i, j);
                }
                EdgeLabel::Dotted(Some(w)) => {
                    let _ = writeln!(
                        s,
                        "  n{} -- n{} [style=dashed, label=\"{}\"];",
                        i,
                        j,
                        Expr::from_tower(w)
                    );
                }
            }
        }
    }
    let _ = writeln!(s, "}}");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::canon::is_isomorphic_exact;

    #[test]
    fn parse_basic() {
        let src = "\
# a triangle
diagram tri237
nodes 3
edge 0 1 m=3
edge 1 2 m=7
";
        let ds = parse_diagrams(src).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].0, "tri237");
        assert_eq!(ds[0].1.order(), 3);
        assert_eq!(ds[0].1.edge(1, 2).angle(), Some(7));
        assert_eq!(ds[0].1.edge(0, 2).angle(), Some(2));
    }

    #[test]
    fn parse_dotted_weight() {
        let src = "diagram d\nnodes 2\nedge 0 1 dotted w=sqrt(5) + 2\n";
        let ds = parse_diagrams(src).unwrap();
        match ds[0].1.edge(0, 1) {
            EdgeLabel::Dotted(Some(w)) => {
                assert_eq!(w.sign(), 1);
            }
            other => panic!("expected dotted, got {:?}", other),
        }
        // weight <= 1 rejected
        let bad = "diagram d\nnodes 2\nedge 0 1 dotted w=1/2\n";
        assert!(parse_diagrams(bad).is_err());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "diagram d\nnodes 2\nedge 0 5 m=3\n";
        let e = parse_diagrams(bad).unwrap_err();
        assert!(e.to_string().contains("line"));
        let bad = "nodes 2\n";
        assert!(parse_diagrams(bad).is_err());
        let bad = "diagram d\nnodes 2\nedge 0 1 m=2\n";
        assert!(parse_diagrams(bad).is_err());
    }

    #[test]
    fn round_trip() {
        let src = "\
diagram x
nodes 4
edge 0 1 m=5
edge 1 2 m=3
edge 2 3 dotted w=1 + sqrt(2)
edge 0 3 bold
";
        let ds = parse_diagrams(src).unwrap();
        let rendered = write_diagram("x", &ds[0].1);
        let ds2 = parse_diagrams(&rendered).unwrap();
        assert!(is_isomorphic_exact(&ds[0].1, &ds2[0].1).is_some());
    }

    #[test]
    fn dot_output() {
        let src = "diagram x\nnodes 3\nedge 0 1 m=3\nedge 1 2 m=5\n";
        let ds = parse_diagrams(src).unwrap();
        let dot = to_dot("x", &ds[0].1);
        assert!(dot.contains("n0 -- n1;"));
        assert!(dot.contains("label=\"5\""));
    }

    #[test]
    fn multiple_diagrams_per_stream() {
        let src = "diagram a\nnodes 1\ndiagram b\nnodes 2\nedge 0 1 m=4\n";
        let ds = parse_diagrams(src).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[1].1.edge(0, 1).angle(), Some(4));
    }
}
