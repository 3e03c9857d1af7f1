//! Canonical text format for the three structure families.
//!
//! One structure per line:
//!
//! ```text
//! dmatrix d=2 sides=3,3 edges=(1,1);(2,3);(3,2)
//! graph n=4 edges={1,3};{2,4}
//! hypergraph n=3 edges={1,3};{2};{1,3}
//! ```
//!
//! Input is whitespace-insensitive; output is canonical (edges sorted).
//! Repeated hypergraph edges denote multiplicity; repeated matrix or graph
//! edges are rejected.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{OrderedGraph, OrderedHypergraph};
use crate::matrix::DMatrix;

/// Any of the three serializable structure families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Matrix(DMatrix),
    Graph(OrderedGraph),
    Hypergraph(OrderedHypergraph),
}

impl Structure {
    pub fn parse(text: &str) -> Result<Structure> {
        Parser::new(text).parse_structure()
    }

    pub fn to_text(&self) -> String {
        match self {
            Structure::Matrix(m) => matrix_to_text(m),
            Structure::Graph(g) => graph_to_text(g),
            Structure::Hypergraph(h) => hypergraph_to_text(h),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Matrix(_) => "dmatrix",
            Structure::Graph(_) => "graph",
            Structure::Hypergraph(_) => "hypergraph",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Structure::Matrix(m) => m.validate(),
            Structure::Graph(g) => g.validate(),
            Structure::Hypergraph(h) => h.validate(),
        }
    }
}

pub fn parse_matrix(text: &str) -> Result<DMatrix> {
    match Structure::parse(text)? {
        Structure::Matrix(m) => Ok(m),
        other => Err(Error::invalid(format!(
            "expected a dmatrix, found {}",
            other.kind()
        ))),
    }
}

pub fn parse_graph(text: &str) -> Result<OrderedGraph> {
    match Structure::parse(text)? {
        Structure::Graph(g) => Ok(g),
        other => Err(Error::invalid(format!(
            "expected a graph, found {}",
            other.kind()
        ))),
    }
}

pub fn parse_hypergraph(text: &str) -> Result<OrderedHypergraph> {
    match Structure::parse(text)? {
        Structure::Hypergraph(h) => Ok(h),
        other => Err(Error::invalid(format!(
            "expected a hypergraph, found {}",
            other.kind()
        ))),
    }
}

pub fn matrix_to_text(m: &DMatrix) -> String {
    let mut out = String::new();
    let sides: Vec<String> = m.sides().iter().map(|s| s.to_string()).collect();
    write!(out, "dmatrix d={} sides={} edges=", m.dims(), sides.join(",")).unwrap();
    for (i, edge) in m.edges().iter().enumerate() {
        if i > 0 {
            out.push(';');
        }
        let coords: Vec<String> = edge.iter().map(|c| c.to_string()).collect();
        write!(out, "({})", coords.join(",")).unwrap();
    }
    out
}

pub fn graph_to_text(g: &OrderedGraph) -> String {
    let mut out = String::new();
    write!(out, "graph n={} edges=", g.vertex_count()).unwrap();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if i > 0 {
            out.push(';');
        }
        write!(out, "{{{a},{b}}}").unwrap();
    }
    out
}

pub fn hypergraph_to_text(h: &OrderedHypergraph) -> String {
    let mut out = String::new();
    write!(out, "hypergraph n={} edges=", h.vertex_count()).unwrap();
    for (i, edge) in h.edges().iter().enumerate() {
        if i > 0 {
            out.push(';');
        }
        let vs: Vec<String> = edge.iter().map(|v| v.to_string()).collect();
        write!(out, "{{{}}}", vs.join(",")).unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(u32),
    Eq,
    Comma,
    Semi,
    LParen,
    RParen,
    LBrace,
    RBrace,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier {s:?}"),
            Token::Int(v) => format!("number {v}"),
            Token::Eq => "'='".into(),
            Token::Comma => "','".into(),
            Token::Semi => "';'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::LBrace => "'{'".into(),
            Token::RBrace => "'}'".into(),
            Token::End => "end of input".into(),
        }
    }
}

struct Parser {
    tokens: Vec<(Token, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Parser {
        let mut tokens = Vec::new();
        let mut line = 1usize;
        let mut col = 1usize;
        let mut chars = text.chars().peekable();
        let mut end = (1, 1);
        while let Some(&c) = chars.peek() {
            let (tl, tc) = (line, col);
            match c {
                '\n' => {
                    chars.next();
                    line += 1;
                    col = 1;
                }
                c if c.is_whitespace() => {
                    chars.next();
                    col += 1;
                }
                '=' | ',' | ';' | '(' | ')' | '{' | '}' => {
                    chars.next();
                    col += 1;
                    let tok = match c {
                        '=' => Token::Eq,
                        ',' => Token::Comma,
                        ';' => Token::Semi,
                        '(' => Token::LParen,
                        ')' => Token::RParen,
                        '{' => Token::LBrace,
                        _ => Token::RBrace,
                    };
                    tokens.push((tok, tl, tc));
                }
                c if c.is_ascii_digit() => {
                    let mut text = String::new();
                    while let Some(&c) = chars.peek() {
                        if c.is_ascii_digit() {
                            text.push(c);
                            chars.next();
                            col += 1;
                        } else {
                            break;
                        }
                    }
                    match text.parse::<u32>() {
                        Ok(v) => tokens.push((Token::Int(v), tl, tc)),
                        Err(_) => {
                            tokens.push((Token::Ident(text), tl, tc));
                        }
                    }
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut text = String::new();
                    while let Some(&c) = chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            text.push(c);
                            chars.next();
                            col += 1;
                        } else {
                            break;
                        }
                    }
                    tokens.push((Token::Ident(text), tl, tc));
                }
                _ => {
                    tokens.push((Token::Ident(c.to_string()), tl, tc));
                    chars.next();
                    col += 1;
                }
            }
            end = (line, col);
        }
        Parser {
            tokens,
            pos: 0,
            end,
        }
    }

    fn peek(&self) -> &Token {
        self.tokens
            .get(self.pos)
            .map(|(t, _, _)| t)
            .unwrap_or(&Token::End)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Token {
        let tok = self.peek().clone();
        if self.pos < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<()> {
        match self.peek() {
            Token::Ident(s) if s == word => {
                self.bump();
                Ok(())
            }
            other => Err(self.error(format!("expected {word:?}, found {}", other.describe()))),
        }
    }

    fn expect_int(&mut self) -> Result<u32> {
        match self.peek() {
            Token::Int(v) => {
                let v = *v;
                self.bump();
                Ok(v)
            }
            other => Err(self.error(format!("expected a number, found {}", other.describe()))),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        if *self.peek() == Token::End {
            Ok(())
        } else {
            Err(self.error(format!(
                "unexpected trailing {}",
                self.peek().describe()
            )))
        }
    }

    fn int_list(&mut self) -> Result<Vec<u32>> {
        let mut out = vec![self.expect_int()?];
        while *self.peek() == Token::Comma {
            self.bump();
            out.push(self.expect_int()?);
        }
        Ok(out)
    }

    fn parse_structure(&mut self) -> Result<Structure> {
        match self.peek().clone() {
            Token::Ident(kind) if kind == "dmatrix" => {
                self.bump();
                self.parse_matrix_body().map(Structure::Matrix)
            }
            Token::Ident(kind) if kind == "graph" => {
                self.bump();
                self.parse_graph_body().map(Structure::Graph)
            }
            Token::Ident(kind) if kind == "hypergraph" => {
                self.bump();
                self.parse_hypergraph_body().map(Structure::Hypergraph)
            }
            other => Err(self.error(format!(
                "expected \"dmatrix\", \"graph\" or \"hypergraph\", found {}",
                other.describe()
            ))),
        }
    }

    fn parse_matrix_body(&mut self) -> Result<DMatrix> {
        self.expect_keyword("d")?;
        self.expect(Token::Eq)?;
        let d = self.expect_int()? as usize;
        self.expect_keyword("sides")?;
        self.expect(Token::Eq)?;
        let sides = self.int_list()?;
        if sides.len() != d {
            return Err(self.error(format!(
                "d={} but {} sides were given",
                d,
                sides.len()
            )));
        }
        self.expect_keyword("edges")?;
        self.expect(Token::Eq)?;
        let mut edges = Vec::new();
        if *self.peek() == Token::LParen {
            loop {
                self.expect(Token::LParen)?;
                let coords = self.int_list()?;
                self.expect(Token::RParen)?;
                if coords.len() != d {
                    return Err(self.error(format!(
                        "edge has {} coordinates, expected {}",
                        coords.len(),
                        d
                    )));
                }
                edges.push(coords);
                if *self.peek() == Token::Semi {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect_end()?;
        DMatrix::new(sides, edges)
    }

    fn vertex_set(&mut self) -> Result<Vec<u32>> {
        self.expect(Token::LBrace)?;
        let vs = self.int_list()?;
        self.expect(Token::RBrace)?;
        Ok(vs)
    }

    fn vertex_sets(&mut self) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        if *self.peek() == Token::LBrace {
            loop {
                out.push(self.vertex_set()?);
                if *self.peek() == Token::Semi {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        Ok(out)
    }

    fn parse_graph_body(&mut self) -> Result<OrderedGraph> {
        self.expect_keyword("n")?;
        self.expect(Token::Eq)?;
        let n = self.expect_int()?;
        self.expect_keyword("edges")?;
        self.expect(Token::Eq)?;
        let sets = self.vertex_sets()?;
        self.expect_end()?;
        let mut edges = Vec::with_capacity(sets.len());
        for set in sets {
            if set.len() != 2 {
                return Err(Error::violation(format!(
                    "graph edge must have exactly 2 vertices, got {:?}",
                    set
                )));
            }
            edges.push((set[0], set[1]));
        }
        OrderedGraph::new(n, edges)
    }

    fn parse_hypergraph_body(&mut self) -> Result<OrderedHypergraph> {
        self.expect_keyword("n")?;
        self.expect(Token::Eq)?;
        let n = self.expect_int()?;
        self.expect_keyword("edges")?;
        self.expect(Token::Eq)?;
        let sets = self.vertex_sets()?;
        self.expect_end()?;
        OrderedHypergraph::new(n, sets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let canonical = "dmatrix d=2 sides=3,3 edges=(1,1);(2,3);(3,2)";
        let m = parse_matrix(canonical).unwrap();
        assert_eq!(matrix_to_text(&m), canonical);
    }

    #[test]
    fn out_of_order_edges_normalize() {
        let a = parse_matrix("dmatrix d=2 sides=2,2 edges=(2,2);(1,1)").unwrap();
        let b = parse_matrix("dmatrix d=2 sides=2,2 edges=(1,1);(2,2)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn duplicate_matrix_edge_rejected() {
        let err = parse_matrix("dmatrix d=2 sides=2,2 edges=(1,1);(1,1)").unwrap_err();
        assert!(err.to_string().contains("duplicate edge"));
    }

    #[test]
    fn whitespace_insensitive() {
        let m = parse_matrix(" dmatrix  d = 2\n sides = 2 , 2  edges = ( 1 , 1 ) ; ( 2 , 2 ) ")
            .unwrap();
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn parse_error_carries_position() {
        let err = Structure::parse("dmatrix d=2 sides=2,2 edges=(1 1)").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 1);
                assert!(column > 1);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn hypergraph_multiplicity_survives() {
        let h = parse_hypergraph("hypergraph n=3 edges={1,3};{2};{1,3}").unwrap();
        assert_eq!(h.size(), 3);
        assert!(!h.is_simple());
        assert_eq!(hypergraph_to_text(&h), "hypergraph n=3 edges={1,3};{1,3};{2}");
    }

    #[test]
    fn graph_round_trip_and_empty() {
        let g = parse_graph("graph n=4 edges={2,4};{1,3}").unwrap();
        assert_eq!(graph_to_text(&g), "graph n=4 edges={1,3};{2,4}");
        let e = parse_graph("graph n=4 edges=").unwrap();
        assert_eq!(e.edge_count(), 0);
        assert_eq!(graph_to_text(&e), "graph n=4 edges=");
        assert_eq!(parse_graph(&graph_to_text(&e)).unwrap(), e);
    }

    #[test]
    fn kind_mismatch() {
        assert!(parse_graph("dmatrix d=1 sides=1 edges=").is_err());
    }
}
