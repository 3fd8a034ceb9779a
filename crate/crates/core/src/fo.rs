//! A first-order formula parser and naive evaluator over finite simple
//! graphs, with encoders for the classic size-k problems.
//!
//! The signature is edge-only: atoms are `E(x,y)` and `x = y`. Connectives
//! are `and`, `or`, `not` with the usual precedence (not > and > or);
//! quantifier bodies extend as far right as possible after the dot. All
//! variables must be bound.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Eq(String, String),
    Edge(String, String),
}

impl Formula {
    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Formula::Exists(_, f) | Formula::Forall(_, f) | Formula::Not(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.size() + b.size(),
            Formula::Eq(_, _) | Formula::Edge(_, _) => 1,
        }
    }

    /// Maximum quantifier nesting.
    pub fn quantifier_depth(&self) -> u32 {
        match self {
            Formula::Exists(_, f) | Formula::Forall(_, f) => 1 + f.quantifier_depth(),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.quantifier_depth().max(b.quantifier_depth())
            }
            Formula::Not(f) => f.quantifier_depth(),
            Formula::Eq(_, _) | Formula::Edge(_, _) => 0,
        }
    }

    fn check_bound(&self, bound: &mut Vec<String>) -> Result<()> {
        match self {
            Formula::Exists(x, f) | Formula::Forall(x, f) => {
                bound.push(x.clone());
                f.check_bound(bound)?;
                bound.pop();
                Ok(())
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.check_bound(bound)?;
                b.check_bound(bound)
            }
            Formula::Not(f) => f.check_bound(bound),
            Formula::Eq(x, y) | Formula::Edge(x, y) => {
                for v in [x, y] {
                    if !bound.contains(v) {
                        return Err(Error::InvalidInput(format!("unbound variable {v:?}")));
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // a quantifier body extends maximally right, so quantified operands
        // of a binary connective must be parenthesized
        fn operand(g: &Formula) -> String {
            match g {
                Formula::Exists(..) | Formula::Forall(..) => format!("({g})"),
                _ => g.to_string(),
            }
        }
        match self {
            Formula::Exists(x, g) => write!(f, "exists {x}. {g}"),
            Formula::Forall(x, g) => write!(f, "forall {x}. {g}"),
            Formula::And(a, b) => write!(f, "({} and {})", operand(a), operand(b)),
            Formula::Or(a, b) => write!(f, "({} or {})", operand(a), operand(b)),
            Formula::Not(g) => match **g {
                Formula::Eq(_, _) | Formula::Edge(_, _) => write!(f, "not {g}"),
                _ => write!(f, "not ({g})"),
            },
            Formula::Eq(x, y) => write!(f, "{x} = {y}"),
            Formula::Edge(x, y) => write!(f, "E({x}, {y})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Word(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Equals,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                out.push((Token::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Token::RParen, i));
                i += 1;
            }
            ',' => {
                out.push((Token::Comma, i));
                i += 1;
            }
            '.' => {
                out.push((Token::Dot, i));
                i += 1;
            }
            '=' => {
                out.push((Token::Equals, i));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                out.push((Token::Word(text[start..i].to_string()), start));
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "unexpected character {other:?} at position {i}"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |&(_, p)| p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        let at = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(Error::InvalidInput(format!(
                "expected {what} at position {at}"
            ))),
        }
    }

    fn word(&mut self, what: &str) -> Result<String> {
        let at = self.here();
        match self.bump() {
            Some(Token::Word(w)) => Ok(w),
            _ => Err(Error::InvalidInput(format!(
                "expected {what} at position {at}"
            ))),
        }
    }

    fn variable(&mut self) -> Result<String> {
        let at = self.here();
        let w = self.word("a variable")?;
        if ["exists", "forall", "and", "or", "not", "E"].contains(&w.as_str()) {
            return Err(Error::InvalidInput(format!(
                "keyword {w:?} cannot be a variable (position {at})"
            )));
        }
        Ok(w)
    }

    fn formula(&mut self) -> Result<Formula> {
        if let Some(Token::Word(w)) = self.peek() {
            if w == "exists" || w == "forall" {
                let kind = w.clone();
                self.bump();
                let x = self.variable()?;
                self.expect(Token::Dot, "'.' after the quantified variable")?;
                let body = Box::new(self.formula()?);
                return Ok(if kind == "exists" {
                    Formula::Exists(x, body)
                } else {
                    Formula::Forall(x, body)
                });
            }
        }
        self.or_expr()
    }

    fn or_expr(&mut self) -> Result<Formula> {
        let mut lhs = self.and_expr()?;
        while matches!(self.peek(), Some(Token::Word(w)) if w == "or") {
            self.bump();
            let rhs = self.and_expr()?;
            lhs = Formula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and_expr(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while matches!(self.peek(), Some(Token::Word(w)) if w == "and") {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Token::Word(w)) if w == "not" => {
                self.bump();
                Ok(Formula::Not(Box::new(self.unary()?)))
            }
            Some(Token::Word(w)) if w == "exists" || w == "forall" => self.formula(),
            Some(Token::LParen) => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Token::RParen, "closing ')'")?;
                Ok(inner)
            }
            Some(Token::Word(w)) if w == "E" => {
                self.bump();
                self.expect(Token::LParen, "'(' after E")?;
                let x = self.variable()?;
                self.expect(Token::Comma, "',' between edge arguments")?;
                let y = self.variable()?;
                self.expect(Token::RParen, "')' after edge arguments")?;
                Ok(Formula::Edge(x, y))
            }
            Some(Token::Word(_)) => {
                let x = self.variable()?;
                self.expect(Token::Equals, "'=' in an equality atom")?;
                let y = self.variable()?;
                Ok(Formula::Eq(x, y))
            }
            _ => Err(Error::InvalidInput(format!(
                "expected a formula at position {}",
                self.here()
            ))),
        }
    }
}

/// Parses the documented grammar; all variables must end up bound.
pub fn parse(text: &str) -> Result<Formula> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        len: text.len(),
    };
    let f = p.formula()?;
    if p.pos != p.tokens.len() {
        return Err(Error::InvalidInput(format!(
            "trailing input at position {}",
            p.here()
        )));
    }
    f.check_bound(&mut Vec::new())?;
    Ok(f)
}

/// Standard FO semantics by exhaustive assignment; the budget bounds
/// |V|^depth.
pub fn evaluate(g: &SimpleGraph, f: &Formula, budget: u64) -> Result<bool> {
    let n = g.vertex_count() as u64;
    let depth = f.quantifier_depth();
    let mut cost = 1u64;
    for _ in 0..depth {
        cost = cost.saturating_mul(n.max(1));
        if cost > budget {
            return Err(Error::ResourceLimit(format!(
                "evaluation would explore about {n}^{depth} assignments (budget {budget})"
            )));
        }
    }
    f.check_bound(&mut Vec::new())?;
    let mut env: Vec<(String, usize)> = Vec::new();
    Ok(eval_rec(g, f, &mut env))
}

fn eval_rec(g: &SimpleGraph, f: &Formula, env: &mut Vec<(String, usize)>) -> bool {
    match f {
        Formula::Exists(x, body) => (0..g.vertex_count()).any(|i| {
            env.push((x.clone(), i));
            let r = eval_rec(g, body, env);
            env.pop();
            r
        }),
        Formula::Forall(x, body) => (0..g.vertex_count()).all(|i| {
            env.push((x.clone(), i));
            let r = eval_rec(g, body, env);
            env.pop();
            r
        }),
        Formula::And(a, b) => eval_rec(g, a, env) && eval_rec(g, b, env),
        Formula::Or(a, b) => eval_rec(g, a, env) || eval_rec(g, b, env),
        Formula::Not(a) => !eval_rec(g, a, env),
        Formula::Eq(x, y) => lookup(env, x) == lookup(env, y),
        Formula::Edge(x, y) => g.has_edge_idx(lookup(env, x), lookup(env, y)),
    }
}

fn lookup(env: &[(String, usize)], var: &str) -> usize {
    env.iter()
        .rev()
        .find(|(name, _)| name == var)
        .map(|&(_, i)| i)
        .expect("boundness checked before evaluation")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    IndependentSet,
    Clique,
    DominatingSet,
}

impl ProblemKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "independent_set" => Ok(ProblemKind::IndependentSet),
            "clique" => Ok(ProblemKind::Clique),
            "dominating_set" => Ok(ProblemKind::DominatingSet),
            other => Err(Error::InvalidInput(format!(
                "unknown problem kind {other:?}"
            ))),
        }
    }
}

/// Encodes "has an independent set / clique of size >= k" or "has a
/// dominating set of size <= k" with O(k) quantifiers. Constraints sit
/// inside the quantifier nest so evaluation prunes early.
pub fn encode_problem(kind: ProblemKind, k: usize) -> Formula {
    let var = |i: usize| format!("x{i}");
    match kind {
        ProblemKind::IndependentSet | ProblemKind::Clique => {
            if k == 0 {
                return Formula::Forall(
                    "x0".into(),
                    Box::new(Formula::Eq("x0".into(), "x0".into())),
                );
            }
            // innermost first: constraints of x_i against x_1..x_{i-1}
            let mut body: Option<Formula> = None;
            for i in (1..=k).rev() {
                let mut constraints: Option<Formula> = None;
                for j in 1..i {
                    let distinct = Formula::Not(Box::new(Formula::Eq(var(j), var(i))));
                    let adjacency = Formula::Edge(var(j), var(i));
                    let want = match kind {
                        ProblemKind::IndependentSet => Formula::And(
                            Box::new(distinct),
                            Box::new(Formula::Not(Box::new(adjacency))),
                        ),
                        ProblemKind::Clique => {
                            // adjacency already implies distinctness
                            adjacency
                        }
                        ProblemKind::DominatingSet => unreachable!(),
                    };
                    constraints = Some(match constraints {
                        None => want,
                        Some(c) => Formula::And(Box::new(c), Box::new(want)),
                    });
                }
                let inner = match (constraints, body) {
                    (None, None) => Formula::Eq(var(i), var(i)),
                    (Some(c), None) => c,
                    (None, Some(b)) => b,
                    (Some(c), Some(b)) => Formula::And(Box::new(c), Box::new(b)),
                };
                body = Some(Formula::Exists(var(i), Box::new(inner)));
            }
            body.expect("k >= 1")
        }
        ProblemKind::DominatingSet => {
            if k == 0 {
                // the empty set dominates exactly the empty graph
                return Formula::Forall(
                    "y".into(),
                    Box::new(Formula::Not(Box::new(Formula::Eq("y".into(), "y".into())))),
                );
            }
            let mut cover: Option<Formula> = None;
            for i in 1..=k {
                let hit = Formula::Or(
                    Box::new(Formula::Eq("y".into(), var(i))),
                    Box::new(Formula::Edge("y".into(), var(i))),
                );
                cover = Some(match cover {
                    None => hit,
                    Some(c) => Formula::Or(Box::new(c), Box::new(hit)),
                });
            }
            let mut f = Formula::Forall("y".into(), Box::new(cover.expect("k >= 1")));
            for i in (1..=k).rev() {
                f = Formula::Exists(var(i), Box::new(f));
            }
            f
        }
    }
}

/// Brute-force combinatorial oracles for the three encoded problems.
pub fn oracle_answer(g: &SimpleGraph, kind: ProblemKind, k: usize) -> bool {
    let n = g.vertex_count();
    let masks = g.adjacency_masks();
    match kind {
        ProblemKind::IndependentSet => (0u64..(1 << n)).any(|s| {
            s.count_ones() as usize >= k && (0..n).all(|i| s >> i & 1 == 0 || masks[i] & s == 0)
        }),
        ProblemKind::Clique => (0u64..(1 << n)).any(|s| {
            s.count_ones() as usize >= k
                && (0..n).all(|i| s >> i & 1 == 0 || masks[i] & s == s & !(1 << i))
        }),
        ProblemKind::DominatingSet => (0u64..(1 << n)).any(|s| {
            s.count_ones() as usize <= k && (0..n).all(|i| s >> i & 1 == 1 || masks[i] & s != 0)
        }),
    }
}

/// Distinct variables appearing in a formula; test support.
pub fn variables(f: &Formula) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    fn go(f: &Formula, out: &mut BTreeSet<String>) {
        match f {
            Formula::Exists(x, g) | Formula::Forall(x, g) => {
                out.insert(x.clone());
                go(g, out);
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                go(a, out);
                go(b, out);
            }
            Formula::Not(g) => go(g, out),
            Formula::Eq(x, y) | Formula::Edge(x, y) => {
                out.insert(x.clone());
                out.insert(y.clone());
            }
        }
    }
    go(f, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c5() -> SimpleGraph {
        SimpleGraph::from_edges(
            vec!["1", "2", "3", "4", "5"],
            &[("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")],
        )
        .unwrap()
    }

    #[test]
    fn parse_two_quantifier_formula() {
        let f = parse("exists x. exists y. not E(x,y) and not x=y").unwrap();
        assert_eq!(f.quantifier_depth(), 2);
        assert!(f.size() >= 7);
    }

    #[test]
    fn unbalanced_paren_is_positioned_error() {
        let err = parse("exists x. (E(x,x) or x=x").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("position"), "{msg}");
    }

    #[test]
    fn unbound_variable_rejected() {
        assert!(parse("exists x. E(x,y)").is_err());
    }

    #[test]
    fn tautology_on_any_nonempty_graph() {
        let f = parse("forall x. x=x").unwrap();
        assert!(evaluate(&c5(), &f, 1_000_000).unwrap());
        let empty = SimpleGraph::new(Vec::<String>::new()).unwrap();
        assert!(evaluate(&empty, &f, 1_000_000).unwrap());
    }

    #[test]
    fn tight_budget_is_a_resource_error() {
        let f = encode_problem(ProblemKind::IndependentSet, 5);
        let err = evaluate(&c5(), &f, 100).unwrap_err();
        assert!(matches!(err, crate::error::Error::ResourceLimit(_)));
    }

    #[test]
    fn independent_set_on_c5() {
        // alpha(C5) = 2
        let yes = encode_problem(ProblemKind::IndependentSet, 2);
        let no = encode_problem(ProblemKind::IndependentSet, 3);
        assert!(evaluate(&c5(), &yes, 10_000_000).unwrap());
        assert!(!evaluate(&c5(), &no, 10_000_000).unwrap());
    }

    #[test]
    fn clique_and_domination_fixtures() {
        let two_k2 =
            SimpleGraph::from_edges(vec!["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        assert!(evaluate(
            &two_k2,
            &encode_problem(ProblemKind::IndependentSet, 2),
            1 << 20
        )
        .unwrap());
        let c4 = SimpleGraph::from_edges(
            vec!["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        .unwrap();
        assert!(!evaluate(&c4, &encode_problem(ProblemKind::Clique, 3), 1 << 20).unwrap());
        let star = SimpleGraph::from_edges(
            vec!["z", "a", "b", "c"],
            &[("z", "a"), ("z", "b"), ("z", "c")],
        )
        .unwrap();
        assert!(evaluate(
            &star,
            &encode_problem(ProblemKind::DominatingSet, 1),
            1 << 20
        )
        .unwrap());
    }

    fn random_formula(rng: &mut StdRng, vars: &[String], depth: usize) -> Formula {
        if depth == 0 && vars.is_empty() {
            let v = "q".to_string();
            return Formula::Exists(v.clone(), Box::new(Formula::Eq(v.clone(), v)));
        }
        let choice = if depth == 0 {
            rng.random_range(0..2)
        } else if vars.is_empty() {
            rng.random_range(2..6)
        } else {
            rng.random_range(0..6)
        };
        match choice {
            0 => {
                let x = vars[rng.random_range(0..vars.len())].clone();
                let y = vars[rng.random_range(0..vars.len())].clone();
                Formula::Eq(x, y)
            }
            1 => {
                let x = vars[rng.random_range(0..vars.len())].clone();
                let y = vars[rng.random_range(0..vars.len())].clone();
                Formula::Edge(x, y)
            }
            2 | 3 => {
                let v = format!("v{}", rng.random_range(0..100));
                let mut inner: Vec<String> = vars.to_vec();
                inner.push(v.clone());
                let body = random_formula(rng, &inner, depth - 1);
                if choice == 2 {
                    Formula::Exists(v, Box::new(body))
                } else {
                    Formula::Forall(v, Box::new(body))
                }
            }
            4 => Formula::Not(Box::new(random_formula(rng, vars, depth - 1))),
            _ => {
                let a = random_formula(rng, vars, depth - 1);
                let b = random_formula(rng, vars, depth - 1);
                if rng.random_bool(0.5) {
                    Formula::And(Box::new(a), Box::new(b))
                } else {
                    Formula::Or(Box::new(a), Box::new(b))
                }
            }
        }
    }

    #[test]
    fn print_parse_roundtrip() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..200 {
            let f = random_formula(&mut rng, &[], 4);
            let printed = f.to_string();
            let reparsed = parse(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
            assert_eq!(reparsed, f, "{printed}");
        }
    }
}
