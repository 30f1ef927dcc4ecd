//! Oriented open Gauss codes for virtual knotoid diagrams.
//!
//! A diagram is the sequence of crossing passes met while walking from tail
//! to head. Classical passes split the walk into semi-arcs `0..=2c`; the
//! `k`-th classical pass joins semi-arc `k` to semi-arc `k + 1`. Virtual
//! passes do not split semi-arcs.

mod moves;

pub use moves::{random_move, MoveKind, R1Order, R2Variant};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("pairing error: {0}")]
    Pairing(String),
    #[error("sign error: classical crossing {0} has mismatched signs")]
    Sign(u32),
    #[error("position error: {0}")]
    Position(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Token {
    Over { id: u32, sign: Sign },
    Under { id: u32, sign: Sign },
    Virtual { id: u32 },
}

impl Token {
    pub fn is_classical(self) -> bool {
        !matches!(self, Token::Virtual { .. })
    }

    fn with_offset(self, classical: u32, virt: u32) -> Token {
        match self {
            Token::Over { id, sign } => Token::Over { id: id + classical, sign },
            Token::Under { id, sign } => Token::Under { id: id + classical, sign },
            Token::Virtual { id } => Token::Virtual { id: id + virt },
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Token::Over { id, sign } => write!(f, "O{}{id}", sign.symbol()),
            Token::Under { id, sign } => write!(f, "U{}{id}", sign.symbol()),
            Token::Virtual { id } => write!(f, "V{id}"),
        }
    }
}

/// A classical crossing with its four ports as semi-arc indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub id: u32,
    pub sign: Sign,
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
}

/// The two coloring relations of a classical crossing, as semi-arc indices:
/// `under_result = x ▷̲ y` and `over_result = y ▷̄ x`, i.e.
/// `(over_result, under_result) = S(x, y)`.
///
/// At a positive crossing `(x, y) = (under_in, over_out)`; at a negative
/// crossing `(x, y) = (under_out, over_in)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub crossing: u32,
    pub sign: Sign,
    pub x: usize,
    pub y: usize,
    pub under_result: usize,
    pub over_result: usize,
}

impl Crossing {
    pub fn relation(&self) -> Relation {
        let (x, y, under_result, over_result) = match self.sign {
            Sign::Positive => (self.under_in, self.over_out, self.under_out, self.over_in),
            Sign::Negative => (self.under_out, self.over_in, self.under_in, self.over_out),
        };
        Relation { crossing: self.id, sign: self.sign, x, y, under_result, over_result }
    }
}

/// Generators `a_1..a_{2c+1}` (semi-arc `k` is `a_{k+1}`) with two
/// relations per classical crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<PresentationRelation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Operation {
    Under,
    Over,
}

/// `left op right = result`, all as 0-based semi-arc indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationRelation {
    pub left: usize,
    pub op: Operation,
    pub right: usize,
    pub result: usize,
}

impl fmt::Display for PresentationRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.op {
            Operation::Under => "▷̲",
            Operation::Over => "▷̄",
        };
        write!(f, "a{} {op} a{} = a{}", self.left + 1, self.right + 1, self.result + 1)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<a1..a{} |", self.generators)?;
        for (i, r) in self.relations.iter().enumerate() {
            write!(f, "{} {r}", if i == 0 { "" } else { "," })?;
        }
        f.write_str(" >")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotoidDiagram {
    name: String,
    tokens: Vec<Token>,
    crossings: Vec<Crossing>,
    virtual_count: usize,
}

impl KnotoidDiagram {
    /// Validates a token list. Classical and virtual ids live in separate
    /// namespaces.
    pub fn new(name: impl Into<String>, tokens: Vec<Token>) -> Result<Self, DiagramError> {
        #[derive(Default)]
        struct Seen {
            over: Option<(usize, Sign)>,
            under: Option<(usize, Sign)>,
        }
        let mut classical: BTreeMap<u32, Seen> = BTreeMap::new();
        let mut virt: BTreeMap<u32, usize> = BTreeMap::new();
        let mut pass = 0usize;
        for t in &tokens {
            match *t {
                Token::Over { id, sign } | Token::Under { id, sign } => {
                    let seen = classical.entry(id).or_default();
                    let slot = if matches!(t, Token::Over { .. }) { &mut seen.over } else { &mut seen.under };
                    if slot.is_some() {
                        return Err(DiagramError::Pairing(format!("crossing {id} has two {} passes", if matches!(t, Token::Over { .. }) { "over" } else { "under" })));
                    }
                    *slot = Some((pass, sign));
                    pass += 1;
                }
                Token::Virtual { id } => {
                    let c = virt.entry(id).or_insert(0);
                    *c += 1;
                    if *c > 2 {
                        return Err(DiagramError::Pairing(format!("virtual crossing {id} appears more than twice")));
                    }
                }
            }
        }
        let mut crossings = Vec::with_capacity(classical.len());
        for (id, seen) in classical {
            let (Some((o, so)), Some((u, su))) = (seen.over, seen.under) else {
                return Err(DiagramError::Pairing(format!("crossing {id} needs one over and one under pass")));
            };
            if so != su {
                return Err(DiagramError::Sign(id));
            }
            crossings.push(Crossing { id, sign: so, under_in: u, under_out: u + 1, over_in: o, over_out: o + 1 });
        }
        if let Some((id, _)) = virt.iter().find(|(_, &c)| c != 2) {
            return Err(DiagramError::Pairing(format!("virtual crossing {id} appears once")));
        }
        Ok(KnotoidDiagram { name: name.into(), tokens, crossings, virtual_count: virt.len() })
    }

    pub fn trivial() -> Self {
        KnotoidDiagram { name: "trivial".into(), tokens: Vec::new(), crossings: Vec::new(), virtual_count: 0 }
    }

    /// Parses a bare code: comma-separated tokens, or `-` / empty for the
    /// trivial diagram.
    pub fn parse_code(name: &str, code: &str) -> Result<Self, DiagramError> {
        let code = code.trim();
        if code.is_empty() || code == "-" {
            return Self::new(name, Vec::new());
        }
        let tokens = code.split(',').map(|t| parse_token(t.trim())).collect::<Result<Vec<_>, _>>()?;
        Self::new(name, tokens)
    }

    /// Parses the diagram file format (`name <id>` then `code ...`). Blank
    /// lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let name_line = lines.next().ok_or_else(|| DiagramError::Syntax("empty diagram file".into()))?;
        let name = name_line
            .strip_prefix("name")
            .filter(|r| r.starts_with(char::is_whitespace))
            .map(str::trim)
            .filter(|r| !r.is_empty() && !r.contains(char::is_whitespace))
            .ok_or_else(|| DiagramError::Syntax(format!("expected `name <identifier>`, got {name_line:?}")))?;
        let code_line = lines.next().ok_or_else(|| DiagramError::Syntax("missing `code` line".into()))?;
        let code = code_line
            .strip_prefix("code")
            .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
            .ok_or_else(|| DiagramError::Syntax(format!("expected `code ...`, got {code_line:?}")))?;
        if code.trim().is_empty() {
            return Err(DiagramError::Syntax("use `code -` for the trivial diagram".into()));
        }
        if let Some(extra) = lines.next() {
            return Err(DiagramError::Syntax(format!("unexpected trailing line {extra:?}")));
        }
        Self::parse_code(name, code)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    /// Classical crossings sorted by id.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn classical_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn virtual_count(&self) -> usize {
        self.virtual_count
    }

    pub fn semi_arc_count(&self) -> usize {
        2 * self.crossings.len() + 1
    }

    pub fn tail(&self) -> usize {
        0
    }

    pub fn head(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn relations(&self) -> Vec<Relation> {
        self.crossings.iter().map(Crossing::relation).collect()
    }

    /// The fundamental biquandle presentation.
    pub fn presentation(&self) -> Presentation {
        let mut relations = Vec::with_capacity(2 * self.crossings.len());
        for r in self.relations() {
            relations.push(PresentationRelation { left: r.x, op: Operation::Under, right: r.y, result: r.under_result });
            relations.push(PresentationRelation { left: r.y, op: Operation::Over, right: r.x, result: r.over_result });
        }
        Presentation { generators: self.semi_arc_count(), relations }
    }

    fn max_ids(&self) -> (u32, u32) {
        let mut c = 0;
        let mut v = 0;
        for t in &self.tokens {
            match *t {
                Token::Over { id, .. } | Token::Under { id, .. } => c = c.max(id),
                Token::Virtual { id } => v = v.max(id),
            }
        }
        (c, v)
    }

    /// Head-to-tail concatenation; `other`'s ids are shifted past ours.
    pub fn product(&self, other: &KnotoidDiagram) -> KnotoidDiagram {
        let (c, v) = self.max_ids();
        let mut tokens = self.tokens.clone();
        tokens.extend(other.tokens.iter().map(|t| t.with_offset(c, v)));
        let name = format!("{}*{}", self.name, other.name);
        KnotoidDiagram::new(name, tokens).expect("concatenating valid codes with disjoint ids is valid")
    }

    /// Comma-separated tokens, `-` for the trivial diagram.
    pub fn code(&self) -> String {
        if self.tokens.is_empty() {
            return "-".into();
        }
        self.tokens.iter().map(Token::to_string).collect::<Vec<_>>().join(",")
    }

    /// Renders the file format.
    pub fn render(&self) -> String {
        format!("name {}\ncode {}\n", self.name, self.code())
    }
}

fn parse_token(t: &str) -> Result<Token, DiagramError> {
    let bad = || DiagramError::Syntax(format!("bad token {t:?}"));
    let mut chars = t.chars();
    let kind = chars.next().ok_or_else(|| DiagramError::Syntax("empty token".into()))?;
    let rest = chars.as_str();
    let parse_id = |s: &str| -> Result<u32, DiagramError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    match kind {
        'O' | 'U' => {
            let mut rc = rest.chars();
            let sign = match rc.next() {
                Some('+') => Sign::Positive,
                Some('-') => Sign::Negative,
                _ => return Err(bad()),
            };
            let id = parse_id(rc.as_str())?;
            Ok(if kind == 'O' { Token::Over { id, sign } } else { Token::Under { id, sign } })
        }
        'V' => Ok(Token::Virtual { id: parse_id(rest)? }),
        _ => Err(bad()),
    }
}

impl fmt::Display for KnotoidDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.code())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_forms() {
        for code in ["", "-", "  "] {
            let d = KnotoidDiagram::parse_code("t", code).unwrap();
            assert_eq!(d.classical_count(), 0);
            assert_eq!(d.virtual_count(), 0);
            assert_eq!(d.semi_arc_count(), 1);
            assert_eq!(d.head(), d.tail());
            assert_eq!(d.writhe(), 0);
            assert!(d.relations().is_empty());
        }
    }

    #[test]
    fn kink() {
        let d = KnotoidDiagram::parse_code("k", "O+1,U+1").unwrap();
        assert_eq!(d.classical_count(), 1);
        assert_eq!(d.semi_arc_count(), 3);
        assert_eq!(d.writhe(), 1);
        let c = d.crossings()[0];
        assert_eq!((c.over_in, c.over_out, c.under_in, c.under_out), (0, 1, 1, 2));
    }

    #[test]
    fn virtual_passes_do_not_split() {
        let d = KnotoidDiagram::parse_code("v", "V1,O-1,V1,U-1").unwrap();
        assert_eq!(d.semi_arc_count(), 3);
        assert_eq!(d.virtual_count(), 1);
        assert_eq!(d.writhe(), -1);
    }

    #[test]
    fn errors() {
        assert!(matches!(KnotoidDiagram::parse_code("e", "O+1"), Err(DiagramError::Pairing(_))));
        assert!(matches!(KnotoidDiagram::parse_code("e", "O+1,O+1"), Err(DiagramError::Pairing(_))));
        assert!(matches!(KnotoidDiagram::parse_code("e", "O+1,U-1"), Err(DiagramError::Sign(1))));
        assert!(matches!(KnotoidDiagram::parse_code("e", "V1"), Err(DiagramError::Pairing(_))));
        assert!(matches!(KnotoidDiagram::parse_code("e", "V1,V1,V1"), Err(DiagramError::Pairing(_))));
        assert!(matches!(KnotoidDiagram::parse_code("e", "X+1,U+1"), Err(DiagramError::Syntax(_))));
        assert!(matches!(KnotoidDiagram::parse_code("e", "O1,U1"), Err(DiagramError::Syntax(_))));
        assert!(matches!(KnotoidDiagram::parse_code("e", "O+,U+"), Err(DiagramError::Syntax(_))));
        assert!(matches!(KnotoidDiagram::parse_code("e", "O+1,,U+1"), Err(DiagramError::Syntax(_))));
        assert!(matches!(KnotoidDiagram::parse(""), Err(DiagramError::Syntax(_))));
        assert!(matches!(KnotoidDiagram::parse("name a\n"), Err(DiagramError::Syntax(_))));
        assert!(matches!(KnotoidDiagram::parse("name a b\ncode -"), Err(DiagramError::Syntax(_))));
        assert!(matches!(KnotoidDiagram::parse("name a\ncode"), Err(DiagramError::Syntax(_))));
    }

    #[test]
    fn file_round_trip() {
        let text = "name 2.1.1\ncode O-1, U-2 ,U-1,O-2\n";
        let d = KnotoidDiagram::parse(text).unwrap();
        assert_eq!(d.name(), "2.1.1");
        assert_eq!(d.render(), "name 2.1.1\ncode O-1,U-2,U-1,O-2\n");
        assert_eq!(KnotoidDiagram::parse(&d.render()).unwrap(), d);
        let t = KnotoidDiagram::parse("# c\nname unknot\ncode -\n").unwrap();
        assert_eq!(t.classical_count(), 0);
    }

    #[test]
    fn four_relation_presentation() {
        // semi-arcs 0..4 play the roles of a..e
        let d = KnotoidDiagram::parse_code("f", "O+1,U-2,U+1,O-2").unwrap();
        let rels: Vec<String> = d.presentation().relations.iter().map(|r| r.to_string()).collect();
        assert_eq!(rels, ["a3 ▷̲ a2 = a4", "a2 ▷̄ a3 = a1", "a3 ▷̲ a4 = a2", "a4 ▷̄ a3 = a5"]);
    }

    #[test]
    fn product_basics() {
        let a = KnotoidDiagram::parse_code("a", "O-1,U-2,U-1,O-2").unwrap();
        let t = KnotoidDiagram::trivial();
        assert_eq!(t.product(&a).tokens(), a.tokens());
        assert_eq!(a.product(&t).tokens(), a.tokens());
        let aa = a.product(&a);
        assert_eq!(aa.classical_count(), 4);
        assert_eq!(aa.writhe(), -4);
        assert_eq!(aa.code(), "O-1,U-2,U-1,O-2,O-3,U-4,U-3,O-4");
    }
}
