//! The expression mini-language.
//!
//! ```text
//! expr := term { "*" term }
//! term := "v(" word ")"                  a generator
//!       | "adj(" expr ")"                the adjoint
//!       | "[" word "," word "," word "]" a triple literal
//!       | "e(" word ";" word ")"         a constructible idempotent
//!       | "0"                            zero
//! word := letters, or "(w,g)" with g an integer exponent
//! ```
//!
//! Words are parsed by the active instance, so the same grammar covers
//! free, grid and self-similar elements. Evaluation lands in a triple or a
//! constructible set; a set entering a product is promoted to its
//! idempotent triple.

use lcmisg::constructible::{cs_fmt, cs_intersect, ConstructibleSet};
use lcmisg::error::Error;
use lcmisg::isg::{self, Triple};
use lcmisg::monoid::LcmMonoid;

pub enum Value<E> {
    Triple(Triple<E>),
    Set(ConstructibleSet<E>),
}

impl<E: Clone> Value<E> {
    pub fn fmt<M: LcmMonoid<Elem = E>>(&self, m: &M) -> String {
        match self {
            Value::Triple(t) => isg::fmt_triple(m, t),
            Value::Set(s) => cs_fmt(m, s),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

enum Ast {
    Gen(String),
    Adj(Box<Ast>),
    Literal(String, String, String),
    Idem(String, String),
    Zero,
    Product(Vec<Ast>),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), Error> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected {tok:?}")))
        }
    }

    /// A word: either a parenthesized pair "(w,g)" or a run of letters,
    /// ending before the given stop characters.
    fn word(&mut self, stops: &[char]) -> Result<String, Error> {
        self.skip_ws();
        let start = self.pos;
        if self.rest().starts_with('(') {
            let mut depth = 0usize;
            for c in self.rest().chars() {
                self.pos += c.len_utf8();
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            return Ok(self.src[start..self.pos].to_string());
                        }
                    }
                    _ => {}
                }
            }
            return Err(self.error("unbalanced parenthesis in word"));
        }
        while let Some(c) = self.rest().chars().next() {
            if stops.contains(&c) || c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn term(&mut self) -> Result<Ast, Error> {
        self.skip_ws();
        if self.eat("v(") {
            let w = self.word(&[')'])?;
            self.expect(")")?;
            Ok(Ast::Gen(w))
        } else if self.eat("adj(") {
            let inner = self.expr()?;
            self.expect(")")?;
            Ok(Ast::Adj(Box::new(inner)))
        } else if self.eat("[") {
            let p = self.word(&[','])?;
            self.expect(",")?;
            let q = self.word(&[','])?;
            self.expect(",")?;
            let r = self.word(&[']'])?;
            self.expect("]")?;
            Ok(Ast::Literal(p, q, r))
        } else if self.eat("e(") {
            let p = self.word(&[';'])?;
            self.expect(";")?;
            let q = self.word(&[')'])?;
            self.expect(")")?;
            Ok(Ast::Idem(p, q))
        } else if self.eat("0") {
            Ok(Ast::Zero)
        } else {
            Err(self.error("expected v(...), adj(...), [p,q,r], e(p;q) or 0"))
        }
    }

    fn expr(&mut self) -> Result<Ast, Error> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.eat("*") {
                terms.push(self.term()?);
            } else {
                break;
            }
        }
        if terms.len() == 1 {
            Ok(terms.pop().unwrap())
        } else {
            Ok(Ast::Product(terms))
        }
    }
}

fn eval_ast<M: LcmMonoid>(m: &M, ast: &Ast) -> Result<Value<M::Elem>, Error> {
    match ast {
        Ast::Gen(w) => {
            let e = m.parse_elem(w)?;
            Ok(Value::Triple(isg::generator(m, e)))
        }
        Ast::Zero => Ok(Value::Triple(Triple::Zero)),
        Ast::Literal(p, q, r) => {
            let (p, q, r) = (m.parse_elem(p)?, m.parse_elem(q)?, m.parse_elem(r)?);
            Ok(Value::Triple(isg::make_triple(m, p, q, r)?))
        }
        Ast::Idem(p, q) => {
            let (p, q) = (m.parse_elem(p)?, m.parse_elem(q)?);
            Ok(Value::Set(ConstructibleSet::new(m, &p, &q)))
        }
        Ast::Adj(inner) => match eval_ast(m, inner)? {
            // constructible sets are projections, hence self-adjoint
            Value::Set(s) => Ok(Value::Set(s)),
            Value::Triple(t) => Ok(Value::Triple(isg::star(&t))),
        },
        Ast::Product(terms) => {
            let mut vals = terms.iter().map(|t| eval_ast(m, t));
            let mut acc = vals.next().unwrap()?;
            for v in vals {
                acc = value_mul(m, acc, v?)?;
            }
            Ok(acc)
        }
    }
}

/// Promote a constructible set to its idempotent triple `[p, qp, q]`.
fn set_to_triple<M: LcmMonoid>(
    m: &M,
    s: &ConstructibleSet<M::Elem>,
) -> Result<Triple<M::Elem>, Error> {
    match s {
        ConstructibleSet::Empty => Ok(Triple::Zero),
        ConstructibleSet::Span { p, q } => {
            isg::make_triple(m, p.clone(), m.mul(q, p), q.clone())
        }
    }
}

fn value_mul<M: LcmMonoid>(
    m: &M,
    a: Value<M::Elem>,
    b: Value<M::Elem>,
) -> Result<Value<M::Elem>, Error> {
    match (a, b) {
        (Value::Set(x), Value::Set(y)) => Ok(Value::Set(cs_intersect(m, &x, &y)?)),
        (x, y) => {
            let x = match x {
                Value::Triple(t) => t,
                Value::Set(s) => set_to_triple(m, &s)?,
            };
            let y = match y {
                Value::Triple(t) => t,
                Value::Set(s) => set_to_triple(m, &s)?,
            };
            Ok(Value::Triple(isg::product(m, &x, &y)?))
        }
    }
}

pub fn eval_expr<M: LcmMonoid>(m: &M, src: &str) -> Result<Value<M::Elem>, Error> {
    let mut p = Parser::new(src);
    let ast = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.error("trailing input"));
    }
    eval_ast(m, &ast)
}
