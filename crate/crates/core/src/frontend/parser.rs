use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::ast::*;
use super::diagnostic::{Diagnostic, DiagnosticKind};
use super::eval::eval_poly;
use super::lexer::{tokenize, Token, TokenKind};
use crate::limits::Limits;
use crate::poly::{MonomialOrder, Polynomial, RingContext};

/// Largest exponent literal accepted by the parser.
pub const MAX_EXPONENT: u32 = 10_000;
const MAX_DEPTH: usize = 200;

const STATEMENT_START: &[&str] = &["`ring`", "`use`", "`poly`", "`ideal`", "`matrix`", "`module`", "`set`", "a command"];

#[derive(Clone, Debug)]
pub struct ParseOptions {
    /// Order for `ring` declarations without an `order` clause.
    pub default_order: MonomialOrder,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            default_order: MonomialOrder::GrevLex,
        }
    }
}

#[derive(Clone, Debug)]
enum Symbol {
    Ring(RingContext),
    Value(ValueKind, RingContext),
}

/// Unresolved polynomial syntax with name positions.
#[derive(Clone, Debug)]
enum Raw {
    Num(BigRational),
    Name(String, usize, usize),
    Add(Box<Raw>, Box<Raw>),
    Sub(Box<Raw>, Box<Raw>),
    Mul(Box<Raw>, Box<Raw>),
    Neg(Box<Raw>),
    Pow(Box<Raw>, u32),
}

#[derive(Clone, Debug)]
enum RawArg {
    Poly(Raw),
    IdealLit(Vec<Raw>),
    MatrixLit(Vec<Vec<Raw>>),
    Ref(String),
    Int(i64),
    Vars(Vec<(String, usize, usize)>),
    Name(String),
}

/// Incremental parser: names and the active ring persist across calls to
/// [`Parser::parse`], which is what the REPL relies on.
#[derive(Clone, Debug, Default)]
pub struct Parser {
    options: ParseOptions,
    symbols: HashMap<String, Symbol>,
    active: Option<RingContext>,
}

struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
    depth: usize,
}

fn syntax(tok: &Token, expected: &[&str]) -> Diagnostic {
    let mut d = Diagnostic::new(DiagnosticKind::Syntax, tok.line, tok.col, format!("unexpected {}", tok.kind));
    d.expected = expected.iter().map(|s| s.to_string()).collect();
    d
}

impl Cursor {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, k: usize) -> &TokenKind {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)].kind
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if &self.peek().kind == kind {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> Result<Token, Diagnostic> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(syntax(self.peek(), &[&kind.to_string()]))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize), Diagnostic> {
        match &self.peek().kind {
            TokenKind::Ident(s) => {
                let s = s.clone();
                let t = self.bump();
                Ok((s, t.line, t.col))
            }
            _ => Err(syntax(self.peek(), &[what])),
        }
    }

    fn enter(&mut self) -> Result<(), Diagnostic> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            let t = self.peek();
            return Err(Diagnostic::new(
                DiagnosticKind::Syntax,
                t.line,
                t.col,
                "expression nested too deeply".into(),
            ));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Raw, Diagnostic> {
        self.enter()?;
        let mut acc = self.term()?;
        loop {
            if self.eat(&TokenKind::Plus) {
                acc = Raw::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(&TokenKind::Minus) {
                acc = Raw::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Raw, Diagnostic> {
        let mut acc = self.unary()?;
        while self.eat(&TokenKind::Star) {
            acc = Raw::Mul(Box::new(acc), Box::new(self.unary()?));
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Raw, Diagnostic> {
        if self.eat(&TokenKind::Minus) {
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Raw::Neg(Box::new(inner)));
        }
        let base = self.atom()?;
        if self.eat(&TokenKind::Caret) {
            let t = self.peek().clone();
            match &t.kind {
                TokenKind::Int(n) => {
                    self.bump();
                    let e = n.to_u32().filter(|&e| e <= MAX_EXPONENT).ok_or_else(|| {
                        Diagnostic::new(
                            DiagnosticKind::Invalid,
                            t.line,
                            t.col,
                            format!("exponent {n} exceeds {MAX_EXPONENT}"),
                        )
                    })?;
                    return Ok(Raw::Pow(Box::new(base), e));
                }
                _ => return Err(syntax(&t, &["an exponent"])),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Raw, Diagnostic> {
        let t = self.peek().clone();
        match t.kind {
            TokenKind::Int(n) => {
                self.bump();
                Ok(Raw::Num(BigRational::from_integer(n)))
            }
            TokenKind::Rational(p, q) => {
                self.bump();
                Ok(Raw::Num(BigRational::new(p, q)))
            }
            TokenKind::Ident(s) => {
                self.bump();
                Ok(Raw::Name(s, t.line, t.col))
            }
            TokenKind::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(TokenKind::RParen)?;
                Ok(e)
            }
            _ => Err(syntax(&t, &["a number", "an identifier", "`(`", "`-`"])),
        }
    }

    fn int(&mut self) -> Result<i64, Diagnostic> {
        let neg = self.eat(&TokenKind::Minus);
        let t = self.peek().clone();
        match &t.kind {
            TokenKind::Int(n) => {
                self.bump();
                let v: BigInt = if neg { -n.clone() } else { n.clone() };
                v.to_i64().ok_or_else(|| {
                    Diagnostic::new(DiagnosticKind::Invalid, t.line, t.col, format!("integer {v} out of range"))
                })
            }
            _ => Err(syntax(&t, &["an integer"])),
        }
    }

    fn list<T>(&mut self, close: TokenKind, mut item: impl FnMut(&mut Cursor) -> Result<T, Diagnostic>) -> Result<Vec<T>, Diagnostic> {
        let mut out = Vec::new();
        if self.eat(&close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(&TokenKind::Comma) {
                continue;
            }
            if self.eat(&close) {
                return Ok(out);
            }
            return Err(syntax(self.peek(), &["`,`", &close.to_string()]));
        }
    }

    fn matrix_lit(&mut self) -> Result<Vec<Vec<Raw>>, Diagnostic> {
        let open = self.expect(TokenKind::LBracket)?;
        let rows = self.list(TokenKind::RBracket, |c| {
            c.expect(TokenKind::LBracket)?;
            c.list(TokenKind::RBracket, |c| c.expr())
        })?;
        let width = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != width) {
            return Err(Diagnostic::new(
                DiagnosticKind::Invalid,
                open.line,
                open.col,
                "matrix rows have different lengths".into(),
            ));
        }
        Ok(rows)
    }
}

fn invalid(line: usize, col: usize, msg: String) -> Diagnostic {
    Diagnostic::new(DiagnosticKind::Invalid, line, col, msg)
}

impl Parser {
    pub fn new(options: ParseOptions) -> Self {
        Parser {
            options,
            symbols: HashMap::new(),
            active: None,
        }
    }

    pub fn active_ring(&self) -> Option<&RingContext> {
        self.active.as_ref()
    }

    /// Parses a chunk of statements. On failure the parser state is left as
    /// it was before the call.
    pub fn parse(&mut self, text: &str) -> Result<Script, Diagnostic> {
        let saved = (self.symbols.clone(), self.active.clone());
        let res = self.parse_inner(text);
        if res.is_err() {
            (self.symbols, self.active) = saved;
        }
        res
    }

    fn parse_inner(&mut self, text: &str) -> Result<Script, Diagnostic> {
        let mut c = Cursor {
            tokens: tokenize(text)?,
            pos: 0,
            depth: 0,
        };
        let mut statements = Vec::new();
        while c.peek().kind != TokenKind::Eof {
            statements.push(self.statement(&mut c)?);
        }
        Ok(Script { statements })
    }

    fn statement(&mut self, c: &mut Cursor) -> Result<Statement, Diagnostic> {
        let start = c.peek().clone();
        let head = match &start.kind {
            TokenKind::Ident(s) => s.clone(),
            _ => return Err(syntax(&start, STATEMENT_START)),
        };
        let kind = match head.as_str() {
            "ring" => {
                c.bump();
                self.ring_decl(c)?
            }
            "use" => {
                c.bump();
                let (name, l, col) = c.ident("a ring name")?;
                let ring = match self.symbols.get(&name) {
                    Some(Symbol::Ring(r)) => r.clone(),
                    Some(_) => return Err(invalid(l, col, format!("`{name}` is not a ring"))),
                    None => {
                        return Err(Diagnostic::new(
                            DiagnosticKind::UnboundIdentifier,
                            l,
                            col,
                            format!("unknown ring `{name}`"),
                        ))
                    }
                };
                self.active = Some(ring.clone());
                StatementKind::Use { name, ring }
            }
            "poly" | "ideal" | "matrix" | "module" => {
                c.bump();
                let kind = match head.as_str() {
                    "poly" => ValueKind::Poly,
                    "ideal" => ValueKind::Ideal,
                    "matrix" => ValueKind::Matrix,
                    _ => ValueKind::Module,
                };
                self.binding(c, kind, &start)?
            }
            "set" => {
                c.bump();
                let (opt, l, col) = c.ident("an option name")?;
                let option = match opt.as_str() {
                    "maxdeg" => SetOption::MaxDegree,
                    "maxpairs" => SetOption::MaxPairs,
                    "satbound" => SetOption::SatBound,
                    "smax" => SetOption::SMax,
                    _ => {
                        let mut d = invalid(l, col, format!("unknown option `{opt}`"));
                        d.expected = ["`maxdeg`", "`maxpairs`", "`satbound`", "`smax`"].map(String::from).to_vec();
                        return Err(d);
                    }
                };
                c.expect(TokenKind::Eq)?;
                let t = c.peek().clone();
                let v = c.int()?;
                let value = u64::try_from(v).map_err(|_| invalid(t.line, t.col, "option values are nonnegative".into()))?;
                StatementKind::Set { option, value }
            }
            _ => {
                if Command::from_name(&head).is_none() || c.peek_at(1) != &TokenKind::LParen {
                    if c.peek_at(1) == &TokenKind::LParen {
                        let mut d = Diagnostic::new(
                            DiagnosticKind::UnboundIdentifier,
                            start.line,
                            start.col,
                            format!("unknown command `{head}`"),
                        );
                        d.expected = Command::ALL.iter().map(|k| format!("`{}`", k.name())).collect();
                        return Err(d);
                    }
                    return Err(syntax(&start, STATEMENT_START));
                }
                StatementKind::Command(self.call(c)?)
            }
        };
        c.expect(TokenKind::Semi)?;
        Ok(Statement {
            line: start.line,
            col: start.col,
            kind,
        })
    }

    fn ring_decl(&mut self, c: &mut Cursor) -> Result<StatementKind, Diagnostic> {
        let (name, _, _) = c.ident("a ring name")?;
        c.expect(TokenKind::Eq)?;
        let (field, l, col) = c.ident("`Q`")?;
        if field != "Q" && field != "QQ" {
            let mut d = invalid(l, col, format!("unsupported coefficient field `{field}`"));
            d.expected = vec!["`Q`".into()];
            return Err(d);
        }
        c.expect(TokenKind::LBracket)?;
        let vars = c.list(TokenKind::RBracket, |c| c.ident("a variable name"))?;
        let mut names: Vec<String> = Vec::new();
        for (v, l, col) in &vars {
            if names.contains(v) {
                return Err(invalid(*l, *col, format!("variable `{v}` declared twice")));
            }
            names.push(v.clone());
        }
        let mut order = self.options.default_order.clone();
        if let TokenKind::Ident(s) = &c.peek().kind {
            if s == "order" {
                c.bump();
                let (o, l, col) = c.ident("`lex` or `grevlex`")?;
                order = match o.as_str() {
                    "lex" => MonomialOrder::Lex,
                    "grevlex" => MonomialOrder::GrevLex,
                    _ => {
                        let mut d = invalid(l, col, format!("unknown order `{o}`"));
                        d.expected = vec!["`lex`".into(), "`grevlex`".into()];
                        return Err(d);
                    }
                };
            }
        }
        let ring = RingContext::new(names, order).map_err(|e| invalid(c.peek().line, c.peek().col, e.to_string()))?;
        self.symbols.insert(name.clone(), Symbol::Ring(ring.clone()));
        self.active = Some(ring.clone());
        Ok(StatementKind::Ring { name, ring })
    }

    fn binding(&mut self, c: &mut Cursor, kind: ValueKind, start: &Token) -> Result<StatementKind, Diagnostic> {
        let (name, _, _) = c.ident("a name")?;
        c.expect(TokenKind::Eq)?;
        let t = c.peek().clone();
        let is_call = matches!(&t.kind, TokenKind::Ident(s) if Command::from_name(s).is_some())
            && c.peek_at(1) == &TokenKind::LParen;
        let (ring, value) = if is_call {
            let call = self.call(c)?;
            let ring = match call.command.output() {
                Output::Value(k) if k == kind => call.ring.clone().expect("ring-carrying command"),
                Output::Eliminated if kind == ValueKind::Ideal => {
                    let ring = call.ring.clone().expect("ring-carrying command");
                    let vars = match &call.args[1] {
                        Arg::Vars(v) => v.clone(),
                        _ => unreachable!("eliminate takes a variable set"),
                    };
                    ring.without_vars(&vars).map_err(|e| invalid(t.line, t.col, e.to_string()))?
                }
                Output::Report => {
                    return Err(invalid(
                        t.line,
                        t.col,
                        format!("`{}` produces a report and cannot be bound", call.command.name()),
                    ))
                }
                _ => {
                    return Err(invalid(
                        t.line,
                        t.col,
                        format!("`{}` does not produce a {}", call.command.name(), kind.name()),
                    ))
                }
            };
            (ring, BindValue::Call(call))
        } else {
            let spec = match kind {
                ValueKind::Poly => ArgSpec::Poly,
                ValueKind::Ideal => ArgSpec::Ideal,
                ValueKind::Matrix => ArgSpec::Matrix,
                ValueKind::Module => ArgSpec::Module,
            };
            let raw = self.raw_arg(c, spec)?;
            let ring = match &raw {
                RawArg::Ref(n) => self.value_ring(n, kind, t.line, t.col)?,
                _ => self.active.clone().ok_or_else(|| {
                    Diagnostic::new(
                        DiagnosticKind::UnboundRing,
                        start.line,
                        start.col,
                        "no ring declared before this binding".into(),
                    )
                })?,
            };
            let arg = self.resolve_arg(raw, &ring)?;
            (ring, BindValue::Literal(arg))
        };
        self.symbols.insert(name.clone(), Symbol::Value(kind, ring.clone()));
        Ok(StatementKind::Bind { kind, name, ring, value })
    }

    fn value_ring(&self, name: &str, kind: ValueKind, line: usize, col: usize) -> Result<RingContext, Diagnostic> {
        match self.symbols.get(name) {
            Some(Symbol::Value(k, r)) if *k == kind => Ok(r.clone()),
            Some(Symbol::Value(k, _)) => Err(invalid(
                line,
                col,
                format!("`{name}` is a {}, expected a {}", k.name(), kind.name()),
            )),
            Some(Symbol::Ring(_)) => Err(invalid(line, col, format!("`{name}` is a ring, expected a {}", kind.name()))),
            None => Err(Diagnostic::new(
                DiagnosticKind::UnboundIdentifier,
                line,
                col,
                format!("unknown {} `{name}`", kind.name()),
            )),
        }
    }

    fn raw_arg(&self, c: &mut Cursor, spec: ArgSpec) -> Result<RawArg, Diagnostic> {
        let is_ref = matches!(c.peek().kind, TokenKind::Ident(_));
        Ok(match spec {
            ArgSpec::Poly => RawArg::Poly(c.expr()?),
            ArgSpec::Ideal if !is_ref => {
                c.expect(TokenKind::LParen)
                    .map_err(|_| syntax(c.peek(), &["`(`", "an ideal name"]))?;
                RawArg::IdealLit(c.list(TokenKind::RParen, |c| c.expr())?)
            }
            ArgSpec::Matrix if !is_ref => {
                if c.peek().kind != TokenKind::LBracket {
                    return Err(syntax(c.peek(), &["`[`", "a matrix name"]));
                }
                RawArg::MatrixLit(c.matrix_lit()?)
            }
            ArgSpec::Ideal | ArgSpec::Matrix | ArgSpec::Module => RawArg::Ref(c.ident("a name")?.0),
            ArgSpec::Int => RawArg::Int(c.int()?),
            ArgSpec::Vars => {
                c.expect(TokenKind::LBrace)?;
                RawArg::Vars(c.list(TokenKind::RBrace, |c| c.ident("a variable name"))?)
            }
            ArgSpec::Name => RawArg::Name(c.ident("a variable name")?.0),
        })
    }

    fn call(&mut self, c: &mut Cursor) -> Result<Call, Diagnostic> {
        let (name, line, col) = c.ident("a command")?;
        let command = Command::from_name(&name).expect("checked by caller");
        c.expect(TokenKind::LParen)?;
        let mut raws: Vec<(ArgSpec, RawArg, usize, usize)> = Vec::new();
        for (k, spec) in command.required().iter().enumerate() {
            if k > 0 {
                c.expect(TokenKind::Comma)?;
            }
            let t = c.peek().clone();
            raws.push((*spec, self.raw_arg(c, *spec)?, t.line, t.col));
        }
        for spec in command.optional() {
            if !c.eat(&TokenKind::Comma) {
                break;
            }
            let t = c.peek().clone();
            raws.push((*spec, self.raw_arg(c, *spec)?, t.line, t.col));
        }
        if c.peek().kind != TokenKind::RParen {
            let mut expected = vec!["`)`"];
            if raws.len() < command.required().len() + command.optional().len() {
                expected.insert(0, "`,`");
            }
            return Err(syntax(c.peek(), &expected));
        }
        c.bump();

        let mut ring: Option<RingContext> = None;
        for (spec, raw, l, col) in &raws {
            if let RawArg::Ref(n) = raw {
                let kind = match spec {
                    ArgSpec::Ideal => ValueKind::Ideal,
                    ArgSpec::Matrix => ValueKind::Matrix,
                    _ => ValueKind::Module,
                };
                let r = self.value_ring(n, kind, *l, *col)?;
                match &ring {
                    None => ring = Some(r),
                    Some(first) if *first != r => {
                        return Err(Diagnostic::new(
                            DiagnosticKind::RingMismatch,
                            *l,
                            *col,
                            format!("`{n}` lives in {r}, other arguments in {first}"),
                        ))
                    }
                    _ => {}
                }
            }
        }
        if command.needs_ring() {
            ring = ring.or_else(|| self.active.clone());
            if ring.is_none() {
                return Err(Diagnostic::new(
                    DiagnosticKind::UnboundRing,
                    line,
                    col,
                    format!("`{name}` needs a ring, and none is declared"),
                ));
            }
        } else {
            ring = None;
        }
        let mut args = Vec::with_capacity(raws.len());
        for (_, raw, _, _) in raws {
            args.push(match &ring {
                Some(r) => self.resolve_arg(raw, r)?,
                None => match raw {
                    RawArg::Int(v) => Arg::Int(v),
                    RawArg::Name(n) => Arg::Name(n),
                    _ => unreachable!("ring-free commands take integers and names"),
                },
            });
        }
        Ok(Call {
            command,
            args,
            ring,
            line,
            col,
        })
    }

    fn resolve_arg(&self, raw: RawArg, ring: &RingContext) -> Result<Arg, Diagnostic> {
        Ok(match raw {
            RawArg::Poly(p) => Arg::Poly(self.resolve(p, ring)?),
            RawArg::IdealLit(gens) => Arg::IdealLit(gens.into_iter().map(|g| self.resolve(g, ring)).collect::<Result<_, _>>()?),
            RawArg::MatrixLit(rows) => Arg::MatrixLit(
                rows.into_iter()
                    .map(|r| r.into_iter().map(|e| self.resolve(e, ring)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<_, _>>()?,
            ),
            RawArg::Ref(n) => Arg::Ref(n),
            RawArg::Int(v) => Arg::Int(v),
            RawArg::Vars(vs) => {
                for (v, l, col) in &vs {
                    if ring.var_index(v).is_none() {
                        return Err(Diagnostic::new(
                            DiagnosticKind::UnboundIdentifier,
                            *l,
                            *col,
                            format!("`{v}` is not a variable of {ring}"),
                        ));
                    }
                }
                Arg::Vars(vs.into_iter().map(|(v, _, _)| v).collect())
            }
            RawArg::Name(n) => Arg::Name(n),
        })
    }

    fn resolve(&self, raw: Raw, ring: &RingContext) -> Result<PolyExpr, Diagnostic> {
        resolve_with(raw, ring, &|name, l, col| match self.symbols.get(name) {
            Some(Symbol::Value(ValueKind::Poly, r)) if r == ring => Ok(PolyExpr::Ref(name.to_string())),
            Some(Symbol::Value(ValueKind::Poly, r)) => Err(Diagnostic::new(
                DiagnosticKind::RingMismatch,
                l,
                col,
                format!("`{name}` lives in {r}, the expression in {ring}"),
            )),
            _ => Err(Diagnostic::new(
                DiagnosticKind::UnboundIdentifier,
                l,
                col,
                format!("`{name}` is neither a variable of {ring} nor a bound poly"),
            )),
        })
    }
}

fn resolve_with(
    raw: Raw,
    ring: &RingContext,
    other: &dyn Fn(&str, usize, usize) -> Result<PolyExpr, Diagnostic>,
) -> Result<PolyExpr, Diagnostic> {
    let go = |r: Raw| resolve_with(r, ring, other).map(Box::new);
    Ok(match raw {
        Raw::Num(q) => PolyExpr::Const(q),
        Raw::Name(n, l, col) => {
            if ring.var_index(&n).is_some() {
                PolyExpr::Var(n)
            } else {
                other(&n, l, col)?
            }
        }
        Raw::Add(a, b) => PolyExpr::Add(go(*a)?, go(*b)?),
        Raw::Sub(a, b) => PolyExpr::Sub(go(*a)?, go(*b)?),
        Raw::Mul(a, b) => PolyExpr::Mul(go(*a)?, go(*b)?),
        Raw::Neg(a) => PolyExpr::Neg(go(*a)?),
        Raw::Pow(a, e) => PolyExpr::Pow(go(*a)?, e),
    })
}

/// Parses a script with default options and an empty environment.
pub fn parse(text: &str) -> Result<Script, Diagnostic> {
    Parser::default().parse(text)
}

pub fn parse_with(text: &str, options: ParseOptions) -> Result<Script, Diagnostic> {
    Parser::new(options).parse(text)
}

/// Parses a single polynomial over `ring`; only ring variables may appear.
pub fn parse_polynomial(text: &str, ring: &RingContext) -> Result<Polynomial, Diagnostic> {
    let mut c = Cursor {
        tokens: tokenize(text)?,
        pos: 0,
        depth: 0,
    };
    let raw = c.expr()?;
    if c.peek().kind != TokenKind::Eof {
        return Err(syntax(c.peek(), &["an operator", "end of input"]));
    }
    let expr = resolve_with(raw, ring, &|name, l, col| {
        Err(Diagnostic::new(
            DiagnosticKind::UnboundIdentifier,
            l,
            col,
            format!("`{name}` is not a variable of {ring}"),
        ))
    })?;
    eval_poly(&expr, ring, &|_| None, &Limits::default()).map_err(|e| invalid(1, 1, e.to_string()))
}
