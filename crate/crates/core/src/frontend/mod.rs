//! The `reeskit` scripting language.
//!
//! A script is a list of `;`-terminated statements:
//!
//! ```text
//! ring R = Q[x,y,t] order grevlex;
//! ideal I = (x^2, y, t);
//! fiber((x^2, y));
//! poly f = nf(x^3 + y, I);
//! set smax = 4;
//! ```
//!
//! [`parse`] turns text into a [`Script`], [`execute`] evaluates it into a
//! [`ResultDocument`], and [`render`] prints that as text or JSON.

mod ast;
mod diagnostic;
mod eval;
mod interp;
mod lexer;
mod parser;
mod render;

pub use ast::{Arg, ArgSpec, BindValue, Call, Command, Output, PolyExpr, Script, SetOption, Statement, StatementKind, ValueKind};
pub use diagnostic::{Diagnostic, DiagnosticKind};
pub use eval::eval_poly;
pub use interp::{execute, Entry, ExecOptions, Feed, Interpreter, ResultDocument, Session, Value};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_polynomial, parse_with, ParseOptions, Parser, MAX_EXPONENT};
pub use render::{render, render_text, to_json, value_json, value_text, Format, SCHEMA_VERSION};
