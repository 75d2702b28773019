use std::fmt;

use num_bigint::BigInt;

use super::diagnostic::{Diagnostic, DiagnosticKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(BigInt),
    /// `p/q` written without spaces.
    Rational(BigInt, BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Eq,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "identifier `{s}`"),
            TokenKind::Int(n) => write!(f, "number `{n}`"),
            TokenKind::Rational(p, q) => write!(f, "number `{p}/{q}`"),
            TokenKind::Plus => f.write_str("`+`"),
            TokenKind::Minus => f.write_str("`-`"),
            TokenKind::Star => f.write_str("`*`"),
            TokenKind::Caret => f.write_str("`^`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::LBracket => f.write_str("`[`"),
            TokenKind::RBracket => f.write_str("`]`"),
            TokenKind::LBrace => f.write_str("`{`"),
            TokenKind::RBrace => f.write_str("`}`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::Semi => f.write_str("`;`"),
            TokenKind::Eq => f.write_str("`=`"),
            TokenKind::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

/// Splits `src` into tokens. `//` starts a comment running to end of line.
pub fn tokenize(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let lexical = |line, col, msg: String| Diagnostic::new(DiagnosticKind::Lexical, line, col, msg);

    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let single = match c {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            '[' => Some(TokenKind::LBracket),
            ']' => Some(TokenKind::RBracket),
            '{' => Some(TokenKind::LBrace),
            '}' => Some(TokenKind::RBrace),
            ',' => Some(TokenKind::Comma),
            ';' => Some(TokenKind::Semi),
            '=' => Some(TokenKind::Eq),
            _ => None,
        };
        if let Some(kind) = single {
            out.push(Token { kind, line: tl, col: tc });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: String = chars[start..i].iter().collect();
            let p: BigInt = num.parse().expect("digits");
            if chars.get(i) == Some(&'/') && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
                let s2 = i + 1;
                let mut j = s2;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let den: String = chars[s2..j].iter().collect();
                let q: BigInt = den.parse().expect("digits");
                if q == BigInt::from(0) {
                    return Err(lexical(tl, tc, format!("zero denominator in `{num}/{den}`")));
                }
                col += j - start;
                i = j;
                out.push(Token {
                    kind: TokenKind::Rational(p, q),
                    line: tl,
                    col: tc,
                });
            } else {
                col += i - start;
                out.push(Token {
                    kind: TokenKind::Int(p),
                    line: tl,
                    col: tc,
                });
            }
            if i < chars.len() && (chars[i].is_alphabetic() || chars[i] == '_') {
                return Err(lexical(line, col, "identifier directly after a number; write `2*x`".into()));
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                kind: TokenKind::Ident(chars[start..i].iter().collect()),
                line: tl,
                col: tc,
            });
            continue;
        }
        if c == '#' {
            return Err(lexical(tl, tc, "`#` names are reserved for internal variables".into()));
        }
        return Err(lexical(tl, tc, format!("unexpected character {c:?}")));
    }
    out.push(Token {
        kind: TokenKind::Eof,
        line,
        col,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(s: &str) -> Vec<TokenKind> {
        tokenize(s).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn rationals_and_operators() {
        assert_eq!(
            kinds("-1/2*x^3"),
            [
                TokenKind::Minus,
                TokenKind::Rational(1.into(), 2.into()),
                TokenKind::Star,
                TokenKind::Ident("x".into()),
                TokenKind::Caret,
                TokenKind::Int(3.into()),
                TokenKind::Eof
            ]
        );
        assert_eq!(kinds("// note\n;").len(), 2);
    }

    #[test]
    fn positions_and_errors() {
        let t = tokenize("ring\n  R").unwrap();
        assert_eq!((t[1].line, t[1].col), (2, 3));
        let e = tokenize("x + #0").unwrap_err();
        assert_eq!((e.kind, e.line, e.col), (DiagnosticKind::Lexical, 1, 5));
        assert!(tokenize("1/0").is_err());
        assert!(tokenize("2x").is_err());
        assert!(tokenize("x $ y").is_err());
    }
}
