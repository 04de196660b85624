//! A tiny expression language for right-hand sides, reparametrization maps,
//! and scalar configuration values.
//!
//! Grammar (EBNF):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := unary ('^' factor)?          // '^' is right-associative
//! unary  := '-' unary | atom
//! atom   := number | 't' | 'z' | ident '(' expr ')' | '(' expr ')'
//! ```
//!
//! Numbers are decimal literals with an optional fractional part and an
//! optional exponent (`1.5e-3`); no hex, no underscores. Recognized call
//! identifiers are `sin`, `cos`, `exp`, `ln`, `abs`, `sqrt`, `sigmoid`, and
//! `gamma`; `gamma` accepts only a constant subexpression and is folded at
//! parse time. Note the grammar gives unary minus lower binding than `^`:
//! `-t^2` parses as `(-t)^2`.
//!
//! Printing is precedence-aware, and `parse(print(e))` reproduces `e`
//! structurally for any tree whose constants are non-negative and finite
//! (which includes every tree the parser itself can produce).

use std::fmt;

use crate::special::gamma_fn;

/// Built-in single-argument functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Ln,
    Abs,
    Sqrt,
    Sigmoid,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Abs => "abs",
            Func::Sqrt => "sqrt",
            Func::Sigmoid => "sigmoid",
        }
    }
}

/// Parsed expression tree over the variables `t` (time) and `z` (state).
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    /// The time variable `t`.
    Time,
    /// The state variable `z`.
    State,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
    /// `gamma(c)` with the constant argument already folded; kept as a node
    /// (rather than collapsed to its value) so it prints back readably.
    GammaConst(f64),
}

/// Parse failure with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("parse error at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Evaluation failure (domain violation or unbound variable).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("evaluation domain error: {0}")]
    Domain(String),
    #[error("expression uses the state variable z but no state value was supplied")]
    StateUnavailable,
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(ParseError {
                            position: i,
                            message: "expected digits after decimal point".into(),
                        });
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                    // otherwise the 'e' belongs to a following identifier;
                    // leave it for the ident lexer (and the parser will
                    // reject the adjacency)
                }
                let lit = &text[start..i];
                let v: f64 = lit.parse().map_err(|_| ParseError {
                    position: start,
                    message: format!("invalid number literal '{lit}'"),
                })?;
                toks.push((Tok::Num(v), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character '{}'", &text[i..].chars().next().unwrap()),
                });
            }
        }
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    text_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.text_len)
    }

    fn bump(&mut self) -> Option<&(Tok, usize)> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some((t, _)) if t == want => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(ParseError {
                position: self.here(),
                message: format!("expected {what}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some((Tok::Plus, _)) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some((Tok::Minus, _)) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some((Tok::Star, _)) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some((Tok::Slash, _)) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.unary()?;
        if let Some((Tok::Caret, _)) = self.peek() {
            self.pos += 1;
            let exp = self.factor()?; // right-associative
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if let Some((Tok::Minus, _)) = self.peek() {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.here();
        match self.bump() {
            Some((Tok::Num(v), _)) => Ok(Expr::Const(*v)),
            Some((Tok::LParen, _)) => {
                let e = self.expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(e)
            }
            Some((Tok::Ident(name), _)) => {
                let name = name.clone();
                match name.as_str() {
                    "t" => Ok(Expr::Time),
                    "z" => Ok(Expr::State),
                    "sin" | "cos" | "exp" | "ln" | "abs" | "sqrt" | "sigmoid" => {
                        self.expect(&Tok::LParen, "'(' after function name")?;
                        let arg = self.expr()?;
                        self.expect(&Tok::RParen, "')'")?;
                        let f = match name.as_str() {
                            "sin" => Func::Sin,
                            "cos" => Func::Cos,
                            "exp" => Func::Exp,
                            "ln" => Func::Ln,
                            "abs" => Func::Abs,
                            "sqrt" => Func::Sqrt,
                            _ => Func::Sigmoid,
                        };
                        Ok(Expr::Call(f, Box::new(arg)))
                    }
                    "gamma" => {
                        self.expect(&Tok::LParen, "'(' after function name")?;
                        let arg = self.expr()?;
                        self.expect(&Tok::RParen, "')'")?;
                        if arg.uses_time() || arg.uses_state() {
                            return Err(ParseError {
                                position: at,
                                message: "gamma requires a constant argument".into(),
                            });
                        }
                        let v = arg.eval(0.0, None).map_err(|e| ParseError {
                            position: at,
                            message: format!("cannot fold constant argument of gamma: {e}"),
                        })?;
                        if gamma_fn(v).is_err() {
                            return Err(ParseError {
                                position: at,
                                message: format!(
                                    "gamma argument must be positive and in range, got {v}"
                                ),
                            });
                        }
                        Ok(Expr::GammaConst(v))
                    }
                    other => Err(ParseError {
                        position: at,
                        message: format!("unknown identifier '{other}'"),
                    }),
                }
            }
            _ => Err(ParseError {
                position: at,
                message: "expected a value".into(),
            }),
        }
    }
}

/// Parse an expression from text.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        text_len: text.len(),
    };
    let e = p.expr()?;
    if let Some((_, at)) = p.peek() {
        return Err(ParseError {
            position: *at,
            message: "unexpected trailing input".into(),
        });
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

impl Expr {
    /// Evaluate with time `t` and optional state `z`.
    ///
    /// Total over its domain: division by zero, logs and roots of invalid
    /// arguments, and any operation producing a non-finite value raise
    /// [`EvalError::Domain`] instead of returning NaN or infinities. Pure in
    /// f64 arithmetic, so repeated evaluation is bit-for-bit deterministic.
    pub fn eval(&self, t: f64, z: Option<f64>) -> Result<f64, EvalError> {
        let v = match self {
            Expr::Const(c) => *c,
            Expr::Time => t,
            Expr::State => return z.ok_or(EvalError::StateUnavailable),
            Expr::Neg(e) => -e.eval(t, z)?,
            Expr::Add(a, b) => a.eval(t, z)? + b.eval(t, z)?,
            Expr::Sub(a, b) => a.eval(t, z)? - b.eval(t, z)?,
            Expr::Mul(a, b) => a.eval(t, z)? * b.eval(t, z)?,
            Expr::Div(a, b) => {
                let den = b.eval(t, z)?;
                if den == 0.0 {
                    return Err(EvalError::Domain("division by zero".into()));
                }
                a.eval(t, z)? / den
            }
            Expr::Pow(a, b) => {
                let base = a.eval(t, z)?;
                let ex = b.eval(t, z)?;
                let v = base.powf(ex);
                if !v.is_finite() {
                    return Err(EvalError::Domain(format!(
                        "power {base}^{ex} is not finite"
                    )));
                }
                v
            }
            Expr::Call(f, e) => {
                let x = e.eval(t, z)?;
                match f {
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Exp => x.exp(),
                    Func::Ln => {
                        if x <= 0.0 {
                            return Err(EvalError::Domain(format!(
                                "ln of non-positive value {x}"
                            )));
                        }
                        x.ln()
                    }
                    Func::Abs => x.abs(),
                    Func::Sqrt => {
                        if x < 0.0 {
                            return Err(EvalError::Domain(format!(
                                "sqrt of negative value {x}"
                            )));
                        }
                        x.sqrt()
                    }
                    Func::Sigmoid => {
                        // numerically stable on both tails
                        if x >= 0.0 {
                            1.0 / (1.0 + (-x).exp())
                        } else {
                            let e = x.exp();
                            e / (1.0 + e)
                        }
                    }
                }
            }
            Expr::GammaConst(a) => gamma_fn(*a)
                .map_err(|e| EvalError::Domain(format!("gamma constant: {e}")))?,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(EvalError::Domain(format!(
                "operation produced a non-finite value ({v})"
            )))
        }
    }

    /// Does this expression reference the state variable `z`?
    pub fn uses_state(&self) -> bool {
        match self {
            Expr::State => true,
            Expr::Const(_) | Expr::Time | Expr::GammaConst(_) => false,
            Expr::Neg(e) | Expr::Call(_, e) => e.uses_state(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Pow(a, b) => a.uses_state() || b.uses_state(),
        }
    }

    /// Does this expression reference the time variable `t`?
    pub fn uses_time(&self) -> bool {
        match self {
            Expr::Time => true,
            Expr::Const(_) | Expr::State | Expr::GammaConst(_) => false,
            Expr::Neg(e) | Expr::Call(_, e) => e.uses_time(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Pow(a, b) => a.uses_time() || b.uses_time(),
        }
    }

    /// Binding strength for the printer (higher binds tighter).
    fn level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) | Expr::Div(..) => 1,
            Expr::Pow(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Const(c) if *c < 0.0 || c.is_sign_negative() => 3,
            _ => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let need_parens = self.level() < min;
        if need_parens {
            write!(f, "(")?;
        }
        match self {
            Expr::Const(c) => {
                if *c < 0.0 || c.is_sign_negative() {
                    write!(f, "-{}", -*c)?;
                } else {
                    write!(f, "{c}")?;
                }
            }
            Expr::Time => write!(f, "t")?,
            Expr::State => write!(f, "z")?,
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, 3)?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 0)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 1)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 0)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 1)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " * ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Div(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " / ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Pow(a, b) => {
                a.fmt_prec(f, 3)?;
                write!(f, "^")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Call(func, e) => {
                write!(f, "{}(", func.name())?;
                e.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
            Expr::GammaConst(a) => write!(f, "gamma({a})")?,
        }
        if need_parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}
