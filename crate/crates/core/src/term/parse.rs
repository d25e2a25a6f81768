use crate::error::{Error, Result};

use super::Term;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    Word(String),
    Plus,
    Semi,
    Bar2,
    StarOp,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LAngle,
    RAngle,
    Comma,
    Eq,
    Le,
    Ge,
    Amp,
    Implies,
    Iff,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Word(w) => format!("`{w}`"),
            Token::End => "end of input".to_string(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Token::Plus => "+",
            Token::Semi => ";",
            Token::Bar2 => "||",
            Token::StarOp => "^*",
            Token::LParen => "(",
            Token::RParen => ")",
            Token::LBracket => "[",
            Token::RBracket => "]",
            Token::LAngle => "<",
            Token::RAngle => ">",
            Token::Comma => ",",
            Token::Eq => "=",
            Token::Le => "<=",
            Token::Ge => ">=",
            Token::Amp => "&",
            Token::Implies => "=>",
            Token::Iff => "<=>",
            Token::Word(_) | Token::End => "",
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let rest = &text[i..];
        let symbols: [(&str, Token); 17] = [
            ("<=>", Token::Iff),
            ("<=", Token::Le),
            (">=", Token::Ge),
            ("=>", Token::Implies),
            ("||", Token::Bar2),
            ("^*", Token::StarOp),
            ("=", Token::Eq),
            ("<", Token::LAngle),
            (">", Token::RAngle),
            ("+", Token::Plus),
            (";", Token::Semi),
            ("(", Token::LParen),
            (")", Token::RParen),
            ("[", Token::LBracket),
            ("]", Token::RBracket),
            (",", Token::Comma),
            ("&", Token::Amp),
        ];
        if let Some((sym, tok)) = symbols.iter().find(|(s, _)| rest.starts_with(s)) {
            out.push((i, tok.clone()));
            i += sym.len();
            continue;
        }
        if c.is_ascii_alphanumeric() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                i += 1;
            }
            out.push((start, Token::Word(text[start..i].to_string())));
            continue;
        }
        let ch = rest.chars().next().unwrap_or('?');
        return Err(Error::Syntax { offset: i, message: format!("unexpected character `{ch}`") });
    }
    out.push((text.len(), Token::End));
    Ok(out)
}

/// Recursive-descent parser over a token stream; also drives the law
/// formula grammar, which extends terms with relations and connectives.
pub(crate) struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    pub(crate) fn new(text: &str) -> Result<Self> {
        Ok(Parser { tokens: lex(text)?, pos: 0 })
    }

    pub(crate) fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    pub(crate) fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    pub(crate) fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.offset(), message: message.into() }
    }

    pub(crate) fn expect(&mut self, tok: Token) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`, found {}", tok.symbol(), self.peek().describe())))
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        match self.peek() {
            Token::End => Ok(()),
            t => Err(self.error(format!("unexpected {}", t.describe()))),
        }
    }

    pub(crate) fn term(&mut self) -> Result<Term> {
        let mut lhs = self.par_level()?;
        while *self.peek() == Token::Plus {
            self.bump();
            lhs = Term::plus(lhs, self.par_level()?);
        }
        Ok(lhs)
    }

    fn par_level(&mut self) -> Result<Term> {
        let mut lhs = self.seq_level()?;
        while *self.peek() == Token::Bar2 {
            self.bump();
            lhs = Term::par(lhs, self.seq_level()?);
        }
        Ok(lhs)
    }

    fn seq_level(&mut self) -> Result<Term> {
        let mut lhs = self.prefix()?;
        while *self.peek() == Token::Semi {
            self.bump();
            lhs = Term::seq(lhs, self.prefix()?);
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Term> {
        match self.peek() {
            Token::LAngle => {
                self.bump();
                let x = self.term()?;
                self.expect(Token::RAngle)?;
                Ok(Term::dia(x, self.prefix()?))
            }
            Token::LBracket => {
                self.bump();
                let x = self.term()?;
                self.expect(Token::RBracket)?;
                Ok(Term::boxed(x, self.prefix()?))
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while *self.peek() == Token::StarOp {
            self.bump();
            t = Term::star(t);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        let offset = self.offset();
        match self.bump() {
            Token::LParen => {
                let t = self.term()?;
                self.expect(Token::RParen)?;
                Ok(t)
            }
            Token::Word(w) => {
                let call = *self.peek() == Token::LParen;
                match w.as_str() {
                    "0" => Ok(Term::Zero),
                    "1s" => Ok(Term::UnitSeq),
                    "1p" => Ok(Term::UnitPar),
                    "U" => Ok(Term::Univ),
                    "d" | "a" if call => {
                        self.bump();
                        let x = self.term()?;
                        self.expect(Token::RParen)?;
                        Ok(if w == "d" { Term::dom(x) } else { Term::anti(x) })
                    }
                    "bstar" if call => {
                        self.bump();
                        let x = self.term()?;
                        self.expect(Token::Comma)?;
                        let y = self.term()?;
                        self.expect(Token::RParen)?;
                        Ok(Term::bstar(x, y))
                    }
                    "bstar" => Err(Error::Syntax { offset, message: "`bstar` takes two arguments".into() }),
                    _ if crate::universe::is_identifier(&w) => Ok(Term::Var(w)),
                    _ => Err(Error::Syntax { offset, message: format!("`{w}` is not an identifier") }),
                }
            }
            t => Err(Error::Syntax { offset, message: format!("expected a term, found {}", t.describe()) }),
        }
    }
}

pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}
