//! Parser for the preference-list text format.
//!
//! ```text
//! file    := [header NEWLINE] body
//! header  := "universe:" name ("," name)*
//! body    := class (sep class)*
//! sep     := NEWLINE | "/"            # both delimit classes, best first
//! class   := set ("~" set)*           # "~" separates indifferent sets
//! set     := "{" [name ("," name)*] "}"
//! name    := [A-Za-z0-9_]+
//! ```
//!
//! `#` starts a comment running to the end of the line; blank lines are
//! ignored; whitespace between tokens is free. When no header is present the
//! universe is the alternatives in order of first mention. A header is needed
//! to declare alternatives that appear in no acceptable set. If the empty set
//! `{}` is not listed, it is appended as a final singleton class.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{AltSet, PrefError, PreferenceList, Universe, ValidationError};

/// Syntax error with 1-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Character outside the token alphabet.
    UnexpectedChar(char),
    /// A set (`{`) is required here.
    ExpectedSet,
    /// After a set: `~`, `/`, or end of line.
    ExpectedSeparator,
    /// Inside braces: a name or `}`.
    ExpectedNameOrClose,
    /// Inside braces after a name: `,` or `}`.
    ExpectedCommaOrClose,
    /// A name is required here.
    ExpectedName,
    /// Line or input ended inside braces.
    UnclosedSet,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => return write_pos(f, self, &format_char(*c)),
            ParseErrorKind::ExpectedSet => "expected a set '{...}'",
            ParseErrorKind::ExpectedSeparator => "expected '~', '/', or end of line after a set",
            ParseErrorKind::ExpectedNameOrClose => "expected an alternative name or '}'",
            ParseErrorKind::ExpectedCommaOrClose => "expected ',' or '}'",
            ParseErrorKind::ExpectedName => "expected an alternative name",
            ParseErrorKind::UnclosedSet => "unclosed set: missing '}'",
        };
        write_pos(f, self, what)
    }
}

fn write_pos(f: &mut fmt::Formatter<'_>, e: &ParseError, what: &str) -> fmt::Result {
    write!(f, "{}:{}: {what}", e.line, e.col)
}

fn format_char(c: char) -> String {
    use alloc::format;
    format!("unexpected character '{c}'")
}

#[cfg(feature = "std")]
impl std::error::Error for ParseError {}

fn err(line: usize, col: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, col, kind }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LBrace,
    RBrace,
    Comma,
    Tilde,
    Slash,
    Newline,
    Name(String),
}

struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str, first_line: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = first_line;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let start_col = col;
        match c {
            '\n' => {
                out.push(Token {
                    tok: Tok::Newline,
                    line,
                    col,
                });
                chars.next();
                line += 1;
                col = 1;
            }
            '#' => {
                // Comment to end of line; the newline itself is kept.
                while let Some(&c2) = chars.peek() {
                    if c2 == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '{' | '}' | ',' | '~' | '/' => {
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    ',' => Tok::Comma,
                    '~' => Tok::Tilde,
                    _ => Tok::Slash,
                };
                out.push(Token {
                    tok,
                    line,
                    col: start_col,
                });
                chars.next();
                col += 1;
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut name = String::new();
                while let Some(&c2) = chars.peek() {
                    if c2.is_ascii_alphanumeric() || c2 == '_' {
                        name.push(c2);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    tok: Tok::Name(name),
                    line,
                    col: start_col,
                });
            }
            other => return Err(err(line, col, ParseErrorKind::UnexpectedChar(other))),
        }
    }
    Ok(out)
}

/// A set as written: member names with their positions.
type RawSet = Vec<(String, usize, usize)>;

/// Parses the body token stream into classes of raw sets.
fn parse_body(
    tokens: &[Token],
    eof_line: usize,
    eof_col: usize,
) -> Result<Vec<Vec<RawSet>>, ParseError> {
    enum State {
        LineStart,
        AfterSet,
        AfterTilde,
        AfterSlash,
    }

    let mut classes: Vec<Vec<RawSet>> = Vec::new();
    let mut current: Vec<RawSet> = Vec::new();
    let mut state = State::LineStart;
    let mut i = 0usize;

    while i < tokens.len() {
        let t = &tokens[i];
        match state {
            State::LineStart => match &t.tok {
                Tok::Newline => i += 1,
                Tok::LBrace => {
                    let (set, next) = parse_set(tokens, i, eof_line, eof_col)?;
                    current.push(set);
                    state = State::AfterSet;
                    i = next;
                }
                _ => return Err(err(t.line, t.col, ParseErrorKind::ExpectedSet)),
            },
            State::AfterSet => match &t.tok {
                Tok::Tilde => {
                    state = State::AfterTilde;
                    i += 1;
                }
                Tok::Slash => {
                    classes.push(core::mem::take(&mut current));
                    state = State::AfterSlash;
                    i += 1;
                }
                Tok::Newline => {
                    classes.push(core::mem::take(&mut current));
                    state = State::LineStart;
                    i += 1;
                }
                _ => return Err(err(t.line, t.col, ParseErrorKind::ExpectedSeparator)),
            },
            State::AfterTilde | State::AfterSlash => match &t.tok {
                Tok::LBrace => {
                    let (set, next) = parse_set(tokens, i, eof_line, eof_col)?;
                    current.push(set);
                    state = State::AfterSet;
                    i = next;
                }
                _ => return Err(err(t.line, t.col, ParseErrorKind::ExpectedSet)),
            },
        }
    }

    match state {
        State::AfterSet => classes.push(current),
        State::LineStart => {
            if classes.is_empty() {
                return Err(err(eof_line, eof_col, ParseErrorKind::ExpectedSet));
            }
        }
        State::AfterTilde | State::AfterSlash => {
            return Err(err(eof_line, eof_col, ParseErrorKind::ExpectedSet))
        }
    }
    Ok(classes)
}

/// Parses one `{...}` starting at `tokens[open]` (which must be `{`).
/// Returns the set and the index just past the closing brace.
fn parse_set(
    tokens: &[Token],
    open: usize,
    eof_line: usize,
    eof_col: usize,
) -> Result<(RawSet, usize), ParseError> {
    debug_assert_eq!(tokens[open].tok, Tok::LBrace);
    let mut set: RawSet = Vec::new();
    let mut i = open + 1;
    let mut after_name = false;
    let mut after_comma = false;
    loop {
        let Some(t) = tokens.get(i) else {
            return Err(err(eof_line, eof_col, ParseErrorKind::UnclosedSet));
        };
        match &t.tok {
            Tok::Newline => return Err(err(t.line, t.col, ParseErrorKind::UnclosedSet)),
            Tok::RBrace if !after_comma => return Ok((set, i + 1)),
            Tok::Name(name) if !after_name => {
                set.push((name.clone(), t.line, t.col));
                after_name = true;
                after_comma = false;
                i += 1;
            }
            Tok::Comma if after_name => {
                after_name = false;
                after_comma = true;
                i += 1;
            }
            _ => {
                let kind = if after_name {
                    ParseErrorKind::ExpectedCommaOrClose
                } else if after_comma {
                    ParseErrorKind::ExpectedName
                } else {
                    ParseErrorKind::ExpectedNameOrClose
                };
                return Err(err(t.line, t.col, kind));
            }
        }
    }
}

/// Parses the remainder of a `universe:` header line into names.
fn parse_header(rest: &str, line: usize, col0: usize) -> Result<Vec<String>, ParseError> {
    let mut names = Vec::new();
    let mut col = col0;
    let mut expect_name = true;
    let mut chars = rest.chars().peekable();
    loop {
        while let Some(&c) = chars.peek() {
            if c == '#' {
                while chars.next().is_some() {}
                break;
            }
            if c.is_whitespace() {
                chars.next();
                col += 1;
            } else {
                break;
            }
        }
        let Some(&c) = chars.peek() else { break };
        if expect_name {
            if !(c.is_ascii_alphanumeric() || c == '_') {
                return Err(err(line, col, ParseErrorKind::ExpectedName));
            }
            let mut name = String::new();
            while let Some(&c2) = chars.peek() {
                if c2.is_ascii_alphanumeric() || c2 == '_' {
                    name.push(c2);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            names.push(name);
            expect_name = false;
        } else if c == ',' {
            chars.next();
            col += 1;
            expect_name = true;
        } else {
            return Err(err(line, col, ParseErrorKind::UnexpectedChar(c)));
        }
    }
    if names.is_empty() || expect_name {
        return Err(err(line, col, ParseErrorKind::ExpectedName));
    }
    Ok(names)
}

/// Parses the text format into a validated, canonicalized [`PreferenceList`].
pub fn parse_preference_list(text: &str) -> Result<PreferenceList, PrefError> {
    // Split off an optional header: the first line that is not blank and not
    // pure comment, when it starts with "universe:".
    let mut header: Option<Vec<String>> = None;
    let mut body_start = 0usize; // byte offset
    let mut body_first_line = 1usize;
    let mut line_no = 0usize;
    for raw_line in text.split_inclusive('\n') {
        line_no += 1;
        let stripped = raw_line.split('#').next().unwrap_or("");
        let trimmed = stripped.trim();
        if trimmed.is_empty() {
            body_start += raw_line.len();
            body_first_line = line_no + 1;
            continue;
        }
        if let Some(rest_idx) = leading_header(stripped) {
            let names = parse_header(&stripped[rest_idx..], line_no, char_col(stripped, rest_idx))?;
            header = Some(names);
            body_start += raw_line.len();
            body_first_line = line_no + 1;
        }
        break;
    }

    let body = &text[body_start..];
    let eof_line = body_first_line + body.matches('\n').count();
    let eof_col = char_col(body.rsplit('\n').next().unwrap_or(body), usize::MAX);
    let tokens = tokenize(body, body_first_line)?;
    let raw_classes = parse_body(&tokens, eof_line, eof_col)?;

    // Determine the universe: declared header, or first-mention order.
    let declared = header.is_some();
    let universe = match header {
        Some(names) => Universe::new(names)?,
        None => {
            let mut names: Vec<String> = Vec::new();
            for class in &raw_classes {
                for set in class {
                    for (name, _, _) in set {
                        if !names.iter().any(|n| n == name) {
                            names.push(name.clone());
                        }
                    }
                }
            }
            Universe::new(names)?
        }
    };

    // Duplicate names inside one set denote the same alternative and collapse.
    let mut classes: Vec<Vec<AltSet>> = Vec::with_capacity(raw_classes.len());
    for raw_class in &raw_classes {
        let mut class = Vec::with_capacity(raw_class.len());
        for raw_set in raw_class {
            let mut set = universe.empty_set();
            for (name, _, _) in raw_set {
                match universe.index_of(name) {
                    Some(i) => set.insert(i),
                    None => {
                        debug_assert!(declared);
                        return Err(
                            ValidationError::UnknownAlternative { name: name.clone() }.into()
                        );
                    }
                }
            }
            class.push(set);
        }
        classes.push(class);
    }

    PreferenceList::from_classes(universe, classes).map_err(Into::into)
}

/// Byte offset just past "universe:" when the line is a header.
fn leading_header(line: &str) -> Option<usize> {
    let trimmed = line.trim_start();
    let prefix = "universe:";
    if trimmed.starts_with(prefix) {
        Some(line.len() - trimmed.len() + prefix.len())
    } else {
        None
    }
}

/// 1-based character column of a byte offset (clamped to line end).
fn char_col(line: &str, byte_offset: usize) -> usize {
    let upto = byte_offset.min(line.len());
    line[..upto].chars().count() + 1
}
