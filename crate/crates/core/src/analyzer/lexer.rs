//! Generic tokenizer parameterized by each language's comment and string
//! syntax. Comments produce no tokens; a string literal is one token.

use std::collections::BTreeSet;

use super::langs::LanguageSyntax;

#[derive(Debug, Clone)]
pub struct Token {
    pub text: String,
    pub line: u32,
}

#[derive(Debug, Default)]
pub struct Lexed {
    pub tokens: Vec<Token>,
    /// Lines that contain at least one code token (or a preprocessor
    /// directive). `nloc` is the size of this set.
    pub code_lines: BTreeSet<u32>,
}

impl Lexed {
    pub fn nloc(&self) -> u32 {
        self.code_lines.len() as u32
    }

    pub fn nloc_in_span(&self, start: u32, end: u32) -> u32 {
        self.code_lines.range(start..=end).count() as u32
    }
}

struct Cursor<'a> {
    chars: &'a [char],
    pos: usize,
    line: u32,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn starts_with(&self, s: &str) -> bool {
        let mut i = self.pos;
        for ch in s.chars() {
            if self.chars.get(i) != Some(&ch) {
                return false;
            }
            i += 1;
        }
        true
    }

    fn starts_with_ci(&self, s: &str) -> bool {
        let mut i = self.pos;
        for ch in s.chars() {
            match self.chars.get(i) {
                Some(c) if c.to_ascii_lowercase() == ch.to_ascii_lowercase() => i += 1,
                _ => return false,
            }
        }
        true
    }

    fn advance(&mut self, n: usize) {
        for _ in 0..n {
            self.bump();
        }
    }

    /// True if only whitespace precedes the cursor on the current line.
    fn at_line_start(&self) -> bool {
        let mut i = self.pos;
        while i > 0 {
            let c = self.chars[i - 1];
            if c == '\n' {
                return true;
            }
            if c != ' ' && c != '\t' && c != '\r' {
                return false;
            }
            i -= 1;
        }
        true
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

pub fn lex(content: &str, syntax: &LanguageSyntax) -> Lexed {
    let chars: Vec<char> = content.chars().collect();
    let mut cur = Cursor { chars: &chars, pos: 0, line: 1 };
    let mut out = Lexed::default();

    // Longest-first so maximal munch wins.
    let mut operators: Vec<&str> = syntax.operators.to_vec();
    operators.sort_by_key(|op| std::cmp::Reverse(op.len()));

    'outer: while let Some(c) = cur.peek() {
        if c == '\n' || c == '\r' || c == ' ' || c == '\t' || c.is_whitespace() {
            cur.bump();
            continue;
        }

        // Preprocessor directives: the whole (possibly continued) line is
        // skipped but still counts as code.
        if syntax.preprocessor && c == '#' && cur.at_line_start() {
            out.code_lines.insert(cur.line);
            loop {
                match cur.peek() {
                    None => break,
                    Some('\n') => {
                        // Backslash continuation keeps the directive going.
                        if cur.pos > 0 && cur.chars[cur.pos - 1] == '\\' {
                            cur.bump();
                            out.code_lines.insert(cur.line);
                        } else {
                            break;
                        }
                    }
                    _ => {
                        cur.bump();
                    }
                }
            }
            continue;
        }

        // Block comments before line comments: Lua's `--[[` nests inside `--`.
        for (open, close) in syntax.block_comments {
            let at_start_only = *open == "=begin";
            if cur.starts_with(open) && (!at_start_only || cur.at_line_start()) {
                cur.advance(open.chars().count());
                while cur.peek().is_some() && !cur.starts_with(close) {
                    cur.bump();
                }
                cur.advance(close.chars().count());
                continue 'outer;
            }
        }

        for marker in syntax.line_comments {
            if cur.starts_with(marker) {
                while let Some(c) = cur.peek() {
                    if c == '\n' {
                        break;
                    }
                    cur.bump();
                }
                continue 'outer;
            }
        }

        let line = cur.line;

        // Triple-quoted strings.
        if syntax.triple_quotes && (cur.starts_with("\"\"\"") || cur.starts_with("'''")) {
            let quote = c;
            let delim: String = std::iter::repeat(quote).take(3).collect();
            cur.advance(3);
            while cur.peek().is_some() && !cur.starts_with(&delim) {
                cur.bump();
            }
            cur.advance(3);
            push(&mut out, "\"<str>\"", line);
            continue;
        }

        // Backtick strings (Go raw strings, JS/TS template literals).
        if syntax.backtick_strings && c == '`' {
            cur.bump();
            while let Some(ch) = cur.bump() {
                if ch == '\\' {
                    cur.bump();
                } else if ch == '`' {
                    break;
                }
            }
            push(&mut out, "\"<str>\"", line);
            continue;
        }

        // Lua long strings: [[ ... ]] / [=[ ... ]=].
        if syntax.style == super::langs::FunctionStyle::KeywordEnd && c == '[' {
            let mut eqs = 0;
            while cur.peek_at(1 + eqs) == Some('=') {
                eqs += 1;
            }
            if cur.peek_at(1 + eqs) == Some('[') && *syntax.line_comments == ["--"] {
                let close: String = format!("]{}]", "=".repeat(eqs));
                cur.advance(2 + eqs);
                while cur.peek().is_some() && !cur.starts_with(&close) {
                    cur.bump();
                }
                cur.advance(close.len());
                push(&mut out, "\"<str>\"", line);
                continue;
            }
        }

        if c == '"' || c == '\'' {
            // Rust: distinguish lifetimes from char literals.
            if c == '\'' && syntax.def_keywords.contains(&"fn") {
                let next = cur.peek_at(1);
                let is_char = match next {
                    Some('\\') => true,
                    Some(_) => cur.peek_at(2) == Some('\''),
                    None => false,
                };
                if !is_char {
                    cur.bump();
                    let mut text = String::from("'");
                    while let Some(ch) = cur.peek() {
                        if is_ident_continue(ch) {
                            text.push(ch);
                            cur.bump();
                        } else {
                            break;
                        }
                    }
                    push(&mut out, &text, line);
                    continue;
                }
            }
            let quote = c;
            cur.bump();
            while let Some(ch) = cur.bump() {
                if ch == '\\' && !syntax.case_insensitive {
                    cur.bump();
                } else if ch == quote {
                    // Fortran escapes quotes by doubling them.
                    if syntax.case_insensitive && cur.peek() == Some(quote) {
                        cur.bump();
                        continue;
                    }
                    break;
                }
            }
            push(&mut out, "\"<str>\"", line);
            continue;
        }

        // Rust raw strings: r"..." / r#"..."# / br#"..."#.
        if (c == 'r' || c == 'b') && syntax.def_keywords.contains(&"fn") {
            let off = if c == 'b' && cur.peek_at(1) == Some('r') { 2 } else { 1 };
            let mut hashes = 0;
            while cur.peek_at(off + hashes) == Some('#') {
                hashes += 1;
            }
            let is_raw = cur.peek_at(off + hashes) == Some('"') && (c == 'r' || off == 2);
            if is_raw {
                cur.advance(off + hashes + 1);
                let close: String = format!("\"{}", "#".repeat(hashes));
                while cur.peek().is_some() && !cur.starts_with(&close) {
                    cur.bump();
                }
                cur.advance(close.len());
                push(&mut out, "\"<str>\"", line);
                continue;
            }
        }

        if c.is_ascii_digit() {
            let mut text = String::new();
            if c == '0'
                && matches!(cur.peek_at(1), Some('x') | Some('X') | Some('b') | Some('B') | Some('o') | Some('O'))
            {
                text.push(cur.bump().unwrap());
                text.push(cur.bump().unwrap());
                while let Some(ch) = cur.peek() {
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        text.push(ch);
                        cur.bump();
                    } else {
                        break;
                    }
                }
            } else {
                while let Some(ch) = cur.peek() {
                    if ch.is_ascii_digit() || ch == '_' {
                        text.push(ch);
                        cur.bump();
                    } else {
                        break;
                    }
                }
                if cur.peek() == Some('.') && cur.peek_at(1).map_or(false, |d| d.is_ascii_digit()) {
                    text.push(cur.bump().unwrap());
                    while let Some(ch) = cur.peek() {
                        if ch.is_ascii_digit() || ch == '_' {
                            text.push(ch);
                            cur.bump();
                        } else {
                            break;
                        }
                    }
                }
                if matches!(cur.peek(), Some('e') | Some('E'))
                    && matches!(cur.peek_at(1), Some(d) if d.is_ascii_digit() || d == '+' || d == '-')
                {
                    text.push(cur.bump().unwrap());
                    if matches!(cur.peek(), Some('+') | Some('-')) {
                        text.push(cur.bump().unwrap());
                    }
                    while let Some(ch) = cur.peek() {
                        if ch.is_ascii_digit() {
                            text.push(ch);
                            cur.bump();
                        } else {
                            break;
                        }
                    }
                }
                // Type suffixes (1.5f, 10L, 3u32).
                while let Some(ch) = cur.peek() {
                    if ch.is_ascii_alphanumeric() {
                        text.push(ch);
                        cur.bump();
                    } else {
                        break;
                    }
                }
            }
            push(&mut out, &text, line);
            continue;
        }

        if is_ident_start(c) {
            let mut text = String::new();
            while let Some(ch) = cur.peek() {
                if is_ident_continue(ch) {
                    text.push(ch);
                    cur.bump();
                } else {
                    break;
                }
            }
            push(&mut out, &text, line);
            continue;
        }

        // Fortran dotted operators (.and., .or., ...) before generic punctuation.
        if c == '.' && syntax.case_insensitive {
            let mut matched = false;
            for op in syntax.operators {
                if op.starts_with('.') && cur.starts_with_ci(op) {
                    push(&mut out, &op.to_lowercase(), line);
                    cur.advance(op.chars().count());
                    matched = true;
                    break;
                }
            }
            if matched {
                continue;
            }
        }

        let mut matched = false;
        for op in &operators {
            if cur.starts_with(op) {
                push(&mut out, op, line);
                cur.advance(op.chars().count());
                matched = true;
                break;
            }
        }
        if matched {
            continue;
        }

        let mut text = String::new();
        text.push(c);
        cur.bump();
        push(&mut out, &text, line);
    }

    out
}

fn push(out: &mut Lexed, text: &str, line: u32) {
    out.code_lines.insert(line);
    out.tokens.push(Token { text: text.to_string(), line });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyzer::langs::{syntax_for, LanguageId};

    fn texts(content: &str, lang: LanguageId) -> Vec<String> {
        lex(content, syntax_for(lang))
            .tokens
            .into_iter()
            .map(|t| t.text)
            .collect()
    }

    #[test]
    fn strings_are_single_tokens() {
        let toks = texts(r#"x = "hello world" + 'c';"#, LanguageId::Java);
        assert_eq!(toks, vec!["x", "=", "\"<str>\"", "+", "\"<str>\"", ";"]);
    }

    #[test]
    fn comments_produce_no_tokens() {
        let toks = texts("int x; // trailing\n/* block\ncomment */ y;", LanguageId::C);
        assert_eq!(toks, vec!["int", "x", ";", "y", ";"]);
    }

    #[test]
    fn nloc_ignores_comment_and_blank_lines() {
        let lexed = lex("int x;\n\n// comment only\nint y;\n", syntax_for(LanguageId::C));
        assert_eq!(lexed.nloc(), 2);
    }

    #[test]
    fn maximal_munch_keeps_operators_whole() {
        let toks = texts("a && b || c ?? d?.e", LanguageId::TypeScript);
        assert_eq!(toks, vec!["a", "&&", "b", "||", "c", "??", "d", "?.", "e"]);
    }

    #[test]
    fn preprocessor_lines_are_skipped_but_count_as_code() {
        let lexed = lex("#include <stdio.h>\nint x;\n", syntax_for(LanguageId::C));
        assert_eq!(lexed.nloc(), 2);
        let toks: Vec<_> = lexed.tokens.iter().map(|t| t.text.as_str()).collect();
        assert_eq!(toks, vec!["int", "x", ";"]);
    }

    #[test]
    fn rust_lifetimes_are_not_strings() {
        let toks = texts("fn f<'a>(x: &'a str) -> char { 'x' }", LanguageId::Rust);
        assert!(toks.contains(&"'a".to_string()));
        assert!(toks.contains(&"\"<str>\"".to_string()));
    }

    #[test]
    fn fortran_dotted_operators() {
        let toks = texts("if (a .and. b) then", LanguageId::Fortran);
        assert!(toks.contains(&".and.".to_string()));
    }

    #[test]
    fn numbers_with_suffixes_are_one_token() {
        let toks = texts("x = 1.5e3f + 0xFF;", LanguageId::C);
        assert_eq!(toks, vec!["x", "=", "1.5e3f", "+", "0xFF", ";"]);
    }

    #[test]
    fn empty_input() {
        let lexed = lex("", syntax_for(LanguageId::Python));
        assert!(lexed.tokens.is_empty());
        assert_eq!(lexed.nloc(), 0);
    }
}
