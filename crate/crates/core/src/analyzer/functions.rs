//! Function boundary detection per language family, plus per-function
//! cyclomatic complexity. Detection is heuristic: it never errors on
//! malformed code, it just finds fewer functions.

use super::langs::{syntax_for, FunctionStyle, LanguageId, LanguageSyntax};
use super::lexer::{Lexed, Token};

#[derive(Debug, Clone)]
pub(crate) struct RawFunction {
    pub name: String,
    pub start_line: u32,
    pub end_line: u32,
    pub cyclomatic_complexity: u32,
    pub parameter_count: u32,
}

pub(crate) fn extract_functions(lexed: &Lexed, language: LanguageId, source: &str) -> Vec<RawFunction> {
    let syntax = syntax_for(language);
    match syntax.style {
        FunctionStyle::Brace => BraceScanner::new(lexed, language, syntax).run(),
        FunctionStyle::Indent => extract_python(lexed, source),
        FunctionStyle::KeywordEnd => extract_keyword_end(lexed, language, syntax),
        FunctionStyle::ErlangClause => extract_erlang(lexed, syntax),
        FunctionStyle::FortranUnit => extract_fortran(lexed, syntax),
        FunctionStyle::None => Vec::new(),
    }
}

fn is_ident_token(text: &str) -> bool {
    text.chars()
        .next()
        .map(|c| c.is_alphabetic() || c == '_' || c == '$')
        .unwrap_or(false)
}

/// Count parameters in a balanced `( ... )` group starting at `open`.
/// Returns (param_count, index just past the closing paren).
fn parse_params(toks: &[Token], open: usize) -> Option<(u32, usize)> {
    if toks.get(open)?.text != "(" {
        return None;
    }
    let mut depth = 0i32;
    let mut commas = 0u32;
    let mut any = false;
    let mut only_void = true;
    let mut k = open;
    let mut steps = 0;
    while k < toks.len() {
        steps += 1;
        if steps > 2000 {
            return None;
        }
        let t = toks[k].text.as_str();
        match t {
            "(" | "[" => depth += 1,
            ")" | "]" => {
                depth -= 1;
                if depth == 0 {
                    if !any {
                        return Some((0, k + 1));
                    }
                    if only_void {
                        return Some((0, k + 1));
                    }
                    return Some((commas + 1, k + 1));
                }
            }
            "," if depth == 1 => {
                commas += 1;
                only_void = false;
            }
            _ => {
                if depth >= 1 {
                    any = true;
                    if t != "void" {
                        only_void = false;
                    }
                }
            }
        }
        k += 1;
    }
    None
}

/// Skip a balanced bracket group (`(`, `[` or `<`) starting at `open`.
fn skip_balanced(toks: &[Token], open: usize, open_ch: &str, close_ch: &str) -> Option<usize> {
    let mut depth = 0i32;
    let mut k = open;
    let mut steps = 0;
    while k < toks.len() {
        steps += 1;
        if steps > 2000 {
            return None;
        }
        let t = toks[k].text.as_str();
        if t == open_ch {
            depth += 1;
        } else if t == close_ch {
            depth -= 1;
            if depth == 0 {
                return Some(k + 1);
            }
        } else if open_ch == "<" {
            // The lexer emits `>>` as one token; it closes two levels.
            if t == ">>" {
                depth -= 2;
                if depth <= 0 {
                    return Some(k + 1);
                }
            } else if t == ";" || t == "{" {
                return None;
            }
        }
        k += 1;
    }
    None
}

struct Header {
    name: String,
    start_line: u32,
    parameter_count: u32,
    /// Index of the body's opening `{`.
    brace_index: usize,
}

struct BraceScanner<'a> {
    toks: &'a [Token],
    lang: LanguageId,
    syntax: &'static LanguageSyntax,
    out: Vec<RawFunction>,
    /// (function index, depth at which its closing `}` appears)
    stack: Vec<(usize, i32)>,
    depth: i32,
}

impl<'a> BraceScanner<'a> {
    fn new(lexed: &'a Lexed, lang: LanguageId, syntax: &'static LanguageSyntax) -> Self {
        BraceScanner {
            toks: &lexed.tokens,
            lang,
            syntax,
            out: Vec::new(),
            stack: Vec::new(),
            depth: 0,
        }
    }

    fn run(mut self) -> Vec<RawFunction> {
        let mut i = 0;
        while i < self.toks.len() {
            if let Some(hdr) = self.try_header(i) {
                let idx = self.out.len();
                self.out.push(RawFunction {
                    name: hdr.name,
                    start_line: hdr.start_line,
                    end_line: hdr.start_line,
                    cyclomatic_complexity: 1,
                    parameter_count: hdr.parameter_count,
                });
                self.stack.push((idx, self.depth));
                self.depth += 1;
                i = hdr.brace_index + 1;
                continue;
            }
            let t = self.toks[i].text.as_str();
            match t {
                "{" => self.depth += 1,
                "}" => {
                    self.depth = (self.depth - 1).max(0);
                    if let Some(&(idx, close_depth)) = self.stack.last() {
                        if close_depth == self.depth {
                            self.out[idx].end_line = self.toks[i].line;
                            self.stack.pop();
                        }
                    }
                }
                _ => {
                    if self.syntax.branch_tokens.contains(&t) {
                        if let Some(&(idx, _)) = self.stack.last() {
                            self.out[idx].cyclomatic_complexity += 1;
                        }
                    }
                }
            }
            i += 1;
        }
        let last_line = self.toks.last().map(|t| t.line).unwrap_or(1);
        for (idx, _) in self.stack.drain(..) {
            self.out[idx].end_line = last_line;
        }
        self.out
    }

    fn try_header(&self, i: usize) -> Option<Header> {
        let t = self.toks[i].text.as_str();
        if self.syntax.def_keywords.contains(&t) {
            let hdr = match self.lang {
                LanguageId::Rust => self.try_rust_fn(i),
                LanguageId::Go => self.try_go_func(i),
                LanguageId::Kotlin => self.try_kotlin_fun(i),
                LanguageId::Swift => self.try_swift_func(i),
                LanguageId::Scala => self.try_scala_def(i),
                LanguageId::JavaScript | LanguageId::TypeScript | LanguageId::Php => {
                    self.try_function_keyword(i)
                }
                _ => None,
            };
            if hdr.is_some() {
                return hdr;
            }
        }
        if self.lang == LanguageId::ObjectiveC && (t == "-" || t == "+") {
            if let Some(hdr) = self.try_objc_method(i) {
                return Some(hdr);
            }
        }
        if self.syntax.clike_headers && is_ident_token(t) {
            return self.try_generic(i);
        }
        None
    }

    /// `name(args) ... {` headers for C-family languages and JS/TS methods.
    fn try_generic(&self, i: usize) -> Option<Header> {
        let toks = self.toks;
        if toks.get(i + 1)?.text != "(" {
            return None;
        }
        let name_text = toks[i].text.as_str();
        if self.syntax.control_keywords.contains(&name_text)
            || self.syntax.def_keywords.contains(&name_text)
        {
            return None;
        }
        // Walk back through a qualified-name chain (`Foo::~Bar`).
        let mut name = name_text.to_string();
        let mut j = i;
        while j >= 2 && toks[j - 1].text == "::" && is_ident_token(&toks[j - 2].text) {
            name = format!("{}::{}", toks[j - 2].text, name);
            j -= 2;
        }
        if j >= 1 && toks[j - 1].text == "~" {
            name = format!("~{name}");
            j -= 1;
        }
        if j >= 1 {
            let prev = toks[j - 1].text.as_str();
            if matches!(prev, "." | "->" | "?." | "new" | "@" | "#") {
                return None;
            }
        }
        let (params, after) = parse_params(toks, i + 1)?;
        let brace = self.scan_to_brace(after, false)?;
        Some(Header {
            name,
            start_line: toks[i].line,
            parameter_count: params,
            brace_index: brace,
        })
    }

    /// Scan from `start` for the body's `{`, rejecting anything that makes
    /// this a declaration or an expression.
    fn scan_to_brace(&self, start: usize, allow_assign: bool) -> Option<usize> {
        let toks = self.toks;
        let mut k = start;
        let mut steps = 0;
        while k < toks.len() {
            steps += 1;
            if steps > 150 {
                return None;
            }
            let t = toks[k].text.as_str();
            match t {
                "{" => return Some(k),
                "(" => {
                    k = skip_balanced(toks, k, "(", ")")?;
                    continue;
                }
                "[" => {
                    k = skip_balanced(toks, k, "[", "]")?;
                    continue;
                }
                ";" | ")" | "]" | "}" => return None,
                "=" if !allow_assign => return None,
                _ => {
                    if self.syntax.control_keywords.contains(&t)
                        || self.syntax.def_keywords.contains(&t)
                    {
                        return None;
                    }
                }
            }
            k += 1;
        }
        None
    }

    fn try_rust_fn(&self, i: usize) -> Option<Header> {
        let toks = self.toks;
        let name_tok = toks.get(i + 1)?;
        if !is_ident_token(&name_tok.text) {
            return None;
        }
        let mut k = i + 2;
        if toks.get(k).map(|t| t.text.as_str()) == Some("<") {
            k = skip_balanced(toks, k, "<", ">")?;
        }
        let (params, after) = parse_params(toks, k)?;
        let brace = self.scan_to_brace(after, false)?;
        Some(Header {
            name: name_tok.text.clone(),
            start_line: toks[i].line,
            parameter_count: params,
            brace_index: brace,
        })
    }

    fn try_go_func(&self, i: usize) -> Option<Header> {
        let toks = self.toks;
        let mut k = i + 1;
        let mut name = String::from("(anonymous)");
        if toks.get(k)?.text == "(" {
            // Either a method receiver or an anonymous function's params.
            let after = skip_balanced(toks, k, "(", ")")?;
            let next_is_named_method = toks
                .get(after)
                .map(|t| is_ident_token(&t.text))
                .unwrap_or(false)
                && toks.get(after + 1).map(|t| t.text.as_str()) == Some("(");
            if next_is_named_method {
                name = toks[after].text.clone();
                let (params, after_params) = parse_params(toks, after + 1)?;
                let brace = self.scan_to_brace(after_params, false)?;
                return Some(Header {
                    name,
                    start_line: toks[i].line,
                    parameter_count: params,
                    brace_index: brace,
                });
            }
            let (params, after_params) = parse_params(toks, k)?;
            let brace = self.scan_to_brace(after_params, false)?;
            return Some(Header {
                name,
                start_line: toks[i].line,
                parameter_count: params,
                brace_index: brace,
            });
        }
        if !is_ident_token(&toks[k].text) {
            return None;
        }
        name = toks[k].text.clone();
        k += 1;
        if toks.get(k).map(|t| t.text.as_str()) == Some("[") {
            k = skip_balanced(toks, k, "[", "]")?;
        }
        let (params, after) = parse_params(toks, k)?;
        let brace = self.scan_to_brace(after, false)?;
        Some(Header {
            name,
            start_line: toks[i].line,
            parameter_count: params,
            brace_index: brace,
        })
    }

    fn try_kotlin_fun(&self, i: usize) -> Option<Header> {
        let toks = self.toks;
        let mut k = i + 1;
        if toks.get(k).map(|t| t.text.as_str()) == Some("<") {
            k = skip_balanced(toks, k, "<", ">")?;
        }
        // Receiver chain: `fun String.countWords(...)`.
        let mut name = toks.get(k).filter(|t| is_ident_token(&t.text))?.text.clone();
        k += 1;
        while toks.get(k).map(|t| t.text.as_str()) == Some(".")
            && toks.get(k + 1).map(|t| is_ident_token(&t.text)).unwrap_or(false)
        {
            name = toks[k + 1].text.clone();
            k += 2;
        }
        if toks.get(k).map(|t| t.text.as_str()) == Some("<") {
            k = skip_balanced(toks, k, "<", ">")?;
        }
        let (params, after) = parse_params(toks, k)?;
        let brace = self.scan_to_brace(after, false)?;
        Some(Header {
            name,
            start_line: toks[i].line,
            parameter_count: params,
            brace_index: brace,
        })
    }

    fn try_swift_func(&self, i: usize) -> Option<Header> {
        let toks = self.toks;
        let mut k = i + 1;
        let name = toks.get(k).filter(|t| is_ident_token(&t.text))?.text.clone();
        k += 1;
        if toks.get(k).map(|t| t.text.as_str()) == Some("<") {
            k = skip_balanced(toks, k, "<", ">")?;
        }
        let (params, after) = parse_params(toks, k)?;
        let brace = self.scan_to_brace(after, false)?;
        Some(Header {
            name,
            start_line: toks[i].line,
            parameter_count: params,
            brace_index: brace,
        })
    }

    fn try_scala_def(&self, i: usize) -> Option<Header> {
        let toks = self.toks;
        let mut k = i + 1;
        let name = toks.get(k)?.text.clone();
        k += 1;
        if toks.get(k).map(|t| t.text.as_str()) == Some("[") {
            k = skip_balanced(toks, k, "[", "]")?;
        }
        let mut params = 0;
        while toks.get(k).map(|t| t.text.as_str()) == Some("(") {
            let (p, after) = parse_params(toks, k)?;
            params += p;
            k = after;
        }
        let brace = self.scan_to_brace(k, true)?;
        Some(Header {
            name,
            start_line: toks[i].line,
            parameter_count: params,
            brace_index: brace,
        })
    }

    /// `function name(args) {` / anonymous `function (args) {`.
    fn try_function_keyword(&self, i: usize) -> Option<Header> {
        let toks = self.toks;
        let mut k = i + 1;
        if toks.get(k).map(|t| t.text.as_str()) == Some("*") {
            k += 1;
        }
        let name = if toks.get(k).map(|t| is_ident_token(&t.text)).unwrap_or(false) {
            let n = toks[k].text.clone();
            k += 1;
            n
        } else {
            String::from("(anonymous)")
        };
        if toks.get(k).map(|t| t.text.as_str()) == Some("<") {
            k = skip_balanced(toks, k, "<", ">")?;
        }
        let (params, after) = parse_params(toks, k)?;
        let brace = self.scan_to_brace(after, false)?;
        Some(Header {
            name,
            start_line: toks[i].line,
            parameter_count: params,
            brace_index: brace,
        })
    }

    /// `- (ret)name:(type)arg ... {` Objective-C methods.
    fn try_objc_method(&self, i: usize) -> Option<Header> {
        let toks = self.toks;
        if toks.get(i + 1)?.text != "(" {
            return None;
        }
        let after_ret = skip_balanced(toks, i + 1, "(", ")")?;
        let name_tok = toks.get(after_ret)?;
        if !is_ident_token(&name_tok.text) {
            return None;
        }
        // Count selector segments as parameters.
        let mut k = after_ret + 1;
        let mut params = 0;
        let mut steps = 0;
        while k < toks.len() {
            steps += 1;
            if steps > 150 {
                return None;
            }
            match toks[k].text.as_str() {
                "{" => {
                    return Some(Header {
                        name: name_tok.text.clone(),
                        start_line: toks[i].line,
                        parameter_count: params,
                        brace_index: k,
                    })
                }
                ";" | "=" | "}" | ")" | "]" => return None,
                ":" => {
                    params += 1;
                    k += 1;
                    if toks.get(k).map(|t| t.text.as_str()) == Some("(") {
                        k = skip_balanced(toks, k, "(", ")")?;
                    }
                }
                "(" => {
                    k = skip_balanced(toks, k, "(", ")")?;
                }
                _ => k += 1,
            }
        }
        None
    }
}

/// Python: `def` headers, indentation-delimited bodies.
fn extract_python(lexed: &Lexed, source: &str) -> Vec<RawFunction> {
    let toks = &lexed.tokens;
    let syntax = syntax_for(LanguageId::Python);

    // Physical indent per line (tab counts as 8 columns).
    let mut indent_of = std::collections::HashMap::new();
    for (n, line) in source.lines().enumerate() {
        let mut indent = 0u32;
        for c in line.chars() {
            match c {
                ' ' => indent += 1,
                '\t' => indent += 8,
                _ => break,
            }
        }
        indent_of.insert(n as u32 + 1, indent);
    }

    // Bracket depth at the first token of each line; continuation lines
    // (depth > 0) never terminate a suite.
    let mut line_start_depth = std::collections::HashMap::new();
    let mut depth = 0i32;
    let mut prev_line = 0;
    for t in toks.iter() {
        if t.line != prev_line {
            line_start_depth.insert(t.line, depth);
            prev_line = t.line;
        }
        match t.text.as_str() {
            "(" | "[" | "{" => depth += 1,
            ")" | "]" | "}" => depth = (depth - 1).max(0),
            _ => {}
        }
    }

    let first_on_line = |i: usize| i == 0 || toks[i - 1].line != toks[i].line;

    let mut out: Vec<RawFunction> = Vec::new();
    let mut i = 0;
    while i < toks.len() {
        let is_def = toks[i].text == "def"
            && (first_on_line(i)
                || (i >= 1 && toks[i - 1].text == "async" && first_on_line(i - 1)));
        if !is_def {
            i += 1;
            continue;
        }
        let Some(name_tok) = toks.get(i + 1) else { break };
        let name = name_tok.text.clone();
        let def_line = toks[i].line;
        let def_indent = *indent_of.get(&def_line).unwrap_or(&0);

        let (params, mut k) = match parse_params(toks, i + 2) {
            Some(v) => v,
            None => (0, i + 2),
        };
        // Find the header-terminating colon (skip `-> annotation`).
        let mut colon_line = toks.get(k.saturating_sub(1)).map(|t| t.line).unwrap_or(def_line);
        let mut steps = 0;
        while k < toks.len() {
            steps += 1;
            if steps > 200 {
                break;
            }
            let t = toks[k].text.as_str();
            if t == ":" {
                colon_line = toks[k].line;
                k += 1;
                break;
            }
            if t == "(" || t == "[" {
                let close = if t == "(" { ")" } else { "]" };
                match skip_balanced(toks, k, t, close) {
                    Some(nk) => {
                        k = nk;
                        continue;
                    }
                    None => break,
                }
            }
            colon_line = toks[k].line;
            k += 1;
        }

        // Single-line body: more tokens on the colon line.
        let mut end_line = colon_line;
        let single_line = toks.get(k).map(|t| t.line == colon_line).unwrap_or(false);
        if !single_line {
            for &line in lexed.code_lines.range(colon_line + 1..) {
                let start_depth = *line_start_depth.get(&line).unwrap_or(&0);
                if start_depth > 0 {
                    end_line = line;
                    continue;
                }
                let ind = *indent_of.get(&line).unwrap_or(&0);
                if ind > def_indent {
                    end_line = line;
                } else {
                    break;
                }
            }
        }

        out.push(RawFunction {
            name,
            start_line: def_line,
            end_line,
            cyclomatic_complexity: 1,
            parameter_count: params,
        });
        i += 2;
    }

    // Attribute branch tokens to the innermost enclosing function.
    for t in toks.iter() {
        if !syntax.branch_tokens.contains(&t.text.as_str()) {
            continue;
        }
        let mut best: Option<usize> = None;
        for (idx, f) in out.iter().enumerate() {
            if f.start_line <= t.line && t.line <= f.end_line {
                match best {
                    Some(b) if out[b].start_line >= f.start_line => {}
                    _ => best = Some(idx),
                }
            }
        }
        if let Some(idx) = best {
            out[idx].cyclomatic_complexity += 1;
        }
    }
    // A `def` line's own `if` tokens (e.g. conditional defaults) were counted
    // above; the `def` keyword itself is not a branch token, so nothing to
    // correct here.
    out
}

/// Ruby and Lua: keyword-opened blocks closed by `end`.
fn extract_keyword_end(
    lexed: &Lexed,
    lang: LanguageId,
    syntax: &'static LanguageSyntax,
) -> Vec<RawFunction> {
    #[derive(PartialEq)]
    enum Kind {
        Function(usize),
        Block,
        Repeat,
    }
    let toks = &lexed.tokens;
    let mut out: Vec<RawFunction> = Vec::new();
    let mut stack: Vec<Kind> = Vec::new();
    // Line of the most recent loop keyword whose `do` is part of its own
    // statement (`while x do`, `for i=1,3 do`).
    let mut loop_line: Option<u32> = None;

    let first_on_line = |i: usize| i == 0 || toks[i - 1].line != toks[i].line;
    let ruby = lang == LanguageId::Ruby;

    let mut i = 0;
    while i < toks.len() {
        let t = toks[i].text.as_str();
        let line = toks[i].line;

        if syntax.branch_tokens.contains(&t) {
            if let Some(idx) = stack.iter().rev().find_map(|k| match k {
                Kind::Function(idx) => Some(*idx),
                _ => None,
            }) {
                out[idx].cyclomatic_complexity += 1;
            }
        }

        let def_kw = syntax.def_keywords[0];
        if t == def_kw {
            // Header: name chain, optional params.
            let mut k = i + 1;
            let mut name = String::from("(anonymous)");
            if toks.get(k).map(|t| is_ident_token(&t.text)).unwrap_or(false) {
                name = toks[k].text.clone();
                k += 1;
                while matches!(toks.get(k).map(|t| t.text.as_str()), Some(".") | Some(":"))
                    && toks.get(k + 1).map(|t| is_ident_token(&t.text)).unwrap_or(false)
                {
                    let sep = &toks[k].text;
                    name = format!("{}{}{}", name, sep, toks[k + 1].text);
                    k += 2;
                }
            } else if ruby && toks.get(k).map(|t| t.line) == Some(line) {
                // Operator-named methods: `def ==(other)`.
                if let Some(op) = toks.get(k) {
                    if op.text != "(" {
                        name = op.text.clone();
                        k += 1;
                    }
                }
            }
            let mut params = 0;
            if toks.get(k).map(|t| t.text.as_str()) == Some("(") {
                if let Some((p, after)) = parse_params(toks, k) {
                    params = p;
                    k = after;
                }
            } else if ruby {
                // Bare parameter list: `def foo a, b`.
                let mut saw_ident = false;
                let mut j = k;
                while toks.get(j).map(|t| t.line) == Some(line) {
                    match toks[j].text.as_str() {
                        "," => params += 1,
                        "=" => break,
                        s if is_ident_token(s) => saw_ident = true,
                        _ => {}
                    }
                    j += 1;
                }
                if saw_ident {
                    params += 1;
                }
            }
            // Ruby endless method: `def foo(a) = expr` has no `end`.
            let endless = ruby && toks.get(k).map(|t| t.text.as_str()) == Some("=");
            let idx = out.len();
            out.push(RawFunction {
                name,
                start_line: line,
                end_line: line,
                cyclomatic_complexity: 1,
                parameter_count: params,
            });
            if endless {
                let mut j = k + 1;
                while toks.get(j).map(|t| t.line) == Some(line) {
                    if syntax.branch_tokens.contains(&toks[j].text.as_str()) {
                        out[idx].cyclomatic_complexity += 1;
                    }
                    j += 1;
                }
            } else {
                stack.push(Kind::Function(idx));
            }
            i = k.max(i + 1);
            continue;
        }

        let opener = if ruby {
            match t {
                "class" | "module" | "case" | "begin" | "for" => true,
                "if" | "unless" | "while" | "until" => {
                    first_on_line(i)
                        || matches!(
                            toks.get(i.wrapping_sub(1)).map(|t| t.text.as_str()),
                            Some("=") | Some("(") | Some("||=") | Some("&&=")
                        )
                }
                "do" => loop_line != Some(line),
                _ => false,
            }
        } else {
            // Lua
            match t {
                "if" => true,
                "for" | "while" => {
                    loop_line = Some(line);
                    true
                }
                "do" => loop_line != Some(line),
                "repeat" => {
                    stack.push(Kind::Repeat);
                    i += 1;
                    continue;
                }
                _ => false,
            }
        };
        if opener {
            if ruby && matches!(t, "while" | "until" | "for") {
                loop_line = Some(line);
            }
            stack.push(Kind::Block);
            i += 1;
            continue;
        }

        match t {
            "end" => {
                if let Some(kind) = stack.pop() {
                    if let Kind::Function(idx) = kind {
                        out[idx].end_line = line;
                    }
                }
            }
            "until" if !ruby => {
                // Closes `repeat`; also counted as a branch above.
                if matches!(stack.last(), Some(Kind::Repeat)) {
                    stack.pop();
                }
            }
            _ => {}
        }
        i += 1;
    }

    let last_line = toks.last().map(|t| t.line).unwrap_or(1);
    for kind in stack {
        if let Kind::Function(idx) = kind {
            out[idx].end_line = last_line;
        }
    }
    out
}

/// Erlang: clause groups `name(Args) -> body.` merged by name/arity.
fn extract_erlang(lexed: &Lexed, syntax: &'static LanguageSyntax) -> Vec<RawFunction> {
    let toks = &lexed.tokens;
    let mut out: Vec<RawFunction> = Vec::new();
    let mut i = 0;

    let first_on_line = |i: usize| i == 0 || toks[i - 1].line != toks[i].line;

    while i < toks.len() {
        let t = toks[i].text.as_str();
        // Module attributes: `-module(m).`
        if t == "-" && first_on_line(i) {
            while i < toks.len() && toks[i].text != "." {
                i += 1;
            }
            i += 1;
            continue;
        }
        if is_ident_token(t) && toks.get(i + 1).map(|t| t.text.as_str()) == Some("(") {
            if let Some((params, after)) = parse_params(toks, i + 1) {
                // Guards may sit between the params and the arrow.
                let mut k = after;
                let mut arrow = None;
                let mut steps = 0;
                while k < toks.len() && steps < 100 {
                    match toks[k].text.as_str() {
                        "->" => {
                            arrow = Some(k);
                            break;
                        }
                        "." | ";" => break,
                        "(" => match skip_balanced(toks, k, "(", ")") {
                            Some(nk) => {
                                k = nk;
                                continue;
                            }
                            None => break,
                        },
                        _ => k += 1,
                    }
                    steps += 1;
                }
                if let Some(arrow_idx) = arrow {
                    let name = toks[i].text.clone();
                    let start_line = toks[i].line;
                    let mut cc = 1u32;
                    let mut block_depth = 0i32;
                    let mut paren_depth = 0i32;
                    let mut k = arrow_idx + 1;
                    let mut end_line = start_line;
                    while k < toks.len() {
                        let tk = toks[k].text.as_str();
                        match tk {
                            "case" | "if" | "receive" | "begin" | "try" => block_depth += 1,
                            "fun" => {
                                if toks.get(k + 1).map(|t| t.text.as_str()) == Some("(") {
                                    block_depth += 1;
                                }
                            }
                            "end" => block_depth = (block_depth - 1).max(0),
                            "(" | "[" | "{" => paren_depth += 1,
                            ")" | "]" | "}" => paren_depth = (paren_depth - 1).max(0),
                            "." if block_depth == 0 && paren_depth == 0 => {
                                end_line = toks[k].line;
                                k += 1;
                                break;
                            }
                            _ => {}
                        }
                        if syntax.branch_tokens.contains(&tk) {
                            // Branch alternatives: `;` only at alternative
                            // positions, never inside parens.
                            if tk != ";" || paren_depth == 0 {
                                cc += 1;
                            }
                        }
                        end_line = toks[k].line;
                        k += 1;
                    }
                    out.push(RawFunction {
                        name,
                        start_line,
                        end_line,
                        cyclomatic_complexity: cc,
                        parameter_count: params,
                    });
                    i = k;
                    continue;
                }
            }
        }
        i += 1;
    }

    // Merge consecutive clauses of the same function (separated by `;`,
    // the clause separator was already counted as a branch).
    let mut merged: Vec<RawFunction> = Vec::new();
    for f in out {
        match merged.last_mut() {
            Some(prev)
                if prev.name == f.name
                    && prev.parameter_count == f.parameter_count
                    && f.start_line <= prev.end_line + 1 =>
            {
                prev.end_line = f.end_line;
                // Clause bodies each start at complexity 1; keep one base.
                prev.cyclomatic_complexity += f.cyclomatic_complexity - 1;
            }
            _ => merged.push(f),
        }
    }
    merged
}

/// Fortran: `function` / `subroutine` units closed by `end`.
fn extract_fortran(lexed: &Lexed, syntax: &'static LanguageSyntax) -> Vec<RawFunction> {
    #[derive(PartialEq)]
    enum Unit {
        Function(usize),
        Container,
        Block,
    }
    let toks = &lexed.tokens;
    let mut out: Vec<RawFunction> = Vec::new();
    let mut stack: Vec<Unit> = Vec::new();

    let lower = |i: usize| toks[i].text.to_ascii_lowercase();
    let first_of_line_text = |i: usize| -> String {
        let line = toks[i].line;
        let mut j = i;
        while j > 0 && toks[j - 1].line == line {
            j -= 1;
        }
        toks[j].text.to_ascii_lowercase()
    };

    let mut i = 0;
    while i < toks.len() {
        let t = lower(i);
        let prev = if i > 0 { lower(i - 1) } else { String::new() };

        match t.as_str() {
            "function" | "subroutine" if prev != "end" => {
                let name = toks
                    .get(i + 1)
                    .map(|t| t.text.clone())
                    .unwrap_or_else(|| String::from("(anonymous)"));
                let params = toks
                    .get(i + 2)
                    .filter(|t| t.text == "(")
                    .and_then(|_| parse_params(toks, i + 2))
                    .map(|(p, _)| p)
                    .unwrap_or(0);
                let idx = out.len();
                out.push(RawFunction {
                    name,
                    start_line: toks[i].line,
                    end_line: toks[i].line,
                    cyclomatic_complexity: 1,
                    parameter_count: params,
                });
                stack.push(Unit::Function(idx));
                i += 2;
                continue;
            }
            "program" | "module" if prev != "end" => {
                stack.push(Unit::Container);
            }
            "then" if first_of_line_text(i) == "if" => {
                stack.push(Unit::Block);
            }
            "do" if prev != "end" => {
                stack.push(Unit::Block);
            }
            "select" if prev != "end" => {
                stack.push(Unit::Block);
            }
            "end" => {
                if let Some(unit) = stack.pop() {
                    if let Unit::Function(idx) = unit {
                        out[idx].end_line = toks[i].line;
                    }
                }
            }
            _ => {}
        }

        // `else if` counts (new decision point); `end if`, `end do`,
        // `end select` and the `case` in a `select case` header do not.
        let counted = syntax.branch_tokens.contains(&t.as_str())
            && match t.as_str() {
                "if" | "do" => prev != "end",
                "case" => prev != "select" && prev != "end",
                _ => true,
            };
        if counted {
            if let Some(idx) = stack.iter().rev().find_map(|u| match u {
                Unit::Function(idx) => Some(*idx),
                _ => None,
            }) {
                out[idx].cyclomatic_complexity += 1;
            }
        }
        i += 1;
    }

    let last_line = toks.last().map(|t| t.line).unwrap_or(1);
    for unit in stack {
        if let Unit::Function(idx) = unit {
            out[idx].end_line = last_line;
        }
    }
    out
}
