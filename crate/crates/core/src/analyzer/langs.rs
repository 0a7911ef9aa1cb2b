//! Per-language syntax tables: extension mapping, comment/string syntax,
//! branch tokens counted toward cyclomatic complexity, and the function
//! detection strategy. The table is versioned; golden fixtures are tied to
//! the version below and must be regenerated if the table changes.

use serde::{Deserialize, Serialize};

/// Version of the branch-token and syntax tables. Bump when any entry changes
/// and regenerate the golden fixtures.
pub const ANALYZER_VERSION: &str = "1.0";

/// The general-purpose languages the analyzer understands. Everything else
/// maps to `Unsupported`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LanguageId {
    C,
    Cpp,
    CSharp,
    Erlang,
    Fortran,
    Go,
    Java,
    JavaScript,
    Kotlin,
    Lua,
    ObjectiveC,
    Php,
    Python,
    Ruby,
    Rust,
    Scala,
    Swift,
    TypeScript,
    Unsupported,
}

impl LanguageId {
    pub const ALL_SUPPORTED: [LanguageId; 18] = [
        LanguageId::C,
        LanguageId::Cpp,
        LanguageId::CSharp,
        LanguageId::Erlang,
        LanguageId::Fortran,
        LanguageId::Go,
        LanguageId::Java,
        LanguageId::JavaScript,
        LanguageId::Kotlin,
        LanguageId::Lua,
        LanguageId::ObjectiveC,
        LanguageId::Php,
        LanguageId::Python,
        LanguageId::Ruby,
        LanguageId::Rust,
        LanguageId::Scala,
        LanguageId::Swift,
        LanguageId::TypeScript,
    ];

    pub fn is_supported(self) -> bool {
        self != LanguageId::Unsupported
    }

    /// Stable display name, also used for alphabetical tie-breaking when
    /// picking a project's main language.
    pub fn name(self) -> &'static str {
        match self {
            LanguageId::C => "C",
            LanguageId::Cpp => "C++",
            LanguageId::CSharp => "C#",
            LanguageId::Erlang => "Erlang",
            LanguageId::Fortran => "Fortran",
            LanguageId::Go => "Go",
            LanguageId::Java => "Java",
            LanguageId::JavaScript => "JavaScript",
            LanguageId::Kotlin => "Kotlin",
            LanguageId::Lua => "Lua",
            LanguageId::ObjectiveC => "Objective-C",
            LanguageId::Php => "PHP",
            LanguageId::Python => "Python",
            LanguageId::Ruby => "Ruby",
            LanguageId::Rust => "Rust",
            LanguageId::Scala => "Scala",
            LanguageId::Swift => "Swift",
            LanguageId::TypeScript => "TypeScript",
            LanguageId::Unsupported => "Unsupported",
        }
    }

    /// Map a lowercased file extension to a language.
    pub fn from_extension(ext: &str) -> LanguageId {
        match ext {
            "c" | "h" => LanguageId::C,
            "cpp" | "cc" | "cxx" | "c++" | "hpp" | "hh" | "hxx" => LanguageId::Cpp,
            "cs" => LanguageId::CSharp,
            "erl" | "hrl" => LanguageId::Erlang,
            "f" | "f77" | "f90" | "f95" | "f03" | "f08" | "for" | "ftn" => LanguageId::Fortran,
            "go" => LanguageId::Go,
            "java" => LanguageId::Java,
            "js" | "jsx" | "mjs" | "cjs" => LanguageId::JavaScript,
            "kt" | "kts" => LanguageId::Kotlin,
            "lua" => LanguageId::Lua,
            "m" | "mm" => LanguageId::ObjectiveC,
            "php" => LanguageId::Php,
            "py" => LanguageId::Python,
            "rb" => LanguageId::Ruby,
            "rs" => LanguageId::Rust,
            "scala" | "sc" => LanguageId::Scala,
            "swift" => LanguageId::Swift,
            "ts" | "tsx" => LanguageId::TypeScript,
            _ => LanguageId::Unsupported,
        }
    }
}

/// How function boundaries are recognized for a language family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionStyle {
    /// Bodies delimited by `{ ... }`. `def_keywords` lists definition
    /// keywords (`fn`, `func`, ...); when empty, the C-like
    /// `name(args) ... {` header heuristic is used. Some languages use both.
    Brace,
    /// Python: `def` header, body delimited by indentation.
    Indent,
    /// Ruby/Lua: keyword-opened blocks closed by `end`.
    KeywordEnd,
    /// Erlang: `name(Args) -> body.` clause groups.
    ErlangClause,
    /// Fortran: `function`/`subroutine` ... `end`.
    FortranUnit,
    /// No function detection (unsupported languages).
    None,
}

/// Comment, string and branching syntax for one language.
pub struct LanguageSyntax {
    pub line_comments: &'static [&'static str],
    pub block_comments: &'static [(&'static str, &'static str)],
    /// Branch-inducing tokens; each occurrence inside a function body adds 1
    /// to that function's cyclomatic complexity.
    pub branch_tokens: &'static [&'static str],
    /// Multi-character operators the lexer must keep whole. Listing a token
    /// here that is NOT in `branch_tokens` (e.g. `?.`) shields it from
    /// being miscounted as a shorter branch token.
    pub operators: &'static [&'static str],
    pub style: FunctionStyle,
    /// Definition keywords for `Brace` style (`fn`, `func`, `fun`, ...).
    pub def_keywords: &'static [&'static str],
    /// Whether the C-like `name(args) { ... }` header heuristic applies.
    pub clike_headers: bool,
    /// Keywords that may precede `( ... ) {` but never name a function.
    pub control_keywords: &'static [&'static str],
    /// Treat `#`-prefixed lines as preprocessor directives (skipped by the
    /// lexer but counted as code lines).
    pub preprocessor: bool,
    /// Keywords compared case-insensitively (Fortran).
    pub case_insensitive: bool,
    /// Triple-quoted string support (`"""`).
    pub triple_quotes: bool,
    /// Backtick-delimited raw strings / template literals.
    pub backtick_strings: bool,
}

const COMMON_OPERATORS: &[&str] = &[
    "<<=", ">>=", "...", "===", "!==", "?.", "?:", "??=", "&&=", "||=", "**=", "<=>", "->", "=>",
    "::", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "??", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "**", "..", ":=", "|>",
];

const CLIKE_CONTROL: &[&str] = &[
    "if", "else", "for", "while", "switch", "case", "catch", "return", "sizeof", "do", "new",
    "throw", "using", "foreach", "lock", "synchronized", "defer", "select", "when", "until",
    "unless", "typeof", "delete", "assert", "with",
];

static C_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "for", "while", "case", "&&", "||", "?"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &[],
    clike_headers: true,
    control_keywords: CLIKE_CONTROL,
    preprocessor: true,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static CPP_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "for", "while", "case", "catch", "&&", "||", "?"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &[],
    clike_headers: true,
    control_keywords: CLIKE_CONTROL,
    preprocessor: true,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static CSHARP_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "for", "foreach", "while", "case", "catch", "&&", "||", "?", "??"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &[],
    clike_headers: true,
    control_keywords: CLIKE_CONTROL,
    preprocessor: true,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static ERLANG_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["%"],
    block_comments: &[],
    branch_tokens: &["if", "case", "receive", ";", "andalso", "orelse"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::ErlangClause,
    def_keywords: &[],
    clike_headers: false,
    control_keywords: &[],
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static FORTRAN_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["!"],
    block_comments: &[],
    // `end if` / `end do` / `select case` exclusions are handled by the
    // scanner, which checks the preceding token.
    branch_tokens: &["if", "elseif", "do", "case", ".and.", ".or."],
    operators: &[".and.", ".or.", ".not.", ".eq.", ".ne.", ".lt.", ".le.", ".gt.", ".ge.", "::",
        "==", "/=", "<=", ">=", "=>", "**"],
    style: FunctionStyle::FortranUnit,
    def_keywords: &[],
    clike_headers: false,
    control_keywords: &[],
    preprocessor: false,
    case_insensitive: true,
    triple_quotes: false,
    backtick_strings: false,
};

static GO_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "for", "case", "&&", "||"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &["func"],
    clike_headers: false,
    control_keywords: CLIKE_CONTROL,
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: true,
};

static JAVA_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "for", "while", "case", "catch", "&&", "||", "?"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &[],
    clike_headers: true,
    control_keywords: CLIKE_CONTROL,
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static JAVASCRIPT_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "for", "while", "case", "catch", "&&", "||", "?", "??"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &["function"],
    clike_headers: true,
    control_keywords: CLIKE_CONTROL,
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: true,
};

static KOTLIN_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "for", "while", "when", "catch", "&&", "||", "?:"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &["fun"],
    clike_headers: false,
    control_keywords: CLIKE_CONTROL,
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: true,
    backtick_strings: false,
};

static LUA_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["--"],
    block_comments: &[("--[[", "]]")],
    branch_tokens: &["if", "elseif", "for", "while", "until", "and", "or"],
    operators: &["==", "~=", "<=", ">=", "..", "::"],
    style: FunctionStyle::KeywordEnd,
    def_keywords: &["function"],
    clike_headers: false,
    control_keywords: &[],
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static OBJC_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "for", "while", "case", "catch", "&&", "||", "?"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &[],
    clike_headers: true,
    control_keywords: CLIKE_CONTROL,
    preprocessor: true,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static PHP_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//", "#"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &[
        "if", "elseif", "for", "foreach", "while", "case", "catch", "&&", "||", "?", "and", "or",
    ],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &["function"],
    clike_headers: false,
    control_keywords: CLIKE_CONTROL,
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static PYTHON_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["#"],
    block_comments: &[],
    branch_tokens: &["if", "elif", "for", "while", "and", "or", "except"],
    operators: &["**", "//", "==", "!=", "<=", ">=", "->", ":=", "+=", "-=", "*=", "/="],
    style: FunctionStyle::Indent,
    def_keywords: &["def"],
    clike_headers: false,
    control_keywords: &[],
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: true,
    backtick_strings: false,
};

static RUBY_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["#"],
    block_comments: &[("=begin", "=end")],
    branch_tokens: &[
        "if", "elsif", "unless", "for", "while", "until", "when", "rescue", "&&", "||", "and",
        "or",
    ],
    operators: &["<=>", "**", "==", "!=", "<=", ">=", "=~", "..", "...", "::", "<<", "||=", "&&="],
    style: FunctionStyle::KeywordEnd,
    def_keywords: &["def"],
    clike_headers: false,
    control_keywords: &[],
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static RUST_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "while", "for", "match", "&&", "||", "?"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &["fn"],
    clike_headers: false,
    control_keywords: CLIKE_CONTROL,
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

static SCALA_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    // `case` covers both match arms and catch clauses; `match`/`catch`
    // themselves are not counted to avoid double counting.
    branch_tokens: &["if", "for", "while", "case", "&&", "||"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &["def"],
    clike_headers: false,
    control_keywords: CLIKE_CONTROL,
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: true,
    backtick_strings: false,
};

static SWIFT_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    // Plain `?` is excluded: optional types (`Int?`) would swamp the count.
    branch_tokens: &["if", "for", "while", "case", "catch", "guard", "&&", "||", "??"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &["func"],
    clike_headers: false,
    control_keywords: CLIKE_CONTROL,
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: true,
    backtick_strings: false,
};

static TYPESCRIPT_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &["//"],
    block_comments: &[("/*", "*/")],
    branch_tokens: &["if", "for", "while", "case", "catch", "&&", "||", "?", "??"],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::Brace,
    def_keywords: &["function"],
    clike_headers: true,
    control_keywords: CLIKE_CONTROL,
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: true,
};

static GENERIC_SYNTAX: LanguageSyntax = LanguageSyntax {
    line_comments: &[],
    block_comments: &[],
    branch_tokens: &[],
    operators: COMMON_OPERATORS,
    style: FunctionStyle::None,
    def_keywords: &[],
    clike_headers: false,
    control_keywords: &[],
    preprocessor: false,
    case_insensitive: false,
    triple_quotes: false,
    backtick_strings: false,
};

pub fn syntax_for(language: LanguageId) -> &'static LanguageSyntax {
    match language {
        LanguageId::C => &C_SYNTAX,
        LanguageId::Cpp => &CPP_SYNTAX,
        LanguageId::CSharp => &CSHARP_SYNTAX,
        LanguageId::Erlang => &ERLANG_SYNTAX,
        LanguageId::Fortran => &FORTRAN_SYNTAX,
        LanguageId::Go => &GO_SYNTAX,
        LanguageId::Java => &JAVA_SYNTAX,
        LanguageId::JavaScript => &JAVASCRIPT_SYNTAX,
        LanguageId::Kotlin => &KOTLIN_SYNTAX,
        LanguageId::Lua => &LUA_SYNTAX,
        LanguageId::ObjectiveC => &OBJC_SYNTAX,
        LanguageId::Php => &PHP_SYNTAX,
        LanguageId::Python => &PYTHON_SYNTAX,
        LanguageId::Ruby => &RUBY_SYNTAX,
        LanguageId::Rust => &RUST_SYNTAX,
        LanguageId::Scala => &SCALA_SYNTAX,
        LanguageId::Swift => &SWIFT_SYNTAX,
        LanguageId::TypeScript => &TYPESCRIPT_SYNTAX,
        LanguageId::Unsupported => &GENERIC_SYNTAX,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_mapping_is_total() {
        assert_eq!(LanguageId::from_extension("java"), LanguageId::Java);
        assert_eq!(LanguageId::from_extension("weird"), LanguageId::Unsupported);
        assert_eq!(LanguageId::from_extension(""), LanguageId::Unsupported);
    }

    #[test]
    fn every_supported_language_has_syntax() {
        for lang in LanguageId::ALL_SUPPORTED {
            let syn = syntax_for(lang);
            assert!(
                !syn.branch_tokens.is_empty(),
                "{} has no branch tokens",
                lang.name()
            );
        }
    }
}
