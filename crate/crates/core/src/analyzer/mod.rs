//! Lightweight multi-language static analysis: per-function cyclomatic
//! complexity, method counts and token counts for the 18 general-purpose
//! languages the pipeline understands.
//!
//! Function detection is heuristic per language family (brace-delimited,
//! indentation, keyword-delimited); behavior is pinned by the golden fixture
//! corpus under `fixtures/golden`. Malformed code never errors: detection
//! degrades to fewer (or zero) functions, token counts stay generic.

mod functions;
pub mod langs;
mod lexer;

use std::collections::{BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

pub use langs::{LanguageId, ANALYZER_VERSION};

/// One detected function (or method) in one file version.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionInfo {
    pub name: String,
    pub start_line: u32,
    pub end_line: u32,
    pub cyclomatic_complexity: u32,
    pub parameter_count: u32,
    /// Code lines (non-comment, non-blank) within the function span.
    pub length_loc: u32,
}

/// Analysis of one file version.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileAnalysis {
    pub language: LanguageId,
    pub functions: Vec<FunctionInfo>,
    pub token_count: u32,
    /// Non-comment, non-blank lines of code in the whole file.
    pub nloc: u32,
}

impl FileAnalysis {
    pub fn empty(language: LanguageId) -> Self {
        FileAnalysis {
            language,
            functions: Vec::new(),
            token_count: 0,
            nloc: 0,
        }
    }

    /// Mean cyclomatic complexity over this file's functions (0 when there
    /// are none).
    pub fn mean_complexity(&self) -> f64 {
        if self.functions.is_empty() {
            return 0.0;
        }
        let total: u64 = self
            .functions
            .iter()
            .map(|f| f.cyclomatic_complexity as u64)
            .sum();
        total as f64 / self.functions.len() as f64
    }
}

/// Deterministic, case-insensitive extension-to-language mapping. Unknown
/// extensions map to `Unsupported`; this never fails.
pub fn detect_language(path: &Path) -> LanguageId {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
        .unwrap_or_default();
    LanguageId::from_extension(&ext)
}

/// Analyze one file version. Content is decoded as UTF-8 with replacement,
/// so binary or mis-encoded input degrades instead of failing.
pub fn analyze_file(content: &[u8], language: LanguageId) -> FileAnalysis {
    let text = String::from_utf8_lossy(content);
    let syntax = langs::syntax_for(language);
    let lexed = lexer::lex(&text, syntax);
    let raw = if language.is_supported() {
        functions::extract_functions(&lexed, language, &text)
    } else {
        Vec::new()
    };
    let functions = raw
        .into_iter()
        .map(|f| {
            let end_line = f.end_line.max(f.start_line);
            FunctionInfo {
                length_loc: lexed.nloc_in_span(f.start_line, end_line).max(1),
                name: f.name,
                start_line: f.start_line,
                end_line,
                cyclomatic_complexity: f.cyclomatic_complexity,
                parameter_count: f.parameter_count,
            }
        })
        .collect();
    FileAnalysis {
        language,
        functions,
        token_count: lexed.tokens.len() as u32,
        nloc: lexed.nloc(),
    }
}

/// Number of functions in the analysis.
pub fn count_methods(analysis: &FileAnalysis) -> usize {
    analysis.functions.len()
}

/// Count distinct functions touched by a change, matching functions across
/// the two versions by name and parameter count. A matched function touched
/// in either version counts once; unmatched (added/removed) functions count
/// separately.
pub fn methods_touched(
    analysis_before: &FileAnalysis,
    deleted_lines: &BTreeSet<u32>,
    analysis_after: &FileAnalysis,
    added_lines: &BTreeSet<u32>,
) -> usize {
    fn key(f: &FunctionInfo) -> (String, u32) {
        (f.name.clone(), f.parameter_count)
    }
    fn touches(f: &FunctionInfo, lines: &BTreeSet<u32>) -> bool {
        lines.range(f.start_line..=f.end_line).next().is_some()
    }

    let before_keys: HashMap<(String, u32), ()> = analysis_before
        .functions
        .iter()
        .map(|f| (key(f), ()))
        .collect();
    let after_keys: HashMap<(String, u32), ()> = analysis_after
        .functions
        .iter()
        .map(|f| (key(f), ()))
        .collect();

    #[derive(PartialEq, Eq, Hash)]
    enum Touched {
        Matched(String, u32),
        BeforeOnly(String, u32, u32),
        AfterOnly(String, u32, u32),
    }

    let mut touched = std::collections::HashSet::new();
    for f in &analysis_before.functions {
        if touches(f, deleted_lines) {
            let (name, p) = key(f);
            if after_keys.contains_key(&(name.clone(), p)) {
                touched.insert(Touched::Matched(name, p));
            } else {
                touched.insert(Touched::BeforeOnly(name, p, f.start_line));
            }
        }
    }
    for f in &analysis_after.functions {
        if touches(f, added_lines) {
            let (name, p) = key(f);
            if before_keys.contains_key(&(name.clone(), p)) {
                touched.insert(Touched::Matched(name, p));
            } else {
                touched.insert(Touched::AfterOnly(name, p, f.start_line));
            }
        }
    }
    touched.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn analyze(src: &str, lang: LanguageId) -> FileAnalysis {
        analyze_file(src.as_bytes(), lang)
    }

    #[test]
    fn detect_language_examples() {
        assert_eq!(detect_language(Path::new("Main.java")), LanguageId::Java);
        assert_eq!(detect_language(Path::new("script.pl")), LanguageId::Unsupported);
        assert_eq!(detect_language(Path::new("mod.RS")), LanguageId::Rust);
        assert_eq!(detect_language(Path::new("noext")), LanguageId::Unsupported);
    }

    #[test]
    fn empty_file() {
        let a = analyze("", LanguageId::Java);
        assert!(a.functions.is_empty());
        assert_eq!(a.token_count, 0);
        assert_eq!(a.nloc, 0);
    }

    #[test]
    fn straight_line_java_method_has_cc_1() {
        let src = "class A {\n  int f(int x) {\n    return x + 1;\n  }\n}\n";
        let a = analyze(src, LanguageId::Java);
        assert_eq!(a.functions.len(), 1);
        assert_eq!(a.functions[0].name, "f");
        assert_eq!(a.functions[0].cyclomatic_complexity, 1);
        assert_eq!(a.functions[0].parameter_count, 1);
    }

    #[test]
    fn c_function_with_if_and_and_has_cc_3() {
        let src = "int f(int a, int b) {\n  if (a > 0 && b > 0) {\n    return 1;\n  }\n  return 0;\n}\n";
        let a = analyze(src, LanguageId::C);
        assert_eq!(a.functions.len(), 1);
        assert_eq!(a.functions[0].cyclomatic_complexity, 3);
    }

    #[test]
    fn python_nested_defs_count_separately() {
        let src = "def outer(x):\n    def inner(y):\n        if y:\n            return 1\n        return 0\n    return inner(x)\n\ndef second():\n    pass\n";
        let a = analyze(src, LanguageId::Python);
        let names: Vec<_> = a.functions.iter().map(|f| f.name.as_str()).collect();
        assert_eq!(names, vec!["outer", "inner", "second"]);
        assert_eq!(count_methods(&a), 3);
        let inner = &a.functions[1];
        assert_eq!(inner.cyclomatic_complexity, 2);
        // The `if` belongs to inner, not outer.
        assert_eq!(a.functions[0].cyclomatic_complexity, 1);
    }

    #[test]
    fn cpp_free_functions_and_class_methods() {
        let src = "int free1() { return 0; }\nint free2() { return 1; }\nclass A {\npublic:\n  void m1() {}\n  int m2(int x) { return x; }\n};\n";
        let a = analyze(src, LanguageId::Cpp);
        assert_eq!(count_methods(&a), 4);
    }

    #[test]
    fn comment_only_changes_do_not_affect_complexity() {
        let plain = "int f(int x) {\n  if (x) { return 1; }\n  return 0;\n}\n";
        let commented =
            "// header comment\nint f(int x) {\n  // if (y) { this is a comment }\n  if (x) { return 1; }\n  return 0;\n}\n";
        let a = analyze(plain, LanguageId::C);
        let b = analyze(commented, LanguageId::C);
        assert_eq!(
            a.functions[0].cyclomatic_complexity,
            b.functions[0].cyclomatic_complexity
        );
        assert_eq!(a.functions[0].length_loc, b.functions[0].length_loc);
    }

    #[test]
    fn appending_an_if_increases_cc_by_one() {
        for (lang, base, extended) in [
            (
                LanguageId::C,
                "int f(int c) {\n  return c;\n}\n",
                "int f(int c) {\n  if (c) {}\n  return c;\n}\n",
            ),
            (
                LanguageId::Python,
                "def f(c):\n    return c\n",
                "def f(c):\n    if c:\n        pass\n    return c\n",
            ),
            (
                LanguageId::Ruby,
                "def f(c)\n  c\nend\n",
                "def f(c)\n  if c\n  end\n  c\nend\n",
            ),
            (
                LanguageId::Go,
                "func f(c bool) bool {\n  return c\n}\n",
                "func f(c bool) bool {\n  if c {\n  }\n  return c\n}\n",
            ),
        ] {
            let a = analyze(base, lang);
            let b = analyze(extended, lang);
            assert_eq!(a.functions.len(), 1, "{lang:?} base");
            assert_eq!(b.functions.len(), 1, "{lang:?} extended");
            assert_eq!(
                b.functions[0].cyclomatic_complexity,
                a.functions[0].cyclomatic_complexity + 1,
                "{lang:?}"
            );
        }
    }

    #[test]
    fn methods_touched_cases() {
        let before_src = "int f() {\n  return 1;\n}\nint g() {\n  return 2;\n}\n";
        let after_src = "int f() {\n  return 10;\n}\nint g() {\n  return 2;\n}\n";
        let before = analyze(before_src, LanguageId::C);
        let after = analyze(after_src, LanguageId::C);

        // No changed lines.
        assert_eq!(
            methods_touched(&before, &BTreeSet::new(), &after, &BTreeSet::new()),
            0
        );
        // Change confined to f's body (line 2 in both versions).
        let deleted: BTreeSet<u32> = [2].into();
        let added: BTreeSet<u32> = [2].into();
        assert_eq!(methods_touched(&before, &deleted, &after, &added), 1);
        // Changes spanning both functions.
        let deleted: BTreeSet<u32> = [2, 5].into();
        let added: BTreeSet<u32> = [2, 5].into();
        assert_eq!(methods_touched(&before, &deleted, &added_version(&after), &added), 2);
    }

    fn added_version(a: &FileAnalysis) -> FileAnalysis {
        a.clone()
    }

    #[test]
    fn unsupported_language_still_tokenizes() {
        let a = analyze("some words here", LanguageId::Unsupported);
        assert!(a.functions.is_empty());
        assert_eq!(a.token_count, 3);
        assert_eq!(a.nloc, 1);
    }

    #[test]
    fn binary_like_content_does_not_panic() {
        let bytes: Vec<u8> = (0u8..=255).collect();
        for lang in LanguageId::ALL_SUPPORTED {
            let _ = analyze_file(&bytes, lang);
        }
    }
}
