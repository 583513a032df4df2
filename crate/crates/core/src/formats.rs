//! Reading and writing frameworks in the ICCMA file formats.
//!
//! * `apx`: `arg(NAME).` and `att(NAME,NAME).` statements, `%` comments.
//! * `tgf`: node ids one per line, a `#` line, then `id id` edges.
//! * `iccma23`: a `p af N` header, then `i j` attack lines over `1..=N`;
//!   lines starting with `#` are comments.

use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::framework::{ArgumentationFramework, FrameworkBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Apx,
    Tgf,
    Iccma23,
}

impl Format {
    pub const ALL: [Format; 3] = [Format::Apx, Format::Tgf, Format::Iccma23];

    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "apx" => Some(Format::Apx),
            "tgf" => Some(Format::Tgf),
            "af" | "i23" | "iccma23" => Some(Format::Iccma23),
            _ => None,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            Format::Apx => "apx",
            Format::Tgf => "tgf",
            Format::Iccma23 => "af",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Apx => "apx",
            Format::Tgf => "tgf",
            Format::Iccma23 => "iccma23",
        })
    }
}

impl FromStr for Format {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "apx" => Ok(Format::Apx),
            "tgf" => Ok(Format::Tgf),
            "iccma23" | "i23" | "af" => Ok(Format::Iccma23),
            _ => Err(ParseError::UnknownFormat(s.to_string())),
        }
    }
}

pub fn parse_framework(text: &str, format: Format) -> Result<ArgumentationFramework, ParseError> {
    match format {
        Format::Apx => parse_apx(text),
        Format::Tgf => parse_tgf(text),
        Format::Iccma23 => parse_iccma23(text),
    }
}

/// Renders `af`. The iccma23 format has no names, so arguments are
/// written as their 1-based index.
pub fn render_framework(af: &ArgumentationFramework, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Apx => {
            for name in af.names() {
                writeln!(out, "arg({name}).").unwrap();
            }
            for &(f, t) in af.attacks() {
                writeln!(out, "att({},{}).", af.name(f), af.name(t)).unwrap();
            }
        }
        Format::Tgf => {
            for name in af.names() {
                writeln!(out, "{name}").unwrap();
            }
            out.push_str("#\n");
            for &(f, t) in af.attacks() {
                writeln!(out, "{} {}", af.name(f), af.name(t)).unwrap();
            }
        }
        Format::Iccma23 => {
            writeln!(out, "p af {}", af.len()).unwrap();
            for &(f, t) in af.attacks() {
                writeln!(out, "{} {}", f + 1, t + 1).unwrap();
            }
        }
    }
    out
}

fn framework_err(line: usize) -> impl Fn(crate::error::FrameworkError) -> ParseError {
    move |source| ParseError::Framework { line, source }
}

fn finish(builder: FrameworkBuilder) -> Result<ArgumentationFramework, ParseError> {
    if builder.is_empty() {
        return Err(ParseError::Empty);
    }
    builder.build().map_err(framework_err(0))
}

struct Scanner<'a> {
    text: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Scanner<'a> {
    fn skip_blank(&mut self) {
        while let Some(&c) = self.text.get(self.pos) {
            match c {
                b'\n' => {
                    self.line += 1;
                    self.pos += 1;
                }
                b'%' => {
                    while self.text.get(self.pos).is_some_and(|&c| c != b'\n') {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn skip_inline_ws(&mut self) {
        while let Some(&c) = self.text.get(self.pos) {
            if c == b'\n' {
                self.line += 1;
            } else if !c.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        self.skip_inline_ws();
        match self.text.get(self.pos) {
            Some(&c) if c == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(&c) => Err(ParseError::malformed(
                self.line,
                format!("expected '{}', found '{}'", byte as char, c as char),
            )),
            None => Err(ParseError::malformed(
                self.line,
                format!("expected '{}', found end of input", byte as char),
            )),
        }
    }

    fn keyword(&mut self) -> &'a str {
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos]).unwrap_or("")
    }

    /// Reads a name up to the next ',' or ')'.
    fn name(&mut self) -> Result<&'a str, ParseError> {
        self.skip_inline_ws();
        let start = self.pos;
        while self
            .text
            .get(self.pos)
            .is_some_and(|&c| !matches!(c, b',' | b')' | b'(' | b'\n') && !c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.text[start..self.pos])
            .map_err(|_| ParseError::malformed(self.line, "invalid utf-8"))?;
        if name.is_empty() {
            return Err(ParseError::malformed(self.line, "missing argument name"));
        }
        Ok(name)
    }
}

fn parse_apx(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut builder = FrameworkBuilder::new();
    let mut pending = Vec::new();
    let mut sc = Scanner {
        text: text.as_bytes(),
        pos: 0,
        line: 1,
    };
    loop {
        sc.skip_blank();
        if sc.pos >= sc.text.len() {
            break;
        }
        let line = sc.line;
        match sc.keyword() {
            "arg" => {
                sc.expect(b'(')?;
                let name = sc.name()?;
                sc.expect(b')')?;
                sc.expect(b'.')?;
                builder.add_argument(name).map_err(framework_err(line))?;
            }
            "att" => {
                sc.expect(b'(')?;
                let from = sc.name()?;
                sc.expect(b',')?;
                let to = sc.name()?;
                sc.expect(b')')?;
                sc.expect(b'.')?;
                pending.push((line, from, to));
            }
            "" => {
                return Err(ParseError::malformed(
                    line,
                    format!("unexpected character '{}'", sc.text[sc.pos] as char),
                ))
            }
            other => {
                return Err(ParseError::malformed(
                    line,
                    format!("unknown statement '{other}'"),
                ))
            }
        }
    }
    for (line, from, to) in pending {
        builder
            .add_attack_by_name(from, to)
            .map_err(framework_err(line))?;
    }
    finish(builder)
}

fn parse_tgf(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut builder = FrameworkBuilder::new();
    let mut in_edges = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if !in_edges {
            if trimmed == "#" {
                in_edges = true;
                continue;
            }
            // trailing label after the id is ignored
            let id = trimmed.split_whitespace().next().unwrap_or_default();
            builder.add_argument(id).map_err(framework_err(line))?;
        } else {
            let mut parts = trimmed.split_whitespace();
            let (Some(from), Some(to)) = (parts.next(), parts.next()) else {
                return Err(ParseError::malformed(line, "expected 'source target'"));
            };
            builder
                .add_attack_by_name(from, to)
                .map_err(framework_err(line))?;
        }
    }
    finish(builder)
}

fn parse_iccma23(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut builder: Option<FrameworkBuilder> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match builder.as_mut() {
            None => {
                let n = match tokens.as_slice() {
                    ["p", "af", n] => n
                        .parse::<usize>()
                        .map_err(|_| ParseError::malformed(line, "bad argument count"))?,
                    _ => return Err(ParseError::malformed(line, "expected 'p af N' header")),
                };
                let mut b = FrameworkBuilder::new();
                for k in 1..=n {
                    b.add_argument(k.to_string()).map_err(framework_err(line))?;
                }
                builder = Some(b);
            }
            Some(b) => {
                let [from, to] = tokens.as_slice() else {
                    return Err(ParseError::malformed(line, "expected 'i j'"));
                };
                b.add_attack_by_name(from, to)
                    .map_err(framework_err(line))?;
            }
        }
    }
    finish(builder.ok_or(ParseError::Empty)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::FrameworkError;

    #[test]
    fn minimal_apx() {
        let af = parse_framework("arg(a). arg(b). att(a,b).", Format::Apx).unwrap();
        assert_eq!(af.len(), 2);
        assert_eq!(af.attacks(), &[(0, 1)]);
    }

    #[test]
    fn apx_is_whitespace_tolerant() {
        let text = "% comment\n  arg( a ) .\narg(b).\n\natt( a , b ).\natt(a,b).\n% done";
        let af = parse_framework(text, Format::Apx).unwrap();
        assert_eq!(af.names(), &["a", "b"]);
        assert_eq!(af.attacks().len(), 1);
    }

    #[test]
    fn apx_errors() {
        assert_eq!(
            parse_framework("att(a,b).", Format::Apx),
            Err(ParseError::Framework {
                line: 1,
                source: FrameworkError::UnknownArgument("a".into())
            })
        );
        assert!(matches!(
            parse_framework("arg(a).\narg(a).", Format::Apx),
            Err(ParseError::Framework {
                line: 2,
                source: FrameworkError::DuplicateArgument(_)
            })
        ));
        assert!(matches!(
            parse_framework("arg(a).\nargh(b).", Format::Apx),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_framework("arg(a)\narg(b).", Format::Apx),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert_eq!(
            parse_framework("% nothing\n", Format::Apx),
            Err(ParseError::Empty)
        );
    }

    #[test]
    fn tgf_with_labels() {
        let af = parse_framework("a first\nb\n#\na b\nb b\n", Format::Tgf).unwrap();
        assert_eq!(af.names(), &["a", "b"]);
        assert_eq!(af.attacks(), &[(0, 1), (1, 1)]);
        assert!(matches!(
            parse_framework("a\n#\na\n", Format::Tgf),
            Err(ParseError::Malformed { line: 3, .. })
        ));
    }

    #[test]
    fn iccma23() {
        let af = parse_framework("# c\np af 3\n1 2\n# c\n2 3\n", Format::Iccma23).unwrap();
        assert_eq!(af.names(), &["1", "2", "3"]);
        assert_eq!(af.attacks(), &[(0, 1), (1, 2)]);
        assert!(matches!(
            parse_framework("p af 2\n1 3\n", Format::Iccma23),
            Err(ParseError::Framework { line: 2, .. })
        ));
        assert!(matches!(
            parse_framework("1 2\n", Format::Iccma23),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert_eq!(
            parse_framework("p af 0\n", Format::Iccma23),
            Err(ParseError::Empty)
        );
    }

    #[test]
    fn single_argument_renders_as_one_statement() {
        let af = ArgumentationFramework::new(["a"], []).unwrap();
        assert_eq!(render_framework(&af, Format::Apx).trim(), "arg(a).");
    }

    #[test]
    fn format_names() {
        for f in Format::ALL {
            assert_eq!(f.to_string().parse::<Format>().unwrap(), f);
            assert_eq!(
                Format::from_path(Path::new(&format!("x.{}", f.extension()))),
                Some(f)
            );
        }
        assert!("json".parse::<Format>().is_err());
    }
}
