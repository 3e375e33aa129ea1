//! Serialization of presentations: plain text, GAP input, and JSON.

use crate::diagram::DiagramStyle;
use crate::words::{Presentation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Text,
    Gap,
    Json,
}

/// A word as `t1*t2^-1*t5`, with the letter prefix chosen by the caller
/// (`t` for the chain presentation, `T` for the ladder one).
pub fn render_word(w: &Word, prefix: &str) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.letters()
        .iter()
        .map(|&l| {
            if l > 0 {
                format!("{prefix}{l}")
            } else {
                format!("{prefix}{}^-1", -l)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// The same word in GAP syntax over `FreeGroup(n)` generators `F.1 … F.n`.
fn render_word_gap(w: &Word) -> String {
    if w.is_empty() {
        return "One(F)".to_string();
    }
    w.letters()
        .iter()
        .map(|&l| {
            if l > 0 {
                format!("F.{l}")
            } else {
                format!("F.{}^-1", -l)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn letter_prefix(style: DiagramStyle) -> &'static str {
    match style {
        DiagramStyle::Trigonal => "t",
        DiagramStyle::Weierstrass => "T",
    }
}

/// Renders a presentation in the requested format. Text is one relator per
/// line after a `gens:` header; GAP output defines `F`, `rels`, and the
/// quotient `G` and is directly loadable; JSON mirrors [`Presentation`].
pub fn render_presentation(p: &Presentation, style: DiagramStyle, format: ExportFormat) -> String {
    match format {
        ExportFormat::Text => {
            let prefix = letter_prefix(style);
            let mut out = format!("gens: {}\n", p.ngens);
            for r in &p.relators {
                out.push_str(&format!("rel: {}\n", render_word(&r.word, prefix)));
            }
            out
        }
        ExportFormat::Gap => {
            let mut out = format!("F := FreeGroup({});;\n", p.ngens);
            out.push_str("rels := [\n");
            for (k, r) in p.relators.iter().enumerate() {
                let sep = if k + 1 == p.relators.len() { "" } else { "," };
                out.push_str(&format!("  {}{sep}  # {}\n", render_word_gap(&r.word), r.name));
            }
            out.push_str("];;\n");
            out.push_str("G := F / rels;;\n");
            out
        }
        ExportFormat::Json => {
            let mut out = serde_json::to_string_pretty(p).expect("presentation serializes");
            out.push('\n');
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{trigonal_presentation, weierstrass_presentation};

    #[test]
    fn word_rendering() {
        let w = Word::from_letters(vec![1, 2, 1, -2, -1, -2]);
        assert_eq!(render_word(&w, "t"), "t1*t2*t1*t2^-1*t1^-1*t2^-1");
        assert_eq!(render_word(&Word::empty(), "t"), "1");
        assert_eq!(render_word_gap(&w), "F.1*F.2*F.1*F.2^-1*F.1^-1*F.2^-1");
    }

    #[test]
    fn text_export_headed_by_gens() {
        let p = trigonal_presentation(4).unwrap();
        let text = render_presentation(&p, DiagramStyle::Trigonal, ExportFormat::Text);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("gens: 10"));
        assert_eq!(
            lines.next(),
            Some("rel: t1*t2*t1*t2^-1*t1^-1*t2^-1"),
            "first relator is the (1,2) braid"
        );
        assert_eq!(text.lines().count(), 1 + p.relators.len());
        assert!(text.lines().skip(1).all(|l| l.starts_with("rel: ")));
    }

    #[test]
    fn weierstrass_text_uses_capital_letters() {
        let p = weierstrass_presentation(1).unwrap();
        let text = render_presentation(&p, DiagramStyle::Weierstrass, ExportFormat::Text);
        assert!(text.contains("rel: T"));
        assert!(!text.contains("rel: t"));
    }

    #[test]
    fn gap_export_is_loadable_shape() {
        let p = weierstrass_presentation(1).unwrap();
        let gap = render_presentation(&p, DiagramStyle::Weierstrass, ExportFormat::Gap);
        assert!(gap.starts_with("F := FreeGroup(4);;\n"));
        assert!(gap.contains("rels := ["));
        assert!(gap.ends_with("G := F / rels;;\n"));
        // one comma-terminated line per relator except the last
        let body: Vec<&str> = gap.lines().filter(|l| l.starts_with("  F.")).collect();
        assert_eq!(body.len(), p.relators.len());
    }

    #[test]
    fn json_export_round_trips() {
        let p = trigonal_presentation(1).unwrap();
        let json = render_presentation(&p, DiagramStyle::Trigonal, ExportFormat::Json);
        let back: Presentation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
