//! Text formats for getting groups in and out.
//!
//! `.gtab` is a multiplication table: the first non-comment line is the
//! order n, followed by n rows of n whitespace-separated element indices,
//! optionally followed by exactly n label lines. `#` starts a comment.
//!
//! `.gens` is a generating set of permutations: a `degree k` header line,
//! then one permutation per line as k space-separated images.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| match l.find('#') {
            Some(pos) => l[..pos].trim(),
            None => l.trim(),
        })
        .filter(|l| !l.is_empty())
}

fn parse_row(line: &str, expected: usize, what: &str) -> Result<Vec<usize>> {
    let row: Vec<usize> = line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("{what}: not a number: {tok:?}")))
        })
        .collect::<Result<_>>()?;
    if row.len() != expected {
        return Err(Error::Parse(format!(
            "{what}: expected {expected} entries, found {}",
            row.len()
        )));
    }
    Ok(row)
}

/// Parses a `.gtab` multiplication table, with optional trailing labels.
pub fn parse_gtab(text: &str) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty table file".into()))?;
    let order: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("first line must be the order, found {header:?}")))?;
    if order == 0 {
        return Err(Error::Parse("order must be positive".into()));
    }
    let mut table = Vec::with_capacity(order);
    for i in 0..order {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("table ends after {i} of {order} rows")))?;
        table.push(parse_row(line, order, &format!("row {i}"))?);
    }
    let rest: Vec<&str> = lines.collect();
    let labels = match rest.len() {
        0 => None,
        l if l == order => {
            let labels: Vec<String> = rest.iter().map(|s| s.to_string()).collect();
            let mut sorted = labels.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != order {
                return Err(Error::Parse("labels must be unique".into()));
            }
            Some(labels)
        }
        l => {
            return Err(Error::Parse(format!(
                "expected nothing or {order} label lines after the table, found {l} extra lines"
            )));
        }
    };
    FiniteGroup::from_table(table, labels)
}

/// Renders a group back out as `.gtab` text, labels included when present.
pub fn render_gtab(group: &FiniteGroup) -> String {
    let n = group.order();
    let mut out = String::new();
    out.push_str(&n.to_string());
    out.push('\n');
    for a in 0..n {
        let row: Vec<String> = group.table_row(a).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(labels) = group.labels() {
        for label in labels {
            out.push_str(label);
            out.push('\n');
        }
    }
    out
}

/// Parses a `.gens` permutation generating set and closes it into a group.
pub fn parse_gens(text: &str, cap: usize) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty generator file".into()))?;
    let degree: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["degree", d] => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree: {d:?}")))?,
        _ => {
            return Err(Error::Parse(format!(
                "first line must be `degree k`, found {header:?}"
            )));
        }
    };
    if degree == 0 {
        return Err(Error::Parse("degree must be positive".into()));
    }
    let mut gens = Vec::new();
    for (idx, line) in lines.enumerate() {
        gens.push(parse_row(line, degree, &format!("generator {idx}"))?);
    }
    if gens.is_empty() {
        return Err(Error::Parse("no generators".into()));
    }
    FiniteGroup::from_permutations_capped(degree, &gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GroupDefect;
    use crate::group::DEFAULT_CLOSURE_CAP;

    #[test]
    fn gtab_round_trip_with_labels() {
        let g = FiniteGroup::builtin("symmetric:3").unwrap();
        let text = render_gtab(&g);
        let back = parse_gtab(&text).unwrap();
        assert_eq!(back.order(), 6);
        for a in 0..6 {
            assert_eq!(back.table_row(a), g.table_row(a));
        }
        assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn gtab_without_labels_and_with_comments() {
        let text = "# the Klein four group\n4\n0 1 2 3\n1 0 3 2\n2 3 0 1 # row for b\n3 2 1 0\n";
        let g = parse_gtab(text).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.labels().is_none());
        assert_eq!(g.mul(1, 2), 3);
    }

    #[test]
    fn gtab_rejects_trailing_garbage() {
        let text = "2\n0 1\n1 0\nextra";
        match parse_gtab(text) {
            Err(Error::Parse(msg)) => assert!(msg.contains("1 extra"), "{msg}"),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn gtab_rejects_duplicate_labels() {
        let text = "2\n0 1\n1 0\nsame\nsame\n";
        assert!(matches!(parse_gtab(text), Err(Error::Parse(_))));
        // Numeric labels are legitimate (the quaternion group uses 1, -1, ...).
        let ok = parse_gtab("2\n0 1\n1 0\n1\n-1\n").unwrap();
        assert_eq!(ok.label(1), "-1");
    }

    #[test]
    fn gtab_rejects_short_rows_and_bad_tokens() {
        assert!(matches!(parse_gtab("2\n0\n1 0\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_gtab("2\n0 x\n1 0\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_gtab(""), Err(Error::Parse(_))));
    }

    #[test]
    fn gtab_surfaces_group_defects() {
        // Latin but the identity is not at index 0.
        let text = "2\n1 0\n0 1\n";
        match parse_gtab(text) {
            Err(Error::NotAGroup { defect, .. }) => assert_eq!(defect, GroupDefect::NoIdentity),
            other => panic!("expected NotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn gens_build_the_expected_group() {
        let text = "degree 3\n0 2 1 # a transposition\n1 0 2\n";
        let g = parse_gens(text, DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn gens_header_is_mandatory() {
        assert!(matches!(
            parse_gens("3\n0 2 1\n", DEFAULT_CLOSURE_CAP),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_gens("degree 3\n", DEFAULT_CLOSURE_CAP),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_gens("", DEFAULT_CLOSURE_CAP),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn gens_respect_the_cap() {
        let text = "degree 4\n1 2 3 0\n";
        assert!(matches!(
            parse_gens(text, 3),
            Err(Error::GroupTooLarge { cap: 3 })
        ));
    }

    #[test]
    fn gens_reject_non_permutations() {
        assert!(parse_gens("degree 3\n0 0 1\n", 100).is_err());
    }
}
