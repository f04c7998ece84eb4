use super::{Quiver, QuiverFile};
use crate::error::{QgrError, Result};

/// Parse either format: JSON when the text starts with `{`, edge list otherwise.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

/// `{"vertices": [...], "arrows": [{"name": .., "from": .., "to": ..}]}`
pub fn parse_json(text: &str) -> Result<Quiver> {
    let file: QuiverFile = serde_json::from_str(text).map_err(|e| {
        QgrError::parse(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    Quiver::new(
        file.vertices,
        file.arrows.into_iter().map(|a| (a.name, a.from, a.to)),
    )
}

/// One arrow per line, `name: from -> to`; `vertex v` declares a vertex
/// (needed only for isolated ones). `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Quiver> {
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut arrow_lines: Vec<usize> = Vec::new();
    let mut explicit = std::collections::HashSet::new();
    let declare = |v: &str, vertices: &mut Vec<String>| {
        if !vertices.iter().any(|x| x == v) {
            vertices.push(v.to_string());
        }
    };
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertex ") {
            let v = rest.trim();
            if v.is_empty() || v.contains(char::is_whitespace) {
                return Err(QgrError::parse(format!("line {lineno}"), "bad vertex name"));
            }
            if !explicit.insert(v.to_string()) {
                return Err(QgrError::parse(
                    format!("line {lineno}"),
                    format!("duplicate vertex `{v}`"),
                ));
            }
            declare(v, &mut vertices);
            continue;
        }
        let (name, edge) = line.split_once(':').ok_or_else(|| {
            QgrError::parse(format!("line {lineno}"), "expected `name: from -> to`")
        })?;
        let (from, to) = edge.split_once("->").ok_or_else(|| {
            QgrError::parse(format!("line {lineno}"), "expected `->` between vertices")
        })?;
        let (name, from, to) = (name.trim(), from.trim(), to.trim());
        for (what, s) in [("arrow", name), ("vertex", from), ("vertex", to)] {
            if s.is_empty() || s.contains(char::is_whitespace) {
                return Err(QgrError::parse(
                    format!("line {lineno}"),
                    format!("bad {what} name `{s}`"),
                ));
            }
        }
        if let Some(prev) = arrows.iter().position(|a| a.0 == name) {
            return Err(QgrError::parse(
                format!("line {lineno}"),
                format!(
                    "duplicate arrow `{name}` (first defined on line {})",
                    arrow_lines[prev]
                ),
            ));
        }
        declare(from, &mut vertices);
        declare(to, &mut vertices);
        arrows.push((name.to_string(), from.to_string(), to.to_string()));
        arrow_lines.push(lineno);
    }
    Quiver::new(vertices, arrows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices": ["1","2"], "arrows": [{"name":"x","from":"1","to":"1"}, {"name":"w","from":"2","to":"1"}]}"#;
        let q = parse_json(text).unwrap();
        assert_eq!(q.incidence_counts(), vec![vec![1, 1], vec![0, 0]]);
        assert_eq!(parse_json(&q.to_json()).unwrap(), q);
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_json("{\n  \"vertices\": [1,\n").unwrap_err();
        match err {
            QgrError::Parse { location, .. } => assert!(location.starts_with("line 2")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn edge_list_with_isolated_vertex() {
        let q = parse_edge_list("# fib\nx: 1 -> 1\na: 1 -> 2\nb: 2 -> 1\nvertex 3\n").unwrap();
        assert_eq!(q.vertices(), ["1", "2", "3"]);
        assert_eq!(q.arrow_count(), 3);
        assert_eq!(parse_quiver("vertex 1\n").unwrap().vertex_count(), 1);
        assert!(parse_quiver("").unwrap().is_empty());
    }

    #[test]
    fn edge_list_duplicates_carry_line_numbers() {
        let err = parse_edge_list("x: 1 -> 1\n\nx: 1 -> 2\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3") && msg.contains("line 1"), "{msg}");
        let err = parse_edge_list("vertex 1\nvertex 1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        assert!(parse_edge_list("x 1 -> 1").is_err());
        assert!(parse_edge_list("x: 1 => 1").is_err());
    }
}
