//! Parser for the DIV file format.
//!
//! ```text
//! # comment
//! divide <name>
//! crossings <n>
//! branch interval: 1.0 2.1 ...
//! branch circle: 3.0 4.2 ...
//! boundary: b1.start b1.end ...
//! ```
//!
//! The boundary line lists endpoint stubs counterclockwise along the disk
//! boundary and is omitted when there are no interval branches.

use crate::error::DivideError;

use super::{Branch, BranchKind, DivideMap, Stub, StubEnd, Visit};

pub fn parse_divide(text: &str) -> Result<DivideMap, DivideError> {
    let mut name: Option<String> = None;
    let mut crossings: Option<usize> = None;
    let mut branches: Vec<Branch> = Vec::new();
    let mut boundary: Vec<Stub> = Vec::new();
    let mut saw_boundary = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| DivideError::Syntax { line: line_no, msg };

        if let Some(rest) = line.strip_prefix("divide ") {
            if name.is_some() {
                return Err(err("duplicate divide line".into()));
            }
            let n = rest.trim();
            if n.is_empty() {
                return Err(err("divide name missing".into()));
            }
            name = Some(n.to_string());
        } else if let Some(rest) = line.strip_prefix("crossings ") {
            if crossings.is_some() {
                return Err(err("duplicate crossings line".into()));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid crossing count '{}'", rest.trim())))?;
            crossings = Some(n);
        } else if let Some(rest) = line.strip_prefix("branch ") {
            if saw_boundary {
                return Err(err("branch after boundary line".into()));
            }
            let (kind_str, visits_str) = rest
                .split_once(':')
                .ok_or_else(|| err("branch line missing ':'".into()))?;
            let kind = match kind_str.trim() {
                "interval" => BranchKind::Interval,
                "circle" => BranchKind::Circle,
                other => return Err(err(format!("unknown branch kind '{other}'"))),
            };
            let mut visits = Vec::new();
            for tok in visits_str.split_whitespace() {
                let (c, s) = tok
                    .split_once('.')
                    .ok_or_else(|| err(format!("visit '{tok}' is not <crossing>.<slot>")))?;
                let crossing: usize =
                    c.parse().map_err(|_| err(format!("invalid crossing id '{c}'")))?;
                let slot: u8 = s.parse().map_err(|_| err(format!("invalid slot '{s}'")))?;
                if slot > 3 {
                    return Err(err(format!("slot {slot} out of range 0..=3")));
                }
                visits.push(Visit { crossing, slot });
            }
            branches.push(Branch { kind, visits });
        } else if let Some(rest) = line.strip_prefix("boundary:") {
            if saw_boundary {
                return Err(err("duplicate boundary line".into()));
            }
            saw_boundary = true;
            for tok in rest.split_whitespace() {
                boundary.push(parse_stub(tok).map_err(|m| err(m))?);
            }
        } else {
            return Err(err(format!("unrecognized line '{line}'")));
        }
    }

    let name = name.ok_or(DivideError::Syntax { line: 0, msg: "missing divide line".into() })?;
    let crossings =
        crossings.ok_or(DivideError::Syntax { line: 0, msg: "missing crossings line".into() })?;
    DivideMap::new(name, crossings, branches, boundary)
}

fn parse_stub(tok: &str) -> Result<Stub, String> {
    let rest = tok.strip_prefix('b').ok_or_else(|| format!("stub '{tok}' must start with 'b'"))?;
    let (idx, end) =
        rest.split_once('.').ok_or_else(|| format!("stub '{tok}' is not b<i>.start|end"))?;
    let branch: usize = idx.parse().map_err(|_| format!("invalid branch index '{idx}'"))?;
    let end = match end {
        "start" => StubEnd::Start,
        "end" => StubEnd::End,
        other => return Err(format!("stub end '{other}' must be 'start' or 'end'")),
    };
    Ok(Stub { branch, end })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_loop_with_comments() {
        let text = "# the one-loop arc\ndivide loop1\ncrossings 1\nbranch interval: 1.0 1.1\nboundary: b1.start b1.end\n";
        let m = parse_divide(text).unwrap();
        assert_eq!(m.name(), "loop1");
        assert_eq!(m.crossings(), 1);
        assert_eq!(m.branches().len(), 1);
        assert_eq!(m.boundary().len(), 2);
    }

    #[test]
    fn rejects_malformed_visit() {
        let text = "divide x\ncrossings 1\nbranch interval: 1:0 1.1\nboundary: b1.start b1.end\n";
        assert!(matches!(parse_divide(text), Err(DivideError::Syntax { line: 3, .. })));
    }

    #[test]
    fn rejects_triple_visit() {
        let text =
            "divide x\ncrossings 1\nbranch interval: 1.0 1.1 1.2\nboundary: b1.start b1.end\n";
        assert!(matches!(parse_divide(text), Err(DivideError::Slot(_))));
    }

    #[test]
    fn rejects_bad_boundary() {
        let text = "divide x\ncrossings 1\nbranch interval: 1.0 1.1\nboundary: b1.start b1.start\n";
        assert!(matches!(parse_divide(text), Err(DivideError::Stub(_))));
        let text2 = "divide x\ncrossings 1\nbranch interval: 1.0 1.1\n";
        assert!(matches!(parse_divide(text2), Err(DivideError::Stub(_))));
    }

    #[test]
    fn circle_divide_without_boundary() {
        let text = "divide rings\ncrossings 0\nbranch circle:\n";
        let m = parse_divide(text).unwrap();
        assert_eq!(m.circle_count(), 1);
        assert!(m.boundary().is_empty());
    }
}
