use super::PartitionDiagram;
use crate::error::{Error, Result};
use std::fmt;

impl PartitionDiagram {
    /// Parses the bracketed block notation, e.g. `[{1,-1},{2},{-2}]`.
    /// Whitespace is ignored.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[...]`, got `{text}`")))?;
        let mut blocks: Vec<Vec<i64>> = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::Parse(format!("expected `{{` at `{rest}`")))?;
            let close = body
                .find('}')
                .ok_or_else(|| Error::Parse("unterminated block".into()))?;
            let block = body[..close]
                .split(',')
                .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad point `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            rest = &body[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                if r.is_empty() {
                    return Err(Error::Parse("trailing comma".into()));
                }
                rest = r;
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected `,` at `{rest}`")));
            }
        }
        PartitionDiagram::from_blocks(n, &blocks)
    }
}

impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let pts: Vec<String> = b.iter().map(|p| p.to_string()).collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        write!(f, "[{}]", blocks.join(","))
    }
}
