//! Plain-text Cayley tables: a header line `order n`, then `n` rows of `n`
//! space-separated indices. Index 0 must be the identity.

use std::fmt::Write as _;

use super::FiniteLoop;
use crate::error::{Error, Result};

pub fn write_table(q: &FiniteLoop) -> String {
    let n = q.order();
    let mut out = String::with_capacity(n * n * 4 + 16);
    writeln!(out, "order {n}").unwrap();
    for row in q.table().chunks(n) {
        let mut first = true;
        for v in row {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_table(text: &str) -> Result<FiniteLoop> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty table file".into()))?;
    let order: usize = header
        .strip_prefix("order")
        .map(str::trim)
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
    let mut table = Vec::with_capacity(order * order);
    let mut rows = 0;
    for line in lines {
        let before = table.len();
        for tok in line.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad entry {tok:?} in row {rows}")))?;
            table.push(v);
        }
        if table.len() - before != order {
            return Err(Error::Parse(format!(
                "row {rows} has {} entries, expected {order}",
                table.len() - before
            )));
        }
        rows += 1;
    }
    if rows != order {
        return Err(Error::Parse(format!("found {rows} rows, expected {order}")));
    }
    FiniteLoop::from_table(order, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::small_group;

    #[test]
    fn roundtrip() {
        let q8 = small_group("Q8").unwrap();
        let text = write_table(&q8);
        assert!(text.starts_with("order 8\n0 1 2 3 4 5 6 7\n"));
        assert_eq!(parse_table(&text).unwrap(), q8);
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_table(""), Err(Error::Parse(_))));
        assert!(matches!(parse_table("order x"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_table("order 2\n0 1\n1"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_table("order 2\n0 1\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_table("order 2\n0 1\n1 1\n"),
            Err(Error::NotLatin(_))
        ));
        assert_eq!(parse_table("order 2\n1 0\n0 1\n"), Err(Error::NoIdentity));
    }
}
