//! Line-oriented update/query stream format.
//!
//! ```text
//! init <n>
//! insert <center> <a1> <b1> [<a2> <b2> ...]
//! delete <a1> <b1> [<a2> <b2> ...]
//! query <v> <u>
//! # comment
//! ```
//!
//! One command per line, fields space-separated, UTF-8. `init` must appear
//! exactly once and first; every vertex id must lie in `1..=n` afterwards.

use dynreach::VertexId;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StreamCommand {
    Init { n: u32 },
    Insert { center: VertexId, edges: Vec<(VertexId, VertexId)> },
    Delete { edges: Vec<(VertexId, VertexId)> },
    Query { from: VertexId, to: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StreamError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("line {line}: {msg}")]
    Validation { line: usize, msg: String },
}

fn parse_error(line: usize, col: usize, msg: impl Into<String>) -> StreamError {
    StreamError::Parse { line, col, msg: msg.into() }
}

fn validation_error(line: usize, msg: impl Into<String>) -> StreamError {
    StreamError::Validation { line, msg: msg.into() }
}

/// Tokens with their 1-based starting columns.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s + 1, &line[s..]));
    }
    tokens
}

fn parse_u32(line_no: usize, col: usize, token: &str, what: &str) -> Result<u32, StreamError> {
    token
        .parse::<u32>()
        .map_err(|_| parse_error(line_no, col, format!("expected {what}, got '{token}'")))
}

fn parse_pairs(
    line_no: usize,
    tokens: &[(usize, &str)],
    what: &str,
) -> Result<Vec<(u32, u32)>, StreamError> {
    if tokens.is_empty() {
        return Err(parse_error(line_no, 1, format!("{what} needs at least one edge pair")));
    }
    if tokens.len() % 2 != 0 {
        let (col, tok) = tokens[tokens.len() - 1];
        return Err(parse_error(
            line_no,
            col,
            format!("odd endpoint count: '{tok}' has no partner"),
        ));
    }
    let mut pairs = Vec::with_capacity(tokens.len() / 2);
    for chunk in tokens.chunks(2) {
        let a = parse_u32(line_no, chunk[0].0, chunk[0].1, "a vertex id")?;
        let b = parse_u32(line_no, chunk[1].0, chunk[1].1, "a vertex id")?;
        pairs.push((a, b));
    }
    Ok(pairs)
}

/// Parse a whole stream. Commands come back in file order; the first
/// malformed token or range violation aborts with its location.
pub fn parse_stream(text: &str) -> Result<Vec<StreamCommand>, StreamError> {
    let mut commands = Vec::new();
    let mut n: Option<u32> = None;

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end();
        if line.trim_start().starts_with('#') {
            continue;
        }
        let tokens = tokenize(line);
        if tokens.is_empty() {
            continue;
        }
        let (verb_col, verb) = tokens[0];
        let args = &tokens[1..];

        let check_vertex = |line_no: usize, id: u32| -> Result<VertexId, StreamError> {
            let n = n.expect("checked after init");
            if id == 0 || id > n {
                return Err(validation_error(line_no, format!("vertex {id} out of range 1..={n}")));
            }
            Ok(VertexId(id))
        };

        match verb {
            "init" => {
                if n.is_some() {
                    return Err(validation_error(line_no, "duplicate init"));
                }
                if !commands.is_empty() {
                    return Err(validation_error(line_no, "init must be the first command"));
                }
                if args.len() != 1 {
                    return Err(parse_error(line_no, verb_col, "init takes exactly one field"));
                }
                let count = parse_u32(line_no, args[0].0, args[0].1, "a vertex count")?;
                if count == 0 {
                    return Err(validation_error(line_no, "vertex count must be at least 1"));
                }
                n = Some(count);
                commands.push(StreamCommand::Init { n: count });
            }
            "insert" => {
                if n.is_none() {
                    return Err(validation_error(line_no, "command before init"));
                }
                if args.is_empty() {
                    return Err(parse_error(line_no, verb_col, "insert needs a center and edge pairs"));
                }
                let center_raw = parse_u32(line_no, args[0].0, args[0].1, "a center vertex")?;
                let center = check_vertex(line_no, center_raw)?;
                let pairs = parse_pairs(line_no, &args[1..], "insert")?;
                let mut edges = Vec::with_capacity(pairs.len());
                for (a, b) in pairs {
                    edges.push((check_vertex(line_no, a)?, check_vertex(line_no, b)?));
                }
                commands.push(StreamCommand::Insert { center, edges });
            }
            "delete" => {
                if n.is_none() {
                    return Err(validation_error(line_no, "command before init"));
                }
                let pairs = parse_pairs(line_no, args, "delete")?;
                let mut edges = Vec::with_capacity(pairs.len());
                for (a, b) in pairs {
                    edges.push((check_vertex(line_no, a)?, check_vertex(line_no, b)?));
                }
                commands.push(StreamCommand::Delete { edges });
            }
            "query" => {
                if n.is_none() {
                    return Err(validation_error(line_no, "command before init"));
                }
                if args.len() != 2 {
                    return Err(parse_error(line_no, verb_col, "query takes exactly two fields"));
                }
                let a = parse_u32(line_no, args[0].0, args[0].1, "a vertex id")?;
                let b = parse_u32(line_no, args[1].0, args[1].1, "a vertex id")?;
                commands.push(StreamCommand::Query {
                    from: check_vertex(line_no, a)?,
                    to: check_vertex(line_no, b)?,
                });
            }
            other => {
                return Err(parse_error(line_no, verb_col, format!("unknown command '{other}'")));
            }
        }
    }

    if n.is_none() {
        return Err(validation_error(text.lines().count().max(1), "stream has no init command"));
    }
    Ok(commands)
}
