//! Loading of bundled integer-sequence fixtures in b-file form: optional
//! `#` comment lines (the first carries `offset=<k>`), then one
//! `<index> <value>` pair per line.

use num_bigint::BigInt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SequenceFixture {
    pub id: String,
    pub offset: i64,
    values: Vec<BigInt>,
}

impl SequenceFixture {
    pub fn parse(id: &str, text: &str) -> Result<SequenceFixture> {
        if !valid_id(id) {
            return Err(Error::Domain(format!(
                "fixture id '{id}' must be 'A' followed by six digits"
            )));
        }
        let mut offset: Option<i64> = None;
        let mut values = Vec::new();
        let mut next_index: Option<i64> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if offset.is_none() {
                    // the first comment line must carry offset=<k>
                    let field = comment
                        .split_whitespace()
                        .find_map(|w| w.strip_prefix("offset="))
                        .ok_or_else(|| Error::Syntax {
                            line: lineno + 1,
                            col: 1,
                            msg: format!("first comment of {id} must contain offset=<k>"),
                        })?;
                    offset = Some(field.parse().map_err(|_| Error::Syntax {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("bad offset '{field}'"),
                    })?);
                }
                continue;
            }
            let mut parts = line.split_whitespace();
            let (idx, val) = match (parts.next(), parts.next(), parts.next()) {
                (Some(i), Some(v), None) => (i, v),
                _ => {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("expected '<index> <value>', got '{line}'"),
                    })
                }
            };
            let idx: i64 = idx.parse().map_err(|_| Error::Syntax {
                line: lineno + 1,
                col: 1,
                msg: format!("bad index '{idx}'"),
            })?;
            let val = BigInt::from_str(val).map_err(|_| Error::Syntax {
                line: lineno + 1,
                col: 1,
                msg: format!("bad value '{val}'"),
            })?;
            let offset = *offset.get_or_insert(idx);
            let expect = next_index.unwrap_or(offset);
            if idx != expect {
                return Err(Error::Syntax {
                    line: lineno + 1,
                    col: 1,
                    msg: format!("indices must be contiguous: expected {expect}, got {idx}"),
                });
            }
            next_index = Some(idx + 1);
            values.push(val);
        }
        if values.is_empty() {
            return Err(Error::Domain(format!("fixture {id} has no values")));
        }
        Ok(SequenceFixture { id: id.to_string(), offset: offset.unwrap(), values })
    }

    /// Load `<dir>/<id>.txt`.
    pub fn load(dir: &Path, id: &str) -> Result<SequenceFixture> {
        let path = dir.join(format!("{id}.txt"));
        let text = std::fs::read_to_string(&path)?;
        SequenceFixture::parse(id, &text)
    }

    /// Value at the given absolute index (respecting the offset).
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        if index < self.offset {
            return None;
        }
        self.values.get((index - self.offset) as usize)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest valid index.
    pub fn last_index(&self) -> i64 {
        self.offset + self.values.len() as i64 - 1
    }
}

fn valid_id(id: &str) -> bool {
    id.len() == 7
        && id.starts_with('A')
        && id[1..].chars().all(|c| c.is_ascii_digit())
}
