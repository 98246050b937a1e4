//! Enumeration caps, overridable via a key=value config file and CLI flags
//! (flags win over the file).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_elements: usize,
    pub max_oracle_n: usize,
    pub workers: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_elements: crate::extensions::DEFAULT_EXTENSION_CAP,
            max_oracle_n: crate::extensions::DEFAULT_ORACLE_N_CAP,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CapsOverride {
    pub max_elements: Option<usize>,
    pub max_oracle_n: Option<usize>,
    pub workers: Option<usize>,
}

impl Caps {
    /// Apply the file overrides, then the flag overrides on top.
    pub fn resolve(file: CapsOverride, flags: CapsOverride) -> Caps {
        let mut caps = Caps::default();
        for layer in [file, flags] {
            if let Some(v) = layer.max_elements {
                caps.max_elements = v;
            }
            if let Some(v) = layer.max_oracle_n {
                caps.max_oracle_n = v;
            }
            if let Some(v) = layer.workers {
                caps.workers = v;
            }
        }
        caps
    }
}

/// Parse `key=value` lines; blank lines and `#` comments are skipped.
pub fn parse_config(text: &str) -> Result<CapsOverride> {
    let mut out = CapsOverride::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Syntax {
            line: lineno + 1,
            col: 1,
            msg: format!("expected key=value, got '{line}'"),
        })?;
        let value: usize = value.trim().parse().map_err(|_| Error::Syntax {
            line: lineno + 1,
            col: 1,
            msg: format!("bad value '{}'", value.trim()),
        })?;
        match key.trim() {
            "max_elements" => out.max_elements = Some(value),
            "max_oracle_n" => out.max_oracle_n = Some(value),
            "workers" => out.workers = Some(value),
            other => {
                return Err(Error::Syntax {
                    line: lineno + 1,
                    col: 1,
                    msg: format!("unknown config key '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_resolve() {
        let file = parse_config("# comment\nmax_elements=8\nworkers = 4\n").unwrap();
        assert_eq!(file.max_elements, Some(8));
        assert_eq!(file.workers, Some(4));
        let flags = CapsOverride { max_elements: Some(15), ..Default::default() };
        let caps = Caps::resolve(file, flags);
        assert_eq!(caps.max_elements, 15); // flag wins
        assert_eq!(caps.workers, 4);
        assert_eq!(caps.max_oracle_n, 12); // default
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(parse_config("max_element=8\n").is_err());
        assert!(parse_config("max_elements eight\n").is_err());
    }
}
