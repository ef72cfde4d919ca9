//! Flat `key = value` config files. Keys are long flag names without the
//! leading dashes; entries are spliced into the argument list right after the
//! subcommand so that flags given on the command line take precedence.

use std::ffi::OsString;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        if key.is_empty() {
            return Err(Error::Config(format!("line {}: empty key", lineno + 1)));
        }
        if key == "config" {
            return Err(Error::Config(format!("line {}: config files cannot nest", lineno + 1)));
        }
        out.push((key, value.trim().trim_matches('"').to_string()));
    }
    Ok(out)
}

pub fn load(path: &Path) -> Result<Vec<(String, String)>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}

/// Pull `--config FILE` out of `args` and splice the file's entries in after
/// the subcommand (the first argument after the program name that is not a flag).
pub fn expand(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut rest = Vec::with_capacity(args.len());
    let mut path = None;
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            let p = it.next().ok_or_else(|| Error::Config("--config needs a file".into()))?;
            path = Some(p);
        } else if let Some(p) = a.to_str().and_then(|s| s.strip_prefix("--config=")) {
            path = Some(OsString::from(p));
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else {
        return Ok(rest);
    };
    let entries = load(Path::new(&path))?;
    let mut injected = Vec::new();
    for (k, v) in entries {
        match v.as_str() {
            "true" => injected.push(OsString::from(format!("--{k}"))),
            "false" => {}
            _ => {
                injected.push(OsString::from(format!("--{k}")));
                injected.push(OsString::from(v));
            }
        }
    }
    let at = rest
        .iter()
        .skip(1)
        .position(|a| !a.to_string_lossy().starts_with('-'))
        .map(|p| p + 2)
        .unwrap_or(rest.len());
    rest.splice(at..at, injected);
    Ok(rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn parses_pairs_and_comments() {
        let kv = parse("# trap\ngamma = 10\n omega0_hz=2500\n\ntf-dimensionless = \"1.5\"\n").unwrap();
        assert_eq!(
            kv,
            vec![
                ("gamma".into(), "10".into()),
                ("omega0-hz".into(), "2500".into()),
                ("tf-dimensionless".into(), "1.5".into())
            ]
        );
        assert!(parse("gamma 10").is_err());
    }

    #[test]
    fn entries_go_after_subcommand() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "gamma = 10\nfamily = quintic").unwrap();
        let args: Vec<OsString> = ["sta", "protocol", "--config", f.path().to_str().unwrap(), "--gamma", "5"]
            .iter()
            .map(OsString::from)
            .collect();
        let out = expand(args).unwrap();
        let out: Vec<String> = out.iter().map(|s| s.to_string_lossy().into_owned()).collect();
        assert_eq!(out, ["sta", "protocol", "--gamma", "10", "--family", "quintic", "--gamma", "5"]);
    }
}
