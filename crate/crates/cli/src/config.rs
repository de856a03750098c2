//! Run configuration: `key = value` files mirrored one-to-one by long flags.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Result};
use sha2::{Digest, Sha256};

pub struct Key {
    pub name: &'static str,
    pub default: Option<&'static str>,
    pub help: &'static str,
}

const fn key(name: &'static str, default: Option<&'static str>, help: &'static str) -> Key {
    Key { name, default, help }
}

/// Keys that only say where things go and never change the results.
const PLUMBING: &[&str] = &["output", "widths-out", "cache", "threads"];

pub const COMMANDS: &[(&str, &str, &[Key])] = &[
    (
        "pivots",
        "Pivot sequence and widths between two endpoints",
        &[
            key("alpha-minus", Some("0/1"), "slope p/q or continued fraction"),
            key("alpha-plus", None, "continued fraction: golden, e, factorial, [a0; a1, ...], [a0; (p1, ...)]"),
            key("depth", Some("10"), "number of pivots"),
            key("non-pivots", Some("20"), "number of non-pivot vertices to list"),
            key("output", None, "write JSON here instead of stdout"),
        ],
    ),
    (
        "trace-poly",
        "Trace polynomial of a slope over a base triangle",
        &[
            key("target", None, "slope p/q"),
            key("base", Some("0/1,1/0,1/1"), "base triangle alpha0,alpha1,beta1"),
            key("monomial-budget", Some("250000"), "largest allowed number of monomials"),
            key("output", None, "write JSON here instead of stdout"),
        ],
    ),
    (
        "algset",
        "Algebraic numbers of degree and length at most i",
        &[
            key("index", None, "the bound i"),
            key("max-index", Some("6"), "refuse indices above this"),
            key("cache", None, "cache directory (default: $PIVOTLAB_CACHE)"),
            key("output", None, "write JSON here instead of stdout"),
        ],
    ),
    (
        "construct",
        "Run the width-sequence construction",
        &[
            key("max-stage", Some("1"), "number of stages"),
            key("indices", Some("linear"), "pivot index n_i of each stage: linear (n_i = i) or a list 1,3,4"),
            key("filler", Some("1"), "width of pivots no stage fixes"),
            key("bound-constant", Some("16"), "C in the gap bound C / w^2"),
            key("tail", Some("0"), "filler widths appended after the last stage"),
            key("max-index", Some("6"), "largest algebraic set a stage may use"),
            key("monomial-budget", Some("250000"), "largest allowed number of monomials"),
            key("cache", None, "cache directory (default: $PIVOTLAB_CACHE)"),
            key("output", None, "transcript path (default: stdout)"),
            key("widths-out", None, "width file path"),
        ],
    ),
    (
        "approx",
        "Continued fraction and enclosing arc of the limit slope from a width file",
        &[
            key("widths", None, "width file written by construct"),
            key("terms", Some("20"), "continued fraction terms to list"),
            key("convergents", Some("10"), "convergents to list"),
            key("output", None, "write JSON here instead of stdout"),
        ],
    ),
    (
        "check",
        "Certify the gap inequality at a candidate trace triple",
        &[
            key("transcript", None, "transcript written by construct"),
            key("triple", None, "three algebraic numbers separated by ';' (p/q, i, -i, root:c0,c1,...@re,im)"),
            key("output", None, "write JSON here instead of stdout"),
        ],
    ),
    (
        "verify",
        "Run the invariant suites",
        &[
            key("samples", Some("100"), "oracle samples"),
            key("flips", Some("2000"), "random exact flips"),
            key("seed", Some("1"), "random seed"),
            key("inject-defect", Some("none"), "none or flip (breaks the flip rule to test the harness)"),
            key("transcript", None, "also replay this transcript"),
            key("output", None, "write JSON here instead of stdout"),
        ],
    ),
];

pub fn keys_of(command: &str) -> &'static [Key] {
    COMMANDS.iter().find(|c| c.0 == command).map(|c| c.2).unwrap_or(&[])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: String,
    pub values: BTreeMap<String, String>,
}

impl RunConfig {
    /// Defaults, then the file, then flags.
    pub fn resolve(command: &str, file: Option<&str>, flags: &[(String, String)]) -> Result<RunConfig> {
        let keys = keys_of(command);
        let mut values: BTreeMap<String, String> =
            keys.iter().filter_map(|k| k.default.map(|d| (k.name.to_string(), d.to_string()))).collect();
        if let Some(text) = file {
            let parsed = RunConfig::parse(text)?;
            if parsed.command != command && !parsed.command.is_empty() {
                bail!("config file is for {:?}, not {command:?}", parsed.command);
            }
            values.extend(parsed.values);
        }
        values.extend(flags.iter().cloned());
        for k in values.keys() {
            if !keys.iter().any(|x| x.name == k) {
                bail!("unknown setting {k:?} for {command}");
            }
        }
        Ok(RunConfig { command: command.to_string(), values })
    }

    /// `command = name` plus `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<RunConfig> {
        let mut command = String::new();
        let mut values = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| anyhow!("line {}: expected key = value", n + 1))?;
            let (k, v) = (k.trim(), v.trim());
            if k == "command" {
                command = v.to_string();
            } else if values.insert(k.to_string(), v.to_string()).is_some() {
                bail!("line {}: {k:?} set twice", n + 1);
            }
        }
        Ok(RunConfig { command, values })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command = {}\n", self.command);
        for (k, v) in &self.values {
            out.push_str(&format!("{k} = {v}\n"));
        }
        out
    }

    /// SHA-256 of the settings that affect results.
    pub fn hash(&self) -> String {
        let mut semantic = self.clone();
        semantic.values.retain(|k, _| !PLUMBING.contains(&k.as_str()));
        Sha256::digest(semantic.to_text().as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn get(&self, k: &str) -> Option<&str> {
        self.values.get(k).map(String::as_str)
    }

    pub fn require(&self, k: &str) -> Result<&str> {
        self.get(k).ok_or_else(|| anyhow!("missing required setting --{k}"))
    }

    pub fn parse_num<T: std::str::FromStr>(&self, k: &str) -> Result<T> {
        let v = self.require(k)?;
        v.parse().map_err(|_| anyhow!("--{k}: cannot parse {v:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flags() {
        let file = "command = construct\n# stages\nmax-stage = 2\nfiller = 3\n";
        let c = RunConfig::resolve("construct", Some(file), &[("filler".into(), "5".into())]).unwrap();
        assert_eq!(c.get("max-stage"), Some("2"));
        assert_eq!(c.get("filler"), Some("5"));
        assert_eq!(c.get("bound-constant"), Some("16"));
    }

    #[test]
    fn text_roundtrip() {
        let c = RunConfig::resolve("pivots", None, &[("alpha-plus".into(), "[0; (3)]".into())]).unwrap();
        let back = RunConfig::parse(&c.to_text()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn rejects_unknown_and_mismatched() {
        assert!(RunConfig::resolve("pivots", Some("bogus = 1"), &[]).is_err());
        assert!(RunConfig::resolve("pivots", Some("command = verify"), &[]).is_err());
        assert!(RunConfig::parse("no equals sign").is_err());
    }

    #[test]
    fn hash_ignores_plumbing() {
        let a = RunConfig::resolve("verify", None, &[]).unwrap();
        let b = RunConfig::resolve("verify", None, &[("output".into(), "x.json".into())]).unwrap();
        let c = RunConfig::resolve("verify", None, &[("seed".into(), "2".into())]).unwrap();
        assert_eq!(a.hash(), b.hash());
        assert_ne!(a.hash(), c.hash());
    }
}
