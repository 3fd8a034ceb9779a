//! Size caps for the brute-force operations, overridable through the
//! HGRAPH_LIMITS environment variable (comma-separated key=value pairs,
//! e.g. `HGRAPH_LIMITS=thin=9,tww=9,fo=1000000`).

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Max vertices for independent-set / vertex-cover brute force.
    pub mis: usize,
    /// Max vertices for the thinness brute force.
    pub thin: usize,
    /// Max vertices for the twin-width search.
    pub tww: usize,
    /// Assignment budget for FO evaluation.
    pub fo: u64,
    /// Max rows/columns for the grid-rank oracle.
    pub grid: usize,
    /// Max framework vertices for connected-subset enumeration.
    pub subsets: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            mis: 20,
            thin: 8,
            tww: 8,
            fo: 10_000_000,
            grid: 20,
            subsets: 22,
        }
    }
}

impl Limits {
    /// Defaults overridden by the HGRAPH_LIMITS environment variable.
    pub fn from_env() -> Result<Self> {
        match std::env::var("HGRAPH_LIMITS") {
            Ok(text) => Self::parse(&text),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut limits = Self::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::InvalidInput(format!("HGRAPH_LIMITS entry {item:?} is not key=value"))
            })?;
            let parse_usize = || {
                value.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidInput(format!("HGRAPH_LIMITS value {value:?} is not a number"))
                })
            };
            match key.trim() {
                "mis" => limits.mis = parse_usize()?,
                "thin" => limits.thin = parse_usize()?,
                "tww" => limits.tww = parse_usize()?,
                "grid" => limits.grid = parse_usize()?,
                "subsets" => limits.subsets = parse_usize()?,
                "fo" => {
                    limits.fo = value.trim().parse::<u64>().map_err(|_| {
                        Error::InvalidInput(format!(
                            "HGRAPH_LIMITS value {value:?} is not a number"
                        ))
                    })?
                }
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown HGRAPH_LIMITS key {other:?}"
                    )))
                }
            }
        }
        Ok(limits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let l = Limits::parse("thin=9, tww=10,fo=500").unwrap();
        assert_eq!(l.thin, 9);
        assert_eq!(l.tww, 10);
        assert_eq!(l.fo, 500);
        assert_eq!(l.mis, Limits::default().mis);
    }

    #[test]
    fn bad_entries_rejected() {
        assert!(Limits::parse("thin").is_err());
        assert!(Limits::parse("thin=abc").is_err());
        assert!(Limits::parse("nope=3").is_err());
    }
}
