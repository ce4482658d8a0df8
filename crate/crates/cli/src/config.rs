//! `key = value` config files. Flags beat config entries, config entries beat
//! built-in defaults.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::CliError;

/// Keys a config file may set. Dashes and underscores are interchangeable.
const KEYS: &[&str] = &[
    "nu", "beta", "gamma", "x", "power", "n", "tol", "out", "format", "compare", "func", "scaled", "family", "suite",
    "case", "const", "expr", "which",
];

#[derive(Debug, Default)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(CliError::Usage(format!("config line {}: expected key = value", lineno + 1)));
            };
            let key = k.trim().replace('-', "_");
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Usage(format!("config line {}: unknown key `{}`", lineno + 1, k.trim())));
            }
            entries.insert(key, v.trim().to_string());
        }
        Ok(Config { entries })
    }

    /// The flag value if given, else the parsed config entry.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.entries.get(key) {
            None => Ok(None),
            Some(v) => {
                v.parse().map(Some).map_err(|e| CliError::Usage(format!("config key `{key}`: cannot parse `{v}`: {e}")))
            }
        }
    }

    /// Boolean switches: a flag can only turn them on.
    pub fn switch(&self, flag: bool, key: &str) -> Result<bool, CliError> {
        Ok(flag || self.pick::<bool>(None, key)?.unwrap_or(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_win_over_config() {
        let c = Config::parse("nu = 2\n# comment\nx-max = 1\n").unwrap_err();
        assert!(matches!(c, CliError::Usage(_)));
        let c = Config::parse("nu = 2 # trailing\nbeta=-0.5\ncompare = true").unwrap();
        assert_eq!(c.pick(Some(1.0), "nu").unwrap(), Some(1.0));
        assert_eq!(c.pick::<f64>(None, "nu").unwrap(), Some(2.0));
        assert_eq!(c.pick::<f64>(None, "beta").unwrap(), Some(-0.5));
        assert_eq!(c.pick::<f64>(None, "x").unwrap(), None);
        assert!(c.switch(false, "compare").unwrap());
    }

    #[test]
    fn bad_values_are_usage_errors() {
        let c = Config::parse("nu = abc").unwrap();
        assert!(c.pick::<f64>(None, "nu").is_err());
        assert!(Config::parse("just words").is_err());
    }
}
