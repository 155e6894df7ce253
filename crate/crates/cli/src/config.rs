//! Defaults read from `flagj.toml` in the working directory. Flags win.

use std::fs;
use std::io;
use std::path::Path;

use serde::Deserialize;

pub const CONFIG_FILE: &str = "flagj.toml";

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub space: Option<String>,
    pub degree: Option<String>,
    pub method: Option<String>,
}

impl Config {
    /// Missing file means empty defaults.
    pub fn load(dir: &Path) -> Result<Self, String> {
        match fs::read_to_string(dir.join(CONFIG_FILE)) {
            Ok(text) => toml::from_str(&text).map_err(|e| format!("{CONFIG_FILE}: {e}")),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Config::default()),
            Err(e) => Err(format!("{CONFIG_FILE}: {e}")),
        }
    }
}
