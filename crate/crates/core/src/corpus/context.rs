use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// ISO 3166-1 alpha-2 country code, stored uppercase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Country([u8; 2]);

impl Country {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("ascii")
    }

    /// Parses a country field where `--` means unknown.
    pub fn parse_field(s: &str) -> Result<Option<Country>> {
        if s == "--" {
            Ok(None)
        } else {
            s.parse().map(Some)
        }
    }

    /// Parses a comma-separated list such as `FR,BE` (`--` allowed).
    pub fn parse_list(s: &str) -> Result<Vec<Option<Country>>> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(Country::parse_field)
            .collect()
    }
}

impl FromStr for Country {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let b = s.as_bytes();
        if b.len() == 2 && b.iter().all(u8::is_ascii_alphabetic) {
            Ok(Country([b[0].to_ascii_uppercase(), b[1].to_ascii_uppercase()]))
        } else {
            Err(Error::InvalidCountry(s.to_string()))
        }
    }
}

impl TryFrom<String> for Country {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Country> for String {
    fn from(c: Country) -> String {
        c.as_str().to_string()
    }
}

impl fmt::Display for Country {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A decade of birth or record, e.g. `1980`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Decade(i16);

impl Decade {
    pub fn new(year: i32, range: DecadeRange) -> Result<Decade> {
        if year % 10 != 0 || year < range.min || year > range.max {
            return Err(Error::InvalidDecade(year.to_string()));
        }
        Ok(Decade(year as i16))
    }

    pub fn year(self) -> i32 {
        self.0 as i32
    }

    /// Parses a decade field where `-` or `-1` means unknown.
    pub fn parse_field(s: &str, range: DecadeRange) -> Result<Option<Decade>> {
        match s {
            "-" | "-1" => Ok(None),
            _ => {
                let year: i32 = s.parse().map_err(|_| Error::InvalidDecade(s.to_string()))?;
                Decade::new(year, range).map(Some)
            }
        }
    }
}

impl fmt::Display for Decade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Inclusive range of accepted decades.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecadeRange {
    pub min: i32,
    pub max: i32,
}

impl Default for DecadeRange {
    fn default() -> Self {
        DecadeRange {
            min: 1600,
            max: 2020,
        }
    }
}

/// Where (and when) a group of observations comes from. `None` is unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ContextKey {
    pub country: Option<Country>,
    pub decade: Option<Decade>,
}

impl ContextKey {
    pub const UNKNOWN: ContextKey = ContextKey {
        country: None,
        decade: None,
    };

    pub fn new(country: Option<Country>, decade: Option<Decade>) -> Self {
        ContextKey { country, decade }
    }

    pub fn country_field(&self) -> String {
        self.country.map_or_else(|| "--".to_string(), |c| c.to_string())
    }

    pub fn decade_field(&self) -> String {
        self.decade.map_or_else(|| "-".to_string(), |d| d.to_string())
    }
}
