use std::fmt;

use serde::{Deserialize, Serialize};
use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

/// A normalized first name: nonempty, ASCII `[a-z]` only.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct NameKey(String);

impl NameKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NameKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for NameKey {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for NameKey {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_lowercase()) {
            Ok(NameKey(s))
        } else {
            Err(format!("{s:?} is not a normalized name"))
        }
    }
}

impl From<NameKey> for String {
    fn from(k: NameKey) -> String {
        k.0
    }
}

fn is_separator(c: char) -> bool {
    c.is_whitespace() || matches!(c, '-' | '\'' | '.' | '\u{2010}' | '\u{2011}' | '\u{2019}')
}

/// Latin letters that carry no decomposition but have a conventional ASCII
/// spelling. Applied after lowercasing.
fn fold_latin(c: char, out: &mut String) {
    match c {
        'æ' => out.push_str("ae"),
        'œ' => out.push_str("oe"),
        'ø' => out.push('o'),
        'ß' => out.push_str("ss"),
        'ł' => out.push('l'),
        'đ' | 'ð' => out.push('d'),
        'þ' => out.push_str("th"),
        'ı' => out.push('i'),
        'ħ' => out.push('h'),
        'ŧ' => out.push('t'),
        'ŋ' => out.push('n'),
        'ĸ' => out.push('k'),
        _ => out.push(c),
    }
}

/// Normalizes a raw name into a [`NameKey`].
///
/// Compatibility decomposition, combining marks dropped, lowercased, split on
/// whitespace / hyphen / apostrophe / period, first token kept, anything
/// outside `[a-z]` dropped. Returns `None` when nothing survives (for example
/// names written entirely in a non-Latin script).
pub fn normalize_name(raw: &str) -> Option<NameKey> {
    let mut folded = String::with_capacity(raw.len());
    for c in raw.nfkd().filter(|c| !is_combining_mark(*c)) {
        for lc in c.to_lowercase() {
            fold_latin(lc, &mut folded);
        }
    }
    let token = folded.split(is_separator).find(|t| !t.is_empty())?;
    let key: String = token.chars().filter(|c| c.is_ascii_lowercase()).collect();
    if key.is_empty() {
        None
    } else {
        Some(NameKey(key))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn norm(s: &str) -> Option<String> {
        normalize_name(s).map(String::from)
    }

    #[test]
    fn worked_examples() {
        assert_eq!(norm("José").as_deref(), Some("jose"));
        assert_eq!(norm("Jean-Pierre Dupont").as_deref(), Some("jean"));
        assert_eq!(norm("Åsa").as_deref(), Some("asa"));
        assert_eq!(norm("李"), None);
    }

    #[test]
    fn decomposition_oracle() {
        // Å is U+00C5; its canonical decomposition is A + U+030A (ring above).
        let decomposed: Vec<char> = "Å".nfd().collect();
        assert_eq!(decomposed, vec!['A', '\u{030A}']);
        assert!(is_combining_mark('\u{030A}'));
        // precomposed and decomposed spellings meet at the same key
        assert_eq!(norm("A\u{030A}sa"), norm("\u{00C5}sa"));
    }

    #[test]
    fn separators_and_edges() {
        assert_eq!(norm("  Mary Ann").as_deref(), Some("mary"));
        assert_eq!(norm("O'Brien").as_deref(), Some("o"));
        assert_eq!(norm("J. R. R.").as_deref(), Some("j"));
        assert_eq!(norm("ＡＮＮＡ").as_deref(), Some("anna")); // fullwidth, NFKD
        assert_eq!(norm("Søren").as_deref(), Some("soren"));
        assert_eq!(norm("Łukasz").as_deref(), Some("lukasz"));
        assert_eq!(norm("Ævar").as_deref(), Some("aevar"));
        assert_eq!(norm("Zoë2").as_deref(), Some("zoe"));
        assert_eq!(norm(""), None);
        assert_eq!(norm("---"), None);
        assert_eq!(norm("李 Anna"), None);
    }

    #[test]
    fn rejects_unnormalized_keys() {
        assert!(NameKey::try_from("anna".to_string()).is_ok());
        assert!(NameKey::try_from("Anna".to_string()).is_err());
        assert!(NameKey::try_from(String::new()).is_err());
    }

    proptest! {
        #[test]
        fn idempotent_and_ascii(raw in "\\PC{0,24}") {
            if let Some(k) = normalize_name(&raw) {
                prop_assert!(k.as_str().bytes().all(|b| b.is_ascii_lowercase()));
                prop_assert_eq!(normalize_name(k.as_str()), Some(k.clone()));
            }
        }
    }
}
