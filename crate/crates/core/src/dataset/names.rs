//! Candidate and reference name normalization.
//!
//! Names are compared on a folded key (whitespace collapsed, lowercased,
//! diacritics removed). Known localities map to a single canonical spelling;
//! anything else is passed through title-cased.

use std::collections::HashMap;
use std::sync::OnceLock;

use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

pub const VENTA_DE_CARDENAS: &str = "Venta de Cárdenas";
pub const PUERTO_LAPICE: &str = "Puerto Lápice";
pub const EL_TOBOSO: &str = "El Toboso";
pub const MUNERA: &str = "Munera";

/// The four reference points, in table column order.
pub const REFERENCES: [&str; 4] = [VENTA_DE_CARDENAS, PUERTO_LAPICE, EL_TOBOSO, MUNERA];

/// The 24 candidate localities, in table row order.
pub const CANDIDATES: [&str; 24] = [
    "Albaladejo",
    "Alcubillas",
    "Alhambra",
    "Almedina",
    "Cañamares",
    "Carrizosa",
    "Castellar de Santiago",
    "Cózar",
    "Fuenllana",
    "Membrilla",
    "Montiel",
    "Ossa de Montiel",
    "Puebla del Príncipe",
    "Ruidera",
    "Sta. Cruz de Cañamos",
    "La Solana",
    "Terrinches",
    "Torre de Juan Abad",
    "Torres de Montiel",
    "Torrenueva",
    "Villahermosa",
    "Villamanrique",
    "Villanueva de la Fuente",
    "Villanueva de los Infantes",
];

/// Raw spelling → canonical spelling.
const ALIASES: [(&str, &str); 1] = [("Fuencollana", "Fuenllana")];

/// Lowercase connective words kept lowercase when title-casing unknown names.
const PARTICLES: [&str; 7] = ["de", "del", "el", "la", "las", "los", "y"];

/// A canonical spelling together with the raw spellings that resolve to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalName {
    pub canonical: String,
    pub aliases: Vec<String>,
}

/// All known canonical names with their aliases.
pub fn canonical_names() -> Vec<CanonicalName> {
    REFERENCES
        .iter()
        .chain(CANDIDATES.iter())
        .map(|&canonical| CanonicalName {
            canonical: canonical.to_string(),
            aliases: ALIASES
                .iter()
                .filter(|(_, to)| *to == canonical)
                .map(|(from, _)| from.to_string())
                .collect(),
        })
        .collect()
}

fn known() -> &'static HashMap<String, &'static str> {
    static KNOWN: OnceLock<HashMap<String, &'static str>> = OnceLock::new();
    KNOWN.get_or_init(|| {
        let mut map = HashMap::new();
        for name in REFERENCES.iter().chain(CANDIDATES.iter()) {
            map.insert(fold(name), *name);
        }
        for (alias, canonical) in ALIASES {
            map.insert(fold(alias), canonical);
        }
        map
    })
}

fn collapse_whitespace(raw: &str) -> String {
    raw.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Comparison key: collapsed whitespace, lowercase, no diacritics.
pub fn fold(raw: &str) -> String {
    collapse_whitespace(raw)
        .to_lowercase()
        .nfd()
        .filter(|c| !is_combining_mark(*c))
        .collect()
}

fn title_word(word: &str, first: bool) -> String {
    let lower = word.to_lowercase();
    if !first && PARTICLES.contains(&lower.as_str()) {
        return lower;
    }
    let mut chars = lower.chars();
    match chars.next() {
        Some(head) => {
            let upper: String = head.to_uppercase().collect();
            // Multi-char uppercase forms (e.g. 'ß') would not survive a second pass.
            if upper.chars().count() == 1 {
                upper + chars.as_str()
            } else {
                lower
            }
        }
        None => lower,
    }
}

fn title_case(collapsed: &str) -> String {
    collapsed
        .split(' ')
        .enumerate()
        .map(|(i, word)| title_word(word, i == 0))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Normalize a raw candidate or reference name to its canonical spelling.
///
/// Idempotent: `normalize_name(&normalize_name(s)?)? == normalize_name(s)?`.
pub fn normalize_name(raw: &str) -> Result<String> {
    let collapsed = collapse_whitespace(raw);
    if collapsed.is_empty() {
        return Err(Error::EmptyName);
    }
    if let Some(canonical) = known().get(&fold(&collapsed)) {
        return Ok((*canonical).to_string());
    }
    Ok(title_case(&collapsed).nfc().collect())
}
