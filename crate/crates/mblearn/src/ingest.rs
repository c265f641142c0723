//! Lexicon parsing and fixed-width windowing.
//!
//! Input is a letter-aligned pronunciation lexicon: one word per line, a tab,
//! then one composite class label per letter (silent letters carry a null
//! label such as `/-/0`). Each word expands into one instance token per
//! letter, the focus letter centered in a window padded with `_`.

use crate::error::{MblError, Result};
use crate::instance::{ClassLabel, FeatureVector, InstanceToken, PAD};

/// One lexicon entry: a word with one class label per letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordRecord {
    /// Ordinal among data lines in the source file.
    pub id: usize,
    pub letters: Vec<char>,
    pub labels: Vec<ClassLabel>,
}

/// Parses a lexicon from text. Comment lines (`#`) and blank lines are
/// skipped; word ids count data lines only. Duplicate words are kept.
pub fn parse_lexicon(text: &str) -> Result<Vec<WordRecord>> {
    let mut words = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim_end_matches(['\r']);
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (word, labels) = trimmed.split_once('\t').ok_or_else(|| MblError::Parse {
            line: lineno,
            msg: "expected `<word>\\t<label> <label> ...`".to_string(),
        })?;
        if word.is_empty() {
            return Err(MblError::Parse {
                line: lineno,
                msg: "empty word".to_string(),
            });
        }
        let letters: Vec<char> = word.chars().collect();
        if letters.contains(&PAD) {
            return Err(MblError::Parse {
                line: lineno,
                msg: format!("word `{word}` contains the padding symbol `{PAD}`"),
            });
        }
        let labels: Vec<ClassLabel> = labels
            .split_whitespace()
            .map(ClassLabel::new)
            .collect();
        if labels.len() != letters.len() {
            return Err(MblError::Parse {
                line: lineno,
                msg: format!("{} letters but {} labels", letters.len(), labels.len()),
            });
        }
        words.push(WordRecord {
            id: words.len(),
            letters,
            labels,
        });
    }
    Ok(words)
}

/// Expands a word into one window per letter.
///
/// Window `i` holds letter `i` at the middle position with `(width-1)/2`
/// letters of context on each side, padded with `_` beyond the word
/// boundaries; its class is the letter's label.
pub fn generate_windows(word: &WordRecord, width: usize) -> Result<Vec<InstanceToken>> {
    if width < 1 || width % 2 == 0 {
        return Err(MblError::EvenWidth(width));
    }
    let half = (width - 1) / 2;
    let len = word.letters.len();
    let mut tokens = Vec::with_capacity(len);
    for focus in 0..len {
        let mut values = Vec::with_capacity(width);
        for offset in 0..width {
            let pos = focus as isize - half as isize + offset as isize;
            if pos < 0 || pos >= len as isize {
                values.push(PAD);
            } else {
                values.push(word.letters[pos as usize]);
            }
        }
        tokens.push(InstanceToken {
            features: FeatureVector::new(values),
            class: word.labels[focus].clone(),
            word_id: word.id,
            position: focus,
        });
    }
    Ok(tokens)
}

/// Windows every word of a corpus in order.
pub fn generate_corpus_windows(words: &[WordRecord], width: usize) -> Result<Vec<InstanceToken>> {
    let mut tokens = Vec::new();
    for word in words {
        tokens.extend(generate_windows(word, width)?);
    }
    Ok(tokens)
}
