//! Lossless segmentation of text into word and separator spans.
//!
//! A word is a maximal run of ASCII letters, optionally joined by a single
//! hyphen or apostrophe that has a letter on both sides (`door-nail`,
//! `don't`). Everything else, including digits and non-ASCII characters,
//! accumulates into separator spans. Concatenating the spans in order gives
//! back the input byte for byte.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Separator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    /// Ordinal position in the token stream, dense from 0.
    pub index: usize,
}

impl<'a> Token<'a> {
    pub fn word(text: &'a str, index: usize) -> Self {
        Token { kind: TokenKind::Word, text, index }
    }

    pub fn separator(text: &'a str, index: usize) -> Self {
        Token { kind: TokenKind::Separator, text, index }
    }

    pub fn is_word(&self) -> bool {
        self.kind == TokenKind::Word
    }
}

/// Characters that may join two letter runs into one word.
///
/// U+2019 is accepted alongside the ASCII apostrophe because typeset
/// editions of English prose use it for contractions and possessives.
pub fn is_joiner(c: char) -> bool {
    matches!(c, '-' | '\'' | '\u{2019}')
}

pub fn tokenize(text: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut sep_start = 0;
    let mut pos = 0;

    while pos < bytes.len() {
        if !bytes[pos].is_ascii_alphabetic() {
            pos += utf8_width(bytes[pos]);
            continue;
        }

        let start = pos;
        let end = scan_word(text, start);
        if sep_start < start {
            let index = tokens.len();
            tokens.push(Token::separator(&text[sep_start..start], index));
        }
        let index = tokens.len();
        tokens.push(Token::word(&text[start..end], index));
        pos = end;
        sep_start = end;
    }

    if sep_start < text.len() {
        let index = tokens.len();
        tokens.push(Token::separator(&text[sep_start..], index));
    }
    tokens
}

pub fn detokenize(tokens: &[Token<'_>]) -> String {
    let len = tokens.iter().map(|t| t.text.len()).sum();
    let mut out = String::with_capacity(len);
    for token in tokens {
        out.push_str(token.text);
    }
    out
}

/// Iterate over word texts only.
pub fn words(text: &str) -> impl Iterator<Item = &str> {
    tokenize(text).into_iter().filter(|t| t.is_word()).map(|t| t.text)
}

// `start` must sit on an ASCII letter. Returns the byte offset one past the word.
fn scan_word(text: &str, start: usize) -> usize {
    let bytes = text.as_bytes();
    let mut end = start;
    loop {
        while end < bytes.len() && bytes[end].is_ascii_alphabetic() {
            end += 1;
        }
        let Some(c) = text[end..].chars().next() else {
            return end;
        };
        if !is_joiner(c) {
            return end;
        }
        let after = end + c.len_utf8();
        match bytes.get(after) {
            Some(b) if b.is_ascii_alphabetic() => end = after,
            _ => return end,
        }
    }
}

fn utf8_width(lead: u8) -> usize {
    match lead {
        0x00..=0x7f => 1,
        0xc0..=0xdf => 2,
        0xe0..=0xef => 3,
        _ => 4,
    }
}
