/// Lowercases, splits on whitespace and trims punctuation from each piece.
///
/// URLs and `@`-mentions are dropped; `#` is stripped from hashtags. Inner
/// punctuation (`don't`, `e-mail`) is kept.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split_whitespace().filter_map(token).collect()
}

fn token(piece: &str) -> Option<String> {
    let lower = piece.to_lowercase();
    let core = lower.trim_matches(|c: char| !(c.is_alphanumeric() || c == '@' || c == '#'));
    if core.starts_with('@') || is_url(core) {
        return None;
    }
    let word = core.trim_start_matches('#').trim_matches(|c: char| !c.is_alphanumeric());
    (!word.is_empty()).then(|| word.to_string())
}

fn is_url(s: &str) -> bool {
    s.starts_with("http://") || s.starts_with("https://") || s.starts_with("www.")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(tokenize("Nurses are heroes!"), ["nurses", "are", "heroes"]);
        assert_eq!(tokenize("@bob http://x.co #kind"), ["kind"]);
        assert!(tokenize("").is_empty());
    }

    #[test]
    fn punctuation_rules() {
        assert_eq!(tokenize("\"Don't\" (stop) -- now..."), ["don't", "stop", "now"]);
        assert_eq!(tokenize("(@alice) https://a.b/c?d=1 WWW.example.com"), Vec::<String>::new());
        assert_eq!(tokenize("#Blessed! ##love e-mail"), ["blessed", "love", "e-mail"]);
        assert_eq!(tokenize("ÉCOLE Straße"), ["école", "straße"]);
        assert_eq!(tokenize("a\tb\nc   d"), ["a", "b", "c", "d"]);
    }

    #[test]
    fn deterministic_and_idempotent() {
        let text = "The NURSE, smiled; #grateful @me";
        let once = tokenize(text);
        assert_eq!(once, tokenize(text));
        assert_eq!(tokenize(&once.join(" ")), once);
    }
}
