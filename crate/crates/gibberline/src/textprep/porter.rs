//! Porter suffix-stripping stemmer (the original five-step algorithm).
//!
//! Operates on lowercase ASCII words. Words shorter than three letters or
//! containing non-ASCII-alphabetic characters are returned unchanged, so the
//! stem of a token is always non-empty.

/// Stems a lowercase word. Pure and deterministic.
pub fn stem(word: &str) -> String {
    if word.len() < 3 || !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return word.to_string();
    }
    let mut s = Stemmer {
        b: word.as_bytes().to_vec(),
    };
    s.step_1a();
    s.step_1b();
    s.step_1c();
    s.step_2();
    s.step_3();
    s.step_4();
    s.step_5a();
    s.step_5b();
    String::from_utf8(s.b).expect("ascii input stays ascii")
}

struct Stemmer {
    b: Vec<u8>,
}

impl Stemmer {
    // y counts as a consonant at position 0 or after a vowel, and as a
    // vowel after a consonant.
    fn is_consonant(&self, i: usize) -> bool {
        match self.b[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.is_consonant(i - 1),
            _ => true,
        }
    }

    /// The measure m of b[..len]: the number of VC sequences in the
    /// pattern C?(VC)^m V?.
    fn measure(&self, len: usize) -> usize {
        let mut i = 0;
        while i < len && self.is_consonant(i) {
            i += 1;
        }
        let mut m = 0;
        loop {
            while i < len && !self.is_consonant(i) {
                i += 1;
            }
            if i == len {
                return m;
            }
            m += 1;
            while i < len && self.is_consonant(i) {
                i += 1;
            }
            if i == len {
                return m;
            }
        }
    }

    fn has_vowel(&self, len: usize) -> bool {
        (0..len).any(|i| !self.is_consonant(i))
    }

    fn ends_double_consonant(&self) -> bool {
        let n = self.b.len();
        n >= 2 && self.b[n - 1] == self.b[n - 2] && self.is_consonant(n - 1)
    }

    // *o: stem ends cvc where the final c is not w, x or y.
    fn ends_cvc(&self, len: usize) -> bool {
        if len < 3 {
            return false;
        }
        let last = self.b[len - 1];
        self.is_consonant(len - 3)
            && !self.is_consonant(len - 2)
            && self.is_consonant(len - 1)
            && !matches!(last, b'w' | b'x' | b'y')
    }

    fn ends(&self, suffix: &str) -> bool {
        self.b.ends_with(suffix.as_bytes())
    }

    fn stem_len(&self, suffix: &str) -> usize {
        self.b.len() - suffix.len()
    }

    fn replace(&mut self, suffix: &str, replacement: &str) {
        let at = self.stem_len(suffix);
        self.b.truncate(at);
        self.b.extend_from_slice(replacement.as_bytes());
    }

    /// Applies `suffix -> replacement` if the stem measure is positive.
    /// Returns true when the suffix matched, fired or not.
    fn rule_m_gt(&mut self, suffix: &str, replacement: &str, min_m: usize) -> bool {
        if !self.ends(suffix) {
            return false;
        }
        if self.measure(self.stem_len(suffix)) > min_m {
            self.replace(suffix, replacement);
        }
        true
    }

    fn step_1a(&mut self) {
        if self.ends("sses") || self.ends("ies") {
            self.b.truncate(self.b.len() - 2);
        } else if self.ends("s") && !self.ends("ss") {
            self.b.pop();
        }
    }

    fn step_1b(&mut self) {
        if self.ends("eed") {
            if self.measure(self.stem_len("eed")) > 0 {
                self.b.pop();
            }
            return;
        }
        let removed = if self.ends("ed") && self.has_vowel(self.stem_len("ed")) {
            self.b.truncate(self.b.len() - 2);
            true
        } else if self.ends("ing") && self.has_vowel(self.stem_len("ing")) {
            self.b.truncate(self.b.len() - 3);
            true
        } else {
            false
        };
        if !removed {
            return;
        }
        if self.ends("at") || self.ends("bl") || self.ends("iz") {
            self.b.push(b'e');
        } else if self.ends_double_consonant()
            && !matches!(self.b[self.b.len() - 1], b'l' | b's' | b'z')
        {
            self.b.pop();
        } else if self.measure(self.b.len()) == 1 && self.ends_cvc(self.b.len()) {
            self.b.push(b'e');
        }
    }

    fn step_1c(&mut self) {
        // The vowel condition applies to the stem, excluding the y itself.
        if self.ends("y") && self.has_vowel(self.b.len() - 1) {
            let n = self.b.len();
            self.b[n - 1] = b'i';
        }
    }

    fn step_2(&mut self) {
        // "bli" -> "ble" and "logi" -> "log" follow the reference
        // implementation rather than the published table.
        const RULES: &[(&str, &str)] = &[
            ("ational", "ate"),
            ("tional", "tion"),
            ("enci", "ence"),
            ("anci", "ance"),
            ("izer", "ize"),
            ("bli", "ble"),
            ("alli", "al"),
            ("entli", "ent"),
            ("eli", "e"),
            ("ousli", "ous"),
            ("ization", "ize"),
            ("ation", "ate"),
            ("ator", "ate"),
            ("alism", "al"),
            ("iveness", "ive"),
            ("fulness", "ful"),
            ("ousness", "ous"),
            ("aliti", "al"),
            ("iviti", "ive"),
            ("biliti", "ble"),
            ("logi", "log"),
        ];
        for &(suffix, replacement) in RULES {
            if self.rule_m_gt(suffix, replacement, 0) {
                return;
            }
        }
    }

    fn step_3(&mut self) {
        const RULES: &[(&str, &str)] = &[
            ("icate", "ic"),
            ("ative", ""),
            ("alize", "al"),
            ("iciti", "ic"),
            ("ical", "ic"),
            ("ful", ""),
            ("ness", ""),
        ];
        for &(suffix, replacement) in RULES {
            if self.rule_m_gt(suffix, replacement, 0) {
                return;
            }
        }
    }

    fn step_4(&mut self) {
        const SUFFIXES: &[&str] = &[
            "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement", "ment", "ent",
            "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
        ];
        for &suffix in SUFFIXES {
            if !self.ends(suffix) {
                continue;
            }
            let at = self.stem_len(suffix);
            // "ion" only drops after s or t.
            if suffix == "ion" && !(at > 0 && matches!(self.b[at - 1], b's' | b't')) {
                continue;
            }
            if self.measure(at) > 1 {
                self.b.truncate(at);
            }
            return;
        }
    }

    fn step_5a(&mut self) {
        if !self.ends("e") {
            return;
        }
        let at = self.b.len() - 1;
        let m = self.measure(at);
        if m > 1 || (m == 1 && !self.ends_cvc(at)) {
            self.b.pop();
        }
    }

    fn step_5b(&mut self) {
        if self.b.last() == Some(&b'l') && self.ends_double_consonant() && self.measure(self.b.len()) > 1
        {
            self.b.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::stem;

    #[test]
    fn paper_examples() {
        assert_eq!(stem("caresses"), "caress");
        assert_eq!(stem("sky"), "sky");
        assert_eq!(stem("relational"), "relat");
        assert_eq!(stem("ponies"), "poni");
        assert_eq!(stem("cats"), "cat");
        assert_eq!(stem("agreed"), "agre");
        assert_eq!(stem("motoring"), "motor");
        assert_eq!(stem("happy"), "happi");
        assert_eq!(stem("conditional"), "condit");
        assert_eq!(stem("rational"), "ration");
        assert_eq!(stem("triplicate"), "triplic");
        assert_eq!(stem("dependent"), "depend");
        assert_eq!(stem("controll"), "control");
        assert_eq!(stem("roll"), "roll");
    }

    #[test]
    fn short_and_non_ascii_words_pass_through() {
        assert_eq!(stem("as"), "as");
        assert_eq!(stem("α"), "α");
        assert_eq!(stem("naïve"), "naïve");
    }

    #[test]
    fn idempotent_on_outputs() {
        for w in ["generalization", "oscillators", "relational", "sky", "ties"] {
            let once = stem(w);
            assert_eq!(stem(&once), once, "stem of {w:?} not idempotent");
        }
    }
}
