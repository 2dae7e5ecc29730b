use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use crate::arith::{HalfInt, Payload, Scalar};
use crate::qalgebra::gen::{format_word, word_weight, Word};

/// A finite linear combination of words with `Q(i)` coefficients.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    /// The empty word, i.e. the unit (or the vacuum vector).
    pub fn one() -> Self {
        Element::from_word(Word::new())
    }

    pub fn from_word(w: Word) -> Self {
        Element::from_term(w, Scalar::one())
    }

    pub fn from_term(w: Word, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(w, &c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut e = Element::zero();
        for (w, c) in terms {
            e.add_term(w, &c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(d * c));
        }
    }

    pub fn add_assign(&mut self, other: &Element) {
        self.add_scaled(other, &Scalar::one());
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::from_int(-1));
        e
    }

    pub fn plus(&self, other: &Element) -> Element {
        let mut e = self.clone();
        e.add_assign(other);
        e
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn coeff(&self, w: &[crate::qalgebra::Gen]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Largest conformal weight among the words present.
    pub fn max_weight(&self) -> Option<HalfInt> {
        self.terms.keys().map(|w| word_weight(w)).max()
    }

    pub fn min_weight(&self) -> Option<HalfInt> {
        self.terms.keys().map(|w| word_weight(w)).min()
    }

    /// Terms ordered for display: longer words first.
    fn display_order(&self) -> Vec<(&Word, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
        v
    }

    /// Text form with an optional suffix attached to every word (e.g. `|0>`).
    pub fn format_with(&self, suffix: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.display_order().into_iter().enumerate() {
            let body = {
                let mut b = format_word(w);
                if !suffix.is_empty() {
                    if !b.is_empty() {
                        b.push(' ');
                    }
                    b.push_str(suffix);
                }
                b
            };
            let (negative, mag) = if c.is_real() && c.re().is_negative() { (true, -c) } else { (false, c.clone()) };
            let coeff = if mag.is_one() && !body.is_empty() {
                String::new()
            } else if mag.is_real() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            let sep = match (k == 0, negative) {
                (true, false) => "",
                (true, true) => "- ",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            out.push_str(sep);
            out.push_str(&coeff);
            if !coeff.is_empty() && !body.is_empty() {
                out.push(' ');
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(""))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(""))
    }
}

impl Payload for Element {
    fn zero() -> Self {
        Element::zero()
    }
    fn is_zero(&self) -> bool {
        Element::is_zero(self)
    }
    fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        Element::add_scaled(self, other, c)
    }
}
