//! Words in the letters `a = α`, `A = α⁻¹`, `b = β`, `B = β⁻¹`.
//!
//! A [`StringWord`] lives over the algebra of `D_{2^n}` (`algebra_n = n`):
//! arrows alternate, and no run of direct (or of inverse) letters may reach
//! length `2^{n-1}`, which is exactly the condition that no factor equals
//! `(αβ)^{2^{n-2}}`, `(βα)^{2^{n-2}}` or the inverse of one of them.
//!
//! The same two-letter alphabet serves the index-2 dihedral subalgebras;
//! a word over `kT_0` of `D_{2^n}` simply has `algebra_n = n - 1`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arrow {
    A,
    B,
}

impl Arrow {
    pub fn other(self) -> Arrow {
        match self {
            Arrow::A => Arrow::B,
            Arrow::B => Arrow::A,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub arrow: Arrow,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(arrow: Arrow, inverse: bool) -> Self {
        Letter { arrow, inverse }
    }

    pub fn inv(self) -> Letter {
        Letter { inverse: !self.inverse, ..self }
    }

    pub fn swap_arrow(self) -> Letter {
        Letter { arrow: self.arrow.other(), ..self }
    }

    /// Rank under `a < A < b < B`.
    pub fn rank(self) -> u8 {
        (self.arrow as u8) * 2 + u8::from(self.inverse)
    }

    pub fn to_char(self) -> char {
        match (self.arrow, self.inverse) {
            (Arrow::A, false) => 'a',
            (Arrow::A, true) => 'A',
            (Arrow::B, false) => 'b',
            (Arrow::B, true) => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        Some(match c {
            'a' => Letter::new(Arrow::A, false),
            'A' => Letter::new(Arrow::A, true),
            'b' => Letter::new(Arrow::B, false),
            'B' => Letter::new(Arrow::B, true),
            _ => return None,
        })
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

/// Longest allowed run of same-direction letters over `D_{2^n}`.
pub fn max_run(algebra_n: u32) -> usize {
    (1usize << (algebra_n - 1)) - 1
}

fn check_algebra(algebra_n: u32) -> Result<()> {
    if !(2..=12).contains(&algebra_n) {
        return Err(Error::InvalidWord(format!("unsupported algebra D_(2^{algebra_n})")));
    }
    Ok(())
}

/// Lengths of the maximal same-direction runs of a letter sequence.
fn run_lengths(letters: &[Letter]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let j = (i..letters.len()).find(|&j| letters[j].inverse != letters[i].inverse).unwrap_or(letters.len());
        runs.push(j - i);
        i = j;
    }
    runs
}

fn validate_letters(letters: &[Letter], algebra_n: u32) -> Result<()> {
    for w in letters.windows(2) {
        if w[0].arrow == w[1].arrow {
            return Err(Error::InvalidWord(format!(
                "letters {}{} break arrow alternation",
                w[0].to_char(),
                w[1].to_char()
            )));
        }
    }
    let limit = max_run(algebra_n);
    if let Some(r) = run_lengths(letters).into_iter().find(|&r| r > limit) {
        return Err(Error::InvalidWord(format!(
            "run of {r} same-direction letters contains a relation word of D_{}",
            1u32 << algebra_n
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StringWord {
    algebra_n: u32,
    letters: Vec<Letter>,
    /// Which zero-length string (`1_α` or `1_β`) an empty word is; fixed to
    /// `A` for nonempty words.
    zero: Arrow,
}

impl StringWord {
    pub fn new(algebra_n: u32, letters: Vec<Letter>) -> Result<Self> {
        check_algebra(algebra_n)?;
        validate_letters(&letters, algebra_n)?;
        Ok(StringWord { algebra_n, letters, zero: Arrow::A })
    }

    /// The zero-length string `1_α` or `1_β`.
    pub fn trivial(algebra_n: u32, marker: Arrow) -> Result<Self> {
        check_algebra(algebra_n)?;
        Ok(StringWord { algebra_n, letters: Vec::new(), zero: marker })
    }

    pub fn parse(text: &str, algebra_n: u32) -> Result<Self> {
        let t = text.trim();
        match t {
            "1a" => return StringWord::trivial(algebra_n, Arrow::A),
            "1b" => return StringWord::trivial(algebra_n, Arrow::B),
            "" => return Err(Error::InvalidWord("empty text; use 1a or 1b".into())),
            _ => {}
        }
        let letters = t
            .chars()
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::InvalidWord(format!("bad token {c:?} in {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        StringWord::new(algebra_n, letters)
    }

    pub fn algebra_n(&self) -> u32 {
        self.algebra_n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn zero_marker(&self) -> Option<Arrow> {
        self.is_empty().then_some(self.zero)
    }

    /// Same letters read over a different algebra.
    pub fn over(&self, algebra_n: u32) -> Result<StringWord> {
        if self.is_empty() {
            return StringWord::trivial(algebra_n, self.zero);
        }
        StringWord::new(algebra_n, self.letters.clone())
    }

    pub fn inverse(&self) -> StringWord {
        StringWord {
            algebra_n: self.algebra_n,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
            zero: if self.is_empty() { self.zero.other() } else { Arrow::A },
        }
    }

    pub fn rho_equivalent(&self, other: &StringWord) -> bool {
        self.algebra_n == other.algebra_n && (self == other || *self == other.inverse())
    }

    /// Exchanges the two arrows letterwise.
    pub fn sigma_twist(&self) -> StringWord {
        StringWord {
            algebra_n: self.algebra_n,
            letters: self.letters.iter().map(|l| l.swap_arrow()).collect(),
            zero: if self.is_empty() { self.zero.other() } else { Arrow::A },
        }
    }

    /// Lexicographic comparison under `a < A < b < B`, shorter words first.
    pub fn word_cmp(&self, other: &StringWord) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.zero.cmp(&other.zero))
    }

    /// The smaller of the word and its inverse.
    pub fn rho_representative(&self) -> StringWord {
        let inv = self.inverse();
        if inv.word_cmp(self) == Ordering::Less {
            inv
        } else {
            self.clone()
        }
    }

    pub fn segments(&self) -> Result<Vec<Segment>> {
        if self.is_empty() {
            return Err(Error::InvalidWord("a zero-length string has no segments".into()));
        }
        let mut out = Vec::new();
        let mut pos = 0;
        for len in run_lengths(&self.letters) {
            let first = self.letters[pos];
            out.push(Segment { inverse: first.inverse, start_arrow: first.arrow, len });
            pos += len;
        }
        Ok(out)
    }

    /// Order between segments `i` and `i + 1` (1-based, `1 <= i < #segments`).
    pub fn compare_segments(&self, i: usize) -> Result<SegmentOrder> {
        let lens: Vec<usize> = self.segments()?.iter().map(|s| s.len).collect();
        let k = lens.len();
        if i == 0 || i >= k {
            return Err(Error::IndexOutOfRange { index: i, max: k.saturating_sub(1) });
        }
        Ok(compare_lengths(&lens, i))
    }

    /// `rel[j]` relates segment `j` to segment `j + 1` for `j = 0..=k`, with
    /// the boundary conventions `C_0 < C_1` and `C_k > C_{k+1}`.
    pub fn segment_relations(&self) -> Result<Vec<SegmentOrder>> {
        let lens: Vec<usize> = self.segments()?.iter().map(|s| s.len).collect();
        Ok(relations_from_lengths(&lens))
    }

    /// Number of segments smaller than both neighbours.
    pub fn local_minimum_count(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        let rel = self.segment_relations().expect("nonempty");
        (1..rel.len()).filter(|&j| rel[j - 1] == SegmentOrder::Greater && rel[j] == SegmentOrder::Less).count()
    }

    /// The string over `kD_{2^{n+1}}` attached to a string over its index-2
    /// subalgebra `kT_0` (anchor arrow β).
    pub fn phi(&self) -> Result<StringWord> {
        self.lift_with_anchor(Arrow::B, None)
    }

    /// Same construction for `kT_1` (anchor arrow α).
    pub fn psi(&self) -> Result<StringWord> {
        self.lift_with_anchor(Arrow::A, None)
    }

    /// Builds the lifted word. Segment directions are kept; a segment of
    /// length `L` becomes `2L + 1` when it exceeds both neighbours, `2L - 1`
    /// when it is below both and `2L` otherwise. The first letter of the
    /// local-maximum segment number `anchor` (0-based among local maxima,
    /// default 0) is on `anchor_arrow`; alternation fixes the rest.
    pub fn lift_with_anchor(&self, anchor_arrow: Arrow, anchor: Option<usize>) -> Result<StringWord> {
        let target = self.algebra_n + 1;
        if self.is_empty() {
            return StringWord::new(target, vec![Letter::new(anchor_arrow, false)]);
        }
        let segs = self.segments()?;
        let rel = self.segment_relations()?;
        let mut lens = Vec::with_capacity(segs.len());
        let mut maxima = Vec::new();
        for (j, seg) in segs.iter().enumerate() {
            let (left, right) = (rel[j], rel[j + 1]);
            let len = match (left, right) {
                (SegmentOrder::Less, SegmentOrder::Greater) => {
                    maxima.push(j);
                    2 * seg.len + 1
                }
                (SegmentOrder::Greater, SegmentOrder::Less) => 2 * seg.len - 1,
                _ => 2 * seg.len,
            };
            lens.push(len);
        }
        let pick = anchor.unwrap_or(0);
        let &anchor_seg = maxima
            .get(pick)
            .ok_or_else(|| Error::InvalidParameter(format!("no local maximum number {pick}")))?;
        let anchor_pos: usize = lens[..anchor_seg].iter().sum();
        let mut letters = Vec::with_capacity(2 * self.len() + 1);
        for (seg, &len) in segs.iter().zip(&lens) {
            for _ in 0..len {
                let p = letters.len();
                let arrow = if p.abs_diff(anchor_pos) % 2 == 0 { anchor_arrow } else { anchor_arrow.other() };
                letters.push(Letter::new(arrow, seg.inverse));
            }
        }
        StringWord::new(target, letters)
    }

    /// Number of local-maximum segments (always at least one when nonempty).
    pub fn local_maximum_count(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        let rel = self.segment_relations().expect("nonempty");
        (1..rel.len()).filter(|&j| rel[j - 1] == SegmentOrder::Less && rel[j] == SegmentOrder::Greater).count()
    }
}

impl fmt::Display for StringWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{}", if self.zero == Arrow::A { "1a" } else { "1b" });
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct StringJson {
    algebra_n: u32,
    word: String,
}

impl Serialize for StringWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        StringJson { algebra_n: self.algebra_n, word: self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for StringWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = StringJson::deserialize(d)?;
        StringWord::parse(&j.word, j.algebra_n).map_err(serde::de::Error::custom)
    }
}

/// A maximal run of direct or of inverse letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub inverse: bool,
    pub start_arrow: Arrow,
    pub len: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentOrder {
    Greater,
    Less,
}

impl fmt::Display for SegmentOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SegmentOrder::Greater => ">",
            SegmentOrder::Less => "<",
        })
    }
}

/// Compares segment `i` with segment `i + 1` (1-based) by looking outward
/// symmetrically. Out-of-range segments count as length -1. Step `s`
/// compares `C_{i-s+1}` with `C_{i+s}`: at odd `s` the longer left side
/// means `>`, at even `s` it means `<`. When every step ties until both
/// sides run off the word the answer is `>`.
fn compare_lengths(lens: &[usize], i: usize) -> SegmentOrder {
    let k = lens.len() as i64;
    let len_at = |j: i64| -> i64 {
        if j <= 0 || j > k {
            -1
        } else {
            lens[(j - 1) as usize] as i64
        }
    };
    let i = i as i64;
    let mut s = 1i64;
    loop {
        let (l, r) = (i - s + 1, i + s);
        if l <= 0 && r > k {
            return SegmentOrder::Greater;
        }
        let (left, right) = (len_at(l), len_at(r));
        if left != right {
            let left_longer = left > right;
            let odd = s % 2 == 1;
            return if left_longer == odd { SegmentOrder::Greater } else { SegmentOrder::Less };
        }
        s += 1;
    }
}

fn relations_from_lengths(lens: &[usize]) -> Vec<SegmentOrder> {
    let k = lens.len();
    let mut rel = Vec::with_capacity(k + 1);
    rel.push(SegmentOrder::Less);
    rel.extend((1..k).map(|i| compare_lengths(lens, i)));
    rel.push(SegmentOrder::Greater);
    rel
}

/// A band: a primitive word of even length whose every power is a valid
/// string. Kept as written; [`BandWord::inverse_terminated`] gives the
/// rotation ending in an inverse letter used to build modules.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BandWord {
    word: StringWord,
}

fn validate_cyclic(word: &StringWord) -> Result<()> {
    let n = word.len();
    if n == 0 || n % 2 == 1 {
        return Err(Error::InvalidBand(format!("{word} has odd or zero length")));
    }
    let l = word.letters();
    if l[0].arrow == l[n - 1].arrow {
        return Err(Error::InvalidBand(format!("{word} does not alternate cyclically")));
    }
    let Some(start) = (0..n).find(|&i| l[i].inverse != l[(i + n - 1) % n].inverse) else {
        return Err(Error::InvalidBand(format!(
            "{word} has letters of one direction only, so its powers contain a relation word"
        )));
    };
    let rotated: Vec<Letter> = (0..n).map(|i| l[(start + i) % n]).collect();
    let limit = max_run(word.algebra_n);
    if run_lengths(&rotated).into_iter().any(|r| r > limit) {
        return Err(Error::InvalidBand(format!("a rotation of {word} contains a relation word")));
    }
    if (1..n).any(|p| n % p == 0 && (0..n).all(|i| l[i] == l[i % p])) {
        return Err(Error::InvalidBand(format!("{word} is a proper power")));
    }
    Ok(())
}

fn rotations(word: &StringWord) -> Vec<Vec<Letter>> {
    let l = word.letters();
    (0..l.len()).map(|r| l[r..].iter().chain(&l[..r]).copied().collect()).collect()
}

impl BandWord {
    /// Accepts a band word as written.
    pub fn new(word: StringWord) -> Result<Self> {
        validate_cyclic(&word)?;
        Ok(BandWord { word })
    }

    /// The word itself when its last letter is inverse, otherwise the
    /// rotation that moves the trailing direct letters to the front.
    pub fn inverse_terminated(&self) -> StringWord {
        let l = self.word.letters();
        let last_inv = l.iter().rposition(|x| x.inverse).expect("a band has an inverse letter");
        let letters: Vec<Letter> = l[last_inv + 1..].iter().chain(&l[..=last_inv]).copied().collect();
        StringWord { algebra_n: self.word.algebra_n, letters, zero: Arrow::A }
    }

    pub fn parse(text: &str, algebra_n: u32) -> Result<Self> {
        BandWord::new(StringWord::parse(text, algebra_n)?)
    }

    pub fn word(&self) -> &StringWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sigma_twist(&self) -> BandWord {
        BandWord { word: self.word.sigma_twist() }
    }

    /// Lexicographically least rotation of the word or its inverse that ends
    /// in an inverse letter.
    pub fn canonicalize(word: &StringWord) -> Result<BandWord> {
        validate_cyclic(word)?;
        let best = rotations(word)
            .into_iter()
            .chain(rotations(&word.inverse()))
            .filter(|r| r.last().is_some_and(|l| l.inverse))
            .min()
            .expect("a band has an inverse letter");
        Ok(BandWord { word: StringWord { algebra_n: word.algebra_n, letters: best, zero: Arrow::A } })
    }

    pub fn canonical(&self) -> BandWord {
        BandWord::canonicalize(&self.word).expect("already validated")
    }

    /// Same class under rotation and inversion.
    pub fn rho_prime_equivalent(&self, other: &BandWord) -> bool {
        self.word.algebra_n == other.word.algebra_n && self.canonical() == other.canonical()
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

fn word_d8(text: &str) -> StringWord {
    StringWord::parse(text, 3).expect("fixed D_8 word")
}

fn concat(parts: &[&StringWord]) -> Vec<Letter> {
    parts.iter().flat_map(|w| w.letters().iter().copied()).collect()
}

/// The bands `C_n` over `kD_8`: `C_1 = βα⁻¹β⁻¹α`, `C_2 = βαβα⁻¹β⁻¹αβ⁻¹α⁻¹`,
/// then `C_{n+1} = αβα⁻¹ C_n β⁻¹` for even `n` and `C_{n+1} = β C_n αβ⁻¹α⁻¹`
/// for odd `n >= 3`. `|C_n| = 4n`.
pub fn c_band(n: usize) -> Result<BandWord> {
    if n < 1 {
        return Err(Error::InvalidParameter("band family index starts at 1".into()));
    }
    if n == 1 {
        return BandWord::new(word_d8("bABa"));
    }
    let mut current = word_d8("babABaBA");
    for k in 2..n {
        let letters = if k % 2 == 0 {
            concat(&[&word_d8("abA"), &current, &word_d8("B")])
        } else {
            concat(&[&word_d8("b"), &current, &word_d8("aBA")])
        };
        current = StringWord::new(3, letters)?;
    }
    BandWord::new(current)
}

/// `C_n` with the two arrows exchanged.
pub fn d_band(n: usize) -> Result<BandWord> {
    Ok(c_band(n)?.sigma_twist())
}

/// Splitting of `C_n` (n >= 2) into fixed affixes around a word `W` and its
/// inverse: `bab W B W⁻¹ BA` for even `n`, `ab W b W⁻¹ BAB` for odd `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandHalves {
    pub first: StringWord,
    pub second: StringWord,
    /// Everything between the outer affixes: `W B W⁻¹` or `W b W⁻¹`.
    pub core: StringWord,
}

pub fn c_band_halves(n: usize) -> Result<BandHalves> {
    if n < 2 {
        return Err(Error::InvalidParameter("the split exists for n >= 2".into()));
    }
    let band = c_band(n)?;
    let text = band.to_string();
    let (prefix, mid, suffix) = if n % 2 == 0 { ("bab", "B", "BA") } else { ("ab", "b", "BAB") };
    let body = text
        .strip_prefix(prefix)
        .and_then(|t| t.strip_suffix(suffix))
        .ok_or_else(|| Error::InvalidWord(format!("{text} lacks the expected affixes")))?;
    let half = (body.len() - 1) / 2;
    if &body[half..half + 1] != mid {
        return Err(Error::InvalidWord(format!("{text} has no central {mid}")));
    }
    let first = StringWord::parse(&body[..half], 3)?;
    let second = StringWord::parse(&body[half + 1..], 3)?;
    let core = StringWord::parse(body, 3)?;
    Ok(BandHalves { first, second, core })
}

/// All valid strings of length at most `max_len`, one per ρ-class (the
/// smaller of the word and its inverse), ordered by length then letters.
/// The zero-length class is represented by `1_α`.
pub fn enumerate_strings(algebra_n: u32, max_len: usize) -> Result<Vec<StringWord>> {
    check_algebra(algebra_n)?;
    let limit = max_run(algebra_n);
    let mut out = vec![StringWord::trivial(algebra_n, Arrow::A)?];
    let mut layer: Vec<Vec<Letter>> = Vec::new();
    for len in 1..=max_len {
        let mut next = Vec::new();
        if len == 1 {
            for c in ['a', 'A', 'b', 'B'] {
                next.push(vec![Letter::from_char(c).expect("letter")]);
            }
        } else {
            for w in &layer {
                let last = *w.last().expect("nonempty");
                for inverse in [false, true] {
                    let l = Letter::new(last.arrow.other(), inverse);
                    let run = 1 + w.iter().rev().take_while(|x| x.inverse == inverse).count();
                    if run <= limit {
                        let mut v = w.clone();
                        v.push(l);
                        next.push(v);
                    }
                }
            }
        }
        next.sort();
        for w in &next {
            let word = StringWord { algebra_n, letters: w.clone(), zero: Arrow::A };
            if word.inverse().word_cmp(&word) != Ordering::Less {
                out.push(word);
            }
        }
        layer = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(t: &str, n: u32) -> StringWord {
        StringWord::parse(t, n).unwrap()
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(w("bABa", 3).to_string(), "bABa");
        assert!(matches!(StringWord::parse("abab", 3), Err(Error::InvalidWord(_))));
        assert!(StringWord::parse("abab", 4).is_ok());
        assert!(matches!(StringWord::parse("aa", 3), Err(Error::InvalidWord(_))));
        assert!(StringWord::parse("axb", 3).is_err());
        assert!(StringWord::parse("ab", 2).is_err());
        assert!(StringWord::parse("aB", 2).is_ok());
        assert_eq!(w("1b", 3).zero_marker(), Some(Arrow::B));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w("Aba", 3).inverse().to_string(), "ABa");
        assert_eq!(w("1a", 3).inverse().to_string(), "1b");
        let c = w("aBAbab", 3);
        assert_eq!(c.inverse().inverse(), c);
        assert!(c.rho_equivalent(&c.inverse()));
        assert!(!c.rho_equivalent(&w("a", 3)));
    }

    #[test]
    fn sigma_twist_examples() {
        assert_eq!(w("aB", 2).sigma_twist().to_string(), "bA");
        assert_eq!(w("1a", 2).sigma_twist().to_string(), "1b");
        for k in 0..3 {
            let text = format!("a{}", "Ba".repeat(k));
            let twisted = w(&text, 2).sigma_twist();
            assert_eq!(twisted.to_string(), format!("b{}", "Ab".repeat(k)));
            assert_eq!(twisted.sigma_twist().to_string(), text);
        }
    }

    #[test]
    fn band_validation_and_canonical_form() {
        let c1 = BandWord::parse("bABa", 3).unwrap();
        let rot = BandWord::canonicalize(&w("ABab", 3)).unwrap();
        assert!(c1.rho_prime_equivalent(&rot));
        assert_eq!(BandWord::canonicalize(&w("aB", 2)).unwrap().to_string(), "aB");
        assert_eq!(BandWord::canonicalize(&w("Ba", 2)).unwrap().to_string(), "aB");
        assert!(BandWord::canonicalize(&w("abab", 4)).is_err());
        assert!(StringWord::parse("abab", 3).is_err());
        assert!(BandWord::canonicalize(&w("aBaB", 2)).is_err(), "proper power");
        assert!(BandWord::canonicalize(&w("aBa", 2)).is_err(), "odd length");
        assert!(BandWord::parse("bA", 3).is_ok());
        assert_eq!(BandWord::parse("Ab", 3).unwrap().inverse_terminated().to_string(), "bA");
        assert_eq!(c1.inverse_terminated().to_string(), "abAB");
        assert!(BandWord::parse("babA", 3).is_ok());
        assert!(BandWord::canonicalize(&w("bABA", 3)).is_ok());
        assert!(BandWord::canonicalize(&w("BAbA", 3)).is_ok());
        assert!(BandWord::canonicalize(&w("BABAbA", 4)).is_ok());
        assert!(BandWord::canonicalize(&w("BAbABA", 3)).is_err(), "cyclic run of five");
    }

    #[test]
    fn segment_examples() {
        let c = w("AbAbAbAb", 2);
        let segs = c.segments().unwrap();
        assert_eq!(segs.len(), 8);
        assert!(segs.iter().all(|s| s.len == 1));
        let lens: Vec<usize> = w("babAB", 3).segments().unwrap().iter().map(|s| s.len).collect();
        assert_eq!(lens, vec![3, 2]);
        let single = w("a", 2).segments().unwrap();
        assert_eq!(single, vec![Segment { inverse: false, start_arrow: Arrow::A, len: 1 }]);
        assert!(w("1a", 2).segments().is_err());
    }

    #[test]
    fn segment_order_examples() {
        let c = w("AbAbAbAb", 2);
        let got: Vec<String> = (1..8).map(|i| c.compare_segments(i).unwrap().to_string()).collect();
        assert_eq!(got.join(" "), "> < > > < > <");
        assert_eq!(w("aB", 2).compare_segments(1).unwrap(), SegmentOrder::Greater);
        assert_eq!(w("abA", 3).compare_segments(1).unwrap(), SegmentOrder::Greater);
        assert!(matches!(c.compare_segments(8), Err(Error::IndexOutOfRange { .. })));
        assert!(c.compare_segments(0).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(w("aB", 2).phi().unwrap().to_string(), "babAB");
        assert_eq!(w("aBaB", 2).phi().unwrap().to_string(), "babABaBAB");
        assert_eq!(w("1a", 2).phi().unwrap().to_string(), "b");
        assert_eq!(w("1b", 2).psi().unwrap().to_string(), "a");
        let big = w("AbAbAbAb", 2).phi().unwrap();
        assert_eq!(big.to_string(), "BABaBABabAbabAbab");
        assert_eq!(big.algebra_n(), 3);
        assert_eq!(w("a", 2).phi().unwrap().to_string(), "bab");
        assert_eq!(w("a", 2).psi().unwrap().to_string(), "aba");
    }

    #[test]
    fn band_families() {
        assert_eq!(c_band(1).unwrap().to_string(), "bABa");
        assert_eq!(c_band(2).unwrap().to_string(), "babABaBA");
        assert_eq!(c_band(3).unwrap().to_string(), "abAbabABaBAB");
        assert!(c_band(0).is_err());
        assert_eq!(d_band(1).unwrap().to_string(), "aBAb");
        let c1 = c_band(1).unwrap();
        let d1_inv = BandWord::canonicalize(&d_band(1).unwrap().word().inverse()).unwrap();
        assert!(c1.rho_prime_equivalent(&d1_inv));
        for n in 1..=10 {
            let c = c_band(n).unwrap();
            assert_eq!(c.len(), 4 * n);
            assert_eq!(d_band(n).unwrap().word(), &c.word().sigma_twist());
        }
    }

    #[test]
    fn band_halves_examples() {
        let h2 = c_band_halves(2).unwrap();
        assert_eq!((h2.first.to_string(), h2.second.to_string()), ("A".into(), "a".into()));
        let h3 = c_band_halves(3).unwrap();
        assert_eq!((h3.first.to_string(), h3.second.to_string()), ("Aba".into(), "ABa".into()));
    }

    #[test]
    fn enumeration_small_cases() {
        let zero = enumerate_strings(3, 0).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].to_string(), "1a");
        let klein: Vec<String> = enumerate_strings(2, 2).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(klein, vec!["1a", "a", "b", "aB", "Ab"]);
    }

    /// Independent generator: all 4^L words, validity by direct factor
    /// comparison against the relation words.
    fn brute_force_classes(algebra_n: u32, max_len: usize) -> usize {
        let k = 1usize << (algebra_n - 2);
        let ab = "ab".repeat(k);
        let ba = "ba".repeat(k);
        let forbidden = [ab.clone(), ba.clone(), "BA".repeat(k), "AB".repeat(k)];
        let alphabet = ['a', 'A', 'b', 'B'];
        let mut classes = 1; // zero-length pair
        for len in 1..=max_len {
            let (mut total, mut palin) = (0usize, 0usize);
            for code in 0..4usize.pow(len as u32) {
                let word: String = (0..len).map(|p| alphabet[(code >> (2 * p)) & 3]).collect();
                let chars: Vec<char> = word.chars().collect();
                let alternates = chars.windows(2).all(|p| p[0].to_ascii_lowercase() != p[1].to_ascii_lowercase());
                if !alternates || forbidden.iter().any(|f| word.contains(f.as_str())) {
                    continue;
                }
                total += 1;
                let inv: String = chars
                    .iter()
                    .rev()
                    .map(|c| if c.is_lowercase() { c.to_ascii_uppercase() } else { c.to_ascii_lowercase() })
                    .collect();
                if inv == word {
                    palin += 1;
                }
            }
            classes += (total + palin) / 2;
        }
        classes
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (n, len) in [(2, 6), (3, 6), (4, 6)] {
            assert_eq!(enumerate_strings(n, len).unwrap().len(), brute_force_classes(n, len), "n={n}");
        }
    }

    #[test]
    fn lift_invariants_over_small_algebras() {
        for (n, max_len) in [(2u32, 12usize), (3, 10)] {
            for c in enumerate_strings(n, max_len).unwrap() {
                for arrow in [Arrow::B, Arrow::A] {
                    let lifted = c.lift_with_anchor(arrow, None).unwrap();
                    assert_eq!(lifted.len(), 2 * c.len() + 1, "{c}");
                    let from_inverse = c.inverse().lift_with_anchor(arrow, None).unwrap();
                    assert!(lifted.rho_equivalent(&from_inverse), "{c}: {lifted} vs {from_inverse}");
                    for k in 1..c.local_maximum_count() {
                        assert_eq!(c.lift_with_anchor(arrow, Some(k)).unwrap(), lifted, "{c} anchor {k}");
                    }
                    if c.is_empty() {
                        continue;
                    }
                    // extreme segments begin and end on fixed arrows
                    let rel = c.segment_relations().unwrap();
                    let segs = lifted.segments().unwrap();
                    for (j, seg) in segs.iter().enumerate() {
                        let end_arrow = if seg.len % 2 == 1 { seg.start_arrow } else { seg.start_arrow.other() };
                        if rel[j] == SegmentOrder::Less && rel[j + 1] == SegmentOrder::Greater {
                            assert_eq!((seg.start_arrow, end_arrow), (arrow, arrow), "{c}");
                        }
                        if rel[j] == SegmentOrder::Greater && rel[j + 1] == SegmentOrder::Less {
                            assert_eq!((seg.start_arrow, end_arrow), (arrow.other(), arrow.other()), "{c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let c = w("aBAb", 3);
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"algebra_n":3,"word":"aBAb"}"#);
        assert_eq!(serde_json::from_str::<StringWord>(&text).unwrap(), c);
        assert!(serde_json::from_str::<StringWord>(r#"{"algebra_n":3,"word":"abab"}"#).is_err());
    }

    proptest! {
        #[test]
        fn inverse_and_twist_are_involutions(idx in 0usize..400) {
            let all = enumerate_strings(3, 7).unwrap();
            let c = &all[idx % all.len()];
            prop_assert_eq!(&c.inverse().inverse(), c);
            prop_assert_eq!(&c.sigma_twist().sigma_twist(), c);
            prop_assert_eq!(StringWord::parse(&c.to_string(), 3).unwrap(), c.clone());
        }
    }
}
