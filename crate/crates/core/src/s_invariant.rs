//! Linking vectors over `(Z/2)^n` and the `S` and `S_m` invariants of
//! Gauss phrases.
//!
//! Matrices are encoded as rows of `0`/`1` characters joined by `;`, with
//! the matrices of a tuple joined by `/`. The first row of each matrix is
//! the linking vector of the component.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{BitXor, Range};

use crate::error::{Error, Result};
use crate::words::{GaussPhrase, Letter, SEPARATOR};

/// An element of `(Z/2)^n`, `n <= 64`.
///
/// Coordinate 0 is stored in the most significant of the `len` bits, so the
/// numeric order of `bits` is the vector order: at the first differing
/// coordinate the vector holding 0 is smaller.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: u8,
    bits: u64,
}

impl BitVector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= 64, "bit vectors hold at most 64 coordinates");
        BitVector {
            len: len as u8,
            bits: 0,
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zero(bits.len());
        for (j, &b) in bits.iter().enumerate() {
            if b % 2 == 1 {
                v.flip(j);
            }
        }
        v
    }

    /// All `2^len` vectors in ascending order.
    pub fn all(len: usize) -> impl Iterator<Item = BitVector> {
        assert!(len < 64);
        (0..1u64 << len).map(move |bits| BitVector {
            len: len as u8,
            bits,
        })
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    fn mask(self, j: usize) -> u64 {
        debug_assert!(j < self.len());
        1 << (self.len() - 1 - j)
    }

    pub fn get(self, j: usize) -> bool {
        self.bits & self.mask(j) != 0
    }

    pub fn flip(&mut self, j: usize) {
        self.bits ^= self.mask(j);
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// Coordinates in reverse order.
    pub fn reversed(self) -> Self {
        let mut out = Self::zero(self.len());
        for j in 0..self.len() {
            if self.get(j) {
                out.flip(self.len() - 1 - j);
            }
        }
        out
    }

    pub fn to_bits(self) -> Vec<u8> {
        (0..self.len()).map(|j| self.get(j) as u8).collect()
    }

    /// The involution `x -> v - x` on `(Z/2)^n`.
    pub fn reflect(self, x: BitVector) -> BitVector {
        self ^ x
    }

    /// Smallest member of the orbit of `x` under `reflect`.
    pub fn orbit_representative(self, x: BitVector) -> BitVector {
        x.min(self ^ x)
    }
}

impl BitXor for BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: BitVector) -> BitVector {
        debug_assert_eq!(self.len, rhs.len);
        BitVector {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len() {
            f.write_str(if self.get(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// One or two members, ascending.
    pub members: Vec<BitVector>,
}

impl Orbit {
    pub fn representative(&self) -> BitVector {
        self.members[0]
    }
}

/// Partition of `(Z/2)^n` into orbits of `x -> v - x`, ordered by
/// representative.
pub fn orbit_map(v: BitVector) -> Vec<Orbit> {
    BitVector::all(v.len())
        .filter(|&x| v.orbit_representative(x) == x)
        .map(|x| {
            let mut members = vec![x, v.reflect(x)];
            members.dedup();
            Orbit { members }
        })
        .collect()
}

/// Linking vector of the text span `span`, which must lie inside a single
/// component.
pub fn linking_vector(phrase: &GaussPhrase, span: Range<usize>) -> Result<BitVector> {
    let text = phrase.text();
    let bad_span = || Error::Span {
        start: span.start,
        end: span.end,
    };
    if span.start > span.end || span.end > text.len() {
        return Err(bad_span());
    }
    if text[span.clone()].contains(&SEPARATOR) {
        return Err(bad_span());
    }
    let partners = phrase.partners();
    let components = phrase.component_map();
    Ok(span_vector(
        &partners,
        &components,
        phrase.component_count(),
        span,
    ))
}

fn span_vector(
    partners: &[usize],
    components: &[usize],
    n: usize,
    span: Range<usize>,
) -> BitVector {
    let mut v = BitVector::zero(n);
    for i in span.clone() {
        let other = partners[i];
        if !span.contains(&other) {
            v.flip(components[other]);
        }
    }
    v
}

/// Linking vector of the subword strictly between the two occurrences of
/// `letter`.
pub fn letter_linking_vector(phrase: &GaussPhrase, letter: Letter) -> Result<BitVector> {
    let text = phrase.text();
    let first = text
        .iter()
        .position(|&b| b == letter.byte())
        .ok_or(Error::MissingLetter(letter))?;
    let second = phrase.partners()[first];
    if text[first..second].contains(&SEPARATOR) {
        return Err(Error::SplitLetter(letter));
    }
    linking_vector(phrase, first + 1..second)
}

/// One component's entry: its linking vector and the ascending list of
/// selected rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SComponent {
    pub linking_vector: BitVector,
    pub rows: Vec<BitVector>,
}

impl SComponent {
    /// Matrix form: the linking vector followed by the rows.
    pub fn matrix(&self) -> Vec<BitVector> {
        std::iter::once(self.linking_vector)
            .chain(self.rows.iter().copied())
            .collect()
    }

    pub fn encode(&self) -> String {
        self.matrix()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Bracketed rows, e.g. `[[0,0],[0,1]]`.
    pub fn bracketed(&self) -> String {
        let rows: Vec<String> = self
            .matrix()
            .iter()
            .map(|r| {
                let bits: Vec<String> = r.to_bits().iter().map(u8::to_string).collect();
                format!("[{}]", bits.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }

    /// Matrix as nested 0/1 arrays.
    pub fn to_nested(&self) -> Vec<Vec<u8>> {
        self.matrix().iter().map(|r| r.to_bits()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SValue {
    pub components: Vec<SComponent>,
}

impl SValue {
    pub fn encode(&self) -> String {
        encode_tuple(&self.components)
    }
}

impl fmt::Display for SValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.components)
    }
}

/// `((l^1, O_1), (l^2, B_2))` for a two-component phrase. The rows of
/// `second` are raw vectors, not orbit representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SMValue {
    pub first: SComponent,
    pub second: SComponent,
}

impl SMValue {
    pub fn encode(&self) -> String {
        encode_tuple(&[self.first.clone(), self.second.clone()])
    }
}

impl fmt::Display for SMValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &[self.first.clone(), self.second.clone()])
    }
}

fn encode_tuple(parts: &[SComponent]) -> String {
    parts
        .iter()
        .map(SComponent::encode)
        .collect::<Vec<_>>()
        .join("/")
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[SComponent]) -> fmt::Result {
    let inner: Vec<String> = parts.iter().map(SComponent::bracketed).collect();
    write!(f, "({})", inner.join(", "))
}

/// S invariant modulo transposition, as a canonical string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorderedKey(pub String);

impl fmt::Display for UnorderedKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Per-component data shared by `S` and `S_m`.
struct ComponentData {
    linking_vector: BitVector,
    /// Linking vectors of the letters occurring twice in the component.
    letter_vectors: Vec<BitVector>,
}

fn component_data(phrase: &GaussPhrase) -> Vec<ComponentData> {
    let partners = phrase.partners();
    let components = phrase.component_map();
    let n = phrase.component_count();
    phrase
        .component_ranges()
        .into_iter()
        .map(|(start, end)| {
            let letter_vectors = (start..end)
                .filter(|&i| partners[i] > i && partners[i] < end)
                .map(|i| span_vector(&partners, &components, n, i + 1..partners[i]))
                .collect();
            ComponentData {
                linking_vector: span_vector(&partners, &components, n, start..end),
                letter_vectors,
            }
        })
        .collect()
}

/// Toggles each key once; the survivors are those seen an odd number of
/// times.
fn odd_multiplicity(keys: impl IntoIterator<Item = BitVector>) -> Vec<BitVector> {
    let mut odd = BTreeSet::new();
    for k in keys {
        if !odd.remove(&k) {
            odd.insert(k);
        }
    }
    odd.into_iter().collect()
}

fn orbit_component(data: &ComponentData) -> SComponent {
    let l = data.linking_vector;
    let zero_orbit = l.orbit_representative(BitVector::zero(l.len()));
    let rows = odd_multiplicity(
        data.letter_vectors
            .iter()
            .map(|&v| l.orbit_representative(v))
            .filter(|&r| r != zero_orbit),
    );
    SComponent {
        linking_vector: l,
        rows,
    }
}

pub fn compute_s(phrase: &GaussPhrase) -> SValue {
    SValue {
        components: component_data(phrase).iter().map(orbit_component).collect(),
    }
}

fn require_two(phrase_components: usize) -> Result<()> {
    if phrase_components == 2 {
        Ok(())
    } else {
        Err(Error::Arity {
            expected: 2,
            found: phrase_components,
        })
    }
}

/// Swaps the two entries of `S` and reverses the columns of both matrices.
/// Rows are mapped to the representative of their orbit under the reversed
/// linking vector and sorted, so the result is again canonical.
pub fn transpose_s(s: &SValue) -> Result<SValue> {
    require_two(s.components.len())?;
    let flip = |c: &SComponent| {
        let l = c.linking_vector.reversed();
        let mut rows: Vec<BitVector> = c
            .rows
            .iter()
            .map(|r| l.orbit_representative(r.reversed()))
            .collect();
        rows.sort();
        rows.dedup();
        SComponent {
            linking_vector: l,
            rows,
        }
    };
    Ok(SValue {
        components: vec![flip(&s.components[1]), flip(&s.components[0])],
    })
}

pub fn unordered_key(phrase: &GaussPhrase) -> Result<UnorderedKey> {
    require_two(phrase.component_count())?;
    let s = compute_s(phrase);
    let a = s.encode();
    let b = transpose_s(&s)?.encode();
    Ok(UnorderedKey(a.min(b)))
}

pub fn compute_s_m(phrase: &GaussPhrase) -> Result<SMValue> {
    require_two(phrase.component_count())?;
    let data = component_data(phrase);
    let second = &data[1];
    let rows = odd_multiplicity(
        second
            .letter_vectors
            .iter()
            .copied()
            .filter(|v| !v.is_zero()),
    );
    Ok(SMValue {
        first: orbit_component(&data[0]),
        second: SComponent {
            linking_vector: second.linking_vector,
            rows,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_phrase;

    fn p(s: &str) -> GaussPhrase {
        parse_phrase(s).unwrap()
    }

    fn bv(s: &str) -> BitVector {
        BitVector::from_bits(&s.bytes().map(|b| b - b'0').collect::<Vec<_>>())
    }

    fn letter(c: char) -> Letter {
        Letter::new(c).unwrap()
    }

    #[test]
    fn vector_order() {
        assert!(bv("01") < bv("10"));
        assert!(bv("011") < bv("100"));
        assert!(bv("00") < bv("01"));
        let all: Vec<_> = BitVector::all(2).map(|v| v.to_string()).collect();
        assert_eq!(all, ["00", "01", "10", "11"]);
        assert_eq!(bv("10").reversed(), bv("01"));
    }

    #[test]
    fn linking_vectors() {
        let ph = p("CEBE|ABAC");
        assert_eq!(linking_vector(&ph, 0..4).unwrap(), bv("00"));
        assert_eq!(linking_vector(&p("B|CDCBD"), 2..7).unwrap(), bv("10"));
        assert_eq!(linking_vector(&ph, 2..2).unwrap(), bv("00"));
        assert_eq!(
            linking_vector(&ph, 3..6),
            Err(Error::Span { start: 3, end: 6 })
        );
        assert_eq!(letter_linking_vector(&ph, letter('E')).unwrap(), bv("01"));
        assert_eq!(letter_linking_vector(&ph, letter('A')).unwrap(), bv("10"));
        assert_eq!(
            letter_linking_vector(&p("AA|"), letter('A')).unwrap(),
            bv("00")
        );
        assert_eq!(
            letter_linking_vector(&ph, letter('C')),
            Err(Error::SplitLetter(letter('C')))
        );
        assert_eq!(
            letter_linking_vector(&ph, letter('Z')),
            Err(Error::MissingLetter(letter('Z')))
        );
    }

    #[test]
    fn orbits() {
        let reps = |v: &str| -> Vec<Vec<String>> {
            orbit_map(bv(v))
                .iter()
                .map(|o| o.members.iter().map(ToString::to_string).collect())
                .collect()
        };
        assert_eq!(
            reps("00"),
            vec![vec!["00"], vec!["01"], vec!["10"], vec!["11"]]
        );
        assert_eq!(reps("11"), vec![vec!["00", "11"], vec!["01", "10"]]);
        assert_eq!(reps("1"), vec![vec!["0", "1"]]);
    }

    #[test]
    fn s_values() {
        assert_eq!(compute_s(&p("CEBE|ABAC")).encode(), "00;01/00;10");
        assert_eq!(compute_s(&p("|ABACDCEBED")).encode(), "00/00");
        assert_eq!(compute_s(&p("ABACDCEBED|")).encode(), "00/00");
        assert_eq!(compute_s(&p("-")).encode(), "0");
        assert_eq!(
            compute_s(&p("CEBE|ABAC")).to_string(),
            "([[0,0],[0,1]], [[0,0],[1,0]])"
        );
    }

    #[test]
    fn transposition() {
        let s = compute_s(&p("CEBE|ABAC"));
        assert_eq!(transpose_s(&s).unwrap(), s);
        let sym = SValue {
            components: vec![
                SComponent {
                    linking_vector: bv("01"),
                    rows: vec![],
                },
                SComponent {
                    linking_vector: bv("10"),
                    rows: vec![],
                },
            ],
        };
        assert_eq!(transpose_s(&sym).unwrap(), sym);
        assert_eq!(
            transpose_s(&compute_s(&p("B|CDCBD"))).unwrap(),
            compute_s(&p("CDCBD|B"))
        );
        assert!(matches!(
            transpose_s(&compute_s(&p("AA"))),
            Err(Error::Arity { .. })
        ));
    }

    #[test]
    fn unordered_keys() {
        let k = |s: &str| unordered_key(&p(s)).unwrap();
        assert_eq!(k("CEBE|ABAC"), k("ABAC|CEBE"));
        assert_eq!(k("B|B"), k("D|D"));
        assert_ne!(k("CEBE|ABAC"), k("|ABACDCEBED"));
        assert!(unordered_key(&p("AA")).is_err());
    }

    #[test]
    fn s_m_values() {
        let m = |s: &str| compute_s_m(&p(s)).unwrap().encode();
        assert_eq!(m("B|CDCBD"), "01/10;01;11");
        assert_eq!(m("ACDC|AD"), "00;01/00");
        assert_eq!(m("D|ABABD"), "01/10");
        assert_eq!(m("D|D"), "01/10");
        assert_eq!(m("CB|ABAC"), "00/00;10");
        assert!(compute_s_m(&p("A|A|")).is_err());
    }
}
