//! Permutations, contiguous-window interchange moves and the neighborhoods
//! they induce.
//!
//! A permutation of order `n` is stored as the sequence of its values
//! `1..=n`. A [`WindowMove`] picks a contiguous window of `k` positions and
//! reorders the elements inside it; the set of all distinct results other
//! than the point itself is the k-interchange neighborhood `V^k(s)`.
//! The neighborhood `A_k(s)` that also contains `s` is `V^k(s) ∪ {s}` and is
//! not materialized separately.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::objective::Objective;

/// Smallest order accepted anywhere in the crate.
pub const MIN_ORDER: usize = 2;
/// Largest order a [`Permutation`] may have. Search works up to this order;
/// anything that enumerates the whole space is further limited by
/// [`PermSpace`]'s cap.
pub const MAX_ORDER: usize = 128;
/// Largest order for which lexicographic ranks fit in a `u64`.
pub const MAX_RANKABLE_ORDER: usize = 20;
/// Default cap on `n` for operations that enumerate all `n!` permutations.
pub const DEFAULT_ENUMERATION_CAP: usize = 9;
/// Largest window size whose `k!` arrangements are materialized.
pub const MAX_WINDOW: usize = 10;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    elems: Box<[u8]>,
}

impl Permutation {
    /// Validates `seq` as a bijection on `1..=seq.len()`.
    pub fn new(seq: &[usize]) -> Result<Self> {
        let n = seq.len();
        check_order(n)?;
        let mut seen = vec![false; n + 1];
        for &value in seq {
            if value == 0 || value > n {
                return Err(Error::ElementOutOfRange { value, n });
            }
            if seen[value] {
                return Err(Error::DuplicateElement { value });
            }
            seen[value] = true;
        }
        Ok(Permutation {
            elems: seq.iter().map(|&v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Permutation {
            elems: (1..=n).map(|v| v as u8).collect(),
        })
    }

    // Caller guarantees `elems` is a valid permutation.
    fn from_raw(elems: Box<[u8]>) -> Self {
        Permutation { elems }
    }

    pub fn n(&self) -> usize {
        self.elems.len()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.elems
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elems.iter().map(|&v| v as usize).collect()
    }

    /// Value at 1-based `position`.
    pub fn get(&self, position: usize) -> Option<usize> {
        position
            .checked_sub(1)
            .and_then(|i| self.elems.get(i))
            .map(|&v| v as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.elems.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Applies a window move. Elements outside the window are untouched.
    pub fn apply(&self, m: &WindowMove) -> Result<Permutation> {
        let n = self.n();
        let k = m.k();
        if m.start == 0 || m.start + k - 1 > n {
            return Err(Error::WindowOutOfBounds { start: m.start, k, n });
        }
        let mut out = self.elems.clone();
        let base = m.start - 1;
        for (i, &src) in m.arrangement.iter().enumerate() {
            out[base + i] = self.elems[base + src as usize - 1];
        }
        Ok(Permutation::from_raw(out))
    }

    /// Number of pairs `i < j` with `s_i > s_j`.
    pub fn inversion_count(&self) -> usize {
        let e = &self.elems;
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Position of this permutation in lexicographic order of all
    /// permutations of the same order (0-based).
    pub fn lex_rank(&self) -> Result<u64> {
        let n = self.n();
        if n > MAX_RANKABLE_ORDER {
            return Err(Error::OrderOutOfRange {
                n,
                min: MIN_ORDER,
                max: MAX_RANKABLE_ORDER,
            });
        }
        Ok(lehmer_rank(&self.elems))
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn lex_unrank(n: usize, index: u64) -> Result<Permutation> {
        check_order(n)?;
        if n > MAX_RANKABLE_ORDER {
            return Err(Error::OrderOutOfRange {
                n,
                min: MIN_ORDER,
                max: MAX_RANKABLE_ORDER,
            });
        }
        if index >= factorial(n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(Permutation::from_raw(lehmer_unrank(n, index)))
    }

    /// Digit form such as `4312`; only defined for `n <= 9`.
    pub fn compact(&self) -> Option<String> {
        (self.n() <= 9).then(|| self.elems.iter().map(|v| char::from(b'0' + v)).collect())
    }

    /// The compact digit form when available, the parenthesized form otherwise.
    pub fn key(&self) -> String {
        self.compact().unwrap_or_else(|| self.to_string())
    }
}

fn check_order(n: usize) -> Result<()> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            n,
            min: MIN_ORDER,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn lehmer_rank(elems: &[u8]) -> u64 {
    let n = elems.len();
    let mut rank = 0u64;
    for i in 0..n {
        let smaller_after = elems[i + 1..].iter().filter(|&&v| v < elems[i]).count() as u64;
        rank = rank * (n - i) as u64 + smaller_after;
    }
    rank
}

fn lehmer_unrank(n: usize, mut index: u64) -> Box<[u8]> {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let radix = (n - i) as u64;
        digits[i] = (index % radix) as usize;
        index /= radix;
    }
    let mut remaining: Vec<u8> = (1..=n as u8).collect();
    digits.into_iter().map(|d| remaining.remove(d)).collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `(4,3,1,2)`, `4,3,1,2` and the digit form `4312`.
    fn from_str(s: &str) -> Result<Self> {
        let syntax = || Error::PermutationSyntax(s.to_string());
        let trimmed = s.trim();
        let inner = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
            (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
            (None, None) => trimmed,
            _ => return Err(syntax()),
        };
        let seq: Vec<usize> = if inner.contains(',') {
            inner
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| syntax()))
                .collect::<Result<_>>()?
        } else {
            if inner.is_empty() || !inner.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax());
            }
            inner.bytes().map(|b| (b - b'0') as usize).collect()
        };
        Permutation::new(&seq)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.key())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Seq(Vec<usize>),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Seq(v) => Permutation::new(&v).map_err(serde::de::Error::custom),
        }
    }
}

/// A k-interchange: reorder the `k` elements in positions
/// `start..start + k` (1-based). After the move, position `start + i` holds
/// the element that was at window offset `arrangement[i] - 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WindowMove {
    start: usize,
    arrangement: Box<[u8]>,
}

impl WindowMove {
    pub fn new(start: usize, arrangement: &[usize]) -> Result<Self> {
        let k = arrangement.len();
        if start == 0 {
            return Err(Error::WindowOutOfBounds { start, k, n: 0 });
        }
        if k < 2 {
            return Err(Error::InvalidK { k, n: k });
        }
        let arr = Permutation::new(arrangement)?;
        Ok(WindowMove {
            start,
            arrangement: arr.elems,
        })
    }

    pub fn identity(start: usize, k: usize) -> Result<Self> {
        let arr: Vec<usize> = (1..=k).collect();
        WindowMove::new(start, &arr)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn k(&self) -> usize {
        self.arrangement.len()
    }

    pub fn arrangement(&self) -> Vec<usize> {
        self.arrangement.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.arrangement.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// The move on the same window that undoes this one.
    pub fn inverse(&self) -> WindowMove {
        let mut inv = vec![0u8; self.k()];
        for (i, &a) in self.arrangement.iter().enumerate() {
            inv[a as usize - 1] = (i + 1) as u8;
        }
        WindowMove {
            start: self.start,
            arrangement: inv.into_boxed_slice(),
        }
    }
}

impl fmt::Display for WindowMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}:", self.start)?;
        for v in self.arrangement.iter() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for WindowMove {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("WindowMove", 3)?;
        st.serialize_field("start", &self.start)?;
        st.serialize_field("k", &self.k())?;
        st.serialize_field("arrangement", &self.arrangement())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for WindowMove {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            start: usize,
            #[allow(dead_code)]
            k: Option<usize>,
            arrangement: Vec<usize>,
        }
        let r = Repr::deserialize(deserializer)?;
        WindowMove::new(r.start, &r.arrangement).map_err(serde::de::Error::custom)
    }
}

/// Applies `m` to `s`.
pub fn apply_move(s: &Permutation, m: &WindowMove) -> Result<Permutation> {
    s.apply(m)
}

/// Enumerates `V^k(s)` for a fixed `(n, k)`. Holds the `k! - 1`
/// non-identity window arrangements so repeated enumeration does not
/// regenerate them.
#[derive(Clone, Debug)]
pub struct KNeighborhood {
    n: usize,
    k: usize,
    // 1-based arrangements in lexicographic order, identity excluded.
    arrangements: Vec<Box<[u8]>>,
}

impl KNeighborhood {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_order(n)?;
        if k < 2 || k > n {
            return Err(Error::InvalidK { k, n });
        }
        if k > MAX_WINDOW {
            return Err(Error::CapExceeded { n: k, cap: MAX_WINDOW });
        }
        let mut arrangements = Vec::with_capacity(factorial(k) as usize - 1);
        let mut cur: Vec<u8> = (1..=k as u8).collect();
        while next_permutation(&mut cur) {
            arrangements.push(cur.clone().into_boxed_slice());
        }
        Ok(KNeighborhood { n, k, arrangements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Upper bound `(n - k + 1)(k! - 1)` on `|V^k(s)|`.
    pub fn max_size(&self) -> usize {
        (self.n - self.k + 1) * self.arrangements.len()
    }

    fn check(&self, s: &Permutation) -> Result<()> {
        if s.n() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                got: s.n(),
            });
        }
        Ok(())
    }

    /// `V^k(s)` in lexicographic order, without duplicates.
    pub fn neighbors(&self, s: &Permutation) -> Result<Vec<Permutation>> {
        self.check(s)?;
        let mut out = Vec::with_capacity(self.max_size());
        self.for_each_raw(s, |elems, _, _| out.push(Permutation::from_raw(elems)));
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// `V^k(s)` in lexicographic order, each neighbor paired with the first
    /// move that produces it (windows left to right, arrangements in
    /// lexicographic order).
    pub fn neighbors_with_moves(&self, s: &Permutation) -> Result<Vec<(Permutation, WindowMove)>> {
        self.check(s)?;
        let mut out = Vec::with_capacity(self.max_size());
        self.for_each_raw(s, |elems, start, arr| {
            out.push((
                Permutation::from_raw(elems),
                WindowMove {
                    start,
                    arrangement: arr.into(),
                },
            ))
        });
        // Stable sort keeps the first generating move first among duplicates.
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.dedup_by(|later, earlier| later.0 == earlier.0);
        Ok(out)
    }

    fn for_each_raw(&self, s: &Permutation, mut emit: impl FnMut(Box<[u8]>, usize, &[u8])) {
        let src = &s.elems;
        for base in 0..=self.n - self.k {
            for arr in &self.arrangements {
                let mut out = src.clone();
                for (i, &a) in arr.iter().enumerate() {
                    out[base + i] = src[base + a as usize - 1];
                }
                emit(out, base + 1, arr);
            }
        }
    }
}

/// Lexicographic successor in place; false when `v` was the last permutation.
fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `V^k(s)`: every permutation other than `s` reachable by one k-interchange.
pub fn k_neighborhood(s: &Permutation, k: usize) -> Result<Vec<Permutation>> {
    KNeighborhood::new(s.n(), k)?.neighbors(s)
}

/// `V^k(s)` split by objective value relative to `f(s)`. `improving` is
/// `V^{k<}(s)`; `improving ∪ equal` is `V^{k<=}(s)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborPartition {
    pub improving: Vec<Permutation>,
    pub equal: Vec<Permutation>,
    pub worsening: Vec<Permutation>,
}

impl NeighborPartition {
    pub fn weakly_improving(&self) -> Vec<Permutation> {
        let mut v: Vec<_> = self.improving.iter().chain(&self.equal).cloned().collect();
        v.sort_unstable();
        v
    }

    pub fn len(&self) -> usize {
        self.improving.len() + self.equal.len() + self.worsening.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn classify_neighbors(s: &Permutation, k: usize, f: &Objective) -> Result<NeighborPartition> {
    let hood = KNeighborhood::new(s.n(), k)?;
    let here = f.evaluate(s)?;
    let mut part = NeighborPartition::default();
    for x in hood.neighbors(s)? {
        match f.evaluate(&x)?.cmp(&here) {
            std::cmp::Ordering::Less => part.improving.push(x),
            std::cmp::Ordering::Equal => part.equal.push(x),
            std::cmp::Ordering::Greater => part.worsening.push(x),
        }
    }
    Ok(part)
}

/// The full space of permutations of one order, indexed densely by
/// lexicographic rank. Construction enforces the enumeration cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermSpace {
    n: usize,
    size: usize,
    cap: usize,
}

impl PermSpace {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        check_order(n)?;
        let cap = cap.min(MAX_RANKABLE_ORDER);
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        Ok(PermSpace {
            n,
            size: factorial(n) as usize,
            cap,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `n!`
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rank(&self, p: &Permutation) -> Result<usize> {
        if p.n() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                got: p.n(),
            });
        }
        Ok(lehmer_rank(&p.elems) as usize)
    }

    pub fn unrank(&self, index: usize) -> Result<Permutation> {
        if index >= self.size {
            return Err(Error::IndexOutOfRange {
                index: index as u64,
                n: self.n,
            });
        }
        Ok(Permutation::from_raw(lehmer_unrank(self.n, index as u64)))
    }

    /// All permutations in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Permutation> {
        let mut cur: Option<Vec<u8>> = Some((1..=self.n as u8).collect());
        std::iter::from_fn(move || {
            let here = cur.take()?;
            let mut next = here.clone();
            if next_permutation(&mut next) {
                cur = Some(next);
            }
            Some(Permutation::from_raw(here.into_boxed_slice()))
        })
    }
}
