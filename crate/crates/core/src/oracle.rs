//! Brute-force ground truth.
//!
//! Nothing in this module uses the closed forms of [`crate::exact`]. Spaces
//! are enumerated one multiset at a time, palindromicity is decided from the
//! count vector (or by searching arrangements outright), and the doubling and
//! center-insertion maps are realized on concrete multisets so their
//! bijectivity can be checked exhaustively.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, SpaceParams};

/// Default ceiling on the number of multisets a single enumeration may yield.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Default ceiling on `n` for [`profiles`].
pub const DEFAULT_PARTITION_CAP: u64 = 120;

/// Largest number of profiles `profiles` will materialize.
pub const MAX_PROFILES: u128 = 1_000_000;

/// Largest `n` accepted by [`PalindromeMethod::Search`].
pub const MAX_SEARCH_LEN: u64 = 10;

/// A multiset over the alphabet `0..b`, stored as its count vector.
///
/// Two multisets are equal iff their count vectors are; the size `n` is the
/// sum of the counts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset {
    counts: Vec<u32>,
}

impl Multiset {
    pub fn from_counts(counts: Vec<u32>) -> Self {
        Multiset { counts }
    }

    /// Tallies `elements` over an alphabet of size `alphabet`.
    pub fn from_elements(alphabet: usize, elements: &[usize]) -> Result<Self, Error> {
        let mut counts = vec![0u32; alphabet];
        for &e in elements {
            let slot = counts.get_mut(e).ok_or(Error::SymbolOutOfRange {
                symbol: e,
                alphabet,
            })?;
            *slot += 1;
        }
        Ok(Multiset { counts })
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn alphabet_size(&self) -> usize {
        self.counts.len()
    }

    /// Number of elements, counted with multiplicity.
    pub fn size(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    /// Elements in ascending order, each repeated by its count.
    pub fn elements(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(sym, &c)| std::iter::repeat_n(sym, c as usize))
            .collect()
    }

    /// Number of symbols with an odd count.
    pub fn odd_symbols(&self) -> usize {
        self.counts.iter().filter(|&&c| c % 2 == 1).count()
    }

    /// Sorted positive counts, largest first.
    pub fn profile(&self) -> Vec<u32> {
        let mut parts: Vec<u32> = self.counts.iter().copied().filter(|&c| c > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Every multiset of a given size over a given alphabet.
///
/// Multisets come out in ascending lexicographic order of their sorted
/// element words (`[0,0] < [0,1] < [1,1]`), which is strictly *descending*
/// lexicographic order of the count vectors: `(2,0), (1,1), (0,2)`.
#[derive(Debug, Clone)]
pub struct Multisets {
    next: Option<Vec<u32>>,
}

impl Multisets {
    /// Enumerates all size-`n` multisets over `b` symbols without any cap or
    /// parameter check. `n = 0` yields the single empty multiset; `b = 0`
    /// yields nothing unless `n = 0`.
    pub fn new(n: u32, b: usize) -> Self {
        let next = match b {
            0 if n == 0 => Some(Vec::new()),
            0 => None,
            _ => {
                let mut first = vec![0; b];
                first[0] = n;
                Some(first)
            }
        };
        Multisets { next }
    }
}

impl Iterator for Multisets {
    type Item = Multiset;

    fn next(&mut self) -> Option<Multiset> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let b = succ.len();
        if b >= 2 {
            let tail = succ[b - 1];
            succ[b - 1] = 0;
            if let Some(i) = (0..b - 1).rev().find(|&i| succ[i] > 0) {
                succ[i] -= 1;
                succ[i + 1] = tail + 1;
                self.next = Some(succ);
            }
        }
        Some(Multiset { counts: current })
    }
}

// Size of the space, or `None` once it passes `cap`. Runs the multiplicative
// recurrence C(m, i) = C(m - 1, i - 1) * m / i, which only grows with i, so it
// can stop early and never touches large integers.
fn space_count_within(n: u64, b: u64, cap: u64) -> Option<u64> {
    let top = n + b - 1;
    let k = n.min(b - 1);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * u128::from(top - k + i) / u128::from(i);
        if acc > u128::from(cap) {
            return None;
        }
    }
    Some(acc as u64)
}

/// Enumerates the space of `p`, refusing when it holds more than `cap`
/// multisets.
pub fn enumerate_multisets(p: SpaceParams, cap: u64) -> Result<Multisets, Error> {
    if space_count_within(p.n(), p.b(), cap).is_none() || p.n() > u64::from(u32::MAX) {
        return Err(Error::CapExceeded {
            size: crate::exact::space_size(p).to_string(),
            cap,
        });
    }
    Ok(Multisets::new(p.n() as u32, p.b() as usize))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PalindromeMethod {
    /// At most one symbol with an odd count, and none when the size is even.
    Counts,
    /// Exhaustive placement of the elements into a word equal to its reversal.
    Search,
}

/// Decides whether the elements of `m` can be arranged into a palindrome.
///
/// ```
/// use palindensity::oracle::{is_palindromic, PalindromeMethod};
/// use palindensity::Multiset;
///
/// let m = Multiset::from_elements(5, &[1, 1, 2, 2, 3])?;
/// assert!(is_palindromic(&m, PalindromeMethod::Counts)?);
/// assert!(is_palindromic(&m, PalindromeMethod::Search)?);
/// let m = Multiset::from_elements(5, &[1, 1, 2, 3, 4])?;
/// assert!(!is_palindromic(&m, PalindromeMethod::Search)?);
/// # Ok::<(), palindensity::Error>(())
/// ```
pub fn is_palindromic(m: &Multiset, method: PalindromeMethod) -> Result<bool, Error> {
    match method {
        PalindromeMethod::Counts => Ok(palindromic_by_counts(m)),
        PalindromeMethod::Search => {
            let n = m.size();
            if n > MAX_SEARCH_LEN {
                return Err(Error::SearchTooLarge {
                    n,
                    max: MAX_SEARCH_LEN,
                });
            }
            Ok(palindromic_by_search(m))
        }
    }
}

fn palindromic_by_counts(m: &Multiset) -> bool {
    let allowed = (m.size() % 2) as usize;
    m.odd_symbols() <= allowed
}

fn palindromic_by_search(m: &Multiset) -> bool {
    let mut remaining = m.counts.clone();
    let mut word = vec![0usize; m.size() as usize];
    place(&mut word, 0, &mut remaining)
}

// Fills word[pos..] with the remaining elements, trying each distinct symbol
// at each position. A position in the second half must mirror its partner in
// the first half, otherwise the partial word can never equal its reversal.
fn place(word: &mut [usize], pos: usize, remaining: &mut [u32]) -> bool {
    let n = word.len();
    if pos == n {
        return word.iter().eq(word.iter().rev());
    }
    for sym in 0..remaining.len() {
        if remaining[sym] == 0 {
            continue;
        }
        let mirror = n - 1 - pos;
        if mirror < pos && word[mirror] != sym {
            continue;
        }
        remaining[sym] -= 1;
        word[pos] = sym;
        let found = place(word, pos + 1, remaining);
        remaining[sym] += 1;
        if found {
            return true;
        }
    }
    false
}

/// Totals found by exhaustive enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceCounts {
    pub total: BigUint,
    pub palindromic: BigUint,
}

pub fn brute_force_counts(p: SpaceParams, cap: u64) -> Result<BruteForceCounts, Error> {
    let mut total = 0u64;
    let mut palindromic = 0u64;
    for m in enumerate_multisets(p, cap)? {
        total += 1;
        if palindromic_by_counts(&m) {
            palindromic += 1;
        }
    }
    Ok(BruteForceCounts {
        total: total.into(),
        palindromic: palindromic.into(),
    })
}

/// One multiplicity class: all multisets whose sorted positive counts equal
/// `parts`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub parts: Vec<u32>,
    pub class_size: BigUint,
    pub palindromic: bool,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Partitions the space of `p` by multiplicity profile.
///
/// Profiles are the integer partitions of `n` with at most `b` parts, listed
/// in ascending lexicographic order of their (non-increasing) parts, so
/// `(1,1,1,1,1)` comes first and `(n)` last. The size of a class is the
/// number of ways to assign distinct symbols to the parts:
/// `b! / (m_1! m_2! ... (b - r)!)` for `r` parts with repeated part values
/// occurring `m_j` times.
pub fn profiles(p: SpaceParams, cap: u64) -> Result<Vec<Profile>, Error> {
    if p.n() > cap {
        return Err(Error::PartitionCapExceeded { n: p.n(), cap });
    }
    let n = p.n() as u32;
    let max_parts = p.b().min(p.n()) as usize;
    let count = partition_count(n as usize, max_parts);
    if count > MAX_PROFILES {
        return Err(Error::TooManyProfiles { count, max: MAX_PROFILES });
    }
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(max_parts);
    partitions(n, n, max_parts, &mut parts, &mut |parts| {
        out.push(Profile {
            parts: parts.to_vec(),
            class_size: class_size(parts, p.b()),
            palindromic: profile_is_palindromic(parts, p.n()),
        });
    });
    Ok(out)
}

// Partitions of `n` into at most `k` parts, saturating.
fn partition_count(n: usize, k: usize) -> u128 {
    // Parts of size <= k, by conjugation.
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=k.min(n) {
        for total in part..=n {
            ways[total] = ways[total].saturating_add(ways[total - part]);
        }
    }
    ways[n]
}

fn partitions(
    remaining: u32,
    max_part: u32,
    slots: usize,
    parts: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if remaining == 0 {
        emit(parts);
        return;
    }
    if slots == 0 {
        return;
    }
    for part in 1..=max_part.min(remaining) {
        // The rest must fit into `slots - 1` parts no larger than `part`.
        if u64::from(remaining - part) > u64::from(part) * (slots as u64 - 1) {
            continue;
        }
        parts.push(part);
        partitions(remaining - part, part, slots - 1, parts, emit);
        parts.pop();
    }
}

fn class_size(parts: &[u32], b: u64) -> BigUint {
    let r = parts.len() as u64;
    let mut size = BigUint::one();
    for i in 0..r {
        size *= b - i;
    }
    let mut i = 0;
    while i < parts.len() {
        let run = parts[i..].iter().take_while(|&&x| x == parts[i]).count();
        for f in 2..=run as u64 {
            size /= f;
        }
        i += run;
    }
    size
}

fn profile_is_palindromic(parts: &[u32], n: u64) -> bool {
    let odd = parts.iter().filter(|&&x| x % 2 == 1).count();
    odd <= 1 && (odd as u64) % 2 == n % 2
}

/// Doubles every count, sending a size-`n` multiset to a size-`2n`
/// palindromic one.
pub fn double(m: &Multiset) -> Multiset {
    Multiset {
        counts: m.counts.iter().map(|&c| 2 * c).collect(),
    }
}

/// Inverse of [`double`]: halves every count of an even-size multiset.
pub fn halve(m: &Multiset) -> Result<Multiset, Error> {
    if m.size() % 2 == 1 {
        return Err(Error::OddSize(m.to_string()));
    }
    if m.counts.iter().any(|&c| c % 2 == 1) {
        return Err(Error::NotPalindromic(m.to_string()));
    }
    Ok(Multiset {
        counts: m.counts.iter().map(|&c| c / 2).collect(),
    })
}

/// Inserts symbol `x` as the center of an even-size palindromic multiset.
pub fn add_center(m: &Multiset, x: usize) -> Result<Multiset, Error> {
    if m.size() % 2 == 1 {
        return Err(Error::OddSize(m.to_string()));
    }
    if !palindromic_by_counts(m) {
        return Err(Error::NotPalindromic(m.to_string()));
    }
    let mut counts = m.counts.clone();
    let slot = counts.get_mut(x).ok_or(Error::SymbolOutOfRange {
        symbol: x,
        alphabet: m.alphabet_size(),
    })?;
    *slot += 1;
    Ok(Multiset { counts })
}

/// Outcome of every oracle check for one `(n, b)` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub params: SpaceParams,
    pub counts: BruteForceCounts,
    /// Brute-force counts equal the closed forms.
    pub closed_forms: bool,
    /// Profile class sizes sum to the total and palindromic counts.
    pub profile_sums: bool,
    /// Doubling (even `n`) or center insertion (odd `n`) is a bijection onto
    /// the palindromic subset, and halving inverts doubling.
    pub bijection: bool,
    /// Count criterion agrees with arrangement search. `None` above
    /// [`MAX_SEARCH_LEN`].
    pub search_agrees: Option<bool>,
}

impl CellCheck {
    pub fn passed(&self) -> bool {
        self.closed_forms && self.profile_sums && self.bijection && self.search_agrees != Some(false)
    }
}

/// Runs every oracle check for one cell against the closed forms.
pub fn check_cell(p: SpaceParams, cap: u64) -> Result<CellCheck, Error> {
    let counts = brute_force_counts(p, cap)?;
    let closed_forms = counts.total == crate::exact::space_size(p)
        && counts.palindromic == crate::exact::palindromic_count(p);

    let profile_sums = match profiles(p, DEFAULT_PARTITION_CAP.max(p.n())) {
        Ok(list) => {
            let total: BigUint = list.iter().map(|pr| &pr.class_size).sum();
            let pal: BigUint = list
                .iter()
                .filter(|pr| pr.palindromic)
                .map(|pr| &pr.class_size)
                .sum();
            total == counts.total && pal == counts.palindromic
        }
        Err(_) => false,
    };

    let bijection = match p.parity() {
        crate::Parity::Even => doubling_is_bijective(p),
        crate::Parity::Odd => center_insertion_is_bijective(p),
    };

    let search_agrees = if p.n() <= MAX_SEARCH_LEN {
        Some(enumerate_multisets(p, cap)?.all(|m| {
            palindromic_by_counts(&m) == palindromic_by_search(&m)
        }))
    } else {
        None
    };

    Ok(CellCheck {
        params: p,
        counts,
        closed_forms,
        profile_sums,
        bijection,
        search_agrees,
    })
}

fn palindromic_subset(n: u32, b: usize) -> BTreeSet<Multiset> {
    Multisets::new(n, b)
        .filter(palindromic_by_counts)
        .collect()
}

/// Doubling maps the size-`n/2` space injectively onto the palindromic
/// subset of the size-`n` space, and halving undoes it.
pub fn doubling_is_bijective(p: SpaceParams) -> bool {
    let (n, b) = (p.n() as u32, p.b() as usize);
    if n % 2 == 1 {
        return false;
    }
    let mut image = BTreeSet::new();
    for m in Multisets::new(n / 2, b) {
        let d = double(&m);
        if halve(&d).as_ref() != Ok(&m) || !image.insert(d) {
            return false;
        }
    }
    let target = palindromic_subset(n, b);
    image == target && target.iter().all(|m| halve(m).map(|h| double(&h)).as_ref() == Ok(m))
}

/// Center insertion maps (palindromic size-`n-1` multiset, symbol) pairs
/// injectively onto the palindromic subset of the odd size-`n` space.
pub fn center_insertion_is_bijective(p: SpaceParams) -> bool {
    let (n, b) = (p.n() as u32, p.b() as usize);
    if n % 2 == 0 {
        return false;
    }
    let source = palindromic_subset(n - 1, b);
    let mut image = BTreeSet::new();
    for m in &source {
        for x in 0..b {
            let Ok(c) = add_center(m, x) else {
                return false;
            };
            if !image.insert(c) {
                return false;
            }
        }
    }
    image.len() == source.len() * b && image == palindromic_subset(n, b)
}
