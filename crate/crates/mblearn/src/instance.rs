//! Instance tokens, deduplicated instance types, and the type base.
//!
//! Learning stores every windowed training example. Identical examples are
//! collapsed into a single *instance type* carrying a frequency count; the
//! [`TypeBase`] is the resulting memory that classification scans.

use std::collections::BTreeMap;
use std::fmt;

use crate::classifier;
use crate::error::{MblError, Result};

/// Padding symbol used beyond word boundaries.
pub const PAD: char = '_';

/// Ordered window of feature symbols (letters, including padding).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FeatureVector(Vec<char>);

impl FeatureVector {
    pub fn new(values: Vec<char>) -> Self {
        FeatureVector(values)
    }

    pub fn from_symbols(s: &str) -> Self {
        FeatureVector(s.chars().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[char] {
        &self.0
    }
}

impl fmt::Display for FeatureVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Composite classification label, e.g. a phoneme with a stress marker.
///
/// Compared by exact string equality; the lexicographic order is used only
/// for deterministic tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassLabel(String);

impl ClassLabel {
    pub fn new(label: impl Into<String>) -> Self {
        ClassLabel(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One windowed training example as it occurs in running text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceToken {
    pub features: FeatureVector,
    pub class: ClassLabel,
    /// Index of the source word within the ingested corpus.
    pub word_id: usize,
    /// Index of the focus letter within the source word.
    pub position: usize,
}

/// A unique (feature vector, class) pair with its token frequency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceType {
    pub features: FeatureVector,
    pub class: ClassLabel,
    pub frequency: u64,
}

/// Index of a type within its base's deterministic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeId(pub usize);

impl fmt::Display for TypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index of a class within a base's sorted class inventory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId(pub usize);

/// The deduplicated training memory: all instance types with frequencies.
///
/// Types are held in a fixed deterministic order (feature string, then class
/// label), so every downstream ranking and serialization is reproducible.
/// Feature symbols are stored in one flat buffer to keep the exhaustive
/// distance scans cache-friendly. A `TypeBase` is immutable once built and
/// safe to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeBase {
    n: usize,
    feats: Vec<char>,
    class_ids: Vec<u32>,
    freqs: Vec<u64>,
    classes: Vec<ClassLabel>,
    class_tokens: Vec<u64>,
    token_total: u64,
}

impl TypeBase {
    /// Number of feature positions per type.
    pub fn feature_count(&self) -> usize {
        self.n
    }

    /// Number of stored instance types.
    pub fn type_count(&self) -> usize {
        self.freqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.freqs.is_empty()
    }

    /// Total number of instance tokens collapsed into this base.
    pub fn token_total(&self) -> u64 {
        self.token_total
    }

    pub fn features_of(&self, t: TypeId) -> &[char] {
        &self.feats[t.0 * self.n..(t.0 + 1) * self.n]
    }

    pub fn feature_string(&self, t: TypeId) -> String {
        self.features_of(t).iter().collect()
    }

    pub fn class_id_of(&self, t: TypeId) -> ClassId {
        ClassId(self.class_ids[t.0] as usize)
    }

    pub fn class_of(&self, t: TypeId) -> &ClassLabel {
        &self.classes[self.class_ids[t.0] as usize]
    }

    pub fn frequency_of(&self, t: TypeId) -> u64 {
        self.freqs[t.0]
    }

    /// Class inventory, sorted lexicographically and indexed by [`ClassId`].
    pub fn classes(&self) -> &[ClassLabel] {
        &self.classes
    }

    /// Token count of a class across the whole base.
    pub fn class_token_count(&self, c: ClassId) -> u64 {
        self.class_tokens[c.0]
    }

    pub fn type_ids(&self) -> impl Iterator<Item = TypeId> {
        (0..self.type_count()).map(TypeId)
    }

    /// Owned view of one stored type.
    pub fn get(&self, t: TypeId) -> InstanceType {
        InstanceType {
            features: FeatureVector::new(self.features_of(t).to_vec()),
            class: self.class_of(t).clone(),
            frequency: self.frequency_of(t),
        }
    }

    /// Symbols observed in stored feature vectors, plus the padding symbol.
    pub fn alphabet(&self) -> std::collections::BTreeSet<char> {
        let mut set: std::collections::BTreeSet<char> = self.feats.iter().copied().collect();
        set.insert(PAD);
        set
    }

    /// Builds a new base keeping exactly the types where `keep` is true.
    ///
    /// Type order is preserved; the class inventory and token totals are
    /// rebuilt from the surviving types.
    pub fn retain(&self, keep: &[bool]) -> TypeBase {
        assert_eq!(keep.len(), self.type_count());
        let types: Vec<InstanceType> = self
            .type_ids()
            .filter(|t| keep[t.0])
            .map(|t| self.get(t))
            .collect();
        // Surviving types are already in deterministic order and unique.
        Self::from_sorted_types(self.n, types)
    }

    fn from_sorted_types(n: usize, types: Vec<InstanceType>) -> TypeBase {
        let mut class_inventory: BTreeMap<ClassLabel, u64> = BTreeMap::new();
        for ty in &types {
            *class_inventory.entry(ty.class.clone()).or_insert(0) += ty.frequency;
        }
        let classes: Vec<ClassLabel> = class_inventory.keys().cloned().collect();
        let class_tokens: Vec<u64> = class_inventory.values().copied().collect();
        let class_index: BTreeMap<&ClassLabel, u32> = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c, i as u32))
            .collect();

        let mut feats = Vec::with_capacity(types.len() * n);
        let mut class_ids = Vec::with_capacity(types.len());
        let mut freqs = Vec::with_capacity(types.len());
        let mut token_total = 0u64;
        for ty in &types {
            feats.extend_from_slice(ty.features.values());
            class_ids.push(class_index[&ty.class]);
            freqs.push(ty.frequency);
            token_total += ty.frequency;
        }

        TypeBase {
            n,
            feats,
            class_ids,
            freqs,
            classes,
            class_tokens,
            token_total,
        }
    }

    /// Builds a base from explicit types, validating the `TypeBase`
    /// invariants: consistent widths, positive frequencies, unique
    /// (features, class) pairs. Input order does not matter.
    pub fn from_types(types: Vec<InstanceType>) -> Result<TypeBase> {
        if types.is_empty() {
            return Err(MblError::EmptyCorpus);
        }
        let n = types[0].features.len();
        for (i, ty) in types.iter().enumerate() {
            if ty.features.len() != n {
                return Err(MblError::RaggedFeatures {
                    index: i,
                    expected: n,
                    got: ty.features.len(),
                });
            }
            if ty.frequency == 0 {
                return Err(MblError::Config(format!(
                    "type {i} has frequency 0; frequencies must be positive"
                )));
            }
        }
        let mut types = types;
        types.sort_by(|a, b| (&a.features, &a.class).cmp(&(&b.features, &b.class)));
        for w in types.windows(2) {
            if w[0].features == w[1].features && w[0].class == w[1].class {
                return Err(MblError::Config(format!(
                    "duplicate type: {} {}",
                    w[0].features, w[0].class
                )));
            }
        }
        Ok(Self::from_sorted_types(n, types))
    }

    /// Serializes the base as UTF-8 text, one type per line in the
    /// deterministic order, preceded by a header line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "#typebase n={} tokens={}\n",
            self.n, self.token_total
        ));
        for t in self.type_ids() {
            out.push_str(&self.feature_string(t));
            out.push('\t');
            out.push_str(self.class_of(t).as_str());
            out.push('\t');
            out.push_str(&self.frequency_of(t).to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the text format produced by [`TypeBase::to_text`].
    ///
    /// Lines may appear in any order; the base is re-canonicalized. The
    /// header's token count must match the sum of the stored frequencies.
    pub fn from_text(text: &str) -> Result<TypeBase> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing #typebase header"))?;
        let (n, declared_tokens) = parse_header(header)?;

        let mut types = Vec::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split('\t');
            let feats = parts
                .next()
                .ok_or_else(|| parse_err(lineno, "missing feature field"))?;
            let class = parts
                .next()
                .ok_or_else(|| parse_err(lineno, "missing class field"))?;
            let freq = parts
                .next()
                .ok_or_else(|| parse_err(lineno, "missing frequency field"))?;
            if parts.next().is_some() {
                return Err(parse_err(lineno, "too many fields"));
            }
            let features = FeatureVector::from_symbols(feats);
            if features.len() != n {
                return Err(parse_err(
                    lineno,
                    &format!("{} feature symbols but n={}", features.len(), n),
                ));
            }
            if class.is_empty() {
                return Err(parse_err(lineno, "empty class label"));
            }
            let frequency: u64 = freq
                .parse()
                .map_err(|_| parse_err(lineno, &format!("bad frequency `{freq}`")))?;
            if frequency == 0 {
                return Err(parse_err(lineno, "frequency must be positive"));
            }
            types.push(InstanceType {
                features,
                class: ClassLabel::new(class),
                frequency,
            });
        }

        let base = Self::from_types(types)?;
        if base.n != n {
            return Err(parse_err(1, "header width disagrees with type lines"));
        }
        if base.token_total != declared_tokens {
            return Err(parse_err(
                1,
                &format!(
                    "header declares {} tokens but frequencies sum to {}",
                    declared_tokens, base.token_total
                ),
            ));
        }
        Ok(base)
    }
}

fn parse_err(line: usize, msg: &str) -> MblError {
    MblError::Parse {
        line,
        msg: msg.to_string(),
    }
}

fn parse_header(header: &str) -> Result<(usize, u64)> {
    let rest = header
        .strip_prefix("#typebase ")
        .ok_or_else(|| parse_err(1, "expected `#typebase n=<n> tokens=<count>` header"))?;
    let mut n = None;
    let mut tokens = None;
    for field in rest.split_whitespace() {
        if let Some(v) = field.strip_prefix("n=") {
            n = Some(
                v.parse::<usize>()
                    .map_err(|_| parse_err(1, "bad n in header"))?,
            );
        } else if let Some(v) = field.strip_prefix("tokens=") {
            tokens = Some(
                v.parse::<u64>()
                    .map_err(|_| parse_err(1, "bad token count in header"))?,
            );
        } else {
            return Err(parse_err(1, &format!("unknown header field `{field}`")));
        }
    }
    match (n, tokens) {
        (Some(n), Some(t)) if n >= 1 => Ok((n, t)),
        (Some(_), Some(_)) => Err(parse_err(1, "header n must be >= 1")),
        _ => Err(parse_err(1, "header must carry both n= and tokens=")),
    }
}

/// Collapses instance tokens into a deduplicated [`TypeBase`].
///
/// One type is stored per distinct (features, class) pair, its frequency
/// counting the collapsed tokens. The result is independent of token order.
pub fn build_type_base(tokens: &[InstanceToken]) -> Result<TypeBase> {
    if tokens.is_empty() {
        return Err(MblError::EmptyCorpus);
    }
    let n = tokens[0].features.len();
    let mut counts: BTreeMap<(&FeatureVector, &ClassLabel), u64> = BTreeMap::new();
    for (i, tok) in tokens.iter().enumerate() {
        if tok.features.len() != n {
            return Err(MblError::RaggedFeatures {
                index: i,
                expected: n,
                got: tok.features.len(),
            });
        }
        *counts.entry((&tok.features, &tok.class)).or_insert(0) += 1;
    }
    // BTreeMap iteration already yields (feature string, class) order.
    let types: Vec<InstanceType> = counts
        .into_iter()
        .map(|((features, class), frequency)| InstanceType {
            features: features.clone(),
            class: class.clone(),
            frequency,
        })
        .collect();
    Ok(TypeBase::from_sorted_types(n, types))
}

/// Byte-count view of a base under the flat storage model: one byte per
/// feature symbol, one per class label, two per frequency field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MemoryStats {
    pub token_bytes: u64,
    pub type_bytes: u64,
    pub type_bytes_with_freq: u64,
    pub reduction_pct: f64,
    pub reduction_with_freq_pct: f64,
}

impl MemoryStats {
    /// Computes the stats from raw counts. `token_total` is the token count
    /// the type storage is compared against (for an edited base, the token
    /// count of the original, unedited training material).
    pub fn from_counts(token_total: u64, type_count: u64, n: usize) -> MemoryStats {
        let record = n as u64 + 1;
        let token_bytes = token_total * record;
        let type_bytes = type_count * record;
        let type_bytes_with_freq = type_count * (record + 2);
        let pct = |bytes: u64| {
            if token_bytes == 0 {
                0.0
            } else {
                100.0 * (1.0 - bytes as f64 / token_bytes as f64)
            }
        };
        MemoryStats {
            token_bytes,
            type_bytes,
            type_bytes_with_freq,
            reduction_pct: pct(type_bytes),
            reduction_with_freq_pct: pct(type_bytes_with_freq),
        }
    }
}

/// Memory accounting for a base against its own ingested token count.
pub fn memory_stats(base: &TypeBase) -> MemoryStats {
    MemoryStats::from_counts(base.token_total(), base.type_count() as u64, base.n)
}

/// Finds every type that shares its feature vector with a differently
/// classed type that defeats it under the classifier's tie-break order.
///
/// Such *minority ambiguities* can never be selected as a winner, not even
/// for their own feature vector. Returned ids are sorted ascending.
pub fn find_minority_ambiguities(base: &TypeBase) -> Vec<TypeId> {
    let mut minorities = Vec::new();
    let count = base.type_count();
    let mut start = 0;
    while start < count {
        let mut end = start + 1;
        while end < count && base.features_of(TypeId(end)) == base.features_of(TypeId(start)) {
            end += 1;
        }
        if end - start > 1 {
            let group: Vec<TypeId> = (start..end).map(TypeId).collect();
            let winner = classifier::select_winner(&group, base);
            minorities.extend(group.into_iter().filter(|&t| t != winner));
        }
        start = end;
    }
    minorities
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    fn tok(feats: &str, class: &str) -> InstanceToken {
        InstanceToken {
            features: FeatureVector::from_symbols(feats),
            class: ClassLabel::new(class),
            word_id: 0,
            position: 0,
        }
    }

    #[test]
    fn duplicate_tokens_collapse_into_types() {
        let base = build_type_base(&[tok("ab", "P"), tok("ab", "P"), tok("ac", "Q")]).unwrap();
        assert_eq!(base.type_count(), 2);
        assert_eq!(base.token_total(), 3);
        let first = base.get(TypeId(0));
        assert_eq!(first.features.to_string(), "ab");
        assert_eq!(first.class.as_str(), "P");
        assert_eq!(first.frequency, 2);
        let second = base.get(TypeId(1));
        assert_eq!(second.features.to_string(), "ac");
        assert_eq!(second.frequency, 1);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(build_type_base(&[]), Err(MblError::EmptyCorpus)));
    }

    #[test]
    fn ragged_widths_are_an_error() {
        let err = build_type_base(&[tok("ab", "P"), tok("abc", "P")]).unwrap_err();
        assert!(matches!(err, MblError::RaggedFeatures { index: 1, .. }));
    }

    #[test]
    fn sampled_tokens_match_multiset_oracle() {
        // 1,000 tokens drawn from 50 distinct pairs; frequencies must agree
        // with a plain multiset count.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pool: Vec<(String, String)> = (0..50)
            .map(|i| {
                let feats: String = (0..3)
                    .map(|j| char::from(b'a' + ((i * 7 + j * 3) % 9) as u8))
                    .collect();
                (feats, format!("C{}", i % 11))
            })
            .collect();
        // Dedup the pool in case the arithmetic collided.
        let pool: Vec<_> = pool
            .into_iter()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let tokens: Vec<InstanceToken> = (0..1000)
            .map(|_| {
                let (f, c) = &pool[rng.gen_range(0..pool.len())];
                tok(f, c)
            })
            .collect();

        let mut oracle: HashMap<(String, String), u64> = HashMap::new();
        for t in &tokens {
            *oracle
                .entry((t.features.to_string(), t.class.to_string()))
                .or_insert(0) += 1;
        }

        let base = build_type_base(&tokens).unwrap();
        assert_eq!(base.type_count(), oracle.len());
        assert_eq!(base.token_total(), 1000);
        for t in base.type_ids() {
            let key = (base.feature_string(t), base.class_of(t).to_string());
            assert_eq!(base.frequency_of(t), oracle[&key]);
        }
    }

    #[test]
    fn token_order_does_not_change_the_base() {
        let tokens = vec![
            tok("ab", "P"),
            tok("ba", "Q"),
            tok("ab", "P"),
            tok("aa", "P"),
            tok("ba", "R"),
        ];
        let base = build_type_base(&tokens).unwrap();
        let mut rev = tokens.clone();
        rev.reverse();
        assert_eq!(base, build_type_base(&rev).unwrap());
        let mut rot = tokens.clone();
        rot.rotate_left(2);
        assert_eq!(base, build_type_base(&rot).unwrap());
    }

    #[test]
    fn expansion_round_trips_the_token_multiset() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let tokens: Vec<InstanceToken> = (0..400)
            .map(|_| {
                let feats: String = (0..3)
                    .map(|_| char::from(b'a' + rng.gen_range(0..4u8)))
                    .collect();
                tok(&feats, ["P", "Q", "R"][rng.gen_range(0..3)])
            })
            .collect();
        let base = build_type_base(&tokens).unwrap();

        let mut expanded: HashMap<(String, String), u64> = HashMap::new();
        for t in base.type_ids() {
            expanded.insert(
                (base.feature_string(t), base.class_of(t).to_string()),
                base.frequency_of(t),
            );
        }
        let mut original: HashMap<(String, String), u64> = HashMap::new();
        for t in &tokens {
            *original
                .entry((t.features.to_string(), t.class.to_string()))
                .or_insert(0) += 1;
        }
        assert_eq!(expanded, original);
    }

    #[test]
    fn class_inventory_matches_types() {
        let base = build_type_base(&[
            tok("aa", "P"),
            tok("ab", "Q"),
            tok("ab", "Q"),
            tok("ac", "P"),
        ])
        .unwrap();
        assert_eq!(base.classes().len(), 2);
        assert_eq!(base.classes()[0].as_str(), "P");
        assert_eq!(base.class_token_count(ClassId(0)), 2);
        assert_eq!(base.class_token_count(ClassId(1)), 2);
        let sum: u64 = (0..base.classes().len())
            .map(|c| base.class_token_count(ClassId(c)))
            .sum();
        assert_eq!(sum, base.token_total());
    }

    #[test]
    fn paper_scale_counts_reproduce_reported_reductions() {
        let full = MemoryStats::from_counts(608_228, 222_601, 7);
        assert!((full.reduction_pct - 63.0).abs() <= 0.5);
        assert!((full.reduction_with_freq_pct - 54.0).abs() <= 0.5);

        let minority_removed = MemoryStats::from_counts(608_228, 222_601 - 9_443, 7);
        assert!((minority_removed.reduction_pct - 65.0).abs() <= 0.5);
        assert!((minority_removed.reduction_with_freq_pct - 56.0).abs() <= 0.5);
    }

    #[test]
    fn no_duplicates_means_no_reduction() {
        let stats = MemoryStats::from_counts(1000, 1000, 7);
        assert_eq!(stats.reduction_pct, 0.0);
        assert!(stats.reduction_with_freq_pct < 0.0);
    }

    #[test]
    fn memory_arithmetic_invariants_hold_for_random_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let tokens = rng.gen_range(1..=1_000_000u64);
            let types = rng.gen_range(1..=tokens);
            let n = rng.gen_range(1..=15usize);
            let s = MemoryStats::from_counts(tokens, types, n);
            assert_eq!(s.token_bytes, tokens * (n as u64 + 1));
            assert_eq!(s.type_bytes, types * (n as u64 + 1));
            assert_eq!(s.type_bytes_with_freq, types * (n as u64 + 3));
            let expect = 100.0 * (1.0 - s.type_bytes as f64 / s.token_bytes as f64);
            assert_eq!(s.reduction_pct, expect);
        }
    }

    #[test]
    fn minority_ambiguities_lower_frequency_twin() {
        let base = build_type_base(&[tok("a", "P"), tok("a", "P"), tok("a", "Q")]).unwrap();
        let minorities = find_minority_ambiguities(&base);
        assert_eq!(minorities.len(), 1);
        assert_eq!(base.class_of(minorities[0]).as_str(), "Q");
    }

    #[test]
    fn unique_feature_vectors_have_no_ambiguities() {
        let base = build_type_base(&[tok("aa", "P"), tok("ab", "Q"), tok("ba", "P")]).unwrap();
        assert!(find_minority_ambiguities(&base).is_empty());
    }

    #[test]
    fn a_type_and_its_defeater_are_never_both_minority() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let tokens: Vec<InstanceToken> = (0..rng.gen_range(5..60))
                .map(|_| {
                    let feats: String = (0..2)
                        .map(|_| char::from(b'a' + rng.gen_range(0..3u8)))
                        .collect();
                    tok(&feats, ["P", "Q", "R"][rng.gen_range(0..3)])
                })
                .collect();
            let base = build_type_base(&tokens).unwrap();
            let minorities = find_minority_ambiguities(&base);
            let is_minority = |t: TypeId| minorities.contains(&t);
            for &m in &minorities {
                // The defeating twin group winner must not be minority.
                let twins: Vec<TypeId> = base
                    .type_ids()
                    .filter(|&u| base.features_of(u) == base.features_of(m))
                    .collect();
                let winner = classifier::select_winner(&twins, &base);
                assert!(!is_minority(winner));
            }
        }
    }

    #[test]
    fn serialization_round_trips_and_is_deterministic() {
        let base = build_type_base(&[
            tok("ab", "P"),
            tok("ab", "P"),
            tok("ac", "Q"),
            tok("ba", "P"),
        ])
        .unwrap();
        let text = base.to_text();
        assert!(text.starts_with("#typebase n=2 tokens=4\n"));
        let reparsed = TypeBase::from_text(&text).unwrap();
        assert_eq!(base, reparsed);
        assert_eq!(text, reparsed.to_text());
    }

    #[test]
    fn from_text_rejects_malformed_input() {
        assert!(TypeBase::from_text("").is_err());
        assert!(TypeBase::from_text("#typebase n=2 tokens=1\nabc\tP\t1\n").is_err());
        assert!(TypeBase::from_text("#typebase n=2 tokens=5\nab\tP\t1\n").is_err());
        assert!(TypeBase::from_text("#typebase n=2 tokens=2\nab\tP\t1\nab\tP\t1\n").is_err());
        assert!(TypeBase::from_text("#typebase n=2 tokens=1\nab\tP\t0\n").is_err());
    }

    #[test]
    fn unsorted_text_is_canonicalized() {
        let text = "#typebase n=1 tokens=3\nb\tQ\t1\na\tP\t2\n";
        let base = TypeBase::from_text(text).unwrap();
        assert_eq!(base.feature_string(TypeId(0)), "a");
        assert_eq!(
            base.to_text(),
            "#typebase n=1 tokens=3\na\tP\t2\nb\tQ\t1\n"
        );
    }
}
