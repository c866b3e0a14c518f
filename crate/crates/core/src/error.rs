use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be at least 2 (got {0})")]
    WordLengthTooSmall(u64),

    #[error("b must be at least 2 (got {0})")]
    AlphabetTooSmall(u64),

    #[error("enumeration of {size} multisets exceeds the cap of {cap}")]
    CapExceeded { size: String, cap: u64 },

    #[error("partition enumeration for n = {n} exceeds the cap of n <= {cap}")]
    PartitionCapExceeded { n: u64, cap: u64 },

    #[error("{count} multiplicity profiles exceed the limit of {max}")]
    TooManyProfiles { count: u128, max: u128 },

    #[error("arrangement search is limited to n <= {max} (got n = {n})")]
    SearchTooLarge { n: u64, max: u64 },

    #[error("multiset {0} is not palindromic")]
    NotPalindromic(String),

    #[error("multiset {0} has odd size")]
    OddSize(String),

    #[error("symbol {symbol} is outside the alphabet of size {alphabet}")]
    SymbolOutOfRange { symbol: usize, alphabet: usize },
}
