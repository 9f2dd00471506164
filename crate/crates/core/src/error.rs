use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration limit exceeded: {what} over {size} atoms, cap is {cap}")]
    EnumerationLimit {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("atom `{0}` is not in the alphabet")]
    Scope(String),

    #[error("invalid atom name `{0}`: atoms must match [a-z][A-Za-z0-9_]*")]
    InvalidAtom(String),

    #[error("not an SE-interpretation: here-world is not a subset of there-world")]
    NotSubset,

    #[error("SE-interpretation mentions atoms outside the alphabet")]
    OutOfAlphabet,

    #[error("alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("{}", fmt_syntax(*.rule, *.line, *.column, .message))]
    Syntax {
        rule: Option<usize>,
        line: usize,
        column: usize,
        message: String,
    },
}

fn fmt_syntax(rule: Option<usize>, line: usize, column: usize, message: &str) -> String {
    match rule {
        Some(index) => format!("syntax error in rule {index} at {line}:{column}: {message}"),
        None => format!("syntax error at {line}:{column}: {message}"),
    }
}
