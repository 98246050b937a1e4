use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Bad argument to an operation (out-of-range element, invalid shift, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Cover relations contain a cycle or otherwise fail poset validation.
    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    /// A precondition on the poset shape (unique max/min, ...) is not met.
    #[error("precondition not met: {0}")]
    Precondition(String),

    /// An enumeration was refused because it exceeds the configured cap.
    #[error("cap exceeded: {what} = {got} > {cap} (raise the cap to force)")]
    Cap { what: &'static str, got: usize, cap: usize },

    /// Two routes that must agree produced different values; always a bug.
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// Lexical error in DSL or fixture input.
    #[error("lex error at {line}:{col}: {msg}")]
    Lex { line: usize, col: usize, msg: String },

    /// Syntax error in DSL or fixture input.
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    /// Wrong number or kind of arguments to a DSL builder.
    #[error("arity error: {0}")]
    Arity(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
