use alloc::string::String;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Not an identifier of the form `[a-z][a-z0-9_]*`, or a reserved word.
    #[error("invalid proposition name `{0}`")]
    InvalidProp(String),
    #[error("duplicate proposition `{0}` in domain")]
    DuplicateProp(String),
    #[error("malformed assignment `{0}`")]
    BadAssignment(String),
    #[error("team member outside the assignment space")]
    MemberOutOfRange,
    /// A proposition is used that the domain does not contain.
    #[error("proposition `{0}` is not in the domain")]
    DomainMismatch(String),
    #[error("{what} capacity exceeded: {props} propositions (max {max})")]
    Capacity {
        what: &'static str,
        props: usize,
        max: usize,
    },
    #[error("team with {size} members is too large to evaluate split connectives (max {max})")]
    TeamTooLarge { size: usize, max: usize },
    #[error("syntax error at offset {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("arity error: {0}")]
    Arity(String),
    /// An argument that must be purely propositional is not.
    #[error("not a purely propositional formula: {0}")]
    NotPure(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A formula uses a connective outside the required signature.
    #[error("signature violation: {0}")]
    Signature(String),
    /// Game-level misuse: illegal moves, violated preconditions.
    #[error("game error: {0}")]
    Game(String),
    #[error("search limit reached: {0}")]
    SearchLimit(String),
}
