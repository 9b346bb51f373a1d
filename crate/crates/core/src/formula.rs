//! Formula syntax tree, signatures and size measures.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// The propositional core of a literal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LitBase {
    Top,
    Bot,
    Pos(String),
    /// Dual negation of a proposition.
    Neg(String),
}

impl LitBase {
    /// The classically negated base (`¬`).
    pub fn dual(&self) -> LitBase {
        match self {
            LitBase::Top => LitBase::Bot,
            LitBase::Bot => LitBase::Top,
            LitBase::Pos(p) => LitBase::Neg(p.clone()),
            LitBase::Neg(p) => LitBase::Pos(p.clone()),
        }
    }

    pub fn prop(&self) -> Option<&str> {
        match self {
            LitBase::Pos(p) | LitBase::Neg(p) => Some(p),
            _ => None,
        }
    }
}

/// One of the eight literal forms: `⊤, ⊥, p, ¬p`, optionally under `~`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub base: LitBase,
    /// Leading contradictory negation.
    pub strong: bool,
}

impl Literal {
    pub fn new(base: LitBase, strong: bool) -> Self {
        Literal { base, strong }
    }

    pub fn top() -> Self {
        Literal::new(LitBase::Top, false)
    }

    pub fn bot() -> Self {
        Literal::new(LitBase::Bot, false)
    }

    pub fn pos(p: impl Into<String>) -> Self {
        Literal::new(LitBase::Pos(p.into()), false)
    }

    pub fn neg(p: impl Into<String>) -> Self {
        Literal::new(LitBase::Neg(p.into()), false)
    }

    /// All eight literal forms over the given propositions.
    pub fn alphabet(props: &[String]) -> Vec<Literal> {
        let mut bases = alloc::vec![LitBase::Top, LitBase::Bot];
        for p in props {
            bases.push(LitBase::Pos(p.clone()));
            bases.push(LitBase::Neg(p.clone()));
        }
        let mut out = Vec::with_capacity(bases.len() * 2);
        for strong in [false, true] {
            out.extend(bases.iter().cloned().map(|b| Literal::new(b, strong)));
        }
        out
    }
}

/// Binary connectives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    And,
    /// Boolean disjunction `⊽`.
    BoolOr,
    /// Lax splitting disjunction `∨`.
    Or,
    /// Strict splitting disjunction `∨̇`.
    StrictOr,
    /// Lax co-split `⩓`.
    CoAnd,
    /// Strict co-split `⩓̇`.
    StrictCoAnd,
}

impl BinOp {
    pub const ALL: [BinOp; 6] = [
        BinOp::And,
        BinOp::BoolOr,
        BinOp::Or,
        BinOp::StrictOr,
        BinOp::CoAnd,
        BinOp::StrictCoAnd,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::And => "/\\",
            BinOp::BoolOr => "(v)",
            BinOp::Or => "\\/",
            BinOp::StrictOr => "\\./",
            BinOp::CoAnd => "(^)",
            BinOp::StrictCoAnd => "(.^)",
        }
    }

    pub fn connective(self) -> Connective {
        match self {
            BinOp::And => Connective::And,
            BinOp::BoolOr => Connective::BoolOr,
            BinOp::Or => Connective::Or,
            BinOp::StrictOr => Connective::StrictOr,
            BinOp::CoAnd => Connective::CoAnd,
            BinOp::StrictCoAnd => Connective::StrictCoAnd,
        }
    }

    /// Whether the connective quantifies over splits.
    pub fn is_split(self) -> bool {
        !matches!(self, BinOp::And | BinOp::BoolOr)
    }

    pub fn is_strict(self) -> bool {
        matches!(self, BinOp::StrictOr | BinOp::StrictCoAnd)
    }
}

/// Connectives that may appear in a signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    And,
    BoolOr,
    Or,
    StrictOr,
    CoAnd,
    StrictCoAnd,
    /// Contradictory negation applied to compound formulas.
    Not,
}

impl Connective {
    pub const ALL: [Connective; 7] = [
        Connective::And,
        Connective::BoolOr,
        Connective::Or,
        Connective::StrictOr,
        Connective::CoAnd,
        Connective::StrictCoAnd,
        Connective::Not,
    ];

    pub fn bin_op(self) -> Option<BinOp> {
        Some(match self {
            Connective::And => BinOp::And,
            Connective::BoolOr => BinOp::BoolOr,
            Connective::Or => BinOp::Or,
            Connective::StrictOr => BinOp::StrictOr,
            Connective::CoAnd => BinOp::CoAnd,
            Connective::StrictCoAnd => BinOp::StrictCoAnd,
            Connective::Not => return None,
        })
    }

    /// Short ASCII name used in signature strings.
    pub fn name(self) -> &'static str {
        match self {
            Connective::Not => "~",
            c => c.bin_op().map(BinOp::symbol).unwrap_or(""),
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

/// The dependency atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomKind {
    /// `dep(α;β)`
    Dependence,
    /// `α ⊥ β`
    Independence,
    /// `α ⊥_γ β`, arguments ordered (α; γ; β).
    CondIndependence,
    /// `α ⊆ β`
    Inclusion,
    /// `α | β`
    Exclusion,
    /// `α Υ β`
    Anonymity,
}

impl AtomKind {
    pub const ALL: [AtomKind; 6] = [
        AtomKind::Dependence,
        AtomKind::Independence,
        AtomKind::CondIndependence,
        AtomKind::Inclusion,
        AtomKind::Exclusion,
        AtomKind::Anonymity,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            AtomKind::Dependence => "dep",
            AtomKind::Independence => "perp",
            AtomKind::CondIndependence => "perpc",
            AtomKind::Inclusion => "inc",
            AtomKind::Exclusion => "excl",
            AtomKind::Anonymity => "ups",
        }
    }

    pub fn from_keyword(word: &str) -> Option<AtomKind> {
        AtomKind::ALL.into_iter().find(|k| k.keyword() == word)
    }

    pub fn group_count(self) -> usize {
        if self == AtomKind::CondIndependence {
            3
        } else {
            2
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

/// A dependency atom with validated argument tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    kind: AtomKind,
    args: Vec<Vec<Formula>>,
}

impl Atom {
    pub fn new(kind: AtomKind, args: Vec<Vec<Formula>>) -> Result<Atom, Error> {
        if args.len() != kind.group_count() {
            return Err(Error::Arity(alloc::format!(
                "{} takes {} argument tuples, got {}",
                kind.keyword(),
                kind.group_count(),
                args.len()
            )));
        }
        for arg in args.iter().flatten() {
            if !arg.is_pure() {
                return Err(Error::NotPure(arg.to_string()));
            }
        }
        let bad = |msg: &str| Err(Error::Arity(alloc::format!("{}: {msg}", kind.keyword())));
        match kind {
            AtomKind::Dependence | AtomKind::Anonymity if args[1].is_empty() => {
                return bad("right-hand tuple must be nonempty")
            }
            AtomKind::Inclusion | AtomKind::Exclusion
                if args[0].len() != args[1].len() || args[0].is_empty() =>
            {
                return bad("tuples must be nonempty and of equal length")
            }
            _ => {}
        }
        Ok(Atom { kind, args })
    }

    pub fn dep(alpha: Vec<Formula>, beta: Vec<Formula>) -> Result<Atom, Error> {
        Atom::new(AtomKind::Dependence, alloc::vec![alpha, beta])
    }

    pub fn perp(alpha: Vec<Formula>, beta: Vec<Formula>) -> Result<Atom, Error> {
        Atom::new(AtomKind::Independence, alloc::vec![alpha, beta])
    }

    /// Conditional independence of `alpha` and `beta` given `cond`.
    pub fn perp_cond(
        alpha: Vec<Formula>,
        cond: Vec<Formula>,
        beta: Vec<Formula>,
    ) -> Result<Atom, Error> {
        Atom::new(AtomKind::CondIndependence, alloc::vec![alpha, cond, beta])
    }

    pub fn inc(alpha: Vec<Formula>, beta: Vec<Formula>) -> Result<Atom, Error> {
        Atom::new(AtomKind::Inclusion, alloc::vec![alpha, beta])
    }

    pub fn excl(alpha: Vec<Formula>, beta: Vec<Formula>) -> Result<Atom, Error> {
        Atom::new(AtomKind::Exclusion, alloc::vec![alpha, beta])
    }

    pub fn ups(alpha: Vec<Formula>, beta: Vec<Formula>) -> Result<Atom, Error> {
        Atom::new(AtomKind::Anonymity, alloc::vec![alpha, beta])
    }

    pub fn kind(&self) -> AtomKind {
        self.kind
    }

    pub fn args(&self) -> &[Vec<Formula>] {
        &self.args
    }

    /// First tuple.
    pub fn alpha(&self) -> &[Formula] {
        &self.args[0]
    }

    /// Last tuple.
    pub fn beta(&self) -> &[Formula] {
        &self.args[self.args.len() - 1]
    }

    /// The condition tuple of a conditional independence atom.
    pub fn cond(&self) -> &[Formula] {
        if self.kind == AtomKind::CondIndependence {
            &self.args[1]
        } else {
            &[]
        }
    }
}

/// A team-logic formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Lit(Literal),
    /// Contradictory negation of a compound formula.
    Not(Box<Formula>),
    Bin(BinOp, Box<Formula>, Box<Formula>),
    Atom(Atom),
}

impl From<Literal> for Formula {
    fn from(l: Literal) -> Self {
        Formula::Lit(l)
    }
}

impl From<Atom> for Formula {
    fn from(a: Atom) -> Self {
        Formula::Atom(a)
    }
}

impl Formula {
    pub fn top() -> Formula {
        Literal::top().into()
    }

    pub fn bot() -> Formula {
        Literal::bot().into()
    }

    pub fn prop(p: impl Into<String>) -> Formula {
        Literal::pos(p).into()
    }

    pub fn neg_prop(p: impl Into<String>) -> Formula {
        Literal::neg(p).into()
    }

    /// `~f`. A plain literal absorbs the negation; anything else is wrapped.
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        match f {
            Formula::Lit(Literal {
                base,
                strong: false,
            }) => Formula::Lit(Literal::new(base, true)),
            f => Formula::Not(Box::new(f)),
        }
    }

    /// `~f` with double negations cancelled.
    pub fn not_simplified(f: Formula) -> Formula {
        match f {
            Formula::Not(g) => *g,
            Formula::Lit(Literal { base, strong }) => Formula::Lit(Literal::new(base, !strong)),
            f => Formula::Not(Box::new(f)),
        }
    }

    pub fn bin(op: BinOp, l: Formula, r: Formula) -> Formula {
        Formula::Bin(op, Box::new(l), Box::new(r))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::And, l, r)
    }

    pub fn bor(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::BoolOr, l, r)
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::Or, l, r)
    }

    pub fn strict_or(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::StrictOr, l, r)
    }

    pub fn co_and(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::CoAnd, l, r)
    }

    pub fn strict_co_and(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::StrictCoAnd, l, r)
    }

    /// Purely propositional: only `⊤, ⊥, p, ¬p`, `∧` and lax `∨`.
    pub fn is_pure(&self) -> bool {
        match self {
            Formula::Lit(l) => !l.strong,
            Formula::Bin(BinOp::And | BinOp::Or, l, r) => l.is_pure() && r.is_pure(),
            _ => false,
        }
    }

    /// Dual negation `¬f` of a purely propositional formula, pushed to the
    /// propositions.
    pub fn dual(&self) -> Result<Formula, Error> {
        match self {
            Formula::Lit(Literal {
                base,
                strong: false,
            }) => Ok(Formula::Lit(Literal::new(base.dual(), false))),
            Formula::Bin(BinOp::And, l, r) => Ok(Formula::or(l.dual()?, r.dual()?)),
            Formula::Bin(BinOp::Or, l, r) => Ok(Formula::and(l.dual()?, r.dual()?)),
            f => Err(Error::NotPure(f.to_string())),
        }
    }

    /// Symbol count of the canonical rendering.
    pub fn length(&self) -> usize {
        match self {
            Formula::Lit(l) => {
                let base = match l.base {
                    LitBase::Neg(_) => 2,
                    _ => 1,
                };
                base + usize::from(l.strong)
            }
            Formula::Not(f) => 1 + f.length(),
            Formula::Bin(_, l, r) => 3 + l.length() + r.length(),
            Formula::Atom(a) => {
                let args: usize = a.args.iter().flatten().map(Formula::length).sum();
                3 + args + a.args.len() - 1
            }
        }
    }

    /// Number of literal leaves; an atom counts as one leaf.
    pub fn width(&self) -> usize {
        match self {
            Formula::Lit(_) | Formula::Atom(_) => 1,
            Formula::Not(f) => f.width(),
            Formula::Bin(_, l, r) => l.width() + r.width(),
        }
    }

    /// Number of occurrences of the binary connective `op`.
    pub fn count_op(&self, op: BinOp) -> usize {
        match self {
            Formula::Lit(_) | Formula::Atom(_) => 0,
            Formula::Not(f) => f.count_op(op),
            Formula::Bin(o, l, r) => usize::from(*o == op) + l.count_op(op) + r.count_op(op),
        }
    }

    /// Number of `⊽` occurrences.
    pub fn occ_bor(&self) -> usize {
        self.count_op(BinOp::BoolOr)
    }

    /// Number of strict splits and strict co-splits.
    pub fn occ_strict(&self) -> usize {
        self.count_op(BinOp::StrictOr) + self.count_op(BinOp::StrictCoAnd)
    }

    /// Whether some node is a `~` applied to a compound formula.
    pub fn has_compound_not(&self) -> bool {
        match self {
            Formula::Lit(_) | Formula::Atom(_) => false,
            Formula::Not(_) => true,
            Formula::Bin(_, l, r) => l.has_compound_not() || r.has_compound_not(),
        }
    }

    pub fn has_atoms(&self) -> bool {
        match self {
            Formula::Lit(_) => false,
            Formula::Atom(_) => true,
            Formula::Not(f) => f.has_atoms(),
            Formula::Bin(_, l, r) => l.has_atoms() || r.has_atoms(),
        }
    }

    /// Whether a split or co-split connective occurs.
    pub fn has_splits(&self) -> bool {
        match self {
            Formula::Lit(_) | Formula::Atom(_) => false,
            Formula::Not(f) => f.has_splits(),
            Formula::Bin(op, l, r) => op.is_split() || l.has_splits() || r.has_splits(),
        }
    }

    /// The propositions occurring in the formula.
    pub fn props(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_props(&mut out);
        out
    }

    fn collect_props(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Lit(l) => {
                if let Some(p) = l.base.prop() {
                    out.insert(p.to_string());
                }
            }
            Formula::Not(f) => f.collect_props(out),
            Formula::Bin(_, l, r) => {
                l.collect_props(out);
                r.collect_props(out);
            }
            Formula::Atom(a) => a.args.iter().flatten().for_each(|f| f.collect_props(out)),
        }
    }

    /// Replaces every binary connective via `map`, bottom-up. Atom arguments
    /// are left untouched.
    pub fn map_ops(&self, map: &impl Fn(BinOp) -> BinOp) -> Formula {
        match self {
            Formula::Lit(_) | Formula::Atom(_) => self.clone(),
            Formula::Not(f) => Formula::Not(Box::new(f.map_ops(map))),
            Formula::Bin(op, l, r) => Formula::bin(map(*op), l.map_ops(map), r.map_ops(map)),
        }
    }
}

/// A set of connectives and atoms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    connectives: u8,
    atoms: u8,
}

impl Signature {
    pub fn new(connectives: &[Connective]) -> Signature {
        Signature {
            connectives: connectives.iter().fold(0, |acc, c| acc | c.bit()),
            atoms: 0,
        }
    }

    pub fn with_atoms(mut self, atoms: &[AtomKind]) -> Signature {
        self.atoms |= atoms.iter().fold(0, |acc, a| acc | a.bit());
        self
    }

    /// `{⊽, ∧, ∨}`
    pub fn lax_existential() -> Signature {
        Signature::new(&[Connective::BoolOr, Connective::And, Connective::Or])
    }

    /// `{⊽, ∧, ∨̇}`
    pub fn strict_existential() -> Signature {
        Signature::new(&[Connective::BoolOr, Connective::And, Connective::StrictOr])
    }

    /// `{⊽, ∧, ∨, ∨̇}`
    pub fn existential() -> Signature {
        Signature::new(&[
            Connective::BoolOr,
            Connective::And,
            Connective::Or,
            Connective::StrictOr,
        ])
    }

    pub fn contains(&self, c: Connective) -> bool {
        self.connectives & c.bit() != 0
    }

    pub fn contains_op(&self, op: BinOp) -> bool {
        self.contains(op.connective())
    }

    pub fn allows_atom(&self, kind: AtomKind) -> bool {
        self.atoms & kind.bit() != 0
    }

    pub fn connectives(&self) -> impl Iterator<Item = Connective> + '_ {
        Connective::ALL.into_iter().filter(|c| self.contains(*c))
    }

    pub fn bin_ops(&self) -> impl Iterator<Item = BinOp> + '_ {
        BinOp::ALL.into_iter().filter(|o| self.contains_op(*o))
    }

    /// Parses a comma-separated list such as `(v),/\,\/`, `~` or atom keywords.
    pub fn parse(text: &str) -> Result<Signature, Error> {
        let mut sig = Signature::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if let Some(c) = Connective::ALL.into_iter().find(|c| c.name() == item) {
                sig.connectives |= c.bit();
            } else if let Some(k) = AtomKind::from_keyword(item) {
                sig.atoms |= k.bit();
            } else {
                return Err(Error::Signature(alloc::format!("unknown connective `{item}`")));
            }
        }
        Ok(sig)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let names = self
            .connectives()
            .map(Connective::name)
            .chain(AtomKind::ALL.into_iter().filter(|k| self.allows_atom(*k)).map(AtomKind::keyword));
        for name in names {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            f.write_str(name)?;
        }
        Ok(())
    }
}

/// Whether every compound node of `f` is permitted by `sig`. Negated literals
/// are always allowed.
pub fn check_signature(f: &Formula, sig: &Signature) -> bool {
    match f {
        Formula::Lit(_) => true,
        Formula::Not(g) => sig.contains(Connective::Not) && check_signature(g, sig),
        Formula::Bin(op, l, r) => {
            sig.contains_op(*op) && check_signature(l, sig) && check_signature(r, sig)
        }
        Formula::Atom(a) => sig.allows_atom(a.kind),
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strong {
            f.write_str("~")?;
        }
        match &self.base {
            LitBase::Top => f.write_str("top"),
            LitBase::Bot => f.write_str("bot"),
            LitBase::Pos(p) => f.write_str(p),
            LitBase::Neg(p) => write!(f, "-{p}"),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind.keyword())?;
        for (g, group) in self.args.iter().enumerate() {
            if g > 0 {
                f.write_str(";")?;
            }
            for (i, arg) in group.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{arg}")?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Lit(l) => write!(f, "{l}"),
            Formula::Not(g) => write!(f, "~{g}"),
            Formula::Bin(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Formula::Atom(a) => write!(f, "{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p() -> Formula {
        Formula::prop("p")
    }

    fn q() -> Formula {
        Formula::prop("q")
    }

    #[test]
    fn lengths() {
        assert_eq!(p().length(), 1);
        assert_eq!(Formula::and(p(), q()).length(), 5);
        assert_eq!(Formula::not(Formula::neg_prop("p")).length(), 3);
        assert_eq!(Atom::dep(vec![p()], vec![q()]).map(Formula::from).unwrap().length(), 6);
    }

    #[test]
    fn widths() {
        assert_eq!(p().width(), 1);
        assert_eq!(Formula::or(Formula::and(p(), q()), Formula::neg_prop("p")).width(), 3);
        assert_eq!(Formula::not(Formula::bor(p(), q())).width(), 2);
    }

    #[test]
    fn occ_bor_counts() {
        assert_eq!(Formula::bor(p(), q()).occ_bor(), 1);
        assert_eq!(Formula::and(p(), q()).occ_bor(), 0);
        assert_eq!(Formula::bor(Formula::bor(p(), q()), Formula::prop("r")).occ_bor(), 2);
    }

    #[test]
    fn printing() {
        assert_eq!(Formula::and(p(), q()).to_string(), "(p /\\ q)");
        assert_eq!(Formula::not(Formula::neg_prop("p")).to_string(), "~-p");
        let inc = Atom::inc(vec![p()], vec![q()]).unwrap();
        assert_eq!(inc.to_string(), "inc(p;q)");
        let c = Atom::dep(vec![], vec![q()]).unwrap();
        assert_eq!(c.to_string(), "dep(;q)");
    }

    #[test]
    fn signature_checks() {
        let and_bor = Signature::new(&[Connective::And, Connective::BoolOr]);
        assert!(!check_signature(&Formula::or(p(), q()), &and_bor));
        let and = Signature::new(&[Connective::And]);
        assert!(check_signature(&Formula::and(Formula::not(p()), q()), &and));
        assert!(!check_signature(&Formula::not(Formula::and(p(), q())), &and));
    }

    #[test]
    fn atom_arity() {
        assert!(Atom::dep(vec![p()], vec![]).is_err());
        assert!(Atom::inc(vec![p()], vec![q(), p()]).is_err());
        assert!(Atom::excl(vec![], vec![]).is_err());
        assert!(Atom::ups(vec![], vec![q()]).is_ok());
        assert!(Atom::perp(vec![], vec![]).is_ok());
        assert!(Atom::dep(vec![Formula::not(p())], vec![q()]).is_err());
        assert!(Atom::dep(vec![Formula::bor(p(), q())], vec![q()]).is_err());
    }

    #[test]
    fn dual_pushes_inward() {
        let f = Formula::or(p(), Formula::and(q(), Formula::top()));
        let expected = Formula::and(
            Formula::neg_prop("p"),
            Formula::or(Formula::neg_prop("q"), Formula::bot()),
        );
        assert_eq!(f.dual().unwrap(), expected);
        assert!(Formula::not(p()).dual().is_err());
    }

    #[test]
    fn signature_round_trip() {
        let s = Signature::parse("(v),/\\,\\/,~,dep").unwrap();
        assert_eq!(Signature::parse(&s.to_string()).unwrap(), s);
        assert!(s.allows_atom(AtomKind::Dependence));
        assert!(Signature::parse("xor").is_err());
    }
}
