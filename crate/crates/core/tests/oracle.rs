//! Brute-force oracles written straight from the definitions, compared with
//! the library on random inputs.

use std::collections::HashMap;

use proptest::prelude::*;
use teamlogic::dimension::generator_for;
use teamlogic::game::{
    apply_move, density, legal_moves, min_separating_width, solve, Game, Outcome, Player, Position, SolveOptions,
    TeamSet, WidthResult,
};
use teamlogic::semantics::{is_local, satisfiable};
use teamlogic::{denotation, eval, parse, Atom, AtomKind, BinOp, Domain, Formula, LitBase, Literal, Signature, Team};

fn members(t: u32) -> impl Iterator<Item = u32> {
    (0..32).filter(move |s| t >> s & 1 == 1)
}

fn submasks(t: u32) -> Vec<u32> {
    let mut out = vec![];
    let mut s = t;
    loop {
        out.push(s);
        if s == 0 {
            return out;
        }
        s = (s - 1) & t;
    }
}

/// Classical value of a purely propositional formula.
fn classical(f: &Formula, d: &Domain, s: u32) -> bool {
    match f {
        Formula::Lit(l) => {
            let v = match &l.base {
                LitBase::Top => true,
                LitBase::Bot => false,
                LitBase::Pos(p) => s >> d.index_of(p).unwrap() & 1 == 1,
                LitBase::Neg(p) => s >> d.index_of(p).unwrap() & 1 == 0,
            };
            assert!(!l.strong);
            v
        }
        Formula::Bin(BinOp::And, l, r) => classical(l, d, s) && classical(r, d, s),
        Formula::Bin(BinOp::Or, l, r) => classical(l, d, s) || classical(r, d, s),
        _ => panic!("not pure: {f}"),
    }
}

fn values(tuple: &[Formula], d: &Domain, s: u32) -> Vec<bool> {
    tuple.iter().map(|f| classical(f, d, s)).collect()
}

/// Atom semantics by quantifying over members.
fn naive_atom(a: &Atom, d: &Domain, t: u32) -> bool {
    let v = |tuple: &[Formula], s: u32| values(tuple, d, s);
    let (x, y) = (a.alpha(), a.beta());
    let all = || members(t);
    match a.kind() {
        AtomKind::Dependence => all().all(|s| all().all(|u| v(x, s) != v(x, u) || v(y, s) == v(y, u))),
        AtomKind::Exclusion => all().all(|s| all().all(|u| v(x, s) != v(y, u))),
        AtomKind::Inclusion => all().all(|s| all().any(|u| v(x, s) == v(y, u))),
        AtomKind::Anonymity => all().all(|s| all().any(|u| v(x, s) == v(x, u) && v(y, s) != v(y, u))),
        AtomKind::Independence => {
            all().all(|s| all().all(|u| all().any(|w| v(x, w) == v(x, s) && v(y, w) == v(y, u))))
        }
        AtomKind::CondIndependence => {
            let z = a.cond();
            all().all(|s| {
                all().all(|u| {
                    v(z, s) != v(z, u)
                        || all().any(|w| v(z, w) == v(z, s) && v(x, w) == v(x, s) && v(y, w) == v(y, u))
                })
            })
        }
    }
}

/// Team semantics straight from the clauses.
fn naive(f: &Formula, d: &Domain, t: u32) -> bool {
    match f {
        Formula::Lit(l) => {
            let flat = Formula::Lit(Literal::new(l.base.clone(), false));
            members(t).all(|s| classical(&flat, d, s)) != l.strong
        }
        Formula::Not(g) => !naive(g, d, t),
        Formula::Atom(a) => naive_atom(a, d, t),
        Formula::Bin(op, l, r) => {
            let lax = |t1: u32| submasks(t1).into_iter().map(move |extra| (t1, (t & !t1) | extra));
            let splits: Vec<(u32, u32)> = match op {
                BinOp::Or | BinOp::CoAnd => submasks(t).into_iter().flat_map(lax).collect(),
                BinOp::StrictOr | BinOp::StrictCoAnd => submasks(t).into_iter().map(|t1| (t1, t & !t1)).collect(),
                _ => vec![],
            };
            match op {
                BinOp::And => naive(l, d, t) && naive(r, d, t),
                BinOp::BoolOr => naive(l, d, t) || naive(r, d, t),
                BinOp::Or | BinOp::StrictOr => splits.iter().any(|&(a, b)| naive(l, d, a) && naive(r, d, b)),
                BinOp::CoAnd | BinOp::StrictCoAnd => {
                    splits.iter().all(|&(a, b)| naive(l, d, a) || naive(r, d, b))
                }
            }
        }
    }
}

const ATOMS: [&str; 8] = [
    "dep(p;q)",
    "dep(;q)",
    "excl(p;-q)",
    "inc(p;q)",
    "perp(p;q)",
    "ups(p;q)",
    "perpc(p;q;-p)",
    "dep(p /\\ q;-p \\/ q)",
];

fn literal() -> impl Strategy<Value = Formula> {
    let bases = prop_oneof![
        Just(LitBase::Top),
        Just(LitBase::Bot),
        Just(LitBase::Pos("p".into())),
        Just(LitBase::Neg("p".into())),
        Just(LitBase::Pos("q".into())),
        Just(LitBase::Neg("q".into())),
    ];
    (bases, any::<bool>()).prop_map(|(b, strong)| Formula::Lit(Literal::new(b, strong)))
}

fn op(ops: &'static [BinOp]) -> impl Strategy<Value = BinOp> {
    (0..ops.len()).prop_map(move |i| ops[i])
}

const ALL_OPS: [BinOp; 6] = BinOp::ALL;
const POSITIVE_OPS: [BinOp; 3] = [BinOp::BoolOr, BinOp::And, BinOp::Or];

/// Formulas over p, q with every connective, `~` and atoms.
fn any_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        4 => literal(),
        1 => (0..ATOMS.len()).prop_map(|i| parse(ATOMS[i]).unwrap()),
    ];
    leaf.prop_recursive(4, 12, 2, |inner| {
        prop_oneof![
            1 => inner.clone().prop_map(|f| Formula::Not(Box::new(f))),
            4 => (op(&ALL_OPS), inner.clone(), inner).prop_map(|(o, l, r)| Formula::bin(o, l, r)),
        ]
    })
}

/// Formulas over literals with the given connectives only.
fn plain_formula(ops: &'static [BinOp], flat_only: bool) -> impl Strategy<Value = Formula> {
    let leaf = literal().prop_map(move |f| match f {
        Formula::Lit(l) if flat_only => Formula::Lit(Literal::new(l.base, false)),
        f => f,
    });
    leaf.prop_recursive(4, 12, 2, move |inner| {
        (op(ops), inner.clone(), inner).prop_map(|(o, l, r)| Formula::bin(o, l, r))
    })
}

fn pq() -> Domain {
    Domain::new(["p", "q"]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn evaluation_matches_definitions(f in any_formula()) {
        let d = pq();
        let den = denotation(&f, &d).unwrap();
        for t in 0..16u32 {
            let want = naive(&f, &d, t);
            prop_assert_eq!(den.contains_mask(t), want, "{} on {:#06b}", f, t);
            prop_assert_eq!(eval(&f, &Team::new(d.clone(), t).unwrap()).unwrap(), want);
        }
    }

    #[test]
    fn evaluation_matches_definitions_on_three_props(f in any_formula(), t in 0u32..256) {
        let d = Domain::new(["p", "q", "r"]).unwrap();
        prop_assert_eq!(eval(&f, &Team::new(d.clone(), t).unwrap()).unwrap(), naive(&f, &d, t), "{}", f);
    }

    #[test]
    fn double_negation(f in any_formula()) {
        let d = pq();
        let g = Formula::Not(Box::new(Formula::Not(Box::new(f.clone()))));
        let (x, y) = (denotation(&f, &d).unwrap(), denotation(&g, &d).unwrap());
        prop_assert_eq!(x.family(), y.family());
    }

    #[test]
    fn flat_formulas_are_flat(f in plain_formula(&[BinOp::And, BinOp::Or], true)) {
        let d = pq();
        for t in 0..16u32 {
            let by_members = members(t).all(|s| naive(&f, &d, 1 << s));
            prop_assert_eq!(naive(&f, &d, t), by_members, "{}", f);
        }
    }

    #[test]
    fn positive_formulas_are_downward_closed(f in plain_formula(&[BinOp::BoolOr, BinOp::And, BinOp::Or, BinOp::StrictOr], true)) {
        let fam = denotation(&f, &pq()).unwrap();
        prop_assert!(fam.family().is_downward_closed(), "{}", f);
    }

    #[test]
    fn lax_formulas_are_local(f in plain_formula(&[BinOp::BoolOr, BinOp::And, BinOp::Or, BinOp::CoAnd], false)) {
        prop_assert!(is_local(&f, 1).unwrap(), "{}", f);
    }

    #[test]
    fn generators_are_valid(f in plain_formula(&POSITIVE_OPS, false)) {
        let d = pq();
        let g = generator_for(&f, &d).unwrap();
        for t in 0..16u32 {
            prop_assert_eq!(g.generates(t), naive(&f, &d, t), "{}", f);
        }
        prop_assert!(g.dim() <= 1 << f.occ_bor());
    }
}

/// Game value by exhaustive play over the canonical moves, memoised.
fn brute_wins(g: &Game, pos: Position, memo: &mut HashMap<Position, bool>) -> bool {
    if let Some(&v) = memo.get(&pos) {
        return v;
    }
    let mut won = false;
    for mv in legal_moves(g, &pos) {
        won = (1..=2).all(|c| match apply_move(g, &pos, &mv, c).unwrap() {
            Outcome::Winner(w) => w == Player::S,
            Outcome::Continue(next) => brute_wins(g, next, memo),
        });
        if won {
            break;
        }
    }
    memo.insert(pos, won);
    won
}

#[test]
fn solver_matches_exhaustive_play() {
    let sigs = [
        Signature::lax_existential(),
        Signature::strict_existential(),
        Signature::parse("(^),/\\").unwrap(),
        Signature::parse("(.^),(v)").unwrap(),
    ];
    for sig in sigs {
        let g = Game::new(Domain::new(["p"]).unwrap(), sig).unwrap();
        let mut memo = HashMap::new();
        for am in 0u32..16 {
            for bm in 0u32..16 {
                let a = TeamSet::from_teams(members(am));
                let b = TeamSet::from_teams(members(bm));
                for k in 0..=3 {
                    let pos = Position::new(k, a, b);
                    let want = brute_wins(&g, pos, &mut memo);
                    let got = solve(&g, &pos, SolveOptions::default()).unwrap().s_wins;
                    assert_eq!(got, want, "{sig}: k = {k}, A = {a:?}, B = {b:?}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solver_matches_synthesis_on_two_props(am in 1u32..65536, bm in 0u32..65536, k in 1usize..=4) {
        let a = TeamSet::from_teams(members(am).take(3));
        let b = TeamSet::from_teams(members(bm).take(3));
        let g = Game::new(pq(), Signature::lax_existential()).unwrap();
        let width = match min_separating_width(&g, &a, &b, k).unwrap() {
            WidthResult::Exact { width, .. } => Some(width),
            _ => None,
        };
        let got = solve(&g, &Position::new(k, a, b), SolveOptions::default()).unwrap().s_wins;
        prop_assert_eq!(got, width.is_some());
    }
}

#[test]
fn density_matches_neighbour_count() {
    let d = pq();
    for am in 0u32..16 {
        let team = Team::new(d.clone(), am).unwrap();
        for bm in [0u32, 0b1010_1010_1010_1010, 0xffff, 0b0110_1001_1001_0110] {
            let b = TeamSet::from_teams(members(bm));
            let count = members(am).filter(|s| b.contains(am & !(1 << s))).count();
            assert_eq!(density(&TeamSet::singleton(team.mask()), &b), count);
        }
    }
}

#[test]
fn satisfiability_by_enumeration() {
    for text in ["NE \\./ NE", "~p \\./ ~p \\./ ~p", "dep(p;q) /\\ ~dep(p;q)", "ups(p;q)"] {
        let f = parse(text).unwrap();
        for props in [&["p", "q"][..], &["p", "q", "r"]] {
            let d = Domain::new(props.iter().copied()).unwrap();
            let any = (0..1u32 << (1 << props.len())).any(|t| naive(&f, &d, t));
            assert_eq!(satisfiable(&f, &d).unwrap(), any, "{text} over {d}");
        }
    }
}
