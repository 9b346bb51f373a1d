use super::*;
use crate::formula::{Connective, Signature};
use crate::parse::parse;
use crate::semantics::{denotation, equivalent, joint_domain};
use alloc::format;
use alloc::vec;

fn f(s: &str) -> Formula {
    parse(s).unwrap()
}

fn props(prefix: &str, n: usize) -> Vec<Formula> {
    (1..=n).map(|i| Formula::prop(format!("{prefix}{i}"))).collect()
}

/// Atoms over distinct propositions with every arity profile in `1..=2`
/// (and `0` on the left of `dep`) that fits in four propositions.
fn atom_library() -> Vec<Atom> {
    let mut out = Vec::new();
    for n in 0..=2 {
        for m in 1..=2 {
            out.push(Atom::dep(props("a", n), props("b", m)).unwrap());
        }
    }
    for n in 1..=2 {
        for m in 1..=2 {
            out.push(Atom::perp(props("a", n), props("b", m)).unwrap());
            out.push(Atom::ups(props("a", n), props("b", m)).unwrap());
            for k in 1..=2 {
                if n + m + k <= 4 {
                    out.push(Atom::perp_cond(props("a", n), props("c", k), props("b", m)).unwrap());
                }
            }
        }
        out.push(Atom::inc(props("a", n), props("b", n)).unwrap());
        out.push(Atom::excl(props("a", n), props("b", n)).unwrap());
    }
    out
}

fn atom_domain(atom: &Atom) -> Domain {
    joint_domain(&[&Formula::Atom(atom.clone())], Some(0)).unwrap()
}

fn assert_same(atom: &Atom, g: &Formula, negated: bool, extra: usize) {
    let a = Formula::Atom(atom.clone());
    let d = atom_domain(atom).with_fresh(extra);
    let want = denotation(&a, &d).unwrap();
    let want = if negated { want.complement() } else { want };
    let got = denotation(g, &d).unwrap();
    assert_eq!(got.family(), want.family(), "{a} vs {g} over {d}");
}

#[test]
fn exponential_translations_match_atoms() {
    for atom in atom_library() {
        for mode in [TranslationMode::ExpLax, TranslationMode::ExpStrict] {
            let g = translate_exp(&atom, mode).unwrap();
            assert_same(&atom, &g, false, 0);
            let sig = if mode.is_strict() {
                Signature::strict_existential()
            } else {
                Signature::lax_existential()
            };
            assert!(!g.has_atoms() && check_signature_ok(&g, &sig), "{g}");
        }
    }
}

fn check_signature_ok(g: &Formula, sig: &Signature) -> bool {
    crate::formula::check_signature(g, sig)
}

#[test]
fn negation_formulas_match_complements() {
    for atom in atom_library() {
        let g = translate_polyneg(&atom, TranslationMode::PolyNegLax).unwrap();
        assert_same(&atom, &g, true, 0);
        if matches!(atom.kind(), AtomKind::Dependence | AtomKind::Exclusion) {
            let g = translate_polyneg(&atom, TranslationMode::PolyNegStrict).unwrap();
            assert_same(&atom, &g, true, 0);
            assert!(check_signature_ok(&g, &Signature::strict_existential()), "{g}");
        } else {
            assert!(translate_polyneg(&atom, TranslationMode::PolyNegStrict).is_err());
        }
    }
}

#[test]
fn full_translations_match_atoms() {
    let lax = Signature::new(&[Connective::Not, Connective::And, Connective::Or]);
    let strict = Signature::new(&[Connective::Not, Connective::And, Connective::StrictOr]);
    for atom in atom_library() {
        let g = translate_polyfull(&atom, TranslationMode::PolyFullLax).unwrap();
        assert_same(&atom, &g, false, 0);
        assert!(check_signature_ok(&g, &lax), "{g}");
        let g = translate_polyfull(&atom, TranslationMode::PolyFullStrict).unwrap();
        assert_same(&atom, &g, false, 0);
        assert!(check_signature_ok(&g, &strict), "{g}");
    }
}

#[test]
fn strict_translations_survive_fresh_propositions() {
    for atom in atom_library() {
        if atom_domain(&atom).len() > 2 {
            continue;
        }
        for mode in [TranslationMode::ExpStrict, TranslationMode::PolyFullStrict] {
            let g = translate(&atom, mode).unwrap();
            assert_same(&atom, &g, false, 2);
        }
        let g = translate(&atom, TranslationMode::PolyNegLax).unwrap();
        assert_same(&atom, &g, true, 2);
    }
}

#[test]
fn anonymity_forms_agree() {
    for (n, m) in [(1, 1), (1, 2), (2, 1)] {
        let atom = Atom::ups(props("a", n), props("b", m)).unwrap();
        let (lax, strict) = anonymity_split_forms(&atom).unwrap();
        assert_same(&atom, &lax, false, 0);
        assert_same(&atom, &strict, false, 0);
        for s in [false, true] {
            let g = translate_polyneg_anonymity(&atom, s).unwrap();
            assert_same(&atom, &g, true, 0);
        }
    }
}

#[test]
fn table_examples() {
    let p = vec![Formula::prop("p")];
    let q = vec![Formula::prop("q")];
    let inc = Atom::inc(p.clone(), q.clone()).unwrap();
    let parts = constant_tuples(1)
        .iter()
        .map(|c| Formula::bor(niff(&p, c).unwrap(), e(iff(&q, c).unwrap())))
        .collect();
    assert_eq!(translate_exp(&inc, TranslationMode::ExpLax).unwrap(), big_and(parts));

    let dep = Atom::dep(p.clone(), q.clone()).unwrap();
    let constant = Formula::bor(Formula::prop("q"), Formula::neg_prop("q"));
    let parts = constant_tuples(1)
        .iter()
        .map(|c| Formula::and(iff(&p, c).unwrap(), constant.clone()))
        .collect();
    let lax = big_or(parts);
    assert_eq!(translate_exp(&dep, TranslationMode::ExpLax).unwrap(), lax);
    assert_eq!(translate_exp(&dep, TranslationMode::ExpStrict).unwrap(), strictify(&lax));
    assert_eq!(
        lax.to_string(),
        "((((p /\\ bot) \\/ (-p /\\ top)) /\\ (q (v) -q)) \\/ (((p /\\ top) \\/ (-p /\\ bot)) /\\ (q (v) -q)))"
    );
}

#[test]
fn dependence_negation_shape() {
    let dep = Atom::dep(vec![Formula::prop("p")], vec![Formula::prop("q")]).unwrap();
    let g = translate_polyneg(&dep, TranslationMode::PolyNegLax).unwrap();
    let want = Formula::or(
        Formula::top(),
        Formula::and(
            Formula::bor(Formula::prop("p"), Formula::neg_prop("p")),
            Formula::and(e(Formula::prop("q")), e(Formula::neg_prop("q"))),
        ),
    );
    assert_eq!(g, want);
}

#[test]
fn theta_helpers_on_pivot_teams() {
    // α = a, β = b, γ = g: teams where `a` is constant on the g-part
    let alpha = props("a", 1);
    let beta = props("b", 1);
    let gamma = Formula::prop("g");
    let d = Domain::new(["a1", "b1", "g"]).unwrap();
    let eq = denotation(&theta_eq(&alpha, &beta, &gamma).unwrap(), &d).unwrap();
    let neq = denotation(&theta_neq(&alpha, &beta, &gamma).unwrap(), &d).unwrap();
    let (ia, ib, ig) = (0, 1, 2);
    for t in 0u32..1 << 8 {
        let members: Vec<u32> = crate::domain::bits(t).collect();
        let in_g: Vec<u32> = members.iter().copied().filter(|s| s >> ig & 1 == 1).collect();
        let out_g: Vec<u32> = members.iter().copied().filter(|s| s >> ig & 1 == 0).collect();
        let mut a_values: Vec<u32> = in_g.iter().map(|s| s >> ia & 1).collect();
        a_values.dedup();
        a_values.sort_unstable();
        a_values.dedup();
        if a_values.len() != 1 {
            continue;
        }
        let all_equal = in_g
            .iter()
            .all(|s| out_g.iter().all(|u| s >> ia & 1 == u >> ib & 1));
        let all_differ = in_g
            .iter()
            .all(|s| out_g.iter().all(|u| s >> ia & 1 != u >> ib & 1));
        assert_eq!(eq.contains_mask(t), all_equal, "team {t:#b}");
        assert_eq!(neq.contains_mask(t), all_differ, "team {t:#b}");
    }
}

#[test]
fn parity_formulas() {
    assert_eq!(parity_exp(&Domain::empty(), Parity::Even).unwrap(), Formula::bot());
    assert_eq!(parity_exp(&Domain::empty(), Parity::Odd).unwrap(), ne());
    let empty = denotation(&parity_poly(&Domain::empty()).unwrap(), &Domain::empty()).unwrap();
    assert_eq!(empty.masks().collect::<Vec<_>>(), vec![1]);
    for n in 0..=3 {
        let d = Domain::new((0..n).map(|i| format!("p{i}"))).unwrap();
        let poly = denotation(&parity_poly(&d).unwrap(), &d).unwrap();
        let even = denotation(&parity_exp(&d, Parity::Even).unwrap(), &d).unwrap();
        let odd = denotation(&parity_exp(&d, Parity::Odd).unwrap(), &d).unwrap();
        for t in 0..poly.family().universe() {
            let is_odd = t.count_ones() % 2 == 1;
            assert_eq!(poly.contains_mask(t), is_odd, "n={n} t={t:#b}");
            assert_eq!(odd.contains_mask(t), is_odd);
            assert_eq!(even.contains_mask(t), !is_odd);
        }
    }
    let pq = Domain::new(["p", "q"]).unwrap();
    assert_eq!(denotation(&parity_poly(&pq).unwrap(), &pq).unwrap().count(), 8);
    assert_eq!(
        denotation(&parity_exp(&pq, Parity::Even).unwrap(), &pq).unwrap().count(),
        8
    );
}

#[test]
fn relaxation() {
    assert_eq!(relax(&f("p \\./ q")), f("p \\/ q"));
    let plain = f("p /\\ (q \\/ ~r)");
    assert_eq!(relax(&plain), plain);
    let strict = f("NE \\./ NE");
    let lax = relax(&strict);
    assert_eq!(lax, f("NE \\/ NE"));
    let d = Domain::new(["p"]).unwrap();
    let team = crate::domain::Team::full(d).unwrap();
    assert!(!crate::semantics::eval(&strict, &team.with_members(0b01).unwrap()).unwrap());
    assert!(crate::semantics::eval(&lax, &team.with_members(0b01).unwrap()).unwrap());
}

#[test]
fn bor_normal_forms() {
    assert_eq!(bor_normal_form(&f("p (v) q")).unwrap(), vec![f("p"), f("q")]);
    assert_eq!(
        bor_normal_form(&f("(p (v) q) /\\ r")).unwrap(),
        vec![f("p /\\ r"), f("q /\\ r")]
    );
    assert_eq!(bor_normal_form(&f("p \\/ q")).unwrap(), vec![f("p \\/ q")]);
    assert!(bor_normal_form(&f("~(p \\/ q)")).is_err());
    for text in [
        "(p (v) ~bot) \\./ (q (v) -p)",
        "((p \\/ q) (v) dep(p;q)) /\\ (NE (v) -q)",
    ] {
        let g = f(text);
        let parts = bor_normal_form(&g).unwrap();
        assert!(parts.iter().all(|x| x.occ_bor() == 0));
        assert!(equivalent(&g, &big_bor(parts), Some(1)).unwrap());
    }
}

#[test]
fn constant_tuple_order() {
    let t = constant_tuples(2);
    let shown: Vec<String> = t
        .iter()
        .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    assert_eq!(shown, ["bot bot", "bot top", "top bot", "top top"]);
    assert_eq!(big_and(Vec::new()), Formula::top());
    assert_eq!(big_or(Vec::new()), Formula::bot());
    assert_eq!(big_bor(Vec::new()), Formula::not(Formula::top()));
}

#[test]
fn exponential_lengths_grow() {
    let mut last = 0;
    for n in 1..=5 {
        let atom = Atom::dep(props("a", n), props("b", 1)).unwrap();
        let len = translate_exp(&atom, TranslationMode::ExpLax).unwrap().length();
        if n > 1 {
            assert!(len * 10 >= last * 18, "n={n}: {last} -> {len}");
        }
        last = len;
    }
}

#[test]
fn mode_names_round_trip() {
    for mode in TranslationMode::ALL {
        assert_eq!(mode.name().parse::<TranslationMode>().unwrap(), mode);
    }
    assert!("EXP".parse::<TranslationMode>().is_err());
}
